//! The generalized Cohn matrix from four independent constructions.
//!
//! ```text
//! cargo run --example cohn_matrices -- 3/7 2,0,1 2,3,1
//! ```

use markov_words::gmtree::GmParams;
use markov_words::matrix2::{
    evaluate, gc_explicit, gc_from_completed, gc_from_sequence, gc_initial, gc_recursive, generators, monodromy,
};
use markov_words::rational::ExtRational;
use markov_words::words::FreeWord;

fn main() -> markov_words::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: ExtRational = args.next().as_deref().unwrap_or("2/5").parse()?;
    let k = GmParams::parse_k(args.next().as_deref().unwrap_or("1,2,0"))?;
    let sigma = args.next().as_deref().unwrap_or("1,2,3").parse()?;
    let p = GmParams::new(k, sigma);

    let (x, y, z) = generators(&p);
    println!("X = {x}\nY = {y}\nZ = {z}");
    println!("XYZ = {}", evaluate(&FreeWord::xyz(), &p));
    let (c0, c1, cinf) = gc_initial(&p);
    println!("C_0/1 = {c0}, C_1/1 = {c1}, C_1/0 = {cinf}");

    println!("M_{t} = {}", monodromy(t, &p)?);
    for (name, c) in [
        ("recursion", gc_recursive(t, &p)?),
        ("entry formula", gc_explicit(t, &p)?),
        ("continued fraction", gc_from_sequence(t, &p)?),
        ("completed word", gc_from_completed(t, &p)?),
    ] {
        println!("C_{t} by {name:<20} {c}");
    }
    Ok(())
}
