//! Breadth-first dump of a labeled GM tree.
//!
//! ```text
//! cargo run --example gm_tree -- 1,2,0 1,2,3 4
//! ```
//! Arguments: k, sigma images, depth.

use markov_words::gmtree::{characteristic_of, gm_enumerate, GmParams};

fn main() -> markov_words::Result<()> {
    let mut args = std::env::args().skip(1);
    let k = GmParams::parse_k(args.next().as_deref().unwrap_or("1,2,0"))?;
    let sigma = args.next().as_deref().unwrap_or("1,2,3").parse()?;
    let depth = args.next().and_then(|d| d.parse().ok()).unwrap_or(3);
    let params = GmParams::new(k, sigma);

    println!("{params}, K = {}", params.big_k());
    for (f, v) in gm_enumerate(depth, &params)? {
        let [x1, x2, x3] = v.positioned();
        println!(
            "{:>7}  {v}  u = {}  (x1,x2,x3) = ({x1},{x2},{x3}) ok={}",
            f.mid.to_string(),
            characteristic_of(&v)?,
            v.solves(&params)
        );
    }
    Ok(())
}
