//! Cohn words three ways: lower lattice path, word tree, and substitution from omega.
//!
//! ```text
//! cargo run --example cohn_words -- 12
//! ```
//! The argument bounds num + den (default 9).

use markov_words::cohnwords::{christoffel, cohn_from_omega, cohn_tree};
use markov_words::rational::{slopes_up_to, ExtRational};
use markov_words::words::omega_geometric;

fn main() -> markov_words::Result<()> {
    let max = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(9);
    for t in slopes_up_to(max) {
        let c = christoffel(t);
        if t.is_boundary() || t == ExtRational::ONE {
            println!("{:>6}  {c}", t.to_string());
            continue;
        }
        let same = c == cohn_tree(t)? && c == cohn_from_omega(&omega_geometric(t), t)?;
        println!(
            "{:>6}  {:<16} palindromic interior: {:<5} constructions agree: {same}",
            t.to_string(),
            c.to_string(),
            c.interior_is_palindrome()
        );
    }
    Ok(())
}
