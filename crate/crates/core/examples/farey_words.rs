//! Farey paths, the word tree and symmetric decompositions.
//!
//! ```text
//! cargo run --example farey_words -- 3
//! ```
//! The argument is the tree depth (default 3).

use markov_words::rational::farey_enumerate;
use markov_words::words::{omega_geometric, omega_tree, symmetric_decompose};

fn main() -> markov_words::Result<()> {
    let depth = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    for f in farey_enumerate(depth)? {
        let w = omega_geometric(f.mid);
        assert_eq!(w, omega_tree(f.mid)?);
        let (u, a) = symmetric_decompose(&w)?;
        let u = if u.is_empty() { "1".to_string() } else { u.to_string() };
        println!("{:<22} {:<28} u = {u:<14} a = {a}", f.to_string(), w.to_string());
    }
    Ok(())
}
