//! Fence posets, their order ideals, and continued fractions.
//!
//! ```text
//! cargo run --example fence_ideals -- 2,2
//! ```

use markov_words::fenceposet::{cf_numden, count_ideals, enumerate_ideals, fence_from_sequence};

fn main() -> markov_words::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "4,3,1,4,5,1,3,4".into());
    let seq: Vec<u64> = arg
        .split(',')
        .map(|s| s.trim().parse().expect("comma-separated positive integers"))
        .collect();

    let poset = fence_from_sequence(&seq)?;
    let covers: Vec<String> = poset.covers().iter().map(|(a, b)| format!("{a}<{b}")).collect();
    println!("fence of {seq:?}: {} elements", poset.size);
    println!("covers: {}", covers.join(" "));

    let n = count_ideals(&poset);
    let (num, den) = cf_numden(&seq)?;
    println!("ideals: {n}   continued fraction: {num}/{den}");

    // brute force only for small fences
    if let Ok(ideals) = enumerate_ideals(&poset) {
        if ideals.len() <= 32 {
            for ideal in &ideals {
                println!("  {ideal:?}");
            }
        }
        println!("brute force count: {}", ideals.len());
    }
    Ok(())
}
