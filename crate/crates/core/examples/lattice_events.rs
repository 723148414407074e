//! Edge and triangle crossings of a segment, as JSON.
//!
//! ```text
//! cargo run --example lattice_events -- 2/5 shifted
//! ```

use markov_words::lattice::{crossing_events, events_to_json, SegmentSpec};
use markov_words::rational::ExtRational;

fn main() -> markov_words::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: ExtRational = args.next().as_deref().unwrap_or("2/5").parse()?;
    let shifted = args.next().is_some_and(|a| a == "shifted");

    let events = crossing_events(&SegmentSpec::new(t, shifted))?;
    let edges = events.iter().filter(|e| e.is_edge()).count();
    eprintln!("{t}: {edges} edges, {} triangles", events.len() - edges);
    println!("{}", serde_json::to_string_pretty(&events_to_json(&events)).unwrap());
    Ok(())
}
