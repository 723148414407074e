//! Writes lettered and signed drawings of a segment.
//!
//! ```text
//! cargo run --example render_svg -- 2/5 /tmp
//! ```

use std::path::PathBuf;

use markov_words::gmtree::{GmParams, Sigma};
use markov_words::rational::ExtRational;
use markov_words::svg::{count_annotations, render, Annotation, SvgOptions};

fn main() -> markov_words::Result<()> {
    let mut args = std::env::args().skip(1);
    let t: ExtRational = args.next().as_deref().unwrap_or("2/5").parse()?;
    let dir = PathBuf::from(args.next().unwrap_or_else(|| ".".into()));
    let params = GmParams::new([1, 2, 0], Sigma::IDENTITY);

    for (tag, shifted, annotation) in [
        ("letters", false, Annotation::Letters),
        ("signs", false, Annotation::Signs),
        ("completed-signs", true, Annotation::Signs),
    ] {
        let svg = render(t, &params, SvgOptions { shifted, annotation })?;
        let path = dir.join(format!("segment-{}-{}-{tag}.svg", t.num(), t.den()));
        std::fs::write(&path, &svg).expect("output directory is writable");
        println!("{} ({} annotations)", path.display(), count_annotations(&svg));
    }
    Ok(())
}
