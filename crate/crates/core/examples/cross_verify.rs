//! Runs every cross-identity over all slopes up to a size bound.
//!
//! ```text
//! cargo run --release --example cross_verify -- 12 1,1,2 3,1,2
//! ```

use markov_words::gmtree::GmParams;
use markov_words::rational::slopes_up_to;
use markov_words::verify::verify_slope;

fn main() -> markov_words::Result<()> {
    let mut args = std::env::args().skip(1);
    let max = args.next().and_then(|s| s.parse().ok()).unwrap_or(10);
    let k = GmParams::parse_k(args.next().as_deref().unwrap_or("1,2,0"))?;
    let sigma = args.next().as_deref().unwrap_or("1,2,3").parse()?;
    let p = GmParams::new(k, sigma);

    let (mut ok, mut bad, mut conj) = (0, 0, 0);
    for t in slopes_up_to(max).into_iter().filter(|t| !t.is_boundary()) {
        let report = verify_slope(t, &p)?;
        if let Some(c) = report.first_failure() {
            bad += 1;
            println!("FAIL {t}: {} {:?}", c.name, c.detail);
        } else {
            ok += 1;
        }
        conj += report.denominator_conjecture.passed as usize;
    }
    println!("{p}: {ok} slopes pass, {bad} fail; denominator reading holds on {conj}");
    Ok(())
}
