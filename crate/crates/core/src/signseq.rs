//! Run-length sign sequences read off a segment.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::gmtree::GmParams;
use crate::lattice::{crossing_events, Crossing, CrossingEvent, EdgeKind, SegmentSpec, Sign};
use crate::rational::ExtRational;

/// Maximal runs of equal signs; run `i` carries `leading` flipped `i` times.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunLengthSequence {
    pub runs: Vec<u64>,
    pub leading: Sign,
}

impl RunLengthSequence {
    pub fn from_signs<I: IntoIterator<Item = Sign>>(signs: I) -> Self {
        let mut runs = Vec::new();
        let mut leading = Sign::Minus;
        let mut current: Option<Sign> = None;
        for s in signs {
            match current {
                Some(c) if c == s => *runs.last_mut().unwrap() += 1,
                Some(_) => {
                    runs.push(1);
                    current = Some(s);
                }
                None => {
                    leading = s;
                    runs.push(1);
                    current = Some(s);
                }
            }
        }
        RunLengthSequence { runs, leading }
    }

    /// Expands back to the sign list.
    pub fn signs(&self) -> Vec<Sign> {
        let mut out = Vec::new();
        let mut s = self.leading;
        for &r in &self.runs {
            out.extend(std::iter::repeat(s).take(r as usize));
            s = s.flip();
        }
        out
    }

    pub fn total_weight(&self) -> u64 {
        self.runs.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.runs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.runs.is_empty()
    }
}

impl fmt::Display for RunLengthSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.runs.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Serialize for RunLengthSequence {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            leading: String,
            runs: &'a [u64],
        }
        Repr {
            leading: self.leading.symbol().to_string(),
            runs: &self.runs,
        }
        .serialize(serializer)
    }
}

fn kind_index(kind: EdgeKind) -> u8 {
    match kind {
        EdgeKind::Horizontal => 1,
        EdgeKind::Diagonal => 2,
        EdgeKind::Vertical => 3,
    }
}

/// How many copies of its sign an event contributes, and the sign.
pub fn event_signs(event: &CrossingEvent, params: &GmParams) -> (u64, Sign) {
    match event.crossing {
        Crossing::Triangle { sign } => (1, sign),
        Crossing::Edge { kind, side } => (params.k_sigma(kind_index(kind)), side.sign()),
    }
}

/// Signs of an event stream with edge multiplicities expanded.
pub fn expand_signs(events: &[CrossingEvent], params: &GmParams) -> Vec<Sign> {
    let mut out = Vec::new();
    for e in events {
        let (n, s) = event_signs(e, params);
        out.extend(std::iter::repeat(s).take(n as usize));
    }
    out
}

/// The GM sequence read from the unshifted segment.
pub fn gm_sequence(t: ExtRational, params: &GmParams) -> Result<RunLengthSequence> {
    let events = crossing_events(&SegmentSpec::new(t, false))?;
    Ok(RunLengthSequence::from_signs(expand_signs(&events, params)))
}

/// The strongly admissible sequence read from the shifted segment.
pub fn strongly_admissible(t: ExtRational, params: &GmParams) -> Result<RunLengthSequence> {
    let events = crossing_events(&SegmentSpec::new(t, true))?;
    Ok(RunLengthSequence::from_signs(expand_signs(&events, params)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gmtree::Sigma;
    use crate::rational::slopes_up_to;

    fn r(s: &str) -> ExtRational {
        s.parse().unwrap()
    }

    fn p120() -> GmParams {
        GmParams::new([1, 2, 0], Sigma::IDENTITY)
    }

    #[test]
    fn gm_sequence_examples() {
        let s = gm_sequence(r("2/5"), &p120()).unwrap();
        assert_eq!(s.runs, vec![4, 3, 1, 4, 5, 1, 3, 4]);
        assert_eq!(s.leading, Sign::Minus);
        assert_eq!(s.to_string(), "(4,3,1,4,5,1,3,4)");
        assert_eq!(gm_sequence(r("1/1"), &p120()).unwrap().runs, vec![3, 1]);
        assert_eq!(gm_sequence(r("1/1"), &GmParams::classical()).unwrap().runs, vec![1, 1]);
    }

    #[test]
    fn strongly_admissible_examples() {
        let s = strongly_admissible(r("2/5"), &p120()).unwrap();
        assert_eq!(s.runs, vec![5, 1, 3, 3, 1, 5, 4, 1, 3, 4]);
        assert_eq!(s.total_weight(), 30);
    }

    #[test]
    fn total_weight_examples() {
        assert_eq!(gm_sequence(r("2/5"), &p120()).unwrap().total_weight(), 25);
        assert_eq!(RunLengthSequence::from_signs([]).total_weight(), 0);
        assert!(RunLengthSequence::from_signs([]).is_empty());
    }

    #[test]
    fn round_trip_signs() {
        use Sign::*;
        let signs = vec![Plus, Plus, Minus, Plus, Minus, Minus, Minus];
        let s = RunLengthSequence::from_signs(signs.clone());
        assert_eq!(s.leading, Plus);
        assert_eq!(s.runs, vec![2, 1, 1, 3]);
        assert_eq!(s.signs(), signs);
    }

    #[test]
    fn leading_sign_is_minus() {
        for t in slopes_up_to(20) {
            if t.is_boundary() {
                continue;
            }
            assert_eq!(gm_sequence(t, &p120()).unwrap().leading, Sign::Minus, "{t}");
        }
    }

    #[test]
    fn classical_weights_count_triangles() {
        for t in slopes_up_to(20) {
            if t.is_boundary() {
                continue;
            }
            let triangles = crossing_events(&SegmentSpec::new(t, false))
                .unwrap()
                .iter()
                .filter(|e| !e.is_edge())
                .count() as u64;
            let w = gm_sequence(t, &GmParams::classical()).unwrap().total_weight();
            assert_eq!(w, triangles, "{t}");
            assert_eq!(w, 2 * (t.num() + t.den()) - 2, "{t}");
        }
    }

    #[test]
    fn json_shape() {
        let s = gm_sequence(r("2/5"), &p120()).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"leading":"-","runs":[4,3,1,4,5,1,3,4]}"#
        );
    }
}
