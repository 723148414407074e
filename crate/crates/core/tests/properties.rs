use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use proptest::prelude::*;

use markov_words::cohnwords::{christoffel, cohn_from_omega, cohn_tree, CohnLetter, CohnWord};
use markov_words::fenceposet::{cf_numden, count_ideals, enumerate_ideal_masks, fence_from_sequence, n_of};
use markov_words::gmtree::{gm_vertex, GmParams, Sigma};
use markov_words::lattice::{crossing_events, Crossing, SegmentSpec, Sign};
use markov_words::matrix2::{evaluate, fs_product, gc_explicit, gc_recursive, monodromy, Mat2};
use markov_words::rational::{farey_path, farey_triple, ExtRational, FareyPath, Move};
use markov_words::signseq::{gm_sequence, RunLengthSequence};
use markov_words::words::{omega_geometric, omega_tree, FreeWord, Generator, Letter};

fn params() -> impl Strategy<Value = GmParams> {
    (prop::array::uniform3(0u64..=3), 0usize..6).prop_map(|(k, s)| GmParams::new(k, Sigma::all()[s]))
}

fn slope(max: u64) -> impl Strategy<Value = ExtRational> {
    (1..=max, 1..=max)
        .prop_filter("reduced", |(p, q)| p.gcd(q) == 1)
        .prop_map(|(p, q)| ExtRational::new(p, q).unwrap())
}

fn moves(max: usize) -> impl Strategy<Value = Vec<Move>> {
    prop::collection::vec(prop_oneof![Just(Move::Left), Just(Move::Right)], 0..=max)
}

fn word(max: usize) -> impl Strategy<Value = FreeWord> {
    let letter = (0..3usize, any::<bool>()).prop_map(|(g, inverted)| Letter {
        generator: [Generator::X, Generator::Y, Generator::Z][g],
        inverted,
    });
    prop::collection::vec(letter, 0..=max).prop_map(FreeWord::from_letters)
}

fn composition(max_total: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=6, 0..=8).prop_filter("bounded weight", move |s| s.iter().sum::<u64>() <= max_total)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn farey_path_replays_to_its_slope(t in slope(200)) {
        let path = farey_path(t).unwrap();
        let f = path.replay();
        prop_assert_eq!(f.mid, t);
        prop_assert_eq!(f.determinant(), 1);
        prop_assert!(f.left < f.mid && f.mid < f.right);
        prop_assert_eq!(farey_triple(t).unwrap(), f);
    }

    #[test]
    fn rational_text_round_trip(t in slope(10_000)) {
        prop_assert_eq!(t.to_string().parse::<ExtRational>().unwrap(), t);
    }

    #[test]
    fn word_text_round_trip(w in word(30)) {
        let back: FreeWord = w.to_string().parse().unwrap();
        prop_assert_eq!(back.letters().to_vec(), w.letters().to_vec());
    }

    #[test]
    fn labeled_vertices_solve(p in params(), mv in moves(10)) {
        let t = FareyPath { moves: mv }.replay().mid;
        let v = gm_vertex(t, &p).unwrap();
        prop_assert!(v.solves(&p), "{} {}", p, v);
        prop_assert!(v.pairwise_coprime(), "{} {}", p, v);
    }

    #[test]
    fn ideal_count_of_gm_sequence_is_gm_number(p in params(), t in slope(9)) {
        let s = gm_sequence(t, &p).unwrap();
        let m = gm_vertex(t, &p).unwrap().mid().m.clone();
        prop_assert_eq!(n_of(&s.runs).unwrap(), m);
    }

    #[test]
    fn word_evaluations_are_unimodular(p in params(), w in word(20)) {
        prop_assert!(evaluate(&w, &p).det().is_one());
        let inv = evaluate(&w.inverse(), &p);
        prop_assert_eq!(&evaluate(&w, &p) * &inv, Mat2::identity());
    }

    #[test]
    fn xyz_product_form(p in params()) {
        let big_k = p.big_k() as i64;
        prop_assert_eq!(evaluate(&FreeWord::xyz(), &p), Mat2::new(-1, big_k, 0, -1));
    }

    #[test]
    fn cohn_matrices_agree(p in params(), t in slope(9)) {
        let rec = gc_recursive(t, &p).unwrap();
        prop_assert_eq!(&rec, &gc_explicit(t, &p).unwrap());
        prop_assert!(rec.det().is_one());
        monodromy(t, &p).unwrap();
    }

    #[test]
    fn ideal_oracles_agree(seq in composition(18)) {
        let poset = fence_from_sequence(&seq).unwrap();
        let dp = count_ideals(&poset);
        prop_assert_eq!(&dp, &BigUint::from(enumerate_ideal_masks(&poset).unwrap().len()));
        let (num, den) = cf_numden(&seq).unwrap();
        prop_assert_eq!(&dp, &num);
        if !seq.is_empty() {
            prop_assert_eq!(den, n_of(&seq[1..]).unwrap());
        }
        let s = RunLengthSequence { runs: seq.clone(), leading: Sign::Minus };
        if !seq.is_empty() {
            prop_assert_eq!(fs_product(&s).e11, num.into());
        }
    }

    #[test]
    fn run_lengths_round_trip(bits in prop::collection::vec(any::<bool>(), 0..40)) {
        let signs: Vec<Sign> = bits.iter().map(|&b| if b { Sign::Plus } else { Sign::Minus }).collect();
        let s = RunLengthSequence::from_signs(signs.clone());
        prop_assert_eq!(s.signs(), signs);
        prop_assert_eq!(s.total_weight() as usize, bits.len());
        prop_assert!(s.runs.iter().all(|&r| r >= 1));
    }

    #[test]
    fn event_stream_shape(t in slope(40)) {
        let (p, q) = (t.num(), t.den());
        for (shifted, edges, triangles) in [(false, 2 * (p + q) - 3, 2 * (p + q) - 2), (true, 2 * (p + q), 2 * (p + q))] {
            let ev = crossing_events(&SegmentSpec::new(t, shifted)).unwrap();
            let kinds: Vec<_> = ev.iter().filter_map(|e| match e.crossing {
                Crossing::Edge { kind, .. } => Some(kind),
                Crossing::Triangle { .. } => None,
            }).collect();
            prop_assert_eq!(kinds.len() as u64, edges);
            prop_assert_eq!(ev.len() as u64 - edges, triangles);
            prop_assert!(kinds.windows(2).all(|w| w[0] != w[1]));
        }
    }

    #[test]
    fn geometric_words_match_tree(t in slope(40)) {
        let w = omega_geometric(t);
        prop_assert!(w.is_reduced());
        prop_assert_eq!(w, omega_tree(t).unwrap());
    }

    #[test]
    fn cohn_word_constructions_agree(t in slope(60)) {
        prop_assume!(t != ExtRational::ONE);
        let c = christoffel(t);
        prop_assert_eq!(&c, &cohn_tree(t).unwrap());
        prop_assert_eq!(&c, &cohn_from_omega(&omega_geometric(t), t).unwrap());
        let (p, q) = (t.num() as usize, t.den() as usize);
        if p < q {
            prop_assert_eq!((c.count(CohnLetter::P), c.count(CohnLetter::Q)), (q - p, p));
        } else {
            prop_assert_eq!((c.count(CohnLetter::Q), c.count(CohnLetter::R)), (q, p - q));
        }
        prop_assert_eq!(c.to_string().parse::<CohnWord>().unwrap(), c);
    }
}
