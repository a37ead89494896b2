use std::collections::BTreeSet;

use antypes::rational::{frac, int};
use antypes::tree::*;
use antypes::{Error, Rational, Tree};
use proptest::prelude::*;

/// Every full bracketing of `n` symbols as a string, built without the
/// tree types.
fn bracketings(n: usize) -> BTreeSet<String> {
    if n == 1 {
        return ["x".to_string()].into();
    }
    let mut out = BTreeSet::new();
    for left in 1..n {
        for a in &bracketings(left) {
            for b in &bracketings(n - left) {
                out.insert(format!("[{a}{b}]"));
            }
        }
    }
    out
}

#[test]
fn binary_counts_match_bracketings() {
    for n in 2..=10 {
        let trees = binary_unpainted(n).unwrap();
        assert_eq!(trees.len(), bracketings(n).len(), "n = {n}");
        assert!(trees.iter().all(|t| t.internal_edges() == n - 2));
    }
}

#[test]
fn enumerations_are_sorted_and_round_trip() {
    let mut all: Vec<Tree> = Vec::new();
    for n in 2..=6 {
        all.extend(planar_trees(n).unwrap());
    }
    for n in 1..=5 {
        all.extend(binary_painted_shapes(n).unwrap());
    }
    for t in &all {
        assert_eq!(&t.encode().parse::<Tree>().unwrap(), t);
        assert!(validate(t).is_ok(), "{t}");
    }
    let p5 = planar_trees(5).unwrap();
    assert!(p5.windows(2).all(|w| w[0].encode() < w[1].encode()));
    assert!(binary_unpainted(1).is_err());
    assert!(binary_painted_shapes(0).is_err());
}

fn samples() -> Vec<Rational> {
    vec![int(0), frac(1, 2), int(1)]
}

#[test]
fn reduce_is_idempotent_exhaustively() {
    for n in 3..=5 {
        for shape in planar_trees(n).unwrap() {
            for t in metric_points(&shape, &samples()) {
                let once = reduce(&t).unwrap().into_tree();
                let twice = reduce(&once).unwrap().into_tree();
                assert_eq!(once, twice, "{t}");
                assert!(once.lengths().into_iter().flatten().all(|l| *l != int(0)));
            }
        }
    }
    for n in 1..=4 {
        for shape in binary_painted_shapes(n).unwrap() {
            for t in metric_points(&shape, &samples()) {
                match reduce(&t) {
                    Ok(once) => {
                        let once = once.into_tree();
                        assert_eq!(reduce(&once).unwrap().into_tree(), once, "{t}");
                    }
                    // collapsing a painted edge onto a type III vertex
                    Err(Error::PaintedMerge(_)) => {}
                    Err(e) => panic!("{t}: {e}"),
                }
            }
        }
    }
}

#[test]
fn worked_reductions() {
    let r = reduce(&"((* *)@0 *)".parse().unwrap()).unwrap();
    assert_eq!(r.encode(), "(* * *)");
    let comb: Tree = "(((* *)@0 *)@1/2 *)".parse().unwrap();
    assert_eq!(reduce(&comb).unwrap().encode(), "((* * *)@1/2 *)");
    let one: Tree = "((* * *)@1/2 *)".parse().unwrap();
    assert!(equal_as_points(&comb, &one).unwrap());
    let l: Tree = "((* *)@1/2 *)".parse().unwrap();
    let r: Tree = "(* (* *)@1/2)".parse().unwrap();
    assert!(!equal_as_points(&l, &r).unwrap());
    assert!(equal_as_points(&l, &"(* *)".parse().unwrap()).is_err());
}

fn point_strategy(n: usize) -> impl Strategy<Value = Tree> {
    let shapes = binary_unpainted(n).unwrap();
    let choices = vec![int(0), frac(1, 3), frac(1, 2), int(1)];
    (
        prop::sample::select(shapes),
        prop::collection::vec(prop::sample::select(choices), n - 2),
    )
        .prop_map(|(s, ls)| s.with_lengths(ls).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn equal_as_points_is_an_equivalence(a in point_strategy(5), b in point_strategy(5), c in point_strategy(5)) {
        prop_assert!(equal_as_points(&a, &a).unwrap());
        let ab = equal_as_points(&a, &b).unwrap();
        prop_assert_eq!(ab, equal_as_points(&b, &a).unwrap());
        if ab && equal_as_points(&b, &c).unwrap() {
            prop_assert!(equal_as_points(&a, &c).unwrap());
        }
    }

    #[test]
    fn metric_encoding_round_trips(t in point_strategy(6)) {
        prop_assert_eq!(t.encode().parse::<Tree>().unwrap(), t);
    }

    #[test]
    fn reduce_is_idempotent(t in point_strategy(7)) {
        let once = reduce(&t).unwrap().into_tree();
        prop_assert_eq!(reduce(&once).unwrap().into_tree(), once);
    }
}
