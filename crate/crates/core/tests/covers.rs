use altorder::mdiv::build_mdiv;
use altorder::noncrossing::onc_interval;
use altorder::prefix::kreweras;
use altorder::verify::{COVER_EXAMPLES, COVER_EXAMPLE_AS_PRINTED};
use altorder::{GeneratorContext, Permutation};
use proptest::prelude::*;

fn p12(s: &str) -> Permutation {
    Permutation::parse(s, 12).unwrap()
}

#[test]
fn worked_covers_hold() {
    let ctx = GeneratorContext::three_cycles(12).unwrap();
    for (lo, hi) in COVER_EXAMPLES {
        let (x, y) = (p12(lo), p12(hi));
        assert!(ctx.is_below(&x, &y).unwrap(), "{x} <= {y}");
        assert_eq!(ctx.length(&y).unwrap(), ctx.length(&x).unwrap() + 1);
        assert!(ctx.lower_covers(&y).unwrap().iter().any(|(z, _)| *z == x));
    }
}

#[test]
fn printed_pair_is_incomparable() {
    let ctx = GeneratorContext::three_cycles(12).unwrap();
    let (a, b) = (p12(COVER_EXAMPLE_AS_PRINTED.0), p12(COVER_EXAMPLE_AS_PRINTED.1));
    assert!(!ctx.is_below(&a, &b).unwrap());
    assert!(!ctx.is_below(&b, &a).unwrap());
    let quotient = a.inverse().compose(&b).unwrap();
    assert_eq!(quotient, p12("(2 11)(6 7)"));
}

#[test]
fn onc_kreweras_is_involutive_up_to_conjugation() {
    let iv = onc_interval(7).unwrap();
    let c = iv.top().clone();
    for x in iv.elements() {
        let k = kreweras(&c, x).unwrap();
        assert!(iv.contains(&k));
        assert_eq!(kreweras(&c, &k).unwrap(), x.conjugate(&c).unwrap());
    }
}

#[test]
fn small_mdiv_sizes() {
    assert_eq!(build_mdiv(1, 3, 1000).unwrap().len(), 4);
    assert_eq!(build_mdiv(2, 1, 1000).unwrap().len(), 7);
    assert_eq!(build_mdiv(2, 2, 1000).unwrap().len(), 18);
}

fn three_cycle_word(n: usize) -> impl Strategy<Value = Vec<Permutation>> {
    let gen = (0..n, 0..n, 0..n)
        .prop_filter("distinct", |(a, b, c)| a != b && b != c && a != c)
        .prop_map(move |(a, b, c)| Permutation::from_cycles(n, &[vec![a + 1, b + 1, c + 1]]).unwrap());
    prop::collection::vec(gen, 0..6)
}

proptest! {
    #[test]
    fn prefixes_of_any_word_lie_below_the_product(word in three_cycle_word(7)) {
        let ctx = GeneratorContext::three_cycles(7).unwrap();
        let mut partial = vec![Permutation::identity(7)];
        for g in &word {
            let next = partial.last().unwrap().compose(g).unwrap();
            partial.push(next);
        }
        let y = partial.last().unwrap().clone();
        let ly = ctx.length(&y).unwrap();
        for x in &partial {
            let lx = ctx.length(x).unwrap();
            let lq = ctx.length(&x.inverse().compose(&y).unwrap()).unwrap();
            prop_assert_eq!(ctx.is_below(x, &y).unwrap(), ly == lx + lq);
            prop_assert!(lx + lq >= ly);
        }
    }
}
