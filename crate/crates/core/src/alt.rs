//! Structure specific to the alternating group under 3-cycles: how a single
//! 3-cycle changes the length, the product decomposition of lower intervals,
//! and the rank generating function.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::perm::{enumerate_alternating, CycleGenerator, Permutation};
use crate::poly::{factorial, rat_frac, ExactPolynomial};
use crate::prefix::GeneratorContext;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
    Level,
}

/// How the entries of the 3-cycle are distributed over the cycles of `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverCaseTag {
    DisjointCycles,
    TwoCycles,
    OneCycle,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverCase {
    pub direction: Direction,
    pub tag: CoverCaseTag,
    /// Distances `r(t, t')` inside shared cycles, in the order used by the rule.
    pub r_values: Vec<usize>,
}

/// Smallest `r >= 1` with `x^r(t) = t'`, or `None` if `t'` is not in the cycle of `t`.
pub fn r_distance(x: &Permutation, t: usize, t2: usize) -> Option<usize> {
    let mut p = x.image(t);
    let mut r = 1;
    loop {
        if p == t2 {
            return Some(r);
        }
        if p == t {
            return None;
        }
        p = x.image(p);
        r += 1;
    }
}

fn cycle_len(x: &Permutation, t: usize) -> usize {
    let mut p = x.image(t);
    let mut len = 1;
    while p != t {
        p = x.image(p);
        len += 1;
    }
    len
}

fn same_cycle(x: &Permutation, t: usize, t2: usize) -> bool {
    t == t2 || r_distance(x, t, t2).is_some()
}

/// The case rule for `l_3(xa) - l_3(x)`, without computing any length.
pub fn classify_by_cases(x: &Permutation, a: &CycleGenerator) -> CoverCase {
    let e = a.entries();
    let (i, j, k) = (e[0], e[1], e[2]);
    let odd = |t: usize| cycle_len(x, t) % 2 == 1;
    let sij = same_cycle(x, i, j);
    let sjk = same_cycle(x, j, k);
    let ski = same_cycle(x, k, i);
    match (sij, sjk, ski) {
        (false, false, false) => {
            let odds = [i, j, k].iter().filter(|&&t| odd(t)).count();
            let direction = if odds >= 2 { Direction::Up } else { Direction::Level };
            CoverCase { direction, tag: CoverCaseTag::DisjointCycles, r_values: Vec::new() }
        }
        (true, true, true) => {
            // i, k, j in this cyclic order means k comes before j going from i
            let rik = r_distance(x, i, k).expect("same cycle");
            let rij = r_distance(x, i, j).expect("same cycle");
            if rik < rij {
                let rs = vec![rik, r_distance(x, k, j).unwrap(), r_distance(x, j, i).unwrap()];
                let odd_rs = rs.iter().filter(|&&r| r % 2 == 1).count();
                let direction = if odd_rs >= 2 { Direction::Down } else { Direction::Level };
                CoverCase { direction, tag: CoverCaseTag::OneCycle, r_values: rs }
            } else {
                CoverCase { direction: Direction::Level, tag: CoverCaseTag::OneCycle, r_values: Vec::new() }
            }
        }
        _ => {
            // rotate so that the shared pair comes first
            let (u, v, w) = if sij {
                (i, j, k)
            } else if sjk {
                (j, k, i)
            } else {
                (k, i, j)
            };
            let r = r_distance(x, u, v).expect("same cycle");
            let (ou, ow) = (odd(u), odd(w));
            let direction = if r.is_multiple_of(2) {
                Direction::Level
            } else if ou && ow {
                Direction::Up
            } else if !ou && !ow {
                Direction::Down
            } else {
                Direction::Level
            };
            CoverCase { direction, tag: CoverCaseTag::TwoCycles, r_values: vec![r] }
        }
    }
}

/// Classifies right multiplication of an even `x` by a 3-cycle `a`, computing
/// the direction both from lengths and from the case rule.
pub fn classify_multiplication(x: &Permutation, a: &CycleGenerator) -> Result<CoverCase> {
    if a.len() != 3 {
        return Err(Error::ParameterOutOfRange(format!("{a} is not a 3-cycle")));
    }
    let n = x.degree();
    if a.max_entry() > n {
        return Err(Error::DegreeMismatch { left: n, right: a.max_entry() });
    }
    if !x.is_even() {
        return Err(Error::NotInGeneratedGroup(x.to_string()));
    }
    let xa = x.compose(&a.to_permutation(n)?)?;
    let before = (n - x.ocyc()) / 2;
    let after = (n - xa.ocyc()) / 2;
    let by_length = match after as i64 - before as i64 {
        1 => Direction::Up,
        -1 => Direction::Down,
        0 => Direction::Level,
        d => unreachable!("a 3-cycle changes the length by {d}"),
    };
    let case = classify_by_cases(x, a);
    assert_eq!(case.direction, by_length, "case rule disagrees with lengths for {x} * {a}");
    Ok(case)
}

/// The factors of `[e, x]`: one interval per odd nontrivial cycle and one for
/// the product of the even cycles.
#[derive(Debug, Clone)]
pub struct IntervalDecomposition {
    pub odd_factors: Vec<Permutation>,
    pub even_part: Permutation,
    pub interval_size: usize,
    pub factor_sizes: Vec<usize>,
    /// The product map is a rank-preserving bijection onto `[e, x]`.
    pub certified: bool,
}

pub fn decompose_interval(x: &Permutation, cap: usize) -> Result<IntervalDecomposition> {
    if !x.is_even() {
        return Err(Error::NotInGeneratedGroup(x.to_string()));
    }
    let n = x.degree();
    let mut odd_factors = Vec::new();
    let mut even_cycles = Vec::new();
    for c in x.cycles() {
        if c.len() % 2 == 1 {
            odd_factors.push(Permutation::from_cycles(n, &[c])?);
        } else {
            even_cycles.push(c);
        }
    }
    let even_part = Permutation::from_cycles(n, &even_cycles)?;
    let e = Permutation::identity(n);
    if n < 3 {
        return Ok(IntervalDecomposition {
            odd_factors,
            even_part,
            interval_size: 1,
            factor_sizes: Vec::new(),
            certified: true,
        });
    }
    let ctx = GeneratorContext::three_cycles(n)?;
    let whole = ctx.interval_capped(&e, x, cap)?;
    let mut factors = Vec::new();
    for f in odd_factors.iter().chain(std::iter::once(&even_part)) {
        factors.push(ctx.interval_capped(&e, f, cap)?);
    }
    let factor_sizes: Vec<usize> = factors.iter().map(|f| f.len()).collect();
    let product: usize = factor_sizes.iter().product();
    let mut certified = product == whole.len();
    if certified {
        // every tuple maps into [e, x] with additive rank, and no two collide
        let mut seen = HashSet::new();
        let mut partial: Vec<(Permutation, usize)> = vec![(e.clone(), 0)];
        for f in &factors {
            let mut next = Vec::with_capacity(partial.len() * f.len());
            for (p, r) in &partial {
                for (y, ry) in f.elements().iter().zip(f.ranks()) {
                    next.push((p * y, r + ry));
                }
            }
            partial = next;
        }
        for (p, r) in partial {
            match whole.index_of(&p) {
                Some(idx) if whole.ranks()[idx] == r && seen.insert(idx) => {}
                _ => {
                    certified = false;
                    break;
                }
            }
        }
    }
    Ok(IntervalDecomposition { odd_factors, even_part, interval_size: whole.len(), factor_sizes, certified })
}

/// `(F_n(q), l_3 distribution)` by enumeration of the alternating group, where
/// `F_n(q) = sum q^{ocyc(x)}`.
pub fn rank_generating_polynomial(n: usize) -> Result<(ExactPolynomial, ExactPolynomial)> {
    if n == 0 {
        return Ok((ExactPolynomial::one(), ExactPolynomial::one()));
    }
    let mut by_ocyc = vec![0i64; n + 1];
    let mut by_len = vec![0i64; n / 2 + 1];
    for x in enumerate_alternating(n)? {
        let o = x.ocyc();
        by_ocyc[o] += 1;
        by_len[(n - o) / 2] += 1;
    }
    Ok((ExactPolynomial::from_integers(&by_ocyc), ExactPolynomial::from_integers(&by_len)))
}

/// The length distribution read off `F_n`: the coefficient of `q^j` is the
/// coefficient of `q^{n-2j}` in `F_n`.
pub fn length_distribution_from_ocyc(f: &ExactPolynomial, n: usize) -> ExactPolynomial {
    ExactPolynomial::new((0..=n / 2).map(|j| f.coefficient(n - 2 * j)).collect())
}

/// A power series in `t` truncated after `t^order`, with polynomial coefficients in `q`.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesFtq {
    pub order: usize,
    /// Ordinary coefficients of `t^N`.
    pub coefficients: Vec<ExactPolynomial>,
}

impl SeriesFtq {
    /// `N!` times the coefficient of `t^N`.
    pub fn egf_coefficient(&self, n: usize) -> ExactPolynomial {
        self.coefficients[n].scale(&BigRational::from_integer(BigInt::from(factorial(n as u64))))
    }

    pub fn specialize(&self, q: i64) -> Vec<BigRational> {
        self.coefficients.iter().map(|c| c.eval_int(q)).collect()
    }
}

// ordinary coefficients of (1+t)^alpha (1-t)^beta for linear alpha, beta in q
fn binomial_product(alpha: &ExactPolynomial, beta: &ExactPolynomial, order: usize) -> Vec<ExactPolynomial> {
    let plus: Vec<ExactPolynomial> = (0..=order as u64).map(|j| alpha.binomial(j)).collect();
    let minus: Vec<ExactPolynomial> = (0..=order as u64)
        .map(|j| {
            let c = beta.binomial(j);
            if j % 2 == 1 {
                -&c
            } else {
                c
            }
        })
        .collect();
    (0..=order)
        .map(|n| (0..=n).fold(ExactPolynomial::zero(), |acc, j| &acc + &(&plus[j] * &minus[n - j])))
        .collect()
}

/// Expansion of
/// `F(t, q) = [(1+t)^{(q-1)/2} (1-t)^{-(q+1)/2} + (1+t)^{(q+1)/2} (1-t)^{-(q-1)/2}] / 2`.
pub fn series_closed_form(order: usize) -> SeriesFtq {
    let half = rat_frac(1, 2);
    let q_minus = ExactPolynomial::linear(half.clone(), -half.clone());
    let q_plus = ExactPolynomial::linear(half.clone(), half.clone());
    let first = binomial_product(&q_minus, &-&q_plus, order);
    let second = binomial_product(&q_plus, &-&q_minus, order);
    let coefficients = first
        .iter()
        .zip(&second)
        .map(|(a, b)| (a + b).scale(&half))
        .collect();
    SeriesFtq { order, coefficients }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{enumerate_generators, GeneratorFamily};
    use crate::poly::rat;
    use num_traits::One;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn r_distance_counts_steps() {
        let x = p("(1 2 3 4 5)", 5);
        assert_eq!(r_distance(&x, 1, 2), Some(1));
        assert_eq!(r_distance(&x, 2, 1), Some(4));
        assert_eq!(r_distance(&x, 1, 1), Some(5));
        assert_eq!(r_distance(&p("(1 2)(3 4)", 4), 1, 3), None);
    }

    #[test]
    fn identity_always_goes_up() {
        let e = Permutation::identity(5);
        for a in enumerate_generators(5, GeneratorFamily::ThreeCycles).unwrap() {
            let c = classify_multiplication(&e, &a).unwrap();
            assert_eq!(c.direction, Direction::Up);
            assert_eq!(c.tag, CoverCaseTag::DisjointCycles);
        }
    }

    #[test]
    fn long_cycle_has_downward_one_cycle_cases() {
        let c = Permutation::long_cycle(7);
        let downs: Vec<CoverCase> = enumerate_generators(7, GeneratorFamily::ThreeCycles)
            .unwrap()
            .iter()
            .map(|a| classify_multiplication(&c, a).unwrap())
            .filter(|case| case.direction == Direction::Down)
            .collect();
        // one downward multiplication per lower cover of the long cycle
        assert_eq!(downs.len(), 14);
        assert!(downs.iter().all(|d| d.tag == CoverCaseTag::OneCycle));
    }

    #[test]
    fn exhaustive_agreement_degree_five() {
        let gens = enumerate_generators(5, GeneratorFamily::ThreeCycles).unwrap();
        for x in enumerate_alternating(5).unwrap() {
            for a in &gens {
                classify_multiplication(&x, a).unwrap();
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let d = decompose_interval(&p("(1 2 3)(4 5 6)", 6), 10_000).unwrap();
        assert_eq!(d.odd_factors.len(), 2);
        assert!(d.even_part.is_identity());
        assert_eq!(d.interval_size, 4);
        assert!(d.certified);
        let d = decompose_interval(&p("(1 2)(3 4)(5 6)(7 8)", 8), 10_000).unwrap();
        assert!(d.odd_factors.is_empty());
        assert_eq!(d.interval_size, 296);
        assert!(d.certified);
        let d = decompose_interval(&Permutation::identity(4), 10).unwrap();
        assert!(d.odd_factors.is_empty());
        assert_eq!(d.interval_size, 1);
    }

    #[test]
    fn table_one_rows() {
        let (f4, d4) = rank_generating_polynomial(4).unwrap();
        assert_eq!(f4, ExactPolynomial::from_integers(&[3, 0, 8, 0, 1]));
        assert_eq!(d4, ExactPolynomial::from_integers(&[1, 8, 3]));
        let (f1, _) = rank_generating_polynomial(1).unwrap();
        assert_eq!(f1, ExactPolynomial::variable());
        assert_eq!(length_distribution_from_ocyc(&f4, 4), d4);
    }

    #[test]
    fn series_small_coefficients() {
        let s = series_closed_form(4);
        assert_eq!(s.egf_coefficient(0), ExactPolynomial::one());
        assert_eq!(s.egf_coefficient(3), ExactPolynomial::from_integers(&[0, 2, 0, 1]));
        assert_eq!(s.specialize(1), vec![rat(1), rat(1), rat_frac(1, 2), rat_frac(1, 2), rat_frac(1, 2)]);
        assert!(BigRational::one() == s.specialize(1)[0]);
    }

    fn arb_even_perm() -> impl Strategy<Value = Permutation> {
        (3usize..=9).prop_flat_map(|n| {
            Just((1..=n).collect::<Vec<_>>()).prop_shuffle().prop_map(move |v| {
                let mut x = Permutation::from_images(&v).unwrap();
                if !x.is_even() {
                    x = &x * &Permutation::from_cycles(n, &[[1, 2]]).unwrap();
                }
                x
            })
        })
    }

    proptest! {
        #[test]
        fn case_rule_matches_lengths(x in arb_even_perm(), seed in 0usize..1000) {
            let gens = enumerate_generators(x.degree(), GeneratorFamily::ThreeCycles).unwrap();
            let a = &gens[seed % gens.len()];
            classify_multiplication(&x, a).unwrap();
        }
    }
}
