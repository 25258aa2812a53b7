//! Length functions, the prefix order and intervals.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::{enumerate_generators, CycleGenerator, GeneratorFamily, Permutation, ORACLE_CAP};
use crate::poly::ExactPolynomial;
use crate::poset::FinitePoset;

/// Default cap on the number of interval elements.
pub const DEFAULT_INTERVAL_CAP: usize = 500_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthMode {
    /// Closed forms where they hold; non-nice k-cycle elements fall back to the oracle.
    ClosedForm,
    /// Breadth-first search in the Cayley graph.
    BfsOracle,
}

/// A generating family of a permutation group of fixed degree together with
/// its length function.
#[derive(Clone)]
pub struct GeneratorContext {
    degree: usize,
    family: GeneratorFamily,
    mode: LengthMode,
    generators: Arc<Vec<CycleGenerator>>,
    // inverse of each generator, as a permutation
    inverse_perms: Arc<Vec<Permutation>>,
    oracle: Arc<OnceLock<std::result::Result<DistanceTable, Error>>>,
}

impl std::fmt::Debug for GeneratorContext {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GeneratorContext")
            .field("degree", &self.degree)
            .field("family", &self.family)
            .field("mode", &self.mode)
            .finish()
    }
}

impl GeneratorContext {
    pub fn new(degree: usize, family: GeneratorFamily, mode: LengthMode) -> Result<Self> {
        let family = family.normalized();
        let generators = enumerate_generators(degree, family)?;
        let inverse_perms = generators
            .iter()
            .map(|g| g.inverse().to_permutation(degree))
            .collect::<Result<Vec<_>>>()?;
        Ok(GeneratorContext {
            degree,
            family,
            mode,
            generators: Arc::new(generators),
            inverse_perms: Arc::new(inverse_perms),
            oracle: Arc::new(OnceLock::new()),
        })
    }

    pub fn three_cycles(degree: usize) -> Result<Self> {
        Self::new(degree, GeneratorFamily::ThreeCycles, LengthMode::ClosedForm)
    }

    pub fn transpositions(degree: usize) -> Result<Self> {
        Self::new(degree, GeneratorFamily::Transpositions, LengthMode::ClosedForm)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn family(&self) -> GeneratorFamily {
        self.family
    }

    pub fn mode(&self) -> LengthMode {
        self.mode
    }

    pub fn generators(&self) -> &[CycleGenerator] {
        &self.generators
    }

    fn check_degree(&self, x: &Permutation) -> Result<()> {
        if x.degree() != self.degree {
            return Err(Error::DegreeMismatch { left: self.degree, right: x.degree() });
        }
        Ok(())
    }

    /// Word length of `x` over the family.
    pub fn length(&self, x: &Permutation) -> Result<usize> {
        self.check_degree(x)?;
        if self.mode == LengthMode::BfsOracle {
            return self.oracle_length(x);
        }
        match self.family {
            GeneratorFamily::Transpositions => Ok(x.reflection_length()),
            GeneratorFamily::ThreeCycles => {
                if !x.is_even() {
                    return Err(Error::NotInGeneratedGroup(x.to_string()));
                }
                Ok((self.degree - x.ocyc()) / 2)
            }
            GeneratorFamily::KCycles(k) => match nice_length(x, k) {
                Ok(l) => Ok(l),
                Err(_) => self.oracle_length(x),
            },
        }
    }

    fn oracle_length(&self, x: &Permutation) -> Result<usize> {
        let table = self
            .oracle
            .get_or_init(|| DistanceTable::build(self.degree, &self.generators))
            .as_ref()
            .map_err(Clone::clone)?;
        match table.distance(x) {
            Some(d) => Ok(d),
            None => Err(Error::NotInGeneratedGroup(x.to_string())),
        }
    }

    /// `x <= y` in the prefix order.
    pub fn is_below(&self, x: &Permutation, y: &Permutation) -> Result<bool> {
        let lx = self.length(x)?;
        let ly = self.length(y)?;
        if lx > ly {
            return Ok(false);
        }
        let diff = x.inverse().compose(y)?;
        Ok(self.length(&diff)? + lx == ly)
    }

    /// All `(y a^{-1}, a)` with `l(y a^{-1}) = l(y) - 1`.
    pub fn lower_covers(&self, y: &Permutation) -> Result<Vec<(Permutation, CycleGenerator)>> {
        let ly = self.length(y)?;
        if ly == 0 {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for (a, ainv) in self.generators.iter().zip(self.inverse_perms.iter()) {
            let x = y * ainv;
            if self.length(&x)? + 1 == ly {
                out.push((x, a.clone()));
            }
        }
        Ok(out)
    }

    /// Lower cover elements only, deduplicated, in generator order.
    fn lower_cover_elements(&self, y: &Permutation) -> Result<Vec<Permutation>> {
        let mut xs: Vec<Permutation> = self.lower_covers(y)?.into_iter().map(|(x, _)| x).collect();
        xs.sort();
        xs.dedup();
        Ok(xs)
    }

    pub fn interval(&self, bottom: &Permutation, top: &Permutation) -> Result<IntervalPoset> {
        self.interval_capped(bottom, top, DEFAULT_INTERVAL_CAP)
    }

    /// Builds `[bottom, top]` by downward cover search from `top`, keeping the
    /// elements above `bottom`.
    pub fn interval_capped(
        &self,
        bottom: &Permutation,
        top: &Permutation,
        cap: usize,
    ) -> Result<IntervalPoset> {
        if !self.is_below(bottom, top)? {
            return Err(Error::NotComparable { lower: bottom.to_string(), upper: top.to_string() });
        }
        let l_bottom = self.length(bottom)?;
        let n_rank = self.length(top)? - l_bottom;

        let mut index: HashMap<Permutation, usize> = HashMap::new();
        let mut elems: Vec<Permutation> = vec![top.clone()];
        let mut ranks: Vec<usize> = vec![n_rank];
        let mut covers: Vec<(usize, usize)> = Vec::new();
        index.insert(top.clone(), 0);
        let mut frontier: Vec<usize> = vec![0];
        let mut rank = n_rank;
        while rank > 0 && !frontier.is_empty() {
            let expanded: Vec<Result<Vec<Permutation>>> = frontier
                .par_iter()
                .map(|&i| {
                    let mut kept = Vec::new();
                    for x in self.lower_cover_elements(&elems[i])? {
                        if self.is_below(bottom, &x)? {
                            kept.push(x);
                        }
                    }
                    Ok(kept)
                })
                .collect();
            let mut next = Vec::new();
            for (&hi, lows) in frontier.iter().zip(expanded) {
                for x in lows? {
                    let lo = match index.get(&x) {
                        Some(&j) => j,
                        None => {
                            let j = elems.len();
                            if j >= cap {
                                return Err(Error::IntervalTooLarge { cap });
                            }
                            index.insert(x.clone(), j);
                            elems.push(x);
                            ranks.push(rank - 1);
                            next.push(j);
                            j
                        }
                    };
                    covers.push((lo, hi));
                }
            }
            frontier = next;
            rank -= 1;
        }
        IntervalPoset::assemble(self.clone(), bottom.clone(), top.clone(), elems, ranks, covers)
    }
}

/// `l_k(x) = l_2(x)/(k-1)` when every cycle length is 1 modulo `k-1`.
pub fn nice_length(x: &Permutation, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::ParameterOutOfRange(format!("cycle length {k}")));
    }
    if x.all_cycles().iter().any(|c| (c.len() - 1) % (k - 1) != 0) {
        return Err(Error::NotNiceElement(x.to_string()));
    }
    Ok(x.reflection_length() / (k - 1))
}

/// Distances from the identity in the Cayley graph, indexed by Lehmer rank.
struct DistanceTable {
    degree: usize,
    dist: Vec<u8>,
}

impl DistanceTable {
    fn build(degree: usize, generators: &[CycleGenerator]) -> Result<Self> {
        if degree > ORACLE_CAP {
            return Err(Error::DegreeAboveOracleCap { degree, cap: ORACLE_CAP });
        }
        let total: usize = (1..=degree).product();
        let mut dist = vec![u8::MAX; total];
        let gens: Vec<Permutation> =
            generators.iter().map(|g| g.to_permutation(degree)).collect::<Result<_>>()?;
        let e = Permutation::identity(degree);
        dist[e.lehmer_rank()] = 0;
        let mut frontier = vec![e];
        let mut d = 0u8;
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for g in &gens {
                    let v = w * g;
                    let r = v.lehmer_rank();
                    if dist[r] == u8::MAX {
                        dist[r] = d + 1;
                        next.push(v);
                    }
                }
            }
            frontier = next;
            d += 1;
        }
        Ok(DistanceTable { degree, dist })
    }

    fn distance(&self, x: &Permutation) -> Option<usize> {
        debug_assert_eq!(x.degree(), self.degree);
        match self.dist[x.lehmer_rank()] {
            u8::MAX => None,
            d => Some(d as usize),
        }
    }
}

/// `K_z(x) = x^{-1} z`.
pub fn kreweras(z: &Permutation, x: &Permutation) -> Result<Permutation> {
    x.inverse().compose(z)
}

/// `x -> y x^{-1} z`, an order-reversing bijection of `[y, z]`.
pub fn anti_automorphism(y: &Permutation, z: &Permutation, x: &Permutation) -> Result<Permutation> {
    y.compose(&x.inverse())?.compose(z)
}

/// `K_{y^{-1}z}(K_z(x)) = z^{-1} x y^{-1} z`, an isomorphism `[y, z] -> [e, y^{-1} z]`.
pub fn shift_isomorphism(y: &Permutation, z: &Permutation, x: &Permutation) -> Result<Permutation> {
    let k = kreweras(z, x)?;
    kreweras(&y.inverse().compose(z)?, &k)
}

/// An interval of a prefix order with its cover graph and ranks.
#[derive(Debug, Clone)]
pub struct IntervalPoset {
    context: GeneratorContext,
    bottom: Permutation,
    top: Permutation,
    elements: Vec<Permutation>,
    ranks: Vec<usize>,
    index: HashMap<Permutation, usize>,
    poset: FinitePoset,
}

#[derive(Serialize)]
struct IntervalJson<'a> {
    degree: usize,
    family: String,
    bottom: String,
    top: String,
    elements: Vec<String>,
    ranks: &'a [usize],
    covers: Vec<[usize; 2]>,
}

impl IntervalPoset {
    fn assemble(
        context: GeneratorContext,
        bottom: Permutation,
        top: Permutation,
        elems: Vec<Permutation>,
        ranks: Vec<usize>,
        covers: Vec<(usize, usize)>,
    ) -> Result<Self> {
        // reorder by (rank, notation)
        let labels: Vec<String> = elems.iter().map(Permutation::to_string).collect();
        let mut order: Vec<usize> = (0..elems.len()).collect();
        order.sort_by(|&a, &b| ranks[a].cmp(&ranks[b]).then_with(|| labels[a].cmp(&labels[b])));
        let mut new_index = vec![0usize; elems.len()];
        for (new, &old) in order.iter().enumerate() {
            new_index[old] = new;
        }
        let mut slots: Vec<Option<Permutation>> = elems.into_iter().map(Some).collect();
        let elements: Vec<Permutation> =
            order.iter().map(|&old| slots[old].take().expect("each element once")).collect();
        let ranks: Vec<usize> = order.iter().map(|&old| ranks[old]).collect();
        let covers: Vec<(usize, usize)> =
            covers.into_iter().map(|(lo, hi)| (new_index[lo], new_index[hi])).collect();
        let poset = FinitePoset::from_covers(elements.len(), &covers)?;
        let index = elements.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        Ok(IntervalPoset { context, bottom, top, elements, ranks, index, poset })
    }

    pub fn context(&self) -> &GeneratorContext {
        &self.context
    }

    pub fn bottom(&self) -> &Permutation {
        &self.bottom
    }

    pub fn top(&self) -> &Permutation {
        &self.top
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn rank(&self) -> usize {
        self.ranks.last().copied().unwrap_or(0)
    }

    pub fn index_of(&self, x: &Permutation) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &Permutation) -> bool {
        self.index.contains_key(x)
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    pub fn bottom_index(&self) -> usize {
        0
    }

    pub fn top_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Number of elements of each rank.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.rank() + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    pub fn count_maximal_chains(&self) -> BigUint {
        self.poset.count_maximal_chains()
    }

    pub fn count_multichains(&self, m: usize) -> BigUint {
        self.poset.count_multichains(m)
    }

    /// Zeta polynomial by interpolation; its value at `-1` is checked against
    /// the recursive Möbius number.
    pub fn zeta_polynomial(&self) -> Result<ExactPolynomial> {
        let z = self.poset.zeta_polynomial(self.rank())?;
        let mu = self.moebius();
        if z.eval_int(-1) != num_rational::BigRational::from_integer(mu.clone()) {
            return Err(Error::InterpolationInconsistent(format!(
                "Z(-1) = {} but mu = {mu}",
                z.eval_int(-1)
            )));
        }
        Ok(z)
    }

    /// `mu(bottom, top)` from the recursive definition.
    pub fn moebius(&self) -> BigInt {
        self.poset.moebius(self.bottom_index(), self.top_index())
    }

    pub fn to_json(&self) -> String {
        let json = IntervalJson {
            degree: self.context.degree(),
            family: self.context.family().name(),
            bottom: self.bottom.to_string(),
            top: self.top.to_string(),
            elements: self.elements.iter().map(Permutation::to_string).collect(),
            ranks: &self.ranks,
            covers: self.covers().into_iter().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string_pretty(&json).expect("interval serializes")
    }

    /// Hasse diagram in DOT, one subgraph per rank.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph interval {\n  rankdir=BT;\n  node [shape=box];\n");
        for r in 0..=self.rank() {
            let _ = writeln!(out, "  subgraph rank{r} {{\n    rank=same;");
            for (i, x) in self.elements.iter().enumerate() {
                if self.ranks[i] == r {
                    let _ = writeln!(out, "    n{i} [label=\"{x}\"];");
                }
            }
            out.push_str("  }\n");
        }
        for (lo, hi) in self.covers() {
            let _ = writeln!(out, "  n{lo} -> n{hi};");
        }
        out.push_str("}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::enumerate_alternating;
    use crate::poly::rat;

    fn p(text: &str, n: usize) -> Permutation {
        Permutation::parse(text, n).unwrap()
    }

    #[test]
    fn length_examples() {
        let ctx = GeneratorContext::three_cycles(4).unwrap();
        assert_eq!(ctx.length(&Permutation::identity(4)).unwrap(), 0);
        assert_eq!(ctx.length(&p("(1 2)(3 4)", 4)).unwrap(), 2);
        assert!(matches!(ctx.length(&p("(1 2)", 4)), Err(Error::NotInGeneratedGroup(_))));
        let k4 = GeneratorContext::new(7, GeneratorFamily::KCycles(4), LengthMode::ClosedForm).unwrap();
        assert_eq!(k4.length(&Permutation::long_cycle(7)).unwrap(), 2);
    }

    #[test]
    fn closed_form_matches_oracle() {
        for n in 3..=7 {
            let closed = GeneratorContext::three_cycles(n).unwrap();
            let oracle = GeneratorContext::new(n, GeneratorFamily::ThreeCycles, LengthMode::BfsOracle).unwrap();
            for x in enumerate_alternating(n).unwrap() {
                assert_eq!(closed.length(&x).unwrap(), oracle.length(&x).unwrap(), "{x}");
            }
        }
        let closed = GeneratorContext::transpositions(6).unwrap();
        let oracle = GeneratorContext::new(6, GeneratorFamily::Transpositions, LengthMode::BfsOracle).unwrap();
        for x in crate::perm::AllPermutations::new(6) {
            assert_eq!(closed.length(&x).unwrap(), oracle.length(&x).unwrap());
        }
    }

    #[test]
    fn nice_elements_match_oracle_for_four_cycles() {
        let oracle = GeneratorContext::new(7, GeneratorFamily::KCycles(4), LengthMode::BfsOracle).unwrap();
        let mut checked = 0;
        for x in crate::perm::AllPermutations::new(7) {
            if let Ok(l) = nice_length(&x, 4) {
                assert_eq!(oracle.length(&x).unwrap(), l, "{x}");
                checked += 1;
            }
        }
        assert!(checked > 100);
    }

    #[test]
    fn order_examples() {
        let c = Permutation::long_cycle(5);
        let x = p("(2 4 5)", 5);
        assert!(GeneratorContext::transpositions(5).unwrap().is_below(&x, &c).unwrap());
        let three = GeneratorContext::three_cycles(5).unwrap();
        assert!(!three.is_below(&x, &c).unwrap());
        assert!(three.is_below(&p("(1 2 3)", 5), &c).unwrap());
        assert!(three.is_below(&Permutation::identity(5), &x).unwrap());
    }

    #[test]
    fn lower_cover_examples() {
        let ctx = GeneratorContext::three_cycles(3).unwrap();
        let covers = ctx.lower_covers(&p("(1 2 3)", 3)).unwrap();
        assert_eq!(covers.len(), 1);
        assert!(covers[0].0.is_identity());
        assert_eq!(covers[0].1.to_string(), "(1 2 3)");
        assert!(ctx.lower_covers(&Permutation::identity(3)).unwrap().is_empty());
        let ctx5 = GeneratorContext::three_cycles(5).unwrap();
        let mut xs: Vec<String> =
            ctx5.lower_covers(&Permutation::long_cycle(5)).unwrap().iter().map(|(x, _)| x.to_string()).collect();
        xs.sort();
        xs.dedup();
        assert_eq!(xs, vec!["(1 2 3)", "(1 2 5)", "(1 4 5)", "(2 3 4)", "(3 4 5)"]);
    }

    #[test]
    fn interval_examples() {
        let ctx = GeneratorContext::three_cycles(7).unwrap();
        let e = Permutation::identity(7);
        let onc7 = ctx.interval(&e, &Permutation::long_cycle(7)).unwrap();
        assert_eq!(onc7.len(), 30);
        assert_eq!(onc7.rank_sizes(), vec![1, 14, 14, 1]);
        assert_eq!(onc7.count_maximal_chains(), BigUint::from(49u32));
        let single = ctx.interval(&p("(1 2 3)", 7), &p("(1 2 3)", 7)).unwrap();
        assert_eq!(single.len(), 1);
        let ctx8 = GeneratorContext::three_cycles(8).unwrap();
        let big = ctx8.interval(&Permutation::identity(8), &p("(1 2)(3 4)(5 6)(7 8)", 8)).unwrap();
        assert_eq!(big.len(), 296);
        assert!(matches!(
            ctx.interval(&p("(2 4 5)", 7), &Permutation::long_cycle(7)),
            Err(Error::NotComparable { .. })
        ));
    }

    #[test]
    fn multichains_and_zeta_small() {
        let ctx = GeneratorContext::three_cycles(5).unwrap();
        let iv = ctx.interval(&Permutation::identity(5), &Permutation::long_cycle(5)).unwrap();
        assert_eq!(iv.count_multichains(1), BigUint::from(1u32));
        assert_eq!(iv.count_multichains(2), BigUint::from(7u32));
        // Z(q) = q(5q - 3)/2 at q = 3
        assert_eq!(iv.count_multichains(3), BigUint::from(18u32));
        assert_eq!(iv.moebius(), BigInt::from(4));
        let z = iv.zeta_polynomial().unwrap();
        assert_eq!(z.eval_int(-1), rat(4));
        let ctx3 = GeneratorContext::three_cycles(3).unwrap();
        let chain = ctx3.interval(&Permutation::identity(3), &Permutation::long_cycle(3)).unwrap();
        assert_eq!(chain.zeta_polynomial().unwrap(), ExactPolynomial::variable());
        assert_eq!(chain.moebius(), BigInt::from(-1));
        assert_eq!(chain.count_multichains(3), BigUint::from(3u32));
    }

    #[test]
    fn kreweras_examples() {
        let c = Permutation::long_cycle(5);
        let e = Permutation::identity(5);
        assert_eq!(kreweras(&c, &e).unwrap(), c);
        assert!(kreweras(&c, &c).unwrap().is_identity());
        assert_eq!(kreweras(&p("(1 2 3)", 3), &p("(1 2)", 3)).unwrap(), p("(2 3)", 3));
        let x = p("(1 14 15)(3 4 7)(8 9 10 11 12)", 17);
        assert_eq!(
            kreweras(&Permutation::long_cycle(17), &x).unwrap().to_string(),
            "(1 2 7 12 13)(4 5 6)(15 16 17)"
        );
    }

    #[test]
    fn json_and_dot_shapes() {
        let ctx = GeneratorContext::three_cycles(3).unwrap();
        let iv = ctx.interval(&Permutation::identity(3), &Permutation::long_cycle(3)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&iv.to_json()).unwrap();
        assert_eq!(v["family"], "three_cycles");
        assert_eq!(v["elements"], serde_json::json!(["e", "(1 2 3)"]));
        assert_eq!(v["covers"], serde_json::json!([[0, 1]]));
        let dot = iv.to_dot();
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("rank=same"));
    }
}
