//! Finite posets given by their Hasse diagram: Möbius numbers, multichains,
//! maximal chains and zeta polynomials.
//!
//! Strict down-sets are stored as sorted index lists. Their total size is the
//! number of comparable pairs, which for the intervals of interest is far
//! smaller than the square of the element count.

use std::collections::{BTreeMap, HashMap};

use fixedbitset::FixedBitSet;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::ExactPolynomial;

#[derive(Debug, Clone)]
pub struct FinitePoset {
    lower_covers: Vec<Vec<u32>>,
    upper_covers: Vec<Vec<u32>>,
    strict_down: Vec<Vec<u32>>,
    topo: Vec<u32>,
}

impl FinitePoset {
    /// Builds a poset from its cover pairs `(lower, upper)`. Extra comparable
    /// pairs are tolerated for the order itself but then show up as covers.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self> {
        let mut lower_covers = vec![Vec::new(); n];
        let mut upper_covers = vec![Vec::new(); n];
        for &(lo, hi) in covers {
            if lo >= n || hi >= n || lo == hi {
                return Err(Error::NotAPartialOrder(format!("bad cover ({lo}, {hi})")));
            }
            lower_covers[hi].push(lo as u32);
            upper_covers[lo].push(hi as u32);
        }
        for list in lower_covers.iter_mut().chain(upper_covers.iter_mut()) {
            list.sort_unstable();
            list.dedup();
        }
        let topo = kahn_order(&lower_covers, &upper_covers)?;
        let strict_down = strict_downsets(&lower_covers, &topo);
        Ok(FinitePoset { lower_covers, upper_covers, strict_down, topo })
    }

    /// Builds a poset from an order predicate, checking the partial order axioms.
    pub fn from_leq(n: usize, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut down: Vec<FixedBitSet> = Vec::with_capacity(n);
        for x in 0..n {
            let mut set = FixedBitSet::with_capacity(n);
            for w in 0..n {
                if leq(w, x) {
                    set.insert(w);
                }
            }
            if !set.contains(x) {
                return Err(Error::NotAPartialOrder(format!("{x} is not below itself")));
            }
            down.push(set);
        }
        for x in 0..n {
            for w in down[x].ones() {
                if w == x {
                    continue;
                }
                if down[w].contains(x) {
                    return Err(Error::NotAPartialOrder(format!("{w} and {x} are mutually below")));
                }
                if !down[w].is_subset(&down[x]) {
                    return Err(Error::NotAPartialOrder(format!("transitivity fails through {w} < {x}")));
                }
            }
        }
        let mut covers = Vec::new();
        for x in 0..n {
            let strict: Vec<usize> = down[x].ones().filter(|&w| w != x).collect();
            for &w in &strict {
                let blocked = strict.iter().any(|&z| z != w && down[z].contains(w));
                if !blocked {
                    covers.push((w, x));
                }
            }
        }
        Self::from_covers(n, &covers)
    }

    pub fn len(&self) -> usize {
        self.lower_covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower_covers.is_empty()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        a == b || self.strict_down[b].binary_search(&(a as u32)).is_ok()
    }

    pub fn lower_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.lower_covers[x].iter().map(|&w| w as usize)
    }

    pub fn upper_covers(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.upper_covers[x].iter().map(|&w| w as usize)
    }

    /// Elements strictly below `x`, sorted by index.
    pub fn strict_downset(&self, x: usize) -> impl Iterator<Item = usize> + '_ {
        self.strict_down[x].iter().map(|&w| w as usize)
    }

    /// Cover pairs `(lower, upper)` sorted lexicographically.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self
            .lower_covers
            .iter()
            .enumerate()
            .flat_map(|(hi, los)| los.iter().map(move |&lo| (lo as usize, hi)))
            .collect();
        out.sort_unstable();
        out
    }

    /// A linear extension of the order.
    pub fn topological_order(&self) -> impl Iterator<Item = usize> + '_ {
        self.topo.iter().map(|&x| x as usize)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.lower_covers[x].is_empty()).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&x| self.upper_covers[x].is_empty()).collect()
    }

    /// Number of comparable pairs `w <= x`, equal pairs included.
    pub fn comparable_pairs(&self) -> usize {
        self.len() + self.strict_down.iter().map(Vec::len).sum::<usize>()
    }

    /// Longest-chain rank from the minimal elements, if every cover raises it by one
    /// and all minimal elements sit at rank zero.
    pub fn ranks(&self) -> Option<Vec<usize>> {
        let mut rank = vec![0usize; self.len()];
        for x in self.topological_order() {
            let mut lows = self.lower_covers(x).map(|w| rank[w]);
            if let Some(first) = lows.next() {
                if lows.any(|r| r != first) {
                    return None;
                }
                rank[x] = first + 1;
            }
        }
        Some(rank)
    }

    /// `mu(lo, hi)` by the recursive definition.
    pub fn moebius(&self, lo: usize, hi: usize) -> BigInt {
        if !self.leq(lo, hi) {
            return BigInt::zero();
        }
        let mut mu: HashMap<usize, BigInt> = HashMap::new();
        mu.insert(lo, BigInt::one());
        for x in self.topological_order() {
            if x == lo || !self.leq(lo, x) || !self.leq(x, hi) {
                continue;
            }
            let mut sum = BigInt::zero();
            for w in self.strict_downset(x) {
                if let Some(v) = mu.get(&w) {
                    sum += v;
                }
            }
            mu.insert(x, -sum);
            if x == hi {
                break;
            }
        }
        mu.remove(&hi).unwrap_or_else(BigInt::zero)
    }

    /// `mu(lo, x)` for every `x`; zero where `x` is not above `lo`.
    pub fn moebius_from(&self, lo: usize) -> Vec<BigInt> {
        let mut mu = vec![BigInt::zero(); self.len()];
        let mut above = vec![false; self.len()];
        mu[lo] = BigInt::one();
        above[lo] = true;
        for x in self.topological_order() {
            if x == lo || !self.leq(lo, x) {
                continue;
            }
            above[x] = true;
            let mut sum = BigInt::zero();
            for w in self.strict_downset(x) {
                if above[w] {
                    sum += &mu[w];
                }
            }
            mu[x] = -sum;
        }
        mu
    }

    /// Number of `(m-1)`-multichains `x_1 <= ... <= x_{m-1}`; `m = 1` counts the empty one.
    pub fn count_multichains(&self, m: usize) -> BigUint {
        if m <= 1 {
            return BigUint::one();
        }
        let mut f = vec![BigUint::one(); self.len()];
        for _ in 2..m {
            let mut next = vec![BigUint::zero(); self.len()];
            for x in 0..self.len() {
                let mut s = f[x].clone();
                for w in self.strict_downset(x) {
                    s += &f[w];
                }
                next[x] = s;
            }
            f = next;
        }
        f.into_iter().sum()
    }

    /// Maximal chains, counted along the Hasse diagram.
    pub fn count_maximal_chains(&self) -> BigUint {
        let mut g = vec![BigUint::zero(); self.len()];
        for x in self.topological_order() {
            if self.lower_covers[x].is_empty() {
                g[x] = BigUint::one();
            } else {
                let mut s = BigUint::zero();
                for w in self.lower_covers(x) {
                    s += &g[w];
                }
                g[x] = s;
            }
        }
        self.maximal_elements().into_iter().map(|x| g[x].clone()).sum()
    }

    /// Zeta polynomial of a poset of rank `rank`, interpolated from multichain
    /// counts at `q = 1..rank+2` and checked at `rank+3`, `rank+4`.
    pub fn zeta_polynomial(&self, rank: usize) -> Result<ExactPolynomial> {
        let values: Vec<BigInt> =
            (1..=rank + 4).map(|q| BigInt::from(self.count_multichains(q))).collect();
        // interpolation nodes beyond the degree bound double as checks
        ExactPolynomial::interpolate_checked(&values, rank + 1).and_then(|z| {
            match z.degree() {
                Some(d) if d > rank => Err(Error::InterpolationInconsistent(format!(
                    "degree {d} exceeds rank {rank}"
                ))),
                _ => Ok(z),
            }
        })
    }

    /// Counts multichains `bottom = x_0 <= x_1 <= ... <= x_{q-1} <= x_q = top`
    /// grouped by their rank jump vector `(rk x_i - rk x_{i-1})_{i=1..q}`.
    pub fn rank_jump_counts(
        &self,
        bottom: usize,
        top: usize,
        rank: &[usize],
        q: usize,
    ) -> BTreeMap<Vec<usize>, BigUint> {
        let mut result = BTreeMap::new();
        if q == 0 {
            return result;
        }
        let mut up: Vec<Vec<u32>> = vec![Vec::new(); self.len()];
        for x in 0..self.len() {
            for &w in &self.strict_down[x] {
                up[w as usize].push(x as u32);
            }
        }
        let mut states: HashMap<usize, HashMap<Vec<usize>, BigUint>> = HashMap::new();
        states.entry(bottom).or_default().insert(Vec::new(), BigUint::one());
        for _ in 1..q {
            let mut next: HashMap<usize, HashMap<Vec<usize>, BigUint>> = HashMap::new();
            for (x, vecs) in &states {
                let successors = std::iter::once(*x).chain(up[*x].iter().map(|&y| y as usize));
                for y in successors {
                    if !self.leq(y, top) {
                        continue;
                    }
                    let slot = next.entry(y).or_default();
                    for (v, c) in vecs {
                        let mut v2 = v.clone();
                        v2.push(rank[y] - rank[*x]);
                        *slot.entry(v2).or_insert_with(BigUint::zero) += c;
                    }
                }
            }
            states = next;
        }
        for (x, vecs) in states {
            for (mut v, c) in vecs {
                v.push(rank[top] - rank[x]);
                *result.entry(v).or_insert_with(BigUint::zero) += c;
            }
        }
        result
    }
}

fn kahn_order(lower: &[Vec<u32>], upper: &[Vec<u32>]) -> Result<Vec<u32>> {
    let n = lower.len();
    let mut indeg: Vec<usize> = lower.iter().map(Vec::len).collect();
    let mut stack: Vec<u32> = (0..n as u32).rev().filter(|&x| indeg[x as usize] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(x) = stack.pop() {
        order.push(x);
        for &y in upper[x as usize].iter().rev() {
            indeg[y as usize] -= 1;
            if indeg[y as usize] == 0 {
                stack.push(y);
            }
        }
    }
    if order.len() != n {
        return Err(Error::NotAPartialOrder("cover relation has a cycle".into()));
    }
    Ok(order)
}

fn strict_downsets(lower: &[Vec<u32>], topo: &[u32]) -> Vec<Vec<u32>> {
    let n = lower.len();
    let mut stamp = vec![u32::MAX; n];
    let mut out = vec![Vec::new(); n];
    let mut stack = Vec::new();
    for &x in topo {
        let mut set = Vec::new();
        stack.extend_from_slice(&lower[x as usize]);
        while let Some(w) = stack.pop() {
            if stamp[w as usize] == x {
                continue;
            }
            stamp[w as usize] = x;
            set.push(w);
            stack.extend_from_slice(&lower[w as usize]);
        }
        set.sort_unstable();
        out[x as usize] = set;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    fn chain(n: usize) -> FinitePoset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        FinitePoset::from_covers(n, &covers).unwrap()
    }

    fn boolean_lattice(k: usize) -> FinitePoset {
        FinitePoset::from_leq(1 << k, |a, b| a & b == a).unwrap()
    }

    #[test]
    fn chain_statistics() {
        let c = chain(2);
        assert_eq!(c.count_multichains(1), BigUint::one());
        assert_eq!(c.count_multichains(2), BigUint::from(2u32));
        assert_eq!(c.count_multichains(3), BigUint::from(3u32));
        assert_eq!(c.moebius(0, 1), BigInt::from(-1));
        assert_eq!(c.zeta_polynomial(1).unwrap(), ExactPolynomial::variable());
        assert_eq!(chain(3).moebius(0, 2), BigInt::zero());
        assert_eq!(chain(4).count_maximal_chains(), BigUint::one());
    }

    #[test]
    fn boolean_lattice_statistics() {
        let b = boolean_lattice(3);
        assert_eq!(b.covers().len(), 12);
        assert_eq!(b.count_maximal_chains(), BigUint::from(6u32));
        assert_eq!(b.moebius(0, 7), BigInt::from(-1));
        let z = b.zeta_polynomial(3).unwrap();
        // multichains in a product of three 2-chains: q^3
        assert_eq!(z, ExactPolynomial::monomial(rat(1), 3));
        assert_eq!(z.eval_int(-1), rat(-1));
        assert_eq!(b.ranks().unwrap(), vec![0, 1, 1, 2, 1, 2, 2, 3]);
    }

    #[test]
    fn rejects_non_orders() {
        assert!(FinitePoset::from_leq(2, |_, _| true).is_err());
        assert!(FinitePoset::from_covers(2, &[(0, 1), (1, 0)]).is_err());
        // not transitive: 0<1, 1<2 but not 0<2
        assert!(FinitePoset::from_leq(3, |a, b| a == b || (a, b) == (0, 1) || (a, b) == (1, 2)).is_err());
    }

    #[test]
    fn rank_jumps_of_a_chain() {
        let c = chain(3);
        let ranks = c.ranks().unwrap();
        let jumps = c.rank_jump_counts(0, 2, &ranks, 2);
        let expect: BTreeMap<Vec<usize>, BigUint> = [
            (vec![0, 2], BigUint::one()),
            (vec![1, 1], BigUint::one()),
            (vec![2, 0], BigUint::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(jumps, expect);
    }

    fn divisor_poset(n: usize) -> FinitePoset {
        let divs: Vec<usize> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
        FinitePoset::from_leq(divs.len(), |a, b| divs[b].is_multiple_of(divs[a])).unwrap()
    }

    // classical number-theoretic Möbius function
    fn mobius_nt(mut n: usize) -> i64 {
        let mut result = 1;
        let mut p = 2;
        while p * p <= n {
            if n.is_multiple_of(p) {
                n /= p;
                if n.is_multiple_of(p) {
                    return 0;
                }
                result = -result;
            }
            p += 1;
        }
        if n > 1 {
            result = -result;
        }
        result
    }

    proptest! {
        #[test]
        fn divisor_lattice_moebius(n in 1usize..200) {
            let p = divisor_poset(n);
            let top = p.len() - 1;
            prop_assert_eq!(p.moebius(0, top), BigInt::from(mobius_nt(n)));
            prop_assert_eq!(p.moebius_from(0)[top].clone(), BigInt::from(mobius_nt(n)));
        }

        #[test]
        fn zeta_matches_moebius_and_chains(k in 1usize..5) {
            let b = boolean_lattice(k);
            let z = b.zeta_polynomial(k).unwrap();
            prop_assert_eq!(z.eval_int(-1), num_rational::BigRational::from_integer(b.moebius(0, (1 << k) - 1)));
            let lead = z.leading_coefficient() * rat((1..=k as i64).product());
            prop_assert_eq!(lead, num_rational::BigRational::from_integer(b.count_maximal_chains().into()));
        }
    }
}
