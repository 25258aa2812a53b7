//! Multichains of ONC_{2n+1} ordered through their delta sequences, with the
//! numbers that the conjectured closed forms predict.
//!
//! For `C = (x_1 <= ... <= x_m)` put `x_0 = e`, `x_{m+1} = c` and
//! `d_i = x_i^{-1} x_{i+1}`. Then `C <= C'` iff `d_i >= d'_i` for `i = 1..m`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::noncrossing::onc_interval;
use crate::perm::Permutation;
use crate::poly::{format_rational, generalized_binomial, rat};
use crate::poset::FinitePoset;
use crate::prefix::IntervalPoset;

/// Default cap on the number of multichains.
pub const DEFAULT_MDIV_CAP: usize = 100_000;

#[derive(Debug, Clone)]
pub struct MultichainElement {
    /// Indices into the ONC interval, `x_1 .. x_m`.
    pub chain: Vec<usize>,
    /// Indices of `d_0 .. d_m`.
    pub delta: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct MdivPoset {
    pub n: usize,
    pub m: usize,
    onc: IntervalPoset,
    elements: Vec<MultichainElement>,
    poset: FinitePoset,
}

/// Which `m` of the `m+1` delta entries the order compares.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DeltaWindow {
    /// `d_1 .. d_m`, with `d_0` determined by the rest.
    #[default]
    Tail,
    /// `d_0 .. d_{m-1}`.
    Head,
}

impl DeltaWindow {
    fn compared(self, delta: &[usize]) -> &[usize] {
        match self {
            DeltaWindow::Tail => &delta[1..],
            DeltaWindow::Head => &delta[..delta.len() - 1],
        }
    }
}

pub fn build_mdiv(n: usize, m: usize, cap: usize) -> Result<MdivPoset> {
    build_mdiv_with(n, m, cap, DeltaWindow::Tail)
}

pub fn build_mdiv_with(n: usize, m: usize, cap: usize, window: DeltaWindow) -> Result<MdivPoset> {
    if n == 0 || m == 0 {
        return Err(Error::ParameterOutOfRange(format!("n={n}, m={m}")));
    }
    let onc = onc_interval(2 * n + 1)?;
    let len = onc.len();
    let poset = onc.poset();
    let mut chains: Vec<Vec<usize>> = Vec::new();
    let mut current = Vec::with_capacity(m);
    collect_multichains(poset, len, m, &mut current, &mut chains, cap)?;
    let c = onc.top().clone();
    let e = Permutation::identity(2 * n + 1);
    let elements: Vec<MultichainElement> = chains
        .into_iter()
        .map(|chain| {
            let mut xs: Vec<&Permutation> = vec![&e];
            xs.extend(chain.iter().map(|&i| &onc.elements()[i]));
            xs.push(&c);
            let delta = xs
                .windows(2)
                .map(|w| {
                    let d = &w[0].inverse() * w[1];
                    onc.index_of(&d).expect("delta entries lie in the interval")
                })
                .collect();
            MultichainElement { chain, delta }
        })
        .collect();
    let order = FinitePoset::from_leq(elements.len(), |a, b| {
        window
            .compared(&elements[a].delta)
            .iter()
            .zip(window.compared(&elements[b].delta))
            .all(|(&da, &db)| poset.leq(db, da))
    })?;
    Ok(MdivPoset { n, m, onc, elements, poset: order })
}

fn collect_multichains(
    poset: &FinitePoset,
    len: usize,
    m: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    cap: usize,
) -> Result<()> {
    if current.len() == m {
        out.push(current.clone());
        if out.len() > cap {
            return Err(Error::TooManyElements { cap });
        }
        return Ok(());
    }
    for x in 0..len {
        if current.last().is_none_or(|&prev| poset.leq(prev, x)) {
            current.push(x);
            collect_multichains(poset, len, m, current, out, cap)?;
            current.pop();
        }
    }
    Ok(())
}

impl MdivPoset {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[MultichainElement] {
        &self.elements
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn onc(&self) -> &IntervalPoset {
        &self.onc
    }

    /// Chain `x_1 .. x_m` of element `i` in cycle notation.
    pub fn chain_notation(&self, i: usize) -> Vec<String> {
        self.elements[i].chain.iter().map(|&x| self.onc.elements()[x].to_string()).collect()
    }

    /// Mobius number after adjoining a new least element.
    pub fn mu_hat(&self) -> Result<BigInt> {
        let n = self.len();
        let mut covers = self.poset.covers();
        covers.extend(self.poset.minimal_elements().into_iter().map(|x| (n, x)));
        let hat = FinitePoset::from_covers(n + 1, &covers)?;
        Ok(hat.moebius(n, self.top()?))
    }

    /// Mobius number after identifying all minimal elements.
    pub fn mu_bar(&self) -> Result<BigInt> {
        let minimal = self.poset.minimal_elements();
        let keep: Vec<usize> = (0..self.len()).filter(|x| !minimal.contains(x)).collect();
        if keep.is_empty() {
            return Ok(BigInt::from(1));
        }
        // index 0 is the collapsed minimum
        let leq = |a: usize, b: usize| match (a, b) {
            (0, _) => b == 0 || minimal.iter().any(|&z| self.poset.leq(z, keep[b - 1])),
            (_, 0) => false,
            _ => self.poset.leq(keep[a - 1], keep[b - 1]),
        };
        let bar = FinitePoset::from_leq(keep.len() + 1, leq)?;
        let top = keep.iter().position(|&x| x == self.top().expect("greatest element")).unwrap() + 1;
        Ok(bar.moebius(0, top))
    }

    fn top(&self) -> Result<usize> {
        match self.poset.maximal_elements().as_slice() {
            [t] => Ok(*t),
            _ => Err(Error::NotAPartialOrder("no greatest element".into())),
        }
    }

    pub fn stats(&self) -> MdivStats {
        let zeta: Vec<BigUint> = (1..=self.n + 2).map(|q| self.poset.count_multichains(q)).collect();
        assert_eq!(zeta[1], BigUint::from(self.len()), "Z(2) counts the elements");
        MdivStats {
            elements: self.len(),
            max_chains: self.poset.count_maximal_chains(),
            zeta,
            minimal_elements: self.poset.minimal_elements().len(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MdivStats {
    pub elements: usize,
    pub max_chains: BigUint,
    /// `Z(q)` for `q = 1 .. n+2`.
    pub zeta: Vec<BigUint>,
    pub minimal_elements: usize,
}

/// `m^n (2n+1)^{n-1}`.
pub fn conjectured_max_chains(n: usize, m: usize) -> BigUint {
    BigUint::from(m).pow(n as u32) * BigUint::from(2 * n + 1).pow(n as u32 - 1)
}

/// `A/((2A-1)n + A) C((2A-1)n + A, n)` with `A = m(q-1)+1`.
pub fn conjectured_zeta(n: usize, m: usize, q: i64) -> Result<BigRational> {
    let a = m as i64 * (q - 1) + 1;
    let top = (2 * a - 1) * n as i64 + a;
    if top == 0 {
        return Err(Error::ZeroDenominator(format!("zeta at n={n}, m={m}, q={q}")));
    }
    Ok(rat(a) / rat(top) * generalized_binomial(&rat(top), n as u64))
}

fn frac_binom(num: i64, den: i64, n: usize) -> Result<BigRational> {
    if den == 0 {
        return Err(Error::ZeroDenominator(format!("{num}/{den}")));
    }
    Ok(rat(num) / rat(den) * generalized_binomial(&rat(den), n as u64))
}

fn sign(e: usize) -> BigRational {
    if e.is_multiple_of(2) {
        rat(1)
    } else {
        rat(-1)
    }
}

/// `(-1)^{n-1} (m-1)/(m(2n+1)-1) C(m(2n+1)-1, n)`.
pub fn conjectured_mu_hat(n: usize, m: usize) -> Result<BigRational> {
    let (n_, m_) = (n as i64, m as i64);
    Ok(sign(n + 1) * frac_binom(m_ - 1, m_ * (2 * n_ + 1) - 1, n)?)
}

/// `(-1)^n (m/((m+1)(2n+1)-1) C((m+1)(2n+1)-1, n) - (m-1)/(m(2n+1)-1) C(m(2n+1)-1, n))`.
pub fn conjectured_mu_bar(n: usize, m: usize) -> Result<BigRational> {
    let (n_, m_) = (n as i64, m as i64);
    let first = frac_binom(m_, (m_ + 1) * (2 * n_ + 1) - 1, n)?;
    let second = frac_binom(m_ - 1, m_ * (2 * n_ + 1) - 1, n)?;
    Ok(sign(n) * (first - second))
}

#[derive(Debug, Clone, Serialize)]
pub struct ConjectureRow {
    pub n: usize,
    pub m: usize,
    pub elements: usize,
    pub minimal_elements: usize,
    pub max_chains: String,
    pub max_chains_conjectured: String,
    pub max_chains_agree: bool,
    pub zeta: Vec<String>,
    pub zeta_conjectured: Vec<String>,
    pub zeta_agree: bool,
    pub mu_hat: String,
    pub mu_hat_conjectured: String,
    pub mu_hat_agree: bool,
    pub mu_bar: String,
    pub mu_bar_conjectured: String,
    pub mu_bar_agree: bool,
    /// The case reduces to a proven statement (`m = 1`).
    pub proven_case: bool,
}

impl ConjectureRow {
    pub fn all_agree(&self) -> bool {
        self.max_chains_agree && self.zeta_agree && self.mu_hat_agree && self.mu_bar_agree
    }

    pub const CSV_HEADER: &'static str = "n,m,elements,minimal_elements,max_chains,max_chains_conjectured,zeta,zeta_conjectured,mu_hat,mu_hat_conjectured,mu_bar,mu_bar_conjectured,all_agree";

    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.m,
            self.elements,
            self.minimal_elements,
            self.max_chains,
            self.max_chains_conjectured,
            self.zeta.join(";"),
            self.zeta_conjectured.join(";"),
            self.mu_hat,
            self.mu_hat_conjectured,
            self.mu_bar,
            self.mu_bar_conjectured,
            self.all_agree()
        )
    }
}

pub fn conjecture_row(n: usize, m: usize, cap: usize) -> Result<ConjectureRow> {
    let p = build_mdiv(n, m, cap)?;
    let stats = p.stats();
    let mc_conj = conjectured_max_chains(n, m);
    let zeta_conj: Vec<BigRational> =
        (1..=n as i64 + 2).map(|q| conjectured_zeta(n, m, q)).collect::<Result<_>>()?;
    let zeta_agree = stats
        .zeta
        .iter()
        .zip(&zeta_conj)
        .all(|(z, c)| BigRational::from_integer(BigInt::from(z.clone())) == *c);
    let mu_hat = p.mu_hat()?;
    let mu_bar = p.mu_bar()?;
    let hat_conj = conjectured_mu_hat(n, m)?;
    let bar_conj = conjectured_mu_bar(n, m)?;
    Ok(ConjectureRow {
        n,
        m,
        elements: stats.elements,
        minimal_elements: stats.minimal_elements,
        max_chains: stats.max_chains.to_string(),
        max_chains_conjectured: mc_conj.to_string(),
        max_chains_agree: stats.max_chains == mc_conj,
        zeta: stats.zeta.iter().map(|z| z.to_string()).collect(),
        zeta_conjectured: zeta_conj.iter().map(format_rational).collect(),
        zeta_agree,
        mu_hat_agree: BigRational::from_integer(mu_hat.clone()) == hat_conj,
        mu_hat: mu_hat.to_string(),
        mu_hat_conjectured: format_rational(&hat_conj),
        mu_bar_agree: BigRational::from_integer(mu_bar.clone()) == bar_conj,
        mu_bar: mu_bar.to_string(),
        mu_bar_conjectured: format_rational(&bar_conj),
        proven_case: m == 1,
    })
}

pub fn conjecture_report(n_max: usize, m_max: usize, cap: usize) -> Result<Vec<ConjectureRow>> {
    let mut rows = Vec::new();
    for n in 1..=n_max {
        for m in 1..=m_max {
            rows.push(conjecture_row(n, m, cap)?);
        }
    }
    Ok(rows)
}

/// Whether `Z(q)` values fit one polynomial of degree at most `rank`.
pub fn zeta_values_polynomial(p: &MdivPoset, rank: usize) -> bool {
    let values: Vec<BigInt> = (1..=rank + 4).map(|q| BigInt::from(p.poset().count_multichains(q))).collect();
    crate::poly::ExactPolynomial::interpolate_checked(&values, rank + 1)
        .map(|z| z.degree().is_none_or(|d| d <= rank))
        .unwrap_or(false)
}

/// Rank of the poset (all maximal chains have this many covers), if graded.
pub fn rank_of(p: &MdivPoset) -> Option<usize> {
    let ranks = p.poset().ranks()?;
    Some(ranks[p.top().ok()?])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::noncrossing::zeta_closed_value;

    #[test]
    fn small_cases() {
        let p = build_mdiv(1, 2, DEFAULT_MDIV_CAP).unwrap();
        assert_eq!(p.len(), 3);
        assert_eq!(p.mu_hat().unwrap(), BigInt::from(1));
        assert_eq!(p.mu_bar().unwrap(), BigInt::from(-1));
        assert_eq!(build_mdiv(2, 1, DEFAULT_MDIV_CAP).unwrap().len(), 7);
        for m in 1..=5 {
            assert_eq!(build_mdiv(1, m, DEFAULT_MDIV_CAP).unwrap().len(), m + 1);
        }
        let p = build_mdiv(1, 1, DEFAULT_MDIV_CAP).unwrap();
        assert_eq!(p.mu_hat().unwrap(), BigInt::from(0));
        assert_eq!(build_mdiv(1, 3, DEFAULT_MDIV_CAP).unwrap().stats().max_chains, BigUint::from(3u32));
    }

    #[test]
    fn m_equal_one_is_onc() {
        for n in 1..=3 {
            let p = build_mdiv(n, 1, DEFAULT_MDIV_CAP).unwrap();
            let onc = p.onc();
            // element i is the chain (x_1), so the covers must match those of the interval
            let relabel: Vec<usize> = p.elements().iter().map(|e| e.chain[0]).collect();
            let mut covers: Vec<(usize, usize)> =
                p.poset().covers().into_iter().map(|(a, b)| (relabel[a], relabel[b])).collect();
            covers.sort_unstable();
            assert_eq!(covers, onc.covers());
        }
    }

    #[test]
    fn head_window_reverses_onc() {
        let p = build_mdiv_with(2, 1, DEFAULT_MDIV_CAP, DeltaWindow::Head).unwrap();
        let e = p.elements().iter().position(|x| x.chain[0] == 0).unwrap();
        assert_eq!(p.poset().maximal_elements(), vec![e]);
    }

    #[test]
    fn delta_lengths_add_up() {
        let p = build_mdiv(2, 3, DEFAULT_MDIV_CAP).unwrap();
        let ranks = p.onc().ranks();
        for el in p.elements() {
            assert_eq!(el.delta.iter().map(|&d| ranks[d]).sum::<usize>(), 2);
        }
    }

    #[test]
    fn element_counts_follow_zeta() {
        for n in 1..=3 {
            for m in 1..=3 {
                let p = build_mdiv(n, m, DEFAULT_MDIV_CAP).unwrap();
                assert_eq!(rat(p.len() as i64), zeta_closed_value(n, m as i64 + 1).unwrap());
            }
        }
    }

    #[test]
    fn conjectures_for_n_one() {
        for m in 1..=3 {
            let row = conjecture_row(1, m, DEFAULT_MDIV_CAP).unwrap();
            assert!(row.all_agree(), "{row:?}");
        }
        assert!(conjecture_row(2, 1, DEFAULT_MDIV_CAP).unwrap().all_agree());
    }

    #[test]
    fn zeta_is_polynomial() {
        for n in 1..=2 {
            for m in 1..=3 {
                let p = build_mdiv(n, m, DEFAULT_MDIV_CAP).unwrap();
                let r = rank_of(&p).expect("graded");
                assert!(zeta_values_polynomial(&p, r), "n={n} m={m}");
            }
        }
    }
}
