//! Noncrossing partitions with odd blocks and odd gaps, closed-form counts,
//! intervals below two even cycles, and the k-cycle analogues.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{CycleGenerator, GeneratorFamily, Permutation};
use crate::poly::{binomial, factorial, generalized_binomial, rat, ExactPolynomial};
use crate::prefix::{GeneratorContext, IntervalPoset, LengthMode, DEFAULT_INTERVAL_CAP};

/// Largest degree for which ONC enumeration is attempted.
pub const ONC_CAP: usize = 15;

/// `x <= (1 2 ... N)` in the absolute order.
pub fn is_noncrossing(x: &Permutation) -> bool {
    let n = x.degree();
    let c = Permutation::long_cycle(n);
    let y = &x.inverse() * &c;
    x.reflection_length() + y.reflection_length() == n - 1
}

/// Every cycle is increasing from its minimum and no two blocks cross.
pub fn is_noncrossing_geometric(x: &Permutation) -> bool {
    let blocks = x.all_cycles();
    for b in &blocks {
        if b.windows(2).any(|w| w[0] > w[1]) {
            return false;
        }
    }
    let n = x.degree();
    let mut block_of = vec![0usize; n + 1];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            block_of[v] = i;
        }
    }
    for a in 1..=n {
        for b in a + 1..=n {
            if block_of[a] == block_of[b] {
                continue;
            }
            for c in b + 1..=n {
                if block_of[c] != block_of[a] {
                    continue;
                }
                for d in c + 1..=n {
                    if block_of[d] == block_of[b] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// First cycle (sorted) violating odd length or odd consecutive gaps.
fn od_violation(x: &Permutation) -> Option<Vec<usize>> {
    x.all_cycles().into_iter().find_map(|mut c| {
        c.sort_unstable();
        let ok = c.len() % 2 == 1 && c.windows(2).all(|w| (w[1] - w[0]) % 2 == 1);
        (!ok).then_some(c)
    })
}

/// First `j` violating `j < x(j)  iff  x(j) - j odd`.
fn p_violation(x: &Permutation) -> Option<usize> {
    (1..=x.degree()).find(|&j| {
        let xj = x.image(j);
        let up = j < xj;
        let odd = xj.abs_diff(j) % 2 == 1;
        up != odd
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OncWitness {
    pub is_nc: bool,
    pub od_ok: bool,
    pub p_ok: bool,
    pub violating_cycle: Option<Vec<usize>>,
    pub violating_index: Option<usize>,
}

impl OncWitness {
    pub fn is_member(&self) -> bool {
        self.is_nc && self.od_ok
    }
}

pub fn onc_membership(x: &Permutation) -> OncWitness {
    let violating_cycle = od_violation(x);
    let violating_index = p_violation(x);
    OncWitness {
        is_nc: is_noncrossing(x),
        od_ok: violating_cycle.is_none(),
        p_ok: violating_index.is_none(),
        violating_cycle,
        violating_index,
    }
}

/// Noncrossing partitions of `[n]` as permutations with increasing cycles.
/// With `odd_blocks`, only partitions whose blocks have odd size and odd gaps.
pub fn enumerate_nc(n: usize, odd_blocks: bool) -> Vec<Permutation> {
    let points: Vec<usize> = (1..=n).collect();
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    nc_rec(&[&points[..]], &mut blocks, odd_blocks, &mut |bs| {
        out.push(Permutation::from_cycles(n, bs).expect("blocks partition [n]"));
    });
    out.sort_by_cached_key(|x| x.to_string());
    out
}

// partitions each segment in `pending` noncrossingly, one segment at a time
fn nc_rec(
    pending: &[&[usize]],
    blocks: &mut Vec<Vec<usize>>,
    odd_blocks: bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    let Some((first, rest)) = pending.split_first() else {
        visit(blocks);
        return;
    };
    if first.is_empty() {
        nc_rec(rest, blocks, odd_blocks, visit);
        return;
    }
    let seg = *first;
    // choose the block of seg[0] as an increasing subsequence starting at index 0
    let mut chosen = vec![0usize];
    choose_block(seg, &mut chosen, rest, blocks, odd_blocks, visit);
}

fn choose_block(
    seg: &[usize],
    chosen: &mut Vec<usize>,
    rest: &[&[usize]],
    blocks: &mut Vec<Vec<usize>>,
    odd_blocks: bool,
    visit: &mut dyn FnMut(&[Vec<usize>]),
) {
    // close the block here
    if !odd_blocks || chosen.len() % 2 == 1 {
        let block: Vec<usize> = chosen.iter().map(|&i| seg[i]).collect();
        let mut gaps: Vec<&[usize]> = chosen
            .windows(2)
            .map(|w| &seg[w[0] + 1..w[1]])
            .collect();
        gaps.push(&seg[chosen.last().unwrap() + 1..]);
        gaps.extend_from_slice(rest);
        blocks.push(block);
        nc_rec(&gaps, blocks, odd_blocks, visit);
        blocks.pop();
    }
    let last = *chosen.last().unwrap();
    for next in last + 1..seg.len() {
        if odd_blocks && (seg[next] - seg[last]).is_multiple_of(2) {
            continue;
        }
        chosen.push(next);
        choose_block(seg, chosen, rest, blocks, odd_blocks, visit);
        chosen.pop();
    }
}

/// The elements of ONC_N. Odd degrees use downward cover search below the long
/// cycle; even degrees filter noncrossing partitions by the odd-block property.
pub fn enumerate_onc(n: usize) -> Result<Vec<Permutation>> {
    if n > ONC_CAP {
        return Err(Error::DegreeAboveCap { degree: n, cap: ONC_CAP });
    }
    if n % 2 == 1 && n >= 3 {
        Ok(onc_interval(n)?.elements().to_vec())
    } else {
        Ok(enumerate_nc(n, true))
    }
}

/// `[e, (1 2 ... N)]` under 3-cycles, for odd `N`.
pub fn onc_interval(n: usize) -> Result<IntervalPoset> {
    if n.is_multiple_of(2) || n < 3 {
        return Err(Error::ParameterOutOfRange(format!("ONC interval needs odd degree >= 3, got {n}")));
    }
    if n > ONC_CAP {
        return Err(Error::DegreeAboveCap { degree: n, cap: ONC_CAP });
    }
    let ctx = GeneratorContext::three_cycles(n)?;
    ctx.interval(&Permutation::identity(n), &Permutation::long_cycle(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedCount {
    CardinalityOdd,
    CardinalityEven,
    Rank(usize),
    MaxChains,
    /// The signed Möbius number.
    Moebius,
    IntervalCount,
}

fn ratio(num: BigUint, den: u64) -> BigUint {
    let den = BigUint::from(den);
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Closed-form counts for ONC_{2n+1} (and ONC_{2n} for `CardinalityEven`).
pub fn closed_count(n: usize, kind: ClosedCount) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::ParameterOutOfRange("n must be at least 1".into()));
    }
    let n64 = n as u64;
    let v: BigInt = match kind {
        ClosedCount::CardinalityOdd => ratio(binomial(3 * n64 + 1, n64), n64 + 1).into(),
        ClosedCount::CardinalityEven => ratio(binomial(3 * n64, n64), 2 * n64 + 1).into(),
        ClosedCount::Rank(k) => {
            if k > n {
                return Err(Error::ParameterOutOfRange(format!("rank {k} exceeds {n}")));
            }
            let k = k as u64;
            let num = binomial(2 * n64 + 1 - k, k) * binomial(n64 + 1 + k, n64 - k) * (2 * n64 + 1);
            ratio(num, (2 * n64 + 1 - k) * (n64 + 1 + k)).into()
        }
        ClosedCount::MaxChains => BigUint::from(2 * n64 + 1).pow(n as u32 - 1).into(),
        ClosedCount::Moebius => {
            let abs: BigInt = ratio(binomial(4 * n64 + 1, n64), 4 * n64 + 1).into();
            if n.is_multiple_of(2) {
                abs
            } else {
                -abs
            }
        }
        ClosedCount::IntervalCount => ratio(binomial(5 * n64 + 3, n64) * 3u32, 5 * n64 + 3).into(),
    };
    Ok(v)
}

/// `Z(q) = q/(q(2n+1)-n) C(q(2n+1)-n, n)` as a polynomial in `q`.
pub fn zeta_closed_form(n: usize) -> ExactPolynomial {
    // q/(M) C(M, n) = q (M-1)(M-2)...(M-n+1)/n! with M = q(2n+1) - n
    let m = ExactPolynomial::linear(rat(2 * n as i64 + 1), rat(-(n as i64)));
    let mut acc = ExactPolynomial::variable();
    for i in 1..n {
        acc = &acc * &(&m - &ExactPolynomial::constant(rat(i as i64)));
    }
    acc.scale(&BigRational::new(BigInt::one(), factorial(n as u64).into()))
}

/// The zeta formula evaluated directly at an integer `q`.
pub fn zeta_closed_value(n: usize, q: i64) -> Result<BigRational> {
    let m = q * (2 * n as i64 + 1) - n as i64;
    if m == 0 {
        return Err(Error::ZeroDenominator(format!("zeta at n={n}, q={q}")));
    }
    Ok(rat(q) / rat(m) * generalized_binomial(&rat(m), n as u64))
}

/// Number of multichains of ONC_{2n+1} with rank jump vector `r`.
pub fn rank_jump_count(n: usize, r: &[usize]) -> Result<BigUint> {
    let sum: usize = r.iter().sum();
    if sum != n {
        return Err(Error::RankJumpMismatch { sum, expected: n });
    }
    if r.is_empty() {
        return Err(Error::ParameterOutOfRange("empty rank jump vector".into()));
    }
    let big_n = 2 * n as u64 + 1;
    let mut num = BigUint::from(big_n).pow(r.len() as u32 - 1);
    let mut den = BigUint::one();
    for &ri in r {
        let ri = ri as u64;
        num *= binomial(big_n - ri, ri);
        den *= big_n - ri;
    }
    Ok(num / den)
}

/// Both sides of
/// `sum_{n_1+...+n_r=n} prod a_i/(a_i+b n_i) C(a_i+b n_i, n_i) = a/(a+bn) C(a+bn, n)`.
pub fn rothe_hagen(a: &[i64], b: i64, n: usize) -> Result<(BigRational, BigRational)> {
    if a.is_empty() {
        return Err(Error::ParameterOutOfRange("need at least one a_i".into()));
    }
    let term = |ai: i64, ni: usize| -> Result<BigRational> {
        let top = ai + b * ni as i64;
        if top == 0 {
            return Err(Error::ZeroDenominator(format!("a_i + b n_i with a_i={ai}, n_i={ni}")));
        }
        Ok(rat(ai) / rat(top) * generalized_binomial(&rat(top), ni as u64))
    };
    // reject every zero denominator up front, whichever composition uses it
    for &ai in a {
        for ni in 0..=n {
            term(ai, ni)?;
        }
    }
    let total: i64 = a.iter().sum();
    let rhs = term(total, n)?;
    let mut lhs = BigRational::zero();
    let mut parts = vec![0usize; a.len()];
    for_each_composition(n, a.len(), &mut parts, 0, &mut |parts| {
        let mut prod = BigRational::one();
        for (&ai, &ni) in a.iter().zip(parts) {
            prod *= term(ai, ni).expect("checked above");
        }
        lhs += prod;
    });
    Ok((lhs, rhs))
}

/// Visits every weak composition of `n` into `len` parts.
pub fn for_each_composition(n: usize, len: usize, parts: &mut [usize], idx: usize, visit: &mut dyn FnMut(&[usize])) {
    if idx + 1 == len {
        parts[idx] = n;
        visit(parts);
        return;
    }
    for v in 0..=n {
        parts[idx] = v;
        for_each_composition(n - v, len, parts, idx + 1, visit);
    }
}

/// The product of two even cycles `(a_1 ... a_{2p})(b_1 ... b_{2q})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEvenCycleTarget {
    pub p: usize,
    pub q: usize,
    pub a_labels: Vec<usize>,
    pub b_labels: Vec<usize>,
}

impl TwoEvenCycleTarget {
    /// Default labels `a_i = i`, `b_j = 2p + j`.
    pub fn new(p: usize, q: usize) -> Result<Self> {
        if p == 0 || q == 0 {
            return Err(Error::ParameterOutOfRange(format!("p={p}, q={q}")));
        }
        Ok(TwoEvenCycleTarget {
            p,
            q,
            a_labels: (1..=2 * p).collect(),
            b_labels: (2 * p + 1..=2 * p + 2 * q).collect(),
        })
    }

    pub fn with_labels(a_labels: Vec<usize>, b_labels: Vec<usize>) -> Result<Self> {
        if a_labels.is_empty() || b_labels.is_empty() || a_labels.len() % 2 == 1 || b_labels.len() % 2 == 1 {
            return Err(Error::ParameterOutOfRange("cycle lengths must be positive and even".into()));
        }
        Ok(TwoEvenCycleTarget { p: a_labels.len() / 2, q: b_labels.len() / 2, a_labels, b_labels })
    }

    pub fn degree(&self) -> usize {
        self.a_labels.iter().chain(&self.b_labels).copied().max().unwrap_or(0)
    }

    pub fn to_permutation(&self) -> Result<Permutation> {
        Permutation::from_cycles(self.degree(), &[&self.a_labels, &self.b_labels])
    }

    fn a_index(&self, v: usize) -> Option<usize> {
        self.a_labels.iter().position(|&x| x == v).map(|i| i + 1)
    }

    fn b_index(&self, v: usize) -> Option<usize> {
        self.b_labels.iter().position(|&x| x == v).map(|i| i + 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorClass {
    PureA,
    PureB,
    Mixed(Parity),
}

/// Pure or mixed; a mixed 3-cycle is rotated to `(a_i a_j b_k)` or
/// `(a_i b_j b_k)` and its parity is that of `k - i`.
pub fn classify_generator(target: &TwoEvenCycleTarget, a: &CycleGenerator) -> Result<GeneratorClass> {
    let e = a.entries();
    let sides: Vec<bool> = e
        .iter()
        .map(|&v| match (target.a_index(v), target.b_index(v)) {
            (Some(_), _) => Ok(true),
            (None, Some(_)) => Ok(false),
            _ => Err(Error::SupportOutsideTarget(a.to_string())),
        })
        .collect::<Result<_>>()?;
    let in_a = sides.iter().filter(|&&s| s).count();
    if in_a == e.len() {
        return Ok(GeneratorClass::PureA);
    }
    if in_a == 0 {
        return Ok(GeneratorClass::PureB);
    }
    let len = e.len();
    // rotation starting at an a-entry whose cyclic predecessor is a b-entry
    let start = (0..len)
        .find(|&s| sides[s] && !sides[(s + len - 1) % len])
        .expect("mixed cycle has such a position");
    let rotated: Vec<usize> = (0..len).map(|t| e[(start + t) % len]).collect();
    let i = target.a_index(rotated[0]).unwrap();
    let k = target.b_index(rotated[len - 1]).unwrap();
    let parity = if (k as i64 - i as i64).rem_euclid(2) == 1 { Parity::Odd } else { Parity::Even };
    Ok(GeneratorClass::Mixed(parity))
}

/// Pure elements have every cycle inside one of the two supports; a pure
/// element is even when it has an even cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ElementClass {
    PureEven,
    PureOdd,
    Mixed,
}

pub fn classify_element(target: &TwoEvenCycleTarget, y: &Permutation) -> ElementClass {
    let mut pure = true;
    let mut has_even = false;
    for c in y.cycles() {
        let in_a = c.iter().filter(|&&v| target.a_index(v).is_some()).count();
        let in_b = c.iter().filter(|&&v| target.b_index(v).is_some()).count();
        if !(in_a == c.len() || in_b == c.len()) {
            pure = false;
        }
        if c.len() % 2 == 0 {
            has_even = true;
        }
    }
    match (pure, has_even) {
        (false, _) => ElementClass::Mixed,
        (true, true) => ElementClass::PureEven,
        (true, false) => ElementClass::PureOdd,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XpqNumerology {
    pub p: usize,
    pub q: usize,
    pub mixed: usize,
    pub total: usize,
    pub moebius: BigInt,
    pub rank_sizes: Vec<usize>,
    pub max_chains: BigUint,
    pub pure_even: usize,
    pub pure_odd: usize,
}

/// Builds `[e, x_{p,q}]` and collects its statistics.
pub fn xpq_numerology(p: usize, q: usize, cap: usize) -> Result<XpqNumerology> {
    let target = TwoEvenCycleTarget::new(p, q)?;
    let x = target.to_permutation()?;
    let n = x.degree();
    let ctx = GeneratorContext::three_cycles(n)?;
    let iv = ctx.interval_capped(&Permutation::identity(n), &x, cap)?;
    let (mut mixed, mut pure_even, mut pure_odd) = (0, 0, 0);
    for y in iv.elements() {
        match classify_element(&target, y) {
            ElementClass::Mixed => mixed += 1,
            ElementClass::PureEven => pure_even += 1,
            ElementClass::PureOdd => pure_odd += 1,
        }
    }
    Ok(XpqNumerology {
        p,
        q,
        mixed,
        total: iv.len(),
        moebius: iv.moebius(),
        rank_sizes: iv.rank_sizes(),
        max_chains: iv.count_maximal_chains(),
        pure_even,
        pure_odd,
    })
}

pub fn xpq_numerology_default(p: usize, q: usize) -> Result<XpqNumerology> {
    xpq_numerology(p, q, DEFAULT_INTERVAL_CAP)
}

/// `2 (p+q-1)! (2p)^p (2q)^q / ((p-1)! (q-1)!)`.
pub fn xpq_max_chains_closed(p: usize, q: usize) -> BigUint {
    let (p64, q64) = (p as u64, q as u64);
    let num = factorial(p64 + q64 - 1)
        * BigUint::from(2 * p64).pow(p as u32)
        * BigUint::from(2 * q64).pow(q as u32)
        * 2u32;
    num / (factorial(p64 - 1) * factorial(q64 - 1))
}

/// `C(3p-1, p-1) C(3q-1, q-1)`.
pub fn xpq_pure_closed(p: usize, q: usize) -> BigUint {
    let (p64, q64) = (p as u64, q as u64);
    binomial(3 * p64 - 1, p64 - 1) * binomial(3 * q64 - 1, q64 - 1)
}

/// Number of elements below `(1 2 ... (k-1)n+1)` under k-cycles:
/// `2/((k-1)n+2) C(kn+1, n)`.
pub fn k_count_below_long_cycle(n: usize, k: usize) -> Result<BigUint> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!("k={k}")));
    }
    let (n64, k64) = (n as u64, k as u64);
    Ok(binomial(k64 * n64 + 1, n64) * 2u32 / ((k64 - 1) * n64 + 2))
}

/// `q/((q-1)(k-1)n+q) C((q-1)(k-1)n+q+n-1, n)`.
pub fn k_zeta_value(n: usize, k: usize, q: i64) -> Result<BigRational> {
    if k < 3 {
        return Err(Error::ParameterOutOfRange(format!("k={k}")));
    }
    let (n, k) = (n as i64, k as i64);
    let den = (q - 1) * (k - 1) * n + q;
    if den == 0 {
        return Err(Error::ZeroDenominator(format!("k-cycle zeta at n={n}, k={k}, q={q}")));
    }
    let top = (q - 1) * (k - 1) * n + q + n - 1;
    Ok(rat(q) / rat(den) * generalized_binomial(&rat(top), n as u64))
}

/// `[e, (1 2 ... (k-1)n+1)]` under k-cycles, with lengths from the search oracle.
pub fn k_interval_by_oracle(n: usize, k: usize) -> Result<IntervalPoset> {
    let degree = (k - 1) * n + 1;
    let ctx = GeneratorContext::new(degree, GeneratorFamily::KCycles(k), LengthMode::BfsOracle)?;
    ctx.interval(&Permutation::identity(degree), &Permutation::long_cycle(degree))
}
