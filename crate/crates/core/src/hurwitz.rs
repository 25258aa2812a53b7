//! Hurwitz action on words of 3-cycles: single moves, braid words, reduced
//! words, orbit decomposition and the orbit invariants (matching of even
//! cycles and parity of mixed letters).
//!
//! A word `t_1 t_2 ... t_k` represents the product `t_1 t_2 ... t_k`. Braid
//! words act with their rightmost generator first.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::noncrossing::{classify_generator, GeneratorClass, Parity, TwoEvenCycleTarget};
use crate::perm::{CycleGenerator, Permutation};
use crate::poly::rising_half;
use crate::prefix::GeneratorContext;

/// Default cap on the number of reduced words.
pub const DEFAULT_WORD_CAP: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationWord {
    degree: usize,
    letters: Vec<CycleGenerator>,
}

impl FactorizationWord {
    pub fn new(degree: usize, letters: Vec<CycleGenerator>) -> Result<Self> {
        for a in &letters {
            if a.max_entry() > degree {
                return Err(Error::EntryOutOfRange { entry: a.max_entry(), degree });
            }
        }
        Ok(FactorizationWord { degree, letters })
    }

    /// Parses juxtaposed cycles such as `(1 2 3)(3 4 5)`; each cycle is one letter.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let letters = crate::perm::parse_cycles(text)?
            .iter()
            .map(|c| CycleGenerator::new(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, letters)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn letters(&self) -> &[CycleGenerator] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for a in &self.letters {
            acc = &acc * &a.to_permutation(self.degree).expect("checked degree");
        }
        acc
    }

    /// Reduced for 3-cycles: every letter is a 3-cycle and the length is `l_3` of the product.
    pub fn is_reduced(&self) -> bool {
        if self.letters.iter().any(|a| a.len() != 3) {
            return false;
        }
        let x = self.product();
        x.is_even() && (self.degree - x.ocyc()) / 2 == self.letters.len()
    }
}

impl fmt::Display for FactorizationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("()");
        }
        for a in &self.letters {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

// image of p under the inverse of the cycle a
fn cycle_inverse_image(a: &CycleGenerator, p: usize) -> usize {
    let e = a.entries();
    match e.iter().position(|&v| v == p) {
        Some(i) => e[(i + e.len() - 1) % e.len()],
        None => p,
    }
}

fn cycle_image(a: &CycleGenerator, p: usize) -> usize {
    let e = a.entries();
    match e.iter().position(|&v| v == p) {
        Some(i) => e[(i + 1) % e.len()],
        None => p,
    }
}

/// `b^{-1} a b`.
fn conj(a: &CycleGenerator, b: &CycleGenerator) -> CycleGenerator {
    let e: Vec<usize> = a.entries().iter().map(|&p| cycle_inverse_image(b, p)).collect();
    CycleGenerator::new(&e).expect("conjugate of a cycle")
}

/// `b a b^{-1}`.
fn conj_inv(a: &CycleGenerator, b: &CycleGenerator) -> CycleGenerator {
    let e: Vec<usize> = a.entries().iter().map(|&p| cycle_image(b, p)).collect();
    CycleGenerator::new(&e).expect("conjugate of a cycle")
}

fn step_in_place(letters: &mut [CycleGenerator], i: usize, inverse: bool) {
    let (a, b) = (letters[i - 1].clone(), letters[i].clone());
    if inverse {
        letters[i - 1] = conj_inv(&b, &a);
        letters[i] = a;
    } else {
        letters[i] = conj(&a, &b);
        letters[i - 1] = b;
    }
}

/// `sigma_i` (or its inverse) on positions `i, i+1`, 1-based.
pub fn hurwitz_step(w: &FactorizationWord, i: usize, inverse: bool) -> Result<FactorizationWord> {
    if i == 0 || i >= w.len() {
        return Err(Error::IndexOutOfRange { index: i, len: w.len() });
    }
    let mut out = w.clone();
    step_in_place(&mut out.letters, i, inverse);
    Ok(out)
}

/// A product of generators `sigma_i^{+-1}`, written left to right.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BraidWord {
    gens: Vec<(usize, bool)>,
}

impl BraidWord {
    pub fn empty() -> Self {
        BraidWord::default()
    }

    pub fn sigma(i: usize) -> Self {
        BraidWord { gens: vec![(i, false)] }
    }

    pub fn sigma_inv(i: usize) -> Self {
        BraidWord { gens: vec![(i, true)] }
    }

    /// Generators as `(index, inverted)`, leftmost first.
    pub fn generators(&self) -> &[(usize, bool)] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn then(mut self, other: &BraidWord) -> Self {
        self.gens.extend_from_slice(&other.gens);
        self
    }

    pub fn pow(&self, e: usize) -> Self {
        BraidWord { gens: (0..e).flat_map(|_| self.gens.iter().copied()).collect() }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { gens: self.gens.iter().rev().map(|&(i, inv)| (i, !inv)).collect() }
    }

    /// `sigma_from sigma_{from+1} ... sigma_to`; empty when `to < from`.
    fn run(from: usize, to: usize, inverse: bool) -> Self {
        if to < from {
            return Self::empty();
        }
        BraidWord { gens: (from..=to).map(|i| (i, inverse)).collect() }
    }

    /// `sigma_from sigma_{from-1} ... sigma_to`; empty when `from < to`.
    fn run_down(from: usize, to: usize, inverse: bool) -> Self {
        if from < to {
            return Self::empty();
        }
        BraidWord { gens: (to..=from).rev().map(|i| (i, inverse)).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> =
            self.gens.iter().map(|&(i, inv)| if inv { format!("s{i}^-1") } else { format!("s{i}") }).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn apply_braid(w: &FactorizationWord, braid: &BraidWord) -> Result<FactorizationWord> {
    let mut out = w.clone();
    for &(i, inv) in braid.gens.iter().rev() {
        if i == 0 || i >= out.len() {
            return Err(Error::IndexOutOfRange { index: i, len: out.len() });
        }
        step_in_place(&mut out.letters, i, inv);
    }
    Ok(out)
}

/// Braid words used to move letters around in words for long cycles and for
/// two even cycles. Runs whose index sequence would be non-monotone are empty.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidKind {
    /// `(sigma_{L-1}^{-1} ... sigma_1^{-1})^L` on words of length `L`.
    Gamma { len: usize },
    /// `(sigma_1 ... sigma_{L-1})^L`, conjugation of every letter by the product.
    FullTwist { len: usize },
    /// `sigma_1^{-1} ... sigma_k^{-1}`.
    LeadShift { k: usize },
    /// `sigma_1^2 sigma_2 ... sigma_{k+j+1}`, taking `lead_word(n, k, j)` to `lead_word(n, k, j+1)`.
    LeadStep { k: usize, j: usize },
    /// `sigma_1^{-1} sigma_2^{-2} sigma_3 ... sigma_{i+1}`.
    OmegaII { i: usize },
    /// `sigma_1^2 sigma_2 ... sigma_{k-1} sigma_k^{-2} sigma_{k+1} ... sigma_{i+k-1}`.
    Tau { i: usize, k: usize },
    /// `omega_p` for `k = 2`, else `tau_{p,k} tau_{p,k-1} ... tau_{p,3} omega_p`.
    BetaII { p: usize, k: usize },
    /// `sigma_1^2 sigma_2 ... sigma_{k-2} sigma_{k-1}^2`.
    MuII { k: usize },
    /// `mu_k^j beta_{p,k}`.
    Alpha { p: usize, k: usize, j: usize },
    /// `sigma_i^2 sigma_{i+1}`.
    MuIV { i: usize },
    /// `sigma_3^{-1} ... sigma_{i+1}^{-1}`.
    Nu { i: usize },
    /// `mu_{i+1} mu_i ... mu_2`.
    OmegaIV { i: usize },
    /// `nu_j nu_i nu_{i-1} ... nu_2`.
    Xi { j: usize, i: usize },
    /// `sigma_1^{-1} omega_j sigma_1^{-1} sigma_2^{-1} xi_{k,j}`.
    BetaIV { k: usize, j: usize },
}

pub fn make_braid(kind: BraidKind) -> BraidWord {
    use BraidKind::*;
    let s = BraidWord::sigma;
    let si = BraidWord::sigma_inv;
    match kind {
        Gamma { len } => BraidWord::run_down(len.saturating_sub(1), 1, true).pow(len),
        FullTwist { len } => BraidWord::run(1, len.saturating_sub(1), false).pow(len),
        LeadShift { k } => BraidWord::run(1, k, true),
        LeadStep { k, j } => s(1).then(&s(1)).then(&BraidWord::run(2, k + j + 1, false)),
        OmegaII { i } => si(1).then(&si(2)).then(&si(2)).then(&BraidWord::run(3, i + 1, false)),
        Tau { i, k } => s(1)
            .then(&BraidWord::run(1, k - 1, false))
            .then(&si(k))
            .then(&si(k))
            .then(&BraidWord::run(k + 1, i + k - 1, false)),
        BetaII { p, k } => {
            let mut b = BraidWord::empty();
            for kk in (3..=k).rev() {
                b = b.then(&make_braid(Tau { i: p, k: kk }));
            }
            b.then(&make_braid(OmegaII { i: p }))
        }
        MuII { k } => s(1).then(&BraidWord::run(1, k - 2, false)).then(&s(k - 1)).then(&s(k - 1)),
        Alpha { p, k, j } => make_braid(MuII { k }).pow(j).then(&make_braid(BetaII { p, k })),
        MuIV { i } => s(i).then(&s(i)).then(&s(i + 1)),
        Nu { i } => BraidWord::run(3, i + 1, true),
        OmegaIV { i } => {
            let mut b = BraidWord::empty();
            if i + 1 >= 2 {
                for m in (2..=i + 1).rev() {
                    b = b.then(&make_braid(MuIV { i: m }));
                }
            }
            b
        }
        Xi { j, i } => {
            let mut b = make_braid(Nu { i: j });
            if i >= 2 {
                for m in (2..=i).rev() {
                    b = b.then(&make_braid(Nu { i: m }));
                }
            }
            b
        }
        BetaIV { k, j } => si(1)
            .then(&make_braid(OmegaIV { i: j }))
            .then(&si(1))
            .then(&si(2))
            .then(&make_braid(Xi { j: k, i: j })),
    }
}

/// All reduced words of `x` into 3-cycles, sorted.
pub fn enumerate_reduced(x: &Permutation, cap: usize) -> Result<Vec<FactorizationWord>> {
    let n = x.degree();
    if !x.is_even() {
        return Err(Error::NotInGeneratedGroup(x.to_string()));
    }
    if n < 3 {
        return Ok(vec![FactorizationWord { degree: n, letters: Vec::new() }]);
    }
    let ctx = GeneratorContext::three_cycles(n)?;
    let mut memo: HashMap<Permutation, Vec<Vec<CycleGenerator>>> = HashMap::new();
    let suffixes = words_into(&ctx, x, cap, &mut memo)?;
    let mut out: Vec<FactorizationWord> =
        suffixes.into_iter().map(|letters| FactorizationWord { degree: n, letters }).collect();
    out.sort();
    Ok(out)
}

// reduced words of y, built from lower covers; memoized on the element
fn words_into(
    ctx: &GeneratorContext,
    y: &Permutation,
    cap: usize,
    memo: &mut HashMap<Permutation, Vec<Vec<CycleGenerator>>>,
) -> Result<Vec<Vec<CycleGenerator>>> {
    if y.is_identity() {
        return Ok(vec![Vec::new()]);
    }
    if let Some(v) = memo.get(y) {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    for (lower, a) in ctx.lower_covers(y)? {
        for mut w in words_into(ctx, &lower, cap, memo)? {
            w.push(a.clone());
            out.push(w);
            if out.len() > cap {
                return Err(Error::TooManyWords { cap });
            }
        }
    }
    memo.insert(y.clone(), out.clone());
    Ok(out)
}

/// Pairing of the even cycles of `x` induced by the letters of a reduced
/// word, with the parity of the mixed letters for each pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WordInvariants {
    /// Pairs of even cycles (each in minimum-first rotation), sorted.
    pub matching: Vec<(Vec<usize>, Vec<usize>)>,
    /// Parity of the mixed letters of each pair, relative to the pair as listed.
    pub parities: Vec<Parity>,
    /// Whether all mixed letters of every pair agree in parity.
    pub consistent: bool,
}

pub fn word_invariants(w: &FactorizationWord, x: &Permutation) -> Result<WordInvariants> {
    if w.degree() != x.degree() || !w.is_reduced() || &w.product() != x {
        return Err(Error::NotReducedWord(w.to_string()));
    }
    let even: Vec<Vec<usize>> = x.cycles().into_iter().filter(|c| c.len() % 2 == 0).collect();
    let mut cycle_of = vec![usize::MAX; x.degree() + 1];
    for (i, c) in even.iter().enumerate() {
        for &v in c {
            cycle_of[v] = i;
        }
    }
    let mut parent: Vec<usize> = (0..even.len()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for a in w.letters() {
        let touched: Vec<usize> =
            a.entries().iter().map(|&v| cycle_of[v]).filter(|&c| c != usize::MAX).collect();
        for pair in touched.windows(2) {
            let (r0, r1) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
            parent[r0] = r1;
        }
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..even.len() {
        let r = find(&mut parent, i);
        classes.entry(r).or_default().push(i);
    }
    let mut pairs = Vec::new();
    for members in classes.values() {
        if members.len() != 2 {
            return Err(Error::NotReducedWord(format!("{w}: even cycles are not matched in pairs")));
        }
        pairs.push((members[0], members[1]));
    }
    pairs.sort_by(|a, b| even[a.0].cmp(&even[b.0]));
    let mut matching = Vec::new();
    let mut parities = Vec::new();
    let mut consistent = true;
    for (i, j) in pairs {
        let target = TwoEvenCycleTarget::with_labels(even[i].clone(), even[j].clone())?;
        let mut seen: Option<Parity> = None;
        for a in w.letters() {
            let meets_i = a.entries().iter().any(|&v| cycle_of[v] == i);
            let meets_j = a.entries().iter().any(|&v| cycle_of[v] == j);
            if !(meets_i && meets_j) {
                continue;
            }
            let GeneratorClass::Mixed(par) = classify_generator(&target, a)
                .map_err(|_| Error::NotReducedWord(format!("{w}: letter {a} leaves its pair")))?
            else {
                unreachable!("letter meets both cycles");
            };
            match seen {
                None => seen = Some(par),
                Some(p) if p != par => consistent = false,
                _ => {}
            }
        }
        let par = seen.ok_or_else(|| Error::NotReducedWord(format!("{w}: pair without mixed letter")))?;
        matching.push((even[i].clone(), even[j].clone()));
        parities.push(par);
    }
    Ok(WordInvariants { matching, parities, consistent })
}

/// `(2k)_k = (k+1)(k+2)...(2k)` for `2k` even cycles.
pub fn expected_orbit_count(x: &Permutation) -> u64 {
    let even = x.cycles().iter().filter(|c| c.len() % 2 == 0).count() as u64;
    let v = rising_half(even / 2);
    u64::try_from(v).expect("small orbit count")
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub size: usize,
    pub representative: String,
    pub matching: Vec<(String, String)>,
    pub parities: Vec<String>,
    /// Whether every word of the orbit has the same invariants.
    pub invariants_constant: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReport {
    pub element: String,
    pub degree: usize,
    pub word_count: usize,
    pub orbit_count: usize,
    pub expected_orbit_count: u64,
    pub orbits: Vec<OrbitSummary>,
    #[serde(skip)]
    pub words: Vec<FactorizationWord>,
    #[serde(skip)]
    pub orbit_of: Vec<usize>,
}

impl OrbitReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Word graph with `sigma_i` edges, nodes coloured by orbit.
    pub fn to_dot(&self) -> String {
        let palette = ["lightblue", "salmon", "palegreen", "khaki", "plum", "lightgray", "orange", "cyan"];
        let index: HashMap<&FactorizationWord, usize> = self.words.iter().enumerate().map(|(i, w)| (w, i)).collect();
        let mut s = String::from("digraph hurwitz {\n  node [style=filled, shape=box];\n");
        for (i, w) in self.words.iter().enumerate() {
            let color = palette[self.orbit_of[i] % palette.len()];
            s.push_str(&format!("  w{i} [label=\"{w}\", fillcolor={color}];\n"));
        }
        for (i, w) in self.words.iter().enumerate() {
            for k in 1..w.len() {
                let v = hurwitz_step(w, k, false).expect("valid index");
                let j = index[&v];
                if i != j {
                    s.push_str(&format!("  w{i} -> w{j} [label=\"s{k}\"];\n"));
                }
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Connected components of `Red_3(x)` under the Hurwitz moves.
pub fn orbit_decomposition(x: &Permutation, cap: usize) -> Result<OrbitReport> {
    let words = enumerate_reduced(x, cap)?;
    let index: HashMap<&FactorizationWord, usize> = words.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut orbit_of = vec![usize::MAX; words.len()];
    let mut orbits = Vec::new();
    for start in 0..words.len() {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = orbits.len();
        orbit_of[start] = id;
        let mut members = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            let w = &words[i];
            for k in 1..w.len() {
                for inv in [false, true] {
                    let v = hurwitz_step(w, k, inv)?;
                    let j = *index.get(&v).expect("Hurwitz moves preserve reduced words");
                    if orbit_of[j] == usize::MAX {
                        orbit_of[j] = id;
                        members.push(j);
                        stack.push(j);
                    }
                }
            }
        }
        // words are sorted, so the least index is the least word
        members.sort_unstable();
        let rep = &words[members[0]];
        let inv = word_invariants(rep, x)?;
        let mut constant = inv.consistent;
        for &m in &members[1..] {
            if word_invariants(&words[m], x)? != inv {
                constant = false;
            }
        }
        orbits.push(OrbitSummary {
            size: members.len(),
            representative: rep.to_string(),
            matching: inv
                .matching
                .iter()
                .map(|(a, b)| (cycle_string(a), cycle_string(b)))
                .collect(),
            parities: inv.parities.iter().map(|p| format!("{p:?}").to_lowercase()).collect(),
            invariants_constant: constant,
        });
    }
    Ok(OrbitReport {
        element: x.to_string(),
        degree: x.degree(),
        word_count: words.len(),
        orbit_count: orbits.len(),
        expected_orbit_count: expected_orbit_count(x),
        orbits,
        words,
        orbit_of,
    })
}

fn cycle_string(c: &[usize]) -> String {
    let parts: Vec<String> = c.iter().map(|v| v.to_string()).collect();
    format!("({})", parts.join(" "))
}

fn letter(e: [usize; 3]) -> CycleGenerator {
    CycleGenerator::new(&e).expect("distinct entries")
}

/// The two canonical reduced words of `(a_1 ... a_{2p})(b_1 ... b_{2q})`,
/// starting with an odd and an even mixed letter respectively.
pub fn canonical_words(target: &TwoEvenCycleTarget) -> Result<(FactorizationWord, FactorizationWord)> {
    let a = |i: usize| target.a_labels[i - 1];
    let b = |i: usize| target.b_labels[i - 1];
    let (p, q) = (target.p, target.q);
    let mut tail = Vec::new();
    for m in 1..p {
        tail.push(letter([a(2 * m), a(2 * m + 1), a(2 * m + 2)]));
    }
    for m in 1..q {
        tail.push(letter([b(2 * m), b(2 * m + 1), b(2 * m + 2)]));
    }
    let n = target.degree();
    let mut x1 = vec![letter([a(1), a(2), b(2)]), letter([a(2), b(2), b(1)])];
    x1.extend(tail.iter().cloned());
    let mut x2 = vec![letter([a(2), a(1), b(2)]), letter([a(1), b(2), b(1)])];
    x2.extend(tail);
    Ok((FactorizationWord::new(n, x1)?, FactorizationWord::new(n, x2)?))
}

/// The reduced word of `(1 2 ... 2n+1)`
/// `(1, 2k+2, 2k+2j+3) v_j ... v_1 u_1 u_3 ... u_{2k-1} u_{2k+2j+3} ... u_{2n-1}`
/// with `u_i = (i, i+1, i+2)` and `v_i = (2k+2, 2k+2i+1, 2k+2i+2)`.
/// At `j = 0` it is `sigma_1^{-1} ... sigma_k^{-1}` applied to `u_1 u_3 ... u_{2n-1}`.
pub fn lead_word(n: usize, k: usize, j: usize) -> Result<FactorizationWord> {
    if k + j >= n {
        return Err(Error::ParameterOutOfRange(format!("k={k}, j={j} for n={n}")));
    }
    let u = |i: usize| letter([i, i + 1, i + 2]);
    let mut w = vec![letter([1, 2 * k + 2, 2 * k + 2 * j + 3])];
    w.extend((1..=j).rev().map(|i| letter([2 * k + 2, 2 * k + 2 * i + 1, 2 * k + 2 * i + 2])));
    w.extend((0..k).map(|m| u(2 * m + 1)));
    w.extend((k + j + 1..n).map(|m| u(2 * m + 1)));
    FactorizationWord::new(2 * n + 1, w)
}

/// Expected value of `alpha_{p,k,j} . x_1` (and of `beta_{p,k} . x_1` at `j = 0`)
/// for `2 <= k <= q`, `0 <= j <= k-2`.
pub fn expected_alpha_word(target: &TwoEvenCycleTarget, k: usize, j: usize) -> Result<FactorizationWord> {
    let (p, q) = (target.p, target.q);
    if k < 2 || k > q || j + 2 > k {
        return Err(Error::ParameterOutOfRange(format!("k={k}, j={j} for q={q}")));
    }
    let a = |i: usize| target.a_labels[i - 1];
    let b = |i: usize| target.b_labels[i - 1];
    let mut w = vec![letter([a(1), b(2 * k - 1), b(2 * j + 2)])];
    for m in (1..=j).rev() {
        w.push(letter([b(2 * m), b(2 * m + 1), b(2 * k - 1)]));
    }
    for m in (j + 2..k).rev() {
        w.push(letter([a(1), b(2 * m - 1), b(2 * m)]));
    }
    w.push(letter([a(1), a(2), b(2 * j + 2)]));
    w.push(letter([b(1), b(2 * k - 1), b(2 * k)]));
    for m in 1..p {
        w.push(letter([a(2 * m), a(2 * m + 1), a(2 * m + 2)]));
    }
    for m in k..q {
        w.push(letter([b(2 * m), b(2 * m + 1), b(2 * m + 2)]));
    }
    FactorizationWord::new(target.degree(), w)
}

/// Expected value of `beta_{k,j} . x_1` for `0 <= j < k < p`. The run of
/// pure `a` letters skips `(a_{2k} a_{2k+1} a_{2k+2})`, whose entries are
/// consumed by the first two letters.
pub fn expected_beta_iv_word(target: &TwoEvenCycleTarget, k: usize, j: usize) -> Result<FactorizationWord> {
    let (p, q) = (target.p, target.q);
    if j >= k || k >= p {
        return Err(Error::ParameterOutOfRange(format!("k={k}, j={j} for p={p}")));
    }
    let a = |i: usize| target.a_labels[i - 1];
    let b = |i: usize| target.b_labels[i - 1];
    let mut w = vec![letter([a(2 * k + 1), a(2 * j + 2), b(2)]), letter([a(1), a(2 * k + 1), a(2 * k + 2)])];
    for m in (1..=j).rev() {
        w.push(letter([a(1), a(2 * m), a(2 * m + 1)]));
    }
    w.push(letter([a(2 * j + 2), b(2), b(1)]));
    for m in (j + 1..p).filter(|&m| m != k) {
        w.push(letter([a(2 * m), a(2 * m + 1), a(2 * m + 2)]));
    }
    for m in 1..q {
        w.push(letter([b(2 * m), b(2 * m + 1), b(2 * m + 2)]));
    }
    FactorizationWord::new(target.degree(), w)
}
