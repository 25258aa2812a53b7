//! Permutations of `[N]` and the cycle generators acting on them.
//!
//! Points are 1-based in every public signature, matching cycle notation.
//! Products follow the convention `(xy)(p) = x(y(p))`: the right factor is
//! applied first. With this convention, right-multiplying `w` by `(i j)` joins
//! the cycles of `w` ending at `i` and `j`, and right-multiplying by a 3-cycle
//! `(i j k)` joins three sequences ending at `i`, `j`, `k` in that order.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Largest degree for which whole-group enumeration is attempted.
pub const ORACLE_CAP: usize = 10;

/// A bijection of `[N]`. The degree is part of the value: permutations of
/// different degrees never compare equal and never compose.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images
    images: Box<[u8]>,
}

/// Cycle statistics of a permutation. Fixed points count as odd cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStats {
    /// Cycle lengths in weakly decreasing order, fixed points included.
    pub cycle_type: Vec<usize>,
    pub cyc: usize,
    pub ocyc: usize,
    pub support: Vec<usize>,
    pub is_even: bool,
    /// Reflection length `N - cyc`.
    pub ell2: usize,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= u8::MAX as usize, "degree {degree} too large");
        Permutation { images: (0..degree as u8).collect() }
    }

    /// Builds a permutation from its 1-based image list `[x(1), ..., x(N)]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n {
                return Err(Error::EntryOutOfRange { entry: img, degree: n });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::RepeatedEntry(img));
            }
            out.push((img - 1) as u8);
        }
        Ok(Permutation { images: out.into_boxed_slice() })
    }

    /// Builds a permutation from disjoint 1-based cycles; omitted points are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(degree: usize, cycles: &[C]) -> Result<Self> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut seen = vec![false; degree];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for &p in cycle {
                if p == 0 || p > degree {
                    return Err(Error::EntryOutOfRange { entry: p, degree });
                }
                if std::mem::replace(&mut seen[p - 1], true) {
                    return Err(Error::RepeatedEntry(p));
                }
            }
            for (idx, &p) in cycle.iter().enumerate() {
                let next = cycle[(idx + 1) % cycle.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { images: images.into_boxed_slice() })
    }

    /// Parses cycle notation such as `"(1 2 3)(4,5)"` or `"e"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Self::from_cycles(degree, &cycles)
    }

    /// The long cycle `(1 2 ... N)`.
    pub fn long_cycle(degree: usize) -> Self {
        let images: Vec<u8> = (0..degree).map(|i| ((i + 1) % degree) as u8).collect();
        Permutation { images: images.into_boxed_slice() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `x(p)` for a 1-based point `p`.
    pub fn image(&self, p: usize) -> usize {
        self.images[p - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `x * y` with `y` applied first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Permutation) -> Permutation {
        let images: Box<[u8]> =
            other.images.iter().map(|&p| self.images[p as usize]).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize] = i as u8;
        }
        Permutation { images: images.into_boxed_slice() }
    }

    /// `w^{-1} x w`.
    pub fn conjugate(&self, w: &Permutation) -> Result<Permutation> {
        w.inverse().compose(self)?.compose(w)
    }

    /// Nontrivial cycles in canonical form: each starts at its minimum, and
    /// cycles are sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.all_cycles().into_iter().filter(|c| c.len() > 1).collect()
    }

    /// All cycles including fixed points, canonical form.
    pub fn all_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.images[p] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// Number of cycles, fixed points included.
    pub fn cyc(&self) -> usize {
        self.cycle_counts().0
    }

    /// Number of odd-length cycles, fixed points included.
    pub fn ocyc(&self) -> usize {
        self.cycle_counts().1
    }

    // (cyc, ocyc) without allocating the cycles themselves
    fn cycle_counts(&self) -> (usize, usize) {
        let n = self.degree();
        let mut seen = [0u64; 4];
        let (mut cyc, mut ocyc) = (0, 0);
        for start in 0..n {
            if seen[start >> 6] & (1 << (start & 63)) != 0 {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while seen[p >> 6] & (1 << (p & 63)) == 0 {
                seen[p >> 6] |= 1 << (p & 63);
                len += 1;
                p = self.images[p] as usize;
            }
            cyc += 1;
            ocyc += len & 1;
        }
        (cyc, ocyc)
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.degree()).filter(|&p| self.image(p) != p).collect()
    }

    pub fn reflection_length(&self) -> usize {
        self.degree() - self.cyc()
    }

    pub fn is_even(&self) -> bool {
        self.reflection_length().is_multiple_of(2)
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.all_cycles().iter().map(Vec::len).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn stats(&self) -> CycleStats {
        let (cyc, ocyc) = self.cycle_counts();
        let ell2 = self.degree() - cyc;
        CycleStats {
            cycle_type: self.cycle_type(),
            cyc,
            ocyc,
            support: self.support(),
            is_even: ell2.is_multiple_of(2),
            ell2,
        }
    }

    /// Canonical cycle notation; the identity prints as `e`.
    pub fn notation(&self) -> String {
        self.to_string()
    }

    /// Position of this permutation in lexicographic order of image lists.
    pub fn lehmer_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0usize;
        let mut used = 0u64;
        for i in 0..n {
            let v = self.images[i] as usize;
            let smaller_unused = (0..v).filter(|&j| used & (1 << j) == 0).count();
            used |= 1 << v;
            rank = rank * (n - i) + smaller_unused;
        }
        rank
    }

    pub fn from_lehmer_rank(degree: usize, mut rank: usize) -> Permutation {
        let mut digits = vec![0usize; degree];
        for i in (0..degree).rev() {
            let base = degree - i;
            digits[i] = rank % base;
            rank /= base;
        }
        let mut pool: Vec<u8> = (0..degree as u8).collect();
        let images: Box<[u8]> = digits.into_iter().map(|d| pool.remove(d)).collect();
        Permutation { images }
    }
}

impl Mul for &Permutation {
    type Output = Permutation;

    /// Panics on a degree mismatch; use [`Permutation::compose`] for a checked product.
    fn mul(self, rhs: &Permutation) -> Permutation {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        self.mul_unchecked(rhs)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

/// Parses the cycle list of a cycle-notation string without fixing a degree.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let malformed = || Error::MalformedCycleNotation(text.to_string());
    let trimmed = text.trim();
    if trimmed == "e" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(malformed());
    }
    let mut cycles = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        rest = rest.strip_prefix('(').ok_or_else(malformed)?;
        let close = rest.find(')').ok_or_else(malformed)?;
        let body = &rest[..close];
        let mut cycle = Vec::new();
        for token in body.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let value: usize = token.parse().map_err(|_| malformed())?;
            cycle.push(value);
        }
        // separators only between integers: reject "(,1)" and "()"
        if cycle.is_empty() || body.trim_start().starts_with(',') || body.trim_end().ends_with(',') {
            return Err(malformed());
        }
        if body.contains(",,") {
            return Err(malformed());
        }
        cycles.push(cycle);
        rest = rest[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// The family of cycles generating a permutation group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorFamily {
    Transpositions,
    ThreeCycles,
    KCycles(usize),
}

impl GeneratorFamily {
    pub fn cycle_length(self) -> usize {
        match self {
            GeneratorFamily::Transpositions => 2,
            GeneratorFamily::ThreeCycles => 3,
            GeneratorFamily::KCycles(k) => k,
        }
    }

    /// `KCycles(2)` and `KCycles(3)` collapse to the named families.
    pub fn normalized(self) -> Self {
        match self {
            GeneratorFamily::KCycles(2) => GeneratorFamily::Transpositions,
            GeneratorFamily::KCycles(3) => GeneratorFamily::ThreeCycles,
            other => other,
        }
    }

    pub fn name(self) -> String {
        match self.normalized() {
            GeneratorFamily::Transpositions => "transpositions".into(),
            GeneratorFamily::ThreeCycles => "three_cycles".into(),
            GeneratorFamily::KCycles(k) => format!("k_cycles_{k}"),
        }
    }
}

impl fmt::Display for GeneratorFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// An oriented k-cycle `(e1 e2 ... ek)`, stored rotated so the minimum entry is first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleGenerator {
    entries: Vec<usize>,
}

impl CycleGenerator {
    pub fn new(entries: &[usize]) -> Result<Self> {
        if entries.len() < 2 {
            return Err(Error::MalformedCycleNotation(format!("{entries:?}")));
        }
        for (i, &e) in entries.iter().enumerate() {
            if e == 0 {
                return Err(Error::EntryOutOfRange { entry: 0, degree: 0 });
            }
            if entries[..i].contains(&e) {
                return Err(Error::RepeatedEntry(e));
            }
        }
        Ok(Self::canonical(entries.to_vec()))
    }

    fn canonical(mut entries: Vec<usize>) -> Self {
        let pos = entries
            .iter()
            .enumerate()
            .min_by_key(|&(_, &e)| e)
            .map(|(i, _)| i)
            .unwrap_or(0);
        entries.rotate_left(pos);
        CycleGenerator { entries }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        match cycles.as_slice() {
            [single] => Self::new(single),
            _ => Err(Error::MalformedCycleNotation(text.to_string())),
        }
    }

    /// Entries in canonical rotation.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> usize {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    pub fn to_permutation(&self, degree: usize) -> Result<Permutation> {
        Permutation::from_cycles(degree, &[&self.entries])
    }

    pub fn inverse(&self) -> CycleGenerator {
        let mut rev = self.entries.clone();
        rev[1..].reverse();
        CycleGenerator { entries: rev }
    }

    /// `w^{-1} a w`, which is the cycle `(w^{-1}(e1) ... w^{-1}(ek))`.
    pub fn conjugate_by(&self, w: &Permutation) -> CycleGenerator {
        let winv = w.inverse();
        Self::canonical(self.entries.iter().map(|&e| winv.image(e)).collect())
    }

    /// `w a w^{-1}`, the cycle `(w(e1) ... w(ek))`.
    pub fn conjugate_inverse_by(&self, w: &Permutation) -> CycleGenerator {
        Self::canonical(self.entries.iter().map(|&e| w.image(e)).collect())
    }

    pub fn contains(&self, p: usize) -> bool {
        self.entries.contains(&p)
    }
}

impl fmt::Display for CycleGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycleGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All cycles of the family on `[n]`, each exactly once.
pub fn enumerate_generators(n: usize, family: GeneratorFamily) -> Result<Vec<CycleGenerator>> {
    let k = family.cycle_length();
    if k < 2 || n < k {
        return Err(Error::DegreeTooSmall { degree: n, k });
    }
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(k);
    choose_subsets(1, n, k, &mut subset, &mut |set| {
        // the minimum stays first; arrange the rest in every order
        let mut rest = set[1..].to_vec();
        for_each_permutation(&mut rest, 0, &mut |arr| {
            let mut entries = Vec::with_capacity(k);
            entries.push(set[0]);
            entries.extend_from_slice(arr);
            out.push(CycleGenerator { entries });
        });
    });
    Ok(out)
}

fn choose_subsets(
    start: usize,
    n: usize,
    k: usize,
    current: &mut Vec<usize>,
    visit: &mut dyn FnMut(&[usize]),
) {
    if current.len() == k {
        visit(current);
        return;
    }
    for v in start..=n {
        if n - v + 1 < k - current.len() {
            break;
        }
        current.push(v);
        choose_subsets(v + 1, n, k, current, visit);
        current.pop();
    }
}

fn for_each_permutation(arr: &mut Vec<usize>, pos: usize, visit: &mut dyn FnMut(&[usize])) {
    if pos == arr.len() {
        visit(arr);
        return;
    }
    for i in pos..arr.len() {
        arr.swap(pos, i);
        for_each_permutation(arr, pos + 1, visit);
        arr.swap(pos, i);
    }
}

/// Iterator over every permutation of `[n]` in lexicographic order of image lists.
pub struct AllPermutations {
    current: Option<Vec<u8>>,
}

impl AllPermutations {
    pub fn new(n: usize) -> Self {
        AllPermutations { current: Some((0..n as u8).collect()) }
    }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let cur = self.current.take()?;
        let out = Permutation { images: cur.clone().into_boxed_slice() };
        let mut next = cur;
        if next.len() > 1 {
            if let Some(i) = (0..next.len() - 1).rev().find(|&i| next[i] < next[i + 1]) {
                let j = (i + 1..next.len()).rev().find(|&j| next[j] > next[i]).unwrap();
                next.swap(i, j);
                next[i + 1..].reverse();
                self.current = Some(next);
            }
        }
        Some(out)
    }
}

/// Every element of the alternating group of degree `n`, each once.
pub fn enumerate_alternating(n: usize) -> Result<impl Iterator<Item = Permutation>> {
    enumerate_alternating_capped(n, ORACLE_CAP)
}

pub fn enumerate_alternating_capped(
    n: usize,
    cap: usize,
) -> Result<impl Iterator<Item = Permutation>> {
    if n > cap {
        return Err(Error::DegreeAboveOracleCap { degree: n, cap });
    }
    if n == 0 {
        return Err(Error::DegreeTooSmall { degree: 0, k: 1 });
    }
    Ok(AllPermutations::new(n).filter(Permutation::is_even))
}
