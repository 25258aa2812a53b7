//! CSV renderings of the three numerical tables.
//!
//! Polynomial cells list coefficients from degree 0 upward, separated by `;`.

use num_bigint::BigInt;

use crate::alt::rank_generating_polynomial;
use crate::error::{Error, Result};
use crate::noncrossing::{onc_interval, xpq_numerology, XpqNumerology};
use crate::poly::ExactPolynomial;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table1Row {
    pub n: usize,
    pub f: ExactPolynomial,
    pub ell3: ExactPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table2Row {
    pub n: usize,
    pub rank_numbers: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table3Row {
    pub p: usize,
    pub q: usize,
    pub mixed: usize,
    pub total: usize,
    pub moebius: BigInt,
    pub rank_numbers: Vec<usize>,
}

impl From<XpqNumerology> for Table3Row {
    fn from(x: XpqNumerology) -> Self {
        Table3Row { p: x.p, q: x.q, mixed: x.mixed, total: x.total, moebius: x.moebius, rank_numbers: x.rank_sizes }
    }
}

/// Largest `p+q` computed without `allow_large`.
pub const TABLE3_DEFAULT_MAX_PQ: usize = 5;

/// Maps `f` over `items` on up to `threads` workers, keeping input order.
pub fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = std::sync::atomic::AtomicUsize::new(0);
    let mut out: Vec<Option<R>> = (0..items.len()).map(|_| None).collect();
    let results = std::sync::Mutex::new(&mut out);
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                results.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    out.into_iter().map(|r| r.expect("every item mapped")).collect()
}

pub fn table1(max_n: usize, threads: usize) -> Result<Vec<Table1Row>> {
    let ns: Vec<usize> = (0..=max_n).collect();
    par_map(&ns, threads, |&n| rank_generating_polynomial(n).map(|(f, ell3)| Table1Row { n, f, ell3 }))
        .into_iter()
        .collect()
}

pub fn table2(max_n: usize, threads: usize) -> Result<Vec<Table2Row>> {
    let ns: Vec<usize> = (1..=max_n).collect();
    par_map(&ns, threads, |&n| onc_interval(2 * n + 1).map(|iv| Table2Row { n, rank_numbers: iv.rank_sizes() }))
        .into_iter()
        .collect()
}

/// Rows `(p, q)` with `1 <= p <= q` and `p + q <= max_pq`, ordered by `p+q`.
pub fn table3_parameters(max_pq: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for s in 2..=max_pq {
        for p in 1..=s / 2 {
            out.push((p, s - p));
        }
    }
    out
}

pub fn table3(max_pq: usize, allow_large: bool, cap: usize, threads: usize) -> Result<Vec<Table3Row>> {
    if max_pq > TABLE3_DEFAULT_MAX_PQ && !allow_large {
        return Err(Error::ParameterOutOfRange(format!(
            "p+q={max_pq} exceeds {TABLE3_DEFAULT_MAX_PQ}; pass allow_large"
        )));
    }
    let params = table3_parameters(max_pq);
    par_map(&params, threads, |&(p, q)| xpq_numerology(p, q, cap).map(Table3Row::from))
        .into_iter()
        .collect()
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(";")
}

pub fn table1_csv(rows: &[Table1Row]) -> String {
    let mut s = String::from("n,F_n,ell3_distribution\n");
    for r in rows {
        s += &format!("{},{},{}\n", r.n, r.f.to_csv_cell(), r.ell3.to_csv_cell());
    }
    s
}

pub fn table2_csv(rows: &[Table2Row]) -> String {
    let mut s = String::from("n,rank_numbers\n");
    for r in rows {
        s += &format!("{},{}\n", r.n, join(&r.rank_numbers));
    }
    s
}

pub fn table3_csv(rows: &[Table3Row]) -> String {
    let mut s = String::from("p,q,m,t,mu,r\n");
    for r in rows {
        s += &format!("{},{},{},{},{},{}\n", r.p, r.q, r.mixed, r.total, r.moebius, join(&r.rank_numbers));
    }
    s
}
