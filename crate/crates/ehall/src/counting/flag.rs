//! Flagged Quot scheme counts: block matrices preserving a full flag of
//! quotients on top of a d-dimensional base, with a cyclic framing, modulo
//! the flag-preserving group.
//!
//! For the supported base sizes (`d <= 1`) the top-left block vanishes, so
//! a point is a commuting strictly lower-triangular pair `(X', Y')`, a pair
//! of coupling columns `(x, y)` with `X' y = Y' x` when `d = 1`, and a
//! framing `v`. Joint images live in the bottom block, so the cyclic count
//! only depends on `dim(span(x, y) + Im X' + Im Y')`, and the column pairs
//! are tallied by that dimension through the projection away from
//! `Im X' + Im Y'` without enumerating them: the rank-at-most-one locus of
//! a linear family of column pairs is sized by a pencil of kernels.

use rayon::prelude::*;

use super::comm::{scan_x, CommModel};
use super::modp::{inv_mod, rank_inplace};
use super::records::{CountRecord, Family};
use super::{cyclic_vector_count, flag_group_order, require_prime, run_capped};
use crate::{Error, Result};

const MAXN: usize = 3;

// Echelon structure of a subspace of F^n given by generating vectors,
// supporting projection to the quotient.
struct Quotient {
    n: usize,
    p: u64,
    rows: Vec<[u64; MAXN]>, // echelon rows, pivot normalized to 1
    pivots: Vec<usize>,
    free: Vec<usize>, // non-pivot coordinates
}

impl Quotient {
    fn new(n: usize, p: u64, gens: &[[u64; MAXN]]) -> Self {
        let mut rows: Vec<[u64; MAXN]> = Vec::new();
        let mut pivots: Vec<usize> = Vec::new();
        for g in gens {
            let mut v = *g;
            for (row, &pc) in rows.iter().zip(&pivots) {
                if v[pc] != 0 {
                    let f = v[pc];
                    for c in 0..n {
                        v[c] = (v[c] + (p - f) * row[c]) % p;
                    }
                }
            }
            if let Some(lead) = (0..n).find(|&c| v[c] != 0) {
                let inv = inv_mod(v[lead], p);
                for c in 0..n {
                    v[c] = v[c] * inv % p;
                }
                rows.push(v);
                pivots.push(lead);
            }
        }
        let free = (0..n).filter(|c| !pivots.contains(c)).collect();
        Self {
            n,
            p,
            rows,
            pivots,
            free,
        }
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    // image of v in the quotient, as coordinates on the free positions
    fn project(&self, v: &[u64; MAXN]) -> [u64; MAXN] {
        let mut v = *v;
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            if v[pc] != 0 {
                let f = v[pc];
                for c in 0..self.n {
                    v[c] = (v[c] + (self.p - f) * row[c]) % self.p;
                }
            }
        }
        let mut out = [0u64; MAXN];
        for (i, &c) in self.free.iter().enumerate() {
            out[i] = v[c];
        }
        out
    }
}

// Number of elements of the column space spanned by `cols` (an m x tau
// matrix) lying in the kernel, i.e. q^(tau - rank).
fn kernel_size(mat: &[u64], m: usize, tau: usize, q: u64) -> u128 {
    let mut buf = [0u64; 6 * MAXN];
    buf[..m * tau].copy_from_slice(&mat[..m * tau]);
    let rank = rank_inplace(&mut buf[..m * tau], m, tau, q);
    (q as u128).pow((tau - rank) as u32)
}

// Tally of pairs (a, b) in the span of the columns of [A; B] by the rank of
// the m x 2 matrix [a b]: returns (count rank<=1 including zero, total).
fn rank_le1_count(a: &[u64], b: &[u64], m: usize, tau: usize, q: u64) -> (u128, u128) {
    let total = (q as u128).pow(tau as u32);
    if m <= 1 {
        return (total, total);
    }
    // ratio (1 : 0): b = 0
    let mut le1 = 1u128 + (kernel_size(b, m, tau, q) - 1);
    // ratio (t : 1): a - t b = 0
    let mut shifted = [0u64; 6 * MAXN];
    for t in 0..q {
        for i in 0..m * tau {
            shifted[i] = (a[i] + (q - t) * b[i]) % q;
        }
        le1 += kernel_size(&shifted, m, tau, q) - 1;
    }
    (le1, total)
}

struct PairStats {
    by_mu: Vec<u128>,
}

// Scans all commuting strictly lower-triangular pairs (X', Y') of size n,
// invoking `per_pair` with flat n x n matrices. Parallel over the corner
// entry of X (which never enters the commutator constraints but does enter
// the image statistics); merge is additive.
fn scan_pairs(
    n: usize,
    q: u64,
    per_pair: impl Fn(&[u64; 16], &[u64; 16], &mut PairStats) + Sync,
) -> Vec<u128> {
    if n == 1 {
        // the only strictly lower-triangular 1 x 1 matrix is zero
        let mut stats = PairStats {
            by_mu: vec![0u128; n + 2],
        };
        per_pair(&[0u64; 16], &[0u64; 16], &mut stats);
        return stats.by_mu;
    }
    let model = CommModel::new(n);
    let np = model.num_positions();
    let nc = model.constraint_terms.len();
    run_capped(|| {
        (0..q)
            .into_par_iter()
            .map(|corner| {
                let mut stats = PairStats {
                    by_mu: vec![0u128; n + 2],
                };
                let mut rows = vec![0u64; nc.max(1) * np];
                for first in 0..q {
                    scan_x(&model, q, first, |xfree| {
                        let mut x = xfree.to_vec();
                        x[model.corner] = corner;
                        model.fill_rows(&x, q, &mut rows[..nc * np]);
                        let mut buf = rows[..nc * np].to_vec();
                        let basis = nullspace_flat(&mut buf, nc, np, q);
                        let nb = basis.len();
                        let mut xm = [0u64; 16];
                        for (idx, &(i, j)) in model.positions.iter().enumerate() {
                            xm[(i - 1) * n + (j - 1)] = x[idx];
                        }
                        // odometer over the y solution space
                        let mut coords = vec![0u64; nb];
                        let total = (q as u128).pow(nb as u32);
                        let mut done = 0u128;
                        loop {
                            let mut ym = [0u64; 16];
                            for (i, &cv) in coords.iter().enumerate() {
                                if cv == 0 {
                                    continue;
                                }
                                for (idx, &(r, s)) in model.positions.iter().enumerate() {
                                    let cell = &mut ym[(r - 1) * n + (s - 1)];
                                    *cell = (*cell + cv * basis[i][idx]) % q;
                                }
                            }
                            per_pair(&xm, &ym, &mut stats);
                            done += 1;
                            if done == total {
                                break;
                            }
                            let mut i = 0;
                            while coords[i] + 1 == q {
                                coords[i] = 0;
                                i += 1;
                            }
                            coords[i] += 1;
                        }
                    });
                }
                stats.by_mu
            })
            .reduce(
                || vec![0u128; n + 2],
                |a, b| a.iter().zip(&b).map(|(x, y)| x + y).collect(),
            )
    })
}

fn nullspace_flat(buf: &mut [u64], nrows: usize, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    // reuse the FpMat nullspace on a copy; cold enough per X
    let m = super::modp::FpMat {
        p,
        rows: nrows,
        cols: ncols,
        a: buf.to_vec(),
    };
    m.nullspace()
}

// columns of a flat n x n matrix as [u64; MAXN] vectors, n <= MAXN
fn columns(m: &[u64; 16], n: usize) -> Vec<[u64; MAXN]> {
    (0..n)
        .map(|j| {
            let mut col = [0u64; MAXN];
            for i in 0..n {
                col[i] = m[i * n + j];
            }
            col
        })
        .collect()
}

/// Point count of the flagged Quot scheme for base size `d in {0, 1}`,
/// flag length `n in 1..=3`, framing rank `r in 1..=2`.
pub fn count_quot_flag(d: u32, n: u32, r: u32, q: u64) -> Result<CountRecord> {
    require_prime(q)?;
    if d > 1 || !(1..=3).contains(&n) || !(1..=2).contains(&r) {
        return Err(Error::Infeasible(format!(
            "count_quot_flag supports d in 0..=1, n in 1..=3, r in 1..=2; got d={d} n={n} r={r}"
        )));
    }
    let dim_total = d + n;
    let by_mu = mu_tally_cached(d, n, q);
    let raw: u128 = by_mu
        .iter()
        .enumerate()
        .map(|(mu, &cnt)| {
            if mu as u32 > dim_total {
                debug_assert_eq!(cnt, 0);
                0
            } else {
                cnt * cyclic_vector_count(dim_total, mu as u32, r, q)
            }
        })
        .sum();
    let group = flag_group_order(d, n, q);
    if raw % group != 0 {
        return Err(Error::NonIntegerQuotient { raw, group });
    }
    Ok(CountRecord {
        family: Family::QuotFlag,
        n: Some(n),
        d: Some(d),
        r: Some(r),
        lambda: None,
        mu: None,
        q,
        raw,
        group_order: Some(group),
        count: raw / group,
    })
}

// The tally of constrained pairs (plus coupling columns) by joint image
// dimension does not depend on the framing rank, so it is shared between
// the two supported ranks.
fn mu_tally_cached(d: u32, n: u32, q: u64) -> Vec<u128> {
    use std::sync::{Mutex, OnceLock};
    static CACHE: OnceLock<Mutex<std::collections::HashMap<(u32, u32, u64), Vec<u128>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(std::collections::HashMap::new()));
    if let Some(v) = cache.lock().unwrap().get(&(d, n, q)) {
        return v.clone();
    }
    let v = mu_tally(d, n, q);
    cache
        .lock()
        .unwrap()
        .entry((d, n, q))
        .or_insert_with(|| v.clone());
    v
}

fn mu_tally(d: u32, n: u32, q: u64) -> Vec<u128> {
    let nu = n as usize;
    if d == 0 {
        scan_pairs(nu, q, |xm, ym, stats| {
            let mut buf = [0u64; 2 * MAXN * MAXN];
            for i in 0..nu {
                for j in 0..nu {
                    buf[i * 2 * nu + j] = xm[i * nu + j];
                    buf[i * 2 * nu + nu + j] = ym[i * nu + j];
                }
            }
            let mu = rank_inplace(&mut buf[..nu * 2 * nu], nu, 2 * nu, q);
            stats.by_mu[mu] += 1;
        })
    } else {
        scan_pairs(nu, q, |xm, ym, stats| {
            // joint image of the triangular blocks
            let mut gens = columns(xm, nu);
            gens.extend(columns(ym, nu));
            let quotient = Quotient::new(nu, q, &gens);
            let w = quotient.dim();
            let m = nu - w;
            // solution space of X'y = Y'x: columns are (x | y)
            let mut sys = [0u64; MAXN * 2 * MAXN];
            for i in 0..nu {
                for j in 0..nu {
                    sys[i * 2 * nu + j] = (q - ym[i * nu + j]) % q;
                    sys[i * 2 * nu + nu + j] = xm[i * nu + j];
                }
            }
            let basis = nullspace_flat(&mut sys[..nu * 2 * nu], nu, 2 * nu, q);
            let s = basis.len();
            if m == 0 {
                stats.by_mu[w] += (q as u128).pow(s as u32);
                return;
            }
            // project the basis to the quotient and re-echelonize there
            let projected: Vec<[u64; 2 * MAXN]> = basis
                .iter()
                .map(|v| {
                    let mut xcol = [0u64; MAXN];
                    let mut ycol = [0u64; MAXN];
                    xcol[..nu].copy_from_slice(&v[..nu]);
                    ycol[..nu].copy_from_slice(&v[nu..2 * nu]);
                    let px = quotient.project(&xcol);
                    let py = quotient.project(&ycol);
                    let mut out = [0u64; 2 * MAXN];
                    out[..m].copy_from_slice(&px[..m]);
                    out[m..2 * m].copy_from_slice(&py[..m]);
                    out
                })
                .collect();
            let mut ech = [0u64; 6 * 2 * MAXN];
            for (i, v) in projected.iter().enumerate() {
                ech[i * 2 * m..(i + 1) * 2 * m].copy_from_slice(&v[..2 * m]);
            }
            let mut echbuf = ech;
            let tau = rank_inplace(&mut echbuf[..s * 2 * m], s, 2 * m, q);
            // columns of [A; B]: tau independent projected solutions
            let mut a = [0u64; 6 * MAXN];
            let mut b = [0u64; 6 * MAXN];
            for t in 0..tau {
                for i in 0..m {
                    a[i * tau + t] = echbuf[t * 2 * m + i];
                    b[i * tau + t] = echbuf[t * 2 * m + m + i];
                }
            }
            let mult = (q as u128).pow((s - tau) as u32);
            let (le1, total) = rank_le1_count(&a, &b, m, tau, q);
            stats.by_mu[w] += mult;
            stats.by_mu[w + 1] += mult * (le1 - 1);
            if m >= 2 {
                stats.by_mu[w + 2] += mult * (total - le1);
            }
        })
    }
}
