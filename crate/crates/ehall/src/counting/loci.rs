//! Image-dimension strata of the commuting lower-triangular pairs: the
//! count of pairs whose joint column span has each possible dimension.
//!
//! Joint images always lie in the span of the last `n - 1` coordinates, so
//! the strata are resolved by inclusion-exclusion over the subspaces `W` of
//! that space: for each `W` the pairs with both images inside `W` form a
//! linearly constrained version of the same commuting model, counted by
//! rank as usual, and a Mobius pass over the subspace lattice converts the
//! "inside W" counts into "exactly W" counts.

use std::collections::HashMap;

use rayon::prelude::*;

use super::comm::count_comm;
use super::modp::{rank_inplace, rref_canonical, subspaces, FpMat};
use super::{require_prime, run_capped};
use crate::{Error, Result};

// Basis of { w in W : first t coordinates vanish }, W given by its RREF rows.
fn suffix_intersection(p: u64, m: usize, w_rows: &[Vec<u64>], t: usize) -> Vec<Vec<u64>> {
    if w_rows.is_empty() {
        return Vec::new();
    }
    if t == 0 {
        return w_rows.to_vec();
    }
    // coefficients c with (sum c_i w_i) having zero first t coords
    let mut sys = FpMat::zeros(p, t, w_rows.len());
    for (i, row) in w_rows.iter().enumerate() {
        for c in 0..t {
            sys.set(c, i, row[c]);
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|coefs| {
            let mut v = vec![0u64; m];
            for (i, row) in w_rows.iter().enumerate() {
                if coefs[i] == 0 {
                    continue;
                }
                for (j, &x) in row.iter().enumerate() {
                    v[j] = (v[j] + coefs[i] * x) % p;
                }
            }
            v
        })
        .collect()
}

// Number of commuting pairs with both matrices constrained to have all
// columns inside W (embedded in rows 2..n). The constrained matrices form a
// linear space; the commutator is bilinear, so the count per X is again a
// power of q read off a rank.
fn pairs_inside(p: u64, n: usize, w_rows: &[Vec<u64>]) -> u128 {
    let m = n - 1;
    // basis matrices of the constrained space
    let mut basis: Vec<[u64; 16]> = Vec::new();
    for col in 0..n - 1 {
        // column col (0-based) may use rows with index >= col + 1, i.e.
        // V-coordinates >= col
        for v in suffix_intersection(p, m, w_rows, col) {
            let mut mat = [0u64; 16];
            for (vi, &x) in v.iter().enumerate() {
                mat[(vi + 1) * n + col] = x;
            }
            basis.push(mat);
        }
    }
    let dim = basis.len();
    if dim == 0 {
        return 1; // only the zero pair
    }
    // constraint positions (i, j) with i >= j + 2, 0-based
    let mut cpos = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i >= j + 2 {
                cpos.push((i, j));
            }
        }
    }
    let nc = cpos.len();
    // t[c][i][j] = [B_i, B_j] at constraint position c
    let mut tensor = vec![0u64; nc * dim * dim];
    for (bi, a) in basis.iter().enumerate() {
        for (bj, b) in basis.iter().enumerate() {
            for (c, &(r, s)) in cpos.iter().enumerate() {
                let mut v: u64 = 0;
                for k in 0..n {
                    v = (v + a[r * n + k] * b[k * n + s]) % p;
                    v = (v + p * p - b[r * n + k] * a[k * n + s] % p) % p;
                }
                tensor[(c * dim + bi) * dim + bj] = v;
            }
        }
    }
    let total_x = (p as u128).pow(dim as u32);
    let mut acc: u128 = 0;
    let mut coords = vec![0u64; dim];
    let mut rows = vec![0u64; nc * dim];
    let mut idx: u128 = 0;
    loop {
        // rows[c][j] = sum_i coords[i] * tensor[c][i][j]
        for v in rows.iter_mut() {
            *v = 0;
        }
        for (i, &x) in coords.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for c in 0..nc {
                let base = (c * dim + i) * dim;
                for j in 0..dim {
                    let cell = &mut rows[c * dim + j];
                    *cell = (*cell + x * tensor[base + j]) % p;
                }
            }
        }
        let rank = rank_inplace(&mut rows, nc, dim, p);
        acc += (p as u128).pow((dim - rank) as u32);
        idx += 1;
        if idx == total_x {
            break;
        }
        let mut i = 0;
        while coords[i] + 1 == p {
            coords[i] = 0;
            i += 1;
        }
        coords[i] += 1;
    }
    acc
}

/// Counts of pairs by exact joint image dimension, `lambda = 0 ..= n-1`.
pub fn locus_l_table(n: u32, q: u64) -> Result<Vec<u128>> {
    require_prime(q)?;
    if !(2..=4).contains(&n) {
        return Err(Error::Infeasible(format!(
            "locus table supports n in 2..=4, got {n}"
        )));
    }
    let nu = n as usize;
    let m = nu - 1;
    // all subspaces of F^m by dimension, with canonical keys
    let mut all: Vec<(usize, Vec<Vec<u64>>)> = Vec::new();
    for dim in 0..=m {
        for rows in subspaces(q, m, dim) {
            all.push((dim, rows));
        }
    }
    let key_of = |rows: &[Vec<u64>]| -> Vec<u64> {
        let mut flat = vec![rows.len() as u64];
        for r in rows {
            flat.extend_from_slice(r);
        }
        flat
    };
    let index: HashMap<Vec<u64>, usize> = all
        .iter()
        .enumerate()
        .map(|(i, (_, rows))| (key_of(rows), i))
        .collect();

    // raw counts: pairs with images inside each W; the full space is the
    // unconstrained count, which has its own faster path
    let g: Vec<u128> = run_capped(|| {
        all.par_iter()
            .map(|(dim, rows)| {
                if *dim == m {
                    count_comm(n, q).expect("parameters already validated")
                } else {
                    pairs_inside(q, nu, rows)
                }
            })
            .collect()
    });

    // Mobius pass: subtract the exact counts of all proper subspaces
    let mut exact = vec![0u128; all.len()];
    let order: Vec<usize> = {
        let mut idxs: Vec<usize> = (0..all.len()).collect();
        idxs.sort_by_key(|&i| all[i].0);
        idxs
    };
    for &ui in &order {
        let (udim, urows) = &all[ui];
        let mut val = g[ui];
        // proper subspaces of U: images of abstract subspaces of F^udim
        for sdim in 0..*udim {
            for srows in subspaces(q, *udim, sdim) {
                // embed: rows of S times basis rows of U
                let embedded: Vec<Vec<u64>> = srows
                    .iter()
                    .map(|s| {
                        let mut v = vec![0u64; m];
                        for (i, &c) in s.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            for (j, &x) in urows[i].iter().enumerate() {
                                v[j] = (v[j] + c * x) % q;
                            }
                        }
                        v
                    })
                    .collect();
                let canon = rref_canonical(q, m, &embedded);
                let wi = index[&key_of(&canon)];
                val -= exact[wi];
            }
        }
        exact[ui] = val;
    }

    let mut table = vec![0u128; nu];
    for (i, (dim, _)) in all.iter().enumerate() {
        table[*dim] += exact[i];
    }
    Ok(table)
}

/// Number of commuting pairs whose joint image has dimension exactly
/// `lambda`.
pub fn count_locus_l(n: u32, lambda: u32, q: u64) -> Result<u128> {
    if lambda >= n {
        return Err(Error::Infeasible(format!(
            "lambda must be < n, got lambda={lambda}, n={n}"
        )));
    }
    Ok(locus_l_table(n, q)?[lambda as usize])
}
