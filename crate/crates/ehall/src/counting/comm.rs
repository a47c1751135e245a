//! Counts of pairs of commuting strictly lower-triangular matrices.
//!
//! The commutator is linear in the second matrix, so for each first matrix
//! the solutions form a linear space whose size is a power of `q`; only a
//! rank computation is needed per enumerated matrix. The bottom-left corner
//! entry never appears in the commutator of strictly lower-triangular
//! matrices, so it is factored out of the enumeration as a free `q`.

use rayon::prelude::*;

use super::modp::rank_inplace;
use super::{require_prime, run_capped};
use crate::{Error, Result};


/// Index structure of the strictly lower-triangular model for one size.
pub(crate) struct CommModel {
    /// strict lower positions `(i, j)`, `i > j`, 1-based, in a fixed order
    pub positions: Vec<(usize, usize)>,
    /// index of the corner position `(n, 1)` in `positions`
    pub corner: usize,
    /// per commutator constraint `(i, j)` with `i >= j + 2`: terms
    /// `(y_index, x_index, positive)` meaning the row entry at `y_index`
    /// gains `± x[x_index]`
    pub constraint_terms: Vec<Vec<(usize, usize, bool)>>,
}

impl CommModel {
    pub fn new(n: usize) -> Self {
        assert!((2..=4).contains(&n));
        let mut positions = Vec::new();
        for i in 1..=n {
            for j in 1..i {
                positions.push((i, j));
            }
        }
        let idx = |i: usize, j: usize| positions.iter().position(|&p| p == (i, j)).unwrap();
        let corner = idx(n, 1);
        let mut constraint_terms = Vec::new();
        for i in 1..=n {
            for j in 1..i {
                if i < j + 2 {
                    continue;
                }
                // [X,Y]_{ij} = sum_{j<k<i} x_{ik} y_{kj} - y_{ik} x_{kj}
                let mut terms = Vec::new();
                for k in j + 1..i {
                    terms.push((idx(k, j), idx(i, k), true));
                    terms.push((idx(i, k), idx(k, j), false));
                }
                constraint_terms.push(terms);
            }
        }
        Self {
            positions,
            corner,
            constraint_terms,
        }
    }

    pub fn num_positions(&self) -> usize {
        self.positions.len()
    }

    /// Fills the constraint matrix rows for the given x-assignment.
    #[inline]
    pub fn fill_rows(&self, x: &[u64], p: u64, rows: &mut [u64]) {
        let np = self.positions.len();
        for v in rows.iter_mut() {
            *v = 0;
        }
        for (c, terms) in self.constraint_terms.iter().enumerate() {
            for &(yi, xi, pos) in terms {
                let v = x[xi];
                if v != 0 {
                    let cell = &mut rows[c * np + yi];
                    *cell = (*cell + if pos { v } else { p - v }) % p;
                }
            }
        }
    }
}

// Iterates over assignments of the positions excluding the corner, calling
// `f` with the full x-array (corner fixed to zero). The first non-corner
// position is fixed to `first`, the rest run through an odometer; when
// there is nothing to enumerate only `first == 0` fires, so splitting the
// scan over `first` never double-counts.
pub(crate) fn scan_x<F: FnMut(&[u64])>(model: &CommModel, q: u64, first: u64, mut f: F) {
    let np = model.num_positions();
    let free: Vec<usize> = (0..np).filter(|&i| i != model.corner).collect();
    let mut x = vec![0u64; np];
    if free.is_empty() {
        if first == 0 {
            f(&x);
        }
        return;
    }
    x[free[0]] = first;
    let rest = &free[1..];
    let mut odo = vec![0u64; rest.len()];
    loop {
        for (v, &i) in odo.iter().zip(rest) {
            x[i] = *v;
        }
        f(&x);
        let mut i = 0;
        while i < odo.len() {
            odo[i] += 1;
            if odo[i] == q {
                odo[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
        if i == odo.len() {
            break;
        }
    }
}

/// Number of pairs `(X, Y)` of strictly lower-triangular `n x n` matrices
/// over `F_q` with `[X, Y] = 0`.
pub fn count_comm(n: u32, q: u64) -> Result<u128> {
    require_prime(q)?;
    if !(1..=4).contains(&n) {
        return Err(Error::Infeasible(format!(
            "count_comm supports n in 1..=4, got {n}"
        )));
    }
    if n == 1 {
        return Ok(1); // only the zero matrix
    }
    let model = CommModel::new(n as usize);
    let np = model.num_positions();
    let nc = model.constraint_terms.len();
    let total: u128 = run_capped(|| {
        (0..q)
            .into_par_iter()
            .map(|first| {
                let mut rows = vec![0u64; nc * np];
                let mut acc: u128 = 0;
                scan_x(&model, q, first, |x| {
                    model.fill_rows(x, q, &mut rows);
                    let rank = rank_inplace(&mut rows, nc, np, q);
                    acc += (q as u128).pow((np - rank) as u32);
                });
                acc
            })
            .sum()
    });
    // free corner entry of X
    Ok(total * q as u128)
}

/// Splits the size-4 count into the component cut out by the vanishing of
/// the two middle subdiagonal entries and the open complement where they
/// are not both zero. The two parts add up to the full count.
pub fn count_comm4_components(q: u64) -> Result<(u128, u128)> {
    require_prime(q)?;
    let model = CommModel::new(4);
    let np = model.num_positions();
    let nc = model.constraint_terms.len();
    let x32 = model.positions.iter().position(|&p| p == (3, 2)).unwrap();
    let y32 = x32;
    let (z1, z2): (u128, u128) = run_capped(|| {
        (0..q)
            .into_par_iter()
            .map(|first| {
                // one extra row available for the y32 = 0 cut
                let mut rows = vec![0u64; (nc + 1) * np];
                let mut z1: u128 = 0;
                let mut z2: u128 = 0;
                scan_x(&model, q, first, |x| {
                    model.fill_rows(x, q, &mut rows[..nc * np]);
                    let mut buf = rows[..nc * np].to_vec();
                    let rank = rank_inplace(&mut buf, nc, np, q);
                    let all = (q as u128).pow((np - rank) as u32);
                    if x[x32] == 0 {
                        // add the equation y32 = 0
                        for v in rows[nc * np..].iter_mut() {
                            *v = 0;
                        }
                        rows[nc * np + y32] = 1;
                        let rank_cut = rank_inplace(&mut rows, nc + 1, np, q);
                        let cut = (q as u128).pow((np - rank_cut) as u32);
                        z1 += cut;
                        z2 += all - cut;
                    } else {
                        z2 += all;
                    }
                });
                (z1, z2)
            })
            .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1))
    });
    Ok((z1 * q as u128, z2 * q as u128))
}
