//! Small dense linear algebra over a prime field, sized for the matrix
//! models in this crate (dimensions at most around a dozen).

/// Trial-division primality check, adequate for the small moduli used here.
pub fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q % 2 == 0 {
        return q == 2;
    }
    let mut d = 3;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    // extended euclid; a nonzero mod p
    let (mut t, mut new_t): (i64, i64) = (0, 1);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    debug_assert_eq!(r, 1, "not invertible");
    t.rem_euclid(p as i64) as u64
}

pub fn pow_u128(base: u64, exp: u32) -> u128 {
    (base as u128).pow(exp)
}

/// Row-reduces `rows x ncols` entries stored row-major in `a` and returns
/// the rank. Entries must already be reduced mod `p`.
pub fn rank_inplace(a: &mut [u64], nrows: usize, ncols: usize, p: u64) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        let mut pivot = None;
        for r in rank..nrows {
            if a[r * ncols + col] != 0 {
                pivot = Some(r);
                break;
            }
        }
        let Some(pr) = pivot else { continue };
        if pr != rank {
            for c in 0..ncols {
                a.swap(rank * ncols + c, pr * ncols + c);
            }
        }
        let inv = inv_mod(a[rank * ncols + col], p);
        for c in col..ncols {
            a[rank * ncols + c] = a[rank * ncols + c] * inv % p;
        }
        for r in 0..nrows {
            if r == rank {
                continue;
            }
            let f = a[r * ncols + col];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for c in col..ncols {
                a[r * ncols + c] = (a[r * ncols + c] + neg * a[rank * ncols + c]) % p;
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

/// Dense matrix over `F_p`; used on the cold paths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FpMat {
    pub p: u64,
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<u64>,
}

impl FpMat {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            a: vec![0; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.a[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.a[r * self.cols + c] = v % self.p;
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let x = out.get(i, j) + v * other.get(k, j) % self.p;
                    out.set(i, j, x % self.p);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.a.iter().all(|&x| x == 0)
    }

    pub fn rank(&self) -> usize {
        let mut buf = self.a.clone();
        rank_inplace(&mut buf, self.rows, self.cols, self.p)
    }

    /// Basis of the right null space, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let p = self.p;
        let mut buf = self.a.clone();
        let nrows = self.rows;
        let ncols = self.cols;
        // row reduce, remembering pivot columns
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..ncols {
            let mut pr = None;
            for r in rank..nrows {
                if buf[r * ncols + col] != 0 {
                    pr = Some(r);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != rank {
                for c in 0..ncols {
                    buf.swap(rank * ncols + c, pr * ncols + c);
                }
            }
            let inv = inv_mod(buf[rank * ncols + col], p);
            for c in col..ncols {
                buf[rank * ncols + c] = buf[rank * ncols + c] * inv % p;
            }
            for r in 0..nrows {
                if r == rank {
                    continue;
                }
                let f = buf[r * ncols + col];
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                for c in col..ncols {
                    buf[r * ncols + c] = (buf[r * ncols + c] + neg * buf[rank * ncols + c]) % p;
                }
            }
            pivots.push(col);
            rank += 1;
            if rank == nrows {
                break;
            }
        }
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        for free in 0..ncols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; ncols];
            v[free] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                let coef = buf[row * ncols + free];
                if coef != 0 {
                    v[pc] = p - coef;
                }
            }
            basis.push(v);
        }
        basis
    }
}

/// All subspaces of `F_p^m` of dimension `dim`, each as its reduced
/// row-echelon basis (list of row vectors).
pub fn subspaces(p: u64, m: usize, dim: usize) -> Vec<Vec<Vec<u64>>> {
    if dim == 0 {
        return vec![vec![]];
    }
    if dim > m {
        return Vec::new();
    }
    let mut out = Vec::new();
    // choose pivot columns, then fill free entries
    let mut pivot_sets = Vec::new();
    choose(m, dim, &mut Vec::new(), &mut pivot_sets);
    for pivots in pivot_sets {
        // free positions: row i has entries at columns > pivots[i] that are
        // not pivot columns themselves
        let mut free_pos = Vec::new();
        for (i, &pc) in pivots.iter().enumerate() {
            for c in pc + 1..m {
                if !pivots.contains(&c) {
                    free_pos.push((i, c));
                }
            }
        }
        let total = free_pos.len();
        let combos = (p as u128).pow(total as u32);
        let mut idx = 0u128;
        while idx < combos {
            let mut rows = vec![vec![0u64; m]; dim];
            for (i, &pc) in pivots.iter().enumerate() {
                rows[i][pc] = 1;
            }
            let mut rem = idx;
            for &(i, c) in &free_pos {
                rows[i][c] = (rem % p as u128) as u64;
                rem /= p as u128;
            }
            out.push(rows);
            idx += 1;
        }
    }
    out
}

fn choose(m: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if current.len() == k {
        out.push(current.clone());
        return;
    }
    let start = current.last().map(|&x| x + 1).unwrap_or(0);
    for c in start..m {
        current.push(c);
        choose(m, k, current, out);
        current.pop();
    }
}

/// Canonical reduced row-echelon form of a span given by generating row
/// vectors; used to identify subspaces.
pub fn rref_canonical(p: u64, m: usize, gens: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let nrows = gens.len();
    let mut buf = vec![0u64; nrows * m];
    for (i, g) in gens.iter().enumerate() {
        for (j, &x) in g.iter().enumerate() {
            buf[i * m + j] = x % p;
        }
    }
    let rank = rank_inplace(&mut buf, nrows, m, p);
    (0..rank).map(|i| buf[i * m..(i + 1) * m].to_vec()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let primes: Vec<u64> = (2..40).filter(|&q| is_prime(q)).collect();
        assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
    }

    #[test]
    fn inverse() {
        for p in [2u64, 3, 5, 7, 31, 37] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn rank_and_nullspace() {
        let p = 5;
        let mut m = FpMat::zeros(p, 2, 3);
        m.set(0, 0, 1);
        m.set(0, 1, 2);
        m.set(1, 0, 2);
        m.set(1, 1, 4);
        assert_eq!(m.rank(), 1);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in ns {
            for r in 0..2 {
                let dot: u64 = (0..3).map(|c| m.get(r, c) * v[c]).sum::<u64>() % p;
                assert_eq!(dot, 0);
            }
        }
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        // [3 choose 1]_q = q^2 + q + 1, [3 choose 2]_q likewise
        for p in [2u64, 3] {
            let lines = subspaces(p, 3, 1).len() as u64;
            assert_eq!(lines, p * p + p + 1);
            let planes = subspaces(p, 3, 2).len() as u64;
            assert_eq!(planes, p * p + p + 1);
            assert_eq!(subspaces(p, 3, 0).len(), 1);
            assert_eq!(subspaces(p, 3, 3).len(), 1);
        }
    }

    #[test]
    fn rref_identifies_spans() {
        let p = 3;
        let a = rref_canonical(p, 3, &[vec![1, 2, 0], vec![0, 0, 1]]);
        let b = rref_canonical(p, 3, &[vec![2, 4 % 3, 1], vec![0, 0, 2]]);
        assert_eq!(a, b);
    }
}
