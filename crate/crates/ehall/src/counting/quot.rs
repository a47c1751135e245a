//! Punctual Quot scheme counts through the matrix model: nilpotent
//! commuting pairs `(X, Y)` on `F_q^d` with a spanning (cyclic) framing
//! `v: F_q^r -> F_q^d`, counted up to base change.
//!
//! The enumeration runs over conjugacy classes of the first matrix (Jordan
//! types), then over the centralizer of the representative for the second,
//! tallying by the dimension `mu` of the joint image. Cyclic framings are
//! counted in closed form per `mu`: a framing generates the module exactly
//! when it spans the quotient by the joint image. Literal Krylov-closure
//! enumeration backs all of this up in the tests.

use super::modp::{rank_inplace, FpMat};
use super::records::{CountRecord, Family};
use super::{cyclic_vector_count, gl_order, require_prime};
use crate::{Error, Result};

/// Partitions of `d` in descending part order.
pub fn partitions(d: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            cur.push(part);
            rec(rest - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, &mut Vec::new(), &mut out);
    out
}

/// Nilpotent Jordan representative of the type: ones on the subdiagonal of
/// each block.
pub fn jordan_matrix(parts: &[u32], p: u64) -> FpMat {
    let d: u32 = parts.iter().sum();
    let mut m = FpMat::zeros(p, d as usize, d as usize);
    let mut offset = 0usize;
    for &part in parts {
        for i in 0..(part as usize - 1) {
            m.set(offset + i + 1, offset + i, 1);
        }
        offset += part as usize;
    }
    m
}

/// Basis of the full matrix centralizer of `n` (as matrices).
pub fn centralizer_basis(n: &FpMat) -> Vec<FpMat> {
    let d = n.rows;
    let p = n.p;
    let mut sys = FpMat::zeros(p, d * d, d * d);
    // (N Y - Y N)[r][s]: coefficient of Y[a][b] is N[r][a]·[b=s] - [a=r]·N[b][s]
    for r in 0..d {
        for s in 0..d {
            let eq = r * d + s;
            for a in 0..d {
                for b in 0..d {
                    let mut coef = 0u64;
                    if b == s {
                        coef = (coef + n.get(r, a)) % p;
                    }
                    if a == r {
                        coef = (coef + p - n.get(b, s)) % p;
                    }
                    sys.set(eq, a * d + b, coef % p);
                }
            }
        }
    }
    sys.nullspace()
        .into_iter()
        .map(|v| {
            let mut m = FpMat::zeros(p, d, d);
            for a in 0..d {
                for b in 0..d {
                    m.set(a, b, v[a * d + b]);
                }
            }
            m
        })
        .collect()
}

fn multiplicities(parts: &[u32]) -> Vec<u32> {
    let mut counts = std::collections::BTreeMap::new();
    for &p in parts {
        *counts.entry(p).or_insert(0u32) += 1;
    }
    counts.into_values().collect()
}

fn centralizer_dim(parts: &[u32]) -> u32 {
    let mut dim = 0;
    for &a in parts {
        for &b in parts {
            dim += a.min(b);
        }
    }
    dim
}

/// Order of the centralizer of the Jordan representative inside `GL_d`.
pub fn centralizer_unit_order(parts: &[u32], q: u64) -> u128 {
    let dim = centralizer_dim(parts);
    let ms = multiplicities(parts);
    let msq: u32 = ms.iter().map(|m| m * m).sum();
    let mut out = (q as u128).pow(dim - msq);
    for m in ms {
        out *= gl_order(m, q);
    }
    out
}

/// Number of nilpotent matrices conjugate to the given Jordan type.
pub fn orbit_size(parts: &[u32], q: u64) -> u128 {
    let d: u32 = parts.iter().sum();
    let gl = gl_order(d, q);
    let z = centralizer_unit_order(parts, q);
    debug_assert_eq!(gl % z, 0);
    gl / z
}

// d x d matrix product into `out`, all flat row-major length d*d
fn mul_flat(a: &[u64], b: &[u64], d: usize, p: u64, out: &mut [u64]) {
    for i in 0..d {
        for j in 0..d {
            let mut v = 0u64;
            for k in 0..d {
                v = (v + a[i * d + k] * b[k * d + j]) % p;
            }
            out[i * d + j] = v;
        }
    }
}

fn is_nilpotent_flat(y: &[u64], d: usize, p: u64) -> bool {
    let mut pow = [0u64; 9];
    let mut tmp = [0u64; 9];
    pow[..d * d].copy_from_slice(&y[..d * d]);
    for _ in 1..d {
        mul_flat(&pow.clone()[..d * d], y, d, p, &mut tmp[..d * d]);
        pow[..d * d].copy_from_slice(&tmp[..d * d]);
    }
    pow[..d * d].iter().all(|&v| v == 0)
}

/// Strata counts `C[mu]` of nilpotent commuting pairs `(X, Y)` on `F_q^d`
/// with `dim(Im X + Im Y) = mu`, for `mu = 0 .. d-1`.
pub fn commuting_nilpotent_strata(d: u32, q: u64) -> Result<Vec<u128>> {
    require_prime(q)?;
    if !(1..=3).contains(&d) {
        return Err(Error::Infeasible(format!(
            "strata enumeration supports d in 1..=3, got {d}"
        )));
    }
    let du = d as usize;
    let mut c = vec![0u128; du];
    for parts in partitions(d) {
        if parts.iter().all(|&x| x == 1) {
            // X = 0: the second matrix is an arbitrary nilpotent, grouped by
            // its own Jordan type; the joint image is its column span
            for tau in partitions(d) {
                let rank = (d - tau.len() as u32) as usize;
                c[rank] += orbit_size(&tau, q);
            }
            continue;
        }
        let n = jordan_matrix(&parts, q);
        let basis = centralizer_basis(&n);
        debug_assert_eq!(basis.len() as u32, centralizer_dim(&parts));
        let z = basis.len();
        let basis_flat: Vec<Vec<u64>> = basis.iter().map(|b| b.a.clone()).collect();
        let orbit = orbit_size(&parts, q);
        let mut tally = vec![0u128; du];
        let total = (q as u128).pow(z as u32);
        let mut coords = vec![0u64; z];
        let mut y = [0u64; 9];
        let mut rankbuf = [0u64; 18];
        let mut idx: u128 = 0;
        loop {
            for v in y[..du * du].iter_mut() {
                *v = 0;
            }
            for (i, &x) in coords.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (cell, &b) in y[..du * du].iter_mut().zip(&basis_flat[i]) {
                    *cell = (*cell + x * b) % q;
                }
            }
            if is_nilpotent_flat(&y, du, q) {
                // mu = rank of [N | Y] columns
                for i in 0..du {
                    for j in 0..du {
                        rankbuf[i * 2 * du + j] = n.get(i, j);
                        rankbuf[i * 2 * du + du + j] = y[i * du + j];
                    }
                }
                let mu = rank_inplace(&mut rankbuf[..du * 2 * du], du, 2 * du, q);
                tally[mu] += 1;
            }
            idx += 1;
            if idx == total {
                break;
            }
            let mut i = 0;
            while coords[i] + 1 == q {
                coords[i] = 0;
                i += 1;
            }
            coords[i] += 1;
        }
        for mu in 0..du {
            c[mu] += orbit * tally[mu];
        }
    }
    Ok(c)
}

/// Point count of the punctual Quot scheme: cyclic triples `(X, Y, v)`
/// modulo `GL_d`. The raw count is exactly divisible by the group order
/// because the action on cyclic triples is free.
pub fn count_quot(d: u32, r: u32, q: u64) -> Result<CountRecord> {
    require_prime(q)?;
    if d > 3 {
        return Err(Error::Infeasible(format!(
            "count_quot supports d in 0..=3, got {d}"
        )));
    }
    if !(1..=2).contains(&r) {
        return Err(Error::Infeasible(format!(
            "count_quot supports r in 1..=2, got {r}"
        )));
    }
    if d == 0 {
        return Ok(CountRecord {
            family: Family::Quot,
            n: None,
            d: Some(0),
            r: Some(r),
            lambda: None,
            mu: None,
            q,
            raw: 1,
            group_order: Some(1),
            count: 1,
        });
    }
    let strata = commuting_nilpotent_strata(d, q)?;
    let raw: u128 = strata
        .iter()
        .enumerate()
        .map(|(mu, &cnt)| cnt * cyclic_vector_count(d, mu as u32, r, q))
        .sum();
    let group = gl_order(d, q);
    if raw % group != 0 {
        return Err(Error::NonIntegerQuotient { raw, group });
    }
    Ok(CountRecord {
        family: Family::Quot,
        n: None,
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

/// Stratum of the Quot scheme where the joint image of the two matrices
/// has dimension exactly `mu`; raw and base-changed counts.
pub fn count_locus_m(d: u32, mu: i64, r: u32, q: u64) -> Result<CountRecord> {
    require_prime(q)?;
    if !(1..=3).contains(&d) {
        return Err(Error::Infeasible(format!(
            "count_locus_m supports d in 1..=3, got {d}"
        )));
    }
    if !(1..=2).contains(&r) {
        return Err(Error::Infeasible(format!(
            "count_locus_m supports r in 1..=2, got {r}"
        )));
    }
    let raw = if mu < 0 || mu >= d as i64 {
        0
    } else {
        let strata = commuting_nilpotent_strata(d, q)?;
        strata[mu as usize] * cyclic_vector_count(d, mu as u32, r, q)
    };
    let group = gl_order(d, q);
    if raw % group != 0 {
        return Err(Error::NonIntegerQuotient { raw, group });
    }
    Ok(CountRecord {
        family: Family::LocusM,
        n: None,
        d: Some(d),
        r: Some(r),
        lambda: None,
        mu: Some(mu.max(0) as u32),
        q,
        raw,
        group_order: Some(group),
        count: raw / group,
    })
}

/// Krylov-closure cyclicity: the columns of `v` generate `F_q^d` under
/// repeated application of `x` and `y`.
pub fn is_cyclic(x: &FpMat, y: &FpMat, v: &FpMat) -> bool {
    let d = x.rows;
    let p = x.p;
    let mut span: Vec<Vec<u64>> = Vec::new(); // echelon rows
    let mut queue: Vec<Vec<u64>> = (0..v.cols)
        .map(|c| (0..d).map(|r| v.get(r, c)).collect())
        .collect();
    let reduce_insert = |span: &mut Vec<Vec<u64>>, mut vec: Vec<u64>| -> bool {
        for row in span.iter() {
            let lead = row.iter().position(|&x| x != 0).unwrap();
            if vec[lead] != 0 {
                let f = vec[lead];
                for (a, b) in vec.iter_mut().zip(row) {
                    *a = (*a + (p - f) * b) % p;
                }
            }
        }
        if let Some(lead) = vec.iter().position(|&x| x != 0) {
            let inv = super::modp::inv_mod(vec[lead], p);
            for a in vec.iter_mut() {
                *a = *a * inv % p;
            }
            span.push(vec);
            span.sort_by_key(|r| r.iter().position(|&x| x != 0).unwrap());
            true
        } else {
            false
        }
    };
    while let Some(vec) = queue.pop() {
        if reduce_insert(&mut span, vec.clone()) {
            if span.len() == d {
                return true;
            }
            for m in [x, y] {
                let img: Vec<u64> = (0..d)
                    .map(|i| {
                        (0..d)
                            .map(|j| m.get(i, j) * vec[j] % p)
                            .sum::<u64>()
                            % p
                    })
                    .collect();
                queue.push(img);
            }
        }
    }
    span.len() == d
}
