//! Finite-field point counts of the matrix models: commuting strictly
//! lower-triangular pairs, nilpotent commuting pairs with a cyclic framing,
//! flagged variants, their image-dimension strata, and exact polynomial
//! interpolation of the counts.
//!
//! Counts are exact integers; dimensions are read off interpolated counting
//! polynomials as degrees, and top-component counts as leading coefficients.
//! Enumerations partition their outer loop across threads and merge by
//! addition, so results are identical for every parallelism degree. The
//! `HALL_THREADS` environment variable caps the worker count.

pub mod comm;
pub mod fit;
pub mod flag;
pub mod loci;
pub mod modp;
pub mod quot;
pub mod records;

pub use comm::{count_comm, count_comm4_components};
pub use fit::{check_fiber_estimate, fit_polynomial, FiberReport, PolyFit};
pub use flag::count_quot_flag;
pub use loci::{count_locus_l, locus_l_table};
pub use modp::is_prime;
pub use quot::{count_locus_m, count_quot};
pub use records::{CountRecord, Family};

use crate::{Error, Result};

pub(crate) fn require_prime(q: u64) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    Ok(())
}

/// `|GL_d(F_q)| = prod_{i<d} (q^d - q^i)`.
pub fn gl_order(d: u32, q: u64) -> u128 {
    let qd = (q as u128).pow(d);
    (0..d).map(|i| qd - (q as u128).pow(i)).product()
}

/// Order of the lower-triangular Borel of `GL_n(F_q)`.
pub fn borel_order(n: u32, q: u64) -> u128 {
    (q as u128 - 1).pow(n) * (q as u128).pow(n * (n - 1) / 2)
}

/// Order of the flag-preserving group with diagonal blocks `(d, 1, ..., 1)`.
pub fn flag_group_order(d: u32, n: u32, q: u64) -> u128 {
    gl_order(d, q) * (q as u128).pow(d * n) * borel_order(n, q)
}

/// Number of framing tuples `v in Hom(F^r, F^dim)` generating the module of
/// a nilpotent commuting pair whose images span a subspace of dimension
/// `mu`: by Nakayama, `v` generates iff it spans the `t`-dimensional
/// quotient by the images, `t = dim - mu`, giving
/// `q^(r mu) prod_{i<t} (q^r - q^i)`.
pub fn cyclic_vector_count(dim: u32, mu: u32, r: u32, q: u64) -> u128 {
    let t = dim - mu;
    let qr = (q as u128).pow(r);
    let mut out = (q as u128).pow(r * mu);
    for i in 0..t {
        if (q as u128).pow(i) >= qr {
            return 0;
        }
        out *= qr - (q as u128).pow(i);
    }
    out
}

/// Runs `f` under the thread cap from `HALL_THREADS`, if set.
pub fn run_capped<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    match std::env::var("HALL_THREADS")
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
    {
        Some(threads) if threads >= 1 => rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_orders() {
        assert_eq!(gl_order(1, 5), 4);
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(gl_order(3, 2), 168);
        assert_eq!(borel_order(2, 3), 4 * 3);
        assert_eq!(flag_group_order(0, 2, 3), borel_order(2, 3));
        assert_eq!(
            flag_group_order(1, 2, 3),
            gl_order(1, 3) * 9 * borel_order(2, 3)
        );
    }

    #[test]
    fn cyclic_counts_small() {
        // d = 1: nonzero vectors of F_q^r
        assert_eq!(cyclic_vector_count(1, 0, 1, 5), 4);
        assert_eq!(cyclic_vector_count(1, 0, 2, 2), 3);
        // t > r makes spanning impossible
        assert_eq!(cyclic_vector_count(2, 0, 1, 7), 0);
        // mu = dim means every v works
        assert_eq!(cyclic_vector_count(2, 2, 1, 3), 9);
    }
}
