//! Exact polynomial interpolation of point counts, with a holdout check.
//!
//! The dimension of a variety is read off as the degree of its counting
//! polynomial and the number of top-dimensional components as the leading
//! coefficient. Nothing here asserts that a count is polynomial in `q`;
//! instead every fit carries a holdout sample, and a failed holdout aborts
//! the dimension claim explicitly.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::comm::count_comm;
use super::flag::count_quot_flag;
use super::quot::count_quot;
use crate::{Error, Result};

/// An exact interpolated counting polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyFit {
    /// coefficients by ascending degree, trailing zeros trimmed
    pub coeffs: Vec<BigRational>,
    pub degree: usize,
    pub leading_coeff: BigRational,
    pub holdout_q: u64,
    pub holdout_ok: bool,
}

fn rat_int(v: u128) -> BigRational {
    BigRational::from(BigInt::from(v))
}

fn eval(coeffs: &[BigRational], q: u64) -> BigRational {
    let x = BigRational::from(BigInt::from(q));
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x.clone() + c.clone();
    }
    acc
}

/// Lagrange interpolation through all samples plus a holdout comparison.
pub fn fit_polynomial(samples: &[(u64, u128)], holdout: (u64, u128)) -> Result<PolyFit> {
    if samples.len() < 2 {
        return Err(Error::BadFitInput);
    }
    let mut seen = std::collections::HashSet::new();
    for (q, _) in samples {
        if !seen.insert(*q) {
            return Err(Error::DuplicateSample(*q));
        }
    }
    if seen.contains(&holdout.0) {
        return Err(Error::DuplicateSample(holdout.0));
    }
    let n = samples.len();
    let mut coeffs = vec![BigRational::zero(); n];
    for (i, &(xi, yi)) in samples.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - x_j) as coefficients
        let mut basis = vec![BigRational::zero(); n];
        basis[0] = BigRational::one();
        let mut deg = 0usize;
        let mut denom = BigRational::one();
        for (j, &(xj, _)) in samples.iter().enumerate() {
            if j == i {
                continue;
            }
            let neg_root = -BigRational::from(BigInt::from(xj));
            // multiply by (x - x_j)
            for k in (0..=deg).rev() {
                let c = basis[k].clone();
                basis[k + 1] += c.clone();
                basis[k] = c * neg_root.clone();
            }
            deg += 1;
            denom *= BigRational::from(BigInt::from(xi)) - BigRational::from(BigInt::from(xj));
        }
        let scale = rat_int(yi) / denom;
        for (acc, b) in coeffs.iter_mut().zip(basis) {
            *acc += b * scale.clone();
        }
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    let degree = coeffs.len() - 1;
    let leading_coeff = coeffs[degree].clone();
    let holdout_ok = eval(&coeffs, holdout.0) == rat_int(holdout.1);
    Ok(PolyFit {
        coeffs,
        degree,
        leading_coeff,
        holdout_q: holdout.0,
        holdout_ok,
    })
}

fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl PolyFit {
    pub fn evaluate(&self, q: u64) -> BigRational {
        eval(&self.coeffs, q)
    }

    /// Leading coefficient as an integer when it is one.
    pub fn leading_as_integer(&self) -> Option<BigInt> {
        if self.leading_coeff.denom().is_one() {
            Some(self.leading_coeff.numer().clone())
        } else {
            None
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "coeffs": self.coeffs.iter().map(rational_string).collect::<Vec<_>>(),
            "degree": self.degree,
            "leading_coeff": rational_string(&self.leading_coeff),
            "holdout_q": self.holdout_q,
            "holdout_ok": self.holdout_ok,
        })
    }
}

impl std::fmt::Display for PolyFit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "degree {} leading {} holdout[q={}] {}",
            self.degree,
            rational_string(&self.leading_coeff),
            self.holdout_q,
            if self.holdout_ok { "ok" } else { "FAILED" }
        )
    }
}

/// Outcome of the fiber dimension estimate for one parameter triple.
#[derive(Clone, Debug)]
pub struct FiberReport {
    pub d: u32,
    pub n: u32,
    pub r: u32,
    pub dim_flag: usize,
    pub dim_quot: usize,
    pub dim_comm: usize,
    /// `dim_comm - dim B_n`; the stack of triangular pairs
    pub dim_stack: i64,
    /// `dim_quot + dim_stack + r (d + n)`
    pub bound_fiber_sum: i64,
    /// `2 r d + r n - 2 + [d = 0]`
    pub bound_closed_form: i64,
    pub fiber_sum_ok: bool,
    pub closed_form_ok: bool,
    /// equality `dim = r n - 1`, asserted only in the defect-free case `d = 0`
    pub equality_d0: Option<bool>,
}

impl FiberReport {
    pub fn passed(&self) -> bool {
        self.fiber_sum_ok && self.closed_form_ok && self.equality_d0.unwrap_or(true)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "d": self.d,
            "n": self.n,
            "r": self.r,
            "dim_flag": self.dim_flag,
            "dim_quot": self.dim_quot,
            "dim_comm": self.dim_comm,
            "dim_stack": self.dim_stack,
            "bound_fiber_sum": self.bound_fiber_sum,
            "bound_closed_form": self.bound_closed_form,
            "fiber_sum_ok": self.fiber_sum_ok,
            "closed_form_ok": self.closed_form_ok,
            "equality_d0": self.equality_d0,
        })
    }
}

impl std::fmt::Display for FiberReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "d={} n={} r={}: dim flag {} <= {} (fiber sum) {}, <= {} (closed form) {}{}",
            self.d,
            self.n,
            self.r,
            self.dim_flag,
            self.bound_fiber_sum,
            if self.fiber_sum_ok { "ok" } else { "VIOLATED" },
            self.bound_closed_form,
            if self.closed_form_ok { "ok" } else { "VIOLATED" },
            match self.equality_d0 {
                Some(true) => ", equality rn-1 ok",
                Some(false) => ", equality rn-1 VIOLATED",
                None => "",
            }
        )
    }
}

/// Fits the counting polynomials of the flagged Quot scheme, the base Quot
/// scheme, and the triangular commuting pairs over the given primes, then
/// checks the two dimension bounds, and the equality case when `d = 0`.
/// A failed holdout in any of the three fits is an error, not a verdict.
pub fn check_fiber_estimate(
    d: u32,
    n: u32,
    r: u32,
    qs: &[u64],
    holdout: u64,
) -> Result<FiberReport> {
    let fit_of = |f: &dyn Fn(u64) -> Result<u128>| -> Result<PolyFit> {
        let samples: Result<Vec<(u64, u128)>> = qs.iter().map(|&q| Ok((q, f(q)?))).collect();
        let fit = fit_polynomial(&samples?, (holdout, f(holdout)?))?;
        if !fit.holdout_ok {
            return Err(Error::HoldoutFailed(holdout));
        }
        Ok(fit)
    };
    let flag_fit = fit_of(&|q| Ok(count_quot_flag(d, n, r, q)?.count))?;
    let quot_fit = fit_of(&|q| Ok(count_quot(d, r, q)?.count))?;
    let comm_fit = fit_of(&|q| count_comm(n, q))?;

    let dim_flag = flag_fit.degree;
    let dim_quot = quot_fit.degree;
    let dim_comm = comm_fit.degree;
    let dim_stack = dim_comm as i64 - (n * (n + 1) / 2) as i64;
    let bound_fiber_sum = dim_quot as i64 + dim_stack + (r * (d + n)) as i64;
    let bound_closed_form =
        2 * (r * d) as i64 + (r * n) as i64 - 2 + if d == 0 { 1 } else { 0 };
    let equality_d0 = if d == 0 {
        Some(dim_flag as i64 == (r * n) as i64 - 1)
    } else {
        None
    };
    Ok(FiberReport {
        d,
        n,
        r,
        dim_flag,
        dim_quot,
        dim_comm,
        dim_stack,
        bound_fiber_sum,
        bound_closed_form,
        fiber_sum_ok: dim_flag as i64 <= bound_fiber_sum,
        closed_form_ok: dim_flag as i64 <= bound_closed_form,
        equality_d0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fits_a_square() {
        let fit = fit_polynomial(&[(2, 4), (3, 9), (5, 25)], (7, 49)).unwrap();
        assert_eq!(fit.degree, 2);
        assert_eq!(fit.leading_coeff, BigRational::one());
        assert!(fit.holdout_ok);
        assert_eq!(fit.coeffs.len(), 3);
        assert!(fit.coeffs[0].is_zero() && fit.coeffs[1].is_zero());
    }

    #[test]
    fn holdout_mismatch_is_recorded() {
        let fit = fit_polynomial(&[(2, 4), (3, 9), (5, 25)], (7, 50)).unwrap();
        assert!(!fit.holdout_ok);
    }

    #[test]
    fn input_validation() {
        assert!(fit_polynomial(&[(2, 4)], (3, 9)).is_err());
        assert!(fit_polynomial(&[(2, 4), (2, 4)], (3, 9)).is_err());
        assert!(fit_polynomial(&[(2, 4), (3, 9)], (3, 9)).is_err());
    }

    #[test]
    fn fiber_check_smallest_case() {
        let report = check_fiber_estimate(0, 1, 2, &[2, 3, 5], 7).unwrap();
        assert_eq!(report.dim_flag, 1);
        assert!(report.passed());
        assert_eq!(report.equality_d0, Some(true));
        // bound is tight here: 1 = 0 + (-1) + 2
        assert_eq!(report.bound_fiber_sum, 1);
    }

    #[test]
    fn fiber_check_with_defect() {
        let report = check_fiber_estimate(1, 1, 1, &[2, 3, 5, 7], 11).unwrap();
        assert!(report.passed());
        assert_eq!(report.bound_closed_form, 1);
        assert!(report.dim_flag <= 1);
        assert_eq!(report.equality_d0, None);
    }
}
