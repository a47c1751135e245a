//! Exact arithmetic in the field of rational functions in `q1` and `q2`.
//!
//! [`LaurentPoly`] is an integer Laurent polynomial in two variables;
//! [`Coeff`] is a canonical fraction of two of them. Canonical form makes
//! structural equality coincide with semantic equality, which is what the
//! Gaussian-elimination oracle in [`crate::relations`] relies on.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Integer Laurent polynomial `sum c_{a,b} q1^a q2^b`, no stored zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, BigInt::one())
    }

    pub fn monomial(a: i64, b: i64, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((a, b), c);
        }
        Self { terms }
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(0, 0, BigInt::from(n))
    }

    pub fn q1() -> Self {
        Self::monomial(1, 0, BigInt::one())
    }

    pub fn q2() -> Self {
        Self::monomial(0, 1, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&(0, 0))
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert_term(&mut self, key: (i64, i64), c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.insert_term(*k, c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((a1, b1), c1) in &self.terms {
            for ((a2, b2), c2) in &other.terms {
                out.insert_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }

    pub fn swap_vars(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|((a, b), c)| ((*b, *a), c.clone())).collect(),
        }
    }

    /// Exact evaluation at `q1 = v1`, `q2 = v2` (both nonzero for negative exponents).
    pub fn eval(&self, v1: &BigRational, v2: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for ((a, b), c) in &self.terms {
            let mut t = BigRational::from(c.clone());
            t *= pow_rat(v1, *a);
            t *= pow_rat(v2, *b);
            acc += t;
        }
        acc
    }

    fn min_exponents(&self) -> (i64, i64) {
        let mut ma = i64::MAX;
        let mut mb = i64::MAX;
        for (a, b) in self.terms.keys() {
            ma = ma.min(*a);
            mb = mb.min(*b);
        }
        (ma, mb)
    }

    fn shift(&self, da: i64, db: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|((a, b), c)| ((a + da, b + db), c.clone()))
                .collect(),
        }
    }

    /// Coefficient at the lexicographically greatest exponent pair.
    fn lex_leading(&self) -> Option<&BigInt> {
        self.terms.last_key_value().map(|(_, c)| c)
    }

    /// gcd of two Laurent polynomials, normalized to a polynomial with
    /// nonnegative exponents, zero minimum exponent in each variable, and
    /// positive lex-leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return normalize_gcd(other.clone());
        }
        if other.is_zero() {
            return normalize_gcd(self.clone());
        }
        let (a1, b1) = self.min_exponents();
        let (a2, b2) = other.min_exponents();
        let p = dense_from(&self.shift(-a1, -b1));
        let q = dense_from(&other.shift(-a2, -b2));
        let g = gcd_bi(&p, &q);
        normalize_gcd(dense_to(&g))
    }

    /// Exact division; `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a1, b1) = self.min_exponents();
        let (a2, b2) = other.min_exponents();
        let p = dense_from(&self.shift(-a1, -b1));
        let q = dense_from(&other.shift(-a2, -b2));
        let quot = div_exact_bi(&p, &q)?;
        Some(dense_to(&quot).shift(a1 - a2, b1 - b2))
    }

    fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        // (a, b) lexicographically descending
        for (i, ((a, b), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(*a, *b);
            if mono.is_empty() {
                s.push_str(&mag.to_string());
            } else if mag.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&format!("{mag}*{mono}"));
            }
        }
        s
    }
}

fn render_monomial(a: i64, b: i64) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("q1", a), ("q2", b)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join("*")
}

fn pow_rat(v: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let p = v.pow(e.unsigned_abs() as u32 as i32);
    if e > 0 {
        p
    } else {
        p.recip()
    }
}

fn normalize_gcd(mut g: LaurentPoly) -> LaurentPoly {
    if g.is_zero() {
        return g;
    }
    let (ma, mb) = g.min_exponents();
    g = g.shift(-ma, -mb);
    if g.lex_leading().map(|c| c.is_negative()).unwrap_or(false) {
        g = g.neg();
    }
    g
}

// Dense recursive representation used for gcd and exact division:
// outer index = q1 degree, inner vector = coefficients in q2.
type Uni = Vec<BigInt>;
type Bi = Vec<Uni>;

fn dense_from(p: &LaurentPoly) -> Bi {
    let mut d1 = 0usize;
    let mut d2 = 0usize;
    for (a, b) in p.terms.keys() {
        d1 = d1.max(*a as usize);
        d2 = d2.max(*b as usize);
    }
    let mut out = vec![vec![BigInt::zero(); d2 + 1]; d1 + 1];
    for ((a, b), c) in &p.terms {
        out[*a as usize][*b as usize] = c.clone();
    }
    out
}

fn dense_to(p: &Bi) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (a, row) in p.iter().enumerate() {
        for (b, c) in row.iter().enumerate() {
            out.insert_term((a as i64, b as i64), c.clone());
        }
    }
    out
}

fn uni_trim(p: &mut Uni) {
    while p.last().map(|c| c.is_zero()).unwrap_or(false) {
        p.pop();
    }
}

fn uni_is_zero(p: &Uni) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn uni_mul(a: &Uni, b: &Uni) -> Uni {
    if uni_is_zero(a) || uni_is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            if !cb.is_zero() {
                out[i + j] += ca * cb;
            }
        }
    }
    uni_trim(&mut out);
    out
}

fn uni_sub(a: &Uni, b: &Uni) -> Uni {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    uni_trim(&mut out);
    out
}

fn int_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    num_integer::Integer::gcd(a, b)
}

fn uni_content(p: &Uni) -> BigInt {
    let mut g = BigInt::zero();
    for c in p {
        if !c.is_zero() {
            g = int_gcd(&g, c);
        }
    }
    g
}

fn uni_scale_down(p: &Uni, g: &BigInt) -> Uni {
    if g.is_zero() || g.is_one() {
        return p.clone();
    }
    p.iter().map(|c| c / g).collect()
}

/// Primitive gcd in Z[x] via a primitive pseudo-remainder sequence.
fn gcd_uni(a: &Uni, b: &Uni) -> Uni {
    let mut a = a.clone();
    let mut b = b.clone();
    uni_trim(&mut a);
    uni_trim(&mut b);
    if a.is_empty() {
        return primitive_sign_norm(b);
    }
    if b.is_empty() {
        return primitive_sign_norm(a);
    }
    let ca = uni_content(&a);
    let cb = uni_content(&b);
    let cg = int_gcd(&ca, &cb);
    a = uni_scale_down(&a, &ca);
    b = uni_scale_down(&b, &cb);
    while !b.is_empty() {
        let r = uni_pseudo_rem(&a, &b);
        a = b;
        b = r;
        let c = uni_content(&b);
        b = uni_scale_down(&b, &c);
    }
    let mut g = primitive_sign_norm(a);
    g = g.iter().map(|c| c * &cg).collect();
    g
}

fn primitive_sign_norm(mut p: Uni) -> Uni {
    uni_trim(&mut p);
    if p.last().map(|c| c.is_negative()).unwrap_or(false) {
        p = p.iter().map(|c| -c).collect();
    }
    p
}

/// Pseudo-remainder of a by b in Z[x] (b nonzero), up to positive content;
/// the integer content is stripped every step to keep coefficients small,
/// which is harmless for gcd purposes.
fn uni_pseudo_rem(a: &Uni, b: &Uni) -> Uni {
    let mut r = a.clone();
    uni_trim(&mut r);
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap().clone();
        // r := lb*r - lr*x^(dr-db)*b
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(b.iter().map(|c| c * &lr));
        r = r.iter().map(|c| c * &lb).collect();
        r = uni_sub(&r, &shifted);
        uni_trim(&mut r);
        if r.len() > dr {
            r.truncate(dr);
            uni_trim(&mut r);
        }
        let c = uni_content(&r);
        if !c.is_zero() && !c.is_one() {
            r = uni_scale_down(&r, &c);
        }
    }
    r
}

fn bi_trim(p: &mut Bi) {
    for row in p.iter_mut() {
        uni_trim(row);
    }
    while p.last().map(|r| r.is_empty()).unwrap_or(false) {
        p.pop();
    }
}

fn bi_is_zero(p: &Bi) -> bool {
    p.iter().all(|r| uni_is_zero(r))
}

/// Content of p seen as a polynomial in q1 over Z[q2].
fn bi_content(p: &Bi) -> Uni {
    let mut g: Uni = Vec::new();
    for row in p {
        if !uni_is_zero(row) {
            g = gcd_uni(&g, row);
        }
    }
    g
}

fn bi_div_uni(p: &Bi, d: &Uni) -> Option<Bi> {
    let mut out = Vec::with_capacity(p.len());
    for row in p {
        if uni_is_zero(row) {
            out.push(Vec::new());
        } else {
            out.push(div_exact_uni(row, d)?);
        }
    }
    Some(out)
}

fn bi_mul_uni(p: &Bi, m: &Uni) -> Bi {
    p.iter().map(|r| uni_mul(r, m)).collect()
}

fn bi_sub(a: &Bi, b: &Bi) -> Bi {
    let mut out = vec![Vec::new(); a.len().max(b.len())];
    for (i, r) in a.iter().enumerate() {
        out[i] = r.clone();
    }
    for (i, r) in b.iter().enumerate() {
        out[i] = uni_sub(&out[i], r);
    }
    let mut out = out;
    bi_trim(&mut out);
    out
}

// Primitive gcd in (Z[q2])[q1] by single cross-multiplication steps with a
// full content strip after each one. Every step preserves the gcd over the
// fraction field Q(q2), and the contents are restored at the end, so the
// result is the true gcd; the eager stripping keeps both the q2-degrees
// and the integer coefficients from compounding.
fn gcd_bi(a: &Bi, b: &Bi) -> Bi {
    let mut a = a.clone();
    let mut b = b.clone();
    bi_trim(&mut a);
    bi_trim(&mut b);
    if bi_is_zero(&a) {
        return b;
    }
    if bi_is_zero(&b) {
        return a;
    }
    let ca = bi_content(&a);
    let cb = bi_content(&b);
    let cg = gcd_uni(&ca, &cb);
    a = bi_div_uni(&a, &ca).unwrap();
    b = bi_div_uni(&b, &cb).unwrap();
    loop {
        if bi_is_zero(&b) {
            break;
        }
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let delta = a.len() - b.len();
        let la = a.last().unwrap().clone();
        let lb = b.last().unwrap().clone();
        // a := lb*a - la*x^delta*b, leading terms cancel
        let mut shifted: Bi = vec![Vec::new(); delta];
        shifted.extend(b.iter().map(|row| uni_mul(row, &la)));
        a = bi_mul_uni(&a, &lb);
        a = bi_sub(&a, &shifted);
        bi_trim(&mut a);
        if !bi_is_zero(&a) {
            let c = bi_content(&a);
            a = bi_div_uni(&a, &c).unwrap();
        }
    }
    bi_mul_uni(&a, &cg)
}

/// Exact division in Z[x]; `None` when not exact.
fn div_exact_uni(a: &Uni, b: &Uni) -> Option<Uni> {
    let mut r = a.clone();
    uni_trim(&mut r);
    let mut b = b.clone();
    uni_trim(&mut b);
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q = vec![BigInt::zero(); r.len() - db];
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap();
        let (quot, rem) = num_integer::Integer::div_rem(lr, &lb);
        if !rem.is_zero() {
            return None;
        }
        q[dr - db] = quot.clone();
        let mut shifted = vec![BigInt::zero(); dr - db];
        shifted.extend(b.iter().map(|c| c * &quot));
        r = uni_sub(&r, &shifted);
        uni_trim(&mut r);
        if r.len() > dr {
            return None;
        }
    }
    if r.is_empty() {
        Some(q)
    } else {
        None
    }
}

/// Exact division in (Z[q2])[q1]; `None` when not exact.
fn div_exact_bi(a: &Bi, b: &Bi) -> Option<Bi> {
    let mut r = a.clone();
    bi_trim(&mut r);
    let mut b = b.clone();
    bi_trim(&mut b);
    if b.is_empty() {
        return None;
    }
    if r.is_empty() {
        return Some(Vec::new());
    }
    if r.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lb = b.last().unwrap().clone();
    let mut q: Bi = vec![Vec::new(); r.len() - db];
    while !r.is_empty() && r.len() - 1 >= db {
        let dr = r.len() - 1;
        let lr = r.last().unwrap();
        let quot = div_exact_uni(lr, &lb)?;
        q[dr - db] = quot.clone();
        let mut shifted: Bi = vec![Vec::new(); dr - db];
        shifted.extend(b.iter().map(|row| uni_mul(row, &quot)));
        r = bi_sub(&r, &shifted);
        if r.len() > dr {
            return None;
        }
    }
    if bi_is_zero(&r) {
        Some(q)
    } else {
        None
    }
}

/// Element of the coefficient field: a canonical fraction of Laurent
/// polynomials. The denominator is a true polynomial with zero minimum
/// exponent in each variable, positive lex-leading coefficient, and no
/// common factor with the numerator, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coeff {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Coeff {
    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self {
                num: LaurentPoly::zero(),
                den: LaurentPoly::one(),
            };
        }
        if den.is_one() {
            return Self { num, den };
        }
        // move the denominator's monomial content into the numerator
        let (da, db) = den.min_exponents();
        let mut num = num.shift(-da, -db);
        let mut den = den.shift(-da, -db);
        if den.terms.len() == 1 {
            // single-term denominator: only an integer content can remain
            let c = den.terms.values().next().unwrap().clone();
            let mut g = c.clone();
            for v in num.terms.values() {
                g = int_gcd(&g, v);
                if g.is_one() {
                    break;
                }
            }
            if g.is_negative() {
                g = -g;
            }
            if c.is_negative() {
                g = -g;
            }
            let den = LaurentPoly::monomial(0, 0, &c / &g);
            let num = LaurentPoly {
                terms: num.terms.iter().map(|(k, v)| (*k, v / &g)).collect(),
            };
            return Self { num, den };
        }
        let g = num.gcd(&den);
        if !g.is_one() {
            num = num.div_exact(&g).expect("gcd divides numerator");
            den = den.div_exact(&g).expect("gcd divides denominator");
        }
        // dividing by the gcd can reintroduce a monomial shift in the numerator only
        let (da, db) = den.min_exponents();
        if (da, db) != (0, 0) {
            num = num.shift(-da, -db);
            den = den.shift(-da, -db);
        }
        if den.lex_leading().map(|c| c.is_negative()).unwrap_or(false) {
            num = num.neg();
            den = den.neg();
        }
        Self { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn q1() -> Self {
        Self::from_poly(LaurentPoly::q1())
    }

    pub fn q2() -> Self {
        Self::from_poly(LaurentPoly::q2())
    }

    /// `q = q1 q2`.
    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::monomial(1, 1, BigInt::one()))
    }

    /// `q^e` for any integer `e`.
    pub fn q_pow(e: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(e, e, BigInt::one()))
    }

    /// `(1 - q1)(1 - q2)`, the factor common to all commutators.
    pub fn commutator_factor() -> Self {
        let f1 = LaurentPoly::one().sub(&LaurentPoly::q1());
        let f2 = LaurentPoly::one().sub(&LaurentPoly::q2());
        Self::from_poly(f1.mul(&f2))
    }

    /// Quantum integer `[n] = 1 + q^-1 + ... + q^-(n-1)`.
    pub fn qint(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::BadQuantumInteger(n));
        }
        let mut p = LaurentPoly::zero();
        for i in 0..n {
            p = p.add(&LaurentPoly::monomial(-i, -i, BigInt::one()));
        }
        Ok(Self::from_poly(p))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&other.num));
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::canonical(num, den)
    }

    pub fn neg(&self) -> Self {
        Self {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        Self::canonical(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::canonical(
            self.num.mul(&other.den),
            self.den.mul(&other.num),
        ))
    }

    pub fn inv(&self) -> Result<Self> {
        Self::one().div(self)
    }

    /// True iff invariant under swapping `q1 <-> q2`.
    pub fn is_symmetric(&self) -> bool {
        let swapped = Self::canonical(self.num.swap_vars(), self.den.swap_vars());
        *self == swapped
    }

    /// Exact evaluation at rational `q1 = v1`, `q2 = v2`.
    pub fn specialize(&self, v1: &BigRational, v2: &BigRational) -> Result<BigRational> {
        if (v1.is_zero() || v2.is_zero()) && self.has_negative_exponent() {
            return Err(Error::Pole);
        }
        let dv = self.den.eval(v1, v2);
        if dv.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(v1, v2) / dv)
    }

    fn has_negative_exponent(&self) -> bool {
        self.num.terms.keys().any(|(a, b)| *a < 0 || *b < 0)
    }
}

impl fmt::Display for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num.render();
        if self.den.is_one() {
            return f.write_str(&num);
        }
        let den = self.den.render();
        let num = if self.num.num_terms() > 1 {
            format!("({num})")
        } else {
            num
        };
        let den = if den.contains(['+', '-', '*']) {
            format!("({den})")
        } else {
            den
        };
        write!(f, "{num}/{den}")
    }
}

impl fmt::Debug for Coeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}
