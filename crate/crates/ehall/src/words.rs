//! The word basis of the negative half of the algebra: integer tuples
//! `E_{(d_1,...,d_n)}` and finite linear combinations of them over the
//! coefficient field.
//!
//! Products of words close under the two-term rule
//! `E_u E_w = E_{u.w} - q E_{u',w'}` where `u.w` is concatenation and the
//! primed word lowers the last entry of `u` and raises the first entry of
//! `w`. The reduced bracket with a degree-one generator `E_k` is given by an
//! explicit sum of entry splittings. The same structures serve the mirrored
//! half of the algebra (the `F` generators satisfy the opposite relations),
//! so no separate type is provided for it.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;

use crate::coeff::Coeff;
use crate::{Error, Result};

/// A basis word `(d_1,...,d_n)`; the empty word is the unit.
///
/// Ordered by length first, then lexicographically, which fixes the
/// deterministic term order used everywhere downstream.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<i64>);

impl Word {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entry_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Bidegree `(-n, sum of entries)`.
    pub fn bidegree(&self) -> (i64, i64) {
        (-(self.0.len() as i64), self.entry_sum())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "E({})", parts.join(","))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A finite linear combination of words with [`Coeff`] coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WordSum {
    terms: BTreeMap<Word, Coeff>,
}

/// The basis word with coefficient one.
pub fn e_word(entries: &[i64]) -> WordSum {
    WordSum::from_word(Word(entries.to_vec()))
}

impl WordSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit() -> Self {
        Self::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w, Coeff::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Coeff)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, w: &Word) -> Coeff {
        self.terms.get(w).cloned().unwrap_or_else(Coeff::zero)
    }

    /// The greatest word (in the deterministic order) and its coefficient.
    pub fn leading(&self) -> Option<(Word, Coeff)> {
        self.terms
            .last_key_value()
            .map(|(w, c)| (w.clone(), c.clone()))
    }

    pub fn add_term(&mut self, w: Word, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    /// `self -= c * other`, reusing the existing allocation.
    pub fn sub_scaled_in_place(&mut self, other: &Self, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(w.clone(), x.mul(c).neg());
        }
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x.mul(c)))
                .collect(),
        }
    }

    /// Product of two basis words by the two-term closure rule; the unit
    /// word acts as identity.
    fn mul_words(u: &Word, w: &Word) -> Self {
        if u.is_empty() {
            return Self::from_word(w.clone());
        }
        if w.is_empty() {
            return Self::from_word(u.clone());
        }
        let mut concat = u.0.clone();
        concat.extend_from_slice(&w.0);
        let mut shifted = u.0.clone();
        *shifted.last_mut().unwrap() -= 1;
        let mut tail = w.0.clone();
        tail[0] += 1;
        shifted.extend_from_slice(&tail);
        let mut out = Self::from_word(Word(concat));
        out.add_term(Word(shifted), Coeff::q().neg());
        out
    }

    /// Bilinear product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, cu) in &self.terms {
            for (w, cw) in &other.terms {
                let c = cu.mul(cw);
                for (word, k) in Self::mul_words(u, w).terms {
                    out.add_term(word, k.mul(&c));
                }
            }
        }
        out
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// The commutator divided by `(1 - q1)(1 - q2)`, always legal in the
    /// fraction field. Note this agrees with [`WordSum::bracket_ek`] only
    /// modulo the relations, not term by term.
    pub fn reduced_commutator(&self, other: &Self) -> Self {
        let f = Coeff::commutator_factor();
        self.commutator(other)
            .scale(&f.inv().expect("factor is nonzero"))
    }

    /// The reduced bracket `[a, E_k]` in closed form: for each entry `d_i`
    /// of each word, the entry is split into pairs `(a, d_i + k - a)` with
    /// `a` running between `d_i` and `k`, positively when `d_i < k` and
    /// negatively when `d_i > k`; entries equal to `k` contribute nothing.
    pub fn bracket_ek(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            for i in 0..w.0.len() {
                let d = w.0[i];
                if d == k {
                    continue;
                }
                let (lo, hi, sign) = if d < k { (d, k, 1) } else { (k, d, -1) };
                for a in lo..hi {
                    let mut entries = Vec::with_capacity(w.0.len() + 1);
                    entries.extend_from_slice(&w.0[..i]);
                    entries.push(a);
                    entries.push(d + k - a);
                    entries.extend_from_slice(&w.0[i + 1..]);
                    let coef = if sign > 0 { c.clone() } else { c.neg() };
                    out.add_term(Word(entries), coef);
                }
            }
        }
        out
    }

    /// Machine form: terms in the deterministic order, coefficients in the
    /// canonical fraction text form.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(w, c)| {
                serde_json::json!({
                    "word": w.0,
                    "coef": c.to_string(),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    /// Bidegree if all words share one, `None` otherwise (or for zero).
    pub fn bidegree(&self) -> Option<(i64, i64)> {
        let mut it = self.terms.keys();
        let first = it.next()?.bidegree();
        for w in it {
            if w.bidegree() != first {
                return None;
            }
        }
        Some(first)
    }
}

impl fmt::Display for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                let cs = c.to_string();
                if cs.contains(['+', '-', '/']) && !cs.starts_with('-') || cs.contains([' ']) {
                    write!(f, "({cs})*{w}")?;
                } else if cs.starts_with('-') && cs[1..].contains([' ', '+', '/']) {
                    write!(f, "({cs})*{w}")?;
                } else {
                    write!(f, "{cs}*{w}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for WordSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn ceil_div(a: i64, b: i64) -> i64 {
    // b > 0
    a.div_euclid(b) + i64::from(a.rem_euclid(b) != 0)
}

/// The word dictionary for `E_{-n,k}` with `n >= 1`: the tuple
/// `d_i = ceil(ki/n) - ceil(k(i-1)/n) + [i = n] - [i = 1]` together with the
/// prefactor `q^(gcd(n,k) - 1)`. The entries always sum to `k`.
pub fn enk_tuple(n: i64, k: i64) -> Result<(Word, Coeff)> {
    if n < 1 {
        return Err(Error::BadEnkIndex(n));
    }
    let mut entries = Vec::with_capacity(n as usize);
    for i in 1..=n {
        let mut d = ceil_div(k * i, n) - ceil_div(k * (i - 1), n);
        if i == n {
            d += 1;
        }
        if i == 1 {
            d -= 1;
        }
        entries.push(d);
    }
    let g = n.gcd(&k);
    Ok((Word(entries), Coeff::q_pow(g - 1)))
}

/// `E_{-n,k}` as an element: prefactor times the dictionary word.
pub fn enk_elem(n: i64, k: i64) -> Result<WordSum> {
    let (w, c) = enk_tuple(n, k)?;
    Ok(WordSum::from_word(w).scale(&c))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_and_single_words() {
        assert_eq!(e_word(&[]), WordSum::unit());
        let ek = e_word(&[5]);
        assert_eq!(ek.num_terms(), 1);
        assert_eq!(ek.bidegree(), Some((-1, 5)));
    }

    #[test]
    fn enk_dictionary_reproduces_known_tuples() {
        let (w, c) = enk_tuple(2, 1).unwrap();
        assert_eq!(w, Word(vec![0, 1]));
        assert!(c.is_one());
        let (w, c) = enk_tuple(3, 1).unwrap();
        assert_eq!(w, Word(vec![0, 0, 1]));
        assert!(c.is_one());
        let (w, c) = enk_tuple(5, 2).unwrap();
        assert_eq!(w, Word(vec![0, 0, 1, 0, 1]));
        assert!(c.is_one());
        let (w, c) = enk_tuple(2, 2).unwrap();
        assert_eq!(w, Word(vec![0, 2]));
        assert_eq!(c, Coeff::q());
        assert!(enk_tuple(0, 3).is_err());
        assert!(enk_tuple(-1, 3).is_err());
    }

    #[test]
    fn enk_entries_sum_to_k() {
        for n in 1..=6 {
            for k in -7..=7 {
                let (w, _) = enk_tuple(n, k).unwrap();
                assert_eq!(w.entry_sum(), k, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn product_of_single_words() {
        let p = e_word(&[3]).mul(&e_word(&[7]));
        let mut expect = e_word(&[3, 7]);
        expect.add_term(Word(vec![2, 8]), Coeff::q().neg());
        assert_eq!(p, expect);
    }

    #[test]
    fn unit_is_identity() {
        let a = e_word(&[1, -2]).add(&e_word(&[0]).scale(&Coeff::q()));
        assert_eq!(WordSum::unit().mul(&a), a);
        assert_eq!(a.mul(&WordSum::unit()), a);
    }

    #[test]
    fn triple_product_associates() {
        // (E_a E_b) E_c = E_a (E_b E_c), expanded form frozen from the rule
        for (a, b, c) in [(0, 1, 2), (-1, 3, 0), (2, 2, 2)] {
            let left = e_word(&[a]).mul(&e_word(&[b])).mul(&e_word(&[c]));
            let right = e_word(&[a]).mul(&e_word(&[b]).mul(&e_word(&[c])));
            assert_eq!(left, right);
            let q = Coeff::q();
            let mut expect = e_word(&[a, b, c]);
            expect.add_term(Word(vec![a, b - 1, c + 1]), q.neg());
            expect.add_term(Word(vec![a - 1, b + 1, c]), q.neg());
            expect.add_term(Word(vec![a - 1, b, c + 1]), q.mul(&q));
            assert_eq!(left, expect);
        }
    }

    #[test]
    fn bidegrees_add_under_mul() {
        let a = e_word(&[0, 1]);
        let b = e_word(&[2, -1, 3]);
        let p = a.mul(&b);
        assert_eq!(p.bidegree(), Some((-5, 5)));
    }

    #[test]
    fn bracket_with_single_generator() {
        assert_eq!(e_word(&[0]).bracket_ek(1), e_word(&[0, 1]));
        for k in -3..=3 {
            assert!(e_word(&[k, k]).bracket_ek(k).is_zero());
        }
        assert_eq!(e_word(&[0, 1]).bracket_ek(0), e_word(&[0, 0, 1]).neg());
    }

    #[test]
    fn bracket_intermediates_for_the_double_bracket_chain() {
        let a = e_word(&[0, 0, 1]).bracket_ek(1);
        assert_eq!(a, e_word(&[0, 1, 0, 1]).add(&e_word(&[0, 0, 1, 1])));
        let b = e_word(&[0, 0, 1]).bracket_ek(0);
        assert_eq!(b, e_word(&[0, 0, 0, 1]).neg());
    }

    #[test]
    fn bracket_degree_shift() {
        let x = e_word(&[1, 4]).bracket_ek(-2);
        assert_eq!(x.bidegree(), Some((-3, 3)));
    }

    #[test]
    fn commutator_example() {
        let c = e_word(&[0]).commutator(&e_word(&[0, 1]));
        let q = Coeff::q();
        let mut expect = WordSum::zero();
        expect.add_term(Word(vec![0, 0, 1]), Coeff::one().add(&q));
        expect.add_term(Word(vec![-1, 1, 1]), q.neg());
        expect.add_term(Word(vec![0, 1, 0]), Coeff::one().neg());
        assert_eq!(c, expect);
    }

    #[test]
    fn commutator_antisymmetry() {
        let a = e_word(&[0, 1]).add(&e_word(&[2]).scale(&Coeff::q1()));
        let b = e_word(&[-1]).sub(&e_word(&[1, 1]));
        assert!(a.commutator(&a).is_zero());
        assert_eq!(a.commutator(&b), b.commutator(&a).neg());
        assert_eq!(
            a.reduced_commutator(&b),
            b.reduced_commutator(&a).neg()
        );
    }

    #[test]
    fn reduced_commutator_scales_back() {
        let a = e_word(&[0]);
        let b = e_word(&[0, 1]);
        let f = Coeff::commutator_factor();
        assert_eq!(a.reduced_commutator(&b).scale(&f), a.commutator(&b));
    }

    #[test]
    fn entry_sum_conservation() {
        let a = e_word(&[1, 2]);
        let b = e_word(&[0, -3, 1]);
        for (w, _) in a.mul(&b).terms() {
            assert_eq!(w.entry_sum(), 1);
        }
        for (w, _) in a.bracket_ek(4).terms() {
            assert_eq!(w.entry_sum(), 7);
        }
    }
}
