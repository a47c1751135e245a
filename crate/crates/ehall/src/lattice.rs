//! Lattice geometry for the path combinatorics of the algebra: the clockwise
//! slope order starting at the negative `y` axis, convexity, the area measure
//! driving the straightening induction, and the empty-triangle predicate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::{Error, Result};

/// A nonzero lattice vector `(n, k)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec {
    pub n: i64,
    pub k: i64,
}

impl LatticeVec {
    pub fn new(n: i64, k: i64) -> Result<Self> {
        if n == 0 && k == 0 {
            return Err(Error::ZeroVector);
        }
        Ok(Self { n, k })
    }

    pub fn gcd(&self) -> i64 {
        self.n.gcd(&self.k)
    }

    pub fn is_primitive(&self) -> bool {
        self.gcd() == 1
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.n, self.k)
    }
}

impl fmt::Debug for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `cross(u, v) = n_u k_v - k_u n_v`.
pub fn cross(u: LatticeVec, v: LatticeVec) -> i64 {
    u.n * v.k - u.k * v.n
}

// Sector index along the clockwise sweep that starts at the negative y axis:
// the axis itself, then n < 0, then the positive y axis, then n > 0. Which
// side of the ray the axis itself joins is a convention; only the relative
// order inside the half-plane n < 0 matters for the computations downstream.
fn sector(v: LatticeVec) -> u8 {
    if v.n == 0 {
        if v.k < 0 {
            0
        } else {
            2
        }
    } else if v.n < 0 {
        1
    } else {
        3
    }
}

/// Total preorder realizing the clockwise sweep. Inside a half-plane the
/// order is by decreasing slope, i.e. `u` comes first iff `cross(u, v) < 0`;
/// proportional vectors are tied.
pub fn clockwise_cmp(u: LatticeVec, v: LatticeVec) -> Ordering {
    let (su, sv) = (sector(u), sector(v));
    if su != sv {
        return su.cmp(&sv);
    }
    if su == 0 || su == 2 {
        return Ordering::Equal;
    }
    cross(u, v).cmp(&0)
}

/// True iff the triangle with vertices `0`, `u`, `u + v` has no lattice
/// points other than its vertices, inside or on any edge. By Pick's theorem
/// this is equivalent to `|cross(u, v)| = 1`.
pub fn triangle_is_empty(u: LatticeVec, v: LatticeVec) -> bool {
    cross(u, v).abs() == 1
}

/// An ordered sequence of lattice vectors; empty stands for the unit.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Path(pub Vec<LatticeVec>);

impl Path {
    pub fn new(vectors: Vec<LatticeVec>) -> Self {
        Self(vectors)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of all vectors, `None` for the empty path.
    pub fn total(&self) -> Option<(i64, i64)> {
        if self.0.is_empty() {
            return None;
        }
        Some(
            self.0
                .iter()
                .fold((0, 0), |(n, k), v| (n + v.n, k + v.k)),
        )
    }

    pub fn is_convex(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| clockwise_cmp(w[0], w[1]) != Ordering::Greater)
    }

    /// The same multiset of vectors sorted by the clockwise order; stable,
    /// so tied (proportional) vectors keep their relative order.
    pub fn convexify(&self) -> Self {
        let mut v = self.0.clone();
        v.sort_by(|a, b| clockwise_cmp(*a, *b));
        Self(v)
    }

    /// Area discrepancy from the convexification: the sum of the positive
    /// crosses over all out-of-order pairs. For paths inside one closed
    /// half-plane of the sweep (the straightening machinery only ever uses
    /// the sector `n < 0` together with the downward vertical ray) this is
    /// zero exactly on convex paths, and swapping one adjacent out-of-order
    /// pair decreases it by exactly the cross of that pair. Pairs of
    /// vectors more than half a turn apart are invisible to the cross and
    /// are not measured.
    pub fn area(&self) -> i64 {
        let mut a = 0;
        for i in 0..self.0.len() {
            for j in i + 1..self.0.len() {
                a += cross(self.0[i], self.0[j]).max(0);
            }
        }
        a
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Path {
    type Err = String;

    /// Parses the text form `(n,k);(n,k);...`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Path::default());
        }
        let mut vectors = Vec::new();
        for part in s.split(';') {
            let part = part.trim();
            let inner = part
                .strip_prefix('(')
                .and_then(|p| p.strip_suffix(')'))
                .ok_or_else(|| format!("malformed vector `{part}`, expected `(n,k)`"))?;
            let mut it = inner.splitn(2, ',');
            let n = it
                .next()
                .and_then(|x| x.trim().parse::<i64>().ok())
                .ok_or_else(|| format!("bad first component in `{part}`"))?;
            let k = it
                .next()
                .and_then(|x| x.trim().parse::<i64>().ok())
                .ok_or_else(|| format!("bad second component in `{part}`"))?;
            vectors.push(LatticeVec::new(n, k).map_err(|e| e.to_string())?);
        }
        Ok(Path(vectors))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: i64, k: i64) -> LatticeVec {
        LatticeVec::new(n, k).unwrap()
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(LatticeVec::new(0, 0), Err(Error::ZeroVector));
    }

    #[test]
    fn clockwise_examples() {
        assert_eq!(clockwise_cmp(v(-1, 0), v(-2, 1)), Ordering::Less);
        assert_eq!(clockwise_cmp(v(-1, -2), v(-1, 0)), Ordering::Less);
        assert_eq!(clockwise_cmp(v(-2, 4), v(-1, 2)), Ordering::Equal);
        // sector order: negative y axis, n<0, positive y axis, n>0
        assert_eq!(clockwise_cmp(v(0, -3), v(-1, -5)), Ordering::Less);
        assert_eq!(clockwise_cmp(v(-1, 7), v(0, 2)), Ordering::Less);
        assert_eq!(clockwise_cmp(v(0, 2), v(1, 5)), Ordering::Less);
    }

    #[test]
    fn convexity_and_convexify() {
        assert!(Path::new(vec![v(-1, 0), v(-2, 1)]).is_convex());
        assert!(!Path::new(vec![v(-2, 1), v(-1, 0)]).is_convex());
        assert!(Path::new(vec![v(-3, 2)]).is_convex());
        let p = Path::new(vec![v(-2, 1), v(-1, 0)]);
        assert_eq!(p.convexify(), Path::new(vec![v(-1, 0), v(-2, 1)]));
        let c = Path::new(vec![v(-1, 0), v(-2, 1)]);
        assert_eq!(c.convexify(), c);
        let ties = Path::new(vec![v(-1, 1), v(-1, 1)]);
        assert_eq!(ties.convexify(), ties);
    }

    #[test]
    fn area_values() {
        assert_eq!(Path::new(vec![v(-1, 0), v(-2, 1)]).area(), 0);
        assert_eq!(Path::new(vec![v(-2, 1), v(-1, 0)]).area(), 1);
        assert_eq!(Path::new(vec![v(-2, 1), v(-3, 1)]).area(), 1);
        assert_eq!(Path::new(vec![v(-5, 2)]).area(), 0);
    }

    #[test]
    fn convexify_kills_area_and_is_idempotent() {
        // paths in the closed negative half-plane, where area and the
        // clockwise order see the same pairs
        let paths = [
            Path::new(vec![v(-2, 1), v(-1, 0), v(-1, -3)]),
            Path::new(vec![v(-1, 2), v(-1, 1), v(-2, 1), v(-1, 2)]),
            Path::new(vec![v(-1, 4), v(0, -1), v(-3, -2), v(-1, 0)]),
        ];
        for p in paths {
            let c = p.convexify();
            assert_eq!(c.area(), 0, "{c}");
            assert!(c.is_convex());
            assert_eq!(c.convexify(), c);
        }
    }

    #[test]
    fn adjacent_swap_reduces_area_by_cross() {
        let p = Path::new(vec![v(-2, 1), v(-1, 0), v(-3, 1)]);
        let a = p.area();
        assert!(a > 0);
        // first adjacent pair is out of order
        let c = cross(p.0[0], p.0[1]);
        assert!(c > 0);
        let swapped = Path::new(vec![p.0[1], p.0[0], p.0[2]]);
        assert_eq!(swapped.area(), a - c);
    }

    #[test]
    fn empty_triangle_examples() {
        assert!(triangle_is_empty(v(-1, 0), v(-2, 1)));
        assert!(!triangle_is_empty(v(-2, 0), v(0, 1)));
        assert!(!triangle_is_empty(v(-1, 1), v(-1, -1)));
    }

    #[test]
    fn empty_triangle_implies_primitive() {
        for un in -4..=4i64 {
            for uk in -4..=4i64 {
                for vn in -4..=4i64 {
                    for vk in -4..=4i64 {
                        if (un, uk) == (0, 0) || (vn, vk) == (0, 0) {
                            continue;
                        }
                        let (u, w) = (v(un, uk), v(vn, vk));
                        if triangle_is_empty(u, w) {
                            let s = LatticeVec::new(un + vn, uk + vk).unwrap();
                            assert!(u.is_primitive() && w.is_primitive() && s.is_primitive());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn path_text_form_round_trips() {
        let p = Path::new(vec![v(-1, 0), v(-2, 1)]);
        assert_eq!(p.to_string(), "(-1,0);(-2,1)");
        assert_eq!("(-1,0);(-2,1)".parse::<Path>().unwrap(), p);
        assert!("(-1,0);(0,0)".parse::<Path>().is_err());
        assert!("nonsense".parse::<Path>().is_err());
    }
}
