//! Finite point sets on the rational line: 1-sphericity versus
//! semiaffinity.
//!
//! A metric space is 1-spherical if for all points `a, b, c` some point `x`
//! has `d(c, x) = d(a, b)`. On the line this asks for `c ± |a - b|` to hit
//! the set, which is semiaffinity in the additive group read with
//! `x = c`, `y - z = a - b`; the two predicates agree on every subset.
//!
//! Consequence for finite sets: a finite 1-spherical subset of the line has
//! at most 2 points. Two cosets of a subgroup `H` of `(Q, +)` are finite
//! only for `H = {0}`. In the other form, a finite nonempty `X = (H ∖ C) + g`
//! would need `H` infinite (cyclic, as `X - X` generates it) and `C`
//! cofinite in `H`; a cofinite proper subset of a copy of `Z` is never
//! midconvex, since a missing `m` sits between members `m - t` and `m + t`
//! for large `t`. This is checked exhaustively in the tests rather than
//! assumed.
//!
//! Arithmetic is exact (`Ratio<i128>`).

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

/// A finite set of rationals, sorted ascending without duplicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinePointSet {
    points: Vec<Rational>,
}

impl LinePointSet {
    pub fn new(points: impl IntoIterator<Item = Rational>) -> Self {
        let mut points: Vec<Rational> = points.into_iter().collect();
        points.sort();
        points.dedup();
        LinePointSet { points }
    }

    pub fn from_integers(points: &[i64]) -> Self {
        Self::new(points.iter().map(|&p| Rational::from_integer(p as i128)))
    }

    pub fn points(&self) -> &[Rational] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, q: &Rational) -> bool {
        self.points.binary_search(q).is_ok()
    }

    /// Applies `x ↦ r·x + s`.
    pub fn map_affine(&self, r: Rational, s: Rational) -> Self {
        Self::new(self.points.iter().map(|p| r * p + s))
    }
}

impl FromStr for LinePointSet {
    type Err = Error;

    /// Comma-separated rationals, e.g. `0,1/2,3`.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(LinePointSet { points: Vec::new() });
        }
        let points = s
            .split(',')
            .map(|tok| {
                let tok = tok.trim();
                Rational::from_str(tok).map_err(|_| Error::parse(tok, "not a rational number"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(points))
    }
}

impl fmt::Display for LinePointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ps: Vec<String> = self.points.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", ps.join(","))
    }
}

/// Triple `(a, b, c)` with no `x` at distance `|a - b|` from `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SphereWitness {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
}

/// Triple `(x, y, z)` with `x + y - z` and `x - y + z` both absent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineWitness {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

/// First violating `(a, b, c)`, scanning `c` outermost, then `a`, then `b`.
pub fn sphere_witness(set: &LinePointSet) -> Option<SphereWitness> {
    let ps = &set.points;
    for c in ps {
        for a in ps {
            for b in ps {
                let d = (a - b).abs();
                if !set.contains(&(c + d)) && !set.contains(&(c - d)) {
                    return Some(SphereWitness {
                        a: *a,
                        b: *b,
                        c: *c,
                    });
                }
            }
        }
    }
    None
}

pub fn is_1_spherical(set: &LinePointSet) -> bool {
    sphere_witness(set).is_none()
}

/// First violating `(x, y, z)`, scanning `z` outermost, then `x`, then `y`
/// (the same order as [`crate::SubsetBits::semiaffine_witness`]).
pub fn line_semiaffine_witness(set: &LinePointSet) -> Option<LineWitness> {
    let ps = &set.points;
    for z in ps {
        for x in ps {
            for y in ps {
                if !set.contains(&(x + y - z)) && !set.contains(&(x - y + z)) {
                    return Some(LineWitness {
                        x: *x,
                        y: *y,
                        z: *z,
                    });
                }
            }
        }
    }
    None
}

pub fn semiaffine_on_line(set: &LinePointSet) -> bool {
    line_semiaffine_witness(set).is_none()
}

/// Integer image `S = (P - min P)·L`, `L` the lcm of denominators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeImage {
    pub points: Vec<u128>,
    pub scale: Rational,
    pub offset: Rational,
}

impl LatticeImage {
    /// Maps an integer point back to the original rational.
    pub fn invert(&self, s: u128) -> Rational {
        Rational::from_integer(s as i128) / self.scale + self.offset
    }
}

pub fn to_integer_lattice(set: &LinePointSet) -> Result<LatticeImage> {
    let offset = *set.points.first().ok_or(Error::EmptyInput)?;
    let l = set.points.iter().fold(1i128, |acc, p| acc.lcm(p.denom()));
    let scale = Rational::from_integer(l);
    let points = set
        .points
        .iter()
        .map(|p| {
            let v = (p - offset) * scale;
            debug_assert!(v.is_integer() && !v.is_negative());
            *v.numer() as u128
        })
        .collect();
    debug_assert!(!offset.denom().is_zero());
    Ok(LatticeImage {
        points,
        scale,
        offset,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    fn pts(s: &str) -> LinePointSet {
        s.parse().unwrap()
    }

    #[test]
    fn spherical_examples() {
        assert!(is_1_spherical(&pts("0,1")));
        let w = sphere_witness(&pts("0,1,2")).unwrap();
        assert_eq!((w.a, w.b, w.c), (q(0, 1), q(2, 1), q(1, 1)));
        assert!(is_1_spherical(&pts("7/3")));
    }

    #[test]
    fn line_semiaffine_examples() {
        assert!(semiaffine_on_line(&pts("0,1")));
        let w = line_semiaffine_witness(&pts("0,1,2")).unwrap();
        assert_eq!((w.x, w.y, w.z), (q(1, 1), q(2, 1), q(0, 1)));
        assert!(semiaffine_on_line(&pts("0,1/2")));
    }

    #[test]
    fn lattice_examples() {
        let img = to_integer_lattice(&pts("1/2,3/2")).unwrap();
        assert_eq!(img.points, [0, 2]);
        assert_eq!(img.scale, q(2, 1));
        assert_eq!(img.offset, q(1, 2));
        assert_eq!(img.invert(2), q(3, 2));
        let img = to_integer_lattice(&pts("0,1")).unwrap();
        assert_eq!(
            (img.points, img.scale, img.offset),
            (vec![0, 1], q(1, 1), q(0, 1))
        );
        assert_eq!(to_integer_lattice(&pts("-5/7")).unwrap().points, [0]);
        assert_eq!(to_integer_lattice(&pts("")).unwrap_err(), Error::EmptyInput);
    }

    #[test]
    fn parsing() {
        assert_eq!(pts(" 3, 0 ,1/2,0").points(), &[q(0, 1), q(1, 2), q(3, 1)]);
        assert!(matches!(
            "0,a".parse::<LinePointSet>(),
            Err(Error::Parse { token, .. }) if token == "a"
        ));
        assert!("1/0".parse::<LinePointSet>().is_err());
    }
}
