//! Partial permutations of `{0, …, n−1}`.
//!
//! A [`PartialPerm`] is an injective map from a subset of the points onto
//! another subset. Composition is a left action: `a.compose(&b)` applies `b`
//! first and then `a`, so `(a ∘ b)(x) = a(b(x))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Sentinel stored in the image table for points outside the domain.
pub const UNDEFINED: u32 = u32::MAX;

/// A point of the ambient set, 0-based.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point(pub u32);

/// Injective partial self-map of `{0, …, degree − 1}`.
///
/// The canonical encoding is the image table: entry `x` holds `a(x)` or
/// [`UNDEFINED`]. Equality, ordering and hashing all use that table.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialPerm {
    images: Vec<u32>,
}

impl PartialPerm {
    /// Builds a partial permutation from its image table, checking bounds
    /// and injectivity.
    pub fn new(images: Vec<Option<u32>>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for (x, image) in images.into_iter().enumerate() {
            match image {
                None => table.push(UNDEFINED),
                Some(y) => {
                    let yi = y as usize;
                    if yi >= degree {
                        return Err(Error::Input(format!(
                            "image {y} of point {x} is out of range for degree {degree}"
                        )));
                    }
                    if seen[yi] {
                        return Err(Error::Input(format!(
                            "point {y} is the image of two points; map is not injective"
                        )));
                    }
                    seen[yi] = true;
                    table.push(y);
                }
            }
        }
        Ok(Self { images: table })
    }

    /// Builds a map from `(source, target)` pairs; unmentioned points are
    /// undefined.
    pub fn from_pairs(degree: usize, pairs: &[(u32, u32)]) -> Result<Self> {
        let mut images = vec![None; degree];
        for &(x, y) in pairs {
            let slot = images.get_mut(x as usize).ok_or_else(|| {
                Error::Input(format!("point {x} is out of range for degree {degree}"))
            })?;
            if slot.is_some() {
                return Err(Error::Input(format!("point {x} is mapped twice")));
            }
            *slot = Some(y);
        }
        Self::new(images)
    }

    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree as u32).collect(),
        }
    }

    /// The empty map, the zero of the symmetric inverse monoid.
    pub fn empty(degree: usize) -> Self {
        Self {
            images: vec![UNDEFINED; degree],
        }
    }

    /// Identity restricted to `points`.
    pub fn partial_identity(degree: usize, points: &[u32]) -> Result<Self> {
        let pairs: Vec<_> = points.iter().map(|&p| (p, p)).collect();
        Self::from_pairs(degree, &pairs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Number of defined points.
    pub fn rank(&self) -> usize {
        self.images.iter().filter(|&&y| y != UNDEFINED).count()
    }

    pub fn apply(&self, x: Point) -> Option<Point> {
        match self.images.get(x.0 as usize) {
            Some(&y) if y != UNDEFINED => Some(Point(y)),
            _ => None,
        }
    }

    /// Raw image table, [`UNDEFINED`] marking gaps.
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image table in file form, `None` for undefined points.
    pub fn to_literal(&self) -> Vec<Option<u32>> {
        self.images
            .iter()
            .map(|&y| (y != UNDEFINED).then_some(y))
            .collect()
    }

    /// Sorted domain points.
    pub fn domain_points(&self) -> Vec<u32> {
        (0..self.degree() as u32)
            .filter(|&x| self.images[x as usize] != UNDEFINED)
            .collect()
    }

    /// Sorted range points.
    pub fn range_points(&self) -> Vec<u32> {
        let mut r: Vec<u32> = self
            .images
            .iter()
            .copied()
            .filter(|&y| y != UNDEFINED)
            .collect();
        r.sort_unstable();
        r
    }

    /// `self ∘ other`: apply `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let images = other
            .images
            .iter()
            .map(|&y| {
                if y == UNDEFINED {
                    UNDEFINED
                } else {
                    self.images[y as usize]
                }
            })
            .collect();
        Self { images }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![UNDEFINED; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            if y != UNDEFINED {
                images[y as usize] = x as u32;
            }
        }
        Self { images }
    }

    /// Partial identity on the domain, `a⁻¹a`.
    pub fn domain_of(&self) -> Self {
        let images = self
            .images
            .iter()
            .enumerate()
            .map(|(x, &y)| if y == UNDEFINED { UNDEFINED } else { x as u32 })
            .collect();
        Self { images }
    }

    /// Partial identity on the range, `aa⁻¹`.
    pub fn range_of(&self) -> Self {
        let mut images = vec![UNDEFINED; self.degree()];
        for &y in &self.images {
            if y != UNDEFINED {
                images[y as usize] = y;
            }
        }
        Self { images }
    }

    pub fn is_idempotent(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(x, &y)| y == UNDEFINED || y == x as u32)
    }

    /// Natural partial order: `self ≤ other` iff `self` is a restriction of
    /// `other`.
    pub fn natural_leq(&self, other: &Self) -> Result<bool> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self
            .images
            .iter()
            .zip(&other.images)
            .all(|(&b, &a)| b == UNDEFINED || b == a))
    }

    /// 0/1 matrix with a one at `(i, j)` exactly when `a(j) = i`.
    pub fn to_rook_matrix(&self) -> Vec<Vec<u8>> {
        let n = self.degree();
        let mut m = vec![vec![0u8; n]; n];
        for (j, &i) in self.images.iter().enumerate() {
            if i != UNDEFINED {
                m[i as usize][j] = 1;
            }
        }
        m
    }
}

impl fmt::Debug for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PartialPerm({self})")
    }
}

/// Image table with `-` for undefined points, e.g. `[-,0,1,2]`.
impl fmt::Display for PartialPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, &y) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if y == UNDEFINED {
                f.write_str("-")?;
            } else {
                write!(f, "{y}")?;
            }
        }
        f.write_str("]")
    }
}

impl Serialize for PartialPerm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_literal().serialize(s)
    }
}

impl<'de> Deserialize<'de> for PartialPerm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let literal = Vec::<Option<u32>>::deserialize(d)?;
        PartialPerm::new(literal).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // The degree-4 shift 2→1, 3→2, 4→3 in 1-based labels; 0-based it is
    // 1→0, 2→1, 3→2.
    fn shift4() -> PartialPerm {
        PartialPerm::new(vec![None, Some(0), Some(1), Some(2)]).unwrap()
    }

    #[test]
    fn rejects_non_injective_and_out_of_range() {
        assert!(PartialPerm::new(vec![Some(0), Some(0)]).is_err());
        assert!(PartialPerm::new(vec![Some(2), None]).is_err());
        assert!(PartialPerm::from_pairs(2, &[(0, 1), (0, 0)]).is_err());
    }

    #[test]
    fn compose_shift_with_itself() {
        let a = shift4();
        // 1-based 3→1, 4→2.
        let expected = PartialPerm::from_pairs(4, &[(2, 0), (3, 1)]).unwrap();
        assert_eq!(a.compose(&a).unwrap(), expected);
        assert_eq!(PartialPerm::identity(4).compose(&a).unwrap(), a);
    }

    #[test]
    fn compose_with_inverse_is_range() {
        let a = shift4();
        let ran = PartialPerm::partial_identity(4, &[0, 1, 2]).unwrap();
        assert_eq!(a.compose(&a.inverse()).unwrap(), ran);
        assert_eq!(a.range_of(), ran);
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = PartialPerm::identity(3).compose(&PartialPerm::identity(4));
        assert!(matches!(
            err,
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_cases() {
        let a = shift4();
        let expected = PartialPerm::from_pairs(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(a.inverse(), expected);
        assert_eq!(PartialPerm::empty(3).inverse(), PartialPerm::empty(3));
        let e = PartialPerm::partial_identity(4, &[1, 3]).unwrap();
        assert_eq!(e.inverse(), e);
    }

    #[test]
    fn domain_and_range() {
        let a = shift4();
        assert_eq!(
            a.domain_of(),
            PartialPerm::partial_identity(4, &[1, 2, 3]).unwrap()
        );
        assert_eq!(
            a.range_of(),
            PartialPerm::partial_identity(4, &[0, 1, 2]).unwrap()
        );
        assert_eq!(a.domain_of(), a.inverse().compose(&a).unwrap());
        assert_eq!(PartialPerm::empty(2).domain_of(), PartialPerm::empty(2));
    }

    #[test]
    fn natural_order_examples() {
        let a = shift4();
        assert!(PartialPerm::empty(4).natural_leq(&a).unwrap());
        // 1-based 3→2 is 0-based 2→1.
        let b = PartialPerm::from_pairs(4, &[(2, 1)]).unwrap();
        assert!(b.natural_leq(&a).unwrap());
        let c = PartialPerm::from_pairs(4, &[(2, 0)]).unwrap();
        assert!(!c.natural_leq(&a).unwrap());
    }

    #[test]
    fn rook_matrix_of_shift() {
        let expected = vec![
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
            vec![0, 0, 0, 0],
        ];
        assert_eq!(shift4().to_rook_matrix(), expected);
        assert_eq!(
            PartialPerm::identity(2).to_rook_matrix(),
            vec![vec![1, 0], vec![0, 1]]
        );
        assert_eq!(
            PartialPerm::empty(2).to_rook_matrix(),
            vec![vec![0, 0], vec![0, 0]]
        );
    }

    #[test]
    fn literal_round_trip_and_display() {
        let a = shift4();
        assert_eq!(serde_json::to_string(&a).unwrap(), "[null,0,1,2]");
        let back: PartialPerm = serde_json::from_str("[null,0,1,2]").unwrap();
        assert_eq!(back, a);
        assert_eq!(a.to_string(), "[-,0,1,2]");
        assert!(serde_json::from_str::<PartialPerm>("[0,0]").is_err());
    }
}
