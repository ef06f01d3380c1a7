//! Dense matrices over an exact [`Field`] and the linear solves behind the
//! commutant and intertwiner certificates.

use crate::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone + PartialEq> Matrix<E> {
    pub fn zeros<F: Field<Elem = E>>(field: &F, rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Option<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return None;
        }
        let n = rows.len();
        Some(Self {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul<F: Field<Elem = E>>(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = Self::zeros(field, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if field.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if field.is_zero(b) {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = field.add(&out.data[idx], &field.mul(a, b));
                }
            }
        }
        out
    }

    pub fn add_assign<F: Field<Elem = E>>(&mut self, field: &F, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            *a = field.add(a, b);
        }
    }

    pub fn scale<F: Field<Elem = E>>(&self, field: &F, c: &E) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| field.mul(c, x)).collect(),
        }
    }

    /// Writes `block` with its top-left corner at `(row, col)`, adding to
    /// what is there.
    pub fn add_block<F: Field<Elem = E>>(
        &mut self,
        field: &F,
        row: usize,
        col: usize,
        block: &Self,
    ) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                let idx = (row + i) * self.cols + col + j;
                self.data[idx] = field.add(&self.data[idx], block.get(i, j));
            }
        }
    }

    pub fn is_zero<F: Field<Elem = E>>(&self, field: &F) -> bool {
        self.data.iter().all(|x| field.is_zero(x))
    }
}

/// Row-echelon accumulator for a homogeneous linear system.
///
/// Rows are reduced against the existing pivots as they arrive, so the
/// system never holds more than `unknowns` rows.
pub struct Echelon<'f, F: Field> {
    field: &'f F,
    unknowns: usize,
    pivots: Vec<(usize, Vec<F::Elem>)>,
}

impl<'f, F: Field> Echelon<'f, F> {
    pub fn new(field: &'f F, unknowns: usize) -> Self {
        Self {
            field,
            unknowns,
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn nullity(&self) -> usize {
        self.unknowns - self.rank()
    }

    /// Adds one equation; returns whether it was independent of the others.
    pub fn push(&mut self, mut row: Vec<F::Elem>) -> bool {
        let f = self.field;
        debug_assert_eq!(row.len(), self.unknowns);
        for (col, pivot) in &self.pivots {
            if f.is_zero(&row[*col]) {
                continue;
            }
            let c = row[*col].clone();
            for (x, p) in row.iter_mut().zip(pivot) {
                if !f.is_zero(p) {
                    *x = f.sub(x, &f.mul(&c, p));
                }
            }
        }
        let Some(col) = row.iter().position(|x| !f.is_zero(x)) else {
            return false;
        };
        let inv = f.inv(&row[col]).expect("nonzero pivot");
        for x in row.iter_mut() {
            *x = f.mul(x, &inv);
        }
        self.pivots.push((col, row));
        true
    }
}

/// Dimension of `{M : M·A = B·M for every paired (A, B)}` where each `A` is
/// `n×n` and each `B` is `m×m`; `M` is `m×n`.
pub fn intertwiner_dimension<F: Field>(
    field: &F,
    left: &[Matrix<F::Elem>],
    right: &[Matrix<F::Elem>],
) -> usize {
    assert_eq!(left.len(), right.len(), "families must be paired");
    let (Some(a0), Some(b0)) = (left.first(), right.first()) else {
        return 0;
    };
    let (n, m) = (a0.rows(), b0.rows());
    let unknowns = m * n;
    let mut system = Echelon::new(field, unknowns);
    for (a, b) in left.iter().zip(right) {
        for i in 0..m {
            for j in 0..n {
                // (M·A)_ij − (B·M)_ij with M_pq at index p·n + q.
                let mut row = vec![field.zero(); unknowns];
                for k in 0..n {
                    let idx = i * n + k;
                    row[idx] = field.add(&row[idx], a.get(k, j));
                }
                for k in 0..m {
                    let idx = k * n + j;
                    row[idx] = field.sub(&row[idx], b.get(i, k));
                }
                system.push(row);
                if system.rank() == unknowns {
                    return 0;
                }
            }
        }
    }
    system.nullity()
}

/// Dimension of the commutant of a family of square matrices.
pub fn commutant_dimension<F: Field>(field: &F, family: &[Matrix<F::Elem>]) -> usize {
    intertwiner_dimension(field, family, family)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};

    fn q(rows: &[&[i64]]) -> Matrix<<Rationals as Field>::Elem> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rationals.from_i64(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn multiply() {
        let a = q(&[&[1, 2], &[3, 4]]);
        let b = q(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&Rationals, &b), q(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.mul(&Rationals, &Matrix::identity(&Rationals, 2)), a);
    }

    #[test]
    fn echelon_rank() {
        let f = PrimeField::new(5).unwrap();
        let mut e = Echelon::new(&f, 3);
        assert!(e.push(vec![1, 2, 3]));
        assert!(!e.push(vec![2, 4, 1]));
        assert!(e.push(vec![0, 1, 0]));
        assert_eq!(e.nullity(), 1);
    }

    #[test]
    fn regular_rep_of_c2_commutant() {
        // The swap on two coordinates: commutant is spanned by I and the swap.
        let family = vec![Matrix::identity(&Rationals, 2), q(&[&[0, 1], &[1, 0]])];
        assert_eq!(commutant_dimension(&Rationals, &family), 2);
        let trivial = vec![q(&[&[1]]), q(&[&[1]])];
        let sign = vec![q(&[&[1]]), q(&[&[-1]])];
        assert_eq!(intertwiner_dimension(&Rationals, &trivial, &sign), 0);
        assert_eq!(intertwiner_dimension(&Rationals, &trivial, &family), 1);
    }
}
