//! Exact Gaussian elimination over a [`Field`].

use crate::field::{Field, Scalar};

/// Reduces `rows` to reduced row echelon form in place, dropping zero rows.
/// Returns the pivot column of each remaining row.
pub fn row_reduce(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("pivot is nonzero");
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..ncols {
                    let sub = &factor * &rows[r][j];
                    rows[i][j] = &rows[i][j] - &sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// A subspace of `K^dim`, held as a reduced row echelon basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    dim: usize,
    field: Field,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn span(
        field: Field,
        dim: usize,
        vectors: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = vectors.into_iter().collect();
        debug_assert!(rows.iter().all(|r| r.len() == dim));
        let pivots = row_reduce(&mut rows, dim);
        Subspace {
            dim,
            field,
            rows,
            pivots,
        }
    }

    /// Solutions `v` of `M v = 0`, where `equations` are the rows of `M`.
    pub fn kernel(
        field: Field,
        dim: usize,
        equations: impl IntoIterator<Item = Vec<Scalar>>,
    ) -> Subspace {
        let mut rows: Vec<Vec<Scalar>> = equations.into_iter().collect();
        let pivots = row_reduce(&mut rows, dim);
        let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
        let basis = free.iter().map(|&f| {
            let mut v = vec![field.zero(); dim];
            v[f] = field.one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -&row[f];
            }
            v
        });
        Subspace::span(field, dim, basis.collect::<Vec<_>>())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let factor = v[p].clone();
                for j in 0..self.dim {
                    let sub = &factor * &row[j];
                    v[j] = &v[j] - &sub;
                }
            }
        }
        v.iter().all(Scalar::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// Equality as subspaces: same dimension and containment both ways.
    pub fn same_as(&self, other: &Subspace) -> bool {
        self.dimension() == other.dimension()
            && self.contains_subspace(other)
            && other.contains_subspace(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }
}

pub fn rank(field: Field, ncols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> usize {
    Subspace::span(field, ncols, rows).dimension()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| f.from_int(x)).collect()
    }

    #[test]
    fn rank_and_containment() {
        let q = Field::Rational;
        let s = Subspace::span(
            q,
            3,
            vec![v(q, &[1, 2, 3]), v(q, &[2, 4, 6]), v(q, &[0, 1, 1])],
        );
        assert_eq!(s.dimension(), 2);
        assert!(s.contains(&v(q, &[1, 3, 4])));
        assert!(!s.contains(&v(q, &[0, 0, 1])));
    }

    #[test]
    fn kernel_of_rank_one_map() {
        let q = Field::Rational;
        let k = Subspace::kernel(q, 3, vec![v(q, &[1, 1, 1])]);
        assert_eq!(k.dimension(), 2);
        assert!(k.contains(&v(q, &[1, -1, 0])));
        assert!(k.contains(&v(q, &[0, 1, -1])));
        assert!(!k.contains(&v(q, &[1, 0, 0])));
    }

    #[test]
    fn rank_depends_on_characteristic() {
        let rows = |f: Field| vec![v(f, &[1, 1]), v(f, &[1, -1])];
        assert_eq!(rank(Field::Rational, 2, rows(Field::Rational)), 2);
        assert_eq!(rank(Field::Prime(2), 2, rows(Field::Prime(2))), 1);
    }
}
