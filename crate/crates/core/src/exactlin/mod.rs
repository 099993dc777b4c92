//! Exact linear algebra over ℚ and 𝔽_p.
//!
//! Vectors are rows and maps act on the right: the composite "f then g" is
//! the product `F·G`. Every routine is deterministic; solutions are the
//! reduced-echelon particular solutions with free variables set to zero.

mod echelon;
mod mat;
mod scalar;

pub use echelon::{rref, Echelon};
pub use mat::Mat;
pub use scalar::{Field, Scalar, MAX_PRIME};

pub fn rank(m: &Mat) -> usize {
    rref(m).rank()
}

/// Rank of `m` together with a basis (as rows) of its left kernel
/// `{v : v·m = 0}`.
pub fn rank_kernel(m: &Mat) -> (usize, Mat) {
    let field = m.field();
    let ech = rref(&m.transpose());
    let n = m.rows();
    let mut is_pivot = vec![None; n];
    for (k, &c) in ech.pivots.iter().enumerate() {
        is_pivot[c] = Some(k);
    }
    let free: Vec<usize> = (0..n).filter(|&c| is_pivot[c].is_none()).collect();
    let mut ker = Mat::zeros(field, free.len(), n);
    for (i, &f) in free.iter().enumerate() {
        ker.set(i, f, field.one());
        for (k, &pc) in ech.pivots.iter().enumerate() {
            let x = ech.rows.get(k, f);
            if !x.is_zero() {
                ker.set(i, pc, -x);
            }
        }
    }
    (ech.rank(), ker)
}

pub fn kernel(m: &Mat) -> Mat {
    rank_kernel(m).1
}

/// Solves `x·a = b`; `None` when some row of `b` is outside the row space
/// of `a`.
pub fn solve_right(a: &Mat, b: &Mat) -> Option<Mat> {
    assert_eq!(a.cols(), b.cols(), "solve_right: column mismatch");
    let field = a.field();
    let n = a.rows();
    let aug = a.transpose().hstack(&b.transpose());
    let ech = rref(&aug);
    if ech.pivots.iter().any(|&c| c >= n) {
        return None;
    }
    let mut x = Mat::zeros(field, b.rows(), n);
    for (k, &pc) in ech.pivots.iter().enumerate() {
        for i in 0..b.rows() {
            let v = ech.rows.get(k, n + i);
            if !v.is_zero() {
                x.set(i, pc, v.clone());
            }
        }
    }
    Some(x)
}

/// Quotient of an ambient space `k^amb_dim` by the row space of `sub`.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Ambient coordinates that survive as quotient coordinates.
    pub complement: Vec<usize>,
    /// `amb_dim × q` matrix sending a vector to its class.
    pub projection: Mat,
    /// `q × amb_dim` matrix of unit vectors lifting the quotient basis.
    pub section: Mat,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.complement.len()
    }
}

pub fn image_quotient(sub: &Mat, amb_dim: usize) -> Quotient {
    assert_eq!(sub.cols(), amb_dim, "image_quotient: ambient mismatch");
    let field = sub.field();
    let ech = rref(sub);
    let mut pivot_row = vec![None; amb_dim];
    for (k, &c) in ech.pivots.iter().enumerate() {
        pivot_row[c] = Some(k);
    }
    let complement: Vec<usize> = (0..amb_dim).filter(|&c| pivot_row[c].is_none()).collect();
    let q = complement.len();
    let mut projection = Mat::zeros(field, amb_dim, q);
    let mut section = Mat::zeros(field, q, amb_dim);
    for (t, &c) in complement.iter().enumerate() {
        projection.set(c, t, field.one());
        section.set(t, c, field.one());
        for (k, &pc) in ech.pivots.iter().enumerate() {
            let x = ech.rows.get(k, c);
            if !x.is_zero() {
                projection.set(pc, t, -x);
            }
        }
    }
    Quotient {
        complement,
        projection,
        section,
    }
}

/// A basis (rows, reduced echelon) of the row space.
pub fn row_basis(m: &Mat) -> Mat {
    rref(m).rows
}

/// Row basis of the intersection of two row spaces inside the same ambient.
pub fn intersect(a: &Mat, b: &Mat) -> Mat {
    assert_eq!(a.cols(), b.cols());
    let a = row_basis(a);
    let b = row_basis(b);
    // x·a = y·b  <=>  (x, -y) in the left kernel of [a; b]
    let ker = kernel(&a.vstack(&b));
    let coeffs = ker.submatrix(0..ker.rows(), 0..a.rows());
    row_basis(&coeffs.mul(&a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    fn q(rows: &[&[i64]]) -> Mat {
        Mat::from_i64(Field::Rational, rows)
    }

    /// Schoolbook rank over BigRational, independent of the integer path.
    fn oracle_rank(m: &Mat) -> usize {
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| {
                m.row(r)
                    .iter()
                    .map(|x| x.as_rational().unwrap().clone())
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for c in 0..m.cols() {
            let Some(p) = (rank..a.len()).find(|&i| a[i][c] != BigRational::from_integer(0.into()))
            else {
                continue;
            };
            a.swap(rank, p);
            for i in 0..a.len() {
                if i != rank {
                    let f = &a[i][c] / &a[rank][c];
                    for j in 0..m.cols() {
                        let t = &a[rank][j] * &f;
                        a[i][j] -= t;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_has_full_rank() {
        let (r, k) = rank_kernel(&Mat::identity(Field::Rational, 3));
        assert_eq!(r, 3);
        assert_eq!(k.rows(), 0);
    }

    #[test]
    fn zero_map_kernel_is_everything() {
        let (r, k) = rank_kernel(&Mat::zeros(Field::Rational, 2, 4));
        assert_eq!(r, 0);
        assert_eq!(k, Mat::identity(Field::Rational, 2));
    }

    #[test]
    fn rank_one_kernel() {
        let (r, k) = rank_kernel(&q(&[&[1, 2], &[2, 4]]));
        assert_eq!(r, 1);
        // spanned by (2,-1): the returned row is (-2, 1)
        assert_eq!(k, q(&[&[-2, 1]]));
    }

    #[test]
    fn solve_examples() {
        let b = q(&[&[3, -1, 2], &[0, 5, 7]]);
        assert_eq!(
            solve_right(&Mat::identity(Field::Rational, 3), &b).unwrap(),
            b
        );
        let z = Mat::zeros(Field::Rational, 2, 2);
        assert_eq!(solve_right(&z, &z).unwrap(), z);
        assert_eq!(
            solve_right(&q(&[&[1, 1]]), &q(&[&[2, 2]])).unwrap(),
            q(&[&[2]])
        );
        assert!(solve_right(&q(&[&[1, 1]]), &q(&[&[1, 2]])).is_none());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(
            image_quotient(&Mat::identity(Field::Rational, 3), 3).dim(),
            0
        );
        let qt = image_quotient(&Mat::zeros(Field::Rational, 0, 3), 3);
        assert_eq!(qt.projection, Mat::identity(Field::Rational, 3));
        let qt = image_quotient(&q(&[&[1, 0, 0]]), 3);
        assert_eq!(qt.dim(), 2);
    }

    #[test]
    fn prime_field_elimination() {
        let f = Field::prime(5).unwrap();
        // rank 1 over F_5 since the second row is 2× the first mod 5
        let m = Mat::from_i64(f, &[&[1, 3], &[2, 1]]);
        assert_eq!(rank(&m), 1);
        let (_, k) = rank_kernel(&m);
        assert!(k.mul(&m).is_zero());
    }

    fn small_mat() -> impl Strategy<Value = Mat> {
        (0usize..6, 0usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-3i64..4, r * c).prop_map(move |v| {
                let rows: Vec<&[i64]> = if c == 0 {
                    vec![&[]; r]
                } else {
                    v.chunks(c).collect()
                };
                let mut m = Mat::zeros(Field::Rational, r, c);
                for (i, row) in rows.iter().enumerate() {
                    for (j, &x) in row.iter().enumerate() {
                        m.set(i, j, Field::Rational.from_i64(x));
                    }
                }
                m
            })
        })
    }

    proptest! {
        #[test]
        fn rank_matches_oracle_and_transpose(m in small_mat()) {
            let r = rank(&m);
            prop_assert_eq!(r, oracle_rank(&m));
            prop_assert_eq!(r, rank(&m.transpose()));
        }

        #[test]
        fn kernel_is_exact(m in small_mat()) {
            let (r, k) = rank_kernel(&m);
            prop_assert_eq!(r + k.rows(), m.rows());
            prop_assert!(k.mul(&m).is_zero());
            prop_assert_eq!(rank(&k), k.rows());
        }

        #[test]
        fn solve_round_trips(m in small_mat(), seed in 0i64..50) {
            // b in the row space by construction
            let coeffs = Mat::from_rows(Field::Rational, m.rows(),
                vec![(0..m.rows()).map(|i| Field::Rational.from_i64((seed + i as i64) % 5 - 2)).collect()]);
            let b = coeffs.mul(&m);
            let x = solve_right(&m, &b).expect("b lies in the row space");
            prop_assert_eq!(x.mul(&m), b);
        }

        #[test]
        fn projection_kills_subspace(m in small_mat()) {
            let qt = image_quotient(&m, m.cols());
            prop_assert_eq!(qt.dim(), m.cols() - rank(&m));
            prop_assert!(m.mul(&qt.projection).is_zero());
            prop_assert_eq!(qt.section.mul(&qt.projection), Mat::identity(Field::Rational, qt.dim()));
        }

        #[test]
        fn deterministic(m in small_mat()) {
            prop_assert_eq!(rank_kernel(&m).1, rank_kernel(&m.clone()).1);
        }
    }
}
