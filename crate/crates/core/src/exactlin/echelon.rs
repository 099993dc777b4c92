//! Reduced row echelon form.
//!
//! Over ℚ rows are cleared to primitive integer vectors and eliminated
//! fraction-free (cross-multiplication followed by content removal); the
//! rational form is only rebuilt once at the end. Over 𝔽_p it is plain
//! Gauss–Jordan.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mat::Mat;
use super::scalar::{Field, Scalar};

/// Result of row reduction: the nonzero rows of the reduced echelon form
/// and the pivot column of each.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub pivots: Vec<usize>,
    pub rows: Mat,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn rref(m: &Mat) -> Echelon {
    match m.field() {
        Field::Rational => rref_rational(m),
        Field::Prime { p } => rref_prime(m, p),
    }
}

fn primitive(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        if !x.is_zero() {
            *x /= &g;
        }
    }
}

fn rref_rational(m: &Mat) -> Echelon {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a: Vec<Vec<BigInt>> = (0..nr)
        .map(|r| {
            let row = m.row(r);
            let mut l = BigInt::one();
            for x in row {
                let d = x.as_rational().expect("rational matrix").denom();
                if !d.is_one() {
                    l = l.lcm(d);
                }
            }
            let mut v: Vec<BigInt> = row
                .iter()
                .map(|x| {
                    let q = x.as_rational().unwrap();
                    q.numer() * (&l / q.denom())
                })
                .collect();
            primitive(&mut v);
            v
        })
        .collect();

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(p) = (r..nr).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let (head, tail) = a.split_at_mut(r);
        let (pivot_row, rest) = tail.split_first_mut().unwrap();
        for row in head.iter_mut().chain(rest.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let g = pivot_row[c].gcd(&row[c]);
            let fp = &pivot_row[c] / &g;
            let fr = &row[c] / &g;
            for j in 0..nc {
                let t = &fp * &row[j] - &fr * &pivot_row[j];
                row[j] = t;
            }
            primitive(row);
        }
        pivots.push(c);
        r += 1;
    }

    let mut out = Mat::zeros(Field::Rational, r, nc);
    for (i, &c) in pivots.iter().enumerate() {
        let mut piv = a[i][c].clone();
        let mut row = a[i].clone();
        if piv.is_negative() {
            piv = -piv;
            row.iter_mut().for_each(|x| *x = -x.clone());
        }
        for j in 0..nc {
            if !row[j].is_zero() {
                out.set(
                    i,
                    j,
                    Scalar::Q(BigRational::new(row[j].clone(), piv.clone())),
                );
            }
        }
    }
    Echelon { pivots, rows: out }
}

fn rref_prime(m: &Mat, p: u64) -> Echelon {
    let (nr, nc) = (m.rows(), m.cols());
    let mut a: Vec<Vec<u64>> = (0..nr)
        .map(|r| {
            m.row(r)
                .iter()
                .map(|x| match x {
                    Scalar::Fp { v, .. } => *v,
                    Scalar::Q(_) => panic!("rational entry in prime-field matrix"),
                })
                .collect()
        })
        .collect();
    let inv = |x: u64| -> u64 {
        match (Scalar::Fp { v: x, p }).inv() {
            Scalar::Fp { v, .. } => v,
            Scalar::Q(_) => unreachable!(),
        }
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nc {
        if r == nr {
            break;
        }
        let Some(pr) = (r..nr).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, pr);
        let s = inv(a[r][c]);
        for x in a[r].iter_mut() {
            *x = *x * s % p;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for j in 0..nc {
                row[j] = (row[j] + p - f * pivot_row[j] % p) % p;
            }
        }
        pivots.push(c);
        r += 1;
    }
    let mut out = Mat::zeros(Field::Prime { p }, r, nc);
    for i in 0..r {
        for j in 0..nc {
            out.set(i, j, Scalar::Fp { v: a[i][j], p });
        }
    }
    Echelon { pivots, rows: out }
}
