//! Isomorphism and indecomposability tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::hom_basis;
use super::module::{Module, Morphism};
use crate::error::{Error, Result};
use crate::exactlin::{self, Field, Mat, Scalar};

pub const DEFAULT_ISO_TRIALS: usize = 64;

#[derive(Clone, Debug)]
pub enum IsoVerdict {
    Yes(Morphism),
    No(String),
    Inconclusive,
}

impl IsoVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, IsoVerdict::Yes(_))
    }
    pub fn label(&self) -> &'static str {
        match self {
            IsoVerdict::Yes(_) => "YES",
            IsoVerdict::No(_) => "NO",
            IsoVerdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

/// Random combination of `basis` with integer coefficients in `[-bound, bound]`.
pub(crate) fn random_combination(
    rng: &mut ChaCha8Rng,
    field: Field,
    basis: &[Morphism],
    bound: i64,
) -> Option<Morphism> {
    let mut acc: Option<Morphism> = None;
    for h in basis {
        let c = field.from_i64(rng.gen_range(-bound..=bound));
        let t = h.scale(&c);
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc
}

/// Decides `m ≅ n`, returning an invertible morphism on success.
pub fn are_isomorphic(m: &Module, n: &Module, seed: u64) -> IsoVerdict {
    are_isomorphic_with(m, n, seed, DEFAULT_ISO_TRIALS)
}

pub fn are_isomorphic_with(m: &Module, n: &Module, seed: u64, trials: usize) -> IsoVerdict {
    if m.dims() != n.dims() {
        return IsoVerdict::No(format!(
            "dimension vectors {:?} and {:?} differ",
            m.dims(),
            n.dims()
        ));
    }
    if m.is_zero() {
        return IsoVerdict::Yes(Morphism::zero(m, n));
    }
    let mn = hom_basis(m, n);
    let d_mm = hom_basis(m, m).len();
    if d_mm != mn.len() {
        return IsoVerdict::No(format!(
            "dim Hom(m,m) = {d_mm} but dim Hom(m,n) = {}",
            mn.len()
        ));
    }
    let d_nm = hom_basis(n, m).len();
    if d_nm != d_mm {
        return IsoVerdict::No(format!("dim Hom(m,m) = {d_mm} but dim Hom(n,m) = {d_nm}"));
    }
    let d_nn = hom_basis(n, n).len();
    if d_nn != d_mm {
        return IsoVerdict::No(format!("dim Hom(m,m) = {d_mm} but dim Hom(n,n) = {d_nn}"));
    }
    for h in &mn {
        if h.is_iso() {
            return IsoVerdict::Yes(h.clone());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for t in 0..trials {
        let bound = 1 + (t as i64) / 8;
        if let Some(h) = random_combination(&mut rng, m.field(), &mn, bound) {
            if h.is_iso() {
                return IsoVerdict::Yes(h);
            }
        }
    }
    IsoVerdict::Inconclusive
}

#[derive(Clone, Debug)]
pub enum Indecomposability {
    Indecomposable,
    /// A nontrivial idempotent endomorphism and the dimensions of its image
    /// and kernel.
    Decomposable {
        idempotent: Morphism,
        summand_dims: (usize, usize),
    },
    /// `End/rad` has dimension `> 1` but no splitting idempotent was found.
    NotAbsolutelyIndecomposable {
        top_dim: usize,
    },
}

impl Indecomposability {
    pub fn is_yes(&self) -> bool {
        matches!(self, Indecomposability::Indecomposable)
    }
}

fn mat_pow(m: &Mat, k: usize) -> Mat {
    let mut out = Mat::identity(m.field(), m.rows());
    for _ in 0..k {
        out = out.mul(m);
    }
    out
}

/// Fitting decomposition of `x`: the idempotent projecting onto
/// `im x^N` along `ker x^N`, if both are nonzero.
fn fitting_idempotent(m: &Module, x: &Morphism) -> Option<(Morphism, (usize, usize))> {
    let field = m.field();
    let total = x.total();
    let n = m.dim();
    let p = mat_pow(&total, n);
    let im = exactlin::row_basis(&p);
    let r = im.rows();
    if r == 0 || r == n {
        return None;
    }
    let ker = exactlin::kernel(&p);
    let t = im.vstack(&ker);
    let t_inv = exactlin::solve_right(&t, &Mat::identity(field, n))?;
    let mut d = Mat::zeros(field, n, n);
    for i in 0..r {
        d.set(i, i, field.one());
    }
    let e = t_inv.mul(&d).mul(&t);
    let off = m.offsets();
    let blocks = (0..m.dims().len())
        .map(|i| e.submatrix(off[i]..off[i] + m.dim_at(i), off[i]..off[i] + m.dim_at(i)))
        .collect();
    Some((Morphism { blocks }, (r, n - r)))
}

/// Trace-form test on `End(m)`; over `𝔽_p` requires `p > dim m`.
pub fn is_indecomposable(m: &Module, seed: u64) -> Result<Indecomposability> {
    let field = m.field();
    if m.is_zero() {
        return Ok(Indecomposability::Decomposable {
            idempotent: Morphism::identity(m),
            summand_dims: (0, 0),
        });
    }
    if let Field::Prime { p } = field {
        if (p as usize) <= m.dim() {
            return Err(Error::FieldTooSmall {
                p,
                needed: m.dim() + 1,
            });
        }
    }
    let basis = hom_basis(m, m);
    let totals: Vec<Mat> = basis.iter().map(Morphism::total).collect();
    let d = basis.len();
    let mut gram = Mat::zeros(field, d, d);
    for a in 0..d {
        for b in a..d {
            let t: Scalar = totals[a].mul(&totals[b]).trace();
            gram.set(a, b, t.clone());
            gram.set(b, a, t);
        }
    }
    let top_dim = exactlin::rank(&gram);
    if top_dim == 1 {
        return Ok(Indecomposability::Indecomposable);
    }
    for h in &basis {
        if let Some((e, dims)) = fitting_idempotent(m, h) {
            return Ok(Indecomposability::Decomposable {
                idempotent: e,
                summand_dims: dims,
            });
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let id = Morphism::identity(m);
    for t in 0..DEFAULT_ISO_TRIALS {
        let bound = 1 + (t as i64) / 8;
        let Some(x) = random_combination(&mut rng, field, &basis, bound) else {
            break;
        };
        for shift in [0i64, 1, -1, 2, -2] {
            let y = x.add(&id.scale(&field.from_i64(shift)));
            if let Some((e, dims)) = fitting_idempotent(m, &y) {
                return Ok(Indecomposability::Decomposable {
                    idempotent: e,
                    summand_dims: dims,
                });
            }
        }
    }
    Ok(Indecomposability::NotAbsolutelyIndecomposable { top_dim })
}
