//! Flatness and faithful flatness of finite-dimensional modules.
//!
//! Over a finite-dimensional algebra a finite-dimensional module is flat
//! exactly when it is projective, and projectivity is decidable: the
//! action map `R (x) M -> M` is a free cover, and the module is
//! projective iff that cover splits by a module map. Faithfulness is the
//! trace-ideal criterion: the images of all module maps `M -> R` must
//! span `R`. Both conditions reduce to exact linear systems.

use crate::field::FieldSpec;
use crate::graded::{LinMap, Obj};
use crate::matrix::Matrix;
use crate::structures::Algebra;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlatnessVerdict {
    pub flat: bool,
    pub faithfully_flat: bool,
}

/// Decides flatness of the module `(carrier, action)` over `over`. For
/// `Side::Left` the action is `R (x) M -> M`, for `Side::Right` it is
/// `M (x) R -> M`.
pub fn flatness(over: &Algebra, carrier: &Obj, action: &LinMap, side: Side) -> FlatnessVerdict {
    let field = over.field();
    let r_dim = over.carrier.total_dim();
    let free = match side {
        Side::Left => over.carrier.tensor(carrier),
        Side::Right => carrier.tensor(&over.carrier),
    };
    match side {
        Side::Left => assert_eq!(action.dom(), &free, "left action must be R (x) M -> M"),
        Side::Right => assert_eq!(action.dom(), &free, "right action must be M (x) R -> M"),
    }

    let l = action.mat();
    let m_mat = over.mult.mat();
    let id_r = Matrix::identity(r_dim, field);

    // Module-map defect for candidate sections s: M -> R (x) M.
    let section_defect = |s: &Matrix| -> Matrix {
        match side {
            Side::Left => s.mul(l).sub(&m_mat.kronecker(&Matrix::identity(carrier.total_dim(), field)).mul(&id_r.kronecker(s))),
            Side::Right => s.mul(l).sub(&Matrix::identity(carrier.total_dim(), field).kronecker(m_mat).mul(&s.kronecker(&id_r))),
        }
    };
    let sections = equivariant_kernel(carrier, &free, field, section_defect);
    let flat = splits(l, &sections, carrier.total_dim(), field);

    // Module-map defect for functionals f: M -> R.
    let functional_defect = |f: &Matrix| -> Matrix {
        match side {
            Side::Left => f.mul(l).sub(&m_mat.mul(&id_r.kronecker(f))),
            Side::Right => f.mul(l).sub(&m_mat.mul(&f.kronecker(&id_r))),
        }
    };
    let functionals = equivariant_kernel(carrier, &over.carrier, field, functional_defect);
    let trace_rank = if functionals.is_empty() {
        0
    } else {
        let mut stacked = functionals[0].clone();
        for f in &functionals[1..] {
            stacked = stacked.hstack(f);
        }
        stacked.rank()
    };

    FlatnessVerdict { flat, faithfully_flat: flat && trace_rank == r_dim }
}

/// Basis of the degree-preserving maps `dom -> cod` annihilated by a
/// linear defect operator, found by running the operator over the
/// elementary matrices.
fn equivariant_kernel(
    dom: &Obj,
    cod: &Obj,
    field: FieldSpec,
    defect: impl Fn(&Matrix) -> Matrix,
) -> Vec<Matrix> {
    let positions: Vec<(usize, usize)> = (0..cod.total_dim())
        .flat_map(|r| (0..dom.total_dim()).map(move |c| (r, c)))
        .filter(|&(r, c)| cod.degree(r) == dom.degree(c))
        .collect();
    if positions.is_empty() {
        return Vec::new();
    }
    let probe = {
        let mut e = Matrix::zero(cod.total_dim(), dom.total_dim(), field);
        e.set(positions[0].0, positions[0].1, field.one());
        defect(&e)
    };
    let out_len = probe.rows() * probe.cols();
    let mut system = Matrix::zero(out_len, positions.len(), field);
    for (col, &(r, c)) in positions.iter().enumerate() {
        let mut e = Matrix::zero(cod.total_dim(), dom.total_dim(), field);
        e.set(r, c, field.one());
        let image = defect(&e);
        for or in 0..image.rows() {
            for oc in 0..image.cols() {
                system.set(or * image.cols() + oc, col, image.get(or, oc).clone());
            }
        }
    }
    let kernel = system.kernel_basis();
    (0..kernel.rows())
        .map(|k| {
            let mut map = Matrix::zero(cod.total_dim(), dom.total_dim(), field);
            for (col, &(r, c)) in positions.iter().enumerate() {
                map.set(r, c, kernel.get(k, col).clone());
            }
            map
        })
        .collect()
}

/// Is the identity on `M` a combination `action ∘ (Σ c_k s_k)` of the
/// module-map sections?
fn splits(action: &Matrix, sections: &[Matrix], m_dim: usize, field: FieldSpec) -> bool {
    if m_dim == 0 {
        return true;
    }
    if sections.is_empty() {
        return false;
    }
    let mut system = Matrix::zero(m_dim * m_dim, sections.len(), field);
    for (col, s) in sections.iter().enumerate() {
        let image = action.mul(s);
        for r in 0..m_dim {
            for c in 0..m_dim {
                system.set(r * m_dim + c, col, image.get(r, c).clone());
            }
        }
    }
    let mut target = Matrix::zero(m_dim * m_dim, 1, field);
    for i in 0..m_dim {
        target.set(i * m_dim + i, 0, field.one());
    }
    system.solve(&target).is_some()
}
