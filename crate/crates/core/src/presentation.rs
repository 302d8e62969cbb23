//! Graded quotient presentations and descent of maps through them.
//!
//! A [`Presentation`] wraps the matrix-level [`QuotientPresentation`]
//! with graded objects on both ends. Relation vectors produced by
//! degree-preserving maps are homogeneous, so the surviving coordinates
//! carry well-defined parities and the projection and section are again
//! morphisms of the category.

use thiserror::Error;

use crate::field::FieldSpec;
use crate::graded::{Degree, LinMap, Obj};
use crate::matrix::Matrix;
use crate::quotient::{quotient_by, QuotientPresentation};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescentError {
    #[error("map does not annihilate the quotient relations (column {column})")]
    NotBalanced { column: usize },
}

/// A quotient of a graded ambient space by a relation row space, with a
/// chosen splitting: `proj∘sect = id` and `proj` kills every relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub ambient: Obj,
    pub space: Obj,
    pub proj: LinMap,
    pub sect: LinMap,
    pub inner: QuotientPresentation,
}

impl Presentation {
    pub fn from_relations(ambient: &Obj, relations: &Matrix) -> Presentation {
        let inner = quotient_by(relations, ambient.total_dim());
        let degrees: Vec<Degree> = inner.basis.iter().map(|&i| ambient.degree(i)).collect();
        let space = Obj::from_degrees(degrees);
        let proj = LinMap::new(ambient.clone(), space.clone(), inner.projection.clone())
            .expect("homogeneous relations give a graded projection");
        let sect = LinMap::new(space.clone(), ambient.clone(), inner.section.clone())
            .expect("section picks graded coordinates");
        Presentation { ambient: ambient.clone(), space, proj, sect, inner }
    }

    /// The identity presentation of an ambient space.
    pub fn trivial(ambient: &Obj, field: FieldSpec) -> Presentation {
        Presentation::from_relations(ambient, &Matrix::zero(0, ambient.total_dim(), field))
    }

    pub fn dim(&self) -> usize {
        self.space.total_dim()
    }

    /// Pushes an ambient relation-respecting map down to the quotient:
    /// given `f: ambient -> T` with `f(relations) = 0`, returns the unique
    /// map `space -> T` agreeing with `f` through the projection.
    pub fn descend(&self, map: &LinMap) -> Result<LinMap, DescentError> {
        assert_eq!(map.dom(), &self.ambient, "descend: domain is not the ambient space");
        check_balanced(map, &self.inner.relations.transpose())?;
        Ok(self.sect.then(map))
    }

    /// Descends `f: ambient (x) Y -> T` in the left factor.
    pub fn descend_left(&self, map: &LinMap, y: &Obj) -> Result<LinMap, DescentError> {
        assert_eq!(map.dom(), &self.ambient.tensor(y), "descend_left: domain mismatch");
        let span = self
            .inner
            .relations
            .transpose()
            .kronecker(&Matrix::identity(y.total_dim(), map.field()));
        check_balanced(map, &span)?;
        Ok(self.sect.tensor(&LinMap::identity(y, map.field())).then(map))
    }

    /// Descends `f: Y (x) ambient -> T` in the right factor.
    pub fn descend_right(&self, map: &LinMap, y: &Obj) -> Result<LinMap, DescentError> {
        assert_eq!(map.dom(), &y.tensor(&self.ambient), "descend_right: domain mismatch");
        let span = Matrix::identity(y.total_dim(), map.field())
            .kronecker(&self.inner.relations.transpose());
        check_balanced(map, &span)?;
        Ok(LinMap::identity(y, map.field()).tensor(&self.sect).then(map))
    }
}

fn check_balanced(map: &LinMap, relation_span: &Matrix) -> Result<(), DescentError> {
    let image = map.mat().mul(relation_span);
    for c in 0..image.cols() {
        if (0..image.rows()).any(|r| !image.get(r, c).is_zero()) {
            return Err(DescentError::NotBalanced { column: c });
        }
    }
    Ok(())
}

/// The tensor product of a right `R`-space and a left `R`-space over `R`:
/// the quotient of `M (x) N` by the row space of
/// `(right_action (x) N) - (M (x) left_action)` applied to every basis
/// vector of `M (x) R (x) N`.
pub fn balanced_tensor(
    m: &Obj,
    right_action: &LinMap,
    r: &Obj,
    left_action: &LinMap,
    n: &Obj,
) -> Presentation {
    let field = right_action.field();
    assert_eq!(right_action.dom(), &m.tensor(r), "right action must be M (x) R -> M");
    assert_eq!(right_action.cod(), m);
    assert_eq!(left_action.dom(), &r.tensor(n), "left action must be R (x) N -> N");
    assert_eq!(left_action.cod(), n);
    let id_m = LinMap::identity(m, field);
    let id_n = LinMap::identity(n, field);
    let defect = right_action.tensor(&id_n).sub(&id_m.tensor(left_action));
    let relations = defect.mat().transpose();
    Presentation::from_relations(&m.tensor(n), &relations)
}
