//! Quotient-space presentations: the coequalizers behind every tensor
//! product over a subalgebra.

use crate::matrix::{Matrix, Rref};

/// A quotient of `k^ambient_dim` by the row space of `relations`,
/// presented by a split pair: `projection * section = id` on the quotient
/// and `projection` annihilates every relation row. The quotient basis is
/// the non-pivot coordinates of `rref(relations)` in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    pub relations: Matrix,
    pub projection: Matrix,
    pub section: Matrix,
    /// Ambient indices of the surviving coordinates, increasing.
    pub basis: Vec<usize>,
}

impl QuotientPresentation {
    pub fn quotient_dim(&self) -> usize {
        self.basis.len()
    }
}

/// Presents `k^ambient_dim / row_space(relations)`.
pub fn quotient_by(relations: &Matrix, ambient_dim: usize) -> QuotientPresentation {
    assert_eq!(relations.cols(), ambient_dim, "relations must have ambient_dim columns");
    let field = relations.field();
    let Rref { reduced, pivots, rank } = relations.rref();
    let basis: Vec<usize> = (0..ambient_dim).filter(|c| !pivots.contains(c)).collect();
    let qdim = ambient_dim - rank;
    debug_assert_eq!(basis.len(), qdim);

    // Each pivot coordinate is congruent to minus the free part of its row.
    let mut projection = Matrix::zero(qdim, ambient_dim, field);
    for (qrow, &f) in basis.iter().enumerate() {
        projection.set(qrow, f, field.one());
    }
    for (prow, &pcol) in pivots.iter().enumerate() {
        for (qrow, &f) in basis.iter().enumerate() {
            projection.set(qrow, pcol, -reduced.get(prow, f));
        }
    }

    let mut section = Matrix::zero(ambient_dim, qdim, field);
    for (qcol, &f) in basis.iter().enumerate() {
        section.set(f, qcol, field.one());
    }

    QuotientPresentation { ambient_dim, relations: relations.clone(), projection, section, basis }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    fn check_invariants(p: &QuotientPresentation) {
        assert!(p.projection.mul(&p.section).is_identity());
        assert!(p.projection.mul(&p.relations.transpose()).is_zero());
        assert_eq!(p.quotient_dim(), p.ambient_dim - p.relations.rank());
    }

    #[test]
    fn no_relations_is_the_ambient_space() {
        let p = quotient_by(&Matrix::zero(0, 3, q()), 3);
        assert_eq!(p.projection, Matrix::identity(3, q()));
        assert_eq!(p.section, Matrix::identity(3, q()));
        check_invariants(&p);
    }

    #[test]
    fn full_relations_kill_everything() {
        let p = quotient_by(&Matrix::identity(2, q()), 2);
        assert_eq!(p.quotient_dim(), 0);
        check_invariants(&p);
    }

    #[test]
    fn identifying_two_coordinates() {
        // Relation e0 - e1: both basis vectors map to the same generator.
        let rel = Matrix::from_i64(1, 2, q(), &[1, -1]);
        let p = quotient_by(&rel, 2);
        assert_eq!(p.quotient_dim(), 1);
        assert_eq!(p.projection, Matrix::from_i64(1, 2, q(), &[1, 1]));
        assert_eq!(p.basis, vec![1]);
        check_invariants(&p);
    }

    #[test]
    fn redundant_relations_collapse() {
        let rel = Matrix::from_i64(3, 3, q(), &[1, -1, 0, 0, 1, -1, 1, 0, -1]);
        let p = quotient_by(&rel, 3);
        assert_eq!(p.quotient_dim(), 1);
        check_invariants(&p);
    }
}
