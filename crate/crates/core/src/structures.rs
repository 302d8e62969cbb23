//! Algebras, coalgebras, modules, comodules and bimodules as
//! structure-constant bundles, each with a total axiom checker.
//!
//! Constructors enforce shapes (a unit must be a map `I -> A`, a
//! multiplication `A (x) A -> A`, and so on) but not the axioms: broken
//! structures are first-class inputs so the checkers have something to
//! report on. Every checker compares whole composite matrices, not
//! sampled vectors.

use crate::graded::{LinMap, Obj, StructureError};
use crate::report::Report;

fn expect_shape(map: &LinMap, dom: &Obj, cod: &Obj) -> Result<(), StructureError> {
    if map.dom() != dom || map.cod() != cod {
        return Err(StructureError::ShapeMismatch {
            got_rows: map.mat().rows(),
            got_cols: map.mat().cols(),
            want_rows: cod.total_dim(),
            want_cols: dom.total_dim(),
        });
    }
    Ok(())
}

/// `(A, e, m)` with `e: I -> A` and `m: A (x) A -> A`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub carrier: Obj,
    pub unit: LinMap,
    pub mult: LinMap,
}

impl Algebra {
    pub fn new(carrier: Obj, unit: LinMap, mult: LinMap) -> Result<Self, StructureError> {
        expect_shape(&unit, &Obj::unit(), &carrier)?;
        expect_shape(&mult, &carrier.tensor(&carrier), &carrier)?;
        Ok(Algebra { carrier, unit, mult })
    }

    /// The base field as a one-dimensional algebra.
    pub fn base(field: crate::field::FieldSpec) -> Algebra {
        let i = Obj::unit();
        Algebra {
            carrier: i.clone(),
            unit: LinMap::identity(&i, field),
            mult: LinMap::identity(&i, field),
        }
    }

    pub fn field(&self) -> crate::field::FieldSpec {
        self.mult.field()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(&self.carrier, self.field())
    }
}

/// `(C, ε, δ)` with `ε: C -> I` and `δ: C -> C (x) C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coalgebra {
    pub carrier: Obj,
    pub counit: LinMap,
    pub comult: LinMap,
}

impl Coalgebra {
    pub fn new(carrier: Obj, counit: LinMap, comult: LinMap) -> Result<Self, StructureError> {
        expect_shape(&counit, &carrier, &Obj::unit())?;
        expect_shape(&comult, &carrier, &carrier.tensor(&carrier))?;
        Ok(Coalgebra { carrier, counit, comult })
    }

    /// The base field as a one-dimensional coalgebra.
    pub fn base(field: crate::field::FieldSpec) -> Coalgebra {
        let i = Obj::unit();
        Coalgebra {
            carrier: i.clone(),
            counit: LinMap::identity(&i, field),
            comult: LinMap::identity(&i, field),
        }
    }

    pub fn field(&self) -> crate::field::FieldSpec {
        self.comult.field()
    }

    pub fn id(&self) -> LinMap {
        LinMap::identity(&self.carrier, self.field())
    }
}

/// `(M, ξ)` with `ξ: M (x) A -> M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightModule {
    pub carrier: Obj,
    pub action: LinMap,
    pub over: Algebra,
}

impl RightModule {
    pub fn new(carrier: Obj, action: LinMap, over: Algebra) -> Result<Self, StructureError> {
        expect_shape(&action, &carrier.tensor(&over.carrier), &carrier)?;
        Ok(RightModule { carrier, action, over })
    }

    /// An algebra as the free rank-one module over itself.
    pub fn regular(a: &Algebra) -> RightModule {
        RightModule { carrier: a.carrier.clone(), action: a.mult.clone(), over: a.clone() }
    }
}

/// `(M, ν)` with `ν: M -> M (x) C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RightComodule {
    pub carrier: Obj,
    pub coaction: LinMap,
    pub over: Coalgebra,
}

impl RightComodule {
    pub fn new(carrier: Obj, coaction: LinMap, over: Coalgebra) -> Result<Self, StructureError> {
        expect_shape(&coaction, &carrier, &carrier.tensor(&over.carrier))?;
        Ok(RightComodule { carrier, coaction, over })
    }

    /// A coalgebra as a comodule over itself.
    pub fn regular(c: &Coalgebra) -> RightComodule {
        RightComodule { carrier: c.carrier.clone(), coaction: c.comult.clone(), over: c.clone() }
    }
}

/// `(M, l, r)` with `l: A (x) M -> M` and `r: M (x) B -> M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub carrier: Obj,
    pub left_action: LinMap,
    pub right_action: LinMap,
    pub left_over: Algebra,
    pub right_over: Algebra,
}

impl Bimodule {
    pub fn new(
        carrier: Obj,
        left_action: LinMap,
        right_action: LinMap,
        left_over: Algebra,
        right_over: Algebra,
    ) -> Result<Self, StructureError> {
        expect_shape(&left_action, &left_over.carrier.tensor(&carrier), &carrier)?;
        expect_shape(&right_action, &carrier.tensor(&right_over.carrier), &carrier)?;
        Ok(Bimodule { carrier, left_action, right_action, left_over, right_over })
    }
}

pub fn check_algebra(a: &Algebra) -> Report {
    let mut report = Report::new();
    let id = a.id();
    report.require_eq(
        "associativity",
        "m∘(m⊗A) = m∘(A⊗m)",
        &a.mult.tensor(&id).then(&a.mult),
        &id.tensor(&a.mult).then(&a.mult),
    );
    report.require_eq("unit.left", "m∘(e⊗A) = id", &a.unit.tensor(&id).then(&a.mult), &id);
    report.require_eq("unit.right", "m∘(A⊗e) = id", &id.tensor(&a.unit).then(&a.mult), &id);
    report
}

pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let mut report = Report::new();
    let id = c.id();
    report.require_eq(
        "coassociativity",
        "(δ⊗C)∘δ = (C⊗δ)∘δ",
        &c.comult.then(&c.comult.tensor(&id)),
        &c.comult.then(&id.tensor(&c.comult)),
    );
    report.require_eq("counit.left", "(ε⊗C)∘δ = id", &c.comult.then(&c.counit.tensor(&id)), &id);
    report.require_eq("counit.right", "(C⊗ε)∘δ = id", &c.comult.then(&id.tensor(&c.counit)), &id);
    report
}

pub fn check_module(m: &RightModule) -> Report {
    let mut report = Report::new();
    let id_m = LinMap::identity(&m.carrier, m.over.field());
    let id_a = m.over.id();
    report.require_eq(
        "action.associativity",
        "ξ∘(ξ⊗A) = ξ∘(M⊗m)",
        &m.action.tensor(&id_a).then(&m.action),
        &id_m.tensor(&m.over.mult).then(&m.action),
    );
    report.require_eq(
        "action.unit",
        "ξ∘(M⊗e) = id",
        &id_m.tensor(&m.over.unit).then(&m.action),
        &id_m,
    );
    report
}

pub fn check_comodule(m: &RightComodule) -> Report {
    let mut report = Report::new();
    let id_m = LinMap::identity(&m.carrier, m.over.field());
    let id_c = m.over.id();
    report.require_eq(
        "coaction.coassociativity",
        "(ν⊗C)∘ν = (M⊗δ)∘ν",
        &m.coaction.then(&m.coaction.tensor(&id_c)),
        &m.coaction.then(&id_m.tensor(&m.over.comult)),
    );
    report.require_eq(
        "coaction.counit",
        "(M⊗ε)∘ν = id",
        &m.coaction.then(&id_m.tensor(&m.over.counit)),
        &id_m,
    );
    report
}

pub fn check_bimodule(b: &Bimodule) -> Report {
    let field = b.left_over.field();
    let id_m = LinMap::identity(&b.carrier, field);
    let id_a = b.left_over.id();
    let id_b = b.right_over.id();
    let mut report = Report::new();
    report.require_eq(
        "left.associativity",
        "l∘(m⊗M) = l∘(A⊗l)",
        &b.left_over.mult.tensor(&id_m).then(&b.left_action),
        &id_a.tensor(&b.left_action).then(&b.left_action),
    );
    report.require_eq(
        "left.unit",
        "l∘(e⊗M) = id",
        &b.left_over.unit.tensor(&id_m).then(&b.left_action),
        &id_m,
    );
    report.require_eq(
        "right.associativity",
        "r∘(r⊗B) = r∘(M⊗m)",
        &b.right_action.tensor(&id_b).then(&b.right_action),
        &id_m.tensor(&b.right_over.mult).then(&b.right_action),
    );
    report.require_eq(
        "right.unit",
        "r∘(M⊗e) = id",
        &id_m.tensor(&b.right_over.unit).then(&b.right_action),
        &id_m,
    );
    report.require_eq(
        "middle",
        "r∘(l⊗B) = l∘(A⊗r)",
        &b.left_action.tensor(&id_b).then(&b.right_action),
        &id_a.tensor(&b.right_action).then(&b.left_action),
    );
    report
}

/// Convolution dual of a coalgebra: transposed structure constants on the
/// dual space, identified with the carrier by the fixed basis.
pub fn dualize(c: &Coalgebra) -> Algebra {
    Algebra { carrier: c.carrier.clone(), unit: c.counit.dual(), mult: c.comult.dual() }
}

/// Transpose of an algebra; inverse to [`dualize`].
pub fn dualize_algebra(a: &Algebra) -> Coalgebra {
    Coalgebra { carrier: a.carrier.clone(), counit: a.unit.dual(), comult: a.mult.dual() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::matrix::Matrix;

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    /// The group algebra F2[C2]: basis {1, g}, g*g = 1.
    fn group_algebra_c2() -> Algebra {
        let h = Obj::ungraded(2);
        let unit = LinMap::from_i64(Obj::unit(), h.clone(), f2(), &[1, 0]);
        // Columns run over (1,1), (1,g), (g,1), (g,g).
        let mult =
            LinMap::from_i64(h.tensor(&h), h.clone(), f2(), &[1, 0, 0, 1, 0, 1, 1, 0]);
        Algebra::new(h, unit, mult).unwrap()
    }

    /// F2[C2] as a coalgebra: δ(g^i) = g^i (x) g^i, ε = 1.
    fn group_coalgebra_c2() -> Coalgebra {
        let h = Obj::ungraded(2);
        let counit = LinMap::from_i64(h.clone(), Obj::unit(), f2(), &[1, 1]);
        let comult =
            LinMap::from_i64(h.clone(), h.tensor(&h), f2(), &[1, 0, 0, 0, 0, 0, 0, 1]);
        Coalgebra::new(h, counit, comult).unwrap()
    }

    #[test]
    fn base_field_structures_pass() {
        assert!(check_algebra(&Algebra::base(f2())).pass());
        assert!(check_coalgebra(&Coalgebra::base(FieldSpec::Rationals)).pass());
    }

    #[test]
    fn group_algebra_passes() {
        assert!(check_algebra(&group_algebra_c2()).pass());
        assert!(check_coalgebra(&group_coalgebra_c2()).pass());
    }

    #[test]
    fn broken_unit_fails_with_witness() {
        // Diagonal products only: m(1,1) = 1, m(g,g) = g, cross products
        // zero, unit hitting 1. Then m∘(A⊗e) kills g.
        let h = Obj::ungraded(2);
        let unit = LinMap::from_i64(Obj::unit(), h.clone(), f2(), &[1, 0]);
        let mult =
            LinMap::from_i64(h.tensor(&h), h.clone(), f2(), &[1, 0, 0, 0, 0, 0, 0, 1]);
        let a = Algebra::new(h, unit, mult).unwrap();
        let report = check_algebra(&a);
        assert!(!report.pass());
        let failed = report.find("unit.right").unwrap();
        assert!(!failed.pass);
        let w = failed.witness.as_ref().unwrap();
        assert_eq!(w.basis_index, 1);
    }

    #[test]
    fn module_and_comodule_regular_pass() {
        assert!(check_module(&RightModule::regular(&group_algebra_c2())).pass());
        assert!(check_comodule(&RightComodule::regular(&group_coalgebra_c2())).pass());
    }

    #[test]
    fn bimodule_regular_passes() {
        let a = group_algebra_c2();
        let b = Bimodule::new(
            a.carrier.clone(),
            a.mult.clone(),
            a.mult.clone(),
            a.clone(),
            a.clone(),
        )
        .unwrap();
        assert!(check_bimodule(&b).pass());
    }

    #[test]
    fn dual_of_one_dimensional_coalgebra() {
        let a = dualize(&Coalgebra::base(f2()));
        assert!(check_algebra(&a).pass());
        assert_eq!(a.carrier.total_dim(), 1);
    }

    #[test]
    fn dual_of_group_coalgebra_is_function_algebra() {
        // Transposing δ(g^i) = g^i (x) g^i gives the pointwise product on
        // functions over C2: e_i * e_j = [i = j] e_i, with unit e_0 + e_1.
        let a = dualize(&group_coalgebra_c2());
        assert!(check_algebra(&a).pass());
        assert_eq!(a.unit.mat(), &Matrix::from_i64(2, 1, f2(), &[1, 1]));
        assert_eq!(a.mult.mat(), &Matrix::from_i64(2, 4, f2(), &[1, 0, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn dualize_twice_is_the_identity() {
        let c = group_coalgebra_c2();
        assert_eq!(dualize_algebra(&dualize(&c)), c);
        let a = group_algebra_c2();
        assert_eq!(dualize(&dualize_algebra(&a)), a);
    }

    #[test]
    fn dualize_maps_broken_to_broken() {
        // Zero a structure constant of δ: the coalgebra and its dual must
        // fail together.
        let h = Obj::ungraded(2);
        let counit = LinMap::from_i64(h.clone(), Obj::unit(), f2(), &[1, 1]);
        let comult =
            LinMap::from_i64(h.clone(), h.tensor(&h), f2(), &[1, 0, 0, 0, 0, 0, 0, 0]);
        let c = Coalgebra::new(h, counit, comult).unwrap();
        assert!(!check_coalgebra(&c).pass());
        assert!(!check_algebra(&dualize(&c)).pass());
    }

    #[test]
    fn shape_mismatch_is_a_structural_error() {
        let h = Obj::ungraded(2);
        let unit = LinMap::from_i64(Obj::unit(), h.clone(), f2(), &[1, 0]);
        let not_mult = LinMap::identity(&h, f2());
        assert!(matches!(
            Algebra::new(h, unit, not_mult),
            Err(StructureError::ShapeMismatch { .. })
        ));
    }
}
