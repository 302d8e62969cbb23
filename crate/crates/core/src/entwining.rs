//! Entwining structures: the four compatibility diagrams between an
//! algebra and a coalgebra through a map `λ: C (x) A -> A (x) C`, the
//! bijection with module structures on `A (x) C`, the induced coring,
//! and modules carrying both an action and a coaction entwined by `λ`.

use thiserror::Error;

use crate::graded::{LinMap, MonoidalCtx, Obj, StructureError};
use crate::presentation::{balanced_tensor, Presentation};
use crate::report::Report;
use crate::structures::{
    check_algebra, check_bimodule, check_coalgebra, check_comodule, check_module, Algebra,
    Bimodule, Coalgebra, RightComodule, RightModule,
};

#[derive(Debug, Error)]
pub enum EntwiningError {
    #[error("input fails its axioms ({failing} failing checks)")]
    PreconditionFailed { failing: usize, report: Report },
    #[error("module is over a different algebra than the entwining")]
    MismatchedAlgebra,
    #[error("comodule is over a different coalgebra than the entwining")]
    MismatchedCoalgebra,
    #[error(transparent)]
    Shape(#[from] StructureError),
}

fn gate(report: Report) -> Result<(), EntwiningError> {
    if report.pass() {
        Ok(())
    } else {
        Err(EntwiningError::PreconditionFailed { failing: report.failures().count(), report })
    }
}

/// An algebra, a coalgebra and a candidate map `λ: C (x) A -> A (x) C`.
#[derive(Debug, Clone, PartialEq)]
pub struct Entwining {
    pub alg: Algebra,
    pub coalg: Coalgebra,
    pub lambda: LinMap,
}

impl Entwining {
    pub fn new(alg: Algebra, coalg: Coalgebra, lambda: LinMap) -> Result<Self, StructureError> {
        let want_dom = coalg.carrier.tensor(&alg.carrier);
        let want_cod = alg.carrier.tensor(&coalg.carrier);
        if lambda.dom() != &want_dom || lambda.cod() != &want_cod {
            return Err(StructureError::ShapeMismatch {
                got_rows: lambda.mat().rows(),
                got_cols: lambda.mat().cols(),
                want_rows: want_cod.total_dim(),
                want_cols: want_dom.total_dim(),
            });
        }
        Ok(Entwining { alg, coalg, lambda })
    }

    /// `λ = σ_{C,A}`: entwines any algebra with any coalgebra.
    pub fn flip(alg: Algebra, coalg: Coalgebra, ctx: &MonoidalCtx) -> Entwining {
        let lambda = crate::graded::braiding(&coalg.carrier, &alg.carrier, ctx);
        Entwining { alg, coalg, lambda }
    }

    /// The one-dimensional coalgebra entwined trivially: `λ = id_A`.
    pub fn trivial(alg: Algebra) -> Entwining {
        let field = alg.field();
        let lambda = LinMap::identity(&alg.carrier, field);
        Entwining { alg, coalg: Coalgebra::base(field), lambda }
    }

    pub fn field(&self) -> crate::field::FieldSpec {
        self.lambda.field()
    }
}

/// Verifies the four entwining diagrams. The algebra and coalgebra are
/// checked first; the diagrams are only evaluated over passing
/// structures, since their failure would be meaningless otherwise.
pub fn check_entwining(e: &Entwining) -> Report {
    let mut report = Report::new();
    report.absorb("algebra", check_algebra(&e.alg));
    report.absorb("coalgebra", check_coalgebra(&e.coalg));
    if !report.pass() {
        return report;
    }
    let id_a = e.alg.id();
    let id_c = e.coalg.id();
    let (m, unit) = (&e.alg.mult, &e.alg.unit);
    let (delta, eps) = (&e.coalg.comult, &e.coalg.counit);
    let l = &e.lambda;

    report.require_eq(
        "unit",
        "λ∘(C⊗e) = e⊗C",
        &id_c.tensor(unit).then(l),
        &unit.tensor(&id_c),
    );
    report.require_eq(
        "counit",
        "(A⊗ε)∘λ = ε⊗A",
        &l.then(&id_a.tensor(eps)),
        &eps.tensor(&id_a),
    );
    report.require_eq(
        "comult",
        "(A⊗δ)∘λ = (λ⊗C)∘(C⊗λ)∘(δ⊗A)",
        &l.then(&id_a.tensor(delta)),
        &delta.tensor(&id_a).then(&id_c.tensor(l)).then(&l.tensor(&id_c)),
    );
    report.require_eq(
        "mult",
        "λ∘(C⊗m) = (m⊗C)∘(A⊗λ)∘(λ⊗A)",
        &id_c.tensor(m).then(l),
        &l.tensor(&id_a).then(&id_a.tensor(l)).then(&m.tensor(&id_c)),
    );
    report
}

/// The right action `(m⊗C)∘(A⊗λ)` carried by `A (x) C`.
pub fn xi_from_lambda(e: &Entwining) -> RightModule {
    let id_a = e.alg.id();
    let id_c = e.coalg.id();
    let carrier = e.alg.carrier.tensor(&e.coalg.carrier);
    let action = id_a.tensor(&e.lambda).then(&e.alg.mult.tensor(&id_c));
    RightModule { carrier, action, over: e.alg.clone() }
}

/// `A (x) C` with left action `m⊗C` and the right action of
/// [`xi_from_lambda`].
pub fn induced_bimodule(e: &Entwining) -> Bimodule {
    let id_c = e.coalg.id();
    let right = xi_from_lambda(e);
    Bimodule {
        carrier: right.carrier.clone(),
        left_action: e.alg.mult.tensor(&id_c),
        right_action: right.action,
        left_over: e.alg.clone(),
        right_over: e.alg.clone(),
    }
}

/// Recovers the entwining map from a module structure on `A (x) C`:
/// `λ = ξ∘(e⊗C⊗A)`.
pub fn lambda_from_xi(a: &Algebra, c: &Coalgebra, xi: &LinMap) -> LinMap {
    let id_c = c.id();
    let id_a = a.id();
    a.unit.tensor(&id_c).tensor(&id_a).then(xi)
}

/// An `A`-coring: an `A`-bimodule with a counit to `A` and a
/// comultiplication into its tensor square over `A`, presented by an
/// explicit quotient.
#[derive(Debug, Clone)]
pub struct Coring {
    pub over: Algebra,
    pub carrier: Bimodule,
    pub counit: LinMap,
    /// A chosen ambient lift `N -> N (x) N` of the comultiplication.
    pub comult_ambient: LinMap,
    /// `N (x)_A N` as a quotient of `N (x) N`.
    pub tensor_sq: Presentation,
    /// `N -> N (x)_A N`.
    pub comult: LinMap,
}

impl Coring {
    /// Assembles a coring candidate from a bimodule, a counit and an
    /// ambient comultiplication; no axioms are verified here.
    pub fn assemble(carrier: Bimodule, counit: LinMap, comult_ambient: LinMap) -> Coring {
        let over = carrier.left_over.clone();
        let n = &carrier.carrier;
        let tensor_sq = balanced_tensor(
            n,
            &carrier.right_action,
            &over.carrier,
            &carrier.left_action,
            n,
        );
        let comult = comult_ambient.then(&tensor_sq.proj);
        Coring { over, carrier, counit, comult_ambient, tensor_sq, comult }
    }
}

/// The coring structure `(A⊗C, m⊗C, ξ, A⊗ε, A⊗δ)` induced by a passing
/// entwining.
pub fn build_coring(e: &Entwining) -> Result<Coring, EntwiningError> {
    gate(check_entwining(e))?;
    Ok(Coring::assemble(
        induced_bimodule(e),
        coring_counit(e),
        coring_comult_ambient(e),
    ))
}

fn coring_counit(e: &Entwining) -> LinMap {
    e.alg.id().tensor(&e.coalg.counit)
}

/// `A⊗δ` followed by inserting the unit between the two copies of `C`,
/// landing in `(A⊗C) (x) (A⊗C)`.
fn coring_comult_ambient(e: &Entwining) -> LinMap {
    let id_a = e.alg.id();
    let id_c = e.coalg.id();
    let insert = id_a.tensor(&id_c).tensor(&e.alg.unit).tensor(&id_c);
    id_a.tensor(&e.coalg.comult).then(&insert)
}

/// Full coring axiom battery: bimodule axioms, linearity of counit and
/// comultiplication, the counit laws and coassociativity inside the
/// iterated quotient, plus invertibility of the two canonical
/// rebracketing comparisons. Descent failures are reported as failing
/// checks, so broken candidates degrade gracefully.
pub fn check_coring(c: &Coring) -> Report {
    let mut report = Report::new();
    report.absorb("bimodule", check_bimodule(&c.carrier));

    let a = &c.over;
    let id_a = a.id();
    let n = &c.carrier.carrier;
    let id_n = LinMap::identity(n, a.field());
    let l = &c.carrier.left_action;
    let r = &c.carrier.right_action;

    report.require_eq(
        "counit.left_linear",
        "ε∘l = m∘(A⊗ε)",
        &l.then(&c.counit),
        &id_a.tensor(&c.counit).then(&a.mult),
    );
    report.require_eq(
        "counit.right_linear",
        "ε∘r = m∘(ε⊗A)",
        &r.then(&c.counit),
        &c.counit.tensor(&id_a).then(&a.mult),
    );

    let sq = &c.tensor_sq;

    // Actions on the tensor square, if the relations permit them.
    let left_on_sq = sq.descend_right(&l.tensor(&id_n).then(&sq.proj), &a.carrier);
    let right_on_sq = sq.descend_left(&id_n.tensor(r).then(&sq.proj), &a.carrier);
    report.record(
        "tensor_sq.left_action",
        "A⊗(N⊗_A N) -> N⊗_A N well-defined",
        left_on_sq.is_ok(),
    );
    report.record(
        "tensor_sq.right_action",
        "(N⊗_A N)⊗A -> N⊗_A N well-defined",
        right_on_sq.is_ok(),
    );

    match (&left_on_sq, &right_on_sq) {
        (Ok(l_sq), Ok(r_sq)) => {
            report.require_eq(
                "comult.left_linear",
                "Δ∘l = l∘(A⊗Δ)",
                &l.then(&c.comult),
                &id_a.tensor(&c.comult).then(l_sq),
            );
            report.require_eq(
                "comult.right_linear",
                "Δ∘r = r∘(Δ⊗A)",
                &r.then(&c.comult),
                &c.comult.tensor(&id_a).then(r_sq),
            );
        }
        _ => {
            report.record("comult.left_linear", "Δ∘l = l∘(A⊗Δ)", false);
            report.record("comult.right_linear", "Δ∘r = r∘(Δ⊗A)", false);
        }
    }

    // Counit laws through the quotient.
    match sq.descend(&c.counit.tensor(&id_n).then(l)) {
        Ok(kappa) => report.require_eq(
            "counit.law_left",
            "(ε⊗_A N)∘Δ = id",
            &c.comult.then(&kappa),
            &id_n,
        ),
        Err(_) => report.record("counit.law_left", "(ε⊗_A N)∘Δ = id", false),
    }
    match sq.descend(&id_n.tensor(&c.counit).then(r)) {
        Ok(kappa) => report.require_eq(
            "counit.law_right",
            "(N⊗_A ε)∘Δ = id",
            &c.comult.then(&kappa),
            &id_n,
        ),
        Err(_) => report.record("counit.law_right", "(N⊗_A ε)∘Δ = id", false),
    }

    // Triple quotient N⊗_A N⊗_A N.
    let defect = r.tensor(&id_n).sub(&id_n.tensor(l));
    let rel_12 = defect.tensor(&id_n);
    let rel_23 = id_n.tensor(&defect);
    let relations = rel_12.mat().transpose().vstack(&rel_23.mat().transpose());
    let triple = Presentation::from_relations(&n.tensor(n).tensor(n), &relations);

    let left_leg = sq.descend(&c.comult_ambient.tensor(&id_n).then(&triple.proj));
    let right_leg = sq.descend(&id_n.tensor(&c.comult_ambient).then(&triple.proj));
    match (left_leg, right_leg) {
        (Ok(dl), Ok(dr)) => report.require_eq(
            "coassociativity",
            "(Δ⊗_A N)∘Δ = (N⊗_A Δ)∘Δ",
            &c.comult.then(&dl),
            &c.comult.then(&dr),
        ),
        _ => report.record("coassociativity", "(Δ⊗_A N)∘Δ = (N⊗_A Δ)∘Δ", false),
    }

    // Associativity comparisons (N⊗_A N)⊗_A N -> N⊗_A N⊗_A N <- N⊗_A (N⊗_A N).
    if let (Ok(l_sq), Ok(r_sq)) = (left_on_sq, right_on_sq) {
        let from_left = balanced_tensor(&sq.space, &r_sq, &a.carrier, l, n);
        let cmp_left =
            from_left.descend(&sq.sect.tensor(&id_n).then(&triple.proj)).map(|f| f.invert());
        report.record(
            "tensor_assoc.left",
            "(N⊗_A N)⊗_A N ≅ N⊗_A N⊗_A N",
            matches!(cmp_left, Ok(Some(_))),
        );
        let from_right = balanced_tensor(n, r, &a.carrier, &l_sq, &sq.space);
        let cmp_right =
            from_right.descend(&id_n.tensor(&sq.sect).then(&triple.proj)).map(|f| f.invert());
        report.record(
            "tensor_assoc.right",
            "N⊗_A (N⊗_A N) ≅ N⊗_A N⊗_A N",
            matches!(cmp_right, Ok(Some(_))),
        );
    } else {
        report.record("tensor_assoc.left", "(N⊗_A N)⊗_A N ≅ N⊗_A N⊗_A N", false);
        report.record("tensor_assoc.right", "N⊗_A (N⊗_A N) ≅ N⊗_A N⊗_A N", false);
    }

    report
}

/// The other side of the bijection: given a candidate right action `ξ`
/// on `A (x) C`, assembles the bimodule and coring data of the triple
/// `(A⊗C, m⊗C, ξ, A⊗ε, A⊗δ)` and checks all of it, with no gate. A
/// passing report is equivalent to `ξ∘(e⊗C⊗A)` passing the entwining
/// diagrams.
pub fn check_induced_coring(a: &Algebra, c: &Coalgebra, xi: &LinMap) -> Report {
    let id_a = a.id();
    let id_c = c.id();
    let carrier = Bimodule {
        carrier: a.carrier.tensor(&c.carrier),
        left_action: a.mult.tensor(&id_c),
        right_action: xi.clone(),
        left_over: a.clone(),
        right_over: a.clone(),
    };
    let counit = id_a.tensor(&c.counit);
    let insert = id_a.tensor(&id_c).tensor(&a.unit).tensor(&id_c);
    let comult_ambient = id_a.tensor(&c.comult).then(&insert);
    check_coring(&Coring::assemble(carrier, counit, comult_ambient))
}

/// Lifts a right module along the entwining: `M (x) C` with action
/// `(ξ⊗C)∘(M⊗λ)`.
pub fn lift_comonad(e: &Entwining, m: &RightModule) -> Result<RightModule, EntwiningError> {
    if m.over != e.alg {
        return Err(EntwiningError::MismatchedAlgebra);
    }
    gate(check_entwining(e))?;
    gate(check_module(m))?;
    let id_m = LinMap::identity(&m.carrier, e.field());
    let id_c = e.coalg.id();
    let action = id_m.tensor(&e.lambda).then(&m.action.tensor(&id_c));
    Ok(RightModule {
        carrier: m.carrier.tensor(&e.coalg.carrier),
        action,
        over: e.alg.clone(),
    })
}

/// The mirror lift of a right comodule: `V (x) A` with coaction
/// `(V⊗λ)∘(ν⊗A)`.
pub fn lift_monad(e: &Entwining, v: &RightComodule) -> Result<RightComodule, EntwiningError> {
    if v.over != e.coalg {
        return Err(EntwiningError::MismatchedCoalgebra);
    }
    gate(check_entwining(e))?;
    gate(check_comodule(v))?;
    let id_v = LinMap::identity(&v.carrier, e.field());
    let id_a = e.alg.id();
    let coaction = v.coaction.tensor(&id_a).then(&id_v.tensor(&e.lambda));
    Ok(RightComodule {
        carrier: v.carrier.tensor(&e.alg.carrier),
        coaction,
        over: e.coalg.clone(),
    })
}

/// A module and a comodule on one carrier, compatible through `λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntwinedModule {
    pub carrier: Obj,
    pub action: LinMap,
    pub coaction: LinMap,
    pub over: Entwining,
}

impl EntwinedModule {
    pub fn new(
        carrier: Obj,
        action: LinMap,
        coaction: LinMap,
        over: Entwining,
    ) -> Result<Self, StructureError> {
        RightModule::new(carrier.clone(), action.clone(), over.alg.clone())?;
        RightComodule::new(carrier.clone(), coaction.clone(), over.coalg.clone())?;
        Ok(EntwinedModule { carrier, action, coaction, over })
    }

    pub fn module(&self) -> RightModule {
        RightModule {
            carrier: self.carrier.clone(),
            action: self.action.clone(),
            over: self.over.alg.clone(),
        }
    }

    pub fn comodule(&self) -> RightComodule {
        RightComodule {
            carrier: self.carrier.clone(),
            coaction: self.coaction.clone(),
            over: self.over.coalg.clone(),
        }
    }
}

/// The lifted module together with the free coaction `M (x) δ`.
pub fn lifted_entwined_module(
    e: &Entwining,
    m: &RightModule,
) -> Result<EntwinedModule, EntwiningError> {
    let lifted = lift_comonad(e, m)?;
    let id_m = LinMap::identity(&m.carrier, e.field());
    Ok(EntwinedModule {
        carrier: lifted.carrier,
        action: lifted.action,
        coaction: id_m.tensor(&e.coalg.comult),
        over: e.clone(),
    })
}

/// Module axioms, comodule axioms, and the entwined compatibility square.
pub fn check_entwined(x: &EntwinedModule) -> Report {
    let mut report = Report::new();
    report.absorb("module", check_module(&x.module()));
    report.absorb("comodule", check_comodule(&x.comodule()));
    let id_m = LinMap::identity(&x.carrier, x.over.field());
    let id_a = x.over.alg.id();
    let id_c = x.over.coalg.id();
    report.require_eq(
        "compatibility",
        "(ξ⊗C)∘(M⊗λ)∘(ν⊗A) = ν∘ξ",
        &x.coaction
            .tensor(&id_a)
            .then(&id_m.tensor(&x.over.lambda))
            .then(&x.action.tensor(&id_c)),
        &x.action.then(&x.coaction),
    );
    report
}

/// A morphism of entwined modules must intertwine both the actions and
/// the coactions.
pub fn check_entwined_morphism(f: &LinMap, src: &EntwinedModule, dst: &EntwinedModule) -> Report {
    assert_eq!(f.dom(), &src.carrier, "morphism domain mismatch");
    assert_eq!(f.cod(), &dst.carrier, "morphism codomain mismatch");
    let id_a = src.over.alg.id();
    let id_c = src.over.coalg.id();
    let mut report = Report::new();
    report.require_eq(
        "action_square",
        "ξ'∘(f⊗A) = f∘ξ",
        &f.tensor(&id_a).then(&dst.action),
        &src.action.then(f),
    );
    report.require_eq(
        "coaction_square",
        "ν'∘f = (f⊗C)∘ν",
        &f.then(&dst.coaction),
        &src.coaction.then(&f.tensor(&id_c)),
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::generate::{random_algebra, random_coalgebra, twisted_free_module};
    use crate::graded::BraidingKind;
    

    fn f2() -> FieldSpec {
        FieldSpec::prime(2).unwrap()
    }

    fn trivial_ctx(field: FieldSpec) -> MonoidalCtx {
        MonoidalCtx::new(field, BraidingKind::TrivialSwap)
    }

    fn c2_algebra(field: FieldSpec) -> Algebra {
        let h = Obj::ungraded(2);
        let unit = LinMap::from_i64(Obj::unit(), h.clone(), field, &[1, 0]);
        let mult = LinMap::from_i64(h.tensor(&h), h.clone(), field, &[1, 0, 0, 1, 0, 1, 1, 0]);
        Algebra::new(h, unit, mult).unwrap()
    }

    fn c2_coalgebra(field: FieldSpec) -> Coalgebra {
        let h = Obj::ungraded(2);
        let counit = LinMap::from_i64(h.clone(), Obj::unit(), field, &[1, 1]);
        let comult = LinMap::from_i64(h.clone(), h.tensor(&h), field, &[1, 0, 0, 0, 0, 0, 0, 1]);
        Coalgebra::new(h, counit, comult).unwrap()
    }

    #[test]
    fn trivial_entwining_passes() {
        let e = Entwining::trivial(c2_algebra(f2()));
        let report = check_entwining(&e);
        assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
    }

    #[test]
    fn flip_passes_for_seeded_pairs_under_both_braidings() {
        let f3 = FieldSpec::prime(3).unwrap();
        for (seed, field) in [(0u64, f2()), (1, f3)] {
            let a = random_algebra([2, 0], field, seed).unwrap();
            let c = random_coalgebra([1, 1], field, seed + 100).unwrap();
            for braiding in [BraidingKind::TrivialSwap, BraidingKind::SuperSwap] {
                let ctx = MonoidalCtx::new(field, braiding);
                let e = Entwining::flip(a.clone(), c.clone(), &ctx);
                assert!(check_entwining(&e).pass());
            }
        }
    }

    #[test]
    fn negated_flip_entry_fails_over_q() {
        let q = FieldSpec::Rationals;
        let a = c2_algebra(q);
        let c = c2_coalgebra(q);
        let e = Entwining::flip(a.clone(), c.clone(), &trivial_ctx(q));
        // Negate one entry of the permutation.
        let mut mat = e.lambda.mat().clone();
        let col = 1;
        let row = (0..mat.rows()).find(|&r| !mat.get(r, col).is_zero()).unwrap();
        mat.set(row, col, -mat.get(row, col));
        let broken = Entwining::new(a, c, LinMap::new(e.lambda.dom().clone(), e.lambda.cod().clone(), mat).unwrap()).unwrap();
        let report = check_entwining(&broken);
        assert!(!report.pass());
    }

    #[test]
    fn broken_components_block_the_diagrams() {
        // A coalgebra with a zeroed structure constant fails its own
        // axioms, so the diagram checks are not even attempted.
        let h = Obj::ungraded(2);
        let counit = LinMap::from_i64(h.clone(), Obj::unit(), f2(), &[1, 1]);
        let comult = LinMap::from_i64(h.clone(), h.tensor(&h), f2(), &[1, 0, 0, 0, 0, 0, 0, 0]);
        let c = Coalgebra::new(h, counit, comult).unwrap();
        let e = Entwining::flip(c2_algebra(f2()), c, &trivial_ctx(f2()));
        let report = check_entwining(&e);
        assert!(!report.pass());
        assert!(report.find("unit").is_none());
    }

    #[test]
    fn xi_of_trivial_entwining_is_multiplication() {
        let e = Entwining::trivial(c2_algebra(f2()));
        let xi = xi_from_lambda(&e);
        assert_eq!(xi.action.mat(), e.alg.mult.mat());
    }

    #[test]
    fn xi_of_flip_reorders_factors() {
        // ξ((g^i ⊗ g^j) ⊗ g^k) = g^{i+k} ⊗ g^j on all eight basis vectors.
        let field = f2();
        let e = Entwining::flip(c2_algebra(field), c2_coalgebra(field), &trivial_ctx(field));
        let xi = xi_from_lambda(&e);
        for i in 0..2usize {
            for j in 0..2usize {
                for k in 0..2usize {
                    let col = (i * 2 + j) * 2 + k;
                    let expect_row = ((i + k) % 2) * 2 + j;
                    for r in 0..4 {
                        let want = usize::from(r == expect_row) as i64;
                        assert_eq!(xi.action.mat().get(r, col), &field.from_i64(want));
                    }
                }
            }
        }
    }

    #[test]
    fn induced_bimodule_passes() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        assert!(check_module(&xi_from_lambda(&e)).pass());
        assert!(check_bimodule(&induced_bimodule(&e)).pass());
    }

    #[test]
    fn lambda_xi_round_trip() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let xi = xi_from_lambda(&e);
        assert_eq!(lambda_from_xi(&e.alg, &e.coalg, &xi.action), e.lambda);

        // Trivial case: ξ = m recovers λ = id.
        let t = Entwining::trivial(c2_algebra(f2()));
        let xi_t = xi_from_lambda(&t);
        assert!(lambda_from_xi(&t.alg, &t.coalg, &xi_t.action).is_identity());
    }

    #[test]
    fn coring_of_trivial_entwining_is_the_algebra() {
        let e = Entwining::trivial(c2_algebra(f2()));
        let coring = build_coring(&e).unwrap();
        assert_eq!(coring.carrier.carrier.total_dim(), 2);
        assert!(coring.counit.is_identity());
        assert!(check_coring(&coring).pass());
    }

    #[test]
    fn coring_of_flip_on_c2_passes_all_axioms() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let coring = build_coring(&e).unwrap();
        assert_eq!(coring.carrier.carrier.total_dim(), 4);
        let report = check_coring(&coring);
        assert!(report.pass(), "{:?}", report.failures().collect::<Vec<_>>());
        // N ⊗_A N collapses to A⊗C⊗C.
        assert_eq!(coring.tensor_sq.dim(), 8);
    }

    #[test]
    fn perturbed_lambda_is_refused() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let mut mat = e.lambda.mat().clone();
        mat.set(0, 1, f2().one());
        let broken = Entwining::new(
            e.alg.clone(),
            e.coalg.clone(),
            LinMap::new(e.lambda.dom().clone(), e.lambda.cod().clone(), mat).unwrap(),
        )
        .unwrap();
        assert!(matches!(build_coring(&broken), Err(EntwiningError::PreconditionFailed { .. })));
    }

    #[test]
    fn lift_comonad_with_trivial_coalgebra_returns_the_module() {
        let e = Entwining::trivial(c2_algebra(f2()));
        let m = twisted_free_module(&e.alg, 1, 5);
        let lifted = lift_comonad(&e, &m).unwrap();
        assert_eq!(lifted, m);
    }

    #[test]
    fn lift_of_regular_module_recovers_xi() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let lifted = lift_comonad(&e, &RightModule::regular(&e.alg)).unwrap();
        assert_eq!(lifted, xi_from_lambda(&e));
    }

    #[test]
    fn lifted_modules_pass_and_entwine() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        for seed in 0..3 {
            let m = twisted_free_module(&e.alg, 1, seed);
            let lifted = lift_comonad(&e, &m).unwrap();
            assert!(check_module(&lifted).pass());
            let entwined = lifted_entwined_module(&e, &m).unwrap();
            assert!(check_entwined(&entwined).pass());
        }
    }

    #[test]
    fn lift_monad_mirrors() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let v = RightComodule::regular(&e.coalg);
        let lifted = lift_monad(&e, &v).unwrap();
        assert!(check_comodule(&lifted).pass());
        // With the free action V⊗m the lift is an entwined module.
        let id_v = LinMap::identity(&v.carrier, f2());
        let x = EntwinedModule::new(
            lifted.carrier.clone(),
            id_v.tensor(&e.alg.mult),
            lifted.coaction.clone(),
            e.clone(),
        )
        .unwrap();
        assert!(check_entwined(&x).pass());
    }

    #[test]
    fn mismatched_algebra_is_rejected() {
        let e = Entwining::trivial(c2_algebra(f2()));
        let other = Algebra::base(f2());
        let m = RightModule::regular(&other);
        assert!(matches!(lift_comonad(&e, &m), Err(EntwiningError::MismatchedAlgebra)));
    }

    #[test]
    fn unit_entwined_module_passes() {
        let a = Algebra::base(f2());
        let e = Entwining::trivial(a.clone());
        let x = EntwinedModule::new(
            Obj::unit(),
            a.mult.clone(),
            a.mult.clone(),
            e,
        )
        .unwrap();
        assert!(check_entwined(&x).pass());
    }

    #[test]
    fn zero_coaction_fails_the_counit_axiom() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let m = RightModule::regular(&e.alg);
        let x = EntwinedModule::new(
            m.carrier.clone(),
            m.action.clone(),
            LinMap::zero(&m.carrier, &m.carrier.tensor(&e.coalg.carrier), f2()),
            e,
        )
        .unwrap();
        let report = check_entwined(&x);
        assert!(!report.pass());
        assert!(!report.find("comodule.coaction.counit").unwrap().pass);
    }

    #[test]
    fn entwined_morphism_squares() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let m = RightModule::regular(&e.alg);
        let x = lifted_entwined_module(&e, &m).unwrap();
        let id = LinMap::identity(&x.carrier, f2());
        assert!(check_entwined_morphism(&id, &x, &x).pass());

        // A map that scrambles the carrier fails at least one square.
        let scramble = LinMap::from_i64(
            x.carrier.clone(),
            x.carrier.clone(),
            f2(),
            &[0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0],
        );
        assert!(!check_entwined_morphism(&scramble, &x, &x).pass());
    }

    #[test]
    fn induced_coring_check_matches_entwining_check() {
        let e = Entwining::flip(c2_algebra(f2()), c2_coalgebra(f2()), &trivial_ctx(f2()));
        let xi = xi_from_lambda(&e);
        assert!(check_induced_coring(&e.alg, &e.coalg, &xi.action).pass());
    }
}
