//! Seeded random generation of small structures over prime fields.
//!
//! Generation is rejection sampling with the axiom checkers as the gate:
//! the unit (resp. counit) rows of a candidate are pinned by the unit
//! laws so only the genuinely free structure constants are sampled, and a
//! candidate is emitted only if its full checker passes. Everything is
//! deterministic per seed.

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::graded::{Degree, LinMap, Obj};
use crate::matrix::Matrix;
use crate::structures::{
    check_algebra, check_coalgebra, check_module, dualize_algebra, Algebra, Coalgebra, RightModule,
};

pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenerateError {
    #[error("random structure search runs over prime fields only, got {0}")]
    UnsupportedField(FieldSpec),
    #[error("no passing candidate after {attempts} attempts (seed {seed})")]
    GiveUp { attempts: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructureKind {
    Algebra,
    Coalgebra,
}

#[derive(Debug, Clone)]
pub enum GeneratedStructure {
    Algebra(Algebra),
    Coalgebra(Coalgebra),
}

/// Seeded search for a structure of the requested kind on a `dims`-graded
/// space; deterministic per seed.
pub fn random_structure(
    kind: StructureKind,
    dims: [usize; 2],
    field: FieldSpec,
    seed: u64,
) -> Result<GeneratedStructure, GenerateError> {
    match kind {
        StructureKind::Algebra => {
            random_algebra(dims, field, seed).map(GeneratedStructure::Algebra)
        }
        StructureKind::Coalgebra => {
            random_coalgebra(dims, field, seed).map(GeneratedStructure::Coalgebra)
        }
    }
}

pub fn random_algebra(
    dims: [usize; 2],
    field: FieldSpec,
    seed: u64,
) -> Result<Algebra, GenerateError> {
    random_algebra_with_budget(dims, field, seed, DEFAULT_BUDGET)
}

pub fn random_algebra_with_budget(
    dims: [usize; 2],
    field: FieldSpec,
    seed: u64,
    budget: usize,
) -> Result<Algebra, GenerateError> {
    let FieldSpec::PrimeField(p) = field else {
        return Err(GenerateError::UnsupportedField(field));
    };
    if dims[0] == 0 {
        // A unit is an even vector; there is none to pin.
        return Err(GenerateError::GiveUp { attempts: 0, seed });
    }
    let carrier = Obj::graded(dims[0], dims[1]);
    let n = carrier.total_dim();
    if n == 1 {
        return Ok(Algebra::base(field));
    }
    let unit = {
        let mut mat = Matrix::zero(n, 1, field);
        mat.set(0, 0, field.one());
        LinMap::new(Obj::unit(), carrier.clone(), mat).expect("unit vector is even")
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 1..=budget {
        let mut mat = Matrix::zero(n, n * n, field);
        for i in 0..n {
            for j in 0..n {
                let col = i * n + j;
                if i == 0 {
                    mat.set(j, col, field.one());
                } else if j == 0 {
                    mat.set(i, col, field.one());
                } else {
                    let deg = carrier.degree(i).combine(carrier.degree(j));
                    for r in 0..n {
                        if carrier.degree(r) == deg {
                            mat.set(r, col, field.residue(rng.random_range(0..p)));
                        }
                    }
                }
            }
        }
        let mult = LinMap::new(carrier.tensor(&carrier), carrier.clone(), mat)
            .expect("sampled within degree blocks");
        let candidate = Algebra { carrier: carrier.clone(), unit: unit.clone(), mult };
        if check_algebra(&candidate).pass() {
            return Ok(candidate);
        }
    }
    Err(GenerateError::GiveUp { attempts: budget, seed })
}

pub fn random_coalgebra(
    dims: [usize; 2],
    field: FieldSpec,
    seed: u64,
) -> Result<Coalgebra, GenerateError> {
    let c = dualize_algebra(&random_algebra(dims, field, seed)?);
    debug_assert!(check_coalgebra(&c).pass());
    Ok(c)
}

/// Seeded search for a right module structure on a `dims`-graded space.
/// The unit law is solved linearly first; only the kernel directions of
/// that constraint are sampled, then associativity gates the candidate.
pub fn random_module(
    over: &Algebra,
    dims: [usize; 2],
    seed: u64,
) -> Result<RightModule, GenerateError> {
    random_module_with_budget(over, dims, seed, DEFAULT_BUDGET)
}

pub fn random_module_with_budget(
    over: &Algebra,
    dims: [usize; 2],
    seed: u64,
    budget: usize,
) -> Result<RightModule, GenerateError> {
    let field = over.field();
    let FieldSpec::PrimeField(p) = field else {
        return Err(GenerateError::UnsupportedField(field));
    };
    let carrier = Obj::graded(dims[0], dims[1]);
    let m = carrier.total_dim();
    let domain = carrier.tensor(&over.carrier);

    // Solve ξ∘(M⊗e) = id for ξ, transposed so columns are the unknowns.
    let insert_unit = Matrix::identity(m, field).kronecker(over.unit.mat());
    let st = insert_unit.transpose();
    let Some(particular) = st.solve(&Matrix::identity(m, field)) else {
        return Err(GenerateError::GiveUp { attempts: 0, seed });
    };
    let kernel = st.kernel_basis();
    let kernel_degrees: Vec<Degree> = (0..kernel.rows())
        .map(|r| {
            let lead = (0..kernel.cols())
                .find(|&c| !kernel.get(r, c).is_zero())
                .expect("kernel rows are nonzero");
            domain.degree(lead)
        })
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 1..=budget {
        let mut xi_t = particular.clone();
        for col in 0..m {
            let want = carrier.degree(col);
            for (row, &deg) in kernel_degrees.iter().enumerate() {
                if deg != want {
                    continue;
                }
                let coeff = field.residue(rng.random_range(0..p));
                if coeff.is_zero() {
                    continue;
                }
                for q in 0..kernel.cols() {
                    let v = xi_t.get(q, col) + &(&coeff * kernel.get(row, q));
                    xi_t.set(q, col, v);
                }
            }
        }
        let action = match LinMap::new(domain.clone(), carrier.clone(), xi_t.transpose()) {
            Ok(map) => map,
            Err(_) => continue,
        };
        let candidate = RightModule { carrier: carrier.clone(), action, over: over.clone() };
        if check_module(&candidate).pass() {
            return Ok(candidate);
        }
    }
    Err(GenerateError::GiveUp { attempts: budget, seed })
}

/// A seeded random invertible degree-preserving endomorphism.
pub fn random_automorphism(obj: &Obj, field: FieldSpec, rng: &mut ChaCha8Rng) -> LinMap {
    loop {
        let f = crate::graded::random_linmap(obj, obj, field, rng);
        if f.invert().is_some() {
            return f;
        }
    }
}

/// The free module of the given rank with its action conjugated by a
/// random automorphism. Unlike [`random_module`] this cannot give up:
/// free modules exist over every algebra. Deterministic per seed.
pub fn twisted_free_module(over: &Algebra, rank: usize, seed: u64) -> RightModule {
    assert!(rank >= 1, "free module needs positive rank");
    let field = over.field();
    let v = Obj::ungraded(rank);
    let carrier = v.tensor(&over.carrier);
    let free_action = LinMap::identity(&v, field).tensor(&over.mult);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = random_automorphism(&carrier, field, &mut rng);
    let phi_inv = phi.invert().expect("sampled invertible");
    let action = phi_inv
        .tensor(&LinMap::identity(&over.carrier, field))
        .then(&free_action)
        .then(&phi);
    let module = RightModule { carrier, action, over: over.clone() };
    debug_assert!(check_module(&module).pass());
    module
}
