//! The ambient category: Z/2-graded finite-dimensional spaces over an
//! exact field, degree-preserving linear maps, tensor products and the
//! two supported symmetric braidings.
//!
//! The category is strict by construction: the basis of `X (x) Y` is
//! indexed by pairs `(i, j)` in lexicographic flat order `i*dim(Y) + j`,
//! with the parity of `(i, j)` computed per pair. Iterated products then
//! flatten to the same index set regardless of bracketing, so associators
//! and unit identifications are literal identity matrices. Objects built
//! directly from a dimension pair put all even basis vectors before the
//! odd ones; tensor products interleave parities as dictated by the flat
//! order.

use std::fmt;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::FieldSpec;
use crate::matrix::Matrix;
use crate::report::Report;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("matrix is {got_rows}x{got_cols} but the map needs {want_rows}x{want_cols}")]
    ShapeMismatch { got_rows: usize, got_cols: usize, want_rows: usize, want_cols: usize },
    #[error("entry ({row},{col}) mixes parities: it maps a degree-{from} basis vector into a degree-{to} one")]
    DegreeViolation { row: usize, col: usize, from: u8, to: u8 },
    #[error("map over {got} used in a {want} context")]
    FieldMismatch { got: FieldSpec, want: FieldSpec },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    Even,
    Odd,
}

impl Degree {
    pub fn combine(self, other: Degree) -> Degree {
        if self == other {
            Degree::Even
        } else {
            Degree::Odd
        }
    }

    fn as_u8(self) -> u8 {
        match self {
            Degree::Even => 0,
            Degree::Odd => 1,
        }
    }
}

/// A graded finite-dimensional space, given by the parity of each basis
/// vector in flat order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Obj {
    degrees: Vec<Degree>,
}

impl Obj {
    /// `even` degree-0 basis vectors followed by `odd` degree-1 ones.
    pub fn graded(even: usize, odd: usize) -> Obj {
        let mut degrees = vec![Degree::Even; even];
        degrees.extend(std::iter::repeat_n(Degree::Odd, odd));
        Obj { degrees }
    }

    pub fn ungraded(dim: usize) -> Obj {
        Obj::graded(dim, 0)
    }

    /// The monoidal unit: one even basis vector.
    pub fn unit() -> Obj {
        Obj::graded(1, 0)
    }

    pub fn from_degrees(degrees: Vec<Degree>) -> Obj {
        Obj { degrees }
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.len()
    }

    /// `[even part, odd part]` dimensions.
    pub fn dims(&self) -> [usize; 2] {
        let odd = self.degrees.iter().filter(|&&d| d == Degree::Odd).count();
        [self.degrees.len() - odd, odd]
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.degrees[i]
    }

    pub fn degrees(&self) -> &[Degree] {
        &self.degrees
    }

    pub fn tensor(&self, other: &Obj) -> Obj {
        let mut degrees = Vec::with_capacity(self.total_dim() * other.total_dim());
        for &a in &self.degrees {
            for &b in &other.degrees {
                degrees.push(a.combine(b));
            }
        }
        Obj { degrees }
    }
}

impl fmt::Display for Obj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [e, o] = self.dims();
        write!(f, "({e}|{o})")
    }
}

/// A degree-preserving linear map, stored as a `dim cod x dim dom`
/// matrix acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    dom: Obj,
    cod: Obj,
    mat: Matrix,
}

impl LinMap {
    pub fn new(dom: Obj, cod: Obj, mat: Matrix) -> Result<LinMap, StructureError> {
        if mat.rows() != cod.total_dim() || mat.cols() != dom.total_dim() {
            return Err(StructureError::ShapeMismatch {
                got_rows: mat.rows(),
                got_cols: mat.cols(),
                want_rows: cod.total_dim(),
                want_cols: dom.total_dim(),
            });
        }
        for r in 0..mat.rows() {
            for c in 0..mat.cols() {
                if cod.degree(r) != dom.degree(c) && !mat.get(r, c).is_zero() {
                    return Err(StructureError::DegreeViolation {
                        row: r,
                        col: c,
                        from: dom.degree(c).as_u8(),
                        to: cod.degree(r).as_u8(),
                    });
                }
            }
        }
        Ok(LinMap { dom, cod, mat })
    }

    pub fn from_i64(dom: Obj, cod: Obj, field: FieldSpec, entries: &[i64]) -> LinMap {
        let mat = Matrix::from_i64(cod.total_dim(), dom.total_dim(), field, entries);
        LinMap::new(dom, cod, mat).expect("literal map must be degree-preserving")
    }

    pub fn identity(obj: &Obj, field: FieldSpec) -> LinMap {
        LinMap {
            dom: obj.clone(),
            cod: obj.clone(),
            mat: Matrix::identity(obj.total_dim(), field),
        }
    }

    pub fn zero(dom: &Obj, cod: &Obj, field: FieldSpec) -> LinMap {
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            mat: Matrix::zero(cod.total_dim(), dom.total_dim(), field),
        }
    }

    pub fn dom(&self) -> &Obj {
        &self.dom
    }

    pub fn cod(&self) -> &Obj {
        &self.cod
    }

    pub fn mat(&self) -> &Matrix {
        &self.mat
    }

    pub fn field(&self) -> FieldSpec {
        self.mat.field()
    }

    /// `self . first` (apply `first`, then `self`).
    pub fn compose(&self, first: &LinMap) -> LinMap {
        assert_eq!(
            self.dom, first.cod,
            "composition mismatch: domain {} vs codomain {}",
            self.dom, first.cod
        );
        LinMap { dom: first.dom.clone(), cod: self.cod.clone(), mat: self.mat.mul(&first.mat) }
    }

    /// `next . self`; chains read along the diagram.
    pub fn then(&self, next: &LinMap) -> LinMap {
        next.compose(self)
    }

    pub fn tensor(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.field(), other.field(), "field mismatch in tensor");
        LinMap {
            dom: self.dom.tensor(&other.dom),
            cod: self.cod.tensor(&other.cod),
            mat: self.mat.kronecker(&other.mat),
        }
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dom, other.dom);
        assert_eq!(self.cod, other.cod);
        LinMap { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.add(&other.mat) }
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dom, other.dom);
        assert_eq!(self.cod, other.cod);
        LinMap { dom: self.dom.clone(), cod: self.cod.clone(), mat: self.mat.sub(&other.mat) }
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.mat.is_identity()
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    /// Exact two-sided inverse as a map `cod -> dom`, if one exists.
    pub fn invert(&self) -> Option<LinMap> {
        let mat = self.mat.invert()?;
        Some(LinMap { dom: self.cod.clone(), cod: self.dom.clone(), mat })
    }

    /// The dual map under the fixed basis identification of a space with
    /// its dual: the transposed matrix, with domain and codomain swapped.
    pub fn dual(&self) -> LinMap {
        LinMap { dom: self.cod.clone(), cod: self.dom.clone(), mat: self.mat.transpose() }
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}:", self.dom, self.cod)?;
        writeln!(f)?;
        write!(f, "{}", self.mat)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidingKind {
    /// Plain transposition of tensor factors.
    TrivialSwap,
    /// Koszul-sign transposition: swapping two odd vectors picks up -1.
    SuperSwap,
}

impl fmt::Display for BraidingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidingKind::TrivialSwap => write!(f, "trivial"),
            BraidingKind::SuperSwap => write!(f, "super"),
        }
    }
}

/// Field and braiding, fixed once per session.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonoidalCtx {
    pub field: FieldSpec,
    pub braiding: BraidingKind,
}

impl MonoidalCtx {
    pub fn new(field: FieldSpec, braiding: BraidingKind) -> Self {
        MonoidalCtx { field, braiding }
    }
}

/// The braiding `X (x) Y -> Y (x) X` of the chosen kind.
pub fn braiding(x: &Obj, y: &Obj, ctx: &MonoidalCtx) -> LinMap {
    let (xd, yd) = (x.total_dim(), y.total_dim());
    let mut mat = Matrix::zero(xd * yd, xd * yd, ctx.field);
    for i in 0..xd {
        for j in 0..yd {
            let sign = match ctx.braiding {
                BraidingKind::TrivialSwap => ctx.field.one(),
                BraidingKind::SuperSwap => {
                    if x.degree(i) == Degree::Odd && y.degree(j) == Degree::Odd {
                        ctx.field.from_i64(-1)
                    } else {
                        ctx.field.one()
                    }
                }
            };
            mat.set(j * xd + i, i * yd + j, sign);
        }
    }
    LinMap::new(x.tensor(y), y.tensor(x), mat).expect("braiding is degree-preserving")
}

/// Verifies the braiding axioms on a sample of objects: naturality on
/// seeded random maps, both hexagons, and symmetry. Exhaustive on the
/// basis (matrix identities), deterministic across runs.
pub fn check_braiding(ctx: &MonoidalCtx, sample: &[Obj]) -> Report {
    check_swap_family(ctx, sample, |x, y| braiding(x, y, ctx))
}

/// Same battery against an arbitrary candidate swap; lets tests feed in
/// deliberately broken swaps.
pub fn check_swap_family(
    ctx: &MonoidalCtx,
    sample: &[Obj],
    swap: impl Fn(&Obj, &Obj) -> LinMap,
) -> Report {
    let mut report = Report::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for (xi, x) in sample.iter().enumerate() {
        for (yi, y) in sample.iter().enumerate() {
            let sx = swap(x, y);
            let sy = swap(y, x);
            report.push(crate::report::eq_check(
                &format!("symmetry[{xi},{yi}]"),
                "σ_{Y,X}∘σ_{X,Y} = id",
                &sx.then(&sy),
                &LinMap::identity(&x.tensor(y), ctx.field),
            ));

            let f = random_linmap(x, x, ctx.field, &mut rng);
            let g = random_linmap(y, y, ctx.field, &mut rng);
            report.push(crate::report::eq_check(
                &format!("naturality[{xi},{yi}]"),
                "σ∘(f⊗g) = (g⊗f)∘σ",
                &f.tensor(&g).then(&sx),
                &sx.then(&g.tensor(&f)),
            ));

            for (zi, z) in sample.iter().enumerate() {
                let total = x.total_dim() * y.total_dim() * z.total_dim();
                if total > 64 {
                    continue;
                }
                let id_x = LinMap::identity(x, ctx.field);
                let id_y = LinMap::identity(y, ctx.field);
                let id_z = LinMap::identity(z, ctx.field);
                report.push(crate::report::eq_check(
                    &format!("hexagon_right[{xi},{yi},{zi}]"),
                    "σ_{X,Y⊗Z} = (Y⊗σ_{X,Z})∘(σ_{X,Y}⊗Z)",
                    &swap(x, &y.tensor(z)),
                    &swap(x, y).tensor(&id_z).then(&id_y.tensor(&swap(x, z))),
                ));
                report.push(crate::report::eq_check(
                    &format!("hexagon_left[{xi},{yi},{zi}]"),
                    "σ_{X⊗Y,Z} = (σ_{X,Z}⊗Y)∘(X⊗σ_{Y,Z})",
                    &swap(&x.tensor(y), z),
                    &id_x.tensor(&swap(y, z)).then(&swap(x, z).tensor(&id_y)),
                ));
            }
        }
    }
    report
}

/// A seeded random degree-preserving map with small entries.
pub fn random_linmap(dom: &Obj, cod: &Obj, field: FieldSpec, rng: &mut ChaCha8Rng) -> LinMap {
    let mat = Matrix::from_fn(cod.total_dim(), dom.total_dim(), field, |r, c| {
        if cod.degree(r) != dom.degree(c) {
            field.zero()
        } else {
            match field {
                FieldSpec::Rationals => field.from_i64(rng.random_range(-2..=2)),
                FieldSpec::PrimeField(p) => field.residue(rng.random_range(0..p)),
            }
        }
    });
    LinMap::new(dom.clone(), cod.clone(), mat).expect("construction respects degrees")
}
