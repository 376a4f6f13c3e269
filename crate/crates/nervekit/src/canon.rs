//! Registry of the canonical-isomorphism composites used by the coherence
//! diagrams in this crate.
//!
//! The "can" arrows appearing in the cocycle coherence conditions, the
//! delooped Grothendieck nerve square, and the comparison-map squares are
//! drawn from a closed list of composite shapes built out of `a^{±1}`,
//! `l^{±1}`, `r^{±1}`, the braiding `c^{±1}`, and monoidal-functor
//! constraints `φ^{±1}`, `φ₀^{±1}`. No general coherence normalizer is used.
//!
//! Conventions fixed here (and relied on by every validator):
//! * unbracketed triple tensors are read left-nested, `(x⊗y)⊗z`;
//! * a braiding written `c ⊗ 1` acts on the left-nested pairing, so the
//!   three-factor exchange is `a ∘ (c⊗1) ∘ a⁻¹` ([`CanShape::BraidMiddle`]);
//! * degenerate cocycle entries compose the functor unit constraint first
//!   and the braiding second ([`CanShape::BraidUnitLeft`]).

use std::str::FromStr;

use crate::monoidal::{MonoidalCategory, MonoidalFunctor};

/// The registered composite shapes. Where a shape mentions a functor `F`,
/// objects `x, y` live in the source of `F` and `z` in its target (the
/// ambient category); otherwise all objects are ambient.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CanShape {
    /// `x⊗(y⊗z) -> (x⊗y)⊗z`, i.e. `a⁻¹`.
    AssocLeft,
    /// `(x⊗y)⊗z -> x⊗(y⊗z)`, i.e. `a`.
    AssocRight,
    /// `I⊗x -> x`.
    LeftUnit,
    /// `x -> I⊗x`.
    LeftUnitInv,
    /// `x⊗I -> x`.
    RightUnit,
    /// `x -> x⊗I`.
    RightUnitInv,
    /// `x⊗I -> I⊗x`, i.e. `c_{x,I}`.
    BraidRightUnit,
    /// `I⊗x -> x⊗I`, i.e. `c_{x,I}⁻¹`.
    BraidRightUnitInv,
    /// `F(I)⊗x -> I⊗x`, i.e. `φ₀⁻¹ ⊗ 1`.
    UnitIntroLeft,
    /// `I⊗x -> F(I)⊗x`, i.e. `φ₀ ⊗ 1`.
    UnitIntroLeftInv,
    /// `F(I)⊗x -> x`, i.e. `l ∘ (φ₀⁻¹ ⊗ 1)`.
    UnitLeftTransfer,
    /// `x -> F(I)⊗x`, i.e. `(φ₀ ⊗ 1) ∘ l⁻¹`.
    UnitLeftTransferInv,
    /// `F(I)⊗x -> x⊗I`, i.e. `c_{I,x} ∘ (φ₀⁻¹ ⊗ 1)`.
    BraidUnitLeft,
    /// `x⊗I -> F(I)⊗x`, i.e. `(φ₀ ⊗ 1) ∘ c_{I,x}⁻¹`.
    BraidUnitLeftInv,
    /// `x⊗(y⊗z) -> y⊗(x⊗z)`, i.e. `a ∘ (c_{x,y}⊗1) ∘ a⁻¹`.
    BraidMiddle,
    /// `y⊗(x⊗z) -> x⊗(y⊗z)`, i.e. `a ∘ (c_{x,y}⁻¹⊗1) ∘ a⁻¹`.
    BraidMiddleInv,
    /// `Fx⊗Fy -> F(x⊗y)`, i.e. `φ_{x,y}`.
    FunctorPair,
    /// `F(x⊗y) -> Fx⊗Fy`, i.e. `φ_{x,y}⁻¹`.
    FunctorPairInv,
    /// `Fx⊗(Fy⊗z) -> F(x⊗y)⊗z`, i.e. `(φ⊗1) ∘ a⁻¹`.
    FunctorDistributes,
    /// `F(x⊗y)⊗z -> Fx⊗(Fy⊗z)`, i.e. `a ∘ (φ⁻¹⊗1)`.
    FunctorSplits,
}

pub const ALL_SHAPES: [CanShape; 20] = [
    CanShape::AssocLeft,
    CanShape::AssocRight,
    CanShape::LeftUnit,
    CanShape::LeftUnitInv,
    CanShape::RightUnit,
    CanShape::RightUnitInv,
    CanShape::BraidRightUnit,
    CanShape::BraidRightUnitInv,
    CanShape::UnitIntroLeft,
    CanShape::UnitIntroLeftInv,
    CanShape::UnitLeftTransfer,
    CanShape::UnitLeftTransferInv,
    CanShape::BraidUnitLeft,
    CanShape::BraidUnitLeftInv,
    CanShape::BraidMiddle,
    CanShape::BraidMiddleInv,
    CanShape::FunctorPair,
    CanShape::FunctorPairInv,
    CanShape::FunctorDistributes,
    CanShape::FunctorSplits,
];

impl CanShape {
    pub fn id(&self) -> &'static str {
        match self {
            CanShape::AssocLeft => "assoc-left",
            CanShape::AssocRight => "assoc-right",
            CanShape::LeftUnit => "left-unit",
            CanShape::LeftUnitInv => "left-unit-inv",
            CanShape::RightUnit => "right-unit",
            CanShape::RightUnitInv => "right-unit-inv",
            CanShape::BraidRightUnit => "braid-right-unit",
            CanShape::BraidRightUnitInv => "braid-right-unit-inv",
            CanShape::UnitIntroLeft => "unit-intro-left",
            CanShape::UnitIntroLeftInv => "unit-intro-left-inv",
            CanShape::UnitLeftTransfer => "unit-left-transfer",
            CanShape::UnitLeftTransferInv => "unit-left-transfer-inv",
            CanShape::BraidUnitLeft => "braid-unit-left",
            CanShape::BraidUnitLeftInv => "braid-unit-left-inv",
            CanShape::BraidMiddle => "braid-middle",
            CanShape::BraidMiddleInv => "braid-middle-inv",
            CanShape::FunctorPair => "functor-pair",
            CanShape::FunctorPairInv => "functor-pair-inv",
            CanShape::FunctorDistributes => "functor-distributes",
            CanShape::FunctorSplits => "functor-splits",
        }
    }

    /// The registered reverse of each shape; `canonical_iso` of the reverse
    /// is the inverse morphism.
    pub fn reversed(&self) -> CanShape {
        match self {
            CanShape::AssocLeft => CanShape::AssocRight,
            CanShape::AssocRight => CanShape::AssocLeft,
            CanShape::LeftUnit => CanShape::LeftUnitInv,
            CanShape::LeftUnitInv => CanShape::LeftUnit,
            CanShape::RightUnit => CanShape::RightUnitInv,
            CanShape::RightUnitInv => CanShape::RightUnit,
            CanShape::BraidRightUnit => CanShape::BraidRightUnitInv,
            CanShape::BraidRightUnitInv => CanShape::BraidRightUnit,
            CanShape::UnitIntroLeft => CanShape::UnitIntroLeftInv,
            CanShape::UnitIntroLeftInv => CanShape::UnitIntroLeft,
            CanShape::UnitLeftTransfer => CanShape::UnitLeftTransferInv,
            CanShape::UnitLeftTransferInv => CanShape::UnitLeftTransfer,
            CanShape::BraidUnitLeft => CanShape::BraidUnitLeftInv,
            CanShape::BraidUnitLeftInv => CanShape::BraidUnitLeft,
            CanShape::BraidMiddle => CanShape::BraidMiddleInv,
            CanShape::BraidMiddleInv => CanShape::BraidMiddle,
            CanShape::FunctorPair => CanShape::FunctorPairInv,
            CanShape::FunctorPairInv => CanShape::FunctorPair,
            CanShape::FunctorDistributes => CanShape::FunctorSplits,
            CanShape::FunctorSplits => CanShape::FunctorDistributes,
        }
    }

    /// How many objects the shape binds.
    pub fn object_arity(&self) -> usize {
        match self {
            CanShape::AssocLeft | CanShape::AssocRight => 3,
            CanShape::BraidMiddle | CanShape::BraidMiddleInv => 3,
            CanShape::FunctorPair | CanShape::FunctorPairInv => 2,
            CanShape::FunctorDistributes | CanShape::FunctorSplits => 3,
            _ => 1,
        }
    }

    pub fn needs_functor(&self) -> bool {
        matches!(
            self,
            CanShape::UnitIntroLeft
                | CanShape::UnitIntroLeftInv
                | CanShape::UnitLeftTransfer
                | CanShape::UnitLeftTransferInv
                | CanShape::BraidUnitLeft
                | CanShape::BraidUnitLeftInv
                | CanShape::FunctorPair
                | CanShape::FunctorPairInv
                | CanShape::FunctorDistributes
                | CanShape::FunctorSplits
        )
    }

    pub fn needs_braiding(&self) -> bool {
        matches!(
            self,
            CanShape::BraidRightUnit
                | CanShape::BraidRightUnitInv
                | CanShape::BraidUnitLeft
                | CanShape::BraidUnitLeftInv
                | CanShape::BraidMiddle
                | CanShape::BraidMiddleInv
        )
    }
}

impl FromStr for CanShape {
    type Err = CanonError;

    fn from_str(s: &str) -> Result<Self, CanonError> {
        ALL_SHAPES
            .iter()
            .copied()
            .find(|sh| sh.id() == s)
            .ok_or_else(|| CanonError::UnknownShape(s.to_string()))
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CanonError {
    #[error("unknown canonical shape id: {0}")]
    UnknownShape(String),
    #[error("shape {shape} binds {expected} objects, got {got}")]
    ObjectArity {
        shape: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("shape {0} needs a functor binding")]
    MissingFunctor(&'static str),
    #[error("shape {0} needs a braiding")]
    MissingBraiding(&'static str),
    #[error("object binding out of range")]
    ObjectOutOfRange,
    #[error("constraint entry is not invertible")]
    NotInvertible,
}

/// Ambient category a composite is built in, with an optional braiding.
pub struct CanContext<'a> {
    pub mon: &'a MonoidalCategory,
    pub braiding: Option<&'a Vec<Vec<usize>>>,
}

impl<'a> CanContext<'a> {
    pub fn monoidal(mon: &'a MonoidalCategory) -> Self {
        CanContext {
            mon,
            braiding: None,
        }
    }

    pub fn braided(b: &'a crate::monoidal::BraidedMonoidalCategory) -> Self {
        CanContext {
            mon: &b.mon,
            braiding: Some(&b.braiding),
        }
    }
}

/// Object/functor bindings for a shape. Objects mentioning a functor
/// (`x`, `y` in the functor shapes) are source-category ids; the rest are
/// ambient ids. The functor's target must be the ambient category.
pub struct CanBindings<'a> {
    pub objects: &'a [usize],
    pub functor: Option<(&'a MonoidalFunctor, &'a MonoidalCategory)>,
}

impl<'a> CanBindings<'a> {
    pub fn objects(objects: &'a [usize]) -> Self {
        CanBindings {
            objects,
            functor: None,
        }
    }

    pub fn with_functor(
        objects: &'a [usize],
        functor: &'a MonoidalFunctor,
        source: &'a MonoidalCategory,
    ) -> Self {
        CanBindings {
            objects,
            functor: Some((functor, source)),
        }
    }
}

/// Builds the registered composite for `shape` under `bindings`, returning the
/// ambient morphism id. The result is always invertible (its inverse is
/// `canonical_iso` of the reversed shape).
pub fn canonical_iso(
    ctx: &CanContext,
    shape: CanShape,
    bindings: &CanBindings,
) -> Result<usize, CanonError> {
    let m = ctx.mon;
    if bindings.objects.len() != shape.object_arity() {
        return Err(CanonError::ObjectArity {
            shape: shape.id(),
            expected: shape.object_arity(),
            got: bindings.objects.len(),
        });
    }
    if shape.needs_functor() && bindings.functor.is_none() {
        return Err(CanonError::MissingFunctor(shape.id()));
    }
    let braid = |x: usize, y: usize| -> Result<usize, CanonError> {
        let b = ctx
            .braiding
            .ok_or(CanonError::MissingBraiding(shape.id()))?;
        Ok(b[x][y])
    };
    let inv = |mor: usize| m.invert(mor).ok_or(CanonError::NotInvertible);
    let check_obj = |o: usize, bound: usize| -> Result<usize, CanonError> {
        if o >= bound {
            Err(CanonError::ObjectOutOfRange)
        } else {
            Ok(o)
        }
    };
    let o = bindings.objects;
    match shape {
        CanShape::AssocLeft => {
            let (x, y, z) = (
                check_obj(o[0], m.objects())?,
                check_obj(o[1], m.objects())?,
                check_obj(o[2], m.objects())?,
            );
            inv(m.assoc_at(x, y, z))
        }
        CanShape::AssocRight => {
            let (x, y, z) = (
                check_obj(o[0], m.objects())?,
                check_obj(o[1], m.objects())?,
                check_obj(o[2], m.objects())?,
            );
            Ok(m.assoc_at(x, y, z))
        }
        CanShape::LeftUnit => Ok(m.lunit[check_obj(o[0], m.objects())?]),
        CanShape::LeftUnitInv => inv(m.lunit[check_obj(o[0], m.objects())?]),
        CanShape::RightUnit => Ok(m.runit[check_obj(o[0], m.objects())?]),
        CanShape::RightUnitInv => inv(m.runit[check_obj(o[0], m.objects())?]),
        CanShape::BraidRightUnit => {
            let x = check_obj(o[0], m.objects())?;
            braid(x, m.unit)
        }
        CanShape::BraidRightUnitInv => {
            let x = check_obj(o[0], m.objects())?;
            inv(braid(x, m.unit)?)
        }
        CanShape::UnitIntroLeft | CanShape::UnitIntroLeftInv => {
            let x = check_obj(o[0], m.objects())?;
            let (f, _) = bindings.functor.unwrap();
            let step = m.ten_m(inv(f.phi0())?, m.id_m(x));
            match shape {
                CanShape::UnitIntroLeft => Ok(step),
                _ => inv(step),
            }
        }
        CanShape::UnitLeftTransfer | CanShape::UnitLeftTransferInv => {
            let x = check_obj(o[0], m.objects())?;
            let (f, _) = bindings.functor.unwrap();
            let step = m.compose(m.lunit[x], m.ten_m(inv(f.phi0())?, m.id_m(x)));
            match shape {
                CanShape::UnitLeftTransfer => Ok(step),
                _ => inv(step),
            }
        }
        CanShape::BraidUnitLeft | CanShape::BraidUnitLeftInv => {
            let x = check_obj(o[0], m.objects())?;
            let (f, _) = bindings.functor.unwrap();
            let step = m.compose(braid(m.unit, x)?, m.ten_m(inv(f.phi0())?, m.id_m(x)));
            match shape {
                CanShape::BraidUnitLeft => Ok(step),
                _ => inv(step),
            }
        }
        CanShape::BraidMiddle | CanShape::BraidMiddleInv => {
            let (x, y, z) = (
                check_obj(o[0], m.objects())?,
                check_obj(o[1], m.objects())?,
                check_obj(o[2], m.objects())?,
            );
            let c = match shape {
                CanShape::BraidMiddle => braid(x, y)?,
                _ => inv(braid(x, y)?)?,
            };
            let (a, b) = match shape {
                CanShape::BraidMiddle => (x, y),
                _ => (y, x),
            };
            // a ∘ (c⊗1) ∘ a⁻¹ : a⊗(b⊗z) -> b⊗(a⊗z)
            Ok(m.compose_chain(&[
                m.assoc_at(b, a, z),
                m.ten_m(c, m.id_m(z)),
                inv(m.assoc_at(a, b, z))?,
            ]))
        }
        CanShape::FunctorPair | CanShape::FunctorPairInv => {
            let (f, fsrc) = bindings.functor.unwrap();
            let (x, y) = (
                check_obj(o[0], fsrc.objects())?,
                check_obj(o[1], fsrc.objects())?,
            );
            match shape {
                CanShape::FunctorPair => Ok(f.phi(x, y)),
                _ => inv(f.phi(x, y)),
            }
        }
        CanShape::FunctorDistributes => {
            let (f, fsrc) = bindings.functor.unwrap();
            let (x, y) = (
                check_obj(o[0], fsrc.objects())?,
                check_obj(o[1], fsrc.objects())?,
            );
            let z = check_obj(o[2], m.objects())?;
            // Fx⊗(Fy⊗z) -> (Fx⊗Fy)⊗z -> F(x⊗y)⊗z
            Ok(m.compose(
                m.ten_m(f.phi(x, y), m.id_m(z)),
                inv(m.assoc_at(f.obj(x), f.obj(y), z))?,
            ))
        }
        CanShape::FunctorSplits => {
            let (f, fsrc) = bindings.functor.unwrap();
            let (x, y) = (
                check_obj(o[0], fsrc.objects())?,
                check_obj(o[1], fsrc.objects())?,
            );
            let z = check_obj(o[2], m.objects())?;
            // F(x⊗y)⊗z -> (Fx⊗Fy)⊗z -> Fx⊗(Fy⊗z)
            Ok(m.compose(
                m.assoc_at(f.obj(x), f.obj(y), z),
                m.ten_m(inv(f.phi(x, y))?, m.id_m(z)),
            ))
        }
    }
}
