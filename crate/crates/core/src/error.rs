use thiserror::Error;

use crate::group::Axiom;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    Shape { row: usize, len: usize, expected: usize },

    #[error("table entry {value} at ({row}, {col}) is out of range for size {size}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, size: usize },

    #[error("group axiom `{axiom}` fails at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: (usize, usize, usize) },

    #[error("exhaustive associativity check refused for order {order} (cap {cap}); skip it explicitly")]
    TooLargeToCheck { order: usize, cap: usize },

    #[error("element {element} is out of range for a set of size {size}")]
    ElementOutOfRange { element: usize, size: usize },

    #[error("not a subgroup: {0}")]
    NotASubgroup(String),

    #[error("map is not an automorphism: sigma({a}*{b}) != sigma({a})*sigma({b})")]
    AutomorphismRequired { a: usize, b: usize },

    #[error("map is not a bijection of {size} elements")]
    NotABijection { size: usize },

    #[error("operation table is not a rack")]
    NotARack,

    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("operands live on different bundles")]
    BundleMismatch,

    #[error("enumeration of {count} maps exceeds the cap of {cap}")]
    CapExceeded { count: u128, cap: u128 },

    #[error("base index {base} is out of range for a base of size {size}")]
    BaseOutOfRange { base: usize, size: usize },

    #[error("map is not equivariant: f(p*g) != g^-1 f(p) g at p = {point}, g = {element}")]
    NotEquivariant { point: usize, element: usize },

    #[error("permutation is not a gauge transformation: {0}")]
    NotAGaugeTransformation(String),

    #[error("f({point}) does not normalize H: its conjugate of {element} leaves H")]
    NormalizerViolation { point: usize, element: usize },

    #[error("element {element} does not commute with {witness} in H")]
    CentralizerViolation { element: usize, witness: usize },

    #[error("quotient operation is not well defined at representatives {0:?}")]
    NotWellDefined((usize, usize, usize, usize)),

    #[error("non-finite matrix entry")]
    NonFinite,

    #[error("matrix left the group: membership residual {residual:e} exceeds {tolerance:e}")]
    NotInGroup { residual: f64, tolerance: f64 },

    #[error("matrix dimension {found} does not match model dimension {expected}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("{0}")]
    Input(String),
}
