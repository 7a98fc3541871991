use std::collections::BTreeMap;
use std::fmt;

use crate::enclosure::Enclosure;
use crate::error::{Error, Result};
use crate::matcore::ComplexMatrix;

/// Identifies one bound of the catalogue, with its parameter `t ∈ [0, 1]` when it has one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BoundId {
    /// `a_ij = ‖A_ij‖` everywhere, diagonal included.
    HouDu,
    /// Diagonal `w(A_ii)`, off-diagonal `‖A_ij‖`.
    Aok,
    /// Upper-triangular `‖|A_ij| + |A_ji*|‖^{1/2} ‖|A_ji| + |A_ij*|‖^{1/2}`.
    SqrtSum,
    /// Upper-triangular `‖|A_ij|^{2t} + |A_ji*|^{2t}‖^{1/2} ‖|A_ij*|^{2(1−t)} + |A_ji|^{2(1−t)}‖^{1/2}`.
    Rem2I(f64),
    /// Upper-triangular `‖|A_ij|^{2t} + |A_ji*|^{2(1−t)}‖^{1/2} ‖|A_ij*|^{2(1−t)} + |A_ji|^{2t}‖^{1/2}`.
    Rem2Ii(f64),
    /// [`BoundId::Rem2I`] minimized over `t` independently per entry.
    Rem12I,
    /// [`BoundId::Rem2Ii`] minimized over `t` independently per entry.
    Rem12Ii,
    /// Every off-diagonal entry from its own contraction factorization.
    Cor11(f64),
    /// Paired contraction entries, exponents `t` and `1 − t` swapped on the lower block.
    Cor2(f64),
    /// Paired contraction entries, mixed exponents.
    Cor3(f64),
    /// Full matrix with `min{√‖(|A_ij|²+|A_ji*|²)/2‖, √‖(|A_ij*|²+|A_ji|²)/2‖}` off the diagonal.
    Prop4,
    /// `w([[0, A], [B, 0]])` bound for a given `t`.
    Prop5(f64),
    /// `w([[0, A], [B, 0]]) ≤ min{√(½‖|A|²+|B*|²‖), √(½‖|A*|²+|B|²‖)}`.
    P2Min,
    /// `w([[C, A], [B, D]])` bound.
    P22,
    /// `w(A) ≤ ‖A‖^t · ½‖|A|^{1−t} + |A*|^{1−t}‖`.
    Prop1(f64),
    /// [`BoundId::Prop1`] minimized over `t`.
    Prop1Min,
    /// `w(A) ≤ ½‖|A|^{2t} + |A*|^{2t}‖^{1/2} ‖|A*|^{2(1−t)} + |A|^{2(1−t)}‖^{1/2}`.
    P112(f64),
    /// `w(A) ≤ ½‖|A| + |A*|‖`.
    KittanehSum,
    /// `w(A) ≤ √(½‖|A|² + |A*|²‖)`.
    KittanehSq,
    /// `w(AB) ≤ ¼‖|A|^{2t} + |B*|^{2t}‖ ‖|A*|^{2(1−t)} + |B|^{2(1−t)}‖`.
    Product(f64),
    /// `w(AB ± CD)` bound with equal exponents.
    Th3,
    /// `w(AB ± CD)` bound with mixed exponents.
    Th4,
    /// `w(AB ± BA)` bound.
    Commutator,
}

impl BoundId {
    /// Block-matrix bounds accepted by [`super::evaluate_bound`], with `t` where needed.
    pub fn block_catalogue(ts: &[f64]) -> Vec<BoundId> {
        let mut ids = vec![
            BoundId::HouDu,
            BoundId::Aok,
            BoundId::SqrtSum,
            BoundId::Rem12I,
            BoundId::Rem12Ii,
            BoundId::Prop4,
        ];
        for &t in ts {
            ids.extend([
                BoundId::Rem2I(t),
                BoundId::Rem2Ii(t),
                BoundId::Cor11(t),
                BoundId::Cor2(t),
                BoundId::Cor3(t),
            ]);
        }
        ids
    }

    /// Names of the bounds that apply to a single block operator matrix.
    pub const BLOCK_NAMES: [&'static str; 11] = [
        "hou_du", "aok", "sqrt_sum", "rem2_i", "rem2_ii", "rem12_i", "rem12_ii", "cor1_1", "cor2",
        "cor3", "prop4",
    ];

    /// Names of the bounds that apply to a single square matrix.
    pub const SINGLE_NAMES: [&'static str; 5] =
        ["prop1", "prop1_min", "p112", "kittaneh_sum", "kittaneh_sq"];

    pub fn name(&self) -> &'static str {
        match self {
            BoundId::HouDu => "hou_du",
            BoundId::Aok => "aok",
            BoundId::SqrtSum => "sqrt_sum",
            BoundId::Rem2I(_) => "rem2_i",
            BoundId::Rem2Ii(_) => "rem2_ii",
            BoundId::Rem12I => "rem12_i",
            BoundId::Rem12Ii => "rem12_ii",
            BoundId::Cor11(_) => "cor1_1",
            BoundId::Cor2(_) => "cor2",
            BoundId::Cor3(_) => "cor3",
            BoundId::Prop4 => "prop4",
            BoundId::Prop5(_) => "prop5",
            BoundId::P2Min => "p2_min",
            BoundId::P22 => "p22",
            BoundId::Prop1(_) => "prop1",
            BoundId::Prop1Min => "prop1_min",
            BoundId::P112(_) => "p112",
            BoundId::KittanehSum => "kittaneh_sum",
            BoundId::KittanehSq => "kittaneh_sq",
            BoundId::Product(_) => "cor6",
            BoundId::Th3 => "th3",
            BoundId::Th4 => "th4",
            BoundId::Commutator => "cor5",
        }
    }

    pub fn t(&self) -> Option<f64> {
        match *self {
            BoundId::Rem2I(t)
            | BoundId::Rem2Ii(t)
            | BoundId::Cor11(t)
            | BoundId::Cor2(t)
            | BoundId::Cor3(t)
            | BoundId::Prop5(t)
            | BoundId::Prop1(t)
            | BoundId::P112(t)
            | BoundId::Product(t) => Some(t),
            _ => None,
        }
    }

    /// Parses a bound name, attaching `t` to the parameterized ones.
    ///
    /// `t` outside `[0, 1]` is rejected; a parameterized name without `t`
    /// yields [`Error::MissingParameter`].
    pub fn parse(name: &str, t: Option<f64>) -> Result<BoundId> {
        if let Some(t) = t {
            if !(0.0..=1.0).contains(&t) {
                return Err(Error::ExponentOutOfRange(t));
            }
        }
        let need = |ctor: fn(f64) -> BoundId| {
            t.map(ctor)
                .ok_or_else(|| Error::MissingParameter(name.to_string()))
        };
        match name {
            "hou_du" => Ok(BoundId::HouDu),
            "aok" => Ok(BoundId::Aok),
            "sqrt_sum" => Ok(BoundId::SqrtSum),
            "rem2_i" => need(BoundId::Rem2I),
            "rem2_ii" => need(BoundId::Rem2Ii),
            "rem12_i" => Ok(BoundId::Rem12I),
            "rem12_ii" => Ok(BoundId::Rem12Ii),
            "cor1_1" => need(BoundId::Cor11),
            "cor2" => need(BoundId::Cor2),
            "cor3" => need(BoundId::Cor3),
            "prop4" => Ok(BoundId::Prop4),
            "prop5" => need(BoundId::Prop5),
            "p2_min" => Ok(BoundId::P2Min),
            "p22" => Ok(BoundId::P22),
            "prop1" => need(BoundId::Prop1),
            "prop1_min" => Ok(BoundId::Prop1Min),
            "p112" => need(BoundId::P112),
            "kittaneh_sum" => Ok(BoundId::KittanehSum),
            "kittaneh_sq" => Ok(BoundId::KittanehSq),
            "cor6" => need(BoundId::Product),
            "th3" => Ok(BoundId::Th3),
            "th4" => Ok(BoundId::Th4),
            "cor5" => Ok(BoundId::Commutator),
            other => Err(Error::UnknownBound(other.to_string())),
        }
    }

    /// Whether this bound acts on a block operator matrix (as opposed to
    /// one or more plain operators).
    pub fn is_block(&self) -> bool {
        Self::BLOCK_NAMES.contains(&self.name())
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t() {
            Some(t) => write!(f, "{}(t={})", self.name(), t),
            None => f.write_str(self.name()),
        }
    }
}

/// Minimizing `t` for one auxiliary-matrix entry.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntryArgmin {
    pub i: usize,
    pub j: usize,
    pub t: f64,
    pub value: f64,
}

/// Outcome of evaluating a bound.
#[derive(Debug, Clone)]
pub struct BoundResult {
    pub id: BoundId,
    /// Parameter name → value (`t`, grid size, minimizing `t` of each scalar term).
    pub params: BTreeMap<String, f64>,
    /// Nonnegative auxiliary matrix whose numerical radius is the bound.
    pub aux: ComplexMatrix,
    /// `w(aux)` via the nonnegative fast path.
    pub value: Enclosure,
    /// Per-entry minimizers for min-over-t bounds.
    pub argmins: Option<Vec<EntryArgmin>>,
}

impl BoundResult {
    /// The certified bound, i.e. the upper end of `value`.
    pub fn bound(&self) -> f64 {
        self.value.hi
    }
}
