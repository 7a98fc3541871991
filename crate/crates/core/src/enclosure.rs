//! Certified intervals for computed scalars.

use std::fmt;

/// How an [`Enclosure`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EnclosureKind {
    /// Closed form or a direct factorization with rounding padding.
    Exact,
    /// Angular sweep of the numerical range with a certified upper end.
    Swept,
    /// `w(A) = λ_max(A + Aᵀ) / 2` for entrywise nonnegative `A`.
    FastPath,
}

impl EnclosureKind {
    pub fn as_str(self) -> &'static str {
        match self {
            EnclosureKind::Exact => "exact",
            EnclosureKind::Swept => "swept",
            EnclosureKind::FastPath => "fastpath",
        }
    }
}

impl fmt::Display for EnclosureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// An interval `[lo, hi]` guaranteed to contain a computed quantity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
    pub kind: EnclosureKind,
}

impl Enclosure {
    /// Builds an enclosure, swapping the ends if they arrive out of order.
    pub fn new(lo: f64, hi: f64, kind: EnclosureKind) -> Self {
        if lo <= hi {
            Enclosure { lo, hi, kind }
        } else {
            Enclosure {
                lo: hi,
                hi: lo,
                kind,
            }
        }
    }

    /// A symmetric enclosure `value ± pad`.
    pub fn around(value: f64, pad: f64, kind: EnclosureKind) -> Self {
        let pad = pad.abs();
        Enclosure::new(value - pad, value + pad, kind)
    }

    pub fn point(value: f64, kind: EnclosureKind) -> Self {
        Enclosure {
            lo: value,
            hi: value,
            kind,
        }
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn overlaps(&self, other: &Enclosure) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

impl fmt::Display for Enclosure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.12}, {:.12}] ({})", self.lo, self.hi, self.kind)
    }
}
