use crate::softset::SoftSet;
use crate::topology::SoftTopology;

/// Which soft-topology axiom a family violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopologyAxiom {
    ContainsNull,
    ContainsAbsolute,
    UnionClosed,
    IntersectionClosed,
}

/// Two opens separating a left object from a right object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    pub left: SoftSet,
    pub right: SoftSet,
    pub left_open: SoftSet,
    pub right_open: SoftSet,
}

/// Evidence attached to a [`Verdict`]. Every variant can be checked by
/// replaying the definition that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    None,
    Note(String),
    /// A required member is missing (`ContainsNull` / `ContainsAbsolute`).
    Missing {
        axiom: TopologyAxiom,
        set: SoftSet,
    },
    /// `left op right` is absent from the family.
    NotClosed {
        axiom: TopologyAxiom,
        left: SoftSet,
        right: SoftSet,
        result: SoftSet,
    },
    Point(usize),
    PointPair {
        first: usize,
        second: usize,
    },
    PointSet {
        point: usize,
        set: SoftSet,
    },
    Set(SoftSet),
    SetPair {
        first: SoftSet,
        second: SoftSet,
    },
    Family(Vec<SoftSet>),
    Separations(Vec<Separation>),
    /// A concrete space together with the evidence found inside it.
    Space {
        space: Box<SoftTopology>,
        detail: Box<Witness>,
    },
}

/// A decision plus the witness that certifies it.
///
/// `vacuous` marks universally quantified properties whose quantifier ranged
/// over nothing (T0–T2 on a one-point universe).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub holds: bool,
    pub vacuous: bool,
    pub witness: Witness,
}

impl Verdict {
    pub fn holds(witness: Witness) -> Self {
        Self {
            holds: true,
            vacuous: false,
            witness,
        }
    }

    pub fn fails(witness: Witness) -> Self {
        Self {
            holds: false,
            vacuous: false,
            witness,
        }
    }

    pub fn vacuous(witness: Witness) -> Self {
        Self {
            holds: true,
            vacuous: true,
            witness,
        }
    }

    /// Conjunction: fails with the first failing witness.
    pub fn and(self, other: Verdict) -> Verdict {
        match (self.holds, other.holds) {
            (false, _) => self,
            (true, false) => other,
            (true, true) => Verdict {
                holds: true,
                vacuous: self.vacuous && other.vacuous,
                witness: other.witness,
            },
        }
    }
}
