//! Deciders for the soft separation axioms.
//!
//! A soft open set `F` is a neighbourhood of `x` when `x ∈ F(e)` for every
//! parameter. Since opens are closed under finite intersection, the smallest
//! open superset of any soft set exists, and every existential "there are
//! disjoint opens around A and B" reduces to checking that the two smallest
//! open supersets are disjoint.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::topology::SoftTopology;
use crate::verdict::{Separation, Verdict, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxiomId {
    T0,
    T1,
    T2,
    Regular,
    T3,
    Normal,
    T4,
}

impl AxiomId {
    pub const ALL: [AxiomId; 7] = [
        AxiomId::T0,
        AxiomId::T1,
        AxiomId::T2,
        AxiomId::Regular,
        AxiomId::T3,
        AxiomId::Normal,
        AxiomId::T4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AxiomId::T0 => "t0",
            AxiomId::T1 => "t1",
            AxiomId::T2 => "t2",
            AxiomId::Regular => "regular",
            AxiomId::T3 => "t3",
            AxiomId::Normal => "normal",
            AxiomId::T4 => "t4",
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        AxiomId::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown axiom `{s}`")))
    }
}

/// How "x is not in G" is read for the point/closed-set separation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NonMembershipForm {
    /// `x ∉ G(e)` for some parameter.
    NotMember,
    /// `(x, E) ∩ (G, E) = Φ_E`: `x ∉ G(e)` for every parameter.
    PointDisjoint,
}

pub fn check_axiom(t: &SoftTopology, axiom: AxiomId) -> Verdict {
    match axiom {
        AxiomId::T0 => point_separation(t, PointSep::Either),
        AxiomId::T1 => point_separation(t, PointSep::Both),
        AxiomId::T2 => point_separation(t, PointSep::Disjoint),
        AxiomId::Regular => regular(t, NonMembershipForm::NotMember),
        AxiomId::T3 => regular(t, NonMembershipForm::NotMember).and(check_axiom(t, AxiomId::T1)),
        AxiomId::Normal => normal(t),
        AxiomId::T4 => normal(t).and(check_axiom(t, AxiomId::T1)),
    }
}

#[derive(Clone, Copy)]
enum PointSep {
    Either,
    Both,
    Disjoint,
}

fn point_hulls(t: &SoftTopology) -> Vec<u64> {
    let sig = t.signature();
    (0..sig.n_points())
        .map(|x| t.open_hull_cells(sig.point_cells(x)))
        .collect()
}

fn point_separation(t: &SoftTopology, mode: PointSep) -> Verdict {
    let sig = t.signature();
    let n = sig.n_points();
    if n < 2 {
        return Verdict::vacuous(Witness::Note(
            "one-point universe: no pair of distinct points".into(),
        ));
    }
    let hulls = point_hulls(t);
    // y lies in every neighbourhood of x iff it lies in the smallest one.
    let inside = |x: usize, y: usize| {
        let pc = sig.point_cells(y);
        hulls[x] & pc == pc
    };
    let mut separations = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if x == y {
                continue;
            }
            let ok = match mode {
                PointSep::Either => !(inside(x, y) && inside(y, x)),
                PointSep::Both => !inside(x, y),
                PointSep::Disjoint => hulls[x] & hulls[y] == 0,
            };
            if !ok {
                return Verdict::fails(Witness::PointPair {
                    first: x,
                    second: y,
                });
            }
            if matches!(mode, PointSep::Disjoint) && x < y {
                separations.push(Separation {
                    left: t.set(sig.point_cells(x)),
                    right: t.set(sig.point_cells(y)),
                    left_open: t.set(hulls[x]),
                    right_open: t.set(hulls[y]),
                });
            }
        }
    }
    Verdict::holds(if separations.is_empty() {
        Witness::None
    } else {
        Witness::Separations(separations)
    })
}

fn regular(t: &SoftTopology, form: NonMembershipForm) -> Verdict {
    let sig = t.signature();
    let hulls = point_hulls(t);
    let mut separations = Vec::new();
    for (x, &hx) in hulls.iter().enumerate() {
        let pc = sig.point_cells(x);
        for &g in t.closed_cells() {
            let qualifies = match form {
                NonMembershipForm::NotMember => g & pc != pc,
                NonMembershipForm::PointDisjoint => g & pc == 0,
            };
            if !qualifies {
                continue;
            }
            let hg = t.open_hull_cells(g);
            if hx & hg != 0 {
                return Verdict::fails(Witness::PointSet {
                    point: x,
                    set: t.set(g),
                });
            }
            separations.push(Separation {
                left: t.set(pc),
                right: t.set(g),
                left_open: t.set(hx),
                right_open: t.set(hg),
            });
        }
    }
    Verdict::holds(Witness::Separations(separations))
}

fn normal(t: &SoftTopology) -> Verdict {
    let closed = t.closed_cells();
    let mut separations = Vec::new();
    for (i, &f) in closed.iter().enumerate() {
        for &g in &closed[i + 1..] {
            if f & g != 0 {
                continue;
            }
            let (hf, hg) = (t.open_hull_cells(f), t.open_hull_cells(g));
            if hf & hg != 0 {
                return Verdict::fails(Witness::SetPair {
                    first: t.set(f),
                    second: t.set(g),
                });
            }
            separations.push(Separation {
                left: t.set(f),
                right: t.set(g),
                left_open: t.set(hf),
                right_open: t.set(hg),
            });
        }
    }
    Verdict::holds(Witness::Separations(separations))
}

/// Whether every soft point `(x, E)` is soft closed.
pub fn points_closed(t: &SoftTopology) -> Verdict {
    let sig = t.signature();
    match (0..sig.n_points()).find(|&x| !t.is_closed_cells(sig.point_cells(x))) {
        Some(x) => Verdict::fails(Witness::Point(x)),
        None => Verdict::holds(Witness::None),
    }
}

/// Point/closed-set separation where "x not in G" is read per `form`:
/// for every `x` and closed `G` satisfying it, opens `F1 ∋ x` and `F2 ⊇ G`
/// with `F1 ∩ F2 = Φ_E` must exist. With [`NonMembershipForm::NotMember`]
/// this is soft regularity.
pub fn wkm_condition(t: &SoftTopology, form: NonMembershipForm) -> Verdict {
    regular(t, form)
}
