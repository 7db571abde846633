//! Replayable checks of the algebraic laws and structural theorems, over a
//! given space or over every space in an exhaustive scope.
//!
//! Checks come in two kinds. Universal checks hold when no space in scope
//! violates them. Refuters look for a space (and evidence inside it) showing
//! that some tempting converse fails; they hold when such a witness exists.
//! In exhaustive scopes a missing witness is a bounded non-existence result.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covers::{
    basis_cover_check, fip_chain, fip_equivalence, greedy_subcover, nested_intersection,
    subfamilies, MAX_FAMILY,
};
use crate::error::{Error, Result};
use crate::search::{random_space, sweep, SearchBudget};
use crate::separation::{check_axiom, points_closed, wkm_condition, AxiomId, NonMembershipForm};
use crate::signature::Signature;
use crate::softset::{restrict_cells, SoftSet};
use crate::topology::SoftTopology;
use crate::verdict::{Verdict, Witness};

/// Soft sets beyond this many cells are sampled rather than enumerated.
const EXHAUSTIVE_SET_CELLS: usize = 12;
const SAMPLED_SETS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LawId {
    /// `Φ_E`, `~X` closed; closed sets closed under intersections and
    /// pairwise unions.
    ClosedSetLaws,
    SubsetIffMeet,
    SubsetOfBothIffSubsetOfMeet,
    UnionMonotone,
    MeetWithComplementIsNull,
    DisjointIffSubsetOfComplement,
    ComplementReversesInclusion,
    MeetWithOwnComplement,
    UnionWithNull,
    MeetDistributesOverUnions,
    NullComplement,
    AbsoluteComplement,
    DeMorgan,
    ComplementInvolution,
    DifferenceIdentity,
}

impl LawId {
    pub const ALL: [LawId; 15] = [
        LawId::ClosedSetLaws,
        LawId::SubsetIffMeet,
        LawId::SubsetOfBothIffSubsetOfMeet,
        LawId::UnionMonotone,
        LawId::MeetWithComplementIsNull,
        LawId::DisjointIffSubsetOfComplement,
        LawId::ComplementReversesInclusion,
        LawId::MeetWithOwnComplement,
        LawId::UnionWithNull,
        LawId::MeetDistributesOverUnions,
        LawId::NullComplement,
        LawId::AbsoluteComplement,
        LawId::DeMorgan,
        LawId::ComplementInvolution,
        LawId::DifferenceIdentity,
    ];

    pub fn id(self) -> &'static str {
        match self {
            LawId::ClosedSetLaws => "prop2.1",
            LawId::SubsetIffMeet => "prop3.2.i",
            LawId::SubsetOfBothIffSubsetOfMeet => "prop3.2.ii",
            LawId::UnionMonotone => "prop3.2.iii",
            LawId::MeetWithComplementIsNull => "prop3.2.iv",
            LawId::DisjointIffSubsetOfComplement => "prop3.2.v",
            LawId::ComplementReversesInclusion => "prop3.2.vi",
            LawId::MeetWithOwnComplement => "prop3.3.i",
            LawId::UnionWithNull => "prop3.3.ii",
            LawId::MeetDistributesOverUnions => "prop3.3.iii",
            LawId::NullComplement => "prop3.3.iv",
            LawId::AbsoluteComplement => "prop3.3.v",
            LawId::DeMorgan => "deMorgan",
            LawId::ComplementInvolution => "involution",
            LawId::DifferenceIdentity => "difference",
        }
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for LawId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        LawId::ALL
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown law `{s}`")))
    }
}

/// Evaluates `law` on `trials` pseudo-random soft-set tuples over `sig`.
pub fn verify_law(law: LawId, sig: &Arc<Signature>, trials: usize, seed: u64) -> Result<Verdict> {
    if trials == 0 {
        return Err(Error::Input("trials must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let full = sig.full_mask();
    for _ in 0..trials {
        if law == LawId::ClosedSetLaws {
            let k = rng.gen_range(0..=sig.cells().min(6));
            let t = random_space(sig, rng.gen(), k);
            if let Some(w) = closed_set_laws(&t) {
                return Ok(Verdict::fails(Witness::Space {
                    space: Box::new(t),
                    detail: Box::new(w),
                }));
            }
            continue;
        }
        let [a, b, c, d] = [0; 4].map(|_| SoftSet::from_cells(sig, rng.gen::<u64>() & full));
        let family: Vec<SoftSet> = (0..rng.gen_range(0..=4))
            .map(|_| SoftSet::from_cells(sig, rng.gen::<u64>() & full))
            .collect();
        if !law_holds(law, sig, [&a, &b, &c, &d], &family)? {
            let mut tuple = vec![a, b, c, d];
            tuple.extend(family);
            return Ok(Verdict::fails(Witness::Family(tuple)));
        }
    }
    Ok(Verdict::holds(Witness::Note(format!(
        "{trials} trials, no counterexample"
    ))))
}

fn law_holds(
    law: LawId,
    sig: &Arc<Signature>,
    [a, b, c, d]: [&SoftSet; 4],
    family: &[SoftSet],
) -> Result<bool> {
    let null = SoftSet::null(sig);
    let absolute = SoftSet::absolute(sig);
    Ok(match law {
        LawId::ClosedSetLaws => unreachable!("handled by the caller"),
        LawId::SubsetIffMeet => a.is_subset(b)? == (a.intersection(b)? == *a),
        LawId::SubsetOfBothIffSubsetOfMeet => {
            (a.is_subset(b)? && a.is_subset(c)?) == a.is_subset(&b.intersection(c)?)?
        }
        LawId::UnionMonotone => {
            !(a.is_subset(c)? && b.is_subset(d)?) || a.union(b)?.is_subset(&c.union(d)?)?
        }
        LawId::MeetWithComplementIsNull | LawId::MeetWithOwnComplement => {
            a.intersection(&a.complement())? == null
        }
        LawId::DisjointIffSubsetOfComplement => {
            (a.intersection(b)? == null) == a.is_subset(&b.complement())?
        }
        LawId::ComplementReversesInclusion => {
            a.is_subset(b)? == b.complement().is_subset(&a.complement())?
        }
        LawId::UnionWithNull => a.union(&null)? == *a,
        LawId::MeetDistributesOverUnions => {
            let mut union = null.clone();
            let mut pieces = null.clone();
            for f in family {
                union = union.union(f)?;
                pieces = pieces.union(&a.intersection(f)?)?;
            }
            a.intersection(&union)? == pieces
        }
        LawId::NullComplement => null.complement() == absolute,
        LawId::AbsoluteComplement => absolute.complement() == null,
        LawId::DeMorgan => {
            a.union(b)?.complement() == a.complement().intersection(&b.complement())?
                && a.intersection(b)?.complement() == a.complement().union(&b.complement())?
        }
        LawId::ComplementInvolution => a.complement().complement() == *a,
        LawId::DifferenceIdentity => a.difference(b)? == a.intersection(&b.complement())?,
    })
}

fn closed_set_laws(t: &SoftTopology) -> Option<Witness> {
    let full = t.signature().full_mask();
    for c in [0, full] {
        if !t.is_closed_cells(c) {
            return Some(Witness::Set(t.set(c)));
        }
    }
    let closed = t.closed_cells();
    for (i, &f) in closed.iter().enumerate() {
        for &g in &closed[i + 1..] {
            for r in [f & g, f | g] {
                if !t.is_closed_cells(r) {
                    return Some(Witness::SetPair {
                        first: t.set(f),
                        second: t.set(g),
                    });
                }
            }
        }
    }
    let meet = closed.iter().fold(full, |a, &c| a & c);
    (!t.is_closed_cells(meet)).then(|| Witness::Family(t.closed_sets()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TheoremId {
    SubspaceCoverCriterion,
    HausdorffConstantsClosed,
    ClosedSubsetCovers,
    BasisCoverCriterion,
    FipCriterion,
    NestedChainCriterion,
    ClosurePointsMeetNeighbourhoods,
    ClosureConverseRefuted,
    RegularShrinksNeighbourhoods,
    ShrinkingConverseRefuted,
    RegularityCriterion,
    NormalityCriterion,
    PointDisjointSeparationRefuted,
    NormalClosedPointsNotT3,
}

impl TheoremId {
    pub const ALL: [TheoremId; 14] = [
        TheoremId::SubspaceCoverCriterion,
        TheoremId::HausdorffConstantsClosed,
        TheoremId::ClosedSubsetCovers,
        TheoremId::BasisCoverCriterion,
        TheoremId::FipCriterion,
        TheoremId::NestedChainCriterion,
        TheoremId::ClosurePointsMeetNeighbourhoods,
        TheoremId::ClosureConverseRefuted,
        TheoremId::RegularShrinksNeighbourhoods,
        TheoremId::ShrinkingConverseRefuted,
        TheoremId::RegularityCriterion,
        TheoremId::NormalityCriterion,
        TheoremId::PointDisjointSeparationRefuted,
        TheoremId::NormalClosedPointsNotT3,
    ];

    pub fn id(self) -> &'static str {
        match self {
            TheoremId::SubspaceCoverCriterion => "thm3.4",
            TheoremId::HausdorffConstantsClosed => "thm3.5",
            TheoremId::ClosedSubsetCovers => "thm3.6",
            TheoremId::BasisCoverCriterion => "thm3.7",
            TheoremId::FipCriterion => "thm3.8",
            TheoremId::NestedChainCriterion => "cor3.9",
            TheoremId::ClosurePointsMeetNeighbourhoods => "lemma4.1",
            TheoremId::ClosureConverseRefuted => "lemma4.1-converse",
            TheoremId::RegularShrinksNeighbourhoods => "prop4.3",
            TheoremId::ShrinkingConverseRefuted => "prop4.3-converse",
            TheoremId::RegularityCriterion => "thm4.5",
            TheoremId::NormalityCriterion => "thm4.6",
            TheoremId::PointDisjointSeparationRefuted => "rem4.7",
            TheoremId::NormalClosedPointsNotT3 => "rem4.8",
        }
    }

    /// Refuters hold when a witness space exists.
    pub fn is_refuter(self) -> bool {
        matches!(
            self,
            TheoremId::ClosureConverseRefuted
                | TheoremId::ShrinkingConverseRefuted
                | TheoremId::PointDisjointSeparationRefuted
                | TheoremId::NormalClosedPointsNotT3
        )
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Input(format!("unknown theorem id `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub enum Scope {
    Space(SoftTopology),
    /// Every topology with `|X| ≤ max_points`, `|E| ≤ max_params`, up to
    /// isomorphism.
    Enumerate {
        max_points: usize,
        max_params: usize,
    },
}

pub fn verify_theorem(thm: TheoremId, scope: &Scope) -> Result<Verdict> {
    let (spaces, label) = match scope {
        Scope::Space(t) => (vec![t.clone()], "the given space".to_string()),
        Scope::Enumerate {
            max_points,
            max_params,
        } => (
            sweep(&SearchBudget::exhaustive(*max_points, *max_params))?,
            format!("all spaces with |X| ≤ {max_points}, |E| ≤ {max_params} (exhaustive)"),
        ),
    };
    let count = spaces.len();
    for t in spaces {
        let outcome = check_space(thm, &t)?;
        match (thm.is_refuter(), outcome) {
            (false, Some(w)) => {
                return Ok(Verdict::fails(Witness::Space {
                    space: Box::new(t),
                    detail: Box::new(w),
                }))
            }
            (true, Some(w)) => {
                return Ok(Verdict::holds(Witness::Space {
                    space: Box::new(t),
                    detail: Box::new(w),
                }))
            }
            _ => {}
        }
    }
    Ok(if thm.is_refuter() {
        Verdict::fails(Witness::Note(format!(
            "no witness among {count} spaces in {label}"
        )))
    } else {
        Verdict::holds(Witness::Note(format!("{count} spaces checked: {label}")))
    })
}

/// For universal checks: `Some(violation)`. For refuters: `Some(witness)`.
fn check_space(thm: TheoremId, t: &SoftTopology) -> Result<Option<Witness>> {
    Ok(match thm {
        TheoremId::SubspaceCoverCriterion => subspace_cover_correspondence(t),
        TheoremId::HausdorffConstantsClosed => hausdorff_constants_closed(t),
        TheoremId::ClosedSubsetCovers => closed_subset_covers(t),
        TheoremId::BasisCoverCriterion => {
            let minimal = basis_cover_check(t, &t.minimal_basis())?;
            let whole = if t.len() <= MAX_FAMILY {
                basis_cover_check(t, &t.members())?
            } else {
                Verdict::holds(Witness::None)
            };
            let v = minimal.and(whole);
            (!v.holds).then_some(v.witness)
        }
        TheoremId::FipCriterion => {
            let v = fip_equivalence(t)?;
            (!v.holds).then_some(v.witness)
        }
        TheoremId::NestedChainCriterion => nested_chains(t)?,
        TheoremId::ClosurePointsMeetNeighbourhoods => closure_meets_neighbourhoods(t),
        TheoremId::ClosureConverseRefuted => closure_converse_witness(t),
        TheoremId::RegularShrinksNeighbourhoods => {
            if check_axiom(t, AxiomId::Regular).holds {
                shrink_failure(t)
            } else {
                None
            }
        }
        TheoremId::ShrinkingConverseRefuted => {
            let regular = check_axiom(t, AxiomId::Regular);
            (!regular.holds && shrink_failure(t).is_none()).then(|| {
                Witness::Note(format!(
                    "not soft regular (failing pair {}), yet every open neighbourhood F of \
                     every point x contains the closure of some open neighbourhood of x",
                    describe(t, &regular.witness)
                ))
            })
        }
        TheoremId::RegularityCriterion => regularity_criterion(t),
        TheoremId::NormalityCriterion => normality_criterion(t),
        TheoremId::PointDisjointSeparationRefuted => {
            let pd = wkm_condition(t, NonMembershipForm::PointDisjoint);
            let reg = check_axiom(t, AxiomId::Regular);
            (pd.holds && !reg.holds).then_some(reg.witness)
        }
        TheoremId::NormalClosedPointsNotT3 => {
            let t3 = check_axiom(t, AxiomId::T3);
            (check_axiom(t, AxiomId::Normal).holds && points_closed(t).holds && !t3.holds)
                .then_some(t3.witness)
        }
    })
}

fn describe(t: &SoftTopology, w: &Witness) -> String {
    match w {
        Witness::PointSet { point, set } => {
            format!("({}, {set})", t.signature().points()[*point])
        }
        other => format!("{other:?}"),
    }
}

fn nonempty_subsets(n: usize) -> impl Iterator<Item = u64> {
    1..(1u64 << n)
}

/// Soft sets to quantify over: all of them on small signatures, otherwise
/// the opens, the closed sets and a fixed sample.
fn soft_sets(t: &SoftTopology) -> Vec<u64> {
    let sig = t.signature();
    if sig.cells() <= EXHAUSTIVE_SET_CELLS {
        return (0..1u64 << sig.cells()).collect();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x50f7_5e75);
    let mut out: Vec<u64> = t.open_cells().to_vec();
    out.extend_from_slice(t.closed_cells());
    out.extend((0..SAMPLED_SETS).map(|_| rng.gen::<u64>() & sig.full_mask()));
    out.sort_unstable();
    out.dedup();
    out
}

fn pick(cells: &[u64], family: u64) -> Vec<u64> {
    cells
        .iter()
        .enumerate()
        .filter(|(i, _)| family >> i & 1 == 1)
        .map(|(_, &c)| c)
        .collect()
}

fn union(cells: &[u64]) -> u64 {
    cells.iter().fold(0, |a, &c| a | c)
}

fn family_witness(t: &SoftTopology, cells: &[u64]) -> Witness {
    Witness::Family(cells.iter().map(|&c| t.set(c)).collect())
}

/// Every open cover of `~Y` and its restriction to `Y` have corresponding
/// subcovers, index for index.
fn subspace_cover_correspondence(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    let open = t.open_cells();
    for y in nonempty_subsets(sig.n_points()) {
        let target = sig.constant_cells(y);
        let sub = sig.sub_signature(y).expect("nonempty subset");
        let sub_full = sub.full_mask();
        for family in subfamilies(open.len()) {
            let cover = pick(open, family);
            if target & !union(&cover) != 0 {
                continue;
            }
            let restricted: Vec<u64> = cover.iter().map(|&c| restrict_cells(sig, c, y)).collect();
            if sub_full & !union(&restricted) != 0 {
                return Some(family_witness(t, &cover));
            }
            // Subspace side → pull back.
            let ok_back = greedy_subcover(sub_full, &restricted).is_some_and(|idx| {
                let pulled: Vec<u64> = idx.iter().map(|&i| cover[i]).collect();
                target & !union(&pulled) == 0
            });
            // Whole-space side → push forward.
            let ok_forward = greedy_subcover(target, &cover).is_some_and(|idx| {
                let pushed: Vec<u64> = idx.iter().map(|&i| restricted[i]).collect();
                sub_full & !union(&pushed) == 0
            });
            if !(ok_back && ok_forward) {
                return Some(family_witness(t, &cover));
            }
        }
    }
    None
}

/// In a soft Hausdorff space every `~Y` is soft closed (finite subspaces
/// are soft compact).
fn hausdorff_constants_closed(t: &SoftTopology) -> Option<Witness> {
    if !check_axiom(t, AxiomId::T2).holds {
        return None;
    }
    let sig = t.signature();
    let all = sig.point_mask();
    nonempty_subsets(sig.n_points())
        .filter(|&y| y != all)
        .map(|y| sig.constant_cells(y))
        .find(|&c| !t.is_closed_cells(c))
        .map(|c| Witness::Set(t.set(c)))
}

/// For closed `~Y` and an open cover of it, adjoining `(~Y)'` covers `~X`,
/// and a subcover of that, minus the complement, restricts to a cover of
/// `~Y` in the subspace.
fn closed_subset_covers(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    let full = sig.full_mask();
    let open = t.open_cells();
    for y in nonempty_subsets(sig.n_points()) {
        let a = sig.constant_cells(y);
        if !t.is_closed_cells(a) {
            continue;
        }
        let sub_full = sig.sub_signature(y).expect("nonempty subset").full_mask();
        for family in subfamilies(open.len()) {
            let mut cover = pick(open, family);
            if a & !union(&cover) != 0 {
                continue;
            }
            cover.push(!a & full);
            if union(&cover) != full {
                return Some(family_witness(t, &cover));
            }
            let complement_at = cover.len() - 1;
            let ok = greedy_subcover(full, &cover).is_some_and(|idx| {
                let kept: Vec<u64> = idx
                    .iter()
                    .filter(|&&i| i != complement_at)
                    .map(|&i| restrict_cells(sig, cover[i], y))
                    .collect();
                sub_full & !union(&kept) == 0
            });
            if !ok {
                return Some(family_witness(t, &cover));
            }
        }
    }
    None
}

/// Every FIP family of closed sets turns into a descending chain of
/// non-null closed sets with the same, non-null, intersection.
fn nested_chains(t: &SoftTopology) -> Result<Option<Witness>> {
    let closed = t.closed_cells();
    if closed.len() > MAX_FAMILY {
        return Err(Error::Precondition(format!(
            "{} closed sets exceed the family limit {MAX_FAMILY}",
            closed.len()
        )));
    }
    let full = t.signature().full_mask();
    for family in 1..(1u64 << closed.len()) {
        let members = pick(closed, family);
        let meet = members.iter().fold(full, |a, &c| a & c);
        if meet == 0 {
            continue;
        }
        let sets: Vec<SoftSet> = members.iter().map(|&c| t.set(c)).collect();
        let chain = fip_chain(&sets)?;
        let ok = match nested_intersection(t, &chain) {
            Ok(v) => v.holds && v.witness == Witness::Set(t.set(meet)),
            Err(_) => false,
        };
        if !ok {
            return Ok(Some(Witness::Family(sets)));
        }
    }
    Ok(None)
}

fn opens_containing(t: &SoftTopology, point_cells: u64) -> impl Iterator<Item = u64> + '_ {
    t.open_cells()
        .iter()
        .copied()
        .filter(move |&g| g & point_cells == point_cells)
}

fn contains_point(cells: u64, point_cells: u64) -> bool {
    cells & point_cells == point_cells
}

/// `x ∈ cl(F)` forces every open neighbourhood of `x` to meet `F`.
fn closure_meets_neighbourhoods(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    for f in soft_sets(t) {
        let cl = t.closure_cells(f);
        for x in 0..sig.n_points() {
            let pc = sig.point_cells(x);
            if contains_point(cl, pc) && opens_containing(t, pc).any(|g| g & f == 0) {
                return Some(Witness::PointSet {
                    point: x,
                    set: t.set(f),
                });
            }
        }
    }
    None
}

/// `(F, x)` where every open neighbourhood of `x` meets `F` yet
/// `x ∉ cl(F)`.
fn closure_converse_witness(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    for f in soft_sets(t) {
        let cl = t.closure_cells(f);
        for x in 0..sig.n_points() {
            let pc = sig.point_cells(x);
            if opens_containing(t, pc).all(|g| g & f != 0) && !contains_point(cl, pc) {
                return Some(Witness::PointSet {
                    point: x,
                    set: t.set(f),
                });
            }
        }
    }
    None
}

/// First `(x, F)` with `F` an open neighbourhood of `x` admitting no open
/// neighbourhood `G` of `x` with `cl(G) ⊆ F`.
fn shrink_failure(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    for x in 0..sig.n_points() {
        let pc = sig.point_cells(x);
        for f in opens_containing(t, pc) {
            if !opens_containing(t, pc).any(|g| t.closure_cells(g) & !f == 0) {
                return Some(Witness::PointSet {
                    point: x,
                    set: t.set(f),
                });
            }
        }
    }
    None
}

/// Regularity agrees with: for every `x` and closed `F` with `x ∉ F`, some
/// open neighbourhood of `x` has closure disjoint from `F`.
fn regularity_criterion(t: &SoftTopology) -> Option<Witness> {
    let sig = t.signature();
    let mut criterion = true;
    'outer: for x in 0..sig.n_points() {
        let pc = sig.point_cells(x);
        for &f in t.closed_cells() {
            if contains_point(f, pc) {
                continue;
            }
            if !opens_containing(t, pc).any(|g| t.closure_cells(g) & f == 0) {
                criterion = false;
                break 'outer;
            }
        }
    }
    let regular = check_axiom(t, AxiomId::Regular);
    (regular.holds != criterion).then(|| {
        Witness::Note(format!(
            "regular = {}, closure criterion = {criterion}",
            regular.holds
        ))
    })
}

/// Spaces where every closed set sits with closure room inside each open
/// superset are soft normal.
fn normality_criterion(t: &SoftTopology) -> Option<Witness> {
    let hypothesis = t.closed_cells().iter().all(|&f| {
        t.open_cells().iter().filter(|&&g| f & !g == 0).all(|&g| {
            t.open_cells()
                .iter()
                .any(|&h| f & !h == 0 && t.closure_cells(h) & !g == 0)
        })
    });
    let normal = check_axiom(t, AxiomId::Normal);
    (hypothesis && !normal.holds).then_some(normal.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{space_a, space_b};

    #[test]
    fn law_examples() {
        let (a, _) = space_a();
        let (b, _) = space_b();
        let v = verify_law(LawId::DisjointIffSubsetOfComplement, a.signature(), 1000, 1).unwrap();
        assert!(v.holds);
        assert!(
            verify_law(LawId::NullComplement, b.signature(), 1, 2)
                .unwrap()
                .holds
        );
        assert!(
            verify_law(LawId::DeMorgan, b.signature(), 1000, 3)
                .unwrap()
                .holds
        );
        assert!(
            verify_law(LawId::ClosedSetLaws, b.signature(), 50, 4)
                .unwrap()
                .holds
        );
        assert!(verify_law(LawId::DeMorgan, b.signature(), 0, 3).is_err());
    }

    #[test]
    fn ids_round_trip() {
        for l in LawId::ALL {
            assert_eq!(l.id().parse::<LawId>().unwrap(), l);
        }
        for t in TheoremId::ALL {
            assert_eq!(t.id().parse::<TheoremId>().unwrap(), t);
        }
        assert!("thm9.9".parse::<TheoremId>().is_err());
    }

    #[test]
    fn closure_converse_on_space_a() {
        let (a, [f1, _]) = space_a();
        let v =
            verify_theorem(TheoremId::ClosureConverseRefuted, &Scope::Space(a.clone())).unwrap();
        assert!(v.holds);
        match v.witness {
            Witness::Space { detail, .. } => {
                assert_eq!(*detail, Witness::PointSet { point: 0, set: f1 })
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }

    #[test]
    fn refuters_on_space_a() {
        let (a, _) = space_a();
        let scope = Scope::Space(a);
        for thm in [
            TheoremId::NormalClosedPointsNotT3,
            TheoremId::PointDisjointSeparationRefuted,
            TheoremId::ShrinkingConverseRefuted,
        ] {
            assert!(verify_theorem(thm, &scope).unwrap().holds, "{thm}");
        }
    }

    #[test]
    fn refuters_report_bounded_absence() {
        let (b, _) = space_b();
        let v =
            verify_theorem(TheoremId::PointDisjointSeparationRefuted, &Scope::Space(b)).unwrap();
        // Space B: the only point-disjoint closed set is Φ, so the condition
        // holds, but B is not regular either.
        assert!(v.holds);
        let ind = SoftTopology::indiscrete(space_a().0.signature());
        let v = verify_theorem(TheoremId::NormalClosedPointsNotT3, &Scope::Space(ind)).unwrap();
        assert!(!v.holds);
        assert!(matches!(v.witness, Witness::Note(ref n) if n.contains("no witness")));
    }

    #[test]
    fn regularity_criterion_small_sweep() {
        let v = verify_theorem(
            TheoremId::RegularityCriterion,
            &Scope::Enumerate {
                max_points: 2,
                max_params: 2,
            },
        )
        .unwrap();
        assert!(v.holds, "{v:?}");
    }
}
