//! Soft topologies over a fixed signature.
//!
//! A [`SoftTopology`] keeps its open sets as a sorted, deduplicated list of
//! packed cell masks, together with the matching list of closed sets. All
//! queries work on the masks directly and hand out [`SoftSet`] values at the
//! API boundary.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::signature::Signature;
use crate::softset::{restrict_cells, same_signature, SoftSet};
use crate::verdict::{TopologyAxiom, Verdict, Witness};

#[derive(Clone)]
pub struct SoftTopology {
    sig: Arc<Signature>,
    open: Vec<u64>,
    closed: Vec<u64>,
}

/// Open/closed classification of a soft set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Open,
    Closed,
    Clopen,
    Neither,
}

impl Status {
    pub fn is_open(self) -> bool {
        matches!(self, Status::Open | Status::Clopen)
    }

    pub fn is_closed(self) -> bool {
        matches!(self, Status::Closed | Status::Clopen)
    }
}

/// Result of comparing two topologies `t1`, `t2` by member inclusion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Equal,
    /// `t2 ⊋ t1`: the second topology is finer.
    Finer,
    /// `t2 ⊊ t1`: the second topology is coarser.
    Coarser,
    Incomparable,
}

fn check_family(sig: &Arc<Signature>, family: &[SoftSet]) -> Result<()> {
    if family.iter().all(|s| same_signature(s.signature(), sig)) {
        Ok(())
    } else {
        Err(Error::SignatureMismatch)
    }
}

/// Checks the three soft-topology axioms on a finite family.
///
/// Arbitrary unions of a finite family reduce to iterated pairwise unions, so
/// only pairs are inspected. The witness names the first violation in
/// canonical order.
pub fn validate(sig: &Arc<Signature>, family: &[SoftSet]) -> Result<Verdict> {
    check_family(sig, family)?;
    let members: BTreeSet<u64> = family.iter().map(SoftSet::cells).collect();
    let set = |c| SoftSet::from_cells(sig, c);
    if !members.contains(&0) {
        return Ok(Verdict::fails(Witness::Missing {
            axiom: TopologyAxiom::ContainsNull,
            set: set(0),
        }));
    }
    if !members.contains(&sig.full_mask()) {
        return Ok(Verdict::fails(Witness::Missing {
            axiom: TopologyAxiom::ContainsAbsolute,
            set: set(sig.full_mask()),
        }));
    }
    let list: Vec<u64> = members.iter().copied().collect();
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            for (axiom, result) in [
                (TopologyAxiom::UnionClosed, a | b),
                (TopologyAxiom::IntersectionClosed, a & b),
            ] {
                if !members.contains(&result) {
                    return Ok(Verdict::fails(Witness::NotClosed {
                        axiom,
                        left: set(a),
                        right: set(b),
                        result: set(result),
                    }));
                }
            }
        }
    }
    Ok(Verdict::holds(Witness::None))
}

/// Smallest soft topology containing `seeds`, by fixpoint iteration of
/// pairwise unions and intersections.
pub fn generate(sig: &Arc<Signature>, seeds: &[SoftSet]) -> Result<SoftTopology> {
    check_family(sig, seeds)?;
    let mut members: BTreeSet<u64> = [0, sig.full_mask()].into();
    let mut pending: Vec<u64> = Vec::new();
    for s in seeds {
        if members.insert(s.cells()) {
            pending.push(s.cells());
        }
    }
    while let Some(new) = pending.pop() {
        let current: Vec<u64> = members.iter().copied().collect();
        for m in current {
            for c in [new | m, new & m] {
                if members.insert(c) {
                    pending.push(c);
                }
            }
        }
    }
    Ok(SoftTopology::from_sorted(
        sig,
        members.into_iter().collect(),
    ))
}

impl SoftTopology {
    /// Validates `family` and wraps it. `Φ_E` and `~X` are not adjoined.
    pub fn new(sig: &Arc<Signature>, family: &[SoftSet]) -> Result<Self> {
        let verdict = validate(sig, family)?;
        if !verdict.holds {
            return Err(Error::Precondition(format!(
                "family is not a soft topology: {:?}",
                verdict.witness
            )));
        }
        Ok(Self::from_cells(sig, family.iter().map(SoftSet::cells)))
    }

    /// `{Φ_E, ~X}`.
    pub fn indiscrete(sig: &Arc<Signature>) -> Self {
        Self::from_sorted(sig, vec![0, sig.full_mask()])
    }

    /// Wraps masks already known to form a topology.
    pub(crate) fn from_cells(sig: &Arc<Signature>, cells: impl IntoIterator<Item = u64>) -> Self {
        let set: BTreeSet<u64> = cells.into_iter().collect();
        Self::from_sorted(sig, set.into_iter().collect())
    }

    fn from_sorted(sig: &Arc<Signature>, open: Vec<u64>) -> Self {
        let full = sig.full_mask();
        let mut closed: Vec<u64> = open.iter().map(|&c| !c & full).collect();
        closed.sort_unstable();
        Self {
            sig: Arc::clone(sig),
            open,
            closed,
        }
    }

    /// Topology generated by this one and one more soft set.
    ///
    /// Every member of the result has the form `t1 ∪ (s ∩ t2)` with `t1, t2`
    /// open, which needs a single pass instead of a fixpoint.
    pub fn adjoin(&self, cells: u64) -> Self {
        let s = cells & self.sig.full_mask();
        let mut out: BTreeSet<u64> = BTreeSet::new();
        for &t1 in &self.open {
            for &t2 in &self.open {
                out.insert(t1 | (s & t2));
            }
        }
        Self::from_sorted(&self.sig, out.into_iter().collect())
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn len(&self) -> usize {
        self.open.len()
    }

    pub fn is_empty(&self) -> bool {
        self.open.is_empty()
    }

    pub fn open_cells(&self) -> &[u64] {
        &self.open
    }

    pub fn closed_cells(&self) -> &[u64] {
        &self.closed
    }

    pub fn members(&self) -> Vec<SoftSet> {
        self.open.iter().map(|&c| self.set(c)).collect()
    }

    pub fn closed_sets(&self) -> Vec<SoftSet> {
        self.closed.iter().map(|&c| self.set(c)).collect()
    }

    pub(crate) fn set(&self, cells: u64) -> SoftSet {
        SoftSet::from_cells(&self.sig, cells)
    }

    fn check(&self, a: &SoftSet) -> Result<()> {
        if same_signature(a.signature(), &self.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    pub fn is_open_cells(&self, cells: u64) -> bool {
        self.open.binary_search(&cells).is_ok()
    }

    pub fn is_closed_cells(&self, cells: u64) -> bool {
        self.closed.binary_search(&cells).is_ok()
    }

    pub fn status(&self, a: &SoftSet) -> Result<Status> {
        self.check(a)?;
        Ok(self.status_cells(a.cells()))
    }

    pub fn status_cells(&self, cells: u64) -> Status {
        match (self.is_open_cells(cells), self.is_closed_cells(cells)) {
            (true, true) => Status::Clopen,
            (true, false) => Status::Open,
            (false, true) => Status::Closed,
            (false, false) => Status::Neither,
        }
    }

    /// Intersection of all soft closed supersets.
    pub fn closure(&self, a: &SoftSet) -> Result<SoftSet> {
        self.check(a)?;
        Ok(self.set(self.closure_cells(a.cells())))
    }

    pub fn closure_cells(&self, cells: u64) -> u64 {
        self.closed
            .iter()
            .filter(|&&c| cells & !c == 0)
            .fold(self.sig.full_mask(), |acc, &c| acc & c)
    }

    /// Union of all soft open subsets.
    pub fn interior(&self, a: &SoftSet) -> Result<SoftSet> {
        self.check(a)?;
        Ok(self.set(self.interior_cells(a.cells())))
    }

    pub fn interior_cells(&self, cells: u64) -> u64 {
        self.open
            .iter()
            .filter(|&&o| o & !cells == 0)
            .fold(0, |acc, &o| acc | o)
    }

    /// Smallest open superset (opens are closed under finite intersection).
    pub fn open_hull_cells(&self, cells: u64) -> u64 {
        self.open
            .iter()
            .filter(|&&o| cells & !o == 0)
            .fold(self.sig.full_mask(), |acc, &o| acc & o)
    }

    /// Relative topology on the points `subset`.
    pub fn subspace<S: AsRef<str>>(&self, subset: &[S]) -> Result<SoftTopology> {
        let mask = self.sig.subset_mask(subset)?;
        self.subspace_mask(mask)
    }

    pub fn subspace_mask(&self, subset: u64) -> Result<SoftTopology> {
        let sub = Arc::new(self.sig.sub_signature(subset)?);
        let cells = self
            .open
            .iter()
            .map(|&c| restrict_cells(&self.sig, c, subset));
        Ok(Self::from_cells(&sub, cells))
    }

    /// Whether every open set is a union of a subfamily of `basis`; the empty
    /// union is `Φ_E`.
    pub fn is_basis(&self, basis: &[SoftSet]) -> Result<Verdict> {
        check_family(&self.sig, basis)?;
        if let Some(b) = basis.iter().find(|b| !self.is_open_cells(b.cells())) {
            return Err(Error::Precondition(format!(
                "basis element {b} is not open"
            )));
        }
        let cells: Vec<u64> = basis.iter().map(SoftSet::cells).collect();
        for &m in &self.open {
            let reachable = cells
                .iter()
                .filter(|&&b| b & !m == 0)
                .fold(0, |acc, &b| acc | b);
            if reachable != m {
                return Ok(Verdict::fails(Witness::Set(self.set(m))));
            }
        }
        Ok(Verdict::holds(Witness::None))
    }

    /// The unique smallest basis: non-null members that are not the union of
    /// the members strictly below them.
    pub fn minimal_basis(&self) -> Vec<SoftSet> {
        self.open
            .iter()
            .filter(|&&m| {
                let below = self
                    .open
                    .iter()
                    .filter(|&&o| o != m && o & !m == 0)
                    .fold(0, |acc, &o| acc | o);
                m != 0 && below != m
            })
            .map(|&m| self.set(m))
            .collect()
    }

    pub fn compare(&self, other: &SoftTopology) -> Result<Comparison> {
        if !same_signature(&self.sig, &other.sig) {
            return Err(Error::SignatureMismatch);
        }
        let first_in_second = self.open.iter().all(|&c| other.is_open_cells(c));
        let second_in_first = other.open.iter().all(|&c| self.is_open_cells(c));
        Ok(match (first_in_second, second_in_first) {
            (true, true) => Comparison::Equal,
            (true, false) => Comparison::Finer,
            (false, true) => Comparison::Coarser,
            (false, false) => Comparison::Incomparable,
        })
    }
}

impl PartialEq for SoftTopology {
    fn eq(&self, other: &Self) -> bool {
        self.open == other.open && same_signature(&self.sig, &other.sig)
    }
}

impl Eq for SoftTopology {}

impl fmt::Debug for SoftTopology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.members()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(points: &[&str], params: &[&str]) -> Arc<Signature> {
        Arc::new(Signature::new(points.iter().copied(), params.iter().copied()).unwrap())
    }

    const H: &[&str] = &["h"];
    const O: &[&str] = &[];

    fn space_a() -> (Arc<Signature>, SoftSet, SoftSet, SoftTopology) {
        let s = sig(&["h"], &["e1", "e2"]);
        let f1 = SoftSet::from_sections(&s, &[H, O]).unwrap();
        let f2 = SoftSet::from_sections(&s, &[O, H]).unwrap();
        let t = SoftTopology::new(
            &s,
            &[
                SoftSet::null(&s),
                SoftSet::absolute(&s),
                f1.clone(),
                f2.clone(),
            ],
        )
        .unwrap();
        (s, f1, f2, t)
    }

    fn space_b() -> (Arc<Signature>, [SoftSet; 3], SoftTopology) {
        let s = sig(&["h"], &["e1", "e2", "e3", "e4", "e5"]);
        let f1 = SoftSet::from_sections(&s, &[O, H, O, H, O]).unwrap();
        let f2 = SoftSet::from_sections(&s, &[H, H, H, O, H]).unwrap();
        let f3 = SoftSet::from_sections(&s, &[O, H, O, O, O]).unwrap();
        let t = SoftTopology::new(
            &s,
            &[
                SoftSet::null(&s),
                SoftSet::absolute(&s),
                f1.clone(),
                f2.clone(),
                f3.clone(),
            ],
        )
        .unwrap();
        (s, [f1, f2, f3], t)
    }

    #[test]
    fn validate_reports_first_violation() {
        let (_, _, _, a) = space_a();
        assert!(validate(a.signature(), &a.members()).unwrap().holds);

        let (s, [f1, f2, f3], _) = space_b();
        let v = validate(
            &s,
            &[
                SoftSet::null(&s),
                SoftSet::absolute(&s),
                f1.clone(),
                f2.clone(),
            ],
        )
        .unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.witness,
            Witness::NotClosed {
                axiom: TopologyAxiom::IntersectionClosed,
                left: f1,
                right: f2,
                result: f3,
            }
        );

        let v = validate(&s, &[SoftSet::absolute(&s)]).unwrap();
        assert!(matches!(
            v.witness,
            Witness::Missing {
                axiom: TopologyAxiom::ContainsNull,
                ..
            }
        ));
    }

    #[test]
    fn validate_rejects_mixed_signatures() {
        let (_, f1, _, _) = space_a();
        let (s, _, _) = space_b();
        assert_eq!(validate(&s, &[f1]), Err(Error::SignatureMismatch));
    }

    #[test]
    fn generate_examples() {
        let (s, f1, f2, a) = space_a();
        assert_eq!(generate(&s, &[f1, f2]).unwrap(), a);
        let (s, [f1, f2, _], b) = space_b();
        let g = generate(&s, &[f1, f2]).unwrap();
        assert_eq!(g, b);
        assert_eq!(g.len(), 5);
        assert_eq!(generate(&s, &[]).unwrap(), SoftTopology::indiscrete(&s));
    }

    #[test]
    fn adjoin_matches_generate() {
        let (s, [f1, f2, f3], _) = space_b();
        let t = SoftTopology::indiscrete(&s)
            .adjoin(f1.cells())
            .adjoin(f3.cells());
        assert_eq!(t, generate(&s, &[f1.clone(), f3]).unwrap());
        assert_eq!(
            t.adjoin(f2.cells()),
            generate(&s, &t.members().into_iter().chain([f2]).collect::<Vec<_>>()).unwrap()
        );
    }

    #[test]
    fn status_examples() {
        let (s, f1, _, a) = space_a();
        assert_eq!(a.status(&f1).unwrap(), Status::Clopen);
        assert_eq!(a.status(&SoftSet::null(&s)).unwrap(), Status::Clopen);
        let (_, [_, _, f3], b) = space_b();
        assert_eq!(b.status(&f3).unwrap(), Status::Open);
        assert_eq!(f3.complement().to_string(), "⟨h|∅|h|h|h⟩");
    }

    #[test]
    fn closure_and_interior_examples() {
        let (s, f1, f2, a) = space_a();
        assert_eq!(a.closure(&f1).unwrap(), f1);
        assert_eq!(a.closure(&SoftSet::null(&s)).unwrap(), SoftSet::null(&s));
        assert_eq!(a.interior(&f2).unwrap(), f2);
        assert_eq!(
            a.interior(&SoftSet::absolute(&s)).unwrap(),
            SoftSet::absolute(&s)
        );

        let (s, [_, _, f3], b) = space_b();
        assert_eq!(b.closure(&f3).unwrap(), SoftSet::absolute(&s));
        let g = SoftSet::from_sections(&s, &[H, O, H, O, H]).unwrap();
        assert_eq!(b.interior(&g).unwrap(), SoftSet::null(&s));
    }

    #[test]
    fn subspace_examples() {
        let (_, _, _, a) = space_a();
        assert_eq!(a.subspace(&["h"]).unwrap(), a);

        let s = sig(&["a", "b"], &["e1", "e2"]);
        let t = generate(&s, &[SoftSet::constant(&s, &["a"]).unwrap()]).unwrap();
        let y = t.subspace(&["b"]).unwrap();
        assert_eq!(y, SoftTopology::indiscrete(y.signature()));
        assert!(validate(y.signature(), &y.members()).unwrap().holds);
        let none: [&str; 0] = [];
        assert_eq!(t.subspace(&none), Err(Error::EmptySubset));
    }

    #[test]
    fn basis_examples() {
        let (_, _, _, a) = space_a();
        assert!(a.is_basis(&a.members()).unwrap().holds);
        let (_, [f1, f2, f3], b) = space_b();
        let v = b.is_basis(&[f1.clone(), f2.clone()]).unwrap();
        assert_eq!(v.witness, Witness::Set(f3.clone()));
        assert!(
            b.is_basis(&[f1.clone(), f2.clone(), f3.clone()])
                .unwrap()
                .holds
        );
        assert_eq!(b.minimal_basis(), vec![f3.clone(), f1.clone(), f2.clone()]);
        let bad = f3.complement();
        assert!(matches!(b.is_basis(&[bad]), Err(Error::Precondition(_))));
    }

    #[test]
    fn compare_examples() {
        let (s, f1, f2, a) = space_a();
        let ind = SoftTopology::indiscrete(&s);
        assert_eq!(ind.compare(&a).unwrap(), Comparison::Finer);
        assert_eq!(a.compare(&ind).unwrap(), Comparison::Coarser);
        assert_eq!(a.compare(&a).unwrap(), Comparison::Equal);
        let t1 = generate(&s, &[f1]).unwrap();
        let t2 = generate(&s, &[f2]).unwrap();
        assert_eq!(t1.compare(&t2).unwrap(), Comparison::Incomparable);
    }
}
