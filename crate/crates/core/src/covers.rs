//! Covers, subcover extraction, compactness and the finite intersection
//! property.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::softset::{same_signature, SoftSet};
use crate::topology::SoftTopology;
use crate::verdict::{Verdict, Witness};

/// Upper bound on family sizes for the exponential subfamily sweeps.
pub const MAX_FAMILY: usize = 20;

/// Open-cover enumeration switches from exhaustive to sampled above this many
/// candidate members.
const EXHAUSTIVE_COVER_MEMBERS: usize = 16;
const SAMPLED_COVERS: usize = 4096;

/// An indexed family `{(F_α, E)}` covering `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    target: SoftSet,
    members: Vec<SoftSet>,
}

impl Cover {
    pub fn new(target: SoftSet, members: Vec<SoftSet>) -> Result<Self> {
        if !is_cover(&members, &target)? {
            return Err(Error::Precondition(format!(
                "family does not cover {target}"
            )));
        }
        Ok(Self { target, members })
    }

    pub fn target(&self) -> &SoftSet {
        &self.target
    }

    pub fn members(&self) -> &[SoftSet] {
        &self.members
    }

    /// Whether every member is open in `t`.
    pub fn is_open_in(&self, t: &SoftTopology) -> bool {
        same_signature(t.signature(), self.target.signature())
            && self.members.iter().all(|m| t.is_open_cells(m.cells()))
    }

    fn member_cells(&self) -> Vec<u64> {
        self.members.iter().map(SoftSet::cells).collect()
    }
}

/// `target ⊆ ⋃ members`, sectionwise.
pub fn is_cover(members: &[SoftSet], target: &SoftSet) -> Result<bool> {
    if members
        .iter()
        .any(|m| !same_signature(m.signature(), target.signature()))
    {
        return Err(Error::SignatureMismatch);
    }
    let union = members.iter().fold(0, |acc, m| acc | m.cells());
    Ok(target.cells() & !union == 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Exact,
    Greedy,
}

/// A subcover, as indices into the parent cover plus the chosen members.
/// Both lists follow the canonical order of the members.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subcover {
    pub indices: Vec<usize>,
    pub members: Vec<SoftSet>,
}

/// A smallest (exact) or heuristic (greedy) subfamily that still covers.
///
/// Exact search returns the minimum-cardinality subcover whose member list is
/// lexicographically first in canonical member order.
pub fn minimal_subcover(cover: &Cover, strategy: Strategy) -> Subcover {
    let cells = cover.member_cells();
    let indices = match strategy {
        Strategy::Exact => exact_subcover(cover.target.cells(), &cells),
        Strategy::Greedy => greedy_subcover(cover.target.cells(), &cells),
    }
    .expect("cover invariant: members cover the target");
    let members: Vec<SoftSet> = indices.iter().map(|&i| cover.members[i].clone()).collect();
    debug_assert!(is_cover(&members, &cover.target).unwrap_or(false));
    Subcover { indices, members }
}

/// Member indices sorted by (mask, index).
fn canonical_ranks(members: &[u64]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by_key(|&i| (members[i], i));
    order
}

/// Largest-marginal-coverage heuristic; `None` if `members` do not cover.
pub fn greedy_subcover(target: u64, members: &[u64]) -> Option<Vec<usize>> {
    let order = canonical_ranks(members);
    let mut uncovered = target;
    let mut picked: Vec<usize> = Vec::new();
    while uncovered != 0 {
        let (rank, gain) = order
            .iter()
            .enumerate()
            .map(|(r, &i)| (r, (members[i] & uncovered).count_ones()))
            .fold(
                (usize::MAX, 0),
                |best, cur| if cur.1 > best.1 { cur } else { best },
            );
        if gain == 0 {
            return None;
        }
        uncovered &= !members[order[rank]];
        picked.push(rank);
    }
    picked.sort_unstable();
    Some(picked.into_iter().map(|r| order[r]).collect())
}

/// Branch-and-bound minimum cover with a canonical tie-break.
pub fn exact_subcover(target: u64, members: &[u64]) -> Option<Vec<usize>> {
    let incumbent = greedy_subcover(target, members)?;
    let order = canonical_ranks(members);
    let ranked: Vec<u64> = order.iter().map(|&i| members[i] & target).collect();

    let mut bnb = BranchAndBound {
        members: &ranked,
        best: incumbent.len(),
        banned: vec![false; ranked.len()],
    };
    bnb.search(target, 0);
    let size = bnb.best;

    let mut chosen = Vec::with_capacity(size);
    let found = lex_first_cover(&ranked, target, 0, size, &mut chosen);
    assert!(found, "a cover of the optimal size exists");
    Some(chosen.into_iter().map(|r| order[r]).collect())
}

struct BranchAndBound<'a> {
    members: &'a [u64],
    best: usize,
    banned: Vec<bool>,
}

impl BranchAndBound<'_> {
    fn lower_bound(&self, uncovered: u64) -> usize {
        let widest = self
            .members
            .iter()
            .zip(&self.banned)
            .filter(|(_, &b)| !b)
            .map(|(m, _)| (m & uncovered).count_ones())
            .max()
            .unwrap_or(0);
        if widest == 0 {
            return usize::MAX / 2;
        }
        (uncovered.count_ones() as usize).div_ceil(widest as usize)
    }

    fn search(&mut self, uncovered: u64, chosen: usize) {
        if uncovered == 0 {
            self.best = self.best.min(chosen);
            return;
        }
        if chosen + self.lower_bound(uncovered) >= self.best {
            return;
        }
        // Some member must cover the lowest uncovered cell; branch on those,
        // widest first.
        let cell = uncovered & uncovered.wrapping_neg();
        let mut candidates: Vec<usize> = (0..self.members.len())
            .filter(|&r| !self.banned[r] && self.members[r] & cell != 0)
            .collect();
        candidates.sort_by_key(|&r| {
            (
                std::cmp::Reverse((self.members[r] & uncovered).count_ones()),
                r,
            )
        });
        let mut tried = Vec::with_capacity(candidates.len());
        for r in candidates {
            self.search(uncovered & !self.members[r], chosen + 1);
            self.banned[r] = true;
            tried.push(r);
        }
        for r in tried {
            self.banned[r] = false;
        }
    }
}

fn lex_first_cover(
    members: &[u64],
    uncovered: u64,
    start: usize,
    remaining: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    if uncovered == 0 {
        return true;
    }
    if remaining == 0 {
        return false;
    }
    let need = uncovered.count_ones() as usize;
    let widest = members[start..]
        .iter()
        .map(|m| (m & uncovered).count_ones() as usize)
        .max()
        .unwrap_or(0);
    if widest * remaining < need {
        return false;
    }
    for r in start..members.len() {
        if members[r] & uncovered == 0 {
            continue;
        }
        chosen.push(r);
        if lex_first_cover(
            members,
            uncovered & !members[r],
            r + 1,
            remaining - 1,
            chosen,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// A cover of `~Y` by sets open in `X`, carried over to the subspace on `Y`
/// with member indices preserved.
#[derive(Debug, Clone)]
pub struct RestrictedCover {
    pub subspace: SoftTopology,
    pub cover: Cover,
}

impl RestrictedCover {
    /// Members of the original cover at `indices`.
    pub fn pull_back(&self, original: &Cover, indices: &[usize]) -> Vec<SoftSet> {
        indices
            .iter()
            .map(|&i| original.members[i].clone())
            .collect()
    }
}

/// Restricts each member of a cover of `~Y` (open in `t`) to `Y`.
pub fn restrict_cover<S: AsRef<str>>(
    cover: &Cover,
    t: &SoftTopology,
    subset: &[S],
) -> Result<RestrictedCover> {
    let mask = t.signature().subset_mask(subset)?;
    restrict_cover_mask(cover, t, mask)
}

pub fn restrict_cover_mask(
    cover: &Cover,
    t: &SoftTopology,
    subset: u64,
) -> Result<RestrictedCover> {
    if !cover.is_open_in(t) {
        return Err(Error::Precondition("cover member is not open".into()));
    }
    let sig = t.signature();
    let y = SoftSet::from_cells(sig, sig.constant_cells(subset));
    if !is_cover(&cover.members, &y)? {
        return Err(Error::Precondition(format!("family does not cover {y}")));
    }
    let subspace = t.subspace_mask(subset)?;
    let sub = Arc::clone(subspace.signature());
    let members: Vec<SoftSet> = cover
        .members
        .iter()
        .map(|m| m.restrict_into(subset, &sub))
        .collect();
    let cover = Cover::new(SoftSet::absolute(&sub), members)?;
    Ok(RestrictedCover { subspace, cover })
}

/// Every finite soft topology is soft compact (and countably soft compact).
pub fn is_compact(t: &SoftTopology) -> Verdict {
    Verdict::holds(Witness::Note(format!(
        "the topology has {} members, so every soft open cover of ~X is finite and is its own \
         finite subcover; finite ⇒ countably compact ⇒ compact all hold trivially",
        t.len()
    )))
}

/// Countable soft compactness; coincides with [`is_compact`] on finite spaces.
pub fn is_countably_compact(t: &SoftTopology) -> Verdict {
    is_compact(t)
}

/// Enumerates subfamilies (as bitmasks over `n` items): all of them for
/// small `n`, otherwise the full family plus a fixed pseudo-random sample.
pub(crate) fn subfamilies(n: usize) -> Box<dyn Iterator<Item = u64>> {
    if n <= EXHAUSTIVE_COVER_MEMBERS {
        Box::new(1..(1u64 << n))
    } else {
        let full = crate::signature::low_bits(n);
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0fe);
        let sample: Vec<u64> = (0..SAMPLED_COVERS)
            .map(|_| rng.gen::<u64>() & full)
            .collect();
        Box::new(std::iter::once(full).chain(sample.into_iter().filter(|&s| s != 0)))
    }
}

fn pick(cells: &[u64], family: u64) -> impl Iterator<Item = u64> + '_ {
    cells
        .iter()
        .enumerate()
        .filter(move |(i, _)| family >> i & 1 == 1)
        .map(|(_, &c)| c)
}

/// Replays the basis-cover characterisation of compactness on `t`.
///
/// Every cover of `~X` by basis elements must yield a finite subcover, and
/// every open cover must yield one by expanding its members into basis
/// elements, extracting a subcover there and pulling each basis element back
/// to a member containing it.
pub fn basis_cover_check(t: &SoftTopology, basis: &[SoftSet]) -> Result<Verdict> {
    let is_basis = t.is_basis(basis)?;
    if !is_basis.holds {
        return Err(Error::Precondition("family is not a basis".into()));
    }
    if basis.len() > MAX_FAMILY {
        return Err(Error::Precondition(format!(
            "basis has {} elements, limit is {MAX_FAMILY}",
            basis.len()
        )));
    }
    let full = t.signature().full_mask();
    let b: Vec<u64> = basis.iter().map(SoftSet::cells).collect();
    for family in 1..(1u64 << b.len()) {
        let members: Vec<u64> = pick(&b, family).collect();
        if members.iter().fold(0, |a, m| a | m) != full {
            continue;
        }
        if greedy_subcover(full, &members).is_none() {
            return Ok(Verdict::fails(Witness::Family(
                members.iter().map(|&c| t.set(c)).collect(),
            )));
        }
    }

    let open = t.open_cells();
    for family in subfamilies(open.len()) {
        let cover: Vec<u64> = pick(open, family).collect();
        if cover.iter().fold(0, |a, m| a | m) != full {
            continue;
        }
        let expanded: Vec<u64> = b
            .iter()
            .copied()
            .filter(|&e| cover.iter().any(|&u| e & !u == 0))
            .collect();
        let pulled = greedy_subcover(full, &expanded).map(|sub| {
            sub.iter()
                .map(|&i| {
                    *cover
                        .iter()
                        .find(|&&u| expanded[i] & !u == 0)
                        .expect("expanded element lies in some member")
                })
                .collect::<Vec<u64>>()
        });
        let ok = pulled.is_some_and(|p| p.iter().fold(0, |a, m| a | m) == full);
        if !ok {
            return Ok(Verdict::fails(Witness::Family(
                cover.iter().map(|&c| t.set(c)).collect(),
            )));
        }
    }
    Ok(Verdict::holds(Witness::Note(format!(
        "{} basis elements; every basis cover and every replayed open cover of ~X admits a finite subcover",
        basis.len()
    ))))
}

/// Finite intersection property: every nonempty subfamily has a non-null
/// intersection. A failure reports a smallest null subfamily.
pub fn has_fip(family: &[SoftSet]) -> Result<Verdict> {
    let Some(first) = family.first() else {
        return Ok(Verdict::vacuous(Witness::None));
    };
    if family
        .iter()
        .any(|s| !same_signature(s.signature(), first.signature()))
    {
        return Err(Error::SignatureMismatch);
    }
    if family.len() > MAX_FAMILY {
        return Err(Error::Precondition(format!(
            "family has {} members, limit is {MAX_FAMILY}",
            family.len()
        )));
    }
    let sig = first.signature();
    let cells: Vec<u64> = family.iter().map(SoftSet::cells).collect();
    Ok(match fip_cells(&cells, sig.full_mask()) {
        Ok(meet) => Verdict::holds(Witness::Set(SoftSet::from_cells(sig, meet))),
        Err(null) => Verdict::fails(Witness::Family(
            null.into_iter().map(|i| family[i].clone()).collect(),
        )),
    })
}

/// `Ok(total intersection)` when the family has the FIP, otherwise the
/// indices of a smallest subfamily with null intersection.
pub(crate) fn fip_cells(cells: &[u64], full: u64) -> std::result::Result<u64, Vec<usize>> {
    let meet = cells.iter().fold(full, |a, &c| a & c);
    if meet != 0 {
        // Every subfamily's intersection contains the total one.
        return Ok(meet);
    }
    for size in 1..=cells.len() {
        let mut combo = Vec::with_capacity(size);
        if null_combo(cells, full, 0, size, &mut combo) {
            return Err(combo);
        }
    }
    unreachable!("the whole family has null intersection")
}

fn null_combo(cells: &[u64], acc: u64, start: usize, left: usize, combo: &mut Vec<usize>) -> bool {
    if left == 0 {
        return acc == 0;
    }
    for i in start..=cells.len() - left {
        combo.push(i);
        if null_combo(cells, acc & cells[i], i + 1, left - 1, combo) {
            return true;
        }
        combo.pop();
    }
    false
}

/// Checks, over every family of closed sets of `t`, that the FIP forces a
/// non-null total intersection, and replays the complement route: a closed
/// family with null intersection turns into an open cover of `~X` whose
/// finite subcover marks a null finite subfamily.
pub fn fip_equivalence(t: &SoftTopology) -> Result<Verdict> {
    let closed = t.closed_cells();
    if closed.len() > MAX_FAMILY {
        return Err(Error::Precondition(format!(
            "{} closed sets exceed the family limit {MAX_FAMILY}",
            closed.len()
        )));
    }
    let full = t.signature().full_mask();
    let mut families = 0usize;
    for family in 1..(1u64 << closed.len()) {
        families += 1;
        let members: Vec<u64> = pick(closed, family).collect();
        let fip = fip_cells(&members, full);
        let meet = members.iter().fold(full, |a, &c| a & c);
        let consistent = match &fip {
            Ok(_) => meet != 0,
            Err(null) => {
                let complements: Vec<u64> = members.iter().map(|&c| !c & full).collect();
                let replayed = greedy_subcover(full, &complements)
                    .is_some_and(|sub| sub.iter().fold(full, |a, &i| a & members[i]) == 0);
                let witness_null = null.iter().fold(full, |a, &i| a & members[i]) == 0;
                meet == 0 && replayed && witness_null
            }
        };
        if !consistent {
            return Ok(Verdict::fails(Witness::Family(
                members.iter().map(|&c| t.set(c)).collect(),
            )));
        }
    }
    Ok(Verdict::holds(Witness::Note(format!(
        "{} closed sets, {families} nonempty closed families checked",
        closed.len()
    ))))
}

/// Whether a descending chain of non-null closed sets has non-null
/// intersection.
pub fn nested_intersection(t: &SoftTopology, chain: &[SoftSet]) -> Result<Verdict> {
    for (i, c) in chain.iter().enumerate() {
        if !same_signature(c.signature(), t.signature()) {
            return Err(Error::SignatureMismatch);
        }
        if !t.is_closed_cells(c.cells()) {
            return Err(Error::Precondition(format!(
                "chain member {c} is not closed"
            )));
        }
        if c.is_null() {
            return Err(Error::Precondition("chain members must be non-null".into()));
        }
        if i > 0 && !c.is_subset(&chain[i - 1])? {
            return Err(Error::Precondition(format!(
                "chain is not descending at position {i}"
            )));
        }
    }
    let meet = chain
        .iter()
        .fold(t.signature().full_mask(), |a, c| a & c.cells());
    let set = t.set(meet);
    Ok(if meet != 0 {
        Verdict::holds(Witness::Set(set))
    } else {
        Verdict::fails(Witness::Set(set))
    })
}

/// Turns a family `C_1, C_2, …` into the chain `C_1 ∩ … ∩ C_n`.
pub fn fip_chain(family: &[SoftSet]) -> Result<Vec<SoftSet>> {
    let mut out: Vec<SoftSet> = Vec::with_capacity(family.len());
    for c in family {
        let next = match out.last() {
            Some(prev) => prev.intersection(c)?,
            None => c.clone(),
        };
        out.push(next);
    }
    Ok(out)
}
