//! Enumeration of small soft topologies and counterexample search.
//!
//! Exhaustive enumeration walks generator sets depth-first: starting from the
//! indiscrete topology, every topology is extended by one more soft set and
//! the closure is memoised, so each labeled topology is expanded once. The
//! labeled topologies are then reduced to one representative per isomorphism
//! class, where isomorphism means simultaneously permuting points and
//! parameters. The representative is the relabeling whose sorted member list
//! is lexicographically smallest.
//!
//! Random sampling draws every section uniformly from `P(X)`, independently
//! per parameter, from a `ChaCha8` stream seeded with the budget seed.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::covers::is_compact;
use crate::error::{Error, Result};
use crate::separation::{check_axiom, points_closed, wkm_condition, AxiomId, NonMembershipForm};
use crate::signature::{Signature, DEFAULT_MAX_CELLS};
use crate::softset::SoftSet;
use crate::topology::{generate, SoftTopology};
use crate::verdict::Verdict;

/// Exhaustive enumeration needs at most 64 ground soft sets.
pub const MAX_EXHAUSTIVE_CELLS: usize = 6;

/// Named properties shared by the deciders, the catalog and the search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PropertyId {
    T0,
    T1,
    T2,
    Regular,
    T3,
    Normal,
    T4,
    Compact,
    PointsClosed,
    WkmPointDisjoint,
    WkmNotMember,
}

impl PropertyId {
    pub const ALL: [PropertyId; 11] = [
        PropertyId::T0,
        PropertyId::T1,
        PropertyId::T2,
        PropertyId::Regular,
        PropertyId::T3,
        PropertyId::Normal,
        PropertyId::T4,
        PropertyId::Compact,
        PropertyId::PointsClosed,
        PropertyId::WkmPointDisjoint,
        PropertyId::WkmNotMember,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::T0 => "t0",
            PropertyId::T1 => "t1",
            PropertyId::T2 => "t2",
            PropertyId::Regular => "regular",
            PropertyId::T3 => "t3",
            PropertyId::Normal => "normal",
            PropertyId::T4 => "t4",
            PropertyId::Compact => "compact",
            PropertyId::PointsClosed => "points-closed",
            PropertyId::WkmPointDisjoint => "wkm-point-disjoint",
            PropertyId::WkmNotMember => "wkm-not-member",
        }
    }

    pub fn axiom(self) -> Option<AxiomId> {
        Some(match self {
            PropertyId::T0 => AxiomId::T0,
            PropertyId::T1 => AxiomId::T1,
            PropertyId::T2 => AxiomId::T2,
            PropertyId::Regular => AxiomId::Regular,
            PropertyId::T3 => AxiomId::T3,
            PropertyId::Normal => AxiomId::Normal,
            PropertyId::T4 => AxiomId::T4,
            _ => return None,
        })
    }

    pub fn decide(self, t: &SoftTopology) -> Verdict {
        if let Some(axiom) = self.axiom() {
            return check_axiom(t, axiom);
        }
        match self {
            PropertyId::Compact => is_compact(t),
            PropertyId::PointsClosed => points_closed(t),
            PropertyId::WkmPointDisjoint => wkm_condition(t, NonMembershipForm::PointDisjoint),
            PropertyId::WkmNotMember => wkm_condition(t, NonMembershipForm::NotMember),
            _ => unreachable!("axioms handled above"),
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PropertyId {
    type Err = Error;

    /// Accepts kebab-case names and their camelCase spellings.
    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .collect::<String>()
            .to_ascii_lowercase();
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name().replace('-', "") == key)
            .ok_or_else(|| Error::Input(format!("unknown property `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Exhaustive,
    Random,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_points: usize,
    pub max_params: usize,
    pub max_topologies: usize,
    pub seed: u64,
    pub mode: SearchMode,
}

impl SearchBudget {
    pub fn exhaustive(max_points: usize, max_params: usize) -> Self {
        Self {
            max_points,
            max_params,
            max_topologies: usize::MAX,
            seed: 0,
            mode: SearchMode::Exhaustive,
        }
    }

    pub fn random(max_points: usize, max_params: usize, max_topologies: usize, seed: u64) -> Self {
        Self {
            max_points,
            max_params,
            max_topologies,
            seed,
            mode: SearchMode::Random,
        }
    }

    fn check(&self) -> Result<()> {
        if self.max_points == 0 || self.max_params == 0 {
            return Err(Error::Input(
                "budget needs at least one point and one parameter".into(),
            ));
        }
        if self.max_topologies == 0 {
            return Err(Error::Input(
                "budget must allow at least one topology".into(),
            ));
        }
        let cells = self.max_points * self.max_params;
        let bound = match self.mode {
            SearchMode::Exhaustive => MAX_EXHAUSTIVE_CELLS,
            SearchMode::Random => DEFAULT_MAX_CELLS,
        };
        if cells > bound {
            return Err(Error::Input(match self.mode {
                SearchMode::Exhaustive => format!(
                    "exhaustive search supports |X|·|E| ≤ {bound} (asked for {cells}); use random mode"
                ),
                SearchMode::Random => format!("|X|·|E| = {cells} exceeds the bound {bound}"),
            }));
        }
        Ok(())
    }

    /// Signatures in sweep order: points outer, parameters inner.
    pub fn signatures(&self) -> Vec<Arc<Signature>> {
        (1..=self.max_points)
            .flat_map(|n| (1..=self.max_params).map(move |m| (n, m)))
            .map(|(n, m)| Arc::new(Signature::anonymous(n, m).expect("bounded signature")))
            .collect()
    }
}

/// Simultaneous permutation of points and parameters: point `x` goes to
/// `points[x]`, parameter `e` to `params[e]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relabeling {
    pub points: Vec<usize>,
    pub params: Vec<usize>,
}

impl Relabeling {
    fn cell_map(&self, sig: &Signature) -> Vec<usize> {
        let n = sig.n_points();
        (0..sig.cells())
            .map(|c| self.params[c / n] * n + self.points[c % n])
            .collect()
    }

    /// Every relabeling of a signature, identity first.
    pub fn all(sig: &Signature) -> Vec<Relabeling> {
        let pp = permutations(sig.n_points());
        let qp = permutations(sig.n_params());
        pp.iter()
            .flat_map(|p| {
                qp.iter().map(move |q| Relabeling {
                    points: p.clone(),
                    params: q.clone(),
                })
            })
            .collect()
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

fn map_cells(cells: u64, map: &[usize]) -> u64 {
    map.iter()
        .enumerate()
        .filter(|(c, _)| cells >> c & 1 == 1)
        .fold(0, |acc, (_, &to)| acc | 1u64 << to)
}

pub fn relabel_set(s: &SoftSet, r: &Relabeling) -> SoftSet {
    SoftSet::from_cells(
        s.signature(),
        map_cells(s.cells(), &r.cell_map(s.signature())),
    )
}

pub fn relabel(t: &SoftTopology, r: &Relabeling) -> SoftTopology {
    let map = r.cell_map(t.signature());
    SoftTopology::from_cells(
        t.signature(),
        t.open_cells().iter().map(|&c| map_cells(c, &map)),
    )
}

/// Precomputed cell maps for every relabeling of one signature.
struct Canonicalizer {
    maps: Vec<Vec<usize>>,
}

impl Canonicalizer {
    fn new(sig: &Signature) -> Self {
        Self {
            maps: Relabeling::all(sig)
                .iter()
                .map(|r| r.cell_map(sig))
                .collect(),
        }
    }

    fn canonical(&self, members: &[u64]) -> Vec<u64> {
        let mut best: Option<Vec<u64>> = None;
        let mut buf = Vec::with_capacity(members.len());
        for map in &self.maps {
            buf.clear();
            buf.extend(members.iter().map(|&c| map_cells(c, map)));
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.expect("at least the identity relabeling")
    }
}

/// The isomorphism-class representative of `t`.
pub fn canonical_form(t: &SoftTopology) -> SoftTopology {
    let c = Canonicalizer::new(t.signature()).canonical(t.open_cells());
    SoftTopology::from_cells(t.signature(), c)
}

/// Every topology over `sig` as a sorted member list, each exactly once.
fn labeled_topologies(sig: &Signature) -> Vec<Vec<u64>> {
    let full = sig.full_mask();
    let ground = 1u64 << sig.cells();
    let key = |members: &[u64]| members.iter().fold(0u64, |k, &c| k | 1u64 << c);
    let start = vec![0, full];
    let mut seen: HashSet<u64> = HashSet::from([key(&start)]);
    let mut stack = vec![start];
    let mut out = Vec::new();
    let mut scratch: BTreeSet<u64> = BTreeSet::new();
    while let Some(t) = stack.pop() {
        let k = key(&t);
        for s in 0..ground {
            if k >> s & 1 == 1 {
                continue;
            }
            scratch.clear();
            for &a in &t {
                for &b in &t {
                    scratch.insert(a | (s & b));
                }
            }
            let next: Vec<u64> = scratch.iter().copied().collect();
            if seen.insert(key(&next)) {
                stack.push(next);
            }
        }
        out.push(t);
    }
    out
}

/// Topologies over `sig`: in exhaustive mode one per isomorphism class, in
/// canonical order; in random mode up to `max_topologies` distinct classes
/// in draw order.
pub fn enum_topologies(sig: &Arc<Signature>, budget: &SearchBudget) -> Result<Vec<SoftTopology>> {
    match budget.mode {
        SearchMode::Exhaustive => {
            if sig.cells() > MAX_EXHAUSTIVE_CELLS {
                return Err(Error::Input(format!(
                    "exhaustive enumeration supports |X|·|E| ≤ {MAX_EXHAUSTIVE_CELLS} \
                     (signature has {}); use random mode",
                    sig.cells()
                )));
            }
            let canon = Canonicalizer::new(sig);
            let classes: BTreeSet<Vec<u64>> = labeled_topologies(sig)
                .iter()
                .map(|t| canon.canonical(t))
                .collect();
            Ok(classes
                .into_iter()
                .take(budget.max_topologies)
                .map(|c| SoftTopology::from_cells(sig, c))
                .collect())
        }
        SearchMode::Random => {
            let canon = Canonicalizer::new(sig);
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let mut seen: HashSet<Vec<u64>> = HashSet::new();
            let mut out = Vec::new();
            let attempts = budget.max_topologies.saturating_mul(16);
            for _ in 0..attempts {
                if out.len() >= budget.max_topologies {
                    break;
                }
                let k = rng.gen_range(0..=sig.cells());
                let t = random_from(sig, &mut rng, k);
                if seen.insert(canon.canonical(t.open_cells())) {
                    out.push(t);
                }
            }
            Ok(out)
        }
    }
}

fn random_from(sig: &Arc<Signature>, rng: &mut ChaCha8Rng, k: usize) -> SoftTopology {
    let full = sig.full_mask();
    let seeds: Vec<SoftSet> = (0..k)
        .map(|_| SoftSet::from_cells(sig, rng.gen::<u64>() & full))
        .collect();
    generate(sig, &seeds).expect("seeds share the signature")
}

/// `generate` of `k` pseudo-random soft sets; reproducible from `seed`.
pub fn random_space(sig: &Arc<Signature>, seed: u64, k: usize) -> SoftTopology {
    random_from(sig, &mut ChaCha8Rng::seed_from_u64(seed), k)
}

/// Every space the budget covers, signature by signature.
pub fn sweep(budget: &SearchBudget) -> Result<Vec<SoftTopology>> {
    budget.check()?;
    match budget.mode {
        SearchMode::Exhaustive => {
            let mut out = Vec::new();
            for sig in budget.signatures() {
                out.extend(enum_topologies(&sig, budget)?);
                if out.len() >= budget.max_topologies {
                    out.truncate(budget.max_topologies);
                    break;
                }
            }
            Ok(out)
        }
        SearchMode::Random => {
            let sigs = budget.signatures();
            let canons: Vec<Canonicalizer> = sigs.iter().map(|s| Canonicalizer::new(s)).collect();
            let mut rng = ChaCha8Rng::seed_from_u64(budget.seed);
            let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
            let mut out = Vec::new();
            for _ in 0..budget.max_topologies.saturating_mul(16) {
                if out.len() >= budget.max_topologies {
                    break;
                }
                let i = rng.gen_range(0..sigs.len());
                let k = rng.gen_range(0..=sigs[i].cells());
                let t = random_from(&sigs[i], &mut rng, k);
                if seen.insert((i, canons[i].canonical(t.open_cells()))) {
                    out.push(t);
                }
            }
            Ok(out)
        }
    }
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub space: SoftTopology,
    pub verdicts: Vec<(PropertyId, Verdict)>,
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub found: Option<Counterexample>,
    pub examined: usize,
    /// Exhaustive mode scanned its whole scope, so `found == None` is a
    /// bounded non-existence result.
    pub complete: bool,
}

/// First space in the budgeted stream where every `holds` property holds and
/// every `fails` property fails.
pub fn find_counterexample(
    holds: &[PropertyId],
    fails: &[PropertyId],
    budget: &SearchBudget,
) -> Result<SearchOutcome> {
    if let Some(p) = holds.iter().find(|p| fails.contains(p)) {
        return Err(Error::Input(format!(
            "property `{p}` is required to both hold and fail"
        )));
    }
    let spaces = sweep(budget)?;
    let complete = budget.mode == SearchMode::Exhaustive && spaces.len() < budget.max_topologies;
    let mut examined = 0;
    for space in spaces {
        examined += 1;
        let mut verdicts = Vec::with_capacity(holds.len() + fails.len());
        let mut ok = true;
        for (list, want) in [(holds, true), (fails, false)] {
            for &p in list {
                let v = p.decide(&space);
                ok &= v.holds == want;
                verdicts.push((p, v));
                if !ok {
                    break;
                }
            }
            if !ok {
                break;
            }
        }
        if ok {
            return Ok(SearchOutcome {
                found: Some(Counterexample { space, verdicts }),
                examined,
                complete,
            });
        }
    }
    Ok(SearchOutcome {
        found: None,
        examined,
        complete,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::space_a;
    use crate::topology::validate;

    fn sig(n: usize, m: usize) -> Arc<Signature> {
        Arc::new(Signature::anonymous(n, m).unwrap())
    }

    #[test]
    fn class_counts_for_tiny_signatures() {
        let b = SearchBudget::exhaustive(1, 2);
        assert_eq!(enum_topologies(&sig(1, 1), &b).unwrap().len(), 1);
        assert_eq!(enum_topologies(&sig(1, 2), &b).unwrap().len(), 3);
        assert_eq!(labeled_topologies(&sig(1, 2)).len(), 4);
    }

    #[test]
    fn enumerated_spaces_validate() {
        for t in enum_topologies(&sig(2, 2), &SearchBudget::exhaustive(2, 2)).unwrap() {
            assert!(validate(t.signature(), &t.members()).unwrap().holds);
        }
    }

    #[test]
    fn exhaustive_bound_is_enforced() {
        let b = SearchBudget::exhaustive(7, 1);
        assert!(matches!(
            enum_topologies(&sig(7, 1), &b),
            Err(Error::Input(_))
        ));
        assert!(matches!(sweep(&b), Err(Error::Input(_))));
    }

    #[test]
    fn random_space_is_reproducible() {
        let s = sig(2, 3);
        assert_eq!(random_space(&s, 7, 0), SoftTopology::indiscrete(&s));
        assert_eq!(random_space(&s, 42, 3), random_space(&s, 42, 3));
        let t = random_space(&s, 9, 4);
        assert!(validate(&s, &t.members()).unwrap().holds);
    }

    #[test]
    fn canonical_form_is_relabeling_invariant() {
        let (a, _) = space_a();
        let swap = Relabeling {
            points: vec![0],
            params: vec![1, 0],
        };
        let b = relabel(&a, &swap);
        assert_eq!(b, a);
        let s = sig(2, 2);
        let t = random_space(&s, 3, 2);
        for r in Relabeling::all(&s) {
            assert_eq!(canonical_form(&relabel(&t, &r)), canonical_form(&t));
        }
    }

    #[test]
    fn counterexample_for_t4_not_t3() {
        let out = find_counterexample(
            &[PropertyId::Normal, PropertyId::PointsClosed],
            &[PropertyId::T3],
            &SearchBudget::exhaustive(1, 2),
        )
        .unwrap();
        let found = out.found.unwrap();
        let (a, _) = space_a();
        assert_eq!(
            canonical_form(&found.space).open_cells(),
            canonical_form(&a).open_cells()
        );
    }

    #[test]
    fn contradictory_query_is_rejected() {
        let r = find_counterexample(
            &[PropertyId::T0],
            &[PropertyId::T0],
            &SearchBudget::exhaustive(1, 1),
        );
        assert!(matches!(r, Err(Error::Input(_))));
    }

    #[test]
    fn property_names_parse() {
        for p in PropertyId::ALL {
            assert_eq!(p.name().parse::<PropertyId>().unwrap(), p);
        }
        assert_eq!(
            "pointsClosed".parse::<PropertyId>().unwrap(),
            PropertyId::PointsClosed
        );
        assert_eq!(
            "wkmPointDisjoint".parse::<PropertyId>().unwrap(),
            PropertyId::WkmPointDisjoint
        );
        assert!("t5".parse::<PropertyId>().is_err());
    }
}
