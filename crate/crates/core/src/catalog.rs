//! Fixed example spaces with their expected property profiles.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::search::PropertyId;
use crate::signature::Signature;
use crate::softset::SoftSet;
use crate::topology::SoftTopology;
use crate::verdict::Verdict;

/// Catalog ids, in listing order.
pub const IDS: [&str; 2] = ["ex4.4", "ex4.9"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    pub property: PropertyId,
    pub holds: bool,
    /// The property holds only because its quantifier ranges over nothing.
    pub vacuous: bool,
}

const fn expect(property: PropertyId, holds: bool) -> Expectation {
    Expectation {
        property,
        holds,
        vacuous: false,
    }
}

const fn expect_vacuous(property: PropertyId) -> Expectation {
    Expectation {
        property,
        holds: true,
        vacuous: true,
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub note: &'static str,
    pub space: SoftTopology,
    /// Named non-trivial open sets, in the order they are listed.
    pub named: Vec<(String, SoftSet)>,
    pub expectations: Vec<Expectation>,
}

/// One replayed expectation.
#[derive(Debug, Clone)]
pub struct Replay {
    pub expectation: Expectation,
    pub verdict: Verdict,
}

impl Replay {
    pub fn matches(&self) -> bool {
        self.verdict.holds == self.expectation.holds
            && self.verdict.vacuous == self.expectation.vacuous
    }
}

impl CatalogEntry {
    pub fn replay(&self) -> Vec<Replay> {
        self.expectations
            .iter()
            .map(|&expectation| Replay {
                expectation,
                verdict: expectation.property.decide(&self.space),
            })
            .collect()
    }
}

const H: &[&str] = &["h"];
const O: &[&str] = &[];

fn one_point(params: usize) -> Arc<Signature> {
    Arc::new(Signature::new(["h"], (1..=params).map(|i| format!("e{i}"))).expect("small signature"))
}

fn build(sig: &Arc<Signature>, sets: &[&[&[&str]]]) -> (SoftTopology, Vec<SoftSet>) {
    let named: Vec<SoftSet> = sets
        .iter()
        .map(|s| SoftSet::from_sections(sig, s).expect("catalog data"))
        .collect();
    let mut family = vec![SoftSet::null(sig), SoftSet::absolute(sig)];
    family.extend(named.iter().cloned());
    let t = SoftTopology::new(sig, &family).expect("catalog spaces are topologies");
    (t, named)
}

/// X = {h}, E = {e1, e2}, opens Φ, ~X, F1 = ⟨h|∅⟩, F2 = ⟨∅|h⟩.
pub fn space_a() -> (SoftTopology, [SoftSet; 2]) {
    let (t, sets) = build(&one_point(2), &[&[H, O], &[O, H]]);
    let [f1, f2]: [SoftSet; 2] = sets.try_into().expect("two sets");
    (t, [f1, f2])
}

/// X = {h}, E = {e1..e5}, opens Φ, ~X, F1 = ⟨∅|h|∅|h|∅⟩, F2 = ⟨h|h|h|∅|h⟩,
/// F3 = ⟨∅|h|∅|∅|∅⟩.
pub fn space_b() -> (SoftTopology, [SoftSet; 3]) {
    let (t, sets) = build(
        &one_point(5),
        &[&[O, H, O, H, O], &[H, H, H, O, H], &[O, H, O, O, O]],
    );
    let [f1, f2, f3]: [SoftSet; 3] = sets.try_into().expect("three sets");
    (t, [f1, f2, f3])
}

fn named(sets: &[SoftSet]) -> Vec<(String, SoftSet)> {
    sets.iter()
        .enumerate()
        .map(|(i, s)| (format!("F{}", i + 1), s.clone()))
        .collect()
}

pub fn example(id: &str) -> Result<CatalogEntry> {
    match id {
        "ex4.4" => {
            let (space, sets) = space_a();
            Ok(CatalogEntry {
                id: "ex4.4",
                note: "one point, two parameters: soft normal and T4, yet not soft regular \
                       and not T3; point-disjoint separation holds although regularity fails",
                space,
                named: named(&sets),
                expectations: vec![
                    expect(PropertyId::Normal, true),
                    expect_vacuous(PropertyId::T1),
                    expect(PropertyId::T4, true),
                    expect(PropertyId::Regular, false),
                    expect(PropertyId::T3, false),
                    expect(PropertyId::PointsClosed, true),
                    expect(PropertyId::WkmPointDisjoint, true),
                    expect(PropertyId::Compact, true),
                ],
            })
        }
        "ex4.9" => {
            let (space, sets) = space_b();
            Ok(CatalogEntry {
                id: "ex4.9",
                note: "one point, five parameters: soft compact and (vacuously) soft \
                       Hausdorff, but not soft normal",
                space,
                named: named(&sets),
                expectations: vec![
                    expect(PropertyId::Compact, true),
                    expect_vacuous(PropertyId::T2),
                    expect(PropertyId::Normal, false),
                    expect(PropertyId::T4, false),
                ],
            })
        }
        other => Err(Error::Input(format!(
            "unknown catalog id `{other}` (known: {})",
            IDS.join(", ")
        ))),
    }
}
