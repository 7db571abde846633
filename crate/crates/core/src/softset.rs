//! Soft sets over a fixed signature and their algebra.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::signature::Signature;

/// A total soft set `(F, E)`: one section `F(e) ⊆ X` per parameter.
///
/// Values are ordered by their packed cell mask, which places `Φ_E` first and
/// `~X` last. Comparing soft sets over different signatures is meaningless;
/// equality checks the signature as well.
#[derive(Clone)]
pub struct SoftSet {
    sig: Arc<Signature>,
    cells: u64,
}

pub(crate) fn same_signature(a: &Arc<Signature>, b: &Arc<Signature>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl SoftSet {
    pub fn from_cells(sig: &Arc<Signature>, cells: u64) -> Self {
        Self {
            sig: Arc::clone(sig),
            cells: cells & sig.full_mask(),
        }
    }

    /// `Φ_E`.
    pub fn null(sig: &Arc<Signature>) -> Self {
        Self::from_cells(sig, 0)
    }

    /// `~X`.
    pub fn absolute(sig: &Arc<Signature>) -> Self {
        Self::from_cells(sig, sig.full_mask())
    }

    /// `~S`: every section equal to `S`.
    pub fn constant<S: AsRef<str>>(sig: &Arc<Signature>, points: &[S]) -> Result<Self> {
        let subset = sig.subset_mask(points)?;
        Ok(Self::from_cells(sig, sig.constant_cells(subset)))
    }

    /// The soft point `(x, E)`.
    pub fn soft_point(sig: &Arc<Signature>, point: &str) -> Result<Self> {
        let x = sig.point_index(point)?;
        Ok(Self::from_cells(sig, sig.point_cells(x)))
    }

    /// Build from one list of point names per parameter, in parameter order.
    pub fn from_sections<S: AsRef<str>>(sig: &Arc<Signature>, sections: &[&[S]]) -> Result<Self> {
        if sections.len() != sig.n_params() {
            return Err(Error::Input(format!(
                "expected {} sections, got {}",
                sig.n_params(),
                sections.len()
            )));
        }
        let mut cells = 0;
        for (e, section) in sections.iter().enumerate() {
            cells |= sig.subset_mask(section)? << (e * sig.n_points());
        }
        Ok(Self::from_cells(sig, cells))
    }

    pub fn signature(&self) -> &Arc<Signature> {
        &self.sig
    }

    pub fn cells(&self) -> u64 {
        self.cells
    }

    /// Section `F(e)` as a bitmask over point indices.
    pub fn section(&self, param: usize) -> u64 {
        self.sig.section(self.cells, param)
    }

    pub fn section_names(&self, param: usize) -> Vec<&str> {
        let s = self.section(param);
        self.sig
            .points()
            .iter()
            .enumerate()
            .filter(|(x, _)| s >> x & 1 == 1)
            .map(|(_, p)| p.as_str())
            .collect()
    }

    pub fn is_null(&self) -> bool {
        self.cells == 0
    }

    pub fn is_absolute(&self) -> bool {
        self.cells == self.sig.full_mask()
    }

    fn check(&self, other: &SoftSet) -> Result<()> {
        if same_signature(&self.sig, &other.sig) {
            Ok(())
        } else {
            Err(Error::SignatureMismatch)
        }
    }

    fn with_cells(&self, cells: u64) -> Self {
        Self {
            sig: Arc::clone(&self.sig),
            cells,
        }
    }

    pub fn union(&self, other: &SoftSet) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_cells(self.cells | other.cells))
    }

    pub fn intersection(&self, other: &SoftSet) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_cells(self.cells & other.cells))
    }

    pub fn difference(&self, other: &SoftSet) -> Result<Self> {
        self.check(other)?;
        Ok(self.with_cells(self.cells & !other.cells))
    }

    /// Relative complement `(F, E)'`.
    pub fn complement(&self) -> Self {
        self.with_cells(!self.cells & self.sig.full_mask())
    }

    pub fn is_subset(&self, other: &SoftSet) -> Result<bool> {
        self.check(other)?;
        Ok(self.cells & !other.cells == 0)
    }

    /// `x ∈ (F, E)`: `x ∈ F(e)` for every parameter.
    pub fn member(&self, point: &str) -> Result<bool> {
        Ok(self.member_at(self.sig.point_index(point)?))
    }

    pub fn member_at(&self, point: usize) -> bool {
        let pc = self.sig.point_cells(point);
        self.cells & pc == pc
    }

    /// `(x, E) ∩ (F, E) = Φ_E`: `x ∉ F(e)` for every parameter.
    pub fn point_disjoint(&self, point: &str) -> Result<bool> {
        Ok(self.point_disjoint_at(self.sig.point_index(point)?))
    }

    pub fn point_disjoint_at(&self, point: usize) -> bool {
        self.cells & self.sig.point_cells(point) == 0
    }

    /// The sub-soft set `(^Y F, E)` over the signature restricted to `Y`.
    pub fn restrict<S: AsRef<str>>(&self, subset: &[S]) -> Result<Self> {
        let mask = self.sig.subset_mask(subset)?;
        let sub = Arc::new(self.sig.sub_signature(mask)?);
        Ok(self.restrict_into(mask, &sub))
    }

    /// Restriction onto a precomputed sub-signature for the point mask `subset`.
    pub(crate) fn restrict_into(&self, subset: u64, sub: &Arc<Signature>) -> Self {
        Self::from_cells(sub, restrict_cells(&self.sig, self.cells, subset))
    }
}

/// Intersect every section with `subset` and compress onto the kept points.
pub(crate) fn restrict_cells(sig: &Signature, cells: u64, subset: u64) -> u64 {
    let kept: Vec<usize> = (0..sig.n_points())
        .filter(|&x| subset >> x & 1 == 1)
        .collect();
    let mut out = 0;
    for e in 0..sig.n_params() {
        let section = sig.section(cells, e);
        for (i, &x) in kept.iter().enumerate() {
            if section >> x & 1 == 1 {
                out |= 1u64 << (e * kept.len() + i);
            }
        }
    }
    out
}

impl PartialEq for SoftSet {
    fn eq(&self, other: &Self) -> bool {
        self.cells == other.cells && same_signature(&self.sig, &other.sig)
    }
}

impl Eq for SoftSet {}

impl Hash for SoftSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.cells.hash(state);
    }
}

impl PartialOrd for SoftSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SoftSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.cells.cmp(&other.cells)
    }
}

pub(crate) fn fmt_section(
    sig: &Signature,
    section: u64,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let names: Vec<&str> = (0..sig.n_points())
        .filter(|x| section >> x & 1 == 1)
        .map(|x| sig.points()[x].as_str())
        .collect();
    match names.len() {
        0 => write!(f, "∅"),
        1 => write!(f, "{}", names[0]),
        _ => write!(f, "{{{}}}", names.join(",")),
    }
}

impl fmt::Display for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for e in 0..self.sig.n_params() {
            if e > 0 {
                write!(f, "|")?;
            }
            fmt_section(&self.sig, self.section(e), f)?;
        }
        write!(f, "⟩")
    }
}

impl fmt::Debug for SoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which of the two general combinations to form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CombineMode {
    Union,
    Intersection,
}

/// A soft set `(F, A)` whose parameter domain `A ⊆ E` is explicit.
///
/// Only used for the union/intersection of soft sets over differing
/// parameter sets; everything else works with total soft sets.
#[derive(Clone, PartialEq, Eq)]
pub struct PartialSoftSet {
    sig: Arc<Signature>,
    domain: u64,
    cells: u64,
}

impl PartialSoftSet {
    /// Sections given as `(param name, point names)` pairs; the domain is the
    /// set of listed parameters.
    pub fn new<S: AsRef<str>>(sig: &Arc<Signature>, sections: &[(&str, &[S])]) -> Result<Self> {
        let mut domain = 0u64;
        let mut cells = 0u64;
        for (param, points) in sections {
            let e = sig.param_index(param)?;
            if domain >> e & 1 == 1 {
                return Err(Error::DuplicateName((*param).to_string()));
            }
            domain |= 1 << e;
            cells |= sig.subset_mask(points)? << (e * sig.n_points());
        }
        if domain == 0 {
            return Err(Error::Input("parameter domain must be nonempty".into()));
        }
        Ok(Self {
            sig: Arc::clone(sig),
            domain,
            cells,
        })
    }

    /// Indices of the parameters in the domain.
    pub fn domain(&self) -> Vec<usize> {
        (0..self.sig.n_params())
            .filter(|e| self.domain >> e & 1 == 1)
            .collect()
    }

    /// `F(e)` for `e` in the domain.
    pub fn section(&self, param: usize) -> Option<u64> {
        (self.domain >> param & 1 == 1).then(|| self.sig.section(self.cells, param))
    }

    /// The total soft set, when `A = E`.
    pub fn to_total(&self) -> Option<SoftSet> {
        (self.domain == crate::signature::low_bits(self.sig.n_params()))
            .then(|| SoftSet::from_cells(&self.sig, self.cells))
    }

    fn domain_cells(&self, domain: u64) -> u64 {
        (0..self.sig.n_params())
            .filter(|e| domain >> e & 1 == 1)
            .fold(0, |acc, e| {
                acc | self.sig.point_mask() << (e * self.sig.n_points())
            })
    }

    /// Union over `A ∪ B` (sections from whichever side defines them, unioned
    /// on `A ∩ B`) or intersection over `A ∩ B`.
    pub fn combine(&self, other: &PartialSoftSet, mode: CombineMode) -> Result<Self> {
        if !same_signature(&self.sig, &other.sig) {
            return Err(Error::SignatureMismatch);
        }
        let (domain, cells) = match mode {
            // Sections outside a domain are stored empty, so OR realises all
            // three cases at once.
            CombineMode::Union => (self.domain | other.domain, self.cells | other.cells),
            CombineMode::Intersection => {
                let domain = self.domain & other.domain;
                if domain == 0 {
                    return Err(Error::DisjointDomains);
                }
                (domain, self.cells & other.cells & self.domain_cells(domain))
            }
        };
        Ok(Self {
            sig: Arc::clone(&self.sig),
            domain,
            cells,
        })
    }
}

impl fmt::Debug for PartialSoftSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, e) in self.domain().into_iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}:", self.sig.params()[e])?;
            fmt_section(&self.sig, self.sig.section(self.cells, e), f)?;
        }
        write!(f, "⟩")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(points: &[&str], params: &[&str]) -> Arc<Signature> {
        Arc::new(Signature::new(points.iter().copied(), params.iter().copied()).unwrap())
    }

    fn space_a() -> (Arc<Signature>, SoftSet, SoftSet) {
        let s = sig(&["h"], &["e1", "e2"]);
        let f1 = SoftSet::from_sections(&s, &[&["h"], &[]]).unwrap();
        let f2 = SoftSet::from_sections(&s, &[&[], &["h"]]).unwrap();
        (s, f1, f2)
    }

    fn space_b() -> (Arc<Signature>, [SoftSet; 3]) {
        let s = sig(&["h"], &["e1", "e2", "e3", "e4", "e5"]);
        let h: &[&str] = &["h"];
        let o: &[&str] = &[];
        let f1 = SoftSet::from_sections(&s, &[o, h, o, h, o]).unwrap();
        let f2 = SoftSet::from_sections(&s, &[h, h, h, o, h]).unwrap();
        let f3 = SoftSet::from_sections(&s, &[o, h, o, o, o]).unwrap();
        (s, [f1, f2, f3])
    }

    #[test]
    fn constants_and_points() {
        let (a, _, _) = space_a();
        let none: [&str; 0] = [];
        assert_eq!(SoftSet::constant(&a, &none).unwrap(), SoftSet::null(&a));
        assert_eq!(
            SoftSet::constant(&a, &["h"]).unwrap(),
            SoftSet::absolute(&a)
        );
        assert_eq!(SoftSet::soft_point(&a, "h").unwrap(), SoftSet::absolute(&a));
        assert_eq!(
            SoftSet::constant(&a, &["z"]),
            Err(Error::UnknownPoint("z".into()))
        );

        let ab = sig(&["a", "b"], &["e1", "e2"]);
        let c = SoftSet::constant(&ab, &["a"]).unwrap();
        assert_eq!(c.to_string(), "⟨a|a⟩");
        assert_eq!(SoftSet::soft_point(&ab, "a").unwrap(), c);
        let one = sig(&["a", "b"], &["e1"]);
        assert_eq!(SoftSet::soft_point(&one, "b").unwrap().to_string(), "⟨b⟩");
        assert!(SoftSet::soft_point(&one, "c").is_err());
    }

    #[test]
    fn lattice_operations_on_catalog_spaces() {
        let (a, f1, f2) = space_a();
        assert_eq!(f1.union(&f2).unwrap(), SoftSet::absolute(&a));
        assert_eq!(f1.intersection(&f2).unwrap(), SoftSet::null(&a));
        let (_, [b1, b2, b3]) = space_b();
        assert_eq!(b1.intersection(&b2).unwrap(), b3);
    }

    #[test]
    fn difference_and_complement() {
        let (a, f1, f2) = space_a();
        assert_eq!(SoftSet::absolute(&a).difference(&f1).unwrap(), f2);
        assert!(f1.difference(&f1).unwrap().is_null());
        assert_eq!(f2.difference(&SoftSet::null(&a)).unwrap(), f2);
        assert_eq!(f1.complement(), f2);
        assert_eq!(SoftSet::null(&a).complement(), SoftSet::absolute(&a));
        let (_, [_, b2, _]) = space_b();
        assert_eq!(b2.complement().to_string(), "⟨∅|∅|∅|h|∅⟩");
    }

    #[test]
    fn subset_and_membership() {
        let (a, f1, f2) = space_a();
        let (_, [b1, _, b3]) = space_b();
        assert!(b3.is_subset(&b1).unwrap());
        assert!(f1.is_subset(&f1).unwrap());
        assert!(!f1.is_subset(&f2).unwrap());

        assert!(!f1.member("h").unwrap());
        assert!(SoftSet::absolute(&a).member("h").unwrap());
        assert!(!SoftSet::null(&a).member("h").unwrap());

        // Non-membership and point-disjointness differ.
        assert!(!f1.point_disjoint("h").unwrap());
        assert!(SoftSet::null(&a).point_disjoint("h").unwrap());
        assert!(!SoftSet::absolute(&a).point_disjoint("h").unwrap());
        assert!(f1.member("q").is_err());
    }

    #[test]
    fn signature_mismatch_is_an_error() {
        let (_, f1, _) = space_a();
        let (_, [b1, _, _]) = space_b();
        assert_eq!(f1.union(&b1), Err(Error::SignatureMismatch));
        assert_eq!(f1.is_subset(&b1), Err(Error::SignatureMismatch));
        // Structurally equal signatures behind different Arcs still match.
        let again = sig(&["h"], &["e1", "e2"]);
        let g = SoftSet::from_sections(&again, &[&["h"], &[]]).unwrap();
        assert_eq!(f1, g);
    }

    #[test]
    fn restriction() {
        let (a, _, _) = space_a();
        let r = SoftSet::absolute(&a).restrict(&["h"]).unwrap();
        assert!(r.is_absolute());
        assert!(SoftSet::null(&a).restrict(&["h"]).unwrap().is_null());

        let ab = sig(&["a", "b"], &["e1", "e2"]);
        let f = SoftSet::from_sections(&ab, &[&["a", "b"], &["b"]]).unwrap();
        let r = f.restrict(&["a"]).unwrap();
        assert_eq!(r.signature().points(), ["a"]);
        assert_eq!(r.to_string(), "⟨a|∅⟩");
        let none: [&str; 0] = [];
        assert_eq!(f.restrict(&none), Err(Error::EmptySubset));
    }

    #[test]
    fn general_combination() {
        let s = sig(&["h"], &["e1", "e2"]);
        let h: &[&str] = &["h"];
        let o: &[&str] = &[];
        let f = PartialSoftSet::new(&s, &[("e1", h)]).unwrap();
        let g = PartialSoftSet::new(&s, &[("e2", h)]).unwrap();
        let u = f.combine(&g, CombineMode::Union).unwrap();
        assert_eq!(u.domain(), vec![0, 1]);
        assert_eq!(u.to_total().unwrap(), SoftSet::absolute(&s));
        assert_eq!(
            f.combine(&g, CombineMode::Intersection),
            Err(Error::DisjointDomains)
        );

        let f = PartialSoftSet::new(&s, &[("e1", h), ("e2", o)]).unwrap();
        let g = PartialSoftSet::new(&s, &[("e2", h)]).unwrap();
        let u = f.combine(&g, CombineMode::Union).unwrap();
        assert_eq!(u.to_total().unwrap(), SoftSet::absolute(&s));
        let i = f.combine(&g, CombineMode::Intersection).unwrap();
        assert_eq!(i.domain(), vec![1]);
        assert_eq!(i.section(1), Some(0));
        assert_eq!(i.section(0), None);
    }

    #[test]
    fn canonical_order_bounds() {
        let (a, f1, f2) = space_a();
        let mut v = vec![
            SoftSet::absolute(&a),
            f2.clone(),
            SoftSet::null(&a),
            f1.clone(),
        ];
        v.sort();
        assert_eq!(v, vec![SoftSet::null(&a), f1, f2, SoftSet::absolute(&a)]);
    }
}
