//! Separation deciders against the literal definitions, quantifying over
//! every pair of open sets.

use softtop::search::{relabel, sweep, PropertyId, Relabeling, SearchBudget};
use softtop::separation::{check_axiom, points_closed, wkm_condition, AxiomId, NonMembershipForm};
use softtop::{SoftTopology, Witness};

fn member(cells: u64, point_cells: u64) -> bool {
    cells & point_cells == point_cells
}

struct Oracle<'a> {
    t: &'a SoftTopology,
}

impl Oracle<'_> {
    fn pc(&self, x: usize) -> u64 {
        self.t.signature().point_cells(x)
    }

    fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.t.signature().n_points();
        (0..n)
            .flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)))
            .collect()
    }

    /// Some open contains x and does not contain y.
    fn nbhd_without(&self, x: usize, y: usize) -> bool {
        self.t
            .open_cells()
            .iter()
            .any(|&f| member(f, self.pc(x)) && !member(f, self.pc(y)))
    }

    fn t0(&self) -> bool {
        self.pairs()
            .iter()
            .all(|&(x, y)| self.nbhd_without(x, y) || self.nbhd_without(y, x))
    }

    fn t1(&self) -> bool {
        self.pairs().iter().all(|&(x, y)| self.nbhd_without(x, y))
    }

    fn separated(&self, left: impl Fn(u64) -> bool, right: impl Fn(u64) -> bool) -> bool {
        let open = self.t.open_cells();
        open.iter()
            .any(|&f| left(f) && open.iter().any(|&g| right(g) && f & g == 0))
    }

    fn t2(&self) -> bool {
        self.pairs()
            .iter()
            .all(|&(x, y)| self.separated(|f| member(f, self.pc(x)), |g| member(g, self.pc(y))))
    }

    fn regular(&self, form: NonMembershipForm) -> bool {
        let sig = self.t.signature();
        (0..sig.n_points()).all(|x| {
            self.t.closed_cells().iter().all(|&g| {
                let qualifies = match form {
                    NonMembershipForm::NotMember => !member(g, self.pc(x)),
                    NonMembershipForm::PointDisjoint => g & self.pc(x) == 0,
                };
                !qualifies || self.separated(|f| member(f, self.pc(x)), |h| g & !h == 0)
            })
        })
    }

    fn normal(&self) -> bool {
        let closed = self.t.closed_cells();
        closed.iter().all(|&f| {
            closed
                .iter()
                .all(|&g| f & g != 0 || self.separated(|u| f & !u == 0, |v| g & !v == 0))
        })
    }

    fn points_closed(&self) -> bool {
        (0..self.t.signature().n_points()).all(|x| self.t.closed_cells().contains(&self.pc(x)))
    }
}

fn spaces() -> Vec<SoftTopology> {
    let mut out = sweep(&SearchBudget::exhaustive(2, 2)).unwrap();
    for (p, e) in [(3, 1), (1, 4), (3, 2)] {
        let budget = if p * e <= 4 {
            SearchBudget::exhaustive(p, e)
        } else {
            SearchBudget::random(p, e, 150, 11)
        };
        out.extend(
            sweep(&budget)
                .unwrap()
                .into_iter()
                .filter(|t| t.signature().n_points() == p && t.signature().n_params() == e),
        );
    }
    out
}

#[test]
fn deciders_agree_with_definitions() {
    let all = spaces();
    assert!(all.len() > 152, "{}", all.len());
    for t in &all {
        let o = Oracle { t };
        let t1 = o.t1();
        let reg = o.regular(NonMembershipForm::NotMember);
        let normal = o.normal();
        let cases = [
            (AxiomId::T0, o.t0()),
            (AxiomId::T1, t1),
            (AxiomId::T2, o.t2()),
            (AxiomId::Regular, reg),
            (AxiomId::T3, reg && t1),
            (AxiomId::Normal, normal),
            (AxiomId::T4, normal && t1),
        ];
        for (axiom, want) in cases {
            assert_eq!(check_axiom(t, axiom).holds, want, "{axiom} on {t:?}");
        }
        assert_eq!(
            wkm_condition(t, NonMembershipForm::PointDisjoint).holds,
            o.regular(NonMembershipForm::PointDisjoint)
        );
        assert_eq!(points_closed(t).holds, o.points_closed());
    }
}

#[test]
fn separation_witnesses_replay() {
    for t in spaces() {
        for axiom in AxiomId::ALL {
            let v = check_axiom(&t, axiom);
            if let Witness::Separations(seps) = &v.witness {
                for s in seps {
                    assert!(t.is_open_cells(s.left_open.cells()));
                    assert!(t.is_open_cells(s.right_open.cells()));
                    assert!(s.left.is_subset(&s.left_open).unwrap());
                    assert!(s.right.is_subset(&s.right_open).unwrap());
                    assert!(s.left_open.intersection(&s.right_open).unwrap().is_null());
                }
            }
        }
    }
}

#[test]
fn point_disjoint_form_is_weaker() {
    for t in spaces() {
        if check_axiom(&t, AxiomId::Regular).holds {
            assert!(wkm_condition(&t, NonMembershipForm::PointDisjoint).holds);
        }
    }
}

#[test]
fn properties_are_invariant_under_relabeling() {
    for t in sweep(&SearchBudget::exhaustive(2, 2)).unwrap() {
        for r in Relabeling::all(t.signature()) {
            let u = relabel(&t, &r);
            for p in PropertyId::ALL {
                assert_eq!(p.decide(&t).holds, p.decide(&u).holds, "{p}");
            }
        }
    }
}
