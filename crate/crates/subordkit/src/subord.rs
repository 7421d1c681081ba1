//! Subordination relations between finite boolean algebras.
//!
//! A subordination is a relation `S ⊆ A × B` with `0 S 0`, `1 S 1`, closed
//! under joins on the left (S2), meets on the right (S3), and weakening
//! (S4). An endo-subordination additionally satisfying `a S b ⇒ a ≤ b` (S5),
//! `a S b ⇒ ¬b S ¬a` (S6), and interpolation (S7) makes the algebra an
//! S5-subordination algebra; density (S8) upgrades it to a compingent
//! algebra, and at finite size every compingent algebra is de Vries.
//!
//! Axiom checking is exhaustive over the carriers, never sampled, and every
//! failure carries the lexicographically least witness.

use std::collections::BTreeSet;

use crate::bitrel::BitRel;
use crate::boolcore::{format_elem, lex_cmp, BoolAlg, ElemFamily};
use crate::duality::PointRelation;
use crate::partition::Partition;
use crate::Error;

/// Default cap (in atoms) for exhaustive axiom scans.
pub const DEFAULT_AXIOM_CAP: u32 = 5;

/// Cap for constructors that must scan element tuples to validate their
/// input (S5-subordination algebras, de Vries maps). One above the axiom
/// scan default so six-point partitions remain constructible.
pub const RELATION_SCAN_CAP: u32 = 6;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subordination {
    dom: BoolAlg,
    cod: BoolAlg,
    rel: BitRel,
}

impl Subordination {
    pub fn empty(dom: BoolAlg, cod: BoolAlg) -> Self {
        Self {
            dom,
            cod,
            rel: BitRel::new(dom.size(), cod.size()),
        }
    }

    pub fn from_pairs(
        dom: BoolAlg,
        cod: BoolAlg,
        pairs: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Self, Error> {
        let mut s = Self::empty(dom, cod);
        for (a, b) in pairs {
            dom.check_elem(a)?;
            cod.check_elem(b)?;
            s.rel.set(a as usize, b as usize, true);
        }
        Ok(s)
    }

    pub fn from_rel(dom: BoolAlg, cod: BoolAlg, rel: BitRel) -> Result<Self, Error> {
        if rel.rows() != dom.size() || rel.cols() != cod.size() {
            return Err(Error::Shape(format!(
                "relation is {}x{}, algebras need {}x{}",
                rel.rows(),
                rel.cols(),
                dom.size(),
                cod.size()
            )));
        }
        Ok(Self { dom, cod, rel })
    }

    /// The order relation `≤` as an endo-subordination on `alg`.
    pub fn leq_on(alg: BoolAlg) -> Self {
        let mut s = Self::empty(alg, alg);
        for a in alg.carrier() {
            for b in alg.carrier() {
                if alg.leq(a, b) {
                    s.rel.set(a as usize, b as usize, true);
                }
            }
        }
        s
    }

    pub fn dom(&self) -> &BoolAlg {
        &self.dom
    }

    pub fn cod(&self) -> &BoolAlg {
        &self.cod
    }

    pub fn rel(&self) -> &BitRel {
        &self.rel
    }

    pub fn is_endo(&self) -> bool {
        self.dom == self.cod
    }

    pub fn holds(&self, a: u32, b: u32) -> bool {
        self.rel.get(a as usize, b as usize)
    }

    /// `T[a] = {b | a T b}`.
    pub fn targets(&self, a: u32) -> impl Iterator<Item = u32> + '_ {
        self.cod.carrier().filter(move |&b| self.holds(a, b))
    }

    /// `T⁻¹[b] = {a | a T b}`.
    pub fn sources(&self, b: u32) -> impl Iterator<Item = u32> + '_ {
        self.dom.carrier().filter(move |&a| self.holds(a, b))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.rel.iter_pairs().map(|(a, b)| (a as u32, b as u32))
    }

    /// Pairs in canonical order: lexicographic by (element order of a, of b).
    pub fn canonical_pairs(&self) -> Vec<(u32, u32)> {
        let mut v: Vec<(u32, u32)> = self.pairs().collect();
        v.sort_by(|x, y| lex_cmp(x.0, y.0).then(lex_cmp(x.1, y.1)));
        v
    }

    /// `T[X] = {b | ∃ a ∈ X, a T b}` for a set of domain elements.
    pub fn image_set(&self, xs: &BTreeSet<u32>) -> BTreeSet<u32> {
        self.cod
            .carrier()
            .filter(|&b| xs.iter().any(|&a| self.holds(a, b)))
            .collect()
    }

    /// `T⁻¹[X] = {a | ∃ b ∈ X, a T b}` for a set of codomain elements.
    pub fn preimage_set(&self, xs: &BTreeSet<u32>) -> BTreeSet<u32> {
        self.dom
            .carrier()
            .filter(|&a| xs.iter().any(|&b| self.holds(a, b)))
            .collect()
    }

    /// Relation composition: `self : B1 -> B2`, `then : B2 -> B3`, giving
    /// `a (then ∘ self) c` iff `a self b` and `b then c` for some `b`.
    pub fn compose(&self, then: &Subordination) -> Result<Subordination, Error> {
        if self.cod != then.dom {
            return Err(Error::AlgebraMismatch {
                expected: self.cod.n_atoms(),
                got: then.dom.n_atoms(),
            });
        }
        Ok(Subordination {
            dom: self.dom,
            cod: then.cod,
            rel: self.rel.compose(&then.rel),
        })
    }

    pub fn converse(&self) -> Subordination {
        Subordination {
            dom: self.cod,
            cod: self.dom,
            rel: self.rel.converse(),
        }
    }

    /// `b T~ a` iff `¬a T ¬b`.
    pub fn tilde_inverse(&self) -> Subordination {
        let mut rel = BitRel::new(self.cod.size(), self.dom.size());
        for b in self.cod.carrier() {
            for a in self.dom.carrier() {
                if self.holds(self.dom.complement(a), self.cod.complement(b)) {
                    rel.set(b as usize, a as usize, true);
                }
            }
        }
        Subordination {
            dom: self.cod,
            cod: self.dom,
            rel,
        }
    }

    /// Exhaustive axiom scan with the default atom cap.
    pub fn check_axioms(&self) -> Result<AxiomReport, Error> {
        self.check_axioms_capped(DEFAULT_AXIOM_CAP)
    }

    pub fn check_axioms_capped(&self, cap: u32) -> Result<AxiomReport, Error> {
        let worst = self.dom.n_atoms().max(self.cod.n_atoms());
        if worst > cap {
            return Err(Error::CapExceeded {
                what: "axiom scan",
                limit: cap,
                got: worst,
            });
        }
        Ok(self.scan_axioms())
    }

    fn scan_axioms(&self) -> AxiomReport {
        let dom = &self.dom;
        let cod = &self.cod;
        let dlex = dom.lex_carrier();
        let clex = cod.lex_carrier();

        let s1 = if self.holds(0, 0) && self.holds(dom.top(), cod.top()) {
            AxiomStatus::Pass
        } else if !self.holds(0, 0) {
            AxiomStatus::fail([0, 0])
        } else {
            AxiomStatus::fail([dom.top(), cod.top()])
        };

        let mut s2 = AxiomStatus::Pass;
        'outer2: for &a in &dlex {
            for &b in &dlex {
                for &c in &clex {
                    if self.holds(a, c) && self.holds(b, c) && !self.holds(dom.join(a, b), c) {
                        s2 = AxiomStatus::fail([a, b, c]);
                        break 'outer2;
                    }
                }
            }
        }

        let mut s3 = AxiomStatus::Pass;
        'outer3: for &a in &dlex {
            for &c in &clex {
                for &d in &clex {
                    if self.holds(a, c) && self.holds(a, d) && !self.holds(a, cod.meet(c, d)) {
                        s3 = AxiomStatus::fail([a, c, d]);
                        break 'outer3;
                    }
                }
            }
        }

        let mut s4 = AxiomStatus::Pass;
        'outer4: for &a in &dlex {
            for &b in &dlex {
                if !dom.leq(a, b) {
                    continue;
                }
                for &c in &clex {
                    if !self.holds(b, c) {
                        continue;
                    }
                    for &d in &clex {
                        if cod.leq(c, d) && !self.holds(a, d) {
                            s4 = AxiomStatus::fail([a, b, c, d]);
                            break 'outer4;
                        }
                    }
                }
            }
        }

        let (s5, s6, s7, s8);
        if self.is_endo() {
            let mut st = AxiomStatus::Pass;
            'l5: for &a in &dlex {
                for &b in &dlex {
                    if self.holds(a, b) && !dom.leq(a, b) {
                        st = AxiomStatus::fail([a, b]);
                        break 'l5;
                    }
                }
            }
            s5 = st;

            let mut st = AxiomStatus::Pass;
            'l6: for &a in &dlex {
                for &b in &dlex {
                    if self.holds(a, b) && !self.holds(dom.complement(b), dom.complement(a)) {
                        st = AxiomStatus::fail([a, b]);
                        break 'l6;
                    }
                }
            }
            s6 = st;

            let mut st = AxiomStatus::Pass;
            'l7: for &a in &dlex {
                for &b in &dlex {
                    if self.holds(a, b)
                        && !dom.carrier().any(|c| self.holds(a, c) && self.holds(c, b))
                    {
                        st = AxiomStatus::fail([a, b]);
                        break 'l7;
                    }
                }
            }
            s7 = st;

            let mut st = AxiomStatus::Pass;
            for &a in &dlex {
                if a != 0 && !dom.carrier().any(|b| b != 0 && self.holds(b, a)) {
                    st = AxiomStatus::fail([a]);
                    break;
                }
            }
            s8 = st;
        } else {
            s5 = AxiomStatus::NotApplicable;
            s6 = AxiomStatus::NotApplicable;
            s7 = AxiomStatus::NotApplicable;
            s8 = AxiomStatus::NotApplicable;
        }

        AxiomReport {
            s1,
            s2,
            s3,
            s4,
            s5,
            s6,
            s7,
            s8,
        }
    }

    /// Is `T` compatible with the endo-relations `s1` (on its domain) and
    /// `s2` (on its codomain), i.e. `S2 ∘ T = T = T ∘ S1`?
    pub fn is_compatible(
        &self,
        s1: &Subordination,
        s2: &Subordination,
    ) -> Result<CompatReport, Error> {
        if !s1.is_endo() || s1.dom != self.dom {
            return Err(Error::Precondition(
                "first relation must be an endo-relation on the domain".into(),
            ));
        }
        if !s2.is_endo() || s2.dom != self.cod {
            return Err(Error::Precondition(
                "second relation must be an endo-relation on the codomain".into(),
            ));
        }
        let left = self.compose(s2)?; // S2 ∘ T
        let right = s1.compose(self)?; // T ∘ S1
        let left_w = first_rel_diff(&self.dom, &self.cod, &left.rel, &self.rel);
        let right_w = first_rel_diff(&self.dom, &self.cod, &right.rel, &self.rel);
        Ok(CompatReport {
            left_witness: left_w,
            right_witness: right_w,
        })
    }

    /// Compute the profile flags by exhaustive scan.
    pub fn profile(&self) -> Result<Profile, Error> {
        let report = self.check_axioms()?;
        Ok(report.profile())
    }
}

/// First pair (in lexicographic element order) on which two same-shape
/// relations differ.
fn first_rel_diff(dom: &BoolAlg, cod: &BoolAlg, a: &BitRel, b: &BitRel) -> Option<(u32, u32)> {
    if a == b {
        return None;
    }
    for x in dom.lex_carrier() {
        for y in cod.lex_carrier() {
            if a.get(x as usize, y as usize) != b.get(x as usize, y as usize) {
                return Some((x, y));
            }
        }
    }
    None
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AxiomStatus {
    Pass,
    Fail(Vec<u32>),
    NotApplicable,
}

impl AxiomStatus {
    fn fail(witness: impl IntoIterator<Item = u32>) -> Self {
        AxiomStatus::Fail(witness.into_iter().collect())
    }

    pub fn passed(&self) -> bool {
        !matches!(self, AxiomStatus::Fail(_))
    }

    pub fn describe(&self) -> String {
        match self {
            AxiomStatus::Pass => "pass".into(),
            AxiomStatus::NotApplicable => "n/a".into(),
            AxiomStatus::Fail(w) => {
                let elems: Vec<String> = w.iter().map(|&m| format_elem(m)).collect();
                format!("FAIL at ({})", elems.join(", "))
            }
        }
    }
}

/// Per-axiom verdicts of the exhaustive scan. S5-S8 are reported only for
/// endo-relations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AxiomReport {
    pub s1: AxiomStatus,
    pub s2: AxiomStatus,
    pub s3: AxiomStatus,
    pub s4: AxiomStatus,
    pub s5: AxiomStatus,
    pub s6: AxiomStatus,
    pub s7: AxiomStatus,
    pub s8: AxiomStatus,
}

impl AxiomReport {
    pub fn statuses(&self) -> [(&'static str, &AxiomStatus); 8] {
        [
            ("S1", &self.s1),
            ("S2", &self.s2),
            ("S3", &self.s3),
            ("S4", &self.s4),
            ("S5", &self.s5),
            ("S6", &self.s6),
            ("S7", &self.s7),
            ("S8", &self.s8),
        ]
    }

    pub fn is_subordination(&self) -> bool {
        self.s1.passed() && self.s2.passed() && self.s3.passed() && self.s4.passed()
    }

    pub fn is_s5(&self) -> bool {
        self.is_subordination()
            && self.s5 == AxiomStatus::Pass
            && self.s6 == AxiomStatus::Pass
            && self.s7 == AxiomStatus::Pass
    }

    pub fn is_compingent(&self) -> bool {
        self.is_s5() && self.s8 == AxiomStatus::Pass
    }

    pub fn profile(&self) -> Profile {
        Profile {
            subordination: self.is_subordination(),
            s5: self.is_s5(),
            compingent: self.is_compingent(),
            // finite carriers are complete, so compingent implies de Vries
            de_vries: self.is_compingent(),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.statuses().iter().all(|(_, s)| s.passed())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Profile {
    pub subordination: bool,
    pub s5: bool,
    pub compingent: bool,
    pub de_vries: bool,
}

/// Result of a compatibility check; `ok()` iff both equations hold.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompatReport {
    /// First pair where `S2 ∘ T` differs from `T`, if any.
    pub left_witness: Option<(u32, u32)>,
    /// First pair where `T ∘ S1` differs from `T`, if any.
    pub right_witness: Option<(u32, u32)>,
}

impl CompatReport {
    pub fn ok(&self) -> bool {
        self.left_witness.is_none() && self.right_witness.is_none()
    }
}

/// A boolean algebra with a validated S5-subordination on it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubAlgebra {
    alg: BoolAlg,
    s: Subordination,
}

impl SubAlgebra {
    pub fn new(s: Subordination) -> Result<Self, Error> {
        if !s.is_endo() {
            return Err(Error::Precondition(
                "an S5-subordination algebra needs an endo-relation".into(),
            ));
        }
        let report = s.check_axioms_capped(RELATION_SCAN_CAP)?;
        if !report.is_s5() {
            let failing: Vec<String> = report
                .statuses()
                .iter()
                .take(7)
                .filter(|(_, st)| !st.passed())
                .map(|(name, st)| format!("{name} {}", st.describe()))
                .collect();
            return Err(Error::Precondition(format!(
                "relation is not an S5-subordination: {}",
                failing.join("; ")
            )));
        }
        Ok(Self { alg: *s.dom(), s })
    }

    /// The discrete S5-subordination algebra `(P(k), ≤)`; at finite size
    /// these are exactly the de Vries algebras.
    pub fn discrete(alg: BoolAlg) -> Self {
        Self {
            alg,
            s: Subordination::leq_on(alg),
        }
    }

    pub fn alg(&self) -> &BoolAlg {
        &self.alg
    }

    pub fn s(&self) -> &Subordination {
        &self.s
    }

    /// `S⁻¹[↓b] = {a | a S b}` as a member set (always a round ideal).
    pub fn s_preimage_of_elem(&self, b: u32) -> BTreeSet<u32> {
        self.s.sources(b).collect()
    }
}

/// The raw relation `U S_E V` iff `E[U] ⊆ V` on `P(points)`; no axiom scan
/// is run, so this is usable at parse time and at any supported size.
pub fn s_e_relation(e: &Partition) -> Result<Subordination, Error> {
    let alg = BoolAlg::new(e.points() as u32)?;
    let mut s = Subordination::empty(alg, alg);
    for u in alg.carrier() {
        let eu = e.saturate(u);
        for v in alg.carrier() {
            if eu & !v == 0 {
                s.rel.set(u as usize, v as usize, true);
            }
        }
    }
    Ok(s)
}

/// The subordination `S_E` on `P(k)` induced by a partition `E` of the
/// atoms, validated as an S5-subordination algebra. It satisfies S8 iff
/// `E` is the identity partition.
pub fn from_equivalence(e: &Partition) -> Result<SubAlgebra, Error> {
    SubAlgebra::new(s_e_relation(e)?)
}

/// The subordination `S_R` between `P(|X1|)` and `P(|X2|)` induced by a
/// compatible point relation: `U S_R V` iff `R[U] ⊆ V`. Rejects relations
/// that are not compatible with the space partitions.
pub fn from_closed_relation(r: &PointRelation) -> Result<Subordination, Error> {
    if let Some((p, q)) = r.compatibility_witness() {
        return Err(Error::Precondition(format!(
            "point relation is not compatible: saturation differs at ({p},{q})"
        )));
    }
    let dom = BoolAlg::new(r.dom().points() as u32)?;
    let cod = BoolAlg::new(r.cod().points() as u32)?;
    let mut s = Subordination::empty(dom, cod);
    for u in dom.carrier() {
        let ru = r.image(u);
        for v in cod.carrier() {
            if ru & !v == 0 {
                s.rel.set(u as usize, v as usize, true);
            }
        }
    }
    Ok(s)
}

/// Lemma under test across the crate: `¬S[X] = S⁻¹[¬X]` for any family `X`
/// over an S5-subordination algebra.
pub fn neg_image_law_holds(b: &SubAlgebra, x: &ElemFamily) -> bool {
    let image = b.s.image_set(x.members());
    let neg_image: BTreeSet<u32> = image.iter().map(|&m| b.alg.complement(m)).collect();
    let neg_x: BTreeSet<u32> = x.members().iter().map(|&m| b.alg.complement(m)).collect();
    let pre_neg = b.s.preimage_set(&neg_x);
    neg_image == pre_neg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolcore::FamilyKind;

    fn p3_classes01_2() -> SubAlgebra {
        let e = Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap();
        from_equivalence(&e).unwrap()
    }

    #[test]
    fn leq_is_de_vries_on_one_atom() {
        let alg = BoolAlg::new(1).unwrap();
        let s = Subordination::leq_on(alg);
        let report = s.check_axioms().unwrap();
        assert!(report.all_passed());
        assert!(report.profile().de_vries);
    }

    #[test]
    fn s_e_profile_three_atoms() {
        let b = p3_classes01_2();
        let report = b.s().check_axioms().unwrap();
        assert!(report.is_s5());
        // S8 fails, and the least witness in lexicographic order is {0}
        assert_eq!(report.s8, AxiomStatus::Fail(vec![0b001]));
    }

    #[test]
    fn empty_relation_fails_s1() {
        let alg = BoolAlg::new(1).unwrap();
        let s = Subordination::empty(alg, alg);
        let report = s.check_axioms().unwrap();
        assert_eq!(report.s1, AxiomStatus::Fail(vec![0, 0]));
    }

    #[test]
    fn s_compose_s_is_s() {
        for e in crate::partition::all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            let ss = b.s().compose(b.s()).unwrap();
            assert_eq!(&ss, b.s());
        }
    }

    #[test]
    fn from_closed_relation_examples() {
        use crate::duality::{FinSubSpace, PointRelation};
        // identity relation on discrete spaces induces the order
        let x = FinSubSpace::identity(2);
        let r = PointRelation::identity(&x);
        let s = from_closed_relation(&r).unwrap();
        assert_eq!(s, Subordination::leq_on(BoolAlg::new(2).unwrap()));

        // total relation from a one-class pair to a point:
        // U S_R V iff U = 0 or V = 1
        let x1 = FinSubSpace::new(Partition::single_class(2));
        let x2 = FinSubSpace::identity(1);
        let total = PointRelation::new(x1.clone(), x2.clone(), [(0, 0), (1, 0)]).unwrap();
        let s = from_closed_relation(&total).unwrap();
        for u in s.dom().carrier() {
            for v in s.cod().carrier() {
                assert_eq!(s.holds(u, v), u == 0 || v == 1);
            }
        }

        // the empty relation induces the total subordination
        let empty = PointRelation::new(x1.clone(), x2.clone(), []).unwrap();
        let s = from_closed_relation(&empty).unwrap();
        assert_eq!(s.rel().count(), s.dom().size() * s.cod().size());

        // incompatible relations are rejected with a witness
        let skew = PointRelation::new(x1, x2, [(0, 0)]).unwrap();
        assert!(from_closed_relation(&skew).is_err());
    }

    #[test]
    fn compose_with_empty_is_empty() {
        let alg = BoolAlg::new(2).unwrap();
        let s = Subordination::leq_on(alg);
        let empty = Subordination::empty(alg, alg);
        assert_eq!(s.compose(&empty).unwrap(), empty);
    }

    #[test]
    fn leq_composes_to_leq() {
        let alg = BoolAlg::new(2).unwrap();
        let s = Subordination::leq_on(alg);
        assert_eq!(s.compose(&s).unwrap(), s);
    }

    #[test]
    fn tilde_inverse_of_leq_is_leq() {
        for n in 1..=3 {
            let alg = BoolAlg::new(n).unwrap();
            let s = Subordination::leq_on(alg);
            assert_eq!(s.tilde_inverse(), s);
        }
    }

    #[test]
    fn tilde_inverse_involution_and_s_e_selfdual() {
        for e in crate::partition::all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            assert_eq!(&b.s().tilde_inverse(), b.s());
            assert_eq!(b.s().tilde_inverse().tilde_inverse(), *b.s());
        }
        // involution also on a non-endo relation
        let dom = BoolAlg::new(2).unwrap();
        let cod = BoolAlg::new(1).unwrap();
        let t = Subordination::from_pairs(dom, cod, [(0, 0), (0, 1), (3, 1)]).unwrap();
        assert_eq!(t.tilde_inverse().tilde_inverse(), t);
    }

    #[test]
    fn identity_law_compatibility() {
        let b = p3_classes01_2();
        let report = b.s().is_compatible(b.s(), b.s()).unwrap();
        assert!(report.ok());

        let alg = BoolAlg::new(1).unwrap();
        let leq = Subordination::leq_on(alg);
        assert!(leq.is_compatible(&leq, &leq).unwrap().ok());
    }

    #[test]
    fn equality_graph_not_compatible_with_total_class() {
        // T = identity relation on P({0,1}); S = S_E with one class.
        let alg = BoolAlg::new(2).unwrap();
        let t = Subordination::from_rel(alg, alg, BitRel::identity(4)).unwrap();
        let e = Partition::single_class(2);
        let s = from_equivalence(&e).unwrap();
        let report = t.is_compatible(s.s(), s.s()).unwrap();
        assert!(!report.ok());
        assert!(report.left_witness.is_some() || report.right_witness.is_some());
    }

    #[test]
    fn from_equivalence_examples() {
        // identity partition gives ≤
        let e = Partition::identity(2);
        let b = from_equivalence(&e).unwrap();
        assert_eq!(b.s(), &Subordination::leq_on(*b.alg()));

        // one class on two atoms: {0} S_E V iff {0,1} ⊆ V
        let e = Partition::single_class(2);
        let b = from_equivalence(&e).unwrap();
        for v in b.alg().carrier() {
            assert_eq!(b.s().holds(0b01, v), v == 0b11);
        }

        // classes {0,1},{2}: exactly the saturated elements are reflexive
        let b = p3_classes01_2();
        let reflexive: Vec<u32> = b.alg().carrier().filter(|&a| b.s().holds(a, a)).collect();
        assert_eq!(reflexive, vec![0b000, 0b011, 0b100, 0b111]);
    }

    #[test]
    fn s8_iff_identity_partition() {
        for k in 1..=4 {
            for e in crate::partition::all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let report = b.s().check_axioms().unwrap();
                assert_eq!(report.s8 == AxiomStatus::Pass, e.is_identity());
            }
        }
    }

    #[test]
    fn neg_image_law_exhaustive_n2() {
        for e in crate::partition::all_partitions(2).unwrap() {
            let b = from_equivalence(&e).unwrap();
            for subset in 0u32..16 {
                let members: BTreeSet<u32> = (0..4u32).filter(|&m| subset >> m & 1 == 1).collect();
                let x = ElemFamily::new(*b.alg(), members, FamilyKind::Raw).unwrap();
                assert!(neg_image_law_holds(&b, &x));
            }
        }
    }

    #[test]
    fn mismatched_compose_rejected() {
        let a = BoolAlg::new(2).unwrap();
        let b = BoolAlg::new(3).unwrap();
        let s = Subordination::leq_on(a);
        let t = Subordination::leq_on(b);
        assert!(s.compose(&t).is_err());
    }

    #[test]
    fn axiom_cap_enforced() {
        let alg = BoolAlg::new(6).unwrap();
        let s = Subordination::leq_on(alg);
        assert!(s.check_axioms().is_err());
        assert!(s.check_axioms_capped(6).is_ok());
    }
}
