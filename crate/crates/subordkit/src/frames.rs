//! Finite frames (finite distributive lattices) and maps between them.
//!
//! A finite frame is stored as an explicit order matrix with derived meet
//! and join tables. Validation checks the partial-order, lattice, and
//! distributivity laws and reports counterexample triples; completeness and
//! compactness are automatic at finite size and recorded, not checked.

use crate::bitrel::BitRel;
use crate::boolcore::BoolAlg;
use crate::subord::{SubAlgebra, Subordination};
use crate::Error;

/// Outcome of validating a candidate order matrix as a finite frame.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct FrameReport {
    /// Reflexivity/antisymmetry/transitivity violation, if any.
    pub order_violation: Option<(usize, usize, usize)>,
    /// Pair with no greatest lower bound.
    pub missing_meet: Option<(usize, usize)>,
    /// Pair with no least upper bound.
    pub missing_join: Option<(usize, usize)>,
    /// Missing bottom or top.
    pub unbounded: Option<&'static str>,
    /// Triple violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`.
    pub distributivity_violation: Option<(usize, usize, usize)>,
}

impl FrameReport {
    pub fn is_valid(&self) -> bool {
        self.order_violation.is_none()
            && self.missing_meet.is_none()
            && self.missing_join.is_none()
            && self.unbounded.is_none()
            && self.distributivity_violation.is_none()
    }

    pub fn describe(&self) -> String {
        if self.is_valid() {
            return "valid finite frame".into();
        }
        let mut parts = Vec::new();
        if let Some((a, b, c)) = self.order_violation {
            parts.push(format!("order violation at ({a},{b},{c})"));
        }
        if let Some((a, b)) = self.missing_meet {
            parts.push(format!("no meet for ({a},{b})"));
        }
        if let Some((a, b)) = self.missing_join {
            parts.push(format!("no join for ({a},{b})"));
        }
        if let Some(which) = self.unbounded {
            parts.push(format!("missing {which}"));
        }
        if let Some((a, b, c)) = self.distributivity_violation {
            parts.push(format!("distributivity fails at ({a},{b},{c})"));
        }
        parts.join("; ")
    }
}

/// Validate an order matrix: partial order, all binary meets/joins, bounds,
/// and distributivity. Returns the report rather than failing.
pub fn validate_order(leq: &BitRel) -> FrameReport {
    let n = leq.rows();
    let mut report = FrameReport::default();
    if n == 0 || leq.cols() != n {
        report.unbounded = Some("carrier");
        return report;
    }
    // reflexivity (a,a,a), antisymmetry (a,b,b), transitivity (a,b,c)
    'order: for a in 0..n {
        if !leq.get(a, a) {
            report.order_violation = Some((a, a, a));
            break;
        }
        for b in 0..n {
            if a != b && leq.get(a, b) && leq.get(b, a) {
                report.order_violation = Some((a, b, b));
                break 'order;
            }
            for c in 0..n {
                if leq.get(a, b) && leq.get(b, c) && !leq.get(a, c) {
                    report.order_violation = Some((a, b, c));
                    break 'order;
                }
            }
        }
    }
    if report.order_violation.is_some() {
        return report;
    }
    let meet = compute_meets(leq);
    let join = compute_joins(leq);
    'mj: for a in 0..n {
        for b in 0..n {
            if meet[a * n + b].is_none() {
                report.missing_meet = Some((a, b));
                break 'mj;
            }
            if join[a * n + b].is_none() {
                report.missing_join = Some((a, b));
                break 'mj;
            }
        }
    }
    if report.missing_meet.is_some() || report.missing_join.is_some() {
        return report;
    }
    if (0..n).find(|&b| (0..n).all(|x| leq.get(b, x))).is_none() {
        report.unbounded = Some("bottom");
        return report;
    }
    if (0..n).find(|&t| (0..n).all(|x| leq.get(x, t))).is_none() {
        report.unbounded = Some("top");
        return report;
    }
    let m = |a: usize, b: usize| meet[a * n + b].unwrap();
    let j = |a: usize, b: usize| join[a * n + b].unwrap();
    'dist: for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m(a, j(b, c)) != j(m(a, b), m(a, c)) {
                    report.distributivity_violation = Some((a, b, c));
                    break 'dist;
                }
            }
        }
    }
    report
}

fn compute_meets(leq: &BitRel) -> Vec<Option<usize>> {
    let n = leq.rows();
    let mut table = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&x| leq.get(x, a) && leq.get(x, b)).collect();
            table[a * n + b] = lower
                .iter()
                .copied()
                .find(|&g| lower.iter().all(|&x| leq.get(x, g)));
        }
    }
    table
}

fn compute_joins(leq: &BitRel) -> Vec<Option<usize>> {
    let n = leq.rows();
    let mut table = vec![None; n * n];
    for a in 0..n {
        for b in 0..n {
            let upper: Vec<usize> = (0..n).filter(|&x| leq.get(a, x) && leq.get(b, x)).collect();
            table[a * n + b] = upper
                .iter()
                .copied()
                .find(|&l| upper.iter().all(|&x| leq.get(l, x)));
        }
    }
    table
}

/// A validated finite frame.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinFrame {
    size: usize,
    leq: BitRel,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FinFrame {
    pub fn from_leq(leq: BitRel) -> Result<Self, Error> {
        let report = validate_order(&leq);
        if !report.is_valid() {
            return Err(Error::InvalidFrame(report.describe()));
        }
        let n = leq.rows();
        let meet = compute_meets(&leq)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        let join = compute_joins(&leq)
            .into_iter()
            .map(Option::unwrap)
            .collect();
        let bottom = (0..n).find(|&b| (0..n).all(|x| leq.get(b, x))).unwrap();
        let top = (0..n).find(|&t| (0..n).all(|x| leq.get(x, t))).unwrap();
        Ok(Self {
            size: n,
            leq,
            meet,
            join,
            bottom,
            top,
        })
    }

    /// The powerset frame `P(n)`, elements indexed by mask.
    pub fn powerset(n_atoms: u32) -> Self {
        let size = 1usize << n_atoms;
        let mut leq = BitRel::new(size, size);
        for a in 0..size {
            for b in 0..size {
                if a & !b == 0 {
                    leq.set(a, b, true);
                }
            }
        }
        Self::from_leq(leq).expect("powerset is a frame")
    }

    /// The `n`-element chain.
    pub fn chain(n: usize) -> Self {
        let mut leq = BitRel::new(n, n);
        for a in 0..n {
            for b in a..n {
                leq.set(a, b, true);
            }
        }
        Self::from_leq(leq).expect("chain is a frame")
    }

    /// Downset lattice of a finite poset given by its order matrix. Every
    /// finite distributive lattice arises this way, which makes this the
    /// workhorse generator for frame tests. Capped at 16 poset points.
    pub fn from_downsets(poset_leq: &BitRel) -> Result<Self, Error> {
        let k = poset_leq.rows();
        if k > 16 {
            return Err(Error::CapExceeded {
                what: "downset frame",
                limit: 16,
                got: k as u32,
            });
        }
        let report = validate_poset(poset_leq);
        if let Some(w) = report {
            return Err(Error::InvalidFrame(format!(
                "poset order violation at ({},{},{})",
                w.0, w.1, w.2
            )));
        }
        let mut downsets: Vec<u32> = Vec::new();
        'subsets: for s in 0u32..(1u32 << k) {
            for p in 0..k {
                if s >> p & 1 == 1 {
                    for q in 0..k {
                        if poset_leq.get(q, p) && s >> q & 1 == 0 {
                            continue 'subsets;
                        }
                    }
                }
            }
            downsets.push(s);
        }
        let n = downsets.len();
        let mut leq = BitRel::new(n, n);
        for (i, &a) in downsets.iter().enumerate() {
            for (j, &b) in downsets.iter().enumerate() {
                if a & !b == 0 {
                    leq.set(i, j, true);
                }
            }
        }
        Self::from_leq(leq)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq.get(a, b)
    }

    pub fn leq_matrix(&self) -> &BitRel {
        &self.leq
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.size + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.size + b]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Frames with one element are complete but degenerate (0 = 1); they are
    /// excluded from the regular-frame suites.
    pub fn is_degenerate(&self) -> bool {
        self.size == 1
    }

    pub fn join_of(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bottom, |a, x| self.join(a, x))
    }

    pub fn meet_of(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.top, |a, x| self.meet(a, x))
    }

    /// `a* = ⋁{x | a ∧ x = 0}`.
    pub fn pseudocomplement(&self, a: usize) -> usize {
        self.join_of((0..self.size).filter(|&x| self.meet(a, x) == self.bottom))
    }

    /// `a ≺ b` iff `a* ∨ b = 1`.
    pub fn well_inside(&self, a: usize, b: usize) -> bool {
        self.join(self.pseudocomplement(a), b) == self.top
    }

    /// `a = ⋁{x | x ≺ a}` for every element.
    pub fn is_regular(&self) -> bool {
        (0..self.size)
            .all(|a| self.join_of((0..self.size).filter(|&x| self.well_inside(x, a))) == a)
    }

    /// Every element has a complement.
    pub fn is_boolean(&self) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).any(|b| self.meet(a, b) == self.bottom && self.join(a, b) == self.top)
        })
    }

    pub fn double_pseudo(&self, a: usize) -> usize {
        self.pseudocomplement(self.pseudocomplement(a))
    }

    /// Nonzero elements that are not the join of strictly smaller elements.
    pub fn join_irreducibles(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| {
                x != self.bottom
                    && self.join_of((0..self.size).filter(|&y| y != x && self.leq(y, x))) != x
            })
            .collect()
    }

    pub fn atoms(&self) -> Vec<usize> {
        (0..self.size)
            .filter(|&x| {
                x != self.bottom
                    && (0..self.size).all(|y| !(self.leq(y, x) && y != x && y != self.bottom))
            })
            .collect()
    }

    /// Booleanization: the subframe of regular elements `{a | a = a**}` with
    /// inherited meets and joins recomputed as `(⋁ S)**`.
    pub fn booleanization(&self) -> Booleanization {
        let carrier: Vec<usize> = (0..self.size)
            .filter(|&a| self.double_pseudo(a) == a)
            .collect();
        let m = carrier.len();
        let mut leq = BitRel::new(m, m);
        for (i, &a) in carrier.iter().enumerate() {
            for (j, &b) in carrier.iter().enumerate() {
                if self.leq(a, b) {
                    leq.set(i, j, true);
                }
            }
        }
        let frame = FinFrame::from_leq(leq)
            .expect("regular elements form a boolean frame under the regularized join");
        let mut from_l = vec![None; self.size];
        for (i, &a) in carrier.iter().enumerate() {
            from_l[a] = Some(i);
        }
        Booleanization {
            frame,
            carrier,
            from_l,
        }
    }

    /// Deterministic relabeling by iterated refinement on (height of
    /// principal downset, sorted profile of keys below). Isomorphic frames
    /// presented with different labels get the same canonical order matrix
    /// whenever the refinement separates all elements; remaining ties are
    /// broken by input index.
    pub fn canonical_relabeling(&self) -> (FinFrame, Vec<usize>) {
        let n = self.size;
        let mut key: Vec<u64> = (0..n)
            .map(|a| (0..n).filter(|&x| self.leq(x, a)).count() as u64)
            .collect();
        for _ in 0..n {
            let mut next: Vec<(u64, Vec<u64>)> = (0..n)
                .map(|a| {
                    let mut below: Vec<u64> =
                        (0..n).filter(|&x| self.leq(x, a)).map(|x| key[x]).collect();
                    below.sort_unstable();
                    (key[a], below)
                })
                .collect();
            let mut sorted: Vec<(u64, Vec<u64>)> = next.clone();
            sorted.sort();
            sorted.dedup();
            let new_key: Vec<u64> = next
                .drain(..)
                .map(|k| sorted.binary_search(&k).unwrap() as u64)
                .collect();
            if new_key == key {
                break;
            }
            key = new_key;
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (key[a], a));
        let mut pos = vec![0usize; n];
        for (i, &a) in order.iter().enumerate() {
            pos[a] = i;
        }
        let mut leq = BitRel::new(n, n);
        for a in 0..n {
            for b in 0..n {
                if self.leq(a, b) {
                    leq.set(pos[a], pos[b], true);
                }
            }
        }
        (
            FinFrame::from_leq(leq).expect("relabeling preserves frame laws"),
            pos,
        )
    }
}

fn validate_poset(leq: &BitRel) -> Option<(usize, usize, usize)> {
    let n = leq.rows();
    for a in 0..n {
        if !leq.get(a, a) {
            return Some((a, a, a));
        }
        for b in 0..n {
            if a != b && leq.get(a, b) && leq.get(b, a) {
                return Some((a, b, b));
            }
            for c in 0..n {
                if leq.get(a, b) && leq.get(b, c) && !leq.get(a, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

/// Booleanization of a frame plus the inclusion of its carrier.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Booleanization {
    pub frame: FinFrame,
    /// For each booleanization element, the corresponding frame element.
    pub carrier: Vec<usize>,
    /// Partial inverse of `carrier`.
    pub from_l: Vec<Option<usize>>,
}

impl Booleanization {
    pub fn to_l(&self, b: usize) -> usize {
        self.carrier[b]
    }

    pub fn index_of(&self, l: usize) -> Option<usize> {
        self.from_l[l]
    }
}

/// Atom representation of a finite boolean frame: a bijection between frame
/// elements and masks over the frame's atoms, yielding a `BoolAlg`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AtomRep {
    pub alg: BoolAlg,
    pub atoms: Vec<usize>,
    /// frame element -> atom mask
    pub to_mask: Vec<u32>,
    /// atom mask -> frame element
    pub from_mask: Vec<usize>,
}

pub fn atom_representation(f: &FinFrame) -> Result<AtomRep, Error> {
    if !f.is_boolean() {
        return Err(Error::Precondition(
            "atom representation needs a boolean frame".into(),
        ));
    }
    let atoms = f.atoms();
    if atoms.is_empty() {
        return Err(Error::Precondition(
            "degenerate one-element frame has no atoms".into(),
        ));
    }
    let alg = BoolAlg::new(atoms.len() as u32)?;
    let to_mask: Vec<u32> = (0..f.size())
        .map(|e| {
            atoms
                .iter()
                .enumerate()
                .filter(|(_, &a)| f.leq(a, e))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .collect();
    if f.size() != alg.size() {
        return Err(Error::Precondition(format!(
            "boolean frame of size {} has {} atoms; not a powerset",
            f.size(),
            atoms.len()
        )));
    }
    let mut from_mask = vec![usize::MAX; alg.size()];
    for (e, &m) in to_mask.iter().enumerate() {
        from_mask[m as usize] = e;
    }
    if from_mask.contains(&usize::MAX) {
        return Err(Error::Precondition(
            "atom decomposition is not a bijection".into(),
        ));
    }
    Ok(AtomRep {
        alg,
        atoms,
        to_mask,
        from_mask,
    })
}

/// The well-inside relation of a boolean frame transported to its atom
/// representation. For compact regular frames this is a de Vries structure.
pub fn prec_subordination(f: &FinFrame, rep: &AtomRep) -> Result<SubAlgebra, Error> {
    let alg = rep.alg;
    let pairs = alg.carrier().flat_map(|m1| {
        let e1 = rep.from_mask[m1 as usize];
        alg.carrier()
            .filter(move |&m2| f.well_inside(e1, rep.from_mask[m2 as usize]))
            .map(move |m2| (m1, m2))
    });
    let s = Subordination::from_pairs(alg, alg, pairs.collect::<Vec<_>>())?;
    SubAlgebra::new(s)
}

/// A total map between two finite frames.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LatticeMap {
    dom: FinFrame,
    cod: FinFrame,
    table: Vec<usize>,
}

impl LatticeMap {
    pub fn new(dom: FinFrame, cod: FinFrame, table: Vec<usize>) -> Result<Self, Error> {
        if table.len() != dom.size() {
            return Err(Error::Shape(format!(
                "map table has {} entries for a {}-element frame",
                table.len(),
                dom.size()
            )));
        }
        if let Some(&bad) = table.iter().find(|&&v| v >= cod.size()) {
            return Err(Error::Shape(format!(
                "map value {bad} outside codomain of size {}",
                cod.size()
            )));
        }
        Ok(Self { dom, cod, table })
    }

    pub fn identity(f: &FinFrame) -> Self {
        Self {
            dom: f.clone(),
            cod: f.clone(),
            table: (0..f.size()).collect(),
        }
    }

    pub fn dom(&self) -> &FinFrame {
        &self.dom
    }

    pub fn cod(&self) -> &FinFrame {
        &self.cod
    }

    pub fn apply(&self, a: usize) -> usize {
        self.table[a]
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn compose(&self, then: &LatticeMap) -> Result<LatticeMap, Error> {
        if self.cod != then.dom {
            return Err(Error::Shape("map composition frame mismatch".into()));
        }
        LatticeMap::new(
            self.dom.clone(),
            then.cod.clone(),
            self.table.iter().map(|&v| then.table[v]).collect(),
        )
    }

    pub fn is_monotone(&self) -> bool {
        let n = self.dom.size();
        (0..n).all(|a| {
            (0..n).all(|b| !self.dom.leq(a, b) || self.cod.leq(self.table[a], self.table[b]))
        })
    }

    pub fn preserves_top(&self) -> bool {
        self.table[self.dom.top()] == self.cod.top()
    }

    pub fn preserves_bottom(&self) -> bool {
        self.table[self.dom.bottom()] == self.cod.bottom()
    }

    pub fn preserves_binary_meets(&self) -> bool {
        let n = self.dom.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.table[self.dom.meet(a, b)] == self.cod.meet(self.table[a], self.table[b])
            })
        })
    }

    pub fn preserves_binary_joins(&self) -> bool {
        let n = self.dom.size();
        (0..n).all(|a| {
            (0..n).all(|b| {
                self.table[self.dom.join(a, b)] == self.cod.join(self.table[a], self.table[b])
            })
        })
    }

    /// Directed subsets of a finite poset have a maximum, so monotone maps
    /// preserve their joins; checked directly for frames small enough to
    /// enumerate subsets.
    pub fn preserves_directed_joins_exhaustive(&self) -> Option<bool> {
        let n = self.dom.size();
        if n > 12 {
            return None;
        }
        for s in 1u32..(1u32 << n) {
            let members: Vec<usize> = (0..n).filter(|&x| s >> x & 1 == 1).collect();
            let directed = members.iter().all(|&a| {
                members.iter().any(|&c| {
                    self.dom.leq(a, c)
                        && members.iter().all(|&b| {
                            // directedness only needs an upper bound for each pair
                            b != a || self.dom.leq(a, c)
                        })
                })
            }) && members.iter().all(|&a| {
                members.iter().all(|&b| {
                    members
                        .iter()
                        .any(|&c| self.dom.leq(a, c) && self.dom.leq(b, c))
                })
            });
            if !directed {
                continue;
            }
            let join_then_map = self.table[self.dom.join_of(members.iter().copied())];
            let map_then_join = self.cod.join_of(members.iter().map(|&x| self.table[x]));
            if join_then_map != map_then_join {
                return Some(false);
            }
        }
        Some(true)
    }

    /// Classify the map. The preframe criterion is the finite form: binary
    /// meets and top; directed joins come for free because finite directed
    /// sets have maxima.
    pub fn classify(&self) -> MapProfile {
        let monotone = self.is_monotone();
        let preframe = self.preserves_binary_meets() && self.preserves_top();
        let frame = preframe && self.preserves_bottom() && self.preserves_binary_joins();
        MapProfile {
            monotone,
            preframe,
            frame,
            cmorph: self.search_c_witness(),
        }
    }

    /// Search for a join-preserving `◇ : dom -> cod` with
    /// `□(a ∨ b) ≤ □a ∨ ◇b` and `□a ∧ ◇b ≤ ◇(a ∧ b)`, where `□` is this map.
    ///
    /// Candidates are enumerated by assigning codomain values to the
    /// join-irreducibles of the domain and extending by joins; the first
    /// witness in that canonical enumeration order is returned. The search
    /// gives up (reports inconclusive) past 8 join-irreducibles or past
    /// 2^21 candidate assignments.
    pub fn search_c_witness(&self) -> CMorphOutcome {
        if !(self.preserves_binary_meets() && self.preserves_top()) {
            return CMorphOutcome::NotCMorph;
        }
        let jis = self.dom.join_irreducibles();
        if jis.len() > 8 {
            return CMorphOutcome::Inconclusive("more than 8 join-irreducibles");
        }
        let m = self.cod.size();
        let budget: f64 = (m as f64).powi(jis.len() as i32);
        if budget > (1u64 << 21) as f64 {
            return CMorphOutcome::Inconclusive("candidate space above budget");
        }
        let mut assignment = vec![0usize; jis.len()];
        if let Some(diamond) = self.dfs_diamond(&jis, &mut assignment, 0) {
            CMorphOutcome::Witness(diamond)
        } else {
            CMorphOutcome::NotCMorph
        }
    }

    fn dfs_diamond(
        &self,
        jis: &[usize],
        assignment: &mut Vec<usize>,
        depth: usize,
    ) -> Option<Vec<usize>> {
        if depth == jis.len() {
            let diamond = self.extend_by_joins(jis, assignment);
            if self.diamond_ok(&diamond) {
                return Some(diamond);
            }
            return None;
        }
        for v in 0..self.cod.size() {
            // monotone on comparable join-irreducibles prunes the search
            let consistent = (0..depth).all(|i| {
                (!self.dom.leq(jis[i], jis[depth]) || self.cod.leq(assignment[i], v))
                    && (!self.dom.leq(jis[depth], jis[i]) || self.cod.leq(v, assignment[i]))
            });
            if !consistent {
                continue;
            }
            assignment[depth] = v;
            if let Some(d) = self.dfs_diamond(jis, assignment, depth + 1) {
                return Some(d);
            }
        }
        None
    }

    fn extend_by_joins(&self, jis: &[usize], assignment: &[usize]) -> Vec<usize> {
        (0..self.dom.size())
            .map(|x| {
                self.cod.join_of(
                    jis.iter()
                        .enumerate()
                        .filter(|(_, &p)| self.dom.leq(p, x))
                        .map(|(i, _)| assignment[i]),
                )
            })
            .collect()
    }

    fn diamond_ok(&self, diamond: &[usize]) -> bool {
        let n = self.dom.size();
        for a in 0..n {
            for b in 0..n {
                let box_ab = self.table[self.dom.join(a, b)];
                if !self
                    .cod
                    .leq(box_ab, self.cod.join(self.table[a], diamond[b]))
                {
                    return false;
                }
                let lhs = self.cod.meet(self.table[a], diamond[b]);
                if !self.cod.leq(lhs, diamond[self.dom.meet(a, b)]) {
                    return false;
                }
            }
        }
        true
    }

    /// Check a candidate diamond without searching; used to verify the
    /// explicit witnesses the completion functors construct.
    pub fn diamond_witnesses(&self, diamond: &LatticeMap) -> bool {
        diamond.dom == self.dom
            && diamond.cod == self.cod
            && diamond.preserves_bottom()
            && diamond.preserves_binary_joins()
            && self.diamond_ok(&diamond.table)
    }

    /// Bijective with monotone inverse.
    pub fn frame_iso_check(&self) -> bool {
        if self.dom.size() != self.cod.size() {
            return false;
        }
        let n = self.dom.size();
        let mut seen = vec![false; n];
        for &v in &self.table {
            if seen[v] {
                return false;
            }
            seen[v] = true;
        }
        if !self.is_monotone() {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| !self.cod.leq(self.table[a], self.table[b]) || self.dom.leq(a, b))
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MapProfile {
    pub monotone: bool,
    pub preframe: bool,
    pub frame: bool,
    pub cmorph: CMorphOutcome,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CMorphOutcome {
    /// A join-preserving diamond satisfying both mixed inequalities.
    Witness(Vec<usize>),
    NotCMorph,
    Inconclusive(&'static str),
}

impl CMorphOutcome {
    pub fn found(&self) -> bool {
        matches!(self, CMorphOutcome::Witness(_))
    }
}

/// The five-element lattice with three incomparable middle elements; the
/// classic non-distributive witness.
pub fn diamond_m3() -> BitRel {
    let mut leq = BitRel::identity(5);
    for mid in 1..4 {
        leq.set(0, mid, true);
        leq.set(mid, 4, true);
    }
    leq.set(0, 4, true);
    leq
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain_valid() {
        let f = FinFrame::chain(2);
        assert_eq!(f.bottom(), 0);
        assert_eq!(f.top(), 1);
    }

    #[test]
    fn m3_fails_distributivity() {
        let report = validate_order(&diamond_m3());
        assert!(report.distributivity_violation.is_some());
        assert!(report.order_violation.is_none());
        assert!(report.missing_meet.is_none() && report.missing_join.is_none());
    }

    #[test]
    fn powerset_valid_and_boolean() {
        let f = FinFrame::powerset(2);
        assert!(f.is_boolean());
        assert!(f.is_regular());
        // on a boolean frame a* is the complement and ≺ coincides with ≤
        for a in 0..f.size() {
            assert_eq!(f.meet(a, f.pseudocomplement(a)), f.bottom());
            assert_eq!(f.join(a, f.pseudocomplement(a)), f.top());
            for b in 0..f.size() {
                assert_eq!(f.well_inside(a, b), f.leq(a, b));
            }
        }
    }

    #[test]
    fn three_chain_not_regular() {
        let f = FinFrame::chain(3);
        let m = 1;
        assert_eq!(f.pseudocomplement(m), f.bottom());
        assert_eq!(f.double_pseudo(m), f.top());
        assert!(!f.well_inside(m, m));
        assert!(!f.is_regular());
    }

    #[test]
    fn bounds_are_well_inside_everything() {
        for f in [FinFrame::chain(4), FinFrame::powerset(2)] {
            for a in 0..f.size() {
                assert!(f.well_inside(f.bottom(), a));
                assert!(f.well_inside(a, f.top()));
            }
        }
    }

    #[test]
    fn booleanization_of_boolean_frame_is_itself() {
        let f = FinFrame::powerset(2);
        let b = f.booleanization();
        assert_eq!(b.frame.size(), f.size());
        assert_eq!(b.carrier, (0..f.size()).collect::<Vec<_>>());
    }

    #[test]
    fn booleanization_of_three_chain() {
        let f = FinFrame::chain(3);
        let b = f.booleanization();
        assert_eq!(b.frame.size(), 2);
        assert!(b.frame.is_boolean());
        assert_eq!(b.carrier, vec![0, 2]);
    }

    #[test]
    fn booleanization_of_two_point_chain_poset() {
        // downsets of the poset p < q: three opens, booleanization has 2
        let mut poset = BitRel::identity(2);
        poset.set(0, 1, true);
        let f = FinFrame::from_downsets(&poset).unwrap();
        assert_eq!(f.size(), 3);
        assert_eq!(f.booleanization().frame.size(), 2);
    }

    #[test]
    fn double_pseudo_is_closure() {
        for f in [
            FinFrame::chain(4),
            FinFrame::powerset(3),
            FinFrame::from_downsets(&{
                let mut p = BitRel::identity(3);
                p.set(0, 1, true);
                p.set(0, 2, true);
                p
            })
            .unwrap(),
        ] {
            for a in 0..f.size() {
                assert!(f.leq(a, f.double_pseudo(a)));
                assert_eq!(f.double_pseudo(f.double_pseudo(a)), f.double_pseudo(a));
                for b in 0..f.size() {
                    if f.leq(a, b) {
                        assert!(f.leq(f.double_pseudo(a), f.double_pseudo(b)));
                    }
                }
            }
        }
    }

    #[test]
    fn classify_identity_and_constant() {
        let f = FinFrame::powerset(2);
        let id = LatticeMap::identity(&f);
        let p = id.classify();
        assert!(p.monotone && p.preframe && p.frame);
        assert!(p.cmorph.found());

        let const_top = LatticeMap::new(f.clone(), f.clone(), vec![f.top(); f.size()]).unwrap();
        let p = const_top.classify();
        assert!(p.preframe);
        assert!(!p.frame); // bottom not preserved on a frame with 0 != 1
    }

    #[test]
    fn frame_implies_preframe_on_samples() {
        let f = FinFrame::powerset(2);
        let g = FinFrame::chain(3);
        // h: collapse powerset onto chain by counting atoms, not meet-preserving
        let h = LatticeMap::new(f, g, vec![0, 1, 1, 2]).unwrap();
        let p = h.classify();
        assert!(!p.frame || p.preframe);
    }

    #[test]
    fn frame_iso_check_examples() {
        let f = FinFrame::chain(3);
        assert!(LatticeMap::identity(&f).frame_iso_check());
        let g = FinFrame::chain(2);
        let collapse = LatticeMap::new(f, g, vec![0, 1, 1]).unwrap();
        assert!(!collapse.frame_iso_check());
    }

    #[test]
    fn monotone_maps_preserve_directed_joins() {
        let f = FinFrame::powerset(2);
        let g = FinFrame::chain(3);
        let h = LatticeMap::new(f, g, vec![0, 1, 1, 2]).unwrap();
        assert!(h.is_monotone());
        assert_eq!(h.preserves_directed_joins_exhaustive(), Some(true));
    }

    #[test]
    fn atom_representation_of_powerset() {
        let f = FinFrame::powerset(3);
        let rep = atom_representation(&f).unwrap();
        assert_eq!(rep.alg.n_atoms(), 3);
        for e in 0..f.size() {
            assert_eq!(rep.from_mask[rep.to_mask[e] as usize], e);
        }
    }

    #[test]
    fn atom_representation_rejects_non_boolean() {
        assert!(atom_representation(&FinFrame::chain(3)).is_err());
    }

    #[test]
    fn canonical_relabeling_identifies_relabeled_chain() {
        // same 3-chain with elements listed in a scrambled order
        let mut leq = BitRel::identity(3);
        leq.set(2, 1, true);
        leq.set(2, 0, true);
        leq.set(1, 0, true);
        let scrambled = FinFrame::from_leq(leq).unwrap();
        let (canon_a, _) = scrambled.canonical_relabeling();
        let (canon_b, _) = FinFrame::chain(3).canonical_relabeling();
        assert_eq!(canon_a, canon_b);
    }
}
