//! Finite S5-subordination spaces and the dual side of the completions.
//!
//! Finite Stone spaces are discrete, so interior and closure are identity
//! maps and every subset is clopen. The translations and isomorphisms are
//! still computed by their defining formulas (with identity int/cl spelled
//! out) so both sides of every equation remain independent code paths.

use std::collections::BTreeSet;

use crate::bitrel::BitRel;
use crate::boolcore::{format_elem, ElemFamily, FamilyKind};
use crate::frames::{FinFrame, LatticeMap};
use crate::functors::{macneille, round_ideals, MacNeilleAlgebra, RoundIdealFrame};
use crate::partition::Partition;
use crate::subord::{from_equivalence, SubAlgebra};
use crate::Error;

/// A finite set with an equivalence partition: the finite case of a Stone
/// space with a closed equivalence relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FinSubSpace {
    partition: Partition,
}

impl FinSubSpace {
    pub fn new(partition: Partition) -> Self {
        Self { partition }
    }

    pub fn identity(points: usize) -> Self {
        Self {
            partition: Partition::identity(points),
        }
    }

    pub fn points(&self) -> usize {
        self.partition.points()
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn n_classes(&self) -> usize {
        self.partition.n_classes()
    }

    pub fn full_mask(&self) -> u32 {
        if self.points() == 32 {
            u32::MAX
        } else {
            (1u32 << self.points()) - 1
        }
    }

    /// `E[U]`: the saturation of a point set.
    pub fn saturate(&self, u: u32) -> u32 {
        self.partition.saturate(u)
    }

    pub fn is_saturated(&self, u: u32) -> bool {
        self.saturate(u) == u
    }

    /// `Box_E U = X \ E[X \ U]`, the largest saturated subset of `U`.
    pub fn box_r(&self, u: u32) -> u32 {
        let full = self.full_mask();
        full & !self.saturate(full & !u)
    }

    /// Irreducibility: `E[F]` is a proper subset for every proper closed
    /// (here: every proper) subset `F`. At finite scale this forces the
    /// identity partition on two or more points; kept as a diagnostic.
    pub fn is_irreducible(&self) -> bool {
        let full = self.full_mask();
        (0..=full).all(|f| f == full || self.saturate(f) != full)
    }

    /// All saturated subsets (unions of classes), sorted numerically.
    pub fn saturated_sets(&self) -> Vec<u32> {
        let classes = self.n_classes() as u32;
        let mut out: Vec<u32> = (0u32..(1 << classes))
            .map(|choice| {
                (0..classes)
                    .filter(|&c| choice >> c & 1 == 1)
                    .fold(0u32, |m, c| m | self.partition.class_mask(c))
            })
            .collect();
        out.sort_unstable();
        out
    }
}

/// A relation between the points of two finite subordination spaces.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PointRelation {
    dom: FinSubSpace,
    cod: FinSubSpace,
    rel: BitRel,
}

impl PointRelation {
    pub fn new(
        dom: FinSubSpace,
        cod: FinSubSpace,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, Error> {
        let mut rel = BitRel::new(dom.points(), cod.points());
        for (p, q) in pairs {
            if p >= dom.points() || q >= cod.points() {
                return Err(Error::Shape(format!(
                    "point pair ({p},{q}) outside {}x{} spaces",
                    dom.points(),
                    cod.points()
                )));
            }
            rel.set(p, q, true);
        }
        Ok(Self { dom, cod, rel })
    }

    pub fn from_rel(dom: FinSubSpace, cod: FinSubSpace, rel: BitRel) -> Result<Self, Error> {
        if rel.rows() != dom.points() || rel.cols() != cod.points() {
            return Err(Error::Shape("point relation shape mismatch".into()));
        }
        Ok(Self { dom, cod, rel })
    }

    pub fn identity(space: &FinSubSpace) -> Self {
        Self {
            dom: space.clone(),
            cod: space.clone(),
            rel: BitRel::identity(space.points()),
        }
    }

    pub fn dom(&self) -> &FinSubSpace {
        &self.dom
    }

    pub fn cod(&self) -> &FinSubSpace {
        &self.cod
    }

    pub fn rel(&self) -> &BitRel {
        &self.rel
    }

    pub fn holds(&self, p: usize, q: usize) -> bool {
        self.rel.get(p, q)
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.rel.iter_pairs().collect()
    }

    /// `R[U]` for a point set.
    pub fn image(&self, u: u32) -> u32 {
        let mut out = 0u32;
        for p in 0..self.dom.points() {
            if u >> p & 1 == 1 {
                for q in 0..self.cod.points() {
                    if self.rel.get(p, q) {
                        out |= 1 << q;
                    }
                }
            }
        }
        out
    }

    /// `R⁻¹[V]` for a point set.
    pub fn preimage(&self, v: u32) -> u32 {
        let mut out = 0u32;
        for p in 0..self.dom.points() {
            for q in 0..self.cod.points() {
                if v >> q & 1 == 1 && self.rel.get(p, q) {
                    out |= 1 << p;
                }
            }
        }
        out
    }

    /// `E2 ∘ R ∘ E1`; idempotent, and its fixpoints are exactly the
    /// compatible relations.
    pub fn saturated(&self) -> PointRelation {
        let e1 = self.dom.partition.as_relation();
        let e2 = self.cod.partition.as_relation();
        PointRelation {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            rel: e1.compose(&self.rel).compose(&e2),
        }
    }

    pub fn is_compatible(&self) -> bool {
        self.compatibility_witness().is_none()
    }

    /// First pair on which `E2 ∘ R ∘ E1` differs from `R`.
    pub fn compatibility_witness(&self) -> Option<(usize, usize)> {
        let sat = self.saturated();
        for p in 0..self.rel.rows() {
            for q in 0..self.rel.cols() {
                if sat.rel.get(p, q) != self.rel.get(p, q) {
                    return Some((p, q));
                }
            }
        }
        None
    }

    pub fn compose(&self, then: &PointRelation) -> Result<PointRelation, Error> {
        if self.cod != then.dom {
            return Err(Error::Shape("point relation composition mismatch".into()));
        }
        Ok(PointRelation {
            dom: self.dom.clone(),
            cod: then.cod.clone(),
            rel: self.rel.compose(&then.rel),
        })
    }

    pub fn converse(&self) -> PointRelation {
        PointRelation {
            dom: self.cod.clone(),
            cod: self.dom.clone(),
            rel: self.rel.converse(),
        }
    }

    /// Functional relations satisfy `E1 ⊆ R̆ ∘ R` and `R ∘ R̆ ⊆ E2`.
    pub fn is_functional(&self) -> bool {
        let conv = self.rel.converse();
        let e1 = self.dom.partition.as_relation();
        let e2 = self.cod.partition.as_relation();
        e1.is_subset_of(&self.rel.compose(&conv)) && conv.compose(&self.rel).is_subset_of(&e2)
    }
}

/// Dual space of an S5-subordination algebra: points are the atoms
/// (principal ultrafilters), and `x R_S y` iff `S[↑x] ⊆ ↑y`. For an
/// S5-subordination the relation is verified to be an equivalence.
pub fn ult(b: &SubAlgebra) -> Result<FinSubSpace, Error> {
    let n = b.alg().n_atoms() as usize;
    let mut rel = BitRel::new(n, n);
    for x in 0..n {
        for y in 0..n {
            // S[↑x] ⊆ ↑y: every pair (a,b) in S with x ∈ a must have y ∈ b
            let ok = b
                .s()
                .pairs()
                .all(|(a, bb)| a >> x & 1 == 0 || bb >> y & 1 == 1);
            rel.set(x, y, ok);
        }
    }
    // equivalence check
    for x in 0..n {
        if !rel.get(x, x) {
            return Err(Error::Internal(format!(
                "dual relation not reflexive at atom {x}"
            )));
        }
        for y in 0..n {
            if rel.get(x, y) != rel.get(y, x) {
                return Err(Error::Internal(format!(
                    "dual relation not symmetric at atoms ({x},{y})"
                )));
            }
            for z in 0..n {
                if rel.get(x, y) && rel.get(y, z) && !rel.get(x, z) {
                    return Err(Error::Internal(format!(
                        "dual relation not transitive at atoms ({x},{y},{z})"
                    )));
                }
            }
        }
    }
    let labels: Vec<u32> = (0..n)
        .map(|x| (0..n).find(|&y| rel.get(x, y)).unwrap() as u32)
        .collect();
    Ok(FinSubSpace::new(Partition::from_labels(&labels)?))
}

/// The S5-subordination algebra of a finite space: `(P(X), S_E)`.
pub fn clop(x: &FinSubSpace) -> Result<SubAlgebra, Error> {
    from_equivalence(&x.partition)
}

/// Quotient of a space by its partition: class count plus projection map.
pub fn quotient(x: &FinSubSpace) -> (usize, Vec<u32>) {
    let proj = (0..x.points()).map(|p| x.partition.class_of(p)).collect();
    (x.n_classes(), proj)
}

/// The relation between quotients induced by a compatible point relation:
/// `[x] Q(R) [y]` iff `x R y`. Well-definedness (independence of the chosen
/// representatives) is guaranteed by compatibility and asserted anyway.
pub fn q_of_relation(r: &PointRelation) -> Result<BitRel, Error> {
    if !r.is_compatible() {
        return Err(Error::Precondition(
            "quotient relation needs a compatible point relation".into(),
        ));
    }
    let (c1, p1) = quotient(r.dom());
    let (c2, p2) = quotient(r.cod());
    let mut q = BitRel::new(c1, c2);
    for (p, qq) in r.pairs() {
        q.set(p1[p] as usize, p2[qq] as usize, true);
    }
    // representative independence: classes related in q must be related at
    // every pair of representatives
    for (x, &cx) in p1.iter().enumerate() {
        for (y, &cy) in p2.iter().enumerate() {
            if q.get(cx as usize, cy as usize) && !r.holds(x, y) {
                return Err(Error::Internal(format!(
                    "quotient relation not representative-independent at ({x},{y})"
                )));
            }
        }
    }
    Ok(q)
}

/// Identity interior operator, spelled out because the defining formulas on
/// the dual side use `int`; finite Stone spaces are discrete.
#[inline]
pub fn interior(_x: &FinSubSpace, u: u32) -> u32 {
    u
}

/// Identity closure operator; see [`interior`].
#[inline]
pub fn closure(_x: &FinSubSpace, u: u32) -> u32 {
    u
}

/// `Φ(I) = ⋃{φ(a) | a ∈ I}` where `φ(a)` is the set of atoms below `a`;
/// under the atom indexing of [`ult`], `φ(a)` is the mask `a` itself.
pub fn phi(b: &SubAlgebra, ideal: &ElemFamily) -> Result<u32, Error> {
    if ideal.alg() != b.alg() {
        return Err(Error::AlgebraMismatch {
            expected: b.alg().n_atoms(),
            got: ideal.alg().n_atoms(),
        });
    }
    if ideal.kind() != FamilyKind::Ideal {
        return Err(Error::Precondition("phi needs an ideal".into()));
    }
    Ok(ideal.members().iter().fold(0u32, |m, &a| m | a))
}

/// `Ψ(F) = ⋂{φ(a) | a ∈ F}`.
pub fn psi(b: &SubAlgebra, filter: &ElemFamily) -> Result<u32, Error> {
    if filter.alg() != b.alg() {
        return Err(Error::AlgebraMismatch {
            expected: b.alg().n_atoms(),
            got: filter.alg().n_atoms(),
        });
    }
    if filter.kind() != FamilyKind::Filter {
        return Err(Error::Precondition("psi needs a filter".into()));
    }
    Ok(filter.members().iter().fold(b.alg().top(), |m, &a| m & a))
}

/// The frame of saturated (open) subsets, with the element list giving each
/// frame index's point set.
pub fn saturated_open_frame(x: &FinSubSpace) -> (FinFrame, Vec<u32>) {
    let sets = x.saturated_sets();
    let n = sets.len();
    let mut leq = BitRel::new(n, n);
    for (i, &a) in sets.iter().enumerate() {
        for (j, &b) in sets.iter().enumerate() {
            if a & !b == 0 {
                leq.set(i, j, true);
            }
        }
    }
    (
        FinFrame::from_leq(leq).expect("saturated sets form a frame"),
        sets,
    )
}

/// R-regular opens: fixpoints of `Box_R ∘ int ∘ R[·] ∘ cl` on saturated
/// opens, with `U ≺ V` iff `R[cl(U)] ⊆ V`. At finite scale every saturated
/// set is a fixpoint (int and cl are identities), which is itself asserted
/// by the suite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RRegularOpens {
    pub sets: Vec<u32>,
    pub prec: BitRel,
}

pub fn r_regular_opens(x: &FinSubSpace) -> RRegularOpens {
    let sets: Vec<u32> = x
        .saturated_sets()
        .into_iter()
        .filter(|&u| x.box_r(interior(x, x.saturate(closure(x, u)))) == u)
        .collect();
    let n = sets.len();
    let mut prec = BitRel::new(n, n);
    for (i, &u) in sets.iter().enumerate() {
        for (j, &v) in sets.iter().enumerate() {
            if x.saturate(closure(x, u)) & !v == 0 {
                prec.set(i, j, true);
            }
        }
    }
    RRegularOpens { sets, prec }
}

/// Report of the dual-description isomorphisms for one algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DualityReport {
    pub space_points: usize,
    pub quotient_size: usize,
    /// Φ restricted to round ideals is a frame isomorphism onto the
    /// saturated-open frame.
    pub ri_iso_saturated: bool,
    /// Lifting along the quotient projection lands in `O(X/R) = P(classes)`.
    pub ri_iso_quotient: bool,
    /// Φ restricted to normal round ideals is a structure-preserving
    /// bijection onto the R-regular opens.
    pub ni_iso_r_regular: bool,
    /// ... and onto the regular opens of the quotient.
    pub ni_iso_quotient: bool,
    /// `Φ(I*) = Box_R int (Φ(I)^c)` for every round ideal.
    pub star_formula: bool,
    /// `Φ(I**) = Box_R int (R[cl Φ(I)])` for every round ideal.
    pub star_star_formula: bool,
    pub detail: Option<String>,
}

impl DualityReport {
    pub fn all_hold(&self) -> bool {
        self.ri_iso_saturated
            && self.ri_iso_quotient
            && self.ni_iso_r_regular
            && self.ni_iso_quotient
            && self.star_formula
            && self.star_star_formula
    }
}

/// Verify the explicit dual isomorphisms for one algebra: the round-ideal
/// frame against the saturated opens and the quotient opens, the MacNeille
/// completion against the R-regular opens and the quotient regular opens,
/// and the pseudocomplement translation formulas.
pub fn dual_isomorphisms(b: &SubAlgebra) -> Result<DualityReport, Error> {
    let ri = round_ideals(b)?;
    let ni = macneille(b)?;
    let x = ult(b)?;
    let (o_frame, o_sets) = saturated_open_frame(&x);
    let mut detail = None;

    // Φ on round ideals, as a map into the saturated-open frame
    let mut table = Vec::with_capacity(ri.len());
    let mut ok = true;
    for i in 0..ri.len() {
        let p = phi(b, &ri.ideal_family(i))?;
        match o_sets.iter().position(|&s| s == p) {
            Some(j) => table.push(j),
            None => {
                ok = false;
                detail = get_or(detail, || {
                    format!("Φ of round ideal {i} is not saturated: {}", format_elem(p))
                });
                table.push(0);
            }
        }
    }
    let ri_iso_saturated = ok && {
        let map = LatticeMap::new(ri.frame().clone(), o_frame.clone(), table.clone())?;
        map.frame_iso_check()
    };

    // lift along the projection into O(X/R) = P(classes)
    let (classes, proj) = quotient(&x);
    let quo_frame = FinFrame::powerset(classes.max(1) as u32);
    let lift = |u: u32| -> u32 {
        let mut m = 0u32;
        for (p, &class) in proj.iter().enumerate() {
            if u >> p & 1 == 1 {
                m |= 1 << class;
            }
        }
        m
    };
    let ri_iso_quotient = ri_iso_saturated && {
        let table: Vec<usize> = (0..ri.len())
            .map(|i| lift(phi(b, &ri.ideal_family(i)).unwrap()) as usize)
            .collect();
        let map = LatticeMap::new(ri.frame().clone(), quo_frame.clone(), table)?;
        map.frame_iso_check()
    };

    // Φ on normal ideals vs the R-regular opens, as structure-preserving
    // bijections (order both ways plus the proximity both ways)
    let rro = r_regular_opens(&x);
    let ni_indices = ni.normal_ri_indices();
    let mut ni_iso_r_regular = ni_indices.len() == rro.sets.len();
    let mut ni_to_rro = Vec::new();
    if ni_iso_r_regular {
        for &i in &ni_indices {
            let p = phi(b, &ri.ideal_family(i))?;
            match rro.sets.iter().position(|&s| s == p) {
                Some(j) => ni_to_rro.push(j),
                None => {
                    ni_iso_r_regular = false;
                    detail = get_or(detail, || {
                        format!("Φ of normal ideal {i} is not R-regular open")
                    });
                    break;
                }
            }
        }
    }
    if ni_iso_r_regular {
        let mut seen = vec![false; rro.sets.len()];
        for &j in &ni_to_rro {
            if seen[j] {
                ni_iso_r_regular = false;
            }
            seen[j] = true;
        }
        'check: for (a, &i) in ni_indices.iter().enumerate() {
            for (bidx, &j) in ni_indices.iter().enumerate() {
                let ideal_prec = ni.prec_ri(i, j);
                let dual_prec = rro.prec.get(ni_to_rro[a], ni_to_rro[bidx]);
                let ideal_leq = ri.frame().leq(i, j);
                let dual_leq = rro.sets[ni_to_rro[a]] & !rro.sets[ni_to_rro[bidx]] == 0;
                if ideal_prec != dual_prec || ideal_leq != dual_leq {
                    ni_iso_r_regular = false;
                    detail = get_or(detail, || {
                        format!("NI structure mismatch at normal ideals ({i},{j})")
                    });
                    break 'check;
                }
            }
        }
    }

    // regular opens of the quotient: every subset, with U ≺ V iff cl U ⊆ V
    let ni_iso_quotient = ni_iso_r_regular && {
        let mut ok = ni_indices.len() == 1usize << classes;
        if ok {
            let mut seen = vec![false; 1usize << classes];
            for &i in &ni_indices {
                let m = lift(phi(b, &ri.ideal_family(i))?) as usize;
                if seen[m] {
                    ok = false;
                    break;
                }
                seen[m] = true;
            }
            if ok {
                'q: for &i in &ni_indices {
                    for &j in &ni_indices {
                        let mi = lift(phi(b, &ri.ideal_family(i))?);
                        let mj = lift(phi(b, &ri.ideal_family(j))?);
                        // discrete quotient: cl is identity, ≺ is inclusion
                        if ni.prec_ri(i, j) != (mi & !mj == 0) {
                            ok = false;
                            break 'q;
                        }
                    }
                }
            }
        }
        ok
    };

    // pseudocomplement translation formulas
    let full = x.full_mask();
    let mut star_formula = true;
    let mut star_star_formula = true;
    for i in 0..ri.len() {
        let p = phi(b, &ri.ideal_family(i))?;
        let star = phi(b, &ri.ideal_family(ri.pseudocomplement_via_preimage(i)?))?;
        let want_star = x.box_r(interior(&x, full & !closure(&x, p)));
        if star != want_star {
            star_formula = false;
            detail = get_or(detail, || format!("Φ(I*) formula fails at round ideal {i}"));
        }
        let star_star = phi(b, &ri.ideal_family(ri.star_star(i)?))?;
        let want = x.box_r(interior(&x, x.saturate(closure(&x, p))));
        if star_star != want {
            star_star_formula = false;
            detail = get_or(detail, || {
                format!("Φ(I**) formula fails at round ideal {i}")
            });
        }
    }

    Ok(DualityReport {
        space_points: x.points(),
        quotient_size: classes,
        ri_iso_saturated,
        ri_iso_quotient,
        ni_iso_r_regular,
        ni_iso_quotient,
        star_formula,
        star_star_formula,
        detail,
    })
}

fn get_or(d: Option<String>, f: impl FnOnce() -> String) -> Option<String> {
    match d {
        Some(d) => Some(d),
        None => Some(f()),
    }
}

/// The four equivalent continuity conditions for a compatible point
/// relation, each evaluated in its own terms. At finite scale all four hold
/// for every compatible relation; the suite asserts their agreement.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ContinuityCrosscheck {
    /// Every open of the quotient has an open preimage under Q(R).
    pub quotient_continuous: bool,
    /// Every saturated open has an open R-preimage.
    pub saturated_preimage: bool,
    /// Clopen interpolation: `E2[B1] ⊆ B2` admits clopen `A` with
    /// `R⁻¹[B1] ⊆ A ⊆ R⁻¹[B2]`.
    pub clopen_interpolation: bool,
    /// Algebraic form on `S_R`: some clopen `A` has `A ∈ S_R~[B1]` and
    /// `S_R~[B2] ⊆ S_E1[A]`.
    pub algebraic: bool,
}

impl ContinuityCrosscheck {
    pub fn agree(&self) -> bool {
        self.quotient_continuous == self.saturated_preimage
            && self.saturated_preimage == self.clopen_interpolation
            && self.clopen_interpolation == self.algebraic
    }

    pub fn all_true(&self) -> bool {
        self.quotient_continuous
            && self.saturated_preimage
            && self.clopen_interpolation
            && self.algebraic
    }
}

pub fn continuity_crosscheck(r: &PointRelation) -> Result<ContinuityCrosscheck, Error> {
    if !r.is_compatible() {
        return Err(Error::Precondition(
            "continuity crosscheck needs a compatible relation".into(),
        ));
    }
    let x1 = r.dom();
    let x2 = r.cod();
    let full1 = x1.full_mask();
    let full2 = x2.full_mask();

    // (1) Q(R) continuity: all quotient opens (all subsets) have open
    // (all subsets are open) preimages. Evaluated literally.
    let q = q_of_relation(r)?;
    let (c1, _) = quotient(x1);
    let (c2, _) = quotient(x2);
    let mut quotient_continuous = true;
    for u in 0u32..(1u32 << c2) {
        let mut pre = 0u32;
        for a in 0..c1 {
            for bq in 0..c2 {
                if u >> bq & 1 == 1 && q.get(a, bq) {
                    pre |= 1 << a;
                }
            }
        }
        // discrete quotient: every subset is open
        let open = pre < (1u32 << c1);
        if !open {
            quotient_continuous = false;
        }
    }

    // (2) saturated opens have open preimages
    let mut saturated_preimage = true;
    for v in 0..=full2 {
        if x2.is_saturated(v) {
            let pre = r.preimage(v);
            let open = interior(x1, pre) == pre;
            if !open {
                saturated_preimage = false;
            }
        }
    }

    // (3) clopen interpolation
    let mut clopen_interpolation = true;
    'outer3: for b1 in 0..=full2 {
        for b2 in 0..=full2 {
            if x2.saturate(b1) & !b2 == 0 {
                let lo = r.preimage(b1);
                let hi = r.preimage(b2);
                let found = (0..=full1).any(|a| lo & !a == 0 && a & !hi == 0);
                if !found {
                    clopen_interpolation = false;
                    break 'outer3;
                }
            }
        }
    }

    // (4) algebraic condition on S_R
    let s_r = crate::subord::from_closed_relation(r)?;
    let s_e1 = clop(x1)?;
    let s_e2 = clop(x2)?;
    let t_tilde = s_r.tilde_inverse();
    let mut algebraic = true;
    'outer4: for b1 in 0..=full2 {
        for b2 in 0..=full2 {
            if s_e2.s().holds(b1, b2) {
                let found = (0..=full1).any(|a| {
                    t_tilde.holds(b1, a)
                        && (0..=full1).all(|ap| !t_tilde.holds(b2, ap) || s_e1.s().holds(a, ap))
                });
                if !found {
                    algebraic = false;
                    break 'outer4;
                }
            }
        }
    }

    Ok(ContinuityCrosscheck {
        quotient_continuous,
        saturated_preimage,
        clopen_interpolation,
        algebraic,
    })
}

/// Round-trip data for `ult`/`clop` on one algebra: the dual space, and
/// whether `clop(ult(B))` matches `B` under the atom indexing.
pub fn ult_clop_roundtrip(b: &SubAlgebra) -> Result<bool, Error> {
    let x = ult(b)?;
    let back = clop(&x)?;
    Ok(back == *b)
}

/// Translation laws tying Φ and Ψ to families: `Φ(¬F) = Ψ(F)^c`,
/// `Ψ(¬I) = Φ(I)^c`, `Φ(L(F)) = int Ψ(F)`, `Ψ(U(I)) = cl Φ(I)`.
pub fn translation_laws_hold(b: &SubAlgebra, ideal: &ElemFamily) -> Result<bool, Error> {
    let x = ult(b)?;
    let full = x.full_mask();
    let filter = ideal.negate();
    let phi_i = phi(b, ideal)?;
    let psi_f = psi(b, &filter)?;
    let ok1 = phi(b, &filter.negate())? == full & !psi_f;
    let ok2 = psi(b, &ideal.negate())? == full & !phi_i;
    let ok3 = phi(b, &filter.lower_bounds())? == interior(&x, psi_f);
    let ok4 = psi(b, &ideal.upper_bounds())? == closure(&x, phi_i);
    Ok(ok1 && ok2 && ok3 && ok4)
}

/// `Φ(S⁻¹[I]) = Box_R Φ(I)` for an ideal; the two sides are computed along
/// independent paths. The box operator is injectable so a deliberately
/// broken variant can be shown to fail.
pub fn phi_box_law(
    b: &SubAlgebra,
    ideal: &ElemFamily,
    box_op: impl Fn(&FinSubSpace, u32) -> u32,
) -> Result<(u32, u32), Error> {
    let x = ult(b)?;
    let pre: BTreeSet<u32> = b.s().preimage_set(ideal.members());
    let pre_fam = ElemFamily::new(*b.alg(), pre, FamilyKind::Ideal)
        .map_err(|e| Error::Internal(format!("S-preimage of an ideal must be an ideal: {e}")))?;
    let lhs = phi(b, &pre_fam)?;
    let rhs = box_op(&x, phi(b, ideal)?);
    Ok((lhs, rhs))
}

/// `Ψ(S[F]) = R[Ψ(F)]` for a filter.
pub fn psi_image_law(b: &SubAlgebra, filter: &ElemFamily) -> Result<(u32, u32), Error> {
    let x = ult(b)?;
    let im = b.s().image_set(filter.members());
    let im_fam = ElemFamily::new(*b.alg(), im, FamilyKind::Filter)
        .map_err(|e| Error::Internal(format!("S-image of a filter must be a filter: {e}")))?;
    let lhs = psi(b, &im_fam)?;
    let r = x.partition().as_relation();
    let psi_f = psi(b, filter)?;
    let mut rhs = 0u32;
    for p in 0..x.points() {
        if psi_f >> p & 1 == 1 {
            for q in 0..x.points() {
                if r.get(p, q) {
                    rhs |= 1 << q;
                }
            }
        }
    }
    Ok((lhs, rhs))
}

/// Reference to the MacNeille data needed by reports.
pub fn macneille_of(b: &SubAlgebra) -> Result<MacNeilleAlgebra, Error> {
    macneille(b)
}

pub fn round_ideals_of(b: &SubAlgebra) -> Result<RoundIdealFrame, Error> {
    round_ideals(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::all_partitions;

    fn space_01_2() -> FinSubSpace {
        FinSubSpace::new(Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap())
    }

    #[test]
    fn box_r_examples() {
        let x = space_01_2();
        // U = {0,2}: largest saturated subset is {2}
        assert_eq!(x.box_r(0b101), 0b100);
        // saturated sets are fixpoints
        for u in x.saturated_sets() {
            assert_eq!(x.box_r(u), u);
        }
        // idempotence on arbitrary sets
        for u in 0..=x.full_mask() {
            assert_eq!(x.box_r(x.box_r(u)), x.box_r(u));
            assert!(x.is_saturated(x.box_r(u)));
        }
    }

    #[test]
    fn ult_recovers_partition() {
        for k in 1..=4 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let x = ult(&b).unwrap();
                assert_eq!(x.partition(), &e);
            }
        }
    }

    #[test]
    fn clop_ult_roundtrip() {
        for k in 1..=3 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                assert!(ult_clop_roundtrip(&b).unwrap());
                let x = FinSubSpace::new(e);
                assert_eq!(ult(&clop(&x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn quotient_examples() {
        let x = FinSubSpace::identity(3);
        let (n, _) = quotient(&x);
        assert_eq!(n, 3);
        let r = PointRelation::identity(&x);
        assert_eq!(q_of_relation(&r).unwrap(), BitRel::identity(3));

        let one = FinSubSpace::new(Partition::single_class(3));
        assert_eq!(quotient(&one).0, 1);
    }

    #[test]
    fn q_functorial_on_seeded_relations() {
        let x1 = space_01_2();
        let x2 = FinSubSpace::new(Partition::from_classes(2, &[vec![0], vec![1]]).unwrap());
        let x3 = FinSubSpace::new(Partition::single_class(2));
        let mut rng = crate::rng::SplitMix64::new(11);
        for _ in 0..50 {
            let r1 = random_compatible(&mut rng, &x1, &x2);
            let r2 = random_compatible(&mut rng, &x2, &x3);
            let lhs = q_of_relation(&r1.compose(&r2).unwrap()).unwrap();
            let rhs = q_of_relation(&r1)
                .unwrap()
                .compose(&q_of_relation(&r2).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    fn random_compatible(
        rng: &mut crate::rng::SplitMix64,
        x1: &FinSubSpace,
        x2: &FinSubSpace,
    ) -> PointRelation {
        let mut rel = BitRel::new(x1.points(), x2.points());
        for p in 0..x1.points() {
            for q in 0..x2.points() {
                if rng.bool() {
                    rel.set(p, q, true);
                }
            }
        }
        PointRelation::from_rel(x1.clone(), x2.clone(), rel)
            .unwrap()
            .saturated()
    }

    #[test]
    fn saturated_frame_sizes() {
        let x = FinSubSpace::identity(2);
        let (f, sets) = saturated_open_frame(&x);
        assert_eq!(f.size(), 4);
        assert_eq!(sets.len(), 4);
        let y = space_01_2();
        let (g, _) = saturated_open_frame(&y);
        assert_eq!(g.size(), 4); // unions of 2 classes
    }

    #[test]
    fn r_regular_equals_saturated_finite() {
        for k in 1..=4 {
            for e in all_partitions(k).unwrap() {
                let x = FinSubSpace::new(e);
                let rro = r_regular_opens(&x);
                assert_eq!(rro.sets, x.saturated_sets());
            }
        }
    }

    #[test]
    fn phi_of_principal_ideal() {
        let b = from_equivalence(&Partition::identity(3)).unwrap();
        let down = ElemFamily::principal_ideal(*b.alg(), 0b101).unwrap();
        assert_eq!(phi(&b, &down).unwrap(), 0b101);
    }

    #[test]
    fn translation_laws_exhaustive_n3() {
        for e in all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            for g in b.alg().carrier() {
                let ideal = ElemFamily::principal_ideal(*b.alg(), g).unwrap();
                assert!(translation_laws_hold(&b, &ideal).unwrap());
            }
        }
    }

    #[test]
    fn phi_box_and_psi_laws_exhaustive_n3() {
        for e in all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            for g in b.alg().carrier() {
                let ideal = ElemFamily::principal_ideal(*b.alg(), g).unwrap();
                let (l, r) = phi_box_law(&b, &ideal, FinSubSpace::box_r).unwrap();
                assert_eq!(l, r);
                let filter = ElemFamily::principal_filter(*b.alg(), g).unwrap();
                let (l, r) = psi_image_law(&b, &filter).unwrap();
                assert_eq!(l, r);
            }
        }
    }

    #[test]
    fn mutated_box_breaks_phi_law() {
        // dropping the inner complement is the off-by-one mutation the
        // acceptance suite uses as a smoke test
        let bad_box = |x: &FinSubSpace, u: u32| x.full_mask() & !x.saturate(u);
        let b =
            from_equivalence(&Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap()).unwrap();
        let mut failed = false;
        for g in b.alg().carrier() {
            let ideal = ElemFamily::principal_ideal(*b.alg(), g).unwrap();
            let (l, r) = phi_box_law(&b, &ideal, bad_box).unwrap();
            if l != r {
                failed = true;
            }
        }
        assert!(failed);
    }

    #[test]
    fn dual_isomorphisms_exhaustive_small() {
        for k in 1..=3 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let report = dual_isomorphisms(&b).unwrap();
                assert!(report.all_hold(), "{:?}", report);
            }
        }
    }

    #[test]
    fn continuity_crosscheck_identity_and_exhaustive_small() {
        // the identity morphism on (X, E) is E itself
        let x = space_01_2();
        let r = PointRelation::from_rel(x.clone(), x.clone(), x.partition().as_relation()).unwrap();
        let c = continuity_crosscheck(&r).unwrap();
        assert!(c.agree() && c.all_true());
        // ... and the diagonal works on a space with the identity partition
        let d = FinSubSpace::identity(3);
        let c = continuity_crosscheck(&PointRelation::identity(&d)).unwrap();
        assert!(c.agree() && c.all_true());
        // every compatible relation between 2-point spaces
        for e1 in all_partitions(2).unwrap() {
            for e2 in all_partitions(2).unwrap() {
                let x1 = FinSubSpace::new(e1.clone());
                let x2 = FinSubSpace::new(e2.clone());
                for bits in 0u32..16 {
                    let mut rel = BitRel::new(2, 2);
                    for p in 0..2 {
                        for q in 0..2 {
                            if bits >> (p * 2 + q) & 1 == 1 {
                                rel.set(p, q, true);
                            }
                        }
                    }
                    let r = PointRelation::from_rel(x1.clone(), x2.clone(), rel)
                        .unwrap()
                        .saturated();
                    let c = continuity_crosscheck(&r).unwrap();
                    assert!(c.agree());
                }
            }
        }
    }

    #[test]
    fn irreducibility_degenerates() {
        assert!(FinSubSpace::identity(1).is_irreducible());
        assert!(FinSubSpace::new(Partition::single_class(1)).is_irreducible());
        // any class of size > 1 on k >= 2 points breaks irreducibility
        assert!(!FinSubSpace::new(Partition::single_class(2)).is_irreducible());
        assert!(!space_01_2().is_irreducible());
        assert!(FinSubSpace::identity(3).is_irreducible());
    }
}
