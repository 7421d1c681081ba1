//! Round-ideal frames, MacNeille completions, and the completion functors.
//!
//! For an S5-subordination algebra `(B, S)` the round ideals (ideals with
//! `I = S⁻¹[I]`) form a compact regular frame under inclusion. Ideals of a
//! finite boolean algebra are principal, so round ideals are enumerated by
//! scanning generators: `↓c` is round iff `a S c ⟺ a ≤ c` for all `a`.
//!
//! The MacNeille completion is the booleanization of the round-ideal frame
//! with the inherited proximity; its elements (the normal round ideals) are
//! independently characterized by the fixpoint `I = S⁻¹[L(S[U(I)])]`, and
//! both routes are kept as separate code paths under test.

use std::collections::BTreeSet;

use crate::boolcore::{format_elem, lex_cmp, BoolAlg, ElemFamily, FamilyKind};
use crate::frames::{atom_representation, AtomRep, Booleanization, FinFrame, LatticeMap};
use crate::subord::{SubAlgebra, Subordination};
use crate::Error;

/// The frame of round ideals of an S5-subordination algebra, with each
/// element identified by its principal generator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RoundIdealFrame {
    base: SubAlgebra,
    generators: Vec<u32>,
    frame: FinFrame,
}

pub fn round_ideals(b: &SubAlgebra) -> Result<RoundIdealFrame, Error> {
    let alg = *b.alg();
    let mut generators: Vec<u32> = alg
        .carrier()
        .filter(|&c| alg.carrier().all(|a| b.s().holds(a, c) == alg.leq(a, c)))
        .collect();
    generators.sort_by(|x, y| lex_cmp(*x, *y));
    let n = generators.len();
    let mut leq = crate::bitrel::BitRel::new(n, n);
    for (i, &gi) in generators.iter().enumerate() {
        for (j, &gj) in generators.iter().enumerate() {
            if alg.leq(gi, gj) {
                leq.set(i, j, true);
            }
        }
    }
    let frame = FinFrame::from_leq(leq)
        .map_err(|e| Error::Internal(format!("round ideals failed frame validation: {e}")))?;
    let ri = RoundIdealFrame {
        base: b.clone(),
        generators,
        frame,
    };
    ri.crosscheck()?;
    Ok(ri)
}

impl RoundIdealFrame {
    pub fn base(&self) -> &SubAlgebra {
        &self.base
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn frame(&self) -> &FinFrame {
        &self.frame
    }

    pub fn generator(&self, i: usize) -> u32 {
        self.generators[i]
    }

    pub fn index_of_generator(&self, g: u32) -> Option<usize> {
        self.generators.iter().position(|&x| x == g)
    }

    /// The ideal at index `i` as an explicit member family.
    pub fn ideal_family(&self, i: usize) -> ElemFamily {
        ElemFamily::principal_ideal(*self.base.alg(), self.generators[i])
            .expect("generators are in range")
    }

    pub fn ideal_members(&self, i: usize) -> BTreeSet<u32> {
        let alg = self.base.alg();
        let g = self.generators[i];
        alg.carrier().filter(|&m| alg.leq(m, g)).collect()
    }

    /// Locate the round ideal with the given member set.
    pub fn index_of_members(&self, members: &BTreeSet<u32>) -> Result<usize, Error> {
        let g = members.iter().fold(0u32, |a, &m| a | m);
        let i = self.index_of_generator(g).ok_or_else(|| {
            Error::Internal(format!(
                "ideal generated by {} is not round",
                format_elem(g)
            ))
        })?;
        if &self.ideal_members(i) != members {
            return Err(Error::Internal(format!(
                "member set generated by {} is not an ideal",
                format_elem(g)
            )));
        }
        Ok(i)
    }

    /// `I* = S⁻¹[¬U(I)]`.
    pub fn pseudocomplement_via_preimage(&self, i: usize) -> Result<usize, Error> {
        let u = self.ideal_family(i).upper_bounds();
        let neg_u: BTreeSet<u32> = u
            .members()
            .iter()
            .map(|&m| self.base.alg().complement(m))
            .collect();
        let star = self.base.s().preimage_set(&neg_u);
        self.index_of_members(&star)
    }

    /// `I* = ¬S[U(I)]`, the second route to the pseudocomplement.
    pub fn pseudocomplement_neg_image(&self, i: usize) -> Result<usize, Error> {
        let u = self.ideal_family(i).upper_bounds();
        let image = self.base.s().image_set(u.members());
        let star: BTreeSet<u32> = image
            .iter()
            .map(|&m| self.base.alg().complement(m))
            .collect();
        self.index_of_members(&star)
    }

    /// `I ≺ J` iff `U(I) ∩ J ≠ ∅`.
    pub fn well_inside_via_bounds(&self, i: usize, j: usize) -> bool {
        let u = self.ideal_family(i).upper_bounds();
        let j_members = self.ideal_members(j);
        u.members().iter().any(|m| j_members.contains(m))
    }

    /// `I**` computed in the frame.
    pub fn star_star(&self, i: usize) -> Result<usize, Error> {
        Ok(self.frame.double_pseudo(i))
    }

    /// The normal-ideal fixpoint `I = S⁻¹[L(S[U(I)])]`, evaluated literally.
    pub fn normal_fixpoint_holds(&self, i: usize) -> bool {
        let fam = self.ideal_family(i);
        let u = fam.upper_bounds();
        let s_u = self.base.s().image_set(u.members());
        let s_u_fam = match ElemFamily::new(*self.base.alg(), s_u, FamilyKind::Raw) {
            Ok(f) => f,
            Err(_) => return false,
        };
        let l = s_u_fam.lower_bounds();
        let result = self.base.s().preimage_set(l.members());
        result == self.ideal_members(i)
    }

    /// Construction-time agreement of the relational formulas with the generic
    /// frame formulas; failures indicate an implementation bug.
    fn crosscheck(&self) -> Result<(), Error> {
        for i in 0..self.len() {
            let generic = self.frame.pseudocomplement(i);
            let paper = self.pseudocomplement_via_preimage(i)?;
            let neg = self.pseudocomplement_neg_image(i)?;
            if generic != paper || paper != neg {
                return Err(Error::Internal(format!(
                    "pseudocomplement routes disagree at round ideal {i}"
                )));
            }
            for j in 0..self.len() {
                if self.frame.well_inside(i, j) != self.well_inside_via_bounds(i, j) {
                    return Err(Error::Internal(format!(
                        "well-inside routes disagree at round ideals ({i},{j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// The contravariant action on a compatible subordination: `I ↦ T⁻¹[I]`
/// maps round ideals of the codomain to round ideals of the domain.
pub fn ri_on_morphism(
    t: &Subordination,
    ri_dom: &RoundIdealFrame,
    ri_cod: &RoundIdealFrame,
) -> Result<LatticeMap, Error> {
    check_morphism(t, ri_dom.base(), ri_cod.base())?;
    let mut table = Vec::with_capacity(ri_cod.len());
    for j in 0..ri_cod.len() {
        let members = ri_cod.ideal_members(j);
        let pre = t.preimage_set(&members);
        table.push(ri_dom.index_of_members(&pre)?);
    }
    LatticeMap::new(ri_cod.frame().clone(), ri_dom.frame().clone(), table)
}

/// The explicit join-preserving diamond associated with `RI(T)` for a
/// continuous `T`: `◇I = {a | ∃ b ∈ I, a ∈ L(T~[b])}`.
pub fn diamond_of_morphism(
    t: &Subordination,
    ri_dom: &RoundIdealFrame,
    ri_cod: &RoundIdealFrame,
) -> Result<LatticeMap, Error> {
    check_morphism(t, ri_dom.base(), ri_cod.base())?;
    let alg1 = ri_dom.base().alg();
    let tilde = t.tilde_inverse();
    let mut table = Vec::with_capacity(ri_cod.len());
    for j in 0..ri_cod.len() {
        let members = ri_cod.ideal_members(j);
        let diamond: BTreeSet<u32> = alg1
            .carrier()
            .filter(|&a| {
                members
                    .iter()
                    .any(|&b| tilde.targets(b).all(|ap| alg1.leq(a, ap)))
            })
            .collect();
        table.push(ri_dom.index_of_members(&diamond)?);
    }
    LatticeMap::new(ri_cod.frame().clone(), ri_dom.frame().clone(), table)
}

fn check_morphism(t: &Subordination, dom: &SubAlgebra, cod: &SubAlgebra) -> Result<(), Error> {
    if t.dom() != dom.alg() || t.cod() != cod.alg() {
        return Err(Error::Precondition(
            "morphism does not connect the given algebras".into(),
        ));
    }
    let report = t.check_axioms_capped(crate::subord::RELATION_SCAN_CAP)?;
    if !report.is_subordination() {
        return Err(Error::Precondition(
            "morphism is not a subordination".into(),
        ));
    }
    let compat = t.is_compatible(dom.s(), cod.s())?;
    if !compat.ok() {
        return Err(Error::Precondition(
            "morphism is not compatible with the endo-subordinations".into(),
        ));
    }
    Ok(())
}

/// MacNeille completion of an S5-subordination algebra: the booleanization
/// of its round-ideal frame, carrying the inherited proximity, presented
/// both as a set of normal round ideals and as a powerset algebra over its
/// atoms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MacNeilleAlgebra {
    ri: RoundIdealFrame,
    bl: Booleanization,
    rep: AtomRep,
    sub: SubAlgebra,
}

pub fn macneille(b: &SubAlgebra) -> Result<MacNeilleAlgebra, Error> {
    let ri = round_ideals(b)?;
    let bl = ri.frame().booleanization();
    let rep = atom_representation(&bl.frame)?;
    // proximity on normal ideals: the restriction of well-inside on the
    // round-ideal frame, transported to atom masks
    let alg = rep.alg;
    let mut pairs = Vec::new();
    for m1 in alg.carrier() {
        let i = bl.to_l(rep.from_mask[m1 as usize]);
        for m2 in alg.carrier() {
            let j = bl.to_l(rep.from_mask[m2 as usize]);
            if ri.frame().well_inside(i, j) {
                pairs.push((m1, m2));
            }
        }
    }
    let s = Subordination::from_pairs(alg, alg, pairs)?;
    let sub = SubAlgebra::new(s)?;
    Ok(MacNeilleAlgebra { ri, bl, rep, sub })
}

impl MacNeilleAlgebra {
    pub fn base(&self) -> &SubAlgebra {
        self.ri.base()
    }

    pub fn ri(&self) -> &RoundIdealFrame {
        &self.ri
    }

    pub fn booleanization(&self) -> &Booleanization {
        &self.bl
    }

    pub fn rep(&self) -> &AtomRep {
        &self.rep
    }

    /// The completion as an S5-subordination algebra `(P(atoms), ≺)`.
    pub fn as_subalgebra(&self) -> &SubAlgebra {
        &self.sub
    }

    pub fn size(&self) -> usize {
        self.bl.frame.size()
    }

    /// Indices (into the round-ideal frame) of the normal round ideals.
    pub fn normal_ri_indices(&self) -> Vec<usize> {
        self.bl.carrier.clone()
    }

    pub fn is_normal(&self, ri_index: usize) -> bool {
        self.bl.index_of(ri_index).is_some()
    }

    /// Proximity between two round-ideal indices (both must be normal).
    pub fn prec_ri(&self, i: usize, j: usize) -> bool {
        self.ri.frame().well_inside(i, j)
    }

    pub fn mask_of_ri(&self, ri_index: usize) -> Option<u32> {
        self.bl.index_of(ri_index).map(|e| self.rep.to_mask[e])
    }

    pub fn ri_of_mask(&self, mask: u32) -> usize {
        self.bl.to_l(self.rep.from_mask[mask as usize])
    }

    /// The fixpoint characterization of normality for any round ideal.
    pub fn fixpoint_criterion(&self, ri_index: usize) -> bool {
        self.ri.normal_fixpoint_holds(ri_index)
    }
}

/// `Q_B : B -> NI(B)`, the relation `a Q I` iff `a ∈ I`.
pub fn q_relation(m: &MacNeilleAlgebra) -> Subordination {
    let dom = *m.base().alg();
    let cod = m.rep.alg;
    let mut pairs = Vec::new();
    for a in dom.carrier() {
        for mask in cod.carrier() {
            let g = m.ri.generator(m.ri_of_mask(mask));
            if dom.leq(a, g) {
                pairs.push((a, mask));
            }
        }
    }
    Subordination::from_pairs(dom, cod, pairs).expect("elements are in range")
}

/// Outcome of the isomorphism laws for `Q_B` with `T = Q_B~`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QIsoReport {
    /// `T ∘ Q_B = S`
    pub composite_is_s: bool,
    /// `Q_B ∘ T = ≺`
    pub composite_is_prec: bool,
}

pub fn q_iso_laws(m: &MacNeilleAlgebra) -> Result<QIsoReport, Error> {
    let q = q_relation(m);
    let t = q.tilde_inverse();
    let t_after_q = q.compose(&t)?; // T ∘ Q_B : B -> B
    let q_after_t = t.compose(&q)?; // Q_B ∘ T : NI -> NI
    Ok(QIsoReport {
        composite_is_s: &t_after_q == m.base().s(),
        composite_is_prec: &q_after_t == m.as_subalgebra().s(),
    })
}

/// Interpolation through a normal ideal: `a ∈ J` iff there is a normal `I`
/// with `a ∈ I ≺ J`, for every element and every round ideal.
pub fn interpolation_law_holds(m: &MacNeilleAlgebra) -> bool {
    let alg = m.base().alg();
    let ri = &m.ri;
    let normals = m.normal_ri_indices();
    for j in 0..ri.len() {
        let gj = ri.generator(j);
        for a in alg.carrier() {
            let member = alg.leq(a, gj);
            let interpolates = normals
                .iter()
                .any(|&i| alg.leq(a, ri.generator(i)) && m.prec_ri(i, j));
            if member != interpolates {
                return false;
            }
        }
    }
    true
}

/// `ι(b) = S⁻¹[↓b]` as a normal round ideal, returned with its index and
/// completion mask. On compingent algebras ι is a structure-preserving
/// bijection; elsewhere it can collapse elements, which callers report
/// rather than reject.
pub fn iota(m: &MacNeilleAlgebra, b_elem: u32) -> Result<(ElemFamily, usize, u32), Error> {
    m.base().alg().check_elem(b_elem)?;
    let members = m.base().s_preimage_of_elem(b_elem);
    let idx = m.ri.index_of_members(&members)?;
    let mask = m
        .mask_of_ri(idx)
        .ok_or_else(|| Error::Internal("iota image is not normal".into()))?;
    let fam = m.ri.ideal_family(idx);
    Ok((fam, idx, mask))
}

/// The compatible subordination `𝔅(□) : 𝔅M -> 𝔅L` of a preframe map
/// `□ : L -> M`, given by `b 𝔅(□) a` iff `b ≺ □a`, presented over the atom
/// masks of the two booleanizations.
#[derive(Clone, Debug)]
pub struct BMorphism {
    pub dom_bl: Booleanization,
    pub dom_rep: AtomRep,
    pub cod_bl: Booleanization,
    pub cod_rep: AtomRep,
    pub sub: Subordination,
}

pub fn b_on_morphism(box_map: &LatticeMap) -> Result<BMorphism, Error> {
    if !(box_map.preserves_binary_meets() && box_map.preserves_top()) {
        return Err(Error::Precondition(
            "booleanization functor needs a preframe homomorphism".into(),
        ));
    }
    if !box_map.dom().is_regular() || !box_map.cod().is_regular() {
        return Err(Error::Precondition(
            "booleanization functor needs compact regular frames".into(),
        ));
    }
    let l = box_map.dom();
    let mm = box_map.cod();
    let dom_bl = mm.booleanization();
    let cod_bl = l.booleanization();
    let dom_rep = atom_representation(&dom_bl.frame)?;
    let cod_rep = atom_representation(&cod_bl.frame)?;
    let mut pairs = Vec::new();
    for bmask in dom_rep.alg.carrier() {
        let b_elem = dom_bl.to_l(dom_rep.from_mask[bmask as usize]);
        for amask in cod_rep.alg.carrier() {
            let a_elem = cod_bl.to_l(cod_rep.from_mask[amask as usize]);
            if mm.well_inside(b_elem, box_map.apply(a_elem)) {
                pairs.push((bmask, amask));
            }
        }
    }
    let sub = Subordination::from_pairs(dom_rep.alg, cod_rep.alg, pairs)?;
    Ok(BMorphism {
        dom_bl,
        dom_rep,
        cod_bl,
        cod_rep,
        sub,
    })
}

/// `NI(T) = 𝔅(RI(T)) : NI(B1) -> NI(B2)` for a compatible `T : B1 -> B2`,
/// expressed over the masks of the two completions.
pub fn ni_on_morphism(
    t: &Subordination,
    m1: &MacNeilleAlgebra,
    m2: &MacNeilleAlgebra,
) -> Result<Subordination, Error> {
    let ri_map = ri_on_morphism(t, &m1.ri, &m2.ri)?;
    let bm = b_on_morphism(&ri_map)?;
    if bm.dom_rep.alg != m1.rep.alg || bm.cod_rep.alg != m2.rep.alg {
        return Err(Error::Internal(
            "completion representations disagree between routes".into(),
        ));
    }
    Ok(bm.sub)
}

/// The naturality square for `Q`: `NI(T) ∘ Q_B1 = Q_B2 ∘ T`.
pub fn naturality_q(
    t: &Subordination,
    m1: &MacNeilleAlgebra,
    m2: &MacNeilleAlgebra,
) -> Result<bool, Error> {
    let ni_t = ni_on_morphism(t, m1, m2)?;
    let q1 = q_relation(m1);
    let q2 = q_relation(m2);
    let left = q1.compose(&ni_t)?; // NI(T) ∘ Q_B1
    let right = t.compose(&q2)?; // Q_B2 ∘ T
    Ok(left == right)
}

/// The frame isomorphism `f_L : L -> RI(𝔅L, ≺)`, `f_L(a) = {b ∈ 𝔅L | b ≺ a}`.
#[derive(Clone, Debug)]
pub struct FrameCompletionIso {
    pub bl: Booleanization,
    pub rep: AtomRep,
    pub sub: SubAlgebra,
    pub ri: RoundIdealFrame,
    pub map: LatticeMap,
}

pub fn f_iso(l: &FinFrame) -> Result<FrameCompletionIso, Error> {
    if !l.is_regular() {
        return Err(Error::Precondition(
            "the completion isomorphism lives on compact regular frames".into(),
        ));
    }
    let bl = l.booleanization();
    let rep = atom_representation(&bl.frame)?;
    // (𝔅L, ≺) with ≺ the restriction of well-inside on L
    let alg = rep.alg;
    let mut pairs = Vec::new();
    for m1 in alg.carrier() {
        let e1 = bl.to_l(rep.from_mask[m1 as usize]);
        for m2 in alg.carrier() {
            let e2 = bl.to_l(rep.from_mask[m2 as usize]);
            if l.well_inside(e1, e2) {
                pairs.push((m1, m2));
            }
        }
    }
    let sub = SubAlgebra::new(Subordination::from_pairs(alg, alg, pairs)?)?;
    let ri = round_ideals(&sub)?;
    let mut table = Vec::with_capacity(l.size());
    for a in 0..l.size() {
        let members: BTreeSet<u32> = alg
            .carrier()
            .filter(|&m| {
                let e = bl.to_l(rep.from_mask[m as usize]);
                l.well_inside(e, a)
            })
            .collect();
        table.push(ri.index_of_members(&members)?);
    }
    let map = LatticeMap::new(l.clone(), ri.frame().clone(), table)?;
    Ok(FrameCompletionIso {
        bl,
        rep,
        sub,
        ri,
        map,
    })
}

/// The naturality square for `f`: `RI(𝔅□) ∘ f_L = f_M ∘ □`.
pub fn naturality_f(box_map: &LatticeMap) -> Result<bool, Error> {
    let fl = f_iso(box_map.dom())?;
    let fm = f_iso(box_map.cod())?;
    let bm = b_on_morphism(box_map)?;
    let ri_of_b = ri_on_morphism(&bm.sub, &fm.ri, &fl.ri)?;
    let left = fl.map.compose(&ri_of_b)?;
    let right = box_map.compose(&fm.map)?;
    Ok(left.table() == right.table())
}

/// Classical MacNeille completion of the underlying boolean algebra by the
/// LU-oracle (normal ideals among all brute-force-enumerated ideals). For a
/// compingent algebra this must coincide with the normal round ideals.
pub fn classical_macneille_members(alg: &BoolAlg) -> Result<Vec<BTreeSet<u32>>, Error> {
    let ideals = crate::boolcore::brute_force_ideals(alg)?;
    Ok(ideals
        .into_iter()
        .filter(|i| crate::boolcore::is_normal_ideal(alg, i))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{all_partitions, Partition};
    use crate::subord::from_equivalence;

    fn b_01_2() -> SubAlgebra {
        from_equivalence(&Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap()).unwrap()
    }

    #[test]
    fn round_ideals_of_discrete_one_atom() {
        let b = SubAlgebra::discrete(BoolAlg::new(1).unwrap());
        let ri = round_ideals(&b).unwrap();
        assert_eq!(ri.len(), 2);
    }

    #[test]
    fn round_ideals_of_three_atom_example() {
        let ri = round_ideals(&b_01_2()).unwrap();
        // downsets of the saturated elements: ∅, {0,1}, {0,1,2}, {2}
        assert_eq!(ri.len(), 4);
        let gens: Vec<u32> = (0..4).map(|i| ri.generator(i)).collect();
        assert_eq!(gens, vec![0b000, 0b011, 0b111, 0b100]);
        // oracle: filter all principal ideals by the fixpoint I = S⁻¹[I]
        let b = b_01_2();
        let expected: Vec<u32> = b
            .alg()
            .carrier()
            .filter(|&g| {
                let members: BTreeSet<u32> =
                    b.alg().carrier().filter(|&m| b.alg().leq(m, g)).collect();
                b.s().preimage_set(&members) == members
            })
            .collect();
        let mut sorted = gens.clone();
        sorted.sort_unstable();
        let mut expected = expected;
        expected.sort_unstable();
        assert_eq!(sorted, expected);
    }

    #[test]
    fn pseudocomplement_of_class_ideal() {
        let ri = round_ideals(&b_01_2()).unwrap();
        let i = ri.index_of_generator(0b011).unwrap();
        let star = ri.pseudocomplement_via_preimage(i).unwrap();
        assert_eq!(ri.generator(star), 0b100);
        assert_eq!(star, ri.frame().pseudocomplement(i));
        assert_eq!(star, ri.pseudocomplement_neg_image(i).unwrap());
    }

    #[test]
    fn round_ideal_frame_is_regular() {
        for k in 1..=4 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let ri = round_ideals(&b).unwrap();
                assert!(ri.frame().is_regular());
                assert!(ri.frame().is_boolean());
            }
        }
    }

    #[test]
    fn s_preimage_of_any_ideal_is_round() {
        let b = b_01_2();
        let ri = round_ideals(&b).unwrap();
        for g in b.alg().carrier() {
            let members: BTreeSet<u32> = b.alg().carrier().filter(|&m| b.alg().leq(m, g)).collect();
            let pre = b.s().preimage_set(&members);
            assert!(ri.index_of_members(&pre).is_ok());
        }
    }

    #[test]
    fn ri_identity_morphism_is_identity() {
        for e in all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            let ri = round_ideals(&b).unwrap();
            let map = ri_on_morphism(b.s(), &ri, &ri).unwrap();
            assert_eq!(map.table(), LatticeMap::identity(ri.frame()).table());
        }
    }

    #[test]
    fn ri_preserves_top_and_classifies_preframe() {
        let b = b_01_2();
        let ri = round_ideals(&b).unwrap();
        let map = ri_on_morphism(b.s(), &ri, &ri).unwrap();
        assert!(map.preserves_top());
        assert!(map.preserves_binary_meets());
    }

    #[test]
    fn macneille_of_discrete_is_bijective_via_iota() {
        for k in 1..=3 {
            let b = SubAlgebra::discrete(BoolAlg::new(k).unwrap());
            let m = macneille(&b).unwrap();
            assert_eq!(m.size(), b.alg().size());
            // ι(b) = ↓b, injective, and a ≤ b iff ι(a) ≺ ι(b)
            let mut seen = BTreeSet::new();
            for x in b.alg().carrier() {
                let (_, idx, _) = iota(&m, x).unwrap();
                assert_eq!(m.ri().generator(idx), x);
                seen.insert(idx);
            }
            assert_eq!(seen.len(), b.alg().size());
            for x in b.alg().carrier() {
                for y in b.alg().carrier() {
                    let (_, ix, _) = iota(&m, x).unwrap();
                    let (_, iy, _) = iota(&m, y).unwrap();
                    assert_eq!(b.s().holds(x, y), m.prec_ri(ix, iy));
                }
            }
        }
    }

    #[test]
    fn macneille_equals_round_ideals_on_example() {
        let m = macneille(&b_01_2()).unwrap();
        assert_eq!(m.size(), 4);
        assert_eq!(m.normal_ri_indices().len(), m.ri().len());
    }

    #[test]
    fn macneille_of_single_class_two_atoms() {
        let b = from_equivalence(&Partition::single_class(2)).unwrap();
        let m = macneille(&b).unwrap();
        assert_eq!(m.size(), 2);
    }

    #[test]
    fn fixpoint_criterion_matches_normality() {
        for k in 1..=4 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let m = macneille(&b).unwrap();
                for i in 0..m.ri().len() {
                    assert_eq!(m.is_normal(i), m.fixpoint_criterion(i));
                }
            }
        }
    }

    #[test]
    fn iota_non_injective_off_compingent() {
        let m = macneille(&b_01_2()).unwrap();
        let (fam_0, _, _) = iota(&m, 0b001).unwrap();
        let (fam_empty, _, _) = iota(&m, 0).unwrap();
        assert_eq!(fam_0.members(), fam_empty.members());
        assert_eq!(fam_0.members(), &BTreeSet::from([0]));
        // ι(1) is the whole carrier
        let (fam_top, _, _) = iota(&m, m.base().alg().top()).unwrap();
        assert_eq!(fam_top.len(), m.base().alg().size());
    }

    #[test]
    fn q_iso_and_interpolation_exhaustive_small() {
        for k in 1..=3 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let m = macneille(&b).unwrap();
                let report = q_iso_laws(&m).unwrap();
                assert!(report.composite_is_s && report.composite_is_prec);
                assert!(interpolation_law_holds(&m));
            }
        }
    }

    #[test]
    fn q_membership_example() {
        let b = SubAlgebra::discrete(BoolAlg::new(1).unwrap());
        let m = macneille(&b).unwrap();
        let q = q_relation(&m);
        let idx = (0..m.ri().len())
            .find(|&i| m.ri().generator(i) == 1)
            .unwrap();
        let mask = m.mask_of_ri(idx).unwrap();
        assert!(q.holds(1, mask));
    }

    #[test]
    fn b_functor_identity_is_prec() {
        let f = FinFrame::powerset(2);
        let bm = b_on_morphism(&LatticeMap::identity(&f)).unwrap();
        // on a boolean frame, ≺ is ≤ transported to masks
        for m1 in bm.dom_rep.alg.carrier() {
            for m2 in bm.cod_rep.alg.carrier() {
                let e1 = bm.dom_bl.to_l(bm.dom_rep.from_mask[m1 as usize]);
                let e2 = bm.cod_bl.to_l(bm.cod_rep.from_mask[m2 as usize]);
                assert_eq!(bm.sub.holds(m1, m2), f.well_inside(e1, e2));
                assert_eq!(bm.sub.holds(m1, m2), f.leq(e1, e2));
            }
        }
    }

    #[test]
    fn b_morphism_is_compatible() {
        let f = FinFrame::powerset(2);
        let g = FinFrame::powerset(1);
        // constant-top map is a preframe homomorphism
        let h = LatticeMap::new(g.clone(), f.clone(), vec![f.top(); g.size()]).unwrap();
        let bm = b_on_morphism(&h).unwrap();
        // b 𝔅(□) a always, since b ≺ 1
        assert_eq!(
            bm.sub.rel().count(),
            bm.dom_rep.alg.size() * bm.cod_rep.alg.size()
        );
        let s1 = crate::frames::prec_subordination(&bm.dom_bl.frame, &bm.dom_rep).unwrap();
        let s2 = crate::frames::prec_subordination(&bm.cod_bl.frame, &bm.cod_rep).unwrap();
        assert!(bm.sub.is_compatible(s1.s(), s2.s()).unwrap().ok());
    }

    #[test]
    fn f_iso_on_powersets_and_naturality() {
        for k in 1..=3 {
            let f = FinFrame::powerset(k);
            let iso = f_iso(&f).unwrap();
            assert!(iso.map.frame_iso_check());
        }
        // naturality for a couple of handmade preframe maps P(2) -> P(2)
        let f = FinFrame::powerset(2);
        for table in [vec![0, 1, 2, 3], vec![3, 3, 3, 3], vec![0, 0, 2, 2]] {
            let h = LatticeMap::new(f.clone(), f.clone(), table).unwrap();
            if h.preserves_binary_meets() && h.preserves_top() {
                assert!(naturality_f(&h).unwrap());
            }
        }
    }

    #[test]
    fn f_iso_rejects_non_regular() {
        assert!(f_iso(&FinFrame::chain(3)).is_err());
    }

    #[test]
    fn naturality_q_for_identity() {
        let b = b_01_2();
        let m = macneille(&b).unwrap();
        assert!(naturality_q(b.s(), &m, &m).unwrap());
    }

    #[test]
    fn classical_macneille_matches_on_compingent() {
        for k in 1..=3 {
            let b = SubAlgebra::discrete(BoolAlg::new(k).unwrap());
            let m = macneille(&b).unwrap();
            let classical = classical_macneille_members(b.alg()).unwrap();
            let ours: Vec<BTreeSet<u32>> = m
                .normal_ri_indices()
                .iter()
                .map(|&i| m.ri().ideal_members(i))
                .collect();
            let mut classical = classical;
            classical.sort();
            let mut ours = ours;
            ours.sort();
            assert_eq!(classical, ours);
        }
    }

    #[test]
    fn star_star_monotone_under_well_inside() {
        // I ≺ J forces I** ≺ J, a consequence of I*** = I*
        for e in all_partitions(3).unwrap() {
            let b = from_equivalence(&e).unwrap();
            let ri = round_ideals(&b).unwrap();
            for i in 0..ri.len() {
                let star = ri.frame().pseudocomplement(i);
                assert_eq!(
                    ri.frame().pseudocomplement(ri.frame().double_pseudo(i)),
                    star
                );
                for j in 0..ri.len() {
                    if ri.frame().well_inside(i, j) {
                        assert!(ri.frame().well_inside(ri.star_star(i).unwrap(), j));
                    }
                }
            }
        }
    }

    #[test]
    fn q_relation_is_a_compatible_subordination() {
        for k in 1..=3 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let m = macneille(&b).unwrap();
                let q = q_relation(&m);
                assert!(q.check_axioms().unwrap().is_subordination());
                assert!(q.is_compatible(b.s(), m.as_subalgebra().s()).unwrap().ok());
            }
        }
    }

    #[test]
    fn explicit_diamond_witnesses_cmorphism() {
        let b = b_01_2();
        let ri = round_ideals(&b).unwrap();
        let box_map = ri_on_morphism(b.s(), &ri, &ri).unwrap();
        let diamond = diamond_of_morphism(b.s(), &ri, &ri).unwrap();
        assert!(box_map.diamond_witnesses(&diamond));
    }
}
