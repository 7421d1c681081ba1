//! The law registry: every structural law the workbench asserts, as checks
//! over a workspace. The suite runner feeds generated workspaces through
//! these checks; `verify` runs the same checks against user files.
//!
//! Applicability conventions, shared by generated and user workspaces:
//! endo subordination objects that pass the S5 axioms are treated as
//! S5-subordination algebras; compatible `rel` objects induce compatible
//! subordinations between the powerset algebras of their spaces; `map`
//! objects apply wherever both frames validate; `devmap` objects are read
//! as maps between the discrete de Vries algebras of their carriers.
//! Objects above the relation-scan cap are skipped, not failed.

use std::collections::BTreeSet;

use crate::boolcore::{format_elem, ElemFamily, FamilyKind};
use crate::dsl::{serialize, Object, Workspace};
use crate::duality::{
    clop, continuity_crosscheck, dual_isomorphisms, phi_box_law, psi_image_law, r_regular_opens,
    translation_laws_hold, ult, FinSubSpace, PointRelation,
};
use crate::frames::{FinFrame, LatticeMap};
use crate::functors::{
    classical_macneille_members, diamond_of_morphism, interpolation_law_holds, iota, macneille,
    naturality_f, naturality_q, q_iso_laws, ri_on_morphism, round_ideals,
};
use crate::morphclass::{
    box_of, continuity_variants, functional_characterization, is_continuous, is_functional, t_of,
    DeVriesMap,
};
use crate::subord::{SubAlgebra, Subordination, RELATION_SCAN_CAP};

use super::{Failure, LawResult};

fn fail(ws: &Workspace, out: &mut Vec<Failure>, detail: String) {
    out.push(Failure {
        workspace_dsl: serialize(ws),
        detail,
    });
}

// ------------------------------------------------------------- scanners --

/// Endo subordination objects that pass S1-S7, as S5-subordination
/// algebras. Objects above the scan cap are skipped.
fn s5_subalgebras(ws: &Workspace) -> Vec<(String, SubAlgebra)> {
    let mut out = Vec::new();
    for (name, obj) in ws.iter() {
        if let Object::Sub { sub, .. } = obj {
            if !sub.is_endo() || sub.dom().n_atoms() > RELATION_SCAN_CAP {
                continue;
            }
            if let Ok(b) = SubAlgebra::new(sub.clone()) {
                out.push((name.to_string(), b));
            }
        }
    }
    out
}

/// Compatible point relations, skipping anything above the scan cap.
fn compatible_rels(ws: &Workspace) -> Vec<(String, PointRelation)> {
    let mut out = Vec::new();
    for (name, obj) in ws.iter() {
        if let Object::Rel { rel, .. } = obj {
            if rel.dom().points() as u32 > RELATION_SCAN_CAP
                || rel.cod().points() as u32 > RELATION_SCAN_CAP
            {
                continue;
            }
            if rel.is_compatible() {
                out.push((name.to_string(), rel.clone()));
            }
        }
    }
    out
}

fn spaces(ws: &Workspace) -> Vec<(String, FinSubSpace)> {
    ws.iter()
        .filter_map(|(name, obj)| match obj {
            Object::Space(s) if s.points() as u32 <= RELATION_SCAN_CAP => {
                Some((name.to_string(), s.clone()))
            }
            _ => None,
        })
        .collect()
}

fn valid_frames(ws: &Workspace) -> Vec<(String, FinFrame)> {
    ws.iter()
        .filter_map(|(name, obj)| match obj {
            Object::Frame { leq } => FinFrame::from_leq(leq.clone())
                .ok()
                .map(|f| (name.to_string(), f)),
            _ => None,
        })
        .collect()
}

fn lattice_maps(ws: &Workspace) -> Vec<(String, LatticeMap)> {
    let mut out = Vec::new();
    for (name, obj) in ws.iter() {
        if let Object::Map { dom, cod, table } = obj {
            let (Some(Object::Frame { leq: dl }), Some(Object::Frame { leq: cl })) =
                (ws.get(dom), ws.get(cod))
            else {
                continue;
            };
            let (Ok(df), Ok(cf)) = (
                FinFrame::from_leq(dl.clone()),
                FinFrame::from_leq(cl.clone()),
            ) else {
                continue;
            };
            if let Ok(m) = LatticeMap::new(df, cf, table.clone()) {
                out.push((name.to_string(), m));
            }
        }
    }
    out
}

/// DevMap objects as maps between the discrete de Vries algebras of their
/// carriers.
fn devries_maps(ws: &Workspace) -> Vec<(String, DeVriesMap)> {
    let mut out = Vec::new();
    for (name, obj) in ws.iter() {
        if let Object::DevMap { dom, cod, table } = obj {
            let (Some(Object::Algebra(da)), Some(Object::Algebra(ca))) = (ws.get(dom), ws.get(cod))
            else {
                continue;
            };
            if da.n_atoms() > RELATION_SCAN_CAP || ca.n_atoms() > RELATION_SCAN_CAP {
                continue;
            }
            let d = SubAlgebra::discrete(*da);
            let c = SubAlgebra::discrete(*ca);
            if let Ok(m) = DeVriesMap::new(d, c, table.clone()) {
                out.push((name.to_string(), m));
            }
        }
    }
    out
}

/// Subordination objects read between discrete de Vries algebras, for the
/// box correspondence laws.
fn devries_subordinations(ws: &Workspace) -> Vec<(String, Subordination)> {
    let mut out = Vec::new();
    for (name, obj) in ws.iter() {
        if let Object::Sub { sub, .. } = obj {
            if sub.dom().n_atoms() > RELATION_SCAN_CAP || sub.cod().n_atoms() > RELATION_SCAN_CAP {
                continue;
            }
            match sub.check_axioms_capped(RELATION_SCAN_CAP) {
                Ok(r) if r.is_subordination() => out.push((name.to_string(), sub.clone())),
                _ => continue,
            }
        }
    }
    out
}

/// The compatible subordination `S_R` together with the endo structures of
/// its two spaces.
fn rel_triple(r: &PointRelation) -> Result<(Subordination, SubAlgebra, SubAlgebra), crate::Error> {
    let t = crate::subord::from_closed_relation(r)?;
    let s1 = clop(r.dom())?;
    let s2 = clop(r.cod())?;
    Ok((t, s1, s2))
}

/// Composable pairs of compatible relations in the workspace, in name order.
type NamedRel = (String, PointRelation);

fn composable_rel_pairs(ws: &Workspace) -> Vec<(NamedRel, NamedRel)> {
    let rels = compatible_rels(ws);
    let mut out = Vec::new();
    for (n1, r1) in &rels {
        for (n2, r2) in &rels {
            if r1.cod() == r2.dom() {
                out.push(((n1.clone(), r1.clone()), (n2.clone(), r2.clone())));
            }
        }
    }
    out
}

// ----------------------------------------------------------- law checks --

pub(super) fn check_ri_frame(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match round_ideals(&b) {
            Ok(ri) => {
                let report = crate::frames::validate_order(ri.frame().leq_matrix());
                if !report.is_valid() {
                    fail(ws, &mut failures, format!("{name}: {}", report.describe()));
                    continue;
                }
                // subframe of the ideal frame: meets are intersections,
                // binary joins are generated joins
                let alg = b.alg();
                for i in 0..ri.len() {
                    for j in 0..ri.len() {
                        let meet = ri.frame().meet(i, j);
                        if ri.generator(meet) != alg.meet(ri.generator(i), ri.generator(j)) {
                            fail(
                                ws,
                                &mut failures,
                                format!(
                                    "{name}: meet of round ideals ({i},{j}) is not intersection"
                                ),
                            );
                        }
                        let join = ri.frame().join(i, j);
                        if ri.generator(join) != alg.join(ri.generator(i), ri.generator(j)) {
                            fail(
                                ws,
                                &mut failures,
                                format!("{name}: join of round ideals ({i},{j}) is not the generated ideal"),
                            );
                        }
                    }
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ri_pseudocomplement(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        let ri = match round_ideals(&b) {
            Ok(ri) => ri,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        for i in 0..ri.len() {
            instances += 1;
            let generic = ri.frame().pseudocomplement(i);
            let paper = ri.pseudocomplement_via_preimage(i);
            let neg = ri.pseudocomplement_neg_image(i);
            match (paper, neg) {
                (Ok(p), Ok(n)) if p == generic && n == generic => {}
                (p, n) => fail(
                    ws,
                    &mut failures,
                    format!(
                        "{name}: pseudocomplement routes disagree at ideal {i}: generic={generic}, S-preimage={p:?}, negated-image={n:?}"
                    ),
                ),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ri_well_inside(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        let ri = match round_ideals(&b) {
            Ok(ri) => ri,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        for i in 0..ri.len() {
            for j in 0..ri.len() {
                instances += 1;
                if ri.frame().well_inside(i, j) != ri.well_inside_via_bounds(i, j) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: well-inside routes disagree at ideals ({i},{j})"),
                    );
                }
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ri_regular(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match round_ideals(&b) {
            Ok(ri) => {
                if !ri.frame().is_regular() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: round-ideal frame not regular"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ni_fixpoint(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        let m = match macneille(&b) {
            Ok(m) => m,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        for i in 0..m.ri().len() {
            instances += 1;
            if m.is_normal(i) != m.fixpoint_criterion(i) {
                fail(
                    ws,
                    &mut failures,
                    format!(
                        "{name}: normality and the fixpoint criterion disagree at round ideal {i}"
                    ),
                );
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ni_devries(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match macneille(&b) {
            Ok(m) => {
                if !m.booleanization().frame.is_boolean() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: completion is not boolean"),
                    );
                }
                match m.as_subalgebra().s().check_axioms_capped(RELATION_SCAN_CAP) {
                    Ok(r) if r.profile().de_vries => {}
                    Ok(r) => fail(
                        ws,
                        &mut failures,
                        format!(
                            "{name}: completion proximity misses the de Vries profile: S8 {}",
                            r.s8.describe()
                        ),
                    ),
                    Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_q_iso(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match macneille(&b).and_then(|m| q_iso_laws(&m)) {
            Ok(r) if r.composite_is_s && r.composite_is_prec => {}
            Ok(r) => fail(
                ws,
                &mut failures,
                format!(
                    "{name}: Q isomorphism laws fail (T∘Q=S: {}, Q∘T=≺: {})",
                    r.composite_is_s, r.composite_is_prec
                ),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_q_interpolation(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match macneille(&b) {
            Ok(m) => {
                if !interpolation_law_holds(&m) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: membership fails to interpolate through a normal ideal"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_iota(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        let m = match macneille(&b) {
            Ok(m) => m,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        match iota(&m, b.alg().top()) {
            Ok((fam, _, _)) => {
                if fam.len() != b.alg().size() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: ι(1) is not the whole carrier"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
        let profile = match b.s().check_axioms_capped(RELATION_SCAN_CAP) {
            Ok(r) => r.profile(),
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        if profile.compingent {
            let mut images = BTreeSet::new();
            for x in b.alg().carrier() {
                match iota(&m, x) {
                    Ok((_, idx, _)) => {
                        images.insert(idx);
                    }
                    Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
                }
            }
            if images.len() != b.alg().size() {
                fail(
                    ws,
                    &mut failures,
                    format!("{name}: ι is not injective on a compingent algebra"),
                );
            }
            for x in b.alg().carrier() {
                for y in b.alg().carrier() {
                    let ix = iota(&m, x).map(|t| t.1);
                    let iy = iota(&m, y).map(|t| t.1);
                    if let (Ok(ix), Ok(iy)) = (ix, iy) {
                        if b.s().holds(x, y) != m.prec_ri(ix, iy) {
                            fail(
                                ws,
                                &mut failures,
                                format!(
                                    "{name}: a S b and ι(a) ≺ ι(b) disagree at ({}, {})",
                                    format_elem(x),
                                    format_elem(y)
                                ),
                            );
                        }
                    }
                }
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_macneille_classical(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        if b.s() != &Subordination::leq_on(*b.alg()) || b.alg().n_atoms() > 4 {
            continue;
        }
        instances += 1;
        let m = match macneille(&b) {
            Ok(m) => m,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        let mut ours: Vec<BTreeSet<u32>> = m
            .normal_ri_indices()
            .iter()
            .map(|&i| m.ri().ideal_members(i))
            .collect();
        ours.sort();
        match classical_macneille_members(b.alg()) {
            Ok(mut classical) => {
                classical.sort();
                if ours != classical {
                    fail(
                        ws,
                        &mut failures,
                        format!(
                            "{name}: completion differs from the classical normal-ideal completion"
                        ),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_neg_image(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        let alg = *b.alg();
        let families: Vec<ElemFamily> = if alg.n_atoms() <= 3 {
            let size = alg.size();
            (0u32..(1u32 << size))
                .map(|subset| {
                    let members: BTreeSet<u32> =
                        (0..size as u32).filter(|&m| subset >> m & 1 == 1).collect();
                    ElemFamily::new(alg, members, FamilyKind::Raw).expect("raw families are valid")
                })
                .collect()
        } else {
            // structured families at larger sizes: principal ideals,
            // principal filters, singletons
            let mut fams = Vec::new();
            for g in alg.carrier() {
                fams.push(ElemFamily::principal_ideal(alg, g).unwrap());
                fams.push(ElemFamily::principal_filter(alg, g).unwrap());
                fams.push(ElemFamily::raw(alg, [g]).unwrap());
            }
            fams
        };
        for x in families {
            instances += 1;
            if !crate::subord::neg_image_law_holds(&b, &x) {
                fail(
                    ws,
                    &mut failures,
                    format!(
                        "{name}: ¬S[X] ≠ S⁻¹[¬X] for a family of {} elements",
                        x.len()
                    ),
                );
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ult_clop_roundtrip(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match crate::duality::ult_clop_roundtrip(&b) {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: clop(ult(B)) differs from B"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    for (name, x) in spaces(ws) {
        instances += 1;
        match clop(&x).and_then(|b| ult(&b)) {
            Ok(back) => {
                if back != x {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: ult(clop(X)) differs from X"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_dual_iso_ri(ws: &Workspace) -> LawResult {
    dual_iso_check(ws, true)
}

pub(super) fn check_dual_iso_ni(ws: &Workspace) -> LawResult {
    dual_iso_check(ws, false)
}

fn dual_iso_check(ws: &Workspace, ri_side: bool) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match dual_isomorphisms(&b) {
            Ok(r) => {
                let ok = if ri_side {
                    r.ri_iso_saturated && r.ri_iso_quotient && r.star_formula && r.star_star_formula
                } else {
                    r.ni_iso_r_regular && r.ni_iso_quotient
                };
                if !ok {
                    let detail = r.detail.clone().unwrap_or_else(|| format!("{r:?}"));
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: dual isomorphism fails: {detail}"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_phi_box(ws: &Workspace) -> LawResult {
    phi_box_failures(ws, FinSubSpace::box_r)
}

/// The Φ/Box law with an injectable box operator; the acceptance suite uses
/// this hook to demonstrate that a broken operator is caught with a
/// serialized counterexample.
pub fn phi_box_failures(
    ws: &Workspace,
    box_op: impl Fn(&FinSubSpace, u32) -> u32 + Copy,
) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        for g in b.alg().carrier() {
            instances += 1;
            let ideal = ElemFamily::principal_ideal(*b.alg(), g).expect("carrier in range");
            match phi_box_law(&b, &ideal, box_op) {
                Ok((lhs, rhs)) if lhs == rhs => {}
                Ok((lhs, rhs)) => {
                    let mut wsc = ws.clone();
                    // the family statement needs an algebra object to refer to
                    let existing = wsc.iter().find_map(|(n, o)| match o {
                        Object::Algebra(a) if a == b.alg() => Some(n.to_string()),
                        _ => None,
                    });
                    let alg_name = match existing {
                        Some(n) => n,
                        None => {
                            let fresh = format!("B_{name}");
                            let _ = wsc.insert(fresh.clone(), Object::Algebra(*b.alg()));
                            fresh
                        }
                    };
                    let fam_name = format!("I_{g}");
                    let _ = wsc.insert(
                        fam_name.clone(),
                        Object::Family {
                            algebra: alg_name,
                            family: ideal.clone(),
                        },
                    );
                    failures.push(Failure {
                        workspace_dsl: serialize(&wsc),
                        detail: format!(
                            "{name}: Φ(S⁻¹[{fam_name}]) = {} but Box_R Φ({fam_name}) = {}",
                            format_elem(lhs),
                            format_elem(rhs)
                        ),
                    });
                }
                Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_psi_image(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        for g in b.alg().carrier() {
            instances += 1;
            let filter = ElemFamily::principal_filter(*b.alg(), g).expect("carrier in range");
            match psi_image_law(&b, &filter) {
                Ok((lhs, rhs)) if lhs == rhs => {}
                Ok((lhs, rhs)) => fail(
                    ws,
                    &mut failures,
                    format!(
                        "{name}: Ψ(S[F]) = {} but R[Ψ(F)] = {} at F = ↑{}",
                        format_elem(lhs),
                        format_elem(rhs),
                        format_elem(g)
                    ),
                ),
                Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_phi_translation(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        for g in b.alg().carrier() {
            instances += 1;
            let ideal = ElemFamily::principal_ideal(*b.alg(), g).expect("carrier in range");
            match translation_laws_hold(&b, &ideal) {
                Ok(true) => {}
                Ok(false) => fail(
                    ws,
                    &mut failures,
                    format!("{name}: a Φ/Ψ translation law fails at ↓{}", format_elem(g)),
                ),
                Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_degenerate_devries(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        let profile = match b.s().check_axioms_capped(RELATION_SCAN_CAP) {
            Ok(r) => r.profile(),
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        if profile.de_vries && b.s() != &Subordination::leq_on(*b.alg()) {
            fail(
                ws,
                &mut failures,
                format!("{name}: a finite de Vries proximity must be the order"),
            );
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_box_r_interior(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, x) in spaces(ws) {
        instances += 1;
        let full = x.full_mask();
        let mut bad = None;
        for u in 0..=full {
            let b = x.box_r(u);
            if b & !u != 0 {
                bad = Some(format!("Box_R {u:#b} not below the set"));
                break;
            }
            if x.box_r(b) != b {
                bad = Some(format!("Box_R not idempotent at {u:#b}"));
                break;
            }
            if !x.is_saturated(b) {
                bad = Some(format!("Box_R {u:#b} not saturated"));
                break;
            }
            for v in 0..=full {
                if u & !v == 0 && x.box_r(u) & !x.box_r(v) != 0 {
                    bad = Some(format!("Box_R not monotone at ({u:#b},{v:#b})"));
                }
            }
            // largest saturated subset
            for w in x.saturated_sets() {
                if w & !u == 0 && w & !b != 0 {
                    bad = Some(format!("saturated {w:#b} inside {u:#b} escapes Box_R"));
                }
            }
        }
        if x.saturated_sets() != r_regular_opens(&x).sets {
            bad = Some("R-regular opens differ from saturated opens".into());
        }
        if x.is_irreducible() != x.partition().is_identity() {
            bad = Some("irreducibility must degenerate to the identity partition".into());
        }
        if let Some(msg) = bad {
            fail(ws, &mut failures, format!("{name}: {msg}"));
        }
    }
    LawResult {
        instances,
        failures,
    }
}

// --------------------------------------------------- morphism-level laws --

pub(super) fn check_cont_fourway(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        match continuity_crosscheck(&r) {
            Ok(c) => {
                if !c.agree() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: four-way continuity conditions disagree: {c:?}"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_cont_variants(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        match rel_triple(&r).and_then(|(t, s1, s2)| continuity_variants(&t, &s1, &s2)) {
            Ok(v) => {
                if !v.agree() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: continuity variants disagree: {v:?}"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_cont_auto(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        match rel_triple(&r).and_then(|(t, s1, s2)| is_continuous(&t, &s1, &s2)) {
            Ok((true, _)) => {}
            Ok((false, w)) => fail(
                ws,
                &mut failures,
                format!(
                    "{name}: compatible relation not continuous at {w:?}; finite compatible subordinations are all continuous"
                ),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_characterization(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            let def = is_functional(&t, &s1, &s2)?;
            let (za, cover) = functional_characterization(&t, &s1, &s2)?;
            Ok((def, za, cover))
        });
        match outcome {
            Ok((def, za, cover)) => {
                if def != (za && cover) {
                    fail(
                        ws,
                        &mut failures,
                        format!(
                            "{name}: functionality definition ({def}) disagrees with characterization ({za}, {cover})"
                        ),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_implies_continuous(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            Ok((is_functional(&t, &s1, &s2)?, is_continuous(&t, &s1, &s2)?.0))
        });
        match outcome {
            Ok((functional, continuous)) => {
                if functional && !continuous {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: functional but not continuous"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_point_criterion(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        match rel_triple(&r).and_then(|(t, s1, s2)| is_functional(&t, &s1, &s2)) {
            Ok(alg_side) => {
                if alg_side != r.is_functional() {
                    fail(
                        ws,
                        &mut failures,
                        format!(
                            "{name}: algebraic functionality ({alg_side}) disagrees with the point-level criterion"
                        ),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_ri_frame(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            if !is_functional(&t, &s1, &s2)? {
                return Ok(None);
            }
            let ri1 = round_ideals(&s1)?;
            let ri2 = round_ideals(&s2)?;
            let map = ri_on_morphism(&t, &ri1, &ri2)?;
            Ok(Some(map))
        });
        match outcome {
            Ok(None) => {}
            Ok(Some(map)) => {
                instances += 1;
                let p = map.classify();
                if !p.frame {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: the round-ideal action of a functional morphism must be a frame homomorphism"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_ri_morphism_preframe(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            let ri1 = round_ideals(&s1)?;
            let ri2 = round_ideals(&s2)?;
            ri_on_morphism(&t, &ri1, &ri2)
        });
        match outcome {
            Ok(map) => {
                if !(map.preserves_binary_meets() && map.preserves_top()) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: round-ideal action is not a preframe homomorphism"),
                    );
                }
                if map.preserves_directed_joins_exhaustive() == Some(false) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: round-ideal action fails a directed join"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_cmorph_witness(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            let ri1 = round_ideals(&s1)?;
            let ri2 = round_ideals(&s2)?;
            let box_map = ri_on_morphism(&t, &ri1, &ri2)?;
            let diamond = diamond_of_morphism(&t, &ri1, &ri2)?;
            Ok((box_map, diamond))
        });
        match outcome {
            Ok((box_map, diamond)) => {
                if !box_map.diamond_witnesses(&diamond) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: the explicit diamond fails the continuity inequalities"),
                    );
                }
                // confirm the search finds some witness on small instances
                let ji = box_map.dom().join_irreducibles().len() as u32;
                let budget = (box_map.cod().size() as f64).powi(ji as i32);
                if budget <= 4096.0 && !box_map.search_c_witness().found() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: witness search misses an existing diamond"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_q_naturality(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = rel_triple(&r).and_then(|(t, s1, s2)| {
            let m1 = macneille(&s1)?;
            let m2 = macneille(&s2)?;
            naturality_q(&t, &m1, &m2)
        });
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: Q naturality square does not commute"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

// ------------------------------------------------------ composition laws --

pub(super) fn check_functor_ri(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    // identity part: RI(S) = id for each algebra present
    for (name, b) in s5_subalgebras(ws) {
        instances += 1;
        match round_ideals(&b).and_then(|ri| {
            let map = ri_on_morphism(b.s(), &ri, &ri)?;
            Ok(map.table() == LatticeMap::identity(ri.frame()).table())
        }) {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: RI of the identity is not the identity"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    // composition part over composable relation pairs
    for ((n1, r1), (n2, r2)) in composable_rel_pairs(ws) {
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let (t1, s1, s2) = rel_triple(&r1)?;
            let (t2, _, s3) = rel_triple(&r2)?;
            let ri1 = round_ideals(&s1)?;
            let ri2 = round_ideals(&s2)?;
            let ri3 = round_ideals(&s3)?;
            let composed = t1.compose(&t2)?;
            let lhs = ri_on_morphism(&composed, &ri1, &ri3)?;
            let rhs =
                ri_on_morphism(&t2, &ri2, &ri3)?.compose(&ri_on_morphism(&t1, &ri1, &ri2)?)?;
            Ok(lhs.table() == rhs.table())
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("({n1},{n2}): RI(T2∘T1) differs from RI(T1)∘RI(T2)"),
            ),
            Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_functor_clop(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for ((n1, r1), (n2, r2)) in composable_rel_pairs(ws) {
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let composed = r1.compose(&r2)?;
            let lhs = crate::subord::from_closed_relation(&composed)?;
            let t1 = crate::subord::from_closed_relation(&r1)?;
            let t2 = crate::subord::from_closed_relation(&r2)?;
            Ok(lhs == t1.compose(&t2)?)
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("({n1},{n2}): the induced subordination is not functorial"),
            ),
            Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_functor_q(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for ((n1, r1), (n2, r2)) in composable_rel_pairs(ws) {
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let composed = r1.compose(&r2)?;
            let lhs = crate::duality::q_of_relation(&composed)?;
            let q1 = crate::duality::q_of_relation(&r1)?;
            let q2 = crate::duality::q_of_relation(&r2)?;
            Ok(lhs == q1.compose(&q2))
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("({n1},{n2}): the quotient relation is not functorial"),
            ),
            Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_cont_compose(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for ((n1, r1), (n2, r2)) in composable_rel_pairs(ws) {
        instances += 1;
        let outcome = (|| -> Result<(bool, bool, bool), crate::Error> {
            let (t1, s1, s2) = rel_triple(&r1)?;
            let (t2, _, s3) = rel_triple(&r2)?;
            let c1 = is_continuous(&t1, &s1, &s2)?.0;
            let c2 = is_continuous(&t2, &s2, &s3)?.0;
            let composed = t1.compose(&t2)?;
            let cc = is_continuous(&composed, &s1, &s3)?.0;
            Ok((c1, c2, cc))
        })();
        match outcome {
            Ok((c1, c2, cc)) => {
                if c1 && c2 && !cc {
                    fail(
                        ws,
                        &mut failures,
                        format!("({n1},{n2}): composition of continuous relations not continuous"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_compose(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for ((n1, r1), (n2, r2)) in composable_rel_pairs(ws) {
        instances += 1;
        let outcome = (|| -> Result<(bool, bool, bool), crate::Error> {
            let (t1, s1, s2) = rel_triple(&r1)?;
            let (t2, _, s3) = rel_triple(&r2)?;
            let f1 = is_functional(&t1, &s1, &s2)?;
            let f2 = is_functional(&t2, &s2, &s3)?;
            let composed = t1.compose(&t2)?;
            let fc = is_functional(&composed, &s1, &s3)?;
            Ok((f1, f2, fc))
        })();
        match outcome {
            Ok((f1, f2, fc)) => {
                if f1 && f2 && !fc {
                    fail(
                        ws,
                        &mut failures,
                        format!("({n1},{n2}): composition of functional morphisms not functional"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
        }
    }
    // isomorphism recognition: T and T~ both functional force the
    // composites to be the identities
    for (name, r) in compatible_rels(ws) {
        instances += 1;
        let outcome = (|| -> Result<Option<(bool, bool)>, crate::Error> {
            let (t, s1, s2) = rel_triple(&r)?;
            let tilde = t.tilde_inverse();
            if !(is_functional(&t, &s1, &s2)? && is_functional(&tilde, &s2, &s1)?) {
                return Ok(None);
            }
            let forward = t.compose(&tilde)?; // T~ ∘ T
            let backward = tilde.compose(&t)?; // T ∘ T~
            Ok(Some((&forward == s1.s(), &backward == s2.s())))
        })();
        match outcome {
            Ok(None) => {}
            Ok(Some((a, b))) => {
                if !(a && b) {
                    fail(
                        ws,
                        &mut failures,
                        format!(
                            "{name}: two-sided functional pair does not compose to the identities"
                        ),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

// ----------------------------------------------------- frame-side laws --

pub(super) fn check_functor_b(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    let maps = lattice_maps(ws);
    // identity part per regular frame
    for (name, f) in valid_frames(ws) {
        if !f.is_regular() || f.is_degenerate() {
            continue;
        }
        instances += 1;
        match crate::functors::b_on_morphism(&LatticeMap::identity(&f)) {
            Ok(bm) => {
                let prec = crate::frames::prec_subordination(&bm.dom_bl.frame, &bm.dom_rep)
                    .map(|s| s.s().clone());
                match prec {
                    Ok(prec) => {
                        if bm.sub != prec {
                            fail(
                                ws,
                                &mut failures,
                                format!(
                                    "{name}: booleanization of the identity is not the proximity"
                                ),
                            );
                        }
                    }
                    Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    // composition part over composable preframe pairs
    for (n1, m1) in &maps {
        for (n2, m2) in &maps {
            if m1.cod() != m2.dom() {
                continue;
            }
            if !(m1.preserves_binary_meets() && m1.preserves_top()) {
                continue;
            }
            if !(m2.preserves_binary_meets() && m2.preserves_top()) {
                continue;
            }
            if !m1.dom().is_regular()
                || !m1.cod().is_regular()
                || !m2.cod().is_regular()
                || m1.dom().is_degenerate()
                || m1.cod().is_degenerate()
                || m2.cod().is_degenerate()
            {
                continue;
            }
            instances += 1;
            let outcome = (|| -> Result<bool, crate::Error> {
                let composed = m1.compose(m2)?;
                let lhs = crate::functors::b_on_morphism(&composed)?;
                let b1 = crate::functors::b_on_morphism(m1)?;
                let b2 = crate::functors::b_on_morphism(m2)?;
                Ok(lhs.sub == b2.sub.compose(&b1.sub)?)
            })();
            match outcome {
                Ok(true) => {}
                Ok(false) => fail(
                    ws,
                    &mut failures,
                    format!("({n1},{n2}): 𝔅(□2∘□1) differs from 𝔅(□1)∘𝔅(□2)"),
                ),
                Err(e) => fail(ws, &mut failures, format!("({n1},{n2}): {e}")),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_b_compatible(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, m) in lattice_maps(ws) {
        if !(m.preserves_binary_meets() && m.preserves_top()) {
            continue;
        }
        if !m.dom().is_regular()
            || !m.cod().is_regular()
            || m.dom().is_degenerate()
            || m.cod().is_degenerate()
        {
            continue;
        }
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let bm = crate::functors::b_on_morphism(&m)?;
            let s1 = crate::frames::prec_subordination(&bm.dom_bl.frame, &bm.dom_rep)?;
            let s2 = crate::frames::prec_subordination(&bm.cod_bl.frame, &bm.cod_rep)?;
            let report = bm.sub.check_axioms_capped(RELATION_SCAN_CAP)?;
            Ok(report.is_subordination() && bm.sub.is_compatible(s1.s(), s2.s())?.ok())
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: 𝔅 of a preframe map is not a compatible subordination"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_f_iso(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, f) in valid_frames(ws) {
        if !f.is_regular() || f.is_degenerate() {
            continue;
        }
        instances += 1;
        match crate::functors::f_iso(&f) {
            Ok(iso) => {
                if !iso.map.frame_iso_check() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: the canonical map into the round-ideal frame is not an isomorphism"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_f_naturality(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, m) in lattice_maps(ws) {
        if !(m.preserves_binary_meets() && m.preserves_top()) {
            continue;
        }
        if !m.dom().is_regular()
            || !m.cod().is_regular()
            || m.dom().is_degenerate()
            || m.cod().is_degenerate()
        {
            continue;
        }
        instances += 1;
        match naturality_f(&m) {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: f naturality square does not commute"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_fun_b_functional(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, m) in lattice_maps(ws) {
        let p = (
            m.preserves_binary_meets() && m.preserves_top(),
            m.preserves_bottom() && m.preserves_binary_joins(),
        );
        if !(p.0 && p.1) {
            continue;
        }
        if !m.dom().is_regular()
            || !m.cod().is_regular()
            || m.dom().is_degenerate()
            || m.cod().is_degenerate()
        {
            continue;
        }
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let bm = crate::functors::b_on_morphism(&m)?;
            let s1 = crate::frames::prec_subordination(&bm.dom_bl.frame, &bm.dom_rep)?;
            let s2 = crate::frames::prec_subordination(&bm.cod_bl.frame, &bm.cod_rep)?;
            is_functional(&bm.sub, &s1, &s2)
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: 𝔅 of a frame homomorphism is not functional"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_preframe_criterion(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, m) in lattice_maps(ws) {
        instances += 1;
        if m.is_monotone()
            && m.dom().size() <= 12
            && m.preserves_directed_joins_exhaustive() == Some(false)
        {
            fail(
                ws,
                &mut failures,
                format!("{name}: monotone map fails a directed join"),
            );
        }
        let p = m.classify();
        if p.frame && !p.preframe {
            fail(
                ws,
                &mut failures,
                format!("{name}: frame profile without preframe profile"),
            );
        }
        if p.preframe && !p.monotone {
            fail(
                ws,
                &mut failures,
                format!("{name}: preframe map that is not monotone"),
            );
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_bool_boolean(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, f) in valid_frames(ws) {
        instances += 1;
        let b = f.booleanization();
        if !b.frame.is_boolean() {
            fail(
                ws,
                &mut failures,
                format!("{name}: booleanization is not boolean"),
            );
            continue;
        }
        // meets inherited, joins regularized
        for (i, &a) in b.carrier.iter().enumerate() {
            for (j, &c) in b.carrier.iter().enumerate() {
                let meet = b.frame.meet(i, j);
                if b.carrier[meet] != f.meet(a, c) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: booleanization meet not inherited"),
                    );
                }
                let join = b.frame.join(i, j);
                if b.carrier[join] != f.double_pseudo(f.join(a, c)) {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: booleanization join is not the regularized join"),
                    );
                }
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_bool_closure(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, f) in valid_frames(ws) {
        instances += 1;
        let mut ok = true;
        for a in 0..f.size() {
            let da = f.double_pseudo(a);
            ok &= f.leq(a, da);
            ok &= f.double_pseudo(da) == da;
            // pseudocomplement stabilizes after one application
            ok &= f.pseudocomplement(da) == f.pseudocomplement(a);
            for b in 0..f.size() {
                if f.leq(a, b) {
                    ok &= f.leq(da, f.double_pseudo(b));
                }
            }
        }
        if !ok {
            fail(
                ws,
                &mut failures,
                format!("{name}: double pseudocomplement is not a closure operator"),
            );
        }
    }
    LawResult {
        instances,
        failures,
    }
}

// ------------------------------------------------------------ box laws --

pub(super) fn check_box_roundtrip(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, t) in devries_subordinations(ws) {
        instances += 1;
        let s1 = SubAlgebra::discrete(*t.dom());
        let s2 = SubAlgebra::discrete(*t.cod());
        let outcome = (|| -> Result<bool, crate::Error> {
            let b = box_of(&t, &s1, &s2)?;
            let back = t_of(&b)?;
            Ok(back == t)
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: the relation round trip fails"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    for (name, map) in devries_maps(ws) {
        if !map.is_multiplicative() || !map.is_lower_continuous() {
            continue;
        }
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let t = t_of(&map)?;
            let back = box_of(&t, map.cod(), map.dom())?;
            Ok(back.table() == map.table())
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!("{name}: the box round trip fails"),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_box_profile(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, t) in devries_subordinations(ws) {
        instances += 1;
        let s1 = SubAlgebra::discrete(*t.dom());
        let s2 = SubAlgebra::discrete(*t.cod());
        match box_of(&t, &s1, &s2) {
            Ok(map) => {
                if !map.is_multiplicative() || !map.is_lower_continuous() {
                    fail(
                        ws,
                        &mut failures,
                        format!("{name}: box of a continuous relation misses its profile"),
                    );
                }
            }
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    for (name, map) in devries_maps(ws) {
        if !map.is_multiplicative() || !map.is_lower_continuous() {
            continue;
        }
        instances += 1;
        let outcome = (|| -> Result<bool, crate::Error> {
            let t = t_of(&map)?;
            let report = t.check_axioms_capped(RELATION_SCAN_CAP)?;
            let compat = t.is_compatible(map.cod().s(), map.dom().s())?.ok();
            let continuous = is_continuous(&t, map.cod(), map.dom())?.0;
            Ok(report.is_subordination() && compat && continuous)
        })();
        match outcome {
            Ok(true) => {}
            Ok(false) => fail(
                ws,
                &mut failures,
                format!(
                    "{name}: relational correspondent is not a continuous compatible subordination"
                ),
            ),
            Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_dev_morphism(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let mut instances = 0;
    for (name, map) in devries_maps(ws) {
        instances += 1;
        let id = match DeVriesMap::identity(map.dom()) {
            Ok(id) => id,
            Err(e) => {
                fail(ws, &mut failures, format!("{name}: {e}"));
                continue;
            }
        };
        if !id.morphism_report().is_morphism() {
            fail(
                ws,
                &mut failures,
                format!("{name}: identity fails the morphism axioms"),
            );
        }
        if map.dom() == map.cod() && map.morphism_report().is_morphism() {
            // composition is pointwise on discrete algebras, and stays a morphism
            match map.devries_compose(&map) {
                Ok(c) => {
                    if !c.morphism_report().is_morphism() {
                        fail(
                            ws,
                            &mut failures,
                            format!("{name}: composite of morphisms fails the axioms"),
                        );
                    }
                    let pointwise: Vec<u32> = map
                        .dom()
                        .alg()
                        .carrier()
                        .map(|a| map.apply(map.apply(a)))
                        .collect();
                    if c.table() != &pointwise[..] {
                        fail(
                            ws,
                            &mut failures,
                            format!(
                                "{name}: de Vries composition differs from pointwise composition"
                            ),
                        );
                    }
                }
                Err(e) => fail(ws, &mut failures, format!("{name}: {e}")),
            }
        }
    }
    LawResult {
        instances,
        failures,
    }
}

pub(super) fn check_dsl_roundtrip(ws: &Workspace) -> LawResult {
    let mut failures = Vec::new();
    let text = serialize(ws);
    match crate::dsl::parse(&text) {
        Ok(back) => {
            if &back != ws {
                failures.push(Failure {
                    workspace_dsl: text.clone(),
                    detail: "parse(serialize(w)) differs from w".into(),
                });
            } else if serialize(&back) != text {
                failures.push(Failure {
                    workspace_dsl: text.clone(),
                    detail: "serialization is not idempotent".into(),
                });
            }
        }
        Err(e) => failures.push(Failure {
            workspace_dsl: text,
            detail: format!("canonical form fails to parse: {e}"),
        }),
    }
    LawResult {
        instances: 1,
        failures,
    }
}

// -------------------------------------------------------------- registry --

use super::gen;
use super::Law;

/// All laws in their fixed reporting order.
pub fn registry() -> Vec<Law> {
    vec![
        Law {
            id: "RI.frame",
            anchor: "round ideals form a subframe of the ideal frame",
            gen: gen::subalgebra_workspaces,
            check: check_ri_frame,
        },
        Law {
            id: "RI.pseudocomplement",
            anchor: "I* = S^-1[¬U(I)] = ¬S[U(I)] = generic frame pseudocomplement",
            gen: gen::subalgebra_workspaces,
            check: check_ri_pseudocomplement,
        },
        Law {
            id: "RI.well-inside",
            anchor: "I ≺ J iff U(I) ∩ J ≠ ∅",
            gen: gen::subalgebra_workspaces,
            check: check_ri_well_inside,
        },
        Law {
            id: "RI.regular",
            anchor: "the round-ideal frame is compact regular",
            gen: gen::subalgebra_workspaces,
            check: check_ri_regular,
        },
        Law {
            id: "NI.fixpoint",
            anchor: "I normal iff I = S^-1[L(S[U(I)])]",
            gen: gen::subalgebra_workspaces,
            check: check_ni_fixpoint,
        },
        Law {
            id: "NI.devries",
            anchor: "the completion is a de Vries algebra",
            gen: gen::subalgebra_workspaces,
            check: check_ni_devries,
        },
        Law {
            id: "Q.iso",
            anchor: "Q~ ∘ Q = S and Q ∘ Q~ = ≺",
            gen: gen::subalgebra_workspaces,
            check: check_q_iso,
        },
        Law {
            id: "Q.interpolation",
            anchor: "a ∈ J iff a ∈ I ≺ J for some normal I",
            gen: gen::subalgebra_workspaces,
            check: check_q_interpolation,
        },
        Law {
            id: "Q.naturality",
            anchor: "NI(T) ∘ Q_B1 = Q_B2 ∘ T",
            gen: gen::morphism_workspaces,
            check: check_q_naturality,
        },
        Law {
            id: "iota.embedding",
            anchor: "ι(b) = S^-1[b]; on compingent algebras a S b iff ι(a) ≺ ι(b)",
            gen: gen::subalgebra_workspaces,
            check: check_iota,
        },
        Law {
            id: "NI.classical",
            anchor: "for S = ≤ the completion is the classical normal-ideal completion",
            gen: gen::subalgebra_workspaces,
            check: check_macneille_classical,
        },
        Law {
            id: "S.neg-image",
            anchor: "¬S[X] = S^-1[¬X]",
            gen: gen::subalgebra_workspaces,
            check: check_neg_image,
        },
        Law {
            id: "dual.roundtrip",
            anchor: "clop(ult(B)) = B and ult(clop(X)) = X",
            gen: gen::subalgebra_workspaces,
            check: check_ult_clop_roundtrip,
        },
        Law {
            id: "S7.iso.ri",
            anchor: "RI(B) ≅ O_R(X) ≅ O(X/R); Φ(I*) and Φ(I**) formulas",
            gen: gen::subalgebra_workspaces,
            check: check_dual_iso_ri,
        },
        Law {
            id: "S7.iso.ni",
            anchor: "NI(B) ≅ RO_R(X) ≅ RO(X/R)",
            gen: gen::subalgebra_workspaces,
            check: check_dual_iso_ni,
        },
        Law {
            id: "S7.lemma.phi-box",
            anchor: "Φ(S^-1[I]) = Box_R Φ(I)",
            gen: gen::subalgebra_workspaces,
            check: check_phi_box,
        },
        Law {
            id: "S7.lemma.psi-r",
            anchor: "Ψ(S[F]) = R[Ψ(F)]",
            gen: gen::subalgebra_workspaces,
            check: check_psi_image,
        },
        Law {
            id: "S7.translation",
            anchor: "Φ(¬F) = Ψ(F)^c, Ψ(¬I) = Φ(I)^c, Φ(L(F)) = int Ψ(F), Ψ(U(I)) = cl Φ(I)",
            gen: gen::subalgebra_workspaces,
            check: check_phi_translation,
        },
        Law {
            id: "degenerate.devries",
            anchor: "finite de Vries algebras are (P(k), ≤)",
            gen: gen::subalgebra_workspaces,
            check: check_degenerate_devries,
        },
        Law {
            id: "box_R.interior",
            anchor: "Box_R U is the largest saturated subset of U; RO_R = O_R finitely",
            gen: gen::morphism_workspaces,
            check: check_box_r_interior,
        },
        Law {
            id: "cont.fourway",
            anchor:
                "quotient continuity = saturated preimages = clopen interpolation = algebraic form",
            gen: gen::morphism_workspaces,
            check: check_cont_fourway,
        },
        Law {
            id: "cont.variants",
            anchor: "the definition agrees with the L-, U-, meet- and join-forms",
            gen: gen::morphism_workspaces,
            check: check_cont_variants,
        },
        Law {
            id: "cont.auto",
            anchor: "every finite compatible subordination is continuous",
            gen: gen::morphism_workspaces,
            check: check_cont_auto,
        },
        Law {
            id: "cont.compose",
            anchor: "continuity is closed under composition",
            gen: gen::composable_workspaces,
            check: check_cont_compose,
        },
        Law {
            id: "fun.characterization",
            anchor: "T~∘T ⊆ S1 and S2 ⊆ T∘T~ iff the zero and cover conditions",
            gen: gen::morphism_workspaces,
            check: check_fun_characterization,
        },
        Law {
            id: "fun.implies-continuous",
            anchor: "functional morphisms are continuous",
            gen: gen::morphism_workspaces,
            check: check_fun_implies_continuous,
        },
        Law {
            id: "fun.point-criterion",
            anchor: "T functional iff E1 ⊆ R̆∘R and R∘R̆ ⊆ E2",
            gen: gen::morphism_workspaces,
            check: check_fun_point_criterion,
        },
        Law {
            id: "fun.ri-frame",
            anchor: "RI of a functional morphism is a frame homomorphism",
            gen: gen::morphism_workspaces,
            check: check_fun_ri_frame,
        },
        Law {
            id: "fun.compose",
            anchor: "functional morphisms compose; two-sided functional pairs are isomorphisms",
            gen: gen::composable_workspaces,
            check: check_fun_compose,
        },
        Law {
            id: "RI.morphism.preframe",
            anchor: "RI(T) preserves finite meets and directed joins",
            gen: gen::morphism_workspaces,
            check: check_ri_morphism_preframe,
        },
        Law {
            id: "cmorph.witness",
            anchor: "◇I = {a | ∃b ∈ I, a ∈ L(T~[b])} witnesses continuity of RI(T)",
            gen: gen::morphism_workspaces,
            check: check_cmorph_witness,
        },
        Law {
            id: "functor.ri",
            anchor: "RI(S) = id and RI(T2∘T1) = RI(T1)∘RI(T2)",
            gen: gen::composable_workspaces,
            check: check_functor_ri,
        },
        Law {
            id: "functor.clop",
            anchor: "S_[R2∘R1] = S_[R2] ∘ S_[R1]",
            gen: gen::composable_workspaces,
            check: check_functor_clop,
        },
        Law {
            id: "functor.q",
            anchor: "Q(R2∘R1) = Q(R2) ∘ Q(R1)",
            gen: gen::composable_workspaces,
            check: check_functor_q,
        },
        Law {
            id: "functor.b",
            anchor: "𝔅(id) = ≺ and 𝔅(□2∘□1) = 𝔅(□1)∘𝔅(□2)",
            gen: gen::preframe_map_workspaces,
            check: check_functor_b,
        },
        Law {
            id: "B.compatible",
            anchor: "𝔅(□) is a compatible subordination",
            gen: gen::preframe_map_workspaces,
            check: check_b_compatible,
        },
        Law {
            id: "f.iso",
            anchor: "f_L(a) = {b ∈ 𝔅L | b ≺ a} is a frame isomorphism",
            gen: gen::preframe_map_workspaces,
            check: check_f_iso,
        },
        Law {
            id: "f.naturality",
            anchor: "RI(𝔅□) ∘ f_L = f_M ∘ □",
            gen: gen::preframe_map_workspaces,
            check: check_f_naturality,
        },
        Law {
            id: "fun.b-functional",
            anchor: "𝔅 of a frame homomorphism is functional",
            gen: gen::framehom_workspaces,
            check: check_fun_b_functional,
        },
        Law {
            id: "frame.preframe-criterion",
            anchor: "monotone maps between finite frames preserve directed joins",
            gen: gen::preframe_map_workspaces,
            check: check_preframe_criterion,
        },
        Law {
            id: "bool.boolean",
            anchor: "𝔅L is boolean with inherited meets and regularized joins",
            gen: gen::frame_workspaces,
            check: check_bool_boolean,
        },
        Law {
            id: "bool.closure",
            anchor: "double pseudocomplement is a closure operator",
            gen: gen::frame_workspaces,
            check: check_bool_closure,
        },
        Law {
            id: "box.roundtrip",
            anchor: "Box_[T_Box] = Box and T_[Box_T] = T",
            gen: gen::devries_workspaces,
            check: check_box_roundtrip,
        },
        Law {
            id: "box.profile",
            anchor: "Box_T is multiplicative lower continuous; T_Box is continuous compatible",
            gen: gen::devries_workspaces,
            check: check_box_profile,
        },
        Law {
            id: "dev.morphism",
            anchor: "(g*f)(a) = ⋁{g(f(b)) | b S a} preserves the morphism axioms",
            gen: gen::devries_workspaces,
            check: check_dev_morphism,
        },
        Law {
            id: "dsl.roundtrip",
            anchor: "parse ∘ serialize = id and serialization is idempotent",
            gen: gen::random_workspaces,
            check: check_dsl_roundtrip,
        },
    ]
}
