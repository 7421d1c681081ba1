//! Report rendering for the CLI subcommands. Text and JSON modes carry the
//! same verdicts, and every listing uses the canonical element order.

use serde_json::{json, Value};

use subordkit::boolcore::format_elem;
use subordkit::dsl::{Object, Workspace};
use subordkit::duality::{dual_isomorphisms, quotient, ult};
use subordkit::frames::{validate_order, CMorphOutcome, FinFrame, LatticeMap};
use subordkit::functors::{iota, macneille as macneille_of, q_relation};
use subordkit::morphclass::{
    continuity_variants, functional_characterization, is_continuous, is_functional, DeVriesMap,
};
use subordkit::subord::{SubAlgebra, Subordination, DEFAULT_AXIOM_CAP};

/// Axiom-scan cap, overridable through `SUBORDKIT_MAX_ATOMS`.
fn axiom_cap() -> u32 {
    std::env::var("SUBORDKIT_MAX_ATOMS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_AXIOM_CAP)
}

fn emit(json_mode: bool, value: &Value, text: &str) {
    if json_mode {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("value serializes")
        );
    } else {
        print!("{text}");
    }
}

fn named_subalgebra(ws: &Workspace, name: &str) -> Result<SubAlgebra, String> {
    match ws.get(name) {
        Some(Object::Sub { sub, .. }) => {
            if !sub.is_endo() {
                return Err(format!("'{name}' is not an endo-relation"));
            }
            SubAlgebra::new(sub.clone()).map_err(|e| format!("'{name}': {e}"))
        }
        Some(o) => Err(format!("'{name}' is a {}, expected a sub", o.kind_name())),
        None => Err(format!("unknown name '{name}'")),
    }
}

fn named_frame(ws: &Workspace, name: &str) -> Result<FinFrame, String> {
    match ws.get(name) {
        Some(Object::Frame { leq }) => {
            FinFrame::from_leq(leq.clone()).map_err(|e| format!("'{name}': {e}"))
        }
        Some(o) => Err(format!("'{name}' is a {}, expected a frame", o.kind_name())),
        None => Err(format!("unknown name '{name}'")),
    }
}

fn family_text(members: &[u32]) -> String {
    members
        .iter()
        .map(|&m| format_elem(m))
        .collect::<Vec<_>>()
        .join(",")
}

// ------------------------------------------------------------------ check --

pub fn check(ws: &Workspace, object: Option<&str>, json_mode: bool) -> Result<bool, String> {
    let names: Vec<String> = match object {
        Some(n) => {
            if ws.get(n).is_none() {
                return Err(format!("unknown name '{n}'"));
            }
            vec![n.to_string()]
        }
        None => ws.canonical_names().into_iter().map(String::from).collect(),
    };
    let mut all_ok = true;
    let mut text = String::new();
    let mut entries = Vec::new();
    for name in names {
        let obj = ws.get(&name).unwrap();
        let (ok, value, line) = check_object(ws, &name, obj)?;
        all_ok &= ok;
        entries.push(value);
        text.push_str(&line);
    }
    let verdict = if all_ok { "PASS" } else { "FAIL" };
    text.push_str(&format!("{verdict} check\n"));
    emit(
        json_mode,
        &json!({ "objects": entries, "passed": all_ok }),
        &text,
    );
    Ok(all_ok)
}

fn check_object(ws: &Workspace, name: &str, obj: &Object) -> Result<(bool, Value, String), String> {
    match obj {
        Object::Algebra(a) => {
            let line = format!(
                "algebra {name}: {} atoms, {} elements\n",
                a.n_atoms(),
                a.size()
            );
            Ok((
                true,
                json!({ "name": name, "kind": "algebra", "atoms": a.n_atoms(), "passed": true }),
                line,
            ))
        }
        Object::Space(s) => {
            let line = format!(
                "space {name}: {} points, {} classes\n",
                s.points(),
                s.n_classes()
            );
            Ok((
                true,
                json!({ "name": name, "kind": "space", "points": s.points(), "classes": s.n_classes(), "passed": true }),
                line,
            ))
        }
        Object::Equiv { partition, .. } => {
            let line = format!("equiv {name}: {} classes\n", partition.n_classes());
            Ok((
                true,
                json!({ "name": name, "kind": "equiv", "classes": partition.n_classes(), "passed": true }),
                line,
            ))
        }
        Object::Sub { sub, .. } => {
            let report = sub
                .check_axioms_capped(axiom_cap())
                .map_err(|e| format!("'{name}': {e}"))?;
            let mut line = format!("sub {name}:");
            let mut axioms = Vec::new();
            for (axiom, status) in report.statuses() {
                line.push_str(&format!(" {axiom}={}", status.describe()));
                axioms.push(json!({ "axiom": axiom, "status": status.describe() }));
            }
            let profile = report.profile();
            line.push_str(&format!(
                "\n  profile: subordination={} s5={} compingent={} de_vries={}\n",
                profile.subordination, profile.s5, profile.compingent, profile.de_vries
            ));
            let ok = report.all_passed();
            Ok((
                ok,
                json!({
                    "name": name, "kind": "sub", "axioms": axioms,
                    "profile": {
                        "subordination": profile.subordination,
                        "s5": profile.s5,
                        "compingent": profile.compingent,
                        "de_vries": profile.de_vries,
                    },
                    "passed": ok,
                }),
                line,
            ))
        }
        Object::Rel { rel, .. } => {
            let witness = rel.compatibility_witness();
            let ok = witness.is_none();
            let line = match witness {
                None => format!("rel {name}: compatible\n"),
                Some((p, q)) => format!("rel {name}: NOT compatible, witness ({p},{q})\n"),
            };
            Ok((
                ok,
                json!({ "name": name, "kind": "rel", "compatible": ok, "witness": witness.map(|w| vec![w.0, w.1]), "passed": ok }),
                line,
            ))
        }
        Object::Frame { leq } => {
            let report = validate_order(leq);
            let ok = report.is_valid();
            let line = format!("frame {name}: {}\n", report.describe());
            Ok((
                ok,
                json!({ "name": name, "kind": "frame", "report": report.describe(), "passed": ok }),
                line,
            ))
        }
        Object::Map { dom, cod, table } => {
            let df = named_frame(ws, dom)?;
            let cf = named_frame(ws, cod)?;
            let m = LatticeMap::new(df, cf, table.clone()).map_err(|e| format!("'{name}': {e}"))?;
            let p = m.classify();
            let ok = p.monotone;
            let line = format!(
                "map {name}: monotone={} preframe={} frame={} cmorph={}\n",
                p.monotone,
                p.preframe,
                p.frame,
                cmorph_text(&p.cmorph)
            );
            Ok((
                ok,
                json!({ "name": name, "kind": "map", "monotone": p.monotone, "preframe": p.preframe, "frame": p.frame, "cmorph": cmorph_text(&p.cmorph), "passed": ok }),
                line,
            ))
        }
        Object::DevMap { dom, cod, table } => {
            let (Some(Object::Algebra(da)), Some(Object::Algebra(ca))) = (ws.get(dom), ws.get(cod))
            else {
                return Err(format!("'{name}': carrier algebras missing"));
            };
            let m = DeVriesMap::new(
                SubAlgebra::discrete(*da),
                SubAlgebra::discrete(*ca),
                table.clone(),
            )
            .map_err(|e| format!("'{name}': {e}"))?;
            let r = m.morphism_report();
            let ok = r.is_morphism();
            let line = format!(
                "devmap {name}: M1={} M2={} M3={} M4={} mult={} lower_cont={}\n",
                r.m1,
                r.m2,
                r.m3,
                r.m4,
                m.is_multiplicative(),
                m.is_lower_continuous()
            );
            Ok((
                ok,
                json!({ "name": name, "kind": "devmap", "m1": r.m1, "m2": r.m2, "m3": r.m3, "m4": r.m4, "mult": m.is_multiplicative(), "lower_cont": m.is_lower_continuous(), "passed": ok }),
                line,
            ))
        }
        Object::Family { family, .. } => {
            let line = format!(
                "family {name}: kind={} members={}\n",
                family.kind().label(),
                family_text(&family.canonical_members())
            );
            Ok((
                true,
                json!({ "name": name, "kind": "family", "tag": family.kind().label(), "size": family.len(), "passed": true }),
                line,
            ))
        }
    }
}

fn cmorph_text(c: &CMorphOutcome) -> String {
    match c {
        CMorphOutcome::Witness(_) => "witness-found".into(),
        CMorphOutcome::NotCMorph => "no".into(),
        CMorphOutcome::Inconclusive(why) => format!("inconclusive ({why})"),
    }
}

// ----------------------------------------------------------- round-ideals --

pub fn round_ideals(ws: &Workspace, algebra: &str, json_mode: bool) -> Result<bool, String> {
    let b = named_subalgebra(ws, algebra)?;
    let ri = round_ideals_of(&b)?;
    let mut text = format!("round ideals of {algebra}: {}\n", ri.len());
    let mut items = Vec::new();
    for i in 0..ri.len() {
        let members = ri.ideal_family(i).canonical_members();
        let star = ri
            .pseudocomplement_via_preimage(i)
            .map_err(|e| e.to_string())?;
        let prec: Vec<usize> = (0..ri.len())
            .filter(|&j| ri.frame().well_inside(i, j))
            .collect();
        text.push_str(&format!(
            "  I{i} = ↓{} members=[{}] I{i}* = I{star} ≺ {:?}\n",
            format_elem(ri.generator(i)),
            family_text(&members),
            prec
        ));
        items.push(json!({
            "index": i,
            "generator": format_elem(ri.generator(i)),
            "members": members.iter().map(|&m| format_elem(m)).collect::<Vec<_>>(),
            "pseudocomplement": star,
            "well_inside": prec,
        }));
    }
    emit(
        json_mode,
        &json!({ "algebra": algebra, "count": ri.len(), "ideals": items }),
        &text,
    );
    Ok(true)
}

fn round_ideals_of(b: &SubAlgebra) -> Result<subordkit::functors::RoundIdealFrame, String> {
    subordkit::functors::round_ideals(b).map_err(|e| e.to_string())
}

// --------------------------------------------------------------- macneille --

pub fn macneille(ws: &Workspace, algebra: &str, json_mode: bool) -> Result<bool, String> {
    let b = named_subalgebra(ws, algebra)?;
    let m = macneille_of(&b).map_err(|e| e.to_string())?;
    let q = q_relation(&m);
    let mut text = format!(
        "MacNeille completion of {algebra}: {} normal round ideals, {} atoms\n",
        m.size(),
        m.rep().alg.n_atoms()
    );
    let mut ideals = Vec::new();
    for &i in m.normal_ri_indices().iter() {
        let members = m.ri().ideal_family(i).canonical_members();
        text.push_str(&format!(
            "  N{i} = ↓{} members=[{}]\n",
            format_elem(m.ri().generator(i)),
            family_text(&members)
        ));
        ideals.push(json!({
            "index": i,
            "generator": format_elem(m.ri().generator(i)),
            "members": members.iter().map(|&x| format_elem(x)).collect::<Vec<_>>(),
        }));
    }
    let mut iotas = Vec::new();
    text.push_str("  iota:\n");
    for x in b.alg().lex_carrier() {
        let (_, idx, mask) = iota(&m, x).map_err(|e| e.to_string())?;
        text.push_str(&format!(
            "    ι({}) = N{idx} (mask {})\n",
            format_elem(x),
            format_elem(mask)
        ));
        iotas.push(json!({ "element": format_elem(x), "ideal": idx }));
    }
    let q_pairs = q.canonical_pairs().len();
    text.push_str(&format!("  Q relation: {q_pairs} pairs\n"));
    emit(
        json_mode,
        &json!({
            "algebra": algebra,
            "size": m.size(),
            "atoms": m.rep().alg.n_atoms(),
            "normal_ideals": ideals,
            "iota": iotas,
            "q_pairs": q_pairs,
        }),
        &text,
    );
    Ok(true)
}

// -------------------------------------------------------------- booleanize --

pub fn booleanize(ws: &Workspace, frame: &str, json_mode: bool) -> Result<bool, String> {
    let f = named_frame(ws, frame)?;
    let b = f.booleanization();
    let text = format!(
        "booleanization of {frame}: {} of {} elements, carrier {:?}\n",
        b.frame.size(),
        f.size(),
        b.carrier
    );
    emit(
        json_mode,
        &json!({ "frame": frame, "size": b.frame.size(), "carrier": b.carrier, "boolean": b.frame.is_boolean() }),
        &text,
    );
    Ok(true)
}

// ---------------------------------------------------------------- classify --

pub fn classify(ws: &Workspace, morphism: &str, json_mode: bool) -> Result<bool, String> {
    match ws.get(morphism) {
        Some(Object::Sub { sub, .. }) => classify_sub(ws, morphism, sub, json_mode),
        Some(Object::Rel { rel, .. }) => {
            let compatible = rel.is_compatible();
            let functional = rel.is_functional();
            let text = format!("rel {morphism}: compatible={compatible} functional={functional}\n");
            emit(
                json_mode,
                &json!({ "name": morphism, "kind": "rel", "compatible": compatible, "functional": functional }),
                &text,
            );
            Ok(compatible)
        }
        Some(Object::Map { dom, cod, table }) => {
            let df = named_frame(ws, dom)?;
            let cf = named_frame(ws, cod)?;
            let m = LatticeMap::new(df, cf, table.clone()).map_err(|e| e.to_string())?;
            let p = m.classify();
            let text = format!(
                "map {morphism}: monotone={} preframe={} frame={} cmorph={}\n",
                p.monotone,
                p.preframe,
                p.frame,
                cmorph_text(&p.cmorph)
            );
            emit(
                json_mode,
                &json!({ "name": morphism, "kind": "map", "monotone": p.monotone, "preframe": p.preframe, "frame": p.frame, "cmorph": cmorph_text(&p.cmorph) }),
                &text,
            );
            Ok(true)
        }
        Some(Object::DevMap { dom, cod, table }) => {
            let (Some(Object::Algebra(da)), Some(Object::Algebra(ca))) = (ws.get(dom), ws.get(cod))
            else {
                return Err(format!("'{morphism}': carrier algebras missing"));
            };
            let m = DeVriesMap::new(
                SubAlgebra::discrete(*da),
                SubAlgebra::discrete(*ca),
                table.clone(),
            )
            .map_err(|e| e.to_string())?;
            let r = m.morphism_report();
            let text = format!(
                "devmap {morphism}: morphism={} mult={} lower_cont={}\n",
                r.is_morphism(),
                m.is_multiplicative(),
                m.is_lower_continuous()
            );
            emit(
                json_mode,
                &json!({ "name": morphism, "kind": "devmap", "morphism": r.is_morphism(), "mult": m.is_multiplicative(), "lower_cont": m.is_lower_continuous() }),
                &text,
            );
            Ok(r.is_morphism())
        }
        Some(o) => Err(format!(
            "'{morphism}' is a {}, expected a morphism object",
            o.kind_name()
        )),
        None => Err(format!("unknown name '{morphism}'")),
    }
}

/// A subordination between algebras classifies against the endo structures
/// of any compatible pair of S5 subs in the workspace; for an endo relation
/// it classifies against itself when it is S5.
fn classify_sub(
    ws: &Workspace,
    name: &str,
    sub: &Subordination,
    json_mode: bool,
) -> Result<bool, String> {
    let report = sub
        .check_axioms_capped(axiom_cap())
        .map_err(|e| e.to_string())?;
    let mut text = format!("sub {name}: subordination={}\n", report.is_subordination());
    let mut value = json!({
        "name": name, "kind": "sub",
        "subordination": report.is_subordination(),
        "s5": report.is_s5(),
    });
    // classify continuity/functionality against every compatible context
    let mut contexts = Vec::new();
    for (n1, o1) in ws.iter() {
        let Object::Sub { sub: s1, .. } = o1 else {
            continue;
        };
        if !s1.is_endo() || s1.dom() != sub.dom() {
            continue;
        }
        let Ok(b1) = SubAlgebra::new(s1.clone()) else {
            continue;
        };
        for (n2, o2) in ws.iter() {
            let Object::Sub { sub: s2, .. } = o2 else {
                continue;
            };
            if !s2.is_endo() || s2.dom() != sub.cod() {
                continue;
            }
            let Ok(b2) = SubAlgebra::new(s2.clone()) else {
                continue;
            };
            let Ok(compat) = sub.is_compatible(b1.s(), b2.s()) else {
                continue;
            };
            if !compat.ok() {
                continue;
            }
            let continuous = is_continuous(sub, &b1, &b2).map_err(|e| e.to_string())?.0;
            let functional = is_functional(sub, &b1, &b2).map_err(|e| e.to_string())?;
            let variants = continuity_variants(sub, &b1, &b2).map_err(|e| e.to_string())?;
            let (za, cover) =
                functional_characterization(sub, &b1, &b2).map_err(|e| e.to_string())?;
            text.push_str(&format!(
                "  against ({n1},{n2}): compatible=true continuous={continuous} functional={functional} variants_agree={} characterization=({za},{cover})\n",
                variants.agree()
            ));
            contexts.push(json!({
                "s1": n1, "s2": n2,
                "continuous": continuous,
                "functional": functional,
                "variants_agree": variants.agree(),
            }));
        }
    }
    if contexts.is_empty() {
        text.push_str("  no compatible S5 context found in the workspace\n");
    }
    value["contexts"] = Value::Array(contexts);
    emit(json_mode, &value, &text);
    Ok(report.is_subordination())
}

// --------------------------------------------------------------------- dual --

pub fn dual(ws: &Workspace, algebra: &str, json_mode: bool) -> Result<bool, String> {
    let b = named_subalgebra(ws, algebra)?;
    let x = ult(&b).map_err(|e| e.to_string())?;
    let (classes, proj) = quotient(&x);
    let report = dual_isomorphisms(&b).map_err(|e| e.to_string())?;
    let ok = report.all_hold();
    let text = format!(
        "dual of {algebra}: {} points, quotient {} classes, projection {:?}\n\
         RI ≅ saturated opens: {}\nRI ≅ quotient opens: {}\n\
         NI ≅ R-regular opens: {}\nNI ≅ quotient regular opens: {}\n\
         Φ(I*) formula: {}\nΦ(I**) formula: {}\n{} dual report\n",
        x.points(),
        classes,
        proj,
        report.ri_iso_saturated,
        report.ri_iso_quotient,
        report.ni_iso_r_regular,
        report.ni_iso_quotient,
        report.star_formula,
        report.star_star_formula,
        if ok { "PASS" } else { "FAIL" },
    );
    emit(
        json_mode,
        &json!({
            "algebra": algebra,
            "points": x.points(),
            "quotient_classes": classes,
            "projection": proj,
            "ri_iso_saturated": report.ri_iso_saturated,
            "ri_iso_quotient": report.ri_iso_quotient,
            "ni_iso_r_regular": report.ni_iso_r_regular,
            "ni_iso_quotient": report.ni_iso_quotient,
            "star_formula": report.star_formula,
            "star_star_formula": report.star_star_formula,
            "passed": ok,
        }),
        &text,
    );
    Ok(ok)
}
