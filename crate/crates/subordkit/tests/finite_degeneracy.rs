//! Exhaustive searches that pin down what finite instances can and cannot
//! witness. These are enumerations, not assumptions: the negative results
//! are recorded by the searches themselves.

use subordkit::bitrel::BitRel;
use subordkit::boolcore::BoolAlg;
use subordkit::duality::{clop, FinSubSpace, PointRelation};
use subordkit::morphclass::{is_continuous, is_functional};
use subordkit::partition::all_partitions;
use subordkit::subord::{from_closed_relation, from_equivalence, SubAlgebra, Subordination};

fn all_relations(dom: BoolAlg, cod: BoolAlg) -> impl Iterator<Item = Subordination> {
    let cells = dom.size() * cod.size();
    assert!(cells <= 16, "raw relation enumeration only at tiny sizes");
    (0u32..(1u32 << cells)).map(move |bits| {
        let mut rel = BitRel::new(dom.size(), cod.size());
        for a in 0..dom.size() {
            for b in 0..cod.size() {
                if bits >> (a * cod.size() + b) & 1 == 1 {
                    rel.set(a, b, true);
                }
            }
        }
        Subordination::from_rel(dom, cod, rel).expect("shape matches")
    })
}

/// Every S5-subordination on a tiny boolean algebra is induced by a
/// partition of its atoms: the dual representation is complete.
#[test]
fn every_tiny_s5_subordination_is_induced_by_a_partition() {
    for k in 1..=2u32 {
        let alg = BoolAlg::new(k).unwrap();
        let induced: Vec<Subordination> = all_partitions(k as usize)
            .unwrap()
            .iter()
            .map(|e| from_equivalence(e).unwrap().s().clone())
            .collect();
        let mut s5_count = 0;
        for s in all_relations(alg, alg) {
            let report = s.check_axioms().unwrap();
            if report.is_s5() {
                s5_count += 1;
                assert!(
                    induced.contains(&s),
                    "an S5-subordination on {k} atoms escapes the partition representation"
                );
            }
        }
        assert_eq!(s5_count, induced.len());
    }
}

/// Every compatible subordination between tiny induced algebras comes from
/// a compatible point relation: the morphism representation is full.
#[test]
fn every_tiny_compatible_subordination_is_induced_by_a_relation() {
    for k1 in 1..=2usize {
        for k2 in 1..=2usize {
            for e1 in all_partitions(k1).unwrap() {
                for e2 in all_partitions(k2).unwrap() {
                    let b1 = from_equivalence(&e1).unwrap();
                    let b2 = from_equivalence(&e2).unwrap();
                    let x1 = FinSubSpace::new(e1.clone());
                    let x2 = FinSubSpace::new(e2.clone());
                    let induced: Vec<Subordination> = all_point_relations(&x1, &x2)
                        .into_iter()
                        .filter(|r| r.is_compatible())
                        .map(|r| from_closed_relation(&r).unwrap())
                        .collect();
                    for t in all_relations(*b1.alg(), *b2.alg()) {
                        let report = t.check_axioms().unwrap();
                        if !report.is_subordination() {
                            continue;
                        }
                        if !t.is_compatible(b1.s(), b2.s()).unwrap().ok() {
                            continue;
                        }
                        assert!(
                            induced.contains(&t),
                            "a compatible subordination escapes the point-relation representation"
                        );
                    }
                }
            }
        }
    }
}

fn all_point_relations(x1: &FinSubSpace, x2: &FinSubSpace) -> Vec<PointRelation> {
    let cells = x1.points() * x2.points();
    (0u32..(1u32 << cells))
        .map(|bits| {
            let mut rel = BitRel::new(x1.points(), x2.points());
            for p in 0..x1.points() {
                for q in 0..x2.points() {
                    if bits >> (p * x2.points() + q) & 1 == 1 {
                        rel.set(p, q, true);
                    }
                }
            }
            PointRelation::from_rel(x1.clone(), x2.clone(), rel).unwrap()
        })
        .collect()
}

/// The search for a non-continuous compatible subordination comes back
/// empty at three atoms and below: a compatible subordination between
/// finite algebras always satisfies the join form of continuity, because
/// the join of `T⁻¹[b1]` is itself related to `b1` (join closure) and then
/// to `b2` (compatibility). Non-continuity needs infinite carriers.
#[test]
fn no_noncontinuous_compatible_subordination_exists_at_small_scale() {
    let mut searched = 0u64;
    for k1 in 1..=3usize {
        for k2 in 1..=3usize {
            for e1 in all_partitions(k1).unwrap() {
                for e2 in all_partitions(k2).unwrap() {
                    let x1 = FinSubSpace::new(e1.clone());
                    let x2 = FinSubSpace::new(e2.clone());
                    let b1 = clop(&x1).unwrap();
                    let b2 = clop(&x2).unwrap();
                    for r in all_point_relations(&x1, &x2) {
                        if !r.is_compatible() {
                            continue;
                        }
                        let t = from_closed_relation(&r).unwrap();
                        searched += 1;
                        let (continuous, witness) = is_continuous(&t, &b1, &b2).unwrap();
                        assert!(
                            continuous,
                            "unexpected non-continuous compatible subordination with witness {witness:?}"
                        );
                    }
                }
            }
        }
    }
    assert!(searched >= 1442, "searched only {searched} relations");
}

/// Non-functional compatible subordinations do exist, and the search finds
/// them: relating one point to two inequivalent points breaks the
/// functionality inclusions.
#[test]
fn non_functional_examples_exist_and_are_found() {
    let mut found = 0u64;
    for k in 1..=2usize {
        for e1 in all_partitions(k).unwrap() {
            for e2 in all_partitions(k).unwrap() {
                let x1 = FinSubSpace::new(e1.clone());
                let x2 = FinSubSpace::new(e2.clone());
                let b1 = clop(&x1).unwrap();
                let b2 = clop(&x2).unwrap();
                for r in all_point_relations(&x1, &x2) {
                    if !r.is_compatible() {
                        continue;
                    }
                    let t = from_closed_relation(&r).unwrap();
                    if !is_functional(&t, &b1, &b2).unwrap() {
                        found += 1;
                    }
                }
            }
        }
    }
    assert!(found > 0, "the non-functional search must find witnesses");
}

/// The empty relation is compatible (it absorbs composition) but fails the
/// subordination axioms, so compatibility alone does not make a morphism.
#[test]
fn compatibility_does_not_imply_subordination() {
    let e = all_partitions(2).unwrap()[0].clone();
    let b = from_equivalence(&e).unwrap();
    let empty = Subordination::empty(*b.alg(), *b.alg());
    assert!(empty.is_compatible(b.s(), b.s()).unwrap().ok());
    assert!(!empty.check_axioms().unwrap().is_subordination());
}

/// S5-subordination algebras with the de Vries profile degenerate to the
/// discrete order at finite scale, exhaustively at up to four atoms.
#[test]
fn finite_de_vries_algebras_are_discrete() {
    for k in 1..=4usize {
        for e in all_partitions(k).unwrap() {
            let b = from_equivalence(&e).unwrap();
            let profile = b.s().check_axioms().unwrap().profile();
            assert_eq!(profile.de_vries, e.is_identity());
            if profile.de_vries {
                assert_eq!(b.s(), SubAlgebra::discrete(*b.alg()).s());
            }
        }
    }
}
