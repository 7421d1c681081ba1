//! Classification of compatible subordinations and de Vries maps.
//!
//! Continuity of a compatible `T : (B1,S1) -> (B2,S2)` is the condition
//! that every `b1 S2 b2` admits `a ∈ T~[b1]` with `T~[b2] ⊆ S1[a]`; it has
//! four standard reformulations which are computed independently here and
//! asserted to agree. Functionality (`T~ ∘ T ⊆ S1` and `S2 ⊆ T ∘ T~`) has a
//! two-condition characterization, likewise kept as a second route.
//!
//! Finite de Vries algebras degenerate to `(P(k), ≤)`: S8 forces the
//! identity partition. The `Box_T`/`T_Box` correspondence between
//! continuous compatible subordinations and lower continuous de Vries
//! multiplicative maps is implemented on that carrier.

use crate::boolcore::BoolAlg;
use crate::subord::{SubAlgebra, Subordination};
use crate::Error;

fn require_compatible(t: &Subordination, s1: &SubAlgebra, s2: &SubAlgebra) -> Result<(), Error> {
    if t.dom() != s1.alg() || t.cod() != s2.alg() {
        return Err(Error::Precondition(
            "relation does not connect the given algebras".into(),
        ));
    }
    let report = t.check_axioms_capped(crate::subord::RELATION_SCAN_CAP)?;
    if !report.is_subordination() {
        return Err(Error::Precondition(
            "relation is not a subordination".into(),
        ));
    }
    if !t.is_compatible(s1.s(), s2.s())?.ok() {
        return Err(Error::Precondition("relation is not compatible".into()));
    }
    Ok(())
}

/// Continuity by definition, with the least failing pair as witness.
pub fn is_continuous(
    t: &Subordination,
    s1: &SubAlgebra,
    s2: &SubAlgebra,
) -> Result<(bool, Option<(u32, u32)>), Error> {
    require_compatible(t, s1, s2)?;
    let tilde = t.tilde_inverse();
    for b1 in s2.alg().lex_carrier() {
        for b2 in s2.alg().lex_carrier() {
            if !s2.s().holds(b1, b2) {
                continue;
            }
            let ok = tilde
                .targets(b1)
                .any(|a| tilde.targets(b2).all(|ap| s1.s().holds(a, ap)));
            if !ok {
                return Ok((false, Some((b1, b2))));
            }
        }
    }
    Ok((true, None))
}

/// The five equivalent forms of continuity, each computed in its own terms:
/// the definition, the lower-bound form, the upper-bound form, and the two
/// meet/join forms available because finite algebras are complete.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ContinuityVariants {
    pub definition: bool,
    /// `∃ a ∈ T~[b1] : a ∈ L(T~[b2])`
    pub lower_bound_form: bool,
    /// `∃ a ∈ T⁻¹[b2] : a ∈ U(T⁻¹[b1])`
    pub upper_bound_form: bool,
    /// `b1 T~ (⋀ T~[b2])`
    pub meet_form: bool,
    /// `(⋁ T⁻¹[b1]) T b2`
    pub join_form: bool,
}

impl ContinuityVariants {
    pub fn agree(&self) -> bool {
        self.definition == self.lower_bound_form
            && self.definition == self.upper_bound_form
            && self.definition == self.meet_form
            && self.definition == self.join_form
    }
}

pub fn continuity_variants(
    t: &Subordination,
    s1: &SubAlgebra,
    s2: &SubAlgebra,
) -> Result<ContinuityVariants, Error> {
    let (definition, _) = is_continuous(t, s1, s2)?;
    let tilde = t.tilde_inverse();
    let alg1 = s1.alg();
    let alg2 = s2.alg();

    let mut lower_bound_form = true;
    let mut upper_bound_form = true;
    let mut meet_form = true;
    let mut join_form = true;
    for b1 in alg2.carrier() {
        for b2 in alg2.carrier() {
            if !s2.s().holds(b1, b2) {
                continue;
            }
            if lower_bound_form {
                let ok = tilde
                    .targets(b1)
                    .any(|a| tilde.targets(b2).all(|x| alg1.leq(a, x)));
                lower_bound_form = ok;
            }
            if upper_bound_form {
                let ok = t.sources(b2).any(|a| t.sources(b1).all(|x| alg1.leq(x, a)));
                upper_bound_form = ok;
            }
            if meet_form {
                let meet = tilde.targets(b2).fold(alg1.top(), |m, a| alg1.meet(m, a));
                meet_form = tilde.holds(b1, meet);
            }
            if join_form {
                let join = t.sources(b1).fold(0u32, |m, a| alg1.join(m, a));
                join_form = t.holds(join, b2);
            }
        }
    }
    Ok(ContinuityVariants {
        definition,
        lower_bound_form,
        upper_bound_form,
        meet_form,
        join_form,
    })
}

/// Functionality by definition: `T~ ∘ T ⊆ S1` and `S2 ⊆ T ∘ T~`.
pub fn is_functional(t: &Subordination, s1: &SubAlgebra, s2: &SubAlgebra) -> Result<bool, Error> {
    require_compatible(t, s1, s2)?;
    let tilde = t.tilde_inverse();
    let tilde_after_t = t.compose(&tilde)?; // T~ ∘ T : B1 -> B1
    let t_after_tilde = tilde.compose(t)?; // T ∘ T~ : B2 -> B2
    Ok(tilde_after_t.rel().is_subset_of(s1.s().rel())
        && s2.s().rel().is_subset_of(t_after_tilde.rel()))
}

/// The two-condition characterization of functionality: (a) `a T 0` forces
/// `a = 0`; (b) the binary cover condition.
pub fn functional_characterization(
    t: &Subordination,
    s1: &SubAlgebra,
    s2: &SubAlgebra,
) -> Result<(bool, bool), Error> {
    require_compatible(t, s1, s2)?;
    let alg1 = s1.alg();
    let alg2 = s2.alg();

    let zero_condition = alg1.carrier().all(|a| !t.holds(a, 0) || a == 0);

    let mut cover_condition = true;
    'outer: for a in alg1.carrier() {
        for b1 in alg2.carrier() {
            for b2 in alg2.carrier() {
                if !t.holds(a, alg2.join(b1, b2)) {
                    continue;
                }
                for b1p in alg2.carrier() {
                    if !s2.s().holds(b1, b1p) {
                        continue;
                    }
                    for b2p in alg2.carrier() {
                        if !s2.s().holds(b2, b2p) {
                            continue;
                        }
                        let ok = alg1.carrier().any(|a1| {
                            t.holds(a1, b1p)
                                && alg1.carrier().any(|a2| {
                                    t.holds(a2, b2p) && s1.s().holds(a, alg1.join(a1, a2))
                                })
                        });
                        if !ok {
                            cover_condition = false;
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    Ok((zero_condition, cover_condition))
}

/// A map between two de Vries algebras given by an element table.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeVriesMap {
    dom: SubAlgebra,
    cod: SubAlgebra,
    table: Vec<u32>,
}

impl DeVriesMap {
    /// Both algebras must carry a de Vries profile (finitely: compingent).
    pub fn new(dom: SubAlgebra, cod: SubAlgebra, table: Vec<u32>) -> Result<Self, Error> {
        for b in [&dom, &cod] {
            let profile = b
                .s()
                .check_axioms_capped(crate::subord::RELATION_SCAN_CAP)?
                .profile();
            if !profile.de_vries {
                return Err(Error::Precondition(
                    "de Vries maps need de Vries algebras on both sides".into(),
                ));
            }
        }
        if table.len() != dom.alg().size() {
            return Err(Error::Shape(format!(
                "table has {} entries for an algebra of size {}",
                table.len(),
                dom.alg().size()
            )));
        }
        for &v in &table {
            cod.alg().check_elem(v)?;
        }
        Ok(Self { dom, cod, table })
    }

    pub fn identity(b: &SubAlgebra) -> Result<Self, Error> {
        Self::new(b.clone(), b.clone(), b.alg().carrier().collect())
    }

    pub fn dom(&self) -> &SubAlgebra {
        &self.dom
    }

    pub fn cod(&self) -> &SubAlgebra {
        &self.cod
    }

    pub fn apply(&self, a: u32) -> u32 {
        self.table[a as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    /// De Vries multiplicativity: `□1 = 1` and `a S b with c S d` implies
    /// `(□a ∧ □c) S □(b ∧ d)`.
    pub fn is_multiplicative(&self) -> bool {
        let alg1 = self.dom.alg();
        let alg2 = self.cod.alg();
        if self.apply(alg1.top()) != alg2.top() {
            return false;
        }
        for a in alg1.carrier() {
            for b in alg1.carrier() {
                if !self.dom.s().holds(a, b) {
                    continue;
                }
                for c in alg1.carrier() {
                    for d in alg1.carrier() {
                        if !self.dom.s().holds(c, d) {
                            continue;
                        }
                        let lhs = alg2.meet(self.apply(a), self.apply(c));
                        if !self.cod.s().holds(lhs, self.apply(alg1.meet(b, d))) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Lower continuity: `□a = ⋁{□b | b S a}`.
    pub fn is_lower_continuous(&self) -> bool {
        let alg1 = self.dom.alg();
        let alg2 = self.cod.alg();
        alg1.carrier().all(|a| {
            let join = alg1
                .carrier()
                .filter(|&b| self.dom.s().holds(b, a))
                .fold(0u32, |m, b| alg2.join(m, self.apply(b)));
            join == self.apply(a)
        })
    }

    /// The four de Vries morphism axioms, reported one by one.
    pub fn morphism_report(&self) -> DevMorphismReport {
        let alg1 = self.dom.alg();
        let alg2 = self.cod.alg();
        let m1 = self.apply(0) == 0;
        let m2 = alg1.carrier().all(|a| {
            alg1.carrier()
                .all(|b| self.apply(alg1.meet(a, b)) == alg2.meet(self.apply(a), self.apply(b)))
        });
        let mut m3 = true;
        'm3: for a in alg1.carrier() {
            for b in alg1.carrier() {
                if self.dom.s().holds(a, b) {
                    let lhs = alg2.complement(self.apply(alg1.complement(a)));
                    if !self.cod.s().holds(lhs, self.apply(b)) {
                        m3 = false;
                        break 'm3;
                    }
                }
            }
        }
        let m4 = self.is_lower_continuous();
        DevMorphismReport { m1, m2, m3, m4 }
    }

    /// De Vries composition `(g * f)(a) = ⋁{g(f(b)) | b S1 a}`.
    pub fn devries_compose(&self, g: &DeVriesMap) -> Result<DeVriesMap, Error> {
        if self.cod != g.dom {
            return Err(Error::Shape("de Vries composition mismatch".into()));
        }
        let alg1 = self.dom.alg();
        let alg3 = g.cod.alg();
        let table = alg1
            .carrier()
            .map(|a| {
                alg1.carrier()
                    .filter(|&b| self.dom.s().holds(b, a))
                    .fold(0u32, |m, b| alg3.join(m, g.apply(self.apply(b))))
            })
            .collect();
        DeVriesMap::new(self.dom.clone(), g.cod.clone(), table)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DevMorphismReport {
    pub m1: bool,
    pub m2: bool,
    pub m3: bool,
    pub m4: bool,
}

impl DevMorphismReport {
    pub fn is_morphism(&self) -> bool {
        self.m1 && self.m2 && self.m3 && self.m4
    }
}

/// `Box_T : B2 -> B1`, `Box_T b = ⋁ T⁻¹[b]`, for a continuous compatible
/// `T : B1 -> B2` between de Vries algebras. The result is checked to be
/// multiplicative and lower continuous.
pub fn box_of(t: &Subordination, s1: &SubAlgebra, s2: &SubAlgebra) -> Result<DeVriesMap, Error> {
    let (continuous, _) = is_continuous(t, s1, s2)?;
    if !continuous {
        return Err(Error::Precondition(
            "the box correspondent needs a continuous relation".into(),
        ));
    }
    let alg1 = s1.alg();
    let alg2 = s2.alg();
    let table = alg2
        .carrier()
        .map(|b| t.sources(b).fold(0u32, |m, a| alg1.join(m, a)))
        .collect();
    let map = DeVriesMap::new(s2.clone(), s1.clone(), table)?;
    if !map.is_multiplicative() || !map.is_lower_continuous() {
        return Err(Error::Internal(
            "box of a continuous relation must be multiplicative and lower continuous".into(),
        ));
    }
    Ok(map)
}

/// `T_Box : B1 -> B2`, `a T_Box b` iff `a S1 □b'` and `b' S2 b` for some
/// `b'`, for a multiplicative lower continuous `□ : B2 -> B1`.
pub fn t_of(box_map: &DeVriesMap) -> Result<Subordination, Error> {
    if !box_map.is_multiplicative() || !box_map.is_lower_continuous() {
        return Err(Error::Precondition(
            "the relational correspondent needs a multiplicative lower continuous map".into(),
        ));
    }
    let s2 = box_map.dom(); // □ : B2 -> B1
    let s1 = box_map.cod();
    let alg1 = s1.alg();
    let alg2 = s2.alg();
    let mut pairs = Vec::new();
    for a in alg1.carrier() {
        for b in alg2.carrier() {
            let related = alg2
                .carrier()
                .any(|bp| s1.s().holds(a, box_map.apply(bp)) && s2.s().holds(bp, b));
            if related {
                pairs.push((a, b));
            }
        }
    }
    Subordination::from_pairs(*alg1, *alg2, pairs)
}

/// All multiplicative lower continuous tables `P(k2) -> P(k1)`, enumerated
/// through assignments on co-atoms (which generate under meets) and then
/// deduplicated. On discrete de Vries algebras these are exactly the
/// top-and-binary-meet preserving maps.
pub fn all_mult_lower_cont_tables(k2: u32, k1: u32) -> Vec<Vec<u32>> {
    let alg2 = BoolAlg::new(k2).expect("atom count in range");
    let alg1 = BoolAlg::new(k1).expect("atom count in range");
    let coatoms: Vec<u32> = (0..k2).map(|i| alg2.top() ^ (1 << i)).collect();
    let mut tables: Vec<Vec<u32>> = Vec::new();
    let mut assignment = vec![0u32; coatoms.len()];
    loop {
        let table: Vec<u32> = alg2
            .carrier()
            .map(|x| {
                coatoms
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| alg2.leq(x, c))
                    .fold(alg1.top(), |m, (i, _)| alg1.meet(m, assignment[i]))
            })
            .collect();
        if !tables.contains(&table) {
            tables.push(table);
        }
        // advance the assignment vector
        let mut i = 0;
        loop {
            if i == assignment.len() {
                tables.sort();
                return tables;
            }
            if assignment[i] < alg1.top() {
                assignment[i] += 1;
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{all_partitions, Partition};
    use crate::subord::from_equivalence;

    #[test]
    fn identity_morphism_is_continuous_and_functional() {
        for k in 1..=3 {
            for e in all_partitions(k).unwrap() {
                let b = from_equivalence(&e).unwrap();
                let (cont, _) = is_continuous(b.s(), &b, &b).unwrap();
                assert!(cont);
                assert!(is_functional(b.s(), &b, &b).unwrap());
            }
        }
    }

    #[test]
    fn variants_agree_on_identity() {
        let b =
            from_equivalence(&Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap()).unwrap();
        let v = continuity_variants(b.s(), &b, &b).unwrap();
        assert!(v.agree() && v.definition);
    }

    #[test]
    fn leq_on_two_atoms_all_variants_true() {
        let b = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        let v = continuity_variants(b.s(), &b, &b).unwrap();
        assert!(v.agree() && v.definition);
    }

    #[test]
    fn functional_characterization_agrees_on_identity() {
        let b =
            from_equivalence(&Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap()).unwrap();
        let (za, cover) = functional_characterization(b.s(), &b, &b).unwrap();
        assert_eq!(za && cover, is_functional(b.s(), &b, &b).unwrap());
        assert!(za && cover);
    }

    #[test]
    fn graph_of_class_function_is_functional() {
        use crate::duality::{FinSubSpace, PointRelation};
        // X1 = 2 points, identity; X2 = 2 points, one class; R = graph of
        // the identity function, saturated.
        let x1 = FinSubSpace::identity(2);
        let x2 = FinSubSpace::new(Partition::single_class(2));
        let r = PointRelation::new(x1.clone(), x2.clone(), [(0, 0), (1, 1)])
            .unwrap()
            .saturated();
        assert!(r.is_functional());
        let t = crate::subord::from_closed_relation(&r).unwrap();
        let s1 = crate::duality::clop(&x1).unwrap();
        let s2 = crate::duality::clop(&x2).unwrap();
        assert!(is_functional(&t, &s1, &s2).unwrap());
    }

    #[test]
    fn one_point_to_two_classes_not_functional() {
        use crate::duality::{FinSubSpace, PointRelation};
        // R relates the single point of X1 to both classes of X2
        let x1 = FinSubSpace::identity(1);
        let x2 = FinSubSpace::identity(2);
        let r = PointRelation::new(x1.clone(), x2.clone(), [(0, 0), (0, 1)])
            .unwrap()
            .saturated();
        assert!(!r.is_functional());
        let t = crate::subord::from_closed_relation(&r).unwrap();
        let s1 = crate::duality::clop(&x1).unwrap();
        let s2 = crate::duality::clop(&x2).unwrap();
        assert!(!is_functional(&t, &s1, &s2).unwrap());
        let (za, cover) = functional_characterization(&t, &s1, &s2).unwrap();
        assert!(!(za && cover));
    }

    #[test]
    fn box_of_identity_is_identity() {
        let b = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        let map = box_of(b.s(), &b, &b).unwrap();
        assert_eq!(map.table(), &[0, 1, 2, 3]);
    }

    #[test]
    fn t_of_identity_is_leq() {
        let b = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        let id = DeVriesMap::identity(&b).unwrap();
        let t = t_of(&id).unwrap();
        assert_eq!(&t, b.s());
    }

    #[test]
    fn roundtrips_exhaustive_two_atoms() {
        let b1 = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        let b2 = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        // Box side: every multiplicative lower continuous table
        for table in all_mult_lower_cont_tables(2, 2) {
            let map = DeVriesMap::new(b2.clone(), b1.clone(), table.clone()).unwrap();
            assert!(map.is_multiplicative() && map.is_lower_continuous());
            let t = t_of(&map).unwrap();
            let back = box_of(&t, &b1, &b2).unwrap();
            assert_eq!(back.table(), map.table());
        }
    }

    #[test]
    fn devries_morphism_examples() {
        let b = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        let id = DeVriesMap::identity(&b).unwrap();
        assert!(id.morphism_report().is_morphism());

        // composition on discrete algebras is pointwise composition
        let f = DeVriesMap::new(b.clone(), b.clone(), vec![0, 1, 0, 1]).unwrap();
        let g = DeVriesMap::new(b.clone(), b.clone(), vec![0, 3, 0, 3]).unwrap();
        let gf = f.devries_compose(&g).unwrap();
        let pointwise: Vec<u32> = (0..4).map(|a| g.apply(f.apply(a))).collect();
        assert_eq!(gf.table(), &pointwise[..]);
    }

    #[test]
    fn atom_dropping_map_fails_m3() {
        let b = SubAlgebra::discrete(BoolAlg::new(2).unwrap());
        // f(x) = x \ {0}
        let table: Vec<u32> = (0..4).map(|x| x & !1).collect();
        let f = DeVriesMap::new(b.clone(), b.clone(), table).unwrap();
        let report = f.morphism_report();
        assert!(report.m1 && report.m2 && report.m4);
        assert!(!report.m3);
    }
}
