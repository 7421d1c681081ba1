//! Finite boolean algebras as powersets of a set of atoms.
//!
//! An element is a bitmask of atom indices; the algebra operations are the
//! set operations on masks. Families of elements (ideals, filters, raw sets)
//! carry the upper-bound / lower-bound / complement operators that the
//! completion machinery is built on.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::Error;

/// Maximum number of atoms for raw element algebra. Operations that
/// enumerate relations or families impose tighter caps of their own.
pub const MAX_ATOMS: u32 = 12;

/// A finite boolean algebra `P({0, .., n_atoms-1})`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct BoolAlg {
    n_atoms: u32,
}

impl BoolAlg {
    pub fn new(n_atoms: u32) -> Result<Self, Error> {
        if n_atoms == 0 || n_atoms > MAX_ATOMS {
            return Err(Error::AtomCount(n_atoms));
        }
        Ok(Self { n_atoms })
    }

    pub fn n_atoms(&self) -> u32 {
        self.n_atoms
    }

    /// Number of elements, `2^n_atoms`.
    pub fn size(&self) -> usize {
        1 << self.n_atoms
    }

    pub fn top(&self) -> u32 {
        (1u32 << self.n_atoms) - 1
    }

    pub fn bottom(&self) -> u32 {
        0
    }

    pub fn contains(&self, mask: u32) -> bool {
        mask <= self.top()
    }

    pub fn check_elem(&self, mask: u32) -> Result<(), Error> {
        if self.contains(mask) {
            Ok(())
        } else {
            Err(Error::ElementRange {
                mask,
                n_atoms: self.n_atoms,
            })
        }
    }

    /// All elements in numeric mask order.
    pub fn carrier(&self) -> impl Iterator<Item = u32> {
        0..=self.top()
    }

    /// All elements sorted by [`lex_cmp`]; the canonical reporting order.
    pub fn lex_carrier(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.carrier().collect();
        v.sort_by(|a, b| lex_cmp(*a, *b));
        v
    }

    pub fn meet(&self, a: u32, b: u32) -> u32 {
        a & b
    }

    pub fn join(&self, a: u32, b: u32) -> u32 {
        a | b
    }

    pub fn complement(&self, a: u32) -> u32 {
        !a & self.top()
    }

    pub fn leq(&self, a: u32, b: u32) -> bool {
        a & !b == 0
    }

    /// Checked element operations; rejects out-of-range masks so that
    /// arguments from a different algebra cannot slip through.
    pub fn try_meet(&self, a: u32, b: u32) -> Result<u32, Error> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.meet(a, b))
    }

    pub fn try_join(&self, a: u32, b: u32) -> Result<u32, Error> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.join(a, b))
    }

    pub fn try_complement(&self, a: u32) -> Result<u32, Error> {
        self.check_elem(a)?;
        Ok(self.complement(a))
    }

    pub fn try_leq(&self, a: u32, b: u32) -> Result<bool, Error> {
        self.check_elem(a)?;
        self.check_elem(b)?;
        Ok(self.leq(a, b))
    }

    pub fn atoms(&self) -> impl Iterator<Item = u32> {
        let n = self.n_atoms;
        (0..n).map(|i| 1u32 << i)
    }
}

/// Order elements as sorted atom-index lists compared lexicographically:
/// `{} < {0} < {0,1} < {0,1,2} < {0,2} < {1} < {1,2} < {2}` on three atoms.
/// This is the canonical element order for all serialized output.
pub fn lex_cmp(a: u32, b: u32) -> Ordering {
    let (mut a, mut b) = (a, b);
    loop {
        match (a == 0, b == 0) {
            (true, true) => return Ordering::Equal,
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            (false, false) => {
                let ia = a.trailing_zeros();
                let ib = b.trailing_zeros();
                match ia.cmp(&ib) {
                    Ordering::Equal => {
                        a &= a - 1;
                        b &= b - 1;
                    }
                    other => return other,
                }
            }
        }
    }
}

/// Render an element as its sorted atom-index set, e.g. `{0,2}`.
pub fn format_elem(mask: u32) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for i in 0..32 {
        if mask >> i & 1 == 1 {
            if !first {
                s.push(',');
            }
            s.push_str(&i.to_string());
            first = false;
        }
    }
    s.push('}');
    s
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FamilyKind {
    Raw,
    Ideal,
    Filter,
}

impl FamilyKind {
    pub fn label(&self) -> &'static str {
        match self {
            FamilyKind::Raw => "raw",
            FamilyKind::Ideal => "ideal",
            FamilyKind::Filter => "filter",
        }
    }
}

/// A set of elements of one algebra, optionally tagged as an ideal or filter.
/// The tag is validated at construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ElemFamily {
    alg: BoolAlg,
    members: BTreeSet<u32>,
    kind: FamilyKind,
}

impl ElemFamily {
    pub fn new(alg: BoolAlg, members: BTreeSet<u32>, kind: FamilyKind) -> Result<Self, Error> {
        for &m in &members {
            alg.check_elem(m)?;
        }
        match kind {
            FamilyKind::Raw => {}
            FamilyKind::Ideal => {
                if let Some(w) = ideal_violation(&alg, &members) {
                    return Err(Error::BadFamilyTag {
                        kind: "ideal",
                        detail: w,
                    });
                }
            }
            FamilyKind::Filter => {
                if let Some(w) = filter_violation(&alg, &members) {
                    return Err(Error::BadFamilyTag {
                        kind: "filter",
                        detail: w,
                    });
                }
            }
        }
        Ok(Self { alg, members, kind })
    }

    pub fn raw(alg: BoolAlg, members: impl IntoIterator<Item = u32>) -> Result<Self, Error> {
        Self::new(alg, members.into_iter().collect(), FamilyKind::Raw)
    }

    /// The principal ideal of all elements below `g`.
    pub fn principal_ideal(alg: BoolAlg, g: u32) -> Result<Self, Error> {
        alg.check_elem(g)?;
        let members = alg.carrier().filter(|&m| alg.leq(m, g)).collect();
        Self::new(alg, members, FamilyKind::Ideal)
    }

    /// The principal filter of all elements above `g`.
    pub fn principal_filter(alg: BoolAlg, g: u32) -> Result<Self, Error> {
        alg.check_elem(g)?;
        let members = alg.carrier().filter(|&m| alg.leq(g, m)).collect();
        Self::new(alg, members, FamilyKind::Filter)
    }

    pub fn alg(&self) -> &BoolAlg {
        &self.alg
    }

    pub fn members(&self) -> &BTreeSet<u32> {
        &self.members
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, m: u32) -> bool {
        self.members.contains(&m)
    }

    /// Members sorted in canonical (lexicographic) element order.
    pub fn canonical_members(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.members.iter().copied().collect();
        v.sort_by(|a, b| lex_cmp(*a, *b));
        v
    }

    /// `U(X)`: the set of upper bounds of the family, tagged filter.
    /// `U(∅)` is the whole carrier (every element bounds the empty family).
    pub fn upper_bounds(&self) -> ElemFamily {
        let members = self
            .alg
            .carrier()
            .filter(|&b| self.members.iter().all(|&x| self.alg.leq(x, b)))
            .collect();
        ElemFamily::new(self.alg, members, FamilyKind::Filter)
            .expect("upper bounds always form a filter")
    }

    /// `L(X)`: the set of lower bounds of the family, tagged ideal.
    pub fn lower_bounds(&self) -> ElemFamily {
        let members = self
            .alg
            .carrier()
            .filter(|&b| self.members.iter().all(|&x| self.alg.leq(b, x)))
            .collect();
        ElemFamily::new(self.alg, members, FamilyKind::Ideal)
            .expect("lower bounds always form an ideal")
    }

    /// `¬X = {¬x | x ∈ X}`; swaps the ideal and filter tags.
    pub fn negate(&self) -> ElemFamily {
        let members = self
            .members
            .iter()
            .map(|&m| self.alg.complement(m))
            .collect();
        let kind = match self.kind {
            FamilyKind::Raw => FamilyKind::Raw,
            FamilyKind::Ideal => FamilyKind::Filter,
            FamilyKind::Filter => FamilyKind::Ideal,
        };
        ElemFamily::new(self.alg, members, kind)
            .expect("elementwise complement swaps ideal and filter")
    }

    /// Smallest ideal containing the family. In a finite boolean algebra this
    /// is the principal ideal of the join of the members.
    pub fn ideal_generated(&self) -> ElemFamily {
        let g = self.members.iter().fold(0u32, |acc, &m| acc | m);
        ElemFamily::principal_ideal(self.alg, g).expect("join of members is in range")
    }
}

/// Why a member set is not an ideal, if it is not.
fn ideal_violation(alg: &BoolAlg, members: &BTreeSet<u32>) -> Option<String> {
    if !members.contains(&0) {
        return Some("does not contain 0".into());
    }
    for &a in members {
        for b in alg.carrier() {
            if alg.leq(b, a) && !members.contains(&b) {
                return Some(format!(
                    "not downward closed: {} below member {}",
                    format_elem(b),
                    format_elem(a)
                ));
            }
        }
        for &b in members {
            if !members.contains(&alg.join(a, b)) {
                return Some(format!(
                    "not closed under join: {} ∨ {}",
                    format_elem(a),
                    format_elem(b)
                ));
            }
        }
    }
    None
}

fn filter_violation(alg: &BoolAlg, members: &BTreeSet<u32>) -> Option<String> {
    if !members.contains(&alg.top()) {
        return Some("does not contain 1".into());
    }
    for &a in members {
        for b in alg.carrier() {
            if alg.leq(a, b) && !members.contains(&b) {
                return Some(format!(
                    "not upward closed: {} above member {}",
                    format_elem(b),
                    format_elem(a)
                ));
            }
        }
        for &b in members {
            if !members.contains(&alg.meet(a, b)) {
                return Some(format!(
                    "not closed under meet: {} ∧ {}",
                    format_elem(a),
                    format_elem(b)
                ));
            }
        }
    }
    None
}

/// Enumerate every ideal of the algebra by brute force over all member sets.
/// Exponential in `2^n_atoms`; capped at 4 atoms. This is an oracle kept
/// independent of the principal-ideal shortcut used elsewhere.
pub fn brute_force_ideals(alg: &BoolAlg) -> Result<Vec<BTreeSet<u32>>, Error> {
    if alg.n_atoms() > 4 {
        return Err(Error::CapExceeded {
            what: "brute-force ideal enumeration",
            limit: 4,
            got: alg.n_atoms(),
        });
    }
    let size = alg.size();
    let mut out = Vec::new();
    for subset in 0u32..(1u32 << size) {
        let members: BTreeSet<u32> = (0..size as u32).filter(|&m| subset >> m & 1 == 1).collect();
        if ideal_violation(alg, &members).is_none() {
            out.push(members);
        }
    }
    Ok(out)
}

/// Is `I` a normal ideal, i.e. `L(U(I)) = I`? Used as the classical
/// MacNeille-completion oracle.
pub fn is_normal_ideal(alg: &BoolAlg, members: &BTreeSet<u32>) -> bool {
    let fam = ElemFamily {
        alg: *alg,
        members: members.clone(),
        kind: FamilyKind::Raw,
    };
    fam.upper_bounds().lower_bounds().members == *members
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(n: u32) -> BoolAlg {
        BoolAlg::new(n).unwrap()
    }

    #[test]
    fn element_algebra_basics() {
        let b2 = alg(2);
        // meet({0},{0,1}) = {0}
        assert_eq!(b2.try_meet(0b01, 0b11).unwrap(), 0b01);
        // complement({0}) = {1}
        assert_eq!(b2.try_complement(0b01).unwrap(), 0b10);
        let b3 = alg(3);
        // join({0},{2}) = {0,2}
        assert_eq!(b3.try_join(0b001, 0b100).unwrap(), 0b101);
    }

    #[test]
    fn mixed_algebra_rejected() {
        let b2 = alg(2);
        assert!(b2.try_meet(0b100, 0b01).is_err());
        assert!(b2.try_leq(0, 0b1000).is_err());
    }

    #[test]
    fn atom_count_bounds() {
        assert!(BoolAlg::new(0).is_err());
        assert!(BoolAlg::new(13).is_err());
        assert!(BoolAlg::new(12).is_ok());
    }

    #[test]
    fn upper_bounds_examples() {
        let b2 = alg(2);
        // X = {{0}} -> principal upset of {0}
        let x = ElemFamily::raw(b2, [0b01]).unwrap();
        let u = x.upper_bounds();
        assert_eq!(u.members(), &BTreeSet::from([0b01, 0b11]));
        assert_eq!(u.kind(), FamilyKind::Filter);
        // X = {{0},{1}} -> only the top bounds both atoms
        let x = ElemFamily::raw(b2, [0b01, 0b10]).unwrap();
        assert_eq!(x.upper_bounds().members(), &BTreeSet::from([0b11]));
        // X = {∅} on three atoms -> everything bounds bottom
        let b3 = alg(3);
        let x = ElemFamily::raw(b3, [0]).unwrap();
        assert_eq!(x.upper_bounds().len(), 8);
    }

    #[test]
    fn lower_bounds_examples() {
        let b2 = alg(2);
        let x = ElemFamily::raw(b2, [0b11]).unwrap();
        assert_eq!(x.lower_bounds().len(), 4);
        let x = ElemFamily::raw(b2, [0b01, 0b10]).unwrap();
        assert_eq!(x.lower_bounds().members(), &BTreeSet::from([0]));
        // vacuous bound: L(∅) is the whole carrier
        let b3 = alg(3);
        let x = ElemFamily::raw(b3, []).unwrap();
        assert_eq!(x.lower_bounds().len(), 8);
    }

    #[test]
    fn negate_family_examples() {
        let b1 = alg(1);
        let x = ElemFamily::raw(b1, [0]).unwrap();
        assert_eq!(x.negate().members(), &BTreeSet::from([1]));
        // complement of a downset is an upset
        let b2 = alg(2);
        let down = ElemFamily::principal_ideal(b2, 0b01).unwrap();
        let up = down.negate();
        assert_eq!(up.kind(), FamilyKind::Filter);
        assert_eq!(
            up.members(),
            ElemFamily::principal_filter(b2, 0b10).unwrap().members()
        );
    }

    #[test]
    fn ideal_generated_examples() {
        let b2 = alg(2);
        let x = ElemFamily::raw(b2, [0b01, 0b10]).unwrap();
        assert_eq!(x.ideal_generated().len(), 4); // whole carrier
        let b3 = alg(3);
        let empty = ElemFamily::raw(b3, []).unwrap();
        assert_eq!(empty.ideal_generated().members(), &BTreeSet::from([0]));
    }

    /// Oracle for `ideal_generated`: saturate under downsets and binary joins.
    fn ideal_closure_oracle(alg: &BoolAlg, start: &BTreeSet<u32>) -> BTreeSet<u32> {
        let mut acc: BTreeSet<u32> = start.clone();
        acc.insert(0);
        loop {
            let mut next = acc.clone();
            for &a in &acc {
                for b in alg.carrier() {
                    if alg.leq(b, a) {
                        next.insert(b);
                    }
                }
                for &b in &acc {
                    next.insert(alg.join(a, b));
                }
            }
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    #[test]
    fn ideal_generated_matches_saturation_oracle() {
        let b3 = alg(3);
        let x = ElemFamily::raw(b3, [0b001, 0b010]).unwrap();
        let got = x.ideal_generated();
        let want = ideal_closure_oracle(&b3, x.members());
        assert_eq!(got.members(), &want);
    }

    #[test]
    fn negation_laws_hold_for_all_families_n2() {
        let b2 = alg(2);
        // all 2^4 families on two atoms
        for subset in 0u32..16 {
            let members: BTreeSet<u32> = (0..4).filter(|&m| subset >> m & 1 == 1).collect();
            let x = ElemFamily::new(b2, members, FamilyKind::Raw).unwrap();
            assert_eq!(x.negate().negate().members(), x.members());
            // ¬U(X) = L(¬X) and ¬L(X) = U(¬X)
            assert_eq!(
                x.upper_bounds().negate().members(),
                x.negate().lower_bounds().members()
            );
            assert_eq!(
                x.lower_bounds().negate().members(),
                x.negate().upper_bounds().members()
            );
        }
    }

    #[test]
    fn every_ideal_is_principal() {
        let b3 = alg(3);
        for ideal in brute_force_ideals(&b3).unwrap() {
            let g = ideal.iter().fold(0, |a, &m| a | m);
            let principal = ElemFamily::principal_ideal(b3, g).unwrap();
            assert_eq!(principal.members(), &ideal);
        }
    }

    #[test]
    fn normal_ideal_oracle_on_boolean_algebra() {
        // In a finite boolean algebra every ideal is principal, hence normal.
        let b2 = alg(2);
        for ideal in brute_force_ideals(&b2).unwrap() {
            assert!(is_normal_ideal(&b2, &ideal));
        }
    }

    #[test]
    fn lex_order_on_three_atoms() {
        let b3 = alg(3);
        let order: Vec<String> = b3.lex_carrier().into_iter().map(format_elem).collect();
        assert_eq!(
            order,
            vec!["{}", "{0}", "{0,1}", "{0,1,2}", "{0,2}", "{1}", "{1,2}", "{2}"]
        );
    }

    #[test]
    fn bad_family_tags_rejected() {
        let b2 = alg(2);
        // {∅, {0,1}} is not downward closed, so not an ideal
        let r = ElemFamily::new(b2, BTreeSet::from([0, 0b11]), FamilyKind::Ideal);
        assert!(r.is_err());
        // a filter must contain the top
        let r = ElemFamily::new(b2, BTreeSet::from([0b01]), FamilyKind::Filter);
        assert!(r.is_err());
    }
}
