//! Dense bit-packed binary relations (boolean matrices).
//!
//! A `BitRel` is a relation between two finite index sets, stored row-major
//! with 64 columns per word. It backs subordination relations (indexed by
//! element masks) and point relations (indexed by points) alike, and provides
//! the relation-algebra operations everything else is built from:
//! composition, converse, inclusion, and row images.

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitRel {
    rows: usize,
    cols: usize,
    wpr: usize,
    bits: Vec<u64>,
}

impl BitRel {
    pub fn new(rows: usize, cols: usize) -> Self {
        let wpr = cols.div_ceil(64).max(1);
        Self {
            rows,
            cols,
            wpr,
            bits: vec![0; rows * wpr],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut r = Self::new(n, n);
        for i in 0..n {
            r.set(i, i, true);
        }
        r
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        let mut r = Self::new(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                r.set(i, j, true);
            }
        }
        r
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        self.bits[r * self.wpr + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.bits[r * self.wpr + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.wpr..(r + 1) * self.wpr]
    }

    /// Union `other`'s row `src` into our row `dst`. Row widths must match.
    fn or_row_from(&mut self, dst: usize, other: &BitRel, src: usize) {
        debug_assert_eq!(self.wpr, other.wpr);
        let base = dst * self.wpr;
        for w in 0..self.wpr {
            self.bits[base + w] |= other.bits[src * other.wpr + w];
        }
    }

    pub fn row_is_empty(&self, r: usize) -> bool {
        self.row(r).iter().all(|&w| w == 0)
    }

    /// Relation composition: `self : A -> B`, `then : B -> C`, result `A -> C`
    /// with `a (then ∘ self) c` iff there is `b` with `a self b` and `b then c`.
    pub fn compose(&self, then: &BitRel) -> BitRel {
        assert_eq!(self.cols, then.rows, "composition arity mismatch");
        let mut out = BitRel::new(self.rows, then.cols);
        for a in 0..self.rows {
            for b in 0..self.cols {
                if self.get(a, b) {
                    out.or_row_from(a, then, b);
                }
            }
        }
        out
    }

    pub fn converse(&self) -> BitRel {
        let mut out = BitRel::new(self.cols, self.rows);
        for (a, b) in self.iter_pairs() {
            out.set(b, a, true);
        }
        out
    }

    pub fn is_subset_of(&self, other: &BitRel) -> bool {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(&a, &b)| a & !b == 0)
    }

    pub fn union(&self, other: &BitRel) -> BitRel {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (w, &o) in out.bits.iter_mut().zip(&other.bits) {
            *w |= o;
        }
        out
    }

    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.rows).flat_map(move |r| {
            (0..self.cols)
                .filter(move |&c| self.get(r, c))
                .map(move |c| (r, c))
        })
    }

    /// Image of a set of row indices: all columns related to some member.
    pub fn image_of(&self, set: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut acc = vec![0u64; self.wpr];
        for r in set {
            for (w, &b) in acc.iter_mut().zip(self.row(r)) {
                *w |= b;
            }
        }
        (0..self.cols)
            .filter(|&c| acc[c / 64] >> (c % 64) & 1 == 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_converse() {
        // r: 0->1, 1->2 on 3 points; r∘r = {0->2}
        let mut r = BitRel::new(3, 3);
        r.set(0, 1, true);
        r.set(1, 2, true);
        let rr = r.compose(&r);
        assert!(rr.get(0, 2));
        assert_eq!(rr.count(), 1);
        let c = r.converse();
        assert!(c.get(1, 0) && c.get(2, 1));
        assert_eq!(c.converse(), r);
    }

    #[test]
    fn identity_neutral() {
        let mut r = BitRel::new(2, 3);
        r.set(0, 2, true);
        r.set(1, 0, true);
        assert_eq!(BitRel::identity(2).compose(&r), r);
        assert_eq!(r.compose(&BitRel::identity(3)), r);
    }

    #[test]
    fn subset_and_union() {
        let mut a = BitRel::new(2, 2);
        a.set(0, 0, true);
        let mut b = a.clone();
        b.set(1, 1, true);
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert_eq!(a.union(&b), b);
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let mut r = BitRel::new(2, 130);
        r.set(0, 129, true);
        r.set(1, 64, true);
        assert!(r.get(0, 129) && !r.get(0, 64));
        let c = r.converse();
        assert!(c.get(129, 0) && c.get(64, 1));
    }
}
