//! Partitions of a finite point set, in canonical restricted-growth form.

use crate::Error;

/// A partition of `{0, .., n-1}` stored as a restricted growth string:
/// `class_of[0] == 0` and each label is at most one more than the maximum
/// label before it. Classes are therefore numbered by first occurrence,
/// which is the same as ordering them by least member.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    class_of: Vec<u32>,
}

impl Partition {
    /// Canonicalize an arbitrary labelling into restricted-growth form.
    pub fn from_labels(labels: &[u32]) -> Result<Self, Error> {
        if labels.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let mut relabel: Vec<Option<u32>> = vec![None; labels.len()];
        let mut next = 0u32;
        let mut class_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let l = l as usize;
            if l >= labels.len() {
                return Err(Error::PartitionLabelRange {
                    label: l as u32,
                    points: labels.len(),
                });
            }
            let c = match relabel[l] {
                Some(c) => c,
                None => {
                    let c = next;
                    relabel[l] = Some(c);
                    next += 1;
                    c
                }
            };
            class_of.push(c);
        }
        Ok(Self { class_of })
    }

    /// Build from explicit classes; they must partition `{0, .., points-1}`.
    pub fn from_classes(points: usize, classes: &[Vec<usize>]) -> Result<Self, Error> {
        let mut labels = vec![u32::MAX; points];
        for (c, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(Error::PartitionShape("empty class".into()));
            }
            for &p in class {
                if p >= points {
                    return Err(Error::PartitionLabelRange {
                        label: p as u32,
                        points,
                    });
                }
                if labels[p] != u32::MAX {
                    return Err(Error::PartitionShape(format!("point {p} listed twice")));
                }
                labels[p] = c as u32;
            }
        }
        if let Some(p) = labels.iter().position(|&l| l == u32::MAX) {
            return Err(Error::PartitionShape(format!("point {p} not covered")));
        }
        Self::from_labels(&labels)
    }

    pub fn identity(points: usize) -> Self {
        Self {
            class_of: (0..points as u32).collect(),
        }
    }

    pub fn single_class(points: usize) -> Self {
        Self {
            class_of: vec![0; points],
        }
    }

    pub fn points(&self) -> usize {
        self.class_of.len()
    }

    pub fn n_classes(&self) -> usize {
        self.class_of
            .iter()
            .map(|&c| c as usize + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn class_of(&self, p: usize) -> u32 {
        self.class_of[p]
    }

    pub fn same_class(&self, p: usize, q: usize) -> bool {
        self.class_of[p] == self.class_of[q]
    }

    pub fn is_identity(&self) -> bool {
        self.n_classes() == self.points()
    }

    /// Bitmask of the points in class `c`.
    pub fn class_mask(&self, c: u32) -> u32 {
        let mut m = 0;
        for (p, &cp) in self.class_of.iter().enumerate() {
            if cp == c {
                m |= 1 << p;
            }
        }
        m
    }

    /// Saturation of a point set: the union of all classes it meets.
    pub fn saturate(&self, set: u32) -> u32 {
        let mut m = 0;
        for c in 0..self.n_classes() as u32 {
            let cm = self.class_mask(c);
            if cm & set != 0 {
                m |= cm;
            }
        }
        m
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.n_classes()];
        for (p, &c) in self.class_of.iter().enumerate() {
            out[c as usize].push(p);
        }
        out
    }

    /// The equivalence as a point relation matrix.
    pub fn as_relation(&self) -> crate::bitrel::BitRel {
        let n = self.points();
        let mut r = crate::bitrel::BitRel::new(n, n);
        for p in 0..n {
            for q in 0..n {
                if self.same_class(p, q) {
                    r.set(p, q, true);
                }
            }
        }
        r
    }
}

/// All partitions of `k` points in canonical restricted-growth-string order.
/// There are Bell(k) of them; capped at `k <= 6` (Bell(6) = 203).
pub fn all_partitions(k: usize) -> Result<Vec<Partition>, Error> {
    if k == 0 || k > 6 {
        return Err(Error::CapExceeded {
            what: "partition enumeration",
            limit: 6,
            got: k as u32,
        });
    }
    let mut out = Vec::new();
    let mut rgs = vec![0u32; k];
    loop {
        out.push(Partition {
            class_of: rgs.clone(),
        });
        // advance to the next restricted growth string
        let mut i = k;
        loop {
            if i == 1 {
                return Ok(out);
            }
            i -= 1;
            let max_prefix = rgs[..i].iter().copied().max().unwrap();
            if rgs[i] <= max_prefix {
                rgs[i] += 1;
                for v in rgs[i + 1..].iter_mut() {
                    *v = 0;
                }
                break;
            }
            rgs[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        assert_eq!(all_partitions(1).unwrap().len(), 1);
        assert_eq!(all_partitions(2).unwrap().len(), 2);
        assert_eq!(all_partitions(3).unwrap().len(), 5);
        assert_eq!(all_partitions(4).unwrap().len(), 15);
        assert_eq!(all_partitions(5).unwrap().len(), 52);
        assert_eq!(all_partitions(6).unwrap().len(), 203);
        assert!(all_partitions(7).is_err());
    }

    #[test]
    fn rgs_order_for_three_points() {
        let ps = all_partitions(3).unwrap();
        let strings: Vec<Vec<u32>> = ps.iter().map(|p| p.class_of.clone()).collect();
        assert_eq!(
            strings,
            vec![
                vec![0, 0, 0],
                vec![0, 0, 1],
                vec![0, 1, 0],
                vec![0, 1, 1],
                vec![0, 1, 2]
            ]
        );
    }

    #[test]
    fn canonicalization() {
        let p = Partition::from_labels(&[2, 2, 0]).unwrap();
        assert_eq!(p.class_of, vec![0, 0, 1]);
        let q = Partition::from_classes(3, &[vec![2], vec![0, 1]]).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn saturation() {
        let p = Partition::from_classes(3, &[vec![0, 1], vec![2]]).unwrap();
        assert_eq!(p.saturate(0b001), 0b011);
        assert_eq!(p.saturate(0b100), 0b100);
        assert_eq!(p.saturate(0), 0);
    }

    #[test]
    fn bad_classes_rejected() {
        assert!(Partition::from_classes(3, &[vec![0, 1]]).is_err());
        assert!(Partition::from_classes(3, &[vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::from_classes(2, &[vec![0], vec![5]]).is_err());
    }
}
