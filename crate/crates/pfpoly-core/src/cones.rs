//! Sliced preorder cones: the building blocks of the normal fan.
//!
//! To a preorder `⪯` on `[0,n]` we attach the cone
//! `σ̃_⪯ = { c ∈ ℝⁿ : c₀ = 0, c_p ≤ c_q whenever p ⪯ q }` (the coordinate
//! `c₀` of the element 0 is pinned to zero, "slicing" the usual preorder
//! cone).  Faces of `σ̃_⪯` are exactly the cones of contractions of `⪯`,
//! its dimension is one less than the number of equivalence classes, and
//! it decomposes as the union of the chain cones of the linear extensions
//! of `⪯`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::partitions::{
    is_contraction, partition_of_preposet, Element, Preposet, SkewedBinaryComposition,
    SkewedBinaryPartition, Tag,
};
use crate::poly::Rational;

/// Whether a membership query asks for the closed cone or its relative
/// interior.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Region {
    Closed,
    Interior,
}

/// The sliced preorder cone of a preorder on `[0,n]`, living in `ℝⁿ`
/// (coordinates indexed by `1,…,n`; the coordinate of 0 is fixed to 0).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SlicedPreorderCone {
    pre: Preposet,
}

impl SlicedPreorderCone {
    pub fn of_preposet(pre: Preposet) -> Self {
        SlicedPreorderCone { pre }
    }

    pub fn of_partition(b: &SkewedBinaryPartition) -> Self {
        SlicedPreorderCone { pre: b.preposet() }
    }

    pub fn preposet(&self) -> &Preposet {
        &self.pre
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> Element {
        self.pre.n()
    }

    fn value<'a>(&self, c: &'a [Rational], p: Element) -> Rational {
        if p == 0 {
            Rational::zero()
        } else {
            c[p as usize - 1].clone()
        }
    }

    /// Membership of `c = (c₁,…,c_n)` in the closed cone or its relative
    /// interior.
    pub fn contains(&self, c: &[Rational], region: Region) -> bool {
        assert_eq!(c.len(), self.n() as usize, "dimension mismatch");
        match region {
            Region::Closed => {
                for p in 0..=self.n() {
                    for q in 0..=self.n() {
                        if self.pre.le(p, q) && self.value(c, p) > self.value(c, q) {
                            return false;
                        }
                    }
                }
                true
            }
            Region::Interior => {
                // Equal inside classes, strictly increasing across covers.
                for p in 0..=self.n() {
                    for q in 0..=self.n() {
                        if self.pre.equivalent(p, q) && self.value(c, p) != self.value(c, q) {
                            return false;
                        }
                    }
                }
                self.pre
                    .class_covers()
                    .iter()
                    .all(|&(a, b)| self.value(c, a) < self.value(c, b))
            }
        }
    }

    /// Dimension of the cone: the number of equivalence classes minus one.
    pub fn dim(&self) -> usize {
        self.pre.classes().len() - 1
    }

    /// Face relation between cones of (skewed-partition) preorders:
    /// `σ̃_self ⊆ σ̃_other` as a face exactly when the preorder of `self`
    /// is a contraction of the preorder of `other`.  Both preorders must
    /// be representable by binary partitions.
    pub fn is_face_of(&self, other: &SlicedPreorderCone) -> bool {
        let Some(c) = partition_of_preposet(&self.pre) else {
            return false;
        };
        let Some(b) = partition_of_preposet(&other.pre) else {
            return false;
        };
        is_contraction(&c, &b)
    }

    /// A preorder cone is simplicial exactly when the preorder is a poset
    /// whose Hasse diagram is a tree.
    pub fn is_simplicial(&self) -> bool {
        if !self.pre.is_poset() {
            return false;
        }
        let n = self.n() as usize;
        let covers = self.pre.class_covers();
        if covers.len() != n {
            return false;
        }
        // n edges on n+1 vertices form a tree iff the graph is connected.
        let mut reached = alloc::vec![false; n + 1];
        let mut stack = alloc::vec![0usize];
        reached[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &covers {
                let (a, b) = (a as usize, b as usize);
                if a == v && !reached[b] {
                    reached[b] = true;
                    stack.push(b);
                } else if b == v && !reached[a] {
                    reached[a] = true;
                    stack.push(a);
                }
            }
        }
        reached.iter().all(|&r| r)
    }

    /// Decomposes the cone into the chain cones of the linear extensions
    /// of its quotient poset: total preorders refining `⪯` with the same
    /// equivalence classes.  Their union is the cone itself.
    pub fn chain_cones(&self) -> Vec<SlicedPreorderCone> {
        let classes = self.pre.classes();
        let reps: Vec<Element> = classes.iter().map(|c| c[0]).collect();
        let mut orders: Vec<Vec<usize>> = Vec::new();
        let mut remaining: Vec<usize> = (0..reps.len()).collect();
        let mut acc = Vec::new();
        self.class_extensions(&reps, &mut remaining, &mut acc, &mut orders);
        orders
            .into_iter()
            .map(|order| {
                let mut pairs = Vec::new();
                for c in &classes {
                    for &p in c {
                        for &q in c {
                            pairs.push((p, q));
                        }
                    }
                }
                for w in order.windows(2) {
                    pairs.push((reps[w[0]], reps[w[1]]));
                }
                SlicedPreorderCone::of_preposet(Preposet::from_pairs(self.n(), &pairs))
            })
            .collect()
    }

    fn class_extensions(
        &self,
        reps: &[Element],
        remaining: &mut Vec<usize>,
        acc: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if remaining.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..remaining.len() {
            let c = remaining[i];
            if remaining.iter().any(|&d| d != c && self.pre.lt(reps[d], reps[c])) {
                continue;
            }
            remaining.remove(i);
            acc.push(c);
            self.class_extensions(reps, remaining, acc, out);
            acc.pop();
            remaining.insert(i, c);
        }
    }
}

impl fmt::Display for SlicedPreorderCone {
    /// Blocks from bottom to top joined by ` <= `; `,` separates
    /// incomparable coordinates, `=` equivalent ones; the element 0 prints
    /// as `0`, every other `p` as `cp`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = partition_of_preposet(&self.pre)
            .expect("sliced preorder cones of the fan come from binary partitions");
        let mut first_block = true;
        for block in b.blocks() {
            if !first_block {
                write!(f, " <= ")?;
            }
            first_block = false;
            let sep = if block.is_homogeneous() { "=" } else { "," };
            let mut first = true;
            for &e in block.elements() {
                if !first {
                    write!(f, "{}", sep)?;
                }
                first = false;
                if e == 0 {
                    write!(f, "0")?;
                } else {
                    write!(f, "c{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// Dimension of the cone of any partition with the given type: the sum of
/// the plain entry sizes plus the number of starred entries.
pub fn dim_of_type(comp: &SkewedBinaryComposition) -> usize {
    comp.entries()
        .iter()
        .map(|e| match e.tag {
            Tag::Plain => e.size as usize,
            Tag::Circle => 0,
            Tag::Star => 1,
        })
        .sum()
}

/// Codimension of the same cone inside `ℝⁿ`: `|b₀|` plus the excess
/// `|b_i| − 1` over the starred entries.
pub fn codim_of_type(comp: &SkewedBinaryComposition) -> usize {
    comp.entries()
        .iter()
        .enumerate()
        .map(|(i, e)| match e.tag {
            Tag::Star => e.size as usize - 1,
            Tag::Circle => e.size as usize,
            Tag::Plain if i == 1 => e.size as usize,
            Tag::Plain => 0,
        })
        .sum()
}

/// Pretty form of a cone given directly by a partition.
pub fn cone_to_string(b: &SkewedBinaryPartition) -> String {
    alloc::format!("{}", SlicedPreorderCone::of_partition(b))
}
