//! The parking function polytope `PF(u)` itself: vertices, normal fan,
//! face poset, facet/ray descriptions, simplicity classification, and the
//! stellahedral coarsening.
//!
//! `PF(u)` is the convex hull of all u-parking functions for a
//! nondecreasing nonnegative `u ≠ 0`.  Its combinatorics depend on `u`
//! only through the *MD pair*: the multiplicity vector
//! `m = (m₀, m₁, …, m_ℓ)` counting zeros and repeats, and the data vector
//! `d = (d₁ < ⋯ < d_ℓ)` of distinct positive values.  Vertices correspond
//! to skewed binary partitions whose type lies in the set `Ω_m`, the full
//! face poset to the contraction-closed family `SBP(m)`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::cones::dim_of_type;
use crate::partitions::{
    partitions_of_type, Block, CompEntry, Element, SkewedBinaryComposition, SkewedBinaryPartition,
    Tag,
};
use crate::point::{LinearInequality, Point};
use crate::poly::{factorial, rational_to_string, Int, Rational};

/// Invalid input to a polytope-level constructor or operation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn err(msg: &str) -> InputError {
    InputError(String::from(msg))
}

/// The defining vector `u₁ ≤ ⋯ ≤ u_n` of nonnegative rationals, not all
/// zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UVector {
    entries: Vec<Rational>,
}

impl UVector {
    pub fn new(entries: Vec<Rational>) -> Result<Self, InputError> {
        if entries.is_empty() {
            return Err(err("u must have at least one entry"));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(err("u must be nondecreasing"));
        }
        if entries[0] < Rational::zero() {
            return Err(err("u must be nonnegative"));
        }
        if entries.last().unwrap().is_zero() {
            return Err(err("u must not be the zero vector"));
        }
        Ok(UVector { entries })
    }

    pub fn from_ints(entries: &[i64]) -> Result<Self, InputError> {
        UVector::new(entries.iter().map(|&e| crate::poly::rat_int(e)).collect())
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// The MD pair `(m, d)`: multiplicities of the distinct values of `u`
    /// (with `m₀` counting zeros) and the distinct positive values.
    pub fn md_pair(&self) -> MDPair {
        let mut m = vec![0u32];
        let mut d: Vec<Rational> = Vec::new();
        for e in &self.entries {
            if e.is_zero() {
                m[0] += 1;
            } else if d.last() == Some(e) {
                *m.last_mut().unwrap() += 1;
            } else {
                d.push(e.clone());
                m.push(1);
            }
        }
        MDPair::new(m, d).expect("MD pair of a valid u is valid")
    }
}

impl fmt::Display for UVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rational_to_string(e))?;
        }
        Ok(())
    }
}

/// The pair of a multiplicity vector `m = (m₀,…,m_ℓ)` and data vector
/// `d = (d₁ < ⋯ < d_ℓ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MDPair {
    m: Vec<u32>,
    d: Vec<Rational>,
}

impl MDPair {
    pub fn new(m: Vec<u32>, d: Vec<Rational>) -> Result<Self, InputError> {
        if m.len() < 2 {
            return Err(err("m must contain m_0 and at least one positive multiplicity"));
        }
        if m[1..].iter().any(|&x| x == 0) {
            return Err(err("multiplicities m_1,…,m_l must be positive"));
        }
        if d.len() != m.len() - 1 {
            return Err(err("d must have one entry per positive multiplicity"));
        }
        if d.iter().any(|x| *x <= Rational::zero()) {
            return Err(err("data values must be positive"));
        }
        if d.windows(2).any(|w| w[0] >= w[1]) {
            return Err(err("data values must be strictly increasing"));
        }
        Ok(MDPair { m, d })
    }

    pub fn m(&self) -> &[u32] {
        &self.m
    }

    pub fn d(&self) -> &[Rational] {
        &self.d
    }

    pub fn n(&self) -> u32 {
        self.m.iter().sum()
    }

    pub fn m0(&self) -> u32 {
        self.m[0]
    }

    pub fn ell(&self) -> usize {
        self.m.len() - 1
    }

    /// Reconstructs `u = (0^{m₀}, d₁^{m₁}, …, d_ℓ^{m_ℓ})`.
    pub fn u(&self) -> UVector {
        let mut entries = vec![Rational::zero(); self.m[0] as usize];
        for (i, di) in self.d.iter().enumerate() {
            for _ in 0..self.m[i + 1] {
                entries.push(di.clone());
            }
        }
        UVector::new(entries).expect("u of a valid MD pair is valid")
    }
}

/// The `r+1` vertex types `Ω_m` (with `r = n − m₀`), in the order
/// `a₀, a₁, …, a_r`.
pub fn omega(md: &MDPair) -> Vec<SkewedBinaryComposition> {
    let m = md.m();
    let ell = md.ell();
    let n = md.n();
    let m0 = m[0];
    let r = n - m0;
    let mut out = Vec::with_capacity(r as usize + 1);
    let mut a0 = if m0 > 0 {
        vec![
            CompEntry { size: m0, tag: Tag::Plain },
            CompEntry { size: 0, tag: Tag::Plain },
        ]
    } else {
        vec![
            CompEntry { size: 0, tag: Tag::Plain },
            CompEntry { size: 0, tag: Tag::Circle },
        ]
    };
    a0.extend((1..=ell).map(|s| CompEntry { size: m[s], tag: Tag::Plain }));
    out.push(SkewedBinaryComposition::new(a0).expect("a_0 is a valid composition"));
    // pref[g] = m_1 + … + m_g.
    let mut pref = vec![0u32; ell + 1];
    for g in 1..=ell {
        pref[g] = pref[g - 1] + m[g];
    }
    for i in 1..r {
        let g = (1..=ell).find(|&g| i < pref[g]).expect("i < r = pref[ell]");
        let mut a = vec![
            CompEntry { size: m0 + i, tag: Tag::Plain },
            CompEntry { size: 0, tag: Tag::Circle },
            CompEntry { size: pref[g] - i, tag: Tag::Plain },
        ];
        a.extend((g + 1..=ell).map(|s| CompEntry { size: m[s], tag: Tag::Plain }));
        out.push(SkewedBinaryComposition::new(a).expect("a_i is a valid composition"));
    }
    out.push(
        SkewedBinaryComposition::new(vec![
            CompEntry { size: n, tag: Tag::Plain },
            CompEntry { size: 0, tag: Tag::Circle },
        ])
        .expect("a_r is a valid composition"),
    );
    out
}

/// The vertex `v_B` of a partition with type in `Ω_m`: coordinates of
/// `B₋₁` vanish and block `B_j` receives the value `d_{ℓ−k+j}`.
pub fn vertex_of(b: &SkewedBinaryPartition, md: &MDPair) -> Result<Point, InputError> {
    if !omega(md).contains(&b.type_of()) {
        return Err(err("partition type does not lie in Omega_m"));
    }
    let n = md.n() as usize;
    let d = md.d();
    let k = b.rest_blocks().len();
    let mut coords = vec![Rational::zero(); n];
    for (j, blk) in b.rest_blocks().iter().enumerate() {
        let val = &d[d.len() - k + j];
        for &e in blk.elements() {
            coords[e as usize - 1] = val.clone();
        }
    }
    Ok(Point::new(coords))
}

/// All partitions with type in `Ω_m`: the maximal cones of the normal
/// fan, in bijection with the vertices.
pub fn maximal_partitions(md: &MDPair) -> Vec<SkewedBinaryPartition> {
    let mut out = Vec::new();
    for comp in omega(md) {
        out.extend(partitions_of_type(&comp));
    }
    out.sort();
    out
}

/// The vertex set of `PF(u)`, in lexicographic coordinate order.
pub fn vertices(md: &MDPair) -> Vec<Point> {
    let mut out: Vec<Point> = maximal_partitions(md)
        .iter()
        .map(|b| vertex_of(b, md).expect("maximal partitions have Omega types"))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Membership of a composition in `SBP(m)`: the three conditions of the
/// type characterization.
pub fn type_in_sbp(comp: &SkewedBinaryComposition, md: &MDPair) -> bool {
    let m = md.m();
    let ell = md.ell();
    let n = md.n();
    if comp.n() != n {
        return false;
    }
    let m0 = m[0];
    // mpref[i] = m_0 + … + m_i.
    let mut mpref = vec![m0; ell + 1];
    for i in 1..=ell {
        mpref[i] = mpref[i - 1] + m[i];
    }
    let head = comp.b_minus1().size + comp.b_zero().size;
    // (1) the head fits inside the zero multiplicity iff 0 sits in B_{-1}.
    let zero_in_pre = comp.b_zero().tag == Tag::Plain;
    if (head > 0 && head <= m0) != zero_in_pre {
        return false;
    }
    // (2) the first positive block reaches past the zeros…
    let first = comp.tail().first().map_or(0, |e| e.size);
    if m0 >= head + first {
        return false;
    }
    // …and every value class sandwiches at most one block.
    let mut sandwich_used = vec![false; ell + 1];
    let mut before = head;
    for e in comp.tail() {
        let after = before + e.size;
        let sandwich =
            (1..=ell).find(|&i| mpref[i - 1] <= before && after <= mpref[i]);
        match sandwich {
            Some(i) => {
                // (3) sandwiched blocks are plain.
                if e.tag != Tag::Plain {
                    return false;
                }
                if sandwich_used[i] {
                    return false;
                }
                sandwich_used[i] = true;
            }
            // (3) un-sandwiched blocks are starred.
            None => {
                if e.tag != Tag::Star {
                    return false;
                }
            }
        }
        before = after;
    }
    true
}

/// The full family `SBP(m)`: all skewed binary partitions whose type
/// passes the characterization (equivalently, all contractions of the
/// `Ω_m` partitions), in canonical order.
pub fn sbp_enumerate(md: &MDPair) -> Vec<SkewedBinaryPartition> {
    let mut out = Vec::new();
    for comp in SkewedBinaryComposition::enumerate(md.n()) {
        if type_in_sbp(&comp, md) {
            out.extend(partitions_of_type(&comp));
        }
    }
    out.sort();
    out
}

/// The face poset of `PF(m,d)`: nodes are the members of `SBP(m)` with
/// face dimension `n − dim σ̃_B`, cover pairs `(i, j)` mean face `i` is
/// covered by face `j`.
#[derive(Clone, Debug)]
pub struct FacePosetStructure {
    pub nodes: Vec<(SkewedBinaryPartition, usize)>,
    pub covers: Vec<(usize, usize)>,
}

pub fn face_poset(md: &MDPair) -> FacePosetStructure {
    let n = md.n() as usize;
    let mut nodes: Vec<(SkewedBinaryPartition, usize)> = sbp_enumerate(md)
        .into_iter()
        .map(|b| {
            let dim = n - dim_of_type(&b.type_of());
            (b, dim)
        })
        .collect();
    nodes.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let mut covers = Vec::new();
    for (i, (bi, di)) in nodes.iter().enumerate() {
        for (j, (bj, dj)) in nodes.iter().enumerate() {
            // Face inclusion reverses cone containment: face i is covered
            // by face j when partition j is covered by partition i in the
            // contraction order.
            if *dj == di + 1 && bj.is_covered_by(bi) {
                covers.push((i, j));
            }
        }
    }
    FacePosetStructure { nodes, covers }
}

/// The f-vector `(f₀, …, f_n)` counting faces by dimension (including the
/// polytope itself), computed from the type census of `SBP(m)`.
pub fn f_vector(md: &MDPair) -> Vec<Int> {
    let n = md.n();
    let mut f = vec![Int::from(0u32); n as usize + 1];
    for comp in SkewedBinaryComposition::enumerate(n) {
        if !type_in_sbp(&comp, md) {
            continue;
        }
        let dim = n as usize - dim_of_type(&comp);
        let mut count = factorial(n as u64);
        for e in comp.entries() {
            count /= factorial(e.size as u64);
        }
        f[dim] += count;
    }
    f
}

/// The set of subset sizes `|I|` whose inequalities `Σ_{i∈I} x_i ≤ w(|I|)`
/// are facets; identical to the ray size classes of the normal fan.
pub fn facet_sizes(md: &MDPair) -> BTreeSet<u32> {
    let n = md.n();
    let m0 = md.m0();
    let ell = md.ell();
    let m_ell = md.m()[ell];
    let mut s = BTreeSet::new();
    if m0 == 0 && ell == 1 {
        s.insert(1);
    } else if m0 == n - 1 {
        s.insert(n);
    } else if ell == 1 {
        s.insert(1);
        s.insert(n);
    } else {
        s.insert(1);
        s.insert(n);
        for k in m_ell + 1..=n - m0 - 1 {
            s.insert(k);
        }
    }
    s
}

/// Sum of the `k` largest entries of `u` — the right-hand side of the
/// size-`k` subset inequalities (the polymatroid rank of any `k`-set).
pub fn upper_bound(u: &UVector, k: usize) -> Rational {
    let n = u.n();
    let mut acc = Rational::zero();
    for j in 0..k {
        acc += &u.entries()[n - 1 - j];
    }
    acc
}

/// The full (redundant) inequality description of `PF(u)`: the `n`
/// nonnegativity facets `−x_i ≤ 0`, then `Σ_{i∈I} x_i ≤ w(|I|)` for every
/// nonempty `I ⊆ [n]` ordered by (size, index set), with facet flags.
pub fn inequality_description(u: &UVector) -> Vec<LinearInequality> {
    let n = u.n();
    assert!(n <= 24, "inequality description is exponential in n");
    let sizes = facet_sizes(&u.md_pair());
    let mut out = Vec::new();
    for i in 0..n {
        let mut coeffs = vec![Rational::zero(); n];
        coeffs[i] = -Rational::one();
        out.push(LinearInequality::new(coeffs, Rational::zero(), true));
    }
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|&x| (x.count_ones(), x));
    for mask in masks {
        let k = mask.count_ones();
        let mut coeffs = vec![Rational::zero(); n];
        for i in 0..n {
            if mask & (1 << i) != 0 {
                coeffs[i] = Rational::one();
            }
        }
        out.push(LinearInequality::new(coeffs, upper_bound(u, k as usize), sizes.contains(&k)));
    }
    out
}

/// The irredundant facet list of `PF(u)`.
pub fn facets(u: &UVector) -> Vec<LinearInequality> {
    inequality_description(u).into_iter().filter(|q| q.facet).collect()
}

/// Ray generators of the normal fan: `−e_i` for every `i`, then the
/// indicator vectors `e_I` for `|I|` in the facet size set.
pub fn rays(md: &MDPair) -> Vec<Point> {
    let n = md.n() as usize;
    let sizes = facet_sizes(md);
    let mut out = Vec::new();
    for i in 0..n {
        let mut coords = vec![Rational::zero(); n];
        coords[i] = -Rational::one();
        out.push(Point::new(coords));
    }
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|&x| (x.count_ones(), x));
    for mask in masks {
        if !sizes.contains(&mask.count_ones()) {
            continue;
        }
        let mut coords = vec![Rational::zero(); n];
        for i in 0..n {
            if mask & (1 << i) != 0 {
                coords[i] = Rational::one();
            }
        }
        out.push(Point::new(coords));
    }
    out
}

/// `PF(m,d)` is simple exactly for the cube, the simplex, and the
/// multiplicity vectors whose middle multiplicities are all 1.
pub fn is_simple(md: &MDPair) -> bool {
    let n = md.n();
    let m = md.m();
    let ell = md.ell();
    if (md.m0() == 0 && ell == 1) || md.m0() == n - 1 {
        return true;
    }
    ell >= 2 && (1..ell).all(|i| m[i] == 1)
}

/// `PF(m,d)` is simplicial exactly when `n ≤ 2` or it is the simplex.
pub fn is_simplicial_polytope(md: &MDPair) -> bool {
    md.n() <= 2 || md.m0() == md.n() - 1
}

/// Finds a maximal cone of the normal fan containing `c = (c₁,…,c_n)`:
/// the normal-fan dissection of `ℝⁿ`.  The returned partition has type in
/// `Ω_m` and `c ∈ σ̃_B` (closed); for generic `c` it is the unique one.
pub fn locate_vertex(md: &MDPair, c: &[Rational]) -> SkewedBinaryPartition {
    let n = md.n() as usize;
    assert_eq!(c.len(), n, "dimension mismatch");
    let m = md.m();
    let ell = md.ell();
    let m0 = m[0] as usize;
    // Labels 1..n sorted by (value, label).
    let mut labels: Vec<Element> = (1..=n as Element).collect();
    labels.sort_by(|&a, &b| {
        c[a as usize - 1].cmp(&c[b as usize - 1]).then(a.cmp(&b))
    });
    // tpref[s] = m_0 + … + m_s.
    let mut tpref = vec![m0; ell + 1];
    for s in 1..=ell {
        tpref[s] = tpref[s - 1] + m[s] as usize;
    }
    let zero = Rational::zero();
    let first_pos = labels.iter().position(|&p| c[p as usize - 1] > zero);
    let block = |lo: usize, hi: usize| -> Block {
        // Sorted-position range [lo, hi) as a non-homogeneous block.
        Block::new(labels[lo..hi].to_vec(), false).expect("nonempty label range")
    };
    let partition = match first_pos {
        // No positive coordinate: type (n, 0°).
        None => SkewedBinaryPartition::new(
            Block::new(labels.clone(), false).expect("nonempty"),
            Block::new(vec![0], false).expect("singleton"),
            vec![],
        ),
        Some(pos) if pos <= m0 => {
            // Type a_0: zeros (and 0 itself) incomparable at the bottom.
            let (pre, zb) = if m0 > 0 {
                let mut els = vec![0];
                els.extend_from_slice(&labels[..m0]);
                (Block::new(els, false).expect("nonempty"), Block::empty())
            } else {
                (Block::empty(), Block::new(vec![0], false).expect("singleton"))
            };
            let rest: Vec<Block> =
                (1..=ell).map(|s| block(tpref[s - 1], tpref[s])).collect();
            SkewedBinaryPartition::new(pre, zb, rest)
        }
        Some(pos) => {
            // Type a_i with i = pos − m_0 ≥ 1: the first pos labels fall
            // below 0, the rest follow the multiplicity blocks.
            let g = (1..=ell).find(|&s| pos < tpref[s]).expect("pos < n");
            let mut rest = vec![block(pos, tpref[g])];
            rest.extend((g + 1..=ell).map(|s| block(tpref[s - 1], tpref[s])));
            SkewedBinaryPartition::new(
                block(0, pos),
                Block::new(vec![0], false).expect("singleton"),
                rest,
            )
        }
    };
    partition.expect("dissection cases produce valid partitions")
}

fn permutations(els: &[Element]) -> Vec<Vec<Element>> {
    if els.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (i, &e) in els.iter().enumerate() {
        let mut rest: Vec<Element> = els.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, e);
            out.push(tail);
        }
    }
    out
}

fn refinement_case_i(
    pre: &Block,
    tail: &[Block],
    out: &mut Vec<SkewedBinaryPartition>,
) {
    // Split every positive block into a chain of singletons, in all
    // possible orders, keeping the block order.
    let per_block: Vec<Vec<Vec<Element>>> =
        tail.iter().map(|b| permutations(b.elements())).collect();
    let mut choice = vec![0usize; per_block.len()];
    loop {
        let mut rest = Vec::new();
        for (b, &c) in per_block.iter().zip(&choice) {
            for &e in &b[c] {
                rest.push(Block::new(vec![e], false).expect("singleton"));
            }
        }
        out.push(
            SkewedBinaryPartition::new(
                pre.clone(),
                Block::new(vec![0], false).expect("singleton"),
                rest,
            )
            .expect("refinement piece is valid"),
        );
        // Advance the mixed-radix choice vector.
        let mut k = 0;
        loop {
            if k == per_block.len() {
                return;
            }
            choice[k] += 1;
            if choice[k] < per_block[k].len() {
                break;
            }
            choice[k] = 0;
            k += 1;
        }
    }
}

/// The stellahedral cones refining a maximal cone `σ̃_B` of the normal
/// fan: full-dimensional cones of the stellahedron fan whose union is
/// `σ̃_B`.  `B` must have non-homogeneous blocks only and `B₀ ⊆ {0}` (as
/// every `Ω_m` partition does).
pub fn stellahedral_refinement(b: &SkewedBinaryPartition) -> Vec<SkewedBinaryPartition> {
    assert!(
        b.rest_blocks().iter().all(|blk| !blk.is_homogeneous()) && b.zero_block().len() <= 1,
        "refinement applies to maximal (vertex) cones only"
    );
    let mut out = Vec::new();
    if b.zero_block().contains(0) {
        refinement_case_i(b.pre_block(), b.rest_blocks(), &mut out);
    } else {
        // 0 ∈ B₋₁: choose which of the other bottom elements stay below 0.
        let others: Vec<Element> =
            b.pre_block().elements().iter().copied().filter(|&e| e != 0).collect();
        for mask in 0u32..(1 << others.len()) {
            let stay: Vec<Element> = others
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            let moved: Vec<Element> = others
                .iter()
                .copied()
                .filter(|e| !stay.contains(e))
                .collect();
            let pre = if stay.is_empty() {
                Block::empty()
            } else {
                Block::new(stay, false).expect("nonempty")
            };
            let mut tail = Vec::new();
            if !moved.is_empty() {
                tail.push(Block::new(moved, false).expect("nonempty"));
            }
            tail.extend(b.rest_blocks().iter().cloned());
            refinement_case_i(&pre, &tail, &mut out);
        }
    }
    out.sort();
    out
}

/// All multiplicity vectors of magnitude `n` (there are `2ⁿ − 1`): every
/// `m₀ ∈ [0, n−1]` with a composition of `n − m₀` into positive parts.
pub fn all_multiplicity_vectors(n: u32) -> Vec<Vec<u32>> {
    fn compositions(n: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for k in 1..=n {
            acc.push(k);
            compositions(n - k, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for m0 in 0..n {
        let mut tails = Vec::new();
        compositions(n - m0, &mut vec![], &mut tails);
        for tail in tails {
            let mut m = vec![m0];
            m.extend(tail);
            out.push(m);
        }
    }
    out
}

/// The MD pair with multiplicity vector `m` and data `d = (1, 2, …, ℓ)` —
/// a canonical representative of each combinatorial type.
pub fn md_with_unit_data(m: &[u32]) -> MDPair {
    let d = (1..m.len() as i64).map(crate::poly::rat_int).collect();
    MDPair::new(m.to_vec(), d).expect("valid multiplicity vector")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_skewed_partition;
    use crate::poly::{rat, rat_int};
    use alloc::string::ToString;

    fn md(u: &[i64]) -> MDPair {
        UVector::from_ints(u).unwrap().md_pair()
    }

    fn comp_strings(v: &[SkewedBinaryComposition]) -> Vec<String> {
        v.iter().map(|c| c.to_string()).collect()
    }

    #[test]
    fn u_validation() {
        assert!(UVector::from_ints(&[2, 1]).is_err());
        assert!(UVector::from_ints(&[0, 0]).is_err());
        assert!(UVector::from_ints(&[-1, 1]).is_err());
        assert!(UVector::new(vec![rat(1, 2), rat(1, 2)]).is_ok());
    }

    #[test]
    fn md_pair_examples() {
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        assert_eq!(p.m(), &[2, 3, 1, 2]);
        assert_eq!(p.d(), &[rat_int(4), rat_int(6), rat_int(8)]);
        let q = md(&[5, 5, 5]);
        assert_eq!(q.m(), &[0, 3]);
        assert_eq!(q.d(), &[rat_int(5)]);
        let r = md(&[0, 0, 0, 7]);
        assert_eq!(r.m(), &[3, 1]);
        // Round trip.
        assert_eq!(p.u().entries(), md(&[0, 0, 4, 4, 4, 6, 8, 8]).u().entries());
        assert_eq!(p.n(), 8);
        assert_eq!(p.ell(), 3);
    }

    #[test]
    fn omega_example() {
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        assert_eq!(
            comp_strings(&omega(&p)),
            ["2,0,3,1,2", "3,0o,2,1,2", "4,0o,1,1,2", "5,0o,1,2", "6,0o,2", "7,0o,1", "8,0o"]
        );
        // m = (0,3,5): r = 8, so 9 types, starting from (0,0°,3,5).
        let q = md_with_unit_data(&[0, 3, 5]);
        let om = omega(&q);
        assert_eq!(om.len(), 9);
        assert_eq!(om[0].to_string(), "0,0o,3,5");
        assert_eq!(om[8].to_string(), "8,0o");
        // m = (n−1, 1): just the simplex apex types.
        let s = md(&[0, 0, 0, 7]);
        assert_eq!(comp_strings(&omega(&s)), ["3,0,1", "4,0o"]);
    }

    #[test]
    fn vertex_examples() {
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        let b = parse_skewed_partition("({0,2,3},{},{1,6,7},{8},{4,5})").unwrap();
        assert_eq!(vertex_of(&b, &p).unwrap(), Point::from_ints(&[4, 0, 0, 8, 8, 4, 4, 6]));
        let c = parse_skewed_partition("({1,3,4,5,8},{0},{2},{6,7})").unwrap();
        assert_eq!(vertex_of(&c, &p).unwrap(), Point::from_ints(&[0, 6, 0, 0, 0, 8, 8, 0]));
        // Standard partition of a type yields the tail of u.
        let std = crate::partitions::standard_of_type(
            &crate::partitions::parse_composition("5,0o,1,2").unwrap(),
        )
        .unwrap();
        assert_eq!(vertex_of(&std, &p).unwrap(), Point::from_ints(&[0, 0, 0, 0, 0, 6, 8, 8]));
        // A non-Omega type is rejected.
        let bad = parse_skewed_partition("({},{0,1,2,3,4,5,6,7,8}*)").unwrap();
        assert!(vertex_of(&bad, &p).is_err());
    }

    #[test]
    fn small_vertex_sets() {
        // Pentagon PF(1,2).
        let pent = vertices(&md(&[1, 2]));
        let expect: Vec<Point> = [[0, 0], [0, 2], [1, 2], [2, 0], [2, 1]]
            .iter()
            .map(|c| Point::from_ints(c))
            .collect();
        assert_eq!(pent, expect);
        // Square PF(d,d) and simplex PF(0,0,d).
        assert_eq!(vertices(&md(&[2, 2])).len(), 4);
        assert_eq!(vertices(&md(&[0, 0, 3])).len(), 4);
    }

    #[test]
    fn sbp_contains_contraction_chain() {
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        for t in [
            "2,0,3,1,2",
            "2,0,2,2*,2",
            "2,1o,1,2*,2",
            "1,2o,1,2*,2",
            "1,2o,3*,2",
            "1,2o,4*,1",
            "1,6o,1",
            "0,7o,1",
            "0,8o",
        ] {
            let comp = crate::partitions::parse_composition(t).unwrap();
            assert!(type_in_sbp(&comp, &p), "{}", t);
        }
        assert!(!type_in_sbp(&crate::partitions::parse_composition("1,0,7").unwrap(), &p));
    }

    #[test]
    fn sbp_is_contraction_closed() {
        for m in all_multiplicity_vectors(3) {
            let p = md_with_unit_data(&m);
            let family: BTreeSet<_> = sbp_enumerate(&p).into_iter().collect();
            // SBP(m) is exactly the union of contraction down-sets of the
            // Omega partitions.
            let mut reachable = BTreeSet::new();
            for b in maximal_partitions(&p) {
                reachable.extend(b.all_contractions());
            }
            assert_eq!(family, reachable, "m = {:?}", m);
        }
    }

    #[test]
    fn f_vectors_n2() {
        assert_eq!(f_vector(&md(&[2, 2])), [4, 4, 1].map(Int::from));
        assert_eq!(f_vector(&md(&[0, 3])), [3, 3, 1].map(Int::from));
        assert_eq!(f_vector(&md(&[1, 2])), [5, 5, 1].map(Int::from));
    }

    #[test]
    fn face_poset_shape() {
        let fp = face_poset(&md(&[1, 2]));
        // Pentagon: 5 vertices, 5 edges, 1 polygon.
        assert_eq!(fp.nodes.iter().filter(|(_, d)| *d == 0).count(), 5);
        assert_eq!(fp.nodes.iter().filter(|(_, d)| *d == 1).count(), 5);
        assert_eq!(fp.nodes.iter().filter(|(_, d)| *d == 2).count(), 1);
        // Every edge covers exactly two vertices.
        for (i, (_, d)) in fp.nodes.iter().enumerate() {
            if *d == 1 {
                let below = fp.covers.iter().filter(|&&(a, b)| b == i && fp.nodes[a].1 == 0);
                assert_eq!(below.count(), 2);
            }
        }
        assert_eq!(fp.covers.len(), 10 + 5);
    }

    #[test]
    fn facet_size_cases() {
        assert_eq!(facet_sizes(&md(&[2, 2])).into_iter().collect::<Vec<_>>(), [1]);
        assert_eq!(facet_sizes(&md(&[0, 0, 3])).into_iter().collect::<Vec<_>>(), [3]);
        assert_eq!(facet_sizes(&md(&[0, 2, 2])).into_iter().collect::<Vec<_>>(), [1, 3]);
        assert_eq!(facet_sizes(&md(&[0, 1, 2])).into_iter().collect::<Vec<_>>(), [1, 3]);
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        assert_eq!(facet_sizes(&p).into_iter().collect::<Vec<_>>(), [1, 3, 4, 5, 8]);
    }

    #[test]
    fn facet_counts() {
        // Cube: 2n facets.
        assert_eq!(facets(&UVector::from_ints(&[2, 2, 2]).unwrap()).len(), 6);
        // Simplex: n+1 facets.
        assert_eq!(facets(&UVector::from_ints(&[0, 0, 3]).unwrap()).len(), 4);
        // PF(0,1,2): 7 facets.
        let f = facets(&UVector::from_ints(&[0, 1, 2]).unwrap());
        assert_eq!(f.len(), 7);
        // Rays mirror the facets.
        assert_eq!(rays(&md(&[0, 1, 2])).len(), 7);
        // Segment: rays −e₁ and e₁.
        let r = rays(&md(&[1]));
        assert_eq!(r, vec![Point::from_ints(&[-1]), Point::from_ints(&[1])]);
    }

    #[test]
    fn classification() {
        assert!(is_simple(&md(&[2, 2])));
        assert!(is_simple(&md(&[0, 0, 3])));
        assert!(is_simple(&md(&[1, 2])));
        assert!(is_simple(&md(&[1, 2, 3])));
        assert!(!is_simple(&md(&[0, 0, 4, 4, 4, 6, 8, 8])));
        assert!(!is_simple(&md(&[0, 0, 3, 3])));
        assert!(is_simplicial_polytope(&md(&[1, 2])));
        assert!(is_simplicial_polytope(&md(&[0, 0, 3])));
        assert!(!is_simplicial_polytope(&md(&[2, 2, 2])));
    }

    #[test]
    fn locate_interior_point() {
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        // Interior of the cone 0,c2,c3 <= c1,c6,c7 <= c8 <= c4,c5.
        let c: Vec<Rational> =
            [1, -2, -3, 9, 8, 1, 1, 5].iter().map(|&x| rat_int(x)).collect();
        let b = locate_vertex(&p, &c);
        assert_eq!(b.to_string(), "({0,2,3},{},{1,6,7},{8},{4,5})");
        // All coordinates nonpositive: bottom type (n,0°).
        let neg: Vec<Rational> = (0..8).map(|i| rat_int(-1 - i)).collect();
        assert_eq!(locate_vertex(&p, &neg).type_of().to_string(), "8,0o");
        // The origin lies in every maximal cone; the returned one is closed-valid.
        let zero: Vec<Rational> = (0..8).map(|_| rat_int(0)).collect();
        let at0 = locate_vertex(&p, &zero);
        assert!(crate::cones::SlicedPreorderCone::of_partition(&at0)
            .contains(&zero, crate::cones::Region::Closed));
    }

    #[test]
    fn refinement_counts() {
        // Case (i): piece count is the product of the block factorials.
        let b = parse_skewed_partition("({1,2},{0},{3,4,5},{6,7})").unwrap();
        assert_eq!(stellahedral_refinement(&b).len(), 6 * 2);
        // A partition already of stellahedral singleton type is fixed.
        let s = parse_skewed_partition("({1,2},{0},{3},{4})").unwrap();
        assert_eq!(stellahedral_refinement(&s), vec![s]);
        // Total piece count over all maximal cones equals the number of
        // maximal stellahedral cones, Σ_k n!/k!.
        for n in 1..=4u32 {
            let expect: u64 = (0..=n as u64)
                .map(|k| {
                    let mut f = 1u64;
                    for j in k + 1..=n as u64 {
                        f *= j;
                    }
                    f
                })
                .sum();
            for m in all_multiplicity_vectors(n) {
                let p = md_with_unit_data(&m);
                let total: usize = maximal_partitions(&p)
                    .iter()
                    .map(|b| stellahedral_refinement(b).len())
                    .sum();
                assert_eq!(total as u64, expect, "m = {:?}", m);
            }
        }
    }

    #[test]
    fn multiplicity_census() {
        assert_eq!(all_multiplicity_vectors(3).len(), 7);
        assert_eq!(all_multiplicity_vectors(5).len(), 31);
    }

    #[test]
    fn vertex_count_bijection() {
        // 4405 vertices of the running example; the multinomial census.
        let p = md(&[0, 0, 4, 4, 4, 6, 8, 8]);
        assert_eq!(vertices(&p).len(), 4405);
    }
}
