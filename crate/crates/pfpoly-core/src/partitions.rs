//! Binary partitions, skewed binary partitions and compositions, their
//! preposets, and the contraction relation.
//!
//! A *binary partition* of `[0,n]` is an ordered list of disjoint nonempty
//! blocks covering `{0,…,n}`, each block either *homogeneous* (written with
//! a trailing `*`; all its elements are equivalent) or *non-homogeneous*
//! (its elements are incomparable).  Singleton blocks are always
//! non-homogeneous.  The partition induces a preorder: elements of earlier
//! blocks are below elements of later blocks.
//!
//! A *skewed binary partition* `(B₋₁, B₀, B₁, …, B_k)` additionally fixes
//! where the element 0 lives: either in `B₀` (a homogeneous block when it
//! has at least two elements) or in `B₋₁` (non-homogeneous, size at least
//! two, with `B₀` empty).  Its *type* is the skewed binary composition
//! recording block sizes and flags.
//!
//! Coarsening one preorder into another by collapsing Hasse edges is the
//! *contraction* relation; it is decided here purely combinatorially via a
//! bipartite graph on the blocks of the two partitions.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An element of the ground set `[0,n] = {0,…,n}`.
pub type Element = u32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionError {
    /// A singleton (or empty) block cannot be homogeneous.
    HomogeneousSingleton,
    /// Binary partitions consist of nonempty blocks only.
    EmptyBlock,
    /// Elements repeated or not exactly `{0,…,n}`.
    NotAPartition,
    /// A skewed-partition structural condition failed.
    SkewCondition(&'static str),
    /// A skewed binary composition constraint failed.
    MalformedComposition(&'static str),
    /// The requested pair is not a cover edge of the preposet.
    NotACoverEdge,
    /// The preorder is not representable by a (skewed) binary partition.
    NotRepresentable,
    /// Two partitions live on different ground sets.
    GroundSetMismatch,
    /// Text input could not be parsed.
    Parse(String),
}

impl fmt::Display for PartitionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartitionError::HomogeneousSingleton => {
                write!(f, "blocks with fewer than two elements cannot be homogeneous")
            }
            PartitionError::EmptyBlock => write!(f, "binary partitions cannot contain empty blocks"),
            PartitionError::NotAPartition => {
                write!(f, "blocks must be disjoint and cover 0..=n exactly")
            }
            PartitionError::SkewCondition(s) => write!(f, "invalid skewed binary partition: {}", s),
            PartitionError::MalformedComposition(s) => {
                write!(f, "invalid skewed binary composition: {}", s)
            }
            PartitionError::NotACoverEdge => write!(f, "not a cover edge of the preposet"),
            PartitionError::NotRepresentable => {
                write!(f, "preorder is not representable by a skewed binary partition")
            }
            PartitionError::GroundSetMismatch => write!(f, "partitions have different ground sets"),
            PartitionError::Parse(s) => write!(f, "parse error: {}", s),
        }
    }
}

/// A block of a (skewed) binary partition: a sorted element set plus the
/// homogeneity flag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Block {
    elements: Vec<Element>,
    homogeneous: bool,
}

impl Block {
    pub fn new(mut elements: Vec<Element>, homogeneous: bool) -> Result<Self, PartitionError> {
        elements.sort_unstable();
        if elements.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::NotAPartition);
        }
        if homogeneous && elements.len() < 2 {
            return Err(PartitionError::HomogeneousSingleton);
        }
        Ok(Block { elements, homogeneous })
    }

    pub fn empty() -> Self {
        Block { elements: Vec::new(), homogeneous: false }
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    fn fmt_into(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e)?;
        }
        write!(f, "}}")?;
        if self.homogeneous {
            write!(f, "*")?;
        }
        Ok(())
    }
}

/// An ordered binary partition of `[0,n]` into nonempty blocks.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BinaryPartition {
    blocks: Vec<Block>,
    n: Element,
}

impl BinaryPartition {
    pub fn new(blocks: Vec<Block>) -> Result<Self, PartitionError> {
        if blocks.iter().any(Block::is_empty) {
            return Err(PartitionError::EmptyBlock);
        }
        let n = check_cover(blocks.iter())?;
        Ok(BinaryPartition { blocks, n })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn n(&self) -> Element {
        self.n
    }

    /// Index of the block containing `e`.
    pub fn block_of(&self, e: Element) -> usize {
        self.blocks
            .iter()
            .position(|b| b.contains(e))
            .expect("element outside ground set")
    }

    /// The preorder induced by the block order: `p ⪯ q` when the block of
    /// `p` is earlier than the block of `q`, with equivalence inside
    /// homogeneous blocks.
    pub fn preposet(&self) -> Preposet {
        let n = self.n;
        let mut pre = Preposet::discrete(n);
        let mut level = vec![0usize; n as usize + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b.elements() {
                level[e as usize] = i;
            }
            if b.is_homogeneous() {
                for &p in b.elements() {
                    for &q in b.elements() {
                        pre.set(p, q);
                    }
                }
            }
        }
        for p in 0..=n {
            for q in 0..=n {
                if level[p as usize] < level[q as usize] {
                    pre.set(p, q);
                }
            }
        }
        // The relation is transitive by construction; no closure needed.
        pre
    }
}

impl fmt::Display for BinaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            b.fmt_into(f)?;
        }
        write!(f, ")")
    }
}

fn check_cover<'a>(blocks: impl Iterator<Item = &'a Block>) -> Result<Element, PartitionError> {
    let mut seen = BTreeSet::new();
    let mut count = 0usize;
    for b in blocks {
        for &e in b.elements() {
            if !seen.insert(e) {
                return Err(PartitionError::NotAPartition);
            }
            count += 1;
        }
    }
    if count == 0 || *seen.iter().next_back().unwrap() as usize != count - 1 {
        return Err(PartitionError::NotAPartition);
    }
    Ok((count - 1) as Element)
}

/// A skewed binary partition `(B₋₁, B₀, B₁, …, B_k)` of `[0,n]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewedBinaryPartition {
    pre: Block,
    zero: Block,
    rest: Vec<Block>,
    n: Element,
}

impl SkewedBinaryPartition {
    pub fn new(pre: Block, zero: Block, rest: Vec<Block>) -> Result<Self, PartitionError> {
        if pre.is_homogeneous() {
            return Err(PartitionError::SkewCondition("B_{-1} must be non-homogeneous"));
        }
        if zero.len() >= 2 && !zero.is_homogeneous() {
            return Err(PartitionError::SkewCondition(
                "B_0 must be homogeneous when it has at least two elements",
            ));
        }
        let zero_in_pre = pre.contains(0);
        let zero_in_zero = zero.contains(0);
        if !zero_in_pre && !zero_in_zero {
            return Err(PartitionError::SkewCondition("0 must lie in B_{-1} or B_0"));
        }
        if zero_in_pre && (pre.len() < 2 || !zero.is_empty()) {
            return Err(PartitionError::SkewCondition(
                "when 0 is in B_{-1}, B_{-1} has at least two elements and B_0 is empty",
            ));
        }
        if !zero.is_empty() && !zero_in_zero {
            return Err(PartitionError::SkewCondition("a nonempty B_0 must contain 0"));
        }
        if rest.iter().any(Block::is_empty) {
            return Err(PartitionError::SkewCondition("blocks B_1,…,B_k must be nonempty"));
        }
        let n = check_cover([&pre, &zero].into_iter().chain(rest.iter()))?;
        Ok(SkewedBinaryPartition { pre, zero, rest, n })
    }

    pub fn pre_block(&self) -> &Block {
        &self.pre
    }

    pub fn zero_block(&self) -> &Block {
        &self.zero
    }

    pub fn rest_blocks(&self) -> &[Block] {
        &self.rest
    }

    pub fn n(&self) -> Element {
        self.n
    }

    /// The underlying binary partition with empty slots removed.
    pub fn hat(&self) -> BinaryPartition {
        let mut blocks = Vec::with_capacity(self.rest.len() + 2);
        if !self.pre.is_empty() {
            blocks.push(self.pre.clone());
        }
        if !self.zero.is_empty() {
            blocks.push(self.zero.clone());
        }
        blocks.extend(self.rest.iter().cloned());
        BinaryPartition::new(blocks).expect("hat of a valid skewed partition is valid")
    }

    /// Re-reads a binary partition as a skewed one.  Possible exactly when
    /// 0 lies in the first block, or in the second block with the first
    /// non-homogeneous and the second homogeneous-or-singleton.
    pub fn from_binary(b: &BinaryPartition) -> Result<Self, PartitionError> {
        let blocks = b.blocks();
        let first = &blocks[0];
        if first.contains(0) {
            if first.len() == 1 || first.is_homogeneous() {
                return SkewedBinaryPartition::new(
                    Block::empty(),
                    first.clone(),
                    blocks[1..].to_vec(),
                );
            }
            return SkewedBinaryPartition::new(first.clone(), Block::empty(), blocks[1..].to_vec());
        }
        if blocks.len() >= 2 && blocks[1].contains(0) {
            let second = &blocks[1];
            if !first.is_homogeneous() && (second.len() == 1 || second.is_homogeneous()) {
                return SkewedBinaryPartition::new(
                    first.clone(),
                    second.clone(),
                    blocks[2..].to_vec(),
                );
            }
        }
        Err(PartitionError::NotRepresentable)
    }

    /// The type of the partition as a skewed binary composition.
    pub fn type_of(&self) -> SkewedBinaryComposition {
        let mut entries = Vec::with_capacity(self.rest.len() + 2);
        if self.pre.contains(0) {
            entries.push(CompEntry { size: self.pre.len() as u32 - 1, tag: Tag::Plain });
            entries.push(CompEntry { size: 0, tag: Tag::Plain });
        } else {
            entries.push(CompEntry { size: self.pre.len() as u32, tag: Tag::Plain });
            entries.push(CompEntry { size: self.zero.len() as u32 - 1, tag: Tag::Circle });
        }
        for b in &self.rest {
            entries.push(CompEntry {
                size: b.len() as u32,
                tag: if b.is_homogeneous() { Tag::Star } else { Tag::Plain },
            });
        }
        SkewedBinaryComposition::new(entries).expect("type of a valid partition is valid")
    }

    pub fn preposet(&self) -> Preposet {
        self.hat().preposet()
    }

    /// Class-level cover edges of the preposet, as pairs of class
    /// representatives (minimum elements), lower class first.
    pub fn cover_edges(&self) -> Vec<(Element, Element)> {
        let hat = self.hat();
        let reps = |b: &Block| -> Vec<Element> {
            if b.is_homogeneous() {
                vec![b.elements()[0]]
            } else {
                b.elements().to_vec()
            }
        };
        let mut out = Vec::new();
        for w in hat.blocks().windows(2) {
            for &g in &reps(&w[0]) {
                for &h in &reps(&w[1]) {
                    out.push((g, h));
                }
            }
        }
        out
    }

    /// Element-level Hasse edges `(p, q)` with `p` directly below `q`;
    /// these are all pairs between consecutive blocks.
    pub fn hasse_pairs(&self) -> Vec<(Element, Element)> {
        let hat = self.hat();
        let mut out = Vec::new();
        for w in hat.blocks().windows(2) {
            for &p in w[0].elements() {
                for &q in w[1].elements() {
                    out.push((p, q));
                }
            }
        }
        out
    }

    /// Contracts the cover edge between the class of `g` and the class of
    /// `h` (the class of `g` directly below the class of `h`), returning
    /// the resulting skewed binary partition.
    pub fn contract_edge(&self, g: Element, h: Element) -> Result<Self, PartitionError> {
        let hat = self.hat();
        let blocks = hat.blocks();
        let bi = blocks
            .iter()
            .position(|b| b.contains(g))
            .ok_or(PartitionError::NotACoverEdge)?;
        if bi + 1 >= blocks.len() || !blocks[bi + 1].contains(h) {
            return Err(PartitionError::NotACoverEdge);
        }
        let class_of = |b: &Block, e: Element| -> Vec<Element> {
            if b.is_homogeneous() {
                b.elements().to_vec()
            } else {
                vec![e]
            }
        };
        let g_class = class_of(&blocks[bi], g);
        let h_class = class_of(&blocks[bi + 1], h);
        let minus = |b: &Block, class: &[Element]| -> Vec<Element> {
            b.elements().iter().copied().filter(|e| !class.contains(e)).collect()
        };
        let x = minus(&blocks[bi], &g_class);
        let y = minus(&blocks[bi + 1], &h_class);
        let mut new_blocks: Vec<Block> = blocks[..bi].to_vec();
        if !x.is_empty() {
            new_blocks.push(Block::new(x, false)?);
        }
        let mut merged = g_class;
        merged.extend(h_class);
        new_blocks.push(Block::new(merged, true)?);
        if !y.is_empty() {
            new_blocks.push(Block::new(y, false)?);
        }
        new_blocks.extend_from_slice(&blocks[bi + 2..]);
        SkewedBinaryPartition::from_binary(&BinaryPartition::new(new_blocks)?)
    }

    /// All contractions of `self` (its down-set in the contraction order),
    /// including `self`, computed by closure over single-edge contractions.
    pub fn all_contractions(&self) -> BTreeSet<SkewedBinaryPartition> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![self.clone()];
        seen.insert(self.clone());
        while let Some(b) = stack.pop() {
            for (g, h) in b.cover_edges() {
                let c = b
                    .contract_edge(g, h)
                    .expect("cover edges of a skewed partition always contract");
                if seen.insert(c.clone()) {
                    stack.push(c);
                }
            }
        }
        seen
    }

    /// True if `self` is a contraction of `b` (i.e. the face relation
    /// `σ̃_self ⊆ σ̃_b` holds between the associated cones).
    pub fn is_contraction_of(&self, b: &SkewedBinaryPartition) -> bool {
        is_contraction(&self.hat(), &b.hat())
    }

    /// True if `b` covers `self` in the contraction order.
    pub fn is_covered_by(&self, b: &SkewedBinaryPartition) -> bool {
        is_cover(&self.hat(), &b.hat())
    }
}

impl fmt::Display for SkewedBinaryPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        self.pre.fmt_into(f)?;
        write!(f, ",")?;
        self.zero.fmt_into(f)?;
        for b in &self.rest {
            write!(f, ",")?;
            b.fmt_into(f)?;
        }
        write!(f, ")")
    }
}

/// Parses the textual form of a skewed binary partition, e.g.
/// `({2,3},{0,7}*,{6},{1,8}*,{4,5})` (first block `B₋₁`, second `B₀`,
/// possibly `{}` when empty).
pub fn parse_skewed_partition(s: &str) -> Result<SkewedBinaryPartition, PartitionError> {
    let s = s.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| PartitionError::Parse(String::from("expected outer parentheses")))?;
    let mut blocks: Vec<Block> = Vec::new();
    let mut rest = inner;
    loop {
        rest = rest.trim_start();
        let body_and_tail = rest
            .strip_prefix('{')
            .ok_or_else(|| PartitionError::Parse(String::from("expected `{`")))?;
        let close = body_and_tail
            .find('}')
            .ok_or_else(|| PartitionError::Parse(String::from("unterminated block")))?;
        let body = &body_and_tail[..close];
        let mut tail = &body_and_tail[close + 1..];
        let homogeneous = if let Some(t) = tail.strip_prefix('*') {
            tail = t;
            true
        } else {
            false
        };
        let mut elements = Vec::new();
        for part in body.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let e: Element = part
                .parse()
                .map_err(|_| PartitionError::Parse(String::from("invalid element")))?;
            elements.push(e);
        }
        blocks.push(Block::new(elements, homogeneous)?);
        tail = tail.trim_start();
        if tail.is_empty() {
            break;
        }
        rest = tail
            .strip_prefix(',')
            .ok_or_else(|| PartitionError::Parse(String::from("expected `,` between blocks")))?;
    }
    if blocks.len() < 2 {
        return Err(PartitionError::Parse(String::from(
            "expected at least the B_{-1} and B_0 blocks",
        )));
    }
    let pre = blocks.remove(0);
    let zero = blocks.remove(0);
    SkewedBinaryPartition::new(pre, zero, blocks)
}

/// Entry tag of a skewed binary composition: plain, `°` (circle), or `★`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Tag {
    Plain,
    Circle,
    Star,
}

/// One entry of a skewed binary composition; `size` counts positive
/// elements (`|i°| = |i★| = i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CompEntry {
    pub size: u32,
    pub tag: Tag,
}

/// A skewed binary composition `(b₋₁, b₀, b₁, …, b_k)` of `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SkewedBinaryComposition {
    entries: Vec<CompEntry>,
}

impl SkewedBinaryComposition {
    pub fn new(entries: Vec<CompEntry>) -> Result<Self, PartitionError> {
        if entries.len() < 2 {
            return Err(PartitionError::MalformedComposition(
                "need at least the b_{-1} and b_0 entries",
            ));
        }
        if entries[0].tag != Tag::Plain {
            return Err(PartitionError::MalformedComposition("b_{-1} must be plain"));
        }
        match entries[1] {
            CompEntry { tag: Tag::Circle, .. } => {}
            CompEntry { tag: Tag::Plain, size: 0 } => {
                if entries[0].size == 0 {
                    return Err(PartitionError::MalformedComposition(
                        "plain b_0 = 0 requires positive b_{-1}",
                    ));
                }
            }
            _ => {
                return Err(PartitionError::MalformedComposition(
                    "b_0 must be circle-tagged or the plain entry 0",
                ))
            }
        }
        for e in &entries[2..] {
            match e.tag {
                Tag::Plain if e.size >= 1 => {}
                Tag::Star if e.size >= 2 => {}
                _ => {
                    return Err(PartitionError::MalformedComposition(
                        "entries b_1,…,b_k must be plain (>= 1) or starred (>= 2)",
                    ))
                }
            }
        }
        Ok(SkewedBinaryComposition { entries })
    }

    pub fn entries(&self) -> &[CompEntry] {
        &self.entries
    }

    /// The composed integer `n = Σ |b_i|`.
    pub fn n(&self) -> u32 {
        self.entries.iter().map(|e| e.size).sum()
    }

    pub fn b_minus1(&self) -> CompEntry {
        self.entries[0]
    }

    pub fn b_zero(&self) -> CompEntry {
        self.entries[1]
    }

    /// The entries `b_1, …, b_k`.
    pub fn tail(&self) -> &[CompEntry] {
        &self.entries[2..]
    }

    /// All skewed binary compositions of `n`, in lexicographic order of
    /// their entry lists.
    pub fn enumerate(n: u32) -> Vec<SkewedBinaryComposition> {
        let mut out = Vec::new();
        let mut heads: Vec<Vec<CompEntry>> = Vec::new();
        for x in 0..=n {
            for h in 0..=(n - x) {
                heads.push(vec![
                    CompEntry { size: x, tag: Tag::Plain },
                    CompEntry { size: h, tag: Tag::Circle },
                ]);
            }
        }
        for x in 1..=n {
            heads.push(vec![
                CompEntry { size: x, tag: Tag::Plain },
                CompEntry { size: 0, tag: Tag::Plain },
            ]);
        }
        for head in heads {
            let used: u32 = head.iter().map(|e| e.size).sum();
            let mut tail = Vec::new();
            extend_tail(n - used, &mut tail, &mut |t| {
                let mut entries = head.clone();
                entries.extend_from_slice(t);
                out.push(SkewedBinaryComposition::new(entries).expect("enumerated entry is valid"));
            });
        }
        out.sort();
        out
    }
}

fn extend_tail(remaining: u32, tail: &mut Vec<CompEntry>, emit: &mut impl FnMut(&[CompEntry])) {
    if remaining == 0 {
        emit(tail);
        return;
    }
    for size in 1..=remaining {
        tail.push(CompEntry { size, tag: Tag::Plain });
        extend_tail(remaining - size, tail, emit);
        tail.pop();
        if size >= 2 {
            tail.push(CompEntry { size, tag: Tag::Star });
            extend_tail(remaining - size, tail, emit);
            tail.pop();
        }
    }
}

impl fmt::Display for SkewedBinaryComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", e.size)?;
            match e.tag {
                Tag::Plain => {}
                Tag::Circle => write!(f, "o")?,
                Tag::Star => write!(f, "*")?,
            }
        }
        Ok(())
    }
}

/// Parses a composition like `2,1o,1,2*,2`.
pub fn parse_composition(s: &str) -> Result<SkewedBinaryComposition, PartitionError> {
    let mut entries = Vec::new();
    for part in s.trim().split(',') {
        let part = part.trim();
        let (digits, tag) = if let Some(d) = part.strip_suffix('o') {
            (d, Tag::Circle)
        } else if let Some(d) = part.strip_suffix('*') {
            (d, Tag::Star)
        } else {
            (part, Tag::Plain)
        };
        let size: u32 = digits
            .parse()
            .map_err(|_| PartitionError::Parse(String::from("invalid composition entry")))?;
        entries.push(CompEntry { size, tag });
    }
    SkewedBinaryComposition::new(entries)
}

/// The unique standard partition of the given type: positive integers fill
/// the blocks `B₋₁, B₀, B₁, …` left to right in increasing order.
pub fn standard_of_type(
    comp: &SkewedBinaryComposition,
) -> Result<SkewedBinaryPartition, PartitionError> {
    let mut next: Element = 1;
    let mut take = |k: u32| -> Vec<Element> {
        let out: Vec<Element> = (next..next + k).collect();
        next += k;
        out
    };
    let b_minus1 = comp.b_minus1();
    let b_zero = comp.b_zero();
    let (pre, zero) = if b_zero.tag == Tag::Circle {
        let pre = Block::new(take(b_minus1.size), false)?;
        let mut z = vec![0];
        z.extend(take(b_zero.size));
        let zero = Block::new(z, b_zero.size >= 1)?;
        (pre, zero)
    } else {
        let mut p = vec![0];
        p.extend(take(b_minus1.size));
        (Block::new(p, false)?, Block::empty())
    };
    let mut rest = Vec::new();
    for e in comp.tail() {
        rest.push(Block::new(take(e.size), e.tag == Tag::Star)?);
    }
    SkewedBinaryPartition::new(pre, zero, rest)
}

/// All skewed binary partitions with the given type, in canonical order.
pub fn partitions_of_type(comp: &SkewedBinaryComposition) -> Vec<SkewedBinaryPartition> {
    let n = comp.n();
    let mut sizes: Vec<u32> = Vec::new();
    sizes.push(comp.b_minus1().size);
    sizes.push(comp.b_zero().size);
    sizes.extend(comp.tail().iter().map(|e| e.size));
    let mut out = Vec::new();
    let pool: Vec<Element> = (1..=n).collect();
    distribute(&pool, &sizes, &mut Vec::new(), &mut |chosen| {
        let b_zero = comp.b_zero();
        let (pre, zero) = if b_zero.tag == Tag::Circle {
            let pre = Block::new(chosen[0].clone(), false).expect("valid block");
            let mut z = vec![0];
            z.extend_from_slice(&chosen[1]);
            let zero = Block::new(z, b_zero.size >= 1).expect("valid block");
            (pre, zero)
        } else {
            let mut p = vec![0];
            p.extend_from_slice(&chosen[0]);
            (Block::new(p, false).expect("valid block"), Block::empty())
        };
        let rest: Vec<Block> = comp
            .tail()
            .iter()
            .zip(&chosen[2..])
            .map(|(e, els)| Block::new(els.clone(), e.tag == Tag::Star).expect("valid block"))
            .collect();
        out.push(SkewedBinaryPartition::new(pre, zero, rest).expect("valid partition"));
    });
    out.sort();
    out
}

/// Enumerates all ways to split `pool` into consecutive chosen subsets of
/// the given sizes (order inside each subset is sorted).
fn distribute(
    pool: &[Element],
    sizes: &[u32],
    acc: &mut Vec<Vec<Element>>,
    emit: &mut impl FnMut(&[Vec<Element>]),
) {
    match sizes.split_first() {
        None => emit(acc),
        Some((&k, rest_sizes)) => {
            let k = k as usize;
            let mut idx: Vec<usize> = (0..k).collect();
            loop {
                let chosen: Vec<Element> = idx.iter().map(|&i| pool[i]).collect();
                let remaining: Vec<Element> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !idx.contains(i))
                    .map(|(_, &e)| e)
                    .collect();
                acc.push(chosen);
                distribute(&remaining, rest_sizes, acc, emit);
                acc.pop();
                // next k-combination of pool indices
                let mut i = k;
                loop {
                    if i == 0 {
                        return;
                    }
                    i -= 1;
                    if idx[i] + (k - i) < pool.len() {
                        idx[i] += 1;
                        for j in i + 1..k {
                            idx[j] = idx[j - 1] + 1;
                        }
                        break;
                    }
                }
            }
        }
    }
}

/// All skewed binary partitions of `[0,n]`.
pub fn all_skewed_partitions(n: u32) -> Vec<SkewedBinaryPartition> {
    let mut out = Vec::new();
    for comp in SkewedBinaryComposition::enumerate(n) {
        out.extend(partitions_of_type(&comp));
    }
    out.sort();
    out
}

/// A preorder on `[0,n]`: a reflexive transitive relation, stored as a
/// boolean matrix that is closed at construction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Preposet {
    n: Element,
    rel: Vec<bool>,
}

impl Preposet {
    /// The discrete (antichain) preorder: only reflexive pairs.
    pub fn discrete(n: Element) -> Self {
        let size = (n as usize + 1) * (n as usize + 1);
        let mut p = Preposet { n, rel: vec![false; size] };
        for e in 0..=n {
            p.set(e, e);
        }
        p
    }

    /// Builds the reflexive-transitive closure of the given pairs.
    pub fn from_pairs(n: Element, pairs: &[(Element, Element)]) -> Self {
        let mut p = Preposet::discrete(n);
        for &(a, b) in pairs {
            p.set(a, b);
        }
        p.close();
        p
    }

    fn idx(&self, p: Element, q: Element) -> usize {
        p as usize * (self.n as usize + 1) + q as usize
    }

    fn set(&mut self, p: Element, q: Element) {
        let i = self.idx(p, q);
        self.rel[i] = true;
    }

    fn close(&mut self) {
        let m = self.n as usize + 1;
        for k in 0..m {
            for i in 0..m {
                if self.rel[i * m + k] {
                    for j in 0..m {
                        if self.rel[k * m + j] {
                            self.rel[i * m + j] = true;
                        }
                    }
                }
            }
        }
    }

    pub fn n(&self) -> Element {
        self.n
    }

    /// `p ⪯ q`.
    pub fn le(&self, p: Element, q: Element) -> bool {
        self.rel[self.idx(p, q)]
    }

    /// Strict comparability `p ⪯ q` but not `q ⪯ p`.
    pub fn lt(&self, p: Element, q: Element) -> bool {
        self.le(p, q) && !self.le(q, p)
    }

    pub fn equivalent(&self, p: Element, q: Element) -> bool {
        self.le(p, q) && self.le(q, p)
    }

    pub fn comparable(&self, p: Element, q: Element) -> bool {
        self.le(p, q) || self.le(q, p)
    }

    /// Minimum element of the equivalence class of `p`.
    pub fn class_rep(&self, p: Element) -> Element {
        (0..=self.n).find(|&q| self.equivalent(p, q)).unwrap_or(p)
    }

    /// Equivalence classes, each sorted, ordered by minimum element.
    pub fn classes(&self) -> Vec<Vec<Element>> {
        let mut out: Vec<Vec<Element>> = Vec::new();
        for p in 0..=self.n {
            if self.class_rep(p) == p {
                out.push((p..=self.n).filter(|&q| self.equivalent(p, q)).collect());
            }
        }
        out
    }

    pub fn class_reps(&self) -> Vec<Element> {
        (0..=self.n).filter(|&p| self.class_rep(p) == p).collect()
    }

    /// True when every equivalence class is a singleton.
    pub fn is_poset(&self) -> bool {
        (0..=self.n).all(|p| self.class_rep(p) == p)
    }

    /// Cover pairs `(a, b)` of the quotient poset, by class representative.
    pub fn class_covers(&self) -> Vec<(Element, Element)> {
        let reps = self.class_reps();
        let mut out = Vec::new();
        for &a in &reps {
            for &b in &reps {
                if self.lt(a, b) && !reps.iter().any(|&c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The contraction of the preposet that identifies the classes of `a`
    /// and `b` (transitively closed).
    pub fn merge(&self, a: Element, b: Element) -> Preposet {
        let mut p = self.clone();
        p.set(a, b);
        p.set(b, a);
        p.close();
        p
    }

    /// All linear extensions of a poset, as orderings of `[0,n]` from
    /// bottom to top; `None` when the preposet is not a poset.
    pub fn linear_extensions(&self) -> Option<Vec<Vec<Element>>> {
        if !self.is_poset() {
            return None;
        }
        let mut out = Vec::new();
        let mut remaining: Vec<Element> = (0..=self.n).collect();
        let mut acc = Vec::new();
        self.extensions_rec(&mut remaining, &mut acc, &mut out);
        Some(out)
    }

    fn extensions_rec(
        &self,
        remaining: &mut Vec<Element>,
        acc: &mut Vec<Element>,
        out: &mut Vec<Vec<Element>>,
    ) {
        if remaining.is_empty() {
            out.push(acc.clone());
            return;
        }
        for i in 0..remaining.len() {
            let e = remaining[i];
            if remaining.iter().any(|&f| f != e && self.lt(f, e)) {
                continue;
            }
            remaining.remove(i);
            acc.push(e);
            self.extensions_rec(remaining, acc, out);
            acc.pop();
            remaining.insert(i, e);
        }
    }
}

/// Reconstructs the binary partition representing a preposet, if the
/// preposet is an ordinal sum of antichains with every class of size at
/// least two comparable to everything (otherwise `None`).
pub fn partition_of_preposet(p: &Preposet) -> Option<BinaryPartition> {
    let classes = p.classes();
    // Group classes into layers by the number of classes strictly below.
    let mut by_down: Vec<(usize, Vec<Element>)> = classes
        .iter()
        .map(|c| {
            let rep = c[0];
            let down = classes.iter().filter(|d| p.lt(d[0], rep)).count();
            (down, c.clone())
        })
        .collect();
    by_down.sort();
    let mut layers: Vec<Vec<Vec<Element>>> = Vec::new();
    let mut cumulative = 0usize;
    let mut i = 0usize;
    while i < by_down.len() {
        let d = by_down[i].0;
        if d != cumulative {
            return None;
        }
        let mut layer = Vec::new();
        while i < by_down.len() && by_down[i].0 == d {
            layer.push(by_down[i].1.clone());
            i += 1;
        }
        cumulative += layer.len();
        layers.push(layer);
    }
    // Verify comparabilities across and within layers.
    for (li, layer) in layers.iter().enumerate() {
        for (lj, other) in layers.iter().enumerate() {
            for c in layer {
                for d in other {
                    if c[0] == d[0] {
                        continue;
                    }
                    let want_lt = li < lj;
                    let want_gt = li > lj;
                    if p.lt(c[0], d[0]) != want_lt || p.lt(d[0], c[0]) != want_gt {
                        return None;
                    }
                }
            }
        }
    }
    let mut blocks = Vec::new();
    for layer in layers {
        if layer.len() == 1 {
            let class = &layer[0];
            blocks.push(Block::new(class.clone(), class.len() >= 2).ok()?);
        } else {
            if layer.iter().any(|c| c.len() >= 2) {
                return None;
            }
            let elements: Vec<Element> = layer.iter().map(|c| c[0]).collect();
            blocks.push(Block::new(elements, false).ok()?);
        }
    }
    BinaryPartition::new(blocks).ok()
}

/// The bipartite block graph `G(B,C)`: left vertices are the blocks of
/// `B`, right vertices the blocks of `C`, adjacent when they intersect.
#[derive(Clone, Debug)]
pub struct BipartiteBlockGraph {
    left_homog: Vec<bool>,
    right_homog: Vec<bool>,
    inter: Vec<Vec<u32>>,
}

/// Builds `G(B,C)` for two binary partitions of the same ground set.
pub fn bipartite_graph(
    b: &BinaryPartition,
    c: &BinaryPartition,
) -> Result<BipartiteBlockGraph, PartitionError> {
    if b.n() != c.n() {
        return Err(PartitionError::GroundSetMismatch);
    }
    let inter = b
        .blocks()
        .iter()
        .map(|bi| {
            c.blocks()
                .iter()
                .map(|cj| bi.elements().iter().filter(|&&e| cj.contains(e)).count() as u32)
                .collect()
        })
        .collect();
    Ok(BipartiteBlockGraph {
        left_homog: b.blocks().iter().map(Block::is_homogeneous).collect(),
        right_homog: c.blocks().iter().map(Block::is_homogeneous).collect(),
        inter,
    })
}

impl BipartiteBlockGraph {
    pub fn left_len(&self) -> usize {
        self.left_homog.len()
    }

    pub fn right_len(&self) -> usize {
        self.right_homog.len()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.inter[i][j] > 0
    }

    pub fn intersection_size(&self, i: usize, j: usize) -> u32 {
        self.inter[i][j]
    }

    /// True when no two edges `(i,j)` and `(s,t)` satisfy `i < s, j > t`.
    pub fn is_noncrossing(&self) -> bool {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        for (a, &(i, j)) in edges.iter().enumerate() {
            for &(s, t) in &edges[a + 1..] {
                if (i < s && j > t) || (s < i && t > j) {
                    return false;
                }
            }
        }
        true
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.left_len())
            .flat_map(move |i| (0..self.right_len()).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.adjacent(i, j))
    }

    fn left_degree(&self, i: usize, homog_neighbor: Option<bool>) -> usize {
        (0..self.right_len())
            .filter(|&j| {
                self.adjacent(i, j) && homog_neighbor.map_or(true, |h| self.right_homog[j] == h)
            })
            .count()
    }

    fn right_degree(&self, j: usize, homog_neighbor: Option<bool>) -> usize {
        (0..self.left_len())
            .filter(|&i| {
                self.adjacent(i, j) && homog_neighbor.map_or(true, |h| self.left_homog[i] == h)
            })
            .count()
    }
}

/// Decides whether `⪯_C` is a contraction of `⪯_B` (equivalently, `σ̃_C`
/// is a face of `σ̃_B`) via the five conditions on `G(B,C)`.
pub fn is_contraction(c: &BinaryPartition, b: &BinaryPartition) -> bool {
    let Ok(g) = bipartite_graph(b, c) else {
        return false;
    };
    if !g.is_noncrossing() {
        return false;
    }
    for i in 0..g.left_len() {
        if g.left_homog[i] {
            if g.left_degree(i, Some(true)) != 1 || g.left_degree(i, Some(false)) != 0 {
                return false;
            }
        } else if g.left_degree(i, Some(false)) > 1 {
            return false;
        }
    }
    for j in 0..g.right_len() {
        if g.right_homog[j] {
            if g.right_degree(j, None) == 1 && g.right_degree(j, Some(true)) != 1 {
                return false;
            }
        } else if g.right_degree(j, Some(true)) != 0 || g.right_degree(j, Some(false)) != 1 {
            return false;
        }
    }
    true
}

/// Decides whether `⪯_B` covers `⪯_C` in the contraction order: `G(B,C)`
/// is non-crossing with a unique right vertex of degree two, subject to
/// the local conditions below.
pub fn is_cover(c: &BinaryPartition, b: &BinaryPartition) -> bool {
    let Ok(g) = bipartite_graph(b, c) else {
        return false;
    };
    if !g.is_noncrossing() {
        return false;
    }
    let special: Vec<usize> =
        (0..g.right_len()).filter(|&j| g.right_degree(j, None) != 1).collect();
    let [j0] = special[..] else {
        return false;
    };
    if g.right_degree(j0, None) != 2 || !g.right_homog[j0] {
        return false;
    }
    // Every other right vertex has degree one, adjacent to the same type.
    for j in 0..g.right_len() {
        if j == j0 {
            continue;
        }
        let i = (0..g.left_len()).find(|&i| g.adjacent(i, j)).expect("degree one");
        if g.left_homog[i] != g.right_homog[j] {
            return false;
        }
    }
    for i in 0..g.left_len() {
        if !g.left_homog[i] && g.adjacent(i, j0) {
            // Non-homogeneous left vertices meeting C_{j0}.
            if g.left_degree(i, None) > 2 || g.intersection_size(i, j0) != 1 {
                return false;
            }
        } else {
            // Left vertices that are homogeneous or avoid C_{j0}.
            if g.left_degree(i, None) != 1 {
                return false;
            }
            let j = (0..g.right_len()).find(|&j| g.adjacent(i, j)).expect("degree one");
            if g.right_homog[j] != g.left_homog[i] {
                return false;
            }
        }
    }
    true
}
