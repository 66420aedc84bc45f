//! Descent statistics, classical and generalized Eulerian polynomials, and
//! closed-form h-polynomials of simple parking function polytopes.
//!
//! For a labeled poset with tree Hasse diagram, the *generalized Eulerian
//! polynomial* `A(Q,t)` sums `t^{asc}` over all distinct relabelings of
//! `Q`; for the chain it recovers the classical Eulerian polynomial.  The
//! h-polynomial of a simple `PF(m,d)` has a closed form built from the
//! `A(T(p,q),t)` of the "broom" posets `T(p,q)` (a `p`-chain with `q`
//! incomparable maxima on top).

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::partitions::SkewedBinaryPartition;
use crate::poly::{binomial, Polynomial, Rational};
use crate::polytope::{is_simple, maximal_partitions, omega, InputError, MDPair};

/// A labeled poset given by its cover relations; used for the tree posets
/// underlying generalized Eulerian polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledForestPoset {
    labels: Vec<u32>,
    covers: Vec<(u32, u32)>,
}

/// Counts of ascents (`i ⋖ j` with `j > i`) and descents (`j < i`) over
/// the cover edges of a labeled poset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AscentDescentStats {
    pub asc: usize,
    pub des: usize,
}

impl LabeledForestPoset {
    pub fn new(mut labels: Vec<u32>, covers: Vec<(u32, u32)>) -> Self {
        labels.sort_unstable();
        labels.dedup();
        for &(a, b) in &covers {
            assert!(
                labels.binary_search(&a).is_ok() && labels.binary_search(&b).is_ok() && a != b,
                "cover endpoints must be distinct labels"
            );
        }
        LabeledForestPoset { labels, covers }
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn covers(&self) -> &[(u32, u32)] {
        &self.covers
    }

    pub fn stats(&self) -> AscentDescentStats {
        stats_of(&self.covers)
    }

    /// The dual poset (all covers reversed).
    pub fn dual(&self) -> LabeledForestPoset {
        LabeledForestPoset::new(
            self.labels.clone(),
            self.covers.iter().map(|&(a, b)| (b, a)).collect(),
        )
    }

    /// True when the underlying undirected Hasse graph is a tree on the
    /// label set.
    pub fn hasse_is_tree(&self) -> bool {
        let n = self.labels.len();
        if self.covers.len() + 1 != n {
            return false;
        }
        let mut reached: BTreeSet<u32> = BTreeSet::new();
        let mut stack = vec![self.labels[0]];
        reached.insert(self.labels[0]);
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.covers {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if reached.insert(w) {
                    stack.push(w);
                }
            }
        }
        reached.len() == n
    }
}

fn stats_of(covers: &[(u32, u32)]) -> AscentDescentStats {
    let asc = covers.iter().filter(|&&(i, j)| j > i).count();
    AscentDescentStats { asc, des: covers.len() - asc }
}

/// Ascent/descent counts of the preorder of a skewed binary partition with
/// non-homogeneous blocks only, over its element-level Hasse edges.
pub fn descent_stats(b: &SkewedBinaryPartition) -> AscentDescentStats {
    stats_of(&b.hasse_pairs())
}

/// The classical Eulerian polynomial `A_k(t) = Σ_{σ ∈ 𝔖_k} t^{des σ}`,
/// degree `k − 1`, via the standard recurrence
/// `E(n,j) = (j+1)E(n−1,j) + (n−j)E(n−1,j−1)`.
pub fn eulerian(k: u32) -> Polynomial {
    assert!(k >= 1);
    let mut row: Vec<Rational> = vec![Rational::from_integer(1.into())];
    for n in 2..=k as usize {
        let mut next = vec![Rational::from_integer(0.into()); n];
        for (j, c) in row.iter().enumerate() {
            next[j] += c * Rational::from_integer((j as i64 + 1).into());
            next[j + 1] += c * Rational::from_integer((n as i64 - 1 - j as i64).into());
        }
        row = next;
    }
    Polynomial::from_coeffs(row)
}

/// The broom poset `T(p,q)` on `[p+q]`: the chain `1 ⋖ 2 ⋖ ⋯ ⋖ p` with
/// the incomparable maxima `p+1, …, p+q` all covering `p`.
pub fn t_poset(p: u32, q: u32) -> LabeledForestPoset {
    assert!(p >= 1 && q >= 1);
    let labels: Vec<u32> = (1..=p + q).collect();
    let mut covers: Vec<(u32, u32)> = (1..p).map(|j| (j, j + 1)).collect();
    covers.extend((p + 1..=p + q).map(|k| (p, k)));
    LabeledForestPoset::new(labels, covers)
}

/// The poset behind the `g(t)` summand of the h-polynomial when `m₀ ≠ 0`:
/// `m₀` incomparable minima below a chain of `ℓ−1` elements, topped by
/// `m_ℓ` incomparable maxima; labels `1, …, m₀+ℓ−1+m_ℓ` bottom-up.
pub fn g_poset(m0: u32, ell: u32, m_ell: u32) -> LabeledForestPoset {
    assert!(m0 >= 1 && ell >= 2 && m_ell >= 1);
    let chain_lo = m0 + 1;
    let chain_hi = m0 + ell - 1;
    let n = chain_hi + m_ell;
    let labels: Vec<u32> = (1..=n).collect();
    let mut covers: Vec<(u32, u32)> = (1..=m0).map(|j| (j, chain_lo)).collect();
    covers.extend((chain_lo..chain_hi).map(|j| (j, j + 1)));
    covers.extend((chain_hi + 1..=n).map(|k| (chain_hi, k)));
    LabeledForestPoset::new(labels, covers)
}

/// The generalized Eulerian polynomial `A(Q,t) = Σ t^{asc}` over all
/// distinct relabelings of `Q` by its own label set, computed by brute
/// force.  `Q` must have a tree Hasse diagram.
pub fn gen_eulerian_brute(q: &LabeledForestPoset) -> Polynomial {
    assert!(q.hasse_is_tree(), "generalized Eulerian polynomials require tree posets");
    let labels = q.labels();
    let n = labels.len();
    let mut seen: BTreeSet<Vec<(u32, u32)>> = BTreeSet::new();
    let mut acc = Polynomial::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        // Relabel: label at position i maps to label at position perm[i].
        let image = |x: u32| -> u32 {
            let i = labels.binary_search(&x).unwrap();
            labels[perm[i]]
        };
        let mut covers: Vec<(u32, u32)> =
            q.covers().iter().map(|&(a, b)| (image(a), image(b))).collect();
        covers.sort_unstable();
        if seen.insert(covers.clone()) {
            let s = stats_of(&covers);
            acc = acc.add(&Polynomial::monomial(Rational::from_integer(1.into()), s.asc));
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

fn binom_const(n: i64, k: i64) -> Polynomial {
    if k < 0 || n < 0 {
        return Polynomial::zero();
    }
    Polynomial::constant(Rational::from_integer(binomial(n as u64, k as u64)))
}

/// Closed form of `A(T(p,q),t)`:
/// `Σ_{i=0}^{y} C(n,i) (t^i + ⋯ + t^{n−i−1})
///  + Σ_{i=1}^{p−2} C(n,i+1) (t + ⋯ + t^{n−i−2}) A_{i+1}(t)`
/// with `n = p+q` and `y = min(1, p−1)`.
pub fn gen_eulerian_t(p: u32, q: u32) -> Polynomial {
    assert!(p >= 1 && q >= 1);
    let n = (p + q) as i64;
    let y = 1.min(p as i64 - 1);
    let mut acc = Polynomial::zero();
    for i in 0..=y {
        let range = Polynomial::power_sum(i as usize, (n - i - 1) as usize);
        acc = acc.add(&binom_const(n, i).mul(&range));
    }
    for i in 1..=(p as i64 - 2) {
        let range = Polynomial::power_sum(1, (n - i - 2) as usize);
        let term = binom_const(n, i + 1).mul(&range).mul(&eulerian(i as u32 + 1));
        acc = acc.add(&term);
    }
    acc
}

fn not_simple() -> InputError {
    InputError(String::from("h-polynomials are only available for simple PF(u)"))
}

/// The closed-form h-polynomial of a simple `PF(m,d)`.
pub fn h_polynomial(md: &MDPair) -> Result<Polynomial, InputError> {
    if !is_simple(md) {
        return Err(not_simple());
    }
    let n = md.n() as i64;
    let m = md.m();
    let ell = md.ell() as i64;
    let m0 = md.m0() as i64;
    // Cube: (1+t)^n.
    if m0 == 0 && ell == 1 {
        let one_plus_t =
            Polynomial::from_coeffs(vec![Rational::from_integer(1.into()); 2]);
        return Ok(one_plus_t.pow(n as usize));
    }
    // Simplex: 1 + t + ⋯ + t^n.
    if m0 == n - 1 {
        return Ok(Polynomial::power_sum(0, n as usize));
    }
    let m_ell = m[m.len() - 1] as i64;
    // Common part: Σ_{j=0}^{m_ℓ} C(n,j) t^j.
    let mut acc = Polynomial::zero();
    for j in 0..=m_ell {
        acc = acc.add(&binom_const(n, j).mul(&Polynomial::monomial(
            Rational::from_integer(1.into()),
            j as usize,
        )));
    }
    let top = if m0 == 0 { ell - 1 } else { ell - 2 };
    for i in 1..=top {
        let term = binom_const(n, i + m_ell)
            .mul(&Polynomial::t())
            .mul(&gen_eulerian_t(i as u32, m_ell as u32));
        acc = acc.add(&term);
    }
    if m0 != 0 {
        // The extra g(t) summand.
        let z = m_ell.min(n - m_ell - 1);
        let mut g = Polynomial::zero();
        for i in 0..=z {
            let range = Polynomial::power_sum((i + 1) as usize, (n - i) as usize);
            g = g.add(&binom_const(n, i).mul(&range));
        }
        for i in 1..=(ell - 2) {
            let range = Polynomial::power_sum(2, (n - i - m_ell) as usize);
            let term = binom_const(n, i + m_ell)
                .mul(&range)
                .mul(&gen_eulerian_t(i as u32, m_ell as u32));
            g = g.add(&term);
        }
        acc = acc.add(&g);
    }
    Ok(acc)
}

/// The h-polynomial computed directly as `Σ t^{des(B)}` over all `B` with
/// type in `Ω_m` — the independent descent-statistic route.
pub fn h_via_descents(md: &MDPair) -> Result<Polynomial, InputError> {
    if !is_simple(md) {
        return Err(not_simple());
    }
    let mut acc = Polynomial::zero();
    for b in maximal_partitions(md) {
        let s = descent_stats(&b);
        acc = acc.add(&Polynomial::monomial(Rational::from_integer(1.into()), s.des));
    }
    Ok(acc)
}

/// The per-type split `h = Σ_i g_i` with
/// `g_i(t) = Σ_{type(B) = a_i} t^{asc(B)}`, indexed like `omega(md)`.
/// (The ascent and descent sums agree in total but not per type; the
/// closed forms for the `g_i` are stated for ascents.)
pub fn ascent_split(md: &MDPair) -> Result<Vec<Polynomial>, InputError> {
    if !is_simple(md) {
        return Err(not_simple());
    }
    let types = omega(md);
    let mut out = vec![Polynomial::zero(); types.len()];
    for b in maximal_partitions(md) {
        let i = types.iter().position(|t| *t == b.type_of()).expect("maximal type");
        let s = descent_stats(&b);
        out[i] = out[i].add(&Polynomial::monomial(Rational::from_integer(1.into()), s.asc));
    }
    Ok(out)
}
