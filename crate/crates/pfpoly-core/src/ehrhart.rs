//! Minkowski decompositions of `PF(u)`, draconian sequences, the Ehrhart
//! polynomial, and the volume.
//!
//! `PF(u)` decomposes as a signed Minkowski sum of the simplices
//! `Δ⁰_I = conv(0, e_i : i ∈ I)` with coefficients `y_{|I|}` depending
//! only on `|I|` (alternating finite differences of `u`), and as a
//! nonnegative sum of the smaller parking function polytopes `PF(1_k)`.
//! The lattice-point enumerator is a sum of products of binomial
//! polynomials over *draconian sequences*: integer vectors `a ≥ 0` with
//! `Σ_{j∈J} a_j ≤ |⋃_{j∈J} I_j|` for every subset `J` of summands — a
//! Hall-type condition decided here by bipartite matching.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::poly::{binomial, binomial_poly, factorial, Polynomial, Rational};
use crate::polytope::{upper_bound, InputError, UVector};

/// The signed Minkowski decomposition `PF(u) = Σ y_{|I|} Δ⁰_I`: one
/// summand per nonempty `I ⊆ [n]` with nonzero coefficient, index sets as
/// bitmasks over coordinates `1,…,n`, ordered by (size, mask).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinkowskiDecomposition {
    n: usize,
    summands: Vec<(u32, Rational)>,
}

impl MinkowskiDecomposition {
    pub fn of_u(u: &UVector) -> Self {
        let n = u.n();
        assert!(n <= 24, "Minkowski decomposition is exponential in n");
        let y = y_coefficients(u);
        let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        let summands = masks
            .into_iter()
            .filter_map(|m| {
                let c = y[m.count_ones() as usize - 1].clone();
                if c.is_zero() {
                    None
                } else {
                    Some((m, c))
                }
            })
            .collect();
        MinkowskiDecomposition { n, summands }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Summands `(I, y_{|I|})` with `I` as a bitmask, nonzero `y` only.
    pub fn summands(&self) -> &[(u32, Rational)] {
        &self.summands
    }
}

/// The coefficients `y_k = Σ_{j=0}^{k−1} C(k−1,j) (−1)^j u_{k−j}` of the
/// simplex decomposition, indexed by `k − 1` for `k = 1,…,n`.
pub fn y_coefficients(u: &UVector) -> Vec<Rational> {
    let n = u.n();
    let mut out = Vec::with_capacity(n);
    for k in 1..=n {
        let mut acc = Rational::zero();
        for j in 0..k {
            let c = Rational::from_integer(binomial(k as u64 - 1, j as u64));
            let term = c * &u.entries()[k - j - 1];
            if j % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        out.push(acc);
    }
    out
}

/// The hypersimplex-style decomposition
/// `PF(u) = u₁·PF(1_n) + Σ_k (u_{k+1} − u_k)·PF(1_{n−k})`, returned as
/// `(size of the PF(1_size) summand, coefficient)` pairs with nonzero
/// coefficients, largest summand first.
pub fn minkowski_hypersimplex(u: &UVector) -> Vec<(usize, Rational)> {
    let n = u.n();
    let mut out = Vec::new();
    if !u.entries()[0].is_zero() {
        out.push((n, u.entries()[0].clone()));
    }
    for k in 1..n {
        let diff = &u.entries()[k] - &u.entries()[k - 1];
        if !diff.is_zero() {
            out.push((n - k, diff));
        }
    }
    out
}

/// Decides whether the partial assignment `a` over the index sets `masks`
/// satisfies Hall's condition `Σ_{j∈J} a_j ≤ |⋃_{j∈J} I_j|` for all `J`,
/// via bipartite matching of supply units to elements.
fn hall_feasible(masks: &[u32], a: &[u32], n: usize) -> bool {
    fn augment(
        j: usize,
        masks: &[u32],
        owner: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for e in 0..visited.len() {
            if masks[j] & (1 << e) == 0 || visited[e] {
                continue;
            }
            visited[e] = true;
            match owner[e] {
                None => {
                    owner[e] = Some(j);
                    return true;
                }
                Some(k) => {
                    if augment(k, masks, owner, visited) {
                        owner[e] = Some(j);
                        return true;
                    }
                }
            }
        }
        false
    }
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (j, &aj) in a.iter().enumerate() {
        for _ in 0..aj {
            let mut visited = vec![false; n];
            if !augment(j, masks, &mut owner, &mut visited) {
                return false;
            }
        }
    }
    true
}

/// Enumerates all draconian sequences of the decomposition, in
/// lexicographic order, by depth-first search with Hall-condition
/// pruning.
pub fn draconian_enumerate(dec: &MinkowskiDecomposition) -> Vec<Vec<u32>> {
    assert!(!dec.summands.is_empty(), "decomposition has no summands");
    let masks: Vec<u32> = dec.summands.iter().map(|s| s.0).collect();
    let n = dec.n;
    let mut out = Vec::new();
    let mut a = vec![0u32; masks.len()];
    fn rec(j: usize, masks: &[u32], n: usize, a: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j == masks.len() {
            out.push(a.clone());
            return;
        }
        for v in 0..=masks[j].count_ones() {
            a[j] = v;
            // Increasing a_j only shrinks the feasible region: stop at the
            // first infeasible prefix.
            if !hall_feasible(&masks[..=j], &a[..=j], n) {
                break;
            }
            rec(j + 1, masks, n, a, out);
        }
        a[j] = 0;
    }
    rec(0, &masks, n, &mut a, &mut out);
    out
}

/// The Ehrhart polynomial `i(PF(u), t)`, requiring integral `u` (so that
/// `PF(u)` is an integral polytope):
/// `Σ_{a draconian} Π_j C(t·y_j + a_j − 1, a_j)`.
pub fn ehrhart_polynomial(u: &UVector) -> Result<Polynomial, InputError> {
    if !u.is_integral() {
        return Err(InputError(String::from(
            "Ehrhart polynomial requires an integral u",
        )));
    }
    let dec = MinkowskiDecomposition::of_u(u);
    let mut acc = Polynomial::zero();
    for a in draconian_enumerate(&dec) {
        let mut term = Polynomial::one();
        for (j, (_, y)) in dec.summands.iter().enumerate() {
            if a[j] > 0 {
                term = term.mul(&binomial_poly(y, a[j] as usize));
            }
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The normalized-to-Euclidean volume of `PF(u)`:
/// `Σ_{a draconian, Σa = n} Π_j y_j^{a_j} / a_j!` — valid for rational
/// (not necessarily integral) `u`.
pub fn volume(u: &UVector) -> Rational {
    let dec = MinkowskiDecomposition::of_u(u);
    let n = u.n() as u32;
    let mut acc = Rational::zero();
    for a in draconian_enumerate(&dec) {
        if a.iter().sum::<u32>() != n {
            continue;
        }
        let mut term = Rational::from_integer(1.into());
        for (j, (_, y)) in dec.summands.iter().enumerate() {
            for _ in 0..a[j] {
                term *= y;
            }
            term /= Rational::from_integer(factorial(a[j] as u64));
        }
        acc += term;
    }
    acc
}

/// The polymatroid rank function of `PF(u)`: `w_u(I)` is the sum of the
/// `|I|` largest entries of `u`, so `PF(u) = {x ≥ 0 : Σ_{i∈I} x_i ≤ w_u(I)}`.
#[derive(Clone, Debug)]
pub struct PolymatroidRank {
    u: UVector,
}

impl PolymatroidRank {
    pub fn new(u: UVector) -> Self {
        PolymatroidRank { u }
    }

    /// `w_u(I)` for any `I` of the given size (the value depends only on
    /// `|I|`); zero for the empty set.
    pub fn rank_of_size(&self, k: usize) -> Rational {
        upper_bound(&self.u, k)
    }

    /// `w_u(I)` for `I` given as a bitmask over coordinates `1,…,n`.
    pub fn rank(&self, mask: u32) -> Rational {
        self.rank_of_size(mask.count_ones() as usize)
    }
}
