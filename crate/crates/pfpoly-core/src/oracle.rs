//! Independent brute-force verifiers.
//!
//! Everything here is deliberately formula-free: lattice points are
//! counted by box iteration, extremeness is decided by exact linear
//! programming, face lattices are rebuilt from vertex-facet incidence,
//! and contractions are re-derived by breadth-first search over
//! single-edge merges.  These are the oracles the combinatorial formulas
//! are checked against.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::partitions::Preposet;
use crate::point::{LinearInequality, Point};
use crate::poly::{Int, Rational};

/// Scales an inequality to integer coefficients (times the lcm of all
/// denominators), returned as `(coeffs, rhs)` in `i128`.
fn scaled(q: &LinearInequality, t: u32) -> (Vec<i128>, i128) {
    let mut lcm = Int::one();
    for c in q.coeffs.iter().chain(core::iter::once(&q.rhs)) {
        lcm = lcm.lcm(c.denom());
    }
    let scale = Rational::from_integer(lcm);
    let to_i128 = |r: &Rational| -> i128 {
        (r * &scale).to_integer().to_i128().expect("inequality data fits in i128")
    };
    let coeffs = q.coeffs.iter().map(to_i128).collect();
    let rhs = to_i128(&q.rhs) * i128::from(t);
    (coeffs, rhs)
}

/// Counts the lattice points of the dilation `t·P` for the polytope `P`
/// described by `ineqs`, by pruned box iteration.  Panics when the
/// inequalities do not bound every coordinate.
pub fn lattice_count(ineqs: &[LinearInequality], t: u32) -> u64 {
    lattice_points(ineqs, t).len() as u64
}

/// The lattice points themselves, in lexicographic order.
pub fn lattice_points(ineqs: &[LinearInequality], t: u32) -> Vec<Vec<i64>> {
    assert!(!ineqs.is_empty(), "empty inequality system is unbounded");
    let n = ineqs[0].coeffs.len();
    let sys: Vec<(Vec<i128>, i128)> = ineqs.iter().map(|q| scaled(q, t)).collect();
    // Per-coordinate bounds from single-signed inequalities.
    let mut lo = vec![i128::MIN; n];
    let mut hi = vec![i128::MAX; n];
    for (coeffs, rhs) in &sys {
        for i in 0..n {
            if coeffs[i] > 0 && coeffs.iter().all(|&c| c >= 0) {
                hi[i] = hi[i].min(rhs.div_euclid(coeffs[i]));
            }
            if coeffs[i] < 0 && coeffs.iter().all(|&c| c <= 0) {
                // Smallest x_i with c x_i <= rhs is ceil(rhs / c); with a
                // negative divisor and Euclidean remainder >= 0 that is
                // exactly the Euclidean quotient.
                lo[i] = lo[i].max(rhs.div_euclid(coeffs[i]));
            }
        }
    }
    assert!(
        (0..n).all(|i| lo[i] != i128::MIN && hi[i] != i128::MAX),
        "inequality system leaves a coordinate unbounded"
    );
    let mut out = Vec::new();
    let mut x = vec![0i128; n];
    fn rec(
        k: usize,
        n: usize,
        sys: &[(Vec<i128>, i128)],
        lo: &[i128],
        hi: &[i128],
        x: &mut Vec<i128>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if k == n {
            out.push(x.iter().map(|&v| v as i64).collect());
            return;
        }
        'next: for v in lo[k]..=hi[k] {
            x[k] = v;
            // Prune: assigned prefix plus the best case of the rest.
            for (coeffs, rhs) in sys {
                let mut acc = 0i128;
                for (i, &c) in coeffs.iter().enumerate() {
                    if i <= k {
                        acc += c * x[i];
                    } else if c > 0 {
                        acc += c * lo[i];
                    } else {
                        acc += c * hi[i];
                    }
                }
                if acc > *rhs {
                    if coeffs[..=k].iter().all(|&c| c >= 0) && coeffs[k] > 0 {
                        // Larger v only increases the violation.
                        break 'next;
                    }
                    continue 'next;
                }
            }
            rec(k + 1, n, sys, lo, hi, x, out);
        }
    }
    rec(0, n, &sys, &lo, &hi, &mut x, &mut out);
    out
}

/// Exact feasibility of `{λ ≥ 0 : Aλ = b}` by a phase-1 simplex with
/// Bland's rule (artificial variables start basic).
fn linear_feasible(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> bool {
    let m = a.len();
    let ncols = if m == 0 { return true } else { a[0].len() };
    for i in 0..m {
        if b[i] < Rational::zero() {
            for c in a[i].iter_mut() {
                *c = -c.clone();
            }
            b[i] = -b[i].clone();
        }
    }
    // Reduced costs for minimizing the artificial sum.
    let mut cost: Vec<Rational> =
        (0..ncols).map(|j| a.iter().map(|row| row[j].clone()).sum()).collect();
    let mut obj: Rational = b.iter().cloned().sum();
    // basis[i]: column index of the basic variable of row i; artificial
    // variables get indices ncols + i.
    let mut basis: Vec<usize> = (0..m).map(|i| ncols + i).collect();
    loop {
        let Some(e) = (0..ncols).find(|&j| cost[j] > Rational::zero()) else {
            break;
        };
        // Ratio test, ties broken by the smallest basic-variable index.
        let mut pivot: Option<usize> = None;
        for i in 0..m {
            if a[i][e] <= Rational::zero() {
                continue;
            }
            let better = match pivot {
                None => true,
                Some(p) => {
                    let ri = &b[i] / &a[i][e];
                    let rp = &b[p] / &a[p][e];
                    ri < rp || (ri == rp && basis[i] < basis[p])
                }
            };
            if better {
                pivot = Some(i);
            }
        }
        let p = pivot.expect("phase-1 objective is bounded below");
        // Pivot on (p, e).
        let inv = a[p][e].clone();
        for c in a[p].iter_mut() {
            *c = &*c / &inv;
        }
        b[p] = &b[p] / &inv;
        for i in 0..m {
            if i == p || a[i][e].is_zero() {
                continue;
            }
            let f = a[i][e].clone();
            for j in 0..ncols {
                let delta = &f * &a[p][j];
                a[i][j] = &a[i][j] - &delta;
            }
            b[i] = &b[i] - &f * &b[p];
        }
        if !cost[e].is_zero() {
            let f = cost[e].clone();
            for j in 0..ncols {
                let delta = &f * &a[p][j];
                cost[j] = &cost[j] - &delta;
            }
            obj = &obj - &f * &b[p];
        }
        basis[p] = e;
    }
    obj.is_zero()
}

/// True when `p` is not a convex combination of the other points of `set`.
pub fn is_extreme(p: &Point, set: &[Point]) -> bool {
    let n = p.dim();
    let others: Vec<&Point> = set.iter().filter(|q| *q != p).collect();
    if others.is_empty() {
        return true;
    }
    let mut a: Vec<Vec<Rational>> = Vec::with_capacity(n + 1);
    for i in 0..n {
        a.push(others.iter().map(|q| q.coord(i).clone()).collect());
    }
    a.push(vec![Rational::one(); others.len()]);
    let mut b: Vec<Rational> = p.coords().to_vec();
    b.push(Rational::one());
    !linear_feasible(a, b)
}

/// The affine dimension of a point set (−1 for the empty set).
pub fn affine_dim(points: &[&Point]) -> i64 {
    if points.is_empty() {
        return -1;
    }
    let base = points[0];
    let mut rows: Vec<Vec<Rational>> =
        points[1..].iter().map(|p| p.sub(base).coords().to_vec()).collect();
    // Gaussian elimination.
    let n = base.dim();
    let mut rank = 0usize;
    for col in 0..n {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].clone();
        for c in rows[rank].iter_mut() {
            *c = &*c / &inv;
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for j in 0..n {
                let delta = &f * &rows[rank][j];
                rows[r][j] = &rows[r][j] - &delta;
            }
        }
        rank += 1;
    }
    rank as i64
}

/// Oracle facet detection: the inequality is valid and its tight vertex
/// set has affine dimension `n − 1`.
pub fn oracle_is_facet(vertices: &[Point], q: &LinearInequality) -> bool {
    if !vertices.iter().all(|v| q.satisfied_by(v.coords())) {
        return false;
    }
    let tight: Vec<&Point> =
        vertices.iter().filter(|v| q.tight_at(v.coords())).collect();
    let n = vertices[0].dim() as i64;
    affine_dim(&tight) == n - 1
}

/// A face lattice rebuilt from vertex-facet incidence: faces are the
/// intersection-closed vertex sets, graded by affine dimension.
#[derive(Clone, Debug)]
pub struct OracleFaceLattice {
    /// Nonempty faces as (vertex index set, dimension), sorted by
    /// (dimension, vertex set).
    pub faces: Vec<(BTreeSet<usize>, usize)>,
    /// `(i, j)` when face `i` is covered by face `j`.
    pub covers: Vec<(usize, usize)>,
}

pub fn face_lattice_from_incidence(
    vertices: &[Point],
    ineqs: &[LinearInequality],
) -> OracleFaceLattice {
    let facet_sets: Vec<BTreeSet<usize>> = ineqs
        .iter()
        .filter(|q| oracle_is_facet(vertices, q))
        .map(|q| {
            (0..vertices.len())
                .filter(|&i| q.tight_at(vertices[i].coords()))
                .collect()
        })
        .collect();
    let full: BTreeSet<usize> = (0..vertices.len()).collect();
    let mut sets: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    sets.insert(full);
    // Closure under intersection with facet vertex sets.
    let mut frontier: Vec<BTreeSet<usize>> = sets.iter().cloned().collect();
    while let Some(s) = frontier.pop() {
        for f in &facet_sets {
            let inter: BTreeSet<usize> = s.intersection(f).cloned().collect();
            if !inter.is_empty() && sets.insert(inter.clone()) {
                frontier.push(inter);
            }
        }
    }
    let mut faces: Vec<(BTreeSet<usize>, usize)> = sets
        .into_iter()
        .map(|s| {
            let pts: Vec<&Point> = s.iter().map(|&i| &vertices[i]).collect();
            let d = affine_dim(&pts);
            (s, d as usize)
        })
        .collect();
    faces.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    let mut covers = Vec::new();
    for (i, (si, di)) in faces.iter().enumerate() {
        for (j, (sj, dj)) in faces.iter().enumerate() {
            if *dj == di + 1 && si.is_subset(sj) {
                covers.push((i, j));
            }
        }
    }
    OracleFaceLattice { faces, covers }
}

/// The f-vector `(f₀, …, f_d)` of the rebuilt lattice.
pub fn oracle_f_vector(vertices: &[Point], ineqs: &[LinearInequality]) -> Vec<u64> {
    let lat = face_lattice_from_incidence(vertices, ineqs);
    let top = lat.faces.iter().map(|f| f.1).max().unwrap_or(0);
    let mut f = vec![0u64; top + 1];
    for (_, d) in &lat.faces {
        f[*d] += 1;
    }
    f
}

/// All preposets reachable from `b` by repeatedly merging a cover pair of
/// equivalence classes (including `b` itself).
pub fn reachable_contractions(b: &Preposet) -> BTreeSet<Preposet> {
    let mut seen = BTreeSet::new();
    let mut stack = vec![b.clone()];
    seen.insert(b.clone());
    while let Some(p) = stack.pop() {
        for (x, y) in p.class_covers() {
            let q = p.merge(x, y);
            if seen.insert(q.clone()) {
                stack.push(q);
            }
        }
    }
    seen
}

/// BFS oracle for the contraction relation: is `c` obtainable from `b` by
/// a sequence of cover-pair merges?
pub fn contraction_search(c: &Preposet, b: &Preposet) -> bool {
    reachable_contractions(b).contains(c)
}

/// Pairwise sums of two vertex sets, filtered to the points in convex
/// position: the vertex set of the Minkowski sum.
pub fn minkowski_vertex_sum(a: &[Point], b: &[Point]) -> Vec<Point> {
    let mut sums: Vec<Point> = Vec::new();
    for p in a {
        for q in b {
            sums.push(p.add(q));
        }
    }
    sums.sort();
    sums.dedup();
    sums.iter().filter(|p| is_extreme(p, &sums)).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::parse_skewed_partition;
    use crate::poly::rat_int;
    use crate::polytope::{inequality_description, UVector};

    fn ineqs(u: &[i64]) -> Vec<LinearInequality> {
        inequality_description(&UVector::from_ints(u).unwrap())
    }

    #[test]
    fn lattice_counts() {
        // PF(1,2) has 8 lattice points; t = 0 leaves the origin.
        assert_eq!(lattice_count(&ineqs(&[1, 2]), 1), 8);
        assert_eq!(lattice_count(&ineqs(&[1, 2]), 0), 1);
        assert_eq!(lattice_count(&ineqs(&[1, 2]), 2), 22);
        // Cube: (td+1)^2.
        for t in 0..=3 {
            assert_eq!(lattice_count(&ineqs(&[3, 3]), t), ((3 * t as u64) + 1).pow(2));
        }
        // Monotone in t.
        let q = ineqs(&[0, 1, 2]);
        let counts: Vec<u64> = (0..4).map(|t| lattice_count(&q, t)).collect();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn extremeness() {
        let square = [
            Point::from_ints(&[0, 0]),
            Point::from_ints(&[0, 2]),
            Point::from_ints(&[2, 0]),
            Point::from_ints(&[2, 2]),
        ];
        for p in &square {
            assert!(is_extreme(p, &square));
        }
        let mut with_mid = square.to_vec();
        with_mid.push(Point::from_ints(&[1, 1]));
        assert!(!is_extreme(&Point::from_ints(&[1, 1]), &with_mid));
        // A boundary midpoint is not extreme either.
        with_mid.push(Point::from_ints(&[2, 1]));
        assert!(!is_extreme(&Point::from_ints(&[2, 1]), &with_mid));
    }

    #[test]
    fn face_lattice_square_and_pentagon() {
        let square = crate::polytope::vertices(
            &UVector::from_ints(&[2, 2]).unwrap().md_pair(),
        );
        assert_eq!(oracle_f_vector(&square, &ineqs(&[2, 2])), [4, 4, 1]);
        let pent = crate::polytope::vertices(
            &UVector::from_ints(&[1, 2]).unwrap().md_pair(),
        );
        assert_eq!(oracle_f_vector(&pent, &ineqs(&[1, 2])), [5, 5, 1]);
    }

    #[test]
    fn contraction_bfs() {
        let b = parse_skewed_partition("({0,2,3},{},{1,6,7},{8},{4,5})").unwrap().preposet();
        let d = parse_skewed_partition("({2,3},{0,7}*,{6},{1,8}*,{4,5})").unwrap().preposet();
        assert!(contraction_search(&d, &b));
        assert!(!contraction_search(&b, &d));
        assert!(contraction_search(&b, &b));
    }

    #[test]
    fn minkowski_sums() {
        let seg_x = [Point::from_ints(&[0, 0]), Point::from_ints(&[1, 0])];
        let seg_y = [Point::from_ints(&[0, 0]), Point::from_ints(&[0, 1])];
        let square = minkowski_vertex_sum(&seg_x, &seg_y);
        assert_eq!(square.len(), 4);
        // Adding the origin changes nothing.
        let same = minkowski_vertex_sum(&square, &[Point::zero(2)]);
        assert_eq!(same, square);
    }

    #[test]
    fn affine_dims() {
        let pts = [
            Point::from_ints(&[0, 0, 0]),
            Point::from_ints(&[1, 0, 0]),
            Point::from_ints(&[0, 1, 0]),
            Point::from_ints(&[2, 3, 0]),
        ];
        let refs: Vec<&Point> = pts.iter().collect();
        assert_eq!(affine_dim(&refs), 2);
        assert_eq!(affine_dim(&refs[..1]), 0);
        assert_eq!(affine_dim(&[]), -1);
        assert_eq!(rat_int(0), Rational::zero());
    }
}
