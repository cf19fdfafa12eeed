//! The even half-spinor space of a split 14-space built from two copies of
//! the octonion imaginary 7-space carrying opposite norms.
//!
//! The 14-space V splits as W ⊕ W~ with both summands maximal isotropic; the
//! even exterior algebra of W is a 64-dimensional module for the orthogonal
//! Lie algebra, realized here through creation / contraction (Clifford)
//! operators.  The module provides:
//!
//!  * the Pfaffian coordinate chart on the variety of maximal isotropic
//!    subspaces transverse to W,
//!  * the two-factor derivation-algebra action and the resulting splitting
//!    64 = 49 + 7 + 7 + 1,
//!  * the fourteen hyperplane equations cutting the 50-dimensional invariant
//!    subspace out of the chart, and the four-equation graph slice,
//!  * exact isometry graphs (group orbit points) used to certify the rank of
//!    the equations on the cut locus itself.

use crate::comp_alg;
use crate::g2_geom::{octonion_from_q_phi, SevenSpace};
use crate::mat::Mat;
use crate::sample::Sampler;
use crate::scalar::Scalar;
use std::fmt;

/// dimension of the even exterior algebra of a 7-space
pub const DIM_SPIN: usize = 64;
/// number of independent entries of a skew 7x7 matrix
pub const N_PAIRS: usize = 21;
/// dimension of each isotropic summand
pub const DIM_W: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinorError {
    /// the linear system for the solved chart coordinates is singular at the
    /// sampled free coordinates; the caller should re-sample
    SingularSystem,
    /// the isometry graph meets W, so it has no chart representative
    GraphNotTransverse,
}

impl fmt::Display for SpinorError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpinorError::SingularSystem => write!(f, "singular coordinate system; re-sample"),
            SpinorError::GraphNotTransverse => write!(f, "graph meets the reference isotropic"),
        }
    }
}

// ---------------------------------------------------------------------------
// subset bookkeeping
// ---------------------------------------------------------------------------

/// even-cardinality subsets of {0,..,6}, ordered by size then lexicographically
pub fn even_subsets() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in [0usize, 2, 4, 6] {
        out.extend(fixed_size_subsets(size));
    }
    out
}

/// odd-cardinality subsets in the same ordering
pub fn odd_subsets() -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for size in [1usize, 3, 5, 7] {
        out.extend(fixed_size_subsets(size));
    }
    out
}

fn fixed_size_subsets(size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if size == 0 {
        out.push(Vec::new());
        return out;
    }
    let mut combo: Vec<usize> = (0..size).collect();
    loop {
        out.push(combo.clone());
        let mut i = size;
        let mut advanced = false;
        while i > 0 {
            i -= 1;
            if combo[i] + 1 <= DIM_W - (size - i) {
                combo[i] += 1;
                for j in i + 1..size {
                    combo[j] = combo[j - 1] + 1;
                }
                advanced = true;
                break;
            }
        }
        if !advanced {
            return out;
        }
    }
}

/// position of a sorted subset in the given ordered list
pub fn subset_position(list: &[Vec<usize>], s: &[usize]) -> usize {
    list.iter().position(|t| t == s).expect("subset not in list")
}

/// the 21 index pairs (i, j), i < j, in lexicographic order
pub fn pair_list() -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..DIM_W {
        for j in i + 1..DIM_W {
            out.push((i, j));
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the Pfaffian chart
// ---------------------------------------------------------------------------

/// skew-symmetric 7x7 parameter matrix of the big chart
#[derive(Clone)]
pub struct SkewParam {
    pub m: Mat,
}

impl SkewParam {
    pub fn zero() -> SkewParam {
        SkewParam { m: Mat::zero(DIM_W, DIM_W) }
    }

    /// build from the 21 upper-triangular entries in lexicographic pair order
    pub fn from_upper(vals: &[Scalar]) -> SkewParam {
        assert_eq!(vals.len(), N_PAIRS);
        let mut m = Mat::zero(DIM_W, DIM_W);
        for (k, (i, j)) in pair_list().into_iter().enumerate() {
            *m.at_mut(i, j) = vals[k].clone();
            *m.at_mut(j, i) = -vals[k].clone();
        }
        SkewParam { m }
    }

    pub fn upper(&self) -> Vec<Scalar> {
        pair_list().into_iter().map(|(i, j)| self.m.at(i, j).clone()).collect()
    }

    fn pf(&self, idx: &[usize]) -> Scalar {
        self.m.pfaffian(idx).expect("principal Pfaffian of a skew matrix")
    }
}

/// a vector of the 64-dimensional even half-spinor space, indexed by
/// `even_subsets()`
#[derive(Clone)]
pub struct EvenForms {
    pub coeffs: Vec<Scalar>,
}

impl EvenForms {
    pub fn zero() -> EvenForms {
        EvenForms { coeffs: vec![Scalar::zero(); DIM_SPIN] }
    }
}

/// coordinates of the chart point with parameter matrix p: the coordinate at
/// an even subset S is the Pfaffian of the principal minor of p on S, and the
/// coordinate at the empty set is 1
pub fn pfaffian_chart(p: &SkewParam) -> EvenForms {
    let coeffs = even_subsets().iter().map(|s| p.pf(s)).collect();
    EvenForms { coeffs }
}

// ---------------------------------------------------------------------------
// hyperplane equations of the invariant 50-space
// ---------------------------------------------------------------------------

/// support pairs (small subset, large subset) of the fourteen functionals
/// annihilating the 50-dimensional invariant subspace; each functional is
/// (coordinate at large) - (coordinate at small).  Subsets use 0-based
/// indices into the ordered isotropic basis.
pub fn hyperplane_supports() -> Vec<(Vec<usize>, Vec<usize>)> {
    vec![
        (vec![3, 4], vec![0, 1, 2, 4]),
        (vec![3, 5], vec![0, 1, 2, 5]),
        (vec![3, 6], vec![0, 1, 2, 6]),
        (vec![0, 3], vec![0, 4, 5, 6]),
        (vec![1, 3], vec![1, 4, 5, 6]),
        (vec![2, 3], vec![2, 4, 5, 6]),
        (vec![0, 1, 2, 3], vec![3, 4, 5, 6]),
        (vec![4, 5], vec![0, 1, 2, 3, 4, 5]),
        (vec![4, 6], vec![0, 1, 2, 3, 4, 6]),
        (vec![5, 6], vec![0, 1, 2, 3, 5, 6]),
        (vec![], vec![0, 1, 2, 4, 5, 6]),
        (vec![0, 1], vec![0, 1, 3, 4, 5, 6]),
        (vec![0, 2], vec![0, 2, 3, 4, 5, 6]),
        (vec![1, 2], vec![1, 2, 3, 4, 5, 6]),
    ]
}

/// the fourteen annihilating functionals as 64-vectors
pub fn hyperplane_functionals() -> Vec<Vec<Scalar>> {
    let evens = even_subsets();
    hyperplane_supports()
        .into_iter()
        .map(|(small, big)| {
            let mut f = vec![Scalar::zero(); DIM_SPIN];
            f[subset_position(&evens, &small)] = -Scalar::one();
            f[subset_position(&evens, &big)] = Scalar::one();
            f
        })
        .collect()
}

/// the fourteen hyperplane residuals evaluated on the chart
pub fn hyperplane_residuals(p: &SkewParam) -> Vec<Scalar> {
    hyperplane_supports()
        .into_iter()
        .map(|(small, big)| p.pf(&big) - p.pf(&small))
        .collect()
}

/// the four graph equations: the three two-index coordinates over {1,2,3}
/// equated with their complementary 6-subset Pfaffians, and the coordinate
/// (4,7) equated with the Pfaffian over {1,2,3,7} (1-based labels)
pub fn v1_equations(p: &SkewParam) -> Vec<Scalar> {
    vec![
        p.m.at(0, 1).clone() - p.pf(&[0, 1, 3, 4, 5, 6]),
        p.m.at(0, 2).clone() - p.pf(&[0, 2, 3, 4, 5, 6]),
        p.m.at(1, 2).clone() - p.pf(&[1, 2, 3, 4, 5, 6]),
        p.m.at(3, 6).clone() - p.pf(&[0, 1, 2, 6]),
    ]
}

/// the fourth equation in its originally quoted form, x_{4,7} - [1,2,3,4];
/// this is not the restriction of any functional annihilating the invariant
/// 50-space (the subset should read [1,2,3,7]) and it does not vanish at
/// generic points of the cut locus
pub fn quoted_fourth_residual(p: &SkewParam) -> Scalar {
    p.m.at(3, 6).clone() - p.pf(&[0, 1, 2, 3])
}

/// chart coordinates solved by `solve_graph` (0-based pairs)
pub const SOLVED_PAIRS: [(usize, usize); 4] = [(0, 6), (1, 6), (2, 6), (3, 6)];

/// the 17 free coordinates of the graph slice, in lexicographic pair order
pub fn free_pairs() -> Vec<(usize, usize)> {
    pair_list().into_iter().filter(|p| !SOLVED_PAIRS.contains(p)).collect()
}

/// Solve the four graph equations for the four column-7 coordinates
/// x_{1,7}, x_{2,7}, x_{3,7}, x_{4,7} at the given 17 free coordinates.
///
/// Every Pfaffian monomial appearing in the four residuals uses index 7
/// exactly once, so the system is affine-linear in the solved coordinates
/// and one exact 4x4 solve suffices.  (The three coordinates x_{1,2},
/// x_{1,3}, x_{2,3} cannot serve as solved variables: eliminating them
/// leaves a quadratic with generically irrational roots.)
pub fn solve_graph(free: &[Scalar]) -> Result<SkewParam, SpinorError> {
    assert_eq!(free.len(), 17);
    let fp = free_pairs();
    let build = |unknowns: &[Scalar]| -> SkewParam {
        let pairs = pair_list();
        let mut vals = vec![Scalar::zero(); N_PAIRS];
        for (k, pair) in pairs.iter().enumerate() {
            if let Some(fi) = fp.iter().position(|q| q == pair) {
                vals[k] = free[fi].clone();
            } else {
                let si = SOLVED_PAIRS.iter().position(|q| q == pair).unwrap();
                vals[k] = unknowns[si].clone();
            }
        }
        SkewParam::from_upper(&vals)
    };
    let zeros = vec![Scalar::zero(); 4];
    let r0 = v1_equations(&build(&zeros));
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for k in 0..4 {
        let mut unk = zeros.clone();
        unk[k] = Scalar::one();
        let rk = v1_equations(&build(&unk));
        cols.push((0..4).map(|i| rk[i].clone() - r0[i].clone()).collect());
    }
    let sys = Mat::from_fn(4, 4, |i, j| cols[j][i].clone());
    if sys.rank() < 4 {
        return Err(SpinorError::SingularSystem);
    }
    let rhs: Vec<Scalar> = r0.iter().map(|r| -r.clone()).collect();
    let sol = sys
        .solve(&rhs)
        .expect("well-formed 4x4 system")
        .expect("full-rank system is consistent");
    let point = build(&sol);
    debug_assert!(v1_equations(&point).iter().all(|r| r.is_zero()));
    Ok(point)
}

// ---------------------------------------------------------------------------
// Jacobians of the chart residuals
// ---------------------------------------------------------------------------

/// d Pf(p_S) / d x_{a,b} = (-1)^{i+j+1} Pf(p_{S minus {a,b}}) where i < j are
/// the 1-based positions of a and b inside the sorted subset S (zero when a
/// or b is not in S)
fn pfaffian_partial(p: &SkewParam, s: &[usize], a: usize, b: usize) -> Scalar {
    let (ia, ib) = match (s.iter().position(|&x| x == a), s.iter().position(|&x| x == b)) {
        (Some(x), Some(y)) => (x + 1, y + 1),
        _ => return Scalar::zero(),
    };
    let rest: Vec<usize> = s.iter().copied().filter(|&x| x != a && x != b).collect();
    let sign = if (ia + ib + 1) % 2 == 0 { Scalar::from_int(-1) } else { Scalar::one() };
    sign * p.pf(&rest)
}

/// Jacobian of the four graph residuals with respect to the 21 chart
/// coordinates
pub fn graph_jacobian(p: &SkewParam) -> Mat {
    let rows: Vec<(Vec<usize>, Vec<usize>)> = vec![
        (vec![0, 1], vec![0, 1, 3, 4, 5, 6]),
        (vec![0, 2], vec![0, 2, 3, 4, 5, 6]),
        (vec![1, 2], vec![1, 2, 3, 4, 5, 6]),
        (vec![3, 6], vec![0, 1, 2, 6]),
    ];
    residual_jacobian(p, &rows)
}

/// Jacobian of all fourteen hyperplane residuals with respect to the 21
/// chart coordinates
pub fn full_jacobian(p: &SkewParam) -> Mat {
    let rows: Vec<(Vec<usize>, Vec<usize>)> =
        hyperplane_supports().into_iter().map(|(small, big)| (small, big)).collect();
    residual_jacobian(p, &rows)
}

fn residual_jacobian(p: &SkewParam, rows: &[(Vec<usize>, Vec<usize>)]) -> Mat {
    let pairs = pair_list();
    Mat::from_fn(rows.len(), N_PAIRS, |r, c| {
        let (a, b) = pairs[c];
        let (small, big) = &rows[r];
        // residual = Pf(small) - Pf(big) up to overall sign; ranks are
        // insensitive to it, but keep small-minus-big to match the residual
        pfaffian_partial(p, small, a, b) - pfaffian_partial(p, big, a, b)
    })
}

// ---------------------------------------------------------------------------
// the split basis and the spin representation
// ---------------------------------------------------------------------------

/// pairing constants P_i = B(w_i, w~_i) of the split basis
pub fn isotropic_pairings() -> Vec<Scalar> {
    [-2i64, -2, -2, 1, 2, 2, 2].iter().map(|&n| Scalar::from_int(n)).collect()
}

/// The 14x14 matrix whose columns express the split basis
/// (w_1..w_7, w~_1..w~_7) in the concatenated coordinates of the two
/// 7-space copies (weight order e_{-3}..e_3 in each factor).
///
/// w_i = e_i/2 for i = 1,2,3; w_4 = (e_0 + f_0)/2; w_5 = f_1/2, w_6 = f_2/2,
/// w_7 = -f_3/2; w~_i = 2 e_{-i}; w~_4 = e_0 - f_0; w~_5 = 2 f_{-1},
/// w~_6 = 2 f_{-2}, w~_7 = -2 f_{-3}.  The diagonal half/double scalings and
/// the sign on the third second-factor pair normalize every invariant
/// functional of the 50-space to an exact coordinate difference.
pub fn split_basis() -> Mat {
    let mut m = Mat::zero(14, 14);
    let half = Scalar::from_frac(1, 2);
    let two = Scalar::from_int(2);
    // first factor occupies coordinates 0..7 (e_{-3}..e_3), second 7..14
    let e = |k: i32| (k + 3) as usize;
    let f = |k: i32| 7 + (k + 3) as usize;
    // w_1, w_2, w_3
    for i in 0..3 {
        *m.at_mut(e(i as i32 + 1), i) = half.clone();
    }
    // w_4 = (e_0 + f_0)/2
    *m.at_mut(e(0), 3) = half.clone();
    *m.at_mut(f(0), 3) = half.clone();
    // w_5, w_6, w_7
    *m.at_mut(f(1), 4) = half.clone();
    *m.at_mut(f(2), 5) = half.clone();
    *m.at_mut(f(3), 6) = -half.clone();
    // w~_1, w~_2, w~_3
    for i in 0..3 {
        *m.at_mut(e(-(i as i32) - 1), 7 + i) = two.clone();
    }
    // w~_4 = e_0 - f_0
    *m.at_mut(e(0), 10) = Scalar::one();
    *m.at_mut(f(0), 10) = -Scalar::one();
    // w~_5, w~_6, w~_7
    *m.at_mut(f(-1), 11) = two.clone();
    *m.at_mut(f(-2), 12) = two.clone();
    *m.at_mut(f(-3), 13) = -two.clone();
    m
}

fn invert(m: &Mat) -> Mat {
    let n = m.rows;
    let mut cols: Vec<Vec<Scalar>> = Vec::with_capacity(n);
    for j in 0..n {
        let mut e = vec![Scalar::zero(); n];
        e[j] = Scalar::one();
        let col = m.solve(&e).expect("square system").expect("invertible matrix");
        cols.push(col);
    }
    Mat::from_fn(n, n, |i, j| cols[j][i].clone())
}

/// creation / contraction term list of the Clifford operator of a vector
/// given in split coordinates: w-components wedge, w~-components contract
/// with weight 2 P_i (so that the anticommutator realizes twice the bilinear
/// form)
fn clifford_terms(v: &[Scalar]) -> Vec<(bool, usize, Scalar)> {
    let p = isotropic_pairings();
    let mut terms = Vec::new();
    for i in 0..DIM_W {
        if !v[i].is_zero() {
            terms.push((true, i, v[i].clone()));
        }
    }
    for i in 0..DIM_W {
        if !v[7 + i].is_zero() {
            terms.push((false, i, v[7 + i].clone() * Scalar::from_int(2) * p[i].clone()));
        }
    }
    terms
}

fn wedge_subset(i: usize, s: &[usize]) -> Option<(Vec<usize>, i64)> {
    if s.contains(&i) {
        return None;
    }
    let cnt = s.iter().filter(|&&x| x < i).count();
    let mut t: Vec<usize> = s.to_vec();
    t.push(i);
    t.sort_unstable();
    Some((t, if cnt % 2 == 0 { 1 } else { -1 }))
}

fn contract_subset(i: usize, s: &[usize]) -> Option<(Vec<usize>, i64)> {
    if !s.contains(&i) {
        return None;
    }
    let cnt = s.iter().filter(|&&x| x < i).count();
    let t: Vec<usize> = s.iter().copied().filter(|&x| x != i).collect();
    Some((t, if cnt % 2 == 0 { 1 } else { -1 }))
}

fn apply_terms(
    terms: &[(bool, usize, Scalar)],
    s: &[usize],
) -> Vec<(Vec<usize>, Scalar)> {
    let mut out = Vec::new();
    for (wedge, i, c) in terms {
        let r = if *wedge { wedge_subset(*i, s) } else { contract_subset(*i, s) };
        if let Some((t, sign)) = r {
            out.push((t, c.clone() * Scalar::from_int(sign)));
        }
    }
    out
}

/// the composite c(x) c(y) restricted to the even part, as a 64x64 matrix
fn clifford_pair(x: &[Scalar], y: &[Scalar], evens: &[Vec<usize>]) -> Mat {
    let tx = clifford_terms(x);
    let ty = clifford_terms(y);
    let mut m = Mat::zero(DIM_SPIN, DIM_SPIN);
    for (j, s) in evens.iter().enumerate() {
        for (t, c1) in apply_terms(&ty, s) {
            for (u, c2) in apply_terms(&tx, &t) {
                let i = subset_position(evens, &u);
                *m.at_mut(i, j) += c2 * c1.clone();
            }
        }
    }
    m
}

/// The spin model: the octonion derivation algebra together with the split
/// basis data needed to act on the 64-space.
pub struct SpinModel {
    /// the 14 derivation matrices restricted to the imaginary 7-space
    pub derivations: Vec<Mat>,
    /// split basis in two-factor coordinates (columns)
    pub from_split: Mat,
    /// inverse: two-factor coordinates to split coordinates
    pub to_split: Mat,
    evens: Vec<Vec<usize>>,
    odds: Vec<Vec<usize>>,
}

impl SpinModel {
    pub fn new() -> SpinModel {
        let space = SevenSpace::normalized();
        let alg = octonion_from_q_phi(&space).expect("normalized data is a composition algebra");
        let ders = comp_alg::derivations(&alg);
        let derivations: Vec<Mat> = ders
            .iter()
            .map(|d| Mat::from_fn(DIM_W, DIM_W, |i, j| d.at(i + 1, j + 1).clone()))
            .collect();
        let from_split = split_basis();
        let to_split = invert(&from_split);
        SpinModel {
            derivations,
            from_split,
            to_split,
            evens: even_subsets(),
            odds: odd_subsets(),
        }
    }

    /// embed a 7x7 matrix acting on one factor into the orthogonal algebra of
    /// the 14-space, expressed in split coordinates (factor is 0 or 1)
    pub fn so_embedding(&self, d: &Mat, factor: usize) -> Mat {
        let block = Mat::from_fn(14, 14, |i, j| {
            let off = 7 * factor;
            if i >= off && i < off + 7 && j >= off && j < off + 7 {
                d.at(i - off, j - off).clone()
            } else {
                Scalar::zero()
            }
        });
        self.to_split.mul(&block).mul(&self.from_split)
    }

    /// the action of an orthogonal 14x14 matrix (split coordinates) on the
    /// even half-spinor space: one eighth of the sum over the full split
    /// basis of the commutators [c(A b_k), c(b^k)], where b^k is the
    /// B-dual basis vector
    pub fn spin_action(&self, a: &Mat) -> Mat {
        let p = isotropic_pairings();
        let mut acc = Mat::zero(DIM_SPIN, DIM_SPIN);
        for k in 0..14 {
            let abk: Vec<Scalar> = (0..14).map(|i| a.at(i, k).clone()).collect();
            let mut dual = vec![Scalar::zero(); 14];
            let (slot, pi) = if k < 7 { (7 + k, p[k].clone()) } else { (k - 7, p[k - 7].clone()) };
            dual[slot] = pi.inv();
            let fwd = clifford_pair(&abk, &dual, &self.evens);
            let bwd = clifford_pair(&dual, &abk, &self.evens);
            for i in 0..DIM_SPIN {
                for j in 0..DIM_SPIN {
                    let d = fwd.at(i, j).clone() - bwd.at(i, j).clone();
                    if !d.is_zero() {
                        *acc.at_mut(i, j) += d;
                    }
                }
            }
        }
        let eighth = Scalar::from_frac(1, 8);
        Mat::from_fn(DIM_SPIN, DIM_SPIN, |i, j| eighth.clone() * acc.at(i, j).clone())
    }

    /// the Clifford operator of a 14-vector (split coordinates) from the even
    /// to the odd part, as a 64x64 matrix in the subset orderings
    pub fn clifford_even_to_odd(&self, v: &[Scalar]) -> Mat {
        let terms = clifford_terms(v);
        let mut m = Mat::zero(DIM_SPIN, DIM_SPIN);
        for (j, s) in self.evens.iter().enumerate() {
            for (t, c) in apply_terms(&terms, s) {
                let i = subset_position(&self.odds, &t);
                *m.at_mut(i, j) += c;
            }
        }
        m
    }

    /// spin action of the k-th derivation embedded in the given factor
    pub fn factor_action(&self, k: usize, factor: usize) -> Mat {
        self.spin_action(&self.so_embedding(&self.derivations[k], factor))
    }
}

impl Default for SpinModel {
    fn default() -> Self {
        SpinModel::new()
    }
}

// ---------------------------------------------------------------------------
// the splitting 64 = 49 + 7 + 7 + 1
// ---------------------------------------------------------------------------

fn common_kernel(ms: &[Mat]) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    for m in ms {
        for i in 0..m.rows {
            rows.push(m.row(i));
        }
    }
    Mat::from_rows(rows).kernel()
}

/// basis of the sum of the column spans
fn image_span(ms: &[Mat]) -> Vec<Vec<Scalar>> {
    let mut rows = Vec::new();
    for m in ms {
        for j in 0..m.cols {
            rows.push((0..m.rows).map(|i| m.at(i, j).clone()).collect());
        }
    }
    row_basis(rows)
}

fn row_basis(rows: Vec<Vec<Scalar>>) -> Vec<Vec<Scalar>> {
    if rows.is_empty() {
        return rows;
    }
    let cols = rows[0].len();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut r in rows {
        for (b, &pj) in basis.iter().zip(&pivots) {
            if !r[pj].is_zero() {
                let f = r[pj].clone();
                for c in 0..cols {
                    let delta = f.clone() * b[c].clone();
                    r[c] = r[c].clone() - delta;
                }
            }
        }
        if let Some(pj) = (0..cols).find(|&c| !r[c].is_zero()) {
            let inv = r[pj].clone().inv();
            for c in 0..cols {
                r[c] = r[c].clone() * inv.clone();
            }
            basis.push(r);
            pivots.push(pj);
        }
    }
    basis
}

/// basis of the intersection of two spans
fn span_intersection(a: &[Vec<Scalar>], b: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let n = a[0].len();
    let m = Mat::from_fn(n, a.len() + b.len(), |i, j| {
        if j < a.len() { a[j][i].clone() } else { -b[j - a.len()][i].clone() }
    });
    let mut out = Vec::new();
    for k in m.kernel() {
        let mut v = vec![Scalar::zero(); n];
        for (j, av) in a.iter().enumerate() {
            if !k[j].is_zero() {
                for i in 0..n {
                    v[i] += k[j].clone() * av[i].clone();
                }
            }
        }
        if v.iter().any(|c| !c.is_zero()) {
            out.push(v);
        }
    }
    row_basis(out)
}

/// the four invariant summands of the even half-spinor space
pub struct SpinDecomposition {
    /// 49-dimensional tensor-product summand
    pub tensor: Vec<Vec<Scalar>>,
    /// 7-dimensional summand acted on by the first factor only
    pub first: Vec<Vec<Scalar>>,
    /// 7-dimensional summand acted on by the second factor only
    pub second: Vec<Vec<Scalar>>,
    /// the invariant line, normalized to coefficient 1 at the empty subset
    pub trivial: Vec<Scalar>,
}

/// Compute the splitting from the two factor actions: the tensor summand is
/// the intersection of the two image spans, each 7-dimensional summand is
/// the part of one factor's image fixed by the other factor, and the trivial
/// line is the common kernel of all 28 operators.
pub fn decomposition(model: &SpinModel) -> SpinDecomposition {
    let t1: Vec<Mat> = (0..14).map(|k| model.factor_action(k, 0)).collect();
    let t2: Vec<Mat> = (0..14).map(|k| model.factor_action(k, 1)).collect();
    let fix1 = common_kernel(&t1);
    let fix2 = common_kernel(&t2);
    let n1 = image_span(&t1);
    let n2 = image_span(&t2);
    let first = span_intersection(&fix2, &n1);
    let second = span_intersection(&fix1, &n2);
    let tensor = span_intersection(&n1, &n2);
    let line = span_intersection(&fix1, &fix2);
    assert_eq!(line.len(), 1, "invariant line is one-dimensional");
    let evens = even_subsets();
    let c0 = line[0][subset_position(&evens, &[])].clone();
    assert!(!c0.is_zero());
    let inv = c0.inv();
    let trivial = line[0].iter().map(|c| c.clone() * inv.clone()).collect();
    SpinDecomposition { tensor, first, second, trivial }
}

fn two_term(small: &[usize], big: &[usize], sign: i64) -> Vec<Scalar> {
    let evens = even_subsets();
    let mut v = vec![Scalar::zero(); DIM_SPIN];
    v[subset_position(&evens, small)] = Scalar::one();
    v[subset_position(&evens, big)] = Scalar::from_int(sign);
    v
}

/// frozen basis of the 7-dimensional first-factor summand
pub fn first_factor_vectors() -> Vec<Vec<Scalar>> {
    let evens = even_subsets();
    let mut v0 = vec![Scalar::zero(); DIM_SPIN];
    for (s, c) in [
        (vec![], 1i64),
        (vec![0, 1, 2, 3], 1),
        (vec![3, 4, 5, 6], -1),
        (vec![0, 1, 2, 4, 5, 6], -1),
    ] {
        v0[subset_position(&evens, &s)] = Scalar::from_int(c);
    }
    vec![
        v0,
        two_term(&[0, 1], &[0, 1, 3, 4, 5, 6], -1),
        two_term(&[0, 2], &[0, 2, 3, 4, 5, 6], -1),
        two_term(&[0, 3], &[0, 4, 5, 6], -1),
        two_term(&[1, 2], &[1, 2, 3, 4, 5, 6], -1),
        two_term(&[1, 3], &[1, 4, 5, 6], -1),
        two_term(&[2, 3], &[2, 4, 5, 6], -1),
    ]
}

/// frozen basis of the 7-dimensional second-factor summand
pub fn second_factor_vectors() -> Vec<Vec<Scalar>> {
    let evens = even_subsets();
    let mut v0 = vec![Scalar::zero(); DIM_SPIN];
    for (s, c) in [
        (vec![], 1i64),
        (vec![0, 1, 2, 3], -1),
        (vec![3, 4, 5, 6], 1),
        (vec![0, 1, 2, 4, 5, 6], -1),
    ] {
        v0[subset_position(&evens, &s)] = Scalar::from_int(c);
    }
    vec![
        v0,
        two_term(&[3, 4], &[0, 1, 2, 4], -1),
        two_term(&[3, 5], &[0, 1, 2, 5], -1),
        two_term(&[3, 6], &[0, 1, 2, 6], -1),
        two_term(&[4, 5], &[0, 1, 2, 3, 4, 5], -1),
        two_term(&[4, 6], &[0, 1, 2, 3, 4, 6], -1),
        two_term(&[5, 6], &[0, 1, 2, 3, 5, 6], -1),
    ]
}

/// frozen invariant-line vector (normalized at the empty subset)
pub fn trivial_vector() -> Vec<Scalar> {
    let evens = even_subsets();
    let mut v = vec![Scalar::zero(); DIM_SPIN];
    for (s, c) in [
        (vec![], 1i64),
        (vec![0, 1, 2, 3], -1),
        (vec![3, 4, 5, 6], -1),
        (vec![0, 1, 2, 4, 5, 6], 1),
    ] {
        v[subset_position(&evens, &s)] = Scalar::from_int(c);
    }
    v
}

/// dimension bookkeeping of the splitting
pub struct DecompositionAudit {
    pub dim_tensor: usize,
    pub dim_first: usize,
    pub dim_second: usize,
    pub dim_trivial: usize,
    /// rank of the 7 + 7 + 1 frozen explicit vectors
    pub explicit_rank: usize,
    /// each single factor contributes an 8-dimensional fixed space: 8 = 7 + 1
    pub factor_fixed_dim: usize,
}

pub fn decomposition_audit(model: &SpinModel) -> DecompositionAudit {
    let dec = decomposition(model);
    let mut explicit = first_factor_vectors();
    explicit.extend(second_factor_vectors());
    explicit.push(trivial_vector());
    let t2: Vec<Mat> = (0..14).map(|k| model.factor_action(k, 1)).collect();
    DecompositionAudit {
        dim_tensor: dec.tensor.len(),
        dim_first: dec.first.len(),
        dim_second: dec.second.len(),
        dim_trivial: 1,
        explicit_rank: Mat::from_rows(explicit).rank(),
        factor_fixed_dim: common_kernel(&t2).len(),
    }
}

// ---------------------------------------------------------------------------
// exact group elements and orbit chart points
// ---------------------------------------------------------------------------

/// The twelve nilpotent root vectors of the derivation algebra with respect
/// to its diagonal (weight-grading) torus, acting on the imaginary 7-space.
pub fn nilpotent_root_vectors(ders: &[Mat]) -> Vec<Mat> {
    let n = ders.len();
    // coefficients making a combination diagonal
    let mut rows = Vec::new();
    for i in 0..DIM_W {
        for j in 0..DIM_W {
            if i != j {
                rows.push((0..n).map(|k| ders[k].at(i, j).clone()).collect());
            }
        }
    }
    let cartan_coeffs = Mat::from_rows(rows).kernel();
    assert_eq!(cartan_coeffs.len(), 2, "diagonal subalgebra has rank two");
    let combo = |c: &[Scalar]| -> Mat {
        Mat::from_fn(DIM_W, DIM_W, |i, j| {
            let mut acc = Scalar::zero();
            for k in 0..n {
                acc += c[k].clone() * ders[k].at(i, j).clone();
            }
            acc
        })
    };
    let h1 = combo(&cartan_coeffs[0]);
    let h2 = combo(&cartan_coeffs[1]);
    // group matrix positions by their weight under (h1, h2)
    let mut weights: Vec<(Scalar, Scalar)> = Vec::new();
    let mut positions: Vec<Vec<(usize, usize)>> = Vec::new();
    for i in 0..DIM_W {
        for j in 0..DIM_W {
            if i == j {
                continue;
            }
            let w = (
                h1.at(i, i).clone() - h1.at(j, j).clone(),
                h2.at(i, i).clone() - h2.at(j, j).clone(),
            );
            if w.0.is_zero() && w.1.is_zero() {
                continue;
            }
            if let Some(k) = weights.iter().position(|u| u.0 == w.0 && u.1 == w.1) {
                positions[k].push((i, j));
            } else {
                weights.push(w);
                positions.push(vec![(i, j)]);
            }
        }
    }
    let mut roots = Vec::new();
    for poss in &positions {
        // combinations supported on this weight's positions with zero diagonal
        let mut sys = Vec::new();
        for i in 0..DIM_W {
            for j in 0..DIM_W {
                if i != j && !poss.contains(&(i, j)) {
                    sys.push((0..n).map(|k| ders[k].at(i, j).clone()).collect::<Vec<_>>());
                }
            }
        }
        for i in 0..DIM_W {
            sys.push((0..n).map(|k| ders[k].at(i, i).clone()).collect());
        }
        for c in Mat::from_rows(sys).kernel() {
            let x = combo(&c);
            if (0..DIM_W).any(|i| (0..DIM_W).any(|j| !x.at(i, j).is_zero())) {
                roots.push(x);
            }
        }
    }
    assert_eq!(roots.len(), 12, "twelve root spaces");
    roots
}

/// exact exponential of a nilpotent matrix times a scalar
pub fn exp_nilpotent(nil: &Mat, t: &Scalar) -> Mat {
    let n = nil.rows;
    let mut out = Mat::identity(n);
    let mut term = Mat::identity(n);
    let mut k: i64 = 1;
    loop {
        let scaled = Mat::from_fn(n, n, |i, j| {
            t.clone() * term.at(i, j).clone() * Scalar::from_frac(1, k)
        });
        term = scaled.mul(nil);
        if (0..n).all(|i| (0..n).all(|j| term.at(i, j).is_zero())) {
            break;
        }
        for i in 0..n {
            for j in 0..n {
                *out.at_mut(i, j) += term.at(i, j).clone();
            }
        }
        k += 1;
        assert!(k < 32, "matrix is not nilpotent");
    }
    out
}

/// a random product of exponentials of root vectors: an exact isometry in
/// the automorphism group of the octonions
pub fn random_group_element(roots: &[Mat], s: &mut Sampler, factors: usize) -> Mat {
    let mut g = Mat::identity(DIM_W);
    for _ in 0..factors {
        // pick a root vector and a small rational parameter
        let pick = {
            let r = s.rational();
            // map a random rational to an index deterministically
            let num = format!("{:?}", r);
            (num.len() * 7 + num.bytes().map(|b| b as usize).sum::<usize>()) % roots.len()
        };
        let t = s.rational();
        g = g.mul(&exp_nilpotent(&roots[pick], &t));
    }
    g
}

/// The chart representative of the graph of an isometry g of the 7-space:
/// the isotropic 14-space span{(v, gv)} expressed through the split basis,
/// its pure spinor computed as the common kernel of the seven Clifford
/// operators, normalized at the empty subset, and returned as the skew
/// parameter matrix read off the two-index coordinates.  The returned
/// spinor's coordinates equal the Pfaffians of the parameter matrix (checked
/// exactly), so the point lies in the chart image.
pub fn graph_chart_point(
    model: &SpinModel,
    g: &Mat,
) -> Result<(SkewParam, EvenForms), SpinorError> {
    // graph vectors in split coordinates
    let mut graph: Vec<Vec<Scalar>> = Vec::with_capacity(DIM_W);
    for k in 0..DIM_W {
        let mut v = vec![Scalar::zero(); 14];
        v[k] = Scalar::one();
        for i in 0..DIM_W {
            v[7 + i] = g.at(i, k).clone();
        }
        graph.push(model.to_split.mul_vec(&v));
    }
    // transversality to W: the w~-block must be invertible
    let blk = Mat::from_fn(DIM_W, DIM_W, |i, j| graph[i][7 + j].clone());
    if blk.rank() < DIM_W {
        return Err(SpinorError::GraphNotTransverse);
    }
    // pure spinor: common kernel of the Clifford operators of the graph
    let mut rows = Vec::new();
    for v in &graph {
        let c = model.clifford_even_to_odd(v);
        for i in 0..DIM_SPIN {
            rows.push(c.row(i));
        }
    }
    let ker = Mat::from_rows(rows).kernel();
    assert_eq!(ker.len(), 1, "pure spinor line is one-dimensional");
    let evens = even_subsets();
    let c0 = ker[0][subset_position(&evens, &[])].clone();
    if c0.is_zero() {
        return Err(SpinorError::GraphNotTransverse);
    }
    let inv = c0.inv();
    let coeffs: Vec<Scalar> = ker[0].iter().map(|c| c.clone() * inv.clone()).collect();
    let vals: Vec<Scalar> = pair_list()
        .into_iter()
        .map(|(i, j)| coeffs[subset_position(&evens, &[i, j])].clone())
        .collect();
    let p = SkewParam::from_upper(&vals);
    let chart = pfaffian_chart(&p);
    assert!(
        chart.coeffs.iter().zip(&coeffs).all(|(a, b)| a == b),
        "spinor coordinates are the Pfaffians of the parameter matrix"
    );
    Ok((p, EvenForms { coeffs }))
}
