//! Octonions rebuilt from a quadratic form and a 3-form on a 7-space, the
//! associator map on the third wedge power, and the chart of 3-planes whose
//! unital span is a quaternion subalgebra.
//!
//! Basis labels run -3..3 (stored at positions 0..6, so label k sits at
//! k + 3).  The 8-dimensional algebra puts the unit first and then the seven
//! imaginary basis vectors in the same order.

use crate::comp_alg::{
    associator, elem, is_quaternion_subalgebra, one, subalgebra_closure, Alg, AlgElement,
    CompositionAlgebra,
};
use crate::mat::Mat;
use crate::scalar::{Rat, Scalar};
use num_traits::Signed;

pub const DIM_V: usize = 7;
pub const DIM_W3: usize = 35;

/// position of basis label k in -3..3
pub fn pos(k: i32) -> usize {
    (k + 3) as usize
}

/// The 7-space together with the quadratic form q (as a polarized Gram
/// matrix) and the alternating 3-form.
pub struct SevenSpace {
    /// B(e_i, e_j) with B(a,b) = (q(a+b) - q(a) - q(b)) / 2
    pub gram: Mat,
    /// coefficients of the 3-form on sorted position triples i<j<k
    pub phi: Vec<((usize, usize, usize), Scalar)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    /// no scalar multiple of the cross product yields a composition algebra
    NoCompositionScaling,
}

impl std::fmt::Display for GeomError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GeomError::NoCompositionScaling => {
                write!(f, "no cross-product scaling satisfies the composition identity")
            }
        }
    }
}

impl std::error::Error for GeomError {}

impl SevenSpace {
    /// q = (e0*)^2 + e1* e-1* + e2* e-2* + e3* e-3*, and the 3-form
    /// e0*^e1*^e-1* + e0*^e2*^e-2* + e0*^e3*^e-3*
    ///   + 2 e1*^e2*^e3* + 2 e-1*^e-2*^e-3*.
    pub fn standard() -> SevenSpace {
        let mut gram = Mat::zero(DIM_V, DIM_V);
        *gram.at_mut(pos(0), pos(0)) = Scalar::one();
        for k in 1..=3i32 {
            *gram.at_mut(pos(k), pos(-k)) = Scalar::from_frac(1, 2);
            *gram.at_mut(pos(-k), pos(k)) = Scalar::from_frac(1, 2);
        }
        let mut phi = Vec::new();
        let mut term = |a: i32, b: i32, c: i32, coeff: i64| {
            let (idx, sign) = sort_triple(pos(a), pos(b), pos(c)).expect("distinct");
            phi.push((idx, Scalar::from_int(coeff * sign)));
        };
        term(0, 1, -1, 1);
        term(0, 2, -2, 1);
        term(0, 3, -3, 1);
        term(1, 2, 3, 2);
        term(-1, -2, -3, 2);
        SevenSpace { gram, phi }
    }

    pub fn bilinear(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for i in 0..DIM_V {
            for j in 0..DIM_V {
                if !self.gram.at(i, j).is_zero() {
                    s += x[i].clone() * y[j].clone() * self.gram.at(i, j).clone();
                }
            }
        }
        s
    }

    /// value of the 3-form on three coordinate vectors
    pub fn phi_eval(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Scalar {
        let mut s = Scalar::zero();
        for ((i, j, k), c) in &self.phi {
            // det of the 3x3 of the (i,j,k) coordinates
            let d = x[*i].clone() * (y[*j].clone() * z[*k].clone() - y[*k].clone() * z[*j].clone())
                - x[*j].clone()
                    * (y[*i].clone() * z[*k].clone() - y[*k].clone() * z[*i].clone())
                + x[*k].clone()
                    * (y[*i].clone() * z[*j].clone() - y[*j].clone() * z[*i].clone());
            s += c.clone() * d;
        }
        s
    }
}

impl SevenSpace {
    /// value of the 3-form on a basis triple (any order)
    pub fn phi_basis(&self, a: usize, b: usize, c: usize) -> Scalar {
        match sort_triple(a, b, c) {
            None => Scalar::zero(),
            Some((key, sign)) => self
                .phi
                .iter()
                .find(|(k, _)| *k == key)
                .map(|(_, v)| v.clone() * Scalar::from_int(sign))
                .unwrap_or_else(Scalar::zero),
        }
    }

    /// The bilinear form b(x,y) = (i_x phi) ^ (i_y phi) ^ phi, read off as
    /// the coefficient of the top exterior power.  For a generic 3-form this
    /// is the (scaled) invariant quadratic form of its stabilizer.
    pub fn induced_gram(&self) -> Mat {
        let mut out = Mat::zero(DIM_V, DIM_V);
        let idx: Vec<usize> = (0..DIM_V).collect();
        for a in 0..DIM_V {
            for b in a..DIM_V {
                let mut tot = Scalar::zero();
                for j in 0..DIM_V {
                    for k in j + 1..DIM_V {
                        let f1 = self.phi_basis(a, j, k);
                        if f1.is_zero() {
                            continue;
                        }
                        let rest1: Vec<usize> =
                            idx.iter().copied().filter(|&x| x != j && x != k).collect();
                        for l in 0..rest1.len() {
                            for m in l + 1..rest1.len() {
                                let f2 = self.phi_basis(b, rest1[l], rest1[m]);
                                if f2.is_zero() {
                                    continue;
                                }
                                let npq: Vec<usize> = rest1
                                    .iter()
                                    .copied()
                                    .filter(|&x| x != rest1[l] && x != rest1[m])
                                    .collect();
                                let f3 = self.phi_basis(npq[0], npq[1], npq[2]);
                                if f3.is_zero() {
                                    continue;
                                }
                                let perm =
                                    [j, k, rest1[l], rest1[m], npq[0], npq[1], npq[2]];
                                tot +=
                                    f1.clone() * f2 * f3 * Scalar::from_int(perm_sign(&perm));
                            }
                        }
                    }
                }
                *out.at_mut(a, b) = tot.clone();
                *out.at_mut(b, a) = tot;
            }
        }
        out
    }

    /// The unique variant of the standard data on which the composition
    /// construction succeeds: the quadratic form is the one the 3-form
    /// itself induces (normalized so q(e0) = 1) and the e0 coefficients of
    /// the 3-form carry the orientation for which the chart graph equations
    /// hold verbatim.  On the standard pair no cross-product scaling
    /// satisfies the composition identity: the pairing terms of its q are
    /// off by a factor -4 from the induced form.
    pub fn normalized() -> SevenSpace {
        let mut s = SevenSpace::standard();
        for ((i, j, k), c) in s.phi.iter_mut() {
            if *i == pos(0) || *j == pos(0) || *k == pos(0) {
                *c = -c.clone();
            }
        }
        let b = s.induced_gram();
        let scale = b.at(pos(0), pos(0)).clone().inv();
        s.gram = Mat::from_fn(DIM_V, DIM_V, |i, j| scale.clone() * b.at(i, j).clone());
        s
    }
}

fn perm_sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// sort a position triple, returning the lexicographic key and the sign of
/// the sorting permutation; None when two entries coincide
pub fn sort_triple(a: usize, b: usize, c: usize) -> Option<((usize, usize, usize), i64)> {
    if a == b || b == c || a == c {
        return None;
    }
    let mut v = [a, b, c];
    let mut sign = 1i64;
    for i in 0..2 {
        for j in 0..2 - i {
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    Some(((v[0], v[1], v[2]), sign))
}

/// all increasing position triples in lexicographic order
pub fn triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::with_capacity(DIM_W3);
    for i in 0..DIM_V {
        for j in i + 1..DIM_V {
            for k in j + 1..DIM_V {
                out.push((i, j, k));
            }
        }
    }
    out
}

pub fn triple_index(t: (usize, usize, usize)) -> usize {
    triples().iter().position(|&x| x == t).expect("triple")
}

/// element of the 35-dimensional third wedge power, coordinates indexed by
/// increasing triples in lexicographic order
#[derive(Clone, Debug, PartialEq)]
pub struct Wedge3 {
    pub coeffs: Vec<Scalar>,
}

impl Wedge3 {
    pub fn zero() -> Wedge3 {
        Wedge3 { coeffs: vec![Scalar::zero(); DIM_W3] }
    }

    /// add coeff * e_a ^ e_b ^ e_c (labels in -3..3, any order)
    pub fn add_term(&mut self, a: i32, b: i32, c: i32, coeff: Scalar) {
        let (idx, sign) = sort_triple(pos(a), pos(b), pos(c)).expect("repeated label");
        self.coeffs[triple_index(idx)] += coeff * Scalar::from_int(sign);
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rat::new(n, d))
    } else {
        None
    }
}

/// a square root of a rational scalar inside the field, if one exists
fn sqrt_in_field(t: &Scalar) -> Option<Scalar> {
    if !t.is_rational() {
        return None;
    }
    let r = t.a.clone();
    if let Some(s) = rational_sqrt(&r) {
        return Some(Scalar::from_rat(s));
    }
    let two = Rat::from_integer(2.into());
    if let Some(s) = rational_sqrt(&(&r / &two)) {
        return Some(Scalar::from_rat(s) * Scalar::sqrt2());
    }
    if let Some(s) = rational_sqrt(&(-&r)) {
        return Some(Scalar::from_rat(s) * Scalar::i());
    }
    if let Some(s) = rational_sqrt(&(-&r / two)) {
        return Some(Scalar::from_rat(s) * Scalar::sqrt_minus2());
    }
    None
}

/// Build the 8-dimensional algebra on C1 + V with product
/// (s + v)(t + w) = (st - B(v,w)) + (sw + tv + c v x w), where the cross
/// product is defined by phi(a,b,-) = B(a x b, -) and the constant c is
/// fixed by the composition identity N(xy) = N(x)N(y), N(s + v) = s^2 + q(v).
pub fn octonion_from_q_phi(v: &SevenSpace) -> Result<Alg, GeomError> {
    // raw cross products of basis pairs: solve B * w = phi(e_i, e_j, -)
    let basis = |k: usize| {
        let mut x = vec![Scalar::zero(); DIM_V];
        x[k] = Scalar::one();
        x
    };
    let mut raw = vec![vec![Vec::new(); DIM_V]; DIM_V];
    for i in 0..DIM_V {
        for j in 0..DIM_V {
            let rhs: Vec<Scalar> =
                (0..DIM_V).map(|k| v.phi_eval(&basis(i), &basis(j), &basis(k))).collect();
            raw[i][j] = v
                .gram
                .solve(&rhs)
                .expect("square system")
                .expect("nondegenerate form");
        }
    }

    // fix the scaling from one anisotropic pair
    let mut c2 = None;
    'outer: for i in 0..DIM_V {
        for j in 0..DIM_V {
            let nr = v.bilinear(&raw[i][j], &raw[i][j]);
            if nr.is_zero() {
                continue;
            }
            let bii = v.bilinear(&basis(i), &basis(i));
            let bjj = v.bilinear(&basis(j), &basis(j));
            let bij = v.bilinear(&basis(i), &basis(j));
            c2 = Some((bii * bjj - bij.clone() * bij) * nr.inv());
            break 'outer;
        }
    }
    let c2 = c2.ok_or(GeomError::NoCompositionScaling)?;
    let c = sqrt_in_field(&c2).ok_or(GeomError::NoCompositionScaling)?;

    let dim = DIM_V + 1;
    let mut table = vec![vec![vec![Scalar::zero(); dim]; dim]; dim];
    for j in 0..dim {
        table[0][j][j] = Scalar::one();
        table[j][0][j] = Scalar::one();
    }
    for i in 0..DIM_V {
        for j in 0..DIM_V {
            let b = v.bilinear(&basis(i), &basis(j));
            let mut out = vec![Scalar::zero(); dim];
            out[0] = -b;
            for (k, r) in raw[i][j].iter().enumerate() {
                out[k + 1] = c.clone() * r.clone();
            }
            table[i + 1][j + 1] = out;
        }
    }
    let mut conj = vec![vec![Scalar::zero(); dim]; dim];
    conj[0][0] = Scalar::one();
    for i in 1..dim {
        conj[i][i] = -Scalar::one();
    }
    let alg = CompositionAlgebra::from_table(dim, table, conj, "O(q,phi)");

    // verify the full polarization of N(xy) = N(x)N(y) on basis quadruples
    let b8 = |x: &AlgElement, y: &AlgElement| -> Scalar {
        let half = Scalar::from_frac(1, 2);
        half * (x.add(y).norm() - x.norm() - y.norm())
    };
    let e = |k: usize| crate::comp_alg::basis_elem(&alg, k);
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                for l in 0..dim {
                    let lhs = b8(&e(i).mul(&e(j)), &e(k).mul(&e(l)))
                        + b8(&e(k).mul(&e(j)), &e(i).mul(&e(l)));
                    let rhs =
                        Scalar::from_int(2) * b8(&e(i), &e(k)) * b8(&e(j), &e(l));
                    if lhs != rhs {
                        return Err(GeomError::NoCompositionScaling);
                    }
                }
            }
        }
    }
    Ok(alg)
}

/// embed a 7-coordinate imaginary vector into the algebra
pub fn embed_im(alg: &Alg, x: &[Scalar]) -> AlgElement {
    let mut coeffs = vec![Scalar::zero(); alg.dim];
    for (k, c) in x.iter().enumerate() {
        coeffs[k + 1] = c.clone();
    }
    elem(alg, coeffs)
}

/// Matrix of the associator restricted to the third wedge power of the
/// imaginary 7-space: row t is [e_i, e_j, e_k] for the t-th increasing
/// triple, written in the 8 algebra coordinates.
pub fn associator_map(alg: &Alg) -> Mat {
    let e = |k: usize| crate::comp_alg::basis_elem(alg, k + 1);
    let rows: Vec<Vec<Scalar>> = triples()
        .into_iter()
        .map(|(i, j, k)| associator(&e(i), &e(j), &e(k)).coeffs)
        .collect();
    Mat::from_rows(rows)
}

/// kernel of the associator map inside the 35-space (left kernel of the
/// row matrix)
pub fn associator_kernel(alg: &Alg) -> Vec<Vec<Scalar>> {
    associator_map(alg).transpose().kernel()
}

/// the associator is alternating and vanishes on unit-containing triples
pub fn associator_alternates(alg: &Alg) -> bool {
    let e = |k: usize| crate::comp_alg::basis_elem(alg, k);
    let u = one(alg);
    for i in 0..alg.dim {
        for j in 0..alg.dim {
            if !associator(&u, &e(i), &e(j)).is_zero()
                || !associator(&e(i), &u, &e(j)).is_zero()
                || !associator(&e(i), &e(j), &u).is_zero()
            {
                return false;
            }
            // repeated arguments
            if !associator(&e(i), &e(i), &e(j)).is_zero()
                || !associator(&e(i), &e(j), &e(j)).is_zero()
                || !associator(&e(i), &e(j), &e(i)).is_zero()
            {
                return false;
            }
            for k in 0..alg.dim {
                let base = associator(&e(i), &e(j), &e(k));
                if associator(&e(j), &e(i), &e(k)) != base.neg()
                    || associator(&e(i), &e(k), &e(j)) != base.neg()
                    || associator(&e(j), &e(k), &e(i)) != base
                    || associator(&e(k), &e(i), &e(j)) != base
                    || associator(&e(k), &e(j), &e(i)) != base.neg()
                {
                    return false;
                }
            }
        }
    }
    true
}

fn vectors_from_terms(terms: &[&[(i32, i32, i32, i64)]]) -> Vec<Wedge3> {
    terms
        .iter()
        .map(|list| {
            let mut w = Wedge3::zero();
            for &(a, b, c, s) in *list {
                w.add_term(a, b, c, Scalar::from_int(s));
            }
            w
        })
        .collect()
}

/// The often-quoted coefficient lists for the seven weight vectors of the
/// 7-dimensional summand of the 35-space.  They are linearly independent
/// and complementary to the associator kernel, but the span is not stable
/// under the derivation algebra: the e0-containing coefficients are missing
/// a factor 2, and the first monomial of the seventh vector does not even
/// have the weight of the other two (e1 instead of e2).
pub fn quoted_weight_vectors() -> Vec<Wedge3> {
    vectors_from_terms(&[
        &[(-2, -3, 0, 1), (1, 2, -2, -1), (1, 3, -3, -1)],
        &[(2, -2, -3, 1), (1, 2, 0, -1), (1, -1, -3, 1)],
        &[(3, -2, -3, 1), (1, 3, 0, -1), (1, -1, -2, -1)],
        &[(1, 2, 3, 1), (-1, -2, -3, -1)],
        &[(2, 3, -3, 1), (1, 2, -1, -1), (0, -1, -3, 1)],
        &[(2, 3, -2, -1), (1, 3, -1, -1), (0, -1, -2, -1)],
        &[(1, -1, -2, -1), (2, 3, 0, -1), (3, -1, -3, -1)],
    ])
}

/// the corrected weight vectors: each spans the weight space of the
/// invariant 7-dimensional complement of the associator kernel
pub fn weight_basis_vectors() -> Vec<Wedge3> {
    vectors_from_terms(&[
        &[(-2, -3, 0, 2), (1, 2, -2, -1), (1, 3, -3, -1)],
        &[(2, -2, -3, 1), (1, 2, 0, -2), (1, -1, -3, 1)],
        &[(3, -2, -3, 1), (1, 3, 0, -2), (1, -1, -2, -1)],
        &[(1, 2, 3, 1), (-1, -2, -3, -1)],
        &[(2, 3, -3, 1), (1, 2, -1, -1), (0, -1, -3, 2)],
        &[(2, 3, -2, -1), (1, 3, -1, -1), (0, -1, -2, -2)],
        &[(2, -1, -2, -1), (2, 3, 0, -2), (3, -1, -3, -1)],
    ])
}

/// the invariant element of the 35-space: the 3-form with all three slots
/// raised by the inverse Gram matrix
pub fn invariant_vector(v: &SevenSpace) -> Wedge3 {
    // dual basis vectors
    let dual: Vec<Vec<Scalar>> = (0..DIM_V)
        .map(|k| {
            let mut rhs = vec![Scalar::zero(); DIM_V];
            rhs[k] = Scalar::one();
            v.gram.solve(&rhs).unwrap().unwrap()
        })
        .collect();
    let mut w = Wedge3::zero();
    for (t, (i, j, k)) in triples().into_iter().enumerate() {
        w.coeffs[t] = v.phi_eval(&dual[i], &dual[j], &dual[k]);
    }
    w
}

/// the action of an algebra derivation on the 35-space by the Leibniz rule;
/// the derivation must kill the unit and preserve the imaginary part
pub fn wedge3_action(d: &Mat) -> Mat {
    for j in 0..8 {
        assert!(d.at(0, j).is_zero(), "derivation moves into the unit line");
        assert!(d.at(j, 0).is_zero(), "derivation moves the unit");
    }
    let col = |k: usize| -> Vec<Scalar> { (0..DIM_V).map(|r| d.at(r + 1, k + 1).clone()).collect() };
    let ts = triples();
    let mut out = Mat::zero(DIM_W3, DIM_W3);
    for (t, &(i, j, k)) in ts.iter().enumerate() {
        let mut w = Wedge3::zero();
        let slots = [i, j, k];
        for s in 0..3 {
            let img = col(slots[s]);
            for (m, c) in img.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut tri = slots;
                tri[s] = m;
                if let Some((idx, sign)) = sort_triple(tri[0], tri[1], tri[2]) {
                    w.coeffs[triple_index(idx)] += c.clone() * Scalar::from_int(sign);
                }
            }
        }
        for (m, c) in w.coeffs.into_iter().enumerate() {
            *out.at_mut(m, t) = c;
        }
    }
    out
}

/// chart rows are labeled 1, -2, -3 and columns 2, 3, 0, -1
pub const CHART_ROWS: [i32; 3] = [1, -2, -3];
pub const CHART_COLS: [i32; 4] = [2, 3, 0, -1];

/// 3 x 4 coordinate matrix of a chart point
pub type ChartMatrix = Vec<Vec<Scalar>>;

fn col_idx(c: i32) -> usize {
    CHART_COLS.iter().position(|&x| x == c).expect("column label")
}

/// 2x2 minor on rows h,k (labels 1..3) and columns n,m (labels from the
/// column set)
pub fn minor2(a: &ChartMatrix, h: usize, k: usize, n: i32, m: i32) -> Scalar {
    let (n, m) = (col_idx(n), col_idx(m));
    a[h - 1][n].clone() * a[k - 1][m].clone() - a[h - 1][m].clone() * a[k - 1][n].clone()
}

/// 3x3 minor on all rows and columns n,m,p
pub fn minor3(a: &ChartMatrix, n: i32, m: i32, p: i32) -> Scalar {
    let (n, m, p) = (col_idx(n), col_idx(m), col_idx(p));
    let at = |r: usize, c: usize| a[r][c].clone();
    at(0, n) * (at(1, m) * at(2, p) - at(1, p) * at(2, m))
        - at(0, m) * (at(1, n) * at(2, p) - at(1, p) * at(2, n))
        + at(0, p) * (at(1, n) * at(2, m) - at(1, m) * at(2, n))
}

/// Fill the 12 chart coordinates from the 8 free ones.  Free entries are
/// row 1: columns 2,3; rows 2 and 3: columns 2,3,0.  The remaining four are
/// determined by the graph equations.
pub fn chart_point(params: &[Scalar]) -> ChartMatrix {
    assert_eq!(params.len(), 8, "eight free coordinates");
    let z = Scalar::zero;
    let mut a: ChartMatrix = vec![vec![z(); 4]; 3];
    a[0][col_idx(2)] = params[0].clone();
    a[0][col_idx(3)] = params[1].clone();
    a[1][col_idx(2)] = params[2].clone();
    a[1][col_idx(3)] = params[3].clone();
    a[1][col_idx(0)] = params[4].clone();
    a[2][col_idx(2)] = params[5].clone();
    a[2][col_idx(3)] = params[6].clone();
    a[2][col_idx(0)] = params[7].clone();
    // a_{1,0} = -a_{3,2} + a_{2,3}
    a[0][col_idx(0)] = -a[2][col_idx(2)].clone() + a[1][col_idx(3)].clone();
    // a_{2,-1} = -a_{1,2} + T_{(2,3),(2,0)}
    a[1][col_idx(-1)] = -a[0][col_idx(2)].clone() + minor2(&a, 2, 3, 2, 0);
    // a_{3,-1} = -a_{1,3} + T_{(2,3),(3,0)}
    a[2][col_idx(-1)] = -a[0][col_idx(3)].clone() + minor2(&a, 2, 3, 3, 0);
    // a_{1,-1} = T_{(2,3),(2,3)}
    a[0][col_idx(-1)] = minor2(&a, 2, 3, 2, 3);
    a
}

/// The three residual equations that vanish identically on the graph: the
/// remaining components of the wedge of the plane along the 7-dimensional
/// complement of the associator kernel.  In the third one the correct first
/// summand is the minor -T_{(1,3),(2,-1)}; the single-entry variant that is
/// sometimes quoted in its place does not vanish on the graph.
pub fn chart_residuals(a: &ChartMatrix) -> Vec<Scalar> {
    let r1 = minor2(a, 1, 2, 2, 3) - minor2(a, 2, 3, 2, -1) + minor2(a, 1, 2, 0, -1);
    let r2 = minor2(a, 1, 3, 2, 3) - minor2(a, 2, 3, 3, -1) + minor2(a, 1, 3, 0, -1);
    let r3 = -minor2(a, 1, 3, 2, -1) + minor3(a, 2, 3, 0) + minor2(a, 1, 2, 3, -1);
    vec![r1, r2, r3]
}

/// the quoted-but-incorrect variant of the third residual, kept so its
/// failure to vanish can be demonstrated
pub fn quoted_third_residual(a: &ChartMatrix) -> Scalar {
    a[2][col_idx(-1)].clone() + minor3(a, 2, 3, 0) + minor2(a, 1, 2, 3, -1)
}

/// basis of the 3-plane spanned by a chart point, in 7-space coordinates
pub fn chart_plane(a: &ChartMatrix) -> Vec<Vec<Scalar>> {
    CHART_ROWS
        .iter()
        .enumerate()
        .map(|(r, &j)| {
            let mut v = vec![Scalar::zero(); DIM_V];
            v[pos(j)] = Scalar::one();
            for &c in &CHART_COLS {
                v[pos(c)] = a[r][col_idx(c)].clone();
            }
            v
        })
        .collect()
}

/// true iff the unital span of the 3-plane closes up to a 4-dimensional
/// quaternion subalgebra
pub fn quaternion_characterization(alg: &Alg, plane: &[Vec<Scalar>]) -> bool {
    let mut gens = vec![one(alg)];
    for w in plane {
        gens.push(embed_im(alg, w));
    }
    let closure = subalgebra_closure(&gens);
    closure.len() == 4 && is_quaternion_subalgebra(&closure)
}
