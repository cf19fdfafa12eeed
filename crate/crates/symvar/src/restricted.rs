//! Restricted root systems: from an involution on the weight space of an
//! ambient root system, derive the restricted roots, their basis, b-factors
//! and coroots, fundamental (co)weights and the valuation cone.

use crate::root_data::{
    dot, generate_roots, invert_rat, is_vzero, rat, ratf, vadd, vneg, vscale, vsub, vzero, Rat,
    RootSystem, TypeLabel, Vect,
};
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct InvolutionData {
    pub ambient: RootSystem,
    /// Matrix of theta acting on ambient coordinates (row-major).
    pub theta: Vec<Vec<Rat>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvolutionError {
    NotInvolutive,
    NotRootPermutation,
    NegativeRestriction,
}

impl std::fmt::Display for InvolutionError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvolutionError::NotInvolutive => write!(f, "theta squared is not the identity"),
            InvolutionError::NotRootPermutation => write!(f, "theta does not permute the roots"),
            InvolutionError::NegativeRestriction => {
                write!(f, "restrictions of the simple roots are not positively oriented")
            }
        }
    }
}

impl std::error::Error for InvolutionError {}

pub fn apply(m: &[Vec<Rat>], v: &Vect) -> Vect {
    m.iter()
        .map(|row| dot(row, v))
        .collect()
}

pub fn mat_id(n: usize) -> Vec<Vec<Rat>> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_neg_id(n: usize) -> Vec<Vec<Rat>> {
    mat_id(n)
        .into_iter()
        .map(|row| row.into_iter().map(|x| -x).collect())
        .collect()
}

impl InvolutionData {
    pub fn new(ambient: RootSystem, theta: Vec<Vec<Rat>>) -> Result<Self, InvolutionError> {
        let n = ambient.ambient;
        assert_eq!(theta.len(), n);
        // theta^2 = id
        for (i, row) in mat_id(n).iter().enumerate() {
            let mut e = vzero(n);
            e[i] = Rat::one();
            if &apply(&theta, &apply(&theta, &e)) != row {
                return Err(InvolutionError::NotInvolutive);
            }
        }
        // theta permutes the root set
        for r in &ambient.roots {
            if !ambient.roots.contains(&apply(&theta, r)) {
                return Err(InvolutionError::NotRootPermutation);
            }
        }
        Ok(InvolutionData { ambient, theta })
    }

    pub fn theta_of(&self, v: &Vect) -> Vect {
        apply(&self.theta, v)
    }

    /// Roots fixed by theta.
    pub fn fixed_subsystem(&self) -> Vec<Vect> {
        self.ambient
            .roots
            .iter()
            .filter(|r| &self.theta_of(r) == *r)
            .cloned()
            .collect()
    }

    pub fn restriction(&self, beta: &Vect) -> Vect {
        vsub(beta, &self.theta_of(beta))
    }

    /// Simple restricted roots that are exceptional: two distinct ambient
    /// simple roots restrict to them and either theta(b1) != -b2, or
    /// theta(b1) = -b2 with (b1, b2) != 0.
    pub fn exceptional_basis_roots(&self) -> Vec<Vect> {
        let mut out = Vec::new();
        let basis = restricted_basis(self);
        for alpha in &basis {
            let sources: Vec<&Vect> = self
                .ambient
                .simple
                .iter()
                .filter(|b| &self.restriction(b) == alpha)
                .collect();
            let mut exceptional = false;
            for (i, b1) in sources.iter().enumerate() {
                for b2 in sources.iter().skip(i + 1) {
                    let t1 = self.theta_of(b1);
                    if t1 != vneg(b2) || !dot(b1, b2).is_zero() {
                        exceptional = true;
                    }
                }
            }
            if exceptional {
                out.push(alpha.clone());
            }
        }
        out
    }
}

/// {beta - theta(beta) : beta simple} minus zero, deduplicated in order.
pub fn restricted_basis(inv: &InvolutionData) -> Vec<Vect> {
    let mut basis: Vec<Vect> = Vec::new();
    for b in &inv.ambient.simple {
        let r = inv.restriction(b);
        if !is_vzero(&r) && !basis.contains(&r) {
            basis.push(r);
        }
    }
    basis
}

#[derive(Clone, Debug)]
pub struct RestrictedRootSystem {
    pub roots: Vec<Vect>,
    pub basis: Vec<Vect>,
    pub label: TypeLabel,
}

pub fn restrict(inv: &InvolutionData) -> Result<RestrictedRootSystem, InvolutionError> {
    let mut roots: Vec<Vect> = Vec::new();
    for b in &inv.ambient.roots {
        let r = inv.restriction(b);
        if !is_vzero(&r) && !roots.contains(&r) {
            roots.push(r);
        }
    }
    let basis = restricted_basis(inv);
    // every restricted root must be a one-signed rational combination of
    // the basis (Borel compatibility of the encoding)
    for r in &roots {
        let coords = in_basis(&basis, r).ok_or(InvolutionError::NegativeRestriction)?;
        let pos = coords.iter().any(|c| c.is_positive());
        let neg = coords.iter().any(|c| c.is_negative());
        if pos && neg {
            return Err(InvolutionError::NegativeRestriction);
        }
    }
    let label = classify(&basis, &roots);
    Ok(RestrictedRootSystem { roots, basis, label })
}

/// Coordinates of v in the given linearly independent set, or None.
pub fn in_basis(basis: &[Vect], v: &Vect) -> Option<Vec<Rat>> {
    // solve sum c_i basis_i = v via the Gram system
    let n = basis.len();
    let gram: Vec<Vec<Rat>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| dot(a, b)).collect())
        .collect();
    let ginv = invert_rat(&gram)?;
    let rhs: Vec<Rat> = basis.iter().map(|a| dot(a, v)).collect();
    let coords: Vec<Rat> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| &ginv[i][j] * &rhs[j])
                .fold(Rat::zero(), |s, t| s + t)
        })
        .collect();
    // verify (v may stick out of the span)
    let mut rec = vzero(v.len());
    for (c, b) in coords.iter().zip(basis) {
        rec = vadd(&rec, &vscale(c, b));
    }
    if &rec == v {
        Some(coords)
    } else {
        None
    }
}

fn cartan_of(basis: &[Vect]) -> Vec<Vec<Rat>> {
    basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| rat(2) * dot(a, b) / dot(b, b))
                .collect()
        })
        .collect()
}

fn components(basis: &[Vect]) -> Vec<Vec<usize>> {
    let n = basis.len();
    let mut comp: Vec<Option<usize>> = vec![None; n];
    let mut next = 0;
    for i in 0..n {
        if comp[i].is_some() {
            continue;
        }
        let mut stack = vec![i];
        comp[i] = Some(next);
        while let Some(k) = stack.pop() {
            for j in 0..n {
                if comp[j].is_none() && !dot(&basis[k], &basis[j]).is_zero() {
                    comp[j] = Some(next);
                    stack.push(j);
                }
            }
        }
        next += 1;
    }
    (0..next)
        .map(|c| (0..n).filter(|&i| comp[i] == Some(c)).collect())
        .collect()
}

fn cartan_matches(c: &[Vec<Rat>], model: &RootSystem) -> bool {
    let n = c.len();
    if model.rank() != n {
        return false;
    }
    let m = model.cartan_matrix();
    // try all permutations (ranks here are small)
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let ok = (0..n).all(|i| (0..n).all(|j| c[i][j] == m[perm[i]][perm[j]]));
        if ok {
            return true;
        }
        if !next_permutation(&mut perm) {
            return false;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Identify the type of a (possibly non-reduced) root system given a basis
/// and the full root set.
pub fn classify(basis: &[Vect], roots: &[Vect]) -> TypeLabel {
    let comps = components(basis);
    let mut parts = Vec::new();
    for comp in &comps {
        let sub: Vec<Vect> = comp.iter().map(|&i| basis[i].clone()).collect();
        let doubled = sub.iter().any(|a| roots.contains(&vscale(&rat(2), a)));
        let r = sub.len();
        let c = cartan_of(&sub);
        let label = if doubled {
            TypeLabel::BC(r)
        } else {
            let mut candidates = vec![TypeLabel::A(r)];
            if r >= 2 {
                candidates.push(TypeLabel::B(r));
                candidates.push(TypeLabel::C(r));
            }
            if r >= 3 {
                candidates.push(TypeLabel::D(r));
            }
            if r == 2 {
                candidates.push(TypeLabel::G2);
            }
            if r == 4 {
                candidates.push(TypeLabel::F4);
            }
            if (6..=8).contains(&r) {
                candidates.push(TypeLabel::E(r));
            }
            candidates
                .into_iter()
                .find(|cand| cartan_matches(&c, &RootSystem::new(cand.clone())))
                .expect("unrecognized Cartan matrix")
        };
        parts.push(label);
    }
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        TypeLabel::Product(parts)
    }
}

impl RestrictedRootSystem {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// 1/2 when twice the basis root is again a root, 1 otherwise.
    pub fn b_factor(&self, i: usize) -> Rat {
        if self.roots.contains(&vscale(&rat(2), &self.basis[i])) {
            ratf(1, 2)
        } else {
            Rat::one()
        }
    }

    /// Coroot 2 b_i / (a_i, a_i) * a_i.
    pub fn coroot(&self, i: usize) -> Vect {
        let a = &self.basis[i];
        let c = rat(2) * self.b_factor(i) / dot(a, a);
        vscale(&c, a)
    }

    /// Fundamental weights w_i: (w_i, a_j^vee) = delta_ij.
    pub fn fundamental_weights(&self) -> Vec<Vect> {
        let n = self.rank();
        let pairing: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| dot(&self.basis[i], &self.coroot(j))).collect())
            .collect();
        let pinv = invert_rat(&pairing).expect("restricted pairing invertible");
        (0..n)
            .map(|i| {
                let mut w = vzero(self.basis[0].len());
                for j in 0..n {
                    w = vadd(&w, &vscale(&pinv[i][j], &self.basis[j]));
                }
                w
            })
            .collect()
    }

    /// Fundamental coweights w_i^vee: (w_i^vee, a_j) = b_j delta_ij, i.e.
    /// (w_i^vee, a_j^vee-dual) = delta_ij for the dual root system.
    pub fn fundamental_coweights(&self) -> Vec<Vect> {
        let n = self.rank();
        // w_i^vee = sum_j c_j a_j^vee with (w_i^vee, a_k / b_k) = delta_ik
        let pairing: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| dot(&self.coroot(i), &self.basis[j]) / self.b_factor(j))
                    .collect()
            })
            .collect();
        let pinv = invert_rat(&pairing).expect("restricted dual pairing invertible");
        // w_i^vee = sum_j c_j a_j^vee, sum_j c_j pairing[j][k] = delta_ik
        (0..n)
            .map(|i| {
                let mut w = vzero(self.basis[0].len());
                for j in 0..n {
                    w = vadd(&w, &vscale(&pinv[i][j], &self.coroot(j)));
                }
                w
            })
            .collect()
    }

    pub fn pair(x: &Vect, y: &Vect) -> Rat {
        dot(x, y)
    }

    /// Pairing of a weight with the i-th restricted coroot.
    pub fn pair_coroot(&self, w: &Vect, i: usize) -> Rat {
        dot(w, &self.coroot(i))
    }

    pub fn is_dominant(&self, w: &Vect) -> bool {
        (0..self.rank()).all(|i| !self.pair_coroot(w, i).is_negative())
    }

    pub fn valuation_cone(&self) -> ValuationCone {
        ValuationCone {
            generators: self.fundamental_coweights().iter().map(vneg).collect(),
            normals: self.basis.clone(),
        }
    }

    /// Reflection-closure sanity check inside the span.
    pub fn is_reflection_closed(&self) -> bool {
        let reduced: Vec<Vect> = self
            .roots
            .iter()
            .filter(|r| {
                let half = vscale(&ratf(1, 2), r);
                !self.roots.contains(&half)
            })
            .cloned()
            .collect();
        let closure = generate_roots(&reduced);
        closure.iter().all(|r| self.roots.contains(r))
    }
}

/// Split involution: theta = -id on the whole weight space.
pub fn split_involution(ambient: RootSystem) -> InvolutionData {
    let n = ambient.ambient;
    InvolutionData::new(ambient, mat_neg_id(n)).expect("split involution valid")
}

/// Group-case involution on G x G: (lambda, mu) -> (-mu, -lambda).
pub fn swap_involution(factor: TypeLabel) -> InvolutionData {
    let ambient = RootSystem::new(TypeLabel::Product(vec![factor.clone(), factor]));
    let n = ambient.ambient;
    assert!(n % 2 == 0);
    let h = n / 2;
    let mut theta = vec![vec![Rat::zero(); n]; n];
    for i in 0..h {
        theta[i][h + i] = -Rat::one();
        theta[h + i][i] = -Rat::one();
    }
    InvolutionData::new(ambient, theta).expect("swap involution valid")
}

/// Linear map sending `from[k]` to `to[k]` and fixing the orthogonal
/// complement of span(from); `from` must be linearly independent.
pub fn map_from_images(ambient_dim: usize, from: &[Vect], to: &[Vect]) -> Vec<Vec<Rat>> {
    use crate::root_data::{kernel_rat, mat_mul_rat};
    assert_eq!(from.len(), to.len());
    // orthogonal complement: kernel of the matrix whose rows are `from`
    let comp = kernel_rat(from, ambient_dim);
    assert_eq!(from.len() + comp.len(), ambient_dim);
    // columns of B are from ++ comp; columns of T are to ++ comp
    let col_mat = |cols: &[Vect]| -> Vec<Vec<Rat>> {
        (0..ambient_dim)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };
    let mut bc: Vec<Vect> = from.to_vec();
    bc.extend(comp.iter().cloned());
    let mut tc: Vec<Vect> = to.to_vec();
    tc.extend(comp.iter().cloned());
    let b = col_mat(&bc);
    let t = col_mat(&tc);
    let binv = invert_rat(&b).expect("independent images");
    mat_mul_rat(&t, &binv)
}

/// Orthogonal reflection through the span of the given roots composed with
/// -1, i.e. -w0 for a subsystem whose longest element acts as -1 on its
/// span: fixes the span, negates its orthogonal complement.
pub fn neg_longest_of_subspan(ambient_dim: usize, span: &[Vect]) -> Vec<Vec<Rat>> {
    use crate::root_data::kernel_rat;
    let comp = kernel_rat(span, ambient_dim);
    let mut from: Vec<Vect> = span.to_vec();
    from.extend(comp.iter().cloned());
    let mut img: Vec<Vect> = span.to_vec();
    img.extend(comp.iter().map(vneg));
    map_from_images_full(ambient_dim, &from, &img)
}

/// Like `map_from_images` but with a full basis of the ambient space.
pub fn map_from_images_full(ambient_dim: usize, from: &[Vect], to: &[Vect]) -> Vec<Vec<Rat>> {
    use crate::root_data::mat_mul_rat;
    assert_eq!(from.len(), ambient_dim);
    let col_mat = |cols: &[Vect]| -> Vec<Vec<Rat>> {
        (0..ambient_dim)
            .map(|i| cols.iter().map(|c| c[i].clone()).collect())
            .collect()
    };
    let b = col_mat(from);
    let t = col_mat(to);
    let binv = invert_rat(&b).expect("basis invertible");
    mat_mul_rat(&t, &binv)
}

/// Involution with fixed points Sp on SL(2k): ambient A_{2k-1}, coordinate
/// pairs (2i, 2i+1) swapped with a sign.
pub fn aii_involution(pairs: usize) -> InvolutionData {
    let ambient = RootSystem::new(TypeLabel::A(2 * pairs - 1));
    let n = ambient.ambient;
    let mut theta = vec![vec![Rat::zero(); n]; n];
    for i in 0..pairs {
        theta[2 * i][2 * i + 1] = -Rat::one();
        theta[2 * i + 1][2 * i] = -Rat::one();
    }
    InvolutionData::new(ambient, theta).expect("valid involution")
}

/// Involution with fixed points Sp(2l) x Sp(2n-2l) on Sp(2n): the first l
/// coordinate pairs are swapped with a sign, the rest are fixed.  The
/// restricted type is C_l when n = 2l and BC_l when n > 2l.
pub fn cii_involution(l: usize, n: usize) -> InvolutionData {
    assert!(n >= 2 * l);
    let ambient = RootSystem::new(TypeLabel::C(n));
    let mut theta = vec![vec![Rat::zero(); n]; n];
    for i in 0..l {
        theta[2 * i][2 * i + 1] = -Rat::one();
        theta[2 * i + 1][2 * i] = -Rat::one();
    }
    for j in 2 * l..n {
        theta[j][j] = Rat::one();
    }
    InvolutionData::new(ambient, theta).expect("valid involution")
}

/// Involution with fixed points F4 on E6: minus the longest element of the
/// D4 subsystem on nodes 2..5 (the end nodes 1 and 6 stay unswapped).
pub fn eiv_involution() -> InvolutionData {
    let e6 = RootSystem::new(TypeLabel::E(6));
    let s = e6.simple.clone();
    let black: Vec<Vect> = vec![s[1].clone(), s[2].clone(), s[3].clone(), s[4].clone()];
    let theta = neg_longest_of_subspan(e6.ambient, &black);
    InvolutionData::new(e6, theta).expect("valid involution")
}

/// The valuation cone -C+ in two presentations: generated by the negative
/// fundamental coweights, and cut out by (a_i, .) <= 0.
#[derive(Clone, Debug)]
pub struct ValuationCone {
    pub generators: Vec<Vect>,
    pub normals: Vec<Vect>,
}

impl ValuationCone {
    pub fn contains(&self, v: &Vect) -> bool {
        self.normals.iter().all(|a| !dot(a, v).is_positive())
    }
}
