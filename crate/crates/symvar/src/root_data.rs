//! Finite root systems of types A-G in their standard rational coordinate
//! models: root generation by reflections, Cartan data, fundamental
//! (co)weights, dominance, and dimension bookkeeping for flag varieties.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;
pub type Vect = Vec<Rat>;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn ratf(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn vadd(x: &Vect, y: &Vect) -> Vect {
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn vsub(x: &Vect, y: &Vect) -> Vect {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

pub fn vscale(c: &Rat, x: &Vect) -> Vect {
    x.iter().map(|a| c * a).collect()
}

pub fn vneg(x: &Vect) -> Vect {
    x.iter().map(|a| -a).collect()
}

pub fn vzero(n: usize) -> Vect {
    vec![Rat::zero(); n]
}

pub fn is_vzero(x: &Vect) -> bool {
    x.iter().all(|a| a.is_zero())
}

pub fn dot(x: &Vect, y: &Vect) -> Rat {
    x.iter().zip(y).map(|(a, b)| a * b).fold(Rat::zero(), |s, t| s + t)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeLabel {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    /// Non-reduced BC_n (restricted systems only).
    BC(usize),
    Product(Vec<TypeLabel>),
}

impl TypeLabel {
    pub fn rank(&self) -> usize {
        match self {
            TypeLabel::A(n) | TypeLabel::B(n) | TypeLabel::C(n) | TypeLabel::D(n)
            | TypeLabel::E(n) | TypeLabel::BC(n) => *n,
            TypeLabel::F4 => 4,
            TypeLabel::G2 => 2,
            TypeLabel::Product(ps) => ps.iter().map(|p| p.rank()).sum(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            TypeLabel::A(n) => format!("A{}", n),
            TypeLabel::B(n) => format!("B{}", n),
            TypeLabel::C(n) => format!("C{}", n),
            TypeLabel::D(n) => format!("D{}", n),
            TypeLabel::E(n) => format!("E{}", n),
            TypeLabel::F4 => "F4".to_string(),
            TypeLabel::G2 => "G2".to_string(),
            TypeLabel::BC(n) => format!("BC{}", n),
            TypeLabel::Product(ps) => {
                ps.iter().map(|p| p.name()).collect::<Vec<_>>().join("x")
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub label: TypeLabel,
    pub ambient: usize,
    pub simple: Vec<Vect>,
    pub roots: Vec<Vect>,
}

fn reflect(beta: &Vect, alpha: &Vect) -> Vect {
    let c = rat(2) * dot(beta, alpha) / dot(alpha, alpha);
    vsub(beta, &vscale(&c, alpha))
}

/// Close a set of seed vectors under reflection in each of them (and in the
/// newly found roots), producing the full finite root set.
pub fn generate_roots(simple: &[Vect]) -> Vec<Vect> {
    use std::collections::HashSet;
    let mut roots: Vec<Vect> = simple.to_vec();
    let mut seen: HashSet<Vect> = roots.iter().cloned().collect();
    let mut frontier: Vec<Vect> = roots.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for beta in &frontier {
            for alpha in simple {
                let r = reflect(beta, alpha);
                if seen.insert(r.clone()) {
                    next.push(r.clone());
                    roots.push(r);
                }
            }
        }
        frontier = next;
    }
    roots
}

fn simple_roots_for(label: &TypeLabel) -> (usize, Vec<Vect>) {
    let e = |ambient: usize, i: usize| -> Vect {
        let mut v = vzero(ambient);
        v[i] = Rat::one();
        v
    };
    match label {
        TypeLabel::A(n) => {
            let amb = n + 1;
            let simple = (0..*n).map(|i| vsub(&e(amb, i), &e(amb, i + 1))).collect();
            (amb, simple)
        }
        TypeLabel::B(n) => {
            let amb = *n;
            let mut simple: Vec<Vect> =
                (0..n - 1).map(|i| vsub(&e(amb, i), &e(amb, i + 1))).collect();
            simple.push(e(amb, n - 1));
            (amb, simple)
        }
        TypeLabel::C(n) => {
            let amb = *n;
            let mut simple: Vec<Vect> =
                (0..n - 1).map(|i| vsub(&e(amb, i), &e(amb, i + 1))).collect();
            simple.push(vscale(&rat(2), &e(amb, n - 1)));
            (amb, simple)
        }
        TypeLabel::D(n) => {
            let amb = *n;
            let mut simple: Vec<Vect> =
                (0..n - 1).map(|i| vsub(&e(amb, i), &e(amb, i + 1))).collect();
            simple.push(vadd(&e(amb, n - 2), &e(amb, n - 1)));
            (amb, simple)
        }
        TypeLabel::G2 => {
            // short alpha1 = e1 - e2, long alpha2 = -2 e1 + e2 + e3
            let amb = 3;
            let a1 = vsub(&e(amb, 0), &e(amb, 1));
            let mut a2 = vzero(amb);
            a2[0] = rat(-2);
            a2[1] = rat(1);
            a2[2] = rat(1);
            (amb, vec![a1, a2])
        }
        TypeLabel::F4 => {
            let amb = 4;
            let a1 = vsub(&e(amb, 1), &e(amb, 2));
            let a2 = vsub(&e(amb, 2), &e(amb, 3));
            let a3 = e(amb, 3);
            let a4 = vec![ratf(1, 2), ratf(-1, 2), ratf(-1, 2), ratf(-1, 2)];
            (amb, vec![a1, a2, a3, a4])
        }
        TypeLabel::E(n) => {
            assert!((6..=8).contains(n), "E rank must be 6..8");
            let amb = 8;
            let mut a1 = vec![
                ratf(1, 2),
                ratf(-1, 2),
                ratf(-1, 2),
                ratf(-1, 2),
                ratf(-1, 2),
                ratf(-1, 2),
                ratf(-1, 2),
                ratf(1, 2),
            ];
            a1 = a1.drain(..).collect();
            let a2 = vadd(&e(amb, 0), &e(amb, 1));
            let mut simple = vec![a1, a2];
            for i in 1..(*n - 1) {
                simple.push(vsub(&e(amb, i), &e(amb, i - 1)));
            }
            (amb, simple)
        }
        TypeLabel::BC(_) => panic!("BC systems arise only as restricted systems"),
        TypeLabel::Product(parts) => {
            let pieces: Vec<(usize, Vec<Vect>)> = parts.iter().map(simple_roots_for).collect();
            let amb: usize = pieces.iter().map(|(a, _)| a).sum();
            let mut simple = Vec::new();
            let mut off = 0;
            for (a, s) in &pieces {
                for root in s {
                    let mut v = vzero(amb);
                    v[off..off + a].clone_from_slice(root);
                    simple.push(v);
                }
                off += a;
            }
            (amb, simple)
        }
    }
}

impl RootSystem {
    pub fn new(label: TypeLabel) -> Self {
        let (ambient, simple) = simple_roots_for(&label);
        let roots = generate_roots(&simple);
        RootSystem { label, ambient, simple, roots }
    }

    pub fn rank(&self) -> usize {
        self.simple.len()
    }

    /// (x, alpha^vee) = 2 (x, alpha) / (alpha, alpha).
    pub fn pair_coroot(x: &Vect, alpha: &Vect) -> Rat {
        rat(2) * dot(x, alpha) / dot(alpha, alpha)
    }

    pub fn coroot(alpha: &Vect) -> Vect {
        let c = rat(2) / dot(alpha, alpha);
        vscale(&c, alpha)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<Rat>> {
        (0..self.rank())
            .map(|i| {
                (0..self.rank())
                    .map(|j| Self::pair_coroot(&self.simple[i], &self.simple[j]))
                    .collect()
            })
            .collect()
    }

    /// Fundamental weights: (w_i, alpha_j^vee) = delta_ij, expressed in the
    /// span of the simple roots.
    pub fn fundamental_weights(&self) -> Vec<Vect> {
        let c = self.cartan_matrix();
        let cinv = invert_rat(&c).expect("Cartan matrix invertible");
        // w_i = sum_j d_j alpha_j with sum_j d_j C_jk = delta_ik,
        // so d^T = e_i^T C^-1, i.e. d_j = (C^-1)_{ij}
        (0..self.rank())
            .map(|i| {
                let mut w = vzero(self.ambient);
                for j in 0..self.rank() {
                    w = vadd(&w, &vscale(&cinv[i][j], &self.simple[j]));
                }
                w
            })
            .collect()
    }

    /// Fundamental coweights: (alpha_j, w_i^vee) = delta_ij.
    pub fn fundamental_coweights(&self) -> Vec<Vect> {
        let c = self.cartan_matrix();
        let cinv = invert_rat(&c).expect("Cartan matrix invertible");
        // w_i^vee = sum_j d_j alpha_j^vee with
        // (alpha_k, w_i^vee) = sum_j d_j C_kj = delta_ki, so C d = e_i
        // and d_j = (C^-1)_{ji}
        (0..self.rank())
            .map(|i| {
                let mut w = vzero(self.ambient);
                for j in 0..self.rank() {
                    w = vadd(&w, &vscale(&cinv[j][i], &Self::coroot(&self.simple[j])));
                }
                w
            })
            .collect()
    }

    pub fn is_dominant(&self, w: &Vect) -> bool {
        self.simple
            .iter()
            .all(|a| !Self::pair_coroot(w, a).is_negative())
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn dim_group(&self) -> usize {
        self.num_roots() + self.rank()
    }

    /// Dimension of G/P for the parabolic whose Levi contains the simple
    /// roots indexed by `levi`: the number of roots outside the Levi
    /// subsystem, divided by two.
    pub fn dim_flag(&self, levi: &[usize]) -> usize {
        assert!(levi.iter().all(|&i| i < self.rank()), "unknown simple root index");
        let levi_simple: Vec<Vect> = levi.iter().map(|&i| self.simple[i].clone()).collect();
        let levi_roots = if levi_simple.is_empty() {
            Vec::new()
        } else {
            generate_roots(&levi_simple)
        };
        let outside = self.roots.iter().filter(|r| !levi_roots.contains(*r)).count();
        assert!(outside % 2 == 0);
        outside / 2
    }
}

pub fn mat_mul_rat(a: &[Vec<Rat>], b: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    let (n, k) = (a.len(), b[0].len());
    let m = b.len();
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| (0..m).map(|t| &a[i][t] * &b[t][j]).fold(Rat::zero(), |s, x| s + x))
                .collect()
        })
        .collect()
}

/// Kernel basis of a rational matrix (rows are equations).
pub fn kernel_rat(m: &[Vec<Rat>], cols: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let rows = a.len();
    let mut pivots: Vec<usize> = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let found = (prow..rows).find(|&i| !a[i][col].is_zero());
        let Some(pi) = found else { continue };
        a.swap(prow, pi);
        let pv = a[prow][col].clone();
        for x in a[prow].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..rows {
            if i == prow || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..cols {
                let d = &f * &a[prow][j];
                a[i][j] = &a[i][j] - d;
            }
        }
        pivots.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vzero_rat(cols);
            v[fc] = Rat::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[k][fc].clone();
            }
            v
        })
        .collect()
}

fn vzero_rat(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

/// Exact inverse of a square rational matrix; None when singular.
pub fn invert_rat(m: &[Vec<Rat>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            assert_eq!(row.len(), n);
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&i| !a[i][col].is_zero())?;
        a.swap(pivot, col);
        let pv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &pv;
        }
        for i in 0..n {
            if i == col || a[i][col].is_zero() {
                continue;
            }
            let f = a[i][col].clone();
            for j in 0..2 * n {
                let d = &f * &a[col][j];
                a[i][j] = &a[i][j] - d;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
