//! 3x3 Hermitian matrices over a composition algebra: Jordan product,
//! comatrix, cubic determinant, the Zorn space and the section test.
//!
//! Layout of a Hermitian matrix:
//!
//! ```text
//!   r1   x̄3   x̄2
//!   x3   r2   x̄1
//!   x2   x1   r3
//! ```

use crate::comp_alg::{elem, one, zero_elem, Alg, AlgElement};
use crate::scalar::Scalar;
use std::fmt;

#[derive(Clone)]
pub struct Herm3 {
    pub alg: Alg,
    pub r: [Scalar; 3],
    /// x[0], x[1], x[2] = x1, x2, x3 from the layout above.
    pub x: [AlgElement; 3],
}

impl PartialEq for Herm3 {
    fn eq(&self, o: &Self) -> bool {
        self.r == o.r && self.x == o.x
    }
}

impl fmt::Debug for Herm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Herm3{{r=[{}, {}, {}], x={:?}}}",
            self.r[0], self.r[1], self.r[2], self.x
        )
    }
}

#[derive(Clone, PartialEq)]
pub struct Zorn2 {
    pub z1: Scalar,
    pub z2: Herm3,
    pub z3: Herm3,
    pub z4: Scalar,
}

/// General (not necessarily Hermitian) 3x3 matrix over the algebra; used
/// only as an intermediate for ordinary matrix products.
#[derive(Clone)]
pub struct Mat3A {
    pub alg: Alg,
    pub e: [[AlgElement; 3]; 3],
}

impl PartialEq for Mat3A {
    fn eq(&self, o: &Self) -> bool {
        self.e == o.e
    }
}

impl Herm3 {
    pub fn new(alg: &Alg, r: [Scalar; 3], x: [AlgElement; 3]) -> Self {
        for xi in &x {
            assert_eq!(xi.alg.dim, alg.dim);
        }
        Herm3 { alg: alg.clone(), r, x }
    }

    pub fn zero(alg: &Alg) -> Self {
        Herm3 {
            alg: alg.clone(),
            r: [Scalar::zero(), Scalar::zero(), Scalar::zero()],
            x: [zero_elem(alg), zero_elem(alg), zero_elem(alg)],
        }
    }

    pub fn identity(alg: &Alg) -> Self {
        Herm3 {
            alg: alg.clone(),
            r: [Scalar::one(), Scalar::one(), Scalar::one()],
            x: [zero_elem(alg), zero_elem(alg), zero_elem(alg)],
        }
    }

    pub fn diag(alg: &Alg, r1: Scalar, r2: Scalar, r3: Scalar) -> Self {
        Herm3 {
            alg: alg.clone(),
            r: [r1, r2, r3],
            x: [zero_elem(alg), zero_elem(alg), zero_elem(alg)],
        }
    }

    pub fn to_mat3(&self) -> Mat3A {
        let s = |r: &Scalar| one(&self.alg).scale(r);
        let (x1, x2, x3) = (&self.x[0], &self.x[1], &self.x[2]);
        Mat3A {
            alg: self.alg.clone(),
            e: [
                [s(&self.r[0]), x3.conj(), x2.conj()],
                [x3.clone(), s(&self.r[1]), x1.conj()],
                [x2.clone(), x1.clone(), s(&self.r[2])],
            ],
        }
    }

    pub fn add(&self, o: &Herm3) -> Herm3 {
        Herm3 {
            alg: self.alg.clone(),
            r: [
                self.r[0].clone() + o.r[0].clone(),
                self.r[1].clone() + o.r[1].clone(),
                self.r[2].clone() + o.r[2].clone(),
            ],
            x: [
                self.x[0].add(&o.x[0]),
                self.x[1].add(&o.x[1]),
                self.x[2].add(&o.x[2]),
            ],
        }
    }

    pub fn sub(&self, o: &Herm3) -> Herm3 {
        self.add(&o.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> Herm3 {
        Herm3 {
            alg: self.alg.clone(),
            r: [
                s.clone() * self.r[0].clone(),
                s.clone() * self.r[1].clone(),
                s.clone() * self.r[2].clone(),
            ],
            x: [self.x[0].scale(s), self.x[1].scale(s), self.x[2].scale(s)],
        }
    }

    pub fn trace(&self) -> Scalar {
        self.r[0].clone() + self.r[1].clone() + self.r[2].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.r.iter().all(|r| r.is_zero()) && self.x.iter().all(|x| x.is_zero())
    }

    /// Flat coordinate vector (3 + 3*dim entries) for linear algebra.
    pub fn flatten(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> = self.r.to_vec();
        for xi in &self.x {
            v.extend(xi.coeffs.iter().cloned());
        }
        v
    }
}

impl Mat3A {
    pub fn mul(&self, o: &Mat3A) -> Mat3A {
        let e = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let mut s = zero_elem(&self.alg);
                for k in 0..3 {
                    s = s.add(&self.e[i][k].mul(&o.e[k][j]));
                }
                s
            })
        });
        Mat3A { alg: self.alg.clone(), e }
    }

    /// Check Hermitian shape and convert back; None when some entry fails
    /// (e.g. a non-scalar diagonal or mismatched conjugates).
    pub fn to_herm(&self) -> Option<Herm3> {
        let scalar_part = |x: &AlgElement| -> Option<Scalar> {
            if x.coeffs[1..].iter().all(|c| c.is_zero()) {
                Some(x.coeffs[0].clone())
            } else {
                None
            }
        };
        let r1 = scalar_part(&self.e[0][0])?;
        let r2 = scalar_part(&self.e[1][1])?;
        let r3 = scalar_part(&self.e[2][2])?;
        let x3 = self.e[1][0].clone();
        let x2 = self.e[2][0].clone();
        let x1 = self.e[2][1].clone();
        if self.e[0][1] != x3.conj() || self.e[0][2] != x2.conj() || self.e[1][2] != x1.conj() {
            return None;
        }
        Some(Herm3 { alg: self.alg.clone(), r: [r1, r2, r3], x: [x1, x2, x3] })
    }
}

/// A∘B = (AB + BA)/2 with the ordinary matrix product; the result is
/// checked to be Hermitian.
pub fn jordan_product(a: &Herm3, b: &Herm3) -> Herm3 {
    let (ma, mb) = (a.to_mat3(), b.to_mat3());
    let ab = ma.mul(&mb);
    let ba = mb.mul(&ma);
    let half = Scalar::from_frac(1, 2);
    let sum = Mat3A {
        alg: a.alg.clone(),
        e: std::array::from_fn(|i| {
            std::array::from_fn(|j| ab.e[i][j].add(&ba.e[i][j]).scale(&half))
        }),
    };
    sum.to_herm().expect("Jordan product not Hermitian")
}

/// com P = P^2 - (tr P) P + ((tr P)^2 - tr P^2)/2 * I.
pub fn comatrix(p: &Herm3) -> Herm3 {
    let p2 = jordan_product(p, p); // P^2 = P∘P since AB+BA = 2 P^2 for A=B=P
    let t = p.trace();
    let t2 = p2.trace();
    let half = Scalar::from_frac(1, 2);
    let c = half * (t.clone() * t.clone() - t2);
    p2.sub(&p.scale(&t)).add(&Herm3::identity(&p.alg).scale(&c))
}

/// det P = trace(com(P) ∘ P) / 3, which satisfies com(P) P = det(P) I.
pub fn det3(p: &Herm3) -> Scalar {
    let c = comatrix(p);
    let prod = jordan_product(&c, p);
    prod.trace() * Scalar::from_frac(1, 3)
}

/// Ordinary (non-Jordan) matrix product com(P) * P, for checking the
/// characterizing identity multiplicatively.  Returns None when the result
/// fails to be Hermitian, which happens over the octonions: there the two
/// orderings com(P)*P and P*com(P) differ from det(P)I by conjugate
/// imaginary multiples of I that cancel under symmetrization.
pub fn comatrix_times_p(p: &Herm3) -> Option<Herm3> {
    let c = comatrix(p);
    c.to_mat3().mul(&p.to_mat3()).to_herm()
}

/// Outcome of evaluating the characterizing identity of the comatrix.
pub struct ComatrixIdentity {
    /// com(P) ∘ P - det(P) I, always expected zero.
    pub jordan_residual: Herm3,
    /// With the ordinary product: None when com(P)*P is det(P)I on the
    /// nose, otherwise the common imaginary diagonal residue.
    pub ordinary_residue: Option<AlgElement>,
}

pub fn comatrix_identity(p: &Herm3) -> ComatrixIdentity {
    let c = comatrix(p);
    let d = det3(p);
    let jordan_residual =
        jordan_product(&c, p).sub(&Herm3::identity(&p.alg).scale(&d));

    let m = c.to_mat3().mul(&p.to_mat3());
    let det_elem = one(&p.alg).scale(&d);
    let mut residue = None;
    let mut clean = true;
    for i in 0..3 {
        for j in 0..3 {
            if i == j {
                let r = m.e[i][i].sub(&det_elem);
                if !r.is_zero() {
                    clean = false;
                }
                match &residue {
                    None => residue = Some(r),
                    Some(prev) => assert_eq!(prev, &r, "unequal diagonal residues"),
                }
            } else {
                assert!(m.e[i][j].is_zero(), "nonzero off-diagonal in com(P)P");
            }
        }
    }
    ComatrixIdentity {
        jordan_residual,
        ordinary_residue: if clean { None } else { residue },
    }
}

pub fn freudenthal_phi(x: &Scalar, p: &Herm3) -> Zorn2 {
    Zorn2 {
        z1: x.pow(3),
        z2: p.scale(&(x.clone() * x.clone())),
        z3: comatrix(p).scale(x),
        z4: det3(p),
    }
}

/// Membership in the hyperplane section z1 = z4.
pub fn in_section(z: &Zorn2) -> bool {
    z.z1 == z.z4
}

pub fn dim_j3(alg: &Alg) -> usize {
    3 + 3 * alg.dim
}

pub fn dim_zorn(alg: &Alg) -> usize {
    2 + 2 * dim_j3(alg)
}

/// Random Hermitian matrix with small rational coordinates.
pub fn random_herm(alg: &Alg, smp: &mut crate::sample::Sampler) -> Herm3 {
    let r = [smp.rational(), smp.rational(), smp.rational()];
    let x = std::array::from_fn(|_| elem(alg, (0..alg.dim).map(|_| smp.rational()).collect()));
    Herm3::new(alg, r, x)
}
