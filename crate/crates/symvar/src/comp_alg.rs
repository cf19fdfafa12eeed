//! Complexified composition algebras of dimension 1, 2, 4, 8.
//!
//! Two constructions feed this type: Cayley-Dickson doubling (here) and the
//! (q, phi)-model on a 7-space (see g2_geom).  Both produce a multiplication
//! table over the exact scalar field together with a conjugation.

use crate::mat::Mat;
use crate::scalar::Scalar;
use std::fmt;
use std::sync::Arc;

/// A unital algebra given by its structure constants: basis element i times
/// basis element j is the coefficient vector `table[i][j]`.
#[derive(Clone)]
pub struct CompositionAlgebra {
    pub dim: usize,
    table: Vec<Vec<Vec<Scalar>>>,
    /// Matrix of the conjugation x -> x̄ on the basis.
    conj: Vec<Vec<Scalar>>,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgError {
    MixedAlgebras,
    DoublingLimit,
}

impl fmt::Display for AlgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgError::MixedAlgebras => write!(f, "elements belong to different algebras"),
            AlgError::DoublingLimit => {
                write!(f, "doubling a dim-8 algebra leaves the composition-algebra class")
            }
        }
    }
}

impl std::error::Error for AlgError {}

pub type Alg = Arc<CompositionAlgebra>;

#[derive(Clone)]
pub struct AlgElement {
    pub alg: Alg,
    pub coeffs: Vec<Scalar>,
}

impl PartialEq for AlgElement {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.alg, &o.alg) && self.coeffs == o.coeffs
    }
}

impl CompositionAlgebra {
    /// The base field itself as a dim-1 algebra.
    pub fn base() -> Alg {
        Arc::new(CompositionAlgebra {
            dim: 1,
            table: vec![vec![vec![Scalar::one()]]],
            conj: vec![vec![Scalar::one()]],
            name: "C".to_string(),
        })
    }

    pub fn from_table(
        dim: usize,
        table: Vec<Vec<Vec<Scalar>>>,
        conj: Vec<Vec<Scalar>>,
        name: &str,
    ) -> Alg {
        assert_eq!(table.len(), dim);
        Arc::new(CompositionAlgebra { dim, table, conj, name: name.to_string() })
    }

    /// Cayley-Dickson doubling with parameter -1.  Basis ordering: the first
    /// `dim` elements are the old basis, the second `dim` are "old basis
    /// times the new unit l":  (a,b)(c,d) = (ac - d̄b, da + b c̄).
    pub fn cayley_dickson(base: &Alg) -> Result<Alg, AlgError> {
        if base.dim >= 8 {
            return Err(AlgError::DoublingLimit);
        }
        let n = base.dim;
        let dim = 2 * n;
        let zero_vec = vec![Scalar::zero(); dim];
        let mut table = vec![vec![zero_vec.clone(); dim]; dim];

        let basis_prod = |i: usize, j: usize| -> Vec<Scalar> {
            // decompose basis index into (part, old index)
            let (pi, oi) = (i / n, i % n);
            let (pj, oj) = (j / n, j % n);
            let e = |k: usize| {
                let mut v = vec![Scalar::zero(); n];
                v[k] = Scalar::one();
                v
            };
            let a = if pi == 0 { e(oi) } else { vec![Scalar::zero(); n] };
            let b = if pi == 1 { e(oi) } else { vec![Scalar::zero(); n] };
            let c = if pj == 0 { e(oj) } else { vec![Scalar::zero(); n] };
            let d = if pj == 1 { e(oj) } else { vec![Scalar::zero(); n] };
            let mul = |x: &[Scalar], y: &[Scalar]| base.mul_coeffs(x, y);
            let conj = |x: &[Scalar]| base.conj_coeffs(x);
            let neg = |x: Vec<Scalar>| x.into_iter().map(|s| -s).collect::<Vec<_>>();
            let add = |x: Vec<Scalar>, y: Vec<Scalar>| {
                x.into_iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>()
            };
            // gamma = -1: (a,b)(c,d) = (ac + gamma * d̄ b, d a + b c̄)
            let first = add(mul(&a, &c), neg(mul(&conj(&d), &b)));
            let second = add(mul(&d, &a), mul(&b, &conj(&c)));
            let mut out = first;
            out.extend(second);
            out
        };

        for i in 0..dim {
            for j in 0..dim {
                table[i][j] = basis_prod(i, j);
            }
        }

        // conjugation: (a,b)~ = (ā, -b)
        let mut conj = vec![vec![Scalar::zero(); dim]; dim];
        for i in 0..n {
            let old = base.conj_coeffs(&{
                let mut v = vec![Scalar::zero(); n];
                v[i] = Scalar::one();
                v
            });
            for (k, s) in old.into_iter().enumerate() {
                conj[i][k] = s;
            }
            conj[n + i][n + i] = -Scalar::one();
        }

        let name = match dim {
            2 => "C2".to_string(),
            4 => "H".to_string(),
            8 => "O".to_string(),
            _ => format!("dim{}", dim),
        };
        Ok(Arc::new(CompositionAlgebra { dim, table, conj, name }))
    }

    /// The chain C, C2, H, O built by repeated doubling.
    pub fn tower() -> [Alg; 4] {
        let a1 = Self::base();
        let a2 = Self::cayley_dickson(&a1).unwrap();
        let a4 = Self::cayley_dickson(&a2).unwrap();
        let a8 = Self::cayley_dickson(&a4).unwrap();
        [a1, a2, a4, a8]
    }

    pub fn mul_coeffs(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi.clone() * yj.clone();
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] += coeff.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    pub fn conj_coeffs(&self, x: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (k, c) in self.conj[i].iter().enumerate() {
                if !c.is_zero() {
                    out[k] += xi.clone() * c.clone();
                }
            }
        }
        out
    }
}

pub fn elem(alg: &Alg, coeffs: Vec<Scalar>) -> AlgElement {
    assert_eq!(coeffs.len(), alg.dim, "coefficient length");
    AlgElement { alg: alg.clone(), coeffs }
}

pub fn basis_elem(alg: &Alg, k: usize) -> AlgElement {
    let mut v = vec![Scalar::zero(); alg.dim];
    v[k] = Scalar::one();
    elem(alg, v)
}

pub fn one(alg: &Alg) -> AlgElement {
    basis_elem(alg, 0)
}

pub fn zero_elem(alg: &Alg) -> AlgElement {
    elem(alg, vec![Scalar::zero(); alg.dim])
}

impl AlgElement {
    fn same_alg(&self, o: &AlgElement) -> Result<(), AlgError> {
        if Arc::ptr_eq(&self.alg, &o.alg) {
            Ok(())
        } else {
            Err(AlgError::MixedAlgebras)
        }
    }

    pub fn mul(&self, o: &AlgElement) -> AlgElement {
        self.same_alg(o).expect("mixed algebras");
        AlgElement { alg: self.alg.clone(), coeffs: self.alg.mul_coeffs(&self.coeffs, &o.coeffs) }
    }

    pub fn add(&self, o: &AlgElement) -> AlgElement {
        self.same_alg(o).expect("mixed algebras");
        AlgElement {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(x, y)| x.clone() + y.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &AlgElement) -> AlgElement {
        self.same_alg(o).expect("mixed algebras");
        AlgElement {
            alg: self.alg.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(x, y)| x.clone() - y.clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: self.coeffs.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> AlgElement {
        AlgElement {
            alg: self.alg.clone(),
            coeffs: self.coeffs.iter().map(|x| s.clone() * x.clone()).collect(),
        }
    }

    pub fn conj(&self) -> AlgElement {
        AlgElement { alg: self.alg.clone(), coeffs: self.alg.conj_coeffs(&self.coeffs) }
    }

    /// Norm N(x) = x * x̄, returned as a scalar (the 1-component; the rest
    /// must vanish, which is asserted).
    pub fn norm(&self) -> Scalar {
        let p = self.mul(&self.conj());
        for (k, c) in p.coeffs.iter().enumerate() {
            if k != 0 {
                assert!(c.is_zero(), "norm is not scalar");
            }
        }
        p.coeffs[0].clone()
    }

    pub fn trace(&self) -> Scalar {
        let s = self.add(&self.conj());
        for (k, c) in s.coeffs.iter().enumerate() {
            if k != 0 {
                assert!(c.is_zero(), "trace is not scalar");
            }
        }
        s.coeffs[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl fmt::Debug for AlgElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| format!("{}", c)).collect();
        write!(f, "{}[{}]", self.alg.name, parts.join(", "))
    }
}

pub fn associator(a: &AlgElement, b: &AlgElement, c: &AlgElement) -> AlgElement {
    let ab_c = a.mul(b).mul(c);
    let a_bc = a.mul(&b.mul(c));
    ab_c.sub(&a_bc)
}

pub fn commutator(a: &AlgElement, b: &AlgElement) -> AlgElement {
    a.mul(b).sub(&b.mul(a))
}

/// Basis of the derivation algebra {D : D(xy) = D(x)y + x D(y)}, each
/// derivation returned as a dim x dim matrix acting on coefficient vectors.
pub fn derivations(alg: &Alg) -> Vec<Mat> {
    let n = alg.dim;
    // unknowns: D[k][l] (entry of the matrix), n^2 of them
    // equations: for each basis pair (i,j), each output coordinate m:
    //   sum_l table[i][j][l] D[m][l]  -  sum_k D[k][i] table[k][j][m]
    //                                 -  sum_k D[k][j] table[i][k][m] = 0
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    let idx = |k: usize, l: usize| k * n + l;
    for i in 0..n {
        for j in 0..n {
            let tij = &alg.table[i][j];
            for m in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for l in 0..n {
                    if !tij[l].is_zero() {
                        row[idx(m, l)] += tij[l].clone();
                    }
                }
                for k in 0..n {
                    let t1 = alg.table[k][j][m].clone();
                    if !t1.is_zero() {
                        row[idx(k, i)] -= t1;
                    }
                    let t2 = alg.table[i][k][m].clone();
                    if !t2.is_zero() {
                        row[idx(k, j)] -= t2;
                    }
                }
                rows.push(row);
            }
        }
    }
    let sys = Mat::from_rows(rows);
    sys.kernel()
        .into_iter()
        .map(|v| Mat::from_fn(n, n, |k, l| v[idx(k, l)].clone()))
        .collect()
}

/// Basis of the smallest unital multiplication-closed subspace containing
/// the generators.
pub fn subalgebra_closure(gens: &[AlgElement]) -> Vec<AlgElement> {
    assert!(!gens.is_empty());
    let alg = gens[0].alg.clone();
    for g in gens {
        assert!(Arc::ptr_eq(&g.alg, &alg), "mixed algebras");
    }
    let mut span: Vec<AlgElement> = vec![one(&alg)];
    let add_to_span = |span: &mut Vec<AlgElement>, x: &AlgElement| -> bool {
        let mut rows: Vec<Vec<Scalar>> = span.iter().map(|e| e.coeffs.clone()).collect();
        rows.push(x.coeffs.clone());
        let m = Mat::from_rows(rows);
        if m.rank() > span.len() {
            span.push(x.clone());
            true
        } else {
            false
        }
    };
    for g in gens {
        add_to_span(&mut span, g);
    }
    loop {
        let mut grew = false;
        let snapshot = span.clone();
        'pairs: for x in &snapshot {
            for y in &snapshot {
                if add_to_span(&mut span, &x.mul(y)) {
                    grew = true;
                    if span.len() == alg.dim {
                        break 'pairs;
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    span
}

/// True iff the span of the given elements is a 4-dimensional unital,
/// multiplication-closed, associative subalgebra with nondegenerate norm
/// form (i.e. a copy of the complexified quaternions).
pub fn is_quaternion_subalgebra(basis: &[AlgElement]) -> bool {
    if basis.is_empty() {
        return false;
    }
    let alg = basis[0].alg.clone();
    let span_rows: Vec<Vec<Scalar>> = basis.iter().map(|e| e.coeffs.clone()).collect();
    let span_mat = Mat::from_rows(span_rows.clone());
    if span_mat.rank() != 4 {
        return false;
    }
    let in_span = |x: &AlgElement| -> bool {
        let mut rows = span_rows.clone();
        rows.push(x.coeffs.clone());
        Mat::from_rows(rows).rank() == 4
    };
    if !in_span(&one(&alg)) {
        return false;
    }
    for x in basis {
        for y in basis {
            if !in_span(&x.mul(y)) {
                return false;
            }
            for z in basis {
                if !associator(x, y, z).is_zero() {
                    return false;
                }
            }
        }
    }
    // norm form nondegenerate on the span: Gram matrix of the polarized
    // norm b(x,y) = N(x+y) - N(x) - N(y) has rank 4
    let gram = Mat::from_fn(4, 4, |i, j| {
        let s = basis[i].add(&basis[j]);
        s.norm() - basis[i].norm() - basis[j].norm()
    });
    gram.rank() == 4
}
