//! Exact arithmetic in the field Q(i, sqrt2).
//!
//! Every scalar is a + b*i + c*sqrt2 + d*i*sqrt2 with rational components,
//! so i^2 = -1, sqrt2^2 = 2 and (i*sqrt2)^2 = -2.  This is the smallest
//! field containing all constants used elsewhere (in particular sqrt(-2)).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rat = BigRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl Scalar {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        Scalar { a, b, c, d }
    }

    pub fn zero() -> Self {
        Scalar::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn one() -> Self {
        Scalar::new(Rat::one(), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn i() -> Self {
        Scalar::new(Rat::zero(), Rat::one(), Rat::zero(), Rat::zero())
    }

    pub fn sqrt2() -> Self {
        Scalar::new(Rat::zero(), Rat::zero(), Rat::one(), Rat::zero())
    }

    /// i*sqrt2, a square root of -2.
    pub fn sqrt_minus2() -> Self {
        Scalar::new(Rat::zero(), Rat::zero(), Rat::zero(), Rat::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(Rat::from_integer(BigInt::from(n)), Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn from_frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            Rat::new(BigInt::from(num), BigInt::from(den)),
            Rat::zero(),
            Rat::zero(),
            Rat::zero(),
        )
    }

    pub fn from_rat(r: Rat) -> Self {
        Scalar::new(r, Rat::zero(), Rat::zero(), Rat::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// True when the value lies in Q (no i or sqrt2 part).
    pub fn is_rational(&self) -> bool {
        self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    /// Complex conjugation: i -> -i, sqrt2 fixed.
    pub fn conj_i(&self) -> Self {
        Scalar::new(self.a.clone(), -self.b.clone(), self.c.clone(), -self.d.clone())
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        // Multiply by the i-conjugate: the product lands in Q(sqrt2).
        let conj = self.conj_i();
        let p = self.clone() * conj.clone();
        debug_assert!(p.b.is_zero() && p.d.is_zero());
        // Invert u + v*sqrt2 in Q(sqrt2).
        let (u, v) = (p.a, p.c);
        let norm = &u * &u - Rat::from_integer(BigInt::from(2)) * &v * &v;
        assert!(!norm.is_zero());
        let inv_p = Scalar::new(&u / &norm, Rat::zero(), -(&v / &norm), Rat::zero());
        conj * inv_p
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, o: Scalar) -> Scalar {
        Scalar::new(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        self.a += o.a;
        self.b += o.b;
        self.c += o.c;
        self.d += o.d;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, o: Scalar) -> Scalar {
        Scalar::new(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, o: Scalar) {
        self.a -= o.a;
        self.b -= o.b;
        self.c -= o.c;
        self.d -= o.d;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, o: Scalar) -> Scalar {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&o.a, &o.b, &o.c, &o.d);
        let two = Rat::from_integer(BigInt::from(2));
        Scalar::new(
            a1 * a2 - b1 * b2 + &two * c1 * c2 - &two * d1 * d2,
            a1 * b2 + b1 * a2 + &two * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 - (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, o: Scalar) {
        *self = self.clone() * o;
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, o: Scalar) -> Scalar {
        self * o.inv()
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::new();
        let push = |parts: &mut Vec<String>, r: &Rat, sym: &str| {
            if r.is_zero() {
                return;
            }
            let mag = r.abs();
            let body = if sym.is_empty() {
                format!("{}", mag)
            } else if mag.is_one() {
                sym.to_string()
            } else {
                format!("{}*{}", mag, sym)
            };
            if r.is_negative() {
                parts.push(format!("-{}", body));
            } else if parts.is_empty() {
                parts.push(body);
            } else {
                parts.push(format!("+{}", body));
            }
        };
        push(&mut parts, &self.a, "");
        push(&mut parts, &self.b, "i");
        push(&mut parts, &self.c, "sqrt2");
        push(&mut parts, &self.d, "i*sqrt2");
        write!(f, "{}", parts.join(""))
    }
}
