//! Exact arithmetic in `Z[ζ]`, ζ = e^{2πi/5}, on the basis ζ, ζ², ζ³, ζ⁴.
//!
//! The constant term is eliminated through 1 = −(ζ+ζ²+ζ³+ζ⁴), so every
//! element has a unique quadruple representation `⌊n,o,p,q⌋` and equality
//! is structural. Coefficients are checked `i128`; overflow aborts with a
//! message instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[inline]
fn cadd(a: i128, b: i128) -> i128 {
    a.checked_add(b)
        .expect("CycloInt coefficient overflow in addition")
}

#[inline]
fn cmul(a: i128, b: i128) -> i128 {
    a.checked_mul(b)
        .expect("CycloInt coefficient overflow in multiplication")
}

/// An element of `Z[ζ₅]` in canonical quadruple form `⌊n,o,p,q⌋`,
/// i.e. nζ + oζ² + pζ³ + qζ⁴.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycloInt {
    pub n: i128,
    pub o: i128,
    pub p: i128,
    pub q: i128,
}

impl CycloInt {
    pub const ZERO: CycloInt = CycloInt { n: 0, o: 0, p: 0, q: 0 };
    /// 1 = −(ζ+ζ²+ζ³+ζ⁴).
    pub const ONE: CycloInt = CycloInt { n: -1, o: -1, p: -1, q: -1 };

    pub fn new(n: i128, o: i128, p: i128, q: i128) -> Self {
        CycloInt { n, o, p, q }
    }

    /// Canonical form of c0 + c1ζ + c2ζ² + c3ζ³ + c4ζ⁴.
    pub fn canon(c0: i128, c1: i128, c2: i128, c3: i128, c4: i128) -> Self {
        CycloInt {
            n: c1.checked_sub(c0).expect("CycloInt overflow in canon"),
            o: c2.checked_sub(c0).expect("CycloInt overflow in canon"),
            p: c3.checked_sub(c0).expect("CycloInt overflow in canon"),
            q: c4.checked_sub(c0).expect("CycloInt overflow in canon"),
        }
    }

    /// ζᵏ for any integer k (ζ is a unit, ζ⁻¹ = ζ⁴).
    pub fn zeta(k: i64) -> Self {
        let mut c = [0i128; 5];
        c[k.rem_euclid(5) as usize] = 1;
        Self::canon(c[0], c[1], c[2], c[3], c[4])
    }

    /// (base_sign · ζᵏ)ᵉ as a CycloInt; e may be negative.
    pub fn zeta_pow(base_sign: i64, k: i64, e: i64) -> Self {
        assert!(base_sign == 1 || base_sign == -1, "base_sign must be ±1");
        let z = Self::zeta((k as i128 * e as i128).rem_euclid(5) as i64);
        if base_sign == -1 && e.rem_euclid(2) == 1 {
            -z
        } else {
            z
        }
    }

    /// Complex conjugation: ζ ↔ ζ⁴, ζ² ↔ ζ³.
    pub fn conj(self) -> Self {
        CycloInt { n: self.q, o: self.p, p: self.o, q: self.n }
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Non-negative power by repeated multiplication.
    pub fn pow(self, e: u32) -> Self {
        let mut acc = Self::ONE;
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }

    fn coeffs5(self) -> [i128; 5] {
        [0, self.n, self.o, self.p, self.q]
    }

    /// Machine form `[n,o,p,q]`.
    pub fn to_json(self) -> serde_json::Value {
        serde_json::json!([self.n, self.o, self.p, self.q])
    }

    pub fn from_quadruple(v: [i128; 4]) -> Self {
        CycloInt { n: v[0], o: v[1], p: v[2], q: v[3] }
    }
}

impl Add for CycloInt {
    type Output = CycloInt;
    fn add(self, rhs: CycloInt) -> CycloInt {
        CycloInt {
            n: cadd(self.n, rhs.n),
            o: cadd(self.o, rhs.o),
            p: cadd(self.p, rhs.p),
            q: cadd(self.q, rhs.q),
        }
    }
}

impl Sub for CycloInt {
    type Output = CycloInt;
    fn sub(self, rhs: CycloInt) -> CycloInt {
        self + (-rhs)
    }
}

impl Neg for CycloInt {
    type Output = CycloInt;
    fn neg(self) -> CycloInt {
        CycloInt {
            n: self.n.checked_neg().expect("CycloInt overflow in negation"),
            o: self.o.checked_neg().expect("CycloInt overflow in negation"),
            p: self.p.checked_neg().expect("CycloInt overflow in negation"),
            q: self.q.checked_neg().expect("CycloInt overflow in negation"),
        }
    }
}

impl Mul for CycloInt {
    type Output = CycloInt;
    fn mul(self, rhs: CycloInt) -> CycloInt {
        // Convolution on exponents with ζ⁵ = 1, then canon.
        let a = self.coeffs5();
        let b = rhs.coeffs5();
        let mut c = [0i128; 5];
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                let k = (i + j) % 5;
                c[k] = cadd(c[k], cmul(ai, bj));
            }
        }
        Self::canon(c[0], c[1], c[2], c[3], c[4])
    }
}

impl fmt::Display for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⌊{},{},{},{}⌋", self.n, self.o, self.p, self.q)
    }
}

impl fmt::Debug for CycloInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
