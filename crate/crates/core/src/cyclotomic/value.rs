use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::poly::{context, Context};
use super::CycloError;

/// Inputs below this bound take the machine-word multiplication path.
const SMALL: i64 = 1 << 31;

/// An exact element of the cyclotomic field Q(ζ_n).
///
/// Stored as a polynomial in ζ_n of degree below φ(n), reduced modulo Φ_n, with
/// integer numerators over one positive common denominator. The pair is kept in
/// lowest terms, so two values at the same context are equal exactly when
/// their representations are.
#[derive(Clone)]
pub struct Cyclo {
    n: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl Cyclo {
    pub fn zero(n: u32) -> Self {
        let phi = context(n).phi;
        Cyclo {
            n,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    pub fn from_int(n: u32, value: i64) -> Self {
        let mut c = Self::zero(n);
        c.num[0] = BigInt::from(value);
        c
    }

    pub fn from_rational(n: u32, value: &BigRational) -> Self {
        let mut c = Self::zero(n);
        c.num[0] = value.numer().clone();
        c.den = value.denom().clone();
        c.normalize();
        c
    }

    /// ζ_n^i.
    pub fn root_of_unity(n: u32, i: i64) -> Self {
        let ctx = context(n);
        let i = i.rem_euclid(n as i64) as usize;
        let mut c = Self::zero(n);
        for &(t, v) in &ctx.powers[i] {
            c.num[t] = BigInt::from(v);
        }
        c
    }

    /// Builds `Σ coeffs[i]·ζ_n^i` from integer coefficients of any length.
    pub fn from_root_coeffs(n: u32, coeffs: &[i64]) -> Self {
        let ctx = context(n);
        let mut acc = vec![0i128; n as usize];
        for (i, &c) in coeffs.iter().enumerate() {
            acc[i % n as usize] += c as i128;
        }
        Self::from_small_acc(&ctx, &acc, BigInt::one())
    }

    /// The conductor context `n` this value is represented at.
    pub fn context(&self) -> u32 {
        self.n
    }

    /// Coefficients in the basis `1, ζ_n, …, ζ_n^(φ(n)−1)`.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// The value as an integer, if it is one.
    pub fn to_integer(&self) -> Option<BigInt> {
        (self.is_rational() && self.den.is_one()).then(|| self.num[0].clone())
    }

    pub fn to_i64(&self) -> Option<i64> {
        self.to_integer().and_then(|v| v.to_i64())
    }

    /// Re-expresses the value at context `m`, which must be a multiple of `n`.
    pub fn lift(&self, m: u32) -> Cyclo {
        assert!(
            m.is_multiple_of(self.n),
            "cannot lift context {} to {m}",
            self.n
        );
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as usize;
        self.spread(m, |i| i * step)
    }

    /// σ_k : ζ_n ↦ ζ_n^k.
    pub fn galois(&self, k: i64) -> Result<Cyclo, CycloError> {
        let n = self.n as i64;
        let k = k.rem_euclid(n.max(1));
        if n > 1 && k.gcd(&n) != 1 {
            return Err(CycloError::NotCoprime { k, n: self.n });
        }
        if self.is_rational() || k == 1 {
            return Ok(self.clone());
        }
        let k = k as usize;
        let n = n as usize;
        Ok(self.spread(self.n, |i| (i * k) % n))
    }

    /// Complex conjugate, σ_{−1}.
    pub fn conj(&self) -> Cyclo {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Multiplies by ζ_n^s.
    pub fn mul_root(&self, s: i64) -> Cyclo {
        let n = self.n as usize;
        let s = s.rem_euclid(self.n as i64) as usize;
        if s == 0 {
            return self.clone();
        }
        self.spread(self.n, |i| (i + s) % n)
    }

    pub fn scale(&self, r: &BigRational) -> Cyclo {
        let mut out = Cyclo {
            n: self.n,
            num: self.num.iter().map(|c| c * r.numer()).collect(),
            den: &self.den * r.denom(),
        };
        out.normalize();
        out
    }

    pub fn scale_int(&self, k: i64) -> Cyclo {
        self.scale(&BigRational::from_integer(BigInt::from(k)))
    }

    pub fn div_int(&self, k: i64) -> Cyclo {
        assert!(k != 0, "division by zero");
        self.scale(&BigRational::new(BigInt::one(), BigInt::from(k)))
    }

    /// Multiplicative inverse via the field norm; `None` for zero.
    pub fn inverse(&self) -> Option<Cyclo> {
        if self.is_zero() {
            return None;
        }
        let n = self.n as i64;
        let mut others = Cyclo::one(self.n);
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois(k).expect("unit");
            }
        }
        let norm = (self * &others)
            .to_rational()
            .expect("field norm is rational");
        Some(others.scale(&norm.recip()))
    }

    fn common(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        if a.n == b.n {
            return (a.clone(), b.clone());
        }
        let m = a.n.lcm(&b.n);
        (a.lift(m), b.lift(m))
    }

    /// Moves coefficient `i` to root exponent `target(i)` at context `m`, then
    /// reduces.
    fn spread(&self, m: u32, target: impl Fn(usize) -> usize) -> Cyclo {
        let ctx = context(m);
        if let Some(small) = self.small_num().filter(|_| ctx.max_abs < SMALL) {
            let mut acc = vec![0i128; m as usize];
            for (i, &c) in small.iter().enumerate() {
                if c != 0 {
                    acc[target(i)] += c as i128;
                }
            }
            return Self::from_small_acc(&ctx, &acc, self.den.clone());
        }
        let mut acc = vec![BigInt::zero(); m as usize];
        for (i, c) in self.num.iter().enumerate() {
            if !c.is_zero() {
                acc[target(i)] += c;
            }
        }
        Self::from_big_acc(&ctx, &acc, self.den.clone())
    }

    fn small_num(&self) -> Option<Vec<i64>> {
        self.num
            .iter()
            .map(|c| c.to_i64().filter(|v| v.abs() < SMALL))
            .collect()
    }

    fn from_small_acc(ctx: &Arc<Context>, acc: &[i128], den: BigInt) -> Cyclo {
        let mut out = vec![0i128; ctx.phi];
        for (i, &a) in acc.iter().enumerate() {
            if a != 0 {
                for &(t, v) in &ctx.powers[i] {
                    out[t] += a * v as i128;
                }
            }
        }
        let mut c = Cyclo {
            n: ctx.n,
            num: out.into_iter().map(BigInt::from).collect(),
            den,
        };
        c.normalize();
        c
    }

    fn from_big_acc(ctx: &Arc<Context>, acc: &[BigInt], den: BigInt) -> Cyclo {
        let mut out = vec![BigInt::zero(); ctx.phi];
        for (i, a) in acc.iter().enumerate() {
            if !a.is_zero() {
                for &(t, v) in &ctx.powers[i] {
                    out[t] += a * v;
                }
            }
        }
        let mut c = Cyclo {
            n: ctx.n,
            num: out,
            den,
        };
        c.normalize();
        c
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -&self.den;
            for c in &mut self.num {
                *c = -&*c;
            }
        }
        if self.den.is_one() {
            return;
        }
        if self.is_zero() {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            self.den /= &g;
            for c in &mut self.num {
                *c /= &g;
            }
        }
    }

    fn add_same(a: &Cyclo, b: &Cyclo, sign: i8) -> Cyclo {
        debug_assert_eq!(a.n, b.n);
        let mut out = if a.den == b.den {
            Cyclo {
                n: a.n,
                num: a
                    .num
                    .iter()
                    .zip(&b.num)
                    .map(|(x, y)| if sign > 0 { x + y } else { x - y })
                    .collect(),
                den: a.den.clone(),
            }
        } else {
            Cyclo {
                n: a.n,
                num: a
                    .num
                    .iter()
                    .zip(&b.num)
                    .map(|(x, y)| {
                        let l = x * &b.den;
                        let r = y * &a.den;
                        if sign > 0 {
                            l + r
                        } else {
                            l - r
                        }
                    })
                    .collect(),
                den: &a.den * &b.den,
            }
        };
        out.normalize();
        out
    }

    fn mul_same(a: &Cyclo, b: &Cyclo) -> Cyclo {
        debug_assert_eq!(a.n, b.n);
        let ctx = context(a.n);
        let n = a.n as usize;
        let den = &a.den * &b.den;
        if a.is_rational() {
            return b.scale(&BigRational::new(a.num[0].clone(), a.den.clone()));
        }
        if b.is_rational() {
            return a.scale(&BigRational::new(b.num[0].clone(), b.den.clone()));
        }
        if let (Some(x), Some(y)) = (a.small_num(), b.small_num()) {
            if ctx.max_abs < SMALL {
                let mut acc = vec![0i128; n];
                for (i, &xi) in x.iter().enumerate() {
                    if xi == 0 {
                        continue;
                    }
                    for (j, &yj) in y.iter().enumerate() {
                        if yj != 0 {
                            acc[(i + j) % n] += xi as i128 * yj as i128;
                        }
                    }
                }
                return Self::from_small_acc(&ctx, &acc, den);
            }
        }
        let mut acc = vec![BigInt::zero(); n];
        for (i, xi) in a.num.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in b.num.iter().enumerate() {
                if !yj.is_zero() {
                    acc[(i + j) % n] += xi * yj;
                }
            }
        }
        Self::from_big_acc(&ctx, &acc, den)
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        if self.n == other.n {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = Cyclo::common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for Cyclo {}

impl Add for &Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        if self.n == rhs.n {
            return Cyclo::add_same(self, rhs, 1);
        }
        let (a, b) = Cyclo::common(self, rhs);
        Cyclo::add_same(&a, &b, 1)
    }
}

impl Sub for &Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        if self.n == rhs.n {
            return Cyclo::add_same(self, rhs, -1);
        }
        let (a, b) = Cyclo::common(self, rhs);
        Cyclo::add_same(&a, &b, -1)
    }
}

impl Mul for &Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        if self.n == rhs.n {
            return Cyclo::mul_same(self, rhs);
        }
        let (a, b) = Cyclo::common(self, rhs);
        Cyclo::mul_same(&a, &b)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            n: self.n,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Cyclo {
            type Output = Cyclo;
            fn $method(self, rhs: Cyclo) -> Cyclo {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo({})", self)
    }
}

impl fmt::Display for Cyclo {
    /// Integer combination of `E(n)^i` terms, over a denominator when needed:
    /// `E(8)-E(8)^3`, `-1`, `(1+2*E(3))/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut body = String::new();
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if negative {
                body.push('-');
            } else if !body.is_empty() {
                body.push('+');
            }
            if i == 0 {
                body.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                body.push_str(&mag.to_string());
                body.push('*');
            }
            if i == 1 {
                body.push_str(&format!("E({})", self.n));
            } else {
                body.push_str(&format!("E({})^{}", self.n, i));
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if self.den.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.den)
        }
    }
}
