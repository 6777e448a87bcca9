use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rat;

/// Univariate polynomial over ℚ in the indeterminate `k`.
///
/// Coefficients are stored in ascending degree with trailing zeros stripped,
/// so the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    /// The indeterminate `k`.
    pub fn var() -> Self {
        Poly::new(vec![Rat::zero(), Rat::one()])
    }

    /// `k + shift`.
    pub fn shifted_var(shift: Rat) -> Self {
        Poly::new(vec![shift, Rat::one()])
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, k: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * k + c)
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scale(&lc.recip().expect("leading coefficient is nonzero")),
        }
    }

    /// Euclidean division over ℚ. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.leading().unwrap().recip().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); n - dd];
        for i in (0..n - dd).rev() {
            let c = &rem[i + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    let t = &c * d;
                    rem[i + j] -= &t;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Primitive integer polynomial with the same roots: denominators cleared,
    /// content removed, leading coefficient positive.
    pub fn to_primitive_integer(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        primitive(ints)
    }

    fn from_integer_coeffs(c: &[BigInt]) -> Poly {
        Poly::new(c.iter().cloned().map(Rat::from_int).collect())
    }

    /// Monic greatest common divisor, computed with the primitive
    /// pseudo-remainder sequence so intermediate values stay integral.
    /// `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.to_primitive_integer();
        let mut b = other.to_primitive_integer();
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = primitive(pseudo_rem(&a, &b));
            a = b;
            b = r;
        }
        Poly::from_integer_coeffs(&a).monic()
    }

    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| &acc * self)
    }

    /// Renders in the indeterminate `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag.to_string());
            } else if mag == Rat::one() {
                out.push_str(&mono);
            } else if mag.is_integer() {
                out.push_str(&format!("{mag}{mono}"));
            } else {
                out.push_str(&format!("({mag}){mono}"));
            }
        }
        out
    }
}

/// Removes the integer content and makes the leading coefficient positive.
fn primitive(mut c: Vec<BigInt>) -> Vec<BigInt> {
    while c.last().is_some_and(Zero::is_zero) {
        c.pop();
    }
    if c.is_empty() {
        return c;
    }
    let mut g = c.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if c.last().unwrap().is_negative() {
        g = -g;
    }
    c.into_iter().map(|x| x / &g).collect()
}

/// Pseudo-remainder `lc(b)^(deg a - deg b + 1) · a mod b` over ℤ.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db && !r.is_empty() {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        let shift = dr - db;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] -= &lr * bj;
        }
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("k"))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn strips_trailing_zeros() {
        let p = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::from_ints(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn division_identity() {
        let a = Poly::from_ints(&[-1, 0, 0, 2, 5]);
        let b = Poly::new(vec![q(1, 2), q(-3, 1), q(2, 3)]);
        let (quo, rem) = a.div_rem(&b);
        assert!(rem.degree().unwrap_or(0) < 2);
        assert_eq!(&(&quo * &b) + &rem, a);
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (k-1)(k+2) and (k-1)(2k+3)
        let a = Poly::from_ints(&[-2, 1, 1]);
        let b = Poly::from_ints(&[-3, 1, 2]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&[-1, 1]));
        assert_eq!(a.gcd(&Poly::from_ints(&[5])), Poly::one());
        assert_eq!(a.gcd(&Poly::zero()), a.monic());
    }

    #[test]
    fn primitive_integer_form() {
        let p = Poly::new(vec![q(-3, 2), q(0, 1), q(-3, 4)]);
        let ints: Vec<i64> = p
            .to_primitive_integer()
            .iter()
            .map(|b| i64::try_from(b).unwrap())
            .collect();
        assert_eq!(ints, vec![2, 0, 1]);
    }

    #[test]
    fn display() {
        let p = Poly::new(vec![q(-1, 1), q(0, 1), q(3, 2), q(1, 1)]);
        assert_eq!(p.to_string(), "k^3 + (3/2)k^2 - 1");
        assert_eq!(Poly::from_ints(&[0, -1]).to_string(), "-k");
    }
}
