use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// Reduced quotient of polynomials in `k`: `gcd(num, den) = 1` and `den` is monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFn {
    num: Poly,
    den: Poly,
}

impl RationalFn {
    /// Panics if `den` is the zero polynomial.
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFn {
                num,
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc = den.leading().unwrap().clone();
        let inv = lc.recip().unwrap();
        RationalFn {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFn {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RationalFn::from_poly(Poly::constant(c))
    }

    pub fn var() -> Self {
        RationalFn::from_poly(Poly::var())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Exact value at `k`; a root of the (reduced) denominator is a pole.
    pub fn eval(&self, k: &Rat) -> Result<Rat> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::Pole { at: k.clone() });
        }
        Ok(self.num.eval(k) / d)
    }

    /// Equality by cross multiplication, independent of the stored normal form.
    pub fn equals(&self, other: &RationalFn) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    /// `None` when `other` is zero.
    pub fn checked_div(&self, other: &RationalFn) -> Option<RationalFn> {
        if other.is_zero() {
            return None;
        }
        Some(RationalFn::new(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }
}

/// `ratfn_eval`.
pub fn ratfn_eval(f: &RationalFn, k: &Rat) -> Result<Rat> {
    f.eval(k)
}

/// `ratfn_equal`.
pub fn ratfn_equal(f: &RationalFn, g: &RationalFn) -> bool {
    f.equals(g)
}

impl From<Poly> for RationalFn {
    fn from(p: Poly) -> Self {
        RationalFn::from_poly(p)
    }
}

impl From<Rat> for RationalFn {
    fn from(c: Rat) -> Self {
        RationalFn::constant(c)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == Poly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics when dividing by the zero function; see [`RationalFn::checked_div`].
impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self.checked_div(rhs).expect("division by the zero rational function")
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: RationalFn) -> RationalFn {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&RationalFn> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: &RationalFn) -> RationalFn {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rat> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: Rat) -> RationalFn {
                (&self).$method(&RationalFn::constant(rhs))
            }
        }
        impl $trait<i64> for RationalFn {
            type Output = RationalFn;
            fn $method(self, rhs: i64) -> RationalFn {
                (&self).$method(&RationalFn::constant(Rat::from(rhs)))
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl Neg for RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use proptest::prelude::*;

    fn k() -> RationalFn {
        RationalFn::var()
    }

    #[test]
    fn eval_examples() {
        let f = k() / (k() + 1);
        assert_eq!(f.eval(&Rat::zero()).unwrap(), Rat::zero());
        assert_eq!(
            f.eval(&Rat::from(-1)),
            Err(Error::Pole { at: Rat::from(-1) })
        );
    }

    #[test]
    fn cancellation_and_equality() {
        let f = (k() * k() - 1) / (k() - 1);
        let g = k() + 1;
        assert!(ratfn_equal(&f, &g));
        assert_eq!(f, g);
        assert_eq!(f.den(), &Poly::one());
        let a = k() / (k() + 1);
        let b = k() / (k() + 2);
        assert!(!ratfn_equal(&a, &b));
    }

    #[test]
    fn denominator_is_monic() {
        let f = RationalFn::new(Poly::from_ints(&[3]), Poly::from_ints(&[4, 2]));
        assert_eq!(f.den(), &Poly::new(vec![q(2, 1), q(1, 1)]));
        assert_eq!(f.num(), &Poly::new(vec![q(3, 2)]));
    }

    fn small_ratfn() -> impl Strategy<Value = RationalFn> {
        (
            prop::collection::vec(-6i64..6, 0..4),
            prop::collection::vec(-6i64..6, 1..4),
        )
            .prop_filter_map("nonzero denominator", |(n, d)| {
                let den = Poly::from_ints(&d);
                (!den.is_zero()).then(|| RationalFn::new(Poly::from_ints(&n), den))
            })
    }

    proptest! {
        #[test]
        fn equal_functions_agree_at_random_points(
            f in small_ratfn(),
            s in prop::collection::vec(-6i64..6, 1..3).prop_filter("nonzero", |v| v.iter().any(|&x| x != 0)),
            pts in prop::collection::vec((-50i64..50, 1i64..13), 20),
        ) {
            // f and f·s/s are the same function in different unreduced forms
            let sp = RationalFn::from_poly(Poly::from_ints(&s));
            let g = RationalFn::new(
                f.num() * &Poly::from_ints(&s),
                f.den() * &Poly::from_ints(&s),
            );
            prop_assert!(ratfn_equal(&f, &g));
            prop_assert!(ratfn_equal(&g, &f));
            prop_assert!(ratfn_equal(&f, &f));
            let h = &(&f * &sp) / &sp;
            prop_assert!(ratfn_equal(&g, &h));
            for (n, d) in pts {
                let x = Rat::new(n, d);
                if let (Ok(a), Ok(b)) = (f.eval(&x), g.eval(&x)) {
                    prop_assert_eq!(a, b);
                }
            }
        }
    }
}
