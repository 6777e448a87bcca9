use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Poly, Rat};
use crate::error::{Error, Result};

/// A rational root together with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalRoot {
    pub value: Rat,
    pub multiplicity: usize,
}

/// All rational roots of `p`, ascending, via the rational-root theorem on the
/// primitive integer polynomial.
pub fn rational_roots(p: &Poly) -> Result<Vec<RationalRoot>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut c = p.to_primitive_integer();
    let mut roots = Vec::new();

    let zeros = c.iter().take_while(|x| x.is_zero()).count();
    if zeros > 0 {
        roots.push(RationalRoot {
            value: Rat::zero(),
            multiplicity: zeros,
        });
        c.drain(..zeros);
    }

    if c.len() > 1 {
        let lead = c.last().unwrap().abs();
        let tail = c[0].abs();
        let ps = divisors(&tail);
        let qs = divisors(&lead);
        let mut candidates: Vec<Rat> = Vec::new();
        for num in &ps {
            for den in &qs {
                if num.gcd(den).is_one() {
                    candidates.push(Rat::new(num.clone(), den.clone()));
                    candidates.push(Rat::new(-num.clone(), den.clone()));
                }
            }
        }
        for r in candidates {
            let mut mult = 0;
            while c.len() > 1 && divides_out(&mut c, &r) {
                mult += 1;
            }
            if mult > 0 {
                roots.push(RationalRoot {
                    value: r,
                    multiplicity: mult,
                });
            }
        }
    }

    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(roots)
}

/// If `r = num/den` is a root of `c`, replaces `c` by the integer quotient
/// `c / (den·k − num)` and returns true.
fn divides_out(c: &mut Vec<BigInt>, r: &Rat) -> bool {
    let num = r.numer();
    let den = r.denom();
    // den^n · c(num/den), by Horner in homogeneous form
    let mut acc = BigInt::zero();
    let mut den_pow = BigInt::one();
    for (i, a) in c.iter().enumerate().rev() {
        acc = acc * num + a * &den_pow;
        if i > 0 {
            den_pow *= den;
        }
    }
    if !acc.is_zero() {
        return false;
    }
    // synthetic division by (den·k − num), exact over ℤ by Gauss's lemma
    let mut quot = vec![BigInt::zero(); c.len() - 1];
    let mut carry = BigInt::zero();
    for i in (1..c.len()).rev() {
        let top = &c[i] + &carry;
        let qi = top.div_floor(den);
        debug_assert!((&qi * den - &top).is_zero());
        carry = &qi * num;
        quot[i - 1] = qi;
    }
    *c = quot;
    true
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &(&d * &d) <= n {
        if (n % &d).is_zero() {
            let other = n / &d;
            if other != d {
                large.push(other);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use proptest::prelude::*;

    fn values(p: &Poly) -> Vec<Rat> {
        rational_roots(p).unwrap().into_iter().map(|r| r.value).collect()
    }

    #[test]
    fn simple_examples() {
        assert_eq!(values(&Poly::from_ints(&[-1, 0, 1])), vec![q(-1, 1), q(1, 1)]);
        assert_eq!(values(&Poly::from_ints(&[3, 2])), vec![q(-3, 2)]);
        assert_eq!(values(&Poly::from_ints(&[1, 0, 1])), Vec::<Rat>::new());
        assert_eq!(values(&Poly::from_ints(&[7])), Vec::<Rat>::new());
        assert_eq!(rational_roots(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn multiplicities() {
        // k^2 (2k+1)^3 (k-3)
        let lin = Poly::from_ints(&[1, 2]);
        let p = &(&Poly::var().pow(2) * &lin.pow(3)) * &Poly::from_ints(&[-3, 1]);
        let roots = rational_roots(&p).unwrap();
        assert_eq!(
            roots,
            vec![
                RationalRoot { value: q(-1, 2), multiplicity: 3 },
                RationalRoot { value: q(0, 1), multiplicity: 2 },
                RationalRoot { value: q(3, 1), multiplicity: 1 },
            ]
        );
    }

    #[test]
    fn rational_coefficients() {
        // (k + 15/4)(k + 3)^2 (k + 10/3), scaled by 7/5
        let p = [q(15, 4), q(3, 1), q(3, 1), q(10, 3)]
            .iter()
            .fold(Poly::constant(q(7, 5)), |acc, r| &acc * &Poly::shifted_var(r.clone()));
        let roots = rational_roots(&p).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(roots[1], RationalRoot { value: q(-10, 3), multiplicity: 1 });
        assert_eq!(roots[2], RationalRoot { value: q(-3, 1), multiplicity: 2 });
        assert_eq!(roots[0].value, q(-15, 4));
    }

    proptest! {
        #[test]
        fn planted_roots_are_found_and_verified(
            planted in prop::collection::vec((-12i64..12, 1i64..9), 1..5),
            extra in prop::collection::vec(-5i64..5, 0..3),
        ) {
            let mut p = Poly::one();
            for (n, d) in &planted {
                p = &p * &Poly::new(vec![Rat::from(-*n), Rat::from(*d)]);
            }
            // positive definite, so it contributes no real roots
            let noise = &Poly::from_ints(&extra) * &Poly::from_ints(&extra) + Poly::from_ints(&[1]);
            p = &p * &noise;
            let found = rational_roots(&p).unwrap();
            for (n, d) in &planted {
                let r = Rat::new(*n, *d);
                prop_assert!(found.iter().any(|x| x.value == r));
            }
            let total: usize = found.iter().map(|r| r.multiplicity).sum();
            prop_assert!(total <= p.degree().unwrap());
            for r in &found {
                prop_assert!(p.eval(&r.value).is_zero());
            }
        }
    }
}
