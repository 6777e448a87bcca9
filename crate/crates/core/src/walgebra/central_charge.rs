use super::FamilyParams;
use crate::exact::{Poly, Rat, RationalFn};
use crate::liealg::{x_norm, HalfInt};

/// Central charge `c(k)` of `W^k(sl(N), x, f)`:
///
/// `k·dim g/(k + h^∨) − 12k(x|x) − Σ_{j>0} dim g_j (12j² − 12j + 2) − ½ dim g_{1/2}`,
///
/// with the sum over positive degrees taken degree by degree.
pub fn central_charge(p: &FamilyParams) -> RationalFn {
    let grading = p.grading();
    let dims = p.dims();
    let n = i64::from(p.h_vee());
    let dim_g = Rat::from(n * n - 1);

    let k = RationalFn::var();
    let sugawara = RationalFn::new(
        Poly::new(vec![Rat::zero(), dim_g]),
        Poly::shifted_var(Rat::from(n)),
    );
    let x_term = k * (x_norm(&grading) * 12);

    let mut constant = Rat::zero();
    for (&j, &d) in dims.dim_g.range(HalfInt::from_twice(1)..) {
        let jr = j.to_rat();
        let weight = &jr * &jr * 12 - &jr * 12 + 2;
        constant += &(weight * Rat::from(d));
    }
    constant += &Rat::new(dims.g(HalfInt::from_twice(1)) as i64, 2);

    sugawara - x_term - constant
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;
    use crate::walgebra::closed_form;

    #[test]
    fn hook_3_2_matches_closed_form() {
        let p = FamilyParams::hook(3, 2).unwrap();
        let c = central_charge(&p);
        assert!(c.equals(&closed_form::hook_central_charge(3, 2)));
        assert_eq!(c.eval(&Rat::from(-3)).unwrap(), Rat::from(-2));
    }

    #[test]
    fn zero_nilpotent_is_pure_sugawara() {
        for n in 1..=6u32 {
            let p = FamilyParams::hook(1, n).unwrap();
            let dim = i64::from((n + 1) * (n + 1) - 1);
            let expected = RationalFn::new(
                Poly::from_ints(&[0, dim]),
                Poly::from_ints(&[i64::from(n) + 1, 1]),
            );
            assert_eq!(central_charge(&p), expected);
        }
    }

    #[test]
    fn rectangle_matches_closed_form() {
        let p = FamilyParams::rectangular(2, 3).unwrap();
        assert!(central_charge(&p).equals(&closed_form::rect_central_charge(2, 3)));
    }

    #[test]
    fn bershadsky_polyakov() {
        // (2,1) is the minimal nilpotent of sl(3): c = -(2k+3)(3k+1)/(k+3)
        let c = central_charge(&FamilyParams::hook(2, 1).unwrap());
        let bp = RationalFn::new(
            &Poly::from_ints(&[-3, -2]) * &Poly::from_ints(&[1, 3]),
            Poly::from_ints(&[3, 1]),
        );
        assert!(c.equals(&bp));
        assert_eq!(c.eval(&q(-1, 1)).unwrap(), Rat::from(1));
        assert!(c.eval(&Rat::from(-3)).is_err());
    }
}
