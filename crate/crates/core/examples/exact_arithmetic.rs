//! Rationals, polynomials and rational functions over ℚ, and rational roots.

use wlevels::exact::{q, rational_roots, Poly, RationalFn, Rat};

fn main() -> wlevels::Result<()> {
    let a: Rat = "-15/4".parse()?;
    let b = q(10, 3);
    println!("{a} + {b} = {}", &a + &b);
    println!("{a} * {b} = {}", &a * &b);

    // (k + 15/4)(k + 3)^2(k + 10/3)
    let p = &(&Poly::shifted_var(q(15, 4)) * &Poly::shifted_var(q(3, 1)).pow(2))
        * &Poly::shifted_var(q(10, 3));
    println!("p(k) = {p}");
    for r in rational_roots(&p)? {
        println!("  root {} with multiplicity {}, p(root) = {}", r.value, r.multiplicity, p.eval(&r.value));
    }

    let f = RationalFn::new(Poly::from_ints(&[0, 3]), Poly::from_ints(&[2, 1]));
    let g = RationalFn::new(Poly::from_ints(&[0, 6, 3]), Poly::from_ints(&[4, 4, 1]));
    println!("{f} == {g}: {}", f.equals(&g));
    println!("f(1) = {}", f.eval(&Rat::one())?);
    match f.eval(&Rat::from(-2)) {
        Ok(v) => println!("f(-2) = {v}"),
        Err(e) => println!("f(-2): {e}"),
    }
    Ok(())
}
