//! Closed-form expressions for the hook and rectangular families, used for
//! tagging solver output and as cross-checks on the general engine.

use crate::exact::{Rat, RationalFn};

fn k() -> RationalFn {
    RationalFn::var()
}

fn c(v: i64) -> RationalFn {
    RationalFn::constant(Rat::from(v))
}

/// Hook central charge
/// `−(k + k(1−m−n)(m+n) + (m+n)²)/(k+m+n) + m(k − m − n − m²(1+k+m+n) + m(1+3(m+n)))`.
pub fn hook_central_charge(m: u32, n: u32) -> RationalFn {
    let (m, n) = (i64::from(m), i64::from(n));
    let h = m + n;
    let first_num = k() + k() * ((1 - h) * h) + h * h;
    let first = -(first_num / (k() + h));
    let second = (k() - h - (k() + (1 + h)) * (m * m) + m * (1 + 3 * h)) * m;
    first + second
}

/// Rectangular central charge
/// `k(m(q−q³)(k+mq) + m²q² − 1)/(k+mq) − m²q(q³−2q²+1)`.
pub fn rect_central_charge(q: u32, m: u32) -> RationalFn {
    let (q, m) = (i64::from(q), i64::from(m));
    let inner = (k() + m * q) * (m * (q - q * q * q)) + (m * m * q * q - 1);
    k() * inner / (k() + m * q) - c(m * m * q * (q * q * q - 2 * q * q + 1))
}

/// Sugawara central charge of `V^{k1}(sl(m))` with `k1 = qk + mq² − mq`,
/// written as `(m²−1)q(k+mq−m)/(q(k+mq−m)+m)`.
pub fn rect_coset_central_charge(q: u32, m: u32) -> RationalFn {
    let (q, m) = (i64::from(q), i64::from(m));
    let shifted = k() + (m * q - m);
    let num = shifted.clone() * ((m * m - 1) * q);
    let den = shifted * q + m;
    num / den
}

/// The hook conformal levels `k^{(i)}_{m,n}`, `i = 1..4`; `None` when the
/// level is not defined for `(m, n)` (`i = 1` needs `n > 1`, `i = 3` needs
/// `m > 1`).
pub fn hook_level(i: u8, m: u32, n: u32) -> Option<Rat> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let h = Rat::from(mi + ni);
    match i {
        1 if n > 1 => Some(-&h + &h / (mi + 1)),
        2 => Some(-&h + (&h + 1) / mi),
        3 if m > 1 => Some(-&h + (&h - 1) / (mi - 1)),
        4 => Some(-&h + &h / mi),
        _ => None,
    }
}

/// The rectangular conformal levels `k^{[i]}_{m,q}`, `i = 1..3`.
pub fn rect_level(i: u8, q: u32, m: u32) -> Option<Rat> {
    let (qi, mi) = (i64::from(q), i64::from(m));
    match i {
        1 => Some(Rat::new(-mi * qi * qi, qi + 1)),
        2 => Some(Rat::new(-mi * qi * qi + mi * qi - 1, qi)),
        3 => Some(Rat::new(-mi * qi * qi + mi * qi + 1, qi)),
        _ => None,
    }
}

/// `−(m−1)(m+n)/m`, the level at which the Heisenberg coset level vanishes.
pub fn hook_degenerate_level(m: u32, n: u32) -> Rat {
    let (m, n) = (i64::from(m), i64::from(n));
    Rat::new(-(m - 1) * (m + n), m)
}

/// Row of the hook dimension table at `g_{−j}`, `j = twice_j/2 ≥ 0`:
/// `(dim g_{−j}, dim g^f_{−j})`, or `None` for degrees the table does not
/// list (those pieces vanish). Valid for `m ≥ 2`.
pub fn hook_table_row(m: u32, n: u32, twice_j: u32) -> Option<(u64, u64)> {
    let (m, n, t) = (u64::from(m), u64::from(n), u64::from(twice_j));
    if t == 0 {
        let dim = if m % 2 == 1 { n * n + 2 * n + m - 1 } else { n * n + m - 1 };
        return Some((dim, n * n));
    }
    if m % 2 == 1 {
        if t % 2 == 1 {
            return None;
        }
        let j = t / 2;
        if j == (m - 1) / 2 {
            Some((2 * n + (m + 1) / 2, 2 * n + 1))
        } else if j < (m - 1) / 2 {
            Some((2 * n + m - j, 1))
        } else if j <= m - 1 {
            Some((m - j, 1))
        } else {
            None
        }
    } else if t % 2 == 0 {
        let j = t / 2;
        (j <= m - 1).then(|| (m - j, 1))
    } else if t == m - 1 {
        Some((2 * n, 2 * n))
    } else if t < m - 1 {
        Some((2 * n, 0))
    } else {
        None
    }
}

/// Row of the rectangular dimension table at `g_{−j}`, `j = twice_j/2`.
pub fn rect_table_row(q: u32, m: u32, twice_j: u32) -> Option<(u64, u64)> {
    let (q, m, t) = (u64::from(q), u64::from(m), u64::from(twice_j));
    if t % 2 == 1 {
        return None;
    }
    let j = t / 2;
    if j == 0 {
        Some((m * m * q - 1, m * m - 1))
    } else if j <= q - 1 {
        Some((m * m * (q - j), m * m))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    #[test]
    fn hook_value() {
        assert_eq!(hook_central_charge(3, 2).eval(&Rat::from(-3)).unwrap(), Rat::from(-2));
    }

    #[test]
    fn hook_levels_3_2() {
        assert_eq!(hook_level(1, 3, 2), Some(q(-15, 4)));
        assert_eq!(hook_level(2, 3, 2), Some(q(-3, 1)));
        assert_eq!(hook_level(3, 3, 2), Some(q(-3, 1)));
        assert_eq!(hook_level(4, 3, 2), Some(q(-10, 3)));
        assert_eq!(hook_level(1, 3, 1), None);
        assert_eq!(hook_level(3, 1, 4), None);
        assert_eq!(hook_level(4, 3, 2), Some(hook_degenerate_level(3, 2)));
    }

    #[test]
    fn hook_level_alternative_forms() {
        // second expressions in the statement of the level formulas
        for m in 2..=8u32 {
            for n in 2..=8u32 {
                let h = Rat::from(m + n);
                let mr = Rat::from(m);
                assert_eq!(hook_level(1, m, n).unwrap(), -(&mr / (&mr + 1)) * &h);
                assert_eq!(hook_level(2, m, n).unwrap(), -((&mr - 1) * &h - 1) / &mr);
                assert_eq!(hook_level(3, m, n).unwrap(), -((&mr - 2) * &h + 1) / (&mr - 1));
                let (mi, ni) = (i64::from(m), i64::from(n));
                assert_eq!(
                    hook_level(3, m, n).unwrap(),
                    Rat::new(-1 + 2 * mi - mi * mi + 2 * ni - mi * ni, mi - 1)
                );
            }
        }
    }

    #[test]
    fn table_rows() {
        // (3,2): sl(5), x = diag(1, 0, -1, 0, 0)
        assert_eq!(hook_table_row(3, 2, 0), Some((10, 4)));
        assert_eq!(hook_table_row(3, 2, 2), Some((6, 5)));
        assert_eq!(hook_table_row(3, 2, 4), Some((1, 1)));
        assert_eq!(hook_table_row(3, 2, 1), None);
        // (2,2): minimal nilpotent of sl(4)
        assert_eq!(hook_table_row(2, 2, 0), Some((5, 4)));
        assert_eq!(hook_table_row(2, 2, 1), Some((4, 4)));
        assert_eq!(hook_table_row(2, 2, 2), Some((1, 1)));
        assert_eq!(hook_table_row(4, 1, 1), Some((2, 0)));
        assert_eq!(rect_table_row(2, 2, 0), Some((7, 3)));
        assert_eq!(rect_table_row(2, 2, 2), Some((4, 4)));
        assert_eq!(rect_table_row(2, 2, 4), None);
    }

    #[test]
    fn rect_levels_2_3() {
        assert_eq!(rect_level(1, 2, 3), Some(q(-4, 1)));
        assert_eq!(rect_level(2, 2, 3), Some(q(-7, 2)));
        assert_eq!(rect_level(3, 2, 3), Some(q(-5, 2)));
    }
}
