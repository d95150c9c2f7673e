//! Printing of polynomials and rational functions in the input syntax.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::rational::Q;
use crate::algebra::{Monomial, MultiPoly, RatFunc, Var};

fn monomial_str(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for v in Var::ALL {
        match m.exp(v) {
            0 => {}
            1 => parts.push(v.name().to_string()),
            e => parts.push(format!("{}^{}", v.name(), e)),
        }
    }
    parts.join("*")
}

fn term_str(c: &Q, m: &Monomial) -> String {
    if *m == Monomial::one() {
        return c.to_string();
    }
    let ms = monomial_str(m);
    if c.is_one() {
        ms
    } else {
        format!("{c}*{ms}")
    }
}

pub fn render_poly(p: &MultiPoly) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms().enumerate() {
        let neg = c.is_negative();
        let body = term_str(&c.abs(), m);
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}

/// Scales `num/den` so that every coefficient is an integer with no common factor.
fn integer_form(num: &MultiPoly, den: &MultiPoly) -> (MultiPoly, MultiPoly) {
    let coeffs = || num.terms().chain(den.terms()).map(|(_, c)| c);
    let l = coeffs().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let g = coeffs().fold(BigInt::zero(), |acc, c| acc.gcd(&(c.numer() * &l / c.denom())));
    let k = Q::new(l, g);
    (num.scale(&k), den.scale(&k))
}

/// Renders a rational function so that it parses back to the same value.
pub fn render(r: &RatFunc) -> String {
    if r.is_polynomial() {
        return render_poly(r.num());
    }
    let (n, d) = integer_form(r.num(), r.den());
    let num = render_poly(&n);
    let num = if n.num_terms() > 1 { format!("({num})") } else { num };
    if d.num_terms() == 1 {
        let den = render_poly(&d);
        return if den.contains('*') { format!("{num}/({den})") } else { format!("{num}/{den}") };
    }
    let c = d.terms().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()));
    let den = if c.is_one() {
        format!("({})", render_poly(&d))
    } else {
        format!("({c}*({}))", render_poly(&d.scale(&Q::from_integer(c.clone()).recip())))
    };
    format!("{num}/{den}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse::parse_ratfunc;

    #[test]
    fn reciprocal_of_sum() {
        let r = &RatFunc::one() / &(&RatFunc::var(Var::Z) + &RatFunc::var(Var::Lambda));
        assert_eq!(render(&r), "1/(z + lambda)");
    }

    #[test]
    fn fractions_are_cleared() {
        assert_eq!(render(&parse_ratfunc("3/(2*(z^2 + 1))").unwrap()), "3/(2*(z^2 + 1))");
        assert_eq!(render(&parse_ratfunc("(z^2 + 2)/(2*z^2 + 2)").unwrap()), "(z^2 + 2)/(2*(z^2 + 1))");
        assert_eq!(render(&parse_ratfunc("1/(3*z^2)").unwrap()), "1/(3*z^2)");
        assert_eq!(render(&parse_ratfunc("-z/(z^2 + 2)").unwrap()), "-z/(z^2 + 2)");
    }

    #[test]
    fn zero_renders_as_0() {
        assert_eq!(render(&RatFunc::zero()), "0");
    }

    #[test]
    fn example_one_round_trip() {
        let r = parse_ratfunc("(17/16) - 27*t + (2187/2)*t^2 + 531441*t^4").unwrap();
        let s = render(&r);
        assert_eq!(parse_ratfunc(&s).unwrap(), r);
    }

    #[test]
    fn fractional_coefficients_round_trip() {
        for text in ["-3/2*z/(z^2 + 1)", "(z - 1/3)/(2*z*lambda - 7)", "-z^-2", "wp*w - 5/7"] {
            let r = parse_ratfunc(text).unwrap();
            assert_eq!(parse_ratfunc(&render(&r)).unwrap(), r, "{text}");
        }
    }
}
