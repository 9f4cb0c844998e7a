//! Lucasnomials at distinguished points: fibonomials `(s, t) = (1, 1)`,
//! `l`-nomials `(s, t) = (l, -1)`, and Gaussian binomials `(s, t) = (q + 1, -q)`.
//!
//! The polynomial `C(n, k)` is always computed first and then specialized.
//! Specializing the factorials before dividing would hit zero factors, e.g.
//! `F_3(1, -1) = 0`.

use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::lucasnomial::Lucasnomials;
use crate::poly::UnivariatePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    Fibonomial,
    /// `s = l`, `t = -1`.
    Lnomial(i64),
    QBinomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Specialized {
    Integer(BigInt),
    Polynomial(UnivariatePolynomial),
}

impl fmt::Display for Specialized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Specialized::Integer(v) => write!(f, "{v}"),
            Specialized::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

fn check_range(n: i64, k: i64) -> Result<(usize, usize)> {
    if n < 0 || k < 0 || k > n {
        return Err(Error::Domain(format!("need 0 <= k <= n, got n = {n}, k = {k}")));
    }
    Ok((n as usize, k as usize))
}

pub fn specialize(lucasnomials: &Lucasnomials, n: i64, k: i64, preset: Preset) -> Result<Specialized> {
    let (n, k) = check_range(n, k)?;
    let c = lucasnomials.via_recursion_fib(n, k as i64);
    Ok(match preset {
        Preset::Fibonomial => Specialized::Integer(c.eval_int(&BigInt::from(1), &BigInt::from(1))),
        Preset::Lnomial(ell) => {
            Specialized::Integer(c.eval_int(&BigInt::from(ell), &BigInt::from(-1)))
        }
        Preset::QBinomial => {
            let s = &UnivariatePolynomial::q() + &UnivariatePolynomial::one();
            let t = UnivariatePolynomial::monomial(-1, 1);
            Specialized::Polynomial(c.subst_univar(&s, &t))
        }
    })
}

/// `[n choose k]_q` as the product of `(q^(n-k+i) - 1) / (q^i - 1)` for
/// `i = 1..=k`, dividing after each factor so every partial product is itself
/// a Gaussian binomial.
pub fn gaussian_binomial_oracle(n: i64, k: i64) -> Result<UnivariatePolynomial> {
    let (n, k) = check_range(n, k)?;
    let one = UnivariatePolynomial::one();
    let mut acc = UnivariatePolynomial::one();
    for i in 1..=k {
        let num = &UnivariatePolynomial::monomial(1, n - k + i) - &one;
        let den = &UnivariatePolynomial::monomial(1, i) - &one;
        acc = (&acc * &num).exact_div(&den)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Specialized {
        Specialized::Integer(BigInt::from(v))
    }

    #[test]
    fn fibonomial_examples() {
        let l = Lucasnomials::new();
        assert_eq!(specialize(&l, 4, 2, Preset::Fibonomial).unwrap(), int(6));
        assert_eq!(specialize(&l, 5, 2, Preset::Fibonomial).unwrap(), int(15));
    }

    #[test]
    fn qbinomial_examples() {
        let l = Lucasnomials::new();
        assert_eq!(
            specialize(&l, 3, 1, Preset::QBinomial).unwrap().to_string(),
            "q^2 + q + 1"
        );
        assert_eq!(
            gaussian_binomial_oracle(4, 2).unwrap().to_string(),
            "q^4 + q^3 + 2*q^2 + q + 1"
        );
        assert_eq!(gaussian_binomial_oracle(3, 1).unwrap().to_string(), "q^2 + q + 1");
        assert_eq!(gaussian_binomial_oracle(9, 0).unwrap(), UnivariatePolynomial::one());
        assert_eq!(
            specialize(&l, 4, 2, Preset::QBinomial).unwrap(),
            Specialized::Polynomial(gaussian_binomial_oracle(4, 2).unwrap())
        );
    }

    #[test]
    fn lnomial_examples() {
        let l = Lucasnomials::new();
        assert_eq!(specialize(&l, 2, 1, Preset::Lnomial(2)).unwrap(), int(2));
        // at l = 2, t = -1 the Lucas polynomials give F_n = n, so C(n, k) is binomial
        assert_eq!(specialize(&l, 6, 3, Preset::Lnomial(2)).unwrap(), int(20));
    }

    #[test]
    fn lnomial_at_one_has_zero_factors_but_is_defined() {
        let l = Lucasnomials::new();
        let period = [0, 1, 1, 0, -1, -1];
        for n in 0..24usize {
            let f = l.lucas().fib(n).eval_int(&BigInt::from(1), &BigInt::from(-1));
            assert_eq!(f, BigInt::from(period[n % 6]));
        }
        for n in 0..=12 {
            for k in 0..=n {
                assert!(specialize(&l, n, k, Preset::Lnomial(1)).is_ok());
            }
        }
    }

    #[test]
    fn out_of_range() {
        let l = Lucasnomials::new();
        assert!(matches!(specialize(&l, 3, 4, Preset::Fibonomial), Err(Error::Domain(_))));
        assert!(matches!(specialize(&l, -1, 0, Preset::QBinomial), Err(Error::Domain(_))));
        assert!(matches!(gaussian_binomial_oracle(2, -1), Err(Error::Domain(_))));
    }
}
