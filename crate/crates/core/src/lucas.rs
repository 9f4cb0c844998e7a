//! Lucas polynomials `F_n`, companion polynomials `L_n` and the factorials
//! `F_n! = F_1 F_2 ... F_n`, memoized in a grow-only cache.

use std::sync::RwLock;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::BivariatePolynomial;
use crate::report::IdentityReport;

#[derive(Debug)]
struct Tables {
    fib: Vec<BivariatePolynomial>,
    luc: Vec<BivariatePolynomial>,
    fact: Vec<BivariatePolynomial>,
}

/// Memo tables for `F_n`, `L_n` and `F_n!`. Lookups take a shared lock;
/// extension takes the write lock, so the cache can be shared across threads.
#[derive(Debug)]
pub struct LucasCache {
    tables: RwLock<Tables>,
}

impl Default for LucasCache {
    fn default() -> Self {
        Self::new()
    }
}

impl LucasCache {
    pub fn new() -> Self {
        Self {
            tables: RwLock::new(Tables {
                fib: vec![BivariatePolynomial::zero(), BivariatePolynomial::one()],
                luc: vec![BivariatePolynomial::constant(2), BivariatePolynomial::s()],
                fact: vec![BivariatePolynomial::one(), BivariatePolynomial::one()],
            }),
        }
    }

    /// Extends every table through index `n`.
    pub fn warm(&self, n: usize) {
        if self.tables.read().unwrap().fib.len() > n {
            return;
        }
        let mut tables = self.tables.write().unwrap();
        let s = BivariatePolynomial::s();
        let t = BivariatePolynomial::t();
        while tables.fib.len() <= n {
            let i = tables.fib.len();
            let next_fib = &(&s * &tables.fib[i - 1]) + &(&t * &tables.fib[i - 2]);
            let next_luc = &(&s * &tables.luc[i - 1]) + &(&t * &tables.luc[i - 2]);
            let next_fact = &tables.fact[i - 1] * &next_fib;
            tables.fib.push(next_fib);
            tables.luc.push(next_luc);
            tables.fact.push(next_fact);
        }
    }

    /// The Lucas polynomial `F_n`.
    pub fn fib(&self, n: usize) -> BivariatePolynomial {
        self.warm(n);
        self.tables.read().unwrap().fib[n].clone()
    }

    /// The companion polynomial `L_n` (`L_0 = 2`, `L_1 = s`).
    pub fn companion(&self, n: usize) -> BivariatePolynomial {
        self.warm(n);
        self.tables.read().unwrap().luc[n].clone()
    }

    pub fn factorial(&self, n: usize) -> BivariatePolynomial {
        self.warm(n);
        self.tables.read().unwrap().fact[n].clone()
    }

    /// Checks `F_{m+n} = F_{n+1} F_m + t F_{m-1} F_n` and the doubled companion
    /// form `2 F_{m+n} = L_n F_m + L_m F_n`.
    pub fn check_lemma1(&self, m: i64, n: i64) -> Result<IdentityReport> {
        if m < 1 {
            return Err(Error::Domain(format!("lemma1 needs m >= 1, got m = {m}")));
        }
        if n < 0 {
            return Err(Error::Domain(format!("lemma1 needs n >= 0, got n = {n}")));
        }
        let mut report = IdentityReport::new("lemma1", format!("m={m}, n={n}"));
        self.check_lemma1_into(m as usize, n as usize, &mut report);
        Ok(report)
    }

    pub(crate) fn check_lemma1_into(&self, m: usize, n: usize, report: &mut IdentityReport) {
        let params = [("m", m as i64), ("n", n as i64)];
        let t = BivariatePolynomial::t();
        let lhs = self.fib(m + n);

        let rhs = &(&self.fib(n + 1) * &self.fib(m))
            + &(&t * &(&self.fib(m - 1) * &self.fib(n)));
        report.check("lemma1-fib1", &params, &lhs, &rhs);

        let doubled = lhs.scale(&BigInt::from(2));
        let rhs = &(&self.companion(n) * &self.fib(m)) + &(&self.companion(m) * &self.fib(n));
        report.check("lemma1-fib2-doubled", &params, &doubled, &rhs);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tilings::{enumerate, TilingKind};

    fn p(text: &str) -> BivariatePolynomial {
        text.parse().unwrap()
    }

    #[test]
    fn fib_values() {
        let c = LucasCache::new();
        assert_eq!(c.fib(0), BivariatePolynomial::zero());
        assert_eq!(c.fib(1), BivariatePolynomial::one());
        assert_eq!(c.fib(4), p("s^3 + 2*s*t"));
    }

    #[test]
    fn companion_values() {
        let c = LucasCache::new();
        assert_eq!(c.companion(0), BivariatePolynomial::constant(2));
        assert_eq!(c.companion(2), p("s^2 + 2*t"));
        assert_eq!(c.companion(3), p("s^3 + 3*s*t"));
    }

    #[test]
    fn factorial_values() {
        let c = LucasCache::new();
        assert_eq!(c.factorial(0), BivariatePolynomial::one());
        assert_eq!(c.factorial(2), BivariatePolynomial::s());
        assert_eq!(c.factorial(4), p("s^6 + 3*s^4*t + 2*s^2*t^2"));
    }

    #[test]
    fn fib_is_monic_and_homogeneous() {
        let c = LucasCache::new();
        for n in 1..=20usize {
            let f = c.fib(n);
            let ((a, b), lead) = f.leading().unwrap();
            assert_eq!((a, b), (n as u32 - 1, 0));
            assert_eq!(*lead, BigInt::from(1));
            for ((a, b), _) in f.terms() {
                assert_eq!(a + 2 * b, n as u32 - 1);
            }
        }
    }

    #[test]
    fn fib_coefficients_count_tilings_by_dominoes() {
        let c = LucasCache::new();
        for n in 1..=12usize {
            let f = c.fib(n);
            let tilings = enumerate(TilingKind::Linear, n - 1);
            for d in 0..=((n - 1) / 2) {
                let count = tilings.iter().filter(|t| t.dominoes() == d).count();
                assert_eq!(f.coeff((n - 1 - 2 * d) as u32, d as u32), BigInt::from(count));
            }
        }
    }

    #[test]
    fn lemma1_examples() {
        let c = LucasCache::new();
        for (m, n) in [(1, 0), (2, 2), (3, 2)] {
            let r = c.check_lemma1(m, n).unwrap();
            assert!(r.passed(), "{r:?}");
            assert_eq!(r.cases_checked(), 2);
        }
        // F_4 = F_3 F_2 + t F_1 F_2
        assert_eq!(c.fib(4), &(&c.fib(3) * &c.fib(2)) + &(&BivariatePolynomial::t() * &c.fib(2)));
        assert!(matches!(c.check_lemma1(0, 3), Err(Error::Domain(_))));
        assert!(matches!(c.check_lemma1(2, -1), Err(Error::Domain(_))));
    }

    #[test]
    fn lemma1_range() {
        let c = LucasCache::new();
        for m in 1..=12 {
            for n in 0..=12 {
                assert!(c.check_lemma1(m, n).unwrap().passed());
            }
        }
    }

    #[test]
    fn concurrent_reads_agree() {
        let c = LucasCache::new();
        let results: Vec<_> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..4)
                .map(|i| {
                    let c = &c;
                    scope.spawn(move || c.factorial(10 + i))
                })
                .collect();
            handles.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let fresh = LucasCache::new();
        for (i, r) in results.iter().enumerate() {
            assert_eq!(*r, fresh.factorial(10 + i));
        }
    }
}
