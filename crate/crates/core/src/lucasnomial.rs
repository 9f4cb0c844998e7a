//! Lucasnomial coefficients `F_n! / (F_k! F_{n-k}!)`, computed three ways:
//!
//! * `Quotient`: exact division of the factorial polynomials.
//! * `RecFib`: the Pascal-type recursion with coefficients `F_{n-k+1}` and `t F_{k-1}`.
//! * `RecLuc`: the companion recursion, run on `2^n C(n, k)` so that every
//!   intermediate stays an integer polynomial, then divided back down.
//!
//! Each method keeps its own memo so that comparing them compares genuinely
//! separate computations. Indices outside `0 <= k <= n` give zero.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::lucas::LucasCache;
use crate::poly::BivariatePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Quotient,
    RecFib,
    RecLuc,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Quotient, Method::RecFib, Method::RecLuc];

    pub fn name(self) -> &'static str {
        match self {
            Method::Quotient => "quotient",
            Method::RecFib => "rec-fib",
            Method::RecLuc => "rec-luc",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown method {s:?}")))
    }
}

/// Rows `0..=N` of the lucasnomial triangle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LucasnomialTable {
    rows: Vec<Vec<BivariatePolynomial>>,
}

impl LucasnomialTable {
    pub fn rows(&self) -> &[Vec<BivariatePolynomial>] {
        &self.rows
    }

    pub fn entry(&self, n: usize, k: usize) -> Option<&BivariatePolynomial> {
        self.rows.get(n)?.get(k)
    }

    /// Index of the last row.
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }
}

/// Lucasnomial calculator with per-method memo tables, shareable across threads.
#[derive(Debug, Default)]
pub struct Lucasnomials {
    lucas: Arc<LucasCache>,
    quotients: RwLock<HashMap<(usize, usize), BivariatePolynomial>>,
    /// Triangle rows of the first recursion.
    fib_rows: RwLock<Vec<Vec<BivariatePolynomial>>>,
    /// `f(i, j) = 2^(i+j) C(i+j, i)` from the companion recursion.
    scaled: Mutex<HashMap<(usize, usize), BivariatePolynomial>>,
}

fn in_range(n: usize, k: i64) -> Option<usize> {
    usize::try_from(k).ok().filter(|&k| k <= n)
}

impl Lucasnomials {
    pub fn new() -> Self {
        Self::with_cache(Arc::new(LucasCache::new()))
    }

    pub fn with_cache(lucas: Arc<LucasCache>) -> Self {
        Self {
            lucas,
            ..Self::default()
        }
    }

    pub fn lucas(&self) -> &LucasCache {
        &self.lucas
    }

    pub fn compute(&self, method: Method, n: usize, k: i64) -> Result<BivariatePolynomial> {
        match method {
            Method::Quotient => self.via_quotient(n, k),
            Method::RecFib => Ok(self.via_recursion_fib(n, k)),
            Method::RecLuc => self.via_recursion_luc(n, k),
        }
    }

    /// `F_n! / (F_k! F_{n-k}!)` by exact polynomial division.
    pub fn via_quotient(&self, n: usize, k: i64) -> Result<BivariatePolynomial> {
        let Some(k) = in_range(n, k) else {
            return Ok(BivariatePolynomial::zero());
        };
        if let Some(hit) = self.quotients.read().unwrap().get(&(n, k)) {
            return Ok(hit.clone());
        }
        let denom = &self.lucas.factorial(k) * &self.lucas.factorial(n - k);
        let value = self.lucas.factorial(n).exact_div(&denom)?;
        self.quotients.write().unwrap().insert((n, k), value.clone());
        Ok(value)
    }

    /// `C(n, k) = F_{n-k+1} C(n-1, k-1) + t F_{k-1} C(n-1, k)`.
    pub fn via_recursion_fib(&self, n: usize, k: i64) -> BivariatePolynomial {
        let Some(k) = in_range(n, k) else {
            return BivariatePolynomial::zero();
        };
        self.extend_fib_rows(n);
        self.fib_rows.read().unwrap()[n][k].clone()
    }

    fn extend_fib_rows(&self, n: usize) {
        if self.fib_rows.read().unwrap().len() > n {
            return;
        }
        let mut rows = self.fib_rows.write().unwrap();
        let t = BivariatePolynomial::t();
        while rows.len() <= n {
            let row_n = rows.len();
            let mut row = Vec::with_capacity(row_n + 1);
            for k in 0..=row_n {
                if k == 0 || k == row_n {
                    row.push(BivariatePolynomial::one());
                    continue;
                }
                let prev = &rows[row_n - 1];
                let left = &self.lucas.fib(row_n - k + 1) * &prev[k - 1];
                let right = &(&t * &self.lucas.fib(k - 1)) * &prev[k];
                row.push(&left + &right);
            }
            rows.push(row);
        }
    }

    /// Runs `f(i, j) = L_j f(i-1, j) + L_i f(i, j-1)` with `f(i, 0) = 2^i`,
    /// `f(0, j) = 2^j`, then divides `f(k, n-k)` by `2^n`.
    pub fn via_recursion_luc(&self, n: usize, k: i64) -> Result<BivariatePolynomial> {
        let Some(k) = in_range(n, k) else {
            return Ok(BivariatePolynomial::zero());
        };
        let (rows, cols) = (k, n - k);
        let scaled = {
            let mut grid = self.scaled.lock().unwrap();
            for i in 0..=rows {
                for j in 0..=cols {
                    if grid.contains_key(&(i, j)) {
                        continue;
                    }
                    let value = if i == 0 || j == 0 {
                        BivariatePolynomial::constant(BigInt::one() << (i + j))
                    } else {
                        let up = &self.lucas.companion(j) * &grid[&(i - 1, j)];
                        let left = &self.lucas.companion(i) * &grid[&(i, j - 1)];
                        &up + &left
                    };
                    grid.insert((i, j), value);
                }
            }
            grid[&(rows, cols)].clone()
        };
        scaled
            .div_coefficients_exact(&(BigInt::one() << n))
            .ok_or(Error::InternalParity { n, k, exponent: n })
    }

    /// Triangle through row `max_row` from the first recursion, spot-checked
    /// against the quotient method.
    pub fn table(&self, max_row: usize) -> LucasnomialTable {
        self.extend_fib_rows(max_row);
        let rows: Vec<_> = self.fib_rows.read().unwrap()[..=max_row].to_vec();
        for n in (0..=max_row).step_by(3).chain([max_row]) {
            for k in [1, n / 2] {
                if k > n {
                    continue;
                }
                let check = self
                    .via_quotient(n, k as i64)
                    .expect("lucasnomial quotient is exact");
                assert_eq!(rows[n][k], check, "recursion and quotient disagree at ({n}, {k})");
            }
        }
        LucasnomialTable { rows }
    }
}
