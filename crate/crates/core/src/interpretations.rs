//! Tiling interpretations of the lucasnomials over partitions in a rectangle.
//!
//! For `lambda` inside `m x n`, a *linear pair* tiles each row of `lambda` with
//! a linear tiling and each column of the complement with a linear tiling that
//! does not start with a monomino. A *circular pair* uses circular tilings
//! everywhere, so an empty row or column contributes the factor 2. Summing
//! pair weights over all `lambda` gives `C(m+n, m)` for linear pairs and
//! `2^(m+n) C(m+n, m)` for circular pairs.
//!
//! Complement columns are read upward from the bottom edge of the rectangle,
//! so the no-leading-monomino rule applies at the cell farthest from `lambda`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lucasnomial::Lucasnomials;
use crate::partitions::{enumerate_in_rect, Partition};
use crate::poly::BivariatePolynomial;
use crate::report::{CaseOutcome, IdentityReport};
use crate::tilings::{self, count, enumerate, Tiling, TilingKind};

/// Largest number of pairs enumerate mode will materialize for one rectangle.
pub const DEFAULT_PAIR_BUDGET: u128 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Linear,
    Circular,
}

impl Flavor {
    fn row_kind(self) -> TilingKind {
        match self {
            Flavor::Linear => TilingKind::Linear,
            Flavor::Circular => TilingKind::Circular,
        }
    }

    fn col_kind(self) -> TilingKind {
        match self {
            Flavor::Linear => TilingKind::LinearNolead,
            Flavor::Circular => TilingKind::Circular,
        }
    }

    pub fn identity_name(self) -> &'static str {
        match self {
            Flavor::Linear => "theorem-linear",
            Flavor::Circular => "theorem-circular",
        }
    }
}

/// Which identities `verify_theorem` checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FlavorSelection {
    Linear,
    Circular,
    Both,
}

impl FlavorSelection {
    pub fn flavors(self) -> &'static [Flavor] {
        match self {
            FlavorSelection::Linear => &[Flavor::Linear],
            FlavorSelection::Circular => &[Flavor::Circular],
            FlavorSelection::Both => &[Flavor::Linear, Flavor::Circular],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    /// Materialize every tiling pair and sum the weights.
    Enumerate,
    /// Multiply per-row and per-column generating functions.
    Gf,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Enumerate => "enumerate",
            Mode::Gf => "gf",
        }
    }
}

/// One tiling per row of `lambda` and one per column of its complement.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TilingPair {
    partition: Partition,
    rows: Vec<Tiling>,
    cols: Vec<Tiling>,
    flavor: Flavor,
}

impl TilingPair {
    /// Checks that every component tiles the right length with the right family.
    pub fn new(
        partition: Partition,
        rows: Vec<Tiling>,
        cols: Vec<Tiling>,
        flavor: Flavor,
    ) -> Result<Self> {
        let complement = partition.complement();
        let check = |tilings: &[Tiling], lengths: &[usize], kind: TilingKind, what: &str| {
            if tilings.len() != lengths.len() {
                return Err(Error::Domain(format!(
                    "expected {} {what} tilings, got {}",
                    lengths.len(),
                    tilings.len()
                )));
            }
            for (i, (t, &len)) in tilings.iter().zip(lengths).enumerate() {
                let ok = t.len() == len
                    && t.shape() == kind.shape()
                    && !(kind == TilingKind::LinearNolead && t.starts_with_mono());
                if !ok {
                    return Err(Error::Domain(format!(
                        "{what} {i}: tiling {t} is not a {kind:?} tiling of length {len}"
                    )));
                }
            }
            Ok(())
        };
        check(&rows, partition.parts(), flavor.row_kind(), "row")?;
        check(&cols, complement.parts(), flavor.col_kind(), "column")?;
        Ok(Self {
            partition,
            rows,
            cols,
            flavor,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn rows(&self) -> &[Tiling] {
        &self.rows
    }

    pub fn cols(&self) -> &[Tiling] {
        &self.cols
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Product of all component weights.
    pub fn weight(&self) -> BivariatePolynomial {
        let (c, a, b) = self.weight_parts();
        BivariatePolynomial::monomial(c, a, b)
    }

    fn weight_parts(&self) -> (BigInt, u32, u32) {
        self.rows.iter().chain(&self.cols).fold(
            (BigInt::one(), 0, 0),
            |(c, a, b), t| {
                let (tc, ta, tb) = t.weight_parts();
                (c * tc, a + ta, b + tb)
            },
        )
    }
}

/// Evaluates and verifies the tiling interpretations.
#[derive(Debug)]
pub struct Verifier {
    lucasnomials: Arc<Lucasnomials>,
    pair_budget: u128,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new(Arc::new(Lucasnomials::new()))
    }
}

impl Verifier {
    pub fn new(lucasnomials: Arc<Lucasnomials>) -> Self {
        Self {
            lucasnomials,
            pair_budget: DEFAULT_PAIR_BUDGET,
        }
    }

    pub fn with_pair_budget(mut self, budget: u128) -> Self {
        self.pair_budget = budget;
        self
    }

    pub fn lucasnomials(&self) -> &Lucasnomials {
        &self.lucasnomials
    }

    /// Number of pairs over all partitions in `m x n`, from closed-form counts.
    pub fn predicted_pairs(&self, m: usize, n: usize, flavor: Flavor) -> u128 {
        enumerate_in_rect(m, n)
            .iter()
            .map(|lam| pair_count(lam, flavor))
            .fold(0u128, u128::saturating_add)
    }

    fn check_budget(&self, m: usize, n: usize, flavor: Flavor) -> Result<()> {
        let predicted = self.predicted_pairs(m, n, flavor);
        if predicted > self.pair_budget {
            return Err(Error::Resource {
                predicted,
                budget: self.pair_budget,
            });
        }
        Ok(())
    }

    /// Every `(lambda, pair)` object for the rectangle, in partition order.
    pub fn enumerate_pairs(&self, m: usize, n: usize, flavor: Flavor) -> Result<Vec<TilingPair>> {
        self.check_budget(m, n, flavor)?;
        Ok(enumerate_in_rect(m, n)
            .into_iter()
            .flat_map(|lam| pairs_for(&lam, flavor))
            .collect())
    }

    /// Sum of linear-pair weights over all partitions in `m x n`.
    pub fn rhs_linear(&self, m: usize, n: usize, mode: Mode) -> Result<BivariatePolynomial> {
        self.rhs(m, n, Flavor::Linear, mode, false)
    }

    /// Sum of circular-pair weights over all partitions in `m x n`.
    pub fn rhs_circular(&self, m: usize, n: usize, mode: Mode) -> Result<BivariatePolynomial> {
        self.rhs(m, n, Flavor::Circular, mode, false)
    }

    pub fn rhs(
        &self,
        m: usize,
        n: usize,
        flavor: Flavor,
        mode: Mode,
        parallel: bool,
    ) -> Result<BivariatePolynomial> {
        if mode == Mode::Enumerate {
            self.check_budget(m, n, flavor)?;
        }
        let partitions = enumerate_in_rect(m, n);
        let term = |lam: &Partition| match mode {
            Mode::Enumerate => enumerated_sum(lam, flavor),
            Mode::Gf => self.gf_product(lam, flavor),
        };
        let total = if parallel {
            partitions
                .par_iter()
                .map(term)
                .reduce(BivariatePolynomial::zero, |a, b| &a + &b)
        } else {
            partitions
                .iter()
                .fold(BivariatePolynomial::zero(), |acc, lam| &acc + &term(lam))
        };
        Ok(total)
    }

    fn gf_product(&self, lam: &Partition, flavor: Flavor) -> BivariatePolynomial {
        let lucas = self.lucasnomials.lucas();
        let rows = lam
            .parts()
            .iter()
            .map(|&len| tilings::gf(flavor.row_kind(), len, lucas));
        let cols = lam
            .complement()
            .parts()
            .iter()
            .map(|&len| tilings::gf(flavor.col_kind(), len, lucas))
            .collect::<Vec<_>>();
        rows.chain(cols)
            .fold(BivariatePolynomial::one(), |acc, g| &acc * &g)
    }

    /// The left-hand side an identity is checked against: `C(m+n, m)` for
    /// linear pairs, `2^(m+n) C(m+n, m)` for circular pairs.
    pub fn expected(&self, m: usize, n: usize, flavor: Flavor) -> Result<BivariatePolynomial> {
        let c = self.lucasnomials.via_quotient(m + n, m as i64)?;
        Ok(match flavor {
            Flavor::Linear => c,
            Flavor::Circular => c.scale(&(BigInt::one() << (m + n))),
        })
    }

    /// Checks the selected identities for every `0 <= m <= m_max`, `0 <= n <= n_max`.
    pub fn verify_theorem(
        &self,
        m_max: usize,
        n_max: usize,
        flavors: FlavorSelection,
        mode: Mode,
    ) -> Result<IdentityReport> {
        self.verify_theorem_with(m_max, n_max, flavors, mode, false, &mut |_| {})
    }

    /// Like [`Verifier::verify_theorem`], reporting each case as it completes.
    /// With `parallel`, rectangles are checked concurrently and the cases are
    /// reported afterwards in the sequential order.
    pub fn verify_theorem_with(
        &self,
        m_max: usize,
        n_max: usize,
        flavors: FlavorSelection,
        mode: Mode,
        parallel: bool,
        on_case: &mut dyn FnMut(&CaseOutcome),
    ) -> Result<IdentityReport> {
        let range = format!("0<=m<={m_max}, 0<=n<={n_max}, mode={}", mode.name());
        let mut report = IdentityReport::new("theorem", range);
        let cases: Vec<(Flavor, usize, usize)> = flavors
            .flavors()
            .iter()
            .flat_map(|&f| (0..=m_max).flat_map(move |m| (0..=n_max).map(move |n| (f, m, n))))
            .collect();
        if mode == Mode::Enumerate {
            for &(flavor, m, n) in &cases {
                self.check_budget(m, n, flavor)?;
            }
        }
        let check_one = |&(flavor, m, n): &(Flavor, usize, usize)| -> Result<IdentityReport> {
            let mut r = IdentityReport::new("", "");
            let lhs = self.expected(m, n, flavor)?;
            let rhs = self.rhs(m, n, flavor, mode, false)?;
            r.check(
                flavor.identity_name(),
                &[("m", m as i64), ("n", n as i64)],
                &lhs,
                &rhs,
            );
            Ok(r)
        };
        if parallel {
            let parts: Vec<Result<IdentityReport>> = cases.par_iter().map(check_one).collect();
            for part in parts {
                report.absorb(part?);
            }
            report.cases.iter().for_each(&mut *on_case);
        } else {
            for case in &cases {
                let part = check_one(case)?;
                part.cases.iter().for_each(&mut *on_case);
                report.absorb(part);
            }
        }
        Ok(report)
    }

    /// Checks both lucasnomial recursions (the companion one doubled) for all
    /// `m, n >= 1` with `m + n <= max_total`, and both Lucas identities for
    /// `m >= 1`, `n >= 0`, `m + n <= max_total`.
    pub fn verify_recursions(&self, max_total: usize) -> IdentityReport {
        self.verify_recursions_with(max_total, &mut |_| {})
    }

    pub fn verify_recursions_with(
        &self,
        max_total: usize,
        on_case: &mut dyn FnMut(&CaseOutcome),
    ) -> IdentityReport {
        let mut report = IdentityReport::new("recursions", format!("m+n<={max_total}"));
        let lucas = self.lucasnomials.lucas();
        let binom = |n: usize, k: usize| {
            self.lucasnomials
                .via_quotient(n, k as i64)
                .expect("lucasnomial quotient is exact")
        };
        let t = BivariatePolynomial::t();
        let two = BigInt::from(2);
        for total in 1..=max_total {
            for m in 1..=total {
                let n = total - m;
                let before = report.cases.len();
                lucas.check_lemma1_into(m, n, &mut report);
                if n >= 1 {
                    let params = [("m", m as i64), ("n", n as i64)];
                    let lhs = binom(total, m);
                    let upper = binom(total - 1, m - 1);
                    let lower = binom(total - 1, n - 1);
                    let rhs = &(&lucas.fib(n + 1) * &upper)
                        + &(&(&t * &lucas.fib(m - 1)) * &lower);
                    report.check("prop2-fib", &params, &lhs, &rhs);
                    let rhs = &(&lucas.companion(n) * &upper) + &(&lucas.companion(m) * &lower);
                    report.check("prop2-luc-doubled", &params, &lhs.scale(&two), &rhs);
                }
                report.cases[before..].iter().for_each(&mut *on_case);
            }
        }
        report
    }
}

fn pair_count(lam: &Partition, flavor: Flavor) -> u128 {
    let rows = lam.parts().iter().map(|&l| count(flavor.row_kind(), l));
    let cols = lam
        .complement()
        .parts()
        .iter()
        .map(|&l| count(flavor.col_kind(), l))
        .collect::<Vec<_>>();
    rows.chain(cols).fold(1u128, u128::saturating_mul)
}

/// Component tiling lists for one partition: rows first, then complement columns.
fn component_lists(lam: &Partition, flavor: Flavor) -> (usize, Vec<Vec<Tiling>>) {
    let mut lists: Vec<Vec<Tiling>> = lam
        .parts()
        .iter()
        .map(|&len| enumerate(flavor.row_kind(), len))
        .collect();
    let split = lists.len();
    lists.extend(
        lam.complement()
            .parts()
            .iter()
            .map(|&len| enumerate(flavor.col_kind(), len)),
    );
    (split, lists)
}

/// Walks the Cartesian product of `lists`, calling `visit` with the chosen indices.
fn for_each_choice(lists: &[Vec<Tiling>], mut visit: impl FnMut(&[usize])) {
    if lists.iter().any(Vec::is_empty) {
        return;
    }
    let mut idx = vec![0usize; lists.len()];
    loop {
        visit(&idx);
        let mut pos = lists.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < lists[pos].len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// All pairs over a single partition.
pub fn pairs_for(lam: &Partition, flavor: Flavor) -> Vec<TilingPair> {
    let (split, lists) = component_lists(lam, flavor);
    let mut out = Vec::new();
    for_each_choice(&lists, |idx| {
        let mut chosen = idx.iter().zip(&lists).map(|(&i, list)| list[i].clone());
        let rows: Vec<Tiling> = chosen.by_ref().take(split).collect();
        let cols: Vec<Tiling> = chosen.collect();
        out.push(TilingPair {
            partition: lam.clone(),
            rows,
            cols,
            flavor,
        });
    });
    out
}

/// Sum of pair weights over one partition, visiting every pair.
fn enumerated_sum(lam: &Partition, flavor: Flavor) -> BivariatePolynomial {
    let (_, lists) = component_lists(lam, flavor);
    let parts: Vec<Vec<(u32, u32, u32)>> = lists
        .iter()
        .map(|l| l.iter().map(Tiling::weight_parts).collect())
        .collect();
    let mut acc: HashMap<(u32, u32), u128> = HashMap::new();
    for_each_choice(&lists, |idx| {
        let (c, a, b) = idx
            .iter()
            .zip(&parts)
            .fold((1u128, 0u32, 0u32), |(c, a, b), (&i, w)| {
                let (wc, wa, wb) = w[i];
                (c * u128::from(wc), a + wa, b + wb)
            });
        *acc.entry((a, b)).or_default() += c;
    });
    BivariatePolynomial::from_terms(acc.into_iter().map(|((a, b), c)| (a, b, c)))
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::tilings::Tile::{Domino as D, Mono as M};

    fn p(text: &str) -> BivariatePolynomial {
        text.parse().unwrap()
    }

    #[test]
    fn rhs_linear_examples() {
        let v = Verifier::default();
        for mode in [Mode::Enumerate, Mode::Gf] {
            assert_eq!(v.rhs_linear(1, 1, mode).unwrap(), p("s"));
            assert_eq!(v.rhs_linear(2, 2, mode).unwrap(), p("s^4 + 3*s^2*t + 2*t^2"));
            for n in 0..5 {
                assert_eq!(v.rhs_linear(0, n, mode).unwrap(), BivariatePolynomial::one());
            }
        }
        // lambda = (0) contributes nothing: its single column has length 1
        let lam0 = Partition::new(vec![0], 1).unwrap();
        assert!(pairs_for(&lam0, Flavor::Linear).is_empty());
    }

    #[test]
    fn rhs_circular_examples() {
        let v = Verifier::default();
        for mode in [Mode::Enumerate, Mode::Gf] {
            assert_eq!(v.rhs_circular(1, 1, mode).unwrap(), p("4*s"));
            assert_eq!(v.rhs_circular(0, 0, mode).unwrap(), BivariatePolynomial::one());
        }
    }

    fn figure_pair(flavor: Flavor) -> TilingPair {
        let lam = Partition::new(vec![3, 2, 2, 0, 0], 4).unwrap();
        let mk: fn(Vec<_>) -> Tiling = match flavor {
            Flavor::Linear => Tiling::linear,
            Flavor::Circular => Tiling::circular,
        };
        let rows = vec![mk(vec![M, D]), mk(vec![D]), mk(vec![M, M]), mk(vec![]), mk(vec![])];
        let cols = vec![mk(vec![D, M, D]), mk(vec![D, M, M]), mk(vec![D]), mk(vec![D])];
        TilingPair::new(lam, rows, cols, flavor).unwrap()
    }

    #[test]
    fn figure_pair_weights() {
        let linear = figure_pair(Flavor::Linear);
        assert_eq!(linear.weight(), p("s^6*t^7"));
        let circular = figure_pair(Flavor::Circular);
        assert_eq!(circular.weight(), p("4*s^6*t^7"));
        assert!(pairs_for(linear.partition(), Flavor::Linear).contains(&linear));
        assert!(pairs_for(circular.partition(), Flavor::Circular).contains(&circular));
    }

    #[test]
    fn pair_validation() {
        let lam = Partition::new(vec![1], 1).unwrap();
        // column of length 0, so exactly one (empty) column tiling
        assert!(TilingPair::new(
            lam.clone(),
            vec![Tiling::linear(vec![M])],
            vec![Tiling::linear(vec![])],
            Flavor::Linear
        )
        .is_ok());
        assert!(TilingPair::new(lam.clone(), vec![Tiling::linear(vec![M])], vec![], Flavor::Linear).is_err());
        let lam = Partition::new(vec![0, 0], 1).unwrap();
        assert!(TilingPair::new(
            lam,
            vec![Tiling::linear(vec![]), Tiling::linear(vec![])],
            vec![Tiling::linear(vec![M, M])],
            Flavor::Linear
        )
        .is_err());
    }

    #[test]
    fn modes_agree() {
        let v = Verifier::default();
        for total in 0..=7 {
            for m in 0..=total {
                let n = total - m;
                for flavor in [Flavor::Linear, Flavor::Circular] {
                    assert_eq!(
                        v.rhs(m, n, flavor, Mode::Enumerate, false).unwrap(),
                        v.rhs(m, n, flavor, Mode::Gf, true).unwrap(),
                        "{flavor:?} {m}x{n}"
                    );
                }
            }
        }
    }

    #[test]
    fn multiplicity_free_and_homogeneous() {
        let v = Verifier::default();
        let one = BigInt::one();
        for total in 0..=6 {
            for m in 0..=total {
                let n = total - m;
                let pairs = v.enumerate_pairs(m, n, Flavor::Linear).unwrap();
                let distinct: HashSet<_> = pairs.iter().collect();
                assert_eq!(distinct.len(), pairs.len());
                let c = v.lucasnomials().via_quotient(total, m as i64).unwrap();
                assert_eq!(BigInt::from(pairs.len()), c.eval_int(&one, &one));
                for pair in &pairs {
                    let ((a, b), _) = pair.weight().leading().unwrap();
                    assert_eq!((a + 2 * b) as usize, m * n);
                }
                assert_eq!(pairs.len() as u128, v.predicted_pairs(m, n, Flavor::Linear));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let v = Verifier::default().with_pair_budget(10);
        assert!(matches!(
            v.rhs_linear(3, 3, Mode::Enumerate),
            Err(Error::Resource { budget: 10, .. })
        ));
        assert!(v.rhs_linear(3, 3, Mode::Gf).is_ok());
        assert!(v.enumerate_pairs(3, 3, Flavor::Circular).is_err());
    }

    #[test]
    fn verify_theorem_examples() {
        let v = Verifier::default();
        let r = v.verify_theorem(2, 2, FlavorSelection::Both, Mode::Enumerate).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases_checked(), 18);
        let r = v.verify_theorem(5, 5, FlavorSelection::Both, Mode::Gf).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases_checked(), 72);
        let r = v.verify_theorem(0, 0, FlavorSelection::Both, Mode::Enumerate).unwrap();
        assert!(r.passed());
        assert_eq!(r.cases_checked(), 2);
    }

    #[test]
    fn parallel_verification_matches_sequential() {
        let v = Verifier::default();
        let mut seq_lines = Vec::new();
        let seq = v
            .verify_theorem_with(3, 3, FlavorSelection::Both, Mode::Gf, false, &mut |c| {
                seq_lines.push(c.to_string())
            })
            .unwrap();
        let mut par_lines = Vec::new();
        let par = v
            .verify_theorem_with(3, 3, FlavorSelection::Both, Mode::Gf, true, &mut |c| {
                par_lines.push(c.to_string())
            })
            .unwrap();
        assert_eq!(seq, par);
        assert_eq!(seq_lines, par_lines);
    }

    #[test]
    fn verify_recursions_examples() {
        let v = Verifier::default();
        let r = v.verify_recursions(1);
        assert!(r.passed());
        assert_eq!(r.cases_checked(), 2);
        let r = v.verify_recursions(4);
        assert!(r.passed());
        assert!(r.cases.iter().any(|c| c.identity == "prop2-luc-doubled"));
    }
}
