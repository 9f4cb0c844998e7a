//! Monomino/domino tilings of a `1 x n` strip: linear, linear without a
//! leading monomino, and circular (edges `0` and `n` identified).
//!
//! A circular tiling that uses the wrap-around domino stores only the linear
//! tiling of the interior squares `2..=n-1`, plus the `wrap` flag.

use std::fmt;

use crate::error::{Error, Result};
use crate::lucas::LucasCache;
use crate::poly::BivariatePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Mono,
    Domino,
}

impl Tile {
    pub fn cells(self) -> usize {
        match self {
            Tile::Mono => 1,
            Tile::Domino => 2,
        }
    }
}

/// Whether a tiling lives on a line or a cycle. Also selects the weight of
/// the empty tiling (1 on a line, 2 on a cycle).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    Linear,
    Circular,
}

/// Families that can be enumerated or summed in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TilingKind {
    Linear,
    /// Linear tilings whose first tile is not a monomino.
    LinearNolead,
    Circular,
}

impl TilingKind {
    pub fn shape(self) -> Shape {
        match self {
            TilingKind::Linear | TilingKind::LinearNolead => Shape::Linear,
            TilingKind::Circular => Shape::Circular,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    shape: Shape,
    wrap: bool,
    tiles: Vec<Tile>,
}

impl Tiling {
    pub fn linear(tiles: Vec<Tile>) -> Self {
        Self {
            shape: Shape::Linear,
            wrap: false,
            tiles,
        }
    }

    /// A circular tiling without the wrap-around domino.
    pub fn circular(tiles: Vec<Tile>) -> Self {
        Self {
            shape: Shape::Circular,
            wrap: false,
            tiles,
        }
    }

    /// A circular tiling whose wrap-around domino covers the last and first
    /// squares; `interior` tiles the squares in between.
    pub fn wrapped(interior: Vec<Tile>) -> Self {
        Self {
            shape: Shape::Circular,
            wrap: true,
            tiles: interior,
        }
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn wrap(&self) -> bool {
        self.wrap
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    /// Length of the strip covered.
    pub fn len(&self) -> usize {
        self.tiles.iter().map(|t| t.cells()).sum::<usize>() + if self.wrap { 2 } else { 0 }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn monominoes(&self) -> usize {
        self.tiles.iter().filter(|&&t| t == Tile::Mono).count()
    }

    /// Number of dominoes, counting the wrap-around domino.
    pub fn dominoes(&self) -> usize {
        self.tiles.iter().filter(|&&t| t == Tile::Domino).count() + usize::from(self.wrap)
    }

    /// `s^(#monominoes) t^(#dominoes)`; the empty circular tiling weighs 2.
    pub fn weight(&self) -> BivariatePolynomial {
        if self.shape == Shape::Circular && self.is_empty() {
            return BivariatePolynomial::constant(2);
        }
        BivariatePolynomial::monomial(1, self.monominoes() as u32, self.dominoes() as u32)
    }

    /// Coefficient and exponents of `weight()`, without building a polynomial.
    pub fn weight_parts(&self) -> (u32, u32, u32) {
        if self.shape == Shape::Circular && self.is_empty() {
            return (2, 0, 0);
        }
        (1, self.monominoes() as u32, self.dominoes() as u32)
    }

    pub fn starts_with_mono(&self) -> bool {
        !self.wrap && self.tiles.first() == Some(&Tile::Mono)
    }

    /// Parses the text form (`M D M`, `(D) M`, or `empty`).
    pub fn parse(text: &str, shape: Shape) -> Result<Self> {
        let mut tokens = text.split_whitespace().peekable();
        let mut wrap = false;
        let mut tiles = Vec::new();
        if tokens.peek() == Some(&"empty") {
            tokens.next();
            if tokens.next().is_some() {
                return Err(parse_err(text, "'empty' must stand alone"));
            }
            return Ok(Self { shape, wrap, tiles });
        }
        if tokens.peek() == Some(&"(D)") {
            if shape != Shape::Circular {
                return Err(parse_err(text, "wrap domino in a linear tiling"));
            }
            tokens.next();
            wrap = true;
        }
        for tok in tokens {
            tiles.push(match tok {
                "M" => Tile::Mono,
                "D" => Tile::Domino,
                other => return Err(parse_err(text, &format!("unknown tile {other:?}"))),
            });
        }
        if !wrap && tiles.is_empty() {
            return Err(parse_err(text, "no tiles; use 'empty'"));
        }
        Ok(Self { shape, wrap, tiles })
    }
}

fn parse_err(text: &str, message: &str) -> Error {
    Error::Parse {
        position: 0,
        message: format!("{message} in tiling {text:?}"),
    }
}

impl fmt::Display for Tiling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        let mut words: Vec<&str> = Vec::with_capacity(self.tiles.len() + 1);
        if self.wrap {
            words.push("(D)");
        }
        words.extend(self.tiles.iter().map(|t| match t {
            Tile::Mono => "M",
            Tile::Domino => "D",
        }));
        f.write_str(&words.join(" "))
    }
}

/// All tile sequences of total length `n`, lexicographic with `M < D`.
fn sequences(n: usize) -> Vec<Vec<Tile>> {
    // table[i] holds the sequences of length i
    let mut table: Vec<Vec<Vec<Tile>>> = vec![vec![Vec::new()]];
    for len in 1..=n {
        let mut here = Vec::new();
        for (tile, rest) in [(Tile::Mono, len - 1), (Tile::Domino, len.wrapping_sub(2))] {
            if rest > len {
                continue;
            }
            for tail in &table[rest] {
                let mut seq = Vec::with_capacity(tail.len() + 1);
                seq.push(tile);
                seq.extend_from_slice(tail);
                here.push(seq);
            }
        }
        table.push(here);
    }
    table.swap_remove(n)
}

/// Every tiling of the given kind on a strip of length `n`, without duplicates,
/// lexicographic over tiles (`M < D`) with wrap tilings after the others.
pub fn enumerate(kind: TilingKind, n: usize) -> Vec<Tiling> {
    match kind {
        TilingKind::Linear => sequences(n).into_iter().map(Tiling::linear).collect(),
        TilingKind::LinearNolead => sequences(n)
            .into_iter()
            .filter(|seq| seq.first() != Some(&Tile::Mono))
            .map(Tiling::linear)
            .collect(),
        TilingKind::Circular => {
            let mut out: Vec<Tiling> = sequences(n).into_iter().map(Tiling::circular).collect();
            if n >= 2 {
                out.extend(sequences(n - 2).into_iter().map(Tiling::wrapped));
            }
            out
        }
    }
}

/// Number of tilings `enumerate(kind, n)` would return, saturating at `u128::MAX`.
pub fn count(kind: TilingKind, n: usize) -> u128 {
    // fibs[i] = number of linear tilings of length i
    let mut fibs: Vec<u128> = vec![1, 1];
    while fibs.len() <= n {
        let i = fibs.len();
        fibs.push(fibs[i - 1].saturating_add(fibs[i - 2]));
    }
    match (kind, n) {
        (TilingKind::Linear, _) => fibs[n],
        (TilingKind::LinearNolead, 0) => 1,
        (TilingKind::LinearNolead, 1) => 0,
        (TilingKind::LinearNolead, _) => fibs[n - 2],
        (TilingKind::Circular, 0 | 1) => 1,
        (TilingKind::Circular, _) => fibs[n].saturating_add(fibs[n - 2]),
    }
}

/// Closed-form generating function `sum of weight(T)` over `enumerate(kind, n)`.
pub fn gf(kind: TilingKind, n: usize, lucas: &LucasCache) -> BivariatePolynomial {
    match (kind, n) {
        (TilingKind::Linear, _) => lucas.fib(n + 1),
        (TilingKind::LinearNolead, 0) => BivariatePolynomial::one(),
        (TilingKind::LinearNolead, 1) => BivariatePolynomial::zero(),
        (TilingKind::LinearNolead, _) => &BivariatePolynomial::t() * &lucas.fib(n - 1),
        (TilingKind::Circular, 0) => BivariatePolynomial::constant(2),
        (TilingKind::Circular, _) => lucas.companion(n),
    }
}
