//! Canonical generators, monomials and the canonicalisation of transient labels.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::signed::Letter;

/// Largest rank of a presented ring; monomials are bit sets in a `u64`.
pub const MAX_RING_RANK: usize = 6;

/// A canonical generator: the loop `z_j`, or `z_{ij}^±` with `i < j`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Loop(u8),
    Edge { i: u8, j: u8, negative: bool },
}

impl Generator {
    pub fn edge(i: usize, j: usize, negative: bool) -> Self {
        assert!(i < j, "edge generators need i < j");
        Generator::Edge {
            i: i as u8,
            j: j as u8,
            negative,
        }
    }

    pub fn is_loop(&self) -> bool {
        matches!(self, Generator::Loop(_))
    }

    /// The hand containing the generator: the larger index.
    pub fn hand(&self) -> usize {
        match *self {
            Generator::Loop(j) => j as usize,
            Generator::Edge { j, .. } => j as usize,
        }
    }

    /// Sort key from the letter order `0 < -0 < 1 < -1 < 2 < …`, reading `z_j` as `z_{-0,j}`.
    fn key(&self) -> (u32, u32) {
        match *self {
            Generator::Loop(j) => (1, 2 * j as u32),
            Generator::Edge { i, j, negative } => (2 * i as u32, 2 * j as u32 + negative as u32),
        }
    }

    /// Wire name: `z1`, `z12+`, `z13-`.
    pub fn wire_name(&self) -> String {
        match *self {
            Generator::Loop(j) => format!("z{j}"),
            Generator::Edge { i, j, negative } => {
                format!("z{i}{j}{}", if negative { "-" } else { "+" })
            }
        }
    }

    pub fn from_wire_name(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "generator",
            input: s.to_string(),
        };
        let body = s.strip_prefix('z').ok_or_else(bad)?;
        let digit = |c: char| c.to_digit(10).map(|d| d as u8).ok_or_else(bad);
        let chars: Vec<char> = body.chars().collect();
        match chars.as_slice() {
            [j] => Ok(Generator::Loop(digit(*j)?)),
            [i, j, s] if *s == '+' || *s == '-' => {
                let (i, j) = (digit(*i)?, digit(*j)?);
                if i == 0 || i >= j {
                    return Err(bad());
                }
                Ok(Generator::Edge {
                    i,
                    j,
                    negative: *s == '-',
                })
            }
            _ => Err(bad()),
        }
    }
}

impl Ord for Generator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Generator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Prints `z_{1,-2}` as `z1~2`.
impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Generator::Loop(j) => write!(f, "z{j}"),
            Generator::Edge { i, j, negative } => {
                write!(f, "z{i}{}{j}", if negative { "~" } else { "" })
            }
        }
    }
}

/// Canonical generators of rank `m` in increasing order; position = bit index.
pub fn generator_list(rank: usize) -> &'static [Generator] {
    static LISTS: [OnceLock<Vec<Generator>>; MAX_RING_RANK + 1] =
        [const { OnceLock::new() }; MAX_RING_RANK + 1];
    assert!(rank <= MAX_RING_RANK, "ring rank {rank} too large");
    LISTS[rank].get_or_init(|| {
        let mut gens = Vec::new();
        for j in 1..=rank {
            gens.push(Generator::Loop(j as u8));
            for i in 1..j {
                gens.push(Generator::edge(i, j, false));
                gens.push(Generator::edge(i, j, true));
            }
        }
        gens.sort();
        gens
    })
}

pub fn generator_index(rank: usize, g: Generator) -> usize {
    generator_list(rank)
        .iter()
        .position(|&h| h == g)
        .expect("generator of this rank")
}

/// A square-free monomial, stored as a bit set over [`generator_list`].
///
/// Ordered by degree, then lexicographically on generators read from the largest.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(pub(crate) u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_generators(rank: usize, gens: &[Generator]) -> Self {
        Monomial(
            gens.iter()
                .fold(0u64, |acc, &g| acc | 1 << generator_index(rank, g)),
        )
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn degree(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn generators(&self, rank: usize) -> Vec<Generator> {
        let list = generator_list(rank);
        (0..list.len())
            .filter(|&i| self.0 >> i & 1 == 1)
            .map(|i| list[i])
            .collect()
    }

    /// Number of loop generators.
    pub fn loop_degree(&self, rank: usize) -> usize {
        self.generators(rank).iter().filter(|g| g.is_loop()).count()
    }

    /// True when no two generators share a hand.
    pub fn is_nbc(&self, rank: usize) -> bool {
        let mut seen = 0u64;
        for g in self.generators(rank) {
            let bit = 1 << g.hand();
            if seen & bit != 0 {
                return false;
            }
            seen |= bit;
        }
        true
    }

    pub fn wire_names(&self, rank: usize) -> Vec<String> {
        self.generators(rank).iter().map(Generator::wire_name).collect()
    }

    pub fn pretty(&self, rank: usize) -> String {
        if self.0 == 0 {
            return "1".to_string();
        }
        let parts: Vec<String> = self.generators(rank).iter().map(|g| g.to_string()).collect();
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An affine combination `c + Σ a_g g` of canonical generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Linear {
    pub constant: i64,
    pub terms: BTreeMap<Generator, i64>,
}

impl Linear {
    pub fn constant(c: i64) -> Self {
        Self {
            constant: c,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(g: Generator) -> Self {
        Self {
            constant: 0,
            terms: BTreeMap::from([(g, 1)]),
        }
    }

    pub fn plus(mut self, other: &Linear) -> Self {
        self.constant += other.constant;
        for (g, c) in &other.terms {
            *self.terms.entry(*g).or_insert(0) += c;
        }
        self.terms.retain(|_, c| *c != 0);
        self
    }

    pub fn minus(self, other: &Linear) -> Self {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Self {
        Self {
            constant: -self.constant,
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    /// `1 - self`.
    pub fn complement(&self) -> Self {
        Linear::constant(1).minus(self)
    }

    pub fn without_constant(&self) -> Self {
        Self {
            constant: 0,
            terms: self.terms.clone(),
        }
    }
}

fn check_points(points: &[i32]) -> Result<()> {
    for (k, a) in points.iter().enumerate() {
        if *a == 0 || points[k + 1..].iter().any(|b| b.abs() == a.abs()) {
            return Err(Error::Parse {
                what: "generator label",
                input: format!("{points:?}"),
            });
        }
    }
    Ok(())
}

/// `z_a` for a nonzero signed index, in the ungraded normalisation `z_{-i} = 1 - z_i`.
pub fn loop_label(a: i32) -> Result<Linear> {
    check_points(&[a])?;
    let g = Linear::generator(Generator::Loop(a.unsigned_abs() as u8));
    Ok(if a > 0 { g } else { g.complement() })
}

/// `z_{ab}` for signed indices with distinct absolute values, in the ungraded
/// normalisation. The graded value is obtained by dropping the constant.
pub fn edge_label(a: i32, b: i32) -> Result<Linear> {
    check_points(&[a, b])?;
    if a.abs() > b.abs() {
        return Ok(edge_label(b, a)?.complement());
    }
    let (i, j) = (a.unsigned_abs() as usize, b.unsigned_abs() as usize);
    let loops = |s: i64, t: i64| {
        let mut l = Linear::default();
        l.terms.insert(Generator::Loop(i as u8), s);
        l.terms.insert(Generator::Loop(j as u8), t);
        l
    };
    Ok(match (a > 0, b > 0) {
        (true, true) => Linear::generator(Generator::edge(i, j, false)),
        (true, false) => Linear::generator(Generator::edge(i, j, true)),
        (false, true) => Linear::generator(Generator::edge(i, j, true))
            .plus(&loops(1, 1))
            .plus(&Linear::constant(-1)),
        (false, false) => Linear::generator(Generator::edge(i, j, false)).plus(&loops(1, -1)),
    })
}

/// `y_{0bc}` for letters other than `0`.
fn heaviside_at_zero(b: Letter, c: Letter) -> Result<Linear> {
    if b == Letter::ZERO_BAR {
        loop_label(c.signed())
    } else if c == Letter::ZERO_BAR || c == b.bar() {
        // antipodal letters: `b` precedes `-0` exactly when it precedes `-b`
        Ok(loop_label(b.signed())?.complement())
    } else {
        edge_label(b.signed(), c.signed())
    }
}

/// The cyclic Heaviside function `y_{abc}` in Z-coordinates, ungraded normalisation.
///
/// Letters are rotated so that `0` comes first when present; otherwise the
/// four-point identity with `0` expresses `y_{abc} = y_{0ab} - y_{0ac} + y_{0bc}`.
pub fn heaviside_label(a: Letter, b: Letter, c: Letter) -> Result<Linear> {
    let bad = || Error::Parse {
        what: "heaviside label",
        input: format!("{a},{b},{c}"),
    };
    if a == b || b == c || a == c {
        return Err(bad());
    }
    if a == Letter::ZERO {
        heaviside_at_zero(b, c)
    } else if b == Letter::ZERO {
        heaviside_at_zero(c, a)
    } else if c == Letter::ZERO {
        heaviside_at_zero(a, b)
    } else {
        Ok(heaviside_at_zero(a, b)?
            .minus(&heaviside_at_zero(a, c)?)
            .plus(&heaviside_at_zero(b, c)?))
    }
}
