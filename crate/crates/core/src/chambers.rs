//! The chamber model of the ungraded rings.
//!
//! A chamber of rank `n` is an antipodally symmetric cyclic arrangement of the
//! letters `0, -0, ±1, …, ±n`, stored by its first half after rotating `0` to
//! the front. The ungraded rings are rings of 0/1 functions on chambers.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg;
use crate::par;
use crate::rings::generators::{Generator, Linear, Monomial};
use crate::rings::{RingElement, Space};
use crate::scalar::{self, Rational};
use crate::signed::{Letter, SignedPermutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Chamber {
    word: Vec<i8>,
}

impl Chamber {
    /// The chamber `(0, a_1, …, a_n, -0, -a_1, …, -a_n)`.
    pub fn new(word: Vec<i32>) -> Result<Self> {
        SignedPermutation::new(word.clone()).map_err(|_| Error::Parse {
            what: "chamber",
            input: format!("{word:?}"),
        })?;
        Ok(Self {
            word: word.into_iter().map(|a| a as i8).collect(),
        })
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> Vec<i32> {
        self.word.iter().map(|&a| a as i32).collect()
    }

    /// All `2^n n!` chambers of rank `n`.
    pub fn all(n: usize) -> Vec<Chamber> {
        SignedPermutation::all(n)
            .into_iter()
            .map(|s| Chamber {
                word: s.one_line().into_iter().map(|a| a as i8).collect(),
            })
            .collect()
    }

    /// The full cyclic word of length `2(n + 1)`.
    pub fn cyclic_word(&self) -> Vec<Letter> {
        let half: Vec<Letter> = std::iter::once(Letter::ZERO)
            .chain(self.word.iter().map(|&a| Letter::from_signed(a as i32)))
            .collect();
        half.iter().copied().chain(half.iter().map(Letter::bar)).collect()
    }

    fn position(&self, l: Letter) -> Option<usize> {
        let n = self.rank();
        if l.point() > n {
            return None;
        }
        if l.point() == 0 {
            return Some(if l.is_negative() { n + 1 } else { 0 });
        }
        let k = self.word.iter().position(|&a| a.unsigned_abs() as usize == l.point())?;
        let same = (self.word[k] < 0) == l.is_negative();
        Some(if same { k + 1 } else { k + n + 2 })
    }

    /// `y_{abc}`: whether the letters occur in this cyclic order.
    pub fn heaviside(&self, a: Letter, b: Letter, c: Letter) -> Result<bool> {
        let bad = || Error::Parse {
            what: "heaviside letters",
            input: format!("{a},{b},{c}"),
        };
        if a == b || b == c || a == c {
            return Err(bad());
        }
        let (pa, pb, pc) = (
            self.position(a).ok_or_else(bad)?,
            self.position(b).ok_or_else(bad)?,
            self.position(c).ok_or_else(bad)?,
        );
        let len = 2 * (self.rank() + 1);
        Ok((pb + len - pa) % len < (pc + len - pa) % len)
    }

    /// `z_{ab}` for a possibly non-canonical label, read as `y_{0ab}`.
    pub fn edge_value(&self, a: i32, b: i32) -> Result<bool> {
        self.heaviside(Letter::ZERO, Letter::from_signed(a), Letter::from_signed(b))
    }

    /// `z_a` for a possibly negative index, read as `y_{0,-0,a}`.
    pub fn loop_value(&self, a: i32) -> Result<bool> {
        self.heaviside(Letter::ZERO, Letter::ZERO_BAR, Letter::from_signed(a))
    }

    pub fn generator_value(&self, g: Generator) -> bool {
        let v = match g {
            Generator::Loop(j) => self.loop_value(j as i32),
            Generator::Edge { i, j, negative } => {
                self.edge_value(i as i32, if negative { -(j as i32) } else { j as i32 })
            }
        };
        v.expect("generator within the chamber rank")
    }

    pub fn linear_value(&self, l: &Linear) -> i64 {
        l.constant
            + l.terms
                .iter()
                .map(|(g, c)| c * self.generator_value(*g) as i64)
                .sum::<i64>()
    }

    pub fn monomial_value(&self, m: Monomial) -> bool {
        m.generators(self.rank())
            .into_iter()
            .all(|g| self.generator_value(g))
    }

    /// Value of an element of an ungraded ring of the same rank.
    pub fn evaluate(&self, x: &RingElement) -> Result<Rational> {
        match x.space() {
            Space::Z1(n) | Space::Y1(n) if n == self.rank() => Ok(x
                .terms()
                .iter()
                .filter(|(m, _)| self.monomial_value(**m))
                .map(|(_, c)| c.clone())
                .fold(Rational::zero(), |a, b| a + b)),
            other => Err(Error::SpaceMismatch(
                other.to_string(),
                format!("chambers of rank {}", self.rank()),
            )),
        }
    }

    /// Action of `σ ∈ B_{n+1}` on the letters `0..=n`: relabel, then rotate
    /// `0` back to the front.
    pub fn act(&self, sigma: &SignedPermutation) -> Result<Chamber> {
        let n = self.rank();
        if sigma.rank() != n + 1 {
            return Err(Error::RankMismatch {
                left: sigma.rank(),
                right: n + 1,
            });
        }
        let word: Vec<Letter> = self.cyclic_word().iter().map(|l| l.act(sigma)).collect();
        let start = word.iter().position(|&l| l == Letter::ZERO).expect("zero letter");
        Ok(Chamber {
            word: (1..=n)
                .map(|k| word[(start + k) % word.len()].signed() as i8)
                .collect(),
        })
    }

    /// Action of `σ ∈ B_n` fixing the letter `0`: substitution in the word.
    pub fn act_fixing_zero(&self, sigma: &SignedPermutation) -> Result<Chamber> {
        if sigma.rank() != self.rank() {
            return Err(Error::RankMismatch {
                left: sigma.rank(),
                right: self.rank(),
            });
        }
        Ok(Chamber {
            word: self.word.iter().map(|&a| sigma.image(a as i32) as i8).collect(),
        })
    }
}

/// The element of `B_{n+1}` fixing the letter `0` and acting on `1..=n` as `σ`.
pub fn fixing_zero(sigma: &SignedPermutation) -> SignedPermutation {
    let mut images = vec![1];
    images.extend(sigma.one_line().iter().map(|&a| a.signum() * (a.abs() + 1)));
    SignedPermutation::new(images).expect("embedding of a signed permutation")
}

/// `(0,1,-2,-0,-1,2)`.
impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.cyclic_word().iter().map(|l| l.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Chamber {
    type Err = Error;

    /// Accepts the full cyclic word or just its first half without the `0`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            what: "chamber",
            input: s.to_string(),
        };
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let letters: Vec<&str> = body.split(',').map(str::trim).collect();
        let full = letters.first() == Some(&"0");
        let half: Vec<&str> = if full {
            if !letters.len().is_multiple_of(2) {
                return Err(bad());
            }
            letters[1..letters.len() / 2].to_vec()
        } else {
            letters
        };
        let word = half
            .iter()
            .map(|x| x.parse::<i32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let chamber = Chamber::new(word).map_err(|_| bad())?;
        if full && chamber.to_string() != format!("({})", body.replace(' ', "")) {
            return Err(bad());
        }
        Ok(chamber)
    }
}

/// Values of the nbc monomials of `Y1(n)` (columns) on all chambers (rows).
#[derive(Clone, Debug)]
pub struct EvaluationMatrix {
    pub chambers: Vec<Chamber>,
    pub columns: Vec<Monomial>,
    pub entries: Vec<Vec<u8>>,
    pub rank: usize,
}

pub fn evaluation_matrix(n: usize) -> Result<EvaluationMatrix> {
    let chambers = Chamber::all(n);
    let columns = Space::Y1(n).system()?.nbc_basis();
    let entries: Vec<Vec<u8>> = par::map(&chambers, |ch| {
        columns.iter().map(|m| ch.monomial_value(*m) as u8).collect()
    });
    let rational: Vec<Vec<Rational>> = entries
        .iter()
        .map(|row| row.iter().map(|&v| scalar::int(v as i64)).collect())
        .collect();
    let rank = linalg::rank(&rational);
    Ok(EvaluationMatrix {
        chambers,
        columns,
        entries,
        rank,
    })
}

/// Elements of `B_{n+1}` fixing a chamber.
pub fn stabilizer(ch: &Chamber) -> Result<Vec<SignedPermutation>> {
    let mut out = Vec::new();
    for sigma in SignedPermutation::all(ch.rank() + 1) {
        if ch.act(&sigma)? == *ch {
            out.push(sigma);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heaviside_examples() {
        let ch = Chamber::new(vec![1, 2]).unwrap();
        let l = Letter::from_signed;
        assert!(ch.heaviside(Letter::ZERO, l(1), l(2)).unwrap());
        assert!(!ch.heaviside(Letter::ZERO, Letter::ZERO_BAR, l(1)).unwrap());
        let ch = Chamber::new(vec![-2, -1]).unwrap();
        assert!(!ch.heaviside(Letter::ZERO, l(1), l(2)).unwrap());
        assert!(ch.heaviside(Letter::ZERO, Letter::ZERO_BAR, l(2)).unwrap());
        assert!(ch.heaviside(Letter::ZERO, l(1), l(1)).is_err());
        assert!(Chamber::new(vec![-1, -2]).unwrap().loop_value(1).unwrap());
    }

    #[test]
    fn display_and_parse() {
        let ch = Chamber::new(vec![1, -2]).unwrap();
        assert_eq!(ch.to_string(), "(0,1,-2,-0,-1,2)");
        assert_eq!("(0,1,-2,-0,-1,2)".parse::<Chamber>().unwrap(), ch);
        assert_eq!("1,-2".parse::<Chamber>().unwrap(), ch);
        assert!("(0,1,-2,-0,1,2)".parse::<Chamber>().is_err());
    }

    #[test]
    fn identity_acts_trivially() {
        for ch in Chamber::all(2) {
            assert_eq!(ch.act(&SignedPermutation::identity(3)).unwrap(), ch);
        }
    }

    #[test]
    fn small_evaluation_matrix() {
        let m = evaluation_matrix(2).unwrap();
        assert_eq!(m.entries.len(), 8);
        assert_eq!(m.rank, 8);
        assert!(m.entries.iter().all(|row| row[0] == 1));
    }
}
