//! Elements of the four presented rings, always kept in nbc normal form.

use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::engine::{add_term, linear_terms, rewrite_system, Flavor, RewriteSystem, Terms};
use crate::rings::generators::{Generator, Linear, Monomial, MAX_RING_RANK};
use crate::scalar::{self, Rational};

/// Which ring an element lives in.
///
/// `Z1(n)` and `Z3(n)` are the ungraded and graded rings of rank `n` with a
/// `B_n` action. `Y1(m)` and `Y3(m)` share the generators of rank `m` but carry
/// the action of `B_{m+1}` on the letters `0..=m`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Space {
    Z1(usize),
    Z3(usize),
    Y1(usize),
    Y3(usize),
}

impl Space {
    /// Rank of the generator set.
    pub fn rank(&self) -> usize {
        match *self {
            Space::Z1(n) | Space::Z3(n) | Space::Y1(n) | Space::Y3(n) => n,
        }
    }

    /// Rank of the acting hyperoctahedral group.
    pub fn group_rank(&self) -> usize {
        match *self {
            Space::Z1(n) | Space::Z3(n) => n,
            Space::Y1(m) | Space::Y3(m) => m + 1,
        }
    }

    pub fn flavor(&self) -> Flavor {
        match self {
            Space::Z1(_) | Space::Y1(_) => Flavor::Filtered,
            Space::Z3(_) | Space::Y3(_) => Flavor::Graded,
        }
    }

    pub fn is_graded(&self) -> bool {
        self.flavor() == Flavor::Graded
    }

    pub fn is_y(&self) -> bool {
        matches!(self, Space::Y1(_) | Space::Y3(_))
    }

    pub fn system(&self) -> Result<Arc<RewriteSystem>> {
        if self.rank() > MAX_RING_RANK {
            return Err(Error::OutOfRange {
                rank: self.rank(),
                max: MAX_RING_RANK,
            });
        }
        rewrite_system(self.rank(), self.flavor())
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Space::Z1(n) => write!(f, "Z1({n})"),
            Space::Z3(n) => write!(f, "Z3({n})"),
            Space::Y1(m) => write!(f, "Y1({m})"),
            Space::Y3(m) => write!(f, "Y3({m})"),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct RingElement {
    space: Space,
    terms: Terms,
}

impl RingElement {
    pub fn zero(space: Space) -> Self {
        Self {
            space,
            terms: Terms::new(),
        }
    }

    pub fn one(space: Space) -> Self {
        Self::monomial(space, Monomial::ONE, Rational::one())
    }

    /// A single term; the monomial must already be nbc.
    pub fn monomial(space: Space, m: Monomial, c: Rational) -> Self {
        let mut terms = Terms::new();
        add_term(&mut terms, m, c);
        Self { space, terms }
    }

    pub fn generator(space: Space, g: Generator) -> Self {
        Self::monomial(
            space,
            Monomial::from_generators(space.rank(), &[g]),
            Rational::one(),
        )
    }

    /// Embeds an affine form; graded spaces drop its constant.
    pub fn from_linear(space: Space, l: &Linear) -> Self {
        Self {
            space,
            terms: linear_terms(space.rank(), l, space.flavor()),
        }
    }

    /// Straightens arbitrary terms into normal form.
    pub fn from_terms(space: Space, terms: &Terms) -> Result<Self> {
        Ok(Self {
            space,
            terms: space.system()?.reduce(terms)?,
        })
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn terms(&self) -> &Terms {
        &self.terms
    }

    pub fn coefficient(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(
                self.space.to_string(),
                other.space.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Ok(Self {
            space: self.space,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut terms = Terms::new();
        for (m, c) in &self.terms {
            add_term(&mut terms, *m, c * q);
        }
        Self {
            space: self.space,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_space(other)?;
        Ok(Self {
            space: self.space,
            terms: self.space.system()?.multiply(&self.terms, &other.terms)?,
        })
    }

    /// Part of total degree `k`.
    pub fn degree_part(&self, k: usize) -> Self {
        self.filtered(|m| m.degree() == k)
    }

    /// Part with exactly `l` loop generators.
    pub fn loop_degree_part(&self, l: usize) -> Self {
        let rank = self.space.rank();
        self.filtered(|m| m.loop_degree(rank) == l)
    }

    fn filtered(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Largest degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Wire format: a list of `{monomial, coeff}` objects.
    pub fn to_json(&self) -> Value {
        let rank = self.space.rank();
        Value::Array(
            self.terms
                .iter()
                .map(|(m, c)| json!({"monomial": m.wire_names(rank), "coeff": scalar::to_wire(c)}))
                .collect(),
        )
    }

    /// Parses the wire format and straightens the result.
    pub fn from_json(space: Space, value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "ring element",
            input: value.to_string(),
        };
        let rank = space.rank();
        let mut terms = Terms::new();
        for t in value.as_array().ok_or_else(bad)? {
            let mut gens = Vec::new();
            for s in t["monomial"].as_array().ok_or_else(bad)? {
                let g = Generator::from_wire_name(s.as_str().ok_or_else(bad)?)?;
                if g.hand() > rank {
                    return Err(bad());
                }
                gens.push(g);
            }
            let c = scalar::from_wire(t["coeff"].as_str().ok_or_else(bad)?)?;
            let mut m = RingElement::one(space);
            for g in gens {
                m = m.mul(&RingElement::generator(space, g))?;
            }
            for (mono, d) in &m.terms {
                add_term(&mut terms, *mono, &c * d);
            }
        }
        Ok(Self { space, terms })
    }
}

/// `z1 z12 - z1 z2`, largest monomials first.
impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rank = self.space.rank();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = *c < Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = m.generators(rank).iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ");
            if mono.is_empty() {
                write!(f, "{}", scalar::pretty(&abs))?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{} {mono}", scalar::pretty(&abs))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {self}", self.space)
    }
}
