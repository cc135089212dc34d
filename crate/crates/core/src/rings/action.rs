//! The hyperoctahedral action on the presented rings by generator substitution.

use num_traits::One;

use crate::error::{Error, Result};
use crate::rings::element::{RingElement, Space};
use crate::rings::engine::{add_term, linear_terms, Terms};
use crate::rings::generators::{
    edge_label, generator_list, heaviside_label, loop_label, Generator, Linear, Monomial,
};
use crate::scalar::Rational;
use crate::signed::{Letter, SignedPermutation};

/// Image of a canonical generator, as an affine form in canonical generators.
pub fn generator_image(space: Space, sigma: &SignedPermutation, g: Generator) -> Result<Linear> {
    check_rank(space, sigma)?;
    if space.is_y() {
        let at = |l: Letter| l.act(sigma);
        match g {
            Generator::Loop(j) => heaviside_label(
                at(Letter::ZERO),
                at(Letter::ZERO_BAR),
                at(Letter::new(j as usize, false)),
            ),
            Generator::Edge { i, j, negative } => heaviside_label(
                at(Letter::ZERO),
                at(Letter::new(i as usize, false)),
                at(Letter::new(j as usize, negative)),
            ),
        }
    } else {
        match g {
            Generator::Loop(j) => loop_label(sigma.image(j as i32)),
            Generator::Edge { i, j, negative } => {
                let j = if negative { -(j as i32) } else { j as i32 };
                edge_label(sigma.image(i as i32), sigma.image(j))
            }
        }
    }
}

fn check_rank(space: Space, sigma: &SignedPermutation) -> Result<()> {
    if sigma.rank() != space.group_rank() {
        return Err(Error::RankMismatch {
            left: sigma.rank(),
            right: space.group_rank(),
        });
    }
    Ok(())
}

/// Precomputed generator images for one group element.
pub struct Substitution {
    space: Space,
    images: Vec<Terms>,
}

impl Substitution {
    pub fn new(space: Space, sigma: &SignedPermutation) -> Result<Self> {
        check_rank(space, sigma)?;
        let images = generator_list(space.rank())
            .iter()
            .map(|&g| {
                Ok(linear_terms(
                    space.rank(),
                    &generator_image(space, sigma, g)?,
                    space.flavor(),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { space, images })
    }

    pub fn apply_monomial(&self, m: Monomial) -> Result<RingElement> {
        let sys = self.space.system()?;
        let mut acc: Terms = Terms::from([(Monomial::ONE, Rational::one())]);
        for (idx, image) in self.images.iter().enumerate() {
            if m.bits() >> idx & 1 == 1 {
                acc = sys.multiply(&acc, image)?;
            }
        }
        RingElement::from_terms(self.space, &acc)
    }

    pub fn apply(&self, x: &RingElement) -> Result<RingElement> {
        if x.space() != self.space {
            return Err(Error::SpaceMismatch(
                x.space().to_string(),
                self.space.to_string(),
            ));
        }
        let mut terms = Terms::new();
        for (m, c) in x.terms() {
            for (n, d) in self.apply_monomial(*m)?.terms() {
                add_term(&mut terms, *n, c * d);
            }
        }
        RingElement::from_terms(self.space, &terms)
    }
}

/// `σ · x`, a left action: `act(στ, x) = act(σ, act(τ, x))`.
pub fn act(sigma: &SignedPermutation, x: &RingElement) -> Result<RingElement> {
    Substitution::new(x.space(), sigma)?.apply(x)
}
