//! Relations with a central degree-two parameter `u`, their images under the
//! group, and the two specialisations `u = 0` (graded ring) and `u = 1`
//! (ungraded ring).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rings::element::{RingElement, Space};
use crate::rings::engine::{add_term, Flavor, Terms};
use crate::rings::generators::{
    edge_label, generator_list, loop_label, Generator, Linear, Monomial,
};
use crate::scalar::{self, Rational};
use crate::signed::SignedPermutation;

/// A polynomial in canonical generators and `u`. Keys are sorted generator
/// multisets with the power of `u`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct EqPoly {
    terms: BTreeMap<(Vec<Generator>, u32), Rational>,
}

impl EqPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), 0, c);
        p
    }

    pub fn u() -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), 1, Rational::one());
        p
    }

    pub fn generator(g: Generator) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![g], 0, Rational::one());
        p
    }

    /// Homogenises an affine form: the constant becomes a multiple of `u`.
    pub fn from_linear(l: &Linear) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), 1, scalar::int(l.constant));
        for (g, c) in &l.terms {
            p.add_term(vec![*g], 0, scalar::int(*c));
        }
        p
    }

    fn add_term(&mut self, mut gens: Vec<Generator>, u: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        gens.sort();
        let e = self.terms.entry((gens, u)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((g, u), c) in &other.terms {
            out.add_term(g.clone(), *u, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        let mut out = Self::zero();
        for ((g, u), c) in &self.terms {
            out.add_term(g.clone(), *u, c * q);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for ((ga, ua), ca) in &self.terms {
            for ((gb, ub), cb) in &other.terms {
                let mut g = ga.clone();
                g.extend(gb.iter().copied());
                out.add_term(g, ua + ub, ca * cb);
            }
        }
        out
    }

    /// Divides by `u`, provided every term is divisible.
    pub fn divide_by_u(&self) -> Option<Self> {
        let mut out = Self::zero();
        for ((g, u), c) in &self.terms {
            if *u == 0 {
                return None;
            }
            out.add_term(g.clone(), u - 1, c.clone());
        }
        Some(out)
    }

    /// Replaces every generator by its image; `u` is fixed.
    pub fn substitute(&self, image: &impl Fn(Generator) -> EqPoly) -> Self {
        let mut out = Self::zero();
        for ((gens, u), c) in &self.terms {
            let mut term = Self::zero();
            term.add_term(Vec::new(), *u, c.clone());
            for g in gens {
                term = term.mul(&image(*g));
            }
            out = out.add(&term);
        }
        out
    }

    /// Sets `u` to `0` or `1` and expands in the corresponding ring, without
    /// straightening.
    pub fn specialize(&self, rank: usize, value: UValue) -> Terms {
        let list = generator_list(rank);
        let flavor = value.flavor();
        let mut out = Terms::new();
        for ((gens, u), c) in &self.terms {
            if value == UValue::Zero && *u > 0 {
                continue;
            }
            let mut bits = 0u64;
            let mut vanishes = false;
            for g in gens {
                let bit = 1u64 << list.iter().position(|h| h == g).expect("generator of this rank");
                if bits & bit != 0 && flavor == Flavor::Graded {
                    vanishes = true;
                }
                bits |= bit;
            }
            if !vanishes {
                add_term(&mut out, Monomial(bits), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for EqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((gens, u), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", scalar::pretty(c))?;
            for g in gens {
                write!(f, " {g}")?;
            }
            if *u > 0 {
                write!(f, " u^{u}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EqPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum UValue {
    Zero,
    One,
}

impl UValue {
    pub fn flavor(&self) -> Flavor {
        match self {
            UValue::Zero => Flavor::Graded,
            UValue::One => Flavor::Filtered,
        }
    }

    pub fn space(&self, rank: usize) -> Space {
        match self {
            UValue::Zero => Space::Z3(rank),
            UValue::One => Space::Z1(rank),
        }
    }
}

/// Which family a base relation belongs to.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum RelationFamily {
    /// `g (g - u)` for a generator `g`.
    Square,
    /// Three edges on `i < j < k`.
    Triangle,
    /// The edge `z_ij^+` with the loops at `i` and `j`.
    EdgeLoops,
    /// The two edges on `i < j` with the loop at `j`.
    EdgePair,
}

fn gen(g: Generator) -> EqPoly {
    EqPoly::generator(g)
}

/// `u^{-1} (a b (c - u) - (a - u)(b - u) c)`.
fn cyclic_relation(a: &EqPoly, b: &EqPoly, c: &EqPoly) -> EqPoly {
    let u = EqPoly::u();
    let first = a.mul(b).mul(&c.sub(&u));
    let second = a.sub(&u).mul(&b.sub(&u)).mul(c);
    first
        .sub(&second)
        .divide_by_u()
        .expect("cyclic relations are divisible by u")
}

/// The base relations before taking group images.
pub fn base_relations(rank: usize) -> Vec<(RelationFamily, EqPoly)> {
    let mut out = Vec::new();
    let u = EqPoly::u();
    for &g in generator_list(rank) {
        out.push((RelationFamily::Square, gen(g).mul(&gen(g).sub(&u))));
    }
    for i in 1..=rank {
        for j in i + 1..=rank {
            let plus = gen(Generator::edge(i, j, false));
            let minus = gen(Generator::edge(i, j, true));
            let (zi, zj) = (gen(Generator::Loop(i as u8)), gen(Generator::Loop(j as u8)));
            out.push((RelationFamily::EdgeLoops, cyclic_relation(&plus, &zi, &zj)));
            out.push((RelationFamily::EdgePair, cyclic_relation(&minus, &zj, &plus)));
            for k in j + 1..=rank {
                out.push((
                    RelationFamily::Triangle,
                    cyclic_relation(
                        &gen(Generator::edge(i, j, false)),
                        &gen(Generator::edge(j, k, false)),
                        &gen(Generator::edge(i, k, false)),
                    ),
                ));
            }
        }
    }
    out
}

/// Image of a canonical generator under `σ`, homogenised with `u`.
pub fn generator_image(sigma: &SignedPermutation, g: Generator) -> Result<EqPoly> {
    let l = match g {
        Generator::Loop(j) => loop_label(sigma.image(j as i32))?,
        Generator::Edge { i, j, negative } => {
            let j = if negative { -(j as i32) } else { j as i32 };
            edge_label(sigma.image(i as i32), sigma.image(j))?
        }
    };
    Ok(EqPoly::from_linear(&l))
}

/// The base relations and all their images under `B_n`, deduplicated.
#[derive(Clone, Debug)]
pub struct EquivariantRelationSet {
    rank: usize,
    relations: Vec<(RelationFamily, EqPoly)>,
}

impl EquivariantRelationSet {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[(RelationFamily, EqPoly)] {
        &self.relations
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    /// Specialises every relation, straightened in the target ring.
    pub fn specialize(&self, value: UValue) -> Result<Vec<RingElement>> {
        let space = value.space(self.rank);
        let polys: Vec<&EqPoly> = self.relations.iter().map(|(_, p)| p).collect();
        crate::par::map(&polys, |p| RingElement::from_terms(space, &p.specialize(self.rank, value)))
            .into_iter()
            .collect()
    }

    /// Fails with the first relation that does not vanish after specialising.
    pub fn verify(&self, value: UValue) -> Result<()> {
        for ((family, p), r) in self.relations.iter().zip(self.specialize(value)?) {
            if !r.is_zero() {
                return Err(Error::InconsistentRules(format!(
                    "{family:?} relation {p} specialises to {r}"
                )));
            }
        }
        Ok(())
    }
}

pub fn equivariant_relations(rank: usize) -> Result<EquivariantRelationSet> {
    let base = base_relations(rank);
    let mut seen = BTreeSet::new();
    let mut relations = Vec::new();
    for sigma in SignedPermutation::all(rank) {
        let images = generator_list(rank)
            .iter()
            .map(|&g| Ok((g, generator_image(&sigma, g)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        for (family, p) in &base {
            let q = p.substitute(&|g| images[&g].clone());
            if seen.insert(q.clone()) {
                relations.push((*family, q));
            }
        }
    }
    Ok(EquivariantRelationSet { rank, relations })
}
