//! Straightening rules and normal forms.
//!
//! The rule table is generated from the defining quadratic relations over all
//! signed labels: each relation is expanded in canonical generators and the
//! resulting span is brought to reduced echelon form with respect to the
//! monomial order. The pivots must be exactly the products of two generators
//! from one hand, so every rule rewrites a broken pair into nbc monomials.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock, RwLock};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rings::generators::{
    edge_label, generator_list, loop_label, Generator, Linear, Monomial, MAX_RING_RANK,
};
use crate::scalar::{self, Rational};

/// Linear combination of monomials.
pub type Terms = BTreeMap<Monomial, Rational>;

/// Whether generators square to zero (graded rings) or to themselves.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Flavor {
    Graded,
    Filtered,
}

impl Flavor {
    pub fn name(&self) -> &'static str {
        match self {
            Flavor::Graded => "graded",
            Flavor::Filtered => "filtered",
        }
    }
}

const STEP_LIMIT: usize = 50_000_000;
const DEPTH_LIMIT: usize = 4096;

/// Product of two monomials before any straightening.
pub fn monomial_product(a: Monomial, b: Monomial, flavor: Flavor) -> Option<Monomial> {
    if flavor == Flavor::Graded && a.0 & b.0 != 0 {
        None
    } else {
        Some(Monomial(a.0 | b.0))
    }
}

pub(crate) fn add_term(terms: &mut Terms, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// Expands an affine form into terms; graded rings drop the constant.
pub fn linear_terms(rank: usize, l: &Linear, flavor: Flavor) -> Terms {
    let list = generator_list(rank);
    let mut out = Terms::new();
    if flavor == Flavor::Filtered {
        add_term(&mut out, Monomial::ONE, scalar::int(l.constant));
    }
    for (g, c) in &l.terms {
        let idx = list.iter().position(|h| h == g).expect("generator of this rank");
        add_term(&mut out, Monomial(1 << idx), scalar::int(*c));
    }
    out
}

/// Distributes a product without straightening.
pub fn raw_product(a: &Terms, b: &Terms, flavor: Flavor) -> Terms {
    let mut out = Terms::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            if let Some(m) = monomial_product(*ma, *mb, flavor) {
                add_term(&mut out, m, ca * cb);
            }
        }
    }
    out
}

fn combine(a: &Terms, b: &Terms, sign: i64) -> Terms {
    let mut out = a.clone();
    for (m, c) in b {
        add_term(&mut out, *m, c * scalar::int(sign));
    }
    out
}

/// `xy - xw - yw + w` (filtered) or `xy - xw - yw` (graded). Every defining
/// quadratic relation of the rings has this shape in suitable labels.
fn quadratic_relation(rank: usize, flavor: Flavor, x: &Linear, y: &Linear, w: &Linear) -> Terms {
    let (x, y, w) = (
        linear_terms(rank, x, flavor),
        linear_terms(rank, y, flavor),
        linear_terms(rank, w, flavor),
    );
    let mut r = raw_product(&x, &y, flavor);
    r = combine(&r, &raw_product(&x, &w, flavor), -1);
    r = combine(&r, &raw_product(&y, &w, flavor), -1);
    if flavor == Flavor::Filtered {
        r = combine(&r, &w, 1);
    }
    r
}

/// The defining relations over all signed labels with distinct absolute values.
pub fn defining_relations(rank: usize, flavor: Flavor) -> Result<Vec<Terms>> {
    let labels: Vec<i32> = (1..=rank as i32).flat_map(|i| [i, -i]).collect();
    let mut out = Vec::new();
    for &a in &labels {
        for &b in &labels {
            if a.abs() == b.abs() {
                continue;
            }
            // loop and edge relations: z_ab z_a ~ z_b, z_b z_{a,-b} ~ z_ab
            out.push(quadratic_relation(
                rank,
                flavor,
                &edge_label(a, b)?,
                &loop_label(a)?,
                &loop_label(b)?,
            ));
            out.push(quadratic_relation(
                rank,
                flavor,
                &loop_label(b)?,
                &edge_label(a, -b)?,
                &edge_label(a, b)?,
            ));
            for &c in &labels {
                if c.abs() == a.abs() || c.abs() == b.abs() {
                    continue;
                }
                out.push(quadratic_relation(
                    rank,
                    flavor,
                    &edge_label(a, b)?,
                    &edge_label(b, c)?,
                    &edge_label(a, c)?,
                ));
            }
        }
    }
    out.retain(|r| !r.is_empty());
    Ok(out)
}

/// Reduced echelon form, pivots keyed by leading (largest) monomial with
/// leading coefficient one.
fn echelon(rows: Vec<Terms>) -> BTreeMap<Monomial, Terms> {
    let mut pivots: BTreeMap<Monomial, Terms> = BTreeMap::new();
    for mut row in rows {
        while let Some(hit) = row.keys().rev().find(|m| pivots.contains_key(m)).copied() {
            let c = row[&hit].clone();
            let p = &pivots[&hit];
            for (m, d) in p {
                add_term(&mut row, *m, -(&c * d));
            }
        }
        let Some((&lead, lc)) = row.iter().next_back() else {
            continue;
        };
        let inv = lc.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        pivots.insert(lead, row);
    }
    // back substitution, smallest lead first
    let leads: Vec<Monomial> = pivots.keys().copied().collect();
    for (k, &lead) in leads.iter().enumerate() {
        let pivot = pivots[&lead].clone();
        for &other in &leads[k + 1..] {
            let row = pivots.get_mut(&other).unwrap();
            if let Some(c) = row.get(&lead).cloned() {
                for (m, d) in &pivot {
                    add_term(row, *m, -(&c * d));
                }
            }
        }
    }
    pivots
}

type NormalForm = Arc<Vec<(Monomial, Rational)>>;
type Registry = Mutex<HashMap<(usize, Flavor), Arc<RewriteSystem>>>;

/// Rule table and memoised normal forms for one rank and flavor.
pub struct RewriteSystem {
    rank: usize,
    flavor: Flavor,
    hands: Vec<u64>,
    rules: HashMap<u64, Vec<(Monomial, Rational)>>,
    memo: RwLock<HashMap<u64, NormalForm>>,
}

impl std::fmt::Debug for RewriteSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RewriteSystem")
            .field("rank", &self.rank)
            .field("flavor", &self.flavor)
            .field("rules", &self.rules.len())
            .finish()
    }
}

fn hand_masks(rank: usize) -> Vec<u64> {
    let list = generator_list(rank);
    (1..=rank)
        .map(|j| {
            list.iter()
                .enumerate()
                .filter(|(_, g)| g.hand() == j)
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn broken_pairs(hands: &[u64]) -> Vec<u64> {
    let mut out = Vec::new();
    for &h in hands {
        let bits: Vec<u32> = (0..64).filter(|i| h >> i & 1 == 1).collect();
        for (k, &a) in bits.iter().enumerate() {
            for &b in &bits[k + 1..] {
                out.push(1 << a | 1 << b);
            }
        }
    }
    out.sort_by_key(|&m| Monomial(m));
    out
}

impl RewriteSystem {
    /// Generates the rule table from the defining relations.
    pub fn build(rank: usize, flavor: Flavor) -> Result<Self> {
        if rank > MAX_RING_RANK {
            return Err(Error::OutOfRange {
                rank,
                max: MAX_RING_RANK,
            });
        }
        let pivots = echelon(defining_relations(rank, flavor)?);
        let rules = pivots
            .into_iter()
            .map(|(lead, row)| {
                let rhs = row
                    .into_iter()
                    .filter(|(m, _)| *m != lead)
                    .map(|(m, c)| (m, -c))
                    .collect();
                (lead, rhs)
            })
            .collect();
        Self::from_rules(rank, flavor, rules)
    }

    /// Validates a rule table: leads are exactly the broken pairs and every
    /// right hand side consists of smaller nbc monomials.
    pub fn from_rules(
        rank: usize,
        flavor: Flavor,
        rules: Vec<(Monomial, Vec<(Monomial, Rational)>)>,
    ) -> Result<Self> {
        if rank > MAX_RING_RANK {
            return Err(Error::OutOfRange {
                rank,
                max: MAX_RING_RANK,
            });
        }
        let hands = hand_masks(rank);
        let mut leads: Vec<u64> = rules.iter().map(|(m, _)| m.0).collect();
        leads.sort_by_key(|&m| Monomial(m));
        if leads != broken_pairs(&hands) {
            return Err(Error::InconsistentRules(format!(
                "{} leading monomials for {} broken pairs at rank {rank}",
                leads.len(),
                broken_pairs(&hands).len()
            )));
        }
        for (lead, rhs) in &rules {
            for (m, _) in rhs {
                if !(m < lead) || !m.is_nbc(rank) {
                    return Err(Error::InconsistentRules(format!(
                        "rule for {} produces {}",
                        lead.pretty(rank),
                        m.pretty(rank)
                    )));
                }
            }
        }
        Ok(Self {
            rank,
            flavor,
            hands,
            rules: rules.into_iter().map(|(m, r)| (m.0, r)).collect(),
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    /// Rules sorted by leading monomial.
    pub fn rules(&self) -> Vec<(Monomial, Vec<(Monomial, Rational)>)> {
        let mut out: Vec<_> = self
            .rules
            .iter()
            .map(|(m, r)| (Monomial(*m), r.clone()))
            .collect();
        out.sort_by_key(|a| a.0);
        out
    }

    pub fn rule(&self, lead: Monomial) -> Option<&[(Monomial, Rational)]> {
        self.rules.get(&lead.0).map(|r| r.as_slice())
    }

    pub fn is_nbc(&self, m: Monomial) -> bool {
        self.hands.iter().all(|h| (h & m.0).count_ones() <= 1)
    }

    /// All nbc monomials, in increasing order.
    pub fn nbc_basis(&self) -> Vec<Monomial> {
        let mut out = vec![0u64];
        for &h in &self.hands {
            let bits: Vec<u64> = (0..64).filter(|i| h >> i & 1 == 1).map(|i| 1 << i).collect();
            out = out
                .iter()
                .flat_map(|&m| std::iter::once(m).chain(bits.iter().map(move |b| m | b)))
                .collect();
        }
        let mut out: Vec<Monomial> = out.into_iter().map(Monomial).collect();
        out.sort();
        out
    }

    /// Normal form of a single monomial.
    pub fn normal_form(&self, m: Monomial) -> Result<Arc<Vec<(Monomial, Rational)>>> {
        let mut steps = 0;
        self.normal_form_inner(m, &mut steps, 0)
    }

    fn normal_form_inner(
        &self,
        m: Monomial,
        steps: &mut usize,
        depth: usize,
    ) -> Result<Arc<Vec<(Monomial, Rational)>>> {
        let Some(&hand) = self.hands.iter().find(|h| (*h & m.0).count_ones() >= 2) else {
            return Ok(Arc::new(vec![(m, Rational::one())]));
        };
        if let Some(hit) = self.memo.read().unwrap().get(&m.0) {
            return Ok(hit.clone());
        }
        *steps += 1;
        if *steps > STEP_LIMIT || depth > DEPTH_LIMIT {
            return Err(Error::RewriteLimit(*steps));
        }
        let inside = hand & m.0;
        let top = 63 - inside.leading_zeros();
        let rest = inside & !(1 << top);
        let second = 63 - rest.leading_zeros();
        let pair = 1u64 << top | 1u64 << second;
        let outside = Monomial(m.0 & !pair);
        let mut acc = Terms::new();
        for (r, c) in &self.rules[&pair] {
            if let Some(next) = monomial_product(outside, *r, self.flavor) {
                for (n, d) in self.normal_form_inner(next, steps, depth + 1)?.iter() {
                    add_term(&mut acc, *n, c * d);
                }
            }
        }
        let out = Arc::new(acc.into_iter().collect::<Vec<_>>());
        self.memo.write().unwrap().insert(m.0, out.clone());
        Ok(out)
    }

    pub fn reduce(&self, terms: &Terms) -> Result<Terms> {
        let mut out = Terms::new();
        for (m, c) in terms {
            for (n, d) in self.normal_form(*m)?.iter() {
                add_term(&mut out, *n, c * d);
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, a: &Terms, b: &Terms) -> Result<Terms> {
        let mut out = Terms::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                if let Some(m) = monomial_product(*ma, *mb, self.flavor) {
                    let c = ca * cb;
                    for (n, d) in self.normal_form(m)?.iter() {
                        add_term(&mut out, *n, &c * d);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Checks that every overlap of two rules resolves: three generators in one
    /// hand, and a rule multiplied by one of its own generators.
    pub fn check_confluence(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InconsistentRules(what));
        for &hand in &self.hands {
            let bits: Vec<u64> = (0..64).filter(|i| hand >> i & 1 == 1).map(|i| 1 << i).collect();
            for (x, &a) in bits.iter().enumerate() {
                for (y, &b) in bits.iter().enumerate().skip(x + 1) {
                    let pair = Monomial(a | b);
                    let rhs: Terms = self.rules[&pair.0].iter().cloned().collect();
                    for g in [a, b] {
                        let lhs = self.multiply(&rhs, &BTreeMap::from([(Monomial(g), Rational::one())]))?;
                        let want = match self.flavor {
                            Flavor::Graded => Terms::new(),
                            Flavor::Filtered => rhs.clone(),
                        };
                        if lhs != want {
                            return bad(format!("square overlap at {}", pair.pretty(self.rank)));
                        }
                    }
                    for &c in &bits[y + 1..] {
                        let triple = [a, b, c];
                        let mut results = Vec::new();
                        for k in 0..3 {
                            let third = Monomial(triple[k]);
                            let pair = triple.iter().enumerate().filter(|(i, _)| *i != k).fold(0, |acc, (_, v)| acc | v);
                            let rhs: Terms = self.rules[&pair].iter().cloned().collect();
                            results.push(self.multiply(&rhs, &BTreeMap::from([(third, Rational::one())]))?);
                        }
                        if results[0] != results[1] || results[1] != results[2] {
                            return bad(format!("triple overlap at {}", Monomial(a | b | c).pretty(self.rank)));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let rules: Vec<Value> = self
            .rules()
            .into_iter()
            .map(|(lead, rhs)| {
                json!({
                    "lead": lead.wire_names(self.rank),
                    "rhs": rhs.iter().map(|(m, c)| json!({
                        "monomial": m.wire_names(self.rank),
                        "coeff": scalar::to_wire(c),
                    })).collect::<Vec<_>>(),
                })
            })
            .collect();
        json!({ "rank": self.rank, "flavor": self.flavor.name(), "rules": rules })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse {
            what: "rewrite table",
            input: value.to_string().chars().take(80).collect(),
        };
        let rank = value["rank"].as_u64().ok_or_else(bad)? as usize;
        if rank > MAX_RING_RANK {
            return Err(bad());
        }
        let flavor = match value["flavor"].as_str() {
            Some("graded") => Flavor::Graded,
            Some("filtered") => Flavor::Filtered,
            _ => return Err(bad()),
        };
        let monomial = |v: &Value| -> Result<Monomial> {
            let gens = v
                .as_array()
                .ok_or_else(bad)?
                .iter()
                .map(|s| Generator::from_wire_name(s.as_str().ok_or_else(bad)?))
                .collect::<Result<Vec<_>>>()?;
            if gens.iter().any(|g| g.hand() > rank) {
                return Err(bad());
            }
            Ok(Monomial::from_generators(rank, &gens))
        };
        let mut rules = Vec::new();
        for rule in value["rules"].as_array().ok_or_else(bad)? {
            let lead = monomial(&rule["lead"])?;
            let mut rhs = Vec::new();
            for t in rule["rhs"].as_array().ok_or_else(bad)? {
                rhs.push((
                    monomial(&t["monomial"])?,
                    scalar::from_wire(t["coeff"].as_str().ok_or_else(bad)?)?,
                ));
            }
            rules.push((lead, rhs));
        }
        let system = Self::from_rules(rank, flavor, rules)?;
        system.check_confluence()?;
        Ok(system)
    }
}

fn registry() -> &'static Registry {
    static REGISTRY: OnceLock<Registry> = OnceLock::new();
    REGISTRY.get_or_init(Default::default)
}

/// Shared rewrite system, built on first use.
pub fn rewrite_system(rank: usize, flavor: Flavor) -> Result<Arc<RewriteSystem>> {
    if let Some(s) = registry().lock().unwrap().get(&(rank, flavor)) {
        return Ok(s.clone());
    }
    let built = Arc::new(RewriteSystem::build(rank, flavor)?);
    Ok(registry()
        .lock()
        .unwrap()
        .entry((rank, flavor))
        .or_insert(built)
        .clone())
}

/// Registers a system loaded from elsewhere, unless one is already present.
pub fn install_rewrite_system(system: RewriteSystem) -> Arc<RewriteSystem> {
    registry()
        .lock()
        .unwrap()
        .entry((system.rank, system.flavor))
        .or_insert_with(|| Arc::new(system))
        .clone()
}

pub fn is_rewrite_system_loaded(rank: usize, flavor: Flavor) -> bool {
    registry().lock().unwrap().contains_key(&(rank, flavor))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rank: usize, gens: &[Generator]) -> Monomial {
        Monomial::from_generators(rank, gens)
    }

    #[test]
    fn graded_straightening_example() {
        let sys = rewrite_system(2, Flavor::Graded).unwrap();
        let (z1, z2) = (Generator::Loop(1), Generator::Loop(2));
        let p = Generator::edge(1, 2, false);
        let nf = sys.normal_form(m(2, &[z2, p])).unwrap();
        let want = vec![(m(2, &[z1, z2]), scalar::int(-1)), (m(2, &[z1, p]), scalar::int(1))];
        assert_eq!(*nf, want);
    }

    #[test]
    fn filtered_squares_are_idempotent() {
        let sys = rewrite_system(2, Flavor::Filtered).unwrap();
        let z1: Terms = BTreeMap::from([(m(2, &[Generator::Loop(1)]), Rational::one())]);
        assert_eq!(sys.multiply(&z1, &z1).unwrap(), z1);
    }

    #[test]
    fn rules_are_confluent() {
        for rank in 1..=4 {
            for flavor in [Flavor::Graded, Flavor::Filtered] {
                rewrite_system(rank, flavor).unwrap().check_confluence().unwrap();
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let sys = rewrite_system(3, Flavor::Filtered).unwrap();
        let back = RewriteSystem::from_json(&sys.to_json()).unwrap();
        assert_eq!(back.rules(), sys.rules());
    }

    #[test]
    fn nbc_counts() {
        let sys = rewrite_system(3, Flavor::Graded).unwrap();
        let mut counts = [0; 4];
        for b in sys.nbc_basis() {
            counts[b.degree()] += 1;
        }
        assert_eq!(counts, [1, 9, 23, 15]);
    }
}
