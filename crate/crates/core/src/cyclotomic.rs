//! Exact arithmetic in `Q(ω_m)` with `ω_m = exp(2πi/m)`.
//!
//! Elements are polynomials in `ω_m` reduced modulo the cyclotomic polynomial `Φ_m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::Rational;

/// Coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(p) = cache.lock().expect("cyclotomic cache").get(&m) {
        return p.clone();
    }
    assert!(m >= 1, "cyclotomic order must be positive");
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut p = vec![BigInt::zero(); m as usize + 1];
    p[0] = -BigInt::one();
    p[m as usize] = BigInt::one();
    for d in (1..m).filter(|d| m.is_multiple_of(*d)) {
        p = divide_exact(&p, &cyclotomic_polynomial(d));
    }
    let p = Arc::new(p);
    cache
        .lock()
        .expect("cyclotomic cache")
        .insert(m, p.clone());
    p
}

/// Quotient of `a` by the monic polynomial `b`; panics if the remainder is nonzero.
fn divide_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact cyclotomic division");
    q
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicNumber {
    order: u32,
    coeffs: Vec<Rational>,
}

impl CyclotomicNumber {
    fn degree(order: u32) -> usize {
        cyclotomic_polynomial(order).len() - 1
    }

    pub fn zero(order: u32) -> Self {
        Self {
            order,
            coeffs: vec![Rational::zero(); Self::degree(order)],
        }
    }

    pub fn from_rational(order: u32, q: Rational) -> Self {
        let mut out = Self::zero(order);
        out.coeffs[0] = q;
        out
    }

    /// `ω_m^k`.
    pub fn root_power(order: u32, k: u32) -> Self {
        let mut counts = vec![BigInt::zero(); order as usize];
        counts[(k % order) as usize] = BigInt::one();
        Self::from_power_counts(order, &counts)
    }

    /// `Σ_k counts[k] ω_m^k`.
    pub fn from_power_counts(order: u32, counts: &[BigInt]) -> Self {
        let poly: Vec<Rational> = counts
            .iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect();
        Self::reduce(order, poly)
    }

    fn reduce(order: u32, mut poly: Vec<Rational>) -> Self {
        let phi = cyclotomic_polynomial(order);
        let d = phi.len() - 1;
        for i in (d..poly.len()).rev() {
            let c = std::mem::take(&mut poly[i]);
            if c.is_zero() {
                continue;
            }
            for (j, pj) in phi.iter().take(d).enumerate() {
                poly[i - d + j] -= &c * Rational::from_integer(pj.clone());
            }
        }
        poly.resize(d, Rational::zero());
        Self { order, coeffs: poly }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        Self {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic orders differ");
        let mut poly = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len()];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                poly[i + j] += a * b;
            }
        }
        Self::reduce(self.order, poly)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn coeffs(m: u32) -> Vec<i64> {
        cyclotomic_polynomial(m)
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(coeffs(1), vec![-1, 1]);
        assert_eq!(coeffs(2), vec![1, 1]);
        assert_eq!(coeffs(4), vec![1, 0, 1]);
        assert_eq!(coeffs(6), vec![1, -1, 1]);
        assert_eq!(coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn sums_of_roots() {
        for m in 1..=24u32 {
            let mut s = CyclotomicNumber::zero(m);
            for k in 0..m {
                s = s.add(&CyclotomicNumber::root_power(m, k));
            }
            let expect = if m == 1 { int(1) } else { int(0) };
            assert_eq!(s.to_rational(), Some(expect));
            let w = CyclotomicNumber::root_power(m, 1);
            let mut p = CyclotomicNumber::from_rational(m, int(1));
            for _ in 0..m {
                p = p.mul(&w);
            }
            assert_eq!(p.to_rational(), Some(int(1)));
        }
        // ω_6 + ω_6^5 = 1
        let x = CyclotomicNumber::root_power(6, 1).add(&CyclotomicNumber::root_power(6, 5));
        assert_eq!(x.to_rational(), Some(int(1)));
        assert_eq!(CyclotomicNumber::root_power(8, 1).to_rational(), None);
    }
}
