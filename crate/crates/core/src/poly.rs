//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are identified by their coordinate index in the owning chart, so
//! a polynomial carries no chart of its own; [`crate::SuperFunction`] supplies
//! that context.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::scalar::Scalar;

/// A power product `x_{v1}^{e1} ... x_{vk}^{ek}` with strictly increasing
/// variable indices and positive exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: usize) -> Self {
        Monomial(vec![(v as u32, 1)])
    }

    pub fn var_pow(v: usize, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial(vec![(v as u32, e)])
        }
    }

    /// Builds a monomial from `(variable, exponent)` pairs in any order.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *map.entry(v as u32).or_default() += e;
            }
        }
        Monomial(map.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponent(&self, v: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(w, _)| w as usize == v)
            .map_or(0, |&(_, e)| e)
    }

    /// `(variable, exponent)` pairs in increasing variable order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            let (a, b) = (self.0[i], other.0[j]);
            match a.0.cmp(&b.0) {
                Ordering::Less => {
                    out.push(a);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a.0, a.1 + b.1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }

    /// `self / other` if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        let mut j = 0;
        for &(v, e) in &self.0 {
            if j < other.0.len() && other.0[j].0 < v {
                return None;
            }
            if j < other.0.len() && other.0[j].0 == v {
                let f = other.0[j].1;
                j += 1;
                match e.cmp(&f) {
                    Ordering::Less => return None,
                    Ordering::Equal => {}
                    Ordering::Greater => out.push((v, e - f)),
                }
            } else {
                out.push((v, e));
            }
        }
        if j < other.0.len() {
            return None;
        }
        Some(Monomial(out))
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::new();
        for &(v, e) in &self.0 {
            let f = other.exponent(v as usize);
            if f > 0 {
                out.push((v, e.min(f)));
            }
        }
        Monomial(out)
    }

    /// Splits off the power of `v`.
    pub fn split(&self, v: usize) -> (u32, Monomial) {
        let mut rest = Vec::with_capacity(self.0.len());
        let mut e = 0;
        for &(w, f) in &self.0 {
            if w as usize == v {
                e = f;
            } else {
                rest.push((w, f));
            }
        }
        (e, Monomial(rest))
    }

    /// Weighted degree `sum e_v * weight(v)`.
    pub fn weight<F: Fn(usize) -> Scalar>(&self, weight: F) -> Scalar {
        self.0
            .iter()
            .fold(Scalar::zero(), |acc, &(v, e)| acc + weight(v as usize) * Scalar::from_integer(e.into()))
    }

    /// Applies an index relabelling; `map[v]` is the new index of `v`.
    pub fn relabel(&self, map: &[usize]) -> Monomial {
        Monomial::from_pairs(self.factors().map(|(v, e)| (map[v], e)))
    }
}

/// Graded lexicographic order: total degree first, then lexicographic with
/// lower variable indices dominating.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            for (a, b) in self.0.iter().zip(other.0.iter()) {
                if a.0 != b.0 {
                    // the side holding the smaller variable has the larger lex exponent there
                    return if a.0 < b.0 { Ordering::Greater } else { Ordering::Less };
                }
                if a.1 != b.1 {
                    return a.1.cmp(&b.1);
                }
            }
            self.0.len().cmp(&other.0.len())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with no zero coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::term(Monomial::one(), c)
    }

    pub fn var(v: usize) -> Self {
        Poly::term(Monomial::var(v), Scalar::one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.constant_value().is_some_and(|c| c.is_one())
    }

    /// The value if this is a constant polynomial (zero included).
    pub fn constant_value(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Leading term in graded lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(v) > 0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    /// Smallest variable index occurring.
    pub fn min_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.factors().next().map(|(v, _)| v)).min()
    }

    pub fn vars(&self) -> std::collections::BTreeSet<usize> {
        self.terms.keys().flat_map(|m| m.factors().map(|(v, _)| v)).collect()
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), -a)).collect(),
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(n, a)| (n.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn derivative(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            if e > 0 {
                let m2 = rest.mul(&Monomial::var_pow(v, e - 1));
                out.add_term(m2, c * Scalar::from_integer(e.into()));
            }
        }
        out
    }

    /// Term-by-term antiderivative in `v` with zero constant of integration.
    pub fn integrate(&self, v: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            let m2 = rest.mul(&Monomial::var_pow(v, e + 1));
            out.add_term(m2, c / Scalar::from_integer((e + 1).into()));
        }
        out
    }

    /// Substitutes the constant `value` for the variable `v`.
    pub fn set_var(&self, v: usize, value: &Scalar) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            let factor = num_traits::pow(value.clone(), e as usize);
            out.add_term(rest, c * factor);
        }
        out
    }

    /// Evaluates at a full assignment of scalars.
    pub fn eval<F: Fn(usize) -> Scalar>(&self, value: F) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.factors() {
                t *= num_traits::pow(value(v), e as usize);
            }
            acc += t;
        }
        acc
    }

    pub fn relabel(&self, map: &[usize]) -> Poly {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.relabel(map), c.clone())))
    }

    /// Weighted degree if all terms share it.
    pub fn homogeneous_weight<F: Fn(usize) -> Scalar>(&self, weight: F) -> Option<Scalar> {
        let mut it = self.terms.keys().map(|m| m.weight(&weight));
        let first = it.next()?;
        if it.all(|w| w == first) {
            Some(first)
        } else {
            None
        }
    }

    /// View as a univariate polynomial in `v` with coefficients free of `v`.
    pub fn univariate(&self, v: usize) -> BTreeMap<u32, Poly> {
        let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split(v);
            out.entry(e).or_default().add_term(rest, c.clone());
        }
        out
    }

    fn leading_in(&self, v: usize) -> (u32, Poly) {
        let uni = self.univariate(v);
        let (&d, c) = uni.iter().next_back().expect("nonzero polynomial");
        (d, c.clone())
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if d.len() == 1 {
            let mut q = Poly::zero();
            for (m, c) in &self.terms {
                q.add_term(m.div(&dm)?, c / &dc);
            }
            return Some(q);
        }
        let mut r = self.clone();
        let mut q = Poly::zero();
        while let Some((rm, rc)) = r.leading() {
            let m = rm.div(&dm)?;
            let c = rc / &dc;
            r = r.sub(&d.mul_monomial(&m, &c));
            q.add_term(m, c);
        }
        Some(q)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
            None => Poly::zero(),
        }
    }

    /// Pseudo-remainder of `self` by `b` viewed as univariate in `v`.
    fn prem(&self, b: &Poly, v: usize) -> Poly {
        let (db, lb) = b.leading_in(v);
        let mut r = self.clone();
        while !r.is_zero() {
            let (dr, lr) = r.leading_in(v);
            if dr < db {
                break;
            }
            let shift = Poly::term(Monomial::var_pow(v, dr - db), Scalar::one());
            r = r.mul(&lb).sub(&lr.mul(&shift).mul(b));
            r = r.monic();
        }
        r
    }

    /// Content with respect to `v`: gcd of the coefficients of powers of `v`.
    fn content_in(&self, v: usize) -> Poly {
        let mut g = Poly::zero();
        for c in self.univariate(v).values() {
            g = gcd(&g, c);
            if g.is_one() {
                break;
            }
        }
        g
    }
}

/// Monic greatest common divisor over the rationals.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.constant_value().is_some() || b.constant_value().is_some() {
        return Poly::one();
    }
    if a.len() == 1 || b.len() == 1 {
        let (single, other) = if a.len() == 1 { (a, b) } else { (b, a) };
        let mut m = single.leading().unwrap().0.clone();
        for (n, _) in other.terms() {
            m = m.gcd(n);
            if m.is_one() {
                break;
            }
        }
        return Poly::term(m, Scalar::one());
    }
    let v = a.min_var().into_iter().chain(b.min_var()).min().unwrap();
    if !a.contains_var(v) {
        return gcd(a, &b.content_in(v));
    }
    if !b.contains_var(v) {
        return gcd(&a.content_in(v), b);
    }
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let c = gcd(&ca, &cb);
    let mut p = a.exact_div(&ca).expect("content divides");
    let mut q = b.exact_div(&cb).expect("content divides");
    if p.degree_in(v) < q.degree_in(v) {
        std::mem::swap(&mut p, &mut q);
    }
    loop {
        let r = p.prem(&q, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            q = Poly::one();
            break;
        }
        let cr = r.content_in(v);
        p = q;
        q = r.exact_div(&cr).expect("content divides");
    }
    let cq = q.content_in(v);
    let q = q.exact_div(&cq).expect("content divides");
    c.mul(&q).monic()
}
