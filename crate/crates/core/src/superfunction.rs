//! Superfunctions: Grassmann polynomials in the odd coordinates whose
//! coefficients are rational functions of the even coordinates.

use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::chart::{Chart, Parity};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::EvenRational;
use crate::scalar::Scalar;

/// Product of distinct odd coordinates in ascending index order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct OddMonomial(Vec<u32>);

impl OddMonomial {
    pub fn one() -> Self {
        OddMonomial(Vec::new())
    }

    pub fn var(i: usize) -> Self {
        OddMonomial(vec![i as u32])
    }

    /// Sorts `indices` into canonical order. Returns `None` when an index
    /// repeats, otherwise the monomial and whether the sort was an odd
    /// permutation.
    pub fn from_indices(indices: &[usize]) -> Option<(OddMonomial, bool)> {
        let mut v: Vec<u32> = indices.iter().map(|&i| i as u32).collect();
        let mut negative = false;
        // insertion sort, counting transpositions
        for i in 1..v.len() {
            let mut j = i;
            while j > 0 && v[j - 1] > v[j] {
                v.swap(j - 1, j);
                negative = !negative;
                j -= 1;
            }
            if j > 0 && v[j - 1] == v[j] {
                return None;
            }
        }
        Some((OddMonomial(v), negative))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_bit(self.0.len())
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&i| i as usize)
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&(i as u32)).is_ok()
    }

    /// `self * other`: `None` if they share a variable, else the product and
    /// its sign.
    pub fn mul(&self, other: &OddMonomial) -> Option<(OddMonomial, bool)> {
        if other.0.is_empty() {
            return Some((self.clone(), false));
        }
        if self.0.is_empty() {
            return Some((other.clone(), false));
        }
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let mut negative = false;
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    // other[j] passes the remaining self[i..]
                    if (self.0.len() - i) % 2 == 1 {
                        negative = !negative;
                    }
                    out.push(other.0[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => return None,
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Some((OddMonomial(out), negative))
    }

    /// Left derivative by the odd variable `i`: the remaining monomial and
    /// the sign from moving `i` to the front.
    pub fn left_derivative(&self, i: usize) -> Option<(OddMonomial, bool)> {
        let pos = self.0.binary_search(&(i as u32)).ok()?;
        let mut rest = self.0.clone();
        rest.remove(pos);
        Some((OddMonomial(rest), pos % 2 == 1))
    }

    pub(crate) fn relabel(&self, map: &[usize]) -> (OddMonomial, bool) {
        let idx: Vec<usize> = self.indices().map(|i| map[i]).collect();
        OddMonomial::from_indices(&idx).expect("relabelling is injective")
    }
}

impl Ord for OddMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for OddMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of the superfunction algebra of a chart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperFunction {
    chart: Chart,
    terms: BTreeMap<OddMonomial, EvenRational>,
}

impl SuperFunction {
    pub fn zero(chart: &Chart) -> Self {
        SuperFunction {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(chart: &Chart) -> Self {
        SuperFunction::constant(chart, Scalar::one())
    }

    pub fn constant(chart: &Chart, c: Scalar) -> Self {
        SuperFunction::even(chart, EvenRational::constant(c))
    }

    /// A function of the even coordinates only.
    pub fn even(chart: &Chart, f: EvenRational) -> Self {
        SuperFunction::term(chart, OddMonomial::one(), f)
    }

    pub fn term(chart: &Chart, m: OddMonomial, c: EvenRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        SuperFunction {
            chart: chart.clone(),
            terms,
        }
    }

    pub fn from_terms(
        chart: &Chart,
        terms: impl IntoIterator<Item = (OddMonomial, EvenRational)>,
    ) -> Self {
        let mut f = SuperFunction::zero(chart);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    /// The `i`-th coordinate function.
    pub fn coordinate(chart: &Chart, i: usize) -> Self {
        if chart.is_odd(i) {
            SuperFunction::term(chart, OddMonomial::var(i), EvenRational::one())
        } else {
            SuperFunction::even(chart, EvenRational::var(i))
        }
    }

    fn add_term(&mut self, m: OddMonomial, c: EvenRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OddMonomial, &EvenRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.body().constant_value().is_some_and(|c| c.is_one())
    }

    /// Coefficient of the empty odd monomial.
    pub fn body(&self) -> EvenRational {
        self.terms
            .get(&OddMonomial::one())
            .cloned()
            .unwrap_or_else(EvenRational::zero)
    }

    pub fn coefficient(&self, m: &OddMonomial) -> EvenRational {
        self.terms.get(m).cloned().unwrap_or_else(EvenRational::zero)
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            self.terms.get(&OddMonomial::one())?.constant_value()
        } else {
            None
        }
    }

    /// Parity if all terms agree; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(OddMonomial::parity);
        let first = match it.next() {
            Some(p) => p,
            None => return Some(Parity::Even),
        };
        it.all(|p| p == first).then_some(first)
    }

    pub fn parity_part(&self, p: Parity) -> SuperFunction {
        SuperFunction {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.parity() == p)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn even_part(&self) -> SuperFunction {
        self.parity_part(Parity::Even)
    }

    pub fn odd_part(&self) -> SuperFunction {
        self.parity_part(Parity::Odd)
    }

    /// The parity involution applied `p` times: negates the odd part when
    /// `p` is odd.
    pub fn twist(&self, p: Parity) -> SuperFunction {
        if p == Parity::Even {
            return self.clone();
        }
        SuperFunction {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.parity().is_odd() { c.neg() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(EvenRational::is_polynomial)
    }

    fn check_chart(&self, other: &SuperFunction) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn checked_add(&self, other: &SuperFunction) -> Result<SuperFunction> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SuperFunction) -> Result<SuperFunction> {
        self.checked_add(&other.neg_ref())
    }

    pub fn checked_mul(&self, other: &SuperFunction) -> Result<SuperFunction> {
        self.check_chart(other)?;
        let mut out = SuperFunction::zero(&self.chart);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((m, negative)) = m1.mul(m2) {
                    let c = c1.mul(c2);
                    out.add_term(m, if negative { c.neg() } else { c });
                }
            }
        }
        Ok(out)
    }

    fn neg_ref(&self) -> SuperFunction {
        SuperFunction {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> SuperFunction {
        if c.is_zero() {
            return SuperFunction::zero(&self.chart);
        }
        SuperFunction {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.scale(c))).collect(),
        }
    }

    /// Multiplication by an even function of the even coordinates.
    pub fn scale_even(&self, g: &EvenRational) -> SuperFunction {
        SuperFunction::from_terms(
            &self.chart,
            self.terms.iter().map(|(m, v)| (m.clone(), v.mul(g))),
        )
    }

    /// Multiplicative inverse, `f0^{-1} sum_k (-n f0^{-1})^k` with `n` the
    /// nilpotent part.
    pub fn invert(&self) -> Result<SuperFunction> {
        let body = self.body();
        if body.is_zero() {
            return Err(Error::NotInvertible(
                "superfunction with zero body".to_string(),
            ));
        }
        let inv0 = body.inv()?;
        let nil = SuperFunction {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| !m.is_empty())
                .map(|(m, c)| (m.clone(), c.mul(&inv0).neg()))
                .collect(),
        };
        let mut sum = SuperFunction::one(&self.chart);
        let mut power = SuperFunction::one(&self.chart);
        loop {
            power = &power * &nil;
            if power.is_zero() {
                break;
            }
            sum = &sum + &power;
        }
        Ok(sum.scale_even(&inv0))
    }

    /// Integer power; negative exponents go through [`Self::invert`].
    pub fn pow(&self, e: i64) -> Result<SuperFunction> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = SuperFunction::one(&self.chart);
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Partial derivative by coordinate `i`; the left derivative when the
    /// coordinate is odd.
    pub fn partial(&self, i: usize) -> SuperFunction {
        let mut out = SuperFunction::zero(&self.chart);
        if self.chart.is_odd(i) {
            for (m, c) in &self.terms {
                if let Some((rest, negative)) = m.left_derivative(i) {
                    out.add_term(rest, if negative { c.neg() } else { c.clone() });
                }
            }
        } else {
            for (m, c) in &self.terms {
                out.add_term(m.clone(), c.derivative(i));
            }
        }
        out
    }

    pub fn partial_by(&self, name: &str) -> Result<SuperFunction> {
        Ok(self.partial(self.chart.index_of(name)?))
    }

    /// Whether coordinate `i` occurs.
    pub fn depends_on(&self, i: usize) -> bool {
        if self.chart.is_odd(i) {
            self.terms.keys().any(|m| m.contains(i))
        } else {
            self.terms.values().any(|c| c.depends_on(i))
        }
    }

    /// Ring morphism sending coordinate `i` of this chart to `images[i]`,
    /// a superfunction on `target`.
    pub fn substitute(&self, target: &Chart, images: &[SuperFunction]) -> Result<SuperFunction> {
        if images.len() != self.chart.dim() {
            return Err(Error::Shape(format!(
                "substitution needs {} images, got {}",
                self.chart.dim(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.chart() != target {
                return Err(Error::ChartMismatch);
            }
            let expected = self.chart.parity(i);
            if img.parity().is_none_or(|p| p != expected) && !img.is_zero() {
                return Err(Error::ParityMismatch(format!(
                    "image of `{}` must be {}",
                    self.chart.name(i),
                    expected
                )));
            }
        }
        let mut sub = Substitution {
            target,
            images,
            powers: HashMap::new(),
        };
        let mut out = SuperFunction::zero(target);
        for (m, c) in &self.terms {
            let mut t = sub.rational(c)?;
            for i in m.indices() {
                t = &t * &images[i];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Moves the function to `target`, sending coordinate `i` to
    /// coordinate `map[i]` of the same parity.
    pub fn relabel(&self, target: &Chart, map: &[usize]) -> SuperFunction {
        let mut out = SuperFunction::zero(target);
        for (m, c) in &self.terms {
            let (m2, negative) = m.relabel(map);
            let c2 = c.relabel(map);
            out.add_term(m2, if negative { c2.neg() } else { c2 });
        }
        out
    }

    /// Value of the body at a point of the even coordinates (indexed by
    /// coordinate; odd entries are ignored).
    pub fn body_at(&self, point: &[Scalar]) -> Result<Scalar> {
        self.body().eval(|v| point[v].clone())
    }

    /// Value at the chart's base point: the body evaluated there.
    pub fn at_base(&self) -> Result<Scalar> {
        let base: Vec<Scalar> = self
            .chart
            .coordinates()
            .iter()
            .map(|c| c.base.clone())
            .collect();
        self.body_at(&base)
    }
}

struct Substitution<'a> {
    target: &'a Chart,
    images: &'a [SuperFunction],
    powers: HashMap<(usize, u32), SuperFunction>,
}

impl Substitution<'_> {
    fn power(&mut self, v: usize, e: u32) -> SuperFunction {
        if let Some(p) = self.powers.get(&(v, e)) {
            return p.clone();
        }
        let p = if e == 1 {
            self.images[v].clone()
        } else {
            let half = self.power(v, e / 2);
            let sq = &half * &half;
            if e % 2 == 1 {
                &sq * &self.images[v]
            } else {
                sq
            }
        };
        self.powers.insert((v, e), p.clone());
        p
    }

    fn poly(&mut self, p: &Poly) -> SuperFunction {
        let mut out = SuperFunction::zero(self.target);
        for (m, c) in p.terms() {
            let mut t = SuperFunction::constant(self.target, c.clone());
            for (v, e) in m.factors() {
                t = &t * &self.power(v, e);
            }
            out = &out + &t;
        }
        out
    }

    fn rational(&mut self, r: &EvenRational) -> Result<SuperFunction> {
        let num = self.poly(r.numerator());
        if r.is_polynomial() {
            return Ok(num);
        }
        let den = self.poly(r.denominator());
        if den.body().is_zero() {
            return Err(Error::NotInvertible(
                "denominator vanishes after substitution".to_string(),
            ));
        }
        Ok(&num * &den.invert()?)
    }
}

impl Add for &SuperFunction {
    type Output = SuperFunction;
    fn add(self, rhs: &SuperFunction) -> SuperFunction {
        self.checked_add(rhs).expect("superfunctions on different charts")
    }
}

impl Sub for &SuperFunction {
    type Output = SuperFunction;
    fn sub(self, rhs: &SuperFunction) -> SuperFunction {
        self.checked_sub(rhs).expect("superfunctions on different charts")
    }
}

impl Mul for &SuperFunction {
    type Output = SuperFunction;
    fn mul(self, rhs: &SuperFunction) -> SuperFunction {
        self.checked_mul(rhs).expect("superfunctions on different charts")
    }
}

impl Neg for &SuperFunction {
    type Output = SuperFunction;
    fn neg(self) -> SuperFunction {
        self.neg_ref()
    }
}

impl Add for SuperFunction {
    type Output = SuperFunction;
    fn add(self, rhs: SuperFunction) -> SuperFunction {
        &self + &rhs
    }
}

impl Sub for SuperFunction {
    type Output = SuperFunction;
    fn sub(self, rhs: SuperFunction) -> SuperFunction {
        &self - &rhs
    }
}

impl Mul for SuperFunction {
    type Output = SuperFunction;
    fn mul(self, rhs: SuperFunction) -> SuperFunction {
        &self * &rhs
    }
}

impl Neg for SuperFunction {
    type Output = SuperFunction;
    fn neg(self) -> SuperFunction {
        self.neg_ref()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Parity::*;
    use crate::scalar::int;

    fn chart() -> Chart {
        Chart::from_spec(&[("x", Even, 1), ("y", Even, 1), ("xi", Odd, 1), ("eta", Odd, 1)]).unwrap()
    }

    fn vars(c: &Chart) -> [SuperFunction; 4] {
        ["x", "y", "xi", "eta"].map(|n| c.coord(n).unwrap())
    }

    #[test]
    fn anticommutation_and_nilpotence() {
        let c = chart();
        let [_, _, xi, eta] = vars(&c);
        assert_eq!(&eta * &xi, -(&xi * &eta));
        assert!((&xi * &xi).is_zero());
        assert_eq!(&xi + &xi, xi.scale(&int(2)));
    }

    #[test]
    fn difference_of_squares_cancels_nilpotent() {
        let c = chart();
        let [x, _, xi, eta] = vars(&c);
        let n = &xi * &eta;
        assert_eq!(&(&x + &n) * &(&x - &n), &x * &x);
    }

    #[test]
    fn reciprocal_sum() {
        let c = chart();
        let x = c.coord("x").unwrap();
        let a = x.invert().unwrap();
        let b = x.pow(-2).unwrap();
        // oracle: (x + 1) / x^2 by cross-multiplication
        let lhs = &(&a + &b) * &(&x * &x);
        assert_eq!(lhs, &x + &SuperFunction::one(&c));
    }

    #[test]
    fn inverse_of_bodied_function() {
        let c = chart();
        let [x, _, xi, eta] = vars(&c);
        let f = &x + &(&xi * &eta);
        let inv = f.invert().unwrap();
        let expected = &x.invert().unwrap() - &(&(&xi * &eta) * &x.pow(-2).unwrap());
        assert_eq!(inv, expected);
        assert!((&f * &inv).is_one());
        assert_eq!(SuperFunction::one(&c).invert().unwrap(), SuperFunction::one(&c));
        assert!(matches!(xi.invert(), Err(Error::NotInvertible(_))));
    }

    #[test]
    fn partials() {
        let c = chart();
        let [x, y, xi, eta] = vars(&c);
        assert_eq!((&(&x * &x) * &y).partial(0), (&x * &y).scale(&int(2)));
        assert_eq!((&xi * &eta).partial(3), -xi.clone());
        assert_eq!((&xi * &eta).partial(2), eta.clone());
        assert_eq!(x.invert().unwrap().partial(0), -x.pow(-2).unwrap());
        assert!(matches!(
            xi.partial_by("zeta"),
            Err(Error::UnknownVariable(_))
        ));
    }

    #[test]
    fn substitution_examples() {
        let c = chart();
        let [x, y, xi, eta] = vars(&c);
        let f = &x * &x;
        let g = f
            .substitute(&c, &[y.invert().unwrap(), y.clone(), xi.clone(), eta.clone()])
            .unwrap();
        assert_eq!(g, y.pow(-2).unwrap());

        let swapped = (&xi * &eta)
            .substitute(&c, &[x.clone(), y.clone(), eta.clone(), xi.clone()])
            .unwrap();
        assert_eq!(swapped, -(&xi * &eta));

        let h = (&x + &xi)
            .substitute(&c, &[x.clone(), y.clone(), &x * &xi, eta.clone()])
            .unwrap();
        assert_eq!(h, &x + &(&x * &xi));

        let bad = x.substitute(&c, &[xi.clone(), y.clone(), xi.clone(), eta.clone()]);
        assert!(matches!(bad, Err(Error::ParityMismatch(_))));
    }

    #[test]
    fn rational_substitution_inverts_denominator() {
        let c = chart();
        let [x, y, xi, eta] = vars(&c);
        let f = x.invert().unwrap();
        let img = &y + &(&xi * &eta);
        let g = f.substitute(&c, &[img.clone(), y.clone(), xi.clone(), eta.clone()]).unwrap();
        assert!((&g * &img).is_one());
    }

    #[test]
    fn chart_mismatch_is_an_error() {
        let a = chart();
        let b = Chart::from_spec(&[("x", Even, 2)]).unwrap();
        let r = a.coord("x").unwrap().checked_add(&b.coord("x").unwrap());
        assert_eq!(r.unwrap_err(), Error::ChartMismatch);
    }

    #[test]
    fn odd_monomial_sign() {
        let (m, neg) = OddMonomial::from_indices(&[3, 1, 2]).unwrap();
        assert_eq!(m.indices().collect::<Vec<_>>(), vec![1, 2, 3]);
        assert!(!neg);
        assert!(OddMonomial::from_indices(&[2, 2]).is_none());
        let a = OddMonomial::from_indices(&[2, 4]).unwrap().0;
        let b = OddMonomial::from_indices(&[1, 3]).unwrap().0;
        // 2 4 1 3 -> 1 2 3 4 needs three transpositions
        assert_eq!(a.mul(&b).unwrap().1, true);
    }
}
