//! Differential forms with the Deligne sign rule.
//!
//! A coordinate `x^a` has bidegree `(p_a, 0)` and its differential
//! `dx^a` has bidegree `(p_a, 1)`; exchanging homogeneous factors of
//! bidegrees `(p, r)` and `(q, s)` costs `(-1)^(pq + rs)`. Differentials of
//! even coordinates therefore anticommute with themselves while those of odd
//! coordinates commute and may occur to any power.
//!
//! A form is stored as `sum D f` with `D` a sorted product of differentials
//! and the coefficient `f` on the right.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use crate::chart::{Chart, Degree, Parity};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::homogeneity::{weight_of, WeightAnswer};
use crate::scalar::{int, Scalar};
use crate::superfunction::SuperFunction;

/// `dx^{a1}^{m1} ... dx^{ak}^{mk}` with increasing indices; even coordinates
/// have multiplicity one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiffMonomial(Vec<(u32, u32)>);

impl DiffMonomial {
    pub fn one() -> Self {
        DiffMonomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        DiffMonomial(vec![(i as u32, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.0.iter().map(|&(_, m)| m as usize).sum()
    }

    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(i, m)| (i as usize, m))
    }

    pub fn multiplicity(&self, i: usize) -> u32 {
        self.0
            .iter()
            .find(|&&(j, _)| j as usize == i)
            .map_or(0, |&(_, m)| m)
    }

    pub fn parity(&self, chart: &Chart) -> Parity {
        Parity::from_bit(
            self.0
                .iter()
                .filter(|&&(i, _)| chart.is_odd(i as usize))
                .map(|&(_, m)| m as usize)
                .sum(),
        )
    }

    pub fn weight(&self, chart: &Chart) -> Scalar {
        self.0
            .iter()
            .map(|&(i, m)| chart.weight(i as usize) * int(m as i64))
            .fold(Scalar::zero(), |a, b| a + b)
    }

    /// `self * other` in canonical order: `None` if an even differential
    /// repeats, else the product and whether a sign was picked up.
    pub fn mul(&self, other: &DiffMonomial, chart: &Chart) -> Option<(DiffMonomial, bool)> {
        let mut negative = false;
        let mut out: BTreeMap<u32, u32> = self.0.iter().copied().collect();
        for &(g, mg) in &other.0 {
            if let Some(&mh) = out.get(&g) {
                if !chart.is_odd(g as usize) {
                    return None;
                }
                out.insert(g, mh + mg);
            } else {
                out.insert(g, mg);
            }
            // dx^g passes every factor of `self` with a larger index
            let sg = chart.parity(g as usize);
            for &(h, mh) in self.0.iter().filter(|&&(h, _)| h > g) {
                let per_swap = !sg.exchange_sign(chart.parity(h as usize));
                if per_swap && (mg * mh) % 2 == 1 {
                    negative = !negative;
                }
            }
        }
        Some((DiffMonomial(out.into_iter().collect()), negative))
    }

    /// `d/d(dx^a)` from the left: the reduced monomial and the scalar
    /// factor, including the sign from the generators in front.
    pub fn contract(&self, a: usize, chart: &Chart) -> Option<(DiffMonomial, Scalar)> {
        let pos = self.0.iter().position(|&(i, _)| i as usize == a)?;
        let ma = self.0[pos].1;
        let sa = chart.parity(a);
        let mut negative = false;
        for &(h, mh) in &self.0[..pos] {
            let per_swap = !sa.exchange_sign(chart.parity(h as usize));
            if per_swap && mh % 2 == 1 {
                negative = !negative;
            }
        }
        let mut rest = self.0.clone();
        if ma == 1 {
            rest.remove(pos);
        } else {
            rest[pos].1 -= 1;
        }
        let c = int(ma as i64);
        Some((DiffMonomial(rest), if negative { -c } else { c }))
    }
}

impl Ord for DiffMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.rank()
            .cmp(&other.rank())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for DiffMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperForm {
    chart: Chart,
    terms: BTreeMap<DiffMonomial, SuperFunction>,
}

impl SuperForm {
    pub fn zero(chart: &Chart) -> Self {
        SuperForm {
            chart: chart.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A function viewed as a 0-form.
    pub fn function(f: &SuperFunction) -> Self {
        SuperForm::term(DiffMonomial::one(), f.clone())
    }

    /// `dx^i`.
    pub fn differential(chart: &Chart, i: usize) -> Self {
        SuperForm::term(DiffMonomial::generator(i), SuperFunction::one(chart))
    }

    pub fn differential_by(chart: &Chart, name: &str) -> Result<Self> {
        Ok(SuperForm::differential(chart, chart.index_of(name)?))
    }

    /// `D f`.
    pub fn term(d: DiffMonomial, f: SuperFunction) -> Self {
        let mut out = SuperForm::zero(f.chart());
        out.add_term(d, f);
        out
    }

    fn add_term(&mut self, d: DiffMonomial, f: SuperFunction) {
        if f.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(f);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get() + &f;
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&DiffMonomial, &SuperFunction)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, d: &DiffMonomial) -> SuperFunction {
        self.terms
            .get(d)
            .cloned()
            .unwrap_or_else(|| SuperFunction::zero(&self.chart))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Form rank if all terms agree; zero has every rank and reports 0.
    pub fn rank(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(DiffMonomial::rank);
        let first = it.next().unwrap_or(0);
        it.all(|r| r == first).then_some(first)
    }

    pub fn max_rank(&self) -> usize {
        self.terms.keys().map(DiffMonomial::rank).max().unwrap_or(0)
    }

    pub fn rank_part(&self, r: usize) -> SuperForm {
        SuperForm {
            chart: self.chart.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.rank() == r)
                .map(|(d, f)| (d.clone(), f.clone()))
                .collect(),
        }
    }

    /// The 0-form part as a function.
    pub fn function_part(&self) -> SuperFunction {
        self.coefficient(&DiffMonomial::one())
    }

    /// Total parity if homogeneous; zero counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut found = None;
        for (d, f) in &self.terms {
            let p = f.parity()? + d.parity(&self.chart);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn parity_part(&self, p: Parity) -> SuperForm {
        let mut out = SuperForm::zero(&self.chart);
        for (d, f) in &self.terms {
            out.add_term(d.clone(), f.parity_part(p + d.parity(&self.chart)));
        }
        out
    }

    fn check_chart(&self, other: &SuperForm) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn checked_add(&self, other: &SuperForm) -> Result<SuperForm> {
        self.check_chart(other)?;
        let mut out = self.clone();
        for (d, f) in &other.terms {
            out.add_term(d.clone(), f.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> SuperForm {
        let mut out = SuperForm::zero(&self.chart);
        for (d, f) in &self.terms {
            out.add_term(d.clone(), f.scale(c));
        }
        out
    }

    /// `self * f` with `f` a function multiplied on the right.
    pub fn mul_right(&self, f: &SuperFunction) -> Result<SuperForm> {
        let mut out = SuperForm::zero(&self.chart);
        for (d, g) in &self.terms {
            out.add_term(d.clone(), g.checked_mul(f)?);
        }
        Ok(out)
    }

    /// `f * self` with `f` a function multiplied on the left.
    pub fn mul_left(&self, f: &SuperFunction) -> Result<SuperForm> {
        SuperForm::function(f).wedge(self)
    }

    pub fn wedge(&self, other: &SuperForm) -> Result<SuperForm> {
        self.check_chart(other)?;
        let mut out = SuperForm::zero(&self.chart);
        for (d1, f1) in &self.terms {
            for (d2, f2) in &other.terms {
                let Some((d, negative)) = d1.mul(d2, &self.chart) else {
                    continue;
                };
                let f = &f1.twist(d2.parity(&self.chart)) * f2;
                out.add_term(d, if negative { -f } else { f });
            }
        }
        Ok(out)
    }

    /// Exterior derivative `d = sum dx^a d/dx^a`, acting from the left.
    pub fn d(&self) -> SuperForm {
        let mut out = SuperForm::zero(&self.chart);
        for (dm, f) in &self.terms {
            let outer_negative = dm.rank() % 2 == 1;
            for a in 0..self.chart.dim() {
                let g = f.partial(a);
                if g.is_zero() {
                    continue;
                }
                let Some((d, negative)) = dm.mul(&DiffMonomial::generator(a), &self.chart) else {
                    continue;
                };
                out.add_term(d, if negative != outer_negative { -g } else { g });
            }
        }
        out
    }

    pub fn is_closed(&self) -> bool {
        self.d().is_zero()
    }

    /// Interior product `i_X = sum X^a d/d(dx^a)`.
    pub fn interior(&self, x: &VectorField) -> Result<SuperForm> {
        if x.chart() != &self.chart {
            return Err(Error::ChartMismatch);
        }
        let mut out = SuperForm::zero(&self.chart);
        for (dm, f) in &self.terms {
            for (a, xa) in x.coefficients().iter().enumerate() {
                if xa.is_zero() {
                    continue;
                }
                let Some((rest, c)) = dm.contract(a, &self.chart) else {
                    continue;
                };
                let g = &xa.twist(rest.parity(&self.chart)) * f;
                out.add_term(rest, g.scale(&c));
            }
        }
        Ok(out)
    }

    /// `L_X = d i_X + i_X d`.
    pub fn lie(&self, x: &VectorField) -> Result<SuperForm> {
        let a = self.interior(x)?.d();
        let b = self.d().interior(x)?;
        a.checked_add(&b)
    }

    /// Moves the form along a ring morphism given by the pullback of every
    /// coordinate; differentials are pulled back through `d`.
    pub fn substitute(&self, target: &Chart, images: &[SuperFunction]) -> Result<SuperForm> {
        let diffs: Vec<SuperForm> = images.iter().map(|f| SuperForm::function(f).d()).collect();
        let mut out = SuperForm::zero(target);
        for (dm, f) in &self.terms {
            let mut t = SuperForm::function(&SuperFunction::one(target));
            for (a, m) in dm.factors() {
                for _ in 0..m {
                    t = t.wedge(&diffs[a])?;
                }
            }
            let g = f.substitute(target, images)?;
            out = out.checked_add(&t.mul_right(&g)?)?;
        }
        Ok(out)
    }

    /// Moves the form into a chart containing this one's coordinates at the
    /// positions given by `map` (which must keep their relative order).
    pub fn relabel(&self, target: &Chart, map: &[usize]) -> SuperForm {
        let mut out = SuperForm::zero(target);
        for (dm, f) in &self.terms {
            let d = DiffMonomial(
                dm.0.iter()
                    .map(|&(i, m)| (map[i as usize] as u32, m))
                    .collect(),
            );
            debug_assert!(d.0.windows(2).all(|w| w[0].0 < w[1].0));
            out.add_term(d, f.relabel(target, map));
        }
        out
    }

    /// Whether every coefficient vanishes at the chart's base point.
    pub fn vanishes_at_base(&self) -> Result<bool> {
        for f in self.terms.values() {
            if !f.at_base()?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.values().all(SuperFunction::is_polynomial)
    }
}

/// Degree `(parity, weight)` of a form, from its monomials.
pub fn form_weight(w: &SuperForm) -> WeightAnswer {
    let chart = w.chart();
    let mut found: Option<Degree> = None;
    for (d, f) in w.terms() {
        let WeightAnswer::Degree(fd) = weight_of(f) else {
            return WeightAnswer::NonHomogeneous;
        };
        let deg = Degree::new(fd.parity + d.parity(chart), fd.weight + d.weight(chart));
        match &found {
            None => found = Some(deg),
            Some(e) if *e != deg => return WeightAnswer::NonHomogeneous,
            _ => {}
        }
    }
    match found {
        Some(d) => WeightAnswer::Degree(d),
        None => WeightAnswer::AnyWeight,
    }
}

impl Add for &SuperForm {
    type Output = SuperForm;
    fn add(self, rhs: &SuperForm) -> SuperForm {
        self.checked_add(rhs).expect("forms on different charts")
    }
}

impl Sub for &SuperForm {
    type Output = SuperForm;
    fn sub(self, rhs: &SuperForm) -> SuperForm {
        self.checked_add(&-rhs).expect("forms on different charts")
    }
}

impl Neg for &SuperForm {
    type Output = SuperForm;
    fn neg(self) -> SuperForm {
        SuperForm {
            chart: self.chart.clone(),
            terms: self.terms.iter().map(|(d, f)| (d.clone(), -f)).collect(),
        }
    }
}

impl Add for SuperForm {
    type Output = SuperForm;
    fn add(self, rhs: SuperForm) -> SuperForm {
        &self + &rhs
    }
}

impl Sub for SuperForm {
    type Output = SuperForm;
    fn sub(self, rhs: SuperForm) -> SuperForm {
        &self - &rhs
    }
}

impl Neg for SuperForm {
    type Output = SuperForm;
    fn neg(self) -> SuperForm {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Parity::*;

    fn chart() -> Chart {
        Chart::from_spec(&[("x", Even, 1), ("y", Even, 2), ("xi", Odd, 1), ("eta", Odd, 0)]).unwrap()
    }

    fn f(c: &Chart, n: &str) -> SuperFunction {
        c.coord(n).unwrap()
    }

    fn dd(c: &Chart, n: &str) -> SuperForm {
        SuperForm::differential_by(c, n).unwrap()
    }

    #[test]
    fn wedge_signs() {
        let c = chart();
        assert!(dd(&c, "x").wedge(&dd(&c, "x")).unwrap().is_zero());
        let dxi2 = dd(&c, "xi").wedge(&dd(&c, "xi")).unwrap();
        assert!(!dxi2.is_zero());
        assert_eq!(dxi2.rank(), Some(2));
        let a = dd(&c, "x").wedge(&dd(&c, "y")).unwrap();
        let b = dd(&c, "y").wedge(&dd(&c, "x")).unwrap();
        assert_eq!(a, -b);
        // dx and dxi: bidegrees (0,1), (1,1) exchange with -1
        let a = dd(&c, "x").wedge(&dd(&c, "xi")).unwrap();
        let b = dd(&c, "xi").wedge(&dd(&c, "x")).unwrap();
        assert_eq!(a, -b);
        // xi and dxi: (1,0), (1,1) exchange with -1
        let xi = SuperForm::function(&f(&c, "xi"));
        assert_eq!(xi.wedge(&dd(&c, "xi")).unwrap(), -dd(&c, "xi").wedge(&xi).unwrap());
        // dxi and deta commute
        let a = dd(&c, "xi").wedge(&dd(&c, "eta")).unwrap();
        let b = dd(&c, "eta").wedge(&dd(&c, "xi")).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn exterior_derivative_examples() {
        let c = chart();
        let x = f(&c, "x");
        let x2 = SuperForm::function(&(&x * &x));
        assert_eq!(x2.d(), dd(&c, "x").mul_right(&x.scale(&int(2))).unwrap());

        let xi = f(&c, "xi");
        let eta = f(&c, "eta");
        let d = SuperForm::function(&(&xi * &eta)).d();
        let expected = &dd(&c, "xi").mul_right(&eta).unwrap() - &dd(&c, "eta").mul_right(&xi).unwrap();
        assert_eq!(d, expected);

        let g = SuperForm::function(&(&(&x * &x) * &xi));
        assert!(g.d().d().is_zero());
    }

    #[test]
    fn interior_examples() {
        let c = chart();
        let x = f(&c, "x");
        let y = f(&c, "y");
        let dx = dd(&c, "x");
        let dy = dd(&c, "y");
        assert_eq!(
            dx.interior(&VectorField::partial(&c, 0)).unwrap(),
            SuperForm::function(&SuperFunction::one(&c))
        );
        let euler = &VectorField::monomial(&x, 0) + &VectorField::monomial(&y, 1);
        let got = dx.wedge(&dy).unwrap().interior(&euler).unwrap();
        let expected = &SuperForm::function(&x).wedge(&dy).unwrap() - &dx.mul_right(&y).unwrap();
        assert_eq!(got, expected);
        assert!(SuperForm::function(&x).interior(&euler).unwrap().is_zero());
    }

    #[test]
    fn lie_derivative_of_differentials() {
        let c = chart();
        let nabla = c.weight_vector_field();
        for i in 0..c.dim() {
            let dxi = SuperForm::differential(&c, i);
            assert_eq!(dxi.lie(&nabla).unwrap(), dxi.scale(&c.weight(i)));
        }
        let x = f(&c, "x");
        let g = SuperForm::function(&(&x * &f(&c, "xi")));
        let x_field = VectorField::monomial(&x, 0);
        assert_eq!(
            g.lie(&x_field).unwrap(),
            SuperForm::function(&x_field.apply(&g.function_part()).unwrap())
        );
    }

    #[test]
    fn closedness() {
        let c = chart();
        let x = f(&c, "x");
        let y = f(&c, "y");
        let dxdy = dd(&c, "x").wedge(&dd(&c, "y")).unwrap();
        assert!(dxdy.is_closed());
        assert!(SuperForm::function(&x).wedge(&dxdy).unwrap().is_closed());
        assert!(!SuperForm::function(&y).wedge(&dd(&c, "x")).unwrap().is_closed());
    }

    #[test]
    fn weights_of_forms() {
        let c = chart();
        let x = f(&c, "x");
        let y = f(&c, "y");
        let k = &SuperForm::function(&x).wedge(&dd(&c, "y")).unwrap()
            + &SuperForm::function(&y).wedge(&dd(&c, "x")).unwrap();
        assert_eq!(form_weight(&k), WeightAnswer::Degree(Degree::even(int(3))));
    }
}
