//! Tangent and cotangent lifts, tensor weights and homogeneous
//! distributions.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::chart::{Chart, Coordinate, Degree, Parity};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::form::SuperForm;
use crate::homogeneity::{weight_of, WeightAnswer};
use crate::linalg::Matrix;
use crate::poly::{Monomial, Poly};
use crate::rational::EvenRational;
use crate::scalar::Scalar;
use crate::superfunction::{OddMonomial, SuperFunction};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftKind {
    Tangent,
    Cotangent,
}

/// Adapted coordinates `(x^a, xdot^a)` on `T[shift]M` or `(x^a, p_a)` on
/// `T*[shift]M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedChart {
    pub base: Chart,
    pub chart: Chart,
    pub kind: LiftKind,
    pub shift: Degree,
}

impl LiftedChart {
    /// Fiber coordinates `{name}dot` of degree `deg(x^a) + shift`.
    pub fn tangent(base: &Chart, shift: &Degree) -> Result<Self> {
        let mut coords = base.coordinates().to_vec();
        for c in base.coordinates() {
            let d = &c.degree() + shift;
            coords.push(Coordinate::new(format!("{}dot", c.name), d.parity, d.weight));
        }
        Ok(LiftedChart {
            base: base.clone(),
            chart: Chart::new(coords)?,
            kind: LiftKind::Tangent,
            shift: shift.clone(),
        })
    }

    /// Fiber coordinates `p_{name}` of degree `shift - deg(x^a)`.
    pub fn cotangent(base: &Chart, shift: &Degree) -> Result<Self> {
        let mut coords = base.coordinates().to_vec();
        for c in base.coordinates() {
            let d = shift - &c.degree();
            coords.push(Coordinate::new(format!("p_{}", c.name), d.parity, d.weight));
        }
        Ok(LiftedChart {
            base: base.clone(),
            chart: Chart::new(coords)?,
            kind: LiftKind::Cotangent,
            shift: shift.clone(),
        })
    }

    pub fn base_dim(&self) -> usize {
        self.base.dim()
    }

    pub fn fiber_index(&self, a: usize) -> usize {
        self.base.dim() + a
    }

    pub fn fiber(&self, a: usize) -> SuperFunction {
        SuperFunction::coordinate(&self.chart, self.fiber_index(a))
    }

    /// A function on the base viewed on the total space.
    pub fn lift_function(&self, f: &SuperFunction) -> Result<SuperFunction> {
        if f.chart() != &self.base {
            return Err(Error::ChartMismatch);
        }
        let ids: Vec<usize> = (0..self.base.dim()).collect();
        Ok(f.relabel(&self.chart, &ids))
    }

    pub fn lift_form(&self, w: &SuperForm) -> Result<SuperForm> {
        if w.chart() != &self.base {
            return Err(Error::ChartMismatch);
        }
        let ids: Vec<usize> = (0..self.base.dim()).collect();
        Ok(w.relabel(&self.chart, &ids))
    }

    /// The fiber-linear function `sum g_a xdot^a` of a 1-form written
    /// `sum g_a dx^a` with coefficients on the left.
    pub fn iota_form(&self, alpha: &SuperForm) -> Result<SuperFunction> {
        if self.kind != LiftKind::Tangent {
            return Err(Error::InvalidArgument("1-forms pair with tangent fibers".into()));
        }
        if alpha.chart() != &self.base {
            return Err(Error::ChartMismatch);
        }
        if alpha.max_rank() > 1 || !alpha.rank_part(0).is_zero() {
            return Err(Error::InvalidArgument("expected a 1-form".into()));
        }
        let mut out = SuperFunction::zero(&self.chart);
        for (d, g) in alpha.terms() {
            let (a, _) = d.factors().next().expect("rank one");
            let left = g.twist(self.base.parity(a));
            out = &out + &(&self.lift_function(&left)? * &self.fiber(a));
        }
        Ok(out)
    }

    /// The fiber-linear function `sum X^a p_a` of a vector field.
    pub fn iota_field(&self, x: &VectorField) -> Result<SuperFunction> {
        if self.kind != LiftKind::Cotangent {
            return Err(Error::InvalidArgument("vector fields pair with cotangent fibers".into()));
        }
        if x.chart() != &self.base {
            return Err(Error::ChartMismatch);
        }
        let mut out = SuperFunction::zero(&self.chart);
        for (a, xa) in x.coefficients().iter().enumerate() {
            if !xa.is_zero() {
                out = &out + &(&self.lift_function(xa)? * &self.fiber(a));
            }
        }
        Ok(out)
    }

    /// The base weight field lifted: `sum w_a (x^a d_x^a +- y_a d_y_a)`.
    pub fn lifted_weight_field(&self) -> Result<VectorField> {
        let nabla = self.base.weight_vector_field();
        match self.kind {
            LiftKind::Tangent => tangent_lift(self, &nabla),
            LiftKind::Cotangent => cotangent_lift(self, &nabla),
        }
    }
}

/// `dT Y = sum_a (Y^a d_{x^a} + e (sum_b xdot^b d_b Y^a) d_{xdot^a})` where
/// `e = -1` only for odd `Y` on an odd shift, so that the lift stays a
/// bracket morphism when the fiber parities flip.
pub fn tangent_lift(lc: &LiftedChart, y: &VectorField) -> Result<VectorField> {
    if lc.kind != LiftKind::Tangent {
        return Err(Error::InvalidArgument("tangent lift needs a tangent chart".into()));
    }
    if y.chart() != &lc.base {
        return Err(Error::ChartMismatch);
    }
    let n = lc.base_dim();
    let mut coeffs = vec![SuperFunction::zero(&lc.chart); 2 * n];
    for a in 0..n {
        coeffs[a] = lc.lift_function(y.coefficient(a))?;
    }
    for s in [Parity::Even, Parity::Odd] {
        let part = y.parity_part(s);
        if part.is_zero() {
            continue;
        }
        let negative = s.exchange_sign(lc.shift.parity);
        for a in 0..n {
            let ya = part.coefficient(a);
            let mut f = SuperFunction::zero(&lc.chart);
            for b in 0..n {
                let d = ya.partial(b);
                if !d.is_zero() {
                    f = &f + &(&lc.fiber(b) * &lc.lift_function(&d)?);
                }
            }
            coeffs[n + a] = if negative {
                &coeffs[n + a] - &f
            } else {
                &coeffs[n + a] + &f
            };
        }
    }
    VectorField::new(&lc.chart, coeffs)
}

/// `dT* Y = sum_a (Y^a d_{x^a} - (-1)^{s s_a} (sum_b d_a(Y^b) p_b) d_{p_a})`
/// for `Y` of parity `s`; mixed parities are lifted part by part.
pub fn cotangent_lift(lc: &LiftedChart, y: &VectorField) -> Result<VectorField> {
    if lc.kind != LiftKind::Cotangent {
        return Err(Error::InvalidArgument("cotangent lift needs a cotangent chart".into()));
    }
    if y.chart() != &lc.base {
        return Err(Error::ChartMismatch);
    }
    let n = lc.base_dim();
    let mut coeffs = vec![SuperFunction::zero(&lc.chart); 2 * n];
    for a in 0..n {
        coeffs[a] = lc.lift_function(y.coefficient(a))?;
    }
    for s in [Parity::Even, Parity::Odd] {
        let part = y.parity_part(s);
        if part.is_zero() {
            continue;
        }
        for a in 0..n {
            let mut g = SuperFunction::zero(&lc.chart);
            for b in 0..n {
                let d = part.coefficient(b).partial(a);
                if !d.is_zero() {
                    g = &g + &(&lc.lift_function(&d)? * &lc.fiber(b));
                }
            }
            let positive = s.exchange_sign(lc.base.parity(a));
            coeffs[n + a] = if positive {
                &coeffs[n + a] + &g
            } else {
                &coeffs[n + a] - &g
            };
        }
    }
    VectorField::new(&lc.chart, coeffs)
}

/// A form or a vector field.
#[derive(Clone, Copy, Debug)]
pub enum Tensor<'a> {
    Form(&'a SuperForm),
    Field(&'a VectorField),
}

/// Degree `w` with `L_nabla K = w K`, computed with the chart's own weight
/// field.
pub fn tensor_weight(k: Tensor<'_>) -> WeightAnswer {
    match k {
        Tensor::Form(w) => {
            if w.is_zero() {
                return WeightAnswer::AnyWeight;
            }
            let Some(parity) = w.parity() else {
                return WeightAnswer::NonHomogeneous;
            };
            let l = w.lie(&w.chart().weight_vector_field()).expect("same chart");
            let (d, f) = w.terms().next().expect("nonzero");
            match ratio(&l.coefficient(d), f) {
                Some(c) if l == w.scale(&c) => WeightAnswer::Degree(Degree::new(parity, c)),
                _ => WeightAnswer::NonHomogeneous,
            }
        }
        Tensor::Field(x) => {
            if x.is_zero() {
                return WeightAnswer::AnyWeight;
            }
            let Some(parity) = x.parity() else {
                return WeightAnswer::NonHomogeneous;
            };
            let b = x.chart().weight_vector_field().bracket(x).expect("same chart");
            let a = x.coefficients().iter().position(|c| !c.is_zero()).unwrap();
            match ratio(b.coefficient(a), x.coefficient(a)) {
                Some(c) if b == x.scale(&c) => WeightAnswer::Degree(Degree::new(parity, c)),
                _ => WeightAnswer::NonHomogeneous,
            }
        }
    }
}

/// The constant `c` with `num = c den` on the leading term, if any.
fn ratio(num: &SuperFunction, den: &SuperFunction) -> Option<Scalar> {
    let (m, d) = den.terms().next()?;
    num.coefficient(m).div(d).ok()?.constant_value()
}

/// Outcome of the bounded search for a homogeneous frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistVerdict {
    /// `[nabla, X_i] = sum_j f[i][j] X_j` for the witnesses `f`.
    Proven(Vec<Vec<SuperFunction>>),
    /// No witnesses within the ansatz degree; not a disproof.
    Inconclusive,
}

/// All monomials in the chart's coordinates of total degree at most `n`,
/// odd coordinates at most once each.
fn ansatz_monomials(chart: &Chart, n: usize) -> Vec<SuperFunction> {
    let mut out: Vec<(Vec<u32>, Vec<usize>, usize)> = vec![(vec![0; chart.dim()], vec![], 0)];
    let mut frontier = out.clone();
    for _ in 0..n {
        let mut next = Vec::new();
        for (exps, odd, deg) in &frontier {
            let start = odd.last().copied().unwrap_or(0).max(
                exps.iter().rposition(|&e| e > 0).unwrap_or(0),
            );
            for i in start..chart.dim() {
                if chart.is_odd(i) && (exps[i] > 0 || odd.contains(&i)) {
                    continue;
                }
                let mut e = exps.clone();
                e[i] += 1;
                let mut o = odd.clone();
                if chart.is_odd(i) {
                    o.push(i);
                }
                next.push((e, o, deg + 1));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.into_iter()
        .map(|(exps, odd, _)| {
            let even = Monomial::from_pairs(
                exps.iter()
                    .enumerate()
                    .filter(|&(i, _)| !chart.is_odd(i))
                    .map(|(i, &e)| (i, e)),
            );
            let (m, _) = OddMonomial::from_indices(&odd).expect("distinct");
            SuperFunction::term(chart, m, EvenRational::poly(Poly::term(even, Scalar::from_integer(1.into()))))
        })
        .collect()
}

type Key = (usize, OddMonomial, Monomial);

fn expand(x: &VectorField) -> BTreeMap<Key, Scalar> {
    let mut out = BTreeMap::new();
    for (a, c) in x.coefficients().iter().enumerate() {
        for (m, r) in c.terms() {
            for (em, s) in r.numerator().terms() {
                out.insert((a, m.clone(), em.clone()), s.clone());
            }
        }
    }
    out
}

/// Searches for polynomial `f_i^j` of total degree at most `ansatz_degree`
/// with `[nabla, X_i] = sum_j f_i^j X_j`.
pub fn distribution_is_homogeneous(gens: &[VectorField], ansatz_degree: usize) -> Result<DistVerdict> {
    let Some(first) = gens.first() else {
        return Ok(DistVerdict::Proven(Vec::new()));
    };
    let chart = first.chart().clone();
    for g in gens {
        if g.chart() != &chart {
            return Err(Error::ChartMismatch);
        }
        if !g.is_polynomial() {
            return Err(Error::Unsupported(
                "generators with rational-function coefficients".into(),
            ));
        }
    }
    let nabla = chart.weight_vector_field();
    let basis = ansatz_monomials(&chart, ansatz_degree);
    // column (j, m) holds the expansion of m X_j
    let mut columns: Vec<BTreeMap<Key, Scalar>> = Vec::new();
    for g in gens {
        for m in &basis {
            columns.push(expand(&g.mul_left(m)?));
        }
    }
    let mut witnesses = Vec::with_capacity(gens.len());
    for g in gens {
        let target = expand(&nabla.bracket(g)?);
        let mut keys: Vec<&Key> = target.keys().collect();
        for c in &columns {
            keys.extend(c.keys());
        }
        keys.sort();
        keys.dedup();
        let row_of: BTreeMap<&Key, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        let mut a = Matrix::zeros(keys.len(), columns.len());
        for (j, c) in columns.iter().enumerate() {
            for (k, v) in c {
                a[(row_of[k], j)] = v.clone();
            }
        }
        let mut b = vec![Scalar::zero(); keys.len()];
        for (k, v) in &target {
            b[row_of[k]] = v.clone();
        }
        let Some(sol) = a.solve(&b) else {
            return Ok(DistVerdict::Inconclusive);
        };
        let mut row = Vec::with_capacity(gens.len());
        for j in 0..gens.len() {
            let mut f = SuperFunction::zero(&chart);
            for (k, m) in basis.iter().enumerate() {
                let c = &sol[j * basis.len() + k];
                if !c.is_zero() {
                    f = &f + &m.scale(c);
                }
            }
            row.push(f);
        }
        witnesses.push(row);
    }
    if !verify_witnesses(gens, &witnesses)? {
        return Ok(DistVerdict::Inconclusive);
    }
    Ok(DistVerdict::Proven(witnesses))
}

/// Checks `[nabla, X_i] - sum_j f[i][j] X_j = 0` exactly.
pub fn verify_witnesses(gens: &[VectorField], f: &[Vec<SuperFunction>]) -> Result<bool> {
    let Some(first) = gens.first() else {
        return Ok(true);
    };
    let nabla = first.chart().weight_vector_field();
    for (i, g) in gens.iter().enumerate() {
        let mut rhs = VectorField::zero(g.chart());
        for (j, x) in gens.iter().enumerate() {
            rhs = rhs.checked_add(&x.mul_left(&f[i][j])?)?;
        }
        if nabla.bracket(g)? != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Degree of `iota_X` for a field of degree `d` on the shifted cotangent
/// chart: homogeneous of degree `d + shift`.
pub fn iota_degree(lc: &LiftedChart, x: &VectorField) -> Result<WeightAnswer> {
    Ok(weight_of(&lc.iota_field(x)?))
}
