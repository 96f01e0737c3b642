//! Homogeneity queries and coordinate changes.

use std::fmt;

use crate::chart::{Chart, Degree, Parity};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::scalar::Scalar;
use crate::superfunction::SuperFunction;

/// Outcome of a homogeneity query.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightAnswer {
    Degree(Degree),
    /// The zero object, homogeneous of every degree.
    AnyWeight,
    NonHomogeneous,
}

impl WeightAnswer {
    pub fn degree(&self) -> Option<&Degree> {
        match self {
            WeightAnswer::Degree(d) => Some(d),
            _ => None,
        }
    }

    /// Whether the answer is compatible with degree `d`.
    pub fn admits(&self, d: &Degree) -> bool {
        match self {
            WeightAnswer::Degree(e) => e == d,
            WeightAnswer::AnyWeight => true,
            WeightAnswer::NonHomogeneous => false,
        }
    }
}

impl fmt::Display for WeightAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightAnswer::Degree(d) => write!(f, "{d}"),
            WeightAnswer::AnyWeight => f.write_str("any (zero)"),
            WeightAnswer::NonHomogeneous => f.write_str("non-homogeneous"),
        }
    }
}

/// Degree of `f` read off its monomials: every term must have the same
/// parity and the same weight (numerator weight minus denominator weight).
pub fn weight_of(f: &SuperFunction) -> WeightAnswer {
    let chart = f.chart();
    let mut found: Option<Degree> = None;
    for (m, c) in f.terms() {
        let Some(even_w) = c.homogeneous_weight(|v| chart.weight(v)) else {
            return WeightAnswer::NonHomogeneous;
        };
        let w = m.indices().fold(even_w, |acc, i| acc + chart.weight(i));
        let d = Degree::new(m.parity(), w);
        match &found {
            None => found = Some(d),
            Some(e) if *e != d => return WeightAnswer::NonHomogeneous,
            _ => {}
        }
    }
    match found {
        Some(d) => WeightAnswer::Degree(d),
        None => WeightAnswer::AnyWeight,
    }
}

/// Checks `nabla(f) = w f` and the parity of `f` directly.
pub fn check_weight_field_identity(f: &SuperFunction, degree: &Degree) -> bool {
    let nabla = VectorField::weight_field(f.chart());
    let lhs = nabla.apply(f).expect("same chart");
    if lhs != f.scale(&degree.weight) {
        return false;
    }
    f.is_zero() || f.parity() == Some(degree.parity)
}

/// Degree of a vector field `X` with `[nabla, X] = w X`.
pub fn field_weight(x: &VectorField) -> WeightAnswer {
    let chart = x.chart();
    let Some(parity) = x.parity() else {
        return WeightAnswer::NonHomogeneous;
    };
    let mut found: Option<Scalar> = None;
    for (i, c) in x.coefficients().iter().enumerate() {
        match weight_of(c) {
            WeightAnswer::AnyWeight => {}
            WeightAnswer::NonHomogeneous => return WeightAnswer::NonHomogeneous,
            WeightAnswer::Degree(d) => {
                let w = d.weight - chart.weight(i);
                match &found {
                    None => found = Some(w),
                    Some(v) if *v != w => return WeightAnswer::NonHomogeneous,
                    _ => {}
                }
            }
        }
    }
    match found {
        Some(w) => WeightAnswer::Degree(Degree::new(parity, w)),
        None => WeightAnswer::AnyWeight,
    }
}

/// An invertible change of coordinates between two charts: `forward[k]` is
/// target coordinate `k` as a function on the source chart and
/// `inverse[i]` is source coordinate `i` as a function on the target.
#[derive(Clone, Debug)]
pub struct CoordinateMap {
    pub source: Chart,
    pub target: Chart,
    pub forward: Vec<SuperFunction>,
    pub inverse: Vec<SuperFunction>,
}

impl CoordinateMap {
    pub fn new(
        source: &Chart,
        target: &Chart,
        forward: Vec<SuperFunction>,
        inverse: Vec<SuperFunction>,
    ) -> Result<Self> {
        if forward.len() != target.dim() || inverse.len() != source.dim() {
            return Err(Error::Shape("coordinate map arity".into()));
        }
        for (k, f) in forward.iter().enumerate() {
            if f.chart() != source {
                return Err(Error::ChartMismatch);
            }
            if !f.is_zero() && f.parity() != Some(target.parity(k)) {
                return Err(Error::ParityMismatch(format!(
                    "image of `{}` must be {}",
                    target.name(k),
                    target.parity(k)
                )));
            }
        }
        for (i, g) in inverse.iter().enumerate() {
            if g.chart() != target {
                return Err(Error::ChartMismatch);
            }
            if !g.is_zero() && g.parity() != Some(source.parity(i)) {
                return Err(Error::ParityMismatch(format!(
                    "inverse image of `{}` must be {}",
                    source.name(i),
                    source.parity(i)
                )));
            }
        }
        Ok(CoordinateMap {
            source: source.clone(),
            target: target.clone(),
            forward,
            inverse,
        })
    }

    pub fn identity(chart: &Chart) -> Self {
        let ids: Vec<SuperFunction> = (0..chart.dim())
            .map(|i| SuperFunction::coordinate(chart, i))
            .collect();
        CoordinateMap {
            source: chart.clone(),
            target: chart.clone(),
            forward: ids.clone(),
            inverse: ids,
        }
    }

    /// Checks that `forward` and `inverse` compose to the identity both ways.
    pub fn check_inverse(&self) -> Result<bool> {
        for (k, f) in self.forward.iter().enumerate() {
            let back = f.substitute(&self.target, &self.inverse)?;
            if back != SuperFunction::coordinate(&self.target, k) {
                return Ok(false);
            }
        }
        for (i, g) in self.inverse.iter().enumerate() {
            let back = g.substitute(&self.source, &self.forward)?;
            if back != SuperFunction::coordinate(&self.source, i) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `other` after `self`.
    pub fn then(&self, other: &CoordinateMap) -> Result<CoordinateMap> {
        if other.source != self.target {
            return Err(Error::ChartMismatch);
        }
        let forward = other
            .forward
            .iter()
            .map(|f| f.substitute(&self.source, &self.forward))
            .collect::<Result<Vec<_>>>()?;
        let inverse = self
            .inverse
            .iter()
            .map(|g| g.substitute(&other.target, &other.inverse))
            .collect::<Result<Vec<_>>>()?;
        CoordinateMap::new(&self.source, &other.target, forward, inverse)
    }

    /// Pulls a target function back to the source chart.
    pub fn pullback(&self, f: &SuperFunction) -> Result<SuperFunction> {
        f.substitute(&self.source, &self.forward)
    }

    /// Whether the map sends the source weight field to the target one.
    pub fn preserves_weights(&self) -> Result<bool> {
        let image = pushforward(self, &self.source.weight_vector_field())?;
        Ok(image == self.target.weight_vector_field())
    }
}

/// Image of a vector field under a coordinate change: the `k`-th coefficient
/// is `X(forward[k])` rewritten in target coordinates.
pub fn pushforward(map: &CoordinateMap, x: &VectorField) -> Result<VectorField> {
    if x.chart() != &map.source {
        return Err(Error::ChartMismatch);
    }
    let coeffs = map
        .forward
        .iter()
        .map(|f| x.apply(f)?.substitute(&map.target, &map.inverse))
        .collect::<Result<Vec<_>>>()?;
    VectorField::new(&map.target, coeffs)
}

/// `f^v` for an even function with positive body, integer `v`.
pub fn power(f: &SuperFunction, v: i64) -> Result<SuperFunction> {
    if f.parity() != Some(Parity::Even) {
        return Err(Error::ParityMismatch("powers need an even function".into()));
    }
    if v < 0 && f.body().is_zero() {
        return Err(Error::NotInvertible("zero body".into()));
    }
    f.pow(v)
}

/// Weight of `f` under the chart's second weight vector.
pub fn second_weight_of(f: &SuperFunction) -> Result<WeightAnswer> {
    let swapped = f.chart().swap_weights()?;
    let ids: Vec<usize> = (0..swapped.dim()).collect();
    Ok(weight_of(&f.relabel(&swapped, &ids)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{product_chart, restrict_to_submanifold, Coordinate, Parity::*};
    use crate::scalar::{frac, int};

    #[test]
    fn weight_examples() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, -2), ("xi", Odd, 3)]).unwrap();
        let x = c.coord("x").unwrap();
        let y = c.coord("y").unwrap();
        let xi = c.coord("xi").unwrap();
        let f = &(&x * &x) * &y;
        assert_eq!(weight_of(&f), WeightAnswer::Degree(Degree::even(int(0))));
        assert!(check_weight_field_identity(&f, &Degree::even(int(0))));

        let g = &xi * &x.invert().unwrap();
        let d = Degree::odd(int(2));
        assert_eq!(weight_of(&g), WeightAnswer::Degree(d.clone()));
        assert!(check_weight_field_identity(&g, &d));
        // corrupt one coefficient
        let bad = &g + &xi;
        assert!(!check_weight_field_identity(&bad, &d));

        assert_eq!(weight_of(&SuperFunction::zero(&c)), WeightAnswer::AnyWeight);
    }

    #[test]
    fn sum_of_different_weights() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, 2)]).unwrap();
        let f = &c.coord("x").unwrap() + &c.coord("y").unwrap();
        assert_eq!(weight_of(&f), WeightAnswer::NonHomogeneous);
    }

    #[test]
    fn inversion_map() {
        let cx = Chart::from_spec(&[("x", Even, 1)]).unwrap();
        let cy = Chart::from_spec(&[("y", Even, -1)]).unwrap();
        let x = cx.coord("x").unwrap();
        let y = cy.coord("y").unwrap();
        let map = CoordinateMap::new(&cx, &cy, vec![x.invert().unwrap()], vec![y.invert().unwrap()])
            .unwrap();
        assert!(map.check_inverse().unwrap());
        let image = pushforward(&map, &VectorField::monomial(&x, 0)).unwrap();
        assert_eq!(image, -VectorField::monomial(&y, 0));
        assert!(map.preserves_weights().unwrap());
        let id = CoordinateMap::identity(&cx);
        let xdx = VectorField::monomial(&(&x * &x), 0);
        assert_eq!(pushforward(&id, &xdx).unwrap(), xdx);
    }

    #[test]
    fn product_weight_field_is_sum() {
        let a = Chart::from_spec(&[("x", Even, 1)]).unwrap();
        let b = Chart::from_spec(&[("y", Even, 2)]).unwrap();
        let (p, _) = product_chart(&a, &b).unwrap();
        let xy = &p.coord("x").unwrap() * &p.coord("y").unwrap();
        assert_eq!(p.weight_vector_field().apply(&xy).unwrap(), xy.scale(&int(3)));
    }

    #[test]
    fn restriction_to_body_and_weight_zero_part() {
        let c = Chart::new(vec![
            Coordinate::even("x", int(1)),
            Coordinate::even("t", int(0)),
            Coordinate::odd("xi", frac(1, 2)),
        ])
        .unwrap();
        let body = restrict_to_submanifold(&c, &["xi"]).unwrap();
        assert_eq!(body.chart.dim(), 2);
        let f = &c.coord("x").unwrap() + &(&c.coord("xi").unwrap() * &c.coord("xi").unwrap());
        assert_eq!(body.restrict(&f).unwrap(), body.chart.coord("x").unwrap());

        let m0 = restrict_to_submanifold(&c, &["x", "xi"]).unwrap();
        assert!(m0.chart.weight_vector_field().is_zero());

        let same = restrict_to_submanifold(&c, &[]).unwrap();
        assert_eq!(same.chart, c);
    }
}
