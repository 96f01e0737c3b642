//! Vector fields `X = sum X^a d/dx^a` with coefficients on the left.

use std::ops::{Add, Neg, Sub};

use crate::chart::{Chart, Parity};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::superfunction::SuperFunction;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    chart: Chart,
    coeffs: Vec<SuperFunction>,
}

impl VectorField {
    pub fn new(chart: &Chart, coeffs: Vec<SuperFunction>) -> Result<Self> {
        if coeffs.len() != chart.dim() {
            return Err(Error::Shape(format!(
                "vector field needs {} coefficients, got {}",
                chart.dim(),
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|c| c.chart() != chart) {
            return Err(Error::ChartMismatch);
        }
        Ok(VectorField {
            chart: chart.clone(),
            coeffs,
        })
    }

    pub fn zero(chart: &Chart) -> Self {
        VectorField {
            chart: chart.clone(),
            coeffs: vec![SuperFunction::zero(chart); chart.dim()],
        }
    }

    /// The coordinate field `d/dx^i`.
    pub fn partial(chart: &Chart, i: usize) -> Self {
        let mut x = VectorField::zero(chart);
        x.coeffs[i] = SuperFunction::one(chart);
        x
    }

    pub fn partial_by(chart: &Chart, name: &str) -> Result<Self> {
        Ok(VectorField::partial(chart, chart.index_of(name)?))
    }

    /// `f * d/dx^i`.
    pub fn monomial(f: &SuperFunction, i: usize) -> Self {
        let mut x = VectorField::zero(f.chart());
        x.coeffs[i] = f.clone();
        x
    }

    /// The weight vector field `sum w_a x^a d/dx^a`.
    pub fn weight_field(chart: &Chart) -> Self {
        let coeffs = (0..chart.dim())
            .map(|i| SuperFunction::coordinate(chart, i).scale(&chart.weight(i)))
            .collect();
        VectorField {
            chart: chart.clone(),
            coeffs,
        }
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn coefficients(&self) -> &[SuperFunction] {
        &self.coeffs
    }

    pub fn coefficient(&self, i: usize) -> &SuperFunction {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(SuperFunction::is_zero)
    }

    /// Parity of the field if homogeneous: each coefficient `X^a` must have
    /// parity `p + p(x^a)`. The zero field counts as even.
    pub fn parity(&self) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = c.parity()? + self.chart.parity(i);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    pub fn parity_part(&self, p: Parity) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c.parity_part(p + self.chart.parity(i)))
                .collect(),
        }
    }

    /// Splits into `(even, odd)` parts.
    pub fn split(&self) -> (VectorField, VectorField) {
        (self.parity_part(Parity::Even), self.parity_part(Parity::Odd))
    }

    /// `X(f) = sum X^a d_a f`.
    pub fn apply(&self, f: &SuperFunction) -> Result<SuperFunction> {
        if f.chart() != &self.chart {
            return Err(Error::ChartMismatch);
        }
        let mut out = SuperFunction::zero(&self.chart);
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let d = f.partial(i);
            if !d.is_zero() {
                out = &out + &(c * &d);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|f| f.scale(c)).collect(),
        }
    }

    /// `g X`, multiplying every coefficient on the left.
    pub fn mul_left(&self, g: &SuperFunction) -> Result<VectorField> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|f| g.checked_mul(f))
            .collect::<Result<Vec<_>>>()?;
        VectorField::new(&self.chart, coeffs)
    }

    pub fn checked_add(&self, other: &VectorField) -> Result<VectorField> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch);
        }
        Ok(VectorField {
            chart: self.chart.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    /// Graded Lie bracket; mixed-parity inputs are split and the parts
    /// recombined bilinearly.
    pub fn bracket(&self, other: &VectorField) -> Result<VectorField> {
        if self.chart != other.chart {
            return Err(Error::ChartMismatch);
        }
        match (self.parity(), other.parity()) {
            (Some(p), Some(q)) => Ok(self.bracket_homogeneous(other, p, q)),
            _ => {
                let mut out = VectorField::zero(&self.chart);
                for p in [Parity::Even, Parity::Odd] {
                    for q in [Parity::Even, Parity::Odd] {
                        let a = self.parity_part(p);
                        let b = other.parity_part(q);
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        out = &out + &a.bracket_homogeneous(&b, p, q);
                    }
                }
                Ok(out)
            }
        }
    }

    fn bracket_homogeneous(&self, other: &VectorField, p: Parity, q: Parity) -> VectorField {
        let swap_negative = !p.exchange_sign(q);
        let coeffs = (0..self.chart.dim())
            .map(|j| {
                let a = self.apply(&other.coeffs[j]).unwrap();
                let b = other.apply(&self.coeffs[j]).unwrap();
                if swap_negative {
                    &a - &b
                } else {
                    &a + &b
                }
            })
            .collect();
        VectorField {
            chart: self.chart.clone(),
            coeffs,
        }
    }

    /// Coefficients moved along a ring morphism into `target` coordinates.
    pub fn substitute(&self, target: &Chart, images: &[SuperFunction]) -> Result<VectorField> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.substitute(target, images))
            .collect::<Result<Vec<_>>>()?;
        Ok(VectorField {
            chart: target.clone(),
            coeffs,
        })
    }

    /// Moves the field to a chart containing this one's coordinates at the
    /// positions given by `map`.
    pub fn relabel(&self, target: &Chart, map: &[usize]) -> VectorField {
        let mut coeffs = vec![SuperFunction::zero(target); target.dim()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[map[i]] = c.relabel(target, map);
        }
        VectorField {
            chart: target.clone(),
            coeffs,
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(SuperFunction::is_polynomial)
    }

    /// Number of nonzero coefficients.
    pub fn support(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }
}

impl Chart {
    pub fn weight_vector_field(&self) -> VectorField {
        VectorField::weight_field(self)
    }
}

impl Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        self.checked_add(rhs).expect("vector fields on different charts")
    }
}

impl Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        self.checked_add(&-rhs).expect("vector fields on different charts")
    }
}

impl Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        VectorField {
            chart: self.chart.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for VectorField {
    type Output = VectorField;
    fn add(self, rhs: VectorField) -> VectorField {
        &self + &rhs
    }
}

impl Sub for VectorField {
    type Output = VectorField;
    fn sub(self, rhs: VectorField) -> VectorField {
        &self - &rhs
    }
}

impl Neg for VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        -&self
    }
}

/// Sum of `c_i * X_i`, for building fields from pieces.
pub fn combination(chart: &Chart, parts: &[(SuperFunction, VectorField)]) -> Result<VectorField> {
    let mut out = VectorField::zero(chart);
    for (c, x) in parts {
        if c.is_zero() {
            continue;
        }
        out = out.checked_add(&x.mul_left(c)?)?;
    }
    Ok(out)
}
