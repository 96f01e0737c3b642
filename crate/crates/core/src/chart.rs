//! Homogeneity charts: coordinates labelled by parity, weight and base value.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{int, Scalar, ScalarDisplay};
use crate::superfunction::SuperFunction;

/// Element of Z/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: usize) -> Self {
        if b % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn bit(self) -> usize {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// Whether exchanging objects of these parities costs a sign.
    pub fn exchange_sign(self, other: Parity) -> bool {
        self.is_odd() && other.is_odd()
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.bit() + rhs.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A degree `(parity, weight)` in Z/2 x Q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Degree {
    pub parity: Parity,
    pub weight: Scalar,
}

impl Degree {
    pub fn new(parity: Parity, weight: Scalar) -> Self {
        Degree { parity, weight }
    }

    pub fn even(weight: Scalar) -> Self {
        Degree::new(Parity::Even, weight)
    }

    pub fn odd(weight: Scalar) -> Self {
        Degree::new(Parity::Odd, weight)
    }

    pub fn zero() -> Self {
        Degree::even(Scalar::zero())
    }

    /// `k * self`; parity multiplies mod 2.
    pub fn times(&self, k: i64) -> Degree {
        Degree::new(
            Parity::from_bit((k.rem_euclid(2) as usize) * self.parity.bit()),
            &self.weight * int(k),
        )
    }
}

impl Add for &Degree {
    type Output = Degree;
    fn add(self, rhs: &Degree) -> Degree {
        Degree::new(self.parity + rhs.parity, &self.weight + &rhs.weight)
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        &self + &rhs
    }
}

impl Neg for &Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        Degree::new(self.parity, -&self.weight)
    }
}

impl Neg for Degree {
    type Output = Degree;
    fn neg(self) -> Degree {
        -&self
    }
}

impl Sub for &Degree {
    type Output = Degree;
    fn sub(self, rhs: &Degree) -> Degree {
        self + &(-rhs)
    }
}

impl Sub for Degree {
    type Output = Degree;
    fn sub(self, rhs: Degree) -> Degree {
        &self - &rhs
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.parity, ScalarDisplay(&self.weight))
    }
}

/// A homogeneous coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coordinate {
    pub name: String,
    pub parity: Parity,
    pub weight: Scalar,
    /// Weight for a second, commuting homogeneity structure.
    pub weight2: Option<Scalar>,
    /// Value at the chart's base point; zero for odd coordinates.
    pub base: Scalar,
}

impl Coordinate {
    pub fn new(name: impl Into<String>, parity: Parity, weight: Scalar) -> Self {
        Coordinate {
            name: name.into(),
            parity,
            weight,
            weight2: None,
            base: Scalar::zero(),
        }
    }

    pub fn even(name: impl Into<String>, weight: Scalar) -> Self {
        Coordinate::new(name, Parity::Even, weight)
    }

    pub fn odd(name: impl Into<String>, weight: Scalar) -> Self {
        Coordinate::new(name, Parity::Odd, weight)
    }

    pub fn with_base(mut self, base: Scalar) -> Self {
        self.base = base;
        self
    }

    pub fn with_weight2(mut self, w: Scalar) -> Self {
        self.weight2 = Some(w);
        self
    }

    pub fn degree(&self) -> Degree {
        Degree::new(self.parity, self.weight.clone())
    }
}

#[derive(Debug, PartialEq, Eq)]
struct ChartData {
    coords: Vec<Coordinate>,
}

/// An ordered list of homogeneous coordinates. The induced weight vector
/// field is `sum w_a x^a d/dx^a`. Cloning is cheap.
#[derive(Clone, Debug)]
pub struct Chart(Arc<ChartData>);

impl PartialEq for Chart {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Chart {}

impl Chart {
    pub fn new(coords: Vec<Coordinate>) -> Result<Self> {
        let mut seen = HashSet::new();
        for c in &coords {
            if !seen.insert(c.name.as_str()) {
                return Err(Error::DuplicateCoordinate(c.name.clone()));
            }
            if c.parity.is_odd() && !c.base.is_zero() {
                return Err(Error::OddBaseValue(c.name.clone()));
            }
        }
        let with2 = coords.iter().filter(|c| c.weight2.is_some()).count();
        if with2 != 0 && with2 != coords.len() {
            return Err(Error::InvalidArgument(
                "second weight must be given for every coordinate or none".into(),
            ));
        }
        Ok(Chart(Arc::new(ChartData { coords })))
    }

    /// Convenience constructor from `(name, parity, weight)` triples with
    /// integer weights and zero base point.
    pub fn from_spec(spec: &[(&str, Parity, i64)]) -> Result<Self> {
        Chart::new(
            spec.iter()
                .map(|&(n, p, w)| Coordinate::new(n, p, int(w)))
                .collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.0.coords.len()
    }

    pub fn coordinates(&self) -> &[Coordinate] {
        &self.0.coords
    }

    pub fn coordinate(&self, i: usize) -> &Coordinate {
        &self.0.coords[i]
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.0.coords[i].parity
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.0.coords[i].parity.is_odd()
    }

    pub fn weight(&self, i: usize) -> Scalar {
        self.0.coords[i].weight.clone()
    }

    pub fn degree(&self, i: usize) -> Degree {
        self.0.coords[i].degree()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0.coords[i].name
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.0
            .coords
            .iter()
            .position(|c| c.name == name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// The coordinate function named `name`.
    pub fn coord(&self, name: &str) -> Result<SuperFunction> {
        Ok(SuperFunction::coordinate(self, self.index_of(name)?))
    }

    pub fn even_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| !self.is_odd(i))
    }

    pub fn odd_indices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(|&i| self.is_odd(i))
    }

    pub fn has_second_weight(&self) -> bool {
        self.0.coords.first().is_some_and(|c| c.weight2.is_some())
    }

    /// Whether the weight vector field vanishes at the base point, i.e. every
    /// coordinate of nonzero weight is based at zero.
    pub fn weight_field_vanishes_at_base(&self) -> bool {
        self.0
            .coords
            .iter()
            .all(|c| c.weight.is_zero() || c.base.is_zero())
    }

    /// A chart with the same coordinates but a different base point.
    pub fn with_base(&self, base: &[Scalar]) -> Result<Chart> {
        if base.len() != self.dim() {
            return Err(Error::Shape("base point length".into()));
        }
        Chart::new(
            self.0
                .coords
                .iter()
                .zip(base)
                .map(|(c, b)| c.clone().with_base(b.clone()))
                .collect(),
        )
    }

    /// Swaps the primary and secondary weights.
    pub fn swap_weights(&self) -> Result<Chart> {
        if !self.has_second_weight() {
            return Err(Error::InvalidArgument("chart has no second weight".into()));
        }
        Chart::new(
            self.0
                .coords
                .iter()
                .map(|c| {
                    let mut d = c.clone();
                    d.weight2 = Some(c.weight.clone());
                    d.weight = c.weight2.clone().unwrap();
                    d
                })
                .collect(),
        )
    }
}

/// Cartesian product; clashing names in the second factor get a `_2`
/// suffix (repeated until unique). Returns the chart and the index map of
/// the second factor.
pub fn product_chart(c1: &Chart, c2: &Chart) -> Result<(Chart, Vec<usize>)> {
    let mut coords: Vec<Coordinate> = c1.coordinates().to_vec();
    let mut names: HashSet<String> = coords.iter().map(|c| c.name.clone()).collect();
    let mut map = Vec::with_capacity(c2.dim());
    for c in c2.coordinates() {
        let mut d = c.clone();
        while names.contains(&d.name) {
            d.name.push_str("_2");
        }
        names.insert(d.name.clone());
        map.push(coords.len());
        coords.push(d);
    }
    Ok((Chart::new(coords)?, map))
}

/// The homogeneous submanifold cut out by setting the named coordinates to
/// zero, together with the restriction of functions to it.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub ambient: Chart,
    pub chart: Chart,
    /// Index in `chart` of each ambient coordinate, or `None` if zeroed.
    pub kept: Vec<Option<usize>>,
}

impl Restriction {
    pub fn restrict(&self, f: &SuperFunction) -> Result<SuperFunction> {
        let images: Vec<SuperFunction> = self
            .kept
            .iter()
            .map(|k| match k {
                Some(j) => SuperFunction::coordinate(&self.chart, *j),
                None => SuperFunction::zero(&self.chart),
            })
            .collect();
        f.substitute(&self.chart, &images)
    }
}

pub fn restrict_to_submanifold(c: &Chart, zeroed: &[&str]) -> Result<Restriction> {
    let mut zero_set = BTreeSet::new();
    for n in zeroed {
        zero_set.insert(c.index_of(n)?);
    }
    let mut coords = Vec::new();
    let mut kept = Vec::with_capacity(c.dim());
    for (i, coord) in c.coordinates().iter().enumerate() {
        if zero_set.contains(&i) {
            kept.push(None);
        } else {
            kept.push(Some(coords.len()));
            coords.push(coord.clone());
        }
    }
    Ok(Restriction {
        ambient: c.clone(),
        chart: Chart::new(coords)?,
        kept,
    })
}

/// Weights of all nonzero monomials of total degree at most `bound`
/// (odd coordinates enter at most once since they square to zero).
pub fn weight_monoid(c: &Chart, bound: usize) -> BTreeSet<Scalar> {
    let mut reached: BTreeSet<Scalar> = BTreeSet::new();
    // states: (weight, degree used, odd mask)
    let mut frontier: BTreeSet<(Scalar, usize, Vec<bool>)> = BTreeSet::new();
    frontier.insert((Scalar::zero(), 0, vec![false; c.dim()]));
    reached.insert(Scalar::zero());
    while let Some(state) = frontier.pop_first() {
        let (w, used, mask) = state;
        if used == bound {
            continue;
        }
        for i in 0..c.dim() {
            if c.is_odd(i) && mask[i] {
                continue;
            }
            let mut m = mask.clone();
            if c.is_odd(i) {
                m[i] = true;
            }
            let nw = &w + c.weight(i);
            reached.insert(nw.clone());
            frontier.insert((nw, used + 1, m));
        }
    }
    reached
}

impl fmt::Display for Chart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.coordinates() {
            write!(
                f,
                "{} {} {}",
                c.name,
                if c.parity.is_odd() { "O" } else { "E" },
                ScalarDisplay(&c.weight)
            )?;
            if let Some(w2) = &c.weight2 {
                write!(f, " {}", ScalarDisplay(w2))?;
            }
            if !c.base.is_zero() {
                write!(f, " base={}", ScalarDisplay(&c.base))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Parity::*;

    #[test]
    fn monoid_examples() {
        let c = Chart::from_spec(&[("x", Even, 1)]).unwrap();
        let w: Vec<_> = weight_monoid(&c, 3).into_iter().collect();
        assert_eq!(w, (0..=3).map(int).collect::<Vec<_>>());

        let c = Chart::from_spec(&[("x", Even, 2), ("y", Even, 3)]).unwrap();
        // enumerate n1*2 + n2*3 with n1 + n2 <= 3 by hand
        let mut brute = BTreeSet::new();
        for n1 in 0..=3i64 {
            for n2 in 0..=(3 - n1) {
                brute.insert(int(2 * n1 + 3 * n2));
            }
        }
        assert_eq!(weight_monoid(&c, 3), brute);
        assert_eq!(
            brute.into_iter().collect::<Vec<_>>(),
            [0, 2, 3, 4, 5, 6, 7, 8, 9].map(int).to_vec()
        );

        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, -1)]).unwrap();
        assert_eq!(
            weight_monoid(&c, 2).into_iter().collect::<Vec<_>>(),
            (-2..=2).map(int).collect::<Vec<_>>()
        );
    }

    #[test]
    fn odd_coordinates_enter_once() {
        let c = Chart::from_spec(&[("xi", Odd, 1)]).unwrap();
        assert_eq!(weight_monoid(&c, 5).len(), 2);
    }

    #[test]
    fn chart_validation() {
        assert_eq!(
            Chart::from_spec(&[("x", Even, 1), ("x", Odd, 1)]).unwrap_err(),
            Error::DuplicateCoordinate("x".into())
        );
        let bad = Chart::new(vec![Coordinate::odd("xi", int(1)).with_base(int(1))]);
        assert_eq!(bad.unwrap_err(), Error::OddBaseValue("xi".into()));
    }

    #[test]
    fn product_renames_clashes() {
        let a = Chart::from_spec(&[("x", Even, 1)]).unwrap();
        let b = Chart::from_spec(&[("x", Even, -1)]).unwrap();
        let (p, map) = product_chart(&a, &b).unwrap();
        assert_eq!(p.name(1), "x_2");
        assert_eq!(map, vec![1]);
        assert_eq!(p.weight(1), int(-1));
    }
}
