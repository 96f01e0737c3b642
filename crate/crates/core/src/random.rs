//! Random charts and homogeneous objects for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chart::{Chart, Coordinate, Degree, Parity};
use crate::field::VectorField;
use crate::form::{DiffMonomial, SuperForm};
use crate::linalg::Matrix;
use crate::supermatrix::SuperMatrix;
use crate::symplectic::{GradedSkewForm, GradedVectorSpace};
use crate::poly::{Monomial, Poly};
use crate::rational::EvenRational;
use crate::scalar::{int, Scalar};
use crate::superfunction::{OddMonomial, SuperFunction};

const EVEN_NAMES: [&str; 3] = ["x", "y", "z"];
const ODD_NAMES: [&str; 3] = ["xi", "eta", "zeta"];

/// Shape of generated objects.
#[derive(Clone, Debug)]
pub struct GenConfig {
    /// Largest total degree in the even coordinates.
    pub max_degree: u32,
    /// Largest number of monomials per coefficient.
    pub max_terms: usize,
    /// Coefficients are drawn from `-range..=range`, zero excluded.
    pub coeff_range: i64,
    /// Allow one inverse power of an even coordinate in monomials.
    pub laurent: bool,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_degree: 2,
            max_terms: 3,
            coeff_range: 3,
            laurent: false,
        }
    }
}

/// A chart with 1 to 3 even and 0 to 3 odd coordinates and integer
/// weights in `[-2, 3]`, all based at the origin.
pub fn chart<R: Rng + ?Sized>(rng: &mut R) -> Chart {
    let n_even = rng.gen_range(1..=3);
    let n_odd = rng.gen_range(0..=3);
    chart_with(rng, n_even, n_odd, -2, 3)
}

pub fn chart_with<R: Rng + ?Sized>(
    rng: &mut R,
    n_even: usize,
    n_odd: usize,
    min_weight: i64,
    max_weight: i64,
) -> Chart {
    let mut coords = Vec::new();
    for name in EVEN_NAMES.iter().take(n_even) {
        coords.push(Coordinate::even(*name, int(rng.gen_range(min_weight..=max_weight))));
    }
    for name in ODD_NAMES.iter().take(n_odd) {
        coords.push(Coordinate::odd(*name, int(rng.gen_range(min_weight..=max_weight))));
    }
    Chart::new(coords).expect("distinct names")
}

fn coefficient<R: Rng + ?Sized>(rng: &mut R, cfg: &GenConfig) -> Scalar {
    let mut c = 0;
    while c == 0 {
        c = rng.gen_range(-cfg.coeff_range..=cfg.coeff_range);
    }
    int(c)
}

/// A term `c * x^e * xi^S`, with `e` possibly containing one `-1` exponent.
#[derive(Clone, Debug)]
struct Term {
    even: Vec<i32>,
    odd: Vec<usize>,
}

impl Term {
    fn degree(&self, chart: &Chart) -> Degree {
        let evens: Vec<usize> = chart.even_indices().collect();
        let mut w = Scalar::from_integer(0.into());
        for (k, &e) in self.even.iter().enumerate() {
            w += chart.weight(evens[k]) * int(e as i64);
        }
        for &i in &self.odd {
            w += chart.weight(i);
        }
        Degree::new(Parity::from_bit(self.odd.len()), w)
    }

    fn to_function(&self, chart: &Chart, c: Scalar) -> SuperFunction {
        let evens: Vec<usize> = chart.even_indices().collect();
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (k, &e) in self.even.iter().enumerate() {
            if e > 0 {
                num.push((evens[k], e as u32));
            } else if e < 0 {
                den.push((evens[k], (-e) as u32));
            }
        }
        let r = EvenRational::new(
            Poly::term(Monomial::from_pairs(num), c),
            Poly::term(Monomial::from_pairs(den), int(1)),
        )
        .expect("monomial denominator");
        let (m, negative) = OddMonomial::from_indices(&self.odd).expect("distinct odd indices");
        let f = SuperFunction::term(chart, m, r);
        if negative {
            -f
        } else {
            f
        }
    }
}

fn all_terms(chart: &Chart, cfg: &GenConfig) -> Vec<Term> {
    let n_even = chart.even_indices().count();
    let odd: Vec<usize> = chart.odd_indices().collect();
    let lo = if cfg.laurent { -1 } else { 0 };
    let mut evens: Vec<Vec<i32>> = vec![vec![]];
    for _ in 0..n_even {
        let mut next = Vec::new();
        for v in &evens {
            for e in lo..=(cfg.max_degree as i32) {
                let mut w = v.clone();
                w.push(e);
                next.push(w);
            }
        }
        evens = next;
    }
    evens.retain(|v| {
        v.iter().map(|e| e.unsigned_abs()).sum::<u32>() <= cfg.max_degree
            && v.iter().filter(|&&e| e < 0).count() <= 1
    });
    let mut out = Vec::new();
    for mask in 0..(1usize << odd.len()) {
        let subset: Vec<usize> = (0..odd.len())
            .filter(|k| mask & (1 << k) != 0)
            .map(|k| odd[k])
            .collect();
        for e in &evens {
            out.push(Term {
                even: e.clone(),
                odd: subset.clone(),
            });
        }
    }
    out
}

/// A random, generally inhomogeneous, superfunction.
pub fn function<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, cfg: &GenConfig) -> SuperFunction {
    let terms = all_terms(chart, cfg);
    let n = rng.gen_range(1..=cfg.max_terms);
    let mut f = SuperFunction::zero(chart);
    for t in terms.choose_multiple(rng, n) {
        f = &f + &t.to_function(chart, coefficient(rng, cfg));
    }
    f
}

/// A random superfunction with a nonzero constant body term.
pub fn invertible_function<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, cfg: &GenConfig) -> SuperFunction {
    loop {
        let f = &function(rng, chart, cfg) + &SuperFunction::constant(chart, coefficient(rng, cfg));
        if !f.body().is_zero() {
            return f;
        }
    }
}

/// A random homogeneous superfunction of degree `deg`; zero when no
/// monomial within the configured bounds has that degree.
pub fn homogeneous_of<R: Rng + ?Sized>(
    rng: &mut R,
    chart: &Chart,
    deg: &Degree,
    cfg: &GenConfig,
) -> SuperFunction {
    let terms: Vec<Term> = all_terms(chart, cfg)
        .into_iter()
        .filter(|t| t.degree(chart) == *deg)
        .collect();
    let mut f = SuperFunction::zero(chart);
    if terms.is_empty() {
        return f;
    }
    let n = rng.gen_range(1..=cfg.max_terms);
    for t in terms.choose_multiple(rng, n) {
        f = &f + &t.to_function(chart, coefficient(rng, cfg));
    }
    f
}

/// A random degree realised by some monomial.
pub fn monomial_degree<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, cfg: &GenConfig) -> Degree {
    all_terms(chart, cfg)
        .choose(rng)
        .expect("the constant monomial exists")
        .degree(chart)
}

/// A nonzero homogeneous superfunction and its degree.
pub fn homogeneous<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, cfg: &GenConfig) -> (SuperFunction, Degree) {
    let deg = monomial_degree(rng, chart, cfg);
    (homogeneous_of(rng, chart, &deg, cfg), deg)
}

/// A homogeneous vector field of degree `deg`: coefficient `a` has degree
/// `deg + deg(x^a)`.
pub fn field_of<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, deg: &Degree, cfg: &GenConfig) -> VectorField {
    let coeffs = (0..chart.dim())
        .map(|a| {
            if rng.gen_bool(0.3) {
                SuperFunction::zero(chart)
            } else {
                homogeneous_of(rng, chart, &(deg + &chart.degree(a)), cfg)
            }
        })
        .collect();
    VectorField::new(chart, coeffs).expect("valid coefficients")
}

/// A nonzero homogeneous vector field (if the bounds allow one) and its
/// degree.
pub fn field<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, cfg: &GenConfig) -> (VectorField, Degree) {
    let a = rng.gen_range(0..chart.dim());
    let deg = &monomial_degree(rng, chart, cfg) - &chart.degree(a);
    let mut x = field_of(rng, chart, &deg, cfg);
    if x.is_zero() {
        let f = homogeneous_of(rng, chart, &(&deg + &chart.degree(a)), cfg);
        x = VectorField::monomial(&f, a);
    }
    (x, deg)
}

/// Differential monomials of rank `r`.
pub fn diff_monomials(chart: &Chart, r: usize) -> Vec<DiffMonomial> {
    let mut out = vec![(DiffMonomial::one(), 0usize)];
    for _ in 0..r {
        let mut next = Vec::new();
        for (d, last) in &out {
            for a in *last..chart.dim() {
                if !chart.is_odd(a) && d.multiplicity(a) > 0 {
                    continue;
                }
                if let Some((m, _)) = d.mul(&DiffMonomial::generator(a), chart) {
                    next.push((m, a));
                }
            }
        }
        out = next;
    }
    out.into_iter().map(|(d, _)| d).collect()
}

/// A homogeneous form of rank `r` and degree `deg`.
pub fn form_of<R: Rng + ?Sized>(
    rng: &mut R,
    chart: &Chart,
    r: usize,
    deg: &Degree,
    cfg: &GenConfig,
) -> SuperForm {
    let mut out = SuperForm::zero(chart);
    let ds = diff_monomials(chart, r);
    let n = rng.gen_range(1..=cfg.max_terms.max(1));
    for d in ds.choose_multiple(rng, n) {
        let dd = Degree::new(d.parity(chart), d.weight(chart));
        let f = homogeneous_of(rng, chart, &(deg - &dd), cfg);
        out = &out + &SuperForm::term(d.clone(), f);
    }
    out
}

/// A homogeneous form of rank `r` (nonzero when the rank allows) and its
/// degree.
pub fn form<R: Rng + ?Sized>(rng: &mut R, chart: &Chart, r: usize, cfg: &GenConfig) -> (SuperForm, Degree) {
    let ds = diff_monomials(chart, r);
    let Some(d) = ds.choose(rng) else {
        return (SuperForm::zero(chart), Degree::zero());
    };
    let dd = Degree::new(d.parity(chart), d.weight(chart));
    let deg = &monomial_degree(rng, chart, cfg) + &dd;
    let mut w = form_of(rng, chart, r, &deg, cfg);
    if w.is_zero() {
        let f = homogeneous_of(rng, chart, &(&deg - &dd), cfg);
        w = SuperForm::term(d.clone(), f);
    }
    (w, deg)
}

/// A random graded skew form of dimension `1..=max_dim`. Basis degrees are
/// drawn so that many pairs `deg(e_a) + deg(e_b) = lambda` occur.
pub fn skew_form<R: Rng + ?Sized>(rng: &mut R, max_dim: usize) -> GradedSkewForm {
    let lambda = Degree::new(Parity::from_bit(rng.gen_range(0..2)), int(rng.gen_range(-1..=2)));
    let n = rng.gen_range(1..=max_dim);
    let mut degrees: Vec<Degree> = Vec::with_capacity(n);
    while degrees.len() < n {
        match degrees.choose(rng) {
            Some(d) if rng.gen_bool(0.6) => degrees.push(&lambda - d),
            _ => degrees.push(Degree::new(
                Parity::from_bit(rng.gen_range(0..2)),
                int(rng.gen_range(-1..=2)),
            )),
        }
    }
    degrees.shuffle(rng);
    let mut m = Matrix::zeros(n, n);
    for a in 0..n {
        for b in a..n {
            if &degrees[a] + &degrees[b] != lambda || rng.gen_bool(0.3) {
                continue;
            }
            let v = int(rng.gen_range(-3..=3));
            let symmetric = (lambda.parity + degrees[a].parity).is_odd()
                && (lambda.parity + degrees[b].parity).is_odd();
            if a == b && !symmetric {
                continue;
            }
            m[(a, b)] = v.clone();
            m[(b, a)] = if symmetric { v } else { -v };
        }
    }
    GradedSkewForm::new(GradedVectorSpace::new(degrees), lambda, m).expect("graded skew by construction")
}

/// A random `(even|odd)` supermatrix over `chart`: diagonal blocks are
/// a nonzero constant on the diagonal plus random even functions, the other
/// blocks random odd functions. Not necessarily invertible.
pub fn supermatrix<R: Rng + ?Sized>(
    rng: &mut R,
    chart: &Chart,
    even: usize,
    odd: usize,
    cfg: &GenConfig,
) -> SuperMatrix {
    let n = even + odd;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let f = function(rng, chart, cfg);
                    if (i < even) == (j < even) {
                        let mut g = f.even_part();
                        if i == j {
                            g = &g + &SuperFunction::constant(chart, coefficient(rng, cfg));
                        }
                        g
                    } else {
                        f.odd_part()
                    }
                })
                .collect()
        })
        .collect();
    SuperMatrix::new(chart, even, odd, entries).expect("parity pattern by construction")
}
