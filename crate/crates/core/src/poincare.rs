//! Homogeneous primitives of closed homogeneous forms.

use std::fmt;

use num_traits::{One, Zero};

use crate::chart::{Chart, Degree};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::form::{form_weight, SuperForm};
use crate::homogeneity::{weight_of, WeightAnswer};
use crate::rational::EvenRational;
use crate::scalar::{int, Scalar};
use crate::superfunction::SuperFunction;

/// Which construction produced a primitive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `alpha = (1/w) i_nabla omega`; nonzero weight, nabla vanishing at base.
    Contraction,
    /// Coordinate-by-coordinate homotopy; weight zero, nabla vanishing at base.
    Elimination,
    /// The chart `(t, z)` with `t` of weight 1 based at 1 and every `z` of
    /// weight 0 based at 0.
    NormalForm,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Contraction => "contraction",
            Branch::Elimination => "elimination",
            Branch::NormalForm => "normal-form",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Primitive {
    pub alpha: SuperForm,
    pub branch: Branch,
    pub degree: Degree,
}

/// `f` with `d_k f = g`, of degree `deg(g) + deg(x^k)`, vanishing at the
/// base point.
pub fn homogeneous_antiderivative(g: &SuperFunction, k: usize) -> Result<SuperFunction> {
    let chart = g.chart();
    if let WeightAnswer::NonHomogeneous = weight_of(g) {
        return Err(Error::NotHomogeneous("antiderivative input".into()));
    }
    if chart.is_odd(k) {
        if !g.partial(k).is_zero() {
            return Err(Error::InvalidArgument(format!(
                "function depends on the odd coordinate `{}`",
                chart.name(k)
            )));
        }
        return Ok(&SuperFunction::coordinate(chart, k) * g);
    }
    let c = chart.coordinate(k);
    if !c.weight.is_zero() && !c.base.is_zero() {
        return Err(Error::BasePoint(format!(
            "`{}` has nonzero weight and must be based at 0",
            c.name
        )));
    }
    integrate_even(g, k)
}

fn integrate_even(g: &SuperFunction, k: usize) -> Result<SuperFunction> {
    let chart = g.chart();
    let base = chart.coordinate(k).base.clone();
    let mut out = SuperFunction::zero(chart);
    for (m, r) in g.terms() {
        if r.denominator().contains_var(k) {
            let den = r.denominator();
            let log = den.len() == 1
                && r.numerator().terms().any(|(mm, _)| {
                    mm.exponent(k) + 1 == den.leading().unwrap().0.exponent(k)
                });
            return Err(if log {
                Error::LogRequired(chart.name(k).to_string())
            } else {
                Error::Unsupported(format!(
                    "denominator depends on the integration variable `{}`",
                    chart.name(k)
                ))
            });
        }
        let anti = r.numerator().integrate(k);
        let num = anti.sub(&anti.set_var(k, &base));
        let c = EvenRational::new(num, r.denominator().clone())?;
        out = &out + &SuperFunction::term(chart, m.clone(), c);
    }
    Ok(out)
}

/// Integrates the coefficients of `w` in the even coordinate `k`, keeping
/// the differentials fixed.
fn integrate_form(w: &SuperForm, k: usize) -> Result<SuperForm> {
    let mut out = SuperForm::zero(w.chart());
    for (d, f) in w.terms() {
        out = &out + &SuperForm::term(d.clone(), integrate_even(f, k)?);
    }
    Ok(out)
}

/// A primitive of a closed polynomial form of positive rank by eliminating
/// coordinates one at a time: odd ones first, then even ones, each in
/// ascending index order. Coordinates outside `coords` must not occur.
fn eliminate(omega: &SuperForm, coords: &[usize]) -> Result<SuperForm> {
    let chart = omega.chart().clone();
    let mut rest = omega.clone();
    let mut alpha = SuperForm::zero(&chart);
    let mut order: Vec<usize> = coords.iter().copied().filter(|&i| chart.is_odd(i)).collect();
    order.extend(coords.iter().copied().filter(|&i| !chart.is_odd(i)));
    for k in order {
        if rest.is_zero() {
            break;
        }
        let beta = if chart.is_odd(k) {
            odd_step(&rest, k)?
        } else {
            let nu = rest.interior(&VectorField::partial(&chart, k))?;
            integrate_form(&nu, k)?
        };
        rest = &rest - &beta.d();
        alpha = &alpha + &beta;
    }
    if !rest.is_zero() {
        return Err(Error::NotClosed);
    }
    Ok(alpha)
}

/// For the terms `(dxi)^j A` (`j >= 1`) of `w` not involving `xi`,
/// returns `sum xi (1/j) i_{d/dxi}((dxi)^j A)`.
fn odd_step(w: &SuperForm, k: usize) -> Result<SuperForm> {
    let chart = w.chart();
    let xi = SuperForm::function(&SuperFunction::coordinate(chart, k));
    let partial = VectorField::partial(chart, k);
    let mut out = SuperForm::zero(chart);
    for (d, f) in w.terms() {
        let j = d.multiplicity(k);
        if j == 0 {
            continue;
        }
        // the xi-free part of the coefficient
        let free = &f.clone() - &(&SuperFunction::coordinate(chart, k) * &f.partial(k));
        if free.is_zero() {
            continue;
        }
        let t = SuperForm::term(d.clone(), free);
        let inner = t.interior(&partial)?.scale(&Scalar::new(1.into(), (j as i64).into()));
        out = &out + &xi.wedge(&inner)?;
    }
    Ok(out)
}

/// The coordinate-elimination primitive of a closed polynomial form of
/// positive rank, whatever its weight.
pub fn elimination_primitive(omega: &SuperForm) -> Result<SuperForm> {
    if !omega.is_closed() {
        return Err(Error::NotClosed);
    }
    if !omega.is_polynomial() {
        return Err(Error::Unsupported("rational-function coefficients".into()));
    }
    let coords: Vec<usize> = (0..omega.chart().dim()).collect();
    eliminate(omega, &coords)
}

fn normal_form_time(chart: &Chart) -> Option<usize> {
    let mut t = None;
    for (i, c) in chart.coordinates().iter().enumerate() {
        if c.weight.is_zero() {
            if !c.base.is_zero() {
                return None;
            }
        } else if !c.parity.is_odd() && c.weight.is_one() && c.base.is_one() && t.is_none() {
            t = Some(i);
        } else {
            return None;
        }
    }
    t
}

/// A homogeneous primitive `alpha` with `d alpha = omega` of the same
/// degree, vanishing at the base point (except for rank one on the normal
/// form chart with a nonzero `dt/t` part).
pub fn poincare_primitive(omega: &SuperForm) -> Result<Primitive> {
    let chart = omega.chart().clone();
    let n = match omega.rank() {
        Some(n) if n >= 1 || omega.is_zero() => n,
        _ => return Err(Error::InvalidArgument("expected a form of positive rank".into())),
    };
    let degree = match form_weight(omega) {
        WeightAnswer::Degree(d) => d,
        WeightAnswer::AnyWeight => {
            return Ok(Primitive {
                alpha: SuperForm::zero(&chart),
                branch: Branch::Contraction,
                degree: Degree::zero(),
            })
        }
        WeightAnswer::NonHomogeneous => return Err(Error::NotHomogeneous("form".into())),
    };
    if !omega.is_closed() {
        return Err(Error::NotClosed);
    }
    if chart.weight_field_vanishes_at_base() {
        if !degree.weight.is_zero() {
            let alpha = omega
                .interior(&chart.weight_vector_field())?
                .scale(&degree.weight.recip());
            return Ok(Primitive {
                alpha,
                branch: Branch::Contraction,
                degree,
            });
        }
        if !omega.is_polynomial() {
            return Err(Error::Unsupported(
                "weight-zero forms with rational-function coefficients".into(),
            ));
        }
        let coords: Vec<usize> = (0..chart.dim()).collect();
        return Ok(Primitive {
            alpha: eliminate(omega, &coords)?,
            branch: Branch::Elimination,
            degree,
        });
    }
    let Some(t) = normal_form_time(&chart) else {
        return Err(Error::BasePoint(
            "nabla must vanish at the base point, or the chart must be in normal form".into(),
        ));
    };
    let alpha = normal_form_primitive(omega, t, n, &degree.weight)?;
    Ok(Primitive {
        alpha,
        branch: Branch::NormalForm,
        degree,
    })
}

/// Multiplies every coefficient by `t^e`.
fn times_power(w: &SuperForm, t: usize, e: i64) -> Result<SuperForm> {
    let p = EvenRational::var(t).pow(e)?;
    let mut out = SuperForm::zero(w.chart());
    for (d, f) in w.terms() {
        out = &out + &SuperForm::term(d.clone(), f.scale_even(&p));
    }
    Ok(out)
}

fn depends_on(w: &SuperForm, t: usize) -> bool {
    w.terms().any(|(d, f)| d.multiplicity(t) > 0 || f.depends_on(t))
}

fn normal_form_primitive(omega: &SuperForm, t: usize, n: usize, w: &Scalar) -> Result<SuperForm> {
    let chart = omega.chart().clone();
    if !w.is_integer() {
        return Err(Error::Unsupported(format!(
            "non-integral weight {w} on the normal form chart"
        )));
    }
    let w = w.to_integer().try_into().map_err(|_| Error::Unsupported("weight too large".into()))?;
    let w: i64 = w;
    let dt = SuperForm::differential(&chart, t);
    let nu1 = omega.interior(&VectorField::partial(&chart, t))?;
    let nu2 = omega - &dt.wedge(&nu1)?;
    let omega1 = times_power(&nu1, t, 1 - w)?;
    let omega2 = times_power(&nu2, t, -w)?;
    if depends_on(&omega1, t) || depends_on(&omega2, t) {
        return Err(Error::NotHomogeneous("coefficients are not t^w h(z)".into()));
    }
    if !omega1.is_polynomial() || !omega2.is_polynomial() {
        return Err(Error::Unsupported("rational-function coefficients in z".into()));
    }
    let zs: Vec<usize> = (0..chart.dim()).filter(|&i| i != t).collect();
    let prim = |f: &SuperForm| -> Result<SuperForm> {
        if f.is_zero() {
            Ok(SuperForm::zero(&chart))
        } else {
            eliminate(f, &zs)
        }
    };
    let beta = prim(&omega2)?;
    let tw = |f: &SuperForm, e: i64| times_power(f, t, e);
    if w != 0 {
        let rest = &omega1 - &beta.scale(&int(w));
        if n == 1 {
            let c = rest
                .function_part()
                .constant_value()
                .ok_or(Error::NotClosed)?;
            let one = SuperForm::function(&SuperFunction::constant(&chart, c / int(w)));
            return tw(&(&beta + &one), w);
        }
        let gamma = prim(&rest)?;
        let a = tw(&beta, w)?;
        let b = tw(&dt.wedge(&gamma)?, w - 1)?;
        return Ok(&a - &b);
    }
    if n == 1 {
        let c = omega1.function_part();
        if !c.is_zero() {
            return Err(Error::LogRequired(chart.name(t).to_string()));
        }
        return Ok(beta);
    }
    let alpha1 = prim(&omega1)?;
    let a = tw(&dt.wedge(&alpha1)?, -1)?;
    Ok(&beta - &a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{Coordinate, Parity::*};
    use crate::scalar::frac;

    #[test]
    fn antiderivative_examples() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, 2), ("xi", Odd, 1), ("eta", Odd, 3)]).unwrap();
        let x = c.coord("x").unwrap();
        let y = c.coord("y").unwrap();
        assert_eq!(homogeneous_antiderivative(&SuperFunction::one(&c), 0).unwrap(), x);
        let eta = c.coord("eta").unwrap();
        assert_eq!(
            homogeneous_antiderivative(&eta, 2).unwrap(),
            &c.coord("xi").unwrap() * &eta
        );
        let g = &(&x * &x) * &y;
        assert_eq!(
            homogeneous_antiderivative(&g, 0).unwrap(),
            (&(&(&x * &x) * &x) * &y).scale(&frac(1, 3))
        );
        let xi = c.coord("xi").unwrap();
        assert!(homogeneous_antiderivative(&xi, 2).is_err());
        assert!(matches!(
            homogeneous_antiderivative(&x.invert().unwrap(), 0),
            Err(Error::LogRequired(_))
        ));
    }

    #[test]
    fn contraction_branch() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, 1)]).unwrap();
        let w = SuperForm::differential(&c, 0).wedge(&SuperForm::differential(&c, 1)).unwrap();
        let p = poincare_primitive(&w).unwrap();
        assert_eq!(p.branch, Branch::Contraction);
        assert_eq!(p.alpha.d(), w);
        assert_eq!(p.alpha, w.interior(&c.weight_vector_field()).unwrap().scale(&frac(1, 2)));
    }

    #[test]
    fn odd_power_of_differential() {
        let c = Chart::from_spec(&[("xi", Odd, 0)]).unwrap();
        let dxi = SuperForm::differential(&c, 0);
        let xi = SuperForm::function(&c.coord("xi").unwrap());
        for n in 1..=4usize {
            let mut w = SuperForm::function(&SuperFunction::constant(&c, int(3)));
            let mut expected = xi.scale(&int(3));
            for k in 0..n {
                w = w.wedge(&dxi).unwrap();
                if k + 1 < n {
                    expected = expected.wedge(&dxi).unwrap();
                }
            }
            let p = poincare_primitive(&w).unwrap();
            assert_eq!(p.branch, Branch::Elimination);
            assert_eq!(p.alpha, expected);
            assert_eq!(p.alpha.d(), w);
        }
    }

    #[test]
    fn weight_zero_elimination() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, -1), ("xi", Odd, 0)]).unwrap();
        let x = c.coord("x").unwrap();
        let y = c.coord("y").unwrap();
        let beta = SuperForm::function(&(&x * &y)).wedge(&SuperForm::differential(&c, 2)).unwrap();
        let w = beta.d();
        let p = poincare_primitive(&w).unwrap();
        assert_eq!(p.branch, Branch::Elimination);
        assert_eq!(p.alpha.d(), w);
        assert!(p.alpha.vanishes_at_base().unwrap());
    }

    fn normal_chart() -> Chart {
        Chart::new(vec![
            Coordinate::even("t", int(1)).with_base(int(1)),
            Coordinate::even("z", int(0)),
            Coordinate::odd("zeta", int(0)),
        ])
        .unwrap()
    }

    #[test]
    fn normal_form_branch() {
        let c = normal_chart();
        let t = c.coord("t").unwrap();
        let z = c.coord("z").unwrap();
        let zeta = c.coord("zeta").unwrap();
        for w in -2..=3i64 {
            let tw = t.pow(w).unwrap();
            // exact forms d(t^w h) of ranks 2 and 3
            let h = SuperForm::function(&(&tw * &(&z * &z))).wedge(&SuperForm::differential(&c, 2)).unwrap();
            let omega = h.d();
            let p = poincare_primitive(&omega).unwrap();
            assert_eq!(p.branch, Branch::NormalForm);
            assert_eq!(p.alpha.d(), omega, "w = {w}");
            assert!(form_weight(&p.alpha).admits(&Degree::odd(int(w))));
            assert!(p.alpha.vanishes_at_base().unwrap());
            let h2 = h.wedge(&SuperForm::differential(&c, 1)).unwrap();
            let omega = h2.d();
            let p = poincare_primitive(&omega).unwrap();
            assert_eq!(p.alpha.d(), omega);
            assert!(p.alpha.vanishes_at_base().unwrap());
        }
        // rank one, w = 2: omega = d(t^2 (1 + z zeta ... )) ; the function
        // part does not vanish at the base
        let f = &t.pow(2).unwrap() * &(&SuperFunction::one(&c) + &z);
        let omega = SuperForm::function(&f).d();
        let p = poincare_primitive(&omega).unwrap();
        assert_eq!(p.alpha.d(), omega);
        let _ = zeta;
    }

    #[test]
    fn logarithmic_case_rejected() {
        let c = normal_chart();
        let t = c.coord("t").unwrap();
        let omega = SuperForm::differential(&c, 0).mul_right(&t.invert().unwrap()).unwrap();
        assert!(matches!(poincare_primitive(&omega), Err(Error::LogRequired(_))));
    }

    #[test]
    fn preconditions() {
        let c = Chart::from_spec(&[("x", Even, 1), ("y", Even, 1)]).unwrap();
        let y = c.coord("y").unwrap();
        let not_closed = SuperForm::differential(&c, 0).mul_right(&y).unwrap();
        assert_eq!(poincare_primitive(&not_closed).unwrap_err(), Error::NotClosed);
        let moved = c.with_base(&[int(1), int(0)]).unwrap();
        let w = SuperForm::differential(&moved, 0).wedge(&SuperForm::differential(&moved, 1)).unwrap();
        assert!(matches!(poincare_primitive(&w), Err(Error::BasePoint(_))));
    }
}
