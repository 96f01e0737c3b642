//! Graded skew forms, their normal form, and symplectic forms on charts.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::chart::{Chart, Coordinate, Degree, Parity};
use crate::error::{Error, Result};
use crate::field::VectorField;
use crate::form::{form_weight, SuperForm};
use crate::homogeneity::WeightAnswer;
use crate::lifts::{tensor_weight, LiftedChart, Tensor};
use crate::linalg::Matrix;
use crate::rational::EvenRational;
use crate::scalar::{frac, Scalar};
use crate::superfunction::SuperFunction;

/// A finite dimensional space with a homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedVectorSpace {
    pub degrees: Vec<Degree>,
}

impl GradedVectorSpace {
    pub fn new(degrees: Vec<Degree>) -> Self {
        GradedVectorSpace { degrees }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }
}

/// `g_ab = g(e_a, e_b)` of degree `lambda`: an entry may be nonzero only if
/// `deg(e_a) + deg(e_b) = lambda`, and
/// `g_ab = -(-1)^((s + s_a)(s + s_b)) g_ba` where `s` is the parity of
/// `lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSkewForm {
    space: GradedVectorSpace,
    degree: Degree,
    matrix: Matrix,
}

fn skew_sign(lambda: Parity, a: Parity, b: Parity) -> bool {
    // true when g_ab = +g_ba
    (lambda + a).is_odd() && (lambda + b).is_odd()
}

impl GradedSkewForm {
    pub fn new(space: GradedVectorSpace, degree: Degree, matrix: Matrix) -> Result<Self> {
        let n = space.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::Shape(format!("expected a {n}x{n} matrix")));
        }
        for a in 0..n {
            for b in 0..n {
                let v = &matrix[(a, b)];
                if v.is_zero() {
                    continue;
                }
                let (da, db) = (&space.degrees[a], &space.degrees[b]);
                if da + db != degree {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({a}, {b}) pairs degrees {da} and {db}, not summing to {degree}"
                    )));
                }
                let other = &matrix[(b, a)];
                let ok = if skew_sign(degree.parity, da.parity, db.parity) {
                    other == v
                } else {
                    *other == -v.clone()
                };
                if !ok {
                    return Err(Error::NotSkew(format!("entries ({a}, {b}) and ({b}, {a})")));
                }
            }
        }
        Ok(GradedSkewForm {
            space,
            degree,
            matrix,
        })
    }

    pub fn space(&self) -> &GradedVectorSpace {
        &self.space
    }

    pub fn degree(&self) -> &Degree {
        &self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `g(u, v)` for coordinate vectors `u`, `v`.
    pub fn pair(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        let gv = self.matrix.mul_vec(v);
        u.iter().zip(&gv).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }
}

/// A homogeneous basis `(p_1, q_1, ..., y_1, ..., z_1, ...)` putting a
/// graded skew form into normal form. Column `k` of `change` holds the
/// `k`-th new vector in the old basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxBasis {
    pub degree: Degree,
    pub change: Matrix,
    pub degrees: Vec<Degree>,
    pub pairs: usize,
    /// `g(y_j, y_j) = sign_j c_j` with `c_j > 0`.
    pub signs: Vec<i8>,
    pub scales: Vec<Scalar>,
    pub kernel: usize,
}

impl DarbouxBasis {
    pub fn rank(&self) -> usize {
        2 * self.pairs + self.signs.len()
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    pub fn p(&self, i: usize) -> usize {
        2 * i
    }

    pub fn q(&self, i: usize) -> usize {
        2 * i + 1
    }

    pub fn y(&self, j: usize) -> usize {
        2 * self.pairs + j
    }

    pub fn z(&self, k: usize) -> usize {
        2 * self.pairs + self.signs.len() + k
    }

    /// The normal-form matrix in the new basis.
    pub fn model(&self) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for i in 0..self.pairs {
            let (p, q) = (self.p(i), self.q(i));
            m[(p, q)] = Scalar::one();
            let same = skew_sign(self.degree.parity, self.degrees[p].parity, self.degrees[q].parity);
            m[(q, p)] = if same { Scalar::one() } else { -Scalar::one() };
        }
        for (j, (s, c)) in self.signs.iter().zip(&self.scales).enumerate() {
            let y = self.y(j);
            m[(y, y)] = if *s > 0 { c.clone() } else { -c.clone() };
        }
        m
    }

    /// `deg(p_i) + deg(q_i) = lambda` and `2 deg(y_j) = lambda` with every
    /// `y_j` odd.
    pub fn degree_constraints_hold(&self) -> bool {
        (0..self.pairs).all(|i| &self.degrees[self.p(i)] + &self.degrees[self.q(i)] == self.degree)
            && (0..self.signs.len()).all(|j| {
                let d = &self.degrees[self.y(j)];
                d.times(2) == self.degree && d.parity.is_odd()
            })
    }
}

fn degree_of(space: &GradedVectorSpace, v: &[Scalar]) -> Degree {
    let a = v.iter().position(|c| !c.is_zero()).expect("nonzero vector");
    space.degrees[a].clone()
}

fn axpy(v: &mut [Scalar], t: &Scalar, u: &[Scalar]) {
    if t.is_zero() {
        return;
    }
    for (a, b) in v.iter_mut().zip(u) {
        *a -= t * b;
    }
}

/// Splits off the kernel of `g`, then pairs vectors off one at a time: the
/// first vector with nonzero self-pairing becomes a `y`, otherwise the first
/// pair `(i, j)` with `g(e_i, e_j) != 0` becomes `(p, q)` scaled so that
/// `g(p, q) = 1`. The remaining vectors are corrected to be orthogonal to
/// the new ones.
pub fn normal_form(g: &GradedSkewForm) -> DarbouxBasis {
    let n = g.dim();
    let space = g.space();
    let mut by_degree: BTreeMap<String, Vec<usize>> = BTreeMap::new();
    for (a, d) in space.degrees.iter().enumerate() {
        by_degree.entry(format!("{d:?}")).or_default().push(a);
    }
    let gt = g.matrix().transpose();
    let mut kernel: Vec<Vec<Scalar>> = Vec::new();
    let mut rest: Vec<Vec<Scalar>> = Vec::new();
    for idx in by_degree.values() {
        // v supported on idx with sum_a v_a g_ab = 0 for every b
        let sub = Matrix::from_rows(
            (0..n).map(|b| idx.iter().map(|&a| gt[(b, a)].clone()).collect()).collect(),
        )
        .expect("rectangular");
        let embed = |w: &[Scalar]| {
            let mut v = vec![Scalar::zero(); n];
            for (k, &a) in idx.iter().enumerate() {
                v[a] = w[k].clone();
            }
            v
        };
        let ns = sub.nullspace();
        let mut span = Matrix::from_rows(ns.clone()).unwrap_or_else(|_| Matrix::zeros(0, idx.len()));
        kernel.extend(ns.iter().map(|w| embed(w)));
        for k in 0..idx.len() {
            let mut e = vec![Scalar::zero(); idx.len()];
            e[k] = Scalar::one();
            let mut rows: Vec<Vec<Scalar>> = (0..span.rows()).map(|i| span.row(i).to_vec()).collect();
            rows.push(e.clone());
            let bigger = Matrix::from_rows(rows).expect("rectangular");
            if bigger.rank() > span.rank() {
                rest.push(embed(&e));
                span = bigger;
            }
        }
    }
    rest.sort_by_key(|v| v.iter().position(|c| !c.is_zero()));

    let mut pairs: Vec<(Vec<Scalar>, Vec<Scalar>)> = Vec::new();
    let mut ys: Vec<(Vec<Scalar>, i8, Scalar)> = Vec::new();
    while !rest.is_empty() {
        if let Some(i) = rest.iter().position(|e| !g.pair(e, e).is_zero()) {
            let y = rest.remove(i);
            let gyy = g.pair(&y, &y);
            for v in rest.iter_mut() {
                let t = g.pair(&y, v) / &gyy;
                axpy(v, &t, &y);
            }
            let sign = if gyy.is_positive() { 1 } else { -1 };
            ys.push((y, sign, gyy.abs()));
            continue;
        }
        let (i, j) = (0..rest.len())
            .flat_map(|i| (0..rest.len()).map(move |j| (i, j)))
            .find(|&(i, j)| !g.pair(&rest[i], &rest[j]).is_zero())
            .expect("the form is nondegenerate off its kernel");
        let gij = g.pair(&rest[i], &rest[j]);
        let p = rest[i].clone();
        let q: Vec<Scalar> = rest[j].iter().map(|c| c / &gij).collect();
        let (hi, lo) = if i > j { (i, j) } else { (j, i) };
        rest.remove(hi);
        rest.remove(lo);
        let gqp = g.pair(&q, &p);
        for v in rest.iter_mut() {
            let beta = g.pair(&p, v);
            let alpha = g.pair(&q, v) / &gqp;
            axpy(v, &alpha, &p);
            axpy(v, &beta, &q);
        }
        pairs.push((p, q));
    }

    let mut columns: Vec<Vec<Scalar>> = Vec::new();
    for (p, q) in &pairs {
        columns.push(p.clone());
        columns.push(q.clone());
    }
    columns.extend(ys.iter().map(|(y, _, _)| y.clone()));
    columns.extend(kernel.iter().cloned());
    let degrees = columns.iter().map(|v| degree_of(space, v)).collect();
    let change = Matrix::from_rows(columns).expect("rectangular").transpose();
    DarbouxBasis {
        degree: g.degree().clone(),
        change,
        degrees,
        pairs: pairs.len(),
        signs: ys.iter().map(|(_, s, _)| *s).collect(),
        scales: ys.into_iter().map(|(_, _, c)| c).collect(),
        kernel: kernel.len(),
    }
}

/// `M_cb = i_{d/dx^b} i_{d/dx^c} omega`, so that `i_X omega` has
/// coefficient `sum_c X^c M_cb` on `dx^b` up to the placement sign.
pub fn musical(omega: &SuperForm) -> Result<Vec<Vec<SuperFunction>>> {
    if omega.rank() != Some(2) && !omega.is_zero() {
        return Err(Error::InvalidArgument("expected a 2-form".into()));
    }
    let chart = omega.chart();
    let n = chart.dim();
    let mut m = Vec::with_capacity(n);
    for c in 0..n {
        let ic = omega.interior(&VectorField::partial(chart, c))?;
        let mut row = Vec::with_capacity(n);
        for b in 0..n {
            let f = ic.interior(&VectorField::partial(chart, b))?;
            row.push(f.function_part());
        }
        m.push(row);
    }
    Ok(m)
}

/// Checks `deg(M_cb) = lambda - deg(x^c) - deg(x^b)` for every nonzero
/// entry.
pub fn musical_degrees_hold(omega: &SuperForm, lambda: &Degree) -> Result<bool> {
    let chart = omega.chart();
    let m = musical(omega)?;
    for (c, row) in m.iter().enumerate() {
        for (b, f) in row.iter().enumerate() {
            let expected = &(lambda - &chart.degree(c)) - &chart.degree(b);
            match crate::homogeneity::weight_of(f) {
                WeightAnswer::AnyWeight => {}
                WeightAnswer::Degree(d) if d == expected => {}
                _ => return Ok(false),
            }
        }
    }
    Ok(true)
}

/// The graded skew form `omega(m)` on the tangent space at the base point,
/// with basis degrees the coordinate degrees.
pub fn skew_form_at_base(omega: &SuperForm) -> Result<GradedSkewForm> {
    let chart = omega.chart();
    let lambda = match form_weight(omega) {
        WeightAnswer::Degree(d) => d,
        WeightAnswer::AnyWeight => Degree::zero(),
        WeightAnswer::NonHomogeneous => return Err(Error::NotHomogeneous("2-form".into())),
    };
    let m = musical(omega)?;
    let rows = m
        .iter()
        .map(|row| row.iter().map(SuperFunction::at_base).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    let space = GradedVectorSpace::new((0..chart.dim()).map(|a| chart.degree(a)).collect());
    GradedSkewForm::new(space, lambda, Matrix::from_rows(rows)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub ranks: Vec<usize>,
    pub generic_rank: usize,
    pub dim: usize,
}

impl RankReport {
    pub fn symplectic(&self) -> bool {
        self.generic_rank == self.dim && self.ranks.iter().all(|&r| r == self.dim)
    }
}

fn generic_rank(mut rows: Vec<Vec<EvenRational>>) -> Result<usize> {
    let n = rows.len();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        for i in r + 1..n {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].div(&piv)?;
            for j in c..cols {
                let v = rows[i][j].sub(&f.mul(&rows[r][j]));
                rows[i][j] = v;
            }
        }
        r += 1;
    }
    Ok(r)
}

/// Rank of the body of `[omega_ab]` at each sample point (values for all
/// coordinates, odd entries ignored) and over the field of fractions.
pub fn rank_at_body_points(omega: &SuperForm, samples: &[Vec<Scalar>]) -> Result<RankReport> {
    let m = musical(omega)?;
    let body: Vec<Vec<EvenRational>> = m.iter().map(|row| row.iter().map(SuperFunction::body).collect()).collect();
    let mut ranks = Vec::new();
    for s in samples {
        if s.len() != omega.chart().dim() {
            return Err(Error::Shape("sample point has the wrong length".into()));
        }
        let rows = body
            .iter()
            .map(|row| row.iter().map(|f| f.eval(|v| s[v].clone())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        ranks.push(Matrix::from_rows(rows)?.rank());
    }
    Ok(RankReport {
        ranks,
        generic_rank: generic_rank(body)?,
        dim: omega.chart().dim(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForms {
    pub lifted: LiftedChart,
    pub theta: SuperForm,
    pub omega: SuperForm,
}

/// `theta = sum dx^a p_a` and `omega = sum dx^a dp_a` on `T*[lambda]M`.
pub fn canonical_symplectic(chart: &Chart, lambda: &Degree) -> Result<CanonicalForms> {
    let lifted = LiftedChart::cotangent(chart, lambda)?;
    let c = &lifted.chart;
    let mut theta = SuperForm::zero(c);
    let mut omega = SuperForm::zero(c);
    for a in 0..chart.dim() {
        let k = lifted.fiber_index(a);
        let dx = SuperForm::differential(c, a);
        theta = &theta + &dx.mul_right(&SuperFunction::coordinate(c, k))?;
        omega = &omega + &dx.wedge(&SuperForm::differential(c, k))?;
    }
    if omega != -theta.d() {
        return Err(Error::InvalidArgument("omega differs from -d theta".into()));
    }
    if !tensor_weight(Tensor::Form(&omega)).admits(lambda) {
        return Err(Error::NotHomogeneous("canonical form".into()));
    }
    Ok(CanonicalForms { lifted, theta, omega })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DarbouxReport {
    pub degree: Degree,
    pub basis: DarbouxBasis,
    /// `P^T g P` equals the normal-form matrix.
    pub pointwise: bool,
    pub model: SuperForm,
    pub model_closed: bool,
    pub model_homogeneous: bool,
    pub model_full_rank: bool,
    pub degree_constraints: bool,
}

impl DarbouxReport {
    pub fn all_pass(&self) -> bool {
        self.pointwise
            && self.model_closed
            && self.model_homogeneous
            && self.model_full_rank
            && self.degree_constraints
    }
}

/// The constant-coefficient form `sum dp_i dq_i + sum (e_j c_j / 2) dy_j dy_j`
/// on a chart with coordinates `p1, q1, ..., y1, ..., z1, ...`.
pub fn darboux_model(basis: &DarbouxBasis) -> Result<SuperForm> {
    let mut coords = Vec::new();
    for (k, d) in basis.degrees.iter().enumerate() {
        let name = if k < 2 * basis.pairs {
            format!("{}{}", if k % 2 == 0 { "p" } else { "q" }, k / 2 + 1)
        } else if k < basis.rank() {
            format!("y{}", k - 2 * basis.pairs + 1)
        } else {
            format!("z{}", k - basis.rank() + 1)
        };
        coords.push(Coordinate::new(name, d.parity, d.weight.clone()));
    }
    let chart = Chart::new(coords)?;
    let mut w = SuperForm::zero(&chart);
    for i in 0..basis.pairs {
        let dp = SuperForm::differential(&chart, basis.p(i));
        w = &w + &dp.wedge(&SuperForm::differential(&chart, basis.q(i)))?;
    }
    for (j, (s, c)) in basis.signs.iter().zip(&basis.scales).enumerate() {
        let dy = SuperForm::differential(&chart, basis.y(j));
        let coeff = c * frac(i64::from(*s), 2);
        w = &w + &dy.wedge(&dy)?.scale(&coeff);
    }
    Ok(w)
}

/// Pointwise normal form and model checks at the base point.
pub fn darboux_verify(omega: &SuperForm) -> Result<DarbouxReport> {
    let chart = omega.chart();
    if !chart.weight_field_vanishes_at_base() {
        return Err(Error::BasePoint("nabla must vanish at the base point".into()));
    }
    if !omega.is_closed() {
        return Err(Error::NotClosed);
    }
    let g = skew_form_at_base(omega)?;
    let basis = normal_form(&g);
    let p = &basis.change;
    let pointwise = &(&p.transpose() * g.matrix()) * p == basis.model();
    let model = darboux_model(&basis)?;
    let model_closed = model.is_closed();
    let model_homogeneous = model.is_zero() || form_weight(&model).admits(g.degree());
    let base: Vec<Scalar> = vec![Scalar::zero(); model.chart().dim()];
    let model_full_rank = rank_at_body_points(&model, &[base])?.symplectic();
    Ok(DarbouxReport {
        degree: g.degree().clone(),
        degree_constraints: basis.degree_constraints_hold(),
        basis,
        pointwise,
        model,
        model_closed,
        model_homogeneous,
        model_full_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::Parity::*;
    use crate::scalar::int;

    fn space(ds: &[(Parity, i64)]) -> GradedVectorSpace {
        GradedVectorSpace::new(ds.iter().map(|&(p, w)| Degree::new(p, int(w))).collect())
    }

    fn mat(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()).unwrap()
    }

    fn check(g: &GradedSkewForm) -> DarbouxBasis {
        let b = normal_form(g);
        let p = &b.change;
        assert_eq!(&(&p.transpose() * g.matrix()) * p, b.model());
        assert!(p.inverse().is_some());
        assert!(b.degree_constraints_hold());
        b
    }

    #[test]
    fn even_pair() {
        let g = GradedSkewForm::new(space(&[(Even, 0), (Even, 0)]), Degree::zero(), mat(&[&[0, 1], &[-1, 0]]))
            .unwrap();
        let b = check(&g);
        assert_eq!((b.pairs, b.signs.len(), b.kernel), (1, 0, 0));
    }

    #[test]
    fn odd_self_pairing() {
        let g = GradedSkewForm::new(space(&[(Odd, 0)]), Degree::zero(), mat(&[&[2]])).unwrap();
        let b = check(&g);
        assert_eq!((b.pairs, b.signs.clone(), b.scales.clone()), (0, vec![1], vec![int(2)]));
        let g = GradedSkewForm::new(space(&[(Odd, 1)]), Degree::even(int(2)), mat(&[&[-3]])).unwrap();
        assert_eq!(check(&g).signs, vec![-1]);
    }

    #[test]
    fn kernel_split_off() {
        let g = GradedSkewForm::new(
            space(&[(Even, 0), (Even, 0), (Even, 0)]),
            Degree::zero(),
            mat(&[&[0, 1, 1], &[-1, 0, 0], &[-1, 0, 0]]),
        )
        .unwrap();
        let b = check(&g);
        assert_eq!((b.rank(), b.kernel), (2, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            GradedSkewForm::new(space(&[(Even, 0), (Even, 0)]), Degree::zero(), mat(&[&[0, 1], &[1, 0]])),
            Err(Error::NotSkew(_))
        ));
        assert!(matches!(
            GradedSkewForm::new(space(&[(Even, 0), (Even, 1)]), Degree::zero(), mat(&[&[0, 1], &[-1, 0]])),
            Err(Error::NotHomogeneous(_))
        ));
        // a self-pairing of odd degree is inconsistent
        assert!(GradedSkewForm::new(space(&[(Odd, 0)]), Degree::odd(int(0)), mat(&[&[1]])).is_err());
    }

    #[test]
    fn musical_examples() {
        let c = Chart::from_spec(&[("x", Even, 0), ("p", Even, 0)]).unwrap();
        let w = SuperForm::differential(&c, 0).wedge(&SuperForm::differential(&c, 1)).unwrap();
        let m = musical(&w).unwrap();
        assert_eq!(m[0][1], SuperFunction::one(&c));
        assert_eq!(m[1][0], -SuperFunction::one(&c));
        assert!(m[0][0].is_zero() && m[1][1].is_zero());

        let c3 = Chart::from_spec(&[("x", Even, 0), ("y", Even, 0), ("z", Even, 0)]).unwrap();
        let w = SuperForm::differential(&c3, 0).wedge(&SuperForm::differential(&c3, 1)).unwrap();
        let r = rank_at_body_points(&w, &[vec![int(0); 3]]).unwrap();
        assert_eq!((r.ranks.clone(), r.generic_rank), (vec![2], 2));
        assert!(!r.symplectic());
    }

    #[test]
    fn rank_drops_where_coefficient_vanishes() {
        let c = Chart::from_spec(&[("x", Even, 0), ("y", Even, 0)]).unwrap();
        let x = c.coord("x").unwrap();
        let w = SuperForm::differential(&c, 0).wedge(&SuperForm::differential(&c, 1)).unwrap().mul_right(&x).unwrap();
        let r = rank_at_body_points(&w, &[vec![int(0), int(0)], vec![int(1), int(5)]]).unwrap();
        assert_eq!(r.ranks, vec![0, 2]);
        assert_eq!(r.generic_rank, 2);
    }

    #[test]
    fn canonical_forms() {
        let c = Chart::from_spec(&[("x", Even, 0)]).unwrap();
        let cf = canonical_symplectic(&c, &Degree::zero()).unwrap();
        let lc = &cf.lifted.chart;
        assert_eq!(
            cf.omega,
            SuperForm::differential(lc, 0).wedge(&SuperForm::differential(lc, 1)).unwrap()
        );
        let odd = canonical_symplectic(&c, &Degree::odd(int(0))).unwrap();
        assert_eq!(odd.omega.parity(), Some(Odd));
        let r = rank_at_body_points(&cf.omega, &[vec![int(3), int(0)]]).unwrap();
        assert!(r.symplectic());
    }

    #[test]
    fn darboux_examples() {
        let c = Chart::from_spec(&[("x", Even, 1), ("p", Even, 1), ("eta", Odd, 1)]).unwrap();
        let dx = SuperForm::differential(&c, 0);
        let dp = SuperForm::differential(&c, 1);
        let deta = SuperForm::differential(&c, 2);
        let model = &dx.wedge(&dp).unwrap() + &deta.wedge(&deta).unwrap();
        let rep = darboux_verify(&model).unwrap();
        assert!(rep.all_pass(), "{rep:?}");
        assert_eq!((rep.basis.pairs, rep.basis.signs.len()), (1, 1));

        let c2 = Chart::from_spec(&[("x", Even, 0), ("p", Even, 0)]).unwrap();
        let x2 = c2.coord("x").unwrap();
        let f = &SuperFunction::one(&c2) + &(&x2 * &x2);
        let w = SuperForm::differential(&c2, 0)
            .wedge(&SuperForm::differential(&c2, 1))
            .unwrap()
            .mul_right(&f)
            .unwrap();
        let rep = darboux_verify(&w).unwrap();
        assert!(rep.all_pass());
    }
}
