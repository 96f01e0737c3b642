//! Supermatrices over superfunctions and the homogeneity structures of
//! `GL(1,1)` and `SL(2,1)`.

use std::fmt;

use crate::chart::{product_chart, Chart, Coordinate, Degree, Parity};
use crate::error::{Error, Result};
use crate::homogeneity::{weight_of, WeightAnswer};
use crate::scalar::{Scalar, ScalarDisplay};
use crate::superfunction::SuperFunction;

type Block = Vec<Vec<SuperFunction>>;

/// A `(p|q) x (p|q)` matrix; rows and columns `< p` are even. Entry
/// `(i, j)` has parity `parity(i) + parity(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuperMatrix {
    chart: Chart,
    even: usize,
    odd: usize,
    entries: Block,
}

fn index_parity(even: usize, i: usize) -> Parity {
    if i < even {
        Parity::Even
    } else {
        Parity::Odd
    }
}

impl SuperMatrix {
    pub fn new(chart: &Chart, even: usize, odd: usize, entries: Block) -> Result<Self> {
        let n = even + odd;
        if entries.len() != n || entries.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("expected a {n}x{n} supermatrix")));
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, f) in row.iter().enumerate() {
                if f.chart() != chart {
                    return Err(Error::ChartMismatch);
                }
                let want = index_parity(even, i) + index_parity(even, j);
                if !f.is_zero() && f.parity() != Some(want) {
                    return Err(Error::ParityMismatch(format!("entry ({i}, {j}) should be {want}")));
                }
            }
        }
        Ok(SuperMatrix {
            chart: chart.clone(),
            even,
            odd,
            entries,
        })
    }

    pub fn identity(chart: &Chart, even: usize, odd: usize) -> Self {
        let n = even + odd;
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if i == j {
                            SuperFunction::one(chart)
                        } else {
                            SuperFunction::zero(chart)
                        }
                    })
                    .collect()
            })
            .collect();
        SuperMatrix {
            chart: chart.clone(),
            even,
            odd,
            entries,
        }
    }

    /// The matrix whose entry `(i, j)` is the coordinate named `names[i][j]`.
    pub fn of_coordinates(chart: &Chart, even: usize, odd: usize, names: &[&[&str]]) -> Result<Self> {
        let entries = names
            .iter()
            .map(|row| row.iter().map(|n| chart.coord(n)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        SuperMatrix::new(chart, even, odd, entries)
    }

    pub fn chart(&self) -> &Chart {
        &self.chart
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.even, self.odd)
    }

    pub fn size(&self) -> usize {
        self.even + self.odd
    }

    pub fn entry(&self, i: usize, j: usize) -> &SuperFunction {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &Block {
        &self.entries
    }

    fn block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Block {
        rows.map(|i| self.entries[i][cols.clone()].to_vec()).collect()
    }

    pub fn a(&self) -> Block {
        self.block(0..self.even, 0..self.even)
    }

    pub fn b(&self) -> Block {
        self.block(0..self.even, self.even..self.size())
    }

    pub fn c(&self) -> Block {
        self.block(self.even..self.size(), 0..self.even)
    }

    pub fn d(&self) -> Block {
        self.block(self.even..self.size(), self.even..self.size())
    }

    fn from_blocks(chart: &Chart, even: usize, odd: usize, a: Block, b: Block, c: Block, d: Block) -> Self {
        let mut entries = Vec::with_capacity(even + odd);
        for (ra, rb) in a.into_iter().zip(b) {
            entries.push(ra.into_iter().chain(rb).collect());
        }
        for (rc, rd) in c.into_iter().zip(d) {
            entries.push(rc.into_iter().chain(rd).collect());
        }
        SuperMatrix {
            chart: chart.clone(),
            even,
            odd,
            entries,
        }
    }

    /// Moves every entry along an index map into `target`.
    pub fn relabel(&self, target: &Chart, map: &[usize]) -> SuperMatrix {
        SuperMatrix {
            chart: target.clone(),
            even: self.even,
            odd: self.odd,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(|f| f.relabel(target, map)).collect())
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        *self == SuperMatrix::identity(&self.chart, self.even, self.odd)
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

fn zeros(chart: &Chart, r: usize, c: usize) -> Block {
    vec![vec![SuperFunction::zero(chart); c]; r]
}

fn mul(chart: &Chart, x: &Block, y: &Block, c: usize) -> Block {
    let r = x.len();
    let mut out = zeros(chart, r, c);
    for i in 0..r {
        for j in 0..c {
            let mut s = SuperFunction::zero(chart);
            for (k, yk) in y.iter().enumerate() {
                if !x[i][k].is_zero() && !yk[j].is_zero() {
                    s = &s + &(&x[i][k] * &yk[j]);
                }
            }
            out[i][j] = s;
        }
    }
    out
}

fn sub(x: &Block, y: &Block) -> Block {
    x.iter()
        .zip(y)
        .map(|(a, b)| a.iter().zip(b).map(|(f, g)| f - g).collect())
        .collect()
}

fn neg(x: &Block) -> Block {
    x.iter().map(|r| r.iter().map(|f| -f.clone()).collect()).collect()
}

fn pivot(col: &[(usize, &SuperFunction)]) -> Option<usize> {
    col.iter().find(|(_, f)| !f.body().is_zero()).map(|(i, _)| *i)
}

/// Inverse of a square matrix of even superfunctions by Gauss-Jordan
/// elimination; pivots need a nonzero body.
fn even_inverse(chart: &Chart, m: &Block) -> Result<Block> {
    let n = m.len();
    let mut a = m.clone();
    let mut inv = zeros(chart, n, n);
    for (i, row) in inv.iter_mut().enumerate() {
        row[i] = SuperFunction::one(chart);
    }
    for c in 0..n {
        let col: Vec<(usize, &SuperFunction)> = (c..n).map(|i| (i, &a[i][c])).collect();
        let p = pivot(&col).ok_or_else(|| Error::NotInvertible("singular body block".into()))?;
        a.swap(c, p);
        inv.swap(c, p);
        let pinv = a[c][c].invert()?;
        for j in 0..n {
            a[c][j] = &a[c][j] * &pinv;
            inv[c][j] = &inv[c][j] * &pinv;
        }
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..n {
                a[i][j] = &a[i][j] - &(&f * &a[c][j]);
                inv[i][j] = &inv[i][j] - &(&f * &inv[c][j]);
            }
        }
    }
    Ok(inv)
}

/// Determinant of a square matrix of even (hence commuting) superfunctions.
fn even_det(chart: &Chart, m: &Block) -> Result<SuperFunction> {
    let n = m.len();
    let mut a = m.clone();
    let mut det = SuperFunction::one(chart);
    for c in 0..n {
        let col: Vec<(usize, &SuperFunction)> = (c..n).map(|i| (i, &a[i][c])).collect();
        let Some(p) = pivot(&col) else {
            // every remaining pivot candidate is nilpotent; expand along
            // the column instead
            return cofactor_det(chart, &a[c..].iter().map(|r| r[c..].to_vec()).collect::<Vec<_>>())
                .map(|d| &det * &d);
        };
        if p != c {
            a.swap(c, p);
            det = -det;
        }
        let pinv = a[c][c].invert()?;
        det = &det * &a[c][c];
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &pinv;
            for j in c..n {
                a[i][j] = &a[i][j] - &(&f * &a[c][j]);
            }
        }
    }
    Ok(det)
}

fn cofactor_det(chart: &Chart, m: &Block) -> Result<SuperFunction> {
    let n = m.len();
    if n == 0 {
        return Ok(SuperFunction::one(chart));
    }
    let mut det = SuperFunction::zero(chart);
    for i in 0..n {
        if m[i][0].is_zero() {
            continue;
        }
        let minor: Block = (0..n)
            .filter(|&r| r != i)
            .map(|r| m[r][1..].to_vec())
            .collect();
        let term = &m[i][0] * &cofactor_det(chart, &minor)?;
        det = if i % 2 == 0 { &det + &term } else { &det - &term };
    }
    Ok(det)
}

pub fn matmul(x: &SuperMatrix, y: &SuperMatrix) -> Result<SuperMatrix> {
    if x.chart != y.chart {
        return Err(Error::ChartMismatch);
    }
    if x.shape() != y.shape() {
        return Err(Error::Shape("supermatrix shapes differ".into()));
    }
    Ok(SuperMatrix {
        chart: x.chart.clone(),
        even: x.even,
        odd: x.odd,
        entries: mul(&x.chart, &x.entries, &y.entries, x.size()),
    })
}

/// `[(A - B D^-1 C)^-1, -A^-1 B (D - C A^-1 B)^-1;
///   -D^-1 C (A - B D^-1 C)^-1, (D - C A^-1 B)^-1]`.
pub fn block_inverse(x: &SuperMatrix) -> Result<SuperMatrix> {
    let ch = &x.chart;
    let (a, b, c, d) = (x.a(), x.b(), x.c(), x.d());
    let ai = even_inverse(ch, &a)?;
    let di = even_inverse(ch, &d)?;
    let (p, q) = (x.even, x.odd);
    let s_a = even_inverse(ch, &sub(&a, &mul(ch, &mul(ch, &b, &di, q), &c, p)))?;
    let s_d = even_inverse(ch, &sub(&d, &mul(ch, &mul(ch, &c, &ai, p), &b, q)))?;
    let nb = neg(&mul(ch, &mul(ch, &ai, &b, q), &s_d, q));
    let nc = neg(&mul(ch, &mul(ch, &di, &c, p), &s_a, p));
    Ok(SuperMatrix::from_blocks(ch, x.even, x.odd, s_a, nb, nc, s_d))
}

/// `ber(X) = det(A - B D^-1 C) det(D)^-1`.
pub fn berezinian(x: &SuperMatrix) -> Result<SuperFunction> {
    let ch = &x.chart;
    let (a, b, c, d) = (x.a(), x.b(), x.c(), x.d());
    let di = even_inverse(ch, &d)?;
    let schur = sub(&a, &mul(ch, &mul(ch, &b, &di, x.odd), &c, x.even));
    let num = even_det(ch, &schur)?;
    Ok(&num * &even_det(ch, &d)?.invert()?)
}

/// `A - B D^-1 C`.
pub fn schur_complement(x: &SuperMatrix) -> Result<Block> {
    let ch = &x.chart;
    let di = even_inverse(ch, &x.d())?;
    Ok(sub(&x.a(), &mul(ch, &mul(ch, &x.b(), &di, x.odd), &x.c(), x.even)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub row: usize,
    pub col: usize,
    pub declared: Degree,
    pub found: WeightAnswer,
}

impl fmt::Display for DegreeViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}): declared ({}), found {}",
            self.row, self.col, self.declared, self.found
        )
    }
}

/// Entries whose degree differs from the declared one; zero entries pass.
pub fn degree_check(entries: &Block, declared: &[Vec<Degree>]) -> Vec<DegreeViolation> {
    let mut out = Vec::new();
    for (i, row) in entries.iter().enumerate() {
        for (j, f) in row.iter().enumerate() {
            let found = weight_of(f);
            if !found.admits(&declared[i][j]) {
                out.push(DegreeViolation {
                    row: i,
                    col: j,
                    declared: declared[i][j].clone(),
                    found,
                });
            }
        }
    }
    out
}

/// A matrix group given by coordinate names laid out as a matrix and the
/// degrees of those coordinates.
#[derive(Clone, Debug)]
pub struct MatrixGroup {
    pub name: String,
    pub even: usize,
    pub odd: usize,
    pub chart: Chart,
    pub names: Vec<Vec<String>>,
    pub degrees: Vec<Vec<Degree>>,
}

impl MatrixGroup {
    fn build(name: &str, even: usize, odd: usize, layout: &[&[(&str, Degree)]]) -> Result<Self> {
        let mut coords = Vec::new();
        for row in layout {
            for (n, d) in row.iter() {
                coords.push(Coordinate::new(*n, d.parity, d.weight.clone()));
            }
        }
        Ok(MatrixGroup {
            name: name.to_string(),
            even,
            odd,
            chart: Chart::new(coords)?,
            names: layout.iter().map(|r| r.iter().map(|(n, _)| n.to_string()).collect()).collect(),
            degrees: layout.iter().map(|r| r.iter().map(|(_, d)| d.clone()).collect()).collect(),
        })
    }

    /// `[[x1, xi1], [xi2, x2]]` with degrees `[[(0,0), (1,a)], [(1,-a), (0,0)]]`.
    pub fn gl11(a: &Scalar) -> Result<Self> {
        let e = Degree::zero();
        let na = -a.clone();
        MatrixGroup::build(
            "GL11",
            1,
            1,
            &[
                &[("x1", e.clone()), ("xi1", Degree::odd(a.clone()))],
                &[("xi2", Degree::odd(na)), ("x2", e)],
            ],
        )
    }

    /// The `2|1` matrix `[[x11, x12, xi13], [x21, x22, xi23], [xi31, xi32, x33]]`
    /// with degrees built from `a` and `b`.
    pub fn sl21(a: &Scalar, b: &Scalar) -> Result<Self> {
        let e = Degree::zero();
        let ev = |w: Scalar| Degree::even(w);
        let od = |w: Scalar| Degree::odd(w);
        let ab = a + b;
        MatrixGroup::build(
            "SL21",
            2,
            1,
            &[
                &[("x11", e.clone()), ("x12", ev(a.clone())), ("xi13", od(ab.clone()))],
                &[("x21", ev(-a.clone())), ("x22", e.clone()), ("xi23", od(b.clone()))],
                &[("xi31", od(-ab)), ("xi32", od(-b.clone())), ("x33", e)],
            ],
        )
    }

    pub fn generic(&self) -> Result<SuperMatrix> {
        let names: Vec<Vec<&str>> = self.names.iter().map(|r| r.iter().map(String::as_str).collect()).collect();
        let rows: Vec<&[&str]> = names.iter().map(Vec::as_slice).collect();
        SuperMatrix::of_coordinates(&self.chart, self.even, self.odd, &rows)
    }

    /// `k` copies of the group chart and the generic matrix on each copy.
    pub fn copies(&self, k: usize) -> Result<(Chart, Vec<SuperMatrix>)> {
        let x = self.generic()?;
        let mut chart = self.chart.clone();
        let mut maps: Vec<Vec<usize>> = vec![(0..self.chart.dim()).collect()];
        for _ in 1..k {
            let (c, map) = product_chart(&chart, &self.chart)?;
            chart = c;
            maps.push(map);
        }
        let ms = maps.iter().map(|m| x.relabel(&chart, m)).collect();
        Ok((chart, ms))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub group: String,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    fn push(&mut self, name: &str, violations: Vec<String>) {
        self.checks.push(Check {
            name: name.to_string(),
            pass: violations.is_empty(),
            detail: violations,
        });
    }

    fn push_bool(&mut self, name: &str, pass: bool) {
        self.checks.push(Check {
            name: name.to_string(),
            pass,
            detail: Vec::new(),
        });
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "group: {}", self.group)?;
        for c in &self.checks {
            writeln!(f, "{}: {}", c.name, if c.pass { "pass" } else { "FAIL" })?;
            for d in &c.detail {
                writeln!(f, "  {d}")?;
            }
        }
        write!(f, "result: {}", if self.all_pass() { "all pass" } else { "violations" })
    }
}

fn strings(v: Vec<DegreeViolation>) -> Vec<String> {
    v.into_iter().map(|d| d.to_string()).collect()
}

fn sub_degrees(d: &[Vec<Degree>], rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Vec<Vec<Degree>> {
    rows.map(|i| d[i][cols.clone()].to_vec()).collect()
}

/// Multiplication, inverse and unit as homogeneity morphisms, associativity
/// and `X X^-1 = X^-1 X = I`, all on symbolic entries. `declared` replaces
/// the degree matrix the checks compare against.
pub fn supergroup_axiom_suite_with(group: &MatrixGroup, declared: &[Vec<Degree>]) -> Result<SuiteReport> {
    let mut rep = SuiteReport {
        group: group.name.clone(),
        checks: Vec::new(),
    };
    let x = group.generic()?;
    rep.push("coordinates", strings(degree_check(x.entries(), declared)));

    let (_, xy) = group.copies(2)?;
    let prod = matmul(&xy[0], &xy[1])?;
    rep.push("multiplication", strings(degree_check(prod.entries(), declared)));

    let inv = block_inverse(&x)?;
    rep.push("inverse", strings(degree_check(inv.entries(), declared)));
    rep.push_bool("x * x^-1 = 1", matmul(&x, &inv)?.is_identity());
    rep.push_bool("x^-1 * x = 1", matmul(&inv, &x)?.is_identity());

    let unit = SuperMatrix::identity(&group.chart, group.even, group.odd);
    rep.push("unit", strings(degree_check(unit.entries(), declared)));
    let e: Vec<Scalar> = group
        .chart
        .coordinates()
        .iter()
        .map(|c| {
            let diag = group.names.iter().enumerate().any(|(i, r)| r[i] == c.name);
            Scalar::from_integer(i64::from(diag).into())
        })
        .collect();
    rep.push_bool("nabla vanishes at e", group.chart.with_base(&e)?.weight_field_vanishes_at_base());

    let (_, xyz) = group.copies(3)?;
    let left = matmul(&matmul(&xyz[0], &xyz[1])?, &xyz[2])?;
    let right = matmul(&xyz[0], &matmul(&xyz[1], &xyz[2])?)?;
    rep.push_bool("associativity", left == right);

    let even = group.even;
    let a_deg = sub_degrees(declared, 0..even, 0..even);
    rep.push("A - B D^-1 C", strings(degree_check(&schur_complement(&x)?, &a_deg)));
    let ber = berezinian(&x)?;
    rep.push(
        "berezinian",
        strings(degree_check(&vec![vec![ber]], &[vec![Degree::zero()]])),
    );
    let ber_xy = berezinian(&prod)?;
    let ber_x = berezinian(&xy[0])?;
    let ber_y = berezinian(&xy[1])?;
    rep.push_bool("ber(xy) = ber(x) ber(y)", ber_xy == &ber_x * &ber_y);
    Ok(rep)
}

pub fn supergroup_axiom_suite(group: &MatrixGroup) -> Result<SuiteReport> {
    supergroup_axiom_suite_with(group, &group.degrees)
}

/// `X` with its last column multiplied by `ber(X)`, so that the result has
/// Berezinian 1.
pub fn unimodular(x: &SuperMatrix) -> Result<SuperMatrix> {
    let ber = berezinian(x)?;
    let n = x.size();
    let mut entries = x.entries.clone();
    for row in entries.iter_mut() {
        row[n - 1] = &row[n - 1] * &ber;
    }
    SuperMatrix::new(&x.chart, x.even, x.odd, entries)
}

pub fn format_degrees(d: &[Vec<Degree>]) -> String {
    d.iter()
        .map(|r| {
            let cells: Vec<String> = r
                .iter()
                .map(|g| format!("({},{})", g.parity.bit(), ScalarDisplay(&g.weight)))
                .collect();
            format!("[{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn gl11_product_entries() {
        let g = MatrixGroup::gl11(&int(1)).unwrap();
        let (c, xy) = g.copies(2).unwrap();
        let p = matmul(&xy[0], &xy[1]).unwrap();
        let v = |n: &str| c.coord(n).unwrap();
        let (x1, x2, xi1, xi2) = (v("x1"), v("x2"), v("xi1"), v("xi2"));
        let (y1, y2, eta1, eta2) = (v("x1_2"), v("x2_2"), v("xi1_2"), v("xi2_2"));
        assert_eq!(*p.entry(0, 0), &(&x1 * &y1) + &(&xi1 * &eta2));
        assert_eq!(*p.entry(0, 1), &(&x1 * &eta1) + &(&xi1 * &y2));
        assert_eq!(*p.entry(1, 0), &(&xi2 * &y1) + &(&x2 * &eta2));
        assert_eq!(*p.entry(1, 1), &(&xi2 * &eta1) + &(&x2 * &y2));
    }

    #[test]
    fn gl11_inverse_display() {
        let g = MatrixGroup::gl11(&int(1)).unwrap();
        let c = &g.chart;
        let v = |n: &str| c.coord(n).unwrap();
        let (x1, x2, xi1, xi2) = (v("x1"), v("x2"), v("xi1"), v("xi2"));
        let inv = block_inverse(&g.generic().unwrap()).unwrap();
        let s1 = (&x1 - &(&(&xi1 * &x2.invert().unwrap()) * &xi2)).invert().unwrap();
        let s2 = (&x2 - &(&(&xi2 * &x1.invert().unwrap()) * &xi1)).invert().unwrap();
        assert_eq!(*inv.entry(0, 0), s1);
        assert_eq!(*inv.entry(1, 1), s2);
        assert_eq!(*inv.entry(0, 1), -(&(&x1.invert().unwrap() * &xi1) * &s2));
        assert_eq!(*inv.entry(1, 0), -(&(&x2.invert().unwrap() * &xi2) * &s1));
    }

    #[test]
    fn even_inverse_and_identity() {
        let c = Chart::from_spec(&[("x", Parity::Even, 0), ("y", Parity::Even, 0)]).unwrap();
        let x = c.coord("x").unwrap();
        let y = c.coord("y").unwrap();
        let z = SuperFunction::zero(&c);
        let m = SuperMatrix::new(&c, 2, 0, vec![vec![x.clone(), z.clone()], vec![z.clone(), y.clone()]]).unwrap();
        let inv = block_inverse(&m).unwrap();
        assert_eq!(*inv.entry(0, 0), x.invert().unwrap());
        assert_eq!(*inv.entry(1, 1), y.invert().unwrap());
        let i = SuperMatrix::identity(&c, 1, 1);
        assert!(block_inverse(&i).unwrap().is_identity());
        assert!(berezinian(&i).unwrap().is_one());
        assert!(matmul(&m, &SuperMatrix::identity(&c, 2, 0)).unwrap() == m);
        assert_eq!(berezinian(&m).unwrap(), &x * &y);
    }

    #[test]
    fn parity_pattern_enforced() {
        let c = Chart::from_spec(&[("x", Parity::Even, 0), ("xi", Parity::Odd, 0)]).unwrap();
        let x = c.coord("x").unwrap();
        assert!(SuperMatrix::new(&c, 1, 1, vec![vec![x.clone(), x.clone()], vec![x.clone(), x]]).is_err());
    }

    #[test]
    fn suites_pass() {
        let r = supergroup_axiom_suite(&MatrixGroup::gl11(&int(1)).unwrap()).unwrap();
        assert!(r.all_pass(), "{r}");
        let r = supergroup_axiom_suite(&MatrixGroup::sl21(&int(1), &int(2)).unwrap()).unwrap();
        assert!(r.all_pass(), "{r}");
    }

    #[test]
    fn inconsistent_declaration_reported() {
        let g = MatrixGroup::gl11(&int(1)).unwrap();
        let mut bad = g.degrees.clone();
        bad[0][1] = Degree::odd(int(2));
        let r = supergroup_axiom_suite_with(&g, &bad).unwrap();
        assert!(!r.all_pass());
        assert!(r.checks.iter().any(|c| c.name == "multiplication" && !c.pass));
    }

    #[test]
    fn unimodular_sample() {
        let g = MatrixGroup::sl21(&int(1), &int(2)).unwrap();
        let x = unimodular(&g.generic().unwrap()).unwrap();
        assert!(berezinian(&x).unwrap().is_one());
    }
}
