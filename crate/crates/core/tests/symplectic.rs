use homsuper::random::{self, GenConfig};
use homsuper::symplectic::musical_degrees_hold;
use homsuper::{
    canonical_symplectic, int, normal_form, tensor_weight, Chart, Degree, Parity, Scalar,
    SuperForm, Tensor, WeightAnswer,
};
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Rank by plain Gaussian elimination with full pivoting on a copy of the
/// entries, ignoring all grading.
fn oracle_rank(rows: Vec<Vec<Scalar>>) -> usize {
    let mut a = rows;
    let n = a.len();
    let mut rank = 0;
    loop {
        let mut pivot = None;
        for i in rank..n {
            for j in 0..n {
                if !a[i][j].is_zero() {
                    pivot = Some((i, j));
                    break;
                }
            }
            if pivot.is_some() {
                break;
            }
        }
        let Some((pi, pj)) = pivot else { return rank };
        a.swap(rank, pi);
        for i in 0..n {
            if i != rank && !a[i][pj].is_zero() {
                let f = &a[i][pj] / &a[rank][pj];
                for j in 0..n {
                    let v = &a[rank][j] * &f;
                    a[i][j] -= v;
                }
            }
        }
        for j in 0..n {
            a[rank][j] = Scalar::zero();
        }
        rank += 1;
        if rank == n {
            return rank;
        }
    }
}

#[test]
fn normal_form_on_random_skew_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let mut ys_seen = 0;
    for _ in 0..300 {
        let g = random::skew_form(&mut rng, 8);
        let b = normal_form(&g);
        let p = &b.change;
        assert_eq!(&(&p.transpose() * g.matrix()) * p, b.model());
        assert!(p.inverse().is_some());
        let rows = (0..g.dim()).map(|i| g.matrix().row(i).to_vec()).collect();
        assert_eq!(b.rank(), oracle_rank(rows));
        assert_eq!(b.rank() + b.kernel, g.dim());
        assert!(b.degree_constraints_hold());
        if !b.signs.is_empty() {
            assert_eq!(g.degree().parity, Parity::Even);
            ys_seen += 1;
        }
        assert!(b.scales.iter().all(|c| *c > Scalar::zero()));
    }
    assert!(ys_seen > 10);
}

#[test]
fn canonical_symplectic_forms() {
    let bases = [
        Chart::from_spec(&[("x", Parity::Even, 0)]).unwrap(),
        Chart::from_spec(&[("x", Parity::Even, 1), ("xi", Parity::Odd, 2)]).unwrap(),
        Chart::from_spec(&[("x", Parity::Even, -1), ("y", Parity::Even, 2), ("xi", Parity::Odd, 1)]).unwrap(),
    ];
    let lambdas = [
        Degree::even(int(0)),
        Degree::odd(int(0)),
        Degree::even(int(1)),
        Degree::odd(int(2)),
    ];
    for c in &bases {
        for l in &lambdas {
            let cf = canonical_symplectic(c, l).unwrap();
            assert_eq!(cf.omega, -cf.theta.d());
            assert!(cf.omega.is_closed());
            assert_eq!(tensor_weight(Tensor::Form(&cf.omega)), WeightAnswer::Degree(l.clone()));
            assert_eq!(tensor_weight(Tensor::Form(&cf.theta)), WeightAnswer::Degree(l.clone()));
            assert_eq!(cf.omega.parity(), Some(l.parity));
        }
    }
}

#[test]
fn musical_degree_bookkeeping() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let cfg = GenConfig {
        laurent: true,
        ..GenConfig::default()
    };
    for _ in 0..100 {
        let c = random::chart(&mut rng);
        let (w, deg): (SuperForm, Degree) = random::form(&mut rng, &c, 2, &cfg);
        assert!(musical_degrees_hold(&w, &deg).unwrap());
    }
}
