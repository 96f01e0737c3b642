use homsuper::random::{self, GenConfig};
use homsuper::supermatrix::{degree_check, unimodular};
use homsuper::{
    berezinian, block_inverse, int, matmul, supergroup_axiom_suite, Chart, Degree, MatrixGroup,
    Parity, SuperMatrix,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn chart() -> Chart {
    Chart::from_spec(&[
        ("x", Parity::Even, 0),
        ("y", Parity::Even, 0),
        ("xi", Parity::Odd, 0),
        ("eta", Parity::Odd, 0),
        ("zeta", Parity::Odd, 0),
    ])
    .unwrap()
}

fn cfg() -> GenConfig {
    GenConfig {
        max_degree: 1,
        max_terms: 2,
        coeff_range: 3,
        laurent: false,
    }
}

fn invertible(rng: &mut ChaCha8Rng, c: &Chart) -> (SuperMatrix, SuperMatrix) {
    loop {
        let x = random::supermatrix(rng, c, 2, 2, &cfg());
        if let Ok(inv) = block_inverse(&x) {
            return (x, inv);
        }
    }
}

#[test]
fn berezinian_is_multiplicative() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let c = chart();
    for _ in 0..100 {
        let (x, _) = invertible(&mut rng, &c);
        let (y, _) = invertible(&mut rng, &c);
        let xy = matmul(&x, &y).unwrap();
        assert_eq!(
            berezinian(&xy).unwrap(),
            &berezinian(&x).unwrap() * &berezinian(&y).unwrap()
        );
    }
}

#[test]
fn block_inverse_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let c = chart();
    for _ in 0..50 {
        let (x, inv) = invertible(&mut rng, &c);
        assert!(matmul(&x, &inv).unwrap().is_identity());
        assert!(matmul(&inv, &x).unwrap().is_identity());
        let b = berezinian(&x).unwrap();
        assert!((&b * &berezinian(&inv).unwrap()).is_one());
    }
}

#[test]
fn associativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let c = chart();
    for _ in 0..30 {
        let x = random::supermatrix(&mut rng, &c, 2, 2, &cfg());
        let y = random::supermatrix(&mut rng, &c, 2, 2, &cfg());
        let z = random::supermatrix(&mut rng, &c, 2, 2, &cfg());
        let l = matmul(&matmul(&x, &y).unwrap(), &z).unwrap();
        let r = matmul(&x, &matmul(&y, &z).unwrap()).unwrap();
        assert_eq!(l, r);
        assert_eq!(matmul(&x, &SuperMatrix::identity(&c, 2, 2)).unwrap(), x);
    }
}

#[test]
fn named_suites() {
    let gl = MatrixGroup::gl11(&int(1)).unwrap();
    assert!(supergroup_axiom_suite(&gl).unwrap().all_pass());
    let sl = MatrixGroup::sl21(&int(1), &int(2)).unwrap();
    let rep = supergroup_axiom_suite(&sl).unwrap();
    assert!(rep.all_pass(), "{rep}");
    // other rational parameters
    let gl = MatrixGroup::gl11(&homsuper::frac(-3, 2)).unwrap();
    assert!(supergroup_axiom_suite(&gl).unwrap().all_pass());
}

#[test]
fn sl21_product_blocks() {
    let sl = MatrixGroup::sl21(&int(1), &int(2)).unwrap();
    let (_, xy) = sl.copies(2).unwrap();
    let p = matmul(&xy[0], &xy[1]).unwrap();
    let d = |w: i64| Degree::even(int(w));
    let o = |w: i64| Degree::odd(int(w));
    // the AA' + BC' block and the AB' + BD' column
    let a_block: Vec<Vec<_>> = (0..2).map(|i| p.entries()[i][..2].to_vec()).collect();
    assert!(degree_check(&a_block, &[vec![d(0), d(1)], vec![d(-1), d(0)]]).is_empty());
    let b_col: Vec<Vec<_>> = (0..2).map(|i| vec![p.entry(i, 2).clone()]).collect();
    assert!(degree_check(&b_col, &[vec![o(3)], vec![o(2)]]).is_empty());
}

#[test]
fn unimodular_samples() {
    let sl = MatrixGroup::sl21(&int(1), &int(2)).unwrap();
    let x = unimodular(&sl.generic().unwrap()).unwrap();
    assert!(berezinian(&x).unwrap().is_one());
    assert!(degree_check(x.entries(), &sl.degrees).is_empty());
}
