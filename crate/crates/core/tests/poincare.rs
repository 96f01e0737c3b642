use homsuper::random::{self, GenConfig};
use homsuper::{
    elimination_primitive, form_weight, int, poincare_primitive, Branch, Degree, Parity, SuperForm,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn exact_form(rng: &mut ChaCha8Rng, w: i64, n: usize) -> Option<(SuperForm, Degree)> {
    let cfg = GenConfig::default();
    let chart = random::chart(rng);
    let parity = Parity::from_bit(rng.gen_range(0..2usize));
    let deg = Degree::new(parity, int(w));
    let beta = random::form_of(rng, &chart, n - 1, &deg, &cfg);
    let omega = beta.d();
    if omega.is_zero() {
        None
    } else {
        Some((omega, deg))
    }
}

#[test]
fn primitive_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut done = 0;
    let mut branches = [0usize; 2];
    while done < 240 {
        let w = rng.gen_range(-2..=3i64);
        let n = rng.gen_range(1..=4usize);
        let Some((omega, deg)) = exact_form(&mut rng, w, n) else {
            continue;
        };
        let p = poincare_primitive(&omega).unwrap();
        assert_eq!(p.alpha.d(), omega, "omega = {omega:?}");
        assert_eq!(p.degree, deg);
        assert!(form_weight(&p.alpha).admits(&deg));
        assert!(p.alpha.vanishes_at_base().unwrap());
        match p.branch {
            Branch::Contraction => branches[0] += 1,
            Branch::Elimination => branches[1] += 1,
            Branch::NormalForm => unreachable!(),
        }
        done += 1;
    }
    assert!(branches[0] > 20 && branches[1] > 20, "{branches:?}");
}

#[test]
fn contraction_and_elimination_differ_by_closed_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut done = 0;
    while done < 100 {
        let w = [-2i64, -1, 1, 2, 3][rng.gen_range(0..5)];
        let n = rng.gen_range(1..=3usize);
        let Some((omega, _)) = exact_form(&mut rng, w, n) else {
            continue;
        };
        let a = poincare_primitive(&omega).unwrap();
        assert_eq!(a.branch, Branch::Contraction);
        let b = elimination_primitive(&omega).unwrap();
        assert_eq!(b.d(), omega);
        assert!((&a.alpha - &b).is_closed());
        done += 1;
    }
}
