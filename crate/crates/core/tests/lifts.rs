use homsuper::random::{self, GenConfig};
use homsuper::{
    cotangent_lift, tangent_lift, weight_of, Chart, Degree, LiftedChart, Parity, VectorField,
    WeightAnswer,
};
use homsuper::{frac, int};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn shift(rng: &mut ChaCha8Rng, parity: Option<Parity>) -> Degree {
    let p = parity.unwrap_or(if rng.gen_bool(0.5) { Parity::Odd } else { Parity::Even });
    Degree::new(p, frac(rng.gen_range(-4..=4), rng.gen_range(1..=2)))
}

fn setup(rng: &mut ChaCha8Rng) -> (Chart, GenConfig) {
    let cfg = GenConfig {
        max_terms: 2,
        laurent: rng.gen_bool(0.2),
        ..GenConfig::default()
    };
    (random::chart(rng), cfg)
}

#[test]
fn tangent_lift_defining_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..150 {
        let (c, cfg) = setup(&mut rng);
        let lam = shift(&mut rng, Some(Parity::Even));
        let lc = LiftedChart::tangent(&c, &lam).unwrap();
        let (y, _) = random::field(&mut rng, &c, &cfg);
        let (alpha, _) = random::form(&mut rng, &c, 1, &cfg);
        let lhs = tangent_lift(&lc, &y).unwrap().apply(&lc.iota_form(&alpha).unwrap()).unwrap();
        let rhs = lc.iota_form(&alpha.lie(&y).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cotangent_lift_defining_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..150 {
        let (c, cfg) = setup(&mut rng);
        let lam = shift(&mut rng, None);
        let lc = LiftedChart::cotangent(&c, &lam).unwrap();
        let (y, _) = random::field(&mut rng, &c, &cfg);
        let (x, _) = random::field(&mut rng, &c, &cfg);
        let lhs = cotangent_lift(&lc, &y).unwrap().apply(&lc.iota_field(&x).unwrap()).unwrap();
        let rhs = lc.iota_field(&y.bracket(&x).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn lifts_are_bracket_morphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let (c, cfg) = setup(&mut rng);
        let lam = shift(&mut rng, None);
        let (x, _) = random::field(&mut rng, &c, &cfg);
        let (y, _) = random::field(&mut rng, &c, &cfg);
        let xy = x.bracket(&y).unwrap();
        let t = LiftedChart::tangent(&c, &lam).unwrap();
        let lifted = tangent_lift(&t, &x).unwrap().bracket(&tangent_lift(&t, &y).unwrap()).unwrap();
        assert_eq!(lifted, tangent_lift(&t, &xy).unwrap());
        let ct = LiftedChart::cotangent(&c, &lam).unwrap();
        let lifted = cotangent_lift(&ct, &x).unwrap().bracket(&cotangent_lift(&ct, &y).unwrap()).unwrap();
        assert_eq!(lifted, cotangent_lift(&ct, &xy).unwrap());
    }
}

#[test]
fn lifted_weight_field_differs_from_chart_field_by_fiber_shift() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..30 {
        let (c, _) = setup(&mut rng);
        let lam = shift(&mut rng, None);
        for lc in [LiftedChart::tangent(&c, &lam).unwrap(), LiftedChart::cotangent(&c, &lam).unwrap()] {
            let mut euler = VectorField::zero(&lc.chart);
            for a in 0..c.dim() {
                euler = &euler + &VectorField::monomial(&lc.fiber(a), lc.fiber_index(a));
            }
            let expected = &lc.lifted_weight_field().unwrap() + &euler.scale(&lam.weight);
            assert_eq!(lc.chart.weight_vector_field(), expected);
        }
    }
}

#[test]
fn pairing_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..100 {
        let (c, cfg) = setup(&mut rng);
        let (x, d) = random::field(&mut rng, &c, &cfg);
        // a field of degree d is a section of T[d]M, paired into T*[-d]M
        let lc = LiftedChart::cotangent(&c, &-&d).unwrap();
        let iota = lc.iota_field(&x).unwrap();
        assert!(weight_of(&iota).admits(&Degree::new(Parity::Even, int(0))));
        let lc = LiftedChart::cotangent(&c, &Degree::zero()).unwrap();
        match weight_of(&lc.iota_field(&x).unwrap()) {
            WeightAnswer::Degree(e) => assert_eq!(e, d),
            WeightAnswer::AnyWeight => assert!(x.is_zero()),
            WeightAnswer::NonHomogeneous => panic!("iota of a homogeneous field"),
        }
    }
}
