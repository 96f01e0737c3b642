use homsuper::random::{self, GenConfig};
use homsuper::{parse_expression, parse_field, parse_form, parse_function, Error, Expr};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(600))]

    #[test]
    fn print_parse_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = GenConfig { laurent: rng.gen_bool(0.3), ..GenConfig::default() };
        let chart = random::chart(&mut rng);
        match rng.gen_range(0..4) {
            0 => {
                let f = random::function(&mut rng, &chart, &cfg);
                prop_assert_eq!(parse_function(&f.to_string(), &chart).unwrap(), f);
            }
            1 => {
                let num = random::function(&mut rng, &chart, &cfg);
                let den = random::invertible_function(&mut rng, &chart, &cfg);
                let f = &num * &den.invert().unwrap();
                prop_assert_eq!(parse_function(&f.to_string(), &chart).unwrap(), f);
            }
            2 => {
                let r = rng.gen_range(0..=3);
                let (w, _) = random::form(&mut rng, &chart, r, &cfg);
                prop_assert_eq!(parse_form(&w.to_string(), &chart).unwrap(), w);
            }
            _ => {
                let (x, _) = random::field(&mut rng, &chart, &cfg);
                prop_assert_eq!(parse_field(&x.to_string(), &chart).unwrap(), x);
            }
        }
    }
}

#[test]
fn printing_is_canonical() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let cfg = GenConfig::default();
    for _ in 0..100 {
        let chart = random::chart(&mut rng);
        let f = random::function(&mut rng, &chart, &cfg);
        let g = random::function(&mut rng, &chart, &cfg);
        let sum = &f + &g;
        let rearranged = format!("{g} + ({f})");
        assert_eq!(parse_function(&rearranged, &chart).unwrap().to_string(), sum.to_string());
    }
}

#[test]
fn parse_errors_carry_columns() {
    let chart = homsuper::parse_chart("x E 1\nxi O 2\n").unwrap();
    for (text, column) in [("x + ", 5), ("x * * xi", 5), ("q + x", 1), ("1.5*x", 2), ("(x + xi", 8)] {
        match parse_expression(text, &chart) {
            Err(Error::Parse { line, column: c, .. }) => {
                assert_eq!(line, 1, "{text}");
                assert_eq!(c, column, "{text}");
            }
            other => panic!("{text}: expected a parse error, got {other:?}"),
        }
    }
    assert!(matches!(parse_expression("d(x)^@x", &chart), Err(_)));
    assert!(matches!(parse_expression("x*@x", &chart), Ok(Expr::Field(_))));
}
