mod common;

use num_bigint::BigInt;
use pacert::polynomial::{cyclotomic_poly, is_cyclotomic_product, sym, totient};
use pacert::IntPoly;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn cyclotomic_table_matches_mobius_formula() {
    for n in 1..=150u64 {
        let ours: IntPoly = cyclotomic_poly(n);
        assert_eq!(
            common::from_int_poly(&ours),
            common::cyclotomic_oracle(n),
            "n = {n}"
        );
        assert_eq!(ours.degree(), Some(totient(n) as usize));
    }
}

#[test]
fn cyclotomic_factorization_recovers_planted_indices() {
    let mut rng = StdRng::seed_from_u64(0x5eed_c1c1);
    for _ in 0..200 {
        let k = rng.gen_range(1..=4);
        let mut idx: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=40)).collect();
        idx.sort_unstable();
        let prod = idx.iter().fold(vec![1i128], |acc, &n| {
            common::mul(&acc, &common::cyclotomic_oracle(n))
        });
        let t = is_cyclotomic_product(&common::to_int_poly(&prod)).unwrap();
        assert!(t.is_product, "{idx:?}");
        assert_eq!(t.factors, idx);

        // a constant term of 2 or 4 is not a unit
        let mut bumped = prod.clone();
        bumped[0] += 3;
        assert!(
            !is_cyclotomic_product(&common::to_int_poly(&bumped))
                .unwrap()
                .is_product
        );
    }
}

#[test]
fn sym_matches_binomial_expansion() {
    let mut rng = StdRng::seed_from_u64(0x5eed_5e11);
    for _ in 0..300 {
        let d = rng.gen_range(1..=10);
        let mut q: Vec<i128> = (0..d).map(|_| rng.gen_range(-1000..=1000)).collect();
        q.push(1);
        let ours = sym(&common::to_int_poly(&q)).unwrap();
        assert_eq!(common::from_int_poly(ours.poly()), common::sym_oracle(&q));
    }
    let big = IntPoly::new(vec![BigInt::from(10).pow(40), BigInt::from(1)]);
    let r = sym(&big).unwrap();
    assert_eq!(r.poly().coeffs()[1], BigInt::from(10).pow(40));
}
