mod common;

use num_bigint::BigInt;
use pacert::homology::{pairing, twist_action, HClass, MCWord, TwistLetter};
use pacert::polynomial::{
    desym, kronecker_irreducible, poly_mul, sym, Decision, Irreducibility, Poly,
};
use pacert::symplectic::{charpoly, elementary_se, factored_bq, is_symplectic, Matrix};
use pacert::{IntMatrix, IntPoly, SymplecticPoly};
use proptest::prelude::*;

type Word = MCWord<BigInt>;

fn monic(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg).prop_map(|mut c| {
        c.push(1);
        IntPoly::from_i64s(&c)
    })
}

fn symplectic_poly() -> impl Strategy<Value = SymplecticPoly> {
    (1usize..=5)
        .prop_flat_map(|g| prop::collection::vec(-40i64..=40, g))
        .prop_map(|half| {
            let g = half.len();
            let mut desc = vec![1];
            desc.extend(&half);
            desc.extend(half[..g - 1].iter().rev());
            desc.push(1);
            let asc: Vec<i64> = desc.into_iter().rev().collect();
            SymplecticPoly::new(IntPoly::from_i64s(&asc)).unwrap()
        })
}

/// A primitive class in genus 3 with small entries.
fn class3() -> impl Strategy<Value = HClass> {
    prop::collection::vec(-2i64..=2, 6)
        .prop_map(|v| HClass::from_vec(3, v).unwrap())
        .prop_filter("primitive", HClass::is_primitive)
}

fn word3(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((class3(), prop_oneof![-3i64..=-1, 1i64..=3]), 0..=max_len).prop_map(
        |ls| {
            let letters = ls
                .into_iter()
                .map(|(c, e)| TwistLetter::new(c, BigInt::from(e)).unwrap())
                .collect();
            MCWord::from_letters(3, letters).unwrap()
        },
    )
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9i64..=9, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sym_is_multiplicative(p in monic(6, 30), q in monic(6, 30)) {
        let lhs = sym(&poly_mul(&p, &q)).unwrap().into_poly();
        let rhs = &sym(&p).unwrap().into_poly() * &sym(&q).unwrap().into_poly();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn desym_inverts_sym(q in monic(8, 50)) {
        prop_assert_eq!(desym(&sym(&q).unwrap()), q);
    }

    #[test]
    fn sym_inverts_desym(r in symplectic_poly()) {
        prop_assert_eq!(sym(&desym(&r)).unwrap(), r);
    }

    #[test]
    fn charpoly_matches_cofactor_expansion(m in small_matrix()) {
        let rows: Vec<&[i64]> = m.iter().map(Vec::as_slice).collect();
        let ours = charpoly(&IntMatrix::from_i64_rows(&rows));
        prop_assert_eq!(ours, common::to_int_poly(&common::cofactor_charpoly(&m)));
    }

    #[test]
    fn bq_realizes_polynomial(r in symplectic_poly()) {
        let (spec, bq) = factored_bq(&r);
        prop_assert!(is_symplectic(&bq).unwrap());
        prop_assert_eq!(charpoly(&bq), r.poly().clone());
        prop_assert_eq!(spec.evaluate().unwrap(), bq);
    }

    #[test]
    fn se_powers(i in 1usize..=6, j in 1usize..=6, k in -20i64..=20) {
        prop_assume!(i != j);
        let m = elementary_se(3, i, j, BigInt::from(k)).unwrap();
        prop_assert!(is_symplectic(&m).unwrap());
        let one = elementary_se(3, i, j, BigInt::from(1)).unwrap();
        let pow = if k >= 0 {
            one.pow(k as u32)
        } else {
            elementary_se(3, i, j, BigInt::from(-1)).unwrap().pow((-k) as u32)
        };
        prop_assert_eq!(m, pow);
    }

    #[test]
    fn psi_is_a_homomorphism(w1 in word3(6), w2 in word3(6)) {
        let joined = w1.concat(&w2).unwrap();
        prop_assert_eq!(joined.psi(), &w1.psi() * &w2.psi());
        prop_assert!(is_symplectic(&joined.psi()).unwrap());
        prop_assert!((&w1.psi() * &w1.inverse().psi()).is_identity());
    }

    #[test]
    fn psi_equals_product_of_letter_matrices(w in word3(10)) {
        let product = w
            .letters()
            .iter()
            .fold(IntMatrix::identity(6), |acc, l| &acc * &l.matrix());
        prop_assert_eq!(w.psi(), product);
    }

    #[test]
    fn word_text_round_trip(w in word3(8)) {
        let back = Word::parse(3, &w.to_string()).unwrap();
        prop_assert_eq!(back.psi(), w.psi());
        prop_assert_eq!(back.to_string(), w.to_string());
    }

    #[test]
    fn twist_fixes_its_class_and_preserves_pairing(c in class3(), u in class3(), v in class3(), k in -4i64..=4) {
        let t: IntMatrix = twist_action(&c, BigInt::from(k)).unwrap();
        let apply = |x: &HClass| -> HClass {
            let xs: Vec<BigInt> = x.vec().iter().map(|&e| BigInt::from(e)).collect();
            let ys: Vec<i64> = t.apply(&xs).iter().map(|e| i64::try_from(e).unwrap()).collect();
            HClass::from_vec(3, ys).unwrap()
        };
        prop_assert_eq!(apply(&c), c.clone());
        prop_assert_eq!(pairing(&apply(&u), &apply(&v)).unwrap(), pairing(&u, &v).unwrap());
        // v ↦ v + k⟨v, c⟩c
        let expect = &u + &c.scale(k * pairing(&u, &c).unwrap());
        prop_assert_eq!(apply(&u), expect);
    }

    #[test]
    fn kronecker_finds_planted_factors(p in monic(3, 9), q in monic(3, 9)) {
        let pq = poly_mul(&p, &q);
        match kronecker_irreducible(&pq, 5_000_000).unwrap() {
            Irreducibility::Factor(f) => {
                let (_, rem) = pq.div_rem_monic(&f);
                prop_assert!(rem.is_zero());
                prop_assert!(f.degree().unwrap() >= 1 && f.degree() < pq.degree());
            }
            other => prop_assert_eq!(other.decision(), Decision::Inconclusive),
        }
    }
}

#[test]
fn machine_integer_instantiation_agrees() {
    // the generic core also runs over i64
    let r: Poly<i64> = Poly::from_i64s(&[1, 6, 5, 6, 1]);
    let q = pacert::polynomial::desym_poly(&r).unwrap();
    assert_eq!(q, Poly::from_i64s(&[3, 6, 1]));
    let m: Matrix<i64> = Matrix::from_i64_rows(&[&[2, 1], &[1, 1]]);
    assert_eq!(charpoly(&m), Poly::from_i64s(&[1, -3, 1]));
}
