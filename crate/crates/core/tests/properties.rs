use nichols_core::braided::MonomialBraiding;
use nichols_core::exactla::{MonomialOperator, SparseMatrix};
use nichols_core::json::{braiding_from_json, braiding_to_json};
use nichols_core::nichols::{c_i, graded_dims};
use nichols_core::suzuki::{v_abe, VAbeParams};
use nichols_core::{CycloField, CycloNum};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const M: u32 = 12;

fn field() -> CycloField {
    CycloField::new(M).unwrap()
}

fn elem(f: &CycloField, cs: &[(i64, i64)]) -> CycloNum {
    let coeffs: Vec<BigRational> = cs
        .iter()
        .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
        .collect();
    f.from_coeffs(&coeffs).unwrap()
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in coeffs(), b in coeffs(), c in coeffs()) {
        let f = field();
        let (x, y, z) = (elem(&f, &a), elem(&f, &b), elem(&f, &c));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x - &x, f.zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn root_powers_add(i in -40i64..40, j in -40i64..40) {
        let f = field();
        prop_assert_eq!(&f.root_power(i) * &f.root_power(j), f.root_power(i + j));
        prop_assert_eq!(f.root_power(i).pow(3).unwrap(), f.root_power(3 * i));
        let r = i.rem_euclid(M as i64);
        prop_assert_eq!(f.root_power(i).root_order(), Some(M / num_integer::gcd(M, r as u32)));
    }

    #[test]
    fn embedding_is_a_homomorphism(a in prop::collection::vec((-9i64..=9, 1i64..=4), 2), b in prop::collection::vec((-9i64..=9, 1i64..=4), 2)) {
        let small = CycloField::new(3).unwrap();
        let big = CycloField::new(12).unwrap();
        let (x, y) = (elem(&small, &a), elem(&small, &b));
        let e = |v: &CycloNum| v.embed(&big).unwrap();
        prop_assert_eq!(e(&(&x + &y)), &e(&x) + &e(&y));
        prop_assert_eq!(e(&(&x * &y)), &e(&x) * &e(&y));
        prop_assert_eq!(e(&small.root_power(1)), big.root_power(4));
    }

    #[test]
    fn rank_ignores_transpose_and_row_order(entries in prop::collection::vec(-3i64..=3, 20), shift in 0usize..4) {
        let f = field();
        let dense: Vec<Vec<CycloNum>> = entries
            .chunks(5)
            .map(|row| row.iter().map(|&v| if v.abs() == 3 { f.root_power(v) } else { f.from_int(v) }).collect())
            .collect();
        let m = SparseMatrix::from_dense(&f, &dense).unwrap();
        let r = m.rank().unwrap();
        prop_assert_eq!(m.transpose().rank().unwrap(), r);
        let mut rotated = dense.clone();
        rotated.rotate_left(shift);
        prop_assert_eq!(SparseMatrix::from_dense(&f, &rotated).unwrap().rank().unwrap(), r);
        prop_assert!(r <= 4);
    }

    #[test]
    fn vabe_braid_relations(a in 0i64..12, b in 0i64..12, e in 0i64..12) {
        let f = field();
        let c = v_abe(&VAbeParams::new(f.root_power(a), f.root_power(b), f.root_power(e)).unwrap()).unwrap();
        prop_assert!(c.check_braid_equation());
        let n = 4;
        let (c1, c2, c3) = (c_i(&c, n, 1).unwrap(), c_i(&c, n, 2).unwrap(), c_i(&c, n, 3).unwrap());
        let comp = |x: &MonomialOperator, y: &MonomialOperator| MonomialOperator::compose(x, y).unwrap();
        prop_assert_eq!(comp(&c1, &c3), comp(&c3, &c1));
        prop_assert_eq!(comp(&comp(&c2, &c3), &c2), comp(&comp(&c3, &c2), &c3));
    }

    #[test]
    fn braiding_json_round_trip(a in 0i64..12, b in 0i64..12, e in 0i64..12) {
        let f = field();
        let c = v_abe(&VAbeParams::new(f.root_power(a), f.root_power(b), f.root_power(e)).unwrap()).unwrap();
        let back = braiding_from_json(&braiding_to_json(&c)).unwrap();
        prop_assert_eq!(back, c);
    }

    #[test]
    fn diagonal_dims_depend_on_products_only(q11 in 0i64..12, q12 in 0i64..12, q21 in 0i64..12, q22 in 0i64..12, s in 0i64..12) {
        // Twisting by (q12, q21) -> (q12 z^s, q21 z^-s) keeps the Nichols algebra.
        let f = field();
        let z = |k: i64| f.root_power(k);
        let c = MonomialBraiding::diagonal(&f, &[vec![z(q11), z(q12)], vec![z(q21), z(q22)]]).unwrap();
        let t = MonomialBraiding::diagonal(&f, &[vec![z(q11), z(q12 + s)], vec![z(q21 - s), z(q22)]]).unwrap();
        prop_assert_eq!(graded_dims(&c, 4).unwrap().dims, graded_dims(&t, 4).unwrap().dims);
    }
}
