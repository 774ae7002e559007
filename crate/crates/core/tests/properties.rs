use proptest::prelude::*;
use weak_hopf::catalog::{self, BUILTIN_NAMES};
use weak_hopf::corruption::{Corruption, Entry};
use weak_hopf::integrals::{left_integrals, right_integrals};
use weak_hopf::io::{from_json, to_json};
use weak_hopf::wha::{direct_sum, verify_all};
use weak_hopf::{Field, Scalar, WeakHopfAlgebra};

const PRIMES: [u64; 4] = [3, 5, 7, 11];

fn name() -> impl Strategy<Value = &'static str> {
    prop::sample::select(BUILTIN_NAMES.iter().copied().filter(|n| *n != "pairgpd3").collect::<Vec<_>>())
}

fn field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(Field::Rational), prop::sample::select(PRIMES.to_vec()).prop_map(Field::Prime)]
}

fn element(h: &WeakHopfAlgebra, coeffs: &[i64]) -> Vec<Scalar> {
    (0..h.dim()).map(|i| h.field().from_i64(coeffs[i % coeffs.len()])).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn comultiplication_is_multiplicative(n in name(), f in field(), a in prop::collection::vec(-3i64..4, 1..10), b in prop::collection::vec(-3i64..4, 1..10)) {
        let h = catalog::builtin(n, f).unwrap();
        let (x, y) = (element(&h, &a), element(&h, &b));
        prop_assert_eq!(h.delta(&h.mul(&x, &y)), h.tensor_mul(2, &h.delta(&x), &h.delta(&y)));
    }

    #[test]
    fn antipode_reverses_products(n in name(), f in field(), a in prop::collection::vec(-3i64..4, 1..10), b in prop::collection::vec(-3i64..4, 1..10)) {
        let h = catalog::builtin(n, f).unwrap();
        let (x, y) = (element(&h, &a), element(&h, &b));
        prop_assert_eq!(h.antipode(&h.mul(&x, &y)), h.mul(&h.antipode(&y), &h.antipode(&x)));
    }

    #[test]
    fn counital_maps_are_idempotent_and_swapped_by_s(n in name(), f in field(), a in prop::collection::vec(-3i64..4, 1..10)) {
        let h = catalog::builtin(n, f).unwrap();
        let x = element(&h, &a);
        let t = h.eps_t(&x);
        let s = h.eps_s(&x);
        prop_assert_eq!(h.eps_t(&t), t.clone());
        prop_assert_eq!(h.eps_s(&s), s);
        prop_assert_eq!(h.antipode(&t), h.eps_s(&h.antipode(&x)));
    }

    #[test]
    fn integral_dimensions_add_over_sums(a in name(), b in name(), f in field()) {
        let (ha, hb) = (catalog::builtin(a, f).unwrap(), catalog::builtin(b, f).unwrap());
        let s = direct_sum(&ha, &hb).unwrap();
        prop_assert!(verify_all(&s).passed);
        prop_assert_eq!(left_integrals(&s).unwrap().dim(), left_integrals(&ha).unwrap().dim() + left_integrals(&hb).unwrap().dim());
        prop_assert_eq!(right_integrals(&s).unwrap().dim(), right_integrals(&ha).unwrap().dim() + right_integrals(&hb).unwrap().dim());
    }

    #[test]
    fn files_roundtrip(a in name(), b in name(), f in field()) {
        let s = direct_sum(&catalog::builtin(a, f).unwrap(), &catalog::builtin(b, f).unwrap()).unwrap();
        prop_assert_eq!(from_json(&to_json(&s)).unwrap(), s);
    }

    #[test]
    fn unique_structure_changes_are_detected(n in name(), i in 0usize..9, j in 0usize..9, which in 0usize..3, delta in 1i64..4) {
        let h = catalog::builtin(n, Field::Rational).unwrap();
        let (i, j) = (i % h.dim(), j % h.dim());
        let (entry, old) = match which {
            0 => (Entry::Unit(i), h.one()[i].clone()),
            1 => (Entry::Counit(i), h.counit_vec()[i].clone()),
            _ => (Entry::Antipode(i, j), h.antipode_matrix()[(i, j)].clone()),
        };
        let value = (&old + &Field::Rational.from_i64(delta)).to_string();
        let value: &'static str = Box::leak(value.into_boxed_str());
        let c = Corruption { target: "", base: n, entry, value, failing: &[] };
        let bad = c.apply(Field::Rational).unwrap().to_algebra().unwrap();
        prop_assert!(!verify_all(&bad).passed);
    }
}
