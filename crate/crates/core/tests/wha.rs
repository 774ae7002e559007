use weak_hopf::catalog::{self, CATALOG};
use weak_hopf::wha::{self, counital::check_counital};
use weak_hopf::Field;

#[test]
fn catalog_passes_axioms() {
    for name in CATALOG {
        let h = catalog::builtin(name, Field::Rational).unwrap();
        let r = wha::verify_all(&h);
        assert!(r.passed, "{name}: {:?}", r.witnesses);
        let c = check_counital(&h);
        assert!(c.passed, "{name}: {:?}", c.witnesses);
    }
}

use weak_hopf::catalog::{group_algebra, groupoid_algebra, Groupoid};
use weak_hopf::wha::{antipode_order, counital, decompose, verify_all};

#[test]
fn groupoid_counital_subalgebras() {
    for n in 1..=3 {
        let h = catalog::pair_groupoid(Field::Rational, n).unwrap();
        let c = counital(&h).unwrap();
        assert_eq!((c.hs.dim(), c.ht.dim()), (n, n));
    }
    let c3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    let g = Groupoid::from_group(&catalog::c2_table(), vec!["1".into(), "g".into()])
        .disjoint_union(&Groupoid::from_group(&c3, vec!["e".into(), "r".into(), "r2".into()]));
    let h = groupoid_algebra(Field::Rational, &g).unwrap();
    assert!(verify_all(&h).passed);
    assert_eq!(counital(&h).unwrap().ht.dim(), 2);
    let d = decompose(&h).unwrap();
    let dims: Vec<usize> = d.summands.iter().map(|s| s.algebra.dim()).collect();
    assert_eq!(dims, vec![2, 3]);
    assert!(weak_hopf::wha::permutation_isomorphism(
        &d.summands[1].algebra,
        &group_algebra(Field::Rational, &c3, vec!["a".into(), "b".into(), "c".into()]).unwrap()
    )
    .is_some());
}

#[test]
fn sweedler_is_indecomposable() {
    let h = catalog::sweedler(Field::Rational).unwrap();
    assert_eq!(decompose(&h).unwrap().summands.len(), 1);
}

#[test]
fn function_algebra_is_dual_to_group_algebra() {
    // Δ(δ_a) = Σ_{bc=a} δ_b⊗δ_c, read off the group table
    let table = catalog::c2_table();
    let h = catalog::fun_c2(Field::Rational).unwrap();
    let n = table.len();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let expect = if table[b][c] == a { 1 } else { 0 };
                assert_eq!(h.d(a, b, c), &Field::Rational.from_i64(expect), "({a},{b},{c})");
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            let p = h.algebra().mul_basis(x, y);
            for z in 0..n {
                let expect = if x == y && y == z { 1 } else { 0 };
                assert_eq!(p[z], Field::Rational.from_i64(expect));
            }
        }
    }
}

#[test]
fn sweedler_antipode_has_order_four() {
    let h = catalog::sweedler(Field::Rational).unwrap();
    let s = [[1i64, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]];
    let mul = |a: &[[i64; 4]; 4], b: &[[i64; 4]; 4]| {
        let mut c = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                c[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
            }
        }
        c
    };
    let id = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]];
    let mut p = s;
    let mut order = 1;
    while p != id {
        p = mul(&p, &s);
        order += 1;
    }
    assert_eq!(order, 4);
    for i in 0..4 {
        for j in 0..4 {
            assert_eq!(h.antipode_matrix()[(i, j)], Field::Rational.from_i64(s[i][j]));
        }
    }
    assert_eq!(antipode_order(&h, 16), Some(order));
}

#[test]
fn documented_example_matches_the_builtin() {
    let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../docs/sweedler.wha.json");
    let text = std::fs::read_to_string(path).unwrap();
    let h = catalog::sweedler(Field::Rational).unwrap();
    assert_eq!(text, weak_hopf::io::to_json(&h));
    assert_eq!(weak_hopf::io::from_json(&text).unwrap(), h);
}
