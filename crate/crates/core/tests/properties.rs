mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use stabdis_core::disjointness::{
    c_disjoint_collection, code_disjointness, delta_star, verify_collection, witness_c,
};
use stabdis_core::families::{
    check_concatenated_distances, concatenate, hypergraph_product, p_type_disjointness, CssCode, PauliType,
};
use stabdis_core::gf2::{symplectic_product, BitMatrix, BitVector};
use stabdis_core::logical::distance_report;
use stabdis_core::lp::{LinearProgram, LpStatus, Relation};
use stabdis_core::pauli::{logical_basis, ClassLabel, PauliOperator, StabilizerCode};
use stabdis_core::reduction::{
    build_graph_code, collection_from_independent_set, error_detecting_check, independence_number, Graph,
};
use stabdis_core::Rational;

use common::*;

fn bits(len: usize) -> impl Strategy<Value = BitVector> {
    proptest::collection::vec(any::<bool>(), len).prop_map(|b| BitVector::from_bools(&b))
}

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        proptest::collection::vec(bits(c), r).prop_map(move |rows| BitMatrix::from_rows(c, rows).unwrap())
    })
}

/// A random code with `k ≥ 1` on at most six qubits, from a seed.
fn small_code() -> impl Strategy<Value = StabilizerCode> {
    (any::<u64>(), 2usize..=6).prop_map(|(seed, n)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = (seed as usize % (n - 1)) + 1;
        random_code(&mut rng, n, r.min(n - 1))
    })
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(m in matrix(6, 9)) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.nrows(), m.ncols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in kernel.rows() {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn symplectic_product_is_symmetric(u in bits(10), v in bits(10)) {
        prop_assert_eq!(symplectic_product(&u, &v).unwrap(), symplectic_product(&v, &u).unwrap());
        prop_assert!(!symplectic_product(&u, &u).unwrap());
    }

    #[test]
    fn pauli_strings_round_trip(v in bits(12)) {
        let p = PauliOperator::from_vector(v);
        let back: PauliOperator = p.to_string().parse().unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn code_text_round_trips(code in small_code()) {
        let back = StabilizerCode::parse_text(&code.to_text()).unwrap();
        prop_assert_eq!(back.checks(), code.checks());
    }

    #[test]
    fn logical_basis_invariants(code in small_code()) {
        let basis = logical_basis(&code);
        prop_assert_eq!(basis.k(), code.k());
        prop_assert!(basis.satisfies_invariants(&code));
        for label in ClassLabel::nontrivial(code.k()) {
            prop_assert_eq!(basis.label_of(&basis.class_rep(label)), label);
        }
    }

    #[test]
    fn lp_bounds_ilp_and_ignores_order(
        rows in proptest::collection::vec(proptest::collection::vec(0i64..4, 4), 1..4),
        rhs in proptest::collection::vec(1i64..9, 4),
        obj in proptest::collection::vec(0i64..5, 4),
    ) {
        let build = |perm: &[usize]| {
            let mut p = LinearProgram::<Rational>::new(4).unwrap();
            for (j, &c) in obj.iter().enumerate() {
                p.set_objective(perm[j], int(c)).unwrap();
            }
            for (row, &b) in rows.iter().zip(&rhs) {
                p.add_constraint(row.iter().enumerate().map(|(j, &a)| (perm[j], int(a))), Relation::Le, int(b)).unwrap();
            }
            // keep every variable bounded
            p.add_constraint((0..4).map(|j| (j, int(1))), Relation::Le, int(10)).unwrap();
            p
        };
        let p = build(&[0, 1, 2, 3]);
        let lp = p.solve();
        prop_assert_eq!(lp.status, LpStatus::Optimal);
        prop_assert!(p.is_feasible(&lp.assignment));
        let ilp = p.solve_ilp(&[0, 1, 2, 3]);
        prop_assert!(p.is_feasible(&ilp.assignment));
        prop_assert!(ilp.value <= lp.value);
        let permuted = build(&[2, 0, 3, 1]).solve();
        prop_assert_eq!(permuted.value, lp.value);
    }

    #[test]
    fn collections_and_lp_agree(code in small_code(), c in 1u64..=3) {
        let basis = logical_basis(&code);
        let cls = code.class(&basis, ClassLabel::new(1, code.k()));
        let star = delta_star(&cls).unwrap();
        let (value, col) = c_disjoint_collection(&cls, c).unwrap();
        prop_assert!(value <= star.value);
        let verdict = verify_collection(&col, &cls);
        prop_assert!(verdict.valid);
        prop_assert_eq!(Rational::from_integer((verdict.size as i64).into()), value * int(c as i64));
        let c_star = witness_c(&star.solution).unwrap();
        let (at_star, _) = c_disjoint_collection(&cls, c_star).unwrap();
        prop_assert_eq!(at_star, star.value);
    }

    #[test]
    fn disjointness_at_least_one_and_bounded_by_distance(code in small_code()) {
        let basis = logical_basis(&code);
        let dist = distance_report(&code, &basis).unwrap();
        let report = code_disjointness(&code, &basis).unwrap();
        prop_assert!(report.code_delta >= int(1));
        for (label, v) in &report.per_class {
            // n qubits hold at most n / d disjoint representatives
            let d = dist.per_class[label] as i64;
            prop_assert!(v.delta_star.clone() * int(d) <= int(code.n() as i64));
        }
    }

    #[test]
    fn hypergraph_products_validate(h1 in matrix(4, 6), h2 in matrix(4, 6)) {
        prop_assume!(h1.rank() == h1.nrows().min(h1.ncols()));
        prop_assume!(h2.rank() == h2.nrows().min(h2.ncols()));
        let hp = hypergraph_product(&h1, &h2).unwrap();
        let (m1, n1, m2, n2) = (h1.nrows(), h1.ncols(), h2.nrows(), h2.ncols());
        prop_assert_eq!(hp.css.n(), n1 * m2 + m1 * n2);
        prop_assert_eq!(hp.block_rows, m1 * m2 + n1 * n2);
        prop_assert_eq!(hp.css.x_rows.nrows() + hp.css.z_rows.nrows(), hp.css.code.num_generators());
    }

    #[test]
    fn independence_number_matches_brute_force(seed in any::<u64>(), v in 2usize..=10) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, v, 0.35);
        let (alpha, set) = independence_number(&g).unwrap();
        prop_assert_eq!(alpha, brute_alpha(&g));
        prop_assert!(g.is_independent(&set));
        prop_assert_eq!(set.len(), alpha);
    }

    #[test]
    fn graph_codes_detect_single_errors(seed in any::<u64>(), v in 3usize..=6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g: Graph = random_graph(&mut rng, v, 0.5);
        let gc = build_graph_code(&g, 1).unwrap();
        prop_assert!(error_detecting_check(&gc));
        prop_assert!(gc.code.is_logical(&gc.logical_rep));
        for u in 0..v {
            prop_assert_eq!(gc.vertex_supports[u].count_ones() % 2, 0);
            prop_assert!(gc.code.is_stabilizer(&gc.x_of_set(&[0, u])));
            prop_assert!(gc.logical().is_representative(&gc.x_of_set(&[u])));
        }
    }

    #[test]
    fn independent_sets_give_disjoint_collections(seed in any::<u64>(), v in 3usize..=10, c in 1u64..=2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, v, 0.4);
        prop_assume!(v as u64 >= c + 2);
        let gc = build_graph_code(&g, c).unwrap();
        let (_, set) = independence_number(&g).unwrap();
        let col = collection_from_independent_set(&gc, &set).unwrap();
        prop_assert!(verify_collection(&col, &gc.logical()).valid);
    }
}

#[test]
fn concatenation_parameter_law() {
    let rep = load_code("repetition_3.txt");
    let c412 = load_code("code_4_1_2.txt");
    for outer in [&rep, &c412] {
        for inner in [&rep, &c412] {
            let basis = logical_basis(inner);
            let cat = concatenate(outer, inner, &basis).unwrap();
            assert_eq!((cat.n(), cat.k()), (outer.n() * inner.n(), outer.k()));
            let d = check_concatenated_distances(outer, inner, &basis).unwrap();
            assert!(d.min_holds && d.max_holds, "{d:?}");
        }
    }
}

#[test]
fn p_type_disjointness_dominates() {
    for name in ["steane.txt", "css_4_2_2.txt", "code_4_1_2.txt"] {
        let css = CssCode::from_code(load_code(name)).unwrap();
        let delta = code_disjointness(&css.code, &css.standard_basis).unwrap().code_delta;
        for p in [PauliType::X, PauliType::Z] {
            if let Some(v) = p_type_disjointness(&css, p).unwrap().value {
                assert!(v >= delta, "{name} {p:?}");
            }
        }
    }
}
