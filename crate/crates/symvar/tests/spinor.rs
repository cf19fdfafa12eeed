use symvar::mat::Mat;
use symvar::sample::Sampler;
use symvar::scalar::Scalar;
use symvar::spinor::{
    decomposition, decomposition_audit, even_subsets, exp_nilpotent, first_factor_vectors,
    free_pairs, full_jacobian, graph_chart_point, graph_jacobian, hyperplane_functionals,
    hyperplane_residuals, hyperplane_supports, isotropic_pairings, nilpotent_root_vectors,
    odd_subsets, pair_list, pfaffian_chart, quoted_fourth_residual, random_group_element,
    second_factor_vectors, solve_graph, split_basis, subset_position, trivial_vector, v1_equations,
    SkewParam, SpinModel, SpinorError, DIM_SPIN, DIM_W, N_PAIRS,
};

fn mat_sub(a: &Mat, b: &Mat) -> Mat {
    Mat::from_fn(a.rows, a.cols, |i, j| a.at(i, j).clone() - b.at(i, j).clone())
}

fn vec_in_span(span: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    let mut rows: Vec<Vec<Scalar>> = span.to_vec();
    let base = Mat::from_rows(rows.clone()).rank();
    rows.push(v.to_vec());
    Mat::from_rows(rows).rank() == base
}

#[test]
fn subset_orderings_have_the_right_sizes() {
    let evens = even_subsets();
    let odds = odd_subsets();
    assert_eq!(evens.len(), DIM_SPIN);
    assert_eq!(odds.len(), DIM_SPIN);
    assert_eq!(pair_list().len(), N_PAIRS);
    // ordered by size, then lexicographically within each size
    for w in evens.windows(2) {
        assert!(w[0].len() < w[1].len() || (w[0].len() == w[1].len() && w[0] < w[1]));
    }
    assert_eq!(evens[0], Vec::<usize>::new());
    assert_eq!(evens[1], vec![0, 1]);
}

#[test]
fn chart_coordinates_are_principal_pfaffians() {
    let mut s = Sampler::new(11);
    let vals: Vec<Scalar> = (0..N_PAIRS).map(|_| s.rational()).collect();
    let p = SkewParam::from_upper(&vals);
    let chart = pfaffian_chart(&p);
    let evens = even_subsets();
    // the empty-set coordinate is 1 and each pair coordinate is the entry
    assert_eq!(chart.coeffs[0], Scalar::one());
    for (i, j) in pair_list() {
        let pos = subset_position(&evens, &[i, j]);
        assert_eq!(chart.coeffs[pos], p.m.at(i, j).clone());
    }
    // the 4-subset coordinate expands into the classical three-term Pfaffian
    let x = |a: usize, b: usize| p.m.at(a, b).clone();
    let pos = subset_position(&evens, &[0, 1, 2, 3]);
    assert_eq!(
        chart.coeffs[pos],
        x(0, 1) * x(2, 3) - x(0, 2) * x(1, 3) + x(0, 3) * x(1, 2)
    );
}

#[test]
fn split_basis_diagonalizes_the_hyperbolic_pairing() {
    // the two-factor gram matrix: the normalized 7-space pairing on the
    // first block and its negative on the second
    let space = symvar::g2_geom::SevenSpace::normalized();
    let g7 = Mat::from_fn(DIM_W, DIM_W, |i, j| space.gram.at(i, j).clone());
    let gram14 = Mat::from_fn(14, 14, |i, j| {
        if i < 7 && j < 7 {
            g7.at(i, j).clone()
        } else if i >= 7 && j >= 7 {
            -g7.at(i - 7, j - 7).clone()
        } else {
            Scalar::zero()
        }
    });
    let t = split_basis();
    let b = t.transpose().mul(&gram14).mul(&t);
    let p = isotropic_pairings();
    for i in 0..14 {
        for j in 0..14 {
            let expected = if i < 7 && j == i + 7 {
                p[i].clone()
            } else if j < 7 && i == j + 7 {
                p[j].clone()
            } else {
                Scalar::zero()
            };
            assert_eq!(b.at(i, j).clone(), expected, "pairing entry ({i},{j})");
        }
    }
}

#[test]
fn embedded_factor_actions_form_a_representation() {
    let model = SpinModel::new();
    // the spin construction is a Lie algebra map on sampled derivations
    let a = model.so_embedding(&model.derivations[0], 0);
    let b = model.so_embedding(&model.derivations[5], 0);
    let bracket = mat_sub(&a.mul(&b), &b.mul(&a));
    let ta = model.spin_action(&a);
    let tb = model.spin_action(&b);
    let lhs = model.spin_action(&bracket);
    let rhs = mat_sub(&ta.mul(&tb), &tb.mul(&ta));
    for i in 0..DIM_SPIN {
        for j in 0..DIM_SPIN {
            assert_eq!(lhs.at(i, j), rhs.at(i, j));
        }
    }
    // the two factors commute on the spinor space
    let c = model.factor_action(3, 0);
    let d = model.factor_action(7, 1);
    let cd = c.mul(&d);
    let dc = d.mul(&c);
    for i in 0..DIM_SPIN {
        for j in 0..DIM_SPIN {
            assert_eq!(cd.at(i, j), dc.at(i, j));
        }
    }
}

#[test]
fn spinor_space_splits_as_49_plus_7_plus_7_plus_1() {
    let model = SpinModel::new();
    let audit = decomposition_audit(&model);
    assert_eq!(audit.dim_tensor, 49);
    assert_eq!(audit.dim_first, 7);
    assert_eq!(audit.dim_second, 7);
    assert_eq!(audit.dim_trivial, 1);
    assert_eq!(audit.explicit_rank, 15);
    assert_eq!(audit.factor_fixed_dim, 8);
}

#[test]
fn frozen_summand_bases_match_the_computed_splitting() {
    let model = SpinModel::new();
    let dec = decomposition(&model);
    assert_eq!(dec.trivial, trivial_vector());
    for v in first_factor_vectors() {
        assert!(vec_in_span(&dec.first, &v));
    }
    for v in second_factor_vectors() {
        assert!(vec_in_span(&dec.second, &v));
    }
    assert_eq!(Mat::from_rows(first_factor_vectors()).rank(), 7);
    assert_eq!(Mat::from_rows(second_factor_vectors()).rank(), 7);
}

#[test]
fn trivial_vector_is_killed_by_both_factor_actions() {
    let model = SpinModel::new();
    let v = trivial_vector();
    for factor in 0..2 {
        for k in 0..14 {
            let out = model.factor_action(k, factor).mul_vec(&v);
            assert!(out.iter().all(|c| c.is_zero()));
        }
    }
}

#[test]
fn hyperplanes_annihilate_the_invariant_50_space() {
    let model = SpinModel::new();
    let dec = decomposition(&model);
    let funcs = hyperplane_functionals();
    assert_eq!(funcs.len(), 14);
    assert_eq!(Mat::from_rows(funcs.clone()).rank(), 14);
    // the 50-space is the tensor summand plus the invariant line
    let mut fifty = dec.tensor.clone();
    fifty.push(dec.trivial.clone());
    assert_eq!(Mat::from_rows(fifty.clone()).rank(), 50);
    for f in &funcs {
        for v in &fifty {
            let mut acc = Scalar::zero();
            for i in 0..DIM_SPIN {
                acc += f[i].clone() * v[i].clone();
            }
            assert!(acc.is_zero());
        }
    }
    // and they are exactly the annihilator: 14 + 50 = 64
    let mut all = fifty;
    all.extend(funcs);
    assert_eq!(Mat::from_rows(all).rank(), 64);
}

#[test]
fn graph_equations_restrict_four_of_the_hyperplanes() {
    // the four solved equations are hyperplane residuals in which one side
    // is a pair coordinate: (1,2), (1,3), (2,3) against their complementary
    // 6-subsets, and (4,7) against [1,2,3,7] (all labels 1-based)
    let supports = hyperplane_supports();
    for (small, big) in [
        (vec![0, 1], vec![0, 1, 3, 4, 5, 6]),
        (vec![0, 2], vec![0, 2, 3, 4, 5, 6]),
        (vec![1, 2], vec![1, 2, 3, 4, 5, 6]),
        (vec![3, 6], vec![0, 1, 2, 6]),
    ] {
        assert!(supports.contains(&(small, big)));
    }
    let mut s = Sampler::new(5);
    let vals: Vec<Scalar> = (0..N_PAIRS).map(|_| s.rational()).collect();
    let p = SkewParam::from_upper(&vals);
    let res = hyperplane_residuals(&p);
    let four = v1_equations(&p);
    // positions of the four in the list of fourteen
    for (k, pos) in [(0, 11), (1, 12), (2, 13), (3, 2)] {
        assert_eq!(four[k], -res[pos].clone());
    }
}

#[test]
fn solved_graph_points_satisfy_the_four_equations_exactly() {
    let mut s = Sampler::new(77);
    let mut solved = 0usize;
    while solved < 20 {
        let free: Vec<Scalar> = (0..17).map(|_| s.rational()).collect();
        match solve_graph(&free) {
            Ok(p) => {
                for r in v1_equations(&p) {
                    assert!(r.is_zero());
                }
                // the free coordinates are untouched
                for (k, (i, j)) in free_pairs().into_iter().enumerate() {
                    assert_eq!(p.m.at(i, j).clone(), free[k]);
                }
                assert_eq!(graph_jacobian(&p).rank(), 4);
                solved += 1;
            }
            Err(SpinorError::SingularSystem) => continue,
            Err(e) => panic!("unexpected error {e}"),
        }
    }
}

#[test]
fn chart_center_satisfies_the_four_equations_but_not_all_fourteen() {
    // at all-zero free coordinates three of the four equations degenerate
    // to 0 = 0, so the solver reports a singular system
    let free = vec![Scalar::zero(); 17];
    assert!(matches!(solve_graph(&free), Err(SpinorError::SingularSystem)));
    // still, the chart center solves the four graph equations ...
    let p = SkewParam::zero();
    for r in v1_equations(&p) {
        assert!(r.is_zero());
    }
    // ... but not all fourteen hyperplane equations: the residual pairing
    // the empty set with [1,2,3,5,6,7] equals -1 there
    let res = hyperplane_residuals(&p);
    assert_eq!(res[10], -Scalar::one());
    assert!(res.iter().any(|r| !r.is_zero()));
}

#[test]
fn group_graphs_lie_on_all_fourteen_hyperplanes() {
    let model = SpinModel::new();
    let roots = nilpotent_root_vectors(&model.derivations);
    assert_eq!(roots.len(), 12);
    let mut s = Sampler::new(2024);
    let mut checked = 0usize;
    let mut attempts = 0usize;
    while checked < 2 {
        attempts += 1;
        assert!(attempts < 40, "group graphs should be generically transverse");
        let g = random_group_element(&roots, &mut s, 6);
        let (p, chart) = match graph_chart_point(&model, &g) {
            Ok(out) => out,
            Err(SpinorError::GraphNotTransverse) => continue,
            Err(e) => panic!("unexpected error {e}"),
        };
        // every hyperplane residual vanishes at the graph point
        for r in hyperplane_residuals(&p) {
            assert!(r.is_zero());
        }
        for r in v1_equations(&p) {
            assert!(r.is_zero());
        }
        // the chart reproduces the spinor coordinate by coordinate
        let again = pfaffian_chart(&p);
        for i in 0..DIM_SPIN {
            assert_eq!(chart.coeffs[i], again.coeffs[i]);
        }
        // the full Jacobian has rank 7 at the point: the cut locus is
        // smooth of dimension 21 - 7 = 14 there
        assert_eq!(full_jacobian(&p).rank(), 7);
        // the (4,7)-versus-[1,2,3,4] combination does not vanish on the
        // locus, so it is not one of its equations
        assert!(!quoted_fourth_residual(&p).is_zero());
        checked += 1;
    }
}

#[test]
fn exponentials_of_root_vectors_preserve_the_form() {
    let model = SpinModel::new();
    let roots = nilpotent_root_vectors(&model.derivations);
    let space = symvar::g2_geom::SevenSpace::normalized();
    let g7 = Mat::from_fn(DIM_W, DIM_W, |i, j| space.gram.at(i, j).clone());
    let mut s = Sampler::new(9);
    let g = random_group_element(&roots, &mut s, 4);
    let back = g.transpose().mul(&g7).mul(&g);
    for i in 0..DIM_W {
        for j in 0..DIM_W {
            assert_eq!(back.at(i, j), g7.at(i, j));
        }
    }
    // and each exponential truncates: the root vectors are nilpotent
    for r in &roots {
        let e = exp_nilpotent(r, &Scalar::from_int(1));
        assert_eq!(e.rank(), DIM_W);
    }
}
