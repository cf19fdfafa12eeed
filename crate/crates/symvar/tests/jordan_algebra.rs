use symvar::comp_alg::CompositionAlgebra;
use symvar::jordan::{
    comatrix, comatrix_identity, comatrix_times_p, det3, dim_j3, dim_zorn, freudenthal_phi,
    in_section, jordan_product, random_herm, Herm3, Zorn2,
};
use symvar::sample::Sampler;
use symvar::Scalar;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn dimension_audit() {
    let dims_j: Vec<usize> = CompositionAlgebra::tower().iter().map(dim_j3).collect();
    assert_eq!(dims_j, vec![6, 9, 15, 27]);
    let dims_z: Vec<usize> = CompositionAlgebra::tower().iter().map(dim_zorn).collect();
    assert_eq!(dims_z, vec![14, 20, 32, 56]);
}

#[test]
fn identity_matrix_facts() {
    for alg in CompositionAlgebra::tower() {
        let i = Herm3::identity(&alg);
        assert_eq!(comatrix(&i), i);
        assert_eq!(det3(&i), s(1));
    }
}

#[test]
fn diagonal_matrix_facts() {
    let alg = CompositionAlgebra::tower()[3].clone();
    let d = Herm3::diag(&alg, s(2), s(-3), s(5));
    assert_eq!(det3(&d), s(-30));
    assert_eq!(comatrix(&d), Herm3::diag(&alg, s(-15), s(10), s(-6)));
    let e = Herm3::diag(&alg, s(1), s(4), s(-2));
    assert_eq!(jordan_product(&d, &e), Herm3::diag(&alg, s(2), s(-12), s(-10)));
}

#[test]
fn jordan_product_with_identity_and_commutativity() {
    let mut smp = Sampler::new(31);
    for alg in CompositionAlgebra::tower() {
        let i = Herm3::identity(&alg);
        for _ in 0..10 {
            let a = random_herm(&alg, &mut smp);
            let b = random_herm(&alg, &mut smp);
            assert_eq!(jordan_product(&a, &i), a);
            assert_eq!(jordan_product(&a, &b), jordan_product(&b, &a));
        }
    }
}

#[test]
fn comatrix_identity_over_each_algebra() {
    let mut smp = Sampler::new(32);
    for alg in CompositionAlgebra::tower() {
        let reps = if alg.dim == 8 { 30 } else { 100 };
        for _ in 0..reps {
            let p = random_herm(&alg, &mut smp);
            let rep = comatrix_identity(&p);
            // com(P) ∘ P = det(P) I always, in every dimension
            assert!(rep.jordan_residual.is_zero());
            if alg.dim < 8 {
                // associative entries: the ordinary product agrees on the nose
                assert!(rep.ordinary_residue.is_none());
                let d = det3(&p);
                let prod = comatrix_times_p(&p).expect("com(P)P Hermitian");
                assert_eq!(prod, Herm3::identity(&alg).scale(&d));
            } else if let Some(res) = &rep.ordinary_residue {
                // octonions: the residue is purely imaginary and is killed
                // by symmetrizing with the opposite order
                assert!(res.coeffs[0].is_zero());
                assert!(res.add(&res.conj()).is_zero());
            }
        }
    }
}

#[test]
fn octonion_ordinary_product_residue_occurs() {
    // the imaginary residue is not an artifact: it shows up generically
    let mut smp = Sampler::new(39);
    let alg = CompositionAlgebra::tower()[3].clone();
    let mut seen = false;
    for _ in 0..10 {
        let p = random_herm(&alg, &mut smp);
        if comatrix_identity(&p).ordinary_residue.is_some() {
            seen = true;
            break;
        }
    }
    assert!(seen);
}

#[test]
fn inverse_from_comatrix_when_det_nonzero() {
    let mut smp = Sampler::new(33);
    let alg = CompositionAlgebra::tower()[2].clone();
    let mut done = 0;
    while done < 20 {
        let p = random_herm(&alg, &mut smp);
        let d = det3(&p);
        if d.is_zero() {
            continue;
        }
        let pinv = comatrix(&p).scale(&d.inv());
        let prod = pinv.to_mat3().mul(&p.to_mat3()).to_herm().unwrap();
        assert_eq!(prod, Herm3::identity(&alg));
        done += 1;
    }
}

#[test]
fn det_is_cubic() {
    let mut smp = Sampler::new(34);
    for alg in CompositionAlgebra::tower() {
        for _ in 0..20 {
            let p = random_herm(&alg, &mut smp);
            let t = smp.rational();
            assert_eq!(det3(&p.scale(&t)), t.pow(3) * det3(&p));
        }
    }
}

#[test]
fn trace_form_symmetric_and_square_consistent() {
    let mut smp = Sampler::new(35);
    let alg = CompositionAlgebra::tower()[3].clone();
    for _ in 0..20 {
        let a = random_herm(&alg, &mut smp);
        let b = random_herm(&alg, &mut smp);
        assert_eq!(jordan_product(&a, &b).trace(), jordan_product(&b, &a).trace());
        let sq = a.to_mat3().mul(&a.to_mat3()).to_herm().unwrap();
        assert_eq!(sq.trace(), jordan_product(&a, &a).trace());
    }
}

#[test]
fn freudenthal_map_basic_points() {
    let alg = CompositionAlgebra::tower()[1].clone();
    let i = Herm3::identity(&alg);
    let z = freudenthal_phi(&s(1), &i);
    assert_eq!(z.z1, s(1));
    assert_eq!(z.z2, i);
    assert_eq!(z.z3, i);
    assert_eq!(z.z4, s(1));
    assert!(in_section(&z));

    let mut smp = Sampler::new(36);
    let p = random_herm(&alg, &mut smp);
    let z0 = freudenthal_phi(&s(0), &p);
    assert_eq!(z0.z1, s(0));
    assert!(z0.z2.is_zero());
    assert!(z0.z3.is_zero());
    assert_eq!(z0.z4, det3(&p));
}

#[test]
fn section_membership_iff_cube_equals_det() {
    let mut smp = Sampler::new(37);
    for alg in CompositionAlgebra::tower() {
        for _ in 0..25 {
            let p = random_herm(&alg, &mut smp);
            let x = smp.rational();
            let z = freudenthal_phi(&x, &p);
            assert_eq!(in_section(&z), x.pow(3) == det3(&p));
        }
        // engineered member: pick diagonal P with det 8, x = 2
        let p = Herm3::diag(&alg, s(1), s(2), s(4));
        let z = freudenthal_phi(&s(2), &p);
        assert!(in_section(&z));
    }
}

#[test]
fn section_rejects_off_section_point() {
    let alg = CompositionAlgebra::tower()[0].clone();
    let z = Zorn2 {
        z1: s(1),
        z2: Herm3::zero(&alg),
        z3: Herm3::zero(&alg),
        z4: s(0),
    };
    assert!(!in_section(&z));
}
