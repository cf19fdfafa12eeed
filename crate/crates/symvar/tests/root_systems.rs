use num_traits::Zero;
use symvar::root_data::{
    dot, generate_roots, rat, vadd, vneg, vscale, vsub, RootSystem, TypeLabel, Vect,
};

fn rs(label: TypeLabel) -> RootSystem {
    RootSystem::new(label)
}

#[test]
fn root_counts_match_classical_values() {
    assert_eq!(rs(TypeLabel::A(1)).num_roots(), 2);
    assert_eq!(rs(TypeLabel::A(2)).num_roots(), 6);
    assert_eq!(rs(TypeLabel::A(5)).num_roots(), 30);
    assert_eq!(rs(TypeLabel::B(3)).num_roots(), 18);
    assert_eq!(rs(TypeLabel::C(4)).num_roots(), 32);
    assert_eq!(rs(TypeLabel::D(4)).num_roots(), 24);
    assert_eq!(rs(TypeLabel::G2).num_roots(), 12);
    assert_eq!(rs(TypeLabel::F4).num_roots(), 48);
    assert_eq!(rs(TypeLabel::E(6)).num_roots(), 72);
    assert_eq!(rs(TypeLabel::E(7)).num_roots(), 126);
    assert_eq!(rs(TypeLabel::E(8)).num_roots(), 240);
}

#[test]
fn group_dimensions() {
    assert_eq!(rs(TypeLabel::A(3)).dim_group(), 15);
    assert_eq!(rs(TypeLabel::E(6)).dim_group(), 78);
    assert_eq!(rs(TypeLabel::E(7)).dim_group(), 133);
    assert_eq!(rs(TypeLabel::F4).dim_group(), 52);
    assert_eq!(rs(TypeLabel::G2).dim_group(), 14);
}

#[test]
fn cartan_matrices() {
    let a2 = rs(TypeLabel::A(2));
    let c = a2.cartan_matrix();
    assert_eq!(c[0][0], rat(2));
    assert_eq!(c[0][1], rat(-1));
    assert_eq!(c[1][0], rat(-1));

    let g2 = rs(TypeLabel::G2);
    let c = g2.cartan_matrix();
    // alpha1 short, alpha2 long
    assert_eq!(c[0][0], rat(2));
    assert_eq!(c[1][1], rat(2));
    let off = (c[0][1].clone(), c[1][0].clone());
    assert!(off == (rat(-1), rat(-3)) || off == (rat(-3), rat(-1)));
}

#[test]
fn reflection_closure() {
    for label in [TypeLabel::A(3), TypeLabel::B(2), TypeLabel::G2, TypeLabel::F4] {
        let r = rs(label);
        for alpha in &r.simple {
            for beta in &r.roots {
                let c = rat(2) * dot(beta, alpha) / dot(alpha, alpha);
                let refl = vsub(beta, &vscale(&c, alpha));
                assert!(r.roots.contains(&refl));
            }
        }
    }
}

#[test]
fn fundamental_weight_pairings() {
    for label in [
        TypeLabel::A(1),
        TypeLabel::A(2),
        TypeLabel::B(3),
        TypeLabel::G2,
        TypeLabel::F4,
        TypeLabel::E(6),
    ] {
        let r = rs(label);
        let ws = r.fundamental_weights();
        for (i, w) in ws.iter().enumerate() {
            for (j, a) in r.simple.iter().enumerate() {
                let p = RootSystem::pair_coroot(w, a);
                assert_eq!(p, if i == j { rat(1) } else { rat(0) });
            }
        }
        let cws = r.fundamental_coweights();
        for (i, wv) in cws.iter().enumerate() {
            for (j, a) in r.simple.iter().enumerate() {
                assert_eq!(dot(a, wv), if i == j { rat(1) } else { rat(0) });
            }
        }
    }
}

#[test]
fn a1_fundamental_weight_is_half_alpha() {
    let a1 = rs(TypeLabel::A(1));
    let w = a1.fundamental_weights();
    assert_eq!(w[0], vscale(&symvar::root_data::ratf(1, 2), &a1.simple[0]));
}

#[test]
fn dominance() {
    let a2 = rs(TypeLabel::A(2));
    let w = a2.fundamental_weights();
    assert!(a2.is_dominant(&vadd(&w[0], &w[1])));
    assert!(!a2.is_dominant(&vsub(&w[0], &w[1])));
    assert!(a2.is_dominant(&Vect::from(vec![rat(0).clone(); 3])));

    let g2 = rs(TypeLabel::G2);
    let wg = g2.fundamental_weights();
    assert!(!g2.is_dominant(&vsub(&wg[1], &wg[0])));
    assert!(g2.is_dominant(&vadd(&wg[0], &wg[1])));
}

#[test]
fn flag_dimensions() {
    let a5 = rs(TypeLabel::A(5));
    // Grassmannian of 2-planes in C^6: Levi = all simple roots but the 2nd
    assert_eq!(a5.dim_flag(&[0, 2, 3, 4]), 8);
    // Borel: no Levi roots
    assert_eq!(a5.dim_flag(&[]), 15);
    // full parabolic
    assert_eq!(a5.dim_flag(&[0, 1, 2, 3, 4]), 0);

    let g2 = rs(TypeLabel::G2);
    assert_eq!(g2.dim_flag(&[1]), 5);

    let e6 = rs(TypeLabel::E(6));
    // minuscule E6/P1 has dimension 16
    assert_eq!(e6.dim_flag(&[1, 2, 3, 4, 5]), 16);

    let e7 = rs(TypeLabel::E(7));
    // minuscule E7/P7 has dimension 27
    assert_eq!(e7.dim_flag(&[0, 1, 2, 3, 4, 5]), 27);
}

#[test]
fn product_systems() {
    let p = rs(TypeLabel::Product(vec![TypeLabel::A(1), TypeLabel::A(1)]));
    assert_eq!(p.rank(), 2);
    assert_eq!(p.num_roots(), 4);
    let c = p.cartan_matrix();
    assert_eq!(c[0][1], rat(0));
    assert_eq!(c[1][0], rat(0));

    let gg = rs(TypeLabel::Product(vec![TypeLabel::G2, TypeLabel::G2]));
    assert_eq!(gg.dim_group(), 28);
}

#[test]
fn generated_roots_have_no_zero() {
    let g2 = rs(TypeLabel::G2);
    assert!(g2.roots.iter().all(|r| !r.iter().all(|x| x.is_zero())));
    // roots come in opposite pairs
    for r in &g2.roots {
        assert!(g2.roots.contains(&vneg(r)));
    }
    // generate_roots on a Levi sub-list stays inside the root set
    let levi = generate_roots(&[g2.simple[0].clone()]);
    assert_eq!(levi.len(), 2);
}
