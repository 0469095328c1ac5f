//! Worked examples with hand-checkable answers, one module at a time.

use superlie::classify::{classify, find_witness_m, Property, Verdict, WitnessSearch};
use superlie::linalg::{unit_vector, Fp, Subspace};
use superlie::pbw::{Envelope, Straightener};
use superlie::series::{
    check_abc_containment, commutator_ideal, gamma_series, gamma_super_series, ideal_square, mu, nil_index_exact,
    nilpotency_index, two_sided_ideal, NilIndex, Nilpotency,
};
use superlie::superlie::build::from_names;
use superlie::superlie::{
    center, is_nilpotent_l0_module, is_p_nilpotent_subspace, lower_central_series, quotient_algebra,
    restricted_ideal_generated, verify_axioms, GradedSubspace, PNilpotence,
};
use superlie::{Caps, LieSuperData, Scalar};

fn f3() -> Fp {
    Fp::new(3).unwrap()
}

fn heisenberg(p: u32) -> LieSuperData {
    from_names(p, &["e1", "e2", "e3"], &[], &[("e1", "e2", &[("e3", 1)])], &[]).unwrap()
}

fn sl2_p5() -> LieSuperData {
    from_names(
        5,
        &["h", "e", "f"],
        &[],
        &[("h", "e", &[("e", 2)]), ("h", "f", &[("f", -2)]), ("e", "f", &[("h", 1)])],
        &[("h", &[("h", 1)])],
    )
    .unwrap()
}

fn grassmann(n1: usize) -> LieSuperData {
    let odd: Vec<String> = (1..=n1).map(|i| format!("f{i}")).collect();
    let refs: Vec<&str> = odd.iter().map(String::as_str).collect();
    from_names(3, &[], &refs, &[], &[]).unwrap()
}

fn toral_odd() -> LieSuperData {
    from_names(3, &["x"], &["z"], &[("z", "z", &[("x", 1)])], &[("x", &[("x", 1)])]).unwrap()
}

fn clifford() -> LieSuperData {
    from_names(
        3,
        &["x"],
        &["a", "b"],
        &[("a", "a", &[("x", 1)]), ("b", "b", &[("x", 1)])],
        &[("x", &[("x", 1)])],
    )
    .unwrap()
}

fn weight_vector() -> LieSuperData {
    from_names(3, &["x"], &["z"], &[("x", "z", &[("z", -1)])], &[("x", &[("x", 1)])]).unwrap()
}

fn env(l: &LieSuperData) -> Envelope {
    Envelope::build(l, 1024).unwrap()
}

// --- linear algebra ---

#[test]
fn span_examples() {
    let f = f3();
    assert_eq!(Subspace::span::<Vec<Scalar>>(f, 3, &[]).unwrap().dim(), 0);
    let units: Vec<_> = (0..3).map(|i| unit_vector(3, i)).collect();
    assert!(Subspace::span(f, 3, &units).unwrap().is_full());
    // 2·(1,2,0) = (2,1,0) mod 3
    assert_eq!(Subspace::span(f, 3, &[vec![1, 2, 0], vec![2, 1, 0]]).unwrap().dim(), 1);
}

#[test]
fn lattice_examples() {
    let f = f3();
    let full = Subspace::full(f, 4);
    assert_eq!(full.codim_of(&Subspace::zero(f, 4)).unwrap(), 4);
    let a = Subspace::span(f, 4, &[vec![1, 1, 0, 2]]).unwrap();
    assert_eq!(a.sum(&a).unwrap(), a);
    let e1 = Subspace::span(f, 3, &[unit_vector(3, 0)]).unwrap();
    let e12 = Subspace::span(f, 3, &[unit_vector(3, 0), unit_vector(3, 1)]).unwrap();
    assert!(e1.is_subset(&e12).unwrap());
}

#[test]
fn quotient_map_examples() {
    let f = f3();
    let b = Subspace::full(f, 2);
    assert_eq!(b.quotient_coords(&b).unwrap().target_dim(), 0);
    assert_eq!(b.quotient_coords(&Subspace::zero(f, 2)).unwrap().target_dim(), 2);
    let a = Subspace::span(f, 2, &[vec![1, 1]]).unwrap();
    let q = b.quotient_coords(&a).unwrap();
    assert_eq!(q.target_dim(), 1);
    assert_eq!(q.apply(&[1, 0]), q.apply(&[0, 2]));
}

#[test]
fn enumeration_examples() {
    let zero: Vec<_> = Subspace::zero(f3(), 2).enumerate(10).unwrap().collect();
    assert_eq!(zero, vec![vec![0, 0]]);
    assert_eq!(Subspace::full(f3(), 2).enumerate(10).unwrap().count(), 9);
    assert!(Subspace::full(Fp::new(5).unwrap(), 3).enumerate(100).is_err());
}

#[test]
fn hyperplane_examples() {
    let f = f3();
    let amb2 = Subspace::full(f, 2);
    assert!(amb2.hyperplanes_between(&amb2).unwrap().is_empty());
    assert_eq!(Subspace::zero(f, 2).hyperplanes_between(&amb2).unwrap().len(), 4);
    let w = Subspace::span(f, 3, &[vec![1, 2, 0]]).unwrap();
    let hs = w.hyperplanes_between(&Subspace::full(f, 3)).unwrap();
    assert_eq!(hs.len(), 4);
    assert!(hs.iter().all(|h| h.dim() == 2 && w.is_subset(h).unwrap()));
}

// --- the superalgebra ---

#[test]
fn bracket_examples() {
    let h = heisenberg(5);
    let (e1, e2, e3) = (h.basis_vector(0), h.basis_vector(1), h.basis_vector(2));
    assert_eq!(h.bracket(&e2, &e1), vec![0, 0, 4]);
    assert_eq!(h.bracket(&e1, &e2), e3);
    let v = vec![2, 3, 1];
    assert_eq!(h.bracket(&v, &v), vec![0, 0, 0]);
}

#[test]
fn axiom_examples() {
    let abelian = from_names(3, &["a", "b"], &[], &[], &[]).unwrap();
    assert!(verify_axioms(&abelian, 6561).fully_verified());
    assert!(verify_axioms(&heisenberg(3), 6561).fully_verified());
    let broken = from_names(
        3,
        &["e1", "e2", "e3"],
        &[],
        &[("e1", "e2", &[("e3", 1)]), ("e1", "e3", &[("e1", 1)])],
        &[],
    )
    .unwrap();
    let r = verify_axioms(&broken, 6561);
    let msg = r.first_failure().unwrap().to_string();
    assert!(msg.contains("Jacobi") && msg.contains("e1") && msg.contains("e3"), "{msg}");
}

#[test]
fn pmap_extension_matches_cube_in_envelope() {
    let l = heisenberg(3);
    let x = vec![1, 1, 0];
    let in_l = l.pmap_extend(&x);
    let e = env(&l);
    let u = e.embed(&x);
    let cube = e.algebra.mul(&e.algebra.mul(&u, &u), &u);
    assert_eq!(e.project_to_lie(&cube), Some(in_l.clone()));
    // zero basis p-powers, and the correction terms need class ≥ p
    assert_eq!(in_l, vec![0, 0, 0]);
}

#[test]
fn abelian_pmap_is_additive() {
    let l = from_names(5, &["a", "b"], &[], &[], &[("a", &[("b", 1)]), ("b", &[("a", 2)])]).unwrap();
    let (x, y) = (vec![1, 3], vec![4, 2]);
    let sum: Vec<Scalar> = l.pmap_extend(&x).iter().zip(l.pmap_extend(&y)).map(|(a, b)| (a + b) % 5).collect();
    assert_eq!(l.pmap_extend(&[0, 0]), vec![0, 0]);
    let xy: Vec<Scalar> = x.iter().zip(&y).map(|(a, b)| (a + b) % 5).collect();
    assert_eq!(l.pmap_extend(&xy), sum);
}

#[test]
fn restricted_ideal_examples() {
    let l = heisenberg(3);
    let zero = GradedSubspace::zero(&l);
    assert_eq!(restricted_ideal_generated(&l, &zero, 6561).ideal, zero);
    let z = center(&l);
    assert_eq!(restricted_ideal_generated(&l, &z, 6561).ideal, z);
    let e1 = GradedSubspace::even_only(&l, Subspace::span(f3(), 3, &[vec![1, 0, 0]]).unwrap());
    let got = restricted_ideal_generated(&l, &e1, 6561).ideal;
    let want = Subspace::span(f3(), 3, &[vec![1, 0, 0], vec![0, 0, 1]]).unwrap();
    assert_eq!(got.even, want);
}

#[test]
fn lower_central_examples() {
    let abelian = from_names(3, &["a", "b"], &[], &[], &[]).unwrap();
    assert_eq!(lower_central_series(&abelian).class_or_length, Some(1));
    assert_eq!(lower_central_series(&heisenberg(3)).class_or_length, Some(2));
    let s = lower_central_series(&sl2_p5());
    assert_eq!(s.class_or_length, None);
    assert!(s.terms.iter().all(|t| t.even.dim() == 3));
}

#[test]
fn center_and_quotient_examples() {
    let l = heisenberg(3);
    let z = center(&l);
    assert_eq!(z.even, Subspace::span(f3(), 3, &[vec![0, 0, 1]]).unwrap());
    let q = quotient_algebra(&l, &z).unwrap();
    assert_eq!(q.dim(), 2);
    assert_eq!(lower_central_series(&q).class_or_length, Some(1));
    let same = quotient_algebra(&l, &GradedSubspace::zero(&l)).unwrap();
    assert_eq!(same.dim(), 3);
    assert_eq!(lower_central_series(&same).class_or_length, Some(2));
}

#[test]
fn p_nilpotence_examples() {
    let l = heisenberg(5);
    let f = l.field();
    assert_eq!(is_p_nilpotent_subspace(&l, &Subspace::zero(f, 3), 1000), PNilpotence::Yes { index: 0 });
    assert_eq!(is_p_nilpotent_subspace(&l, &Subspace::full(f, 3), 1000), PNilpotence::Yes { index: 1 });
    let s = sl2_p5();
    let h = Subspace::span(s.field(), 3, &[vec![1, 0, 0]]).unwrap();
    assert!(matches!(is_p_nilpotent_subspace(&s, &h, 1000), PNilpotence::No { .. }));
}

#[test]
fn l0_module_examples() {
    let abelian = from_names(3, &["a", "b"], &[], &[], &[]).unwrap();
    assert_eq!(is_nilpotent_l0_module(&abelian), Some(1));
    assert_eq!(is_nilpotent_l0_module(&heisenberg(3)), Some(2));
    assert_eq!(is_nilpotent_l0_module(&sl2_p5()), None);
}

// --- straightening and the envelope ---

#[test]
fn straightening_examples() {
    let l = heisenberg(5);
    let mut s = Straightener::new(&l, 1024).unwrap();
    let names = l.names().to_vec();
    assert_eq!(s.straighten_word(&[1, 0]).display_with(s.basis(), &names), "4*e3 + e1*e2");
    let e2 = s.straighten_word(&[1]);
    let one = s.straighten_word(&[]);
    assert_eq!(one.display_with(s.basis(), &names), "1");
    assert_eq!(e2.display_with(s.basis(), &names), "e2");

    let odd = from_names(3, &["x"], &["f"], &[("f", "f", &[("x", 1)])], &[]).unwrap();
    let mut s = Straightener::new(&odd, 1024).unwrap();
    assert_eq!(s.straighten_word(&[1, 1]).display_with(s.basis(), odd.names()), "2*x");

    let toral = from_names(3, &["x"], &[], &[], &[("x", &[("x", 1)])]).unwrap();
    let mut s = Straightener::new(&toral, 1024).unwrap();
    assert_eq!(s.straighten_word(&[0, 0, 0]).display_with(s.basis(), toral.names()), "x");
}

#[test]
fn pbw_dimension_examples() {
    let l = from_names(3, &["a", "b"], &["y"], &[], &[]).unwrap();
    assert_eq!(env(&l).dim(), 18);
    let g = env(&grassmann(3));
    assert_eq!(g.dim(), 8);
    let a = &g.algebra;
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                let (x, y, z) = (a.basis_vector(i), a.basis_vector(j), a.basis_vector(k));
                assert!(a.commutator(&a.commutator(&x, &y), &z).iter().all(|&c| c == 0));
            }
        }
    }
    let poly = from_names(5, &["t"], &[], &[], &[]).unwrap();
    let e = env(&poly);
    assert_eq!(e.dim(), 5);
    assert!(e.algebra.is_commutative());
}

#[test]
fn commutator_examples() {
    let l = heisenberg(3);
    let e = env(&l);
    let a = &e.algebra;
    let u = a.basis_vector(7);
    assert!(a.commutator(&u, &u).iter().all(|&c| c == 0));
    let (e1, e2, e3) = (e.embed(&[1, 0, 0]), e.embed(&[0, 1, 0]), e.embed(&[0, 0, 1]));
    assert_eq!(a.commutator(&e1, &e2), e3);

    let g = env(&grassmann(2));
    let (f1, f2) = (g.embed(&[1, 0]), g.embed(&[0, 1]));
    let a = &g.algebra;
    let sum: Vec<Scalar> = a.mul(&f1, &f2).iter().zip(a.mul(&f2, &f1)).map(|(x, y)| (x + y) % 3).collect();
    assert_eq!(a.super_commutator(&f1, &f2).unwrap(), sum);
}

#[test]
fn augmentation_power_examples() {
    let g = env(&grassmann(2));
    let omega = g.augmentation_ideal();
    assert_eq!(omega.dim(), g.dim() - 1);
    assert_eq!(g.algebra.subspace_power(&omega, 2).dim(), 1);
    assert!(g.algebra.subspace_power(&omega, 3).is_zero());
    let h = env(&heisenberg(3));
    assert!(nilpotency_index(&h.algebra, &h.augmentation_ideal(), None).index().is_some());
}

// --- series ---

#[test]
fn lie_series_examples() {
    let t = env(&from_names(5, &["t"], &[], &[], &[]).unwrap());
    assert_eq!(gamma_series(&t.algebra).class_or_length, Some(1));
    for n1 in 2..=4 {
        assert_eq!(gamma_series(&env(&grassmann(n1)).algebra).class_or_length, Some(2));
    }
    let s = gamma_series(&env(&sl2_p5()).algebra);
    assert!(s.stabilized && *s.dims.last().unwrap() > 0);

    // Grassmann is super-commutative: γ^s_2 = 0 while γ_2 ≠ 0.
    let g = env(&grassmann(2));
    let sup = gamma_super_series(&g.algebra).unwrap();
    assert_eq!(sup.class_or_length, Some(1));
    assert!(gamma_series(&g.algebra).dims[1] > 0);
}

#[test]
fn ideal_examples() {
    let g = env(&grassmann(2));
    let a = &g.algebra;
    let (f, d) = (a.field(), a.dim());
    assert!(two_sided_ideal(a, &Subspace::zero(f, d)).is_zero());
    assert!(two_sided_ideal(a, &Subspace::full(f, d)).is_full());
    let ci = commutator_ideal(a);
    let f1f2 = a.mul(&g.embed(&[1, 0]), &g.embed(&[0, 1]));
    assert_eq!(ci, Subspace::span(f, d, &[f1f2]).unwrap());
    assert_eq!(nilpotency_index(a, &ci, None), Nilpotency::Index { c: 1 });
    assert_eq!(nilpotency_index(a, &Subspace::zero(f, d), None), Nilpotency::Index { c: 0 });

    let s = env(&sl2_p5());
    let ci = commutator_ideal(&s.algebra);
    assert!(matches!(nilpotency_index(&s.algebra, &ci, None), Nilpotency::NotNilpotent { .. }));
    // h is toral, so span{h} ⊆ [R,R]R already contains a non-nil element.
    let h = Subspace::span(s.algebra.field(), s.dim(), &[s.embed(&[1, 0, 0])]).unwrap();
    assert!(h.is_subset(&ci).unwrap());
    assert!(matches!(nil_index_exact(&s.algebra, &h, 100).unwrap(), NilIndex::NotNil { .. }));
}

#[test]
fn nil_index_examples() {
    let g = env(&grassmann(2));
    let zero = Subspace::zero(g.algebra.field(), g.dim());
    assert!(matches!(nil_index_exact(&g.algebra, &zero, 10).unwrap(), NilIndex::Index { e: 1, .. }));
    // n1 = 1, 2: every element of ω squares to zero; n1 = 3 needs the cube.
    for (n1, want) in [(1, 2), (2, 2), (3, 3)] {
        let e = env(&grassmann(n1));
        match nil_index_exact(&e.algebra, &e.augmentation_ideal(), 1 << 12).unwrap() {
            NilIndex::Index { e, .. } => assert_eq!(e, want, "n1 = {n1}"),
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn quotient_examples() {
    let h = env(&heisenberg(3));
    let a = &h.algebra;
    let (f, d) = (a.field(), a.dim());
    assert_eq!(a.quotient(&Subspace::zero(f, d)).unwrap().algebra.dim(), d);
    let all = a.quotient(&Subspace::full(f, d)).unwrap();
    assert_eq!(all.algebra.dim(), 0);
    assert!(all.unit_collapsed);
    // e3 = [e1, e2] ∈ ω², so the quotient is spanned by 1, e1, e2.
    let q = a.quotient(&ideal_square(a, &h.augmentation_ideal())).unwrap();
    assert_eq!(q.algebra.dim(), 3);
    assert!(q.algebra.is_commutative());
}

#[test]
fn mu_examples() {
    assert_eq!(mu(2, 3), 9);
    for d in 1..10 {
        assert_eq!(mu(1, d), d + 1);
    }
}

#[test]
fn abc_examples() {
    let h = env(&heisenberg(3));
    let a = &h.algebra;
    let (f, d) = (a.field(), a.dim());
    let sa = Subspace::span(f, d, &[h.embed(&[1, 0, 0])]).unwrap();
    let sb = Subspace::span(f, d, &[h.embed(&[0, 1, 0]), a.basis_vector(5)]).unwrap();
    let sc = Subspace::span(f, d, &[h.embed(&[0, 1, 0]), h.embed(&[1, 0, 0])]).unwrap();
    for n in 0..=3 {
        assert!(check_abc_containment(a, &sa, &sb, &sc, n), "n = {n}");
    }
}

// --- witnesses and verdicts ---

#[test]
fn witness_examples() {
    let no_odd = heisenberg(3);
    match find_witness_m(&no_odd, true, 6561) {
        WitnessSearch::Found { witness, .. } => assert!(witness.basis.is_empty()),
        other => panic!("{other:?}"),
    }
    match find_witness_m(&toral_odd(), true, 6561) {
        WitnessSearch::Found { witness, .. } => {
            assert!(witness.basis.is_empty());
            assert_eq!(witness.codim, 1);
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(find_witness_m(&clifford(), true, 6561), WitnessSearch::NoneExists { candidates: 5 }));
}

fn quad(l: &LieSuperData) -> (String, String) {
    let r = classify(l, None, Caps::default());
    assert!(r.all_agree(), "{:?}", r.disagreements());
    let s = |v: [Verdict; 4]| v.iter().map(|x| x.short()).collect::<String>();
    (s(r.condition_quadruple()), s(r.quadruple()))
}

#[test]
fn verdict_examples() {
    let abelian = from_names(3, &["a", "b"], &["y"], &[], &[]).unwrap();
    for (l, want) in [
        (abelian, "YYYY"),
        (sl2_p5(), "NNNN"),
        (clifford(), "NNNN"),
        (toral_odd(), "YYYY"),
        (grassmann(3), "YYYY"),
        (weight_vector(), "YYNN"),
        (heisenberg(3), "YYYY"),
    ] {
        let (cond, oracle) = quad(&l);
        assert_eq!(cond, want);
        assert_eq!(oracle, want);
    }
}

#[test]
fn nilpotent_branch_for_single_odd_generator() {
    let r = classify(&toral_odd(), None, Caps::default());
    let nil = r.property(Property::LieNilpotent);
    assert_eq!(nil.condition, Verdict::Yes);
    assert!(env(&toral_odd()).algebra.is_commutative());
}
