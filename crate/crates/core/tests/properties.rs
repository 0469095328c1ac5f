//! Randomized invariants.

use std::sync::OnceLock;

use proptest::prelude::*;

use superlie::corpus::{builtin_sources, parse_algebra, AlgebraFile};
use superlie::linalg::{BilinearMap, Fp, Subspace};
use superlie::pbw::{Envelope, PbwBasis};
use superlie::series::{delta_series, gamma_series, SeriesResult};
use superlie::superlie::{verify_axioms, LieSuperData};
use superlie::Scalar;

const ENVELOPES: [&str; 8] = [
    "sl2_p3",
    "sl2_p5",
    "borel2",
    "heisenberg3_pmap",
    "clifford_obstruction",
    "weight_vector",
    "super_heisenberg",
    "large_nilpotent",
];

struct Fixture {
    lie: LieSuperData,
    env: Envelope,
    gamma: SeriesResult,
    delta: SeriesResult,
}

fn fixtures() -> &'static [Fixture] {
    static F: OnceLock<Vec<Fixture>> = OnceLock::new();
    F.get_or_init(|| {
        ENVELOPES
            .iter()
            .map(|name| {
                let text = builtin_sources().iter().find(|(n, _)| n == name).unwrap().1;
                let lie = parse_algebra(text).unwrap();
                let env = Envelope::build(&lie, 1024).unwrap();
                let gamma = gamma_series(&env.algebra);
                let delta = delta_series(&env.algebra);
                Fixture { lie, env, gamma, delta }
            })
            .collect()
    })
}

fn vector(p: u32, n: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec(0..p, n)
}

fn with_fixture() -> impl Strategy<Value = usize> {
    0..ENVELOPES.len()
}

fn field_strategy() -> impl Strategy<Value = Fp> {
    prop::sample::select(vec![3u32, 5, 7, 11, 13]).prop_map(|p| Fp::new(p).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(f in field_strategy(), a in 0u32..1000, b in 0u32..1000, c in 0u32..1000) {
        let p = f.p();
        let (a, b, c) = (a % p, b % p, c % p);
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a)), 1);
        }
        prop_assert_eq!(f.pow(a, p as u64), a);
        prop_assert_eq!(f.mul(f.half(), 2), 1);
    }

    #[test]
    fn decimal_reduction(f in field_strategy(), v in any::<i64>(), k in 0u64..1000) {
        let p = f.p() as i128;
        let big = v as i128 + p * k as i128;
        prop_assert_eq!(f.from_decimal(&big.to_string()), Some(f.from_i64_value(v)));
    }

    #[test]
    fn span_is_canonical(
        f in field_strategy(),
        rows in prop::collection::vec(prop::collection::vec(0u32..13, 5), 0..6),
        scale in 1u32..13,
    ) {
        let p = f.p();
        let rows: Vec<Vec<Scalar>> = rows.into_iter().map(|r| r.into_iter().map(|c| c % p).collect()).collect();
        let s = Subspace::span(f, 5, &rows).unwrap();
        let mut shuffled: Vec<Vec<Scalar>> = rows.iter().rev().cloned().collect();
        let k = scale % p;
        if k != 0 {
            for r in &mut shuffled {
                f.scale(r, k);
            }
        }
        // adding combinations of existing rows changes nothing
        if rows.len() >= 2 {
            shuffled.push(f.add_vec(&rows[0], &rows[1]));
        }
        let t = Subspace::span(f, 5, &shuffled).unwrap();
        if k != 0 {
            prop_assert_eq!(&s, &t);
        }
        for r in &rows {
            prop_assert!(s.contains(r));
        }
        prop_assert!(s.dim() <= rows.len().min(5));
    }

    #[test]
    fn dimension_formula(
        f in field_strategy(),
        a in prop::collection::vec(prop::collection::vec(0u32..13, 6), 0..5),
        b in prop::collection::vec(prop::collection::vec(0u32..13, 6), 0..5),
    ) {
        let p = f.p();
        let red = |v: Vec<Vec<u32>>| -> Vec<Vec<Scalar>> { v.into_iter().map(|r| r.into_iter().map(|c| c % p).collect()).collect() };
        let sa = Subspace::span(f, 6, &red(a)).unwrap();
        let sb = Subspace::span(f, 6, &red(b)).unwrap();
        let sum = sa.sum(&sb).unwrap();
        let meet = sa.intersection(&sb).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), sa.dim() + sb.dim());
        prop_assert!(meet.is_subset(&sa).unwrap() && meet.is_subset(&sb).unwrap());
        let q = sum.quotient_coords(&sa).unwrap();
        prop_assert_eq!(q.target_dim(), sum.dim() - sa.dim());
        for v in sa.basis() {
            prop_assert!(q.apply(v).iter().all(|&c| c == 0));
        }
    }

    #[test]
    fn pbw_index_round_trip(p in prop::sample::select(vec![3u32, 5]), n0 in 0usize..3, n1 in 0usize..4, pick in any::<u64>()) {
        let b = PbwBasis::new(p, n0, n1, 4096).unwrap();
        let i = (pick % b.dim() as u64) as usize;
        let m = b.monomial(i);
        prop_assert_eq!(b.index(&m).unwrap(), i);
        prop_assert_eq!(m.degree(), b.degree(i));
        prop_assert_eq!(m.parity(), b.parity(i));
    }

    #[test]
    fn envelope_is_associative(k in with_fixture(), seed in any::<u64>()) {
        let fx = &fixtures()[k];
        let a = &fx.env.algebra;
        let (p, d) = (a.field().p(), a.dim());
        // sparse random elements keep the products cheap at D = 324
        let elem = |s: u64| -> Vec<Scalar> {
            let mut v = vec![0; d];
            for t in 0..4u64 {
                let h = s.wrapping_mul(6364136223846793005).wrapping_add(t.wrapping_mul(1442695040888963407));
                v[(h >> 33) as usize % d] = ((h >> 7) % p as u64) as Scalar;
            }
            v
        };
        let (x, y, z) = (elem(seed), elem(seed ^ 0x9e37), elem(seed.rotate_left(17)));
        prop_assert_eq!(a.mul(&a.mul(&x, &y), &z), a.mul(&x, &a.mul(&y, &z)));
        prop_assert_eq!(a.mul(a.unit(), &x), x.clone());
        prop_assert_eq!(a.mul(&x, a.unit()), x);
    }

    #[test]
    fn lie_bracket_is_super_commutator(k in with_fixture(), x in vector(13, 16), y in vector(13, 16), odd_x in any::<bool>(), odd_y in any::<bool>()) {
        let fx = &fixtures()[k];
        let l = &fx.lie;
        let p = l.p();
        let homogeneous = |v: &[u32], odd: bool| -> Vec<Scalar> {
            (0..l.dim()).map(|i| if l.is_odd(i) == odd { v[i] % p } else { 0 }).collect()
        };
        let (x, y) = (homogeneous(&x, odd_x), homogeneous(&y, odd_y));
        let env = &fx.env;
        let lhs = env.embed(&l.bracket(&x, &y));
        let rhs = env.algebra.super_commutator(&env.embed(&x), &env.embed(&y)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn pmap_is_pth_power(k in with_fixture(), x in vector(13, 16)) {
        let fx = &fixtures()[k];
        let l = &fx.lie;
        let p = l.p();
        let x: Vec<Scalar> = (0..l.dim()).map(|i| if l.is_odd(i) { 0 } else { x[i] % p }).collect();
        let a = &fx.env.algebra;
        let u = fx.env.embed(&x);
        let mut pow = u.clone();
        for _ in 1..p {
            pow = a.mul(&pow, &u);
        }
        prop_assert_eq!(pow, fx.env.embed(&l.pmap_extend(&x)));
    }

    #[test]
    fn series_are_chains(k in with_fixture()) {
        let fx = &fixtures()[k];
        for s in [&fx.gamma, &fx.delta] {
            for w in s.terms.windows(2) {
                prop_assert!(w[1].is_subset(&w[0]).unwrap());
            }
        }
        // δ_n ⊆ γ_{2^n}
        for (n, dn) in fx.delta.terms.iter().enumerate().take(5) {
            if let Some(g) = fx.gamma.term((1usize << n) - 1) {
                prop_assert!(dn.is_subset(g).unwrap());
            }
        }
    }

    #[test]
    fn neumann_bound_random_maps(
        f in prop::sample::select(vec![3u32, 5]).prop_map(|p| Fp::new(p).unwrap()),
        u in 1usize..4,
        v in 1usize..4,
        w in 1usize..5,
        seed in prop::collection::vec(0u32..5, 48),
    ) {
        let p = f.p();
        let mut it = seed.into_iter().cycle();
        let images: Vec<Vec<Vec<Scalar>>> = (0..u)
            .map(|_| (0..v).map(|_| (0..w).map(|_| it.next().unwrap() % p).collect()).collect())
            .collect();
        let phi = BilinearMap::new(f, w, images).unwrap();
        let r = phi.neumann_check(1 << 12).unwrap();
        prop_assert!(r.holds, "{:?}", r);
    }

    #[test]
    fn file_round_trip_and_coefficient_shift(idx in 0usize..19, shift in 1i64..4) {
        let (_, text) = builtin_sources()[idx % builtin_sources().len()];
        let file = AlgebraFile::from_json(text).unwrap();
        prop_assert_eq!(AlgebraFile::from_json(&file.to_json()).unwrap(), file.clone());
        // adding a multiple of p to every coefficient leaves the algebra unchanged
        let p: i64 = file.p.to_string().parse().unwrap();
        let mut shifted = file.clone();
        for table in [&mut shifted.bracket, &mut shifted.pmap] {
            for terms in table.values_mut() {
                for c in terms.values_mut() {
                    let v: i64 = c.to_string().parse().unwrap();
                    *c = (v + shift * p * 1_000_000_007).into();
                }
            }
        }
        let a = file.to_lie().unwrap();
        let b = shifted.to_lie().unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert!(verify_axioms(&b, 6561).passed());
    }
}
