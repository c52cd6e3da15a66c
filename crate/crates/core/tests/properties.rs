use proptest::prelude::*;

use cyclic_ag::lincode::{Budget, LinearCode, MonomialMap};
use cyclic_ag::rfield::{in_riemann_roch_space, rr_basis, span_dimension};
use cyclic_ag::selftest::valid_specs;
use cyclic_ag::sigma::{construct_sigma_code, verify_sigma_cyclic};
use cyclic_ag::{Divisor, Elem, Field, MobiusMap, Place, Poly, ProjPoint, RatFn};

const ORDERS: [u32; 8] = [2, 3, 4, 5, 7, 8, 9, 11];

fn field(i: usize) -> Field {
    Field::from_order(ORDERS[i % ORDERS.len()]).unwrap()
}

fn elem(f: &Field, seed: u32) -> Elem {
    f.elem(seed % f.q()).unwrap()
}

fn nonzero(f: &Field, seed: u32) -> Elem {
    f.elem(1 + seed % (f.q() - 1)).unwrap()
}

fn poly(f: &Field, seeds: &[u32]) -> Poly {
    Poly::from_coeffs(f, seeds.iter().map(|&s| elem(f, s)).collect())
}

fn map(f: &Field, s: [u32; 4]) -> MobiusMap {
    let all = MobiusMap::all(f);
    let i = s.iter().fold(0usize, |acc, &x| acc.wrapping_mul(31).wrapping_add(x as usize));
    all[i % all.len()].clone()
}

fn point(f: &Field, seed: u32) -> ProjPoint {
    let all = ProjPoint::all(f);
    all[seed as usize % all.len()]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(i in 0usize..8, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let f = field(i);
        let (a, b, c) = (elem(&f, a), elem(&f, b), elem(&f, c));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        prop_assert_eq!(f.frobenius(f.add(a, b)), f.add(f.frobenius(a), f.frobenius(b)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a)), f.one());
            prop_assert_eq!(f.pow(a, f.q() as u64 - 1), f.one());
            prop_assert_eq!((f.q() - 1) % f.element_order(a).unwrap(), 0);
        }
    }

    #[test]
    fn mobius_action_is_a_group_action(i in 0usize..8, s in any::<[u32; 4]>(), t in any::<[u32; 4]>(), p in any::<u32>()) {
        let f = field(i);
        let (m1, m2, pt) = (map(&f, s), map(&f, t), point(&f, p));
        prop_assert_eq!(m1.compose(&m2).apply(pt), m1.apply(m2.apply(pt)));
        prop_assert_eq!(m1.apply_inverse(m1.apply(pt)), pt);
        prop_assert_eq!(m1.compose(&m1.inverse()), MobiusMap::identity(&f));
        prop_assert!(m1.pow(m1.order()).is_identity());
        if let Ok(orbit) = m1.orbit(pt) {
            prop_assert_eq!(m1.order() % orbit.len() as u64, 0);
            prop_assert_eq!(m1.order(), orbit.len() as u64 * m1.isotropy_order(pt));
        }
    }

    #[test]
    fn substitution_matches_evaluation(
        i in 0usize..8,
        num in prop::collection::vec(any::<u32>(), 0..5),
        den in prop::collection::vec(any::<u32>(), 1..4),
        s in any::<[u32; 4]>(),
        p in any::<u32>(),
    ) {
        let f = field(i);
        let den = poly(&f, &den);
        prop_assume!(!den.is_zero());
        let z = RatFn::new(poly(&f, &num), den).unwrap();
        let a = map(&f, s);
        let t = point(&f, p);
        prop_assert_eq!(z.substitute(&a).value_at(t), z.value_at(a.apply(t)));
        prop_assert_eq!(z.substitute(&a).degree(), z.degree());
    }

    #[test]
    fn factorization_reassembles(i in 0usize..8, seeds in prop::collection::vec(any::<u32>(), 1..9)) {
        let f = field(i);
        let g = poly(&f, &seeds);
        prop_assume!(g.degree().is_some_and(|d| d >= 1));
        let mut prod = Poly::constant(&f, g.lead().unwrap());
        for (h, e) in g.factor() {
            prop_assert!(h.is_monic() && h.is_irreducible());
            prod = &prod * &h.pow(e);
        }
        prop_assert_eq!(prod, g);
    }

    #[test]
    fn riemann_roch_basis_has_full_dimension(
        i in 0usize..8,
        terms in prop::collection::vec((any::<u32>(), -2i64..4), 0..4),
        s in any::<[u32; 4]>(),
    ) {
        let f = field(i);
        let g = Divisor::from_terms(terms.iter().map(|&(p, c)| (Place::Rational(point(&f, p)), c)));
        let basis = rr_basis(&f, &g);
        let expected = if g.degree() < 0 { 0 } else { g.degree() as usize + 1 };
        prop_assert_eq!(basis.len(), expected);
        prop_assert_eq!(span_dimension(&f, &basis), expected);
        for z in &basis {
            prop_assert!(in_riemann_roch_space(z, &g));
        }
        prop_assert_eq!(g.image(&map(&f, s)).degree(), g.degree());
    }

    #[test]
    fn row_operations_preserve_code_properties(
        i in 0usize..8,
        rows in prop::collection::vec(prop::collection::vec(any::<u32>(), 5), 1..4),
        ops in prop::collection::vec((any::<usize>(), any::<usize>(), any::<u32>()), 0..6),
    ) {
        let f = field(i);
        let mut m: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&x| elem(&f, x)).collect()).collect();
        let code = LinearCode::new(&f, 5, m.clone()).unwrap();
        let k = m.len();
        for (a, b, c) in ops {
            let (a, b) = (a % k, b % k);
            if a == b {
                let c = nonzero(&f, c);
                m[a].iter_mut().for_each(|x| *x = f.mul(*x, c));
            } else {
                let c = elem(&f, c);
                let src = m[b].clone();
                m[a].iter_mut().zip(&src).for_each(|(x, &y)| *x = f.add(*x, f.mul(c, y)));
            }
        }
        let other = LinearCode::new(&f, 5, m).unwrap();
        prop_assert!(code.codes_equal(&other).unwrap());
        prop_assert_eq!(code.is_cyclic(), other.is_cyclic());
        prop_assert_eq!(code.dimension(), other.dimension());
    }

    #[test]
    fn monomial_maps_preserve_weights(
        i in 0usize..8,
        rows in prop::collection::vec(prop::collection::vec(any::<u32>(), 5), 1..3),
        perm_seed in any::<u64>(),
        scale in prop::collection::vec(any::<u32>(), 5),
    ) {
        let f = field(i);
        let m: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&x| elem(&f, x)).collect()).collect();
        let code = LinearCode::new(&f, 5, m).unwrap();
        let mut perm: Vec<usize> = (0..5).collect();
        let mut s = perm_seed;
        for j in (1..5).rev() {
            perm.swap(j, (s % (j as u64 + 1)) as usize);
            s /= 7;
        }
        let w = MonomialMap { perm, scale: scale.iter().map(|&x| nonzero(&f, x)).collect() };
        let image = code.apply_monomial(&w).unwrap();
        let budget = Budget::default();
        prop_assert_eq!(code.weight_enumerator(&budget).unwrap(), image.weight_enumerator(&budget).unwrap());
        for row in code.rref() {
            prop_assert!(image.contains(&w.apply(&f, row)));
        }
    }

    #[test]
    fn standard_form_generates_the_code(
        i in 0usize..8,
        rows in prop::collection::vec(prop::collection::vec(any::<u32>(), 6), 1..4),
    ) {
        let f = field(i);
        let m: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&x| elem(&f, x)).collect()).collect();
        let code = LinearCode::new(&f, 6, m).unwrap();
        prop_assume!(code.dimension() > 0);
        let sf = code.standard_form().unwrap();
        let k = code.dimension();
        let rebuilt: Vec<Vec<Elem>> = (0..k)
            .map(|r| {
                let mut v = vec![f.zero(); 6];
                v[sf.perm[r]] = f.one();
                for (j, &x) in sf.w[r].iter().enumerate() {
                    v[sf.perm[k + j]] = x;
                }
                v
            })
            .collect();
        prop_assert!(code.codes_equal(&LinearCode::new(&f, 6, rebuilt).unwrap()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sigma_codes_are_cyclic_mds(qi in 0usize..4, pick in any::<usize>()) {
        let f = Field::from_order([4, 5, 7, 8][qi]).unwrap();
        let specs = valid_specs(&f, 8);
        let spec = &specs[pick % specs.len()];
        let code = construct_sigma_code(spec).unwrap();
        let n = spec.length().unwrap();
        prop_assert!(code.is_cyclic());
        prop_assert_eq!(code.dimension() as i64, spec.r + 1);
        prop_assert_eq!(code.min_distance(&Budget::default()).unwrap() as i64, n as i64 - spec.r);
        let report = verify_sigma_cyclic(&spec.map, &spec.places().unwrap(), &spec.divisor());
        prop_assert!(report.all_hold());
    }
}
