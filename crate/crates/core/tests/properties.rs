use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_rational::BigRational;
use proptest::prelude::*;

use toric_deform::catalog;
use toric_deform::cohomology::{
    cech_h_dim, h1_class_rank, h1_dim_graph, h1_dim_graph_with, is_coboundary, CechSlice,
    Coefficients, GraphFlavor,
};
use toric_deform::deformation::{
    compute_slice, enumerate_decompositions, ks_basis, ks_cocycle, realize,
};
use toric_deform::lattice_fan::{
    adapted_basis, detect_a1_cylinder, fano_status, iso_class, order_surface, pair,
    self_intersection_cycle, Fan, FanoStatus, LatticeVector, SurfaceFan, Unimodular, Weight,
};
use toric_deform::tangent::{surface_support_widened, t1_dim_degree, t1_total};

fn corpus() -> &'static [SurfaceFan] {
    static CORPUS: OnceLock<Vec<SurfaceFan>> = OnceLock::new();
    CORPUS.get_or_init(|| catalog::surface_corpus(7))
}

fn surface() -> impl Strategy<Value = &'static SurfaceFan> {
    (0..corpus().len()).prop_map(|k| &corpus()[k])
}

fn unimodular() -> impl Strategy<Value = Unimodular> {
    prop::collection::vec((any::<bool>(), -3i64..=3, any::<bool>()), 1..6).prop_map(|ops| {
        let mut m = vec![vec![1i64, 0], vec![0, 1]];
        for (row, c, swap) in ops {
            let (i, j) = if row { (0, 1) } else { (1, 0) };
            for k in 0..2 {
                m[i][k] += c * m[j][k];
            }
            if swap {
                m.swap(0, 1);
            }
        }
        Unimodular::from_n_matrix(m).unwrap()
    })
}

fn primitive_weight() -> impl Strategy<Value = Weight> {
    (-6i64..=6, -6i64..=6)
        .prop_filter("primitive", |(a, b)| num_integer::gcd(*a, *b) == 1)
        .prop_map(|(a, b)| Weight::new([a, b]))
}

fn threefold() -> impl Strategy<Value = Fan> {
    (0usize..4, any::<prop::sample::Index>(), 0usize..3).prop_map(|(base, cone, depth)| {
        let fan = match base {
            0 => catalog::projective_space(3),
            1 => catalog::threefold_two_slices(),
            2 => catalog::weakly_fano_threefold(),
            _ => catalog::product(catalog::hirzebruch(2).fan(), &catalog::projective_space(1)),
        };
        if depth == 0 {
            return fan;
        }
        let c = cone.get(fan.max_cones());
        let face = c.rays()[..depth + 1].to_vec();
        fan.star_subdivide(&face).unwrap()
    })
}

fn neg(u: &Weight) -> Weight {
    Weight(u.0.iter().map(|x| -x).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn adapted_basis_sends_r_up_and_preserves_pairing(
        r in primitive_weight(),
        v in prop::array::uniform2(-20i64..=20),
        u in prop::array::uniform2(-20i64..=20),
    ) {
        let b = adapted_basis(&r).unwrap();
        prop_assert_eq!(b.apply_m(&r), Weight::new([0, 1]));
        prop_assert_eq!(b.det(), 1);
        let (v, u) = (LatticeVector::new(v), Weight::new(u));
        prop_assert_eq!(pair(&b.apply_n(&v), &b.apply_m(&u)), pair(&v, &u));
    }

    #[test]
    fn classification_is_unimodular_invariant(s in surface(), g in unimodular()) {
        let moved = order_surface(&s.fan().transform(&g)).unwrap();
        prop_assert_eq!(iso_class(s), iso_class(&moved));
        prop_assert_eq!(fano_status(s.fan()), fano_status(moved.fan()));
        prop_assert_eq!(detect_a1_cylinder(s.fan()).len(), detect_a1_cylinder(moved.fan()).len());
    }

    #[test]
    fn fano_status_matches_cycle_bounds(s in surface()) {
        let a = self_intersection_cycle(s);
        match fano_status(s.fan()) {
            FanoStatus::Fano => prop_assert!(a.iter().all(|&x| x <= 1)),
            FanoStatus::WeaklyFano => prop_assert!(a.iter().all(|&x| x <= 2)),
            FanoStatus::Neither => prop_assert!(a.iter().any(|&x| x > 2)),
        }
        if !detect_a1_cylinder(s.fan()).is_empty() {
            prop_assert!(a.contains(&2));
        }
    }

    #[test]
    fn t1_is_unimodular_invariant(s in surface(), g in unimodular()) {
        let a = t1_total(s.fan(), None).unwrap();
        let b = t1_total(&s.fan().transform(&g), None).unwrap();
        prop_assert_eq!(a.total, b.total);
        let moved: BTreeSet<(Weight, usize)> =
            a.entries.iter().map(|d| (g.apply_m(&d.u), d.dim)).collect();
        let direct: BTreeSet<(Weight, usize)> =
            b.entries.iter().map(|d| (d.u.clone(), d.dim)).collect();
        prop_assert_eq!(moved, direct);
    }

    #[test]
    fn blow_up_is_monotone(s in surface(), k in any::<prop::sample::Index>()) {
        prop_assume!(s.len() < 7);
        let t = catalog::blow_up(s, k.index(s.len()));
        let mut degrees: BTreeSet<Weight> = BTreeSet::new();
        degrees.extend(t1_total(s.fan(), None).unwrap().entries.into_iter().map(|d| d.u));
        degrees.extend(t1_total(t.fan(), None).unwrap().entries.into_iter().map(|d| d.u));
        for u in &degrees {
            prop_assert!(t1_dim_degree(s.fan(), u).dim <= t1_dim_degree(t.fan(), u).dim);
        }
    }

    #[test]
    fn widened_support_finds_nothing_new(s in surface()) {
        let exact: Vec<Weight> = t1_total(s.fan(), None).unwrap().entries.into_iter().map(|d| d.u).collect();
        let wide = surface_support_widened(s.fan(), 3).unwrap();
        prop_assert_eq!(exact, wide);
    }

    #[test]
    fn exact_support_agrees_with_brute_force(s in surface(), u in prop::array::uniform2(-8i64..=8)) {
        let u = Weight::new(u);
        let support = t1_total(s.fan(), None).unwrap().entries;
        let listed = support.iter().find(|d| d.u == u).map_or(0, |d| d.dim);
        prop_assert_eq!(t1_dim_degree(s.fan(), &u).dim, listed);
    }

    #[test]
    fn graph_matches_cech(s in surface(), u in prop::array::uniform2(-5i64..=5)) {
        let u = Weight::new(u);
        for i in 0..s.len() {
            let c = CechSlice::build(s.fan(), Coefficients::Divisor(i), &u, 2).unwrap();
            prop_assert!(c.is_complex());
            prop_assert_eq!(h1_dim_graph(s.fan(), i, &u), cech_h_dim(s.fan(), i, &u, 1).unwrap());
            prop_assert_eq!(cech_h_dim(s.fan(), i, &u, 2).unwrap(), 0);
        }
    }

    #[test]
    fn scaling_vanishes(s in surface(), u in prop::array::uniform2(-6i64..=6)) {
        let u = Weight::new(u);
        for i in 0..s.len() {
            if u.0 != [0, 0] && pair(s.fan().ray(i), &u) <= -2 {
                prop_assert_eq!(h1_dim_graph(s.fan(), i, &u), 0);
                prop_assert_eq!(cech_h_dim(s.fan(), i, &u, 1).unwrap(), 0);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn restricted_graph_equality_in_dimension_three(
        fan in threefold(),
        i in any::<prop::sample::Index>(),
        u in prop::array::uniform3(-3i64..=3),
    ) {
        let i = i.index(fan.ray_count());
        let u = Weight::new(u);
        let full = h1_dim_graph_with(&fan, i, &u, GraphFlavor::Full);
        let restricted = h1_dim_graph_with(&fan, i, &u, GraphFlavor::Restricted);
        prop_assert_eq!(full, restricted);
        prop_assert_eq!(full, cech_h_dim(&fan, i, &u, 1).unwrap());
    }

    #[test]
    fn lambda0_shift_is_a_coboundary(s in surface(), pick in any::<prop::sample::Index>(), c in -4i64..=4) {
        let support = t1_total(s.fan(), None).unwrap().entries;
        prop_assume!(!support.is_empty());
        let r = neg(&pick.get(&support).u);
        let slice = compute_slice(s, &r).unwrap();
        for d in enumerate_decompositions(&slice) {
            let e = realize(&slice, &d.a, d.lambda0 + c).unwrap();
            let step = BigRational::from_integer((c * i64::from(d.a[0])).into());
            for (x, y) in d.tilde0.iter().zip(&e.tilde0) {
                prop_assert_eq!(&x.shift(&-step.clone()), y);
            }
            for (x, y) in d.tilde_t.iter().zip(&e.tilde_t) {
                prop_assert_eq!(&x.shift(&step), y);
            }
            let diff = ks_cocycle(&slice, &d)
                .bundle_cochain(&slice)
                .difference(&ks_cocycle(&slice, &e).bundle_cochain(&slice));
            prop_assert!(is_coboundary(s.fan(), &diff).unwrap().is_coboundary());
        }
    }

    #[test]
    fn decompositions_are_minkowski_sound(s in surface(), r in primitive_weight()) {
        prop_assume!(r.0 != [0, 0]);
        let slice = compute_slice(s, &r).unwrap();
        for d in enumerate_decompositions(&slice) {
            prop_assert!(d.check(&slice).is_ok());
            prop_assert!(d.satisfies_covering());
            let k = ks_cocycle(&slice, &d);
            prop_assert_eq!(k.tangent_sum(), [0, 0]);
            prop_assert!(k.euler_compatible(&slice));
            prop_assert!(k.is_homogeneous(&slice));
        }
    }

    #[test]
    fn pi_basis_spans_t1(s in surface(), r in primitive_weight()) {
        let slice = compute_slice(s, &r).unwrap();
        let b = ks_basis(&slice).unwrap();
        prop_assert!(b.is_certified());
        let mut all: Vec<_> = enumerate_decompositions(&slice)
            .iter()
            .map(|d| ks_cocycle(&slice, d).bundle_cochain(&slice))
            .collect();
        let enumerated = h1_class_rank(s.fan(), &neg(&r), &all).unwrap();
        prop_assert!(enumerated <= b.t1_dim);
        all.extend(b.elements.iter().map(|e| e.cocycle.bundle_cochain(&slice)));
        prop_assert_eq!(h1_class_rank(s.fan(), &neg(&r), &all).unwrap(), b.t1_dim);
    }
}
