//! Sphericity on the rational line against line semiaffinity.

use num_traits::Signed;
use proptest::prelude::*;

use semiaffine::sphere::{
    is_1_spherical, line_semiaffine_witness, semiaffine_on_line, sphere_witness,
    to_integer_lattice, LinePointSet, Rational,
};

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-24i128..=24, 1i128..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn arb_points() -> impl Strategy<Value = LinePointSet> {
    prop::collection::vec(arb_rational(), 0..=6).prop_map(LinePointSet::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn sphericity_is_line_semiaffinity(p in arb_points()) {
        prop_assert_eq!(is_1_spherical(&p), semiaffine_on_line(&p), "{}", p);
        if p.len() >= 3 {
            prop_assert!(!is_1_spherical(&p), "{}", p);
        }
    }

    #[test]
    fn witnesses_are_genuine(p in arb_points()) {
        if let Some(w) = sphere_witness(&p) {
            let d = (w.a - w.b).abs();
            prop_assert!(p.contains(&w.a) && p.contains(&w.b) && p.contains(&w.c));
            prop_assert!(!p.contains(&(w.c + d)) && !p.contains(&(w.c - d)));
        }
        if let Some(w) = line_semiaffine_witness(&p) {
            prop_assert!(!p.contains(&(w.x + w.y - w.z)) && !p.contains(&(w.x - w.y + w.z)));
        }
    }

    #[test]
    fn sphericity_is_similarity_invariant(p in arb_points(), r in arb_rational(), s in arb_rational()) {
        prop_assume!(r != Rational::from_integer(0));
        let q = p.map_affine(r, s);
        prop_assert_eq!(is_1_spherical(&q), is_1_spherical(&p));
    }

    #[test]
    fn lattice_image_inverts(p in arb_points()) {
        prop_assume!(!p.is_empty());
        let img = to_integer_lattice(&p).unwrap();
        prop_assert_eq!(img.points[0], 0);
        let back = LinePointSet::new(img.points.iter().map(|&s| img.invert(s)));
        prop_assert_eq!(&back, &p);
        let ints: Vec<i64> = img.points.iter().map(|&s| s as i64).collect();
        prop_assert_eq!(
            is_1_spherical(&LinePointSet::from_integers(&ints)),
            is_1_spherical(&p)
        );
    }
}

#[test]
fn all_small_integer_sets() {
    for mask in 0u32..1 << 9 {
        let pts: Vec<i64> = (0..9).filter(|i| mask >> i & 1 == 1).collect();
        let p = LinePointSet::from_integers(&pts);
        assert_eq!(is_1_spherical(&p), semiaffine_on_line(&p), "{p}");
        assert_eq!(is_1_spherical(&p), pts.len() <= 2, "{p}");
    }
}
