mod common;

use common::Gen;
use modelcat::colimits::pushout;
use modelcat::homology::{components, homology, weak_equivalence_certificate};
use modelcat::{SimplexRef, SimplicialMap};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generated_objects_satisfy_simplicial_identities(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let x = g.object(8);
        prop_assert!(x.validate().is_valid());
        for d in 2..=x.dim().unwrap_or(0) + 1 {
            for s in x.enumerate_simplices(d) {
                for j in 1..=d {
                    for i in 0..j {
                        prop_assert_eq!(x.face(&x.face(&s, j), i), x.face(&x.face(&s, i), j - 1));
                    }
                }
                for j in 0..=d {
                    let up = x.degeneracy(&s, j);
                    prop_assert_eq!(x.face(&up, j), s.clone());
                    prop_assert_eq!(x.face(&up, j + 1), s.clone());
                }
            }
        }
    }

    #[test]
    fn pushout_square_commutes(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let (a, b, c) = (g.small_object(3), g.object(4), g.object(4));
        let (Some(i), Some(m)) = (g.map_between(&a, &b), g.map_between(&a, &c)) else { return Ok(()) };
        let p = pushout(&i, &m).unwrap();
        prop_assert!(p.corner.validate().is_valid());
        prop_assert_eq!(p.leg_from_b.after(&i).unwrap(), p.leg_from_c.after(&m).unwrap());
        prop_assert!(p.leg_from_b.check().is_ok() && p.leg_from_c.check().is_ok());
    }

    #[test]
    fn births_never_precede_faces(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let base = g.small_object(4);
        let r = g.presentation(base, None, 4, 10, 2);
        let x = r.current();
        for id in x.ids() {
            let born = r.record.birth_of(id);
            prop_assert!(born <= r.stages());
            let faces = if id.dim == 0 { 0 } else { id.dim + 1 };
            for i in 0..faces {
                let f = x.face(&SimplexRef::nondegenerate(id), i);
                prop_assert!(r.record.birth_of(f.base) <= born);
            }
        }
    }

    #[test]
    fn identities_are_certified(seed in any::<u64>()) {
        let mut g = Gen::new(seed);
        let x = g.object(7);
        prop_assert!(weak_equivalence_certificate(&SimplicialMap::identity(&x), 3).unwrap().passed());
        prop_assert_eq!(homology(&x, 0).unwrap().betti, components(&x).iter().collect::<std::collections::HashSet<_>>().len());
    }
}
