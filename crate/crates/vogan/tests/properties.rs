mod common;

use common::desk_types;
use proptest::prelude::*;
use vogan::diagram::{apply_r, canonical, involution_label, make_diagram, orbit};
use vogan::roots::{real_roots, real_roots_closed_form};
use vogan::{diagram_automorphisms, MoveSet, VoganDiagram};

/// A random valid diagram on a desk type.
fn arb_diagram() -> impl Strategy<Value = VoganDiagram> {
    (0..desk_types().len(), any::<usize>(), any::<u64>()).prop_map(|(ti, ri, bits)| {
        let t = desk_types()[ti];
        let rhos: Vec<_> = diagram_automorphisms(&t).into_iter().filter(|p| p.is_involution()).collect();
        let rho = rhos[ri % rhos.len()].clone();
        let ps: Vec<usize> = rho.fixed_points().into_iter().filter(|v| bits >> v & 1 == 1).collect();
        make_diagram(t, rho, &ps).unwrap()
    })
}

fn arb_moveset() -> impl Strategy<Value = MoveSet> {
    prop_oneof![Just(MoveSet::STRICT), Just(MoveSet::EXTENDED)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orbits_partition(d in arb_diagram(), m in arb_moveset(), pick in any::<prop::sample::Index>()) {
        let orb = orbit(&d, m);
        let y = orb.iter().nth(pick.index(orb.len())).unwrap();
        prop_assert_eq!(&orbit(y, m), &orb);
        prop_assert_eq!(canonical(y, m), canonical(&d, m));
    }

    #[test]
    fn reflections_are_involutions(d in arb_diagram(), m in arb_moveset()) {
        for j in d.painted() {
            if let Ok(x) = apply_r(&d, j, m) {
                prop_assert!(x.is_painted(j));
                prop_assert_eq!(apply_r(&x, j, m).unwrap(), d.clone());
            }
        }
    }

    #[test]
    fn labels_are_orbit_invariant(d in arb_diagram(), m in arb_moveset()) {
        let l = involution_label(&d, m);
        for y in orbit(&d, m).iter().take(16) {
            prop_assert_eq!(&involution_label(y, m), &l);
        }
    }

    #[test]
    fn root_methods_agree(ti in 0..10usize, n in 0..5usize) {
        let t = desk_types()[ti];
        prop_assert_eq!(real_roots(&t, n), real_roots_closed_form(&t, n).unwrap());
    }
}
