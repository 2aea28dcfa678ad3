mod common;

use common::{det, minor_gcd_invariants, random_family_tuple, FAMILIES, FIELD_FAMILIES};
use monodromy::duality::{dualize_operator, dualize_tuple};
use monodromy::group::CyclicSum;
use monodromy::hom::{submodule_equal, ModuleHom};
use monodromy::matrix::ExactMatrix;
use monodromy::random::{random_automorphism, random_element, random_hom, random_nonsingular, random_unimodular, torsion_summand_menu, InstanceRng};
use monodromy::reconstruct::{eigen_partial_check, fixed_space_at_infinity, invariant_subspace, reconstruct_tuple};
use monodromy::ring::{int, RingDescriptor};
use monodromy::seifert::{intersection_from_seifert, monodromy_from_seifert};
use monodromy::snf::smith_normal_form;
use monodromy::star::{picard_defect, FreeGroupWord};
use proptest::prelude::*;

fn int_rows(m: &ExactMatrix) -> Vec<Vec<i128>> {
    m.to_rows().iter().map(|r| r.iter().map(|x| i128::try_from(x.to_integer()).unwrap()).collect()).collect()
}

fn integer_matrix(rows: usize, cols: usize, entries: &[i64]) -> ExactMatrix {
    ExactMatrix::new(RingDescriptor::Integers, rows, cols, entries[..rows * cols].iter().map(|&x| int(x)).collect()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_form_factors_the_matrix(rows in 1usize..=4, cols in 1usize..=4, entries in prop::collection::vec(-6i64..=6, 16)) {
        let a = integer_matrix(rows, cols, &entries);
        let (u, d, v) = smith_normal_form(&a).unwrap();
        prop_assert_eq!(u.mul(&d).unwrap().mul(&v).unwrap(), a.clone());
        prop_assert_eq!(det(&int_rows(&u)).abs(), 1);
        prop_assert_eq!(det(&int_rows(&v)).abs(), 1);
        let diag: Vec<i128> = (0..rows.min(cols)).map(|i| int_rows(&d)[i][i]).collect();
        prop_assert_eq!(diag, minor_gcd_invariants(&int_rows(&a), cols));
    }

    #[test]
    fn rational_arithmetic_is_exact(n in 1usize..=4, entries in prop::collection::vec(-5i64..=5, 32)) {
        let q = RingDescriptor::Rationals;
        let a = ExactMatrix::new(q.clone(), n, n, entries[..n * n].iter().map(|&x| int(x)).collect()).unwrap();
        let b = ExactMatrix::new(q.clone(), n, n, entries[16..16 + n * n].iter().map(|&x| int(x)).collect()).unwrap();
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.determinant().unwrap(), a.determinant().unwrap() * b.determinant().unwrap());
        match a.inverse() {
            Ok(inv) => {
                prop_assert!(a.mul(&inv).unwrap().is_identity());
                prop_assert!(inv.mul(&a).unwrap().is_identity());
            }
            Err(_) => prop_assert!(a.determinant().unwrap() == int(0)),
        }
        let oracle = det(&a.to_rows().iter().map(|r| r.iter().map(|x| i128::try_from(x.to_integer()).unwrap()).collect()).collect::<Vec<_>>());
        prop_assert_eq!(a.determinant().unwrap(), int(oracle as i64));
    }

    #[test]
    fn invertible_iff_kernel_and_cokernel_vanish(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let menu = torsion_summand_menu();
        let g = rng.pick(&menu).as_cyclic_sum();
        let z = RingDescriptor::Integers;
        let f = if rng.below(2) == 0 { random_hom(&mut rng, &z, &g, &g, 2) } else { random_automorphism(&mut rng, &z, &g, 3) };
        let trivial = f.kernel().unwrap().group.is_trivial() && f.cokernel().unwrap().group.is_trivial();
        prop_assert_eq!(f.is_automorphism().unwrap(), trivial);
        if let Ok(inv) = f.invert() {
            prop_assert!(trivial);
            prop_assert!(inv.compose(&f).unwrap().is_identity());
            prop_assert!(f.compose(&inv).unwrap().is_identity());
        }
    }

    #[test]
    fn defect_of_a_local_operator_lives_in_its_row(seed in any::<u64>(), family in 0usize..6) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FAMILIES[family], 4, 3);
        let dec = tuple.decomposition();
        for (k, op) in tuple.operators().iter().enumerate() {
            let p = picard_defect(dec, op.to_full_operator(), k).unwrap();
            prop_assert!(p.is_blockrow);
            prop_assert_eq!(p.defect.block(dec.range(k), 0..dec.total().len()), op.defect_row());
        }
    }

    #[test]
    fn a_word_times_its_inverse_is_the_identity(seed in any::<u64>(), letters in prop::collection::vec((0usize..8, any::<bool>()), 0..8)) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FAMILIES[(seed % 6) as usize], 4, 2);
        let t = tuple.len();
        let w = FreeGroupWord::new(letters.iter().map(|&(i, s)| (i % t + 1, if s { 1 } else { -1 }))).unwrap();
        prop_assert!(tuple.evaluate_word(&w.concat(&w.inverse())).unwrap().is_identity());
        prop_assert_eq!(tuple.evaluate_word(&FreeGroupWord::loop_at_infinity(t)).unwrap(), tuple.compose());
    }

    #[test]
    fn reconstruction_inverts_composition(seed in any::<u64>(), family in 0usize..6) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FAMILIES[family], 6, 4);
        prop_assert_eq!(reconstruct_tuple(&tuple.compose(), tuple.decomposition()).unwrap(), tuple);
    }

    #[test]
    fn eigen_partial_sides_agree(seed in any::<u64>(), family in 0usize..6, a in -2i64..=2) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FAMILIES[family], 4, 3);
        let a = tuple.decomposition().hom_ring().canonical(&int(a)).unwrap();
        let v = random_element(&mut rng, tuple.decomposition());
        let c = eigen_partial_check(&tuple, &v, &a).unwrap();
        prop_assert_eq!(c.lhs, c.rhs);
    }

    #[test]
    fn invariants_are_the_fixed_space_at_infinity(seed in any::<u64>(), family in 0usize..6) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FAMILIES[family], 5, 3);
        prop_assert!(submodule_equal(&invariant_subspace(&tuple).unwrap(), &fixed_space_at_infinity(&tuple).unwrap()).unwrap());
    }

    #[test]
    fn dualizing_is_an_involutive_contravariant_functor(seed in any::<u64>(), family in 0usize..4) {
        let mut rng = InstanceRng::new(seed);
        let tuple = random_family_tuple(&mut rng, FIELD_FAMILIES[family], 4, 3);
        let ring = tuple.decomposition().hom_ring();
        let g = tuple.decomposition().total().clone();
        let a = tuple.compose();
        let b = random_automorphism(&mut rng, &ring, &g, 4);
        prop_assert_eq!(dualize_operator(&dualize_operator(&a).unwrap()).unwrap(), a.clone());
        let ab = dualize_operator(&a.compose(&b).unwrap()).unwrap();
        prop_assert_eq!(ab, dualize_operator(&a).unwrap().compose(&dualize_operator(&b).unwrap()).unwrap());
        let dual = dualize_tuple(&tuple).unwrap();
        prop_assert_eq!(dual.compose(), dual.at_infinity);
    }

    #[test]
    fn dual_pairing_is_preserved(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let n = rng.range(1, 4) as usize;
        let q = RingDescriptor::Rationals;
        let m = random_automorphism(&mut rng, &q, &CyclicSum::free(n), 4);
        let d = dualize_operator(&m).unwrap();
        // <m* phi, m v> = <phi, v> for phi, v ranging over basis vectors
        let pairing = d.matrix().transpose().mul(m.matrix()).unwrap();
        prop_assert!(pairing.is_identity());
    }

    #[test]
    fn seifert_relation_roundtrips(seed in any::<u64>()) {
        let mut rng = InstanceRng::new(seed);
        let n = rng.range(1, 5) as usize;
        let m = random_unimodular(&mut rng, n);
        let l = random_nonsingular(&mut rng, n, 3);
        let s = intersection_from_seifert(&l, &m).unwrap();
        let id = ExactMatrix::identity(RingDescriptor::Integers, n);
        prop_assert_eq!(s.clone(), l.mul(&id.sub(&m).unwrap()).unwrap());
        let back = monodromy_from_seifert(&l, &s).unwrap();
        prop_assert!(back.realizable);
        prop_assert_eq!(back.integral(), Some(m));
    }
}

#[test]
fn identity_hom_has_trivial_kernel_and_cokernel() {
    let g = torsion_summand_menu()[5].as_cyclic_sum();
    let id = ModuleHom::identity(RingDescriptor::Integers, g);
    assert!(id.kernel().unwrap().group.is_trivial());
    assert!(id.cokernel().unwrap().group.is_trivial());
}
