mod common;

use common::props::{self, case_strategy, fixtures};
use proptest::prelude::*;

fn check(out: Result<usize, String>) -> Result<(), TestCaseError> {
    out.map(|_| ()).map_err(TestCaseError::fail)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn operators_commute_with_conjugation((fi, r) in case_strategy()) {
        check(props::operator_equivariance(&fixtures()[fi], r[0], r[1]))?;
    }

    #[test]
    fn normal_overgroups_stay_in_tilde_s((fi, r) in case_strategy()) {
        check(props::normal_overgroup_closure(&fixtures()[fi], r[0]))?;
    }

    #[test]
    fn relative_normalizers_stay_distinguished((fi, r) in case_strategy()) {
        check(props::normalizer_stays_distinguished(&fixtures()[fi], r[0]))?;
    }

    #[test]
    fn hat_lies_below_tilde((fi, r) in case_strategy()) {
        check(props::hat_below_tilde(&fixtures()[fi], r[0]))?;
    }

    #[test]
    fn sylow_normalizing_subgroups_are_distinguished((fi, r) in case_strategy()) {
        check(props::sylow_normalizer_distinguished(&fixtures()[fi], r[0]))?;
    }

    #[test]
    fn boundary_maps_are_consistent((fi, r) in case_strategy()) {
        check(props::chain_complex_algebra(&fixtures()[fi], r[0], r[1], r[2]))?;
    }

    #[test]
    fn conjugate_posets_share_homology((fi, r) in case_strategy()) {
        check(props::homology_conjugation_invariant(&fixtures()[fi], r[0], r[1], r[2], r[3]))?;
    }
}

#[test]
fn rational_rank_of_a_known_matrix() {
    let m = sclab_core::topology::snf::IntMatrix::from_dense(&[vec![2, 4, 6], vec![1, 2, 3], vec![0, 1, 5]]);
    assert_eq!(props::rational_rank(&m), 2);
}
