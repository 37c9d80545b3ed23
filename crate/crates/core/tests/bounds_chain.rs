//! Ordering-chain properties on random multimode pairs: the pointwise chain
//! q_s <= q_bar_s <= m_s <= y_s, report-level ordering across copy counts,
//! and invariance of the spectrum-only bounds under local Gaussian unitaries.

use gaussbound_core::bounds::{full_report, m_s, q_bar_s, q_s, y_s, SGridConfig};
use gaussbound_core::states::GaussianState;
use gaussbound_core::symplectic::random_symplectic;
use nalgebra::DVector;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CHAIN_SLACK: f64 = 1e-10;

fn random_state(rng: &mut ChaCha8Rng, n: usize) -> GaussianState {
    let nus: Vec<f64> = (0..n).map(|_| rng.gen_range(1.0..10.0)).collect();
    let s = random_symplectic(rng.gen(), n, 0.7);
    let mean = DVector::from_fn(2 * n, |_, _| rng.gen_range(-3.0..3.0));
    GaussianState::thermal(&nus)
        .unwrap()
        .symplectic_transform(&s)
        .unwrap()
        .displaced(&mean)
        .unwrap()
}

fn grid_21() -> impl Iterator<Item = f64> {
    // 21 values inset from the endpoints, where all four curves are finite
    (0..21).map(|i| {
        let t = i as f64 / 20.0;
        1e-6 + (1.0 - 2e-6) * t
    })
}

#[test]
fn pointwise_chain_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for case in 0..100 {
        let n = 1 + (case % 3);
        let a = random_state(&mut rng, n);
        let b = random_state(&mut rng, n);
        let sa = a.spectrum().unwrap();
        let sb = b.spectrum().unwrap();
        for s in grid_21() {
            let q = q_s(&a, &b, s).unwrap().value;
            let qb = q_bar_s(&a, &b, s).unwrap().value;
            let m = m_s(&sa, &sb, s).unwrap().value;
            let y = y_s(&sa, &sb, s).unwrap().value;
            assert!(q <= qb + CHAIN_SLACK, "case {case} s={s}: q={q} qbar={qb}");
            assert!(qb <= m + CHAIN_SLACK, "case {case} s={s}: qbar={qb} m={m}");
            assert!(m <= y + CHAIN_SLACK, "case {case} s={s}: m={m} y={y}");
        }
    }
}

#[test]
fn report_ordering_across_copy_counts() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let config = SGridConfig::default();
    for case in 0..30 {
        let n = 1 + (case % 3);
        let a = random_state(&mut rng, n);
        let b = random_state(&mut rng, n);
        for copies in [1u32, 5, 20] {
            // full_report re-checks the chain internally and errors on violation
            let report = full_report(&a, &b, copies, &config, false).unwrap();
            assert!(report.chernoff.value <= report.minkowski.value + CHAIN_SLACK);
            assert!(report.minkowski.value <= report.young.value + CHAIN_SLACK);
            assert!(report.chernoff.value <= report.bhattacharyya + CHAIN_SLACK);
        }
    }
}

#[test]
fn spectrum_bounds_invariant_under_local_unitaries() {
    let mut rng = ChaCha8Rng::seed_from_u64(31337);
    let config = SGridConfig::default();
    for case in 0..20 {
        let n = 1 + (case % 2);
        let a = random_state(&mut rng, n);
        let b = random_state(&mut rng, n);
        let base = full_report(&a, &b, 1, &config, false).unwrap();

        let sa = random_symplectic(rng.gen(), n, 0.8);
        let sb = random_symplectic(rng.gen(), n, 0.8);
        let shift = DVector::from_fn(2 * n, |_, _| rng.gen_range(-2.0..2.0));
        let a2 = a
            .symplectic_transform(&sa)
            .unwrap()
            .displaced(&shift)
            .unwrap();
        let b2 = b.symplectic_transform(&sb).unwrap();
        let moved = full_report(&a2, &b2, 1, &config, false).unwrap();

        let rel_m = (base.minkowski.value - moved.minkowski.value).abs() / base.minkowski.value;
        let rel_y = (base.young.value - moved.young.value).abs() / base.young.value;
        assert!(rel_m < 1e-10, "case {case}: minkowski moved by {rel_m}");
        assert!(rel_y < 1e-10, "case {case}: young moved by {rel_y}");
    }
}

#[test]
fn q_s_matches_oracle_free_special_cases() {
    // thermal against itself after a congruence: q_s must be exactly 1
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let a = random_state(&mut rng, 2);
    for s in [0.2, 0.5, 0.7] {
        assert!((q_s(&a, &a, s).unwrap().value - 1.0).abs() < 1e-10);
    }
}

#[test]
fn swapping_states_reflects_the_curves_in_s() {
    let mut rng = ChaCha8Rng::seed_from_u64(424242);
    for _ in 0..10 {
        let a = random_state(&mut rng, 2);
        let b = random_state(&mut rng, 2);
        let sa = a.spectrum().unwrap();
        let sb = b.spectrum().unwrap();
        for s in [0.1, 0.3, 0.5, 0.8] {
            let lhs = q_s(&a, &b, s).unwrap().value;
            let rhs = q_s(&b, &a, 1.0 - s).unwrap().value;
            assert!((lhs - rhs).abs() < 1e-11 * lhs.max(1.0), "{lhs} vs {rhs}");
            let lhs = m_s(&sa, &sb, s).unwrap().value;
            let rhs = m_s(&sb, &sa, 1.0 - s).unwrap().value;
            assert!((lhs - rhs).abs() < 1e-11 * lhs.max(1.0));
            let lhs = y_s(&sa, &sb, s).unwrap().value;
            let rhs = y_s(&sb, &sa, 1.0 - s).unwrap().value;
            assert!((lhs - rhs).abs() < 1e-11 * lhs.max(1.0));
        }
    }
}

#[test]
fn spectrum_bounds_are_trivial_for_unitarily_equivalent_states() {
    // squeezed vacuum and the vacuum share the spectrum {1}: the
    // spectrum-only bounds collapse to 1/2 while the Chernoff bound still
    // separates the pair
    let squeezed = GaussianState::squeezed(0.8).unwrap();
    let vacuum = GaussianState::vacuum(1).unwrap();
    let report = full_report(&squeezed, &vacuum, 1, &SGridConfig::default(), false).unwrap();
    assert!((report.minkowski.value - 0.5).abs() < 1e-12);
    assert!((report.young.value - 0.5).abs() < 1e-12);
    assert!(
        report.chernoff.value < 0.5 - 1e-3,
        "{}",
        report.chernoff.value
    );
}

#[test]
fn pure_endpoint_evaluates_to_the_overlap() {
    // s = 0 with a pure first state: Tr(rho_A^0 rho_B) = Tr(rho_A rho_B)
    let vacuum = GaussianState::vacuum(1).unwrap();
    let thermal = GaussianState::thermal(&[3.0]).unwrap();
    let endpoint = q_s(&vacuum, &thermal, 0.0).unwrap().value;
    let want = gaussbound_core::states::overlap(&vacuum, &thermal).unwrap();
    assert!((endpoint - want).abs() < 1e-13, "{endpoint} vs {want}");
}
