//! Detector behaviour over every odd semiprime `N = p * q <= 200` at `dm = 10`.

use std::collections::BTreeSet;

use gauss_factor::numtheory::{brute_factor, isqrt, primes_up_to};
use gauss_factor::wavepacket::{detect_factor_candidates, DetectorConfig, WavePacketSpec};

struct Case {
    n: u64,
    p: u64,
    q: u64,
    candidates: Vec<u64>,
    flagged: BTreeSet<u64>,
}

fn sweep() -> Vec<Case> {
    let config = DetectorConfig::default();
    (9..=200u64)
        .step_by(2)
        .filter_map(|n| match brute_factor(n).unwrap().factors.as_slice() {
            [(p, 1), (q, 1)] => Some((n, *p, *q)),
            _ => None,
        })
        .map(|(n, p, q)| {
            let mut candidates: BTreeSet<u64> = primes_up_to(isqrt(n)).into_iter().collect();
            candidates.extend([p, q]);
            let candidates: Vec<u64> = candidates.into_iter().collect();
            let spec = WavePacketSpec::new(n, 10.0).unwrap();
            let flagged = detect_factor_candidates(&spec, &candidates, &config)
                .unwrap()
                .into_iter()
                .filter(|v| v.flagged)
                .map(|v| v.ell)
                .collect();
            Case {
                n,
                p,
                q,
                candidates,
                flagged,
            }
        })
        .collect()
}

#[test]
fn sweep_has_no_false_positives() {
    for case in sweep() {
        for ell in &case.flagged {
            assert_eq!(case.n % ell, 0, "N = {} flagged non-factor {ell}", case.n);
        }
        assert!(case.candidates.len() >= 2);
    }
}

#[test]
fn sweep_flags_factors_whose_revival_humps_separate() {
    // A factor ell is seen when its cofactor N / ell is small enough that the
    // neighbouring revival humps at +-ell/N stay clear of the central one.
    for case in sweep() {
        for (ell, cofactor) in [(case.p, case.q), (case.q, case.p)] {
            if cofactor <= 11 {
                assert!(case.flagged.contains(&ell), "N = {} missed {ell}", case.n);
            }
        }
    }
}

#[test]
#[ignore = "fails for small factors with cofactor >= 13 (e.g. N = 39, ell = 3): the revival humps overlap at dm = 10"]
fn sweep_flags_exactly_the_factors() {
    let misses: Vec<u64> = sweep()
        .into_iter()
        .filter(|c| c.flagged != BTreeSet::from([c.p, c.q]))
        .map(|c| c.n)
        .collect();
    assert!(
        misses.is_empty(),
        "flagged set differs from the factors for N in {misses:?}"
    );
}
