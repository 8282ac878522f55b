use parabolic_fourier::bases::MultiIndex;
use parabolic_fourier::hypergeometric::hyp;
use parabolic_fourier::scalar::{c64, gamma};
use parabolic_fourier::transform::{fourier_h_jacobi_closed, FrequencyPoint, WrapParamsJacobi};
use parabolic_fourier::verifier::contiguous::{check_contiguous, AbDraw, A_RELATIONS, B_RELATIONS};
use parabolic_fourier::verifier::{IdentityId, VerificationReport};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

proptest! {
    #[test]
    fn gamma_recurrence(re in -8.0f64..8.0, im in 0.1f64..8.0) {
        let z = c64(re, im);
        let lhs = gamma(z + 1.0).unwrap();
        let rhs = z * gamma(z).unwrap();
        prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm());
    }

    #[test]
    fn numerator_order_is_irrelevant(n in 1u32..12, a in 0.1f64..3.0, b in 0.1f64..3.0, c in 0.2f64..3.0, z in -2.0f64..2.0) {
        let r = |x: f64| c64(x, 0.0);
        let x = hyp(&[r(-(n as f64)), r(a), r(b)], &[r(c), r(c + 0.5)], r(z)).unwrap();
        let y = hyp(&[r(b), r(-(n as f64)), r(a)], &[r(c + 0.5), r(c)], r(z)).unwrap();
        prop_assert!((x - y).norm() <= 1e-13 * x.norm().max(1.0));
    }

    #[test]
    fn indices_of_fixed_total(d in 1usize..5, n in 0u32..6) {
        let all = MultiIndex::with_total(d, n);
        prop_assert_eq!(all.len() as u64, binomial(n as u64 + d as u64 - 1, d as u64 - 1));
        prop_assert!(all.iter().all(|k| k.total() == n && k.dim() == d));
        let text = all.iter().map(|k| format!("{:?}", k.entries())).collect::<Vec<_>>();
        let mut dedup = text.clone();
        dedup.dedup();
        prop_assert_eq!(text, dedup);
    }

    #[test]
    fn transform_of_a_real_function_is_hermitian(
        m in 0u32..3, x1 in -2.0f64..2.0, x2 in -2.0f64..2.0,
        alpha in 0.3f64..1.5, zeta in 0.3f64..1.5, eta in 0.3f64..1.5,
    ) {
        let k = MultiIndex::zeros(1);
        let p = WrapParamsJacobi { alpha, zeta, eta, beta: 0.2, gamma: 0.1, mu: 0.5 };
        let a = fourier_h_jacobi_closed(m, &k, &p, &FrequencyPoint { xi: vec![x1], xi_last: x2 }).unwrap();
        let b = fourier_h_jacobi_closed(m, &k, &p, &FrequencyPoint { xi: vec![-x1], xi_last: -x2 }).unwrap();
        prop_assert!((a - b.conj()).norm() <= 1e-12 * a.norm().max(1e-300));
    }

    #[test]
    fn relations_hold_at_random_draws(seed in any::<u64>(), d in 1usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = AbDraw::random(&mut rng, d);
        for id in A_RELATIONS.iter().chain(&B_RELATIONS).filter(|id| **id != IdentityId::ContigAIv) {
            let r = check_contiguous(*id, &w, 1e-10);
            prop_assert!(r.passed || r.skipped_reason.is_some(), "{} residual {}", id, r.rel_residual);
        }
    }

    #[test]
    fn reports_round_trip_through_json(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let w = AbDraw::random(&mut rng, 2);
        let r = check_contiguous(IdentityId::ContigBI, &w, 1e-10);
        let back: VerificationReport = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
        prop_assert_eq!(back, r);
    }
}
