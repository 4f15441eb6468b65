mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relpoly::reliability::{connected_from_reliability_poly, connected_subgraph_univariate, reliability_poly};
use relpoly::roots::{classify_disc, find_roots};
use relpoly::{ComplexExt, MpReal, Real};

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_agree_across_precisions(seed in any::<u64>(), n in 2usize..=5, extra in 0usize..=5) {
        let g = common::random_connected_graph(&mut rng(seed), n, extra);
        let p = connected_subgraph_univariate(&g).unwrap();
        let lo = find_roots(&p, 256).unwrap();
        let hi = find_roots(&p, 512).unwrap();
        prop_assert_eq!(lo.zero_multiplicity, hi.zero_multiplicity);
        prop_assert_eq!(lo.roots.len(), hi.roots.len());
        let floor = MpReal::unit_roundoff(200);
        for (z, rz) in lo.roots.iter().zip(&lo.error_radii) {
            let z = z.to_precision(512);
            let tol = rz.clone() + floor.clone() * (MpReal::from_f64_prec(1.0, 512) + z.modulus());
            let hit = hi.roots.iter().zip(&hi.error_radii).any(|(w, rw)| (w.clone() - z.clone()).modulus() <= tol.clone() + rw.clone());
            prop_assert!(hit, "{} has no partner at 512 bits", z.to_c64());
        }
    }

    #[test]
    fn series_parallel_graphs_keep_their_zeros_outside_the_disc(seed in any::<u64>(), m in 1usize..=12) {
        let g = common::random_sp_graph(&mut rng(seed), m);
        let p = connected_subgraph_univariate(&g).unwrap();
        let report = classify_disc(&p, 1.0, 256).unwrap();
        prop_assert!(!report.violation, "{p}: min |1+v| = {}", report.min_distance);
    }

    #[test]
    fn reliability_round_trip(seed in any::<u64>(), n in 2usize..=5, extra in 0usize..=6) {
        let g = common::random_connected_graph(&mut rng(seed), n, extra);
        let c = connected_subgraph_univariate(&g).unwrap();
        let m = g.num_edges() as u32;
        let r = reliability_poly(&c, m).unwrap();
        prop_assert_eq!(connected_from_reliability_poly(&r, m).unwrap(), c);
    }
}
