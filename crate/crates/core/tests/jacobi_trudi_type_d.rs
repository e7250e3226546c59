//! In type D the determinant formula sees only the first n − 1 fundamental
//! directions symmetrically: a partition with exactly n parts has a twin
//! weight λ̄ (last coordinate negated), and the determinant returns the sum
//! of both characters. Partitions with fewer parts are unaffected.

use qcasimir::basis_change::{jt_character_ga, Partition};
use qcasimir::casimir::Engine;
use qcasimir::root_data::{build_root_system, LieType};

fn bar(w: &qcasimir::root_data::Weight) -> qcasimir::root_data::Weight {
    let mut d = w.doubled().to_vec();
    let last = d.len() - 1;
    d[last] = -d[last];
    qcasimir::root_data::Weight::from_doubled(d)
}

#[test]
fn full_length_partitions_give_the_sum_of_twin_characters() {
    for n in [4, 5] {
        let engine = Engine::new(&build_root_system(LieType::D, n).unwrap()).unwrap();
        let ctx = engine.weyl();
        for lam in Partition::enumerate(n as u32 + 2, n).into_iter().filter(|p| p.len() == n) {
            let w = lam.to_weight(n).unwrap();
            let twins = ctx.weyl_character(&w).unwrap().add(&ctx.weyl_character(&bar(&w)).unwrap());
            assert_eq!(jt_character_ga(ctx, &lam).unwrap(), twins, "D{n}, lambda = {lam}");
        }
    }
}

#[test]
fn shorter_partitions_give_a_single_character() {
    let n = 4;
    let engine = Engine::new(&build_root_system(LieType::D, n).unwrap()).unwrap();
    let ctx = engine.weyl();
    for lam in Partition::enumerate(5, n - 1) {
        let w = lam.to_weight(n).unwrap();
        assert_eq!(jt_character_ga(ctx, &lam).unwrap(), ctx.weyl_character(&w).unwrap(), "lambda = {lam}");
    }
}
