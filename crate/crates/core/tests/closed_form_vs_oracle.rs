use modwythoff_core::beatty::a_of_m;
use modwythoff_core::modular::{classify, modular_p_set, winning_move};
use modwythoff_core::oracle::{p_positions_of, recurrence_violations, solve_fast, solve_naive};
use modwythoff_core::verify::{verify_m, verify_range, BoxFactor};
use modwythoff_core::{GameParams, Label, Position};

#[test]
fn harness_passes_for_first_200_moduli() {
    let batch = verify_range(1, 200, BoxFactor::default()).unwrap();
    assert!(batch.all_pass);
    for r in &batch.reports {
        assert_eq!(r.box_side, 3 * r.m);
        assert_eq!(r.oracle_count, 2 * a_of_m(r.m).unwrap() + 1);
        assert!(r.subset_of_wythoff && r.count_formula_holds && r.strategy_sound);
    }
}

#[test]
fn fractional_box_factor() {
    let r = verify_m(7, "5/2".parse().unwrap()).unwrap();
    assert_eq!(r.box_side, 18);
    assert!(r.passed());
}

#[test]
fn naive_labels_satisfy_recurrence_and_match_closed_form() {
    for m in 1..=8 {
        let params = GameParams::new(m).unwrap();
        let labels = solve_naive(params, 3 * m).unwrap();
        assert!(recurrence_violations(&labels).unwrap().is_empty());
        assert_eq!(
            p_positions_of(&labels),
            modular_p_set(params).unwrap().sorted_positions()
        );
    }
}

#[test]
fn larger_modulus_on_a_wide_board() {
    // m = 1000 needs side > ⌊1000φ⌋ = 1618
    let params = GameParams::new(1000).unwrap();
    let labels = solve_fast(params, 2500).unwrap();
    assert_eq!(labels.p_count(), 2 * 618 + 1);
    for x in (0..=2500).step_by(7) {
        for y in (0..=2500).step_by(11) {
            let p = Position { x, y };
            assert_eq!(classify(p, params), labels.get(p), "{p}");
            if let Some(mv) = winning_move(p, params) {
                assert_eq!(labels.get(mv.apply(p).unwrap()), Label::P);
            }
        }
    }
}
