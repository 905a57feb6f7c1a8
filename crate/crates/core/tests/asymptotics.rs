use std::f64::consts::PI;

use spinnet::asymptotics::{
    d_sweep, eq1_window, equilateral_oscillation_width, pr_equilateral_window, six_j_asymptotic_eq1,
    six_j_ponzano_regge, tet_geometry, wigner_d_asymptotic, wigner_d_exact, EDGE_VERTICES,
};
use spinnet::wigner::{six_j_oracle, SixJLabels};
use spinnet::{HalfInt, Spin};

fn projections(j: Spin) -> impl Iterator<Item = HalfInt> {
    let t = j.twice() as i32;
    (-t..=t).step_by(2).map(HalfInt::from_twice)
}

#[test]
fn d_symmetry_and_unitarity() {
    for jj in [1u32, 2, 5, 8, 13, 20, 31, 40, 60] {
        let j = Spin::from_twice(jj);
        for theta in [0.3, 1.0, PI / 3.0, 2.0, 3.0] {
            for mp in projections(j) {
                let mut column = 0.0;
                for m in projections(j) {
                    let d = wigner_d_exact(j, m, mp, theta);
                    let swapped = wigner_d_exact(j, mp, m, theta);
                    let sign = if (m.twice() - mp.twice()).rem_euclid(4) == 0 { 1.0 } else { -1.0 };
                    assert!((d - sign * swapped).abs() < 1e-12, "j={j} m={m} mp={mp}");
                    column += d * d;
                }
                assert!((column - 1.0).abs() < 1e-12, "j={j} mp={mp} θ={theta}: {column}");
            }
        }
    }
}

#[test]
fn d_composition_matches_addition_of_angles() {
    // d(α+β) = d(α) d(β) as matrices
    let j = Spin::from_twice(7);
    let (a, b) = (0.4, 1.1);
    for m in projections(j) {
        for mp in projections(j) {
            let direct = wigner_d_exact(j, m, mp, a + b);
            let product: f64 = projections(j).map(|k| wigner_d_exact(j, m, k, a) * wigner_d_exact(j, k, mp, b)).sum();
            assert!((direct - product).abs() < 1e-13);
        }
    }
}

#[test]
fn d_asymptotic_at_equator_within_five_percent() {
    let j = Spin::integer(20);
    let exact = wigner_d_exact(j, HalfInt::ZERO, HalfInt::ZERO, PI / 2.0);
    let approx = wigner_d_asymptotic(j, HalfInt::ZERO, HalfInt::ZERO, PI / 2.0).unwrap().value;
    assert!(((approx - exact) / exact).abs() < 0.05);
}

#[test]
fn d_asymptotic_error_shrinks() {
    let js: Vec<Spin> = [10, 20, 40, 80].map(Spin::integer).to_vec();
    let rows = d_sweep(HalfInt::ZERO, HalfInt::ZERO, PI / 3.0, &js);
    let errors: Vec<f64> = rows.iter().map(|r| r.abs_error.unwrap()).collect();
    for w in errors.windows(2) {
        assert!(w[1] < 1.2 * w[0], "{errors:?}");
    }
    assert!(errors[3] < 1e-2);
}

#[test]
fn regime_flags_follow_thresholds() {
    let z = HalfInt::ZERO;
    let v = wigner_d_asymptotic(Spin::integer(5), HalfInt::integer(1), z, 0.05).unwrap();
    assert!(v.flags.near_singular && v.flags.small_spin);
    let v = wigner_d_asymptotic(Spin::integer(50), HalfInt::integer(1), z, 1.0).unwrap();
    assert!(!v.flags.any());
}

/// Builds the right-angled configuration with a dihedral angle θ at edge
/// e24: vertex 2 at the origin, vertex 4 on the x axis, and the edges 12 and
/// 34 perpendicular to 24.
#[test]
fn volume_matches_right_angled_configuration() {
    for (l1, l4, l6, theta) in [(3.5, 4.5, 5.5, 1.0), (10.5, 7.5, 12.5, 2.2), (2.5, 2.5, 3.5, PI / 2.0)] {
        let p: [[f64; 3]; 4] =
            [[0.0, l1, 0.0], [0.0, 0.0, 0.0], [l6, l4 * f64::cos(theta), l4 * f64::sin(theta)], [l6, 0.0, 0.0]];
        let dist =
            |a: [f64; 3], b: [f64; 3]| ((a[0] - b[0]).powi(2) + (a[1] - b[1]).powi(2) + (a[2] - b[2]).powi(2)).sqrt();
        let lengths = EDGE_VERTICES.map(|(a, b)| dist(p[a], p[b]));
        let g = tet_geometry(lengths).unwrap();
        let formula = l1 * l4 * l6 * theta.sin() / 6.0;
        assert!((g.volume - formula).abs() < 1e-12 * formula);
        // slot 5 is e24
        assert!((g.dihedral[5] - theta).abs() < 1e-12);
    }
}

#[test]
fn face_angles_at_a_vertex_sum_below_full_turn() {
    for lengths in [[1.0; 6], [3.0, 4.0, 4.5, 3.5, 4.2, 3.9], [10.5, 10.5, 10.5, 10.5, 10.5, 3.5]] {
        let g = tet_geometry(lengths).unwrap();
        assert!(g.dihedral.iter().all(|t| *t > 0.0 && *t < PI));
        let edge = |p: usize, q: usize| {
            let slot = EDGE_VERTICES.iter().position(|&(a, b)| (a, b) == (p.min(q), p.max(q))).unwrap();
            lengths[slot]
        };
        for v in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&w| w != v).collect();
            let mut total = 0.0;
            for (i, &p) in others.iter().enumerate() {
                let q = others[(i + 1) % 3];
                let (a, b, c) = (edge(v, p), edge(v, q), edge(p, q));
                total += ((a * a + b * b - c * c) / (2.0 * a * b)).acos();
            }
            assert!(total < 2.0 * PI);
        }
    }
}

#[test]
fn small_j12_formula_spot_check() {
    let l = SixJLabels::from_twice([40, 40, 2, 40, 40, 40]);
    let exact = six_j_oracle(&l).to_f64();
    let approx = six_j_asymptotic_eq1(&l).unwrap().value;
    assert!(((approx - exact) / exact).abs() < 0.1, "{approx} vs {exact}");
}

#[test]
fn small_j12_median_error_shrinks() {
    for j12 in [1, 2] {
        let medians: Vec<f64> =
            [10, 20, 40].map(|k| eq1_window(Spin::integer(k), Spin::integer(j12)).median_rel_error.unwrap()).to_vec();
        assert!(medians[0] > medians[1] && medians[1] > medians[2], "{medians:?}");
        assert!(medians[2] < 0.1);
    }
}

#[test]
fn pr_equilateral_error_and_envelope() {
    let small = pr_equilateral_window(10, 3);
    let large = pr_equilateral_window(40, 3);
    assert!(small.relative_rms < 0.15);
    assert!(small.relative_rms >= 1.5 * large.relative_rms);
    let env = pr_equilateral_window(20, equilateral_oscillation_width());
    assert!((env.envelope_ratio - 1.0).abs() < 0.2, "{}", env.envelope_ratio);
}

fn sign_changes(values: &[f64]) -> usize {
    values.windows(2).filter(|w| w[0] * w[1] < 0.0).count()
}

#[test]
fn pr_phase_tracks_exact_sign_changes() {
    let k = 2 * 30u32;
    let sequence: Vec<(f64, f64)> = (0..=2 * k)
        .step_by(2)
        .map(|x| SixJLabels::from_twice([k, k, k, k, k, x]))
        .filter_map(|l| six_j_ponzano_regge(&l).ok().map(|a| (six_j_oracle(&l).to_f64(), a.value)))
        .collect();
    assert!(sequence.len() > 30);
    for window in sequence.chunks(10) {
        let exact: Vec<f64> = window.iter().map(|p| p.0).collect();
        let approx: Vec<f64> = window.iter().map(|p| p.1).collect();
        let (a, b) = (sign_changes(&exact), sign_changes(&approx));
        assert!(a.abs_diff(b) <= 1, "{a} vs {b}");
    }
}
