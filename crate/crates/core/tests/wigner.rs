use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinnet::arith::{parity_sign, radical_eq, rat, ExactRadical, HalfInt, RadicalSum, Rational, Spin};
use spinnet::wigner::{
    clebsch_gordan, nine_j, nine_j_with, param_map, recoupling_u, six_j_oracle, six_j_racah, three_j,
    twelve_j_as_multipoly, twelve_j_second_kind, twelve_j_second_kind_with, SixJLabels, SixJPath, TwelveJLabels,
};

fn s(t: u32) -> Spin {
    Spin::from_twice(t)
}

fn m(t: i32) -> HalfInt {
    HalfInt::from_twice(t)
}

fn admissible_labels(max_twice: u32) -> Vec<SixJLabels> {
    let mut out = Vec::new();
    let r = 0..=max_twice;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    for e in r.clone() {
                        for f in r.clone() {
                            let l = SixJLabels::from_twice([a, b, c, d, e, f]);
                            if l.is_admissible() {
                                out.push(l);
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn sum(terms: impl IntoIterator<Item = ExactRadical>) -> RadicalSum {
    RadicalSum::from_terms(terms)
}

fn one() -> RadicalSum {
    RadicalSum::from(ExactRadical::one())
}

#[test]
fn six_j_paths_agree_up_to_spin_three() {
    for l in admissible_labels(6) {
        assert_eq!(six_j_racah(&l), six_j_oracle(&l), "{l}");
    }
}

#[test]
fn param_map_is_valid_on_every_canonical_orientation() {
    for l in admissible_labels(6) {
        let c = spinnet::wigner::canonical_orientation(&l).expect("orientation exists");
        let p = param_map(&c).unwrap();
        assert!(p.a.twice() <= p.s.twice() && p.s.twice() <= p.b.twice() - 2);
    }
}

#[test]
fn six_j_orthogonality_in_j12() {
    // Σ_{j23} (2j12+1)(2j23+1){j1 j2 j12; j3 j j23}{j1 j2 j12'; j3 j j23} = δ
    let max = 8u32;
    for j1 in 0..=max {
        for j2 in 0..=max {
            for j3 in 0..=max {
                for j in 0..=max {
                    if (j1 + j2 + j3 + j) % 2 != 0 {
                        continue;
                    }
                    let j12s: Vec<u32> = (j1.abs_diff(j2)..=(j1 + j2)).step_by(2).filter(|&x| x <= 2 * max).collect();
                    for &p in &j12s {
                        for &q in &j12s {
                            let total = sum((0..=2 * max).map(|j23| {
                                let a = six_j_oracle(&SixJLabels::from_twice([j1, j2, p, j3, j, j23]));
                                let b = six_j_oracle(&SixJLabels::from_twice([j1, j2, q, j3, j, j23]));
                                let w = rat(i64::from((p + 1) * (j23 + 1)));
                                (&a * &b).scale(&w)
                            }));
                            let p_ok = p.abs_diff(j3) <= j && j <= p + j3 && (p + j3 + j) % 2 == 0;
                            let expected = if p == q && p_ok { one() } else { RadicalSum::zero() };
                            assert_eq!(total, expected, "{j1} {j2} {p}/{q} {j3} {j}");
                        }
                    }
                }
            }
        }
    }
}

fn random_spin(rng: &mut ChaCha8Rng, max_twice: u32) -> u32 {
    rng.gen_range(0..=max_twice)
}

#[test]
fn biedenharn_elliott_on_random_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut checked = 0;
    let mut nontrivial = 0;
    while checked < 120 {
        let [a, b, c, d, e, f, p, q, r] = std::array::from_fn(|_| random_spin(&mut rng, 8));
        let rhs1 = SixJLabels::from_twice([p, q, r, e, a, d]);
        let rhs2 = SixJLabels::from_twice([p, q, r, f, b, c]);
        if !rhs1.is_admissible() || !rhs2.is_admissible() {
            continue;
        }
        let total_twice = a + b + c + d + e + f + p + q + r;
        let lhs = sum((0..=16u32).filter_map(|x| {
            if (total_twice + x) % 2 != 0 {
                return None;
            }
            let t1 = six_j_oracle(&SixJLabels::from_twice([a, b, x, c, d, p]));
            let t2 = six_j_oracle(&SixJLabels::from_twice([c, d, x, e, f, q]));
            let t3 = six_j_oracle(&SixJLabels::from_twice([e, f, x, b, a, r]));
            let w = rat(parity_sign(i64::from((total_twice + x) / 2)) * i64::from(x + 1));
            Some((&(&t1 * &t2) * &t3).scale(&w))
        }));
        let rhs = RadicalSum::from(&six_j_oracle(&rhs1) * &six_j_oracle(&rhs2));
        assert!(radical_eq(&lhs, &rhs), "a..r = {:?}", [a, b, c, d, e, f, p, q, r]);
        checked += 1;
        if !rhs.is_zero() {
            nontrivial += 1;
        }
    }
    assert!(nontrivial >= 100, "only {nontrivial} nonzero configurations");
}

#[test]
fn three_j_odd_permutation_sign() {
    for j1 in 0..=6u32 {
        for j2 in 0..=6u32 {
            for j3 in 0..=6u32 {
                let phase = parity_sign(i64::from((j1 + j2 + j3) / 2));
                for m1 in (-(j1 as i32)..=j1 as i32).step_by(2) {
                    for m2 in (-(j2 as i32)..=j2 as i32).step_by(2) {
                        let m3 = -m1 - m2;
                        let v = three_j(s(j1), s(j2), s(j3), m(m1), m(m2), m(m3));
                        let swapped = three_j(s(j2), s(j1), s(j3), m(m2), m(m1), m(m3));
                        let rotated = three_j(s(j2), s(j3), s(j1), m(m2), m(m3), m(m1));
                        if (j1 + j2 + j3) % 2 == 0 {
                            assert_eq!(swapped, v.scale(&rat(phase)));
                        }
                        assert_eq!(rotated, v);
                    }
                }
            }
        }
    }
}

#[test]
fn clebsch_gordan_completeness() {
    for j1 in 0..=4u32 {
        for j2 in 0..=4u32 {
            let ms = |j: u32| (-(j as i32)..=j as i32).step_by(2).collect::<Vec<_>>();
            for &m1 in &ms(j1) {
                for &m2 in &ms(j2) {
                    for &p1 in &ms(j1) {
                        for &p2 in &ms(j2) {
                            let mut terms = Vec::new();
                            for j in (j1.abs_diff(j2)..=j1 + j2).step_by(2) {
                                for &mm in &ms(j) {
                                    let a = clebsch_gordan(s(j1), s(j2), m(m1), m(m2), s(j), m(mm));
                                    let b = clebsch_gordan(s(j1), s(j2), m(p1), m(p2), s(j), m(mm));
                                    terms.push(&a * &b);
                                }
                            }
                            let expected = if m1 == p1 && m2 == p2 { one() } else { RadicalSum::zero() };
                            assert_eq!(sum(terms), expected);
                        }
                    }
                }
            }
        }
    }
}

/// Clebsch-Gordan coefficients by the ladder-operator construction in floating
/// point: start from the stretched state, lower with `J-`, and orthogonalise
/// each new multiplet against the higher ones, fixing the phase so that
/// `<j1 j1; j2 J-j1 | J J>` is positive.
fn ladder_cg(j1: u32, j2: u32) -> std::collections::HashMap<(i32, i32, u32, i32), f64> {
    use std::collections::HashMap;
    let (f1, f2) = (j1 as f64 / 2.0, j2 as f64 / 2.0);
    let lower = |j: f64, mm: f64| ((j + mm) * (j - mm + 1.0)).sqrt();
    let mut states: HashMap<(u32, i32), HashMap<(i32, i32), f64>> = HashMap::new();
    let totals: Vec<u32> = (j1.abs_diff(j2)..=j1 + j2).step_by(2).collect();
    for &jt in totals.iter().rev() {
        // highest weight M = J: orthogonal to all higher J at M = J
        let mt = jt as i32;
        let basis: Vec<(i32, i32)> = (-(j1 as i32)..=j1 as i32)
            .step_by(2)
            .filter_map(|a| {
                let b = mt - a;
                (b.abs() <= j2 as i32).then_some((a, b))
            })
            .collect();
        let mut v: HashMap<(i32, i32), f64> = HashMap::new();
        // seed with a generic vector then project out the higher multiplets
        for (i, k) in basis.iter().enumerate() {
            v.insert(*k, 1.0 + i as f64 * 0.37);
        }
        // two Gram-Schmidt passes keep the projection accurate to rounding
        for _ in 0..2 {
            for (&(jh, mh), w) in &states {
                if mh != mt || jh <= jt {
                    continue;
                }
                let dot: f64 = basis.iter().map(|k| v[k] * w.get(k).copied().unwrap_or(0.0)).sum();
                for k in &basis {
                    *v.get_mut(k).unwrap() -= dot * w.get(k).copied().unwrap_or(0.0);
                }
            }
        }
        let norm: f64 = v.values().map(|x| x * x).sum::<f64>().sqrt();
        let lead = v[&(j1 as i32, mt - j1 as i32)];
        let sign = if lead >= 0.0 { 1.0 } else { -1.0 };
        for x in v.values_mut() {
            *x *= sign / norm;
        }
        states.insert((jt, mt), v.clone());
        // lower
        let mut cur = v;
        let mut mm = mt;
        while mm > -(jt as i32) {
            let mut next: HashMap<(i32, i32), f64> = HashMap::new();
            for (&(a, b), &c) in &cur {
                if a > -(j1 as i32) {
                    *next.entry((a - 2, b)).or_default() += c * lower(f1, a as f64 / 2.0);
                }
                if b > -(j2 as i32) {
                    *next.entry((a, b - 2)).or_default() += c * lower(f2, b as f64 / 2.0);
                }
            }
            let scale = lower(jt as f64 / 2.0, mm as f64 / 2.0);
            for x in next.values_mut() {
                *x /= scale;
            }
            mm -= 2;
            states.insert((jt, mm), next.clone());
            cur = next;
        }
    }
    let mut out = HashMap::new();
    for ((jt, mt), v) in states {
        for ((a, b), c) in v {
            out.insert((a, b, jt, mt), c);
        }
    }
    out
}

#[test]
fn clebsch_gordan_matches_ladder_construction() {
    for j1 in 0..=4u32 {
        for j2 in 0..=4u32 {
            for ((m1, m2, j, mm), expected) in ladder_cg(j1, j2) {
                let exact = clebsch_gordan(s(j1), s(j2), m(m1), m(m2), s(j), m(mm)).to_f64();
                assert!((exact - expected).abs() < 1e-12, "{j1} {j2} {m1} {m2} {j} {mm}: {exact} vs {expected}");
            }
        }
    }
    // <1 1; 1 -1 | 0 0> = 1/√3, so (1 1 0; 1 -1 0) = 1/√3 as well
    assert!((ladder_cg(2, 2)[&(2, -2, 0, 0)] - 1.0 / 3f64.sqrt()).abs() < 1e-12);
    let half = ladder_cg(1, 1)[&(1, -1, 0, 0)];
    assert!((half - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-12);
}

#[test]
fn u_matrix_for_unit_spins_is_orthogonal() {
    let one_spin = s(2);
    let values: Vec<Vec<ExactRadical>> = (0..=2)
        .map(|a| (0..=2).map(|b| recoupling_u(one_spin, one_spin, one_spin, one_spin, s(2 * a), s(2 * b))).collect())
        .collect();
    for r in 0..3 {
        for c in 0..3 {
            let row_dot = sum((0..3).map(|k| &values[r][k] * &values[c][k]));
            let col_dot = sum((0..3).map(|k| &values[k][r] * &values[k][c]));
            let expected = if r == c { one() } else { RadicalSum::zero() };
            assert_eq!(row_dot, expected);
            assert_eq!(col_dot, expected);
        }
    }
}

fn nine(t: [[u32; 3]; 3]) -> [[Spin; 3]; 3] {
    t.map(|r| r.map(s))
}

#[test]
fn nine_j_with_zero_entry_reduces_to_six_j() {
    // {a b e; c d e; f f 0} = (-1)^{b+c+e+f} / √((2e+1)(2f+1)) {a b e; d c f}
    for a in 0..=4u32 {
        for b in 0..=4u32 {
            for c in 0..=4u32 {
                for d in 0..=4u32 {
                    for e in 0..=4u32 {
                        for f in 0..=4u32 {
                            let lhs = nine_j(&nine([[a, b, e], [c, d, e], [f, f, 0]]));
                            let sixj = six_j_oracle(&SixJLabels::from_twice([a, b, e, d, c, f]));
                            let phase = (b + c + e + f) % 2 == 0;
                            let expected = if sixj.is_zero() || !phase {
                                RadicalSum::zero()
                            } else {
                                let sign = parity_sign(i64::from((b + c + e + f) / 2));
                                let norm = ExactRadical::new(
                                    rat(sign),
                                    Rational::new(1.into(), (i64::from((e + 1) * (f + 1))).into()),
                                );
                                RadicalSum::from(&sixj * &norm)
                            };
                            assert_eq!(lhs, expected, "{a} {b} {c} {d} {e} {f}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn nine_j_row_swap_phase() {
    let triads: Vec<[u32; 3]> = (0..=4u32)
        .flat_map(|a| (0..=4u32).flat_map(move |b| (0..=4u32).map(move |c| [a, b, c])))
        .filter(|&[a, b, c]| (a + b + c) % 2 == 0 && a.abs_diff(b) <= c && c <= a + b)
        .collect();
    let mut nonzero = 0;
    for r0 in &triads {
        for r1 in &triads {
            for r2 in &triads {
                let t = [*r0, *r1, *r2];
                let cols_ok = (0..3).all(|c| {
                    let (a, b, x) = (t[0][c], t[1][c], t[2][c]);
                    (a + b + x) % 2 == 0 && a.abs_diff(b) <= x && x <= a + b
                });
                if !cols_ok {
                    continue;
                }
                let v = nine_j_with(&nine(t), SixJPath::Racah);
                let swapped = nine_j_with(&nine([t[1], t[0], t[2]]), SixJPath::Oracle);
                let total: u32 = t.iter().flatten().sum();
                assert_eq!(total % 2, 0);
                assert_eq!(swapped, v.scale(&rat(parity_sign(i64::from(total / 2)))), "{t:?}");
                if !v.is_zero() {
                    nonzero += 1;
                }
            }
        }
    }
    assert!(nonzero > 500, "{nonzero}");
    assert_eq!(nine_j(&nine([[0; 3]; 3])), one());
}

/// Random 12j labels whose `l_i` are compatible with both neighbouring triads.
fn random_twelve_j(rng: &mut ChaCha8Rng, max_twice: u32) -> Option<TwelveJLabels> {
    let j: [u32; 4] = std::array::from_fn(|_| random_spin(rng, max_twice));
    let k: [u32; 4] = std::array::from_fn(|_| random_spin(rng, max_twice));
    let mut l = [0u32; 4];
    for i in 0..4 {
        let n = (i + 1) % 4;
        let options: Vec<u32> = (0..=max_twice)
            .filter(|&x| {
                let tri = |a: u32, b: u32, c: u32| (a + b + c).is_multiple_of(2) && a.abs_diff(b) <= c && c <= a + b;
                tri(j[i], j[n], x) && tri(k[i], k[n], x)
            })
            .collect();
        if options.is_empty() {
            return None;
        }
        l[i] = options[rng.gen_range(0..options.len())];
    }
    Some(TwelveJLabels::from_twice(j, l, k))
}

#[test]
fn twelve_j_paths_agree_and_expansion_recombines() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut nonzero = 0;
    let mut tried = 0;
    while tried < 400 {
        let Some(labels) = random_twelve_j(&mut rng, 4) else { continue };
        tried += 1;
        let racah = twelve_j_second_kind_with(&labels, SixJPath::Racah);
        let oracle = twelve_j_second_kind_with(&labels, SixJPath::Oracle);
        assert!(radical_eq(&racah, &oracle));
        let expansion = twelve_j_as_multipoly(&labels);
        assert_eq!(expansion.recombine(), racah);
        assert_eq!(expansion.recombine_orthonormal(), racah);
        for term in &expansion.terms {
            for (i, f) in term.factors.iter().enumerate() {
                assert_eq!(f.labels, labels.factor(i, term.x));
                assert_eq!(param_map(&f.oriented).unwrap(), f.params);
                assert_eq!(f.value(), six_j_oracle(&f.labels));
            }
        }
        if !racah.is_zero() {
            nonzero += 1;
        }
    }
    assert!(nonzero > 50, "{nonzero}");
}

#[test]
fn twelve_j_is_invariant_under_column_rotation() {
    let mut rng = ChaCha8Rng::seed_from_u64(34);
    let mut tried = 0;
    while tried < 300 {
        let Some(labels) = random_twelve_j(&mut rng, 3) else { continue };
        tried += 1;
        let v = twelve_j_second_kind(&labels);
        let mut rotated = labels;
        for _ in 0..3 {
            rotated = rotated.rotated();
            assert_eq!(twelve_j_second_kind(&rotated), v);
        }
    }
}

#[test]
fn twelve_j_with_vanishing_k1_reduces() {
    let mut rng = ChaCha8Rng::seed_from_u64(56);
    let mut nonzero = 0;
    let mut tried = 0;
    while tried < 300 {
        let Some(mut labels) = random_twelve_j(&mut rng, 4) else { continue };
        labels.k[0] = Spin::ZERO;
        tried += 1;
        let full = twelve_j_second_kind_with(&labels, SixJPath::Oracle);
        let [j1, j2, j3, j4] = labels.j.map(Spin::twice);
        let [l1, l2, l3, l4] = labels.l.map(Spin::twice);
        let [_, k2, k3, k4] = labels.k.map(Spin::twice);
        let r = labels.r_twice();
        let closed = if l1 != k2 || l4 != k4 || r % 2 != 0 || (j2 + k2 + j1) % 2 != 0 || (j4 + k4 + j1) % 2 != 0 {
            RadicalSum::zero()
        } else {
            let f2 = six_j_oracle(&SixJLabels::from_twice([j2, k2, j1, k3, j3, l2]));
            let f3 = six_j_oracle(&SixJLabels::from_twice([j3, k3, j1, k4, j4, l3]));
            let sign = parity_sign(i64::from(r / 2 + 2 * j1 + (j2 + k2 + j1) / 2 + (j4 + k4 + j1) / 2));
            let dims = i64::from((k2 + 1) * (k4 + 1));
            // (2j1+1) / √((2k2+1)(2j1+1)) / √((2k4+1)(2j1+1)) = 1/√((2k2+1)(2k4+1))
            let norm = ExactRadical::new(rat(sign), Rational::new(1.into(), dims.into()));
            RadicalSum::from(&(&f2 * &f3) * &norm)
        };
        assert_eq!(full, closed, "{labels:?}");
        if !full.is_zero() {
            nonzero += 1;
        }
    }
    assert!(nonzero > 20, "{nonzero}");
}

#[test]
fn inadmissible_six_j_is_zero_not_error() {
    let l = SixJLabels::from_twice([1, 1, 1, 1, 1, 1]);
    assert!(six_j_racah(&l).is_zero());
    assert!(six_j_oracle(&l).is_zero());
}
