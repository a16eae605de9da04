//! Acceptance suite: every criterion from the verification checklist runs at its
//! stated tolerance and prints one pass/fail line. Criteria are
//! property-based plus desk-scale qualitative reproduction; the full-scale
//! dimensions are a scale knob, not a correctness condition.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tempfile::TempDir;

use mirror_prox::estimates::{
    bound_adaptive_prefix, bound_lemma2_drift, bound_restart, BoundVariant, LHistory,
};
use mirror_prox::geometry::{mixed_prox_step, prox_step, FeasibleSet, ProxSetup};
use mirror_prox::operators::{
    gen_covering_ball, CoeffCase, DiagSquares, Identity, Operator, SaddleComposite, VIProblem,
};
use mirror_prox::point::Point;
use mirror_prox::solvers::{
    adaptive_delta_solve, adaptive_scaled_delta_solve, adaptive_smooth_solve, restarted_solve,
    ump_solve, OutputMode, RestartConfig, SolverConfig, StopRule, Trace,
};
use vibench::{reproduce_preset, Preset, Scale, SolverId, TraceFile};

fn pt(v: &[f64]) -> Point<f64> {
    Point::new(v.to_vec()).unwrap()
}

fn pass(n: usize, name: &str) {
    println!("acceptance criterion {n} ({name}): PASS");
}

fn cfg(delta: f64, mu: f64, output_mode: OutputMode) -> SolverConfig<f64> {
    SolverConfig {
        epsilon: 1e-6,
        delta,
        l0: 1.0,
        mu,
        max_iters: 100_000,
        max_backtracks_per_iter: 60,
        output_mode,
        store_iterates: true,
    }
}

// --- criterion 1 -----------------------------------------------------------

#[test]
fn criterion_1_hand_execution_oracle() {
    let start = Instant::now();
    let prob = Identity::problem::<f64>(2, 2.0).unwrap();
    let setup = ProxSetup::new(pt(&[1.0, 0.0]), 1.0).unwrap();

    let smooth = adaptive_smooth_solve(
        &prob,
        &setup,
        &cfg(0.0, 1.0, OutputMode::LastZ),
        &StopRule::FixedIters(1),
    )
    .unwrap();
    assert_eq!(smooth.records[0].l_accepted, 1.0);
    assert!(smooth.last_w.as_ref().unwrap().dist(&pt(&[0.0, 0.0])) <= 1e-12);
    assert!(smooth.last_z.dist(&pt(&[0.5, 0.0])) <= 1e-12);

    let scaled = adaptive_scaled_delta_solve(
        &prob,
        &setup,
        &cfg(10.0, 1.0, OutputMode::LastZ),
        &StopRule::FixedIters(1),
    )
    .unwrap();
    assert_eq!(scaled.records[0].l_accepted, 0.5);
    assert!(scaled.last_z.dist(&pt(&[1.0 / 3.0, 0.0])) <= 1e-12);

    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1e-3,
        "hand-execution runtime {elapsed:?} exceeds 1 ms"
    );
    pass(1, "hand-execution oracle");
}

// --- criterion 2 -----------------------------------------------------------

#[test]
fn criterion_2_geometric_rate() {
    let start = Instant::now();
    let prob = Identity::problem::<f64>(2, 2.0).unwrap();
    let setup = ProxSetup::new(pt(&[1.0, 0.0]), 1.0).unwrap();
    let trace = adaptive_smooth_solve(
        &prob,
        &setup,
        &cfg(0.0, 1.0, OutputMode::LastZ),
        &StopRule::FixedIters(50),
    )
    .unwrap();
    let l_hat = trace.max_accepted_l().unwrap();
    assert!(l_hat <= 2.0);
    let v50 = trace.records.last().unwrap().v_to_solution.unwrap();
    let v0 = 0.5;
    let rate_bound = (1.0 + 1.0 / (2.0 * l_hat)).powi(-50) * v0;
    assert!(
        v50 <= rate_bound,
        "V = {v50} above geometric bound {rate_bound}"
    );
    assert!(v50 <= 1e-8, "V = {v50} above 1e-8");
    assert!(start.elapsed().as_secs_f64() < 1.0);
    pass(2, "geometric rate");
}

// --- criterion 3 -----------------------------------------------------------

#[test]
fn criterion_3_restart_iteration_bound() {
    let start = Instant::now();
    let n = 100;
    let l_true = 1e4; // n^2
    let radius = 2.0;
    let prob = DiagSquares::problem::<f64>(n, radius).unwrap();
    // Start on the sphere of radius 2 with mass on every coordinate.
    let x0 = pt(&vec![radius / (n as f64).sqrt(); n]);
    let r0_sq = 0.5 * radius * radius; // V(x*, x0) = ||x0||^2 / 2
    let epsilon = 1e-6;

    let mut scfg = cfg(0.0, 1.0, OutputMode::LastZ);
    scfg.epsilon = epsilon;
    scfg.max_iters = 1_000_000;
    scfg.store_iterates = false;
    let rcfg = RestartConfig::new(1.0, r0_sq.sqrt(), epsilon).unwrap();
    let trace = restarted_solve(&prob, &scfg, &rcfg, &x0).unwrap();

    let v_out = trace.final_point.half_sq_dist(&Point::zeros(n));
    assert!(v_out <= epsilon, "V(x*, x_out) = {v_out} above {epsilon}");

    let (_, iter_cap) = bound_restart(l_true, 1.0, 1.0, 0.0, r0_sq, epsilon);
    assert!(
        trace.iters() <= iter_cap,
        "total inner iterations {} above the count bound {iter_cap}",
        trace.iters()
    );
    let elapsed = start.elapsed().as_secs_f64();
    assert!(elapsed < 30.0, "runtime {elapsed:.1}s above 30 s");
    pass(3, "restart iteration-count bound");
}

// --- criterion 4 -----------------------------------------------------------

/// Gaussian elimination with partial pivoting for the tiny systems of the
/// enclosing-ball oracle.
#[allow(clippy::needless_range_loop)]
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let pivot =
            (col..n).max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap())?;
        if a[pivot][col].abs() < 1e-12 {
            return None;
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Some(x)
}

/// Exact minimum-enclosing-ball center by support-subset enumeration: for
/// every subset, the equidistant point in the subset's affine hull is a
/// candidate; the optimum is the smallest candidate that encloses all points
/// with the center in the subset's convex hull. Independent of every solver
/// it certifies.
fn enclosing_ball_center(points: &[Point<f64>]) -> Point<f64> {
    let s = points.len();
    let mut best: Option<(f64, Point<f64>)> = None;
    for mask in 1u32..(1 << s) {
        let subset: Vec<&Point<f64>> = (0..s)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &points[i])
            .collect();
        let k = subset.len();
        let center = if k == 1 {
            subset[0].clone()
        } else {
            let base = subset[0];
            let dirs: Vec<Point<f64>> = subset[1..].iter().map(|p| p.sub(base)).collect();
            let gram: Vec<Vec<f64>> = dirs
                .iter()
                .map(|di| dirs.iter().map(|dj| 2.0 * di.dot(dj)).collect())
                .collect();
            let rhs: Vec<f64> = dirs.iter().map(|d| d.norm_sq()).collect();
            let Some(lambda) = solve_dense(gram, rhs) else {
                continue;
            };
            // Center must lie in the convex hull of the subset.
            if lambda.iter().any(|&l| l < -1e-12) || lambda.iter().sum::<f64>() > 1.0 + 1e-12 {
                continue;
            }
            let mut c = base.clone();
            for (l, d) in lambda.iter().zip(&dirs) {
                c = c.add_scaled(*l, d);
            }
            c
        };
        let radius_sq = points
            .iter()
            .map(|p| p.dist_sq(&center))
            .fold(0.0f64, f64::max);
        let enclosed = subset
            .iter()
            .all(|p| (p.dist_sq(&center) - radius_sq).abs() <= 1e-9 * radius_sq.max(1.0));
        if enclosed && best.as_ref().is_none_or(|(r, _)| radius_sq < *r) {
            best = Some((radius_sq, center));
        }
    }
    best.expect("enclosing ball exists").1
}

struct Instance {
    name: &'static str,
    problem: VIProblem<f64>,
    /// Strong-monotonicity modulus handed to the solvers.
    mu: f64,
    /// Lagrangian coordinates (x part) end here; multipliers must stay zero.
    multiplier_start: Option<usize>,
    /// The operator is smooth, so the restart quality guarantee applies.
    smooth: bool,
}

fn acceptance_instances() -> Vec<Instance> {
    let mut out = Vec::new();
    out.push(Instance {
        name: "identity",
        problem: Identity::problem::<f64>(5, 2.0).unwrap(),
        mu: 1.0,
        multiplier_start: None,
        smooth: true,
    });
    out.push(Instance {
        name: "diag",
        problem: DiagSquares::problem::<f64>(5, 2.0).unwrap(),
        mu: 1.0,
        multiplier_start: None,
        smooth: true,
    });
    let sc = Arc::new(SaddleComposite::random(3, 3, 0.5, 0.5, 424_242).unwrap());
    out.push(Instance {
        name: "composite",
        problem: sc.preconditioned_problem(4.0).unwrap(),
        mu: 1.0,
        multiplier_start: None,
        smooth: true,
    });

    // Covering-ball instance. The constraints are inactive at the optimum,
    // so the multipliers vanish there and the solution's primal block is the
    // minimum enclosing ball center of the anchor points, computed exactly
    // by the independent subset-enumeration oracle.
    let instance = gen_covering_ball::<f64>(9_001, 5, 3, 4, CoeffCase::Lomax10).unwrap();
    let n = instance.n;
    let m = instance.m;
    let center = enclosing_ball_center(&instance.points_a);
    assert!(instance.constraints(&center).iter().all(|&c| c < 0.0));
    let mut coords: Vec<f64> = center.as_slice().to_vec();
    coords.extend(std::iter::repeat_n(0.0, m));
    let x_star = Point::new(coords).unwrap();
    let problem = instance
        .into_problem(2.0)
        .unwrap()
        .with_known_solution(x_star);
    problem
        .check_solution(500, 1e-8, &mut ChaCha8Rng::seed_from_u64(5))
        .unwrap();
    out.push(Instance {
        name: "covering",
        problem,
        mu: 2.0,
        multiplier_start: Some(n),
        smooth: false,
    });
    out
}

fn start_setup(inst: &Instance, seed: u64) -> ProxSetup<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let center = match inst.multiplier_start {
        // Lagrangian problems start from a primal sample with multipliers 0,
        // keeping the run on the slice where the modulus is valid.
        Some(n) => {
            let m = inst.problem.dim() - n;
            let mut coords: Vec<f64> = (0..n)
                .map(|_| (rng.random::<f64>() * 2.0 - 1.0) * 0.8)
                .collect();
            coords.extend(std::iter::repeat_n(0.0, m));
            Point::new(coords).unwrap()
        }
        None => inst.problem.set.sample_projected(&mut rng),
    };
    ProxSetup::new(center, 1.0).unwrap()
}

fn assert_multipliers_stay_zero(inst: &Instance, trace: &Trace<f64>) {
    if let Some(n) = inst.multiplier_start {
        for rec in &trace.records {
            for point in [rec.z.as_ref().unwrap(), rec.w.as_ref().unwrap()] {
                assert!(
                    point.as_slice()[n..].iter().all(|&l| l == 0.0),
                    "multiplier left zero at iteration {}",
                    rec.k
                );
            }
        }
    }
}

fn assert_domination(
    trace: &Trace<f64>,
    mu: f64,
    delta: f64,
    v0: f64,
    variants: &[BoundVariant],
    label: &str,
) {
    let hist = LHistory::new(
        trace.records.iter().map(|r| r.l_accepted).collect(),
        mu,
        delta,
        v0,
    )
    .unwrap();
    for &variant in variants {
        let bounds = bound_adaptive_prefix(&hist, variant).unwrap();
        for (rec, bound) in trace.records.iter().zip(&bounds) {
            let v = rec.v_to_solution.unwrap();
            assert!(
                v <= bound + 1e-9 * bound.abs().max(1.0),
                "{label} {variant:?}: measured {v} above bound {bound} at k={}",
                rec.k
            );
        }
    }
}

#[test]
fn criterion_4_bound_domination_suite() {
    let instances = acceptance_instances();
    let mut runs = 0;
    for (i, inst) in instances.iter().enumerate() {
        let solution = inst.problem.known_solution.clone().unwrap();
        let seed = 7_000 + 13 * i as u64;
        let setup = start_setup(inst, seed);
        let z0 = inst.problem.set.project(setup.center()).unwrap();
        let v0 = solution.half_sq_dist(&z0);
        let iters = StopRule::FixedIters(150);

        // Universal method: divergence drift (delta-decreasing).
        let delta = 0.01;
        let t1 = ump_solve(
            &inst.problem,
            &setup,
            &cfg(delta, inst.mu, OutputMode::LastZ),
            &iters,
        )
        .unwrap();
        assert_multipliers_stay_zero(inst, &t1);
        for rec in &t1.records {
            let bound = bound_lemma2_drift(v0, delta, rec.s_sum);
            let v = rec.v_to_solution.unwrap();
            assert!(
                v <= bound + 1e-9 * bound.max(1.0),
                "{}: drift violated at k={}",
                inst.name,
                rec.k
            );
        }
        runs += 1;

        // Restarted method, using the extrapolation output the stage
        // contraction is proved for. Smooth instances run at delta = 0 and
        // must land at output quality epsilon; the nonsmooth covering
        // instance is held to the per-stage divergence drift instead (its
        // smoothness premise fails at delta = 0).
        let epsilon = 1e-6;
        let restart_delta = if inst.smooth { 0.0 } else { delta };
        let mut rcfg_solver = cfg(restart_delta, inst.mu, OutputMode::LastW);
        rcfg_solver.epsilon = epsilon;
        rcfg_solver.max_iters = 20_000;
        let r0_sq = v0.max(1e-8);
        let rcfg = RestartConfig::new(1.0, r0_sq.sqrt(), epsilon).unwrap();
        let t2 = restarted_solve(&inst.problem, &rcfg_solver, &rcfg, &z0).unwrap();
        assert_multipliers_stay_zero(inst, &t2);
        if inst.smooth {
            let v_out = solution.half_sq_dist(&t2.final_point);
            assert!(
                v_out <= epsilon + 1e-9,
                "{}: restart quality {v_out} above {epsilon}",
                inst.name
            );
        }
        // Within every stage: V(x*, z_k) <= V(x*, z_j) + delta (S_k - S_j).
        let mut offset = 0;
        for marker in &t2.restart_markers {
            let stage = &t2.records[offset..offset + marker.iters];
            if let Some(first) = stage.first() {
                let v_first = first.v_to_solution.unwrap();
                for rec in stage {
                    let v = rec.v_to_solution.unwrap();
                    let bound = v_first + restart_delta * (rec.s_sum - first.s_sum);
                    assert!(
                        v <= bound + 1e-9 * bound.max(1.0),
                        "{}: stage drift violated at k={}",
                        inst.name,
                        rec.k
                    );
                }
            }
            offset += marker.iters;
        }
        runs += 1;

        // No-restart solvers: per-iteration theorem bounds.
        let t3 = adaptive_delta_solve(
            &inst.problem,
            &setup,
            &cfg(delta, inst.mu, OutputMode::LastZ),
            &iters,
        )
        .unwrap();
        assert_multipliers_stay_zero(inst, &t3);
        assert_domination(
            &t3,
            inst.mu,
            delta,
            v0,
            &[BoundVariant::PerStepDelta],
            inst.name,
        );
        runs += 1;

        let t4 = adaptive_smooth_solve(
            &inst.problem,
            &setup,
            &cfg(0.0, inst.mu, OutputMode::LastZ),
            &iters,
        )
        .unwrap();
        assert_multipliers_stay_zero(inst, &t4);
        assert_domination(
            &t4,
            inst.mu,
            0.0,
            v0,
            &[BoundVariant::PerStepProduct, BoundVariant::WorstCaseRate],
            inst.name,
        );
        runs += 1;

        let t5 = adaptive_scaled_delta_solve(
            &inst.problem,
            &setup,
            &cfg(delta, inst.mu, OutputMode::LastZ),
            &iters,
        )
        .unwrap();
        assert_multipliers_stay_zero(inst, &t5);
        assert_domination(
            &t5,
            inst.mu,
            delta,
            v0,
            &[
                BoundVariant::PerStepFlatDelta,
                BoundVariant::PerStepScaledDelta,
            ],
            inst.name,
        );
        runs += 1;
    }
    assert_eq!(runs, 20);
    pass(4, "bound domination suites (20 runs)");
}

// --- criterion 5 -----------------------------------------------------------

#[test]
fn criterion_5_lifted_operator_certificates() {
    let start = Instant::now();
    let g = SaddleComposite::random(5, 5, 0.5, 0.5, 31_337).unwrap();
    let dim = g.total_dim();
    let l_tilde = g.smoothness();
    let mut rng = ChaCha8Rng::seed_from_u64(64);
    let mut random_point = |range: f64| {
        Point::new(
            (0..dim)
                .map(|_| (rng.random::<f64>() * 2.0 - 1.0) * range)
                .collect::<Vec<_>>(),
        )
        .unwrap()
    };
    for _ in 0..1000 {
        let u = random_point(3.0);
        let v = random_point(3.0);
        let lhs = Operator::<f64>::eval(&g, &u)
            .sub(&Operator::<f64>::eval(&g, &v))
            .dot(&u.sub(&v));
        let rhs = g.companion_bregman(&u, &v) + g.companion_bregman(&v, &u);
        assert!(
            lhs >= rhs - 1e-10 * rhs.max(1.0),
            "strong monotonicity violated: {lhs} < {rhs}"
        );
    }
    for _ in 0..1000 {
        let y = random_point(3.0);
        let z = random_point(3.0);
        let x = random_point(3.0);
        let lhs = Operator::<f64>::eval(&g, &y)
            .sub(&Operator::<f64>::eval(&g, &z))
            .dot(&y.sub(&x));
        let rhs = l_tilde * (g.companion_bregman(&y, &z) + g.companion_bregman(&x, &y));
        assert!(
            lhs <= rhs + 1e-10 * rhs.abs().max(1.0),
            "smoothness violated: {lhs} > {rhs}"
        );
    }
    assert!(start.elapsed().as_secs_f64() < 1.0);
    pass(5, "lifted-operator certificates");
}

// --- criterion 6 -----------------------------------------------------------

/// Brute-force projected-gradient inner minimizer, run to movement
/// tolerance 1e-10.
fn pg_minimize(
    set: &FeasibleSet<f64>,
    anchor: &Point<f64>,
    w_anchor: Option<&Point<f64>>,
    v: &Point<f64>,
    coef: f64,
    mu: f64,
) -> Point<f64> {
    let step = 1.0 / (coef + mu);
    let mut u = set.project(anchor).unwrap();
    for _ in 0..200_000 {
        let mut grad = v.add_scaled(coef, &u.sub(anchor));
        if let Some(w) = w_anchor {
            grad = grad.add_scaled(mu, &u.sub(w));
        }
        let next = set.project(&u.add_scaled(-step, &grad)).unwrap();
        let moved = next.dist(&u);
        u = next;
        if moved < 1e-10 {
            break;
        }
    }
    u
}

#[test]
fn criterion_6_prox_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let setup2 = ProxSetup::origin(2);
    let setup5 = ProxSetup::origin(5);
    let mut checked = 0;
    for &dim in &[2usize, 5] {
        let setup = if dim == 2 { &setup2 } else { &setup5 };
        let sets = [
            FeasibleSet::origin_ball(dim, 1.0 + rng.random::<f64>()).unwrap(),
            FeasibleSet::box_bounds(vec![-0.7; dim], vec![1.1; dim]).unwrap(),
        ];
        for set in &sets {
            for _ in 0..13 {
                let anchor = set.sample_projected(&mut rng);
                let w_anchor = set.sample_projected(&mut rng);
                let v = Point::new(
                    (0..dim)
                        .map(|_| (rng.random::<f64>() * 2.0 - 1.0) * 3.0)
                        .collect::<Vec<_>>(),
                )
                .unwrap();
                let coef = 0.3 + rng.random::<f64>() * 4.0;
                let mu = rng.random::<f64>() * 2.0;

                let closed = prox_step(setup, set, &anchor, &v, coef).unwrap();
                let brute = pg_minimize(set, &anchor, None, &v, coef, 0.0);
                assert!(closed.dist(&brute) < 1e-6);

                let closed = mixed_prox_step(setup, set, &anchor, &w_anchor, &v, coef, mu).unwrap();
                let brute = pg_minimize(set, &anchor, Some(&w_anchor), &v, coef, mu);
                assert!(closed.dist(&brute) < 1e-6);
                checked += 1;
            }
        }
    }
    assert!(checked >= 50);
    pass(6, "prox oracle equivalence");
}

// --- criterion 7 -----------------------------------------------------------

#[test]
fn criterion_7_line_search_overshoot() {
    for seed in 0..10u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(7_700 + seed);
        let cases: Vec<(VIProblem<f64>, f64, &str)> = vec![
            (Identity::problem::<f64>(6, 2.0).unwrap(), 1.0, "identity"),
            (DiagSquares::problem::<f64>(10, 2.0).unwrap(), 100.0, "diag"),
            {
                let sc = Arc::new(SaddleComposite::random(4, 4, 0.5, 0.5, seed).unwrap());
                let l = sc.smoothness();
                (sc.preconditioned_problem(3.0).unwrap(), l, "composite")
            },
        ];
        for (prob, l_star, name) in cases {
            let setup = ProxSetup::new(prob.set.sample_projected(&mut rng), 1.0).unwrap();
            for trace in [
                adaptive_smooth_solve(
                    &prob,
                    &setup,
                    &cfg(0.0, 1.0, OutputMode::LastZ),
                    &StopRule::FixedIters(60),
                )
                .unwrap(),
                ump_solve(
                    &prob,
                    &setup,
                    &cfg(0.0, 1.0, OutputMode::LastZ),
                    &StopRule::FixedIters(60),
                )
                .unwrap(),
            ] {
                for rec in &trace.records {
                    assert!(
                        rec.l_accepted <= 2.0 * l_star + 1e-9,
                        "{name} seed {seed}: accepted L {} above 2 L* = {}",
                        rec.l_accepted,
                        2.0 * l_star
                    );
                }
            }
        }
    }
    pass(7, "line-search overshoot");
}

// --- criterion 8 -----------------------------------------------------------

fn find<'a>(files: &'a [TraceFile], solver: SolverId, eps: f64, label: &str) -> &'a TraceFile {
    files
        .iter()
        .find(|f| {
            f.meta.solver == solver
                && f.meta.epsilon == eps
                && f.meta.config.problem.label() == label
        })
        .unwrap_or_else(|| panic!("missing trace {label}/{:?}/{eps}", solver))
}

#[test]
fn criterion_8_desk_scale_figure_reproduction() {
    let eps = 1e-24; // the tightest grid entry: every solver at full budget

    // Identity family at radii 1, 2, 3.
    let dir = TempDir::new().unwrap();
    let identity =
        reproduce_preset(Preset::FigViIdentity, Scale::Desk, dir.path().to_path_buf()).unwrap();
    let mut work_by_radius = Vec::new();
    let mut elapsed_by_radius = Vec::new();
    for radius in [1.0f64, 2.0, 3.0] {
        let label = format!("minty_identity_n10000_r{radius}");
        let e2 = find(&identity, SolverId::Alg2Restart, eps, &label)
            .summary
            .norm_err
            .unwrap();
        let e3 = find(&identity, SolverId::Alg3Delta, eps, &label)
            .summary
            .norm_err
            .unwrap();
        let e5 = find(&identity, SolverId::Alg5Scaled, eps, &label)
            .summary
            .norm_err
            .unwrap();
        assert!(
            e3 < e2 && e5 < e2,
            "r={radius}: no-restart errors ({e3:.3e}, {e5:.3e}) not below restart ({e2:.3e})"
        );
        let runs: Vec<&TraceFile> = identity
            .iter()
            .filter(|f| f.meta.config.problem.label() == label)
            .collect();
        work_by_radius.push(runs.iter().map(|f| f.summary.iters).sum::<usize>());
        elapsed_by_radius.push(runs.iter().map(|f| f.summary.elapsed_s).sum::<f64>());
    }
    // Runtime ordering, asserted on the deterministic work metric that
    // drives it at fixed dimension; wall time is recorded for reference.
    assert!(
        work_by_radius[0] < work_by_radius[1] && work_by_radius[1] < work_by_radius[2],
        "iteration work not increasing with radius: {work_by_radius:?}"
    );
    println!("  identity work per radius: {work_by_radius:?}, wall seconds: {elapsed_by_radius:?}");

    // Ill-conditioned family: the universal method's reported output beats
    // the additive-delta solver at the matched budget.
    let dir = TempDir::new().unwrap();
    let diag = reproduce_preset(Preset::FigViDiag, Scale::Desk, dir.path().to_path_buf()).unwrap();
    let label = "minty_diag_n10000_r1";
    let e1 = find(&diag, SolverId::Alg1Ump, eps, label)
        .summary
        .norm_err
        .unwrap();
    let e3 = find(&diag, SolverId::Alg3Delta, eps, label)
        .summary
        .norm_err
        .unwrap();
    let e5 = find(&diag, SolverId::Alg5Scaled, eps, label)
        .summary
        .norm_err
        .unwrap();
    assert!(
        e1 < e3,
        "universal method ({e1:.3e}) does not beat the additive-delta solver ({e3:.3e})"
    );
    println!("  diag errors: ump {e1:.3e} < alg3 {e3:.3e} (alg5 {e5:.3e})");
    pass(8, "desk-scale figure reproduction");
}

// --- criterion 9 -----------------------------------------------------------

#[test]
fn criterion_9_distribution_sanity() {
    // 1e5 draws each via a 100 x 1000 coefficient matrix.
    let lomax = gen_covering_ball::<f64>(77, 1000, 100, 1, CoeffCase::Lomax10).unwrap();
    let mean = (0..100)
        .map(|p| lomax.alpha.row(p).iter().sum::<f64>())
        .sum::<f64>()
        / 1e5;
    assert!(
        (mean - 1.0 / 9.0).abs() < 0.01,
        "Lomax mean {mean} outside 1/9 +- 0.01"
    );

    let chi = gen_covering_ball::<f64>(78, 1000, 100, 1, CoeffCase::ChiSq3).unwrap();
    let mean = (0..100)
        .map(|p| chi.alpha.row(p).iter().sum::<f64>())
        .sum::<f64>()
        / 1e5;
    assert!(
        (mean - 3.0).abs() < 0.05,
        "chi-square mean {mean} outside 3 +- 0.05"
    );
    pass(9, "distribution sanity");
}
