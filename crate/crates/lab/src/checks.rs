//! The `check-all` regression suite: named checks, each reducing to a
//! single residual compared against a pinned tolerance. Verdict-style
//! checks encode agreement as residual 0 and disagreement as 1.
//!
//! Checks run on a small worker pool capped by SZEGO_LAB_THREADS; results
//! are assembled in catalog order, so the artifact bytes do not depend on
//! the thread count.

use std::f64::consts::PI;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;

use num_complex::Complex64;

use szego_lab_core::circle::{eval_analytic_at, idft, BoundarySamples, CircleGrid};
use szego_lab_core::duality::{
    hoelder_margin, representation_check, selfadjoint_residual, PairingNorms,
};
use szego_lab_core::muckenhoupt::{
    ap_scan, arc_quotient, boundedness_interval, default_delta_ladder, CircleArc,
};
use szego_lab_core::norms::{blowup_scan, default_radii, hardy_norm, lp_norm, NormSpec, Verdict};
use szego_lab_core::szego::{
    eval_projected, project_to_samples, project_weighted, project_weighted_quadrature,
    rescaled_project, rescaled_samples, weighted_kernel_via_moments, GramSystem, RescaleVariant,
};
use szego_lab_core::weights::{moment, moment_closed_form, PowerWeight};

use crate::args::Format;
use crate::commands::{kernel_identity_residual, Ctx, KERNEL_IDENTITY_ALPHAS};
use crate::config::resolve;
use crate::fmt::{csv_row, sig17, JsonObj};
use crate::inputs::{interior_point, polynomial, rng_from, trig_poly};
use crate::output::emit;
use crate::CliError;

pub struct Check {
    pub name: &'static str,
    pub tolerance: f64,
    run: fn(u64) -> Result<f64, String>,
}

fn s(e: szego_lab_core::Error) -> String {
    e.to_string()
}

fn chk_interval_endpoints(_seed: u64) -> Result<f64, String> {
    let (q0, p0) = boundedness_interval(0.5).map_err(s)?;
    Ok((q0 - 4.0 / 3.0).abs().max((p0 - 4.0).abs()))
}

fn chk_interval_conjugacy(_seed: u64) -> Result<f64, String> {
    let mut worst = 0.0f64;
    for &alpha in &[0.25, 0.5, 1.0, 2.0, 10.0] {
        let (q0, p0) = boundedness_interval(alpha).map_err(s)?;
        worst = worst.max((1.0 / q0 + 1.0 / p0 - 1.0).abs());
    }
    Ok(worst)
}

fn chk_ap_ladder_slopes(_seed: u64) -> Result<f64, String> {
    let ladder = default_delta_ladder();
    let mut worst = 0.0f64;
    for &(alpha, p) in &[(0.5, 6.0), (0.5, 1.2), (1.0, 6.0), (1.0, 1.2)] {
        let report = ap_scan(alpha, p, &ladder, 64).map_err(s)?;
        let predicted = report
            .predicted_slope
            .ok_or_else(|| format!("unexpected endpoint at alpha={alpha} p={p}"))?;
        worst = worst.max((report.fitted_slope - predicted).abs() / predicted.abs());
    }
    Ok(worst)
}

fn chk_ap_flat_slope(_seed: u64) -> Result<f64, String> {
    let report = ap_scan(0.7, 2.0, &default_delta_ladder(), 64).map_err(s)?;
    Ok(report.fitted_slope.abs())
}

fn chk_arc_quotient_limit(_seed: u64) -> Result<f64, String> {
    let w = PowerWeight::new(-0.5, 0.0).map_err(s)?;
    let arc = CircleArc::new(0.0, 2f64.powi(-10)).map_err(s)?;
    let q = arc_quotient(&w, 2.5, &arc, 128).map_err(s)?;
    let limit = 1.0 / (0.5 * (4.0f64 / 3.0).powf(1.5));
    Ok((q - limit).abs() / limit)
}

fn chk_kernel_identity(seed: u64) -> Result<f64, String> {
    kernel_identity_residual(&KERNEL_IDENTITY_ALPHAS, 100, seed.wrapping_add(7)).map_err(|e| {
        match e {
            CliError::Usage(m) | CliError::Run(m) => m,
        }
    })
}

fn origin_truncation_error(order: usize) -> Result<f64, String> {
    let grid = CircleGrid::new(4096).map_err(s)?;
    let sys = GramSystem::new(1.0, order, &grid).map_err(s)?;
    let k = weighted_kernel_via_moments(&sys, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
        .map_err(s)?;
    Ok((k.re - 1.0 / (2.0 * PI)).abs())
}

fn chk_moment_kernel_law(_seed: u64) -> Result<f64, String> {
    // The truncation error at the origin obeys 1/((N+1)·2pi) exactly when
    // alpha = 1 (tridiagonal moment matrix).
    let err = origin_truncation_error(64)?;
    Ok((err - 1.0 / (65.0 * 2.0 * PI)).abs())
}

fn chk_moment_kernel_decay(_seed: u64) -> Result<f64, String> {
    let err64 = origin_truncation_error(64)?;
    let err128 = origin_truncation_error(128)?;
    Ok((err128 - err64).max(0.0))
}

fn chk_projection_explicit_value(_seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(4096).map_err(s)?;
    let f = BoundarySamples::from_fn(&grid, |t| Complex64::from_polar(1.0, -t));
    let h = project_weighted(&f, 1.0).map_err(s)?;
    let v = eval_projected(&h, 1.0, Complex64::new(0.5, 0.0)).map_err(s)?;
    Ok((v - Complex64::new(-2.0, 0.0)).norm())
}

fn chk_projection_route_agreement(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(1 << 14).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(71));
    let mut worst = 0.0f64;
    for _ in 0..2 {
        let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
        let pts: Vec<Complex64> = (0..5).map(|_| interior_point(&mut rng, 0.6)).collect();
        let h = project_weighted(&f, 0.5).map_err(s)?;
        let quad = project_weighted_quadrature(&f, 0.5, &pts).map_err(s)?;
        for (i, &z) in pts.iter().enumerate() {
            let a = eval_projected(&h, 0.5, z).map_err(s)?;
            worst = worst.max((a - quad[i]).norm());
        }
    }
    Ok(worst)
}

fn chk_projection_fixes_polynomials(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(2048).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(13));
    let pts: Vec<Complex64> = (0..6).map(|_| interior_point(&mut rng, 0.8)).collect();
    let mut worst = 0.0f64;
    for &alpha in &[0.0, 1.0, 2.0] {
        let block = polynomial(&mut rng, 8);
        let trace = idft(&block, &grid).map_err(s)?;
        let h = project_weighted(&trace, alpha).map_err(s)?;
        for &z in &pts {
            let direct = eval_analytic_at(&block, z).map_err(s)?;
            let proj = eval_projected(&h, alpha, z).map_err(s)?;
            worst = worst.max((proj - direct).norm());
        }
    }
    Ok(worst)
}

fn chk_projection_idempotence(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(2048).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(13));
    let mut worst = 0.0f64;
    for &alpha in &[0.0, 0.5, 1.0, 1.7] {
        let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
        let once = project_to_samples(&f, alpha).map_err(s)?;
        let twice = project_to_samples(&once, alpha).map_err(s)?;
        for (a, b) in once.values().iter().zip(twice.values()) {
            worst = worst.max((a - b).norm());
        }
    }
    Ok(worst)
}

fn chk_rescale_route_agreement(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(4096).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(23));
    let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
    let pts: Vec<Complex64> = (0..5).map(|_| interior_point(&mut rng, 0.6)).collect();
    let direct = project_weighted(&f, 0.5).map_err(s)?;
    let via = rescaled_project(&f, 0.5, 3.0, &pts, RescaleVariant::AnalyticFactor).map_err(s)?;
    let mut worst = 0.0f64;
    for (i, &z) in pts.iter().enumerate() {
        let d = eval_projected(&direct, 0.5, z).map_err(s)?;
        worst = worst.max((d - via[i]).norm());
    }
    Ok(worst)
}

fn chk_rescale_norm_identity(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(4096).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(23));
    let mut worst = 0.0f64;
    for &(alpha, p) in &[(0.5, 3.0), (1.0, 2.0), (0.25, 6.0)] {
        let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
        let tilde = rescaled_samples(&f, alpha, RescaleVariant::AnalyticFactor).map_err(s)?;
        let plain = NormSpec::new(p, PowerWeight::new(0.0, 0.0).map_err(s)?).map_err(s)?;
        let weighted = NormSpec::new(p, PowerWeight::new(alpha * p, 0.0).map_err(s)?).map_err(s)?;
        let lhs = lp_norm(&tilde, &plain).map_err(s)?;
        let rhs = lp_norm(&f, &weighted).map_err(s)?;
        worst = worst.max((lhs - rhs).abs() / rhs.max(1.0));
    }
    Ok(worst)
}

fn chk_weight_moments(_seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::new(1 << 18).map_err(s)?;
    let mut worst = 0.0f64;
    for &alpha in &[0.0, 0.25, 0.5, 1.0, 1.5, 2.0] {
        let scale = moment_closed_form(0, alpha).map_err(s)?;
        for k in -16i64..=16 {
            let q = moment(k, alpha, &grid).map_err(s)?;
            let exact = moment_closed_form(k, alpha).map_err(s)?;
            worst = worst.max((q - exact).abs() / exact.abs().max(scale));
        }
    }
    Ok(worst)
}

fn chk_duality_selfadjoint(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(4096).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(37));
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let f = idft(&trig_poly(&mut rng, 16), &grid).map_err(s)?;
        let h = idft(&trig_poly(&mut rng, 16), &grid).map_err(s)?;
        worst = worst.max(selfadjoint_residual(&f, &h, 0.5).map_err(s)?);
    }
    Ok(worst)
}

fn chk_duality_representation(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(4096).map_err(s)?;
    let rep_seed = seed.wrapping_add(41);
    let h = idft(&trig_poly(&mut rng_from(rep_seed), 12), &grid).map_err(s)?;
    let mut worst = 0.0f64;
    for &p in &[2.0, 3.0] {
        for norms in [PairingNorms::FixedWeight, PairingNorms::Rescaled] {
            worst = worst.max(representation_check(&h, 0.5, p, norms, 8, rep_seed).map_err(s)?);
        }
    }
    Ok(worst)
}

fn chk_hoelder_margin(seed: u64) -> Result<f64, String> {
    let grid = CircleGrid::shared(512).map_err(s)?;
    let mut rng = rng_from(seed.wrapping_add(43));
    let mut min_margin = f64::INFINITY;
    for &alpha in &[0.0, 0.25, 0.5, 1.0, 2.0] {
        for &p in &[1.2, 2.0, 3.0, 6.0] {
            for _ in 0..50 {
                let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
                let h = idft(&trig_poly(&mut rng, 8), &grid).map_err(s)?;
                min_margin = min_margin.min(hoelder_margin(&f, &h, alpha, p).map_err(s)?);
            }
        }
    }
    Ok((-min_margin).max(0.0))
}

const SCAN_GRIDS: [usize; 4] = [512, 1024, 2048, 4096];

fn chk_blowup_stable_inside(_seed: u64) -> Result<f64, String> {
    let report = blowup_scan(0.5, 3.0, &SCAN_GRIDS, 40, 20).map_err(s)?;
    Ok(if report.verdict == Verdict::Stable {
        0.0
    } else {
        1.0
    })
}

fn chk_blowup_conjugate_verdicts(_seed: u64) -> Result<f64, String> {
    let at_p = blowup_scan(0.5, 6.0, &SCAN_GRIDS, 40, 20).map_err(s)?;
    let at_q = blowup_scan(0.5, 1.2, &SCAN_GRIDS, 40, 20).map_err(s)?;
    Ok(if at_p.verdict == at_q.verdict { 0.0 } else { 1.0 })
}

fn chk_radial_means_monotone(seed: u64) -> Result<f64, String> {
    let radii = default_radii();
    let mut rng = rng_from(seed.wrapping_add(53));
    let mut bad = 0usize;
    for i in 0..50 {
        let alpha = if i % 2 == 0 { 0.0 } else { 1.0 };
        let block = polynomial(&mut rng, 12);
        if hardy_norm(&block, alpha, 2.0, &radii).is_err() {
            bad += 1;
        }
    }
    Ok(bad as f64)
}

fn chk_hardy_norm_constant(_seed: u64) -> Result<f64, String> {
    let one = szego_lab_core::circle::FourierCoeffs::new(0, vec![Complex64::new(1.0, 0.0)])
        .map_err(s)?;
    let got = hardy_norm(&one, 1.0, 2.0, &default_radii()).map_err(s)?;
    Ok((got - (4.0 * PI).sqrt()).abs())
}

pub fn catalog() -> Vec<Check> {
    vec![
        Check {
            name: "interval-endpoints",
            tolerance: 1e-12,
            run: chk_interval_endpoints,
        },
        Check {
            name: "interval-conjugacy",
            tolerance: 1e-12,
            run: chk_interval_conjugacy,
        },
        Check {
            name: "ap-ladder-slopes",
            tolerance: 0.05,
            run: chk_ap_ladder_slopes,
        },
        Check {
            name: "ap-flat-slope",
            tolerance: 0.02,
            run: chk_ap_flat_slope,
        },
        Check {
            name: "arc-quotient-limit",
            tolerance: 0.01,
            run: chk_arc_quotient_limit,
        },
        Check {
            name: "kernel-identity",
            tolerance: 1e-12,
            run: chk_kernel_identity,
        },
        Check {
            name: "moment-kernel-law",
            tolerance: 1e-9,
            run: chk_moment_kernel_law,
        },
        Check {
            name: "moment-kernel-decay",
            tolerance: 0.0,
            run: chk_moment_kernel_decay,
        },
        Check {
            name: "projection-explicit-value",
            tolerance: 1e-8,
            run: chk_projection_explicit_value,
        },
        Check {
            name: "projection-route-agreement",
            tolerance: 1e-6,
            run: chk_projection_route_agreement,
        },
        Check {
            name: "projection-fixes-polynomials",
            tolerance: 1e-10,
            run: chk_projection_fixes_polynomials,
        },
        // Dividing by g^alpha at the node nearest the singularity amplifies
        // roundoff; measured drift over 30 seeds stays below 4e-9, so the
        // gate sits 10x above that and 3 orders below a real regression.
        Check {
            name: "projection-idempotence",
            tolerance: 4e-8,
            run: chk_projection_idempotence,
        },
        Check {
            name: "rescale-route-agreement",
            tolerance: 1e-8,
            run: chk_rescale_route_agreement,
        },
        Check {
            name: "rescale-norm-identity",
            tolerance: 1e-12,
            run: chk_rescale_norm_identity,
        },
        Check {
            name: "weight-moments",
            tolerance: 1e-6,
            run: chk_weight_moments,
        },
        Check {
            name: "duality-selfadjoint",
            tolerance: 1e-7,
            run: chk_duality_selfadjoint,
        },
        Check {
            name: "duality-representation",
            tolerance: 1e-6,
            run: chk_duality_representation,
        },
        Check {
            name: "hoelder-margin",
            tolerance: 1e-10,
            run: chk_hoelder_margin,
        },
        Check {
            name: "blowup-stable-inside",
            tolerance: 0.5,
            run: chk_blowup_stable_inside,
        },
        Check {
            name: "blowup-conjugate-verdicts",
            tolerance: 0.5,
            run: chk_blowup_conjugate_verdicts,
        },
        Check {
            name: "radial-means-monotone",
            tolerance: 0.5,
            run: chk_radial_means_monotone,
        },
        Check {
            name: "hardy-norm-constant",
            tolerance: 1e-2,
            run: chk_hardy_norm_constant,
        },
    ]
}

fn thread_cap() -> usize {
    match std::env::var("SZEGO_LAB_THREADS") {
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => t,
            _ => {
                eprintln!("warning: ignoring invalid SZEGO_LAB_THREADS={v:?}");
                default_threads()
            }
        },
        Err(_) => default_threads(),
    }
}

fn default_threads() -> usize {
    std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(8)
}

struct Outcome {
    residual: Option<f64>,
    error: Option<String>,
}

pub fn check_all(
    seed: Option<u64>,
    only: Option<String>,
    corrupt_tolerances: bool,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 0);
    let catalog = catalog();
    let selected: Vec<&Check> = match &only {
        Some(filter) => catalog
            .iter()
            .filter(|c| c.name.contains(filter.as_str()))
            .collect(),
        None => catalog.iter().collect(),
    };
    if selected.is_empty() {
        return Err(CliError::Usage(format!(
            "--only {:?} matches no checks",
            only.unwrap_or_default()
        )));
    }

    let threads = thread_cap().min(selected.len());
    let next = AtomicUsize::new(0);
    let (tx, rx) = mpsc::channel::<(usize, Result<f64, String>)>();
    std::thread::scope(|scope| {
        for _ in 0..threads {
            let tx = tx.clone();
            let next = &next;
            let selected = &selected;
            scope.spawn(move || loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= selected.len() {
                    break;
                }
                let outcome = (selected[i].run)(seed);
                if tx.send((i, outcome)).is_err() {
                    break;
                }
            });
        }
        drop(tx);
    });

    let mut outcomes: Vec<Outcome> = (0..selected.len())
        .map(|_| Outcome {
            residual: None,
            error: Some("check did not report".to_string()),
        })
        .collect();
    for (i, result) in rx {
        outcomes[i] = match result {
            Ok(residual) => Outcome {
                residual: Some(residual),
                error: None,
            },
            Err(e) => Outcome {
                residual: None,
                error: Some(e),
            },
        };
    }

    let mut rows_json = Vec::with_capacity(selected.len());
    let mut rows_csv = vec!["name,residual,tolerance,pass".to_string()];
    let mut passed = 0usize;
    let mut first_failure: Option<&'static str> = None;
    for (check, outcome) in selected.iter().zip(&outcomes) {
        let tolerance = if corrupt_tolerances {
            -1.0
        } else {
            check.tolerance
        };
        let (residual, pass) = match (&outcome.residual, &outcome.error) {
            (Some(r), _) => (*r, *r <= tolerance),
            (None, _) => (f64::MAX, false),
        };
        if pass {
            passed += 1;
        } else {
            if first_failure.is_none() {
                first_failure = Some(check.name);
            }
            match &outcome.error {
                Some(e) => eprintln!("check failed: {}: {e}", check.name),
                None => eprintln!(
                    "check failed: {}: residual {} exceeds tolerance {}",
                    check.name,
                    sig17(residual),
                    sig17(tolerance)
                ),
            }
        }
        let mut row = JsonObj::new()
            .str("name", check.name)
            .num("residual", residual)
            .num("tolerance", tolerance)
            .bool("pass", pass);
        if let Some(e) = &outcome.error {
            row = row.str("error", e);
        }
        rows_json.push(row.finish());
        rows_csv.push(csv_row(&[
            check.name.to_string(),
            sig17(residual),
            sig17(tolerance),
            pass.to_string(),
        ]));
    }
    let failed = selected.len() - passed;

    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => JsonObj::new()
            .int("seed", seed)
            .arr_raw("checks", &rows_json)
            .int("passed", passed as u64)
            .int("failed", failed as u64)
            .raw(
                "first_failure",
                match first_failure {
                    Some(name) => crate::fmt::json_string(name),
                    None => "null".to_string(),
                },
            )
            .finish(),
        Format::Csv => rows_csv.join("\n"),
    };
    emit(&ctx.out, &artifact)?;
    Ok(if failed == 0 { 0 } else { 1 })
}
