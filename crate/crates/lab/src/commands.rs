//! One function per subcommand: resolve parameters (flag > config file >
//! default), validate against the library preconditions, dispatch, and
//! serialize. Numeric output always equals what the library API returns
//! for the same parameters.

use std::path::PathBuf;

use num_complex::Complex64;

use szego_lab_core::circle::{idft, BoundarySamples, CircleGrid};
use szego_lab_core::duality::{
    hoelder_margin, representation_check, selfadjoint_residual, PairingNorms,
};
use szego_lab_core::muckenhoupt::{ap_scan, boundedness_interval, default_delta_ladder, ApClass};
use szego_lab_core::norms::{blowup_scan, default_radii, hardy_norm, lp_norm, NormSpec, Verdict};
use szego_lab_core::szego::{
    eval_projected, project_weighted, project_weighted_quadrature, szego_kernel, weighted_kernel,
    weighted_kernel_via_moments, GramSystem,
};
use szego_lab_core::weights::{g_alpha, PowerWeight};

use crate::args::Format;
use crate::config::{require, resolve, FileConfig};
use crate::fmt::{csv_row, sig17, trim12, JsonObj};
use crate::inputs::{interior_point, polynomial, rng_from, trig_poly};
use crate::output::emit;
use crate::CliError;

pub struct Ctx {
    pub cfg: FileConfig,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
}

impl Ctx {
    pub(crate) fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }
}

fn run_err(e: szego_lab_core::Error) -> CliError {
    CliError::Run(e.to_string())
}

fn valid_alpha(alpha: f64) -> Result<f64, CliError> {
    if !alpha.is_finite() || alpha < 0.0 {
        return Err(CliError::Usage(format!(
            "--alpha must be finite and >= 0, got {alpha}"
        )));
    }
    Ok(alpha)
}

fn valid_p(p: f64) -> Result<f64, CliError> {
    if !p.is_finite() || p <= 1.0 {
        return Err(CliError::Usage(format!(
            "--p must be finite and > 1, got {p}"
        )));
    }
    Ok(p)
}

fn class_str(class: ApClass) -> &'static str {
    match class {
        ApClass::Inside => "inside",
        ApClass::Boundary => "boundary",
        ApClass::Outside => "outside",
    }
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Stable => "stable",
        Verdict::Growing => "growing",
        Verdict::Inconclusive => "inconclusive",
    }
}

pub fn interval(alpha: Option<f64>, ctx: &Ctx) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let (q0, p0) = boundedness_interval(alpha).map_err(run_err)?;
    let p0_text = if p0.is_finite() {
        trim12(p0)
    } else {
        "inf".to_string()
    };
    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => {
            let p0_json = if p0.is_finite() {
                trim12(p0)
            } else {
                "\"inf\"".to_string()
            };
            JsonObj::new()
                .raw("q0", trim12(q0))
                .raw("p0", p0_json)
                .finish()
        }
        Format::Csv => format!("q0,p0\n{},{}", trim12(q0), p0_text),
    };
    emit(&ctx.out, &artifact)?;
    Ok(0)
}

/// Fitted-versus-predicted gate shared by `ap-scan` and the check suite:
/// 5% relative, 0.02 absolute when the prediction is 0.
pub fn slope_gate(fitted: f64, predicted: f64) -> bool {
    if predicted.abs() < 1e-9 {
        fitted.abs() <= 0.02
    } else {
        (fitted - predicted).abs() <= 0.05 * predicted.abs()
    }
}

pub fn cmd_ap_scan(
    alpha: Option<f64>,
    p: Option<f64>,
    resolution: Option<usize>,
    ladder: Option<Vec<f64>>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let p = valid_p(require(p, ctx.cfg.get_f64("p")?, "p")?)?;
    let resolution = resolve(resolution, ctx.cfg.get_usize("resolution")?, 64);
    if resolution < 64 {
        return Err(CliError::Usage(format!(
            "--resolution must be >= 64, got {resolution}"
        )));
    }
    let ladder = resolve(
        ladder,
        ctx.cfg.get_f64_list("ladder")?,
        default_delta_ladder(),
    );
    if ladder.len() < 4
        || ladder[0] <= 0.0
        || ladder.windows(2).any(|w| w[1] >= w[0])
        || ladder[0] > std::f64::consts::PI
    {
        return Err(CliError::Usage(
            "--ladder needs >= 4 positive strictly decreasing entries within (0, pi]".to_string(),
        ));
    }

    let report = ap_scan(alpha, p, &ladder, resolution).map_err(run_err)?;
    let (pass, predicted_json) = match report.predicted_slope {
        Some(pred) => (slope_gate(report.fitted_slope, pred), sig17(pred)),
        None => {
            eprintln!(
                "warning: p = {p} sits at a boundary exponent; the quotient diverges \
                 logarithmically and no power law is predicted"
            );
            (true, "null".to_string())
        }
    };

    let footer = JsonObj::new()
        .num("alpha", report.alpha)
        .num("p", report.p)
        .num("s", report.s)
        .num("a", report.a)
        .num("b", report.b)
        .num("fitted_slope", report.fitted_slope)
        .raw("predicted_slope", &predicted_json)
        .str("class", class_str(report.class))
        .bool("pass", pass);
    let artifact = match ctx.format_or(Format::Csv) {
        Format::Csv => {
            let mut lines = vec!["delta,quotient".to_string()];
            for &(delta, quotient) in &report.ladder {
                lines.push(csv_row(&[sig17(delta), sig17(quotient)]));
            }
            lines.push(format!("# {}", footer.finish()));
            lines.join("\n")
        }
        Format::Json => {
            let deltas: Vec<f64> = report.ladder.iter().map(|r| r.0).collect();
            let quotients: Vec<f64> = report.ladder.iter().map(|r| r.1).collect();
            footer
                .arr_num("ladder_delta", &deltas)
                .arr_num("ladder_quotient", &quotients)
                .finish()
        }
    };
    emit(&ctx.out, &artifact)?;
    Ok(if pass { 0 } else { 1 })
}

#[allow(clippy::too_many_arguments)]
pub fn project(
    alpha: Option<f64>,
    n: Option<usize>,
    degree: Option<i64>,
    seed: Option<u64>,
    points: Option<usize>,
    mode: Option<i64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let n = resolve(n, ctx.cfg.get_usize("n")?, 4096);
    let degree = resolve(degree, ctx.cfg.get_i64("degree")?, 8);
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 0);
    let n_points = resolve(points, ctx.cfg.get_usize("points")?, 5);
    let mode = mode.or(ctx.cfg.get_i64("mode")?);
    if degree < 0 {
        return Err(CliError::Usage(format!(
            "--degree must be >= 0, got {degree}"
        )));
    }
    if n_points == 0 {
        return Err(CliError::Usage("--points must be >= 1".to_string()));
    }
    let window = mode.map_or(degree, i64::abs);
    // The kernel-quadrature route needs n >= 50/(1 - 0.6) for points of
    // modulus < 0.6; 128 covers it with round numbers.
    if n < 128 || (n as i64) < 2 * window + 2 {
        return Err(CliError::Usage(format!(
            "--n {n} is too small for mode window {window} (need max(128, 2*window + 2))"
        )));
    }

    let grid = CircleGrid::shared(n).map_err(run_err)?;
    let mut rng = rng_from(seed);
    let (f, input_desc) = match mode {
        Some(k) => (
            BoundarySamples::from_fn(&grid, |t| Complex64::from_polar(1.0, k as f64 * t)),
            format!("\"mode {k}\""),
        ),
        None => (
            idft(&trig_poly(&mut rng, degree), &grid).map_err(run_err)?,
            "\"random\"".to_string(),
        ),
    };
    let pts: Vec<Complex64> = (0..n_points)
        .map(|_| interior_point(&mut rng, 0.6))
        .collect();

    let h = project_weighted(&f, alpha).map_err(run_err)?;
    let quad = project_weighted_quadrature(&f, alpha, &pts).map_err(run_err)?;
    let mut rows = Vec::with_capacity(n_points);
    let mut max_diff = 0.0f64;
    for (i, &z) in pts.iter().enumerate() {
        let a = eval_projected(&h, alpha, z).map_err(run_err)?;
        let diff = (a - quad[i]).norm();
        max_diff = max_diff.max(diff);
        rows.push((z, a, quad[i], diff));
    }

    let footer = JsonObj::new()
        .num("alpha", alpha)
        .int("n", n as u64)
        .raw("input", &input_desc)
        .int("degree", degree as u64)
        .int("seed", seed)
        .num("max_difference", max_diff);
    let artifact = match ctx.format_or(Format::Csv) {
        Format::Csv => {
            let mut lines = vec![
                "z_re,z_im,conjugation_re,conjugation_im,quadrature_re,quadrature_im,difference"
                    .to_string(),
            ];
            for &(z, a, q, diff) in &rows {
                lines.push(csv_row(&[
                    sig17(z.re),
                    sig17(z.im),
                    sig17(a.re),
                    sig17(a.im),
                    sig17(q.re),
                    sig17(q.im),
                    sig17(diff),
                ]));
            }
            lines.push(format!("# {}", footer.finish()));
            lines.join("\n")
        }
        Format::Json => {
            let items: Vec<String> = rows
                .iter()
                .map(|&(z, a, q, diff)| {
                    JsonObj::new()
                        .num("z_re", z.re)
                        .num("z_im", z.im)
                        .num("conjugation_re", a.re)
                        .num("conjugation_im", a.im)
                        .num("quadrature_re", q.re)
                        .num("quadrature_im", q.im)
                        .num("difference", diff)
                        .finish()
                })
                .collect();
            footer.arr_raw("points", &items).finish()
        }
    };
    emit(&ctx.out, &artifact)?;
    Ok(0)
}

/// Residual of the conjugation identity g(z)·K_mu(z,w)·conj(g(w)) = S(z,w)
/// on seeded interior pairs; shared with the check suite.
pub fn kernel_identity_residual(alphas: &[f64], pairs: usize, seed: u64) -> Result<f64, CliError> {
    let mut rng = rng_from(seed);
    let mut worst = 0.0f64;
    for i in 0..pairs {
        let alpha = alphas[i % alphas.len()];
        let z = interior_point(&mut rng, 0.93);
        let w = interior_point(&mut rng, 0.93);
        let lhs = g_alpha(z, alpha).map_err(run_err)?
            * weighted_kernel(z, w, alpha).map_err(run_err)?.value
            * g_alpha(w, alpha).map_err(run_err)?.conj();
        let rhs = szego_kernel(z, w).map_err(run_err)?;
        worst = worst.max((lhs - rhs).norm());
    }
    Ok(worst)
}

pub const KERNEL_IDENTITY_ALPHAS: [f64; 5] = [0.25, 0.5, 1.0, 1.7, 2.0];
pub const KERNEL_IDENTITY_TOL: f64 = 1e-12;

pub fn kernel_check(
    alpha: Option<f64>,
    pairs: Option<usize>,
    seed: Option<u64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alphas = match alpha.or(ctx.cfg.get_f64("alpha")?) {
        Some(a) => vec![valid_alpha(a)?],
        None => KERNEL_IDENTITY_ALPHAS.to_vec(),
    };
    let pairs = resolve(pairs, ctx.cfg.get_usize("pairs")?, 100);
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 7);
    if pairs == 0 {
        return Err(CliError::Usage("--pairs must be >= 1".to_string()));
    }
    let worst = kernel_identity_residual(&alphas, pairs, seed)?;
    let pass = worst <= KERNEL_IDENTITY_TOL;
    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => JsonObj::new()
            .arr_num("alphas", &alphas)
            .int("pairs", pairs as u64)
            .int("seed", seed)
            .num("max_residual", worst)
            .num("tolerance", KERNEL_IDENTITY_TOL)
            .bool("pass", pass)
            .finish(),
        Format::Csv => {
            let alpha_list = alphas
                .iter()
                .map(|a| sig17(*a))
                .collect::<Vec<_>>()
                .join(";");
            format!(
                "alphas,pairs,seed,max_residual,tolerance,pass\n{}",
                csv_row(&[
                    alpha_list,
                    pairs.to_string(),
                    seed.to_string(),
                    sig17(worst),
                    sig17(KERNEL_IDENTITY_TOL),
                    pass.to_string(),
                ])
            )
        }
    };
    emit(&ctx.out, &artifact)?;
    Ok(if pass { 0 } else { 1 })
}

pub fn gram(
    alpha: Option<f64>,
    dim: Option<usize>,
    grid: Option<usize>,
    closed_form: bool,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let dim = require(dim, ctx.cfg.get_usize("dim")?, "dim")?;
    let grid_n = resolve(grid, ctx.cfg.get_usize("grid")?, 4096);
    if dim == 0 {
        return Err(CliError::Usage("--dim must be >= 1".to_string()));
    }
    if grid_n < 2 {
        return Err(CliError::Usage(format!(
            "--grid must be >= 2, got {grid_n}"
        )));
    }
    let (sys, moments) = if closed_form {
        (
            GramSystem::from_closed_form(alpha, dim).map_err(run_err)?,
            "closed-form",
        )
    } else {
        let g = CircleGrid::new(grid_n).map_err(run_err)?;
        (GramSystem::new(alpha, dim, &g).map_err(run_err)?, "quadrature")
    };
    let k00 = weighted_kernel_via_moments(&sys, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0))
        .map_err(run_err)?;
    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => JsonObj::new()
            .num("alpha", alpha)
            .int("dim", dim as u64)
            .str("moments", moments)
            .int("grid", grid_n as u64)
            .num("condition", sys.condition())
            .num("kernel_at_origin", k00.re)
            .finish(),
        Format::Csv => format!(
            "alpha,dim,moments,grid,condition,kernel_at_origin\n{}",
            csv_row(&[
                sig17(alpha),
                dim.to_string(),
                moments.to_string(),
                grid_n.to_string(),
                sig17(sys.condition()),
                sig17(k00.re),
            ])
        ),
    };
    emit(&ctx.out, &artifact)?;
    Ok(0)
}

pub fn norm_scan(
    alpha: Option<f64>,
    p: Option<f64>,
    degree: Option<i64>,
    seed: Option<u64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let p = resolve(p, ctx.cfg.get_f64("p")?, 2.0);
    if !p.is_finite() || p < 1.0 {
        return Err(CliError::Usage(format!(
            "--p must be finite and >= 1, got {p}"
        )));
    }
    let degree = resolve(degree, ctx.cfg.get_i64("degree")?, 8);
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 0);
    if !(0..=256).contains(&degree) {
        return Err(CliError::Usage(format!(
            "--degree must be in [0, 256], got {degree}"
        )));
    }

    let block = polynomial(&mut rng_from(seed), degree);
    let radii = default_radii();
    // Radial means are nondecreasing, so each prefix maximum is the value
    // at the prefix's largest radius.
    let mut norms = Vec::with_capacity(radii.len());
    for i in 0..radii.len() {
        norms.push(hardy_norm(&block, alpha, p, &radii[..=i]).map_err(run_err)?);
    }
    let grid = CircleGrid::shared(4096).map_err(run_err)?;
    let trace = idft(&block, &grid).map_err(run_err)?;
    let weight = PowerWeight::mu_alpha(alpha).map_err(run_err)?;
    let spec = NormSpec::new(p, weight).map_err(run_err)?;
    let boundary = lp_norm(&trace, &spec).map_err(run_err)?;

    let footer = JsonObj::new()
        .num("alpha", alpha)
        .num("p", p)
        .int("degree", degree as u64)
        .int("seed", seed)
        .num("boundary_norm", boundary);
    let artifact = match ctx.format_or(Format::Csv) {
        Format::Csv => {
            let mut lines = vec!["radius,norm".to_string()];
            for (r, v) in radii.iter().zip(&norms) {
                lines.push(csv_row(&[sig17(*r), sig17(*v)]));
            }
            lines.push(format!("# {}", footer.finish()));
            lines.join("\n")
        }
        Format::Json => footer
            .arr_num("radii", &radii)
            .arr_num("norms", &norms)
            .finish(),
    };
    emit(&ctx.out, &artifact)?;
    Ok(0)
}

pub fn blowup(
    alpha: Option<f64>,
    p: Option<f64>,
    grids: Option<Vec<usize>>,
    budget: Option<u64>,
    seed: Option<u64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(require(alpha, ctx.cfg.get_f64("alpha")?, "alpha")?)?;
    let p = valid_p(require(p, ctx.cfg.get_f64("p")?, "p")?)?;
    let grids = resolve(
        grids,
        ctx.cfg.get_usize_list("grids")?,
        vec![512, 1024, 2048, 4096],
    );
    if grids.len() < 2 || grids.windows(2).any(|w| w[1] <= w[0]) || grids[0] < 8 {
        return Err(CliError::Usage(
            "--grids needs >= 2 strictly increasing sizes, all >= 8".to_string(),
        ));
    }
    let budget = resolve(budget, ctx.cfg.get_u64("budget")?, 40) as usize;
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 20);

    let report = blowup_scan(alpha, p, &grids, budget, seed).map_err(run_err)?;
    let growth = report.estimates.last().unwrap() / report.estimates.first().unwrap();
    let footer = JsonObj::new()
        .num("alpha", alpha)
        .num("p", p)
        .int("budget", budget as u64)
        .int("seed", seed)
        .num("growth_factor", growth)
        .str("verdict", verdict_str(report.verdict));
    let artifact = match ctx.format_or(Format::Csv) {
        Format::Csv => {
            let mut lines = vec!["n,estimate".to_string()];
            for (n, est) in report.grid_sizes.iter().zip(&report.estimates) {
                lines.push(csv_row(&[n.to_string(), sig17(*est)]));
            }
            lines.push(format!("# {}", footer.finish()));
            lines.join("\n")
        }
        Format::Json => footer
            .arr_int("grids", &report.grid_sizes)
            .arr_num("estimates", &report.estimates)
            .finish(),
    };
    emit(&ctx.out, &artifact)?;
    Ok(0)
}

pub const SELFADJOINT_TOL: f64 = 1e-7;
pub const REPRESENTATION_TOL: f64 = 1e-6;

pub fn duality_check(
    alpha: Option<f64>,
    p: Option<f64>,
    n: Option<usize>,
    tests: Option<usize>,
    seed: Option<u64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(resolve(alpha, ctx.cfg.get_f64("alpha")?, 0.5))?;
    let p = valid_p(resolve(p, ctx.cfg.get_f64("p")?, 2.0))?;
    let n = resolve(n, ctx.cfg.get_usize("n")?, 4096);
    let tests = resolve(tests, ctx.cfg.get_usize("tests")?, 20);
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 37);
    if n < 64 {
        return Err(CliError::Usage(format!("--n must be >= 64, got {n}")));
    }
    if tests == 0 {
        return Err(CliError::Usage("--tests must be >= 1".to_string()));
    }

    let grid = CircleGrid::shared(n).map_err(run_err)?;
    let mut rng = rng_from(seed);
    let mut selfadjoint_max = 0.0f64;
    for _ in 0..tests {
        let f = idft(&trig_poly(&mut rng, 16), &grid).map_err(run_err)?;
        let h = idft(&trig_poly(&mut rng, 16), &grid).map_err(run_err)?;
        selfadjoint_max = selfadjoint_max.max(selfadjoint_residual(&f, &h, alpha).map_err(run_err)?);
    }
    let h = idft(&trig_poly(&mut rng, 12), &grid).map_err(run_err)?;
    let rep_fixed =
        representation_check(&h, alpha, p, PairingNorms::FixedWeight, 8, seed + 4).map_err(run_err)?;
    let rep_rescaled =
        representation_check(&h, alpha, p, PairingNorms::Rescaled, 8, seed + 4).map_err(run_err)?;
    let pass = selfadjoint_max <= SELFADJOINT_TOL
        && rep_fixed <= REPRESENTATION_TOL
        && rep_rescaled <= REPRESENTATION_TOL;

    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => JsonObj::new()
            .num("alpha", alpha)
            .num("p", p)
            .int("n", n as u64)
            .int("tests", tests as u64)
            .int("seed", seed)
            .num("selfadjoint_max", selfadjoint_max)
            .num("selfadjoint_tolerance", SELFADJOINT_TOL)
            .num("representation_fixed", rep_fixed)
            .num("representation_rescaled", rep_rescaled)
            .num("representation_tolerance", REPRESENTATION_TOL)
            .bool("pass", pass)
            .finish(),
        Format::Csv => format!(
            "alpha,p,n,tests,seed,selfadjoint_max,representation_fixed,representation_rescaled,pass\n{}",
            csv_row(&[
                sig17(alpha),
                sig17(p),
                n.to_string(),
                tests.to_string(),
                seed.to_string(),
                sig17(selfadjoint_max),
                sig17(rep_fixed),
                sig17(rep_rescaled),
                pass.to_string(),
            ])
        ),
    };
    emit(&ctx.out, &artifact)?;
    Ok(if pass { 0 } else { 1 })
}

pub const HOELDER_LOWER_BOUND: f64 = -1e-10;

pub fn hoelder_fuzz(
    alpha: Option<f64>,
    p: Option<f64>,
    pairs: Option<usize>,
    n: Option<usize>,
    seed: Option<u64>,
    ctx: &Ctx,
) -> Result<i32, CliError> {
    let alpha = valid_alpha(resolve(alpha, ctx.cfg.get_f64("alpha")?, 0.5))?;
    let p = valid_p(resolve(p, ctx.cfg.get_f64("p")?, 3.0))?;
    let pairs = resolve(pairs, ctx.cfg.get_usize("pairs")?, 1000);
    let n = resolve(n, ctx.cfg.get_usize("n")?, 512);
    let seed = resolve(seed, ctx.cfg.get_u64("seed")?, 43);
    if pairs == 0 {
        return Err(CliError::Usage("--pairs must be >= 1".to_string()));
    }
    if n < 64 {
        return Err(CliError::Usage(format!("--n must be >= 64, got {n}")));
    }

    let grid = CircleGrid::shared(n).map_err(run_err)?;
    let mut rng = rng_from(seed);
    let mut min_margin = f64::INFINITY;
    for _ in 0..pairs {
        let f = idft(&trig_poly(&mut rng, 8), &grid).map_err(run_err)?;
        let h = idft(&trig_poly(&mut rng, 8), &grid).map_err(run_err)?;
        min_margin = min_margin.min(hoelder_margin(&f, &h, alpha, p).map_err(run_err)?);
    }
    let pass = min_margin >= HOELDER_LOWER_BOUND;
    let artifact = match ctx.format_or(Format::Json) {
        Format::Json => JsonObj::new()
            .num("alpha", alpha)
            .num("p", p)
            .int("pairs", pairs as u64)
            .int("n", n as u64)
            .int("seed", seed)
            .num("min_margin", min_margin)
            .num("lower_bound", HOELDER_LOWER_BOUND)
            .bool("pass", pass)
            .finish(),
        Format::Csv => format!(
            "alpha,p,pairs,n,seed,min_margin,lower_bound,pass\n{}",
            csv_row(&[
                sig17(alpha),
                sig17(p),
                pairs.to_string(),
                n.to_string(),
                seed.to_string(),
                sig17(min_margin),
                sig17(HOELDER_LOWER_BOUND),
                pass.to_string(),
            ])
        ),
    };
    emit(&ctx.out, &artifact)?;
    Ok(if pass { 0 } else { 1 })
}
