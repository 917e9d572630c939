//! Command-line front end. Every subcommand prints an envelope with the
//! echoed command, a structured result, and a status; `--format json`
//! emits the same data as stable JSON. Exit codes: 0 success, 1 a check
//! or validation failed, 2 malformed input.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{cech, chern, exterior, flat_forms, hodge, morse, projective};

#[derive(Parser)]
#[command(name = "kahlerkit", version, about = "Exact-arithmetic toolkit for Kähler and projective geometry")]
pub struct Cli {
    /// Output format for the result envelope.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
pub enum Command {
    /// Hodge diamonds and Betti vectors of P^n, hypersurfaces, and
    /// complete intersections.
    HodgeDiamond {
        /// Diamond of P^N.
        #[arg(long, value_name = "N", conflicts_with_all = ["hypersurface", "ci"])]
        pn: Option<usize>,
        /// Betti vector of a smooth degree-D hypersurface of dimension N.
        #[arg(long, num_args = 2, value_names = ["N", "D"], conflicts_with = "ci")]
        hypersurface: Option<Vec<u64>>,
        /// Betti vector of a complete intersection in P^M of multidegree d1,d2,...
        #[arg(long, num_args = 2, value_names = ["M", "DEGREES"])]
        ci: Option<Vec<String>>,
    },
    /// Chern classes, canonical degrees, and Euler characteristics.
    Chern {
        /// Total Chern class of P^N.
        #[arg(long, value_name = "N", conflicts_with_all = ["ci", "canonical", "euler"])]
        pn: Option<usize>,
        /// Total Chern class of a complete intersection in P^M.
        #[arg(long, num_args = 2, value_names = ["M", "DEGREES"], conflicts_with_all = ["canonical", "euler"])]
        ci: Option<Vec<String>>,
        /// Degree of the canonical bundle of a complete intersection.
        #[arg(long, num_args = 2, value_names = ["M", "DEGREES"], conflicts_with = "euler")]
        canonical: Option<Vec<String>>,
        /// Topological Euler characteristic of a complete intersection.
        #[arg(long, num_args = 2, value_names = ["M", "DEGREES"])]
        euler: Option<Vec<String>>,
    },
    /// dim H^0(P^n, O(k)).
    H0 { n: usize, k: i64 },
    /// Line-bundle class of a divisor on P^n, components as degree:multiplicity.
    Picard {
        n: usize,
        /// Comma-separated components d:a (degree-d hypersurface with multiplicity a).
        #[arg(long, value_name = "d:a,...")]
        divisor: String,
    },
    /// Čech cohomology of a covering nerve from a JSON description.
    Cech {
        #[arg(long, value_name = "FILE")]
        input: PathBuf,
        /// Compute integer cohomology (free rank + torsion) instead of dimensions over Q.
        #[arg(long)]
        integers: bool,
    },
    /// Numeric checks on the Fubini-Study metric.
    FubiniStudy {
        #[arg(long, value_enum)]
        check: FsCheck,
        /// Complex dimension of the projective space.
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Number of random sample points for pointwise checks.
        #[arg(long, default_value_t = 100)]
        points: usize,
        /// Tolerance (defaults: point 1e-6, integral 1e-6, curvature 1e-4).
        #[arg(long)]
        tol: Option<f64>,
        /// Finite-difference step.
        #[arg(long, default_value_t = 1e-3)]
        step: f64,
        /// Twist k of O(k) for the curvature check.
        #[arg(long, default_value_t = 1)]
        twist: i64,
        /// RNG seed for sample points.
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Lefschetz sl(2) relations, hard Lefschetz, and primitive decomposition.
    Lefschetz {
        /// Verify the sl(2) commutators on all basis forms of dimension N.
        #[arg(long, value_name = "N", conflicts_with_all = ["hard", "primitive_demo"])]
        sl2: Option<usize>,
        /// Check that L^(N-K) is bijective on degree-K forms.
        #[arg(long, num_args = 2, value_names = ["N", "K"], conflicts_with = "primitive_demo")]
        hard: Option<Vec<usize>>,
        /// Decompose a sample 2-form on C^N into primitive pieces.
        #[arg(long, value_name = "N")]
        primitive_demo: Option<usize>,
    },
    /// Verify the flat-model Kähler identities on all monomial forms up
    /// to a coefficient degree.
    KahlerIdentities {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_degree: u8,
    },
    /// Morse inequality checks.
    Morse {
        /// Compare a Morse polynomial file M against a Betti/Poincaré file P.
        #[arg(long, num_args = 2, value_names = ["M.json", "P.json"], conflicts_with = "sphere")]
        check: Option<Vec<PathBuf>>,
        /// Distance-squared fixture on the unit m-sphere, observer at qx,qy,...
        #[arg(long, num_args = 2, value_names = ["m", "qx,qy,..."])]
        sphere: Option<Vec<String>>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
pub enum FsCheck {
    Point,
    Integral,
    Curvature,
}

/// A failure that should abort with a message on stderr.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

fn input_err<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code: 2,
        message: message.into(),
    })
}

fn check_err<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure {
        code: 1,
        message: message.into(),
    })
}

/// Run a parsed command. Returns the envelope and the process exit code.
pub fn execute(cli: &Cli) -> Result<(Value, i32), Failure> {
    let (name, result, pass) = match &cli.command {
        Command::HodgeDiamond { pn, hypersurface, ci } => run_hodge(pn, hypersurface, ci)?,
        Command::Chern { pn, ci, canonical, euler } => run_chern(pn, ci, canonical, euler)?,
        Command::H0 { n, k } => (
            "h0",
            json!({ "n": n, "k": k, "dim": projective::h0_dim(*n, *k).to_string() }),
            true,
        ),
        Command::Picard { n, divisor } => run_picard(*n, divisor)?,
        Command::Cech { input, integers } => run_cech(input, *integers)?,
        Command::FubiniStudy { check, n, points, tol, step, twist, seed } => {
            run_fs(*check, *n, *points, *tol, *step, *twist, *seed)?
        }
        Command::Lefschetz { sl2, hard, primitive_demo } => run_lefschetz(sl2, hard, primitive_demo)?,
        Command::KahlerIdentities { n, max_degree } => run_kahler(*n, *max_degree)?,
        Command::Morse { check, sphere } => run_morse(check, sphere)?,
    };
    let envelope = json!({
        "command": name,
        "status": if pass { "ok" } else { "fail" },
        "result": result,
    });
    Ok((envelope, if pass { 0 } else { 1 }))
}

fn parse_degrees(s: &str) -> Result<Vec<u32>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>())
        .collect::<Result<Vec<_>, _>>()
        .or_else(|_| input_err(format!("cannot parse degree list '{}'", s)))
}

fn parse_usize(s: &str, what: &str) -> Result<usize, Failure> {
    s.parse::<usize>()
        .or_else(|_| input_err(format!("cannot parse {} '{}'", what, s)))
}

fn run_hodge(
    pn: &Option<usize>,
    hypersurface: &Option<Vec<u64>>,
    ci: &Option<Vec<String>>,
) -> Result<(&'static str, Value, bool), Failure> {
    if let Some(n) = pn {
        let d = hodge::diamond_pn(*n);
        let betti = hodge::betti_from_diamond(&d);
        let violations = hodge::validate_diamond(&d);
        let pass = violations.is_empty();
        return Ok((
            "hodge-diamond",
            json!({ "n": n, "grid": d.grid, "betti": betti.0, "violations": violations }),
            pass,
        ));
    }
    if let Some(args) = hypersurface {
        let (n, d) = (args[0] as usize, args[1] as u32);
        let betti = hodge::hypersurface_betti(n, d).or_else(check_err)?;
        let chi = betti.euler_characteristic();
        return Ok((
            "hodge-diamond",
            json!({ "dimension": n, "degree": d, "betti": betti.0, "euler_characteristic": chi }),
            true,
        ));
    }
    if let Some(args) = ci {
        let m = parse_usize(&args[0], "ambient dimension")?;
        let degrees = parse_degrees(&args[1])?;
        let betti = hodge::complete_intersection_betti(m, &degrees).or_else(check_err)?;
        let chi = betti.euler_characteristic();
        return Ok((
            "hodge-diamond",
            json!({ "ambient": m, "degrees": degrees, "betti": betti.0, "euler_characteristic": chi }),
            true,
        ));
    }
    input_err("one of --pn, --hypersurface, --ci is required")
}

fn series_coeffs(s: &chern::ChernSeries) -> Vec<String> {
    (0..=s.truncation()).map(|k| s.chern(k).to_string()).collect()
}

fn run_chern(
    pn: &Option<usize>,
    ci: &Option<Vec<String>>,
    canonical: &Option<Vec<String>>,
    euler: &Option<Vec<String>>,
) -> Result<(&'static str, Value, bool), Failure> {
    if let Some(n) = pn {
        if *n < 1 {
            return input_err("--pn requires N ≥ 1");
        }
        let c = chern::chern_pn(*n);
        return Ok((
            "chern",
            json!({
                "n": n,
                "total_chern": series_coeffs(&c),
                "canonical_c1": -((*n as i64) + 1),
            }),
            true,
        ));
    }
    let parse_pair = |args: &Vec<String>| -> Result<(usize, Vec<u32>), Failure> {
        Ok((parse_usize(&args[0], "ambient dimension")?, parse_degrees(&args[1])?))
    };
    if let Some(args) = ci {
        let (m, degrees) = parse_pair(args)?;
        let c = chern::chern_complete_intersection(m, &degrees).or_else(input_err)?;
        return Ok((
            "chern",
            json!({ "ambient": m, "degrees": degrees, "total_chern": series_coeffs(&c) }),
            true,
        ));
    }
    if let Some(args) = canonical {
        let (m, degrees) = parse_pair(args)?;
        return Ok((
            "chern",
            json!({
                "ambient": m,
                "degrees": degrees,
                "canonical_degree": chern::canonical_degree(m, &degrees),
            }),
            true,
        ));
    }
    if let Some(args) = euler {
        let (m, degrees) = parse_pair(args)?;
        let chi = chern::euler_characteristic(m, &degrees).or_else(input_err)?;
        return Ok((
            "chern",
            json!({ "ambient": m, "degrees": degrees, "euler_characteristic": chi.to_string() }),
            true,
        ));
    }
    input_err("one of --pn, --ci, --canonical, --euler is required")
}

fn run_picard(n: usize, divisor: &str) -> Result<(&'static str, Value, bool), Failure> {
    let mut components = Vec::new();
    for part in divisor.split(',') {
        let (d, a) = part
            .split_once(':')
            .ok_or(())
            .or_else(|_| input_err(format!("component '{}' is not of the form d:a", part)))?;
        let d: u32 = d
            .trim()
            .parse()
            .or_else(|_| input_err(format!("bad degree in '{}'", part)))?;
        let a: i64 = a
            .trim()
            .parse()
            .or_else(|_| input_err(format!("bad multiplicity in '{}'", part)))?;
        components.push((a, d));
    }
    let class = projective::divisor_class(n, &components);
    Ok((
        "picard",
        json!({
            "n": n,
            "components": components.iter().map(|&(a, d)| json!({ "degree": d, "multiplicity": a })).collect::<Vec<_>>(),
            "bundle_twist": class.k,
        }),
        true,
    ))
}

fn run_cech(path: &PathBuf, integers: bool) -> Result<(&'static str, Value, bool), Failure> {
    let text = std::fs::read_to_string(path)
        .or_else(|e| input_err(format!("cannot read {}: {}", path.display(), e)))?;
    let input: cech::CechInput =
        serde_json::from_str(&text).or_else(|e| input_err(format!("malformed input: {}", e)))?;
    if integers {
        let nerve = cech::Nerve::from_simplices(input.nerve.clone()).or_else(input_err)?;
        let groups = cech::integer_cohomology(&nerve);
        let display: Vec<String> = groups.iter().map(|g| g.to_string()).collect();
        return Ok((
            "cech",
            json!({ "coefficients": "Z", "cohomology": display, "groups": groups }),
            true,
        ));
    }
    let complex = input.build().or_else(input_err)?;
    Ok((
        "cech",
        json!({ "coefficients": "Q", "cohomology_dims": complex.cohomology_dims() }),
        true,
    ))
}

fn random_point(n: usize, rng: &mut ChaCha8Rng) -> projective::ChartPoint {
    let w = (0..n)
        .map(|_| Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0)))
        .collect();
    projective::ChartPoint::new(0, w)
}

fn run_fs(
    check: FsCheck,
    n: usize,
    points: usize,
    tol: Option<f64>,
    step: f64,
    twist: i64,
    seed: u64,
) -> Result<(&'static str, Value, bool), Failure> {
    if n < 1 {
        return input_err("--n must be at least 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match check {
        FsCheck::Point => {
            let tol = tol.unwrap_or(1e-6);
            let mut hermitian: f64 = 0.0;
            let mut closedness: f64 = 0.0;
            let mut positive = true;
            for _ in 0..points {
                let p = random_point(n, &mut rng);
                let rep = projective::fs_checks(&p, step, tol);
                hermitian = hermitian.max(rep.hermitian_err);
                closedness = closedness.max(rep.closedness_residual);
                positive &= rep.positive;
            }
            let pass = positive && hermitian <= tol && closedness <= tol;
            Ok((
                "fubini-study",
                json!({
                    "check": "point", "n": n, "points": points, "tol": tol,
                    "positive_definite": positive,
                    "max_hermitian_err": hermitian,
                    "max_closedness_residual": closedness,
                }),
                pass,
            ))
        }
        FsCheck::Integral => {
            let tol = tol.unwrap_or(1e-6);
            let value = projective::fs_integral_p1(tol).or_else(check_err)?;
            let err = (value - 1.0).abs();
            Ok((
                "fubini-study",
                json!({ "check": "integral", "tol": tol, "value": value, "error": err }),
                err <= tol,
            ))
        }
        FsCheck::Curvature => {
            let tol = tol.unwrap_or(1e-4);
            let mut max_err: f64 = 0.0;
            for _ in 0..points {
                let p = random_point(n, &mut rng);
                let rep = projective::chern_curvature_check(&p, twist, step, tol);
                max_err = max_err.max(rep.max_err);
            }
            Ok((
                "fubini-study",
                json!({
                    "check": "curvature", "n": n, "points": points, "twist": twist,
                    "tol": tol, "max_err": max_err,
                }),
                max_err <= tol,
            ))
        }
    }
}

fn format_ext_form(a: &exterior::ExtForm) -> String {
    if a.terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (&(i_mask, j_mask), c)) in a.terms.iter().enumerate() {
        if idx > 0 {
            out.push_str(" + ");
        }
        let _ = write!(out, "({})", c);
        for k in 0..32 {
            if i_mask & (1 << k) != 0 {
                let _ = write!(out, "·dz{}", k + 1);
            }
        }
        for k in 0..32 {
            if j_mask & (1 << k) != 0 {
                let _ = write!(out, "·dz̄{}", k + 1);
            }
        }
    }
    out
}

fn run_lefschetz(
    sl2: &Option<usize>,
    hard: &Option<Vec<usize>>,
    primitive_demo: &Option<usize>,
) -> Result<(&'static str, Value, bool), Failure> {
    if let Some(n) = sl2 {
        if *n < 1 {
            return input_err("--sl2 requires N ≥ 1");
        }
        let rep = exterior::verify_sl2(*n);
        let pass = rep.all_hold();
        return Ok((
            "lefschetz",
            json!({
                "mode": "sl2", "n": rep.n, "basis_size": rep.basis_size,
                "HL_is_2L": rep.hl_is_2l,
                "HLambda_is_minus_2Lambda": rep.h_lambda_is_minus_2lambda,
                "L_Lambda_is_H": rep.l_lambda_is_h,
            }),
            pass,
        ));
    }
    if let Some(args) = hard {
        let (n, k) = (args[0], args[1]);
        let bij = exterior::hard_lefschetz_check(n, k).or_else(input_err)?;
        return Ok((
            "lefschetz",
            json!({ "mode": "hard", "n": n, "k": k, "power": n - k, "bijective": bij }),
            bij,
        ));
    }
    if let Some(n) = primitive_demo {
        if *n < 1 {
            return input_err("--primitive-demo requires N ≥ 1");
        }
        // a 2-form with both a primitive part and an ω-multiple part
        let mut sample = exterior::omega(*n);
        if *n >= 2 {
            sample = sample.add(&exterior::ExtForm::dz(*n, 1).wedge(&exterior::ExtForm::dzbar(*n, 2)));
        }
        let pieces = exterior::primitive_decompose(&sample).or_else(check_err)?;
        let levels: Vec<Value> = pieces
            .iter()
            .map(|(j, b)| json!({ "level": j, "primitive_part": format_ext_form(b) }))
            .collect();
        return Ok((
            "lefschetz",
            json!({ "mode": "primitive-demo", "n": n, "form": format_ext_form(&sample), "decomposition": levels }),
            true,
        ));
    }
    input_err("one of --sl2, --hard, --primitive-demo is required")
}

fn run_kahler(n: usize, max_degree: u8) -> Result<(&'static str, Value, bool), Failure> {
    if n < 1 {
        return input_err("--n must be at least 1");
    }
    let forms = flat_forms::monomial_forms(n, max_degree);
    let mut agg: Option<flat_forms::KahlerIdentityReport> = None;
    for f in &forms {
        let rep = flat_forms::kahler_identity_check(f);
        agg = Some(match agg {
            None => rep,
            Some(a) => flat_forms::KahlerIdentityReport {
                l_del_commutes: a.l_del_commutes && rep.l_del_commutes,
                l_delbar_commutes: a.l_delbar_commutes && rep.l_delbar_commutes,
                lambda_delbar: a.lambda_delbar && rep.lambda_delbar,
                lambda_del: a.lambda_del && rep.lambda_del,
                delbar_star_l: a.delbar_star_l && rep.delbar_star_l,
                del_star_l: a.del_star_l && rep.del_star_l,
                laplacian_proportionality: a.laplacian_proportionality
                    && rep.laplacian_proportionality,
            },
        });
    }
    let rep = agg.unwrap_or(flat_forms::KahlerIdentityReport {
        l_del_commutes: true,
        l_delbar_commutes: true,
        lambda_delbar: true,
        lambda_del: true,
        delbar_star_l: true,
        del_star_l: true,
        laplacian_proportionality: true,
    });
    let pass = rep.all_hold();
    Ok((
        "kahler-identities",
        json!({
            "n": n, "max_degree": max_degree, "forms_checked": forms.len(),
            "L_del_commutes": rep.l_del_commutes,
            "L_delbar_commutes": rep.l_delbar_commutes,
            "Lambda_delbar_is_minus_i_del_star": rep.lambda_delbar,
            "Lambda_del_is_i_delbar_star": rep.lambda_del,
            "delbar_star_L_is_i_del": rep.delbar_star_l,
            "del_star_L_is_minus_i_delbar": rep.del_star_l,
            "laplacian_proportionality": rep.laplacian_proportionality,
        }),
        pass,
    ))
}

/// Accept a Morse/Poincaré polynomial as a bare JSON array of
/// coefficients, or an object with a `coefficients`, `betti`, or
/// `indices` field (the last being a critical-point index multiset).
fn read_polynomial(path: &PathBuf) -> Result<morse::IntPolynomial, Failure> {
    let text = std::fs::read_to_string(path)
        .or_else(|e| input_err(format!("cannot read {}: {}", path.display(), e)))?;
    let value: Value =
        serde_json::from_str(&text).or_else(|e| input_err(format!("malformed JSON: {}", e)))?;
    let coeff_array = |v: &Value| -> Option<Vec<i64>> {
        v.as_array()?.iter().map(|x| x.as_i64()).collect()
    };
    if let Some(c) = coeff_array(&value) {
        return Ok(morse::IntPolynomial::new(c));
    }
    if let Some(obj) = value.as_object() {
        for key in ["coefficients", "betti"] {
            if let Some(c) = obj.get(key).and_then(|v| coeff_array(v)) {
                return Ok(morse::IntPolynomial::new(c));
            }
        }
        if let Some(idx) = obj.get("indices").and_then(|v| coeff_array(v)) {
            let profile = morse::MorseProfile::new(idx.iter().map(|&i| i as usize).collect());
            return Ok(morse::morse_polynomial(&profile));
        }
    }
    input_err(format!(
        "{}: expected an array of coefficients or an object with coefficients/betti/indices",
        path.display()
    ))
}

fn run_morse(
    check: &Option<Vec<PathBuf>>,
    sphere: &Option<Vec<String>>,
) -> Result<(&'static str, Value, bool), Failure> {
    if let Some(files) = check {
        let m = read_polynomial(&files[0])?;
        let p = read_polynomial(&files[1])?;
        let q = morse::morse_inequality_check(&m, &p);
        let weak = morse::weak_inequalities(&m, &p);
        let pass = q.is_some();
        return Ok((
            "morse",
            json!({
                "mode": "check",
                "morse_polynomial": m.0,
                "poincare_polynomial": p.0,
                "quotient": q.as_ref().map(|q| q.0.clone()),
                "strong_inequalities": pass,
                "weak_inequalities": weak.pass,
                "first_weak_violation": weak.first_violation,
            }),
            pass,
        ));
    }
    if let Some(args) = sphere {
        let m = parse_usize(&args[0], "sphere dimension")?;
        if m < 1 {
            return input_err("sphere dimension must be at least 1");
        }
        let q_coords: Vec<f64> = args[1]
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<Result<_, _>>()
            .or_else(|_| input_err(format!("cannot parse coordinates '{}'", args[1])))?;
        if q_coords.len() != m + 1 {
            return input_err(format!(
                "the {}-sphere lives in R^{}, got {} coordinates",
                m,
                m + 1,
                q_coords.len()
            ));
        }
        let center = vec![0.0; m + 1];
        let profile = morse::sphere_distance_morse(&center, 1.0, &q_coords).or_else(input_err)?;
        let morse_poly = morse::morse_polynomial(&profile);
        let mut betti = vec![0i64; m + 1];
        betti[0] += 1;
        betti[m] += 1;
        let poincare = morse::IntPolynomial::new(betti);
        let quotient = morse::morse_inequality_check(&morse_poly, &poincare);
        let pass = quotient.as_ref().is_some_and(|q| q.is_zero());
        return Ok((
            "morse",
            json!({
                "mode": "sphere",
                "m": m,
                "indices": profile.indices,
                "morse_polynomial": morse_poly.0,
                "sphere_betti": poincare.0,
                "quotient": quotient.as_ref().map(|q| q.0.clone()),
                "perfect": pass,
            }),
            pass,
        ));
    }
    input_err("one of --check, --sphere is required")
}

/// Render the envelope as key/value lines for the table format.
fn render_table(envelope: &Value) -> String {
    let mut out = String::new();
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, val) in map {
                    let key = if prefix.is_empty() {
                        k.clone()
                    } else {
                        format!("{}.{}", prefix, k)
                    };
                    walk(&key, val, out);
                }
            }
            Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                for (i, item) in items.iter().enumerate() {
                    walk(&format!("{}[{}]", prefix, i), item, out);
                }
            }
            Value::Array(items) => {
                let rendered: Vec<String> = items.iter().map(plain).collect();
                let _ = writeln!(out, "{:<28} {}", prefix, rendered.join(" "));
            }
            other => {
                let _ = writeln!(out, "{:<28} {}", prefix, plain(other));
            }
        }
    }
    fn plain(v: &Value) -> String {
        match v {
            Value::String(s) => s.clone(),
            Value::Null => "-".into(),
            other => other.to_string(),
        }
    }
    walk("", envelope, &mut out);
    out
}

/// Parse argv, run, and print. Returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap handles --help/--version as "errors" with exit 0
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((envelope, code)) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&envelope).unwrap()),
                Format::Table => print!("{}", render_table(&envelope)),
            }
            code
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exec(args: &[&str]) -> Result<(Value, i32), Failure> {
        let cli = Cli::try_parse_from(args).expect("argv should parse");
        execute(&cli)
    }

    #[test]
    fn hodge_pn_envelope() {
        let (env, code) = exec(&["kahlerkit", "hodge-diamond", "--pn", "2"]).unwrap();
        assert_eq!(code, 0);
        assert_eq!(env["status"], "ok");
        assert_eq!(env["result"]["betti"], json!([1, 0, 1, 0, 1]));
        assert_eq!(env["result"]["grid"][1][1], json!(1));
        assert_eq!(env["result"]["grid"][0][1], json!(0));
    }

    #[test]
    fn euler_of_quartic_surface() {
        let (env, code) = exec(&["kahlerkit", "chern", "--euler", "3", "4"]).unwrap();
        assert_eq!(code, 0);
        assert_eq!(env["result"]["euler_characteristic"], json!("24"));
    }

    #[test]
    fn h0_example() {
        let (env, _) = exec(&["kahlerkit", "h0", "1", "2"]).unwrap();
        assert_eq!(env["result"]["dim"], json!("3"));
    }

    #[test]
    fn picard_twist() {
        let (env, _) = exec(&["kahlerkit", "picard", "2", "--divisor", "3:2,1:-1"]).unwrap();
        assert_eq!(env["result"]["bundle_twist"], json!(5));
    }

    #[test]
    fn sphere_morse_subcommand() {
        let (env, code) = exec(&["kahlerkit", "morse", "--sphere", "2", "0,0,3"]).unwrap();
        assert_eq!(code, 0);
        assert_eq!(env["result"]["indices"], json!([0, 2]));
        assert_eq!(env["result"]["perfect"], json!(true));
    }

    #[test]
    fn json_output_is_stable() {
        let (a, _) = exec(&["kahlerkit", "lefschetz", "--sl2", "2"]).unwrap();
        let (b, _) = exec(&["kahlerkit", "lefschetz", "--sl2", "2"]).unwrap();
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
    }

    #[test]
    fn betti_round_trip_into_morse_check() {
        // an emitted Betti vector is a valid Poincaré input for morse --check
        let (env, _) = exec(&["kahlerkit", "hodge-diamond", "--pn", "3"]).unwrap();
        let dir = std::env::temp_dir().join("kahlerkit-cli-roundtrip");
        std::fs::create_dir_all(&dir).unwrap();
        let p_path = dir.join("p.json");
        let m_path = dir.join("m.json");
        std::fs::write(&p_path, env["result"]["betti"].to_string()).unwrap();
        std::fs::write(&m_path, env["result"]["betti"].to_string()).unwrap();
        let (env2, code) = exec(&[
            "kahlerkit",
            "morse",
            "--check",
            m_path.to_str().unwrap(),
            p_path.to_str().unwrap(),
        ])
        .unwrap();
        assert_eq!(code, 0, "{env2}");
        assert_eq!(env2["result"]["quotient"], json!([]));
    }

    #[test]
    fn validation_failure_exit_code() {
        let (env, code) = exec(&["kahlerkit", "fubini-study", "--check", "curvature", "--n", "1", "--points", "5", "--tol", "1e-18"]).unwrap();
        assert_eq!(code, 1);
        assert_eq!(env["status"], "fail");
    }

    #[test]
    fn input_error_exit_code() {
        let err = exec(&["kahlerkit", "morse", "--sphere", "2", "0,0"]).unwrap_err();
        assert_eq!(err.code, 2);
    }

    #[test]
    fn kahler_identities_small() {
        let (env, code) = exec(&["kahlerkit", "kahler-identities", "--n", "1", "--max-degree", "1"]).unwrap();
        assert_eq!(code, 0, "{env}");
        assert_eq!(env["status"], "ok");
    }
}
