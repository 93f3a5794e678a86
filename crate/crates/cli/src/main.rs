//! Command-line front end: validate fixed-point data, compute assignment
//! bases and localization sums, certify cohomological assignments, and pull
//! assignments back along combinatorial equivariant maps.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use polyassign_core::io;
use polyassign_core::localize::{
    CanonicalFamily, DecisionReport, EtaSelection, Hypothesis, LocalizationReport, Verdict,
};
use polyassign_core::space::{betti_data, morse_data, Region};
use polyassign_core::{
    assignment_basis, decide_cohomological, defect_dimension, localization_sum, pullback,
    tolman_canonical_classes, torsion_exponent, Assignment, EquivariantMap, Error, LinFraction,
    TSpace,
};

/// Exit code for bad input or failed validation.
const EXIT_ERROR: u8 = 2;
/// Exit code for input trouble in `check`, where 2 means Undecidable.
const EXIT_CHECK_ERROR: u8 = 4;

#[derive(Parser)]
#[command(
    name = "polyassign",
    version,
    about = "Polynomial assignments of torus actions: bases, localization sums, and cohomologicality certificates"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Load a space document, check every invariant, and print its
    /// combinatorial profile (GKM verdict, Betti numbers, Morse table).
    Validate {
        space: PathBuf,
        /// Polarization override, e.g. --xi 1,2
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Print the echelon basis of the assignments of one degree.
    Basis {
        space: PathBuf,
        /// Cohomological degree 2k (even).
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an assignment is cohomological.
    /// Exits 0 = certified, 1 = refuted, 2 = undecidable.
    Check {
        space: PathBuf,
        assignment: PathBuf,
        #[arg(long)]
        xi: Option<String>,
        /// Comma list from {one, chern, thom, delta, self}; default all.
        #[arg(long, value_name = "LIST")]
        eta_library: Option<String>,
        /// Cap for the reported torsion exponent on rank-one spaces.
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long)]
        json: bool,
    },
    /// Canonical classes of a minimal component, by the closed formula.
    Canonical {
        space: PathBuf,
        /// Component name; defaults to the full component on rank-one spaces.
        #[arg(long)]
        component: Option<String>,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Localization sums of an assignment over the whole space and every
    /// declared stratum closure.
    Localize {
        space: PathBuf,
        assignment: PathBuf,
        /// Restrict to one region by name (component, stratum, or M).
        #[arg(long)]
        component: Option<String>,
        /// Also pair against the eta library (comma list as in check).
        #[arg(long, value_name = "LIST")]
        eta_library: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Defect-module dimensions per degree.
    Defect {
        space: PathBuf,
        /// Maximum cohomological degree 2k (even).
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        xi: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Pull an assignment on the target of a map document back to its source.
    Pullback {
        map: PathBuf,
        assignment: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.cmd {
        Cmd::Validate { space, xi, json } => cmd_validate(&space, xi.as_deref(), json),
        Cmd::Basis { space, degree, json } => cmd_basis(&space, degree, json),
        Cmd::Check { space, assignment, xi, eta_library, cap, json } => {
            cmd_check(&space, &assignment, xi.as_deref(), eta_library.as_deref(), cap, json)
        }
        Cmd::Canonical { space, component, xi, json } => {
            cmd_canonical(&space, component.as_deref(), xi.as_deref(), json)
        }
        Cmd::Localize { space, assignment, component, eta_library, json } => {
            cmd_localize(&space, &assignment, component.as_deref(), eta_library.as_deref(), json)
        }
        Cmd::Defect { space, degree, xi, json } => cmd_defect(&space, degree, xi.as_deref(), json),
        Cmd::Pullback { map, assignment, json } => cmd_pullback(&map, &assignment, json),
    };
    ExitCode::from(code)
}

fn fail(err: &Error, code: u8) -> u8 {
    eprintln!("error: {err}");
    code
}

fn parse_xi(arg: Option<&str>, rank: usize) -> Result<Option<Vec<i64>>, String> {
    let Some(text) = arg else { return Ok(None) };
    let xi: Result<Vec<i64>, _> = text.split(',').map(|t| t.trim().parse::<i64>()).collect();
    match xi {
        Ok(v) if v.len() == rank => Ok(Some(v)),
        Ok(v) => Err(format!("--xi has {} entries but the rank is {rank}", v.len())),
        Err(e) => Err(format!("--xi must be a comma list of integers: {e}")),
    }
}

fn parse_eta_selection(arg: Option<&str>) -> Result<EtaSelection, String> {
    let Some(text) = arg else { return Ok(EtaSelection::default()) };
    let mut sel =
        EtaSelection { one: false, chern: false, thom: false, delta: false, self_class: false };
    for item in text.split(',') {
        match item.trim() {
            "one" => sel.one = true,
            "chern" => sel.chern = true,
            "thom" => sel.thom = true,
            "delta" => sel.delta = true,
            "self" => sel.self_class = true,
            other => return Err(format!("unknown eta library entry {other:?}")),
        }
    }
    Ok(sel)
}

fn load_space_or(path: &Path, code: u8) -> Result<(TSpace, Vec<String>), u8> {
    io::load_space(path).map_err(|e| fail(&e, code))
}

fn effective_xi(space: &TSpace, xi_flag: Option<&str>, code: u8) -> Result<Vec<i64>, u8> {
    match parse_xi(xi_flag, space.rank) {
        Ok(Some(xi)) => {
            // the override must be generic; reuse the Morse entry point
            if let Err(e) = morse_data(space, &xi) {
                return Err(fail(&e, code));
            }
            Ok(xi)
        }
        Ok(None) => Ok(space.generic_xi()),
        Err(msg) => {
            eprintln!("error: {msg}");
            Err(code)
        }
    }
}

fn fraction_json(f: &LinFraction) -> Value {
    json!({
        "text": f.to_string(),
        "numerator": f.numerator().to_string(),
        "denominator": f.certificate().iter().map(|(form, power)| json!({
            "form": form.coeffs(),
            "power": power,
        })).collect::<Vec<_>>(),
        "polynomial": f.is_polynomial(),
    })
}

fn report_json(r: &LocalizationReport) -> Value {
    json!({
        "region": r.region,
        "eta": r.eta,
        "sum": fraction_json(&r.sum),
    })
}

fn print_warnings(warnings: &[String]) {
    for w in warnings {
        eprintln!("warning: {w}");
    }
}

fn cmd_validate(path: &Path, xi_flag: Option<&str>, json_out: bool) -> u8 {
    let (space, warnings) = match load_space_or(path, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let xi = match effective_xi(&space, xi_flag, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let gkm = match space.is_gkm() {
        Ok(g) => g,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let morse = match morse_data(&space, &xi) {
        Ok(m) => m,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let betti = betti_data(&space, &xi).expect("morse data already computed");
    let dims: Vec<usize> =
        (0..=space.half_dim).map(|k| betti.dim_ht(space.rank, k)).collect();
    if json_out {
        let doc = json!({
            "space": space.name,
            "rank": space.rank,
            "half_dim": space.half_dim,
            "fixed_points": space.fixed_points.iter().map(|p| &p.name).collect::<Vec<_>>(),
            "warnings": warnings,
            "gkm": gkm,
            "xi": xi,
            "betti": betti.betti,
            "dim_ht": dims,
            "morse": space.fixed_points.iter().enumerate().map(|(i, p)| json!({
                "point": p.name,
                "lambda": morse.points[i].lambda,
                "lambda_minus": morse.points[i].lambda_minus.to_string(),
                "euler": morse.points[i].euler.to_string(),
            })).collect::<Vec<_>>(),
            "components": space.one_skeleton.iter().map(|c| json!({
                "name": c.name,
                "direction": c.direction.coeffs(),
                "half_dim": c.half_dim,
                "fixed_points": c.points.iter().map(|&i| space.point_name(i)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "higher_strata": space.higher_strata.iter().map(|s| json!({
                "name": s.name,
                "codim": s.stabilizer.codim(),
                "annihilator": s.stabilizer.annihilator_rows().iter().map(|row| {
                    row.iter()
                        .map(|v| i64::try_from(v).expect("annihilator entry fits i64"))
                        .collect::<Vec<_>>()
                }).collect::<Vec<_>>(),
                "fixed_points": s.points.iter().map(|&i| space.point_name(i)).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        println!(
            "space {}: rank {}, half_dim {}, {} fixed points, {} one-skeleton component(s)",
            space.name,
            space.rank,
            space.half_dim,
            space.fixed_points.len(),
            space.one_skeleton.len()
        );
        println!("GKM: {}", if gkm { "yes" } else { "no" });
        println!("xi: {:?}", xi);
        let betti_row: Vec<String> = betti.betti.iter().map(|b| b.to_string()).collect();
        println!("Betti numbers b_2k (k=0..{}): {}", space.half_dim, betti_row.join(" "));
        let dim_row: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
        println!("dim H_T^2k (k=0..{}): {}", space.half_dim, dim_row.join(" "));
        println!("Morse table:");
        println!("  {:<10} {:>6}  {:<16} e_M", "point", "lambda", "Lambda^-");
        for (i, p) in space.fixed_points.iter().enumerate() {
            println!(
                "  {:<10} {:>6}  {:<16} {}",
                p.name,
                morse.points[i].lambda,
                morse.points[i].lambda_minus.to_string(),
                morse.points[i].euler
            );
        }
        for c in &space.one_skeleton {
            let names: Vec<&str> = c.points.iter().map(|&i| space.point_name(i)).collect();
            println!(
                "component {}: direction {}, half_dim {}, points {}",
                c.name,
                c.direction,
                c.half_dim,
                names.join(" ")
            );
        }
        for s in &space.higher_strata {
            let names: Vec<&str> = s.points.iter().map(|&i| space.point_name(i)).collect();
            println!(
                "higher stratum {}: codim {}, points {}",
                s.name,
                s.stabilizer.codim(),
                names.join(" ")
            );
        }
    }
    0
}

fn cmd_basis(path: &Path, degree: usize, json_out: bool) -> u8 {
    let (space, warnings) = match load_space_or(path, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    if !degree.is_multiple_of(2) {
        eprintln!("error: --degree is the cohomological degree 2k and must be even");
        return EXIT_ERROR;
    }
    let basis = assignment_basis(&space, degree / 2);
    if json_out {
        let docs: Vec<Value> = basis
            .iter()
            .map(|a| serde_json::to_value(io::assignment_to_doc(&space, a)).unwrap())
            .collect();
        let doc = json!({
            "space": space.name,
            "degree": degree,
            "dim": basis.len(),
            "basis": docs,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        println!("space {}: dim A^{} = {}", space.name, degree, basis.len());
        for (i, a) in basis.iter().enumerate() {
            let parts: Vec<String> = space
                .fixed_points
                .iter()
                .enumerate()
                .map(|(pi, p)| format!("{}: {}", p.name, a.value(pi)))
                .collect();
            println!("  [{}] {}", i + 1, parts.join(" | "));
        }
    }
    0
}

fn verdict_parts(report: &DecisionReport) -> (String, Value) {
    match &report.verdict {
        Verdict::Cohomological => ("Cohomological".into(), Value::Null),
        Verdict::NotCohomological(w) => (
            "NotCohomological".into(),
            json!({
                "region": w.region,
                "condition": w.condition,
                "certificate": fraction_json(&w.certificate),
            }),
        ),
        Verdict::Undecidable(names) => ("Undecidable".into(), json!(names)),
    }
}

fn cmd_check(
    space_path: &Path,
    assignment_path: &Path,
    xi_flag: Option<&str>,
    eta_flag: Option<&str>,
    cap: Option<u32>,
    json_out: bool,
) -> u8 {
    let (space, warnings) = match load_space_or(space_path, EXIT_CHECK_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let f = match io::load_assignment(assignment_path, &space) {
        Ok(a) => a,
        Err(e) => return fail(&e, EXIT_CHECK_ERROR),
    };
    let xi = match effective_xi(&space, xi_flag, EXIT_CHECK_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let sel = match parse_eta_selection(eta_flag) {
        Ok(s) => s,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_CHECK_ERROR;
        }
    };
    let report = match decide_cohomological(&space, &xi, &f, &sel) {
        Ok(r) => r,
        Err(e) => return fail(&e, EXIT_CHECK_ERROR),
    };
    // Torsion diagnostics on rank-one spaces with canonical classes.
    let torsion = if space.rank == 1 {
        CanonicalFamily::tolman(&space, &xi).ok().and_then(|fam| {
            torsion_exponent(&space, &f, &fam, cap.unwrap_or(space.half_dim as u32)).ok()
        })
    } else {
        None
    };
    let (verdict_name, witness_json) = verdict_parts(&report);
    if json_out {
        let doc = json!({
            "space": space.name,
            "assignment_degree": f.degree2(),
            "verdict": verdict_name,
            "witness": witness_json,
            "components": report.components.iter().map(|c| json!({
                "name": c.name,
                "half_dim": c.half_dim,
                "hypothesis": match c.hypothesis {
                    Hypothesis::SmallDim => "dim<=4",
                    Hypothesis::Minimal => "minimal",
                    Hypothesis::Unmet => "none",
                },
                "passed": c.passed,
                "certificate": c.certificate.as_ref().map(fraction_json),
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "necessity": report.necessity.iter().map(report_json).collect::<Vec<_>>(),
            "torsion_exponent": torsion,
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        println!("space {}, assignment of degree {}", space.name, f.degree2());
        for c in &report.components {
            let hyp = match c.hypothesis {
                Hypothesis::SmallDim => "dim<=4",
                Hypothesis::Minimal => "minimal",
                Hypothesis::Unmet => "no criterion",
            };
            let status = match c.passed {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "skipped",
            };
            println!("component {} ({}): {} [{}]", c.name, hyp, c.detail, status);
        }
        for r in &report.necessity {
            if !r.polynomial() {
                println!("necessity FAIL: region {}, eta {}: sum = {}", r.region, r.eta, r.sum);
            }
        }
        if let Some(n) = torsion {
            println!("torsion exponent: {n}");
        }
        match &report.verdict {
            Verdict::Cohomological => println!("verdict: Cohomological"),
            Verdict::NotCohomological(w) => println!(
                "verdict: NotCohomological (region {}, {}; certificate {})",
                w.region, w.condition, w.certificate
            ),
            Verdict::Undecidable(names) => {
                println!("verdict: Undecidable (no criterion applies to: {})", names.join(", "))
            }
        }
    }
    match report.verdict {
        Verdict::Cohomological => 0,
        Verdict::NotCohomological(_) => 1,
        Verdict::Undecidable(_) => 2,
    }
}

fn cmd_canonical(
    path: &Path,
    component: Option<&str>,
    xi_flag: Option<&str>,
    json_out: bool,
) -> u8 {
    let (space, warnings) = match load_space_or(path, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let xi = match effective_xi(&space, xi_flag, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let ci = match component {
        Some(name) => match space.one_skeleton.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                eprintln!("error: unknown component {name}");
                return EXIT_ERROR;
            }
        },
        None => {
            if space.rank == 1 && space.one_skeleton.len() == 1 {
                0
            } else {
                eprintln!(
                    "error: --component is required unless the space is rank-one with a single component"
                );
                return EXIT_ERROR;
            }
        }
    };
    let chern1 = match polyassign_core::component_chern1(&space, &xi, ci) {
        Ok(c) => c,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let d = space.one_skeleton[ci].half_dim;
    let mut taus = Vec::new();
    for k in 0..=d {
        match tolman_canonical_classes(&space, &xi, ci, k) {
            Ok(values) => taus.push(values),
            Err(e) => return fail(&e, EXIT_ERROR),
        }
    }
    if json_out {
        let doc = json!({
            "space": space.name,
            "component": chern1.component,
            "generator": chern1.generator.coeffs(),
            "c1_multiples": chern1.multiples.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "ordering_violations": chern1.ordering_violations,
            "classes": taus.iter().enumerate().map(|(k, values)| json!({
                "degree": 2 * k,
                "values": values.iter().map(|(p, v)| json!({
                    "point": space.point_name(*p),
                    "value": v.to_string(),
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        println!("component {}: generator {}", chern1.component, chern1.generator);
        let c1_row: Vec<String> = space.one_skeleton[ci]
            .points
            .iter()
            .zip(&chern1.multiples)
            .map(|(&p, m)| format!("{}: {}", space.point_name(p), m))
            .collect();
        println!("c1 multiples: {}", c1_row.join(" | "));
        if chern1.ordering_violations.is_empty() {
            println!("index ordering: ok");
        } else {
            for v in &chern1.ordering_violations {
                println!("ordering violation: {v}");
            }
        }
        for (k, values) in taus.iter().enumerate() {
            let row: Vec<String> = values
                .iter()
                .map(|(p, v)| format!("{}: {}", space.point_name(*p), v))
                .collect();
            println!("tau_{k}: {}", row.join(" | "));
        }
    }
    0
}

fn cmd_localize(
    space_path: &Path,
    assignment_path: &Path,
    component: Option<&str>,
    eta_flag: Option<&str>,
    json_out: bool,
) -> u8 {
    let (space, warnings) = match load_space_or(space_path, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let f = match io::load_assignment(assignment_path, &space) {
        Ok(a) => a,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let regions: Vec<Region> = match component {
        Some(name) => match space.region_by_name(name) {
            Some(r) => vec![r],
            None => {
                eprintln!("error: unknown region {name}");
                return EXIT_ERROR;
            }
        },
        None => space.regions(),
    };
    let mut etas: Vec<(String, Option<Assignment>)> = vec![("1".into(), None)];
    if let Some(flag) = eta_flag {
        let sel = match parse_eta_selection(Some(flag)) {
            Ok(s) => s,
            Err(msg) => {
                eprintln!("error: {msg}");
                return EXIT_ERROR;
            }
        };
        match polyassign_core::eta_library(&space, Some(&f), &sel) {
            Ok(lib) => {
                for (label, eta) in lib {
                    if label != "1" {
                        etas.push((label, Some(eta)));
                    }
                }
            }
            Err(e) => return fail(&e, EXIT_ERROR),
        }
    }
    let mut reports = Vec::new();
    for &region in &regions {
        for (label, eta) in &etas {
            match localization_sum(&space, region, &f, eta.as_ref()) {
                Ok(sum) => reports.push(LocalizationReport {
                    region: space.region_name(region),
                    eta: label.clone(),
                    sum,
                }),
                Err(e) => return fail(&e, EXIT_ERROR),
            }
        }
    }
    if json_out {
        let doc = json!({
            "space": space.name,
            "assignment_degree": f.degree2(),
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        for r in &reports {
            let status = if r.polynomial() { "polynomial" } else { "NOT polynomial" };
            println!("region {}, eta {}: sum = {} [{}]", r.region, r.eta, r.sum, status);
        }
    }
    0
}

fn cmd_defect(path: &Path, degree: usize, xi_flag: Option<&str>, json_out: bool) -> u8 {
    let (space, warnings) = match load_space_or(path, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    if !degree.is_multiple_of(2) {
        eprintln!("error: --degree is the cohomological degree 2k and must be even");
        return EXIT_ERROR;
    }
    let xi = match effective_xi(&space, xi_flag, EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let betti = match betti_data(&space, &xi) {
        Ok(b) => b,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let mut rows = Vec::new();
    for k in 0..=(degree / 2) {
        let dim_a = assignment_basis(&space, k).len();
        let dim_h = betti.dim_ht(space.rank, k);
        match defect_dimension(&space, &xi, k) {
            Ok(defect) => rows.push((2 * k, dim_a, dim_h, defect)),
            Err(e) => return fail(&e, EXIT_ERROR),
        }
    }
    if json_out {
        let doc = json!({
            "space": space.name,
            "rows": rows.iter().map(|(deg, a, h, d)| json!({
                "degree": deg, "dim_assignments": a, "dim_cohomology": h, "defect": d,
            })).collect::<Vec<_>>(),
        });
        println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    } else {
        print_warnings(&warnings);
        println!("{:<8} {:>8} {:>8} {:>8}", "degree", "dim A", "dim H", "defect");
        for (deg, a, h, d) in rows {
            println!("{:<8} {:>8} {:>8} {:>8}", deg, a, h, d);
        }
    }
    0
}

fn cmd_pullback(map_path: &Path, assignment_path: &Path, json_out: bool) -> u8 {
    let doc = match io::load_map_doc(map_path) {
        Ok(d) => d,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let base = map_path.parent().unwrap_or_else(|| Path::new("."));
    let (source, source_warnings) = match load_space_or(&base.join(&doc.source), EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let (target, target_warnings) = match load_space_or(&base.join(&doc.target), EXIT_ERROR) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let phi_pairs: Vec<(String, String)> =
        doc.phi.iter().map(|(a, b)| (a.clone(), b.clone())).collect();
    let strata_pairs: Vec<(String, String)> = doc
        .strata
        .as_ref()
        .map(|m| m.iter().map(|(a, b)| (a.clone(), b.clone())).collect())
        .unwrap_or_default();
    let map = match EquivariantMap::new(&source, &target, &phi_pairs, &strata_pairs) {
        Ok(m) => m,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let a = match io::load_assignment(assignment_path, &target) {
        Ok(a) => a,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let pulled = match pullback(&source, &target, &map, &a) {
        Ok(p) => p,
        Err(e) => return fail(&e, EXIT_ERROR),
    };
    let out = io::assignment_to_doc(&source, &pulled);
    if json_out {
        println!("{}", serde_json::to_string_pretty(&out).unwrap());
    } else {
        print_warnings(&source_warnings);
        print_warnings(&target_warnings);
        println!(
            "pullback along {} -> {} (degree {})",
            source.name,
            target.name,
            pulled.degree2()
        );
        for (name, text) in &out.values {
            println!("  {name}: {text}");
        }
    }
    0
}
