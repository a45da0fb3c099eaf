//! Single-invariant subcommands.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Instant;

use blowup_core::blowup::{
    analytic_spread, fiber_cone, is_d_sequence, is_saturated_power, minimal_generator_count, mu_power,
    reduction_number,
};
use blowup_core::hilbert::{binomial, hilbert_series};
use blowup_core::parse::print_ideal_file;
use blowup_core::{
    buchberger_with, curve_ideal, parametrization_check, parse_ideal_file, parse_polynomial, print_polynomial,
    Claim, CurveSpec, Field, GbOptions, Ideal, MonomialOrder, Provenance, ReductionOutcome, Ring,
    VerificationReport,
};

use crate::args::{Cli, Command};
use crate::{suites, CliError, Output};

/// Wall-clock timings of named steps.
#[derive(Default)]
pub struct Steps {
    pub timings: BTreeMap<String, u64>,
}

impl Steps {
    pub fn time<T>(&mut self, name: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        *self.timings.entry(name.to_string()).or_default() += start.elapsed().as_millis() as u64;
        out
    }
}

pub fn report_for(command: &str, ring: &Ring) -> VerificationReport {
    VerificationReport::new(command, ring.vars().join(","), ring.field().to_string(), ring.order().name())
}

/// Read an ideal file, applying `--field` and `--order` overrides.
pub fn load_ideal(path: &Path, cli: &Cli) -> Result<Ideal, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let file = parse_ideal_file(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    if cli.field.is_none() && cli.order.is_none() {
        return Ok(Ideal::new(&file.ring, file.generators)?);
    }
    let field = cli.field.unwrap_or(file.ring.field());
    let order = cli.order.map(MonomialOrder::from).unwrap_or_else(|| file.ring.order().clone());
    let ring = Ring::new(file.ring.vars().to_vec(), field, order)?;
    // Printing is canonical and parses back, so this moves coefficients into the new field.
    let gens = file
        .generators
        .iter()
        .map(|g| parse_polynomial(&print_polynomial(g), &ring))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(Ideal::new(&ring, gens)?)
}

fn lines(items: impl IntoIterator<Item = String>) -> String {
    items.into_iter().collect::<Vec<_>>().join("\n")
}

pub fn dispatch(cli: &Cli) -> Result<Output, CliError> {
    let report = |r: VerificationReport| Ok(Output { report: r, artifact: None });
    match &cli.command {
        Command::Curve { degrees } => curve(cli, degrees),
        Command::Gb(input) => report(gb(cli, &load_ideal(&input.ideal, cli)?)?),
        Command::Hilbert { input, tmax } => report(hilbert(&load_ideal(&input.ideal, cli)?, *tmax)?),
        Command::MuPowers { input, tmax, cross_check } => {
            report(mu_powers(&load_ideal(&input.ideal, cli)?, *tmax, *cross_check)?)
        }
        Command::Reduction { input, reduction, cap } => {
            let i = load_ideal(&input.ideal, cli)?;
            let j = load_ideal(reduction, cli)?;
            report(reduction_cmd(&j, &i, *cap)?)
        }
        Command::DSequence(input) => report(d_sequence(&load_ideal(&input.ideal, cli)?)?),
        Command::Fiber(input) => report(fiber(&load_ideal(&input.ideal, cli)?)?),
        Command::Spread(input) => report(spread(&load_ideal(&input.ideal, cli)?)?),
        Command::SaturateCheck { input, tmax } => report(saturate_check(&load_ideal(&input.ideal, cli)?, *tmax)?),
        Command::Verify { example, a, tmax, degrees, cap } => {
            let opts = suites::SuiteOptions { a: *a, tmax: *tmax, field: cli.field, degrees: degrees.clone(), cap: *cap };
            report(suites::run(*example, &opts)?)
        }
    }
}

fn curve(cli: &Cli, spec: &CurveSpec) -> Result<Output, CliError> {
    let field = cli.field.unwrap_or(Field::Rationals);
    let mut steps = Steps::default();
    let ideal = steps.time("curve_ideal", || curve_ideal(spec, field))?;
    let ring = ideal.ring();
    let mut r = report_for("curve", ring);
    r.param("degrees", spec);
    let text = print_ideal_file(ring, ideal.gens());
    r.result("ideal_file", text.trim_end());
    r.result("generators", ideal.gens().len());
    let on_curve = parametrization_check(&ideal, spec)?;
    r.push(Claim::compare("curve.parametrization", "generators vanish on the parametrization", on_curve, true, Provenance::Trivial));
    let series = steps.time("hilbert_series", || hilbert_series(&ideal))?;
    r.push(Claim::compare("curve.dimension", "dimension of R/I is 2", series.dimension(), 2, Provenance::Trivial));
    r.push(Claim::compare(
        "curve.degree",
        "degree of the curve equals the largest exponent",
        series.degree(),
        spec.degree(),
        Provenance::Derived,
    ));
    r.timings_ms = steps.timings;
    Ok(Output { report: r, artifact: Some(text) })
}

fn gb(cli: &Cli, ideal: &Ideal) -> Result<VerificationReport, CliError> {
    let ring = ideal.ring();
    let mut steps = Steps::default();
    let opts = GbOptions { degree_bound: None, trace: cli.trace_gb };
    let (basis, stats) = steps.time("buchberger", || buchberger_with(ring, ideal.gens(), &opts))?;
    let mut r = report_for("gb", ring);
    r.result("basis", lines(basis.polys().iter().map(print_polynomial)));
    r.result("size", basis.len());
    r.result("initial_ideal", basis.initial_ideal().display(ring.vars()));
    r.result("pairs", format!("{} created, {} reduced, {} to zero", stats.pairs_created, stats.pairs_reduced, stats.zero_reductions));
    if cli.trace_gb {
        r.result("trace", lines(stats.trace));
    }
    let certified = steps.time("certificate", || basis.verify_s_pairs());
    r.push(Claim::compare("gb.s-pairs", "every S-polynomial of the basis reduces to zero", certified, true, Provenance::Trivial));
    r.push(Claim::compare("gb.reduced", "basis is reduced and monic", basis.is_reduced(), true, Provenance::Trivial));
    r.timings_ms = steps.timings;
    Ok(r)
}

fn hilbert(ideal: &Ideal, tmax: u32) -> Result<VerificationReport, CliError> {
    let mut steps = Steps::default();
    let hs = steps.time("hilbert_series", || hilbert_series(ideal))?;
    let mut r = report_for("hilbert", ideal.ring());
    r.param("tmax", tmax);
    r.result("series", &hs);
    r.result("dimension", hs.dimension());
    r.result("degree", hs.degree());
    r.result("length", hs.length());
    r.result("hilbert_function", (0..=tmax).map(|d| hs.coefficient(d).to_string()).collect::<Vec<_>>().join(", "));
    r.timings_ms = steps.timings;
    Ok(r)
}

fn mu_powers(ideal: &Ideal, tmax: u32, cross_check: bool) -> Result<VerificationReport, CliError> {
    if tmax == 0 {
        return Err(CliError::Usage("--tmax must be at least 1".into()));
    }
    let mut steps = Steps::default();
    let mut r = report_for("mu-powers", ideal.ring());
    r.param("tmax", tmax);
    r.note("generator counts are graded statements; by graded Nakayama they agree with the local ones at the maximal ideal");
    let mu = steps.time("mu", || minimal_generator_count(ideal))?;
    let fiber = if cross_check { Some(steps.time("fiber_cone", || fiber_cone(ideal.gens()))?) } else { None };
    for t in 1..=tmax {
        let m = steps.time(&format!("mu_t{t}"), || mu_power(ideal, t))?;
        r.result(&format!("mu_t{t}"), m);
        let bound = binomial(mu as i64 + t as i64 - 1, t as i64);
        r.push(Claim::judged(
            format!("mu-powers.bound.t{t}"),
            "mu(I^t) is at most the number of degree-t monomials in mu(I) symbols",
            m,
            format!("<= {bound}"),
            Provenance::Trivial,
            (m as i128) <= bound,
        ));
        if let Some(f) = &fiber {
            r.push(Claim::compare(
                format!("mu-powers.fiber.t{t}"),
                "mu(I^t) equals the degree-t coefficient of the fiber-cone Hilbert series",
                m,
                f.mu(t),
                Provenance::Derived,
            ));
        }
    }
    r.timings_ms = steps.timings;
    Ok(r)
}

fn reduction_cmd(j: &Ideal, i: &Ideal, cap: u32) -> Result<VerificationReport, CliError> {
    if !j.ring().compatible(i.ring()) {
        return Err(CliError::Usage("the reduction and the ideal must use the same ring header".into()));
    }
    let mut steps = Steps::default();
    let mut r = report_for("reduction", i.ring());
    r.param("cap", cap);
    r.param("reduction", j);
    r.note("reduction numbers are computed as graded global equalities J I^n = I^(n+1)");
    match steps.time("reduction_number", || reduction_number(j, i, cap))? {
        ReductionOutcome::Found(cert) => {
            let n = cert.reduction_number;
            r.result("outcome", "found");
            r.result("reduction_number", n);
            r.result("checks", format!("{:?}", cert.checks));
            if let Some(w) = cert.strict_failure_witness {
                r.result("strict_failure_witness", format!("generator {} of I^{n} is not in J I^{}", w + 1, n - 1));
            }
            // Stability: once J I^n = I^(n+1), the next power agrees too.
            let next = steps.time("stability", || -> blowup_core::Result<bool> {
                let p = i.power(n + 1);
                j.product(&p)?.equals(&i.product(&p)?)
            })?;
            r.push(Claim::compare(
                "reduction.stability",
                "J I^(n+1) = I^(n+2) once J I^n = I^(n+1)",
                next,
                true,
                Provenance::Trivial,
            ));
        }
        ReductionOutcome::Inconclusive { cap } => {
            r.result("outcome", format!("inconclusive: no n <= {cap} works; larger n not examined"));
        }
    }
    r.timings_ms = steps.timings;
    Ok(r)
}

fn d_sequence(ideal: &Ideal) -> Result<VerificationReport, CliError> {
    let mut steps = Steps::default();
    let check = steps.time("d_sequence", || is_d_sequence(ideal.gens()))?;
    let mut r = report_for("d-sequence", ideal.ring());
    r.result("holds", check.holds);
    r.result("checked", check.checked);
    if let Some((i, k)) = check.witness {
        r.result("witness", format!("(f1..f{}) : f{i} f{k} differs from (f1..f{}) : f{k}", i - 1, i - 1));
    }
    r.timings_ms = steps.timings;
    Ok(r)
}

pub fn fiber_results(r: &mut VerificationReport, f: &blowup_core::FiberPresentation) {
    r.result("relations", &f.relations);
    r.result("series", &f.series);
    r.result("analytic_spread", f.analytic_spread);
    r.result("mapping", lines(f.mapping.iter().map(|(u, g)| format!("{u} -> {g}"))));
}

fn fiber(ideal: &Ideal) -> Result<VerificationReport, CliError> {
    let mut steps = Steps::default();
    let f = steps.time("fiber_cone", || fiber_cone(ideal.gens()))?;
    let mut r = report_for("fiber", ideal.ring());
    fiber_results(&mut r, &f);
    let s = ideal.gens().len() as u32;
    r.push(Claim::judged(
        "fiber.spread-bound",
        "analytic spread is at most the number of generators",
        f.analytic_spread,
        format!("<= {s}"),
        Provenance::Trivial,
        f.analytic_spread <= s,
    ));
    r.timings_ms = steps.timings;
    Ok(r)
}

fn spread(ideal: &Ideal) -> Result<VerificationReport, CliError> {
    let mut steps = Steps::default();
    let a = steps.time("analytic_spread", || analytic_spread(ideal))?;
    let height = steps.time("height", || hilbert_series(&ideal.homogenized()?))?;
    let mut r = report_for("spread", ideal.ring());
    r.result("analytic_spread", a);
    let ht = ideal.ring().nvars() as u32 - height.dimension();
    r.result("height", ht);
    r.push(Claim::judged(
        "spread.height-bound",
        "height(I) <= analytic spread",
        a,
        format!(">= {ht}"),
        Provenance::Trivial,
        a >= ht,
    ));
    r.timings_ms = steps.timings;
    Ok(r)
}

fn saturate_check(ideal: &Ideal, tmax: u32) -> Result<VerificationReport, CliError> {
    let mut steps = Steps::default();
    let mut r = report_for("saturate-check", ideal.ring());
    r.param("tmax", tmax);
    r.note("I^t saturated with respect to the maximal ideal is equivalent to depth R/I^t > 0");
    for t in 1..=tmax {
        let sat = steps.time(&format!("saturation_t{t}"), || is_saturated_power(ideal, t, 50))?;
        r.result(&format!("saturated_t{t}"), sat);
    }
    r.timings_ms = steps.timings;
    Ok(r)
}
