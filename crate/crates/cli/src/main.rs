use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use monodiv::arith::Budget;
use monodiv::certify::{self, Family, ScanConfig, Verdict};
use monodiv::elliptic::tate_curve;
use monodiv::newton::{build_polygon, dedekind_p_maximal, index_report, residual_polynomial};
use monodiv::poly::phi_development;
use monodiv::reduction::{classify_odd, classify_two, reduction_table_within};
use monodiv::valuation::{
    observed_fueter_valuation, observed_psi_valuation, predicted_fueter_valuation, predicted_valuation, SingularCase,
};
use monodiv::{Error, Int, PolyInt};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "monodiv",
    version,
    about = "Division polynomials, Newton polygons and monogenicity certificates"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Curve {
    #[arg(long, allow_hyphen_values = true)]
    alpha: Int,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: Int,
}

#[derive(Args)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Wall-clock budget for integer factorization.
    #[arg(long)]
    budget_ms: Option<u64>,
}

impl Common {
    fn budget(&self) -> Budget {
        self.budget_ms.map_or_else(Budget::unlimited, Budget::from_millis)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Division polynomial of the Tate normal curve, without its Psi_2 factor.
    Divpoly {
        #[command(flatten)]
        curve: Curve,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Fueter polynomial F_n (even n: F_n / F_2).
    Fueter {
        #[command(flatten)]
        curve: Curve,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Kodaira types at the bad primes.
    Reduce {
        #[command(flatten)]
        curve: Curve,
        #[arg(long)]
        prime: Option<Int>,
        #[command(flatten)]
        common: Common,
    },
    /// Newton polygon of a phi-development.
    Newton {
        #[arg(long, allow_hyphen_values = true)]
        poly: PolyInt,
        #[arg(long, allow_hyphen_values = true)]
        phi: PolyInt,
        #[arg(long)]
        prime: Int,
        #[command(flatten)]
        common: Common,
    },
    /// p-part of the index of Z[theta].
    Index {
        #[arg(long, allow_hyphen_values = true)]
        poly: PolyInt,
        #[arg(long)]
        prime: Int,
        /// Lifts replacing the default ones, repeatable.
        #[arg(long, allow_hyphen_values = true)]
        phi: Vec<PolyInt>,
        #[command(flatten)]
        common: Common,
    },
    /// Monogenicity certificate for T^4 - 6T^2 - alpha T - 3.
    Certify {
        #[arg(long, allow_hyphen_values = true)]
        alpha: Int,
        /// Use default lifts at every prime of the discriminant.
        #[arg(long)]
        generic: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Certify every alpha in a range.
    Scan {
        #[arg(long, allow_hyphen_values = true)]
        min: i64,
        #[arg(long, allow_hyphen_values = true)]
        max: i64,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Discriminant and index survey of a quartic family.
    Survey {
        #[arg(long)]
        family: Family,
        /// Range `lo..hi` or a single value.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Predicted and observed valuations at the singular point.
    Valuation {
        #[command(flatten)]
        curve: Curve,
        #[arg(long)]
        prime: Int,
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Math(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded => Failure::Budget(e.to_string()),
            Error::InvalidInput(_) => Failure::Usage(e.to_string()),
            _ => Failure::Math(e.to_string()),
        }
    }
}

type Outcome = Result<String, Failure>;

fn render(json: bool, value: Value, text: impl FnOnce() -> String) -> String {
    if json {
        serde_json::to_string_pretty(&value).expect("serializable")
    } else {
        text()
    }
}

fn parse_range(s: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("bad range `{s}`, expected lo..hi"));
    match s.split_once("..") {
        Some((lo, hi)) => {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            Ok((
                lo.trim().parse().map_err(|_| bad())?,
                hi.trim().parse().map_err(|_| bad())?,
            ))
        }
        None => {
            let v = s.trim().parse().map_err(|_| bad())?;
            Ok((v, v))
        }
    }
}

fn with_jobs<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        None => f(),
    }
}

fn divpoly(curve: &Curve, n: u32, common: &Common) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    let t = tate_curve(&curve.alpha, &curve.beta)?;
    let d = t.psi_engine().get(n);
    let poly = d
        .poly
        .to_int()
        .map(|p| p.to_string())
        .unwrap_or_else(|| d.poly.to_string());
    Ok(render(
        common.json,
        json!({"n": n, "model": "weierstrass", "even_factor": d.has_even_factor, "poly": poly}),
        || poly.clone(),
    ))
}

fn fueter(curve: &Curve, n: u32, common: &Common) -> Outcome {
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    let t = tate_curve(&curve.alpha, &curve.beta)?;
    let d = t.fueter_engine().get(n);
    let poly = d.poly.to_string();
    Ok(render(
        common.json,
        json!({"n": n, "model": "fueter", "even_factor": d.has_even_factor, "poly": poly}),
        || poly.clone(),
    ))
}

fn reduce(curve: &Curve, prime: Option<&Int>, common: &Common) -> Outcome {
    let rows = match prime {
        Some(p) if *p == Int::from(2) => vec![classify_two(&curve.alpha, &curve.beta)?],
        Some(p) => {
            if !monodiv::arith::is_prime(p) {
                return Err(Failure::Usage(format!("{p} is not prime")));
            }
            vec![classify_odd(&curve.alpha, &curve.beta, p)?]
        }
        None => reduction_table_within(&curve.alpha, &curve.beta, &common.budget())?,
    };
    let opt = |x: Option<u32>| x.map_or_else(|| "-".to_string(), |v| v.to_string());
    Ok(render(
        common.json,
        Value::Array(rows.iter().map(|r| r.to_json()).collect()),
        || {
            let mut out = String::from("p\tkodaira\tf\tc\tcase");
            for r in &rows {
                out += &format!("\n{}\t{}\t{}\t{}\t{}", r.p, r.kodaira, opt(r.f), opt(r.c), r.case_tag);
            }
            out
        },
    ))
}

fn newton(poly: &PolyInt, phi: &PolyInt, p: &Int, common: &Common) -> Outcome {
    if !monodiv::arith::is_prime(p) {
        return Err(Failure::Usage(format!("{p} is not prime")));
    }
    let dev = phi_development(poly, phi)?;
    let polygon = build_polygon(&dev, p)?;
    let residuals = polygon
        .sides
        .iter()
        .map(|s| residual_polynomial(&dev, p, s))
        .collect::<monodiv::error::Result<Vec<_>>>()?;
    let deg = phi.degree().unwrap_or(0);
    let res_strings: Vec<Vec<String>> = residuals
        .iter()
        .map(|r| r.coefficients.iter().map(|c| c.to_string()).collect())
        .collect();
    let value = json!({
        "phi": phi.to_string(),
        "development": dev.terms.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        "polygon": polygon.to_json(deg),
        "residuals": residuals.iter().zip(&res_strings).map(|(r, c)| json!({
            "slope": r.side.slope_string(),
            "coefficients": c,
            "separable": r.is_separable(),
        })).collect::<Vec<_>>(),
    });
    Ok(render(common.json, value, || {
        let mut out = String::new();
        for (j, a) in dev.terms.iter().enumerate() {
            out += &format!("a_{j} = {a}\n");
        }
        out += &polygon.render_ascii();
        for (r, c) in residuals.iter().zip(&res_strings) {
            out += &format!(
                "\nside {} degree {}: R = [{}]{}",
                r.side.slope_string(),
                r.side.degree,
                c.join(", "),
                if r.is_separable() { "" } else { " (not separable)" }
            );
        }
        out += &format!("\nind_phi = {}", polygon.ind_phi(deg));
        out
    }))
}

fn index(poly: &PolyInt, p: &Int, lifts: &[PolyInt], common: &Common) -> Outcome {
    let lifts = (!lifts.is_empty()).then_some(lifts);
    let report = index_report(poly, p, lifts)?;
    let dedekind = dedekind_p_maximal(poly, p)?;
    let mut value = report.to_json();
    value["dedekind"] = json!(dedekind);
    Ok(render(common.json, value, || {
        let mut out = String::new();
        for r in &report.per_phi {
            out += &format!(
                "phi = [{}] e = {} ind_phi = {} regular = {}\n",
                r.phi, r.exponent, r.ind_phi, r.regular
            );
        }
        let ind = report
            .index()
            .map_or_else(|| format!(">= {}", report.ind_p_lower_bound), |i| i.to_string());
        out += &format!("ind_{} = {ind}\ndedekind p-maximal = {dedekind}", report.p);
        out
    }))
}

fn certificate_line(c: &certify::MonogenicityCertificate) -> String {
    let mut line = format!("{}\t{}", c.alpha, c.verdict);
    if let Some(d) = &c.field_disc {
        line += &format!("\tdisc {d}");
    }
    if let Some(r) = &c.reason {
        line += &format!("\t({r})");
    }
    line
}

fn budget_failure(c: &certify::MonogenicityCertificate) -> bool {
    c.verdict == Verdict::NotCertified && c.reason.as_deref() == Some(&Error::BudgetExceeded.to_string())
}

fn certify_cmd(alpha: &Int, generic: bool, common: &Common) -> Outcome {
    let budget = common.budget();
    let c = if generic {
        certify::certify_generic_within(alpha, &budget)
    } else {
        certify::certify_within(alpha, &budget)
    };
    if budget_failure(&c) {
        return Err(Failure::Budget(c.reason.unwrap_or_default()));
    }
    Ok(render(common.json, c.to_json(), || {
        let mut out = certificate_line(&c);
        for r in &c.prime_evidence {
            let lift = r.factors.first().map_or_else(|| "-".into(), |f| f.lift.to_string());
            let a0 = r
                .factors
                .first()
                .and_then(|f| f.a0_val)
                .map_or_else(|| "-".into(), |v| v.to_string());
            out += &format!(
                "\n  p = {}\tlift [{lift}]\tv(a0) = {a0}\tind = {}\texact = {}\tdedekind = {}",
                r.p, r.ind_p, r.exact, r.dedekind
            );
        }
        for t in &c.trust {
            out += &format!("\n  trust: {t}");
        }
        out
    }))
}

fn scan_cmd(min: i64, max: i64, jobs: Option<usize>, common: &Common) -> Outcome {
    let certs = certify::scan(
        min,
        max,
        ScanConfig {
            threads: jobs,
            budget_ms: common.budget_ms,
        },
    );
    let exhausted = certs.iter().any(budget_failure);
    let out = render(
        common.json,
        Value::Array(certs.iter().map(|c| c.to_json()).collect()),
        || certs.iter().map(certificate_line).collect::<Vec<_>>().join("\n"),
    );
    if exhausted {
        // partial results still go to stdout
        emit(&out);
        return Err(Failure::Budget("factorization budget exhausted for some alpha".into()));
    }
    Ok(out)
}

fn survey_cmd(family: Family, s: &str, t: &str, jobs: Option<usize>, common: &Common) -> Outcome {
    let (s, t) = (parse_range(s)?, parse_range(t)?);
    let rows = with_jobs(jobs, || certify::survey_family(family, s, t));
    Ok(render(
        common.json,
        Value::Array(rows.iter().map(|r| r.to_json()).collect()),
        || {
            let mut out = String::from("s\tt\tdisc\tdisc_ok\tverdict");
            for r in &rows {
                let v = r.verdict.map_or_else(|| "-".to_string(), |v| v.to_string());
                out += &format!("\n{}\t{}\t{}\t{}\t{v}", r.s, r.t, r.predicted_disc, r.disc_matches);
            }
            out
        },
    ))
}

fn valuation_cmd(curve: &Curve, p: &Int, n: u32, common: &Common) -> Outcome {
    let t = tate_curve(&curve.alpha, &curve.beta)?;
    let case = SingularCase::detect(&curve.alpha, &curve.beta, p)?;
    let (pred, obs) = (predicted_valuation(&case, n)?, observed_psi_valuation(&t, &case, n)?);
    let (fpred, fobs) = (
        predicted_fueter_valuation(&case, n)?,
        observed_fueter_valuation(&t, &case, n)?,
    );
    let value = json!({
        "case": format!("{:?}", case.tag),
        "p": monodiv::arith::int_to_json(p),
        "v": case.v,
        "n": n,
        "psi": {"predicted": pred, "observed": obs},
        "fueter": {"predicted": fpred, "observed": fobs},
    });
    Ok(render(common.json, value, || {
        format!(
            "case {:?} v = {}\nPsi_{n}: predicted {pred} observed {obs}\nF_{n}: predicted {fpred} observed {fobs}",
            case.tag, case.v
        )
    }))
}

fn run(cli: Cli) -> Outcome {
    match &cli.command {
        Command::Divpoly { curve, n, common } => divpoly(curve, *n, common),
        Command::Fueter { curve, n, common } => fueter(curve, *n, common),
        Command::Reduce { curve, prime, common } => reduce(curve, prime.as_ref(), common),
        Command::Newton {
            poly,
            phi,
            prime,
            common,
        } => newton(poly, phi, prime, common),
        Command::Index {
            poly,
            prime,
            phi,
            common,
        } => index(poly, prime, phi, common),
        Command::Certify { alpha, generic, common } => certify_cmd(alpha, *generic, common),
        Command::Scan { min, max, jobs, common } => scan_cmd(*min, *max, *jobs, common),
        Command::Survey {
            family,
            s,
            t,
            jobs,
            common,
        } => survey_cmd(*family, s, t, *jobs, common),
        Command::Valuation {
            curve,
            prime,
            n,
            common,
        } => valuation_cmd(curve, prime, *n, common),
    }
}

fn emit(out: &str) {
    // a closed pipe is not an error for a filter-style tool
    let _ = writeln!(std::io::stdout().lock(), "{out}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Math(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("usage error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("budget exhausted: {m}");
            ExitCode::from(3)
        }
    }
}
