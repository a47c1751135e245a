//! Command-line front end: the `hall` group exposes the exact word
//! calculus, the `quot` group the finite-field counting laboratory.
//! Exit codes: 0 success or verified, 1 unknown or not verified, 2 usage
//! error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ehall::counting::{
    check_fiber_estimate, count_comm, count_comm4_components, count_locus_l, count_locus_m,
    count_quot, count_quot_flag, fit_polynomial, CountRecord, Family,
};
use ehall::{
    gary_check, is_zero_mod_relations, straighten, verify_empty_triangle, verify_quadratic,
    verify_serre, LatticeVec, Path, Verdict, Window, WordSum,
};

#[derive(Parser)]
#[command(
    name = "ehall",
    about = "Exact elliptic Hall word calculus and a finite-field point-counting laboratory",
    version
)]
struct Cli {
    #[command(subcommand)]
    group: Group,
}

#[derive(Subcommand)]
enum Group {
    /// Exact word-calculus operations and identity checks
    #[command(subcommand)]
    Hall(HallCmd),
    /// Point counts of matrix varieties over prime fields
    #[command(subcommand)]
    Quot(QuotCmd),
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// machine-readable JSON instead of human text
    #[arg(long)]
    json: bool,
    /// write the output to a file instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum HallCmd {
    /// Dictionary word and prefactor of E_{-n,k}
    Enk {
        #[arg(short, allow_hyphen_values = true)]
        n: i64,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Product of two basis words
    Mul {
        /// comma-separated entries of the left word; empty for the unit
        #[arg(long, value_parser = parse_tuple, default_value = "", allow_hyphen_values = true)]
        a: Tuple,
        /// comma-separated entries of the right word; empty for the unit
        #[arg(long, value_parser = parse_tuple, default_value = "", allow_hyphen_values = true)]
        b: Tuple,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Reduced bracket of a word with the degree-one generator E_k
    Bracket {
        #[arg(long, value_parser = parse_tuple, allow_hyphen_values = true)]
        word: Tuple,
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Cubic Serre-type relation at k
    Serre {
        #[arg(short, allow_hyphen_values = true)]
        k: i64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Coefficient instance (m, n) of the cubic exchange relation
    Quadratic {
        #[arg(short, allow_hyphen_values = true)]
        m: i64,
        #[arg(short, allow_hyphen_values = true)]
        n: i64,
        /// window as maxlen,dmin,dmax
        #[arg(long, value_parser = parse_window, default_value = "3,-6,6", allow_hyphen_values = true)]
        window: Window,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// The worked double-bracket chain ending at E_{(0,0,1,0,1)}
    Gary {
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Empty-triangle commutator check for (u, (-1, j))
    EmptyTriangle {
        /// u as n,k with n < 0
        #[arg(long, value_parser = parse_vec2, allow_hyphen_values = true)]
        u: (i64, i64),
        #[arg(short, allow_hyphen_values = true)]
        j: i64,
        /// window as maxlen,dmin,dmax (derived from the instance if absent)
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Option<Window>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Expand a path product in the convex-path spanning set
    Straighten {
        /// path as (n,k);(n,k);... with all n < 0
        #[arg(long)]
        path: String,
        /// window as maxlen,dmin,dmax
        #[arg(long, value_parser = parse_window, allow_hyphen_values = true)]
        window: Window,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Subcommand)]
enum QuotCmd {
    /// Commuting strictly lower-triangular pairs
    Comm {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: CountOutputOpts,
    },
    /// Size-4 component split by the middle subdiagonal entries
    Comm4Components {
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: CountOutputOpts,
    },
    /// Punctual Quot scheme count
    Quot {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: CountOutputOpts,
    },
    /// Flagged Quot scheme count
    QuotFlag {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: CountOutputOpts,
    },
    /// Image-dimension strata (kind l over pairs, kind m over Quot)
    Locus {
        #[arg(long, value_enum)]
        kind: LocusKind,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<i64>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        q: u64,
        #[command(flatten)]
        output: CountOutputOpts,
    },
    /// Interpolate a counting polynomial over sample primes
    Fit {
        #[arg(long, value_enum)]
        family: FitFamily,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        d: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long)]
        lambda: Option<u32>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<i64>,
        /// comma-separated sample primes
        #[arg(long, value_parser = parse_tuple_u64)]
        qs: PrimeList,
        /// extra prime that must match the interpolant
        #[arg(long)]
        holdout: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Dimension bounds for the flagged Quot scheme fibration
    FiberCheck {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long, value_parser = parse_tuple_u64)]
        qs: PrimeList,
        #[arg(long)]
        holdout: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

#[derive(Args, Clone)]
struct CountOutputOpts {
    #[arg(long)]
    json: bool,
    /// CSV rows with the standard header
    #[arg(long)]
    csv: bool,
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum LocusKind {
    L,
    M,
}

#[derive(Clone, Copy, ValueEnum)]
enum FitFamily {
    Comm,
    Comm4Z1,
    Comm4Z2open,
    Quot,
    QuotFlag,
    LocusL,
    LocusM,
}

#[derive(Clone)]
struct Tuple(Vec<i64>);

#[derive(Clone)]
struct PrimeList(Vec<u64>);

fn parse_tuple(s: &str) -> Result<Tuple, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Tuple(Vec::new()));
    }
    s.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<i64>, String>>()
        .map(Tuple)
}

fn parse_tuple_u64(s: &str) -> Result<PrimeList, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("expected at least one value".into());
    }
    s.split(',')
        .map(|x| x.trim().parse::<u64>().map_err(|e| e.to_string()))
        .collect::<Result<Vec<u64>, String>>()
        .map(PrimeList)
}

fn parse_vec2(s: &str) -> Result<(i64, i64), String> {
    let Tuple(v) = parse_tuple(s)?;
    if v.len() != 2 {
        return Err(format!("expected n,k but got `{s}`"));
    }
    Ok((v[0], v[1]))
}

fn parse_window(s: &str) -> Result<Window, String> {
    let Tuple(v) = parse_tuple(s)?;
    if v.len() != 3 || v[0] < 1 {
        return Err(format!("expected maxlen,dmin,dmax but got `{s}`"));
    }
    Ok(Window::new(v[0] as usize, v[1], v[2]))
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            let stdout = std::io::stdout();
            let mut h = stdout.lock();
            writeln!(h, "{text}")
        }
    }
}

fn elem_text(x: &WordSum, json: bool) -> String {
    if json {
        x.to_json().to_string()
    } else {
        x.to_string()
    }
}

fn verdict_output(
    verified: bool,
    unknown: bool,
    json: bool,
    out: &Option<PathBuf>,
) -> std::io::Result<ExitCode> {
    let text = if json {
        serde_json::json!({
            "verified": verified,
            "unknown": unknown,
        })
        .to_string()
    } else if verified {
        "verified".to_string()
    } else if unknown {
        "unknown".to_string()
    } else {
        "failed".to_string()
    };
    emit(out, &text)?;
    Ok(if verified {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_hall(cmd: HallCmd) -> Result<ExitCode, String> {
    match cmd {
        HallCmd::Enk { n, k, output } => {
            let (word, prefactor) = ehall::enk_tuple(n, k).map_err(|e| e.to_string())?;
            let text = if output.json {
                let mut obj = serde_json::Map::new();
                obj.insert("word".into(), serde_json::json!(word.0));
                obj.insert(
                    "prefactor".into(),
                    serde_json::Value::String(prefactor.to_string()),
                );
                serde_json::Value::Object(obj).to_string()
            } else {
                format!("word {word} prefactor {prefactor}")
            };
            emit(&output.out, &text).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        HallCmd::Mul { a, b, output } => {
            let x = ehall::words::e_word(&a.0).mul(&ehall::words::e_word(&b.0));
            emit(&output.out, &elem_text(&x, output.json)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        HallCmd::Bracket { word, k, output } => {
            let x = ehall::words::e_word(&word.0).bracket_ek(k);
            emit(&output.out, &elem_text(&x, output.json)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        HallCmd::Serre { k, output } => {
            let ok = verify_serre(k);
            verdict_output(ok, false, output.json, &output.out).map_err(|e| e.to_string())
        }
        HallCmd::Quadratic {
            m,
            n,
            window,
            output,
        } => {
            let ok = verify_quadratic(m, n, window).map_err(|e| e.to_string())?;
            verdict_output(ok, !ok, output.json, &output.out).map_err(|e| e.to_string())
        }
        HallCmd::Gary { output } => {
            let ok = gary_check();
            verdict_output(ok, false, output.json, &output.out).map_err(|e| e.to_string())
        }
        HallCmd::EmptyTriangle { u, j, window, output } => {
            let u = LatticeVec::new(u.0, u.1).map_err(|e| e.to_string())?;
            let verdict = verify_empty_triangle(u, j, window).map_err(|e| e.to_string())?;
            let ok = verdict == Verdict::ProvenZero;
            verdict_output(ok, !ok, output.json, &output.out).map_err(|e| e.to_string())
        }
        HallCmd::Straighten {
            path,
            window,
            output,
        } => {
            let p: Path = path.parse()?;
            match straighten(&p, window).map_err(|e| e.to_string())? {
                Some(decomposition) => {
                    let text = if output.json {
                        let items: Vec<serde_json::Value> = decomposition
                            .iter()
                            .map(|(path, c)| {
                                serde_json::json!({
                                    "path": path.to_string(),
                                    "coef": c.to_string(),
                                })
                            })
                            .collect();
                        serde_json::json!({ "decomposition": items }).to_string()
                    } else {
                        decomposition
                            .iter()
                            .map(|(path, c)| format!("{path} : {c}"))
                            .collect::<Vec<_>>()
                            .join("\n")
                    };
                    emit(&output.out, &text).map_err(|e| e.to_string())?;
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    let text = if output.json {
                        serde_json::json!({ "decomposition": null }).to_string()
                    } else {
                        "unknown".to_string()
                    };
                    emit(&output.out, &text).map_err(|e| e.to_string())?;
                    Ok(ExitCode::from(1))
                }
            }
        }
    }
}

fn records_text(records: &[CountRecord], opts: &CountOutputOpts) -> String {
    if opts.json {
        serde_json::Value::Array(records.iter().map(|r| r.to_json()).collect()).to_string()
    } else if opts.csv {
        let mut lines = vec![CountRecord::csv_header().to_string()];
        lines.extend(records.iter().map(|r| r.to_csv_row()));
        lines.join("\n")
    } else {
        records
            .iter()
            .map(|r| r.to_csv_row())
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn run_quot(cmd: QuotCmd) -> Result<ExitCode, String> {
    match cmd {
        QuotCmd::Comm { n, q, output } => {
            let raw = count_comm(n, q).map_err(|e| e.to_string())?;
            let rec = CountRecord {
                family: Family::Comm,
                n: Some(n),
                d: None,
                r: None,
                lambda: None,
                mu: None,
                q,
                raw,
                group_order: None,
                count: raw,
            };
            emit(&output.out, &records_text(&[rec], &output)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        QuotCmd::Comm4Components { q, output } => {
            let (z1, z2) = count_comm4_components(q).map_err(|e| e.to_string())?;
            let mk = |family, raw| CountRecord {
                family,
                n: Some(4),
                d: None,
                r: None,
                lambda: None,
                mu: None,
                q,
                raw,
                group_order: None,
                count: raw,
            };
            let recs = [mk(Family::Comm4Z1, z1), mk(Family::Comm4Z2Open, z2)];
            emit(&output.out, &records_text(&recs, &output)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        QuotCmd::Quot { d, r, q, output } => {
            let rec = count_quot(d, r, q).map_err(|e| e.to_string())?;
            emit(&output.out, &records_text(&[rec], &output)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        QuotCmd::QuotFlag { d, n, r, q, output } => {
            let rec = count_quot_flag(d, n, r, q).map_err(|e| e.to_string())?;
            emit(&output.out, &records_text(&[rec], &output)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        QuotCmd::Locus {
            kind,
            n,
            lambda,
            d,
            mu,
            r,
            q,
            output,
        } => {
            let rec = match kind {
                LocusKind::L => {
                    let n = n.ok_or("--n is required for kind l")?;
                    let lambda = lambda.ok_or("--lambda is required for kind l")?;
                    let raw = count_locus_l(n, lambda, q).map_err(|e| e.to_string())?;
                    CountRecord {
                        family: Family::LocusL,
                        n: Some(n),
                        d: None,
                        r: None,
                        lambda: Some(lambda),
                        mu: None,
                        q,
                        raw,
                        group_order: None,
                        count: raw,
                    }
                }
                LocusKind::M => {
                    let d = d.ok_or("--d is required for kind m")?;
                    let mu = mu.ok_or("--mu is required for kind m")?;
                    let r = r.ok_or("--r is required for kind m")?;
                    count_locus_m(d, mu, r, q).map_err(|e| e.to_string())?
                }
            };
            emit(&output.out, &records_text(&[rec], &output)).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        QuotCmd::Fit {
            family,
            n,
            d,
            r,
            lambda,
            mu,
            qs,
            holdout,
            output,
        } => {
            let counter: Box<dyn Fn(u64) -> Result<u128, String>> = match family {
                FitFamily::Comm => {
                    let n = n.ok_or("--n is required for family comm")?;
                    Box::new(move |q| count_comm(n, q).map_err(|e| e.to_string()))
                }
                FitFamily::Comm4Z1 => {
                    Box::new(move |q| Ok(count_comm4_components(q).map_err(|e| e.to_string())?.0))
                }
                FitFamily::Comm4Z2open => {
                    Box::new(move |q| Ok(count_comm4_components(q).map_err(|e| e.to_string())?.1))
                }
                FitFamily::Quot => {
                    let d = d.ok_or("--d is required for family quot")?;
                    let r = r.ok_or("--r is required for family quot")?;
                    Box::new(move |q| Ok(count_quot(d, r, q).map_err(|e| e.to_string())?.count))
                }
                FitFamily::QuotFlag => {
                    let d = d.ok_or("--d is required for family quot-flag")?;
                    let n = n.ok_or("--n is required for family quot-flag")?;
                    let r = r.ok_or("--r is required for family quot-flag")?;
                    Box::new(move |q| {
                        Ok(count_quot_flag(d, n, r, q).map_err(|e| e.to_string())?.count)
                    })
                }
                FitFamily::LocusL => {
                    let n = n.ok_or("--n is required for family locus-l")?;
                    let lambda = lambda.ok_or("--lambda is required for family locus-l")?;
                    Box::new(move |q| count_locus_l(n, lambda, q).map_err(|e| e.to_string()))
                }
                FitFamily::LocusM => {
                    let d = d.ok_or("--d is required for family locus-m")?;
                    let mu = mu.ok_or("--mu is required for family locus-m")?;
                    let r = r.ok_or("--r is required for family locus-m")?;
                    Box::new(move |q| {
                        Ok(count_locus_m(d, mu, r, q).map_err(|e| e.to_string())?.count)
                    })
                }
            };
            let samples: Result<Vec<(u64, u128)>, String> =
                qs.0.iter().map(|&q| Ok((q, counter(q)?))).collect();
            let fit = fit_polynomial(&samples?, (holdout, counter(holdout)?))
                .map_err(|e| e.to_string())?;
            let text = if output.json {
                fit.to_json().to_string()
            } else {
                fit.to_string()
            };
            emit(&output.out, &text).map_err(|e| e.to_string())?;
            Ok(if fit.holdout_ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        QuotCmd::FiberCheck {
            d,
            n,
            r,
            qs,
            holdout,
            output,
        } => {
            let report = check_fiber_estimate(d, n, r, &qs.0, holdout).map_err(|e| e.to_string())?;
            let text = if output.json {
                report.to_json().to_string()
            } else {
                report.to_string()
            };
            emit(&output.out, &text).map_err(|e| e.to_string())?;
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.group {
        Group::Hall(cmd) => run_hall(cmd),
        Group::Quot(cmd) => run_quot(cmd),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
