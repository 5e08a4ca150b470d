//! Command-line interface: recomputed dimension tables, generating series,
//! and the full verification suite for Siegel modular forms of degree two
//! and level dividing 4.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use siegeldim_core::arthur::{skp_count_series, solve_g_counts};
use siegeldim_core::exactmath::RationalFunction;
use siegeldim_core::globaldims::{
    codim_params, codim_series, mk_series, sk_series, skg_series, skp_series,
};
use siegeldim_core::groups::GroupLabel;
use siegeldim_core::localreps::{
    catalogue, dim_table, G_COLUMNS, P_OMEGAS,
};
use siegeldim_core::s6::{
    class_order, cycle_type_counts, fixed_dim, irrep_order, CONJUGACY_GOLDEN,
};
use siegeldim_core::verify::{run_scope, Scope};

#[derive(Parser)]
#[command(
    name = "siegeldim",
    about = "Exact dimension tables and generating series for Siegel modular \
             forms of degree 2 and level dividing 4",
    after_help = "Group selectors: Gamma2, Sp4Z, K2, K4, Gamma0p2, Gamma0p4, \
                  Gamma0star4, Klingen2, Klingen4, M4, B2.\n\
                  Representation-type selectors: I, IIa, IIb, ..., XIb, Vastar, sc16."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Emit a recomputed table: conjugacy, s6fixed, localdim, codim, Mk,
    /// Sk, SkP, SkG, countsP, countsG.
    Table {
        name: String,
        /// Restrict to a single group row.
        #[arg(long)]
        group: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Largest weight column for weight-indexed tables.
        #[arg(long, default_value_t = 20)]
        max_weight: usize,
    },
    /// Print one generating series in closed form.
    Series {
        /// Group selector, for kinds M, S, P, G, codim.
        #[arg(long)]
        group: Option<String>,
        /// Representation-type selector, for count series of kinds P and G.
        #[arg(long)]
        omega: Option<String>,
        /// M (all modular forms), S (cusp forms), P (Saito-Kurokawa part or
        /// counts), G (general-type part or counts), codim.
        #[arg(long)]
        kind: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Also print series coefficients through this order.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run verification checks: all, s6, localdim, codim, systems,
    /// klingen4, appendix.
    Verify {
        #[arg(default_value = "all")]
        scope: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Serialize)]
struct Table {
    name: String,
    rows: Vec<String>,
    columns: Vec<String>,
    values: Vec<Vec<String>>,
}

impl Table {
    fn filter_row(mut self, row: &str) -> Option<Table> {
        let idx = self.rows.iter().position(|r| r == row)?;
        self.rows = vec![self.rows.swap_remove(idx)];
        self.values = vec![self.values.swap_remove(idx)];
        Some(self)
    }

    fn render(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(self).unwrap()),
            Format::Csv => {
                println!("{},{}", self.name, self.columns.join(","));
                for (r, row) in self.rows.iter().zip(&self.values) {
                    println!("{},{}", r, row.join(","));
                }
            }
            Format::Text => {
                let mut widths: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
                for row in &self.values {
                    for (w, v) in widths.iter_mut().zip(row) {
                        *w = (*w).max(v.len());
                    }
                }
                let label_width = self
                    .rows
                    .iter()
                    .map(|r| r.len())
                    .max()
                    .unwrap_or(0)
                    .max(self.name.len());
                print!("{:label_width$}", self.name);
                for (c, w) in self.columns.iter().zip(&widths) {
                    print!("  {c:>w$}");
                }
                println!();
                for (r, row) in self.rows.iter().zip(&self.values) {
                    print!("{r:label_width$}");
                    for (v, w) in row.iter().zip(&widths) {
                        print!("  {v:>w$}");
                    }
                    println!();
                }
            }
        }
    }
}

fn weight_table(
    name: &str,
    series_of: impl Fn(GroupLabel) -> RationalFunction,
    max_weight: usize,
) -> Table {
    let columns = (1..=max_weight).map(|k| k.to_string()).collect();
    let mut rows = Vec::new();
    let mut values = Vec::new();
    for g in GroupLabel::ALL {
        rows.push(g.name().to_string());
        let s = series_of(g).expand(max_weight);
        values.push((1..=max_weight).map(|k| s.coeff_i64(k).to_string()).collect());
    }
    Table {
        name: name.to_string(),
        rows,
        columns,
        values,
    }
}

fn count_table(
    name: &str,
    labels: Vec<String>,
    series: Vec<RationalFunction>,
    max_weight: usize,
) -> Table {
    let columns = (1..=max_weight).map(|k| k.to_string()).collect();
    let values = series
        .iter()
        .map(|rf| {
            let s = rf.expand(max_weight);
            (1..=max_weight).map(|k| s.coeff_i64(k).to_string()).collect()
        })
        .collect();
    Table {
        name: name.to_string(),
        rows: labels,
        columns,
        values,
    }
}

fn partition_label(p: &[usize]) -> String {
    p.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

fn build_table(name: &str, max_weight: usize) -> Option<Table> {
    let name = name.strip_prefix("lowweights:").unwrap_or(name);
    match name {
        "conjugacy" => {
            let columns = class_order().iter().map(|p| partition_label(p)).collect();
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for (g, _) in CONJUGACY_GOLDEN {
                rows.push(g.name().to_string());
                let counts = cycle_type_counts(g).unwrap();
                values.push(counts.iter().map(|c| c.to_string()).collect());
            }
            Some(Table {
                name: "conjugacy".into(),
                rows,
                columns,
                values,
            })
        }
        "s6fixed" => {
            let columns = irrep_order().iter().map(|p| partition_label(p)).collect();
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for (g, _) in CONJUGACY_GOLDEN {
                rows.push(g.name().to_string());
                values.push(
                    (0..11)
                        .map(|i| fixed_dim(i, g).unwrap().to_string())
                        .collect(),
                );
            }
            Some(Table {
                name: "s6fixed".into(),
                rows,
                columns,
                values,
            })
        }
        "localdim" => {
            let columns = GroupLabel::ALL.iter().map(|g| g.name().to_string()).collect();
            let rows = catalogue().iter().map(|r| r.label.name().to_string()).collect();
            let values = dim_table()
                .iter()
                .map(|row| row.iter().map(|v| v.to_string()).collect())
                .collect();
            Some(Table {
                name: "localdim".into(),
                rows,
                columns,
                values,
            })
        }
        "codim" => {
            let columns = ["alpha", "beta", "gamma", "delta", "series"]
                .map(String::from)
                .to_vec();
            let mut rows = Vec::new();
            let mut values = Vec::new();
            for g in GroupLabel::ALL {
                rows.push(g.name().to_string());
                let (a, b, c, d) = codim_params(g);
                values.push(vec![
                    a.to_string(),
                    b.to_string(),
                    c.to_string(),
                    d.to_string(),
                    codim_series(g).to_string(),
                ]);
            }
            Some(Table {
                name: "codim".into(),
                rows,
                columns,
                values,
            })
        }
        "Mk" => Some(weight_table("Mk", mk_series, max_weight)),
        "Sk" => Some(weight_table("Sk", sk_series, max_weight)),
        "SkP" => Some(weight_table("SkP", skp_series, max_weight)),
        "SkG" => Some(weight_table("SkG", skg_series, max_weight)),
        "countsP" => Some(count_table(
            "countsP",
            P_OMEGAS.iter().map(|o| o.name().to_string()).collect(),
            (0..6).map(skp_count_series).collect(),
            max_weight,
        )),
        "countsG" => Some(count_table(
            "countsG",
            G_COLUMNS.iter().map(|s| s.to_string()).collect(),
            solve_g_counts(),
            max_weight,
        )),
        _ => None,
    }
}

fn group_series(kind: &str, g: GroupLabel) -> Option<(String, RationalFunction)> {
    let (label, rf) = match kind {
        "M" => ("M", mk_series(g)),
        "S" => ("S", sk_series(g)),
        "P" => ("S(P)", skp_series(g)),
        "G" => ("S(G)", skg_series(g)),
        "codim" => ("codim", codim_series(g)),
        _ => return None,
    };
    Some((format!("{label}[{}]", g.name()), rf))
}

fn omega_series(kind: &str, omega: &str) -> Option<(String, RationalFunction)> {
    match kind {
        "P" => {
            let idx = P_OMEGAS.iter().position(|o| o.name() == omega)?;
            Some((format!("counts(P)[{omega}]"), skp_count_series(idx)))
        }
        "G" => {
            // Accept either the merged column label or any of its members.
            let idx = G_COLUMNS
                .iter()
                .position(|c| *c == omega || c.split('+').any(|part| part == omega))?;
            Some((
                format!("counts(G)[{}]", G_COLUMNS[idx]),
                solve_g_counts().swap_remove(idx),
            ))
        }
        _ => None,
    }
}

#[derive(Serialize)]
struct SeriesOut {
    name: String,
    series: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    coefficients: Option<Vec<String>>,
}

fn run() -> Result<ExitCode, String> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Table {
            name,
            group,
            format,
            max_weight,
        } => {
            let table =
                build_table(&name, max_weight).ok_or(format!("unknown table name: {name}"))?;
            let table = match group {
                Some(ref g) => {
                    GroupLabel::parse(g).ok_or(format!("unknown group: {g}"))?;
                    table
                        .filter_row(g)
                        .ok_or(format!("table {name} has no row for group {g}"))?
                }
                None => table,
            };
            table.render(format);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Series {
            group,
            omega,
            kind,
            format,
            order,
        } => {
            let (name, rf) = match (&group, &omega) {
                (Some(g), None) => {
                    let g = GroupLabel::parse(g).ok_or(format!("unknown group: {g}"))?;
                    group_series(&kind, g)
                        .ok_or(format!("unknown kind for a group series: {kind}"))?
                }
                (None, Some(o)) => omega_series(&kind, o)
                    .ok_or(format!("no {kind}-type count series for type {o}"))?,
                _ => return Err("pass exactly one of --group or --omega".into()),
            };
            let coefficients = order.map(|n| {
                let s = rf.expand(n);
                (0..=n).map(|k| s.coeff(k).to_string()).collect::<Vec<_>>()
            });
            match format {
                Format::Json => {
                    let out = SeriesOut {
                        name,
                        series: rf.to_string(),
                        coefficients,
                    };
                    println!("{}", serde_json::to_string_pretty(&out).unwrap());
                }
                _ => {
                    println!("{name} = {rf}");
                    if let Some(cs) = coefficients {
                        println!("coefficients: {}", cs.join(", "));
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { scope, format } => {
            let scope = Scope::parse(&scope).ok_or(format!("unknown scope: {scope}"))?;
            let checks = run_scope(scope);
            let failed = checks.iter().filter(|c| !c.passed).count();
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct CheckOut<'a> {
                        id: &'a str,
                        status: &'a str,
                        detail: &'a str,
                    }
                    #[derive(Serialize)]
                    struct Report<'a> {
                        checks: Vec<CheckOut<'a>>,
                    }
                    let report = Report {
                        checks: checks
                            .iter()
                            .map(|c| CheckOut {
                                id: &c.id,
                                status: if c.passed { "pass" } else { "fail" },
                                detail: &c.detail,
                            })
                            .collect(),
                    };
                    println!("{}", serde_json::to_string_pretty(&report).unwrap());
                }
                _ => {
                    for c in &checks {
                        let status = if c.passed { "ok  " } else { "FAIL" };
                        println!("{status} {}: {}", c.id, c.detail);
                    }
                    println!(
                        "{} checks, {} failed",
                        checks.len(),
                        failed
                    );
                }
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
