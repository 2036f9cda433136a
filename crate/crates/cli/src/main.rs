//! `reflect`: command-line front end for the representation census, the
//! canonical filtration, residues and the acceptance suite.
//!
//! Exit codes: 0 affirmative, 1 negative verdict, 2 resource bound or
//! unsupported input, 64 input error.

use std::io::Write;
use clap::{Args, Parser, Subcommand, ValueEnum};
use reflect_core::exactalg::parse_poly;
use reflect_core::filtration::{canonical_content, canonical_content_oracle, quotient_content, DEFAULT_SYMBOLIC_BOUND};
use reflect_core::groups::{young_subgroup, GroupSpec, Subgroup};
use reflect_core::partitions::{enumerate_partitions, pnmu, strata_graph, Partition, SetPartition};
use reflect_core::repr::{
    all_irreps, character_table, invariant_dim, mackey_check, symmetric_irreps, Character,
};
use reflect_core::residues::{classify_etale_trivial, extract_log_part_univariate, residue_divisor, LogForm, Verdict};
use reflect_core::{verify, Error};
use serde_json::{json, Value};
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(name = "reflect", version, about = "Exact representation theory of G(de,e,n)")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Worker threads for parallel sections.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args, Clone, Copy)]
struct GroupArgs {
    #[arg(long)]
    d: u32,
    #[arg(long)]
    e: u32,
    #[arg(long)]
    n: u32,
}

impl GroupArgs {
    fn spec(&self) -> Result<GroupSpec, Error> {
        GroupSpec::new(self.d, self.e, self.n)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Irreducible census and character table of G(de,e,n).
    #[command(alias = "character-table")]
    Irreps(GroupArgs),
    /// Canonical filtration contents N_mu and quotients Phi_mu for S_n.
    Filtration {
        #[arg(long)]
        n: u32,
        /// A single stratum, e.g. 2,2,2.
        #[arg(long)]
        mu: Option<String>,
        /// Cross-check against the symbolic trace oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_SYMBOLIC_BOUND)]
        bound: u32,
    },
    /// The specialization graph of the strata.
    Strata {
        #[arg(long)]
        n: u32,
        /// Emit Graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    /// Residue computations on a form file.
    Residue {
        #[command(subcommand)]
        op: ResidueOp,
    },
    /// Invariants of the irreducibles of S_n under S_{n-1}.
    Branch {
        #[arg(long)]
        n: u32,
    },
    /// Mackey decomposition check in S_n.
    Mackey {
        #[arg(long)]
        n: u32,
        /// `sK` (S_K on 1..K), `1`, `g`, or a set partition like 1,2|3,4.
        #[arg(long)]
        h1: String,
        #[arg(long)]
        h2: String,
        /// Index into the character table of H2 (0 is trivial).
        #[arg(long, default_value_t = 0)]
        psi: usize,
    },
    /// Projector identities on the regular module.
    Projectors {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        regular: bool,
    },
    /// Runs the acceptance suite.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        only: Option<u32>,
    },
}

#[derive(Subcommand)]
enum ResidueOp {
    /// Étale-trivial classification with certificate.
    Classify { path: PathBuf },
    /// Residue divisor (with infinity in one variable).
    Divisor { path: PathBuf },
    /// Log part of `num/den dx`; file `{"var":"x","num":"1","den":"x^2 - 1"}`.
    Extract { path: PathBuf },
}

struct Out {
    code: u8,
    json: Value,
    text: String,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Bound(_) | Error::Unsupported(_) => 2,
        Error::Input(_) | Error::Parse(_) | Error::SizeMismatch(_) | Error::DivisionByZero => 64,
        Error::Character(_) => 1,
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            r.iter()
                .enumerate()
                .map(|(c, s)| format!("{:<w$}", s, w = widths[c]))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn set_text(s: &BTreeSet<Partition>) -> String {
    s.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_irreps(g: GroupArgs) -> Result<Out, Error> {
    let spec = g.spec()?;
    let c = all_irreps(&spec)?;
    let reps = c.group.class_reps();
    let sizes: Vec<usize> = c.group.classes().iter().map(|k| k.members.len()).collect();
    let complete = c.is_complete();
    let irreps: Vec<Value> = c
        .irreps
        .iter()
        .map(|r| {
            json!({
                "label": r.label,
                "degree": r.degree(),
                "character": r.character.values().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    let json = json!({
        "group": spec.to_string(),
        "order": c.group.order(),
        "class_count": c.class_count,
        "classes": reps.iter().zip(&sizes).map(|(g, s)| json!({"rep": g.to_json(), "size": s})).collect::<Vec<_>>(),
        "irreps": irreps,
        "reducible": c.reducible,
        "sum_of_squares": c.degree_square_sum() as u64,
        "complete": complete,
    });
    let mut rows = vec![vec!["label".to_string(), "deg".to_string()]];
    rows[0].extend((0..reps.len()).map(|k| format!("c{}", k)));
    for r in &c.irreps {
        let mut row = vec![r.label.to_string(), r.degree().to_string()];
        row.extend(r.character.values().iter().map(|v| v.to_string()));
        rows.push(row);
    }
    let mut text = format!("{} of order {}\n", spec, c.group.order());
    text += &table(&rows);
    text += "\n\nclasses:\n";
    for (k, (g, s)) in reps.iter().zip(&sizes).enumerate() {
        text += &format!("  c{} size {} rep {}\n", k, s, g.to_json());
    }
    text += &format!(
        "\n{} irreps, {} classes, sum of squared degrees {} (order {}): {}",
        c.irreps.len(),
        c.class_count,
        c.degree_square_sum(),
        c.group.order(),
        if complete { "OK" } else { "INCOMPLETE" }
    );
    Ok(Out { code: if complete { 0 } else { 1 }, json, text })
}

fn cmd_filtration(n: u32, mu: Option<String>, oracle: bool, bound: u32) -> Result<Out, Error> {
    if n == 0 || n > 12 {
        return Err(Error::Input("n must lie in 1..=12".into()));
    }
    let mus = match mu {
        Some(s) => {
            let m: Partition = s.parse()?;
            if m.n() != n {
                return Err(Error::Input(format!("{} is not a partition of {}", m, n)));
            }
            vec![m]
        }
        None => enumerate_partitions(n),
    };
    let mut all_ok = true;
    let mut layers = Vec::new();
    let mut rows = vec![vec!["mu".to_string(), "P_n^mu".to_string(), "content".to_string(), "phi".to_string()]];
    if oracle {
        rows[0].push("oracle".into());
    }
    for m in &mus {
        let layer = canonical_content(m);
        let phi = quotient_content(m);
        let raw: BTreeSet<Partition> = pnmu(m).into_iter().collect();
        let mut v = json!({"mu": m, "pnmu": raw, "content": layer.content, "phi": phi});
        let mut row = vec![m.to_string(), set_text(&raw), set_text(&layer.content), set_text(&phi)];
        if oracle {
            let o = canonical_content_oracle(m, bound)?;
            let ok = o == layer.content;
            all_ok &= ok;
            v["oracle"] = json!(o);
            v["match"] = json!(ok);
            row.push(if ok { "=".into() } else { format!("differs: {}", set_text(&o)) });
        }
        layers.push(v);
        rows.push(row);
    }
    let mut text = table(&rows);
    if oracle {
        text += &format!("\nrule == oracle: {}", if all_ok { "OK" } else { "MISMATCH" });
    }
    let json = if layers.len() == 1 { layers.pop().unwrap() } else { json!({"n": n, "layers": layers}) };
    Ok(Out { code: if all_ok { 0 } else { 1 }, json, text })
}

fn cmd_strata(n: u32, dot: bool) -> Result<Out, Error> {
    if n == 0 || n > 12 {
        return Err(Error::Input("n must lie in 1..=12".into()));
    }
    let g = strata_graph(n);
    let json = json!({"nodes": g.nodes, "edges": g.edges});
    let text = if dot {
        g.to_dot().trim_end().to_string()
    } else {
        g.edges.iter().map(|(a, b)| format!("{} -> {}", a, b)).collect::<Vec<_>>().join("\n")
    };
    Ok(Out { code: 0, json, text })
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {}", path.display(), e)))
}

fn cmd_residue(op: ResidueOp) -> Result<Out, Error> {
    match op {
        ResidueOp::Classify { path } => {
            let form = LogForm::from_json(&read(&path)?)?;
            let v = classify_etale_trivial(&form)?;
            let json = v.to_json(form.vars());
            let text = match &v {
                Verdict::EtaleTrivial(_) => format!("etale trivial: {}", json),
                Verdict::NotEtaleTrivial { reason, .. } => format!("not etale trivial ({}): {}", reason, json),
            };
            Ok(Out { code: if v.is_etale_trivial() { 0 } else { 1 }, json, text })
        }
        ResidueOp::Divisor { path } => {
            let form = LogForm::from_json(&read(&path)?)?;
            let d = residue_divisor(&form);
            let json = d.to_json();
            let rows: Vec<Vec<String>> = json["entries"]
                .as_array()
                .unwrap()
                .iter()
                .map(|e| vec![e["c"].as_str().unwrap().to_string(), e["place"].as_str().unwrap().to_string()])
                .collect();
            let text = format!("{}\ndegree-weighted sum: {}", table(&rows), d.degree_weighted_sum());
            Ok(Out { code: 0, json, text })
        }
        ResidueOp::Extract { path } => {
            let v: Value = serde_json::from_str(&read(&path)?).map_err(|e| Error::Parse(e.to_string()))?;
            let var = v["var"].as_str().unwrap_or("x").to_string();
            let names = vec![var.clone()];
            let field = |k: &str| -> Result<reflect_core::UPoly, Error> {
                let s = v[k].as_str().ok_or_else(|| Error::Parse(format!("missing \"{}\"", k)))?;
                parse_poly(s, &names)?
                    .to_upoly(0)
                    .ok_or_else(|| Error::Unsupported("non-rational coefficients".into()))
            };
            let ex = extract_log_part_univariate(&var, &field("num")?, &field("den")?)?;
            let show = |u: &reflect_core::UPoly| reflect_core::Poly::from_upoly(u, 1, 0).to_string_with(&names);
            let log: Vec<Value> = ex
                .form
                .log_part()
                .iter()
                .map(|(c, p)| json!({"c": c.to_string(), "p": p.to_string_with(&names)}))
                .collect();
            let flagged: Vec<Value> =
                ex.nonconstant.iter().map(|(q, r)| json!({"p": show(q), "residue": show(r)})).collect();
            let json = json!({
                "log": log,
                "exact": ex.form.exact_part().0.to_string_with(&names),
                "nonconstant": flagged,
            });
            let mut text = format!("form: {}", ex.form);
            for (q, r) in &ex.nonconstant {
                text += &format!("\nnon-constant residue along {}: {}", show(q), show(r));
            }
            Ok(Out { code: if ex.nonconstant.is_empty() { 0 } else { 1 }, json, text })
        }
    }
}

fn cmd_branch(n: u32) -> Result<Out, Error> {
    if !(2..=8).contains(&n) {
        return Err(Error::Input("n must lie in 2..=8".into()));
    }
    let g = Arc::new(GroupSpec::symmetric(n).whole()?);
    let h = young_subgroup(GroupSpec::symmetric(n), &SetPartition::new(n, vec![(1..n).collect(), vec![n]])?)?;
    let triv = Character::trivial(g.clone());
    let mut rows = vec![vec!["label".to_string(), "module".to_string(), "deg".to_string(), "invariants".to_string()]];
    let mut entries = Vec::new();
    let mut hits = 0;
    let mut ones = 0;
    for (l, ir) in symmetric_irreps(&g)? {
        let v = invariant_dim(&ir.character, &h)?;
        let trivial = ir.character == triv;
        if !trivial && v != 0 {
            hits += 1;
            if v == 1 {
                ones += 1;
            }
        }
        rows.push(vec![l.to_string(), l.conjugate().to_string(), ir.degree().to_string(), v.to_string()]);
        entries.push(json!({"label": l, "module": l.conjugate(), "degree": ir.degree(), "invariant_dim": v, "trivial": trivial}));
    }
    let ok = hits == 1 && ones == 1;
    let text = format!(
        "{}\n{}",
        table(&rows),
        if ok { "OK: exactly one nontrivial irreducible has invariants" } else { "VIOLATED" }
    );
    Ok(Out { code: if ok { 0 } else { 1 }, json: json!({"n": n, "irreps": entries, "ok": ok}), text })
}

fn subgroup(n: u32, s: &str) -> Result<Subgroup, Error> {
    let spec = GroupSpec::symmetric(n);
    let s = s.trim();
    if s == "1" {
        return Ok(Subgroup::trivial(spec));
    }
    if s == "g" {
        return spec.whole();
    }
    if let Some(k) = s.strip_prefix('s').or_else(|| s.strip_prefix('S')) {
        let k: u32 = k.parse().map_err(|_| Error::Parse(format!("bad subgroup {}", s)))?;
        if k == 0 || k > n {
            return Err(Error::Input(format!("S_{} does not fit in S_{}", k, n)));
        }
        let mut blocks = vec![(1..=k).collect::<Vec<u32>>()];
        blocks.extend((k + 1..=n).map(|i| vec![i]));
        return young_subgroup(spec, &SetPartition::new(n, blocks)?);
    }
    let p: SetPartition = s.parse()?;
    young_subgroup(spec, &p)
}

fn cmd_mackey(n: u32, h1: &str, h2: &str, psi: usize) -> Result<Out, Error> {
    if !(1..=7).contains(&n) {
        return Err(Error::Input("n must lie in 1..=7".into()));
    }
    let g = Arc::new(GroupSpec::symmetric(n).whole()?);
    let a = Arc::new(subgroup(n, h1)?);
    let b = Arc::new(subgroup(n, h2)?);
    let irr = character_table(&b)?;
    let chi = irr.get(psi).ok_or_else(|| Error::Input(format!("H2 has {} irreducibles", irr.len())))?;
    let r = mackey_check(&g, &a, chi)?;
    let vals = |c: &Character| c.values().iter().map(|v| v.to_string()).collect::<Vec<_>>();
    let json = json!({"ok": r.ok, "double_cosets": r.double_cosets, "lhs": vals(&r.lhs), "rhs": vals(&r.rhs)});
    let text = format!(
        "{}, {} double cosets\nlhs {:?}\nrhs {:?}",
        if r.ok { "OK" } else { "MISMATCH" },
        r.double_cosets,
        vals(&r.lhs),
        vals(&r.rhs)
    );
    Ok(Out { code: if r.ok { 0 } else { 1 }, json, text })
}

fn cmd_projectors(g: GroupArgs, regular: bool) -> Result<Out, Error> {
    if !regular {
        return Err(Error::Input("only the regular module is supported; pass --regular".into()));
    }
    let spec = g.spec()?;
    if spec.order() > 200 {
        return Err(Error::Bound(format!("regular module of order {} is too large", spec.order())));
    }
    let (ok, detail) = verify::projector_suite(&spec)?;
    let text = format!("{}\nidempotence, orthogonality, completeness, unit relations: {}", detail, if ok { "OK" } else { "VIOLATED" });
    Ok(Out { code: if ok { 0 } else { 1 }, json: json!({"group": spec.to_string(), "ok": ok, "detail": detail}), text })
}

fn cmd_verify(only: Option<u32>) -> Result<Out, Error> {
    let results = match only {
        Some(k) if (1..=verify::CRITERIA).contains(&k) => vec![verify::run(k)],
        Some(k) => return Err(Error::Input(format!("no criterion {}", k))),
        None => verify::run_all(),
    };
    let ok = results.iter().all(|r| r.passed);
    let text = results.iter().map(|r| r.line()).collect::<Vec<_>>().join("\n");
    Ok(Out { code: if ok { 0 } else { 1 }, json: json!(results), text })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 64 } else { 0 });
        }
    };
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {}", e);
            return ExitCode::from(64);
        }
    }
    let res = match cli.cmd {
        Command::Irreps(g) => cmd_irreps(g),
        Command::Filtration { n, mu, oracle, bound } => cmd_filtration(n, mu, oracle, bound),
        Command::Strata { n, dot } => cmd_strata(n, dot),
        Command::Residue { op } => cmd_residue(op),
        Command::Branch { n } => cmd_branch(n),
        Command::Mackey { n, h1, h2, psi } => cmd_mackey(n, &h1, &h2, psi),
        Command::Projectors { group, regular } => cmd_projectors(group, regular),
        Command::Verify { only } => cmd_verify(only),
    };
    match res {
        Ok(out) => {
            let body = match cli.format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("json"),
                Format::Table => out.text,
            };
            let _ = writeln!(std::io::stdout().lock(), "{}", body);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(exit_code(&e))
        }
    }
}
