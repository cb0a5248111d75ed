use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use heawood::catalog::{build_reference_catalog, k7, normalize_member_name};
use heawood::dot::{family_dot, graph_dot};
use heawood::engine::{Analysis, Chirality, Verdict};
use heawood::grouptype::identify_group_type;
use heawood::io::{emit_graph, read_graph_file};
use heawood::moves::{closure_with, ClosureOptions, FamilyCatalog};
use heawood::report::AnalysisReport;
use heawood::SimpleGraph;

#[derive(Parser)]
#[command(name = "heawood", version, about = "Symmetry bounds for the Heawood family of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(clap::Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write files into this directory instead of printing.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Seed {
    K7,
    K6,
}

#[derive(Subcommand)]
enum Command {
    /// Closure of a seed graph under both moves.
    Family {
        #[arg(long, value_enum, default_value_t = Seed::K7)]
        seed: Seed,
        /// Only apply triangle-to-star moves.
        #[arg(long)]
        nabla_only: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Automorphism group and class representatives.
    Aut {
        /// Catalog name (e.g. H8, N'10) or graph file.
        graph: String,
        #[command(flatten)]
        output: Output,
    },
    /// Fixed-subgraph table, one row per nontrivial class.
    Analyze {
        graph: String,
        #[command(flatten)]
        output: Output,
    },
    /// Per-class verdicts with traces, bounds and chirality.
    Tsg {
        graph: String,
        /// Replay every exclusion trace.
        #[arg(long)]
        audit: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Full pipeline with comparison against the published table.
    Report {
        /// Catalog name, graph file, or `all`.
        #[arg(default_value = "all")]
        scope: String,
        #[command(flatten)]
        output: Output,
    },
    /// Graphviz output of the family or of one graph.
    ExportDot {
        /// Catalog name or graph file; omit for the family.
        graph: Option<String>,
        #[command(flatten)]
        output: Output,
    },
}

struct Named {
    name: String,
    graph: SimpleGraph,
}

fn resolve(spec: &str, cat: &FamilyCatalog) -> Result<Named, String> {
    let path = Path::new(spec);
    if path.is_file() {
        let g = read_graph_file(path).map_err(|e| e.to_string())?;
        return Ok(Named { name: g.name, graph: g.graph });
    }
    let name = normalize_member_name(spec);
    cat.graph(&name)
        .map(|g| Named { name: name.clone(), graph: g.clone() })
        .ok_or_else(|| format!("unknown graph `{spec}`: not a file and not one of {}", cat.names().join(", ")))
}

fn file_stem(name: &str) -> String {
    name.replace('\'', "p")
}

/// Writes `text` to `dir/file` through a temporary file and a rename.
fn write_atomic(dir: &Path, file: &str, text: &str) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let target = dir.join(file);
    let tmp = dir.join(format!(".{file}.tmp"));
    fs::write(&tmp, text).map_err(|e| format!("{}: {e}", tmp.display()))?;
    fs::rename(&tmp, &target).map_err(|e| format!("{}: {e}", target.display()))
}

fn emit(output: &Output, file: &str, text: &str) -> Result<(), String> {
    match &output.out {
        Some(dir) => write_atomic(dir, file, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn cmd_family(seed: Seed, nabla_only: bool, output: &Output) -> Result<bool, String> {
    let reference = build_reference_catalog();
    let (seed_name, seed_graph, hints) = match seed {
        Seed::K7 => ("heawood", k7(), Some(&reference)),
        Seed::K6 => (
            "petersen",
            SimpleGraph::complete(["a", "b", "c", "d", "e", "f"]).expect("valid labels"),
            None,
        ),
    };
    let cat = closure_with(&seed_graph, hints, ClosureOptions { nabla_only, shuffle_seed: None });
    let manifest = json!({
        "family": seed_name,
        "members": cat.members().iter().map(|m| json!({
            "name": m.name,
            "vertices": m.graph.order(),
            "edges": m.graph.size(),
            "fingerprint": m.fingerprint(),
            "file": format!("{}.json", file_stem(&m.name)),
            "provenance": m.provenance,
        })).collect::<Vec<_>>(),
        "moves": cat.arrows(),
        "histogram": cat.histogram(),
    });
    if let Some(dir) = &output.out {
        for m in cat.members() {
            write_atomic(dir, &format!("{}.json", file_stem(&m.name)), &emit_graph(&m.name, &m.graph))?;
        }
        write_atomic(dir, "manifest.json", &pretty(&manifest))?;
        return Ok(true);
    }
    match output.format {
        Format::Records => print!("{}", pretty(&manifest)),
        Format::Text => {
            println!("{} members", cat.len());
            for m in cat.members() {
                let path: Vec<String> = m.provenance.iter().map(ToString::to_string).collect();
                println!(
                    "{:<6} {:>2} vertices  {}",
                    m.name,
                    m.graph.order(),
                    if path.is_empty() { "seed".to_string() } else { path.join(", ") }
                );
            }
            let hist: Vec<String> = cat.histogram().iter().map(|(k, v)| format!("{k}:{v}")).collect();
            println!("histogram {{{}}}", hist.join(", "));
        }
    }
    Ok(true)
}

fn cmd_aut(g: &Named, output: &Output) -> Result<bool, String> {
    let a = Analysis::new(&g.name, &g.graph);
    let group = a.group();
    let t = identify_group_type(group);
    let classes: Vec<_> = a
        .classes()
        .iter()
        .skip(1)
        .map(|c| {
            let p = group.element(c[0]);
            json!({
                "representative": p.cycle_notation(g.graph.labels()),
                "order": p.order(),
                "size": c.len(),
            })
        })
        .collect();
    let text = match output.format {
        Format::Records => pretty(&json!({
            "graph": g.name,
            "order": group.order(),
            "type": t.label(),
            "signature": t.signature,
            "classes": classes,
        })),
        Format::Text => {
            let mut s = format!("{}: |Aut| = {}, type {}\n", g.name, group.order(), t.label());
            for c in &classes {
                s.push_str(&format!(
                    "  {:<28} order {:>2}  class size {}\n",
                    c["representative"].as_str().unwrap_or_default(),
                    c["order"],
                    c["size"]
                ));
            }
            s
        }
    };
    emit(output, &format!("{}.aut.{}", file_stem(&g.name), ext(output)), &text)?;
    Ok(true)
}

fn ext(output: &Output) -> &'static str {
    match output.format {
        Format::Text => "txt",
        Format::Records => "json",
    }
}

fn cmd_analyze(g: &Named, output: &Output) -> Result<bool, String> {
    let r = AnalysisReport::build(&g.name, &g.graph).map_err(|e| e.to_string())?;
    let text = match output.format {
        Format::Records => pretty(&r.rows),
        Format::Text => {
            let mut s = format!("{}\n", g.name);
            for row in &r.rows {
                s.push_str(&format!(
                    "  {:<28} {:>2}  {:<26} {:<3} {:<3} {}\n",
                    row.representative,
                    row.order,
                    row.fixed_subgraph,
                    if row.s1 { "Yes" } else { "No" },
                    if row.s2 { "Yes" } else { "No" },
                    row.path_lemma
                ));
            }
            s
        }
    };
    emit(output, &format!("{}.analyze.{}", file_stem(&g.name), ext(output)), &text)?;
    Ok(true)
}

fn cmd_tsg(g: &Named, audit: bool, output: &Output) -> Result<bool, String> {
    let a = Analysis::new(&g.name, &g.graph);
    let bounds: Vec<String> = a
        .positive_upper_bounds()
        .map_err(|e| e.to_string())?
        .iter()
        .map(|t| t.label())
        .collect();
    let cert = a.intrinsically_chiral();
    let failures = if audit { Some(a.audit()) } else { None };
    let classes: Vec<_> = a
        .classes()
        .iter()
        .skip(1)
        .map(|c| {
            let e = c[0];
            json!({
                "representative": a.group().element(e).cycle_notation(g.graph.labels()),
                "size": c.len(),
                "pos": a.status(e).pos,
                "neg": a.status(e).neg,
            })
        })
        .collect();
    let text = match output.format {
        Format::Records => pretty(&json!({
            "graph": g.name,
            "classes": classes,
            "upper_bounds": bounds,
            "chirality": cert,
            "r7_firings": a.r7_firings(),
            "audit": failures,
        })),
        Format::Text => {
            let mut s = format!("{}\n", g.name);
            let show = |v: &Verdict| match v {
                Verdict::Open => "open".to_string(),
                Verdict::Excluded(t) => format!("excluded by {} (step {})", t.rule, t.step),
            };
            for c in a.classes().iter().skip(1) {
                let e = c[0];
                s.push_str(&format!(
                    "  {:<28} pos {:<26} neg {}\n",
                    a.group().element(e).cycle_notation(g.graph.labels()),
                    show(&a.status(e).pos),
                    show(&a.status(e).neg)
                ));
            }
            let b = if bounds.is_empty() { "trivial only".to_string() } else { bounds.join(", ") };
            s.push_str(&format!("positive upper bounds: {b}\n"));
            s.push_str(&format!("intrinsic chirality: {:?}\n", cert.verdict));
            if let Some(f) = &failures {
                if f.is_empty() {
                    s.push_str("audit: clean\n");
                } else {
                    s.push_str(&format!("audit: {} failures\n", f.len()));
                    for line in f {
                        s.push_str(&format!("  {line}\n"));
                    }
                }
            }
            s
        }
    };
    emit(output, &format!("{}.tsg.{}", file_stem(&g.name), ext(output)), &text)?;
    Ok(failures.map_or(true, |f| f.is_empty()) && (cert.verdict == Chirality::Proved || !audit))
}

fn cmd_report(scope: &str, cat: &FamilyCatalog, output: &Output) -> Result<bool, String> {
    let targets: Vec<Named> = if scope == "all" {
        cat.members()
            .iter()
            .map(|m| Named { name: m.name.clone(), graph: m.graph.clone() })
            .collect()
    } else {
        vec![resolve(scope, cat)?]
    };
    // Graphs share no state, so each gets its own thread.
    let built: Vec<Result<AnalysisReport, String>> = std::thread::scope(|s| {
        let handles: Vec<_> = targets
            .iter()
            .map(|t| s.spawn(move || AnalysisReport::build(&t.name, &t.graph).map_err(|e| e.to_string())))
            .collect();
        handles.into_iter().map(|h| h.join().expect("report thread")).collect()
    });
    let mut ok = true;
    let mut all = Vec::new();
    for (t, r) in targets.iter().zip(built) {
        let r = r?;
        if r.comparison.as_ref().is_some_and(|c| c.is_mismatch()) {
            ok = false;
        }
        if output.out.is_some() {
            let text = match output.format {
                Format::Records => pretty(&r),
                Format::Text => r.render_text(),
            };
            emit(output, &format!("{}.report.{}", file_stem(&t.name), ext(output)), &text)?;
        }
        all.push(r);
    }
    if output.out.is_none() {
        match output.format {
            Format::Records => print!("{}", pretty(&all)),
            Format::Text => {
                for r in &all {
                    println!("{}", r.render_text());
                }
                println!("summary");
                for r in &all {
                    let c = r.comparison.as_ref().map_or("no baseline".to_string(), ToString::to_string);
                    println!("  {:<6} {:?}  {}", r.graph, r.chirality, c);
                }
            }
        }
    }
    Ok(ok)
}

fn run(cli: Cli) -> Result<bool, String> {
    let cat = build_reference_catalog();
    match cli.command {
        Command::Family { seed, nabla_only, output } => cmd_family(seed, nabla_only, &output),
        Command::Aut { graph, output } => cmd_aut(&resolve(&graph, &cat)?, &output),
        Command::Analyze { graph, output } => cmd_analyze(&resolve(&graph, &cat)?, &output),
        Command::Tsg { graph, audit, output } => cmd_tsg(&resolve(&graph, &cat)?, audit, &output),
        Command::Report { scope, output } => cmd_report(&scope, &cat, &output),
        Command::ExportDot { graph, output } => {
            let (file, text) = match graph {
                None => {
                    let fam = closure_with(&k7(), Some(&cat), ClosureOptions::default());
                    ("heawood-family.dot".to_string(), family_dot("heawood", &fam))
                }
                Some(spec) => {
                    let g = resolve(&spec, &cat)?;
                    (format!("{}.dot", file_stem(&g.name)), graph_dot(&g.name, &g.graph))
                }
            };
            emit(&output, &file, &text)?;
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
