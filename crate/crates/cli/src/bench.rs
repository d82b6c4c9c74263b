use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use anyhow::{anyhow, bail, Context, Result};
use hipermotif::generate::{self, random_pattern, sample_pattern, seeded_rng, Family, GraphRng};
use hipermotif::io::{load_edge_list, save_edge_list, LoadOptions};
use hipermotif::{run_prepared, Engine, MatchConfig, PreparedPattern, PropertyGraph, Semantics};

use crate::args::{BenchArgs, FamilyArg, FamilyParams, FormatArg};
use crate::commands::{emit, spec_from_flags};
use crate::report::{mean_ci95, AblationRow, BenchReport, BenchRow};

/// Match limit used by `--ablate-reorder` when `--limit` is not given, so
/// that large patterns on dense targets stay bounded.
pub const ABLATION_DEFAULT_LIMIT: usize = 10_000;

const SAMPLE_ATTEMPTS: usize = 200;

pub fn cmd_bench(args: &BenchArgs, stdout: &mut dyn Write) -> Result<()> {
    let report = run_bench(args)?;
    let text = match args.format {
        FormatArg::Csv => report.to_csv(),
        FormatArg::Json => report.to_json(),
    };
    emit(&text, args.output.as_deref(), stdout)
}

pub fn run_bench(args: &BenchArgs) -> Result<BenchReport> {
    if args.reps == 0 {
        bail!("--reps must be at least 1");
    }
    if args.workers.contains(&0) {
        bail!("--workers values must be at least 1");
    }
    if args.ablate_reorder {
        run_ablation(args).map(BenchReport::Ablation)
    } else {
        run_sweep(args).map(BenchReport::Sweep)
    }
}

struct Target {
    name: String,
    graph: PropertyGraph,
    load_s: f64,
}

fn load_targets(args: &BenchArgs) -> Result<Vec<Target>> {
    if args.target.is_empty() {
        let params = with_bench_defaults(args.family, &args.params);
        let spec = spec_from_flags(args.family, &params)?;
        let start = Instant::now();
        let graph = generate::generate(&spec)?;
        let load_s = start.elapsed().as_secs_f64();
        return Ok(vec![Target {
            name: describe_family(&spec.family, spec.vertex_count, spec.seed),
            graph,
            load_s,
        }]);
    }
    args.target
        .iter()
        .map(|path| {
            let start = Instant::now();
            let graph = load_edge_list(path, LoadOptions::target())
                .with_context(|| format!("loading target {}", path.display()))?;
            Ok(Target {
                name: file_name(path),
                graph,
                load_s: start.elapsed().as_secs_f64(),
            })
        })
        .collect()
}

/// Generated bench targets default to ER(1000, 0.005), WS(1000, k=4, p=0.1)
/// or SF(1000).
fn with_bench_defaults(family: FamilyArg, params: &FamilyParams) -> FamilyParams {
    let mut p = params.clone();
    p.n.get_or_insert(1000);
    match family {
        FamilyArg::Er => {
            p.p.get_or_insert(0.005);
        }
        FamilyArg::Ws => {
            p.k.get_or_insert(4);
            p.p.get_or_insert(0.1);
        }
        FamilyArg::Sf => {}
    }
    p
}

fn describe_family(family: &Family, n: usize, seed: u64) -> String {
    match *family {
        Family::ErdosRenyi { p } => format!("er(n={n} p={p} seed={seed})"),
        Family::WattsStrogatz { k, p } => format!("ws(n={n} k={k} p={p} seed={seed})"),
        Family::ScaleFree { .. } => format!("sf(n={n} seed={seed})"),
    }
}

fn file_name(path: &std::path::Path) -> String {
    path.file_name()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| path.display().to_string())
}

/// Samples a connected pattern from `target` that every engine in
/// `engines` accepts under the given reorder setting(s).
fn sample_usable(
    target: &PropertyGraph,
    vertices: usize,
    engines: &[Engine],
    reorder: &[bool],
    rng: &mut GraphRng,
) -> Option<PropertyGraph> {
    let needs_seed = engines.contains(&Engine::HiPerMotif);
    for _ in 0..SAMPLE_ATTEMPTS {
        let p = sample_pattern(target, vertices, rng)?;
        let usable = !needs_seed
            || reorder.iter().all(|&r| {
                PreparedPattern::new(&p, r)
                    .and_then(|prep| prep.check_seed_edge())
                    .is_ok()
            });
        if usable {
            return Some(p);
        }
    }
    None
}

struct Timed {
    mean_s: f64,
    ci95_s: f64,
    matches: usize,
}

fn time_engine(
    engine: Engine,
    prepared: &PreparedPattern,
    target: &PropertyGraph,
    config: &MatchConfig,
    reps: usize,
) -> Result<Timed> {
    let mut samples = Vec::with_capacity(reps);
    let mut count = None;
    for _ in 0..reps {
        let start = Instant::now();
        let matches = run_prepared(engine, prepared, target, config)?;
        samples.push(start.elapsed().as_secs_f64());
        match count {
            None => count = Some(matches.len()),
            Some(c) if c != matches.len() => {
                bail!("{} returned {c} and then {} matches on repeated runs", engine.name(), matches.len())
            }
            _ => {}
        }
    }
    let (mean_s, ci95_s) = mean_ci95(&samples);
    Ok(Timed {
        mean_s,
        ci95_s,
        matches: count.unwrap_or(0),
    })
}

fn semantics_name(s: Semantics) -> &'static str {
    match s {
        Semantics::Mono => "mono",
        Semantics::Iso => "iso",
    }
}

fn run_sweep(args: &BenchArgs) -> Result<Vec<BenchRow>> {
    let engines: Vec<Engine> = args.engines.iter().map(|&e| e.into()).collect();
    let mut workers = args.workers.clone();
    workers.push(1);
    workers.sort_unstable();
    workers.dedup();
    let semantics: Semantics = args.semantics.into();
    let reorder = !args.no_reorder;
    let config = MatchConfig {
        semantics,
        reorder,
        match_limit: args.limit,
        report_original_ids: false,
        ..MatchConfig::default()
    };

    let mut rows = Vec::new();
    let targets = load_targets(args)?;
    let loaded: Vec<(String, PropertyGraph)> = args
        .pattern
        .iter()
        .map(|path| {
            let g = load_edge_list(path, LoadOptions::pattern())
                .with_context(|| format!("loading pattern {}", path.display()))?;
            Ok((file_name(path), g))
        })
        .collect::<Result<_>>()?;

    for (ti, target) in targets.iter().enumerate() {
        let patterns = if loaded.is_empty() {
            let mut rng = seeded_rng(args.params.seed.wrapping_add(ti as u64).wrapping_add(0x5eed));
            (0..args.patterns)
                .map(|i| {
                    let p = sample_usable(&target.graph, args.pattern_size, &engines, &[reorder], &mut rng)
                        .ok_or_else(|| {
                            anyhow!(
                                "could not sample a connected {}-vertex pattern from {}",
                                args.pattern_size,
                                target.name
                            )
                        })?;
                    Ok((format!("sampled(v={} e={} #{i})", p.vertex_count(), p.edge_count()), p))
                })
                .collect::<Result<Vec<_>>>()?
        } else {
            loaded.clone()
        };

        for (pname, pattern) in &patterns {
            let start = Instant::now();
            let prepared = PreparedPattern::new(pattern, reorder)
                .with_context(|| format!("preparing pattern {pname}"))?;
            let reorder_s = if reorder { start.elapsed().as_secs_f64() } else { 0.0 };

            let mut cell = Vec::new();
            for &engine in &engines {
                let engine_workers: &[usize] = if engine == Engine::HiPerMotif { &workers } else { &[1] };
                let mut baseline = None;
                for &w in engine_workers {
                    let cfg = MatchConfig { workers: w, ..config.clone() };
                    let t = time_engine(engine, &prepared, &target.graph, &cfg, args.reps)
                        .with_context(|| format!("{} on {pname} / {}", engine.name(), target.name))?;
                    let t1 = *baseline.get_or_insert(t.mean_s);
                    let speedup = if t.mean_s > 0.0 { t1 / t.mean_s } else { 1.0 };
                    cell.push(BenchRow {
                        engine: engine.name().to_string(),
                        graph: target.name.clone(),
                        pattern: pname.clone(),
                        semantics: semantics_name(semantics).to_string(),
                        workers: w,
                        reps: args.reps,
                        mean_s: t.mean_s,
                        ci95_s: t.ci95_s,
                        matches: t.matches,
                        speedup,
                        load_s: target.load_s,
                        reorder_s,
                    });
                }
            }
            if cell.iter().any(|r| r.matches != cell[0].matches) {
                let counts: Vec<String> = cell
                    .iter()
                    .map(|r| format!("{}@{}={}", r.engine, r.workers, r.matches))
                    .collect();
                let dir = dump_instance(pattern, &target.graph)?;
                bail!(
                    "engines disagree on {pname} / {}: {}; instance saved to {}",
                    target.name,
                    counts.join(" "),
                    dir.display()
                );
            }
            rows.extend(cell);
        }
    }
    Ok(rows)
}

fn dump_instance(pattern: &PropertyGraph, target: &PropertyGraph) -> Result<PathBuf> {
    let dir = std::env::temp_dir().join(format!(
        "hipermotif-disagreement-{}-{}",
        std::process::id(),
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0)
    ));
    fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
    save_edge_list(pattern, dir.join("pattern.el"))?;
    save_edge_list(target, dir.join("target.el"))?;
    Ok(dir)
}

fn run_ablation(args: &BenchArgs) -> Result<Vec<AblationRow>> {
    let engine: Engine = args.ablate_engine.into();
    let target = load_targets(args)?.into_iter().next().expect("at least one target");
    let config = MatchConfig {
        semantics: args.semantics.into(),
        workers: args.workers[0],
        match_limit: Some(args.limit.unwrap_or(ABLATION_DEFAULT_LIMIT)),
        report_original_ids: false,
        ..MatchConfig::default()
    };
    let mut rng = seeded_rng(args.params.seed.wrapping_add(0xab1a7e));
    let mut rows = Vec::with_capacity(args.instances);
    for i in 0..args.instances {
        let size = 3 + i % 18;
        let pattern = if size <= target.graph.vertex_count() {
            sample_usable(&target.graph, size, &[engine], &[true, false], &mut rng)
        } else {
            None
        }
        .unwrap_or_else(|| random_pattern(size, size + size / 2, &mut rng));

        let on = PreparedPattern::new(&pattern, true)?;
        let off = PreparedPattern::new(&pattern, false)?;
        let reordered = time_engine(engine, &on, &target.graph, &config, args.reps)
            .with_context(|| format!("instance {i} with reordering"))?;
        let original = time_engine(engine, &off, &target.graph, &config, args.reps)
            .with_context(|| format!("instance {i} without reordering"))?;
        if reordered.matches != original.matches {
            let dir = dump_instance(&pattern, &target.graph)?;
            bail!(
                "instance {i}: {} found {} matches with reordering and {} without; instance saved to {}",
                engine.name(),
                reordered.matches,
                original.matches,
                dir.display()
            );
        }
        let ratio = original.mean_s.max(1e-9) / reordered.mean_s.max(1e-9);
        rows.push(AblationRow {
            instance: i,
            graph: target.name.clone(),
            pattern_vertices: pattern.vertex_count(),
            pattern_edges: pattern.edge_count(),
            engine: engine.name().to_string(),
            reps: args.reps,
            reordered_s: reordered.mean_s,
            original_s: original.mean_s,
            ratio,
            matches: reordered.matches,
        });
    }
    Ok(rows)
}
