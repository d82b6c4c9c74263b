use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use anyhow::{anyhow, Context, Result};
use hipermotif::generate::{self, AttributeSchema, Family, GeneratorSpec};
use hipermotif::io::{format_edge_list, load_edge_list, LoadOptions};
use hipermotif::{run, MatchConfig, MatchError};

use crate::args::{FamilyArg, FamilyParams, GenerateArgs, MatchArgs};
use crate::UsageError;

pub fn cmd_match(args: &MatchArgs, stdout: &mut dyn Write) -> Result<()> {
    let pattern = load_edge_list(&args.pattern, LoadOptions::pattern())
        .with_context(|| format!("loading pattern {}", args.pattern.display()))?;
    let target = load_edge_list(&args.target, LoadOptions::target())
        .with_context(|| format!("loading target {}", args.target.display()))?;
    let config = MatchConfig {
        semantics: args.semantics.into(),
        reorder: !args.no_reorder,
        workers: args.workers,
        match_limit: args.limit,
        report_original_ids: true,
        paranoid: args.paranoid,
        ..MatchConfig::default()
    };
    let matches = run(args.engine.into(), &pattern, &target, &config).map_err(with_guidance)?;

    let mut out = format!("count={}\n", matches.len());
    if args.print {
        for f in &matches {
            writeln!(out, "{f}").unwrap();
        }
    }
    emit(&out, args.output.as_deref(), stdout)
}

fn with_guidance(err: MatchError) -> anyhow::Error {
    let hint = match err {
        MatchError::PatternTooSmall { .. } => {
            Some("the hipermotif engine seeds on a pattern edge; use --engine vf2ps for edgeless patterns")
        }
        MatchError::MissingSeedEdge => Some(
            "the reordered pattern has no edge (0, 1), e.g. its top-ranked vertex has no out-edges; \
             use --engine vf2ps",
        ),
        MatchError::InstanceTooLarge { .. } => Some("the oracle is for small debugging cases; use --engine vf2ps"),
        _ => None,
    };
    match hint {
        Some(h) => anyhow!("{err}\nhint: {h}"),
        None => err.into(),
    }
}

pub fn cmd_generate(args: &GenerateArgs, stdout: &mut dyn Write) -> Result<()> {
    let spec = match (&args.config, args.family) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            GeneratorSpec::from_config(&text).with_context(|| format!("in config {}", path.display()))?
        }
        (None, Some(family)) => spec_from_flags(family, &args.params)?,
        (None, None) => return Err(UsageError("a family (er, ws, sf) or --config is required".into()).into()),
    };
    let g = generate::generate(&spec)?;
    emit(&format_edge_list(&g)?, args.output.as_deref(), stdout)
}

/// Builds a generator spec from flags; missing required parameters are usage
/// errors.
pub fn spec_from_flags(family: FamilyArg, params: &FamilyParams) -> Result<GeneratorSpec> {
    let need = |value: Option<f64>, flag: &str, fam: &str| -> Result<f64> {
        value.ok_or_else(|| UsageError(format!("`{fam}` requires --{flag}")).into())
    };
    let n = params
        .n
        .ok_or_else(|| UsageError("--n is required".into()))?;
    let family = match family {
        FamilyArg::Er => Family::ErdosRenyi {
            p: need(params.p, "p", "er")?,
        },
        FamilyArg::Ws => Family::WattsStrogatz {
            k: params.k.ok_or_else(|| UsageError("`ws` requires --k".into()))?,
            p: need(params.p, "p", "ws")?,
        },
        FamilyArg::Sf => {
            let Family::ScaleFree {
                alpha,
                beta,
                gamma,
                delta_in,
                delta_out,
            } = Family::scale_free_default()
            else {
                unreachable!()
            };
            Family::ScaleFree {
                alpha: params.alpha.unwrap_or(alpha),
                beta: params.beta.unwrap_or(beta),
                gamma: params.gamma.unwrap_or(gamma),
                delta_in: params.delta_in.unwrap_or(delta_in),
                delta_out: params.delta_out.unwrap_or(delta_out),
            }
        }
    };
    let mut schema = AttributeSchema::default();
    for s in &params.vertex_attr {
        schema.vertex.push(s.parse()?);
    }
    for s in &params.edge_attr {
        schema.edge.push(s.parse()?);
    }
    Ok(GeneratorSpec {
        family,
        vertex_count: n,
        seed: params.seed,
        schema,
    })
}

pub(crate) fn emit(text: &str, path: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => stdout.write_all(text.as_bytes()).context("writing to stdout"),
    }
}
