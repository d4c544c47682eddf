//! Command-line driver. Every subcommand prints one JSON document with
//! the seed and degree cap in force echoed at the top level, so any
//! output can be replayed from its own header. Exit codes: 0 = verdict
//! computed (including refutations), 1 = bad input, 2 = a cap blocked
//! the verdict, 3 = internal invariant violation or a failed report.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::ar::{ar_class, ar_sequence, strong_ghost_witness};
use crate::cohom::{
    module_generation_bound, periodicity_witness, ring_generator_bound, tate_group, tate_induced,
    verify_periodicity_witness,
};
use crate::error::{Error, Result};
use crate::files::{
    read_map_with_context, read_module, resolve_group, resolve_module, write_group, write_map,
    write_module, write_module_with_group,
};
use crate::fingerprint::Fnv64;
use crate::ghosts::{
    ghost_subspace_chain, is_eventual_ghost_window, is_ghost, is_strong_ghost, ModeRequest,
};
use crate::groups::Group;
use crate::linalg::PrimeField;
use crate::reps::{hom_basis, induce, restrict, Module, ModuleMap};
use crate::reports::{run_all, run_report};
use crate::stable::{Caps, StableCtx};

#[derive(Parser)]
#[command(name = "stmod", version, about = "Exact computations in stable module categories of modular group algebras")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Degree cap for syzygy chains, Tate degrees, and sweeps.
    #[arg(long, global = true, default_value_t = 12)]
    cap: i64,

    /// Ghost certificate mode: auto, periodic, bounds, or window:FROM:TO.
    #[arg(long, global = true, default_value = "auto")]
    mode: String,

    /// Seed for randomized fallbacks, echoed into every output.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Write the JSON output to this path instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,

    /// Sweep subgroups up to conjugacy in strong-ghost checks.
    #[arg(long, global = true)]
    conjugacy_reduce: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build or inspect groups as validated Cayley tables.
    Group {
        #[command(subcommand)]
        cmd: GroupCmd,
    },
    /// Build, validate, and transform modules.
    Module {
        #[command(subcommand)]
        cmd: ModuleCmd,
    },
    /// Hom spaces between two modules.
    Hom {
        #[command(subcommand)]
        cmd: HomCmd,
    },
    /// Tate cohomology dimensions, induced maps, bounds, periodicity.
    Cohomology {
        #[command(subcommand)]
        cmd: CohomologyCmd,
    },
    /// Ghost, strong-ghost, and eventual-ghost certificates.
    Ghost {
        #[command(subcommand)]
        cmd: GhostCmd,
    },
    /// Almost split sequences and strong-ghost witnesses.
    Ar {
        #[command(subcommand)]
        cmd: ArCmd,
    },
    /// Theorem-verification reports; NAME is one report or "all".
    Report {
        name: String,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// Build a group from a spec like cyclic:8 and write its file.
    Make {
        spec: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print structural facts about a group file or spec.
    Show {
        reference: String,
    },
}

/// Group and prime context for module references given as specs
/// (jordan:2, trivial, ...) rather than files.
#[derive(Args)]
struct ContextArgs {
    /// Group file or spec anchoring spec-form module references.
    #[arg(long)]
    group: Option<String>,

    /// Prime for spec-form module references.
    #[arg(short, long)]
    p: Option<u64>,
}

impl ContextArgs {
    /// Both flags make a context; with either missing, file references
    /// still resolve on their own and spec references report that they
    /// need --group and -p.
    fn build(&self) -> Result<Option<(Arc<Group>, PrimeField)>> {
        match (&self.group, self.p) {
            (Some(g), Some(p)) => {
                Ok(Some((resolve_group(g, None)?, PrimeField::new(p)?)))
            }
            _ => Ok(None),
        }
    }

    fn module(&self, reference: &str) -> Result<Module> {
        let ctx = self.build()?;
        resolve_module(reference, ctx.as_ref().map(|(g, f)| (g, *f)), None)
    }
}

#[derive(Subcommand)]
enum ModuleCmd {
    /// Build a module from a spec (trivial, regular, jordan:I,
    /// v4band:N:LAMBDA) over a group and write its file.
    Make {
        spec: String,
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Load a module file, rechecking every structural invariant.
    Validate {
        path: PathBuf,
    },
    /// Write the dual module (with its group table alongside).
    Dual {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Restrict to the subgroup on the given elements of its group.
    Restrict {
        path: PathBuf,
        /// Subgroup elements as global ids, e.g. --subgroup 0,2
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<u8>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Induce a module over a subgroup's local group up to the parent.
    Induce {
        path: PathBuf,
        /// Parent group file or spec.
        #[arg(long)]
        group: String,
        /// Subgroup elements of the parent, e.g. --subgroup 0,2
        #[arg(long, value_delimiter = ',', required = true)]
        subgroup: Vec<u8>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the i-th syzygy; negative i takes cosyzygies.
    Syzygy {
        path: PathBuf,
        #[arg(short, long, allow_hyphen_values = true)]
        i: i64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct PairArgs {
    /// Domain module file or spec.
    #[arg(long)]
    domain: String,

    /// Codomain module file or spec.
    #[arg(long)]
    codomain: String,

    #[command(flatten)]
    context: ContextArgs,
}

impl PairArgs {
    fn modules(&self) -> Result<(Module, Module)> {
        let m = self.context.module(&self.domain)?;
        let n = self.context.module(&self.codomain)?;
        if m.group().fingerprint() != n.group().fingerprint() || m.field() != n.field() {
            return Err(Error::Incompatible(
                "domain and codomain live over different group algebras".into(),
            ));
        }
        Ok((m, n))
    }
}

#[derive(Subcommand)]
enum HomCmd {
    /// Basis of the full equivariant hom space.
    Basis {
        #[command(flatten)]
        pair: PairArgs,
    },
    /// Stable hom space: hom and projective-hom dimensions, basis
    /// representative fingerprints.
    Stable {
        #[command(flatten)]
        pair: PairArgs,
    },
}

#[derive(Subcommand)]
enum CohomologyCmd {
    /// Tate dimension table for a module, one row per degree.
    Dims {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        context: ContextArgs,
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 6)]
        to: i64,
    },
    /// Matrices induced on Tate cohomology by a map, one row per degree.
    Induced {
        #[command(flatten)]
        input: MapArgs,
        #[arg(long, default_value_t = -4, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 4)]
        to: i64,
    },
    /// Generator-degree bounds for the cohomology ring, and for a
    /// module over it when one is given.
    Bounds {
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        p: u64,
        #[arg(long)]
        module: Option<String>,
    },
    /// Search for a periodicity witness and replay its pairing.
    Period {
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        p: u64,
    },
}

/// A map file plus optional group/module context for spec-form
/// references inside it.
#[derive(Args)]
struct MapArgs {
    /// Map file to analyze.
    #[arg(long)]
    map: PathBuf,

    /// Group file or spec anchoring spec-form references.
    #[arg(long)]
    group: Option<String>,

    /// Module file or spec whose group and prime anchor spec-form
    /// references in the map file.
    #[arg(long)]
    module: Option<String>,

    /// Prime for spec-form references.
    #[arg(short, long)]
    p: Option<u64>,
}

impl MapArgs {
    fn read(&self) -> Result<ModuleMap> {
        let ctx: Option<(Arc<Group>, PrimeField)> = match &self.module {
            Some(reference) => {
                let sub = ContextArgs { group: self.group.clone(), p: self.p };
                let m = match sub.build()? {
                    Some((g, f)) => resolve_module(reference, Some((&g, f)), None)?,
                    None => resolve_module(reference, None, None)?,
                };
                Some((m.group().clone(), m.field()))
            }
            None => ContextArgs { group: self.group.clone(), p: self.p }.build()?,
        };
        read_map_with_context(&self.map, ctx.as_ref().map(|(g, f)| (g, *f)))
    }
}

#[derive(Subcommand)]
enum GhostCmd {
    /// Ghost certificate for a map, honoring --mode.
    Check {
        #[command(flatten)]
        input: MapArgs,
    },
    /// Strong-ghost certificate: ghost on every subgroup restriction.
    Strong {
        #[command(flatten)]
        input: MapArgs,
    },
    /// Induced ranks over a degree window, with upgrade when the
    /// window suffices.
    Eventual {
        #[command(flatten)]
        input: MapArgs,
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 10)]
        to: i64,
    },
    /// Dimensions of the nested ghost subspaces of a stable hom space.
    Chain {
        #[command(flatten)]
        pair: PairArgs,
        /// Largest degree bound i in the chain S_0 over S_1 over ... S_i.
        #[arg(long, default_value_t = 6)]
        to: i64,
    },
}

#[derive(Subcommand)]
enum ArCmd {
    /// Class of the almost split sequence ending in a module.
    Class {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        context: ContextArgs,
    },
    /// The almost split sequence itself: terms, ranks, middle term.
    Sequence {
        #[arg(long)]
        module: String,
        #[command(flatten)]
        context: ContextArgs,
    },
    /// Strong-ghost witness bundle for a group: module, map, and
    /// evidence files written into a directory.
    Witness {
        #[arg(long)]
        group: String,
        #[arg(short, long)]
        p: u64,
        /// Directory for the witness bundle.
        #[arg(long)]
        out: PathBuf,
    },
}

fn parse_mode(s: &str) -> Result<ModeRequest> {
    s.parse()
}

fn fingerprint_map(phi: &ModuleMap) -> u64 {
    let mut h = Fnv64::new();
    h.write(phi.mat().data());
    h.finish()
}

fn path_str(p: &Path) -> String {
    p.display().to_string()
}

/// Runs one parsed invocation and returns (output JSON, exit code).
pub fn run(cli: &Cli) -> Result<(Value, i32)> {
    if cli.cap < 1 {
        return Err(Error::BadInput("--cap must be positive".into()));
    }
    let caps = Caps { degree: cli.cap, syzygy: 2 * cli.cap, ..Caps::default() };
    let ctx = StableCtx::with_caps(caps, cli.seed);
    let mode = parse_mode(&cli.mode)?;
    let (mut value, code) = dispatch(cli, &ctx, mode)?;
    if let Some(obj) = value.as_object_mut() {
        obj.insert("seed".into(), json!(cli.seed));
        obj.insert("degree_cap".into(), json!(cli.cap));
    }
    Ok((value, code))
}

fn dispatch(cli: &Cli, ctx: &StableCtx, mode: ModeRequest) -> Result<(Value, i32)> {
    match &cli.command {
        Command::Group { cmd } => group_cmd(cmd),
        Command::Module { cmd } => module_cmd(cmd, ctx),
        Command::Hom { cmd } => hom_cmd(cmd, ctx),
        Command::Cohomology { cmd } => cohomology_cmd(cmd, ctx),
        Command::Ghost { cmd } => ghost_cmd(cmd, ctx, mode, cli.conjugacy_reduce),
        Command::Ar { cmd } => ar_cmd(cmd, ctx),
        Command::Report { name } => report_cmd(name, ctx),
    }
}

fn group_cmd(cmd: &GroupCmd) -> Result<(Value, i32)> {
    match cmd {
        GroupCmd::Make { spec, out } => {
            let g = Group::from_spec(spec)?;
            write_group(&g, out)?;
            Ok((
                json!({
                    "command": "group make",
                    "name": g.name(),
                    "order": g.order(),
                    "out": path_str(out),
                }),
                0,
            ))
        }
        GroupCmd::Show { reference } => {
            let g = resolve_group(reference, None)?;
            let orders: Vec<usize> =
                (0..g.order() as u8).map(|e| g.element_order(e)).collect();
            Ok((
                json!({
                    "command": "group show",
                    "name": g.name(),
                    "order": g.order(),
                    "abelian": g.is_abelian(),
                    "element_orders": orders,
                    "generators": g.generators(),
                    "fingerprint": g.fingerprint(),
                }),
                0,
            ))
        }
    }
}

fn module_cmd(cmd: &ModuleCmd, ctx: &StableCtx) -> Result<(Value, i32)> {
    match cmd {
        ModuleCmd::Make { spec, group, p, out } => {
            let g = resolve_group(group, None)?;
            let f = PrimeField::new(*p)?;
            let m = Module::from_spec(&g, f, spec)?;
            write_module(&m, group, out)?;
            Ok((
                json!({
                    "command": "module make",
                    "name": m.name(),
                    "dim": m.dim(),
                    "p": f.p(),
                    "out": path_str(out),
                }),
                0,
            ))
        }
        ModuleCmd::Validate { path } => {
            let m = read_module(path)?;
            Ok((
                json!({
                    "command": "module validate",
                    "name": m.name(),
                    "group": m.group().name(),
                    "group_order": m.group().order(),
                    "p": m.field().p(),
                    "dim": m.dim(),
                    "valid": true,
                }),
                0,
            ))
        }
        ModuleCmd::Dual { path, out } => {
            let m = read_module(path)?;
            let d = m.dual();
            let group_out = write_module_with_group(&d, out)?;
            Ok((
                json!({
                    "command": "module dual",
                    "name": d.name(),
                    "dim": d.dim(),
                    "out": path_str(out),
                    "group_out": path_str(&group_out),
                }),
                0,
            ))
        }
        ModuleCmd::Restrict { path, subgroup, out } => {
            let m = read_module(path)?;
            let h = m.group().subgroup(subgroup)?;
            let down = restrict(&m, &h);
            let group_out = write_module_with_group(&down, out)?;
            Ok((
                json!({
                    "command": "module restrict",
                    "name": down.name(),
                    "dim": down.dim(),
                    "subgroup_order": h.order(),
                    "out": path_str(out),
                    "group_out": path_str(&group_out),
                }),
                0,
            ))
        }
        ModuleCmd::Induce { path, group, subgroup, out } => {
            let m = read_module(path)?;
            let g = resolve_group(group, None)?;
            let h = g.subgroup(subgroup)?;
            if h.local_group().fingerprint() != m.group().fingerprint() {
                return Err(Error::Incompatible(
                    "the module is not over the named subgroup's own group; restrict \
                     or rebuild it over the subgroup first"
                        .into(),
                ));
            }
            let up = induce(&m, &g, &h);
            let group_out = write_module_with_group(&up, out)?;
            Ok((
                json!({
                    "command": "module induce",
                    "name": up.name(),
                    "dim": up.dim(),
                    "index": g.order() / h.order(),
                    "out": path_str(out),
                    "group_out": path_str(&group_out),
                }),
                0,
            ))
        }
        ModuleCmd::Syzygy { path, i, out } => {
            let m = read_module(path)?;
            let s = ctx.syzygy(&m, *i)?;
            let group_out = write_module_with_group(&s, out)?;
            Ok((
                json!({
                    "command": "module syzygy",
                    "name": s.name(),
                    "dim": s.dim(),
                    "i": i,
                    "out": path_str(out),
                    "group_out": path_str(&group_out),
                }),
                0,
            ))
        }
    }
}

fn hom_cmd(cmd: &HomCmd, ctx: &StableCtx) -> Result<(Value, i32)> {
    match cmd {
        HomCmd::Basis { pair } => {
            let (m, n) = pair.modules()?;
            let hb = hom_basis(&m, &n);
            let fingerprints: Vec<u64> =
                (0..hb.dim()).map(|i| fingerprint_map(&hb.map(i))).collect();
            Ok((
                json!({
                    "command": "hom basis",
                    "domain": m.name(),
                    "codomain": n.name(),
                    "dim": hb.dim(),
                    "fingerprints": fingerprints,
                }),
                0,
            ))
        }
        HomCmd::Stable { pair } => {
            let (m, n) = pair.modules()?;
            let sh = ctx.stable_hom(&m, &n)?;
            Ok((
                json!({
                    "command": "hom stable",
                    "domain": m.name(),
                    "codomain": n.name(),
                    "hom_dim": sh.hom_dim(),
                    "phom_dim": sh.phom_dim(),
                    "dim": sh.dim(),
                    "fingerprints": sh.rep_fingerprints(),
                }),
                0,
            ))
        }
    }
}

fn cohomology_cmd(cmd: &CohomologyCmd, ctx: &StableCtx) -> Result<(Value, i32)> {
    match cmd {
        CohomologyCmd::Dims { module, context, from, to } => {
            let m = context.module(module)?;
            let mut rows = Vec::new();
            for i in *from..=*to {
                let h = tate_group(ctx, &m, i)?;
                rows.push(json!({
                    "i": i,
                    "dim": h.dim(),
                    "fingerprints": h.rep_fingerprints(),
                }));
            }
            Ok((
                json!({
                    "command": "cohomology dims",
                    "module": m.name(),
                    "rows": rows,
                }),
                0,
            ))
        }
        CohomologyCmd::Induced { input, from, to } => {
            let phi = input.read()?;
            let mut rows = Vec::new();
            for i in *from..=*to {
                let mat = tate_induced(ctx, &phi, i)?;
                rows.push(json!({
                    "i": i,
                    "rank": mat.rank(),
                    "rows": mat.rows(),
                    "cols": mat.cols(),
                }));
            }
            Ok((
                json!({
                    "command": "cohomology induced",
                    "domain": phi.domain().name(),
                    "codomain": phi.codomain().name(),
                    "rows": rows,
                }),
                0,
            ))
        }
        CohomologyCmd::Bounds { group, p, module } => {
            let g = resolve_group(group, None)?;
            let f = PrimeField::new(*p)?;
            let ring = ring_generator_bound(ctx, &g, f)?;
            let degrees: Vec<i64> = ring.gens.iter().map(|(d, _)| *d).collect();
            let module_bound = match module {
                Some(reference) => {
                    let m = resolve_module(reference, Some((&g, f)), None)?;
                    let b = module_generation_bound(ctx, &m)?;
                    json!({
                        "bound": b.bound,
                        "stabilized": b.stabilized,
                        "trusted": b.trusted,
                    })
                }
                None => Value::Null,
            };
            Ok((
                json!({
                    "command": "cohomology bounds",
                    "group": g.name(),
                    "ring": {
                        "generator_degrees": degrees,
                        "max_degree": ring.max_degree,
                        "stabilized": ring.stabilized,
                        "trusted": ring.trusted,
                    },
                    "module": module_bound,
                }),
                0,
            ))
        }
        CohomologyCmd::Period { group, p } => {
            let g = resolve_group(group, None)?;
            let f = PrimeField::new(*p)?;
            match periodicity_witness(ctx, &g, f)? {
                Some(w) => {
                    let replay = verify_periodicity_witness(ctx, &w)?;
                    Ok((
                        json!({
                            "command": "cohomology period",
                            "group": g.name(),
                            "found": true,
                            "d": w.d,
                            "replay": replay,
                        }),
                        0,
                    ))
                }
                None => Ok((
                    json!({
                        "command": "cohomology period",
                        "group": g.name(),
                        "found": false,
                        "searched_up_to": ctx.caps().degree,
                    }),
                    0,
                )),
            }
        }
    }
}

fn ghost_cmd(
    cmd: &GhostCmd,
    ctx: &StableCtx,
    mode: ModeRequest,
    conjugacy_reduce: bool,
) -> Result<(Value, i32)> {
    match cmd {
        GhostCmd::Check { input } => {
            let phi = input.read()?;
            let cert = is_ghost(ctx, &phi, mode)?;
            Ok((
                json!({
                    "command": "ghost check",
                    "domain": phi.domain().name(),
                    "codomain": phi.codomain().name(),
                    "certificate": serde_json::to_value(&cert)
                        .map_err(|e| Error::Internal(e.to_string()))?,
                }),
                0,
            ))
        }
        GhostCmd::Strong { input } => {
            let phi = input.read()?;
            let cert = is_strong_ghost(ctx, &phi, conjugacy_reduce)?;
            Ok((
                json!({
                    "command": "ghost strong",
                    "domain": phi.domain().name(),
                    "codomain": phi.codomain().name(),
                    "certificate": serde_json::to_value(&cert)
                        .map_err(|e| Error::Internal(e.to_string()))?,
                }),
                0,
            ))
        }
        GhostCmd::Eventual { input, from, to } => {
            let phi = input.read()?;
            let report = is_eventual_ghost_window(ctx, &phi, *from, *to)?;
            Ok((
                json!({
                    "command": "ghost eventual",
                    "domain": phi.domain().name(),
                    "codomain": phi.codomain().name(),
                    "report": serde_json::to_value(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?,
                }),
                0,
            ))
        }
        GhostCmd::Chain { pair, to } => {
            let (m, n) = pair.modules()?;
            let report = ghost_subspace_chain(ctx, &m, &n, *to)?;
            Ok((
                json!({
                    "command": "ghost chain",
                    "domain": m.name(),
                    "codomain": n.name(),
                    "report": serde_json::to_value(&report)
                        .map_err(|e| Error::Internal(e.to_string()))?,
                }),
                0,
            ))
        }
    }
}

fn ar_cmd(cmd: &ArCmd, ctx: &StableCtx) -> Result<(Value, i32)> {
    match cmd {
        ArCmd::Class { module, context } => {
            let m = context.module(module)?;
            let c = ar_class(ctx, &m)?;
            Ok((
                json!({
                    "command": "ar class",
                    "module": m.name(),
                    "end_dim": c.end_dim,
                    "radical_dim": c.radical_dim,
                    "solution_dim": c.solution_dim,
                    "class_fingerprint": fingerprint_map(&c.phi),
                }),
                0,
            ))
        }
        ArCmd::Sequence { module, context } => {
            let m = context.module(module)?;
            let seq = ar_sequence(ctx, &m)?;
            Ok((
                json!({
                    "command": "ar sequence",
                    "module": m.name(),
                    "dims": [seq.dims.0, seq.dims.1, seq.dims.2],
                    "alpha_rank": seq.alpha.mat().rank(),
                    "beta_rank": seq.beta.mat().rank(),
                    "middle": seq.middle.name(),
                    "middle_stripped_dim": seq.middle_stripped.dim(),
                    "middle_free_rank": seq.middle_free_rank,
                }),
                0,
            ))
        }
        ArCmd::Witness { group, p, out } => {
            let g = resolve_group(group, None)?;
            let f = PrimeField::new(*p)?;
            let w = match strong_ghost_witness(ctx, &g, f)? {
                None => {
                    return Ok((
                        json!({
                            "command": "ar witness",
                            "group": g.name(),
                            "found": false,
                        }),
                        0,
                    ))
                }
                Some(w) => w,
            };
            std::fs::create_dir_all(out)
                .map_err(|e| Error::BadInput(format!("{}: {e}", out.display())))?;
            let module_path = out.join("witness_module.json");
            let group_path = write_module_with_group(&w.module, &module_path)?;
            let syzygy_path = out.join("witness_syzygy.json");
            write_module(w.map.codomain(), "witness_module.group.json", &syzygy_path)?;
            let map_path = out.join("witness_map.json");
            write_map(&w.map, "witness_module.json", "witness_syzygy.json", &map_path)?;
            let evidence = json!({
                "command": "ar witness",
                "group": g.name(),
                "found": true,
                "module": w.module.name(),
                "dim": w.dim,
                "dim_mod_order": w.dim_mod_order,
                "dim_coprime_to_p": w.dim_coprime_to_p,
                "syzygy_dims_exclude": w.syzygy_dims_exclude,
                "syzygy_iso_range": w.syzygy_iso_range,
                "condition_one": w.condition_one,
                "restrictions": serde_json::to_value(&w.restrictions)
                    .map_err(|e| Error::Internal(e.to_string()))?,
                "sylow": w.sylow,
                "stably_zero": w.stably_zero,
                "ar_solution_dim": w.ar_solution_dim,
                "ghost": serde_json::to_value(&w.ghost_cert)
                    .map_err(|e| Error::Internal(e.to_string()))?,
                "strong": serde_json::to_value(&w.strong_cert)
                    .map_err(|e| Error::Internal(e.to_string()))?,
                "files": {
                    "module": path_str(&module_path),
                    "group": path_str(&group_path),
                    "syzygy": path_str(&syzygy_path),
                    "map": path_str(&map_path),
                },
            });
            let evidence_path = out.join("witness.json");
            let text = serde_json::to_string_pretty(&evidence)
                .map_err(|e| Error::Internal(e.to_string()))?;
            std::fs::write(&evidence_path, text + "\n")
                .map_err(|e| Error::BadInput(format!("{}: {e}", evidence_path.display())))?;
            Ok((evidence, 0))
        }
    }
}

fn report_cmd(name: &str, ctx: &StableCtx) -> Result<(Value, i32)> {
    if name == "all" {
        let reports = run_all(ctx)?;
        let pass = reports.iter().all(|r| r.pass);
        let value = json!({
            "command": "report all",
            "pass": pass,
            "reports": serde_json::to_value(&reports)
                .map_err(|e| Error::Internal(e.to_string()))?,
        });
        return Ok((value, if pass { 0 } else { 3 }));
    }
    let report = run_report(name, ctx)?;
    let pass = report.pass;
    let value = json!({
        "command": "report",
        "report": serde_json::to_value(&report)
            .map_err(|e| Error::Internal(e.to_string()))?,
    });
    Ok((value, if pass { 0 } else { 3 }))
}

/// Parses argv, runs, prints, and maps everything to an exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints its own help/usage text and picks the code
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match run(&cli) {
        Ok((value, code)) => {
            let text = serde_json::to_string_pretty(&value)
                .unwrap_or_else(|e| format!("{{\"serialize_error\": \"{e}\"}}"));
            match &cli.json {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, text.clone() + "\n") {
                        eprintln!("error: {}: {e}", path.display());
                        return 1;
                    }
                    println!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
