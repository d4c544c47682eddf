//! Ghost detection with machine-checkable certificates.
//!
//! A map is a ghost when every induced map on Tate cohomology vanishes,
//! in every degree. That is an infinite family of conditions, so each
//! certificate says not just the verdict but the finite computation
//! that justifies it:
//!
//! * `periodic`: ranks on the window `[0, d-1]` plus an invertible
//!   class of degree d. Vanishing on the window forces vanishing
//!   everywhere, so both verdicts are exact.
//! * `bounds`: ranks on `[-(n+1), m]` where m and n bound the module
//!   generator degrees of the cohomology of the source and of the dual
//!   of the target. Exact when those bounds are certified, otherwise
//!   the affirmative verdict is `ghost-modulo-assumptions` and the
//!   assumptions block says which inputs were empirical.
//! * `window-only`: ranks on a caller-chosen window. A nonzero rank is
//!   an exact refutation; an all-zero window proves nothing beyond
//!   itself and is reported modulo assumptions.
//!
//! A `not-ghost` verdict always carries a replayable witness: a basis
//! class in the named degree whose composite with the map has nonzero
//! stable coordinates.
//!
//! Over a group that is not a p-group the map is restricted to a Sylow
//! p-subgroup first. Vanishing over the Sylow subgroup forces vanishing
//! over the full group (restriction embeds Tate cohomology and is
//! natural), so `ghost` verdicts transfer exactly; a refutation over
//! the Sylow subgroup refutes only the restricted map, and the
//! certificate says so. When p does not divide the group order the
//! stable category is trivial and everything is a ghost.

use serde::Serialize;

use crate::cohom::{
    module_generation_bound, periodicity_witness, ring_generator_bound, tate_induced,
    verify_periodicity_witness, PeriodicityWitness,
};
use crate::error::{internal, Error, Result};
use crate::linalg::Matrix;
use crate::reps::{restrict, restrict_map, Module, ModuleMap};
use crate::stable::StableCtx;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Ghost,
    NotGhost,
    GhostModuloAssumptions,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Periodic,
    Bounds,
    WindowOnly,
}

/// What the caller asked for. `Auto` certifies periodically when an
/// invertible class exists and falls back to generation bounds.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ModeRequest {
    Auto,
    Periodic,
    Bounds,
    Window(i64, i64),
}

impl std::str::FromStr for ModeRequest {
    type Err = Error;

    /// Accepts `auto`, `periodic`, `bounds`, or `window:FROM:TO`.
    fn from_str(s: &str) -> Result<ModeRequest> {
        let bad = || {
            Error::BadInput(format!(
                "mode {s} is not auto, periodic, bounds, or window:FROM:TO"
            ))
        };
        match s {
            "auto" => Ok(ModeRequest::Auto),
            "periodic" => Ok(ModeRequest::Periodic),
            "bounds" => Ok(ModeRequest::Bounds),
            _ => {
                let rest = s.strip_prefix("window:").ok_or_else(bad)?;
                let (a, b) = rest.split_once(':').ok_or_else(bad)?;
                let from = a.parse().map_err(|_| bad())?;
                let to = b.parse().map_err(|_| bad())?;
                Ok(ModeRequest::Window(from, to))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct DegreeRank {
    pub i: i64,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind")]
pub enum Witness {
    /// `class` are coordinates in the stable basis of maps out of the
    /// degree-`degree` chain module; `composite` are the nonzero stable
    /// coordinates of the map composed with that class.
    NotGhost {
        degree: i64,
        class: Vec<u8>,
        composite: Vec<u8>,
    },
    /// Degree-d class with an inverse; the pairing scalar was recomputed
    /// and equals 1.
    Periodic { d: i64, pairing_scalar: u8 },
}

/// Everything a reader needs to judge how exact the verdict is. Fields
/// are None when the mode does not use them.
#[derive(Clone, Debug, Serialize)]
pub struct Assumptions {
    pub sylow_reduced: bool,
    pub subgroup: Option<String>,
    pub d: Option<i64>,
    pub d_trusted: Option<bool>,
    pub m: Option<i64>,
    pub m_stabilized: Option<bool>,
    pub m_trusted: Option<bool>,
    pub n: Option<i64>,
    pub n_stabilized: Option<bool>,
    pub n_trusted: Option<bool>,
    pub window: Option<(i64, i64)>,
    pub degree_cap: i64,
    pub notes: Vec<String>,
}

impl Assumptions {
    fn base(ctx: &StableCtx) -> Self {
        Assumptions {
            sylow_reduced: false,
            subgroup: None,
            d: None,
            d_trusted: None,
            m: None,
            m_stabilized: None,
            m_trusted: None,
            n: None,
            n_stabilized: None,
            n_trusted: None,
            window: None,
            degree_cap: ctx.caps().degree,
            notes: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GhostCertificate {
    pub verdict: Verdict,
    pub mode: Mode,
    pub degrees: Vec<DegreeRank>,
    pub witness: Option<Witness>,
    pub assumptions: Assumptions,
    pub subgroups: Vec<SubgroupReport>,
}

/// One entry of a strong-ghost sweep: the restriction certificate for a
/// single p-subgroup, identified by its sorted global element indices.
#[derive(Clone, Debug, Serialize)]
pub struct SubgroupReport {
    pub elements: Vec<u8>,
    pub order: usize,
    pub verdict: Verdict,
    pub cert: GhostCertificate,
}

#[derive(Clone, Debug, Serialize)]
pub struct EventualReport {
    pub eventual_on_window: bool,
    pub from: i64,
    pub to: i64,
    pub degrees: Vec<DegreeRank>,
    pub first_nonzero: Option<i64>,
    /// Present when the window vanishes and is wide enough to combine
    /// with a periodicity witness into a full ghost certificate.
    pub upgraded: Option<GhostCertificate>,
    pub notes: Vec<String>,
}

/// The descending chain S_0 ⊇ S_1 ⊇ ... of stable classes killed on
/// ever wider symmetric degree windows, in the coordinates of the
/// stable hom basis.
#[derive(Clone, Debug, Serialize)]
pub struct ChainReport {
    pub stable_dim: usize,
    pub dims: Vec<usize>,
    pub final_basis: Vec<Vec<u8>>,
    /// First index attaining the final dimension. Equality at the tail
    /// of the window is an observation, not a certificate.
    pub stabilized_at: i64,
    pub notes: Vec<String>,
}

fn subgroup_desc(h: &crate::groups::Subgroup) -> String {
    format!("order {} elements {:?}", h.order(), h.elements())
}

/// First basis class with a nonzero composite, as a replayable witness.
fn nonzero_witness(ind: &Matrix, i: i64) -> Option<Witness> {
    (0..ind.cols()).find_map(|t| {
        let c = ind.col(t);
        if c.iter().any(|&x| x != 0) {
            let mut class = vec![0u8; ind.cols()];
            class[t] = 1;
            Some(Witness::NotGhost {
                degree: i,
                class,
                composite: c,
            })
        } else {
            None
        }
    })
}

fn trivial_cert(ctx: &StableCtx, note: &str) -> GhostCertificate {
    let mut assumptions = Assumptions::base(ctx);
    assumptions.d = Some(0);
    assumptions.d_trusted = Some(true);
    assumptions.m = Some(0);
    assumptions.m_stabilized = Some(true);
    assumptions.m_trusted = Some(true);
    assumptions.n = Some(0);
    assumptions.n_stabilized = Some(true);
    assumptions.n_trusted = Some(true);
    assumptions.notes.push(note.into());
    GhostCertificate {
        verdict: Verdict::Ghost,
        mode: Mode::Bounds,
        degrees: Vec::new(),
        witness: None,
        assumptions,
        subgroups: Vec::new(),
    }
}

/// Certifies or refutes ghostness of a stable class. See the module
/// docs for the three modes and the Sylow policy.
pub fn is_ghost(ctx: &StableCtx, phi: &ModuleMap, req: ModeRequest) -> Result<GhostCertificate> {
    let group = phi.domain().group().clone();
    let f = phi.mat().field();
    let p = f.p() as usize;
    if group.order() == 1 {
        return Ok(trivial_cert(
            ctx,
            "trivial group: every module is free and every class vanishes",
        ));
    }
    if !group.is_p_group(p) {
        let syl = group.sylow_subgroup(p);
        if syl.is_trivial() {
            return Ok(trivial_cert(
                ctx,
                "the characteristic does not divide the group order: \
                 the stable category is trivial",
            ));
        }
        let down = restrict_map(phi, &syl);
        let mut cert = is_ghost(ctx, &down, req)?;
        cert.assumptions.sylow_reduced = true;
        cert.assumptions.subgroup = Some(subgroup_desc(&syl));
        cert.assumptions.notes.insert(
            0,
            "computed on the restriction to a Sylow p-subgroup; vanishing there \
             forces vanishing over the full group, while a refutation refutes \
             only the restricted map"
                .into(),
        );
        return Ok(cert);
    }
    match req {
        ModeRequest::Auto => match periodicity_witness(ctx, &group, f)? {
            Some(w) => periodic_check(ctx, phi, &w, Vec::new()),
            None => bounds_check(
                ctx,
                phi,
                vec![
                    "no periodicity witness up to the degree cap; using generation bounds"
                        .into(),
                ],
            ),
        },
        ModeRequest::Periodic => match periodicity_witness(ctx, &group, f)? {
            Some(w) => periodic_check(ctx, phi, &w, Vec::new()),
            None => Err(Error::NoPeriodicityWitness {
                max_d: ctx.caps().degree,
            }),
        },
        ModeRequest::Bounds => bounds_check(ctx, phi, Vec::new()),
        ModeRequest::Window(a, b) => window_check(ctx, phi, a, b),
    }
}

fn periodic_check(
    ctx: &StableCtx,
    phi: &ModuleMap,
    w: &PeriodicityWitness,
    mut notes: Vec<String>,
) -> Result<GhostCertificate> {
    let mut degrees = Vec::new();
    let mut witness = None;
    for i in 0..w.d {
        let ind = tate_induced(ctx, phi, i)?;
        degrees.push(DegreeRank {
            i,
            rank: ind.rank(),
        });
        if witness.is_none() {
            witness = nonzero_witness(&ind, i);
        }
    }
    let mut assumptions = Assumptions::base(ctx);
    assumptions.d = Some(w.d);
    assumptions.d_trusted = Some(true);
    assumptions.window = Some((0, w.d - 1));
    let verdict = if witness.is_some() {
        notes.push("a class with nonzero composite refutes ghostness exactly".into());
        Verdict::NotGhost
    } else {
        if !verify_periodicity_witness(ctx, w)? {
            return Err(internal!("periodicity witness failed its replay"));
        }
        notes.push(
            "cohomology is periodic with an invertible class of degree d, so \
             vanishing on a window of width d forces vanishing in every degree"
                .into(),
        );
        witness = Some(Witness::Periodic {
            d: w.d,
            pairing_scalar: 1,
        });
        Verdict::Ghost
    };
    assumptions.notes = notes;
    Ok(GhostCertificate {
        verdict,
        mode: Mode::Periodic,
        degrees,
        witness,
        assumptions,
        subgroups: Vec::new(),
    })
}

fn bounds_check(
    ctx: &StableCtx,
    phi: &ModuleMap,
    mut notes: Vec<String>,
) -> Result<GhostCertificate> {
    let group = phi.domain().group().clone();
    let f = phi.mat().field();
    let ring = ring_generator_bound(ctx, &group, f)?;
    let mb = module_generation_bound(ctx, phi.domain())?;
    let nb = module_generation_bound(ctx, &phi.codomain().dual())?;
    let lo = -(nb.bound + 1);
    let hi = mb.bound;
    let mut degrees = Vec::new();
    let mut witness = None;
    for i in lo..=hi {
        let ind = tate_induced(ctx, phi, i)?;
        degrees.push(DegreeRank {
            i,
            rank: ind.rank(),
        });
        if witness.is_none() {
            witness = nonzero_witness(&ind, i);
        }
    }
    // The negative half of the window is the dual statement; recompute
    // it on the dual map and demand matching ranks.
    let dual = phi.dual();
    for i in 0..=nb.bound {
        let r_dual = tate_induced(ctx, &dual, i)?.rank();
        let r_phi = degrees[(-i - 1 - lo) as usize].rank;
        if r_dual != r_phi {
            return Err(internal!("duality rank mismatch in degree {}", i));
        }
    }
    let mut assumptions = Assumptions::base(ctx);
    assumptions.d = Some(ring.max_degree);
    assumptions.d_trusted = Some(ring.trusted);
    assumptions.m = Some(mb.bound);
    assumptions.m_stabilized = Some(mb.stabilized);
    assumptions.m_trusted = Some(mb.trusted);
    assumptions.n = Some(nb.bound);
    assumptions.n_stabilized = Some(nb.stabilized);
    assumptions.n_trusted = Some(nb.trusted);
    assumptions.window = Some((lo, hi));
    let verdict = if witness.is_some() {
        notes.push("a class with nonzero composite refutes ghostness exactly".into());
        Verdict::NotGhost
    } else {
        notes.push(
            "vanishing through the module generator degrees of source and dual \
             target propagates to every degree"
                .into(),
        );
        let exact =
            ring.trusted && mb.trusted && mb.stabilized && nb.trusted && nb.stabilized;
        if exact {
            Verdict::Ghost
        } else {
            if !ring.trusted {
                notes.push("the ring generator degree is an empirical sweep".into());
            }
            if !(mb.trusted && mb.stabilized) {
                notes.push(
                    "the generation bound for the source cohomology is an empirical sweep"
                        .into(),
                );
            }
            if !(nb.trusted && nb.stabilized) {
                notes.push(
                    "the generation bound for the dual target cohomology is an \
                     empirical sweep"
                        .into(),
                );
            }
            Verdict::GhostModuloAssumptions
        }
    };
    assumptions.notes = notes;
    Ok(GhostCertificate {
        verdict,
        mode: Mode::Bounds,
        degrees,
        witness,
        assumptions,
        subgroups: Vec::new(),
    })
}

fn window_check(ctx: &StableCtx, phi: &ModuleMap, a: i64, b: i64) -> Result<GhostCertificate> {
    if a > b {
        return Err(Error::BadInput(format!("empty degree window [{a}, {b}]")));
    }
    let mut degrees = Vec::new();
    let mut witness = None;
    for i in a..=b {
        let ind = tate_induced(ctx, phi, i)?;
        degrees.push(DegreeRank {
            i,
            rank: ind.rank(),
        });
        if witness.is_none() {
            witness = nonzero_witness(&ind, i);
        }
    }
    let mut assumptions = Assumptions::base(ctx);
    assumptions.window = Some((a, b));
    let verdict = if witness.is_some() {
        assumptions
            .notes
            .push("a class with nonzero composite refutes ghostness exactly".into());
        Verdict::NotGhost
    } else {
        assumptions.notes.push(
            "all ranks vanish on the requested window; degrees outside it were \
             not checked"
                .into(),
        );
        Verdict::GhostModuloAssumptions
    };
    Ok(GhostCertificate {
        verdict,
        mode: Mode::WindowOnly,
        degrees,
        witness,
        assumptions,
        subgroups: Vec::new(),
    })
}

/// Ghostness of every restriction to a p-subgroup, the trivial subgroup
/// and the Sylow subgroups included. Reports one certificate per
/// subgroup (ascending order) and aggregates: any refutation refutes,
/// all exact proofs prove, anything weaker in between is modulo
/// assumptions.
pub fn is_strong_ghost(
    ctx: &StableCtx,
    phi: &ModuleMap,
    up_to_conjugacy: bool,
) -> Result<GhostCertificate> {
    let group = phi.domain().group().clone();
    let p = phi.mat().field().p() as usize;
    let subs = group.p_subgroups(p, up_to_conjugacy);
    let mut reports = Vec::new();
    for q in &subs {
        let down = restrict_map(phi, q);
        let cert = is_ghost(ctx, &down, ModeRequest::Auto)?;
        reports.push(SubgroupReport {
            elements: q.elements().to_vec(),
            order: q.order(),
            verdict: cert.verdict,
            cert,
        });
    }
    let mut verdict = Verdict::Ghost;
    let mut witness = None;
    let mut failing = None;
    for (r, q) in reports.iter().zip(&subs) {
        match r.verdict {
            Verdict::NotGhost => {
                verdict = Verdict::NotGhost;
                witness = r.cert.witness.clone();
                failing = Some(subgroup_desc(q));
                break;
            }
            Verdict::GhostModuloAssumptions => verdict = Verdict::GhostModuloAssumptions,
            Verdict::Ghost => {}
        }
    }
    let mode = reports
        .last()
        .map_or(Mode::Bounds, |r| r.cert.mode);
    let mut assumptions = Assumptions::base(ctx);
    assumptions.subgroup = failing;
    assumptions.notes.push(format!(
        "conjunction over {} p-subgroups; per-subgroup certificates attached",
        reports.len()
    ));
    if up_to_conjugacy {
        assumptions.notes.push(
            "subgroups taken up to conjugacy; restriction along conjugation is an \
             equivalence, so ghostness is constant on conjugacy classes"
                .into(),
        );
    }
    if verdict == Verdict::NotGhost {
        assumptions
            .notes
            .push("the restriction to the named subgroup is not a ghost".into());
    }
    Ok(GhostCertificate {
        verdict,
        mode,
        degrees: Vec::new(),
        witness,
        assumptions,
        subgroups: reports,
    })
}

/// Ranks on `[from, to]` only. When they all vanish and the window is
/// at least as wide as a certified period, the vanishing propagates
/// from the window to every degree and a full ghost certificate is
/// attached.
pub fn is_eventual_ghost_window(
    ctx: &StableCtx,
    phi: &ModuleMap,
    from: i64,
    to: i64,
) -> Result<EventualReport> {
    if from > to {
        return Err(Error::BadInput(format!("empty degree window [{from}, {to}]")));
    }
    let group = phi.domain().group().clone();
    let f = phi.mat().field();
    let p = f.p() as usize;
    let mut notes = Vec::new();
    if group.order() > 1 && !group.is_p_group(p) {
        let syl = group.sylow_subgroup(p);
        if !syl.is_trivial() {
            let down = restrict_map(phi, &syl);
            let mut report = is_eventual_ghost_window(ctx, &down, from, to)?;
            report.notes.insert(
                0,
                format!(
                    "computed on the restriction to the Sylow p-subgroup ({})",
                    subgroup_desc(&syl)
                ),
            );
            return Ok(report);
        }
        notes.push(
            "the characteristic does not divide the group order: every rank is zero"
                .into(),
        );
    }
    let mut degrees = Vec::new();
    let mut first_nonzero = None;
    for i in from..=to {
        let rank = tate_induced(ctx, phi, i)?.rank();
        degrees.push(DegreeRank { i, rank });
        if rank != 0 && first_nonzero.is_none() {
            first_nonzero = Some(i);
        }
    }
    let eventual = first_nonzero.is_none();
    let mut upgraded = None;
    if eventual && group.is_p_group(p) && group.order() > 1 {
        if let Some(w) = periodicity_witness(ctx, &group, f)? {
            if to - from >= w.d {
                if !verify_periodicity_witness(ctx, &w)? {
                    return Err(internal!("periodicity witness failed its replay"));
                }
                let mut assumptions = Assumptions::base(ctx);
                assumptions.d = Some(w.d);
                assumptions.d_trusted = Some(true);
                assumptions.window = Some((from, to));
                assumptions.notes.push(
                    "upgraded from an eventual window: ranks are periodic of the \
                     witnessed period and the window contains a full period of zeros"
                        .into(),
                );
                upgraded = Some(GhostCertificate {
                    verdict: Verdict::Ghost,
                    mode: Mode::Periodic,
                    degrees: degrees.clone(),
                    witness: Some(Witness::Periodic {
                        d: w.d,
                        pairing_scalar: 1,
                    }),
                    assumptions,
                    subgroups: Vec::new(),
                });
            } else {
                notes.push(format!(
                    "window narrower than the certified period {}; no upgrade",
                    w.d
                ));
            }
        }
    }
    Ok(EventualReport {
        eventual_on_window: eventual,
        from,
        to,
        degrees,
        first_nonzero,
        upgraded,
        notes,
    })
}

/// Dimensions of the chain S_0 ⊇ S_1 ⊇ ... ⊇ S_{i_max} where S_i is the
/// space of stable classes M -> N whose induced maps vanish in all
/// degrees |j| <= i, computed as kernel intersections of per-degree
/// constraint matrices over the stable hom basis.
pub fn ghost_subspace_chain(
    ctx: &StableCtx,
    m: &Module,
    n: &Module,
    i_max: i64,
) -> Result<ChainReport> {
    if i_max < 0 {
        return Err(Error::BadInput("negative chain length".into()));
    }
    let group = m.group().clone();
    let f = m.field();
    let p = f.p() as usize;
    let mut notes = Vec::new();
    if group.order() > 1 && !group.is_p_group(p) {
        let syl = group.sylow_subgroup(p);
        if syl.is_trivial() {
            return Err(Error::BadInput(
                "the characteristic does not divide the group order: the stable \
                 category is trivial"
                    .into(),
            ));
        }
        let mut report = ghost_subspace_chain(ctx, &restrict(m, &syl), &restrict(n, &syl), i_max)?;
        report.notes.insert(
            0,
            format!(
                "computed on restrictions to the Sylow p-subgroup ({})",
                subgroup_desc(&syl)
            ),
        );
        return Ok(report);
    }
    let sh = ctx.stable_hom(m, n)?;
    let s = sh.dim();
    if s == 0 {
        return Ok(ChainReport {
            stable_dim: 0,
            dims: vec![0; (i_max + 1) as usize],
            final_basis: Vec::new(),
            stabilized_at: 0,
            notes,
        });
    }
    let mut stacked = Matrix::zero(f, 0, s);
    let mut dims = Vec::new();
    let mut basis: Vec<Vec<u8>> = Vec::new();
    for i in 0..=i_max {
        let js: &[i64] = if i == 0 { &[0] } else { &[i, -i] };
        for &j in js {
            let cols: Vec<Vec<u8>> = sh
                .reps()
                .iter()
                .map(|r| tate_induced(ctx, r, j).map(|ind| ind.flatten()))
                .collect::<Result<_>>()?;
            let len = cols.first().map_or(0, Vec::len);
            let block = Matrix::from_cols(f, len, &cols);
            stacked = Matrix::vstack(&[&stacked, &block]);
        }
        basis = stacked.kernel_vectors();
        dims.push(basis.len());
    }
    let last = *dims.last().expect("window is nonempty");
    let stabilized_at = dims.iter().position(|&d| d == last).expect("last matches") as i64;
    notes.push(
        "dimensions are non-increasing by construction; the plateau is observed, \
         not certified"
            .into(),
    );
    Ok(ChainReport {
        stable_dim: s,
        dims,
        final_basis: basis,
        stabilized_at,
        notes,
    })
}
