//! JSON file formats for groups, modules, and maps.
//!
//! Group:  {"name": str, "order": n, "cayley": [[...]]}
//! Module: {"group": reference, "p": p, "dim": d, "action": [one matrix per element]}
//! Map:    {"domain": module file, "codomain": module file, "mat": matrix}
//!
//! Matrices are arrays of rows with entries reduced modulo p. A group
//! reference is a path when a file exists there, otherwise a named spec
//! like "cyclic:4". Relative paths inside a file resolve against that
//! file's directory, so a bundle of group + module + map files can be
//! moved around as a unit. Loaded modules take their name from the file
//! stem; every structural invariant (table associativity, equivariance,
//! entry ranges) is revalidated on load.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::Group;
use crate::linalg::{Matrix, PrimeField};
use crate::reps::{Module, ModuleMap};

#[derive(Serialize, Deserialize)]
struct GroupFile {
    name: String,
    order: usize,
    cayley: Vec<Vec<u8>>,
}

#[derive(Serialize, Deserialize)]
struct ModuleFile {
    group: String,
    p: u64,
    dim: usize,
    action: Vec<Vec<Vec<u8>>>,
}

#[derive(Serialize, Deserialize)]
struct MapFile {
    domain: String,
    codomain: String,
    mat: Vec<Vec<u8>>,
}

fn file_err(path: &Path, what: &str, detail: impl std::fmt::Display) -> Error {
    Error::BadInput(format!("{}: {what}: {detail}", path.display()))
}

fn read_json<T: for<'a> Deserialize<'a>>(path: &Path, what: &str) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| file_err(path, what, e))?;
    serde_json::from_str(&text).map_err(|e| file_err(path, what, e))
}

fn write_json<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| file_err(path, "serialize", e))?;
    std::fs::write(path, text + "\n").map_err(|e| file_err(path, "write", e))
}

/// Joins a relative reference onto the directory it was found in.
fn anchored(reference: &str, base: Option<&Path>) -> PathBuf {
    let p = Path::new(reference);
    match base {
        Some(dir) if p.is_relative() => dir.join(p),
        _ => p.to_path_buf(),
    }
}

pub fn read_group(path: &Path) -> Result<Arc<Group>> {
    let gf: GroupFile = read_json(path, "group file")?;
    if gf.cayley.len() != gf.order {
        return Err(file_err(
            path,
            "group file",
            format!("order says {} but the table has {} rows", gf.order, gf.cayley.len()),
        ));
    }
    let rows: Vec<Vec<usize>> = gf
        .cayley
        .iter()
        .map(|r| r.iter().map(|&v| v as usize).collect())
        .collect();
    Ok(Arc::new(Group::build(&gf.name, &rows)?))
}

pub fn write_group(group: &Group, path: &Path) -> Result<()> {
    let n = group.order();
    let cayley: Vec<Vec<u8>> = (0..n as u8)
        .map(|a| (0..n as u8).map(|b| group.mul(a, b)).collect())
        .collect();
    write_json(
        &GroupFile { name: group.name().to_string(), order: n, cayley },
        path,
    )
}

/// A path to an existing file wins; anything else is a named spec.
pub fn resolve_group(reference: &str, base: Option<&Path>) -> Result<Arc<Group>> {
    let path = anchored(reference, base);
    if path.is_file() {
        read_group(&path)
    } else {
        Ok(Arc::new(Group::from_spec(reference)?))
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u8>> {
    let flat = m.flatten();
    if m.cols() == 0 {
        return vec![Vec::new(); m.rows()];
    }
    flat.chunks(m.cols()).map(|c| c.to_vec()).collect()
}

pub fn read_module(path: &Path) -> Result<Module> {
    let mf: ModuleFile = read_json(path, "module file")?;
    let f = PrimeField::new(mf.p)?;
    let group = resolve_group(&mf.group, path.parent())?;
    if mf.action.len() != group.order() {
        return Err(file_err(
            path,
            "module file",
            format!("{} action matrices for a group of order {}", mf.action.len(), group.order()),
        ));
    }
    let mut action = Vec::with_capacity(mf.action.len());
    for rows in &mf.action {
        let m = Matrix::from_rows(f, rows)?;
        if m.rows() != mf.dim || m.cols() != mf.dim {
            return Err(file_err(
                path,
                "module file",
                format!("action matrix is {}x{}, dim says {}", m.rows(), m.cols(), mf.dim),
            ));
        }
        action.push(m);
    }
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("module");
    Module::new(group, f, name, action)
}

/// `group_reference` is stored verbatim, so pass whatever the reader
/// should resolve: a named spec, or a path relative to `path`'s folder.
pub fn write_module(m: &Module, group_reference: &str, path: &Path) -> Result<()> {
    let action: Vec<Vec<Vec<u8>>> = (0..m.group().order() as u8)
        .map(|g| matrix_rows(m.action(g)))
        .collect();
    write_json(
        &ModuleFile {
            group: group_reference.to_string(),
            p: m.field().p() as u64,
            dim: m.dim(),
            action,
        },
        path,
    )
}

/// Writes the module along with a sibling `<stem>.group.json` carrying
/// its full Cayley table, for modules over groups that have no spec
/// name (local groups of subgroups, say). Returns the group file path.
pub fn write_module_with_group(m: &Module, path: &Path) -> Result<PathBuf> {
    let stem = path
        .file_stem()
        .and_then(|s| s.to_str())
        .ok_or_else(|| file_err(path, "module file", "path has no usable file stem"))?;
    let group_name = format!("{stem}.group.json");
    let group_path = path.with_file_name(&group_name);
    write_group(m.group(), &group_path)?;
    write_module(m, &group_name, path)?;
    Ok(group_path)
}

/// A path to an existing file wins; otherwise the reference is a module
/// spec like "jordan:2", which needs the ambient group and prime.
pub fn resolve_module(
    reference: &str,
    context: Option<(&Arc<Group>, PrimeField)>,
    base: Option<&Path>,
) -> Result<Module> {
    let path = anchored(reference, base);
    if path.is_file() {
        return read_module(&path);
    }
    match context {
        Some((group, f)) => Module::from_spec(group, f, reference),
        None => Err(Error::BadInput(format!(
            "module reference {reference} is not a file, and no group/prime context was given to read it as a spec"
        ))),
    }
}

pub fn read_map(path: &Path) -> Result<ModuleMap> {
    read_map_with_context(path, None)
}

/// Like `read_map`, but spec-form domain or codomain references inside
/// the file are built over the supplied (group, field) context instead
/// of being rejected.
pub fn read_map_with_context(
    path: &Path,
    context: Option<(&Arc<Group>, PrimeField)>,
) -> Result<ModuleMap> {
    let mf: MapFile = read_json(path, "map file")?;
    let base = path.parent();
    let domain = resolve_module(&mf.domain, context, base)?;
    let codomain = resolve_module(&mf.codomain, context, base)?;
    let f = domain.field();
    let mat = Matrix::from_rows(f, &mf.mat)?;
    ModuleMap::new(domain, codomain, mat)
}

pub fn write_map(
    phi: &ModuleMap,
    domain_reference: &str,
    codomain_reference: &str,
    path: &Path,
) -> Result<()> {
    write_json(
        &MapFile {
            domain: domain_reference.to_string(),
            codomain: codomain_reference.to_string(),
            mat: matrix_rows(phi.mat()),
        },
        path,
    )
}
