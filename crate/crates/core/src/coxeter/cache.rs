use std::fs;
use std::path::{Path, PathBuf};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::catalog::GroupDescriptor;
use super::matrix::{enumerate_group, is_orthogonal, Entry, GroupElement, Mat4};
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, rational_to_string, QuadraticNumber};

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_ENV: &str = "TESSPEC_CACHE_DIR";

#[derive(Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    group: String,
    order: u64,
    root: u32,
    elements: Vec<Vec<[String; 2]>>,
    sha256: String,
}

fn encode(elements: &[GroupElement]) -> Vec<Vec<[String; 2]>> {
    elements
        .iter()
        .map(|g| {
            g.matrix
                .iter()
                .flatten()
                .map(|e| {
                    let q = e.to_quadratic();
                    [rational_to_string(&q.a), rational_to_string(&q.b)]
                })
                .collect()
        })
        .collect()
}

fn digest(elements: &[Vec<[String; 2]>]) -> String {
    let body = serde_json::to_string(elements).expect("strings serialize");
    hex::encode(Sha256::digest(body.as_bytes()))
}

pub fn cache_path(dir: &Path, desc: &GroupDescriptor) -> PathBuf {
    dir.join(format!("{}.json", desc.name.cli_name()))
}

pub fn cache_store(desc: &GroupDescriptor, elements: &[GroupElement], path: &Path) -> Result<()> {
    let enc = encode(elements);
    let file = CacheFile {
        version: CACHE_VERSION,
        group: desc.name.cli_name(),
        order: elements.len() as u64,
        root: 5,
        sha256: digest(&enc),
        elements: enc,
    };
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    fs::write(path, serde_json::to_vec(&file).map_err(|e| Error::Io(e.to_string()))?)?;
    Ok(())
}

pub fn cache_load(desc: &GroupDescriptor, path: &Path) -> Result<Vec<GroupElement>> {
    let bytes = fs::read(path)?;
    let file: CacheFile = serde_json::from_slice(&bytes).map_err(|e| Error::CacheCorrupt(e.to_string()))?;
    if file.version != CACHE_VERSION {
        return Err(Error::CacheVersion(format!("version {} != {CACHE_VERSION}", file.version)));
    }
    if file.group != desc.name.cli_name() {
        return Err(Error::CacheVersion(format!("file holds {}, wanted {}", file.group, desc.name.cli_name())));
    }
    if digest(&file.elements) != file.sha256 {
        return Err(Error::CacheCorrupt("checksum mismatch".into()));
    }
    if file.elements.len() as u64 != file.order || file.order != desc.order {
        return Err(Error::CacheCorrupt("element count does not match order".into()));
    }
    let mut out = Vec::with_capacity(file.elements.len());
    for el in &file.elements {
        if el.len() != 16 {
            return Err(Error::CacheCorrupt("matrix is not 4x4".into()));
        }
        let mut m: Mat4 = [[Entry::ZERO; 4]; 4];
        for (k, [a, b]) in el.iter().enumerate() {
            let q = QuadraticNumber {
                a: parse_rational(a).map_err(|e| Error::CacheCorrupt(e.to_string()))?,
                b: parse_rational(b).map_err(|e| Error::CacheCorrupt(e.to_string()))?,
                root: 5,
            };
            m[k / 4][k % 4] = Entry::from_quadratic(&q).map_err(|e| Error::CacheCorrupt(e.to_string()))?;
        }
        out.push(m);
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(out.len() as u64);
    for m in out.choose_multiple(&mut rng, 10) {
        if !is_orthogonal(m) {
            return Err(Error::CacheCorrupt("non-orthogonal element".into()));
        }
    }
    out.into_iter()
        .map(|m| GroupElement::from_matrix(m).map_err(|e| Error::CacheCorrupt(e.to_string())))
        .collect()
}

/// Cache directory from an explicit path or the environment.
pub fn cache_dir(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit.map(Path::to_path_buf).or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from))
}

/// Load from the cache when present and valid, else enumerate (and store).
pub fn load_or_enumerate(desc: &GroupDescriptor, dir: Option<&Path>) -> Result<Vec<GroupElement>> {
    let Some(dir) = dir else {
        return enumerate_group(desc);
    };
    let path = cache_path(dir, desc);
    if path.exists() {
        if let Ok(els) = cache_load(desc, &path) {
            return Ok(els);
        }
    }
    let els = enumerate_group(desc)?;
    cache_store(desc, &els, &path)?;
    Ok(els)
}
