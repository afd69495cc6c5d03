use std::fs;
use std::path::Path;

use k3lat::json::{named_isometry, named_lattice, parse_isometry, parse_lattice, parse_plane};
use k3lat::roots::RationalPlane;
use k3lat::{Error, Isometry, Lattice, Result};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(Path::new(path)).map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))
}

/// A built-in lattice name or a path to a lattice JSON file.
pub fn lattice(arg: &str) -> Result<Lattice> {
    match named_lattice(arg) {
        Some(l) => Ok(l),
        None => parse_lattice(&read(arg)?),
    }
}

/// A built-in isometry name or a path to an isometry JSON file.
pub fn isometry(arg: &str) -> Result<Isometry> {
    match named_isometry(arg) {
        Some(a) => a,
        None => parse_isometry(&read(arg)?),
    }
}

pub fn plane(path: &str) -> Result<RationalPlane> {
    parse_plane(&read(path)?)
}
