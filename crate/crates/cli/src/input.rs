use std::fs;
use std::path::Path;

use polyface::io::lattice_from_json;
use polyface::{GradedLattice, PolytopeSpec, Result};

/// A lattice read from a JSON file, or realized from a spec string when no
/// file of that name exists.
pub fn load_lattice(input: &str) -> Result<(GradedLattice, String)> {
    let path = Path::new(input);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        return Ok((lattice_from_json(&text)?, input.to_string()));
    }
    if input.ends_with(".json") {
        return Err(std::io::Error::new(std::io::ErrorKind::NotFound, format!("{input}: no such file")).into());
    }
    let spec: PolytopeSpec = input.parse()?;
    Ok((spec.realize()?, spec.to_string()))
}
