//! On-disk map format `odmap-v1`.

use crate::error::{Error, Result};
use crate::map::OrientedMap;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const MAP_FORMAT: &str = "odmap-v1";

#[derive(Debug, Serialize, Deserialize)]
pub struct MapFile {
    pub format: String,
    pub cycle_graph: bool,
    pub v: usize,
    pub alpha: Vec<(usize, usize)>,
}

impl MapFile {
    pub fn from_map(map: &OrientedMap) -> MapFile {
        MapFile {
            format: MAP_FORMAT.to_string(),
            cycle_graph: map.is_cycle_graph(),
            v: map.vertex_count(),
            alpha: map.edge_pairs(),
        }
    }

    pub fn into_map(self) -> Result<OrientedMap> {
        if self.format != MAP_FORMAT {
            return Err(Error::FormatVersionMismatch {
                expected: MAP_FORMAT.to_string(),
                found: self.format,
            });
        }
        if self.cycle_graph {
            if self.v != 0 || !self.alpha.is_empty() {
                return Err(Error::InvalidInvolution("cycle graph with vertex data".into()));
            }
            return Ok(OrientedMap::cycle_graph());
        }
        OrientedMap::from_pairs(self.v, &self.alpha)
    }
}

pub fn map_to_json(map: &OrientedMap) -> String {
    serde_json::to_string_pretty(&MapFile::from_map(map)).expect("map serialization")
}

pub fn map_from_json(text: &str) -> Result<OrientedMap> {
    let file: MapFile = serde_json::from_str(text)?;
    file.into_map()
}

pub fn write_map(map: &OrientedMap, path: &Path) -> Result<()> {
    std::fs::write(path, map_to_json(map))?;
    Ok(())
}

pub fn read_map(path: &Path) -> Result<OrientedMap> {
    map_from_json(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::samples;

    #[test]
    fn map_round_trip() {
        for m in [samples::infinity(), samples::necklace(3), OrientedMap::cycle_graph()] {
            let text = map_to_json(&m);
            assert_eq!(map_from_json(&text).unwrap(), m);
        }
    }

    #[test]
    fn rejects_wrong_format_tag() {
        let text = map_to_json(&samples::infinity()).replace("odmap-v1", "odmap-v0");
        assert!(matches!(map_from_json(&text), Err(Error::FormatVersionMismatch { .. })));
    }

    #[test]
    fn rejects_orientation_violating_file() {
        let text = r#"{"format":"odmap-v1","cycle_graph":false,"v":1,"alpha":[[0,2],[1,3]]}"#;
        assert!(map_from_json(text).is_err());
    }
}
