//! Sectioned instance files.
//!
//! ```text
//! [ring]
//! x = x0, x1, x2
//! y = y0, y1, y2
//!
//! [cremona]
//! x1*x2
//! x0*x2
//! x0*x1
//!
//! [cremona_inverse]
//! y1*y2
//! y0*y2
//! y0*y1
//!
//! [f]
//! x0 + 2*x1 + 3*x2
//!
//! [g]
//! x0^2*x1 - x2^3
//!
//! [options]
//! seed = 7
//! ```
//!
//! Lines starting with `#` are comments. `y` defaults to `y0, ..., yn`.

use std::collections::BTreeMap;
use std::path::Path;

use crate::birational::{verify_cremona, RationalMapData, VerifiedCremona};
use crate::error::{Error, Result};
use crate::groebner::Limits;
use crate::implicitize::JonquieresData;
use crate::poly::{Polynomial, VariableSet};

const SECTIONS: [&str; 6] = ["ring", "cremona", "cremona_inverse", "f", "g", "options"];

/// A parsed instance; forms are kept with their source lines.
#[derive(Debug, Clone)]
pub struct InstanceFile {
    pub x: VariableSet,
    pub y: VariableSet,
    pub cremona: Vec<Polynomial>,
    pub cremona_inverse: Vec<Polynomial>,
    pub f: Option<Polynomial>,
    pub g: Option<Polynomial>,
    pub options: BTreeMap<String, String>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_form(ring: &VariableSet, text: &str, line: usize, indent: usize) -> Result<Polynomial> {
    let p = Polynomial::parse(ring, text).map_err(|e| match e {
        Error::Parse { column, message, .. } => parse_error(line, column + indent, message),
        other => parse_error(line, indent + 1, other.to_string()),
    })?;
    if !p.is_homogeneous() {
        return Err(parse_error(line, indent + 1, format!("form is not homogeneous: {p}")));
    }
    Ok(p)
}

fn parse_names(value: &str) -> Vec<String> {
    value
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

impl InstanceFile {
    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| parse_error(0, 0, format!("cannot read {}: {e}", path.display())))?;
        InstanceFile::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self> {
        // section name -> (line number, indent, content)
        let mut sections: BTreeMap<&str, Vec<(usize, usize, &str)>> = BTreeMap::new();
        let mut current: Option<&str> = None;
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            if let Some(name) = trimmed.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
                let name = name.trim();
                let Some(&known) = SECTIONS.iter().find(|s| **s == name) else {
                    return Err(parse_error(line, 1, format!("unknown section [{name}]")));
                };
                if sections.contains_key(known) {
                    return Err(parse_error(line, 1, format!("duplicate section [{name}]")));
                }
                sections.insert(known, Vec::new());
                current = Some(known);
                continue;
            }
            let Some(sec) = current else {
                return Err(parse_error(line, 1, "content before the first section"));
            };
            let indent = raw.len() - raw.trim_start().len();
            sections
                .get_mut(sec)
                .expect("section opened")
                .push((line, indent, trimmed));
        }

        let mut ring: BTreeMap<String, (usize, String)> = BTreeMap::new();
        for &(line, _, content) in sections.get("ring").map(Vec::as_slice).unwrap_or(&[]) {
            let Some((k, v)) = content.split_once('=') else {
                return Err(parse_error(line, 1, "expected `x = ...` or `y = ...`"));
            };
            ring.insert(k.trim().to_string(), (line, v.trim().to_string()));
        }
        let Some((xline, xnames)) = ring.get("x") else {
            return Err(parse_error(1, 1, "missing `x = ...` in [ring]"));
        };
        let x = VariableSet::new(&parse_names(xnames)).map_err(|e| parse_error(*xline, 1, e.to_string()))?;
        let y = match ring.get("y") {
            Some((line, names)) => {
                VariableSet::new(&parse_names(names)).map_err(|e| parse_error(*line, 1, e.to_string()))?
            }
            None => VariableSet::indexed("y", x.len()),
        };
        if y.len() != x.len() {
            return Err(parse_error(
                ring.get("y").map_or(1, |r| r.0),
                1,
                "x and y must have the same number of variables",
            ));
        }
        if x.concat(&y).is_err() {
            return Err(parse_error(xline.to_owned(), 1, "x and y names must be disjoint"));
        }

        let forms = |name: &str, r: &VariableSet| -> Result<Vec<Polynomial>> {
            sections
                .get(name)
                .map(Vec::as_slice)
                .unwrap_or(&[])
                .iter()
                .map(|&(line, indent, content)| parse_form(r, content, line, indent))
                .collect()
        };
        let cremona = forms("cremona", &x)?;
        let cremona_inverse = forms("cremona_inverse", &y)?;
        for (name, v) in [("cremona", &cremona), ("cremona_inverse", &cremona_inverse)] {
            if v.len() != x.len() {
                let line = sections.get(name).and_then(|s| s.first()).map_or(1, |e| e.0);
                return Err(parse_error(
                    line,
                    1,
                    format!("[{name}] needs {} forms, found {}", x.len(), v.len()),
                ));
            }
        }
        let single = |name: &str| -> Result<Option<Polynomial>> {
            let v = forms(name, &x)?;
            match v.len() {
                0 => Ok(None),
                1 => Ok(v.into_iter().next()),
                _ => Err(parse_error(
                    sections[name][1].0,
                    1,
                    format!("[{name}] takes a single form"),
                )),
            }
        };
        let f = single("f")?;
        let g = single("g")?;

        let mut options = BTreeMap::new();
        for &(line, _, content) in sections.get("options").map(Vec::as_slice).unwrap_or(&[]) {
            let Some((k, v)) = content.split_once('=') else {
                return Err(parse_error(line, 1, "expected `key = value`"));
            };
            options.insert(k.trim().to_string(), v.trim().to_string());
        }
        let instance = InstanceFile {
            x,
            y,
            cremona,
            cremona_inverse,
            f,
            g,
            options,
        };
        instance.check_degrees()?;
        Ok(instance)
    }

    fn check_degrees(&self) -> Result<()> {
        if let (Some(f), Some(g)) = (&self.f, &self.g) {
            let d = self.cremona.iter().find_map(Polynomial::total_degree).unwrap_or(0);
            let (df, dg) = (f.total_degree().unwrap_or(0), g.total_degree().unwrap_or(0));
            if dg != d + df {
                return Err(Error::Hypothesis(format!(
                    "degree relation deg g = deg G + deg f fails: {dg} != {d} + {df}"
                )));
            }
        }
        Ok(())
    }

    pub fn forward(&self) -> Result<RationalMapData> {
        RationalMapData::new(&self.x, &self.y, self.cremona.clone())
    }

    pub fn inverse(&self) -> Result<RationalMapData> {
        RationalMapData::new(&self.y, &self.x, self.cremona_inverse.clone())
    }

    pub fn verified(&self) -> Result<VerifiedCremona> {
        verify_cremona(&self.forward()?, &self.inverse()?)
    }

    pub fn jonquieres(&self, limits: Limits) -> Result<JonquieresData> {
        let (Some(f), Some(g)) = (&self.f, &self.g) else {
            return Err(Error::Hypothesis("the instance needs [f] and [g]".into()));
        };
        Ok(JonquieresData::new(self.verified()?, f.clone(), g.clone())?.with_limits(limits))
    }

    pub fn option_u64(&self, key: &str) -> Result<Option<u64>> {
        self.options
            .get(key)
            .map(|v| {
                v.parse::<u64>()
                    .map_err(|_| parse_error(0, 0, format!("option {key} must be an integer")))
            })
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PLANE: &str = "\
# standard involution
[ring]
x = x0, x1, x2

[cremona]
x1*x2
x0*x2
x0*x1

[cremona_inverse]
y1*y2
y0*y2
y0*y1

[f]
x0 + 2*x1 + 3*x2

[g]
x0^2*x1 - x2^3

[options]
seed = 7
";

    #[test]
    fn parses_plane_instance() {
        let inst = InstanceFile::parse(PLANE).unwrap();
        assert_eq!(inst.y.name(2), "y2");
        assert_eq!(inst.option_u64("seed").unwrap(), Some(7));
        let p = inst.jonquieres(Limits::UNLIMITED).unwrap();
        assert_eq!(p.d(), 2);
    }

    #[test]
    fn reports_positions() {
        let bad = PLANE.replace("x0 + 2*x1 + 3*x2", "x0 + 2*x1 + $");
        match InstanceFile::parse(&bad) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 16);
                assert_eq!(column, 13);
            }
            other => panic!("{other:?}"),
        }
        let inhom = PLANE.replace("x0 + 2*x1 + 3*x2", "x0 + x1^2");
        assert!(matches!(
            InstanceFile::parse(&inhom),
            Err(Error::Parse { line: 16, .. })
        ));
        let degree = PLANE.replace("x0^2*x1 - x2^3", "x0^2*x1*x2 - x2^4");
        assert!(matches!(InstanceFile::parse(&degree), Err(Error::Hypothesis(_))));
        assert!(matches!(
            InstanceFile::parse("[nope]\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
