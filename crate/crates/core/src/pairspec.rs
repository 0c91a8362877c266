//! Text format for a pair `(f, g)`:
//!
//! ```text
//! n=2
//! theta_f=0,1
//! phi_f=-,3
//! theta_g=1,2
//! phi_g=0,5
//! ```
//!
//! `phi` entries are automorphism ids in canonical order, or `-` exactly
//! where `theta` is 0. Blank lines and `#` comments are ignored.

use std::collections::HashMap;

use crate::endo::StructuredEndo;
use crate::error::{Error, Result};
use crate::group::AutGroup;

const KEYS: [&str; 5] = ["n", "theta_f", "phi_f", "theta_g", "phi_g"];

pub fn parse_pair(text: &str, auts: &AutGroup) -> Result<(StructuredEndo, StructuredEndo)> {
    let mut fields: HashMap<&str, &str> = HashMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| Error::PairSpec(format!("line {}: expected key=value", lineno + 1)))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(Error::PairSpec(format!("line {}: unknown key `{key}`", lineno + 1)));
        }
        if fields.insert(key, value.trim()).is_some() {
            return Err(Error::PairSpec(format!("duplicate key `{key}`")));
        }
    }
    let get = |k: &str| fields.get(k).copied().ok_or_else(|| Error::PairSpec(format!("missing `{k}`")));
    let n: usize = get("n")?
        .parse()
        .map_err(|_| Error::PairSpec(format!("bad n `{}`", fields["n"])))?;
    if n == 0 {
        return Err(Error::PairSpec("n must be positive".into()));
    }
    let f = endo(get("theta_f")?, get("phi_f")?, n, auts, "f")?;
    let g = endo(get("theta_g")?, get("phi_g")?, n, auts, "g")?;
    Ok((f, g))
}

fn endo(theta: &str, phi: &str, n: usize, auts: &AutGroup, which: &str) -> Result<StructuredEndo> {
    let theta: Vec<usize> = split(theta, which, "theta")?
        .into_iter()
        .map(|s| s.parse().map_err(|_| Error::PairSpec(format!("theta_{which}: bad entry `{s}`"))))
        .collect::<Result<_>>()?;
    let phis: Vec<Option<usize>> = split(phi, which, "phi")?
        .into_iter()
        .map(|s| match s {
            "-" => Ok(None),
            _ => s.parse().map(Some).map_err(|_| Error::PairSpec(format!("phi_{which}: bad entry `{s}`"))),
        })
        .collect::<Result<_>>()?;
    if theta.len() != n || phis.len() != n {
        return Err(Error::PairSpec(format!("{which}: expected {n} entries")));
    }
    StructuredEndo::new(theta, phis, auts).map_err(|e| Error::PairSpec(format!("{which}: {e}")))
}

fn split<'a>(s: &'a str, which: &str, key: &str) -> Result<Vec<&'a str>> {
    if s.is_empty() {
        return Err(Error::PairSpec(format!("{key}_{which} is empty")));
    }
    Ok(s.split(',').map(str::trim).collect())
}

pub fn render_pair(f: &StructuredEndo, g: &StructuredEndo) -> String {
    let join_theta = |e: &StructuredEndo| e.theta().iter().map(usize::to_string).collect::<Vec<_>>().join(",");
    let join_phi = |e: &StructuredEndo| {
        e.phis()
            .iter()
            .map(|p| p.map_or_else(|| "-".to_string(), |a| a.to_string()))
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "n={}\ntheta_f={}\nphi_f={}\ntheta_g={}\nphi_g={}\n",
        f.n(),
        join_theta(f),
        join_phi(f),
        join_theta(g),
        join_phi(g)
    )
}
