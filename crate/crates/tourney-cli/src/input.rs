//! Input sources and output sinks shared by the subcommands.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tourney::walks::Digraph;
use tourney::{RotationalSymbol, Tournament};

pub type AnyError = Box<dyn std::error::Error>;

/// Reads tournaments, one `n=<n> bits=<hex>` line per tournament, from a
/// file or stdin (`-`). Blank lines and `#` comments are skipped.
pub fn read_tournaments(input: &str) -> Result<Vec<Tournament>, AnyError> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(input)?
    };
    let mut ts = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        ts.push(Tournament::from_text(line)?);
    }
    if ts.is_empty() {
        return Err("no tournaments in input".into());
    }
    Ok(ts)
}

/// Compact generator spec: `transitive:5`, `consecutive:9`, `qr:7`,
/// `random:6:42` (order, seed), `rotational:7:1,2,4` (modulus, symbol).
pub fn parse_gen_spec(spec: &str) -> Result<Tournament, AnyError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let usage = "expected kind:args, e.g. transitive:5, qr:7, random:6:42, rotational:7:1,2,4";
    let t = match parts.as_slice() {
        ["transitive", n] => Tournament::transitive(n.parse()?)?,
        ["consecutive", n] => Tournament::consecutive_rotational(n.parse()?)?,
        ["qr", p] => Tournament::quadratic_residue_tournament(p.parse()?)?,
        ["random", n, seed] => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.parse()?);
            Tournament::random(n.parse()?, &mut rng)?
        }
        ["rotational", n, members] => {
            let members: Vec<usize> = members
                .split(',')
                .map(str::parse)
                .collect::<Result<_, _>>()?;
            Tournament::rotational(&RotationalSymbol::new(n.parse()?, &members)?)
        }
        _ => return Err(usage.into()),
    };
    Ok(t)
}

/// Gathers the tournaments named by `--input` and/or `--gen`.
pub fn gather(input: Option<&str>, gen: &[String]) -> Result<Vec<Tournament>, AnyError> {
    let mut ts = Vec::new();
    for spec in gen {
        ts.push(parse_gen_spec(spec)?);
    }
    if let Some(path) = input {
        ts.extend(read_tournaments(path)?);
    }
    if ts.is_empty() {
        return Err("no input; pass --input FILE|- or --gen KIND:ARGS".into());
    }
    Ok(ts)
}

/// Reads a digraph from a JSON file of the form `{"n": 3, "arcs": [[0,1], ...]}`.
pub fn read_digraph(path: &str) -> Result<Digraph, AnyError> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path)?
    };
    Ok(serde_json::from_str(&text)?)
}

/// Writes the payload to `--out` or stdout.
pub fn emit(out: Option<&PathBuf>, payload: &str) -> Result<(), AnyError> {
    match out {
        Some(path) => fs::write(Path::new(path), payload)?,
        None => print!("{payload}"),
    }
    Ok(())
}
