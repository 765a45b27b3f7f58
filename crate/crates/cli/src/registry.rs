//! Named-state registry and the `name:n` / file-path state specs.

use std::path::Path;

use mems_core::library;
use mems_core::io::load_state;
use mems_core::{MemsError, PureState};

use crate::error::{CliError, CliResult, EXIT_PARSE, EXIT_SIZE};

pub const REGISTRY: [&str; 7] = ["ghz", "w", "cluster", "phi4", "bell-product", "m4", "product"];

fn size_error(msg: String) -> CliError {
    CliError::new(EXIT_SIZE, msg)
}

fn need_n(name: &str, n: Option<usize>) -> CliResult<usize> {
    n.ok_or_else(|| size_error(format!("`{name}` needs a site count (--n or {name}:N)")))
}

fn fixed_four(name: &str, n: Option<usize>) -> CliResult<()> {
    match n {
        Some(n) if n != 4 => Err(size_error(format!("`{name}` is a 4-qubit state, got n = {n}"))),
        _ => Ok(()),
    }
}

/// Builds a registry state. `n` counts sites, so `bell-product` needs it even.
pub fn build_named(name: &str, n: Option<usize>, dims: Option<&[usize]>) -> CliResult<PureState> {
    let state = match name {
        "ghz" => library::ghz(need_n(name, n)?)?,
        "w" => library::w(need_n(name, n)?)?,
        "cluster" => library::linear_cluster(need_n(name, n)?)?,
        "phi4" => {
            fixed_four(name, n)?;
            library::phi4_literal()
        }
        "m4" => {
            fixed_four(name, n)?;
            library::m4()
        }
        "bell-product" => {
            let n = need_n(name, n)?;
            if n % 2 != 0 {
                return Err(size_error(format!("bell-product needs an even site count, got {n}")));
            }
            library::bell_product(n / 2)?
        }
        "product" => match (dims, n) {
            (Some(d), _) => library::product_state(d)?,
            (None, Some(n)) => library::product_state(&vec![2; n])?,
            (None, None) => return Err(size_error("`product` needs --n or --dims".into())),
        },
        other => {
            return Err(CliError::new(
                EXIT_PARSE,
                format!("unknown state `{other}`; known states: {}", REGISTRY.join(", ")),
            ))
        }
    };
    Ok(state)
}

fn load(path: &Path) -> CliResult<PureState> {
    load_state(path).map_err(|e| match e {
        MemsError::Io(io) => CliError::new(EXIT_PARSE, format!("cannot read {}: {io}", path.display())),
        other => other.into(),
    })
}

pub fn from_file(path: &Path) -> CliResult<PureState> {
    load(path)
}

/// `name:n`, a bare registry name, or a path to a state file.
pub fn parse_spec(spec: &str) -> CliResult<PureState> {
    let (name, n) = match spec.split_once(':') {
        Some((name, n)) if REGISTRY.contains(&name) => {
            let n = n
                .parse::<usize>()
                .map_err(|_| CliError::new(EXIT_PARSE, format!("bad size in `{spec}`")))?;
            (name, Some(n))
        }
        _ => (spec, None),
    };
    if REGISTRY.contains(&name) {
        return build_named(name, n, None);
    }
    let path = Path::new(spec);
    if path.exists() {
        return load(path);
    }
    Err(CliError::new(
        EXIT_PARSE,
        format!(
            "`{spec}` is neither a state file nor a known state; known states: {}",
            REGISTRY.join(", ")
        ),
    ))
}

/// `7` or `3:20`, inclusive.
pub fn parse_range(text: &str, what: &str) -> CliResult<Vec<usize>> {
    let bad = || CliError::new(EXIT_PARSE, format!("bad {what} `{text}`: expected N, LO:HI or a,b,c"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    if let Some((lo, hi)) = text.split_once(':') {
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(bad());
        }
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(num).collect()
}
