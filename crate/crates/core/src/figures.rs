//! Sweeps of MEMS components over state families, with CSV output.
//!
//! CSV schema: header `n,i,s_i,closed_form`, one row per `(n, i)`, numbers
//! with 12 significant digits, `.` as decimal separator, LF line endings.
//! `closed_form` is empty where no closed form is known.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{MemsError, Result};
use crate::library;
use crate::mems::{cluster_s2_closed_form, s_component, w_state_closed_form};
use crate::state::PureState;

pub const CSV_HEADER: &str = "n,i,s_i,closed_form";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    W,
    Ghz,
    Cluster,
}

impl Family {
    pub fn build(self, n: usize) -> Result<PureState> {
        match self {
            Family::W => library::w(n),
            Family::Ghz => library::ghz(n),
            Family::Cluster => library::linear_cluster(n),
        }
    }

    /// Known closed form of `S_i` for this family, if any.
    pub fn closed_form(self, n: usize, i: usize) -> Option<f64> {
        match self {
            Family::W => w_state_closed_form(n, i).ok(),
            Family::Ghz => (i >= 1 && i <= n / 2).then_some(1.0),
            Family::Cluster => match i {
                1 if n >= 2 => Some(1.0),
                2 => cluster_s2_closed_form(n).ok(),
                _ => None,
            },
        }
    }
}

impl FromStr for Family {
    type Err = MemsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "w" => Ok(Family::W),
            "ghz" => Ok(Family::Ghz),
            "cluster" => Ok(Family::Cluster),
            other => Err(MemsError::Parse {
                context: "family".into(),
                message: format!("unknown family `{other}` (expected w, ghz or cluster)"),
            }),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::W => "w",
            Family::Ghz => "ghz",
            Family::Cluster => "cluster",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub n: usize,
    pub i: usize,
    pub s_i: f64,
    pub closed_form: Option<f64>,
}

impl SweepRow {
    pub fn discrepancy(&self) -> Option<f64> {
        self.closed_form.map(|c| (self.s_i - c).abs())
    }
}

/// `S_i` for every `n` in `sizes` and every requested `i <= n/2`; larger
/// components are skipped for that `n`.
pub fn sweep(family: Family, sizes: &[usize], components: &[usize]) -> Result<Vec<SweepRow>> {
    let mut rows = Vec::new();
    for &n in sizes {
        let state = family.build(n)?;
        for &i in components.iter().filter(|&&i| i >= 1 && i <= n / 2) {
            rows.push(SweepRow {
                n,
                i,
                s_i: s_component(&state, i)?,
                closed_form: family.closed_form(n, i),
            });
        }
    }
    Ok(rows)
}

/// Rows whose value differs from the closed form by more than `tol`.
pub fn discrepancies(rows: &[SweepRow], tol: f64) -> Vec<SweepRow> {
    rows.iter()
        .filter(|r| r.discrepancy().is_some_and(|d| d > tol))
        .copied()
        .collect()
}

/// Formats like C's `%.{digits}g`: shortest of fixed or exponent notation,
/// trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: String| {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    };
    if exp < -4 || exp >= digits as i32 {
        format!("{}e{exp}", trim(mantissa.to_owned()))
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim(format!("{:.*}", decimals, x))
    }
}

pub fn to_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        let cf = r.closed_form.map(|c| format_significant(c, 12)).unwrap_or_default();
        out.push_str(&format!("{},{},{},{}\n", r.n, r.i, format_significant(r.s_i, 12), cf));
    }
    out
}
