//! JSON state and ensemble files.
//!
//! State file:
//!
//! ```json
//! { "dims": [2, 2], "amps": [[0.7071067811865476, 0.0], [0.0, 0.0], [0.0, 0.0], [0.7071067811865476, 0.0]], "label": "bell" }
//! ```
//!
//! `amps[k]` is `[re, im]` of the basis state with flat index `k`, site 0
//! being the least significant digit. `label` is optional. Amplitudes need
//! not be normalized; loading rescales them.
//!
//! Ensemble file:
//!
//! ```json
//! { "members": [ { "weight": 0.5, "state": { "dims": [...], "amps": [...] } }, ... ] }
//! ```

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{MemsError, Result};
use crate::state::{Ensemble, PureState};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub amps: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleMember {
    pub weight: f64,
    pub state: StateFile,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EnsembleFile {
    pub members: Vec<EnsembleMember>,
}

impl From<&PureState> for StateFile {
    fn from(state: &PureState) -> Self {
        StateFile {
            dims: state.dims().to_vec(),
            amps: state.amps().iter().map(|a| [a.re, a.im]).collect(),
            label: state.label().map(str::to_owned),
        }
    }
}

impl StateFile {
    pub fn into_state(self) -> Result<PureState> {
        let amps = self.amps.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        let state = PureState::new(self.dims, amps)?;
        Ok(match self.label {
            Some(label) => state.with_label(label),
            None => state,
        })
    }
}

fn parse_error(context: &str, err: serde_json::Error) -> MemsError {
    MemsError::Parse {
        context: context.to_owned(),
        message: err.to_string(),
    }
}

/// Parses a state document; `context` names the source in error messages.
pub fn parse_state(text: &str, context: &str) -> Result<PureState> {
    let file: StateFile = serde_json::from_str(text).map_err(|e| parse_error(context, e))?;
    file.into_state()
}

pub fn state_to_json(state: &PureState) -> String {
    serde_json::to_string_pretty(&StateFile::from(state)).expect("state serializes")
}

pub fn load_state(path: impl AsRef<Path>) -> Result<PureState> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_state(&text, &path.display().to_string())
}

pub fn save_state(state: &PureState, path: impl AsRef<Path>) -> Result<()> {
    let mut text = state_to_json(state);
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

pub fn parse_ensemble(text: &str, context: &str) -> Result<Ensemble> {
    let file: EnsembleFile = serde_json::from_str(text).map_err(|e| parse_error(context, e))?;
    let members = file
        .members
        .into_iter()
        .map(|m| Ok((m.weight, m.state.into_state()?)))
        .collect::<Result<Vec<_>>>()?;
    Ensemble::new(members)
}

pub fn load_ensemble(path: impl AsRef<Path>) -> Result<Ensemble> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)?;
    parse_ensemble(&text, &path.display().to_string())
}

pub fn ensemble_to_json(ensemble: &Ensemble) -> String {
    let file = EnsembleFile {
        members: ensemble
            .members()
            .iter()
            .map(|(weight, state)| EnsembleMember {
                weight: *weight,
                state: state.into(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("ensemble serializes")
}
