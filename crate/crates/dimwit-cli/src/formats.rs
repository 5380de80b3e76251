//! JSON document formats for behaviours, witnesses, strategies and quantum
//! models, plus the ratio-series CSV.
//!
//! All documents are plain JSON. Behaviour and witness tables are arrays of
//! `|X|` rows with `|Y|·|B|` numbers each (column index `y·|B| + b`); model
//! matrices store complex entries as `[re, im]` pairs. Writers emit 17
//! significant digits, so a written file reloads to bit-identical matrices;
//! loaders run the full library validation.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use dimwit_core::linalg::{Complex64, ComplexMatrix, RealMatrix};
use dimwit_core::statedisc::RatioRow;
use dimwit_core::{Behaviour, DeterministicStrategy, QuantumModel, Scenario, Witness};
use serde::Deserialize;

use crate::numfmt::file_number;
use crate::CliError;

#[derive(Deserialize)]
struct TableDoc {
    nx: usize,
    ny: usize,
    nb: usize,
    #[serde(default)]
    p: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    g: Option<Vec<Vec<f64>>>,
}

#[derive(Deserialize)]
struct StrategyDoc {
    d: usize,
    f: Vec<usize>,
    g: Vec<Vec<usize>>,
}

#[derive(Deserialize)]
struct ModelDoc {
    dim: usize,
    states: Vec<Vec<Vec<[f64; 2]>>>,
    povms: Vec<Vec<Vec<Vec<[f64; 2]>>>>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(path.to_path_buf(), e.to_string()))
}

fn table_matrix(doc: &TableDoc, rows: Vec<Vec<f64>>, path: &Path) -> Result<RealMatrix, CliError> {
    if rows.len() != doc.nx || rows.iter().any(|r| r.len() != doc.ny * doc.nb) {
        return Err(CliError::Parse(
            path.to_path_buf(),
            format!(
                "table must be {} rows of {} numbers",
                doc.nx,
                doc.ny * doc.nb
            ),
        ));
    }
    Ok(RealMatrix::new(
        doc.nx,
        doc.ny * doc.nb,
        rows.into_iter().flatten().collect(),
    )?)
}

pub fn read_behaviour(path: &Path) -> Result<Behaviour, CliError> {
    let mut doc: TableDoc = read_json(path)?;
    let rows = doc
        .p
        .take()
        .ok_or_else(|| CliError::Parse(path.to_path_buf(), "missing behaviour field `p`".into()))?;
    let scenario = Scenario::new(doc.nx, doc.ny, doc.nb)?;
    let matrix = table_matrix(&doc, rows, path)?;
    Ok(Behaviour::new(scenario, matrix)?)
}

pub fn read_witness(path: &Path) -> Result<Witness, CliError> {
    let mut doc: TableDoc = read_json(path)?;
    let rows = doc
        .g
        .take()
        .ok_or_else(|| CliError::Parse(path.to_path_buf(), "missing witness field `g`".into()))?;
    let scenario = Scenario::new(doc.nx, doc.ny, doc.nb)?;
    let matrix = table_matrix(&doc, rows, path)?;
    Ok(Witness::new(scenario, matrix)?)
}

pub fn read_model(path: &Path) -> Result<QuantumModel, CliError> {
    let doc: ModelDoc = read_json(path)?;
    let to_matrix = |rows: &Vec<Vec<[f64; 2]>>, what: &str| -> Result<ComplexMatrix, CliError> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Parse(
                path.to_path_buf(),
                format!("{what} is not square"),
            ));
        }
        let entries = rows
            .iter()
            .flatten()
            .map(|[re, im]| Complex64::new(*re, *im))
            .collect();
        Ok(ComplexMatrix::new(n, n, entries)?)
    };
    let states = doc
        .states
        .iter()
        .enumerate()
        .map(|(x, rows)| to_matrix(rows, &format!("state {x}")))
        .collect::<Result<Vec<_>, _>>()?;
    let povms = doc
        .povms
        .iter()
        .enumerate()
        .map(|(y, povm)| {
            povm.iter()
                .enumerate()
                .map(|(b, rows)| to_matrix(rows, &format!("POVM element (y={y}, b={b})")))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(QuantumModel::new(doc.dim, states, povms)?)
}

pub fn read_strategy(path: &Path) -> Result<DeterministicStrategy, CliError> {
    let doc: StrategyDoc = read_json(path)?;
    Ok(DeterministicStrategy::new(doc.d, doc.f, doc.g)?)
}

fn write_table(scenario: Scenario, matrix: &RealMatrix, field: &str) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"nx\": {},", scenario.nx());
    let _ = writeln!(out, "  \"ny\": {},", scenario.ny());
    let _ = writeln!(out, "  \"nb\": {},", scenario.nb());
    let _ = writeln!(out, "  \"{field}\": [");
    for row in 0..matrix.rows() {
        let cells: Vec<String> = (0..matrix.cols())
            .map(|col| file_number(matrix.get(row, col)))
            .collect();
        let comma = if row + 1 < matrix.rows() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{comma}", cells.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

pub fn behaviour_document(behaviour: &Behaviour) -> String {
    write_table(behaviour.scenario(), behaviour.matrix(), "p")
}

pub fn witness_document(witness: &Witness) -> String {
    write_table(witness.scenario(), witness.matrix(), "g")
}

pub fn strategy_document(strategy: &DeterministicStrategy) -> String {
    let f: Vec<String> = strategy.coding().iter().map(usize::to_string).collect();
    let g: Vec<String> = strategy
        .decoding()
        .iter()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(usize::to_string).collect();
            format!("[{}]", cells.join(","))
        })
        .collect();
    format!(
        "{{\"d\":{},\"f\":[{}],\"g\":[{}]}}",
        strategy.d(),
        f.join(","),
        g.join(",")
    )
}

pub fn model_document(model: &QuantumModel) -> String {
    let matrix_json = |m: &ComplexMatrix| -> String {
        let rows: Vec<String> = (0..m.rows())
            .map(|i| {
                let cells: Vec<String> = (0..m.cols())
                    .map(|j| {
                        let z = m.get(i, j);
                        format!("[{}, {}]", file_number(z.re), file_number(z.im))
                    })
                    .collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("[{}]", rows.join(", "))
    };
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"dim\": {},", model.dim());
    out.push_str("  \"states\": [\n");
    for (x, rho) in model.states().iter().enumerate() {
        let comma = if x + 1 < model.states().len() {
            ","
        } else {
            ""
        };
        let _ = writeln!(out, "    {}{comma}", matrix_json(rho));
    }
    out.push_str("  ],\n  \"povms\": [\n");
    for (y, povm) in model.povms().iter().enumerate() {
        let elements: Vec<String> = povm.iter().map(&matrix_json).collect();
        let comma = if y + 1 < model.povms().len() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{comma}", elements.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}

/// CSV for the classical-to-quantum ratio series: header plus one row per
/// even `N`, 17 significant digits, newline terminated.
pub fn ratio_csv(rows: &[RatioRow]) -> String {
    let mut out = String::from("N,B_C,B_Q,ratio\n");
    for row in rows {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            row.n,
            file_number(row.classical),
            file_number(row.quantum),
            file_number(row.ratio)
        );
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::Io(path.to_path_buf(), e))
}
