use anyhow::Result;
use serde_json::json;

use chromatic_core::graph::io::to_graph6;
use chromatic_core::verify::{compare_oracle, Oracle};

use crate::render::{int, parse_error};
use crate::{input, Format, Source};

/// Returns `false` on any mismatch, parse error or graph over the oracle
/// budget.
pub fn run(oracle: Oracle, source: &Source, seed: u64, format: Format) -> Result<bool> {
    let mut clean = true;
    for record in input::records(source)? {
        let record = match record {
            Ok(record) => record,
            Err(error) => {
                clean = false;
                match format {
                    Format::Json => println!("{}", parse_error(&error)),
                    Format::Text => eprintln!("error: {error}"),
                }
                continue;
            }
        };
        let graph6 = to_graph6(&record.graph);
        let comparison = match compare_oracle(&record.graph, oracle, seed) {
            Ok(comparison) => comparison,
            Err(error) => {
                clean = false;
                match format {
                    Format::Json => {
                        println!("{}", json!({ "line": record.line, "graph6": graph6, "error": error.to_string() }))
                    }
                    Format::Text => eprintln!("error: line {}: {graph6}: {error}", record.line),
                }
                continue;
            }
        };
        clean &= comparison.matches();
        match format {
            Format::Json => {
                let rows: Vec<_> = comparison
                    .rows
                    .iter()
                    .map(|row| {
                        json!({
                            "quantity": row.quantity,
                            "engine": int(&row.engine),
                            "oracle": int(&row.oracle),
                            "match": row.matches(),
                        })
                    })
                    .collect();
                let value = json!({
                    "line": record.line,
                    "graph6": graph6,
                    "oracle": oracle.name(),
                    "match": comparison.matches(),
                    "rows": rows,
                });
                println!("{value}");
            }
            Format::Text => {
                println!("{graph6}  n={}  oracle={}", record.graph.order(), oracle.name());
                let width = comparison.rows.iter().map(|r| r.quantity.len()).max().unwrap_or(0);
                println!("  {:<width$}  {:>12}  {:>12}", "quantity", "engine", "oracle");
                for row in &comparison.rows {
                    let flag = if row.matches() { "ok" } else { "MISMATCH" };
                    println!("  {:<width$}  {:>12}  {:>12}  {flag}", row.quantity, row.engine, row.oracle);
                }
            }
        }
    }
    Ok(clean)
}
