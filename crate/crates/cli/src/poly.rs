use anyhow::Result;
use serde_json::json;

use chromatic_core::chromatic::{b_distribution, chromatic_polynomial, epsilon_mean_of, Coefficients};
use chromatic_core::graph::io::to_graph6;

use crate::render::{int, ints, list, parse_error, rational, rational_text};
use crate::{input, Format, Source};

/// Returns `false` if any record failed to parse or compute.
pub fn run(source: &Source, format: Format) -> Result<bool> {
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
        let g = &record.graph;
        let p = chromatic_polynomial(g);
        let a = Coefficients::from_polynomial(&p)?;
        let epsilon = epsilon_mean_of(&p)?;
        let b = b_distribution(g);
        match format {
            Format::Json => {
                let value = json!({
                    "line": record.line,
                    "graph6": to_graph6(g),
                    "n": g.order(),
                    "m": g.edge_count(),
                    "coefficients": ints(p.coeffs()),
                    "a": ints(a.as_slice()),
                    "alpha": int(&a.total()),
                    "epsilon": rational(&epsilon),
                    "b": b.iter().map(rational).collect::<Vec<_>>(),
                });
                println!("{value}");
            }
            Format::Text => {
                println!("{}  n={} m={}", to_graph6(g), g.order(), g.edge_count());
                println!("  P(x) = {p}");
                println!("  coefficients = [{}]", list(p.coeffs()));
                println!("  a = ({})", list(a.as_slice()));
                println!("  epsilon = {}", rational_text(&epsilon));
                println!("  b = ({})", b.iter().map(rational_text).collect::<Vec<_>>().join(", "));
            }
        }
    }
    Ok(clean)
}
