use std::fs::File;
use std::io::{self, BufRead, BufReader};

use anyhow::{Context, Result};

use chromatic_core::graph::io::{edge_list_records, graph6_records, GraphRecord, ParseError};

use crate::Source;

pub type Records = Box<dyn Iterator<Item = Result<GraphRecord, ParseError>>>;

fn reader(path: &str) -> Result<Box<dyn BufRead>> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path).with_context(|| format!("cannot open {path}"))?;
    Ok(Box::new(BufReader::new(file)))
}

/// Opens the source as a stream of graph records.
pub fn records(source: &Source) -> Result<Records> {
    let reader = reader(&source.input)?;
    Ok(if source.edge_list {
        Box::new(edge_list_records(reader))
    } else {
        Box::new(graph6_records(reader))
    })
}
