use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use serde_json::Value;

use ferrers::complex::{ComplexFile, LabeledCellComplex};
use ferrers::graphs::{Graph, GraphFile};
use ferrers::monomial::{IdealFile, MonomialIdeal};
use ferrers::shape::ShapeFile;

/// A parsed input file, recognized by its keys.
pub enum Input {
    /// Shape files are validated by the command so it can report the reason.
    Shape(ShapeFile),
    Ideal(MonomialIdeal),
    Complex(LabeledCellComplex),
    Graph(Graph),
}

impl Input {
    pub fn kind(&self) -> &'static str {
        match self {
            Input::Shape(_) => "shape",
            Input::Ideal(_) => "ideal",
            Input::Complex(_) => "complex",
            Input::Graph(_) => "graph",
        }
    }
}

pub fn load(path: &Path) -> Result<Input> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {} as JSON", path.display()))?;
    let has = |k: &str| value.get(k).is_some();
    if has("lambda") {
        let file: ShapeFile = serde_json::from_value(value).context("shape file")?;
        Ok(Input::Shape(file))
    } else if has("variables") {
        let file: IdealFile = serde_json::from_value(value).context("ideal file")?;
        Ok(Input::Ideal(MonomialIdeal::from_file(&file)?))
    } else if has("faces") {
        let file: ComplexFile = serde_json::from_value(value).context("complex file")?;
        Ok(Input::Complex(LabeledCellComplex::from_file(&file)?))
    } else if has("edges") {
        let file: GraphFile = serde_json::from_value(value).context("graph file")?;
        Ok(Input::Graph(Graph::from_file(&file)?))
    } else {
        bail!(
            "{}: expected a shape, ideal, complex, or graph file",
            path.display()
        )
    }
}
