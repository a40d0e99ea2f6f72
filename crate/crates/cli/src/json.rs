//! Serde views of complexes and margin tables.
//!
//! A complex is `{"n", "facets", "fVector", "meta"?}`; margin tables are
//! arrays of `{"S", "left", "right", "margin"}`.

use serde::{Deserialize, Serialize};

use extshift_core::{DominanceReport, FaceSet, ShiftOutcome, SimplicialComplex};

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub prime: u64,
    pub seeds: Vec<u64>,
    pub trials: usize,
    pub consensus: bool,
}

impl From<&ShiftOutcome> for Meta {
    fn from(o: &ShiftOutcome) -> Self {
        Meta { prime: o.prime, seeds: o.seeds.clone(), trials: o.trials, consensus: o.consensus }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ComplexJson {
    pub n: usize,
    pub facets: Vec<Vec<usize>>,
    pub f_vector: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl ComplexJson {
    pub fn new(complex: &SimplicialComplex, meta: Option<Meta>) -> Self {
        ComplexJson {
            n: complex.n(),
            facets: complex.facets().into_iter().map(|f| f.iter().collect()).collect(),
            f_vector: complex.f_vector(),
            meta,
        }
    }

    /// Rebuilds the complex; `fVector` must agree with the facets.
    pub fn to_complex(&self) -> Result<SimplicialComplex, CliError> {
        let facets = self
            .facets
            .iter()
            .map(|f| FaceSet::from_vertices(f.iter().copied()))
            .collect::<Result<Vec<_>, _>>()?;
        let c = SimplicialComplex::from_facets(self.n, facets)?;
        if c.f_vector() != self.f_vector {
            return Err(CliError::Usage(format!(
                "fVector {:?} does not match the facets ({:?})",
                self.f_vector,
                c.f_vector()
            )));
        }
        Ok(c)
    }
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, CliError> {
    let j: ComplexJson =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    j.to_complex()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MarginJson {
    #[serde(rename = "S")]
    pub s: Vec<usize>,
    pub left: usize,
    pub right: usize,
    pub margin: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeJson {
    pub size: usize,
    pub witness: Option<Vec<usize>>,
    pub margins: Vec<MarginJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ReportJson {
    pub count_order: String,
    pub verdict: String,
    pub witness: Option<Vec<usize>>,
    pub min_margin: Option<i64>,
    pub degrees: Vec<DegreeJson>,
}

fn verts(s: FaceSet) -> Vec<usize> {
    s.iter().collect()
}

impl From<&DominanceReport> for ReportJson {
    fn from(r: &DominanceReport) -> Self {
        ReportJson {
            count_order: r.order.name().into(),
            verdict: r.verdict.name().into(),
            witness: r.witness.map(verts),
            min_margin: r.min_margin(),
            degrees: r
                .per_degree
                .iter()
                .map(|d| DegreeJson {
                    size: d.size,
                    witness: d.witness.map(verts),
                    margins: d
                        .rows
                        .iter()
                        .map(|m| MarginJson {
                            s: verts(m.face),
                            left: m.left,
                            right: m.right,
                            margin: m.margin(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let c = SimplicialComplex::from_facets(
            5,
            [FaceSet::from_vertices([1, 2, 3]).unwrap(), FaceSet::from_vertices([3, 5]).unwrap()],
        )
        .unwrap();
        let text = serde_json::to_string(&ComplexJson::new(&c, None)).unwrap();
        assert_eq!(text, r#"{"n":5,"facets":[[1,2,3],[3,5]],"fVector":[1,4,4,1]}"#);
        assert_eq!(parse_complex(&text).unwrap(), c);
        let empty = SimplicialComplex::empty(3).unwrap();
        let text = serde_json::to_string(&ComplexJson::new(&empty, None)).unwrap();
        assert_eq!(parse_complex(&text).unwrap(), empty);
    }

    #[test]
    fn rejects_inconsistent_f_vector() {
        assert!(parse_complex(r#"{"n":3,"facets":[[1,2]],"fVector":[1,3,1]}"#).is_err());
        assert!(parse_complex(r#"{"n":3,"facets":[[1,4]],"fVector":[1,2,1]}"#).is_err());
    }
}
