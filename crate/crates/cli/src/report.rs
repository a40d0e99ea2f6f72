//! Plain-text rendering.

use std::fmt::Write as _;

use extshift_core::{DominanceReport, SimplicialComplex};

use crate::facet_file;
use crate::json::Meta;

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

/// A complex as a commented facet file, so the output can be fed back in.
pub fn complex_text(complex: &SimplicialComplex, meta: Option<&Meta>) -> String {
    let mut out = String::new();
    writeln!(out, "# f-vector: {}", join(&complex.f_vector())).unwrap();
    if let Some(m) = meta {
        writeln!(
            out,
            "# prime: {}  trials: {}  consensus: {}  seeds: {}",
            m.prime,
            m.trials,
            if m.consensus { "yes" } else { "no" },
            join(&m.seeds)
        )
        .unwrap();
    }
    out.push_str(&facet_file::format(complex));
    out
}

/// One labelled complex inside a larger report.
pub fn labelled_complex(label: &str, complex: &SimplicialComplex) -> String {
    let facets: Vec<String> = complex.facets().iter().map(ToString::to_string).collect();
    format!("{label}: f = ({}), facets {}\n", join(&complex.f_vector()), facets.join(" "))
}

pub fn margin_table(report: &DominanceReport) -> String {
    let mut out = String::new();
    writeln!(out, "counting order: {}", report.order).unwrap();
    for deg in &report.per_degree {
        match deg.witness {
            Some(w) => writeln!(out, "size {} (first difference at {w})", deg.size).unwrap(),
            None => writeln!(out, "size {}", deg.size).unwrap(),
        }
        let width = deg.rows.iter().map(|r| r.face.to_string().len()).max().unwrap_or(1).max(1);
        writeln!(out, "  {:<width$}  {:>5}  {:>5}  {:>6}", "S", "left", "right", "margin").unwrap();
        for r in &deg.rows {
            writeln!(
                out,
                "  {:<width$}  {:>5}  {:>5}  {:>6}",
                r.face.to_string(),
                r.left,
                r.right,
                r.margin()
            )
            .unwrap();
        }
    }
    out.push_str(&verdict_line(report));
    out
}

pub fn verdict_line(report: &DominanceReport) -> String {
    let mut line = format!("verdict: {}", report.verdict.name());
    if let Some(w) = report.witness {
        write!(line, " at {w}").unwrap();
    }
    if let Some(m) = report.min_margin() {
        write!(line, " (min margin {m}, {} strict)", report.strict_count()).unwrap();
    }
    line.push('\n');
    line
}

#[cfg(test)]
mod tests {
    use super::*;
    use extshift_core::{rev_dominance, FaceSet, TermOrder};

    #[test]
    fn complex_text_is_a_facet_file() {
        let c = SimplicialComplex::from_facets(3, [FaceSet::from_vertices([1, 2]).unwrap()]).unwrap();
        let meta = Meta { prime: 65537, seeds: vec![4, 5], trials: 2, consensus: true };
        let text = complex_text(&c, Some(&meta));
        assert!(text.contains("consensus: yes  seeds: 4 5"));
        assert_eq!(facet_file::parse(&text, "t").unwrap(), c);
        assert_eq!(labelled_complex("x", &c), "x: f = (1 2 1), facets {1,2}\n");
    }

    #[test]
    fn table_lists_every_subset() {
        let a = SimplicialComplex::simplex(3).unwrap();
        let r = rev_dominance(&a, &a, TermOrder::RevLex).unwrap();
        let t = margin_table(&r);
        assert_eq!(t.lines().filter(|l| l.starts_with("  {")).count(), 7);
        assert!(t.ends_with("verdict: equal (min margin 0, 0 strict)\n"));
    }
}
