//! Text, JSON, CSV, and LaTeX renderings. All four keep canonical term order.

use std::fmt::Write;
use std::str::FromStr;

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::skein::{knot_name, Indexing, InvariantSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Latex,
}

impl FromStr for OutputFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            "latex" => Ok(OutputFormat::Latex),
            _ => Err(Error::BadRange(format!("unknown format `{s}`"))),
        }
    }
}

fn csv_quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

/// A labelled list of polynomials, e.g. `[1]..[4]` of one family.
/// `label(n)` gives the LaTeX left-hand side.
pub fn render_numbers<F>(rows: &[(usize, LaurentPoly)], format: OutputFormat, label: F) -> String
where
    F: Fn(usize) -> String,
{
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for (n, p) in rows {
                let _ = writeln!(out, "[{n}] = {p}");
            }
        }
        OutputFormat::Json => {
            #[derive(serde::Serialize)]
            struct Row<'a> {
                n: usize,
                poly: &'a LaurentPoly,
            }
            let v: Vec<Row> = rows.iter().map(|(n, poly)| Row { n: *n, poly }).collect();
            out = serde_json::to_string(&v).expect("plain data serializes");
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("n,polynomial\n");
            for (n, p) in rows {
                let _ = writeln!(out, "{n},{}", csv_quote(&p.to_text()));
            }
        }
        OutputFormat::Latex => {
            for (n, p) in rows {
                let _ = writeln!(out, "${} = {}$", label(*n), p.to_latex());
            }
        }
    }
    out
}

/// Renders a series. `named` adds the torus-knot name column to text output.
pub fn render_series(series: &InvariantSeries, format: OutputFormat, named: bool) -> String {
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            let rows: Vec<(String, String, String)> = series
                .entries
                .iter()
                .enumerate()
                .filter_map(|(i, e)| {
                    let v = e.as_ref()?;
                    let n = series.torus_index(i);
                    let name = match series.indexing {
                        Indexing::Knot => knot_name(i),
                        Indexing::Link => format!("L({n},2)"),
                    };
                    let mut poly = v.to_string();
                    if v.is_az() {
                        poly.push_str("   [a,z]");
                    }
                    Some((n.to_string(), name, poly))
                })
                .collect();
            if named {
                let wn = rows.iter().map(|r| r.0.len()).max().unwrap_or(1).max(1);
                let wk = rows.iter().map(|r| r.1.len()).max().unwrap_or(4).max(4);
                let _ = writeln!(out, "{:>wn$}  {:<wk$}  polynomial", "n", "name");
                for (n, name, poly) in rows {
                    let _ = writeln!(out, "{n:>wn$}  {name:<wk$}  {poly}");
                }
            } else {
                for (n, _, poly) in rows {
                    let _ = writeln!(out, "P_{{{n},2}} = {poly}");
                }
            }
        }
        OutputFormat::Json => {
            out = series.to_json();
            out.push('\n');
        }
        OutputFormat::Csv => {
            out.push_str("n,polynomial\n");
            for (n, v) in series.present() {
                let _ = writeln!(out, "{n},{}", csv_quote(&v.poly().to_text()));
            }
        }
        OutputFormat::Latex => {
            for (n, v) in series.present() {
                let _ = writeln!(out, "$P_{{{n},2}} = {}$", v.poly().to_latex());
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::skein::{knot_series, link_series, InvariantKind};

    #[test]
    fn series_formats() {
        let s = knot_series(InvariantKind::Alexander, 1);
        assert_eq!(render_series(&s, OutputFormat::Text, false), "P_{1,2} = 1\nP_{3,2} = t - 1 + t^-1\n");
        assert_eq!(
            render_series(&s, OutputFormat::Csv, false),
            "n,polynomial\n1,\"1\"\n3,\"t - 1 + t^-1\"\n"
        );
        assert_eq!(
            render_series(&s, OutputFormat::Latex, false),
            "$P_{1,2} = 1$\n$P_{3,2} = t - 1 + t^{-1}$\n"
        );
        let named = render_series(&s, OutputFormat::Text, true);
        assert!(named.lines().nth(2).unwrap().contains("T(3,2) 3_1"), "{named}");
    }

    #[test]
    fn az_entries_are_marked() {
        let s = link_series(InvariantKind::Homfly, 2).unwrap();
        let text = render_series(&s, OutputFormat::Text, false);
        assert!(text.contains("P_{2,2} = -a^3*z^-1 + a*z + a*z^-1   [a,z]"), "{text}");
    }

    #[test]
    fn number_formats() {
        let rows = vec![(2, crate::expr::parse_and_eval("q + p").unwrap())];
        assert_eq!(render_numbers(&rows, OutputFormat::Text, |_| String::new()), "[2] = p + q\n");
        assert_eq!(
            render_numbers(&rows, OutputFormat::Latex, |n| format!("[{n}]_{{q,p}}")),
            "$[2]_{q,p} = p + q$\n"
        );
        assert!(render_numbers(&rows, OutputFormat::Json, |_| String::new()).starts_with("[{\"n\":2,"));
        assert!("xml".parse::<OutputFormat>().is_err());
    }
}
