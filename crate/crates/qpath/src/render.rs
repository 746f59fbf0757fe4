//! Text, JSON, CSV, and SVG rendering of distributions, polynomials,
//! and orbits.
//!
//! Output is deterministic: the same value renders to the same bytes on
//! every run, so rendered files can serve as regression fixtures. JSON
//! counts are decimal strings, never numbers, because the counts outgrow
//! every fixed integer width.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::cyclic::{NamedMap, Orbit, OrbitObject};
use crate::dist::ResidueDistribution;
use crate::error::{Error, Result};
use crate::paths::LatticePath;
use crate::poly::Poly;

/// Output format for the command-line surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Table,
    Json,
    Csv,
    /// Only orbits render to SVG; other commands reject it.
    Svg,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "svg" => Ok(Format::Svg),
            other => Err(Error::InvalidArgument(format!(
                "unknown format {other:?}; expected table, json, csv, or svg"
            ))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Table => "table",
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Svg => "svg",
        })
    }
}

#[derive(Serialize)]
struct DistributionJson {
    modulus: u64,
    counts: Vec<String>,
    total: String,
    uniform: bool,
}

/// Renders a residue distribution. SVG is rejected; counts appear in
/// residue order in every format.
pub fn render_distribution(dist: &ResidueDistribution, format: Format) -> Result<String> {
    match format {
        Format::Table => {
            let mut out = String::new();
            let rows: Vec<(String, String)> = dist
                .residues()
                .zip(dist.counts())
                .map(|(r, c)| (r.to_string(), c.to_string()))
                .collect();
            let width = rows
                .iter()
                .map(|(r, _)| r.len())
                .chain(["residue".len()])
                .max()
                .unwrap();
            out.push_str(&format!("{:<width$}  count\n", "residue"));
            for (r, c) in &rows {
                out.push_str(&format!("{r:<width$}  {c}\n"));
            }
            out.push_str(&format!("total: {}\n", dist.total()));
            out.push_str(&format!(
                "uniform: {}\n",
                if dist.is_uniform() { "yes" } else { "no" }
            ));
            Ok(out)
        }
        Format::Json => {
            let doc = DistributionJson {
                modulus: dist.modulus(),
                counts: dist.counts().iter().map(|c| c.to_string()).collect(),
                total: dist.total().to_string(),
                uniform: dist.is_uniform(),
            };
            Ok(to_json(&doc))
        }
        Format::Csv => {
            let mut out = String::from("residue,count\n");
            for (r, c) in dist.residues().zip(dist.counts()) {
                out.push_str(&format!("{r},{c}\n"));
            }
            Ok(out)
        }
        Format::Svg => Err(Error::InvalidArgument(
            "svg output is only available for orbits".into(),
        )),
    }
}

#[derive(Serialize)]
struct GaussBinomJson {
    n: u32,
    k: u32,
    degree: usize,
    coefficients: Vec<String>,
    value_at_one: String,
}

/// Renders a Gaussian binomial coefficient list.
pub fn render_gauss_binom(n: u32, k: u32, poly: &Poly, format: Format) -> Result<String> {
    let coefficients: Vec<String> = if poly.is_zero() {
        vec!["0".into()]
    } else {
        poly.coeffs().iter().map(|c| c.to_string()).collect()
    };
    match format {
        Format::Table => Ok(format!(
            "gaussian binomial n={n} k={k}\ndegree: {}\ncoefficients: {}\nvalue at q=1: {}\n",
            poly.degree().unwrap_or(0),
            coefficients.join(","),
            poly.value_at_one(),
        )),
        Format::Json => {
            let doc = GaussBinomJson {
                n,
                k,
                degree: poly.degree().unwrap_or(0),
                coefficients,
                value_at_one: poly.value_at_one().to_string(),
            };
            Ok(to_json(&doc))
        }
        Format::Csv => {
            let mut out = String::from("power,coefficient\n");
            for (i, c) in coefficients.iter().enumerate() {
                out.push_str(&format!("{i},{c}\n"));
            }
            Ok(out)
        }
        Format::Svg => Err(Error::InvalidArgument(
            "svg output is only available for orbits".into(),
        )),
    }
}

#[derive(Serialize)]
struct OrbitJson {
    map: &'static str,
    statistic: &'static str,
    modulus: u64,
    elements: Vec<String>,
    statistics: Vec<u64>,
    residues: Vec<u64>,
}

/// Renders an orbit: a step table with per-step statistic shifts, JSON or
/// CSV listings, or an SVG strip of shaded-grid panels for path and word
/// orbits.
pub fn render_orbit(map: NamedMap, orbit: &Orbit<OrbitObject>, format: Format) -> Result<String> {
    match format {
        Format::Table => {
            let elements: Vec<String> =
                orbit.elements().iter().map(|e| e.to_string()).collect();
            let m = orbit.modulus();
            let stat_width = orbit
                .statistics()
                .iter()
                .map(|s| s.to_string().len())
                .chain([map.statistic_name().len()])
                .max()
                .unwrap();
            let elem_width = elements
                .iter()
                .map(|e| e.len())
                .chain(["element".len()])
                .max()
                .unwrap();
            let step_width = (orbit.len() - 1).to_string().len().max("step".len());
            let mut out = format!("map: {} (statistic: {} mod {m})\n", map.name(), map.statistic_name());
            out.push_str(&format!(
                "{:<step_width$}  {:<elem_width$}  {:<stat_width$}  shift\n",
                "step",
                "element",
                map.statistic_name(),
            ));
            let stats = orbit.statistics();
            for (i, (e, s)) in elements.iter().zip(stats).enumerate() {
                let shift = if i == 0 {
                    "-".to_string()
                } else {
                    format!("+{}", (s % m + m - stats[i - 1] % m) % m)
                };
                out.push_str(&format!(
                    "{i:<step_width$}  {e:<elem_width$}  {s:<stat_width$}  {shift}\n"
                ));
            }
            out.push_str(&format!("orbit size: {}\n", orbit.len()));
            out.push_str(&format!(
                "residues mod {m}: {}\n",
                orbit
                    .residues()
                    .iter()
                    .map(|r| r.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ));
            Ok(out)
        }
        Format::Json => {
            let doc = OrbitJson {
                map: map.name(),
                statistic: map.statistic_name(),
                modulus: orbit.modulus(),
                elements: orbit.elements().iter().map(|e| e.to_string()).collect(),
                statistics: orbit.statistics().to_vec(),
                residues: orbit.residues(),
            };
            Ok(to_json(&doc))
        }
        Format::Csv => {
            let mut out = String::from("step,element,statistic,residue\n");
            let residues = orbit.residues();
            for (i, (e, s)) in orbit
                .elements()
                .iter()
                .zip(orbit.statistics())
                .enumerate()
            {
                out.push_str(&format!(
                    "{i},{},{s},{}\n",
                    csv_field(&e.to_string()),
                    residues[i]
                ));
            }
            Ok(out)
        }
        Format::Svg => orbit_svg(map, orbit),
    }
}

/// Quotes a CSV field when it contains a delimiter (sequences print with
/// commas).
fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain struct serializes");
    out.push('\n');
    out
}

const CELL: i64 = 24;
const PANEL_GAP: i64 = 24;
const MARGIN: i64 = 12;
const CAPTION_HEIGHT: i64 = 20;

/// Draws each orbit element as a unit grid with the cells below the path
/// shaded and the path drawn on top, one panel per element, statistics
/// captioned underneath. Integer coordinates throughout keep the output
/// byte-stable.
fn orbit_svg(map: NamedMap, orbit: &Orbit<OrbitObject>) -> Result<String> {
    let paths: Vec<LatticePath> = orbit
        .elements()
        .iter()
        .map(|e| match e {
            OrbitObject::Path(p) => Ok(p.clone()),
            OrbitObject::Word(w) => Ok(w.to_path()),
            OrbitObject::Sequence(_) => Err(Error::InvalidArgument(
                "svg output needs a path or word orbit".into(),
            )),
        })
        .collect::<Result<_>>()?;
    let (w, h) = (paths[0].width() as i64, paths[0].height() as i64);
    let panel_w = w * CELL;
    let panel_h = h * CELL;
    let total_w = 2 * MARGIN + paths.len() as i64 * panel_w + (paths.len() as i64 - 1) * PANEL_GAP;
    let total_h = 2 * MARGIN + panel_h + CAPTION_HEIGHT;
    let mut svg = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{total_w}\" height=\"{total_h}\" \
         viewBox=\"0 0 {total_w} {total_h}\">\n"
    );
    for (idx, path) in paths.iter().enumerate() {
        debug_assert_eq!((path.width() as i64, path.height() as i64), (w, h));
        let tx = MARGIN + idx as i64 * (panel_w + PANEL_GAP);
        svg.push_str(&format!("<g transform=\"translate({tx},{MARGIN})\">\n"));
        // Shaded cells under the path, one rect per nonempty column. The
        // i-th east step crosses column i at height (norths so far).
        let mut norths = 0i64;
        let mut col = 0i64;
        for step in path.steps() {
            match step {
                crate::paths::Step::North => norths += 1,
                crate::paths::Step::East => {
                    if norths > 0 {
                        svg.push_str(&format!(
                            "<rect x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{}\" \
                             fill=\"#c8c8c8\"/>\n",
                            col * CELL,
                            (h - norths) * CELL,
                            norths * CELL,
                        ));
                    }
                    col += 1;
                }
            }
        }
        for i in 0..=w {
            svg.push_str(&format!(
                "<line x1=\"{x}\" y1=\"0\" x2=\"{x}\" y2=\"{panel_h}\" \
                 stroke=\"#808080\" stroke-width=\"1\"/>\n",
                x = i * CELL,
            ));
        }
        for j in 0..=h {
            svg.push_str(&format!(
                "<line x1=\"0\" y1=\"{y}\" x2=\"{panel_w}\" y2=\"{y}\" \
                 stroke=\"#808080\" stroke-width=\"1\"/>\n",
                y = j * CELL,
            ));
        }
        // Path polyline, y flipped into screen coordinates.
        let mut points = String::new();
        let (mut x, mut y) = (0i64, 0i64);
        points.push_str(&format!("{},{}", x * CELL, (h - y) * CELL));
        for step in path.steps() {
            match step {
                crate::paths::Step::East => x += 1,
                crate::paths::Step::North => y += 1,
            }
            points.push_str(&format!(" {},{}", x * CELL, (h - y) * CELL));
        }
        svg.push_str(&format!(
            "<polyline points=\"{points}\" fill=\"none\" stroke=\"#000000\" stroke-width=\"3\"/>\n"
        ));
        svg.push_str(&format!(
            "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" \
             text-anchor=\"middle\">{} {}</text>\n",
            panel_w / 2,
            panel_h + CAPTION_HEIGHT - 4,
            map.statistic_name(),
            orbit.statistics()[idx],
        ));
        svg.push_str("</g>\n");
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
