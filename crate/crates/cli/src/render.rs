use std::f64::consts::{PI, TAU};
use std::fmt::Write as _;
use std::path::Path;

use lissaknot::curves::double_points;
use lissaknot::diagram::arc_crossings;
use lissaknot::{ExactAngle, Tolerances};
use serde::Serialize;

use crate::commands::{Failure, Output};
use crate::RenderArgs;

const SIZE: f64 = 800.0;
const MARGIN: f64 = 20.0;
/// Half-width of a crossing gap as a fraction of the bounding box.
const GAP: f64 = 0.02;

enum Height {
    None,
    One { n: f64, phi: f64 },
    Two { n3: f64, phi3: f64, n4: f64, phi4: f64 },
}

impl Height {
    fn at(&self, t: f64) -> Option<f64> {
        match *self {
            Height::None => None,
            Height::One { n, phi } => Some((n * t + phi).cos()),
            Height::Two { n3, phi3, n4, phi4 } => Some((n3 * t + phi3).cos() + (n4 * t + phi4).cos()),
        }
    }
}

struct Curve {
    nx: f64,
    ny: f64,
    phx: f64,
    phy: f64,
    height: Height,
}

impl Curve {
    fn xy(&self, t: f64) -> (f64, f64) {
        ((self.nx * t + self.phx).cos(), (self.ny * t + self.phy).cos())
    }

    fn speed(&self, t: f64) -> f64 {
        let dx = self.nx * (self.nx * t + self.phx).sin();
        let dy = self.ny * (self.ny * t + self.phy).sin();
        dx.hypot(dy)
    }
}

fn parse_z2(s: &str) -> Result<Height, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Failure::Invalid(format!("--z2 expects n3,phi3,n4,phi4, got {s:?}"));
    if parts.len() != 4 {
        return Err(bad());
    }
    let n = |i: usize| parts[i].parse::<u32>().map_err(|_| bad());
    let phi = |i: usize| parts[i].parse::<ExactAngle>().map(|a| a.to_f64()).map_err(|_| bad());
    Ok(Height::Two {
        n3: n(0)? as f64,
        phi3: phi(1)?,
        n4: n(2)? as f64,
        phi4: phi(3)?,
    })
}

#[derive(Serialize)]
struct RenderReport {
    path: String,
    format: &'static str,
    samples: usize,
    crossings: usize,
    gaps: usize,
    double_points: usize,
}

pub fn render(r: &RenderArgs, tol: &Tolerances) -> Result<Output, Failure> {
    if r.nz.is_some() && r.z2.is_some() {
        return Err(Failure::Invalid("--nz and --z2 are exclusive".into()));
    }
    if r.arc && !(r.phx.is_zero() && r.phy.is_zero()) {
        return Err(Failure::Invalid("--arc draws the curve with phx = phy = 0".into()));
    }
    let height = match (&r.nz, &r.z2) {
        (Some(n), _) => Height::One {
            n: *n as f64,
            phi: r.phz.to_f64(),
        },
        (_, Some(s)) => parse_z2(s)?,
        _ => Height::None,
    };
    let curve = Curve {
        nx: r.nx as f64,
        ny: r.ny as f64,
        phx: r.phx.to_f64(),
        phy: r.phy.to_f64(),
        height,
    };
    let samples = 2000 * r.nx.max(r.ny) as usize;
    let (format, path, body, crossings, gaps, marked) = if let Some(path) = &r.csv {
        ("csv", path, csv(&curve, samples, r.arc), 0, 0, 0)
    } else {
        let path = r.svg.as_ref().expect("clap requires --svg or --csv");
        if r.arc {
            let marks: Vec<(f64, f64)> = arc_crossings(r.nx, r.ny).iter().map(|c| (c.x, c.y)).collect();
            let n = marks.len();
            ("svg", path, svg(&[arc_samples(&curve, samples)], &marks, 0), 0, 0, n)
        } else {
            let dps = double_points(r.nx, r.ny, &r.phx, &r.phy, tol).map_err(|e| Failure::Invalid(e.to_string()))?;
            let unders: Vec<f64> = dps
                .iter()
                .map(|d| {
                    let (t1, t2) = (d.t1.to_f64(), d.t2.to_f64());
                    match (curve.height.at(t1), curve.height.at(t2)) {
                        (Some(z1), Some(z2)) if z1 < z2 => t1,
                        _ => t2,
                    }
                })
                .collect();
            let pieces = closed_pieces(&curve, samples, &unders);
            let g = pieces.len().min(dps.len());
            ("svg", path, svg(&pieces, &[], dps.len()), dps.len(), g, 0)
        }
    };
    write(path, &body)?;
    let report = RenderReport {
        path: path.display().to_string(),
        format,
        samples,
        crossings,
        gaps,
        double_points: marked,
    };
    let mut text = format!("wrote {} ({format}, {samples} samples", report.path);
    if format == "svg" {
        if r.arc {
            let _ = write!(text, ", {marked} double points");
        } else {
            let _ = write!(text, ", {crossings} crossings, {gaps} gaps");
        }
    }
    text.push_str(")\n");
    Ok(Output::new(&report, text, None))
}

fn write(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
}

fn csv(curve: &Curve, samples: usize, arc: bool) -> String {
    let span = if arc { PI } else { TAU };
    let mut out = String::from("t,x,y,z\n");
    for i in 0..samples {
        let t = if arc {
            span * i as f64 / (samples - 1) as f64
        } else {
            span * i as f64 / samples as f64
        };
        let (x, y) = curve.xy(t);
        let z = curve.height.at(t).map_or(String::new(), |z| format!("{z:.9}"));
        let _ = writeln!(out, "{t:.9},{x:.9},{y:.9},{z}");
    }
    out
}

fn arc_samples(curve: &Curve, samples: usize) -> Vec<(f64, f64)> {
    (0..samples).map(|i| curve.xy(PI * i as f64 / (samples - 1) as f64)).collect()
}

/// The closed curve cut open around each under-crossing time. Gaps that
/// overlap are merged.
fn closed_pieces(curve: &Curve, samples: usize, unders: &[f64]) -> Vec<Vec<(f64, f64)>> {
    let step = TAU / samples as f64;
    let all = || (0..samples).map(|i| curve.xy(i as f64 * step));
    if unders.is_empty() {
        let mut pts: Vec<(f64, f64)> = all().collect();
        pts.push(pts[0]);
        return vec![pts];
    }
    // Bounding box of the projection is [-1, 1]^2.
    let radius = GAP * 2.0;
    let mut gaps: Vec<(f64, f64)> = unders
        .iter()
        .map(|&t| {
            let t = t.rem_euclid(TAU);
            let d = radius / curve.speed(t).max(1e-12);
            (t - d, t + d)
        })
        .collect();
    gaps.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::with_capacity(gaps.len());
    for g in gaps {
        match merged.last_mut() {
            Some(last) if g.0 <= last.1 => last.1 = last.1.max(g.1),
            _ => merged.push(g),
        }
    }
    if merged.len() > 1 {
        let (first, last) = (merged[0], merged[merged.len() - 1]);
        if last.1 >= first.0 + TAU {
            merged.pop();
            merged[0] = (last.0 - TAU, first.1.max(last.1 - TAU));
        }
    }
    let n = merged.len();
    (0..n)
        .map(|i| {
            let a = merged[i].1;
            let b = if i + 1 < n { merged[i + 1].0 } else { merged[0].0 + TAU };
            let mut pts = vec![curve.xy(a)];
            let first = (a / step).floor() as i64 + 1;
            let mut k = first;
            while (k as f64) * step < b {
                pts.push(curve.xy(k as f64 * step));
                k += 1;
            }
            pts.push(curve.xy(b));
            pts
        })
        .collect()
}

fn to_view((x, y): (f64, f64)) -> (f64, f64) {
    let s = (SIZE - 2.0 * MARGIN) / 2.0;
    (SIZE / 2.0 + s * x, SIZE / 2.0 - s * y)
}

fn svg(pieces: &[Vec<(f64, f64)>], marks: &[(f64, f64)], crossings: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}" data-crossings="{crossings}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for piece in pieces {
        out.push_str(r#"<path class="strand" fill="none" stroke="black" stroke-width="2" d=""#);
        for (i, &p) in piece.iter().enumerate() {
            let (x, y) = to_view(p);
            let _ = write!(out, "{}{x:.3} {y:.3}", if i == 0 { "M" } else { " L" });
        }
        out.push_str("\"/>\n");
    }
    for &m in marks {
        let (x, y) = to_view(m);
        let _ = writeln!(out, r#"<circle class="double-point" cx="{x:.3}" cy="{y:.3}" r="5" fill="red"/>"#);
    }
    out.push_str("</svg>\n");
    out
}
