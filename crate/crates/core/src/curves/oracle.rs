//! Brute-force double points of a Lissajous projection.
//!
//! Independent of the closed form: the curve is sampled into a polyline,
//! crossing segment pairs are found through a uniform grid, and each hit is
//! polished with Newton's method on `(x(s) - x(t), y(s) - y(t))`.

use std::collections::HashMap;
use std::f64::consts::TAU;

struct Curve {
    nx: f64,
    ny: f64,
    phx: f64,
    phy: f64,
}

impl Curve {
    fn at(&self, t: f64) -> (f64, f64) {
        ((self.nx * t + self.phx).cos(), (self.ny * t + self.phy).cos())
    }

    fn vel(&self, t: f64) -> (f64, f64) {
        (
            -self.nx * (self.nx * t + self.phx).sin(),
            -self.ny * (self.ny * t + self.phy).sin(),
        )
    }

    fn newton(&self, mut s: f64, mut t: f64) -> Option<(f64, f64)> {
        for _ in 0..50 {
            let (a, b) = (self.at(s), self.at(t));
            let (fx, fy) = (a.0 - b.0, a.1 - b.1);
            if fx.abs() < 1e-15 && fy.abs() < 1e-15 {
                break;
            }
            let (da, db) = (self.vel(s), self.vel(t));
            // Jacobian [[da.0, -db.0], [da.1, -db.1]].
            let det = -da.0 * db.1 + db.0 * da.1;
            if det.abs() < 1e-300 {
                return None;
            }
            let ds = (-db.1 * fx + db.0 * fy) / det;
            let dt = (-da.1 * fx + da.0 * fy) / det;
            s -= ds;
            t -= dt;
        }
        let (a, b) = (self.at(s), self.at(t));
        ((a.0 - b.0).abs() < 1e-12 && (a.1 - b.1).abs() < 1e-12).then_some((s, t))
    }
}

fn segments_cross(p: (f64, f64), q: (f64, f64), r: (f64, f64), s: (f64, f64)) -> Option<(f64, f64)> {
    let d1 = (q.0 - p.0, q.1 - p.1);
    let d2 = (s.0 - r.0, s.1 - r.1);
    let den = d1.0 * d2.1 - d1.1 * d2.0;
    if den == 0.0 {
        return None;
    }
    let w = (r.0 - p.0, r.1 - p.1);
    let u = (w.0 * d2.1 - w.1 * d2.0) / den;
    let v = (w.0 * d1.1 - w.1 * d1.0) / den;
    ((0.0..=1.0).contains(&u) && (0.0..=1.0).contains(&v)).then_some((u, v))
}

fn wrap(t: f64) -> f64 {
    t.rem_euclid(TAU)
}

/// Self-intersections of `(cos(nx t + phx), cos(ny t + phy))` as time pairs
/// `(t1, t2)` with `0 <= t1 < t2 < 2 pi`, sorted by `t1`. The period is cut
/// into `samples` segments; a few hundred per unit of frequency is ample.
pub fn double_points_oracle(nx: u32, ny: u32, phx: f64, phy: f64, samples: usize) -> Vec<(f64, f64)> {
    let c = Curve {
        nx: nx as f64,
        ny: ny as f64,
        phx,
        phy,
    };
    let n = samples.max(16);
    let times: Vec<f64> = (0..=n).map(|i| TAU * i as f64 / n as f64).collect();
    let pts: Vec<(f64, f64)> = times.iter().map(|&t| c.at(t)).collect();
    let cells = (n as f64).sqrt().ceil() as i64;
    let cell = |v: f64| (((v + 1.0) / 2.0 * cells as f64).floor() as i64).clamp(0, cells - 1);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for i in 0..n {
        let (a, b) = (pts[i], pts[i + 1]);
        for gx in cell(a.0.min(b.0))..=cell(a.0.max(b.0)) {
            for gy in cell(a.1.min(b.1))..=cell(a.1.max(b.1)) {
                grid.entry((gx, gy)).or_default().push(i);
            }
        }
    }
    let mut found: Vec<(f64, f64)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for bucket in grid.values() {
        for (ai, &i) in bucket.iter().enumerate() {
            for &j in &bucket[ai + 1..] {
                let (i, j) = (i.min(j), i.max(j));
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if adjacent || !seen.insert((i, j)) {
                    continue;
                }
                let Some((u, v)) = segments_cross(pts[i], pts[i + 1], pts[j], pts[j + 1]) else {
                    continue;
                };
                let s0 = times[i] + u * (times[i + 1] - times[i]);
                let t0 = times[j] + v * (times[j + 1] - times[j]);
                let Some((s, t)) = c.newton(s0, t0) else {
                    continue;
                };
                let (s, t) = (wrap(s), wrap(t));
                let pair = (s.min(t), s.max(t));
                if (pair.1 - pair.0).abs() < 1e-9 {
                    continue;
                }
                let dup = found.iter().any(|q| {
                    let d = |a: f64, b: f64| {
                        let x = (a - b).abs();
                        x.min(TAU - x)
                    };
                    d(q.0, pair.0) < 1e-8 && d(q.1, pair.1) < 1e-8
                });
                if !dup {
                    found.push(pair);
                }
            }
        }
    }
    found.sort_by(|a, b| a.partial_cmp(b).unwrap());
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oracle_counts() {
        assert_eq!(double_points_oracle(2, 3, 0.0, 0.5, 1024).len(), 7);
        assert_eq!(double_points_oracle(4, 3, 0.0, 0.2, 2048).len(), 17);
        assert_eq!(double_points_oracle(1, 2, 0.0, 0.3, 512).len(), 1);
    }
}
