//! Oriented knot diagrams stored as Gauss codes.
//!
//! A diagram is the cyclic sequence of crossing visits met while traversing
//! the knot. Each crossing appears twice, once over and once under, with the
//! same sign. Edges are numbered so that edge `e` (1-based) leaves visit `e`.

mod band;
mod plat;

pub use band::{
    arc_crossings, assign_twist_crossings, band_diagram, band_shadow, ArcCrossing, BandAssignment, BandShadow, Layer,
    ShadowCrossing, SiteKind, TwistChoice,
};
pub use plat::{diagram_from_plat, plat_components, Pairing, PlatSpec};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::curves::{Traversal, Visit};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("malformed traversal: {0}")]
    MalformedTraversal(String),
    #[error("plat closure has {0} components, not a knot")]
    NotAKnot(usize),
    #[error("invalid pairing: {0}")]
    InvalidPairing(String),
    #[error("no twist assignment reproduces the target Alexander polynomial")]
    NoAssignmentFound,
    #[error("bad band shadow input: {0}")]
    BadShadow(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    /// 1-based crossing label, numbered in order of first visit.
    pub id: usize,
    pub over: bool,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Diagram {
    gauss: Vec<GaussEntry>,
}

impl Diagram {
    /// The crossingless circle.
    pub fn unknot() -> Self {
        Diagram { gauss: Vec::new() }
    }

    /// Builds a diagram from `(crossing key, over, sign)` visits in traversal
    /// order. Keys are arbitrary; they are relabelled by first appearance.
    pub fn from_visits<I>(visits: I) -> Result<Self, DiagramError>
    where
        I: IntoIterator<Item = (usize, bool, i8)>,
    {
        let visits: Vec<(usize, bool, i8)> = visits.into_iter().collect();
        if visits.is_empty() {
            return Err(DiagramError::MalformedTraversal("no crossings visited".into()));
        }
        let mut label = std::collections::HashMap::new();
        let gauss = visits
            .iter()
            .map(|&(key, over, sign)| {
                let next = label.len() + 1;
                let id = *label.entry(key).or_insert(next);
                GaussEntry { id, over, sign }
            })
            .collect();
        Diagram::from_gauss(gauss)
    }

    /// Validates a Gauss code with labels `1..=C`.
    pub fn from_gauss(gauss: Vec<GaussEntry>) -> Result<Self, DiagramError> {
        let c = gauss.len() / 2;
        if gauss.len() % 2 != 0 {
            return Err(DiagramError::MalformedTraversal("odd number of visits".into()));
        }
        let mut seen: Vec<Vec<&GaussEntry>> = vec![Vec::new(); c];
        for g in &gauss {
            if g.id == 0 || g.id > c {
                return Err(DiagramError::MalformedTraversal(format!("label {} out of range", g.id)));
            }
            if g.sign != 1 && g.sign != -1 {
                return Err(DiagramError::MalformedTraversal(format!("sign {} on crossing {}", g.sign, g.id)));
            }
            seen[g.id - 1].push(g);
        }
        for (i, v) in seen.iter().enumerate() {
            let ok = v.len() == 2 && v[0].over != v[1].over && v[0].sign == v[1].sign;
            if !ok {
                return Err(DiagramError::MalformedTraversal(format!(
                    "crossing {} must be visited once over and once under with one sign",
                    i + 1
                )));
            }
        }
        Ok(Diagram { gauss })
    }

    pub fn gauss(&self) -> &[GaussEntry] {
        &self.gauss
    }

    pub fn crossing_count(&self) -> usize {
        self.gauss.len() / 2
    }

    pub fn writhe(&self) -> i64 {
        self.gauss.iter().filter(|g| g.over).map(|g| g.sign as i64).sum()
    }

    /// Mirror image: every over becomes under and every sign flips.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            gauss: self
                .gauss
                .iter()
                .map(|g| GaussEntry {
                    id: g.id,
                    over: !g.over,
                    sign: -g.sign,
                })
                .collect(),
        }
    }

    /// Visit positions `(over, under)` of each crossing, 0-based.
    pub fn visit_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); self.crossing_count()];
        for (i, g) in self.gauss.iter().enumerate() {
            let slot = &mut pos[g.id - 1];
            if g.over {
                slot.0 = i;
            } else {
                slot.1 = i;
            }
        }
        pos
    }

    /// Planar-diagram code: `X[a, b, c, d]` listed counterclockwise from the
    /// incoming under edge `a`; the under strand runs `a -> c`.
    pub fn pd(&self) -> Vec<[usize; 4]> {
        let n = self.gauss.len();
        let edge_in = |v: usize| if v == 0 { n } else { v };
        let edge_out = |v: usize| v + 1;
        let mut signs = vec![0i8; self.crossing_count()];
        for g in &self.gauss {
            signs[g.id - 1] = g.sign;
        }
        self.visit_positions()
            .into_iter()
            .zip(signs)
            .map(|((o, u), s)| {
                let (a, c) = (edge_in(u), edge_out(u));
                let (oi, oo) = (edge_in(o), edge_out(o));
                if s > 0 {
                    [a, oo, c, oi]
                } else {
                    [a, oi, c, oo]
                }
            })
            .collect()
    }

    /// Arc index (0-based) of the strand passing each visit. Arcs run from one
    /// under-crossing to the next, so a diagram with `C > 0` crossings has `C`
    /// arcs. An under visit is assigned its incoming arc; the outgoing one is
    /// the next index modulo `C`.
    pub fn arcs(&self) -> Vec<usize> {
        let n = self.gauss.len();
        if n == 0 {
            return Vec::new();
        }
        let first_under = self.gauss.iter().position(|g| !g.over).expect("knot diagram has an under visit");
        let mut arc = vec![0; n];
        let mut current = 0;
        for step in 1..=n {
            let v = (first_under + step) % n;
            arc[v] = current;
            if !self.gauss[v].over {
                current += 1;
            }
        }
        arc
    }
}

/// Gauss sequence of a Lissajous traversal.
pub fn diagram_from_crossings(tr: &Traversal) -> Result<Diagram, DiagramError> {
    diagram_from_visit_list(&tr.visits, |v| tr.sites[v.site].sign)
}

fn diagram_from_visit_list(visits: &[Visit], sign: impl Fn(&Visit) -> i8) -> Result<Diagram, DiagramError> {
    let mut counts = std::collections::HashMap::new();
    for v in visits {
        *counts.entry(v.site).or_insert(0usize) += 1;
    }
    if let Some((site, n)) = counts.iter().find(|(_, &n)| n != 2) {
        return Err(DiagramError::MalformedTraversal(format!(
            "crossing {site} visited {n} times"
        )));
    }
    Diagram::from_visits(visits.iter().map(|v| (v.site, v.over, sign(v))))
}

impl Serialize for GaussEntry {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.id, if self.over { "O" } else { "U" }, self.sign).serialize(s)
    }
}

impl Serialize for Diagram {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Diagram", 2)?;
        st.serialize_field("gauss", &self.gauss)?;
        st.serialize_field("pd", &self.pd())?;
        st.end()
    }
}
