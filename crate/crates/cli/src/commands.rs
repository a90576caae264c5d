use std::fmt::{self, Write as _};

use lissaknot::braids::{
    lissajous_projection_word, lemma7_rewrite, torus_pipeline, torus_seed, two_bridge_pipeline, BraidError,
    BraidWord,
};
use lissaknot::curves::{
    build_crossings, family_phase_intervals, family_singular_phases, symmetry_check, twist_claims, validate_params,
    ClaimCheck, CurveError, LissajousParams, SymmetryReport, Validity,
};
use lissaknot::diagram::{
    assign_twist_crossings, diagram_from_crossings, diagram_from_plat, Diagram, DiagramError, PlatSpec, TwistChoice,
};
use lissaknot::exact::rational;
use lissaknot::invariants::{
    alexander, arf, identify, torus_alexander, twist_alexander, CanonicalAlexander, InvariantError,
};
use lissaknot::{ExactAngle, Tolerances};
use serde::Serialize;

/// Errors that stop a command before a report exists.
#[derive(Debug)]
pub enum Failure {
    /// Bad flags or parameters: exit code 2.
    Invalid(String),
    /// A computation that should succeed did not: exit code 1.
    Verification(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Invalid(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Invalid(s) | Failure::Verification(s) => f.write_str(s),
        }
    }
}

impl From<CurveError> for Failure {
    fn from(e: CurveError) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<DiagramError> for Failure {
    fn from(e: DiagramError) -> Self {
        Failure::Verification(e.to_string())
    }
}

impl From<InvariantError> for Failure {
    fn from(e: InvariantError) -> Self {
        Failure::Verification(e.to_string())
    }
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        match e {
            BraidError::IndexOutOfRange { .. }
            | BraidError::NotADoubleLetter(..)
            | BraidError::NotCoprime(..)
            | BraidError::BadFrequency(_)
            | BraidError::NotCoprimeToThree(_)
            | BraidError::LinkNotKnot(_)
            | BraidError::NotAKnot(_)
            | BraidError::WrongStrandCount { .. } => Failure::Invalid(e.to_string()),
            _ => Failure::Verification(e.to_string()),
        }
    }
}

/// A finished report: its text and JSON forms and the verdict of any checks.
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub failed: Option<String>,
}

impl Output {
    pub fn new<T: Serialize>(report: &T, text: String, failed: Option<String>) -> Self {
        Output {
            text,
            json: serde_json::to_value(report).expect("reports serialize"),
            failed,
        }
    }
}

#[derive(Serialize)]
struct Params {
    nx: u32,
    ny: u32,
    nz: u32,
    phx: ExactAngle,
    phy: ExactAngle,
    phz: ExactAngle,
}

impl From<&LissajousParams> for Params {
    fn from(p: &LissajousParams) -> Self {
        Params {
            nx: p.nx,
            ny: p.ny,
            nz: p.nz,
            phx: p.phx,
            phy: p.phy,
            phz: p.phz,
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}; {}, {}, {})", self.nx, self.ny, self.nz, self.phx, self.phy, self.phz)
    }
}

fn gauss_text(d: &Diagram) -> String {
    if d.crossing_count() == 0 {
        return "(no crossings)".into();
    }
    let parts: Vec<String> = d
        .gauss()
        .iter()
        .map(|g| format!("{}{}{}", g.id, if g.over { "O" } else { "U" }, if g.sign > 0 { "+" } else { "-" }))
        .collect();
    parts.join(" ")
}

fn pd_text(d: &Diagram) -> String {
    let parts: Vec<String> = d.pd().iter().map(|x| format!("X[{},{},{},{}]", x[0], x[1], x[2], x[3])).collect();
    parts.join(" ")
}

fn candidates(delta: &CanonicalAlexander) -> Vec<String> {
    identify(delta).iter().map(ToString::to_string).collect()
}

fn list(items: &[String]) -> String {
    if items.is_empty() {
        "none".into()
    } else {
        items.join(", ")
    }
}

fn symmetry_text(s: &SymmetryReport) -> String {
    let yes = |b: bool| if b { "holds" } else { "fails" };
    match (s.amphicheiral_identity, s.two_periodic_identity, s.axis) {
        (Some(a), _, _) => format!("K(t+pi) = -K(t) {}", yes(a)),
        (_, Some(b), Some(axis)) => {
            let w = s.axis_winding.map_or("undefined".to_string(), |w| w.to_string());
            format!("rotation about the {axis:?} axis {}; winding about the axis {w}", yes(b))
        }
        _ => "no symmetry check applies".into(),
    }
}

/// Crossings, diagram and invariants of one parameter set.
#[derive(Serialize)]
struct Analysis {
    params: Params,
    crossing_count: usize,
    diagram: Diagram,
    alexander: CanonicalAlexander,
    arf: u8,
    symmetry: SymmetryReport,
    candidates: Vec<String>,
}

fn analysis(p: &LissajousParams, tol: &Tolerances) -> Result<Analysis, Failure> {
    if let Validity::Singular(reason) = validate_params(p)? {
        return Err(Failure::Invalid(format!("singular phase: {reason}")));
    }
    let tr = build_crossings(p, tol)?;
    let diagram = diagram_from_crossings(&tr)?;
    let delta = alexander(&diagram)?;
    Ok(Analysis {
        params: p.into(),
        crossing_count: tr.crossing_count(),
        arf: arf(&delta)?,
        candidates: candidates(&delta),
        symmetry: symmetry_check(p, tol),
        alexander: delta,
        diagram,
    })
}

fn analysis_text(a: &Analysis, out: &mut String) {
    let _ = writeln!(out, "params: {}", a.params);
    let _ = writeln!(out, "crossings: {}", a.crossing_count);
    let _ = writeln!(out, "gauss: {}", gauss_text(&a.diagram));
    let _ = writeln!(out, "pd: {}", pd_text(&a.diagram));
    let _ = writeln!(out, "alexander: {}", a.alexander);
    let _ = writeln!(out, "arf: {}", a.arf);
    let _ = writeln!(out, "symmetry: {}", symmetry_text(&a.symmetry));
    let _ = writeln!(out, "candidates: {}", list(&a.candidates));
}

pub fn analyze(p: &LissajousParams, tol: &Tolerances) -> Result<Output, Failure> {
    let a = analysis(p, tol)?;
    let mut text = String::new();
    analysis_text(&a, &mut text);
    Ok(Output::new(&a, text, None))
}

#[derive(Serialize)]
struct TwistReport {
    m: u32,
    #[serde(flatten)]
    analysis: Analysis,
    expected_crossings: usize,
    expected_alexander: CanonicalAlexander,
    alexander_matches: bool,
    claims: Vec<ClaimCheck>,
}

pub fn twist(m: u32, nz: Option<u32>, tol: &Tolerances) -> Result<Output, Failure> {
    let mut p = LissajousParams::twist_family(m);
    if let Some(nz) = nz {
        let d = 4 * m as i64 + 2;
        p.nz = nz;
        p.phz = ExactAngle::new(rational(-3, d), rational(nz as i64, d));
    }
    let a = analysis(&p, tol)?;
    let expected_alexander = if m % 2 == 0 {
        twist_alexander(m as i64)
    } else {
        twist_alexander(-(m as i64 + 1))
    };
    let claims = if m >= 2 { twist_claims(m, tol)? } else { Vec::new() };
    let report = TwistReport {
        m,
        expected_crossings: 6 * m as usize + 1,
        alexander_matches: a.alexander == expected_alexander,
        expected_alexander,
        claims,
        analysis: a,
    };
    let mut problems = Vec::new();
    if report.analysis.crossing_count != report.expected_crossings {
        problems.push(format!(
            "{} crossings, expected {}",
            report.analysis.crossing_count, report.expected_crossings
        ));
    }
    if !report.alexander_matches {
        problems.push(format!(
            "Alexander polynomial {} differs from {}",
            report.analysis.alexander, report.expected_alexander
        ));
    }
    for c in report.claims.iter().filter(|c| !c.holds) {
        problems.push(format!("claim {} fails at {}", c.claim, c.violations.join("; ")));
    }
    let mut text = String::new();
    analysis_text(&report.analysis, &mut text);
    let _ = writeln!(
        text,
        "expected: {} crossings, alexander {} ({})",
        report.expected_crossings,
        report.expected_alexander,
        if report.alexander_matches { "match" } else { "MISMATCH" }
    );
    if report.claims.is_empty() {
        let _ = writeln!(text, "claims: checked for m >= 2 only");
    }
    for c in &report.claims {
        let _ = writeln!(text, "claim {}: {} [{}]", c.claim, c.statement, if c.holds { "holds" } else { "FAILS" });
    }
    let failed = (!problems.is_empty()).then(|| problems.join("; "));
    Ok(Output::new(&report, text, failed))
}

#[derive(Serialize)]
struct FamilyRow {
    lo: ExactAngle,
    hi: ExactAngle,
    phz: ExactAngle,
    crossing_count: usize,
    diagram: Diagram,
    alexander: CanonicalAlexander,
    arf: u8,
    candidates: Vec<String>,
}

#[derive(Serialize)]
struct FamilyReport {
    m: u32,
    nx: u32,
    ny: u32,
    nz: u32,
    phx: ExactAngle,
    phy: ExactAngle,
    singular_phases: Vec<ExactAngle>,
    rows: Vec<FamilyRow>,
}

pub fn family(m: u32, nz: u32, tol: &Tolerances) -> Result<Output, Failure> {
    let singular = family_singular_phases(m, nz)?;
    let intervals = family_phase_intervals(m, nz)?;
    let base = LissajousParams {
        nz,
        ..LissajousParams::twist_family(m)
    };
    let mut rows = Vec::with_capacity(intervals.len());
    for iv in &intervals {
        let p = base.with_phz(iv.representative);
        let tr = build_crossings(&p, tol)?;
        let diagram = diagram_from_crossings(&tr)?;
        let delta = alexander(&diagram)?;
        rows.push(FamilyRow {
            lo: iv.lo,
            hi: iv.hi,
            phz: iv.representative,
            crossing_count: tr.crossing_count(),
            arf: arf(&delta)?,
            candidates: candidates(&delta),
            alexander: delta,
            diagram,
        });
    }
    let report = FamilyReport {
        m,
        nx: base.nx,
        ny: base.ny,
        nz,
        phx: base.phx,
        phy: base.phy,
        singular_phases: singular.interior,
        rows,
    };
    let mut text = String::new();
    let _ = writeln!(
        text,
        "family ({}, {}, {}; {}, {}, phz), {} intervals",
        report.nx,
        report.ny,
        nz,
        report.phx,
        report.phy,
        report.rows.len()
    );
    for (i, r) in report.rows.iter().enumerate() {
        let _ = writeln!(
            text,
            "{}: phz in ({}, {}), sample {}: {} crossings, alexander {}, arf {}, candidates {}",
            i + 1,
            r.lo,
            r.hi,
            r.phz,
            r.crossing_count,
            r.alexander,
            r.arf,
            list(&r.candidates)
        );
        let _ = writeln!(text, "   gauss: {}", gauss_text(&r.diagram));
    }
    let bad: Vec<String> = report
        .rows
        .iter()
        .enumerate()
        .filter(|(_, r)| r.arf != 0)
        .map(|(i, _)| format!("row {} has Arf 1", i + 1))
        .collect();
    let failed = (!bad.is_empty()).then(|| bad.join("; "));
    Ok(Output::new(&report, text, failed))
}

fn parse_word(s: &str) -> Result<BraidWord, Failure> {
    let letters: Result<Vec<i32>, _> = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(str::parse::<i32>)
        .collect();
    let letters = letters.map_err(|e| Failure::Invalid(format!("braid word {s:?}: {e}")))?;
    if letters.contains(&0) {
        return Err(Failure::Invalid("braid letters are nonzero generator indices".into()));
    }
    Ok(BraidWord::new(3, letters)?)
}

#[derive(Serialize)]
struct TwoBridgeReport {
    input: BraidWord,
    alternated: BraidWord,
    reduced: BraidWord,
    k: usize,
    frequencies: (u32, u32),
    shadow_crossings: usize,
    twist_slots: usize,
    target: CanonicalAlexander,
    twists: Vec<TwistChoice>,
    assignments_tried: usize,
    alexander: CanonicalAlexander,
    diagram: Diagram,
}

pub fn two_bridge(word: &str) -> Result<Output, Failure> {
    let w = parse_word(word)?;
    let c = two_bridge_pipeline(&w)?;
    let a = assign_twist_crossings(&c.shadow, &c.arc_signs, &c.target)?;
    let delta = alexander(&a.diagram)?;
    let report = TwoBridgeReport {
        input: c.input,
        alternated: c.alternated,
        reduced: c.reduced,
        k: c.k,
        frequencies: (c.nx, c.ny),
        shadow_crossings: c.shadow.crossing_count(),
        twist_slots: c.shadow.twist_slots.len(),
        target: c.target,
        twists: a.twists,
        assignments_tried: a.tried,
        alexander: delta,
        diagram: a.diagram,
    };
    let mut text = String::new();
    let _ = writeln!(text, "input: {}", report.input);
    let _ = writeln!(text, "alternating: {}", report.alternated);
    let _ = writeln!(text, "reduced: {} (projection {})", report.reduced, report.reduced.projection());
    let _ = writeln!(text, "k: {}", report.k);
    let _ = writeln!(text, "frequencies: ({}, {})", report.frequencies.0, report.frequencies.1);
    let _ = writeln!(
        text,
        "shadow: {} crossings, {} twist crossings",
        report.shadow_crossings, report.twist_slots
    );
    let _ = writeln!(text, "target alexander: {}", report.target);
    let _ = writeln!(
        text,
        "assignment: {} after {} tries, alexander {}",
        twist_text(&report.twists),
        report.assignments_tried,
        report.alexander
    );
    let _ = writeln!(text, "gauss: {}", gauss_text(&report.diagram));
    let failed = (report.alexander != report.target)
        .then(|| format!("diagram has {} instead of {}", report.alexander, report.target));
    Ok(Output::new(&report, text, failed))
}

fn twist_text(t: &[TwistChoice]) -> String {
    t.iter()
        .map(|c| match c {
            TwistChoice::RetraceOver => 'R',
            TwistChoice::OriginalOver => 'O',
        })
        .collect()
}

#[derive(Serialize)]
struct RewriteCheck {
    seed: CanonicalAlexander,
    rewrite: CanonicalAlexander,
    torus: CanonicalAlexander,
    equal: bool,
}

#[derive(Serialize)]
struct TorusReport {
    q: i64,
    case: String,
    n: usize,
    frequencies: (u32, u32),
    seed: BraidWord,
    start: BraidWord,
    lifted: BraidWord,
    stages: Vec<(String, String)>,
    word: lissaknot::braids::ProjectionWord,
    closure_modified: bool,
    word_identity: bool,
    rewrite_check: Option<RewriteCheck>,
}

fn plat_alexander(w: BraidWord) -> Result<CanonicalAlexander, Failure> {
    Ok(alexander(&diagram_from_plat(&PlatSpec::standard(w))?)?)
}

pub fn torus(q: i64) -> Result<Output, Failure> {
    let c = torus_pipeline(q)?;
    let expected = lissajous_projection_word(c.frequencies.0, c.frequencies.1)?;
    let rewrite_check = if [2, 4, 5].contains(&q) {
        let seed = plat_alexander(torus_seed(q)?)?;
        let rewrite = plat_alexander(lemma7_rewrite(q)?)?;
        let torus = torus_alexander(3, q)?;
        Some(RewriteCheck {
            equal: seed == rewrite && rewrite == torus,
            seed,
            rewrite,
            torus,
        })
    } else {
        None
    };
    let report = TorusReport {
        q,
        case: format!("{:?}", c.case),
        n: c.n,
        frequencies: c.frequencies,
        seed: c.seed,
        start: c.start,
        lifted: c.lifted,
        stages: c.stages.iter().map(|(n, w)| (n.clone(), w.to_string())).collect(),
        word_identity: c.word == expected,
        word: c.word,
        closure_modified: c.closure_modified,
        rewrite_check,
    };
    let mut text = String::new();
    let _ = writeln!(text, "q: {} (case {}, n = {})", q, report.case, report.n);
    let _ = writeln!(text, "seed: {}", report.seed);
    let _ = writeln!(text, "rewritten: {}", report.start);
    for (name, w) in &report.stages {
        let _ = writeln!(text, "{name}: {w}");
    }
    let _ = writeln!(text, "frequencies: ({}, {})", report.frequencies.0, report.frequencies.1);
    let _ = writeln!(text, "word: {}", report.word);
    let _ = writeln!(
        text,
        "equals the ({}, {}) arc braid: {}",
        report.frequencies.0, report.frequencies.1, report.word_identity
    );
    let _ = writeln!(
        text,
        "bottom closure: {}",
        if report.closure_modified { "modified" } else { "standard" }
    );
    if let Some(r) = &report.rewrite_check {
        let _ = writeln!(
            text,
            "rewrite check: seed {}, rewrite {}, torus {} ({})",
            r.seed,
            r.rewrite,
            r.torus,
            if r.equal { "equal" } else { "DIFFERENT" }
        );
    }
    let mut problems = Vec::new();
    if !report.word_identity {
        problems.push(format!("final word differs from {expected}"));
    }
    if report.rewrite_check.as_ref().is_some_and(|r| !r.equal) {
        problems.push("rewritten braid has a different plat closure polynomial".to_string());
    }
    let failed = (!problems.is_empty()).then(|| problems.join("; "));
    Ok(Output::new(&report, text, failed))
}
