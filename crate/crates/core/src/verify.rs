//! Machine checks of a family instance against its expected metrics, plus
//! per-graph analysis. Reports are plain serde values; tables are rendered
//! from them.

use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::connectivity::{
    edge_connectivity, verify_disconnecting_set, vertex_connectivity, ConnectivityResult, Witness,
};
use crate::error::{Error, Result};
use crate::families::{line_graph_family, FamilyInstance, FamilyTag};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::random::random_corpus;
use crate::spectra::{
    char_poly_adjacency, char_poly_laplacian, default_tolerance,
    second_smallest_laplacian_eigenvalue, zero_root_multiplicity,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    Cospectral,
    Kappa,
    KappaPrime,
    Whitney,
    Fiedler,
    Linegraph,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Cospectral,
        Check::Kappa,
        Check::KappaPrime,
        Check::Whitney,
        Check::Fiedler,
        Check::Linegraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Cospectral => "cospectral",
            Check::Kappa => "kappa",
            Check::KappaPrime => "kappa_prime",
            Check::Whitney => "whitney",
            Check::Fiedler => "fiedler",
            Check::Linegraph => "linegraph",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::invalid(format!("unknown check {s:?}")))
    }
}

/// Comma-separated check names, or `all`.
pub fn parse_checks(list: &str) -> Result<Vec<Check>> {
    if list.trim() == "all" {
        return Ok(Check::ALL.to_vec());
    }
    let mut out: Vec<Check> = Vec::new();
    for part in list.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let c: Check = part.parse()?;
        if !out.contains(&c) {
            out.push(c);
        }
    }
    if out.is_empty() {
        return Err(Error::invalid("no checks selected"));
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    /// Reported without judgement: nothing was claimed.
    Info,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Info => "info",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Row {
    /// Check group: `basic` or one of the [`Check`] names.
    pub group: String,
    pub name: String,
    /// `gamma`, `gamma_prime`, `pair`, `L(gamma)`, `L(gamma_prime)`, ...
    pub subject: String,
    pub expected: Option<Value>,
    pub computed: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub detail: Option<String>,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pair<T> {
    pub gamma: T,
    pub gamma_prime: T,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeSummary {
    pub min: usize,
    pub max: usize,
    pub regular: Option<usize>,
}

impl DegreeSummary {
    pub fn of(g: &Graph) -> Self {
        DegreeSummary {
            min: g.min_degree(),
            max: g.max_degree(),
            regular: g.regular_degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Digests {
    pub adjacency: Pair<String>,
    pub laplacian: Pair<String>,
}

/// A graph where `kappa(L(G))` and `kappa'(G)` differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCounterexample {
    pub graph6: String,
    pub kappa_prime: usize,
    pub kappa_line: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub family: String,
    pub k: usize,
    pub seed: u64,
    pub checks: Vec<Check>,
    pub order: usize,
    pub degrees: Pair<DegreeSummary>,
    pub digests: Option<Digests>,
    pub rows: Vec<Row>,
    pub line_counterexamples: Vec<LineCounterexample>,
    pub verdict: Verdict,
    pub seconds: f64,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub checks: Vec<Check>,
    pub seed: u64,
    /// Width bound for the algebraic connectivity enclosure.
    pub fiedler_tol: BigRational,
    /// Random graphs sampled when exploring the line-graph identity.
    pub line_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            checks: Check::ALL.to_vec(),
            seed: 1,
            fiedler_tol: default_tolerance(),
            line_samples: 200,
        }
    }
}

fn judge_eq<T: PartialEq>(expected: Option<T>, computed: T) -> Verdict {
    match expected {
        None => Verdict::Info,
        Some(e) if e == computed => Verdict::Pass,
        Some(_) => Verdict::Fail,
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let t = Instant::now();
    let out = f();
    (out, t.elapsed().as_secs_f64())
}

struct Subject<'a> {
    label: &'static str,
    graph: &'a Graph,
    kappa: Option<(ConnectivityResult, f64)>,
    kappa_prime: Option<(ConnectivityResult, f64)>,
}

impl Subject<'_> {
    fn kappa(&mut self) -> &(ConnectivityResult, f64) {
        let g = self.graph;
        self.kappa
            .get_or_insert_with(|| timed(|| vertex_connectivity(g)))
    }

    fn kappa_prime(&mut self) -> &(ConnectivityResult, f64) {
        let g = self.graph;
        self.kappa_prime
            .get_or_insert_with(|| timed(|| edge_connectivity(g)))
    }
}

fn connectivity_row(
    g: &Graph,
    group: Check,
    subject: &str,
    expected: Option<usize>,
    (res, secs): &(ConnectivityResult, f64),
) -> Row {
    let mut verdict = judge_eq(expected, res.value);
    let witness_ok = match &res.witness {
        Witness::None => true,
        w => verify_disconnecting_set(g, w).unwrap_or(false),
    };
    let detail = match &res.witness {
        Witness::None => "complete graph, no separating set".to_string(),
        _ if witness_ok => format!("witness of size {} disconnects", res.witness.len()),
        _ => "witness does not disconnect".to_string(),
    };
    if !witness_ok {
        verdict = Verdict::Fail;
    }
    Row {
        group: group.name().into(),
        name: group.name().into(),
        subject: subject.into(),
        expected: expected.map(Value::from),
        computed: Value::from(res.value),
        verdict,
        witness: Some(res.witness.clone()),
        detail: Some(detail),
        seconds: *secs,
    }
}

fn info_row(group: &str, name: &str, subject: &str, computed: Value, detail: String) -> Row {
    Row {
        group: group.into(),
        name: name.into(),
        subject: subject.into(),
        expected: None,
        computed,
        verdict: Verdict::Info,
        witness: None,
        detail: Some(detail),
        seconds: 0.0,
    }
}

/// Run the selected checks on an instance. Rows whose expectation is unstated
/// are `info`; the overall verdict is `pass` iff no row failed.
pub fn verify(fi: &FamilyInstance, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let e = &fi.expected;
    let mut subjects = [
        Subject {
            label: "gamma",
            graph: &fi.gamma,
            kappa: None,
            kappa_prime: None,
        },
        Subject {
            label: "gamma_prime",
            graph: &fi.gamma_prime,
            kappa: None,
            kappa_prime: None,
        },
    ];
    let expected_kappa = [e.kappa_gamma, e.kappa_gamma_prime];
    let expected_kappa_prime = [e.kappa_prime_gamma, e.kappa_prime_gamma_prime];
    let mut rows = Vec::new();

    for s in &subjects {
        rows.push(Row {
            group: "basic".into(),
            name: "order".into(),
            subject: s.label.into(),
            expected: e.order.map(Value::from),
            computed: Value::from(s.graph.order()),
            verdict: judge_eq(e.order, s.graph.order()),
            witness: None,
            detail: None,
            seconds: 0.0,
        });
        let d = s.graph.regular_degree();
        rows.push(Row {
            group: "basic".into(),
            name: "degree".into(),
            subject: s.label.into(),
            expected: e.degree.map(Value::from),
            computed: d.map_or(Value::Null, Value::from),
            verdict: judge_eq(e.degree.map(Some), d),
            witness: None,
            detail: d.is_none().then(|| {
                format!(
                    "not regular: degrees {}..{}",
                    s.graph.min_degree(),
                    s.graph.max_degree()
                )
            }),
            seconds: 0.0,
        });
    }

    let mut digests = None;
    if opts.checks.contains(&Check::Cospectral) {
        let ((a, a2), ta) = timed(|| {
            (
                char_poly_adjacency(&fi.gamma),
                char_poly_adjacency(&fi.gamma_prime),
            )
        });
        let ((l, l2), tl) = timed(|| {
            (
                char_poly_laplacian(&fi.gamma),
                char_poly_laplacian(&fi.gamma_prime),
            )
        });
        for (name, same, secs) in [("adjacency", a == a2, ta), ("laplacian", l == l2, tl)] {
            rows.push(Row {
                group: Check::Cospectral.name().into(),
                name: format!("cospectral_{name}"),
                subject: "pair".into(),
                expected: Some(Value::Bool(true)),
                computed: Value::Bool(same),
                verdict: if same { Verdict::Pass } else { Verdict::Fail },
                witness: None,
                detail: Some("exact characteristic polynomial equality".into()),
                seconds: secs,
            });
        }
        digests = Some(Digests {
            adjacency: Pair {
                gamma: a.digest(),
                gamma_prime: a2.digest(),
            },
            laplacian: Pair {
                gamma: l.digest(),
                gamma_prime: l2.digest(),
            },
        });
    }

    if opts.checks.contains(&Check::Kappa) {
        for (s, exp) in subjects.iter_mut().zip(expected_kappa) {
            let g = s.graph;
            let label = s.label;
            rows.push(connectivity_row(g, Check::Kappa, label, exp, s.kappa()));
        }
    }

    if opts.checks.contains(&Check::KappaPrime) {
        for (s, exp) in subjects.iter_mut().zip(expected_kappa_prime) {
            let g = s.graph;
            let label = s.label;
            rows.push(connectivity_row(
                g,
                Check::KappaPrime,
                label,
                exp,
                s.kappa_prime(),
            ));
        }
    }

    if opts.checks.contains(&Check::Whitney) {
        for s in subjects.iter_mut() {
            let k = s.kappa().0.value;
            let kp = s.kappa_prime().0.value;
            let delta = s.graph.min_degree();
            let holds = k <= kp && kp <= delta;
            rows.push(Row {
                group: Check::Whitney.name().into(),
                name: "whitney".into(),
                subject: s.label.into(),
                expected: Some(Value::Bool(true)),
                computed: Value::Bool(holds),
                verdict: if holds { Verdict::Pass } else { Verdict::Fail },
                witness: None,
                detail: Some(format!("kappa {k} <= kappa' {kp} <= delta {delta}")),
                seconds: 0.0,
            });
        }
    }

    if opts.checks.contains(&Check::Fiedler) {
        for s in subjects.iter_mut() {
            let g = s.graph;
            if g.order() < 2 || g.is_complete() || !g.is_connected() {
                rows.push(info_row(
                    "fiedler",
                    "fiedler_bound",
                    s.label,
                    Value::Null,
                    "not applicable: needs a connected non-complete graph".into(),
                ));
                continue;
            }
            let kappa = s.kappa().0.value;
            let (interval, secs) =
                timed(|| second_smallest_laplacian_eigenvalue(g, &opts.fiedler_tol));
            let row = match interval {
                Ok(iv) => {
                    let bound = BigRational::from_integer(kappa.into()) + &opts.fiedler_tol;
                    let ok = iv.hi <= bound;
                    let sum = iv.summary();
                    Row {
                        group: Check::Fiedler.name().into(),
                        name: "fiedler_bound".into(),
                        subject: s.label.into(),
                        expected: Some(json!(format!("mu2 <= kappa = {kappa}"))),
                        computed: serde_json::to_value(&sum).expect("summary serializes"),
                        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
                        witness: None,
                        detail: Some(format!(
                            "mu2 in [{:.6}, {:.6}]",
                            sum.lo_approx, sum.hi_approx
                        )),
                        seconds: secs,
                    }
                }
                Err(err) => Row {
                    group: Check::Fiedler.name().into(),
                    name: "fiedler_bound".into(),
                    subject: s.label.into(),
                    expected: None,
                    computed: Value::Null,
                    verdict: Verdict::Fail,
                    witness: None,
                    detail: Some(err.to_string()),
                    seconds: secs,
                },
            };
            rows.push(row);
        }
    }

    let mut line_counterexamples = Vec::new();
    if opts.checks.contains(&Check::Linegraph) {
        if matches!(fi.tag, FamilyTag::LineOf(_)) {
            rows.push(info_row(
                "linegraph",
                "line_pair",
                "pair",
                Value::Null,
                "skipped: instance is already a line-graph pair".into(),
            ));
        } else {
            rows.extend(line_rows(fi, &mut subjects));
        }
        let (found, sampled) = explore_line_identity(opts.seed, opts.line_samples);
        rows.push(info_row(
            "linegraph",
            "line_identity_random",
            "random",
            json!({ "sampled": sampled, "counterexamples": found.len() }),
            format!("kappa(L(G)) vs kappa'(G) on {sampled} seeded random connected graphs"),
        ));
        line_counterexamples = found.into_iter().take(5).collect();
    }

    let verdict = if rows.iter().any(|r| r.verdict == Verdict::Fail) {
        Verdict::Fail
    } else {
        Verdict::Pass
    };
    VerificationReport {
        family: fi.tag.to_string(),
        k: fi.k,
        seed: opts.seed,
        checks: opts.checks.clone(),
        order: fi.gamma.order(),
        degrees: Pair {
            gamma: DegreeSummary::of(&fi.gamma),
            gamma_prime: DegreeSummary::of(&fi.gamma_prime),
        },
        digests,
        rows,
        line_counterexamples,
        verdict,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn line_rows(fi: &FamilyInstance, subjects: &mut [Subject<'_>; 2]) -> Vec<Row> {
    let mut rows = Vec::new();
    let line = match line_graph_family(fi) {
        Ok(l) => l,
        Err(err) => {
            rows.push(Row {
                group: "linegraph".into(),
                name: "line_pair".into(),
                subject: "pair".into(),
                expected: None,
                computed: Value::Null,
                verdict: Verdict::Fail,
                witness: None,
                detail: Some(err.to_string()),
                seconds: 0.0,
            });
            return rows;
        }
    };
    let (same, secs) =
        timed(|| char_poly_adjacency(&line.gamma) == char_poly_adjacency(&line.gamma_prime));
    rows.push(Row {
        group: "linegraph".into(),
        name: "line_cospectral_adjacency".into(),
        subject: "pair".into(),
        expected: Some(Value::Bool(true)),
        computed: Value::Bool(same),
        verdict: if same { Verdict::Pass } else { Verdict::Fail },
        witness: None,
        detail: None,
        seconds: secs,
    });
    let line_expected = [line.expected.kappa_gamma, line.expected.kappa_gamma_prime];
    for ((s, lg), exp) in subjects
        .iter_mut()
        .zip([&line.gamma, &line.gamma_prime])
        .zip(line_expected)
    {
        let label = if s.label == "gamma" {
            "L(gamma)"
        } else {
            "L(gamma_prime)"
        };
        let d = lg.regular_degree();
        rows.push(Row {
            group: "linegraph".into(),
            name: "line_degree".into(),
            subject: label.into(),
            expected: line.expected.degree.map(Value::from),
            computed: d.map_or(Value::Null, Value::from),
            verdict: judge_eq(line.expected.degree.map(Some), d),
            witness: None,
            detail: None,
            seconds: 0.0,
        });
        let res = timed(|| vertex_connectivity(lg));
        let mut row = connectivity_row(lg, Check::Linegraph, label, exp, &res);
        row.name = "line_kappa".into();
        rows.push(row);
        let kp = s.kappa_prime().0.value;
        let agrees = res.0.value == kp;
        rows.push(info_row(
            "linegraph",
            "line_identity",
            label,
            Value::Bool(agrees),
            format!("kappa(L) = {} vs computed kappa' = {kp}", res.0.value),
        ));
    }
    rows
}

/// Sample connected random graphs and collect those where the vertex
/// connectivity of the line graph differs from the edge connectivity.
/// Returns the counterexamples and the number of graphs examined.
pub fn explore_line_identity(seed: u64, samples: usize) -> (Vec<LineCounterexample>, usize) {
    let mut found = Vec::new();
    let mut sampled = 0;
    for g in random_corpus(seed, samples, 3, 9) {
        if !g.is_connected() {
            continue;
        }
        sampled += 1;
        let kp = edge_connectivity(&g).value;
        let kl = vertex_connectivity(&g.line_graph()).value;
        if kp != kl {
            found.push(LineCounterexample {
                graph6: encode_graph6(&g),
                kappa_prime: kp,
                kappa_line: kl,
            });
        }
    }
    (found, sampled)
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned text view. Failing rows are marked with `>>`.
    pub fn render_table(&self) -> String {
        let mut out = format!(
            "family {} k={} order {} seed {} verdict {}\n",
            self.family,
            self.k,
            self.order,
            self.seed,
            self.verdict.label()
        );
        let cells: Vec<[String; 6]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.subject.clone(),
                    r.expected.as_ref().map_or("-".into(), value_text),
                    value_text(&r.computed),
                    r.verdict.label().into(),
                    format!("{:.3}", r.seconds),
                ]
            })
            .collect();
        let head = [
            "check", "subject", "expected", "computed", "verdict", "secs",
        ];
        let mut width = head.map(str::len);
        for c in &cells {
            for (w, s) in width.iter_mut().zip(c) {
                *w = (*w).max(s.chars().count());
            }
        }
        let line = |mark: &str, c: &[String]| {
            let mut s = String::from(mark);
            for (i, (w, v)) in width.iter().zip(c).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{v:<w$}", w = *w);
            }
            s.trim_end().to_string() + "\n"
        };
        out += &line("   ", &head.map(String::from));
        for (r, c) in self.rows.iter().zip(&cells) {
            let mark = if r.verdict == Verdict::Fail {
                ">> "
            } else {
                "   "
            };
            out += &line(mark, c);
        }
        out
    }
}

fn value_text(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("hi_approx") => {
            let hi = m["hi_approx"].as_f64().unwrap_or(f64::NAN);
            format!("mu2 <= {hi:.6}")
        }
        other => other.to_string(),
    }
}

/// One line of the per-`k` summary table.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub family: String,
    pub k: usize,
    pub order: usize,
    pub degree: Option<usize>,
    pub kappa: [usize; 2],
    pub kappa_prime: [usize; 2],
    pub cospectral: bool,
    /// Every stated expectation among order, degree, kappa, kappa' holds.
    pub matches_expected: bool,
    pub seconds: f64,
}

pub fn summarize(fi: &FamilyInstance) -> TableRow {
    let t = Instant::now();
    let cospectral = char_poly_adjacency(&fi.gamma) == char_poly_adjacency(&fi.gamma_prime);
    let kappa = [
        vertex_connectivity(&fi.gamma).value,
        vertex_connectivity(&fi.gamma_prime).value,
    ];
    let kappa_prime = [
        edge_connectivity(&fi.gamma).value,
        edge_connectivity(&fi.gamma_prime).value,
    ];
    let e = &fi.expected;
    let degree = fi
        .gamma
        .regular_degree()
        .filter(|&d| fi.gamma_prime.regular_degree() == Some(d));
    let ok = |exp: Option<usize>, got: usize| exp.is_none_or(|x| x == got);
    let matches_expected = ok(e.order, fi.gamma.order())
        && e.degree.is_none_or(|d| degree == Some(d))
        && ok(e.kappa_gamma, kappa[0])
        && ok(e.kappa_gamma_prime, kappa[1])
        && ok(e.kappa_prime_gamma, kappa_prime[0])
        && ok(e.kappa_prime_gamma_prime, kappa_prime[1])
        && cospectral;
    TableRow {
        family: fi.tag.to_string(),
        k: fi.k,
        order: fi.gamma.order(),
        degree,
        kappa,
        kappa_prime,
        cospectral,
        matches_expected,
        seconds: t.elapsed().as_secs_f64(),
    }
}

pub fn render_summary(rows: &[TableRow]) -> String {
    let mut out = format!(
        "{:<14} {:>3} {:>6} {:>6} {:>9} {:>11} {:>10} {:>8} {:>8}\n",
        "family", "k", "order", "degree", "kappa", "kappa'", "cospectral", "claims", "secs"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:<14} {:>3} {:>6} {:>6} {:>9} {:>11} {:>10} {:>8} {:>8.3}",
            r.family,
            r.k,
            r.order,
            r.degree.map_or("-".into(), |d| d.to_string()),
            format!("{}/{}", r.kappa[0], r.kappa[1]),
            format!("{}/{}", r.kappa_prime[0], r.kappa_prime[1]),
            r.cospectral,
            if r.matches_expected { "PASS" } else { "FAIL" },
            r.seconds
        );
    }
    out
}

/// Invariants of a single graph, with the spectral bipartiteness test
/// cross-checked against a 2-colouring and the Laplacian zero multiplicity
/// against the component count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphAnalysis {
    pub order: usize,
    pub edges: usize,
    pub regular: Option<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub components: usize,
    pub laplacian_zero_multiplicity: usize,
    pub adjacency_digest: String,
    pub laplacian_digest: String,
    pub kappa: usize,
    pub kappa_prime: usize,
    pub bipartite_by_spectrum: bool,
    pub bipartite_by_coloring: bool,
    /// Both cross-checks agree.
    pub consistent: bool,
}

pub fn analyze_graph(g: &Graph) -> GraphAnalysis {
    let a = char_poly_adjacency(g);
    let l = char_poly_laplacian(g);
    let components = g.components().count;
    let zero = zero_root_multiplicity(&l).unwrap_or(0);
    let by_spectrum = a.spectrum_symmetric();
    let by_coloring = g.is_bipartite();
    GraphAnalysis {
        order: g.order(),
        edges: g.edge_count(),
        regular: g.regular_degree(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
        components,
        laplacian_zero_multiplicity: zero,
        adjacency_digest: a.digest(),
        laplacian_digest: l.digest(),
        kappa: vertex_connectivity(g).value,
        kappa_prime: edge_connectivity(g).value,
        bipartite_by_spectrum: by_spectrum,
        bipartite_by_coloring: by_coloring,
        consistent: by_spectrum == by_coloring && zero == components,
    }
}

impl GraphAnalysis {
    pub fn render(&self, index: usize) -> String {
        format!(
            "graph {index}: order {} edges {} degree {} components {} kappa {} kappa' {} bipartite {} digest {}{}",
            self.order,
            self.edges,
            self.regular.map_or(format!("{}..{}", self.min_degree, self.max_degree), |d| d.to_string()),
            self.components,
            self.kappa,
            self.kappa_prime,
            self.bipartite_by_spectrum,
            self.adjacency_digest,
            if self.consistent { "" } else { " INCONSISTENT" }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{edge_pair, vertex_pair};

    #[test]
    fn check_parsing() {
        assert_eq!(parse_checks("all").unwrap().len(), 6);
        assert_eq!(
            parse_checks("kappa, kappa_prime,kappa").unwrap(),
            vec![Check::Kappa, Check::KappaPrime]
        );
        assert!(parse_checks("kappa,bogus").is_err());
        assert!(parse_checks("").is_err());
    }

    #[test]
    fn vertex_family_passes_all() {
        let fi = vertex_pair(3).unwrap();
        let opts = VerifyOptions {
            line_samples: 30,
            ..Default::default()
        };
        let r = verify(&fi, &opts);
        assert!(r.passed(), "{}", r.render_table());
        let kappa: Vec<_> = r
            .rows
            .iter()
            .filter(|r| r.name == "kappa")
            .map(|r| &r.computed)
            .collect();
        assert_eq!(kappa, vec![&Value::from(6), &Value::from(4)]);
        let d = r.digests.as_ref().unwrap();
        assert_eq!(d.adjacency.gamma, d.adjacency.gamma_prime);
    }

    #[test]
    fn mismatch_fails_and_is_marked() {
        let mut fi = edge_pair(6).unwrap();
        fi.expected.kappa_prime_gamma_prime = Some(13);
        let opts = VerifyOptions {
            checks: vec![Check::KappaPrime],
            ..Default::default()
        };
        let r = verify(&fi, &opts);
        assert!(!r.passed());
        let table = r.render_table();
        assert!(
            table
                .lines()
                .any(|l| l.starts_with(">> kappa_prime") && l.contains("gamma_prime")),
            "{table}"
        );
    }

    #[test]
    fn analysis_of_petersen() {
        let a = analyze_graph(&Graph::petersen());
        assert_eq!((a.kappa, a.kappa_prime), (3, 3));
        assert!(!a.bipartite_by_spectrum && a.consistent);
        assert_eq!(a.regular, Some(3));
    }

    #[test]
    fn random_identity_exploration_finds_counterexamples() {
        let (found, sampled) = explore_line_identity(3, 60);
        assert!(sampled > 0);
        for c in &found {
            assert_ne!(c.kappa_prime, c.kappa_line);
        }
    }
}
