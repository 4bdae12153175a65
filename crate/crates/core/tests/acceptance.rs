//! Acceptance gate: one PASS/FAIL line per criterion.
//!
//! Criterion 4 fails for `L(edge_pair(6))`, whose vertex connectivity is 14
//! rather than the predicted 13. That outcome is pinned exactly, so the
//! process exits nonzero only when a result differs from what is recorded
//! below.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;

use cospec_core::connectivity::{
    brute_force_connectivity, edge_connectivity, max_edge_disjoint_paths,
    max_vertex_disjoint_paths, nontrivial_edge_connectivity, verify_disconnecting_set,
    vertex_connectivity, Mode, Witness, DEFAULT_CEILING,
};
use cospec_core::families::{
    base_circulant_g, base_matching, edge_pair, edge_pair_gamma_prime_cut, edge_pair_variant4,
    line_graph_family, vertex_pair, vertex_pair_witness, FamilyInstance,
};
use cospec_core::random::{all_labeled_graphs, random_corpus};
use cospec_core::spectra::{
    char_poly_adjacency, char_poly_laplacian, cospectral, default_tolerance,
    second_smallest_laplacian_eigenvalue, zero_root_multiplicity, MatrixKind,
};
use cospec_core::switching::{switch, validate_plan};
use cospec_core::Graph;

const CORPUS_SEED: u64 = 20_240_601;

/// Result of one criterion. `known_fail` marks a failure that matches the
/// recorded outcome exactly.
struct Outcome {
    pass: bool,
    known_fail: bool,
    detail: String,
}

impl Outcome {
    fn check(pass: bool, detail: String) -> Self {
        Outcome {
            pass,
            known_fail: false,
            detail,
        }
    }
}

fn both_cospectral(fi: &FamilyInstance) -> bool {
    cospectral(&fi.gamma, &fi.gamma_prime, MatrixKind::Adjacency)
        && cospectral(&fi.gamma, &fi.gamma_prime, MatrixKind::Laplacian)
}

fn regular_pair(fi: &FamilyInstance, degree: usize, order: usize) -> bool {
    fi.gamma.order() == order
        && fi.gamma_prime.order() == order
        && fi.gamma.regular_degree() == Some(degree)
        && fi.gamma_prime.regular_degree() == Some(degree)
}

fn kappa_pair(fi: &FamilyInstance) -> (usize, usize) {
    (
        vertex_connectivity(&fi.gamma).value,
        vertex_connectivity(&fi.gamma_prime).value,
    )
}

fn kappa_prime_pair(fi: &FamilyInstance) -> (usize, usize) {
    (
        edge_connectivity(&fi.gamma).value,
        edge_connectivity(&fi.gamma_prime).value,
    )
}

fn criterion_1() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in 2..=5 {
        let fi = vertex_pair(k).expect("k >= 2");
        let kappa = kappa_pair(&fi);
        let good =
            both_cospectral(&fi) && regular_pair(&fi, 2 * k, 6 * k) && kappa == (2 * k, k + 1);
        ok &= good;
        parts.push(format!("k={k} kappa {}/{}", kappa.0, kappa.1));
    }
    Outcome::check(ok, parts.join(", "))
}

fn criterion_2() -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for k in [6, 8] {
        let fi = edge_pair(k).expect("even k >= 6");
        let kp = kappa_prime_pair(&fi);
        let kappa = kappa_pair(&fi);
        let good = both_cospectral(&fi)
            && regular_pair(&fi, 3 * k - 5, 10 * k - 8)
            && kp == (3 * k - 5, 3 * k - 6)
            && kappa == (3, 3);
        ok &= good;
        parts.push(format!(
            "k={k} order {} kappa' {}/{} kappa {}/{}",
            fi.gamma.order(),
            kp.0,
            kp.1,
            kappa.0,
            kappa.1
        ));
    }
    Outcome::check(ok, parts.join(", "))
}

fn criterion_3() -> Outcome {
    let fi = edge_pair_variant4().expect("fixed construction");
    let kp = kappa_prime_pair(&fi);
    let ok = cospectral(&fi.gamma, &fi.gamma_prime, MatrixKind::Adjacency)
        && regular_pair(&fi, 7, 36)
        && kp == (7, 6);
    Outcome::check(ok, format!("order 36, 7-regular, kappa' {}/{}", kp.0, kp.1))
}

fn criterion_4() -> Outcome {
    let edge6 = edge_pair(6).expect("k = 6");
    let variant = edge_pair_variant4().expect("fixed construction");
    let mut structural = true;
    let mut kappas = Vec::new();
    for base in [&edge6, &variant] {
        let d = base.gamma.regular_degree().expect("regular");
        let fi = line_graph_family(base).expect("regular input");
        structural &= cospectral(&fi.gamma, &fi.gamma_prime, MatrixKind::Adjacency)
            && regular_pair(&fi, 2 * d - 2, base.gamma.edge_count());
        kappas.push(kappa_pair(&fi));
    }
    let claimed = [(13, 12), (7, 6)];
    if structural && kappas == claimed {
        return Outcome::check(
            true,
            format!("kappa(L) {:?} and {:?}", kappas[0], kappas[1]),
        );
    }
    // The recorded outcome: L(gamma) at k = 6 has kappa 14, equal to the
    // smallest edge cut of gamma that leaves an edge on both sides.
    let nontrivial = nontrivial_edge_connectivity(&edge6.gamma).map_or(0, |r| r.value);
    let recorded = structural && kappas == [(14, 12), (7, 6)] && nontrivial == 14;
    Outcome {
        pass: false,
        known_fail: recorded,
        detail: format!(
            "line graphs cospectral and regular: {structural}; kappa(L) for k=6 is {}/{} (claimed 13/12), \
             for the variant {}/{} (claimed 7/6); the smallest cut of gamma leaving edges on both sides has {} edges, \
             so the identity kappa(L) = kappa' does not hold for gamma",
            kappas[0].0, kappas[0].1, kappas[1].0, kappas[1].1, nontrivial
        ),
    }
}

fn criterion_5() -> Outcome {
    let mut ok = true;
    for k in 2..=5 {
        let fi = vertex_pair(k).expect("k >= 2");
        let cut = Witness::Vertices(vertex_pair_witness(k));
        ok &= verify_disconnecting_set(&fi.gamma_prime, &cut).expect("vertices in range");
    }
    let fi = edge_pair(6).expect("k = 6");
    let cut = edge_pair_gamma_prime_cut(&fi);
    let cut_len = cut.len();
    ok &= cut_len == 12
        && verify_disconnecting_set(&fi.gamma_prime, &Witness::Edges(cut)).expect("edges exist");
    let trio = ["x1", "x2", "y"].map(|n| fi.vertex(n).expect("named vertex"));
    for g in [&fi.gamma, &fi.gamma_prime] {
        ok &= verify_disconnecting_set(g, &Witness::Vertices(trio.to_vec()))
            .expect("vertices in range");
    }
    Outcome::check(
        ok,
        format!(
            "first k+1 vertices for k=2..5, {cut_len}-edge cut of gamma', {{x1, x2, y}} = {trio:?}"
        ),
    )
}

/// Flow answers against brute force, plus witness and path checks. Returns
/// false on any disagreement.
fn oracle_case(g: &Graph) -> bool {
    let n = g.order();
    let kappa = vertex_connectivity(g);
    let lambda = edge_connectivity(g);
    let brute_v = brute_force_connectivity(g, Mode::Vertex, kappa.value, DEFAULT_CEILING)
        .expect("within ceiling");
    let brute_e = brute_force_connectivity(g, Mode::Edge, lambda.value, DEFAULT_CEILING)
        .expect("within ceiling");
    if brute_v.unwrap_or(n - 1) != kappa.value || brute_e != Some(lambda.value) {
        return false;
    }
    if kappa.witness != Witness::None
        && !verify_disconnecting_set(g, &kappa.witness).unwrap_or(false)
    {
        return false;
    }
    if !verify_disconnecting_set(g, &lambda.witness).unwrap_or(false) {
        return false;
    }
    // path systems from vertex 0 to every other vertex
    for t in 1..n {
        let e = max_edge_disjoint_paths(g, 0, t).expect("distinct ends");
        if !e.verify(g) || e.len() < lambda.value {
            return false;
        }
        if !g.has_edge(0, t) {
            let v = max_vertex_disjoint_paths(g, 0, t).expect("distinct ends");
            if !v.verify(g) || v.len() < kappa.value {
                return false;
            }
        }
    }
    true
}

fn criterion_6() -> Outcome {
    let mut enumerated = 0;
    let mut ok = true;
    for n in 2..=7 {
        for g in all_labeled_graphs(n).filter(Graph::is_connected) {
            ok &= oracle_case(&g);
            enumerated += 1;
        }
    }
    let corpus = random_corpus(CORPUS_SEED, 500, 2, 10);
    for g in &corpus {
        ok &= oracle_case(g);
    }
    Outcome::check(
        ok,
        format!(
            "{enumerated} connected labeled graphs n<=7, {} seeded random graphs n<=10 (seed {CORPUS_SEED})",
            corpus.len()
        ),
    )
}

fn generated_instances() -> Vec<FamilyInstance> {
    let mut out: Vec<FamilyInstance> = (2..=5).map(|k| vertex_pair(k).expect("k >= 2")).collect();
    out.extend([6, 8].map(|k| edge_pair(k).expect("even k >= 6")));
    out.push(edge_pair_variant4().expect("fixed construction"));
    out
}

fn whitney(g: &Graph) -> bool {
    let kappa = vertex_connectivity(g).value;
    let lambda = edge_connectivity(g).value;
    kappa <= lambda && lambda <= g.min_degree()
}

fn criterion_7() -> Outcome {
    let instances = generated_instances();
    let mut switching = true;
    let mut whitney_ok = true;
    let mut fiedler = true;
    let tol = default_tolerance();
    for fi in &instances {
        let plan = fi.plan.as_ref().expect("generated pairs carry a plan");
        let valid = validate_plan(&fi.gamma, plan)
            .map(|r| r.valid)
            .unwrap_or(false);
        let once = switch(&fi.gamma, plan).expect("valid plan");
        let twice = switch(&once, plan).expect("valid plan");
        switching &= valid
            && once == fi.gamma_prime
            && twice == fi.gamma
            && char_poly_adjacency(&once) == char_poly_adjacency(&fi.gamma);
        for g in [&fi.gamma, &fi.gamma_prime] {
            whitney_ok &= whitney(g);
            if g.is_connected() && !g.is_complete() {
                let iv = second_smallest_laplacian_eigenvalue(g, &tol).expect("order >= 2");
                let kappa = BigRational::from_integer(BigInt::from(vertex_connectivity(g).value));
                fiedler &= iv.hi <= kappa + &tol;
            }
        }
    }
    let random = random_corpus(CORPUS_SEED + 1, 100, 1, 14);
    let mut zeros = true;
    let mut symmetry = true;
    for g in &random {
        whitney_ok &= whitney(g);
        zeros &= zero_root_multiplicity(&char_poly_laplacian(g)).ok() == Some(g.components().count);
        symmetry &= char_poly_adjacency(g).spectrum_symmetric() == g.is_bipartite();
    }
    let ok = switching && whitney_ok && zeros && symmetry && fiedler;
    Outcome::check(
        ok,
        format!(
            "switching {switching}, whitney {whitney_ok}, zero multiplicity {zeros}, symmetry {symmetry}, \
             fiedler {fiedler} ({} generated pairs, {} random graphs)",
            instances.len(),
            random.len()
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    for k in 2..=8 {
        let (g, classes, _) = base_circulant_g(k).expect("k >= 2");
        let triangle_free = g
            .edges()
            .iter()
            .all(|&(u, v)| !g.neighbors(u).any(|w| g.has_edge(v, w)));
        let matching = base_matching(k).expect("k >= 2");
        let mut ends: Vec<usize> = matching.iter().flat_map(|&(a, b)| [a, b]).collect();
        ends.sort_unstable();
        ends.dedup();
        let matching_ok = matching.len() == k - 1
            && ends.len() == 2 * (k - 1)
            && matching.iter().all(|&(a, b)| {
                g.has_edge(a, b) && classes[2].contains(&a) && classes[3].contains(&b)
            });
        ok &= g.regular_degree() == Some(k)
            && triangle_free
            && vertex_connectivity(&g).value == k
            && matching_ok;
    }
    Outcome::check(
        ok,
        "k=2..8 regular, triangle-free, kappa = k, V2-V3 matching of size k-1".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut unexpected = 0;
    for (id, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        let status = if outcome.pass { "PASS" } else { "FAIL" };
        println!("criterion {id}: {status} ({secs:.1}s) {}", outcome.detail);
        if !outcome.pass && !outcome.known_fail {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criterion result(s) differ from the recorded outcome");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
