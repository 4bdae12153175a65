use cospec_core::connectivity::{
    edge_connectivity, min_restricted_edge_cut, verify_disconnecting_set, vertex_connectivity,
    Witness,
};
use cospec_core::families::{
    base_circulant_g, base_matching, build, edge_pair, edge_pair_gamma_cut,
    edge_pair_gamma_prime_cut, edge_pair_variant4, edge_pair_with, line_graph_family,
    variant4_replacement, vertex_pair, vertex_pair_witness, EdgePairOptions, FamilyTag,
};
use cospec_core::spectra::{cospectral, MatrixKind};
use cospec_core::switching::{switch, validate_plan};
use cospec_core::Graph;

fn count_in(g: &Graph, v: usize, r: &std::ops::Range<usize>) -> usize {
    r.clone().filter(|&u| g.has_edge(v, u)).count()
}

fn triangle_free(g: &Graph) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| !g.neighbors(u).any(|w| g.has_edge(v, w)))
}

#[test]
fn base_graph_examples() {
    let (g, _, _) = base_circulant_g(2).unwrap();
    assert_eq!((g.order(), g.regular_degree()), (5, Some(2)));
    assert!(g.is_connected());
    let (g, classes, _) = base_circulant_g(3).unwrap();
    assert_eq!((g.order(), g.regular_degree()), (8, Some(3)));
    assert!(triangle_free(&g));
    assert_eq!(vertex_connectivity(&g).value, 3);
    let m = base_matching(3).unwrap();
    assert_eq!(m.len(), 2);
    for (a, b) in m {
        assert!(g.has_edge(a, b));
        assert!(classes[2].contains(&a) && classes[3].contains(&b));
    }
    assert!(base_circulant_g(1).is_err());
}

#[test]
fn vertex_pair_examples() {
    for (k, kappa) in [(2, (4, 3)), (3, (6, 4))] {
        let fi = vertex_pair(k).unwrap();
        assert_eq!(fi.gamma.order(), 6 * k);
        assert_eq!(fi.gamma.regular_degree(), Some(2 * k));
        assert_eq!(fi.gamma_prime.regular_degree(), Some(2 * k));
        let got = (
            vertex_connectivity(&fi.gamma).value,
            vertex_connectivity(&fi.gamma_prime).value,
        );
        assert_eq!(got, kappa);
    }
    assert!(vertex_pair(1).is_err());
}

#[test]
fn vertex_pair_structure() {
    for k in 2..6 {
        let fi = vertex_pair(k).unwrap();
        let x = fi.range("X");
        assert_eq!(x, 0..2 * k);
        for g in [&fi.gamma, &fi.gamma_prime] {
            for v in x.clone() {
                assert_eq!(count_in(g, v, &x), 0);
            }
            for y in 2 * k..6 * k {
                assert_eq!(count_in(g, y, &x), k, "k={k} y={y}");
            }
        }
        assert!(
            validate_plan(&fi.gamma, fi.plan.as_ref().unwrap())
                .unwrap()
                .valid
        );
        let (rest, map) = fi
            .gamma_prime
            .delete_vertices(&vertex_pair_witness(k))
            .unwrap();
        let parts = rest.components();
        assert!(parts.count >= 2);
        let u: Vec<usize> = fi.range("U").map(|v| map[v].unwrap()).collect();
        assert!(u.iter().all(|&a| parts.same(a, u[0])));
        assert!(parts.sizes().contains(&(k + 1)));
    }
}

#[test]
fn edge_pair_examples() {
    let fi = edge_pair(6).unwrap();
    assert_eq!(
        (fi.gamma.order(), fi.gamma.regular_degree()),
        (52, Some(13))
    );
    assert_eq!(edge_connectivity(&fi.gamma).value, 13);
    assert_eq!(edge_connectivity(&fi.gamma_prime).value, 12);
    let cut = edge_pair_gamma_prime_cut(&fi);
    assert_eq!(cut.len(), 12);
    assert!(verify_disconnecting_set(&fi.gamma_prime, &Witness::Edges(cut)).unwrap());

    let fi = edge_pair(8).unwrap();
    assert_eq!(
        (fi.gamma.order(), fi.gamma.regular_degree()),
        (72, Some(19))
    );
    assert_eq!(edge_connectivity(&fi.gamma).value, 19);
    assert_eq!(edge_connectivity(&fi.gamma_prime).value, 18);

    for k in [0, 4, 5, 7] {
        let err = edge_pair(k).unwrap_err().to_string();
        assert!(err.contains("k must be even and ≥ 6"), "{err}");
    }
}

#[test]
fn edge_pair_structure() {
    for k in [6, 8, 10] {
        let fi = edge_pair(k).unwrap();
        let (x1, x2, y) = (fi.range("X1"), fi.range("X2"), fi.range("Y"));
        let x = x1.start..x2.end;
        assert_eq!((x1.len(), x2.len(), y.len()), (2 * k, 2 * k, 6 * k - 8));
        assert_eq!(fi.vertex("x1"), Some(k - 1));
        assert_eq!(fi.vertex("x2"), Some(3 * k - 1));
        assert_eq!(fi.vertex("y"), Some(fi.range("H1").end - 1));
        for g in [&fi.gamma, &fi.gamma_prime] {
            assert_eq!(
                g.induced(&y.clone().collect::<Vec<_>>()).components().count,
                2
            );
            for v in x.clone() {
                assert_eq!((count_in(g, v, &x), count_in(g, v, &y)), (2 * k - 3, k - 2));
            }
            for h in ["H1", "H2"] {
                for v in fi.range(h) {
                    assert_eq!((count_in(g, v, &y), count_in(g, v, &x)), (2 * k - 5, k));
                    for c in [&x1, &x2] {
                        assert!([0, k].contains(&count_in(g, v, c)));
                    }
                }
            }
            for c in ["Kkm1", "Kkp1"] {
                for v in fi.range(c) {
                    assert_eq!((count_in(g, v, &y), count_in(g, v, &x)), (3 * k - 5, 0));
                }
            }
            let trio = vec![
                fi.vertex("x1").unwrap(),
                fi.vertex("x2").unwrap(),
                fi.vertex("y").unwrap(),
            ];
            assert!(verify_disconnecting_set(g, &Witness::Vertices(trio)).unwrap());
        }
        let plan = fi.plan.as_ref().unwrap();
        assert!(validate_plan(&fi.gamma, plan).unwrap().valid);
        assert_eq!(switch(&fi.gamma, plan).unwrap(), fi.gamma_prime);
        let gamma_cut = edge_pair_gamma_cut(&fi);
        assert_eq!(gamma_cut.len(), 3 * k - 4);
        assert!(verify_disconnecting_set(&fi.gamma, &Witness::Edges(gamma_cut)).unwrap());
    }
}

#[test]
fn smallest_cross_cut_of_gamma() {
    for k in [6, 8] {
        let fi = edge_pair(k).unwrap();
        let y = fi.range("Y");
        let across = |u: usize, v: usize| y.contains(&u) != y.contains(&v);
        let r = min_restricted_edge_cut(&fi.gamma, across).unwrap();
        assert_eq!(r.value, 3 * k - 4);
    }
}

#[test]
fn edge_pair_overrides() {
    // at k = 8, H1 is 4-regular on 13 vertices and H2 is 2-regular on 11
    let h1 = Graph::circulant(13, &[1, 5]).unwrap();
    let h2 = Graph::circulant(11, &[3]).unwrap();
    let opts = EdgePairOptions {
        h1: Some(h1),
        h2: Some(h2),
    };
    let fi = edge_pair_with(8, opts).unwrap();
    assert!(cospectral(
        &fi.gamma,
        &fi.gamma_prime,
        MatrixKind::Adjacency
    ));
    assert_eq!(fi.gamma.regular_degree(), Some(19));
    let bad = EdgePairOptions {
        h1: Some(Graph::circulant(13, &[1]).unwrap()),
        h2: None,
    };
    assert!(edge_pair_with(8, bad).is_err());
}

#[test]
fn variant_examples() {
    let r = variant4_replacement();
    assert_eq!(r.order(), 12);
    assert_eq!(r.degrees()[..3], [3, 3, 3]);
    assert!(r.degrees()[3..].iter().all(|&d| d == 7));
    let fi = edge_pair_variant4().unwrap();
    assert_eq!(fi.gamma.order(), 36);
    assert_eq!(fi.gamma.regular_degree(), Some(7));
    assert_eq!(fi.gamma_prime.regular_degree(), Some(7));
    assert!(cospectral(
        &fi.gamma,
        &fi.gamma_prime,
        MatrixKind::Adjacency
    ));
    assert_eq!(edge_connectivity(&fi.gamma).value, 7);
    assert_eq!(edge_connectivity(&fi.gamma_prime).value, 6);
    // the three replacement vertices attached to X: one on X12, two on X22
    let (x12, x22) = (fi.range("X12"), fi.range("X22"));
    let attach: Vec<(usize, usize)> = fi
        .range("H2")
        .map(|v| (count_in(&fi.gamma, v, &x12), count_in(&fi.gamma, v, &x22)))
        .collect();
    assert_eq!(attach.iter().filter(|a| a.0 > 0).count(), 1);
    assert_eq!(attach.iter().filter(|a| a.1 > 0).count(), 2);
}

#[test]
fn line_families() {
    let fi = line_graph_family(&edge_pair_variant4().unwrap()).unwrap();
    assert_eq!(fi.gamma.order(), 126);
    assert_eq!(fi.gamma.regular_degree(), Some(12));
    assert_eq!(fi.gamma_prime.regular_degree(), Some(12));
    assert!(cospectral(
        &fi.gamma,
        &fi.gamma_prime,
        MatrixKind::Adjacency
    ));
    assert_eq!(
        (fi.expected.kappa_gamma, fi.expected.kappa_gamma_prime),
        (Some(7), Some(6))
    );
    assert!(fi.plan.is_none());

    let fi = build(&"line-of-edge".parse().unwrap(), Some(6)).unwrap();
    assert_eq!(fi.gamma.order(), 338);
    assert_eq!(fi.gamma.regular_degree(), Some(24));
    assert_eq!(fi.tag, FamilyTag::LineOf(Box::new(FamilyTag::Edge)));
}

#[test]
fn tags_and_build_errors() {
    for name in [
        "vertex",
        "edge",
        "edge-variant4",
        "line-of-edge",
        "line-of-vertex",
    ] {
        assert_eq!(name.parse::<FamilyTag>().unwrap().to_string(), name);
    }
    assert!("bogus".parse::<FamilyTag>().is_err());
    assert!(build(&FamilyTag::Edge, Some(4)).is_err());
    assert!(build(&FamilyTag::Vertex, None).is_err());
    assert!(build(&FamilyTag::EdgeVariant4, Some(6)).is_err());
    assert_eq!(
        build(&FamilyTag::EdgeVariant4, None).unwrap().gamma.order(),
        36
    );
}

#[test]
fn exports() {
    let fi = edge_pair(6).unwrap();
    assert_eq!(fi.graph6_lines().lines().count(), 2);
    let meta: serde_json::Value = serde_json::from_str(&fi.meta_json()).unwrap();
    assert_eq!(meta["named"]["x1"], 5);
    assert_eq!(meta["named"]["x2"], 17);
    assert_eq!(meta["expected"]["kappa_prime_gamma_prime"], 12);
    assert_eq!(meta["ranges"]["X11"], serde_json::json!([0, 5]));
    let vertex = vertex_pair(2).unwrap();
    let meta: serde_json::Value = serde_json::from_str(&vertex.meta_json()).unwrap();
    assert!(meta["expected"]["kappa_prime_gamma"].is_null());
}
