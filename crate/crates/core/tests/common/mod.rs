#![allow(dead_code)]

use std::path::PathBuf;

use spectral_cycles::{generate, BipartiteGraph, GenKind, GenSpec};

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

pub fn load_alist(name: &str) -> Option<BipartiteGraph> {
    let text = std::fs::read_to_string(fixture(name)).ok()?;
    Some(spectral_cycles::parse_alist(&text).expect("fixture parses"))
}

/// Cycle on `len` nodes, `len` even and at least 4.
pub fn cycle(len: usize) -> BipartiteGraph {
    let h = len / 2;
    BipartiteGraph::new(h, h, (0..h).flat_map(|i| [(i, i), ((i + 1) % h, i)])).unwrap()
}

/// Path on `nodes` nodes, alternating sides.
pub fn path(nodes: usize) -> BipartiteGraph {
    let n = nodes.div_ceil(2);
    let m = nodes / 2;
    let edges = (0..nodes - 1).map(|k| {
        if k % 2 == 0 {
            (k / 2, k / 2)
        } else {
            (k / 2 + 1, k / 2)
        }
    });
    BipartiteGraph::new(n, m, edges).unwrap()
}

/// Incidence graph of the Fano plane: 3-regular, 14 nodes, girth 6.
pub fn heawood() -> BipartiteGraph {
    let edges = (0..7).flat_map(|line| [0, 1, 3].map(|s| ((line + s) % 7, line)));
    BipartiteGraph::new(7, 7, edges).unwrap()
}

/// Two nodes joined by three internally disjoint paths of two edges each,
/// plus a pendant: an irregular graph with several overlapping 4-cycles.
pub fn theta_with_tail() -> BipartiteGraph {
    BipartiteGraph::new(
        3,
        3,
        [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2), (2, 2)],
    )
    .unwrap()
}

/// K_{2,2} with a pendant check node.
pub fn square_with_pendant() -> BipartiteGraph {
    BipartiteGraph::new(2, 3, [(0, 0), (0, 1), (1, 0), (1, 1), (1, 2)]).unwrap()
}

/// Spider with three legs of length two.
pub fn spider() -> BipartiteGraph {
    BipartiteGraph::new(4, 3, [(0, 0), (0, 1), (0, 2), (1, 0), (2, 1), (3, 2)]).unwrap()
}

/// Every graph with at most 14 nodes used for walk classification.
pub fn small_corpus() -> Vec<(String, BipartiteGraph)> {
    let mut out: Vec<(String, BipartiteGraph)> = vec![
        ("K22".into(), BipartiteGraph::complete(2, 2)),
        ("K23".into(), BipartiteGraph::complete(2, 3)),
        ("K33".into(), BipartiteGraph::complete(3, 3)),
        ("K34".into(), BipartiteGraph::complete(3, 4)),
        ("K44".into(), BipartiteGraph::complete(4, 4)),
        ("K14".into(), BipartiteGraph::complete(1, 4)),
        ("C6".into(), cycle(6)),
        ("C8".into(), cycle(8)),
        ("C10".into(), cycle(10)),
        ("C12".into(), cycle(12)),
        ("C14".into(), cycle(14)),
        ("Heawood".into(), heawood()),
        ("P5".into(), path(5)),
        ("P9".into(), path(9)),
        ("spider".into(), spider()),
        ("theta+tail".into(), theta_with_tail()),
        ("square+pendant".into(), square_with_pendant()),
    ];
    for seed in 0..8 {
        let kind = GenKind::RandomIrregular {
            n: 6,
            m: 6,
            edge_prob: 0.35,
        };
        out.push((
            format!("irregular#{seed}"),
            generate(&GenSpec::new(kind, seed)).unwrap(),
        ));
    }
    for seed in 0..4 {
        let kind = GenKind::RandomVariableRegular {
            n: 8,
            d_v: 2,
            w_degree_bounds: (1, 4),
        };
        let spec = GenSpec::new(kind, seed).with_min_girth(6);
        if let Ok(g) = generate(&spec) {
            if g.node_count() <= 14 {
                out.push((format!("half-regular#{seed}"), g));
            }
        }
    }
    for seed in 0..4 {
        let spec = GenSpec::new(
            GenKind::RandomBiRegular {
                n: 6,
                d_v: 2,
                d_c: 2,
            },
            seed,
        );
        out.push((format!("2-regular#{seed}"), generate(&spec).unwrap()));
    }
    out
}
