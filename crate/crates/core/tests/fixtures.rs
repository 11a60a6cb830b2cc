mod common;

use spectral_cycles::spectrum::spectrum_residual;
use spectral_cycles::walks::OmegaFamily;
use spectral_cycles::{
    auto_lengths, classify, count_cycles, exact_traces, girth, parse_alist, write_alist, Count,
    GirthValue, GraphClass, Method,
};

#[test]
fn tanner_structure() {
    let Some(g) = common::load_alist("tanner_155_64.alist") else {
        eprintln!("warning: Tanner fixture missing");
        return;
    };
    assert_eq!((g.n(), g.m(), g.edge_count()), (155, 93, 465));
    assert_eq!(classify(&g).1, GraphClass::BiRegular { d_v: 3, d_c: 5 });
    assert_eq!(girth(&g), GirthValue::Finite(8));
    assert_eq!(parse_alist(&write_alist(&g)).unwrap(), g);
}

#[test]
fn tanner_traces() {
    let Some(g) = common::load_alist("tanner_155_64.alist") else {
        return;
    };
    let t = exact_traces::<Count>(&g, 12).unwrap();
    let even: Vec<Count> = (2..=12).step_by(2).map(|k| *t.get(k).unwrap()).collect();
    assert_eq!(even, [930, 6510, 53010, 475230, 4636050, 49222110]);
    let residual = spectrum_residual::<f64>(&g, 12).unwrap();
    assert!(residual.iter().all(|&(_, e)| e < 1e-8), "{residual:?}");
}

#[test]
fn tanner_counts_and_terms() {
    let Some(g) = common::load_alist("tanner_155_64.alist") else {
        return;
    };
    let (_, class) = classify(&g);
    let lengths = auto_lengths(class, girth(&g));
    let r = count_cycles::<Count>(&g, &lengths).unwrap();
    assert_eq!(
        r.counts.values().copied().collect::<Vec<_>>(),
        [465, 3720, 22630]
    );
    assert_eq!(r.methods[&8], Method::BiRegular);
    assert_eq!(r.methods[&10], Method::BiRegularGirthPlus2);
    assert_eq!(r.methods[&12], Method::BiRegularGirthPlus4);
    assert_eq!(r.terms[&8].omega, 467790);
    assert_eq!(r.terms[&12].omega_family, OmegaFamily::BiRegularTreeDp);
    assert_eq!(r.terms[&10].psi, 223200);
    assert_eq!(r.terms[&12].psi, 7053120);

    let shorter = count_cycles::<Count>(&g, &[4, 6, 14, 16]).unwrap();
    assert_eq!(shorter.counts[&4], 0);
    assert_eq!(shorter.counts[&6], 0);
    assert_eq!(shorter.refused.len(), 2);
}
