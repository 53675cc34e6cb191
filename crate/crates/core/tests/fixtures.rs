use lambda_lab::compatible_pair::{build_pair, IntMatrix};
use lambda_lab::coxeter::RootSystem;
use lambda_lab::ice_quiver::IceQuiver;
use lambda_lab::interval_quiver::{build_interval, ExtendedWord};
use lambda_lab::seed_engine::{LambdaSeed, LaurentPoly};

fn a3(word: &[u32]) -> (RootSystem, ExtendedWord) {
    let rs = RootSystem::of_type("A3").unwrap();
    let w = ExtendedWord::new(&rs, word).unwrap();
    (rs, w)
}

#[test]
fn a3_example_window() {
    let (rs, w) = a3(&[1, 2, 3, 2, 1, 2]);
    let iqp = build_interval(&rs.diagram, &w, -2, 6).unwrap();
    assert_eq!(iqp.quiver().num_vertices(), 9);
    assert_eq!(iqp.frozen_positions(), vec![-2, -1, 1]);
    assert_eq!(iqp.quiver().arrows().len(), 14);
    assert_eq!(iqp.qp.potential.len(), 6);
    let dot = iqp.quiver().to_dot();
    assert_eq!(dot.matches("shape=box").count(), 3);
}

#[test]
fn adapted_example_window() {
    let (rs, w) = a3(&[3, 1, 2, 3, 1, 2]);
    let iqp = build_interval(&rs.diagram, &w, -1, 6).unwrap();
    assert_eq!(iqp.frozen_positions(), vec![-1, 0, 2]);
    assert_eq!(iqp.regular_width(3), 2);
}

#[test]
fn uf_seed_values() {
    let mut q = IceQuiver::empty();
    q.add_vertex(1, false);
    q.add_vertex(2, true);
    q.add_arrow("a", 0, 1, false);
    let (pair, bhat, _) = build_pair(&q).unwrap();
    assert_eq!(bhat, IntMatrix::from_rows(&[vec![0, 1], vec![-1, 1]]));
    assert_eq!(pair.lambda, IntMatrix::from_rows(&[vec![0, 2], vec![-2, 0]]));
    assert_eq!(pair.d, 2);
    let (seed, _) = LambdaSeed::from_quiver(&q).unwrap();
    let next = seed.mutate(0).unwrap();
    let want = LaurentPoly::from_terms(2, [(vec![-1, 0], 1), (vec![-1, 1], 1)]);
    assert_eq!(next.cluster[0], want);
    let dec = seed.decompose(&next.cluster[0]).unwrap();
    assert_eq!(dec.g, vec![-1, 1]);
    assert_eq!(seed.tropical_invariant(&next.cluster[0], &seed.cluster[1]).unwrap(), -2);
    assert_eq!(seed.f_invariant(&next.cluster[0], &seed.cluster[0]).unwrap(), 2);
}
