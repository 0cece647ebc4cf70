//! Oriented unicyclic graphs, with the special case that fired (if any).

use metdim::graph::DiGraph;
use metdim::unicyclic::unicyclic_with_trace;

fn main() {
    let pentagon = (0..5).map(|i| (i, (i + 1) % 5));
    let cases: Vec<(&str, DiGraph)> = vec![
        ("in-arc", DiGraph::from_arcs(6, pentagon.clone().chain([(5, 0)])).unwrap()),
        ("two leaves", DiGraph::from_arcs(7, pentagon.chain([(6, 5), (0, 5)])).unwrap()),
        (
            "adjacent sink",
            DiGraph::from_arcs(6, [(5, 0), (0, 1), (2, 1), (3, 2), (4, 3), (0, 4)]).unwrap(),
        ),
    ];
    for (name, g) in cases {
        let (basis, hit) = unicyclic_with_trace(&g).unwrap();
        match hit {
            Some(h) => println!("{name}: {:?} via case {} at {}", basis.vertices, h.case.number(), h.vertex),
            None => println!("{name}: {:?}", basis.vertices),
        }
    }
}
