//! Builds the vertex-cover gadget on K4 and maps covers to resolving sets and back.

use metdim::reduction::{
    brute_force_vertex_cover, build_gadget, builtin_instance, cover_from_resolving, forced_pairs,
    resolving_from_cover, structure_report,
};
use metdim::resolve::{is_resolving, Mode};

fn main() {
    let inst = builtin_instance("k4").unwrap();
    let (g, map) = build_gadget(&inst);
    println!("gadget: {} vertices, {} arcs", g.n(), g.arc_count());
    println!("{:?}", structure_report(&g));

    let cover = brute_force_vertex_cover(inst.n, &inst.edges).unwrap();
    let r = resolving_from_cover(&inst, &map, &cover).unwrap();
    println!("cover {cover:?} -> |R| = {}", r.len());
    println!("R resolves: {}", is_resolving(&g, &r.vertices, Mode::Strong).is_resolved());
    println!("back to a cover: {:?}", cover_from_resolving(&g, &map, &r.vertices).unwrap());

    let forced = forced_pairs(&g, &map);
    let held = forced.iter().filter(|(_, res)| !res.is_resolved()).count();
    println!("forced pairs holding: {held}/{}", forced.len());
}
