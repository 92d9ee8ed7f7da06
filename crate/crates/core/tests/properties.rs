use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use tricensus::cycles::{spectrum, EnumOptions};
use tricensus::dual::boundary_unchecked;
use tricensus::generators::random_triangulation;
use tricensus::io;
use tricensus::plane_graph::{PlanarTriangulation, RotationSystem};

fn relabel(g: &PlanarTriangulation, perm: &[usize]) -> PlanarTriangulation {
    let lists = g.rotation_system().lists();
    let mut rot = vec![Vec::new(); lists.len()];
    for (v, l) in lists.iter().enumerate() {
        rot[perm[v]] = l.iter().map(|&u| perm[u]).collect();
    }
    PlanarTriangulation::from_rotation_system(rot).unwrap()
}

fn perm_strategy(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn graph_and_perm() -> impl Strategy<Value = (PlanarTriangulation, Vec<usize>)> {
    (4usize..=10, any::<u64>()).prop_flat_map(|(n, seed)| {
        let g = random_triangulation(n, seed).unwrap();
        (Just(g), perm_strategy(n))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spectrum_is_relabelling_invariant((g, perm) in graph_and_perm()) {
        let h = relabel(&g, &perm);
        let opts = EnumOptions::default();
        prop_assert_eq!(spectrum(&g, &opts).unwrap().counts, spectrum(&h, &opts).unwrap().counts);
        prop_assert_eq!(g.is_four_connected(), h.is_four_connected());
        prop_assert_eq!(g.separating_triangles().len(), h.separating_triangles().len());
    }

    #[test]
    fn boundary_is_symmetric_difference(n in 4usize..=12, seed in any::<u64>(), mask in any::<u64>()) {
        let g = random_triangulation(n, seed).unwrap();
        let faces: BTreeSet<usize> = (0..g.faces().len()).filter(|f| mask >> (f % 64) & 1 == 1).collect();
        let mut parity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for &f in &faces {
            let b = &g.face(f).boundary;
            for i in 0..3 {
                let (u, v) = (b[i], b[(i + 1) % 3]);
                *parity.entry((u.min(v), u.max(v))).or_default() += 1;
            }
        }
        let expected: BTreeSet<(usize, usize)> =
            parity.into_iter().filter(|&(_, c)| c % 2 == 1).map(|(e, _)| e).collect();
        let got: BTreeSet<(usize, usize)> = boundary_unchecked(g.graph(), &faces)
            .edges
            .iter()
            .map(|&e| g.edges()[e])
            .collect();
        prop_assert_eq!(got, expected);
    }

    #[test]
    fn formats_round_trip(n in 4usize..=40, seed in any::<u64>()) {
        let g = random_triangulation(n, seed).unwrap();
        let rs: &RotationSystem = g.rotation_system();
        let text = io::write_rot(rs);
        prop_assert_eq!(io::parse_rot(&text).unwrap(), rs.lists().to_vec());
        let pc = io::write_planar_code(&[rs]);
        prop_assert_eq!(io::parse_planar_code(&pc).unwrap(), vec![rs.lists().to_vec()]);
    }

    #[test]
    fn euler_counts(n in 4usize..=60, seed in any::<u64>()) {
        let g = random_triangulation(n, seed).unwrap();
        prop_assert_eq!(g.faces().len(), 2 * n - 4);
        prop_assert_eq!(g.size(), 3 * n - 6);
    }
}
