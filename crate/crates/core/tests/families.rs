use cayley_forge::constructions::{
    dihedral_counterexample, dihedral_cover, dihedral_projection, iterate_wreath,
    odd_counterexample,
};
use cayley_forge::graph::{induced_degrees, is_covering_map, odd_graph};
use cayley_forge::group::{dihedral_element, make_dihedral};
use cayley_forge::io::{parse_certificate_json, CertificateFile};
use cayley_forge::search::{brute_force_oracle, max_bounded_degree_subset};
use cayley_forge::verify::{certify_instance, degree_one_bound, potechin_tsang_threshold};
use cayley_forge::Family;
use num_rational::Ratio;

#[test]
fn petersen_is_the_second_odd_graph() {
    let g = odd_graph(2).unwrap();
    assert_eq!(g.n(), 10);
    assert_eq!(g.edge_count(), 15);
    assert_eq!(g.regular_degree(), Some(3));
}

#[test]
fn odd_sizes_and_ratios() {
    for (n, size, num, den) in [(1, 2, 2, 3), (2, 6, 3, 5), (3, 20, 4, 7), (4, 70, 5, 9)] {
        let inst = odd_counterexample(n).unwrap();
        let c = certify_instance(&inst).unwrap();
        assert_eq!(c.subset_size, size);
        assert_eq!(c.ratio, Ratio::new(num, den));
        assert_eq!(c.induced_max_degree, 1);
        assert!(induced_degrees(inst.graph(), inst.subset())
            .unwrap()
            .is_regular_of(1));
    }
}

#[test]
fn gamma18_subset_and_threshold() {
    let inst = dihedral_counterexample().unwrap();
    assert_eq!(inst.family(), Family::Dihedral);
    let expected: Vec<usize> = [
        (0, 0),
        (2, 0),
        (3, 0),
        (5, 0),
        (6, 0),
        (1, 1),
        (2, 1),
        (4, 1),
        (7, 1),
        (8, 1),
    ]
    .iter()
    .map(|&(i, j)| dihedral_element(9, i, j))
    .collect::<std::collections::BTreeSet<_>>()
    .into_iter()
    .collect();
    assert_eq!(inst.subset().to_vec(), expected);
    let g = make_dihedral(9).unwrap();
    assert_eq!(potechin_tsang_threshold(&g, &[9, 10, 12]).unwrap(), (3, 0));
    let c = certify_instance(&inst).unwrap();
    assert!(c.is_pt_counterexample);
    assert_eq!(c.below_huang_threshold(), Some(true));
    assert_eq!(c.bound_d_2d1.unwrap().cap, 10);
    assert!(c.bound_d_2d1.unwrap().attained);
}

#[test]
fn gamma18_optimum_matches_oracle() {
    let inst = dihedral_counterexample().unwrap();
    assert_eq!(brute_force_oracle(inst.graph(), 1).unwrap().best_size, 10);
    assert_eq!(max_bounded_degree_subset(inst.graph(), 1).best_size, 10);
}

#[test]
fn covers_project_onto_gamma18() {
    let base = dihedral_counterexample().unwrap();
    for m in 2..=4 {
        let cover = dihedral_cover(m).unwrap();
        let phi = dihedral_projection(m).unwrap();
        assert!(is_covering_map(cover.graph(), base.graph(), phi.map()));
        assert_eq!(cover.subset().len(), 10 * m);
        for v in cover.subset().iter() {
            assert!(base.subset().contains(phi.apply(v)));
        }
    }
}

#[test]
fn wreath_tower_sizes() {
    let levels = iterate_wreath(2).unwrap();
    let sizes: Vec<(usize, usize)> = levels
        .iter()
        .map(|i| (i.graph().n(), i.subset().len()))
        .collect();
    assert_eq!(sizes, [(2, 2), (8, 5), (2048, 1025)]);
    assert!(iterate_wreath(3).is_err());
}

#[test]
fn degree_one_bound_values() {
    assert_eq!(degree_one_bound(3, 10), 6);
    assert_eq!(degree_one_bound(3, 18), 10);
    assert_eq!(degree_one_bound(1, 2), 2);
}

#[test]
fn certificate_file_round_trips() {
    for inst in [odd_counterexample(2).unwrap(), dihedral_cover(2).unwrap()] {
        let file = CertificateFile::for_instance(&inst).unwrap();
        let text = file.to_json();
        assert_eq!(parse_certificate_json(&text).unwrap(), file);
        assert_eq!(
            CertificateFile::for_instance(&inst).unwrap().to_json(),
            text
        );
    }
}
