//! Values computed by hand or by separate brute force and frozen here.

use clustered::bounds::{heart_colours, high_degree_threshold_usize, many_high_count, weak_closure_colours, PowerBound};
use clustered::colouring::{defect_oracle, optimal_cluster_colouring};
use clustered::generators::{closure_tree, fan, fat_path, fat_star, ternary_lower_bound, weak_closure_tree, x_family};
use clustered::graph::{tree_depth, treewidth_exact};
use clustered::harness::{chromatic_number, friendship};
use clustered::minors::has_minor;
use clustered::{Graph, Limits};

fn opt(g: &Graph, c: usize) -> usize {
    optimal_cluster_colouring(g, c, &Limits::default()).unwrap().exact().unwrap()
}

#[test]
fn threshold_constants() {
    assert_eq!(high_degree_threshold_usize(1), 57);
    assert_eq!(high_degree_threshold_usize(2), 9232);
    assert_eq!(many_high_count(2), 16);
    assert_eq!([1, 2, 3].map(weak_closure_colours), [0, 2, 10]);
    assert_eq!([2, 3, 4].map(heart_colours), [2, 6, 14]);
    assert_eq!(PowerBound::parity_case(1).describe(), "1 * 57^1");
    assert!(PowerBound::parity_case(1).admits(57));
    assert!(!PowerBound::parity_case(1).admits(58));
}

#[test]
fn pattern_sizes() {
    assert_eq!((fan(4).unwrap().n(), fan(4).unwrap().edge_count()), (5, 7));
    assert_eq!((fat_star(2).unwrap().n(), fat_star(2).unwrap().edge_count()), (7, 10));
    assert_eq!((fat_path(3).unwrap().n(), fat_path(3).unwrap().edge_count()), (9, 14));
    assert_eq!((closure_tree(3, 2).unwrap().n(), closure_tree(3, 2).unwrap().edge_count()), (7, 10));
    assert_eq!((weak_closure_tree(3, 3).unwrap().n(), weak_closure_tree(3, 3).unwrap().edge_count()), (13, 18));
}

#[test]
fn cluster_optima() {
    assert_eq!(opt(&fan(2).unwrap(), 1), 3);
    assert_eq!(opt(&fan(6).unwrap(), 2), 3);
    assert_eq!(opt(&fan(5).unwrap(), 2), 2);
    assert_eq!(opt(&fat_star(2).unwrap(), 2), 3);
    assert_eq!(opt(&fat_path(3).unwrap(), 2), 3);
    assert_eq!(opt(&Graph::cycle(5), 1), 3);
    assert_eq!(opt(&Graph::cycle(5), 2), 2);
    assert_eq!(opt(&Graph::complete(5), 2), 3);
    assert_eq!(opt(&friendship(3), 1), 3);
}

#[test]
fn defect_optima() {
    let l = Limits::default();
    assert_eq!(defect_oracle(&Graph::complete(4), 1, &l).unwrap().exact(), Some(2));
    assert_eq!(defect_oracle(&Graph::cycle(7), 1, &l).unwrap().exact(), Some(2));
    assert_eq!(defect_oracle(&Graph::complete(5), 2, &l).unwrap().exact(), Some(2));
}

#[test]
fn ternary_graphs() {
    let l = Limits::default();
    let g = ternary_lower_bound(3, 1, &l).unwrap();
    assert_eq!((g.n(), g.edge_count()), (4, 6));
    let g = ternary_lower_bound(3, 2, &l).unwrap();
    assert_eq!(g.n(), 21);
    assert!(has_minor(&ternary_lower_bound(2, 3, &l).unwrap(), &closure_tree(2, 3).unwrap(), &l).is_absent());
}

#[test]
fn widths() {
    let l = Limits::default();
    assert_eq!(treewidth_exact(&Graph::complete(5), &l).unwrap(), 4);
    assert_eq!(treewidth_exact(&Graph::cycle(9), &l).unwrap(), 2);
    assert_eq!(treewidth_exact(&fat_path(3).unwrap(), &l).unwrap(), 2);
    assert_eq!(tree_depth(&Graph::path(7), &l).unwrap(), 3);
    assert_eq!(tree_depth(&Graph::path(8), &l).unwrap(), 4);
    assert_eq!(tree_depth(&Graph::star(9), &l).unwrap(), 2);
}

#[test]
fn chromatic_numbers() {
    assert_eq!(chromatic_number(&Graph::cycle(7)), 3);
    assert_eq!(chromatic_number(&Graph::complete(6)), 6);
    assert_eq!(chromatic_number(&Graph::complete_bipartite(3, 4)), 2);
    assert_eq!(chromatic_number(&Graph::edgeless(3)), 1);
}

#[test]
fn family_sizes() {
    let l = Limits::default();
    let sizes = |k, c| x_family(k, c, 64, &l).unwrap().iter().map(Graph::n).collect::<Vec<_>>();
    assert_eq!(sizes(1, 2), vec![3]);
    assert_eq!(sizes(1, 3), vec![4, 4]);
    assert_eq!(sizes(2, 2), vec![7, 9]);
}
