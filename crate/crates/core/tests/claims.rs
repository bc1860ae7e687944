use ribbon_core::bouquet::{extract_obstruction, intersection_graph, minimal_odd_cycle, quotient_graph, ObstructionBranch};
use ribbon_core::characterize::{decide_excluded_minor, pinned};
use ribbon_core::{
    biseparation_kind, canonical_form, decide, enumerate, euler_genus, find_biseparation, is_orientable, one_step_minors,
    pinned_obstructions, two_colouring_to_rp2_biseparation, verify_certificate, ArcLabel, BiseparationKind,
    EnumerationSpec, MinorSearch, RibbonGraph,
};

fn bouquets(max: usize) -> Vec<RibbonGraph> {
    enumerate(EnumerationSpec::bouquets(max)).unwrap()
}

#[test]
fn euler_genus_is_minor_monotone() {
    // gates the genus pruning in the minor search
    for g in enumerate(EnumerationSpec::all(4)).unwrap() {
        for (step, h) in one_step_minors(&g) {
            assert!(euler_genus(&h) <= euler_genus(&g), "{step} raised the genus of\n{g}");
        }
    }
}

#[test]
fn genus_pruning_does_not_change_answers() {
    let targets: Vec<(&str, &RibbonGraph)> = pinned_obstructions().iter().map(|(n, g)| (*n, g)).collect();
    let unpruned = MinorSearch {
        genus_pruning: false,
        ..MinorSearch::default()
    };
    for g in enumerate(EnumerationSpec::connected(4)).unwrap() {
        let a = MinorSearch::default().find(&g, &targets).unwrap();
        let b = unpruned.find(&g, &targets).unwrap();
        assert_eq!(a.is_some(), b.is_some(), "\n{g}");
        if let Some(c) = a {
            assert!(verify_certificate(&g, &c));
        }
    }
}

#[test]
fn intersection_graph_weights_count_twisted_loops() {
    for g in bouquets(4) {
        let i = intersection_graph(&g).unwrap();
        let q = g.edges().iter().filter(|e| e.twisted).count();
        assert_eq!(i.negative.iter().filter(|n| **n).count(), q);
        let n = i.graph.len();
        for a in 0..n {
            assert!(!i.graph.adjacent(a, a));
            for b in 0..n {
                assert_eq!(i.graph.adjacent(a, b), i.graph.adjacent(b, a));
            }
        }
    }
}

/// Non-orientable bouquets whose twisted loops pairwise interlace; the
/// other ones already contain X1.
fn twisted_pairwise_interlaced(max: usize) -> Vec<RibbonGraph> {
    bouquets(max)
        .into_iter()
        .filter(|g| {
            let i = intersection_graph(g).unwrap();
            let neg: Vec<usize> = (0..i.graph.len()).filter(|&x| i.negative[x]).collect();
            !neg.is_empty() && neg.iter().all(|&a| neg.iter().all(|&b| a == b || i.graph.adjacent(a, b)))
        })
        .collect()
}

#[test]
fn bipartite_quotient_gives_rp2_biseparation() {
    let mut bipartite = 0;
    for g in twisted_pairwise_interlaced(5) {
        let q = quotient_graph(&intersection_graph(&g).unwrap()).unwrap();
        let a = two_colouring_to_rp2_biseparation(&g, &q).unwrap();
        if q.graph.is_bipartite() {
            bipartite += 1;
            let a = a.unwrap_or_else(|| panic!("bipartite quotient without an RP2 class\n{g}"));
            assert_eq!(biseparation_kind(&g, &a).unwrap(), BiseparationKind::Rp2);
        } else {
            assert!(a.is_none());
        }
    }
    assert!(bipartite > 0);
}

#[test]
fn orientable_bouquet_with_bipartite_intersection_graph_is_plane_biseparable() {
    for g in bouquets(5).into_iter().filter(is_orientable) {
        if intersection_graph(&g).unwrap().graph.is_bipartite() {
            assert!(find_biseparation(&g, BiseparationKind::Plane).unwrap().is_some(), "\n{g}");
        }
    }
}

#[test]
fn twisted_pair_that_does_not_interlace_is_not_rp2() {
    let x1 = pinned("X1").unwrap();
    let q = quotient_graph(&intersection_graph(x1).unwrap()).unwrap();
    assert!(q.graph.is_bipartite());
    assert!(two_colouring_to_rp2_biseparation(x1, &q).unwrap().is_none());
}

#[test]
fn minimal_odd_cycles_through_v_are_induced() {
    // with I(G_O) bipartite every odd cycle passes through v, so a chord
    // would give a shorter one
    for g in twisted_pairwise_interlaced(5) {
        let q = quotient_graph(&intersection_graph(&g).unwrap()).unwrap();
        let mut rest = q.graph.clone();
        for x in 0..rest.len() {
            rest.adjacency[q.merged][x] = false;
            rest.adjacency[x][q.merged] = false;
        }
        if !rest.is_bipartite() {
            continue;
        }
        let c = minimal_odd_cycle(&q.graph, Some(q.merged)).unwrap();
        let Some(c) = c else { continue };
        assert_eq!(c.len() % 2, 1);
        assert_eq!(c.vertices[0], q.merged);
        let n = c.len();
        for i in 0..n {
            for j in i + 1..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                assert_eq!(q.graph.adjacent(c.vertices[i], c.vertices[j]), consecutive, "\n{g}");
            }
        }
    }
}

fn needs_extraction(g: &RibbonGraph) -> bool {
    !is_orientable(g)
        && find_biseparation(g, BiseparationKind::Plane).unwrap().is_none()
        && find_biseparation(g, BiseparationKind::Rp2).unwrap().is_none()
}

fn check_extraction(max: usize) -> Vec<ObstructionBranch> {
    let mut branches = Vec::new();
    for g in bouquets(max).into_iter().filter(needs_extraction) {
        let x = extract_obstruction(&g).unwrap();
        assert!(!x.fallback, "fell back to search\n{g}");
        assert!(verify_certificate(&g, &x.certificate), "\n{g}");
        assert!(["X1", "X2"].contains(&x.certificate.target.as_str()));
        if let Some(arcs) = &x.arcs {
            let at = |e: &str| arcs.twisted[e];
            match x.branch {
                ObstructionBranch::SingleLoopLong => {
                    assert_eq!(at(&x.chosen[0]), [ArcLabel::Alpha, ArcLabel::Beta], "\n{g}")
                }
                ObstructionBranch::PairLong => {
                    assert_eq!(at(&x.chosen[0]), [ArcLabel::Alpha, ArcLabel::Epsilon], "\n{g}");
                    assert_eq!(at(&x.chosen[1]), [ArcLabel::Beta, ArcLabel::Epsilon], "\n{g}");
                }
                _ => {}
            }
        }
        if !branches.contains(&x.branch) {
            branches.push(x.branch);
        }
    }
    branches
}

#[test]
fn extraction_follows_the_case_analysis() {
    let branches = check_extraction(5);
    for b in [
        ObstructionBranch::NonInterlacedTwistedPair,
        ObstructionBranch::OrientableOddCycle,
        ObstructionBranch::SingleLoopShort,
        ObstructionBranch::PairShort,
        ObstructionBranch::SingleLoopLong,
    ] {
        assert!(branches.contains(&b), "{b:?} never taken");
    }
}

// the two-twisted-loop branch with m > 1 first shows up at six edges
#[test]
fn extraction_on_six_edge_bouquets() {
    let branches = check_extraction(6);
    assert!(branches.contains(&ObstructionBranch::PairLong));
}

#[test]
fn orientable_without_plane_biseparation_contains_x2_or_x3() {
    let x2 = pinned("X2").unwrap();
    let x3 = pinned("X3").unwrap();
    for g in enumerate(EnumerationSpec::connected(4)).unwrap().into_iter().filter(is_orientable) {
        if find_biseparation(&g, BiseparationKind::Plane).unwrap().is_some() {
            continue;
        }
        let c = MinorSearch::default().find(&g, &[("X2", x2), ("X3", x3)]).unwrap();
        let c = c.unwrap_or_else(|| panic!("no X2 or X3 minor in\n{g}"));
        assert!(verify_certificate(&g, &c));
    }
}

#[test]
fn obstructions_are_self_certifying() {
    for (name, g) in pinned_obstructions() {
        assert!(!decide_excluded_minor(g).unwrap(), "{name}");
        let d = decide(g).unwrap();
        assert!(!d.admits_low_genus_partial_dual);
    }
}

#[test]
fn deciders_agree_on_all_small_graphs() {
    let mut seen = std::collections::BTreeSet::new();
    for g in enumerate(EnumerationSpec::all(3)).unwrap() {
        assert!(seen.insert(canonical_form(&g)));
        // decide fails when the three routes disagree
        decide(&g).unwrap();
    }
}
