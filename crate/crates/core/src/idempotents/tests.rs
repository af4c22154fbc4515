use super::*;
use crate::polyring::{parse_poly, render_poly, IdealZ, TermOrder};
use crate::primdec::{primary_decomposition_with_primes, HeightClass, PrimaryComponent};
use std::collections::BTreeSet;

const ORD: TermOrder = TermOrder::DegRevLex;

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn ideal(gens: &[&str], vs: &[String]) -> IdealZ {
    IdealZ::new(
        vs.len(),
        ORD,
        gens.iter().map(|g| parse_poly(g, vs, ORD).unwrap()).collect(),
    )
}

fn rendered_set(set: &IdempotentSet, vs: &[String]) -> BTreeSet<String> {
    set.elements.iter().map(|e| render_poly(e, vs)).collect()
}

#[test]
fn comaximal_components_are_singletons() {
    let vs = vars(&["x"]);
    let d = primary_decomposition_with_primes(&ideal(&["6", "x"], &vs), 0).unwrap();
    let clusters = connected_components(&d).unwrap();
    assert_eq!(clusters.len(), 2);
    assert!(clusters.iter().all(|c| c.members.len() == 1));
}

#[test]
fn generic_component_attracts_maximal_one() {
    // <x> sits inside <2, x>; <3, x-1> is separate.
    let vs = vars(&["x"]);
    let make = |gens: &[&str], class: HeightClass| PrimaryComponent {
        primary: ideal(gens, &vs),
        prime: Some(ideal(gens, &vs)),
        height_class: class,
    };
    let d = crate::primdec::DecompositionResult {
        components: vec![
            make(&["x"], HeightClass::Generic),
            make(&["2", "x"], HeightClass::Maximal),
            make(&["3", "x-1"], HeightClass::Maximal),
        ],
    };
    let mut clusters = connected_components(&d).unwrap();
    clusters.sort_by_key(|c| c.members.len());
    assert_eq!(clusters.len(), 2);
    assert_eq!(clusters[0].members, vec![2]);
    let mut pair = clusters[1].members.clone();
    pair.sort();
    assert_eq!(pair, vec![0, 1]);
}

#[test]
fn single_component_single_cluster() {
    let vs = vars(&["x"]);
    let d = primary_decomposition_with_primes(&ideal(&["4", "x"], &vs), 0).unwrap();
    let clusters = connected_components(&d).unwrap();
    assert_eq!(clusters.len(), 1);
}

#[test]
fn missing_primes_are_rejected() {
    let vs = vars(&["x"]);
    let d = crate::primdec::DecompositionResult {
        components: vec![PrimaryComponent {
            primary: ideal(&["x"], &vs),
            prime: None,
            height_class: HeightClass::Generic,
        }],
    };
    assert_eq!(
        connected_components(&d).unwrap_err(),
        IdempotentError::MissingPrime
    );
}

#[test]
fn idempotents_of_mixed_torsion_presentation() {
    let vs = vars(&["y1", "y2"]);
    let i = ideal(&["6", "3*y2", "y1+y2-1", "y2^2-y2"], &vs);
    let set = primitive_idempotents(&i, 0).unwrap();
    assert!(idempotent_axioms_hold(&i, &set.elements));
    let expected: BTreeSet<String> = ["3", "y2", "2*y2 + 4"]
        .iter()
        .map(|s| render_poly(&i.normal_form(&parse_poly(s, &vs, ORD).unwrap()), &vs))
        .collect();
    assert_eq!(rendered_set(&set, &vs), expected);
}

#[test]
fn idempotents_of_split_pair_presentation() {
    let vs = vars(&["y1", "y2"]);
    let i = ideal(&["y1^2-y1", "y1*y2", "y2^2-y2", "y1+y2-1"], &vs);
    let set = primitive_idempotents(&i, 0).unwrap();
    assert!(idempotent_axioms_hold(&i, &set.elements));
    let expected: BTreeSet<String> = ["-y2 + 1", "y2"]
        .iter()
        .map(|s| render_poly(&i.normal_form(&parse_poly(s, &vs, ORD).unwrap()), &vs))
        .collect();
    assert_eq!(rendered_set(&set, &vs), expected);
}

#[test]
fn connected_spectrum_gives_unit_idempotent() {
    let vs = vars(&["y1"]);
    let i = ideal(&["y1-1"], &vs);
    let set = primitive_idempotents(&i, 0).unwrap();
    assert_eq!(set.elements.len(), 1);
    assert_eq!(render_poly(&set.elements[0], &vs), "1");
}

#[test]
fn cluster_ideals_pairwise_comaximal_and_counted() {
    let vs = vars(&["x"]);
    let i = ideal(&["30", "x^2-x"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    let clusters = connected_components(&d).unwrap();
    let set = primitive_idempotents(&i, 0).unwrap();
    assert_eq!(clusters.len(), set.elements.len());
    // Pairwise comaximality of the cluster intersections.
    let cluster_ideal = |c: &ComponentCluster| {
        let mut acc: Option<IdealZ> = None;
        for &k in &c.members {
            let q = &d.components[k].primary;
            acc = Some(match acc {
                None => q.clone(),
                Some(cur) => crate::polyring::ideal_intersect(&cur, q),
            });
        }
        acc.unwrap()
    };
    for i1 in 0..clusters.len() {
        for j in 0..i1 {
            let s = ideal_sum(&cluster_ideal(&clusters[i1]), &cluster_ideal(&clusters[j]));
            assert!(s.is_unit(), "cluster ideals must be comaximal");
        }
    }
}

#[test]
fn brute_force_enumeration_agrees() {
    let vs2 = vars(&["y1", "y2"]);
    let vs1 = vars(&["x"]);
    let cases: Vec<IdealZ> = vec![
        ideal(&["6", "3*y2", "y1+y2-1", "y2^2-y2"], &vs2),
        ideal(&["4", "y1^2-y1", "y1*y2", "y2^2-y2", "y1+y2-1"], &vs2),
        ideal(&["12", "x^2-x"], &vs1),
        ideal(&["8", "x^2-1"], &vs1),
        ideal(&["9", "x^3-x"], &vs1),
    ];
    for i in cases {
        let brute = enumerate_primitive_idempotents(&i, 4000)
            .expect("finite quotient within the limit");
        let set = primitive_idempotents(&i, 0).unwrap();
        let vs: Vec<String> = (0..i.nvars).map(|k| format!("v{k}")).collect();
        let a: BTreeSet<String> = brute.iter().map(|e| render_poly(e, &vs)).collect();
        let b: BTreeSet<String> = set.elements.iter().map(|e| render_poly(e, &vs)).collect();
        assert_eq!(a, b, "brute force disagrees with pipeline");
    }
}

#[test]
fn enumeration_refuses_infinite_quotients() {
    let vs = vars(&["x"]);
    assert_eq!(enumerate_primitive_idempotents(&ideal(&["x^2"], &vs), 1000), None);
}
