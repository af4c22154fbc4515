use super::*;
use crate::polyring::{
    ideal_intersect, parse_poly, parse_poly_q, IdealF, IdealQ, IdealZ, TermOrder,
};
use crate::rng::SplitMix64;
use num_bigint::BigInt;

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

fn ideal_q(gens: &[&str], vs: &[String]) -> IdealQ {
    IdealF::new(
        vs.len(),
        ORD,
        gens.iter()
            .map(|g| parse_poly_q(g, vs, ORD).unwrap())
            .collect(),
    )
}

fn check_is_decomposition(i: &IdealZ, d: &DecompositionResult) {
    // Intersection identity.
    let meet = d.intersection().expect("nonempty decomposition");
    assert!(meet.eq_ideal(i), "intersection of components differs from I");
    // Irredundancy: dropping any component enlarges the intersection.
    if d.components.len() > 1 {
        for skip in 0..d.components.len() {
            let mut acc: Option<IdealZ> = None;
            for (k, c) in d.components.iter().enumerate() {
                if k == skip {
                    continue;
                }
                acc = Some(match acc {
                    None => c.primary.clone(),
                    Some(cur) => ideal_intersect(&cur, &c.primary),
                });
            }
            assert!(
                !acc.unwrap().eq_ideal(i),
                "component {skip} is redundant"
            );
        }
    }
    // Height classification matches the integer part.
    for c in &d.components {
        let q = crate::polyring::elim_constant(&c.primary);
        match c.height_class {
            HeightClass::Maximal => assert!(!num_traits::Zero::is_zero(&q)),
            HeightClass::Generic => assert!(num_traits::Zero::is_zero(&q)),
        }
    }
}

#[test]
fn crt_split_in_one_variable() {
    let vs = vars(&["x"]);
    let i = ideal(&["6", "x"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    assert_eq!(d.components.len(), 2);
    check_is_decomposition(&i, &d);
    let expect = [ideal(&["2", "x"], &vs), ideal(&["3", "x"], &vs)];
    for e in &expect {
        assert!(
            d.components.iter().any(|c| c.primary.eq_ideal(e)
                && c.prime.as_ref().unwrap().eq_ideal(e)),
            "missing component"
        );
    }
}

#[test]
fn principal_prime_is_single_generic_component() {
    let vs = vars(&["x"]);
    let i = ideal(&["x"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    assert_eq!(d.components.len(), 1);
    assert_eq!(d.components[0].height_class, HeightClass::Generic);
    assert!(d.components[0].primary.eq_ideal(&i));
    assert!(d.components[0].prime.as_ref().unwrap().eq_ideal(&i));
    check_is_decomposition(&i, &d);
}

#[test]
fn prime_power_component_uses_exponent_search() {
    // <4, x> is <2, x>-primary; the exponent search stabilizes at k = 2.
    let vs = vars(&["x"]);
    let i = ideal(&["4", "x"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    assert_eq!(d.components.len(), 1);
    let c = &d.components[0];
    assert!(c.primary.eq_ideal(&i));
    assert!(c.prime.as_ref().unwrap().eq_ideal(&ideal(&["2", "x"], &vs)));
    assert_eq!(c.height_class, HeightClass::Maximal);
    check_is_decomposition(&i, &d);
    // Line-22 style stopping test holds for the returned component.
    let sat = crate::polyring::saturate(&i, c.prime.as_ref().unwrap()).unwrap();
    assert!(ideal_intersect(&c.primary, &sat).eq_ideal(&i));
}

#[test]
fn torsion_split_cases() {
    let vs = vars(&["x"]);
    let (generic, torsion, n) = torsion_split(&ideal(&["2*x"], &vs)).unwrap();
    assert_eq!(n, BigInt::from(2));
    assert!(generic.eq_ideal(&ideal(&["x"], &vs)));
    assert!(torsion.eq_ideal(&ideal(&["2*x", "2"], &vs)));
    // Verify the split identity by membership.
    let meet = ideal_intersect(&generic, &torsion);
    assert!(meet.eq_ideal(&ideal(&["2*x"], &vs)));

    let (g2, t2, n2) = torsion_split(&ideal(&["x"], &vs)).unwrap();
    assert_eq!(n2, BigInt::from(1));
    assert!(g2.eq_ideal(&ideal(&["x"], &vs)));
    assert!(t2.is_unit());

    // Mixed-torsion generators: N = lcm of the leading coefficients = 6.
    let vs3 = vars(&["x", "y", "z"]);
    let i3 = ideal(
        &["x^2", "y^2", "z^2", "x*z+y*z", "x*y", "2*x-y", "3*z"],
        &vs3,
    );
    let (_, _, n3) = torsion_split(&i3).unwrap();
    assert_eq!(n3, BigInt::from(6));

    // Violated precondition.
    assert!(torsion_split(&ideal(&["6", "x"], &vs)).is_err());
}

#[test]
fn zerodim_q_splits_difference_of_squares() {
    let vs = vars(&["x"]);
    let i = ideal_q(&["x^2-1"], &vs);
    let comps = zerodim_decompose_q(&i, 0).unwrap();
    assert_eq!(comps.len(), 2);
    let expect = [ideal_q(&["x-1"], &vs), ideal_q(&["x+1"], &vs)];
    for e in &expect {
        assert!(comps
            .iter()
            .any(|(q, p)| q.eq_ideal(e) && p.eq_ideal(e)));
    }
}

#[test]
fn zerodim_q_nilpotent() {
    let vs = vars(&["x"]);
    let i = ideal_q(&["x^2"], &vs);
    let comps = zerodim_decompose_q(&i, 0).unwrap();
    assert_eq!(comps.len(), 1);
    assert!(comps[0].0.eq_ideal(&i));
    assert!(comps[0].1.eq_ideal(&ideal_q(&["x"], &vs)));
}

#[test]
fn zerodim_fp_splits_by_roots() {
    // Oracle: x^2 + 1 = (x + 2)(x + 3) over F_5.
    let vs = vars(&["x", "y"]);
    let i = ideal(&["x^2+1", "y-x"], &vs).to_fp(5).unwrap();
    let comps = zerodim_decompose_fp(&i, 0).unwrap();
    assert_eq!(comps.len(), 2);
    for (q, p) in &comps {
        assert!(q.eq_ideal(p), "radical ideal expected");
    }
}

#[test]
fn zerodim_rejects_positive_dimension() {
    let vs = vars(&["x", "y"]);
    let i = ideal_q(&["x*y"], &vs);
    assert_eq!(
        zerodim_decompose_q(&i, 0).unwrap_err(),
        PrimdecError::NotZeroDimensional
    );
}

#[test]
fn zerodim_q_inseparable_style_split() {
    // (x^2 - 2)(x - 1) needs the quadratic kept whole.
    let vs = vars(&["x"]);
    let i = ideal_q(&["x^3 - x^2 - 2*x + 2"], &vs);
    let comps = zerodim_decompose_q(&i, 0).unwrap();
    assert_eq!(comps.len(), 2);
    let expect = [ideal_q(&["x-1"], &vs), ideal_q(&["x^2-2"], &vs)];
    for e in &expect {
        assert!(comps.iter().any(|(q, _)| q.eq_ideal(e)));
    }
}

#[test]
fn zerodim_q_coupled_variables_need_radical_split() {
    // x^2 = 1 and y = x: variables split only through a mixed form.
    let vs = vars(&["x", "y"]);
    let i = ideal_q(&["x^2-1", "y-x"], &vs);
    let comps = zerodim_decompose_q(&i, 0).unwrap();
    assert_eq!(comps.len(), 2);
}

#[test]
fn zerodim_fp_frobenius_fixed_split() {
    // Over F_2 with x^2+x+1 and y^2+y+1: two components with the same
    // variable minimal polynomials — only the fixed algebra separates them.
    let vs = vars(&["x", "y"]);
    let i = ideal(&["x^2+x+1", "y^2+y+1"], &vs).to_fp(2).unwrap();
    let comps = zerodim_decompose_fp(&i, 0).unwrap();
    assert_eq!(comps.len(), 2);
    for (q, p) in &comps {
        assert!(q.eq_ideal(p));
    }
}

#[test]
fn mixed_torsion_full_decomposition() {
    let vs = vars(&["x", "y", "z"]);
    let i = ideal(
        &["x^2", "y^2", "z^2", "x*z+y*z", "x*y", "2*x-y", "3*z"],
        &vs,
    );
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    check_is_decomposition(&i, &d);
    // One generic component (free part), plus 3-torsion; the 2-part is
    // absorbed by the generic component (2x reduces to y).
    assert!(d.components.iter().any(|c| c.height_class == HeightClass::Generic));
    assert!(d
        .components
        .iter()
        .any(|c| c.height_class == HeightClass::Maximal
            && crate::polyring::elim_constant(&c.primary) == BigInt::from(3)));
}

#[test]
fn primes_are_radicals() {
    let vs = vars(&["x"]);
    for gens in [&["6", "x"][..], &["4", "x"][..], &["x^2-1"][..], &["12", "x^2-x"][..]] {
        let i = ideal(gens, &vs);
        let d = primary_decomposition_with_primes(&i, 0).unwrap();
        check_is_decomposition(&i, &d);
        for c in &d.components {
            let p = c.prime.as_ref().unwrap();
            // prime contains primary ... via powers: every prime generator
            // has a power in the primary component.
            assert!(p.contains_ideal(&c.primary));
            for g in &p.gens {
                let mut pow = g.clone();
                let mut ok = false;
                for _ in 0..8 {
                    if c.primary.contains(&pow) {
                        ok = true;
                        break;
                    }
                    pow = pow.mul(g, ORD);
                }
                assert!(ok, "prime generator has no power in primary");
            }
        }
    }
}

#[test]
fn decomposition_is_deterministic_per_seed() {
    let vs = vars(&["x", "y"]);
    let i = ideal(&["12", "x^2-1", "y^2-y"], &vs);
    let a = primary_decomposition_with_primes(&i, 5).unwrap();
    let b = primary_decomposition_with_primes(&i, 5).unwrap();
    assert_eq!(a.components.len(), b.components.len());
    for (x, y) in a.components.iter().zip(&b.components) {
        assert!(x.primary.eq_ideal(&y.primary));
        assert_eq!(x.primary.strong_gb(), y.primary.strong_gb());
    }
}

#[test]
fn random_finite_ideals_decompose() {
    let mut rng = SplitMix64::new(2718);
    for case in 0..25 {
        let nv = 1 + rng.below(2) as usize;
        let vs: Vec<String> = (0..nv).map(|k| format!("x{k}")).collect();
        let mut gens: Vec<String> = Vec::new();
        // Monic univariate per variable keeps the quotient finite.
        for v in 0..nv {
            let a = rng.signed(3);
            let b = rng.signed(3);
            gens.push(format!("x{v}^2 + {a}*x{v} + {b}").replace("+ -", "- "));
        }
        let c = 2 + rng.below(29);
        gens.push(format!("{c}"));
        if rng.below(2) == 1 && nv == 2 {
            gens.push("x0*x1".to_string());
        }
        let refs: Vec<&str> = gens.iter().map(|s| s.as_str()).collect();
        let i = ideal(&refs, &vs);
        if i.is_unit() {
            continue;
        }
        let d = primary_decomposition_with_primes(&i, case).unwrap();
        check_is_decomposition(&i, &d);
    }
}

#[test]
fn rejects_non_finite_quotients() {
    let vs = vars(&["x", "y"]);
    assert_eq!(
        primary_decomposition(&ideal(&["2*x", "y"], &vs), 0).unwrap_err(),
        PrimdecError::NotFinite
    );
}

#[test]
fn prime_square_pair_uses_exponent_branch_per_prime() {
    // q = 36 = 2^2 * 3^2: both primes take the exponent-search branch.
    let vs = vars(&["x"]);
    let i = ideal(&["36", "6*x", "x^2"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    check_is_decomposition(&i, &d);
    assert_eq!(d.components.len(), 2);
    let expect = [
        (ideal(&["4", "2*x", "x^2"], &vs), ideal(&["2", "x"], &vs)),
        (ideal(&["9", "3*x", "x^2"], &vs), ideal(&["3", "x"], &vs)),
    ];
    for (q, p) in &expect {
        assert!(
            d.components
                .iter()
                .any(|c| c.primary.eq_ideal(q) && c.prime.as_ref().unwrap().eq_ideal(p)),
            "missing component"
        );
    }
}

#[test]
fn generic_and_maximal_components_share_a_cluster() {
    // <2x, x^2> = <x> ∩ <2, x^2>: the generic prime <x> sits inside the
    // maximal <2, x>, so the two components form one connected cluster and
    // the only primitive idempotent is 1.
    let vs = vars(&["x"]);
    let i = ideal(&["2*x", "x^2"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    check_is_decomposition(&i, &d);
    assert_eq!(d.components.len(), 2);
    let clusters = crate::idempotents::connected_components(&d).unwrap();
    assert_eq!(clusters.len(), 1);
    let set = crate::idempotents::primitive_idempotents(&i, 0).unwrap();
    assert_eq!(set.elements.len(), 1);
    assert_eq!(
        crate::polyring::render_poly(&set.elements[0], &vs),
        "1"
    );
}

#[test]
fn primes_cleared_by_plain_decomposition() {
    let vs = vars(&["x"]);
    let d = primary_decomposition(&ideal(&["6", "x"], &vs), 0).unwrap();
    assert!(d.components.iter().all(|c| c.prime.is_none()));
}

#[test]
fn three_variable_mixed_case() {
    let vs = vars(&["x", "y", "z"]);
    let i = ideal(&["4", "x^2-1", "y^2-y", "z^2", "x*z"], &vs);
    let d = primary_decomposition_with_primes(&i, 0).unwrap();
    check_is_decomposition(&i, &d);
    for c in &d.components {
        assert_eq!(c.height_class, HeightClass::Maximal);
    }
}
