use super::*;
use crate::rng::SplitMix64;
use num_bigint::BigInt;

const ORD: TermOrder = TermOrder::DegRevLex;

fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn pz(s: &str, vs: &[String]) -> PolyZ {
    parse_poly(s, vs, ORD).unwrap()
}

fn ideal(gens: &[&str], vs: &[String]) -> IdealZ {
    IdealZ::new(vs.len(), ORD, gens.iter().map(|g| pz(g, vs)).collect())
}

fn gb_strings(i: &IdealZ, vs: &[String]) -> Vec<String> {
    i.strong_gb().iter().map(|g| render_poly(g, vs)).collect()
}

#[test]
fn strong_gb_already_strong() {
    let vs = vars(&["x"]);
    let i = ideal(&["x", "2"], &vs);
    assert_eq!(gb_strings(&i, &vs), vec!["2", "x"]);
}

#[test]
fn strong_gb_gcd_combination() {
    // Oracle: x = 3x - 2x, and x divides both generators.
    let vs = vars(&["x"]);
    let i = ideal(&["2*x", "3*x"], &vs);
    assert_eq!(gb_strings(&i, &vs), vec!["x"]);
}

#[test]
fn mixed_torsion_generators_verify_as_strong_gb() {
    let vs = vars(&["x", "y", "z"]);
    let gens: Vec<PolyZ> = ["x^2", "y^2", "z^2", "x*z+y*z", "x*y", "2*x-y", "3*z"]
        .iter()
        .map(|s| pz(s, &vs))
        .collect();
    assert!(verify_strong_gb(&gens, ORD));
    // The normal form of 2x modulo the ideal is y.
    let i = IdealZ::new(3, ORD, gens);
    assert_eq!(render_poly(&i.normal_form(&pz("2*x", &vs)), &vs), "y");
}

#[test]
fn normal_form_of_member_is_zero() {
    let vs = vars(&["x", "y"]);
    let i = ideal(&["x^2-y", "2*y"], &vs);
    for g in &i.gens {
        assert!(i.normal_form(g).is_zero());
    }
    let combo = i.gens[0]
        .mul(&pz("3*x+1", &vs), ORD)
        .add(&i.gens[1].mul(&pz("x*y-7", &vs), ORD), ORD);
    assert!(i.normal_form(&combo).is_zero());
}

#[test]
fn normal_form_of_one_modulo_x() {
    let vs = vars(&["x"]);
    let i = ideal(&["x"], &vs);
    assert_eq!(render_poly(&i.normal_form(&pz("1", &vs)), &vs), "1");
}

#[test]
fn normal_form_is_residue_invariant() {
    let vs = vars(&["x", "y"]);
    let i = ideal(&["2*x-y", "y^2", "4*y"], &vs);
    let mut rng = SplitMix64::new(3);
    for _ in 0..50 {
        let f = random_poly(2, &mut rng);
        let g = random_poly(2, &mut rng);
        // NF(f*m + h) = NF(h) for any member m.
        let member = i.gens[rng.below(3) as usize].clone();
        let lhs = i.normal_form(&f.mul(&member, ORD).add(&g, ORD));
        let rhs = i.normal_form(&g);
        assert_eq!(lhs, rhs);
    }
}

fn random_poly(nvars: usize, rng: &mut SplitMix64) -> PolyZ {
    let mut terms = Vec::new();
    for _ in 0..(1 + rng.below(3)) {
        let e: Vec<u32> = (0..nvars).map(|_| rng.below(3) as u32).collect();
        let c = BigInt::from(rng.signed(5));
        if !c.is_zero() {
            terms.push((Term(e), c));
        }
    }
    Poly::from_terms(nvars, terms, ORD)
}

#[test]
fn strong_divisibility_on_random_members() {
    let vs = vars(&["x", "y"]);
    let mut rng = SplitMix64::new(41);
    for _ in 0..40 {
        let gens: Vec<PolyZ> = (0..2 + rng.below(2)).map(|_| random_poly(2, &mut rng)).collect();
        let gens: Vec<PolyZ> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        if gens.is_empty() {
            continue;
        }
        let i = IdealZ::new(2, ORD, gens.clone());
        let gb = i.strong_gb();
        if gb.is_empty() {
            continue;
        }
        for _ in 0..10 {
            // Random member: small combination of generators.
            let mut member = Poly::zero(2);
            for g in &gens {
                member = member.add(&g.mul(&random_poly(2, &mut rng), ORD), ORD);
            }
            if member.is_zero() {
                continue;
            }
            let (t, c) = member.leading().map(|(t, c)| (t.clone(), c.clone())).unwrap();
            let divisible = gb.iter().any(|g| {
                g.leading_term().divides(&t) && (&c % g.leading_coeff()).is_zero()
            });
            assert!(divisible, "strong divisibility failed: {:?} vs {:?}", member, gb);
            assert!(i.contains(&member));
        }
    }
    let _ = vs;
}

#[test]
fn field_gb_cases() {
    let vs = vars(&["x"]);
    let q = |gens: &[&str]| -> IdealQ {
        IdealF::new(
            1,
            ORD,
            gens.iter().map(|g| parse_poly_q(g, &vs, ORD).unwrap()).collect(),
        )
    };
    let i = q(&["x^2", "x"]);
    assert_eq!(i.reduced_gb().len(), 1);
    assert_eq!(i.reduced_gb()[0], parse_poly_q("x", &vs, ORD).unwrap());

    let vs2 = vars(&["x", "y"]);
    let j: IdealQ = IdealF::new(
        2,
        ORD,
        vec![
            parse_poly_q("x+y", &vs2, ORD).unwrap(),
            parse_poly_q("x-y", &vs2, ORD).unwrap(),
        ],
    );
    // Oracle: linear elimination gives x and y.
    let gb = j.reduced_gb();
    assert_eq!(gb.len(), 2);
    assert!(j.contains(&parse_poly_q("x", &vs2, ORD).unwrap()));
    assert!(j.contains(&parse_poly_q("y", &vs2, ORD).unwrap()));
}

#[test]
fn field_gb_over_f2() {
    let i: IdealFp = IdealF::new(
        1,
        ORD,
        vec![Poly::from_terms(
            1,
            vec![(Term(vec![2]), Fp::new(1, 2)), (Term(vec![0]), Fp::new(1, 2))],
            ORD,
        )],
    );
    let gb = i.reduced_gb();
    assert_eq!(gb.len(), 1);
    assert_eq!(gb[0].leading_term(), &Term(vec![2]));
}

#[test]
fn intersect_constants_crt() {
    let vs = vars(&["x"]);
    let a = ideal(&["2"], &vs);
    let b = ideal(&["3"], &vs);
    let c = ideal_intersect(&a, &b);
    assert!(c.eq_ideal(&ideal(&["6"], &vs)));
}

#[test]
fn intersect_coordinate_ideals() {
    let vs = vars(&["x", "y"]);
    let a = ideal(&["x"], &vs);
    let b = ideal(&["y"], &vs);
    assert!(ideal_intersect(&a, &b).eq_ideal(&ideal(&["x*y"], &vs)));
}

#[test]
fn intersect_maximal_ideals() {
    let vs = vars(&["x"]);
    let a = ideal(&["2", "x"], &vs);
    let b = ideal(&["3", "x"], &vs);
    let c = ideal_intersect(&a, &b);
    assert!(c.eq_ideal(&ideal(&["6", "x"], &vs)));
}

#[test]
fn quotient_cases() {
    let vs = vars(&["x"]);
    let q1 = ideal_quotient(&ideal(&["2*x"], &vs), &ideal(&["2"], &vs)).unwrap();
    assert!(q1.eq_ideal(&ideal(&["x"], &vs)));

    let q2 = ideal_quotient(&ideal(&["4", "2*x"], &vs), &ideal(&["2"], &vs)).unwrap();
    assert!(q2.eq_ideal(&ideal(&["2", "x"], &vs)));

    let i = ideal(&["4", "2*x"], &vs);
    let q3 = ideal_quotient(&i, &IdealZ::unit(1, ORD)).unwrap();
    assert!(q3.eq_ideal(&i));
}

#[test]
fn saturation_cases() {
    let vs = vars(&["x"]);
    let s1 = saturate(&ideal(&["2*x"], &vs), &ideal(&["2"], &vs)).unwrap();
    assert!(s1.eq_ideal(&ideal(&["x"], &vs)));

    // Stabilizes after two steps.
    let s2 = saturate(&ideal(&["4*x", "x^2"], &vs), &ideal(&["2"], &vs)).unwrap();
    assert!(s2.eq_ideal(&ideal(&["x"], &vs)));

    let i = ideal(&["4", "2*x"], &vs);
    let s3 = saturate(&i, &IdealZ::unit(1, ORD)).unwrap();
    assert!(s3.eq_ideal(&i));
}

#[test]
fn quotient_and_saturation_grow() {
    let vs = vars(&["x", "y"]);
    let i = ideal(&["4*x", "2*y", "x*y^2"], &vs);
    let j = ideal(&["2", "y"], &vs);
    let q = ideal_quotient(&i, &j).unwrap();
    let s = saturate(&i, &j).unwrap();
    assert!(q.contains_ideal(&i));
    assert!(s.contains_ideal(&q));
}

#[test]
fn one_representation_cases() {
    let vs = vars(&["x"]);
    let check = |a: &IdealZ, b: &IdealZ| {
        let (p, q) = one_representation(a, b).unwrap();
        assert!(a.contains(&p), "p not in first ideal");
        assert!(b.contains(&q), "q not in second ideal");
        let one = p.add(&q, ORD);
        assert_eq!(one.as_constant(), Some(BigInt::one()));
    };
    check(&ideal(&["2"], &vs), &ideal(&["3"], &vs));
    check(&ideal(&["x"], &vs), &ideal(&["x-1"], &vs));
    check(&IdealZ::unit(1, ORD), &ideal(&["5", "x^3"], &vs));
}

#[test]
fn one_representation_rejects_non_comaximal() {
    let vs = vars(&["x"]);
    let r = one_representation(&ideal(&["2"], &vs), &ideal(&["2*x"], &vs));
    assert_eq!(r.unwrap_err(), IdealError::NotComaximal);
}

#[test]
fn coefficient_maps() {
    let vs = vars(&["x", "y"]);
    let i = ideal(&["2*x-y"], &vs);
    // Mod 2 the generator collapses to -y ~ y.
    let f2 = i.to_fp(2).unwrap();
    let y = Poly::from_terms(2, vec![(Term(vec![0, 1]), Fp::new(1, 2))], ORD);
    assert!(f2.contains(&y));
    assert!(IdealF::new(2, ORD, vec![y]).contains(&f2.gens[0]));
    // Over Q nothing changes up to scaling.
    let q = i.to_q();
    assert!(q.contains(&parse_poly_q("2*x-y", &vs, ORD).unwrap()));
    // <6> mod 3 is the zero ideal.
    let z = ideal(&["6"], &vs).to_fp(3).unwrap();
    assert!(z.is_zero_ideal());
    // Non-prime modulus is rejected.
    assert!(i.to_fp(6).is_err());
}

#[test]
fn contraction_cases() {
    let vs = vars(&["x"]);
    let q_ideal = |gens: &[&str]| -> IdealQ {
        IdealF::new(
            1,
            ORD,
            gens.iter().map(|g| parse_poly_q(g, &vs, ORD).unwrap()).collect(),
        )
    };
    // <x/2> contracts to <x>: same ideal as <2x> saturated.
    let mut half_x = parse_poly_q("x", &vs, ORD).unwrap();
    half_x = half_x.scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let c1 = contract_to_z(&IdealF::new(1, ORD, vec![half_x]));
    assert!(c1.eq_ideal(&ideal(&["x"], &vs)));

    let mut xph = parse_poly_q("2*x+1", &vs, ORD).unwrap();
    xph = xph.scale(&num_rational::BigRational::new(1.into(), 2.into()));
    let c2 = contract_to_z(&IdealF::new(1, ORD, vec![xph]));
    assert!(c2.eq_ideal(&ideal(&["2*x+1"], &vs)));

    // Oracle (membership both directions): <x^2 - 1/4> ∩ Z[x] = <4x^2 - 1>.
    let mut f = parse_poly_q("4*x^2-1", &vs, ORD).unwrap();
    f = f.scale(&num_rational::BigRational::new(1.into(), 4.into()));
    let c3 = contract_to_z(&IdealF::new(1, ORD, vec![f]));
    assert!(c3.eq_ideal(&ideal(&["4*x^2-1"], &vs)));
    let _ = q_ideal;
}

#[test]
fn lifting_cases() {
    let f2: IdealFp = IdealF::new(
        1,
        ORD,
        vec![Poly::from_terms(
            1,
            vec![(Term(vec![1]), Fp::new(1, 2)), (Term(vec![0]), Fp::new(1, 2))],
            ORD,
        )],
    );
    let vs = vars(&["x"]);
    let l1 = lift_from_fp(&f2, 2);
    assert!(l1.eq_ideal(&ideal(&["2", "x+1"], &vs)));

    let zero3: IdealFp = IdealF::new(1, ORD, vec![]);
    assert!(lift_from_fp(&zero3, 3).eq_ideal(&ideal(&["3"], &vs)));

    // x - 2 over F_5 lifts canonically with -2 ≡ 3.
    let f5: IdealFp = IdealF::new(
        1,
        ORD,
        vec![Poly::from_terms(
            1,
            vec![(Term(vec![1]), Fp::new(1, 5)), (Term(vec![0]), Fp::new(3, 5))],
            ORD,
        )],
    );
    let l3 = lift_from_fp(&f5, 5);
    assert!(l3.eq_ideal(&ideal(&["5", "x+3"], &vs)));
}

#[test]
fn elim_constant_cases() {
    let vs = vars(&["x"]);
    assert_eq!(elim_constant(&ideal(&["6", "x"], &vs)), BigInt::from(6));
    assert_eq!(elim_constant(&ideal(&["x"], &vs)), BigInt::zero());
    assert_eq!(elim_constant(&ideal(&["4", "6"], &vs)), BigInt::from(2));
}

#[test]
fn finite_quotient_detection() {
    let vs = vars(&["x", "y"]);
    assert!(ideal(&["6", "x", "y^2"], &vs).has_finite_quotient());
    assert!(ideal(&["x^2-y", "y^2", "2*x-y"], &vs).has_finite_quotient());
    // 2x is a pure power with a non-unit coefficient: quotient not f.g.
    assert!(!ideal(&["2*x", "y"], &vs).has_finite_quotient());
    assert!(!ideal(&["6", "x"], &vars(&["x"])).has_finite_quotient() == false);
    assert!(IdealZ::unit(2, ORD).has_finite_quotient());
}

#[test]
fn canonical_gb_is_deterministic() {
    let vs = vars(&["x", "y"]);
    let a = ideal(&["2*x-y", "y^2", "6"], &vs);
    let b = ideal(&["y^2", "6", "2*x-y"], &vs);
    assert_eq!(gb_strings(&a, &vs), gb_strings(&b, &vs));
}

#[test]
fn parse_and_render_roundtrip() {
    let vs = vars(&["y1", "y2"]);
    for s in ["y1^2 - y1", "6", "3*y2", "y1 + y2 - 1", "2*y2 + 4", "-y2 + 1"] {
        let p = pz(s, &vs);
        let r = render_poly(&p, &vs);
        assert_eq!(pz(&r, &vs), p, "roundtrip failed for {s}");
    }
    assert!(parse_poly("q + 1", &vs, ORD).is_err());
    assert!(parse_poly("y1 +", &vs, ORD).is_err());
}
