//! End-to-end decomposition pipeline on the worked examples: annihilators,
//! maximal ring of scalars, primitive idempotents, factor extraction,
//! certificates and the post-hoc verifier.

use num_bigint::BigInt;
use num_traits::Zero;
use zalg::decompose::{
    certify_indecomposable, decompose_algebra, decompose_bilinear, evaluate_idempotent,
    verify_decomposition, AlgebraFactor, DecompositionReport,
};
use zalg::exactlin::{hermite_basis, lattice_eq, FpAbelianGroup, GroupElement, IntMatrix};
use zalg::idempotents::{idempotent_axioms_hold, IdempotentSet};
use zalg::polyring::{parse_poly, render_poly, IdealZ, TermOrder};
use zalg::scalars::{annihilators, max_scalars_bilinear, BilinearMap, EndoPair, ZAlgebra};

const ORD: TermOrder = TermOrder::DegRevLex;

fn bv(xs: &[i64]) -> Vec<BigInt> {
    xs.iter().map(|&x| BigInt::from(x)).collect()
}

fn tensor(n: usize, entries: &[(usize, usize, &[i64])]) -> Vec<Vec<Vec<BigInt>>> {
    let mut s = vec![vec![vec![BigInt::zero(); n]; n]; n];
    for (i, j, v) in entries {
        s[*i][*j] = bv(v);
    }
    s
}

fn pair_of_planes() -> ZAlgebra {
    ZAlgebra::new(
        FpAbelianGroup::free(5),
        tensor(
            5,
            &[
                (0, 1, &[0, 0, 0, 0, 1]),
                (1, 0, &[0, 0, 0, 0, -1]),
                (2, 3, &[0, 0, 0, 0, 1]),
                (3, 2, &[0, 0, 0, 0, -1]),
            ],
        ),
    )
    .unwrap()
}

fn amalgamated_pair() -> ZAlgebra {
    ZAlgebra::new(
        FpAbelianGroup::free(6),
        tensor(
            6,
            &[
                (0, 2, &[0, 0, 0, 1, 0, 0]),
                (2, 0, &[0, 0, 0, 1, 0, 0]),
                (1, 2, &[0, 0, 0, 1, 0, 0]),
                (2, 1, &[0, 0, 0, 1, 0, 0]),
                (2, 3, &[0, 0, 1, 0, 0, 0]),
                (3, 2, &[0, 0, 1, 0, 0, 0]),
                (4, 5, &[1, -1, 0, 0, 0, 0]),
                (5, 4, &[1, -1, 0, 0, 0, 0]),
            ],
        ),
    )
    .unwrap()
}

fn obstructed_pair() -> ZAlgebra {
    ZAlgebra::new(
        FpAbelianGroup::free(5),
        tensor(
            5,
            &[
                (0, 0, &[0, 0, 0, 2, 0]),
                (0, 1, &[0, 1, 0, 0, 0]),
                (1, 0, &[0, 1, 0, 0, 0]),
                (1, 1, &[0, 1, 0, 0, 0]),
                (2, 2, &[0, 0, 1, 0, 0]),
            ],
        ),
    )
    .unwrap()
}

fn torsion_lie() -> ZAlgebra {
    ZAlgebra::new(
        FpAbelianGroup::with_orders(&[3, 6, 3, 7, 7]),
        tensor(
            5,
            &[
                (0, 1, &[0, 1, 0, 0, 0]),
                (1, 0, &[0, 5, 0, 0, 0]),
                (0, 2, &[0, 0, 0, 0, 2]),
                (1, 2, &[0, 0, 0, 0, 3]),
                (2, 0, &[0, 0, 0, 0, 5]),
                (2, 1, &[0, 0, 0, 0, 4]),
                (2, 3, &[0, 0, 1, 0, 0]),
                (3, 2, &[0, 0, 2, 0, 0]),
            ],
        ),
    )
    .unwrap()
}

/// Expected factor lattice: generator rows plus the quotient relations.
fn factor_lattice(r: &ZAlgebra, gens: &[Vec<BigInt>], ann: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = r.group.ngens;
    let mut rows = gens.to_vec();
    rows.extend(r.group.relation_lattice());
    rows.extend(ann.to_vec());
    hermite_basis(rows, n)
}

fn assert_factor_lattices(
    r: &ZAlgebra,
    report: &DecompositionReport,
    expected_gens: &[&[&[i64]]],
) {
    let n = r.group.ngens;
    assert_eq!(report.factors.len(), expected_gens.len(), "factor count");
    let mut expected: Vec<Vec<Vec<BigInt>>> = expected_gens
        .iter()
        .map(|gens| {
            let rows: Vec<Vec<BigInt>> = gens.iter().map(|g| bv(g)).collect();
            factor_lattice(r, &rows, &report.ann_basis)
        })
        .collect();
    for f in &report.factors {
        let pos = expected.iter().position(|e| lattice_eq(e, &f.lattice, n));
        assert!(pos.is_some(), "unexpected factor lattice {:?}", f.lattice);
        expected.remove(pos.unwrap());
    }
}

fn idempotent_strings(report: &DecompositionReport) -> Vec<String> {
    let r = report.idempotents.modulus.nvars;
    let vs: Vec<String> = (0..r).map(|i| format!("y{}", i + 1)).collect();
    let mut out: Vec<String> = report
        .idempotents
        .elements
        .iter()
        .map(|e| render_poly(e, &vs))
        .collect();
    out.sort();
    out
}

#[test]
fn torsion_lie_full_pipeline() {
    let r = torsion_lie();
    let report = decompose_algebra(&r, 0).unwrap();
    // Annihilator subgroup <x5, 3x4> modulo the relations.
    let mut ann_expected = vec![bv(&[0, 0, 0, 3, 0]), bv(&[0, 0, 0, 0, 1])];
    ann_expected.extend(r.group.relation_lattice());
    assert!(lattice_eq(&report.ann_basis, &ann_expected, 5));
    // Idempotents 3, y2, 2y2 + 4 as residue classes.
    let i = &report.idempotents.modulus;
    let vs: Vec<String> = vec!["y1".into(), "y2".into()];
    let mut expected: Vec<String> = ["3", "y2", "2*y2+4"]
        .iter()
        .map(|s| render_poly(&i.normal_form(&parse_poly(s, &vs, ORD).unwrap()), &vs))
        .collect();
    expected.sort();
    assert_eq!(idempotent_strings(&report), expected);
    assert!(idempotent_axioms_hold(i, &report.idempotents.elements));
    // Factors <3 x2>, <x3>, <x1, 4 x2> modulo Ann.
    assert_factor_lattices(
        &r,
        &report,
        &[
            &[&[0, 3, 0, 0, 0]],
            &[&[0, 0, 1, 0, 0]],
            &[&[1, 0, 0, 0, 0], &[0, 4, 0, 0, 0]],
        ],
    );
}

#[test]
fn pair_of_planes_pipeline_and_hand_decomposition() {
    let r = pair_of_planes();
    let report = decompose_algebra(&r, 0).unwrap();
    // The scalar ring is indecomposable: one factor, the whole quotient.
    assert_eq!(report.factors.len(), 1);
    assert_factor_lattices(
        &r,
        &report,
        &[&[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]],
    );
    assert!(!report.indecomposable_certified);
    assert!(verify_decomposition(&r, &report));

    // The hand decomposition <x1, x2> x <x3, x4> is a valid decomposition
    // even though the scalar ring cannot produce it.
    let ann = annihilators(&r).two_sided;
    let hand = DecompositionReport {
        factors: vec![
            AlgebraFactor {
                generators: vec![
                    GroupElement::from_i64(&[1, 0, 0, 0, 0]),
                    GroupElement::from_i64(&[0, 1, 0, 0, 0]),
                ],
                lattice: factor_lattice(&r, &[bv(&[1, 0, 0, 0, 0]), bv(&[0, 1, 0, 0, 0])], &ann),
                idempotent_index: 0,
            },
            AlgebraFactor {
                generators: vec![
                    GroupElement::from_i64(&[0, 0, 1, 0, 0]),
                    GroupElement::from_i64(&[0, 0, 0, 1, 0]),
                ],
                lattice: factor_lattice(&r, &[bv(&[0, 0, 1, 0, 0]), bv(&[0, 0, 0, 1, 0])], &ann),
                idempotent_index: 1,
            },
        ],
        indecomposable_certified: false,
        ann_basis: ann,
        idempotents: report.idempotents.clone(),
    };
    assert!(verify_decomposition(&r, &hand));

    // Negative control: corrupt one factor.
    let mut corrupted = hand.clone();
    corrupted.factors[0].lattice = factor_lattice(
        &r,
        &[bv(&[1, 0, 0, 0, 0]), bv(&[0, 0, 0, 1, 0])],
        &corrupted.ann_basis,
    );
    corrupted.factors[0].generators = vec![
        GroupElement::from_i64(&[1, 0, 0, 0, 0]),
        GroupElement::from_i64(&[0, 0, 0, 1, 0]),
    ];
    assert!(!verify_decomposition(&r, &corrupted));
}

#[test]
fn amalgamated_pair_pipeline() {
    let r = amalgamated_pair();
    let report = decompose_algebra(&r, 0).unwrap();
    let i = &report.idempotents.modulus;
    let vs: Vec<String> = vec!["y1".into(), "y2".into()];
    let mut expected: Vec<String> = ["-y2+1", "y2"]
        .iter()
        .map(|s| render_poly(&i.normal_form(&parse_poly(s, &vs, ORD).unwrap()), &vs))
        .collect();
    expected.sort();
    assert_eq!(idempotent_strings(&report), expected);
    assert_factor_lattices(
        &r,
        &report,
        &[
            &[
                &[1, 0, 0, 0, 0, 0],
                &[0, 1, 0, 0, 0, 0],
                &[0, 0, 1, 0, 0, 0],
                &[0, 0, 0, 1, 0, 0],
            ],
            &[&[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]],
        ],
    );
    assert!(!report.indecomposable_certified);
    assert!(verify_decomposition(&r, &report));
}

#[test]
fn obstructed_pair_pipeline() {
    let r = obstructed_pair();
    let report = decompose_algebra(&r, 0).unwrap();
    assert_factor_lattices(
        &r,
        &report,
        &[
            &[&[1, 0, 0, 0, 0], &[0, 1, 0, 0, 0]],
            &[&[0, 0, 1, 0, 0]],
        ],
    );
    // R^2 ∩ Ann = <2 x4> is nonzero: certificate fails.
    assert!(!report.indecomposable_certified);
    assert!(verify_decomposition(&r, &report));
}

#[test]
fn rank_one_identity_algebra_is_certified() {
    let r = ZAlgebra::new(FpAbelianGroup::free(1), tensor(1, &[(0, 0, &[1])])).unwrap();
    assert!(certify_indecomposable(&r));
    let report = decompose_algebra(&r, 0).unwrap();
    assert_eq!(report.factors.len(), 1);
    assert!(report.indecomposable_certified);
    assert!(verify_decomposition(&r, &report));
}

#[test]
fn certificates_on_worked_examples() {
    assert!(!certify_indecomposable(&pair_of_planes()));
    assert!(!certify_indecomposable(&obstructed_pair()));
    assert!(!certify_indecomposable(&amalgamated_pair()));
}

#[test]
fn evaluate_idempotent_cases() {
    let vs = vec!["y1".to_string()];
    let phi = EndoPair {
        left: IntMatrix::from_i64(&[&[0, 1], &[1, 0]]),
        right: IntMatrix::from_i64(&[&[2]]),
    };
    // e = 1 gives the identity pair.
    let one = parse_poly("1", &vs, ORD).unwrap();
    let e1 = evaluate_idempotent(&one, std::slice::from_ref(&phi)).unwrap();
    assert_eq!(e1, EndoPair::identity(2, 1));
    // e = y1 gives the generator itself.
    let y1 = parse_poly("y1", &vs, ORD).unwrap();
    assert_eq!(evaluate_idempotent(&y1, std::slice::from_ref(&phi)).unwrap(), phi);
    // Arity mismatch is rejected.
    let vs2 = vec!["y1".to_string(), "y2".to_string()];
    let bad = parse_poly("y1+y2", &vs2, ORD).unwrap();
    assert!(evaluate_idempotent(&bad, std::slice::from_ref(&phi)).is_err());
}

#[test]
fn bilinear_decomposition_cases() {
    // Multiplication on Z x Z -> Z: a single factor.
    let z = FpAbelianGroup::free(1);
    let f = BilinearMap::new(z.clone(), z.clone(), z.clone(), vec![vec![bv(&[1])]]).unwrap();
    let factors = decompose_bilinear(&f, 0).unwrap();
    assert_eq!(factors.len(), 1);

    // Split block multiplication: two factors with complementary supports.
    let z2 = FpAbelianGroup::free(2);
    let mut s = vec![vec![bv(&[0, 0]); 2]; 2];
    s[0][0] = bv(&[1, 0]);
    s[1][1] = bv(&[0, 1]);
    let f2 = BilinearMap::new(z2.clone(), z2.clone(), z2, s).unwrap();
    let factors = decompose_bilinear(&f2, 0).unwrap();
    assert_eq!(factors.len(), 2);
    // Direct-sum property: the idempotent images partition the generators.
    let mut support = vec![false; 2];
    for fac in &factors {
        for (k, g) in fac.n1_gens.iter().enumerate() {
            if !g.coords.iter().all(|c| c.is_zero()) {
                assert!(!support[k], "overlapping factor supports");
                support[k] = true;
                let _ = k;
            }
        }
    }
    assert!(support.iter().all(|&s| s));
}

#[test]
fn bilinear_decomposition_of_torsion_multiplication() {
    // The multiplication map of the torsion Lie ring decomposes into three
    // factors, matching the three primitive idempotents.
    let r = torsion_lie();
    let (f, _) = zalg::scalars::multiplication_map(&r).unwrap();
    let factors = decompose_bilinear(&f, 0).unwrap();
    assert_eq!(factors.len(), 3);
    let gens = max_scalars_bilinear(&f).unwrap();
    assert_eq!(gens.len(), 2);
}

#[test]
fn decomposition_is_seed_independent() {
    let r = amalgamated_pair();
    let a = decompose_algebra(&r, 0).unwrap();
    let b = decompose_algebra(&r, 42).unwrap();
    assert_eq!(a.factors.len(), b.factors.len());
    for (x, y) in a.factors.iter().zip(&b.factors) {
        assert!(lattice_eq(&x.lattice, &y.lattice, 6));
    }
}

#[test]
fn zero_algebra_has_empty_decomposition() {
    let r = ZAlgebra::new(FpAbelianGroup::free(2), tensor(2, &[])).unwrap();
    let report = decompose_algebra(&r, 0).unwrap();
    assert!(report.factors.is_empty());
    assert!(report.idempotents.elements.is_empty());
    // The empty decomposition of the trivial quotient verifies.
    assert!(verify_decomposition(&r, &report));
}

#[test]
fn dummy_idempotent_set_for_hand_reports() {
    // verify_decomposition must not depend on the idempotent set.
    let r = pair_of_planes();
    let mut report = decompose_algebra(&r, 0).unwrap();
    report.idempotents = IdempotentSet {
        elements: vec![],
        modulus: IdealZ::unit(1, ORD),
    };
    assert!(verify_decomposition(&r, &report));
}

#[test]
fn evaluated_idempotents_are_orthogonal_resolutions_of_identity() {
    // Σ Eᵢ acts as the identity on every generator, and Eᵢ·Eⱼ acts as zero
    // for i ≠ j — the direct-sum property behind the factor extraction.
    for r in [amalgamated_pair(), obstructed_pair(), pair_of_planes()] {
        let ring = zalg::scalars::max_scalars_algebra(&r).unwrap();
        let idem =
            zalg::idempotents::primitive_idempotents(&ring.presentation, 0).unwrap();
        let n = r.group.ngens;
        let pairs: Vec<EndoPair> = idem
            .elements
            .iter()
            .map(|e| evaluate_idempotent(e, &ring.generators).unwrap())
            .collect();
        let mut sum = EndoPair {
            left: IntMatrix::zero(n, n),
            right: IntMatrix::zero(n, n),
        };
        for p in &pairs {
            sum.left = sum.left.add(&p.left);
            sum.right = sum.right.add(&p.right);
        }
        assert!(sum.eq_modulo(&EndoPair::identity(n, n), &ring.n1, &ring.n2));
        let zero = EndoPair {
            left: IntMatrix::zero(n, n),
            right: IntMatrix::zero(n, n),
        };
        for (i, a) in pairs.iter().enumerate() {
            // Idempotent squares.
            assert!(a.compose(a).eq_modulo(a, &ring.n1, &ring.n2));
            for b in pairs.iter().take(i) {
                assert!(a.compose(b).eq_modulo(&zero, &ring.n1, &ring.n2));
            }
        }
    }
}

#[test]
fn scalar_action_is_compatible_with_multiplication() {
    // For well-defined algebras and every scalar generator (φ₁, φ₂):
    // (φ₁a)·b = a·(φ₂b) for random elements a, b, exactly modulo the
    // relations — the defining compatibility of a ring of scalars.
    use zalg::rng::SplitMix64;
    let mut rng = SplitMix64::new(0x5ca1a55);
    for r in [amalgamated_pair(), obstructed_pair(), pair_of_planes()] {
        let ring = zalg::scalars::max_scalars_algebra(&r).unwrap();
        let n = r.group.ngens;
        for g in &ring.generators {
            for _ in 0..25 {
                let a: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.signed(6))).collect();
                let b: Vec<BigInt> = (0..n).map(|_| BigInt::from(rng.signed(6))).collect();
                let phi1_a = g.left.transpose().mul_vec(&a);
                let phi2_b = g.right.transpose().mul_vec(&b);
                let lhs = r.multiply(&phi1_a, &b);
                let rhs = r.multiply(&a, &phi2_b);
                let diff: Vec<BigInt> =
                    lhs.iter().zip(&rhs).map(|(x, y)| x - y).collect();
                assert!(
                    r.group.is_zero(&GroupElement::new(diff)).unwrap(),
                    "scalar compatibility failed"
                );
            }
        }
    }
}

#[test]
fn random_well_defined_algebras_decompose_and_verify() {
    use zalg::rng::SplitMix64;
    let mut rng = SplitMix64::new(0xdec0_2024);
    let mut done = 0;
    let mut attempts = 0;
    while done < 15 {
        attempts += 1;
        assert!(attempts < 400, "generator starved");
        let n = 2 + rng.below(2) as usize;
        // Mix of free and small-torsion factors.
        let orders: Vec<i64> = (0..n).map(|_| [0, 0, 2, 3, 4][rng.below(5) as usize]).collect();
        let group = FpAbelianGroup::with_orders(&orders);
        let mut s = vec![vec![vec![BigInt::zero(); n]; n]; n];
        for _ in 0..(1 + rng.below(3)) {
            let i = rng.below(n as u64) as usize;
            let j = rng.below(n as u64) as usize;
            let k = rng.below(n as u64) as usize;
            s[i][j][k] = BigInt::from(rng.signed(2));
        }
        let Ok(r) = ZAlgebra::new(group, s) else { continue };
        if !r.is_well_defined() {
            continue;
        }
        let report = decompose_algebra(&r, attempts).unwrap();
        assert!(
            verify_decomposition(&r, &report),
            "verification failed on a well-defined random algebra"
        );
        assert!(idempotent_axioms_hold(
            &report.idempotents.modulus,
            &report.idempotents.elements
        ));
        done += 1;
    }
}
