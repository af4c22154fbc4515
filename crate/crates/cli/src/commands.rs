//! Command implementations: bridge parsed documents to the library
//! pipeline and collect results into output documents.

use crate::doc::{AlgebraDoc, BilinearDoc, Field, IdealDoc, OutputDocument};
use num_bigint::BigInt;
use num_traits::Zero;
use zalg::decompose::{
    decompose_algebra, verify_decomposition, AlgebraFactor, DecompositionReport,
};
use zalg::exactlin::{hermite_basis, FpAbelianGroup, GroupElement, IntMatrix};
use zalg::idempotents::{idempotent_axioms_hold, primitive_idempotents};
use zalg::polyring::{parse_poly, render_poly, IdealZ, PolyParseError, TermOrder};
use zalg::primdec::{primary_decomposition_with_primes, HeightClass};
use zalg::scalars::{annihilators, max_scalars_algebra, BilinearMap, ZAlgebra};

const ORD: TermOrder = TermOrder::DegRevLex;

/// Math-level failure (exit code 1), as opposed to parse errors (code 2).
#[derive(Debug)]
pub struct MathError(pub String);

impl std::fmt::Display for MathError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for MathError {}

fn math<E: std::fmt::Display>(e: E) -> MathError {
    MathError(e.to_string())
}

pub fn build_algebra(doc: &AlgebraDoc) -> Result<ZAlgebra, MathError> {
    let n = doc.gens.len();
    let relations = if doc.relations.is_empty() {
        IntMatrix::zero(n, 0)
    } else {
        IntMatrix::from_rows(doc.relations.clone()).transpose()
    };
    let group = FpAbelianGroup::new(n, relations);
    let mut structure = vec![vec![vec![BigInt::zero(); n]; n]; n];
    for (i, j, v) in &doc.products {
        structure[*i][*j] = v.clone();
    }
    ZAlgebra::new(group, structure).map_err(math)
}

pub fn build_bilinear(doc: &BilinearDoc) -> Result<BilinearMap, MathError> {
    let group = |n: usize, rels: &[Vec<BigInt>]| {
        let relations = if rels.is_empty() {
            IntMatrix::zero(n, 0)
        } else {
            IntMatrix::from_rows(rels.to_vec()).transpose()
        };
        FpAbelianGroup::new(n, relations)
    };
    let n1 = group(doc.gens1.len(), &doc.rel1);
    let n2 = group(doc.gens2.len(), &doc.rel2);
    let m = group(doc.gensm.len(), &doc.relm);
    let mut structure =
        vec![vec![vec![BigInt::zero(); doc.gensm.len()]; doc.gens2.len()]; doc.gens1.len()];
    for (i, j, v) in &doc.products {
        structure[*i][*j] = v.clone();
    }
    BilinearMap::new(n1, n2, m, structure).map_err(math)
}

pub fn build_ideal(doc: &IdealDoc) -> Result<IdealZ, PolyParseError> {
    let gens = doc
        .polys
        .iter()
        .map(|p| parse_poly(p, &doc.vars, ORD))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IdealZ::new(doc.vars.len(), ORD, gens))
}

fn presentation_vars(r: usize) -> Vec<String> {
    (0..r).map(|i| format!("y{}", i + 1)).collect()
}

fn push_header(out: &mut OutputDocument, command: &str, seed: u64) {
    out.push_text("command", command);
    out.push_num("seed", seed);
    out.push_text("status", "ok");
}

pub fn cmd_annihilator(doc: &AlgebraDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let algebra = build_algebra(doc)?;
    let ann = annihilators(&algebra);
    let mut out = OutputDocument::default();
    push_header(&mut out, "annihilator", seed);
    out.push_text("well_defined", bool_str(algebra.is_well_defined()));
    out.push_matrix("ann_left", ann.left);
    out.push_matrix("ann_right", ann.right);
    out.push_matrix("ann_two_sided", ann.two_sided);
    Ok(out)
}

pub fn cmd_scalars(doc: &AlgebraDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let algebra = build_algebra(doc)?;
    let ring = max_scalars_algebra(&algebra).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "scalars", seed);
    out.push_text("well_defined", bool_str(algebra.is_well_defined()));
    out.push_num("generator_count", ring.generators.len() as i64);
    for (k, g) in ring.generators.iter().enumerate() {
        out.push_matrix(&format!("generator_{}_left", k + 1), matrix_rows(&g.left));
        out.push_matrix(&format!("generator_{}_right", k + 1), matrix_rows(&g.right));
    }
    out.push_vector("unit_combination", ring.unit_combination.clone());
    out.push_matrix("relation_rows", ring.relation_rows.clone());
    let vs = presentation_vars(ring.generators.len());
    out.push_list(
        "presentation",
        ring.presentation.gens.iter().map(|g| render_poly(g, &vs)).collect(),
    );
    out.push_list(
        "presentation_gb",
        ring.presentation
            .strong_gb()
            .iter()
            .map(|g| render_poly(g, &vs))
            .collect(),
    );
    Ok(out)
}

pub fn cmd_idempotents(doc: &IdealDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let ideal = build_ideal(doc).map_err(math)?;
    let set = primitive_idempotents(&ideal, seed).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "idempotents", seed);
    out.push_list(
        "groebner_basis",
        ideal.strong_gb().iter().map(|g| render_poly(g, &doc.vars)).collect(),
    );
    out.push_list(
        "idempotents",
        set.elements.iter().map(|e| render_poly(e, &doc.vars)).collect(),
    );
    out.push_text(
        "axioms_ok",
        bool_str(idempotent_axioms_hold(&ideal, &set.elements)),
    );
    Ok(out)
}

pub fn cmd_primdec(doc: &IdealDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let ideal = build_ideal(doc).map_err(math)?;
    let decomposition = primary_decomposition_with_primes(&ideal, seed).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "primdec", seed);
    out.push_num("component_count", decomposition.components.len() as i64);
    for (k, c) in decomposition.components.iter().enumerate() {
        out.push_list(
            &format!("component_{}_primary", k + 1),
            c.primary.strong_gb().iter().map(|g| render_poly(g, &doc.vars)).collect(),
        );
        out.push_list(
            &format!("component_{}_prime", k + 1),
            c.prime
                .as_ref()
                .map(|p| p.strong_gb().iter().map(|g| render_poly(g, &doc.vars)).collect())
                .unwrap_or_default(),
        );
        out.push_text(
            &format!("component_{}_height", k + 1),
            match c.height_class {
                HeightClass::Generic => "generic",
                HeightClass::Maximal => "maximal",
            },
        );
    }
    let intersection_ok = match decomposition.intersection() {
        Some(meet) => meet.eq_ideal(&ideal),
        None => ideal.is_unit(),
    };
    out.push_text("intersection_ok", bool_str(intersection_ok));
    Ok(out)
}

/// Scalars of a bilinear-map document: generator matrices acting on the
/// two sides, plus the presentation.
pub fn cmd_scalars_bilinear(doc: &BilinearDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let f = build_bilinear(doc)?;
    let gens = zalg::scalars::max_scalars_bilinear(&f).map_err(math)?;
    let ring = zalg::scalars::scalar_presentation(&f, &gens).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "scalars", seed);
    out.push_text("well_defined", bool_str(f.is_well_defined()));
    out.push_num("generator_count", ring.generators.len() as i64);
    for (k, g) in ring.generators.iter().enumerate() {
        out.push_matrix(&format!("generator_{}_left", k + 1), matrix_rows(&g.left));
        out.push_matrix(&format!("generator_{}_right", k + 1), matrix_rows(&g.right));
    }
    out.push_vector("unit_combination", ring.unit_combination.clone());
    out.push_matrix("relation_rows", ring.relation_rows.clone());
    let vs = presentation_vars(ring.generators.len());
    out.push_list(
        "presentation",
        ring.presentation.gens.iter().map(|g| render_poly(g, &vs)).collect(),
    );
    Ok(out)
}

/// Canonical decomposition of a bilinear-map document into directly
/// indecomposable pieces.
pub fn cmd_decompose_bilinear(doc: &BilinearDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let f = build_bilinear(doc)?;
    let factors = zalg::decompose::decompose_bilinear(&f, seed).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "decompose", seed);
    out.push_text("well_defined", bool_str(f.is_well_defined()));
    out.push_num("factor_count", factors.len() as i64);
    for (k, fac) in factors.iter().enumerate() {
        out.push_matrix(
            &format!("factor_{}_left_generators", k + 1),
            fac.n1_gens.iter().map(|g| g.coords.clone()).collect(),
        );
        out.push_matrix(
            &format!("factor_{}_right_generators", k + 1),
            fac.n2_gens.iter().map(|g| g.coords.clone()).collect(),
        );
        out.push_matrix(
            &format!("factor_{}_target_generators", k + 1),
            fac.m_gens.iter().map(|g| g.coords.clone()).collect(),
        );
    }
    Ok(out)
}

pub fn cmd_decompose(doc: &AlgebraDoc, seed: u64) -> Result<OutputDocument, MathError> {
    let algebra = build_algebra(doc)?;
    let ring = max_scalars_algebra(&algebra).map_err(math)?;
    let report = decompose_algebra(&algebra, seed).map_err(math)?;
    let mut out = OutputDocument::default();
    push_header(&mut out, "decompose", seed);
    out.push_text("well_defined", bool_str(algebra.is_well_defined()));
    out.push_matrix("ann_basis", report.ann_basis.clone());
    let vs = presentation_vars(ring.generators.len());
    out.push_list(
        "presentation",
        ring.presentation.gens.iter().map(|g| render_poly(g, &vs)).collect(),
    );
    out.push_list(
        "idempotents",
        report
            .idempotents
            .elements
            .iter()
            .map(|e| render_poly(e, &vs))
            .collect(),
    );
    out.push_num("factor_count", report.factors.len() as i64);
    for (k, f) in report.factors.iter().enumerate() {
        out.push_matrix(
            &format!("factor_{}_generators", k + 1),
            f.generators.iter().map(|g| g.coords.clone()).collect(),
        );
        out.push_matrix(&format!("factor_{}_lattice", k + 1), f.lattice.clone());
    }
    out.push_text("certified_indecomposable", bool_str(report.indecomposable_certified));
    out.push_text("verified", bool_str(verify_decomposition(&algebra, &report)));
    Ok(out)
}

pub fn cmd_verify(
    doc: &AlgebraDoc,
    factor_gens: &[Vec<Vec<BigInt>>],
    seed: u64,
) -> Result<OutputDocument, MathError> {
    let algebra = build_algebra(doc)?;
    let n = algebra.group.ngens;
    let ann = annihilators(&algebra);
    let rel_q = {
        let mut rows = algebra.group.relation_lattice();
        rows.extend(ann.two_sided.iter().cloned());
        hermite_basis(rows, n)
    };
    let factors: Vec<AlgebraFactor> = factor_gens
        .iter()
        .enumerate()
        .map(|(k, gens)| {
            let mut rows = gens.clone();
            rows.extend(rel_q.iter().cloned());
            AlgebraFactor {
                generators: gens.iter().cloned().map(GroupElement::new).collect(),
                lattice: hermite_basis(rows, n),
                idempotent_index: k,
            }
        })
        .collect();
    let report = DecompositionReport {
        factors,
        indecomposable_certified: false,
        ann_basis: ann.two_sided,
        idempotents: zalg::idempotents::IdempotentSet {
            elements: vec![],
            modulus: IdealZ::unit(1, ORD),
        },
    };
    let mut out = OutputDocument::default();
    push_header(&mut out, "verify", seed);
    out.push_text("well_defined", bool_str(algebra.is_well_defined()));
    out.push_num("factor_count", report.factors.len() as i64);
    out.push_text("verified", bool_str(verify_decomposition(&algebra, &report)));
    Ok(out)
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.rows).map(|i| m.row_vec(i)).collect()
}

fn bool_str(b: bool) -> &'static str {
    if b {
        "true"
    } else {
        "false"
    }
}

/// Human-readable rendering of an output document.
pub fn render_text(doc: &OutputDocument) -> String {
    let mut out = String::new();
    for (key, field) in &doc.entries {
        match field {
            Field::Text(t) => out.push_str(&format!("{key}: {t}\n")),
            Field::Num(v) => out.push_str(&format!("{key}: {v}\n")),
            Field::Vector(v) => out.push_str(&format!("{key}: [{}]\n", join(v))),
            Field::Matrix(m) => {
                out.push_str(&format!("{key}:\n"));
                for row in m {
                    out.push_str(&format!("  [{}]\n", join(row)));
                }
            }
            Field::List(l) => {
                out.push_str(&format!("{key}:\n"));
                for item in l {
                    out.push_str(&format!("  {item}\n"));
                }
            }
        }
    }
    out
}

fn join(v: &[BigInt]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
