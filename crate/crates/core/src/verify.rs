//! End-to-end checks on a problem instance: hypotheses, the Hilbert
//! coefficient identities, the two Tor routes and the sign of `e_1`.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{binomial, Polynomial, RingContext};
use crate::error::{Error, Result};
use crate::graded_module::{annihilates, build_l_with_core, jn_colength, TorsionModuleModel};
use crate::hilbert::{
    chern_sign, cm_test, fit_coefficients, forward_difference, ChernSign, CmVerdict, HilbertDataset,
};
use crate::ideal::{
    ideal_intersect, ideal_power, ideal_sum, is_mprimary, krull_dimension, length_quotient, Ideal,
};
use crate::resolution::{tor1_closed_form, tor1_from_lengths};

/// Ideals `I_1, ..., I_g`, parameters `a_1, ..., a_d` and the derived data
/// `core = ∩ I_i`, `d = dim S/core`.
#[derive(Debug, Clone)]
pub struct ProblemInstance {
    ring: RingContext,
    ideals: Vec<Ideal>,
    parameters: Vec<Polynomial>,
    max_power: Option<u32>,
    core: Ideal,
    j: Ideal,
    d: usize,
}

impl ProblemInstance {
    pub fn new(
        ring: &RingContext,
        ideals: Vec<Ideal>,
        parameters: Vec<Polynomial>,
        max_power: Option<u32>,
    ) -> Result<Self> {
        if ideals.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one ideal is required".into(),
            ));
        }
        if parameters.is_empty() {
            return Err(Error::InvalidArgument(
                "at least one parameter is required".into(),
            ));
        }
        if let Some(p) = parameters
            .iter()
            .find(|p| p.degree().is_none_or(|d| d == 0))
        {
            return Err(Error::InvalidArgument(format!(
                "parameter {p} must be homogeneous of degree at least 1"
            )));
        }
        if max_power == Some(0) {
            return Err(Error::InvalidArgument(
                "max_power must be at least 1".into(),
            ));
        }
        if ideals.iter().any(|i| i.ring() != ring) {
            return Err(Error::ContextMismatch);
        }
        let j = Ideal::new(ring, parameters.clone())?;
        let mut core = ideals[0].clone();
        for i in &ideals[1..] {
            core = ideal_intersect(&core, i)?;
        }
        let dim = krull_dimension(&core);
        if dim < 0 {
            return Err(Error::InvalidArgument(
                "the ideals intersect to the unit ideal".into(),
            ));
        }
        Ok(ProblemInstance {
            ring: ring.clone(),
            ideals,
            parameters,
            max_power,
            core,
            j,
            d: dim as usize,
        })
    }

    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn parameters(&self) -> &[Polynomial] {
        &self.parameters
    }

    pub fn parameter_ideal(&self) -> &Ideal {
        &self.j
    }

    pub fn core(&self) -> &Ideal {
        &self.core
    }

    pub fn g(&self) -> usize {
        self.ideals.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `r - dim S/I_1`.
    pub fn height(&self) -> usize {
        self.ring.nvars() - krull_dimension(&self.ideals[0]).max(0) as usize
    }

    /// Explicit value or `2d + 4`.
    pub fn max_power(&self) -> u32 {
        self.max_power.unwrap_or(2 * self.d as u32 + 4)
    }

    /// Applies `x_k ↦ images[k]` to every generator and parameter. With
    /// an invertible linear substitution this is a change of coordinates,
    /// which leaves every length unchanged.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<ProblemInstance> {
        let ideals = self
            .ideals
            .iter()
            .map(|i| {
                let gens = i
                    .generators()
                    .iter()
                    .map(|f| f.substitute(images))
                    .collect::<Result<Vec<_>>>()?;
                Ideal::new(&self.ring, gens)
            })
            .collect::<Result<Vec<_>>>()?;
        let parameters = self
            .parameters
            .iter()
            .map(|f| f.substitute(images))
            .collect::<Result<Vec<_>>>()?;
        ProblemInstance::new(&self.ring, ideals, parameters, self.max_power)
    }

    pub fn with_max_power(mut self, n: u32) -> Self {
        self.max_power = Some(n);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HypothesisCheck {
    pub name: &'static str,
    pub passed: bool,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct HypothesisReport {
    pub g: usize,
    pub d: usize,
    pub h: usize,
    pub checks: Vec<HypothesisCheck>,
    /// `d ≥ 2`, needed for the coefficient identities.
    pub dimension_at_least_two: bool,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &HypothesisCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

pub fn check_hypotheses(inst: &ProblemInstance) -> HypothesisReport {
    let mut checks = Vec::new();

    let inhomogeneous: Vec<String> = inst
        .ideals
        .iter()
        .flat_map(|i| i.generators())
        .chain(&inst.parameters)
        .filter(|f| !f.is_homogeneous())
        .map(|f| f.to_string())
        .collect();
    checks.push(HypothesisCheck {
        name: "homogeneous",
        passed: inhomogeneous.is_empty(),
        witness: if inhomogeneous.is_empty() {
            "all generators homogeneous".into()
        } else {
            format!("inhomogeneous: {}", inhomogeneous.join(", "))
        },
    });

    let dims: Vec<i64> = inst.ideals.iter().map(krull_dimension).collect();
    checks.push(HypothesisCheck {
        name: "equal_dimensions",
        passed: dims.windows(2).all(|w| w[0] == w[1]),
        witness: format!("dim S/I_i = {dims:?}"),
    });

    let mut bad_pairs = Vec::new();
    for a in 0..inst.g() {
        for b in a + 1..inst.g() {
            let sum = ideal_sum(&inst.ideals[a], &inst.ideals[b]).expect("same ring");
            if !is_mprimary(&sum) {
                bad_pairs.push(format!(
                    "({},{}) dim {}",
                    a + 1,
                    b + 1,
                    krull_dimension(&sum)
                ));
            }
        }
    }
    checks.push(HypothesisCheck {
        name: "pairwise_primary",
        passed: bad_pairs.is_empty(),
        witness: if inst.g() == 1 {
            "vacuous for a single ideal".into()
        } else if bad_pairs.is_empty() {
            "every I_i + I_j is primary to the maximal ideal".into()
        } else {
            format!("failing pairs: {}", bad_pairs.join(", "))
        },
    });

    checks.push(HypothesisCheck {
        name: "parameter_count",
        passed: inst.parameters.len() == inst.d,
        witness: format!(
            "{} parameters, dim S/core = {}",
            inst.parameters.len(),
            inst.d
        ),
    });

    let sop_dim = krull_dimension(&ideal_sum(&inst.core, &inst.j).expect("same ring"));
    checks.push(HypothesisCheck {
        name: "system_of_parameters",
        passed: sop_dim == 0,
        witness: format!("dim S/(core + J) = {sop_dim}"),
    });

    let j_dim = krull_dimension(&inst.j);
    let expected = inst.ring.nvars() as i64 - inst.d as i64;
    checks.push(HypothesisCheck {
        name: "regular_sequence",
        passed: j_dim == expected,
        witness: format!("dim S/J = {j_dim}, expected {expected}"),
    });

    HypothesisReport {
        g: inst.g(),
        d: inst.d,
        h: inst.height(),
        checks,
        dimension_at_least_two: inst.d >= 2,
    }
}

/// Lengths gathered for a single power `n`.
#[derive(Debug, Clone)]
struct PowerRow {
    n: u32,
    quotient: BigInt,
    components: Vec<BigInt>,
    l_colength: BigInt,
}

impl PowerRow {
    fn tor1(&self) -> BigInt {
        tor1_from_lengths(&self.quotient, &self.components, &self.l_colength)
    }
}

fn power_rows(inst: &ProblemInstance, model: &TorsionModuleModel) -> Result<Vec<PowerRow>> {
    let mut rows = (1..=inst.max_power())
        .into_par_iter()
        .map(|n| {
            let jn = ideal_power(&inst.j, n)?;
            let quotient = length_quotient(&ideal_sum(&inst.core, &jn)?)?;
            let components = inst
                .ideals
                .iter()
                .map(|i| length_quotient(&ideal_sum(i, &jn)?))
                .collect::<Result<Vec<_>>>()?;
            let l_colength = jn_colength(model, &inst.j, n)?;
            Ok(PowerRow {
                n,
                quotient,
                components,
                l_colength,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|r| r.n);
    Ok(rows)
}

/// `H(K, n)` for `n = 1..=max_power` with the fitted coefficients.
pub fn hilbert_dataset(inst: &ProblemInstance) -> Result<HilbertDataset> {
    let values = crate::hilbert::hilbert_values(&inst.core, &inst.j, inst.max_power())?;
    HilbertDataset::fit(inst.d, values)
}

#[derive(Debug, Clone, Serialize)]
pub struct CoefficientSummary {
    #[serde(serialize_with = "crate::json::decimals")]
    pub e: Vec<BigInt>,
    pub n0: u32,
    pub cm: bool,
    pub chern_sign: ChernSign,
    #[serde(rename = "lambda_L", serialize_with = "crate::json::decimal")]
    pub lambda_l: BigInt,
    #[serde(rename = "lambda_RK", serialize_with = "crate::json::decimal")]
    pub colength: BigInt,
}

pub fn coefficient_summary(inst: &ProblemInstance) -> Result<CoefficientSummary> {
    let data = hilbert_dataset(inst)?;
    let model = build_l_with_core(&inst.ideals, inst.core.clone())?;
    let colength = data.values[&1].clone();
    Ok(CoefficientSummary {
        cm: cm_test(data.e(0), &colength).cohen_macaulay,
        chern_sign: chern_sign(data.e(1)),
        n0: data.stabilization_index,
        e: data.coefficients,
        lambda_l: model.lambda().clone(),
        colength,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

/// One side-by-side comparison inside an identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Comparison {
    fn new(at: impl Into<String>, lhs: &BigInt, rhs: &BigInt) -> Self {
        Comparison {
            at: at.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            equal: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityResult {
    pub name: &'static str,
    pub status: Status,
    pub message: String,
    pub comparisons: Vec<Comparison>,
}

impl IdentityResult {
    fn from_comparisons(name: &'static str, message: String, comparisons: Vec<Comparison>) -> Self {
        let status = if comparisons.iter().all(|c| c.equal) {
            Status::Pass
        } else {
            Status::Fail
        };
        IdentityResult {
            name,
            status,
            message,
            comparisons,
        }
    }

    fn not_applicable(name: &'static str, message: impl Into<String>) -> Self {
        IdentityResult {
            name,
            status: Status::NotApplicable,
            message: message.into(),
            comparisons: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct NegativityVerdict {
    pub expected: String,
    #[serde(serialize_with = "crate::json::decimal")]
    pub e1: BigInt,
    pub chern_sign: ChernSign,
    pub consistent: bool,
    pub cm: CmVerdict,
    /// `λ(R/K) ≥ e_0(K)`; reported, never a failure.
    pub colength_bound_holds: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub hypotheses: HypothesisReport,
    pub max_power: u32,
    #[serde(rename = "lambda_L", serialize_with = "crate::json::decimal")]
    pub lambda_l: BigInt,
    pub top_degree: Option<u32>,
    pub annihilates: bool,
    pub hilbert_k: HilbertDataset,
    /// `H_J(L, n) = λ(Tor_1(L, S/J^n))`, fitted with degree `d - 1`.
    pub hilbert_l: Option<HilbertDataset>,
    pub negativity: NegativityVerdict,
    pub identities: Vec<IdentityResult>,
    pub overall: Status,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    pub fn identity(&self, name: &str) -> Option<&IdentityResult> {
        self.identities.iter().find(|i| i.name == name)
    }
}

/// `e_0(K) = Σ e_0(J, S/I_i)`.
pub fn e0_additivity_check(
    inst: &ProblemInstance,
    fitted_e0: &BigInt,
    component_values: &[Vec<(u32, BigInt)>],
) -> Result<IdentityResult> {
    let mut parts = Vec::new();
    for values in component_values {
        parts.push(fit_coefficients(values, inst.d)?.coefficients[0].clone());
    }
    let sum: BigInt = parts.iter().sum();
    let listed: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
    Ok(IdentityResult::from_comparisons(
        "e0_additivity",
        format!("e0(K) vs sum of e0(J, S/I_i) = {}", listed.join(" + ")),
        vec![Comparison::new("e0", fitted_e0, &sum)],
    ))
}

/// Fitted `H_J(L, n)` against `-e_1 C(n+d-2, d-1) + ... + (-1)^d e_d + λ(L)`.
pub fn verify_part1(
    inst: &ProblemInstance,
    k: &HilbertDataset,
    l: &HilbertDataset,
    lambda_l: &BigInt,
) -> IdentityResult {
    let d = inst.d;
    let rhs = |n: i64| -> BigInt {
        let mut acc = lambda_l.clone();
        for i in 1..=d {
            let term = &k.coefficients[i] * binomial(n + d as i64 - 1 - i as i64, (d - i) as i64);
            if i % 2 == 1 {
                acc -= term;
            } else {
                acc += term;
            }
        }
        acc
    };
    let from = k.stabilization_index.max(l.stabilization_index);
    let mut comparisons: Vec<Comparison> = (from..=inst.max_power())
        .map(|n| Comparison::new(format!("n={n}"), &l.polynomial_at(n as i64), &rhs(n as i64)))
        .collect();
    // coefficientwise: f_j = -e_{j+1}, and the constant picks up (-1)^{d-1} λ(L)
    for jdx in 0..d {
        let mut expected = -&k.coefficients[jdx + 1];
        if jdx == d - 1 {
            if (d - 1).is_multiple_of(2) {
                expected += lambda_l;
            } else {
                expected -= lambda_l;
            }
        }
        comparisons.push(Comparison::new(
            format!("coefficient {jdx}"),
            &l.coefficients[jdx],
            &expected,
        ));
    }
    IdentityResult::from_comparisons(
        "part1",
        format!("H_J(L,n) polynomial vs coefficients of K, n >= {from}"),
        comparisons,
    )
}

/// `e_i(K) = (-1)^i λ(L)` for `1 ≤ i < d`, `e_d(K) = 0`, and the closed form
/// of `P(K, n)` at every recorded `n ≥ n_0`.
pub fn verify_part2(
    inst: &ProblemInstance,
    k: &HilbertDataset,
    lambda_l: &BigInt,
) -> IdentityResult {
    let d = inst.d;
    let mut comparisons = Vec::new();
    for i in 1..d {
        let expected = if i % 2 == 0 {
            lambda_l.clone()
        } else {
            -lambda_l
        };
        comparisons.push(Comparison::new(
            format!("e{i}"),
            &k.coefficients[i],
            &expected,
        ));
    }
    comparisons.push(Comparison::new(
        format!("e{d}"),
        &k.coefficients[d],
        &BigInt::zero(),
    ));
    let closed = |n: i64| -> BigInt {
        let mut acc = k.e(0) * binomial(n + d as i64 - 1, d as i64);
        for i in 1..d {
            acc += lambda_l * binomial(n + d as i64 - 1 - i as i64, (d - i) as i64);
        }
        acc
    };
    for (n, h) in k.tail(k.stabilization_index) {
        comparisons.push(Comparison::new(format!("n={n}"), h, &closed(n as i64)));
    }
    IdentityResult::from_comparisons(
        "part2",
        "coefficients and closed form of P(K,n)".into(),
        comparisons,
    )
}

/// For `g ≥ 2` the ring is not Cohen-Macaulay and `e_1 < 0` is expected; for
/// a single component the sign must match the Cohen-Macaulay test.
pub fn negativity_check(inst: &ProblemInstance, k: &HilbertDataset) -> NegativityVerdict {
    let e1 = k.e(1).clone();
    let colength = &k.values[&1];
    let cm = cm_test(k.e(0), colength);
    let (expected, consistent) = if inst.g() >= 2 {
        ("e1 < 0".to_string(), e1.is_negative())
    } else if cm.cohen_macaulay {
        ("e1 = 0".to_string(), e1.is_zero())
    } else {
        ("e1 < 0".to_string(), e1.is_negative())
    };
    NegativityVerdict {
        expected,
        chern_sign: chern_sign(&e1),
        e1,
        consistent,
        colength_bound_holds: colength >= k.e(0),
        cm,
    }
}

fn finite_difference_identity(k: &HilbertDataset) -> IdentityResult {
    let tail: Vec<BigInt> = k
        .tail(k.stabilization_index)
        .map(|(_, h)| h.clone())
        .collect();
    if tail.len() < k.d + 2 {
        return IdentityResult::not_applicable(
            "finite_differences",
            format!("{} values past n0, need {}", tail.len(), k.d + 2),
        );
    }
    let zero = BigInt::zero();
    let comparisons = forward_difference(&tail, k.d + 1)
        .iter()
        .enumerate()
        .map(|(i, v)| {
            Comparison::new(
                format!("n={}", k.stabilization_index as usize + i),
                v,
                &zero,
            )
        })
        .collect();
    IdentityResult::from_comparisons(
        "finite_differences",
        format!("order {} differences of H(K,n) for n >= n0", k.d + 1),
        comparisons,
    )
}

/// Runs every applicable check. Hypothesis failures are recorded in the
/// report but do not enter the overall verdict; the caller decides whether
/// to proceed without them.
pub fn verify(inst: &ProblemInstance) -> Result<VerificationReport> {
    let hypotheses = check_hypotheses(inst);
    let model = build_l_with_core(&inst.ideals, inst.core.clone())?;
    let lambda_l = model.lambda().clone();
    let ann = annihilates(&inst.j, &model)?;
    let rows = power_rows(inst, &model)?;

    let k = HilbertDataset::fit(
        inst.d,
        rows.iter().map(|r| (r.n, r.quotient.clone())).collect(),
    )?;
    let component_values: Vec<Vec<(u32, BigInt)>> = (0..inst.g())
        .map(|i| {
            rows.iter()
                .map(|r| (r.n, r.components[i].clone()))
                .collect()
        })
        .collect();

    let mut identities = vec![e0_additivity_check(inst, k.e(0), &component_values)?];

    identities.push(if ann {
        IdentityResult::from_comparisons(
            "lemma_ko_equivalence",
            "Tor_1 by alternating lengths vs closed form".into(),
            rows.iter()
                .map(|r| {
                    Comparison::new(
                        format!("n={}", r.n),
                        &r.tor1(),
                        &tor1_closed_form(r.n, inst.d as u32, &lambda_l),
                    )
                })
                .collect(),
        )
    } else {
        IdentityResult::not_applicable("lemma_ko_equivalence", "J does not annihilate L")
    });

    let mut hilbert_l = None;
    if inst.g() == 1 {
        identities.push(IdentityResult {
            name: "part1",
            status: Status::Pass,
            message: "L = 0, both sides vanish".into(),
            comparisons: Vec::new(),
        });
    } else if inst.d < 2 {
        identities.push(IdentityResult::not_applicable("part1", "requires d >= 2"));
    } else {
        let l = HilbertDataset::fit(inst.d - 1, rows.iter().map(|r| (r.n, r.tor1())).collect())?;
        identities.push(verify_part1(inst, &k, &l, &lambda_l));
        hilbert_l = Some(l);
    }

    identities.push(if inst.g() < 2 || inst.d < 2 {
        IdentityResult::not_applicable("part2", "requires g >= 2 and d >= 2")
    } else if !ann {
        IdentityResult::not_applicable("part2", "part 2 not applicable: J does not annihilate L")
    } else {
        verify_part2(inst, &k, &lambda_l)
    });

    identities.push(finite_difference_identity(&k));

    let negativity = negativity_check(inst, &k);
    identities.push(IdentityResult {
        name: "negativity",
        status: if negativity.consistent {
            Status::Pass
        } else {
            Status::Fail
        },
        message: format!("expected {}, e1 = {}", negativity.expected, negativity.e1),
        comparisons: Vec::new(),
    });

    identities.sort_by_key(|i| i.name);
    let overall = if identities.iter().all(|i| i.status != Status::Fail) {
        Status::Pass
    } else {
        Status::Fail
    };
    Ok(VerificationReport {
        hypotheses,
        max_power: inst.max_power(),
        lambda_l,
        top_degree: model.top_degree(),
        annihilates: ann,
        hilbert_k: k,
        hilbert_l,
        negativity,
        identities,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_parse;

    fn instance(vars: &[&str], ideals: &[&[&str]], params: &[&str]) -> ProblemInstance {
        let r = RingContext::grevlex(vars).unwrap();
        let ideals = ideals
            .iter()
            .map(|g| Ideal::parse(&r, g).unwrap())
            .collect();
        let params = params.iter().map(|p| poly_parse(p, &r).unwrap()).collect();
        ProblemInstance::new(&r, ideals, params, None).unwrap()
    }

    fn e1() -> ProblemInstance {
        instance(
            &["x", "y", "z", "w"],
            &[&["x", "y"], &["z", "w"]],
            &["x+z", "y+w"],
        )
    }

    #[test]
    fn hypotheses_on_planes() {
        let h = check_hypotheses(&e1());
        assert!(h.passed(), "{h:?}");
        assert_eq!((h.g, h.d, h.h), (2, 2, 2));
        let single = instance(&["x", "y", "z", "w"], &[&["x", "y"]], &["z", "w"]);
        assert!(check_hypotheses(&single).passed());
    }

    #[test]
    fn hypothesis_witnesses() {
        let bad = instance(
            &["x", "y", "z", "w"],
            &[&["x", "y"], &["x", "z"]],
            &["y+z", "w"],
        );
        let h = check_hypotheses(&bad);
        let c = h.failures().find(|c| c.name == "pairwise_primary").unwrap();
        assert!(c.witness.contains("(1,2)"));
        let not_sop = instance(
            &["x", "y", "z", "w"],
            &[&["x", "y"], &["z", "w"]],
            &["x", "y"],
        );
        let h = check_hypotheses(&not_sop);
        let c = h
            .failures()
            .find(|c| c.name == "system_of_parameters")
            .unwrap();
        assert_eq!(c.witness, "dim S/(core + J) = 2");
    }

    #[test]
    fn planes_report() {
        let report = verify(&e1()).unwrap();
        assert!(report.passed(), "{report:#?}");
        assert_eq!(
            report.hilbert_k.coefficients,
            [2, -1, 0].map(BigInt::from).to_vec()
        );
        for name in ["part1", "part2", "e0_additivity", "lemma_ko_equivalence"] {
            assert_eq!(
                report.identity(name).unwrap().status,
                Status::Pass,
                "{name}"
            );
        }
        assert!(report.negativity.consistent);
        assert!(!report.negativity.cm.cohen_macaulay);
    }

    #[test]
    fn cm_baseline_report() {
        let inst = instance(&["x", "y", "z", "w"], &[&["x", "y"]], &["z", "w"]);
        let report = verify(&inst).unwrap();
        assert!(report.passed());
        assert_eq!(
            report.identity("part2").unwrap().status,
            Status::NotApplicable
        );
        assert!(report.negativity.cm.cohen_macaulay);
        assert_eq!(report.negativity.chern_sign, ChernSign::Zero);
    }

    #[test]
    fn summary() {
        let s = coefficient_summary(&e1()).unwrap();
        assert_eq!(s.e, [2, -1, 0].map(BigInt::from).to_vec());
        assert_eq!(s.lambda_l, BigInt::from(1));
        assert_eq!(s.chern_sign, ChernSign::Negative);
        assert!(!s.cm);
        assert_eq!(e1().max_power(), 8);
    }

    #[test]
    fn instance_errors() {
        let r = RingContext::grevlex(&["x", "y"]).unwrap();
        let i = Ideal::parse(&r, &["x"]).unwrap();
        let one = poly_parse("1", &r).unwrap();
        assert!(ProblemInstance::new(&r, vec![], vec![], None).is_err());
        assert!(ProblemInstance::new(&r, vec![i.clone()], vec![one], None).is_err());
        let y = poly_parse("y", &r).unwrap();
        assert!(ProblemInstance::new(&r, vec![i], vec![y], Some(0)).is_err());
    }
}
