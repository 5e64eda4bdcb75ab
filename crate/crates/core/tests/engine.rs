mod common;

use chernlab::graded_module::{annihilates, build_l, jn_colength};
use chernlab::hilbert::{fit_coefficients, hilbert_samuel};
use chernlab::ideal::{ideal_intersect, ideal_sum, length_quotient};
use chernlab::resolution::{tor1_closed_form, tor1_via_lengths};
use chernlab::verify::{check_hypotheses, verify, Status};
use chernlab::{Ideal, RingContext};
use common::{ints, problem};
use num_bigint::BigInt;

fn four() -> RingContext {
    RingContext::grevlex(&["x", "y", "z", "w"]).unwrap()
}

#[test]
fn colength_of_planes_plus_parameters() {
    let r = four();
    let core = ideal_intersect(
        &Ideal::parse(&r, &["x", "y"]).unwrap(),
        &Ideal::parse(&r, &["z", "w"]).unwrap(),
    )
    .unwrap();
    let k = ideal_sum(&core, &Ideal::parse(&r, &["x+z", "y+w"]).unwrap()).unwrap();
    assert_eq!(length_quotient(&k).unwrap(), BigInt::from(3));
}

#[test]
fn single_plane_is_a_polynomial_ring() {
    let r = four();
    let i = Ideal::parse(&r, &["x", "y"]).unwrap();
    let j = Ideal::parse(&r, &["z", "w"]).unwrap();
    for n in 1..=5u32 {
        let expected = BigInt::from((n * (n + 1) / 2) as i64);
        assert_eq!(hilbert_samuel(&i, &j, n).unwrap(), expected);
    }
}

#[test]
fn torsion_dimensions_match_series_difference() {
    for name in ["e1", "e2", "e4", "thick_plane"] {
        let inst = problem(name);
        let model = build_l(inst.ideals()).unwrap();
        let mut expected = Vec::new();
        for s in 0..=model.top_degree().unwrap() {
            let total: usize = inst
                .ideals()
                .iter()
                .map(|i| i.quotient_dimension_in_degree(s))
                .sum();
            expected.push(total - inst.core().quotient_dimension_in_degree(s));
        }
        assert_eq!(model.dims(), expected, "{name}");
        let top = model.top_degree().unwrap();
        let above: usize = inst
            .ideals()
            .iter()
            .map(|i| i.quotient_dimension_in_degree(top + 1))
            .sum();
        assert_eq!(above, inst.core().quotient_dimension_in_degree(top + 1));
    }
}

#[test]
fn three_planes_torsion() {
    let inst = problem("e4");
    let model = build_l(inst.ideals()).unwrap();
    assert_eq!(model.dims(), vec![2, 2]);
    assert_eq!(model.lambda(), &BigInt::from(4));
    assert!(!annihilates(inst.parameter_ideal(), &model).unwrap());
}

#[test]
fn variable_actions_commute() {
    for name in ["e4", "thick_plane"] {
        let inst = problem(name);
        let model = build_l(inst.ideals()).unwrap();
        let field = inst.ring().field();
        let r = inst.ring().nvars();
        for s in 0..=model.top_degree().unwrap() {
            for u in 0..r {
                for v in 0..r {
                    let uv = model
                        .variable_map(v, s + 1)
                        .mul(&model.variable_map(u, s), field);
                    let vu = model
                        .variable_map(u, s + 1)
                        .mul(&model.variable_map(v, s), field);
                    assert_eq!(uv, vu, "{name} s={s} u={u} v={v}");
                }
            }
        }
    }
}

#[test]
fn colength_of_torsion_is_monotone() {
    for name in ["e1", "e4", "thick_plane"] {
        let inst = problem(name);
        let model = build_l(inst.ideals()).unwrap();
        let j = inst.parameter_ideal();
        let values: Vec<BigInt> = (0..=4)
            .map(|n| jn_colength(&model, j, n).unwrap())
            .collect();
        assert_eq!(values[0], BigInt::from(0));
        assert!(
            values.windows(2).all(|w| w[0] <= w[1]),
            "{name}: {values:?}"
        );
        let top = model.top_degree().unwrap();
        assert_eq!(&values[(top + 2).min(4) as usize], model.lambda());
    }
}

#[test]
fn tor_routes_on_planes() {
    let inst = problem("e1");
    let model = build_l(inst.ideals()).unwrap();
    let j = inst.parameter_ideal();
    assert_eq!(
        tor1_via_lengths(inst.ideals(), j, &model, 1).unwrap(),
        BigInt::from(2)
    );
    assert_eq!(
        tor1_via_lengths(inst.ideals(), j, &model, 3).unwrap(),
        BigInt::from(4)
    );
    assert_eq!(tor1_closed_form(3, 2, model.lambda()), BigInt::from(4));
}

#[test]
fn component_multiplicities() {
    let inst = problem("thick_plane");
    let j = inst.parameter_ideal();
    let values: Vec<(u32, BigInt)> = (1..=6)
        .map(|n| (n, hilbert_samuel(&inst.ideals()[0], j, n).unwrap()))
        .collect();
    // S/(x, y^2) with parameters z, w^2 on top of y^2 = 0
    assert_eq!(
        fit_coefficients(&values, 2).unwrap().coefficients[0],
        BigInt::from(4)
    );
}

#[test]
fn reports_for_shipped_problems() {
    let e1 = verify(&problem("e1")).unwrap();
    assert!(e1.passed());
    assert_eq!(e1.hilbert_k.coefficients, ints(&[2, -1, 0]));

    let thick = verify(&problem("thick_plane")).unwrap();
    assert!(thick.passed());
    assert_eq!(thick.hilbert_k.coefficients, ints(&[6, -2, 0]));
    assert_eq!(thick.identity("part2").unwrap().status, Status::Pass);

    let e4 = verify(&problem("e4")).unwrap();
    assert!(e4.passed());
    assert_eq!(e4.identity("part2").unwrap().status, Status::NotApplicable);
    assert_eq!(e4.identity("part1").unwrap().status, Status::Pass);
    assert!(e4.negativity.e1 < BigInt::from(0));
}

#[test]
fn failing_hypotheses_are_named() {
    let h = check_hypotheses(&problem("not_sop"));
    let names: Vec<_> = h.failures().map(|c| c.name).collect();
    assert_eq!(names, ["system_of_parameters"]);
}
