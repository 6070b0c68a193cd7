use super::*;
use crate::curve::{LinearFunction, WeierstrassCurve};
use crate::exactmath::{int, rat, Rational, Valuation};
use crate::polyring::{Poly, Ring};
use crate::scalar::{parse_qt, Qt};

type C = WeierstrassCurve<Rational>;

fn borel_curve() -> C {
    C::new(int(1), int(0), int(0), int(0), rat(-4, 13)).unwrap()
}

fn serre_curve() -> WeierstrassCurve<Qt> {
    WeierstrassCurve::new(Qt::one(), Qt::zero(), Qt::zero(), Qt::zero(), Qt::x()).unwrap()
}

#[test]
fn chi_y3_of_borel_curve() {
    let expected: Vec<Rational> = vec![
        rat(-6912, 28561),
        rat(576, 2197),
        rat(-16, 169),
        rat(3076, 4563),
        rat(760, 507),
        rat(12, 13),
        rat(-851, 351),
        rat(-1, 3),
        int(1),
    ];
    let m = charpoly_matrix(&borel_curve(), &LinearFunction::y(), 3).unwrap();
    assert_eq!(m.chi, Poly::new(expected));
    let r = charpoly_resultant(&borel_curve(), &LinearFunction::y(), 3).unwrap();
    assert_eq!(r.chi, m.chi);
}

#[test]
fn serre_family_n3_coefficients() {
    let m = charpoly_matrix(&serre_curve(), &LinearFunction::y(), 3).unwrap();
    assert_eq!(m.degree(), 8);
    assert_eq!(m.chi.coeff(6), parse_qt("8t + 1/27").unwrap());
    assert_eq!(m.chi.coeff(0), parse_qt("-27t^4").unwrap());
    let r = charpoly_resultant(&serre_curve(), &LinearFunction::y(), 3).unwrap();
    assert_eq!(r.chi, m.chi);
}

#[test]
fn serre_family_n4_coefficient() {
    let m = charpoly_matrix(&serre_curve(), &LinearFunction::y(), 4).unwrap();
    assert_eq!(m.degree(), 12);
    assert_eq!(m.chi.coeff(10), parse_qt("54t + 1/8").unwrap());
    assert_eq!(m.chi.coeff(0), parse_qt("-19683t^6 - 729/8 t^5 - 1/8 t^4").unwrap());
}

#[test]
fn n2_examples() {
    let short = C::short(int(2), int(-3)).unwrap();
    assert_eq!(charpoly_n2(&short).chi, Poly::from_i64s(&[-3, 2, 0, 1]));
    let serre = charpoly_n2(&serre_curve()).chi;
    assert_eq!(serre, Poly::new(vec![Qt::x(), Qt::zero(), Qt::constant(rat(1, 4)), Qt::one()]));
    let e = C::new(int(0), int(0), int(1), int(0), int(0)).unwrap();
    assert_eq!(charpoly_n2(&e).chi, Poly::new(vec![rat(1, 4), int(0), int(0), int(1)]));
}

#[test]
fn inadmissible_and_small_n() {
    let short = C::short(int(0), int(1)).unwrap();
    assert!(charpoly_matrix(&short, &LinearFunction::y(), 3).is_err());
    assert!(charpoly_resultant(&short, &LinearFunction::y(), 3).is_err());
    assert!(charpoly_matrix(&borel_curve(), &LinearFunction::y(), 2).is_err());
}

/// Closed form of `chi_{x+y,3}` on `y^2 = x^3 + A x + B`, ascending.
fn x_plus_y_closed_form(a: &Rational, b: &Rational) -> Vec<Rational> {
    let p = |k: u32, x: &Rational| Ring::pow(x, k);
    vec![
        rat(-16, 27) * p(6, a) - rat(8, 9) * p(5, a) - int(8) * p(3, a) * p(2, b) + rat(1, 9) * p(4, a)
            - rat(8, 3) * p(3, a) * b
            - int(6) * p(2, a) * p(2, b)
            - int(27) * p(4, b)
            - int(16) * p(3, b),
        rat(-32, 9) * p(4, a) + rat(32, 3) * p(3, a) * b - rat(8, 3) * p(2, a) * b - int(16) * a * p(2, b)
            + int(72) * p(3, b),
        rat(16, 3) * p(4, a) - rat(4, 3) * p(3, a) + rat(40, 3) * p(2, a) * b + int(36) * a * p(2, b)
            + int(16) * p(2, b),
        int(16) * a * b - int(80) * p(2, b),
        rat(8, 3) * p(3, a) + rat(10, 3) * p(2, a) - int(40) * a * b + int(18) * p(2, b),
        rat(-32, 3) * p(2, a) + int(8) * b,
        int(4) * a + int(8) * b,
        int(0),
        int(1),
    ]
}

#[test]
fn short_curve_x_plus_y_formula() {
    for (a, b) in [(0i64, 1i64), (1, 1), (-2, 3), (5, -7)] {
        let e = C::short(int(a), int(b)).unwrap();
        let chi = charpoly_matrix(&e, &LinearFunction::x_plus_y(), 3).unwrap().chi;
        assert_eq!(chi, Poly::new(x_plus_y_closed_form(&int(a), &int(b))), "A={a} B={b}");
        let r = charpoly_resultant(&e, &LinearFunction::x_plus_y(), 3).unwrap();
        assert_eq!(r.chi, chi);
    }
}

#[test]
fn dual_routes_agree_on_small_corpus() {
    let curves = [
        borel_curve(),
        C::new(int(0), int(-1), int(1), int(-10), int(-20)).unwrap(),
        C::new(int(1), int(-1), int(1), int(3), int(-7)).unwrap(),
        C::short(int(-1), int(1)).unwrap(),
    ];
    let us = [
        LinearFunction::y(),
        LinearFunction::x_plus_y(),
        LinearFunction::from_i64(1, 1, 1),
        LinearFunction::new(rat(-2, 3), int(5), rat(1, 2)),
    ];
    for e in &curves {
        for u in &us {
            for n in [3usize, 4] {
                let (m, r) = (charpoly_matrix(e, u, n), charpoly_resultant(e, u, n));
                match (m, r) {
                    (Ok(m), Ok(r)) => {
                        assert_eq!(m.chi, r.chi, "{e:?} {u} n={n}");
                        assert!(m.chi.is_monic());
                        assert_eq!(m.degree(), crate::divpoly::jordan_j2(n as u64) as usize);
                    }
                    (Err(_), Err(_)) => {}
                    other => panic!("routes disagree on admissibility: {other:?}"),
                }
            }
        }
    }
}

#[test]
fn negation_symmetry() {
    for e in [borel_curve(), C::new(int(1), int(-1), int(1), int(3), int(-7)).unwrap()] {
        let star = e.negation_u().unwrap();
        for n in [3usize, 4] {
            let a = charpoly_matrix(&e, &LinearFunction::y(), n).unwrap().chi;
            let b = charpoly_matrix(&e, &star, n).unwrap().chi;
            assert_eq!(a, b);
        }
    }
}

#[test]
fn valuation_examples() {
    let r = charpoly_matrix(&serre_curve(), &LinearFunction::y(), 3).unwrap();
    let ValuationCheck::Checked(p) = valuation_profile(&r, 3).unwrap() else {
        panic!("in regime");
    };
    assert_eq!(p.valuations[6], Valuation::Finite(-3));
    assert_eq!(p.min, Valuation::Finite(-3));
    assert!(p.passes);

    let r = charpoly_matrix(&serre_curve(), &LinearFunction::y(), 4).unwrap();
    let ValuationCheck::Checked(p) = valuation_profile(&r, 2).unwrap() else {
        panic!("in regime");
    };
    assert_eq!(p.min, Valuation::Finite(-3));
    assert!(p.passes);
    let ValuationCheck::Checked(p3) = valuation_profile(&r, 3).unwrap() else {
        panic!("in regime");
    };
    assert_eq!(p3.bound, 0);
    assert!(p3.passes);

    // -4/13 is not 13-integral
    let r = charpoly_matrix(&borel_curve(), &LinearFunction::y(), 3).unwrap();
    assert!(matches!(valuation_profile(&r, 13).unwrap(), ValuationCheck::NotApplicable(_)));
    let r = charpoly_matrix(&borel_curve(), &LinearFunction::from_i64(2, 0, 0), 3).unwrap();
    assert!(matches!(valuation_profile(&r, 3).unwrap(), ValuationCheck::NotApplicable(_)));
}

#[test]
fn scaling_examples() {
    let e = C::short(int(1), int(1)).unwrap();
    let s = scaling_experiment(&e, 5, 1, Method::Matrix).unwrap();
    assert!(s.passes, "{s:?}");
    assert_eq!(s.rows.len(), 9);
    let s = scaling_experiment(&e, 5, 0, Method::Resultant).unwrap();
    assert!(s.passes);
    let e = C::short(int(0), int(1)).unwrap();
    assert!(scaling_experiment(&e, 2, 2, Method::Matrix).unwrap().passes);
    assert!(scaling_experiment(&e, 3, 1, Method::Matrix).is_err());
    assert!(scaling_experiment(&borel_curve(), 5, 1, Method::Matrix).is_err());
}

#[test]
fn numeric_oracle() {
    let e = borel_curve();
    let u = LinearFunction::y();
    let chi = charpoly_matrix(&e, &u, 3).unwrap().chi;
    assert!(numeric_root_check(&e, &u, 3, &chi).unwrap() <= 1e-6);
    let mut bumped = chi.coeffs().to_vec();
    bumped[3] += rat(1, 1000);
    let bumped = Poly::new(bumped);
    assert!(numeric_root_check(&e, &u, 3, &bumped).unwrap() > 1e-6);
}

#[test]
fn numeric_oracle_degree_24() {
    let e = C::new(int(1), int(0), int(0), int(0), int(1)).unwrap();
    let u = LinearFunction::y();
    let chi = charpoly_matrix(&e, &u, 5).unwrap().chi;
    assert_eq!(chi.degree(), Some(24));
    assert!(numeric_root_check(&e, &u, 5, &chi).unwrap() <= 1e-5);
}
