use hilbchar::arith::{int, projective_vars, MultiPoly};
use hilbchar::grobner::{in_ideal, GrobnerConfig};
use hilbchar::reductions::{
    count_sat_bruteforce, him_decide, parse_dimacs, sat_generators, sat_to_ideal, verify_sat, CnfFormula,
};

fn fixture() -> CnfFormula {
    parse_dimacs(include_str!("data/implied.cnf")).unwrap()
}

#[test]
fn fixture_counts() {
    let phi = fixture();
    assert_eq!(count_sat_bruteforce(&phi).unwrap(), 3);
    let r = verify_sat(&phi, &GrobnerConfig::default()).unwrap();
    assert!(r.agree());
    assert_eq!(r.hilbert_polynomial.coeff(0), int(3));
}

#[test]
fn implied_clause_products() {
    // every model has x3 = 1, so (x0 - x3) vanishes on the zero set
    let phi = fixture();
    let ideal = sat_to_ideal(&phi);
    let cfg = GrobnerConfig::default();
    let v = projective_vars(3);
    let x0 = MultiPoly::var(v.clone(), 0);
    let x3 = MultiPoly::var(v.clone(), 3);
    let implied = x0.try_sub(&x3).unwrap();
    for g in [implied.clone(), implied.try_mul(&x0).unwrap(), sat_generators(&phi)[3].clone(), x3.clone()] {
        assert_eq!(him_decide(&ideal, &g, &cfg).unwrap(), in_ideal(&g, &ideal, &cfg).unwrap(), "{g}");
    }
    assert!(!in_ideal(&x3, &ideal, &cfg).unwrap());
}
