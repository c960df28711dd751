//! Exact series against independent formulas and the numeric evaluator.

use qheine::contiguous::series::FormalSeries;
use qheine::exactalg::{parse_rf, LaurentPoly, Monomial, Rational, RationalFunc, Var};
use qheine::numerics::{phi21, EvalConfig, EvalPoint};

/// Gaussian binomial `[n + j - 1, n]_q` by the Pascal recurrence.
fn gaussian(n: usize, k: usize) -> RationalFunc {
    let mut tab = vec![vec![RationalFunc::zero(); k + 1]; n + 1];
    for (m, row) in tab.iter_mut().enumerate() {
        row[0] = RationalFunc::one();
        if m <= k {
            row[m] = RationalFunc::one();
        }
    }
    for m in 1..=n {
        for i in 1..=k.min(m - 1) {
            let qi = RationalFunc::from_poly(LaurentPoly::monomial(Monomial::var_pow(Var::Q, i as i32)));
            tab[m][i] = &tab[m - 1][i - 1] + &(&qi * &tab[m - 1][i]);
        }
    }
    tab[n][k].clone()
}

#[test]
fn q_binomial_specialization() {
    // With c = b the series is 1/(z;q)_j at a = q^j.
    let s = FormalSeries::phi21(8);
    for j in 1..=3 {
        for n in 0..=8 {
            let c = s.coeff(n).substitute_monomial(Var::C, Monomial::var(Var::B)).unwrap();
            let c = c.substitute_monomial(Var::A, Monomial::var_pow(Var::Q, j)).unwrap();
            let want = gaussian(n + j as usize - 1, n);
            assert_eq!(c.to_rf(), want, "j = {j}, n = {n}");
        }
    }
}

#[test]
fn termination_at_negative_powers() {
    let s = FormalSeries::phi21(6);
    for n in 3..=6 {
        let c = s.coeff(n).substitute_monomial(Var::A, Monomial::var_pow(Var::Q, -2)).unwrap();
        assert!(c.is_zero());
    }
}

#[test]
fn truncated_sum_matches_numeric_value() {
    let vals = ["1/3", "-2/5", "1/7", "1/9", "1/2"];
    let rats: Vec<Rational> = vals.iter().map(|v| parse_rf(v).unwrap().num().as_constant().unwrap()).collect();
    // The truncation error is of order |z|^25 = 9^-25.
    let s = FormalSeries::phi21(24);
    let point = [rats[0].clone(), rats[1].clone(), rats[2].clone(), rats[3].clone(), rats[4].clone()];
    let mut value = Rational::from(0);
    let mut zn = Rational::from(1);
    for n in 0..=24 {
        let c = s.coeff(n).to_rf();
        let cn = &c.num().eval_rational(&point) / &c.den().eval_rational(&point);
        value = &value + &(&cn * &zn);
        zn = &zn * &rats[3];
    }
    let cfg = EvalConfig::default();
    let pt = EvalPoint::new(rats.map_to_complex(cfg.precision));
    let num = phi21(&pt, &cfg).unwrap();
    let approx = qheine::numerics::Complex::from_rational(&value, cfg.precision);
    assert!(num.rel_err(&approx) < 1e-20, "{}", num.rel_err(&approx));
}

trait ToComplex {
    fn map_to_complex(&self, p: usize) -> [qheine::numerics::Complex; 5];
}

impl ToComplex for Vec<Rational> {
    fn map_to_complex(&self, p: usize) -> [qheine::numerics::Complex; 5] {
        std::array::from_fn(|i| qheine::numerics::Complex::from_rational(&self[i], p))
    }
}
