//! Multivariate polynomial gcd over the rationals.
//!
//! Recursive content / primitive-part reduction with a primitive
//! pseudo-remainder sequence in one main variable. Before any symbolic work,
//! modular images (random evaluation of all but one variable, univariate
//! Euclid mod a 61-bit prime) give upper bounds on the gcd degree in each
//! variable. A zero bound is a proof that the gcd does not involve that
//! variable, which settles the common coprime case without any PRS.
//!
//! The result is canonical in the Laurent ring: monomial factors dropped,
//! integer coefficients with gcd 1, positive graded-lex leading coefficient.

use super::error::AlgError;
use super::monomial::Var;
use super::poly::LaurentPoly;
use super::rational::{invmod, mulmod, powmod};

const PRIME: u64 = (1u64 << 61) - 1;

/// Deterministic generator for evaluation points. The points only influence
/// speed: every bound derived from them is an upper bound regardless.
struct SplitMix(u64);

impl SplitMix {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn element(&mut self) -> u64 {
        loop {
            let x = self.next() % PRIME;
            if x > 1 {
                return x;
            }
        }
    }
}

/// Greatest common divisor in the Laurent ring, canonicalized.
pub fn poly_gcd(p: &LaurentPoly, q: &LaurentPoly) -> Result<LaurentPoly, AlgError> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => Err(AlgError::GcdOfZeros),
        (true, false) => Ok(q.normalize_unit()),
        (false, true) => Ok(p.normalize_unit()),
        (false, false) => Ok(gcd_free(&p.normalize_unit(), &q.normalize_unit())),
    }
}

/// Gcd of a list of polynomials, zeros ignored; the unit polynomial when all are zero.
pub fn poly_gcd_many<'a, I: IntoIterator<Item = &'a LaurentPoly>>(polys: I) -> LaurentPoly {
    let mut items: Vec<LaurentPoly> = polys.into_iter().filter(|p| !p.is_zero()).map(|p| p.normalize_unit()).collect();
    if items.is_empty() {
        return LaurentPoly::one();
    }
    items.sort_by_key(|p| p.len());
    let mut g = items[0].clone();
    for p in &items[1..] {
        if g.is_one() {
            break;
        }
        g = gcd_free(&g, p);
    }
    g
}

/// Least common multiple, canonicalized.
pub fn poly_lcm(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    let p = p.normalize_unit();
    let q = q.normalize_unit();
    let g = gcd_free(&p, &q);
    if g.is_one() {
        return (&p * &q).normalize_unit();
    }
    let pq = p.div_exact(&g).expect("gcd divides its argument");
    (&pq * &q).normalize_unit()
}

fn vars_of(p: &LaurentPoly) -> [bool; 5] {
    let mut out = [false; 5];
    for (m, _) in p.terms() {
        for (o, &e) in out.iter_mut().zip(m.0.iter()) {
            *o |= e != 0;
        }
    }
    out
}

/// Both arguments nonzero, monomial-free and primitive.
fn gcd_free(p: &LaurentPoly, q: &LaurentPoly) -> LaurentPoly {
    if p.is_constant() || q.is_constant() {
        return LaurentPoly::one();
    }
    if p == q {
        return p.clone();
    }
    let vp = vars_of(p);
    let vq = vars_of(q);
    for v in Var::ALL {
        let i = v.index();
        if vp[i] && !vq[i] {
            return gcd_with_coefficients(q, p, v);
        }
        if vq[i] && !vp[i] {
            return gcd_with_coefficients(p, q, v);
        }
    }
    let bounds = modular_degree_bounds(p, q, &vp);
    let common: Vec<Var> = Var::ALL.iter().copied().filter(|v| vp[v.index()]).collect();
    if common.iter().all(|v| bounds[v.index()] == 0) {
        return LaurentPoly::one();
    }
    // A variable absent from the gcd: the gcd divides every coefficient.
    if let Some(&v) = common.iter().find(|v| bounds[v.index()] == 0) {
        let (_, cp) = p.to_univariate(v);
        let (_, cq) = q.to_univariate(v);
        return poly_gcd_many(cp.iter().chain(cq.iter()));
    }
    // Degree bounds matching one operand exactly: try it as the gcd.
    for (small, big) in [(q, p), (p, q)] {
        if common.iter().all(|v| bounds[v.index()] == small.degree_in(*v)) && big.div_exact(small).is_some() {
            return small.clone();
        }
    }
    let v = *common.iter().min_by_key(|v| (p.degree_in(**v).max(q.degree_in(**v)), v.index())).unwrap();
    let (cp, pp) = content_wrt(p, v);
    let (cq, qq) = content_wrt(q, v);
    let cg = if cp.is_one() || cq.is_one() { LaurentPoly::one() } else { gcd_free(&cp, &cq) };
    let g = primitive_prs(pp, qq, v);
    if cg.is_one() {
        g
    } else {
        (&cg * &g).normalize_unit()
    }
}

/// `gcd(base, p)` where `p` involves `v` and `base` does not.
fn gcd_with_coefficients(base: &LaurentPoly, p: &LaurentPoly, v: Var) -> LaurentPoly {
    let (_, coeffs) = p.to_univariate(v);
    let mut cs: Vec<LaurentPoly> = coeffs.into_iter().filter(|c| !c.is_zero()).collect();
    cs.sort_by_key(|c| c.len());
    let mut g = base.clone();
    for c in cs {
        let c = c.normalize_unit();
        g = gcd_free(&g, &c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Content with respect to `v` (a polynomial free of `v`) and primitive part.
fn content_wrt(p: &LaurentPoly, v: Var) -> (LaurentPoly, LaurentPoly) {
    let (_, coeffs) = p.to_univariate(v);
    let cont = poly_gcd_many(coeffs.iter());
    if cont.is_one() {
        return (cont, p.clone());
    }
    let pp = p.div_exact(&cont).expect("content divides").normalize_unit();
    (cont, pp)
}

fn primitive_prs(a: LaurentPoly, b: LaurentPoly, v: Var) -> LaurentPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            return b.normalize_unit();
        }
        if r.degree_in(v) == 0 {
            return LaurentPoly::one();
        }
        let (_, r) = content_wrt(&r.normalize_unit(), v);
        a = b;
        b = r;
    }
}

/// Pseudo-remainder of `a` by `b` in `v`, up to a factor free of `v`.
fn pseudo_remainder(a: &LaurentPoly, b: &LaurentPoly, v: Var) -> LaurentPoly {
    let (_, bc) = b.to_univariate(v);
    let (_, mut rc) = a.to_univariate(v);
    let db = bc.len() - 1;
    let lb = bc[db].clone();
    while rc.len() > db {
        let dr = rc.len() - 1;
        let lr = rc[dr].clone();
        let shift = dr - db;
        for c in rc.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, x) in bc.iter().enumerate() {
            let t = x * &lr;
            rc[i + shift] = &rc[i + shift] - &t;
        }
        debug_assert!(rc[dr].is_zero());
        while rc.last().map(|c| c.is_zero()).unwrap_or(false) {
            rc.pop();
        }
    }
    LaurentPoly::from_univariate(v, 0, &rc)
}

/// Univariate image of `p` in `v` with the other variables at `point`.
fn image(p: &LaurentPoly, v: Var, point: &[u64; 5]) -> Option<Vec<u64>> {
    let deg = p.degree_in(v) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in p.terms() {
        let mut t = c.mod_prime(PRIME)?;
        for (i, &e) in m.0.iter().enumerate() {
            if i == v.index() || e == 0 {
                continue;
            }
            let base = if e < 0 { invmod(point[i], PRIME) } else { point[i] };
            t = mulmod(t, powmod(base, e.unsigned_abs() as u64, PRIME), PRIME);
        }
        let k = m.exp(v) as usize;
        out[k] = (out[k] + t) % PRIME;
    }
    Some(out)
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn uni_gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a mod b
        let lb_inv = invmod(*b.last().unwrap(), PRIME);
        while a.len() >= b.len() && !a.is_empty() {
            let f = mulmod(*a.last().unwrap(), lb_inv, PRIME);
            let s = a.len() - b.len();
            for (i, &x) in b.iter().enumerate() {
                let t = mulmod(f, x, PRIME);
                a[i + s] = (a[i + s] + PRIME - t) % PRIME;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// Upper bounds on the degree of `gcd(p, q)` in each variable present in both.
fn modular_degree_bounds(p: &LaurentPoly, q: &LaurentPoly, present: &[bool; 5]) -> [i32; 5] {
    let mut rng = SplitMix(0x5EED ^ (p.len() as u64) << 17 ^ q.len() as u64);
    let mut bounds = [0i32; 5];
    for v in Var::ALL {
        if !present[v.index()] {
            continue;
        }
        let dp = p.degree_in(v) as usize;
        let dq = q.degree_in(v) as usize;
        let mut bound = dp.min(dq);
        for _attempt in 0..3 {
            let mut point = [0u64; 5];
            for x in point.iter_mut() {
                *x = rng.element();
            }
            let (Some(ip), Some(iq)) = (image(p, v, &point), image(q, v, &point)) else {
                continue;
            };
            if ip[dp] == 0 || iq[dq] == 0 {
                continue;
            }
            bound = bound.min(uni_gcd_mod(ip, iq));
            break;
        }
        bounds[v.index()] = bound as i32;
    }
    bounds
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse::parse_poly;

    fn p(s: &str) -> LaurentPoly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn monomial_units_are_ignored() {
        assert_eq!(poly_gcd(&p("a*b*z - a"), &p("b*z - 1")).unwrap(), p("b*z - 1"));
    }

    #[test]
    fn coprime_inputs() {
        assert!(poly_gcd(&p("a - 1"), &p("b - 1")).unwrap().is_one());
    }

    #[test]
    fn shared_linear_factor() {
        let g = poly_gcd(&p("(1-a)*(1-c)"), &p("(1-a)*(c-q)")).unwrap();
        assert_eq!(g, p("a - 1"));
        assert!(p("(1-a)*(1-c)").div_exact(&g).is_some());
        assert!(p("(1-a)*(c-q)").div_exact(&g).is_some());
    }

    #[test]
    fn zero_handling() {
        assert!(poly_gcd(&LaurentPoly::zero(), &LaurentPoly::zero()).is_err());
        assert_eq!(poly_gcd(&LaurentPoly::zero(), &p("2*a - 4")).unwrap(), p("a - 2"));
    }

    #[test]
    fn multivariate_nontrivial() {
        let r = p("a*b*z - c*q + 3*a");
        let x = p("(a^2 + b*c - z)*(a*b*z - c*q + 3*a)");
        let y = p("(c - q^2*a)*(a*b*z - c*q + 3*a)^2");
        assert_eq!(poly_gcd(&x, &y).unwrap(), r.normalize_unit());
    }

    #[test]
    fn lcm_of_overlapping() {
        let l = poly_lcm(&p("(a-1)*(b-1)"), &p("(a-1)*(c-1)"));
        assert_eq!(l, p("(a-1)*(b-1)*(c-1)").normalize_unit());
    }
}
