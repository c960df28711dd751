//! The matrix group acting on the logarithms of `(a,b,c,z,q)` and its
//! normal subgroup of pure q-dilations.

use std::fmt;
use std::ops::Mul;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::{Monomial, RationalFunc};

/// 5×5 integer matrix with determinant ±1 and bottom row `(0,0,0,0,1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParamMatrix([[i64; 5]; 5]);

fn det5(m: &[[i64; 5]; 5]) -> i128 {
    // Bareiss fraction-free elimination.
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let n = 5;
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

impl ParamMatrix {
    pub const IDENTITY: ParamMatrix =
        ParamMatrix([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]]);

    pub fn new(rows: [[i64; 5]; 5]) -> Result<Self> {
        if rows[4] != [0, 0, 0, 0, 1] {
            return Err(Error::InvalidMatrix(format!("bottom row {:?} is not (0,0,0,0,1)", rows[4])));
        }
        let d = det5(&rows);
        if d.abs() != 1 {
            return Err(Error::InvalidMatrix(format!("determinant {d} is not ±1")));
        }
        Ok(ParamMatrix(rows))
    }

    pub fn from_flat(entries: &[i64]) -> Result<Self> {
        if entries.len() != 25 {
            return Err(Error::InvalidMatrix(format!("expected 25 entries, got {}", entries.len())));
        }
        let mut rows = [[0i64; 5]; 5];
        for (i, x) in entries.iter().enumerate() {
            rows[i / 5][i % 5] = *x;
        }
        Self::new(rows)
    }

    pub fn rows(&self) -> &[[i64; 5]; 5] {
        &self.0
    }

    pub fn flat(&self) -> Vec<i64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::IDENTITY
    }

    /// Heine's substitution `(a,b,c,z) -> (c/b, z, az, b)`.
    pub fn heine() -> Self {
        ParamMatrix([[0, -1, 1, 0, 0], [0, 0, 0, 1, 0], [1, 0, 0, 1, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1]])
    }

    /// Interchange of `a` and `b`.
    pub fn swap_ab() -> Self {
        ParamMatrix([[0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    }

    /// `(a,b,c,z) -> (aq/c, bq/c, q^2/c, z)`, an involution fixing `Z`.
    pub fn second_solution() -> Self {
        ParamMatrix([[1, 0, -1, 0, 1], [0, 1, -1, 0, 1], [0, 0, -1, 0, 2], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]])
    }

    pub fn determinant(&self) -> i64 {
        det5(&self.0) as i64
    }

    /// Exact inverse via the adjugate; the determinant is a unit.
    pub fn inverse(&self) -> ParamMatrix {
        let d = det5(&self.0) as i64;
        let mut inv = [[0i64; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                // cofactor C_ji
                let mut minor = [[0i64; 5]; 5];
                // embed the 4x4 minor into a 5x5 with a trailing 1 for det5 reuse
                let mut r = 0;
                for row in 0..5 {
                    if row == j {
                        continue;
                    }
                    let mut c = 0;
                    for col in 0..5 {
                        if col == i {
                            continue;
                        }
                        minor[r][c] = self.0[row][col];
                        c += 1;
                    }
                    r += 1;
                }
                minor[4] = [0, 0, 0, 0, 1];
                let cof = det5(&minor) as i64 * if (i + j) % 2 == 0 { 1 } else { -1 };
                inv[i][j] = cof * d;
            }
        }
        let out = ParamMatrix(inv);
        debug_assert!((*self * out).is_identity());
        out
    }

    /// Monomial images of the variables under the direct action: variable
    /// `i` goes to the monomial whose exponents are row `i`.
    pub fn variable_images(&self) -> [Monomial; 5] {
        let mut out = [Monomial::ONE; 5];
        for (o, row) in out.iter_mut().zip(self.0.iter()) {
            let mut e = [0i32; 5];
            for (x, y) in e.iter_mut().zip(row.iter()) {
                *x = *y as i32;
            }
            *o = Monomial(e);
        }
        out
    }

    /// The upper-left 4×4 block, acting on shift exponent vectors.
    fn block(&self) -> [[i64; 4]; 4] {
        let mut b = [[0i64; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                b[i][j] = self.0[i][j];
            }
        }
        b
    }

    /// Order in the group, up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let mut p = *self;
        for k in 1..=limit {
            if p.is_identity() {
                return Some(k);
            }
            p = p * *self;
        }
        None
    }
}

impl Mul for ParamMatrix {
    type Output = ParamMatrix;
    fn mul(self, rhs: ParamMatrix) -> ParamMatrix {
        let mut out = [[0i64; 5]; 5];
        for i in 0..5 {
            for j in 0..5 {
                out[i][j] = (0..5).map(|k| self.0[i][k] * rhs.0[k][j]).sum();
            }
        }
        ParamMatrix(out)
    }
}

impl fmt::Display for ParamMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.0.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")).collect();
        write!(f, "[{}]", rows.join("; "))
    }
}

impl Serialize for ParamMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.flat().serialize(s)
    }
}

impl<'de> Deserialize<'de> for ParamMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i64>::deserialize(d)?;
        ParamMatrix::from_flat(&v).map_err(serde::de::Error::custom)
    }
}

/// Direct action on a monomial: variable `i` is replaced by row `i` of `m`.
pub fn act_on_monomial(m: &ParamMatrix, x: &Monomial) -> Monomial {
    x.substitute(&m.variable_images())
}

/// Action on functions, `L(f) = f ∘ L^{-1}`.
pub fn act_on_function(m: &ParamMatrix, f: &RationalFunc) -> RationalFunc {
    if m.is_identity() {
        return f.clone();
    }
    f.substitute_unimodular(&m.inverse().variable_images())
}

/// Same action on a bare monomial: `L(x) = x ∘ L^{-1}`.
pub fn act_on_function_monomial(m: &ParamMatrix, x: &Monomial) -> Monomial {
    act_on_monomial(&m.inverse(), x)
}

pub fn mat_inverse(m: &ParamMatrix) -> ParamMatrix {
    m.inverse()
}

/// `M_{k_a,k_b,k_c,k_z}`: the dilation `v -> v q^{k_v}` on functions.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShiftOp(pub [i32; 4]);

impl ShiftOp {
    pub const IDENTITY: ShiftOp = ShiftOp([0; 4]);
    pub const A: ShiftOp = ShiftOp([1, 0, 0, 0]);
    pub const B: ShiftOp = ShiftOp([0, 1, 0, 0]);
    pub const C: ShiftOp = ShiftOp([0, 0, 1, 0]);
    pub const Z: ShiftOp = ShiftOp([0, 0, 0, 1]);

    pub fn new(ka: i32, kb: i32, kc: i32, kz: i32) -> Self {
        ShiftOp([ka, kb, kc, kz])
    }

    pub fn k(&self) -> &[i32; 4] {
        &self.0
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().map(|x| x.abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.0 == [0; 4]
    }

    pub fn inv(&self) -> ShiftOp {
        ShiftOp([-self.0[0], -self.0[1], -self.0[2], -self.0[3]])
    }

    pub fn pow(&self, n: i32) -> ShiftOp {
        ShiftOp([self.0[0] * n, self.0[1] * n, self.0[2] * n, self.0[3] * n])
    }

    /// Embedding into the matrix group: identity with last column `(-k, 1)`.
    pub fn to_matrix(&self) -> ParamMatrix {
        let mut m = *ParamMatrix::IDENTITY.rows();
        for i in 0..4 {
            m[i][4] = -(self.0[i] as i64);
        }
        ParamMatrix(m)
    }

    /// Inverse of the embedding; `None` if `m` is not a pure shift.
    pub fn from_matrix(m: &ParamMatrix) -> Option<ShiftOp> {
        let r = m.rows();
        for i in 0..4 {
            for j in 0..4 {
                if r[i][j] != (i == j) as i64 {
                    return None;
                }
            }
        }
        let mut k = [0i32; 4];
        for i in 0..4 {
            k[i] = i32::try_from(-r[i][4]).ok()?;
        }
        Some(ShiftOp(k))
    }

    /// Action on a rational function: `v -> v q^{k_v}`.
    pub fn apply(&self, f: &RationalFunc) -> RationalFunc {
        f.q_dilate(&self.0)
    }

    /// The `q`-exponent a monomial picks up under this shift.
    pub fn q_exponent_of(&self, x: &Monomial) -> i32 {
        x.q_shift(&self.0)
    }

    /// Parses `A^i B^j C^k Z^l` (factors in any order, `^1` optional,
    /// separated by whitespace or `*`), `1`, or `[i,j,k,l]`.
    pub fn parse(s: &str) -> Result<ShiftOp> {
        let err = || Error::ShiftParse(s.to_string());
        let t = s.trim();
        if t.starts_with('[') {
            let inner = t.strip_prefix('[').and_then(|x| x.strip_suffix(']')).ok_or_else(err)?;
            let parts: Vec<i32> = inner
                .split(',')
                .map(|p| p.trim().parse::<i32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| err())?;
            if parts.len() != 4 {
                return Err(err());
            }
            return Ok(ShiftOp([parts[0], parts[1], parts[2], parts[3]]));
        }
        if t == "1" {
            return Ok(ShiftOp::IDENTITY);
        }
        let b = t.as_bytes();
        let mut k = [0i32; 4];
        let mut i = 0;
        let mut seen = false;
        while i < b.len() {
            let c = b[i];
            if c.is_ascii_whitespace() || c == b'*' {
                i += 1;
                continue;
            }
            let idx = match c {
                b'A' => 0,
                b'B' => 1,
                b'C' => 2,
                b'Z' => 3,
                _ => return Err(err()),
            };
            i += 1;
            let mut e = 1i32;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let close = match b.get(i) {
                    Some(b'{') => Some(b'}'),
                    Some(b'(') => Some(b')'),
                    _ => None,
                };
                if close.is_some() {
                    i += 1;
                }
                let start = i;
                if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                e = t[start..i].parse().map_err(|_| err())?;
                if let Some(cl) = close {
                    if b.get(i) != Some(&cl) {
                        return Err(err());
                    }
                    i += 1;
                }
            }
            k[idx] += e;
            seen = true;
        }
        if !seen {
            return Err(err());
        }
        Ok(ShiftOp(k))
    }

    pub fn to_latex(&self) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (name, &e) in ["A", "B", "C", "Z"].iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{{{e}}}")),
            }
        }
        parts.join(" ")
    }
}

impl Mul for ShiftOp {
    type Output = ShiftOp;
    fn mul(self, rhs: ShiftOp) -> ShiftOp {
        ShiftOp([self.0[0] + rhs.0[0], self.0[1] + rhs.0[1], self.0[2] + rhs.0[2], self.0[3] + rhs.0[3]])
    }
}

impl fmt::Display for ShiftOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        for (name, &e) in ["A", "B", "C", "Z"].iter().zip(self.0.iter()) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// The shift whose embedding is `L M_P L^{-1}`.
pub fn conjugate_shift(l: &ParamMatrix, p: &ShiftOp) -> ShiftOp {
    let b = l.block();
    let mut k = [0i32; 4];
    for (i, row) in b.iter().enumerate() {
        k[i] = row.iter().zip(p.0.iter()).map(|(x, y)| *x as i32 * y).sum();
    }
    let out = ShiftOp(k);
    debug_assert_eq!(Some(out), ShiftOp::from_matrix(&(*l * p.to_matrix() * l.inverse())));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::parse_rf;

    #[test]
    fn heine_matrix_substitution() {
        let l = ParamMatrix::heine();
        let img = l.variable_images();
        let names: Vec<String> = img[..4].iter().map(|m| m.to_string()).collect();
        assert_eq!(names, ["b^-1*c", "z", "a*z", "b"]);
        assert_eq!(l.inverse(), l);
        assert_eq!(l * l, ParamMatrix::IDENTITY);
    }

    #[test]
    fn shift_acts_as_q_dilation() {
        let a = ShiftOp::A.to_matrix();
        assert_eq!(act_on_function(&a, &parse_rf("a").unwrap()), parse_rf("a*q").unwrap());
        let m = ShiftOp::new(1, 0, -1, 2).to_matrix();
        let f = parse_rf("a + b + c + z").unwrap();
        assert_eq!(act_on_function(&m, &f), parse_rf("q*a + b + c/q + q^2*z").unwrap());
        assert_eq!(ShiftOp::from_matrix(&m.inverse()), Some(ShiftOp::new(-1, 0, 1, -2)));
    }

    #[test]
    fn conjugation_of_shifts() {
        assert_eq!(conjugate_shift(&ParamMatrix::heine(), &ShiftOp::Z), ShiftOp::new(0, 1, 1, 0));
        assert_eq!(conjugate_shift(&ParamMatrix::swap_ab(), &ShiftOp::A), ShiftOp::B);
        assert_eq!(conjugate_shift(&ParamMatrix::IDENTITY, &ShiftOp::C), ShiftOp::C);
        assert_eq!(conjugate_shift(&ParamMatrix::second_solution(), &ShiftOp::Z), ShiftOp::Z);
    }

    #[test]
    fn validation() {
        let mut bad = *ParamMatrix::IDENTITY.rows();
        bad[4] = [1, 0, 0, 0, 1];
        assert!(ParamMatrix::new(bad).is_err());
        let mut sing = *ParamMatrix::IDENTITY.rows();
        sing[0] = [2, 0, 0, 0, 0];
        assert!(ParamMatrix::new(sing).is_err());
        assert!(ParamMatrix::new(*ParamMatrix::second_solution().rows()).is_ok());
    }

    #[test]
    fn shift_text_forms() {
        assert_eq!(ShiftOp::parse("A^2 B^-1 Z").unwrap(), ShiftOp::new(2, -1, 0, 1));
        assert_eq!(ShiftOp::parse("[1,0,-1,2]").unwrap(), ShiftOp::new(1, 0, -1, 2));
        assert_eq!(ShiftOp::parse("1").unwrap(), ShiftOp::IDENTITY);
        assert_eq!(ShiftOp::parse("Z^{-1}").unwrap(), ShiftOp::new(0, 0, 0, -1));
        assert!(ShiftOp::parse("Q").is_err());
        for s in [ShiftOp::new(2, -1, 0, 1), ShiftOp::IDENTITY, ShiftOp::C] {
            assert_eq!(ShiftOp::parse(&s.to_string()).unwrap(), s);
        }
        let m = ParamMatrix::heine();
        let js = serde_json::to_string(&m).unwrap();
        assert_eq!(serde_json::from_str::<ParamMatrix>(&js).unwrap(), m);
        assert_eq!(serde_json::to_string(&ShiftOp::new(1, 0, -1, 2)).unwrap(), "[1,0,-1,2]");
    }
}
