use std::cmp::Ordering;
use std::fmt;
use std::ops::{Div, Mul};

/// The five variables, in the fixed order used by every exponent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A = 0,
    B = 1,
    C = 2,
    Z = 3,
    Q = 4,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::B, Var::C, Var::Z, Var::Q];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Var {
        Var::ALL[i]
    }

    pub fn name(self) -> &'static str {
        ["a", "b", "c", "z", "q"][self as usize]
    }

    pub fn from_name(s: &str) -> Option<Var> {
        match s {
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            "c" => Some(Var::C),
            "z" => Some(Var::Z),
            "q" => Some(Var::Q),
            _ => None,
        }
    }
}

/// Laurent monomial `a^e0 b^e1 c^e2 z^e3 q^e4`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(pub [i32; 5]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; 5]);

    pub fn var(v: Var) -> Monomial {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i32) -> Monomial {
        let mut m = [0; 5];
        m[v.index()] = e;
        Monomial(m)
    }

    pub fn new(a: i32, b: i32, c: i32, z: i32, q: i32) -> Monomial {
        Monomial([a, b, c, z, q])
    }

    pub fn exp(&self, v: Var) -> i32 {
        self.0[v.index()]
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0 == [0; 5]
    }

    pub fn inv(&self) -> Monomial {
        let mut m = self.0;
        m.iter_mut().for_each(|e| *e = -*e);
        Monomial(m)
    }

    pub fn pow(&self, k: i32) -> Monomial {
        let mut m = self.0;
        m.iter_mut().for_each(|e| *e *= k);
        Monomial(m)
    }

    /// Componentwise minimum, the monomial gcd.
    pub fn meet(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(other.0.iter()) {
            *x = (*x).min(*y);
        }
        Monomial(m)
    }

    pub fn join(&self, other: &Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(other.0.iter()) {
            *x = (*x).max(*y);
        }
        Monomial(m)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|&e| e >= 0)
    }

    /// True when `self` divides `other` in the polynomial sense.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(x, y)| x <= y)
    }

    /// Graded-lexicographic comparison: total degree first, then exponents in
    /// the order a, b, c, z, q.
    pub fn grlex_cmp(&self, other: &Monomial) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }

    /// The exponent in `q` picked up when every variable `v` is dilated by `q^{k_v}`.
    pub fn q_shift(&self, k: &[i32; 4]) -> i32 {
        (0..4).map(|i| self.0[i] * k[i]).sum()
    }

    /// Variables other than `q` all have exponent zero.
    pub fn is_q_power(&self) -> bool {
        self.0[..4].iter().all(|&e| e == 0)
    }

    /// Image of the monomial when every variable `v_i` is replaced by the
    /// monomial `images[i]`.
    pub fn substitute(&self, images: &[Monomial; 5]) -> Monomial {
        let mut out = [0i32; 5];
        for (i, &e) in self.0.iter().enumerate() {
            if e != 0 {
                for (o, x) in out.iter_mut().zip(images[i].0.iter()) {
                    *o += e * x;
                }
            }
        }
        Monomial(out)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order used for sorted storage is graded-lex.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.grlex_cmp(other)
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        let mut m = self.0;
        for (x, y) in m.iter_mut().zip(rhs.0.iter()) {
            *x += y;
        }
        Monomial(m)
    }
}

impl Div for Monomial {
    type Output = Monomial;
    fn div(self, rhs: Monomial) -> Monomial {
        self * rhs.inv()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}
