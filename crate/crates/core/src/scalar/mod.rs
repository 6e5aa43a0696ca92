//! Exact scalars: rational functions in named real parameters with rational
//! coefficients. All algebraic layers of the crate are built on these; floats
//! only appear in the group-level numeric layer.

mod parse;
mod poly;

pub use parse::parse_scalar;
pub use poly::{fmt_rat, gcd as poly_gcd, Mono, Poly, Rat, Var};

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational function `num/den`. The denominator is a nonzero polynomial;
/// representation is kept reduced (gcd cancelled, denominator monic), which
/// makes structural equality canonical. Equality is nevertheless implemented
/// by cross multiplication so it never depends on reduction quality.
#[derive(Debug, Clone)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Scalar {
        Scalar {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar {
            num: Poly::from_int(n),
            den: Poly::one(),
        }
    }

    pub fn from_rat(num: i64, den: i64) -> Scalar {
        assert!(den != 0, "rational constant with zero denominator");
        Scalar {
            num: Poly::constant(Rat::new(BigInt::from(num), BigInt::from(den))),
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> Scalar {
        Scalar {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    /// Convenience: scalar for a named parameter.
    pub fn param(name: &str) -> Scalar {
        Scalar::var(Var::new(name))
    }

    pub fn from_poly(p: Poly) -> Scalar {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn from_ratio(num: Poly, den: Poly) -> Result<Scalar> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = Scalar { num, den };
        s.reduce();
        Ok(s)
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_rat(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn vars(&self) -> std::collections::BTreeSet<Var> {
        let mut vs = self.num.vars();
        vs.extend(self.den.vars());
        vs
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        // cancel common monomial content
        let mc = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !mc.is_one() {
            self.num = self.num.div_monomial(&mc);
            self.den = self.den.div_monomial(&mc);
        }
        if !self.den.is_constant() {
            let g = poly_gcd(&self.num, &self.den);
            if !g.is_constant() {
                self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                self.den = self.den.exact_div(&g).expect("gcd divides denominator");
            }
        }
        // monic denominator pins the representation
        let lc = self.den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = Rat::one() / lc;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn pow(&self, e: i64) -> Result<Scalar> {
        if e >= 0 {
            Ok(Scalar {
                num: self.num.pow(e as u32),
                den: self.den.pow(e as u32),
            })
        } else {
            if self.is_zero() {
                return Err(Error::DivisionByZero);
            }
            let mut s = Scalar {
                num: self.den.pow((-e) as u32),
                den: self.num.pow((-e) as u32),
            };
            s.reduce();
            Ok(s)
        }
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut s = Scalar {
            num: self.num.mul(&other.den),
            den: self.den.mul(&other.num),
        };
        s.reduce();
        Ok(s)
    }

    /// Substitute a scalar for a parameter; errors when the denominator
    /// vanishes identically afterwards.
    pub fn subst(&self, v: Var, value: &Scalar) -> Result<Scalar> {
        // num(den_v-cleared) over common denominators: substitute into num and
        // den separately as rational functions and divide.
        let n = subst_poly_scalar(&self.num, v, value);
        let d = subst_poly_scalar(&self.den, v, value);
        n.checked_div(&d).map_err(|_| Error::VanishingDenominator)
    }

    /// Substitute a rational value.
    pub fn subst_rat(&self, v: Var, value: &Rat) -> Result<Scalar> {
        let n = self.num.subst_value(v, value);
        let d = self.den.subst_value(v, value);
        if d.is_zero() {
            return Err(Error::VanishingDenominator);
        }
        let mut s = Scalar { num: n, den: d };
        s.reduce();
        Ok(s)
    }

    pub fn eval_f64<F>(&self, env: &F) -> Result<f64>
    where
        F: Fn(Var) -> Option<f64>,
    {
        let n = self
            .num
            .eval_f64(env)
            .ok_or_else(|| Error::Numeric("unbound parameter in evaluation".into()))?;
        let d = self
            .den
            .eval_f64(env)
            .ok_or_else(|| Error::Numeric("unbound parameter in evaluation".into()))?;
        if d.abs() < 1e-300 {
            return Err(Error::Numeric("denominator vanishes at the point".into()));
        }
        Ok(n / d)
    }

    /// Order in `v` at 0: minimal exponent of `v` in the Laurent sense,
    /// `num`'s order minus `den`'s order. `None` for the zero scalar.
    pub fn order_in(&self, v: Var) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.min_degree_in(v) as i64 - self.den.min_degree_in(v) as i64)
    }

    /// The coefficient of `v^0` in `v^shift * self` at `v -> 0`; errors with
    /// the pole order when the limit diverges.
    pub fn scaled_limit_at_zero(&self, v: Var, shift: i64) -> Result<Scalar> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let a = self.num.min_degree_in(v) as i64;
        let b = self.den.min_degree_in(v) as i64;
        let ord = shift + a - b;
        if ord < 0 {
            return Err(Error::LimitDivergent {
                param: v.name(),
                pole_order: -ord,
            });
        }
        let num1 = self.num.shift_var_down(v, a as u32);
        let den1 = self.den.shift_var_down(v, b as u32);
        if ord > 0 {
            return Ok(Scalar::zero());
        }
        let n0 = num1.subst_value(v, &Rat::zero());
        let d0 = den1.subst_value(v, &Rat::zero());
        debug_assert!(!d0.is_zero());
        let mut s = Scalar { num: n0, den: d0 };
        s.reduce();
        Ok(s)
    }

    /// Parse a rational expression in the given parameters.
    ///
    /// ```
    /// use drinfeld::scalar::{Scalar, Var};
    /// let mu = Var::new("mu");
    /// let s = Scalar::parse("(1 - mu^2)/(2*mu)", &[mu]).unwrap();
    /// assert_eq!(format!("{s}"), "(-mu^2 + 1)/(2*mu)");
    /// ```
    pub fn parse(src: &str, allowed: &[Var]) -> Result<Scalar> {
        parse_scalar(src, allowed)
    }
}

fn subst_poly_scalar(p: &Poly, v: Var, value: &Scalar) -> Scalar {
    // Horner-free expansion: p = sum_e coeff_e(v-free) * v^e
    let deg = p.degree_in(v);
    let mut acc = Scalar::zero();
    let mut power = Scalar::one();
    for e in 0..=deg {
        // coefficient of v^e
        let mut coeff = Poly::zero();
        for (m, c) in p.terms() {
            if m.exponent(v) == e {
                let rest = m.div(&Mono::var_pow(v, e)).unwrap();
                coeff = coeff.add(&Poly::term(rest, c.clone()));
            }
        }
        if !coeff.is_zero() {
            acc = acc + Scalar::from_poly(coeff) * power.clone();
        }
        if e < deg {
            power = power * value.clone();
        }
    }
    acc
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for Scalar {}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut s = Scalar {
            num: self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            den: self.den.mul(&rhs.den),
        };
        s.reduce();
        s
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut s = Scalar {
            num: self.num.mul(&rhs.num),
            den: self.den.mul(&rhs.den),
        };
        s.reduce();
        s
    }
}

impl Mul<Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        self * &rhs
    }
}

impl Mul<&Scalar> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        &self * rhs
    }
}

impl Add<Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        self + &rhs
    }
}

impl Add<&Scalar> for Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        &self + rhs
    }
}

impl Sub<Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        self - &rhs
    }
}

impl Sub<&Scalar> for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        &self - rhs
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("division by zero scalar")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

// Display clears rational coefficients to integers so entries read like
// published formulas, e.g. (mu^2 + 1)/(2*mu).
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let lcm = poly::integer_normal_scale(&[&self.num, &self.den]);
        let s = Rat::from_integer(lcm);
        let n = self.num.scale(&s);
        let d = self.den.scale(&s);
        let n_str = format!("{}", n);
        let d_str = format!("{}", d);
        let n_wrapped = if n.num_terms() > 1 {
            format!("({})", n_str)
        } else {
            n_str
        };
        let d_needs_parens = d.num_terms() > 1
            || d.leading()
                .map(|(m, c)| !m.is_one() && !c.is_one())
                .unwrap_or(false);
        let d_wrapped = if d_needs_parens {
            format!("({})", d_str)
        } else {
            d_str
        };
        write!(f, "{}/{}", n_wrapped, d_wrapped)
    }
}

/// The parameter names used by the built-in catalog, registered in a fixed
/// order so display and serialization are reproducible.
pub fn standard_params() -> Vec<Var> {
    [
        "lambda", "kappa", "alpha", "rho", "a12", "a13", "a23", "mu", "alpha1", "beta1", "alpha2",
        "beta2",
    ]
    .iter()
    .map(|n| Var::new(n))
    .collect()
}
