//! Sparse multivariate polynomials over the rationals.
//!
//! Variables are globally interned so polynomials built in different places
//! combine without carrying a context around.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

struct VarTable {
    names: Vec<String>,
    index: HashMap<String, u32>,
}

fn var_table() -> &'static Mutex<VarTable> {
    static TABLE: OnceLock<Mutex<VarTable>> = OnceLock::new();
    TABLE.get_or_init(|| {
        Mutex::new(VarTable {
            names: Vec::new(),
            index: HashMap::new(),
        })
    })
}

/// Interned symbolic parameter name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(u32);

impl Var {
    pub fn new(name: &str) -> Var {
        let mut table = var_table().lock().unwrap();
        if let Some(&id) = table.index.get(name) {
            return Var(id);
        }
        let id = table.names.len() as u32;
        table.names.push(name.to_string());
        table.index.insert(name.to_string(), id);
        Var(id)
    }

    pub fn name(&self) -> String {
        var_table().lock().unwrap().names[self.0 as usize].clone()
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Monomial as a sorted list of (variable, exponent) pairs with positive exponents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono {
    factors: Vec<(Var, u32)>,
}

impl Mono {
    pub fn one() -> Mono {
        Mono { factors: Vec::new() }
    }

    pub fn var(v: Var) -> Mono {
        Mono {
            factors: vec![(v, 1)],
        }
    }

    pub fn var_pow(v: Var, e: u32) -> Mono {
        if e == 0 {
            Mono::one()
        } else {
            Mono {
                factors: vec![(v, e)],
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn exponent(&self, v: Var) -> u32 {
        self.factors
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, e)| *e)
            .unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.factors.iter().map(|(v, _)| *v)
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (va, ea) = self.factors[i];
            let (vb, eb) = other.factors[j];
            match va.cmp(&vb) {
                Ordering::Less => {
                    factors.push((va, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((vb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((va, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Mono { factors }
    }

    /// Componentwise division; `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Mono) -> Option<Mono> {
        let mut factors = Vec::with_capacity(self.factors.len());
        let mut j = 0;
        for &(v, e) in &self.factors {
            let mut rem = e;
            if j < other.factors.len() && other.factors[j].0 < v {
                return None; // divisor has a variable self lacks
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                let eb = other.factors[j].1;
                if eb > e {
                    return None;
                }
                rem = e - eb;
                j += 1;
            }
            if rem > 0 {
                factors.push((v, rem));
            }
        }
        if j < other.factors.len() {
            return None;
        }
        Some(Mono { factors })
    }

    /// Componentwise minimum of exponents.
    pub fn gcd(&self, other: &Mono) -> Mono {
        let mut factors = Vec::new();
        let mut j = 0;
        for &(v, e) in &self.factors {
            while j < other.factors.len() && other.factors[j].0 < v {
                j += 1;
            }
            if j < other.factors.len() && other.factors[j].0 == v {
                factors.push((v, e.min(other.factors[j].1)));
            }
        }
        factors.retain(|&(_, e)| e > 0);
        Mono { factors }
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic order with lower-id variables more significant.
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&(va, ea)), Some(&(vb, eb))) => match va.cmp(&vb) {
                    // the side holding the earlier variable has positive
                    // exponent there while the other has zero
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        match ea.cmp(&eb) {
                            Ordering::Equal => {}
                            ord => return ord,
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

/// Sparse polynomial with `BigRational` coefficients. Zero coefficients are
/// never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::one(), c);
        }
        Poly { terms }
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(Rat::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Rat::one());
        Poly { terms }
    }

    pub fn term(m: Mono, c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::one())
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::one()))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.terms.is_empty() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Mono::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn vars(&self) -> BTreeSet<Var> {
        self.terms.keys().flat_map(|m| m.vars()).collect()
    }

    fn insert(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one();
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Leading term in the global lexicographic order.
    pub fn leading(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dm, dc) = d.leading().unwrap();
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while !rem.is_zero() {
            let (rm, rc) = rem.leading().unwrap();
            let qm = rm.div(dm)?;
            let qc = rc / dc;
            let t = Poly::term(qm, qc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Greatest monomial dividing every term.
    pub fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let mut content = match it.next() {
            Some(m) => m.clone(),
            None => return Mono::one(),
        };
        for m in it {
            if content.is_one() {
                break;
            }
            content = content.gcd(m);
        }
        content
    }

    pub fn div_monomial(&self, m: &Mono) -> Poly {
        if m.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.div(m).expect("monomial content division"), c.clone()))
                .collect(),
        }
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).min().unwrap_or(0)
    }

    /// Substitute a rational value for a variable.
    pub fn subst_value(&self, v: Var, value: &Rat) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Mono::var_pow(v, e)).unwrap();
            let mut factor = Rat::one();
            for _ in 0..e {
                factor *= value;
            }
            out.insert(rest, c * factor);
        }
        out
    }

    /// Substitute a polynomial for a variable.
    pub fn subst_poly(&self, v: Var, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            let rest = m.div(&Mono::var_pow(v, e)).unwrap();
            let piece = Poly::term(rest, c.clone()).mul(&value.pow(e));
            out = out.add(&piece);
        }
        out
    }

    /// Divide every exponent bookkeeping of `v` down by extracting v^k, i.e.
    /// return self / v^k. Caller must ensure v^k divides.
    pub fn shift_var_down(&self, v: Var, k: u32) -> Poly {
        self.div_monomial(&Mono::var_pow(v, k))
    }

    pub fn mul_var_pow(&self, v: Var, k: u32) -> Poly {
        if k == 0 {
            return self.clone();
        }
        let m = Mono::var_pow(v, k);
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (t.mul(&m), c.clone()))
                .collect(),
        }
    }

    pub fn derivative(&self, v: Var) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let rest = m.div(&Mono::var(v)).unwrap();
            out.insert(rest, c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    pub fn eval_f64<F>(&self, env: &F) -> Option<f64>
    where
        F: Fn(Var) -> Option<f64>,
    {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut t = c.to_f64()?;
            for (v, e) in &m.factors {
                let x = env(*v)?;
                t *= x.powi(*e as i32);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Total degree counting only the listed variables.
    pub fn degree_in_set(&self, vars: &BTreeSet<Var>) -> u32 {
        self.terms
            .keys()
            .map(|m| {
                m.factors
                    .iter()
                    .filter(|(v, _)| vars.contains(v))
                    .map(|(_, e)| e)
                    .sum()
            })
            .max()
            .unwrap_or(0)
    }

    /// Scale so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some((_, c)) => {
                let inv = Rat::one() / c.clone();
                self.scale(&inv)
            }
        }
    }
}

/// Coefficients of `p` viewed as univariate in `v`, indexed by exponent.
fn univariate_coeffs(p: &Poly, v: Var) -> BTreeMap<u32, Poly> {
    let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
    for (m, c) in &p.terms {
        let e = m.exponent(v);
        let rest = m.div(&Mono::var_pow(v, e)).unwrap();
        out.entry(e)
            .or_insert_with(Poly::zero)
            .insert(rest, c.clone());
    }
    out.retain(|_, p| !p.is_zero());
    out
}


/// Content (gcd of univariate coefficients) and primitive part w.r.t. `v`.
fn content_and_primitive(p: &Poly, v: Var) -> (Poly, Poly) {
    let coeffs = univariate_coeffs(p, v);
    let mut content = Poly::zero();
    for c in coeffs.values() {
        content = gcd(&content, c);
        if content.is_one() {
            break;
        }
    }
    if content.is_zero() {
        return (Poly::zero(), Poly::zero());
    }
    let pp = p.exact_div(&content).expect("content divides");
    (content, pp)
}

/// Pseudo-remainder of `a` by `b` w.r.t. the main variable `v`.
fn pseudo_rem(a: &Poly, b: &Poly, v: Var) -> Poly {
    let db = b.degree_in(v);
    let b_coeffs = univariate_coeffs(b, v);
    let lc_b = b_coeffs[&db].clone();
    let mut r = a.clone();
    while !r.is_zero() {
        let dr = r.degree_in(v);
        if dr < db {
            break;
        }
        let r_coeffs = univariate_coeffs(&r, v);
        let lc_r = r_coeffs[&dr].clone();
        // r <- lc_b * r - lc_r * v^(dr-db) * b
        r = r.mul(&lc_b).sub(&lc_r.mul_var_pow(v, dr - db).mul(b));
    }
    r
}

/// Multivariate gcd over the rationals via primitive pseudo-remainder
/// sequences. The result is monic in the global term order.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    // strip monomial content first: gcd of contents is immediate
    let ca = a.monomial_content();
    let cb = b.monomial_content();
    let cg = ca.gcd(&cb);
    let a = a.div_monomial(&ca);
    let b = b.div_monomial(&cb);

    let vars: BTreeSet<Var> = a.vars().union(&b.vars()).cloned().collect();
    let g = match vars.iter().next_back() {
        None => Poly::one(), // both constants: units
        Some(&v) => {
            let (cont_a, pp_a) = content_and_primitive(&a, v);
            let (cont_b, pp_b) = content_and_primitive(&b, v);
            let cont_g = gcd(&cont_a, &cont_b);
            let (mut r0, mut r1) = if pp_a.degree_in(v) >= pp_b.degree_in(v) {
                (pp_a, pp_b)
            } else {
                (pp_b, pp_a)
            };
            while !r1.is_zero() {
                let r = pseudo_rem(&r0, &r1, v);
                r0 = r1;
                r1 = if r.is_zero() {
                    Poly::zero()
                } else {
                    let (_, pp) = content_and_primitive(&r, v);
                    pp
                };
            }
            let (_, pp_g) = content_and_primitive(&r0, v);
            cont_g.mul(&pp_g)
        }
    };
    Poly::term(cg, Rat::one()).mul(&g).monic()
}

/// Common denominator of all coefficients: scaling by it clears the
/// fractions for display.
pub fn integer_normal_scale(polys: &[&Poly]) -> BigInt {
    use num_integer::Integer;
    let mut lcm = BigInt::one();
    for p in polys {
        for (_, c) in p.terms() {
            lcm = lcm.lcm(c.denom());
        }
    }
    lcm
}

pub fn fmt_rat(c: &Rat) -> String {
    if c.denom().is_one() {
        format!("{}", c.numer())
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rat(&abs))?;
            } else {
                if !abs.is_one() {
                    write!(f, "{}*", fmt_rat(&abs))?;
                }
                let mut firstv = true;
                for (v, e) in &m.factors {
                    if !firstv {
                        write!(f, "*")?;
                    }
                    firstv = false;
                    if *e == 1 {
                        write!(f, "{}", v)?;
                    } else {
                        write!(f, "{}^{}", v, e)?;
                    }
                }
            }
        }
        Ok(())
    }
}
