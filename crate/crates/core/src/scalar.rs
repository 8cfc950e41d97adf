//! Exact scalars: rationals and elements of cyclotomic fields Q(zeta_n).
//!
//! A [`Cyclo`] stores its coefficients on the power basis `1, zeta, ...,
//! zeta^(phi(n)-1)`, reduced modulo the cyclotomic polynomial `Phi_n`. Values
//! of different orders can be mixed: rationals embed into every field without
//! any reduction work, other mixtures are promoted to the lcm of the orders.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::race::OnceBox;

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn euler_phi(n: u32) -> usize {
    let mut n = n;
    let mut result = n as usize;
    let mut p = 2u32;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p as usize;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n as usize;
    }
    result
}

fn gcd_u32(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u32(b, a % b)
    }
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / gcd_u32(a, b) * b
}

const PHI_CACHE_SIZE: usize = 256;
static PHI_CACHE: [OnceBox<Vec<i64>>; PHI_CACHE_SIZE] = [const { OnceBox::new() }; PHI_CACHE_SIZE];

fn compute_cyclotomic(n: u32) -> Vec<i64> {
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, all divisors monic.
    let mut num: Vec<i64> = vec![0; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let den = cyclotomic_poly(d);
            num = exact_div_monic(&num, &den);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let qlen = num.len() - dn;
    let mut quot = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dn];
        quot[i] = c;
        if c != 0 {
            for (j, &dc) in den.iter().enumerate() {
                rem[i + j] -= c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic order must be positive");
    if (n as usize) < PHI_CACHE_SIZE {
        PHI_CACHE[n as usize]
            .get_or_init(|| alloc::boxed::Box::new(compute_cyclotomic(n)))
            .clone()
    } else {
        compute_cyclotomic(n)
    }
}

fn with_cyclotomic<R>(n: u32, f: impl FnOnce(&[i64]) -> R) -> R {
    if (n as usize) < PHI_CACHE_SIZE {
        let p = PHI_CACHE[n as usize].get_or_init(|| alloc::boxed::Box::new(compute_cyclotomic(n)));
        f(p)
    } else {
        f(&compute_cyclotomic(n))
    }
}

/// Reduce a polynomial in zeta_n (any length) modulo Phi_n.
fn reduce_mod_phi(n: u32, mut poly: Vec<Rational>) -> Vec<Rational> {
    let k = euler_phi(n);
    if poly.len() <= k {
        poly.resize(k, Rational::zero());
        return poly;
    }
    with_cyclotomic(n, |phi| {
        for i in (k..poly.len()).rev() {
            if poly[i].is_zero() {
                continue;
            }
            let c = core::mem::replace(&mut poly[i], Rational::zero());
            for (j, &pc) in phi.iter().enumerate().take(k) {
                if pc != 0 {
                    let t = &c * rat_int(pc);
                    poly[i - k + j] -= t;
                }
            }
        }
    });
    poly.truncate(k);
    poly
}

/// An element of Q(zeta_order).
#[derive(Clone)]
pub struct Cyclo {
    order: u32,
    coeffs: Vec<Rational>,
}

impl Cyclo {
    pub fn zero() -> Self {
        Cyclo { order: 1, coeffs: vec![Rational::zero()] }
    }

    pub fn one() -> Self {
        Cyclo { order: 1, coeffs: vec![Rational::one()] }
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclo { order: 1, coeffs: vec![r] }
    }

    pub fn from_int(i: i64) -> Self {
        Self::from_rational(rat_int(i))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// Builds `sum c_i zeta_n^i`; any length is accepted and reduced mod Phi_n.
    pub fn from_coeffs(order: u32, coeffs: Vec<Rational>) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let coeffs = reduce_mod_phi(order, coeffs);
        Cyclo { order, coeffs }
    }

    /// zeta_n^k for any integer k.
    pub fn zeta_pow(order: u32, k: i64) -> Self {
        let e = k.rem_euclid(order as i64) as usize;
        let mut v = vec![Rational::zero(); e + 1];
        v[e] = Rational::one();
        Self::from_coeffs(order, v)
    }

    pub fn zeta(order: u32) -> Self {
        Self::zeta_pow(order, 1)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Re-express the value in Q(zeta_target). `target` must be a multiple of the
    /// current order unless the value is rational.
    pub fn promote(&self, target: u32) -> Result<Cyclo> {
        if target == self.order {
            return Ok(self.clone());
        }
        if self.is_rational() {
            let mut v = vec![Rational::zero(); euler_phi(target)];
            v[0] = self.coeffs[0].clone();
            return Ok(Cyclo { order: target, coeffs: v });
        }
        if target % self.order != 0 {
            return Err(Error::IncompatibleOrder { left: self.order, right: target });
        }
        let step = (target / self.order) as usize;
        let mut v = vec![Rational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Ok(Cyclo::from_coeffs(target, v))
    }

    /// Smallest-order representation that still equals `self`: rationals drop to order 1.
    pub fn demote_rational(&self) -> Cyclo {
        if self.order != 1 && self.is_rational() {
            Cyclo::from_rational(self.coeffs[0].clone())
        } else {
            self.clone()
        }
    }

    fn common_order(a: &Cyclo, b: &Cyclo) -> u32 {
        if a.order == b.order {
            a.order
        } else if a.coeffs.len() == 1 {
            b.order
        } else if b.coeffs.len() == 1 {
            a.order
        } else {
            lcm_u32(a.order, b.order)
        }
    }

    fn aligned(a: &Cyclo, b: &Cyclo) -> (Cyclo, Cyclo) {
        let n = Self::common_order(a, b);
        (a.promote(n).expect("lcm order"), b.promote(n).expect("lcm order"))
    }

    /// Addition refusing implicit promotion between distinct non-rational orders.
    pub fn try_add(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_compatible(other)?;
        Ok(self + other)
    }

    pub fn try_mul(&self, other: &Cyclo) -> Result<Cyclo> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    fn check_compatible(&self, other: &Cyclo) -> Result<()> {
        if self.order != other.order && !self.is_rational() && !other.is_rational() {
            return Err(Error::IncompatibleOrder { left: self.order, right: other.order });
        }
        Ok(())
    }

    pub fn scale(&self, r: &Rational) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() }
    }

    pub fn inv(&self) -> Result<Cyclo> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.coeffs.len() == 1 {
            return Ok(Cyclo { order: self.order, coeffs: vec![self.coeffs[0].recip()] });
        }
        // Solve M y = e_0 where M is multiplication by self on the power basis.
        let k = self.coeffs.len();
        let mut cols: Vec<Vec<Rational>> = Vec::with_capacity(k);
        let mut cur = self.clone();
        let z = Cyclo::zeta(self.order);
        for _ in 0..k {
            cols.push(cur.coeffs.clone());
            cur = &cur * &z;
        }
        let mut m: Vec<Vec<Rational>> = (0..k)
            .map(|i| {
                let mut row: Vec<Rational> = (0..k).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::one() } else { Rational::zero() });
                row
            })
            .collect();
        for col in 0..k {
            let p = (col..k).find(|&r| !m[r][col].is_zero()).ok_or(Error::DivisionByZero)?;
            m.swap(col, p);
            let piv = m[col][col].clone();
            for x in m[col].iter_mut() {
                *x = &*x / &piv;
            }
            for r in 0..k {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..=k {
                        let t = &f * &m[col][c];
                        m[r][c] -= t;
                    }
                }
            }
        }
        Ok(Cyclo { order: self.order, coeffs: m.into_iter().map(|row| row[k].clone()).collect() })
    }

    pub fn div(&self, other: &Cyclo) -> Result<Cyclo> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u64) -> Cyclo {
        let mut base = self.clone();
        let mut acc = Cyclo::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Galois automorphism zeta -> zeta^k (k coprime to the order).
    pub fn galois(&self, k: u32) -> Cyclo {
        let mut v = vec![Rational::zero(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i as u64 * k as u64 % self.order as u64) as usize;
            v[e] += c;
        }
        Cyclo::from_coeffs(self.order, v)
    }

    /// Field trace down to Q.
    pub fn trace(&self) -> Rational {
        let mut sum = Cyclo::zero();
        for k in 1..=self.order {
            if gcd_u32(k, self.order) == 1 {
                sum = &sum + &self.galois(k);
            }
        }
        sum.coeffs[0].clone()
    }

    /// Sum of absolute values of the power-basis coefficients; bounds |sigma(self)|.
    pub fn l1_norm(&self) -> Rational {
        self.coeffs.iter().map(|c| c.abs()).fold(Rational::zero(), |a, b| a + b)
    }

    fn add_impl(&self, other: &Cyclo, negate: bool) -> Cyclo {
        if self.order == other.order {
            let coeffs = self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect();
            return Cyclo { order: self.order, coeffs };
        }
        if other.coeffs.len() == 1 {
            let mut out = self.clone();
            if negate {
                out.coeffs[0] -= &other.coeffs[0];
            } else {
                out.coeffs[0] += &other.coeffs[0];
            }
            return out;
        }
        if self.coeffs.len() == 1 {
            let mut out = if negate { -other } else { other.clone() };
            out.coeffs[0] += &self.coeffs[0];
            return out;
        }
        let (a, b) = Self::aligned(self, other);
        a.add_impl(&b, negate)
    }

    fn mul_impl(&self, other: &Cyclo) -> Cyclo {
        if other.coeffs.len() == 1 {
            let r = &other.coeffs[0];
            return Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| c * r).collect() };
        }
        if self.coeffs.len() == 1 {
            let r = &self.coeffs[0];
            return Cyclo { order: other.order, coeffs: other.coeffs.iter().map(|c| c * r).collect() };
        }
        if self.order != other.order {
            let (a, b) = Self::aligned(self, other);
            return a.mul_impl(&b);
        }
        let k = self.coeffs.len();
        let mut prod = vec![Rational::zero(); 2 * k - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        Cyclo { order: self.order, coeffs: reduce_mod_phi(self.order, prod) }
    }

    /// `self -= a * b` with fewer temporaries than the operator chain.
    pub fn sub_mul_assign(&mut self, a: &Cyclo, b: &Cyclo) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        if a.coeffs.len() == 1 && b.coeffs.len() == 1 {
            let t = &a.coeffs[0] * &b.coeffs[0];
            self.coeffs[0] -= t;
            return;
        }
        let p = a * b;
        *self -= &p;
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Cyclo) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        if self.coeffs.len() == 1 || other.coeffs.len() == 1 {
            return self.is_rational() && other.is_rational() && self.coeffs[0] == other.coeffs[0];
        }
        let (a, b) = Self::aligned(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Debug for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "({})z{}", c, self.order)?,
                _ => write!(f, "({})z{}^{}", c, self.order, i)?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: &Cyclo) -> Cyclo {
        self.add_impl(rhs, false)
    }
}

impl<'a> Sub<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: &Cyclo) -> Cyclo {
        self.add_impl(rhs, true)
    }
}

impl<'a> Mul<&'a Cyclo> for &'a Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: &Cyclo) -> Cyclo {
        self.mul_impl(rhs)
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        self.add_impl(&rhs, false)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        self.add_impl(&rhs, true)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        self.mul_impl(&rhs)
    }
}

impl Neg for &Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        -&self
    }
}

impl AddAssign<&Cyclo> for Cyclo {
    fn add_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order || rhs.coeffs.len() == 1 {
            if self.order == rhs.order {
                for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                    *a += b;
                }
            } else {
                self.coeffs[0] += &rhs.coeffs[0];
            }
        } else {
            *self = self.add_impl(rhs, false);
        }
    }
}

impl SubAssign<&Cyclo> for Cyclo {
    fn sub_assign(&mut self, rhs: &Cyclo) {
        if self.order == rhs.order || rhs.coeffs.len() == 1 {
            if self.order == rhs.order {
                for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
                    *a -= b;
                }
            } else {
                self.coeffs[0] -= &rhs.coeffs[0];
            }
        } else {
            *self = self.add_impl(rhs, true);
        }
    }
}

impl From<i64> for Cyclo {
    fn from(i: i64) -> Cyclo {
        Cyclo::from_int(i)
    }
}

impl From<Rational> for Cyclo {
    fn from(r: Rational) -> Cyclo {
        Cyclo::from_rational(r)
    }
}

// ---------------------------------------------------------------------------
// Polynomials over Cyclo and root finding

/// Univariate polynomial over Q(zeta_n), coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly {
    coeffs: Vec<Cyclo>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Cyclo>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Cyclo::from_int(c)).collect())
    }

    /// x - root
    pub fn linear(root: &Cyclo) -> Self {
        Poly::new(vec![-root, Cyclo::one()])
    }

    pub fn coeffs(&self) -> &[Cyclo] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Cyclo> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Cyclo) -> Cyclo {
        let mut acc = Cyclo::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn monic(&self) -> Result<Poly> {
        let lead = self.leading().ok_or(Error::DivisionByZero)?.inv()?;
        Ok(Poly::new(self.coeffs.iter().map(|c| c * &lead).collect()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &Cyclo::from_int(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(Vec::new());
        }
        let mut out = vec![Cyclo::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::new(Vec::new()), self.clone()));
        }
        let mut quot = vec![Cyclo::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, d) in divisor.coeffs.iter().enumerate() {
                    rem[i + j].sub_mul_assign(&c, d);
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }
}

pub const DEFAULT_DEGREE_BOUND: usize = 24;
const ENUMERATION_CAP: u128 = 4_000_000;

/// Roots of a polynomial inside a fixed cyclotomic field.
#[derive(Clone, Debug, PartialEq)]
pub struct RootSplit {
    /// Roots listed with multiplicity.
    pub roots: Vec<Cyclo>,
    /// Monic factor without roots in the field (degree 0 when p splits).
    pub remainder: Poly,
}

impl RootSplit {
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }

    pub fn distinct_roots(&self) -> Vec<Cyclo> {
        let mut out: Vec<Cyclo> = Vec::new();
        for r in &self.roots {
            if !out.contains(r) {
                out.push(r.clone());
            }
        }
        out
    }
}

/// All roots of `p` lying in Q(zeta_order), with multiplicity.
pub fn minimal_polynomial_roots(p: &Poly, order: u32, degree_bound: usize) -> Result<RootSplit> {
    let deg = p.degree().ok_or(Error::DivisionByZero)?;
    if deg > degree_bound {
        return Err(Error::DegreeBound { degree: deg, bound: degree_bound });
    }
    for c in p.coeffs() {
        if !c.is_rational() && order % c.order() != 0 {
            return Err(Error::IncompatibleOrder { left: c.order(), right: order });
        }
    }
    let p = p.monic()?;
    if deg == 0 {
        return Ok(RootSplit { roots: Vec::new(), remainder: p });
    }
    let g = p.gcd(&p.derivative())?;
    let (squarefree, _) = p.div_rem(&g)?;

    let mut distinct: Vec<Cyclo> = Vec::new();
    let mut rest = squarefree;
    if rest.coeffs().iter().all(|c| c.is_rational()) {
        for r in rational_roots_squarefree(&rest) {
            rest = rest.div_rem(&Poly::linear(&r))?.0;
            distinct.push(r);
        }
    }
    if euler_phi(order) > 1 && rest.degree().unwrap_or(0) > 0 {
        for r in cyclotomic_roots_squarefree(&rest, order)? {
            if !distinct.contains(&r) {
                distinct.push(r);
            }
        }
    }

    let mut remainder = p;
    let mut roots = Vec::new();
    for r in distinct {
        let lin = Poly::linear(&r);
        loop {
            let (q, rem) = remainder.div_rem(&lin)?;
            if !rem.is_zero() {
                break;
            }
            remainder = q;
            roots.push(r.promote_to_field(order));
        }
    }
    Ok(RootSplit { roots, remainder })
}

impl Cyclo {
    fn promote_to_field(&self, order: u32) -> Cyclo {
        if self.is_rational() {
            self.demote_rational()
        } else {
            self.promote(order).unwrap_or_else(|_| self.clone())
        }
    }
}

fn lcm_denominators<'a>(it: impl Iterator<Item = &'a Rational>) -> BigInt {
    it.fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// Scale a monic polynomial over Q(zeta) so that it becomes monic with integral
/// coefficients: returns (D, q) with q(x) = D^d p(x / D).
fn integral_scaling(p: &Poly) -> (BigInt, Vec<Vec<BigInt>>) {
    let d = p.degree().unwrap();
    let den = lcm_denominators(p.coeffs().iter().flat_map(|c| c.coeffs().iter()));
    let mut out = Vec::with_capacity(d + 1);
    for (i, c) in p.coeffs().iter().enumerate() {
        let scale = num_traits::pow(den.clone(), d - i);
        out.push(
            c.coeffs()
                .iter()
                .map(|r| {
                    let v = r * Rational::from_integer(scale.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect(),
        );
    }
    (den, out)
}

fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut out = Vec::new();
    for i in 2..=limit as usize {
        if sieve[i] {
            out.push(i as u32);
            let mut j = i * i;
            while j <= limit as usize {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

fn eval_int_mod(q: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in q.iter().rev() {
        acc = (acc * x + c).mod_floor(m);
    }
    acc
}

fn poly_mod_prime(q: &[BigInt], l: u64) -> Vec<u64> {
    let lb = BigInt::from(l);
    q.iter().map(|c| c.mod_floor(&lb).to_u64().unwrap()).collect()
}

fn trim_u64(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

fn gcd_mod_prime(a: Vec<u64>, b: Vec<u64>, l: u64) -> Vec<u64> {
    let mut a = trim_u64(a);
    let mut b = trim_u64(b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), l - 2, l);
        while a.len() >= b.len() {
            let c = (*a.last().unwrap() as u128 * inv as u128 % l as u128) as u64;
            let shift = a.len() - b.len();
            for (j, &bc) in b.iter().enumerate() {
                let t = (c as u128 * bc as u128 % l as u128) as u64;
                a[shift + j] = (a[shift + j] + l - t) % l;
            }
            a = trim_u64(a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a
}

/// Rational roots of a squarefree polynomial with rational coefficients, found by
/// p-adic (Hensel) lifting of roots modulo a prime for which the reduction stays
/// squarefree. Complete: every rational root is returned.
fn rational_roots_squarefree(p: &Poly) -> Vec<Cyclo> {
    let mut roots = Vec::new();
    let (den, q) = integral_scaling(p);
    let mut q: Vec<BigInt> = q.into_iter().map(|v| v[0].clone()).collect();
    if q[0].is_zero() {
        roots.push(Cyclo::zero());
        q.remove(0);
    }
    if q.len() <= 1 {
        return roots;
    }
    let bound: BigInt = q.iter().map(|c| c.abs()).max().unwrap() + BigInt::one();
    let dq: Vec<BigInt> = q.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect();
    for l in small_primes(100_000).into_iter().skip(1) {
        let l = l as u64;
        let qm = poly_mod_prime(&q, l);
        let dqm = poly_mod_prime(&dq, l);
        if trim_u64(qm.clone()).len() != q.len() {
            continue;
        }
        if gcd_mod_prime(qm.clone(), dqm.clone(), l).len() != 1 {
            continue;
        }
        let lb = BigInt::from(l);
        let target = &bound * BigInt::from(2);
        for r0 in 0..l {
            let r0b = BigInt::from(r0);
            if !eval_int_mod(&q, &r0b, &lb).is_zero() {
                continue;
            }
            let mut r = r0b;
            let mut m = lb.clone();
            while m <= target {
                m = &m * &m;
                let fv = eval_int_mod(&q, &r, &m);
                let dv = eval_int_mod(&dq, &r, &m);
                let inv = mod_inverse(&dv, &m);
                r = (r - fv * inv).mod_floor(&m);
            }
            let half = &m / BigInt::from(2);
            let cand = if r > half { r - &m } else { r };
            let mut acc = BigInt::zero();
            for c in q.iter().rev() {
                acc = acc * &cand + c;
            }
            if acc.is_zero() {
                roots.push(Cyclo::from_rational(Rational::new(cand, den.clone())));
            }
        }
        return roots;
    }
    unreachable!("no good prime below 100000 for a squarefree polynomial")
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    e.x.mod_floor(m)
}

/// Roots in Q(zeta_order) of a squarefree polynomial, by exhaustive search over
/// the algebraic-integer lattice Z[zeta] inside an exact conjugate bound.
fn cyclotomic_roots_squarefree(p: &Poly, order: u32) -> Result<Vec<Cyclo>> {
    let k = euler_phi(order);
    let p = Poly::new(p.coeffs().iter().map(|c| c.promote(order)).collect::<Result<Vec<_>>>()?);
    let (den, q) = integral_scaling(&p);
    let d = q.len() - 1;

    // |sigma(root)| <= 1 + max_i |sigma(q_i)| <= 1 + max_i ||q_i||_1.
    let mut b = BigInt::zero();
    for c in &q[..d] {
        let s: BigInt = c.iter().map(|x| x.abs()).fold(BigInt::zero(), |a, x| a + x);
        if s > b {
            b = s;
        }
    }
    let bound = b + BigInt::one();

    // Trace matrix T[k][j] = Tr(zeta^(j-k)); c = T^{-1} t with |t_k| <= phi * bound.
    let mut t = vec![vec![Rational::zero(); k]; k];
    for (r, row) in t.iter_mut().enumerate() {
        for (c, x) in row.iter_mut().enumerate() {
            *x = Cyclo::zeta_pow(order, c as i64 - r as i64).trace();
        }
    }
    let tinv = invert_rational(&t);
    let tb = Rational::from_integer(&bound * BigInt::from(k));
    let mut limits = Vec::with_capacity(k);
    let mut count: u128 = 1;
    for row in &tinv {
        let s = row.iter().map(|x| x.abs()).fold(Rational::zero(), |a, x| a + x) * &tb;
        let lim = s.ceil().to_integer().to_i64().unwrap_or(i64::MAX / 4);
        count = count.saturating_mul(2 * lim as u128 + 1);
        limits.push(lim);
    }
    if count > ENUMERATION_CAP {
        return Err(Error::RootSearchLimit { candidates: count });
    }

    let prime: u64 = (1u64 << 61) - 1;
    let phi_poly = cyclotomic_poly(order);
    let qmod: Vec<Vec<u64>> = q.iter().map(|c| poly_mod_prime(c, prime)).collect();
    let mut roots = Vec::new();
    let mut cand = vec![0i64; k];
    for (i, l) in limits.iter().enumerate() {
        cand[i] = -l;
    }
    loop {
        if eval_cyclo_mod(&qmod, &cand, &phi_poly, prime) {
            let coeffs: Vec<Rational> =
                cand.iter().map(|&c| Rational::new(BigInt::from(c), den.clone())).collect();
            let root = Cyclo::from_coeffs(order, coeffs);
            if p.eval(&root).is_zero() {
                roots.push(root);
            }
        }
        let mut i = 0;
        loop {
            if i == k {
                return Ok(roots);
            }
            if cand[i] < limits[i] {
                cand[i] += 1;
                break;
            }
            cand[i] = -limits[i];
            i += 1;
        }
    }
}

fn eval_cyclo_mod(q: &[Vec<u64>], x: &[i64], phi: &[i64], m: u64) -> bool {
    let k = x.len();
    let to_mod = |v: i64| -> u64 { v.rem_euclid(m as i64) as u64 };
    let xm: Vec<u64> = x.iter().map(|&v| to_mod(v)).collect();
    let phim: Vec<u64> = phi.iter().map(|&v| to_mod(v)).collect();
    let mulmod = |a: u64, b: u64| -> u64 { (a as u128 * b as u128 % m as u128) as u64 };
    let mut acc = vec![0u64; k];
    for c in q.iter().rev() {
        // acc = acc * x + c  (mod Phi, mod m)
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &a) in acc.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in xm.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mulmod(a, b)) % m;
            }
        }
        for i in (k..prod.len()).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            for j in 0..k {
                let t = mulmod(c, phim[j]);
                prod[i - k + j] = (prod[i - k + j] + m - t) % m;
            }
        }
        prod.truncate(k);
        for (i, v) in prod.iter_mut().enumerate() {
            if i < c.len() {
                *v = (*v + c[i]) % m;
            }
        }
        acc = prod;
    }
    acc.iter().all(|&v| v == 0)
}

fn invert_rational(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero()).expect("trace form is nondegenerate");
        a.swap(col, p);
        let piv = a[col][col].clone();
        for x in a[col].iter_mut() {
            *x = &*x / &piv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in 0..2 * n {
                    let t = &f * &a[col][c];
                    a[r][c] -= t;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Deterministic total order used when a canonical listing of scalars is needed.
pub fn cmp_cyclo(a: &Cyclo, b: &Cyclo) -> Ordering {
    let n = Cyclo::common_order(a, b);
    let a = a.promote(n).expect("common order");
    let b = b.promote(n).expect("common order");
    for (x, y) in a.coeffs.iter().zip(&b.coeffs) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = Cyclo::zeta(4);
        assert_eq!(&z * &z, Cyclo::from_int(-1));
    }

    #[test]
    fn zeta3_plus_zeta3_squared() {
        let z = Cyclo::zeta(3);
        let z2 = &z * &z;
        assert_eq!(&z + &z2, Cyclo::from_int(-1));
    }

    #[test]
    fn rational_sum() {
        assert_eq!(&Cyclo::from_frac(1, 2) + &Cyclo::from_frac(1, 3), Cyclo::from_frac(5, 6));
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
    }

    #[test]
    fn inverse_of_zero_fails() {
        assert_eq!(Cyclo::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn inverse_in_q_zeta5() {
        let a = &Cyclo::from_int(2) + &Cyclo::zeta(5);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
    }

    #[test]
    fn strict_ops_refuse_mixed_orders() {
        let a = Cyclo::zeta(3);
        let b = Cyclo::zeta(4);
        assert!(matches!(a.try_add(&b), Err(Error::IncompatibleOrder { .. })));
        assert!(a.try_add(&Cyclo::from_int(2)).is_ok());
        // implicit promotion goes through Q(zeta_12)
        let s = &a * &b;
        assert_eq!(s.order(), 12);
        assert_eq!(s, Cyclo::zeta_pow(12, 7));
    }

    #[test]
    fn zeta_order_is_exact() {
        for n in [3u32, 4, 5, 8, 12] {
            let z = Cyclo::zeta(n);
            assert!(z.pow(n as u64).is_one());
            for k in 1..n {
                assert!(!z.pow(k as u64).is_one(), "zeta_{}^{} = 1", n, k);
            }
        }
    }

    #[test]
    fn trace_values() {
        assert_eq!(Cyclo::zeta(3).trace(), rat_int(-1));
        assert_eq!(Cyclo::one().promote(4).unwrap().trace(), rat_int(2));
        assert_eq!(Cyclo::zeta(4).trace(), rat_int(0));
    }

    #[test]
    fn roots_of_x2_plus_1_over_q_zeta4() {
        let p = Poly::from_ints(&[1, 0, 1]);
        let split = minimal_polynomial_roots(&p, 4, DEFAULT_DEGREE_BOUND).unwrap();
        assert!(split.splits());
        assert_eq!(split.roots.len(), 2);
        assert!(split.roots.contains(&Cyclo::zeta(4)));
        assert!(split.roots.contains(&-Cyclo::zeta(4)));
    }

    #[test]
    fn roots_of_x2_minus_x_over_q() {
        let p = Poly::from_ints(&[0, -1, 1]);
        let split = minimal_polynomial_roots(&p, 1, DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(split.roots, vec![Cyclo::zero(), Cyclo::one()]);
    }

    #[test]
    fn x2_x_1_has_no_rational_roots() {
        let p = Poly::from_ints(&[1, 1, 1]);
        let split = minimal_polynomial_roots(&p, 1, DEFAULT_DEGREE_BOUND).unwrap();
        assert!(split.roots.is_empty());
        assert_eq!(split.remainder, p);
        // over Q(zeta_3) the same polynomial splits
        let split3 = minimal_polynomial_roots(&p, 3, DEFAULT_DEGREE_BOUND).unwrap();
        assert!(split3.splits());
        assert!(split3.roots.contains(&Cyclo::zeta(3)));
    }

    #[test]
    fn multiplicities_and_fractions() {
        // (x - 1/2)^2 (x + 3)
        let p = Poly::linear(&Cyclo::from_frac(1, 2))
            .mul(&Poly::linear(&Cyclo::from_frac(1, 2)))
            .mul(&Poly::linear(&Cyclo::from_int(-3)));
        let split = minimal_polynomial_roots(&p, 1, DEFAULT_DEGREE_BOUND).unwrap();
        assert_eq!(split.roots.len(), 3);
        assert!(split.splits());
    }

    #[test]
    fn degree_bound_is_enforced() {
        let mut c = vec![0i64; 30];
        c[29] = 1;
        c[0] = -1;
        let p = Poly::from_ints(&c);
        assert!(matches!(
            minimal_polynomial_roots(&p, 1, DEFAULT_DEGREE_BOUND),
            Err(Error::DegreeBound { degree: 29, bound: 24 })
        ));
    }

    #[test]
    fn cyclotomic_coefficients_roots() {
        // (x - zeta_3)(x - 2 zeta_3^2 + 1/3)
        let a = Cyclo::zeta(3);
        let b = &(&Cyclo::zeta_pow(3, 2) * &Cyclo::from_int(2)) - &Cyclo::from_frac(1, 3);
        let p = Poly::linear(&a).mul(&Poly::linear(&b));
        let split = minimal_polynomial_roots(&p, 3, DEFAULT_DEGREE_BOUND).unwrap();
        assert!(split.splits());
        assert!(split.roots.contains(&a) && split.roots.contains(&b));
    }
}
