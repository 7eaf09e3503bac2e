//! Quadratic orders `O_Δ = Z[ω]`, `ω = (Δ + √Δ)/2`, and their elements.
//!
//! Every order uses the basis `(1, ω)`. Since `ω² = Δ·ω − (Δ² − Δ)/4`, an element
//! `u + vω` is stored as the coordinate pair `(u, v)`.
//!
//! For input and output the order also has a "surd" coordinate `s`: `s = √(Δ/4)` when
//! `Δ ≡ 0 (mod 4)` and `s = √Δ` otherwise. For `Δ = −12` this gives `s = √−3`, so the
//! element `1 + √−3` is written `1+1*s`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `u + vω` in some quadratic order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct OrderElement {
    pub u: BigInt,
    pub v: BigInt,
}

impl OrderElement {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>) -> Self {
        OrderElement { u: u.into(), v: v.into() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        OrderElement::new(1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    pub fn coords(&self) -> [BigInt; 2] {
        [self.u.clone(), self.v.clone()]
    }

    pub fn from_coords(c: &[BigInt]) -> Self {
        OrderElement { u: c[0].clone(), v: c[1].clone() }
    }

    pub fn neg(&self) -> Self {
        OrderElement { u: -&self.u, v: -&self.v }
    }

    pub fn add(&self, o: &Self) -> Self {
        OrderElement { u: &self.u + &o.u, v: &self.v + &o.v }
    }

    pub fn sub(&self, o: &Self) -> Self {
        OrderElement { u: &self.u - &o.u, v: &self.v - &o.v }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        OrderElement { u: &self.u * k, v: &self.v * k }
    }
}

/// `(u + vω)/den` in the quotient field; `den > 0` and `gcd(u, v, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FracElement {
    u: BigInt,
    v: BigInt,
    den: BigInt,
}

impl FracElement {
    pub fn new(u: impl Into<BigInt>, v: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (mut u, mut v, mut den) = (u.into(), v.into(), den.into());
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if den.is_negative() {
            u = -u;
            v = -v;
            den = -den;
        }
        let g = u.gcd(&v).gcd(&den);
        if !g.is_one() {
            u /= &g;
            v /= &g;
            den /= &g;
        }
        Ok(FracElement { u, v, den })
    }

    pub fn u(&self) -> &BigInt {
        &self.u
    }

    pub fn v(&self) -> &BigInt {
        &self.v
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn numerator(&self) -> OrderElement {
        OrderElement { u: self.u.clone(), v: self.v.clone() }
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// The element itself if it lies in the order.
    pub fn as_integral(&self) -> Option<OrderElement> {
        self.den.is_one().then(|| self.numerator())
    }
}

impl From<OrderElement> for FracElement {
    fn from(x: OrderElement) -> Self {
        FracElement { u: x.u, v: x.v, den: BigInt::one() }
    }
}

impl From<&OrderElement> for FracElement {
    fn from(x: &OrderElement) -> Self {
        x.clone().into()
    }
}

/// Classification of a quotient-field element with respect to 2-root closedness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwoRootVerdict {
    /// `x ∈ O`.
    InOrder,
    /// `x² ∈ O` but `x ∉ O`.
    Violation,
    /// Neither `x` nor `x²` lies in `O`.
    NotApplicable,
}

/// The quadratic order of discriminant `Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticOrder {
    disc: BigInt,
    fundamental: BigInt,
    conductor: BigInt,
    /// `N(ω) = (Δ² − Δ)/4`, so that `ω² = Δω − N(ω)`.
    omega_norm: BigInt,
    /// Roots of unity of the order, sorted.
    roots_of_unity: Vec<OrderElement>,
}

impl QuadraticOrder {
    pub fn new(disc: impl Into<BigInt>) -> Result<Self> {
        let disc = disc.into();
        let four = BigInt::from(4);
        let residue = disc.mod_floor(&four);
        if !(residue.is_zero() || residue.is_one()) {
            return Err(Error::InvalidDiscriminant(alloc::format!("{disc} is not 0 or 1 mod 4")));
        }
        if !disc.is_negative() && disc.sqrt().pow(2) == disc {
            return Err(Error::InvalidDiscriminant(alloc::format!("{disc} is a square")));
        }
        let (fundamental, conductor) = split_conductor(&disc);
        let omega_norm = (&disc * &disc - &disc) / &four;
        let mut order = QuadraticOrder { disc, fundamental, conductor, omega_norm, roots_of_unity: Vec::new() };
        order.roots_of_unity = if order.is_imaginary() {
            order.enumerate_by_norm(&BigInt::one())?
        } else {
            vec![OrderElement::new(-1, 0), OrderElement::one()]
        };
        order.roots_of_unity.sort();
        Ok(order)
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn fundamental_disc(&self) -> &BigInt {
        &self.fundamental
    }

    pub fn conductor(&self) -> &BigInt {
        &self.conductor
    }

    /// Maximal orders are exactly the integrally closed ones.
    pub fn is_maximal(&self) -> bool {
        self.conductor.is_one()
    }

    pub fn is_imaginary(&self) -> bool {
        self.disc.is_negative()
    }

    pub fn omega_norm(&self) -> &BigInt {
        &self.omega_norm
    }

    pub fn roots_of_unity(&self) -> &[OrderElement] {
        &self.roots_of_unity
    }

    pub fn omega(&self) -> OrderElement {
        OrderElement::new(0, 1)
    }

    pub fn mul(&self, x: &OrderElement, y: &OrderElement) -> OrderElement {
        let vv = &x.v * &y.v;
        OrderElement { u: &x.u * &y.u - &self.omega_norm * &vv, v: &x.u * &y.v + &x.v * &y.u + &self.disc * vv }
    }

    pub fn conj(&self, x: &OrderElement) -> OrderElement {
        OrderElement { u: &x.u + &self.disc * &x.v, v: -&x.v }
    }

    /// `N(u + vω) = u² + Δuv + N(ω)v²`.
    pub fn norm(&self, x: &OrderElement) -> BigInt {
        &x.u * &x.u + &self.disc * &x.u * &x.v + &self.omega_norm * &x.v * &x.v
    }

    pub fn trace(&self, x: &OrderElement) -> BigInt {
        BigInt::from(2) * &x.u + &self.disc * &x.v
    }

    /// Matrix of multiplication by `x` on `(1, ω)` coordinates.
    pub fn mul_matrix(&self, x: &OrderElement) -> [[BigInt; 2]; 2] {
        [[x.u.clone(), -&self.omega_norm * &x.v], [x.v.clone(), &x.u + &self.disc * &x.v]]
    }

    pub fn frac_mul(&self, x: &FracElement, y: &FracElement) -> FracElement {
        let n = self.mul(&x.numerator(), &y.numerator());
        FracElement::new(n.u, n.v, &x.den * &y.den).expect("nonzero denominator")
    }

    pub fn frac_add(&self, x: &FracElement, y: &FracElement) -> FracElement {
        FracElement::new(&x.u * &y.den + &y.u * &x.den, &x.v * &y.den + &y.v * &x.den, &x.den * &y.den)
            .expect("nonzero denominator")
    }

    /// `1/x = conj(x)/N(x)` scaled by the denominator of `x`.
    pub fn frac_inv(&self, x: &FracElement) -> Result<FracElement> {
        if x.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let num = x.numerator();
        let c = self.conj(&num).scale(&x.den);
        FracElement::new(c.u, c.v, self.norm(&num))
    }

    pub fn frac_div(&self, x: &FracElement, y: &FracElement) -> Result<FracElement> {
        Ok(self.frac_mul(x, &self.frac_inv(y)?))
    }

    /// `a/b` as an element of the quotient field.
    pub fn quotient(&self, a: &OrderElement, b: &OrderElement) -> Result<FracElement> {
        self.frac_div(&a.into(), &b.into())
    }

    pub fn contains(&self, x: &FracElement) -> bool {
        x.den.is_one()
    }

    /// Converts `p + q·s` with integer `p, q` into an order element.
    pub fn from_surd(&self, p: impl Into<BigInt>, q: impl Into<BigInt>) -> OrderElement {
        let (p, q) = (p.into(), q.into());
        if self.disc.is_even() {
            let half = &self.disc / 2;
            OrderElement { u: p - &q * half, v: q }
        } else {
            OrderElement { u: p - &q * &self.disc, v: q * 2 }
        }
    }

    /// Converts `p + q·s` with rational `p, q` into a quotient-field element.
    pub fn frac_from_surd(&self, p: &BigRational, q: &BigRational) -> FracElement {
        let (u, v) = if self.disc.is_even() {
            let half = BigRational::from_integer(&self.disc / 2);
            (p - q * half, q.clone())
        } else {
            let d = BigRational::from_integer(self.disc.clone());
            (p - q * d, q * BigRational::from_integer(BigInt::from(2)))
        };
        let den = u.denom().lcm(v.denom());
        let uu = (u * BigRational::from_integer(den.clone())).to_integer();
        let vv = (v * BigRational::from_integer(den.clone())).to_integer();
        FracElement::new(uu, vv, den).expect("positive denominator")
    }

    /// `(p, q)` with `x = p + q·s`.
    pub fn to_surd(&self, x: &FracElement) -> (BigRational, BigRational) {
        let den = BigRational::from_integer(x.den.clone());
        let u = BigRational::from_integer(x.u.clone());
        let v = BigRational::from_integer(x.v.clone());
        let half_disc = BigRational::new(self.disc.clone(), BigInt::from(2));
        // ω = Δ/2 + s (Δ even) or ω = Δ/2 + s/2 (Δ odd)
        let p = (u + &v * half_disc) / &den;
        let q = if self.disc.is_even() { v / den } else { v / (den * BigInt::from(2)) };
        (p, q)
    }

    /// Text form `p+q*s` accepted back by the element parser.
    pub fn format(&self, x: &FracElement) -> String {
        let (p, q) = self.to_surd(x);
        let mut out = String::new();
        if q.is_zero() {
            let _ = write!(out, "{p}");
            return out;
        }
        if !p.is_zero() {
            let _ = write!(out, "{p}");
            out.push(if q.is_negative() { '-' } else { '+' });
        } else if q.is_negative() {
            out.push('-');
        }
        let aq = q.abs();
        if !aq.is_one() {
            let _ = write!(out, "{aq}*");
        }
        out.push('s');
        out
    }

    pub fn format_element(&self, x: &OrderElement) -> String {
        self.format(&x.into())
    }

    /// Lexicographically smallest `(u, v)` among the root-of-unity multiples of `x`.
    pub fn canonical_associate(&self, x: &OrderElement) -> OrderElement {
        self.roots_of_unity.iter().map(|e| self.mul(e, x)).min().unwrap_or_else(|| x.clone())
    }

    pub fn canonical_frac_associate(&self, x: &FracElement) -> FracElement {
        let n = self.canonical_associate(&x.numerator());
        FracElement { u: n.u, v: n.v, den: x.den.clone() }
    }

    /// All nonzero elements with `N(x) ≤ bound`, each exactly once, sorted by `(N, u, v)`.
    ///
    /// The norm form is positive definite only for `Δ < 0`.
    pub fn enumerate_by_norm(&self, bound: &BigInt) -> Result<Vec<OrderElement>> {
        if !self.is_imaginary() {
            return Err(Error::Unsupported("norm enumeration needs a negative discriminant"));
        }
        if !bound.is_positive() {
            return Ok(Vec::new());
        }
        // 4N = (2u + vΔ)² + |Δ|v²
        let abs_disc = self.disc.abs();
        let four_b = bound * 4;
        let ratio: BigInt = &four_b / &abs_disc;
        let vmax: BigInt = Roots::sqrt(&ratio);
        let mut out: Vec<(BigInt, OrderElement)> = Vec::new();
        let mut v = -vmax.clone();
        while v <= vmax {
            let rest: BigInt = &four_b - &abs_disc * &v * &v;
            if !rest.is_negative() {
                let t: BigInt = Roots::sqrt(&rest);
                let shift = &v * &self.disc;
                let lo = (-&t - &shift).div_ceil(&BigInt::from(2));
                let hi = (&t - &shift).div_floor(&BigInt::from(2));
                let mut u = lo;
                while u <= hi {
                    let x = OrderElement { u: u.clone(), v: v.clone() };
                    let n = self.norm(&x);
                    if n.is_positive() && &n <= bound {
                        out.push((n, x));
                    }
                    u += 1;
                }
            }
            v += 1;
        }
        out.sort();
        Ok(out.into_iter().map(|(_, x)| x).collect())
    }

    /// Canonical associates of the nonzero elements with `N(x) ≤ bound`, sorted by `(N, u, v)`.
    pub fn enumerate_associate_classes(&self, bound: &BigInt) -> Result<Vec<OrderElement>> {
        let all = self.enumerate_by_norm(bound)?;
        let mut seen = BTreeSet::new();
        Ok(all
            .into_iter()
            .filter_map(|x| {
                let c = self.canonical_associate(&x);
                seen.insert(c.clone()).then_some(c)
            })
            .collect())
    }

    pub fn two_root_closed_element(&self, x: &FracElement) -> TwoRootVerdict {
        if self.contains(x) {
            TwoRootVerdict::InOrder
        } else if self.contains(&self.frac_mul(x, x)) {
            TwoRootVerdict::Violation
        } else {
            TwoRootVerdict::NotApplicable
        }
    }

    /// Searches all `a/b` with `N(a), N(b) ≤ bound` for elements outside the order whose
    /// square lies in it. Results are canonical associates, sorted and deduplicated.
    pub fn two_root_scan(&self, bound: &BigInt) -> Result<Vec<FracElement>> {
        if !self.is_imaginary() {
            return Err(Error::Unsupported("2-root scan needs a negative discriminant"));
        }
        let numerators = self.enumerate_associate_classes(bound)?;
        let denominators = self.enumerate_by_norm(bound)?;
        let mut seen = BTreeSet::new();
        for a in &numerators {
            for b in &denominators {
                let x = self.canonical_frac_associate(&self.quotient(a, b)?);
                seen.insert(x);
            }
        }
        Ok(seen.into_iter().filter(|x| self.two_root_closed_element(x) == TwoRootVerdict::Violation).collect())
    }
}

/// Splits `Δ = f²·Δ₀` with `Δ₀` fundamental. Trial division, fine at desk scale.
fn split_conductor(disc: &BigInt) -> (BigInt, BigInt) {
    let four = BigInt::from(4);
    let mut d = disc.clone();
    let mut f = BigInt::one();
    while (&d % &four).is_zero() {
        let q = &d / &four;
        let r = q.mod_floor(&four);
        if r.is_zero() || r.is_one() {
            d = q;
            f *= 2;
        } else {
            break;
        }
    }
    let mut p = BigInt::from(3);
    while &p * &p <= d.abs() {
        let p2 = &p * &p;
        while (&d % &p2).is_zero() {
            d /= &p2;
            f *= &p;
        }
        p += 2;
    }
    (d, f)
}
