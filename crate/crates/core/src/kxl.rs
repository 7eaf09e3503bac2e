//! The ring `A = Q + x·L[x]`, `L = Q(y)`, and its overring `B = Q[y] + x·L[x]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::RatPoly;

/// Reduced quotient of polynomials in `y` with monic denominator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: RatPoly,
    den: RatPoly,
}

impl RatFunc {
    pub fn new(num: RatPoly, den: RatPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g).expect("gcd divides");
        let den = den.div_exact(&g).expect("gcd divides");
        let lead = den.leading().expect("nonzero").recip();
        Ok(RatFunc { num: num.scale(&lead), den: den.scale(&lead) })
    }

    pub fn zero() -> Self {
        RatFunc { num: RatPoly::zero(), den: RatPoly::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc { num: RatPoly::constant(c), den: RatPoly::one() }
    }

    pub fn poly(p: RatPoly) -> Self {
        RatFunc { num: p, den: RatPoly::one() }
    }

    pub fn y() -> Self {
        Self::poly(RatPoly::var())
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value in `Q`, if the function is constant.
    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.degree() == Some(0) {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        RatFunc::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &RatFunc) -> Result<RatFunc> {
        Ok(self * &o.inv()?)
    }

    /// `y^e` for any integer `e`.
    pub fn y_pow(e: i32) -> RatFunc {
        let p = RatFunc::poly(RatPoly::monomial(BigRational::one(), e.unsigned_abs() as usize));
        if e >= 0 {
            p
        } else {
            p.inv().expect("nonzero")
        }
    }

    fn build(num: RatPoly, den: RatPoly) -> RatFunc {
        RatFunc::new(num, den).expect("nonzero denominator")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return self.num.fmt_in("y", f);
        }
        f.write_str("(")?;
        self.num.fmt_in("y", f)?;
        f.write_str(")/(")?;
        self.den.fmt_in("y", f)?;
        f.write_str(")")
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, o: &RatFunc) -> RatFunc {
        RatFunc::build(&(&self.num * &o.den) + &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, o: &RatFunc) -> RatFunc {
        RatFunc::build(&(&self.num * &o.den) - &(&o.num * &self.den), &self.den * &o.den)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, o: &RatFunc) -> RatFunc {
        RatFunc::build(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

/// Polynomial in `x` over `L`; only nonzero coefficients are stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct KxlElement {
    coeffs: BTreeMap<usize, RatFunc>,
}

impl KxlElement {
    pub fn zero() -> Self {
        KxlElement { coeffs: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, RatFunc::one())
    }

    pub fn x() -> Self {
        Self::monomial(1, RatFunc::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, RatFunc::y())
    }

    /// `c·x^i`
    pub fn monomial(i: usize, c: RatFunc) -> Self {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(i, c);
        }
        KxlElement { coeffs }
    }

    pub fn from_coeffs(items: impl IntoIterator<Item = (usize, RatFunc)>) -> Self {
        items.into_iter().fold(Self::zero(), |acc, (i, c)| &acc + &Self::monomial(i, c))
    }

    pub fn coeff(&self, i: usize) -> RatFunc {
        self.coeffs.get(&i).cloned().unwrap_or_else(RatFunc::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &RatFunc)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// `x`-adic order; `None` for zero.
    pub fn ord_x(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    /// Constant term in `Q`.
    pub fn in_a(&self) -> bool {
        self.coeff(0).as_constant().is_some()
    }

    /// Constant term in `Q[y]`.
    pub fn in_b(&self) -> bool {
        self.coeff(0).is_polynomial()
    }

    /// Quotient in `L[x]` when `c` divides `self` there.
    pub fn div_exact(&self, c: &KxlElement) -> Result<Option<KxlElement>> {
        let dc = c.degree().ok_or(Error::ZeroElement)?;
        let lead_inv = c.coeffs[&dc].inv()?;
        let mut rem = self.clone();
        let mut quot = KxlElement::zero();
        while let Some(dr) = rem.degree() {
            if dr < dc {
                return Ok(None);
            }
            let t = KxlElement::monomial(dr - dc, &rem.coeffs[&dr] * &lead_inv);
            rem = &rem - &(&t * c);
            quot = &quot + &t;
        }
        Ok(Some(quot))
    }

    fn add_term(&mut self, i: usize, c: &RatFunc) {
        let sum = &self.coeff(i) + c;
        if sum.is_zero() {
            self.coeffs.remove(&i);
        } else {
            self.coeffs.insert(i, sum);
        }
    }
}

impl fmt::Display for KxlElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (i, c)) in self.coeffs.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            match i {
                0 => write!(f, "({c})")?,
                1 => write!(f, "x*({c})")?,
                _ => write!(f, "x^{i}*({c})")?,
            }
        }
        Ok(())
    }
}

impl Add for &KxlElement {
    type Output = KxlElement;
    fn add(self, o: &KxlElement) -> KxlElement {
        let mut out = self.clone();
        for (&i, c) in &o.coeffs {
            out.add_term(i, c);
        }
        out
    }
}

impl Sub for &KxlElement {
    type Output = KxlElement;
    fn sub(self, o: &KxlElement) -> KxlElement {
        self + &(-o)
    }
}

impl Mul for &KxlElement {
    type Output = KxlElement;
    fn mul(self, o: &KxlElement) -> KxlElement {
        let mut out = KxlElement::zero();
        for (&i, a) in &self.coeffs {
            for (&j, b) in &o.coeffs {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &KxlElement {
    type Output = KxlElement;
    fn neg(self) -> KxlElement {
        KxlElement { coeffs: self.coeffs.iter().map(|(&i, c)| (i, -c)).collect() }
    }
}

/// Whether `f ∈ cA`.
pub fn in_principal(c: &KxlElement, f: &KxlElement) -> Result<bool> {
    Ok(f.div_exact(c)?.is_some_and(|g| g.in_a()))
}

/// Kind of coefficient drawn when sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffKind {
    Zero,
    Rational,
    RationalTimesY,
    HigherY,
}

impl CoeffKind {
    pub fn label(self) -> &'static str {
        match self {
            CoeffKind::Zero => "0",
            CoeffKind::Rational => "rational",
            CoeffKind::RationalTimesY => "rational*y",
            CoeffKind::HigherY => "higher-y",
        }
    }
}

fn random_rational<R: Rng>(rng: &mut R) -> BigRational {
    loop {
        let n: i64 = rng.random_range(-9..=9);
        if n != 0 {
            let d: i64 = rng.random_range(1..=6);
            return BigRational::new(n.into(), d.into());
        }
    }
}

fn random_ypoly<R: Rng>(rng: &mut R, degree: usize) -> RatPoly {
    let mut coeffs: Vec<BigRational> =
        (0..degree).map(|_| BigRational::from_integer(rng.random_range(-5i64..=5).into())).collect();
    coeffs.push(random_rational(rng));
    RatPoly::new(coeffs)
}

/// Random element of `L` of the given kind.
pub fn random_coeff<R: Rng>(rng: &mut R, kind: CoeffKind) -> RatFunc {
    match kind {
        CoeffKind::Zero => RatFunc::zero(),
        CoeffKind::Rational => RatFunc::constant(random_rational(rng)),
        CoeffKind::RationalTimesY => RatFunc::poly(RatPoly::monomial(random_rational(rng), 1)),
        CoeffKind::HigherY => {
            let shape = rng.random_range(0..3);
            let (nd, dd) = (rng.random_range(2..=3), rng.random_range(0..=2));
            let num = random_ypoly(rng, nd);
            let den = random_ypoly(rng, dd);
            let f = RatFunc::new(num, den).expect("nonzero denominator");
            match shape {
                0 => f,
                1 => f.div(&RatFunc::y()).expect("nonzero"),
                _ => RatFunc::poly(random_ypoly(rng, 2)),
            }
        }
    }
}

fn random_any<R: Rng>(rng: &mut R) -> RatFunc {
    let kind =
        [CoeffKind::Zero, CoeffKind::Rational, CoeffKind::RationalTimesY, CoeffKind::HigherY][rng.random_range(0..4)];
    random_coeff(rng, kind)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub label: String,
    pub samples: usize,
    /// Samples in `yxA ∩ xA`.
    pub first_members: usize,
    /// Samples in `(yx)²A ∩ x²A`.
    pub second_members: usize,
    pub first_counterexamples: usize,
    pub second_counterexamples: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KxlIntersectionReport {
    pub strata: Vec<StratumReport>,
    pub sweep_checked: usize,
    pub sweep_failures: usize,
    pub annotations: Vec<&'static str>,
}

impl KxlIntersectionReport {
    pub fn first_identity_holds(&self) -> bool {
        self.strata.iter().all(|s| s.first_counterexamples == 0)
    }

    pub fn second_identity_holds(&self) -> bool {
        self.strata.iter().all(|s| s.second_counterexamples == 0)
    }

    pub fn passed(&self) -> bool {
        self.first_identity_holds() && self.second_identity_holds() && self.sweep_failures == 0
    }
}

/// Membership in `yxA ∩ xA` and in `(yx)²A ∩ x²A`.
pub fn intersection_memberships(f: &KxlElement) -> Result<(bool, bool)> {
    let x = KxlElement::x();
    let yx = &KxlElement::y() * &x;
    let x2 = &x * &x;
    let yx2 = &yx * &yx;
    let first = in_principal(&yx, f)? && in_principal(&x, f)?;
    let second = in_principal(&yx2, f)? && in_principal(&x2, f)?;
    Ok((first, second))
}

/// Samples each stratum and checks `yxA ∩ xA = x²L[x]` and `(yx)²A ∩ x²A = x³L[x]`.
///
/// A stratum fixes `c₀ = 0` and the kind of `c₁`; the last one also fixes `c₂ = 0`.
/// Higher coefficients up to `degree_bound` (at least 2) are arbitrary.
pub fn sampled_intersection_check(samples: usize, seed: u64, degree_bound: usize) -> Result<KxlIntersectionReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument(String::from("samples must be positive")));
    }
    if degree_bound < 2 {
        return Err(Error::InvalidArgument(String::from("degree bound must be at least 2")));
    }
    let kinds = [CoeffKind::Zero, CoeffKind::Rational, CoeffKind::RationalTimesY, CoeffKind::HigherY];
    let mut strata = Vec::new();
    let mut labels: Vec<(String, Option<CoeffKind>, bool)> =
        kinds.iter().map(|&k| (alloc::format!("c0=0, c1 {}", k.label()), Some(k), false)).collect();
    labels.push((String::from("c0=0, c1=0, c2=0"), None, true));
    labels.push((String::from("c0 rational, c1 any"), None, false));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (idx, (label, c1_kind, kill_c2)) in labels.into_iter().enumerate() {
        let mut st = StratumReport {
            label,
            samples,
            first_members: 0,
            second_members: 0,
            first_counterexamples: 0,
            second_counterexamples: 0,
        };
        let general = idx == kinds.len() + 1;
        for _ in 0..samples {
            let mut items = vec![];
            if general {
                items.push((0, random_coeff(&mut rng, CoeffKind::Rational)));
                items.push((1, random_any(&mut rng)));
            } else {
                items.push((1, random_coeff(&mut rng, c1_kind.unwrap_or(CoeffKind::Zero))));
            }
            let top = rng.random_range(2..=degree_bound);
            for i in 2..=top {
                if !(kill_c2 && i == 2) {
                    items.push((i, random_any(&mut rng)));
                }
            }
            let f = KxlElement::from_coeffs(items);
            let (first, second) = intersection_memberships(&f)?;
            let ord = f.ord_x().unwrap_or(usize::MAX);
            st.first_members += usize::from(first);
            st.second_members += usize::from(second);
            st.first_counterexamples += usize::from(first != (ord >= 2));
            st.second_counterexamples += usize::from(second != (ord >= 3));
        }
        strata.push(st);
    }
    let mut sweep_checked = 0;
    let mut sweep_failures = 0;
    for i in 2..=degree_bound {
        for j in -2..=2 {
            let f = KxlElement::monomial(i, RatFunc::y_pow(j));
            let (first, second) = intersection_memberships(&f)?;
            sweep_checked += 1;
            sweep_failures += usize::from(!first || second != (i >= 3));
        }
    }
    Ok(KxlIntersectionReport {
        strata,
        sweep_checked,
        sweep_failures,
        annotations: vec!["H₁(A,B,B) ≅ L[z]", "Ω_{B/A} ≅ K[y]"],
    })
}
