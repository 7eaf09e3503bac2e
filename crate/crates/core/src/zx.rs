//! Principal ideal calculus in the GCD domain `Z[X]`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{IntPoly, RatPoly};

fn nonzero(p: &IntPoly) -> Result<()> {
    if p.is_zero() {
        Err(Error::ZeroElement)
    } else {
        Ok(())
    }
}

/// Gcd in `Z[X]` with positive leading coefficient.
pub fn poly_gcd(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::BothZero);
    }
    let content = num_integer::Integer::gcd(&a.content(), &b.content());
    let g = a.primitive_part().to_rat().gcd(&b.primitive_part().to_rat());
    let (_, prim) = g.content_and_primitive();
    let scaled: IntPoly = &prim * &IntPoly::new(vec![content]);
    Ok(scaled.normalized())
}

/// Generator of `(bA :_A a)`, namely `b / gcd(a, b)`.
pub fn colon_principal(b: &IntPoly, a: &IntPoly) -> Result<IntPoly> {
    nonzero(a)?;
    nonzero(b)?;
    let g = poly_gcd(a, b)?;
    let q = b.div_exact(&g).ok_or(Error::Inconsistent("gcd does not divide"))?;
    Ok(q.normalized())
}

/// Generator of `aA ∩ bA`, the lcm.
pub fn intersect_principal(a: &IntPoly, b: &IntPoly) -> Result<IntPoly> {
    nonzero(a)?;
    nonzero(b)?;
    let g = poly_gcd(a, b)?;
    let q = (a * b).div_exact(&g).ok_or(Error::Inconsistent("gcd does not divide"))?;
    Ok(q.normalized())
}

/// Compares the generators of `a²A ∩ b²A` and `(aA ∩ bA)²`.
pub fn star_check_gcd(a: &IntPoly, b: &IntPoly) -> Result<bool> {
    let lhs = intersect_principal(&(a * a), &(b * b))?;
    let m = intersect_principal(a, b)?;
    Ok(lhs == (&m * &m).normalized())
}

/// Random polynomial with coefficients `n/d`, `|n| ≤ num_bound`, `1 ≤ d ≤ den_bound`.
pub fn random_rat_poly<R: Rng>(rng: &mut R, degree: usize, num_bound: i64, den_bound: i64) -> RatPoly {
    let coeffs = (0..=degree)
        .map(|_| {
            let n: i64 = rng.random_range(-num_bound..=num_bound);
            let d: i64 = rng.random_range(1..=den_bound.max(1));
            BigRational::new(n.into(), d.into())
        })
        .collect();
    RatPoly::new(coeffs)
}

/// Random nonzero integer polynomial of degree at most `degree`.
pub fn random_int_poly<R: Rng>(rng: &mut R, degree: usize, bound: i64) -> IntPoly {
    loop {
        let deg = rng.random_range(0..=degree);
        let p = IntPoly::new((0..=deg).map(|_| BigInt::from(rng.random_range(-bound..=bound))).collect());
        if !p.is_zero() {
            return p;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContentIdentityReport {
    pub f: RatPoly,
    /// Rational content `c(f)`; `F = c(f)⁻¹·Z`.
    pub content: BigRational,
    /// `f·c(f)⁻¹`, the generator of `fQ[X] ∩ Z[X]`.
    pub generator: IntPoly,
    pub samples: usize,
    pub in_lhs: usize,
    pub in_rhs: usize,
    pub mismatches: usize,
}

impl ContentIdentityReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

/// Samples `h = f·g`, `g ∈ Q[X]`, and compares `h ∈ Z[X]` with `h ∈ f·F·Z[X]`.
///
/// Every third sample takes `g ∈ c(f)⁻¹Z[X]` and every third `g ∈ (c(f)·t)⁻¹Z[X]`
/// for small `t`, so that both sides are hit often.
pub fn content_identity_check(f: &RatPoly, samples: usize, seed: u64) -> Result<ContentIdentityReport> {
    if f.is_zero() {
        return Err(Error::ZeroElement);
    }
    let (content, generator) = f.content_and_primitive();
    let inv = content.recip();
    if f.scale(&inv).to_int().as_ref() != Some(&generator) || generator.content() != BigInt::one() {
        return Err(Error::Inconsistent("content split"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut in_lhs, mut in_rhs, mut mismatches) = (0, 0, 0);
    for k in 0..samples {
        let g = match k % 3 {
            0 => random_rat_poly(&mut rng, 3, 20, 12),
            1 => {
                let t: i64 = rng.random_range(1..=4);
                let base = random_int_poly(&mut rng, 3, 20).to_rat();
                base.scale(&(inv.clone() / BigRational::from_integer(t.into())))
            }
            _ => random_int_poly(&mut rng, 3, 20).to_rat().scale(&inv),
        };
        let h = f * &g;
        let lhs = h.to_int().is_some() && h.div_exact(f).is_some();
        let rhs = h.div_exact(f).is_some_and(|q| q.scale(&content).to_int().is_some());
        in_lhs += usize::from(lhs);
        in_rhs += usize::from(rhs);
        mismatches += usize::from(lhs != rhs);
    }
    Ok(ContentIdentityReport { f: f.clone(), content, generator, samples, in_lhs, in_rhs, mismatches })
}

/// Runs [`content_identity_check`] on `count` seeded random `f` of degree at most 4 with
/// denominators at most 12.
pub fn content_identity_sweep(count: usize, samples: usize, seed: u64) -> Result<Vec<ContentIdentityReport>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let degree = rng.random_range(0..=4);
        let f = random_rat_poly(&mut rng, degree, 20, 12);
        if f.is_zero() {
            continue;
        }
        out.push(content_identity_check(&f, samples, rng.random())?);
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoprimeHomologyReport {
    pub a: IntPoly,
    pub b: IntPoly,
    pub gcd: IntPoly,
    /// `aA ∩ bA = abA`, equivalently `gcd(a, b)` a unit.
    pub hypothesis_holds: bool,
    /// `b / gcd(a, b)`, the element used in the statements.
    pub reduced_b: IntPoly,
    pub statements: Vec<String>,
}

/// Homology statements for `B = A[b/a]` when `aA ∩ bA = abA`.
pub fn coprime_homology_report(a: &IntPoly, b: &IntPoly) -> Result<CoprimeHomologyReport> {
    nonzero(a)?;
    nonzero(b)?;
    let gcd = poly_gcd(a, b)?;
    let lcm = intersect_principal(a, b)?;
    let hypothesis_holds = lcm == (a * b).normalized();
    if hypothesis_holds != gcd.is_unit() {
        return Err(Error::Inconsistent("lcm and gcd disagree"));
    }
    let reduced_b = colon_principal(b, a)?;
    let statements = if hypothesis_holds {
        let r = factor(&reduced_b);
        vec![
            format!("Ω_{{B/A}} ≅ B/{r}B"),
            format!("H₁(A,B,E) ≅ 0:_E {r}"),
            String::from("H₂(A,B,E) = 0"),
            format!("H¹(A,B,E) ≅ E/{r}E"),
            String::from("H²(A,B,E) = 0"),
        ]
    } else {
        vec![format!("hypothesis fails: gcd(a,b) = {gcd} is not a unit; reduced b = {reduced_b}")]
    };
    Ok(CoprimeHomologyReport { a: a.clone(), b: b.clone(), gcd, hypothesis_holds, reduced_b, statements })
}

/// `p` as it appears inside `B/pB`: bare when it is a single term.
fn factor(p: &IntPoly) -> String {
    let s = format!("{p}");
    if s[1..].contains(['+', '-']) {
        format!("({s})")
    } else {
        s
    }
}

/// `A = Z[X]`, `B = A[X/2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZxExample {
    /// Generator of `(2A :_A X)`.
    pub colon: IntPoly,
    /// Generator `c` with `Ω_{B/A} ≅ B/cB`.
    pub omega_ideal: IntPoly,
    pub omega_statement: String,
    pub h1_statement: String,
    pub star_holds: bool,
    pub report: CoprimeHomologyReport,
}

pub fn zx_example() -> Result<ZxExample> {
    let a = IntPoly::from_i64(&[0, 1]);
    let b = IntPoly::from_i64(&[2]);
    let colon = colon_principal(&b, &a)?;
    let report = coprime_homology_report(&a, &b)?;
    let omega_statement = format!("Ω_{{B/A}} ≅ B/({}A:_AX)B ≅ B/{}B", factor(&b), factor(&colon));
    let h1_statement = String::from("H₁(A,B,B) = 0");
    let star_holds = star_check_gcd(&a, &b)?;
    Ok(ZxExample { omega_ideal: colon.clone(), colon, omega_statement, h1_statement, star_holds, report })
}
