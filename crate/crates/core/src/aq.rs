//! Star-condition decisions and the André-Quillen coefficient modules of `B = A[a/b]`
//! for `A` a quadratic order.
//!
//! For an integrally closed `A` and nonzero `a, b ∈ A`:
//!
//! - `Ω_{B/A} ≅ abA/((aA+bA)(aA∩bA)) ⊗_A R`,
//! - `H₁(A,B,B) ≅ (a²A∩b²A)/(aA∩bA)² ⊗_A R`,
//! - `H₂(A,B,B) ≅ W ⊗_A R` with `W = ker(S₂(aA∩bA) → (aA∩bA)²)`,
//!
//! where `R = A[X]`. The `⊗_A R` factor is a direct sum of copies indexed by monomials and is
//! never materialized; the functions here compute the finite coefficient groups. In a
//! non-maximal order the same lattice quotients are still computed, but they are only formula
//! values and carry no homological meaning.

use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::ideal::FracIdeal;
use crate::linalg::{self, AbelianGroupInvariants, IntMatrix};
use crate::quad::{OrderElement, QuadraticOrder};

/// Both formulations of `a²A ∩ b²A = (aA ∩ bA)²` for one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarVerdict {
    pub holds: bool,
    /// `a²A ∩ b²A`
    pub lhs: FracIdeal,
    /// `(aA ∩ bA)²`
    pub rhs: FracIdeal,
    /// `((b²A :_A a²), (bA :_A a)²)`
    pub colon_form: (FracIdeal, FracIdeal),
}

fn nonzero(x: &OrderElement) -> Result<()> {
    if x.is_zero() {
        Err(Error::ZeroElement)
    } else {
        Ok(())
    }
}

/// The principal ideals and their sum/intersection, shared by every invariant of a pair.
struct Pair<'a> {
    order: &'a QuadraticOrder,
    a: &'a OrderElement,
    b: &'a OrderElement,
    a_ideal: FracIdeal,
    b_ideal: FracIdeal,
    meet: FracIdeal,
}

impl<'a> Pair<'a> {
    fn new(order: &'a QuadraticOrder, a: &'a OrderElement, b: &'a OrderElement) -> Result<Self> {
        nonzero(a)?;
        nonzero(b)?;
        let a_ideal = FracIdeal::principal(order, a)?;
        let b_ideal = FracIdeal::principal(order, b)?;
        let meet = a_ideal.intersection(&b_ideal)?;
        Ok(Pair { order, a, b, a_ideal, b_ideal, meet })
    }

    fn principal(&self, x: &OrderElement) -> FracIdeal {
        FracIdeal::principal(self.order, x).expect("product of nonzero elements")
    }

    fn sum(&self) -> FracIdeal {
        self.a_ideal.sum(&self.b_ideal).expect("same order")
    }

    /// `(bA :_A a)`
    fn conductor(&self) -> FracIdeal {
        self.b_ideal.colon_in_order(&self.a_ideal).expect("same order")
    }

    fn squares_meet(&self) -> FracIdeal {
        self.a_ideal.square().intersection(&self.b_ideal.square()).expect("same order")
    }

    fn ab(&self) -> FracIdeal {
        self.principal(&self.order.mul(self.a, self.b))
    }

    fn star(&self) -> Result<StarVerdict> {
        let lhs = self.squares_meet();
        let rhs = self.meet.square();
        if !lhs.contains_ideal(&rhs) {
            return Err(Error::Inconsistent("(aA∩bA)² ⊄ a²A∩b²A"));
        }
        let colon_sq = self.b_ideal.square().colon_in_order(&self.a_ideal.square())?;
        let conductor_sq = self.conductor().square();
        let holds = lhs == rhs;
        if holds != (colon_sq == conductor_sq) {
            return Err(Error::Inconsistent("the two star formulations disagree"));
        }
        Ok(StarVerdict { holds, lhs, rhs, colon_form: (colon_sq, conductor_sq) })
    }

    fn omega_coeff(&self) -> Result<AbelianGroupInvariants> {
        let num = self.ab();
        let den = self.sum().product(&self.meet)?;
        if !num.contains_ideal(&den) {
            return Err(Error::ContainmentViolation);
        }
        num.quotient_invariants(&den)
    }

    fn h1_coeff(&self) -> Result<AbelianGroupInvariants> {
        let num = self.squares_meet();
        let den = self.meet.square();
        if !num.contains_ideal(&den) {
            return Err(Error::ContainmentViolation);
        }
        num.quotient_invariants(&den)
    }
}

/// Decides `a²A ∩ b²A = (aA ∩ bA)²`, computing both formulations and cross-checking them.
pub fn star_pair(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<StarVerdict> {
    Pair::new(order, a, b)?.star()
}

/// The conductor-type ideal `(bA :_A a)`.
pub fn conductor_ideal(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<FracIdeal> {
    Ok(Pair::new(order, a, b)?.conductor())
}

/// Invariants of `abA / ((aA+bA)(aA∩bA))`, the coefficient group of `Ω_{B/A}`.
pub fn omega_coeff_group(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<AbelianGroupInvariants> {
    Pair::new(order, a, b)?.omega_coeff()
}

/// Invariants of `(a²A∩b²A) / (aA∩bA)²`, the coefficient group of `H₁(A,B,B)`.
pub fn h1_coeff_group(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<AbelianGroupInvariants> {
    Pair::new(order, a, b)?.h1_coeff()
}

/// `((bA:_Aa)·ab ⊆ (aA+bA)(aA∩bA), (a²A∩b²A)(bA:_Aa) ⊆ (aA∩bA)²)`.
///
/// The second inclusion is only guaranteed for integrally closed `A`; elsewhere the value is
/// just reported.
pub fn annihilation_checks(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<(bool, bool)> {
    let p = Pair::new(order, a, b)?;
    let c = p.conductor();
    let first = p.sum().product(&p.meet)?.contains_ideal(&c.product(&p.ab())?);
    let second = p.meet.square().contains_ideal(&p.squares_meet().product(&c)?);
    Ok((first, second))
}

/// In a maximal order: `Ω`-coefficient trivial ⇔ `aA + bA` invertible. Returns whether the
/// biconditional holds for this pair.
pub fn omega_invertibility_check(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<bool> {
    if !order.is_maximal() {
        return Err(Error::NotIntegrallyClosed);
    }
    let p = Pair::new(order, a, b)?;
    Ok(p.omega_coeff()?.is_trivial() == p.sum().is_invertible())
}

/// `(aA∩bA)(cA∩dA) = acA ∩ adA ∩ bcA ∩ bdA`.
pub fn four_term_identity(
    order: &QuadraticOrder,
    a: &OrderElement,
    b: &OrderElement,
    c: &OrderElement,
    d: &OrderElement,
) -> Result<bool> {
    for x in [a, b, c, d] {
        nonzero(x)?;
    }
    let pr = |x: &OrderElement| FracIdeal::principal(order, x);
    let left = pr(a)?.intersection(&pr(b)?)?.product(&pr(c)?.intersection(&pr(d)?)?)?;
    let right = pr(&order.mul(a, c))?
        .intersection(&pr(&order.mul(a, d))?)?
        .intersection(&pr(&order.mul(b, c))?)?
        .intersection(&pr(&order.mul(b, d))?)?;
    Ok(left == right)
}

/// Presentation of `S₂(J)` over the order from the two Hermite generators `g₁, g₂` of `J`.
///
/// The ambient module is free on `G11, G12, G22`, i.e. `Z⁶` in the coordinates
/// `(G11, ωG11, G12, ωG12, G22, ωG22)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricSquarePresentation {
    pub generators: [OrderElement; 2],
    /// Syzygies `(x, y)` with `x·g₁ + y·g₂ = 0`, as a `4 × 2` Hermite basis over `Z`.
    pub syzygies: IntMatrix,
    /// Relations `x·G1j + y·G2j` for every syzygy, ω-closed, as a `6 × k` Hermite basis.
    pub relations: IntMatrix,
    /// `2 × 6` matrix of `G11 ↦ g₁², G12 ↦ g₁g₂, G22 ↦ g₂²`.
    pub evaluation: IntMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygeticKernel {
    pub presentation: SymmetricSquarePresentation,
    /// `W = ker(S₂(J) → J²)`.
    pub kernel: AbelianGroupInvariants,
}

impl SyzygeticKernel {
    pub fn is_syzygetic(&self) -> bool {
        self.kernel.is_trivial()
    }
}

fn coords_and_omega(order: &QuadraticOrder, x: &OrderElement) -> [Vec<BigInt>; 2] {
    [x.coords().to_vec(), order.mul(&order.omega(), x).coords().to_vec()]
}

/// Kernel `W` of the canonical map `S₂(J) → J²`.
///
/// `W` does not change when `J` is rescaled, so a fractional `J` is first cleared of its
/// denominator.
pub fn syzygetic_kernel(order: &QuadraticOrder, j: &FracIdeal) -> Result<SyzygeticKernel> {
    if j.order().disc() != order.disc() {
        return Err(Error::OrderMismatch);
    }
    let g1 = OrderElement::from_coords(&j.basis().column(0));
    let g2 = OrderElement::from_coords(&j.basis().column(1));

    let mut cols = Vec::with_capacity(4);
    cols.extend(coords_and_omega(order, &g1));
    cols.extend(coords_and_omega(order, &g2));
    let syzygies = linalg::kernel_basis(&IntMatrix::from_columns(2, &cols));

    let omega = order.omega();
    let mut rels: Vec<Vec<BigInt>> = Vec::new();
    for s in syzygies.columns() {
        let x = OrderElement::new(s[0].clone(), s[1].clone());
        let y = OrderElement::new(s[2].clone(), s[3].clone());
        for (x, y) in [(x.clone(), y.clone()), (order.mul(&omega, &x), order.mul(&omega, &y))] {
            let z = BigInt::from(0);
            rels.push([x.u.clone(), x.v.clone(), y.u.clone(), y.v.clone(), z.clone(), z.clone()].to_vec());
            rels.push([z.clone(), z, x.u, x.v, y.u, y.v].to_vec());
        }
    }
    let relations = linalg::hnf(&IntMatrix::from_columns(6, &rels));

    let mut ev = Vec::with_capacity(6);
    for sq in [order.mul(&g1, &g1), order.mul(&g1, &g2), order.mul(&g2, &g2)] {
        ev.extend(coords_and_omega(order, &sq));
    }
    let evaluation = IntMatrix::from_columns(2, &ev);

    if !evaluation.mul(&relations).is_zero() {
        return Err(Error::Inconsistent("evaluation does not vanish on relations"));
    }
    let omega_shift = relations_omega_multiple(order, &relations);
    if !linalg::lattice_contains(&relations, &omega_shift) {
        return Err(Error::Inconsistent("relation lattice is not ω-closed"));
    }

    let ev_kernel = linalg::kernel_basis(&evaluation);
    let kernel = linalg::lattice_quotient_invariants(&ev_kernel, &relations)?;
    Ok(SyzygeticKernel {
        presentation: SymmetricSquarePresentation { generators: [g1, g2], syzygies, relations, evaluation },
        kernel,
    })
}

fn relations_omega_multiple(order: &QuadraticOrder, relations: &IntMatrix) -> IntMatrix {
    let omega = order.omega();
    let cols: Vec<Vec<BigInt>> = relations
        .columns()
        .iter()
        .map(|r| r.chunks(2).flat_map(|c| order.mul(&omega, &OrderElement::from_coords(c)).coords()).collect())
        .collect();
    IntMatrix::from_columns(6, &cols)
}

/// Everything computed for one pair `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AqReport {
    pub order: QuadraticOrder,
    pub a: OrderElement,
    pub b: OrderElement,
    pub integrally_closed: bool,
    /// `(bA :_A a)`
    pub conductor_ideal: FracIdeal,
    pub omega_coeff: AbelianGroupInvariants,
    pub h1_coeff: AbelianGroupInvariants,
    pub star: StarVerdict,
    /// `W` for `J = aA ∩ bA`.
    pub syzygetic_kernel: AbelianGroupInvariants,
    /// The groups are André-Quillen coefficients only when the order is integrally closed.
    pub interpretation_valid: bool,
}

pub fn aq_report(order: &QuadraticOrder, a: &OrderElement, b: &OrderElement) -> Result<AqReport> {
    let p = Pair::new(order, a, b)?;
    let star = p.star()?;
    let h1_coeff = p.h1_coeff()?;
    if h1_coeff.is_trivial() != star.holds {
        return Err(Error::Inconsistent("H1 coefficient trivial ⇎ star condition"));
    }
    let omega_coeff = p.omega_coeff()?;
    let syz = syzygetic_kernel(order, &p.meet)?;
    let integrally_closed = order.is_maximal();
    Ok(AqReport {
        order: order.clone(),
        a: a.clone(),
        b: b.clone(),
        integrally_closed,
        conductor_ideal: p.conductor(),
        omega_coeff,
        h1_coeff,
        star,
        syzygetic_kernel: syz.kernel,
        interpretation_valid: integrally_closed,
    })
}

/// Outcome of a bounded search for pairs violating the star condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarScan {
    /// Violating pairs of canonical associates, in search order.
    pub witnesses: Vec<(OrderElement, OrderElement)>,
    pub pairs_examined: usize,
    /// False if the budget stopped the search early.
    pub complete: bool,
}

/// Searches pairs of non-associate canonical elements with norm at most `norm_bound`.
///
/// Candidates are sorted by `(N, u, v)`; pair `(x_i, x_j)`, `i < j`, is visited in order of
/// `j` then `i`, so pairs come in nondecreasing order of their larger norm. `budget` caps the
/// number of pairs examined.
pub fn star_scan(order: &QuadraticOrder, norm_bound: &BigInt, budget: Option<usize>) -> Result<StarScan> {
    if !order.is_imaginary() {
        return Err(Error::Unsupported("star scan needs a negative discriminant"));
    }
    let candidates = order.enumerate_associate_classes(norm_bound)?;
    let mut witnesses = Vec::new();
    let mut examined = 0usize;
    for j in 0..candidates.len() {
        for i in 0..j {
            if budget.is_some_and(|b| examined >= b) {
                return Ok(StarScan { witnesses, pairs_examined: examined, complete: false });
            }
            examined += 1;
            if !star_pair(order, &candidates[i], &candidates[j])?.holds {
                witnesses.push((candidates[i].clone(), candidates[j].clone()));
            }
        }
    }
    Ok(StarScan { witnesses, pairs_examined: examined, complete: true })
}
