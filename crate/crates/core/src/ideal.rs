//! Fractional ideals of a quadratic order.
//!
//! A fractional ideal is stored as `(1/den)·L` where `L ⊆ Z²` is an integer lattice in
//! `(1, ω)` coordinates kept in Hermite normal form, and `den` is the least positive integer
//! making the lattice integral. With that normalization two ideals are equal exactly when
//! their representations are equal, so every ideal identity below is a structural comparison.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, AbelianGroupInvariants, IntMatrix};
use crate::quad::{FracElement, OrderElement, QuadraticOrder};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FracIdeal {
    order: QuadraticOrder,
    den: BigInt,
    basis: IntMatrix,
}

impl FracIdeal {
    /// Builds the ideal `(1/den)·L` from arbitrary lattice generators (columns). The caller
    /// guarantees the lattice is an `O`-module.
    fn from_lattice(order: &QuadraticOrder, den: BigInt, gens: &IntMatrix) -> Result<Self> {
        let h = linalg::hnf(gens);
        if h.cols() < 2 {
            return Err(Error::ZeroIdeal);
        }
        let g = h.content().gcd(&den);
        let (basis, den) = if g.is_one() { (h, den) } else { (h.div_exact(&g), den / g) };
        Ok(FracIdeal { order: order.clone(), den, basis })
    }

    /// The `O`-module generated by `gens`.
    pub fn from_generators(order: &QuadraticOrder, gens: &[FracElement]) -> Result<Self> {
        let den = gens.iter().fold(BigInt::one(), |l, g| l.lcm(g.den()));
        let mut cols = Vec::with_capacity(2 * gens.len());
        let omega = order.omega();
        for g in gens {
            let k = &den / g.den();
            let x = g.numerator().scale(&k);
            cols.push(x.coords().to_vec());
            cols.push(order.mul(&omega, &x).coords().to_vec());
        }
        if cols.iter().all(|c| c.iter().all(Zero::is_zero)) {
            return Err(Error::ZeroIdeal);
        }
        Self::from_lattice(order, den, &IntMatrix::from_columns(2, &cols))
    }

    pub fn from_elements(order: &QuadraticOrder, gens: &[OrderElement]) -> Result<Self> {
        let fr: Vec<FracElement> = gens.iter().map(FracElement::from).collect();
        Self::from_generators(order, &fr)
    }

    pub fn principal(order: &QuadraticOrder, x: &OrderElement) -> Result<Self> {
        Self::from_elements(order, core::slice::from_ref(x))
    }

    /// The order itself.
    pub fn unit(order: &QuadraticOrder) -> Self {
        FracIdeal { order: order.clone(), den: BigInt::one(), basis: IntMatrix::identity(2) }
    }

    pub fn order(&self) -> &QuadraticOrder {
        &self.order
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    /// Hermite basis of the numerator lattice.
    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    /// The two Hermite basis vectors as field elements.
    pub fn basis_elements(&self) -> [FracElement; 2] {
        let e = |j: usize| {
            FracElement::new(self.basis.get(0, j).clone(), self.basis.get(1, j).clone(), self.den.clone())
                .expect("positive denominator")
        };
        [e(0), e(1)]
    }

    fn check_order(&self, other: &FracIdeal) -> Result<()> {
        if self.order.disc() == other.order.disc() {
            Ok(())
        } else {
            Err(Error::OrderMismatch)
        }
    }

    /// Numerator lattice rescaled to denominator `common` (a multiple of `den`).
    fn lattice_at(&self, common: &BigInt) -> IntMatrix {
        self.basis.scaled(&(common / &self.den))
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    pub fn sum(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check_order(other)?;
        let d = self.den.lcm(&other.den);
        let gens = self.lattice_at(&d).hconcat(&other.lattice_at(&d));
        Self::from_lattice(&self.order, d, &gens)
    }

    pub fn product(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check_order(other)?;
        let mut cols = Vec::with_capacity(4);
        for i in 0..2 {
            let x = OrderElement::from_coords(&self.basis.column(i));
            for j in 0..2 {
                let y = OrderElement::from_coords(&other.basis.column(j));
                cols.push(self.order.mul(&x, &y).coords().to_vec());
            }
        }
        Self::from_lattice(&self.order, &self.den * &other.den, &IntMatrix::from_columns(2, &cols))
    }

    pub fn square(&self) -> FracIdeal {
        self.product(self).expect("same order")
    }

    pub fn intersection(&self, other: &FracIdeal) -> Result<FracIdeal> {
        self.check_order(other)?;
        let d = self.den.lcm(&other.den);
        let a = self.lattice_at(&d);
        let b = other.lattice_at(&d);
        // (x, y) with A·x = B·y  ⇔  [A | −B]·(x; y) = 0
        let stacked = a.hconcat(&b.scaled(&BigInt::from(-1)));
        let kernel = linalg::kernel_basis(&stacked);
        let mut cols = Vec::with_capacity(kernel.cols());
        for k in kernel.columns() {
            let x = IntMatrix::from_columns(2, &[k[..2].to_vec()]);
            cols.push(a.mul(&x).column(0));
        }
        Self::from_lattice(&self.order, d, &IntMatrix::from_columns(2, &cols))
    }

    /// `x·I` for a nonzero field element `x`.
    pub fn scale(&self, x: &FracElement) -> Result<FracIdeal> {
        if x.is_zero() {
            return Err(Error::ZeroElement);
        }
        let n = x.numerator();
        let cols: Vec<Vec<BigInt>> = (0..2)
            .map(|j| {
                let y = OrderElement::from_coords(&self.basis.column(j));
                self.order.mul(&n, &y).coords().to_vec()
            })
            .collect();
        Self::from_lattice(&self.order, &self.den * x.den(), &IntMatrix::from_columns(2, &cols))
    }

    /// Fractional colon `(I : J) = {x ∈ K : xJ ⊆ I}`, computed as `g₁⁻¹I ∩ g₂⁻¹I` over the
    /// Hermite basis `g₁, g₂` of `J`.
    pub fn colon(&self, j: &FracIdeal) -> Result<FracIdeal> {
        self.check_order(j)?;
        let [g1, g2] = j.basis_elements();
        let a = self.scale(&self.order.frac_inv(&g1)?)?;
        let b = self.scale(&self.order.frac_inv(&g2)?)?;
        a.intersection(&b)
    }

    /// Colon inside the order: `(I :_O J) = (I : J) ∩ O`.
    pub fn colon_in_order(&self, j: &FracIdeal) -> Result<FracIdeal> {
        self.colon(j)?.intersection(&FracIdeal::unit(&self.order))
    }

    /// `(O : I)`.
    pub fn inverse(&self) -> FracIdeal {
        FracIdeal::unit(&self.order).colon(self).expect("same order")
    }

    pub fn contains(&self, x: &FracElement) -> bool {
        if x.is_zero() {
            return true;
        }
        // x ∈ (1/den)L  ⇔  den·x ∈ L
        let (u, ru) = (x.u() * &self.den).div_rem(x.den());
        let (v, rv) = (x.v() * &self.den).div_rem(x.den());
        if !ru.is_zero() || !rv.is_zero() {
            return false;
        }
        linalg::lattice_coordinates(&self.basis, &[u, v]).is_some()
    }

    pub fn contains_element(&self, x: &OrderElement) -> bool {
        self.contains(&x.into())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &FracIdeal) -> bool {
        self.order.disc() == other.order.disc() && other.basis_elements().iter().all(|g| self.contains(g))
    }

    /// `|det L| / den²`; for integral ideals this is the index `[O : I]`.
    pub fn norm(&self) -> BigRational {
        let det = linalg::abs_det(&self.basis);
        BigRational::new(det, &self.den * &self.den)
    }

    /// Index `[O : I]` of an integral ideal.
    pub fn integral_norm(&self) -> Option<BigInt> {
        self.is_integral().then(|| linalg::abs_det(&self.basis))
    }

    pub fn is_invertible(&self) -> bool {
        self.product(&self.inverse()).expect("same order") == FracIdeal::unit(&self.order)
    }

    /// `I_v = (O : (O : I))`.
    pub fn divisorial_closure(&self) -> FracIdeal {
        self.inverse().inverse()
    }

    pub fn is_divisorial(&self) -> bool {
        self.divisorial_closure() == *self
    }

    /// For a divisorial `I`, whether `I²` is divisorial as well.
    pub fn divisorial_square_check(&self) -> Result<bool> {
        if !self.is_divisorial() {
            return Err(Error::InvalidArgument("input ideal is not divisorial".into()));
        }
        Ok(self.square().is_divisorial())
    }

    /// Invariants of the finite group `self / sub`; requires `sub ⊆ self`.
    pub fn quotient_invariants(&self, sub: &FracIdeal) -> Result<AbelianGroupInvariants> {
        self.check_order(sub)?;
        let d = self.den.lcm(&sub.den);
        linalg::lattice_quotient_invariants(&self.lattice_at(&d), &sub.lattice_at(&d))
    }

    /// Decides whether `I² = aI` for some `a ∈ I` and returns the witness.
    ///
    /// `[O : aI] = |N(a)|·[O : I]`, so a witness must have `|N(a)| = [O : I²]/[O : I]`; this
    /// makes the search finite. Among the candidates the simplest one (smallest `|v|`, then
    /// smallest `|u|`, positive before negative) is returned, so a rational integer wins
    /// whenever one qualifies.
    pub fn is_stable(&self) -> Result<Option<OrderElement>> {
        if !self.order.is_imaginary() {
            return Err(Error::Unsupported("stability search needs a negative discriminant"));
        }
        let norm = self
            .integral_norm()
            .ok_or_else(|| Error::InvalidArgument("stability is decided for integral ideals only".into()))?;
        let sq = self.square();
        let sq_norm = sq.integral_norm().expect("square of an integral ideal is integral");
        let (target, rem) = sq_norm.div_rem(&norm);
        if !rem.is_zero() {
            return Ok(None);
        }
        let mut candidates: Vec<OrderElement> = self
            .order
            .enumerate_by_norm(&target)?
            .into_iter()
            .filter(|a| self.order.norm(a) == target && self.contains_element(a))
            .collect();
        candidates.sort_by_key(simplicity_key);
        for a in candidates {
            if self.scale(&a.clone().into())? == sq {
                return Ok(Some(a));
            }
        }
        Ok(None)
    }
}

fn simplicity_key(x: &OrderElement) -> (BigInt, BigInt, bool, bool) {
    (x.v.abs(), x.u.abs(), x.u.is_negative(), x.v.is_negative())
}
