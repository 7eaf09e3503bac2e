//! Comparisons between library ideals and the brute-force lattices.

use aqstar_core::{FracElement, FracIdeal, OrderElement, QuadraticOrder};
use num_bigint::BigInt;
use rand::Rng;

use super::{index, member, Ring, Table, P};

pub fn small(n: &BigInt) -> i128 {
    i128::try_from(n).expect("coordinate fits in i128")
}

pub fn to_p(x: &OrderElement) -> P {
    (small(&x.u), small(&x.v))
}

pub fn from_p(x: P) -> OrderElement {
    OrderElement::new(x.0, x.1)
}

/// Every integral ideal of norm at most `max_norm`, as triangular `Z`-bases.
pub fn all_ideals(r: &Ring, max_norm: i128) -> Vec<[P; 2]> {
    let mut out = Vec::new();
    for a in 1..=max_norm {
        for c in 1..=max_norm / a {
            for b in 0..a {
                let gens = [(a, 0), (b, c)];
                if gens.iter().all(|&g| member(&gens, r.mul((0, 1), g))) {
                    out.push(gens);
                }
            }
        }
    }
    out
}

pub fn build(o: &QuadraticOrder, gens: &[P]) -> FracIdeal {
    let xs: Vec<OrderElement> = gens.iter().map(|&g| from_p(g)).collect();
    FracIdeal::from_elements(o, &xs).expect("nonzero ideal")
}

/// Numerator basis columns and denominator of a library ideal.
pub fn lattice_of(i: &FracIdeal) -> (i128, [P; 2]) {
    let b = i.basis();
    (small(i.den()), [(small(b.get(0, 0)), small(b.get(1, 0))), (small(b.get(0, 1)), small(b.get(1, 1)))])
}

/// The library ideal is integral and spans the same lattice as `gens`.
pub fn same_lattice(i: &FracIdeal, gens: &[P]) -> bool {
    let (den, basis) = lattice_of(i);
    den == 1 && basis.iter().all(|&x| member(gens, x)) && gens.iter().all(|&g| i.contains_element(&from_p(g)))
}

/// The library ideal, scaled by `scale`, is integral and equals the lattice of `t`.
pub fn matches_table(i: &FracIdeal, t: &Table, scale: i128) -> bool {
    let (den, basis) = lattice_of(i);
    if scale % den != 0 {
        return false;
    }
    let k = scale / den;
    let scaled = basis.map(|(u, v)| (k * u, k * v));
    let det = (scaled[0].0 * scaled[1].1 - scaled[0].1 * scaled[1].0).abs();
    det == t.index() && scaled.iter().all(|&x| t.contains(x))
}

/// Names of the operations on which the library and the oracle disagree for `(I, J)`.
pub fn compare_pair<R: Rng>(o: &QuadraticOrder, r: &Ring, i: &[P; 2], j: &[P; 2], rng: &mut R) -> Vec<&'static str> {
    let mut bad = Vec::new();
    let (li, lj) = (build(o, i), build(o, j));
    let (zi, zj) = (r.ideal(i), r.ideal(j));
    if !same_lattice(&li, &zi) || li.integral_norm() != Some(BigInt::from(index(&zi))) {
        bad.push("construction");
    }
    let sum: Vec<P> = zi.iter().chain(&zj).copied().collect();
    if !same_lattice(&li.sum(&lj).unwrap(), &sum) {
        bad.push("sum");
    }
    if !same_lattice(&li.product(&lj).unwrap(), &r.product(&zi, &zj)) {
        bad.push("product");
    }
    let meet = super::intersection(&zi, &zj);
    if !matches_table(&li.intersection(&lj).unwrap(), &meet, 1) {
        bad.push("intersection");
    }
    let colon_o = super::colon_in_order(r, &zi, &zj);
    if !matches_table(&li.colon_in_order(&lj).unwrap(), &colon_o, 1) {
        bad.push("colon_in_order");
    }
    let (d, colon) = super::scaled_colon(r, &zi, &zj);
    if !matches_table(&li.colon(&lj).unwrap(), &colon, d) {
        bad.push("colon");
    }
    for _ in 0..20 {
        let x = (rng.random_range(-30..=30), rng.random_range(-30..=30));
        if li.contains_element(&from_p(x)) != member(&zi, x) {
            bad.push("membership");
            break;
        }
        let k: i128 = rng.random_range(2..=3);
        let scaled: Vec<P> = zi.iter().map(|&(u, v)| (k * u, k * v)).collect();
        let frac = FracElement::new(x.0, x.1, k).unwrap();
        if !frac.is_zero() && li.contains(&frac) != member(&scaled, x) {
            bad.push("fractional membership");
            break;
        }
    }
    bad
}
