//! Brute-force reference computations for quadratic-order lattices.
//!
//! Everything here works on small `i128` coordinates in the basis `(1, ω)` and avoids the
//! library's Hermite/Smith machinery: lattice indices come from gcds of 2×2 minors,
//! membership from finite tables modulo an integer contained in the lattice, and group
//! structure from counting elements killed by prime powers.

#![allow(dead_code)]

use std::collections::VecDeque;

pub mod check;

pub type P = (i128, i128);

pub fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: i128, b: i128) -> i128 {
    a / gcd(a, b) * b
}

/// `Z[ω]` with `ω² = Δω − n`.
#[derive(Clone, Copy, Debug)]
pub struct Ring {
    pub disc: i128,
    pub n: i128,
}

impl Ring {
    pub fn new(disc: i128) -> Ring {
        Ring { disc, n: (disc * disc - disc) / 4 }
    }

    pub fn mul(&self, x: P, y: P) -> P {
        (x.0 * y.0 - self.n * x.1 * y.1, x.0 * y.1 + x.1 * y.0 + self.disc * x.1 * y.1)
    }

    pub fn conj(&self, x: P) -> P {
        (x.0 + self.disc * x.1, -x.1)
    }

    pub fn norm(&self, x: P) -> i128 {
        x.0 * x.0 + self.disc * x.0 * x.1 + self.n * x.1 * x.1
    }

    /// `Z`-generators of the ideal generated by `gens`.
    pub fn ideal(&self, gens: &[P]) -> Vec<P> {
        gens.iter().flat_map(|&g| [g, self.mul((0, 1), g)]).collect()
    }

    /// `Z`-generators of the product of two lattices given by `Z`-generators.
    pub fn product(&self, a: &[P], b: &[P]) -> Vec<P> {
        a.iter().flat_map(|&x| b.iter().map(move |&y| (x, y))).map(|(x, y)| self.mul(x, y)).collect()
    }
}

/// Index in `Z²` of the lattice spanned by `gens`; 0 if it is not of full rank.
pub fn index(gens: &[P]) -> i128 {
    let mut g = 0;
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            g = gcd(g, gens[i].0 * gens[j].1 - gens[i].1 * gens[j].0);
        }
    }
    g
}

pub fn member(gens: &[P], x: P) -> bool {
    let mut with = gens.to_vec();
    with.push(x);
    index(&with) == index(gens)
}

/// A full-rank lattice `L ⊇ mZ²`, stored as its image in `(Z/m)²`.
#[derive(Clone, Debug)]
pub struct Table {
    pub m: i128,
    bits: Vec<bool>,
}

impl Table {
    /// Subgroup of `(Z/m)²` generated by `gens`, by breadth-first closure.
    pub fn generate(gens: &[P], m: i128) -> Table {
        let mu = m as usize;
        let mut bits = vec![false; mu * mu];
        let red: Vec<(usize, usize)> =
            gens.iter().map(|g| (g.0.rem_euclid(m) as usize, g.1.rem_euclid(m) as usize)).collect();
        let mut queue = VecDeque::from([(0usize, 0usize)]);
        bits[0] = true;
        while let Some((a, b)) = queue.pop_front() {
            for &(ga, gb) in &red {
                let nx = ((a + ga) % mu, (b + gb) % mu);
                let k = nx.0 * mu + nx.1;
                if !bits[k] {
                    bits[k] = true;
                    queue.push_back(nx);
                }
            }
        }
        Table { m, bits }
    }

    pub fn from_fn(m: i128, f: impl Fn(P) -> bool) -> Table {
        let mut bits = Vec::with_capacity((m * m) as usize);
        for a in 0..m {
            for b in 0..m {
                bits.push(f((a, b)));
            }
        }
        Table { m, bits }
    }

    pub fn contains(&self, x: P) -> bool {
        let (a, b) = (x.0.rem_euclid(self.m), x.1.rem_euclid(self.m));
        self.bits[(a * self.m + b) as usize]
    }

    pub fn count(&self) -> i128 {
        self.bits.iter().filter(|&&b| b).count() as i128
    }

    /// Index of the lattice in `Z²`.
    pub fn index(&self) -> i128 {
        self.m * self.m / self.count()
    }

    pub fn points(&self) -> impl Iterator<Item = P> + '_ {
        let m = self.m;
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(move |(k, _)| (k as i128 / m, k as i128 % m))
    }

    pub fn and(&self, other: &Table) -> Table {
        assert_eq!(self.m, other.m);
        Table { m: self.m, bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect() }
    }

    /// Triangular basis `(t, 0), (u, v)` with `t, v > 0` minimal, found by scanning.
    pub fn basis(&self) -> [P; 2] {
        let t = (1..=self.m).find(|&t| self.contains((t, 0))).expect("m·e₁ is in the lattice");
        let (u, v) = (1..=self.m)
            .find_map(|v| (0..self.m).find(|&u| self.contains((u, v))).map(|u| (u, v)))
            .expect("m·e₂ is in the lattice");
        [(t, 0), (u, v)]
    }
}

/// Exponent of `Z² / L`: the index divided by the gcd of all coordinates, so that
/// `exponent·Z² ⊆ L` and a table modulo it describes `L` exactly.
pub fn exponent(gens: &[P]) -> i128 {
    let d = index(gens);
    assert!(d > 0, "lattice must have full rank");
    d / gens.iter().fold(0, |g, x| gcd(gcd(g, x.0), x.1))
}

fn table_of(gens: &[P]) -> Table {
    Table::generate(gens, exponent(gens))
}

/// `I ∩ J` for integral full-rank lattices.
pub fn intersection(a: &[P], b: &[P]) -> Table {
    let m = lcm(exponent(a), exponent(b));
    Table::generate(a, m).and(&Table::generate(b, m))
}

/// `(I :_O J) = {x ∈ O : xJ ⊆ I}` for an integral ideal `I`.
pub fn colon_in_order(r: &Ring, i: &[P], j: &[P]) -> Table {
    let ti = table_of(i);
    Table::from_fn(ti.m, |x| j.iter().all(|&g| ti.contains(r.mul(x, g))))
}

/// `d·(I : J)` where `d = [O : J]`, as a table modulo the exponent of `d·I`.
pub fn scaled_colon(r: &Ring, i: &[P], j: &[P]) -> (i128, Table) {
    let d = index(j);
    let scaled: Vec<P> = i.iter().map(|&(u, v)| (d * u, d * v)).collect();
    let t = table_of(&scaled);
    (d, Table::from_fn(t.m, |y| j.iter().all(|&g| t.contains(r.mul(y, g)))))
}

fn primes(mut n: i128) -> Vec<i128> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors (ascending, each dividing the next, no 1s) of `outer / inner` for
/// full-rank lattices `inner ⊆ outer`.
pub fn quotient_invariants(outer: &[P], inner: &[P]) -> Vec<i128> {
    let m = exponent(inner);
    let t_in = Table::generate(inner, m);
    let t_out = Table::generate(outer, m);
    assert!(t_in.points().all(|x| t_out.contains(x)), "inner lattice not contained in outer");
    let order = t_out.count() / t_in.count();
    let mut factors: Vec<i128> = Vec::new();
    for p in primes(order) {
        let mut full = 0u32;
        let mut rest = order;
        while rest % p == 0 {
            rest /= p;
            full += 1;
        }
        // logs[k] = log_p |G[p^k]|, up to the whole p-part
        let mut logs = vec![0u32];
        let mut pk = 1;
        while *logs.last().unwrap() < full {
            pk *= p;
            let killed = t_out.points().filter(|&(a, b)| t_in.contains((pk * a, pk * b))).count() as i128;
            let mut size = killed / t_in.count();
            let mut e = 0;
            while size % p == 0 {
                size /= p;
                e += 1;
            }
            logs.push(e);
        }
        // logs[k] − logs[k−1] cyclic factors have order at least p^k
        let at_least = |k: usize| if k < logs.len() { logs[k] - logs[k - 1] } else { 0 };
        let mut exps: Vec<u32> = Vec::new();
        for k in 1..logs.len() {
            for _ in 0..at_least(k) - at_least(k + 1) {
                exps.push(k as u32);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        for (i, e) in exps.into_iter().enumerate() {
            if factors.len() <= i {
                factors.push(1);
            }
            factors[i] *= p.pow(e);
        }
    }
    factors.reverse();
    factors
}

/// Triangular basis `(t, 0), (u, c)` of the lattice spanned by `gens`: `c` generates the
/// projection to the second coordinate and `t·c` is the index.
pub fn lattice_basis(gens: &[P]) -> [P; 2] {
    let d = index(gens);
    assert!(d > 0, "lattice must have full rank");
    let c = gens.iter().fold(0, |g, x| gcd(g, x.1));
    let t = d / c;
    let u = (0..t).find(|&u| member(gens, (u, c))).expect("some lift of c lies in the lattice");
    [(t, 0), (u, c)]
}

/// Triangular basis of the intersection of two full lattices, by solving the pair of
/// congruences on the first coordinate for successive multiples of the second.
pub fn meet(a: &[P], b: &[P]) -> [P; 2] {
    let [(t1, _), (u1, c1)] = lattice_basis(a);
    let [(t2, _), (u2, c2)] = lattice_basis(b);
    let step = lcm(c1, c2);
    let t = lcm(t1, t2);
    for k in 1.. {
        let y = step * k;
        let x1 = (u1 * (y / c1)).rem_euclid(t1);
        let x2 = (u2 * (y / c2)).rem_euclid(t2);
        if let Some(x) = (0..t / t1).map(|j| x1 + j * t1).find(|x| (x - x2).rem_euclid(t2) == 0) {
            return [(t, 0), (x, y)];
        }
    }
    unreachable!()
}

/// Invariant factors of `outer / inner` from the 2×2 coordinate matrix of `inner` in a basis
/// of `outer`: `d₁ = gcd` of its entries, `d₂ = det / d₁`.
pub fn quotient_invariants_by_minors(outer: &[P], inner: &[P]) -> Vec<i128> {
    let [(t, _), (u, c)] = lattice_basis(outer);
    let mut entries = 0;
    for &(x, y) in inner {
        // (x, y) = α(t, 0) + β(u, c)
        assert_eq!(y % c, 0, "inner lattice not contained in outer");
        let beta = y / c;
        let rest = x - beta * u;
        assert_eq!(rest % t, 0, "inner lattice not contained in outer");
        entries = gcd(gcd(entries, rest / t), beta);
    }
    let det = index(inner) / index(outer);
    [entries, det / entries].into_iter().filter(|&e| e > 1).collect()
}

/// Determinant by cofactor expansion along the first row.
fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = combinations(n - 1, k);
    for mut c in combinations(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// `(free rank, torsion invariants)` of `Z^rows / ⟨columns⟩` from determinantal divisors.
pub fn cokernel(rows: usize, cols: &[Vec<i128>]) -> (usize, Vec<i128>) {
    let mut divisors = vec![1i128];
    for k in 1..=rows.min(cols.len()) {
        let mut g = 0;
        for rs in combinations(rows, k) {
            for cs in combinations(cols.len(), k) {
                let sub: Vec<Vec<i128>> = rs.iter().map(|&r| cs.iter().map(|&c| cols[c][r]).collect()).collect();
                g = gcd(g, det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        divisors.push(g);
    }
    let rank = divisors.len() - 1;
    let torsion = (1..=rank).map(|k| divisors[k] / divisors[k - 1]).filter(|&e| e > 1).collect();
    (rows - rank, torsion)
}

fn minors_gcd(vectors: &[[i128; 4]]) -> i128 {
    let mut g = 0;
    for i in 0..vectors.len() {
        for j in i + 1..vectors.len() {
            for a in 0..4 {
                for b in a + 1..4 {
                    g = gcd(g, vectors[i][a] * vectors[j][b] - vectors[i][b] * vectors[j][a]);
                }
            }
        }
    }
    g
}

/// Syzygies `(x, y) ∈ O²` of `x·g1 + y·g2 = 0`, found by scanning `x` in a box and
/// solving for `y`, kept greedily until they span a primitive rank-2 lattice. `None` if
/// the box is too small for that.
pub fn syzygies(r: &Ring, g1: P, g2: P, bound: i128) -> Option<Vec<[i128; 4]>> {
    let ng2 = r.norm(g2);
    let mut cands: Vec<[i128; 4]> = Vec::new();
    for u in -bound..=bound {
        for v in -bound..=bound {
            if (u, v) == (0, 0) {
                continue;
            }
            let t = r.mul(r.mul((u, v), g1), r.conj(g2));
            if t.0 % ng2 == 0 && t.1 % ng2 == 0 {
                cands.push([u, v, -t.0 / ng2, -t.1 / ng2]);
            }
        }
    }
    cands.sort_by_key(|c| (c.iter().map(|x| x.abs()).max().unwrap(), *c));
    let mut chosen: Vec<[i128; 4]> = Vec::new();
    let mut current = 0;
    for c in cands {
        if chosen.is_empty() {
            chosen.push(c);
            continue;
        }
        let mut with = chosen.clone();
        with.push(c);
        let g = minors_gcd(&with);
        if g != 0 && (current == 0 || g < current) {
            chosen = with;
            current = g;
            if current == 1 {
                break;
            }
        }
    }
    (current == 1).then_some(chosen)
}

/// Torsion invariants and free rank of `S₂(J)` for `J = Og1 + Og2`; the free rank is 2
/// exactly when the torsion is the kernel of `S₂(J) → J²`.
pub fn symmetric_square(r: &Ring, g1: P, g2: P) -> (usize, Vec<i128>) {
    let syz = (0..8).find_map(|k| syzygies(r, g1, g2, 8 << k)).expect("syzygies found in a box of side 1024");
    let mut rels: Vec<Vec<i128>> = Vec::new();
    for s in syz {
        for z in [(1, 0), (0, 1)] {
            let x = r.mul(z, (s[0], s[1]));
            let y = r.mul(z, (s[2], s[3]));
            rels.push(vec![x.0, x.1, y.0, y.1, 0, 0]);
            rels.push(vec![0, 0, x.0, x.1, y.0, y.1]);
        }
    }
    cokernel(6, &rels)
}
