//! Hall-basis coordinates for free nilpotent groups of class 3 and any
//! rank, finitely generated subgroups in echelon form, and the coordinate
//! lattices of power subgroups.
//!
//! The Hall basis in rank r consists of the generators, the commutators
//! `[g_i,g_j]` with `i < j`, and the commutators `[[g_i,g_j],g_k]` with
//! `i < j` and not `i < k < j` (the excluded triples reduce via the Jacobi
//! identity). Coordinates are read off a truncated Magnus series directly:
//! the degree-3 expansion matrix is block diagonal over monomial multisets
//! with unimodular blocks of size at most 2, so no linear solving is
//! needed.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::lattice::IntegerLattice;
use crate::magnus::TruncatedSeries;

/// Hall basis of the free class-3 Lie ring of the given rank, with cached
/// series for the corresponding group-commutator basis elements.
#[derive(Debug, Clone)]
pub struct HallBasis {
    rank: usize,
    deg2: Vec<(usize, usize)>,
    deg3: Vec<(usize, usize, usize)>,
    deg2_series: Vec<TruncatedSeries>,
    deg3_series: Vec<TruncatedSeries>,
}

impl HallBasis {
    pub fn new(rank: usize) -> Self {
        let mut deg2 = Vec::new();
        let mut deg2_series = Vec::new();
        for i in 0..rank {
            for j in i + 1..rank {
                deg2.push((i, j));
                deg2_series.push(TruncatedSeries::commutator(
                    &TruncatedSeries::generator(rank, i),
                    &TruncatedSeries::generator(rank, j),
                ));
            }
        }
        let mut deg3 = Vec::new();
        let mut deg3_series = Vec::new();
        for (idx, &(i, j)) in deg2.iter().enumerate() {
            for k in 0..rank {
                if i < k && k < j {
                    continue;
                }
                deg3.push((i, j, k));
                deg3_series.push(TruncatedSeries::commutator(
                    &deg2_series[idx],
                    &TruncatedSeries::generator(rank, k),
                ));
            }
        }
        HallBasis { rank, deg2, deg3, deg2_series, deg3_series }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn n2(&self) -> usize {
        self.deg2.len()
    }

    pub fn n3(&self) -> usize {
        self.deg3.len()
    }

    pub fn dim(&self) -> usize {
        self.rank + self.n2() + self.n3()
    }

    pub fn deg2(&self) -> &[(usize, usize)] {
        &self.deg2
    }

    pub fn deg3(&self) -> &[(usize, usize, usize)] {
        &self.deg3
    }

    pub fn deg2_index(&self, i: usize, j: usize) -> usize {
        self.deg2.iter().position(|&p| p == (i, j)).expect("basis pair")
    }

    pub fn deg3_index(&self, i: usize, j: usize, k: usize) -> usize {
        self.deg3.iter().position(|&t| t == (i, j, k)).expect("basis triple")
    }

    /// Exponents of the normal form `prod g_i^a_i prod [g_i,g_j]^b_ij
    /// prod [[g_i,g_j],g_k]^c_ijk` of the group element with the given
    /// series. Exact for any series in the image of the group.
    pub fn coords_from_series(&self, s: &TruncatedSeries) -> Vec<BigInt> {
        assert_eq!(s.nvars(), self.rank, "series rank mismatch");
        let mut coords = vec![BigInt::zero(); self.dim()];
        for i in 0..self.rank {
            coords[i] = s.coeff(&[i]).clone();
        }
        let mut prefix = TruncatedSeries::one(self.rank);
        for i in 0..self.rank {
            if !coords[i].is_zero() {
                prefix =
                    prefix.mul(&TruncatedSeries::generator(self.rank, i).pow_big(&coords[i]));
            }
        }
        let mut w = prefix.inverse().mul(s);
        for (idx, &(i, j)) in self.deg2.iter().enumerate() {
            coords[self.rank + idx] = w.coeff(&[i, j]).clone();
        }
        let mut q = TruncatedSeries::one(self.rank);
        for (idx, e2) in self.deg2_series.iter().enumerate() {
            let c = &coords[self.rank + idx];
            if !c.is_zero() {
                q = q.mul(&e2.pow_big(c));
            }
        }
        w = q.inverse().mul(&w);
        // Degree-3 coefficients per basis triple. For a triple (i,j,k) with
        // distinct entries the only other basis triple on the same multiset
        // is paired with it through the monomial X_min X_max X_mid.
        let base = self.rank + self.deg2.len();
        for (idx, &(i, j, k)) in self.deg3.iter().enumerate() {
            coords[base + idx] = if k == i {
                -w.coeff(&[i, i, j])
            } else if k == j {
                w.coeff(&[i, j, k]).clone()
            } else if k > j {
                w.coeff(&[i, j, k]) + w.coeff(&[i, k, j])
            } else {
                w.coeff(&[k, j, i]).clone()
            };
        }
        coords
    }

    /// Series of the normal-form word with the given exponents. Shorter
    /// coordinate vectors are padded with zeros.
    pub fn series_from_coords(&self, coords: &[BigInt]) -> TruncatedSeries {
        let mut s = TruncatedSeries::one(self.rank);
        let at = |p: usize| coords.get(p).cloned().unwrap_or_else(BigInt::zero);
        for i in 0..self.rank {
            let c = at(i);
            if !c.is_zero() {
                s = s.mul(&TruncatedSeries::generator(self.rank, i).pow_big(&c));
            }
        }
        for (idx, e2) in self.deg2_series.iter().enumerate() {
            let c = at(self.rank + idx);
            if !c.is_zero() {
                s = s.mul(&e2.pow_big(&c));
            }
        }
        let base = self.rank + self.deg2.len();
        for (idx, e3) in self.deg3_series.iter().enumerate() {
            let c = at(base + idx);
            if !c.is_zero() {
                s = s.mul(&e3.pow_big(&c));
            }
        }
        s
    }
}

/// Permutation between the rank-3 Hall coordinate order and the normal-form
/// order `x,y,z,r,s,t,[r,x],[r,y],[r,z],[s,x],[s,y],[s,z],[t,x],[t,z]` used
/// by [`crate::nilpotent::NilpotentElement`]: position p there is Hall
/// position `NORMAL_FROM_HALL3[p]`.
pub const NORMAL_FROM_HALL3: [usize; 14] = [0, 1, 2, 3, 5, 4, 6, 7, 8, 11, 12, 13, 9, 10];

pub fn normal_coords_from_hall3(hall: &[BigInt]) -> [BigInt; 14] {
    assert_eq!(hall.len(), 14);
    std::array::from_fn(|p| hall[NORMAL_FROM_HALL3[p]].clone())
}

pub fn hall3_coords_from_normal(normal: &[BigInt]) -> Vec<BigInt> {
    assert_eq!(normal.len(), 14);
    let mut h = vec![BigInt::zero(); 14];
    for (p, c) in normal.iter().enumerate() {
        h[NORMAL_FROM_HALL3[p]] = c.clone();
    }
    h
}

/// Column-permutes a rank-3 Hall-order lattice into normal-form order.
pub fn lattice_normal_from_hall3(l: &IntegerLattice) -> IntegerLattice {
    let rows: Vec<Vec<BigInt>> =
        l.rows().iter().map(|r| normal_coords_from_hall3(r).to_vec()).collect();
    IntegerLattice::span(14, &rows)
}

#[derive(Debug, Clone)]
struct Head {
    series: TruncatedSeries,
    coords: Vec<BigInt>,
}

/// A finitely generated subgroup of the free nilpotent group of the given
/// class (2 or 3), held in echelon form: one head per generator slot whose
/// earlier degree-1 coordinates vanish, plus a lattice of coordinates of
/// known members of the intersection with the commutator subgroup. The
/// lattice is well defined because that intersection is abelian at these
/// classes, so coordinates of its products add.
///
/// Every recorded head and lattice row comes from products, powers and
/// commutators of inserted elements, so `contains` answering true is always
/// sound; completeness depends on [`NilpotentSubgroup::close`] having
/// converged.
#[derive(Debug, Clone)]
pub struct NilpotentSubgroup {
    basis: HallBasis,
    class: usize,
    heads: Vec<Option<Head>>,
    tail: IntegerLattice,
}

impl NilpotentSubgroup {
    pub fn new(rank: usize, class: usize) -> Self {
        assert!(class == 2 || class == 3, "class must be 2 or 3");
        let basis = HallBasis::new(rank);
        let tail_dim = basis.n2() + if class == 3 { basis.n3() } else { 0 };
        NilpotentSubgroup {
            heads: vec![None; rank],
            tail: IntegerLattice::zero(tail_dim),
            basis,
            class,
        }
    }

    pub fn basis(&self) -> &HallBasis {
        &self.basis
    }

    pub fn class(&self) -> usize {
        self.class
    }

    /// Number of coordinates meaningful at this class.
    fn cdim(&self) -> usize {
        self.basis.rank() + self.tail.dim()
    }

    fn tail_vector(&self, coords: &[BigInt]) -> Vec<BigInt> {
        coords[self.basis.rank()..self.cdim()].to_vec()
    }

    /// Records the element as a member, updating heads and tail. Returns
    /// true if the subgroup grew.
    pub fn insert(&mut self, elt: &TruncatedSeries) -> bool {
        let mut changed = false;
        let mut work = vec![elt.clone()];
        while let Some(initial) = work.pop() {
            let mut w = initial;
            let mut coords = self.basis.coords_from_series(&w);
            let mut placed = false;
            for slot in 0..self.basis.rank() {
                if coords[slot].is_zero() {
                    continue;
                }
                let Some(h) = &self.heads[slot] else {
                    let (series, hcoords) = if coords[slot].is_negative() {
                        let inv = w.inverse();
                        let c = self.basis.coords_from_series(&inv);
                        (inv, c)
                    } else {
                        (w.clone(), coords.clone())
                    };
                    self.heads[slot] = Some(Head { series, coords: hcoords });
                    changed = true;
                    placed = true;
                    break;
                };
                if (&coords[slot] % &h.coords[slot]).is_zero() {
                    let q = &coords[slot] / &h.coords[slot];
                    w = w.mul(&h.series.pow_big(&-q));
                    coords = self.basis.coords_from_series(&w);
                } else {
                    // Combine the head and the new element into one with
                    // pivot gcd, and requeue both residuals.
                    let e = coords[slot].extended_gcd(&h.coords[slot]);
                    let combined = w.pow_big(&e.x).mul(&h.series.pow_big(&e.y));
                    let combined_coords = self.basis.coords_from_series(&combined);
                    let old = self.heads[slot].take().expect("head present");
                    let q_old = &old.coords[slot] / &e.gcd;
                    let q_new = &coords[slot] / &e.gcd;
                    work.push(old.series.mul(&combined.pow_big(&-q_old)));
                    work.push(w.mul(&combined.pow_big(&-q_new)));
                    self.heads[slot] = Some(Head { series: combined, coords: combined_coords });
                    changed = true;
                    placed = true;
                    break;
                }
            }
            if placed {
                continue;
            }
            let tv = self.tail_vector(&coords);
            if tv.iter().any(|c| !c.is_zero()) && !self.tail.contains(&tv) {
                self.tail = self.tail.sum(&IntegerLattice::span(self.tail.dim(), &[tv]));
                changed = true;
            }
        }
        changed
    }

    /// Adds coordinate rows of known commutator-subgroup members directly
    /// to the tail lattice. Rows are indexed from the first degree-2
    /// coordinate.
    pub fn seed_tail(&mut self, rows: &[Vec<BigInt>]) {
        if rows.is_empty() {
            return;
        }
        self.tail = self.tail.sum(&IntegerLattice::span(self.tail.dim(), rows));
    }

    /// Membership test. True only for genuine members; a false answer may
    /// mean closure was incomplete.
    pub fn contains(&self, elt: &TruncatedSeries) -> bool {
        let mut w = elt.clone();
        let mut coords = self.basis.coords_from_series(&w);
        for slot in 0..self.basis.rank() {
            if coords[slot].is_zero() {
                continue;
            }
            let Some(h) = &self.heads[slot] else {
                return false;
            };
            if !(&coords[slot] % &h.coords[slot]).is_zero() {
                return false;
            }
            let q = &coords[slot] / &h.coords[slot];
            w = w.mul(&h.series.pow_big(&-q));
            coords = self.basis.coords_from_series(&w);
        }
        self.tail.contains(&self.tail_vector(&coords))
    }

    fn realize_tail(&self, row: &[BigInt]) -> TruncatedSeries {
        let mut full = vec![BigInt::zero(); self.basis.rank()];
        full.extend_from_slice(row);
        self.basis.series_from_coords(&full)
    }

    /// Saturates the subgroup under commutators of its recorded generators:
    /// head-head commutators with inverse variants, and head-tail
    /// commutators at class 3. Errors if the round budget is exhausted
    /// before a fixed point.
    pub fn close(&mut self, budget: usize) -> Result<(), Error> {
        for _ in 0..budget {
            let heads: Vec<TruncatedSeries> =
                self.heads.iter().flatten().map(|h| h.series.clone()).collect();
            let mut cands: Vec<TruncatedSeries> = Vec::new();
            for (i, a) in heads.iter().enumerate() {
                let ai = a.inverse();
                for b in heads.iter().skip(i + 1) {
                    let bi = b.inverse();
                    cands.push(TruncatedSeries::commutator(a, b));
                    cands.push(TruncatedSeries::commutator(&ai, b));
                    cands.push(TruncatedSeries::commutator(a, &bi));
                    cands.push(TruncatedSeries::commutator(&ai, &bi));
                }
            }
            if self.class == 3 {
                let n2 = self.basis.n2();
                let rows: Vec<Vec<BigInt>> = self
                    .tail
                    .rows()
                    .iter()
                    .filter(|r| r[..n2].iter().any(|c| !c.is_zero()))
                    .cloned()
                    .collect();
                for row in &rows {
                    let t = self.realize_tail(row);
                    for h in &heads {
                        cands.push(TruncatedSeries::commutator(h, &t));
                        cands.push(TruncatedSeries::commutator(&h.inverse(), &t));
                    }
                }
            }
            let mut changed = false;
            for c in cands {
                if self.insert(&c) {
                    changed = true;
                }
            }
            if !changed {
                return Ok(());
            }
        }
        Err(Error::BoundTooSmall(budget))
    }

    /// Lattice spanned by the coordinates of the recorded generators, in
    /// Hall order truncated to the coordinates of this class.
    pub fn coordinate_lattice(&self) -> IntegerLattice {
        let cdim = self.cdim();
        let mut rows: Vec<Vec<BigInt>> = self
            .heads
            .iter()
            .flatten()
            .map(|h| h.coords[..cdim].to_vec())
            .collect();
        for r in self.tail.rows() {
            let mut row = vec![BigInt::zero(); self.basis.rank()];
            row.extend_from_slice(r);
            rows.push(row);
        }
        IntegerLattice::span(cdim, &rows)
    }
}

/// All freely reduced letter sequences of length 1..=max_len over the 2r
/// signed generators, visited with their series.
fn for_each_reduced_word(
    rank: usize,
    max_len: usize,
    visit: &mut impl FnMut(&TruncatedSeries),
) {
    let letters: Vec<TruncatedSeries> = (0..rank)
        .flat_map(|i| {
            let g = TruncatedSeries::generator(rank, i);
            [g.inverse(), g]
        })
        .collect();
    fn rec(
        letters: &[TruncatedSeries],
        prefix: &TruncatedSeries,
        last: Option<usize>,
        remaining: usize,
        visit: &mut impl FnMut(&TruncatedSeries),
    ) {
        if remaining == 0 {
            return;
        }
        for (l, s) in letters.iter().enumerate() {
            if last == Some(l ^ 1) {
                continue;
            }
            let next = prefix.mul(s);
            visit(&next);
            rec(letters, &next, Some(l), remaining - 1, visit);
        }
    }
    rec(&letters, &TruncatedSeries::one(rank), None, max_len, visit);
}

/// Coordinate lattice of the subgroup generated by all n-th powers in the
/// free class-3 group of the given rank, computed by sifting w^n for every
/// freely reduced word of length at most `length_bound` and saturating
/// under commutators. Every basis row of the result is verified to realize
/// to a subgroup member; failure reports the bound as too small.
pub fn power_subgroup_lattice(
    rank: usize,
    n: u64,
    length_bound: usize,
) -> Result<IntegerLattice, Error> {
    let mut sub = NilpotentSubgroup::new(rank, 3);
    let n_big = BigInt::from(n);
    for_each_reduced_word(rank, length_bound, &mut |s| {
        sub.insert(&s.pow_big(&n_big));
    });
    sub.close(50)?;
    let lattice = sub.coordinate_lattice();
    for row in lattice.rows() {
        if !sub.contains(&sub.basis.series_from_coords(row)) {
            return Err(Error::BoundTooSmall(length_bound));
        }
    }
    Ok(lattice)
}

/// Index map embedding rank-3 Hall coordinates along a strictly increasing
/// generator injection phi into the Hall coordinates of a larger basis.
fn injection_index_map(hall3: &HallBasis, target: &HallBasis, phi: [usize; 3]) -> Vec<usize> {
    let mut map = Vec::with_capacity(hall3.dim());
    for i in 0..3 {
        map.push(phi[i]);
    }
    for &(i, j) in hall3.deg2() {
        map.push(target.rank() + target.deg2_index(phi[i], phi[j]));
    }
    for &(i, j, k) in hall3.deg3() {
        map.push(target.rank() + target.n2() + target.deg3_index(phi[i], phi[j], phi[k]));
    }
    map
}

type SubgroupKey = (usize, u64, usize);

static MEMBERSHIP_CACHE: OnceLock<Mutex<HashMap<SubgroupKey, Arc<NilpotentSubgroup>>>> =
    OnceLock::new();

/// The subgroup generated by all n-th powers in the free group of the given
/// rank, reduced to the given nilpotency class (2 or 3), ready for
/// membership queries. Heads are the n-th powers of the generators; the
/// tail is seeded with the rank-3 power-subgroup congruences pushed forward
/// along every increasing injection of a three-generator subbasis, then
/// saturated under commutators. Results are cached per (rank, n, class).
pub fn membership_subgroup(
    rank: usize,
    n: u64,
    class: usize,
) -> Result<Arc<NilpotentSubgroup>, Error> {
    if class != 2 && class != 3 {
        return Err(Error::UnsupportedDepth(class));
    }
    let key = (rank, n, class);
    let cache = MEMBERSHIP_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().expect("cache lock").get(&key) {
        return Ok(s.clone());
    }
    let sub = build_membership_subgroup(rank, n, class)?;
    let arc = Arc::new(sub);
    cache.lock().expect("cache lock").insert(key, arc.clone());
    Ok(arc)
}

fn build_membership_subgroup(
    rank: usize,
    n: u64,
    class: usize,
) -> Result<NilpotentSubgroup, Error> {
    let mut sub = NilpotentSubgroup::new(rank, class);
    let n_big = BigInt::from(n);
    for i in 0..rank {
        sub.insert(&TruncatedSeries::generator(rank, i).pow_big(&n_big));
    }
    if rank < 3 {
        // Too small for the pushforward seeding; sift short powers instead.
        for_each_reduced_word(rank, 4, &mut |s| {
            sub.insert(&s.pow_big(&n_big));
        });
        sub.close(50)?;
        return Ok(sub);
    }
    let cong = crate::nilpotent::congruence_lattice(n, class + 1)?;
    let hall3 = HallBasis::new(3);
    // Commutator-subgroup congruence rows, converted to Hall order.
    let gamma2_rows: Vec<Vec<BigInt>> = cong
        .rows()
        .iter()
        .map(|r| hall3_coords_from_normal(r))
        .filter(|h| h[..3].iter().all(|c| c.is_zero()))
        .collect();
    let tail_dim = sub.tail.dim();
    let mut seeds: Vec<Vec<BigInt>> = Vec::new();
    for a in 0..rank {
        for b in a + 1..rank {
            for c in b + 1..rank {
                let map = injection_index_map(&hall3, &sub.basis, [a, b, c]);
                for row in &gamma2_rows {
                    let mut out = vec![BigInt::zero(); tail_dim];
                    let mut nonzero = false;
                    for (p, v) in row.iter().enumerate() {
                        if v.is_zero() {
                            continue;
                        }
                        let t = map[p] - rank;
                        if t < tail_dim {
                            out[t] = v.clone();
                            nonzero = true;
                        }
                    }
                    if nonzero {
                        seeds.push(out);
                    }
                }
            }
        }
    }
    sub.seed_tail(&seeds);
    sub.close(50)?;
    Ok(sub)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::magnus::magnus_eval;
    use crate::testutil::random_word_with_commutators;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn basis_counts() {
        for rank in 1..=8 {
            let b = HallBasis::new(rank);
            assert_eq!(b.n2(), rank * (rank - 1) / 2);
            assert_eq!(b.n3(), (rank * rank * rank - rank) / 3);
        }
    }

    #[test]
    fn extraction_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for rank in [2usize, 3, 4] {
            let names: Vec<String> = (0..rank).map(|i| format!("g{i}")).collect();
            let alphabet: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
            let basis = HallBasis::new(rank);
            for _ in 0..40 {
                let len = rng.gen_range(1..=6);
                let w = random_word_with_commutators(&mut rng, &alphabet, len);
                let s = magnus_eval(&w, &alphabet).unwrap();
                let coords = basis.coords_from_series(&s);
                assert_eq!(basis.series_from_coords(&coords), s, "word {w}");
            }
        }
    }

    #[test]
    fn rank3_coords_match_normal_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        let basis = HallBasis::new(3);
        let xyz = ["x", "y", "z"];
        for _ in 0..60 {
            let len = rng.gen_range(1..=6);
            let w = random_word_with_commutators(&mut rng, &xyz, len);
            let s = magnus_eval(&w, &xyz).unwrap();
            let hall = basis.coords_from_series(&s);
            let elt = crate::nilpotent::eval_word(&w).unwrap();
            assert_eq!(normal_coords_from_hall3(&hall), elt.coords, "word {w}");
            assert_eq!(hall3_coords_from_normal(&elt.coords), hall);
        }
    }

    #[test]
    fn power_lattice_rank1_is_n_z() {
        let l = power_subgroup_lattice(1, 5, 3).unwrap();
        assert_eq!(l, IntegerLattice::scalar(1, 5));
    }

    #[test]
    fn power_lattice_rank3_matches_congruences() {
        for n in [3u64, 4, 6] {
            let l = power_subgroup_lattice(3, n, 4).unwrap();
            let expected = crate::nilpotent::congruence_lattice(n, 4).unwrap();
            assert_eq!(lattice_normal_from_hall3(&l), expected, "n = {n}");
        }
    }

    #[test]
    fn power_lattice_rank2_is_retraction() {
        // Setting the third generator to 1 retracts the rank-3 congruences
        // onto rank 2: diag(n, n, n/gcd(2,n), n/gcd(6,n), n/gcd(6,n)).
        for n in [4u64, 6] {
            let l = power_subgroup_lattice(2, n, 4).unwrap();
            let n2 = (n / num_integer::gcd(2, n)) as i64;
            let n6 = (n / num_integer::gcd(6, n)) as i64;
            let ni = n as i64;
            let expected = IntegerLattice::span_i64(
                5,
                &[
                    vec![ni, 0, 0, 0, 0],
                    vec![0, ni, 0, 0, 0],
                    vec![0, 0, n2, 0, 0],
                    vec![0, 0, 0, n6, 0],
                    vec![0, 0, 0, 0, n6],
                ],
            );
            assert_eq!(l, expected, "n = {n}");
        }
    }

    #[test]
    fn membership_rank3_agrees_with_congruences() {
        let n = 6u64;
        let sub = membership_subgroup(3, n, 3).unwrap();
        let cong = crate::nilpotent::congruence_lattice(n, 4).unwrap();
        let basis = HallBasis::new(3);
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..60 {
            let normal: Vec<BigInt> =
                (0..14).map(|_| BigInt::from(rng.gen_range(-12i64..=12))).collect();
            let expect = cong.contains(&normal);
            let s = basis.series_from_coords(&hall3_coords_from_normal(&normal));
            assert_eq!(sub.contains(&s), expect, "coords {normal:?}");
        }
    }

    #[test]
    fn membership_class2_truncates() {
        let n = 6u64;
        let sub = membership_subgroup(3, n, 2).unwrap();
        let basis = HallBasis::new(3);
        // x^6 [x,y]^3 is a member at class 2; x^6 [x,y] is not.
        let member = basis.series_from_coords(
            &[6, 0, 0, 3, 0, 0].iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
        );
        assert!(sub.contains(&member));
        let non = basis.series_from_coords(
            &[6, 0, 0, 1, 0, 0].iter().map(|&c| BigInt::from(c)).collect::<Vec<_>>(),
        );
        assert!(!sub.contains(&non));
        // Degree-3 coordinates are invisible at class 2.
        let deep = basis.series_from_coords(
            &[0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0]
                .iter()
                .map(|&c| BigInt::from(c))
                .collect::<Vec<_>>(),
        );
        assert!(sub.contains(&deep));
    }

    #[test]
    fn subgroup_insert_and_echelon() {
        let mut sub = NilpotentSubgroup::new(2, 3);
        let x = TruncatedSeries::generator(2, 0);
        let y = TruncatedSeries::generator(2, 1);
        sub.insert(&x.pow(4));
        sub.insert(&x.pow(6));
        // gcd collapse: x^2 is now a member.
        assert!(sub.contains(&x.pow(2)));
        assert!(!sub.contains(&x));
        assert!(!sub.contains(&y));
        sub.insert(&y.pow(3).mul(&x.pow(2)));
        assert!(sub.contains(&y.pow(3)));
        sub.close(50).unwrap();
        assert!(sub.contains(&TruncatedSeries::commutator(&x.pow(2), &y.pow(3))));
    }
}
