//! Integer lattices (subgroups of Z^d) via row Hermite normal form.
//!
//! A lattice is stored as the row span of an integer matrix. The HNF is
//! computed eagerly, so equality, membership and inclusion are cheap.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// A subgroup of Z^dim, held in row Hermite normal form: rows are nonzero,
/// pivots move strictly right, pivots are positive, and entries above a
/// pivot are reduced into [0, pivot).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerLattice {
    dim: usize,
    rows: Vec<Vec<BigInt>>,
}

fn first_nonzero(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

impl IntegerLattice {
    pub fn zero(dim: usize) -> Self {
        IntegerLattice { dim, rows: Vec::new() }
    }

    /// Lattice spanned by the given rows.
    pub fn span(dim: usize, generators: &[Vec<BigInt>]) -> Self {
        for g in generators {
            assert_eq!(g.len(), dim, "generator length mismatch");
        }
        let mut rows = generators.to_vec();
        hermite_normal_form(&mut rows);
        IntegerLattice { dim, rows }
    }

    pub fn span_i64(dim: usize, generators: &[Vec<i64>]) -> Self {
        let gens: Vec<Vec<BigInt>> = generators
            .iter()
            .map(|g| g.iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        Self::span(dim, &gens)
    }

    /// n Z^dim for a scalar n.
    pub fn scalar(dim: usize, n: i64) -> Self {
        let gens: Vec<Vec<i64>> = (0..dim)
            .map(|i| {
                let mut row = vec![0i64; dim];
                row[i] = n;
                row
            })
            .collect();
        Self::span_i64(dim, &gens)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    /// Reduces `v` modulo the lattice; the residue is zero iff `v` is a
    /// member.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for row in &self.rows {
            let p = first_nonzero(row).unwrap();
            if v[p].is_zero() {
                continue;
            }
            let q = v[p].div_floor(&row[p]);
            if q.is_zero() {
                continue;
            }
            for (vc, rc) in v.iter_mut().zip(row) {
                *vc -= &q * rc;
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    pub fn contains_i64(&self, v: &[i64]) -> bool {
        let v: Vec<BigInt> = v.iter().map(|&c| BigInt::from(c)).collect();
        self.contains(&v)
    }

    pub fn is_subset_of(&self, other: &IntegerLattice) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Sum of lattices (span of the union of generators).
    pub fn sum(&self, other: &IntegerLattice) -> IntegerLattice {
        assert_eq!(self.dim, other.dim);
        let mut gens = self.rows.clone();
        gens.extend(other.rows.iter().cloned());
        Self::span(self.dim, &gens)
    }

    /// The sublattice of vectors whose first `t` coordinates vanish. In HNF
    /// these are exactly the rows with pivot column >= t.
    pub fn coordinate_section(&self, t: usize) -> IntegerLattice {
        let rows: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .filter(|r| first_nonzero(r).unwrap() >= t)
            .cloned()
            .collect();
        IntegerLattice { dim: self.dim, rows }
    }

    /// True iff the lattice is spanned by multiples of the coordinate
    /// vectors, i.e. its HNF is square diagonal with full rank.
    pub fn is_rectangular(&self) -> bool {
        self.rows.len() == self.dim
            && self
                .rows
                .iter()
                .enumerate()
                .all(|(i, r)| r.iter().enumerate().all(|(j, c)| (i == j) != c.is_zero()))
    }

    /// The diagonal of a rectangular lattice.
    pub fn diagonal(&self) -> Option<Vec<BigInt>> {
        if !self.is_rectangular() {
            return None;
        }
        Some(self.rows.iter().enumerate().map(|(i, r)| r[i].clone()).collect())
    }
}

/// In-place row Hermite normal form. Rows may start in any state; zero rows
/// are dropped.
pub fn hermite_normal_form(rows: &mut Vec<Vec<BigInt>>) {
    rows.retain(|r| first_nonzero(r).is_some());
    if rows.is_empty() {
        return;
    }
    let dim = rows[0].len();
    let mut done: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..dim {
        // Combine all rows with pivot in this column into one via xgcd.
        let mut pivot_row: Option<Vec<BigInt>> = None;
        let mut rest: Vec<Vec<BigInt>> = Vec::new();
        for row in rows.drain(..) {
            match first_nonzero(&row) {
                None => {}
                Some(p) if p == col => match pivot_row.take() {
                    None => pivot_row = Some(row),
                    Some(prev) => {
                        let (combined, residual) = combine_rows(&prev, &row, col);
                        pivot_row = Some(combined);
                        if first_nonzero(&residual).is_some() {
                            rest.push(residual);
                        }
                    }
                },
                Some(_) => rest.push(row),
            }
        }
        *rows = rest;
        if let Some(mut pr) = pivot_row {
            if pr[col].is_negative() {
                for c in pr.iter_mut() {
                    *c = -&*c;
                }
            }
            // Reduce the residuals of earlier pivot rows' entries later; for
            // now clear this column from remaining rows (their pivots are in
            // later columns already, nothing to do) and from earlier rows.
            for d in done.iter_mut() {
                if d[col].is_zero() {
                    continue;
                }
                let q = d[col].div_floor(&pr[col]);
                if q.is_zero() {
                    continue;
                }
                for (dc, pc) in d.iter_mut().zip(&pr) {
                    *dc -= &q * pc;
                }
            }
            done.push(pr);
        }
    }
    *rows = done;
}

/// Bezout-combines two rows with the same pivot column: returns the row
/// whose pivot is gcd of the two, and the residual row with that column
/// cleared.
fn combine_rows(a: &[BigInt], b: &[BigInt], col: usize) -> (Vec<BigInt>, Vec<BigInt>) {
    let e = a[col].extended_gcd(&b[col]);
    let (g, s, t) = (e.gcd, e.x, e.y);
    let (u, v) = (&b[col] / &g, &a[col] / &g);
    let combined: Vec<BigInt> =
        a.iter().zip(b).map(|(ac, bc)| &s * ac + &t * bc).collect();
    let residual: Vec<BigInt> = a.iter().zip(b).map(|(ac, bc)| &u * ac - &v * bc).collect();
    (combined, residual)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hnf_basics() {
        let l = IntegerLattice::span_i64(2, &[vec![2, 0], vec![0, 3], vec![2, 3]]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains_i64(&[2, 3]));
        assert!(l.contains_i64(&[4, -3]));
        assert!(!l.contains_i64(&[1, 0]));
        assert!(l.is_rectangular());
    }

    #[test]
    fn gcd_collapses_to_unimodular() {
        let l = IntegerLattice::span_i64(2, &[vec![2, 1], vec![3, 1]]);
        assert!(l.contains_i64(&[1, 0]));
        assert!(l.contains_i64(&[0, 1]));
        assert_eq!(l, IntegerLattice::scalar(2, 1));
    }

    #[test]
    fn equality_is_basis_independent() {
        let a = IntegerLattice::span_i64(3, &[vec![1, 2, 3], vec![0, 4, 1]]);
        let b = IntegerLattice::span_i64(3, &[vec![1, 6, 4], vec![2, 0, 5]]);
        assert_ne!(a, b);
        let a2 = IntegerLattice::span_i64(3, &[vec![1, 2, 3], vec![1, 6, 4], vec![2, 4, 6]]);
        let a3 = IntegerLattice::span_i64(3, &[vec![0, 4, 1], vec![1, 2, 3]]);
        assert_eq!(a, a3);
        assert!(a.is_subset_of(&a2));
    }

    #[test]
    fn sum_and_section() {
        let a = IntegerLattice::span_i64(3, &[vec![2, 0, 0]]);
        let b = IntegerLattice::span_i64(3, &[vec![0, 0, 5]]);
        let s = a.sum(&b);
        assert!(s.contains_i64(&[2, 0, 5]));
        assert!(!s.contains_i64(&[0, 1, 0]));
        let sec = s.coordinate_section(1);
        assert!(sec.contains_i64(&[0, 0, 5]));
        assert!(!sec.contains_i64(&[2, 0, 0]));
    }

    #[test]
    fn coupled_congruence_block() {
        // span{6 e1, 6 e2, 2(e1 - e2)} inside Z^2: membership iff
        // 2 | a, 2 | b, 6 | a + b.
        let l = IntegerLattice::span_i64(2, &[vec![6, 0], vec![0, 6], vec![2, -2]]);
        for a in -12i64..=12 {
            for b in -12i64..=12 {
                let expect = a % 2 == 0 && b % 2 == 0 && (a + b) % 6 == 0;
                assert_eq!(l.contains_i64(&[a, b]), expect, "a={a} b={b}");
            }
        }
        assert!(!l.is_rectangular());
    }

    #[test]
    fn scalar_lattice() {
        let l = IntegerLattice::scalar(4, 5);
        assert!(l.contains_i64(&[5, -10, 0, 15]));
        assert!(!l.contains_i64(&[5, -10, 1, 15]));
        assert_eq!(l.diagonal().unwrap(), vec![BigInt::from(5); 4]);
    }
}
