//! Exact arithmetic in the free class-3 nilpotent group on x, y, z.
//!
//! Elements are 14-tuples of integers: the exponents of the normal form
//! `x^i1 y^i2 z^i3 r^i4 s^i5 t^i6 [r,x]^i7 [r,y]^i8 [r,z]^i9 [s,x]^i10
//! [s,y]^i11 [s,z]^i12 [t,x]^i13 [t,z]^i14` with `r = [x,y]`, `s = [y,z]`,
//! `t = [x,z]`. The coordinate map is a bijection onto Z^14.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::magnus::TruncatedSeries;
use crate::word::{GroupWord, Letter};

/// Normal-form coordinates of an element of `<x,y,z>` mod gamma_4.
/// Serializes as a plain JSON array of 14 integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NilpotentElement {
    pub coords: [BigInt; 14],
}

impl Serialize for NilpotentElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::{Error as _, SerializeSeq};
        let mut seq = serializer.serialize_seq(Some(14))?;
        for c in &self.coords {
            let v: i128 = c
                .try_into()
                .map_err(|_| S::Error::custom(format!("coordinate {c} overflows i128")))?;
            seq.serialize_element(&v)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for NilpotentElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let v: Vec<i128> = Vec::deserialize(deserializer)?;
        let arr: [i128; 14] = v
            .try_into()
            .map_err(|v: Vec<i128>| D::Error::custom(format!("need 14 coordinates, got {}", v.len())))?;
        Ok(NilpotentElement { coords: arr.map(BigInt::from) })
    }
}

/// Level parameters: level n >= 3 and depth k, with the derived divisors
/// n_l = n / gcd(l, n).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LevelParams {
    pub n: u64,
    pub k: usize,
}

impl LevelParams {
    pub fn new(n: u64, k: usize) -> Self {
        LevelParams { n, k }
    }

    pub fn n_l(&self, l: u64) -> u64 {
        self.n / gcd_u64(l, self.n)
    }

    pub fn n2(&self) -> u64 {
        self.n_l(2)
    }

    pub fn n6(&self) -> u64 {
        self.n_l(6)
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd_u64(b, a % b) }
}

fn half_falling(a: &BigInt) -> BigInt {
    // a(a-1)/2, always integral
    let prod = a * (a - BigInt::one());
    exact_div(&prod, 2)
}

/// Divides by a constant, asserting exactness. The power-formula
/// coefficients look fractional but are integral for every input; a failure
/// here means a transcription error.
fn exact_div(a: &BigInt, d: i64) -> BigInt {
    let d = BigInt::from(d);
    let (q, r) = a.div_rem(&d);
    assert!(r.is_zero(), "non-exact division {a} / {d}");
    q
}

impl NilpotentElement {
    pub fn identity() -> Self {
        NilpotentElement { coords: Default::default() }
    }

    pub fn from_i64(v: [i64; 14]) -> Self {
        NilpotentElement { coords: v.map(BigInt::from) }
    }

    pub fn is_identity(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinate i (1-based, matching the i_1..i_14 naming).
    pub fn i(&self, idx: usize) -> &BigInt {
        &self.coords[idx - 1]
    }

    /// Normal-form product a * b.
    pub fn mul(&self, b: &NilpotentElement) -> NilpotentElement {
        let i = &self.coords;
        let j = &b.coords;
        let (i1, i2, i3, i4, i5, i6) = (&i[0], &i[1], &i[2], &i[3], &i[4], &i[5]);
        let (j1, j2, j3) = (&j[0], &j[1], &j[2]);
        let mut k: [BigInt; 14] = Default::default();
        k[0] = i1 + j1;
        k[1] = i2 + j2;
        k[2] = i3 + j3;
        k[3] = i4 + &j[3] - i2 * j1;
        k[4] = i5 + &j[4] - i3 * j2;
        k[5] = i6 + &j[5] - i3 * j1;
        k[6] = &i[6] + &j[6] + i4 * j1 - half_falling(j1) * i2;
        k[7] = &i[7] + &j[7] + i4 * j2 - half_falling(i2) * j1 - i2 * j1 * j2;
        k[8] = &i[8] + &j[8] + i4 * j3 + i6 * j2 - i2 * i3 * j1 - i2 * j1 * j3 - i3 * j1 * j2;
        k[9] = &i[9] + &j[9] + i5 * j1 + i6 * j2 - i3 * j1 * j2;
        k[10] = &i[10] + &j[10] + i5 * j2 - half_falling(j2) * i3;
        k[11] = &i[11] + &j[11] + i5 * j3 - half_falling(i3) * j2 - i3 * j2 * j3;
        k[12] = &i[12] + &j[12] + i6 * j1 - half_falling(j1) * i3;
        k[13] = &i[13] + &j[13] + i6 * j3 - half_falling(i3) * j1 - i3 * j1 * j3;
        NilpotentElement { coords: k }
    }

    /// n-th power by the closed-form power law. The half- and
    /// twelfth-looking coefficients are grouped so every division is exact.
    pub fn pow(&self, n: i64) -> NilpotentElement {
        if n < 0 {
            return self.inverse().pow(-n);
        }
        let nn = BigInt::from(n);
        let i = &self.coords;
        let (i1, i2, i3, i4, i5, i6) = (&i[0], &i[1], &i[2], &i[3], &i[4], &i[5]);
        // a = (n-1)n/2, b = (n-1)n(2n-1)
        let a = half_falling(&nn);
        let two_n_minus_1 = BigInt::from(2) * &nn - BigInt::one();
        let four_n_plus_1 = BigInt::from(4) * &nn + BigInt::one();
        let b = (&nn - BigInt::one()) * &nn * &two_n_minus_1;
        let three = BigInt::from(3);
        // deg-3 corrections of the shapes
        //   -b/12 u^2 v + (n-1)n/4 uv   = (n-1)n uv (3 - (2n-1)u) / 12
        //   -b/6 u v^2 + (n-1)n/4 uv - (n-1)n/4 uv^2
        //                               = (n-1)n uv (3 - (4n+1)v) / 12
        let nn1 = (&nn - BigInt::one()) * &nn;
        let corr_sq_first = |u: &BigInt, v: &BigInt| -> BigInt {
            exact_div(&(&nn1 * u * v * (&three - &two_n_minus_1 * u)), 12)
        };
        let corr_sq_second = |u: &BigInt, v: &BigInt| -> BigInt {
            exact_div(&(&nn1 * u * v * (&three - &four_n_plus_1 * v)), 12)
        };
        let mut k: [BigInt; 14] = Default::default();
        k[0] = &nn * i1;
        k[1] = &nn * i2;
        k[2] = &nn * i3;
        k[3] = &nn * i4 - &a * i2 * i1;
        k[4] = &nn * i5 - &a * i3 * i2;
        k[5] = &nn * i6 - &a * i3 * i1;
        k[6] = &nn * &i[6] + &a * i4 * i1 + corr_sq_first(i1, i2);
        k[7] = &nn * &i[7] + &a * i4 * i2 + corr_sq_second(i1, i2);
        k[8] = &nn * &i[8] + &a * i4 * i3 + &a * i6 * i2
            - exact_div(&(&b * i3 * i1 * i2), 3)
            - &a * i1 * i2 * i3;
        k[9] = &nn * &i[9] + &a * i5 * i1 + &a * i6 * i2 - exact_div(&(&b * i3 * i1 * i2), 6);
        k[10] = &nn * &i[10] + &a * i5 * i2 + corr_sq_first(i2, i3);
        k[11] = &nn * &i[11] + &a * i5 * i3 + corr_sq_second(i2, i3);
        k[12] = &nn * &i[12] + &a * i6 * i1 + corr_sq_first(i1, i3);
        k[13] = &nn * &i[13] + &a * i6 * i3 + corr_sq_second(i1, i3);
        NilpotentElement { coords: k }
    }

    /// Inverse, solved level by level from mul(a, x) = identity; degree-1
    /// coordinates first, then degree 2, then degree 3.
    pub fn inverse(&self) -> NilpotentElement {
        let mut x = NilpotentElement::identity();
        for idx in 0..3 {
            x.coords[idx] = -&self.coords[idx];
        }
        let p = self.mul(&x);
        for idx in 3..6 {
            x.coords[idx] = -&p.coords[idx];
        }
        let p = self.mul(&x);
        for idx in 6..14 {
            x.coords[idx] = -&p.coords[idx];
        }
        debug_assert!(self.mul(&x).is_identity());
        x
    }

    /// The word spelling out the normal form.
    pub fn normal_form_word(&self) -> GroupWord {
        let x = || GroupWord::gen("x", 1);
        let y = || GroupWord::gen("y", 1);
        let z = || GroupWord::gen("z", 1);
        let r = || GroupWord::comm(x(), y());
        let s = || GroupWord::comm(y(), z());
        let t = || GroupWord::comm(x(), z());
        let basis: [GroupWord; 14] = [
            x(),
            y(),
            z(),
            r(),
            s(),
            t(),
            GroupWord::comm(r(), x()),
            GroupWord::comm(r(), y()),
            GroupWord::comm(r(), z()),
            GroupWord::comm(s(), x()),
            GroupWord::comm(s(), y()),
            GroupWord::comm(s(), z()),
            GroupWord::comm(t(), x()),
            GroupWord::comm(t(), z()),
        ];
        let mut w = GroupWord::empty();
        for (b, c) in basis.iter().zip(&self.coords) {
            let e = i64::try_from(c).expect("normal-form exponent exceeds i64");
            w = w.concat(b.pow(e));
        }
        w.normalized()
    }

    /// The Magnus series of the element (via the normal-form factors), with
    /// exponents allowed to be arbitrary big integers.
    pub fn to_series(&self) -> TruncatedSeries {
        let v = 3;
        let x = TruncatedSeries::generator(v, 0);
        let y = TruncatedSeries::generator(v, 1);
        let z = TruncatedSeries::generator(v, 2);
        let r = TruncatedSeries::commutator(&x, &y);
        let s = TruncatedSeries::commutator(&y, &z);
        let t = TruncatedSeries::commutator(&x, &z);
        let basis = [
            x.clone(),
            y.clone(),
            z.clone(),
            r.clone(),
            s.clone(),
            t.clone(),
            TruncatedSeries::commutator(&r, &x),
            TruncatedSeries::commutator(&r, &y),
            TruncatedSeries::commutator(&r, &z),
            TruncatedSeries::commutator(&s, &x),
            TruncatedSeries::commutator(&s, &y),
            TruncatedSeries::commutator(&s, &z),
            TruncatedSeries::commutator(&t, &x),
            TruncatedSeries::commutator(&t, &z),
        ];
        let mut out = TruncatedSeries::one(v);
        for (b, c) in basis.iter().zip(&self.coords) {
            out = out.mul(&b.pow_big(c));
        }
        out
    }

    /// Membership in G^(depth),n / G^(depth): the congruence test.
    ///
    /// Depth 4 is the full congruence description; depth 3 restricts to the
    /// class-2 data; depth 2 is the abelianization.
    pub fn is_member(&self, n: u64, depth: usize) -> Result<bool, Error> {
        let p = LevelParams::new(n, depth.saturating_sub(1));
        let div = |c: &BigInt, m: u64| -> bool {
            m <= 1 || (c % BigInt::from(m)).is_zero()
        };
        match depth {
            2 => Ok((0..3).all(|idx| div(&self.coords[idx], n))),
            3 => Ok((0..3).all(|idx| div(&self.coords[idx], n))
                && (3..6).all(|idx| div(&self.coords[idx], p.n2()))),
            4 => Ok((0..3).all(|idx| div(&self.coords[idx], n))
                && (3..6).all(|idx| div(&self.coords[idx], p.n2()))
                && (6..14).all(|idx| div(&self.coords[idx], p.n6()))
                && div(&(&self.coords[8] + &self.coords[9]), p.n2())),
            d => Err(Error::UnsupportedDepth(d)),
        }
    }
}

/// The congruence description of the power subgroup G^(depth),n / G^(4),
/// as a lattice in Z^14 (normal-form coordinate order).
///
/// Depth 4 is the stated description; depths 2 and 3 leave the deeper
/// coordinates unconstrained.
pub fn congruence_lattice(n: u64, depth: usize) -> Result<crate::lattice::IntegerLattice, Error> {
    let p = LevelParams::new(n, depth.saturating_sub(1));
    let row = |idx: usize, m: u64| -> Vec<i64> {
        let mut r = vec![0i64; 14];
        r[idx] = m as i64;
        r
    };
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let free_from = match depth {
        2 => 3,
        3 => 6,
        4 => 14,
        d => return Err(Error::UnsupportedDepth(d)),
    };
    for idx in 0..3 {
        rows.push(row(idx, n));
    }
    for idx in 3..6 {
        rows.push(row(idx, if depth >= 3 { p.n2() } else { 1 }));
    }
    if depth == 4 {
        for idx in [6, 7, 10, 11, 12, 13] {
            rows.push(row(idx, p.n6()));
        }
        // coordinates 9 and 10 are coupled: both in n6 Z with sum in n2 Z
        rows.push(row(9, p.n2()));
        let mut coupled = vec![0i64; 14];
        coupled[8] = p.n6() as i64;
        coupled[9] = -(p.n6() as i64);
        rows.push(coupled);
    } else {
        for idx in free_from..14 {
            rows.push(row(idx, 1));
        }
    }
    Ok(crate::lattice::IntegerLattice::span_i64(14, &rows))
}

/// Evaluates a word over {x, y, z} into normal-form coordinates.
pub fn eval_word(word: &GroupWord) -> Result<NilpotentElement, Error> {
    let mut out = NilpotentElement::identity();
    for l in &word.letters {
        let factor = match l {
            Letter::Gen(g, e) => {
                let base = match g.as_str() {
                    "x" => NilpotentElement::from_i64([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
                    "y" => NilpotentElement::from_i64([0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
                    "z" => NilpotentElement::from_i64([0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]),
                    other => return Err(Error::UnknownGenerator(other.to_string())),
                };
                base.pow(*e)
            }
            Letter::Comm(u, v, e) => {
                let a = eval_word(u)?;
                let b = eval_word(v)?;
                a.inverse().mul(&b.inverse()).mul(&a).mul(&b).pow(*e)
            }
        };
        out = out.mul(&factor);
    }
    Ok(out)
}

/// Cross-validates the coordinate arithmetic against the Magnus oracle:
/// true iff the series of the word equals the series of its normal form.
pub fn oracle_agreement(word: &GroupWord) -> Result<bool, Error> {
    let series = crate::magnus::magnus_eval(word, &["x", "y", "z"])?;
    let elt = eval_word(word)?;
    Ok(series == elt.to_series())
}

/// Outcome of a randomized identity sweep; `failures` is empty on a healthy
/// build.
#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies the commutator identities underlying the multiplication law on
/// random words, via the series oracle:
/// (1) commutators of deep subgroups land deeper: a word in gamma_k
///     commuted with one in gamma_l lies in gamma_(k+l);
/// (2) [a,b] = [b,a]^-1;
/// (3) [a,bc] = [a,c][a,b][[a,b],c];
/// (4) [ab,c] = [a,c][[a,c],b][b,c];
/// (5) [a^i,b^j] = [a,b]^(ij) [[a,b],a]^(ij(i-1)/2) [[a,b],b]^(ij(j-1)/2)
///     modulo gamma_4.
pub fn check_identities(trials: usize, seed: u64) -> IdentityReport {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let xyz: &[&str] = &["x", "y", "z"];
    let mut failures = Vec::new();
    let mut checks = 0usize;

    fn rand_word(rng: &mut impl Rng, len: usize) -> GroupWord {
        let names = ["x", "y", "z"];
        let mut w = GroupWord::empty();
        for _ in 0..len {
            let g = names[rng.gen_range(0..3)];
            let e = [-2i64, -1, 1, 2][rng.gen_range(0..4)];
            w = w.concat(GroupWord::gen(g, e));
        }
        w
    }

    for _ in 0..trials {
        let (la, lb, lc) =
            (rng.gen_range(1..=4), rng.gen_range(1..=4), rng.gen_range(1..=4));
        let a = rand_word(&mut rng, la);
        let b = rand_word(&mut rng, lb);
        let c = rand_word(&mut rng, lc);

        let mut pairs: Vec<(&str, GroupWord, GroupWord)> = Vec::new();

        // (1): commuting two lower-central-depth-2 elements lands in depth 4,
        // which is trivial at class 3.
        let w = GroupWord::comm(
            GroupWord::comm(a.clone(), b.clone()),
            GroupWord::comm(b.clone(), c.clone()),
        );
        pairs.push(("(1)", w, GroupWord::empty()));

        // (2): [a,b] = [b,a]^-1
        pairs.push((
            "(2)",
            GroupWord::comm(a.clone(), b.clone()),
            GroupWord::comm(b.clone(), a.clone()).inverse(),
        ));

        // (3): [a,bc] = [a,c][a,b][[a,b],c]
        pairs.push((
            "(3)",
            GroupWord::comm(a.clone(), b.clone().concat(c.clone())),
            GroupWord::comm(a.clone(), c.clone())
                .concat(GroupWord::comm(a.clone(), b.clone()))
                .concat(GroupWord::comm(GroupWord::comm(a.clone(), b.clone()), c.clone())),
        ));

        // (4): [ab,c] = [a,c][[a,c],b][b,c]
        pairs.push((
            "(4)",
            GroupWord::comm(a.clone().concat(b.clone()), c.clone()),
            GroupWord::comm(a.clone(), c.clone())
                .concat(GroupWord::comm(GroupWord::comm(a.clone(), c.clone()), b.clone()))
                .concat(GroupWord::comm(b.clone(), c.clone())),
        ));

        // (5): [a^i,b^j] = [a,b]^(ij) [[a,b],a]^(ij(i-1)/2) [[a,b],b]^(ij(j-1)/2)
        let i = rng.gen_range(-4i64..=4);
        let j = rng.gen_range(-4i64..=4);
        let ab = || GroupWord::comm(a.clone(), b.clone());
        pairs.push((
            "(5)",
            GroupWord::comm(a.clone().pow(i), b.clone().pow(j)),
            ab().pow(i * j)
                .concat(GroupWord::comm(ab(), a.clone()).pow(i * j * (i - 1) / 2))
                .concat(GroupWord::comm(ab(), b.clone()).pow(i * j * (j - 1) / 2)),
        ));

        for (name, lhs, rhs) in pairs {
            checks += 1;
            let l = crate::magnus::magnus_eval(&lhs, xyz).expect("closed alphabet");
            let r = crate::magnus::magnus_eval(&rhs, xyz).expect("closed alphabet");
            if l != r {
                failures.push(format!("identity {name}: {lhs} != {rhs}"));
            }
        }
    }
    IdentityReport { trials, checks, failures }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(v: [i64; 14]) -> NilpotentElement {
        NilpotentElement::from_i64(v)
    }

    fn rand_elt(rng: &mut impl Rng) -> NilpotentElement {
        let mut v = [0i64; 14];
        for c in &mut v {
            *c = rng.gen_range(-9..=9);
        }
        e(v)
    }

    #[test]
    fn identity_and_inverse_of_r() {
        let a = e([2, -1, 3, 0, 5, 0, 0, 1, 0, 0, 0, -2, 0, 0]);
        assert_eq!(NilpotentElement::identity().mul(&a), a);
        assert_eq!(a.mul(&NilpotentElement::identity()), a);
        let r = e([0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let rinv = e([0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(r.mul(&rinv).is_identity());
        assert_eq!(r.inverse(), rinv);
    }

    #[test]
    fn yx_equals_xy_rinv() {
        let x = e([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let y = e([0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(y.mul(&x), e([1, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn paper_element_a_at_n3() {
        let x = e([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let xinv_y = e([-1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let yinv = e([0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let a = x.pow(3).mul(&xinv_y.pow(3)).mul(&yinv.pow(3));
        assert_eq!(a, e([0, 0, 0, 3, 0, 0, -4, -4, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn pow_examples() {
        let a = e([1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(a.pow(0), NilpotentElement::identity());
        assert_eq!(a.pow(3), e([3, 3, 0, -3, 0, 0, -1, -5, 0, 0, 0, 0, 0, 0]));
        let x = e([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        for n in [-5, -1, 0, 1, 7, 20] {
            let mut expect = [0i64; 14];
            expect[0] = n;
            assert_eq!(x.pow(n), e(expect));
        }
    }

    #[test]
    fn pow_matches_iterated_mul() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..60 {
            let a = rand_elt(&mut rng);
            let mut acc = NilpotentElement::identity();
            for n in 0..=12i64 {
                assert_eq!(a.pow(n), acc, "n={n}");
                assert_eq!(a.pow(-n), acc.inverse(), "n=-{n}");
                acc = acc.mul(&a);
            }
        }
    }

    #[test]
    fn associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..500 {
            let (a, b, c) = (rand_elt(&mut rng), rand_elt(&mut rng), rand_elt(&mut rng));
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn inverse_brute_force_case() {
        let a = e([1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        let inv = a.inverse();
        assert_eq!(inv, e([-1, -1, -1, -1, -1, -1, 1, 1, 1, 1, 1, 1, 1, 1]));
        assert!(a.mul(&inv).is_identity());
        assert!(inv.mul(&a).is_identity());
    }

    #[test]
    fn eval_word_basis() {
        let x = eval_word(&parse_word("x").unwrap()).unwrap();
        assert_eq!(x, e([1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
        let r = eval_word(&parse_word("[x,y]").unwrap()).unwrap();
        assert_eq!(r, e([0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]));
        let rz = eval_word(&parse_word("[[x,y],z]").unwrap()).unwrap();
        assert_eq!(rz, e([0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn eval_word_homomorphic() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let u = crate::testutil::random_word(&mut rng, &["x", "y", "z"], 5);
            let v = crate::testutil::random_word(&mut rng, &["x", "y", "z"], 5);
            let lhs = eval_word(&u.clone().concat(v.clone())).unwrap();
            let rhs = eval_word(&u).unwrap().mul(&eval_word(&v).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn normal_form_word_roundtrip() {
        let mut rng = ChaCha8Rng::seed_from_u64(19);
        for _ in 0..40 {
            let a = rand_elt(&mut rng);
            assert_eq!(eval_word(&a.normal_form_word()).unwrap(), a);
        }
    }

    #[test]
    fn jacobi_relation() {
        // [[x,z],y] = [[x,y],z] [[y,z],x] in coordinates
        let lhs = eval_word(&parse_word("[[x,z],y]").unwrap()).unwrap();
        let rhs = eval_word(&parse_word("[[x,y],z] [[y,z],x]").unwrap()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_agreement_samples() {
        assert!(oracle_agreement(&parse_word("x y x^-1 y^-1 [y,x]").unwrap()).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let w = crate::testutil::random_word(&mut rng, &["x", "y", "z"], 8);
            assert!(oracle_agreement(&w).unwrap(), "word {w}");
        }
    }

    #[test]
    fn membership_examples() {
        for n in [3u64, 5, 6, 12] {
            let mut v = [0i64; 14];
            v[0] = n as i64;
            assert!(e(v).is_member(n, 4).unwrap());
        }
        // n=6: n2=3, n6=1; i9=1, i10=0 fails the coupled congruence
        let mut v = [0i64; 14];
        v[8] = 1;
        assert!(!e(v).is_member(6, 4).unwrap());
        for depth in [2, 3, 4] {
            assert!(NilpotentElement::identity().is_member(7, depth).unwrap());
        }
        assert!(matches!(
            NilpotentElement::identity().is_member(5, 5),
            Err(Error::UnsupportedDepth(5))
        ));
    }

    #[test]
    fn level_params() {
        let p = LevelParams::new(12, 3);
        assert_eq!(p.n2(), 6);
        assert_eq!(p.n6(), 2);
        let p = LevelParams::new(5, 2);
        assert_eq!(p.n2(), 5);
        assert_eq!(p.n6(), 5);
    }
}
