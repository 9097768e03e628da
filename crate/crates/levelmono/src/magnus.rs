//! Truncated Magnus series: the independent oracle for class-3 free
//! nilpotent quotients.
//!
//! A generator g maps to 1 + X_g in the free associative algebra truncated
//! at degree 4; the map is faithful on F/gamma_4, so two words are equal in
//! the class-3 quotient iff their series agree.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::word::{GroupWord, Letter};

/// Exact-integer coefficients of a noncommutative polynomial of degree <= 3
/// in `nvars` variables, indexed by words over the variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    nvars: usize,
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn dim(nvars: usize) -> usize {
        1 + nvars + nvars * nvars + nvars * nvars * nvars
    }

    pub fn zero(nvars: usize) -> Self {
        TruncatedSeries { nvars, coeffs: vec![BigInt::zero(); Self::dim(nvars)] }
    }

    pub fn one(nvars: usize) -> Self {
        let mut s = Self::zero(nvars);
        s.coeffs[0] = BigInt::one();
        s
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Index of the monomial with the given variable sequence (length <= 3).
    pub fn monomial_index(nvars: usize, word: &[usize]) -> usize {
        let v = nvars;
        match *word {
            [] => 0,
            [i] => 1 + i,
            [i, j] => 1 + v + i * v + j,
            [i, j, k] => 1 + v + v * v + i * v * v + j * v + k,
            _ => panic!("monomial degree > 3"),
        }
    }

    /// The variable sequence of the monomial at `idx`.
    pub fn monomial_at(nvars: usize, idx: usize) -> Vec<usize> {
        let v = nvars;
        if idx == 0 {
            vec![]
        } else if idx < 1 + v {
            vec![idx - 1]
        } else if idx < 1 + v + v * v {
            let r = idx - 1 - v;
            vec![r / v, r % v]
        } else {
            let r = idx - 1 - v - v * v;
            vec![r / (v * v), (r / v) % v, r % v]
        }
    }

    pub fn coeff(&self, word: &[usize]) -> &BigInt {
        &self.coeffs[Self::monomial_index(self.nvars, word)]
    }

    pub fn coeff_mut(&mut self, word: &[usize]) -> &mut BigInt {
        &mut self.coeffs[Self::monomial_index(self.nvars, word)]
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The image 1 + X_i of generator i.
    pub fn generator(nvars: usize, i: usize) -> Self {
        let mut s = Self::one(nvars);
        *s.coeff_mut(&[i]) = BigInt::one();
        s
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        assert_eq!(self.nvars, other.nvars);
        let v = self.nvars;
        let mut out = Self::zero(v);
        for (ia, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let wa = Self::monomial_at(v, ia);
            let max_b = 3 - wa.len();
            for (ib, cb) in other.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let wb = Self::monomial_at(v, ib);
                if wb.len() > max_b {
                    continue;
                }
                let mut w = wa.clone();
                w.extend_from_slice(&wb);
                *out.coeff_mut(&w) += ca * cb;
            }
        }
        out
    }

    /// Inverse of a unit with constant term 1, by the Neumann series of the
    /// augmentation part.
    pub fn inverse(&self) -> TruncatedSeries {
        assert!(self.coeffs[0].is_one(), "inverse requires constant term 1");
        let mut n = self.clone();
        n.coeffs[0] = BigInt::zero();
        let n2 = n.mul(&n);
        let n3 = n2.mul(&n);
        let mut out = Self::one(self.nvars);
        for (dst, src) in out.coeffs.iter_mut().zip(&n.coeffs) {
            *dst -= src;
        }
        for (dst, src) in out.coeffs.iter_mut().zip(&n2.coeffs) {
            *dst += src;
        }
        for (dst, src) in out.coeffs.iter_mut().zip(&n3.coeffs) {
            *dst -= src;
        }
        out
    }

    pub fn pow(&self, e: i64) -> TruncatedSeries {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut result = Self::one(self.nvars);
        let mut sq = base;
        let mut rem = e.unsigned_abs();
        while rem > 0 {
            if rem & 1 == 1 {
                result = result.mul(&sq);
            }
            rem >>= 1;
            if rem > 0 {
                sq = sq.mul(&sq);
            }
        }
        result
    }

    /// Power with an arbitrary big-integer exponent, by square and multiply.
    pub fn pow_big(&self, e: &num_bigint::BigInt) -> TruncatedSeries {
        use num_integer::Integer;
        use num_traits::Signed;
        let b = if e.is_negative() { self.inverse() } else { self.clone() };
        let mut rem = e.abs();
        let mut result = Self::one(self.nvars);
        let mut sq = b;
        let two = BigInt::from(2);
        while !rem.is_zero() {
            if rem.is_odd() {
                result = result.mul(&sq);
            }
            rem /= &two;
            if !rem.is_zero() {
                sq = sq.mul(&sq);
            }
        }
        result
    }

    pub fn commutator(a: &TruncatedSeries, b: &TruncatedSeries) -> TruncatedSeries {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }
}

/// Evaluates a word in the truncated group algebra, generator g to 1 + X_g.
pub fn magnus_eval(word: &GroupWord, alphabet: &[&str]) -> Result<TruncatedSeries, Error> {
    let v = alphabet.len();
    let index = |name: &str| -> Result<usize, Error> {
        alphabet
            .iter()
            .position(|a| *a == name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    };
    eval_rec(word, v, &index)
}

fn eval_rec(
    word: &GroupWord,
    nvars: usize,
    index: &dyn Fn(&str) -> Result<usize, Error>,
) -> Result<TruncatedSeries, Error> {
    let mut out = TruncatedSeries::one(nvars);
    for l in &word.letters {
        let factor = match l {
            Letter::Gen(g, e) => TruncatedSeries::generator(nvars, index(g)?).pow(*e),
            Letter::Comm(u, v, e) => {
                let su = eval_rec(u, nvars, index)?;
                let sv = eval_rec(v, nvars, index)?;
                TruncatedSeries::commutator(&su, &sv).pow(*e)
            }
        };
        out = out.mul(&factor);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;
    use num_traits::ToPrimitive;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const XYZ: &[&str] = &["x", "y", "z"];

    #[test]
    fn empty_word_is_one() {
        let s = magnus_eval(&GroupWord::empty(), XYZ).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn commutator_leading_term() {
        // [x,y] -> 1 + (XY - YX) + higher order
        let s = magnus_eval(&parse_word("[x,y]").unwrap(), XYZ).unwrap();
        assert_eq!(s.coeff(&[]).to_i64(), Some(1));
        assert_eq!(s.coeff(&[0]).to_i64(), Some(0));
        assert_eq!(s.coeff(&[1]).to_i64(), Some(0));
        assert_eq!(s.coeff(&[0, 1]).to_i64(), Some(1));
        assert_eq!(s.coeff(&[1, 0]).to_i64(), Some(-1));
        assert_eq!(s.coeff(&[0, 0]).to_i64(), Some(0));
    }

    #[test]
    fn inverse_of_generator() {
        let g = TruncatedSeries::generator(3, 0);
        assert!(g.mul(&g.inverse()).is_one());
        assert!(g.inverse().mul(&g).is_one());
        // 1 - X + X^2 - X^3
        let inv = g.inverse();
        assert_eq!(inv.coeff(&[0]).to_i64(), Some(-1));
        assert_eq!(inv.coeff(&[0, 0]).to_i64(), Some(1));
        assert_eq!(inv.coeff(&[0, 0, 0]).to_i64(), Some(-1));
    }

    #[test]
    fn trivial_in_class_three() {
        // gamma_4 word: [[[x,y],z],x] maps to 1.
        let s = magnus_eval(&parse_word("[[[x,y],z],x]").unwrap(), XYZ).unwrap();
        assert!(s.is_one());
        // gamma_3 word does not.
        let s = magnus_eval(&parse_word("[[x,y],z]").unwrap(), XYZ).unwrap();
        assert!(!s.is_one());
    }

    use crate::testutil::random_word;

    #[test]
    fn homomorphic_on_random_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let (lu, lv) = (rng.gen_range(0..=6), rng.gen_range(0..=6));
            let u = random_word(&mut rng, XYZ, lu);
            let v = random_word(&mut rng, XYZ, lv);
            let uv = u.clone().concat(v.clone());
            let lhs = magnus_eval(&uv, XYZ).unwrap();
            let rhs = magnus_eval(&u, XYZ).unwrap().mul(&magnus_eval(&v, XYZ).unwrap());
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn unknown_generator_is_reported() {
        assert!(matches!(
            magnus_eval(&parse_word("x w").unwrap(), XYZ),
            Err(Error::UnknownGenerator(_))
        ));
    }
}
