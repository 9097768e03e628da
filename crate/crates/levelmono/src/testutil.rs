//! Shared helpers for unit tests.

use rand::Rng;

use crate::word::GroupWord;

pub fn random_word(rng: &mut impl Rng, alphabet: &[&str], len: usize) -> GroupWord {
    let mut w = GroupWord::empty();
    for _ in 0..len {
        let g = alphabet[rng.gen_range(0..alphabet.len())];
        let e = loop {
            let e = rng.gen_range(-3i64..=3);
            if e != 0 {
                break e;
            }
        };
        w = w.concat(GroupWord::gen(g, e));
    }
    w
}

/// Random word that may contain commutator subterms one level deep.
pub fn random_word_with_commutators(
    rng: &mut impl Rng,
    alphabet: &[&str],
    len: usize,
) -> GroupWord {
    let mut w = GroupWord::empty();
    for _ in 0..len {
        if rng.gen_bool(0.25) {
            let (lu, lv) = (rng.gen_range(1..=2), rng.gen_range(1..=2));
            let u = random_word(rng, alphabet, lu);
            let v = random_word(rng, alphabet, lv);
            let e = rng.gen_range(-2i64..=2);
            if e != 0 {
                let mut c = GroupWord::comm(u, v);
                if let crate::word::Letter::Comm(_, _, ex) = &mut c.letters[0] {
                    *ex = e;
                }
                w = w.concat(c);
            }
        } else {
            w = w.concat(random_word(rng, alphabet, 1));
        }
    }
    w
}
