//! Exact arithmetic in the free class-3 nilpotent group on x, y, z:
//! evaluate words to normal-form coordinates, multiply, take powers, and
//! cross-check against the truncated-series oracle.

use levelmono::nilpotent::{eval_word, oracle_agreement, NilpotentElement};
use levelmono::parse_word;

fn main() {
    let a = eval_word(&parse_word("x y [x,y]").unwrap()).unwrap();
    let b = eval_word(&parse_word("z^-1 [y,z]^2").unwrap()).unwrap();

    println!("a = x y [x,y]        -> {}", serde_json::to_string(&a).unwrap());
    println!("b = z^-1 [y,z]^2     -> {}", serde_json::to_string(&b).unwrap());

    let ab = a.mul(&b);
    println!("a * b                -> {}", serde_json::to_string(&ab).unwrap());
    println!("normal form of a * b -> {}", ab.normal_form_word());

    // The closed-form power formula agrees with iterated multiplication.
    let mut acc = NilpotentElement::identity();
    for m in 0..=6 {
        assert_eq!(a.pow(m), acc);
        acc = acc.mul(&a);
    }
    println!("a^5                  -> {}", serde_json::to_string(&a.pow(5)).unwrap());
    println!("a^-1 * a == 1        -> {}", a.inverse().mul(&a).is_identity());

    // Every word evaluates identically under the coordinate formulas and
    // the faithful series embedding.
    for text in ["[x,[y,z]] x^3", "[[x,y],z]^-2 y", "x y x^-1 y^-1 [y,x]"] {
        let w = parse_word(text).unwrap();
        println!("oracle agrees on {text:<22} -> {}", oracle_agreement(&w).unwrap());
    }

    // Membership in the level subgroup generated by n-th powers and
    // 4-fold commutators: x^n is in, x is not.
    let xn = eval_word(&parse_word("x^6").unwrap()).unwrap();
    let x = eval_word(&parse_word("x").unwrap()).unwrap();
    println!("x^6 in F(4),6        -> {}", xn.is_member(6, 4).unwrap());
    println!("x   in F(4),6        -> {}", x.is_member(6, 4).unwrap());
}
