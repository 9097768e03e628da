//! The subgroup generated by all n-th powers inside the free class-3
//! nilpotent group: its coordinate lattice is cut out by explicit
//! congruences, and an independent word-saturation oracle reproduces it.

use levelmono::hall::{lattice_normal_from_hall3, membership_subgroup, power_subgroup_lattice};
use levelmono::magnus::magnus_eval;
use levelmono::nilpotent::congruence_lattice;
use levelmono::parse_word;

fn main() {
    for n in [3u64, 4, 6] {
        // Predicted lattice: deg-1 exponents in nZ, deg-2 in n/gcd(2,n) Z,
        // deg-3 in n/gcd(6,n) Z, plus one coupled pair of deg-3 slots.
        let predicted = congruence_lattice(n, 4).unwrap();

        // Oracle: sift n-th powers of all short words and saturate under
        // commutators, then read off the coordinate lattice.
        let saturated = lattice_normal_from_hall3(&power_subgroup_lattice(3, n, 4).unwrap());

        println!("n = {n}: saturation oracle matches congruences -> {}", saturated == predicted);
        for row in predicted.rows().iter().take(4) {
            let entries: Vec<String> = row.iter().map(|c| c.to_string()).collect();
            println!("    [{}]", entries.join(", "));
        }
        println!("    ... ({} HNF rows)", predicted.rows().len());
    }

    // The same machinery at higher rank: the subgroup of the free group on
    // six generators relevant to genus-3 twist checks.
    let sub = membership_subgroup(6, 4, 3).unwrap();
    let alphabet = ["a1", "a-1", "a2", "a-2", "a3", "a-3"];
    for text in ["a1^4", "[a1,a2]^2", "[a1,a2]", "[[a1,a2],a3]^2"] {
        let w = parse_word(text).unwrap();
        let s = magnus_eval(&w, &alphabet).unwrap();
        println!("{text:<14} in F(3),4 of rank 6 -> {}", sub.contains(&s));
    }
}
