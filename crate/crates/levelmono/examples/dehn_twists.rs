//! Dehn twists acting on the genus-g surface group, and the membership
//! question behind boundary monodromy: which twist powers act trivially on
//! the nilpotent level structure.

use levelmono::parse_word;
use levelmono::surface::{
    check_displacement, endo_pow, required_divisor, twist_bridge, twist_nonsep, twist_power,
    MembershipVerdict, TwistKind, TwistSpec,
};

fn main() {
    // The non-separating twist sends a-2 to a2 a-2 and fixes the rest.
    let d = twist_nonsep(2).unwrap();
    let w = parse_word("a-2").unwrap();
    println!("nonsep twist: a-2 -> {}", d.apply(&w).unwrap().normalized());

    // The separating twist conjugates one side by the curve [a1,a-1].
    let d = twist_bridge(2, 1).unwrap();
    let w = parse_word("a2").unwrap();
    println!("bridge twist: a2  -> {}", d.apply(&w).unwrap().normalized());

    // Iterating the endomorphism m times equals the closed-form power.
    let spec = TwistSpec { kind: TwistKind::Cutpair, g: 3, g1: 1, m: 3 };
    let one = twist_power(&TwistSpec { m: 1, ..spec }).unwrap();
    let cubed = twist_power(&spec).unwrap();
    let w = parse_word("a-2").unwrap();
    let lhs = endo_pow(&one, 3).unwrap().apply(&w).unwrap();
    let rhs = cubed.apply(&w).unwrap();
    println!(
        "cutpair composite, iterate vs power -> {}",
        lhs.concat(rhs.inverse()).is_freely_trivial()
    );

    // Divisibility thresholds for trivial action on the depth-(k+1)
    // structure, and the verdicts that certify them both ways.
    println!();
    println!("kind      g g1  k  n   threshold   m  verdict");
    for (kind, g, g1) in [
        (TwistKind::Nonsep, 2, 0),
        (TwistKind::Bridge, 2, 1),
        (TwistKind::Bridge, 3, 2),
        (TwistKind::Cutpair, 3, 1),
    ] {
        for (k, n) in [(2usize, 4u64), (3, 4), (3, 6)] {
            let base = TwistSpec { kind, g, g1, m: 0 };
            let d = required_divisor(&base, k, n).unwrap();
            for m in [1, d as i64] {
                let spec = TwistSpec { m, ..base };
                let verdict = match check_displacement(&spec, k, n).unwrap() {
                    MembershipVerdict::Member { .. } => "Member",
                    MembershipVerdict::NotMember { .. } => "NotMember",
                    MembershipVerdict::Unknown => "Unknown",
                };
                println!(
                    "{:<9} {g} {g1}  {k}  {n}   {d:<9}  {m:>2} {verdict}",
                    format!("{kind:?}").to_lowercase()
                );
            }
        }
    }
}
