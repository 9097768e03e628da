//! Surface group presentations, Dehn twist endomorphisms, reduction
//! homomorphisms onto a three-generator free group, and membership
//! certificates for twist displacements.
//!
//! Generators of the genus-g surface group are named `a1, a-1, ..., ag,
//! a-g`, with relator `[a1,a-1]...[ag,a-g]`. A twist around a separating
//! curve (bridge), a non-separating curve, or the composite difference
//! twist of a cut pair acts by the classical substitution tables; the m-th
//! power of the displacement of each generator has a closed form. Whether
//! that displacement lies in the level subgroup `F^(k+1),n` is decided by
//! two one-sided certificate systems: sifting a free-group lift into the
//! rank-2g power subgroup (membership), or pushing the displacement through
//! a catalog reduction homomorphism onto three generators and failing the
//! rank-3 congruences (non-membership).

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::hall::membership_subgroup;
use crate::magnus::magnus_eval;
use crate::nilpotent::{self, IdentityReport};
use crate::word::{GroupWord, Letter};

/// The standard presentation of the fundamental group of a closed
/// orientable genus-g surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurfacePresentation {
    g: u32,
    names: Vec<String>,
}

/// Generator name for index i in -g..=-1 or 1..=g.
pub fn gen_name(i: i64) -> String {
    format!("a{i}")
}

pub fn surface_group(g: u32) -> Result<SurfacePresentation, Error> {
    if g < 2 {
        return Err(Error::GenusTooSmall(g));
    }
    let mut names = Vec::with_capacity(2 * g as usize);
    for i in 1..=g as i64 {
        names.push(gen_name(i));
        names.push(gen_name(-i));
    }
    Ok(SurfacePresentation { g, names })
}

impl SurfacePresentation {
    pub fn genus(&self) -> u32 {
        self.g
    }

    /// Generator names in the fixed order a1, a-1, a2, a-2, ...
    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn alphabet(&self) -> Vec<&str> {
        self.names.iter().map(|s| s.as_str()).collect()
    }

    pub fn generator(&self, i: i64) -> GroupWord {
        assert!(i != 0 && i.unsigned_abs() <= self.g as u64, "generator index out of range");
        GroupWord::gen(&gen_name(i), 1)
    }

    /// The defining relator `[a1,a-1]...[ag,a-g]`.
    pub fn relator(&self) -> GroupWord {
        let mut w = GroupWord::empty();
        for i in 1..=self.g as i64 {
            w = w.concat(GroupWord::comm(self.generator(i), self.generator(-i)));
        }
        w
    }
}

/// `[a1,a-1]...[a_g1,a_-g1]`, the curve a separating twist runs along,
/// seen from the side carrying the first g1 handles.
fn v_word(g1: u32) -> GroupWord {
    let mut w = GroupWord::empty();
    for i in 1..=g1 as i64 {
        w = w.concat(GroupWord::comm(GroupWord::gen(&gen_name(i), 1), GroupWord::gen(&gen_name(-i), 1)));
    }
    w
}

/// The same curve rewritten through the relator from the other side:
/// `([a_{g1+1},a_{-(g1+1)}]...[ag,a-g])^-1`.
fn v_word_rewritten(g: u32, g1: u32) -> GroupWord {
    let mut w = GroupWord::empty();
    for i in g1 as i64 + 1..=g as i64 {
        w = w.concat(GroupWord::comm(GroupWord::gen(&gen_name(i), 1), GroupWord::gen(&gen_name(-i), 1)));
    }
    w.inverse()
}

/// Which curve configuration a twist runs along.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TwistKind {
    /// Separating curve splitting off genus g1.
    Bridge,
    /// Non-separating curve.
    Nonsep,
    /// Difference of the two twists of a cut pair splitting off genus g1.
    Cutpair,
}

/// A twist power to examine: kind, genus, splitting parameter, exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSpec {
    pub kind: TwistKind,
    pub g: u32,
    #[serde(default)]
    pub g1: u32,
    pub m: i64,
}

impl TwistSpec {
    pub fn validate(&self) -> Result<(), Error> {
        if self.g < 2 {
            return Err(Error::GenusTooSmall(self.g));
        }
        match self.kind {
            TwistKind::Bridge => {
                if self.g1 < 1 || self.g1 > self.g - 1 {
                    return Err(Error::BadSplit { g: self.g, g1: self.g1 });
                }
            }
            TwistKind::Cutpair => {
                if self.g1 < 1 || self.g1 > self.g - 2 {
                    return Err(Error::BadSplit { g: self.g, g1: self.g1 });
                }
            }
            TwistKind::Nonsep => {}
        }
        Ok(())
    }

    /// True for a separating curve with a genus-one side.
    pub fn bounds_genus_one(&self) -> bool {
        matches!(self.kind, TwistKind::Bridge) && (self.g1 == 1 || self.g - self.g1 == 1)
    }
}

/// An endomorphism of the surface group given by generator substitution.
#[derive(Debug, Clone)]
pub struct TwistEndomorphism {
    surface: SurfacePresentation,
    images: HashMap<String, GroupWord>,
}

impl TwistEndomorphism {
    pub fn identity(surface: &SurfacePresentation) -> Self {
        let images = surface
            .names
            .iter()
            .map(|n| (n.clone(), GroupWord::gen(n, 1)))
            .collect();
        TwistEndomorphism { surface: surface.clone(), images }
    }

    pub fn image_of(&self, name: &str) -> Option<&GroupWord> {
        self.images.get(name)
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord, Error> {
        w.substitute(&|g| self.images.get(g).cloned())
    }

    /// self after other: apply(compose(e,f), w) = apply(e, apply(f, w)).
    pub fn compose(&self, other: &TwistEndomorphism) -> Result<TwistEndomorphism, Error> {
        let mut images = HashMap::new();
        for (name, w) in &other.images {
            images.insert(name.clone(), self.apply(w)?);
        }
        Ok(TwistEndomorphism { surface: self.surface.clone(), images })
    }

    fn set(&mut self, i: i64, w: GroupWord) {
        self.images.insert(gen_name(i), w);
    }
}

pub fn endo_pow(e: &TwistEndomorphism, m: u64) -> Result<TwistEndomorphism, Error> {
    let mut out = TwistEndomorphism::identity(&e.surface);
    for _ in 0..m {
        out = e.compose(&out)?;
    }
    Ok(out)
}

/// The twist around a separating curve splitting off genus g1: fixes
/// a_{+-i} for i <= g1 and conjugates the rest by the curve.
pub fn twist_bridge(g: u32, g1: u32) -> Result<TwistEndomorphism, Error> {
    let spec = TwistSpec { kind: TwistKind::Bridge, g, g1, m: 1 };
    spec.validate()?;
    let surface = surface_group(g)?;
    let v = v_word(g1);
    let mut e = TwistEndomorphism::identity(&surface);
    for i in g1 as i64 + 1..=g as i64 {
        for s in [i, -i] {
            e.set(s, v.inverse().concat(surface.generator(s)).concat(v.clone()));
        }
    }
    Ok(e)
}

/// The twist around a non-separating curve: a_{-g} picks up a_g.
pub fn twist_nonsep(g: u32) -> Result<TwistEndomorphism, Error> {
    let surface = surface_group(g)?;
    let mut e = TwistEndomorphism::identity(&surface);
    e.set(-(g as i64), surface.generator(g as i64).concat(surface.generator(-(g as i64))));
    Ok(e)
}

/// The two twists of a cut pair splitting off genus g1, in order (around
/// the curve through the handles, around the curve freely homotopic to
/// a_{g1+1}).
pub fn twist_cutpair(
    g: u32,
    g1: u32,
) -> Result<(TwistEndomorphism, TwistEndomorphism), Error> {
    let spec = TwistSpec { kind: TwistKind::Cutpair, g, g1, m: 1 };
    spec.validate()?;
    let surface = surface_group(g)?;
    let v = v_word(g1);
    let t = surface.generator(g1 as i64 + 1);
    let neg = -(g1 as i64 + 1);
    let mut e1 = TwistEndomorphism::identity(&surface);
    e1.set(neg, surface.generator(neg).concat(v.clone()).concat(t.inverse()));
    for i in g1 as i64 + 2..=g as i64 {
        for s in [i, -i] {
            e1.set(
                s,
                t.clone()
                    .concat(v.inverse())
                    .concat(surface.generator(s))
                    .concat(v.clone())
                    .concat(t.inverse()),
            );
        }
    }
    let mut e2 = TwistEndomorphism::identity(&surface);
    e2.set(neg, t.inverse().concat(surface.generator(neg)));
    Ok((e1, e2))
}

/// Exact inverse substitutions of the three constructors, verified by the
/// composition tests.
pub fn twist_bridge_inverse(g: u32, g1: u32) -> Result<TwistEndomorphism, Error> {
    let spec = TwistSpec { kind: TwistKind::Bridge, g, g1, m: 1 };
    spec.validate()?;
    let surface = surface_group(g)?;
    let v = v_word(g1);
    let mut e = TwistEndomorphism::identity(&surface);
    for i in g1 as i64 + 1..=g as i64 {
        for s in [i, -i] {
            e.set(s, v.clone().concat(surface.generator(s)).concat(v.inverse()));
        }
    }
    Ok(e)
}

pub fn twist_nonsep_inverse(g: u32) -> Result<TwistEndomorphism, Error> {
    let surface = surface_group(g)?;
    let mut e = TwistEndomorphism::identity(&surface);
    e.set(
        -(g as i64),
        surface.generator(g as i64).inverse().concat(surface.generator(-(g as i64))),
    );
    Ok(e)
}

pub fn twist_cutpair_inverse(
    g: u32,
    g1: u32,
) -> Result<(TwistEndomorphism, TwistEndomorphism), Error> {
    let spec = TwistSpec { kind: TwistKind::Cutpair, g, g1, m: 1 };
    spec.validate()?;
    let surface = surface_group(g)?;
    let v = v_word(g1);
    let t = surface.generator(g1 as i64 + 1);
    let neg = -(g1 as i64 + 1);
    let mut e1 = TwistEndomorphism::identity(&surface);
    e1.set(neg, surface.generator(neg).concat(t.clone()).concat(v.inverse()));
    for i in g1 as i64 + 2..=g as i64 {
        for s in [i, -i] {
            e1.set(
                s,
                v.clone()
                    .concat(t.inverse())
                    .concat(surface.generator(s))
                    .concat(t.clone())
                    .concat(v.inverse()),
            );
        }
    }
    let mut e2 = TwistEndomorphism::identity(&surface);
    e2.set(neg, t.clone().concat(surface.generator(neg)));
    Ok((e1, e2))
}

/// The endomorphism examined by a spec for one application (m = 1): the
/// bridge twist, the non-separating twist, or the cut-pair composite
/// difference D_{e2} D_{e1}^{-1}; together with its inverse.
pub fn twist_endos(
    spec: &TwistSpec,
) -> Result<(TwistEndomorphism, TwistEndomorphism), Error> {
    spec.validate()?;
    match spec.kind {
        TwistKind::Bridge => Ok((
            twist_bridge(spec.g, spec.g1)?,
            twist_bridge_inverse(spec.g, spec.g1)?,
        )),
        TwistKind::Nonsep => Ok((twist_nonsep(spec.g)?, twist_nonsep_inverse(spec.g)?)),
        TwistKind::Cutpair => {
            let (e1, e2) = twist_cutpair(spec.g, spec.g1)?;
            let (e1i, e2i) = twist_cutpair_inverse(spec.g, spec.g1)?;
            Ok((e2.compose(&e1i)?, e1.compose(&e2i)?))
        }
    }
}

/// The m-th power of the spec's twist as an endomorphism.
pub fn twist_power(spec: &TwistSpec) -> Result<TwistEndomorphism, Error> {
    let (e, einv) = twist_endos(spec)?;
    if spec.m >= 0 {
        endo_pow(&e, spec.m as u64)
    } else {
        endo_pow(&einv, spec.m.unsigned_abs())
    }
}

/// Closed forms for the displacement D^m(a_i) a_i^-1 of every generator
/// the m-th twist power moves. Each entry carries the generator index and
/// the candidate free-group lifts (the twist curve written from either side
/// of the relator).
pub fn displacement_table(
    kind: TwistKind,
    g: u32,
    g1: u32,
    m: i64,
) -> Vec<(i64, Vec<GroupWord>)> {
    let mut out = Vec::new();
    match kind {
        TwistKind::Nonsep => {
            out.push((-(g as i64), vec![GroupWord::gen(&gen_name(g as i64), m)]));
        }
        TwistKind::Bridge => {
            let forms = [v_word(g1), v_word_rewritten(g, g1)];
            for i in g1 as i64 + 1..=g as i64 {
                for s in [i, -i] {
                    let a = GroupWord::gen(&gen_name(s), 1);
                    let lifts = forms
                        .iter()
                        .map(|v| {
                            v.pow(-m).concat(a.clone()).concat(v.pow(m)).concat(a.inverse())
                        })
                        .collect();
                    out.push((s, lifts));
                }
            }
        }
        TwistKind::Cutpair => {
            let forms = [v_word(g1), v_word_rewritten(g, g1)];
            let t = GroupWord::gen(&gen_name(g1 as i64 + 1), 1);
            let neg = -(g1 as i64 + 1);
            let a = GroupWord::gen(&gen_name(neg), 1);
            let lifts = forms
                .iter()
                .map(|v| {
                    t.pow(-m)
                        .concat(a.clone())
                        .concat(t.clone().concat(v.inverse()).pow(m))
                        .concat(a.inverse())
                })
                .collect();
            out.push((neg, lifts));
            for i in g1 as i64 + 2..=g as i64 {
                for s in [i, -i] {
                    let a = GroupWord::gen(&gen_name(s), 1);
                    let lifts = forms
                        .iter()
                        .map(|v| {
                            v.clone()
                                .concat(t.inverse())
                                .pow(m)
                                .concat(a.clone())
                                .concat(t.clone().concat(v.inverse()).pow(m))
                                .concat(a.inverse())
                        })
                        .collect();
                    out.push((s, lifts));
                }
            }
        }
    }
    out
}

/// A homomorphism from the surface group to the free group on x, y, z,
/// given by generator images; the constructor checks that the relator dies
/// under free reduction.
#[derive(Debug, Clone)]
pub struct ReductionHom {
    label: String,
    images: HashMap<String, GroupWord>,
}

impl ReductionHom {
    pub fn new(
        surface: &SurfacePresentation,
        label: &str,
        images: HashMap<String, GroupWord>,
    ) -> Result<Self, Error> {
        for name in &surface.names {
            if !images.contains_key(name) {
                return Err(Error::UnknownGenerator(name.clone()));
            }
        }
        let image = surface.relator().substitute(&|g| images.get(g).cloned())?;
        if !image.is_freely_trivial() {
            return Err(Error::RelatorNotKilled);
        }
        Ok(ReductionHom { label: label.to_string(), images })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn push_forward(&self, w: &GroupWord) -> Result<GroupWord, Error> {
        w.substitute(&|g| self.images.get(g).cloned())
    }
}

fn hom_images(
    surface: &SurfacePresentation,
    assignments: &[(i64, GroupWord)],
) -> HashMap<String, GroupWord> {
    let mut images: HashMap<String, GroupWord> =
        surface.names.iter().map(|n| (n.clone(), GroupWord::empty())).collect();
    for (i, w) in assignments {
        images.insert(gen_name(*i), w.clone());
    }
    images
}

/// The catalog reduction homomorphisms a configuration admits. These are
/// exactly the maps that certify non-membership: a single generator image
/// failing the rank-3 congruences shows the displacement cannot lie in the
/// level subgroup.
pub fn catalog_homs(spec: &TwistSpec) -> Result<Vec<ReductionHom>, Error> {
    spec.validate()?;
    let surface = surface_group(spec.g)?;
    let g = spec.g as i64;
    let x = || GroupWord::gen("x", 1);
    let y = || GroupWord::gen("y", 1);
    match spec.kind {
        TwistKind::Nonsep => Ok(vec![]),
        TwistKind::Bridge if spec.bounds_genus_one() => Ok(vec![ReductionHom::new(
            &surface,
            "outer handles to x,y",
            hom_images(&surface, &[(1, x()), (-g, x()), (-1, y()), (g, y())]),
        )?]),
        TwistKind::Bridge => Ok(vec![ReductionHom::new(
            &surface,
            "outer handles to x,y; curve-side handle to z^-1",
            hom_images(
                &surface,
                &[
                    (1, x()),
                    (-g, x()),
                    (-1, y()),
                    (g, y()),
                    (spec.g1 as i64 + 1, GroupWord::gen("z", -1)),
                ],
            ),
        )?]),
        TwistKind::Cutpair => Ok(vec![ReductionHom::new(
            &surface,
            "outer handles to x,y; pair curve to z",
            hom_images(
                &surface,
                &[
                    (1, x()),
                    (-g, x()),
                    (-1, y()),
                    (g, y()),
                    (spec.g1 as i64 + 1, GroupWord::gen("z", 1)),
                ],
            ),
        )?]),
    }
}

/// Outcome of a displacement membership query. Both certificate kinds are
/// sound; Unknown means neither fired.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum MembershipVerdict {
    Member { certificate: String },
    NotMember { certificate: String },
    Unknown,
}

impl MembershipVerdict {
    pub fn is_member(&self) -> bool {
        matches!(self, MembershipVerdict::Member { .. })
    }

    pub fn is_not_member(&self) -> bool {
        matches!(self, MembershipVerdict::NotMember { .. })
    }
}

/// Exponent sums of a word per generator; commutator letters contribute
/// nothing.
fn abelianization(w: &GroupWord, index: &HashMap<String, usize>, out: &mut [i64]) {
    for l in &w.letters {
        if let Letter::Gen(g, e) = l {
            out[*(index.get(g).expect("known generator"))] += e;
        }
    }
}

fn labelings(spec: &TwistSpec) -> Vec<u32> {
    let mut ls = match spec.kind {
        TwistKind::Nonsep => vec![0],
        TwistKind::Bridge => vec![spec.g1, spec.g - spec.g1],
        TwistKind::Cutpair => vec![spec.g1, spec.g - spec.g1 - 1],
    };
    ls.dedup();
    ls
}

/// Decides whether the m-th power of the spec's twist displaces every
/// generator into the level subgroup of depth k+1, i.e. whether the twist
/// power acts trivially on the level structure.
///
/// At k = 1 the question is exactly divisibility of the abelianized
/// displacement, decided both ways. At k = 2, 3 a Member certificate sifts
/// a free-group lift of every displacement (over both relabelings of the
/// splitting and both relator rewrites of the twist curve) into the cached
/// rank-2g power subgroup; a NotMember certificate pushes a displacement
/// through a catalog homomorphism and fails the rank-3 congruences.
pub fn check_displacement(spec: &TwistSpec, k: usize, n: u64) -> Result<MembershipVerdict, Error> {
    spec.validate()?;
    if k == 0 || k > 3 {
        return Err(Error::UnsupportedDepth(k));
    }
    if n < 3 {
        return Err(Error::BadInput(format!("level n = {n} must be at least 3")));
    }
    let surface = surface_group(spec.g)?;
    let index: HashMap<String, usize> = surface
        .names
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();

    // Abelianized displacement mod n: an exact decision at k = 1 and a
    // universal non-membership test at every depth.
    let table = displacement_table(spec.kind, spec.g, spec.g1, spec.m);
    for (i, lifts) in &table {
        let mut ab = vec![0i64; surface.names.len()];
        abelianization(&lifts[0].normalized(), &index, &mut ab);
        if ab.iter().any(|c| c.rem_euclid(n as i64) != 0) {
            return Ok(MembershipVerdict::NotMember {
                certificate: format!(
                    "displacement of {} has abelianization {ab:?}, nonzero mod {n}",
                    gen_name(*i)
                ),
            });
        }
    }
    if k == 1 {
        return Ok(MembershipVerdict::Member {
            certificate: format!("all displacements abelianize to 0 mod {n}"),
        });
    }

    let mut not_member = None;
    for hom in catalog_homs(spec)? {
        for (i, lifts) in &table {
            let image = hom.push_forward(&lifts[0])?;
            let elt = nilpotent::eval_word(&image)?;
            if !elt.is_member(n, k + 1)? {
                not_member = Some(MembershipVerdict::NotMember {
                    certificate: format!(
                        "image of the displacement of {} under '{}' violates the \
                         depth-{} congruences at level {n}",
                        gen_name(*i),
                        hom.label(),
                        k + 1
                    ),
                });
                break;
            }
        }
        if not_member.is_some() {
            break;
        }
    }

    let alphabet = surface.alphabet();
    let sub = membership_subgroup(2 * spec.g as usize, n, k)?;
    let mut member = None;
    'labelings: for g1 in labelings(spec) {
        let table = displacement_table(spec.kind, spec.g, g1, spec.m);
        for (_, lifts) in &table {
            let ok = lifts
                .iter()
                .any(|w| sub.contains(&magnus_eval(w, &alphabet).expect("closed alphabet")));
            if !ok {
                continue 'labelings;
            }
        }
        member = Some(MembershipVerdict::Member {
            certificate: format!(
                "all displacement lifts for splitting parameter {g1} sift into the \
                 rank-{} power subgroup at level {n}, class {k}",
                2 * spec.g
            ),
        });
        break;
    }

    assert!(
        !(member.is_some() && not_member.is_some()),
        "contradictory certificates for {spec:?} at k = {k}, n = {n}"
    );
    Ok(member.or(not_member).unwrap_or(MembershipVerdict::Unknown))
}

/// The exact divisibility threshold for triviality: the m-th twist power
/// acts trivially on the depth-(k+1) level structure iff d | m, where d is
/// n for a non-separating curve at every depth; 1 for a separating curve
/// at depths 1, 2 and n6 (genus-one side) or n2 (otherwise) at depth 3;
/// and 1, n2, and n/2 or n (2 exactly dividing n, or not) for a cut pair.
pub fn required_divisor(spec: &TwistSpec, k: usize, n: u64) -> Result<u64, Error> {
    spec.validate()?;
    if k == 0 || k > 3 {
        return Err(Error::UnsupportedDepth(k));
    }
    let n_l = |l: u64| n / {
        use num_integer::Integer;
        n.gcd(&l)
    };
    Ok(match (spec.kind, k) {
        (TwistKind::Nonsep, _) => n,
        (TwistKind::Bridge, 1) | (TwistKind::Bridge, 2) => 1,
        (TwistKind::Bridge, _) if spec.bounds_genus_one() => n_l(6),
        (TwistKind::Bridge, _) => n_l(2),
        (TwistKind::Cutpair, 1) => 1,
        (TwistKind::Cutpair, 2) => n_l(2),
        (TwistKind::Cutpair, _) if n % 4 == 2 => n / 2,
        (TwistKind::Cutpair, _) => n,
    })
}

/// One line of the divisibility-threshold sweep.
#[derive(Debug, Clone, Serialize)]
pub struct GridRow {
    pub spec: TwistSpec,
    pub k: usize,
    pub n: u64,
    pub expected_member: bool,
    pub verdict: MembershipVerdict,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct GridReport {
    pub rows: Vec<GridRow>,
    pub checks: usize,
    pub unknowns: usize,
    pub mismatches: usize,
}

impl GridReport {
    pub fn ok(&self) -> bool {
        self.unknowns == 0 && self.mismatches == 0
    }
}

fn grid_specs(g: u32) -> Vec<TwistSpec> {
    let mut specs = vec![TwistSpec { kind: TwistKind::Nonsep, g, g1: 0, m: 0 }];
    for g1 in 1..g {
        specs.push(TwistSpec { kind: TwistKind::Bridge, g, g1, m: 0 });
    }
    for g1 in 1..g.saturating_sub(1) {
        specs.push(TwistSpec { kind: TwistKind::Cutpair, g, g1, m: 0 });
    }
    specs
}

/// Sweeps every twist configuration over the given parameters, checking
/// the smallest m meeting the divisibility threshold (expected Member) and
/// m = 1 when the threshold exceeds 1 (the minimal violation, expected
/// NotMember via a catalog homomorphism).
pub fn mono_grid(gs: &[u32], ks: &[usize], ns: &[u64]) -> Result<GridReport, Error> {
    let mut rows = Vec::new();
    for &g in gs {
        for base in grid_specs(g) {
            for &k in ks {
                for &n in ns {
                    let d = required_divisor(&base, k, n)?;
                    let mut cases = vec![(d as i64, true)];
                    if d > 1 {
                        cases.push((1, false));
                    }
                    for (m, expected_member) in cases {
                        let spec = TwistSpec { m, ..base };
                        let verdict = check_displacement(&spec, k, n)?;
                        let ok = if expected_member {
                            verdict.is_member()
                        } else {
                            verdict.is_not_member()
                        };
                        rows.push(GridRow { spec, k, n, expected_member, verdict, ok });
                    }
                }
            }
        }
    }
    let checks = rows.len();
    let unknowns = rows.iter().filter(|r| r.verdict == MembershipVerdict::Unknown).count();
    let mismatches = rows.iter().filter(|r| !r.ok).count();
    Ok(GridReport { rows, checks, unknowns, mismatches })
}

/// Oracle checks of the two power congruences the cut-pair analysis rests
/// on, for v in the commutator subgroup and m in 0..=12:
/// (a v^-1)^m = a^m v^-m [v^-1,a]^(m(m-1)/2) and
/// a^-m b a^m b^-1 = [a,b^-1]^m [[a,b^-1],a]^(m(m-1)/2), both mod gamma_4.
pub fn verify_congruence_identities(trials: usize, seed: u64) -> IdentityReport {
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

    for t in 0..trials {
        let m = (t % 13) as i64;
        let (la, lb, l1, l2) = (
            rng.gen_range(1..=3),
            rng.gen_range(1..=3),
            rng.gen_range(1..=2),
            rng.gen_range(1..=2),
        );
        let a = rand_word(&mut rng, la);
        let b = rand_word(&mut rng, lb);
        let v = GroupWord::comm(rand_word(&mut rng, l1), rand_word(&mut rng, l2));
        let half = m * (m - 1) / 2;

        let lhs = a.clone().concat(v.inverse()).pow(m);
        let rhs = a
            .pow(m)
            .concat(v.pow(-m))
            .concat(GroupWord::comm(v.inverse(), a.clone()).pow(half));
        checks += 1;
        let l = magnus_eval(&lhs, xyz).expect("closed alphabet");
        let r = magnus_eval(&rhs, xyz).expect("closed alphabet");
        if l != r {
            failures.push(format!("power congruence (a): m = {m}, a = {a}, v = {v}"));
        }

        let lhs = a.pow(-m).concat(b.clone()).concat(a.pow(m)).concat(b.inverse());
        let ab = || GroupWord::comm(a.clone(), b.inverse());
        let rhs = ab().pow(m).concat(GroupWord::comm(ab(), a.clone()).pow(half));
        checks += 1;
        let l = magnus_eval(&lhs, xyz).expect("closed alphabet");
        let r = magnus_eval(&rhs, xyz).expect("closed alphabet");
        if l != r {
            failures.push(format!("power congruence (b): m = {m}, a = {a}, b = {b}"));
        }
    }
    IdentityReport { trials, checks, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn free_eq(a: &GroupWord, b: &GroupWord) -> bool {
        a.clone().concat(b.inverse()).is_freely_trivial()
    }

    #[test]
    fn surface_group_basics() {
        let s = surface_group(2).unwrap();
        assert_eq!(s.names(), &["a1", "a-1", "a2", "a-2"]);
        assert_eq!(s.relator().to_string(), "[a1,a-1] [a2,a-2]");
        assert_eq!(surface_group(3).unwrap().names().len(), 6);
        assert!(matches!(surface_group(1), Err(Error::GenusTooSmall(1))));
    }

    #[test]
    fn nonsep_table() {
        let e = twist_nonsep(2).unwrap();
        let img = e.apply(&GroupWord::gen("a-2", 1)).unwrap();
        assert!(free_eq(&img, &GroupWord::gen("a2", 1).concat(GroupWord::gen("a-2", 1))));
        assert!(free_eq(
            &e.apply(&GroupWord::gen("a1", 1)).unwrap(),
            &GroupWord::gen("a1", 1)
        ));
    }

    #[test]
    fn bridge_table_g2() {
        let e = twist_bridge(2, 1).unwrap();
        let v = v_word(1);
        for s in [2i64, -2] {
            let a = GroupWord::gen(&gen_name(s), 1);
            let expect = v.inverse().concat(a.clone()).concat(v.clone());
            assert!(free_eq(&e.apply(&a).unwrap(), &expect));
        }
        for s in [1i64, -1] {
            let a = GroupWord::gen(&gen_name(s), 1);
            assert!(free_eq(&e.apply(&a).unwrap(), &a));
        }
        assert!(matches!(twist_bridge(2, 2), Err(Error::BadSplit { .. })));
    }

    #[test]
    fn inverses_compose_to_identity() {
        let cases: Vec<(TwistEndomorphism, TwistEndomorphism)> = vec![
            (twist_bridge(3, 1).unwrap(), twist_bridge_inverse(3, 1).unwrap()),
            (twist_nonsep(3).unwrap(), twist_nonsep_inverse(3).unwrap()),
            {
                let (e1, _) = twist_cutpair(4, 2).unwrap();
                let (e1i, _) = twist_cutpair_inverse(4, 2).unwrap();
                (e1, e1i)
            },
            {
                let (_, e2) = twist_cutpair(4, 2).unwrap();
                let (_, e2i) = twist_cutpair_inverse(4, 2).unwrap();
                (e2, e2i)
            },
        ];
        for (e, einv) in cases {
            for both in [e.compose(&einv).unwrap(), einv.compose(&e).unwrap()] {
                for name in e.surface.names() {
                    let img = both.image_of(name).unwrap();
                    assert!(free_eq(img, &GroupWord::gen(name, 1)), "generator {name}");
                }
            }
        }
    }

    #[test]
    fn endo_pow_is_additive() {
        let (e, _) = twist_endos(&TwistSpec { kind: TwistKind::Cutpair, g: 3, g1: 1, m: 1 })
            .unwrap();
        let w = GroupWord::gen("a-2", 1).concat(GroupWord::gen("a3", -2));
        let e2 = endo_pow(&e, 2).unwrap();
        let e3 = endo_pow(&e, 3).unwrap();
        let e5 = endo_pow(&e, 5).unwrap();
        let lhs = e5.apply(&w).unwrap();
        let rhs = e2.apply(&e3.apply(&w).unwrap()).unwrap();
        assert!(free_eq(&lhs, &rhs));
        assert!(free_eq(&endo_pow(&e, 0).unwrap().apply(&w).unwrap(), &w));
    }

    #[test]
    fn closed_forms_match_iterated_twists() {
        for (spec, ms) in [
            (TwistSpec { kind: TwistKind::Bridge, g: 3, g1: 1, m: 0 }, 0..4),
            (TwistSpec { kind: TwistKind::Bridge, g: 3, g1: 2, m: 0 }, 0..4),
            (TwistSpec { kind: TwistKind::Nonsep, g: 2, g1: 0, m: 0 }, 0..4),
            (TwistSpec { kind: TwistKind::Cutpair, g: 3, g1: 1, m: 0 }, 0..4),
            (TwistSpec { kind: TwistKind::Cutpair, g: 4, g1: 2, m: 0 }, 0..3),
        ] {
            let (e, _) = twist_endos(&spec).unwrap();
            for m in ms {
                let em = endo_pow(&e, m as u64).unwrap();
                let table = displacement_table(spec.kind, spec.g, spec.g1, m);
                for (i, lifts) in table {
                    let a = GroupWord::gen(&gen_name(i), 1);
                    let expect = em.apply(&a).unwrap().concat(a.inverse());
                    assert!(
                        free_eq(&lifts[0], &expect),
                        "{spec:?} m = {m} generator {i}"
                    );
                }
            }
        }
    }

    #[test]
    fn relator_rewrite_has_equal_hom_image() {
        // The two lifts of each displacement differ by relator conjugates,
        // so a valid reduction hom sends them to the same free word.
        for spec in [
            TwistSpec { kind: TwistKind::Bridge, g: 3, g1: 1, m: 5 },
            TwistSpec { kind: TwistKind::Bridge, g: 4, g1: 2, m: 3 },
            TwistSpec { kind: TwistKind::Cutpair, g: 4, g1: 1, m: 4 },
        ] {
            for hom in catalog_homs(&spec).unwrap() {
                for (i, lifts) in displacement_table(spec.kind, spec.g, spec.g1, spec.m) {
                    let a = hom.push_forward(&lifts[0]).unwrap();
                    let b = hom.push_forward(&lifts[1]).unwrap();
                    assert!(free_eq(&a, &b), "{spec:?} generator {i}");
                }
            }
        }
    }

    #[test]
    fn invalid_reduction_hom_is_rejected() {
        let surface = surface_group(2).unwrap();
        // a1 -> x with a-1 -> 1 leaves [x,1] trivial, so this is valid.
        let ok = hom_images(&surface, &[(1, GroupWord::gen("x", 1))]);
        assert!(ReductionHom::new(&surface, "degenerate", ok).is_ok());
        // a1 -> x, a-1 -> y makes the relator image [x,y], not trivial.
        let bad = hom_images(
            &surface,
            &[(1, GroupWord::gen("x", 1)), (-1, GroupWord::gen("y", 1))],
        );
        assert!(matches!(
            ReductionHom::new(&surface, "bad", bad),
            Err(Error::RelatorNotKilled)
        ));
    }

    #[test]
    fn nonsep_verdicts_are_exact() {
        for k in 1..=3 {
            let spec = TwistSpec { kind: TwistKind::Nonsep, g: 2, g1: 0, m: 6 };
            assert!(check_displacement(&spec, k, 6).unwrap().is_member());
            let spec = TwistSpec { kind: TwistKind::Nonsep, g: 2, g1: 0, m: 4 };
            assert!(check_displacement(&spec, k, 6).unwrap().is_not_member());
        }
        let spec = TwistSpec { kind: TwistKind::Nonsep, g: 2, g1: 0, m: 0 };
        assert!(check_displacement(&spec, 2, 6).unwrap().is_member());
    }

    #[test]
    fn bridge_verdicts() {
        // Any power of a separating twist is trivial at depth 3.
        let spec = TwistSpec { kind: TwistKind::Bridge, g: 2, g1: 1, m: 1 };
        assert!(check_displacement(&spec, 2, 5).unwrap().is_member());
        // At depth 4 a genus-one side needs n6 | m.
        assert!(check_displacement(&spec, 3, 5).unwrap().is_not_member());
        let spec = TwistSpec { kind: TwistKind::Bridge, g: 2, g1: 1, m: 5 };
        assert!(check_displacement(&spec, 3, 5).unwrap().is_member());
        // n = 6 has n6 = 1: every power is trivial, even with more handles.
        let spec = TwistSpec { kind: TwistKind::Bridge, g: 3, g1: 1, m: 1 };
        assert!(check_displacement(&spec, 3, 6).unwrap().is_member());
    }

    #[test]
    fn cutpair_verdicts() {
        let mk = |m| TwistSpec { kind: TwistKind::Cutpair, g: 3, g1: 1, m };
        assert!(check_displacement(&mk(1), 1, 4).unwrap().is_member());
        assert!(check_displacement(&mk(1), 2, 4).unwrap().is_not_member());
        assert!(check_displacement(&mk(2), 2, 4).unwrap().is_member());
        // Depth 4 at n = 4 needs n | m.
        assert!(check_displacement(&mk(2), 3, 4).unwrap().is_not_member());
        assert!(check_displacement(&mk(4), 3, 4).unwrap().is_member());
        // 2-exactly-divides-n case: n/2 | m suffices.
        assert!(check_displacement(&mk(3), 3, 6).unwrap().is_member());
    }

    #[test]
    fn congruence_identities_hold() {
        let report = verify_congruence_identities(39, 9);
        assert!(report.ok(), "{:?}", report.failures);
    }

    #[test]
    fn twist_spec_json_round_trip() {
        let spec = TwistSpec { kind: TwistKind::Cutpair, g: 4, g1: 2, m: -3 };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains("\"cutpair\""));
        let back: TwistSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
    }
}
