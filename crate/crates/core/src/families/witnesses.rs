//! Four claw-o-heavy graphs whose c-closures lose a c-heavy condition.
//!
//! `build_*` constructs a graph and evaluates its defining claims; `gen_*`
//! additionally refuses a graph whose required claims fail. Informational
//! claims are recorded but never block.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{invalid, FamilyError, FamilyGraph, Labeled};
use crate::closure::{closure_unchecked, ClosureKind, Policy};
use crate::graph::{Graph, VertexSet};
use crate::heavy::{copy_is_c_heavy, is_claw_o_heavy, is_heavy_vertex, satisfies, ConditionKind};
use crate::pattern::{is_free, is_isomorphic, make_pattern, PatternKind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub statement: String,
    pub holds: bool,
    /// Informational claims are reported but never fail construction.
    pub required: bool,
}

fn finish(mut fam: FamilyGraph, claims: Vec<Claim>) -> Result<FamilyGraph, FamilyError> {
    fam.claims = claims;
    Ok(fam)
}

/// Fails with the first required claim that does not hold.
pub fn checked(fam: FamilyGraph) -> Result<FamilyGraph, FamilyError> {
    if let Some(bad) = fam.failed_claims().next() {
        return Err(FamilyError::ClaimFailed { family: fam.name.clone(), claim: bad.statement.clone() });
    }
    Ok(fam)
}

fn claim(statement: impl Into<String>, holds: bool) -> Claim {
    Claim { statement: statement.into(), holds, required: true }
}

fn set_of(fam: &FamilyGraph, labels: &[&str]) -> VertexSet {
    fam.vertices_of(labels).into_iter().collect()
}

fn c_closure_of(g: &Graph) -> Graph {
    closure_unchecked(g, ClosureKind::C, Policy::Smallest).0
}

/// The closure equals `g` with `block` made complete.
fn closure_claim(fam: &FamilyGraph, closed: &Graph, block: VertexSet, what: &str) -> Claim {
    claim(format!("c-closure only completes {what}"), *closed == fam.graph.with_clique(block))
}

/// `set` induces `kind` in `closed` and that copy is not c-heavy there.
fn non_c_heavy_copy_claim(closed: &Graph, set: VertexSet, kind: PatternKind, labels: &str) -> Claim {
    let pattern = make_pattern(kind).expect("catalog pattern");
    let induces = is_isomorphic(&closed.induced(set).0, &pattern.graph);
    claim(format!("{{{labels}}} induces a non-c-heavy {kind} in the closure"), induces && !copy_is_c_heavy(closed, set))
}

fn k_block(b: &mut Labeled, r: usize) -> Vec<usize> {
    let k: Vec<usize> = (1..=r).map(|i| b.vertex(format!("k{i}"))).collect();
    b.clique(&k);
    k
}

/// `K_r`, independent `a_1..a_r` joined to all of it, adjacent `b_1 b_2`
/// joined to every `a_i`, and the path `b_1 c_1 c_2 b_2`.
pub fn build_g1(r: usize) -> Result<FamilyGraph, FamilyError> {
    if r < 3 {
        return Err(invalid("G1", "r must be at least 3"));
    }
    let mut b = Labeled::default();
    let k = k_block(&mut b, r);
    let a: Vec<usize> = (1..=r).map(|i| b.vertex(format!("a{i}"))).collect();
    let [b1, b2, c1, c2] = ["b1", "b2", "c1", "c2"].map(|l| b.vertex(l));
    for &ai in &a {
        b.join(ai, &k);
        b.join(ai, &[b1, b2]);
    }
    b.path(&[b1, b2]);
    b.path(&[b1, c1, c2, b2]);
    let fam = b.finish(format!("G1(r={r})"));
    let g = &fam.graph;
    let closed = c_closure_of(g);
    let block: VertexSet = k.iter().chain(&a).copied().chain([b1, b2]).collect();
    let claims = vec![
        claim("claw-o-heavy", is_claw_o_heavy(g)),
        claim("Z2-c-heavy", satisfies(g, &make_pattern(PatternKind::Z(2))?, ConditionKind::CHeavy)),
        closure_claim(&fam, &closed, block, "K_r + a_* + b_1 b_2"),
        non_c_heavy_copy_claim(
            &closed,
            set_of(&fam, &["a1", "a2", "b1", "c1", "c2"]),
            PatternKind::Z(2),
            "a1,a2,b1,c1,c2",
        ),
    ];
    finish(fam, claims)
}

/// Two constructions of `G2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum G2Variant {
    /// `b_1` and `b_4` belong to their `K_k`, and `b_2 b_3` is subdivided
    /// by one unlabeled vertex.
    #[default]
    Embedded,
    /// `b_1`, `b_4` sit outside the two `K_k` and `b_2 b_3` is an edge.
    Outside,
}

impl fmt::Display for G2Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            G2Variant::Embedded => "embedded",
            G2Variant::Outside => "outside",
        })
    }
}

impl FromStr for G2Variant {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "embedded" => Ok(G2Variant::Embedded),
            "outside" => Ok(G2Variant::Outside),
            _ => Err(invalid("G2", format!("variant {s:?} (expected embedded or outside)"))),
        }
    }
}

/// `K_r` with the path `a_1 a_2 a_3 a_4` joined to it, a `K_k` hanging
/// from `a_1` and another from `a_4`, linked by `b_1 b_4`, and pendant
/// routes `a_2 b_2 ... b_3 a_3`.
pub fn build_g2(k: usize, r: usize, variant: G2Variant) -> Result<FamilyGraph, FamilyError> {
    if k + 3 > r || r + 2 > 2 * k {
        return Err(invalid("G2", format!("need k+3 <= r <= 2k-2, got k={k}, r={r}")));
    }
    let mut b = Labeled::default();
    let kr = k_block(&mut b, r);
    let a: Vec<usize> = (1..=4).map(|i| b.vertex(format!("a{i}"))).collect();
    for &ai in &a {
        b.join(ai, &kr);
    }
    b.path(&a);
    let (b1, b4, low, high) = match variant {
        G2Variant::Embedded => {
            let b1 = b.vertex("b1");
            let mut low: Vec<usize> = (1..k).map(|i| b.vertex(format!("d{i}"))).collect();
            low.push(b1);
            let b4 = b.vertex("b4");
            let mut high: Vec<usize> = (1..k).map(|i| b.vertex(format!("e{i}"))).collect();
            high.push(b4);
            (b1, b4, low, high)
        }
        G2Variant::Outside => {
            let low: Vec<usize> = (1..=k).map(|i| b.vertex(format!("d{i}"))).collect();
            let high: Vec<usize> = (1..=k).map(|i| b.vertex(format!("e{i}"))).collect();
            let (b1, b4) = (b.vertex("b1"), b.vertex("b4"));
            b.join(b1, &low);
            b.join(b4, &high);
            (b1, b4, low, high)
        }
    };
    b.clique(&low);
    b.clique(&high);
    b.join(a[0], &low);
    b.join(a[3], &high);
    b.edge(a[0], b1);
    b.edge(a[3], b4);
    b.edge(b1, b4);
    let (b2, b3) = (b.vertex("b2"), b.vertex("b3"));
    b.edge(a[1], b2);
    b.edge(a[2], b3);
    match variant {
        G2Variant::Embedded => {
            let m = b.vertex("m");
            b.path(&[b2, m, b3]);
        }
        G2Variant::Outside => b.edge(b2, b3),
    }
    let fam = b.finish(format!("G2(k={k},r={r},{variant})"));
    let g = &fam.graph;
    let closed = c_closure_of(g);
    let block: VertexSet = kr.iter().chain(&a).copied().collect();
    let light = fam.vertices_of(&["a2", "a3"]).into_iter().all(|v| !is_heavy_vertex(&closed, v).expect("in range"));
    let claims = vec![
        claim("claw-o-heavy", is_claw_o_heavy(g)),
        claim("N-c-heavy", satisfies(g, &make_pattern(PatternKind::Net)?, ConditionKind::CHeavy)),
        closure_claim(&fam, &closed, block, "K_r + a_1..a_4"),
        non_c_heavy_copy_claim(
            &closed,
            set_of(&fam, &["a1", "b1", "a2", "b2", "a3", "b3"]),
            PatternKind::Net,
            "a1,b1,a2,b2,a3,b3",
        ),
        claim("a2 and a3 are light in the closure", light),
    ];
    finish(fam, claims)
}

/// `K_r` joined to `a_0, b_0, c_0, d_0`, each the start of a path of
/// length `t`; `a_t, b_t` and `c_t, d_t` share a middle neighbour.
pub fn build_g3(t: usize, r: usize) -> Result<FamilyGraph, FamilyError> {
    if t < 2 || r < 4 * t {
        return Err(invalid("G3", format!("need t >= 2 and r >= 4t, got t={t}, r={r}")));
    }
    let mut b = Labeled::default();
    let kr = k_block(&mut b, r);
    let mut rows = Vec::new();
    for name in ["a", "b", "c", "d"] {
        let row: Vec<usize> = (0..=t).map(|i| b.vertex(format!("{name}{i}"))).collect();
        b.path(&row);
        b.join(row[0], &kr);
        rows.push(row);
    }
    let m_ab = b.vertex("m_ab");
    b.path(&[rows[0][t], m_ab, rows[1][t]]);
    let m_cd = b.vertex("m_cd");
    b.path(&[rows[2][t], m_cd, rows[3][t]]);
    let fam = b.finish(format!("G3(t={t},r={r})"));
    let g = &fam.graph;
    let closed = c_closure_of(g);
    let block: VertexSet = kr.iter().copied().chain(rows.iter().map(|row| row[0])).collect();

    let mut claims = vec![Claim { statement: "claw-o-heavy".into(), holds: is_claw_o_heavy(g), required: false }];
    claims.push(closure_claim(&fam, &closed, block, "K_r + a_0 b_0 c_0 d_0"));
    for i in 1..=t {
        for j in i..=t {
            for l in j..=t {
                if l < 2 {
                    continue;
                }
                let kind = PatternKind::Nijk(i, j, l);
                claims.push(claim(format!("{kind}-free"), is_free(g, &make_pattern(kind)?)));
                let labels: Vec<String> = (0..=i)
                    .map(|x| format!("a{x}"))
                    .chain((0..=j).map(|x| format!("b{x}")))
                    .chain((0..=l).map(|x| format!("c{x}")))
                    .collect();
                let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
                claims.push(non_c_heavy_copy_claim(&closed, set_of(&fam, &refs), kind, &labels.join(",")));
            }
        }
    }
    finish(fam, claims)
}

/// `K_r` joined to independent `a_1..a_4`; `b_1` sees `a_1, a_2, c_1, c_2`,
/// `b_4` sees `a_3, a_4, c_3, c_4`, over the path `c_1 c_2 c_3 c_4`.
pub fn build_g4(r: usize) -> Result<FamilyGraph, FamilyError> {
    if r < 8 {
        return Err(invalid("G4", "r must be at least 8"));
    }
    let mut b = Labeled::default();
    let kr = k_block(&mut b, r);
    let a: Vec<usize> = (1..=4).map(|i| b.vertex(format!("a{i}"))).collect();
    for &ai in &a {
        b.join(ai, &kr);
    }
    let (b1, b4) = (b.vertex("b1"), b.vertex("b4"));
    let c: Vec<usize> = (1..=4).map(|i| b.vertex(format!("c{i}"))).collect();
    b.join(b1, &[a[0], a[1], c[0], c[1]]);
    b.join(b4, &[a[2], a[3], c[2], c[3]]);
    b.path(&c);
    let fam = b.finish(format!("G4(r={r})"));
    let g = &fam.graph;
    let closed = c_closure_of(g);
    let block: VertexSet = kr.iter().chain(&a).copied().collect();
    let claims = vec![
        claim("claw-o-heavy", is_claw_o_heavy(g)),
        claim("H-free", is_free(g, &make_pattern(PatternKind::Hourglass)?)),
        closure_claim(&fam, &closed, block, "K_r + a_1..a_4"),
        non_c_heavy_copy_claim(
            &closed,
            set_of(&fam, &["a1", "a2", "b1", "c1", "c2"]),
            PatternKind::Hourglass,
            "a1,a2,b1,c1,c2",
        ),
    ];
    finish(fam, claims)
}

pub fn gen_g1(r: usize) -> Result<FamilyGraph, FamilyError> {
    checked(build_g1(r)?)
}

pub fn gen_g2(k: usize, r: usize, variant: G2Variant) -> Result<FamilyGraph, FamilyError> {
    checked(build_g2(k, r, variant)?)
}

pub fn gen_g3(t: usize, r: usize) -> Result<FamilyGraph, FamilyError> {
    checked(build_g3(t, r)?)
}

pub fn gen_g4(r: usize) -> Result<FamilyGraph, FamilyError> {
    checked(build_g4(r)?)
}
