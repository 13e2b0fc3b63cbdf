//! The tropical Grassmannian `G(3,6)` as an explicit simplicial complex.
//!
//! Vertices are the 20 coordinate vectors `e_ijk`, the 15 vectors
//! `f_ijkl = e_ijk + e_ijl + e_ikl + e_jkl` and 30 vectors `g` indexed by a
//! cyclically ordered triple of disjoint pairs. `Δ` is the flag complex of the
//! 550-edge graph; `Δ'` removes the 15 FFF triangles, splitting each bipyramid
//! `FFFGG` into three tetrahedra around its GG edge.

pub mod algebra;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex};
use crate::plucker_vector::PlueckerVector;
use crate::rat::{rat, Rat};
use crate::subsets::{permutations, rank};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum G36Error {
    #[error("invalid vertex label {0:?}")]
    BadLabel(String),
    #[error("unknown facet class {0:?}")]
    UnknownClass(String),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum VertexKind {
    E,
    F,
    G,
}

/// A vertex of `G(3,6)`, indices 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum G36Vertex {
    E([u8; 3]),
    F([u8; 4]),
    /// Pairs in cyclic order, each sorted, rotated so the pair containing 0
    /// comes first.
    G([[u8; 2]; 3]),
}

fn sorted<const K: usize>(mut a: [u8; K]) -> [u8; K] {
    a.sort_unstable();
    a
}

impl G36Vertex {
    pub fn e(s: [u8; 3]) -> Self {
        G36Vertex::E(sorted(s))
    }

    pub fn f(s: [u8; 4]) -> Self {
        G36Vertex::F(sorted(s))
    }

    /// `g` for the cyclic order `(p, q, r)` of three disjoint pairs.
    pub fn g(p: [[u8; 2]; 3]) -> Self {
        let mut pairs = p.map(sorted);
        let first = pairs.iter().position(|x| x.contains(&0)).unwrap_or(0);
        pairs.rotate_left(first);
        G36Vertex::G(pairs)
    }

    pub fn kind(&self) -> VertexKind {
        match self {
            G36Vertex::E(_) => VertexKind::E,
            G36Vertex::F(_) => VertexKind::F,
            G36Vertex::G(_) => VertexKind::G,
        }
    }

    /// Parses `e_123`, `f_1234` or `g_123456`.
    pub fn parse(label: &str) -> Result<Self, G36Error> {
        let bad = || G36Error::BadLabel(label.to_string());
        let (kind, digits) = label.trim().split_once('_').ok_or_else(bad)?;
        let idx: Vec<u8> = digits
            .chars()
            .map(|c| {
                c.to_digit(10)
                    .filter(|d| (1..=6).contains(d))
                    .map(|d| d as u8 - 1)
                    .ok_or_else(bad)
            })
            .collect::<Result<_, _>>()?;
        if idx.iter().unique().count() != idx.len() {
            return Err(bad());
        }
        match (kind, idx.len()) {
            ("e", 3) => Ok(Self::e([idx[0], idx[1], idx[2]])),
            ("f", 4) => Ok(Self::f([idx[0], idx[1], idx[2], idx[3]])),
            ("g", 6) => Ok(Self::g([
                [idx[0], idx[1]],
                [idx[2], idx[3]],
                [idx[4], idx[5]],
            ])),
            _ => Err(bad()),
        }
    }

    /// The vector in `R^20` (coordinates in lexicographic order of 3-subsets),
    /// before reduction modulo `image(phi)`.
    pub fn ambient(&self) -> Vec<Rat> {
        let mut v = vec![rat(0); 20];
        self.add_to(&mut v);
        v
    }

    fn add_to(&self, v: &mut [Rat]) {
        let mut e = |s: &[u8]| {
            let s: Vec<usize> = s.iter().map(|&x| x as usize).sorted().collect();
            v[rank(6, &s)] += rat(1);
        };
        match self {
            G36Vertex::E(s) => e(s),
            G36Vertex::F(s) => s.iter().copied().combinations(3).for_each(|t| e(&t)),
            G36Vertex::G([p, q, r]) => {
                // g_{pqr} = f_{p ∪ q} + e_{q ∪ r_1} + e_{q ∪ r_2}
                [p[0], p[1], q[0], q[1]]
                    .iter()
                    .copied()
                    .combinations(3)
                    .for_each(|t| e(&t));
                e(&[q[0], q[1], r[0]]);
                e(&[q[0], q[1], r[1]]);
            }
        }
    }

    /// The vertex as a Plücker vector reduced modulo `image(phi)`.
    pub fn ambient_vector(&self) -> PlueckerVector {
        PlueckerVector::from_rats(3, 6, self.ambient())
            .and_then(|v| v.reduce_mod_phi())
            .expect("finite 20-vector")
    }

    /// Image under the index permutation `perm`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let p = |x: u8| perm[x as usize] as u8;
        match self {
            G36Vertex::E(s) => Self::e(s.map(p)),
            G36Vertex::F(s) => Self::f(s.map(p)),
            G36Vertex::G(pairs) => Self::g(pairs.map(|q| q.map(p))),
        }
    }

    fn indices(&self) -> Vec<u8> {
        match self {
            G36Vertex::E(s) => s.to_vec(),
            G36Vertex::F(s) => s.to_vec(),
            G36Vertex::G(p) => p.iter().flatten().copied().collect(),
        }
    }
}

impl fmt::Display for G36Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.kind() {
            VertexKind::E => "e",
            VertexKind::F => "f",
            VertexKind::G => "g",
        };
        write!(
            f,
            "{prefix}_{}",
            self.indices().iter().map(|i| i + 1).join("")
        )
    }
}

/// The 15 partitions of `{0..5}` into pairs, lexicographic.
pub fn tripartitions() -> Vec<[[u8; 2]; 3]> {
    let mut out = Vec::new();
    for a in 1..6u8 {
        let rest: Vec<u8> = (1..6).filter(|&x| x != a).collect();
        for b in 1..4 {
            let q = [rest[0], rest[b]];
            let r: Vec<u8> = rest.iter().copied().filter(|x| !q.contains(x)).collect();
            out.push([[0, a], q, [r[0], r[1]]]);
        }
    }
    out
}

/// The 65 vertices: E, then F, then G, each sorted by label.
pub fn vertices() -> Vec<G36Vertex> {
    let e = (0..6u8)
        .combinations(3)
        .map(|s| G36Vertex::e([s[0], s[1], s[2]]));
    let f = (0..6u8)
        .combinations(4)
        .map(|s| G36Vertex::f([s[0], s[1], s[2], s[3]]));
    let mut g: Vec<G36Vertex> = tripartitions()
        .into_iter()
        .flat_map(|[p, q, r]| [G36Vertex::g([p, q, r]), G36Vertex::g([p, r, q])])
        .collect();
    g.sort_by_key(|v| v.to_string());
    e.chain(f).chain(g).collect()
}

/// The six edge classes of the 1-skeleton.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum EdgeClass {
    EE,
    FF,
    GG,
    EF,
    EG,
    FG,
}

fn meet(a: &[u8], b: &[u8]) -> usize {
    a.iter().filter(|x| b.contains(x)).count()
}

/// The class of `{u, v}` if it is an edge.
pub fn edge_class(u: &G36Vertex, v: &G36Vertex) -> Option<EdgeClass> {
    use G36Vertex::*;
    let (u, v) = if u.kind() <= v.kind() { (u, v) } else { (v, u) };
    if u == v {
        return None;
    }
    let class = match (u, v) {
        (E(a), E(b)) => (meet(a, b) <= 1).then_some(EdgeClass::EE),
        (F(a), F(b)) => (meet(a, b) == 2).then_some(EdgeClass::FF),
        (G(a), G(b)) => (sorted_pairs(a) == sorted_pairs(b)).then_some(EdgeClass::GG),
        (E(a), F(b)) => matches!(meet(a, b), 1 | 3).then_some(EdgeClass::EF),
        (E(a), G(p)) => {
            // sizes (2, 1, 0) along some rotation of the cyclic pair order
            let sizes: Vec<usize> = p.iter().map(|q| meet(a, q)).collect();
            (0..3)
                .any(|r| sizes[r] == 2 && sizes[(r + 1) % 3] == 1 && sizes[(r + 2) % 3] == 0)
                .then_some(EdgeClass::EG)
        }
        (F(a), G(p)) => p.iter().any(|q| meet(a, q) == 0).then_some(EdgeClass::FG),
        _ => None,
    };
    class
}

fn sorted_pairs(p: &[[u8; 2]; 3]) -> [[u8; 2]; 3] {
    let mut q = *p;
    q.sort_unstable();
    q
}

pub fn is_edge(u: &G36Vertex, v: &G36Vertex) -> bool {
    edge_class(u, v).is_some()
}

/// Edges as index pairs into [`vertices`].
pub fn edges() -> Vec<(usize, usize)> {
    let vs = vertices();
    (0..vs.len())
        .tuple_combinations()
        .filter(|&(i, j)| is_edge(&vs[i], &vs[j]))
        .collect()
}

pub fn edge_census() -> BTreeMap<EdgeClass, usize> {
    let vs = vertices();
    edges()
        .into_iter()
        .map(|(i, j)| edge_class(&vs[i], &vs[j]).expect("edge"))
        .counts()
        .into_iter()
        .collect()
}

fn labels() -> Vec<String> {
    vertices().iter().map(G36Vertex::to_string).collect()
}

/// The flag complex `Δ` of the 550-edge graph.
pub fn build_delta() -> SimplicialComplex {
    SimplicialComplex::flag_complex(labels(), &edges()).expect("valid edges")
}

/// The 15 triangles `{f_{p∪q}, f_{p∪r}, f_{q∪r}}`, one per tripartition.
pub fn fff_triangles() -> Vec<[G36Vertex; 3]> {
    tripartitions()
        .into_iter()
        .map(|[p, q, r]| {
            let f = |a: [u8; 2], b: [u8; 2]| G36Vertex::f([a[0], a[1], b[0], b[1]]);
            [f(p, q), f(p, r), f(q, r)]
        })
        .collect()
}

/// Index of each vertex in [`vertices`].
pub fn vertex_index() -> HashMap<G36Vertex, usize> {
    vertices()
        .into_iter()
        .enumerate()
        .map(|(i, v)| (v, i))
        .collect()
}

/// `Δ'`: the faces of `Δ` containing no FFF triangle.
pub fn build_g36() -> SimplicialComplex {
    let index = vertex_index();
    let fff: Vec<Face> = fff_triangles()
        .iter()
        .map(|t| t.iter().map(|v| index[v]).collect())
        .collect();
    build_delta().without_faces(&fff)
}

/// Vertices of a face given by indices into [`vertices`].
pub fn face_vertices(face: &[usize]) -> Vec<G36Vertex> {
    let vs = vertices();
    face.iter().map(|&i| vs[i]).collect()
}

/// Parses labels into a sorted vertex list.
pub fn parse_face(labels: &[&str]) -> Result<Vec<G36Vertex>, G36Error> {
    let mut f = labels
        .iter()
        .map(|l| G36Vertex::parse(l))
        .collect::<Result<Vec<_>, _>>()?;
    f.sort_unstable();
    Ok(f)
}

/// The `S_6` orbit of a face, each member sorted, the list sorted.
pub fn orbit_of(face: &[G36Vertex]) -> Vec<Vec<G36Vertex>> {
    let set: HashSet<Vec<G36Vertex>> = permutations(6)
        .iter()
        .map(|p| face.iter().map(|v| v.permuted(p)).sorted().collect())
        .collect();
    set.into_iter().sorted().collect()
}

/// The seven kinds of tetrahedra of `Δ'`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FacetClass {
    EEEE,
    EEFF1,
    EEFF2,
    EFFG,
    EEEG,
    EEFG,
    FFGG,
}

impl FacetClass {
    pub const ALL: [FacetClass; 7] = [
        FacetClass::EEEE,
        FacetClass::EEFF1,
        FacetClass::EEFF2,
        FacetClass::EFFG,
        FacetClass::EEEG,
        FacetClass::EEFG,
        FacetClass::FFGG,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            FacetClass::EEEE => "EEEE",
            FacetClass::EEFF1 => "EEFF1",
            FacetClass::EEFF2 => "EEFF2",
            FacetClass::EFFG => "EFFG",
            FacetClass::EEEG => "EEEG",
            FacetClass::EEFG => "EEFG",
            FacetClass::FFGG => "FFGG",
        }
    }

    pub fn parse(name: &str) -> Result<Self, G36Error> {
        Self::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(name.trim()))
            .ok_or_else(|| G36Error::UnknownClass(name.to_string()))
    }

    /// Representative tetrahedron; the class is its `S_6` orbit.
    pub fn representative(&self) -> [&'static str; 4] {
        match self {
            FacetClass::EEEE => ["e_123", "e_145", "e_246", "e_356"],
            FacetClass::EEFF1 => ["e_123", "e_456", "f_1234", "f_3456"],
            FacetClass::EEFF2 => ["e_125", "e_345", "f_3456", "f_1256"],
            FacetClass::EFFG => ["e_345", "f_1256", "f_3456", "g_123456"],
            FacetClass::EEEG => ["e_126", "e_134", "e_356", "g_125634"],
            FacetClass::EEFG => ["e_234", "e_125", "f_1256", "g_125634"],
            FacetClass::FFGG => ["f_1256", "f_3456", "g_123456", "g_125634"],
        }
    }

    pub fn representative_vertices(&self) -> Vec<G36Vertex> {
        parse_face(&self.representative()).expect("valid labels")
    }
}

impl fmt::Display for FacetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Number of facets of `k` in each class; facets outside every class are
/// counted under `None`.
pub fn facet_census(k: &SimplicialComplex) -> BTreeMap<Option<FacetClass>, usize> {
    let mut lookup: HashMap<Vec<G36Vertex>, FacetClass> = HashMap::new();
    for c in FacetClass::ALL {
        for f in orbit_of(&c.representative_vertices()) {
            lookup.insert(f, c);
        }
    }
    let vs = vertices();
    k.maximal_faces()
        .iter()
        .map(|f| {
            let key: Vec<G36Vertex> = f.iter().map(|&i| vs[i]).sorted().collect();
            lookup.get(&key).copied()
        })
        .counts()
        .into_iter()
        .collect()
}

/// Sum of the ambient vectors of a representative facet: an interior point of
/// the cone of that class.
pub fn facet_cone_sample(class: FacetClass) -> Vec<Rat> {
    sum_of_vertices(&class.representative_vertices())
}

/// Same as [`facet_cone_sample`] keyed by class name.
pub fn facet_cone_sample_named(name: &str) -> Result<(Vec<Rat>, FacetClass), G36Error> {
    let c = FacetClass::parse(name)?;
    Ok((facet_cone_sample(c), c))
}

pub fn sum_of_vertices(vs: &[G36Vertex]) -> Vec<Rat> {
    let mut w = vec![rat(0); 20];
    for v in vs {
        v.add_to(&mut w);
    }
    w
}

/// A triangle of `Δ'` and the vertices of its link.
pub struct TriangleLink {
    pub class: &'static str,
    pub triangle: [&'static str; 3],
    pub link: &'static [&'static str],
}

/// One triangle per triangle class with its expected link.
pub const TRIANGLE_LINKS: [TriangleLink; 7] = [
    TriangleLink {
        class: "EEE",
        triangle: ["e_146", "e_256", "e_345"],
        link: &["e_123", "g_163425", "g_142635"],
    },
    TriangleLink {
        class: "EEF",
        triangle: ["e_256", "e_346", "f_1346"],
        link: &["f_1256", "g_132546", "g_142536"],
    },
    TriangleLink {
        class: "EEG",
        triangle: ["e_156", "e_236", "g_142356"],
        link: &["e_124", "e_134", "f_1456"],
    },
    TriangleLink {
        class: "EFF",
        triangle: ["e_135", "f_1345", "f_2346"],
        link: &["e_236", "e_246", "g_153426"],
    },
    TriangleLink {
        class: "EFG",
        triangle: ["e_235", "f_2356", "g_143526"],
        link: &["e_145", "f_1246", "e_134"],
    },
    TriangleLink {
        class: "FFG",
        triangle: ["f_1236", "f_1345", "g_134526"],
        link: &["e_126", "e_236", "g_132645"],
    },
    TriangleLink {
        class: "FGG",
        triangle: ["f_1456", "g_142356", "g_145623"],
        link: &["f_2356", "f_1234"],
    },
];

/// The link of a face of `k` (a complex on [`vertices`]) as sorted vertex
/// lists of its maximal faces.
pub fn link_of(k: &SimplicialComplex, face: &[G36Vertex]) -> Result<Vec<Vec<G36Vertex>>, G36Error> {
    let index = vertex_index();
    let f: Face = face.iter().map(|v| index[v]).collect();
    let link = k.link(&f)?;
    Ok(link
        .maximal_faces()
        .iter()
        .map(|m| face_vertices(m).into_iter().sorted().collect())
        .sorted()
        .collect())
}

/// The bipyramid of a tripartition: its three F vertices and two G vertices.
pub fn bipyramid(t: [[u8; 2]; 3]) -> ([G36Vertex; 3], [G36Vertex; 2]) {
    let [p, q, r] = t;
    let f = |a: [u8; 2], b: [u8; 2]| G36Vertex::f([a[0], a[1], b[0], b[1]]);
    (
        [f(p, q), f(p, r), f(q, r)],
        [G36Vertex::g([p, q, r]), G36Vertex::g([p, r, q])],
    )
}

/// `g_{pqr} + g_{prq} = f_{p∪q} + f_{p∪r} + f_{q∪r}` as exact 20-vectors.
pub fn bipyramid_identity_holds(t: [[u8; 2]; 3]) -> bool {
    let (fs, gs) = bipyramid(t);
    sum_of_vertices(&gs) == sum_of_vertices(&fs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_roundtrip() {
        for v in vertices() {
            assert_eq!(G36Vertex::parse(&v.to_string()).unwrap(), v);
        }
        assert_eq!(
            G36Vertex::parse("g_345612").unwrap().to_string(),
            "g_123456"
        );
        assert_eq!(
            G36Vertex::parse("g_563412").unwrap().to_string(),
            "g_125634"
        );
        assert!(G36Vertex::parse("e_12").is_err());
        assert!(G36Vertex::parse("f_1123").is_err());
    }

    #[test]
    fn vertex_counts() {
        let counts = vertices().iter().map(G36Vertex::kind).counts();
        assert_eq!(
            (
                counts[&VertexKind::E],
                counts[&VertexKind::F],
                counts[&VertexKind::G]
            ),
            (20, 15, 30)
        );
        for v in vertices() {
            assert!(v.ambient().iter().all(|x| *x >= rat(0) && *x <= rat(2)));
        }
    }

    #[test]
    fn edge_examples() {
        let v = |s: &str| G36Vertex::parse(s).unwrap();
        assert_eq!(edge_class(&v("e_123"), &v("g_123456")), Some(EdgeClass::EG));
        assert_eq!(
            edge_class(&v("f_1234"), &v("g_123456")),
            Some(EdgeClass::FG)
        );
        assert_eq!(edge_class(&v("f_1234"), &v("f_1235")), None);
        assert_eq!(
            edge_class(&v("g_123456"), &v("g_125634")),
            Some(EdgeClass::GG)
        );
        // (0, 1, 2) is not a rotation of (2, 1, 0)
        assert_eq!(edge_class(&v("e_356"), &v("g_123456")), None);
    }

    #[test]
    fn edge_census_matches_classes() {
        let c = edge_census();
        let expected = [
            (EdgeClass::EE, 100),
            (EdgeClass::FF, 45),
            (EdgeClass::GG, 15),
            (EdgeClass::EF, 120),
            (EdgeClass::EG, 180),
            (EdgeClass::FG, 90),
        ];
        for (k, n) in expected {
            assert_eq!(c[&k], n, "{k:?}");
        }
    }

    #[test]
    fn orbits() {
        let f = |l: &[&str]| parse_face(l).unwrap();
        assert_eq!(orbit_of(&f(&["e_123"])).len(), 20);
        assert_eq!(orbit_of(&f(&["e_123", "e_456"])).len(), 10);
        assert_eq!(
            orbit_of(&f(&["e_126", "e_134", "e_356", "g_125634"])).len(),
            240
        );
        assert_eq!(orbit_of(&f(&["g_123456"])).len(), 30);
    }

    #[test]
    fn bipyramid_identity() {
        assert!(tripartitions().into_iter().all(bipyramid_identity_holds));
        assert_eq!(tripartitions().len(), 15);
    }
}
