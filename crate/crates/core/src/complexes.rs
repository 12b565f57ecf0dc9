//! Labeled simplicial complexes on the generators of `E_q^r`: the Taylor
//! simplex, the Scarf complex and the complex `U^r_q` spanned by translated
//! square-free tuples.
//!
//! Faces are bit sets over the generator list of [`Generators`], which holds
//! `N^r_q` in enumeration order (lex-greatest first). The Scarf search is
//! written against plain exponent vectors so the same code handles powers of
//! arbitrary square-free ideals (see [`crate::psi`]).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use crate::combinatorics::{enumerate_compositions, Composition, MAX_SUBSET_Q};
use crate::error::{invalid, Error, Result};
use crate::extremal::{
    divides_lcm_of, divides_slice, generator_exponent, join_into, vector_exponent, ExtExponent,
};
use crate::homology::{self, Field};
use crate::par;

/// Faces are bit sets, so complexes may have at most this many vertices.
pub const MAX_VERTICES: usize = 128;

/// Default cap on the number of faces any enumeration may produce.
pub const DEFAULT_FACE_BUDGET: usize = 1 << 22;

/// A face: a set of generator indices stored as a bit set.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Face(u128);

impl Face {
    pub const EMPTY: Face = Face(0);

    pub fn from_bits(bits: u128) -> Self {
        Face(bits)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Result<Self> {
        let mut bits = 0u128;
        for i in indices {
            if i >= MAX_VERTICES {
                return Err(Error::Budget {
                    what: "vertex",
                    needed: i as u128 + 1,
                    limit: MAX_VERTICES as u128,
                });
            }
            bits |= 1u128 << i;
        }
        Ok(Face(bits))
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_VERTICES);
        Face(1u128 << i)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn dim(self) -> isize {
        self.len() as isize - 1
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VERTICES && self.0 & (1u128 << i) != 0
    }

    pub fn with(self, i: usize) -> Self {
        Face(self.0 | (1u128 << i))
    }

    pub fn without(self, i: usize) -> Self {
        Face(self.0 & !(1u128 << i))
    }

    pub fn union(self, other: Face) -> Self {
        Face(self.0 | other.0)
    }

    pub fn is_subset_of(self, other: Face) -> bool {
        self.0 & !other.0 == 0
    }

    /// Lowest index, i.e. the lex-greatest vertex.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 127 - self.0.leading_zeros() as usize)
    }

    /// Vertex indices in increasing order.
    pub fn vertices(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }

    /// Faces obtained by dropping one vertex.
    pub fn facets_of_boundary(self) -> impl Iterator<Item = (usize, Face)> {
        self.vertices().map(move |v| (v, self.without(v)))
    }

    /// All nonempty subsets of this face.
    pub fn nonempty_subfaces(self) -> impl Iterator<Item = Face> {
        // Standard submask walk, descending from the face itself.
        let full = self.0;
        let mut sub = full;
        let mut done = full == 0;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Face(sub);
            sub = (sub.wrapping_sub(1)) & full;
            if sub == 0 {
                done = true;
            }
            Some(out)
        })
    }
}

/// The generators `ε^a`, `a ∈ N^r_q`, with their exponent arrays.
///
/// Exponent arrays have `2^q − 1` entries and are only built for
/// `q ≤ MAX_SUBSET_Q`; beyond that, divisibility questions are answered from
/// the compositions directly.
#[derive(Clone, Debug)]
pub struct Generators {
    q: usize,
    r: u32,
    comps: Vec<Composition>,
    labels: Vec<Vec<u32>>,
    lookup: HashMap<Composition, usize>,
}

impl Generators {
    pub fn new(q: usize, r: u32) -> Result<Self> {
        let comps = enumerate_compositions(q, r)?;
        let labels = if q as u32 <= MAX_SUBSET_Q {
            comps
                .iter()
                .map(|a| generator_exponent(a).map(|e| e.exps().to_vec()))
                .collect::<Result<Vec<_>>>()?
        } else {
            Vec::new()
        };
        let lookup = comps
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, c)| (c, i))
            .collect();
        Ok(Self {
            q,
            r,
            comps,
            labels,
            lookup,
        })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.comps
    }

    pub fn composition(&self, i: usize) -> &Composition {
        &self.comps[i]
    }

    /// Exponent arrays of the generators, in generator order (empty when `q > MAX_SUBSET_Q`).
    pub fn vertex_labels(&self) -> &[Vec<u32>] {
        &self.labels
    }

    pub fn has_dense_labels(&self) -> bool {
        !self.labels.is_empty()
    }

    pub(crate) fn require_dense_labels(&self) -> Result<()> {
        if self.has_dense_labels() {
            Ok(())
        } else {
            Err(invalid(format!(
                "explicit labels need q <= {MAX_SUBSET_Q}, got q = {}",
                self.q
            )))
        }
    }

    /// The generators dividing the label of `face`.
    pub fn divisor_set_of(&self, face: Face) -> Face {
        if self.has_dense_labels() {
            return divisor_set(&self.labels, &face_lcm(&self.labels, face));
        }
        let parts: Vec<&[u32]> = face.vertices().map(|v| self.comps[v].parts()).collect();
        let mut bits = 0u128;
        for (c, comp) in self.comps.iter().enumerate() {
            if face.contains(c) || divides_lcm_of(comp.parts(), &parts) {
                bits |= 1u128 << c;
            }
        }
        Face(bits)
    }

    pub fn index_of(&self, a: &Composition) -> Option<usize> {
        self.lookup.get(a).copied()
    }

    fn require_index(&self, a: &Composition) -> Result<usize> {
        self.index_of(a)
            .ok_or_else(|| Error::Mismatch(format!("{a} is not in N^{}_{}", self.r, self.q)))
    }

    pub fn face(&self, vertices: &[Composition]) -> Result<Face> {
        self.check_face_capacity()?;
        let idx = vertices
            .iter()
            .map(|v| self.require_index(v))
            .collect::<Result<Vec<_>>>()?;
        Face::from_indices(idx)
    }

    pub fn face_vertices(&self, face: Face) -> Vec<Composition> {
        face.vertices().map(|i| self.comps[i].clone()).collect()
    }

    pub(crate) fn check_face_capacity(&self) -> Result<()> {
        if self.len() > MAX_VERTICES {
            return Err(Error::Budget {
                what: "vertex",
                needed: self.len() as u128,
                limit: MAX_VERTICES as u128,
            });
        }
        Ok(())
    }

    /// `lcm` of the generators in the face, as a raw exponent array.
    pub fn label_exps(&self, face: Face) -> Vec<u32> {
        face_lcm(&self.labels, face)
    }

    pub fn label(&self, face: Face) -> ExtExponent {
        ExtExponent::from_exps(self.q as u32, self.label_exps(face)).expect("consistent q")
    }

    /// Whether `{ε^a, ε^b}` is an edge of the Scarf complex.
    pub fn is_scarf_edge_idx(&self, i: usize, j: usize) -> bool {
        if !self.has_dense_labels() {
            let (a, b) = (self.comps[i].parts(), self.comps[j].parts());
            return (0..self.len())
                .all(|c| c == i || c == j || !divides_lcm_of(self.comps[c].parts(), &[a, b]));
        }
        let m = join2(&self.labels[i], &self.labels[j]);
        (0..self.len()).all(|c| c == i || c == j || !divides_slice(&self.labels[c], &m))
    }

    pub fn format_face(&self, face: Face) -> String {
        face.vertices()
            .map(|i| self.comps[i].to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the face text format `(1,1,0),(1,0,1)`.
    pub fn parse_face(&self, text: &str) -> Result<Face> {
        let mut vertices = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| invalid(format!("expected '(' in {rest:?}")))?;
            if !rest[..open].trim().trim_matches(',').trim().is_empty() {
                return Err(invalid(format!("stray text before tuple in {rest:?}")));
            }
            let close = rest[open..]
                .find(')')
                .ok_or_else(|| invalid(format!("unterminated tuple in {rest:?}")))?
                + open;
            let comp: Composition = rest[open..=close].parse()?;
            vertices.push(self.require_index(&comp)?);
            rest = rest[close + 1..]
                .trim_start()
                .trim_start_matches(',')
                .trim_start();
        }
        if vertices.is_empty() {
            return Err(Error::EmptyFace("face line without vertices"));
        }
        let face = Face::from_indices(vertices.iter().copied())?;
        if face.len() != vertices.len() {
            return Err(invalid(format!("repeated vertex in {text:?}")));
        }
        Ok(face)
    }
}

pub(crate) fn join2(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

/// `lcm` of the vertex labels in `face`; the empty face gets the zero vector.
pub(crate) fn face_lcm(labels: &[Vec<u32>], face: Face) -> Vec<u32> {
    let width = labels.first().map_or(0, Vec::len);
    let mut acc = vec![0u32; width];
    for v in face.vertices() {
        join_into(&mut acc, &labels[v]);
    }
    acc
}

/// The set of vertices whose label divides `m`.
pub(crate) fn divisor_set(labels: &[Vec<u32>], m: &[u32]) -> Face {
    let mut bits = 0u128;
    for (i, l) in labels.iter().enumerate() {
        if divides_slice(l, m) {
            bits |= 1u128 << i;
        }
    }
    Face(bits)
}

/// The integer-point test: every nonempty `σ' ⊆ σ` has exactly its own
/// vertices among the generators dividing `m_{σ'}`.
pub(crate) fn is_scarf_face_in(labels: &[Vec<u32>], face: Face) -> bool {
    face.nonempty_subfaces()
        .all(|sub| divisor_set(labels, &face_lcm(labels, sub)) == sub)
}

/// Level-by-level Scarf search: a face of size `k + 1` is a candidate only if
/// all of its size-`k` subfaces were accepted.
pub(crate) fn scarf_search(
    labels: &[Vec<u32>],
    max_dim: Option<usize>,
    budget: usize,
) -> Result<Vec<Face>> {
    let n = labels.len();
    if n > MAX_VERTICES {
        return Err(Error::Budget {
            what: "vertex",
            needed: n as u128,
            limit: MAX_VERTICES as u128,
        });
    }
    let mut all: Vec<Face> = (0..n).map(Face::singleton).collect();
    if all.len() > budget {
        return Err(face_budget(all.len(), budget));
    }
    let mut level = all.clone();
    let mut size = 1usize;
    while !level.is_empty() && max_dim.is_none_or(|d| size <= d) {
        let known: HashSet<Face> = level.iter().copied().collect();
        let candidates: Vec<Face> = level
            .iter()
            .flat_map(|f| {
                let top = f.last().expect("nonempty");
                (top + 1..n).map(move |v| f.with(v))
            })
            .filter(|c| c.facets_of_boundary().all(|(_, sub)| known.contains(&sub)))
            .collect();
        // All proper subfaces are already Scarf, so only the face itself is tested.
        let next = par::filter(candidates, |&c| {
            divisor_set(labels, &face_lcm(labels, c)) == c
        });
        if all.len() + next.len() > budget {
            return Err(face_budget(all.len() + next.len(), budget));
        }
        all.extend_from_slice(&next);
        level = next;
        size += 1;
    }
    Ok(all)
}

fn face_budget(needed: usize, limit: usize) -> Error {
    Error::Budget {
        what: "face",
        needed: needed as u128,
        limit: limit as u128,
    }
}

/// The maximal elements of a face family.
pub fn maximal_faces(faces: &[Face]) -> Vec<Face> {
    let mut sorted: Vec<Face> = faces.to_vec();
    sorted.sort_by_key(|f| std::cmp::Reverse(f.len()));
    sorted.dedup();
    let mut out: Vec<Face> = Vec::new();
    for f in sorted {
        if !out.iter().any(|g| f.is_subset_of(*g)) {
            out.push(f);
        }
    }
    out.sort_by_key(|f| (f.len(), f.bits()));
    out
}

/// Face counts by dimension.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FVector(pub Vec<usize>);

impl FVector {
    pub fn from_faces<'a, I: IntoIterator<Item = &'a Face>>(faces: I) -> Self {
        let mut counts: Vec<usize> = Vec::new();
        for f in faces {
            let d = f.len() - 1;
            if counts.len() <= d {
                counts.resize(d + 1, 0);
            }
            counts[d] += 1;
        }
        FVector(counts)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn dimension(&self) -> isize {
        self.0.len() as isize - 1
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledFace {
    pub face: Face,
    pub label: ExtExponent,
}

/// A complex on the generators of `E_q^r`, given by facets and optionally
/// materialized into its full labeled face list.
#[derive(Clone, Debug)]
pub struct LabeledComplex {
    gens: Arc<Generators>,
    facets: Vec<Face>,
    faces: Option<Vec<LabeledFace>>,
}

impl LabeledComplex {
    /// Builds a complex from facets, which must form an antichain.
    pub fn from_facets(gens: Arc<Generators>, facets: Vec<Face>) -> Result<Self> {
        gens.check_face_capacity()?;
        for (i, f) in facets.iter().enumerate() {
            if f.is_empty() {
                return Err(Error::EmptyFace("facets must be nonempty"));
            }
            if f.last().is_some_and(|v| v >= gens.len()) {
                return Err(Error::Mismatch("facet uses an unknown vertex".into()));
            }
            if facets
                .iter()
                .enumerate()
                .any(|(j, g)| i != j && f.is_subset_of(*g))
            {
                return Err(Error::Structural(format!(
                    "facet {} is contained in another facet",
                    gens.format_face(*f)
                )));
            }
        }
        Ok(Self {
            gens,
            facets,
            faces: None,
        })
    }

    /// The complex generated by arbitrary faces; facets are their maximal elements.
    pub fn generated_by(gens: Arc<Generators>, faces: &[Face]) -> Result<Self> {
        Self::from_facets(gens, maximal_faces(faces))
    }

    pub fn generators(&self) -> &Arc<Generators> {
        &self.gens
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_materialized(&self) -> bool {
        self.faces.is_some()
    }

    /// The labeled face list, sorted by size and then by bits.
    pub fn faces(&self) -> Option<&[LabeledFace]> {
        self.faces.as_deref()
    }

    fn require_faces(&self) -> Result<&[LabeledFace]> {
        self.faces()
            .ok_or_else(|| Error::Domain("complex must be materialized first".into()))
    }

    pub fn face_set(&self) -> Result<HashSet<Face>> {
        Ok(self.require_faces()?.iter().map(|f| f.face).collect())
    }

    pub fn f_vector(&self) -> Result<FVector> {
        Ok(FVector::from_faces(
            self.require_faces()?.iter().map(|f| &f.face),
        ))
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset_of(*f))
    }

    /// One face per line in the `(a,b,..),(c,d,..)` format.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let faces: Vec<Face> = match &self.faces {
            Some(fs) => fs.iter().map(|f| f.face).collect(),
            None => self.facets.clone(),
        };
        for f in faces {
            out.push_str(&self.gens.format_face(f));
            out.push('\n');
        }
        out
    }
}

/// The vertices of the Taylor complex of `E_q^r`.
pub fn taylor_vertices(q: usize, r: u32) -> Result<Vec<Composition>> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    enumerate_compositions(q, r)
}

/// Whether `{ε^a, ε^b}` is a Scarf edge: no third generator divides its lcm.
pub fn is_scarf_edge(a: &Composition, b: &Composition) -> Result<bool> {
    crate::combinatorics::lex_compare(a, b)?;
    if a == b {
        return Err(invalid("a Scarf edge needs two distinct vertices"));
    }
    let gens = Generators::new(a.q(), a.r())?;
    let i = gens.require_index(a)?;
    let j = gens.require_index(b)?;
    Ok(gens.is_scarf_edge_idx(i, j))
}

/// Whether the face lies in the Scarf complex of `E_q^r`.
pub fn is_scarf_face(face: &[Composition]) -> Result<bool> {
    let first = face
        .first()
        .ok_or(Error::EmptyFace("Scarf test of no vertices"))?;
    let gens = Generators::new(first.q(), first.r())?;
    gens.require_dense_labels()?;
    let f = gens.face(face)?;
    if f.len() != face.len() {
        return Err(invalid("repeated vertex in face"));
    }
    Ok(is_scarf_face_in(gens.vertex_labels(), f))
}

/// Facets `ε^a · U^{r-|a|}_q` for `r - q < |a| < r` (the single vertex for `q = 1`).
pub fn u_facets(gens: &Generators) -> Result<Vec<Face>> {
    let (q, r) = (gens.q(), gens.r());
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    gens.check_face_capacity()?;
    if q == 1 {
        return Ok(vec![Face::singleton(0)]);
    }
    let lo = (r as i64 - q as i64 + 1).max(0) as u32;
    let mut facets = Vec::new();
    for s in lo..r {
        for a in enumerate_compositions(q, s)? {
            facets.push(translated_square_free(gens, a.parts(), r - s)?);
        }
    }
    facets.sort_by_key(|f| (f.len(), f.bits()));
    Ok(facets)
}

/// The facet `ε^a · U^{r-|a|}_q` of `U^r_q` as a face of the Taylor complex.
pub fn u_facet(gens: &Generators, a: &[u32]) -> Result<Face> {
    let (q, r) = (gens.q(), gens.r());
    if a.len() != q {
        return Err(Error::Mismatch(format!(
            "vector {a:?} does not have {q} entries"
        )));
    }
    let s: u32 = a.iter().sum();
    if !((s as i64) > r as i64 - q as i64 && s < r) {
        return Err(Error::Domain(format!(
            "|a| = {s} must satisfy {} < |a| < {r}",
            r as i64 - q as i64
        )));
    }
    translated_square_free(gens, a, r - s)
}

/// `ε^a · U^{k}_q`: all `a + w` with `w` a 0/1 vector of weight `k`.
pub(crate) fn translated_square_free(gens: &Generators, a: &[u32], k: u32) -> Result<Face> {
    let q = a.len();
    let k = k as usize;
    if k > q {
        return Err(invalid(format!("weight {k} exceeds {q}")));
    }
    let mut idx = Vec::new();
    let mut pick: Vec<usize> = (0..k).collect();
    loop {
        let mut parts = a.to_vec();
        for &i in &pick {
            parts[i] += 1;
        }
        idx.push(gens.require_index(&Composition::new(parts)?)?);
        // Advance to the next k-subset of 0..q in lexicographic order.
        let Some(t) = (0..k).rev().find(|&t| pick[t] < q - k + t) else {
            break;
        };
        pick[t] += 1;
        for u in t + 1..k {
            pick[u] = pick[u - 1] + 1;
        }
    }
    Face::from_indices(idx)
}

/// The facets of `L^2_q`: all pairwise products (for `q > 2`) and the stars
/// `{ε_i ε_j : j ∈ [q]}`.
pub fn l2_facets(q: usize) -> Result<(Arc<Generators>, Vec<Face>)> {
    let gens = Arc::new(Generators::new(q, 2)?);
    let unit = |i: usize, j: usize| {
        let mut p = vec![0u32; q];
        p[i] += 1;
        p[j] += 1;
        Composition::new(p)
    };
    let mut facets = Vec::new();
    if q > 2 {
        let mut idx = Vec::new();
        for i in 0..q {
            for j in i + 1..q {
                idx.push(gens.require_index(&unit(i, j)?)?);
            }
        }
        facets.push(Face::from_indices(idx)?);
    }
    for i in 0..q {
        let idx = (0..q)
            .map(|j| gens.require_index(&unit(i, j)?))
            .collect::<Result<Vec<_>>>()?;
        facets.push(Face::from_indices(idx)?);
    }
    facets.sort_by_key(|f| (f.len(), f.bits()));
    Ok((gens, facets))
}

/// The complex `U^r_q` (facets only).
pub fn u_complex(q: usize, r: u32) -> Result<LabeledComplex> {
    let gens = Arc::new(Generators::new(q, r)?);
    let facets = u_facets(&gens)?;
    LabeledComplex::from_facets(gens, facets)
}

/// Expands the facets into every nonempty face, labeled, up to `max_dim`.
pub fn materialize(
    complex: &LabeledComplex,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<LabeledComplex> {
    let gens = complex.generators().clone();
    gens.require_dense_labels()?;
    let mut seen: HashSet<Face> = HashSet::new();
    for facet in complex.facets() {
        let k = facet.len();
        let capped = max_dim.map_or(k, |d| k.min(d + 1));
        let own: u128 = (1..=capped)
            .map(|s| crate::combinatorics::binomial(k as u64, s as u64))
            .sum();
        if own > budget as u128 {
            return Err(Error::Budget {
                what: "face",
                needed: own,
                limit: budget as u128,
            });
        }
        for sub in facet.nonempty_subfaces() {
            if sub.len() <= capped {
                seen.insert(sub);
            }
        }
        if seen.len() > budget {
            return Err(face_budget(seen.len(), budget));
        }
    }
    let mut faces: Vec<Face> = seen.into_iter().collect();
    faces.sort_by_key(|f| (f.len(), f.bits()));
    let labeled = par::map(&faces, |&f| LabeledFace {
        face: f,
        label: gens.label(f),
    });
    let facets = if max_dim.is_some() {
        maximal_faces(&faces)
    } else {
        complex.facets().to_vec()
    };
    Ok(LabeledComplex {
        gens,
        facets,
        faces: Some(labeled),
    })
}

/// The Scarf complex of `E_q^r`, materialized.
pub fn scarf_complex(
    q: usize,
    r: u32,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<LabeledComplex> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let gens = Arc::new(Generators::new(q, r)?);
    scarf_complex_of(gens, max_dim, budget)
}

pub(crate) fn scarf_complex_of(
    gens: Arc<Generators>,
    max_dim: Option<usize>,
    budget: usize,
) -> Result<LabeledComplex> {
    gens.require_dense_labels()?;
    let mut faces = scarf_search(gens.vertex_labels(), max_dim, budget)?;
    faces.sort_by_key(|f| (f.len(), f.bits()));
    let facets = maximal_faces(&faces);
    let labeled = par::map(&faces, |&f| LabeledFace {
        face: f,
        label: gens.label(f),
    });
    Ok(LabeledComplex {
        gens,
        facets,
        faces: Some(labeled),
    })
}

/// Closed-form label `ε^a · ∏_A x_A^{min(|A|, r-|a|)}` of the facet `ε^a U^{r-|a|}_q`.
pub fn u_facet_label(a: &[u32], q: usize, r: u32) -> Result<ExtExponent> {
    if a.len() != q {
        return Err(Error::Mismatch(format!(
            "vector {a:?} does not have {q} entries"
        )));
    }
    let s: u32 = a.iter().sum();
    if !((s as i64) > r as i64 - q as i64 && s < r) {
        return Err(Error::Domain(format!(
            "|a| = {s} must satisfy {} < |a| < {r}",
            r as i64 - q as i64
        )));
    }
    let base = vector_exponent(a)?;
    let k = r - s;
    let exps = base
        .exps()
        .iter()
        .enumerate()
        .map(|(idx, &e)| e + ((idx + 1).count_ones()).min(k))
        .collect();
    ExtExponent::from_exps(q as u32, exps)
}

/// All joins of vertex labels (the lcm lattice of the generators).
pub(crate) fn lcm_lattice(labels: &[Vec<u32>], budget: usize) -> Result<Vec<Vec<u32>>> {
    let mut seen: HashSet<Vec<u32>> = labels.iter().cloned().collect();
    let mut frontier: Vec<Vec<u32>> = seen.iter().cloned().collect();
    while let Some(m) = frontier.pop() {
        for g in labels {
            let j = join2(&m, g);
            if !seen.contains(&j) {
                seen.insert(j.clone());
                if seen.len() > budget {
                    return Err(Error::Budget {
                        what: "lcm lattice",
                        needed: seen.len() as u128,
                        limit: budget as u128,
                    });
                }
                frontier.push(j);
            }
        }
    }
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Whether the labeled complex supports a free resolution of all of `E_q^r`:
/// every generator is a vertex, and for every `m` in the lcm lattice the
/// faces with label dividing `m` form an acyclic (or empty) complex.
pub fn supports_resolution(complex: &LabeledComplex, field: Field) -> Result<bool> {
    let faces = complex.require_faces()?;
    let gens = complex.generators();
    gens.require_dense_labels()?;
    let vertex_count = faces.iter().filter(|f| f.face.len() == 1).count();
    if vertex_count != gens.len() {
        return Ok(false);
    }
    let lattice = lcm_lattice(gens.vertex_labels(), DEFAULT_FACE_BUDGET)?;
    let verdicts = par::try_map(&lattice, |m| {
        let below: Vec<Face> = faces
            .iter()
            .filter(|f| divides_slice(f.label.exps(), m))
            .map(|f| f.face)
            .collect();
        homology::is_acyclic_or_empty(&below, field)
    })?;
    Ok(verdicts.into_iter().all(|ok| ok))
}

/// Whether no face shares its label with one of its codimension-one faces.
pub fn is_minimal_support(complex: &LabeledComplex) -> Result<bool> {
    let faces = complex.require_faces()?;
    let labels: HashMap<Face, &ExtExponent> = faces.iter().map(|f| (f.face, &f.label)).collect();
    Ok(faces.iter().all(|f| {
        f.face.len() < 2
            || f.face
                .facets_of_boundary()
                .all(|(_, sub)| labels.get(&sub).is_none_or(|l| *l != &f.label))
    }))
}
