//! Discrete Morse matchings on Taylor complexes of `E_q^r` and a verifier.
//!
//! A matching is a list of directed pairs `σ → σ \ {v}`. The verifier checks
//! disjointness, label homogeneity and acyclicity of the modified Hasse
//! diagram, and lists the critical (unmatched) faces.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::combinatorics::Composition;
use crate::complexes::{is_scarf_face_in, translated_square_free, Face, Generators};
use crate::error::{invalid, Error, Result};
use crate::extremal::divides_slice;
use crate::par;

/// Full-Taylor enumerations refuse more generators than this unless overridden.
pub const DEFAULT_MAX_TAYLOR_GENERATORS: usize = 20;

/// A set of directed pairs `(σ, τ)` with `τ = σ \ {v}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MorseMatching {
    pairs: Vec<(Face, Face)>,
    domain: String,
}

impl MorseMatching {
    pub fn new(mut pairs: Vec<(Face, Face)>, domain: impl Into<String>) -> Self {
        pairs.sort_unstable_by_key(|(s, _)| (s.len(), s.bits()));
        Self {
            pairs,
            domain: domain.into(),
        }
    }

    pub fn pairs(&self) -> &[(Face, Face)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Description of the face set the matching lives on.
    pub fn domain(&self) -> &str {
        &self.domain
    }

    /// One pair per line as `FACE -> FACE`.
    pub fn to_certificate(&self, gens: &Generators) -> String {
        let mut out = String::new();
        for (s, t) in &self.pairs {
            out.push_str(&gens.format_face(*s));
            out.push_str(" -> ");
            out.push_str(&gens.format_face(*t));
            out.push('\n');
        }
        out
    }

    /// Parses a certificate; blank lines and `#` comments are skipped.
    pub fn from_certificate(gens: &Generators, text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parse_err = |msg: String| Error::Parse { line: n + 1, msg };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| parse_err("expected `FACE -> FACE`".into()))?;
            let s = gens.parse_face(lhs).map_err(|e| parse_err(e.to_string()))?;
            let t = gens.parse_face(rhs).map_err(|e| parse_err(e.to_string()))?;
            pairs.push((s, t));
        }
        Ok(Self::new(pairs, "certificate"))
    }
}

/// Outcome of [`verify_matching`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatchingReport {
    pub is_matching: bool,
    pub is_homogeneous: bool,
    pub is_acyclic: bool,
    pub critical_cells: Vec<Face>,
}

impl MatchingReport {
    pub fn is_morse(&self) -> bool {
        self.is_matching && self.is_homogeneous && self.is_acyclic
    }
}

/// An explicit family of nonempty faces on the generators, with labels.
///
/// Labels are exponent arrays when the generators carry them; otherwise each
/// face is keyed by the set of generators dividing its label, which
/// determines the label since the label is the lcm of that set.
#[derive(Clone, Debug)]
pub struct FaceSet {
    gens: Arc<Generators>,
    faces: Vec<Face>,
    labels: Vec<u32>,
    width: usize,
    index: HashMap<Face, usize>,
}

impl FaceSet {
    fn build(gens: Arc<Generators>, faces: Vec<Face>, labels: Vec<u32>) -> Self {
        let width = gens.vertex_labels().first().map_or(4, Vec::len);
        let index = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
        Self {
            gens,
            faces,
            labels,
            width,
            index,
        }
    }

    /// Every nonempty subset of the generators.
    pub fn full_taylor(gens: Arc<Generators>, max_generators: usize) -> Result<Self> {
        let n = gens.len();
        if n > max_generators || n >= 64 {
            return Err(Error::Budget {
                what: "Taylor generator",
                needed: n as u128,
                limit: max_generators.min(63) as u128,
            });
        }
        gens.require_dense_labels()?;
        let width = gens.vertex_labels()[0].len();
        let total = (1usize << n) - 1;
        let mut labels = vec![0u32; (total + 1) * width];
        for bits in 1..=total {
            let low = bits.trailing_zeros() as usize;
            let rest = bits & (bits - 1);
            let g = &gens.vertex_labels()[low];
            for t in 0..width {
                labels[bits * width + t] = labels[rest * width + t].max(g[t]);
            }
        }
        labels.drain(..width);
        let faces = (1..=total).map(|b| Face::from_bits(b as u128)).collect();
        Ok(Self::build(gens, faces, labels))
    }

    /// All faces with at most `max_dim + 1` vertices.
    pub fn up_to_dim(gens: Arc<Generators>, max_dim: usize) -> Result<Self> {
        gens.check_face_capacity()?;
        let n = gens.len();
        let mut faces: Vec<Face> = (0..n).map(Face::singleton).collect();
        let mut start = 0;
        for _ in 0..max_dim {
            let end = faces.len();
            for k in start..end {
                let f = faces[k];
                for v in f.last().expect("nonempty") + 1..n {
                    faces.push(f.with(v));
                }
            }
            start = end;
        }
        Self::from_faces(gens, faces)
    }

    pub fn from_faces(gens: Arc<Generators>, mut faces: Vec<Face>) -> Result<Self> {
        gens.check_face_capacity()?;
        if faces.iter().any(|f| f.is_empty()) {
            return Err(Error::EmptyFace("face sets hold nonempty faces only"));
        }
        if faces
            .iter()
            .any(|f| f.last().is_some_and(|v| v >= gens.len()))
        {
            return Err(Error::Mismatch("face uses an unknown vertex".into()));
        }
        faces.sort_unstable_by_key(|f| (f.len(), f.bits()));
        faces.dedup();
        let labels = if gens.has_dense_labels() {
            par::map(&faces, |&f| gens.label_exps(f)).concat()
        } else {
            par::map(&faces, |&f| {
                let bits = gens.divisor_set_of(f).bits();
                [0, 32, 64, 96].map(|s| (bits >> s) as u32)
            })
            .concat()
        };
        Ok(Self::build(gens, faces, labels))
    }

    pub fn generators(&self) -> &Arc<Generators> {
        &self.gens
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn contains(&self, face: Face) -> bool {
        self.index.contains_key(&face)
    }

    fn label_at(&self, k: usize) -> &[u32] {
        &self.labels[k * self.width..(k + 1) * self.width]
    }

    /// The stored label (or divisor-set key) of a face in the set.
    pub fn label(&self, face: Face) -> Option<&[u32]> {
        self.index.get(&face).map(|&k| self.label_at(k))
    }
}

/// Checks a matching against an explicit face set.
pub fn verify_matching(matching: &MorseMatching, y: &FaceSet) -> Result<MatchingReport> {
    let mut seen: HashMap<Face, usize> = HashMap::new();
    let mut upper_of: HashMap<Face, Vec<Face>> = HashMap::new();
    let mut pair_set: HashSet<(Face, Face)> = HashSet::new();
    let mut is_homogeneous = true;
    for &(s, t) in matching.pairs() {
        if !(t.is_subset_of(s) && s.len() == t.len() + 1) {
            return Err(Error::Structural(format!(
                "pair {} -> {} does not remove exactly one vertex",
                y.gens.format_face(s),
                y.gens.format_face(t)
            )));
        }
        let (Some(ls), Some(lt)) = (y.label(s), y.label(t)) else {
            return Err(Error::Structural(format!(
                "pair {} -> {} leaves the face set",
                y.gens.format_face(s),
                y.gens.format_face(t)
            )));
        };
        is_homogeneous &= ls == lt;
        *seen.entry(s).or_default() += 1;
        *seen.entry(t).or_default() += 1;
        upper_of.entry(t).or_default().push(s);
        pair_set.insert((s, t));
    }
    let is_matching = seen.values().all(|&c| c == 1);

    // Cycles of a homogeneous matching never leave a label class.
    let classes: Vec<Vec<usize>> = if is_homogeneous {
        let mut order: Vec<usize> = (0..y.len()).collect();
        par::sort_by(&mut order, |&a, &b| y.label_at(a).cmp(y.label_at(b)));
        let mut out = Vec::new();
        let mut start = 0;
        for k in 1..=order.len() {
            if k == order.len() || y.label_at(order[k]) != y.label_at(order[start]) {
                out.push(order[start..k].to_vec());
                start = k;
            }
        }
        out
    } else {
        vec![(0..y.len()).collect()]
    };
    let acyclic = par::map(&classes, |members| {
        class_is_acyclic(y, members, &pair_set, &upper_of)
    });
    let is_acyclic = acyclic.into_iter().all(|ok| ok);

    let critical_cells = y
        .faces
        .iter()
        .copied()
        .filter(|f| !seen.contains_key(f))
        .collect();
    Ok(MatchingReport {
        is_matching,
        is_homogeneous,
        is_acyclic,
        critical_cells,
    })
}

/// Depth-first cycle search in the modified Hasse diagram restricted to `members`.
fn class_is_acyclic(
    y: &FaceSet,
    members: &[usize],
    pairs: &HashSet<(Face, Face)>,
    upper_of: &HashMap<Face, Vec<Face>>,
) -> bool {
    let local: HashMap<Face, usize> = members
        .iter()
        .enumerate()
        .map(|(i, &k)| (y.faces[k], i))
        .collect();
    let successors = |i: usize| -> Vec<usize> {
        let face = y.faces[members[i]];
        let mut out = Vec::new();
        for v in face.vertices() {
            let sub = face.without(v);
            if let Some(&j) = local.get(&sub) {
                if !pairs.contains(&(face, sub)) {
                    out.push(j);
                }
            }
        }
        if let Some(ups) = upper_of.get(&face) {
            out.extend(ups.iter().filter_map(|u| local.get(u).copied()));
        }
        out
    };
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut color = vec![0u8; members.len()];
    for root in 0..members.len() {
        if color[root] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(root, successors(root), 0)];
        color[root] = 1;
        while let Some((node, succ, pos)) = stack.last_mut() {
            if *pos < succ.len() {
                let next = succ[*pos];
                *pos += 1;
                match color[next] {
                    0 => {
                        color[next] = 1;
                        let s = successors(next);
                        stack.push((next, s, 0));
                    }
                    1 => return false,
                    _ => {}
                }
            } else {
                color[*node] = 2;
                stack.pop();
            }
        }
    }
    true
}

/// Pairs `{a, b, c_{a,b}} → {a, b}` for every non-Scarf edge, where `c_{a,b}`
/// is the lex-greatest third generator dividing the edge label.
pub fn build_edge_matching(gens: &Generators) -> Result<MorseMatching> {
    gens.check_face_capacity()?;
    let n = gens.len();
    let rows: Vec<usize> = (0..n).collect();
    let per_row = par::map(&rows, |&i| {
        let mut out = Vec::new();
        for j in i + 1..n {
            let edge = Face::singleton(i).with(j);
            let others = Face::from_bits(gens.divisor_set_of(edge).bits() & !edge.bits());
            if let Some(c) = others.first() {
                out.push((edge.with(c), edge));
            }
        }
        out
    });
    Ok(MorseMatching::new(
        per_row.concat(),
        format!("faces of dimension <= 2 of T^{}_{}", gens.r(), gens.q()),
    ))
}

/// The data behind the matching for `q ≤ 4`: non-Scarf edges and the
/// chosen third vertex `ι` for each of them.
#[derive(Clone, Debug)]
pub struct SmallQContext {
    gens: Arc<Generators>,
    non_scarf: Vec<u128>,
    iota: HashMap<(usize, usize), usize>,
}

impl SmallQContext {
    pub fn new(gens: Arc<Generators>) -> Result<Self> {
        if gens.q() > 4 {
            return Err(invalid(format!(
                "the small-q matching needs q <= 4, got q = {}",
                gens.q()
            )));
        }
        gens.check_face_capacity()?;
        let n = gens.len();
        let rows: Vec<usize> = (0..n).collect();
        let non_scarf: Vec<u128> = par::map(&rows, |&i| {
            (0..n)
                .filter(|&j| j != i && !gens.is_scarf_edge_idx(i, j))
                .fold(0u128, |acc, j| acc | (1u128 << j))
        });
        let labels = gens.vertex_labels();
        let mut iota = HashMap::new();
        for i in 0..n {
            for j in Face::from_bits(non_scarf[i]).vertices().filter(|&j| j > i) {
                let m = crate::complexes::join2(&labels[i], &labels[j]);
                let c = (i + 1..n).find(|&c| {
                    c != j && non_scarf[i] & (1u128 << c) == 0 && divides_slice(&labels[c], &m)
                });
                let c = c.ok_or_else(|| {
                    Error::Internal(format!(
                        "no admissible third vertex for the non-Scarf edge {} {}",
                        gens.composition(i),
                        gens.composition(j)
                    ))
                })?;
                iota.insert((i, j), c);
            }
        }
        Ok(Self {
            gens,
            non_scarf,
            iota,
        })
    }

    pub fn generators(&self) -> &Arc<Generators> {
        &self.gens
    }

    /// Whether the edge `{i, j}` is not Scarf.
    pub fn is_non_scarf_pair(&self, i: usize, j: usize) -> bool {
        self.non_scarf[i] & (1u128 << j) != 0
    }

    /// The largest non-Scarf pair inside the face, as generator indices
    /// `(a, b)` with `a` lex-greater than `b`.
    pub fn nu(&self, face: Face) -> Option<(usize, usize)> {
        face.vertices().find_map(|i| {
            let above = !((1u128 << i) | ((1u128 << i) - 1));
            let partners = self.non_scarf[i] & face.bits() & above;
            (partners != 0).then(|| (i, partners.trailing_zeros() as usize))
        })
    }

    /// `ι` of a face that contains a non-Scarf edge.
    pub fn iota(&self, face: Face) -> Option<usize> {
        self.nu(face).map(|p| self.iota[&p])
    }

    /// The generator removed from (or added to) the face by the matching.
    pub fn partner(&self, face: Face) -> Option<Face> {
        let c = self.iota(face)?;
        Some(if face.contains(c) {
            face.without(c)
        } else {
            face.with(c)
        })
    }
}

/// The matching on the whole Taylor complex that leaves exactly the Scarf
/// faces critical when `q ≤ 4`.
pub fn build_small_q_matching(
    gens: Arc<Generators>,
    max_generators: usize,
) -> Result<MorseMatching> {
    let ctx = SmallQContext::new(gens)?;
    build_small_q_matching_with(&ctx, max_generators)
}

pub fn build_small_q_matching_with(
    ctx: &SmallQContext,
    max_generators: usize,
) -> Result<MorseMatching> {
    let gens = ctx.generators();
    let n = gens.len();
    if n > max_generators || n >= 64 {
        return Err(Error::Budget {
            what: "Taylor generator",
            needed: n as u128,
            limit: max_generators.min(63) as u128,
        });
    }
    let pairs = par::flat_map_range(1, 1u64 << n, |bits| {
        let face = Face::from_bits(bits as u128);
        let c = ctx.iota(face)?;
        face.contains(c).then(|| (face, face.without(c)))
    });
    Ok(MorseMatching::new(
        pairs,
        format!("all faces of T^{}_{}", gens.r(), gens.q()),
    ))
}

/// `ι(σ)` for a non-Scarf face given by its vertices (`q ≤ 4`).
pub fn find_iota(face: &[Composition]) -> Result<Composition> {
    let first = face.first().ok_or(Error::EmptyFace("ι of no vertices"))?;
    let gens = Arc::new(Generators::new(first.q(), first.r())?);
    let f = gens.face(face)?;
    if is_scarf_face_in(gens.vertex_labels(), f) {
        return Err(Error::Domain(
            "ι is only defined for non-Scarf faces".into(),
        ));
    }
    let ctx = SmallQContext::new(gens.clone())?;
    let c = ctx
        .iota(f)
        .ok_or_else(|| Error::Internal("a non-Scarf face without a non-Scarf edge".into()))?;
    Ok(gens.composition(c).clone())
}

/// The vertex `c ∈ ε^a U` to drop from a face strictly containing the facet.
fn facet_partner_vertex(gens: &Generators, a: &[u32], k: u32, b: &[u32]) -> Result<usize> {
    let q = a.len();
    let d: Vec<u32> = a.iter().zip(b).map(|(x, y)| *x.min(y)).collect();
    let a1: Vec<u32> = a.iter().zip(&d).map(|(x, y)| x - y).collect();
    let b1: Vec<u32> = b.iter().zip(&d).map(|(x, y)| x - y).collect();
    let mut order: Vec<usize> = (0..q).filter(|&i| b1[i] > 0).collect();
    order.extend((0..q).filter(|&i| b1[i] == 0 && a1[i] == 0));
    order.extend((0..q).filter(|&i| a1[i] > 0));
    let mut c = a.to_vec();
    for &i in order.iter().take(k as usize) {
        c[i] += 1;
    }
    gens.index_of(&Composition::new(c)?)
        .ok_or_else(|| Error::Internal("facet partner is not a generator".into()))
}

/// Pairs each face `σ ⊋ ε^a U^{r-|a|}_q` with `σ` minus a facet vertex.
pub fn build_facet_matching(
    gens: &Generators,
    a: &[u32],
    max_generators: usize,
) -> Result<MorseMatching> {
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
    let n = gens.len();
    if n > max_generators || n >= 64 {
        return Err(Error::Budget {
            what: "Taylor generator",
            needed: n as u128,
            limit: max_generators.min(63) as u128,
        });
    }
    let k = r - s;
    let facet = translated_square_free(gens, a, k)?;
    let rest: Vec<usize> = (0..n).filter(|&v| !facet.contains(v)).collect();
    let extra_count = 1u64 << rest.len();
    let pairs = par::try_map(&(1..extra_count).collect::<Vec<_>>(), |&mask| {
        let mut sigma = facet;
        for (t, &v) in rest.iter().enumerate() {
            if mask & (1 << t) != 0 {
                sigma = sigma.with(v);
            }
        }
        let extra = Face::from_bits(sigma.bits() & !facet.bits());
        let b = extra.first().expect("strict superset");
        let c = facet_partner_vertex(gens, a, k, gens.composition(b).parts())?;
        Ok::<_, Error>((sigma, sigma.without(c)))
    })?;
    Ok(MorseMatching::new(
        pairs,
        format!("all faces of T^{}_{}", r, q),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn gens(q: usize, r: u32) -> Arc<Generators> {
        Arc::new(Generators::new(q, r).unwrap())
    }

    #[test]
    fn empty_matching_leaves_everything_critical() {
        let g = gens(3, 2);
        let y = FaceSet::full_taylor(g, 20).unwrap();
        let rep = verify_matching(&MorseMatching::default(), &y).unwrap();
        assert!(rep.is_morse());
        assert_eq!(rep.critical_cells.len(), 63);
    }

    #[test]
    fn cone_matching_is_acyclic() {
        // Pair σ ∪ {v} → σ for a fixed vertex v on the full simplex.
        let g = gens(2, 3);
        let y = FaceSet::full_taylor(g, 20).unwrap();
        let v = 0;
        let pairs = y
            .faces()
            .iter()
            .filter(|f| f.contains(v) && f.len() > 1)
            .map(|&f| (f, f.without(v)))
            .collect();
        let m = MorseMatching::new(pairs, "cone");
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_matching && rep.is_acyclic);
        assert_eq!(rep.critical_cells, vec![Face::singleton(v)]);
    }

    #[test]
    fn alternating_cycle_is_detected() {
        let g = gens(3, 1);
        let y = FaceSet::from_faces(
            g,
            vec![
                Face::singleton(0),
                Face::singleton(1),
                Face::singleton(2),
                Face::from_indices([0, 1]).unwrap(),
                Face::from_indices([1, 2]).unwrap(),
                Face::from_indices([0, 2]).unwrap(),
            ],
        )
        .unwrap();
        let e = |a, b| Face::from_indices([a, b]).unwrap();
        let m = MorseMatching::new(
            vec![
                (e(0, 1), Face::singleton(0)),
                (e(1, 2), Face::singleton(1)),
                (e(0, 2), Face::singleton(2)),
            ],
            "hand-built",
        );
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_matching);
        assert!(!rep.is_acyclic);
        assert!(rep.critical_cells.is_empty());
    }

    #[test]
    fn pairs_outside_y_are_structural_errors() {
        let g = gens(2, 2);
        let y = FaceSet::up_to_dim(g, 0).unwrap();
        let m = MorseMatching::new(
            vec![(Face::from_indices([0, 1]).unwrap(), Face::singleton(0))],
            "bad",
        );
        assert!(matches!(verify_matching(&m, &y), Err(Error::Structural(_))));
        let m = MorseMatching::new(
            vec![(Face::from_indices([0, 1, 2]).unwrap(), Face::singleton(0))],
            "bad",
        );
        let y = FaceSet::full_taylor(gens(2, 2), 20).unwrap();
        assert!(matches!(verify_matching(&m, &y), Err(Error::Structural(_))));
    }

    #[test]
    fn overlapping_pairs_are_not_a_matching() {
        let y = FaceSet::full_taylor(gens(2, 2), 20).unwrap();
        let tri = Face::from_indices([0, 1, 2]).unwrap();
        let m = MorseMatching::new(vec![(tri, tri.without(0)), (tri, tri.without(1))], "double");
        assert!(!verify_matching(&m, &y).unwrap().is_matching);
    }

    #[test]
    fn edge_matching_on_t32() {
        let g = gens(3, 2);
        let m = build_edge_matching(&g).unwrap();
        assert_eq!(m.len(), 6);
        let y = FaceSet::up_to_dim(g.clone(), 2).unwrap();
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_morse());
        let edges = rep.critical_cells.iter().filter(|f| f.len() == 2).count();
        assert_eq!(edges, 9);
    }

    #[test]
    fn edge_matching_q2_nonscarf_edges() {
        for r in 1..=6 {
            let g = gens(2, r);
            let m = build_edge_matching(&g).unwrap();
            for &(_, e) in m.pairs() {
                let v: Vec<usize> = e.vertices().collect();
                let (a, b) = (g.composition(v[0]), g.composition(v[1]));
                assert!(a
                    .parts()
                    .iter()
                    .zip(b.parts())
                    .any(|(x, y)| x.abs_diff(*y) >= 2));
            }
            let n = g.len();
            let wide = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| {
                    let (a, b) = (g.composition(i), g.composition(j));
                    a.parts()
                        .iter()
                        .zip(b.parts())
                        .any(|(x, y)| x.abs_diff(*y) >= 2)
                })
                .count();
            assert_eq!(wide, m.len());
        }
    }

    #[test]
    fn small_q_matching_examples() {
        for (q, r, expected) in [(3, 2, 19), (3, 4, 61), (2, 2, 5)] {
            let g = gens(q, r);
            let m = build_small_q_matching(g.clone(), 20).unwrap();
            let y = FaceSet::full_taylor(g, 20).unwrap();
            let rep = verify_matching(&m, &y).unwrap();
            assert!(rep.is_morse(), "q={q} r={r}");
            assert_eq!(rep.critical_cells.len(), expected, "q={q} r={r}");
        }
        assert!(build_small_q_matching(gens(5, 2), 20).is_err());
    }

    #[test]
    fn find_iota_examples() {
        assert_eq!(find_iota(&[c(&[3, 0]), c(&[0, 3])]).unwrap(), c(&[2, 1]));
        assert_eq!(
            find_iota(&[c(&[2, 0, 0]), c(&[0, 2, 0])]).unwrap(),
            c(&[1, 1, 0])
        );
        assert!(matches!(
            find_iota(&[c(&[1, 1, 0]), c(&[1, 0, 1])]),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn facet_matching_corner_triangle() {
        let g = gens(3, 2);
        let m = build_facet_matching(&g, &[1, 0, 0], 20).unwrap();
        let y = FaceSet::full_taylor(g.clone(), 20).unwrap();
        let rep = verify_matching(&m, &y).unwrap();
        assert!(rep.is_morse());
        let facet = translated_square_free(&g, &[1, 0, 0], 1).unwrap();
        for f in facet.nonempty_subfaces() {
            assert!(rep.critical_cells.contains(&f));
        }
        assert!(rep
            .critical_cells
            .iter()
            .all(|f| !(facet.is_subset_of(*f) && *f != facet)));
        assert!(build_facet_matching(&g, &[1, 1, 0], 20).is_err());
        assert!(!build_facet_matching(&g, &[0, 0, 0], 20).unwrap().is_empty());
    }

    #[test]
    fn certificate_round_trip() {
        let g = gens(3, 2);
        let m = build_edge_matching(&g).unwrap();
        let text = m.to_certificate(&g);
        let back = MorseMatching::from_certificate(&g, &text).unwrap();
        assert_eq!(back.pairs(), m.pairs());
        assert!(matches!(
            MorseMatching::from_certificate(&g, "(2,0,0) (0,2,0)"),
            Err(Error::Parse { line: 1, .. })
        ));
    }
}
