//! Exact simplicial homology and brute-force betti numbers of monomial ideals.
//!
//! Ranks of boundary maps are computed by column reduction with the "lowest
//! one" pivot rule, dimensions processed top-down so that columns already known
//! to reduce to zero are skipped. Over GF(2) columns are packed bit vectors;
//! over the rationals they are sparse fraction-free integer vectors.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::complexes::{divisor_set, face_lcm, Face, LabeledComplex, DEFAULT_FACE_BUDGET};
use crate::error::{invalid, Error, Result};
use crate::extremal::divides_slice;
use crate::par;

/// Coefficient field for homology computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Gf2,
    Rational,
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Field::Gf2 => "gf2",
            Field::Rational => "rational",
        })
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "gf2" | "f2" => Ok(Field::Gf2),
            "rational" | "q" | "qq" => Ok(Field::Rational),
            other => Err(invalid(format!("unknown field {other:?}"))),
        }
    }
}

/// Generators beyond which the Taylor-based oracles refuse to run.
pub const MAX_ORACLE_GENERATORS: usize = 20;

/// A simplicial chain complex with bases grouped by face size.
///
/// `bases[s]` holds the faces with `s` vertices. Boundary entries pointing at
/// faces outside the basis are dropped, which makes relative complexes such as
/// the equal-label strands of the Taylor complex expressible directly.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    bases: Vec<Vec<Face>>,
    index: Vec<HashMap<Face, usize>>,
}

impl ChainComplex {
    /// Builds the complex; with `augmented` the empty face is added in size 0.
    pub fn from_faces(faces: &[Face], augmented: bool) -> Self {
        let top = faces.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut bases: Vec<Vec<Face>> = vec![Vec::new(); top + 1];
        for &f in faces {
            if !f.is_empty() {
                bases[f.len()].push(f);
            }
        }
        if augmented {
            bases[0].push(Face::EMPTY);
        }
        for b in &mut bases {
            b.sort_unstable();
            b.dedup();
        }
        let index = bases
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, &f)| (f, i)).collect())
            .collect();
        Self { bases, index }
    }

    /// Largest face size present (0 for an empty complex).
    pub fn top_size(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn basis(&self, size: usize) -> &[Face] {
        self.bases.get(size).map_or(&[], Vec::as_slice)
    }

    /// Boundary of the `col`-th face of the given size, sorted by row.
    pub fn boundary_column(&self, size: usize, col: usize) -> Vec<(usize, i8)> {
        let face = self.bases[size][col];
        let Some(rows) = size.checked_sub(1).and_then(|s| self.index.get(s)) else {
            return Vec::new();
        };
        let mut out: Vec<(usize, i8)> = face
            .vertices()
            .enumerate()
            .filter_map(|(j, v)| {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                rows.get(&face.without(v)).map(|&row| (row, sign))
            })
            .collect();
        out.sort_unstable_by_key(|e| e.0);
        out
    }

    /// The boundary map from faces of `size` vertices, column by column.
    pub fn boundary_matrix(&self, size: usize) -> Vec<Vec<(usize, i8)>> {
        (0..self.basis(size).len())
            .map(|c| self.boundary_column(size, c))
            .collect()
    }

    /// `rank[s]` is the rank of the boundary map out of size-`s` faces.
    pub fn boundary_ranks(&self, field: Field) -> Vec<usize> {
        let mut ranks = vec![0usize; self.bases.len()];
        let mut cleared: HashSet<usize> = HashSet::new();
        for size in (1..self.bases.len()).rev() {
            let rows = self.basis(size - 1).len();
            let pivots = match field {
                Field::Gf2 => reduce_gf2(self, size, rows, &cleared),
                Field::Rational => reduce_rational(self, size, &cleared),
            };
            ranks[size] = pivots.len();
            cleared = pivots;
        }
        ranks
    }

    /// `dim C_s − rank ∂_s − rank ∂_{s+1}` for every size `s`.
    pub fn homology_by_size(&self, field: Field) -> Vec<usize> {
        let ranks = self.boundary_ranks(field);
        (0..self.bases.len())
            .map(|s| {
                let out = ranks.get(s + 1).copied().unwrap_or(0);
                self.bases[s].len() - ranks[s] - out
            })
            .collect()
    }
}

/// Reduces the columns of one boundary map and returns the pivot rows.
fn reduce_gf2(
    cc: &ChainComplex,
    size: usize,
    rows: usize,
    cleared: &HashSet<usize>,
) -> HashSet<usize> {
    let words = rows.div_ceil(64);
    let mut owner: Vec<Option<usize>> = vec![None; rows];
    let mut stored: Vec<Vec<u64>> = Vec::new();
    let mut pivots = HashSet::new();
    for col in 0..cc.basis(size).len() {
        if cleared.contains(&col) {
            continue;
        }
        let mut bits = vec![0u64; words];
        for (row, _) in cc.boundary_column(size, col) {
            bits[row / 64] ^= 1u64 << (row % 64);
        }
        while let Some(low) = lowest_one(&bits) {
            match owner[low] {
                Some(k) => {
                    for (a, b) in bits.iter_mut().zip(&stored[k]) {
                        *a ^= *b;
                    }
                }
                None => {
                    owner[low] = Some(stored.len());
                    stored.push(bits);
                    pivots.insert(low);
                    break;
                }
            }
        }
    }
    pivots
}

fn lowest_one(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
}

type SparseColumn = Vec<(usize, BigInt)>;

fn reduce_rational(cc: &ChainComplex, size: usize, cleared: &HashSet<usize>) -> HashSet<usize> {
    let mut owner: HashMap<usize, SparseColumn> = HashMap::new();
    for col in 0..cc.basis(size).len() {
        if cleared.contains(&col) {
            continue;
        }
        let mut v: SparseColumn = cc
            .boundary_column(size, col)
            .into_iter()
            .map(|(r, s)| (r, BigInt::from(s)))
            .collect();
        while let Some((low, coef)) = v.last().cloned() {
            match owner.get(&low) {
                Some(p) => {
                    let pc = &p.last().expect("stored columns are nonzero").1;
                    v = combine(pc, &v, &coef, p);
                }
                None => {
                    owner.insert(low, v);
                    break;
                }
            }
        }
    }
    owner.into_keys().collect()
}

/// `a * x − b * y`, with the result divided by its content.
fn combine(a: &BigInt, x: &SparseColumn, b: &BigInt, y: &SparseColumn) -> SparseColumn {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (row, val) = if take_x {
            i += 1;
            (x[i - 1].0, a * &x[i - 1].1)
        } else if take_y {
            j += 1;
            (y[j - 1].0, -(b * &y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a * &x[i - 1].1 - b * &y[j - 1].1)
        };
        if !val.is_zero() {
            out.push((row, val));
        }
    }
    let content = out.iter().fold(BigInt::zero(), |g, (_, v)| g.gcd(v));
    if !content.is_zero() && !content.is_one() {
        for (_, v) in &mut out {
            *v /= &content;
        }
    }
    if out.last().is_some_and(|(_, v)| v.is_negative()) {
        for (_, v) in &mut out {
            *v = -std::mem::take(v);
        }
    }
    out
}

/// Reduced homology ranks; entry 0 is dimension −1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedHomology {
    pub field: Field,
    ranks: Vec<usize>,
}

impl ReducedHomology {
    pub fn rank(&self, dim: isize) -> usize {
        usize::try_from(dim + 1)
            .ok()
            .and_then(|i| self.ranks.get(i).copied())
            .unwrap_or(0)
    }

    /// Ranks indexed from dimension −1.
    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

fn check_closed(faces: &[Face]) -> Result<()> {
    let set: HashSet<Face> = faces.iter().copied().collect();
    for f in faces {
        if f.len() < 2 {
            continue;
        }
        if let Some((_, missing)) = f.facets_of_boundary().find(|(_, s)| !set.contains(s)) {
            return Err(Error::Structural(format!(
                "face set is not closed: {:#x} lacks {:#x}",
                f.bits(),
                missing.bits()
            )));
        }
    }
    Ok(())
}

/// Reduced homology of the complex whose nonempty faces are listed.
pub fn reduced_homology_ranks(faces: &[Face], field: Field) -> Result<ReducedHomology> {
    if faces.len() > DEFAULT_FACE_BUDGET {
        return Err(Error::Budget {
            what: "matrix",
            needed: faces.len() as u128,
            limit: DEFAULT_FACE_BUDGET as u128,
        });
    }
    check_closed(faces)?;
    let cc = ChainComplex::from_faces(faces, true);
    Ok(ReducedHomology {
        field,
        ranks: cc.homology_by_size(field),
    })
}

/// Reduced homology of a materialized complex.
pub fn reduced_homology_of(complex: &LabeledComplex, field: Field) -> Result<ReducedHomology> {
    let faces: Vec<Face> = complex
        .faces()
        .ok_or_else(|| Error::Domain("complex must be materialized first".into()))?
        .iter()
        .map(|f| f.face)
        .collect();
    reduced_homology_ranks(&faces, field)
}

/// True when there are no faces or every reduced homology group vanishes.
pub fn is_acyclic_or_empty(faces: &[Face], field: Field) -> Result<bool> {
    if faces.iter().all(|f| f.is_empty()) {
        return Ok(true);
    }
    Ok(reduced_homology_ranks(faces, field)?.is_zero())
}

/// A monomial ideal given by exponent vectors over a common variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralIdeal {
    generators: Vec<Vec<u32>>,
}

impl GeneralIdeal {
    /// Validates that generators are distinct and none divides another.
    pub fn new(generators: Vec<Vec<u32>>) -> Result<Self> {
        let width = generators
            .first()
            .map(Vec::len)
            .ok_or_else(|| invalid("an ideal needs at least one generator"))?;
        if generators.iter().any(|g| g.len() != width) {
            return Err(Error::Mismatch("generators have different lengths".into()));
        }
        for (i, g) in generators.iter().enumerate() {
            for (j, h) in generators.iter().enumerate() {
                if i != j && divides_slice(g, h) {
                    return Err(invalid(format!(
                        "generator {i} divides generator {j}; the list is not minimal"
                    )));
                }
            }
        }
        Ok(Self { generators })
    }

    /// `E_q^r` with generators in enumeration order.
    pub fn extremal_power(q: usize, r: u32) -> Result<Self> {
        let gens = crate::complexes::Generators::new(q, r)?;
        Self::new(gens.vertex_labels().to_vec())
    }

    pub fn generators(&self) -> &[Vec<u32>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    fn check_oracle_size(&self) -> Result<()> {
        if self.len() > MAX_ORACLE_GENERATORS {
            return Err(Error::Budget {
                what: "generator",
                needed: self.len() as u128,
                limit: MAX_ORACLE_GENERATORS as u128,
            });
        }
        Ok(())
    }
}

/// Total and multigraded betti numbers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BettiTable {
    pub total: Vec<usize>,
    pub multigraded: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn get(&self, i: usize) -> usize {
        self.total.get(i).copied().unwrap_or(0)
    }

    pub fn projective_dimension(&self) -> Option<usize> {
        self.total.iter().rposition(|&b| b > 0)
    }
}

/// `β_{i,m}` via the reduced homology in degree `i−1` of the Taylor faces whose
/// label strictly divides `m`.
pub fn betti_multigraded_oracle(
    ideal: &GeneralIdeal,
    i: usize,
    m: &[u32],
    field: Field,
) -> Result<usize> {
    ideal.check_oracle_size()?;
    let gens = ideal.generators();
    if m.len() != gens[0].len() {
        return Err(Error::Mismatch("multidegree has the wrong length".into()));
    }
    let below = divisor_set(gens, m);
    if below.is_empty() || face_lcm(gens, below) != m {
        return Err(Error::Domain(
            "multidegree is not in the lcm lattice".into(),
        ));
    }
    let faces: Vec<Face> = below
        .nonempty_subfaces()
        .filter(|&f| face_lcm(gens, f) != m)
        .collect();
    let h = reduced_homology_ranks(&faces, field)?;
    Ok(h.rank(i as isize - 1))
}

/// All betti numbers up to `max_i` (or all of them) from the equal-label
/// strands of the Taylor complex tensored with the field.
pub fn betti_total_oracle(
    ideal: &GeneralIdeal,
    max_i: Option<usize>,
    field: Field,
) -> Result<BettiTable> {
    ideal.check_oracle_size()?;
    let gens = ideal.generators();
    let n = gens.len();
    let width = gens[0].len();
    let max_size = max_i.map_or(n, |i| (i + 2).min(n));

    // Level-wise enumeration with labels stored flat alongside the faces.
    let mut faces: Vec<Face> = (0..n).map(Face::singleton).collect();
    let mut labels: Vec<u32> = gens.iter().flatten().copied().collect();
    let mut level_start = 0;
    for _ in 1..max_size {
        let level_end = faces.len();
        for k in level_start..level_end {
            let f = faces[k];
            let top = f.last().expect("nonempty");
            for (v, g) in gens.iter().enumerate().skip(top + 1) {
                faces.push(f.with(v));
                let base = k * width;
                for (t, &e) in g.iter().enumerate() {
                    let x = labels[base + t].max(e);
                    labels.push(x);
                }
            }
        }
        if faces.len() > DEFAULT_FACE_BUDGET {
            return Err(Error::Budget {
                what: "face",
                needed: faces.len() as u128,
                limit: DEFAULT_FACE_BUDGET as u128,
            });
        }
        level_start = level_end;
    }

    let mut order: Vec<usize> = (0..faces.len()).collect();
    let label = |k: usize| &labels[k * width..(k + 1) * width];
    par::sort_by(&mut order, |&a, &b| label(a).cmp(label(b)));
    let mut classes: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for k in 1..=order.len() {
        if k == order.len() || label(order[k]) != label(order[start]) {
            classes.push((start, k));
            start = k;
        }
    }

    let per_class = par::map(&classes, |&(s, e)| {
        let members: Vec<Face> = order[s..e].iter().map(|&k| faces[k]).collect();
        let cc = ChainComplex::from_faces(&members, false);
        let h = cc.homology_by_size(field);
        (label(order[s]).to_vec(), h)
    });

    let limit = max_i.unwrap_or(n);
    let mut table = BettiTable::default();
    for (m, h) in per_class {
        for (size, &b) in h.iter().enumerate() {
            if size == 0 || b == 0 || size - 1 > limit {
                continue;
            }
            let i = size - 1;
            if table.total.len() <= i {
                table.total.resize(i + 1, 0);
            }
            table.total[i] += b;
            table.multigraded.insert((i, m.clone()), b);
        }
    }
    if let Some(i) = max_i {
        table.total.resize(i + 1, 0);
    }
    Ok(table)
}
