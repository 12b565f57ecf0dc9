//! The map `ψ_I` from the extremal ring to the ring of a square-free monomial
//! ideal `I = (m_1, …, m_q)`, sending `x_A` to the product of the variables
//! `x_k` whose generator set `A_k = {j : x_k | m_j}` equals `A`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use crate::combinatorics::{enumerate_compositions, Composition, SubsetMask, MAX_SUBSET_Q};
use crate::complexes::{
    is_scarf_face_in, materialize, scarf_search, u_complex, Generators, DEFAULT_FACE_BUDGET,
};
use crate::error::{invalid, Error, Result};
use crate::extremal::{divides_slice, ExtExponent};
use crate::homology::{betti_total_oracle, Field, GeneralIdeal, MAX_ORACLE_GENERATORS};

/// A minimally generated square-free monomial ideal; each generator is the
/// sorted list of its (zero-based) variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeIdeal {
    n: usize,
    generators: Vec<Vec<usize>>,
}

impl SquareFreeIdeal {
    /// Builds the ideal from zero-based variable sets.
    pub fn new(n: usize, generators: Vec<Vec<usize>>) -> Result<Self> {
        if generators.is_empty() {
            return Err(invalid("an ideal needs at least one generator"));
        }
        let mut gens = Vec::with_capacity(generators.len());
        for mut g in generators {
            g.sort_unstable();
            let len = g.len();
            g.dedup();
            if g.len() != len {
                return Err(invalid(
                    "generator repeats a variable; input must be square-free",
                ));
            }
            if g.is_empty() {
                return Err(invalid("generators must be nonempty"));
            }
            if g.last().is_some_and(|&v| v >= n) {
                return Err(invalid(format!("variable index out of range for n = {n}")));
            }
            gens.push(g);
        }
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                if i != j && a.iter().all(|v| b.binary_search(v).is_ok()) {
                    return Err(invalid(format!(
                        "generator {} divides generator {}; input is not minimal",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Self {
            n,
            generators: gens,
        })
    }

    /// The extremal ideal `E_q` itself, with `x_k` the variable for subset `k`.
    pub fn extremal(q: u32) -> Result<Self> {
        if q == 0 || q > MAX_SUBSET_Q {
            return Err(invalid(format!("q must lie in 1..={MAX_SUBSET_Q}")));
        }
        let n = (1usize << q) - 1;
        let gens = (0..q as usize)
            .map(|j| (0..n).filter(|k| (k + 1) >> j & 1 == 1).collect())
            .collect();
        Self::new(n, gens)
    }

    /// Parses one generator per line, `x3*x7*x9` or a 0/1 string.
    pub fn parse(text: &str) -> Result<Self> {
        let mut gens = Vec::new();
        let mut n = 0usize;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Parse { line: idx + 1, msg };
            let vars: Vec<usize> = if line.chars().all(|c| c.is_ascii_digit()) {
                if let Some(bad) = line.chars().find(|&c| c != '0' && c != '1') {
                    return Err(err(format!("exponent {bad} is not square-free")));
                }
                n = n.max(line.len());
                line.chars()
                    .enumerate()
                    .filter(|(_, c)| *c == '1')
                    .map(|(i, _)| i)
                    .collect()
            } else {
                let mut vars = Vec::new();
                for tok in line.split('*') {
                    let tok = tok.trim();
                    if tok.contains('^') {
                        let (_, e) = tok.split_once('^').expect("checked");
                        if e.trim() != "1" {
                            return Err(err(format!("{tok} is not square-free")));
                        }
                    }
                    let name = tok.split('^').next().unwrap_or("").trim();
                    let k: usize = name
                        .strip_prefix('x')
                        .map(|s| s.trim_start_matches('_'))
                        .and_then(|s| s.parse().ok())
                        .filter(|&k| k >= 1)
                        .ok_or_else(|| err(format!("bad variable {tok:?}")))?;
                    if vars.contains(&(k - 1)) {
                        return Err(err(format!("x{k} repeated; input must be square-free")));
                    }
                    vars.push(k - 1);
                    n = n.max(k);
                }
                vars
            };
            if vars.is_empty() {
                return Err(err("generator has no variables".into()));
            }
            gens.push(vars);
        }
        Self::new(n, gens)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The number of generators.
    pub fn q(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[Vec<usize>] {
        &self.generators
    }

    /// Exponent vector of a generator.
    pub fn generator_vector(&self, j: usize) -> Vec<u32> {
        let mut v = vec![0u32; self.n];
        for &k in &self.generators[j] {
            v[k] = 1;
        }
        v
    }

    /// Exponent vector of `m^a = ∏ m_j^{a_j}`.
    pub fn power_vector(&self, a: &Composition) -> Result<Vec<u32>> {
        if a.q() != self.q() {
            return Err(Error::Mismatch(format!(
                "{a} has {} entries but the ideal has {} generators",
                a.q(),
                self.q()
            )));
        }
        let mut v = vec![0u32; self.n];
        for (j, &e) in a.parts().iter().enumerate() {
            for &k in &self.generators[j] {
                v[k] += e;
            }
        }
        Ok(v)
    }
}

/// `A_k` for every variable; `None` when `x_k` divides no generator.
pub fn variable_classes(ideal: &SquareFreeIdeal) -> Result<Vec<Option<SubsetMask>>> {
    let q = ideal.q() as u32;
    if q > MAX_SUBSET_Q {
        return Err(invalid(format!(
            "at most {MAX_SUBSET_Q} generators are supported"
        )));
    }
    let mut bits = vec![0u32; ideal.n()];
    for (j, g) in ideal.generators().iter().enumerate() {
        for &k in g {
            bits[k] |= 1 << j;
        }
    }
    bits.into_iter()
        .map(|b| {
            if b == 0 {
                Ok(None)
            } else {
                SubsetMask::new(b, q).map(Some)
            }
        })
        .collect()
}

/// `ψ_I(L)` as an exponent vector over `x_1, …, x_n`.
pub fn psi_apply(label: &ExtExponent, ideal: &SquareFreeIdeal) -> Result<Vec<u32>> {
    if label.q() as usize != ideal.q() {
        return Err(Error::Mismatch(format!(
            "label over q = {} applied to an ideal with {} generators",
            label.q(),
            ideal.q()
        )));
    }
    Ok(variable_classes(ideal)?
        .into_iter()
        .map(|a| a.map_or(0, |a| label.get(a)))
        .collect())
}

fn psi_raw(label: &[u32], classes: &[Option<SubsetMask>]) -> Vec<u32> {
    classes
        .iter()
        .map(|a| a.map_or(0, |a| label[a.index()]))
        .collect()
}

/// Scarf faces of `I^r`, each checked against the Scarf complex of `E_q^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScarfInclusionReport {
    pub holds: bool,
    pub scarf_faces: Vec<Vec<Composition>>,
    pub missing: Vec<Vec<Composition>>,
}

impl ScarfInclusionReport {
    pub fn edge_count(&self) -> usize {
        self.scarf_faces.iter().filter(|f| f.len() == 2).count()
    }
}

/// Compares `Scarf(I^r)` with `Scarf(E_q^r)`, both indexed by `N^r_q`.
pub fn scarf_inclusion_check(ideal: &SquareFreeIdeal, r: u32) -> Result<ScarfInclusionReport> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let gens = Arc::new(Generators::new(ideal.q(), r)?);
    let vectors = gens
        .compositions()
        .iter()
        .map(|a| ideal.power_vector(a))
        .collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<&Vec<u32>> = vectors.iter().collect();
    if distinct.len() != vectors.len() {
        return Err(Error::UnsupportedInput(
            "two products m^a coincide, so Scarf(I^r) cannot be indexed by N^r_q".into(),
        ));
    }
    for (i, u) in vectors.iter().enumerate() {
        if let Some(j) = (0..vectors.len()).find(|&j| j != i && divides_slice(u, &vectors[j])) {
            return Err(Error::UnsupportedInput(format!(
                "m^{} divides m^{}; the products do not minimally generate I^r",
                gens.composition(i),
                gens.composition(j)
            )));
        }
    }
    let faces = scarf_search(&vectors, None, DEFAULT_FACE_BUDGET)?;
    let mut scarf_faces = Vec::new();
    let mut missing = Vec::new();
    for f in faces {
        let verts = gens.face_vertices(f);
        if !is_scarf_face_in(gens.vertex_labels(), f) {
            missing.push(verts.clone());
        }
        scarf_faces.push(verts);
    }
    Ok(ScarfInclusionReport {
        holds: missing.is_empty(),
        scarf_faces,
        missing,
    })
}

/// The minimal generators of `I^r` as exponent vectors.
pub fn power_ideal(ideal: &SquareFreeIdeal, r: u32) -> Result<GeneralIdeal> {
    let mut vectors = enumerate_compositions(ideal.q(), r)?
        .iter()
        .map(|a| ideal.power_vector(a))
        .collect::<Result<Vec<_>>>()?;
    vectors.sort();
    vectors.dedup();
    let minimal: Vec<Vec<u32>> = vectors
        .iter()
        .filter(|u| !vectors.iter().any(|w| w != *u && divides_slice(w, u)))
        .cloned()
        .collect();
    GeneralIdeal::new(minimal)
}

/// Where the extremal betti numbers came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtremalSource {
    Oracle,
    ScarfFaces,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRow {
    pub i: usize,
    pub ideal: usize,
    pub extremal: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiBoundReport {
    pub rows: Vec<BoundRow>,
    pub source: ExtremalSource,
    /// `(i, multidegree of I^r, β_{i,m}(I^r), Σ β_{i,ℓ}(E_q^r) over ψ(ℓ) = m)` where the bound fails.
    pub multigraded_violations: Vec<(usize, Vec<u32>, usize, usize)>,
}

impl BettiBoundReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.holds) && self.multigraded_violations.is_empty()
    }

    pub fn is_equality(&self) -> bool {
        self.rows.iter().all(|r| r.ideal == r.extremal)
    }
}

type MultigradedBetti = BTreeMap<(usize, Vec<u32>), usize>;

/// Multigraded betti numbers of `E_q^r`, keyed by `(i, label)`.
fn extremal_betti(
    q: usize,
    r: u32,
    max_i: Option<usize>,
    field: Field,
) -> Result<(MultigradedBetti, ExtremalSource)> {
    let gens = Generators::new(q, r)?;
    if gens.len() <= MAX_ORACLE_GENERATORS {
        let table = betti_total_oracle(
            &GeneralIdeal::new(gens.vertex_labels().to_vec())?,
            max_i,
            field,
        )?;
        return Ok((table.multigraded, ExtremalSource::Oracle));
    }
    if q <= 4 {
        // Each face of U^r_q contributes one to its own multidegree.
        let u = materialize(&u_complex(q, r)?, max_i, DEFAULT_FACE_BUDGET)?;
        let mut out = BTreeMap::new();
        for f in u.faces().expect("materialized") {
            *out.entry((f.face.len() - 1, f.label.exps().to_vec()))
                .or_insert(0) += 1;
        }
        return Ok((out, ExtremalSource::ScarfFaces));
    }
    Err(Error::Budget {
        what: "generator",
        needed: gens.len() as u128,
        limit: MAX_ORACLE_GENERATORS as u128,
    })
}

/// Checks `β_i(I^r) ≤ β_i(E_q^r)` and the multigraded refinement through `ψ_I`.
pub fn betti_bound_check(
    ideal: &SquareFreeIdeal,
    r: u32,
    max_i: Option<usize>,
    field: Field,
) -> Result<BettiBoundReport> {
    if r == 0 {
        return Err(invalid("r must be at least 1"));
    }
    let power = power_ideal(ideal, r)?;
    let ours = betti_total_oracle(&power, max_i, field)?;
    let (theirs, source) = extremal_betti(ideal.q(), r, max_i, field)?;

    let mut totals: Vec<usize> = Vec::new();
    let classes = variable_classes(ideal)?;
    let mut pushed: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
    for ((i, label), &b) in &theirs {
        if totals.len() <= *i {
            totals.resize(i + 1, 0);
        }
        totals[*i] += b;
        *pushed.entry((*i, psi_raw(label, &classes))).or_insert(0) += b;
    }
    let len = totals.len().max(ours.total.len());
    let rows = (0..len)
        .map(|i| {
            let (a, b) = (ours.get(i), totals.get(i).copied().unwrap_or(0));
            BoundRow {
                i,
                ideal: a,
                extremal: b,
                holds: a <= b,
            }
        })
        .collect();
    let multigraded_violations = ours
        .multigraded
        .iter()
        .filter_map(|((i, m), &b)| {
            let bound = pushed.get(&(*i, m.clone())).copied().unwrap_or(0);
            (b > bound).then(|| (*i, m.clone(), b, bound))
        })
        .collect();
    Ok(BettiBoundReport {
        rows,
        source,
        multigraded_violations,
    })
}
