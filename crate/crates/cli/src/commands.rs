use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use extremal_core::complexes::{
    materialize, scarf_complex, u_complex, u_facet, FVector, Face, Generators, LabeledComplex,
};
use extremal_core::extremal::{face_label, generator_exponent};
use extremal_core::formulas::{betti1_r3, betti_r2, bounds_small_q, gamma};
use extremal_core::homology::{betti_total_oracle, Field, GeneralIdeal, MAX_ORACLE_GENERATORS};
use extremal_core::morse::{
    build_edge_matching, build_facet_matching, build_small_q_matching, FaceSet, MatchingReport,
    MorseMatching,
};
use extremal_core::psi::{betti_bound_check, psi_apply, scarf_inclusion_check, SquareFreeIdeal};
use extremal_core::{Error, Result};
use serde_json::Value;

use crate::report::Report;
use crate::Settings;

/// Betti numbers below this many generators are also computed over the other
/// field to detect torsion.
const CROSS_FIELD_GENERATORS: usize = 15;

fn widen(v: &[usize]) -> Vec<u128> {
    v.iter().map(|&x| x as u128).collect()
}

fn f_vector_of(faces: &[Face]) -> Vec<u128> {
    widen(FVector::from_faces(faces).as_slice())
}

fn face_set(c: &LabeledComplex) -> Result<HashSet<Face>> {
    c.face_set()
}

pub fn gens(q: usize, r: u32) -> Result<Vec<(String, String)>> {
    check_qr(q, r)?;
    let g = Generators::new(q, r)?;
    g.compositions()
        .iter()
        .map(|a| Ok((a.to_string(), generator_exponent(a)?.render())))
        .collect()
}

fn check_qr(q: usize, r: u32) -> Result<()> {
    if q == 0 || r == 0 {
        return Err(Error::InvalidParameter("q and r must be at least 1".into()));
    }
    Ok(())
}

pub fn scarf(q: usize, r: u32, list_faces: bool, s: &Settings) -> Result<Report> {
    check_qr(q, r)?;
    let mut rep = Report::new("scarf", q, r);
    let scarf = scarf_complex(q, r, s.max_dim, s.face_budget)?;
    rep.f_vector = widen(scarf.f_vector()?.as_slice());
    rep.source("f_vector", "enumeration");
    rep.detail("facet_count", scarf.facets().len());
    let u = materialize(&u_complex(q, r)?, s.max_dim, s.face_budget)?;
    let (sf, uf) = (face_set(&scarf)?, face_set(&u)?);
    rep.check("u_faces_are_scarf", uf.is_subset(&sf));
    if q <= 4 {
        rep.check("equals_u", uf == sf);
    } else {
        rep.detail("faces_outside_u", sf.difference(&uf).count());
    }
    if list_faces {
        let gens = scarf.generators();
        let faces: Vec<Value> = scarf
            .faces()
            .expect("materialized")
            .iter()
            .map(|f| Value::from(gens.format_face(f.face)))
            .collect();
        rep.detail("faces", faces);
    }
    Ok(rep)
}

fn formula_prefix(q: usize, r: u32, len: usize) -> Option<(Vec<u128>, &'static str)> {
    if (2..=4).contains(&q) {
        let t = bounds_small_q(q as u32, r).ok()?;
        return Some((t.values(), "bounds"));
    }
    if r == 2 {
        let v = (0..len.max(1) as u32 + 1)
            .map(|i| betti_r2(q as u32, i).ok())
            .collect::<Option<Vec<_>>>()?;
        let mut v = v;
        while v.last() == Some(&0) {
            v.pop();
        }
        return Some((v, "r2"));
    }
    None
}

pub fn fvector(q: usize, r: u32, s: &Settings) -> Result<Report> {
    check_qr(q, r)?;
    let mut rep = Report::new("fvector", q, r);
    let u = materialize(&u_complex(q, r)?, s.max_dim, s.face_budget)?;
    rep.f_vector = widen(u.f_vector()?.as_slice());
    rep.source("f_vector", "enumeration");
    rep.detail("facet_count", u.facets().len());
    if let Some((formula, name)) = formula_prefix(q, r, rep.f_vector.len()) {
        let n = rep.f_vector.len();
        let expected: Vec<u128> = if s.max_dim.is_some() {
            formula.iter().copied().take(n).collect()
        } else {
            formula
        };
        rep.check(&format!("matches_{name}_formula"), expected == rep.f_vector);
    }
    Ok(rep)
}

pub fn betti(q: usize, r: u32, s: &Settings) -> Result<Report> {
    check_qr(q, r)?;
    let mut rep = Report::new("betti", q, r);
    let gens = Generators::new(q, r)?;
    let n = gens.len();
    let u = materialize(&u_complex(q, r)?, s.max_dim, s.face_budget)?;
    rep.f_vector = widen(u.f_vector()?.as_slice());
    rep.source("f_vector", "enumeration");

    if n <= MAX_ORACLE_GENERATORS {
        let ideal = GeneralIdeal::new(gens.vertex_labels().to_vec())?;
        let table = betti_total_oracle(&ideal, s.max_dim, s.field)?;
        rep.betti = widen(&table.total);
        rep.source("betti", "oracle");
        if n <= CROSS_FIELD_GENERATORS {
            let other = match s.field {
                Field::Gf2 => Field::Rational,
                Field::Rational => Field::Gf2,
            };
            let alt = betti_total_oracle(&ideal, s.max_dim, other)?;
            if alt.total == table.total {
                rep.check("field_independent", true);
            } else {
                rep.flag("field_independent");
                rep.detail(&format!("betti_{other}"), alt.total.clone());
            }
        }
        if q <= 4 {
            rep.check("betti_equals_u_f_vector", rep.betti == rep.f_vector);
        } else {
            let scarf = scarf_complex(q, r, s.max_dim, s.face_budget)?;
            let sf = widen(scarf.f_vector()?.as_slice());
            let bounded = sf
                .iter()
                .enumerate()
                .all(|(i, &f)| rep.betti.get(i).is_some_and(|&b| f <= b));
            rep.check("scarf_f_vector_below_betti", bounded);
        }
    } else if q <= 4 {
        rep.betti = rep.f_vector.clone();
        rep.source("betti", "enumeration");
    } else {
        return Err(Error::Budget {
            what: "generator",
            needed: n as u128,
            limit: MAX_ORACLE_GENERATORS as u128,
        });
    }
    if q == 2 {
        rep.flag("q2_published_bound");
        rep.detail("published_bound", vec![r as u64, r as u64 - 1]);
    }
    Ok(rep)
}

pub fn bounds(q: usize, r: u32) -> Result<Report> {
    check_qr(q, r)?;
    let mut rep = Report::new("bounds", q, r);
    let (q32, r) = (q as u32, r);
    if (2..=4).contains(&q) {
        let t = bounds_small_q(q32, r)?;
        rep.betti = t.values();
        for b in &t.bounds {
            rep.source(&format!("beta_{}", b.i), "formula");
        }
        rep.detail(
            "formulas",
            t.bounds
                .iter()
                .map(|b| Value::from(b.formula))
                .collect::<Vec<_>>(),
        );
        rep.detail(
            "gamma",
            t.gamma.iter().map(|&g| g.to_string()).collect::<Vec<_>>(),
        );
        if let Some(p) = &t.as_published {
            rep.flag("q2_published_bound");
            rep.detail(
                "published_bound",
                p.iter().map(|b| b.value.to_string()).collect::<Vec<_>>(),
            );
        }
    } else if r == 2 {
        let mut v: Vec<u128> = (0..=q32 * q32)
            .map(|i| betti_r2(q32, i))
            .collect::<Result<_>>()?;
        while v.last() == Some(&0) {
            v.pop();
        }
        for i in 0..v.len() {
            rep.source(&format!("beta_{i}"), "formula");
        }
        rep.betti = v;
    } else if r == 3 {
        rep.betti = vec![gamma(0, q32, 3), betti1_r3(q32)?];
        rep.source("beta_0", "formula");
        rep.source("beta_1", "formula");
    } else {
        return Err(Error::InvalidParameter(format!(
            "no closed form for q = {q}, r = {r}; use q <= 4, r = 2 or r = 3"
        )));
    }
    Ok(rep)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Edge,
    SmallQ,
    Facet,
}

fn record_matching(rep: &mut Report, m: &MatchingReport) {
    rep.check("is_matching", m.is_matching);
    rep.check("is_homogeneous", m.is_homogeneous);
    rep.check("is_acyclic", m.is_acyclic);
    rep.f_vector = f_vector_of(&m.critical_cells);
    rep.source("f_vector", "enumeration");
}

#[allow(clippy::too_many_arguments)]
pub fn verify_matching(
    q: usize,
    r: u32,
    kind: Kind,
    a: Option<&[u32]>,
    certificate: Option<&Path>,
    write_certificate: Option<&Path>,
    s: &Settings,
) -> Result<Report> {
    check_qr(q, r)?;
    let mut rep = Report::new("verify-matching", q, r);
    let gens = Arc::new(Generators::new(q, r)?);
    let loaded = match certificate {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
            Some(MorseMatching::from_certificate(&gens, &text)?)
        }
        None => None,
    };
    let (matching, y) = match kind {
        Kind::Edge => {
            rep.detail("kind", "edge");
            let m = match loaded {
                Some(m) => m,
                None => build_edge_matching(&gens)?,
            };
            (m, FaceSet::up_to_dim(gens.clone(), 2)?)
        }
        Kind::SmallQ => {
            rep.detail("kind", "small-q");
            let m = match loaded {
                Some(m) => m,
                None => build_small_q_matching(gens.clone(), s.max_taylor)?,
            };
            (m, FaceSet::full_taylor(gens.clone(), s.max_taylor)?)
        }
        Kind::Facet => {
            rep.detail("kind", "facet");
            let a = a.ok_or_else(|| Error::InvalidParameter("--kind facet needs --a".into()))?;
            rep.detail("a", a.to_vec());
            let m = match loaded {
                Some(m) => m,
                None => build_facet_matching(&gens, a, s.max_taylor)?,
            };
            (m, FaceSet::full_taylor(gens.clone(), s.max_taylor)?)
        }
    };
    let report = extremal_core::morse::verify_matching(&matching, &y)?;
    record_matching(&mut rep, &report);
    rep.detail("pairs", matching.len());
    rep.detail("faces", y.len());
    let critical: HashSet<Face> = report.critical_cells.iter().copied().collect();

    match kind {
        Kind::Edge => {
            let n = gens.len();
            let scarf: HashSet<Face> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| gens.is_scarf_edge_idx(i, j))
                .map(|(i, j)| Face::singleton(i).with(j))
                .collect();
            let crit_edges: HashSet<Face> =
                critical.iter().copied().filter(|f| f.len() == 2).collect();
            rep.check("critical_edges_are_scarf", crit_edges == scarf);
            rep.detail("scarf_edges", scarf.len());
        }
        Kind::SmallQ => {
            let scarf = scarf_complex(q, r, None, s.face_budget)?;
            rep.check("critical_cells_are_scarf", face_set(&scarf)? == critical);
        }
        Kind::Facet => {
            let facet = u_facet(&gens, a.expect("checked above"))?;
            let above: HashSet<Face> = y
                .faces()
                .iter()
                .copied()
                .filter(|&f| facet.is_subset_of(f) && f != facet)
                .collect();
            let matched: HashSet<Face> =
                matching.pairs().iter().flat_map(|&(s, t)| [s, t]).collect();
            let sources: HashSet<Face> = matching.pairs().iter().map(|&(s, _)| s).collect();
            rep.check("strict_supersets_matched", sources == above);
            rep.check(
                "facet_subfaces_critical",
                facet.nonempty_subfaces().all(|f| critical.contains(&f)),
            );
            let partners_outside: bool = matched
                .iter()
                .filter(|f| !above.contains(f))
                .all(|&f| !facet.is_subset_of(f));
            rep.check("partners_avoid_facet_star", partners_outside);
            rep.detail("facet", gens.format_face(facet));
            rep.detail("faces_not_strictly_containing_facet", y.len() - above.len());
        }
    }
    if let Some(path) = write_certificate {
        std::fs::write(path, matching.to_certificate(&gens))
            .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    }
    Ok(rep)
}

pub fn psi_check(path: &Path, r: u32, s: &Settings) -> Result<Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("{}: {e}", path.display())))?;
    let ideal = SquareFreeIdeal::parse(&text)?;
    let q = ideal.q();
    check_qr(q, r)?;
    let mut rep = Report::new("psi-check", q, r);
    rep.detail("variables", ideal.n());
    let gens = Generators::new(q, r)?;
    let comps = gens.compositions();

    let mut generators_ok = true;
    for a in comps {
        generators_ok &= psi_apply(&generator_exponent(a)?, &ideal)? == ideal.power_vector(a)?;
    }
    rep.check("psi_of_generators", generators_ok);

    // lcm preservation on every face with at most three vertices.
    let n = comps.len();
    let powers = comps
        .iter()
        .map(|a| ideal.power_vector(a))
        .collect::<Result<Vec<_>>>()?;
    let mut lcm_ok = true;
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let face = [comps[i].clone(), comps[j].clone(), comps[k].clone()];
                let lhs = psi_apply(&face_label(&face)?, &ideal)?;
                let rhs: Vec<u32> = (0..ideal.n())
                    .map(|t| powers[i][t].max(powers[j][t]).max(powers[k][t]))
                    .collect();
                lcm_ok &= lhs == rhs;
            }
        }
    }
    rep.check("psi_preserves_lcm", lcm_ok);

    match scarf_inclusion_check(&ideal, r) {
        Ok(inc) => {
            rep.check("scarf_inclusion", inc.holds);
            let faces: Vec<Face> = inc
                .scarf_faces
                .iter()
                .map(|f| gens.face(f))
                .collect::<Result<_>>()?;
            rep.f_vector = f_vector_of(&faces);
            rep.source("f_vector", "enumeration");
        }
        Err(Error::UnsupportedInput(msg)) => {
            rep.flag("scarf_inclusion");
            rep.detail("scarf_inclusion_skipped", msg);
        }
        Err(e) => return Err(e),
    }

    match betti_bound_check(&ideal, r, s.max_dim, s.field) {
        Ok(b) => {
            rep.check("betti_bound", b.holds());
            rep.betti = b.rows.iter().map(|row| row.ideal as u128).collect();
            rep.source("betti", "oracle");
            rep.detail(
                "extremal_betti",
                b.rows
                    .iter()
                    .map(|row| row.extremal as u64)
                    .collect::<Vec<_>>(),
            );
            rep.detail("bound_is_equality", b.is_equality());
        }
        Err(e @ Error::Budget { .. }) => {
            rep.flag("betti_bound");
            rep.detail("betti_bound_skipped", e.to_string());
        }
        Err(e) => return Err(e),
    }
    Ok(rep)
}
