//! Named curve families on the base surfaces, labelled the way the source
//! families are, with build-time self-certification: every curve defined by
//! a unique-determination expression is re-checked with `determine`, and
//! every stated intersection pattern is asserted before the catalog is
//! returned.

use std::collections::BTreeMap;

use crate::curve::{self, Curve, TopType};
use crate::enumerate;
use crate::error::FamilyError;
use crate::expansion::{self, determine, ExpansionBudget, Verdict};
use crate::mapping::MappingClass;
use crate::overlay::Overlay;
use crate::surface::{build_base_triangulation, SideSlot, SurfaceSpec, Triangulation};

/// A labelled curve catalog on one base surface.
pub struct Catalog {
    pub tri: Triangulation,
    names: BTreeMap<String, Curve>,
    families: BTreeMap<&'static str, Vec<String>>,
}

impl Catalog {
    fn new(tri: Triangulation) -> Self {
        Catalog { tri, names: BTreeMap::new(), families: BTreeMap::new() }
    }

    fn insert(&mut self, label: String, c: Curve, fams: &[&'static str]) {
        for f in fams {
            self.families.entry(f).or_default().push(label.clone());
        }
        self.names.insert(label, c);
    }

    pub fn spec(&self) -> SurfaceSpec {
        self.tri.spec()
    }

    pub fn get(&self, label: &str) -> Result<&Curve, FamilyError> {
        self.names
            .get(label)
            .ok_or_else(|| FamilyError::SelfCheck(format!("unknown label {label}")))
    }

    pub fn labels(&self, family: &str) -> &[String] {
        self.families.get(family).map(|v| v.as_slice()).unwrap_or(&[])
    }

    pub fn family(&self, family: &str) -> Vec<Curve> {
        self.labels(family).iter().map(|l| self.names[l].clone()).collect()
    }

    pub fn label_of(&self, c: &Curve) -> Option<&str> {
        self.names.iter().find(|(_, v)| *v == c).map(|(k, _)| k.as_str())
    }

    pub fn all_labels(&self) -> impl Iterator<Item = (&String, &Curve)> {
        self.names.iter()
    }

    pub fn family_names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.families.keys().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "surface": [self.spec().genus, self.spec().punctures],
            "curves": self.names.iter().map(|(l, c)| c.to_json(&self.tri, Some(l))).collect::<Vec<_>>(),
            "families": self.families.iter().map(|(f, ls)| (f.to_string(), ls.clone())).collect::<BTreeMap<_,_>>(),
        })
    }
}

/// Builds the catalog for a supported base surface.
pub fn build_catalog(spec: SurfaceSpec) -> Result<Catalog, FamilyError> {
    match spec.genus {
        0 => genus0_family(spec.punctures),
        1 => genus1_family(spec.punctures),
        2 => genus2_family(spec.punctures),
        g => Err(FamilyError::UnsupportedGenus(g)),
    }
}

fn check(cond: bool, msg: &str) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::SelfCheck(msg.to_string()))
    }
}

fn determined(
    tri: &Triangulation,
    set: &[Curve],
    what: &str,
) -> Result<Curve, FamilyError> {
    match determine(tri, set)
        .map_err(|e| FamilyError::SelfCheck(format!("{what}: {e}")))?
        .verdict
    {
        Verdict::Unique(c) => Ok(c),
        v => Err(FamilyError::SelfCheck(format!("{what}: expected unique, got {v:?}"))),
    }
}

/// The seam edge of the genus-0 base complex joining punctures `i`, `i+1`.
pub fn g0_seam(tri: &Triangulation, i: usize) -> usize {
    let n = tri.spec().punctures as usize;
    let (a, b) = (i, (i + 1) % n);
    (0..tri.edge_count())
        .find(|&e| {
            let (p, q) = tri.edge_endpoints(e);
            (p, q) == (a, b) || (q, p) == (a, b)
        })
        .expect("seam edge exists")
}

/// Outer curve around punctures `i`,`j` of the genus-0 base whose defining
/// arc is the polygon chord `(i,j)` of the front (`front=true`) or back
/// polygon.
fn g0_chord_curve(tri: &Triangulation, i: usize, j: usize, front: bool) -> Curve {
    let n = tri.spec().punctures as usize;
    assert!(i < j && j < n);
    // Fan diagonal edges (0,k) of the chosen polygon.
    let diag = |k: usize| -> usize {
        // Front triangles are 0..n-2, back are n-2..2n-4; triangle t has
        // side0 = chord (0, t+1) for front, (0, t+2) for back, see builder.
        if front {
            tri.edge_of(SideSlot::new(k - 1, 0))
        } else {
            tri.edge_of(SideSlot::new((n - 2) + (k - 2), 0))
        }
    };
    if i == 0 && (2..=n - 2).contains(&j) {
        return curve::edge_link_curve(tri, diag(j)).expect("diagonal link");
    }
    // Interior chord: crosses the fan diagonals (0,k) for i < k < j.
    let mut w = vec![0u32; tri.edge_count()];
    for k in (i + 1)..j {
        if (2..=n - 2).contains(&k) {
            w[diag(k)] += 2;
        }
    }
    for e in 0..tri.edge_count() {
        w[e] += (tri.edge_ends_at(e, i) + tri.edge_ends_at(e, j)) as u32;
    }
    Curve::from_weights(tri, w).expect("chord neighbourhood boundary")
}

/// Closed outer chain, polygon diagonal curves, and their union for the
/// punctured sphere.
pub fn genus0_family(n: u32) -> Result<Catalog, FamilyError> {
    if n < 5 {
        return Err(FamilyError::TooFewPunctures {
            genus: 0,
            min: 5,
            got: n,
            hint: " (complexity at least 2 is required)",
        });
    }
    let tri = build_base_triangulation(SurfaceSpec::new(0, n)?)?;
    let n = n as usize;
    let mut cat = Catalog::new(tri);
    // O: alpha_i around punctures {i, i+1}.
    let alphas: Vec<Curve> = (0..n)
        .map(|i| curve::edge_link_curve(&cat.tri, g0_seam(&cat.tri, i)).expect("seam link"))
        .collect();
    for (i, a) in alphas.iter().enumerate() {
        check(a.is_outer(&cat.tri), "outer chain curve is outer")?;
        cat.insert(format!("alpha_{i}"), a.clone(), &["O", "Y"]);
    }
    // Closed outer chain pattern.
    for i in 0..n {
        for j in (i + 1)..n {
            let d = (j - i).min(n - (j - i));
            let want = if d == 1 { 2 } else { 0 };
            check(
                curve::intersection_number(&cat.tri, &alphas[i], &alphas[j]) == want,
                "closed outer chain pattern",
            )?;
        }
    }
    // D1/D2: diagonal curves beta_{i,j} (front) and gamma_{i,j} (back), for
    // non-adjacent pairs 0 <= i < j < n.
    for fam in ["D1", "D2"] {
        for i in 0..n {
            for j in (i + 1)..n {
                let d = (j - i).min(n - (j - i));
                if d < 2 {
                    continue;
                }
                let c = g0_chord_curve(&cat.tri, i, j, fam == "D1");
                match c.top_type(&cat.tri) {
                    TopType::Outer { enclosed } => {
                        let mut e = *enclosed;
                        e.sort();
                        check(e == [i, j], "diagonal curve bounds its endpoints")?;
                    }
                    _ => return Err(FamilyError::SelfCheck("diagonal curve not outer".into())),
                }
                let name = if fam == "D1" { "beta" } else { "gamma" };
                cat.insert(format!("{name}_{i}_{j}"), c, &[fam, "Y"]);
            }
        }
    }
    let y = cat.family("Y");
    let mut dedup = y.clone();
    dedup.sort();
    dedup.dedup();
    check(dedup.len() == n * (n - 2), "|Y| = n(n-2)")?;
    Ok(cat)
}

/// Fan and meridian curves, the determined outer chain, and the half-twist
/// auxiliaries for the punctured torus.
pub fn genus1_family(n: u32) -> Result<Catalog, FamilyError> {
    if n < 3 {
        return Err(FamilyError::TooFewPunctures {
            genus: 1,
            min: 3,
            got: n,
            hint: " (the twice-punctured torus has the curve graph of the 5-punctured sphere; use (0,5))",
        });
    }
    let tri = build_base_triangulation(SurfaceSpec::new(1, n)?)?;
    let n = n as usize;
    let mut cat = Catalog::new(tri);
    // Ladder edges: strip i has lower triangle 2i with sides (h_i, v_{i+1}, d_i)
    // and upper triangle 2i+1 with sides (d_i, h_i, v_i).
    let h = |i: usize| cat.tri.edge_of(SideSlot::new(2 * (i % n), 0));
    let d = |i: usize| cat.tri.edge_of(SideSlot::new(2 * (i % n), 2));
    let v = |i: usize| cat.tri.edge_of(SideSlot::new(2 * (i % n) + 1, 2));
    // Fan curves alpha_0^i: vertical circles crossing h_i and d_i once.
    let mut fan: Vec<Curve> = Vec::new();
    for i in 0..n {
        let mut w = vec![0u32; cat.tri.edge_count()];
        w[h(i)] = 1;
        w[d(i)] = 1;
        let c = Curve::from_weights(&cat.tri, w).expect("fan curve");
        check(c.is_nonseparating(&cat.tri), "fan curve is non-separating")?;
        fan.push(c);
    }
    // alpha_1: horizontal circle crossing every v_i and d_i once.
    let alpha1 = {
        let mut w = vec![0u32; cat.tri.edge_count()];
        for i in 0..n {
            w[v(i)] = 1;
            w[d(i)] = 1;
        }
        Curve::from_weights(&cat.tri, w).expect("meridian curve")
    };
    check(alpha1.is_nonseparating(&cat.tri), "alpha_1 is non-separating")?;
    for i in 0..n {
        for j in (i + 1)..n {
            check(
                curve::intersection_number(&cat.tri, &fan[i], &fan[j]) == 0,
                "fan curves are disjoint",
            )?;
        }
        check(
            curve::intersection_number(&cat.tri, &alpha1, &fan[i]) == 1,
            "alpha_1 meets each fan curve once",
        )?;
    }
    for (i, c) in fan.iter().enumerate() {
        cat.insert(format!("alpha_0^{i}"), c.clone(), &["C", "Y"]);
    }
    cat.insert("alpha_1".into(), alpha1.clone(), &["C", "Y"]);

    // beta_i = the unique curve disjoint from C minus alpha_0^i.
    let mut betas: Vec<Curve> = Vec::new();
    for i in 0..n {
        let mut set: Vec<Curve> =
            (0..n).filter(|&j| j != i).map(|j| fan[j].clone()).collect();
        set.push(alpha1.clone());
        let b = determined(&cat.tri, &set, &format!("beta_{i}"))?;
        check(b.is_outer(&cat.tri), "beta_i is outer")?;
        betas.push(b);
    }
    // D is a closed outer chain.
    for i in 0..n {
        for j in (i + 1)..n {
            let dd = (j - i).min(n - (j - i));
            let want = if dd == 1 { 2 } else { 0 };
            check(
                curve::intersection_number(&cat.tri, &betas[i], &betas[j]) == want,
                "determined family is a closed outer chain",
            )?;
        }
    }
    for (i, b) in betas.iter().enumerate() {
        cat.insert(format!("beta_{i}"), b.clone(), &["D", "Y"]);
    }

    // eps_i^+- = half twists of beta_{i-1} along beta_i.
    for i in 0..n {
        let prev = betas[(i + n - 1) % n].clone();
        for (sgn, tag) in [(1i8, "+"), (-1i8, "-")] {
            let ht = MappingClass::half_twist(&cat.tri, betas[i].clone(), sgn)
                .map_err(FamilyError::Curve)?;
            let e = ht.apply(&cat.tri, &prev);
            cat.insert(format!("eps_{i}^{tag}"), e, &["A", "Y"]);
        }
    }
    {
        let mut a = cat.family("A");
        a.sort();
        a.dedup();
        check(a.len() == 2 * n, "|A| = 2n")?;
    }

    // gamma_i^+- = <{beta_{i+1}..beta_{i-2}} u {eps_i^+-} u {alpha_1}>.
    for i in 0..n {
        for tag in ["+", "-"] {
            let mut set: Vec<Curve> = Vec::new();
            let mut k = (i + 1) % n;
            loop {
                set.push(betas[k].clone());
                if k == (i + n - 2) % n {
                    break;
                }
                k = (k + 1) % n;
            }
            set.push(cat.get(&format!("eps_{i}^{tag}"))?.clone());
            set.push(alpha1.clone());
            let g = determined(&cat.tri, &set, &format!("gamma_{i}^{tag}"))?;
            cat.insert(format!("gamma_{i}^{tag}"), g, &["GammaAux"]);
        }
    }
    // gamma_{i,i+1}^+-: aliases for n = 3, determined sets for n >= 4.
    for i in 0..n {
        for tag in ["+", "-"] {
            let c = if n == 3 {
                let other = if tag == "+" { "-" } else { "+" };
                cat.get(&format!("gamma_{}^{other}", (i + 2) % n))?.clone()
            } else {
                let mut set: Vec<Curve> = vec![alpha1.clone()];
                let inner = if tag == "+" {
                    [format!("gamma_{i}^+"), format!("gamma_{}^+", (i + 1) % n), format!("gamma_{}^-", (i + 2) % n)]
                } else {
                    [format!("gamma_{i}^-"), format!("gamma_{}^-", (i + 1) % n), format!("gamma_{}^-", (i + 2) % n)]
                };
                for l in &inner {
                    set.push(cat.get(l)?.clone());
                }
                let mut k = (i + 2) % n;
                loop {
                    set.push(betas[k].clone());
                    if k == (i + n - 2) % n {
                        break;
                    }
                    k = (k + 1) % n;
                }
                determined(&cat.tri, &set, &format!("gamma_{i}_{}^{tag}", (i + 1) % n))?
            };
            cat.insert(format!("gamma_{i}_{}^{tag}", (i + 1) % n), c, &["GammaPair"]);
        }
    }
    Ok(cat)
}

/// The generating set used with each catalog: half-twists along the outer
/// chain in genus zero, twists along the fan plus half-twists along the
/// determined chain in genus one, and the genus-two set of twists along the
/// chain-and-fan minus one end plus half-twists along the determined outer
/// curves.
pub fn generating_set(cat: &Catalog) -> Result<Vec<(String, MappingClass)>, FamilyError> {
    let tri = &cat.tri;
    let mut out = Vec::new();
    let push_twist = |label: &str, c: &Curve, out: &mut Vec<(String, MappingClass)>| {
        out.push((format!("T({label})"), MappingClass::dehn_twist(c.clone(), 1)));
        out.push((format!("T({label})^-1"), MappingClass::dehn_twist(c.clone(), -1)));
    };
    let push_half = |label: &str,
                     c: &Curve,
                     out: &mut Vec<(String, MappingClass)>|
     -> Result<(), FamilyError> {
        out.push((format!("H({label})"), MappingClass::half_twist(tri, c.clone(), 1)?));
        out.push((format!("H({label})^-1"), MappingClass::half_twist(tri, c.clone(), -1)?));
        Ok(())
    };
    match cat.spec().genus {
        0 => {
            for l in cat.labels("O") {
                push_half(l, &cat.names[l], &mut out)?;
            }
        }
        1 => {
            for l in cat.labels("C") {
                push_twist(l, &cat.names[l], &mut out);
            }
            for l in cat.labels("D") {
                push_half(l, &cat.names[l], &mut out)?;
            }
        }
        2 => {
            for l in cat.labels("C") {
                if l != "alpha_5" {
                    push_twist(l, &cat.names[l], &mut out);
                }
            }
            for l in cat.labels("Douter") {
                if l.starts_with("delta_") {
                    push_half(l, &cat.names[l], &mut out)?;
                }
            }
        }
        g => return Err(FamilyError::UnsupportedGenus(g)),
    }
    Ok(out)
}

mod genus2;
pub use genus2::genus2_family;

/// Regular-neighbourhood boundary: essential boundary pushoffs of a minimal
/// position realization of the union, deduplicated.
pub fn regular_neighbourhood_boundary(
    tri: &Triangulation,
    curves: &[Curve],
) -> Result<Vec<Curve>, FamilyError> {
    let weights: Vec<&[u32]> = curves.iter().map(|c| c.weights()).collect();
    let mut ov = Overlay::new(tri, &weights).map_err(FamilyError::Curve)?;
    ov.reduce();
    let mut out: Vec<Curve> = Vec::new();
    for piece in ov.pieces() {
        for circ in &piece.circuits {
            if let curve::PushoffClass::Essential(c) = curve::classify_pushoff(tri, circ) {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// A separating non-outer curve of the requested type together with witness
/// sets that uniquely determine it.
///
/// `sphere_side` lists the punctures that end up on a genus-zero side
/// containing no extra topology; the remaining punctures (and all the genus)
/// sit on the other side. The witness is assembled from catalog curves and
/// certified by `determine` before being returned.
pub struct SeparatingWitness {
    pub curve: Curve,
    pub witness: Vec<Curve>,
}

pub fn separating_witness(
    cat: &Catalog,
    sphere_side: &[usize],
) -> Result<SeparatingWitness, FamilyError> {
    let tri = &cat.tri;
    let n = cat.spec().punctures as usize;
    let g = cat.spec().genus;
    let mut side: Vec<usize> = sphere_side.to_vec();
    side.sort();
    side.dedup();
    let k = side.len();
    if side.iter().any(|&p| p >= n) {
        return Err(FamilyError::UnrealizableType("puncture index out of range".into()));
    }
    // The curve must be essential and non-outer on both sides.
    let other = n - k;
    let ok = match g {
        0 => k >= 3 && other >= 3,
        _ => k >= 2,
    };
    if !ok {
        return Err(FamilyError::UnrealizableType(format!(
            "no separating non-outer curve cuts off {k} punctures on a sphere side of this surface"
        )));
    }
    // Contiguity: the realization below needs a run of consecutive punctures.
    let contiguous = (0..n).any(|s| (0..k).all(|t| side.contains(&((s + t) % n))));
    if !contiguous {
        return Err(FamilyError::UnrealizableType(
            "only contiguous puncture blocks are realized on the base surface".into(),
        ));
    }
    let start = (0..n)
        .find(|&s| (0..k).all(|t| side.contains(&((s + t) % n))))
        .unwrap();
    match g {
        0 => {
            // Chain of seam curves inside the block and inside its complement.
            let inner: Vec<Curve> =
                (0..k - 1).map(|t| cat.names[&format!("alpha_{}", (start + t) % n)].clone()).collect();
            let outer: Vec<Curve> = (0..other - 1)
                .map(|t| cat.names[&format!("alpha_{}", (start + k + t) % n)].clone())
                .collect();
            let witness: Vec<Curve> = inner.into_iter().chain(outer).collect();
            let target = determined(tri, &witness, "separating witness")?;
            match target.top_type(tri) {
                TopType::SeparatingNonOuter { .. } => {}
                _ => return Err(FamilyError::SelfCheck("witness target is not separating non-outer".into())),
            }
            Ok(SeparatingWitness { curve: target, witness })
        }
        1 => {
            // Witness: fan-and-meridian curves fill the genus side, the
            // determined outer chain restricted to the sphere block fills the
            // other; the unique disjoint curve is the splitting curve.
            let mut witness: Vec<Curve> = vec![cat.names["alpha_1"].clone()];
            for j in 0..n {
                if !side.contains(&j) {
                    witness.push(cat.names[&format!("alpha_0^{j}")].clone());
                }
            }
            for t in 0..k.saturating_sub(1) {
                witness.push(cat.names[&format!("beta_{}", (start + t) % n)].clone());
            }
            let target = determined(tri, &witness, "separating witness")?;
            match target.top_type(tri) {
                TopType::SeparatingNonOuter { .. } => {}
                _ => {
                    return Err(FamilyError::SelfCheck(
                        "witness target is not separating non-outer".into(),
                    ))
                }
            }
            Ok(SeparatingWitness { curve: target, witness })
        }
        _ => genus2::separating_witness_g2(cat, &side),
    }
}

/// Ambient containment test used by the genus-two side bookkeeping: the
/// piece of the complement of `bounding` that contains `x`, reported by its
/// puncture set.
pub fn side_punctures(
    tri: &Triangulation,
    bounding: &[Curve],
    x: &Curve,
) -> Result<Vec<usize>, FamilyError> {
    let mut weights: Vec<&[u32]> = bounding.iter().map(|c| c.weights()).collect();
    weights.push(x.weights());
    let mut ov = Overlay::new(tri, &weights).map_err(FamilyError::Curve)?;
    ov.reduce();
    let xid = bounding.len() as u32;
    for b in 0..bounding.len() {
        check(ov.crossings(b as u32, xid) == 0, "side test requires disjointness")?;
    }
    let pieces = ov.pieces();
    let mut adjacent: Vec<usize> = Vec::new();
    for p in &pieces {
        if p.circuits.iter().any(|c| c.darts().any(|d| d.part == xid)) {
            adjacent.extend(p.punctures.iter().copied());
        }
    }
    adjacent.sort();
    adjacent.dedup();
    // Match against the complement of the bounding set alone.
    let bw: Vec<&[u32]> = bounding.iter().map(|c| c.weights()).collect();
    let mut bov = Overlay::new(tri, &bw).map_err(FamilyError::Curve)?;
    bov.reduce();
    let bpieces = bov.pieces();
    if adjacent.is_empty() {
        // x sits in a puncture-free piece.
        let empty: Vec<&crate::overlay::Piece> =
            bpieces.iter().filter(|p| p.punctures.is_empty()).collect();
        check(empty.len() == 1, "ambiguous puncture-free side")?;
        return Ok(Vec::new());
    }
    for p in &bpieces {
        let mut ps = p.punctures.clone();
        ps.sort();
        if adjacent.iter().all(|q| ps.contains(q)) {
            return Ok(ps);
        }
    }
    Err(FamilyError::SelfCheck("no bounding piece contains the adjacent punctures".into()))
}

/// First expansion of a labelled family, returned as curves.
pub fn family_expansion(
    cat: &Catalog,
    family: &str,
    budget: ExpansionBudget,
) -> (Vec<Curve>, bool) {
    let base = cat.family(family);
    let exp = expansion::expand_once(&cat.tri, &base, budget);
    let mut out = base;
    out.extend(exp.discovered.keys().cloned());
    out.sort();
    out.dedup();
    (out, exp.complete)
}

/// Small helper for tests and sweeps: all essential curves up to a weight.
pub fn bounded_curves(tri: &Triangulation, max_total: u32) -> Vec<Curve> {
    enumerate::enumerate_curves(tri, max_total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus0_counts_and_patterns() {
        let cat = genus0_family(5).unwrap();
        assert_eq!(cat.labels("O").len(), 5);
        assert_eq!(cat.labels("D1").len(), 5);
        assert_eq!(cat.labels("D2").len(), 5);
        assert_eq!(cat.labels("Y").len(), 15);
        let cat6 = genus0_family(6).unwrap();
        assert_eq!(cat6.labels("Y").len(), 24);
        assert!(genus0_family(4).is_err());
    }

    #[test]
    fn genus1_catalog_builds_and_certifies() {
        let cat = genus1_family(3).unwrap();
        assert_eq!(cat.labels("C").len(), 4);
        assert_eq!(cat.labels("D").len(), 3);
        assert_eq!(cat.labels("A").len(), 6);
        assert_eq!(cat.labels("Y").len(), 4 + 3 + 6);
        assert!(genus1_family(2).is_err());
    }

    #[test]
    fn genus1_alpha1_is_determined_by_the_chain() {
        // The determined outer chain pins the meridian back down.
        let cat = genus1_family(3).unwrap();
        let d = cat.family("D");
        let a1 = cat.get("alpha_1").unwrap();
        let got = determined(&cat.tri, &d, "alpha_1 from D").unwrap();
        assert_eq!(&got, a1);
    }

    #[test]
    fn genus0_generating_set_size() {
        let cat = genus0_family(5).unwrap();
        assert_eq!(generating_set(&cat).unwrap().len(), 10);
    }

    #[test]
    fn genus1_generating_set_size() {
        let cat = genus1_family(3).unwrap();
        // 2(n+1) twists plus 2n half-twists.
        assert_eq!(generating_set(&cat).unwrap().len(), 2 * 4 + 2 * 3);
    }

    #[test]
    fn neighbourhood_boundary_of_single_curve_is_itself() {
        let cat = genus0_family(5).unwrap();
        let a = cat.get("alpha_0").unwrap().clone();
        let rnb = regular_neighbourhood_boundary(&cat.tri, &[a.clone()]).unwrap();
        assert_eq!(rnb, vec![a]);
    }

    #[test]
    fn separating_witness_on_s06() {
        let cat = genus0_family(6).unwrap();
        let w = separating_witness(&cat, &[0, 1, 2]).unwrap();
        match w.curve.top_type(&cat.tri) {
            TopType::SeparatingNonOuter { sides } => {
                let mut split: Vec<usize> = sides[0].punctures.clone();
                split.sort();
                assert!(split == vec![0, 1, 2] || split == vec![3, 4, 5]);
            }
            t => panic!("wrong type {t:?}"),
        }
        // The symmetric partition gives the same curve.
        let w2 = separating_witness(&cat, &[3, 4, 5]).unwrap();
        assert_eq!(w.curve, w2.curve);
        // No such curve on the 5-punctured sphere.
        let cat5 = genus0_family(5).unwrap();
        assert!(separating_witness(&cat5, &[0, 1]).is_err());
    }

    #[test]
    fn separating_witness_on_s13_genus_split() {
        let cat = genus1_family(3).unwrap();
        let w = separating_witness(&cat, &[0, 1, 2]).unwrap();
        match w.curve.top_type(&cat.tri) {
            TopType::SeparatingNonOuter { sides } => {
                // One side carries the genus and no punctures.
                assert!(sides.iter().any(|s| s.genus == 1 && s.punctures.is_empty()));
            }
            t => panic!("wrong type {t:?}"),
        }
    }
}
