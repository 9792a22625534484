//! The genus-two catalog: a five-curve chain, the fan of curves through both
//! handles, bounding pairs of odd chains, and the determined auxiliaries.
//!
//! The base complex is a punctured tube with a pentagon handle block at each
//! end. Chain and fan curves are built as corridor words from block routes
//! and tube lanes; the exact handedness of the block routes is calibrated at
//! build time by checking the stated intersection pattern, so the catalog is
//! independent of orientation conventions baked into the complex.

use std::collections::BTreeMap;

use super::{check, determined, Catalog};
use crate::curve::{self, Curve};
use crate::error::FamilyError;
use crate::surface::{build_base_triangulation, SideSlot, SurfaceSpec, Triangulation};

/// Edge lookup for the genus-2 base complex.
struct Layout {
    n: usize,
}

impl Layout {
    fn lo(&self, i: usize) -> usize {
        2 * i
    }
    fn up(&self, i: usize) -> usize {
        2 * i + 1
    }
    fn pl(&self, k: usize) -> usize {
        2 * (self.n - 1) + k
    }
    fn pr(&self, k: usize) -> usize {
        2 * (self.n - 1) + 3 + k
    }
}

/// In-block loop words from the mouth triangle back to itself, of bounded
/// length and without immediate backtracks. The two handle generators arise
/// among these; which is which is decided by intersection checks.
fn block_routes(tri: &Triangulation, mouth_triangle: usize, max_len: usize) -> Vec<Vec<SideSlot>> {
    let block: Vec<usize> = (0..3).map(|k| mouth_triangle + k).collect();
    let mut out = Vec::new();
    let mut word: Vec<SideSlot> = Vec::new();
    fn dfs(
        tri: &Triangulation,
        block: &[usize],
        mouth: usize,
        word: &mut Vec<SideSlot>,
        cur: usize,
        max_len: usize,
        out: &mut Vec<Vec<SideSlot>>,
    ) {
        if !word.is_empty() && cur == mouth {
            out.push(word.clone());
            // Longer routes through the mouth triangle would retrace.
            return;
        }
        if word.len() >= max_len {
            return;
        }
        for k in 0..3 {
            let s = SideSlot::new(cur, k);
            // Stay inside the block and do not use the mouth edge.
            let t2 = tri.glue(s).triangle();
            if !block.contains(&t2) {
                continue;
            }
            if let Some(&last) = word.last() {
                if tri.glue(last) == s {
                    continue;
                }
            }
            word.push(s);
            dfs(tri, block, mouth, word, t2, max_len, out);
            word.pop();
        }
    }
    dfs(tri, &block, mouth_triangle, &mut word, mouth_triangle, max_len, &mut out);
    out
}

/// Tube lane from inside the left mouth triangle to inside the right one;
/// `front[j]` picks the near-side edge of strip `j`.
fn lane_right(lay: &Layout, front: &[bool]) -> Vec<SideSlot> {
    let mut w = vec![SideSlot::new(lay.pl(0), 0)];
    for (j, &f) in front.iter().enumerate() {
        w.push(SideSlot::new(lay.up(j), if f { 1 } else { 0 }));
        w.push(SideSlot::new(lay.lo(j), 1));
    }
    w
}

fn lane_left(lay: &Layout, front: &[bool]) -> Vec<SideSlot> {
    let mut w = vec![SideSlot::new(lay.pr(0), 0)];
    for j in (0..front.len()).rev() {
        w.push(SideSlot::new(lay.lo(j), if front[j] { 0 } else { 2 }));
        w.push(SideSlot::new(lay.up(j), 2));
    }
    w
}

fn through_curve(
    tri: &Triangulation,
    lay: &Layout,
    route_r: &[SideSlot],
    route_l: &[SideSlot],
    bits_r: &[bool],
    bits_l: &[bool],
) -> Result<Curve, FamilyError> {
    let mut word = lane_right(lay, bits_r);
    word.extend_from_slice(route_r);
    word.extend(lane_left(lay, bits_l));
    word.extend_from_slice(route_l);
    Curve::from_word(tri, &word).map_err(FamilyError::Curve)
}

pub fn genus2_family(n: u32) -> Result<Catalog, FamilyError> {
    if n < 1 {
        return Err(FamilyError::TooFewPunctures {
            genus: 2,
            min: 1,
            got: n,
            hint: " (the closed genus-2 surface has the curve graph of the 6-punctured sphere; use (0,6))",
        });
    }
    let tri = build_base_triangulation(SurfaceSpec::new(2, n)?)?;
    let n = n as usize;
    let lay = Layout { n };
    let mut cat = Catalog::new(tri);
    let tri = &cat.tri;

    // Handle-block curves: in each pentagon, the two core curves of the
    // one-holed torus.
    let e = |t: usize, k: usize| tri.edge_of(SideSlot::new(t, k));
    let block_pair = |p0: usize, p1: usize| -> Result<(Curve, Curve), FamilyError> {
        // (a, c1, c2, b) edges of the block with triangles p0, p0+1=p1-ish.
        let (c1, b, c2) = (e(p0, 2), e(p1, 1), e(p1, 2));
        let a = e(p0, 1);
        let mut w1 = vec![0u32; tri.edge_count()];
        w1[b] = 1;
        w1[c2] = 1;
        let h = Curve::from_weights(tri, w1).map_err(FamilyError::Curve)?;
        let mut w2 = vec![0u32; tri.edge_count()];
        w2[a] = 1;
        w2[c1] = 1;
        w2[c2] = 1;
        let v = Curve::from_weights(tri, w2).map_err(FamilyError::Curve)?;
        check(curve::intersection_number(tri, &h, &v) == 1, "block pair meets once")?;
        Ok((h, v))
    };
    let (hl, vl) = block_pair(lay.pl(0), lay.pl(1))?;
    let (hr, vr) = block_pair(lay.pr(0), lay.pr(1))?;

    // Calibrate block routes: a "meridian route" crosses exactly one of the
    // two block curves exactly once; the fan uses it, and the curve it
    // crosses becomes the end of the chain (alpha_1 resp. alpha_5).
    let routes_l = block_routes(tri, lay.pl(0), 7);
    let routes_r = block_routes(tri, lay.pr(0), 7);
    let all_d = vec![false; n - 1];
    let kind = |route: &[SideSlot], routes_other: &[Vec<SideSlot>], left: bool| -> Option<(Curve, u64, u64)> {
        // Build a through-curve using this route on the chosen side and the
        // first route on the other side, then measure block intersections.
        let other = &routes_other[0];
        let (rr, rl) = if left { (other.as_slice(), route) } else { (route, other.as_slice()) };
        let c = through_curve(tri, &lay, rr, rl, &all_d, &all_d).ok()?;
        let (x, y) = if left { (&hl, &vl) } else { (&hr, &vr) };
        let (ix, iy) = (curve::intersection_number(tri, &c, x), curve::intersection_number(tri, &c, y));
        Some((c, ix, iy))
    };
    let pick = |routes: &[Vec<SideSlot>], routes_other: &[Vec<SideSlot>], left: bool| -> Option<(Vec<SideSlot>, bool)> {
        // Returns (route, crosses_h) for a route meeting exactly one block
        // curve exactly once.
        for r in routes {
            if let Some((_, ih, iv)) = kind(r, routes_other, left) {
                if ih == 1 && iv == 0 {
                    return Some((r.clone(), true));
                }
                if ih == 0 && iv == 1 {
                    return Some((r.clone(), false));
                }
            }
        }
        None
    };
    let (first_l, fan_crosses_hl) = pick(&routes_l, &routes_r, true)
        .ok_or_else(|| FamilyError::SelfCheck("no meridian route in left block".into()))?;
    let (first_r, fan_crosses_hr) = pick(&routes_r, &routes_l, false)
        .ok_or_else(|| FamilyError::SelfCheck("no meridian route in right block".into()))?;
    let _ = (&first_l, &first_r);
    // alpha_1 / alpha_5: the block curves the fan meets once; alpha_2 /
    // alpha_4 their partners.
    let (alpha1, alpha2) = if fan_crosses_hl { (hl, vl) } else { (vl, hl) };
    let (alpha5, alpha4) = if fan_crosses_hr { (hr, vr) } else { (vr, hr) };

    // All routes with the meridian signature, used as entry variants: the
    // first slot of a block route decides on which side of the mouth
    // puncture the through-curve passes.
    let sig_routes = |routes: &[Vec<SideSlot>], a_end: &Curve, a_partner: &Curve, left: bool| -> Vec<Vec<SideSlot>> {
        let other = if left { &routes_r[0] } else { &routes_l[0] };
        routes
            .iter()
            .filter(|r| {
                let (rr, rl) = if left { (other.as_slice(), r.as_slice()) } else { (r.as_slice(), other.as_slice()) };
                through_curve(tri, &lay, rr, rl, &all_d, &all_d)
                    .map(|c| {
                        curve::intersection_number(tri, &c, a_end) == 1
                            && curve::intersection_number(tri, &c, a_partner) == 0
                    })
                    .unwrap_or(false)
            })
            .cloned()
            .collect()
    };
    let fan_routes_l = sig_routes(&routes_l, &alpha1, &alpha2, true);
    let fan_routes_r = sig_routes(&routes_r, &alpha5, &alpha4, false);

    // Candidate fan curves; the correct family is read off from the puncture
    // split of {candidate, alpha_2, alpha_4}.
    let split = |f: &Curve| -> Result<Option<(Vec<usize>, Vec<usize>)>, FamilyError> {
        if curve::intersection_number(tri, f, &alpha2) != 0
            || curve::intersection_number(tri, f, &alpha4) != 0
        {
            return Ok(None);
        }
        let m = [f.clone(), alpha2.clone(), alpha4.clone()];
        let weights: Vec<&[u32]> = m.iter().map(|c| c.weights()).collect();
        let mut ov = crate::overlay::Overlay::new(tri, &weights).map_err(FamilyError::Curve)?;
        ov.reduce();
        let pieces = ov.pieces();
        if pieces.len() != 2 {
            return Ok(None);
        }
        let mut a = pieces[0].punctures.clone();
        let mut b = pieces[1].punctures.clone();
        a.sort();
        b.sort();
        if a.len() > b.len() || (a.len() == b.len() && a > b) {
            std::mem::swap(&mut a, &mut b);
        }
        Ok(Some((a, b)))
    };
    let mut fans_by_split: BTreeMap<Vec<usize>, Vec<Curve>> = BTreeMap::new();
    for rl in &fan_routes_l {
        for rr in &fan_routes_r {
            for i in 0..n {
                let bits: Vec<bool> = (0..n - 1).map(|j| j < i).collect();
                if let Ok(c) = through_curve(tri, &lay, rr, rl, &bits, &all_d) {
                    if curve::intersection_number(tri, &c, &alpha1) == 1
                        && curve::intersection_number(tri, &c, &alpha5) == 1
                    {
                        if let Some((a, _b)) = split(&c)? {
                            let v = fans_by_split.entry(a).or_default();
                            if !v.contains(&c) {
                                v.push(c);
                            }
                        }
                    }
                }
            }
        }
    }
    // alpha_3 candidates: partner-signature routes in both blocks.
    let partner_routes_l = sig_routes(&routes_l, &alpha2, &alpha1, true);
    let partner_routes_r = sig_routes(&routes_r, &alpha4, &alpha5, false);
    let mut alpha3_cands: Vec<Curve> = Vec::new();
    for bits_r in [vec![false; n - 1], vec![true; n - 1]] {
        for bits_l in [vec![false; n - 1], vec![true; n - 1]] {
            for rl in &partner_routes_l {
                for rr in &partner_routes_r {
                    if let Ok(c) = through_curve(tri, &lay, rr, rl, &bits_r, &bits_l) {
                        let ok = curve::intersection_number(tri, &c, &alpha2) == 1
                            && curve::intersection_number(tri, &c, &alpha4) == 1
                            && curve::intersection_number(tri, &c, &alpha1) == 0
                            && curve::intersection_number(tri, &c, &alpha5) == 0;
                        if ok && !alpha3_cands.contains(&c) {
                            alpha3_cands.push(c);
                        }
                    }
                }
            }
        }
    }
    // Joint selection: one fan per split plus a middle curve, all pairwise
    // disjoint. Depth-first over the (small) candidate pools, first hit wins.
    let split_keys: Vec<Vec<usize>> = (0..=n)
        .map(|i| {
            let prefix: Vec<usize> = (0..i).collect();
            let suffix: Vec<usize> = (i..n).collect();
            if fans_by_split.contains_key(&prefix) { prefix } else { suffix }
        })
        .collect();
    for k in &split_keys {
        if !fans_by_split.contains_key(k) {
            return Err(FamilyError::SelfCheck(format!(
                "no fan candidate splits the punctures at {k:?} (have {:?})",
                fans_by_split.keys().collect::<Vec<_>>()
            )));
        }
    }
    fn joint(
        tri: &Triangulation,
        pools: &[Vec<Curve>],
        chosen: &mut Vec<Curve>,
        alpha3_cands: &[Curve],
    ) -> Option<(Vec<Curve>, Curve)> {
        if chosen.len() == pools.len() {
            for a3 in alpha3_cands {
                if chosen.iter().all(|f| curve::intersection_number(tri, a3, f) == 0) {
                    return Some((chosen.clone(), a3.clone()));
                }
            }
            return None;
        }
        for cand in &pools[chosen.len()] {
            if chosen
                .iter()
                .all(|f| f != cand && curve::intersection_number(tri, cand, f) == 0)
            {
                chosen.push(cand.clone());
                if let Some(hit) = joint(tri, pools, chosen, alpha3_cands) {
                    return Some(hit);
                }
                chosen.pop();
            }
        }
        None
    }
    let pools: Vec<Vec<Curve>> =
        split_keys.iter().map(|k| fans_by_split[k].clone()).collect();
    let mut chosen = Vec::new();
    let (fans, alpha3) = joint(tri, &pools, &mut chosen, &alpha3_cands).ok_or_else(|| {
        FamilyError::SelfCheck("no jointly consistent fan family and middle curve".into())
    })?;

    // Certify the full pattern.
    let chain = [&alpha1, &alpha2, &alpha3, &alpha4, &alpha5];
    for i in 0..5 {
        check(chain[i].is_nonseparating(tri), "chain curves are non-separating")?;
        for j in (i + 1)..5 {
            let want = if j == i + 1 { 1 } else { 0 };
            check(
                curve::intersection_number(tri, chain[i], chain[j]) == want,
                "chain pattern",
            )?;
        }
    }
    for (i, f) in fans.iter().enumerate() {
        check(f.is_nonseparating(tri), "fan curves are non-separating")?;
        for (j, g) in fans.iter().enumerate() {
            if i < j {
                check(curve::intersection_number(tri, f, g) == 0, "fans are disjoint")?;
            }
        }
        for (j, c) in chain.iter().enumerate() {
            let want = if j == 0 || j == 4 { 1 } else { 0 };
            check(
                curve::intersection_number(tri, f, c) == want,
                "fan-chain pattern",
            )?;
        }
    }

    for (i, c) in chain.iter().enumerate() {
        cat.insert(format!("alpha_{}", i + 1), (*c).clone(), &["C", "C0", "Y"]);
    }
    for (i, f) in fans.iter().enumerate() {
        cat.insert(format!("alpha_0^{i}"), f.clone(), &["C", "Cf", "Y"]);
    }

    // Bounding pairs of odd chains meeting the fan at most once.
    build_bounding_pairs(&mut cat, n)?;
    // Determined outer curves delta_i and Delta; the zeta family; the
    // first-type auxiliaries.
    build_determined_aux(&mut cat, n)?;
    Ok(cat)
}

/// All chains of odd length in the catalog's chain-and-fan pattern with at
/// most one fan member, as ordered label lists.
pub fn odd_chains(_cat: &Catalog, n: usize) -> Vec<Vec<String>> {
    // The intersection-one graph on {alpha_1..alpha_5, alpha_0^i} is the
    // 6-cycle (alpha_0^i, alpha_1, .., alpha_5); chains are paths.
    let mut out: Vec<Vec<String>> = Vec::new();
    let pure = |i: usize, j: usize| -> Vec<String> {
        (i..=j).map(|k| format!("alpha_{k}")).collect()
    };
    // Chains inside the five-chain.
    for len in [3usize, 5] {
        for i in 1..=5usize.saturating_sub(len - 1) {
            out.push(pure(i, i + len - 1));
        }
    }
    // Chains through one fan curve: paths of the 6-cycle containing it.
    for f in 0..=n {
        let cyc: Vec<String> = std::iter::once(format!("alpha_0^{f}"))
            .chain((1..=5).map(|k| format!("alpha_{k}")))
            .collect();
        for len in [3usize, 5] {
            for s in 0..6usize {
                let path: Vec<String> =
                    (0..len).map(|t| cyc[(s + t) % 6].clone()).collect();
                if path.iter().any(|l| l.starts_with("alpha_0^"))
                    && path.first().map(|x| x.as_str()) <= path.last().map(|x| x.as_str())
                {
                    if !out.contains(&path) {
                        let rev: Vec<String> = path.iter().rev().cloned().collect();
                        if !out.contains(&rev) {
                            out.push(path);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn chain_label(chain: &[String]) -> String {
    let fwd = chain.join(".");
    let rev: Vec<String> = chain.iter().rev().cloned().collect();
    let bwd = rev.join(".");
    if fwd <= bwd {
        fwd
    } else {
        bwd
    }
}

fn build_bounding_pairs(cat: &mut Catalog, n: usize) -> Result<(), FamilyError> {
    let chains = odd_chains(cat, n);
    let mut inserts: Vec<(String, Curve)> = Vec::new();
    {
        let tri = &cat.tri;
        let alpha2 = cat.get("alpha_2")?.clone();
        let alpha4 = cat.get("alpha_4")?.clone();
        let alpha1 = cat.get("alpha_1")?.clone();
        let alpha3 = cat.get("alpha_3")?.clone();
        let alpha5 = cat.get("alpha_5")?.clone();
        for chain in &chains {
            let curves: Vec<Curve> =
                chain.iter().map(|l| cat.get(l).map(|c| c.clone())).collect::<Result<_, _>>()?;
            let pair = super::regular_neighbourhood_boundary(tri, &curves)?;
            // On small surfaces the neighbourhood of a long chain can fill
            // the surface, leaving fewer than two essential boundary curves.
            if pair.len() < 2 {
                continue;
            }
            check(pair.len() == 2, "odd chain has at most a bounding pair")?;
            for c in &pair {
                check(c.is_nonseparating(tri), "bounding pair curves are non-separating")?;
            }
            // Side assignment: ends on the odd chain curves compare against
            // {alpha_1, alpha_3, alpha_5}; otherwise against {alpha_0^i,
            // alpha_2, alpha_4}, scanning i until the pair separates.
            let odd_set = ["alpha_1", "alpha_3", "alpha_5"];
            let ends_odd = odd_set.contains(&chain.first().unwrap().as_str())
                && odd_set.contains(&chain.last().unwrap().as_str());
            let fan_member = chain.iter().find_map(|l| {
                l.strip_prefix("alpha_0^").map(|s| s.parse::<usize>().unwrap())
            });
            // An element that coincides with a catalog curve bounds both
            // sides; its sign is the opposite of its partner's.
            let decide = |x: &Curve| -> Result<Option<bool>, FamilyError> {
                if ends_odd {
                    let bounding = vec![alpha1.clone(), alpha3.clone(), alpha5.clone()];
                    if bounding.contains(x) {
                        return Ok(None);
                    }
                    let side = super::side_punctures(tri, &bounding, x)?;
                    // Plus side: the non-compact (punctured) subsurface.
                    Ok(Some(!side.is_empty()))
                } else {
                    let scan: Vec<usize> = match fan_member {
                        Some(i) => vec![i],
                        None => (0..=n).collect(),
                    };
                    for i in scan {
                        let bounding = vec![
                            cat.get(&format!("alpha_0^{i}"))?.clone(),
                            alpha2.clone(),
                            alpha4.clone(),
                        ];
                        if bounding.contains(x)
                            || bounding
                                .iter()
                                .any(|b| curve::intersection_number(tri, b, x) != 0)
                        {
                            continue;
                        }
                        let side = super::side_punctures(tri, &bounding, x)?;
                        let plus: Vec<usize> = (0..i).collect();
                        if side == plus && (i > 0 || !side.is_empty()) {
                            return Ok(Some(true));
                        }
                        if side.is_empty() {
                            // Compact piece: the plus side exactly when i = 0.
                            return Ok(Some(i == 0));
                        }
                        let minus: Vec<usize> = (i..n).collect();
                        if side == minus {
                            return Ok(Some(false));
                        }
                    }
                    Ok(None)
                }
            };
            let d0 = decide(&pair[0])?;
            let d1 = decide(&pair[1])?;
            let plus_first = match (d0, d1) {
                (Some(a), Some(b)) => {
                    check(a != b, "pair sides must differ")?;
                    a
                }
                (Some(a), None) => a,
                (None, Some(b)) => !b,
                (None, None) => {
                    return Err(FamilyError::SelfCheck(format!(
                        "cannot orient the bounding pair of {}",
                        chain_label(chain)
                    )))
                }
            };
            let label = chain_label(chain);
            let (p, m) = if plus_first {
                (pair[0].clone(), pair[1].clone())
            } else {
                (pair[1].clone(), pair[0].clone())
            };
            inserts.push((format!("bp+_{label}"), p));
            inserts.push((format!("bp-_{label}"), m));
        }
    }
    for (l, c) in inserts {
        // Distinct chains can share a boundary curve; keep first label.
        if cat.label_of(&c).is_none() {
            cat.insert(l, c, &["B", "Y"]);
        } else {
            cat.insert(l, c, &["Balias"]);
        }
    }
    Ok(())
}

fn build_determined_aux(cat: &mut Catalog, n: usize) -> Result<(), FamilyError> {
    // delta_i = the unique curve disjoint from C minus alpha_0^i (0 < i < n).
    let c_all = cat.family("C");
    let mut deltas: BTreeMap<usize, Curve> = BTreeMap::new();
    for i in 1..n {
        let avoid = cat.get(&format!("alpha_0^{i}"))?.clone();
        let set: Vec<Curve> = c_all.iter().filter(|c| **c != avoid).cloned().collect();
        let d = determined(&cat.tri, &set, &format!("delta_{i}"))?;
        check(d.is_outer(&cat.tri), "delta_i is outer")?;
        deltas.insert(i, d);
    }
    for (i, d) in &deltas {
        cat.insert(format!("delta_{i}"), d.clone(), &["Douter", "E"]);
    }
    // Delta = <C0 u {delta_j}> when it exists as a new curve (n >= 3).
    if n >= 3 {
        let mut set: Vec<Curve> = (1..=5).map(|k| cat.get(&format!("alpha_{k}")).unwrap().clone()).collect();
        for d in deltas.values() {
            set.push(d.clone());
        }
        let dd = determined(&cat.tri, &set, "Delta")?;
        cat.insert("Delta".into(), dd, &["Douter", "E"]);
    }
    // First-type auxiliaries (n >= 2): for k = 2, 4 the unique curve disjoint
    // from the inner fans and the chain minus alpha_k.
    if n >= 2 {
        for k in [2usize, 4] {
            let mut set: Vec<Curve> =
                (1..n).map(|i| cat.get(&format!("alpha_0^{i}")).unwrap().clone()).collect();
            for j in 1..=5 {
                if j != k {
                    set.push(cat.get(&format!("alpha_{j}"))?.clone());
                }
            }
            let v = determined(&cat.tri, &set, &format!("vout_{k}"))?;
            cat.insert(format!("vout_{k}"), v, &["E"]);
        }
    }
    // zeta^i for 0 <= i <= n+1, determined from bounding pairs of the chains
    // {alpha_0^j, alpha_1, alpha_2}.
    let bp = |cat: &Catalog, sign: char, j: usize| -> Result<Curve, FamilyError> {
        let chain = vec![format!("alpha_0^{j}"), "alpha_1".to_string(), "alpha_2".to_string()];
        let label = format!("bp{sign}_{}", chain_label(&chain));
        // The curve may live under an alias label; resolve through either.
        if let Ok(c) = cat.get(&label) {
            return Ok(c.clone());
        }
        Err(FamilyError::SelfCheck(format!("missing bounding pair {label}")))
    };
    let (a1, a3, a4, a5) = (
        cat.get("alpha_1")?.clone(),
        cat.get("alpha_3")?.clone(),
        cat.get("alpha_4")?.clone(),
        cat.get("alpha_5")?.clone(),
    );
    for i in 0..=(n + 1) {
        let mut set: Vec<Curve> = vec![a1.clone(), a3.clone(), a5.clone()];
        if i == 0 {
            for j in 1..=n {
                set.push(bp(cat, '+', j)?);
            }
        } else if i == n + 1 {
            for j in 0..n {
                set.push(bp(cat, '-', j)?);
            }
        } else {
            set.push(a4.clone());
            for j in 0..i {
                set.push(bp(cat, '+', j)?);
            }
            for k in i..=n {
                set.push(bp(cat, '-', k)?);
            }
        }
        let z = determined(&cat.tri, &set, &format!("zeta^{i}"))?;
        cat.insert(format!("zeta^{i}"), z, &["Z"]);
    }
    Ok(())
}

/// Separating-witness construction for genus two: the curve cutting a
/// contiguous block of punctures off on a sphere side, realized as a
/// neighbourhood boundary and certified by a search for a determining set
/// over the catalog.
pub fn separating_witness_g2(
    cat: &Catalog,
    sphere_side: &[usize],
) -> Result<super::SeparatingWitness, FamilyError> {
    let tri = &cat.tri;
    let n = cat.spec().punctures as usize;
    let mut want: Vec<usize> = sphere_side.to_vec();
    want.sort();
    // Candidates: boundaries of neighbourhoods of the chain plus a
    // contiguous set of fans.
    let chain: Vec<Curve> = (1..=5)
        .map(|k| cat.get(&format!("alpha_{k}")).map(Curve::clone))
        .collect::<Result<_, _>>()?;
    let mut target: Option<Curve> = None;
    'search: for lo in 0..=n {
        for hi in lo..=n {
            let mut set = chain.clone();
            for j in lo..=hi {
                set.push(cat.get(&format!("alpha_0^{j}"))?.clone());
            }
            for c in super::regular_neighbourhood_boundary(tri, &set)? {
                if let curve::TopType::SeparatingNonOuter { sides } = c.top_type(tri) {
                    if sides.iter().any(|s| s.genus == 0 && s.punctures == want) {
                        target = Some(c);
                        break 'search;
                    }
                }
            }
        }
    }
    let target = target.ok_or_else(|| {
        FamilyError::UnrealizableType(format!(
            "no separating curve with sphere side {want:?} arises from chain-and-fan neighbourhoods"
        ))
    })?;
    // Witness: the full catalog neighbour set, shrunk.
    let mut pool: Vec<Curve> = cat.family("Y");
    pool.extend(cat.family("Douter"));
    let idx = crate::expansion::search_witness(tri, &target, &pool, 16).ok_or_else(|| {
        FamilyError::SelfCheck("separating curve admits no witness in the catalog".into())
    })?;
    let witness: Vec<Curve> = idx.into_iter().map(|i| pool[i].clone()).collect();
    Ok(super::SeparatingWitness { curve: target, witness })
}

