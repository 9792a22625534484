//! Transversal realization of a curve (and arc) system on the triangulation,
//! reduction to pairwise minimal position, and the complement decomposition.
//!
//! The system is encoded by an ordered list of strand points along every
//! edge; in-triangle pictures are derived from those orders with exact
//! rational geometry (strands are straight chords in the model frame, so
//! two chords cross iff their endpoints interleave). The system is reduced
//! by locating, for one pair of participants at a time, an empty bigon face
//! of that pair's sub-arrangement and sliding one strand across it. Each
//! slide removes exactly one pair of crossings between the chosen pair and
//! never increases any other count, so reduction terminates in pairwise
//! minimal position, where crossing counts realize geometric intersection
//! numbers.

use std::collections::HashMap;

use num::{One, Zero};

use crate::error::CurveError;
use crate::geom::{self, Pt, Q};
use crate::surface::{Corner, EdgeId, SideSlot, Triangulation};
use crate::trace;

/// A participant strand: a closed curve or an arc pinned at two punctures.
#[derive(Debug, Clone)]
pub struct Part {
    /// Exit slots in traversal order; cyclic for curves.
    pub steps: Vec<SideSlot>,
    pub kind: PartKind,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PartKind {
    Curve,
    /// Arc from a puncture to a puncture; `start`/`end` are the corner
    /// sectors holding the terminal segments.
    Arc { start: Corner, end: Corner },
}

impl Part {
    pub fn is_arc(&self) -> bool {
        matches!(self.kind, PartKind::Arc { .. })
    }

    /// Number of in-triangle chords.
    pub fn chord_count(&self) -> usize {
        match self.kind {
            PartKind::Curve => self.steps.len(),
            PartKind::Arc { .. } => self.steps.len() + 1,
        }
    }

    /// The step crossed when leaving chord `c` forwards, if any.
    fn step_after(&self, c: usize) -> Option<usize> {
        match self.kind {
            PartKind::Curve => Some(c),
            PartKind::Arc { .. } => {
                if c < self.steps.len() {
                    Some(c)
                } else {
                    None
                }
            }
        }
    }

    /// The step crossed when leaving chord `c` backwards, if any.
    fn step_before(&self, c: usize) -> Option<usize> {
        let n = self.steps.len();
        match self.kind {
            PartKind::Curve => Some((c + n - 1) % n),
            PartKind::Arc { .. } => c.checked_sub(1),
        }
    }

    /// Triangle and boundary attachments of chord `c`.
    fn chord_ends(&self, tri: &Triangulation, c: usize) -> (ChordEnd, ChordEnd, usize) {
        let n = self.steps.len();
        match &self.kind {
            PartKind::Curve => {
                let prev = (c + n - 1) % n;
                let entry = tri.glue(self.steps[prev]);
                let exit = self.steps[c];
                debug_assert_eq!(entry.triangle(), exit.triangle());
                (
                    ChordEnd::Slot { slot: entry, visit: prev as u32 },
                    ChordEnd::Slot { slot: exit, visit: c as u32 },
                    exit.triangle(),
                )
            }
            PartKind::Arc { start, end } => {
                let from = if c == 0 {
                    ChordEnd::Corner(*start)
                } else {
                    ChordEnd::Slot { slot: tri.glue(self.steps[c - 1]), visit: (c - 1) as u32 }
                };
                let to = if c == n {
                    ChordEnd::Corner(*end)
                } else {
                    ChordEnd::Slot { slot: self.steps[c], visit: c as u32 }
                };
                let t = match to {
                    ChordEnd::Slot { slot, .. } => slot.triangle(),
                    ChordEnd::Corner(cc) => cc.triangle,
                };
                (from, to, t)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ChordEnd {
    Slot { slot: SideSlot, visit: u32 },
    Corner(Corner),
}

/// `(part, visit)` of one crossing point on an edge.
pub type Entry = (u32, u32);

/// A realized strand system.
pub struct Overlay<'t> {
    tri: &'t Triangulation,
    parts: Vec<Part>,
    /// Strand points per edge, ordered along the canonical slot direction.
    orders: Vec<Vec<Entry>>,
    jitter: u64,
}

impl<'t> std::fmt::Debug for Overlay<'t> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Overlay").field("parts", &self.parts.len()).finish()
    }
}

impl<'t> Overlay<'t> {
    pub fn new(tri: &'t Triangulation, curves: &[&[u32]]) -> Result<Self, CurveError> {
        let mut ov = Overlay {
            tri,
            parts: Vec::new(),
            orders: vec![Vec::new(); tri.edge_count()],
            jitter: 0,
        };
        for w in curves {
            ov.push_curve(w)?;
        }
        Ok(ov)
    }

    pub fn tri(&self) -> &'t Triangulation {
        self.tri
    }

    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part(&self, p: u32) -> &Part {
        &self.parts[p as usize]
    }

    /// Appends a single-component curve, stacking its strands after all
    /// existing ones along every edge.
    pub fn push_curve(&mut self, weights: &[u32]) -> Result<u32, CurveError> {
        let comps = trace::trace(self.tri, weights)?;
        if comps.len() != 1 {
            return Err(CurveError::NotASingleCurve { components: comps.len() });
        }
        let comp = &comps[0];
        let id = self.parts.len() as u32;
        // Within-curve order along each edge comes from the canonical-side
        // trace positions, which realize the nested normal picture.
        let mut keyed: Vec<(EdgeId, u32, u32)> = Vec::new();
        for (v, s) in comp.steps.iter().enumerate() {
            let e = self.tri.edge_of(s.slot);
            let w = weights[e];
            let canonical = self.tri.slots_of_edge(e).0;
            let pos = if s.slot == canonical { s.pos } else { w - 1 - s.pos };
            keyed.push((e, pos, v as u32));
        }
        keyed.sort();
        for (e, _pos, v) in keyed {
            self.orders[e].push((id, v));
        }
        self.parts.push(Part { steps: comp.word(), kind: PartKind::Curve });
        Ok(id)
    }

    /// Appends an arc participant. `order_keys[i]` orders the arc's own
    /// strands along shared edges; they must be consistent with an embedded
    /// realization (e.g. positions inherited from a curve the arc parallels).
    pub fn push_arc(
        &mut self,
        steps: Vec<SideSlot>,
        order_keys: &[u32],
        start: Corner,
        end: Corner,
    ) -> u32 {
        assert_eq!(steps.len(), order_keys.len());
        let id = self.parts.len() as u32;
        let mut keyed: Vec<(EdgeId, u32, u32)> = steps
            .iter()
            .enumerate()
            .map(|(v, s)| (self.tri.edge_of(*s), order_keys[v], v as u32))
            .collect();
        keyed.sort();
        for (e, _k, v) in keyed {
            self.orders[e].push((id, v));
        }
        self.parts.push(Part { steps, kind: PartKind::Arc { start, end } });
        id
    }

    /// Crossing count between two participants in the current realization.
    pub fn crossings(&self, x: u32, y: u32) -> usize {
        self.build_arrangement(&[x, y]).pair_crossings(x, y)
    }

    /// Reduces every pair of participants to minimal position.
    pub fn reduce(&mut self) {
        loop {
            let mut moved = false;
            for x in 0..self.parts.len() as u32 {
                for y in (x + 1)..self.parts.len() as u32 {
                    while let Some(mv) = self.find_pair_bigon(x, y) {
                        self.apply_move(&mv);
                        moved = true;
                    }
                }
            }
            if !moved {
                return;
            }
        }
    }

    /// True when no pair of participants bounds an empty bigon.
    pub fn is_bigon_free(&self) -> bool {
        for x in 0..self.parts.len() as u32 {
            for y in (x + 1)..self.parts.len() as u32 {
                if self.find_pair_bigon(x, y).is_some() {
                    return false;
                }
            }
        }
        true
    }

    fn find_pair_bigon(&self, x: u32, y: u32) -> Option<BigonMove> {
        if self.parts[x as usize].steps.is_empty() || self.parts[y as usize].steps.is_empty() {
            return None;
        }
        let arr = self.build_arrangement(&[x, y]);
        let pieces = arr.assemble_pieces(self.tri);
        for piece in &pieces {
            if piece.chi != 1 || !piece.punctures.is_empty() || piece.circuits.len() != 1 {
                continue;
            }
            let circ = &piece.circuits[0];
            if circ.open {
                continue;
            }
            let runs = circuit_runs(self.tri, &self.parts, circ);
            if runs.len() != 2 || runs[0].part == runs[1].part {
                continue;
            }
            let (xr, yr) = match (
                runs.iter().find(|r| r.part == x),
                runs.iter().find(|r| r.part == y),
            ) {
                (Some(a), Some(b)) => (a, b),
                _ => continue,
            };
            let k = xr.jumps.len();
            if k == 0 || yr.jumps.len() != k {
                debug_assert!(k > 0, "bigon without edge crossings");
                continue;
            }
            let mut pairs = Vec::with_capacity(k);
            for i in 0..k {
                let (ex, vx) = xr.jumps[i];
                let (ey, vy) = yr.jumps[k - 1 - i];
                debug_assert_eq!(ex, ey, "bigon sides cross different edges");
                pairs.push((ex, (x, vx), (y, vy)));
            }
            return Some(BigonMove { x, y, pairs });
        }
        None
    }

    fn apply_move(&mut self, mv: &BigonMove) {
        let before = self.crossings(mv.x, mv.y);
        for &(e, xe, ye) in &mv.pairs {
            let ord = &mut self.orders[e];
            let ix = ord.iter().position(|&q| q == xe).expect("x strand on edge");
            let iy = ord.iter().position(|&q| q == ye).expect("y strand on edge");
            let item = ord.remove(ix);
            let iy_now = if ix < iy { iy - 1 } else { iy };
            if ix < iy {
                ord.insert(iy_now + 1, item);
            } else {
                ord.insert(iy_now, item);
            }
        }
        let after = self.crossings(mv.x, mv.y);
        assert_eq!(after + 2, before, "bigon slide must remove one crossing pair");
    }

    /// Full complement decomposition of the realized system.
    pub fn pieces(&self) -> Vec<Piece> {
        let all: Vec<u32> = (0..self.parts.len() as u32).collect();
        self.build_arrangement(&all).assemble_pieces(self.tri)
    }

    /// All pairwise crossing counts.
    pub fn crossing_matrix(&self) -> Vec<Vec<usize>> {
        let all: Vec<u32> = (0..self.parts.len() as u32).collect();
        let arr = self.build_arrangement(&all);
        let n = self.parts.len();
        let mut m = vec![vec![0usize; n]; n];
        for t in &arr.tris {
            for c in &t.crossings {
                m[c.a_part as usize][c.b_part as usize] += 1;
                m[c.b_part as usize][c.a_part as usize] += 1;
            }
        }
        m
    }

    /// Crossings of participant `other` as seen along participant `along`,
    /// sorted by position along `along`.
    pub fn crossings_along(&self, along: u32, other: u32) -> Vec<CrossingOnPart> {
        let arr = self.build_arrangement(&[along, other]);
        let mut out = Vec::new();
        for t in &arr.tris {
            for c in &t.crossings {
                if c.a_part == along && c.b_part == other {
                    out.push(CrossingOnPart {
                        chord: c.a_chord,
                        param: c.a_t.clone(),
                        other_chord: c.b_chord,
                        sign: c.sign_ab,
                    });
                } else if c.b_part == along && c.a_part == other {
                    out.push(CrossingOnPart {
                        chord: c.b_chord,
                        param: c.b_t.clone(),
                        other_chord: c.a_chord,
                        sign: -c.sign_ab,
                    });
                }
            }
        }
        out.sort_by(|p, q| p.chord.cmp(&q.chord).then(p.param.cmp(&q.param)));
        out
    }

    fn build_arrangement(&self, parts: &[u32]) -> Arrangement {
        let mut jitter = self.jitter;
        for attempt in 0..64u64 {
            match self.try_build(parts, jitter) {
                Ok(a) => return a,
                Err(()) => {
                    jitter = jitter
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407 + attempt)
                }
            }
        }
        panic!("could not reach a non-degenerate strand arrangement");
    }

    fn try_build(&self, parts: &[u32], jitter: u64) -> Result<Arrangement, ()> {
        let tri = self.tri;
        let mut index_on_edge: HashMap<Entry, usize> = HashMap::new();
        let mut filtered: Vec<Vec<Entry>> = vec![Vec::new(); tri.edge_count()];
        for e in 0..tri.edge_count() {
            for &entry in &self.orders[e] {
                if parts.contains(&entry.0) {
                    index_on_edge.insert(entry, filtered[e].len());
                    filtered[e].push(entry);
                }
            }
        }
        let param = |e: EdgeId, i: usize| -> Q {
            let m = filtered[e].len() as i128;
            let h = splitmix(jitter ^ ((e as u64) << 32) ^ i as u64);
            let wobble = (h % 997) as i128 + 1;
            Q::new((i as i128 + 1) * 2000 + wobble, (m + 1) * 2000)
        };
        // Arc endpoints are realized at interior posts just inside their
        // corner, closer to it than any strand cutting the corner, so the
        // virtual continuation post -> puncture crosses nothing.
        let max_entries = filtered.iter().map(|v| v.len()).max().unwrap_or(0) as i128;
        let post_of = |c: Corner| -> Pt {
            let h = splitmix(jitter ^ 0xa5c0_13e5 ^ ((c.triangle as u64) << 8) ^ c.corner as u64);
            let delta = Q::new(1000 + (h % 997) as i128, (max_entries + 2) * 2_000_000);
            let cp = geom::corner_pt(c.corner);
            let centroid = Pt::new(Q::new(1, 3), Q::new(1, 3));
            Pt::new(
                cp.x.clone() + delta.clone() * (centroid.x - cp.x),
                cp.y.clone() + delta * (centroid.y - cp.y),
            )
        };
        let point_of = |slot: SideSlot, entry: Entry| -> Pt {
            let e = tri.edge_of(slot);
            let i = index_on_edge[&entry];
            let canonical = tri.slots_of_edge(e).0;
            let u = if slot == canonical { param(e, i) } else { Q::one() - param(e, i) };
            geom::side_pt(slot.side(), u)
        };

        let mut tris: Vec<TriArrangement> =
            (0..tri.triangle_count()).map(TriArrangement::new).collect();
        for e in 0..tri.edge_count() {
            let (s0, s1) = tri.slots_of_edge(e);
            for slot in [s0, s1] {
                let m = filtered[e].len();
                let mut pts: Vec<(Q, Entry)> = (0..m)
                    .map(|i| {
                        let u = if slot == s0 { param(e, i) } else { Q::one() - param(e, i) };
                        (u, filtered[e][i])
                    })
                    .collect();
                pts.sort_by(|a, b| a.0.cmp(&b.0));
                tris[slot.triangle()].side_points[slot.side()] = pts;
            }
        }
        for &p in parts {
            let part = &self.parts[p as usize];
            for c in 0..part.chord_count() {
                let (a, b, t) = part.chord_ends(tri, c);
                let pa = match a {
                    ChordEnd::Slot { slot, visit } => point_of(slot, (p, visit)),
                    ChordEnd::Corner(cc) => post_of(cc),
                };
                let pb = match b {
                    ChordEnd::Slot { slot, visit } => point_of(slot, (p, visit)),
                    ChordEnd::Corner(cc) => post_of(cc),
                };
                tris[t].chords.push(Chord {
                    part: p,
                    chord: c as u32,
                    from: pa,
                    to: pb,
                    from_is_post: matches!(a, ChordEnd::Corner(_)),
                    to_is_post: matches!(b, ChordEnd::Corner(_)),
                });
            }
        }
        for ta in tris.iter_mut() {
            ta.build()?;
        }
        Ok(Arrangement { tris })
    }
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

struct BigonMove {
    x: u32,
    y: u32,
    /// `(edge, x entry, y entry)` per crossed edge of the bigon.
    pairs: Vec<(EdgeId, Entry, Entry)>,
}

/// One crossing as seen from a distinguished participant.
#[derive(Debug, Clone)]
pub struct CrossingOnPart {
    /// Chord index along the distinguished participant.
    pub chord: u32,
    /// Exact parameter of the crossing along that chord.
    pub param: Q,
    pub other_chord: u32,
    /// Sign of `cross(d_along, d_other)` in the oriented model frame.
    pub sign: i8,
}

#[derive(Debug, Clone)]
struct Chord {
    part: u32,
    chord: u32,
    from: Pt,
    to: Pt,
    from_is_post: bool,
    to_is_post: bool,
}

#[derive(Debug, Clone)]
struct CrossingRec {
    a_part: u32,
    a_chord: u32,
    a_t: Q,
    b_part: u32,
    b_chord: u32,
    b_t: Q,
    sign_ab: i8,
    pt: Pt,
}

/// The planar subdivision of one triangle by its strand chords.
struct TriArrangement {
    /// Boundary strand points per side, in side direction: `(param, entry)`.
    side_points: [Vec<(Q, Entry)>; 3],
    chords: Vec<Chord>,
    crossings: Vec<CrossingRec>,
    verts: Vec<Pt>,
    /// `(v_from, v_to, label)`; darts are `2*i` (forward) and `2*i+1`.
    gedges: Vec<(usize, usize, GEdge)>,
    face_of_dart: Vec<usize>,
    faces: Vec<Vec<usize>>,
    inner: Vec<bool>,
    corner_verts: [usize; 3],
    /// `side_dart[side][seg]`: inner dart of each side sub-segment.
    side_dart: [Vec<usize>; 3],
    /// Walk position of every dart inside its face.
    pos_in_face: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum GEdge {
    Side { side: usize, seg: usize },
    ChordSeg { idx: usize, at_post: bool },
}

impl TriArrangement {
    fn new(_t: usize) -> Self {
        TriArrangement {
            side_points: [Vec::new(), Vec::new(), Vec::new()],
            chords: Vec::new(),
            crossings: Vec::new(),
            verts: Vec::new(),
            gedges: Vec::new(),
            face_of_dart: Vec::new(),
            faces: Vec::new(),
            inner: Vec::new(),
            corner_verts: [0, 1, 2],
            side_dart: [Vec::new(), Vec::new(), Vec::new()],
            pos_in_face: Vec::new(),
        }
    }

    fn build(&mut self) -> Result<(), ()> {
        let nch = self.chords.len();
        let mut per_chord: Vec<Vec<(Q, usize)>> = vec![Vec::new(); nch];
        for i in 0..nch {
            for j in (i + 1)..nch {
                let (ci, cj) = (&self.chords[i], &self.chords[j]);
                if let Some(pt) =
                    geom::segment_intersection(&ci.from, &ci.to, &cj.from, &cj.to)?
                {
                    if ci.part == cj.part {
                        // Strands of one participant must stay nested.
                        return Err(());
                    }
                    let di = ci.to.sub(&ci.from);
                    let dj = cj.to.sub(&cj.from);
                    let ti = chord_param(ci, &pt);
                    let tj = chord_param(cj, &pt);
                    per_chord[i].push((ti.clone(), self.crossings.len()));
                    per_chord[j].push((tj.clone(), self.crossings.len()));
                    self.crossings.push(CrossingRec {
                        a_part: ci.part,
                        a_chord: ci.chord,
                        a_t: ti,
                        b_part: cj.part,
                        b_chord: cj.chord,
                        b_t: tj,
                        sign_ab: geom::sign(&geom::cross(&di, &dj)),
                        pt,
                    });
                }
            }
        }
        {
            let mut seen: HashMap<Pt, ()> = HashMap::new();
            for c in &self.crossings {
                if seen.insert(c.pt.clone(), ()).is_some() {
                    return Err(());
                }
            }
        }
        let mut vid: HashMap<Pt, usize> = HashMap::new();
        let mut verts: Vec<Pt> = Vec::new();
        let intern = |p: Pt, verts: &mut Vec<Pt>, vid: &mut HashMap<Pt, usize>| -> usize {
            *vid.entry(p.clone()).or_insert_with(|| {
                verts.push(p);
                verts.len() - 1
            })
        };
        for k in 0..3 {
            let v = intern(geom::corner_pt(k), &mut verts, &mut vid);
            self.corner_verts[k] = v;
        }
        let mut gedges: Vec<(usize, usize, GEdge)> = Vec::new();
        let mut side_dart: [Vec<usize>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for k in 0..3 {
            let mut pts = vec![geom::corner_pt(k)];
            pts.extend(self.side_points[k].iter().map(|(u, _)| geom::side_pt(k, u.clone())));
            pts.push(geom::corner_pt((k + 1) % 3));
            for (seg, w) in pts.windows(2).enumerate() {
                let a = intern(w[0].clone(), &mut verts, &mut vid);
                let b = intern(w[1].clone(), &mut verts, &mut vid);
                side_dart[k].push(2 * gedges.len()); // fixed up after faces are known
                gedges.push((a, b, GEdge::Side { side: k, seg }));
            }
        }
        for (i, _) in self.chords.iter().enumerate() {
            let ch = &self.chords[i];
            let mut cuts = per_chord[i].clone();
            cuts.sort_by(|a, b| a.0.cmp(&b.0));
            let mut pts = vec![ch.from.clone()];
            for (_, ci) in &cuts {
                pts.push(self.crossings[*ci].pt.clone());
            }
            pts.push(ch.to.clone());
            let nseg = pts.len() - 1;
            for (piece, w) in pts.windows(2).enumerate() {
                let a = intern(w[0].clone(), &mut verts, &mut vid);
                let b = intern(w[1].clone(), &mut verts, &mut vid);
                if a == b {
                    return Err(());
                }
                let at_post =
                    (piece == 0 && ch.from_is_post) || (piece == nseg - 1 && ch.to_is_post);
                gedges.push((a, b, GEdge::ChordSeg { idx: i, at_post }));
            }
        }
        let dart_count = 2 * gedges.len();
        let dart_from = |d: usize| if d % 2 == 0 { gedges[d / 2].0 } else { gedges[d / 2].1 };
        let dart_to = |d: usize| if d % 2 == 0 { gedges[d / 2].1 } else { gedges[d / 2].0 };
        let mut out_darts: Vec<Vec<usize>> = vec![Vec::new(); verts.len()];
        for d in 0..dart_count {
            out_darts[dart_from(d)].push(d);
        }
        for v in 0..verts.len() {
            let vp = verts[v].clone();
            out_darts[v].sort_by(|&d1, &d2| {
                let u = verts[dart_to(d1)].sub(&vp);
                let w = verts[dart_to(d2)].sub(&vp);
                geom::compare_directions(&u, &w)
            });
            for pair in out_darts[v].windows(2) {
                let u = verts[dart_to(pair[0])].sub(&vp);
                let w = verts[dart_to(pair[1])].sub(&vp);
                if geom::compare_directions(&u, &w) == std::cmp::Ordering::Equal {
                    return Err(());
                }
            }
        }
        let mut pos_at_vertex: HashMap<usize, usize> = HashMap::new();
        for ring in out_darts.iter() {
            for (i, &d) in ring.iter().enumerate() {
                pos_at_vertex.insert(d, i);
            }
        }
        // Interior to the left: continue with the dart clockwise from the twin.
        let next_dart = |d: usize| -> usize {
            let twin = d ^ 1;
            let v = dart_from(twin);
            let i = pos_at_vertex[&twin];
            let ring = &out_darts[v];
            ring[(i + ring.len() - 1) % ring.len()]
        };
        let mut face_of_dart = vec![usize::MAX; dart_count];
        let mut pos_in_face = vec![usize::MAX; dart_count];
        let mut faces: Vec<Vec<usize>> = Vec::new();
        for d0 in 0..dart_count {
            if face_of_dart[d0] != usize::MAX {
                continue;
            }
            let f = faces.len();
            let mut walk = Vec::new();
            let mut d = d0;
            loop {
                face_of_dart[d] = f;
                pos_in_face[d] = walk.len();
                walk.push(d);
                d = next_dart(d);
                if d == d0 {
                    break;
                }
            }
            faces.push(walk);
        }
        let mut inner = Vec::with_capacity(faces.len());
        for walk in &faces {
            let mut area2 = Q::zero();
            for &d in walk {
                let a = &verts[dart_from(d)];
                let b = &verts[dart_to(d)];
                area2 = area2 + geom::cross(a, b);
            }
            inner.push(geom::sign(&area2) > 0);
        }
        if inner.iter().filter(|&&b| !b).count() != 1 {
            return Err(());
        }
        // Fix up side darts to point at the inner direction.
        for k in 0..3 {
            for d in side_dart[k].iter_mut() {
                if !inner[face_of_dart[*d]] {
                    *d ^= 1;
                }
                debug_assert!(inner[face_of_dart[*d]]);
            }
        }
        self.verts = verts;
        self.gedges = gedges;
        self.face_of_dart = face_of_dart;
        self.pos_in_face = pos_in_face;
        self.faces = faces;
        self.inner = inner;
        self.side_dart = side_dart;
        Ok(())
    }

    fn pair_crossing_count(&self, x: u32, y: u32) -> usize {
        self.crossings
            .iter()
            .filter(|c| (c.a_part == x && c.b_part == y) || (c.a_part == y && c.b_part == x))
            .count()
    }
}

fn chord_param(ch: &Chord, pt: &Pt) -> Q {
    let d = ch.to.sub(&ch.from);
    if !d.x.is_zero() {
        (pt.x.clone() - ch.from.x.clone()) / d.x
    } else {
        (pt.y.clone() - ch.from.y.clone()) / d.y
    }
}

/// Global arrangement: one planar subdivision per triangle.
pub struct Arrangement {
    tris: Vec<TriArrangement>,
}

/// A strand side met on a piece-boundary walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CircuitDart {
    pub part: u32,
    pub chord: u32,
    /// True when the walk runs against the chord's own direction.
    pub reversed: bool,
    pub terminal: bool,
}

/// One boundary circuit of a complement piece: darts interleaved with the
/// edge crossings of a parallel pushoff.
#[derive(Debug, Clone)]
pub enum CircuitItem {
    Dart(CircuitDart),
    /// The walk crosses a triangulation edge, leaving through this slot.
    Jump(SideSlot),
}

#[derive(Debug, Clone)]
pub struct Circuit {
    pub items: Vec<CircuitItem>,
    /// True when the walk traverses an arc-terminal strand (so it is not a
    /// closed curve in the punctured surface).
    pub open: bool,
}

impl Circuit {
    pub fn darts(&self) -> impl Iterator<Item = &CircuitDart> {
        self.items.iter().filter_map(|i| match i {
            CircuitItem::Dart(d) => Some(d),
            _ => None,
        })
    }

    pub fn pushoff_word(&self) -> Vec<SideSlot> {
        self.items
            .iter()
            .filter_map(|i| match i {
                CircuitItem::Jump(s) => Some(*s),
                _ => None,
            })
            .collect()
    }
}

/// A maximal run of consecutive circuit darts on one participant.
#[derive(Debug, Clone)]
pub struct Run {
    pub part: u32,
    /// `(edge, visit)` for every edge crossing inside the run, in walk order.
    pub jumps: Vec<(EdgeId, u32)>,
}

/// A connected component of the complement of the strand system.
#[derive(Debug, Clone)]
pub struct Piece {
    pub chi: i64,
    pub genus: u32,
    pub punctures: Vec<usize>,
    pub circuits: Vec<Circuit>,
}

impl Piece {
    pub fn boundary_count(&self) -> usize {
        self.circuits.len()
    }
    pub fn puncture_count(&self) -> usize {
        self.punctures.len()
    }
    /// `3g - 3 + (b + p)`: positive iff the piece supports an essential
    /// non-peripheral curve.
    pub fn interior_complexity(&self) -> i64 {
        3 * self.genus as i64 - 3 + (self.circuits.len() + self.punctures.len()) as i64
    }
}

impl Arrangement {
    fn pair_crossings(&self, x: u32, y: u32) -> usize {
        self.tris.iter().map(|t| t.pair_crossing_count(x, y)).sum()
    }

    fn assemble_pieces(&self, tri: &Triangulation) -> Vec<Piece> {
        let mut face_base = vec![0usize; self.tris.len()];
        let mut total_faces = 0usize;
        for (t, ta) in self.tris.iter().enumerate() {
            face_base[t] = total_faces;
            total_faces += ta.faces.len();
        }
        let gface = |t: usize, f: usize| face_base[t] + f;
        let mut uf = UnionFind::new(total_faces);
        for e in 0..tri.edge_count() {
            let (s0, s1) = tri.slots_of_edge(e);
            let (t0, k0) = (s0.triangle(), s0.side());
            let (t1, k1) = (s1.triangle(), s1.side());
            let m = self.tris[t0].side_points[k0].len();
            debug_assert_eq!(m, self.tris[t1].side_points[k1].len());
            for j in 0..=m {
                let d0 = self.tris[t0].side_dart[k0][j];
                let d1 = self.tris[t1].side_dart[k1][m - j];
                let f0 = gface(t0, self.tris[t0].face_of_dart[d0]);
                let f1 = gface(t1, self.tris[t1].face_of_dart[d1]);
                uf.union(f0, f1);
            }
        }
        let mut piece_of_root: HashMap<usize, usize> = HashMap::new();
        let mut pieces: Vec<Piece> = Vec::new();
        let mut piece_of_face = vec![usize::MAX; total_faces];
        for (t, ta) in self.tris.iter().enumerate() {
            for f in 0..ta.faces.len() {
                if !ta.inner[f] {
                    continue;
                }
                let root = uf.find(gface(t, f));
                let id = *piece_of_root.entry(root).or_insert_with(|| {
                    pieces.push(Piece {
                        chi: 0,
                        genus: 0,
                        punctures: Vec::new(),
                        circuits: Vec::new(),
                    });
                    pieces.len() - 1
                });
                piece_of_face[gface(t, f)] = id;
                pieces[id].chi += 1;
            }
        }
        for e in 0..tri.edge_count() {
            let (s0, _) = tri.slots_of_edge(e);
            let (t0, k0) = (s0.triangle(), s0.side());
            let m = self.tris[t0].side_points[k0].len();
            for j in 0..=m {
                let d0 = self.tris[t0].side_dart[k0][j];
                let f0 = gface(t0, self.tris[t0].face_of_dart[d0]);
                pieces[piece_of_face[f0]].chi -= 1;
            }
        }
        for p in 0..tri.spec().punctures as usize {
            let mut owner: Option<usize> = None;
            for c in tri.corner_cycle(p) {
                let ta = &self.tris[c.triangle];
                let cv = ta.corner_verts[c.corner];
                for (ge, (a, b, _)) in ta.gedges.iter().enumerate() {
                    for d in [2 * ge, 2 * ge + 1] {
                        let from = if d % 2 == 0 { *a } else { *b };
                        if from != cv {
                            continue;
                        }
                        let f = ta.face_of_dart[d];
                        if !ta.inner[f] {
                            continue;
                        }
                        let id = piece_of_face[gface(c.triangle, f)];
                        match owner {
                            None => owner = Some(id),
                            Some(o) => {
                                debug_assert_eq!(o, id, "puncture {p} touches two pieces")
                            }
                        }
                    }
                }
            }
            let id = owner.expect("puncture has an incident face");
            pieces[id].punctures.push(p);
        }
        self.walk_circuits(tri, &mut pieces, &piece_of_face, &face_base);
        for piece in &mut pieces {
            if piece.circuits.iter().any(|c| c.open) {
                continue;
            }
            let b = piece.circuits.len() as i64;
            let p = piece.punctures.len() as i64;
            let g2 = 2 - b - p - piece.chi;
            debug_assert!(
                g2 >= 0 && g2 % 2 == 0,
                "bad piece genus: chi={} b={b} p={p}",
                piece.chi
            );
            piece.genus = (g2 / 2) as u32;
        }
        pieces
    }

    fn walk_circuits(
        &self,
        tri: &Triangulation,
        pieces: &mut [Piece],
        piece_of_face: &[usize],
        face_base: &[usize],
    ) {
        let mut dart_base = vec![0usize; self.tris.len()];
        let mut total = 0usize;
        for (t, ta) in self.tris.iter().enumerate() {
            dart_base[t] = total;
            total += 2 * ta.gedges.len();
        }
        let gd = |t: usize, d: usize| dart_base[t] + d;
        let mut visited = vec![false; total];
        for t0 in 0..self.tris.len() {
            let nd0 = 2 * self.tris[t0].gedges.len();
            for d0 in 0..nd0 {
                let ta0 = &self.tris[t0];
                if visited[gd(t0, d0)]
                    || !matches!(ta0.gedges[d0 / 2].2, GEdge::ChordSeg { .. })
                    || !ta0.inner[ta0.face_of_dart[d0]]
                {
                    continue;
                }
                let piece = piece_of_face[face_base[t0] + ta0.face_of_dart[d0]];
                let mut items: Vec<CircuitItem> = Vec::new();
                let mut open = false;
                let (mut t, mut d) = (t0, d0);
                loop {
                    if visited[gd(t, d)] {
                        break;
                    }
                    visited[gd(t, d)] = true;
                    let ta = &self.tris[t];
                    let (idx, at_post) = match ta.gedges[d / 2].2 {
                        GEdge::ChordSeg { idx, at_post } => (idx, at_post),
                        GEdge::Side { .. } => unreachable!(),
                    };
                    let ch = &ta.chords[idx];
                    if at_post {
                        open = true;
                    }
                    items.push(CircuitItem::Dart(CircuitDart {
                        part: ch.part,
                        chord: ch.chord,
                        reversed: d % 2 == 1,
                        terminal: at_post,
                    }));
                    // Advance to the next chord dart of the walk, jumping
                    // across glued side segments.
                    let (mut ct, mut cur) = (t, d);
                    'adv: loop {
                        let ta = &self.tris[ct];
                        let f = ta.face_of_dart[cur];
                        let i = ta.pos_in_face[cur];
                        let walk = &ta.faces[f];
                        let nd = walk[(i + 1) % walk.len()];
                        match ta.gedges[nd / 2].2 {
                            GEdge::ChordSeg { .. } => {
                                t = ct;
                                d = nd;
                                break 'adv;
                            }
                            GEdge::Side { side, seg } => {
                                let slot = SideSlot::new(ct, side);
                                let other = tri.glue(slot);
                                let m = ta.side_points[side].len();
                                items.push(CircuitItem::Jump(slot));
                                let od =
                                    self.tris[other.triangle()].side_dart[other.side()][m - seg];
                                ct = other.triangle();
                                cur = od;
                            }
                        }
                    }
                }
                pieces[piece].circuits.push(Circuit { items, open });
            }
        }
    }
}

/// Groups a closed circuit into maximal per-participant runs, attributing
/// each jump to the visit of the dart it follows.
pub fn circuit_runs(tri: &Triangulation, parts: &[Part], circ: &Circuit) -> Vec<Run> {
    let items = &circ.items;
    let n = items.len();
    let dart_at = |i: usize| match &items[i] {
        CircuitItem::Dart(d) => Some(*d),
        _ => None,
    };
    let dart_positions: Vec<usize> = (0..n).filter(|&i| dart_at(i).is_some()).collect();
    if dart_positions.is_empty() {
        return Vec::new();
    }
    let part_of: Vec<u32> = dart_positions.iter().map(|&i| dart_at(i).unwrap().part).collect();
    let k = dart_positions.len();
    let single = part_of.iter().all(|&p| p == part_of[0]);
    let start = if single {
        0
    } else {
        (0..k).find(|&i| part_of[(i + k - 1) % k] != part_of[i]).unwrap()
    };
    let mut runs: Vec<Run> = Vec::new();
    let mut i = 0;
    while i < k {
        let di = (start + i) % k;
        let part = part_of[di];
        let mut run = Run { part, jumps: Vec::new() };
        while i < k && part_of[(start + i) % k] == part {
            let di = (start + i) % k;
            let dart = dart_at(dart_positions[di]).unwrap();
            let next_di = (di + 1) % k;
            // Jumps in the gap after this dart stay inside the run exactly
            // when the next dart continues the same participant.
            if part_of[next_di] == part {
                let gap_start = dart_positions[di] + 1;
                let gap_end = if dart_positions[next_di] > dart_positions[di] {
                    dart_positions[next_di]
                } else {
                    n + dart_positions[next_di]
                };
                for j in gap_start..gap_end {
                    if let CircuitItem::Jump(slot) = &items[j % n] {
                        let p = &parts[dart.part as usize];
                        let visit = if !dart.reversed {
                            p.step_after(dart.chord as usize)
                        } else {
                            p.step_before(dart.chord as usize)
                        }
                        .expect("jump beyond an arc end");
                        run.jumps.push((tri.edge_of(*slot), visit as u32));
                    }
                }
            }
            i += 1;
        }
        runs.push(run);
    }
    runs
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{build_base_triangulation, SurfaceSpec};

    fn tri(g: u32, n: u32) -> Triangulation {
        build_base_triangulation(SurfaceSpec::new(g, n).unwrap()).unwrap()
    }

    #[test]
    fn single_link_overlay_pieces() {
        let t = tri(0, 5);
        let w = t.vertex_link_weights(0);
        let ov = Overlay::new(&t, &[&w]).unwrap();
        let pieces = ov.pieces();
        // A puncture link cuts off a once-punctured disk.
        assert_eq!(pieces.len(), 2);
        let mut sig: Vec<(u32, usize, usize)> = pieces
            .iter()
            .map(|p| (p.genus, p.boundary_count(), p.puncture_count()))
            .collect();
        sig.sort();
        assert_eq!(sig, vec![(0, 1, 1), (0, 1, 4)]);
    }

    #[test]
    fn chi_conservation() {
        for (g, n) in [(0, 5), (1, 3), (2, 1)] {
            let t = tri(g, n);
            let w0 = t.vertex_link_weights(0);
            let ov = Overlay::new(&t, &[&w0]).unwrap();
            let total: i64 = ov.pieces().iter().map(|p| p.chi).sum();
            assert_eq!(total, t.spec().euler_characteristic());
        }
    }

    #[test]
    fn two_disjoint_links_reduce_to_no_crossings() {
        let t = tri(0, 5);
        let w0 = t.vertex_link_weights(0);
        let w2 = t.vertex_link_weights(2);
        let mut ov = Overlay::new(&t, &[&w0, &w2]).unwrap();
        ov.reduce();
        assert_eq!(ov.crossings(0, 1), 0);
        assert!(ov.is_bigon_free());
    }

    #[test]
    fn adjacent_links_reduce_to_no_crossings() {
        // Links of adjacent punctures share edges but are disjoint curves.
        let t = tri(0, 5);
        let w0 = t.vertex_link_weights(0);
        let w1 = t.vertex_link_weights(1);
        let mut ov = Overlay::new(&t, &[&w0, &w1]).unwrap();
        ov.reduce();
        assert_eq!(ov.crossings(0, 1), 0);
    }
}
