//! Builders for the named graphs and colorings: the 3-cube and its prisms,
//! the truncated square tiling, the unfolded and exchanged fixtures, and
//! the pierced sequences `Γ_g` and `G_{2g+1}`.
//!
//! Every builder validates what it advertises before returning; a failed
//! check surfaces as an error instead of a silently repaired instance.
//! Vertex names follow the subscripted notation (`u_3`, `z_9`, ...) for the
//! pierced families and grid coordinates `(x,y)` for cutout families.

use std::collections::BTreeMap;

use crate::coloring::{
    are_orthogonal, is_etgc, is_own_color_matching, is_stc, AlternatingPath, Color, TotalAssignment,
};
use crate::error::{Error, Result};
use crate::graph::{CubicGraph, VertexId};
use crate::maps::{CombinatorialMap, Cutout, Identification, Realized, ZonogonCutout};
use crate::ops::{exchange_cutout, extend, spray_propagate, unfold, Axis, LadderColors, SprayOutcome, SpraySeed};

pub const OCT_LEFT: &str = "
    0 3 1 0 2 1 3 2 0
    1 2 3 0 1
    2 0 3 1 0 2 1 3 2";

pub const OCT_RIGHT: &str = "
    0 2 1 3 2 0 3 1 0
    3 0 1 2 3
    2 1 3 2 0 3 1 0 2";

/// The square whose vertical sides are dropped by the oct3 unfolding has
/// its lower-left corner at `(2, 0)`.
pub const OCT3_LEFT: &str = "
    1 0 2 1 3 2 0 3 1
    2 3 0 1 2
    3 1 0 2 1 3 2 0 3";

pub const TESS_LEFT: &str = "
    0 1 2 0 3 . 1 3 0
    . . 2 2 .
    2 1 0 3 1 . 3 0 2
    3 2 0 1 3
    1 . 3 1 2 3 0 2 1
    0 0 . . 0
    3 . 1 2 0 3 2 1 3
    2 3 1 0 2
    0 1 2 0 3 . 1 3 0";

pub const TESS_RIGHT: &str = "
    0 1 2 0 3 2 1 3 0 . 2 0 3 2 1 3 0
    . . . . 1 1 . . .
    2 1 0 3 1 2 3 0 2 . 0 3 1 2 3 0 2
    3 2 0 1 3 2 0 1 3
    1 . 3 1 2 3 0 2 1 0 3 1 2 3 0 2 1
    0 0 . . . . . . 0
    3 . 1 2 0 3 2 1 3 0 1 2 0 3 2 1 3
    2 3 1 0 2 3 1 0 2
    0 1 2 0 3 2 1 3 0 . 2 0 3 2 1 3 0";

/// The 16-vertex component occupying the four leftmost columns of the
/// middle octaedro cutout, read as a ycutout. Both bottom verticals carry
/// color 0, the only value a total coloring allows there.
pub const OCTAEDRO_MIDDLE: &str = "
    1 2 0 3 2 1 3
    3 1 0 2
    2 0 3 . 1 3 0
    1 2 2 1
    0 3 1 . 3 0 2
    2 0 1 3
    3 1 2 3 0 2 1
    0 . . 0
    1 2 0 3 2 1 3";

/// Corners `(A0, A1, B1, B0)` of the square on the glued left border of
/// the tess bicutout, used for the exchange that produces the octaedro
/// middle graph.
pub const TESS_EXCHANGE_SITE: [(i64, i64); 4] = [(0, 4), (1, 4), (1, 3), (0, 3)];

/// Exchange sites turning two stacked tess copies into the tess right
/// bicutout, in application order.
pub const TESS_RIGHT_SITES: [[(i64, i64); 4]; 4] = [
    [(4, 4), (5, 4), (5, 3), (4, 3)],
    [(2, 4), (2, 3), (3, 3), (3, 4)],
    [(6, 4), (6, 3), (7, 3), (7, 4)],
    [(4, 2), (4, 1), (5, 1), (5, 2)],
];

/// Stand-in for the self-amalgam example: a toroidal bicutout of girth 4
/// whose belts all have length divisible by 4, with no ETC, and whose two
/// planar readings both fail 3-edge-connectivity. Uncolored.
pub const KLEIN_RECONSTRUCTED: &str = "
    * . * - * . * - *
    | | | | |
    * - * . * - * - *
    . | | . .
    * - * . * - * - *
    | | | | |
    * . * - * . * - *
    | | | | |
    * . * - * . * - *";

#[derive(Debug, Clone)]
pub struct NamedFamilyInstance {
    pub family: String,
    pub parameter: usize,
    pub graph: CubicGraph,
    pub map: Option<CombinatorialMap>,
    pub cutout: Option<Cutout>,
    pub zonogon: Option<ZonogonCutout>,
    pub assignment: TotalAssignment,
    /// Second assignment with the same vertex colors, where one exists.
    pub partner: Option<TotalAssignment>,
    pub name_table: BTreeMap<String, VertexId>,
    pub metadata: Vec<String>,
}

impl NamedFamilyInstance {
    pub fn id(&self, name: &str) -> Result<VertexId> {
        self.name_table.get(name).copied().ok_or_else(|| Error::Precondition(format!("no vertex named {name}")))
    }

    pub fn ids(&self, names: &[&str]) -> Result<Vec<VertexId>> {
        names.iter().map(|n| self.id(n)).collect()
    }
}

fn grid_names(c: &Cutout, r: &Realized) -> BTreeMap<String, VertexId> {
    let mut out: BTreeMap<VertexId, (i64, i64)> = BTreeMap::new();
    for (i, &p) in c.points.iter().enumerate() {
        let v = r.vertex_of_point[i];
        let e = out.entry(v).or_insert(p);
        *e = (*e).min(p);
    }
    out.into_iter().map(|(v, (x, y))| (format!("({x},{y})"), v)).collect()
}

fn from_cutout(family: &str, parameter: usize, c: Cutout) -> Result<NamedFamilyInstance> {
    let r = c.realize_full()?;
    let graph = r.map.graph().clone();
    let name_table = grid_names(&c, &r);
    Ok(NamedFamilyInstance {
        family: family.into(),
        parameter,
        graph,
        map: Some(r.map),
        assignment: r.assignment,
        cutout: Some(c),
        zonogon: None,
        partner: None,
        name_table,
        metadata: Vec::new(),
    })
}

fn require_etgc(inst: &NamedFamilyInstance) -> Result<()> {
    if !inst.assignment.is_complete() || !is_etgc(&inst.graph, &inst.assignment)? {
        return Err(Error::Precondition(format!("{} {} does not carry an ETGC", inst.family, inst.parameter)));
    }
    Ok(())
}

/// The 3-cube with the two orthogonal ETGCs drawn on a 4 x 1 xcutout.
pub fn q3() -> Result<NamedFamilyInstance> {
    let left = Cutout::from_grid(OCT_LEFT, Identification::X)?;
    let right = Cutout::from_grid(OCT_RIGHT, Identification::X)?;
    let mut inst = from_cutout("q3", 0, left)?;
    let partner = right.realize_full()?.assignment;
    if !are_orthogonal(&inst.graph, &inst.assignment, &partner)? {
        return Err(Error::Precondition("oct pair is not orthogonal".into()));
    }
    inst.partner = Some(partner);
    require_etgc(&inst)?;
    Ok(inst)
}

/// The square `(a, b, c, d)` of an xcutout with lower-left corner `(0,0)`,
/// listed from the top-left corner clockwise.
fn corner_square(r: &Realized, c: &Cutout) -> Result<[VertexId; 4]> {
    let at = |p| {
        c.point_index(p)
            .map(|i| r.vertex_of_point[i])
            .ok_or_else(|| Error::Precondition(format!("no vertex at {p:?}")))
    };
    Ok([at((0, 1))?, at((1, 1))?, at((1, 0))?, at((0, 0))?])
}

/// Uncolored copy of a cutout.
pub fn blank(c: &Cutout) -> Cutout {
    let mut out = c.clone();
    out.vertex_colors.iter_mut().for_each(|x| *x = None);
    out.edge_colors.iter_mut().for_each(|x| *x = None);
    out
}

/// `C_{4j} x K_2` colored by spraying both seed patterns from the square
/// at the origin of the stacked cutout; `j = 1` is the 3-cube.
pub fn prism(j: usize) -> Result<NamedFamilyInstance> {
    if j == 0 {
        return Err(Error::Precondition("prism needs j >= 1".into()));
    }
    let base = blank(&Cutout::from_grid(OCT_LEFT, Identification::X)?);
    let c = if j == 1 { base } else { extend(&base, j, Axis::X)? };
    let r = c.realize_full()?;
    let square = corner_square(&r, &c)?;
    let mut colorings = Vec::new();
    for seed in SpraySeed::seed_patterns(square) {
        match spray_propagate(&r.map, &seed)?.0 {
            SprayOutcome::Complete(a) => colorings.push(a),
            other => return Err(Error::Precondition(format!("spray did not complete on prism {j}: {other:?}"))),
        }
    }
    let partner = colorings.pop().unwrap();
    let assignment = colorings.pop().unwrap();
    let mut colored = c.clone();
    for (i, _) in c.points.iter().enumerate() {
        colored.vertex_colors[i] = assignment.vertex(r.vertex_of_point[i]);
    }
    for (k, _) in c.polylines.iter().enumerate() {
        colored.edge_colors[k] = assignment.edge(r.edge_of_polyline[k]);
    }
    let mut inst = from_cutout("prism", j, colored)?;
    if !are_orthogonal(&inst.graph, &inst.assignment, &partner)? {
        return Err(Error::Precondition(format!("spray pair on prism {j} is not orthogonal")));
    }
    inst.partner = Some(partner);
    require_etgc(&inst)?;
    Ok(inst)
}

/// The toroidal 16-vertex graph of the truncated square tiling.
pub fn truncated_square_tiling() -> Result<NamedFamilyInstance> {
    let inst = from_cutout("tess", 0, Cutout::from_grid(TESS_LEFT, Identification::Both)?)?;
    require_etgc(&inst)?;
    Ok(inst)
}

/// Two stacked tess copies followed by the four exchanges of
/// `TESS_RIGHT_SITES`.
pub fn tess_right() -> Result<NamedFamilyInstance> {
    let base = Cutout::from_grid(TESS_LEFT, Identification::Both)?;
    let mut c = extend(&base, 2, Axis::X)?;
    for site in TESS_RIGHT_SITES {
        c = exchange_cutout(&c, site)?;
    }
    let inst = from_cutout("tess-right", 0, c)?;
    require_etgc(&inst)?;
    Ok(inst)
}

/// Colors of the `P_2 x P_6` ladder inserted into the oct3 cutout, from
/// the bottom side of the replaced square upwards.
pub fn oct3_ladder() -> LadderColors {
    LadderColors {
        first_rail_vertices: vec![3, 2, 0, 1],
        first_rail_edges: vec![0, 1, 3, 2, 0],
        second_rail_vertices: vec![0, 1, 3, 2],
        second_rail_edges: vec![1, 3, 2, 0, 1],
        rungs: vec![2, 0, 1, 3],
    }
}

/// The oct3 cutout after unfolding its marked square with `ell = 3`.
pub fn oct3_unfolded() -> Result<NamedFamilyInstance> {
    let c = Cutout::from_grid(OCT3_LEFT, Identification::X)?;
    let u = unfold(&c, (2, 0), 3, Axis::Y, Some(&oct3_ladder()))?;
    let inst = from_cutout("oct3", 3, u)?;
    require_etgc(&inst)?;
    Ok(inst)
}

pub fn octaedro_middle() -> Result<NamedFamilyInstance> {
    let inst = from_cutout("octaedro", 0, Cutout::from_grid(OCTAEDRO_MIDDLE, Identification::Y)?)?;
    require_etgc(&inst)?;
    Ok(inst)
}

/// Reconstructed stand-in for the self-amalgam example; see
/// [`KLEIN_RECONSTRUCTED`].
pub fn klein_reconstructed() -> Result<NamedFamilyInstance> {
    let mut inst = from_cutout("klein", 0, Cutout::from_grid(KLEIN_RECONSTRUCTED, Identification::Both)?)?;
    inst.metadata.push("reconstructed fixture".into());
    Ok(inst)
}

/// Bicutouts of the `w x h` toroidal grid with one perfect matching
/// removed, one per perfect matching, in a fixed order. Every vertex keeps
/// three of its four grid edges, so each drawing realizes a cubic graph
/// when it is simple. `w` and `h` must be even and at least 4.
pub fn torus_grid_cutouts(w: usize, h: usize) -> Result<Vec<Cutout>> {
    if w < 4 || h < 4 || w % 2 == 1 || h % 2 == 1 {
        return Err(Error::Precondition("grid sides must be even and at least 4".into()));
    }
    // removed[i] = Some(true) for the edge to the right, Some(false) for up
    fn matchings(w: usize, h: usize, removed: &mut Vec<Option<(usize, bool)>>, out: &mut Vec<Vec<(usize, bool)>>) {
        let Some(i) = removed.iter().position(Option::is_none) else {
            let mut m: Vec<(usize, bool)> = removed.iter().flatten().copied().collect();
            m.sort_unstable();
            m.dedup();
            out.push(m);
            return;
        };
        let (x, y) = (i % w, i / w);
        let right = y * w + (x + 1) % w;
        let up = ((y + 1) % h) * w + x;
        let left = y * w + (x + w - 1) % w;
        let down = ((y + h - 1) % h) * w + x;
        for (j, edge) in [(right, (i, true)), (up, (i, false)), (left, (left, true)), (down, (down, false))] {
            if removed[j].is_none() {
                removed[i] = Some(edge);
                removed[j] = Some(edge);
                matchings(w, h, removed, out);
                removed[i] = None;
                removed[j] = None;
            }
        }
    }
    let mut all = Vec::new();
    matchings(w, h, &mut vec![None; w * h], &mut all);
    all.into_iter()
        .map(|m| {
            let gone = |x: usize, y: usize, right: bool| m.contains(&((y % h) * w + x % w, right));
            let mut rows = Vec::new();
            for y in (0..=h).rev() {
                let mut t = Vec::new();
                for x in 0..=w {
                    t.push("*");
                    if x < w {
                        t.push(if gone(x, y, true) { "." } else { "-" });
                    }
                }
                rows.push(t.join(" "));
                if y > 0 {
                    rows.push((0..=w).map(|x| if gone(x, y - 1, false) { "." } else { "|" }).collect::<Vec<_>>().join(" "));
                }
            }
            Cutout::from_grid(&rows.join("\n"), Identification::Both)
        })
        .collect()
}

/// Family names accepted by [`construct`].
pub const FAMILIES: [&str; 9] = ["q3", "prism", "tess", "tess-right", "oct3", "octaedro", "gamma", "godd", "klein"];

/// Builds a family instance by name. Families without a parameter ignore
/// `param`.
pub fn construct(family: &str, param: usize) -> Result<NamedFamilyInstance> {
    match family {
        "q3" => q3(),
        "prism" => prism(param),
        "tess" => truncated_square_tiling(),
        "tess-right" => tess_right(),
        "oct3" => oct3_unfolded(),
        "octaedro" => octaedro_middle(),
        "gamma" => gamma(param),
        "godd" => g_odd(param),
        "klein" => klein_reconstructed(),
        other => Err(Error::UnknownFamily(other.into())),
    }
}

// Collects named vertices and colored edges of a pierced family.
struct Builder {
    names: BTreeMap<String, VertexId>,
    vcol: Vec<Color>,
    edges: Vec<(VertexId, VertexId, Color)>,
}

impl Builder {
    fn new() -> Self {
        Builder { names: BTreeMap::new(), vcol: Vec::new(), edges: Vec::new() }
    }

    fn vertex(&mut self, name: String, c: Color) {
        self.names.insert(name, self.vcol.len());
        self.vcol.push(c);
    }

    fn id(&self, name: &str) -> VertexId {
        self.names[name]
    }

    fn edge(&mut self, a: &str, b: &str, c: Color) {
        self.edges.push((self.id(a), self.id(b), c));
    }

    fn check_vertex(&self, name: &str, c: Color) -> Result<()> {
        if self.vcol[self.id(name)] != c {
            return Err(Error::Precondition(format!("{name} has color {} not {c}", self.vcol[self.id(name)])));
        }
        Ok(())
    }

    fn finish(self) -> Result<(CubicGraph, TotalAssignment, BTreeMap<String, VertexId>)> {
        let g = CubicGraph::new(self.vcol.len(), self.edges.iter().map(|&(a, b, _)| (a, b)))?;
        let mut a = TotalAssignment::empty(&g);
        for (v, &c) in self.vcol.iter().enumerate() {
            a.vertices[v] = Some(c);
        }
        for &(x, y, c) in &self.edges {
            a.edges[g.edge_between(x, y).unwrap()] = Some(c);
        }
        Ok((g, a, self.names))
    }
}

fn n(prefix: &str, i: usize) -> String {
    format!("{prefix}_{i}")
}

/// `P^h` as an index sequence: `v_0, v_2, v_1, v_4, v_3, ..., v_last`.
fn side_path(last: usize) -> Vec<usize> {
    let mut out = vec![0];
    for k in 1..=(last - 1) / 2 {
        out.push(2 * k);
        out.push(2 * k - 1);
    }
    out.push(last);
    out
}

// Faces common to both pierced families: the squares of the crossing
// ladders, the central ladder and the two side belts.
fn pierced_faces(b: &Builder, last: usize) -> Vec<Vec<VertexId>> {
    let id = |p: &str, i: usize| b.id(&n(p, i));
    let mut faces = Vec::new();
    for k in 1..=(last - 1) / 2 {
        let (i, j) = (2 * k - 1, 2 * k);
        faces.push(vec![id("u", i), id("u", j), id("w", j), id("w", i)]);
        faces.push(vec![id("w", i), id("w", j), id("z", j), id("z", i)]);
        faces.push(vec![id("z", i), id("z", j), id("v", j), id("v", i)]);
    }
    faces.push(vec![id("u", 0), id("w", 0), id("z", last), id("v", last)]);
    faces.push(vec![id("w", 0), id("w", last), id("z", 0), id("z", last)]);
    faces.push(vec![id("w", last), id("u", last), id("v", 0), id("z", 0)]);
    let mut ub: Vec<VertexId> = (0..=last).map(|i| id("u", i)).collect();
    ub.extend([id("w", last), id("w", 0)]);
    faces.push(ub);
    let mut vb: Vec<VertexId> = side_path(last).into_iter().map(|i| id("v", i)).collect();
    vb.extend([id("z", last), id("z", 0)]);
    faces.push(vb);
    faces
}

// Pairs of opposite polygon sides: crossing edges `w_i z_i` two at a time.
fn side_pairs(g: &CubicGraph, b: &Builder, last: usize) -> Vec<Vec<usize>> {
    (1..=(last - 1) / 2)
        .map(|k| {
            [2 * k - 1, 2 * k]
                .iter()
                .map(|&i| g.edge_between(b.id(&n("w", i)), b.id(&n("z", i))).unwrap())
                .collect()
        })
        .collect()
}

/// Color of the edge leaving position `p` of `P^h` in `Γ_g`, one period.
pub const GAMMA_PH_EDGES: [Color; 4] = [0, 1, 2, 3];

fn gamma_with(g: usize, ph_edges: [Color; 4]) -> Result<NamedFamilyInstance> {
    let last = 4 * g + 1;
    let mut b = Builder::new();
    for i in 0..=last {
        b.vertex(n("u", i), (i % 4) as Color);
    }
    let ph = side_path(last);
    let ph_color = |p: usize| [2, 3, 0, 1][p % 4] as Color;
    let mut vcolors = vec![0; last + 1];
    for (p, &i) in ph.iter().enumerate() {
        vcolors[i] = ph_color(p);
    }
    for (i, &c) in vcolors.iter().enumerate() {
        b.vertex(n("v", i), c);
    }
    // (u, uw, w, wz, z, zv, v) by i mod 4
    const CROSS: [[Color; 7]; 4] =
        [[0, 3, 2, 1, 3, 0, 1], [1, 0, 3, 1, 2, 3, 0], [2, 1, 0, 3, 1, 2, 3], [3, 2, 1, 3, 0, 1, 2]];
    let mut wcol = vec![0; last + 1];
    let mut zcol = vec![0; last + 1];
    for i in 1..last {
        wcol[i] = CROSS[i % 4][2];
        zcol[i] = CROSS[i % 4][4];
    }
    (wcol[0], wcol[last], zcol[last], zcol[0]) = (2, 3, 1, 0);
    for i in 0..=last {
        b.vertex(n("w", i), wcol[i]);
    }
    for i in 0..=last {
        b.vertex(n("z", i), zcol[i]);
    }
    for i in 0..last {
        b.edge(&n("u", i), &n("u", i + 1), ((i + 2) % 4) as Color);
    }
    for p in 0..ph.len() - 1 {
        b.edge(&n("v", ph[p]), &n("v", ph[p + 1]), ph_edges[p % 4]);
    }
    for i in 1..last {
        let t = CROSS[i % 4];
        b.check_vertex(&n("u", i), t[0])?;
        b.check_vertex(&n("v", i), t[6])?;
        b.edge(&n("u", i), &n("w", i), t[1]);
        b.edge(&n("w", i), &n("z", i), t[3]);
        b.edge(&n("z", i), &n("v", i), t[5]);
    }
    for k in 1..=2 * g {
        let (i, j) = (2 * k - 1, 2 * k);
        b.edge(&n("w", i), &n("w", j), if k % 2 == 1 { 2 } else { 0 });
        b.edge(&n("z", i), &n("z", j), if k % 2 == 1 { 0 } else { 2 });
    }
    let (ul, vl, wl, zl) = (n("u", last), n("v", last), n("w", last), n("z", last));
    b.edge("u_0", "w_0", 3);
    b.edge("w_0", &wl, 1);
    b.edge(&wl, &ul, 0);
    b.edge(&vl, &zl, 2);
    b.edge(&zl, "z_0", 3);
    b.edge("z_0", "v_0", 1);
    b.edge("u_0", &vl, 1);
    b.edge("w_0", &zl, 0);
    b.edge(&wl, "z_0", 2);
    b.edge(&ul, "v_0", 3);
    let faces = pierced_faces(&b, last);
    let (graph, assignment, name_table) = b.finish()?;
    let pairs = side_pairs(&graph, &Builder { names: name_table.clone(), vcol: vec![], edges: vec![] }, last);
    let zonogon = ZonogonCutout::new(&graph, 4 * g, faces, pairs)?;
    let map = zonogon.realize(&graph)?;
    Ok(NamedFamilyInstance {
        family: "gamma".into(),
        parameter: g,
        graph,
        map: Some(map),
        cutout: None,
        zonogon: Some(zonogon),
        assignment,
        partner: None,
        name_table,
        metadata: Vec::new(),
    })
}

/// `Γ_g` on the `4g`-zonogon with its ETGC. The `P^h` edges repeat
/// [`GAMMA_PH_EDGES`]; breaking that period loses the ETGC.
pub fn gamma(g: usize) -> Result<NamedFamilyInstance> {
    let inst = gamma_with(g, GAMMA_PH_EDGES)?;
    require_etgc(&inst)?;
    Ok(inst)
}

/// `G_{2g+1}` on the `(4g+2)`-zonogon with its perfect STC.
pub fn g_odd(g: usize) -> Result<NamedFamilyInstance> {
    let last = 4 * g + 3;
    let mut b = Builder::new();
    let two = |i: usize, even: Color, odd: Color| if i % 2 == 0 { even } else { odd };
    for i in 0..=last {
        b.vertex(n("u", i), two(i, 3, 1));
    }
    let ph = side_path(last);
    let mut vcolors = vec![0; last + 1];
    for (p, &i) in ph.iter().enumerate() {
        vcolors[i] = two(p, 3, 1);
    }
    for (i, &c) in vcolors.iter().enumerate() {
        b.vertex(n("v", i), c);
    }
    let mut wcol = vec![0; last + 1];
    let mut zcol = vec![0; last + 1];
    for i in 1..last {
        wcol[i] = two(i, 3, 1);
        zcol[i] = two(i, 1, 3);
    }
    (wcol[0], wcol[last], zcol[last], zcol[0]) = (3, 1, 1, 3);
    for i in 0..=last {
        b.vertex(n("w", i), wcol[i]);
    }
    for i in 0..=last {
        b.vertex(n("z", i), zcol[i]);
    }
    for i in 0..last {
        b.edge(&n("u", i), &n("u", i + 1), two(i, 0, 2));
    }
    for p in 0..ph.len() - 1 {
        b.edge(&n("v", ph[p]), &n("v", ph[p + 1]), two(p, 0, 2));
    }
    for i in 1..last {
        let (uw, zv) = if i % 2 == 1 { (3, 1) } else { (1, 3) };
        b.edge(&n("u", i), &n("w", i), uw);
        b.edge(&n("w", i), &n("z", i), 2);
        b.edge(&n("z", i), &n("v", i), zv);
    }
    for k in 1..=2 * g + 1 {
        let (i, j) = (2 * k - 1, 2 * k);
        b.edge(&n("w", i), &n("w", j), 0);
        b.edge(&n("z", i), &n("z", j), 0);
    }
    let (ul, vl, wl, zl) = (n("u", last), n("v", last), n("w", last), n("z", last));
    b.edge("u_0", "w_0", 1);
    b.edge("w_0", &wl, 2);
    b.edge(&wl, &ul, 3);
    b.edge(&vl, &zl, 3);
    b.edge(&zl, "z_0", 2);
    b.edge("z_0", "v_0", 1);
    b.edge("u_0", &vl, 2);
    b.edge("w_0", &zl, 0);
    b.edge(&wl, "z_0", 0);
    b.edge(&ul, "v_0", 2);
    let faces = pierced_faces(&b, last);
    let (graph, assignment, name_table) = b.finish()?;
    let pairs = side_pairs(&graph, &Builder { names: name_table.clone(), vcol: vec![], edges: vec![] }, last);
    let zonogon = ZonogonCutout::new(&graph, 4 * g + 2, faces, pairs)?;
    let map = zonogon.realize(&graph)?;
    let inst = NamedFamilyInstance {
        family: "godd".into(),
        parameter: g,
        graph,
        map: Some(map),
        cutout: None,
        zonogon: Some(zonogon),
        assignment,
        partner: None,
        name_table,
        metadata: Vec::new(),
    };
    if !is_stc(&inst.graph, &inst.assignment)? {
        return Err(Error::Precondition(format!("G_{} coloring is not an STC", 2 * g + 1)));
    }
    if !is_own_color_matching(&inst.graph, &inst.assignment) {
        return Err(Error::Precondition("beta edges do not form a perfect matching".into()));
    }
    Ok(inst)
}

/// Vertex sequences of the reduction schedule for `G_{2g+1}`, in the
/// order they are applied.
pub fn g_odd_schedule_names(g: usize) -> Vec<Vec<String>> {
    let last = 4 * g + 3;
    let seq = |parts: &[(&str, usize)]| parts.iter().map(|&(p, i)| n(p, i)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for i in 0..=g {
        out.push(seq(&[("u", 4 * i), ("u", 4 * i + 1), ("w", 4 * i + 1), ("w", 4 * i + 2)]));
    }
    out.push(seq(&[("v", 0), ("v", 2), ("z", 2), ("z", 1)]));
    for i in 1..=g {
        out.push(seq(&[("v", 4 * i - 1), ("v", 4 * i + 2), ("z", 4 * i + 2), ("z", 4 * i + 1)]));
    }
    for i in 0..=g {
        out.push(seq(&[("u", 4 * i + 1), ("u", 4 * i + 2), ("w", 4 * i + 2), ("z", 4 * i + 2)]));
    }
    out.push(seq(&[("v", last), ("u", 0), ("w", 0), ("w", last)]));
    for i in 1..=g {
        out.push(seq(&[("w", 4 * i - 1), ("z", 4 * i - 1), ("v", 4 * i - 1), ("v", 4 * i)]));
    }
    out
}

/// The reduction schedule as alternating paths. Each path is read off the
/// coloring it will be applied to, so the colors of later paths reflect
/// the earlier swaps.
pub fn g_odd_reduction_schedule(inst: &NamedFamilyInstance) -> Result<Vec<AlternatingPath>> {
    if inst.family != "godd" {
        return Err(Error::Precondition("schedule applies to the godd family only".into()));
    }
    let mut a = inst.assignment.clone();
    let mut out = Vec::new();
    for names in g_odd_schedule_names(inst.parameter) {
        let ids = names.iter().map(|s| inst.id(s)).collect::<Result<Vec<_>>>()?;
        let p = AlternatingPath::from_vertices(&inst.graph, &a, &ids)?;
        a = crate::coloring::beta_reduce(&inst.graph, &a, &p)?;
        out.push(p);
    }
    Ok(out)
}

/// Applies the whole schedule and returns the final coloring.
pub fn g_odd_reduced(inst: &NamedFamilyInstance) -> Result<TotalAssignment> {
    let mut a = inst.assignment.clone();
    for p in g_odd_reduction_schedule(inst)? {
        a = crate::coloring::beta_reduce(&inst.graph, &a, &p)?;
    }
    Ok(a)
}
