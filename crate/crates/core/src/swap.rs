//! Two-color swapping: walks, the color-flip bijection `phi`, bead sequences,
//! non-crossing matchings and arc weights.
//!
//! Color 1 (the first shape) is blue, color 2 red. Walks travel backward on
//! red and forward on blue, switching color at the four corner patterns.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invariant, Error, Result};
use crate::lattice::{Boundary, EdgeState, LatticeConfig};
use crate::shapes::ShapeTuple;
use crate::tableaux::llt_poly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    /// Lattice color index.
    pub fn index(self) -> usize {
        match self {
            Color::Blue => 1,
            Color::Red => 2,
        }
    }

    pub fn other(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }

    fn letter(self) -> char {
        match self {
            Color::Blue => 'B',
            Color::Red => 'R',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    Top,
    Bottom,
}

/// A singleton boundary path.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoundaryBead {
    pub side: Side,
    /// Column label (not grid index).
    pub column: i64,
    pub color: Color,
    /// Boundary paths strictly to the right, doubled columns counting twice.
    pub label: u32,
}

impl fmt::Display for BoundaryBead {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.color.letter(), self.label)
    }
}

/// Singleton beads of the two boundary rows, each left to right.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BeadSequence {
    pub top: Vec<BoundaryBead>,
    pub bottom: Vec<BoundaryBead>,
}

impl BeadSequence {
    /// Beads from color words alone; columns are positions and labels count
    /// the beads to the right.
    pub fn from_colors(top: &[Color], bottom: &[Color]) -> Self {
        let row = |side, colors: &[Color]| {
            let len = colors.len();
            colors
                .iter()
                .enumerate()
                .map(|(i, &color)| BoundaryBead { side, column: i as i64, color, label: (len - 1 - i) as u32 })
                .collect()
        };
        BeadSequence { top: row(Side::Top, top), bottom: row(Side::Bottom, bottom) }
    }

    pub fn len(&self) -> usize {
        self.top.len() + self.bottom.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Cyclic order: top left to right, then bottom right to left.
    pub fn cyclic(&self) -> Vec<BoundaryBead> {
        self.top.iter().copied().chain(self.bottom.iter().rev().copied()).collect()
    }

    pub fn top_colors(&self) -> Vec<Color> {
        self.top.iter().map(|b| b.color).collect()
    }

    pub fn bottom_colors(&self) -> Vec<Color> {
        self.bottom.iter().map(|b| b.color).collect()
    }

    /// Same bead positions, ignoring colors and labels.
    pub fn same_geometry(&self, other: &BeadSequence) -> bool {
        let pos = |s: &BeadSequence| -> Vec<(Side, i64)> { s.cyclic().iter().map(|b| (b.side, b.column)).collect() };
        pos(self) == pos(other)
    }
}

impl fmt::Display for BeadSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |beads: &[BoundaryBead]| beads.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
        write!(f, "top [{}] bottom [{}]", row(&self.top), row(&self.bottom))
    }
}

fn beads_of_row(row: &[EdgeState], r: i64, side: Side) -> Vec<BoundaryBead> {
    let mut out = Vec::new();
    let mut right = 0u32;
    for c in (0..row.len()).rev() {
        let e = row[c];
        let color = match (e.has(1), e.has(2)) {
            (true, false) => Some(Color::Blue),
            (false, true) => Some(Color::Red),
            _ => None,
        };
        if let Some(color) = color {
            out.push(BoundaryBead { side, column: r + c as i64, color, label: right });
        }
        right += e.len();
    }
    out.reverse();
    out
}

/// Bead sequence of a two-shape tuple, from its boundary alone.
pub fn bead_sequence(tuple: &ShapeTuple) -> Result<BeadSequence> {
    tuple.ensure_pair()?;
    let b = Boundary::of(tuple)?;
    Ok(BeadSequence { top: beads_of_row(&b.top, b.r, Side::Top), bottom: beads_of_row(&b.bottom, b.r, Side::Bottom) })
}

fn ensure_two_colors(config: &LatticeConfig) -> Result<()> {
    if config.k != 2 {
        return Err(Error::NotTwoShapes(config.k));
    }
    Ok(())
}

/// All singleton boundary paths of a configuration, top row first.
pub fn singletons(config: &LatticeConfig) -> Result<Vec<BoundaryBead>> {
    ensure_two_colors(config)?;
    let mut out = beads_of_row(config.top(), config.r, Side::Top);
    out.extend(beads_of_row(config.bottom(), config.r, Side::Bottom));
    Ok(out)
}

/// An edge of the grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum EdgeRef {
    /// `vertical[level][col]`
    V { level: usize, col: usize },
    /// `horizontal[row][pos]`
    H { row: usize, pos: usize },
}

/// One of the four color-switching corner patterns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Switch {
    /// Red down from the top, blue out to the right.
    A,
    /// Red in from the right, blue out the top.
    B,
    /// Blue in from the left, red out the bottom.
    C,
    /// Blue up from the bottom, red out the left.
    D,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepCounts {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    pub color: Color,
    pub edges: Vec<EdgeRef>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Walk {
    pub start: BoundaryBead,
    pub end: BoundaryBead,
    pub segments: Vec<Segment>,
    pub switches: Vec<Switch>,
    pub counts: StepCounts,
}

impl Walk {
    pub fn edges(&self) -> impl Iterator<Item = (EdgeRef, Color)> + '_ {
        self.segments.iter().flat_map(|s| s.edges.iter().map(move |&e| (e, s.color)))
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arrive {
    I,
    J,
    K,
    L,
}

fn edge_state(config: &LatticeConfig, e: EdgeRef) -> EdgeState {
    match e {
        EdgeRef::V { level, col } => config.vertical[level][col],
        EdgeRef::H { row, pos } => config.horizontal[row][pos],
    }
}

/// Follows the walk starting at a top red or bottom blue singleton.
pub fn walk_from(config: &LatticeConfig, start: BoundaryBead) -> Result<Walk> {
    ensure_two_colors(config)?;
    let beads = singletons(config)?;
    let ok_start = beads.contains(&start)
        && matches!((start.side, start.color), (Side::Top, Color::Red) | (Side::Bottom, Color::Blue));
    if !ok_start {
        return Err(Error::InvalidStart(format!("{start:?} is not a top red or bottom blue singleton")));
    }
    let n = config.rows;
    let col0 = (start.column - config.r) as usize;
    let (mut h, mut c, mut arrive, mut color, first) = match start.side {
        Side::Top => (n - 1, col0, Arrive::K, Color::Red, EdgeRef::V { level: n, col: col0 }),
        Side::Bottom => (0, col0, Arrive::I, Color::Blue, EdgeRef::V { level: 0, col: col0 }),
    };
    let mut segments = vec![Segment { color, edges: vec![first] }];
    let mut switches = Vec::new();
    let mut counts = StepCounts::default();
    let limit = 2 * (config.rows + 1) * (config.cols + 1) * 2;
    let mut seen: HashSet<EdgeRef> = HashSet::from([first]);
    for _ in 0..limit {
        let f = config.face(h, c);
        let other = color.other().index();
        let mine = color.index();
        let arrival_edge = match arrive {
            Arrive::I => f.i,
            Arrive::J => f.j,
            Arrive::K => f.k,
            Arrive::L => f.l,
        };
        if arrival_edge.has(other) || !arrival_edge.has(mine) {
            return Err(invariant(format!("walk arrived at face ({h},{c}) on an edge not carrying only its color")));
        }
        let leave: Arrive;
        if f.present().has(other) {
            let sw = match (color, arrive) {
                (Color::Red, Arrive::K) if f.l.has(other) => Switch::A,
                (Color::Red, Arrive::L) if f.k.has(other) => Switch::B,
                (Color::Blue, Arrive::J) if f.i.has(other) => Switch::C,
                (Color::Blue, Arrive::I) if f.j.has(other) => Switch::D,
                _ => return Err(invariant(format!("face ({h},{c}) matches no switching pattern"))),
            };
            match sw {
                Switch::A => counts.a += 1,
                Switch::B => counts.b += 1,
                Switch::C => counts.c += 1,
                Switch::D => counts.d += 1,
            }
            switches.push(sw);
            leave = match sw {
                Switch::A => Arrive::L,
                Switch::B => Arrive::K,
                Switch::C => Arrive::I,
                Switch::D => Arrive::J,
            };
            color = color.other();
            segments.push(Segment { color, edges: Vec::new() });
        } else {
            leave = match color {
                Color::Red if f.i.has(mine) => Arrive::I,
                Color::Red if f.j.has(mine) => Arrive::J,
                Color::Blue if f.k.has(mine) => Arrive::K,
                Color::Blue if f.l.has(mine) => Arrive::L,
                _ => return Err(invariant(format!("path of the walk breaks at face ({h},{c})"))),
            };
        }
        let edge = match leave {
            Arrive::I => EdgeRef::V { level: h, col: c },
            Arrive::K => EdgeRef::V { level: h + 1, col: c },
            Arrive::J => EdgeRef::H { row: h, pos: c },
            Arrive::L => EdgeRef::H { row: h, pos: c + 1 },
        };
        if !seen.insert(edge) {
            return Err(invariant("walk revisits an edge"));
        }
        segments.last_mut().expect("nonempty").edges.push(edge);
        let end_side = match (leave, h) {
            (Arrive::K, _) if h + 1 == n => Some(Side::Top),
            (Arrive::I, 0) => Some(Side::Bottom),
            _ => None,
        };
        if let Some(side) = end_side {
            let column = config.r + c as i64;
            let end = beads
                .iter()
                .find(|b| b.side == side && b.column == column)
                .copied()
                .filter(|b| b.color == color)
                .ok_or_else(|| invariant(format!("walk ended on a non-singleton {side:?} column {column}")))?;
            return Ok(Walk { start, end, segments, switches, counts });
        }
        (h, c, arrive) = match leave {
            Arrive::I => (h - 1, c, Arrive::K),
            Arrive::K => (h + 1, c, Arrive::I),
            Arrive::J => (h, c.checked_sub(1).ok_or_else(|| invariant("walk left the grid"))?, Arrive::L),
            Arrive::L => (h, c + 1, Arrive::J),
        };
        if c >= config.cols {
            return Err(invariant("walk left the grid"));
        }
    }
    Err(invariant("walk did not terminate"))
}

/// Walk start beads in launch order: top reds, then bottom blues, each left to right.
pub fn walk_starts(config: &LatticeConfig) -> Result<Vec<BoundaryBead>> {
    let beads = singletons(config)?;
    let mut starts: Vec<_> = beads.iter().filter(|b| b.side == Side::Top && b.color == Color::Red).copied().collect();
    starts.extend(beads.iter().filter(|b| b.side == Side::Bottom && b.color == Color::Blue));
    Ok(starts)
}

/// Every walk of a configuration, in launch order.
pub fn walks(config: &LatticeConfig) -> Result<Vec<Walk>> {
    walk_starts(config)?.into_iter().map(|s| walk_from(config, s)).collect()
}

fn flip_walks(config: &LatticeConfig, walks: &[Walk]) -> Result<LatticeConfig> {
    let mut out = config.clone();
    let mut touched = HashSet::new();
    for w in walks {
        for (e, color) in w.edges() {
            if !touched.insert(e) {
                return Err(invariant("two walks share an edge"));
            }
            let cur = edge_state(config, e);
            if !cur.has(color.index()) || cur.has(color.other().index()) {
                return Err(invariant("walk edge does not carry exactly the walk's color"));
            }
            let flipped = EdgeState::single(color.other().index());
            match e {
                EdgeRef::V { level, col } => out.vertical[level][col] = flipped,
                EdgeRef::H { row, pos } => out.horizontal[row][pos] = flipped,
            }
        }
    }
    Ok(out)
}

/// The color-flip bijection onto configurations of the swapped tuple.
pub fn phi(config: &LatticeConfig) -> Result<LatticeConfig> {
    flip_walks(config, &walks(config)?)
}

/// A pair of matched beads, stored in cyclic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc(pub BoundaryBead, pub BoundaryBead);

impl Arc {
    /// Position-only key: `((side, column), (side, column))`.
    pub fn positions(&self) -> ((Side, i64), (Side, i64)) {
        ((self.0.side, self.0.column), (self.1.side, self.1.column))
    }
}

fn cyclic_key(b: &BoundaryBead) -> (u8, i64) {
    match b.side {
        Side::Top => (0, b.column),
        Side::Bottom => (1, -b.column),
    }
}

fn make_arc(a: BoundaryBead, b: BoundaryBead) -> Arc {
    if cyclic_key(&a) <= cyclic_key(&b) {
        Arc(a, b)
    } else {
        Arc(b, a)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Matching {
    pub arcs: Vec<Arc>,
}

impl Matching {
    pub fn new(arcs: impl IntoIterator<Item = Arc>) -> Self {
        let mut arcs: Vec<Arc> = arcs.into_iter().map(|a| make_arc(a.0, a.1)).collect();
        arcs.sort_by_key(|a| (cyclic_key(&a.0), cyclic_key(&a.1)));
        Matching { arcs }
    }

    /// Uncolored form: arcs as position pairs.
    pub fn shape(&self) -> Vec<((Side, i64), (Side, i64))> {
        self.arcs.iter().map(Arc::positions).collect()
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arcs
            .iter()
            .map(|a| {
                let tag = |b: &BoundaryBead| {
                    format!("{}{}{}", if b.side == Side::Top { "^" } else { "_" }, b.color.letter(), b.label)
                };
                format!("{}-{}", tag(&a.0), tag(&a.1))
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Arcs joining each walk's start to its end.
pub fn induced_matching(config: &LatticeConfig) -> Result<Matching> {
    Ok(Matching::new(walks(config)?.iter().map(|w| Arc(w.start, w.end))))
}

fn halve(num: i64, arc: &Arc) -> Result<i64> {
    if num % 2 != 0 {
        return Err(Error::HalfIntegerArc(format!("{}-{}", arc.0, arc.1)));
    }
    Ok(num / 2)
}

/// `t`-exponent lost when the colors along this arc's walk are flipped.
pub fn arc_weight(arc: &Arc) -> Result<i64> {
    let (a, b) = (arc.0, arc.1);
    let lab = |x: &BoundaryBead| x.label as i64;
    match (a.side == b.side, a.color == b.color) {
        (true, false) => {
            let (red, blue) = if a.color == Color::Red { (a, b) } else { (b, a) };
            let red_left = red.column < blue.column;
            let shift = if red_left { 1 } else { -1 };
            // top row: red j, blue i; bottom row: red i, blue j
            let num = match a.side {
                Side::Top => lab(&red) - lab(&blue) + shift,
                Side::Bottom => lab(&blue) - lab(&red) + shift,
            };
            halve(num, arc)
        }
        (false, true) => {
            let (top, bottom) = if a.side == Side::Top { (a, b) } else { (b, a) };
            let num = match a.color {
                Color::Blue => lab(&bottom) - lab(&top),
                Color::Red => lab(&top) - lab(&bottom),
            };
            halve(num, arc)
        }
        _ => Err(Error::Precondition(format!("{}-{} joins same-row equal colors or cross-row different colors", a, b))),
    }
}

pub fn matching_weight(m: &Matching) -> Result<i64> {
    m.arcs.iter().map(arc_weight).sum()
}

/// `exponent(config) - exponent(phi(config))`, computed three ways.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightChange {
    pub by_arcs: i64,
    pub direct: i64,
    /// Sum over walks of `#A - #B`.
    pub by_switches: i64,
}

impl WeightChange {
    pub fn consistent(&self) -> bool {
        self.by_arcs == self.direct && self.direct == self.by_switches
    }
}

pub fn weight_change(config: &LatticeConfig) -> Result<WeightChange> {
    let ws = walks(config)?;
    let image = flip_walks(config, &ws)?;
    let by_arcs = ws.iter().map(|w| arc_weight(&Arc(w.start, w.end))).sum::<Result<i64>>()?;
    let direct = config.weight_exps().0 - image.weight_exps().0;
    let by_switches = ws.iter().map(|w| w.counts.a - w.counts.b).sum();
    Ok(WeightChange { by_arcs, direct, by_switches })
}

fn compatible(a: &BoundaryBead, b: &BoundaryBead) -> bool {
    (a.side == b.side) != (a.color == b.color)
}

/// Every non-crossing perfect matching under the chord model.
pub fn enumerate_noncrossing_matchings(beads: &BeadSequence) -> Vec<Matching> {
    let cyc = beads.cyclic();
    let mut memo = HashMap::new();
    let raw = match_interval(&cyc, 0, cyc.len(), &mut memo);
    let mut out: Vec<Matching> =
        raw.into_iter().map(|pairs| Matching::new(pairs.into_iter().map(|(i, j)| Arc(cyc[i], cyc[j])))).collect();
    out.sort();
    out
}

type Pairs = Vec<(usize, usize)>;

fn match_interval(
    cyc: &[BoundaryBead],
    lo: usize,
    hi: usize,
    memo: &mut HashMap<(usize, usize), Vec<Pairs>>,
) -> Vec<Pairs> {
    if lo >= hi {
        return vec![Vec::new()];
    }
    if (hi - lo) % 2 == 1 {
        return Vec::new();
    }
    if let Some(v) = memo.get(&(lo, hi)) {
        return v.clone();
    }
    let mut out = Vec::new();
    for k in (lo + 1..hi).step_by(2) {
        if !compatible(&cyc[lo], &cyc[k]) {
            continue;
        }
        let inside = match_interval(cyc, lo + 1, k, memo);
        if inside.is_empty() {
            continue;
        }
        let outside = match_interval(cyc, k + 1, hi, memo);
        for a in &inside {
            for b in &outside {
                let mut m = Vec::with_capacity(a.len() + b.len() + 1);
                m.push((lo, k));
                m.extend_from_slice(a);
                m.extend_from_slice(b);
                out.push(m);
            }
        }
    }
    memo.insert((lo, hi), out.clone());
    out
}

/// Counts matchings without materializing them.
pub fn count_noncrossing_matchings(beads: &BeadSequence) -> u64 {
    let cyc = beads.cyclic();
    let n = cyc.len();
    // dp[lo][hi] over half-open intervals
    let mut dp = vec![vec![0u64; n + 1]; n + 1];
    for lo in (0..=n).rev() {
        dp[lo][lo] = 1;
        for hi in lo + 1..=n {
            if (hi - lo) % 2 == 1 {
                continue;
            }
            let mut total = 0;
            for k in (lo + 1..hi).step_by(2) {
                if compatible(&cyc[lo], &cyc[k]) {
                    total += dp[lo + 1][k] * dp[k + 1][hi];
                }
            }
            dp[lo][hi] = total;
        }
    }
    dp[0][n]
}

pub fn has_unique_matching(beads: &BeadSequence) -> bool {
    count_noncrossing_matchings(beads) == 1
}

fn red_minus_blue(colors: &[Color]) -> i64 {
    colors.iter().map(|c| if *c == Color::Red { 1 } else { -1 }).sum()
}

/// Existence criterion: equal red-minus-blue counts on the two rows.
pub fn matching_exists_criterion(beads: &BeadSequence) -> bool {
    red_minus_blue(&beads.top_colors()) == red_minus_blue(&beads.bottom_colors())
}

/// Lengths of maximal one-color blocks, with the block colors.
fn blocks(colors: &[Color]) -> Vec<(Color, usize)> {
    let mut out: Vec<(Color, usize)> = Vec::new();
    for &c in colors {
        match out.last_mut() {
            Some((last, len)) if *last == c => *len += 1,
            _ => out.push((c, 1)),
        }
    }
    out
}

/// `R^p B^q` (top) over `B^r R^s` (bottom), any exponents zero.
fn is_form_one(top: &[Color], bottom: &[Color]) -> bool {
    let sorted = |row: &[Color], first: Color| row.windows(2).all(|w| !(w[0] == first.other() && w[1] == first));
    sorted(top, Color::Red) && sorted(bottom, Color::Blue)
}

/// `R^a B^b R^c` (top) over `B^d` (bottom).
fn is_form_two(top: &[Color], bottom: &[Color]) -> bool {
    let bl = blocks(top);
    let top_ok = matches!(
        bl.as_slice(),
        [] | [_]
            | [(Color::Red, _), (Color::Blue, _)]
            | [(Color::Blue, _), (Color::Red, _)]
            | [(Color::Red, _), (Color::Blue, _), (Color::Red, _)]
    );
    top_ok && bottom.iter().all(|&c| c == Color::Blue)
}

fn recolor(colors: &[Color]) -> Vec<Color> {
    colors.iter().map(|c| c.other()).collect()
}

/// Closed-form test for a unique non-crossing matching on at most two rows.
pub fn classify_unique(beads: &BeadSequence) -> bool {
    if !matching_exists_criterion(beads) {
        return false;
    }
    let (top, bottom) = (beads.top_colors(), beads.bottom_colors());
    let variants = [
        (top.clone(), bottom.clone()),
        (bottom.clone(), top.clone()),
        (recolor(&top), recolor(&bottom)),
        (recolor(&bottom), recolor(&top)),
    ];
    variants.iter().any(|(t, b)| is_form_one(t, b) || is_form_two(t, b))
}

/// For a unique-matching pair, the total arc weight `w` after checking
/// `L = t^w L_swap` exactly; `None` when the matching is not unique.
pub fn swap_check(tuple: &ShapeTuple, n: usize) -> Result<Option<i64>> {
    let beads = bead_sequence(tuple)?;
    let ms = enumerate_noncrossing_matchings(&beads);
    if ms.len() != 1 {
        return Ok(None);
    }
    let w = matching_weight(&ms[0])?;
    let lhs = llt_poly(tuple, n)?;
    let rhs = llt_poly(&tuple.swap_adjacent(1)?, n)?.scale_t(w);
    if lhs != rhs {
        return Err(invariant(format!("L{tuple} != t^{w} L{}", tuple.swap_adjacent(1)?)));
    }
    Ok(Some(w))
}

/// Which of the signed step-count identities a walk satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkCheck {
    /// `A + B - C - D`: +1 top to top, -1 bottom to bottom, 0 across.
    pub direction: bool,
    /// `A - B + C - D` equals start label minus end label.
    pub labels: bool,
    /// No `A D A`, `D A D`, `B C B`, `C B C` runs.
    pub adjacency: bool,
    /// `A - B - C + D`: top to top +1 ending right, -1 ending left;
    /// bottom to bottom +1 ending left, -1 ending right; 0 across.
    pub corners: bool,
}

impl WalkCheck {
    pub fn all(&self) -> bool {
        self.direction && self.labels && self.adjacency && self.corners
    }
}

pub fn walk_statistics_check(walk: &Walk) -> WalkCheck {
    let StepCounts { a, b, c, d } = walk.counts;
    let (s, e) = (walk.start, walk.end);
    let direction_rhs = match (s.side, e.side) {
        (Side::Top, Side::Top) => 1,
        (Side::Bottom, Side::Bottom) => -1,
        _ => 0,
    };
    let corner_rhs = match (s.side, e.side) {
        (Side::Top, Side::Top) => (e.column > s.column) as i64 - (e.column < s.column) as i64,
        (Side::Bottom, Side::Bottom) => (e.column < s.column) as i64 - (e.column > s.column) as i64,
        _ => 0,
    };
    let forbidden = [
        [Switch::A, Switch::D, Switch::A],
        [Switch::D, Switch::A, Switch::D],
        [Switch::B, Switch::C, Switch::B],
        [Switch::C, Switch::B, Switch::C],
    ];
    WalkCheck {
        direction: a + b - c - d == direction_rhs,
        labels: a - b + c - d == s.label as i64 - e.label as i64,
        adjacency: !walk.switches.windows(3).any(|w| forbidden.iter().any(|f| f == w)),
        corners: a - b - c + d == corner_rhs,
    }
}
