//! Integer-lattice geometry: cells, collections, connectivity, holes,
//! intervals, edge intervals and blocks.
//!
//! Everything here is exact integer arithmetic on `Z^2`. Collections are
//! immutable after construction and all operations are pure functions, so
//! values can be shared freely across threads.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A lattice point. The derived ordering is *reading order* `(y, x)`,
/// which fixes a deterministic ordering for every list this crate emits.
/// The componentwise partial order of the plane is exposed separately as
/// [`Point::le_componentwise`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Componentwise `<=`, the partial order that defines intervals.
    pub fn le_componentwise(self, other: Point) -> bool {
        self.x <= other.x && self.y <= other.y
    }

    pub fn offset(self, dx: i64, dy: i64) -> Point {
        Point::new(self.x + dx, self.y + dy)
    }
}

impl Ord for Point {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.y, self.x).cmp(&(other.y, other.x))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(x, y)
}

/// A unit cell, identified by its lower-left corner. The cell occupies the
/// interval `[lower_left, lower_left + (1,1)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub lower_left: Point,
}

impl Cell {
    pub const fn new(x: i64, y: i64) -> Self {
        Cell {
            lower_left: Point::new(x, y),
        }
    }

    pub fn at(p: Point) -> Self {
        Cell { lower_left: p }
    }

    /// The four corners, in reading order.
    pub fn corners(self) -> [Point; 4] {
        let Point { x, y } = self.lower_left;
        [pt(x, y), pt(x + 1, y), pt(x, y + 1), pt(x + 1, y + 1)]
    }

    pub fn interval(self) -> LatticeInterval {
        LatticeInterval {
            lo: self.lower_left,
            hi: self.lower_left.offset(1, 1),
        }
    }

    /// True when the two cells share a full edge.
    pub fn edge_adjacent(self, other: Cell) -> bool {
        let dx = (self.lower_left.x - other.lower_left.x).abs();
        let dy = (self.lower_left.y - other.lower_left.y).abs();
        dx + dy == 1
    }

    /// True when the two cells share at least one corner (edges count).
    pub fn vertex_adjacent(self, other: Cell) -> bool {
        let dx = (self.lower_left.x - other.lower_left.x).abs();
        let dy = (self.lower_left.y - other.lower_left.y).abs();
        dx <= 1 && dy <= 1 && (dx, dy) != (0, 0)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.lower_left)
    }
}

/// Axis orientation for edge intervals and blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Horizontal,
    Vertical,
}

impl Orientation {
    pub fn flipped(self) -> Orientation {
        match self {
            Orientation::Horizontal => Orientation::Vertical,
            Orientation::Vertical => Orientation::Horizontal,
        }
    }
}

/// A lattice interval `[lo, hi]` with `lo <= hi` componentwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LatticeInterval {
    pub lo: Point,
    pub hi: Point,
}

impl LatticeInterval {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        if lo.le_componentwise(hi) {
            Ok(LatticeInterval { lo, hi })
        } else {
            Err(Error::DegenerateInterval)
        }
    }

    /// Bounding interval of two points in arbitrary relative position.
    pub fn hull(a: Point, b: Point) -> Self {
        LatticeInterval {
            lo: pt(a.x.min(b.x), a.y.min(b.y)),
            hi: pt(a.x.max(b.x), a.y.max(b.y)),
        }
    }

    /// Proper means positive extent in both directions.
    pub fn is_proper(self) -> bool {
        self.lo.x < self.hi.x && self.lo.y < self.hi.y
    }

    /// Diagonal corners `{lo, hi}`.
    pub fn diagonal_corners(self) -> [Point; 2] {
        [self.lo, self.hi]
    }

    /// Anti-diagonal corners `{(lo.x, hi.y), (hi.x, lo.y)}`.
    pub fn anti_diagonal_corners(self) -> [Point; 2] {
        [pt(self.lo.x, self.hi.y), pt(self.hi.x, self.lo.y)]
    }

    pub fn corners(self) -> [Point; 4] {
        [
            self.lo,
            pt(self.hi.x, self.lo.y),
            pt(self.lo.x, self.hi.y),
            self.hi,
        ]
    }

    /// The corner diagonally opposite `p` across the rectangle.
    /// `p` must be one of the four corners.
    pub fn opposite_corner(self, p: Point) -> Point {
        debug_assert!(self.corners().contains(&p));
        pt(
            self.lo.x + self.hi.x - p.x,
            self.lo.y + self.hi.y - p.y,
        )
    }

    pub fn contains_point(self, p: Point) -> bool {
        self.lo.le_componentwise(p) && p.le_componentwise(self.hi)
    }

    /// All lattice points of the interval, in reading order.
    pub fn points(self) -> Vec<Point> {
        let mut out = Vec::new();
        for y in self.lo.y..=self.hi.y {
            for x in self.lo.x..=self.hi.x {
                out.push(pt(x, y));
            }
        }
        out
    }

    /// Intersection as a set of lattice points, empty when disjoint.
    pub fn intersection(self, other: LatticeInterval) -> Option<LatticeInterval> {
        let lo = pt(self.lo.x.max(other.lo.x), self.lo.y.max(other.lo.y));
        let hi = pt(self.hi.x.min(other.hi.x), self.hi.y.min(other.hi.y));
        if lo.le_componentwise(hi) {
            Some(LatticeInterval { lo, hi })
        } else {
            None
        }
    }

    /// True when the intersection with `other` is exactly the single point `p`.
    pub fn meets_exactly_at(self, other: LatticeInterval, p: Point) -> bool {
        self.intersection(other) == Some(LatticeInterval { lo: p, hi: p })
    }
}

impl fmt::Display for LatticeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.lo, self.hi)
    }
}

/// A maximal (or plain) run of collection edges on one gridline.
///
/// For a horizontal interval `line` is the fixed `y` and `span` the `x`
/// range of its endpoints; vertically the roles swap. A span always covers
/// at least one unit edge, so `span.0 < span.1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgeInterval {
    pub orientation: Orientation,
    pub line: i64,
    pub span: (i64, i64),
    pub maximal: bool,
}

impl EdgeInterval {
    pub fn endpoints(self) -> (Point, Point) {
        match self.orientation {
            Orientation::Horizontal => (pt(self.span.0, self.line), pt(self.span.1, self.line)),
            Orientation::Vertical => (pt(self.line, self.span.0), pt(self.line, self.span.1)),
        }
    }

    pub fn as_interval(self) -> LatticeInterval {
        let (a, b) = self.endpoints();
        LatticeInterval { lo: a, hi: b }
    }

    pub fn contains_point(self, p: Point) -> bool {
        match self.orientation {
            Orientation::Horizontal => p.y == self.line && self.span.0 <= p.x && p.x <= self.span.1,
            Orientation::Vertical => p.x == self.line && self.span.0 <= p.y && p.y <= self.span.1,
        }
    }

    /// Geometric crossing point with an interval of the other orientation.
    pub fn crossing(self, other: EdgeInterval) -> Option<Point> {
        if self.orientation == other.orientation {
            return None;
        }
        let (v, h) = match self.orientation {
            Orientation::Vertical => (self, other),
            Orientation::Horizontal => (other, self),
        };
        let p = pt(v.line, h.line);
        if v.contains_point(p) && h.contains_point(p) {
            Some(p)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.orientation {
            Orientation::Horizontal => "H",
            Orientation::Vertical => "V",
        };
        write!(f, "{} line={} span=[{},{}]", tag, self.line, self.span.0, self.span.1)
    }
}

/// A run of consecutive collinear cells.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Block {
    pub orientation: Orientation,
    pub cells: Vec<Cell>,
    pub maximal: bool,
}

impl Block {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Vertex rectangle of the whole block.
    pub fn vertex_interval(&self) -> LatticeInterval {
        let first = self.cells.first().expect("block is non-empty");
        let last = self.cells.last().expect("block is non-empty");
        LatticeInterval {
            lo: first.lower_left,
            hi: last.lower_left.offset(1, 1),
        }
    }

    /// Vertex set of the block as a sorted list.
    pub fn vertices(&self) -> Vec<Point> {
        self.vertex_interval().points()
    }

    pub fn contains_cell(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }
}

/// A non-empty finite set of unit cells with cached vertex set and
/// bounding box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellCollection {
    cells: BTreeSet<Cell>,
    vertex_set: BTreeSet<Point>,
    bounding_box: LatticeInterval,
}

impl CellCollection {
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self> {
        let cells: BTreeSet<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(Error::EmptyCollection);
        }
        let mut vertex_set = BTreeSet::new();
        for c in &cells {
            vertex_set.extend(c.corners());
        }
        let min_x = cells.iter().map(|c| c.lower_left.x).min().unwrap();
        let min_y = cells.iter().map(|c| c.lower_left.y).min().unwrap();
        let max_x = cells.iter().map(|c| c.lower_left.x).max().unwrap();
        let max_y = cells.iter().map(|c| c.lower_left.y).max().unwrap();
        let bounding_box = LatticeInterval {
            lo: pt(min_x, min_y),
            hi: pt(max_x + 1, max_y + 1),
        };
        Ok(CellCollection {
            cells,
            vertex_set,
            bounding_box,
        })
    }

    pub fn from_coords<I: IntoIterator<Item = (i64, i64)>>(coords: I) -> Result<Self> {
        Self::new(coords.into_iter().map(|(x, y)| Cell::new(x, y)))
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }

    pub fn contains_vertex(&self, p: Point) -> bool {
        self.vertex_set.contains(&p)
    }

    /// The vertex set: corners of all cells, deduplicated, in reading order.
    pub fn vertices(&self) -> &BTreeSet<Point> {
        &self.vertex_set
    }

    pub fn bounding_box(&self) -> LatticeInterval {
        self.bounding_box
    }

    /// Translate so the bounding box's lower-left corner is the origin.
    pub fn canonical_translate(&self) -> CellCollection {
        let lo = self.bounding_box.lo;
        self.translated(-lo.x, -lo.y)
    }

    pub fn translated(&self, dx: i64, dy: i64) -> CellCollection {
        CellCollection::new(self.cells().map(|c| Cell::at(c.lower_left.offset(dx, dy))))
            .expect("translation preserves non-emptiness")
    }

    /// Partition into edge-adjacency components; each component is a polyomino.
    pub fn connected_components(&self) -> Vec<CellCollection> {
        self.components_by(|a, b| a.edge_adjacent(b))
    }

    /// True when the cell graph with vertex-contact adjacency is connected.
    pub fn is_weakly_connected(&self) -> bool {
        self.components_by(|a, b| a.vertex_adjacent(b)).len() == 1
    }

    /// True when the collection is edge-connected.
    pub fn is_polyomino(&self) -> bool {
        self.connected_components().len() == 1
    }

    fn components_by(&self, adjacent: impl Fn(Cell, Cell) -> bool) -> Vec<CellCollection> {
        let all: Vec<Cell> = self.cells().collect();
        let mut seen = vec![false; all.len()];
        let mut components = Vec::new();
        for start in 0..all.len() {
            if seen[start] {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            seen[start] = true;
            let mut member = vec![all[start]];
            while let Some(i) = queue.pop_front() {
                for (j, &c) in all.iter().enumerate() {
                    if !seen[j] && adjacent(all[i], c) {
                        seen[j] = true;
                        member.push(c);
                        queue.push_back(j);
                    }
                }
            }
            components.push(CellCollection::new(member).expect("component is non-empty"));
        }
        components
    }

    /// Holes: edge-connected components of the enclosed complement.
    ///
    /// The complement flood fill runs on the bounding box inflated by one
    /// cell ring, seeded from the inflated border, which gives a finite
    /// certificate of reachability to infinity.
    pub fn holes(&self) -> Vec<CellCollection> {
        let lo = self.bounding_box.lo.offset(-1, -1);
        let hi = self.bounding_box.hi; // cells span lo..hi in lower-left coords
        let width = (hi.x - lo.x + 1) as usize;
        let height = (hi.y - lo.y + 1) as usize;
        let idx = |x: i64, y: i64| -> usize { ((y - lo.y) as usize) * width + ((x - lo.x) as usize) };

        let mut blocked = vec![false; width * height];
        for c in self.cells() {
            blocked[idx(c.lower_left.x, c.lower_left.y)] = true;
        }
        let mut outside = vec![false; width * height];
        let mut queue = VecDeque::new();
        // Every border cell of the inflated box is outside the collection.
        for x in lo.x..=hi.x {
            for y in [lo.y, hi.y] {
                if !outside[idx(x, y)] {
                    outside[idx(x, y)] = true;
                    queue.push_back((x, y));
                }
            }
        }
        for y in lo.y..=hi.y {
            for x in [lo.x, hi.x] {
                if !outside[idx(x, y)] {
                    outside[idx(x, y)] = true;
                    queue.push_back((x, y));
                }
            }
        }
        while let Some((x, y)) = queue.pop_front() {
            for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
                let (nx, ny) = (x + dx, y + dy);
                if nx < lo.x || nx > hi.x || ny < lo.y || ny > hi.y {
                    continue;
                }
                let i = idx(nx, ny);
                if !outside[i] && !blocked[i] {
                    outside[i] = true;
                    queue.push_back((nx, ny));
                }
            }
        }
        let mut enclosed = Vec::new();
        for y in lo.y..=hi.y {
            for x in lo.x..=hi.x {
                let i = idx(x, y);
                if !blocked[i] && !outside[i] {
                    enclosed.push(Cell::new(x, y));
                }
            }
        }
        if enclosed.is_empty() {
            return Vec::new();
        }
        CellCollection::new(enclosed)
            .expect("non-empty by check above")
            .connected_components()
    }

    /// No holes.
    pub fn is_simple(&self) -> bool {
        self.holes().is_empty()
    }

    /// All maximal edge intervals of one orientation. Together they cover
    /// `E(P)` of that orientation, pairwise disjoint as edge sets.
    pub fn maximal_edge_intervals(&self, o: Orientation) -> Vec<EdgeInterval> {
        // Collect unit edges as (line, offset of the edge start along the line).
        let mut per_line: BTreeMap<i64, BTreeSet<i64>> = BTreeMap::new();
        for c in self.cells() {
            let Point { x, y } = c.lower_left;
            match o {
                Orientation::Horizontal => {
                    per_line.entry(y).or_default().insert(x);
                    per_line.entry(y + 1).or_default().insert(x);
                }
                Orientation::Vertical => {
                    per_line.entry(x).or_default().insert(y);
                    per_line.entry(x + 1).or_default().insert(y);
                }
            }
        }
        let mut out = Vec::new();
        for (line, starts) in per_line {
            let mut run_start: Option<i64> = None;
            let mut prev: Option<i64> = None;
            let mut flush = |start: Option<i64>, end: Option<i64>, out: &mut Vec<EdgeInterval>| {
                if let (Some(s), Some(e)) = (start, end) {
                    out.push(EdgeInterval {
                        orientation: o,
                        line,
                        span: (s, e + 1),
                        maximal: true,
                    });
                }
            };
            for s in starts {
                match prev {
                    Some(p) if s == p + 1 => {}
                    Some(p) => {
                        flush(run_start, Some(p), &mut out);
                        run_start = Some(s);
                    }
                    None => run_start = Some(s),
                }
                prev = Some(s);
            }
            flush(run_start, prev, &mut out);
        }
        out.sort();
        out
    }

    /// Both orientations, vertical first, in deterministic order.
    pub fn all_maximal_edge_intervals(&self) -> Vec<EdgeInterval> {
        let mut v = self.maximal_edge_intervals(Orientation::Vertical);
        v.extend(self.maximal_edge_intervals(Orientation::Horizontal));
        v
    }

    /// The unique maximal edge interval of orientation `o` through `p`,
    /// if `p` lies on one.
    pub fn maximal_edge_interval_through(&self, p: Point, o: Orientation) -> Option<EdgeInterval> {
        self.maximal_edge_intervals(o)
            .into_iter()
            .find(|e| e.contains_point(p))
    }

    /// True when both points lie on one common maximal edge interval.
    pub fn on_common_maximal_edge_interval(&self, a: Point, b: Point) -> bool {
        self.all_maximal_edge_intervals()
            .iter()
            .any(|e| e.contains_point(a) && e.contains_point(b))
    }

    /// All proper intervals whose full cell interval lies in the collection,
    /// single cells included.
    pub fn inner_intervals(&self) -> Vec<LatticeInterval> {
        let mut out = Vec::new();
        // An inner interval is determined by its lowest-left and
        // uppermost-right cells, so scanning cell pairs is exhaustive.
        for lo_cell in self.cells() {
            for hi_cell in self.cells() {
                if !lo_cell.lower_left.le_componentwise(hi_cell.lower_left) {
                    continue;
                }
                let interval = LatticeInterval {
                    lo: lo_cell.lower_left,
                    hi: hi_cell.lower_left.offset(1, 1),
                };
                if self.interval_is_inner(interval) {
                    out.push(interval);
                }
            }
        }
        out.sort();
        out
    }

    /// True iff `i` is proper and all its cells belong to the collection.
    pub fn interval_is_inner(&self, i: LatticeInterval) -> bool {
        if !i.is_proper() {
            return false;
        }
        for y in i.lo.y..i.hi.y {
            for x in i.lo.x..i.hi.x {
                if !self.contains(Cell::new(x, y)) {
                    return false;
                }
            }
        }
        true
    }

    /// Maximal blocks of one orientation; they partition the cells.
    pub fn maximal_blocks(&self, o: Orientation) -> Vec<Block> {
        let mut per_line: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
        for c in self.cells() {
            let Point { x, y } = c.lower_left;
            match o {
                Orientation::Horizontal => per_line.entry(y).or_default().push(x),
                Orientation::Vertical => per_line.entry(x).or_default().push(y),
            }
        }
        let mut out = Vec::new();
        for (line, mut offsets) in per_line {
            offsets.sort();
            let mut run: Vec<i64> = Vec::new();
            for s in offsets {
                if let Some(&last) = run.last() {
                    if s != last + 1 {
                        out.push(make_block(o, line, &run));
                        run.clear();
                    }
                }
                run.push(s);
            }
            if !run.is_empty() {
                out.push(make_block(o, line, &run));
            }
        }
        out.sort();
        out
    }

    /// The maximal block of orientation `o` containing `c`.
    pub fn maximal_block_through(&self, c: Cell, o: Orientation) -> Option<Block> {
        self.maximal_blocks(o)
            .into_iter()
            .find(|b| b.contains_cell(c))
    }

    /// Cells edge-adjacent to `c` inside the collection.
    pub fn edge_neighbors(&self, c: Cell) -> Vec<Cell> {
        let Point { x, y } = c.lower_left;
        [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)]
            .into_iter()
            .map(|(nx, ny)| Cell::new(nx, ny))
            .filter(|n| self.contains(*n))
            .collect()
    }
}

fn make_block(o: Orientation, line: i64, offsets: &[i64]) -> Block {
    let cells = offsets
        .iter()
        .map(|&s| match o {
            Orientation::Horizontal => Cell::new(s, line),
            Orientation::Vertical => Cell::new(line, s),
        })
        .collect();
    Block {
        orientation: o,
        cells,
        maximal: true,
    }
}

/// All unit cells inside a proper interval; count = width x height.
pub fn cells_of_interval(i: LatticeInterval) -> Result<Vec<Cell>> {
    if !i.is_proper() {
        return Err(Error::DegenerateInterval);
    }
    let mut out = Vec::new();
    for y in i.lo.y..i.hi.y {
        for x in i.lo.x..i.hi.x {
            out.push(Cell::new(x, y));
        }
    }
    Ok(out)
}

/// Set of vertices shared by two cell sets, used by the path classifiers.
pub fn shared_vertices(a: &[Cell], b: &[Cell]) -> BTreeSet<Point> {
    let va: HashSet<Point> = a.iter().flat_map(|c| c.corners()).collect();
    b.iter()
        .flat_map(|c| c.corners())
        .filter(|p| va.contains(p))
        .collect()
}
