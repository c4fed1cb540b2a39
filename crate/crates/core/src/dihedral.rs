//! The eight symmetries of the square lattice, used to normalize
//! configuration witnesses and to test detector invariance.

use crate::grid::{Cell, CellCollection, Point};

/// A dihedral transform, indexed 0..8: the low two bits count
/// counterclockwise quarter turns, bit 2 reflects `x -> -x` first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dihedral(pub u8);

impl Dihedral {
    pub const IDENTITY: Dihedral = Dihedral(0);

    pub fn all() -> [Dihedral; 8] {
        [0, 1, 2, 3, 4, 5, 6, 7].map(Dihedral)
    }

    pub fn apply_point(self, p: Point) -> Point {
        let mut q = if self.0 & 4 != 0 {
            Point::new(-p.x, p.y)
        } else {
            p
        };
        for _ in 0..(self.0 & 3) {
            q = Point::new(-q.y, q.x);
        }
        q
    }

    /// Apply to a direction vector; same as points (linear maps).
    pub fn apply_vector(self, v: (i64, i64)) -> (i64, i64) {
        let p = self.apply_point(Point::new(v.0, v.1));
        (p.x, p.y)
    }

    /// Image of a unit cell: transform its corners and take the new
    /// lower-left.
    pub fn apply_cell(self, c: Cell) -> Cell {
        let images: Vec<Point> = c.corners().iter().map(|&p| self.apply_point(p)).collect();
        let x = images.iter().map(|p| p.x).min().unwrap();
        let y = images.iter().map(|p| p.y).min().unwrap();
        Cell::new(x, y)
    }

    pub fn apply_collection(self, p: &CellCollection) -> CellCollection {
        CellCollection::new(p.cells().map(|c| self.apply_cell(c)))
            .expect("transform preserves non-emptiness")
    }

    /// The least-index transform sending the ordered orthogonal unit frame
    /// `(d1, d2)` to `(t1, t2)`.
    pub fn mapping_frame(
        d1: (i64, i64),
        d2: (i64, i64),
        t1: (i64, i64),
        t2: (i64, i64),
    ) -> Option<Dihedral> {
        Dihedral::all()
            .into_iter()
            .find(|g| g.apply_vector(d1) == t1 && g.apply_vector(d2) == t2)
    }
}
