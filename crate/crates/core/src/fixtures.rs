//! The fixture library shipped with the repository (`fixtures/*.grid`).
//!
//! F1 single cell; F2 the 2x2 square; F3 the L-tromino; F4 the 3x3 ring;
//! F5 the corner-touching diagonal pair; F6 a weakly closed path with
//! hooking corner (1,1); F7 the smallest weakly closed path carrying none
//! of the four prime configurations, found by the exhaustive sweep.

use crate::grid::CellCollection;
use crate::io::parse_ascii;

pub const F1_GRID: &str = include_str!("../../../fixtures/f1.grid");
pub const F2_GRID: &str = include_str!("../../../fixtures/f2.grid");
pub const F3_GRID: &str = include_str!("../../../fixtures/f3.grid");
pub const F4_GRID: &str = include_str!("../../../fixtures/f4.grid");
pub const F5_GRID: &str = include_str!("../../../fixtures/f5.grid");
pub const F6_GRID: &str = include_str!("../../../fixtures/f6.grid");
pub const F7_GRID: &str = include_str!("../../../fixtures/f7.grid");

fn load(name: &str, text: &str) -> CellCollection {
    parse_ascii(text).unwrap_or_else(|e| panic!("fixture {name} is malformed: {e}"))
}

pub fn f1() -> CellCollection {
    load("f1", F1_GRID)
}

pub fn f2() -> CellCollection {
    load("f2", F2_GRID)
}

pub fn f3() -> CellCollection {
    load("f3", F3_GRID)
}

pub fn f4() -> CellCollection {
    load("f4", F4_GRID)
}

pub fn f5() -> CellCollection {
    load("f5", F5_GRID)
}

pub fn f6() -> CellCollection {
    load("f6", F6_GRID)
}

pub fn f7() -> CellCollection {
    load("f7", F7_GRID)
}

/// All fixtures with their names, in order.
pub fn all() -> Vec<(&'static str, CellCollection)> {
    vec![
        ("f1", f1()),
        ("f2", f2()),
        ("f3", f3()),
        ("f4", f4()),
        ("f5", f5()),
        ("f6", f6()),
        ("f7", f7()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::CellCollection;

    #[test]
    fn fixture_coordinates_match_their_definitions() {
        assert_eq!(f1(), CellCollection::from_coords([(0, 0)]).unwrap());
        assert_eq!(
            f2(),
            CellCollection::from_coords([(0, 0), (1, 0), (0, 1), (1, 1)]).unwrap()
        );
        assert_eq!(
            f3(),
            CellCollection::from_coords([(0, 0), (1, 0), (0, 1)]).unwrap()
        );
        assert_eq!(
            f4(),
            CellCollection::from_coords([
                (0, 0),
                (1, 0),
                (2, 0),
                (0, 1),
                (2, 1),
                (0, 2),
                (1, 2),
                (2, 2)
            ])
            .unwrap()
        );
        assert_eq!(f5(), CellCollection::from_coords([(0, 0), (1, 1)]).unwrap());
        assert_eq!(
            f6(),
            CellCollection::from_coords([
                (1, 0),
                (2, 0),
                (3, 0),
                (3, 1),
                (3, 2),
                (2, 2),
                (1, 2),
                (0, 2),
                (0, 1)
            ])
            .unwrap()
        );
    }
}
