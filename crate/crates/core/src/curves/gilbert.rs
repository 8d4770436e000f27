//! Generalized Hilbert traversal of an arbitrary `W x H` rectangle.
//!
//! The rectangle is described by a start corner and two edge vectors: `a`,
//! the major axis along which the path travels from entry to exit, and `b`,
//! the minor axis. Long thin blocks are cut in two along `a`; otherwise the
//! block is cut into the classic three-part Hilbert arrangement (half of `b`,
//! the full remainder, and a mirrored return leg). Split points are nudged to
//! even lengths so each sub-block can be entered and left through adjacent
//! cells.

use super::{map::CurveMap, CurveKind, GridPoint};
use crate::error::{domain, Result};

#[derive(Clone, Copy)]
struct Vec2 {
    x: i64,
    y: i64,
}

impl Vec2 {
    const fn new(x: i64, y: i64) -> Self {
        Vec2 { x, y }
    }

    fn len(self) -> i64 {
        (self.x + self.y).abs()
    }

    fn unit(self) -> Vec2 {
        Vec2::new(self.x.signum(), self.y.signum())
    }

    fn half(self) -> Vec2 {
        Vec2::new(self.x / 2, self.y / 2)
    }
}

impl std::ops::Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x + o.x, self.y + o.y)
    }
}

impl std::ops::Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        Vec2::new(self.x - o.x, self.y - o.y)
    }
}

impl std::ops::Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-self.x, -self.y)
    }
}

fn walk(out: &mut Vec<GridPoint>, mut at: Vec2, step: Vec2, count: i64) {
    for _ in 0..count {
        out.push(GridPoint::new(at.x as u32, at.y as u32));
        at = at + step;
    }
}

fn fill(out: &mut Vec<GridPoint>, origin: Vec2, a: Vec2, b: Vec2) {
    let w = a.len();
    let h = b.len();
    let (da, db) = (a.unit(), b.unit());

    if h == 1 {
        walk(out, origin, da, w);
        return;
    }
    if w == 1 {
        walk(out, origin, db, h);
        return;
    }

    let mut a2 = a.half();
    let mut b2 = b.half();

    if 2 * w > 3 * h {
        if a2.len() % 2 != 0 && w > 2 {
            a2 = a2 + da;
        }
        fill(out, origin, a2, b);
        fill(out, origin + a2, a - a2, b);
    } else {
        if b2.len() % 2 != 0 && h > 2 {
            b2 = b2 + db;
        }
        fill(out, origin, b2, a2);
        fill(out, origin + b2, a, b - b2);
        fill(out, origin + (a - da) + (b2 - db), -b2, -(a - a2));
    }
}

/// Hamiltonian path over a `width x height` grid with every step 4-adjacent.
///
/// The path starts at `(0, 0)`. When exactly one side is odd the path runs
/// along the even side, since a corner-to-corner path along an odd side over an
/// even number of rows cannot avoid a diagonal step.
pub fn generalized_hilbert(width: u32, height: u32) -> Result<CurveMap> {
    let path = generalized_hilbert_path(width, height)?;
    CurveMap::from_path(CurveKind::GeneralizedHilbert, width, height, path)
}

pub(crate) fn generalized_hilbert_path(width: u32, height: u32) -> Result<Vec<GridPoint>> {
    if width == 0 || height == 0 {
        return Err(domain(format!(
            "grid dimensions must be >= 1, got {width}x{height}"
        )));
    }
    let (w, h) = (i64::from(width), i64::from(height));
    let major_is_x = if (w % 2) != (h % 2) {
        w % 2 == 0
    } else {
        w >= h
    };

    let mut out = Vec::with_capacity((w * h) as usize);
    if major_is_x {
        fill(&mut out, Vec2::new(0, 0), Vec2::new(w, 0), Vec2::new(0, h));
    } else {
        fill(&mut out, Vec2::new(0, 0), Vec2::new(0, h), Vec2::new(w, 0));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(w: u32, h: u32) {
        let path = generalized_hilbert_path(w, h).unwrap();
        assert_eq!(path.len(), (w * h) as usize);
        let mut seen = vec![false; (w * h) as usize];
        for p in &path {
            assert!(p.x < w && p.y < h);
            let i = (p.y * w + p.x) as usize;
            assert!(!seen[i], "{w}x{h}: {p} visited twice");
            seen[i] = true;
        }
        for pair in path.windows(2) {
            assert_eq!(
                pair[0].manhattan(pair[1]),
                1,
                "{w}x{h}: {} -> {}",
                pair[0],
                pair[1]
            );
        }
    }

    #[test]
    fn column_scan() {
        let path = generalized_hilbert_path(1, 5).unwrap();
        let expect: Vec<_> = (0..5).map(|y| GridPoint::new(0, y)).collect();
        assert_eq!(path, expect);
    }

    #[test]
    fn small_and_paper_sizes() {
        check(2, 2);
        check(16, 9);
        check(14, 14);
        check(9, 16);
        check(1, 1);
        check(3, 2);
        check(2, 3);
    }

    #[test]
    fn exhaustive_up_to_48() {
        for w in 1..=48 {
            for h in 1..=48 {
                check(w, h);
            }
        }
    }

    #[test]
    fn zero_dimension() {
        assert!(generalized_hilbert_path(0, 3).is_err());
        assert!(generalized_hilbert_path(3, 0).is_err());
    }
}
