//! Constant-`z` slices of the tetrahedron.

use super::{in_tetrahedron, is_simulable, DiagonalPoint, GEOMETRY_TOL};
use crate::error::{Error, Result};

/// The tetrahedron's slice at `z = z0`: `|x + y| <= 1 + z0` and
/// `|x - y| <= 1 - z0`, a rectangle rotated by 45 degrees.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SliceRect {
    /// Counter-clockwise from the corner on the positive `x` side.
    pub corners: [[f64; 2]; 4],
    pub area: f64,
}

impl SliceRect {
    pub fn at(z0: f64) -> Self {
        SliceRect {
            corners: [[1.0, z0], [z0, 1.0], [-1.0, -z0], [-z0, -1.0]],
            area: 2.0 * (1.0 - z0 * z0),
        }
    }
}

/// Grid rasterization of the simulable part of one slice over `[-1, 1]^2`.
#[derive(Clone, Debug, PartialEq)]
pub struct CrossSection {
    pub z0: f64,
    pub grid: usize,
    pub rect: SliceRect,
    /// Row-major, row 0 at `y = -1`, column 0 at `x = -1`.
    pub mask: Vec<bool>,
    /// Shaded cell count times cell area.
    pub area: f64,
    /// Simulable share of the slice. At `|z0| = 1` the slice is a segment
    /// and this is the share of its length.
    pub fraction: f64,
}

impl CrossSection {
    pub fn cell_size(&self) -> f64 {
        2.0 / self.grid as f64
    }

    pub fn is_shaded(&self, row: usize, col: usize) -> bool {
        self.mask[row * self.grid + col]
    }

    /// `(x, y)` of a cell center.
    pub fn cell_center(&self, row: usize, col: usize) -> (f64, f64) {
        cell_center(self.grid, row, col)
    }

    pub fn shaded_cells(&self) -> usize {
        self.mask.iter().filter(|m| **m).count()
    }
}

fn cell_center(grid: usize, row: usize, col: usize) -> (f64, f64) {
    let h = 2.0 / grid as f64;
    (-1.0 + (col as f64 + 0.5) * h, -1.0 + (row as f64 + 0.5) * h)
}

/// Simulable share of the segment the slice collapses to at `|z0| = 1`.
fn segment_fraction(z0: f64, samples: usize) -> f64 {
    let hits = (0..samples)
        .filter(|k| {
            let t = -1.0 + (*k as f64 + 0.5) * 2.0 / samples as f64;
            is_simulable(DiagonalPoint::new(t, z0 * t, z0), GEOMETRY_TOL)
        })
        .count();
    hits as f64 / samples as f64
}

pub fn cross_section(z0: f64, grid: usize) -> Result<CrossSection> {
    if !(-1.0..=1.0).contains(&z0) {
        return Err(Error::OutOfRange {
            name: "z0",
            value: z0,
            range: "[-1, 1]",
        });
    }
    if grid == 0 {
        return Err(Error::OutOfRange {
            name: "grid",
            value: 0.0,
            range: ">= 1",
        });
    }
    let mut mask = Vec::with_capacity(grid * grid);
    for row in 0..grid {
        for col in 0..grid {
            let (x, y) = cell_center(grid, row, col);
            let p = DiagonalPoint::new(x, y, z0);
            mask.push(in_tetrahedron(p, 0.0) && is_simulable(p, GEOMETRY_TOL));
        }
    }
    let h = 2.0 / grid as f64;
    let area = mask.iter().filter(|m| **m).count() as f64 * h * h;
    let rect = SliceRect::at(z0);
    let fraction = if rect.area > 0.0 {
        area / rect.area
    } else {
        segment_fraction(z0, grid)
    };
    Ok(CrossSection {
        z0,
        grid,
        rect,
        mask,
        area,
        fraction,
    })
}
