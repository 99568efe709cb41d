//! Windows, `m`-blocks, `m`-strips, parents, and distinguished vertices.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::edge::Orientation;
use super::Vertex;
use crate::error::{GeoError, Result};

/// Maximum extent of a window along either axis.
pub const MAX_WINDOW_EXTENT: u64 = 1 << 31;

/// A finite axis-aligned rectangle `[x_min, x_max] x [y_min, y_max]` of `Z^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub x_min: i64,
    pub x_max: i64,
    pub y_min: i64,
    pub y_max: i64,
}

impl Window {
    pub fn new(x_min: i64, x_max: i64, y_min: i64, y_max: i64) -> Result<Self> {
        if x_min > x_max || y_min > y_max {
            return Err(GeoError::InvalidWindow(format!(
                "empty window [{x_min}, {x_max}] x [{y_min}, {y_max}]"
            )));
        }
        let w = Window { x_min, x_max, y_min, y_max };
        if w.width() > MAX_WINDOW_EXTENT || w.height() > MAX_WINDOW_EXTENT {
            return Err(GeoError::InvalidWindow(format!(
                "extent {}x{} exceeds 2^31 per axis",
                w.width(),
                w.height()
            )));
        }
        Ok(w)
    }

    /// Square window `[-r, r]^2`.
    pub fn centered(r: i64) -> Result<Self> {
        Window::new(-r, r, -r, r)
    }

    /// Smallest window containing both vertices.
    pub fn bounding(u: Vertex, v: Vertex) -> Result<Self> {
        Window::new(u.x.min(v.x), u.x.max(v.x), u.y.min(v.y), u.y.max(v.y))
    }

    /// Grow by `k` on every side.
    pub fn inflate(&self, k: u64) -> Result<Self> {
        let k = i64::try_from(k).map_err(|_| GeoError::Overflow("window inflation"))?;
        let of = GeoError::Overflow("window inflation");
        Window::new(
            self.x_min.checked_sub(k).ok_or(of.clone())?,
            self.x_max.checked_add(k).ok_or(of.clone())?,
            self.y_min.checked_sub(k).ok_or(of.clone())?,
            self.y_max.checked_add(k).ok_or(of)?,
        )
    }

    pub fn union(&self, other: &Window) -> Result<Self> {
        Window::new(
            self.x_min.min(other.x_min),
            self.x_max.max(other.x_max),
            self.y_min.min(other.y_min),
            self.y_max.max(other.y_max),
        )
    }

    pub fn width(&self) -> u64 {
        (self.x_max as i128 - self.x_min as i128 + 1) as u64
    }

    pub fn height(&self) -> u64 {
        (self.y_max as i128 - self.y_min as i128 + 1) as u64
    }

    pub fn cells(&self) -> u64 {
        self.width().saturating_mul(self.height())
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        v.x >= self.x_min && v.x <= self.x_max && v.y >= self.y_min && v.y <= self.y_max
    }

    /// Row-major index (rows are `y`, ascending).
    #[inline]
    pub fn index(&self, v: Vertex) -> Option<usize> {
        if !self.contains(v) {
            return None;
        }
        let col = (v.x - self.x_min) as u64;
        let row = (v.y - self.y_min) as u64;
        Some((row * self.width() + col) as usize)
    }

    #[inline]
    pub fn vertex_at(&self, idx: usize) -> Vertex {
        let w = self.width();
        let idx = idx as u64;
        Vertex::new(self.x_min + (idx % w) as i64, self.y_min + (idx / w) as i64)
    }

    /// All vertices, row-major.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (self.y_min..=self.y_max).flat_map(move |y| (self.x_min..=self.x_max).map(move |x| Vertex::new(x, y)))
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.x_min, self.x_max, self.y_min, self.y_max)
    }
}

/// Parses `"xmin,xmax,ymin,ymax"`.
impl FromStr for Window {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 4 {
            return Err(format!("expected \"xmin,xmax,ymin,ymax\", got {s:?}"));
        }
        let mut vals = [0i64; 4];
        for (slot, part) in vals.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|e| format!("bad window bound {part:?}: {e}"))?;
        }
        Window::new(vals[0], vals[1], vals[2], vals[3]).map_err(|e| e.to_string())
    }
}

/// An `m`-block `[m x, m x + m] x [m y, m y + m]`, open or closed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockRef {
    pub scale: i64,
    pub ix: i64,
    pub iy: i64,
    pub closed: bool,
}

impl BlockRef {
    pub fn contains(&self, v: Vertex) -> bool {
        in_interval(v.x, self.scale, self.ix, self.closed) && in_interval(v.y, self.scale, self.iy, self.closed)
    }

    pub fn open(&self) -> BlockRef {
        BlockRef { closed: false, ..*self }
    }

    pub fn closed(&self) -> BlockRef {
        BlockRef { closed: true, ..*self }
    }

    /// The unique open `m`-block containing `v`, if `v` avoids every `m`-line.
    pub fn open_containing(v: Vertex, m: i64) -> Option<BlockRef> {
        if v.x.rem_euclid(m) == 0 || v.y.rem_euclid(m) == 0 {
            return None;
        }
        Some(BlockRef { scale: m, ix: v.x.div_euclid(m), iy: v.y.div_euclid(m), closed: false })
    }

    /// Every closed `m`-block containing `v` (1, 2 or 4 of them).
    pub fn closed_containing(v: Vertex, m: i64) -> Vec<BlockRef> {
        let xs = interval_indices(v.x, m);
        let ys = interval_indices(v.y, m);
        let mut out = Vec::with_capacity(4);
        for &ix in &xs {
            for &iy in &ys {
                out.push(BlockRef { scale: m, ix, iy, closed: true });
            }
        }
        out
    }

    /// Which open side of the block `v` lies on, if any.
    pub fn open_side_of(&self, v: Vertex) -> Option<BlockSide> {
        let m = self.scale;
        let (x0, y0) = (self.ix * m, self.iy * m);
        let inside_x = v.x > x0 && v.x < x0 + m;
        let inside_y = v.y > y0 && v.y < y0 + m;
        match () {
            _ if inside_x && v.y == y0 => Some(BlockSide::Bottom),
            _ if inside_x && v.y == y0 + m => Some(BlockSide::Top),
            _ if inside_y && v.x == x0 => Some(BlockSide::Left),
            _ if inside_y && v.x == x0 + m => Some(BlockSide::Right),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BlockSide {
    Bottom,
    Top,
    Left,
    Right,
}

impl BlockSide {
    pub fn opposite(self) -> BlockSide {
        match self {
            BlockSide::Bottom => BlockSide::Top,
            BlockSide::Top => BlockSide::Bottom,
            BlockSide::Left => BlockSide::Right,
            BlockSide::Right => BlockSide::Left,
        }
    }
}

/// A horizontal strip `Z x [m i, m i + m]` or vertical strip `[m i, m i + m] x Z`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StripRef {
    pub scale: i64,
    pub axis: Orientation,
    pub index: i64,
    pub closed: bool,
}

impl StripRef {
    pub fn contains(&self, v: Vertex) -> bool {
        match self.axis {
            Orientation::Horizontal => in_interval(v.y, self.scale, self.index, self.closed),
            Orientation::Vertical => in_interval(v.x, self.scale, self.index, self.closed),
        }
    }

    /// The open strip of the given axis containing every vertex of `path`, if any.
    pub fn open_containing_all(path: &[Vertex], m: i64, axis: Orientation) -> Option<StripRef> {
        let first = *path.first()?;
        let coord = |v: Vertex| match axis {
            Orientation::Horizontal => v.y,
            Orientation::Vertical => v.x,
        };
        let c0 = coord(first);
        if c0.rem_euclid(m) == 0 {
            return None;
        }
        let strip = StripRef { scale: m, axis, index: c0.div_euclid(m), closed: false };
        path.iter().all(|&v| strip.contains(v)).then_some(strip)
    }
}

#[inline]
fn in_interval(c: i64, m: i64, i: i64, closed: bool) -> bool {
    let lo = m as i128 * i as i128;
    let hi = lo + m as i128;
    let c = c as i128;
    if closed {
        c >= lo && c <= hi
    } else {
        c > lo && c < hi
    }
}

fn interval_indices(c: i64, m: i64) -> Vec<i64> {
    let q = c.div_euclid(m);
    if c.rem_euclid(m) == 0 {
        vec![q - 1, q]
    } else {
        vec![q]
    }
}

/// All `v` in `(mZ)^2` with `|v.x - u.x| < m` and `|v.y - u.y| < m`.
pub fn m_parents(u: Vertex, m: i64) -> Result<Vec<Vertex>> {
    if m < 1 {
        return Err(GeoError::InvalidParams(format!("parent scale must be >= 1, got {m}")));
    }
    let cands = |c: i64| -> Vec<i64> {
        let q = c.div_euclid(m) as i128 * m as i128;
        if q == c as i128 {
            vec![c]
        } else {
            [q, q + m as i128].into_iter().filter_map(|t| i64::try_from(t).ok()).collect()
        }
    };
    let mut out = Vec::with_capacity(4);
    for x in cands(u.x) {
        for y in cands(u.y) {
            out.push(Vertex::new(x, y));
        }
    }
    Ok(out)
}

/// `(horizontally distinguished, vertically distinguished)`: `p | x` and `p | y`.
pub fn distinguished_flags(v: Vertex, p: i64) -> (bool, bool) {
    (v.x.rem_euclid(p) == 0, v.y.rem_euclid(p) == 0)
}

pub fn is_distinguished(v: Vertex, p: i64) -> bool {
    let (h, w) = distinguished_flags(v, p);
    h || w
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Alignment {
    HorizontallyAligned,
    VerticallyAligned,
    Unaligned,
}

fn same_open_interval(s: i64, t: i64, p: i64) -> bool {
    s.rem_euclid(p) != 0 && t.rem_euclid(p) != 0 && s.div_euclid(p) == t.div_euclid(p)
}

pub fn alignment(u: Vertex, v: Vertex, p: i64) -> Result<Alignment> {
    for w in [u, v] {
        if !is_distinguished(w, p) {
            return Err(GeoError::NotDistinguished(w, p));
        }
    }
    let (uh, _) = distinguished_flags(u, p);
    let (vh, _) = distinguished_flags(v, p);
    let (_, uv) = distinguished_flags(u, p);
    let (_, vv) = distinguished_flags(v, p);
    if uh && vh && same_open_interval(u.y, v.y, p) {
        Ok(Alignment::HorizontallyAligned)
    } else if uv && vv && same_open_interval(u.x, v.x, p) {
        Ok(Alignment::VerticallyAligned)
    } else {
        Ok(Alignment::Unaligned)
    }
}
