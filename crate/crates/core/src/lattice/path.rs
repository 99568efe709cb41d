use super::padic::checked_pow;
use super::Vertex;
use crate::error::{GeoError, Result};

/// Check that consecutive vertices are unit neighbours.
pub fn check_unit_path(path: &[Vertex]) -> Result<()> {
    for w in path.windows(2) {
        if w[0].l1(w[1]) != 1 {
            return Err(GeoError::InvalidPath(format!("non-unit step {} -> {}", w[0], w[1])));
        }
    }
    Ok(())
}

/// The axis-parallel unit path from `from` to `to`, both endpoints included.
/// The endpoints must share a row or a column.
pub fn straight_path(from: Vertex, to: Vertex) -> Result<Vec<Vertex>> {
    if from.x != to.x && from.y != to.y {
        return Err(GeoError::InvalidPath(format!("{from} and {to} are not axis-aligned")));
    }
    let len = from.l1(to);
    let dx = (to.x - from.x).signum();
    let dy = (to.y - from.y).signum();
    let mut out = Vec::with_capacity(len as usize + 1);
    let mut cur = from;
    out.push(cur);
    for _ in 0..len {
        cur = cur.offset(dx, dy).ok_or(GeoError::Overflow("straight path"))?;
        out.push(cur);
    }
    Ok(out)
}

/// The `p^n`-dilation of a unit lattice path: scale every vertex by `p^n` and
/// join consecutive images by straight unit paths.
pub fn dilate_path(path: &[Vertex], n: u32, p: i64) -> Result<Vec<Vertex>> {
    check_unit_path(path)?;
    let m = checked_pow(p, n)?;
    let Some(&first) = path.first() else {
        return Ok(Vec::new());
    };
    let mut out = vec![first.checked_scale(m)?];
    for w in path.windows(2) {
        let a = w[0].checked_scale(m)?;
        let b = w[1].checked_scale(m)?;
        out.extend(straight_path(a, b)?.into_iter().skip(1));
    }
    Ok(out)
}
