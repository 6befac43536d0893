use serde::Serialize;

use crate::exactla::Field;

use super::module::Module;

/// Finite dimensionality as far as a truncation can tell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FdVerdict {
    FiniteDimensional,
    NotFiniteDimensional,
    BoundaryUnclear,
}

/// Reads the `window` objects nearest the truncation horizon: all zero means
/// finite dimensional; all nonzero and non-decreasing towards the horizon
/// means a stable infinite tail; anything else is left open.
///
/// Over an opposite category the horizon is at object 0.
pub fn is_fd<F: Field>(m: &Module<F>, window: usize) -> FdVerdict {
    let mut dims = m.dims().to_vec();
    if m.cat().is_opposite() {
        dims.reverse();
    }
    let w = window.max(1).min(dims.len());
    let tail = &dims[dims.len() - w..];
    if tail.iter().all(|&d| d == 0) {
        FdVerdict::FiniteDimensional
    } else if tail.iter().all(|&d| d > 0) && tail.windows(2).all(|p| p[0] <= p[1]) {
        FdVerdict::NotFiniteDimensional
    } else {
        FdVerdict::BoundaryUnclear
    }
}
