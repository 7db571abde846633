//! The pair (X, E): a finite point universe and a finite parameter set.
//!
//! Every soft set over a signature is packed into a single `u64`, one bit per
//! cell `(e, x)` at position `e * |X| + x`. The cell count is therefore capped
//! at 64, and by default at [`DEFAULT_MAX_CELLS`].

use crate::error::{Error, Result};

/// Default bound on `|X|·|E|`.
pub const DEFAULT_MAX_CELLS: usize = 24;

/// Hard bound imposed by the `u64` packing.
pub const HARD_MAX_CELLS: usize = 64;

/// Environment variable overriding [`DEFAULT_MAX_CELLS`].
pub const MAX_CELLS_ENV: &str = "SOFTTOP_MAX_CELLS";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    points: Vec<String>,
    params: Vec<String>,
}

impl Signature {
    pub fn new<P, Q>(points: P, params: Q) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        Q: IntoIterator,
        Q::Item: Into<String>,
    {
        Self::with_max_cells(points, params, DEFAULT_MAX_CELLS)
    }

    pub fn with_max_cells<P, Q>(points: P, params: Q, max_cells: usize) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        Q: IntoIterator,
        Q::Item: Into<String>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let params: Vec<String> = params.into_iter().map(Into::into).collect();
        if points.is_empty() || params.is_empty() {
            return Err(Error::EmptySignature);
        }
        check_unique(&points)?;
        check_unique(&params)?;
        let bound = max_cells.min(HARD_MAX_CELLS);
        let cells = points.len() * params.len();
        if cells > bound {
            return Err(Error::TooManyCells { cells, bound });
        }
        Ok(Self { points, params })
    }

    /// Signature with generated names `x1..xn` and `e1..em`.
    pub fn anonymous(n_points: usize, n_params: usize) -> Result<Self> {
        Self::with_max_cells(
            (1..=n_points).map(|i| format!("x{i}")),
            (1..=n_params).map(|i| format!("e{i}")),
            HARD_MAX_CELLS,
        )
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn n_params(&self) -> usize {
        self.params.len()
    }

    pub fn cells(&self) -> usize {
        self.points.len() * self.params.len()
    }

    /// Mask with every cell set (the absolute soft set).
    pub fn full_mask(&self) -> u64 {
        low_bits(self.cells())
    }

    /// Mask over point indices with every point set.
    pub fn point_mask(&self) -> u64 {
        low_bits(self.n_points())
    }

    pub fn cell(&self, param: usize, point: usize) -> usize {
        param * self.n_points() + point
    }

    pub fn point_index(&self, name: &str) -> Result<usize> {
        self.points
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    pub fn param_index(&self, name: &str) -> Result<usize> {
        self.params
            .iter()
            .position(|p| p == name)
            .ok_or_else(|| Error::UnknownParam(name.to_string()))
    }

    /// Bitmask over point indices for a list of point names.
    pub fn subset_mask<S: AsRef<str>>(&self, names: &[S]) -> Result<u64> {
        names.iter().try_fold(0u64, |acc, n| {
            Ok(acc | 1u64 << self.point_index(n.as_ref())?)
        })
    }

    /// Cells `(e, x)` for every parameter `e`: the soft point of `x`.
    pub fn point_cells(&self, point: usize) -> u64 {
        (0..self.n_params()).fold(0, |acc, e| acc | 1u64 << self.cell(e, point))
    }

    /// Spread a point subset into a constant soft-set mask.
    pub fn constant_cells(&self, subset: u64) -> u64 {
        (0..self.n_params()).fold(0, |acc, e| acc | subset << (e * self.n_points()))
    }

    pub fn section(&self, cells: u64, param: usize) -> u64 {
        (cells >> (param * self.n_points())) & self.point_mask()
    }

    /// Signature over the points in `subset` (kept in their original order),
    /// with the same parameters.
    pub fn sub_signature(&self, subset: u64) -> Result<Self> {
        let subset = subset & self.point_mask();
        if subset == 0 {
            return Err(Error::EmptySubset);
        }
        let points = (0..self.n_points())
            .filter(|&x| subset >> x & 1 == 1)
            .map(|x| self.points[x].clone());
        Self::with_max_cells(points, self.params.clone(), HARD_MAX_CELLS)
    }
}

fn check_unique(names: &[String]) -> Result<()> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(Error::DuplicateName(n.clone()));
        }
    }
    Ok(())
}

pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Reads [`MAX_CELLS_ENV`], falling back to [`DEFAULT_MAX_CELLS`].
pub fn max_cells_from_env() -> Result<usize> {
    match std::env::var(MAX_CELLS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| (1..=HARD_MAX_CELLS).contains(&n))
            .ok_or_else(|| {
                Error::Input(format!(
                    "{MAX_CELLS_ENV} must be an integer in 1..={HARD_MAX_CELLS}, got `{v}`"
                ))
            }),
        Err(_) => Ok(DEFAULT_MAX_CELLS),
    }
}
