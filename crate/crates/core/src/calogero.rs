//! Pairs of square matrices whose commutator differs from a scalar by a
//! rank-one matrix.

use serde::{Deserialize, Serialize};

use crate::linalg::{self, rank};
use crate::matrix::RatMatrix;
use crate::partition::partitions;
use crate::rat::Rat;
use crate::{Error, Result};

/// Which scalar shift makes the commutator rank one.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    /// `rank([X,Y] − τI) = 1`
    Plus,
    /// `rank([X,Y] + τI) = 1`
    Minus,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CmPair {
    #[serde(rename = "X")]
    pub x: RatMatrix,
    #[serde(rename = "Y")]
    pub y: RatMatrix,
    pub tau: Rat,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct CmMembership {
    /// `rank([X,Y] − τI)`
    pub rank_minus_tau: usize,
    /// `rank([X,Y] + τI)`
    pub rank_plus_tau: usize,
    /// Every sign that works; both do when `n = 2` or `n = 1`.
    pub signs: Vec<Sign>,
}

impl CmMembership {
    pub fn is_member(&self) -> bool {
        !self.signs.is_empty()
    }

    pub fn into_result(self) -> Result<CmMembership> {
        if self.is_member() {
            Ok(self)
        } else {
            Err(Error::NotCalogeroMoser {
                minus_tau: self.rank_minus_tau,
                plus_tau: self.rank_plus_tau,
            })
        }
    }
}

fn check_pair(x: &RatMatrix, y: &RatMatrix) -> Result<()> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if !y.is_square() {
        return Err(Error::NotSquare {
            rows: y.rows(),
            cols: y.cols(),
        });
    }
    if x.rows() != y.rows() {
        return Err(Error::DimensionMismatch(format!(
            "X is {0}x{0}, Y is {1}x{1}",
            x.rows(),
            y.rows()
        )));
    }
    Ok(())
}

pub fn verify_cm(x: &RatMatrix, y: &RatMatrix, tau: &Rat) -> Result<CmMembership> {
    check_pair(x, y)?;
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    let n = x.rows();
    let c = x.commutator(y);
    let shift = RatMatrix::scalar(n, tau);
    let rank_minus_tau = rank(&(&c - &shift));
    let rank_plus_tau = rank(&(&c + &shift));
    let mut signs = Vec::new();
    if rank_minus_tau == 1 {
        signs.push(Sign::Plus);
    }
    if rank_plus_tau == 1 {
        signs.push(Sign::Minus);
    }
    Ok(CmMembership {
        rank_minus_tau,
        rank_plus_tau,
        signs,
    })
}

impl CmPair {
    pub fn verify(&self) -> Result<CmMembership> {
        verify_cm(&self.x, &self.y, &self.tau)
    }
}

/// `X = diag(spectrum)`, `Y_ij = τ / (x_j − x_i)` off the diagonal and `Y_ii`
/// from `diagonal`. Then `[X,Y] = τ(I − J)` with `J` the all-ones matrix, so
/// the pair has sign [`Sign::Plus`] for any diagonal.
pub fn sample_cm_with_diagonal(spectrum: &[Rat], diagonal: &[Rat], tau: &Rat) -> Result<CmPair> {
    if tau.is_zero() {
        return Err(Error::Precondition("tau must be nonzero".into()));
    }
    if diagonal.len() != spectrum.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} spectrum values, {} diagonal entries",
            spectrum.len(),
            diagonal.len()
        )));
    }
    for (i, a) in spectrum.iter().enumerate() {
        if spectrum[..i].contains(a) {
            return Err(Error::Precondition(format!("repeated spectrum value {a}")));
        }
    }
    let n = spectrum.len();
    let y = RatMatrix::from_fn(n, n, |i, j| {
        if i == j {
            diagonal[i].clone()
        } else {
            tau / &(&spectrum[j] - &spectrum[i])
        }
    });
    Ok(CmPair {
        x: RatMatrix::diagonal(spectrum),
        y,
        tau: tau.clone(),
    })
}

pub fn sample_cm(spectrum: &[Rat], tau: &Rat) -> Result<CmPair> {
    sample_cm_with_diagonal(spectrum, &vec![Rat::zero(); spectrum.len()], tau)
}

/// `(X, Y) ↦ (X/τ, Y)`, landing at `τ = 1` with the same sign. Empty pairs
/// pass through.
pub fn rescale(pair: &CmPair) -> Result<CmPair> {
    if pair.x.rows() > 0 {
        pair.verify()?.into_result()?;
    }
    Ok(CmPair {
        x: pair.x.scale(&pair.tau.recip()),
        y: pair.y.clone(),
        tau: Rat::one(),
    })
}

/// Dimension of `{g : gX = Xg, gY = Yg}`; one exactly when the projective
/// linear group acts freely at `(X, Y)`.
pub fn joint_centralizer_dim(x: &RatMatrix, y: &RatMatrix) -> Result<usize> {
    check_pair(x, y)?;
    if x.rows() == 0 {
        return Ok(0);
    }
    linalg::joint_centralizer_dim(&[x.clone(), y.clone()])
}

/// Number of torus fixed points, one per partition of `n`.
pub fn cm_fixed_point_count(n: usize) -> usize {
    partitions(n).len()
}
