//! Closed-form spline dimensions.
//!
//! Every formula here is `L + correction`, where `L` is Schumaker's lower
//! bound and the correction is the degree-`d` dimension of the homology
//! module. Three routes to the correction are provided for a triangulation
//! with a single totally interior edge: lattice points of a polytope (the
//! authoritative route), a piecewise explicit sum, and the regularity
//! threshold beyond which it vanishes.

mod bounds;
mod explicit;

use core::fmt;
use core::str::FromStr;

use crate::oracle::{self, OracleError, OracleOptions};
use crate::power_ideal::{homology_dim, homology_regularity, TiePair};
use crate::triangulation::{extract_one_tie_params, MeshError, TieCounts, Triangulation};

pub use self::bounds::{
    schumaker_lower_bound, schumaker_lower_bound_params, schumaker_lower_bound_partition,
    schumaker_lower_bound_prime, LowerBounds, MeshTie, VertexStarData,
};
pub use self::explicit::{
    explicit_branch, f_explicit, lower_cut, upper_cut, Branch,
};

/// Which theorem produced a dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    TrivialCase,
    Lattice,
    Explicit,
    QuasiCrossCut,
    Oracle,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Self::TrivialCase => "trivial-case",
            Self::Lattice => "lattice",
            Self::Explicit => "explicit",
            Self::QuasiCrossCut => "quasi-cross-cut",
            Self::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "trivial-case" => Self::TrivialCase,
            "lattice" => Self::Lattice,
            "explicit" => Self::Explicit,
            "quasi-cross-cut" => Self::QuasiCrossCut,
            "oracle" => Self::Oracle,
            _ => return Err(UnknownMethod),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnknownMethod;

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("unknown method tag")
    }
}

/// What the caller asks [`dim`] to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MethodRequest {
    /// Closed forms only, chosen by the shape of the mesh.
    #[default]
    Auto,
    Lattice,
    Explicit,
    Oracle,
}

/// One dimension value with its decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimReport {
    pub r: u32,
    pub d: u32,
    pub lower_bound: i64,
    pub correction: u64,
    pub total: i64,
    pub method: Method,
}

impl DimReport {
    fn new(r: u32, d: u32, lower_bound: i64, correction: u64, method: Method) -> Self {
        Self { r, d, lower_bound, correction, total: lower_bound + correction as i64, method }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimError {
    /// The homology vanishes identically; use the lower bound directly.
    TrivialCase,
    /// `d` is outside the middle branch of the explicit formula.
    OutOfBranch,
    UnsupportedTopology(MeshError),
    /// Lattice and explicit routes disagree; never expected.
    Mismatch { lattice: i64, explicit: i64 },
    Oracle(OracleError),
}

impl fmt::Display for DimError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::TrivialCase => write!(f, "TrivialCase: the spline module is free, dim = L"),
            Self::OutOfBranch => write!(f, "OutOfBranch: degree outside the middle range"),
            Self::UnsupportedTopology(e) => write!(f, "UnsupportedTopology: {e}"),
            Self::Mismatch { lattice, explicit } => {
                write!(f, "Mismatch: lattice gives {lattice}, explicit gives {explicit}")
            }
            Self::Oracle(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DimError {}

impl DimError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::TrivialCase => "TrivialCase",
            Self::OutOfBranch => "OutOfBranch",
            Self::UnsupportedTopology(_) => "UnsupportedTopology",
            Self::Mismatch { .. } => "Mismatch",
            Self::Oracle(e) => e.name(),
        }
    }
}

fn tie_pair(counts: TieCounts, r: u32) -> Result<TiePair, DimError> {
    TiePair::new(counts.s, counts.t, r).map_err(|_| DimError::TrivialCase)
}

fn check_nontrivial(lb: &impl LowerBounds, r: u32) -> Result<TiePair, DimError> {
    if lb.slope_collision() {
        return Err(DimError::TrivialCase);
    }
    tie_pair(lb.counts(), r)
}

/// `L(Δ) + #(lattice points on the degree-d slice)`.
pub fn dim_lattice(lb: &impl LowerBounds, d: u32, r: u32) -> Result<DimReport, DimError> {
    let tp = check_nontrivial(lb, r)?;
    Ok(DimReport::new(r, d, lb.lower_bound(d, r), homology_dim(tp, d), Method::Lattice))
}

/// The three-branch explicit formula. The reported lower bound is always
/// `L(Δ)`; on the first branch the correction is `L(Δ') - L(Δ)`.
pub fn dim_explicit(lb: &impl LowerBounds, d: u32, r: u32) -> Result<DimReport, DimError> {
    let tp = check_nontrivial(lb, r)?;
    let (s, t) = (tp.s(), tp.t());
    let low = lb.lower_bound(d, r);
    let total = match explicit_branch(s, t, d, r) {
        Branch::DeltaPrime => lb.lower_bound_prime(d, r),
        Branch::Middle => low + f_explicit(s, t, d, r)? as i64,
        Branch::Stable => low,
    };
    let correction = u64::try_from(total - low).expect("lower bound exceeds the dimension");
    Ok(DimReport::new(r, d, low, correction, Method::Explicit))
}

/// Least `D` with `dim = L` for every `d >= D`.
pub fn stabilization_degree(counts: TieCounts, r: u32) -> Result<u32, DimError> {
    Ok(homology_regularity(tie_pair(counts, r)?) + 1)
}

/// Dimension of `C^r_d` on a triangulation, dispatching on its shape.
pub fn dim(tri: &Triangulation, d: u32, r: u32, method: MethodRequest) -> Result<DimReport, DimError> {
    dim_with(tri, d, r, method, OracleOptions::default())
}

/// [`dim`] with explicit oracle settings.
pub fn dim_with(
    tri: &Triangulation,
    d: u32,
    r: u32,
    method: MethodRequest,
    options: OracleOptions,
) -> Result<DimReport, DimError> {
    if method == MethodRequest::Oracle {
        let total = oracle::dim_spline_oracle_with(tri, d, r, options).map_err(DimError::Oracle)?;
        let low = schumaker_lower_bound(tri, d, r);
        let correction = u64::try_from(total as i64 - low).expect("lower bound exceeds the dimension");
        return Ok(DimReport::new(r, d, low, correction, Method::Oracle));
    }
    let tie = extract_one_tie_params(tri).map(|params| MeshTie::new(tri, params));
    match method {
        MethodRequest::Lattice => dim_lattice(&tie.map_err(DimError::UnsupportedTopology)?, d, r),
        MethodRequest::Explicit => dim_explicit(&tie.map_err(DimError::UnsupportedTopology)?, d, r),
        MethodRequest::Auto => {
            if tri.is_quasi_cross_cut() {
                let low = schumaker_lower_bound(tri, d, r);
                return Ok(DimReport::new(r, d, low, 0, Method::QuasiCrossCut));
            }
            let tie = tie.map_err(DimError::UnsupportedTopology)?;
            if tie.params().is_trivial(r) {
                return Ok(DimReport::new(r, d, tie.lower_bound(d, r), 0, Method::TrivialCase));
            }
            let lattice = dim_lattice(&tie, d, r)?;
            let explicit = dim_explicit(&tie, d, r)?;
            if lattice.total != explicit.total {
                return Err(DimError::Mismatch { lattice: lattice.total, explicit: explicit.total });
            }
            Ok(lattice)
        }
        MethodRequest::Oracle => unreachable!(),
    }
}
