//! Plücker arithmetic for plane curves whose only singularities are
//! ordinary nodes and cusps, and whose duals likewise have only ordinary
//! flexes and bitangents as extra features.
//!
//! With `δ` nodes, `κ` cusps, `ι` flexes and `τ` bitangents:
//!
//! ```text
//! d∨ = d(d−1) − 3κ − 2δ
//! ι  = 3d(d−2) − 6δ − 8κ
//! d  = d∨(d∨−1) − 3ι − 2τ
//! κ  = 3d∨(d∨−2) − 6τ − 8ι
//! ```
//!
//! The last relation is also offered with the coefficient `(d∨−1)` in
//! place of `(d∨−2)` as [`KappaVariant::AsPrinted`]; that version fails on
//! the nodal cubic and is kept only for comparison.

use serde::Serialize;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PluckerError {
    #[error("degree must be at least 1, got {0}")]
    Degree(i64),
    #[error("{field} must be nonnegative, got {value}")]
    Negative { field: &'static str, value: i64 },
    #[error("derived {field} = {value} is not a nonnegative integer")]
    NotRealizable { field: &'static str, value: String },
    #[error("the rational nodal family needs d >= 3, got {0}")]
    FamilyDegree(i64),
}

pub type Result<T, E = PluckerError> = std::result::Result<T, E>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PluckerInvariants {
    pub d: i64,
    pub delta: i64,
    pub kappa: i64,
    pub d_dual: i64,
    pub iota: i64,
    pub tau: i64,
}

impl PluckerInvariants {
    /// Invariants of the dual curve: nodes and bitangents swap, as do
    /// cusps and flexes.
    pub fn dual(&self) -> PluckerInvariants {
        PluckerInvariants {
            d: self.d_dual,
            delta: self.tau,
            kappa: self.iota,
            d_dual: self.d,
            iota: self.kappa,
            tau: self.delta,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KappaVariant {
    /// `κ = 3d∨(d∨−2) − 6τ − 8ι`
    Classical,
    /// `κ = 3d∨(d∨−1) − 6τ − 8ι`
    AsPrinted,
}

pub fn kappa_from_dual(p: &PluckerInvariants, variant: KappaVariant) -> i64 {
    let k = match variant {
        KappaVariant::Classical => 2,
        KappaVariant::AsPrinted => 1,
    };
    3 * p.d_dual * (p.d_dual - k) - 6 * p.tau - 8 * p.iota
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub invariants: PluckerInvariants,
    pub classical_kappa: i64,
    pub classical_holds: bool,
    pub as_printed_kappa: i64,
    pub as_printed_holds: bool,
}

/// Completes `(d, δ, κ)` to a full record. `τ` is solved from the third
/// relation and must come out a nonnegative integer.
pub fn dual_invariants(d: i64, delta: i64, kappa: i64) -> Result<DualReport> {
    if d < 1 {
        return Err(PluckerError::Degree(d));
    }
    for (field, value) in [("delta", delta), ("kappa", kappa)] {
        if value < 0 {
            return Err(PluckerError::Negative { field, value });
        }
    }
    let d_dual = d * (d - 1) - 3 * kappa - 2 * delta;
    if d_dual < 1 {
        return Err(PluckerError::NotRealizable {
            field: "d_dual",
            value: d_dual.to_string(),
        });
    }
    let iota = 3 * d * (d - 2) - 6 * delta - 8 * kappa;
    if iota < 0 {
        return Err(PluckerError::NotRealizable {
            field: "iota",
            value: iota.to_string(),
        });
    }
    let twice_tau = d_dual * (d_dual - 1) - d - 3 * iota;
    if twice_tau < 0 || twice_tau % 2 != 0 {
        return Err(PluckerError::NotRealizable {
            field: "tau",
            value: format!("{twice_tau}/2"),
        });
    }
    let invariants = PluckerInvariants {
        d,
        delta,
        kappa,
        d_dual,
        iota,
        tau: twice_tau / 2,
    };
    let classical_kappa = kappa_from_dual(&invariants, KappaVariant::Classical);
    let as_printed_kappa = kappa_from_dual(&invariants, KappaVariant::AsPrinted);
    Ok(DualReport {
        invariants,
        classical_kappa,
        classical_holds: classical_kappa == kappa,
        as_printed_kappa,
        as_printed_holds: as_printed_kappa == kappa,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RoundTrip {
    pub degree: bool,
    pub cusps: bool,
    pub nodes: bool,
}

impl RoundTrip {
    pub fn holds(&self) -> bool {
        self.degree && self.cusps && self.nodes
    }
}

/// Feeds the dual data `(d∨, τ, ι)` back through [`dual_invariants`] and
/// compares with `(d, κ, δ)`. A dual that is not realizable counts as a
/// mismatch everywhere.
pub fn duality_roundtrip(p: &PluckerInvariants) -> RoundTrip {
    match dual_invariants(p.d_dual, p.tau, p.iota) {
        Ok(r) => RoundTrip {
            degree: r.invariants.d_dual == p.d,
            cusps: r.invariants.iota == p.kappa,
            nodes: r.invariants.tau == p.delta,
        },
        Err(_) => RoundTrip {
            degree: false,
            cusps: false,
            nodes: false,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RationalNodal {
    pub primal: PluckerInvariants,
    /// `(2d−2, 3d−6, 2(d−2)(d−3))`
    pub dual_degree: i64,
    pub dual_cusps: i64,
    pub dual_nodes: i64,
    pub agrees: bool,
}

/// A rational curve of degree `d` with `C(d−1, 2)` nodes and no cusps,
/// against the closed-form data of its dual.
pub fn rational_nodal_family(d: i64) -> Result<RationalNodal> {
    if d < 3 {
        return Err(PluckerError::FamilyDegree(d));
    }
    let delta = (d - 1) * (d - 2) / 2;
    let primal = dual_invariants(d, delta, 0)?.invariants;
    let (dual_degree, dual_cusps, dual_nodes) = (2 * d - 2, 3 * d - 6, 2 * (d - 2) * (d - 3));
    let dual = primal.dual();
    Ok(RationalNodal {
        primal,
        dual_degree,
        dual_cusps,
        dual_nodes,
        agrees: (dual.d, dual.kappa, dual.delta) == (dual_degree, dual_cusps, dual_nodes),
    })
}

/// The six-cuspidal sextic `(6, 0, 6)`.
pub fn sextic_six_cusps_check() -> Result<DualReport> {
    dual_invariants(6, 0, 6)
}


#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn valid_records_back_substitute(d in 1i64..30, delta in 0i64..60, kappa in 0i64..40) {
            if let Ok(r) = dual_invariants(d, delta, kappa) {
                let p = r.invariants;
                prop_assert_eq!(p.d_dual * (p.d_dual - 1) - 3 * p.iota - 2 * p.tau, d);
                prop_assert!(r.classical_holds);
                prop_assert!(duality_roundtrip(&p).holds());
            }
        }
    }
}
