//! Smooth/singular verdicts for the components `X_C`.

use serde::{Deserialize, Serialize};

use crate::arith::QContext;
use crate::error::Result;
use crate::orbits::{
    grading_dims, is_distinguished, is_regular, is_zero_orbit, smooth_bound_r, validate_orbit,
    weighted_dynkin, OrbitLabel,
};
use crate::rootsys::{RootSystem, Variant};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Status {
    Smooth,
    Singular,
    NotCovered,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Reason {
    /// `X_0 ≅ G`.
    ZeroOrbit,
    /// Distinguished orbit under considerate `q`.
    Distinguished,
    /// Distinguished orbit, `q` not considerate, but `1, q, ..., q^r` are distinct.
    WeakBound { r: u32, order: u32 },
    /// Nonzero orbit that is not distinguished.
    NonDistinguished,
    /// `q^k = 1` for some `k ≤ h`.
    Inconsiderate { k: u32, h: u32 },
    /// No diagram data for this orbit.
    Unsupported { detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothnessVerdict {
    pub status: Status,
    pub orbit: OrbitLabel,
    pub group: String,
    pub reasons: Vec<Reason>,
    /// Number of connected components of `X_C`; only given for `GL_n` and the zero orbit.
    pub component_count: Option<u32>,
    /// The sharpened bound `r` for distinguished orbits.
    pub sharpened_order_bound: Option<u32>,
    pub considerate_checked: bool,
}

fn component_count(rs: &RootSystem, o: &OrbitLabel) -> Option<u32> {
    (rs.dynkin_type.variant == Variant::GeneralLinear || is_zero_orbit(o)).then_some(1)
}

pub fn classify_component(
    rs: &RootSystem,
    o: &OrbitLabel,
    ctx: &QContext,
) -> Result<SmoothnessVerdict> {
    validate_orbit(rs, o)?;
    let h = rs.coxeter_number;
    let mut verdict = SmoothnessVerdict {
        status: Status::NotCovered,
        orbit: o.clone(),
        group: rs.dynkin_type.to_string(),
        reasons: Vec::new(),
        component_count: None,
        sharpened_order_bound: None,
        considerate_checked: true,
    };
    let zero = is_zero_orbit(o);
    let distinguished = !zero && is_distinguished(rs, o);

    let r = if distinguished {
        match weighted_dynkin(rs, o).and_then(|w| grading_dims(rs, &w)) {
            Ok(dims) => Some(smooth_bound_r(&dims)),
            Err(e) => {
                verdict.reasons.push(Reason::Unsupported {
                    detail: e.to_string(),
                });
                return Ok(verdict);
            }
        }
    } else {
        None
    };
    verdict.sharpened_order_bound = r;

    if let Some(k) = ctx.failing_power(h) {
        verdict.reasons.push(Reason::Inconsiderate { k, h });
        if let Some(r) = r.filter(|_| !is_regular(rs, o)) {
            if k > r {
                verdict.status = Status::Smooth;
                verdict.reasons.push(Reason::WeakBound { r, order: k });
                verdict.component_count = component_count(rs, o);
            }
        }
        return Ok(verdict);
    }

    if zero {
        verdict.status = Status::Smooth;
        verdict.reasons.push(Reason::ZeroOrbit);
        verdict.component_count = Some(1);
    } else if distinguished {
        verdict.status = Status::Smooth;
        verdict.reasons.push(Reason::Distinguished);
        verdict.component_count = component_count(rs, o);
    } else {
        verdict.status = Status::Singular;
        verdict.reasons.push(Reason::NonDistinguished);
    }
    Ok(verdict)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductVerdict {
    pub status: Status,
    pub factors: Vec<SmoothnessVerdict>,
}

/// A product component `∏ X_i` is smooth exactly when every factor is.
pub fn classify_product(
    components: &[(RootSystem, OrbitLabel)],
    ctx: &QContext,
) -> Result<ProductVerdict> {
    let factors = components
        .iter()
        .map(|(rs, o)| classify_component(rs, o, ctx))
        .collect::<Result<Vec<_>>>()?;
    let status = if factors.iter().any(|v| v.status == Status::NotCovered) {
        Status::NotCovered
    } else if factors.iter().all(|v| v.status == Status::Smooth) {
        Status::Smooth
    } else {
        Status::Singular
    };
    Ok(ProductVerdict { status, factors })
}
