//! Line-delimited machine-readable records for identity reports.
//!
//! Ball midpoints and radii are serialized as exact decimal strings
//! (dyadic values have finite decimal expansions), so records parse back
//! bit-identically given the recorded precision.

use serde::{Deserialize, Serialize};

use crate::identities::{IdentityId, IdentityReport};
use crate::numeric_core::{decimal_string_to_dyadic, dyadic_to_decimal_string, BallReal};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineRecord {
    pub identity: String,
    pub s: u32,
    pub precision: u32,
    pub left_mid: String,
    pub left_rad: String,
    pub right_mid: String,
    pub right_rad: String,
    pub pass: bool,
}

fn ball_fields(ball: &BallReal) -> (String, String, u32) {
    let p = ball.precision();
    (
        dyadic_to_decimal_string(ball.midpoint_scaled(), p),
        dyadic_to_decimal_string(ball.radius_scaled(), p),
        p,
    )
}

impl MachineRecord {
    pub fn from_report(report: &IdentityReport) -> Self {
        // serialize both enclosures at a common scale
        let scale = report.left.precision().max(report.right.precision());
        let left = report.left.round_to(scale);
        let right = report.right.round_to(scale);
        let (left_mid, left_rad, _) = ball_fields(&left);
        let (right_mid, right_rad, _) = ball_fields(&right);
        MachineRecord {
            identity: report.identity.as_str().to_string(),
            s: report.s,
            precision: scale,
            left_mid,
            left_rad,
            right_mid,
            right_rad,
            pass: report.pass,
        }
    }

    pub fn to_report(&self) -> Result<IdentityReport> {
        let identity = IdentityId::parse(&self.identity)?;
        let p = self.precision;
        let left = BallReal::new(
            decimal_string_to_dyadic(&self.left_mid, p)?,
            decimal_string_to_dyadic(&self.left_rad, p)?,
            p,
        );
        let right = BallReal::new(
            decimal_string_to_dyadic(&self.right_mid, p)?,
            decimal_string_to_dyadic(&self.right_rad, p)?,
            p,
        );
        let residual_bound = left.residual_bound(&right);
        let pass = left.intersects(&right);
        if pass != self.pass {
            return Err(Error::MalformedRecord(
                "pass flag does not match enclosures".into(),
            ));
        }
        Ok(IdentityReport {
            identity,
            s: self.s,
            precision: p,
            left,
            right,
            residual_bound,
            pass,
        })
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("record serializes")
    }

    pub fn from_json_line(line: &str) -> Result<Self> {
        serde_json::from_str(line).map_err(|e| Error::MalformedRecord(e.to_string()))
    }
}
