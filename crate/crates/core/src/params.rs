use crate::error::{Error, Result};

/// Physical inputs of the Dirac model for a gapped graphene layer.
///
/// Everything downstream works in dimensionless variables scaled by the
/// gap wavelength λ_Δ = ħc/2Δ; `lambda_delta_m` is only needed to convert
/// results back to SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModelParams {
    /// Fine-structure constant (coupling of the layer to the field).
    pub alpha: f64,
    /// Fermi velocity in units of c.
    pub v: f64,
    /// Optional gap wavelength λ_Δ in meters, for dimensional output.
    pub lambda_delta_m: Option<f64>,
    /// Separations below this ratio λ_Min/λ_Δ are tagged as outside the
    /// trusted frequency range of the model (outputs are still computed).
    pub lambda_min_ratio: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            alpha: 1.0 / 137.0,
            v: 1.0 / 300.0,
            lambda_delta_m: None,
            lambda_min_ratio: 2e-3,
        }
    }
}

impl ModelParams {
    /// Parameters with the given coupling and velocity ratio, remaining
    /// fields at their defaults.
    pub fn new(alpha: f64, v: f64) -> Result<Self> {
        let p = Self {
            alpha,
            v,
            ..Self::default()
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0) || !self.alpha.is_finite() {
            return Err(Error::InvalidParams(format!("alpha = {} must be > 0", self.alpha)));
        }
        if !(self.v > 0.0 && self.v < 1.0) {
            return Err(Error::InvalidParams(format!("v = {} must be in (0, 1)", self.v)));
        }
        if let Some(l) = self.lambda_delta_m {
            if !(l > 0.0) {
                return Err(Error::InvalidParams(format!("lambda_delta_m = {l} must be > 0")));
            }
        }
        if !(self.lambda_min_ratio > 0.0) {
            return Err(Error::InvalidParams(format!(
                "lambda_min_ratio = {} must be > 0",
                self.lambda_min_ratio
            )));
        }
        Ok(())
    }

    /// Whether a dimensionless separation is inside the trusted range of
    /// the model.
    pub fn model_reliable(&self, lambda: f64) -> bool {
        lambda >= self.lambda_min_ratio
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        ModelParams::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(ModelParams::new(0.0, 0.5).is_err());
        assert!(ModelParams::new(0.01, 1.0).is_err());
        assert!(ModelParams::new(0.01, -0.1).is_err());
        let p = ModelParams {
            lambda_delta_m: Some(-1.0),
            ..ModelParams::default()
        };
        assert!(p.validate().is_err());
    }
}
