use crate::error::{Error, Result};

/// Binary modulation, through its coefficient `ψ` in `Pe = E[Q(√(2ψγ))]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Modulation {
    Bpsk,
    Bfsk,
    Msk,
    Custom(f64),
}

impl Modulation {
    pub fn psi(&self) -> f64 {
        match *self {
            Modulation::Bpsk => 1.0,
            Modulation::Bfsk => 0.5,
            Modulation::Msk => 0.75,
            Modulation::Custom(psi) => psi,
        }
    }
}

/// Element count and SNR operating point of a link. SNRs are linear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinkConfig {
    pub n_elements: usize,
    pub gamma_bar: f64,
    pub gamma_th: f64,
    pub psi: f64,
}

impl LinkConfig {
    pub fn new(n_elements: usize, gamma_bar: f64, gamma_th: f64, modulation: Modulation) -> Result<Self> {
        let cfg = Self {
            n_elements,
            gamma_bar,
            gamma_th,
            psi: modulation.psi(),
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Same as [`LinkConfig::new`] with both SNRs given in dB.
    pub fn from_db(n_elements: usize, gamma_bar_db: f64, gamma_th_db: f64, modulation: Modulation) -> Result<Self> {
        Self::new(
            n_elements,
            crate::db_to_linear(gamma_bar_db),
            crate::db_to_linear(gamma_th_db),
            modulation,
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_elements == 0 {
            return Err(Error::Domain("at least one reflecting element is required".into()));
        }
        if !(self.gamma_bar > 0.0 && self.gamma_bar.is_finite()) {
            return Err(Error::Domain(format!(
                "average SNR must be positive, got {}",
                self.gamma_bar
            )));
        }
        if !(self.gamma_th >= 0.0 && self.gamma_th.is_finite()) {
            return Err(Error::Domain(format!(
                "threshold SNR must be non-negative, got {}",
                self.gamma_th
            )));
        }
        if !(self.psi > 0.0 && self.psi.is_finite()) {
            return Err(Error::Domain(format!(
                "modulation coefficient must be positive, got {}",
                self.psi
            )));
        }
        Ok(())
    }

    pub fn gamma_bar_db(&self) -> f64 {
        crate::linear_to_db(self.gamma_bar)
    }
}
