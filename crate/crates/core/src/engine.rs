use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, OrderKind, Polynomial, SingularityContext};

/// How lengths are measured.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum LengthMode {
    /// Length of the localization at the origin (Mora standard bases).
    #[default]
    Local,
    /// Count of all standard monomials for a global order.
    Graded,
}

impl std::str::FromStr for LengthMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "local" => Ok(LengthMode::Local),
            "graded" => Ok(LengthMode::Graded),
            _ => Err(Error::Precondition(format!("unknown mode `{s}` (local|graded)"))),
        }
    }
}

/// The global order used for syzygies, kernels and lifts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum GlobalOrder {
    #[default]
    Grevlex,
    Lex,
}

impl std::str::FromStr for GlobalOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "grevlex" => Ok(GlobalOrder::Grevlex),
            "lex" => Ok(GlobalOrder::Lex),
            _ => Err(Error::Precondition(format!("unknown order `{s}` (grevlex|lex)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EngineConfig {
    pub order: GlobalOrder,
    pub mode: LengthMode,
    /// Syzygy steps allowed before giving up on an MCM certificate (default `n + 3`).
    pub max_steps: Option<usize>,
    /// Re-check expensive certificates (`A*B = f*I`, determinants, normal forms).
    pub verify: bool,
}

/// A hypersurface `R = P/(f)` together with the engine settings used on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypersurface {
    pub ctx: SingularityContext,
    pub config: EngineConfig,
}

impl Hypersurface {
    pub fn new(ctx: SingularityContext) -> Self {
        Hypersurface { ctx, config: EngineConfig::default() }
    }

    pub fn with_config(ctx: SingularityContext, config: EngineConfig) -> Self {
        Hypersurface { ctx, config }
    }

    pub fn nvars(&self) -> usize {
        self.ctx.nvars()
    }

    pub fn f(&self) -> &Polynomial {
        &self.ctx.f
    }

    pub fn global_order(&self) -> MonomialOrder {
        match self.config.order {
            GlobalOrder::Grevlex => self.ctx.ring.graded_order(),
            GlobalOrder::Lex => MonomialOrder::new(OrderKind::Lex, self.ctx.ring.weights.clone()),
        }
    }

    pub fn length_order(&self, mode: LengthMode) -> MonomialOrder {
        match mode {
            LengthMode::Local => self.ctx.ring.local_order(),
            LengthMode::Graded => self.global_order(),
        }
    }

    pub fn max_steps(&self) -> usize {
        self.config.max_steps.unwrap_or(self.ctx.n + 3)
    }

    pub fn parse(&self, s: &str) -> Result<Polynomial> {
        self.ctx.parse(s)
    }

    pub fn format(&self, p: &Polynomial) -> String {
        self.ctx.format(p)
    }
}
