//! One handle over every non-neural method: the WL family and the
//! extension baselines.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::extensions::{extension_distinguishes, extension_refine, ExtensionConfig, ExtensionError, ExtensionKind};
use crate::graph::Graph;
use crate::wl::{distinguishes, hash_words, refine_with, ColorMode, Palette, WlConfig, WlError, WlMethod};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DistinguishError {
    #[error(transparent)]
    Wl(#[from] WlError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("unknown method `{0}` (expected 1wl, kwl:<k>, kfwl:<k>, s<k>, n<k> or m1)")]
    UnknownMethod(String),
}

impl DistinguishError {
    /// Budget overruns, as opposed to bad configuration.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            DistinguishError::Wl(WlError::BudgetExceeded { .. })
                | DistinguishError::Extension(ExtensionError::BudgetExceeded { .. })
                | DistinguishError::Extension(ExtensionError::Wl(WlError::BudgetExceeded { .. }))
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distinguisher {
    Wl(WlConfig),
    Extension(ExtensionConfig),
}

impl Distinguisher {
    /// Caps WL rounds. Extension baselines always run to stability.
    pub fn with_max_iterations(self, t: usize) -> Self {
        match self {
            Distinguisher::Wl(cfg) => Distinguisher::Wl(cfg.with_max_iterations(t)),
            other => other,
        }
    }

    pub fn validate(&self) -> Result<(), DistinguishError> {
        match self {
            Distinguisher::Wl(cfg) => Ok(cfg.validate()?),
            Distinguisher::Extension(cfg) => Ok(cfg.validate()?),
        }
    }

    pub fn distinguishes(&self, g: &Graph, h: &Graph) -> Result<bool, DistinguishError> {
        match self {
            Distinguisher::Wl(cfg) => Ok(distinguishes(cfg, g, h)?),
            Distinguisher::Extension(cfg) => Ok(extension_distinguishes(cfg, g, h)?),
        }
    }

    /// Per-graph key; two graphs share it exactly when the method does not
    /// separate them (up to hash collisions). Always uses hashed colors.
    pub fn fingerprint(&self, g: &Graph) -> Result<u128, DistinguishError> {
        let result = match self {
            Distinguisher::Wl(cfg) => {
                let cfg = cfg.clone().with_color_mode(ColorMode::Hashed);
                refine_with(g, &cfg, &mut Palette::Hashed)?
            }
            Distinguisher::Extension(cfg) => extension_refine(cfg, g)?,
        };
        let mut words = vec![g.n() as u128];
        words.extend(result.per_round_hashes);
        Ok(hash_words(&words))
    }
}

impl fmt::Display for Distinguisher {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distinguisher::Wl(cfg) => write!(f, "{}", cfg.method),
            Distinguisher::Extension(cfg) => write!(f, "{}", cfg.kind),
        }
    }
}

impl FromStr for Distinguisher {
    type Err = DistinguishError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Ok(method) = s.parse::<WlMethod>() {
            let d = Distinguisher::Wl(WlConfig::new(method));
            d.validate()?;
            return Ok(d);
        }
        match s.parse::<ExtensionKind>() {
            Ok(kind) => Ok(Distinguisher::Extension(ExtensionConfig::new(kind))),
            Err(ExtensionError::UnknownKind(_)) => Err(DistinguishError::UnknownMethod(s.to_string())),
            Err(e) => Err(e.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::named;

    #[test]
    fn parses_every_method_name() {
        for s in ["1wl", "kwl:3", "kfwl:2", "s3", "s4", "n1", "n2", "m1"] {
            let d: Distinguisher = s.parse().unwrap();
            assert_eq!(d.to_string(), s);
        }
        assert!(matches!("foo".parse::<Distinguisher>(), Err(DistinguishError::UnknownMethod(_))));
        assert!("kwl:1".parse::<Distinguisher>().is_err());
        assert!("s2".parse::<Distinguisher>().is_err());
    }

    #[test]
    fn fingerprints_agree_with_verdicts() {
        let graphs = [named::cycle(6), named::cycles(&[3, 3]), named::path(6), named::star(5)];
        for s in ["1wl", "kwl:2", "s3", "n1", "m1"] {
            let d: Distinguisher = s.parse().unwrap();
            for g in &graphs {
                for h in &graphs {
                    let same = d.fingerprint(g).unwrap() == d.fingerprint(h).unwrap();
                    assert_eq!(same, !d.distinguishes(g, h).unwrap(), "{s}");
                }
            }
        }
    }

    #[test]
    fn budget_errors_are_resource_limits() {
        let d = Distinguisher::Wl(WlConfig::kwl(4));
        let big = named::cycle(60);
        let err = d.distinguishes(&big, &big).unwrap_err();
        assert!(err.is_resource_limit());
        assert!(!DistinguishError::UnknownMethod("x".into()).is_resource_limit());
    }
}
