use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Classical cases excluded from the helicoid normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExcludedCase {
    /// mu = 1: Dini helicoids.
    Dini,
    /// r = 0: pseudospherical surfaces of revolution.
    Revolution,
    /// mu = 0: no traveling wave.
    Degenerate,
    /// mu < 0 or r < 0: mirror image of a normal-form helicoid.
    MirrorImage,
}

impl std::fmt::Display for ExcludedCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExcludedCase::Dini => write!(f, "mu = 1 is the Dini helicoid case"),
            ExcludedCase::Revolution => write!(f, "r = 0 is the surface-of-revolution case"),
            ExcludedCase::Degenerate => write!(f, "mu = 0 has no traveling-wave potential"),
            ExcludedCase::MirrorImage => write!(
                f,
                "mu < 0 or r < 0 is a mirror image of a normal-form helicoid (use mu > 0, r > 0)"
            ),
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("{name} = {value} is outside the domain: {expected}")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("excluded parameters: {0}")]
    Excluded(ExcludedCase),

    #[error("root bracketing failed after {expansions} expansions (last bracket [{lo}, {hi}])")]
    Bracket { expansions: usize, lo: f64, hi: f64 },

    #[error("non-finite value {value} while evaluating {what} at y = {y}")]
    NonFinite {
        what: &'static str,
        y: f64,
        value: f64,
    },

    #[error("curvature estimate unreliable at u = {u}: distance {distance} to the singular set")]
    UnreliableEstimate { u: f64, distance: f64 },

    #[error("wave number {wave_number} is not an integer within {tol}")]
    NotTwistedColumn { wave_number: f64, tol: f64 },

    #[error("cusp check failed at u = {u}: |gamma'| = {speed}, tangent alignment {alignment}")]
    CuspCheck { u: f64, speed: f64, alignment: f64 },

    #[error("mirror identity ({part}) fails at (u, v) = ({u}, {v}): deviation {deviation}")]
    MirrorMismatch {
        part: &'static str,
        u: f64,
        v: f64,
        deviation: f64,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, expected: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            expected,
        }
    }

    /// True for errors caused by invalid input rather than a failed computation.
    pub fn is_usage(&self) -> bool {
        matches!(self, Error::Domain { .. } | Error::Excluded(_))
    }
}
