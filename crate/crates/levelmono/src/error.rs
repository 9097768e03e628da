use thiserror::Error;

/// Errors across the crate. Arithmetic itself is total; errors come from
/// inputs and from oracles that refuse to guess.
#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown generator '{0}'")]
    UnknownGenerator(String),

    #[error("unsupported nilpotency depth {0} (supported: 2, 3, 4)")]
    UnsupportedDepth(usize),

    #[error("genus {0} is too small (need g >= 2)")]
    GenusTooSmall(u32),

    #[error("genus {0} exceeds the enumeration bound (supported: 2 <= g <= 4)")]
    GenusTooLarge(u32),

    #[error("invalid handle split g1={g1} for genus g={g}")]
    BadSplit { g: u32, g1: u32 },

    #[error("reduction map does not kill the surface relator")]
    RelatorNotKilled,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex '{0}' violates stability (2g_v - 2 + valence <= 0)")]
    Unstable(String),

    #[error("unsupported parameters: k={k}, n={n} (k >= 4 requires gcd(n,6)=1)")]
    UnsupportedParams { k: usize, n: u64 },

    #[error("saturation did not stabilize within {0} closure rounds")]
    BoundTooSmall(usize),

    #[error("cut-pair relation does not split into maximal cut systems: {0}")]
    CutSystemInconsistent(String),

    #[error("bad input: {0}")]
    BadInput(String),
}
