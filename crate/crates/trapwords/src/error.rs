//! Error type shared by the whole crate.

/// Errors reported by parsing, decomposition and counting routines.
///
/// The distinction matters to callers: `Parse` and `InvalidArgument` mean the
/// input was outside an operation's domain, `Precondition` means a structural
/// requirement on the word was not met (e.g. asking for the central root of a
/// balanced word), and `Verification` means an internal cross-check failed,
/// which always indicates a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The input string contained a character outside the `{a, b}` alphabet.
    #[error("invalid character {found:?} at position {position}: words are over the alphabet {{a, b}}")]
    Parse { found: char, position: usize },

    /// The input word was longer than an operation is willing to accept.
    #[error("word of length {length} exceeds the limit of {limit} for {op}")]
    TooLong {
        op: &'static str,
        length: usize,
        limit: usize,
    },

    /// An argument was outside the documented range (empty word, zero count, ...).
    #[error("{op}: {message}")]
    InvalidArgument { op: &'static str, message: String },

    /// A structural precondition on the input word does not hold.
    #[error("{op}: precondition violated: {message}")]
    Precondition { op: &'static str, message: String },

    /// An internal consistency check failed; this indicates a bug.
    #[error("{op}: internal verification failed: {message}")]
    Verification { op: &'static str, message: String },
}

impl Error {
    pub(crate) fn empty_word(op: &'static str) -> Self {
        Error::InvalidArgument {
            op,
            message: "the empty word is not accepted".into(),
        }
    }
}
