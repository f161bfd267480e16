use std::fmt;

/// The ring axiom a Cayley table failed, reported together with a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    TableShape,
    EntryRange,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveAssociativity,
    AdditiveInverse,
    MultiplicativeAssociativity,
    LeftDistributivity,
    RightDistributivity,
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Axiom::TableShape => "table shape",
            Axiom::EntryRange => "entry range",
            Axiom::AdditiveIdentity => "additive identity at index 0",
            Axiom::AdditiveCommutativity => "commutativity of +",
            Axiom::AdditiveAssociativity => "associativity of +",
            Axiom::AdditiveInverse => "additive inverses",
            Axiom::MultiplicativeAssociativity => "associativity of *",
            Axiom::LeftDistributivity => "left distributivity",
            Axiom::RightDistributivity => "right distributivity",
        };
        f.write_str(s)
    }
}

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("axiom violation ({axiom}) at {witness:?}")]
    AxiomViolation { axiom: Axiom, witness: Vec<usize> },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("order {order} exceeds the {what} cap of {cap}")]
    OrderCapExceeded {
        what: &'static str,
        order: u64,
        cap: u64,
    },

    #[error("graph with {vertices} vertices exceeds the graph cap of {cap}")]
    GraphCapExceeded { vertices: usize, cap: usize },

    #[error("subset is not a two-sided ideal: {0}")]
    NotAnIdeal(String),

    #[error("ring has no two-sided identity")]
    NoIdentity,

    #[error("variable x{0} is not bound")]
    UnboundVariable(u32),

    #[error("the zero polynomial has no lower degree")]
    ZeroPolynomial,

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("{needed} evaluations exceed the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("format error (line {line}): {msg}")]
    Format { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a resource limit rather than bad input.
    pub fn is_resource_cap(&self) -> bool {
        matches!(
            self,
            Error::OrderCapExceeded { .. } | Error::GraphCapExceeded { .. } | Error::BudgetExceeded { .. }
        )
    }

    pub(crate) fn format(line: usize, msg: impl Into<String>) -> Self {
        Error::Format {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
