use hypsym::census::CensusError;
use hypsym::graphs::GraphError;
use hypsym::groups::GroupError;
use hypsym::lattice::LatticeError;
use hypsym::triangulation::TriangulationError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {msg}")]
    Parse { path: String, msg: String },
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Failed(_) => 1,
            CliError::Parse { .. } => 2,
            CliError::Cap(_) => 3,
        }
    }

    pub fn parse(path: &str, err: impl ToString) -> Self {
        CliError::Parse { path: path.to_string(), msg: err.to_string() }
    }
}

impl From<TriangulationError> for CliError {
    fn from(e: TriangulationError) -> Self {
        match e {
            TriangulationError::TooLarge { .. } | TriangulationError::TooManyAutomorphisms(_) => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::TooLarge { .. } => CliError::Cap(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::TooLarge { .. } | GraphError::CubicCap { .. } | GraphError::TooManyLabels(_) => {
                CliError::Cap(e.to_string())
            }
            _ => CliError::Failed(e.to_string()),
        }
    }
}

impl From<CensusError> for CliError {
    fn from(e: CensusError) -> Self {
        match e {
            CensusError::Graph(g) => g.into(),
            CensusError::Triangulation(t) => t.into(),
            CensusError::NotEnoughAsymmetric { .. } => CliError::Usage(e.to_string()),
        }
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        match e {
            LatticeError::BadParameter(_) | LatticeError::BadLength(_) => CliError::Usage(e.to_string()),
            _ => CliError::Failed(e.to_string()),
        }
    }
}
