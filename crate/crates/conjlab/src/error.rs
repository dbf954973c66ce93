use conjlab_core::derivation::DerivationError;
use conjlab_core::experiments::ExperimentError;
use conjlab_core::GroupError;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
    #[error("{0}")]
    Consistency(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
            CliError::Consistency(_) => 4,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<GroupError> for CliError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::BudgetExceeded { .. } => CliError::Resource(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<DerivationError> for CliError {
    fn from(e: DerivationError) -> Self {
        match e {
            DerivationError::Group(g) => g.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<ExperimentError> for CliError {
    fn from(e: ExperimentError) -> Self {
        match e {
            ExperimentError::Mismatch { .. } => CliError::Consistency(e.to_string()),
            ExperimentError::Derivation(d) => d.into(),
            ExperimentError::Group(g) => g.into(),
            other => CliError::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let budget = GroupError::BudgetExceeded {
            budget: 1,
            explored: 2,
        };
        assert_eq!(CliError::from(budget.clone()).exit_code(), 3);
        assert_eq!(
            CliError::from(DerivationError::Group(budget)).exit_code(),
            3
        );
        assert_eq!(
            CliError::from(GroupError::UnknownModel("x".into())).exit_code(),
            2
        );
        let mismatch = ExperimentError::Mismatch {
            m: 1,
            n: 1,
            engine: "1".into(),
            formula: "2".into(),
        };
        assert_eq!(CliError::from(mismatch).exit_code(), 4);
        assert_eq!(CliError::from(ExperimentError::EmptyRange).exit_code(), 2);
    }
}
