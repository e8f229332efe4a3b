use std::path::PathBuf;

use deltaderiv::Rational;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Solve,
    Scan,
    Verify,
    Describe,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

/// Where the algebra and module come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    Descriptors { algebra: String, module: String },
    File(PathBuf),
}

/// One fully specified invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub source: Option<Source>,
    pub delta: Option<Rational>,
    pub include_zero: bool,
    pub grading_element: Option<usize>,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub max_n: Option<usize>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        JobSpec {
            command,
            source: None,
            delta: None,
            include_zero: false,
            grading_element: None,
            format: Format::Json,
            output: None,
            max_n: None,
        }
    }

    /// Flags that make no sense for the command are rejected rather than
    /// ignored.
    pub fn validate(&self) -> Result<(), CliError> {
        let bad = |msg: &str| Err(CliError::Job(msg.to_string()));
        match self.command {
            Command::Solve if self.delta.is_none() => return bad("solve requires --delta"),
            Command::Scan if self.delta.is_some() => {
                return bad("scan searches over delta; --delta is not allowed")
            }
            _ => {}
        }
        if self.command != Command::Verify {
            if self.source.is_none() {
                return bad("give --algebra and --module, or --input");
            }
            if self.max_n.is_some() {
                return bad("--max-n only applies to verify");
            }
        } else {
            if self.source.is_some() || self.delta.is_some() {
                return bad("verify takes no algebra, module or delta");
            }
            if self.max_n == Some(0) {
                return bad("--max-n must be at least 1");
            }
        }
        if self.include_zero && self.command != Command::Scan {
            return bad("--include-zero only applies to scan");
        }
        if self.grading_element.is_some() && self.command != Command::Solve {
            return bad("--grading-element only applies to solve");
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use deltaderiv::rat;

    fn with_source(c: Command) -> JobSpec {
        JobSpec {
            source: Some(Source::Descriptors {
                algebra: "sl2".into(),
                module: "V(1)".into(),
            }),
            ..JobSpec::new(c)
        }
    }

    #[test]
    fn delta_rules() {
        assert!(with_source(Command::Solve).validate().is_err());
        let solve = JobSpec {
            delta: Some(rat(1, 1)),
            ..with_source(Command::Solve)
        };
        assert!(solve.validate().is_ok());
        assert!(with_source(Command::Scan).validate().is_ok());
        let scan = JobSpec {
            delta: Some(rat(1, 1)),
            ..with_source(Command::Scan)
        };
        assert!(scan.validate().is_err());
    }

    #[test]
    fn flag_scoping() {
        assert!(JobSpec::new(Command::Verify).validate().is_ok());
        assert!(with_source(Command::Verify).validate().is_err());
        assert!(JobSpec::new(Command::Scan).validate().is_err());
        let zero = JobSpec {
            include_zero: true,
            ..with_source(Command::Describe)
        };
        assert!(zero.validate().is_err());
    }
}
