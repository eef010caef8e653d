use clap::ValueEnum;
use fwe_core::exactnum::parse_rational;
use fwe_core::homopoly::MAX_DEGREE;
use fwe_core::rhcheck::parse_tolerance;
use fwe_core::Rational;

use crate::Failure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

/// Settings shared by every subcommand, validated once.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub q: Option<Rational>,
    pub precision_bits: usize,
    pub tolerance: Rational,
    pub output: Format,
    pub max_degree: usize,
}

impl RunConfig {
    pub fn new(
        q: Option<&str>,
        precision_bits: usize,
        tolerance: &str,
        output: Format,
        max_degree: usize,
    ) -> Result<Self, Failure> {
        if max_degree > MAX_DEGREE {
            return Err(Failure::Usage(format!(
                "--max-degree {max_degree} is above the ceiling {MAX_DEGREE}"
            )));
        }
        Ok(Self {
            q: q.map(parse_rational).transpose()?,
            precision_bits,
            tolerance: parse_tolerance(tolerance)?,
            output,
            max_degree,
        })
    }

    /// The `--q` value, for commands that cannot do without one.
    pub fn require_q(&self) -> Result<&Rational, Failure> {
        self.q
            .as_ref()
            .ok_or_else(|| Failure::Usage("this command needs --q".into()))
    }

    pub fn check_degree(&self, n: usize) -> Result<(), Failure> {
        if n > self.max_degree {
            return Err(fwe_core::Error::DegreeTooLarge {
                degree: n,
                max: self.max_degree,
            }
            .into());
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn caps_and_parsing() {
        let c = RunConfig::new(Some("3/2"), 256, "1e-18", Format::Json, 512).unwrap();
        assert_eq!(c.q, Some(Rational::new(3.into(), 2.into())));
        assert!(c.check_degree(512).is_ok());
        assert!(c.check_degree(513).is_err());
        assert!(matches!(
            RunConfig::new(None, 256, "1e-18", Format::Json, 1000),
            Err(Failure::Usage(_))
        ));
        assert!(matches!(
            RunConfig::new(None, 256, "-1", Format::Json, 512),
            Err(Failure::Domain(_))
        ));
        assert!(matches!(
            RunConfig::new(Some("x"), 256, "1e-18", Format::Json, 512),
            Err(Failure::Domain(_))
        ));
    }
}
