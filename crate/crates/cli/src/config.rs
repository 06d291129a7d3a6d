use clap::ValueEnum;

use plethyrs::symfunc::DEFAULT_DEGREE_LIMIT;

/// Environment variable overriding the plethysm degree guard.
pub const DEGREE_LIMIT_ENV: &str = "PLETHYRS_DEGREE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Json,
}

/// Run-wide settings. All randomness is derived from `seed`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub seed: u64,
    pub budget: usize,
    pub degree_limit: usize,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            seed: 0,
            budget: 64,
            degree_limit: DEFAULT_DEGREE_LIMIT,
            format: Format::Table,
        }
    }
}

/// Reads the degree limit from the environment, falling back to the default.
pub fn degree_limit_from_env() -> Result<usize, String> {
    match std::env::var(DEGREE_LIMIT_ENV) {
        Err(_) => Ok(DEFAULT_DEGREE_LIMIT),
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(v) if v > 0 => Ok(v),
            _ => Err(format!(
                "{DEGREE_LIMIT_ENV}={s:?} is not a positive integer"
            )),
        },
    }
}
