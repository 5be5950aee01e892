use crate::commands::CliError;

pub const DEFAULT_MAX_N: usize = 8;
pub const DEFAULT_MAX_M: usize = 3;
pub const DEFAULT_MAX_VARS: usize = 12;

/// Desk-scale ceilings. Flags win over SUPERSCHUR_MAX_N, which wins over
/// the defaults.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_m: usize,
    pub max_vars: usize,
}

impl Limits {
    pub fn resolve(max_n: Option<usize>, max_m: Option<usize>, max_vars: Option<usize>) -> Result<Self, CliError> {
        let env = match std::env::var("SUPERSCHUR_MAX_N") {
            Ok(v) => {
                Some(v.trim().parse().map_err(|_| CliError::Parse(format!("SUPERSCHUR_MAX_N={v:?} is not a number")))?)
            }
            Err(_) => None,
        };
        Ok(Limits {
            max_n: max_n.or(env).unwrap_or(DEFAULT_MAX_N),
            max_m: max_m.unwrap_or(DEFAULT_MAX_M),
            max_vars: max_vars.unwrap_or(DEFAULT_MAX_VARS),
        })
    }

    pub fn degree(&self, n: usize, m: usize) -> Result<(), CliError> {
        if n > self.max_n {
            return Err(CliError::Bounds(format!(
                "degree {n} exceeds the ceiling {} (raise with --max-n)",
                self.max_n
            )));
        }
        if m > self.max_m {
            return Err(CliError::Bounds(format!(
                "fermionic degree {m} exceeds the ceiling {} (raise with --max-m)",
                self.max_m
            )));
        }
        Ok(())
    }

    pub fn vars(&self, nvars: usize) -> Result<(), CliError> {
        if nvars > self.max_vars {
            return Err(CliError::Bounds(format!(
                "{nvars} variables exceed the ceiling {} (raise with --max-vars)",
                self.max_vars
            )));
        }
        Ok(())
    }
}
