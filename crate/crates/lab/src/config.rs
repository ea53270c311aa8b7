//! Flat key=value config files and the flag > file > default resolution
//! used by every subcommand.
//!
//! Format: one `key = value` per line, `#` starts a comment, blank lines
//! ignored. Keys mirror the long flag names of the subcommand being run
//! (`alpha`, `p`, `n`, `seed`, `grids`, ...) plus the global `format` and
//! `out`. Unknown keys are ignored so one file can serve several
//! subcommands.

use std::collections::BTreeMap;
use std::path::Path;

use crate::CliError;

pub struct FileConfig {
    map: BTreeMap<String, String>,
}

impl FileConfig {
    pub fn empty() -> Self {
        FileConfig {
            map: BTreeMap::new(),
        }
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| {
            CliError::Usage(format!("cannot read config file {}: {e}", path.display()))
        })?;
        let mut map = BTreeMap::new();
        for (idx, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| {
                CliError::Usage(format!(
                    "{}:{}: expected key = value",
                    path.display(),
                    idx + 1
                ))
            })?;
            map.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(FileConfig { map })
    }

    pub fn raw(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(String::as_str)
    }

    fn parsed<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v.parse::<T>().map(Some).map_err(|_| {
                CliError::Usage(format!("config key {key}: cannot parse value {v:?}"))
            }),
        }
    }

    fn parsed_list<T: std::str::FromStr>(&self, key: &str) -> Result<Option<Vec<T>>, CliError> {
        match self.raw(key) {
            None => Ok(None),
            Some(v) => v
                .split(',')
                .map(|item| {
                    item.trim().parse::<T>().map_err(|_| {
                        CliError::Usage(format!(
                            "config key {key}: cannot parse list item {item:?}"
                        ))
                    })
                })
                .collect::<Result<Vec<T>, CliError>>()
                .map(Some),
        }
    }

    pub fn get_f64(&self, key: &str) -> Result<Option<f64>, CliError> {
        self.parsed(key)
    }

    pub fn get_u64(&self, key: &str) -> Result<Option<u64>, CliError> {
        self.parsed(key)
    }

    pub fn get_usize(&self, key: &str) -> Result<Option<usize>, CliError> {
        self.parsed(key)
    }

    pub fn get_i64(&self, key: &str) -> Result<Option<i64>, CliError> {
        self.parsed(key)
    }

    pub fn get_usize_list(&self, key: &str) -> Result<Option<Vec<usize>>, CliError> {
        self.parsed_list(key)
    }

    pub fn get_f64_list(&self, key: &str) -> Result<Option<Vec<f64>>, CliError> {
        self.parsed_list(key)
    }
}

/// Flag wins, then config file, then the built-in default.
pub fn resolve<T>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Flag wins, then config file; absence is a usage error.
pub fn require<T>(flag: Option<T>, file: Option<T>, what: &str) -> Result<T, CliError> {
    flag.or(file)
        .ok_or_else(|| CliError::Usage(format!("missing required parameter --{what}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn parses_comments_blanks_and_values() {
        let dir = std::env::temp_dir();
        let path = dir.join("szego-lab-config-test.cfg");
        let mut f = std::fs::File::create(&path).unwrap();
        writeln!(f, "# comment\n\nalpha = 0.5\n n=4096 \ngrids = 64, 128").unwrap();
        let cfg = FileConfig::load(&path).unwrap();
        assert_eq!(cfg.get_f64("alpha").unwrap(), Some(0.5));
        assert_eq!(cfg.get_usize("n").unwrap(), Some(4096));
        assert_eq!(cfg.get_usize_list("grids").unwrap(), Some(vec![64, 128]));
        assert_eq!(cfg.get_f64("missing").unwrap(), None);
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn rejects_malformed_lines_and_values() {
        let dir = std::env::temp_dir();
        let path = dir.join("szego-lab-config-bad.cfg");
        std::fs::write(&path, "just words\n").unwrap();
        assert!(FileConfig::load(&path).is_err());
        std::fs::write(&path, "alpha = pi\n").unwrap();
        let cfg = FileConfig::load(&path).unwrap();
        assert!(cfg.get_f64("alpha").is_err());
        std::fs::remove_file(&path).unwrap();
    }

    #[test]
    fn precedence_is_flag_file_default() {
        assert_eq!(resolve(Some(1), Some(2), 3), 1);
        assert_eq!(resolve(None, Some(2), 3), 2);
        assert_eq!(resolve::<i32>(None, None, 3), 3);
        assert!(require::<i32>(None, None, "alpha").is_err());
    }
}
