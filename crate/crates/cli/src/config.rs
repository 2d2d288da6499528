use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use klr_core::klr::GroundField;
use klr_core::rootsys::{hmm_order, CartanDatum, ConvexOrder, RootSystem};
use serde::Deserialize;

/// Contents of a `--config` TOML file. Every field is optional; command-line
/// flags win over the file.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(rename = "type")]
    pub type_name: Option<String>,
    pub cartan: Option<CartanSection>,
    pub reduced_word: Option<WordSpec>,
    #[serde(default)]
    pub budget: BudgetSection,
    pub output: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub characteristic: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CartanSection {
    pub pairing: Vec<Vec<i64>>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BudgetSection {
    pub max_dim: Option<usize>,
    pub max_height: Option<i64>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum WordSpec {
    Explicit(Vec<usize>),
    Keyword(String),
}

impl WordSpec {
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("hmm") {
            return Ok(WordSpec::Keyword("hmm".into()));
        }
        klr_core::rootsys::parse_word(s)
            .map(WordSpec::Explicit)
            .with_context(|| format!("cannot parse reduced word `{s}`"))
    }
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }
}

/// Everything a command needs, validated up front.
#[derive(Debug)]
pub struct RunConfig {
    pub rs: RootSystem,
    pub word: WordSpec,
    pub max_dim: usize,
    pub max_height: i64,
    pub output: Option<PathBuf>,
    pub cache_dir: Option<PathBuf>,
    pub field: GroundField,
}

pub struct Overrides<'a> {
    pub type_name: Option<&'a str>,
    pub word: Option<&'a str>,
    pub max_dim: Option<usize>,
    pub max_height: Option<i64>,
    pub output: Option<&'a Path>,
    pub cache_dir: Option<&'a Path>,
    pub characteristic: Option<u64>,
}

pub const DEFAULT_MAX_DIM: usize = 400;
pub const DEFAULT_MAX_HEIGHT: i64 = 4;

impl RunConfig {
    pub fn resolve(file: ConfigFile, o: Overrides) -> Result<Self> {
        let cartan = match (o.type_name.or(file.type_name.as_deref()), file.cartan) {
            (Some(name), _) => CartanDatum::named(name)?,
            (None, Some(c)) => CartanDatum::new(c.pairing)?,
            (None, None) => bail!(UsageError("no Cartan datum: pass --type or a config with [cartan]".into())),
        };
        let rs = RootSystem::new(cartan);
        let word = match o.word {
            Some(w) => WordSpec::parse(w)?,
            None => file.reduced_word.unwrap_or(WordSpec::Keyword("hmm".into())),
        };
        match &word {
            WordSpec::Keyword(k) if k.eq_ignore_ascii_case("hmm") => {}
            WordSpec::Keyword(k) => bail!(UsageError(format!("unknown reduced word keyword `{k}`"))),
            WordSpec::Explicit(w) => rs.validate_reduced_word(w)?,
        }
        let field = match o.characteristic.or(file.characteristic) {
            None | Some(0) => GroundField::Rational,
            Some(p) if is_prime(p) => GroundField::Prime(p),
            Some(p) => bail!(UsageError(format!("characteristic {p} is not prime"))),
        };
        Ok(RunConfig {
            rs,
            word,
            max_dim: o.max_dim.or(file.budget.max_dim).unwrap_or(DEFAULT_MAX_DIM),
            max_height: o.max_height.or(file.budget.max_height).unwrap_or(DEFAULT_MAX_HEIGHT),
            output: o.output.map(Path::to_path_buf).or(file.output),
            cache_dir: o.cache_dir.map(Path::to_path_buf).or(file.cache_dir),
            field,
        })
    }

    pub fn type_label(&self) -> String {
        match self.rs.cartan().name() {
            Some(n) => n.to_string(),
            None => format!("{:?}", self.rs.cartan().pairing()),
        }
    }

    pub fn reduced_word(&self) -> Result<Vec<usize>> {
        match &self.word {
            WordSpec::Explicit(w) => Ok(w.clone()),
            WordSpec::Keyword(_) => Ok(hmm_order(&self.rs)?.order.reduced_word(&self.rs)?),
        }
    }

    pub fn order(&self) -> Result<ConvexOrder> {
        match &self.word {
            WordSpec::Explicit(w) => Ok(ConvexOrder::from_reduced_word(&self.rs, w)?),
            WordSpec::Keyword(_) => Ok(hmm_order(&self.rs)?.order),
        }
    }

    pub fn is_hmm(&self) -> bool {
        matches!(self.word, WordSpec::Keyword(_))
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Bad input from the user; exits with status 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[cfg(test)]
mod tests {
    use super::*;

    fn none() -> Overrides<'static> {
        Overrides {
            type_name: None,
            word: None,
            max_dim: None,
            max_height: None,
            output: None,
            cache_dir: None,
            characteristic: None,
        }
    }

    #[test]
    fn toml_config() {
        let f: ConfigFile = toml::from_str(
            "reduced_word = [0, 1, 0]\n[cartan]\npairing = [[2, -1], [-1, 2]]\n[budget]\nmax_dim = 50\n",
        )
        .unwrap();
        let c = RunConfig::resolve(f, none()).unwrap();
        assert_eq!(c.reduced_word().unwrap(), vec![0, 1, 0]);
        assert_eq!(c.max_dim, 50);
        let f: ConfigFile = toml::from_str("type = \"G2\"\nreduced_word = \"hmm\"\n").unwrap();
        let c = RunConfig::resolve(f, none()).unwrap();
        assert!(c.is_hmm());
        assert_eq!(c.type_label(), "G2");
    }

    #[test]
    fn rejects_bad_input() {
        let f: ConfigFile = toml::from_str("type = \"A2\"\nreduced_word = [0, 0, 1]\n").unwrap();
        assert!(RunConfig::resolve(f, none()).is_err());
        assert!(toml::from_str::<ConfigFile>("typo = 1\n").is_err());
        let f = ConfigFile::default();
        assert!(RunConfig::resolve(f, Overrides { type_name: Some("A2"), characteristic: Some(4), ..none() }).is_err());
        assert!(RunConfig::resolve(ConfigFile::default(), none()).is_err());
    }
}
