//! Declarative per-language lexical rules.
//!
//! A rules file is TOML with the keys below; unknown keys are rejected.
//!
//! | key                  | meaning                                                   |
//! |----------------------|-----------------------------------------------------------|
//! | `name`               | language family name                                      |
//! | `extensions`         | file extensions without the dot, matched case-insensitively |
//! | `line_comments`      | markers that comment out the rest of a line               |
//! | `block_comments`     | `[open, close]` pairs                                     |
//! | `strings`            | array of `{ open, close, escape?, multiline? }` tables    |
//! | `preprocessor`       | optional prefix of directive lines excluded from parsing  |
//! | `function_style`     | `braces` (signature before `{`) or `indent` (keyword + block) |
//! | `function_keywords`  | keywords that open a function in `indent` style           |
//! | `control_keywords`   | statement openers that are never function signatures      |
//! | `type_keywords`      | declarations that are never function signatures           |
//! | `decision_keywords`  | keywords that add a branch to cyclomatic complexity       |
//! | `decision_operators` | operators that add a branch (`&&`, `||`, `?`)             |

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StringRule {
    pub open: String,
    pub close: String,
    #[serde(default)]
    pub escape: Option<String>,
    #[serde(default)]
    pub multiline: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctionStyle {
    Braces,
    Indent,
}

#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageRules {
    pub name: String,
    pub extensions: Vec<String>,
    #[serde(default)]
    pub line_comments: Vec<String>,
    #[serde(default)]
    pub block_comments: Vec<(String, String)>,
    #[serde(default)]
    pub strings: Vec<StringRule>,
    #[serde(default)]
    pub preprocessor: Option<String>,
    pub function_style: FunctionStyle,
    #[serde(default)]
    pub function_keywords: Vec<String>,
    #[serde(default)]
    pub control_keywords: Vec<String>,
    #[serde(default)]
    pub type_keywords: Vec<String>,
    #[serde(default)]
    pub decision_keywords: Vec<String>,
    #[serde(default)]
    pub decision_operators: Vec<String>,
}

const BUILTIN: [(&str, &str); 3] = [
    ("c_family.toml", include_str!("rules/c_family.toml")),
    ("java_family.toml", include_str!("rules/java_family.toml")),
    ("python.toml", include_str!("rules/python.toml")),
];

impl LanguageRules {
    pub fn from_toml(text: &str) -> Result<Self> {
        let mut rules: LanguageRules =
            toml::from_str(text).map_err(|e| Error::Config(format!("language rules: {e}")))?;
        for ext in &mut rules.extensions {
            *ext = ext.trim_start_matches('.').to_ascii_lowercase();
        }
        // Longest delimiters first so `"""` wins over `"`.
        rules.strings.sort_by(|a, b| b.open.len().cmp(&a.open.len()));
        rules.validate()?;
        Ok(rules)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::from_toml(&text)
    }

    fn validate(&self) -> Result<()> {
        if self.extensions.is_empty() {
            return Err(Error::Config(format!("{}: no extensions", self.name)));
        }
        if self.decision_keywords.is_empty() && self.decision_operators.is_empty() {
            return Err(Error::Config(format!("{}: no decision tokens", self.name)));
        }
        if self.function_style == FunctionStyle::Indent && self.function_keywords.is_empty() {
            return Err(Error::Config(format!(
                "{}: indent style needs function_keywords",
                self.name
            )));
        }
        Ok(())
    }

    pub fn is_decision_keyword(&self, word: &str) -> bool {
        self.decision_keywords.iter().any(|k| k == word)
    }

    pub fn is_decision_operator(&self, op: &str) -> bool {
        self.decision_operators.iter().any(|k| k == op)
    }

    pub fn is_control_keyword(&self, word: &str) -> bool {
        self.control_keywords.iter().any(|k| k == word)
    }

    pub fn is_type_keyword(&self, word: &str) -> bool {
        self.type_keywords.iter().any(|k| k == word)
    }
}

/// Registered languages, keyed by extension.
#[derive(Debug, Clone)]
pub struct RuleSet {
    languages: Vec<LanguageRules>,
    by_extension: BTreeMap<String, usize>,
}

impl RuleSet {
    pub fn new(languages: Vec<LanguageRules>) -> Result<Self> {
        let mut by_extension = BTreeMap::new();
        for (idx, lang) in languages.iter().enumerate() {
            for ext in &lang.extensions {
                if let Some(prev) = by_extension.insert(ext.clone(), idx) {
                    return Err(Error::Config(format!(
                        "extension `{ext}` claimed by both {} and {}",
                        languages[prev].name, lang.name
                    )));
                }
            }
        }
        Ok(RuleSet {
            languages,
            by_extension,
        })
    }

    /// C-family, Java-family and Python rules.
    pub fn builtin() -> Self {
        let langs = BUILTIN
            .iter()
            .map(|(file, text)| {
                LanguageRules::from_toml(text)
                    .unwrap_or_else(|e| panic!("built-in rules {file} are invalid: {e}"))
            })
            .collect();
        RuleSet::new(langs).expect("built-in extensions are disjoint")
    }

    /// Built-in rules plus user rule files, which must not reuse an extension.
    pub fn builtin_with(extra: &[impl AsRef<Path>]) -> Result<Self> {
        let mut langs = RuleSet::builtin().languages;
        for p in extra {
            langs.push(LanguageRules::from_file(p.as_ref())?);
        }
        RuleSet::new(langs)
    }

    pub fn for_path(&self, path: &Path) -> Option<&LanguageRules> {
        let ext = path.extension()?.to_str()?.to_ascii_lowercase();
        self.by_extension.get(&ext).map(|&i| &self.languages[i])
    }

    pub fn languages(&self) -> &[LanguageRules] {
        &self.languages
    }
}
