//! The JSON problem description and its load-time validation.

use serde::Deserialize;

use demcrystal::rootdata::{check_generalized, is_symmetrizable, CartanMatrix, Weight, WeylWord};
use demcrystal::sequence::{IotaSequence, IotaSpec};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    pub cartan: Vec<Vec<i64>>,
    pub iota: IotaConfig,
    pub lambda: Vec<i64>,
    #[serde(default)]
    pub word: Vec<usize>,
    #[serde(default)]
    pub budgets: Budgets,
    #[serde(default)]
    pub display: Display,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IotaConfig {
    #[serde(default)]
    pub prefix: Vec<usize>,
    pub cycle: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Budgets {
    pub max_elements: Option<usize>,
    pub max_depth: Option<i64>,
    pub var_cutoff: usize,
    pub count_cutoff: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            max_elements: Some(200_000),
            max_depth: None,
            var_cutoff: 8,
            count_cutoff: 10_000,
        }
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Display {
    pub paper_order: bool,
}

/// A config that passed every check.
#[derive(Debug, Clone)]
pub struct Problem {
    pub cartan: CartanMatrix,
    pub iota: IotaSequence,
    pub lambda: Weight,
    pub word: WeylWord,
    pub budgets: Budgets,
    pub paper_order: bool,
}

pub fn load(path: &str) -> CliResult<ProblemConfig> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_string(),
        source,
    })?;
    Ok(serde_json::from_str(&text)?)
}

impl ProblemConfig {
    /// Runs every check and reports all failures at once, each prefixed by
    /// its path in the document.
    pub fn validate(&self) -> CliResult<Problem> {
        let mut diag = Vec::new();
        let n = self.cartan.len();
        for (r, row) in self.cartan.iter().enumerate() {
            if row.len() != n {
                diag.push(format!("cartan[{r}]: {} entries, expected {n}", row.len()));
            }
        }
        if n == 0 {
            diag.push("cartan: empty matrix".into());
        }
        if !diag.is_empty() {
            return Err(CliError::Invalid(diag));
        }
        if let Err(e) = check_generalized(&self.cartan) {
            diag.push(format!("cartan: {e}"));
        } else if !is_symmetrizable(&self.cartan).unwrap_or(false) {
            diag.push("cartan: not symmetrizable".into());
        }
        if !diag.is_empty() {
            return Err(CliError::Invalid(diag));
        }
        let cartan = CartanMatrix::from_rows(&self.cartan)
            .map_err(|e| CliError::Invalid(vec![format!("cartan: {e}")]))?;

        if self.lambda.len() != n {
            diag.push(format!(
                "lambda: {} entries, expected {n}",
                self.lambda.len()
            ));
        }
        for (j, &m) in self.lambda.iter().enumerate() {
            if m < 0 {
                diag.push(format!(
                    "lambda[{j}]: {m} is negative, lambda must be dominant"
                ));
            }
        }

        let mut word = None;
        let mut letters_ok = true;
        for (k, &i) in self.word.iter().enumerate() {
            if i == 0 || i > n {
                diag.push(format!("word[{k}]: index {i} out of range 1..={n}"));
                letters_ok = false;
            }
        }
        if letters_ok {
            let w = WeylWord::new(self.word.clone(), n).expect("letters checked");
            if !cartan.is_reduced(&w).expect("letters checked") {
                diag.push(format!("word: {:?} is not reduced", self.word));
            }
            word = Some(w);
        }

        if self.budgets.var_cutoff == 0 {
            diag.push("budgets.var_cutoff: must be at least 1".into());
        }
        if self.budgets.count_cutoff == 0 {
            diag.push("budgets.count_cutoff: must be at least 1".into());
        }

        let iota = self.build_iota(&cartan, word.as_ref(), &mut diag);
        if !diag.is_empty() {
            return Err(CliError::Invalid(diag));
        }
        Ok(Problem {
            cartan,
            iota: iota.expect("no diagnostics"),
            lambda: Weight::new(self.lambda.clone()),
            word: word.expect("no diagnostics"),
            budgets: self.budgets.clone(),
            paper_order: self.display.paper_order,
        })
    }

    /// An empty prefix with a nonempty word means "start with the word, then
    /// repeat the cycle".
    fn build_iota(
        &self,
        cartan: &CartanMatrix,
        word: Option<&WeylWord>,
        diag: &mut Vec<String>,
    ) -> Option<IotaSequence> {
        let spec = IotaSpec::new(self.iota.prefix.clone(), self.iota.cycle.clone());
        if self.iota.cycle.is_empty() {
            diag.push("iota.cycle: must not be empty".into());
            return None;
        }
        let violations = spec.validate(cartan);
        if !violations.is_empty() {
            for v in violations {
                diag.push(format!("iota: {v}"));
            }
            return None;
        }
        let word = word?;
        let iota = if self.iota.prefix.is_empty() && !word.is_empty() {
            match IotaSequence::extending(word, &self.iota.cycle, cartan) {
                Ok(s) => s,
                Err(e) => {
                    diag.push(format!("iota.cycle: {e}"));
                    return None;
                }
            }
        } else {
            IotaSequence::new(spec, cartan).expect("validated")
        };
        if let Err(e) = iota.check_extends(word) {
            diag.push(format!("iota.prefix: {e}"));
            return None;
        }
        Some(iota)
    }
}
