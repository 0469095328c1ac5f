//! The algebra file format, the builtin reference corpus, and the batch
//! runner.
//!
//! An algebra file is a JSON object:
//!
//! ```json
//! {
//!   "p": 3,
//!   "even": ["e1", "e2", "e3"],
//!   "odd": [],
//!   "bracket": { "e1,e2": { "e3": 1 } },
//!   "pmap": { "e1": { "e3": 1 } }
//! }
//! ```
//!
//! Bracket keys name a pair `i,j` with `i` not after `j` in declaration
//! order; omitted pairs and p-map entries are zero. Integers may be of any
//! size and are reduced mod `p`.

mod report;

pub use report::{render_classification, render_text, AlgebraReport, EntryStatus, ReportFile, Timing, REPORT_VERSION};

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::classify::{cross_validate, Property, Verdict};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::linalg::{Fp, Scalar};
use crate::superlie::{verify_axioms, AxiomReport, LieSuperData};

/// Expected verdict quadruple attached to corpus files.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub nonmatrix_pi: bool,
    pub lie_solvable: bool,
    pub lie_nilpotent: bool,
    pub lie_super_nilpotent: bool,
}

impl Expected {
    pub fn verdicts(&self) -> [Verdict; 4] {
        [
            self.nonmatrix_pi,
            self.lie_solvable,
            self.lie_nilpotent,
            self.lie_super_nilpotent,
        ]
        .map(Verdict::from_bool)
    }

    pub fn get(&self, p: Property) -> bool {
        match p {
            Property::NonmatrixPi => self.nonmatrix_pi,
            Property::LieSolvable => self.lie_solvable,
            Property::LieNilpotent => self.lie_nilpotent,
            Property::LieSuperNilpotent => self.lie_super_nilpotent,
        }
    }
}

/// On-disk representation, kept verbatim so files round-trip.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub p: Number,
    pub even: Vec<String>,
    pub odd: Vec<String>,
    #[serde(default)]
    pub bracket: BTreeMap<String, BTreeMap<String, Number>>,
    #[serde(default)]
    pub pmap: BTreeMap<String, BTreeMap<String, Number>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

impl AlgebraFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Builds the structure constants (no axiom check).
    pub fn to_lie(&self) -> Result<LieSuperData> {
        let p_text = self.p.to_string();
        let p: u32 = p_text.parse().map_err(|_| Error::InvalidPrime(p_text.clone()))?;
        let field = Fp::new(p)?;
        let mut index: HashMap<&str, usize> = HashMap::new();
        for (k, name) in self.even.iter().chain(&self.odd).enumerate() {
            if name.is_empty() || name.contains(',') || name.trim() != name {
                return Err(Error::InvalidData(format!("bad basis name `{name}`")));
            }
            if index.insert(name.as_str(), k).is_some() {
                return Err(Error::InvalidData(format!("duplicate basis name `{name}`")));
            }
        }
        let n0 = self.even.len();
        let n = n0 + self.odd.len();
        let lookup = |name: &str, ctx: &str| -> Result<usize> {
            index
                .get(name.trim())
                .copied()
                .ok_or_else(|| Error::InvalidData(format!("unknown name `{name}` in {ctx}")))
        };
        let coeff = |c: &Number, ctx: &str| -> Result<Scalar> {
            field
                .from_decimal(&c.to_string())
                .ok_or_else(|| Error::InvalidData(format!("coefficient `{c}` in {ctx} is not an integer")))
        };
        let vector = |terms: &BTreeMap<String, Number>, ctx: &str| -> Result<Vec<Scalar>> {
            let mut v = vec![0; n];
            for (name, c) in terms {
                let k = lookup(name, ctx)?;
                v[k] = field.add(v[k], coeff(c, ctx)?);
            }
            Ok(v)
        };
        let mut brackets = Vec::new();
        for (key, terms) in &self.bracket {
            let ctx = format!("bracket `{key}`");
            let (a, b) = key
                .split_once(',')
                .ok_or_else(|| Error::InvalidData(format!("bracket key `{key}` is not `a,b`")))?;
            let (i, j) = (lookup(a, &ctx)?, lookup(b, &ctx)?);
            if i > j {
                return Err(Error::InvalidData(format!(
                    "bracket key `{key}` lists `{}` after `{}` in declaration order; write `{},{}`",
                    a.trim(),
                    b.trim(),
                    b.trim(),
                    a.trim()
                )));
            }
            if brackets.iter().any(|(ij, _)| *ij == (i, j)) {
                return Err(Error::InvalidData(format!("bracket `{key}` given twice")));
            }
            brackets.push(((i, j), vector(terms, &ctx)?));
        }
        let mut pmap = vec![vec![0; n]; n0];
        for (name, terms) in &self.pmap {
            let ctx = format!("pmap `{name}`");
            let k = lookup(name, &ctx)?;
            if k >= n0 {
                return Err(Error::InvalidData(format!("p-map given for odd element `{name}`")));
            }
            let v = vector(terms, &ctx)?;
            if v[n0..].iter().any(|&c| c != 0) {
                return Err(Error::InvalidData(format!("p-map of `{name}` has an odd component")));
            }
            pmap[k] = v;
        }
        LieSuperData::new(field, self.even.clone(), self.odd.clone(), brackets, pmap)
    }
}

/// Parses the text into structure constants without checking axioms.
pub fn parse_algebra(text: &str) -> Result<LieSuperData> {
    AlgebraFile::from_json(text)?.to_lie()
}

/// A parsed file whose axioms have been checked.
#[derive(Debug, Clone)]
pub struct LoadedAlgebra {
    pub file: AlgebraFile,
    pub lie: LieSuperData,
    pub axioms: AxiomReport,
}

/// Parses and verifies; an axiom failure is an error naming the first
/// failing axiom.
pub fn load_verified(text: &str, enum_cap: u64) -> Result<LoadedAlgebra> {
    let file = AlgebraFile::from_json(text)?;
    let lie = file.to_lie()?;
    let axioms = verify_axioms(&lie, enum_cap);
    if let Some(f) = axioms.first_failure() {
        return Err(Error::Axiom(f.to_string()));
    }
    Ok(LoadedAlgebra { file, lie, axioms })
}

pub fn read_file(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

macro_rules! builtin {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../../corpus/", $name, ".json")))),*]
    };
}

static BUILTIN: &[(&str, &str)] = builtin![
    "abelian1",
    "heisenberg3",
    "heisenberg5",
    "heisenberg3_pmap",
    "sl2_p3",
    "sl2_p5",
    "grassmann3",
    "toral_odd",
    "clifford_obstruction",
    "degenerate_clifford",
    "weight_vector",
    "torus1",
    "borel2",
    "odd_module3",
    "super_heisenberg",
    "hyperbolic_toral",
    "heis_plus_odd",
    "heisenberg_super",
    "large_nilpotent",
];

/// `(name, file text)` for every builtin reference algebra.
pub fn builtin_sources() -> &'static [(&'static str, &'static str)] {
    BUILTIN
}

pub fn builtin_corpus() -> Vec<AlgebraFile> {
    BUILTIN
        .iter()
        .map(|(name, text)| AlgebraFile::from_json(text).unwrap_or_else(|e| panic!("builtin {name}: {e}")))
        .collect()
}

/// Every `*.json` file in a directory, sorted by file name.
pub fn read_dir(dir: &Path) -> Result<Vec<(String, String)>> {
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let text = read_file(&p)?;
            let label = p.file_name().unwrap().to_string_lossy().into_owned();
            Ok((label, text))
        })
        .collect()
}

/// Parse, verify and cross-validate one source.
pub fn analyze_source(source: &str, text: &str, caps: Caps) -> (AlgebraReport, f64) {
    let start = Instant::now();
    let entry = match load_verified(text, caps.enum_cap) {
        Err(e) => AlgebraReport::rejected(source, &e),
        Ok(loaded) => {
            let name = loaded.file.name.clone().or_else(|| Some(source.to_string()));
            let report = cross_validate(&loaded.lie, name, caps);
            AlgebraReport::analyzed(source, loaded.file.expected, &loaded.axioms, report)
        }
    };
    (entry, start.elapsed().as_secs_f64())
}

/// Runs every source on a pool of `jobs` threads; results keep input order.
pub fn run_corpus(sources: &[(String, String)], caps: Caps, jobs: usize) -> Result<ReportFile> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Io(e.to_string()))?;
    let results: Vec<(AlgebraReport, f64)> =
        pool.install(|| sources.par_iter().map(|(s, t)| analyze_source(s, t, caps)).collect());
    let timing = Timing {
        seconds: results.iter().map(|(r, t)| (r.source.clone(), *t)).collect(),
    };
    Ok(ReportFile::new(caps, results.into_iter().map(|(r, _)| r).collect(), Some(timing)))
}
