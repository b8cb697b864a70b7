use super::{unwire, wire, FileFormat, IoError};
use crate::source::{
    resolve_clauses,
    ClauseEmbedding, Embedding, Nae3SatInstance, OneInThreeInstance, Side, SourceInstance, SubsetSumInstance,
    ThreeDmInstance,
};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum SideFile {
    Above,
    Below,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct LegFile {
    variable: String,
    slot: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ClauseEmbeddingFile {
    side: SideFile,
    level: u32,
    legs: [LegFile; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum SourceFile {
    #[serde(rename = "nae3sat")]
    Nae { variables: Vec<String>, clauses: Vec<[String; 3]> },
    /// A missing embedding is computed on load.
    #[serde(rename = "1in3")]
    OneInThree {
        variables: Vec<String>,
        clauses: Vec<[String; 3]>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        embedding: Option<Vec<ClauseEmbeddingFile>>,
    },
    #[serde(rename = "3dm")]
    ThreeDm { n: usize, triples: Vec<[usize; 3]> },
    #[serde(rename = "subsetsum")]
    SubsetSum { elements: Vec<u64>, target: u64 },
}

fn names(variables: &[String], clauses: &[[usize; 3]]) -> Vec<[String; 3]> {
    clauses.iter().map(|c| c.map(|v| variables[v].clone())).collect()
}

impl FileFormat for SourceInstance {
    fn to_json(&self) -> Value {
        wire(&match self {
            SourceInstance::Nae(i) => {
                SourceFile::Nae { variables: i.variables().to_vec(), clauses: names(i.variables(), i.clauses()) }
            }
            SourceInstance::OneInThree(i) => {
                let vars = i.variables();
                let embedding = i
                    .embedding()
                    .clauses
                    .iter()
                    .map(|c| ClauseEmbeddingFile {
                        side: match c.side {
                            Side::Above => SideFile::Above,
                            Side::Below => SideFile::Below,
                        },
                        level: c.level,
                        legs: c.legs.map(|(v, slot)| LegFile { variable: vars[v].clone(), slot }),
                    })
                    .collect();
                SourceFile::OneInThree {
                    variables: vars.to_vec(),
                    clauses: names(vars, i.clauses()),
                    embedding: Some(embedding),
                }
            }
            SourceInstance::ThreeDm(i) => SourceFile::ThreeDm { n: i.n(), triples: i.triples().to_vec() },
            SourceInstance::SubsetSum(i) => {
                SourceFile::SubsetSum { elements: i.elements().to_vec(), target: i.target() }
            }
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        Ok(match unwire::<SourceFile>(value)? {
            SourceFile::Nae { variables, clauses } => {
                SourceInstance::Nae(Nae3SatInstance::from_names(variables, &clauses)?)
            }
            SourceFile::OneInThree { variables, clauses, embedding: None } => {
                let resolved = resolve_clauses(&variables, &clauses)?;
                SourceInstance::OneInThree(OneInThreeInstance::with_embedding(variables, resolved)?)
            }
            SourceFile::OneInThree { variables, clauses, embedding: Some(emb) } => {
                let position = |name: &str| {
                    variables
                        .iter()
                        .position(|v| v == name)
                        .ok_or_else(|| IoError::Invalid(format!("embedding names unknown variable {name:?}")))
                };
                let mut out = Vec::with_capacity(emb.len());
                for c in emb {
                    let [a, b, d] = c.legs;
                    out.push(ClauseEmbedding {
                        side: match c.side {
                            SideFile::Above => Side::Above,
                            SideFile::Below => Side::Below,
                        },
                        level: c.level,
                        legs: [
                            (position(&a.variable)?, a.slot),
                            (position(&b.variable)?, b.slot),
                            (position(&d.variable)?, d.slot),
                        ],
                    });
                }
                SourceInstance::OneInThree(OneInThreeInstance::from_names(
                    variables,
                    &clauses,
                    Embedding { clauses: out },
                )?)
            }
            SourceFile::ThreeDm { n, triples } => SourceInstance::ThreeDm(ThreeDmInstance::new(n, triples)?),
            SourceFile::SubsetSum { elements, target } => {
                SourceInstance::SubsetSum(SubsetSumInstance::new(elements, target)?)
            }
        })
    }
}

/// Answer to a source problem, as produced by a pullback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SourceSolution {
    /// Truth value per variable.
    Assignment(Vec<bool>),
    /// Indices of the chosen triples.
    Matching(Vec<usize>),
    /// Indices of the chosen elements.
    Subset(Vec<usize>),
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum SolutionFile {
    #[serde(rename = "assignment")]
    Assignment { values: Vec<bool> },
    #[serde(rename = "matching")]
    Matching { triples: Vec<usize> },
    #[serde(rename = "subset")]
    Subset { indices: Vec<usize> },
}

impl FileFormat for SourceSolution {
    fn to_json(&self) -> Value {
        wire(&match self.clone() {
            SourceSolution::Assignment(values) => SolutionFile::Assignment { values },
            SourceSolution::Matching(triples) => SolutionFile::Matching { triples },
            SourceSolution::Subset(indices) => SolutionFile::Subset { indices },
        })
    }

    fn from_json(value: Value) -> Result<Self, IoError> {
        Ok(match unwire::<SolutionFile>(value)? {
            SolutionFile::Assignment { values } => SourceSolution::Assignment(values),
            SolutionFile::Matching { triples } => SourceSolution::Matching(triples),
            SolutionFile::Subset { indices } => SourceSolution::Subset(indices),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse, to_canonical};
    use super::*;
    use crate::source::{random_1in3, random_3dm, random_nae, random_subset_sum};

    fn identity(x: &SourceInstance) {
        let text = to_canonical(x);
        let back: SourceInstance = parse(&text).unwrap();
        assert_eq!(&back, x);
        assert_eq!(to_canonical(&back), text);
    }

    #[test]
    fn every_kind_round_trips() {
        identity(&SourceInstance::Nae(random_nae(4, 3, 1).unwrap()));
        identity(&SourceInstance::OneInThree(random_1in3(5, 2, 2).unwrap()));
        identity(&SourceInstance::ThreeDm(random_3dm(2, 4, 3).unwrap()));
        identity(&SourceInstance::SubsetSum(random_subset_sum(4, 9, 4).unwrap()));
        for s in [
            SourceSolution::Assignment(vec![true, false]),
            SourceSolution::Matching(vec![0, 2]),
            SourceSolution::Subset(vec![]),
        ] {
            assert_eq!(parse::<SourceSolution>(&to_canonical(&s)).unwrap(), s);
        }
    }

    #[test]
    fn kind_tag_and_computed_embedding() {
        let text = r#"{"kind": "1in3", "variables": ["a", "b", "c"], "clauses": [["a", "b", "c"]]}"#;
        let SourceInstance::OneInThree(i) = parse(text).unwrap() else { panic!("wrong kind") };
        assert_eq!(i.embedding().clauses.len(), 1);
        assert!(to_canonical(&SourceInstance::OneInThree(i)).contains("\"kind\": \"1in3\""));
        let neg = r#"{"kind": "nae3sat", "variables": ["a", "b", "c"], "clauses": [["a", "b", "-c"]]}"#;
        assert!(matches!(parse::<SourceInstance>(neg), Err(IoError::Source(_))));
        assert!(parse::<SourceInstance>(r#"{"kind": "sat"}"#).is_err());
    }
}
