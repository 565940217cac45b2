//! JSON forms of the library results. Eigenvalues, gaps and multiplicities
//! are decimal strings so no consumer runs into integer width limits.

use aldous_core::lr::SkewTableau;
use aldous_core::{AldousReport, Partition, SpectrumMultiset};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockJson {
    pub alpha: Vec<usize>,
    pub lambda_max: String,
    pub spectrum: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AldousJson {
    pub eta: Vec<usize>,
    pub n: usize,
    pub edge_count: i64,
    pub gap_graph: String,
    pub gap_cayley: String,
    pub verdict: bool,
    pub blocks: Vec<BlockJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub alpha: Vec<usize>,
    pub eta: Vec<usize>,
    pub spectrum: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub rows: Vec<Vec<usize>>,
    pub content: Vec<usize>,
    pub reading_word: Vec<usize>,
}

pub fn spectrum_pairs(s: &SpectrumMultiset) -> Vec<[String; 2]> {
    s.iter().map(|(l, m)| [l.to_string(), m.to_string()]).collect()
}

impl From<&AldousReport> for AldousJson {
    fn from(r: &AldousReport) -> Self {
        AldousJson {
            eta: r.shape.eta().to_vec(),
            n: r.n(),
            edge_count: r.edge_count(),
            gap_graph: r.gap_graph.to_string(),
            gap_cayley: r.gap_cayley.to_string(),
            verdict: r.verdict,
            blocks: r
                .per_alpha
                .iter()
                .map(|a| BlockJson {
                    alpha: a.alpha.to_vec(),
                    lambda_max: a.lambda_max.to_string(),
                    spectrum: spectrum_pairs(&a.spectrum),
                })
                .collect(),
        }
    }
}

impl SpectrumJson {
    pub fn new(alpha: &Partition, eta: &Partition, s: &SpectrumMultiset) -> Self {
        SpectrumJson { alpha: alpha.to_vec(), eta: eta.to_vec(), spectrum: spectrum_pairs(s) }
    }
}

impl From<&SkewTableau> for TableauJson {
    fn from(t: &SkewTableau) -> Self {
        TableauJson {
            rows: t.rows().to_vec(),
            content: t.content().into_parts(),
            reading_word: t.reading_word().into_entries(),
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use aldous_core::spectra::verify_aldous;
    use aldous_core::MultipartiteShape;

    #[test]
    fn aldous_json_round_trips() {
        let shape = MultipartiteShape::new(Partition::new(vec![2, 2]).unwrap()).unwrap();
        let json = AldousJson::from(&verify_aldous(&shape).unwrap());
        let text = render(&json);
        let parsed: AldousJson = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed, json);
        assert_eq!(render(&parsed), text);
        assert_eq!(json.gap_graph, "2");
        assert_eq!(json.blocks.len(), 4);
    }
}
