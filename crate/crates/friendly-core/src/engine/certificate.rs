//! Machine-checkable witnesses. A certificate pins the graph by a digest of
//! its canonical edge list, so stale witnesses are detected, and carries
//! either a partition, a pair of cohesive sets, or an exhaustive-search
//! record.

use crate::error::Error;
use crate::graph::{format_set_line, parse_set_line, Bipartition, Graph, VertexSet};
use sha2::{Digest, Sha256};

/// Hex SHA-256 of the canonical edge-list document.
pub fn graph_digest(g: &Graph) -> String {
    let hash = Sha256::digest(g.to_text().as_bytes());
    hash.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    InternalPartition {
        digest: String,
        partition: Bipartition,
    },
    CohesivePair {
        digest: String,
        first: VertexSet,
        second: VertexSet,
    },
    /// Record of a complete enumeration that found nothing. `nodes` is the
    /// search-tree size; vertex 0 was fixed in class A.
    Nonexistence {
        digest: String,
        nodes: u64,
    },
}

impl Certificate {
    pub fn internal(g: &Graph, partition: Bipartition) -> Self {
        Certificate::InternalPartition {
            digest: graph_digest(g),
            partition,
        }
    }

    pub fn cohesive_pair(g: &Graph, first: VertexSet, second: VertexSet) -> Self {
        Certificate::CohesivePair {
            digest: graph_digest(g),
            first,
            second,
        }
    }

    pub fn nonexistence(g: &Graph, nodes: u64) -> Self {
        Certificate::Nonexistence {
            digest: graph_digest(g),
            nodes,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::InternalPartition { .. } => "internal-partition",
            Certificate::CohesivePair { .. } => "cohesive-pair",
            Certificate::Nonexistence { .. } => "nonexistence",
        }
    }

    pub fn digest(&self) -> &str {
        match self {
            Certificate::InternalPartition { digest, .. }
            | Certificate::CohesivePair { digest, .. }
            | Certificate::Nonexistence { digest, .. } => digest,
        }
    }

    /// True when the certificate was issued for exactly this graph.
    pub fn matches(&self, g: &Graph) -> bool {
        self.digest() == graph_digest(g)
    }

    /// Text form: kind line, digest line, then the payload in the partition
    /// or vertex-set file format; nonexistence records its search size.
    pub fn to_text(&self) -> String {
        match self {
            Certificate::InternalPartition { digest, partition } => {
                format!("{}\n{digest}\n{}", self.kind(), partition.to_text())
            }
            Certificate::CohesivePair {
                digest,
                first,
                second,
            } => format!(
                "{}\n{digest}\n{}\n{}\n",
                self.kind(),
                format_set_line(first),
                format_set_line(second)
            ),
            Certificate::Nonexistence { digest, nodes } => {
                format!("{}\n{digest}\nnodes={nodes} fixed=0\n", self.kind())
            }
        }
    }

    /// Parses a certificate for a graph on `n` vertices.
    pub fn parse(text: &str, n: usize) -> Result<Self, Error> {
        let lines: Vec<&str> = text.lines().collect();
        if lines.len() < 2 {
            return Err(Error::Parse {
                line: 1,
                msg: "certificate needs a kind line and a digest line".into(),
            });
        }
        let digest = lines[1].trim().to_string();
        match lines[0].trim() {
            "internal-partition" => {
                if lines.len() < 4 {
                    return Err(Error::Parse {
                        line: 3,
                        msg: "partition certificate needs two class lines".into(),
                    });
                }
                let partition =
                    Bipartition::parse(&format!("{}\n{}\n", lines[2], lines[3]), n)?;
                Ok(Certificate::InternalPartition { digest, partition })
            }
            "cohesive-pair" => {
                if lines.len() < 4 {
                    return Err(Error::Parse {
                        line: 3,
                        msg: "cohesive-pair certificate needs two set lines".into(),
                    });
                }
                let first = parse_set_line(lines[2], 3, n)?;
                let second = parse_set_line(lines[3], 4, n)?;
                Ok(Certificate::CohesivePair {
                    digest,
                    first,
                    second,
                })
            }
            "nonexistence" => {
                let stats = lines.get(2).unwrap_or(&"");
                let nodes = stats
                    .split_whitespace()
                    .find_map(|tok| tok.strip_prefix("nodes="))
                    .and_then(|v| v.parse().ok())
                    .ok_or(Error::Parse {
                        line: 3,
                        msg: "nonexistence certificate needs a nodes=<count> record".into(),
                    })?;
                Ok(Certificate::Nonexistence { digest, nodes })
            }
            other => Err(Error::Parse {
                line: 1,
                msg: format!("unknown certificate kind: {other}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_circulant;

    #[test]
    fn digest_is_stable_and_label_sensitive() {
        let g = gen_circulant(10, &[1, 2, 5]).unwrap();
        assert_eq!(graph_digest(&g), graph_digest(&g));
        let h = gen_circulant(10, &[1, 3, 5]).unwrap();
        assert_ne!(graph_digest(&g), graph_digest(&h));
    }

    #[test]
    fn text_roundtrip_all_kinds() {
        let g = gen_circulant(8, &[1, 2, 4]).unwrap();
        let a = VertexSet::from_members(8, [0, 2, 4, 6]).unwrap();
        let p = Bipartition::from_class_a(a.clone());
        for cert in [
            Certificate::internal(&g, p),
            Certificate::cohesive_pair(&g, a.clone(), a.complement()),
            Certificate::nonexistence(&g, 12345),
        ] {
            let text = cert.to_text();
            let back = Certificate::parse(&text, 8).unwrap();
            assert_eq!(back, cert);
            assert!(back.matches(&g));
        }
    }

    #[test]
    fn stale_certificate_detected() {
        let g = gen_circulant(8, &[1, 2, 4]).unwrap();
        let cert = Certificate::nonexistence(&g, 7);
        let other = gen_circulant(8, &[1, 3, 4]).unwrap();
        assert!(!cert.matches(&other));
    }
}
