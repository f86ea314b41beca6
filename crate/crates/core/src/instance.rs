//! Versioned JSON documents for instances, witnesses, and certificates.
//!
//! One format ("pmtk/1") covers every file the tool reads or writes: set
//! systems, graphs, sign colorings, edge colorings, subset colorings. Files
//! are 1-based (elements, vertices, colors) while the library API is
//! 0-based; the encoders always emit canonical form (ascending elements,
//! lexicographic edge order), and the decoders validate everything before
//! conversion, so a written file reads back to the identical object.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{binomial, EdgeColoring, Graph, SubsetColoring};
use crate::setsystem::{SetSystem, SignColoring, Subset};

/// Format tag required in every document.
pub const FORMAT: &str = "pmtk/1";

/// Largest universe size accepted from a file (bitsets are materialized).
pub const MAX_FILE_UNIVERSE: u64 = 1 << 24;

/// Largest vertex count accepted from a file (adjacency is materialized).
pub const MAX_FILE_VERTICES: u64 = 1 << 14;

/// The body of a document: its `kind` tag plus kind-specific fields.
/// All indices and colors are 1-based in this representation.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceBody {
    SetSystem { n: u64, sets: Vec<Vec<u64>> },
    Graph { r: u64, edges: Vec<(u64, u64)> },
    SignColoring { n: u64, signs: Vec<i8> },
    EdgeColoring { r: u64, k: u32, colors: Vec<u32> },
    SubsetColoring { m: u64, l: u64, k: u32, colors: Vec<u32> },
}

impl InstanceBody {
    pub fn kind(&self) -> &'static str {
        match self {
            InstanceBody::SetSystem { .. } => "set-system",
            InstanceBody::Graph { .. } => "graph",
            InstanceBody::SignColoring { .. } => "sign-coloring",
            InstanceBody::EdgeColoring { .. } => "edge-coloring",
            InstanceBody::SubsetColoring { .. } => "subset-coloring",
        }
    }
}

#[derive(Serialize, Deserialize, Debug, Clone)]
struct InstanceDoc {
    format: String,
    #[serde(flatten)]
    body: InstanceBody,
}

/// Serializes a body as a complete pretty-printed document.
pub fn to_json(body: &InstanceBody) -> String {
    let doc = InstanceDoc { format: FORMAT.to_string(), body: body.clone() };
    let mut text = serde_json::to_string_pretty(&doc).expect("instance documents serialize");
    text.push('\n');
    text
}

/// Parses a document and checks its format tag.
pub fn from_json(text: &str) -> Result<InstanceBody> {
    let doc: InstanceDoc = serde_json::from_str(text)
        .map_err(|e| Error::invalid(format!("malformed document: {e}")))?;
    if doc.format != FORMAT {
        return Err(Error::invalid(format!(
            "unsupported format tag \"{}\", expected \"{}\"",
            doc.format, FORMAT
        )));
    }
    Ok(doc.body)
}

/// 1-based file index → 0-based API index, range-checked.
fn to_index(v: u64, n: u64, what: &str) -> Result<usize> {
    if v < 1 || v > n {
        return Err(Error::invalid(format!("{what} {v} out of range [1, {n}]")));
    }
    Ok((v - 1) as usize)
}

fn checked_universe(n: u64, what: &str) -> Result<usize> {
    if n > MAX_FILE_UNIVERSE {
        return Err(Error::resource(format!("{what} {n} exceeds the file cap {MAX_FILE_UNIVERSE}")));
    }
    Ok(n as usize)
}

fn checked_vertices(r: u64) -> Result<usize> {
    if r > MAX_FILE_VERTICES {
        return Err(Error::resource(format!("vertex count {r} exceeds the file cap {MAX_FILE_VERTICES}")));
    }
    Ok(r as usize)
}

// ---------------------------------------------------------------------------
// encoders (API → file form)
// ---------------------------------------------------------------------------

pub fn encode_set_system(sys: &SetSystem) -> InstanceBody {
    InstanceBody::SetSystem {
        n: sys.n() as u64,
        sets: sys
            .sets()
            .iter()
            .map(|s| s.iter().map(|e| e as u64 + 1).collect())
            .collect(),
    }
}

pub fn encode_graph(g: &Graph) -> InstanceBody {
    InstanceBody::Graph {
        r: g.r() as u64,
        edges: g.edges().iter().map(|&(i, j)| (i as u64 + 1, j as u64 + 1)).collect(),
    }
}

pub fn encode_sign_coloring(x: &SignColoring) -> InstanceBody {
    InstanceBody::SignColoring { n: x.n() as u64, signs: x.signs().to_vec() }
}

pub fn encode_edge_coloring(c: &EdgeColoring) -> InstanceBody {
    InstanceBody::EdgeColoring {
        r: c.r() as u64,
        k: c.k(),
        colors: c.colors().iter().map(|&q| q + 1).collect(),
    }
}

pub fn encode_subset_coloring(c: &SubsetColoring) -> InstanceBody {
    InstanceBody::SubsetColoring {
        m: c.m() as u64,
        l: c.l() as u64,
        k: c.k(),
        colors: c.colors().iter().map(|&q| q + 1).collect(),
    }
}

// ---------------------------------------------------------------------------
// decoders (file form → API, validated)
// ---------------------------------------------------------------------------

pub fn decode_set_system(body: &InstanceBody) -> Result<SetSystem> {
    let InstanceBody::SetSystem { n, sets } = body else {
        return Err(Error::invalid(format!("expected a set-system document, found {}", body.kind())));
    };
    let nn = checked_universe(*n, "universe size")?;
    let sets = sets
        .iter()
        .enumerate()
        .map(|(idx, els)| {
            let elements = els
                .iter()
                .map(|&e| to_index(e, *n, "element"))
                .collect::<Result<Vec<_>>>()
                .map_err(|e| Error::invalid(format!("set {}: {e}", idx + 1)))?;
            Subset::from_elements(nn, &elements)
                .map_err(|e| Error::invalid(format!("set {}: {e}", idx + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    SetSystem::new(nn, sets)
}

pub fn decode_graph(body: &InstanceBody) -> Result<Graph> {
    let InstanceBody::Graph { r, edges } = body else {
        return Err(Error::invalid(format!("expected a graph document, found {}", body.kind())));
    };
    let rr = checked_vertices(*r)?;
    let edges = edges
        .iter()
        .map(|&(i, j)| {
            let i = to_index(i, *r, "vertex")?;
            let j = to_index(j, *r, "vertex")?;
            Ok((i.min(j), i.max(j)))
        })
        .collect::<Result<Vec<_>>>()?;
    Graph::from_edges(rr, &edges)
}

pub fn decode_sign_coloring(body: &InstanceBody) -> Result<SignColoring> {
    let InstanceBody::SignColoring { n, signs } = body else {
        return Err(Error::invalid(format!(
            "expected a sign-coloring document, found {}",
            body.kind()
        )));
    };
    if *n != signs.len() as u64 {
        return Err(Error::invalid(format!(
            "declared universe size {} but {} signs",
            n,
            signs.len()
        )));
    }
    SignColoring::from_signs(signs.clone())
}

pub fn decode_edge_coloring(body: &InstanceBody) -> Result<EdgeColoring> {
    let InstanceBody::EdgeColoring { r, k, colors } = body else {
        return Err(Error::invalid(format!(
            "expected an edge-coloring document, found {}",
            body.kind()
        )));
    };
    let rr = checked_vertices(*r)?;
    if *k == 0 {
        return Err(Error::invalid("color count k must be at least 1"));
    }
    let colors = decode_colors(colors, *k)?;
    EdgeColoring::new(rr, *k, colors)
}

pub fn decode_subset_coloring(body: &InstanceBody) -> Result<SubsetColoring> {
    let InstanceBody::SubsetColoring { m, l, k, colors } = body else {
        return Err(Error::invalid(format!(
            "expected a subset-coloring document, found {}",
            body.kind()
        )));
    };
    let mm = checked_universe(*m, "universe size")?;
    let ll = usize::try_from(*l).map_err(|_| Error::invalid("subset size l does not fit"))?;
    if *k == 0 {
        return Err(Error::invalid("color count k must be at least 1"));
    }
    if ll > mm {
        return Err(Error::invalid(format!("subset size l = {l} exceeds universe m = {m}")));
    }
    if binomial(*m, *l) != colors.len() as u128 {
        return Err(Error::invalid(format!(
            "expected {} subset colors for (m, l) = ({m}, {l}), got {}",
            binomial(*m, *l),
            colors.len()
        )));
    }
    let colors = decode_colors(colors, *k)?;
    SubsetColoring::new(mm, ll, *k, colors)
}

/// File colors are 1-based values in [1, k].
fn decode_colors(colors: &[u32], k: u32) -> Result<Vec<u32>> {
    colors
        .iter()
        .enumerate()
        .map(|(pos, &c)| {
            if c < 1 || c > k {
                return Err(Error::invalid(format!(
                    "color {} at position {} out of range [1, {}]",
                    c,
                    pos + 1,
                    k
                )));
            }
            Ok(c - 1)
        })
        .collect()
}

// ---------------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_system_document_round_trips() {
        let sys = SetSystem::from_elements(4, &[vec![0, 1], vec![1, 2, 3], vec![]]).unwrap();
        let body = encode_set_system(&sys);
        let parsed = from_json(&to_json(&body)).unwrap();
        assert_eq!(parsed, body);
        assert_eq!(decode_set_system(&parsed).unwrap(), sys);
    }

    #[test]
    fn the_wire_format_is_pinned() {
        // machine-parseable and stable: this exact shape is the contract
        let sys = SetSystem::from_elements(4, &[vec![0, 1]]).unwrap();
        let text = to_json(&encode_set_system(&sys));
        let expected = "{\n  \"format\": \"pmtk/1\",\n  \"kind\": \"set-system\",\n  \"n\": 4,\n  \"sets\": [\n    [\n      1,\n      2\n    ]\n  ]\n}\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn graph_document_round_trips_and_normalizes_edge_order() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let body = encode_graph(&g);
        let again = decode_graph(&from_json(&to_json(&body)).unwrap()).unwrap();
        assert_eq!(again.edges(), g.edges());

        // reversed pairs in a hand-written file are accepted
        let reversed = InstanceBody::Graph { r: 3, edges: vec![(3, 1), (2, 1)] };
        let g2 = decode_graph(&reversed).unwrap();
        assert!(g2.has_edge(0, 2) && g2.has_edge(0, 1) && !g2.has_edge(1, 2));
    }

    #[test]
    fn coloring_documents_round_trip() {
        let x = SignColoring::from_signs(vec![1, -1, -1, 1]).unwrap();
        let body = encode_sign_coloring(&x);
        assert_eq!(decode_sign_coloring(&from_json(&to_json(&body)).unwrap()).unwrap(), x);

        let ec = EdgeColoring::new(3, 2, vec![0, 1, 0]).unwrap();
        let body = encode_edge_coloring(&ec);
        assert!(matches!(&body, InstanceBody::EdgeColoring { colors, .. } if colors == &[1, 2, 1]));
        assert_eq!(decode_edge_coloring(&from_json(&to_json(&body)).unwrap()).unwrap(), ec);

        let sc = SubsetColoring::new(4, 3, 2, vec![0, 1, 1, 0]).unwrap();
        let body = encode_subset_coloring(&sc);
        assert_eq!(decode_subset_coloring(&from_json(&to_json(&body)).unwrap()).unwrap(), sc);
    }

    #[test]
    fn format_tag_and_kind_are_enforced() {
        let err = from_json("{\"kind\": \"graph\", \"r\": 1, \"edges\": []}").unwrap_err();
        assert!(err.to_string().contains("malformed"), "{err}");
        let err =
            from_json("{\"format\": \"pmtk/2\", \"kind\": \"graph\", \"r\": 1, \"edges\": []}")
                .unwrap_err();
        assert!(err.to_string().contains("pmtk/2"), "{err}");
        let err = from_json("{\"format\": \"pmtk/1\", \"kind\": \"polytope\"}").unwrap_err();
        assert!(err.to_string().contains("malformed"), "{err}");

        let body = from_json("{\"format\": \"pmtk/1\", \"kind\": \"graph\", \"r\": 2, \"edges\": []}")
            .unwrap();
        assert!(decode_set_system(&body).is_err());
    }

    #[test]
    fn one_based_indices_are_validated() {
        let zero = InstanceBody::SetSystem { n: 3, sets: vec![vec![0]] };
        let err = decode_set_system(&zero).unwrap_err();
        assert!(err.to_string().contains("out of range [1, 3]"), "{err}");

        let high = InstanceBody::SetSystem { n: 3, sets: vec![vec![4]] };
        assert!(decode_set_system(&high).is_err());

        let dup = InstanceBody::SetSystem { n: 3, sets: vec![vec![2, 2]] };
        let err = decode_set_system(&dup).unwrap_err();
        assert!(err.to_string().contains("set 1"), "{err}");

        let bad_color = InstanceBody::EdgeColoring { r: 3, k: 2, colors: vec![1, 3, 1] };
        let err = decode_edge_coloring(&bad_color).unwrap_err();
        assert!(err.to_string().contains("out of range [1, 2]"), "{err}");

        let zero_color = InstanceBody::EdgeColoring { r: 3, k: 2, colors: vec![1, 0, 1] };
        assert!(decode_edge_coloring(&zero_color).is_err());

        let length = InstanceBody::SignColoring { n: 3, signs: vec![1, -1] };
        assert!(decode_sign_coloring(&length).is_err());

        let huge = InstanceBody::Graph { r: 1 << 20, edges: vec![] };
        assert!(decode_graph(&huge).is_err());
    }
}
