//! JSON interchange format for colored graphs.
//!
//! ```json
//! {"vertices": ["a", "b"], "edges": [{"u": "a", "v": "b", "color": "red"}], "meta": {}}
//! ```

use serde::{Deserialize, Serialize};

use super::{EdgeColoredGraph, GraphBuilder, GraphError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EdgeDocument {
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<serde_json::Value>,
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<EdgeColoredGraph, GraphError> {
        let mut b = GraphBuilder::new();
        for v in &self.vertices {
            b.add_vertex(v)?;
        }
        for e in &self.edges {
            let color = e
                .color
                .as_deref()
                .ok_or_else(|| GraphError::MissingColor(e.u.clone(), e.v.clone()))?;
            b.add_edge(&e.u, &e.v, color)?;
        }
        Ok(b.build())
    }

    pub fn from_graph(g: &EdgeColoredGraph) -> Self {
        GraphDocument {
            vertices: g.vertices().map(|v| g.name(v).to_string()).collect(),
            edges: g
                .edges()
                .iter()
                .map(|e| EdgeDocument {
                    u: g.name(e.u).to_string(),
                    v: g.name(e.v).to_string(),
                    color: Some(g.color_name(e.color).to_string()),
                })
                .collect(),
            meta: None,
        }
    }
}

/// Parses an interchange document. Colors are interned in first-seen order.
pub fn load_graph(text: &str) -> Result<(EdgeColoredGraph, Option<serde_json::Value>), GraphError> {
    let doc: GraphDocument =
        serde_json::from_str(text).map_err(|e| GraphError::Document(e.to_string()))?;
    let g = doc.to_graph()?;
    Ok((g, doc.meta))
}

/// Serializes `g` (with optional `meta`) as pretty-printed JSON.
pub fn save_graph(g: &EdgeColoredGraph, meta: Option<serde_json::Value>) -> String {
    let mut doc = GraphDocument::from_graph(g);
    doc.meta = meta;
    serde_json::to_string_pretty(&doc).expect("graph documents always serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_minimal() {
        let (g, meta) =
            load_graph(r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b","color":"red"}]}"#)
                .unwrap();
        assert_eq!((g.vertex_count(), g.edge_count(), g.color_count()), (2, 1, 1));
        assert!(meta.is_none());
    }

    #[test]
    fn load_errors_name_the_element() {
        let dup = r#"{"vertices":["a","b"],"edges":[
            {"u":"a","v":"b","color":"x"},{"u":"b","v":"a","color":"y"}]}"#;
        assert_eq!(
            load_graph(dup).unwrap_err(),
            GraphError::DuplicateEdge("b".into(), "a".into())
        );
        let lp = r#"{"vertices":["a"],"edges":[{"u":"a","v":"a","color":"x"}]}"#;
        assert_eq!(load_graph(lp).unwrap_err(), GraphError::SelfLoop("a".into()));
        let nc = r#"{"vertices":["a","b"],"edges":[{"u":"a","v":"b"}]}"#;
        assert_eq!(
            load_graph(nc).unwrap_err(),
            GraphError::MissingColor("a".into(), "b".into())
        );
        let uv = r#"{"vertices":["a"],"edges":[{"u":"a","v":"q","color":"x"}]}"#;
        assert_eq!(load_graph(uv).unwrap_err(), GraphError::UnknownVertex("q".into()));
        assert!(matches!(load_graph("{"), Err(GraphError::Document(_))));
    }

    #[test]
    fn save_load_identity() {
        let g = EdgeColoredGraph::from_edges([("b", "a", "2"), ("a", "c", "1"), ("c", "b", "2")])
            .unwrap();
        let meta = serde_json::json!({"tag": "x"});
        let text = save_graph(&g, Some(meta.clone()));
        let (h, m) = load_graph(&text).unwrap();
        assert_eq!(g, h);
        assert_eq!(m, Some(meta));
        assert_eq!(save_graph(&h, m), text);
    }
}
