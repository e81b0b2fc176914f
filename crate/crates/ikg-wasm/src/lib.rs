//! Browser bindings for the reconfiguration-graph explorer.
//!
//! Three operations back the demo page: [`build_view`] lays out the
//! reconfiguration graph of a chosen family (levels by set cardinality,
//! like a Hasse diagram), [`shortest_path`] returns a highlightable
//! reconfiguration route between two independent sets, and
//! [`polynomial_info`] reports the independence polynomial. All three
//! return JSON strings; errors become JavaScript exceptions.
//!
//! Build the browser bundle with
//! `wasm-pack build crates/ikg-wasm --target web --out-dir ../../www/pkg`.

use wasm_bindgen::prelude::*;

#[wasm_bindgen]
pub fn build_view(
    kind: &str,
    n: usize,
    parts: &str,
    k: i32,
    include_empty: bool,
) -> Result<String, JsValue> {
    view::build_view(kind, n, parts, k, include_empty).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn shortest_path(
    kind: &str,
    n: usize,
    parts: &str,
    k: i32,
    include_empty: bool,
    from: &str,
    to: &str,
) -> Result<String, JsValue> {
    view::shortest_path(kind, n, parts, k, include_empty, from, to)
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn polynomial_info(kind: &str, n: usize, parts: &str) -> Result<String, JsValue> {
    view::polynomial_info(kind, n, parts).map_err(|e| JsValue::from_str(&e))
}

/// The pure implementation, shared between the wasm exports and host tests.
pub mod view {
    use serde::Serialize;

    use ikg::analysis::{
        components, degree_profile, forest_status, girth, hamiltonicity, parity_bipartition,
        HamMethod, HamStatus,
    };
    use ikg::graph::{make_family, FamilyKind, Graph, VertexSet};
    use ikg::indsets::{independence_number, independence_polynomial};
    use ikg::recon::{build_recon, recon_distance, ReconGraph};

    /// Vertex cap for the interactive view; larger graphs render to mush.
    const MAX_VIEW_ORDER: usize = 2500;

    /// Smaller search budget than the CLI default: the page stays snappy
    /// and an unknown verdict is acceptable in an explorer.
    const VIEW_NODE_BUDGET: u64 = 2_000_000;

    #[derive(Serialize)]
    struct View {
        family: String,
        base: Base,
        k: usize,
        include_empty: bool,
        alpha: usize,
        order: usize,
        size: usize,
        nodes: Vec<Node>,
        edges: Vec<(u32, u32)>,
        components: usize,
        bipartition: Parity,
        girth: Option<usize>,
        degrees: Option<Degrees>,
        forest: Forest,
        hamiltonian: Ham,
        polynomial: Vec<String>,
        at_one: String,
        at_minus_one: String,
    }

    #[derive(Serialize)]
    struct Base {
        n: usize,
        m: usize,
        edges: Vec<(usize, usize)>,
    }

    #[derive(Serialize)]
    struct Node {
        label: String,
        members: Vec<usize>,
        size: usize,
        x: f64,
        y: f64,
        component: usize,
        degree: usize,
    }

    #[derive(Serialize)]
    struct Parity {
        even: usize,
        odd: usize,
    }

    #[derive(Serialize)]
    struct Degrees {
        min: usize,
        max: usize,
        regular: bool,
    }

    #[derive(Serialize)]
    struct Forest {
        is_forest: bool,
        is_tree: bool,
    }

    #[derive(Serialize)]
    struct Ham {
        status: &'static str,
        method: &'static str,
        witness: Option<Vec<u32>>,
    }

    #[derive(Serialize)]
    struct PathView {
        length: usize,
        indices: Vec<u32>,
        labels: Vec<String>,
    }

    #[derive(Serialize)]
    struct Unreachable {
        unreachable: bool,
    }

    #[derive(Serialize)]
    struct PolyView {
        family: String,
        alpha: usize,
        coeffs: Vec<String>,
        at_one: String,
        at_minus_one: String,
        even_sets: String,
        odd_sets: String,
    }

    fn parse_family(kind: &str, n: usize, parts: &str) -> Result<(FamilyKind, Graph), String> {
        let kind = match kind {
            "path" => FamilyKind::Path(n),
            "cycle" => FamilyKind::Cycle(n),
            "star" => FamilyKind::Star(n),
            "wheel" => FamilyKind::Wheel(n),
            "complete" => FamilyKind::Complete(n),
            "empty" => FamilyKind::EmptyGraph(n),
            "multipartite" => {
                let sizes = parts
                    .split(',')
                    .map(|tok| tok.trim().parse::<usize>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| format!("cannot parse part sizes {parts:?}"))?;
                FamilyKind::CompleteMultipartite(sizes)
            }
            other => return Err(format!("unknown family kind {other:?}")),
        };
        let g = make_family(&kind).map_err(|e| e.to_string())?;
        Ok((kind, g))
    }

    fn build(
        kind: &str,
        n: usize,
        parts: &str,
        k: i32,
        include_empty: bool,
    ) -> Result<(FamilyKind, Graph, usize, ReconGraph), String> {
        let (kind, g) = parse_family(kind, n, parts)?;
        let k = if k < 0 {
            independence_number(&g)
        } else {
            k as usize
        };
        let r = build_recon(&g, k, include_empty).map_err(|e| e.to_string())?;
        if r.order() > MAX_VIEW_ORDER {
            return Err(format!(
                "{} vertices is too large for the interactive view (limit {MAX_VIEW_ORDER}); \
                 lower n or k",
                r.order()
            ));
        }
        Ok((kind, g, k, r))
    }

    /// Positions nodes on levels by cardinality: the empty set at the
    /// bottom, maximum sets at the top, each level spread evenly across
    /// the width. Coordinates are normalized to the unit square.
    fn layout(r: &ReconGraph) -> Vec<(f64, f64)> {
        let max_size = (0..r.order()).map(|i| r.label(i).len()).max().unwrap_or(0);
        let mut row_len = vec![0usize; max_size + 1];
        for i in 0..r.order() {
            row_len[r.label(i).len()] += 1;
        }
        let mut row_pos = vec![0usize; max_size + 1];
        (0..r.order())
            .map(|i| {
                let size = r.label(i).len();
                let pos = row_pos[size];
                row_pos[size] += 1;
                let x = (pos + 1) as f64 / (row_len[size] + 1) as f64;
                let y = if max_size == 0 {
                    0.5
                } else {
                    0.92 - 0.84 * size as f64 / max_size as f64
                };
                (x, y)
            })
            .collect()
    }

    pub fn build_view(
        kind: &str,
        n: usize,
        parts: &str,
        k: i32,
        include_empty: bool,
    ) -> Result<String, String> {
        let (kind, g, k, r) = build(kind, n, parts, k, include_empty)?;
        let p = independence_polynomial(&g).map_err(|e| e.to_string())?;
        let decomp = components(&r);
        let parity = parity_bipartition(&r);
        let positions = layout(&r);
        let verdict = hamiltonicity(&r, VIEW_NODE_BUDGET);
        let view = View {
            family: kind.to_string(),
            base: Base {
                n: g.order(),
                m: g.size(),
                edges: g.edges(),
            },
            k,
            include_empty,
            alpha: p.alpha(),
            order: r.order(),
            size: r.size(),
            nodes: (0..r.order())
                .map(|i| Node {
                    label: r.label(i).to_string(),
                    members: r.label(i).iter().collect(),
                    size: r.label(i).len(),
                    x: positions[i].0,
                    y: positions[i].1,
                    component: decomp.membership[i],
                    degree: r.degree(i),
                })
                .collect(),
            edges: r.edges(),
            components: decomp.count,
            bipartition: Parity {
                even: parity.even,
                odd: parity.odd,
            },
            girth: girth(&r),
            degrees: degree_profile(&r).ok().map(|d| Degrees {
                min: d.min,
                max: d.max,
                regular: d.is_regular,
            }),
            forest: {
                let f = forest_status(&r);
                Forest {
                    is_forest: f.is_forest,
                    is_tree: f.is_tree,
                }
            },
            hamiltonian: Ham {
                status: match verdict.status {
                    HamStatus::Yes => "yes",
                    HamStatus::No => "no",
                    HamStatus::Unknown => "unknown",
                },
                method: match verdict.method {
                    HamMethod::ParityObstruction => "parity_obstruction",
                    HamMethod::TooFewVertices => "too_few_vertices",
                    HamMethod::ExhaustiveSearch => "exhaustive_search",
                    HamMethod::BudgetExhausted => "budget_exhausted",
                },
                witness: verdict.witness,
            },
            polynomial: p.coeffs().iter().map(|c| c.to_string()).collect(),
            at_one: p.eval_at(1).to_string(),
            at_minus_one: p.eval_at(-1).to_string(),
        };
        serde_json::to_string(&view).map_err(|e| e.to_string())
    }

    fn parse_set(spec: &str, n: usize) -> Result<VertexSet, String> {
        if spec.trim() == "empty" {
            return Ok(VertexSet::EMPTY);
        }
        let mut set = VertexSet::EMPTY;
        for tok in spec.split(',') {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| format!("cannot parse vertex {tok:?}"))?;
            if v >= n {
                return Err(format!("vertex {v} out of range, order is {n}"));
            }
            set = set.with(v);
        }
        Ok(set)
    }

    pub fn shortest_path(
        kind: &str,
        n: usize,
        parts: &str,
        k: i32,
        include_empty: bool,
        from: &str,
        to: &str,
    ) -> Result<String, String> {
        let (_, g, _, r) = build(kind, n, parts, k, include_empty)?;
        let s = parse_set(from, g.order())?;
        let t = parse_set(to, g.order())?;
        for set in [s, t] {
            if r.index_of(set).is_none() {
                return Err(format!(
                    "{set} is not a vertex (not independent, larger than k, or the excluded empty set)"
                ));
            }
        }
        let path = recon_distance(&r, s, t).map_err(|e| e.to_string())?;
        match path {
            None => serde_json::to_string(&Unreachable { unreachable: true })
                .map_err(|e| e.to_string()),
            Some(path) => {
                let indices: Vec<u32> = path
                    .vertices()
                    .iter()
                    .map(|&v| r.index_of(v).expect("path vertices are graph vertices"))
                    .collect();
                let view = PathView {
                    length: path.length(),
                    indices,
                    labels: path.vertices().iter().map(|v| v.to_string()).collect(),
                };
                serde_json::to_string(&view).map_err(|e| e.to_string())
            }
        }
    }

    pub fn polynomial_info(kind: &str, n: usize, parts: &str) -> Result<String, String> {
        let (kind, g) = parse_family(kind, n, parts)?;
        let p = independence_polynomial(&g).map_err(|e| e.to_string())?;
        let (even, odd) = p.parity_counts();
        let view = PolyView {
            family: kind.to_string(),
            alpha: p.alpha(),
            coeffs: p.coeffs().iter().map(|c| c.to_string()).collect(),
            at_one: p.eval_at(1).to_string(),
            at_minus_one: p.eval_at(-1).to_string(),
            even_sets: even.to_string(),
            odd_sets: odd.to_string(),
        };
        serde_json::to_string(&view).map_err(|e| e.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::view;

    fn parse(json: &str) -> serde_json::Value {
        serde_json::from_str(json).expect("valid JSON")
    }

    #[test]
    fn star_view() {
        let json = view::build_view("star", 3, "", 3, true).unwrap();
        let v = parse(&json);
        assert_eq!(v["order"], 9);
        assert_eq!(v["bipartition"]["even"], 4);
        assert_eq!(v["bipartition"]["odd"], 5);
        assert_eq!(v["hamiltonian"]["status"], "no");
        assert_eq!(v["nodes"].as_array().unwrap().len(), 9);
        for node in v["nodes"].as_array().unwrap() {
            let (x, y) = (node["x"].as_f64().unwrap(), node["y"].as_f64().unwrap());
            assert!((0.0..=1.0).contains(&x) && (0.0..=1.0).contains(&y));
        }
        // The empty set sits alone on the bottom level.
        assert_eq!(v["nodes"][0]["label"], "{}");
        assert_eq!(v["nodes"][0]["y"].as_f64().unwrap(), 0.92);
    }

    #[test]
    fn negative_k_means_full_bound() {
        let json = view::build_view("cycle", 5, "", -1, false).unwrap();
        let v = parse(&json);
        assert_eq!(v["k"], 2);
        assert_eq!(v["order"], 10);
    }

    #[test]
    fn shortest_path_and_unreachable() {
        let json = view::shortest_path("path", 3, "", 2, true, "0", "2").unwrap();
        let v = parse(&json);
        assert_eq!(v["length"], 2);
        assert_eq!(v["labels"].as_array().unwrap().len(), 3);

        let json = view::shortest_path("star", 3, "", 3, false, "0", "1").unwrap();
        assert_eq!(parse(&json)["unreachable"], true);
    }

    #[test]
    fn polynomial_view() {
        let json = view::polynomial_info("path", 5, "").unwrap();
        let v = parse(&json);
        assert_eq!(v["coeffs"], serde_json::json!(["1", "5", "6", "1"]));
        assert_eq!(v["at_one"], "13");
    }

    #[test]
    fn errors_are_reported() {
        assert!(view::build_view("blob", 3, "", 1, true).is_err());
        assert!(view::build_view("cycle", 2, "", 1, true).is_err());
        assert!(view::shortest_path("path", 3, "", 2, true, "0,1", "2").is_err());
    }
}
