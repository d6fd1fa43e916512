//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Every export takes graph6 text and returns a JSON string. The logic
//! lives in [`api`] so it can be tested natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use hcontract::families::family_from_list;
    use hcontract::hfree::{find_induced, fs, is_h_free, splitting_graph, Family};
    use hcontract::{parse_graph6, write_graph6, Edge, Graph};
    use serde::Serialize;

    #[derive(Debug, Serialize, PartialEq)]
    pub struct GraphView {
        pub g6: String,
        pub n: usize,
        pub edges: Vec<[usize; 2]>,
    }

    impl GraphView {
        fn of(g: &Graph) -> Self {
            GraphView {
                g6: write_graph6(g).expect("graphs here fit the writer"),
                n: g.n(),
                edges: g.edges().map(|e| [e.u(), e.v()]).collect(),
            }
        }
    }

    #[derive(Debug, Serialize)]
    pub struct Contracted {
        pub graph: GraphView,
        pub merged: usize,
    }

    #[derive(Debug, Serialize)]
    pub struct Splittings {
        pub splittings: Vec<GraphView>,
        /// splittings that are themselves free of the input graph
        pub free_split: Vec<GraphView>,
    }

    #[derive(Debug, Serialize)]
    pub struct EdgeReport {
        pub edge: [usize; 2],
        pub contraction_free: bool,
    }

    #[derive(Debug, Serialize)]
    pub struct CriticalReport {
        pub graph: GraphView,
        pub free: bool,
        pub witness: Option<Vec<usize>>,
        /// `None` when the graph has an isolated vertex
        pub critically_exist: Option<bool>,
        pub edges: Vec<EdgeReport>,
    }

    fn parse(g6: &str) -> Result<Graph, String> {
        parse_graph6(g6.trim()).map_err(|e| e.to_string())
    }

    /// A family given as names (`claw,2k2`, `split`) or graph6 strings.
    fn family(spec: &str) -> Result<Family, String> {
        family_from_list(spec).or_else(|named_err| {
            spec.split(',')
                .filter(|t| !t.trim().is_empty())
                .map(parse)
                .collect::<Result<Family, _>>()
                .map_err(|_| named_err.to_string())
        })
    }

    fn views<'a>(graphs: impl Iterator<Item = &'a Graph>) -> Vec<GraphView> {
        graphs.map(GraphView::of).collect()
    }

    pub fn graph(g6: &str) -> Result<GraphView, String> {
        parse(g6).map(|g| GraphView::of(&g))
    }

    pub fn contract(g6: &str, u: usize, v: usize) -> Result<Contracted, String> {
        let g = parse(g6)?;
        let e = Edge::new(u, v).map_err(|e| e.to_string())?;
        let r = g.contract(e).map_err(|e| e.to_string())?;
        Ok(Contracted {
            graph: GraphView::of(&r.graph),
            merged: r.merged,
        })
    }

    pub fn splitting(g6: &str) -> Result<Splittings, String> {
        let h = parse(g6)?;
        let all = splitting_graph(&h).map_err(|e| e.to_string())?;
        let free = fs(&Family::single(h)).map_err(|e| e.to_string())?;
        Ok(Splittings {
            splittings: views(all.members()),
            free_split: views(free.members()),
        })
    }

    pub fn critical_check(g6: &str, family_spec: &str) -> Result<CriticalReport, String> {
        let g = parse(g6)?;
        let fam = family(family_spec)?;
        let witness = find_induced(&g, &fam).map(|w| w.vertices.iter().collect());
        let edges: Vec<EdgeReport> = g
            .contractions()
            .map(|(e, c)| EdgeReport {
                edge: [e.u(), e.v()],
                contraction_free: is_h_free(&c, &fam),
            })
            .collect();
        let free = witness.is_none();
        let critically_exist =
            (!g.has_isolated_vertex()).then(|| !free && edges.iter().all(|e| e.contraction_free));
        Ok(CriticalReport {
            graph: GraphView::of(&g),
            free,
            witness,
            critically_exist,
            edges,
        })
    }
}

fn to_js<T: serde::Serialize>(r: Result<T, String>) -> Result<String, JsError> {
    let v = r.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&v).map_err(|e| JsError::new(&e.to_string()))
}

/// `{g6, n, edges}` for drawing.
#[wasm_bindgen]
pub fn graph(g6: &str) -> Result<String, JsError> {
    to_js(api::graph(g6))
}

#[wasm_bindgen]
pub fn contract(g6: &str, u: usize, v: usize) -> Result<String, JsError> {
    to_js(api::contract(g6, u, v))
}

#[wasm_bindgen]
pub fn splitting(g6: &str) -> Result<String, JsError> {
    to_js(api::splitting(g6))
}

#[wasm_bindgen]
pub fn critical_check(g6: &str, family: &str) -> Result<String, JsError> {
    to_js(api::critical_check(g6, family))
}
