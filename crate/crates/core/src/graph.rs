//! Acyclic directed mixed graphs (ADMGs): latent projections with directed and
//! bidirected edges, plus the graph-theoretic primitives the identification
//! routines consume.
//!
//! Graphs are immutable values; mutilations (`cut_incoming`, `cut_outgoing`,
//! `induced_subgraph`) return new graphs. All outputs are deterministic:
//! vertex sets are ordered, C-components are sorted by smallest member, and
//! the topological order is the lexicographically smallest valid one.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Name of an observable variable. Unique within a graph.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VariableId(pub String);

impl VariableId {
    pub fn new(name: impl Into<String>) -> Self {
        VariableId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VariableId {
    fn from(s: &str) -> Self {
        VariableId(s.to_string())
    }
}

/// Shorthand used pervasively in tests and call sites.
pub fn var(name: &str) -> VariableId {
    VariableId::new(name)
}

/// Build a `BTreeSet<VariableId>` from names.
pub fn varset<'a>(names: impl IntoIterator<Item = &'a str>) -> BTreeSet<VariableId> {
    names.into_iter().map(var).collect()
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(VariableId),
    #[error("vertex `{0}` declared twice")]
    DuplicateVertex(VariableId),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(VariableId),
    #[error("duplicate edge {0} {1} {2}")]
    DuplicateEdge(VariableId, &'static str, VariableId),
    #[error("directed part has a cycle through `{0}`")]
    Cycle(VariableId),
    #[error("sets must be disjoint but share `{0}`")]
    NotDisjoint(VariableId),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
struct Adjacency {
    parents: BTreeSet<VariableId>,
    children: BTreeSet<VariableId>,
    spouses: BTreeSet<VariableId>,
}

/// Acyclic directed mixed graph over named observable vertices.
#[derive(Clone, PartialEq, Eq)]
pub struct Admg {
    nodes: BTreeMap<VariableId, Adjacency>,
}

impl fmt::Debug for Admg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Admg{{")?;
        for (i, (a, b)) in self.directed_edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        for (a, b) in self.bidirected_edges() {
            write!(f, ", {a}<->{b}")?;
        }
        write!(f, "}}")
    }
}

impl Admg {
    /// Builds a graph from explicit parts. Endpoints of edges are declared
    /// implicitly; `vertices` lists any additional isolated vertices.
    pub fn from_parts<'a>(
        vertices: impl IntoIterator<Item = &'a str>,
        directed: impl IntoIterator<Item = (&'a str, &'a str)>,
        bidirected: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, GraphError> {
        let mut b = AdmgBuilder::new();
        for v in vertices {
            b.add_vertex(var(v))?;
        }
        for (t, h) in directed {
            b.add_directed(var(t), var(h))?;
        }
        for (a, c) in bidirected {
            b.add_bidirected(var(a), var(c))?;
        }
        b.finish()
    }

    /// Parses the line-oriented text format: `A -> B`, `A <-> B`, `node A`,
    /// `#` comments. Duplicate edges are an error.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut b = AdmgBuilder::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let stmt = match raw.find('#') {
                Some(pos) => &raw[..pos],
                None => raw,
            }
            .trim();
            if stmt.is_empty() {
                continue;
            }
            let fail = |message: String| GraphError::Parse { line, message };
            if let Some(rest) = stmt.strip_prefix("node ") {
                let name = rest.trim();
                check_name(name).map_err(|e| fail(e.to_string()))?;
                b.declare_vertex(var(name));
            } else if let Some((lhs, rhs)) = stmt.split_once("<->") {
                let (t, h) = (lhs.trim(), rhs.trim());
                check_name(t).map_err(|e| fail(e.to_string()))?;
                check_name(h).map_err(|e| fail(e.to_string()))?;
                b.add_bidirected(var(t), var(h))
                    .map_err(|e| fail(e.to_string()))?;
            } else if let Some((lhs, rhs)) = stmt.split_once("->") {
                let (t, h) = (lhs.trim(), rhs.trim());
                check_name(t).map_err(|e| fail(e.to_string()))?;
                check_name(h).map_err(|e| fail(e.to_string()))?;
                b.add_directed(var(t), var(h))
                    .map_err(|e| fail(e.to_string()))?;
            } else {
                return Err(fail(format!("unrecognized statement `{stmt}`")));
            }
        }
        b.finish()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VariableId> {
        self.nodes.keys()
    }

    pub fn vertex_set(&self) -> BTreeSet<VariableId> {
        self.nodes.keys().cloned().collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn contains(&self, v: &VariableId) -> bool {
        self.nodes.contains_key(v)
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = (&VariableId, &VariableId)> {
        self.nodes
            .iter()
            .flat_map(|(v, adj)| adj.children.iter().map(move |c| (v, c)))
    }

    /// Each unordered pair reported once, smaller endpoint first.
    pub fn bidirected_edges(&self) -> impl Iterator<Item = (&VariableId, &VariableId)> {
        self.nodes
            .iter()
            .flat_map(|(v, adj)| adj.spouses.iter().filter(move |s| v < *s).map(move |s| (v, s)))
    }

    fn adj(&self, v: &VariableId) -> Result<&Adjacency, GraphError> {
        self.nodes
            .get(v)
            .ok_or_else(|| GraphError::UnknownVertex(v.clone()))
    }

    fn check_subset(&self, s: &BTreeSet<VariableId>) -> Result<(), GraphError> {
        for v in s {
            self.adj(v)?;
        }
        Ok(())
    }

    pub fn parents_of(&self, v: &VariableId) -> &BTreeSet<VariableId> {
        &self.nodes[v].parents
    }

    pub fn children_of(&self, v: &VariableId) -> &BTreeSet<VariableId> {
        &self.nodes[v].children
    }

    pub fn spouses_of(&self, v: &VariableId) -> &BTreeSet<VariableId> {
        &self.nodes[v].spouses
    }

    /// Union of parents of `s`, excluding `s` itself.
    pub fn parents(&self, s: &BTreeSet<VariableId>) -> Result<BTreeSet<VariableId>, GraphError> {
        self.check_subset(s)?;
        let mut out: BTreeSet<VariableId> = s
            .iter()
            .flat_map(|v| self.nodes[v].parents.iter().cloned())
            .collect();
        out.retain(|v| !s.contains(v));
        Ok(out)
    }

    pub fn parents_inclusive(
        &self,
        s: &BTreeSet<VariableId>,
    ) -> Result<BTreeSet<VariableId>, GraphError> {
        let mut out = self.parents(s)?;
        out.extend(s.iter().cloned());
        Ok(out)
    }

    pub fn children(&self, s: &BTreeSet<VariableId>) -> Result<BTreeSet<VariableId>, GraphError> {
        self.check_subset(s)?;
        let mut out: BTreeSet<VariableId> = s
            .iter()
            .flat_map(|v| self.nodes[v].children.iter().cloned())
            .collect();
        out.retain(|v| !s.contains(v));
        Ok(out)
    }

    pub fn children_inclusive(
        &self,
        s: &BTreeSet<VariableId>,
    ) -> Result<BTreeSet<VariableId>, GraphError> {
        let mut out = self.children(s)?;
        out.extend(s.iter().cloned());
        Ok(out)
    }

    fn reach(
        &self,
        s: &BTreeSet<VariableId>,
        step: impl Fn(&Adjacency) -> &BTreeSet<VariableId>,
    ) -> BTreeSet<VariableId> {
        let mut seen: BTreeSet<VariableId> = BTreeSet::new();
        let mut stack: Vec<VariableId> = s.iter().cloned().collect();
        while let Some(v) = stack.pop() {
            for next in step(&self.nodes[&v]) {
                if !s.contains(next) && seen.insert(next.clone()) {
                    stack.push(next.clone());
                }
            }
        }
        seen
    }

    /// Vertices with a directed path into `s`, excluding `s` itself.
    pub fn ancestors(&self, s: &BTreeSet<VariableId>) -> Result<BTreeSet<VariableId>, GraphError> {
        self.check_subset(s)?;
        Ok(self.reach(s, |a| &a.parents))
    }

    pub fn ancestors_inclusive(
        &self,
        s: &BTreeSet<VariableId>,
    ) -> Result<BTreeSet<VariableId>, GraphError> {
        let mut out = self.ancestors(s)?;
        out.extend(s.iter().cloned());
        Ok(out)
    }

    pub fn descendants(
        &self,
        s: &BTreeSet<VariableId>,
    ) -> Result<BTreeSet<VariableId>, GraphError> {
        self.check_subset(s)?;
        Ok(self.reach(s, |a| &a.children))
    }

    pub fn descendants_inclusive(
        &self,
        s: &BTreeSet<VariableId>,
    ) -> Result<BTreeSet<VariableId>, GraphError> {
        let mut out = self.descendants(s)?;
        out.extend(s.iter().cloned());
        Ok(out)
    }

    /// Deletes every directed edge whose head is in `s` and every bidirected
    /// edge with an endpoint in `s`. An intervention severs all exogenous
    /// influence on `s`, so the latent confounder stubs go too.
    pub fn cut_incoming(&self, s: &BTreeSet<VariableId>) -> Result<Admg, GraphError> {
        self.check_subset(s)?;
        let mut g = self.clone();
        for v in s {
            let parents = std::mem::take(&mut g.nodes.get_mut(v).unwrap().parents);
            for p in parents {
                g.nodes.get_mut(&p).unwrap().children.remove(v);
            }
            let spouses = std::mem::take(&mut g.nodes.get_mut(v).unwrap().spouses);
            for sp in spouses {
                g.nodes.get_mut(&sp).unwrap().spouses.remove(v);
            }
        }
        Ok(g)
    }

    /// Deletes every directed edge whose tail is in `s`; bidirected edges stay.
    pub fn cut_outgoing(&self, s: &BTreeSet<VariableId>) -> Result<Admg, GraphError> {
        self.check_subset(s)?;
        let mut g = self.clone();
        for v in s {
            let children = std::mem::take(&mut g.nodes.get_mut(v).unwrap().children);
            for c in children {
                g.nodes.get_mut(&c).unwrap().parents.remove(v);
            }
        }
        Ok(g)
    }

    /// Keeps exactly the vertices of `s` and the edges with both endpoints in `s`.
    pub fn induced_subgraph(&self, s: &BTreeSet<VariableId>) -> Result<Admg, GraphError> {
        self.check_subset(s)?;
        let nodes = self
            .nodes
            .iter()
            .filter(|(v, _)| s.contains(v))
            .map(|(v, adj)| {
                let keep = |set: &BTreeSet<VariableId>| {
                    set.iter().filter(|u| s.contains(*u)).cloned().collect()
                };
                (
                    v.clone(),
                    Adjacency {
                        parents: keep(&adj.parents),
                        children: keep(&adj.children),
                        spouses: keep(&adj.spouses),
                    },
                )
            })
            .collect();
        Ok(Admg { nodes })
    }

    /// The unique partition into maximal bidirected-connected components,
    /// sorted by smallest member name.
    pub fn c_components(&self) -> Vec<BTreeSet<VariableId>> {
        let mut seen: BTreeSet<VariableId> = BTreeSet::new();
        let mut blocks = Vec::new();
        for v in self.nodes.keys() {
            if seen.contains(v) {
                continue;
            }
            let mut block = BTreeSet::new();
            block.insert(v.clone());
            let mut stack = vec![v.clone()];
            while let Some(u) = stack.pop() {
                for sp in &self.nodes[&u].spouses {
                    if block.insert(sp.clone()) {
                        stack.push(sp.clone());
                    }
                }
            }
            seen.extend(block.iter().cloned());
            blocks.push(block);
        }
        // BTreeMap iteration already visits smallest members first.
        blocks
    }

    /// The C-component block containing `v`.
    pub fn c_component_of(&self, v: &VariableId) -> Result<BTreeSet<VariableId>, GraphError> {
        self.adj(v)?;
        let mut block = BTreeSet::new();
        block.insert(v.clone());
        let mut stack = vec![v.clone()];
        while let Some(u) = stack.pop() {
            for sp in &self.nodes[&u].spouses {
                if block.insert(sp.clone()) {
                    stack.push(sp.clone());
                }
            }
        }
        Ok(block)
    }

    /// Lexicographically smallest topological order of the directed part.
    pub fn topological_order(&self) -> Vec<VariableId> {
        let mut remaining_parents: BTreeMap<&VariableId, usize> = self
            .nodes
            .iter()
            .map(|(v, adj)| (v, adj.parents.len()))
            .collect();
        let mut ready: BTreeSet<&VariableId> = remaining_parents
            .iter()
            .filter(|(_, n)| **n == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut order = Vec::with_capacity(self.nodes.len());
        while let Some(v) = ready.iter().next().cloned() {
            ready.remove(v);
            order.push(v.clone());
            for c in &self.nodes[v].children {
                let n = remaining_parents.get_mut(c).unwrap();
                *n -= 1;
                if *n == 0 {
                    ready.insert(c);
                }
            }
        }
        debug_assert_eq!(order.len(), self.nodes.len());
        order
    }

    /// True iff a path consisting solely of bidirected edges connects `a`
    /// to some member of `b`. Returns the path when one exists.
    pub fn bidirected_path_to(
        &self,
        a: &VariableId,
        b: &BTreeSet<VariableId>,
    ) -> Result<Option<Vec<VariableId>>, GraphError> {
        self.adj(a)?;
        let mut pred: BTreeMap<VariableId, VariableId> = BTreeMap::new();
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(a.clone());
        let mut seen: BTreeSet<VariableId> = [a.clone()].into();
        while let Some(v) = queue.pop_front() {
            if v != *a && b.contains(&v) {
                let mut path = vec![v.clone()];
                let mut cur = v;
                while let Some(p) = pred.get(&cur) {
                    path.push(p.clone());
                    cur = p.clone();
                }
                path.reverse();
                return Ok(Some(path));
            }
            for sp in &self.nodes[&v].spouses {
                if seen.insert(sp.clone()) {
                    pred.insert(sp.clone(), v.clone());
                    queue.push_back(sp.clone());
                }
            }
        }
        Ok(None)
    }

    pub fn has_bidirected_path_within(
        &self,
        a: &VariableId,
        b: &BTreeSet<VariableId>,
    ) -> Result<bool, GraphError> {
        Ok(self.bidirected_path_to(a, b)?.is_some())
    }

    /// Vertices directed-reachable from `v` (exclusive).
    pub fn directed_reachable(&self, v: &VariableId) -> BTreeSet<VariableId> {
        self.reach(&[v.clone()].into(), |a| &a.children)
    }

    /// Children `c` of `v` such that some member of `targets` is
    /// directed-reachable from `c` (`c` itself counts).
    pub fn first_hops_towards(
        &self,
        v: &VariableId,
        targets: &BTreeSet<VariableId>,
    ) -> BTreeSet<VariableId> {
        self.nodes[v]
            .children
            .iter()
            .filter(|c| {
                targets.contains(*c)
                    || !self.directed_reachable(c).is_disjoint(targets)
            })
            .cloned()
            .collect()
    }

    /// Serializable edge-list form, used by model serialization.
    pub fn to_spec(&self) -> AdmgSpec {
        AdmgSpec {
            vertices: self.nodes.keys().cloned().collect(),
            directed: self
                .directed_edges()
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect(),
            bidirected: self
                .bidirected_edges()
                .map(|(a, b)| (a.clone(), b.clone()))
                .collect(),
        }
    }
}

fn check_name(name: &str) -> Result<(), GraphError> {
    let mut chars = name.chars();
    let ok = match chars.next() {
        Some(c) => {
            (c.is_ascii_alphabetic() || c == '_')
                && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        }
        None => false,
    };
    if ok {
        Ok(())
    } else {
        Err(GraphError::InvalidName(name.to_string()))
    }
}

/// Incremental construction with validation; `finish` checks acyclicity.
#[derive(Default)]
pub struct AdmgBuilder {
    nodes: BTreeMap<VariableId, Adjacency>,
}

impl AdmgBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn declare_vertex(&mut self, v: VariableId) {
        self.nodes.entry(v).or_default();
    }

    pub fn add_vertex(&mut self, v: VariableId) -> Result<(), GraphError> {
        if self.nodes.contains_key(&v) {
            return Err(GraphError::DuplicateVertex(v));
        }
        self.nodes.insert(v, Adjacency::default());
        Ok(())
    }

    pub fn add_directed(&mut self, tail: VariableId, head: VariableId) -> Result<(), GraphError> {
        if tail == head {
            return Err(GraphError::SelfLoop(tail));
        }
        self.declare_vertex(tail.clone());
        self.declare_vertex(head.clone());
        if !self.nodes.get_mut(&tail).unwrap().children.insert(head.clone()) {
            return Err(GraphError::DuplicateEdge(tail, "->", head));
        }
        self.nodes.get_mut(&head).unwrap().parents.insert(tail);
        Ok(())
    }

    pub fn add_bidirected(&mut self, a: VariableId, b: VariableId) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        self.declare_vertex(a.clone());
        self.declare_vertex(b.clone());
        if !self.nodes.get_mut(&a).unwrap().spouses.insert(b.clone()) {
            let (x, y) = if a < b { (a, b) } else { (b, a) };
            return Err(GraphError::DuplicateEdge(x, "<->", y));
        }
        self.nodes.get_mut(&b).unwrap().spouses.insert(a);
        Ok(())
    }

    pub fn finish(self) -> Result<Admg, GraphError> {
        let g = Admg { nodes: self.nodes };
        // Kahn's algorithm leaves cycle members unordered.
        let order = g.topological_order();
        if order.len() != g.nodes.len() {
            let ordered: BTreeSet<_> = order.into_iter().collect();
            let culprit = g
                .nodes
                .keys()
                .find(|v| !ordered.contains(*v))
                .cloned()
                .unwrap();
            return Err(GraphError::Cycle(culprit));
        }
        Ok(g)
    }
}

/// Plain edge-list representation for serialization.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AdmgSpec {
    pub vertices: Vec<VariableId>,
    pub directed: Vec<(VariableId, VariableId)>,
    pub bidirected: Vec<(VariableId, VariableId)>,
}

impl AdmgSpec {
    pub fn build(&self) -> Result<Admg, GraphError> {
        let mut b = AdmgBuilder::new();
        for v in &self.vertices {
            b.declare_vertex(v.clone());
        }
        for (t, h) in &self.directed {
            b.add_directed(t.clone(), h.clone())?;
        }
        for (a, c) in &self.bidirected {
            b.add_bidirected(a.clone(), c.clone())?;
        }
        b.finish()
    }
}

impl Serialize for Admg {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_spec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Admg {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let spec = AdmgSpec::deserialize(d)?;
        spec.build().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    fn chain() -> Admg {
        Admg::parse("A -> B\nB -> C").unwrap()
    }

    #[test]
    fn ancestors_of_chain_end() {
        let g = chain();
        assert_eq!(g.ancestors(&varset(["C"])).unwrap(), varset(["A", "B"]));
        assert_eq!(
            g.ancestors_inclusive(&varset(["C"])).unwrap(),
            varset(["A", "B", "C"])
        );
    }

    #[test]
    fn ancestors_front_door_outcome() {
        let g = gallery::front_door();
        assert_eq!(g.ancestors(&varset(["Y"])).unwrap(), varset(["X", "Z"]));
    }

    #[test]
    fn ancestors_isolated_vertex() {
        let g = Admg::parse("node D").unwrap();
        assert!(g.ancestors(&varset(["D"])).unwrap().is_empty());
    }

    #[test]
    fn ancestors_unknown_vertex_errors() {
        let g = chain();
        assert!(matches!(
            g.ancestors(&varset(["Q"])),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn descendants_and_adjacency() {
        let g = chain();
        assert_eq!(g.descendants(&varset(["A"])).unwrap(), varset(["B", "C"]));
        let fd = gallery::front_door();
        assert_eq!(fd.children(&varset(["X"])).unwrap(), varset(["Z"]));
        let pair = Admg::parse("A <-> B").unwrap();
        assert!(pair.parents(&varset(["B"])).unwrap().is_empty());
    }

    #[test]
    fn cut_incoming_removes_bidirected_stubs() {
        let g = gallery::front_door().cut_incoming(&varset(["X"])).unwrap();
        assert_eq!(g.bidirected_edges().count(), 0);
        assert_eq!(g.directed_edges().count(), 2);
        assert!(g.contains(&var("X")));
    }

    #[test]
    fn cut_incoming_empty_is_identity() {
        let g = gallery::front_door();
        assert_eq!(g.cut_incoming(&BTreeSet::new()).unwrap(), g);
    }

    #[test]
    fn cut_incoming_chain_middle() {
        let g = chain().cut_incoming(&varset(["B"])).unwrap();
        assert_eq!(
            g.directed_edges()
                .map(|(a, b)| format!("{a}->{b}"))
                .collect::<Vec<_>>(),
            vec!["B->C"]
        );
        assert!(g.contains(&var("A")));
    }

    #[test]
    fn cut_outgoing_keeps_bidirected() {
        let g = gallery::front_door().cut_outgoing(&varset(["X"])).unwrap();
        assert_eq!(g.bidirected_edges().count(), 1);
        assert_eq!(g.directed_edges().count(), 1);
        let h = Admg::parse("A <-> B").unwrap();
        assert_eq!(h.cut_outgoing(&varset(["A"])).unwrap(), h);
    }

    #[test]
    fn mutilations_idempotent() {
        let g = gallery::front_door();
        let s = varset(["X"]);
        let once = g.cut_incoming(&s).unwrap();
        assert_eq!(once.cut_incoming(&s).unwrap(), once);
        let out = g.cut_outgoing(&s).unwrap();
        assert_eq!(out.cut_outgoing(&s).unwrap(), out);
    }

    #[test]
    fn induced_subgraph_cases() {
        let g = gallery::front_door();
        let sub = g.induced_subgraph(&varset(["X", "Y"])).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        assert_eq!(sub.directed_edges().count(), 0);
        assert_eq!(sub.bidirected_edges().count(), 1);
        assert_eq!(g.induced_subgraph(&g.vertex_set()).unwrap(), g);
        assert_eq!(
            g.induced_subgraph(&BTreeSet::new()).unwrap().vertex_count(),
            0
        );
    }

    #[test]
    fn c_components_front_door() {
        let g = gallery::front_door();
        assert_eq!(g.c_components(), vec![varset(["X", "Y"]), varset(["Z"])]);
    }

    #[test]
    fn c_components_no_bidirected_all_singletons() {
        let g = chain();
        assert_eq!(g.c_components().len(), 3);
    }

    #[test]
    fn c_components_transitive() {
        let g = Admg::parse("A <-> B\nB <-> C").unwrap();
        assert_eq!(g.c_components(), vec![varset(["A", "B", "C"])]);
    }

    #[test]
    fn bidirected_path_queries() {
        let g = gallery::confounded_front_door();
        assert!(g
            .has_bidirected_path_within(&var("X"), &g.children(&varset(["X"])).unwrap())
            .unwrap());
        assert!(!chain()
            .has_bidirected_path_within(&var("A"), &varset(["C"]))
            .unwrap());
        let two_hop = Admg::parse("X -> C\nX <-> M\nM <-> C").unwrap();
        assert!(two_hop
            .has_bidirected_path_within(&var("X"), &varset(["C"]))
            .unwrap());
    }

    #[test]
    fn topological_order_cases() {
        assert_eq!(
            chain().topological_order(),
            vec![var("A"), var("B"), var("C")]
        );
        assert_eq!(
            gallery::front_door().topological_order(),
            vec![var("X"), var("Z"), var("Y")]
        );
        let iso = Admg::parse("node B\nnode A").unwrap();
        assert_eq!(iso.topological_order(), vec![var("A"), var("B")]);
    }

    #[test]
    fn topological_order_is_stable() {
        let g = gallery::sequential_treatments_mediated();
        assert_eq!(g.topological_order(), g.topological_order());
        let order = g.topological_order();
        let pos: BTreeMap<_, _> = order.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
        for (t, h) in g.directed_edges() {
            assert!(pos[t] < pos[h]);
        }
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(matches!(
            Admg::parse("A -> B\nA -> B"),
            Err(GraphError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            Admg::parse("A => B"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Admg::parse("A -> A"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            Admg::parse("1A -> B"),
            Err(GraphError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn cycle_rejected() {
        assert!(matches!(
            Admg::parse("A -> B\nB -> C\nC -> A"),
            Err(GraphError::Cycle(_))
        ));
    }

    #[test]
    fn comments_and_isolated_nodes() {
        let g = Admg::parse("# header\nA -> B # trailing\nnode C\n\n").unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert!(g.contains(&var("C")));
    }

    #[test]
    fn serde_round_trip() {
        let g = gallery::sequential_treatments_mediated();
        let json = serde_json::to_string(&g).unwrap();
        let back: Admg = serde_json::from_str(&json).unwrap();
        assert_eq!(g, back);
    }
}
