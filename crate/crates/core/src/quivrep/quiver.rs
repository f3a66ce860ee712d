use std::collections::HashSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// A path in the quiver; the trivial path at `start` has no arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

/// A finite acyclic quiver with labelled vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(label, source, target)` triples referring to vertex labels.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in vertices {
            if !seen.insert(*v) {
                return Err(Error::DuplicateLabel(v.to_string()));
            }
        }
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let index = |label: &str| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::UnknownVertex(label.to_string()))
        };
        let mut arrow_labels = HashSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (label, s, t) in arrows {
            if !arrow_labels.insert(*label) {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
            built.push(Arrow {
                label: label.to_string(),
                source: index(s)?,
                target: index(t)?,
            });
        }
        let q = Quiver { vertices, arrows: built };
        q.check_acyclic()?;
        Ok(q)
    }

    /// Linearly oriented Aₙ: `labels[i+1] → labels[i]`, arrow labels concatenate the endpoints.
    pub fn linear(labels: &[&str]) -> Result<Self> {
        let names: Vec<String> = labels.windows(2).map(|w| format!("{}{}", w[1], w[0])).collect();
        let arrows: Vec<(&str, &str, &str)> = labels
            .windows(2)
            .zip(&names)
            .map(|(w, n)| (n.as_str(), w[1], w[0]))
            .collect();
        Quiver::new(labels, &arrows)
    }

    fn check_acyclic(&self) -> Result<()> {
        // Kahn's algorithm; leftover vertices lie on or behind a cycle
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        for a in &self.arrows {
            indegree[a.target] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut done = 0;
        while let Some(v) = queue.pop() {
            done += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indegree[a.target] -= 1;
                if indegree[a.target] == 0 {
                    queue.push(a.target);
                }
            }
        }
        if done < n {
            let v = (0..n).find(|&v| indegree[v] > 0).expect("some vertex remains");
            return Err(Error::CyclicQuiver(self.vertices[v].clone()));
        }
        Ok(())
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: usize) -> &Arrow {
        &self.arrows[a]
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow_index(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.label == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    /// No arrows, so the path algebra is a product of copies of the field.
    pub fn is_semisimple(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn incoming(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].target == v)
    }

    pub fn outgoing(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.arrows.len()).filter(move |&a| self.arrows[a].source == v)
    }

    /// All paths starting at `v`, in depth-first order, trivial path first.
    pub fn paths_from(&self, v: usize) -> Vec<Path> {
        let mut out = vec![Path { start: v, end: v, arrows: Vec::new() }];
        let mut i = 0;
        while i < out.len() {
            let p = out[i].clone();
            for a in self.outgoing(p.end) {
                let mut arrows = p.arrows.clone();
                arrows.push(a);
                out.push(Path {
                    start: v,
                    end: self.arrows[a].target,
                    arrows,
                });
            }
            i += 1;
        }
        out
    }

    /// Paths from `v`, grouped by end vertex; the index within a group is the
    /// coordinate of that path in the projective module at `v`.
    pub fn paths_by_end(&self, v: usize) -> Vec<Vec<Path>> {
        let mut groups = vec![Vec::new(); self.vertices.len()];
        for p in self.paths_from(v) {
            groups[p.end].push(p);
        }
        groups
    }
}
