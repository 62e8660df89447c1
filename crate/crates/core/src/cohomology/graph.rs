use crate::lattice_fan::{pair, Fan, Weight};

/// Which vertex set the degree graph uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphFlavor {
    /// All rays `j ≠ i` pairing negatively with `u`.
    Full,
    /// Only those among them that share a cone with the anchor ray.
    Restricted,
}

/// The graph on rays pairing negatively with a degree, with edges given by
/// shared cone membership.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeGraph {
    pub anchor: usize,
    pub degree: Weight,
    pub flavor: GraphFlavor,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    components: usize,
}

impl DegreeGraph {
    pub fn component_count(&self) -> usize {
        self.components
    }
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

pub fn gamma_graph(fan: &Fan, i: usize, u: &Weight, flavor: GraphFlavor) -> DegreeGraph {
    let vertices: Vec<usize> = (0..fan.ray_count())
        .filter(|&j| j != i && pair(fan.ray(j), u) < 0)
        .filter(|&j| flavor == GraphFlavor::Full || fan.share_cone(i, j))
        .collect();
    let mut edges = Vec::new();
    let mut uf = UnionFind::new(vertices.len());
    let mut components = vertices.len();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if fan.share_cone(vertices[a], vertices[b]) {
                edges.push((vertices[a], vertices[b]));
                if uf.union(a, b) {
                    components -= 1;
                }
            }
        }
    }
    DegreeGraph {
        anchor: i,
        degree: u.clone(),
        flavor,
        vertices,
        edges,
        components,
    }
}

/// `dim H¹(Y, O(D_i))(u)` by counting components of the degree graph.
pub fn h1_dim_graph(fan: &Fan, i: usize, u: &Weight) -> usize {
    h1_dim_graph_with(fan, i, u, GraphFlavor::Full)
}

pub fn h1_dim_graph_with(fan: &Fan, i: usize, u: &Weight, flavor: GraphFlavor) -> usize {
    if pair(fan.ray(i), u) != -1 {
        return 0;
    }
    gamma_graph(fan, i, u, flavor).component_count().saturating_sub(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hirzebruch_two_middle_ray() {
        let f2 = catalog::hirzebruch(2);
        let fan = f2.fan();
        let i = 1; // (0, 1)
        let u = Weight::new([-1, -1]);
        let g = gamma_graph(fan, i, &u, GraphFlavor::Full);
        assert_eq!(g.vertices, vec![0, 2]);
        assert!(g.edges.is_empty());
        assert_eq!(g.component_count(), 2);
        assert_eq!(h1_dim_graph(fan, i, &u), 1);
    }

    #[test]
    fn nonnegative_degree_gives_empty_graph() {
        let f = catalog::f1_blown_up_twice();
        let g = gamma_graph(f.fan(), 0, &Weight::new([0, 0]), GraphFlavor::Full);
        assert!(g.vertices.is_empty());
        assert_eq!(g.component_count(), 0);
    }

    #[test]
    fn vanishing_off_the_hyperplane() {
        let f = catalog::f1_blown_up_twice();
        for i in 0..f.len() {
            for u in [[0, 0], [3, 1], [-2, -2]] {
                let u = Weight::new(u);
                if pair(f.fan().ray(i), &u) != -1 {
                    assert_eq!(h1_dim_graph(f.fan(), i, &u), 0);
                }
            }
        }
    }

    #[test]
    fn threefold_three_isolated_vertices() {
        let fan = catalog::threefold_two_slices();
        let g = gamma_graph(&fan, 6, &Weight::new([0, 0, -1]), GraphFlavor::Full);
        assert_eq!(g.vertices, vec![0, 2, 4]);
        assert!(g.edges.is_empty());
        assert_eq!(h1_dim_graph(&fan, 6, &Weight::new([0, 0, -1])), 2);
    }
}
