//! Structural family recognition, used to auto-detect claim hypotheses for
//! graphs that did not come from a generator.

use crate::graph::{FamilyKind, Graph};

/// Recognizes the family of a graph from structure alone.
///
/// Several families overlap (a triangle is both a cycle and a complete
/// graph); detection is by fixed priority: complete, edgeless, star, path,
/// cycle, wheel, complete multipartite. Returns `None` for anything else.
pub fn detect_family(g: &Graph) -> Option<FamilyKind> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    if g.is_complete() {
        return Some(FamilyKind::Complete(n));
    }
    if g.is_edgeless() {
        return Some(FamilyKind::EmptyGraph(n));
    }

    let degrees: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    if n >= 2
        && g.size() == n - 1
        && degrees.iter().filter(|&&d| d == n - 1).count() == 1
        && degrees.iter().filter(|&&d| d == 1).count() == n - 1
    {
        return Some(FamilyKind::Star(n - 1));
    }
    if degrees.iter().filter(|&&d| d == 1).count() == 2
        && degrees.iter().filter(|&&d| d == 2).count() == n - 2
        && is_connected(g)
    {
        return Some(FamilyKind::Path(n));
    }
    if n >= 3 && degrees.iter().all(|&d| d == 2) && is_connected(g) {
        return Some(FamilyKind::Cycle(n));
    }
    if n >= 4 {
        if let Some(hub) = (0..n).find(|&v| g.degree(v) == n - 1) {
            if (0..n).filter(|&v| v != hub).all(|v| g.degree(v) == 3) && rim_connected(g, hub) {
                return Some(FamilyKind::Wheel(n));
            }
        }
    }
    if let Some(parts) = multipartite_parts(g) {
        return Some(FamilyKind::CompleteMultipartite(parts));
    }
    None
}

fn is_connected(g: &Graph) -> bool {
    let n = g.order();
    if n == 0 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 0;
    while let Some(u) = stack.pop() {
        count += 1;
        for v in g.neighbors(u).iter() {
            if !seen[v] {
                seen[v] = true;
                stack.push(v);
            }
        }
    }
    count == n
}

/// True iff the non-hub vertices induce a single cycle.
fn rim_connected(g: &Graph, hub: usize) -> bool {
    let n = g.order();
    let rim: Vec<usize> = (0..n).filter(|&v| v != hub).collect();
    if rim.len() < 3 {
        return false;
    }
    // Walk the rim using only rim-rim edges; each rim vertex has exactly
    // two of them once the spoke to the hub is discounted.
    let start = rim[0];
    let mut prev = start;
    let mut cur = match g.neighbors(start).iter().find(|&v| v != hub) {
        Some(v) => v,
        None => return false,
    };
    let mut visited = 1;
    while cur != start {
        visited += 1;
        if visited > rim.len() {
            return false;
        }
        let next = g
            .neighbors(cur)
            .iter()
            .find(|&v| v != hub && v != prev);
        match next {
            Some(v) => {
                prev = cur;
                cur = v;
            }
            None => return false,
        }
    }
    visited == rim.len()
}

/// Part sizes if the complement is a disjoint union of cliques, i.e. the
/// graph is complete multipartite. Parts are reported in order of their
/// smallest vertex.
fn multipartite_parts(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    // A vertex's part is its complement-closed neighborhood: itself plus
    // every non-neighbor. Partition validity requires non-neighborhoods to
    // be cliques in the complement, i.e. mutually non-adjacent here.
    let mut part_of = vec![usize::MAX; n];
    let mut parts = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let members: Vec<usize> = (0..n)
            .filter(|&u| u == v || (!g.has_edge(u, v) && u != v))
            .collect();
        for &a in &members {
            if part_of[a] != usize::MAX {
                return None;
            }
            part_of[a] = parts.len();
        }
        // Members must be mutually non-adjacent and fully joined to the rest.
        for &a in &members {
            for &b in &members {
                if a < b && g.has_edge(a, b) {
                    return None;
                }
            }
            for u in 0..n {
                if !members.contains(&u) && !g.has_edge(a, u) {
                    return None;
                }
            }
        }
        parts.push(members.len());
    }
    Some(parts)
}

/// Some vertex adjacent to all others, if one exists.
pub fn dominating_vertex(g: &Graph) -> Option<usize> {
    let n = g.order();
    (0..n).find(|&v| g.degree(v) == n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, make_family, parse_edge_list};

    fn detect(kind: FamilyKind) -> Option<FamilyKind> {
        detect_family(&make_family(&kind).unwrap())
    }

    #[test]
    fn recognizes_generated_families() {
        assert_eq!(detect(FamilyKind::Path(5)), Some(FamilyKind::Path(5)));
        assert_eq!(detect(FamilyKind::Cycle(6)), Some(FamilyKind::Cycle(6)));
        assert_eq!(detect(FamilyKind::Star(4)), Some(FamilyKind::Star(4)));
        assert_eq!(detect(FamilyKind::Wheel(6)), Some(FamilyKind::Wheel(6)));
        assert_eq!(detect(FamilyKind::Complete(5)), Some(FamilyKind::Complete(5)));
        assert_eq!(detect(FamilyKind::EmptyGraph(4)), Some(FamilyKind::EmptyGraph(4)));
        assert_eq!(
            detect(FamilyKind::CompleteMultipartite(vec![2, 3])),
            Some(FamilyKind::CompleteMultipartite(vec![2, 3]))
        );
    }

    #[test]
    fn priority_resolves_overlaps() {
        // K_2 is simultaneously a path, a star, and complete.
        assert_eq!(detect(FamilyKind::Path(2)), Some(FamilyKind::Complete(2)));
        // P_3 is also the star with two leaves.
        assert_eq!(detect(FamilyKind::Path(3)), Some(FamilyKind::Star(2)));
        // C_4 is also K_{2,2}; the cycle test runs first.
        assert_eq!(detect(FamilyKind::Cycle(4)), Some(FamilyKind::Cycle(4)));
        // W_4 = K_4.
        assert_eq!(detect(FamilyKind::Wheel(4)), Some(FamilyKind::Complete(4)));
        // A triangle is complete before it is a cycle.
        assert_eq!(detect(FamilyKind::Cycle(3)), Some(FamilyKind::Complete(3)));
    }

    #[test]
    fn rejects_near_misses() {
        // A path plus a chord has the right degree counts for nothing.
        let g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n0 2").unwrap();
        assert_eq!(detect_family(&g), None);
        // Two disjoint edges: vertex 0's would-be part {0,1,3} contains the
        // edge 1-3, so the multipartite test must reject it.
        let g = complement(&make_family(&FamilyKind::Cycle(4)).unwrap());
        assert_eq!(detect_family(&g), None);
    }

    #[test]
    fn dominating_vertices() {
        let wheel = make_family(&FamilyKind::Wheel(6)).unwrap();
        assert_eq!(dominating_vertex(&wheel), Some(0));
        let cycle = make_family(&FamilyKind::Cycle(4)).unwrap();
        assert_eq!(dominating_vertex(&cycle), None);
    }
}
