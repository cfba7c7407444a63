//! Automorphisms and isomorphisms of quivers by backtracking.
//!
//! Vertices are first coloured by local invariants (weight, loops, and the
//! multisets of arrow counts to and from each colour, iterated to a fixed
//! point). The search then only maps vertices of equal colour and checks
//! every arrow count against the vertices already placed.

use std::collections::BTreeMap;

use super::Quiver;

/// Whether `perm` satisfies `a[perm i][perm j] = a[i][j]` (and preserves
/// weights when `weights` is given).
pub fn is_automorphism(q: &Quiver, perm: &[usize], weights: Option<&[u64]>) -> bool {
    let n = q.len();
    if perm.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &p in perm {
        if p >= n || std::mem::replace(&mut seen[p], true) {
            return false;
        }
    }
    weights.is_none_or(|w| (0..n).all(|i| w[perm[i]] == w[i]))
        && (0..n).all(|i| (0..n).all(|j| q.arrows(perm[i], perm[j]) == q.arrows(i, j)))
}

/// Colour refinement run jointly on several quivers so that colours are
/// comparable between them.
fn refine(quivers: &[(&Quiver, Option<&[u64]>)]) -> Vec<Vec<usize>> {
    let mut colors: Vec<Vec<usize>> = {
        let keys: Vec<Vec<(u64, u64)>> = quivers
            .iter()
            .map(|(q, w)| (0..q.len()).map(|i| (w.map_or(0, |w| w[i]), q.arrows(i, i))).collect())
            .collect();
        recolor(&keys)
    };
    let mut count = distinct(&colors);
    loop {
        let keys: Vec<Vec<(usize, Vec<(usize, u64)>, Vec<(usize, u64)>)>> = quivers
            .iter()
            .zip(&colors)
            .map(|((q, _), c)| {
                (0..q.len())
                    .map(|i| {
                        let mut out: Vec<(usize, u64)> = (0..q.len())
                            .filter(|&j| j != i && q.arrows(i, j) > 0)
                            .map(|j| (c[j], q.arrows(i, j)))
                            .collect();
                        let mut inc: Vec<(usize, u64)> = (0..q.len())
                            .filter(|&j| j != i && q.arrows(j, i) > 0)
                            .map(|j| (c[j], q.arrows(j, i)))
                            .collect();
                        out.sort_unstable();
                        inc.sort_unstable();
                        (c[i], out, inc)
                    })
                    .collect()
            })
            .collect();
        let next = recolor(&keys);
        let next_count = distinct(&next);
        colors = next;
        if next_count == count {
            return colors;
        }
        count = next_count;
    }
}

fn recolor<K: Ord + Clone>(keys: &[Vec<K>]) -> Vec<Vec<usize>> {
    let mut ids: BTreeMap<K, usize> = keys.iter().flatten().map(|k| (k.clone(), 0)).collect();
    for (n, v) in ids.values_mut().enumerate() {
        *v = n;
    }
    keys.iter().map(|ks| ks.iter().map(|k| ids[k]).collect()).collect()
}

fn distinct(colors: &[Vec<usize>]) -> usize {
    colors.iter().flatten().max().map_or(0, |m| m + 1)
}

struct Search<'a> {
    a: &'a Quiver,
    b: &'a Quiver,
    ca: &'a [usize],
    cb: &'a [usize],
    order: Vec<usize>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
}

impl Search<'_> {
    fn consistent(&self, i: usize, j: usize) -> bool {
        if self.a.arrows(i, i) != self.b.arrows(j, j) {
            return false;
        }
        self.order
            .iter()
            .filter_map(|&k| self.map[k].map(|m| (k, m)))
            .all(|(k, m)| self.a.arrows(i, k) == self.b.arrows(j, m) && self.a.arrows(k, i) == self.b.arrows(m, j))
    }

    fn run(&mut self, depth: usize) -> bool {
        let Some(&i) = self.order.get(depth) else {
            return true;
        };
        if self.map[i].is_some() {
            // Pre-assigned by the caller.
            return self.run(depth + 1);
        }
        for j in 0..self.b.len() {
            if self.used[j] || self.cb[j] != self.ca[i] || !self.consistent(i, j) {
                continue;
            }
            self.map[i] = Some(j);
            self.used[j] = true;
            if self.run(depth + 1) {
                return true;
            }
            self.map[i] = None;
            self.used[j] = false;
        }
        false
    }
}

/// Search order: each next vertex is the one most connected to those
/// already chosen, ties broken by rarer colour, then by index.
fn search_order(q: &Quiver, colors: &[usize], first: Option<usize>) -> Vec<usize> {
    let n = q.len();
    let mut class_size = vec![0usize; n.max(colors.iter().max().map_or(0, |m| m + 1))];
    for &c in colors {
        class_size[c] += 1;
    }
    let mut chosen = vec![false; n];
    let mut links = vec![0u64; n];
    let mut order = Vec::with_capacity(n);
    for step in 0..n {
        let v = match (step, first) {
            (0, Some(f)) => f,
            _ => (0..n)
                .filter(|&v| !chosen[v])
                .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[colors[v]], v))
                .unwrap(),
        };
        chosen[v] = true;
        order.push(v);
        for w in 0..n {
            links[w] += u64::from(q.arrows(v, w) > 0 || q.arrows(w, v) > 0);
        }
    }
    order
}

/// Finds `π` with `b[π i][π j] = a[i][j]`, optionally forcing `π(fix.0) = fix.1`.
fn find_map(
    a: &Quiver,
    wa: Option<&[u64]>,
    b: &Quiver,
    wb: Option<&[u64]>,
    fix: Option<(usize, usize)>,
) -> Option<Vec<usize>> {
    if a.len() != b.len() {
        return None;
    }
    let colors = refine(&[(a, wa), (b, wb)]);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    let n = a.len();
    let mut search =
        Search { a, b, ca, cb, order: search_order(a, ca, fix.map(|f| f.0)), map: vec![None; n], used: vec![false; n] };
    if let Some((i, j)) = fix {
        if ca[i] != cb[j] || a.arrows(i, i) != b.arrows(j, j) {
            return None;
        }
        search.map[i] = Some(j);
        search.used[j] = true;
    }
    search.run(0).then(|| search.map.iter().map(|m| m.unwrap()).collect())
}

/// Orbits of the automorphism group, as sorted blocks ordered by least vertex.
/// With `weights`, only weight-preserving automorphisms count.
pub fn automorphism_orbits(q: &Quiver, weights: Option<&[u64]>) -> Vec<Vec<usize>> {
    let n = q.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        let mut y = x;
        while parent[y] != r {
            let next = parent[y];
            parent[y] = r;
            y = next;
        }
        r
    }
    let colors = refine(&[(q, weights)]).remove(0);
    for i in 0..n {
        for j in i + 1..n {
            if colors[i] != colors[j] || find(&mut parent, i) == find(&mut parent, j) {
                continue;
            }
            if let Some(perm) = find_map(q, weights, q, weights, Some((i, j))) {
                for (x, &y) in perm.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx.max(ry)] = rx.min(ry);
                    }
                }
            }
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        let r = find(&mut parent, v);
        blocks.entry(r).or_default().push(v);
    }
    super::normalize(blocks.into_values().collect())
}

/// An isomorphism `π` from `q1` to `q2` (`q2[π i][π j] = q1[i][j]`), if any.
/// With `respect_weights`, both quivers' weights (when present) must match.
pub fn quiver_isomorphic(q1: &Quiver, q2: &Quiver, respect_weights: bool) -> Option<Vec<usize>> {
    let (w1, w2) = if respect_weights { (q1.weights(), q2.weights()) } else { (None, None) };
    if w1.is_some() != w2.is_some() {
        return None;
    }
    find_map(q1, w1, q2, w2, None)
}
