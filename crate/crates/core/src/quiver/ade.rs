//! Recognition of the extended Dynkin diagrams Ã, D̃, Ẽ.

use std::fmt;

use serde::Serialize;

use super::{wcc, Quiver};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AdeType {
    /// `Ã_n`, on `n + 1` vertices.
    A(usize),
    /// `D̃_n`, on `n + 1` vertices.
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for AdeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AdeType::A(n) => write!(f, "A~{n}"),
            AdeType::D(n) => write!(f, "D~{n}"),
            AdeType::E6 => write!(f, "E~6"),
            AdeType::E7 => write!(f, "E~7"),
            AdeType::E8 => write!(f, "E~8"),
        }
    }
}

/// Classifies a quiver whose arrows all come in opposite pairs as an
/// extended Dynkin diagram. The one-vertex quiver `[2]` is `Ã0` and the
/// doubled edge on two vertices is `Ã1`.
pub fn ade_classify(q: &Quiver) -> Option<AdeType> {
    let n = q.len();
    if !q.is_symmetric() {
        return None;
    }
    if n == 1 {
        return (q.arrows(0, 0) == 2).then_some(AdeType::A(0));
    }
    if (0..n).any(|i| q.arrows(i, i) != 0) || wcc(q).len() != 1 {
        return None;
    }
    if n == 2 {
        return (q.arrows(0, 1) == 2).then_some(AdeType::A(1));
    }
    if (0..n).any(|i| (0..n).any(|j| q.arrows(i, j) > 1)) {
        return None;
    }
    let nbrs: Vec<Vec<usize>> = (0..n).map(|i| (0..n).filter(|&j| q.arrows(i, j) == 1).collect()).collect();
    let deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    let edges: usize = deg.iter().sum::<usize>() / 2;
    if edges == n {
        return deg.iter().all(|&d| d == 2).then_some(AdeType::A(n - 1));
    }
    if edges != n - 1 || deg.iter().any(|&d| d > 4) {
        return None;
    }
    // A tree from here on.
    let branch: Vec<usize> = (0..n).filter(|&i| deg[i] >= 3).collect();
    match branch.as_slice() {
        [c] if deg[*c] == 4 => (n == 5).then_some(AdeType::D(4)),
        [c] => {
            let mut arms: Vec<usize> = nbrs[*c].iter().map(|&start| arm_length(&nbrs, *c, start)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => Some(AdeType::E6),
                [1, 3, 3] => Some(AdeType::E7),
                [1, 2, 5] => Some(AdeType::E8),
                _ => None,
            }
        }
        [a, b] if deg[*a] == 3 && deg[*b] == 3 => {
            let leaves = |v: usize| nbrs[v].iter().filter(|&&w| deg[w] == 1).count();
            (leaves(*a) == 2 && leaves(*b) == 2).then_some(AdeType::D(n - 1))
        }
        _ => None,
    }
}

/// Number of vertices on the path leaving `from` through `start`, in a tree
/// where that path has no further branching.
fn arm_length(nbrs: &[Vec<usize>], from: usize, start: usize) -> usize {
    let (mut prev, mut cur, mut len) = (from, start, 1);
    loop {
        let next: Vec<usize> = nbrs[cur].iter().copied().filter(|&w| w != prev).collect();
        match next.as_slice() {
            [] => return len,
            [w] => {
                (prev, cur) = (cur, *w);
                len += 1;
            }
            _ => return usize::MAX,
        }
    }
}
