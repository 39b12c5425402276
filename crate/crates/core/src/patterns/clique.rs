//! Exact maximum clique by branch and bound with greedy-coloring bounds,
//! over `u64` bitsets. Vertices are visited in index order.

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not_assign(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }
}

struct Search<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl Search<'_> {
    /// Greedy sequential coloring of `p`; returns vertices with their color
    /// number, in nondecreasing color order.
    fn color(&self, p: &Bits) -> Vec<(usize, usize)> {
        let mut uncolored = p.clone();
        let mut out = Vec::new();
        let mut color = 0;
        while !uncolored.is_empty() {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = q.first() {
                q.clear(v);
                uncolored.clear(v);
                q.and_not_assign(&self.adj[v]);
                out.push((v, color));
            }
        }
        out
    }

    fn expand(&mut self, mut p: Bits) {
        let order = self.color(&p);
        for &(v, color) in order.iter().rev() {
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next = p.and(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            p.clear(v);
        }
    }
}

/// Maximum clique of the graph on `0..n` with edges where `adjacent(i, j)`
/// (queried for `i < j` only). Returns sorted vertex indices.
pub fn max_clique(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    if n == 0 {
        return Vec::new();
    }
    let mut adj = vec![Bits::empty(n); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                adj[i].set(j);
                adj[j].set(i);
            }
        }
    }
    let mut all = Bits::empty(n);
    for i in 0..n {
        all.set(i);
    }
    let mut search = Search {
        adj: &adj,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.expand(all);
    let mut best = search.best;
    best.sort_unstable();
    best
}
