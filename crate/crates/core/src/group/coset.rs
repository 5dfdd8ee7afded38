//! Todd–Coxeter coset enumeration (HLT strategy) over the trivial subgroup.
//!
//! Used as an oracle for the normal-form engine: it only sees the relators.

use super::word::{Gen, Word};

const NONE: u32 = u32::MAX;

/// Completed coset table: row `i`, column `2g` (generator) or `2g + 1` (inverse).
#[derive(Clone, Debug)]
pub struct CosetTable {
    pub rows: Vec<Vec<u32>>,
    pub gens: Vec<Gen>,
}

impl CosetTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn act(&self, coset: u32, gen: usize, inverse: bool) -> u32 {
        self.rows[coset as usize][2 * gen + inverse as usize]
    }

    /// A word (as letters) reaching each coset from coset 0 along a BFS tree.
    pub fn transversal(&self) -> Vec<Vec<(usize, bool)>> {
        let mut words: Vec<Option<Vec<(usize, bool)>>> = vec![None; self.len()];
        words[0] = Some(Vec::new());
        let mut queue = std::collections::VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for col in 0..2 * self.gens.len() {
                let d = self.rows[c as usize][col];
                if words[d as usize].is_none() {
                    let mut w = words[c as usize].clone().expect("visited");
                    w.push((col / 2, col % 2 == 1));
                    words[d as usize] = Some(w);
                    queue.push_back(d);
                }
            }
        }
        words.into_iter().map(|w| w.expect("connected")).collect()
    }

    pub fn apply_word(&self, mut coset: u32, letters: &[(usize, bool)]) -> u32 {
        for &(g, inv) in letters {
            coset = self.act(coset, g, inv);
        }
        coset
    }

    /// Number of conjugacy classes of the enumerated group, computed from the table in
    /// its regular representation.
    pub fn class_count(&self) -> usize {
        let words = self.transversal();
        let n = self.len();
        let mut seen = vec![false; n];
        let mut classes = 0;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            classes += 1;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for g in 0..self.gens.len() {
                    // coset of g^-1 · w_i · g
                    let c = self.act(0, g, true);
                    let c = self.apply_word(c, &words[i]);
                    let c = self.act(c, g, false) as usize;
                    if !seen[c] {
                        seen[c] = true;
                        stack.push(c);
                    }
                }
            }
        }
        classes
    }
}

struct Enumerator {
    ncols: usize,
    table: Vec<Vec<u32>>,
    parent: Vec<u32>,
    queue: Vec<u32>,
    limit: usize,
}

impl Enumerator {
    fn rep(&mut self, mut k: u32) -> u32 {
        let mut root = k;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        while self.parent[k as usize] != root {
            let next = self.parent[k as usize];
            self.parent[k as usize] = root;
            k = next;
        }
        root
    }

    fn live(&self, k: u32) -> bool {
        self.parent[k as usize] == k
    }

    fn define(&mut self, a: u32, x: usize) -> bool {
        if self.table.len() >= self.limit {
            return false;
        }
        let b = self.table.len() as u32;
        self.table.push(vec![NONE; self.ncols]);
        self.parent.push(b);
        self.table[a as usize][x] = b;
        self.table[b as usize][x ^ 1] = a;
        true
    }

    fn merge(&mut self, k: u32, l: u32) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi as usize] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let g = self.queue[i];
            i += 1;
            for x in 0..self.ncols {
                let d = self.table[g as usize][x];
                if d == NONE {
                    continue;
                }
                if self.table[d as usize][x ^ 1] == g {
                    self.table[d as usize][x ^ 1] = NONE;
                }
                let mu = self.rep(g);
                let nu = self.rep(d);
                let mx = self.table[mu as usize][x];
                if mx != NONE {
                    self.merge(nu, mx);
                } else {
                    let nx = self.table[nu as usize][x ^ 1];
                    if nx != NONE {
                        self.merge(mu, nx);
                    } else {
                        self.table[mu as usize][x] = nu;
                        self.table[nu as usize][x ^ 1] = mu;
                    }
                }
            }
        }
    }

    /// Returns false when the coset limit was hit.
    fn scan_and_fill(&mut self, a: u32, w: &[usize]) -> bool {
        if w.is_empty() {
            return true;
        }
        let (mut f, mut b) = (a, a);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f as usize][w[i]] != NONE {
                f = self.table[f as usize][w[i]];
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return true;
            }
            while j >= i as isize && self.table[b as usize][w[j as usize] ^ 1] != NONE {
                b = self.table[b as usize][w[j as usize] ^ 1];
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return true;
            } else if j == i as isize {
                self.table[f as usize][w[i]] = b;
                self.table[b as usize][w[i] ^ 1] = f;
                return true;
            } else if !self.define(f, w[i]) {
                return false;
            }
        }
    }
}

/// Enumerates the cosets of the trivial subgroup in `⟨gens | relators⟩`.
///
/// Returns `None` if more than `limit` cosets were needed.
pub fn enumerate(gens: &[Gen], relators: &[Word], limit: usize) -> Option<CosetTable> {
    let ncols = 2 * gens.len();
    let col = |g: Gen, inv: bool| {
        let i = gens
            .iter()
            .position(|&h| h == g)
            .expect("relator generator listed");
        2 * i + inv as usize
    };
    let rels: Vec<Vec<usize>> = relators
        .iter()
        .map(|w| w.letters().map(|(g, inv)| col(g, inv)).collect())
        .filter(|r: &Vec<usize>| !r.is_empty())
        .collect();
    let mut en = Enumerator {
        ncols,
        table: vec![vec![NONE; ncols]],
        parent: vec![0],
        queue: Vec::new(),
        limit,
    };
    let mut a = 0u32;
    while (a as usize) < en.table.len() {
        if en.live(a) {
            for r in &rels {
                if !en.scan_and_fill(a, r) {
                    return None;
                }
                if !en.live(a) {
                    break;
                }
            }
            if en.live(a) {
                for x in 0..ncols {
                    if en.table[a as usize][x] == NONE && !en.define(a, x) {
                        return None;
                    }
                }
            }
        }
        a += 1;
    }
    let live: Vec<u32> = (0..en.table.len() as u32).filter(|&k| en.live(k)).collect();
    let mut renum = vec![NONE; en.table.len()];
    for (i, &k) in live.iter().enumerate() {
        renum[k as usize] = i as u32;
    }
    let mut rows = Vec::with_capacity(live.len());
    for &k in &live {
        let mut row = Vec::with_capacity(ncols);
        for x in 0..ncols {
            let t = en.table[k as usize][x];
            let t = en.rep(t);
            row.push(renum[t as usize]);
        }
        rows.push(row);
    }
    Some(CosetTable {
        rows,
        gens: gens.to_vec(),
    })
}
