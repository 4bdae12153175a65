//! Integer-capacity max-flow by shortest augmenting paths.

use std::collections::VecDeque;

pub(crate) struct FlowNet {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    orig: Vec<u32>,
}

impl FlowNet {
    pub fn new(nodes: usize) -> Self {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            orig: Vec::new(),
        }
    }

    pub fn nodes(&self) -> usize {
        self.adj.len()
    }

    /// Arc `u -> v` of capacity `c` paired with its reverse of capacity
    /// `back`. Returns the forward arc id; the reverse is `id ^ 1`.
    pub fn add_pair(&mut self, u: usize, v: usize, c: u32, back: u32) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(c);
        self.orig.push(c);
        self.adj[u].push(id);
        self.to.push(u);
        self.cap.push(back);
        self.orig.push(back);
        self.adj[v].push(id + 1);
        id
    }

    #[inline]
    pub fn tail(&self, arc: usize) -> usize {
        self.to[arc ^ 1]
    }

    /// Net flow pushed along `arc` (negative when it runs backwards).
    pub fn flow(&self, arc: usize) -> i64 {
        self.orig[arc] as i64 - self.cap[arc] as i64
    }

    /// Augment from `s` to `t` until no path remains or the flow value
    /// reaches `limit`.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        let mut pred = vec![usize::MAX; self.nodes()];
        let mut queue = VecDeque::new();
        while total < limit {
            pred.fill(usize::MAX);
            queue.clear();
            queue.push_back(s);
            let mut found = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.to[a];
                    if self.cap[a] > 0 && v != s && pred[v] == usize::MAX {
                        pred[v] = a;
                        if v == t {
                            found = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !found {
                break;
            }
            let mut bottleneck = limit - total;
            let mut v = t;
            while v != s {
                let a = pred[v];
                bottleneck = bottleneck.min(self.cap[a]);
                v = self.tail(a);
            }
            let mut v = t;
            while v != s {
                let a = pred[v];
                self.cap[a] -= bottleneck;
                self.cap[a ^ 1] += bottleneck;
                v = self.tail(a);
            }
            total += bottleneck;
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(u) = queue.pop_front() {
            for &a in &self.adj[u] {
                let v = self.to[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }

    /// Decompose the current flow into unit `s -> t` walks. Flow cycles are
    /// cancelled along the way, so every returned node sequence is simple.
    pub fn unit_paths(&self, s: usize, t: usize) -> Vec<Vec<usize>> {
        let mut rem: Vec<i64> = (0..self.to.len()).map(|a| self.flow(a).max(0)).collect();
        let mut paths = Vec::new();
        loop {
            let mut walk = vec![s];
            let mut arcs: Vec<usize> = Vec::new();
            let mut pos = vec![usize::MAX; self.nodes()];
            pos[s] = 0;
            let mut u = s;
            while u != t {
                let Some(&a) = self.adj[u].iter().find(|&&a| rem[a] > 0) else {
                    break;
                };
                let v = self.to[a];
                if pos[v] != usize::MAX {
                    // cancel the cycle v -> ... -> u -> v
                    let start = pos[v];
                    rem[a] -= 1;
                    for &c in &arcs[start..] {
                        rem[c] -= 1;
                    }
                    for &w in &walk[start + 1..] {
                        pos[w] = usize::MAX;
                    }
                    walk.truncate(start + 1);
                    arcs.truncate(start);
                    u = v;
                    continue;
                }
                pos[v] = walk.len();
                walk.push(v);
                arcs.push(a);
                u = v;
            }
            if u != t {
                break;
            }
            for &a in &arcs {
                rem[a] -= 1;
            }
            paths.push(walk);
        }
        paths
    }
}
