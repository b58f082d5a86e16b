use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("order relation has a cycle through {0:?}")]
    Cycle(String),
    #[error("unknown poset element {0:?}")]
    Unknown(String),
}

/// Finite strict partial order, stored as its transitive closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    labels: Vec<String>,
    less: Vec<Vec<bool>>,
}

impl Poset {
    pub fn antichain(labels: Vec<String>) -> Self {
        let n = labels.len();
        Poset {
            labels,
            less: vec![vec![false; n]; n],
        }
    }

    /// Order generated by `lower < upper` pairs.
    pub fn from_relations(
        labels: Vec<String>,
        pairs: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let mut p = Poset::antichain(labels);
        for &(a, b) in pairs {
            p.less[a][b] = true;
        }
        p.close()?;
        Ok(p)
    }

    pub fn from_named_relations(
        labels: Vec<String>,
        pairs: &[(String, String)],
    ) -> Result<Self, PosetError> {
        let find = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| PosetError::Unknown(s.to_string()))
        };
        let idx = pairs
            .iter()
            .map(|(a, b)| Ok((find(a)?, find(b)?)))
            .collect::<Result<Vec<_>, PosetError>>()?;
        Poset::from_relations(labels, &idx)
    }

    /// Total order listing elements from smallest to largest.
    pub fn chain(labels: Vec<String>, order: &[usize]) -> Self {
        let pairs: Vec<(usize, usize)> = order.windows(2).map(|w| (w[0], w[1])).collect();
        Poset::from_relations(labels, &pairs).expect("a chain has no cycles")
    }

    fn close(&mut self) -> Result<(), PosetError> {
        let n = self.len();
        for k in 0..n {
            for i in 0..n {
                if self.less[i][k] {
                    for j in 0..n {
                        if self.less[k][j] {
                            self.less[i][j] = true;
                        }
                    }
                }
            }
        }
        if let Some(i) = (0..n).find(|&i| self.less[i][i]) {
            return Err(PosetError::Cycle(self.labels[i].clone()));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        self.less[a][b]
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        a == b || self.less[a][b]
    }

    pub fn opposite(&self) -> Poset {
        let n = self.len();
        let mut less = vec![vec![false; n]; n];
        for (i, row) in self.less.iter().enumerate() {
            for (j, &l) in row.iter().enumerate() {
                less[j][i] = l;
            }
        }
        Poset {
            labels: self.labels.clone(),
            less,
        }
    }

    /// Adds `a < b` (and closes), failing on cycles.
    pub fn extended(&self, pairs: &[(usize, usize)]) -> Result<Poset, PosetError> {
        let mut p = self.clone();
        for &(a, b) in pairs {
            p.less[a][b] = true;
        }
        p.close()?;
        Ok(p)
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.less[a][b] && !(0..n).any(|c| self.less[a][c] && self.less[c][b]) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn describe(&self) -> String {
        let covers = self.covers();
        if covers.is_empty() {
            return "(no relations)".into();
        }
        covers
            .iter()
            .map(|&(a, b)| format!("{} < {}", self.labels[a], self.labels[b]))
            .collect::<Vec<_>>()
            .join(", ")
    }

    /// All linear extensions, each listed from smallest to largest.
    pub fn linear_extensions(&self) -> Vec<Vec<usize>> {
        fn go(p: &Poset, used: &mut Vec<bool>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let n = p.len();
            if cur.len() == n {
                out.push(cur.clone());
                return;
            }
            for x in 0..n {
                if used[x] || (0..n).any(|y| !used[y] && p.less[y][x]) {
                    continue;
                }
                used[x] = true;
                cur.push(x);
                go(p, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
        let mut out = Vec::new();
        go(
            self,
            &mut vec![false; self.len()],
            &mut Vec::new(),
            &mut out,
        );
        out
    }
}
