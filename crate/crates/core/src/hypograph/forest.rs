use alloc::vec::Vec;

use super::HypographError;

/// Rooted forest on nodes `0..n` given by parent pointers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forest {
    parents: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
}

impl Forest {
    pub fn from_parents(parents: Vec<Option<usize>>) -> Result<Self, HypographError> {
        let n = parents.len();
        let mut children = alloc::vec![Vec::new(); n];
        for (v, p) in parents.iter().enumerate() {
            if let Some(p) = *p {
                if p >= n {
                    return Err(HypographError::NodeOutOfRange(p));
                }
                children[p].push(v);
            }
        }
        // every upward walk must stop within n steps
        for start in 0..n {
            let mut v = start;
            let mut steps = 0;
            while let Some(p) = parents[v] {
                v = p;
                steps += 1;
                if steps > n {
                    return Err(HypographError::Cycle(start));
                }
            }
        }
        Ok(Forest { parents, children })
    }

    pub fn len(&self) -> usize {
        self.parents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parents[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn leaves(&self) -> usize {
        self.children.iter().filter(|c| c.is_empty()).count()
    }

    /// Every node with children has at least two.
    pub fn is_stable(&self) -> bool {
        self.children.iter().all(|c| c.len() != 1)
    }

    /// Whether `a` is `b` or one of its ancestors.
    pub fn is_ancestor(&self, a: usize, b: usize) -> bool {
        let mut v = Some(b);
        while let Some(x) = v {
            if x == a {
                return true;
            }
            v = self.parents[x];
        }
        false
    }

    /// Forest induced on `subset` (indices into the result follow the order
    /// of `subset`): each node's parent is its nearest ancestor in `subset`.
    pub fn induced(&self, subset: &[usize]) -> Result<Forest, HypographError> {
        let mut index = alloc::vec![None; self.len()];
        for (i, &v) in subset.iter().enumerate() {
            if v >= self.len() {
                return Err(HypographError::NodeOutOfRange(v));
            }
            index[v] = Some(i);
        }
        let parents = subset
            .iter()
            .map(|&v| {
                let mut p = self.parents[v];
                while let Some(x) = p {
                    if index[x].is_some() {
                        return index[x];
                    }
                    p = self.parents[x];
                }
                None
            })
            .collect();
        Forest::from_parents(parents)
    }

    fn first_leaf_below(&self, v: usize) -> usize {
        let mut best = usize::MAX;
        let mut stack = alloc::vec![v];
        while let Some(x) = stack.pop() {
            if self.children[x].is_empty() {
                best = best.min(x);
            }
            stack.extend_from_slice(&self.children[x]);
        }
        best
    }
}

/// Enlarges `subset` inside `ambient` until its induced forest is stable.
///
/// A node with a single induced child gains the smallest leaf of `ambient`
/// below one of its other ambient children. When `ambient` offers no other
/// child the node is dropped instead. Returns the sorted node set, whose
/// induced forest `F` satisfies `|F| <= 2 * leaves(F)`.
pub fn stable_forest_reduce(
    ambient: &Forest,
    subset: &[usize],
) -> Result<Vec<usize>, HypographError> {
    let mut set: Vec<usize> = subset.to_vec();
    set.sort_unstable();
    set.dedup();
    loop {
        let induced = ambient.induced(&set)?;
        let Some(i) = (0..set.len()).find(|&i| induced.children(i).len() == 1) else {
            return Ok(set);
        };
        let v = set[i];
        let only = set[induced.children(i)[0]];
        let other = ambient
            .children(v)
            .iter()
            .filter(|&&c| !ambient.is_ancestor(c, only))
            .map(|&c| ambient.first_leaf_below(c))
            .min();
        match other {
            Some(leaf) => set.push(leaf),
            None => {
                set.remove(i);
            }
        }
        set.sort_unstable();
    }
}
