use crate::semigroup::NumericalSemigroup;

/// Children in the genus tree: remove each minimal generator above `F(S)`,
/// in increasing order of the removed generator.
pub fn children(s: &NumericalSemigroup) -> Vec<NumericalSemigroup> {
    let frob = s.frobenius();
    s.generators()
        .iter()
        .filter(|&&g| g > frob)
        .map(|&g| {
            s.remove_minimal_generator(g)
                .expect("removing a generator above F(S) leaves a numerical semigroup")
        })
        .collect()
}

/// Depth-first pre-order walk of the genus tree below `root`, down to
/// `genus_max`. Every numerical semigroup of genus at most `genus_max` in
/// the subtree is produced exactly once.
pub struct GenusTree {
    stack: Vec<NumericalSemigroup>,
    genus_max: u64,
}

impl GenusTree {
    pub fn new(genus_max: u64) -> Self {
        Self::from_root(NumericalSemigroup::whole(), genus_max)
    }

    pub fn from_root(root: NumericalSemigroup, genus_max: u64) -> Self {
        let stack = if root.genus() <= genus_max {
            vec![root]
        } else {
            Vec::new()
        };
        Self { stack, genus_max }
    }
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<Self::Item> {
        let s = self.stack.pop()?;
        if s.genus() < self.genus_max {
            // reversed so the smallest removed generator is visited first
            self.stack.extend(children(&s).into_iter().rev());
        }
        Some(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_genus_counts() {
        let mut counts = [0usize; 4];
        for s in GenusTree::new(3) {
            counts[s.genus() as usize] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 4]);
        assert_eq!(
            GenusTree::new(0).collect::<Vec<_>>(),
            vec![NumericalSemigroup::whole()]
        );
    }

    #[test]
    fn children_of_two_three() {
        let s = NumericalSemigroup::new(&[2, 3]).unwrap();
        let kids: Vec<Vec<i64>> = children(&s)
            .iter()
            .map(|c| c.generators().to_vec())
            .collect();
        assert_eq!(kids, vec![vec![3, 4, 5], vec![2, 5]]);
    }
}
