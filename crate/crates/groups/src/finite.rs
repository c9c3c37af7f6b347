use serde::{Deserialize, Serialize};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group must have at least one element")]
    Empty,
    #[error("row {row} of the multiplication table has length {len}, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {a}*{b} = {value} is out of range")]
    OutOfRange { a: usize, b: usize, value: usize },
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NonAssociative { a: usize, b: usize, c: usize },
    #[error("unknown group {0:?}")]
    Unknown(String),
}

/// JSON description of a group.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupSpec {
    Cyclic { n: usize },
    Product { factors: Vec<GroupSpec> },
    Table { mul: Vec<Vec<usize>> },
}

/// A validated finite group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

/// One orbit of the conjugation action, with its least element as representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub elements: Vec<usize>,
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup, GroupError> {
    match spec {
        GroupSpec::Cyclic { n } => FiniteGroup::cyclic(*n),
        GroupSpec::Product { factors } => {
            let mut acc = FiniteGroup::cyclic(1)?;
            for f in factors {
                acc = acc.product(&build_group(f)?);
            }
            Ok(acc)
        }
        GroupSpec::Table { mul } => FiniteGroup::from_table(mul.clone()),
    }
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self, GroupError> {
        if n == 0 {
            return Err(GroupError::Empty);
        }
        Self::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// Direct product; the pair (a, b) has index `a * |other| + b`.
    pub fn product(&self, other: &FiniteGroup) -> FiniteGroup {
        let m = other.n;
        let n = self.n * m;
        let mut mul = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                let (a1, b1) = (x / m, x % m);
                let (a2, b2) = (y / m, y % m);
                mul[x * n + y] = self.mul(a1, a2) * m + other.mul(b1, b2);
            }
        }
        let identity = self.identity * m + other.identity;
        let inverse = (0..n).map(|x| self.inv(x / m) * m + other.inv(x % m)).collect();
        FiniteGroup { n, mul, identity, inverse }
    }

    /// Symmetric group on three letters; permutations in lexicographic order,
    /// composed as (p*q)(i) = p(q(i)).
    pub fn symmetric3() -> FiniteGroup {
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = perms
            .iter()
            .map(|p| perms.iter().map(|q| idx([p[q[0]], p[q[1]], p[q[2]]])).collect())
            .collect();
        Self::from_table(table).expect("S3 table is a group")
    }

    /// Catalogue lookup: `Z<n>`, `Z<m>xZ<n>` and `S3`.
    pub fn builtin(name: &str) -> Result<FiniteGroup, GroupError> {
        let unknown = || GroupError::Unknown(name.to_string());
        if name == "S3" {
            return Ok(Self::symmetric3());
        }
        let mut acc = Self::cyclic(1)?;
        for part in name.split(['x', '×']) {
            let n: usize = part.strip_prefix('Z').and_then(|s| s.parse().ok()).ok_or_else(unknown)?;
            acc = acc.product(&Self::cyclic(n)?);
        }
        Ok(acc)
    }

    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::Empty);
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != n {
                return Err(GroupError::NotSquare { row, len: r.len(), expected: n });
            }
            if let Some((b, &value)) = r.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(GroupError::OutOfRange { a: row, b, value });
            }
        }
        let mul: Vec<usize> = table.into_iter().flatten().collect();
        let at = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return Err(GroupError::NonAssociative { a, b, c });
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|g| {
                (0..n)
                    .find(|&h| at(g, h) == identity && at(h, g) == identity)
                    .ok_or(GroupError::NoInverse(g))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup { n, mul, identity, inverse })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// g x g⁻¹
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn commute(&self, a: usize, b: usize) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn to_spec(&self) -> GroupSpec {
        GroupSpec::Table { mul: self.table() }
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for x in 0..self.n {
            if seen[x] {
                continue;
            }
            let mut elements: Vec<usize> = (0..self.n).map(|g| self.conj(g, x)).collect();
            elements.sort_unstable();
            elements.dedup();
            for &y in &elements {
                seen[y] = true;
            }
            out.push(ConjugacyClass { representative: x, elements });
        }
        out
    }

    /// Least-index representative of the class of `x`.
    pub fn class_representative(&self, x: usize) -> usize {
        (0..self.n).map(|g| self.conj(g, x)).min().unwrap()
    }

    pub fn is_subgroup(&self, h: &[usize]) -> bool {
        !h.is_empty()
            && h.iter().all(|&x| x < self.n)
            && h.contains(&self.identity)
            && h.iter().all(|&a| h.iter().all(|&b| h.contains(&self.mul(a, self.inv(b)))))
    }

    /// All subgroups, each as a sorted element list, in a deterministic order.
    pub fn subgroups(&self) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        let mut frontier = vec![vec![self.identity]];
        found.push(vec![self.identity]);
        while let Some(h) = frontier.pop() {
            for g in 0..self.n {
                if h.contains(&g) {
                    continue;
                }
                let k = self.generated(h.iter().copied().chain([g]));
                if !found.contains(&k) {
                    found.push(k.clone());
                    frontier.push(k);
                }
            }
        }
        found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        found
    }

    /// Subgroups up to conjugacy; each class is represented by its least
    /// member in the order of [`FiniteGroup::subgroups`].
    pub fn subgroup_class_representatives(&self) -> Vec<Vec<usize>> {
        let mut reps: Vec<Vec<usize>> = Vec::new();
        for h in self.subgroups() {
            let conjugate_of_rep = reps.iter().any(|r| {
                r.len() == h.len()
                    && (0..self.n).any(|g| {
                        let mut c: Vec<usize> = r.iter().map(|&x| self.conj(g, x)).collect();
                        c.sort_unstable();
                        c == h
                    })
            });
            if !conjugate_of_rep {
                reps.push(h);
            }
        }
        reps
    }

    /// Subgroup generated by the given elements, sorted.
    pub fn generated(&self, gens: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let gens: Vec<usize> = gens.into_iter().collect();
        let mut set = vec![self.identity];
        let mut i = 0;
        while i < set.len() {
            for &g in &gens {
                let y = self.mul(set[i], g);
                if !set.contains(&y) {
                    set.push(y);
                }
            }
            i += 1;
        }
        set.sort_unstable();
        set
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_and_klein() {
        let z2 = FiniteGroup::cyclic(2).unwrap();
        assert_eq!(z2.order(), 2);
        let v4 = build_group(&GroupSpec::Product {
            factors: vec![GroupSpec::Cyclic { n: 2 }, GroupSpec::Cyclic { n: 2 }],
        })
        .unwrap();
        assert_eq!(v4.order(), 4);
        assert!(v4.elements().all(|g| v4.inv(g) == g));
    }

    #[test]
    fn s3_classes() {
        let s3 = FiniteGroup::symmetric3();
        let classes = s3.conjugacy_classes();
        let sizes: Vec<usize> = classes.iter().map(|c| c.elements.len()).collect();
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(classes.iter().map(|c| c.representative).collect::<Vec<_>>(), vec![0, 1, 3]);
        // transposition t=1 conjugates the 3-cycle 3 to its inverse
        assert_eq!(s3.conj(1, 3), s3.inv(3));
    }

    #[test]
    fn rejects_bad_tables() {
        assert_eq!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]), Err(GroupError::NoInverse(1)));
        assert_eq!(FiniteGroup::from_table(vec![vec![1, 0], vec![0, 0]]), Err(GroupError::NoIdentity));
        // (1*1)*2 = 2 but 1*(1*2) = 1
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 0]];
        assert!(matches!(FiniteGroup::from_table(t), Err(GroupError::NonAssociative { .. })));
    }

    #[test]
    fn subgroups_of_s3() {
        let s3 = FiniteGroup::symmetric3();
        assert_eq!(s3.subgroups().len(), 6);
        let reps = s3.subgroup_class_representatives();
        assert_eq!(reps.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 2, 3, 6]);
    }

    #[test]
    fn catalogue_names() {
        assert_eq!(FiniteGroup::builtin("Z4").unwrap().order(), 4);
        assert_eq!(FiniteGroup::builtin("Z2xZ2").unwrap().order(), 4);
        assert!(FiniteGroup::builtin("Q8").is_err());
    }
}
