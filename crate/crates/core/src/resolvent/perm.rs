use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use crate::error::Error;

/// Permutation of {0..n-1}; `self.0[i]` is the image of i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(pub Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n as u8).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Parses 1-based cycle notation such as "(1,3,2,4)(5,7,6,8)".
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self, Error> {
        let mut img: Vec<u8> = (0..n as u8).collect();
        let mut moved = vec![false; n];
        let bad = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg} in {s:?}") };
        for cyc in s.split(')').map(str::trim).filter(|c| !c.is_empty()) {
            let body = cyc.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let pts: Vec<usize> = body
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad("bad point")))
                .collect::<Result<_, _>>()?;
            if pts.iter().any(|&p| p == 0 || p > n) {
                return Err(bad("point out of range"));
            }
            for &p in &pts {
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad("repeated point"));
                }
            }
            for (i, &p) in pts.iter().enumerate() {
                img[p - 1] = (pts[(i + 1) % pts.len()] - 1) as u8;
            }
        }
        Ok(Perm(img))
    }

    /// (self ∘ other)(i) = self(other(i)).
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Cycle lengths including fixed points, ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i] as usize;
                len += 1;
            }
            out.push(len);
        }
        out.sort_unstable();
        out
    }

    pub fn order(&self) -> usize {
        self.cycle_type().into_iter().fold(1, num_integer::lcm)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut any = false;
        for s in 0..n {
            if seen[s] || self.0[s] as usize == s {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.0[i] as usize;
            }
            write!(f, "({})", cyc.join(","))?;
            any = true;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    pub degree: usize,
    pub generators: Vec<Perm>,
    pub elements: BTreeSet<Perm>,
}

impl PermGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.elements.contains(g)
    }

    /// Closed under composition and inverses, with the identity.
    pub fn is_group(&self) -> bool {
        self.contains(&Perm::identity(self.degree))
            && self.elements.iter().all(|g| self.contains(&g.inverse()))
            && self
                .elements
                .iter()
                .all(|g| self.elements.iter().all(|h| self.contains(&g.compose(h))))
    }

    /// Element orders with multiplicities, ascending by order.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts = std::collections::BTreeMap::new();
        for g in &self.elements {
            *counts.entry(g.order()).or_insert(0) += 1;
        }
        counts.into_iter().collect()
    }
}

/// Group generated by `gens`, by breadth-first multiplication.
pub fn perm_closure(gens: &[Perm], degree: usize) -> PermGroup {
    let id = Perm::identity(degree);
    let mut elements = BTreeSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in gens {
            let h = s.compose(&g);
            if elements.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    PermGroup { degree, generators: gens.to_vec(), elements }
}

/// All permutations of {0..n-1} in lexicographic order.
pub fn symmetric_group_elements(n: usize) -> Vec<Perm> {
    let mut cur: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![Perm(cur.clone())];
    loop {
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
        out.push(Perm(cur.clone()));
    }
}

/// Normalizer of `h` in the full symmetric group, by scanning every element.
pub fn normalizer_in_symmetric(h: &PermGroup) -> PermGroup {
    let gens = if h.generators.is_empty() {
        h.elements.iter().cloned().collect()
    } else {
        h.generators.clone()
    };
    let elements: BTreeSet<Perm> = symmetric_group_elements(h.degree)
        .into_iter()
        .filter(|g| {
            let gi = g.inverse();
            gens.iter().all(|s| h.contains(&g.compose(s).compose(&gi)))
        })
        .collect();
    PermGroup { degree: h.degree, generators: Vec::new(), elements }
}

/// Normalizer in S8 of a group on 8 points.
pub fn normalizer_in_s8(h: &PermGroup) -> Result<PermGroup, Error> {
    if h.degree != 8 {
        return Err(Error::Invalid(format!("expected a group on 8 points, got {}", h.degree)));
    }
    Ok(normalizer_in_symmetric(h))
}

pub fn cycle_type_set(g: &PermGroup) -> BTreeSet<Vec<usize>> {
    g.elements.iter().map(Perm::cycle_type).collect()
}

/// Q8 inside S8 from the quaternion units i and j.
pub fn quaternion_q8() -> PermGroup {
    let i = Perm::parse_cycles("(1,3,2,4)(5,7,6,8)", 8).expect("valid");
    let j = Perm::parse_cycles("(1,5,2,6)(3,8,4,7)", 8).expect("valid");
    perm_closure(&[i, j], 8)
}

/// S2 wr S4 permuting the blocks {1,8}, {2,7}, {3,6}, {4,5}.
pub fn wreath_s2_s4() -> PermGroup {
    let gens = ["(1,8)", "(1,2)(8,7)", "(1,2,3,4)(8,7,6,5)"]
        .iter()
        .map(|s| Perm::parse_cycles(s, 8).expect("valid"))
        .collect::<Vec<_>>();
    perm_closure(&gens, 8)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_round_trip() {
        let p = Perm::parse_cycles("(1,3,2,4)(5,7,6,8)", 8).unwrap();
        assert_eq!(p.to_string(), "(1,3,2,4)(5,7,6,8)");
        assert_eq!(p.cycle_type(), vec![4, 4]);
        assert_eq!(p.compose(&p.inverse()), Perm::identity(8));
        assert!(Perm::parse_cycles("(1,1)", 8).is_err());
        assert!(Perm::parse_cycles("(1,9)", 8).is_err());
    }

    #[test]
    fn symmetric_counts() {
        assert_eq!(symmetric_group_elements(4).len(), 24);
        assert_eq!(perm_closure(&[], 5).order(), 1);
        assert_eq!(wreath_s2_s4().order(), 384);
    }
}
