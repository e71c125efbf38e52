use super::CopySystem;
use crate::error::usage;
use crate::Result;

/// A set of points, ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transversal {
    pub members: Vec<usize>,
}

impl Transversal {
    pub fn meets_every_copy(&self, sys: &CopySystem, m: usize) -> bool {
        sys.copies()
            .iter()
            .all(|copy| copy.iter().filter(|p| self.members.binary_search(p).is_ok()).count() == m)
    }
}

struct Search<'a> {
    sys: &'a CopySystem,
    m: usize,
    incidence: Vec<Vec<usize>>,
    value: Vec<Option<bool>>,
    /// (included, undecided) per copy
    counts: Vec<(usize, usize)>,
    trail: Vec<usize>,
}

impl Search<'_> {
    fn set(&mut self, p: usize, v: bool) {
        self.value[p] = Some(v);
        self.trail.push(p);
        for &c in &self.incidence[p] {
            self.counts[c].1 -= 1;
            if v {
                self.counts[c].0 += 1;
            }
        }
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let p = self.trail.pop().unwrap();
            let v = self.value[p].take().unwrap();
            for &c in &self.incidence[p] {
                self.counts[c].1 += 1;
                if v {
                    self.counts[c].0 -= 1;
                }
            }
        }
    }

    /// Sets `p` and forces every copy whose remaining points are pinned by
    /// its quota. Returns false on a contradiction.
    fn assign(&mut self, p: usize, v: bool) -> bool {
        self.set(p, v);
        let mut queue: Vec<usize> = self.incidence[p].clone();
        while let Some(c) = queue.pop() {
            let (inc, und) = self.counts[c];
            if inc > self.m || inc + und < self.m {
                return false;
            }
            if und == 0 {
                continue;
            }
            let forced = if inc == self.m {
                false
            } else if inc + und == self.m {
                true
            } else {
                continue;
            };
            for &q in &self.sys.copies()[c] {
                if self.value[q].is_none() {
                    self.set(q, forced);
                    queue.extend(self.incidence[q].iter().copied());
                }
            }
        }
        true
    }

    fn go(&mut self, from: usize) -> bool {
        let Some(p) = (from..self.value.len()).find(|&p| self.value[p].is_none()) else {
            return true;
        };
        for v in [true, false] {
            let mark = self.trail.len();
            if self.assign(p, v) && self.go(p + 1) {
                return true;
            }
            self.undo_to(mark);
        }
        false
    }
}

/// A set meeting every copy in exactly `m` points, if there is one.
///
/// Branches on the undecided point of lowest id, trying inclusion first,
/// and propagates copies whose quota leaves no choice. The result is the
/// first solution in that order.
pub fn transversal_search(sys: &CopySystem, m: usize) -> Result<Option<Transversal>> {
    if m == 0 || m >= sys.copy_size() {
        return usage(format!("need 1 <= m < {}, got {m}", sys.copy_size()));
    }
    let mut s = Search {
        sys,
        m,
        incidence: sys.incidence(),
        value: vec![None; sys.point_count()],
        counts: vec![(0, sys.copy_size()); sys.copies().len()],
        trail: Vec::new(),
    };
    if !s.go(0) {
        return Ok(None);
    }
    let members = (0..sys.point_count()).filter(|&p| s.value[p] == Some(true)).collect();
    Ok(Some(Transversal { members }))
}
