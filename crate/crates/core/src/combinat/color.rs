use super::CopySystem;
use crate::error::usage;
use crate::Result;

/// A color in `0..d` for every point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    pub colors: Vec<usize>,
}

impl Coloring {
    /// True if every copy has exactly `n/d` points of each color.
    pub fn is_even(&self, sys: &CopySystem, d: usize) -> bool {
        let quota = sys.copy_size() / d;
        sys.copies().iter().all(|copy| {
            (0..d).all(|c| copy.iter().filter(|&&p| self.colors[p] == c).count() == quota)
        })
    }
}

struct Search<'a> {
    d: usize,
    quota: usize,
    incidence: &'a [Vec<usize>],
    /// counts[copy][color]
    counts: Vec<Vec<usize>>,
    colors: Vec<usize>,
}

impl Search<'_> {
    fn go(&mut self, p: usize, used: usize) -> bool {
        if p == self.colors.len() {
            return true;
        }
        // a fresh color is only tried as the next unused one
        let top = used.min(self.d - 1);
        for c in 0..=top {
            let ok = self.incidence[p].iter().all(|&cp| self.counts[cp][c] < self.quota);
            if !ok {
                continue;
            }
            for &cp in &self.incidence[p] {
                self.counts[cp][c] += 1;
            }
            self.colors[p] = c;
            if self.go(p + 1, used.max(c + 1)) {
                return true;
            }
            for &cp in &self.incidence[p] {
                self.counts[cp][c] -= 1;
            }
        }
        false
    }
}

/// The lexicographically first coloring with `d` colors in which every
/// copy contains exactly `n/d` points of each color, if there is one.
///
/// Points are colored in id order, colors tried in ascending order, and a
/// color is used only after all smaller ones have appeared (so point 0
/// always gets color 0). Since evenness is invariant under renaming colors,
/// this does not change which coloring is found first.
pub fn color_search(sys: &CopySystem, d: usize) -> Result<Option<Coloring>> {
    if d < 2 {
        return usage(format!("need at least 2 colors, got {d}"));
    }
    if !sys.copy_size().is_multiple_of(d) {
        return usage(format!("{d} colors cannot split copies of size {}", sys.copy_size()));
    }
    let incidence = sys.incidence();
    let mut s = Search {
        d,
        quota: sys.copy_size() / d,
        incidence: &incidence,
        counts: vec![vec![0; d]; sys.copies().len()],
        colors: vec![0; sys.point_count()],
    };
    if sys.point_count() == 0 {
        return Ok(Some(Coloring { colors: Vec::new() }));
    }
    Ok(if s.go(0, 0) { Some(Coloring { colors: s.colors }) } else { None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::cycle;
    use proptest::prelude::*;

    /// First even coloring among all d^P in lexicographic order.
    fn brute(sys: &CopySystem, d: usize) -> Option<Coloring> {
        let p = sys.point_count();
        let mut colors = vec![0; p];
        loop {
            let col = Coloring { colors: colors.clone() };
            if col.is_even(sys, d) {
                return Some(col);
            }
            let mut i = p;
            loop {
                if i == 0 {
                    return None;
                }
                i -= 1;
                colors[i] += 1;
                if colors[i] < d {
                    break;
                }
                colors[i] = 0;
            }
        }
    }

    #[test]
    fn examples() {
        let one = CopySystem::new(4, 4, vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(color_search(&one, 2).unwrap().unwrap().colors, vec![0, 0, 1, 1]);
        assert_eq!(color_search(&cycle(3), 2).unwrap(), None);
        assert_eq!(color_search(&cycle(4), 2).unwrap().unwrap().colors, vec![0, 1, 0, 1]);
        assert!(color_search(&cycle(4), 3).is_err());
        assert!(color_search(&cycle(4), 1).is_err());
    }

    fn system() -> impl Strategy<Value = (CopySystem, usize)> {
        prop_oneof![Just((2usize, 2usize)), Just((4, 2)), Just((3, 3)), Just((6, 3)), Just((4, 4))]
            .prop_flat_map(|(n, d)| {
                // keep d^P within 2^20
                let max_p = (1..=20).take_while(|&p| (d as u64).pow(p) <= 1 << 20).last().unwrap() as usize;
                (Just((n, d)), n..=max_p.min(10))
            })
            .prop_flat_map(|((n, d), p)| {
                let copy = Just((0..p).collect::<Vec<_>>()).prop_shuffle().prop_map(move |v| v[..n].to_vec());
                (prop::collection::vec(copy, 0..7), Just((n, d, p)))
            })
            .prop_map(|(copies, (n, d, p))| (CopySystem::new(p, n, copies).unwrap(), d))
    }

    proptest! {
        #[test]
        fn agrees_with_enumeration((sys, d) in system()) {
            let found = color_search(&sys, d).unwrap();
            prop_assert_eq!(&found, &brute(&sys, d));
            if let Some(col) = found {
                prop_assert!(col.is_even(&sys, d));
            }
        }
    }
}
