//! Small enumeration helpers shared by the tree, complex and gauge code.

/// Compositions of `n` into exactly `parts` positive parts, in
/// lexicographic order.
pub(crate) fn compositions(n: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for first in 1..=n.saturating_sub(parts - 1) {
            cur.push(first);
            go(n - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, parts, &mut Vec::new(), &mut out);
    out
}

/// All sequences choosing one item per list.
pub(crate) fn product<T: Clone>(lists: &[Vec<T>]) -> Vec<Vec<T>> {
    lists.iter().fold(vec![Vec::new()], |acc, list| {
        acc.iter()
            .flat_map(|prefix| {
                list.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(compositions(4, 2), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(5, 5).len(), 1);
        assert!(compositions(2, 3).is_empty());
        let total: usize = (1..=7).map(|i| compositions(7, i).len()).sum();
        assert_eq!(total, 64);
        assert_eq!(
            product(&[vec![1, 2], vec![3]]),
            vec![vec![1, 3], vec![2, 3]]
        );
    }
}
