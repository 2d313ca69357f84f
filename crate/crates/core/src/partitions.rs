//! Set partitions of `0..n` as restricted growth strings.

/// Yields every partition of `0..n` once, as a block label per item
/// (`labels[0] == 0` and each label is at most one more than the maximum of
/// the labels before it). There are Bell(n) of them.
pub struct SetPartitions {
    labels: Vec<usize>,
    // max label over labels[..=i]
    prefix_max: Vec<usize>,
    started: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        SetPartitions {
            labels: vec![0; n],
            prefix_max: vec![0; n],
            started: false,
        }
    }

    /// Advances to the next partition; `None` after the last one.
    #[allow(clippy::should_implement_trait)]
    pub fn next(&mut self) -> Option<&[usize]> {
        if !self.started {
            self.started = true;
            return Some(&self.labels);
        }
        let n = self.labels.len();
        let mut i = n;
        while i > 1 {
            i -= 1;
            if self.labels[i] <= self.prefix_max[i - 1] {
                self.labels[i] += 1;
                self.prefix_max[i] = self.prefix_max[i - 1].max(self.labels[i]);
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.prefix_max[j] = self.prefix_max[i];
                }
                return Some(&self.labels);
            }
        }
        None
    }
}

/// Groups items `0..labels.len()` into blocks by label, blocks ordered by
/// their least item.
pub fn blocks(labels: &[usize]) -> Vec<Vec<usize>> {
    let count = labels.iter().max().map_or(0, |m| m + 1);
    let mut out = vec![Vec::new(); count];
    for (item, &l) in labels.iter().enumerate() {
        out[l].push(item);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize) -> usize {
        let mut p = SetPartitions::new(n);
        let mut c = 0;
        while p.next().is_some() {
            c += 1;
        }
        c
    }

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, &b) in bell.iter().enumerate() {
            assert_eq!(count(n), b, "n = {n}");
        }
    }

    #[test]
    fn labels_are_restricted_growth() {
        let mut p = SetPartitions::new(4);
        let mut seen = std::collections::HashSet::new();
        while let Some(l) = p.next() {
            let mut max = 0;
            for (i, &x) in l.iter().enumerate() {
                if i == 0 {
                    assert_eq!(x, 0);
                } else {
                    assert!(x <= max + 1);
                }
                max = max.max(x);
            }
            assert!(seen.insert(blocks(l)));
        }
    }
}
