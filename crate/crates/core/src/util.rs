//! Small shared combinatorial helpers.

/// All t-element subsets of {0, ..., n-1} in lexicographic order.
pub(crate) fn subsets_of_size(n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if t > n {
        return out;
    }
    let mut current: Vec<usize> = (0..t).collect();
    loop {
        out.push(current.clone());
        // Advance: find the rightmost index that can still move right.
        let mut i = t;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] != i + n - t {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        current[i] += 1;
        for j in i + 1..t {
            current[j] = current[j - 1] + 1;
        }
    }
}
