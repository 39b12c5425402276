/// Indices of a longest strictly increasing subsequence of `seq`.
///
/// Patience sorting with predecessor links, `O(n log n)`. Among optimal
/// answers the one ending at the smallest final tail is returned.
pub fn longest_increasing(seq: &[u32]) -> Vec<usize> {
    // tails[k] = index of the smallest tail of an increasing run of length k+1
    let mut tails: Vec<usize> = Vec::new();
    let mut prev: Vec<Option<usize>> = vec![None; seq.len()];
    for (i, &x) in seq.iter().enumerate() {
        let k = tails.partition_point(|&t| seq[t] < x);
        if k > 0 {
            prev[i] = Some(tails[k - 1]);
        }
        if k == tails.len() {
            tails.push(i);
        } else {
            tails[k] = i;
        }
    }
    let mut out = Vec::with_capacity(tails.len());
    let mut cur = tails.last().copied();
    while let Some(i) = cur {
        out.push(i);
        cur = prev[i];
    }
    out.reverse();
    out
}

/// Indices of a longest strictly decreasing subsequence of `seq`.
pub fn longest_decreasing(seq: &[u32]) -> Vec<usize> {
    let flipped: Vec<u32> = seq.iter().map(|&x| u32::MAX - x).collect();
    longest_increasing(&flipped)
}
