//! Small permutation helpers shared by the signed determinant-style sums.

/// Permutations of `0..floors.len()` with `sigma[i] >= floors[i]`, paired
/// with their signs. Built depth-first so positions with tight floors prune
/// early; callers use this to skip alternants whose targets go negative.
pub(crate) fn bounded_permutations(floors: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let l = floors.len();
    let mut out = Vec::new();
    let mut used = vec![false; l];
    let mut cur = vec![0usize; l];
    rec(floors, &mut used, &mut cur, 0, &mut out);
    out
}

fn rec(
    floors: &[usize],
    used: &mut Vec<bool>,
    cur: &mut Vec<usize>,
    i: usize,
    out: &mut Vec<(Vec<usize>, i64)>,
) {
    let l = floors.len();
    if i == l {
        out.push((cur.clone(), sign(cur)));
        return;
    }
    for v in floors[i]..l {
        if !used[v] {
            used[v] = true;
            cur[i] = v;
            rec(floors, used, cur, i + 1, out);
            used[v] = false;
        }
    }
}

pub(crate) fn sign(perm: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}
