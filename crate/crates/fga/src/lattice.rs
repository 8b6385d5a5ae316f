//! Integer row lattices in Z^N: echelon bases, membership, intersection and
//! Smith diagonals. Matrices here are tiny (a handful of cyclic summands), so
//! plain Euclidean elimination over i128 is enough.

pub(crate) type Int = i128;

/// Row echelon basis of the lattice spanned by `rows`.
///
/// Pivot columns strictly increase, pivots are positive and every entry above
/// a pivot is reduced into `0..pivot`. The basis is therefore canonical for the
/// lattice and two lattices are equal iff their echelon bases are equal.
pub(crate) fn echelon(rows: &[Vec<Int>], ncols: usize) -> Vec<Vec<Int>> {
    let mut pending: Vec<Vec<Int>> = rows
        .iter()
        .filter(|r| r.iter().any(|&x| x != 0))
        .cloned()
        .collect();
    let mut basis: Vec<Vec<Int>> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();

    for c in 0..ncols {
        loop {
            let best = pending
                .iter()
                .enumerate()
                .filter(|(_, r)| r[c] != 0)
                .min_by_key(|(_, r)| r[c].abs())
                .map(|(i, _)| i);
            let Some(b) = best else { break };
            let mut pivot = pending.swap_remove(b);
            if pivot[c] < 0 {
                pivot.iter_mut().for_each(|x| *x = -*x);
            }
            let mut clean = true;
            for r in pending.iter_mut() {
                if r[c] != 0 {
                    let q = r[c].div_euclid(pivot[c]);
                    axpy(r, -q, &pivot);
                    if r[c] != 0 {
                        clean = false;
                    }
                }
            }
            pending.retain(|r| r.iter().any(|&x| x != 0));
            if clean {
                basis.push(pivot);
                pivots.push(c);
                break;
            }
            pending.push(pivot);
        }
    }

    // reduce entries above each pivot
    for i in 0..basis.len() {
        let c = pivots[i];
        for j in 0..i {
            let q = basis[j][c].div_euclid(basis[i][c]);
            if q != 0 {
                let row = basis[i].clone();
                axpy(&mut basis[j], -q, &row);
            }
        }
    }
    basis
}

fn axpy(target: &mut [Int], a: Int, x: &[Int]) {
    for (t, v) in target.iter_mut().zip(x) {
        *t += a * v;
    }
}

fn pivot_col(row: &[Int]) -> usize {
    row.iter().position(|&x| x != 0).expect("echelon rows are nonzero")
}

/// Coefficients expressing `v` in the echelon basis, or `None` if `v` is not
/// in the lattice.
pub(crate) fn solve(basis: &[Vec<Int>], v: &[Int]) -> Option<Vec<Int>> {
    let mut rest = v.to_vec();
    let mut coeffs = Vec::with_capacity(basis.len());
    for row in basis {
        let c = pivot_col(row);
        if rest[..c].iter().any(|&x| x != 0) {
            return None;
        }
        if rest[c] % row[c] != 0 {
            return None;
        }
        let q = rest[c] / row[c];
        axpy(&mut rest, -q, row);
        coeffs.push(q);
    }
    if rest.iter().all(|&x| x == 0) {
        Some(coeffs)
    } else {
        None
    }
}

pub(crate) fn contains(basis: &[Vec<Int>], v: &[Int]) -> bool {
    solve(basis, v).is_some()
}

/// Echelon basis of the intersection of two lattices in Z^n.
pub(crate) fn intersect(a: &[Vec<Int>], b: &[Vec<Int>], n: usize) -> Vec<Vec<Int>> {
    let mut rows = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut row = r.clone();
        row.extend_from_slice(r);
        rows.push(row);
    }
    for r in b {
        let mut row = r.clone();
        row.extend(std::iter::repeat(0).take(n));
        rows.push(row);
    }
    let e = echelon(&rows, 2 * n);
    let tail: Vec<Vec<Int>> = e
        .into_iter()
        .filter(|r| r[..n].iter().all(|&x| x == 0))
        .map(|r| r[n..].to_vec())
        .collect();
    echelon(&tail, n)
}

/// Nonzero diagonal of the Smith normal form, each entry positive and
/// dividing the next.
pub(crate) fn smith_diagonal(rows: &[Vec<Int>], ncols: usize) -> Vec<Int> {
    let mut a: Vec<Vec<Int>> = rows.to_vec();
    let nrows = a.len();
    let mut diag = Vec::new();
    let mut t = 0;
    while t < nrows && t < ncols {
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        for row in a.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut changed = false;
            for i in (t + 1)..nrows {
                if a[i][t] != 0 {
                    let q = a[i][t].div_euclid(a[t][t]);
                    let pivot_row = a[t].clone();
                    axpy(&mut a[i], -q, &pivot_row);
                    if a[i][t] != 0 {
                        a.swap(t, i);
                        changed = true;
                    }
                }
            }
            for j in (t + 1)..ncols {
                if a[t][j] != 0 {
                    let q = a[t][j].div_euclid(a[t][t]);
                    for row in a.iter_mut() {
                        let v = row[t];
                        row[j] -= q * v;
                    }
                    if a[t][j] != 0 {
                        for row in a.iter_mut() {
                            row.swap(t, j);
                        }
                        changed = true;
                    }
                }
            }
            if changed {
                continue;
            }
            // divisibility fix-up: fold an offending row into row t
            let p = a[t][t];
            let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    axpy(&mut a[t], 1, &row);
                }
                None => break,
            }
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}
