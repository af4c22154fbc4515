use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Canonical row Hermite basis of the lattice spanned by `gens` in ℤ^dim.
///
/// The result is in row echelon form with positive pivots and the entries
/// above each pivot reduced into `[0, pivot)`. Two generating sets span the
/// same lattice iff their Hermite bases are equal, so this doubles as the
/// canonical form for lattice comparisons.
pub fn hermite_basis(gens: Vec<Vec<BigInt>>, dim: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = gens
        .into_iter()
        .inspect(|v| assert_eq!(v.len(), dim, "vector length mismatch"))
        .filter(|v| !v.iter().all(|x| x.is_zero()))
        .collect();
    let mut rank = 0;
    for col in 0..dim {
        // Euclidean elimination in this column among rows rank..
        loop {
            let mut pivot: Option<usize> = None;
            for (i, row) in rows.iter().enumerate().skip(rank) {
                if row[col].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some(i),
                    Some(p) => {
                        if rows[i][col].abs() < rows[p][col].abs() {
                            pivot = Some(i);
                        }
                    }
                }
                let _ = i;
            }
            let Some(p) = pivot else { break };
            rows.swap(rank, p);
            let mut done = true;
            for i in rank + 1..rows.len() {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[rank][col]);
                if !q.is_zero() {
                    for c in col..dim {
                        let v = &rows[rank][c] * &q;
                        rows[i][c] -= v;
                    }
                }
                if !rows[i][col].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if rank < rows.len() && !rows[rank][col].is_zero() {
            if rows[rank][col].is_negative() {
                for c in col..dim {
                    let v = -&rows[rank][c];
                    rows[rank][c] = v;
                }
            }
            // Reduce the entries above the pivot into [0, pivot).
            for i in 0..rank {
                let q = rows[i][col].div_floor(&rows[rank][col]);
                if !q.is_zero() {
                    for c in col..dim {
                        let v = &rows[rank][c] * &q;
                        rows[i][c] -= v;
                    }
                }
            }
            rank += 1;
        }
        // Drop rows that became zero.
        rows.retain(|r| !r.iter().all(|x| x.is_zero()));
    }
    rows.truncate(rank);
    rows
}
