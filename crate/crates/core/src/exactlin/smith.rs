use super::hermite::hermite_basis;
use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

/// Smith normal form `L·A·R = D` together with the unimodular transforms
/// and their inverses. `D` is diagonal with `d₁ | d₂ | …`, all `dᵢ ≥ 0`,
/// trailing zeros last.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub l: IntMatrix,
    pub r: IntMatrix,
    pub linv: IntMatrix,
    pub rinv: IntMatrix,
}

impl SmithDecomposition {
    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        let n = self.d.rows.min(self.d.cols);
        (0..n).filter(|&i| !self.d[(i, i)].is_zero()).count()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d[(i, i)].clone()).collect()
    }
}

/// Gcd-driven diagonalization (minimal-pivot strategy, Kannan–Bachem style
/// entry growth). Works on any rectangular matrix, including empty ones.
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    let (m, n) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut l = IntMatrix::identity(m);
    let mut linv = IntMatrix::identity(m);
    let mut r = IntMatrix::identity(n);
    let mut rinv = IntMatrix::identity(n);

    // Elementary operations keep L·A·R = D and the inverse accumulators in
    // sync: a row op E on D maps L -> E·L and Linv -> Linv·E⁻¹.
    macro_rules! row_swap {
        ($i:expr, $j:expr) => {{
            d.swap_rows($i, $j);
            l.swap_rows($i, $j);
            linv.swap_cols($i, $j);
        }};
    }
    macro_rules! col_swap {
        ($i:expr, $j:expr) => {{
            d.swap_cols($i, $j);
            r.swap_cols($i, $j);
            rinv.swap_rows($i, $j);
        }};
    }
    macro_rules! row_add {
        ($i:expr, $j:expr, $k:expr) => {{
            let k: BigInt = $k;
            d.row_add($i, $j, &k);
            l.row_add($i, $j, &k);
            linv.col_add($j, $i, &(-&k));
        }};
    }
    macro_rules! col_add {
        ($i:expr, $j:expr, $k:expr) => {{
            let k: BigInt = $k;
            d.col_add($i, $j, &k);
            r.col_add($i, $j, &k);
            rinv.row_add($j, $i, &(-&k));
        }};
    }

    let mut t = 0;
    while t < m.min(n) {
        // Locate the submatrix entry of least absolute value.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[(i, j)].is_zero() {
                    continue;
                }
                match pivot {
                    None => pivot = Some((i, j)),
                    Some((pi, pj)) => {
                        if d[(i, j)].abs() < d[(pi, pj)].abs() {
                            pivot = Some((i, j));
                        }
                    }
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        row_swap!(t, pi);
        col_swap!(t, pj);

        loop {
            // Clear column t below the pivot.
            let mut dirty = false;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(i, t)], &d[(t, t)]);
                if !q.is_zero() {
                    row_add!(i, t, -q);
                }
                if !d[(i, t)].is_zero() {
                    // Remainder is smaller than the pivot: promote it.
                    row_swap!(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear row t right of the pivot.
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&d[(t, j)], &d[(t, t)]);
                if !q.is_zero() {
                    col_add!(j, t, -q);
                }
                if !d[(t, j)].is_zero() {
                    col_swap!(t, j);
                    dirty = true;
                    break;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide every remaining entry, otherwise fold the
            // offending row in and restart with a smaller pivot.
            let mut fixed = true;
            'scan: for i in t + 1..m {
                for j in t + 1..n {
                    if !(&d[(i, j)] % &d[(t, t)]).is_zero() {
                        row_add!(t, i, BigInt::from(1));
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            l.negate_row(t);
            linv.negate_col(t);
        }
        t += 1;
    }

    SmithDecomposition { d, l, r, linv, rinv }
}

/// Rounded division: quotient minimizing |a - q b|.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    // Floor division leaves r with b's sign and |r| < |b|; stepping the
    // quotient up replaces r by r - b, which shrinks |r| in both sign cases.
    if r.abs() * 2u32 > b.abs() {
        q + 1
    } else {
        q
    }
}

/// Hermite-reduced ℤ-basis of `{x : A·x = 0}`. Empty when the kernel is
/// trivial; the kernel of a 0×n matrix is all of ℤⁿ.
pub fn kernel_basis(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    if a.rows == 0 {
        return hermite_basis(
            (0..a.cols)
                .map(|j| IntMatrix::identity(a.cols).row_vec(j))
                .collect(),
            a.cols,
        );
    }
    let snf = smith_normal_form(a);
    let s = snf.rank();
    let gens: Vec<Vec<BigInt>> = (s..a.cols).map(|j| snf.r.col_vec(j)).collect();
    hermite_basis(gens, a.cols)
}

/// Some `x` with `A·x = b`, or `None` when the system is unsolvable.
pub fn solve_particular(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    assert_eq!(a.rows, b.len(), "rhs length mismatch");
    let snf = smith_normal_form(a);
    let c = snf.l.mul_vec(b);
    let mut y = vec![BigInt::zero(); a.cols];
    let diag = snf.diagonal();
    for i in 0..a.rows {
        let di = diag.get(i).cloned().unwrap_or_else(BigInt::zero);
        if di.is_zero() {
            if !c[i].is_zero() {
                return None;
            }
        } else {
            let (q, r) = num_integer::Integer::div_rem(&c[i], &di);
            if !r.is_zero() {
                return None;
            }
            y[i] = q;
        }
    }
    Some(snf.r.mul_vec(&y))
}
