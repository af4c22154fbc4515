use std::cmp::Ordering;

/// Term order on exponent vectors. All three are total well-orders
/// compatible with multiplication, with 1 as the minimum.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TermOrder {
    /// Lexicographic, first variable strongest.
    Lex,
    /// Degree-reverse-lexicographic (the default everywhere).
    DegRevLex,
    /// Elimination block order: the first `k` variables are compared by
    /// degrevlex first, ties broken by degrevlex on the rest. A basis
    /// element whose leading term avoids the first block lies entirely in
    /// the remaining variables.
    Block(usize),
}

impl TermOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match *self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::DegRevLex => degrevlex(a, b),
            TermOrder::Block(k) => {
                degrevlex(&a[..k], &b[..k]).then_with(|| degrevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn degrevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {
            for i in (0..a.len()).rev() {
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    // Smaller exponent in the last differing position wins.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrevlex_basics() {
        let o = TermOrder::DegRevLex;
        // x > y > z for single variables.
        assert_eq!(o.cmp(&[1, 0, 0], &[0, 1, 0]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 1, 0], &[0, 0, 1]), Ordering::Greater);
        // xz > yz, x^2 > xy.
        assert_eq!(o.cmp(&[1, 0, 1], &[0, 1, 1]), Ordering::Greater);
        assert_eq!(o.cmp(&[2, 0, 0], &[1, 1, 0]), Ordering::Greater);
        // Degree dominates.
        assert_eq!(o.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
    }

    #[test]
    fn block_order_eliminates_first_block() {
        let o = TermOrder::Block(1);
        // Any power of the first variable beats anything without it.
        assert_eq!(o.cmp(&[1, 0], &[0, 9]), Ordering::Greater);
        assert_eq!(o.cmp(&[0, 3], &[0, 2]), Ordering::Greater);
    }

    #[test]
    fn one_is_minimum() {
        for o in [TermOrder::Lex, TermOrder::DegRevLex, TermOrder::Block(1)] {
            assert_eq!(o.cmp(&[0, 0], &[1, 2]), Ordering::Less);
        }
    }
}
