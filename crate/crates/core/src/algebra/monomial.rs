use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial. The length equals the number of ring
/// variables; the total degree is cached.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            degree: 0,
        }
    }

    pub fn new(exps: &[u16]) -> Self {
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn variable(nvars: usize, index: usize) -> Self {
        let mut m = Monomial::one(nvars);
        m.exps[index] = 1;
        m.degree = 1;
        m
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
            degree: self.degree + other.degree,
        }
    }

    /// `true` iff `self` divides `other`.
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(a, b)| a - b)
                .collect(),
            degree: other.degree - self.degree,
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<[u16; 12]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            degree: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Monomial with one more variable slot inserted at position 0.
    pub(crate) fn prepend_variable(&self) -> Monomial {
        let mut exps = SmallVec::with_capacity(self.exps.len() + 1);
        exps.push(0);
        exps.extend_from_slice(&self.exps);
        Monomial {
            exps,
            degree: self.degree,
        }
    }

    pub(crate) fn drop_first_variable(&self) -> Monomial {
        Monomial::new(&self.exps[1..])
    }

    pub(crate) fn set_exponent(&mut self, index: usize, e: u16) {
        self.degree = self.degree - self.exps[index] as u32 + e as u32;
        self.exps[index] = e;
    }

    /// All monomials of total degree `degree` in `nvars` variables, in
    /// lexicographically descending order of exponent vectors.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        fn rec(pos: usize, left: u32, cur: &mut Vec<u16>, out: &mut Vec<Monomial>) {
            if pos + 1 == cur.len() {
                cur[pos] = left as u16;
                out.push(Monomial::new(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[pos] = e as u16;
                rec(pos + 1, left - e, cur, out);
            }
        }
        let mut out = Vec::new();
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, degree, &mut vec![0; nvars], &mut out);
        out
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Monomial order tag.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic; `x_0 > x_1 > ...`.
    Grevlex,
    /// Pure lexicographic; `x_0 > x_1 > ...`.
    Lex,
    /// Block order eliminating the first `k` variables: grevlex on the
    /// first block, ties broken by grevlex on the rest.
    Elimination(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a
                .degree
                .cmp(&b.degree)
                .then_with(|| revlex(&a.exps, &b.exps)),
            MonomialOrder::Elimination(k) => {
                let k = k.min(a.exps.len());
                grevlex_slice(&a.exps[..k], &b.exps[..k])
                    .then_with(|| grevlex_slice(&a.exps[k..], &b.exps[k..]))
            }
        }
    }
}

#[inline]
fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

fn grevlex_slice(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mono(n: usize) -> impl Strategy<Value = Monomial> {
        prop::collection::vec(0u16..5, n).prop_map(|v| Monomial::new(&v))
    }

    const ORDERS: [MonomialOrder; 4] = [
        MonomialOrder::Grevlex,
        MonomialOrder::Lex,
        MonomialOrder::Elimination(1),
        MonomialOrder::Elimination(2),
    ];

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz > yz > z^2 in k[x,y,z]
        let seq = [
            [2, 0, 0],
            [1, 1, 0],
            [0, 2, 0],
            [1, 0, 1],
            [0, 1, 1],
            [0, 0, 2],
        ];
        for w in seq.windows(2) {
            assert_eq!(
                o.compare(&Monomial::new(&w[0]), &Monomial::new(&w[1])),
                Ordering::Greater
            );
        }
        // degree first
        assert_eq!(
            o.compare(&Monomial::new(&[0, 0, 2]), &Monomial::new(&[1, 0, 0])),
            Ordering::Greater
        );
    }

    #[test]
    fn elimination_kills_first_block() {
        let o = MonomialOrder::Elimination(1);
        // t beats any power of the other variables
        assert_eq!(
            o.compare(&Monomial::new(&[1, 0, 0]), &Monomial::new(&[0, 9, 9])),
            Ordering::Greater
        );
    }

    #[test]
    fn enumerate_degree() {
        assert_eq!(Monomial::all_of_degree(4, 2).len(), 10);
        assert_eq!(Monomial::all_of_degree(1, 3), vec![Monomial::new(&[3])]);
        assert_eq!(Monomial::all_of_degree(3, 0), vec![Monomial::one(3)]);
    }

    proptest! {
        #[test]
        fn order_axioms(a in mono(4), b in mono(4), c in mono(4), m in mono(4)) {
            for o in ORDERS {
                // total and antisymmetric
                prop_assert_eq!(o.compare(&a, &b), o.compare(&b, &a).reverse());
                prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
                // transitive
                if o.compare(&a, &b) == Ordering::Less && o.compare(&b, &c) == Ordering::Less {
                    prop_assert_eq!(o.compare(&a, &c), Ordering::Less);
                }
                // multiplicative
                prop_assert_eq!(o.compare(&a.mul(&m), &b.mul(&m)), o.compare(&a, &b));
                // 1 is minimal
                prop_assert_ne!(o.compare(&Monomial::one(4), &a), Ordering::Greater);
            }
        }

        #[test]
        fn lcm_and_division(a in mono(5), b in mono(5)) {
            let l = a.lcm(&b);
            prop_assert!(a.divides(&l) && b.divides(&l));
            prop_assert_eq!(a.quotient_of(&l).mul(&a), l.clone());
            prop_assert_eq!(a.is_coprime(&b), l == a.mul(&b));
        }
    }
}
