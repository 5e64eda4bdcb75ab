//! Reduced Gröbner bases by Buchberger's algorithm, multivariate division,
//! and enumeration of standard monomials.
//!
//! Pairs are processed with the normal selection strategy (smallest lcm
//! first, ties broken by pair index) and pruned by the coprime-leading-term
//! criterion and the chain criterion. Everything is deterministic for a fixed input.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use crate::algebra::{Monomial, MonomialOrder, Polynomial, RingContext, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ring: RingContext,
    /// Monic, reduced, sorted ascending by leading monomial.
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| {
                g.leading_monomial()
                    .expect("basis elements are nonzero")
                    .clone()
            })
            .collect()
    }

    /// `true` iff the basis contains a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|m| m.is_one()))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(normal_form(f, self)?.is_zero())
    }

    /// `true` iff `m` lies in the initial ideal.
    pub fn is_leading_multiple(&self, m: &Monomial) -> bool {
        self.elements
            .iter()
            .any(|g| g.leading_monomial().is_some_and(|l| l.divides(m)))
    }
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`
/// under the ring's monomial order. Empty input (or only zeros) yields the
/// empty basis of the zero ideal.
pub fn buchberger(gens: &[Polynomial], ring: &RingContext) -> Result<GroebnerBasis> {
    if gens.iter().any(|g| g.ring() != ring) {
        return Err(Error::ContextMismatch);
    }
    let mut state = PairState {
        order: ring.order(),
        basis: Vec::new(),
        pending: BinaryHeap::new(),
        open: HashSet::new(),
    };
    for g in gens {
        let r = reduce_terms(g, &state.basis);
        if !r.is_zero() {
            state.push(r.monic());
        }
    }

    while let Some(Pair { lcm, i, j, .. }) = state.pending.pop() {
        state.open.remove(&(i, j));
        let (fi, fj) = (&state.basis[i], &state.basis[j]);
        if lm(fi).is_coprime(lm(fj)) || state.chain_criterion(i, j, &lcm) {
            continue;
        }
        let s = s_polynomial(fi, fj);
        let r = reduce_terms(&s, &state.basis);
        if !r.is_zero() {
            let r = r.monic();
            let unit = lm(&r).is_one();
            state.push(r);
            if unit {
                break;
            }
        }
    }

    Ok(GroebnerBasis {
        ring: ring.clone(),
        elements: interreduce(state.basis),
    })
}

/// Critical pair; the heap pops the smallest lcm first, ties by `(j, i)`.
struct Pair {
    lcm: Monomial,
    i: usize,
    j: usize,
    order: MonomialOrder,
}

impl PartialEq for Pair {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Pair {}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order
            .compare(&other.lcm, &self.lcm)
            .then_with(|| (other.j, other.i).cmp(&(self.j, self.i)))
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

struct PairState {
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    pending: BinaryHeap<Pair>,
    open: HashSet<(usize, usize)>,
}

impl PairState {
    fn push(&mut self, f: Polynomial) {
        let j = self.basis.len();
        for i in 0..j {
            self.pending.push(Pair {
                lcm: lm(&self.basis[i]).lcm(lm(&f)),
                i,
                j,
                order: self.order,
            });
            self.open.insert((i, j));
        }
        self.basis.push(f);
    }

    fn is_open(&self, a: usize, b: usize) -> bool {
        self.open.contains(&(a.min(b), a.max(b)))
    }

    /// Chain criterion: the pair `(i, j)` is redundant when some third
    /// element's leading monomial divides their lcm and both pairs linking
    /// it to `i` and `j` have already been treated.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i && k != j && lm(g).divides(lcm) && !self.is_open(i, k) && !self.is_open(j, k)
        })
    }
}

#[inline]
fn lm(f: &Polynomial) -> &Monomial {
    f.leading_monomial().expect("nonzero polynomial")
}

/// S-polynomial of two monic polynomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let f = f.monic();
    let g = g.monic();
    let l = lm(&f).lcm(lm(&g));
    let uf = lm(&f).quotient_of(&l);
    let ug = lm(&g).quotient_of(&l);
    let minus_one = f.ring().field().neg(1);
    let lhs = f.mul_term(&uf, 1);
    lhs.combine(&g, minus_one, Some(&ug))
}

/// Monomial keyed by the ring order, largest first.
#[derive(PartialEq, Eq)]
struct Key {
    m: Monomial,
    order: MonomialOrder,
}

impl Ord for Key {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order.compare(&other.m, &self.m)
    }
}

impl PartialOrd for Key {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Full reduction of `f` by a list of monic polynomials.
fn reduce_terms(f: &Polynomial, divisors: &[Polynomial]) -> Polynomial {
    let ring = f.ring();
    let field = ring.field();
    let order = ring.order();
    let leads: Vec<&Monomial> = divisors.iter().map(lm).collect();
    let mut work: BTreeMap<Key, Scalar> = f
        .terms()
        .iter()
        .map(|(m, c)| {
            (
                Key {
                    m: m.clone(),
                    order,
                },
                *c,
            )
        })
        .collect();
    let mut remainder: Vec<(Monomial, Scalar)> = Vec::new();
    while let Some((key, c)) = work.pop_first() {
        match leads.iter().position(|l| l.divides(&key.m)) {
            Some(k) => {
                let g = &divisors[k];
                let shift = leads[k].quotient_of(&key.m);
                let c = field.neg(c);
                for (t, a) in &g.terms()[1..] {
                    let entry = work
                        .entry(Key {
                            m: t.mul(&shift),
                            order,
                        })
                        .or_insert(0);
                    *entry = field.add(*entry, field.mul(*a, c));
                    if *entry == 0 {
                        work.remove(&Key {
                            m: t.mul(&shift),
                            order,
                        });
                    }
                }
            }
            None => remainder.push((key.m, c)),
        }
    }
    Polynomial::from_sorted_terms(ring, remainder)
}

/// Minimalizes and tail-reduces a Gröbner basis of monic polynomials.
fn interreduce(basis: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis
            .iter()
            .enumerate()
            .any(|(l, h)| l != k && lm(h).divides(lm(g)) && (lm(h) != lm(g) || l < k));
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|k| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(l, _)| *l != k)
                .map(|(_, h)| h.clone())
                .collect();
            reduce_terms(&minimal[k], &others).monic()
        })
        .collect();
    if let Some(first) = reduced.first() {
        let order = first.ring().order();
        reduced.sort_by(|a, b| order.compare(lm(a), lm(b)));
    }
    reduced
}

/// Remainder of `f` under multivariate division by `basis`. Zero iff
/// `f` lies in the ideal.
pub fn normal_form(f: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    if f.ring() != &basis.ring {
        return Err(Error::ContextMismatch);
    }
    Ok(reduce_terms(f, &basis.elements))
}

/// Standard monomials of degree `degree`, in descending lexicographic
/// order of exponent vectors.
pub fn standard_monomials_of_degree(basis: &GroebnerBasis, degree: u32) -> Vec<Monomial> {
    let lms = basis.leading_monomials();
    Monomial::all_of_degree(basis.ring.nvars(), degree)
        .into_iter()
        .filter(|m| !lms.iter().any(|l| l.divides(m)))
        .collect()
}

/// For each degree `0..=max_degree`, the monomials not divisible by any
/// leading monomial of `basis`.
pub fn standard_monomials_up_to(basis: &GroebnerBasis, max_degree: u32) -> Vec<Vec<Monomial>> {
    (0..=max_degree)
        .map(|s| standard_monomials_of_degree(basis, s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::poly_parse;

    fn ring() -> RingContext {
        RingContext::grevlex(&["x", "y", "z", "w"]).unwrap()
    }

    fn polys(r: &RingContext, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| poly_parse(s, r).unwrap()).collect()
    }

    #[test]
    fn already_reduced() {
        let r = ring();
        let gb = buchberger(&polys(&r, &["x", "y"]), &r).unwrap();
        assert_eq!(gb.elements(), polys(&r, &["y", "x"]).as_slice());
        let mono = polys(&r, &["x*z", "x*w", "y*z", "y*w"]);
        let gb = buchberger(&mono, &r).unwrap();
        assert_eq!(gb.len(), 4);
        for g in &mono {
            assert!(gb.elements().contains(g));
        }
    }

    #[test]
    fn single_s_pair() {
        // {x^2 - y, x}: x^2 - y reduces by x to -y
        let r = RingContext::grevlex(&["x", "y"]).unwrap();
        let gb = buchberger(&polys(&r, &["x^2 - y", "x"]), &r).unwrap();
        let mut got: Vec<String> = gb.elements().iter().map(|g| g.to_string()).collect();
        got.sort();
        assert_eq!(got, vec!["x", "y"]);
    }

    #[test]
    fn empty_and_unit() {
        let r = ring();
        assert!(buchberger(&[], &r).unwrap().is_empty());
        assert!(buchberger(&[Polynomial::zero(&r)], &r).unwrap().is_empty());
        let gb = buchberger(&polys(&r, &["x", "x + 1"]), &r).unwrap();
        assert!(gb.is_unit());
        assert_eq!(gb.len(), 1);
    }

    #[test]
    fn normal_forms() {
        let r = ring();
        let gb = buchberger(&polys(&r, &["x", "y"]), &r).unwrap();
        assert!(normal_form(&poly_parse("x", &r).unwrap(), &gb)
            .unwrap()
            .is_zero());
        assert_eq!(
            normal_form(&poly_parse("z", &r).unwrap(), &gb).unwrap(),
            poly_parse("z", &r).unwrap()
        );
        let gb = buchberger(&polys(&r, &["x+z", "y+w", "x*z", "x*w", "y*z", "y*w"]), &r).unwrap();
        assert!(normal_form(&poly_parse("x*z", &r).unwrap(), &gb)
            .unwrap()
            .is_zero());
        let other = RingContext::grevlex(&["x"]).unwrap();
        assert_eq!(
            normal_form(&Polynomial::variable(&other, 0), &gb),
            Err(Error::ContextMismatch)
        );
    }

    #[test]
    fn standard_monomials() {
        let r = ring();
        let gb = buchberger(&polys(&r, &["x", "y"]), &r).unwrap();
        let sm = standard_monomials_up_to(&gb, 1);
        assert_eq!(sm[0], vec![Monomial::one(4)]);
        assert_eq!(
            sm[1],
            vec![Monomial::new(&[0, 0, 1, 0]), Monomial::new(&[0, 0, 0, 1])]
        );

        let gb = buchberger(&polys(&r, &["x*z", "x*w", "y*z", "y*w"]), &r).unwrap();
        let deg2 = standard_monomials_of_degree(&gb, 2);
        let mut expect: Vec<Monomial> = [
            [2, 0, 0, 0],
            [1, 1, 0, 0],
            [0, 2, 0, 0],
            [0, 0, 2, 0],
            [0, 0, 1, 1],
            [0, 0, 0, 2],
        ]
        .iter()
        .map(|e| Monomial::new(e))
        .collect();
        expect.sort_by(|a, b| b.exponents().cmp(a.exponents()));
        assert_eq!(deg2, expect);

        let unit = buchberger(&polys(&r, &["1"]), &r).unwrap();
        assert!(standard_monomials_up_to(&unit, 4)
            .iter()
            .all(|d| d.is_empty()));
    }

    #[test]
    fn reduced_and_sorted() {
        let r = RingContext::new(&["x", "y", "z"], 101, MonomialOrder::Lex).unwrap();
        let gb = buchberger(&polys(&r, &["x^2 + y*z", "x*y - z^2", "y^3 - x*z"]), &r).unwrap();
        let lms = gb.leading_monomials();
        for (k, g) in gb.elements().iter().enumerate() {
            assert_eq!(g.leading_coefficient(), Some(1));
            for (l, m) in lms.iter().enumerate() {
                if l != k {
                    assert!(g.terms().iter().all(|(t, _)| !m.divides(t)));
                }
            }
        }
        for w in lms.windows(2) {
            assert_eq!(r.order().compare(&w[0], &w[1]), Ordering::Less);
        }
        for a in gb.elements() {
            for b in gb.elements() {
                if a != b {
                    assert!(normal_form(&s_polynomial(a, b), &gb).unwrap().is_zero());
                }
            }
        }
    }
}
