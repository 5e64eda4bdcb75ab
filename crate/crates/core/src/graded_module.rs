//! Degreewise model of the cokernel `L = (⊕ S/I_i) / R` of the diagonal
//! embedding `R = S/(I_1 ∩ ... ∩ I_g) → ⊕ S/I_i`.
//!
//! Each graded piece `N_s = ⊕ (S/I_i)_s` has coordinates indexed by pairs
//! (component, standard monomial). The image of `R_s` is kept in reduced
//! row echelon form; the non-pivot coordinates form the chosen basis of
//! `L_s`, and projecting a vector of `N_s` to `L_s` means eliminating its
//! pivot coordinates. Variables act by matrices `L_s → L_{s+1}`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::{Monomial, Polynomial, PrimeField, RingContext, Scalar};
use crate::error::{Error, Result};
use crate::groebner::{normal_form, standard_monomials_of_degree};
use crate::ideal::{hilbert_series, ideal_intersect, HilbertSeries, Ideal};
use crate::linalg::{Matrix, Subspace};

#[derive(Debug, Clone)]
struct DegreePiece {
    /// Coordinates of `N_s`: (component index, standard monomial).
    coords: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
    /// Image of `R_s` inside `N_s`.
    image: Subspace,
    /// Coordinates of `N_s` whose unit vectors form the basis of `L_s`.
    basis: Vec<usize>,
    /// Multiplication by each variable, `L_s → L_{s+1}`.
    variable_maps: Vec<Matrix>,
}

#[derive(Debug, Clone)]
pub struct TorsionModuleModel {
    ring: RingContext,
    ideals: Vec<Ideal>,
    core: Ideal,
    series: HilbertSeries,
    pieces: Vec<DegreePiece>,
    lambda: BigInt,
}

impl TorsionModuleModel {
    pub fn ring(&self) -> &RingContext {
        &self.ring
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    /// `I_1 ∩ ... ∩ I_g`.
    pub fn core(&self) -> &Ideal {
        &self.core
    }

    /// `HS_L = Σ HS(S/I_i) - HS(S/∩I_i)`, a polynomial in `t`.
    pub fn series(&self) -> &HilbertSeries {
        &self.series
    }

    pub fn lambda(&self) -> &BigInt {
        &self.lambda
    }

    /// Largest `s` with `L_s ≠ 0`; `None` when `L = 0`.
    pub fn top_degree(&self) -> Option<u32> {
        self.pieces.len().checked_sub(1).map(|s| s as u32)
    }

    pub fn dim(&self, s: u32) -> usize {
        self.pieces.get(s as usize).map_or(0, |p| p.basis.len())
    }

    pub fn dims(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// Basis of `L_s` as (component, standard monomial) labels.
    pub fn basis_labels(&self, s: u32) -> Vec<(usize, Monomial)> {
        self.pieces
            .get(s as usize)
            .map(|p| p.basis.iter().map(|&c| p.coords[c].clone()).collect())
            .unwrap_or_default()
    }

    /// Matrix of multiplication by variable `v` from `L_s` to `L_{s+1}`.
    pub fn variable_map(&self, v: usize, s: u32) -> Matrix {
        match self.pieces.get(s as usize) {
            Some(p) => p.variable_maps[v].clone(),
            None => Matrix::zeros(0, 0),
        }
    }

    fn field(&self) -> &PrimeField {
        self.ring.field()
    }

    /// Action of a monomial, `L_s → L_{s + deg m}`, composed from variable
    /// maps.
    pub fn monomial_action(&self, m: &Monomial, s: u32) -> Matrix {
        let mut acc = Matrix::identity(self.dim(s));
        let mut cur = s;
        for (v, &e) in m.exponents().iter().enumerate() {
            for _ in 0..e {
                if cur as usize >= self.pieces.len() {
                    return Matrix::zeros(0, self.dim(s));
                }
                acc = self.variable_map(v, cur).mul(&acc, self.field());
                cur += 1;
            }
        }
        acc
    }

    /// Action of a homogeneous polynomial, `L_s → L_{s + deg f}`.
    pub fn polynomial_action(&self, f: &Polynomial, s: u32) -> Result<Matrix> {
        if f.ring() != &self.ring {
            return Err(Error::ContextMismatch);
        }
        if !f.is_homogeneous() {
            return Err(Error::Inhomogeneous(f.to_string()));
        }
        let target = s + f.degree().unwrap_or(0);
        let mut acc = Matrix::zeros(self.dim(target), self.dim(s));
        for (m, c) in f.terms() {
            acc = acc.add(
                &self.monomial_action(m, s).scale(*c, self.field()),
                self.field(),
            );
        }
        Ok(acc)
    }

    /// Coordinates in the basis of `L_s` of the class of `Σ_i f_i` where
    /// `f_i ∈ S/I_i` are given as polynomials of degree `s`.
    pub fn project(&self, s: u32, parts: &[(usize, Polynomial)]) -> Result<Vec<Scalar>> {
        let Some(piece) = self.pieces.get(s as usize) else {
            return Ok(Vec::new());
        };
        let v = vector_in_piece(piece, &self.ideals, parts, self.field())?;
        Ok(piece.basis.iter().map(|&c| v[c]).collect())
    }
}

fn vector_in_piece(
    piece: &DegreePiece,
    ideals: &[Ideal],
    parts: &[(usize, Polynomial)],
    field: &PrimeField,
) -> Result<Vec<Scalar>> {
    let mut v = vec![0; piece.coords.len()];
    for (i, f) in parts {
        let nf = normal_form(f, ideals[*i].groebner_basis())?;
        for (m, c) in nf.terms() {
            let Some(&k) = piece.index.get(&(*i, m.clone())) else {
                return Err(Error::Internal(format!(
                    "normal form term {m:?} outside degree piece"
                )));
            };
            v[k] = field.add(v[k], *c);
        }
    }
    piece.image.reduce(&mut v, field);
    Ok(v)
}

/// Builds the graded model of `L` for `R = S/(I_1 ∩ ... ∩ I_g)`.
pub fn build_l(ideals: &[Ideal]) -> Result<TorsionModuleModel> {
    let first = ideals
        .first()
        .ok_or_else(|| Error::InvalidArgument("at least one ideal is required".into()))?;
    let ring = first.ring().clone();
    if ideals.iter().any(|i| i.ring() != &ring) {
        return Err(Error::ContextMismatch);
    }
    let mut core = first.clone();
    for i in &ideals[1..] {
        core = ideal_intersect(&core, i)?;
    }
    build_l_with_core(ideals, core)
}

/// As [`build_l`], with the intersection already computed.
pub fn build_l_with_core(ideals: &[Ideal], core: Ideal) -> Result<TorsionModuleModel> {
    let ring = core.ring().clone();
    let field = *ring.field();
    let mut series = HilbertSeries::zero();
    for i in ideals {
        series = series.add(&hilbert_series(i));
    }
    series = series.sub(&hilbert_series(&core));
    if !series.is_polynomial() {
        return Err(Error::InfiniteTorsion {
            exponent: series.denominator_exponent(),
        });
    }
    let lambda = series.numerator_at_one();
    let top = series.numerator_degree();

    let mut pieces: Vec<DegreePiece> = Vec::new();
    if let Some(top) = top {
        for s in 0..=top as u32 {
            let mut coords = Vec::new();
            for (i, ideal) in ideals.iter().enumerate() {
                for m in standard_monomials_of_degree(ideal.groebner_basis(), s) {
                    coords.push((i, m));
                }
            }
            let index: HashMap<(usize, Monomial), usize> = coords
                .iter()
                .cloned()
                .enumerate()
                .map(|(k, c)| (c, k))
                .collect();
            let r_basis = standard_monomials_of_degree(core.groebner_basis(), s);
            let mut images = Vec::with_capacity(r_basis.len());
            for m in &r_basis {
                let mut v = vec![0; coords.len()];
                for (i, ideal) in ideals.iter().enumerate() {
                    let nf = normal_form(
                        &Polynomial::term(&ring, m.clone(), 1),
                        ideal.groebner_basis(),
                    )?;
                    for (t, c) in nf.terms() {
                        v[index[&(i, t.clone())]] = *c;
                    }
                }
                images.push(v);
            }
            let image = Subspace::spanned_by(coords.len(), images, &field);
            if image.dim() != r_basis.len() {
                return Err(Error::Internal(format!(
                    "diagonal map not injective in degree {s}: rank {} < {}",
                    image.dim(),
                    r_basis.len()
                )));
            }
            let basis = image.free_columns();
            let expected = series.coefficient(s as usize);
            if expected.to_usize() != Some(basis.len()) {
                return Err(Error::Internal(format!(
                    "dim L_{s} = {} disagrees with Hilbert series coefficient {expected}",
                    basis.len()
                )));
            }
            pieces.push(DegreePiece {
                coords,
                index,
                image,
                basis,
                variable_maps: Vec::new(),
            });
        }
    }

    // variable maps L_s -> L_{s+1}
    let nvars = ring.nvars();
    for s in 0..pieces.len() {
        let mut maps = Vec::with_capacity(nvars);
        for v in 0..nvars {
            let src = &pieces[s];
            let rows = pieces.get(s + 1).map_or(0, |p| p.basis.len());
            let mut m = Matrix::zeros(rows, src.basis.len());
            if let Some(dst) = pieces.get(s + 1) {
                let x = Monomial::variable(nvars, v);
                for (col, &c) in src.basis.iter().enumerate() {
                    let (i, mono) = &src.coords[c];
                    let f = Polynomial::term(&ring, mono.mul(&x), 1);
                    let w = vector_in_piece(dst, ideals, &[(*i, f)], &field)?;
                    for (row, &d) in dst.basis.iter().enumerate() {
                        m.set(row, col, w[d]);
                    }
                }
            }
            maps.push(m);
        }
        pieces[s].variable_maps = maps;
    }

    Ok(TorsionModuleModel {
        ring,
        ideals: ideals.to_vec(),
        core,
        series,
        pieces,
        lambda,
    })
}

/// `λ(L)`.
pub fn lambda_l(model: &TorsionModuleModel) -> BigInt {
    model.lambda.clone()
}

/// `true` iff every generator of `j` acts as zero on every graded piece.
pub fn annihilates(j: &Ideal, model: &TorsionModuleModel) -> Result<bool> {
    let Some(top) = model.top_degree() else {
        return Ok(true);
    };
    for f in j.generators() {
        for s in 0..=top {
            if !model.polynomial_action(f, s)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `λ(L / J^n L)`, spanning `J^n L` degreewise inside the model.
pub fn jn_colength(model: &TorsionModuleModel, j: &Ideal, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Ok(BigInt::zero());
    }
    let Some(top) = model.top_degree() else {
        return Ok(BigInt::zero());
    };
    let field = *model.field();
    let top = top as usize;
    // actions[g][s]: generator g on L_s
    let mut actions: Vec<(usize, Vec<Matrix>)> = Vec::new();
    for f in j.generators() {
        let e = f.degree().unwrap_or(0) as usize;
        if e == 0 {
            return Err(Error::InvalidArgument(
                "parameters must have positive degree".into(),
            ));
        }
        let mats = (0..=top)
            .map(|s| model.polynomial_action(f, s as u32))
            .collect::<Result<Vec<_>>>()?;
        actions.push((e, mats));
    }
    let mut current: Vec<Subspace> = (0..=top)
        .map(|s| Subspace::full(model.dim(s as u32)))
        .collect();
    for _ in 0..n {
        let mut next: Vec<Vec<Vec<Scalar>>> = vec![Vec::new(); top + 1];
        for (e, mats) in &actions {
            for s in 0..=top {
                if s + e > top {
                    continue;
                }
                for w in current[s].basis() {
                    next[s + e].push(mats[s].apply(w, &field));
                }
            }
        }
        current = next
            .into_iter()
            .enumerate()
            .map(|(t, vs)| Subspace::spanned_by(model.dim(t as u32), vs, &field))
            .collect();
    }
    let spanned: usize = current.iter().map(Subspace::dim).sum();
    Ok(&model.lambda - BigInt::from(spanned))
}
