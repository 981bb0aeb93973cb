//! The incidence algebra `I(X, K)` of a finite poset over an exact field.
//!
//! Elements are sparse maps from comparable pairs `(x, y)`, `x <= y`, to
//! scalars. Linear maps on the algebra are dense matrices over the ordered
//! basis `{e_xy : x <= y}` sorted by `(x, y)`; column `j` holds the image of
//! the `j`-th basis element.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{rank, Subspace};
use crate::poset::{MapKind, Poset, PosetMap};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceElement {
    field: Field,
    coeffs: BTreeMap<(usize, usize), Scalar>,
}

#[derive(Debug, Serialize, Deserialize)]
struct ElementJson {
    pairs: Vec<(usize, usize, String)>,
}

impl IncidenceElement {
    pub fn zero(field: Field) -> IncidenceElement {
        IncidenceElement {
            field,
            coeffs: BTreeMap::new(),
        }
    }

    /// The standard basis element `e_xy`.
    pub fn unit(field: Field, x: usize, y: usize) -> IncidenceElement {
        let mut e = IncidenceElement::zero(field);
        e.set(x, y, field.one());
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn get(&self, x: usize, y: usize) -> Scalar {
        self.coeffs
            .get(&(x, y))
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn set(&mut self, x: usize, y: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "scalar from a different field");
        if value.is_zero() {
            self.coeffs.remove(&(x, y));
        } else {
            self.coeffs.insert((x, y), value);
        }
    }

    pub fn add_to(&mut self, x: usize, y: usize, value: &Scalar) {
        let v = &self.get(x, y) + value;
        self.set(x, y, v);
    }

    /// Nonzero coefficients in `(x, y)` order.
    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> IncidenceElement {
        let mut out = IncidenceElement::zero(self.field);
        for (&(x, y), v) in &self.coeffs {
            out.set(x, y, v * c);
        }
        out
    }

    pub fn neg(&self) -> IncidenceElement {
        self.scaled(&-self.field.one())
    }

    pub fn add(&self, other: &IncidenceElement) -> IncidenceElement {
        let mut out = self.clone();
        for (&(x, y), v) in &other.coeffs {
            out.add_to(x, y, v);
        }
        out
    }

    pub fn sub(&self, other: &IncidenceElement) -> IncidenceElement {
        self.add(&other.neg())
    }

    pub fn to_json(&self) -> String {
        let pairs = self
            .coeffs
            .iter()
            .map(|(&(x, y), v)| (x, y, v.to_fraction_string()))
            .collect();
        serde_json::to_string(&ElementJson { pairs }).expect("serializable")
    }

    pub fn from_json(field: Field, json: &str) -> Result<IncidenceElement> {
        let parsed: ElementJson = serde_json::from_str(json).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let mut out = IncidenceElement::zero(field);
        for (x, y, v) in parsed.pairs {
            out.add_to(x, y, &field.parse_scalar(&v)?);
        }
        Ok(out)
    }
}

impl fmt::Display for IncidenceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        for (i, (&(x, y), v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({v})e[{x},{y}]")?;
        }
        Ok(())
    }
}

/// A linear endomorphism of `I(X, K)` as a dense matrix in the standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    field: Field,
    columns: Vec<Vec<Scalar>>,
}

impl LinearMap {
    pub fn from_columns(field: Field, columns: Vec<Vec<Scalar>>) -> Result<LinearMap> {
        let dim = columns.len();
        if columns.iter().any(|c| c.len() != dim) {
            return Err(Error::Mismatch("matrix is not square".into()));
        }
        Ok(LinearMap { field, columns })
    }

    pub fn identity(field: Field, dim: usize) -> LinearMap {
        let columns = (0..dim)
            .map(|j| {
                (0..dim)
                    .map(|i| if i == j { field.one() } else { field.zero() })
                    .collect()
            })
            .collect();
        LinearMap { field, columns }
    }

    pub fn zero(field: Field, dim: usize) -> LinearMap {
        LinearMap {
            field,
            columns: vec![vec![field.zero(); dim]; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.columns.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn column(&self, j: usize) -> &[Scalar] {
        &self.columns[j]
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.columns[j][i]
    }

    pub fn apply_vector(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.dim()];
        for (j, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, m) in self.columns[j].iter().enumerate() {
                if !m.is_zero() {
                    out[i] = &out[i] + &(m * c);
                }
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            field: self.field,
            columns: other.columns.iter().map(|c| self.apply_vector(c)).collect(),
        }
    }

    pub fn add(&self, other: &LinearMap) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .zip(&other.columns)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        LinearMap {
            field: self.field,
            columns,
        }
    }

    pub fn neg(&self) -> LinearMap {
        let columns = self
            .columns
            .iter()
            .map(|c| c.iter().map(|x| -x).collect())
            .collect();
        LinearMap {
            field: self.field,
            columns,
        }
    }

    pub fn sub(&self, other: &LinearMap) -> LinearMap {
        self.add(&other.neg())
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().flatten().all(Scalar::is_zero)
    }

    pub fn is_invertible(&self) -> bool {
        rank(self.field, self.dim(), self.columns.iter().cloned()) == self.dim()
    }

    /// Whether every column is a standard basis vector and the columns are distinct.
    pub fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.dim()];
        self.columns.iter().all(|c| {
            let nz: Vec<usize> = (0..c.len()).filter(|&i| !c[i].is_zero()).collect();
            nz.len() == 1 && c[nz[0]].is_one() && !std::mem::replace(&mut seen[nz[0]], true)
        })
    }

    /// Smallest `k >= 1` with `self^k = id`, searched up to `limit`.
    pub fn order(&self, limit: usize) -> Option<usize> {
        let id = LinearMap::identity(self.field, self.dim());
        let mut power = self.clone();
        for k in 1..=limit {
            if power == id {
                return Some(k);
            }
            power = self.compose(&power);
        }
        None
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MapJson {
    columns: Vec<ElementJson>,
}

/// `I(X, K)` for a fixed poset and field.
#[derive(Debug, Clone)]
pub struct IncidenceAlgebra<'p> {
    poset: &'p Poset,
    field: Field,
    basis: Vec<(usize, usize)>,
    index: BTreeMap<(usize, usize), usize>,
}

impl<'p> IncidenceAlgebra<'p> {
    pub fn new(poset: &'p Poset, field: Field) -> IncidenceAlgebra<'p> {
        let n = poset.len();
        let basis: Vec<(usize, usize)> = (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .filter(|&(x, y)| poset.leq(x, y))
            .collect();
        let index = basis.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        IncidenceAlgebra {
            poset,
            field,
            basis,
            index,
        }
    }

    pub fn poset(&self) -> &'p Poset {
        self.poset
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All `(x, y)` with `x <= y`, sorted.
    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    pub fn basis_index(&self, x: usize, y: usize) -> Option<usize> {
        self.index.get(&(x, y)).copied()
    }

    pub fn basis_element(&self, i: usize) -> IncidenceElement {
        let (x, y) = self.basis[i];
        IncidenceElement::unit(self.field, x, y)
    }

    pub fn unit(&self, x: usize, y: usize) -> IncidenceElement {
        debug_assert!(self.poset.leq(x, y));
        IncidenceElement::unit(self.field, x, y)
    }

    /// The identity `δ`.
    pub fn delta(&self) -> IncidenceElement {
        let mut d = IncidenceElement::zero(self.field);
        for x in 0..self.poset.len() {
            d.set(x, x, self.field.one());
        }
        d
    }

    fn pair_label(&self, (x, y): (usize, usize)) -> String {
        if x == y {
            format!("e_{}", self.poset.name(x))
        } else {
            format!("e_{},{}", self.poset.name(x), self.poset.name(y))
        }
    }

    pub fn validate(&self, f: &IncidenceElement) -> Result<()> {
        if f.field != self.field {
            return Err(Error::Mismatch(format!(
                "element over {} used in an algebra over {}",
                f.field, self.field
            )));
        }
        let n = self.poset.len();
        if let Some(&(x, y)) = f
            .coeffs
            .keys()
            .find(|&&(x, y)| x >= n || y >= n || !self.poset.leq(x, y))
        {
            return Err(Error::Mismatch(format!(
                "coefficient at ({x}, {y}) with x not <= y"
            )));
        }
        Ok(())
    }

    /// Convolution `(fg)(x, y) = Σ_{x <= z <= y} f(x, z) g(z, y)`.
    pub fn multiply(&self, f: &IncidenceElement, g: &IncidenceElement) -> Result<IncidenceElement> {
        self.validate(f)?;
        self.validate(g)?;
        Ok(self.multiply_unchecked(f, g))
    }

    fn multiply_unchecked(&self, f: &IncidenceElement, g: &IncidenceElement) -> IncidenceElement {
        let mut rows: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for (&(z, y), b) in &g.coeffs {
            rows.entry(z).or_default().push((y, b));
        }
        let mut out = IncidenceElement::zero(self.field);
        for (&(x, z), a) in &f.coeffs {
            if let Some(row) = rows.get(&z) {
                for &(y, b) in row {
                    out.add_to(x, y, &(a * b));
                }
            }
        }
        out
    }

    /// `[f, g] = fg - gf`.
    pub fn bracket(&self, f: &IncidenceElement, g: &IncidenceElement) -> Result<IncidenceElement> {
        Ok(self.multiply(f, g)?.sub(&self.multiply(g, f)?))
    }

    pub fn to_vector(&self, f: &IncidenceElement) -> Vec<Scalar> {
        let mut v = vec![self.field.zero(); self.dim()];
        for (p, c) in &f.coeffs {
            v[self.index[p]] = c.clone();
        }
        v
    }

    pub fn from_vector(&self, v: &[Scalar]) -> IncidenceElement {
        let mut out = IncidenceElement::zero(self.field);
        for (i, c) in v.iter().enumerate() {
            let (x, y) = self.basis[i];
            out.set(x, y, c.clone());
        }
        out
    }

    pub fn apply(&self, m: &LinearMap, f: &IncidenceElement) -> IncidenceElement {
        self.from_vector(&m.apply_vector(&self.to_vector(f)))
    }

    /// `f = f_D + f_J` with `f_D` diagonal and `f_J` in the radical.
    pub fn split(&self, f: &IncidenceElement) -> (IncidenceElement, IncidenceElement) {
        let mut d = IncidenceElement::zero(self.field);
        let mut j = IncidenceElement::zero(self.field);
        for (&(x, y), v) in &f.coeffs {
            if x == y {
                d.set(x, y, v.clone());
            } else {
                j.set(x, y, v.clone());
            }
        }
        (d, j)
    }

    /// Span of all `[b_i, b_j]` over basis pairs, computed by elimination.
    pub fn commutator_space(&self) -> Subspace {
        let mut vectors = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let b = self
                    .multiply_unchecked(&self.basis_element(i), &self.basis_element(j))
                    .sub(&self.multiply_unchecked(&self.basis_element(j), &self.basis_element(i)));
                if !b.is_zero() {
                    vectors.push(self.to_vector(&b));
                }
            }
        }
        Subspace::span(self.field, self.dim(), vectors)
    }

    /// Row-reduced basis of `[I, I]`.
    pub fn commutator_subspace(&self) -> Vec<IncidenceElement> {
        self.commutator_space()
            .basis()
            .iter()
            .map(|v| self.from_vector(v))
            .collect()
    }

    /// `J(I) = span {e_xy : x < y}`.
    pub fn radical_space(&self) -> Subspace {
        let vectors = self
            .poset
            .strict_pairs()
            .iter()
            .map(|&(x, y)| self.to_vector(&self.unit(x, y)));
        Subspace::span(self.field, self.dim(), vectors.collect::<Vec<_>>())
    }

    /// Solutions `z` of `[z, b] = 0` for every basis element `b`.
    pub fn center_space(&self) -> Subspace {
        let dim = self.dim();
        // column k of the block for b holds [b_k, b]
        let mut equations: Vec<Vec<Scalar>> = Vec::new();
        for j in 0..dim {
            let bj = self.basis_element(j);
            let images: Vec<Vec<Scalar>> = (0..dim)
                .map(|k| {
                    let bk = self.basis_element(k);
                    let c = self
                        .multiply_unchecked(&bk, &bj)
                        .sub(&self.multiply_unchecked(&bj, &bk));
                    self.to_vector(&c)
                })
                .collect();
            for r in 0..dim {
                let row: Vec<Scalar> = (0..dim).map(|k| images[k][r].clone()).collect();
                if row.iter().any(|s| !s.is_zero()) {
                    equations.push(row);
                }
            }
        }
        Subspace::kernel(self.field, dim, equations)
    }

    pub fn center(&self) -> Vec<IncidenceElement> {
        self.center_space()
            .basis()
            .iter()
            .map(|v| self.from_vector(v))
            .collect()
    }

    /// `f^{-1}` by back-substitution along a linear extension.
    pub fn inverse(&self, f: &IncidenceElement) -> Result<IncidenceElement> {
        self.validate(f)?;
        let p = self.poset;
        let n = p.len();
        let mut diag_inv = Vec::with_capacity(n);
        for x in 0..n {
            diag_inv.push(
                f.get(x, x)
                    .inverse()
                    .map_err(|_| Error::NotInvertible(p.name(x).to_owned()))?,
            );
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| p.down_degree(x));
        let mut g = IncidenceElement::zero(self.field);
        // elements above x are solved before x
        for &x in order.iter().rev() {
            g.set(x, x, diag_inv[x].clone());
            for y in (0..n).filter(|&y| p.lt(x, y)) {
                let mut acc = self.field.zero();
                for z in (0..n).filter(|&z| p.lt(x, z) && p.leq(z, y)) {
                    acc = &acc + &(&f.get(x, z) * &g.get(z, y));
                }
                g.set(x, y, -&(&diag_inv[x] * &acc));
            }
        }
        Ok(g)
    }

    fn map_from_images(&self, images: impl Iterator<Item = IncidenceElement>) -> LinearMap {
        LinearMap {
            field: self.field,
            columns: images.map(|e| self.to_vector(&e)).collect(),
        }
    }

    /// `λ̂(e_xy) = e_{λx λy}` for an isomorphism, `e_{λy λx}` for an anti-isomorphism.
    pub fn induced_map(&self, lambda: &PosetMap) -> LinearMap {
        self.map_from_images(self.basis.iter().map(|&(x, y)| {
            let (a, b) = match lambda.kind() {
                MapKind::Iso => (lambda.apply(x), lambda.apply(y)),
                MapKind::AntiIso => (lambda.apply(y), lambda.apply(x)),
            };
            self.unit(a, b)
        }))
    }

    /// The multiplicative automorphism `M_σ(e_xy) = σ(x, y) e_xy`.
    pub fn multiplicative_map(&self, sigma: &IncidenceElement) -> Result<LinearMap> {
        self.validate(sigma)?;
        let p = self.poset;
        let n = p.len();
        for &(x, y) in &self.basis {
            let v = sigma.get(x, y);
            if v.is_zero() {
                return Err(Error::Cocycle(format!("σ{} = 0", self.pair_label((x, y)))));
            }
            if x == y && !v.is_one() {
                return Err(Error::Cocycle(format!(
                    "σ{} = {v}, expected 1",
                    self.pair_label((x, y))
                )));
            }
        }
        for x in 0..n {
            for y in (0..n).filter(|&y| p.lt(x, y)) {
                for z in (0..n).filter(|&z| p.lt(y, z)) {
                    if &sigma.get(x, y) * &sigma.get(y, z) != sigma.get(x, z) {
                        return Err(Error::Cocycle(format!(
                            "σ({a},{b})σ({b},{c}) != σ({a},{c})",
                            a = p.name(x),
                            b = p.name(y),
                            c = p.name(z)
                        )));
                    }
                }
            }
        }
        Ok(self.map_from_images(
            self.basis
                .iter()
                .map(|&(x, y)| self.unit(x, y).scaled(&sigma.get(x, y))),
        ))
    }

    /// The inner automorphism `ξ_f(g) = f g f^{-1}`.
    pub fn inner_map(&self, f: &IncidenceElement) -> Result<LinearMap> {
        let f_inv = self.inverse(f)?;
        Ok(self.map_from_images((0..self.dim()).map(|i| {
            let b = self.basis_element(i);
            self.multiply_unchecked(&self.multiply_unchecked(f, &b), &f_inv)
        })))
    }

    fn basis_products(
        &self,
        m: &LinearMap,
        check: impl Fn(usize, usize, &IncidenceElement, &IncidenceElement) -> bool,
    ) -> bool {
        if m.dim() != self.dim() || m.field != self.field {
            return false;
        }
        let images: Vec<IncidenceElement> = (0..self.dim())
            .map(|j| self.from_vector(m.column(j)))
            .collect();
        (0..self.dim()).all(|i| (0..self.dim()).all(|j| check(i, j, &images[i], &images[j])))
    }

    /// Invertible and `M[f, g] = [Mf, Mg]` on all basis pairs.
    pub fn is_lie_automorphism(&self, m: &LinearMap) -> bool {
        m.dim() == self.dim()
            && m.is_invertible()
            && self.basis_products(m, |i, j, mi, mj| {
                let bi = self.basis_element(i);
                let bj = self.basis_element(j);
                let lhs = self.apply(
                    m,
                    &self
                        .multiply_unchecked(&bi, &bj)
                        .sub(&self.multiply_unchecked(&bj, &bi)),
                );
                let rhs = self
                    .multiply_unchecked(mi, mj)
                    .sub(&self.multiply_unchecked(mj, mi));
                lhs == rhs
            })
    }

    /// Invertible and `M(fg) = M(f) M(g)`.
    pub fn is_automorphism(&self, m: &LinearMap) -> bool {
        m.dim() == self.dim()
            && m.is_invertible()
            && self.basis_products(m, |i, j, mi, mj| {
                let prod = self.multiply_unchecked(&self.basis_element(i), &self.basis_element(j));
                self.apply(m, &prod) == self.multiply_unchecked(mi, mj)
            })
    }

    /// Invertible and `M(fg) = M(g) M(f)`.
    pub fn is_anti_automorphism(&self, m: &LinearMap) -> bool {
        m.dim() == self.dim()
            && m.is_invertible()
            && self.basis_products(m, |i, j, mi, mj| {
                let prod = self.multiply_unchecked(&self.basis_element(i), &self.basis_element(j));
                self.apply(m, &prod) == self.multiply_unchecked(mj, mi)
            })
    }

    /// Checks `τ = φ + ν` with `ν` central-valued and vanishing on `[I, I]`.
    ///
    /// `τ` must be a Lie automorphism and `φ` an automorphism or the negative
    /// of an anti-automorphism. Returns `ν = τ - φ` on success.
    pub fn check_proper_decomposition(
        &self,
        tau: &LinearMap,
        phi: &LinearMap,
    ) -> Result<LinearMap> {
        if tau.dim() != self.dim() || phi.dim() != self.dim() {
            return Err(Error::Mismatch(format!(
                "maps of dimension {} and {} on an algebra of dimension {}",
                tau.dim(),
                phi.dim(),
                self.dim()
            )));
        }
        if !self.is_lie_automorphism(tau) {
            return Err(Error::Precondition("τ is not a Lie automorphism".into()));
        }
        if !self.is_automorphism(phi) && !self.is_anti_automorphism(&phi.neg()) {
            return Err(Error::Precondition(
                "φ is neither an automorphism nor the negative of an anti-automorphism".into(),
            ));
        }
        let nu = tau.sub(phi);
        for c in self.commutator_space().basis() {
            let image = nu.apply_vector(c);
            if image.iter().any(|s| !s.is_zero()) {
                return Err(Error::NotProperWitness(format!(
                    "ν does not vanish on [I,I]: ν({}) = {}",
                    self.from_vector(c),
                    self.from_vector(&image)
                )));
            }
        }
        let center = self.center_space();
        for (j, &pair) in self.basis.iter().enumerate() {
            if !center.contains(nu.column(j)) {
                return Err(Error::NotProperWitness(format!(
                    "ν({}) = {} is not central",
                    self.pair_label(pair),
                    self.from_vector(nu.column(j))
                )));
            }
        }
        Ok(nu)
    }

    /// `{"columns": [{"pairs": [[x, y, "num/den"], ...]}, ...]}`, one entry per basis element.
    pub fn map_to_json(&self, m: &LinearMap) -> String {
        let columns = (0..m.dim())
            .map(|j| ElementJson {
                pairs: self
                    .from_vector(m.column(j))
                    .iter()
                    .map(|(&(x, y), v)| (x, y, v.to_fraction_string()))
                    .collect(),
            })
            .collect();
        serde_json::to_string(&MapJson { columns }).expect("serializable")
    }

    pub fn map_from_json(&self, json: &str) -> Result<LinearMap> {
        let parsed: MapJson = serde_json::from_str(json).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        if parsed.columns.len() != self.dim() {
            return Err(Error::Mismatch(format!(
                "{} columns for an algebra of dimension {}",
                parsed.columns.len(),
                self.dim()
            )));
        }
        let mut columns = Vec::new();
        for col in parsed.columns {
            let mut e = IncidenceElement::zero(self.field);
            for (x, y, v) in col.pairs {
                e.add_to(x, y, &self.field.parse_scalar(&v)?);
            }
            self.validate(&e)?;
            columns.push(self.to_vector(&e));
        }
        LinearMap::from_columns(self.field, columns)
    }
}
