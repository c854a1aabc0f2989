use super::field::FieldScalar;
use super::monomial::Monomial;
use super::point::ClosedPoint;
use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};

/// Graded automorphism of a polynomial ring given by the images of the
/// variables: `images[i][j]` is the coefficient of `x_j` in `psi(x_i)`.
#[derive(Debug, Clone)]
pub struct LinearMap {
    ring: Ring,
    images: Matrix,
    inverse: Matrix,
}

impl LinearMap {
    pub fn new(ring: &Ring, images: Matrix) -> Result<Self> {
        let n = ring.nvars();
        if images.len() != n || images.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: images.len() });
        }
        let inverse = linalg::inverse(&images, ring.field())?;
        Ok(LinearMap { ring: ring.clone(), images, inverse })
    }

    /// Map given by the images of the variables as linear forms.
    pub fn from_forms(ring: &Ring, forms: &[Polynomial]) -> Result<Self> {
        let rows = forms.iter().map(linear_coeffs).collect::<Result<Vec<_>>>()?;
        LinearMap::new(ring, rows)
    }

    pub fn identity(ring: &Ring) -> Self {
        let id = linalg::identity(ring.nvars(), ring.field());
        LinearMap { ring: ring.clone(), images: id.clone(), inverse: id }
    }

    /// Exchange two variables.
    pub fn transposition(ring: &Ring, a: usize, b: usize) -> Self {
        let mut m = linalg::identity(ring.nvars(), ring.field());
        m.swap(a, b);
        LinearMap { ring: ring.clone(), images: m.clone(), inverse: m }
    }

    /// The transform sending the ideal of `p` onto `(x1, ..., xn)`: its inverse
    /// maps `x0` to `x_l` (l the pivot of `p`), `x_l` to the form attached to
    /// `x0`, and every other `x_j` to the j-th linear form of `p`.
    pub fn for_point(p: &ClosedPoint) -> Self {
        let ring = p.ring().clone();
        let n = ring.nvars();
        let l = p.pivot();
        let forms = p.forms();
        let mut inv_images: Vec<Polynomial> = Vec::with_capacity(n);
        inv_images.push(Polynomial::var(&ring, l));
        for j in 1..n {
            let form_index = if j == l { 0 } else { j };
            inv_images.push(forms[&form_index].clone());
        }
        let inverse = inv_images.iter().map(|f| linear_coeffs(f).expect("linear form")).collect();
        let psi_inv = LinearMap::new(&ring, inverse).expect("forms of a point and a pivot variable are a basis");
        psi_inv.inverse()
    }

    /// Transform with inverse `x0 -> y`, `x_i -> forms[i-1]`; `forms` must span
    /// the linear forms vanishing at `p` and `y` must not vanish there.
    pub fn for_point_with(p: &ClosedPoint, y: &Polynomial, forms: &[Polynomial]) -> Result<Self> {
        let ring = p.ring();
        if forms.len() + 1 != ring.nvars() {
            return Err(Error::DimensionMismatch { expected: ring.nvars() - 1, got: forms.len() });
        }
        if y.evaluate(p.coords())?.is_zero() {
            return Err(Error::InvalidPoint("y vanishes at the point".into()));
        }
        for f in forms {
            if !f.evaluate(p.coords())?.is_zero() {
                return Err(Error::InvalidPoint(format!("{f} does not vanish at the point")));
            }
        }
        let mut all = vec![y.clone()];
        all.extend(forms.iter().cloned());
        Ok(LinearMap::from_forms(ring, &all)?.inverse())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn images(&self) -> &Matrix {
        &self.images
    }

    pub fn inverse(&self) -> LinearMap {
        LinearMap { ring: self.ring.clone(), images: self.inverse.clone(), inverse: self.images.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.images == linalg::identity(self.ring.nvars(), self.ring.field())
    }

    pub fn image_of_var(&self, i: usize) -> Polynomial {
        row_to_form(&self.ring, &self.images[i])
    }

    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if !f.ring().compatible(&self.ring) {
            return Err(Error::RingMismatch("linear map applied outside its ring".into()));
        }
        if self.is_identity() {
            return Ok(f.clone());
        }
        let images: Vec<Polynomial> = (0..self.ring.nvars()).map(|i| self.image_of_var(i).reorder(f.ring())).collect();
        Ok(f.substitute(&images, f.ring()))
    }

    pub fn apply_all(&self, fs: &[Polynomial]) -> Result<Vec<Polynomial>> {
        fs.iter().map(|f| self.apply(f)).collect()
    }

    /// Image of a point: `psi` carries the ideal of `q` onto the ideal of the result.
    pub fn map_point(&self, q: &ClosedPoint) -> Result<ClosedPoint> {
        let coords: Vec<FieldScalar> = self
            .inverse
            .iter()
            .map(|row| {
                row.iter().zip(q.coords()).fold(self.ring.field().zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect();
        ClosedPoint::new(&self.ring, coords)
    }

    pub fn compose(&self, then: &LinearMap) -> LinearMap {
        // (then ∘ self)(x_i) = then(self(x_i)); rows combine as images * then.images
        let field = self.ring.field();
        let images = linalg::mat_mul(&self.images, &then.images, field);
        let inverse = linalg::mat_mul(&then.inverse, &self.inverse, field);
        LinearMap { ring: self.ring.clone(), images, inverse }
    }
}

/// Coefficient row of a linear form.
pub fn linear_coeffs(f: &Polynomial) -> Result<Vec<FieldScalar>> {
    let ring = f.ring();
    let mut row = vec![ring.field().zero(); ring.nvars()];
    for t in f.terms() {
        if t.mono.degree() != 1 {
            return Err(Error::InvalidPoint(format!("{f} is not a linear form")));
        }
        let i = t.mono.support().next().expect("degree one");
        row[i] = t.coeff.clone();
    }
    Ok(row)
}

pub fn row_to_form(ring: &Ring, row: &[FieldScalar]) -> Polynomial {
    let n = ring.nvars();
    Polynomial::from_terms(
        ring,
        row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c.clone(), Monomial::var(n, i, 1))),
    )
}
