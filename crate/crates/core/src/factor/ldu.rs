use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

/// `g = l · diag(d) · u` with `l` lower and `u` upper unitriangular.
#[derive(Debug, Clone, PartialEq)]
pub struct Ldu<F: Field> {
    pub l: Matrix<F>,
    pub d: Vec<F>,
    pub u: Matrix<F>,
}

impl<F: Field> Ldu<F> {
    pub fn product(&self) -> Matrix<F> {
        self.l.mul(&Matrix::from_diag(self.d.clone())).mul(&self.u)
    }
}

fn require_square<F: Field>(g: &Matrix<F>) -> Result<()> {
    if !g.is_square() {
        return Err(Error::invalid(format!("expected a square matrix, got {}x{}", g.rows(), g.cols())));
    }
    Ok(())
}

/// Gaussian elimination without pivoting. Fails with the first vanishing
/// leading principal minor (1-based).
pub fn ldu<F: Field>(g: &Matrix<F>) -> Result<Ldu<F>> {
    require_square(g)?;
    let n = g.rows();
    let mut a = g.to_rows();
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    let mut d = Vec::with_capacity(n);
    for k in 0..n {
        let pivot = a[k][k].clone();
        let inv = pivot.inv().ok_or(Error::Stratum { index: k + 1 })?;
        for j in k + 1..n {
            u.set(k, j, a[k][j].mul(&inv));
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].mul(&inv);
            for j in k + 1..n {
                if !a[k][j].is_zero() {
                    a[i][j] = a[i][j].sub(&factor.mul(&a[k][j]));
                }
            }
            l.set(i, k, factor);
        }
        d.push(pivot);
    }
    Ok(Ldu { l, d, u })
}

/// The same factorization computed entirely from minors:
/// `d_k = σ_k / σ_{k-1}`, `l_{ij} = det g[1..j-1, i; 1..j] / σ_j`,
/// `u_{ij} = det g[1..i; 1..i-1, j] / σ_i`.
pub fn ldu_minors<F: Field>(g: &Matrix<F>) -> Result<Ldu<F>> {
    require_square(g)?;
    let n = g.rows();
    let mut sigma = vec![F::one()];
    for k in 1..=n {
        let idx: Vec<usize> = (0..k).collect();
        let s = g.select(&idx, &idx).determinant();
        if s.is_zero() {
            return Err(Error::Stratum { index: k });
        }
        sigma.push(s);
    }
    let mut l = Matrix::identity(n);
    let mut u = Matrix::identity(n);
    for j in 0..n {
        let inv = sigma[j + 1].inv().expect("checked nonzero");
        for i in j + 1..n {
            let mut rows: Vec<usize> = (0..j).collect();
            rows.push(i);
            let cols: Vec<usize> = (0..=j).collect();
            l.set(i, j, g.select(&rows, &cols).determinant().mul(&inv));
            u.set(j, i, g.select(&cols, &rows).determinant().mul(&inv));
        }
    }
    let d = (0..n).map(|k| sigma[k + 1].div(&sigma[k]).expect("checked nonzero")).collect();
    Ok(Ldu { l, d, u })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    fn m(rows: &[&[i64]]) -> Matrix<Scalar> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn identity_factors_trivially() {
        let f = ldu(&Matrix::<Scalar>::identity(4)).unwrap();
        assert!(f.l.is_identity() && f.u.is_identity());
        assert!(f.d.iter().all(|x| *x == Scalar::one()));
    }

    #[test]
    fn two_by_two_formula() {
        let g = m(&[&[2, 3], &[5, 7]]);
        let f = ldu(&g).unwrap();
        assert_eq!(*f.l.get(1, 0), Scalar::from_ratio(5, 2));
        assert_eq!(f.d, vec![Scalar::from_int(2), Scalar::from_ratio(-1, 2)]);
        assert_eq!(*f.u.get(0, 1), Scalar::from_ratio(3, 2));
        assert_eq!(f.product(), g);
        assert_eq!(ldu_minors(&g).unwrap(), f);
    }

    #[test]
    fn stratum_failures_report_the_minor() {
        let anti = m(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]);
        assert_eq!(ldu(&anti).unwrap_err(), Error::Stratum { index: 1 });
        let g = m(&[&[1, 2, 3], &[1, 2, 5], &[4, 1, 1]]);
        assert_eq!(ldu(&g).unwrap_err(), Error::Stratum { index: 2 });
        assert_eq!(ldu_minors(&g).unwrap_err(), Error::Stratum { index: 2 });
    }
}
