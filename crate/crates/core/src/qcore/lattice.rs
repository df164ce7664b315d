use nalgebra::DMatrix;

use super::context::{QContext, TruncationPolicy, C64, I, PI};
use super::sum::{CompensatedSum, MIN_SHELLS, QUIET_SHELLS};
use crate::error::{Error, Result};

/// Symmetric positive definite real matrix defining a lattice quadratic form.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    m: DMatrix<f64>,
    inv: DMatrix<f64>,
    det: f64,
}

impl SymMatrix {
    /// Row-major entries. Fails unless the matrix is symmetric with all
    /// leading principal minors positive.
    pub fn new(dim: usize, entries: &[f64]) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::InvalidInput(format!("expected {} entries, got {}", dim * dim, entries.len())));
        }
        let m = DMatrix::from_row_slice(dim, dim, entries);
        for i in 0..dim {
            for j in 0..i {
                if (m[(i, j)] - m[(j, i)]).abs() > 1e-12 * (1.0 + m[(i, j)].abs()) {
                    return Err(Error::InvalidInput("matrix is not symmetric".into()));
                }
            }
        }
        for k in 1..=dim {
            if m.view((0, 0), (k, k)).determinant() <= 0.0 {
                return Err(Error::InvalidInput(format!("leading minor of order {k} is not positive")));
            }
        }
        let (inv, det) = if dim == 0 {
            (m.clone(), 1.0)
        } else {
            let chol = m
                .clone()
                .cholesky()
                .ok_or_else(|| Error::InvalidInput("matrix is not positive definite".into()))?;
            (chol.inverse(), m.determinant())
        };
        Ok(SymMatrix { m, inv, det })
    }

    /// The `(n-1) x (n-1)` matrix with 2 on the diagonal and 1 elsewhere.
    pub fn hat(n: usize) -> Self {
        let d = n.saturating_sub(1);
        let entries: Vec<f64> = (0..d * d).map(|k| if k / d.max(1) == k % d.max(1) { 2.0 } else { 1.0 }).collect();
        SymMatrix::new(d, &entries).expect("hat matrix is positive definite")
    }

    pub fn dim(&self) -> usize {
        self.m.nrows()
    }

    pub fn entry(&self, i: usize, j: usize) -> f64 {
        self.m[(i, j)]
    }

    pub fn det(&self) -> f64 {
        self.det
    }

    pub fn inverse_entry(&self, i: usize, j: usize) -> f64 {
        self.inv[(i, j)]
    }

    /// `n^T S n`.
    pub fn quad(&self, n: &[f64]) -> f64 {
        form(&self.m, n, n)
    }

    /// `n^T S^{-1} n`.
    pub fn quad_inv(&self, n: &[f64]) -> f64 {
        form(&self.inv, n, n)
    }

    /// `u^T S^{-1} v` for complex u.
    pub fn bilinear_inv(&self, u: &[C64], v: &[C64]) -> C64 {
        let d = self.dim();
        let mut s = C64::new(0.0, 0.0);
        for i in 0..d {
            for j in 0..d {
                s += u[i] * self.inv[(i, j)] * v[j];
            }
        }
        s
    }
}

fn form(m: &DMatrix<f64>, a: &[f64], b: &[f64]) -> f64 {
    let d = m.nrows();
    let mut s = 0.0;
    for i in 0..d {
        for j in 0..d {
            s += a[i] * m[(i, j)] * b[j];
        }
    }
    s
}

/// Visit every point of `Z^d` with max-norm exactly `r`.
fn visit_shell<F>(d: usize, r: i64, buf: &mut [i64], f: &mut F) -> Result<()>
where
    F: FnMut(&[i64]) -> Result<()>,
{
    if r == 0 {
        buf.fill(0);
        return f(buf);
    }
    // the first coordinate reaching |n_i| = r is j
    for j in 0..d {
        let lo = |i: usize| if i < j { -(r - 1) } else { -r };
        let hi = |i: usize| if i < j { r - 1 } else { r };
        let step = |i: usize| if i == j { 2 * r } else { 1 };
        for (i, b) in buf.iter_mut().enumerate() {
            *b = lo(i);
        }
        loop {
            f(buf)?;
            let mut advanced = false;
            for i in (0..d).rev() {
                if buf[i] + step(i) <= hi(i) {
                    buf[i] += step(i);
                    for (k, b) in buf.iter_mut().enumerate().skip(i + 1) {
                        *b = lo(k);
                    }
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
    }
    Ok(())
}

/// Sum `f(n)` over `n` in `Z^dim` by growing max-norm shells. Stops after
/// several consecutive shells fall below `lattice_shell_eps` relative to
/// the running sum of absolute values.
pub fn lattice_sum<F>(dim: usize, policy: &TruncationPolicy, what: &str, mut f: F) -> Result<C64>
where
    F: FnMut(&[i64]) -> Result<C64>,
{
    if dim == 0 {
        return f(&[]);
    }
    let mut buf = vec![0i64; dim];
    let mut total = CompensatedSum::new();
    let mut quiet = 0;
    for r in 0..=policy.max_index as i64 {
        let mut shell = CompensatedSum::new();
        visit_shell(dim, r, &mut buf, &mut |n| {
            let t = f(n)?;
            shell.add(t);
            Ok(())
        })?;
        if !shell.value().is_finite() || !shell.abs_sum().is_finite() {
            return Err(Error::NonConvergent(format!("{what}: non-finite terms in shell {r}")));
        }
        total.absorb(&shell);
        if shell.abs_sum() <= policy.lattice_shell_eps * total.abs_sum() {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if quiet >= QUIET_SHELLS && r as usize >= MIN_SHELLS {
            return Ok(total.value());
        }
    }
    Err(Error::NonConvergent(format!("{what}: no convergence within {} shells", policy.max_index)))
}

/// `sum_{n in Z^d} exp(pi i n^T S n tau + 2 pi i u^T n)`.
pub fn lattice_theta(s: &SymMatrix, u: &[C64], ctx: &QContext) -> Result<C64> {
    lattice_theta_shifted(s, u, &vec![0.0; s.dim()], ctx)
}

/// Same sum over the shifted lattice `Z^d + shift`.
pub fn lattice_theta_shifted(s: &SymMatrix, u: &[C64], shift: &[f64], ctx: &QContext) -> Result<C64> {
    check_dims(s, u)?;
    let tau = ctx.tau();
    let mut x = vec![0.0; s.dim()];
    lattice_sum(s.dim(), ctx.policy(), "lattice theta", |n| {
        let mut lin = C64::new(0.0, 0.0);
        for i in 0..n.len() {
            x[i] = n[i] as f64 + shift[i];
            lin += u[i] * x[i];
        }
        Ok((PI * I * tau * s.quad(&x) + 2.0 * PI * I * lin).exp())
    })
}

/// `sum_{n in Z^d} exp(pi i n^T S^{-1} n tau + 2 pi i u^T S^{-1} n)`.
pub fn lattice_theta_dual(s: &SymMatrix, u: &[C64], ctx: &QContext) -> Result<C64> {
    check_dims(s, u)?;
    let d = s.dim();
    let tau = ctx.tau();
    // precompute u^T S^{-1}
    let w: Vec<C64> = (0..d).map(|j| (0..d).map(|i| u[i] * s.inverse_entry(i, j)).sum()).collect();
    let mut x = vec![0.0; d];
    lattice_sum(d, ctx.policy(), "dual lattice theta", |n| {
        let mut lin = C64::new(0.0, 0.0);
        for i in 0..d {
            x[i] = n[i] as f64;
            lin += w[i] * x[i];
        }
        Ok((PI * I * tau * s.quad_inv(&x) + 2.0 * PI * I * lin).exp())
    })
}

fn check_dims(s: &SymMatrix, u: &[C64]) -> Result<()> {
    if u.len() != s.dim() {
        return Err(Error::InvalidInput(format!("vector of length {} for a {}-dimensional form", u.len(), s.dim())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shells_partition_the_box() {
        for d in 1..=3usize {
            let mut seen = std::collections::HashSet::new();
            let mut buf = vec![0; d];
            for r in 0..=3 {
                visit_shell(d, r, &mut buf, &mut |n| {
                    assert_eq!(n.iter().map(|x| x.abs()).max().unwrap(), r);
                    assert!(seen.insert(n.to_vec()));
                    Ok(())
                })
                .unwrap();
            }
            assert_eq!(seen.len(), 7usize.pow(d as u32));
        }
    }

    #[test]
    fn hat_matrix_has_determinant_n() {
        for n in 2..6 {
            assert!((SymMatrix::hat(n).det() - n as f64).abs() < 1e-12);
        }
        assert_eq!(SymMatrix::hat(1).dim(), 0);
    }

    #[test]
    fn rejects_indefinite() {
        assert!(SymMatrix::new(2, &[1.0, 2.0, 2.0, 1.0]).is_err());
        assert!(SymMatrix::new(2, &[1.0, 0.5, 0.4, 1.0]).is_err());
    }
}
