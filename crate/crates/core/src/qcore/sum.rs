use super::context::{TruncationPolicy, C64};
use crate::error::{Error, Result};

/// Neumaier compensated summation for complex terms, tracking the sum of
/// absolute values alongside.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    re: f64,
    re_c: f64,
    im: f64,
    im_c: f64,
    abs: f64,
}

#[inline]
fn neumaier(s: &mut f64, c: &mut f64, x: f64) {
    let t = *s + x;
    if s.abs() >= x.abs() {
        *c += (*s - t) + x;
    } else {
        *c += (x - t) + *s;
    }
    *s = t;
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: C64) {
        neumaier(&mut self.re, &mut self.re_c, z.re);
        neumaier(&mut self.im, &mut self.im_c, z.im);
        self.abs += z.norm();
    }

    pub fn absorb(&mut self, other: &CompensatedSum) {
        self.add(other.value());
        self.abs += other.abs - other.value().norm();
    }

    #[inline]
    pub fn value(&self) -> C64 {
        C64::new(self.re + self.re_c, self.im + self.im_c)
    }

    /// Sum of the absolute values of everything added so far.
    #[inline]
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

/// Number of consecutive negligible shells required before a sum stops.
pub(crate) const QUIET_SHELLS: usize = 4;
/// Shells always summed regardless of size.
pub(crate) const MIN_SHELLS: usize = 3;

/// Sum `f(n)` over all integers, visiting `0, 1, -1, 2, -2, ...` and
/// stopping once several consecutive pairs are negligible.
pub fn bilateral_sum<F>(policy: &TruncationPolicy, what: &str, mut f: F) -> Result<C64>
where
    F: FnMut(i64) -> Result<C64>,
{
    let mut total = CompensatedSum::new();
    total.add(f(0)?);
    let mut quiet = 0;
    for n in 1..=policy.max_index as i64 {
        let a = f(n)?;
        let b = f(-n)?;
        if !(a.is_finite() && b.is_finite()) {
            return Err(Error::NonConvergent(format!("{what}: non-finite term at index {n}")));
        }
        total.add(a);
        total.add(b);
        let shell = a.norm() + b.norm();
        if shell <= policy.eps_term * total.abs_sum() {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if quiet >= QUIET_SHELLS && n as usize >= MIN_SHELLS {
            return Ok(total.value());
        }
    }
    Err(Error::NonConvergent(format!("{what}: no convergence within {} terms", policy.max_index)))
}
