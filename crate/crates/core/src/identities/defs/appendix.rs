use super::{cx, Reg};
use crate::identities::{DomainSpec, ParamPoint, Sides, Suite, TOL_MODULAR, TOL_SERIES};
use crate::qcore::{basic_series, theta_q, theta_q_ratio, QContext, C64};
use crate::qdiff::{n_tilde_phi_m, phi_watson, QDiffProblem};
use crate::Result;

const SHAPES: [(usize, usize); 5] = [(1, 0), (2, 0), (2, 1), (3, 1), (3, 2)];

/// `a_0..a_N`, `b_0..b_M` and `N - M + 1` further values from the aux slots.
fn problem(p: &ParamPoint, n: usize, m: usize) -> Result<(QDiffProblem, Vec<C64>)> {
    let c = cx(p)?;
    let a = p.aux[..=n].to_vec();
    let b = p.aux[n + 1..n + 2 + m].to_vec();
    let rest = p.aux[n + 2 + m..].to_vec();
    Ok((QDiffProblem::new(n, m, a, b, c)?, rest))
}

fn dom(n: usize, m: usize) -> DomainSpec {
    DomainSpec::standard(0).aux_polar(n + m + 2, 0.5, 1.5).aux_polar(n - m + 1, 0.8, 2.0)
}

/// `a_0..a_N`, `b_1..b_M` and `x_0..x_{N-M}` for the N~phi_M function.
fn tphi_args(p: &ParamPoint, n: usize, m: usize) -> (Vec<C64>, Vec<C64>, Vec<C64>) {
    let a = p.aux[..=n].to_vec();
    let b = p.aux[n + 1..n + 1 + m].to_vec();
    let x = p.aux[n + 1 + m..n + 2 + m + (n - m)].to_vec();
    (a, b, x)
}

fn tphi_dom(n: usize, m: usize) -> DomainSpec {
    DomainSpec::standard(0).aux_polar(n + m + 1, 0.5, 1.5).aux_polar(n - m + 1, 1.0, 3.0)
}

pub(super) fn register(r: &mut Reg) {
    let s = Suite::Appendix;
    for (n, m) in SHAPES {
        let tag = format!("N{n}M{m}");
        r.add(format!("APP-CONV.{tag}"), "conv solution", s, TOL_SERIES, dom(n, m), move |p| {
            let (pr, rest) = problem(p, n, m)?;
            // keep the argument of the series inside the unit disc after N+1 shifts
            let x = rest[0] * 3.0 * (pr.b.iter().product::<C64>() / pr.a.iter().product::<C64>()).norm();
            let mut l = Vec::new();
            let mut rr = Vec::new();
            for j in 0..=n {
                let (a, b) = pr.operator_sides(|x| pr.convergent_solution(j, x), x)?;
                l.push(a);
                rr.push(b);
            }
            Ok(Sides::vector(l, rr))
        });
        r.add(format!("APP-SOL.{tag}"), "lem: qK FS", s, TOL_MODULAR, dom(n, m), move |p| {
            let (pr, lams) = problem(p, n, m)?;
            let gap = n - m;
            let b0 = pr.b[0];
            let f = |x: C64| {
                let mut l = lams.clone();
                l[gap] = x;
                Ok(theta_q_ratio(b0 * x, x, &pr.ctx)? * pr.connection_lhs(0, &l)?)
            };
            let (a, b) = pr.operator_sides(f, lams[gap])?;
            Ok(Sides::scalar(a, b))
        });
        r.add(format!("APP-CONN.{tag}"), "lem: qK CP", s, TOL_MODULAR, dom(n, m), move |p| {
            let (pr, lams) = problem(p, n, m)?;
            let k = (p.choice as usize) % (m + 1);
            Ok(Sides::scalar(pr.connection_lhs(k, &lams)?, pr.connection_rhs(k, &lams)?))
        });
        r.add(format!("APP-SYM.{tag}"), "prop: appendix 1", s, TOL_MODULAR, tphi_dom(n, m), move |p| {
            let c = cx(p)?;
            let (a, b, x) = tphi_args(p, n, m);
            let base = n_tilde_phi_m(&a, &b, &x, &c)?;
            let rev = |v: &[C64]| v.iter().rev().copied().collect::<Vec<_>>();
            let l = vec![base; 3];
            let rr = vec![
                n_tilde_phi_m(&a, &b, &rev(&x), &c)?,
                n_tilde_phi_m(&rev(&a), &b, &x, &c)?,
                n_tilde_phi_m(&a, &rev(&b), &x, &c)?,
            ];
            Ok(Sides::vector(l, rr))
        });
        r.add(format!("APP-QDIFF.{tag}"), "prop: appendix 1", s, TOL_MODULAR, tphi_dom(n, m), move |p| {
            let c = cx(p)?;
            let (a, b, mut x) = tphi_args(p, n, m);
            let ratio = (b.iter().product::<C64>() / a.iter().product::<C64>()).norm();
            let grow = (3.0 * ratio / x.iter().product::<C64>().norm()).max(1.0);
            x[0] *= grow;
            let big_x: C64 = x.iter().product();
            let sign = if (n - m) % 2 == 0 { 1.0 } else { -1.0 };
            // the equation with b_0 = 1 and the product X in place of x
            let mut bb = vec![C64::new(1.0, 0.0)];
            bb.extend(&b);
            let pr = QDiffProblem::new(n, m, a.clone(), bb, c)?;
            let f = |t: C64| {
                let mut y = x.clone();
                y[0] = t;
                n_tilde_phi_m(&a, &b, &y, &c)
            };
            let (lhs, rhs) = pr.operator_sides(f, x[0])?;
            // operator_sides multiplies by x_0; the equation wants (-1)^{N-M} X
            Ok(Sides::scalar(lhs, rhs * sign * big_x / x[0]))
        });
        if n > m {
            r.add(format!("APP-REL.{tag}"), "tildephi", s, TOL_MODULAR, tphi_dom(n, m).aux_polar(1, 0.7, 1.4), move |p| {
                let c = cx(p)?;
                let (a, b, x) = tphi_args(p, n, m);
                let y = *p.aux.last().expect("y slot");
                Ok(Sides::scalar(
                    n_tilde_phi_m(&a, &b, &x, &c)? - n_tilde_phi_m(&a, &b, &moved(&x, y), &c)?,
                    tildephi_rhs(&a, &b, &x, y, &c)?,
                ))
            });
        }
    }
    for (n, m) in [(1usize, 0usize), (2, 0)] {
        r.add(format!("APP-TPHI.N{n}M{m}"), "eq: tphi qB", s, TOL_MODULAR, dom(n, 0), move |p| {
            let c = cx(p)?;
            let a = p.aux[..=n].to_vec();
            let lams = p.aux[n + 2..].to_vec();
            let pr = QDiffProblem::new(n, 0, a.clone(), vec![C64::new(1.0, 0.0)], c)?;
            let mut xs = vec![lams[0]];
            xs.extend(lams.windows(2).map(|w| -w[1] / w[0]));
            Ok(Sides::scalar(pr.connection_lhs(0, &lams)?, n_tilde_phi_m(&a, &[], &xs, &c)?))
        });
    }
    r.add("APP-RIEMANN", "prop: appendix 1", s, TOL_SERIES, DomainSpec::standard(0).aux_polar(4, 0.7, 1.4), |p| {
        let c = cx(p)?;
        let (l, rr) = riemann(p, &c, -1.0)?;
        Ok(Sides::scalar(l, rr))
    });
    for n in 1..=2usize {
        r.add(format!("APP-WATSON.N{n}"), "Watson continuation", s, 1e-11, DomainSpec::standard(0).aux_polar(n + 3, 0.5, 1.5), move |p| {
            let c = cx(p)?;
            let tops = p.aux[..=n].to_vec();
            let mut bots = vec![p.aux[n + 1]];
            bots.extend(std::iter::repeat(C64::new(0.0, 0.0)).take(n - 1));
            let z = p.aux[n + 2] / p.aux[n + 2].norm() * 0.6;
            Ok(Sides::scalar(basic_series(&tops, &bots, z, 0, &c)?, phi_watson(&tops, &bots, z, &c)?))
        });
    }
}

fn moved(x: &[C64], y: C64) -> Vec<C64> {
    let mut v = x.to_vec();
    v[0] /= y;
    v[1] *= y;
    v
}

fn tildephi_rhs(a: &[C64], b: &[C64], x: &[C64], y: C64, c: &QContext) -> Result<C64> {
    let n = a.len() - 1;
    let q = c.q();
    let t = |z: C64| theta_q(z, c);
    let mut pre = t(-y)? * t(-x[1] * y / x[0])? / (t(-y / x[0])? * t(-x[1] * y)?);
    for &xl in x {
        pre /= t(-xl)?;
    }
    let big_a: C64 = a.iter().product();
    let big_b: C64 = b.iter().product();
    let big_x: C64 = x.iter().product();
    let z = big_b * q.powi(n as i32 + 1) / (big_a * big_x);
    let mut s = C64::new(0.0, 0.0);
    for (j, &aj) in a.iter().enumerate() {
        let mut w = C64::new(1.0, 0.0);
        for &bs in b {
            w *= crate::qcore::qpoch_inf(bs * q / aj, c) / crate::qcore::qpoch_inf(bs * q, c);
        }
        for (r, &ar) in a.iter().enumerate() {
            if r != j {
                w *= crate::qcore::qpoch_inf(ar, c) / crate::qcore::qpoch_inf(ar / aj, c);
            }
        }
        w *= t(-aj)? * t(-aj * x[0] * x[1])?;
        for &xl in &x[2..] {
            w *= t(-aj * xl)?;
        }
        let mut tops = vec![aj];
        tops.extend(b.iter().map(|&bs| aj / bs));
        let bots: Vec<C64> = a.iter().enumerate().filter(|(r, _)| *r != j).map(|(_, &ar)| aj * q / ar).collect();
        s += w * basic_series(&tops, &bots, z, 0, c)?;
    }
    Ok(pre * s)
}

/// The three-term theta relation behind the last appendix identity;
/// `x1_sign` is the sign inside the `theta_q(+-x_1)` factor of the
/// denominator.
pub(super) fn riemann(p: &ParamPoint, c: &QContext, x1_sign: f64) -> Result<(C64, C64)> {
    let (a, x0, x1, y) = (p.aux[0], p.aux[1], p.aux[2], p.aux[3]);
    let t = |z: C64| theta_q(z, c);
    let lhs = t(-a * x0)? * t(-a * x1)? / (t(-x0)? * t(-x1)?) - t(-a * x0 / y)? * t(-a * x1 * y)? / (t(-x0 / y)? * t(-x1 * y)?);
    let num = t(-a)? * t(-y)? * t(-a * x0 * x1)? * t(-x1 * y / x0)?;
    let den = t(-x0)? * t(x1_sign * x1)? * t(-y / x0)? * t(-x1 * y)?;
    Ok((lhs, num / den))
}
