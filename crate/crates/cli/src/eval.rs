//! Named functions reachable from `mu-lab eval`.

use mu_lab::completion::{m_n_completed, mordell_h, mu_completed, mu_n_completed, r_function};
use mu_lab::mu::{f_n_eval, hat_mu_n_eval, m_n_vector, mu_generalized, mu_n_eval, mu_zwegers, nu_eval, phi_n_eval};
use mu_lab::qcore::{dedekind_eta, jacobi_theta, qpoch_inf, theta_q};
use mu_lab::{Error, QContext, C64};

/// Arguments collected from the command line, all optional.
#[derive(Debug, Default)]
pub struct Args {
    pub u: Vec<C64>,
    pub v: Option<C64>,
    pub x: Vec<C64>,
    pub z: Option<C64>,
    pub a: Option<C64>,
    pub alpha: Option<C64>,
    pub k: Option<usize>,
}

pub struct Function {
    pub name: &'static str,
    pub params: &'static str,
    pub about: &'static str,
}

pub const FUNCTIONS: &[Function] = &[
    Function { name: "eta", params: "", about: "Dedekind eta" },
    Function { name: "qpoch", params: "--x", about: "(x; q)_inf" },
    Function { name: "theta-q", params: "--x", about: "theta_q(x) = (q, -x, -q/x; q)_inf" },
    Function { name: "vartheta", params: "--u", about: "Jacobi theta" },
    Function { name: "mu", params: "--u --v", about: "Zwegers' mu(u, v)" },
    Function { name: "genmu", params: "--u --v --alpha", about: "mu(u, v; alpha)" },
    Function { name: "R", params: "--u", about: "R(u)" },
    Function { name: "h", params: "--u", about: "Mordell integral h(u)" },
    Function { name: "mu-tilde", params: "--u --v", about: "completed mu" },
    Function { name: "mu-n", params: "--u (N+1 times)", about: "mu_N" },
    Function { name: "hat-mu-n", params: "--u (N+1 times) --alpha", about: "hat mu_N" },
    Function { name: "mu-n-tilde", params: "--u (N+1 times)", about: "completed mu_N" },
    Function { name: "f-n", params: "--x (N+1 times) --a", about: "f_N(x_0, ..., x_N; a)" },
    Function { name: "nu", params: "--u (N+1 times) --k", about: "nu_{N,k}" },
    Function { name: "phi-n", params: "--u (N+1 times) --z", about: "vector Phi_N(u; z)" },
    Function { name: "m-n", params: "--u (N+1 times)", about: "vector M_N" },
    Function { name: "m-n-tilde", params: "--u (N+1 times)", about: "completed vector M_N" },
];

pub enum EvalError {
    Usage(String),
    Eval(Error),
}

impl From<Error> for EvalError {
    fn from(e: Error) -> Self {
        EvalError::Eval(e)
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, f: &str) -> Result<T, EvalError> {
    v.ok_or_else(|| EvalError::Usage(format!("{f} needs {flag}")))
}

fn one(v: &[C64], flag: &str, f: &str) -> Result<C64, EvalError> {
    match v {
        [x] => Ok(*x),
        _ => Err(EvalError::Usage(format!("{f} takes exactly one {flag}, got {}", v.len()))),
    }
}

fn several<'a>(v: &'a [C64], flag: &str, f: &str) -> Result<&'a [C64], EvalError> {
    if v.len() < 2 {
        return Err(EvalError::Usage(format!("{f} takes {flag} at least twice, got {}", v.len())));
    }
    Ok(v)
}

/// Evaluate `name`. Vector valued functions return all components.
pub fn evaluate(name: &str, a: &Args, ctx: &QContext) -> Result<Vec<C64>, EvalError> {
    let s = |v: mu_lab::Result<C64>| v.map(|x| vec![x]).map_err(EvalError::from);
    match name {
        "eta" => Ok(vec![dedekind_eta(ctx)]),
        "qpoch" => Ok(vec![qpoch_inf(one(&a.x, "--x", name)?, ctx)]),
        "theta-q" => s(theta_q(one(&a.x, "--x", name)?, ctx)),
        "vartheta" => Ok(vec![jacobi_theta(one(&a.u, "--u", name)?, ctx)]),
        "mu" => s(mu_zwegers(one(&a.u, "--u", name)?, need(a.v, "--v", name)?, ctx)),
        "genmu" => s(mu_generalized(
            one(&a.u, "--u", name)?,
            need(a.v, "--v", name)?,
            need(a.alpha, "--alpha", name)?,
            ctx,
        )),
        "R" => s(r_function(one(&a.u, "--u", name)?, ctx)),
        "h" => s(mordell_h(one(&a.u, "--u", name)?, ctx)),
        "mu-tilde" => s(mu_completed(one(&a.u, "--u", name)?, need(a.v, "--v", name)?, ctx)),
        "mu-n" => s(mu_n_eval(several(&a.u, "--u", name)?, ctx)),
        "hat-mu-n" => s(hat_mu_n_eval(several(&a.u, "--u", name)?, need(a.alpha, "--alpha", name)?, ctx)),
        "mu-n-tilde" => s(mu_n_completed(several(&a.u, "--u", name)?, ctx)),
        "f-n" => s(f_n_eval(several(&a.x, "--x", name)?, need(a.a, "--a", name)?, ctx)),
        "nu" => s(nu_eval(several(&a.u, "--u", name)?, need(a.k, "--k", name)?, ctx)),
        "phi-n" => Ok(phi_n_eval(several(&a.u, "--u", name)?, need(a.z, "--z", name)?, ctx)?),
        "m-n" => Ok(m_n_vector(several(&a.u, "--u", name)?, ctx)?),
        "m-n-tilde" => Ok(m_n_completed(several(&a.u, "--u", name)?, ctx)?),
        _ => Err(EvalError::Usage(format!("unknown function {name:?}; see `mu-lab eval --help`"))),
    }
}
