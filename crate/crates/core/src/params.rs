//! Parameter bookkeeping: sign characters and the classification sets.
//!
//! Membership tests return witnesses `(m, l)` so callers can build the
//! corresponding operators directly.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{as_nonneg_int, int, Rational};
use crate::liealg::Flavor;
use crate::rep::{ScalarRepParams, TargetRepParams, Weight};

/// A sign character `sgn^delta`, `delta` in `{+, -}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    /// `delta + k`: flips exactly when `k` is odd.
    pub fn shift(self, k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            self
        } else {
            self.flip()
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// Value of the character on `-1`.
    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn all() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl std::str::FromStr for Sign {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            other => Err(crate::error::Error::Parse(format!("bad sign {other:?}"))),
        }
    }
}

/// Signs of the disconnected part of a Levi subgroup. SL uses the first
/// entry only; GL has `(on the corner entry, on det of the block)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SignPair(pub Sign, pub Sign);

impl SignPair {
    pub fn sl(s: Sign) -> Self {
        SignPair(s, Sign::Plus)
    }

    pub fn shift_first(self, k: i64) -> Self {
        SignPair(self.0.shift(k), self.1)
    }

    pub fn shift_second(self, k: i64) -> Self {
        SignPair(self.0, self.1.shift(k))
    }

    pub fn all(flavor: Flavor) -> Vec<SignPair> {
        match flavor {
            Flavor::SL => Sign::all().into_iter().map(SignPair::sl).collect(),
            Flavor::GL => Sign::all()
                .into_iter()
                .flat_map(|a| Sign::all().into_iter().map(move |b| SignPair(a, b)))
                .collect(),
        }
    }

    pub fn label(&self, flavor: Flavor) -> String {
        match flavor {
            Flavor::SL => self.0.to_string(),
            Flavor::GL => format!("({},{})", self.0, self.1),
        }
    }
}

/// `(alpha, beta; poly^l; lambda, nu)` for SL.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SLQuadruple {
    pub alpha: Sign,
    pub beta: Sign,
    pub ell: u32,
    pub lambda: Rational,
    pub nu: Rational,
}

impl SLQuadruple {
    /// Moves an `n = 2` fiber label into the sign (`ell` becomes 0).
    pub fn canonical(&self, n: usize) -> SLQuadruple {
        if n == 2 && self.ell > 0 {
            SLQuadruple {
                beta: self.beta.shift(self.ell as i64),
                ell: 0,
                ..self.clone()
            }
        } else {
            self.clone()
        }
    }

    pub fn from_params(s: &ScalarRepParams, t: &TargetRepParams) -> Self {
        SLQuadruple {
            alpha: s.alpha.0,
            beta: t.beta.0,
            ell: t.ell,
            lambda: s.lambda.first.clone(),
            nu: t.nu.first.clone(),
        }
    }
}

/// `(alpha; beta; poly^l; lambda; nu)` for GL, each a pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLTuple {
    pub alpha: SignPair,
    pub beta: SignPair,
    pub ell: u32,
    pub lambda: Weight,
    pub nu: Weight,
}

impl GLTuple {
    pub fn canonical(&self, n: usize) -> GLTuple {
        if n == 2 && self.ell > 0 {
            GLTuple {
                beta: self.beta.shift_second(self.ell as i64),
                ell: 0,
                ..self.clone()
            }
        } else {
            self.clone()
        }
    }

    pub fn from_params(s: &ScalarRepParams, t: &TargetRepParams) -> Self {
        GLTuple {
            alpha: s.alpha,
            beta: t.beta,
            ell: t.ell,
            lambda: s.lambda.clone(),
            nu: t.nu.clone(),
        }
    }
}

/// Membership record with witnesses.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Membership {
    /// `m` for the first family (`l = 0`, generic `lambda`).
    pub first: Option<u32>,
    /// `(m, l)` for the second family (critical `lambda = 1 - (m + l)`).
    pub second: Option<(u32, u32)>,
    /// `(m, l)` with `l >= 1` for the `n = 2` multiplicity-two family.
    pub plus: Option<(u32, u32)>,
}

impl Membership {
    pub fn is_member(&self) -> bool {
        self.first.is_some() || self.second.is_some()
    }

    /// Dimension predicted by the classification.
    pub fn predicted_dim(&self) -> usize {
        if self.plus.is_some() {
            2
        } else if self.is_member() {
            1
        } else {
            0
        }
    }

    /// All witnesses `(m, l)` of solutions, without repetition.
    pub fn witnesses(&self) -> Vec<(u32, u32)> {
        let mut w = Vec::new();
        if let Some(m) = self.first {
            w.push((m, 0));
        }
        if let Some(p) = self.second {
            if !w.contains(&p) {
                w.push(p);
            }
        }
        w
    }
}

fn nonneg(q: &Rational) -> Option<u32> {
    as_nonneg_int(q).and_then(|v| u32::try_from(v).ok())
}

/// Membership of an SL tuple in the classification sets for `(n+1, n)`.
///
/// For `n = 2` the tuple is first canonicalized (`ell = 0`). The
/// multiplicity-two family then reads: `lambda = 1 - (m + l)`, `nu = 1 + l`,
/// `l >= 1`, `beta = alpha + m`; its second solution has `zeta`-degree
/// `m + 2l`, which is the `first` witness.
pub fn in_lambda_sl(q: &SLQuadruple, n: usize) -> Membership {
    let q = q.canonical(n);
    let mut out = Membership::default();
    if q.ell == 0 {
        if let Some(m) = nonneg(&(&q.nu - &q.lambda)) {
            if q.beta == q.alpha.shift(m as i64) {
                out.first = Some(m);
            }
        }
    }
    if n >= 3 {
        let l = q.ell;
        let nu_ok = q.nu == int(1) + Rational::new((l as i64).into(), ((n - 1) as i64).into());
        if let Some(m) = nonneg(&(int(1) - &q.lambda - int(l as i64))) {
            if nu_ok && q.beta == q.alpha.shift((m + l) as i64) {
                out.second = Some((m, l));
            }
        }
    } else if let Some(l) = nonneg(&(&q.nu - int(1))) {
        if let Some(m) = nonneg(&(int(1) - &q.lambda - int(l as i64))) {
            if q.beta == q.alpha.shift(m as i64) {
                out.second = Some((m, l));
                if l >= 1 {
                    out.plus = Some((m, l));
                }
            }
        }
    }
    out
}

/// Membership of a GL tuple in the classification sets for `(n+1, n)`.
pub fn in_lambda_gl(t: &GLTuple, n: usize) -> Membership {
    let t = t.canonical(n);
    let mut out = Membership::default();
    let frac = |l: u32| Rational::new((l as i64).into(), ((n - 1) as i64).into());
    if t.ell == 0 && t.nu.second == t.lambda.second && t.beta.1 == t.alpha.1 {
        if let Some(m) = nonneg(&(&t.nu.first - &t.lambda.first)) {
            if t.beta.0 == t.alpha.0.shift(m as i64) {
                out.first = Some(m);
            }
        }
    }
    // For n = 2 the fiber label is recovered from the second weight.
    let ell = if n == 2 {
        nonneg(&(&t.lambda.second - &t.nu.second))
    } else {
        Some(t.ell)
    };
    if let Some(l) = ell {
        let beta_second = if n == 2 {
            t.alpha.1.shift(l as i64)
        } else {
            t.alpha.1
        };
        let weights_ok =
            t.nu.first == int(1) + frac(l) && t.nu.second == &t.lambda.second - frac(l);
        if let Some(m) = nonneg(&(int(1) - &t.lambda.first - int(l as i64))) {
            if weights_ok && t.beta.0 == t.alpha.0.shift((m + l) as i64) && t.beta.1 == beta_second
            {
                out.second = Some((m, l));
            }
        }
    }
    out
}

/// Target data `I(poly^k_n, tau)^delta` of `G` itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdoTargetParams {
    pub n: usize,
    pub flavor: Flavor,
    pub delta: SignPair,
    pub tau: Weight,
    pub k: u32,
}

/// Whether `(source; target)` carries the identity (`k = 0`) or the
/// operator `D_k` in the invariant differential operator classification.
pub fn in_lambda_ido(n: usize, k: u32, source: &ScalarRepParams, target: &IdoTargetParams) -> bool {
    if target.k != k {
        return false;
    }
    let nn = n as i64;
    if k == 0 {
        return target.delta == source.alpha && target.tau == source.lambda;
    }
    let frac = Rational::new((k as i64).into(), nn.into());
    let lam_ok = source.lambda.first == int(1 - k as i64);
    let tau_ok = target.tau.first == int(1) + &frac
        && (source.flavor == Flavor::SL || target.tau.second == &source.lambda.second - &frac);
    let sign_ok = target.delta == source.alpha.shift_first(k as i64);
    lam_ok && tau_ok && sign_ok
}

/// Verma-side `(s, r) = (-lambda, -nu)`.
pub fn verma_dual(lambda: &Rational, nu: &Rational) -> (Rational, Rational) {
    (-lambda, -nu)
}

/// Verma-side membership for `(g', P')`-homomorphisms `M'(sym^l, r) -> M(s)`,
/// obtained from [`in_lambda_sl`] by `(lambda, nu) = (-s, -r)`.
pub fn in_lambda_gp(
    alpha: Sign,
    beta: Sign,
    ell: u32,
    s: &Rational,
    r: &Rational,
    n: usize,
) -> Membership {
    let q = SLQuadruple {
        alpha,
        beta,
        ell,
        lambda: -s,
        nu: -r,
    };
    in_lambda_sl(&q, n)
}

/// True if `q` is zero.
pub fn is_zero(q: &Rational) -> bool {
    q.is_zero()
}
