//! Truncated branching computations for `M(s)` restricted to `g'` (SL only).
//!
//! Weights are eigenvalues of `H0'` (the `a'`-weight). A character is a
//! finitely supported map weight -> multiplicity, always truncated below a
//! floor weight; reports state the floor.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{
    as_nonneg_int, format_rational, int, monomial_basis, span_rank, Monomial, Polynomial, Rational,
};
use crate::error::Result;
use crate::fmethod::kernel;
use crate::liealg::{Flavor, ParabolicData};
use crate::operators::Status;
use crate::params::{Sign, SignPair};
use crate::rep::Weight;
use crate::verma::VermaModule;
use crate::weyl::WeylElement;

/// `weight -> multiplicity`, weights `>= floor` only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedCharacter {
    pub floor: Rational,
    pub mults: BTreeMap<Rational, i64>,
}

impl GradedCharacter {
    pub fn zero(floor: Rational) -> Self {
        GradedCharacter {
            floor,
            mults: BTreeMap::new(),
        }
    }

    pub fn add_weight(&mut self, w: Rational, k: i64) {
        if w < self.floor || k == 0 {
            return;
        }
        let e = self.mults.entry(w.clone()).or_insert(0);
        *e += k;
        if *e == 0 {
            self.mults.remove(&w);
        }
    }

    pub fn add(&self, other: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        for (w, k) in &other.mults {
            out.add_weight(w.clone(), *k);
        }
        out
    }

    pub fn sub(&self, other: &GradedCharacter) -> GradedCharacter {
        let mut out = self.clone();
        for (w, k) in &other.mults {
            out.add_weight(w.clone(), -k);
        }
        out
    }

    pub fn get(&self, w: &Rational) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    /// Entries from the top weight down.
    pub fn entries(&self) -> Vec<WeightMultiplicity> {
        self.mults
            .iter()
            .rev()
            .map(|(w, k)| WeightMultiplicity {
                weight: format_rational(w),
                multiplicity: *k,
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightMultiplicity {
    pub weight: String,
    pub multiplicity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantCount {
    pub weight: String,
    pub computed: usize,
    pub predicted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub pass: bool,
}

/// Which vectors of a module are considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SubmoduleFilter {
    Full,
    /// Grades `>= g`; for `M(p)` with `g = p + 1` this is `Im(phi_{p+1})`.
    GradesFrom(u32),
    /// Grades `<= g`; the finite-dimensional quotient when `g = p`.
    GradesUpTo(u32),
}

impl SubmoduleFilter {
    fn admits(&self, grade: u32) -> bool {
        match *self {
            SubmoduleFilter::Full => true,
            SubmoduleFilter::GradesFrom(g) => grade >= g,
            SubmoduleFilter::GradesUpTo(g) => grade <= g,
        }
    }
}

fn sl_weight(q: Rational) -> Weight {
    Weight::sl(q)
}

/// Scalar `M(s)` of `SL(n+1)`.
pub fn verma_g(n: usize, s: &Rational) -> VermaModule {
    VermaModule::scalar(
        n,
        Flavor::SL,
        sl_weight(s.clone()),
        SignPair::sl(Sign::Plus),
    )
}

/// Scalar `M'(s)` of `SL(n)`.
pub fn verma_gprime(n: usize, s: &Rational) -> VermaModule {
    VermaModule::subgroup(
        n,
        Flavor::SL,
        0,
        sl_weight(s.clone()),
        SignPair::sl(Sign::Plus),
    )
}

/// Monomials of a scalar module with grade and `a'`-weight, down to `floor`.
struct Graded {
    items: Vec<(u32, Rational, Polynomial)>,
}

fn graded(v: &VermaModule, floor: &Rational) -> Result<Graded> {
    let pd = ParabolicData::new(v.n, v.flavor)?;
    let h = v.action(&pd.h0_prime())?;
    let top = weight_of(&h, &Polynomial::one(v.arity()))?;
    let mut items = Vec::new();
    let mut k = 0u32;
    // Each variable has weight at most -1, so grade k sits at or below top - k.
    while top.clone() - int(k as i64) >= *floor {
        for m in monomial_basis(v.rank, k) {
            let p = Polynomial::monomial(m);
            let w = weight_of(&h, &p)?;
            if w >= *floor {
                items.push((k, w, p));
            }
        }
        k += 1;
    }
    Ok(Graded { items })
}

fn weight_of(h: &WeylElement, p: &Polynomial) -> Result<Rational> {
    let (m, c) = p.leading().expect("nonzero vector");
    Ok(h.apply(p)?.coeff(m) / c)
}

/// Character of a scalar module restricted to a filter, truncated at `floor`.
pub fn character_of(
    v: &VermaModule,
    filter: SubmoduleFilter,
    floor: &Rational,
) -> Result<GradedCharacter> {
    let mut ch = GradedCharacter::zero(floor.clone());
    for (k, w, _) in graded(v, floor)?.items {
        if filter.admits(k) {
            ch.add_weight(w, 1);
        }
    }
    Ok(ch)
}

/// `[M(s)]` of `SL(n+1)` truncated at `s - depth`.
pub fn character_verma(n: usize, s: &Rational, depth: u32) -> Result<GradedCharacter> {
    character_of(
        &verma_g(n, s),
        SubmoduleFilter::Full,
        &(s - int(depth as i64)),
    )
}

pub fn character_sum(parts: &[GradedCharacter], floor: &Rational) -> GradedCharacter {
    parts
        .iter()
        .fold(GradedCharacter::zero(floor.clone()), |acc, c| acc.add(c))
}

/// `n'_+`-invariant vectors, grade by grade and weight by weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    /// `weight -> basis of invariants of that weight`.
    pub by_weight: BTreeMap<Rational, Vec<Polynomial>>,
}

impl InvariantReport {
    pub fn count(&self, w: &Rational) -> usize {
        self.by_weight.get(w).map_or(0, Vec::len)
    }

    pub fn counts(&self) -> BTreeMap<Rational, usize> {
        self.by_weight
            .iter()
            .map(|(w, b)| (w.clone(), b.len()))
            .filter(|(_, c)| *c > 0)
            .collect()
    }

    pub fn symbols(&self, w: &Rational, v: &VermaModule) -> Vec<String> {
        let names = v.names();
        self.by_weight
            .get(w)
            .map(|b| b.iter().map(|p| p.to_text(&names)).collect())
            .unwrap_or_default()
    }
}

/// Joint kernel of `N_j^+`, `j < n`, on each `(grade, weight)` block of the
/// filtered module, down to `floor`.
pub fn invariants_in(
    v: &VermaModule,
    filter: SubmoduleFilter,
    floor: &Rational,
) -> Result<InvariantReport> {
    let pd = ParabolicData::new(v.n, v.flavor)?;
    let ops: Vec<WeylElement> = (1..v.n)
        .map(|j| v.action(&pd.n_plus(j)))
        .collect::<Result<_>>()?;
    let mut blocks: BTreeMap<(u32, Rational), Vec<Polynomial>> = BTreeMap::new();
    for (k, w, p) in graded(v, floor)?.items {
        if filter.admits(k) {
            blocks.entry((k, w)).or_default().push(p);
        }
    }
    let mut by_weight: BTreeMap<Rational, Vec<Polynomial>> = BTreeMap::new();
    for ((_, w), cols) in blocks {
        // Vectors outside the filter may be hit by N_j^+; the submodule
        // filters used here are stable, so plain kernels suffice.
        let ker = kernel(&ops, &cols)?;
        by_weight.entry(w).or_default().extend(ker);
    }
    Ok(InvariantReport { by_weight })
}

/// Seeds closed under the Levi part and `n'_+` of `g'`, then multiplied by
/// `C[zeta']`: the `U(g')`-span of the seeds in grades `<= max_grade`.
pub fn gprime_span(
    v: &VermaModule,
    seeds: &[Polynomial],
    max_grade: u32,
) -> Result<Vec<Polynomial>> {
    let pd = ParabolicData::new(v.n, v.flavor)?;
    let mut ops: Vec<WeylElement> = (1..v.n)
        .map(|j| v.action(&pd.n_plus(j)))
        .collect::<Result<_>>()?;
    for z in pd.basis_levi(v.n - 1) {
        ops.push(v.action(&z)?);
    }
    let mut span: Vec<Polynomial> = seeds.iter().filter(|p| !p.is_zero()).cloned().collect();
    let mut frontier = span.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for op in &ops {
                let q = op.apply(p)?;
                if q.is_zero() {
                    continue;
                }
                let before = span_rank(&span);
                span.push(q.clone());
                if span_rank(&span) > before {
                    next.push(q);
                } else {
                    span.pop();
                }
            }
        }
        frontier = next;
    }
    let arity = v.arity();
    let mut out = Vec::new();
    for p in &span {
        let g = p.degree().unwrap_or(0);
        for k in 0..=max_grade.saturating_sub(g) {
            for m in monomial_basis(v.n - 1, k) {
                out.push(p.mul_monomial(&m.embed(0, arity), &int(1)));
            }
        }
    }
    Ok(out)
}

/// `U(g')`-spans of the seed families `(A)`, `(B1)`, `(B2)` inside `M(p)`.
pub struct ClaimPieces {
    pub a: Vec<Polynomial>,
    pub b1: Vec<Polynomial>,
    pub b2: Vec<Polynomial>,
}

pub fn claim_pieces(n: usize, p: u32, max_grade: u32) -> Result<ClaimPieces> {
    let v = verma_g(n, &int(p as i64));
    let zn = |e: u32| Monomial::var(n, n - 1).with_exp(n - 1, e);
    let seeds_a: Vec<Polynomial> = (p + 1..=max_grade)
        .map(|m| Polynomial::monomial(zn(m)))
        .collect();
    let mut seeds_b1 = Vec::new();
    let mut seeds_b2 = Vec::new();
    for d in 0..=p {
        for z in monomial_basis(n - 1, d + 1) {
            let zz = z.embed(0, n);
            // Grade (p - d) + (d + 1).
            if p < max_grade {
                seeds_b1.push(Polynomial::monomial(zz.mul(&zn(p - d))));
            }
            for c in 1.. {
                if c + p - d + d + 1 > max_grade {
                    break;
                }
                seeds_b2.push(Polynomial::monomial(zz.mul(&zn(c + p - d))));
            }
        }
    }
    Ok(ClaimPieces {
        a: gprime_span(&v, &seeds_a, max_grade)?,
        b1: gprime_span(&v, &seeds_b1, max_grade)?,
        b2: gprime_span(&v, &seeds_b2, max_grade)?,
    })
}

fn grade_part(ps: &[Polynomial], g: u32) -> Vec<Polynomial> {
    ps.iter()
        .map(|p| p.homogeneous_part(g))
        .filter(|p| !p.is_zero())
        .collect()
}

/// Full branching report.
#[derive(Clone, Debug, Serialize)]
pub struct BranchReport {
    pub n: usize,
    pub s: String,
    #[serde(rename = "D")]
    pub depth: u32,
    /// `[M(s)]` (or `[Im(phi_{p+1})]` for `s = p`).
    pub floor: String,
    pub character_lhs: Vec<WeightMultiplicity>,
    pub character_rhs: Vec<WeightMultiplicity>,
    pub invariant_counts: Vec<InvariantCount>,
    pub checks: Vec<NamedCheck>,
    pub status: Status,
}

/// Verifies the truncated branching statements at `s` (and, for `s = p` a
/// nonnegative integer, the decomposition of `Im(phi_{p+1})`).
pub fn verify_branching(n: usize, s: &Rational, depth: u32) -> Result<BranchReport> {
    let floor = s - int(depth as i64);
    let mut checks = Vec::new();

    // (a) [M(s)] = sum_m [M'(s - m)].
    let lhs_full = character_verma(n, s, depth)?;
    let parts: Vec<GradedCharacter> = (0..=depth)
        .map(|m| {
            character_of(
                &verma_gprime(n, &(s - int(m as i64))),
                SubmoduleFilter::Full,
                &floor,
            )
        })
        .collect::<Result<_>>()?;
    let rhs_full = character_sum(&parts, &floor);
    checks.push((
        "character M(s) = sum M'(s-m)".to_string(),
        lhs_full == rhs_full,
    ));

    let p = as_nonneg_int(s).map(|v| v as u32);
    let (lhs, rhs, inv_lhs, inv_rhs) = match p {
        None => {
            let inv = invariants_in(&verma_g(n, s), SubmoduleFilter::Full, &floor)?.counts();
            let mut pred = BTreeMap::new();
            for m in 0..=depth {
                pred.insert(s - int(m as i64), 1usize);
            }
            (lhs_full, rhs_full, inv, pred)
        }
        Some(p) => {
            let mp = verma_g(n, s);
            let im = character_of(&mp, SubmoduleFilter::GradesFrom(p + 1), &floor)?;
            let fin = character_of(&mp, SubmoduleFilter::GradesUpTo(p), &floor)?;
            checks.push((
                "character M(p) = Im(phi_{p+1}) + S^p".to_string(),
                lhs_full == im.add(&fin),
            ));

            // Classical branching of S^p(C^{n+1}).
            let mut classical = GradedCharacter::zero(floor.clone());
            for d in 0..=p {
                let md = verma_gprime(n, &int(d as i64));
                classical =
                    classical.add(&character_of(&md, SubmoduleFilter::GradesUpTo(d), &floor)?);
            }
            checks.push((
                "S^p(C^{n+1}) = sum_d S^d(C^n)".to_string(),
                fin == classical,
            ));

            // [Im phi_{p+1}] = sum_{d<=p} ([M'(d)] - [S^d]) + sum_{m>p} [M'(p-m)].
            let mut rhs = GradedCharacter::zero(floor.clone());
            let mut inv_rhs: BTreeMap<Rational, usize> = BTreeMap::new();
            for d in 0..=p {
                let md = verma_gprime(n, &int(d as i64));
                let full = character_of(&md, SubmoduleFilter::Full, &floor)?;
                let sd = character_of(&md, SubmoduleFilter::GradesUpTo(d), &floor)?;
                rhs = rhs.add(&full.sub(&sd));
                for (w, c) in
                    invariants_in(&md, SubmoduleFilter::GradesFrom(d + 1), &floor)?.counts()
                {
                    *inv_rhs.entry(w).or_insert(0) += c;
                }
            }
            for m in p + 1..=p + 1 + depth {
                let mm = verma_gprime(n, &(s - int(m as i64)));
                rhs = rhs.add(&character_of(&mm, SubmoduleFilter::Full, &floor)?);
                for (w, c) in invariants_in(&mm, SubmoduleFilter::Full, &floor)?.counts() {
                    *inv_rhs.entry(w).or_insert(0) += c;
                }
            }
            let inv = invariants_in(&mp, SubmoduleFilter::GradesFrom(p + 1), &floor)?.counts();

            // (A) ⊕ (B1) spans Im(phi_{p+1}) grade by grade; (B2) lies inside.
            let pieces = claim_pieces(n, p, depth)?;
            let mut spans = true;
            for g in 0..=depth {
                let a = grade_part(&pieces.a, g);
                let b1 = grade_part(&pieces.b1, g);
                let b2 = grade_part(&pieces.b2, g);
                let mut ab = a.clone();
                ab.extend(b1.iter().cloned());
                let im_dim = if g > p { mp.grade_dim(g) } else { 0 };
                let r_ab = span_rank(&ab);
                spans &= r_ab == im_dim && span_rank(&a) + span_rank(&b1) == r_ab;
                let mut all = ab;
                all.extend(b2);
                spans &= span_rank(&all) == r_ab;
            }
            checks.push((
                "(A) + (B1) spans Im(phi_{p+1}) directly, (B2) inside".to_string(),
                spans,
            ));
            (im, rhs, inv, inv_rhs)
        }
    };
    checks.push(("character identity".to_string(), lhs == rhs));
    let mut weights: Vec<Rational> = inv_lhs.keys().chain(inv_rhs.keys()).cloned().collect();
    weights.sort();
    weights.dedup();
    weights.reverse();
    let invariant_counts: Vec<InvariantCount> = weights
        .iter()
        .map(|w| InvariantCount {
            weight: format_rational(w),
            computed: inv_lhs.get(w).copied().unwrap_or(0),
            predicted: inv_rhs.get(w).copied().unwrap_or(0),
        })
        .collect();
    checks.push((
        "invariant counts".to_string(),
        invariant_counts.iter().all(|c| c.computed == c.predicted),
    ));
    let ok = checks.iter().all(|(_, b)| *b);
    let checks = checks
        .into_iter()
        .map(|(name, pass)| NamedCheck { name, pass })
        .collect();
    Ok(BranchReport {
        n,
        s: format_rational(s),
        depth,
        floor: format_rational(&floor),
        character_lhs: lhs.entries(),
        character_rhs: rhs.entries(),
        invariant_counts,
        checks,
        status: Status::from_bool(ok),
    })
}

/// Invariant counts of `Im(phi_{p+1})` per weight, as a map.
pub fn image_invariant_counts(n: usize, p: u32, depth: u32) -> Result<BTreeMap<Rational, usize>> {
    let s = int(p as i64);
    let floor = &s - int(depth as i64);
    Ok(invariants_in(&verma_g(n, &s), SubmoduleFilter::GradesFrom(p + 1), &floor)?.counts())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn verma_weights_n2() {
        let s = rat(1, 3);
        let ch = character_verma(2, &s, 2).unwrap();
        assert_eq!(ch.get(&s), 1);
        assert_eq!(ch.get(&(&s - int(1))), 1);
        assert_eq!(ch.get(&(&s - int(2))), 2);
        assert_eq!(ch.mults.len(), 3);
    }

    #[test]
    fn invariants_n2() {
        let s = rat(1, 3);
        let floor = &s - int(5);
        let inv = invariants_in(&verma_g(2, &s), SubmoduleFilter::Full, &floor).unwrap();
        assert!(inv.counts().values().all(|&c| c == 1));
        let v0 = verma_g(2, &int(0));
        let inv = invariants_in(&v0, SubmoduleFilter::Full, &int(-3)).unwrap();
        // Grade 1 of M(0) is fully invariant.
        assert_eq!(inv.count(&int(-1)), 1);
        assert_eq!(inv.count(&int(-2)), 2);
        let im = invariants_in(&v0, SubmoduleFilter::GradesFrom(1), &int(-3)).unwrap();
        let mut got = im.symbols(&int(-2), &v0);
        got.sort();
        assert_eq!(got, vec!["zeta1", "zeta2^2"]);
    }

    #[test]
    fn reports_pass() {
        for (n, s, d) in [(2, rat(1, 3), 6), (2, int(0), 6), (3, int(1), 5)] {
            let r = verify_branching(n, &s, d).unwrap();
            assert!(r.status.ok(), "{:?}", r.checks);
        }
    }
}
