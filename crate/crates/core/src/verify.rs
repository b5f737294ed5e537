//! Named verification suites, one per family of identities.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;

use crate::chebyshev::{self, ChebKind};
use crate::check::{self, compare_poly, Mismatch, Verdict};
use crate::error::Error;
use crate::exact::{rat, Rational, PiScaled};
use crate::expansions::{cross_validate, Family};
use crate::families::{self, Classical, IdentityForm};
use crate::moments::{inner_t, inner_u, moment, moment_oracle, MomentKey, WeightSign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VerifyTarget {
    Expansion(Family, ChebKind),
    Orthogonality(ChebKind),
    Rodrigues(ChebKind),
    Surd(ChebKind),
    GenFunc(ChebKind),
    Calculus,
    ClassicalIdentities,
    Moments,
}

impl VerifyTarget {
    pub fn all() -> Vec<VerifyTarget> {
        let mut out = Vec::new();
        for kind in ChebKind::ALL {
            for family in [Family::Bernoulli, Family::Euler, Family::Hermite, Family::Monomial] {
                out.push(VerifyTarget::Expansion(family, kind));
            }
        }
        for kind in ChebKind::ALL {
            out.push(VerifyTarget::Orthogonality(kind));
        }
        for kind in ChebKind::ALL {
            out.push(VerifyTarget::Rodrigues(kind));
        }
        for kind in ChebKind::ALL {
            out.push(VerifyTarget::Surd(kind));
        }
        for kind in ChebKind::ALL {
            out.push(VerifyTarget::GenFunc(kind));
        }
        out.extend([VerifyTarget::Calculus, VerifyTarget::ClassicalIdentities, VerifyTarget::Moments]);
        out
    }

    pub fn id(self) -> String {
        match self {
            VerifyTarget::Expansion(f, k) => format!("{}-{}", f.name(), k.letter()),
            VerifyTarget::Orthogonality(k) => format!("orthogonality-{}", k.letter()),
            VerifyTarget::Rodrigues(k) => format!("rodrigues-{}", k.letter()),
            VerifyTarget::Surd(k) => format!("surd-{}", k.letter()),
            VerifyTarget::GenFunc(k) => format!("genfunc-{}", k.letter()),
            VerifyTarget::Calculus => "calculus".into(),
            VerifyTarget::ClassicalIdentities => "identities-8-9-10".into(),
            VerifyTarget::Moments => "moments".into(),
        }
    }

    /// Parses a target id; `all` expands to every target.
    pub fn parse_many(s: &str) -> Result<Vec<VerifyTarget>, Error> {
        if s == "all" {
            return Ok(VerifyTarget::all());
        }
        s.parse().map(|t| vec![t])
    }

    pub fn run(self, max_n: usize, options: VerifyOptions) -> TargetReport {
        let checks = match self {
            VerifyTarget::Expansion(family, kind) => (0..=max_n)
                .into_par_iter()
                .map(|n| Check::new(format!("n={n}"), cross_validate(family, kind, n).verdict))
                .collect(),
            VerifyTarget::Orthogonality(kind) => orthogonality(kind, max_n),
            VerifyTarget::Rodrigues(kind) => (0..=max_n)
                .into_par_iter()
                .map(|n| {
                    let built = match kind {
                        ChebKind::FirstKind => chebyshev::cheb_t_rodrigues(n),
                        ChebKind::SecondKind => chebyshev::cheb_u_rodrigues(n),
                    };
                    let label = format!("rodrigues-{kind}");
                    Check::new(format!("n={n}"), route_verdict(&label, n, kind, built))
                })
                .collect(),
            VerifyTarget::Surd(kind) => (0..=max_n)
                .into_par_iter()
                .map(|n| {
                    let built = match kind {
                        ChebKind::FirstKind => chebyshev::cheb_t_surd(n),
                        ChebKind::SecondKind => chebyshev::cheb_u_surd(n),
                    };
                    let label = format!("surd-{kind}");
                    Check::new(format!("n={n}"), route_verdict(&label, n, kind, built))
                })
                .collect(),
            VerifyTarget::GenFunc(kind) => [Rational::zero(), rat(1, 1), rat(-1, 1), rat(1, 2)]
                .into_iter()
                .map(|x0| Check::new(format!("x0={x0} order={max_n}"), chebyshev::gen_func_check(kind, &x0, max_n)))
                .collect(),
            VerifyTarget::Calculus => (0..=max_n)
                .into_par_iter()
                .map(|n| {
                    let verdict = check::all([
                        chebyshev::verify_cheb_calculus(n).verdict(),
                        families::verify_bernoulli_calculus(n),
                        families::verify_hermite_calculus(n),
                        chebyshev::verify_ode(ChebKind::FirstKind, n),
                        chebyshev::verify_ode(ChebKind::SecondKind, n),
                        chebyshev::verify_structure(ChebKind::FirstKind, n),
                        chebyshev::verify_structure(ChebKind::SecondKind, n),
                    ]);
                    Check::new(format!("n={n}"), verdict)
                })
                .collect(),
            VerifyTarget::ClassicalIdentities => classical_identities(max_n, options),
            VerifyTarget::Moments => moments(max_n),
        };
        TargetReport { id: self.id(), checks }
    }
}

impl fmt::Display for VerifyTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

impl FromStr for VerifyTarget {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        VerifyTarget::all()
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| Error::Unknown { what: "verify target", value: s.to_owned() })
    }
}

/// Opt-in checks of the non-identity variants, known to fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub literal_eq8: bool,
    pub literal_eq9: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub label: String,
    pub verdict: Verdict,
}

impl Check {
    fn new(label: String, verdict: Verdict) -> Self {
        Check { label, verdict }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetReport {
    pub id: String,
    pub checks: Vec<Check>,
}

impl TargetReport {
    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.verdict.is_ok()).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    /// One `PASS`/`FAIL` line per check, then a summary line.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match &c.verdict {
                Ok(()) => out.push_str(&format!("PASS {} {}\n", self.id, c.label)),
                Err(m) => out.push_str(&format!("FAIL {} {} :: {}\n", self.id, c.label, m)),
            }
        }
        out.push_str(&format!("{}: {}/{} passed\n", self.id, self.passed(), self.checks.len()));
        out
    }
}

/// Runs targets in parallel; reports come back in the order given.
pub fn run_targets(targets: &[VerifyTarget], max_n: usize, options: VerifyOptions) -> Vec<TargetReport> {
    targets.par_iter().map(|t| t.run(max_n, options)).collect()
}

fn route_verdict(label: &str, n: usize, kind: ChebKind, built: crate::error::Result<crate::poly::Poly>) -> Verdict {
    match built {
        Ok(p) => compare_poly(label, n, &kind.poly(n), &p),
        Err(e) => Err(Mismatch::new(label, n).values(kind.poly(n), e)),
    }
}

fn orthogonality(kind: ChebKind, max_n: usize) -> Vec<Check> {
    let table = kind.table(max_n);
    let mut out = Vec::with_capacity((max_n + 1) * (max_n + 1));
    for i in 0..=max_n {
        for j in 0..=max_n {
            let (actual, expected) = match kind {
                ChebKind::FirstKind => (
                    inner_t(&table[i], &table[j]),
                    match (i == j, i) {
                        (false, _) => PiScaled::zero(),
                        (true, 0) => PiScaled::pi(),
                        (true, _) => PiScaled::new(rat(1, 2)),
                    },
                ),
                ChebKind::SecondKind => (
                    inner_u(&table[i], &table[j]),
                    if i == j { PiScaled::new(rat(1, 2)) } else { PiScaled::zero() },
                ),
            };
            let verdict = if actual == expected {
                Ok(())
            } else {
                Err(Mismatch::new(format!("orthogonality-{kind} i={i} j={j}"), None).values(&expected, &actual))
            };
            out.push(Check::new(format!("i={i} j={j}"), verdict));
        }
    }
    out
}

fn classical_identities(max_n: usize, options: VerifyOptions) -> Vec<Check> {
    let form = |literal: bool| if literal { IdentityForm::Literal } else { IdentityForm::Corrected };
    let mut out: Vec<Check> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let verdict = check::all([
                families::verify_bernoulli_euler_identity(n, form(options.literal_eq8)),
                families::verify_euler_self_identity(n, form(options.literal_eq9)),
                families::verify_monomial_bernoulli_identity(n),
            ]);
            Check::new(format!("n={n}"), verdict)
        })
        .collect();
    out.push(Check::new("series B_n".into(), families::bernoulli_series_check(max_n)));
    out.push(Check::new("series E_n".into(), families::euler_series_check(max_n)));
    for family in Classical::ALL {
        out.push(Check::new(
            format!("series {}_n(x)", family.symbol()),
            families::polynomial_series_check(family, max_n),
        ));
    }
    out
}

fn moments(max_n: usize) -> Vec<Check> {
    let mut keys = Vec::new();
    for sign in WeightSign::ALL {
        for k in 0..=max_n {
            keys.push((sign, k));
        }
    }
    keys.into_par_iter()
        .map(|(sign, k)| {
            let verdict = (0..=2 * max_n).try_for_each(|m| {
                let key = MomentKey::new(k, sign, m);
                let (closed, oracle) = (moment(key), moment_oracle(key));
                if closed == oracle {
                    Ok(())
                } else {
                    Err(Mismatch::new(format!("moment-{sign} k={k}"), None).at(m).values(&oracle, &closed))
                }
            });
            Check::new(format!("{sign} k={k} m<={}", 2 * max_n), verdict)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_ids_are_unique_and_parse() {
        let all = VerifyTarget::all();
        assert_eq!(all.len(), 19);
        for t in &all {
            assert_eq!(t.id().parse::<VerifyTarget>().unwrap(), *t);
        }
        assert_eq!(VerifyTarget::parse_many("all").unwrap().len(), 19);
        assert!(VerifyTarget::parse_many("legendre-T").is_err());
    }

    #[test]
    fn orthogonality_counts() {
        let r = VerifyTarget::Orthogonality(ChebKind::FirstKind).run(12, VerifyOptions::default());
        assert_eq!(r.checks.len(), 169);
        assert!(r.all_passed());
    }

    #[test]
    fn literal_bernoulli_via_euler_fails_at_two() {
        let opts = VerifyOptions { literal_eq8: true, ..Default::default() };
        let r = VerifyTarget::ClassicalIdentities.run(10, opts);
        let failing: Vec<_> = r.checks.iter().filter(|c| c.verdict.is_err()).map(|c| c.label.as_str()).collect();
        assert_eq!(failing.first(), Some(&"n=2"));
        assert!(r.render().contains("FAIL identities-8-9-10 n=2 :: bernoulli-via-euler-literal n=2 k=0: expected 1/6, got 1"));
    }

    #[test]
    fn trivial_run() {
        let r = VerifyTarget::Expansion(Family::Bernoulli, ChebKind::SecondKind).run(0, VerifyOptions::default());
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.render(), "PASS bernoulli-U n=0\nbernoulli-U: 1/1 passed\n");
    }
}
