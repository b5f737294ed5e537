//! Text, JSON and LaTeX renderings shared by the CLI and the C ABI.
//!
//! The JSON records are the stable interchange format: compact, fields in a
//! fixed order, rationals as canonical `p/q` strings.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::chebyshev::ChebKind;
use crate::error::Error;
use crate::exact::{render, Rational};
use crate::expansions::{Expansion, Family, Source};
use crate::families::Classical;
use crate::poly::Poly;

/// Polynomial families that can be constructed directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolyFamily {
    Classical(Classical),
    Chebyshev(ChebKind),
}

impl PolyFamily {
    pub const ALL: [PolyFamily; 5] = [
        PolyFamily::Classical(Classical::Bernoulli),
        PolyFamily::Classical(Classical::Euler),
        PolyFamily::Classical(Classical::Hermite),
        PolyFamily::Chebyshev(ChebKind::FirstKind),
        PolyFamily::Chebyshev(ChebKind::SecondKind),
    ];

    pub fn name(self) -> &'static str {
        match self {
            PolyFamily::Classical(c) => c.name(),
            PolyFamily::Chebyshev(ChebKind::FirstKind) => "chebyshev-t",
            PolyFamily::Chebyshev(ChebKind::SecondKind) => "chebyshev-u",
        }
    }

    pub fn poly(self, n: usize) -> Poly {
        match self {
            PolyFamily::Classical(c) => c.poly(n),
            PolyFamily::Chebyshev(k) => k.poly(n),
        }
    }
}

impl fmt::Display for PolyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PolyFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown { what: "polynomial family", value: s.to_owned() })
    }
}

/// `{"family":"hermite","n":3,"coefficients":["0","-12","0","8"]}`, ascending powers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub family: String,
    pub n: usize,
    pub coefficients: Vec<String>,
}

impl PolyRecord {
    pub fn new(family: PolyFamily, n: usize, poly: &Poly) -> Self {
        PolyRecord { family: family.name().to_owned(), n, coefficients: poly.coeffs().iter().map(render).collect() }
    }
}

/// `{"family":"bernoulli","basis":"T","n":3,"coefficients":[...],"source":"closed_form"}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpansionRecord {
    pub family: Family,
    pub basis: ChebKind,
    pub n: usize,
    pub coefficients: Vec<String>,
    pub source: Source,
}

impl ExpansionRecord {
    pub fn new(family: Family, kind: ChebKind, n: usize, expansion: &Expansion) -> Self {
        ExpansionRecord {
            family,
            basis: kind,
            n,
            coefficients: expansion.coefficients.iter().map(render).collect(),
            source: expansion.source,
        }
    }

    pub fn rationals(&self) -> Result<Vec<Rational>, Error> {
        self.coefficients
            .iter()
            .map(|s| s.parse().map_err(|_| Error::Unknown { what: "rational", value: s.clone() }))
            .collect()
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("records serialize")
}

fn subscript(k: usize) -> String {
    if k < 10 {
        format!("_{k}")
    } else {
        format!("_{{{k}}}")
    }
}

fn latex_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

pub fn latex_lhs(family: Family, n: usize) -> String {
    match family.classical() {
        None if n < 10 => format!("x^{n}"),
        None => format!("x^{{{n}}}"),
        Some(c) => format!("{}{}(x)", c.symbol(), subscript(n)),
    }
}

fn join_terms(terms: impl Iterator<Item = (bool, String)>) -> String {
    let mut out = String::new();
    for (negative, body) in terms {
        match (out.is_empty(), negative) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `-\frac{3}{4}T_0(x) + \frac{5}{4}T_1(x) - ...`
pub fn latex_rhs(kind: ChebKind, coefficients: &[Rational]) -> String {
    join_terms(coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
        let magnitude = c.abs();
        let basis = format!("{}{}(x)", kind.letter(), subscript(k));
        let body = if magnitude.is_one() { basis } else { format!("{}{basis}", latex_rational(&magnitude)) };
        (c.is_negative(), body)
    }))
}

pub fn latex_identity(family: Family, kind: ChebKind, n: usize, coefficients: &[Rational]) -> String {
    format!("{} = {}", latex_lhs(family, n), latex_rhs(kind, coefficients))
}

/// Plain-text identity: `B_1(x) = -1/2·T_0(x) + 1·T_1(x)`.
pub fn text_identity(family: Family, kind: ChebKind, n: usize, coefficients: &[Rational]) -> String {
    let rhs = join_terms(coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, c)| {
        (c.is_negative(), format!("{}·{}_{}(x)", c.abs(), kind.letter(), k))
    }));
    format!("{} = {}", family.lhs(n), rhs)
}

/// Two columns, `k` and `C_k`, nonzero coefficients only.
pub fn table_rows(coefficients: &[Rational]) -> String {
    let mut out = String::from("k\tC_k\n");
    for (k, c) in coefficients.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        out.push_str(&format!("{k}\t{c}\n"));
    }
    out
}

/// An `align*` block with one identity per line.
pub fn latex_align(lines: &[(Family, ChebKind, usize, Vec<Rational>)]) -> String {
    let body: Vec<String> = lines
        .iter()
        .map(|(family, kind, n, c)| format!("{} &= {}", latex_lhs(*family, *n), latex_rhs(*kind, c)))
        .collect();
    format!("\\begin{{align*}}\n{}\n\\end{{align*}}\n", body.join(" \\\\\n"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::expansions::{expand_bernoulli_t, expand_hermite_t};

    #[test]
    fn expansion_json_layout() {
        let e = expand_bernoulli_t(3);
        let rec = ExpansionRecord::new(Family::Bernoulli, ChebKind::FirstKind, 3, &e);
        assert_eq!(
            to_json(&rec),
            r#"{"family":"bernoulli","basis":"T","n":3,"coefficients":["-3/4","5/4","-3/4","1/4"],"source":"closed_form"}"#
        );
        let back: ExpansionRecord = serde_json::from_str(&to_json(&rec)).unwrap();
        assert_eq!(back, rec);
        assert_eq!(back.rationals().unwrap(), e.coefficients);
    }

    #[test]
    fn poly_json_layout() {
        let rec = PolyRecord::new(PolyFamily::Classical(Classical::Hermite), 3, &Classical::Hermite.poly(3));
        assert_eq!(to_json(&rec), r#"{"family":"hermite","n":3,"coefficients":["0","-12","0","8"]}"#);
    }

    #[test]
    fn latex_rendering() {
        let e = expand_bernoulli_t(3);
        assert_eq!(
            latex_identity(Family::Bernoulli, ChebKind::FirstKind, 3, &e.coefficients),
            r"B_3(x) = -\frac{3}{4}T_0(x) + \frac{5}{4}T_1(x) - \frac{3}{4}T_2(x) + \frac{1}{4}T_3(x)"
        );
        assert_eq!(latex_rhs(ChebKind::SecondKind, &[int(0), int(-1), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(0), int(2)]), "-U_1(x) + 2U_{10}(x)");
        assert_eq!(latex_lhs(Family::Hermite, 12), "H_{12}(x)");
        assert_eq!(latex_lhs(Family::Monomial, 12), "x^{12}");
    }

    #[test]
    fn text_rendering() {
        let e = expand_hermite_t(0);
        assert_eq!(text_identity(Family::Hermite, ChebKind::FirstKind, 0, &e.coefficients), "H_0(x) = 1·T_0(x)");
        assert_eq!(
            text_identity(Family::Bernoulli, ChebKind::FirstKind, 1, &[rat(-1, 2), int(1)]),
            "B_1(x) = -1/2·T_0(x) + 1·T_1(x)"
        );
        assert_eq!(table_rows(&[rat(1, 4), int(0), rat(1, 4)]), "k\tC_k\n0\t1/4\n2\t1/4\n");
    }

    #[test]
    fn family_names() {
        for f in PolyFamily::ALL {
            assert_eq!(f.name().parse::<PolyFamily>().unwrap(), f);
        }
        assert!("chebyshev-v".parse::<PolyFamily>().is_err());
    }
}
