use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Divisibility,
    FloorIdentity,
    QPolynomiality,
    QPositivity,
    Unimodality,
    Parity,
    ValuationBound,
}

impl ClaimKind {
    pub const ALL: [ClaimKind; 7] = [
        ClaimKind::Divisibility,
        ClaimKind::FloorIdentity,
        ClaimKind::QPolynomiality,
        ClaimKind::QPositivity,
        ClaimKind::Unimodality,
        ClaimKind::Parity,
        ClaimKind::ValuationBound,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Divisibility => "divisibility",
            ClaimKind::FloorIdentity => "floor-identity",
            ClaimKind::QPolynomiality => "q-polynomiality",
            ClaimKind::QPositivity => "q-positivity",
            ClaimKind::Unimodality => "unimodality",
            ClaimKind::Parity => "parity",
            ClaimKind::ValuationBound => "valuation-bound",
        }
    }
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.as_str())
    }
}

impl FromStr for ClaimKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ClaimKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| format!("unknown claim kind `{s}`"))
    }
}

/// Sweep parameter names, in the order reports list them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Param {
    A,
    B,
    M,
    N,
}

impl Param {
    pub fn as_str(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::B => "b",
            Param::M => "m",
            Param::N => "n",
        }
    }
}

/// Upper bounds for the sweep parameters; `None` means the claim does not
/// take that parameter.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub m: Option<u64>,
    pub n: Option<u64>,
}

impl Bounds {
    pub const fn n(n: u64) -> Self {
        Bounds {
            a: None,
            b: None,
            m: None,
            n: Some(n),
        }
    }

    pub const fn abn(a: u64, b: u64, n: u64) -> Self {
        Bounds {
            a: Some(a),
            b: Some(b),
            m: None,
            n: Some(n),
        }
    }

    pub const fn abmn(v: u64) -> Self {
        Bounds {
            a: Some(v),
            b: Some(v),
            m: Some(v),
            n: Some(v),
        }
    }

    pub const NONE: Bounds = Bounds {
        a: None,
        b: None,
        m: None,
        n: None,
    };

    pub fn get(&self, p: Param) -> Option<u64> {
        match p {
            Param::A => self.a,
            Param::B => self.b,
            Param::M => self.m,
            Param::N => self.n,
        }
    }

    pub fn set(&mut self, p: Param, v: u64) {
        let slot = match p {
            Param::A => &mut self.a,
            Param::B => &mut self.b,
            Param::M => &mut self.m,
            Param::N => &mut self.n,
        };
        *slot = Some(v);
    }

    pub fn params(&self) -> Vec<Param> {
        [Param::A, Param::B, Param::M, Param::N]
            .into_iter()
            .filter(|&p| self.get(p).is_some())
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub kind: ClaimKind,
    /// Short citation of the statement being checked.
    pub anchor: &'static str,
    /// Open conjectures report failures as counterexamples rather than bugs.
    pub conjecture: bool,
    /// Smallest `n` swept.
    pub n_min: u64,
    pub defaults: Bounds,
    /// Hard caps; a q-claim is additionally capped by expansion degree.
    pub caps: Bounds,
}

const fn record(
    id: &'static str,
    kind: ClaimKind,
    anchor: &'static str,
    conjecture: bool,
    n_min: u64,
    defaults: Bounds,
    caps: Bounds,
) -> ClaimRecord {
    ClaimRecord {
        id,
        kind,
        anchor,
        conjecture,
        n_min,
        defaults,
        caps,
    }
}

/// Largest number of coefficients a single q-expansion may have.
pub const MAX_Q_DEGREE: u64 = 20_000;

use ClaimKind::*;

/// Sorted by id.
static CLAIMS: [ClaimRecord; 25] = [
    record(
        "conj-7.1",
        Divisibility,
        "(2bn+1)(2bn+3) C(2bn,bn) | 3(a-b)(3a-b) C(2an,an) C(an,bn), a > b",
        true,
        1,
        Bounds::abn(6, 5, 40),
        Bounds::abn(30, 29, 400),
    ),
    record(
        "conj-7.3",
        QPositivity,
        "the five q-expressions built on [6n]![n]!/([3n]![2n]!^2) have nonnegative coefficients",
        true,
        1,
        Bounds::n(12),
        Bounds::n(40),
    ),
    record(
        "conj-7.4-unimodal",
        Unimodality,
        "[6n]![n]!/([3n]![2n]!^2) is unimodal (and reciprocal), n >= 2",
        true,
        2,
        Bounds::n(12),
        Bounds::n(40),
    ),
    record(
        "conj-7.5",
        QPositivity,
        "the two q-expressions built on [15n]![2n]!/([10n]![4n]![3n]!) have nonnegative coefficients",
        true,
        1,
        Bounds::n(12),
        Bounds::n(19),
    ),
    record(
        "cor-1.5",
        Divisibility,
        "6 C(2n,n)/(n+2), 30 C(2n,n)/(n+3), 140 C(2n,n)/(n+4), 630 C(2n,n)/(n+5) are integers",
        false,
        1,
        Bounds::n(5000),
        Bounds::n(50_000),
    ),
    record(
        "cor-6.2",
        QPositivity,
        "(1-q^{am})/(1-q^{m+n}) [am+bm-1, am][an+bn, an] has nonnegative coefficients",
        false,
        1,
        Bounds::abmn(5),
        Bounds::abmn(40),
    ),
    record(
        "lem-2.1",
        FloorIdentity,
        "Landau: the ratio is integral iff sum floor(a_i x) - sum floor(b_j x) >= 0",
        false,
        1,
        Bounds::NONE,
        Bounds::NONE,
    ),
    record(
        "lem-2.2",
        FloorIdentity,
        "floor(6n/m) + floor(n/m) = floor(3n/m) + 2 floor(2n/m) + 1, m | 2n+3, m >= 5",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-2.3",
        FloorIdentity,
        "floor identity for (15n)!(2n)!/((10n)!(4n)!(3n)!), m | 10n+3, m >= 9",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-5.1",
        FloorIdentity,
        "the sextuple floor identity for m | 2n+5 (m >= 9), m | 2n+7 (m >= 11), m | 2n+9 (m >= 15)",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-5.1-ext",
        FloorIdentity,
        "the sextuple floor identity for m = 3, m | 2n+7",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-5.2",
        FloorIdentity,
        "the fifteen-fold floor identity for m | 2n+1 (m >= 15), m | 10n+7 (m >= 21), m | 10n+9 (m >= 27)",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-5.2-ext",
        FloorIdentity,
        "the fifteen-fold floor identity for m in {7, 13, 17}, m | 10n+7",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "lem-5.2-ext-10n+9",
        FloorIdentity,
        "the fifteen-fold floor identity for m in {7, 13, 17}, m | 10n+9",
        false,
        1,
        Bounds::n(500),
        Bounds::n(1_000_000),
    ),
    record(
        "ord2-digit-sum",
        ValuationBound,
        "ord_2((6n)!n!/((3n)!(2n)!^2)) = s_2(n)",
        false,
        1,
        Bounds::n(100_000),
        Bounds::n(10_000_000),
    ),
    record(
        "parity-power-of-2",
        Parity,
        "S_n is odd iff n is a power of 2",
        false,
        1,
        Bounds::n(10_000),
        Bounds::n(50_000),
    ),
    record(
        "thm-1.1",
        Divisibility,
        "3 S_n = 0 (mod 2n+3)",
        false,
        1,
        Bounds::n(1000),
        Bounds::n(20_000),
    ),
    record(
        "thm-1.2",
        Divisibility,
        "21 t_n = 0 (mod 10n+3)",
        false,
        1,
        Bounds::n(1000),
        Bounds::n(10_000),
    ),
    record(
        "thm-1.3",
        Divisibility,
        "105 S_n, 315 S_n, 6435 S_n mod 2n+5, 2n+7, 2n+9; 3003 t_n, 88179 t_n, 43263 t_n mod 2n+1, 10n+7, 10n+9",
        false,
        1,
        Bounds::n(1000),
        Bounds::n(10_000),
    ),
    record(
        "thm-1.4",
        Divisibility,
        "abm/((a+b)(m+n)) C(am+bm,am) C(an+bn,an) = am/(m+n) C(am+bm-1,am) C(an+bn,an) is an integer",
        false,
        1,
        Bounds::abmn(12),
        Bounds::abmn(60),
    ),
    record(
        "thm-6.1",
        QPositivity,
        "(1-q^{gcd(am,m+n)})/(1-q^{m+n}) [am+bm-1, am][an+bn, an] has nonnegative coefficients",
        false,
        1,
        Bounds::abmn(5),
        Bounds::abmn(40),
    ),
    record(
        "thm-7.2",
        QPolynomiality,
        "(1-q^k)/(1-q^{2n+k}) style multiples of [6n]![n]!/([3n]![2n]!^2) are polynomials",
        false,
        1,
        Bounds::n(20),
        Bounds::n(40),
    ),
    record(
        "thm-7.4",
        QPolynomiality,
        "(1-q)/(1-q^{10n+1}) and (1-q^3)(1-q^7)/((1-q)(1-q^{10n+3})) times [15n]![2n]!/([10n]![4n]![3n]!) are polynomials",
        false,
        1,
        Bounds::n(12),
        Bounds::n(19),
    ),
    record(
        "valuation-bounds",
        ValuationBound,
        "odd-prime orders of the auxiliary ratios are cleared by 3, 21, 105, 43263",
        false,
        1,
        Bounds::n(500),
        Bounds::n(100_000),
    ),
    record(
        "wz-positivity",
        QPositivity,
        "[6n]![n]!/([3n]![2n]!^2) has nonnegative coefficients",
        false,
        1,
        Bounds::n(12),
        Bounds::n(40),
    ),
];

pub fn claims() -> &'static [ClaimRecord] {
    &CLAIMS
}

pub fn lookup(id: &str) -> Option<&'static ClaimRecord> {
    CLAIMS.iter().find(|c| c.id == id)
}

/// Registry entries, optionally restricted to one kind (an unknown kind
/// simply matches nothing).
pub fn list_claims(kind: Option<&str>) -> Vec<&'static ClaimRecord> {
    CLAIMS
        .iter()
        .filter(|c| kind.is_none_or(|k| c.kind.as_str() == k))
        .collect()
}
