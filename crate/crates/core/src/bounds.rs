//! Exact finite-`n` checks of the analytic estimates behind the covering
//! results: the hook bound, the inequality chain for almost-derangements,
//! the orbit-size statistic `E`, the AM-GM product bound and the minimal
//! degree of split characters.
//!
//! Every assertion is decided in exact arithmetic. Square roots are removed
//! by squaring, and logarithms only ever appear with integer arguments.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use crate::characters::{self, hook_size, sign_with_root, sign_with_two_roots, DEFAULT_TABLE_LIMIT};
use crate::combinatorics::Partition;
use crate::error::{Error, Result};
use crate::permutations::Permutation;

pub const BOUNDS_SCHEMA: &str = "anclass.bounds/1";

/// Largest `n` for the exhaustive AM-GM scan.
pub const AMGM_LIMIT: usize = 40;

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

fn rational_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `rational + sum coeff_c * log_n(c)` over integer atoms `c`.
///
/// Atoms are normalized: `log_n(1)` vanishes and `log_n(n)` becomes `1`.
#[derive(Clone, PartialEq, Eq)]
pub struct LogForm {
    base: u64,
    rational: BigRational,
    logs: BTreeMap<u64, BigRational>,
}

impl LogForm {
    pub fn zero(base: u64) -> Self {
        LogForm { base, rational: BigRational::zero(), logs: BTreeMap::new() }
    }

    pub fn constant(base: u64, r: BigRational) -> Self {
        LogForm { base, rational: r, logs: BTreeMap::new() }
    }

    /// `log_base(c)`; counts of zero are read as `1`.
    pub fn log(base: u64, c: u64) -> Self {
        let mut f = Self::zero(base);
        f.add_log(c, &BigRational::one());
        f
    }

    fn add_log(&mut self, c: u64, coeff: &BigRational) {
        if c <= 1 || coeff.is_zero() {
            return;
        }
        if c == self.base {
            self.rational += coeff;
            return;
        }
        let e = self.logs.entry(c).or_insert_with(BigRational::zero);
        *e += coeff;
        if e.is_zero() {
            self.logs.remove(&c);
        }
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.rational
    }

    pub fn log_terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.logs.iter().map(|(&c, r)| (c, r))
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.logs.is_empty()
    }

    pub fn add(&self, other: &LogForm) -> LogForm {
        let mut out = self.clone();
        out.rational += &other.rational;
        for (&c, r) in &other.logs {
            out.add_log(c, r);
        }
        out
    }

    pub fn sub(&self, other: &LogForm) -> LogForm {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, k: &BigRational) -> LogForm {
        let mut out = LogForm::constant(self.base, &self.rational * k);
        for (&c, r) in &self.logs {
            out.add_log(c, &(r * k));
        }
        out
    }

    /// Floating-point value, for display only.
    pub fn approx(&self) -> f64 {
        let ln_base = (self.base as f64).ln();
        self.logs.iter().fold(rational_f64(&self.rational), |acc, (&c, r)| acc + rational_f64(r) * (c as f64).ln() / ln_base)
    }
}

impl fmt::Display for LogForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        if !self.rational.is_zero() || self.logs.is_empty() {
            terms.push(self.rational.to_string());
        }
        for (c, r) in &self.logs {
            terms.push(format!("{r}*log_{}({c})", self.base));
        }
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::Debug for LogForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LogForm({self})")
    }
}

/// Orbit-size profile of a permutation of degree `n`.
///
/// With `c_k` the number of points in orbits of length at most `k`,
/// `e_1 + ... + e_k = log_n c_k` (read as `0` when `c_k = 0`).
#[derive(Clone, Debug)]
pub struct EProfile {
    n: usize,
    cycle_type: Partition,
    counts: Vec<u64>,
}

pub fn e_profile(g: &Permutation) -> Result<EProfile> {
    EProfile::from_cycle_type(&g.cycle_type())
}

impl EProfile {
    pub fn from_cycle_type(cycle_type: &Partition) -> Result<Self> {
        let n = cycle_type.n();
        if n < 2 {
            return Err(Error::Infeasible(format!("orbit profile needs degree at least 2, got {n}")));
        }
        let mut counts = vec![0u64; n];
        for &p in cycle_type.parts() {
            counts[p - 1] += p as u64;
        }
        for k in 1..n {
            counts[k] += counts[k - 1];
        }
        Ok(EProfile { n, cycle_type: cycle_type.clone(), counts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycle_type(&self) -> &Partition {
        &self.cycle_type
    }

    /// `c_1, ..., c_n`.
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `e_1 + ... + e_k`, for `0 <= k <= n`.
    pub fn prefix(&self, k: usize) -> LogForm {
        if k == 0 {
            return LogForm::zero(self.n as u64);
        }
        LogForm::log(self.n as u64, self.counts[k - 1])
    }

    /// `e_i` for `1 <= i <= n`.
    pub fn e(&self, i: usize) -> LogForm {
        self.prefix(i).sub(&self.prefix(i - 1))
    }

    pub fn es(&self) -> Vec<LogForm> {
        (1..=self.n).map(|i| self.e(i)).collect()
    }

    /// `E = sum e_i / i` by Abel summation:
    /// `E = 1/n + sum_{k<n} (e_1 + ... + e_k) / (k(k+1))`.
    pub fn big_e(&self) -> LogForm {
        let n = self.n as i64;
        let mut acc = LogForm::constant(self.n as u64, q(1, n));
        for k in 1..self.n {
            let k = k as i64;
            acc = acc.add(&self.prefix(k as usize).scale(&q(1, k * (k + 1))));
        }
        acc
    }

    /// `E` summed term by term, for cross-checking [`EProfile::big_e`].
    pub fn big_e_direct(&self) -> LogForm {
        (1..=self.n).fold(LogForm::zero(self.n as u64), |acc, i| acc.add(&self.e(i).scale(&q(1, i as i64))))
    }

    /// Every `e_i` is nonnegative: the counts never decrease.
    pub fn is_monotone(&self) -> bool {
        self.counts.windows(2).all(|w| w[0] <= w[1])
    }

    /// Number of cycles (fixed points included) of length at most `m`.
    pub fn small_cycles(&self, m: usize) -> usize {
        self.cycle_type.parts().iter().filter(|&&p| p <= m).count()
    }

    /// Decides `E <= log_n(M^2) + 1/(M+1)` under the hypothesis that at most
    /// `M` cycles have length at most `M`.
    ///
    /// `E - (s + (1 - s)/(M+1))` with `s = e_1 + ... + e_M` is a combination of
    /// the `e_i` with nonpositive coefficients, and the bound exceeds
    /// `s + (1 - s)/(M+1)` by at least `log_n(M^2) - s`, which is
    /// nonnegative exactly when `c_M <= M^2`. Both facts are integer checks.
    pub fn check_small_cycle_bound(&self, m: usize) -> SmallCycleCheck {
        let m_eff = m.min(self.n);
        let small = self.small_cycles(m);
        let hypothesis = small <= m;
        let c_m = if m_eff == 0 { 0 } else { self.counts[m_eff - 1] };
        let count_ok = (c_m as u128) <= (m as u128) * (m as u128);
        let monotone = self.is_monotone();
        let m1 = m as i64 + 1;
        // s + (1 - s)/(M+1) - E, expanded in the e_i.
        let s = self.prefix(m_eff);
        let reference = s.scale(&q(m1 - 1, m1)).add(&LogForm::constant(self.n as u64, q(1, m1)));
        let slack = reference.sub(&self.big_e());
        let mut decomposed = LogForm::zero(self.n as u64);
        for i in 1..=self.n {
            let coeff = if i <= m { q(i as i64 - 1, i as i64) } else { q(1, m1) - q(1, i as i64) };
            decomposed = decomposed.add(&self.e(i).scale(&coeff));
        }
        let identity_ok = slack == decomposed;
        let holds = hypothesis && count_ok && monotone && identity_ok;
        let bound_approx = ((m * m) as f64).ln() / (self.n as f64).ln() + 1.0 / (m as f64 + 1.0);
        SmallCycleCheck {
            m,
            small_cycles: small,
            hypothesis,
            count_m: c_m,
            count_within_m_squared: count_ok,
            monotone,
            slack_identity: identity_ok,
            holds,
            e_exact: self.big_e().to_string(),
            e_approx: self.big_e().approx(),
            bound_approx,
        }
    }
}

/// Outcome of [`EProfile::check_small_cycle_bound`].
#[derive(Clone, Debug, Serialize)]
pub struct SmallCycleCheck {
    pub m: usize,
    pub small_cycles: usize,
    pub hypothesis: bool,
    pub count_m: u64,
    pub count_within_m_squared: bool,
    pub monotone: bool,
    pub slack_identity: bool,
    /// The inequality is established; false whenever the hypothesis fails.
    pub holds: bool,
    pub e_exact: String,
    pub e_approx: f64,
    pub bound_approx: f64,
}

/// `sum_{0 <= i < k/2} C(ceil(n/2) - 1, i)`: bounds `|chi(g)|` for a hook
/// character of size `k` and `g` with at most one fixed point.
pub fn hook_bound(n: usize, k: usize) -> BigUint {
    let top = (n.div_ceil(2)).saturating_sub(1) as u64;
    (0..k.div_ceil(2) as u64).map(|i| binomial(top, i)).sum()
}

/// Result of comparing the hook bound with actual character values.
#[derive(Clone, Debug, Serialize)]
pub struct HookBoundReport {
    pub n: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    /// Largest observed `|chi(g)|` per hook size `k`, with the bound.
    pub per_size: Vec<(usize, u128, String)>,
}

impl HookBoundReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares [`hook_bound`] with `|chi_lambda(mu)|` for every hook `lambda`
/// and every cycle type `mu` with at most one fixed point.
pub fn hook_bound_check(n: usize) -> Result<HookBoundReport> {
    if n > DEFAULT_TABLE_LIMIT {
        return Err(Error::LimitExceeded { what: "hook bound scan", value: n, limit: DEFAULT_TABLE_LIMIT });
    }
    let mut cache = characters::mn::MnCache::new();
    let classes: Vec<Partition> = Partition::all(n).into_iter().filter(|mu| mu.fixed_points() <= 1).collect();
    let mut per: BTreeMap<usize, u128> = BTreeMap::new();
    let mut violations = Vec::new();
    let mut pairs = 0;
    for lambda in Partition::all(n).into_iter().filter(Partition::is_hook) {
        let k = hook_size(&lambda).expect("hook");
        let bound = hook_bound(n, k);
        for mu in &classes {
            let v = cache.value(&lambda, mu).unsigned_abs();
            pairs += 1;
            let e = per.entry(k).or_insert(0);
            *e = (*e).max(v);
            if BigUint::from(v) > bound {
                violations.push(format!("chi_{lambda}({mu}) = {v} exceeds {bound}"));
            }
        }
    }
    let per_size = per.into_iter().map(|(k, v)| (k, v, hook_bound(n, k).to_string())).collect();
    Ok(HookBoundReport { n, pairs_checked: pairs, violations, per_size })
}

/// `p + q*sqrt(r)` with rational `p, q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadValue {
    pub p: BigRational,
    pub q: BigRational,
    pub r: u64,
}

impl QuadValue {
    pub fn rational(p: BigRational) -> Self {
        QuadValue { p, q: BigRational::zero(), r: 1 }
    }

    pub fn cmp_rational(&self, x: &BigRational) -> Ordering {
        sign_with_root(&(&self.p - x), &self.q, self.r)
    }

    pub fn compare(&self, other: &QuadValue) -> Ordering {
        sign_with_two_roots(&(&self.p - &other.p), &self.q, self.r, &-other.q.clone(), other.r)
    }

    pub fn approx(&self) -> f64 {
        rational_f64(&self.p) + rational_f64(&self.q) * (self.r as f64).sqrt()
    }
}

impl fmt::Display for QuadValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.q.is_zero() {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{} + {}*sqrt({})", self.p, self.q, self.r)
        }
    }
}

/// Clause names, in the order of [`prop24_values`].
pub const PROP24_CLAUSES: [&str; 4] = ["i", "ii", "iii", "iii-wide"];

/// The quantities of the almost-derangement estimate at odd `n >= 7`.
///
/// (i) bounds the hook-character part of the character sum, (ii) and (iii)
/// bound the split-character part when the third element is or is not an
/// `n`-cycle. (iii) sums `C((n-1)/2, i)` over `i < (n-1)/4`; "iii-wide" sums
/// over `i < n/4`, the range of the hook bound itself.
pub fn prop24_values(n: usize) -> Result<[QuadValue; 4]> {
    if n.is_multiple_of(2) || n < 7 {
        return Err(Error::EvenOrSmallN(n));
    }
    let m = n as i64;
    let tail = q((m + 1) * (m + 1), 16) - int(6);
    let i = q(1, m - 1)
        + q(2, (m - 1) * (m - 2))
        + q(1, m - 2)
        + q(3, (m - 2) * (m - 3))
        + q(3, (m - 2) * (m - 4))
        + int(15) * tail / int((m - 2) * (m - 4) * (m - 6));
    let h = (n - 1) as u64 / 2;
    let central = BigRational::from_integer(binomial(2 * h, h).into());
    // ((sqrt n + 1)/2)^3 = ((3n + 1) + (n + 3) sqrt n) / 8
    let ii = QuadValue { p: q(3 * m + 1, 8) / &central, q: q(m + 3, 8) / &central, r: n as u64 };
    // ((sqrt n + 1)/2)^2 = ((n + 1) + 2 sqrt n) / 4
    let mixed = |bound: u64| {
        let s: BigUint = (0..=h).filter(|&i| 4 * i < bound).map(|i| binomial(h, i)).sum();
        let s = BigRational::from_integer(s.into()) / &central;
        QuadValue { p: q(m + 1, 4) * &s, q: q(2, 4) * &s, r: n as u64 }
    };
    let iii = mixed(n as u64 - 1);
    let wide = mixed(n as u64);
    Ok([QuadValue::rational(i), ii, iii, wide])
}

/// The product form of the upper estimate for clause (iii):
/// `((sqrt n + 1)/2)^2 / 2 * prod_{i <= (n-1)/2} i/(2i-1)`.
fn prop24_iii_upper(n: usize) -> QuadValue {
    let h = (n - 1) as i64 / 2;
    let prod = (1..=h).fold(BigRational::one(), |acc, i| acc * q(i, 2 * i - 1));
    QuadValue { p: q(n as i64 + 1, 8) * &prod, q: q(2, 8) * prod, r: n as u64 }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClauseResult {
    pub clause: &'static str,
    pub exact: String,
    pub approx: f64,
    pub bound: String,
    pub below_bound: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Prop24Report {
    pub schema: &'static str,
    pub n: usize,
    /// False below 13, where the estimate is not claimed.
    pub asserted: bool,
    pub clauses: Vec<ClauseResult>,
    /// Clause (iii) is at most its product-form upper estimate.
    pub product_form_dominates: bool,
    /// The central binomial matches `prod (4i-2)/i`.
    pub product_identity: bool,
}

impl Prop24Report {
    /// True when the estimate is claimed and every clause holds; always true
    /// for report-only `n`.
    pub fn pass(&self) -> bool {
        !self.asserted || (self.clauses.iter().all(|c| c.below_bound) && self.product_form_dominates && self.product_identity)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\nasserted {}\n", self.n, self.asserted);
        for c in &self.clauses {
            s += &format!("{} {:.6} < {} {}\n", c.clause, c.approx, c.bound, if c.below_bound { "ok" } else { "FAIL" });
        }
        s += &format!("product-form {}\n", if self.product_form_dominates { "ok" } else { "FAIL" });
        s
    }
}

/// Exact certificate of the almost-derangement estimate at odd `n`.
///
/// Odd `n` in `7..13` gives a report with `asserted = false`.
pub fn prop24_certificate(n: usize) -> Result<Prop24Report> {
    let values = prop24_values(n)?;
    let bounds = [q(1, 2), q(1, 4), q(1, 4), q(1, 4)];
    let clauses = values
        .iter()
        .zip(&bounds)
        .zip(PROP24_CLAUSES)
        .map(|((v, b), name)| ClauseResult {
            clause: name,
            exact: v.to_string(),
            approx: v.approx(),
            bound: b.to_string(),
            below_bound: v.cmp_rational(b) == Ordering::Less,
        })
        .collect();
    let h = (n - 1) as i64 / 2;
    let prod = (1..=h).fold(BigRational::one(), |acc, i| acc * q(4 * i - 2, i));
    let product_identity = prod == BigRational::from_integer(binomial(2 * h as u64, h as u64).into());
    let product_form_dominates = values[2].compare(&prop24_iii_upper(n)) != Ordering::Greater;
    Ok(Prop24Report { schema: BOUNDS_SCHEMA, n, asserted: n >= 13, clauses, product_form_dominates, product_identity })
}

/// Certificates over odd `n` in `[from, to]`, with exact checks that each
/// clause value does not increase from one odd `n` to the next.
#[derive(Clone, Debug, Serialize)]
pub struct Prop24Range {
    pub schema: &'static str,
    pub reports: Vec<Prop24Report>,
    /// `(n, clause)` pairs where the value at `n + 2` exceeds the value at `n`.
    pub increases: Vec<(usize, &'static str)>,
}

impl Prop24Range {
    pub fn pass(&self) -> bool {
        self.increases.is_empty() && self.reports.iter().all(Prop24Report::pass)
    }

    /// CSV with one row per `n` and floating-point clause values.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,clause_i,clause_ii,clause_iii,clause_iii_wide,pass\n");
        for r in &self.reports {
            let v: Vec<String> = r.clauses.iter().map(|c| format!("{:.12e}", c.approx)).collect();
            s += &format!("{},{},{}\n", r.n, v.join(","), r.pass());
        }
        s
    }
}

pub fn prop24_range(from: usize, to: usize) -> Result<Prop24Range> {
    let ns: Vec<usize> = (from.max(7)..=to).filter(|n| n % 2 == 1).collect();
    if ns.is_empty() {
        return Err(Error::EvenOrSmallN(from));
    }
    let values: Vec<[QuadValue; 4]> = ns.iter().map(|&n| prop24_values(n)).collect::<Result<_>>()?;
    let reports = ns.iter().map(|&n| prop24_certificate(n)).collect::<Result<_>>()?;
    let mut increases = Vec::new();
    for (w, &n) in values.windows(2).zip(&ns) {
        for (j, name) in PROP24_CLAUSES.into_iter().enumerate() {
            if n >= 13 && w[1][j].compare(&w[0][j]) == Ordering::Greater {
                increases.push((n, name));
            }
        }
    }
    Ok(Prop24Range { schema: BOUNDS_SCHEMA, reports, increases })
}

#[derive(Clone, Debug, Serialize)]
pub struct AmGmRow {
    pub m: usize,
    pub parts: Vec<usize>,
    pub product: String,
    /// `product * m^m <= n^m`.
    pub within_mean_bound: bool,
    /// `m(m+1)/2 <= n`.
    pub triangular: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AmGmReport {
    pub schema: &'static str,
    pub n: usize,
    pub best_parts: Vec<usize>,
    pub best_product: String,
    /// Best product for each number of parts `m`.
    pub rows: Vec<AmGmRow>,
    /// Every distinct-part partition satisfies both checks.
    pub all_within: bool,
}

/// Exhaustive scan of partitions of `n` into distinct parts, up to
/// [`AMGM_LIMIT`].
pub fn amgm_report(n: usize) -> Result<AmGmReport> {
    amgm_report_with_limit(n, AMGM_LIMIT)
}

pub fn amgm_report_with_limit(n: usize, limit: usize) -> Result<AmGmReport> {
    if n > limit {
        return Err(Error::LimitExceeded { what: "AM-GM scan", value: n, limit });
    }
    let mut best: BTreeMap<usize, (BigUint, Vec<usize>)> = BTreeMap::new();
    let mut all_within = true;
    for p in Partition::distinct_parts(n) {
        let m = p.len();
        let prod: BigUint = p.parts().iter().map(|&a| BigUint::from(a)).product();
        let mm = BigUint::from(m).pow(m as u32);
        let nm = BigUint::from(n).pow(m as u32);
        all_within &= &prod * mm <= nm && m * (m + 1) / 2 <= n;
        let entry = best.entry(m).or_insert_with(|| (BigUint::zero(), Vec::new()));
        if prod > entry.0 {
            *entry = (prod, p.parts().to_vec());
        }
    }
    let rows: Vec<AmGmRow> = best
        .iter()
        .map(|(&m, (prod, parts))| AmGmRow {
            m,
            parts: parts.clone(),
            product: prod.to_string(),
            within_mean_bound: prod * BigUint::from(m).pow(m as u32) <= BigUint::from(n).pow(m as u32),
            triangular: m * (m + 1) / 2 <= n,
        })
        .collect();
    let (best_product, best_parts) =
        best.values().max_by(|a, b| a.0.cmp(&b.0)).map(|(p, v)| (p.to_string(), v.clone())).unwrap_or(("1".into(), Vec::new()));
    Ok(AmGmReport { schema: BOUNDS_SCHEMA, n, best_parts, best_product, rows, all_within })
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitDegreeRow {
    pub lambda: String,
    pub diagonal_hooks: Vec<usize>,
    pub arms: Vec<usize>,
    /// Degree of each of the two split constituents.
    pub split_degree: String,
    /// `prod a_i!` divides `floor((n-1)/2)!`.
    pub divides: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SplitDegreeReport {
    pub schema: &'static str,
    pub n: usize,
    pub rows: Vec<SplitDegreeRow>,
    pub min_split_degree: Option<String>,
    /// `2^n / (4n)`.
    pub exponential_reference: String,
    /// `C(n-1, floor((n-1)/2)) / 2`.
    pub binomial_reference: String,
    pub min_at_least_exponential: Option<bool>,
    pub min_at_least_binomial: Option<bool>,
    pub all_divide: bool,
}

/// Degrees of the split irreducibles of `A_n`, i.e. half the degrees of
/// self-conjugate shapes, with the arm-factorial divisibility check.
pub fn min_split_degree_report(n: usize) -> Result<SplitDegreeReport> {
    if n > DEFAULT_TABLE_LIMIT {
        return Err(Error::LimitExceeded { what: "split degree scan", value: n, limit: DEFAULT_TABLE_LIMIT });
    }
    let half = factorial((n.saturating_sub(1) / 2) as u64);
    let mut rows = Vec::new();
    let mut min: Option<BigUint> = None;
    for lambda in Partition::all(n).into_iter().filter(Partition::is_self_conjugate) {
        let fs = lambda.frobenius_symbol();
        let arms = fs.arms.clone();
        let prod: BigUint = arms.iter().map(|&a| factorial(a as u64)).product();
        let d = characters::degree(&lambda) / 2u32;
        if min.as_ref().is_none_or(|m| &d < m) {
            min = Some(d.clone());
        }
        rows.push(SplitDegreeRow {
            lambda: lambda.to_string(),
            diagonal_hooks: fs.diagonal_hooks(),
            arms,
            split_degree: d.to_string(),
            divides: half.is_multiple_of(&prod),
        });
    }
    let exp_ref = BigRational::new(BigInt::from(BigUint::one() << n), BigInt::from(4 * n.max(1)));
    let bin_ref = BigRational::new(binomial(n.saturating_sub(1) as u64, (n.saturating_sub(1) / 2) as u64).into(), 2.into());
    let min_q = min.as_ref().map(|m| BigRational::from_integer(m.clone().into()));
    Ok(SplitDegreeReport {
        schema: BOUNDS_SCHEMA,
        n,
        all_divide: rows.iter().all(|r| r.divides),
        rows,
        min_split_degree: min.as_ref().map(ToString::to_string),
        min_at_least_exponential: min_q.as_ref().map(|m| m >= &exp_ref),
        min_at_least_binomial: min_q.as_ref().map(|m| m >= &bin_ref),
        exponential_reference: exp_ref.to_string(),
        binomial_reference: bin_ref.to_string(),
    })
}

impl SplitDegreeReport {
    pub fn to_text(&self) -> String {
        let mut s = format!("n {}\n", self.n);
        for r in &self.rows {
            s += &format!("{} degree {} divides {}\n", r.lambda, r.split_degree, r.divides);
        }
        s += &format!(
            "min {}\n2^n/(4n) {}\nC(n-1,(n-1)/2)/2 {}\n",
            self.min_split_degree.as_deref().unwrap_or("none"),
            self.exponential_reference,
            self.binomial_reference
        );
        s
    }
}
