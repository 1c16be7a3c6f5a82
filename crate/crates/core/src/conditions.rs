//! Classical scalar sufficient conditions for a list to be realizable as
//! the spectrum of a symmetric doubly stochastic matrix: Perfect-Mirsky,
//! Soules, and the Nader et al. refinements.
//!
//! Every condition is stated for a normalized list in one-based order
//! `(lambda_1 = 1, lambda_2 >= ... >= lambda_n)`. The checkers sort a copy
//! of the tail in non-increasing order before evaluating, so callers may
//! pass spectra in any order; inputs are never mutated. Verdicts compare
//! the evaluated left-hand side against zero exactly, with no tolerance
//! band. The square bracket in the formulas below is the integral part.

// integer expressions like (n + 3) / 4 transcribe the displayed formulas
// literally; do not rewrite them into div_ceil
#![allow(clippy::manual_div_ceil, clippy::manual_is_multiple_of)]

use serde::Serialize;

use crate::constructor::{corollary_bound, feasibility, CorollaryBound, FeasibilityCertificate};
use crate::spectrum::Spectrum;

/// One condition's outcome: `lhs` and `satisfied` are present exactly when
/// the condition applies to the spectrum's length, and
/// `satisfied == (lhs >= 0)`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionVerdict {
    pub name: &'static str,
    pub applicable: bool,
    pub lhs: Option<f64>,
    pub satisfied: Option<bool>,
}

impl ConditionVerdict {
    fn applies(name: &'static str, lhs: f64) -> Self {
        Self { name, applicable: true, lhs: Some(lhs), satisfied: Some(lhs >= 0.0) }
    }

    fn not_applicable(name: &'static str) -> Self {
        Self { name, applicable: false, lhs: None, satisfied: None }
    }

    /// False only when the condition applies and fails.
    pub fn failed(&self) -> bool {
        self.satisfied == Some(false)
    }
}

/// Tail sorted non-increasing, with the unit eigenvalue in front; entry `i`
/// of the result is the one-based `lambda_{i+1}` of the condition formulas.
fn normalized(s: &Spectrum) -> Vec<f64> {
    let mut v = s.values().to_vec();
    v[1..].sort_by(|a, b| b.partial_cmp(a).expect("spectrum values are finite"));
    v
}

/// `1/n + lambda_2/(n(n-1)) + lambda_3/((n-1)(n-2)) + ... + lambda_n/(2*1) >= 0`.
pub fn perfect_mirsky(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "perfect-mirsky";
    let n = s.n();
    if n < 2 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let nf = n as f64;
    let mut lhs = 1.0 / nf;
    for j in 2..=n {
        let d = ((n - j + 2) * (n - j + 1)) as f64;
        lhs += lam[j - 1] / d;
    }
    ConditionVerdict::applies(NAME, lhs)
}

/// `1/n + (n-m-1)/(n(m+1)) lambda_2 + sum_k lambda_{n-2k+2}/(k(k+1)) >= 0`
/// with `m = (n-1)/2` for odd `n` and `(n-2)/2` for even `n`.
///
/// As printed, the summation index runs to `n`, but the subscript
/// `n - 2k + 2` leaves the list for `k > m`; the sum here keeps exactly the
/// terms whose subscript stays in `[3, n]`, i.e. `k <= m` (a suspected typo
/// in the source formula, clamped only as far as well-definedness needs).
pub fn soules(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "soules";
    let n = s.n();
    if n < 3 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let nf = n as f64;
    let m = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    let mut lhs = 1.0 / nf + (n - m - 1) as f64 / (nf * (m + 1) as f64) * lam[1];
    for k in 1..=m {
        let sub = n - 2 * k + 2;
        lhs += lam[sub - 1] / (k * (k + 1)) as f64;
    }
    ConditionVerdict::applies(NAME, lhs)
}

/// Improved Soules condition for even `n`:
/// `1/n + lambda_2/n + (n/2 - [(n+2)/4])/((n/2)[(n+2)/4]) lambda_4
///  + sum_{k=1}^{[(n+2)/4]-1} lambda_{n-4k+4}/(k(k+1)) >= 0`.
pub fn nader_improved_soules_even(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "improved-soules-even";
    let n = s.n();
    if n < 4 || n % 2 != 0 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let nf = n as f64;
    let half = n / 2;
    let b = (n + 2) / 4;
    let mut lhs = 1.0 / nf
        + lam[1] / nf
        + (half - b) as f64 / ((half * b) as f64) * lam[3];
    for k in 1..b {
        let sub = n - 4 * k + 4;
        lhs += lam[sub - 1] / (k * (k + 1)) as f64;
    }
    ConditionVerdict::applies(NAME, lhs)
}

/// First new condition, for odd `n >= 5`:
/// `1/n + (n-1)/(n(n+1)) lambda_2
///  + ((n+1)/2 - [(n+3)/4])/(((n+1)/2)[(n+3)/4]) lambda_4
///  + sum_{k=1}^{[(n+3)/4]-1} lambda_{n-4k+4}/(k(k+1)) >= 0`.
pub fn nader_new1_odd(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "new-condition-1-odd";
    let n = s.n();
    if n < 5 || n % 2 != 1 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let nf = n as f64;
    let half = (n + 1) / 2;
    let b = (n + 3) / 4;
    let mut lhs = 1.0 / nf
        + (n - 1) as f64 / (nf * (n + 1) as f64) * lam[1]
        + (half - b) as f64 / ((half * b) as f64) * lam[3];
    for k in 1..b {
        let sub = n - 4 * k + 4;
        lhs += lam[sub - 1] / (k * (k + 1)) as f64;
    }
    ConditionVerdict::applies(NAME, lhs)
}

/// Second new condition, split on `n mod 4` with `n = 4m + r` and `m > 1`;
/// lists with `m <= 1` for their residue class are reported inapplicable
/// rather than extrapolated.
pub fn nader_new2(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "new-condition-2";
    let n = s.n();
    let r = n % 4;
    let m = (n - r) / 4;
    if m <= 1 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let nf = n as f64;
    // coefficient of lambda_2 and lambda_4 plus the lambda_8 block size,
    // by residue class
    let (c2, c4, q, b) = match r {
        0 => (1.0 / nf, 2.0 / nf, n / 4, (n + 4) / 8),
        1 => (
            (n - 1) as f64 / (nf * (n + 1) as f64),
            2.0 * (n - 1) as f64 / (((n + 1) * (n + 3)) as f64),
            (n + 3) / 4,
            (n + 7) / 8,
        ),
        2 => (
            1.0 / nf,
            2.0 * (n - 2) as f64 / ((n * (n + 2)) as f64),
            (n + 2) / 4,
            (n + 6) / 8,
        ),
        _ => (
            (n - 1) as f64 / (nf * (n + 1) as f64),
            2.0 / (n + 1) as f64,
            (n + 1) / 4,
            (n + 5) / 8,
        ),
    };
    let mut lhs = 1.0 / nf
        + c2 * lam[1]
        + c4 * lam[3]
        + (q - b) as f64 / ((q * b) as f64) * lam[7];
    for k in 1..b {
        let sub = n - 8 * k + 8;
        lhs += lam[sub - 1] / (k * (k + 1)) as f64;
    }
    ConditionVerdict::applies(NAME, lhs)
}

/// Third new condition in its `n = 26` form:
/// `1/26 + lambda_2/26 + 6/(13*7) lambda_4 + 3/28 lambda_8
///  + lambda_16/4 + lambda_26/2 >= 0`.
pub fn nader_new3_n26(s: &Spectrum) -> ConditionVerdict {
    const NAME: &str = "new-condition-3-n26";
    if s.n() != 26 {
        return ConditionVerdict::not_applicable(NAME);
    }
    let lam = normalized(s);
    let lhs = 1.0 / 26.0
        + lam[1] / 26.0
        + 6.0 / (13.0 * 7.0) * lam[3]
        + 3.0 / 28.0 * lam[7]
        + lam[15] / 4.0
        + lam[25] / 2.0;
    ConditionVerdict::applies(NAME, lhs)
}

/// Every condition verdict plus the sufficient tail-sum bound and the exact
/// feasibility certificate of the walk-basis construction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<ConditionVerdict>,
    pub corollary: CorollaryBound,
    pub feasibility: FeasibilityCertificate,
}

pub fn full_report(s: &Spectrum) -> ConditionReport {
    ConditionReport {
        conditions: vec![
            perfect_mirsky(s),
            soules(s),
            nader_improved_soules_even(s),
            nader_new1_odd(s),
            nader_new2(s),
            nader_new3_n26(s),
        ],
        corollary: corollary_bound(s),
        feasibility: feasibility(s),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(values: &[f64]) -> Spectrum {
        Spectrum::new(values.to_vec()).unwrap()
    }

    fn scaled(values: &[f64], t: f64) -> Spectrum {
        let mut v = values.to_vec();
        for x in &mut v[1..] {
            *x *= t;
        }
        sp(&v)
    }

    const SIGMA_5: [f64; 5] = [1.0, -0.02, -0.03, -0.05, -0.4];
    const SIGMA_6: [f64; 6] = [1.0, -0.01, -0.02, -0.06, -0.08, -0.33];
    const SIGMA_5_NEW1: [f64; 5] = [1.0, -0.03, -0.03, -0.04, -0.4];
    const SIGMA_10_EVEN: [f64; 10] =
        [1.0, -0.01, -0.01, -0.025, -0.03, -0.035, -0.04, -0.05, -0.08, -0.22];
    const SIGMA_10_NEW2: [f64; 10] =
        [1.0, -0.01, -0.01, -0.01, -0.02, -0.02, -0.04, -0.07, -0.1, -0.22];
    const SIGMA_9: [f64; 9] =
        [1.0, -0.006, -0.018, -0.02, -0.028, -0.028, -0.053, -0.105, -0.242];
    const SIGMA_11: [f64; 11] =
        [1.0, -0.001, -0.004, -0.01, -0.01, -0.012, -0.013, -0.05, -0.09, -0.11, -0.2];
    const SIGMA_16: [f64; 16] = [
        1.0, -0.003, -0.003, -0.004, -0.007, -0.009, -0.02, -0.0209, -0.021, -0.024, -0.026,
        -0.035, -0.042, -0.076, -0.0811, -0.128,
    ];
    const SIGMA_26: [f64; 26] = [
        1.0, -0.004, -0.005, -0.006, -0.007, -0.01, -0.01, -0.011, -0.011, -0.011, -0.012,
        -0.012, -0.015, -0.015, -0.016, -0.017, -0.019, -0.02, -0.022, -0.022, -0.025, -0.028,
        -0.028, -0.032, -0.069, -0.073,
    ];

    fn assert_lhs(v: &ConditionVerdict, expect: f64) {
        assert!(v.applicable);
        let lhs = v.lhs.unwrap();
        assert!((lhs - expect).abs() < 1e-9, "{}: lhs {lhs} vs {expect}", v.name);
        assert_eq!(v.satisfied, Some(lhs >= 0.0));
    }

    // Expected left-hand sides below are hand-evaluated from the displayed
    // formulas (exact decimals where the arithmetic terminates).

    #[test]
    fn perfect_mirsky_fails_sigma5() {
        // 1/5 - 0.02/20 - 0.03/12 - 0.05/6 - 0.4/2 = -71/6000
        let v = perfect_mirsky(&sp(&SIGMA_5));
        assert_lhs(&v, -71.0 / 6000.0);
        assert!(v.failed());
    }

    #[test]
    fn perfect_mirsky_zero_tail_passes() {
        let v = perfect_mirsky(&sp(&[1.0, 0.0, 0.0, 0.0]));
        assert_lhs(&v, 0.25);
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn perfect_mirsky_boundary_equality() {
        // n=2: 1/2 + (-1)/2 = 0 counts as satisfied
        let v = perfect_mirsky(&sp(&[1.0, -1.0]));
        assert_eq!(v.lhs, Some(0.0));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn perfect_mirsky_inapplicable_below_n2() {
        let v = perfect_mirsky(&sp(&[1.0]));
        assert!(!v.applicable);
        assert_eq!(v.lhs, None);
        assert_eq!(v.satisfied, None);
    }

    #[test]
    fn soules_fails_sigma5_odd() {
        // 1/5 + (2/15)(-0.02) + (1/2)(-0.4) + (1/6)(-0.03) = -23/3000
        let v = soules(&sp(&SIGMA_5));
        assert_lhs(&v, -23.0 / 3000.0);
        assert!(v.failed());
    }

    #[test]
    fn soules_fails_sigma6_even() {
        // 1/6 + (3/18)(-0.01) + (1/2)(-0.33) + (1/6)(-0.06) = -0.01
        let v = soules(&sp(&SIGMA_6));
        assert_lhs(&v, -0.01);
        assert!(v.failed());
    }

    #[test]
    fn soules_zero_tail_passes() {
        let v = soules(&sp(&[1.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn soules_inapplicable_below_n3() {
        assert!(!soules(&sp(&[1.0, -0.5])).applicable);
    }

    #[test]
    fn improved_soules_even_fails_sigma10() {
        // 1/10 - 0.001 + (2/15)(-0.025) - 0.22/2 - 0.035/6 = -121/6000
        let v = nader_improved_soules_even(&sp(&SIGMA_10_EVEN));
        assert_lhs(&v, -121.0 / 6000.0);
        assert!(v.failed());
    }

    #[test]
    fn improved_soules_even_zero_tail_passes() {
        let v = nader_improved_soules_even(&sp(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn improved_soules_even_scaled_tail_passes() {
        let v = nader_improved_soules_even(&scaled(&SIGMA_10_EVEN, 0.1));
        // direct formula evaluation: 1/10 + 0.1 * (previous negative part)
        assert_lhs(&v, 0.1 + 0.1 * (-121.0 / 6000.0 - 0.1));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn improved_soules_inapplicable_odd_or_small() {
        assert!(!nader_improved_soules_even(&sp(&SIGMA_5)).applicable);
        assert!(!nader_improved_soules_even(&sp(&[1.0, -0.5])).applicable);
    }

    #[test]
    fn new1_odd_fails_sigma5() {
        // 1/5 + (2/15)(-0.03) + (1/6)(-0.04) + (1/2)(-0.4) = -4/375
        let v = nader_new1_odd(&sp(&SIGMA_5_NEW1));
        assert_lhs(&v, -4.0 / 375.0);
        assert!(v.failed());
    }

    #[test]
    fn new1_odd_zero_tail_passes() {
        let v = nader_new1_odd(&sp(&[1.0, 0.0, 0.0, 0.0, 0.0]));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn new1_odd_scaled_tail_passes() {
        let v = nader_new1_odd(&scaled(&SIGMA_5_NEW1, 0.1));
        assert_lhs(&v, 0.2 + 0.1 * (-4.0 / 375.0 - 0.2));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn new1_inapplicable_even_or_small() {
        assert!(!nader_new1_odd(&sp(&SIGMA_6)).applicable);
        assert!(!nader_new1_odd(&sp(&[1.0, -0.3, -0.2])).applicable);
    }

    #[test]
    fn new2_fails_sigma16_case_4m() {
        // 1/16 - 0.003/16 - 0.004/8 - 0.0209/4 - 0.128/2 = -0.0074125
        let v = nader_new2(&sp(&SIGMA_16));
        assert_lhs(&v, -0.0074125);
        assert!(v.failed());
    }

    #[test]
    fn new2_fails_sigma10_case_4m_plus_2() {
        // 1/10 - 0.001 + (2/15)(-0.01) + (1/6)(-0.07) - 0.11 = -0.024
        let v = nader_new2(&sp(&SIGMA_10_NEW2));
        assert_lhs(&v, -0.024);
        assert!(v.failed());
    }

    #[test]
    fn new2_fails_sigma11_case_4m_plus_3() {
        // 1/11 + (10/132)(-0.001) + (1/6)(-0.01) + (1/6)(-0.05) - 0.1 = -23/1200
        let v = nader_new2(&sp(&SIGMA_11));
        assert_lhs(&v, -23.0 / 1200.0);
        assert!(v.failed());
    }

    #[test]
    fn new2_fails_sigma9_case_4m_plus_1() {
        // 1/9 + (8/90)(-0.006) + (2/15)(-0.02) + (1/6)(-0.105) - 0.121
        let v = nader_new2(&sp(&SIGMA_9));
        assert_lhs(&v, -0.030588888888888889);
        assert!(v.failed());
    }

    #[test]
    fn new2_inapplicable_when_m_is_one() {
        // n in 4..8 has m = 1 for its residue class
        for n in [4usize, 5, 6, 7] {
            let mut values = vec![0.0; n];
            values[0] = 1.0;
            assert!(!nader_new2(&sp(&values)).applicable, "n = {n}");
        }
        // n = 8 is the smallest applicable length (m = 2)
        let v = nader_new2(&sp(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
        assert!(v.applicable);
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn new3_fails_sigma26() {
        let v = nader_new3_n26(&sp(&SIGMA_26));
        assert_lhs(&v, -0.0040164835164835);
        assert!(v.failed());
    }

    #[test]
    fn new3_zero_tail_passes() {
        let mut values = vec![0.0; 26];
        values[0] = 1.0;
        let v = nader_new3_n26(&sp(&values));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn new3_scaled_tail_passes() {
        let v = nader_new3_n26(&scaled(&SIGMA_26, 0.1));
        assert_lhs(&v, 1.0 / 26.0 + 0.1 * (-0.0040164835164835 - 1.0 / 26.0));
        assert_eq!(v.satisfied, Some(true));
    }

    #[test]
    fn new3_inapplicable_off_26() {
        assert!(!nader_new3_n26(&sp(&SIGMA_5)).applicable);
    }

    #[test]
    fn conditions_normalize_internally() {
        // same multiset, different order: verdicts must agree
        let sorted = sp(&SIGMA_5);
        let shuffled = sp(&[1.0, -0.4, -0.02, -0.05, -0.03]);
        assert_eq!(perfect_mirsky(&sorted), perfect_mirsky(&shuffled));
        assert_eq!(soules(&sorted), soules(&shuffled));
        assert_eq!(nader_new1_odd(&sorted), nader_new1_odd(&shuffled));
        // and the input is untouched
        assert_eq!(shuffled.values()[1], -0.4);
    }

    #[test]
    fn golden_tails_sum_to_minus_half() {
        for (name, tail_owner) in [
            ("sigma5", &SIGMA_5[..]),
            ("sigma6", &SIGMA_6[..]),
            ("sigma5-new1", &SIGMA_5_NEW1[..]),
            ("sigma10-even", &SIGMA_10_EVEN[..]),
            ("sigma10-new2", &SIGMA_10_NEW2[..]),
            ("sigma9", &SIGMA_9[..]),
            ("sigma11", &SIGMA_11[..]),
            ("sigma16", &SIGMA_16[..]),
            ("sigma26", &SIGMA_26[..]),
        ] {
            let sum: f64 = tail_owner[1..].iter().sum();
            assert!((sum + 0.5).abs() < 1e-12, "{name}: tail sum {sum}");
        }
    }

    #[test]
    fn full_report_on_sigma5() {
        let r = full_report(&sp(&SIGMA_5));
        for v in &r.conditions {
            if v.applicable {
                assert_eq!(v.satisfied, Some(false), "{}", v.name);
            }
        }
        assert_eq!(r.corollary, CorollaryBound::SuleimanovaPass);
        assert!(r.feasibility.feasible);
    }

    #[test]
    fn full_report_zero_tail_everything_passes() {
        let r = full_report(&sp(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]));
        for v in &r.conditions {
            if v.applicable {
                assert_eq!(v.satisfied, Some(true), "{}", v.name);
            }
        }
        assert_eq!(r.corollary, CorollaryBound::SuleimanovaPass);
        assert!(r.feasibility.feasible);
    }

    #[test]
    fn full_report_on_048_witness() {
        let r = full_report(&sp(&[1.0, -0.004, -0.002, -0.004, -0.51]));
        assert_eq!(r.corollary, CorollaryBound::NotCovered);
        assert!(!r.feasibility.feasible);
    }
}
