//! Symbolic subgroup counts of abelian p-groups.
//!
//! The abelian group of type `λ = (λ_1 ≥ … ≥ λ_n)` at a prime `p` is
//! `⊕_i Z/p^{λ_i}Z`. Its number of subgroups of order `p^k` is a polynomial
//! `N_k(λ)` in `p` with nonnegative integer coefficients, independent of `p`.
//! This module computes those polynomials exactly by peeling off the largest
//! part: writing `λ = (λ_1, λ′)` and `S_j = Σ_{i≤j} p^i N_i(λ′)`,
//!
//! ```text
//! N_k(λ) = S_{min(k, |λ′|)} − (S_{|λ′|} − S_{min(|λ|−k, |λ′|)})
//! ```
//!
//! which tabulates a whole partition in one pass per part.
//!
//! The leading term of each `N_k` is available without expanding anything:
//! `[0, |λ|]` splits at the breakpoints `c_ℓ` into intervals `J_ℓ` on which
//! the degree is the linear function `ℓk + a_ℓ(λ)`, and the leading
//! coefficient satisfies a window recursion that only ever looks at suffixes
//! of `λ`. [`IntervalDecomposition`] holds the breakpoints, [`leading_term`]
//! the predicted head of each polynomial, and [`closed_c3`]/[`closed_c4`]
//! the fully closed piecewise forms for three and four parts.

use crate::arith::{checked_pow, is_prime};
use crate::error::Error;
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::zeta::ZetaSeries;
use crate::Result;
use num_bigint::BigInt;
use std::collections::BTreeMap;

/// The breakpoints `c_ℓ` and degree offsets `a_ℓ` of a partition.
///
/// For `λ` with `n` parts, `c_ℓ = λ_{ℓ+1} + λ_{ℓ+3} + …` for `1 ≤ ℓ ≤ n−1`,
/// `c_n = 0`, and on the mirrored side `c_{−ℓ} = |λ| − c_ℓ`. The even- and
/// odd-indexed part sums `ev = c_1` and `od = c_{−1}` bound the middle
/// interval; `c_0` is set to `od` so that consecutive breakpoints delimit
/// the intervals `J_ℓ = [c_{ℓ+1}, c_ℓ]` and `J_{−ℓ} = [c_{−ℓ}, c_{−ℓ−1}]`,
/// which tile `[0, |λ|]` with shared endpoints.
#[derive(Clone, Debug)]
pub struct IntervalDecomposition {
    n: usize,
    weight: u64,
    /// `cs[ℓ + n] = c_ℓ` for `−n ≤ ℓ ≤ n`.
    cs: Vec<u64>,
    /// `a[ℓ] = Σ_{i>ℓ+1} ⌊(i−ℓ)/2⌋·λ_i` for `0 ≤ ℓ ≤ n−1`.
    a: Vec<u64>,
}

impl IntervalDecomposition {
    /// Computes every breakpoint and degree offset of `lam` and checks the
    /// structural facts the rest of the module leans on.
    pub fn new(lam: &Partition) -> Self {
        let parts = lam.parts();
        let n = parts.len();
        let weight: u64 = parts.iter().map(|&x| u64::from(x)).sum();
        let mut cs = vec![0u64; 2 * n + 1];
        for ell in 1..n {
            cs[n + ell] = parts[ell..].iter().step_by(2).map(|&x| u64::from(x)).sum();
        }
        // c_0 is the odd-indexed part sum od, the right endpoint of J_0.
        cs[n] = parts.iter().step_by(2).map(|&x| u64::from(x)).sum();
        for ell in 1..=n {
            cs[n - ell] = weight - cs[n + ell];
        }
        let mut a = vec![0u64; n];
        for ell in 0..n {
            a[ell] = parts
                .iter()
                .enumerate()
                .skip(ell + 1)
                .map(|(i, &x)| ((i + 1 - ell) / 2) as u64 * u64::from(x))
                .sum();
        }
        let iv = IntervalDecomposition { n, weight, cs, a };
        iv.check();
        iv
    }

    /// Asserts the interleaving of breakpoints, the tiling of `[0, |λ|]`,
    /// and the telescoping relation between degree offsets.
    fn check(&self) {
        let n = self.n as i64;
        for ell in -n..=n - 2 {
            let (left, right) = (self.c(ell), self.c(ell + 2));
            // Skipping one breakpoint moves strictly, except across the
            // center where od = ev (balanced shapes) or c_1 = c_2 allow a tie.
            if ell == -1 || ell == -2 {
                assert!(left >= right, "breakpoints out of order at {ell}");
            } else {
                assert!(left > right, "breakpoints must interleave at {ell}");
            }
        }
        for ell in -(n - 1)..=n - 1 {
            let (lo, hi) = self.interval(ell);
            assert!(lo <= hi, "interval {ell} is reversed");
        }
        assert_eq!(self.interval(n - 1).0, 0);
        assert_eq!(self.interval(-(n - 1)).1, self.weight);
        for ell in 1..self.n {
            assert_eq!(self.a[ell - 1], self.a[ell] + self.c(ell as i64));
        }
    }

    /// Number of parts of the underlying partition.
    pub fn part_count(&self) -> usize {
        self.n
    }

    /// The weight `|λ|`.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Sum of the even-indexed parts `λ_2 + λ_4 + …`, the left end of `J_0`.
    pub fn ev(&self) -> u64 {
        self.c(1)
    }

    /// Sum of the odd-indexed parts `λ_1 + λ_3 + …`, the right end of `J_0`.
    pub fn od(&self) -> u64 {
        self.c(0)
    }

    /// The breakpoint `c_ℓ` for `−n ≤ ℓ ≤ n`.
    pub fn c(&self, ell: i64) -> u64 {
        let n = self.n as i64;
        assert!((-n..=n).contains(&ell), "breakpoint index {ell} out of range");
        self.cs[(ell + n) as usize]
    }

    /// The degree offset `a_ℓ` for `0 ≤ ℓ ≤ n−1`.
    pub fn a(&self, ell: usize) -> u64 {
        assert!(ell < self.n, "offset index {ell} out of range");
        self.a[ell]
    }

    /// The closed interval `J_ℓ` as `(lo, hi)`, for `|ℓ| ≤ n−1`.
    pub fn interval(&self, ell: i64) -> (u64, u64) {
        let n = self.n as i64;
        assert!(ell.abs() <= n - 1, "interval index {ell} out of range");
        if ell >= 0 {
            (self.c(ell + 1), self.c(ell))
        } else {
            (self.c(ell), self.c(ell - 1))
        }
    }

    /// The index `ℓ` with `k ∈ J_ℓ`, preferring the interval nearest the
    /// center when `k` sits on a shared endpoint.
    pub fn interval_of(&self, k: u64) -> i64 {
        assert!(k <= self.weight, "k = {k} exceeds the weight {}", self.weight);
        if k > self.od() {
            return -self.interval_of(self.weight - k);
        }
        if k >= self.ev() {
            return 0;
        }
        let mut ell = 1;
        while self.c(ell + 1) > k {
            ell += 1;
        }
        ell
    }
}

/// The table `N_0(λ), …, N_{|λ|}(λ)` of subgroup-count polynomials.
pub fn count_poly_table(lam: &Partition) -> Vec<IntPoly> {
    table_for(lam.parts())
}

/// The polynomial `N_k(λ)` counting subgroups of order `p^k`; zero when `k`
/// falls outside `[0, |λ|]`, so recurrences may index freely.
pub fn count_poly(lam: &Partition, k: u64) -> IntPoly {
    let w = u64::from(lam.weight());
    if k > w {
        return IntPoly::zero();
    }
    count_poly_table(lam).swap_remove(k as usize)
}

/// Builds the count table for a bare part slice; the empty slice is the
/// trivial group, whose only subgroup is itself.
fn table_for(parts: &[u32]) -> Vec<IntPoly> {
    let mut table = vec![IntPoly::one()];
    for &part in parts.iter().rev() {
        table = extend_table(part, &table);
    }
    table
}

/// Extends the table of `λ′` to the table of `(part, λ′)` via prefix sums
/// `S_j = Σ_{i≤j} p^i N_i(λ′)`.
fn extend_table(part: u32, prev: &[IntPoly]) -> Vec<IntPoly> {
    let w_prev = prev.len() - 1;
    let w = w_prev + part as usize;
    let mut prefix = Vec::with_capacity(prev.len());
    let mut acc = IntPoly::zero();
    for (i, f) in prev.iter().enumerate() {
        acc = &acc + &f.shifted(i);
        prefix.push(acc.clone());
    }
    (0..=w)
        .map(|k| {
            let head = &prefix[k.min(w_prev)];
            let tail = &prefix[w_prev] - &prefix[(w - k).min(w_prev)];
            let nk = head - &tail;
            assert!(
                nk.is_nonnegative(),
                "subgroup count N_{k} must have nonnegative coefficients"
            );
            nk
        })
        .collect()
}

/// `N_k` for a bare part slice at a possibly negative index.
fn count_at(parts: &[u32], k: i64) -> IntPoly {
    let w: i64 = parts.iter().map(|&x| i64::from(x)).sum();
    if k < 0 || k > w {
        return IntPoly::zero();
    }
    table_for(parts).swap_remove(k as usize)
}

/// The zeta series of the abelian group of type `λ` at `p`, computed from
/// the symbolic tables rather than by enumerating subgroups.
pub fn zeta_abelian(lam: &Partition, p: u64) -> Result<ZetaSeries> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let w = lam.weight();
    let order = checked_pow(p, w).ok_or_else(|| {
        Error::Precondition(format!("order {p}^{w} exceeds the machine range"))
    })?;
    let table = count_poly_table(lam);
    let coeffs: BTreeMap<u64, BigInt> = table
        .iter()
        .enumerate()
        .map(|(k, f)| (checked_pow(p, k as u32).unwrap(), f.eval_u64(p)))
        .collect();
    ZetaSeries::new(order, coeffs)
}

/// Checks the step-down identity that splits off one box from the last part
/// of the leading run: with `μ_1 = … = μ_i > μ_{i+1}` (`i` maximal), `μ*`
/// the partition with `μ_i` decremented, and `μ^∨` the one with `μ_i`
/// removed,
///
/// ```text
/// N_k(μ) = N_k(μ*) + p^{|μ|−k} N_{k−μ_i}(μ^∨).
/// ```
///
/// Kept as an independent cross-check of the tabulation, which never uses it.
pub fn stehling_identity(mu: &Partition, k: u64) -> bool {
    let parts = mu.parts();
    let run = parts.iter().take_while(|&&x| x == parts[0]).count();
    let w = u64::from(mu.weight());

    let mut star = parts.to_vec();
    star[run - 1] -= 1;
    if star[run - 1] == 0 {
        star.remove(run - 1);
    }
    let mut vee = parts.to_vec();
    vee.remove(run - 1);

    let lhs = count_at(parts, k as i64);
    let star_term = count_at(&star, k as i64);
    let vee_term = count_at(&vee, k as i64 - i64::from(parts[run - 1]));
    // A nonzero remainder term forces k ≤ |μ|, so the power shift is legal.
    let rhs = if vee_term.is_zero() {
        star_term
    } else {
        &star_term + &vee_term.shifted((w - k) as usize)
    };
    lhs == rhs
}

/// The leading coefficient of `N_k(λ)`, computed by the window recursion
/// alone: it is 1 for at most two parts, reflects across `|λ|/2`, descends
/// to the suffix left of the middle interval, and on `J_0` sums the suffix
/// values over a window that is never empty.
pub fn leading_coef(lam: &Partition, k: u64) -> u64 {
    let w = u64::from(lam.weight());
    assert!(k <= w, "k = {k} exceeds the weight {w}");
    c_rec(lam.parts(), k)
}

fn c_rec(parts: &[u32], k: u64) -> u64 {
    if parts.len() <= 2 {
        return 1;
    }
    let w: u64 = parts.iter().map(|&x| u64::from(x)).sum();
    let od: u64 = parts.iter().step_by(2).map(|&x| u64::from(x)).sum();
    let ev = w - od;
    if k > od {
        return c_rec(parts, w - k);
    }
    if k < ev {
        return c_rec(&parts[1..], k);
    }
    let (l1, l2) = (u64::from(parts[0]), u64::from(parts[1]));
    let lo = ev.max((k + l2).saturating_sub(l1));
    let hi = k.min(od - l1 + l2);
    assert!(lo <= hi, "summation window is empty at k = {k}");
    (lo..=hi).map(|i| c_rec(&parts[1..], i)).sum()
}

/// The head of a subgroup-count polynomial: `N_k(λ)` starts with
/// `coefficient · p^degree`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LeadingTerm {
    pub coefficient: u64,
    pub degree: u64,
}

/// The leading term of `N_k(λ)` without expanding the polynomial: on `J_ℓ`
/// the degree is `ℓk + a_ℓ(λ)`, and past the midpoint the term matches the
/// mirror index `|λ| − k`.
pub fn leading_term(lam: &Partition, k: u64) -> LeadingTerm {
    let iv = IntervalDecomposition::new(lam);
    let w = iv.weight();
    assert!(k <= w, "k = {k} exceeds the weight {w}");
    let coefficient = c_rec(lam.parts(), k);
    let kk = k.min(w - k);
    let ell = iv.interval_of(kk);
    let degree = ell as u64 * kk + iv.a(ell as usize);
    LeadingTerm { coefficient, degree }
}

/// The largest degree among all `N_k(λ)`, attained across the middle
/// interval: `max_k deg N_k = a_0(λ) = Σ_{i≥2} ⌊i/2⌋·λ_i`.
pub fn max_degree(lam: &Partition) -> u64 {
    IntervalDecomposition::new(lam).a(0)
}

/// The closed piecewise form of the leading coefficient on the middle
/// interval of a three-part partition. Both printed variants are evaluated
/// wherever their breakpoints are ordered, and must agree.
pub fn closed_c3(lam: &Partition, k: u64) -> u64 {
    assert_eq!(lam.len(), 3, "closed form needs exactly three parts");
    let [l1, l2, l3] = [
        u64::from(lam.parts()[0]),
        u64::from(lam.parts()[1]),
        u64::from(lam.parts()[2]),
    ];
    assert!(l2 <= k && k <= l1 + l3, "k = {k} outside the middle interval");
    let k = k as i64;
    let (a, b, c) = (l1 as i64, l2 as i64, l3 as i64);
    let mut vals = Vec::new();
    if l2 + l3 <= l1 {
        piece(&mut vals, k, b, b + c, k - b + 1);
        piece(&mut vals, k, b + c, a, c + 1);
        piece(&mut vals, k, a, a + c, a + c + 1 - k);
    }
    if l1 <= l2 + l3 {
        piece(&mut vals, k, b, a, k - b + 1);
        piece(&mut vals, k, a, b + c, a - b + 1);
        piece(&mut vals, k, b + c, a + c, a + c + 1 - k);
    }
    collapse(&vals, k)
}

/// The closed piecewise form of the leading coefficient on the middle
/// interval of a four-part partition, with the same two-variant layout as
/// [`closed_c3`].
pub fn closed_c4(lam: &Partition, k: u64) -> u64 {
    assert_eq!(lam.len(), 4, "closed form needs exactly four parts");
    let [l1, l2, l3, l4] = [
        u64::from(lam.parts()[0]),
        u64::from(lam.parts()[1]),
        u64::from(lam.parts()[2]),
        u64::from(lam.parts()[3]),
    ];
    assert!(
        l2 + l4 <= k && k <= l1 + l3,
        "k = {k} outside the middle interval"
    );
    let k = k as i64;
    let (a, b, c, d) = (l1 as i64, l2 as i64, l3 as i64, l4 as i64);
    let mut vals = Vec::new();
    if l2 + l3 <= l1 + l4 {
        piece(&mut vals, k, b + d, b + c, k - b - d + 1);
        piece(&mut vals, k, b + c, a + d, c - d + 1);
        piece(&mut vals, k, a + d, a + c, a + c + 1 - k);
    }
    if l1 + l4 <= l2 + l3 {
        piece(&mut vals, k, b + d, a + d, k - b - d + 1);
        piece(&mut vals, k, a + d, b + c, a - b + 1);
        piece(&mut vals, k, b + c, a + c, a + c + 1 - k);
    }
    collapse(&vals, k)
}

fn piece(vals: &mut Vec<i64>, k: i64, lo: i64, hi: i64, value: i64) {
    if lo <= k && k <= hi {
        vals.push(value);
    }
}

/// Reduces the branch evaluations to the single value they must share.
fn collapse(vals: &[i64], k: i64) -> u64 {
    let first = *vals.first().expect("some branch must contain k");
    assert!(
        vals.iter().all(|&v| v == first),
        "piecewise branches disagree at k = {k}: {vals:?}"
    );
    assert!(first > 0, "leading coefficient must be positive");
    first as u64
}

/// Whether the count polynomials satisfy the palindromic duality
/// `N_k = N_{|λ|−k}` exactly and rise monotonely (coefficientwise) up to the
/// midpoint — the shape every valid table has.
pub fn is_symmetric_unimodal(lam: &Partition) -> bool {
    let t = count_poly_table(lam);
    let w = t.len() - 1;
    (0..=w).all(|k| t[k] == t[w - k])
        && (1..=w / 2).all(|k| (&t[k] - &t[k - 1]).is_nonnegative())
}
