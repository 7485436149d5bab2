//! Subgroup-counting Dirichlet series.
//!
//! For a finite group `G` of order `N`, the series stores the coefficients
//! `a_n = #{H ≤ G : |H| = n}`, i.e. the finite Dirichlet sum
//! `ζ_G(s) = Σ_{n | N} a_n n^{−s}`. Only nonzero coefficients are kept, and
//! every stored index divides the group order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{divisors, factorize, valuation};
use crate::error::Error;
use crate::group::GroupTable;
use crate::{lattice, Limits, Result};

/// A finite subgroup-counting Dirichlet series attached to a group order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZetaSeries {
    order: u64,
    coeffs: BTreeMap<u64, BigInt>,
}

/// Output styles for [`ZetaSeries::render`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RenderStyle {
    /// `1 + 4*3^-s + 9^-s`
    Plain,
    /// `1 + 4\cdot 3^{-s} + 9^{-s}`
    Latex,
    /// `{"order": 9, "coefficients": {"1": 1, "3": 4, "9": 1}}`
    Json,
    /// `order,count` header plus one row per nonzero coefficient
    Csv,
}

impl ZetaSeries {
    /// Builds a series, enforcing the structural facts every subgroup count
    /// satisfies: indices divide the order, counts are nonnegative, and the
    /// trivial and full subgroups are each counted exactly once.
    pub fn new(order: u64, coeffs: BTreeMap<u64, BigInt>) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSeries("order must be positive".into()));
        }
        let mut kept = BTreeMap::new();
        for (n, c) in coeffs {
            if order % n != 0 {
                return Err(Error::InvalidSeries(format!(
                    "coefficient index {n} does not divide the order {order}"
                )));
            }
            if c < BigInt::zero() {
                return Err(Error::InvalidSeries(format!("negative count {c} at index {n}")));
            }
            if !c.is_zero() {
                kept.insert(n, c);
            }
        }
        for end in [1, order] {
            if kept.get(&end) != Some(&BigInt::one()) {
                return Err(Error::InvalidSeries(format!(
                    "a group of order {order} has exactly one subgroup of order {end}"
                )));
            }
        }
        Ok(ZetaSeries { order, coeffs: kept })
    }

    /// Convenience constructor from plain integer counts.
    pub fn from_counts(order: u64, counts: impl IntoIterator<Item = (u64, u64)>) -> Result<Self> {
        Self::new(order, counts.into_iter().map(|(n, c)| (n, BigInt::from(c))).collect())
    }

    /// The group order the series is attached to.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// The coefficient `a_n` (zero when no subgroup has order `n`).
    pub fn coeff(&self, n: u64) -> BigInt {
        self.coeffs.get(&n).cloned().unwrap_or_else(BigInt::zero)
    }

    /// The nonzero coefficients in ascending index order.
    pub fn coeffs(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coeffs.iter().map(|(&n, c)| (n, c))
    }

    /// The total number of subgroups, `ζ_G(0) = Σ a_n`.
    pub fn total(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// The dual series counting subgroups by index: `a*_n = a_{N/n}`.
    pub fn dual(&self) -> ZetaSeries {
        let coeffs = self.coeffs.iter().map(|(&n, c)| (self.order / n, c.clone())).collect();
        ZetaSeries { order: self.order, coeffs }
    }

    /// Whether counting by order and by index agree (`a_n = a_{N/n}` for all
    /// `n`), as they do for every abelian group.
    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&n, c)| self.coeff(self.order / n) == *c)
    }

    /// Whether every divisor of the order carries exactly one subgroup — the
    /// coefficient pattern that characterizes cyclic groups.
    pub fn is_cyclic_signature(&self) -> bool {
        divisors(self.order).into_iter().all(|d| self.coeff(d).is_one())
    }

    /// The series of a direct product of groups with coprime orders, where
    /// every subgroup splits: `a_{mn} = a_m · b_n`.
    pub fn product(&self, other: &ZetaSeries) -> Result<ZetaSeries> {
        if self.order.gcd(&other.order) != 1 {
            return Err(Error::NotCoprime(self.order, other.order));
        }
        let mut coeffs = BTreeMap::new();
        for (m, a) in &self.coeffs {
            for (n, b) in &other.coeffs {
                coeffs.insert(m * n, a * b);
            }
        }
        Ok(ZetaSeries { order: self.order * other.order, coeffs })
    }

    /// Factors the series as an Euler product `∏_p f_p(p^{−s})`, which exists
    /// exactly when the coefficients are multiplicative across prime powers:
    /// `a_n = ∏_p a_{p^{v_p(n)}}` for every divisor `n` of the order.
    /// Returns `None` when some coefficient violates that identity.
    pub fn euler_factorize(&self) -> Option<EulerFactors> {
        let mut factors = Vec::new();
        for (p, e) in factorize(self.order) {
            let coeffs: Vec<BigInt> = (0..=e).map(|k| self.coeff(p.pow(k))).collect();
            factors.push((p, coeffs));
        }
        for n in divisors(self.order) {
            let mut expected = BigInt::one();
            for (p, _) in &factors {
                expected *= self.coeff(p.pow(valuation(n, *p)));
            }
            if expected != self.coeff(n) {
                return None;
            }
        }
        Some(EulerFactors { order: self.order, factors })
    }

    /// Renders the series in the requested style.
    pub fn render(&self, style: RenderStyle) -> String {
        match style {
            RenderStyle::Plain => self.render_sum("*", "^-s"),
            RenderStyle::Latex => self.render_sum("\\cdot ", "^{-s}"),
            RenderStyle::Json => {
                let mut out = String::new();
                write!(out, "{{\"order\": {}, \"coefficients\": {{", self.order).unwrap();
                for (i, (n, c)) in self.coeffs.iter().enumerate() {
                    if i > 0 {
                        out.push_str(", ");
                    }
                    write!(out, "\"{n}\": {c}").unwrap();
                }
                out.push_str("}}");
                out
            }
            RenderStyle::Csv => {
                let mut out = String::from("order,count\n");
                for (n, c) in &self.coeffs {
                    writeln!(out, "{n},{c}").unwrap();
                }
                out
            }
        }
    }

    fn render_sum(&self, times: &str, power: &str) -> String {
        let mut out = String::new();
        for (i, (n, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            if *n == 1 {
                write!(out, "{c}").unwrap();
            } else if c.is_one() {
                write!(out, "{n}{power}").unwrap();
            } else {
                write!(out, "{c}{times}{n}{power}").unwrap();
            }
        }
        out
    }
}

/// An Euler-product factorization `ζ = ∏_p f_p(p^{−s})` of a series whose
/// coefficients are multiplicative across prime powers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactors {
    order: u64,
    /// `(p, [a_{p^0}, a_{p^1}, …, a_{p^{v_p(N)}}])` in ascending prime order.
    factors: Vec<(u64, Vec<BigInt>)>,
}

impl EulerFactors {
    /// The primes dividing the order, in ascending order.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The local factor at `p` as a series over the Sylow order `p^{v_p(N)}`.
    pub fn factor(&self, p: u64) -> Option<ZetaSeries> {
        let (_, coeffs) = self.factors.iter().find(|&&(q, _)| q == p)?;
        let map = coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (p.pow(k as u32), c.clone()))
            .collect();
        Some(ZetaSeries { order: p.pow((coeffs.len() - 1) as u32), coeffs: map })
    }

    /// Multiplies the local factors back out into the full series.
    pub fn expand(&self) -> ZetaSeries {
        let mut acc = ZetaSeries { order: 1, coeffs: BTreeMap::from([(1, BigInt::one())]) };
        for &(p, _) in &self.factors {
            let f = self.factor(p).expect("factor listed");
            acc = acc.product(&f).expect("prime factors have coprime orders");
        }
        acc
    }
}

/// Counts the subgroups of `g` by exhaustive lattice enumeration.
pub fn zeta_of_group(g: &GroupTable, lim: &Limits) -> Result<ZetaSeries> {
    Ok(lattice::all_subgroups(g, lim)?.counts())
}

/// The closed-form series for the dihedral group `D_n` with `n` odd:
/// one cyclic subgroup of order `d` and `n/d` dihedral subgroups of order
/// `2d` for every divisor `d` of `n`, for `τ(n) + σ(n)` subgroups in total.
pub fn dihedral_zeta_closed(n: u64) -> Result<ZetaSeries> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::Precondition(format!(
            "the dihedral closed form needs an odd rotation order of at least 3, got {n}"
        )));
    }
    let mut counts = BTreeMap::new();
    for d in divisors(n) {
        counts.insert(d, BigInt::one());
        counts.insert(2 * d, BigInt::from(n / d));
    }
    ZetaSeries::new(2 * n, counts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(order: u64, counts: &[(u64, u64)]) -> ZetaSeries {
        ZetaSeries::from_counts(order, counts.iter().copied()).unwrap()
    }

    #[test]
    fn construction_enforces_count_structure() {
        assert!(ZetaSeries::from_counts(6, [(1, 1), (2, 3), (3, 1), (6, 1)]).is_ok());
        // Index must divide the order.
        assert!(matches!(
            ZetaSeries::from_counts(6, [(1, 1), (4, 1), (6, 1)]),
            Err(Error::InvalidSeries(_))
        ));
        // Exactly one trivial subgroup.
        assert!(matches!(
            ZetaSeries::from_counts(6, [(1, 2), (6, 1)]),
            Err(Error::InvalidSeries(_))
        ));
        // Exactly one full subgroup.
        assert!(matches!(
            ZetaSeries::from_counts(6, [(1, 1), (6, 2)]),
            Err(Error::InvalidSeries(_))
        ));
        assert!(matches!(
            ZetaSeries::from_counts(6, [(1, 1)]),
            Err(Error::InvalidSeries(_))
        ));
        // Negative counts are rejected.
        let mut m = BTreeMap::new();
        m.insert(1u64, BigInt::one());
        m.insert(2u64, BigInt::from(-1));
        m.insert(6u64, BigInt::one());
        assert!(matches!(ZetaSeries::new(6, m), Err(Error::InvalidSeries(_))));
    }

    #[test]
    fn duality_swaps_order_and_index_counting() {
        // Subgroup counts of the order-8 dihedral group.
        let d4 = series(8, &[(1, 1), (2, 5), (4, 3), (8, 1)]);
        let dual = d4.dual();
        assert_eq!(dual.coeff(2), BigInt::from(3));
        assert_eq!(dual.coeff(4), BigInt::from(5));
        assert!(!d4.is_symmetric());
        assert_eq!(dual.dual(), d4);

        // The elementary abelian group of order 8 has a symmetric series.
        let e8 = series(8, &[(1, 1), (2, 7), (4, 7), (8, 1)]);
        assert!(e8.is_symmetric());

        // The order-8 quaternion group: counts (1,1,3,1) flip to (1,3,1,1).
        let q8 = series(8, &[(1, 1), (2, 1), (4, 3), (8, 1)]);
        assert_eq!(q8.dual(), series(8, &[(1, 1), (2, 3), (4, 1), (8, 1)]));
    }

    #[test]
    fn cyclic_signature_detection() {
        let c12 = series(12, &[(1, 1), (2, 1), (3, 1), (4, 1), (6, 1), (12, 1)]);
        assert!(c12.is_cyclic_signature());
        // A missing divisor or a repeated count breaks the signature.
        let d3 = series(6, &[(1, 1), (2, 3), (3, 1), (6, 1)]);
        assert!(!d3.is_cyclic_signature());
        let v4 = series(4, &[(1, 1), (2, 3), (4, 1)]);
        assert!(!v4.is_cyclic_signature());
    }

    #[test]
    fn coprime_products_multiply_coefficients() {
        let c4 = series(4, &[(1, 1), (2, 1), (4, 1)]);
        let c3 = series(3, &[(1, 1), (3, 1)]);
        let c12 = c4.product(&c3).unwrap();
        assert!(c12.is_cyclic_signature());
        assert_eq!(c12.total(), BigInt::from(6));
        assert!(matches!(c4.product(&c4), Err(Error::NotCoprime(4, 4))));
    }

    #[test]
    fn euler_factorization_exists_exactly_for_multiplicative_coefficients() {
        // 1 + 3·2^{-s} + 3·4^{-s} + 8^{-s} times 1 + 3^{-s}.
        let g = series(24, &[(1, 1), (2, 3), (4, 3), (8, 1), (3, 1), (6, 3), (12, 3), (24, 1)]);
        let euler = g.euler_factorize().expect("multiplicative");
        assert_eq!(euler.primes().collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(euler.factor(2).unwrap(), series(8, &[(1, 1), (2, 3), (4, 3), (8, 1)]));
        assert_eq!(euler.factor(3).unwrap(), series(3, &[(1, 1), (3, 1)]));
        assert_eq!(euler.expand(), g);

        // The order-6 dihedral counts (1,3,1,1) fail at n = 6: a_6 ≠ a_2·a_3.
        let d3 = series(6, &[(1, 1), (2, 3), (3, 1), (6, 1)]);
        assert!(d3.euler_factorize().is_none());

        // A prime-power order factors trivially into one local factor.
        let q8 = series(8, &[(1, 1), (2, 1), (4, 3), (8, 1)]);
        let euler = q8.euler_factorize().expect("single prime");
        assert_eq!(euler.expand(), q8);
    }

    #[test]
    fn dihedral_closed_form_counts_conjugate_copies() {
        // D_3: divisors 1, 3 give cyclic counts 1 and dihedral counts 3, 1.
        let d3 = dihedral_zeta_closed(3).unwrap();
        assert_eq!(d3, series(6, &[(1, 1), (2, 3), (3, 1), (6, 1)]));

        // D_9 keeps three conjugate copies of the order-6 dihedral subgroup.
        let d9 = dihedral_zeta_closed(9).unwrap();
        assert_eq!(
            d9,
            series(18, &[(1, 1), (2, 9), (3, 1), (6, 3), (9, 1), (18, 1)])
        );
        // τ(9) + σ(9) = 3 + 13.
        assert_eq!(d9.total(), BigInt::from(16));

        assert!(dihedral_zeta_closed(4).is_err());
        assert!(dihedral_zeta_closed(1).is_err());
    }

    #[test]
    fn rendering_styles() {
        let g = series(9, &[(1, 1), (3, 4), (9, 1)]);
        assert_eq!(g.render(RenderStyle::Plain), "1 + 4*3^-s + 9^-s");
        assert_eq!(g.render(RenderStyle::Latex), "1 + 4\\cdot 3^{-s} + 9^{-s}");
        assert_eq!(
            g.render(RenderStyle::Json),
            "{\"order\": 9, \"coefficients\": {\"1\": 1, \"3\": 4, \"9\": 1}}"
        );
        assert_eq!(g.render(RenderStyle::Csv), "order,count\n1,1\n3,4\n9,1\n");
    }
}
