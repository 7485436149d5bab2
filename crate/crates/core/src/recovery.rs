//! Recovering abelian group types from zeta data.
//!
//! The subgroup-count polynomials of an abelian p-group determine its type
//! uniquely, and this module inverts the map along two routes:
//!
//! * [`recover_from_degrees`] reads the partition straight off a
//!   [`DegreeProfile`] — the list `deg N_0, …, deg N_{|λ|}` — exploiting
//!   that the left half is piecewise linear with slopes `n−1, …, 1, 0`
//!   whose breakpoints are the `c_ℓ`.
//! * [`recover_from_zeta_numeric`] inverts a numeric [`ZetaSeries`] at a
//!   known prime by pinning the part count from the count of order-`p`
//!   subgroups and scanning every candidate partition, asserting along the
//!   way that no two candidates match (the uniqueness this rests on).
//!
//! [`recover_nilpotent`] applies the numeric route prime-by-prime to any
//! series with an Euler product, and [`check_coincidence`] compares an
//! abelian group's series against its twisted sibling of the same type,
//! which is expected to coincide exactly under the twist hypotheses.

use crate::abelian::{leading_term, zeta_abelian};
use crate::arith::{checked_pow, is_prime, valuation};
use crate::error::Error;
use crate::families;
use crate::partition::Partition;
use crate::zeta::{self, ZetaSeries};
use crate::{Limits, Result};
use num_bigint::BigInt;
use std::fmt::Write as _;

/// The degree sequence `d_k = deg N_k(λ)` of some partition's count table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<u64>,
}

impl DegreeProfile {
    /// Wraps a degree list after checking the facts every profile satisfies:
    /// the ends are 0 (the trivial and full subgroup counts are the constant
    /// 1) and the list is palindromic.
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InconsistentProfile("profile is empty".into()));
        }
        let w = degrees.len() - 1;
        if degrees[0] != 0 || degrees[w] != 0 {
            return Err(Error::InconsistentProfile(
                "profile must start and end at degree 0".into(),
            ));
        }
        if (0..=w).any(|k| degrees[k] != degrees[w - k]) {
            return Err(Error::InconsistentProfile("profile must be palindromic".into()));
        }
        Ok(DegreeProfile { degrees })
    }

    /// The forward map: the degree sequence of `lam`'s count polynomials.
    pub fn of(lam: &Partition) -> DegreeProfile {
        let w = u64::from(lam.weight());
        let degrees = (0..=w).map(|k| leading_term(lam, k).degree).collect();
        DegreeProfile { degrees }
    }

    /// The degrees `d_0, …, d_{|λ|}`.
    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    /// The weight `|λ|` of any partition fitting this profile.
    pub fn weight(&self) -> u64 {
        (self.degrees.len() - 1) as u64
    }
}

/// Recovers the unique partition with `n` parts whose count-polynomial
/// degrees match `profile`.
///
/// On the left half the profile climbs with slope `ℓ` across the interval
/// `J_ℓ`, so counting the segments of slope at least `ℓ` recovers each
/// breakpoint `c_ℓ`; consecutive breakpoints two apart differ by exactly one
/// part. The recovered candidate is re-expanded and compared against the
/// input, so a profile that no partition produces is always rejected.
pub fn recover_from_degrees(profile: &DegreeProfile, n: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::Precondition("part count must be positive".into()));
    }
    let d = profile.degrees();
    let slopes: Vec<i64> = d.windows(2).map(|w| w[1] as i64 - w[0] as i64).collect();
    // c[ℓ] for 1 ≤ ℓ ≤ n−1 by slope counting; c_n and c_{n+1} are zero.
    let mut c = vec![0i64; n + 2];
    for ell in 1..n {
        c[ell] = slopes.iter().filter(|&&s| s >= ell as i64).count() as i64;
    }
    let mut parts = vec![0i64; n];
    for ell in 1..n {
        parts[ell] = c[ell] - c[ell + 2];
    }
    parts[0] = profile.weight() as i64 - parts[1..].iter().sum::<i64>();
    let candidate = parts
        .iter()
        .map(|&x| u32::try_from(x).ok())
        .collect::<Option<Vec<u32>>>()
        .and_then(|parts| Partition::new(parts).ok())
        .ok_or_else(|| {
            Error::InconsistentProfile(format!("no partition with {n} parts fits"))
        })?;
    if DegreeProfile::of(&candidate) != *profile {
        return Err(Error::InconsistentProfile(format!(
            "candidate {candidate} does not reproduce the profile"
        )));
    }
    Ok(candidate)
}

/// Recovers the partition of the abelian group behind a numeric zeta series
/// at the prime `p`, or `None` when no abelian group of that order produces
/// the series.
///
/// The number of order-`p` subgroups must be `1 + p + … + p^{n−1}`, which
/// pins the part count `n`; all partitions of the exponent with `n` parts
/// are then compared exhaustively. The scan never stops early: finding two
/// matches would falsify the uniqueness guarantee, so it is asserted.
pub fn recover_from_zeta_numeric(z: &ZetaSeries, p: u64) -> Result<Option<Partition>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let w = valuation(z.order(), p);
    if checked_pow(p, w) != Some(z.order()) {
        return Err(Error::Precondition(format!(
            "series order {} is not a power of {p}",
            z.order()
        )));
    }
    if w == 0 {
        // The trivial group has the empty type, which no partition names.
        return Ok(None);
    }
    let a_p = z.coeff(p);
    let mut point_count = BigInt::from(1);
    let mut power = BigInt::from(1);
    let mut part_count = None;
    for n in 1..=w {
        if point_count == a_p {
            part_count = Some(n as usize);
            break;
        }
        power *= p;
        point_count += &power;
    }
    let Some(n) = part_count else {
        return Ok(None);
    };
    let matches: Vec<Partition> = Partition::with_part_count(w, n)
        .into_iter()
        .filter(|lam| {
            let candidate = zeta_abelian(lam, p).expect("order already fits the machine range");
            candidate == *z
        })
        .collect();
    assert!(
        matches.len() <= 1,
        "two abelian types share one zeta series: {matches:?}"
    );
    Ok(matches.into_iter().next())
}

/// The per-prime outcome of [`recover_nilpotent`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeRecovery {
    pub prime: u64,
    /// The recovered type at this prime, or `None` when the local factor
    /// matches no abelian group.
    pub partition: Option<Partition>,
}

/// What recovery could tell about a whole series: whether it has an Euler
/// product at all, and the per-prime recoveries when it does.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecoveryReport {
    /// False means the coefficients are not multiplicative, so the source
    /// group is not nilpotent and no local analysis applies.
    pub euler: bool,
    /// One entry per prime dividing the order, ascending; empty when
    /// `euler` is false.
    pub primes: Vec<PrimeRecovery>,
}

impl RecoveryReport {
    /// Renders the report as the stable JSON document
    /// `{"euler": …, "primes": {"p": {"partition": […] | null}, …}}`.
    pub fn to_json(&self) -> String {
        let mut out = String::new();
        write!(out, "{{\"euler\": {}, \"primes\": {{", self.euler).unwrap();
        for (i, pr) in self.primes.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            write!(out, "\"{}\": {{\"partition\": ", pr.prime).unwrap();
            match &pr.partition {
                Some(lam) => {
                    let body: Vec<String> =
                        lam.parts().iter().map(|x| x.to_string()).collect();
                    write!(out, "[{}]", body.join(", ")).unwrap();
                }
                None => out.push_str("null"),
            }
            out.push('}');
        }
        out.push_str("}}");
        out
    }
}

/// Splits a series into its Euler factors and recovers an abelian type from
/// each local factor independently.
pub fn recover_nilpotent(z: &ZetaSeries) -> RecoveryReport {
    let Some(factors) = z.euler_factorize() else {
        return RecoveryReport { euler: false, primes: Vec::new() };
    };
    let primes = factors
        .primes()
        .map(|p| {
            let local = factors.factor(p).expect("factor exists for its own prime");
            let partition = recover_from_zeta_numeric(&local, p)
                .expect("local factor has prime-power order");
            PrimeRecovery { prime: p, partition }
        })
        .collect();
    RecoveryReport { euler: true, primes }
}

/// The outcome of comparing a twisted group against the abelian group of
/// the same type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoincidenceCheck {
    pub equal: bool,
    pub twisted: ZetaSeries,
    pub abelian: ZetaSeries,
}

/// Builds the twisted group of type `λ` at `p` and the abelian group of the
/// same type, computes both zeta series by full enumeration, and reports
/// whether they coincide. Two-part types go through the metacyclic
/// construction (defined whenever `λ_1 > λ_2`), longer types through the
/// iterated twisted product with its stricter hypotheses.
pub fn check_coincidence(p: u64, lam: &Partition, lim: &Limits) -> Result<CoincidenceCheck> {
    let twisted_group = if lam.len() == 2 {
        families::metacyclic(p, lam.parts()[0], lam.parts()[1], lim)?
    } else {
        families::generalized_metabelian(p, lam, lim)?
    };
    let abelian_group = families::abelian_group(p, lam, lim)?;
    let twisted = zeta::zeta_of_group(&twisted_group, lim)?;
    let abelian = zeta::zeta_of_group(&abelian_group, lim)?;
    Ok(CoincidenceCheck { equal: twisted == abelian, twisted, abelian })
}
