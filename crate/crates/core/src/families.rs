//! Constructors for the group families the toolkit works with.
//!
//! Every constructor enumerates elements lexicographically in their
//! normal-form exponent tuples, so tables are canonical: constructing the
//! same family twice yields identical tables. All constructors check the
//! order guard in [`Limits`] before allocating the `N×N` table.

use crate::arith::is_prime;
use crate::error::Error;
use crate::group::GroupTable;
use crate::partition::Partition;
use crate::{Limits, Result};

/// Checks the order guard and the table index cap.
fn guarded_order(order: u64, lim: &Limits) -> Result<usize> {
    let cap = lim.max_order.min(u16::MAX as u64 + 1);
    if order > cap {
        return Err(Error::OrderLimit { requested: order, max: cap });
    }
    Ok(order as usize)
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// The cyclic group `C_m` with elements `0..m` under addition mod `m`.
pub fn cyclic(m: u64, lim: &Limits) -> Result<GroupTable> {
    if m == 0 {
        return Err(Error::Precondition("cyclic groups need order at least 1".into()));
    }
    let n = guarded_order(m, lim)?;
    GroupTable::from_fn(n, 0, format!("C{m}"), |a, b| ((a as u64 + b as u64) % m) as u32)
}

/// The direct product `G × H`, with `(a, b)` at index `a·|H| + b`.
pub fn direct_product(g: &GroupTable, h: &GroupTable, lim: &Limits) -> Result<GroupTable> {
    let order = g.order() as u64 * h.order() as u64;
    let n = guarded_order(order, lim)?;
    let hn = h.order() as u32;
    let identity = g.identity() * hn + h.identity();
    let label = format!("{} x {}", g.label(), h.label());
    GroupTable::from_fn(n, identity, label, |x, y| {
        let (a1, b1) = (x / hn, x % hn);
        let (a2, b2) = (y / hn, y % hn);
        g.mul(a1, a2) * hn + h.mul(b1, b2)
    })
}

/// Mixed-radix moduli `p^{λ_i}` plus helpers shared by the abelian and
/// metabelian constructors.
struct MixedRadix {
    moduli: Vec<u32>,
    weights: Vec<u32>,
}

impl MixedRadix {
    fn new(p: u64, parts: &[u32], lim: &Limits) -> Result<(Self, usize)> {
        let mut order = 1u64;
        for &part in parts {
            order = order
                .checked_mul(p.checked_pow(part).ok_or(Error::OrderLimit {
                    requested: u64::MAX,
                    max: lim.max_order,
                })?)
                .ok_or(Error::OrderLimit { requested: u64::MAX, max: lim.max_order })?;
            if order > lim.max_order.min(u16::MAX as u64 + 1) {
                return Err(Error::OrderLimit {
                    requested: order,
                    max: lim.max_order.min(u16::MAX as u64 + 1),
                });
            }
        }
        let n = guarded_order(order, lim)?;
        let moduli: Vec<u32> = parts.iter().map(|&part| p.pow(part) as u32).collect();
        let mut weights = vec![1u32; moduli.len()];
        for i in (0..moduli.len().saturating_sub(1)).rev() {
            weights[i] = weights[i + 1] * moduli[i + 1];
        }
        Ok((MixedRadix { moduli, weights }, n))
    }

    #[inline]
    fn decompose(&self, mut x: u32, out: &mut [u32]) {
        for (i, &w) in self.weights.iter().enumerate() {
            out[i] = x / w;
            x %= w;
        }
    }
}

/// The abelian p-group `⊕_i Z/p^{λ_i}Z` of type `λ`, elements enumerated
/// lexicographically in exponent tuples (first coordinate most significant).
pub fn abelian_group(p: u64, lam: &Partition, lim: &Limits) -> Result<GroupTable> {
    require_prime(p)?;
    let (radix, n) = MixedRadix::new(p, lam.parts(), lim)?;
    let k = lam.len();
    // Flat table of exponent tuples: digits[x*k..(x+1)*k] is element x.
    let mut digits = vec![0u32; n * k];
    for x in 0..n {
        let row = &mut digits[x * k..(x + 1) * k];
        radix.decompose(x as u32, row);
    }
    let moduli = radix.moduli.clone();
    let weights = radix.weights.clone();
    let label = format!("A({p};{lam})");
    GroupTable::from_fn(n, 0, label, move |a, b| {
        let da = &digits[a as usize * k..a as usize * k + k];
        let db = &digits[b as usize * k..b as usize * k + k];
        let mut out = 0u32;
        for i in 0..k {
            let mut c = da[i] + db[i];
            if c >= moduli[i] {
                c -= moduli[i];
            }
            out += c * weights[i];
        }
        out
    })
}

/// The dihedral group `D_n` of order `2n` (symmetries of the regular n-gon),
/// elements `σ^i τ^j` at index `2i + j`.
pub fn dihedral(n: u64, lim: &Limits) -> Result<GroupTable> {
    if n < 2 {
        return Err(Error::Precondition("dihedral groups need rotation order at least 2".into()));
    }
    let order = guarded_order(2 * n, lim)?;
    GroupTable::from_fn(order, 0, format!("D{n}"), |x, y| {
        let (i, j) = ((x / 2) as u64, x % 2);
        let (k, l) = ((y / 2) as u64, y % 2);
        let rot = if j == 0 { (i + k) % n } else { (i + n - k % n) % n };
        (2 * rot) as u32 + (j + l) % 2
    })
}

/// The quaternion group `Q_8`, elements `σ^i τ^j` (σ of order 4, τ² = σ²,
/// τστ⁻¹ = σ⁻¹) at index `2i + j`.
pub fn quaternion8() -> GroupTable {
    GroupTable::from_fn(8, 0, "Q8".to_string(), |x, y| {
        let (i, j) = (x / 2, x % 2);
        let (k, l) = (y / 2, y % 2);
        let mut rot = if j == 0 { (i + k) % 4 } else { (i + 4 - k) % 4 };
        if j + l == 2 {
            rot = (rot + 2) % 4;
        }
        2 * rot + (j + l) % 2
    })
    .expect("Q8 is well-formed")
}

/// The metacyclic p-group
/// `⟨σ, τ | σ^{p^m} = τ^{p^n} = 1, τστ⁻¹ = σ^{1+p^{m−1}}⟩` for `m > n ≥ 1`,
/// elements `σ^i τ^j` at index `i·p^n + j`.
pub fn metacyclic(p: u64, m: u32, n: u32, lim: &Limits) -> Result<GroupTable> {
    require_prime(p)?;
    if !(m > n && n >= 1) {
        return Err(Error::Precondition(format!(
            "metacyclic exponents need m > n >= 1, got m={m}, n={n}"
        )));
    }
    let order = p
        .checked_pow(m + n)
        .ok_or(Error::OrderLimit { requested: u64::MAX, max: lim.max_order })?;
    let size = guarded_order(order, lim)?;
    let pm = p.pow(m);
    let pn = p.pow(n) as u32;
    // twist[j] = (1 + p^{m−1})^j mod p^m; the automorphism has order p, so
    // the values cycle, but filling all p^n entries keeps lookups branch-free.
    let unit = (1 + p.pow(m - 1)) % pm;
    let mut twist = Vec::with_capacity(pn as usize);
    let mut t = 1u64;
    for _ in 0..pn {
        twist.push(t);
        t = t * unit % pm;
    }
    let label = format!("M({p};{m},{n})");
    GroupTable::from_fn(size, 0, label, move |x, y| {
        let (i, j) = ((x / pn) as u64, x % pn);
        let (k, l) = ((y / pn) as u64, y % pn);
        let rot = (i + k * twist[j as usize]) % pm;
        (rot as u32) * pn + (j + l) % pn
    })
}

/// The metabelian p-group with generators `a_1, …, a_n`, orders `p^{λ_i}`,
/// where only the outermost pair twists: `a_n a_1 a_n⁻¹ = a_1^{1+p^{λ_1−1}}`
/// and all other pairs commute. Requires `n ≥ 2`, `λ_1 > λ_2`, and `λ_1 ≥ 3`
/// when `p = 2`. Elements are exponent tuples in lexicographic order.
pub fn generalized_metabelian(p: u64, lam: &Partition, lim: &Limits) -> Result<GroupTable> {
    require_prime(p)?;
    if lam.len() < 2 {
        return Err(Error::Precondition(
            "metabelian type needs at least two parts".into(),
        ));
    }
    if lam.parts()[0] <= lam.parts()[1] {
        return Err(Error::Precondition(format!(
            "metabelian type needs a strictly largest first part, got {lam}"
        )));
    }
    if p == 2 && lam.parts()[0] < 3 {
        return Err(Error::Precondition(format!(
            "metabelian type at p=2 needs first part at least 3, got {lam}"
        )));
    }
    let (radix, size) = MixedRadix::new(p, lam.parts(), lim)?;
    let k = lam.len();
    let p1 = radix.moduli[0] as u64;
    // twist[e] = (1 + p^{λ_1−1})^e mod p^{λ_1} for e in 0..p^{λ_n}.
    let unit = (1 + p.pow(lam.parts()[0] - 1)) % p1;
    let pn = radix.moduli[k - 1];
    let mut twist = Vec::with_capacity(pn as usize);
    let mut t = 1u64;
    for _ in 0..pn {
        twist.push(t);
        t = t * unit % p1;
    }
    let label = format!("T({p};{lam})");
    let moduli = radix.moduli.clone();
    let weights = radix.weights.clone();
    GroupTable::from_fn(size, 0, label, move |x, y| {
        let mut rx = x;
        let mut ry = y;
        let mut out = 0u32;
        // Peel coordinates most-significant first.
        let e1 = rx / weights[0];
        let f1 = ry / weights[0];
        rx %= weights[0];
        ry %= weights[0];
        let en = rx % moduli[k - 1];
        let c1 = ((e1 as u64 + f1 as u64 * twist[en as usize]) % p1) as u32;
        out += c1 * weights[0];
        for i in 1..k {
            let ei = rx / weights[i];
            let fi = ry / weights[i];
            rx %= weights[i];
            ry %= weights[i];
            let mut ci = ei + fi;
            if ci >= moduli[i] {
                ci -= moduli[i];
            }
            out += ci * weights[i];
        }
        out
    })
}

/// The Heisenberg group over `Z/pZ` for an odd prime `p`: upper unitriangular
/// 3×3 matrices, i.e. triples `(a, b, c)` with
/// `(a,b,c)·(a',b',c') = (a+a', b+b', c+c'+a·b')`, at index `ap² + bp + c`.
pub fn heisenberg(p: u64, lim: &Limits) -> Result<GroupTable> {
    require_prime(p)?;
    if p == 2 {
        return Err(Error::Precondition("the Heisenberg construction here needs an odd prime".into()));
    }
    let order = p
        .checked_pow(3)
        .ok_or(Error::OrderLimit { requested: u64::MAX, max: lim.max_order })?;
    let size = guarded_order(order, lim)?;
    let pu = p as u32;
    GroupTable::from_fn(size, 0, format!("H{p}"), move |x, y| {
        let (a1, r1) = (x / (pu * pu), x % (pu * pu));
        let (b1, c1) = (r1 / pu, r1 % pu);
        let (a2, r2) = (y / (pu * pu), y % (pu * pu));
        let (b2, c2) = (r2 / pu, r2 % pu);
        let a = (a1 + a2) % pu;
        let b = (b1 + b2) % pu;
        let c = ((c1 as u64 + c2 as u64 + a1 as u64 * b2 as u64) % p) as u32;
        a * pu * pu + b * pu + c
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn same_table(g: &GroupTable, h: &GroupTable) -> bool {
        g.order() == h.order()
            && (0..g.order() as u32)
                .all(|a| (0..g.order() as u32).all(|b| g.mul(a, b) == h.mul(a, b)))
    }

    #[test]
    fn every_family_passes_full_validation() {
        let groups = vec![
            cyclic(12, &lim()).unwrap(),
            dihedral(6, &lim()).unwrap(),
            quaternion8(),
            abelian_group(2, &Partition::new(vec![2, 1]).unwrap(), &lim()).unwrap(),
            abelian_group(3, &Partition::new(vec![2, 2]).unwrap(), &lim()).unwrap(),
            metacyclic(3, 2, 1, &lim()).unwrap(),
            metacyclic(2, 3, 1, &lim()).unwrap(),
            generalized_metabelian(3, &Partition::new(vec![2, 1, 1]).unwrap(), &lim()).unwrap(),
            heisenberg(3, &lim()).unwrap(),
            direct_product(&cyclic(2, &lim()).unwrap(), &cyclic(3, &lim()).unwrap(), &lim())
                .unwrap(),
        ];
        for g in &groups {
            g.validate(true).unwrap_or_else(|e| panic!("{} failed validation: {e}", g.label()));
        }
    }

    #[test]
    fn cyclic_direct_product_of_coprime_factors() {
        let g = direct_product(&cyclic(2, &lim()).unwrap(), &cyclic(3, &lim()).unwrap(), &lim())
            .unwrap();
        assert_eq!(g.label(), "C2 x C3");
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 6);
        let mut orders: Vec<u64> = (0..6).map(|x| g.element_order(x)).collect();
        orders.sort_unstable();
        assert_eq!(orders, vec![1, 2, 3, 3, 6, 6]);
    }

    #[test]
    fn abelian_group_matches_iterated_cyclic_product() {
        let lam = Partition::new(vec![2, 1]).unwrap();
        let a = abelian_group(2, &lam, &lim()).unwrap();
        assert_eq!(a.label(), "A(2;2,1)");
        let b = direct_product(&cyclic(4, &lim()).unwrap(), &cyclic(2, &lim()).unwrap(), &lim())
            .unwrap();
        assert!(same_table(&a, &b));
        assert_eq!(a.exponent(), 4);
    }

    #[test]
    fn dihedral_structure() {
        let d6 = dihedral(6, &lim()).unwrap();
        assert_eq!(d6.order(), 12);
        assert!(!d6.is_abelian());
        // σ at index 2 has order 6; every reflection σ^iτ has order 2.
        assert_eq!(d6.element_order(2), 6);
        for i in 0..6 {
            assert_eq!(d6.element_order(2 * i + 1), 2);
        }
        // D_2 is the Klein four-group.
        let d2 = dihedral(2, &lim()).unwrap();
        assert!(d2.is_abelian());
        assert_eq!(d2.exponent(), 2);
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion8();
        let sigma = 2u32; // σ = σ^1 τ^0
        let tau = 1u32; // τ = σ^0 τ^1
        // τ² = σ²
        assert_eq!(q.mul(tau, tau), q.mul(sigma, sigma));
        // τστ⁻¹ = σ⁻¹
        let conj = q.mul(q.mul(tau, sigma), q.inv(tau));
        assert_eq!(conj, q.inv(sigma));
        assert_eq!(q.element_order(sigma), 4);
        assert_eq!(q.element_order(tau), 4);
    }

    #[test]
    fn metacyclic_two_two_one_is_the_dihedral_group_of_order_eight() {
        let m = metacyclic(2, 2, 1, &lim()).unwrap();
        let d = dihedral(4, &lim()).unwrap();
        assert!(same_table(&m, &d));
    }

    #[test]
    fn metacyclic_element_orders_split_by_first_exponent() {
        // σ^i τ^j has order p^m exactly when p does not divide i.
        for &(p, m, n) in &[(3u64, 2u32, 1u32), (2, 3, 1), (5, 2, 1)] {
            let g = metacyclic(p, m, n, &lim()).unwrap();
            let pn = p.pow(n) as u32;
            let pm = p.pow(m);
            for x in 0..g.order() as u32 {
                let i = (x / pn) as u64;
                let expect_max = i % p != 0;
                assert_eq!(
                    g.element_order(x) == pm,
                    expect_max,
                    "order mismatch at p={p} m={m} n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn metabelian_two_part_type_matches_metacyclic() {
        for &(p, m, n) in &[(3u64, 2u32, 1u32), (2, 3, 1), (2, 3, 2), (5, 2, 1)] {
            let lam = Partition::new(vec![m, n]).unwrap();
            let t = generalized_metabelian(p, &lam, &lim()).unwrap();
            let mc = metacyclic(p, m, n, &lim()).unwrap();
            assert!(same_table(&t, &mc), "tables differ at p={p} m={m} n={n}");
        }
    }

    #[test]
    fn heisenberg_structure() {
        let h = heisenberg(3, &lim()).unwrap();
        assert_eq!(h.order(), 27);
        assert!(!h.is_abelian());
        // Exponent p: every nonidentity element has order 3.
        assert_eq!(h.exponent(), 3);
        assert_eq!(h.center().len(), 3);
    }

    #[test]
    fn constructors_reject_bad_parameters() {
        assert!(matches!(cyclic(0, &lim()), Err(Error::Precondition(_))));
        assert!(matches!(cyclic(5000, &lim()), Err(Error::OrderLimit { .. })));
        assert!(matches!(dihedral(1, &lim()), Err(Error::Precondition(_))));
        assert!(matches!(metacyclic(4, 2, 1, &lim()), Err(Error::NotPrime(4))));
        assert!(matches!(metacyclic(3, 1, 1, &lim()), Err(Error::Precondition(_))));
        assert!(matches!(metacyclic(3, 2, 0, &lim()), Err(Error::Precondition(_))));
        assert!(matches!(heisenberg(2, &lim()), Err(Error::Precondition(_))));
        assert!(matches!(heisenberg(6, &lim()), Err(Error::NotPrime(6))));
        let flat = Partition::new(vec![2, 2]).unwrap();
        assert!(matches!(generalized_metabelian(3, &flat, &lim()), Err(Error::Precondition(_))));
        let single = Partition::new(vec![3]).unwrap();
        assert!(matches!(generalized_metabelian(3, &single, &lim()), Err(Error::Precondition(_))));
        let small2 = Partition::new(vec![2, 1]).unwrap();
        assert!(matches!(generalized_metabelian(2, &small2, &lim()), Err(Error::Precondition(_))));
        // The same type is fine at an odd prime.
        assert!(generalized_metabelian(3, &small2, &lim()).is_ok());
    }
}
