//! Exhaustive subgroup-lattice enumeration.
//!
//! Two complete strategies share the same output contract (every subgroup
//! exactly once):
//!
//! * **Prime-step extension** (used for solvable groups, which covers every
//!   group the built-in families can produce): starting from the trivial
//!   subgroup, extend each known subgroup `H` by an element `z` of its
//!   normalizer with `z^q ∈ H` for a prime `q`, yielding the subgroup
//!   `H ∪ Hz ∪ … ∪ Hz^{q−1}` of order `q·|H|`. Every subgroup of a solvable
//!   group sits on top of a chain of such prime-index normal steps
//!   (composition series), so the walk is complete. Within one scan, the
//!   elements of a discovered child are marked covered, because any of them
//!   would rebuild the same child.
//! * **Cyclic-atom joins** (the fallback for non-solvable input): seed with
//!   all cyclic subgroups, then repeatedly close known subgroups together
//!   with cyclic generators until no new subgroup appears. Every subgroup is
//!   the join of its cyclic subgroups, so the fixpoint is complete.
//!
//! Both walks distribute a round's subgroups across worker threads; the
//! result is a set, deduplicated by hashing and canonically sorted, so the
//! outcome is independent of scheduling.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::arith::factorize;
use crate::bitset::ElementSet;
use crate::error::Error;
use crate::group::GroupTable;
use crate::zeta::ZetaSeries;
use crate::{Limits, Result};

/// One subgroup, stored as a membership bitset over the parent group's
/// elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgroupRecord {
    members: ElementSet,
    order: u64,
}

impl SubgroupRecord {
    fn new(members: ElementSet) -> Self {
        let order = members.len() as u64;
        SubgroupRecord { members, order }
    }

    /// The subgroup's elements.
    pub fn members(&self) -> &ElementSet {
        &self.members
    }

    /// The subgroup's order (the bitset's population count).
    pub fn order(&self) -> u64 {
        self.order
    }
}

/// The full subgroup lattice of one group, canonically sorted by
/// (order, member list).
#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    group_order: u64,
    records: Vec<SubgroupRecord>,
}

impl SubgroupLattice {
    /// The order of the enumerated group.
    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    /// The number of subgroups.
    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Always false: the trivial subgroup and the whole group are present.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The records in canonical order.
    pub fn records(&self) -> &[SubgroupRecord] {
        &self.records
    }

    /// Subgroup counts by order, as a Dirichlet series.
    pub fn counts(&self) -> ZetaSeries {
        let mut by_order = std::collections::BTreeMap::new();
        for r in &self.records {
            *by_order.entry(r.order).or_insert(0u64) += 1;
        }
        ZetaSeries::from_counts(self.group_order, by_order)
            .expect("a complete lattice yields a valid series")
    }

    /// Whether the group has exactly one subgroup of order `p^{v_p(N)}` for
    /// every prime `p | N` — i.e. a unique Sylow subgroup per prime, the
    /// direct-product-of-Sylows characterization of nilpotency.
    pub fn is_nilpotent(&self) -> bool {
        factorize(self.group_order).into_iter().all(|(p, e)| {
            let sylow = p.pow(e);
            self.records.iter().filter(|r| r.order == sylow).count() == 1
        })
    }

    /// JSON export: one `{"order": o, "members": [...]}` object per subgroup,
    /// in canonical order.
    pub fn to_json(&self) -> String {
        let mut out = String::from("[\n");
        for (i, r) in self.records.iter().enumerate() {
            if i > 0 {
                out.push_str(",\n");
            }
            out.push_str(&format!("  {{\"order\": {}, \"members\": [", r.order));
            for (j, x) in r.members.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                out.push_str(&x.to_string());
            }
            out.push_str("]}");
        }
        out.push_str("\n]");
        out
    }
}

/// The smallest subgroup containing `seed`: product saturation over a
/// growing member list.
pub fn closure(g: &GroupTable, seed: &ElementSet) -> Result<SubgroupRecord> {
    if seed.universe() != g.order() {
        return Err(Error::Precondition(format!(
            "seed universe {} does not match the group order {}",
            seed.universe(),
            g.order()
        )));
    }
    if seed.is_empty() {
        return Err(Error::Precondition("closure needs a nonempty seed".into()));
    }
    Ok(SubgroupRecord::new(saturate(g, seed.iter())))
}

/// Closes `seed ∪ {identity}` under multiplication (which, in a finite
/// group, also closes it under inversion).
fn saturate(g: &GroupTable, seed: impl IntoIterator<Item = u32>) -> ElementSet {
    let mut set = ElementSet::new(g.order());
    let mut members = Vec::new();
    for x in std::iter::once(g.identity()).chain(seed) {
        if set.insert(x) {
            members.push(x);
        }
    }
    let mut i = 0;
    while i < members.len() {
        let t = members[i];
        for j in 0..=i {
            let s = members[j];
            for c in [g.mul(t, s), g.mul(s, t)] {
                if set.insert(c) {
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    set
}

/// The normalizer `N_G(H) = {x : xHx⁻¹ = H}` of a subgroup bitset.
pub(crate) fn normalizer(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let mut out = ElementSet::new(g.order());
    'outer: for x in 0..g.order() as u32 {
        let xi = g.inv(x);
        for s in h.iter() {
            if !h.contains(g.mul(g.mul(x, s), xi)) {
                continue 'outer;
            }
        }
        out.insert(x);
    }
    out
}

/// Whether the derived series reaches the trivial subgroup. Prime-power
/// orders short-circuit (p-groups are solvable).
pub(crate) fn is_solvable(g: &GroupTable) -> bool {
    let factors = factorize(g.order() as u64);
    if factors.len() <= 1 {
        return true;
    }
    let mut current = ElementSet::from_members(g.order(), 0..g.order() as u32);
    loop {
        if current.len() == 1 {
            return true;
        }
        let derived = derived_subgroup(g, &current);
        if derived == current {
            return false;
        }
        current = derived;
    }
}

/// The commutator subgroup `[H, H]` of a subgroup bitset.
fn derived_subgroup(g: &GroupTable, h: &ElementSet) -> ElementSet {
    let members = h.to_vec();
    let mut commutators = ElementSet::new(g.order());
    for &x in &members {
        let xi = g.inv(x);
        for &y in &members {
            let c = g.mul(g.mul(g.mul(xi, g.inv(y)), x), y);
            commutators.insert(c);
        }
    }
    saturate(g, commutators.iter())
}

/// Enumerates every subgroup of `g`, dispatching on solvability.
pub fn all_subgroups(g: &GroupTable, lim: &Limits) -> Result<SubgroupLattice> {
    if g.order() as u64 > lim.max_order {
        return Err(Error::OrderLimit { requested: g.order() as u64, max: lim.max_order });
    }
    let sets = if is_solvable(g) {
        enumerate_by_prime_steps(g, lim)?
    } else {
        enumerate_by_atom_joins(g, lim)?
    };
    let mut records: Vec<SubgroupRecord> = sets.into_iter().map(SubgroupRecord::new).collect();
    records.sort_unstable_by(|a, b| a.order.cmp(&b.order).then_with(|| a.members.cmp(&b.members)));
    Ok(SubgroupLattice { group_order: g.order() as u64, records })
}

/// Convenience wrapper: unique-Sylow nilpotency via the full lattice.
pub fn is_nilpotent(g: &GroupTable, lim: &Limits) -> Result<bool> {
    Ok(all_subgroups(g, lim)?.is_nilpotent())
}

fn merge_round(
    found: &mut HashSet<ElementSet>,
    children: Vec<ElementSet>,
    lim: &Limits,
) -> Result<Vec<ElementSet>> {
    let mut fresh = Vec::new();
    for k in children {
        if !found.contains(&k) {
            found.insert(k.clone());
            fresh.push(k);
        }
    }
    if found.len() > lim.max_subgroups {
        return Err(Error::SubgroupLimit { max: lim.max_subgroups });
    }
    Ok(fresh)
}

fn enumerate_by_prime_steps(g: &GroupTable, lim: &Limits) -> Result<HashSet<ElementSet>> {
    let n = g.order();
    let primes: Vec<u64> = factorize(n as u64).into_iter().map(|(p, _)| p).collect();
    // prime_pow[qi][z] = z^q, so the scan below is a table lookup.
    let prime_pow: Vec<Vec<u32>> = primes
        .iter()
        .map(|&q| (0..n as u32).map(|z| g.pow(z, q)).collect())
        .collect();
    let abelian = g.is_abelian();

    let trivial = ElementSet::from_members(n, [g.identity()]);
    let mut found = HashSet::new();
    found.insert(trivial.clone());
    let mut frontier = vec![trivial];
    while !frontier.is_empty() {
        let children: Vec<ElementSet> = frontier
            .par_iter()
            .flat_map_iter(|h| prime_step_children(g, h, &primes, &prime_pow, abelian))
            .collect();
        frontier = merge_round(&mut found, children, lim)?;
    }
    Ok(found)
}

/// All subgroups directly above `h` by one prime-index normal step.
fn prime_step_children(
    g: &GroupTable,
    h: &ElementSet,
    primes: &[u64],
    prime_pow: &[Vec<u32>],
    abelian: bool,
) -> Vec<ElementSet> {
    let n = g.order() as u64;
    let h_members = h.to_vec();
    // In an abelian group everything normalizes everything.
    let norm = if abelian { None } else { Some(normalizer(g, h)) };
    let mut out = Vec::new();
    for (qi, &q) in primes.iter().enumerate() {
        let child_order = h_members.len() as u64 * q;
        if n % child_order != 0 {
            continue;
        }
        let powq = &prime_pow[qi];
        // Everything marked here already lies in a child found during this
        // scan (or in h itself), so it cannot start a new child.
        let mut covered = h.clone();
        for z in 0..g.order() as u32 {
            if covered.contains(z) || !h.contains(powq[z as usize]) {
                continue;
            }
            if let Some(norm) = &norm {
                if !norm.contains(z) {
                    continue;
                }
            }
            // K = H ∪ Hz ∪ … ∪ Hz^{q−1}, a subgroup because z normalizes H
            // and z^q ∈ H.
            let mut k = h.clone();
            let mut zi = z;
            for _ in 1..q {
                for &s in &h_members {
                    k.insert(g.mul(s, zi));
                }
                zi = g.mul(zi, z);
            }
            debug_assert_eq!(k.len() as u64, child_order);
            covered.union_with(&k);
            out.push(k);
        }
    }
    out
}

fn enumerate_by_atom_joins(g: &GroupTable, lim: &Limits) -> Result<HashSet<ElementSet>> {
    let n = g.order();
    // Distinct cyclic subgroups, each remembered with one generator.
    let mut found: HashSet<ElementSet> = HashSet::new();
    let mut atoms: Vec<(u32, ElementSet)> = Vec::new();
    for x in 0..n as u32 {
        let mut c = ElementSet::new(n);
        let mut y = x;
        while c.insert(y) {
            y = g.mul(y, x);
        }
        if !found.contains(&c) {
            found.insert(c.clone());
            atoms.push((x, c));
        }
    }
    if found.len() > lim.max_subgroups {
        return Err(Error::SubgroupLimit { max: lim.max_subgroups });
    }
    let mut frontier: Vec<ElementSet> = found.iter().cloned().collect();
    while !frontier.is_empty() {
        let children: Vec<ElementSet> = frontier
            .par_iter()
            .flat_map_iter(|h| {
                // A cyclic atom is contained in h exactly when its generator is.
                atoms
                    .iter()
                    .filter(|(x, _)| !h.contains(*x))
                    .map(|(x, _)| {
                        let mut seed = h.to_vec();
                        seed.push(*x);
                        saturate(g, seed)
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
        frontier = merge_round(&mut found, children, lim)?;
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{abelian_group, cyclic, dihedral, direct_product, heisenberg, quaternion8};
    use crate::partition::Partition;

    fn lim() -> Limits {
        Limits::default()
    }

    fn orders_histogram(lat: &SubgroupLattice) -> Vec<(u64, usize)> {
        let mut by_order = std::collections::BTreeMap::new();
        for r in lat.records() {
            *by_order.entry(r.order()).or_insert(0usize) += 1;
        }
        by_order.into_iter().collect()
    }

    #[test]
    fn closure_examples() {
        let c8 = cyclic(8, &lim()).unwrap();
        let triv = closure(&c8, &ElementSet::from_members(8, [0])).unwrap();
        assert_eq!(triv.order(), 1);
        let quarter = closure(&c8, &ElementSet::from_members(8, [2])).unwrap();
        assert_eq!(quarter.order(), 4);
        assert_eq!(quarter.members().to_vec(), vec![0, 2, 4, 6]);

        // In the order-8 dihedral group, a reflection together with the
        // half-turn generates a Klein four-subgroup.
        let d4 = dihedral(4, &lim()).unwrap();
        let klein = closure(&d4, &ElementSet::from_members(8, [1, 4])).unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!(klein.members().to_vec(), vec![0, 1, 4, 5]);

        assert!(closure(&c8, &ElementSet::new(8)).is_err());
        assert!(closure(&c8, &ElementSet::from_members(4, [0])).is_err());
    }

    #[test]
    fn cyclic_groups_have_one_subgroup_per_divisor() {
        for (m, expect) in [(8u64, 4usize), (9, 3), (12, 6), (1, 1)] {
            let g = cyclic(m, &lim()).unwrap();
            let lat = all_subgroups(&g, &lim()).unwrap();
            assert_eq!(lat.len(), expect, "C_{m}");
            assert!(lat.counts().is_cyclic_signature());
        }
    }

    #[test]
    fn order_eight_lattices() {
        let d4 = dihedral(4, &lim()).unwrap();
        let lat = all_subgroups(&d4, &lim()).unwrap();
        assert_eq!(lat.len(), 10);
        assert_eq!(orders_histogram(&lat), vec![(1, 1), (2, 5), (4, 3), (8, 1)]);

        let q8 = quaternion8();
        let lat = all_subgroups(&q8, &lim()).unwrap();
        assert_eq!(lat.len(), 6);
        assert_eq!(orders_histogram(&lat), vec![(1, 1), (2, 1), (4, 3), (8, 1)]);
        // Every subgroup of the quaternion group is normal.
        for r in lat.records() {
            assert_eq!(normalizer(&q8, r.members()).len(), 8);
        }
    }

    #[test]
    fn klein_four_group_has_five_subgroups() {
        let v4 = abelian_group(2, &Partition::new(vec![1, 1]).unwrap(), &lim()).unwrap();
        let lat = all_subgroups(&v4, &lim()).unwrap();
        assert_eq!(lat.len(), 5);
        assert_eq!(orders_histogram(&lat), vec![(1, 1), (2, 3), (4, 1)]);
    }

    #[test]
    fn dihedral_subgroup_totals() {
        // τ(n) + σ(n) subgroups for odd n: D_15 has 4 + 24 = 28.
        let d15 = dihedral(15, &lim()).unwrap();
        let lat = all_subgroups(&d15, &lim()).unwrap();
        assert_eq!(lat.len(), 28);
        // D_9: 3 + 13 = 16, with three order-6 dihedral subgroups.
        let d9 = dihedral(9, &lim()).unwrap();
        let lat = all_subgroups(&d9, &lim()).unwrap();
        assert_eq!(lat.len(), 16);
        assert_eq!(lat.counts().coeff(6), num_bigint::BigInt::from(3));
    }

    #[test]
    fn both_strategies_agree() {
        let groups = vec![
            dihedral(4, &lim()).unwrap(),
            dihedral(9, &lim()).unwrap(),
            cyclic(12, &lim()).unwrap(),
            quaternion8(),
            heisenberg(3, &lim()).unwrap(),
            abelian_group(2, &Partition::new(vec![1, 1, 1]).unwrap(), &lim()).unwrap(),
            abelian_group(3, &Partition::new(vec![2, 1]).unwrap(), &lim()).unwrap(),
            direct_product(&dihedral(3, &lim()).unwrap(), &cyclic(4, &lim()).unwrap(), &lim())
                .unwrap(),
        ];
        for g in &groups {
            let a = enumerate_by_prime_steps(g, &lim()).unwrap();
            let b = enumerate_by_atom_joins(g, &lim()).unwrap();
            assert_eq!(a, b, "strategy mismatch on {}", g.label());
        }
    }

    #[test]
    fn nilpotency_by_unique_sylow_counts() {
        assert!(!is_nilpotent(&dihedral(3, &lim()).unwrap(), &lim()).unwrap());
        assert!(!is_nilpotent(&dihedral(15, &lim()).unwrap(), &lim()).unwrap());
        assert!(is_nilpotent(&dihedral(4, &lim()).unwrap(), &lim()).unwrap());
        assert!(is_nilpotent(&quaternion8(), &lim()).unwrap());
        assert!(is_nilpotent(&cyclic(12, &lim()).unwrap(), &lim()).unwrap());
        let d4c3 = direct_product(&dihedral(4, &lim()).unwrap(), &cyclic(3, &lim()).unwrap(), &lim())
            .unwrap();
        assert!(is_nilpotent(&d4c3, &lim()).unwrap());
    }

    #[test]
    fn alternating_group_on_five_points() {
        // Build the order-60 simple group from its permutation action: the
        // non-solvable path must still enumerate all 59 subgroups.
        let perms: Vec<[u8; 5]> = {
            let mut all = Vec::new();
            let mut items = [0u8, 1, 2, 3, 4];
            permute(&mut items, 0, &mut all);
            all.retain(|p| parity(p) == 0);
            all.sort();
            all
        };
        assert_eq!(perms.len(), 60);
        let index_of = |p: &[u8; 5]| perms.binary_search(p).unwrap() as u32;
        let a5 = GroupTable::from_fn(60, 0, "A5".to_string(), |x, y| {
            let (px, py) = (perms[x as usize], perms[y as usize]);
            let mut composed = [0u8; 5];
            for i in 0..5 {
                composed[i] = px[py[i] as usize];
            }
            index_of(&composed)
        })
        .unwrap();
        a5.validate(true).unwrap();
        assert!(!is_solvable(&a5));

        let lat = all_subgroups(&a5, &lim()).unwrap();
        assert_eq!(lat.len(), 59);
        assert_eq!(
            orders_histogram(&lat),
            vec![(1, 1), (2, 15), (3, 10), (4, 5), (5, 6), (6, 10), (10, 6), (12, 5), (60, 1)]
        );
        assert!(!lat.is_nilpotent());
        assert!(lat.counts().euler_factorize().is_none());
    }

    fn permute(items: &mut [u8; 5], k: usize, out: &mut Vec<[u8; 5]>) {
        if k == 5 {
            out.push(*items);
            return;
        }
        for i in k..5 {
            items.swap(k, i);
            permute(items, k + 1, out);
            items.swap(k, i);
        }
    }

    fn parity(p: &[u8; 5]) -> u32 {
        let mut inversions = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        inversions % 2
    }

    #[test]
    fn solvability_battery() {
        assert!(is_solvable(&dihedral(15, &lim()).unwrap()));
        assert!(is_solvable(&quaternion8()));
        assert!(is_solvable(&heisenberg(3, &lim()).unwrap()));
        let s3c4 = direct_product(&dihedral(3, &lim()).unwrap(), &cyclic(4, &lim()).unwrap(), &lim())
            .unwrap();
        assert!(is_solvable(&s3c4));
    }

    #[test]
    fn resource_guards() {
        let c8 = cyclic(8, &lim()).unwrap();
        let tight = Limits { max_order: 4, max_subgroups: 100 };
        assert!(matches!(all_subgroups(&c8, &tight), Err(Error::OrderLimit { .. })));
        let cramped = Limits { max_order: 4096, max_subgroups: 3 };
        let e8 = abelian_group(2, &Partition::new(vec![1, 1, 1]).unwrap(), &lim()).unwrap();
        assert!(matches!(all_subgroups(&e8, &cramped), Err(Error::SubgroupLimit { max: 3 })));
    }

    #[test]
    fn canonical_order_and_export() {
        let v4 = abelian_group(2, &Partition::new(vec![1, 1]).unwrap(), &lim()).unwrap();
        let lat = all_subgroups(&v4, &lim()).unwrap();
        let orders: Vec<u64> = lat.records().iter().map(|r| r.order()).collect();
        assert_eq!(orders, vec![1, 2, 2, 2, 4]);
        assert_eq!(
            lat.to_json(),
            "[\n  {\"order\": 1, \"members\": [0]},\n  {\"order\": 2, \"members\": [0, 1]},\n  {\"order\": 2, \"members\": [0, 2]},\n  {\"order\": 2, \"members\": [0, 3]},\n  {\"order\": 4, \"members\": [0, 1, 2, 3]}\n]"
        );
        // Rebuilding yields byte-identical export.
        let again = all_subgroups(&v4, &lim()).unwrap();
        assert_eq!(lat.to_json(), again.to_json());
    }
}
