//! Named verification suites.
//!
//! Each suite prints one `SUITE case: PASS|FAIL (detail)` line per case and
//! reports whether every case passed. Infrastructure failures (a constructor
//! hitting a resource guard, say) surface as errors instead of FAIL lines.

use subzeta::abelian::{is_symmetric_unimodal, stehling_identity, zeta_abelian};
use subzeta::families;
use subzeta::lattice;
use subzeta::recovery::{check_coincidence, recover_from_zeta_numeric};
use subzeta::zeta::{zeta_of_group, RenderStyle, ZetaSeries};
use subzeta::{GroupTable, Limits, Partition};

/// Every suite name `run_suite` accepts.
pub const SUITES: [&str; 8] = [
    "duality",
    "euler-nilpotent",
    "order8-table",
    "coincidence-metacyclic",
    "coincidence-tilde",
    "stehling",
    "unimodal",
    "recovery-roundtrip",
];

/// Runs one named suite; `Ok(true)` means every case passed.
pub fn run_suite(name: &str, lim: &Limits) -> Option<subzeta::Result<bool>> {
    let mut reporter = Reporter { suite: name.to_owned(), failures: 0 };
    let outcome = match name {
        "duality" => duality(&mut reporter, lim),
        "euler-nilpotent" => euler_nilpotent(&mut reporter, lim),
        "order8-table" => order8_table(&mut reporter, lim),
        "coincidence-metacyclic" => coincidence_metacyclic(&mut reporter, lim),
        "coincidence-tilde" => coincidence_tilde(&mut reporter, lim),
        "stehling" => stehling(&mut reporter),
        "unimodal" => unimodal(&mut reporter),
        "recovery-roundtrip" => recovery_roundtrip(&mut reporter),
        _ => return None,
    };
    Some(outcome.map(|()| reporter.failures == 0))
}

struct Reporter {
    suite: String,
    failures: usize,
}

impl Reporter {
    fn case(&mut self, case: &str, pass: bool, detail: &str) {
        let verdict = if pass { "PASS" } else { "FAIL" };
        println!("{} {}: {} ({})", self.suite, case, verdict, detail);
        if !pass {
            self.failures += 1;
        }
    }
}

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("fixed test shapes are valid")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Subgroup counts at complementary orders agree, symbolically and by brute
/// force, for abelian groups.
fn duality(r: &mut Reporter, lim: &Limits) -> subzeta::Result<()> {
    for p in [2u64, 3] {
        for w in 1..=6u32 {
            let mut all = true;
            let mut checked = 0usize;
            for lam in Partition::all_of_weight(w) {
                all &= zeta_abelian(&lam, p)?.is_symmetric();
                checked += 1;
            }
            r.case(&format!("weight {w} at p={p}"), all, &format!("{checked} series"));
        }
    }
    let abelian_eights: [(&str, GroupTable); 3] = [
        ("C8", families::cyclic(8, lim)?),
        ("C4xC2", families::abelian_group(2, &pt(&[2, 1]), lim)?),
        ("C2xC2xC2", families::abelian_group(2, &pt(&[1, 1, 1]), lim)?),
    ];
    for (label, g) in abelian_eights {
        let z = zeta_of_group(&g, lim)?;
        r.case(label, z.is_symmetric(), &z.render(RenderStyle::Plain));
    }
    Ok(())
}

/// A zeta series admits an Euler product exactly for nilpotent groups.
fn euler_nilpotent(r: &mut Reporter, lim: &Limits) -> subzeta::Result<()> {
    let c3 = families::cyclic(3, lim)?;
    let battery: Vec<GroupTable> = vec![
        families::cyclic(8, lim)?,
        families::abelian_group(2, &pt(&[2, 1]), lim)?,
        families::abelian_group(2, &pt(&[1, 1, 1]), lim)?,
        families::dihedral(4, lim)?,
        families::quaternion8(),
        families::heisenberg(3, lim)?,
        families::metacyclic(3, 2, 1, lim)?,
        families::cyclic(12, lim)?,
        families::direct_product(&families::dihedral(4, lim)?, &c3, lim)?,
        families::direct_product(&families::quaternion8(), &families::cyclic(9, lim)?, lim)?,
        families::dihedral(3, lim)?,
        families::dihedral(5, lim)?,
        families::dihedral(9, lim)?,
        families::dihedral(15, lim)?,
    ];
    for g in &battery {
        let euler = zeta_of_group(g, lim)?.euler_factorize().is_some();
        let nilpotent = lattice::is_nilpotent(g, lim)?;
        r.case(
            g.label(),
            euler == nilpotent,
            &format!("euler product: {}, nilpotent: {}", yes_no(euler), yes_no(nilpotent)),
        );
    }
    Ok(())
}

/// The five order-8 groups against their known coefficient rows.
fn order8_table(r: &mut Reporter, lim: &Limits) -> subzeta::Result<()> {
    let cases: [(&str, GroupTable, [u64; 4]); 5] = [
        ("C8", families::cyclic(8, lim)?, [1, 1, 1, 1]),
        ("C4xC2", families::abelian_group(2, &pt(&[2, 1]), lim)?, [1, 3, 3, 1]),
        ("C2xC2xC2", families::abelian_group(2, &pt(&[1, 1, 1]), lim)?, [1, 7, 7, 1]),
        ("D4", families::dihedral(4, lim)?, [1, 5, 3, 1]),
        ("Q8", families::quaternion8(), [1, 1, 3, 1]),
    ];
    for (label, g, counts) in cases {
        let z = zeta_of_group(&g, lim)?;
        let expected = ZetaSeries::from_counts(
            8,
            [(1, counts[0]), (2, counts[1]), (4, counts[2]), (8, counts[3])],
        )?;
        r.case(label, z == expected, &z.render(RenderStyle::Plain));
    }
    Ok(())
}

/// Metacyclic groups share the zeta series of their abelian type.
fn coincidence_metacyclic(r: &mut Reporter, lim: &Limits) -> subzeta::Result<()> {
    for (p, m, n) in [(3u64, 2u32, 1u32), (5, 2, 1), (2, 3, 1), (2, 3, 2), (3, 3, 1)] {
        let check = check_coincidence(p, &pt(&[m, n]), lim)?;
        let detail = if check.equal {
            check.twisted.render(RenderStyle::Plain)
        } else {
            format!(
                "{} vs {}",
                check.twisted.render(RenderStyle::Plain),
                check.abelian.render(RenderStyle::Plain)
            )
        };
        r.case(&format!("M({p};{m},{n}) vs A({p};{m},{n})"), check.equal, &detail);
    }
    Ok(())
}

/// Iterated twisted products share the zeta series of their abelian type.
fn coincidence_tilde(r: &mut Reporter, lim: &Limits) -> subzeta::Result<()> {
    for (p, parts) in [(3u64, &[2u32, 1][..]), (2, &[3, 1]), (2, &[3, 1, 1]), (3, &[2, 1, 1])] {
        let lam = pt(parts);
        let twisted = zeta_of_group(&families::generalized_metabelian(p, &lam, lim)?, lim)?;
        let straight = zeta_of_group(&families::abelian_group(p, &lam, lim)?, lim)?;
        let equal = twisted == straight;
        let detail = if equal {
            twisted.render(RenderStyle::Plain)
        } else {
            format!(
                "{} vs {}",
                twisted.render(RenderStyle::Plain),
                straight.render(RenderStyle::Plain)
            )
        };
        r.case(&format!("T({p};{lam}) vs A({p};{lam})"), equal, &detail);
    }
    Ok(())
}

/// The step-down identity relating a type's counts to two smaller types.
fn stehling(r: &mut Reporter) -> subzeta::Result<()> {
    for w in 1..=8u32 {
        let mut all = true;
        let mut checked = 0usize;
        for mu in Partition::all_of_weight(w) {
            for k in 0..=u64::from(w) + 1 {
                all &= stehling_identity(&mu, k);
                checked += 1;
            }
        }
        r.case(&format!("weight {w}"), all, &format!("{checked} identities"));
    }
    Ok(())
}

/// Count tables are palindromic with unimodal coefficient sequences.
fn unimodal(r: &mut Reporter) -> subzeta::Result<()> {
    for w in 1..=12u32 {
        let mut all = true;
        let mut checked = 0usize;
        for lam in Partition::all_of_weight(w) {
            all &= is_symmetric_unimodal(&lam);
            checked += 1;
        }
        r.case(&format!("weight {w}"), all, &format!("{checked} types"));
    }
    Ok(())
}

/// Numeric recovery inverts the symbolic zeta series exactly.
fn recovery_roundtrip(r: &mut Reporter) -> subzeta::Result<()> {
    for p in [2u64, 3, 5] {
        let mut all = true;
        let mut checked = 0usize;
        for w in 1..=10u32 {
            for lam in Partition::all_of_weight(w) {
                if lam.len() > 5 {
                    continue;
                }
                let z = zeta_abelian(&lam, p)?;
                all &= recover_from_zeta_numeric(&z, p)? == Some(lam);
                checked += 1;
            }
        }
        r.case(&format!("p={p}"), all, &format!("{checked} types round-tripped"));
    }
    Ok(())
}
