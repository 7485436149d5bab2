//! Finite groups as dense multiplication tables.
//!
//! Elements are indices `0..N`, multiplication is a flat `N×N` table lookup,
//! and every constructor fixes a canonical element enumeration (lexicographic
//! in normal-form exponent tuples), so equal constructions yield identical
//! tables. Validation checks the full group axioms: exhaustively for orders
//! up to [`FULL_CHECK_LIMIT`], by deterministic random sampling above that.

use crate::bitset::ElementSet;
use crate::error::{Error, TableDefect};
use crate::Result;
use num_integer::Integer;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Deserialize;

/// Largest order for which `validate` runs the full O(N³) associativity scan.
pub const FULL_CHECK_LIMIT: usize = 512;

/// Triples sampled per element pair when the full scan is skipped.
const SAMPLE_FACTOR: usize = 10;

/// A finite group given by its multiplication table.
///
/// The table stores element indices as `u16`, which caps supported orders at
/// 65535 — far above the default order guard and any table that fits in
/// memory anyway.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    identity: u32,
    table: Vec<u16>,
    inverse: Vec<u16>,
    label: String,
}

impl GroupTable {
    /// Builds a table from a raw multiplication closure; internal constructor
    /// used by the group families, which are correct by construction.
    pub(crate) fn from_fn(
        order: usize,
        identity: u32,
        label: String,
        mul: impl Fn(u32, u32) -> u32,
    ) -> Result<Self> {
        assert!(order > 0, "groups are nonempty");
        assert!(order <= u16::MAX as usize + 1, "order exceeds table index range");
        let mut table = vec![0u16; order * order];
        for a in 0..order as u32 {
            for b in 0..order as u32 {
                let c = mul(a, b);
                debug_assert!((c as usize) < order);
                table[a as usize * order + b as usize] = c as u16;
            }
        }
        Self::with_table(order, identity, table, label)
    }

    /// Wraps an existing flat table, deriving inverses. The table must at
    /// least have a genuine two-sided identity and row-wise inverses; full
    /// validation is a separate step.
    fn with_table(order: usize, identity: u32, table: Vec<u16>, label: String) -> Result<Self> {
        let mut inverse = vec![u16::MAX; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            match row.iter().position(|&c| c as u32 == identity) {
                Some(b) if table[b * order + a] as u32 == identity => inverse[a] = b as u16,
                _ => return Err(TableDefect::MissingInverse { element: a as u32 }.into()),
            }
        }
        Ok(GroupTable { order, identity, table, inverse, label })
    }

    /// Number of elements.
    pub fn order(&self) -> usize {
        self.order
    }

    /// The identity element's index.
    pub fn identity(&self) -> u32 {
        self.identity
    }

    /// Human-readable construction label, e.g. `"M(3;2,1) x C4"`.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// The product of two elements.
    #[inline(always)]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize] as u32
    }

    /// The inverse of an element.
    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize] as u32
    }

    /// `x^n` by repeated squaring over the table.
    pub fn pow(&self, x: u32, mut n: u64) -> u32 {
        let mut base = x;
        let mut acc = self.identity;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            n >>= 1;
        }
        acc
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, x: u32) -> u64 {
        let mut acc = x;
        let mut n = 1u64;
        while acc != self.identity {
            acc = self.mul(acc, x);
            n += 1;
        }
        n
    }

    /// Exponent of the group: the lcm of all element orders.
    pub fn exponent(&self) -> u64 {
        let mut e = 1u64;
        for x in 0..self.order as u32 {
            e = e.lcm(&self.element_order(x));
        }
        e
    }

    /// The center `{x : xy = yx for all y}` as an element set.
    pub fn center(&self) -> ElementSet {
        let mut z = ElementSet::new(self.order);
        for x in 0..self.order as u32 {
            if (0..self.order as u32).all(|y| self.mul(x, y) == self.mul(y, x)) {
                z.insert(x);
            }
        }
        z
    }

    /// True when the table is commutative.
    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32)
            .all(|a| (a + 1..self.order as u32).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks the group axioms, reporting the first violated one.
    ///
    /// Rows and columns must be permutations, the declared identity must be
    /// two-sided, every element needs a two-sided inverse, and multiplication
    /// must associate. Associativity is scanned exhaustively for orders up to
    /// [`FULL_CHECK_LIMIT`] or when `force_full` is set; otherwise a
    /// deterministic sample of `10·N²` triples is checked.
    pub fn validate(&self, force_full: bool) -> Result<()> {
        let n = self.order;
        if self.identity as usize >= n {
            return Err(TableDefect::IdentityOutOfRange { identity: self.identity }.into());
        }
        let mut seen = vec![u32::MAX; n];
        for a in 0..n {
            for b in 0..n {
                let c = self.table[a * n + b] as usize;
                if c >= n {
                    return Err(TableDefect::EntryOutOfRange {
                        row: a,
                        col: b,
                        value: c as u32,
                    }
                    .into());
                }
                if seen[c] == a as u32 {
                    return Err(TableDefect::RowNotPermutation { row: a as u32, value: c as u32 }.into());
                }
                seen[c] = a as u32;
            }
        }
        let mut seen = vec![u32::MAX; n];
        for b in 0..n {
            for a in 0..n {
                let c = self.table[a * n + b] as usize;
                if seen[c] == b as u32 {
                    return Err(TableDefect::ColumnNotPermutation { col: b as u32, value: c as u32 }.into());
                }
                seen[c] = b as u32;
            }
        }
        let e = self.identity;
        for x in 0..n as u32 {
            if self.mul(e, x) != x || self.mul(x, e) != x {
                return Err(TableDefect::IdentityNotTwoSided { identity: e, witness: x }.into());
            }
        }
        for x in 0..n as u32 {
            let y = self.inv(x);
            if self.mul(x, y) != e || self.mul(y, x) != e {
                return Err(TableDefect::MissingInverse { element: x }.into());
            }
        }
        if force_full || n <= FULL_CHECK_LIMIT {
            for x in 0..n as u32 {
                for y in 0..n as u32 {
                    let xy = self.mul(x, y);
                    for z in 0..n as u32 {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return Err(TableDefect::NotAssociative { x, y, z }.into());
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0000 + n as u64);
            for _ in 0..SAMPLE_FACTOR * n * n {
                let x = rng.gen_range(0..n as u32);
                let y = rng.gen_range(0..n as u32);
                let z = rng.gen_range(0..n as u32);
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return Err(TableDefect::NotAssociative { x, y, z }.into());
                }
            }
        }
        Ok(())
    }

    /// Parses the JSON Cayley-table document
    /// `{"order": N, "identity": i, "table": [[…]; N]}` (0-based indices) and
    /// validates the group axioms, rejecting non-groups with the first
    /// violated axiom.
    pub fn from_cayley_json(json: &str, label: &str, force_full: bool) -> Result<GroupTable> {
        let doc: CayleyDoc =
            serde_json::from_str(json).map_err(|e| Error::Malformed(e.to_string()))?;
        Self::from_cayley_doc(doc, label, force_full)
    }

    fn from_cayley_doc(doc: CayleyDoc, label: &str, force_full: bool) -> Result<GroupTable> {
        let n = doc.order;
        if n == 0 {
            return Err(Error::Malformed("order must be positive".into()));
        }
        if n > u16::MAX as usize + 1 {
            return Err(Error::Malformed(format!("order {n} exceeds the table index range")));
        }
        if doc.table.len() != n {
            return Err(TableDefect::BadShape { order: n, row: doc.table.len(), len: 0 }.into());
        }
        if doc.identity as usize >= n {
            return Err(TableDefect::IdentityOutOfRange { identity: doc.identity }.into());
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in doc.table.iter().enumerate() {
            if row.len() != n {
                return Err(TableDefect::BadShape { order: n, row: r, len: row.len() }.into());
            }
            for (c, &v) in row.iter().enumerate() {
                if v as usize >= n {
                    return Err(TableDefect::EntryOutOfRange { row: r, col: c, value: v }.into());
                }
                table.push(v as u16);
            }
        }
        let g = Self::with_table(n, doc.identity, table, label.to_string())?;
        g.validate(force_full)?;
        Ok(g)
    }

    /// Serializes to the same JSON document accepted by
    /// [`GroupTable::from_cayley_json`].
    pub fn to_cayley_json(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\"order\": {}, \"identity\": {}, \"table\": [", self.order, self.identity));
        for a in 0..self.order {
            if a > 0 {
                out.push_str(", ");
            }
            out.push('[');
            for b in 0..self.order {
                if b > 0 {
                    out.push(',');
                }
                out.push_str(&self.table[a * self.order + b].to_string());
            }
            out.push(']');
        }
        out.push_str("]}");
        out
    }
}

#[derive(Deserialize)]
struct CayleyDoc {
    order: usize,
    identity: u32,
    table: Vec<Vec<u32>>,
}
