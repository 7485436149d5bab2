//! Textual group specifications.
//!
//! The grammar, whitespace-insensitive with a left-associative product:
//!
//! ```text
//! spec := term ("x" term)*
//! term := atom | "(" spec ")"
//! atom := "C" int            cyclic of order int
//!       | "D" int            dihedral with int rotations (order 2*int)
//!       | "Q8"               the quaternion group of order 8
//!       | "H" int            Heisenberg group modulo the odd prime int
//!       | "A(" int ";" intlist ")"    abelian p-group of the given type
//!       | "M(" int ";" int "," int ")"  metacyclic p-group with parameters m, n
//!       | "T(" int ";" intlist ")"    iterated twisted product of the given type
//!       | "file(" quoted ")"          Cayley table loaded from a JSON file
//! ```
//!
//! Rendering a parsed spec produces text that parses back to an equal tree.

use std::fmt;

use subzeta::{families, GroupTable, Limits, Partition};

/// Abstract syntax of a group specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion8,
    Heisenberg(u64),
    Abelian { p: u64, parts: Vec<u32> },
    Metacyclic { p: u64, m: u32, n: u32 },
    Twisted { p: u64, parts: Vec<u32> },
    File(String),
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

/// A parse failure: where it happened, what would have been accepted there,
/// and what was actually found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub expected: Vec<&'static str>,
    pub found: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "parse error at offset {}: expected {}; found {}",
            self.offset,
            self.expected.join(" or "),
            self.found
        )
    }
}

impl std::error::Error for ParseError {}

/// Parses a group specification.
pub fn parse_spec(text: &str) -> Result<GroupSpec, ParseError> {
    let mut parser = Parser { bytes: text.as_bytes(), pos: 0 };
    let spec = parser.spec()?;
    parser.skip_ws();
    if parser.pos < parser.bytes.len() {
        return Err(parser.error(vec!["'x'", "end of input"]));
    }
    Ok(spec)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

const ATOM_TOKENS: [&str; 9] = [
    "'C<int>'",
    "'D<int>'",
    "'Q8'",
    "'H<int>'",
    "'A(<p>;<parts>)'",
    "'M(<p>;<m>,<n>)'",
    "'T(<p>;<parts>)'",
    "'file(\"<path>\")'",
    "'('",
];

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn error(&self, expected: Vec<&'static str>) -> ParseError {
        let found = match self.bytes.get(self.pos) {
            Some(&b) => format!("{:?}", b as char),
            None => "end of input".into(),
        };
        ParseError { offset: self.pos, expected, found }
    }

    fn expect(&mut self, byte: u8, token: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(vec![token]))
        }
    }

    fn int(&mut self) -> Result<u64, ParseError> {
        if !self.peek().is_some_and(|b| b.is_ascii_digit()) {
            return Err(self.error(vec!["an integer"]));
        }
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(b - b'0')))
                .ok_or_else(|| self.error(vec!["a smaller integer"]))?;
            self.pos += 1;
        }
        Ok(value)
    }

    fn int_u32(&mut self) -> Result<u32, ParseError> {
        let v = self.int()?;
        u32::try_from(v).map_err(|_| self.error(vec!["a smaller integer"]))
    }

    fn intlist(&mut self) -> Result<Vec<u32>, ParseError> {
        let mut parts = vec![self.int_u32()?];
        while self.peek() == Some(b',') {
            self.pos += 1;
            parts.push(self.int_u32()?);
        }
        Ok(parts)
    }

    /// `"(" p ";"` — the shared head of the parenthesized atoms.
    fn prime_head(&mut self) -> Result<u64, ParseError> {
        self.expect(b'(', "'('")?;
        let p = self.int()?;
        self.expect(b';', "';'")?;
        Ok(p)
    }

    fn spec(&mut self) -> Result<GroupSpec, ParseError> {
        let mut acc = self.term()?;
        while self.peek() == Some(b'x') {
            self.pos += 1;
            let rhs = self.term()?;
            acc = GroupSpec::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroupSpec, ParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.spec()?;
                self.expect(b')', "')'")?;
                Ok(inner)
            }
            Some(b'C') => {
                self.pos += 1;
                Ok(GroupSpec::Cyclic(self.int()?))
            }
            Some(b'D') => {
                self.pos += 1;
                Ok(GroupSpec::Dihedral(self.int()?))
            }
            Some(b'Q') => {
                self.pos += 1;
                self.expect(b'8', "'8'")?;
                Ok(GroupSpec::Quaternion8)
            }
            Some(b'H') => {
                self.pos += 1;
                Ok(GroupSpec::Heisenberg(self.int()?))
            }
            Some(b'A') => {
                self.pos += 1;
                let p = self.prime_head()?;
                let parts = self.intlist()?;
                self.expect(b')', "')'")?;
                Ok(GroupSpec::Abelian { p, parts })
            }
            Some(b'M') => {
                self.pos += 1;
                let p = self.prime_head()?;
                let m = self.int_u32()?;
                self.expect(b',', "','")?;
                let n = self.int_u32()?;
                self.expect(b')', "')'")?;
                Ok(GroupSpec::Metacyclic { p, m, n })
            }
            Some(b'T') => {
                self.pos += 1;
                let p = self.prime_head()?;
                let parts = self.intlist()?;
                self.expect(b')', "')'")?;
                Ok(GroupSpec::Twisted { p, parts })
            }
            Some(b'f') => {
                for (byte, token) in [(b'f', "'file'"), (b'i', "'file'"), (b'l', "'file'"), (b'e', "'file'")] {
                    self.expect(byte, token)?;
                }
                self.expect(b'(', "'('")?;
                self.expect(b'"', "'\"'")?;
                let start = self.pos;
                while self.bytes.get(self.pos).is_some_and(|&b| b != b'"') {
                    self.pos += 1;
                }
                let path = String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned();
                self.expect(b'"', "'\"'")?;
                self.expect(b')', "')'")?;
                Ok(GroupSpec::File(path))
            }
            _ => Err(self.error(ATOM_TOKENS.to_vec())),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(parts: &[u32]) -> String {
            parts.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            GroupSpec::Cyclic(m) => write!(f, "C{m}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::Heisenberg(p) => write!(f, "H{p}"),
            GroupSpec::Abelian { p, parts } => write!(f, "A({p};{})", list(parts)),
            GroupSpec::Metacyclic { p, m, n } => write!(f, "M({p};{m},{n})"),
            GroupSpec::Twisted { p, parts } => write!(f, "T({p};{})", list(parts)),
            GroupSpec::File(path) => write!(f, "file(\"{path}\")"),
            GroupSpec::Product(a, b) => {
                write!(f, "{a}x")?;
                // The product is left-associative, so a product on the right
                // only survives a round trip behind parentheses.
                if matches!(**b, GroupSpec::Product(..)) {
                    write!(f, "({b})")
                } else {
                    write!(f, "{b}")
                }
            }
        }
    }
}

/// Realizes a specification as a concrete multiplication table.
pub fn build(spec: &GroupSpec, lim: &Limits) -> subzeta::Result<GroupTable> {
    match spec {
        GroupSpec::Cyclic(m) => families::cyclic(*m, lim),
        GroupSpec::Dihedral(n) => families::dihedral(*n, lim),
        GroupSpec::Quaternion8 => Ok(families::quaternion8()),
        GroupSpec::Heisenberg(p) => families::heisenberg(*p, lim),
        GroupSpec::Abelian { p, parts } => {
            families::abelian_group(*p, &Partition::new(parts.clone())?, lim)
        }
        GroupSpec::Metacyclic { p, m, n } => families::metacyclic(*p, *m, *n, lim),
        GroupSpec::Twisted { p, parts } => {
            families::generalized_metabelian(*p, &Partition::new(parts.clone())?, lim)
        }
        GroupSpec::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                subzeta::Error::Malformed(format!("cannot read {path}: {e}"))
            })?;
            GroupTable::from_cayley_json(&text, path, false)
        }
        GroupSpec::Product(a, b) => {
            let left = build(a, lim)?;
            let right = build(b, lim)?;
            families::direct_product(&left, &right, lim)
        }
    }
}
