//! Built-in character tables: cyclic groups, dicyclic (binary dihedral)
//! groups, the binary polyhedral groups and direct products of these.

mod polyhedral;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::chartab::{CharacterTable, ClassFunction, ConjClass};
use crate::{Cyclotomic, Rational};

/// Largest group order the catalog will construct.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("invalid group spec '{spec}': {reason}")]
    InvalidSpec { spec: String, reason: String },
    #[error("{0} has no natural two-dimensional representation")]
    NoNaturalRep(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dicyclic group of the given order `4n`.
    Dicyclic(u64),
    Quaternion8,
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Product(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dicyclic(n) => *n,
            GroupSpec::Quaternion8 => 8,
            GroupSpec::BinaryTetrahedral => 24,
            GroupSpec::BinaryOctahedral => 48,
            GroupSpec::BinaryIcosahedral => 120,
            GroupSpec::Product(a, b) => a.order().saturating_mul(b.order()),
        }
    }

    fn validate(&self, text: &str) -> Result<(), CatalogError> {
        let reason = match self {
            GroupSpec::Cyclic(0) => Some("cyclic order must be at least 1".to_string()),
            GroupSpec::Dicyclic(m) if *m < 8 || m % 4 != 0 => {
                Some(format!("dicyclic order {m} must be a multiple of 4 and at least 8"))
            }
            GroupSpec::Product(a, b) => {
                a.validate(text)?;
                b.validate(text)?;
                None
            }
            _ => None,
        };
        let reason = reason.or_else(|| (self.order() > MAX_ORDER).then(|| format!("order exceeds {MAX_ORDER}")));
        match reason {
            Some(reason) => Err(CatalogError::InvalidSpec { spec: text.to_string(), reason }),
            None => Ok(()),
        }
    }

    /// Cyclic, dicyclic and binary polyhedral groups, i.e. the finite
    /// subgroups of SU(2) in the catalog.
    pub fn is_su2_family(&self) -> bool {
        !matches!(self, GroupSpec::Product(..))
    }
}

impl FromStr for GroupSpec {
    type Err = CatalogError;

    fn from_str(text: &str) -> Result<Self, CatalogError> {
        let invalid = |reason: String| CatalogError::InvalidSpec { spec: text.to_string(), reason };
        let mut factors = Vec::new();
        for part in text.trim().split('x') {
            let part = part.trim();
            let number = |s: &str| s.trim().parse::<u64>().map_err(|_| invalid(format!("'{s}' is not a number")));
            let spec = match part {
                "Q8" => GroupSpec::Quaternion8,
                "2T" => GroupSpec::BinaryTetrahedral,
                "2O" => GroupSpec::BinaryOctahedral,
                "2I" => GroupSpec::BinaryIcosahedral,
                _ => {
                    if let Some(n) = part.strip_prefix("C:") {
                        GroupSpec::Cyclic(number(n)?)
                    } else if let Some(m) = part.strip_prefix("BD:") {
                        GroupSpec::Dicyclic(number(m)?)
                    } else {
                        return Err(invalid(format!("unknown group '{part}'")));
                    }
                }
            };
            factors.push(spec);
        }
        let spec = factors
            .into_iter()
            .reduce(|a, b| GroupSpec::Product(Box::new(a), Box::new(b)))
            .expect("split yields at least one part");
        spec.validate(text)?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C:{n}"),
            GroupSpec::Dicyclic(m) => write!(f, "BD:{m}"),
            GroupSpec::Quaternion8 => write!(f, "Q8"),
            GroupSpec::BinaryTetrahedral => write!(f, "2T"),
            GroupSpec::BinaryOctahedral => write!(f, "2O"),
            GroupSpec::BinaryIcosahedral => write!(f, "2I"),
            GroupSpec::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

pub fn build(spec: &GroupSpec) -> Result<CharacterTable, CatalogError> {
    spec.validate(&spec.to_string())?;
    let table = match spec {
        GroupSpec::Cyclic(n) => cyclic(*n as usize),
        GroupSpec::Dicyclic(m) => dicyclic((*m / 4) as usize, spec.to_string()),
        GroupSpec::Quaternion8 => dicyclic(2, spec.to_string()),
        GroupSpec::BinaryTetrahedral => polyhedral::binary_tetrahedral(),
        GroupSpec::BinaryOctahedral => polyhedral::binary_octahedral(),
        GroupSpec::BinaryIcosahedral => polyhedral::binary_icosahedral(),
        GroupSpec::Product(a, b) => direct_product(&build(a)?, &build(b)?),
    };
    Ok(table)
}

fn cyclic(n: usize) -> CharacterTable {
    let classes = (0..n)
        .map(|k| {
            let name = match k {
                0 => "1".to_string(),
                1 => "g".to_string(),
                _ => format!("g^{k}"),
            };
            ConjClass::new(name, 1, 2 * k % n, (n - k) % n)
        })
        .collect();
    let characters =
        (0..n).map(|j| (0..n).map(|k| Cyclotomic::root_of_unity(n, (j * k % n) as i64)).collect()).collect();
    CharacterTable::new(format!("C:{n}"), n as u64, classes, characters).expect("cyclic table is well formed")
}

/// Dicyclic group of order `4n` with `x^2 = y^n = -1` and `x y x^{-1} = y^{-1}`.
///
/// Classes: `1`, `-1`, the two classes of `x y^m` (even and odd `m`, each
/// of size `n`), then `y^k` for `1 <= k < n`. Rows: the four linear
/// characters, then the 2-dimensional `χ_k(y^m) = ζ^{km} + ζ^{-km}` with
/// `ζ = E(2n)`, taken in pairs `(k, n-k)` with the even member first and
/// `k = n/2` last.
fn dicyclic(n: usize, name: String) -> CharacterTable {
    assert!(n >= 2);
    let two_n = 2 * n;
    let y_class = |m: usize| -> usize {
        let m = m % two_n;
        let m = if m > n { two_n - m } else { m };
        match m {
            0 => 0,
            _ if m == n => 1,
            _ => 3 + m,
        }
    };
    let odd = n % 2 == 1;
    let mut classes = vec![
        ConjClass::new("1", 1, 0, 0),
        ConjClass::new("-1", 1, 0, 1),
        ConjClass::new("x", n as u64, 1, if odd { 3 } else { 2 }),
        ConjClass::new(if odd { "-x" } else { "xy" }, n as u64, 1, if odd { 2 } else { 3 }),
    ];
    for k in 1..n {
        let name = if k == 1 { "y".to_string() } else { format!("y^{k}") };
        classes.push(ConjClass::new(name, 2, y_class(2 * k), 3 + k));
    }

    let int = Cyclotomic::from_integer;
    let linear = |s: i64, t: Cyclotomic| -> Vec<Cyclotomic> {
        let s_pow = |k: usize| if s == 1 || k % 2 == 0 { int(1) } else { int(-1) };
        let mut row = vec![int(1), s_pow(n), t.clone(), t.mul_ref(&int(s))];
        row.extend((1..n).map(s_pow));
        row
    };
    let mut characters = vec![linear(1, int(1))];
    if odd {
        let i = Cyclotomic::root_of_unity(4, 1);
        characters.push(linear(1, int(-1)));
        characters.push(linear(-1, i.clone()));
        characters.push(linear(-1, -i));
    } else {
        characters.push(linear(-1, int(1)));
        characters.push(linear(-1, int(-1)));
        characters.push(linear(1, int(-1)));
    }
    let two_dim = |k: usize| -> Vec<Cyclotomic> {
        let sign = if k % 2 == 0 { 2 } else { -2 };
        let mut row = vec![int(2), int(sign), int(0), int(0)];
        row.extend((1..n).map(|m| {
            let e = (k * m % two_n) as i64;
            Cyclotomic::root_of_unity(two_n, e) + Cyclotomic::root_of_unity(two_n, -e)
        }));
        row
    };
    for k in 1..n.div_ceil(2) {
        let (a, b) = if k % 2 == 0 || (n - k) % 2 == 1 { (k, n - k) } else { (n - k, k) };
        characters.push(two_dim(a));
        characters.push(two_dim(b));
    }
    if n % 2 == 0 {
        characters.push(two_dim(n / 2));
    }
    CharacterTable::new(name, 4 * n as u64, classes, characters).expect("dicyclic table is well formed")
}

/// Classes are pairs `(c, d)` in `c`-major order, rows are products
/// `χ_i ⊗ ψ_j` in `i`-major order.
pub fn direct_product(a: &CharacterTable, b: &CharacterTable) -> CharacterTable {
    let rb = b.num_classes();
    let mut classes = Vec::with_capacity(a.num_classes() * rb);
    for ca in a.classes() {
        for cb in b.classes() {
            classes.push(ConjClass::new(
                format!("({},{})", ca.name, cb.name),
                ca.size * cb.size,
                ca.power2 * rb + cb.power2,
                ca.inverse * rb + cb.inverse,
            ));
        }
    }
    let mut characters = Vec::with_capacity(classes.len());
    for chi in a.characters() {
        for psi in b.characters() {
            characters.push(chi.iter().flat_map(|u| psi.iter().map(move |v| u.mul_ref(v))).collect());
        }
    }
    CharacterTable::new(format!("{}x{}", a.name(), b.name()), a.order() * b.order(), classes, characters)
        .expect("product of well-formed tables is well formed")
}

/// Multiplicities of the defining representation of an SU(2) subgroup: for
/// cyclic groups `diag(ζ, ζ^{-1})`, otherwise the first faithful
/// 2-dimensional irreducible of quaternionic type.
pub fn natural_rep(spec: &GroupSpec) -> Result<Vec<u64>, CatalogError> {
    let table = build(spec)?;
    let r = table.num_classes();
    let mut mult = vec![0u64; r];
    match spec {
        GroupSpec::Product(..) => return Err(CatalogError::NoNaturalRep(spec.to_string())),
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            match n {
                1 => mult[0] = 2,
                2 => mult[1] = 2,
                _ => {
                    mult[1] = 1;
                    mult[n - 1] = 1;
                }
            }
        }
        _ => {
            let nus = table.fs_indicators().expect("catalog tables are valid");
            let i = (0..r)
                .find(|&i| {
                    table.dims()[i] == 2 && nus[i] == -1 && table.irreducible(i).kernel_classes_unchecked() == [0]
                })
                .expect("SU(2) subgroups have a faithful quaternionic plane");
            mult[i] = 1;
        }
    }
    Ok(mult)
}

/// Character of the regular representation: `|G|` at the identity, zero elsewhere.
pub fn regular_character(table: &CharacterTable) -> ClassFunction<'_> {
    let mut values = vec![Cyclotomic::zero(); table.num_classes()];
    values[0] = Cyclotomic::from_scalar(Rational::from_integer(table.order().into()));
    table.class_function(values).expect("length matches")
}

/// Multiplicities of the regular representation, namely the degrees.
pub fn regular_rep(table: &CharacterTable) -> Vec<u64> {
    table.dims().to_vec()
}

#[cfg(test)]
mod tests;
