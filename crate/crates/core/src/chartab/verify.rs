use num_bigint::BigInt;
use serde::Serialize;

use super::CharacterTable;
use crate::{Cyclotomic, Rational};

const MAX_DETAILS: usize = 6;

/// Outcome of one named consistency check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("[{}] {}\n", if c.passed { "PASS" } else { "FAIL" }, c.name));
            for d in &c.details {
                out.push_str(&format!("       {d}\n"));
            }
        }
        out
    }
}

struct Collector {
    name: &'static str,
    failures: Vec<String>,
    count: usize,
}

impl Collector {
    fn new(name: &'static str) -> Self {
        Collector { name, failures: Vec::new(), count: 0 }
    }

    fn fail(&mut self, detail: String) {
        if self.failures.len() < MAX_DETAILS {
            self.failures.push(detail);
        }
        self.count += 1;
    }

    fn finish(mut self) -> Check {
        if self.count > self.failures.len() {
            self.failures.push(format!("... and {} more", self.count - self.failures.len()));
        }
        Check { name: self.name.to_string(), passed: self.count == 0, details: self.failures }
    }
}

/// Names of the individual checks, in report order.
pub mod names {
    pub const CLASS_SIZES: &str = "class sizes sum to order";
    pub const IDENTITY: &str = "identity class and trivial character";
    pub const DEGREES: &str = "sum of squared degrees equals order";
    pub const FIRST_ORTHOGONALITY: &str = "row orthogonality";
    pub const SECOND_ORTHOGONALITY: &str = "column orthogonality";
    pub const INVERSE_MAP: &str = "inverse map";
    pub const POWER_MAP: &str = "power2 map";
}

use names::*;

impl CharacterTable {
    /// Runs every consistency check and reports each outcome; never fails.
    pub fn verify(&self) -> VerificationReport {
        VerificationReport {
            checks: vec![
                self.check_sizes(),
                self.check_identity(),
                self.check_degrees(),
                self.check_rows(),
                self.check_columns(),
                self.check_inverse(),
                self.check_power2(),
            ],
        }
    }

    fn check_sizes(&self) -> Check {
        let mut col = Collector::new(CLASS_SIZES);
        let total: u128 = self.classes.iter().map(|c| c.size as u128).sum();
        if total != self.order as u128 {
            col.fail(format!("sizes sum to {total}, order is {}", self.order));
        }
        for c in &self.classes {
            if self.order % c.size != 0 {
                col.fail(format!("size {} of class {} does not divide {}", c.size, c.name, self.order));
            }
        }
        col.finish()
    }

    fn check_identity(&self) -> Check {
        let mut col = Collector::new(IDENTITY);
        let id = &self.classes[0];
        if id.size != 1 || id.power2 != 0 || id.inverse != 0 {
            col.fail(format!("class {} is not a valid identity class", id.name));
        }
        if !self.characters[0].iter().all(Cyclotomic::is_one) {
            col.fail("χ1 is not the trivial character".into());
        }
        col.finish()
    }

    fn check_degrees(&self) -> Check {
        let mut col = Collector::new(DEGREES);
        let total: u128 = self.dims.iter().map(|&d| (d as u128) * (d as u128)).sum();
        if total != self.order as u128 {
            col.fail(format!("sum of squared degrees is {total}, order is {}", self.order));
        }
        col.finish()
    }

    fn check_rows(&self) -> Check {
        let mut col = Collector::new(FIRST_ORTHOGONALITY);
        let r = self.num_classes();
        for i in 0..r {
            let products = self.inner_products(&self.characters[i]);
            for (j, v) in products.iter().enumerate().skip(i) {
                let expect = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if *v != expect {
                    col.fail(format!("<χ{}, χ{}> = {v}", i + 1, j + 1));
                }
            }
        }
        col.finish()
    }

    fn check_columns(&self) -> Check {
        let mut col = Collector::new(SECOND_ORTHOGONALITY);
        let r = self.num_classes();
        let amb = self.ambient();
        for c in 0..r {
            for d in c..r {
                let sum = amb
                    .and_then(|a| a.column_pairing(c, d))
                    .unwrap_or_else(|| self.characters.iter().map(|row| row[c].mul_ref(&row[d].conj())).sum());
                let expect = if c == d {
                    Cyclotomic::from_scalar(Rational::new(BigInt::from(self.order), BigInt::from(self.classes[c].size)))
                } else {
                    Cyclotomic::zero()
                };
                if sum != expect {
                    col.fail(format!(
                        "classes {} and {}: sum is {sum}, expected {expect}",
                        self.classes[c].name, self.classes[d].name
                    ));
                }
            }
        }
        col.finish()
    }

    fn check_inverse(&self) -> Check {
        let mut col = Collector::new(INVERSE_MAP);
        for (c, class) in self.classes.iter().enumerate() {
            let inv = &self.classes[class.inverse];
            if inv.inverse != c {
                col.fail(format!("inverse map is not an involution at class {}", class.name));
            }
            if inv.size != class.size {
                col.fail(format!("classes {} and {} are inverse but differ in size", class.name, inv.name));
            }
            for (i, row) in self.characters.iter().enumerate() {
                if row[class.inverse] != row[c].conj() {
                    col.fail(format!(
                        "χ{} at class {}: value at the inverse class is not the conjugate",
                        i + 1,
                        class.name
                    ));
                }
            }
        }
        col.finish()
    }

    /// `g ↦ χ(g²)` is a virtual character, with indicator in {-1, 0, 1}
    /// when paired against the trivial character.
    fn check_power2(&self) -> Check {
        let mut col = Collector::new(POWER_MAP);
        for (i, row) in self.characters.iter().enumerate() {
            let squared: Vec<Cyclotomic> = self.classes.iter().map(|c| row[c.power2].clone()).collect();
            for (j, v) in self.inner_products(&squared).into_iter().enumerate() {
                let ok = v.to_rational().map(|q| q.is_integer()).unwrap_or(false);
                if !ok {
                    col.fail(format!("<χ{}(g²), χ{}> = {v} is not an integer", i + 1, j + 1));
                } else if j == 0 {
                    let q = v.to_rational().unwrap();
                    let one = Rational::from_integer(BigInt::from(1));
                    if q > one || q < -one {
                        col.fail(format!("χ{} has Frobenius–Schur indicator {q}", i + 1));
                    }
                }
            }
        }
        col.finish()
    }
}
