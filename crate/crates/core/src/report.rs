//! Check reports: one record per verified identity, with a failure
//! witness naming the first basis vector on which the two composites
//! disagree.

use crate::graded::LinMap;
use crate::matrix::column_string;

/// First basis vector separating the two sides of a failed identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub basis_index: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// The identity this record certifies, written as an equation.
    pub law: String,
    pub pass: bool,
    pub witness: Option<Witness>,
}

/// Compares two composite maps exactly and records the outcome.
pub fn eq_check(name: &str, law: &str, lhs: &LinMap, rhs: &LinMap) -> Check {
    assert_eq!(lhs.dom(), rhs.dom(), "comparing maps with different domains in `{name}`");
    assert_eq!(lhs.cod(), rhs.cod(), "comparing maps with different codomains in `{name}`");
    let witness = (0..lhs.mat().cols())
        .find(|&c| (0..lhs.mat().rows()).any(|r| lhs.mat().get(r, c) != rhs.mat().get(r, c)))
        .map(|c| Witness {
            basis_index: c,
            lhs: column_string(lhs.mat(), c),
            rhs: column_string(rhs.mat(), c),
        });
    Check { name: name.to_owned(), law: law.to_owned(), pass: witness.is_none(), witness }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn record(&mut self, name: &str, law: &str, pass: bool) {
        self.push(Check { name: name.to_owned(), law: law.to_owned(), pass, witness: None });
    }

    pub fn require_eq(&mut self, name: &str, law: &str, lhs: &LinMap, rhs: &LinMap) {
        self.push(eq_check(name, law, lhs, rhs));
    }

    /// Appends `other` with every check name prefixed by `prefix.`.
    pub fn absorb(&mut self, prefix: &str, other: Report) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn find(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}
