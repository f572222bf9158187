//! Variable indices and orderings.

use std::fmt;

/// A variable, identified by its position in a [`VarOrder`].
/// Position 0 is the smallest variable (lifted first).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(pub usize);

impl Var {
    pub fn level(self) -> usize {
        self.0 + 1
    }
}

/// An ordered list of variable names, smallest first.
///
/// Projection eliminates the greatest variable first; lifting starts from the
/// smallest. User-facing syntax lists variables greatest-first (`[y,x]` makes
/// `y` the main variable); the conversion happens at the input boundary.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct VarOrder {
    names: Vec<String>,
}

impl VarOrder {
    /// Build from names listed smallest first. Names must be distinct and nonempty.
    pub fn new<S: Into<String>>(names: Vec<S>) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        assert!(!names.is_empty(), "variable order must be nonempty");
        for (i, n) in names.iter().enumerate() {
            assert!(!n.is_empty(), "empty variable name");
            assert!(
                !names[..i].contains(n),
                "duplicate variable name {n:?} in order"
            );
        }
        VarOrder { names }
    }

    /// Build from names listed greatest first (the user-facing convention).
    pub fn from_greatest_first<S: Into<String>>(names: Vec<S>) -> Self {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        names.reverse();
        VarOrder::new(names)
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn name(&self, v: Var) -> &str {
        &self.names[v.0]
    }

    pub fn find(&self, name: &str) -> Option<Var> {
        self.names.iter().position(|n| n == name).map(Var)
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        (0..self.names.len()).map(Var)
    }

    /// Greatest variable of the order.
    pub fn main_var(&self) -> Var {
        Var(self.names.len() - 1)
    }
}

impl fmt::Display for VarOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // printed greatest-first to match the input convention
        let mut names: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        names.reverse();
        write!(f, "[{}]", names.join(","))
    }
}
