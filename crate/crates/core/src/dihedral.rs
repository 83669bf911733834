//! The dihedral group D_m = ⟨a, b | a^m = b² = 1, ba = a^{m-1}b⟩ of order 2m.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DihedralGroup {
    m: usize,
}

/// The element a^s b^e in normal form, `0 <= s < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    s: usize,
    reflection: bool,
}

impl GroupElement {
    pub const IDENTITY: GroupElement = GroupElement { s: 0, reflection: false };

    pub fn rotation_exponent(&self) -> usize {
        self.s
    }

    pub fn is_reflection(&self) -> bool {
        self.reflection
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.s, self.reflection) {
            (0, false) => f.write_str("1"),
            (0, true) => f.write_str("b"),
            (s, false) => write!(f, "a^{s}"),
            (s, true) => write!(f, "a^{s} b"),
        }
    }
}

impl DihedralGroup {
    pub fn new(m: usize) -> Result<Self> {
        if m < 3 {
            return Err(Error::InvalidGroupOrder(m));
        }
        Ok(DihedralGroup { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn order(&self) -> usize {
        2 * self.m
    }

    /// a^s b^e with `s` reduced mod m.
    pub fn element(&self, s: i64, reflection: bool) -> GroupElement {
        GroupElement { s: s.rem_euclid(self.m as i64) as usize, reflection }
    }

    pub fn a(&self) -> GroupElement {
        self.element(1, false)
    }

    pub fn b(&self) -> GroupElement {
        self.element(0, true)
    }

    pub fn generators(&self) -> [GroupElement; 2] {
        [self.a(), self.b()]
    }

    /// 1, a, …, a^{m-1}, b, ab, …, a^{m-1}b.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        [false, true]
            .into_iter()
            .flat_map(move |e| (0..self.m).map(move |s| GroupElement { s, reflection: e }))
    }

    /// (s₁,e₁)(s₂,e₂) = (s₁ + (−1)^{e₁} s₂, e₁ ⊕ e₂).
    pub fn multiply(&self, g: GroupElement, h: GroupElement) -> GroupElement {
        let s2 = if g.reflection { self.m - h.s } else { h.s };
        GroupElement { s: (g.s + s2) % self.m, reflection: g.reflection ^ h.reflection }
    }

    pub fn inverse(&self, g: GroupElement) -> GroupElement {
        if g.reflection {
            g
        } else {
            GroupElement { s: (self.m - g.s) % self.m, reflection: false }
        }
    }

    pub fn pow(&self, g: GroupElement, k: usize) -> GroupElement {
        (0..k).fold(GroupElement::IDENTITY, |acc, _| self.multiply(acc, g))
    }

    pub fn element_order(&self, g: GroupElement) -> usize {
        let mut k = 1;
        let mut cur = g;
        while cur != GroupElement::IDENTITY {
            cur = self.multiply(cur, g);
            k += 1;
        }
        k
    }

    /// {1} for odd m, {1, a^{m/2}} for even m.
    pub fn center(&self) -> Vec<GroupElement> {
        if self.m.is_odd() {
            vec![GroupElement::IDENTITY]
        } else {
            vec![GroupElement::IDENTITY, self.element(self.m as i64 / 2, false)]
        }
    }

    pub fn center_size(&self) -> usize {
        if self.m.is_odd() { 1 } else { 2 }
    }

    /// Conjugation orbits by exhaustive search, in order of first member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<GroupElement>> {
        let mut seen = vec![false; self.order()];
        let index = |g: GroupElement| g.s + if g.reflection { self.m } else { 0 };
        let mut classes = Vec::new();
        for g in self.elements() {
            if seen[index(g)] {
                continue;
            }
            let mut class: Vec<GroupElement> = self
                .elements()
                .map(|h| self.multiply(self.multiply(h, g), self.inverse(h)))
                .collect();
            class.sort();
            class.dedup();
            for &c in &class {
                seen[index(c)] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// r = 2|Z| + ⌊(m−1)/2⌋.
    pub fn class_count(&self) -> usize {
        2 * self.center_size() + (self.m - 1) / 2
    }

    /// Parses "1", "a", "a^s", "b", "ab", "a^s b".
    pub fn parse_element(&self, text: &str) -> Result<GroupElement> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("not a dihedral element: {text:?}"));
        if compact == "1" {
            return Ok(GroupElement::IDENTITY);
        }
        let (rot, reflection) = match compact.strip_suffix('b') {
            Some(rest) => (rest, true),
            None => (compact.as_str(), false),
        };
        let s = match rot {
            "" if reflection => 0,
            "a" => 1,
            _ => rot.strip_prefix("a^").and_then(|e| e.parse::<i64>().ok()).ok_or_else(bad)?,
        };
        Ok(self.element(s, reflection))
    }
}
