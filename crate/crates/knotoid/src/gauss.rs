//! Oriented and extended oriented Gauss codes.
//!
//! A knotoid diagram on the sphere is encoded by its Gauss word (the sequence
//! of over/under crossing visits met while travelling from the tail to the
//! head) together with the list of crossing signs. A planar diagram carries a
//! third section: the sorted labels of the arcs bounding the outer region.

use std::cmp::Ordering;
use std::fmt;

use crate::error::ParseError;

/// Whether the strand passes over or under at a crossing visit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Passage {
    Under,
    Over,
}

impl Passage {
    pub fn flip(self) -> Self {
        match self {
            Passage::Under => Passage::Over,
            Passage::Over => Passage::Under,
        }
    }
}

/// Crossing sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Self {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    pub fn as_int(self) -> i64 {
        match self {
            Sign::Minus => -1,
            Sign::Plus => 1,
        }
    }
}

/// One crossing visit in a Gauss word.
///
/// Serialized as the bare label for an over-passage and as `-label` for an
/// under-passage.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Visit {
    pub label: u16,
    pub passage: Passage,
}

impl Visit {
    pub fn new(label: u16, passage: Passage) -> Self {
        Visit { label, passage }
    }

    /// Position of this symbol in the total order `-1 < 1 < -2 < 2 < ...`.
    fn order_key(self) -> (u16, u8) {
        (self.label, if self.passage == Passage::Over { 1 } else { 0 })
    }
}

/// Gauss word plus crossing signs; encodes a knotoid diagram in the sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedGaussCode {
    pub word: Vec<Visit>,
    pub signs: Vec<Sign>,
}

/// An oriented Gauss code together with the arc labels of the outer region;
/// encodes a planar knotoid diagram. Arc `j` is the sub-arc entered after the
/// `j`-th crossing passage; arc 0 starts at the tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExtendedGaussCode {
    pub base: OrientedGaussCode,
    pub outer: Vec<u16>,
}

impl OrientedGaussCode {
    pub fn trivial() -> Self {
        OrientedGaussCode { word: Vec::new(), signs: Vec::new() }
    }

    pub fn new(word: Vec<Visit>, signs: Vec<Sign>) -> Result<Self, ParseError> {
        let code = OrientedGaussCode { word, signs };
        code.validate()?;
        Ok(code)
    }

    /// Number of crossings.
    pub fn crossings(&self) -> usize {
        self.signs.len()
    }

    /// Sum of crossing signs.
    pub fn writhe(&self) -> i64 {
        self.signs.iter().map(|s| s.as_int()).sum()
    }

    /// Checks the structural invariants: every label in `1..=n` appears
    /// exactly twice, once over and once under, and the sign list has one
    /// entry per crossing.
    pub fn validate(&self) -> Result<(), ParseError> {
        let n = self.signs.len();
        if self.word.len() != 2 * n {
            return Err(ParseError::SignCountMismatch {
                word_len: self.word.len(),
                signs: n,
            });
        }
        let mut seen: Vec<[u8; 2]> = vec![[0, 0]; n];
        for v in &self.word {
            if v.label == 0 || v.label as usize > n {
                return Err(ParseError::LabelOutOfRange(v.label));
            }
            let slot = if v.passage == Passage::Over { 1 } else { 0 };
            seen[v.label as usize - 1][slot] += 1;
        }
        for (i, counts) in seen.iter().enumerate() {
            if counts[0] != 1 || counts[1] != 1 {
                return Err(ParseError::BadVisitCounts {
                    label: (i + 1) as u16,
                    under: counts[0],
                    over: counts[1],
                });
            }
        }
        Ok(())
    }

    /// True if labels are numbered by first encounter along the word.
    pub fn is_canonical(&self) -> bool {
        let mut next = 1u16;
        for v in &self.word {
            if v.label == next {
                next += 1;
            } else if v.label > next {
                return false;
            }
        }
        true
    }

    /// Renumbers crossings by first encounter and permutes the signs
    /// accordingly. Word order and passages are unchanged.
    pub fn canonicalize(&self) -> Self {
        let n = self.crossings();
        let mut relabel: Vec<u16> = vec![0; n + 1];
        let mut next = 1u16;
        for v in &self.word {
            if relabel[v.label as usize] == 0 {
                relabel[v.label as usize] = next;
                next += 1;
            }
        }
        let word = self
            .word
            .iter()
            .map(|v| Visit::new(relabel[v.label as usize], v.passage))
            .collect();
        let mut signs = vec![Sign::Plus; n];
        for old in 1..=n {
            signs[relabel[old] as usize - 1] = self.signs[old - 1];
        }
        OrientedGaussCode { word, signs }
    }

    /// Reverses the diagram orientation: the word is reversed and renumbered,
    /// each crossing keeps its sign.
    pub fn reverse(&self) -> Self {
        let word: Vec<Visit> = self.word.iter().rev().copied().collect();
        OrientedGaussCode { word, signs: self.signs.clone() }.canonicalize()
    }

    /// Swaps over- and under-passages and flips every crossing sign.
    pub fn mirror(&self) -> Self {
        let word = self
            .word
            .iter()
            .map(|v| Visit::new(v.label, v.passage.flip()))
            .collect();
        let signs = self.signs.iter().map(|s| s.flip()).collect();
        OrientedGaussCode { word, signs }
    }

    /// Flips every crossing sign; word and passages are unchanged.
    pub fn symmetry(&self) -> Self {
        OrientedGaussCode {
            word: self.word.clone(),
            signs: self.signs.iter().map(|s| s.flip()).collect(),
        }
    }

    /// Swaps over- and under-passages, keeping the signs: equals
    /// `mirror` composed with `symmetry`.
    pub fn rotate(&self) -> Self {
        let word = self
            .word
            .iter()
            .map(|v| Visit::new(v.label, v.passage.flip()))
            .collect();
        OrientedGaussCode { word, signs: self.signs.clone() }
    }

    /// Total order on sphere codes: word length, then word symbols under
    /// `-1 < 1 < -2 < 2 < ...`, then signs under `- < +`.
    pub fn compare(&self, other: &Self) -> Ordering {
        sphere_order_key_cmp(self, other)
    }
}

fn sphere_order_key_cmp(a: &OrientedGaussCode, b: &OrientedGaussCode) -> Ordering {
    a.word
        .len()
        .cmp(&b.word.len())
        .then_with(|| {
            for (x, y) in a.word.iter().zip(&b.word) {
                let c = x.order_key().cmp(&y.order_key());
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
        .then_with(|| {
            for (x, y) in a.signs.iter().zip(&b.signs) {
                let c = sign_key(*x).cmp(&sign_key(*y));
                if c != Ordering::Equal {
                    return c;
                }
            }
            Ordering::Equal
        })
}

fn sign_key(s: Sign) -> u8 {
    match s {
        Sign::Minus => 0,
        Sign::Plus => 1,
    }
}

impl ExtendedGaussCode {
    /// The trivial planar diagram: no crossings, the single arc bounds the
    /// outer region.
    pub fn trivial() -> Self {
        ExtendedGaussCode { base: OrientedGaussCode::trivial(), outer: vec![0] }
    }

    pub fn crossings(&self) -> usize {
        self.base.crossings()
    }

    pub fn writhe(&self) -> i64 {
        self.base.writhe()
    }

    /// Arc relabeling `j -> 2n - j` induced by reversal, applied to the outer
    /// list; the word transforms as for sphere codes.
    pub fn reverse(&self) -> Self {
        let n2 = 2 * self.crossings() as u16;
        let mut outer: Vec<u16> = self.outer.iter().map(|&a| n2 - a).collect();
        outer.sort_unstable();
        ExtendedGaussCode { base: self.base.reverse(), outer }
    }

    pub fn mirror(&self) -> Self {
        ExtendedGaussCode { base: self.base.mirror(), outer: self.outer.clone() }
    }

    pub fn symmetry(&self) -> Self {
        ExtendedGaussCode { base: self.base.symmetry(), outer: self.outer.clone() }
    }

    pub fn rotate(&self) -> Self {
        ExtendedGaussCode { base: self.base.rotate(), outer: self.outer.clone() }
    }

    /// Total order on planar codes: the sphere order, then the outer-list
    /// length, then the outer labels.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.base
            .compare(&other.base)
            .then_with(|| self.outer.len().cmp(&other.outer.len()))
            .then_with(|| self.outer.cmp(&other.outer))
    }

    pub fn validate(&self) -> Result<(), ParseError> {
        self.base.validate()?;
        let max = 2 * self.crossings() as u16;
        if self.outer.is_empty() {
            return Err(ParseError::EmptyOuter);
        }
        for w in self.outer.windows(2) {
            if w[0] >= w[1] {
                return Err(ParseError::OuterNotIncreasing);
            }
        }
        if *self.outer.last().unwrap() > max {
            return Err(ParseError::LabelOutOfRange(*self.outer.last().unwrap()));
        }
        Ok(())
    }
}

/// Result of parsing a code: planar when the outer section is present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedCode {
    Sphere(OrientedGaussCode),
    Planar(ExtendedGaussCode),
}

impl ParsedCode {
    pub fn sphere(&self) -> &OrientedGaussCode {
        match self {
            ParsedCode::Sphere(c) => c,
            ParsedCode::Planar(c) => &c.base,
        }
    }
}

/// Parses the text format: word tokens, sign characters and optional outer
/// labels, with sections separated by double spaces. The empty string is the
/// trivial sphere code.
pub fn parse_code(text: &str) -> Result<ParsedCode, ParseError> {
    let trimmed = text.trim_end();
    if trimmed.trim().is_empty() {
        return Ok(ParsedCode::Sphere(OrientedGaussCode::trivial()));
    }
    let sections: Vec<&str> = trimmed.split("  ").map(|s| s.trim()).collect();
    if sections.len() > 3 {
        return Err(ParseError::TooManySections(sections.len()));
    }
    let mut word = Vec::new();
    for tok in sections[0].split_whitespace() {
        let value: i32 = tok
            .parse()
            .map_err(|_| ParseError::BadToken(tok.to_string()))?;
        if value == 0 {
            return Err(ParseError::BadToken(tok.to_string()));
        }
        let passage = if value > 0 { Passage::Over } else { Passage::Under };
        word.push(Visit::new(value.unsigned_abs() as u16, passage));
    }
    let mut signs = Vec::new();
    if sections.len() >= 2 {
        for ch in sections[1].chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '+' => signs.push(Sign::Plus),
                '-' => signs.push(Sign::Minus),
                other => return Err(ParseError::BadSignChar(other)),
            }
        }
    }
    let base = OrientedGaussCode::new(word, signs)?;
    if sections.len() == 3 {
        let mut outer = Vec::new();
        for tok in sections[2].split_whitespace() {
            let value: u16 = tok
                .parse()
                .map_err(|_| ParseError::BadToken(tok.to_string()))?;
            outer.push(value);
        }
        let code = ExtendedGaussCode { base, outer };
        code.validate()?;
        Ok(ParsedCode::Planar(code))
    } else {
        Ok(ParsedCode::Sphere(base))
    }
}

pub fn parse_sphere(text: &str) -> Result<OrientedGaussCode, ParseError> {
    match parse_code(text)? {
        ParsedCode::Sphere(c) => Ok(c),
        ParsedCode::Planar(_) => Err(ParseError::UnexpectedOuterSection),
    }
}

pub fn parse_planar(text: &str) -> Result<ExtendedGaussCode, ParseError> {
    match parse_code(text)? {
        ParsedCode::Planar(c) => Ok(c),
        ParsedCode::Sphere(c) if c.crossings() == 0 => Ok(ExtendedGaussCode::trivial()),
        ParsedCode::Sphere(_) => Err(ParseError::MissingOuterSection),
    }
}

impl fmt::Display for OrientedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.word {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            match v.passage {
                Passage::Over => write!(f, "{}", v.label)?,
                Passage::Under => write!(f, "-{}", v.label)?,
            }
        }
        if !self.signs.is_empty() {
            f.write_str("  ")?;
            for s in &self.signs {
                f.write_str(match s {
                    Sign::Plus => "+",
                    Sign::Minus => "-",
                })?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for ExtendedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.base)?;
        f.write_str("  ")?;
        let mut first = true;
        for a in &self.outer {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{a}")?;
        }
        Ok(())
    }
}
