//! Shape-function identifiers shared by all families.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::refelem::ElementKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Space {
    H1,
    #[serde(rename = "hcurl")]
    HCurl,
}

impl Space {
    pub fn name(self) -> &'static str {
        match self {
            Self::H1 => "h1",
            Self::HCurl => "hcurl",
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Space {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "h1" => Ok(Self::H1),
            "hcurl" => Ok(Self::HCurl),
            other => Err(Error::Unsupported(format!("unknown space '{other}'"))),
        }
    }
}

/// Which function of which family an index refers to.
///
/// H(curl) auxiliary functions `aI/aII/aIII` are paired with the dual
/// auxiliary functions `B/C/D` (on the quadrilateral `B = b̃^I`, `C = b̃^II`).
/// `bI..bIV` are the recombined duals of the primal types `I..IV`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    /// H¹ interior bubble.
    U,
    /// H¹ dual function.
    Bh,
    I,
    II,
    III,
    IV,
    AuxI,
    AuxII,
    AuxIII,
    B,
    C,
    D,
    DualI,
    DualII,
    DualIII,
    DualIV,
}

impl Tag {
    pub fn label(self) -> &'static str {
        match self {
            Tag::U => "u",
            Tag::Bh => "b",
            Tag::I => "I",
            Tag::II => "II",
            Tag::III => "III",
            Tag::IV => "IV",
            Tag::AuxI => "aI",
            Tag::AuxII => "aII",
            Tag::AuxIII => "aIII",
            Tag::B => "B",
            Tag::C => "C",
            Tag::D => "D",
            Tag::DualI => "bI",
            Tag::DualII => "bII",
            Tag::DualIII => "bIII",
            Tag::DualIV => "bIV",
        }
    }

    pub fn space(self) -> Space {
        match self {
            Tag::U | Tag::Bh => Space::H1,
            _ => Space::HCurl,
        }
    }

    /// Dual-auxiliary partner of an auxiliary tag.
    pub fn dual_aux(self) -> Option<Tag> {
        match self {
            Tag::AuxI => Some(Tag::B),
            Tag::AuxII => Some(Tag::C),
            Tag::AuxIII => Some(Tag::D),
            Tag::U => Some(Tag::Bh),
            _ => None,
        }
    }

    /// Recombined dual tag of a primal type.
    pub fn dual_of(self) -> Option<Tag> {
        match self {
            Tag::I => Some(Tag::DualI),
            Tag::II => Some(Tag::DualII),
            Tag::III => Some(Tag::DualIII),
            Tag::IV => Some(Tag::DualIV),
            Tag::U => Some(Tag::Bh),
            _ => None,
        }
    }
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Multi-index plus type tag, e.g. `tri/II/3,2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShapeIndex {
    pub element: ElementKind,
    pub tag: Tag,
    /// `(i, j)` or `(i, j, k)`; the third slot is 0 on 2D elements.
    pub indices: [usize; 3],
}

impl ShapeIndex {
    pub fn new(element: ElementKind, tag: Tag, indices: [usize; 3]) -> Self {
        Self { element, tag, indices }
    }

    pub fn i(&self) -> usize {
        self.indices[0]
    }

    pub fn j(&self) -> usize {
        self.indices[1]
    }

    pub fn k(&self) -> usize {
        self.indices[2]
    }

    pub fn with_tag(self, tag: Tag) -> Self {
        Self { tag, ..self }
    }

    pub(crate) fn out_of_range(&self, what: &'static str, p: usize) -> Error {
        Error::IndexOutOfRange { what, index: self.to_string(), p }
    }
}

impl fmt::Display for ShapeIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [i, j, k] = self.indices;
        write!(f, "{}/{}/{},{}", self.element, self.tag, i, j)?;
        if self.element.dim() == 3 {
            write!(f, ",{k}")?;
        }
        Ok(())
    }
}

impl Serialize for ShapeIndex {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Lexicographic enumeration of index tuples satisfying `keep`.
pub(crate) fn enumerate(
    dim: usize,
    p: usize,
    keep: impl Fn(usize, usize, usize) -> bool,
) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for i in 0..=p {
        for j in 0..=p {
            if dim == 2 {
                if keep(i, j, 0) {
                    out.push([i, j, 0]);
                }
                continue;
            }
            for k in 0..=p {
                if keep(i, j, k) {
                    out.push([i, j, k]);
                }
            }
        }
    }
    out
}
