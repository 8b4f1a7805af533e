//! Link identification by normalised bracket fingerprints.
//!
//! A fingerprint is the component count together with the set of
//! polynomials `(-A^3)^(-w) <D>` over all relative orientations. It is
//! stored canonically modulo mirror image (`A -> A^-1`), so mirror images
//! compare equal.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{Crossing, PlanarDiagram};
use crate::error::Error;
use crate::poly::LaurentPoly;

/// Crossing bound under which trivial-fingerprint unknot recognition is
/// trusted.
pub const UNKNOT_TEST_CROSSING_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinkFingerprint {
    pub components: usize,
    pub polys: Vec<LaurentPoly>,
}

impl LinkFingerprint {
    fn canonical(components: usize, mut polys: Vec<LaurentPoly>) -> Self {
        polys.sort();
        polys.dedup();
        let mut mirror: Vec<LaurentPoly> = polys.iter().map(LaurentPoly::mirror).collect();
        mirror.sort();
        LinkFingerprint { components, polys: polys.min(mirror) }
    }
}

impl fmt::Display for LinkFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} component(s): {{", self.components)?;
        for (i, p) in self.polys.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

pub fn fingerprint(d: &PlanarDiagram) -> Result<LinkFingerprint, Error> {
    let comps = d.components();
    let bracket = d.bracket()?;
    if comps.total() == 0 {
        return Ok(LinkFingerprint::canonical(0, vec![bracket]));
    }
    let polys = d
        .orientation_writhes()
        .into_iter()
        .map(|w| bracket.shifted(if w % 2 == 0 { 1 } else { -1 }, -3 * w))
        .collect();
    Ok(LinkFingerprint::canonical(comps.total(), polys))
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkClass {
    Empty,
    Unknot,
    HopfLink,
    Trefoil,
    /// The (2,4) torus link.
    SolomonsKnot,
    Other(LinkFingerprint),
}

impl LinkClass {
    pub fn name(&self) -> &'static str {
        match self {
            LinkClass::Empty => "Empty",
            LinkClass::Unknot => "Unknot",
            LinkClass::HopfLink => "HopfLink",
            LinkClass::Trefoil => "Trefoil",
            LinkClass::SolomonsKnot => "SolomonsKnot",
            LinkClass::Other(_) => "Other",
        }
    }
}

impl fmt::Display for LinkClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkClass::Other(fp) => write!(f, "Other({fp})"),
            named => f.write_str(named.name()),
        }
    }
}

fn code(arcs: &[[u32; 4]]) -> PlanarDiagram {
    PlanarDiagram::new(arcs.iter().map(|&[a, b, c, d]| Crossing::new(a, b, c, d)).collect(), 0)
}

/// Diagram codes for the named rows of the reference table.
pub fn reference_diagram(class: &LinkClass) -> Option<PlanarDiagram> {
    Some(match class {
        LinkClass::Empty => PlanarDiagram::default(),
        LinkClass::Unknot => PlanarDiagram::new(vec![], 1),
        LinkClass::HopfLink => code(&[[4, 1, 3, 2], [2, 3, 1, 4]]),
        LinkClass::Trefoil => code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]),
        LinkClass::SolomonsKnot => {
            code(&[[6, 1, 7, 2], [8, 3, 5, 4], [2, 5, 3, 6], [4, 7, 1, 8]])
        }
        LinkClass::Other(_) => return None,
    })
}

pub const NAMED_CLASSES: [LinkClass; 5] = [
    LinkClass::Empty,
    LinkClass::Unknot,
    LinkClass::HopfLink,
    LinkClass::Trefoil,
    LinkClass::SolomonsKnot,
];

pub fn reference_fingerprint(class: &LinkClass) -> Option<LinkFingerprint> {
    reference_diagram(class).map(|d| fingerprint(&d).expect("reference codes are small"))
}

pub fn classify(f: &LinkFingerprint) -> LinkClass {
    NAMED_CLASSES
        .iter()
        .find(|c| reference_fingerprint(c).as_ref() == Some(f))
        .cloned()
        .unwrap_or_else(|| LinkClass::Other(f.clone()))
}

/// False iff some component is an unknot split from the rest. A component
/// counts as split when removing it divides the fingerprint by the value of
/// an extra unlinked loop, which is reliable within the crossing limit.
pub fn is_unknot_free(d: &PlanarDiagram) -> Result<bool, Error> {
    if d.crossing_count() > UNKNOT_TEST_CROSSING_LIMIT {
        return Err(Error::CrossingBudget {
            crossings: d.crossing_count(),
            limit: UNKNOT_TEST_CROSSING_LIMIT,
        });
    }
    let total = d.components().total();
    if total == 0 {
        return Ok(true);
    }
    let unknot = reference_fingerprint(&LinkClass::Unknot).unwrap();
    let whole = fingerprint(d)?;
    for c in 0..total {
        if fingerprint(&d.sub_diagram(&[c]))? != unknot {
            continue;
        }
        let rest: Vec<usize> = (0..total).filter(|&k| k != c).collect();
        let mut split = d.sub_diagram(&rest);
        split.free_loops += 1;
        if fingerprint(&split)? == whole {
            return Ok(false);
        }
    }
    Ok(true)
}
