//! Substitution documents shipped with the library.
//!
//! - `appendix_n3`: the non-generic `n = 3` specialization whose image lives in
//!   `y1,y2,y3,x1,x2,x3,s0,s1`, all of degree 1.
//! - `identity_n3`: the identity map on the `n = 3` ambient ring.
//! - `altinok_x12_14`: `D ⊂ X_{12,14} ⊂ P(2,3,4,5,6,7)`, giving
//!   `deg s0 = 8`, `deg s1 = 9`.
//! - `fano_x4_6`: `D ⊂ X_{4,6} ⊂ P(1,1,2,2,2,3)`, giving `deg s0 = 2`,
//!   `deg s1 = 3`.

use crate::error::Result;
use crate::ring::SubstitutionDocument;

pub const APPENDIX_N3: &str = include_str!("../data/specs/appendix_n3.json");
pub const IDENTITY_N3: &str = include_str!("../data/specs/identity_n3.json");
pub const ALTINOK_X12_14: &str = include_str!("../data/specs/altinok_x12_14.json");
pub const FANO_X4_6: &str = include_str!("../data/specs/fano_x4_6.json");

/// `(name, JSON text)` for every shipped document.
pub const SHIPPED: [(&str, &str); 4] = [
    ("appendix_n3", APPENDIX_N3),
    ("identity_n3", IDENTITY_N3),
    ("altinok_x12_14", ALTINOK_X12_14),
    ("fano_x4_6", FANO_X4_6),
];

/// Parses a shipped document by name.
pub fn shipped(name: &str) -> Option<Result<SubstitutionDocument>> {
    SHIPPED.iter().find(|(n, _)| *n == name).map(|(_, text)| SubstitutionDocument::from_json(text))
}
