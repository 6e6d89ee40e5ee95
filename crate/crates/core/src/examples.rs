//! Input files for the worked examples, embedded at compile time.

pub const C4_GRAPH: &str = include_str!("../data/c4.graph");
pub const SUSPENSION_GRAPH: &str = include_str!("../data/suspension.graph");
pub const TWO_FACE_GRAPH: &str = include_str!("../data/two_face.graph");
pub const E8_GRAPH: &str = include_str!("../data/e8.graph");

pub const TWO_FACE_SUPPORT: &str = include_str!("../data/two_face.support");
pub const BRIESKORN_2_3_5: &str = include_str!("../data/brieskorn_2_3_5.support");
pub const BRIESKORN_2_3_13: &str = include_str!("../data/brieskorn_2_3_13.support");
pub const BRIESKORN_2_3_18: &str = include_str!("../data/brieskorn_2_3_18.support");
pub const BRIESKORN_2_4_6: &str = include_str!("../data/brieskorn_2_4_6.support");

pub const C4_SI: &str = include_str!("../data/c4.si");

/// File name and contents of every bundled input.
pub const BUNDLE: &[(&str, &str)] = &[
    ("c4.graph", C4_GRAPH),
    ("suspension.graph", SUSPENSION_GRAPH),
    ("two_face.graph", TWO_FACE_GRAPH),
    ("e8.graph", E8_GRAPH),
    ("two_face.support", TWO_FACE_SUPPORT),
    ("brieskorn_2_3_5.support", BRIESKORN_2_3_5),
    ("brieskorn_2_3_13.support", BRIESKORN_2_3_13),
    ("brieskorn_2_3_18.support", BRIESKORN_2_3_18),
    ("brieskorn_2_4_6.support", BRIESKORN_2_4_6),
    ("c4.si", C4_SI),
];
