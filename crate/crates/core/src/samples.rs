//! Named example codes and the published sample lists used by the report
//! checks. All strings are in the crate's text grammar.

use crate::code::Code;
use crate::parse::parse_code;

/// The first known non-convex code without local obstructions, on 5
/// neurons. Its neural complex has facets 2345, 123, 134, 145.
pub const C_STAR: &str = "2345 123 134 145 13 14 23 34 45 3 4";

/// Jeffs' minimal non-convex sunflower code on 6 neurons.
pub const C_2: &str = "1236 234 135 456 13 23 4 5 6";

/// The tree-link code: 3-sparse, no local obstructions, carries a wire
/// wheel on spokes 1, 2, 3 with rim 4.
pub const C_TL: &str = "123 145 245 246 346 24 45 46 1 2 3";

/// A decomposable 6-neuron code; the embedded part lives on {5,6} inside
/// the atom of ambient codeword {2,3}.
pub const DECOMPOSABLE_6: &str = "2356 123 14 235 236 12 23 1 2 4";

/// Hollow triangle with two vertex codewords: has both a local obstruction
/// (at 3) and a wheel frame (1, 2, 3).
pub const TRIANGLE: &str = "12 13 23 1 2";

pub fn c_star() -> Code {
    parse_code(C_STAR, None).unwrap()
}

pub fn c_2() -> Code {
    parse_code(C_2, None).unwrap()
}

pub fn c_tl() -> Code {
    parse_code(C_TL, None).unwrap()
}

pub fn decomposable_6() -> Code {
    parse_code(DECOMPOSABLE_6, None).unwrap()
}

pub fn triangle() -> Code {
    parse_code(TRIANGLE, None).unwrap()
}

/// Published sample codes of unknown convexity status with 5 maximal
/// codewords (6 neurons).
pub const UNKNOWN_5_MAX: [&str; 10] = [
    "2346 145 456 12 13 45 46 1 2 3",
    "1456 245 346 12 13 45 46 1 2 3",
    "245 346 456 12 13 45 46 1 2 3",
    "2456 135 156 12 34 15 56 1 2 3 4",
    "2456 156 235 12 34 25 56 1 2 3 4",
    "2356 134 135 146 12 13 14 35 1 2 6",
    "2356 134 135 246 12 13 26 35 1 2 4",
    "1456 134 135 246 12 13 14 15 46 1 2",
    "3456 134 135 246 12 13 34 35 46 1 2 3",
    "134 135 256 346 12 13 34 1 2 5 6",
];

/// Published sample codes of unknown convexity status with 6 maximal
/// codewords.
pub const UNKNOWN_6_MAX: [&str; 10] = [
    "145 246 456 12 13 23 45 46 1 2 3",
    "3456 145 246 12 13 23 45 46 1 2 3",
    "235 256 456 12 13 14 25 56 1 2 3 4",
    "2456 156 235 12 13 14 25 56 1 2 3 4",
    "2345 2356 156 12 13 14 235 56 1 2 3 4",
    "3456 156 235 12 13 24 35 56 1 2 3 4",
    "2345 156 256 12 13 14 25 56 1 2 3 4",
    "235 256 456 12 13 24 25 56 1 2 3 4",
    "1456 235 256 12 13 24 25 56 1 2 3 4",
    "235 356 456 12 13 24 35 56 1 2 3 4",
];

/// Published sample codes of unknown convexity status with 7 maximal
/// codewords.
pub const UNKNOWN_7_MAX: [&str; 10] = [
    "146 156 246 12 13 23 45 16 46 1 2 3 4 5",
    "145 146 245 346 12 13 23 14 45 46 1 2 3",
    "145 146 156 245 12 13 23 14 15 16 45 1 2 3",
    "145 146 245 256 12 13 23 14 25 45 1 2 3 6",
    "145 156 245 346 12 13 23 15 45 1 2 3 4 6",
    "145 156 246 456 12 13 23 15 45 46 56 1 2 3 5",
    "3456 145 156 246 12 13 23 15 45 46 56 1 2 3 5",
    "145 245 346 456 12 13 23 45 46 1 2 3",
    "145 246 356 456 12 13 23 45 46 56 1 2 3",
    "3456 156 245 12 13 14 23 45 56 1 2 3 4",
];

/// Published "unknown" samples among pure codes of dimension 2, one per
/// facet count from 5 to 14.
pub const UNKNOWN_PURE_DIM2: [&str; 10] = [
    "123 124 126 135 456 12 13 4 5 6",
    "123 124 135 156 245 246 12 13 15 24 5 6",
    "123 124 135 145 236 356 456 12 13 14 15 23 35 36 45 56 1 3 5",
    "123 124 126 145 156 234 356 456 12 14 15 16 23 24 45 56 1 2 3 5",
    "123 124 126 134 136 145 234 256 345 12 13 14 16 23 24 26 34 45 1 2 3 4 5",
    "123 124 125 126 134 135 156 245 346 356 12 13 14 15 16 24 25 34 35 36 56 1 2 3 5",
    "123 124 125 126 134 135 136 146 156 245 346 12 13 14 15 16 24 25 34 36 46 1 2 3 4 6",
    "123 124 125 135 145 156 235 236 246 256 345 356 12 13 14 15 23 24 25 26 35 36 45 56 1 2 3 5 6",
    "123 124 126 134 135 136 145 234 235 245 345 346 356 12 13 14 15 16 23 24 25 34 35 36 45 1 2 3 4 5",
    "123 124 125 126 135 136 146 156 235 236 245 256 345 356 12 13 14 15 16 23 24 25 26 35 36 45 56 1 2 3 5 6",
];

/// Published "unknown" samples among pure codes of dimension 3.
pub const UNKNOWN_PURE_DIM3: [&str; 10] = [
    "1234 1235 1246 1256 1345 123 124 125 126 134 135 12 13",
    "1234 1235 1236 1256 1345 123 125 126 134 135 12 13",
    "1234 1236 1256 1345 2345 123 126 134 234 345 15 25 34 1 2 5",
    "1234 1236 1256 1345 2346 123 126 134 234 236 15 23 1",
    "1234 1235 1256 1345 2356 123 125 134 135 235 256 13 25",
    "1234 1235 1236 1245 1456 2345 123 124 125 145 234 235 245 12 16 23 24 25 1 2",
    "1234 1235 1246 1256 1345 3456 123 124 125 126 134 135 345 12 13 46 56 4 5 6",
    "1234 1235 1246 1256 1345 2345 123 124 125 126 134 135 234 235 345 12 13 23 34 35 3",
    "1234 1235 1246 1256 1345 2456 123 124 125 126 134 135 246 256 12 13 26 45 4 5",
    "1234 1235 1236 1246 1256 1345 123 124 125 126 134 135 12 13",
];
