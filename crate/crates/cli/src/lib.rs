//! Front end for `dgs-core`: input handling, report rendering and the
//! seeded random-graph experiment.

pub mod experiment;
pub mod input;
pub mod report;

/// Process exit codes. Stable across releases.
pub mod exit {
    pub const CERTIFIED: u8 = 0;
    pub const INPUT_ERROR: u8 = 2;
    pub const INCONCLUSIVE: u8 = 10;
    pub const NOT_APPLICABLE: u8 = 20;
    pub const NOT_A_MEMBER: u8 = 30;
}
