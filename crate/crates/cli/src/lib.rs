//! Front end for `ordo-core`: the reproduction harness behind `ordo reproduce`.

pub mod reproduce;
