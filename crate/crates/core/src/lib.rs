#![no_std]

extern crate alloc;

pub mod arith;
pub mod dimension;
pub mod oracle;
pub mod power_ideal;
pub mod triangulation;
