//! Exact-arithmetic library for the representation theory of quantized
//! enveloping algebras: root systems and their subsystems, toral weights and
//! integral Weyl groups, Hecke algebras with the Kazhdan-Lusztig basis and
//! Lusztig's a-function, Shapovalov forms and Jantzen filtrations, and the
//! two invariants tying them together — Gelfand-Kirillov dimensions of simple
//! highest-weight modules at generic q, and the growth of simple-module
//! dimensions at roots of unity.

pub mod cli;
pub mod exact;
pub mod gk;
pub mod hecke;
pub mod rootsys;
pub mod subsys;
pub mod verma;
pub mod weights;
