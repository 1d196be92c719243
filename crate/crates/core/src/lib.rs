//! Exact computational group theory for plane curve complements.
//!
//! The modules build on each other bottom-up: [`freegroup`] supplies words
//! and automorphisms, [`braid`] the Artin action, [`presentation`] Tietze
//! moves and coset enumeration, and [`zvk`] assembles Zariski–van Kampen
//! presentations from braid monodromy. [`sl2`], [`artin`], [`plucker`] and
//! [`ade`] cover the remaining arithmetic.

pub mod ade;
pub mod artin;
pub mod braid;
pub mod freegroup;
pub mod plucker;
pub mod presentation;
pub mod sl2;
pub mod zvk;
