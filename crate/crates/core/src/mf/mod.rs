//! Curved mixed complexes (modules over the Koszul ring `K_{S,w}`), duplexes, folding,
//! the stable and completed bar resolutions.

mod adjunction;
mod bar;
mod duplex;
mod koszul;
pub mod random;

pub use adjunction::{
    counit, prod_to_duplex, prod_to_koszul, sum_to_duplex, sum_to_koszul, unit,
};
pub use bar::{
    alpha_epi, bar_complex, completed_bar, counit_factorization_check, filtration_quotient, koszul_isomorphism, q_map, totalization,
    AlphaEpi, BarComplex, SignRule, Totalization,
};
pub use duplex::{fold, fold_map, iota, sbar, sbar_map, Duplex, FoldMode};
pub use koszul::{
    induce_koszul, is_koszul_morphism, koszul_hom_space, KoszulData, KoszulRing, MixedComplex, SComplex,
};

#[cfg(test)]
mod tests;
