//! Exhaustive oracles. Nothing here consults a closed form: every count is
//! obtained by listing candidates and testing the defining conditions.

mod arrays;
mod enumerate;
mod maps;

pub use arrays::{
    canonical_array_count_brute, for_each_canonical_array, gamma_count_brute,
    gamma_count_brute_with_pair, omega_count_brute, vertical_array_count_brute,
};
pub use enumerate::{next_permutation, subsets, weak_compositions, PairingStream};
pub use maps::{
    class_pairings, enumerate_pairings_one_row, for_each_paired_surjection, gs_counts_brute,
    hz_counts_brute, paired_surjection_count_brute,
};
