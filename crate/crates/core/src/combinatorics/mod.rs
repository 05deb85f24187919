//! Partitions, tableaux, permutations and classical symmetric-function oracles.

mod multiset;
mod partition;
mod permutation;
mod poly;
mod symmetric;
mod tableau;

pub use multiset::{multiset_splittings, multisets, rearrangements, subsets};
pub use partition::{compositions, partitions_of, schur_element, Composition, Partition};
pub use permutation::{perm_table, PermTable, Permutation, MAX_TABLE_RANK};
pub use poly::{Coeff, CommPoly};
pub use symmetric::{
    character_on_class, classical_character, littlewood_richardson, lr_expansion, schur_in_vars,
};
pub use tableau::{enumerate_ssyt, enumerate_syt, inverse_kostka, kostka, kostka_matrix, Tableau};
