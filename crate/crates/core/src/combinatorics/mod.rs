//! Partitions, tableaux and their statistics.

mod characters;
mod cocharge;
mod partition;
mod tableau;

pub use characters::{
    centralizer_order, character_value, class_size, kronecker_with_trivial, long_cycle_power_type,
};
pub use cocharge::{
    charge, charge_kostka, charge_of_word, cocharge, cocharge_kostka, standard_subwords,
};
pub use partition::{
    compositions_of, factorial, partitions_of, Cell, Composition, CycleType, Partition,
};
pub use tableau::{fake_degree, for_each_ssyt, kostka_number, ssyt, syt, syt_count, Tableau};
