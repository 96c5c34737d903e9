//! Class functions, permutation characters, character tables and Dixon's
//! algorithm.

mod class_function;
mod dixon;
mod induced;
mod table;

pub use class_function::{integer_value, nonnegative_integer, ClassFunction};
pub use dixon::{class_multiplication_coefficients, dixon_character_table, dixon_prime, DIXON_CAP};
pub use induced::{induced_from_cyclic, induced_trivial_character};
pub use table::{CharacterTable, Decomposition};
