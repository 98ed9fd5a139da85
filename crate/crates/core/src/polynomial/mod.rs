//! Integer polynomials, symmetrization, and the homological criterion.

mod criterion;
mod cyclotomic;
mod irreducible;
mod poly;
mod sym;

pub use criterion::{
    check_criterion, power_index, seed_to_symplectic, CriterionReport, SeedPoly, DEFAULT_BUDGET,
};
pub use cyclotomic::{
    cyclotomic_poly, is_cyclotomic_product, totient, CyclotomicTable, CyclotomicTest,
};
pub use irreducible::{
    decide_irreducible, eisenstein_witness, is_prime, kronecker_irreducible, prime_divisors,
    Decision, Irreducibility,
};
pub use poly::{int_json, parse_int_list, poly_mul, Poly};
pub use sym::{desym, desym_poly, sym, SymplecticPoly};
