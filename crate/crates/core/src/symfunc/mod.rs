//! Exact arithmetic in `Lambda^(k) = Z[h_1, ..., h_k]` in the h, k-Schur and
//! K-k-Schur bases, and the strong-order sums `gtilde_lambda`.

mod elt;
mod pieri;
mod ring;
mod strong;
mod table;

pub use elt::{Basis, SymElt};
pub use pieri::{pieri_kk, pieri_kschur};
pub use ring::SymRing;
pub use strong::{
    gtilde, gtilde_factorization, gtilde_factorize_check, gtilde_pieri, gtilde_pieri_fibers,
    gtilde_pieri_ie, gtilde_pieri_signed, kschur_rectangle, strong_lower_interval, top_degree,
    Comparison, GtildeCombination,
};
pub use table::{TransitionTable, INTRA_DEGREE_ORDER};
