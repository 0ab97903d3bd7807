//! Revealed preference axioms: the generic algebraic checks (WAARP, SAARP)
//! and the exact graph reductions for the classical theories.

mod cycles;
mod harp;
mod iarp;
mod qarp;
mod saarp;
mod sarp;
mod waarp;

pub use harp::check_harp;
pub use iarp::{check_iarp, iarp_limits};
pub use qarp::check_qarp;
pub use saarp::{check_saarp_generic, SearchLimits};
pub use sarp::check_sarp;
pub use waarp::check_waarp;
