//! Complement enumeration, quasiperiodicity witnesses and necessity evidence.

mod complements;
mod necessity;
mod quasi;

pub use complements::{contains_complement, enumerate_complements, ComplementStream, StreamStatus};
pub use necessity::{necessity_witnesses, NecessityEntry, NecessityReport, NecessityStatus};
pub use quasi::{
    search_quasiperiodic, search_quasiperiodic_with_orders, verify_quasiperiodic, QuasiSearch,
    QuasiperiodicWitness, Side,
};
