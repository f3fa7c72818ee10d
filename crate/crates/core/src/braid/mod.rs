//! Positive braid words, the moves between them, and certificates built
//! from sequences of moves.

mod alexander;
mod moves;
mod rewrite;
mod script;
mod search;
mod word;

pub use alexander::{alexander_of_closure, is_torus_closure_certificate, reduced_burau, torus_alexander};
pub use moves::{apply_move, MoveError, MoveStep, TripleDirection};
pub use rewrite::{relation_path, replay};
pub use script::{
    identify_torus_closure, lagrangian_genus_from_script, verify_script, CobordismCertificate, MoveScript,
    ScriptBuilder,
};
pub use search::{search_script, search_to_word, SearchBounds};
pub use word::{BraidWord, POSITIVE_BRAID_ROTATION};
