pub mod chords;
pub mod cli;
pub mod counting;
pub mod exactalg;
pub mod gflinalg;
pub mod gfq;
pub mod qseries;
pub mod universal;
