pub mod scalar;
pub mod linalg;
pub mod exterior;
pub mod flat_forms;
pub mod cech;
pub mod chern;
pub mod projective;
pub mod hodge;
pub mod morse;
pub mod cli;
