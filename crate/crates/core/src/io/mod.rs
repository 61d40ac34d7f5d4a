pub mod dot;
pub mod json;

pub use dot::{to_dot, DotOptions};
pub use json::{EdgeRecord, GraphDocument, Metadata, SeriesMeta, VertexRecord, SCHEMA};
