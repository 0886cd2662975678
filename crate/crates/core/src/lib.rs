//! Seaweed subalgebras of simple Lie algebras: Frobenius test via orbit
//! meanders, simple eigenvalues of principal elements, spectra, and an
//! exact matrix oracle for type A.

pub mod enumerate;
pub mod error;
pub mod linalg;
pub mod meander;
pub mod oracle;
pub mod render;
pub mod rootsys;
pub mod seaweed;
pub mod spectrum;

pub use error::{EnumerateError, MeanderError, OracleError, RootSysError, SeaweedError, SpectrumError};
pub use meander::{Base, Component, CompositionPair, Involution, OrbitMeander, Side, UTurnReport, WindingMove};
pub use rootsys::{DiagramShape, Family, LieType, LocalDiagram, PositiveRoot, RootSet, RootSystem};
pub use seaweed::{Composition, Seaweed};
pub use spectrum::{full_spectrum, simple_eigenvalues, SimpleEigenvalueVector, Spectrum, SpectrumReport};
