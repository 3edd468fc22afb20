use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cartan::Family;

/// Every failure the library can report. [`Error::name`] gives the stable
/// identifier printed by the command-line front end.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    RankOutOfRange { family: Family, l: usize },
    InvalidPainting { vertex: usize },
    ConventionMismatch { witness: String },
    NotAnAutomorphism,
    PaintedMovedVertex { vertex: usize },
    VertexNotPainted { vertex: usize },
    R0Disallowed,
    NonCommuting,
    InvalidLabel { reason: String },
    TooLarge { diagrams: u64, limit: u64 },
    UnsupportedType { reason: String },
    LiftFailed { tried: Vec<String> },
    WindowOverflow { degree: i64, window: i64 },
    EigenvalueMismatch { i: usize, j: usize },
    NotARealRoot { root: Vec<i64> },
    NotRootHomogeneous { degree: i64 },
    Parse { reason: String },
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::InvalidPainting { .. } => "InvalidPainting",
            Error::ConventionMismatch { .. } => "ConventionMismatch",
            Error::NotAnAutomorphism => "NotAnAutomorphism",
            Error::PaintedMovedVertex { .. } => "PaintedMovedVertex",
            Error::VertexNotPainted { .. } => "VertexNotPainted",
            Error::R0Disallowed => "R0Disallowed",
            Error::NonCommuting => "NonCommuting",
            Error::InvalidLabel { .. } => "InvalidLabel",
            Error::TooLarge { .. } => "TooLarge",
            Error::UnsupportedType { .. } => "UnsupportedType",
            Error::LiftFailed { .. } => "LiftFailed",
            Error::WindowOverflow { .. } => "WindowOverflow",
            Error::EigenvalueMismatch { .. } => "EigenvalueMismatch",
            Error::NotARealRoot { .. } => "NotARealRoot",
            Error::NotRootHomogeneous { .. } => "NotRootHomogeneous",
            Error::Parse { .. } => "ParseError",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: ", self.name())?;
        match self {
            Error::RankOutOfRange { family, l } => write!(f, "{} does not admit l = {}", family, l),
            Error::InvalidPainting { vertex } => write!(f, "vertex {} lies in a 2-element orbit", vertex),
            Error::ConventionMismatch { witness } => write!(f, "non-integral coordinates for {}", witness),
            Error::NotAnAutomorphism => f.write_str("permutation is not an involutive diagram automorphism"),
            Error::PaintedMovedVertex { vertex } => write!(f, "painted vertex {} is moved by rho", vertex),
            Error::VertexNotPainted { vertex } => write!(f, "vertex {} is not painted", vertex),
            Error::R0Disallowed => f.write_str("R[0] is not part of the strict move set"),
            Error::NonCommuting => f.write_str("automorphism does not commute with rho"),
            Error::InvalidLabel { reason } => f.write_str(reason),
            Error::TooLarge { diagrams, limit } => write!(f, "{} diagrams exceed the limit {}", diagrams, limit),
            Error::UnsupportedType { reason } => f.write_str(reason),
            Error::LiftFailed { tried } => write!(f, "no sign correction works; tried {}", tried.join(", ")),
            Error::WindowOverflow { degree, window } => write!(f, "degree {} outside window {}", degree, window),
            Error::EigenvalueMismatch { i, j } => write!(f, "[alpha_{}^vee, e_{}] is not a multiple of e_{}", i, j, j),
            Error::NotARealRoot { root } => write!(f, "{:?} is not a real root", root),
            Error::NotRootHomogeneous { degree } => write!(f, "component at degree {} has no integral root", degree),
            Error::Parse { reason } => f.write_str(reason),
        }
    }
}
