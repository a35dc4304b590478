use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("cyclotomic polynomials are tabulated for 1 <= k <= 12, got {0}")]
    CyclotomicOutOfRange(u32),
    #[error("interval endpoint is a root of the polynomial")]
    EndpointIsRoot,
    #[error("expected a monic integer quartic")]
    NotMonicQuartic,
    #[error("{0} does not have integer coefficients")]
    NonIntegral(&'static str),
    #[error("characteristic polynomial has a real root of odd multiplicity")]
    InvalidStructure,
    #[error("not realizable by a torus endomorphism: {0}")]
    InvalidEndomorphism(&'static str),
    #[error("all eigenvalues are zero")]
    ZeroEndomorphism,
    #[error("the zero element has no fixed-point behaviour")]
    ZeroElement,
    #[error("non-zero element with reduced norm zero; the algebra is not a division algebra")]
    ZeroNorm,
    #[error("element has a rational eigenvalue outside the centre; the algebra is not a division algebra")]
    NotDivisionAlgebra,
    #[error("matrix is not in SL2(Z): ad - bc = {0}")]
    NotUnimodular(String),
    #[error("invalid algebra descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
}

impl Error {
    /// Stable identifier, used by the command line front end.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::CyclotomicOutOfRange(_) => "CyclotomicOutOfRange",
            Error::EndpointIsRoot => "EndpointIsRoot",
            Error::NotMonicQuartic => "NotMonicQuartic",
            Error::NonIntegral(_) => "NonIntegral",
            Error::InvalidStructure => "InvalidStructure",
            Error::InvalidEndomorphism(_) => "InvalidEndomorphism",
            Error::ZeroEndomorphism => "ZeroEndomorphism",
            Error::ZeroElement => "ZeroElement",
            Error::ZeroNorm => "ZeroNorm",
            Error::NotDivisionAlgebra => "NotDivisionAlgebra",
            Error::NotUnimodular(_) => "NotUnimodular",
            Error::InvalidDescriptor(_) => "InvalidDescriptor",
            Error::Precondition(_) => "Precondition",
        }
    }
}
