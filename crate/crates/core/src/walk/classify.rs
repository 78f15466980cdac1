//! Coarse classification of a walk-entry curve.

use crate::spectra::SpectralDecomposition;

use super::WalkError;

/// Structural flags behind the classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// Every supported eigenvalue is rational (hence an integer).
    pub integral_support: bool,
    /// The graph is bipartite, confining the entry to a coordinate axis.
    pub bipartite: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryClass {
    /// Integer frequencies: the curve is closed with period 2π.
    Periodic,
    /// Always real or always purely imaginary.
    AxisConfined,
    Generic,
}

impl Classification {
    /// Flags may combine; Periodic takes priority over AxisConfined.
    pub fn label(&self) -> EntryClass {
        if self.integral_support {
            EntryClass::Periodic
        } else if self.bipartite {
            EntryClass::AxisConfined
        } else {
            EntryClass::Generic
        }
    }
}

impl EntryClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            EntryClass::Periodic => "Periodic",
            EntryClass::AxisConfined => "AxisConfined",
            EntryClass::Generic => "Generic",
        }
    }
}

/// Classify the (a, b) entry of the walk.
pub fn classify_entry(
    sd: &SpectralDecomposition,
    a: usize,
    b: usize,
) -> Result<Classification, WalkError> {
    sd.graph().check_vertex(a).map_err(WalkError::Spectra)?;
    sd.graph().check_vertex(b).map_err(WalkError::Spectra)?;
    let support = sd.support(a, b);
    let integral_support = support.iter().all(|&r| {
        let theta = sd.eigenvalue(r);
        match theta.as_rational() {
            None => false,
            Some(q) => {
                // rational eigenvalues of integer matrices are integers
                debug_assert!(num_traits::One::is_one(q.denom()));
                true
            }
        }
    });
    Ok(Classification {
        integral_support,
        bipartite: sd.graph().is_bipartite(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{spectral_decomposition, Graph};

    #[test]
    fn petersen_is_periodic() {
        let sd = spectral_decomposition(&Graph::petersen()).unwrap();
        let c = classify_entry(&sd, 0, 1).unwrap();
        assert!(c.integral_support);
        assert_eq!(c.label(), EntryClass::Periodic);
    }

    #[test]
    fn c4_periodic_wins_over_bipartite() {
        let sd = spectral_decomposition(&Graph::cycle(4)).unwrap();
        let c = classify_entry(&sd, 0, 1).unwrap();
        assert!(c.integral_support);
        assert!(c.bipartite);
        assert_eq!(c.label(), EntryClass::Periodic);
    }

    #[test]
    fn c5_generic() {
        let sd = spectral_decomposition(&Graph::cycle(5)).unwrap();
        let c = classify_entry(&sd, 0, 1).unwrap();
        assert!(!c.integral_support);
        assert!(!c.bipartite);
        assert_eq!(c.label(), EntryClass::Generic);
    }

    #[test]
    fn p3_axis_confined() {
        let sd = spectral_decomposition(&Graph::path(3)).unwrap();
        let c = classify_entry(&sd, 0, 2).unwrap();
        assert!(!c.integral_support); // ±√2 in the support
        assert!(c.bipartite);
        assert_eq!(c.label(), EntryClass::AxisConfined);
    }
}
