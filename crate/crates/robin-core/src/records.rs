//! Result records shared by the solvers, the tracer and the CLI.

use crate::complex::C64;

/// Symmetry class of an eigenfunction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Symmetry {
    /// Even interval eigenfunction.
    Even,
    /// Odd interval eigenfunction.
    Odd,
    /// Ball eigenfunction with spherical-harmonic degree `l`.
    Harmonic { l: u32 },
    /// Hyperrectangle eigenfunction: one label per axis.
    Product(Vec<Symmetry>),
}

impl Symmetry {
    /// Short stable name used in serialized output ("even", "odd", "l3",
    /// "even*odd", ...).
    pub fn label(&self) -> String {
        match self {
            Symmetry::Even => "even".to_string(),
            Symmetry::Odd => "odd".to_string(),
            Symmetry::Harmonic { l } => format!("l{l}"),
            Symmetry::Product(parts) => {
                parts.iter().map(Symmetry::label).collect::<Vec<_>>().join("*")
            }
        }
    }
}

/// One eigenvalue as reported by a solver.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenvalueRecord {
    pub lambda: C64,
    /// Geometric multiplicity contributed by this record (spherical-harmonic
    /// multiplicity times root multiplicity for balls).
    pub multiplicity: u32,
    pub symmetry: Symmetry,
    /// Scaled secular residual at the reported root.
    pub residual: f64,
    /// True when a winding certificate accounts for this root.
    pub certified: bool,
}

/// One sample along a traced eigenvalue curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceSample {
    /// Path parameter in [0, 1].
    pub t: f64,
    pub alpha: C64,
    pub lambda: C64,
    /// d lambda / d alpha at this sample.
    pub dlambda: C64,
}

/// Terminal or in-flight events recorded by the tracer.
#[derive(Debug, Clone, PartialEq)]
pub enum TraceEvent {
    /// Another curve passed within resolution; the path was deflected.
    CrossingProximity { t: f64 },
    /// The curve approaches a Dirichlet eigenvalue; `target` is the
    /// extrapolated limit.
    DirichletConvergence { t: f64, target: f64 },
    /// |lambda| left the working window; `coefficient` is the fitted leading
    /// coefficient of lambda ~ -C alpha^2.
    Divergence { t: f64, coefficient: C64 },
    /// Step control collapsed without progress.
    StallNoProgress { t: f64 },
}

/// A traced curve: ordered samples plus events.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct CurveTrace {
    pub samples: Vec<TraceSample>,
    pub events: Vec<TraceEvent>,
}

impl CurveTrace {
    pub fn last_sample(&self) -> Option<&TraceSample> {
        self.samples.last()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetry_labels_are_stable() {
        assert_eq!(Symmetry::Even.label(), "even");
        assert_eq!(Symmetry::Harmonic { l: 3 }.label(), "l3");
        assert_eq!(
            Symmetry::Product(vec![Symmetry::Even, Symmetry::Odd]).label(),
            "even*odd"
        );
    }
}
