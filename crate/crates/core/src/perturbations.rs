//! Perturbation direction/weight pairs.
//!
//! Each scheme draws a direction vector `U` together with a weight vector
//! `V` used to assemble gradient estimates. All schemes satisfy the two
//! moment conditions the estimator analysis rests on:
//!
//! * `E[V Uᵀ] = I`
//! * `E[V] = 0`
//!
//! and in every case `V` is a deterministic scalar multiple of `U` (the
//! scalar may depend on the dimension and the scheme parameters).

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;
use num_traits::Float;

use crate::error::{Error, Result};
use crate::rng::RngStream;
use crate::vecmath::norm2;

/// Distribution family generating the `(U, V)` pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PerturbationScheme {
    /// Independent `±1` coordinates, `V = U`. The classic SPSA choice.
    SymmetricBernoulli,
    /// Independent standard normal coordinates, `V = U` (smoothed functional).
    Gaussian,
    /// Uniform on the unit sphere surface, `V = d·U` (random directions).
    SphereUniform,
    /// Independent uniform coordinates on `[-eta, eta]`, `V = (3/eta²)·U`.
    IntervalUniform { eta: f64 },
    /// Independent two-point coordinates taking `-1` with probability
    /// `(1+epsilon)/(2+epsilon)` and `1+epsilon` with probability
    /// `1/(2+epsilon)`, `V = U/(1+epsilon)`.
    AsymmetricBernoulli { epsilon: f64 },
}

impl PerturbationScheme {
    /// Uniform scheme with the default half-width `eta = 1`.
    pub fn interval_uniform_default() -> Self {
        PerturbationScheme::IntervalUniform { eta: 1.0 }
    }

    /// Checks the scheme parameters.
    pub fn validate(&self) -> Result<()> {
        match *self {
            PerturbationScheme::IntervalUniform { eta } if !(eta > 0.0) => {
                Err(Error::InvalidParameter {
                    what: "uniform half-width eta",
                    value: eta,
                })
            }
            PerturbationScheme::AsymmetricBernoulli { epsilon } if !(epsilon > 0.0) => {
                Err(Error::InvalidParameter {
                    what: "asymmetric Bernoulli skew epsilon",
                    value: epsilon,
                })
            }
            _ => Ok(()),
        }
    }

    /// Scalar `s` such that `V = s·U` for this scheme in dimension `dim`.
    pub fn weight_scale(&self, dim: usize) -> f64 {
        match *self {
            PerturbationScheme::SymmetricBernoulli | PerturbationScheme::Gaussian => 1.0,
            PerturbationScheme::SphereUniform => dim as f64,
            PerturbationScheme::IntervalUniform { eta } => 3.0 / (eta * eta),
            PerturbationScheme::AsymmetricBernoulli { epsilon } => 1.0 / (1.0 + epsilon),
        }
    }

    /// Draws one `(U, V)` pair of length `dim`.
    pub fn sample_uv(&self, dim: usize, rng: &mut RngStream) -> Result<(Vec<f64>, Vec<f64>)> {
        self.validate()?;
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let u = match *self {
            PerturbationScheme::SymmetricBernoulli => {
                (0..dim).map(|_| rng.bernoulli_sign()).collect::<Vec<_>>()
            }
            PerturbationScheme::Gaussian => {
                (0..dim).map(|_| rng.standard_normal()).collect::<Vec<_>>()
            }
            PerturbationScheme::SphereUniform => sample_unit_sphere(dim, rng),
            PerturbationScheme::IntervalUniform { eta } => (0..dim)
                .map(|_| eta * (2.0 * rng.uniform_01() - 1.0))
                .collect::<Vec<_>>(),
            PerturbationScheme::AsymmetricBernoulli { epsilon } => {
                let p_minus = (1.0 + epsilon) / (2.0 + epsilon);
                (0..dim)
                    .map(|_| {
                        if rng.uniform_01() < p_minus {
                            -1.0
                        } else {
                            1.0 + epsilon
                        }
                    })
                    .collect::<Vec<_>>()
            }
        };
        let scale = self.weight_scale(dim);
        let v = u.iter().map(|x| scale * x).collect();
        Ok((u, v))
    }
}

/// Normalized standard Gaussian vector, the exact sphere-surface sampler.
fn sample_unit_sphere(dim: usize, rng: &mut RngStream) -> Vec<f64> {
    loop {
        let g: Vec<f64> = (0..dim).map(|_| rng.standard_normal()).collect();
        let n = norm2(&g);
        if n > 1e-100 {
            return g.iter().map(|x| x / n).collect();
        }
    }
}

/// Draws one `(U, V)` pair for `scheme` in dimension `dim`.
pub fn sample_uv(
    scheme: &PerturbationScheme,
    dim: usize,
    rng: &mut RngStream,
) -> Result<(Vec<f64>, Vec<f64>)> {
    scheme.sample_uv(dim, rng)
}

impl fmt::Display for PerturbationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            PerturbationScheme::SymmetricBernoulli => write!(f, "bernoulli"),
            PerturbationScheme::Gaussian => write!(f, "gaussian"),
            PerturbationScheme::SphereUniform => write!(f, "sphere"),
            PerturbationScheme::IntervalUniform { eta } => write!(f, "uniform:{eta}"),
            PerturbationScheme::AsymmetricBernoulli { epsilon } => {
                write!(f, "asym-bernoulli:{epsilon}")
            }
        }
    }
}

impl FromStr for PerturbationScheme {
    type Err = String;

    /// Parses the short serialized form: `bernoulli`, `gaussian`, `sphere`,
    /// `uniform[:eta]` (default `eta = 1`), `asym-bernoulli:epsilon`.
    fn from_str(s: &str) -> core::result::Result<Self, String> {
        let (name, param) = match s.split_once(':') {
            Some((n, p)) => (n, Some(p)),
            None => (s, None),
        };
        let parse_param = |p: Option<&str>, what: &str| -> core::result::Result<f64, String> {
            let raw = p.ok_or_else(|| alloc::format!("scheme `{name}` needs a {what}"))?;
            raw.parse::<f64>()
                .map_err(|_| alloc::format!("invalid {what} `{raw}`"))
        };
        let scheme = match name {
            "bernoulli" => PerturbationScheme::SymmetricBernoulli,
            "gaussian" => PerturbationScheme::Gaussian,
            "sphere" => PerturbationScheme::SphereUniform,
            "uniform" => PerturbationScheme::IntervalUniform {
                eta: match param {
                    Some(_) => parse_param(param, "half-width")?,
                    None => 1.0,
                },
            },
            "asym-bernoulli" => PerturbationScheme::AsymmetricBernoulli {
                epsilon: parse_param(param, "skew")?,
            },
            other => return Err(alloc::format!("unknown perturbation scheme `{other}`")),
        };
        scheme
            .validate()
            .map_err(|e| alloc::format!("{e}"))?;
        Ok(scheme)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn bernoulli_coordinates_are_signs_and_v_equals_u() {
        let mut rng = RngStream::new(5);
        let (u, v) = PerturbationScheme::SymmetricBernoulli
            .sample_uv(3, &mut rng)
            .unwrap();
        assert!(u.iter().all(|x| *x == 1.0 || *x == -1.0));
        assert_eq!(u, v);
    }

    #[test]
    fn sphere_sample_has_unit_norm_and_v_is_d_times_u() {
        let mut rng = RngStream::new(9);
        let (u, v) = PerturbationScheme::SphereUniform
            .sample_uv(4, &mut rng)
            .unwrap();
        assert!((norm2(&u) - 1.0).abs() < 1e-12);
        for (ui, vi) in u.iter().zip(&v) {
            assert!((vi - 4.0 * ui).abs() < 1e-15);
        }
    }

    #[test]
    fn interval_uniform_stays_in_range() {
        let scheme = PerturbationScheme::IntervalUniform { eta: 0.5 };
        let mut rng = RngStream::new(2);
        for _ in 0..200 {
            let (u, v) = scheme.sample_uv(2, &mut rng).unwrap();
            assert!(u.iter().all(|x| x.abs() <= 0.5));
            for (ui, vi) in u.iter().zip(&v) {
                assert!((vi - 12.0 * ui).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn asymmetric_bernoulli_support() {
        let scheme = PerturbationScheme::AsymmetricBernoulli { epsilon: 0.1 };
        let mut rng = RngStream::new(3);
        for _ in 0..200 {
            let (u, _) = scheme.sample_uv(2, &mut rng).unwrap();
            assert!(u.iter().all(|x| *x == -1.0 || (*x - 1.1).abs() < 1e-15));
        }
    }

    #[test]
    fn sampling_is_deterministic_given_seed_and_position() {
        let scheme = PerturbationScheme::Gaussian;
        let mut a = RngStream::new(77);
        let mut b = RngStream::new(77);
        for _ in 0..10 {
            let (ua, va) = scheme.sample_uv(6, &mut a).unwrap();
            let (ub, vb) = scheme.sample_uv(6, &mut b).unwrap();
            assert_eq!(ua, ub);
            assert_eq!(va, vb);
        }
    }

    #[test]
    fn invalid_parameters_are_rejected() {
        let bad_eta = PerturbationScheme::IntervalUniform { eta: 0.0 };
        assert!(matches!(
            bad_eta.validate(),
            Err(Error::InvalidParameter { .. })
        ));
        let bad_eps = PerturbationScheme::AsymmetricBernoulli { epsilon: -0.2 };
        assert!(matches!(
            bad_eps.validate(),
            Err(Error::InvalidParameter { .. })
        ));
        let mut rng = RngStream::new(0);
        assert_eq!(
            PerturbationScheme::Gaussian.sample_uv(0, &mut rng),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn parse_display_roundtrip() {
        for s in [
            "bernoulli",
            "gaussian",
            "sphere",
            "uniform:0.5",
            "asym-bernoulli:0.1",
        ] {
            let scheme: PerturbationScheme = s.parse().unwrap();
            assert_eq!(scheme.to_string(), s);
        }
        assert_eq!(
            "uniform".parse::<PerturbationScheme>().unwrap(),
            PerturbationScheme::IntervalUniform { eta: 1.0 }
        );
        assert!("asym-bernoulli".parse::<PerturbationScheme>().is_err());
        assert!("cauchy".parse::<PerturbationScheme>().is_err());
        assert!("uniform:-1".parse::<PerturbationScheme>().is_err());
    }
}
