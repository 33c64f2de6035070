use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::model::AnyonModel;

/// Outcome of checking one family of identities.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub identity: String,
    pub max_residual: f64,
    pub instances: usize,
    /// Label tuple of the worst instance, when any instance was checked.
    pub worst_instance: Option<String>,
}

impl AxiomReport {
    fn new(identity: &str) -> Self {
        AxiomReport { identity: identity.into(), max_residual: 0.0, instances: 0, worst_instance: None }
    }

    fn record(&mut self, residual: f64, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if self.worst_instance.is_none() || residual > self.max_residual {
            self.max_residual = self.max_residual.max(residual);
            self.worst_instance = Some(describe());
        }
    }

    pub fn passes(&self, tol: f64) -> bool {
        self.max_residual <= tol
    }
}

fn names(model: &AnyonModel, idx: &[usize]) -> String {
    idx.iter().map(|&i| model.label_name(i)).collect::<Vec<_>>().join(",")
}

/// Pentagon identities
/// `[F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = Σ_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}`
/// over every pair of basis trees of `Hom(e, a b c d)`.
pub fn verify_pentagon(model: &AnyonModel) -> AxiomReport {
    let l = model.num_labels();
    let mut report = AxiomReport::new("pentagon");
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                for d in 0..l {
                    for f in model.fusion_channels(a, b) {
                        for g in model.fusion_channels(f, c) {
                            for e in model.fusion_channels(g, d) {
                                for lbl in model.fusion_channels(c, d) {
                                    for k in model.fusion_channels(b, lbl) {
                                        if !model.fuses(a, k, e) {
                                            continue;
                                        }
                                        let lhs = model.f(f, c, d, e, g, lbl) * model.f(a, b, lbl, e, f, k);
                                        let rhs: Complex64 = (0..l)
                                            .map(|h| {
                                                model.f(a, b, c, g, f, h)
                                                    * model.f(a, h, d, e, g, k)
                                                    * model.f(b, c, d, k, h, lbl)
                                            })
                                            .sum();
                                        report.record((lhs - rhs).norm(), || {
                                            format!(
                                                "a,b,c,d,e={} f,g={} k,l={}",
                                                names(model, &[a, b, c, d, e]),
                                                names(model, &[f, g]),
                                                names(model, &[k, lbl])
                                            )
                                        });
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    report
}

/// Both hexagon identities:
/// `R^{ca}_e [F^{acb}_d]_{eg} R^{cb}_g = Σ_f [F^{cab}_d]_{ef} R^{cf}_d [F^{abc}_d]_{fg}`
/// and the same with every `R^{xy}` replaced by `(R^{yx})^{-1}`.
pub fn verify_hexagon(model: &AnyonModel) -> AxiomReport {
    let l = model.num_labels();
    let mut report = AxiomReport::new("hexagon");
    let r_inv = |x: usize, y: usize, z: usize| {
        let v = model.r(y, x, z);
        if v == Complex64::default() {
            v
        } else {
            v.inv()
        }
    };
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                for e in model.fusion_channels(c, a) {
                    for d in model.fusion_channels(e, b) {
                        for g in model.fusion_channels(c, b) {
                            if !model.fuses(a, g, d) {
                                continue;
                            }
                            let lhs = model.r(c, a, e) * model.f(a, c, b, d, e, g) * model.r(c, b, g);
                            let rhs: Complex64 = (0..l)
                                .map(|f| model.f(c, a, b, d, e, f) * model.r(c, f, d) * model.f(a, b, c, d, f, g))
                                .sum();
                            report.record((lhs - rhs).norm(), || {
                                format!("(+) a,b,c,d={} e,g={}", names(model, &[a, b, c, d]), names(model, &[e, g]))
                            });

                            let lhs = r_inv(c, a, e) * model.f(a, c, b, d, e, g) * r_inv(c, b, g);
                            let rhs: Complex64 = (0..l)
                                .map(|f| model.f(c, a, b, d, e, f) * r_inv(c, f, d) * model.f(a, b, c, d, f, g))
                                .sum();
                            report.record((lhs - rhs).norm(), || {
                                format!("(-) a,b,c,d={} e,g={}", names(model, &[a, b, c, d]), names(model, &[e, g]))
                            });
                        }
                    }
                }
            }
        }
    }
    report
}
