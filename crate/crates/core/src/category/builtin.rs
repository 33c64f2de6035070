//! Built-in unitary models in the standard unitary gauge.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::model::ModelData;
use crate::error::{Error, Result};

fn cis(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn diag(entries: &[Complex64]) -> DMatrix<Complex64> {
    DMatrix::from_diagonal(&nalgebra::DVector::from_column_slice(entries))
}

/// Fibonacci: labels `1, t` with `t ⊗ t = 1 ⊕ t`.
pub fn fibonacci() -> ModelData {
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    let (one, t) = (0, 1);
    let fusion = vec![
        (one, one, one, 1),
        (one, t, t, 1),
        (t, one, t, 1),
        (t, t, one, 1),
        (t, t, t, 1),
    ];
    let mut f_symbols = Vec::new();
    // all admissible F-symbols are 1 except F^{ttt}_t
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..2 {
                    for e in 0..2 {
                        for f in 0..2 {
                            let fu = |x: usize, y: usize, z: usize| {
                                fusion.iter().any(|&(p, q, r, _)| (p, q, r) == (x, y, z))
                            };
                            if !(fu(a, b, e) && fu(e, c, d) && fu(b, c, f) && fu(a, f, d)) {
                                continue;
                            }
                            let v = if (a, b, c, d) == (t, t, t, t) {
                                match (e, f) {
                                    (0, 0) => re(1.0 / phi),
                                    (1, 1) => re(-1.0 / phi),
                                    _ => re(phi.powf(-0.5)),
                                }
                            } else {
                                re(1.0)
                            };
                            f_symbols.push(([a, b, c, d, e, f], v));
                        }
                    }
                }
            }
        }
    }
    let r_symbols = vec![
        ([one, one, one], re(1.0)),
        ([one, t, t], re(1.0)),
        ([t, one, t], re(1.0)),
        ([t, t, one], cis(-4.0 * PI / 5.0)),
        ([t, t, t], cis(3.0 * PI / 5.0)),
    ];
    let twists = vec![re(1.0), cis(4.0 * PI / 5.0)];
    let total = (2.0 + phi).sqrt();
    let s_matrix = DMatrix::from_row_slice(
        2,
        2,
        &[re(1.0 / total), re(phi / total), re(phi / total), re(-1.0 / total)],
    );
    ModelData {
        name: "fibonacci".into(),
        labels: vec!["1".into(), "t".into()],
        unit: one,
        dual: vec![one, t],
        fusion,
        f_symbols,
        r_symbols,
        t_matrix: diag(&twists),
        twists,
        qdims: vec![1.0, phi],
        s_matrix,
    }
}

/// Ising: labels `1, s, p` with `s ⊗ s = 1 ⊕ p`, `s ⊗ p = s`, `p ⊗ p = 1`.
pub fn ising() -> ModelData {
    let (one, s, p) = (0usize, 1usize, 2usize);
    let table: &[(usize, usize, usize)] = &[
        (one, one, one),
        (one, s, s),
        (one, p, p),
        (s, one, s),
        (p, one, p),
        (s, s, one),
        (s, s, p),
        (s, p, s),
        (p, s, s),
        (p, p, one),
    ];
    let fusion: Vec<_> = table.iter().map(|&(a, b, c)| (a, b, c, 1)).collect();
    let fu = |x: usize, y: usize, z: usize| table.contains(&(x, y, z));
    let h = 1.0 / 2f64.sqrt();
    let mut f_symbols = Vec::new();
    for a in 0..3 {
        for b in 0..3 {
            for c in 0..3 {
                for d in 0..3 {
                    for e in 0..3 {
                        for f in 0..3 {
                            if !(fu(a, b, e) && fu(e, c, d) && fu(b, c, f) && fu(a, f, d)) {
                                continue;
                            }
                            let v = match (a, b, c, d) {
                                (1, 1, 1, 1) => {
                                    if (e, f) == (p, p) {
                                        re(-h)
                                    } else {
                                        re(h)
                                    }
                                }
                                (1, 2, 1, 2) | (2, 1, 2, 1) => re(-1.0),
                                _ => re(1.0),
                            };
                            f_symbols.push(([a, b, c, d, e, f], v));
                        }
                    }
                }
            }
        }
    }
    let mut r_symbols = Vec::new();
    for &(a, b, c) in table {
        let v = match (a, b, c) {
            (1, 1, 0) => cis(-PI / 8.0),
            (1, 1, 2) => cis(3.0 * PI / 8.0),
            (1, 2, 1) | (2, 1, 1) => Complex64::new(0.0, -1.0),
            (2, 2, 0) => re(-1.0),
            _ => re(1.0),
        };
        r_symbols.push(([a, b, c], v));
    }
    let twists = vec![re(1.0), cis(PI / 8.0), re(-1.0)];
    let r2 = 2f64.sqrt();
    #[rustfmt::skip]
    let s_matrix = DMatrix::from_row_slice(3, 3, &[
        re(0.5), re(r2 / 2.0), re(0.5),
        re(r2 / 2.0), re(0.0), re(-r2 / 2.0),
        re(0.5), re(-r2 / 2.0), re(0.5),
    ]);
    ModelData {
        name: "ising".into(),
        labels: vec!["1".into(), "s".into(), "p".into()],
        unit: one,
        dual: vec![one, s, p],
        fusion,
        f_symbols,
        r_symbols,
        t_matrix: diag(&twists),
        twists,
        qdims: vec![1.0, r2, 1.0],
        s_matrix,
    }
}

/// The default quadratic-form exponent for `vec_zn`: 2 for odd `n`, 1 for even.
pub fn default_vec_zn_exponent(n: usize) -> i64 {
    if n % 2 == 1 {
        2
    } else {
        1
    }
}

/// Pointed model on `Z/n` with twist `theta_a = exp(i pi p a^2 / n)`.
///
/// `F^{abc} = exp(i pi p a (b + c - [b + c]) / n)`, `R^{ab} = exp(i pi p a b / n)`
/// with labels `0..n` and `[.]` reduction mod `n`. Requires `p n` even; the
/// model is modular exactly when `gcd(p, n) = 1`.
pub fn vec_zn(n: usize, p: i64) -> Result<ModelData> {
    if n == 0 {
        return Err(Error::InvalidArgument("vec_zn needs N >= 1".into()));
    }
    if (p * n as i64) % 2 != 0 {
        return Err(Error::InvalidArgument(format!(
            "vec_zn needs p*N even (got N={n}, p={p})"
        )));
    }
    let nn = n as f64;
    let pf = p as f64;
    let mut fusion = Vec::new();
    let mut f_symbols = Vec::new();
    let mut r_symbols = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let ab = (a + b) % n;
            fusion.push((a, b, ab, 1));
            r_symbols.push(([a, b, ab], cis(PI * pf * (a * b) as f64 / nn)));
            for c in 0..n {
                let bc = (b + c) % n;
                let d = (ab + c) % n;
                let carry = (b + c - bc) as f64;
                f_symbols.push(([a, b, c, d, ab, bc], cis(PI * pf * a as f64 * carry / nn)));
            }
        }
    }
    let twists: Vec<Complex64> =
        (0..n).map(|a| cis(PI * pf * (a * a) as f64 / nn)).collect();
    let norm = 1.0 / nn.sqrt();
    let s_matrix = DMatrix::from_fn(n, n, |a, b| {
        cis(-2.0 * PI * pf * (a * b) as f64 / nn) * norm
    });
    Ok(ModelData {
        name: format!("vec_z{n}"),
        labels: (0..n).map(|a| a.to_string()).collect(),
        unit: 0,
        dual: (0..n).map(|a| (n - a) % n).collect(),
        fusion,
        f_symbols,
        r_symbols,
        t_matrix: diag(&twists),
        twists,
        qdims: vec![1.0; n],
        s_matrix,
    })
}
