use nalgebra::DVector;

use super::{check_finite, check_hermitian, check_square, gell_mann_basis, trace};
use crate::{tol, ComplexMatrix, Error, RealMatrix, Result, C64};

/// Bloch coordinates of a unit-trace Hermitian operator on `C^d1 ⊗ C^d2`:
///
/// `X = (1/d1d2)(I⊗I + Σ s_i λ_i⊗I + Σ t_j I⊗λ_j + Σ r_ij λ_i⊗λ_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct BlochForm {
    d1: usize,
    d2: usize,
    s: DVector<f64>,
    t: DVector<f64>,
    r: RealMatrix,
}

impl BlochForm {
    pub fn new(
        d1: usize,
        d2: usize,
        s: DVector<f64>,
        t: DVector<f64>,
        r: RealMatrix,
    ) -> Result<Self> {
        super::check_local_dim(d1)?;
        super::check_local_dim(d2)?;
        let (n1, n2) = (d1 * d1 - 1, d2 * d2 - 1);
        if s.len() != n1 {
            return Err(Error::DimensionMismatch {
                expected: n1,
                found: s.len(),
            });
        }
        if t.len() != n2 {
            return Err(Error::DimensionMismatch {
                expected: n2,
                found: t.len(),
            });
        }
        if r.nrows() != n1 || r.ncols() != n2 {
            return Err(Error::DimensionMismatch {
                expected: n1 * n2,
                found: r.nrows() * r.ncols(),
            });
        }
        if s.iter()
            .chain(t.iter())
            .chain(r.iter())
            .any(|x| !x.is_finite())
        {
            return Err(Error::NonFinite);
        }
        Ok(Self { d1, d2, s, t, r })
    }

    /// Form with vanishing local vectors: only the correlation part survives.
    pub fn correlation_only(d1: usize, d2: usize, r: RealMatrix) -> Result<Self> {
        Self::new(
            d1,
            d2,
            DVector::zeros(d1 * d1 - 1),
            DVector::zeros(d2 * d2 - 1),
            r,
        )
    }

    pub fn d1(&self) -> usize {
        self.d1
    }

    pub fn d2(&self) -> usize {
        self.d2
    }

    /// Local Bloch vector of subsystem A.
    pub fn s(&self) -> &DVector<f64> {
        &self.s
    }

    /// Local Bloch vector of subsystem B.
    pub fn t(&self) -> &DVector<f64> {
        &self.t
    }

    /// Correlation matrix `R = (r_ij)`.
    pub fn correlation(&self) -> &RealMatrix {
        &self.r
    }

    pub fn into_correlation(self) -> RealMatrix {
        self.r
    }
}

/// Projects `op` onto the Gell-Mann product basis.
///
/// `s_i = (d1/2) tr(op (λ_i⊗I))`, `t_j = (d2/2) tr(op (I⊗λ_j))`,
/// `r_ij = (d1 d2/4) tr(op (λ_i⊗λ_j))`.
pub fn bloch_decompose(op: &ComplexMatrix, d1: usize, d2: usize) -> Result<BlochForm> {
    let basis_a = gell_mann_basis(d1)?;
    let basis_b = gell_mann_basis(d2)?;
    check_square(op, d1 * d2)?;
    check_finite(op)?;
    check_hermitian(op)?;
    let tr = trace(op).re;
    if (tr - 1.0).abs() > tol::TRACE {
        return Err(Error::TraceMismatch {
            trace: tr,
            expected: 1.0,
        });
    }

    let at = |row_a: usize, row_b: usize, col_a: usize, col_b: usize| {
        op[(row_a * d2 + row_b, col_a * d2 + col_b)]
    };

    // tr(op (A⊗B)) = Σ A[p,q] B[u,v] op[(q,v),(p,u)]
    let s = DVector::from_iterator(
        basis_a.len(),
        basis_a.sparse().iter().map(|gen| {
            let mut acc = C64::new(0.0, 0.0);
            for &(p, q, a) in gen {
                for u in 0..d2 {
                    acc += a * at(q, u, p, u);
                }
            }
            acc.re * d1 as f64 / 2.0
        }),
    );
    let t = DVector::from_iterator(
        basis_b.len(),
        basis_b.sparse().iter().map(|gen| {
            let mut acc = C64::new(0.0, 0.0);
            for &(u, v, b) in gen {
                for p in 0..d1 {
                    acc += b * at(p, v, p, u);
                }
            }
            acc.re * d2 as f64 / 2.0
        }),
    );
    let scale = (d1 * d2) as f64 / 4.0;
    let mut r = RealMatrix::zeros(basis_a.len(), basis_b.len());
    for (i, gen_a) in basis_a.sparse().iter().enumerate() {
        for (j, gen_b) in basis_b.sparse().iter().enumerate() {
            let mut acc = C64::new(0.0, 0.0);
            for &(p, q, a) in gen_a {
                for &(u, v, b) in gen_b {
                    acc += a * b * at(q, v, p, u);
                }
            }
            r[(i, j)] = acc.re * scale;
        }
    }
    BlochForm::new(d1, d2, s, t, r)
}

/// Inverse of [`bloch_decompose`].
pub fn bloch_compose(form: &BlochForm) -> ComplexMatrix {
    let (d1, d2) = (form.d1, form.d2);
    let basis_a = gell_mann_basis(d1).expect("validated dimension");
    let basis_b = gell_mann_basis(d2).expect("validated dimension");
    let n = d1 * d2;
    let mut m = ComplexMatrix::identity(n, n);

    for (gen, &si) in basis_a.sparse().iter().zip(form.s.iter()) {
        if si == 0.0 {
            continue;
        }
        for &(p, q, a) in gen {
            for u in 0..d2 {
                m[(p * d2 + u, q * d2 + u)] += a * si;
            }
        }
    }
    for (gen, &tj) in basis_b.sparse().iter().zip(form.t.iter()) {
        if tj == 0.0 {
            continue;
        }
        for &(u, v, b) in gen {
            for p in 0..d1 {
                m[(p * d2 + u, p * d2 + v)] += b * tj;
            }
        }
    }
    for (i, gen_a) in basis_a.sparse().iter().enumerate() {
        for (j, gen_b) in basis_b.sparse().iter().enumerate() {
            let rij = form.r[(i, j)];
            if rij == 0.0 {
                continue;
            }
            for &(p, q, a) in gen_a {
                for &(u, v, b) in gen_b {
                    m[(p * d2 + u, q * d2 + v)] += a * b * rij;
                }
            }
        }
    }
    m.unscale(n as f64)
}
