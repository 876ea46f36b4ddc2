//! Truncated matrix realization of the spinless SO(3,1) principal-series
//! representation chi = (tau, 0) on the |l, mu> basis.
//!
//! The basis is ordered by the flat index l^2 + (l + mu): blocks ascending in
//! l, mu ascending within a block, so the leading (L+1)^2 x (L+1)^2 corner of
//! every matrix is exactly the subspace with l <= L. Matrix elements that
//! would leave the truncation (l + 1 > l_max) are dropped, which contaminates
//! only the outermost shells; algebraic checks are therefore restricted to an
//! interior block.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;

/// Principal-series label chi = (tau, lambda). This artifact carries only the
/// spinless series, lambda = 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepLabel {
    pub tau: f64,
    pub lambda: f64,
}

impl RepLabel {
    /// The spinless label (tau, 0).
    pub fn spinless(tau: f64) -> Self {
        Self { tau, lambda: 0.0 }
    }

    /// Weyl dual chi~ = (-tau, -lambda); same Casimir eigenvalues.
    pub fn weyl_dual(&self) -> Self {
        Self {
            tau: -self.tau,
            lambda: -self.lambda,
        }
    }
}

/// A basis vector |l, mu> with |mu| <= l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    pub l: u32,
    pub mu: i32,
}

impl BasisIndex {
    pub fn new(l: u32, mu: i32) -> Result<Self> {
        if mu.unsigned_abs() > l {
            return Err(Error::Domain(format!("|mu| = {} > l = {l}", mu.abs())));
        }
        Ok(Self { l, mu })
    }

    /// Flat position l^2 + (l + mu) in the truncated space.
    pub fn flat(&self) -> usize {
        (self.l as usize) * (self.l as usize) + (self.l as i64 + self.mu as i64) as usize
    }

    /// Inverse of [`BasisIndex::flat`].
    pub fn from_flat(index: usize) -> Self {
        let l = (index as f64).sqrt() as u32;
        let mu = index as i64 - (l as i64) * (l as i64) - l as i64;
        Self { l, mu: mu as i32 }
    }
}

/// Dimension of the truncation at l_max: (l_max + 1)^2.
pub fn truncated_dim(l_max: u32) -> usize {
    let n = l_max as usize + 1;
    n * n
}

/// a_{l,mu} = sqrt[(l + mu)(l - mu) / ((2l + 1)(2l - 1))]
pub fn coeff_a(l: u32, mu: i32) -> Result<f64> {
    if l < 1 || mu.unsigned_abs() > l {
        return Err(Error::Domain(format!(
            "coeff_a out of domain: l = {l}, mu = {mu}"
        )));
    }
    let (lf, mf) = (l as f64, mu as f64);
    Ok(((lf + mf) * (lf - mf) / ((2.0 * lf + 1.0) * (2.0 * lf - 1.0))).sqrt())
}

/// b_{l,mu} = sqrt[(l + mu)(l + mu - 1) / ((2l + 1)(2l - 1))]
pub fn coeff_b(l: u32, mu: i32) -> Result<f64> {
    if l < 1 || mu < -(l as i32) || mu > l as i32 + 1 {
        return Err(Error::Domain(format!(
            "coeff_b out of domain: l = {l}, mu = {mu}"
        )));
    }
    let (lf, mf) = (l as f64, mu as f64);
    let num = (lf + mf) * (lf + mf - 1.0);
    Ok((num.max(0.0) / ((2.0 * lf + 1.0) * (2.0 * lf - 1.0))).sqrt())
}

/// Which generator matrix of a [`TruncatedRep`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Generator {
    L3,
    LPlus,
    LMinus,
    N3,
    NPlus,
    NMinus,
}

/// Dense matrices for l3, l+/-, N3, N+/- on the |l, mu> basis truncated at
/// l_max. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedRep {
    pub label: RepLabel,
    pub l_max: u32,
    pub l3: CMatrix,
    pub lp: CMatrix,
    pub lm: CMatrix,
    pub n3: CMatrix,
    pub np: CMatrix,
    pub nm: CMatrix,
}

/// Populate the six generator matrices from the coefficient actions
///
/// l3 |l mu> = mu |l mu>
/// l+- |l mu> = sqrt[(l -+ mu)(l +- mu + 1)] |l, mu +- 1>
/// N3 |l mu> = i(-1 + i tau - l) a_{l+1,mu} |l+1, mu> + i(i tau + l) a_{l,mu} |l-1, mu>
/// N+- |l mu> = +-i(1 - i tau + l) b_{l+1,+-mu+1} |l+1, mu +- 1>
///              +-i(i tau + l) b_{l,-+mu} |l-1, mu +- 1>
pub fn build_rep(label: RepLabel, l_max: u32) -> Result<TruncatedRep> {
    if l_max < 2 {
        return Err(Error::TruncationTooSmall { l_max });
    }
    let tau = label.tau;
    let dim = truncated_dim(l_max);
    let i = Complex64::new(0.0, 1.0);

    let mut l3 = CMatrix::zeros(dim);
    let mut lp = CMatrix::zeros(dim);
    let mut lm = CMatrix::zeros(dim);
    let mut n3 = CMatrix::zeros(dim);
    let mut np = CMatrix::zeros(dim);
    let mut nm = CMatrix::zeros(dim);

    for l in 0..=l_max {
        let lf = l as f64;
        // i(-1 + i tau - l) on the raising side, i(i tau + l) on the lowering
        // side; shared between N3 and N+-.
        let up = i * Complex64::new(-1.0 - lf, tau);
        let down = i * Complex64::new(lf, tau);

        for mu in -(l as i32)..=(l as i32) {
            let col = BasisIndex { l, mu }.flat();
            let mf = mu as f64;

            l3.set(col, col, Complex64::new(mf, 0.0));

            if mu < l as i32 {
                let row = BasisIndex { l, mu: mu + 1 }.flat();
                let val = ((lf - mf) * (lf + mf + 1.0)).sqrt();
                lp.set(row, col, Complex64::new(val, 0.0));
            }
            if mu > -(l as i32) {
                let row = BasisIndex { l, mu: mu - 1 }.flat();
                let val = ((lf + mf) * (lf - mf + 1.0)).sqrt();
                lm.set(row, col, Complex64::new(val, 0.0));
            }

            if l < l_max {
                let row = BasisIndex { l: l + 1, mu }.flat();
                n3.set(row, col, up * coeff_a(l + 1, mu)?);

                let row = BasisIndex {
                    l: l + 1,
                    mu: mu + 1,
                }
                .flat();
                np.set(row, col, up * -coeff_b(l + 1, mu + 1)?);

                let row = BasisIndex {
                    l: l + 1,
                    mu: mu - 1,
                }
                .flat();
                nm.set(row, col, up * coeff_b(l + 1, -mu + 1)?);
            }
            if l >= 1 {
                if mu.unsigned_abs() <= l - 1 {
                    let row = BasisIndex { l: l - 1, mu }.flat();
                    n3.set(row, col, down * coeff_a(l, mu)?);
                }
                if (mu + 1).unsigned_abs() <= l - 1 {
                    let row = BasisIndex {
                        l: l - 1,
                        mu: mu + 1,
                    }
                    .flat();
                    np.set(row, col, down * coeff_b(l, -mu)?);
                }
                if (mu - 1).unsigned_abs() <= l - 1 {
                    let row = BasisIndex {
                        l: l - 1,
                        mu: mu - 1,
                    }
                    .flat();
                    nm.set(row, col, down * -coeff_b(l, mu)?);
                }
            }
        }
    }

    Ok(TruncatedRep {
        label,
        l_max,
        l3,
        lp,
        lm,
        n3,
        np,
        nm,
    })
}

impl TruncatedRep {
    pub fn dim(&self) -> usize {
        truncated_dim(self.l_max)
    }

    /// Dimension of the interior block l <= l_max - shells.
    pub fn interior_dim(&self, shells: u32) -> usize {
        truncated_dim(self.l_max.saturating_sub(shells))
    }

    pub fn generator(&self, which: Generator) -> &CMatrix {
        match which {
            Generator::L3 => &self.l3,
            Generator::LPlus => &self.lp,
            Generator::LMinus => &self.lm,
            Generator::N3 => &self.n3,
            Generator::NPlus => &self.np,
            Generator::NMinus => &self.nm,
        }
    }

    /// Text dump of one generator; format documented on [`CMatrix::dump`].
    pub fn dump_generator(&self, which: Generator) -> String {
        self.generator(which).dump()
    }

    /// Cartesian components l1, l2, n1, n2 from the ladder matrices.
    fn cartesian(&self) -> (CMatrix, CMatrix, CMatrix, CMatrix) {
        let half = Complex64::new(0.5, 0.0);
        let minus_half_i = Complex64::new(0.0, -0.5);
        let l1 = self.lp.add(&self.lm).expect("same dim").scale(half);
        let l2 = self.lp.sub(&self.lm).expect("same dim").scale(minus_half_i);
        let n1 = self.np.add(&self.nm).expect("same dim").scale(half);
        let n2 = self.np.sub(&self.nm).expect("same dim").scale(minus_half_i);
        (l1, l2, n1, n2)
    }
}

/// Which family of commutation relations a residual belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationGroup {
    /// [l_i, l_j] = i eps_ijk l_k
    Rotation,
    /// [l_i, N_j] = i eps_ijk N_k
    Mixed,
    /// [N_i, N_j] = -i eps_ijk l_k
    Boost,
}

/// Interior max-abs residual of one commutation relation.
#[derive(Debug, Clone)]
pub struct RelationResidual {
    pub name: &'static str,
    pub group: RelationGroup,
    pub residual: f64,
}

/// Residuals of all fifteen Lie-algebra relations.
#[derive(Debug, Clone)]
pub struct CommutatorReport {
    pub relations: Vec<RelationResidual>,
    /// Size of the interior block the max was taken over.
    pub interior: usize,
}

impl CommutatorReport {
    pub fn group_max(&self, group: RelationGroup) -> f64 {
        self.relations
            .iter()
            .filter(|r| r.group == group)
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }

    pub fn max_residual(&self) -> f64 {
        self.relations
            .iter()
            .map(|r| r.residual)
            .fold(0.0, f64::max)
    }
}

/// Max-abs entry of [A, B] - RHS on the interior block l <= l_max - 2 for
/// every relation of the so(3,1) algebra, with cartesian components
/// N1 = (N+ + N-)/2, N2 = (N+ - N-)/(2i) and likewise for l.
pub fn commutator_residuals(rep: &TruncatedRep) -> CommutatorReport {
    let (l1, l2, n1, n2) = rep.cartesian();
    let l3 = &rep.l3;
    let n3 = &rep.n3;
    let i = Complex64::new(0.0, 1.0);
    let interior = rep.interior_dim(2);

    let residual = |a: &CMatrix, b: &CMatrix, rhs: &CMatrix, sign: f64| -> f64 {
        let comm = CMatrix::commutator(a, b).expect("same dim");
        comm.sub(&rhs.scale(i * sign))
            .expect("same dim")
            .max_abs_leading_block(interior)
    };

    let relations = vec![
        RelationResidual {
            name: "[l1,l2] = i l3",
            group: RelationGroup::Rotation,
            residual: residual(&l1, &l2, l3, 1.0),
        },
        RelationResidual {
            name: "[l2,l3] = i l1",
            group: RelationGroup::Rotation,
            residual: residual(&l2, l3, &l1, 1.0),
        },
        RelationResidual {
            name: "[l3,l1] = i l2",
            group: RelationGroup::Rotation,
            residual: residual(l3, &l1, &l2, 1.0),
        },
        RelationResidual {
            name: "[l1,n1] = 0",
            group: RelationGroup::Mixed,
            residual: CMatrix::commutator(&l1, &n1)
                .expect("same dim")
                .max_abs_leading_block(interior),
        },
        RelationResidual {
            name: "[l1,n2] = i n3",
            group: RelationGroup::Mixed,
            residual: residual(&l1, &n2, n3, 1.0),
        },
        RelationResidual {
            name: "[l1,n3] = -i n2",
            group: RelationGroup::Mixed,
            residual: residual(&l1, n3, &n2, -1.0),
        },
        RelationResidual {
            name: "[l2,n1] = -i n3",
            group: RelationGroup::Mixed,
            residual: residual(&l2, &n1, n3, -1.0),
        },
        RelationResidual {
            name: "[l2,n2] = 0",
            group: RelationGroup::Mixed,
            residual: CMatrix::commutator(&l2, &n2)
                .expect("same dim")
                .max_abs_leading_block(interior),
        },
        RelationResidual {
            name: "[l2,n3] = i n1",
            group: RelationGroup::Mixed,
            residual: residual(&l2, n3, &n1, 1.0),
        },
        RelationResidual {
            name: "[l3,n1] = i n2",
            group: RelationGroup::Mixed,
            residual: residual(l3, &n1, &n2, 1.0),
        },
        RelationResidual {
            name: "[l3,n2] = -i n1",
            group: RelationGroup::Mixed,
            residual: residual(l3, &n2, &n1, -1.0),
        },
        RelationResidual {
            name: "[l3,n3] = 0",
            group: RelationGroup::Mixed,
            residual: CMatrix::commutator(l3, n3)
                .expect("same dim")
                .max_abs_leading_block(interior),
        },
        RelationResidual {
            name: "[n1,n2] = -i l3",
            group: RelationGroup::Boost,
            residual: residual(&n1, &n2, l3, -1.0),
        },
        RelationResidual {
            name: "[n2,n3] = -i l1",
            group: RelationGroup::Boost,
            residual: residual(&n2, n3, &l1, -1.0),
        },
        RelationResidual {
            name: "[n3,n1] = -i l2",
            group: RelationGroup::Boost,
            residual: residual(n3, &n1, &l2, -1.0),
        },
    ];

    CommutatorReport {
        relations,
        interior,
    }
}

/// Casimir matrices C1 = l^2 - N^2 and C2 = (l.N + N.l)/2, with
/// l^2 = l3^2 + (l+ l- + l- l+)/2 and N^2 analogous. On the interior block
/// C1 = -(lambda^2 + tau^2 + 1) I and C2 = lambda tau I (zero for the
/// spinless series).
pub fn casimirs(rep: &TruncatedRep) -> (CMatrix, CMatrix) {
    let half = Complex64::new(0.5, 0.0);
    let sym = |a: &CMatrix, b: &CMatrix| -> CMatrix {
        a.mul(b)
            .expect("same dim")
            .add(&b.mul(a).expect("same dim"))
            .expect("same dim")
            .scale(half)
    };

    let l_sq = rep
        .l3
        .mul(&rep.l3)
        .expect("same dim")
        .add(&sym(&rep.lp, &rep.lm))
        .expect("same dim");
    let n_sq = rep
        .n3
        .mul(&rep.n3)
        .expect("same dim")
        .add(&sym(&rep.np, &rep.nm))
        .expect("same dim");
    let c1 = l_sq.sub(&n_sq).expect("same dim");

    // l.N = l3 N3 + (l+ N- + l- N+)/2, then symmetrize in the two orders.
    let l_dot_n = rep
        .l3
        .mul(&rep.n3)
        .expect("same dim")
        .add(
            &rep.lp
                .mul(&rep.nm)
                .expect("same dim")
                .add(&rep.lm.mul(&rep.np).expect("same dim"))
                .expect("same dim")
                .scale(half),
        )
        .expect("same dim");
    let n_dot_l = rep
        .n3
        .mul(&rep.l3)
        .expect("same dim")
        .add(
            &rep.np
                .mul(&rep.lm)
                .expect("same dim")
                .add(&rep.nm.mul(&rep.lp).expect("same dim"))
                .expect("same dim")
                .scale(half),
        )
        .expect("same dim");
    let c2 = l_dot_n.add(&n_dot_l).expect("same dim").scale(half);

    (c1, c2)
}
