//! Partial-wave S-matrix elements S_l for the (tau, 0) principal series,
//! from the intertwining recurrence (1 - i tau + l) S_{l+1} = (1 + i tau + l) S_l
//! and from the closed form S_l = Gamma(1 + i tau + l) / Gamma(1 - i tau + l),
//! plus matrix-level verification of the intertwining relations.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::so31::{BasisIndex, TruncatedRep};
use crate::specfun::gamma_ratio;

/// tau plus the sequence {S_l}, l = 0..=l_max. |S_l| = 1 for real tau and
/// S_l = 1 identically at tau = 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialWaveSMatrix {
    tau: f64,
    elements: Vec<Complex64>,
}

impl PartialWaveSMatrix {
    /// Wrap an explicit element sequence (for synthetic or imported data);
    /// `elements[l]` is S_l.
    pub fn from_elements(tau: f64, elements: Vec<Complex64>) -> Result<Self> {
        if elements.is_empty() {
            return Err(Error::Domain("empty S-matrix sequence".into()));
        }
        Ok(Self { tau, elements })
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn l_max(&self) -> u32 {
        (self.elements.len() - 1) as u32
    }

    pub fn element(&self, l: u32) -> Complex64 {
        self.elements[l as usize]
    }

    pub fn elements(&self) -> &[Complex64] {
        &self.elements
    }
}

/// Closed form S_l = Gamma(1 + i tau + l) / Gamma(1 - i tau + l). No poles on
/// this line for real tau and l >= 0.
pub fn sl_closed_form(tau: f64, l: u32) -> Complex64 {
    let lf = l as f64;
    gamma_ratio(
        Complex64::new(1.0 + lf, tau),
        Complex64::new(1.0 + lf, -tau),
    )
    .expect("1 + l +/- i tau is never at a pole")
}

/// The sequence {S_l} generated upward from S_0 = Gamma(1 + i tau)/Gamma(1 - i tau)
/// by S_{l+1} = S_l (1 + i tau + l)/(1 - i tau + l).
pub fn sl_recurrence(tau: f64, l_max: u32) -> PartialWaveSMatrix {
    let mut elements = Vec::with_capacity(l_max as usize + 1);
    let mut s = sl_closed_form(tau, 0);
    elements.push(s);
    for l in 0..l_max {
        let lf = l as f64;
        s *= Complex64::new(1.0 + lf, tau) / Complex64::new(1.0 + lf, -tau);
        elements.push(s);
    }
    PartialWaveSMatrix { tau, elements }
}

/// Interior max-abs residuals of S G(chi) - G(chi~) S per generator. The l3
/// and l+- residuals vanish because S is block diagonal and mu independent;
/// the N3 residual is the defining equation for S_l. N+- residuals are
/// computed and reported alongside but carry the same content as N3.
#[derive(Debug, Clone)]
pub struct IntertwiningReport {
    pub l3: f64,
    pub lp: f64,
    pub lm: f64,
    pub n3: f64,
    pub np: f64,
    pub nm: f64,
    /// Size of the interior block (l <= l_max - 1) the max was taken over.
    pub interior: usize,
}

impl IntertwiningReport {
    /// Max residual over the gated generators l3, l+-, N3.
    pub fn max_gated(&self) -> f64 {
        self.l3.max(self.lp).max(self.lm).max(self.n3)
    }
}

/// Check S dT^chi(a) = dT^chi~(a) S on the truncated space, with S acting as
/// S_l on block l.
///
/// `rep_chit` must be built from the Weyl dual of `rep_chi`'s label at the
/// same l_max, and `s` for the same tau and at least the same l_max.
pub fn verify_intertwining(
    rep_chi: &TruncatedRep,
    rep_chit: &TruncatedRep,
    s: &PartialWaveSMatrix,
) -> Result<IntertwiningReport> {
    if rep_chi.dim() != rep_chit.dim() {
        return Err(Error::DimensionMismatch {
            left: rep_chi.dim(),
            right: rep_chit.dim(),
        });
    }
    if s.l_max() < rep_chi.l_max {
        return Err(Error::DimensionMismatch {
            left: s.elements.len(),
            right: rep_chi.l_max as usize + 1,
        });
    }
    if rep_chit.label != rep_chi.label.weyl_dual() {
        return Err(Error::Domain(format!(
            "rep_chit label {:?} is not the Weyl dual of {:?}",
            rep_chit.label, rep_chi.label
        )));
    }

    let dim = rep_chi.dim();
    let mut diag = Vec::with_capacity(dim);
    for idx in 0..dim {
        let l = BasisIndex::from_flat(idx).l;
        diag.push(s.element(l));
    }
    let s_mat = CMatrix::from_diagonal(&diag);

    let interior = rep_chi.interior_dim(1);
    let residual = |g_chi: &CMatrix, g_chit: &CMatrix| -> f64 {
        s_mat
            .mul(g_chi)
            .expect("same dim")
            .sub(&g_chit.mul(&s_mat).expect("same dim"))
            .expect("same dim")
            .max_abs_leading_block(interior)
    };

    Ok(IntertwiningReport {
        l3: residual(&rep_chi.l3, &rep_chit.l3),
        lp: residual(&rep_chi.lp, &rep_chit.lp),
        lm: residual(&rep_chi.lm, &rep_chit.lm),
        n3: residual(&rep_chi.n3, &rep_chit.n3),
        np: residual(&rep_chi.np, &rep_chit.np),
        nm: residual(&rep_chi.nm, &rep_chit.nm),
        interior,
    })
}
