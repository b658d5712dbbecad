//! ℤ-graded Koszul modules that are eventually constant or 2-periodic at each end.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::mf::{KoszulData, KoszulRing, MixedComplex};
use crate::module::FinModule;

/// Behaviour outside the explicit window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    Zero,
    /// `X^n`, `d^n`, `s^n` equal to their neighbours at the window edge.
    Constant,
    /// `X^n = X^{n±2}` with the same maps.
    Periodic2,
}

/// Explicit components on `[lo, hi]` plus end descriptors.
///
/// `d` holds `d^n` for `n` in `[lo, hi-1]` and `s` holds `s^n` for `n` in `[lo+1, hi]`; the maps crossing
/// the window edges are read off the descriptors.
#[derive(Clone, Debug)]
pub struct TameComplex {
    ring: Arc<KoszulRing>,
    lo: i64,
    hi: i64,
    comps: Vec<FinModule>,
    d: Vec<Matrix>,
    s: Vec<Matrix>,
    below: End,
    above: End,
}

impl TameComplex {
    pub fn new(
        ring: Arc<KoszulRing>,
        lo: i64,
        comps: Vec<FinModule>,
        d: Vec<Matrix>,
        s: Vec<Matrix>,
        below: End,
        above: End,
    ) -> Result<Self> {
        let t = Self::unchecked(ring, lo, comps, d, s, below, above)?;
        let report = t.check_window(t.lo - 4, t.hi + 4);
        if report.is_empty() {
            Ok(t)
        } else {
            Err(Error::Validation(report.join("; ")))
        }
    }

    pub(crate) fn unchecked(
        ring: Arc<KoszulRing>,
        lo: i64,
        comps: Vec<FinModule>,
        d: Vec<Matrix>,
        s: Vec<Matrix>,
        below: End,
        above: End,
    ) -> Result<Self> {
        if comps.is_empty() {
            return Err(Error::InvalidInput("empty window".into()));
        }
        let hi = lo + comps.len() as i64 - 1;
        let len = comps.len();
        if d.len() != len - 1 || s.len() != len - 1 {
            return Err(Error::InvalidInput("window needs one d and one s per adjacent pair".into()));
        }
        for (i, m) in d.iter().enumerate() {
            if m.shape() != (comps[i + 1].dim(), comps[i].dim()) {
                return Err(Error::InvalidInput(format!("d at degree {} has wrong shape", lo + i as i64)));
            }
        }
        for (i, m) in s.iter().enumerate() {
            if m.shape() != (comps[i].dim(), comps[i + 1].dim()) {
                return Err(Error::InvalidInput(format!("s at degree {} has wrong shape", lo + i as i64 + 1)));
            }
        }
        let need = |e: End| match e {
            End::Zero => 1,
            End::Constant => 2,
            End::Periodic2 => 3,
        };
        if len < need(below).max(need(above)) {
            return Err(Error::InvalidInput("window too short for its end descriptors".into()));
        }
        let glue_ok = |e: End, a: usize, b: usize, c: usize| match e {
            End::Zero => true,
            End::Constant => comps[a] == comps[b],
            End::Periodic2 => comps[a] == comps[c],
        };
        if !glue_ok(below, 0, 1, 2) || !glue_ok(above, len - 1, len.saturating_sub(2), len.saturating_sub(3)) {
            return Err(Error::Validation("end descriptor does not match the window boundary".into()));
        }
        Ok(TameComplex { ring, lo, hi, comps, d, s, below, above })
    }

    /// A finite-support mixed complex as a tame complex with zero ends.
    pub fn from_mixed(x: &MixedComplex) -> TameComplex {
        let (lo, hi) = x.support_range().unwrap_or((0, 0));
        let comps = (lo..=hi).map(|n| x.comp(n)).collect();
        let d = (lo..hi).map(|n| x.d(n)).collect();
        let s = (lo + 1..=hi).map(|n| x.s(n)).collect();
        TameComplex::unchecked(x.ring().clone(), lo, comps, d, s, End::Zero, End::Zero).expect("consistent shapes")
    }

    pub fn zero(ring: Arc<KoszulRing>) -> TameComplex {
        TameComplex::from_mixed(&MixedComplex::zero(ring))
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    pub fn ends(&self) -> (End, End) {
        (self.below, self.above)
    }

    fn index(&self, n: i64) -> Option<usize> {
        let top = (self.hi - self.lo) as usize;
        if n < self.lo {
            match self.below {
                End::Zero => None,
                End::Constant => Some(0),
                End::Periodic2 => Some((n - self.lo).rem_euclid(2) as usize),
            }
        } else if n > self.hi {
            match self.above {
                End::Zero => None,
                End::Constant => Some(top),
                End::Periodic2 => Some(top - (self.hi - n).rem_euclid(2) as usize),
            }
        } else {
            Some((n - self.lo) as usize)
        }
    }

    fn zeros(&self, rows: usize, cols: usize) -> Matrix {
        Matrix::zeros(self.ring.field(), rows, cols)
    }

    /// Materialize `[lo, hi]`; maps leaving the window are dropped.
    pub fn window_eval(&self, lo: i64, hi: i64) -> MixedComplex {
        let comps = (lo..=hi).map(|n| (n, self.comp(n))).collect();
        let d = (lo..hi).map(|n| (n, self.d(n))).collect();
        let s = (lo + 1..=hi).map(|n| (n, self.s(n))).collect();
        MixedComplex::unchecked(self.ring.clone(), comps, d, s).expect("consistent shapes")
    }

    /// `H^k(X, d) = 0` for `lo < k < hi`; errors when `d² ≠ 0` on the window.
    pub fn is_acyclic_on(&self, lo: i64, hi: i64) -> Result<bool> {
        is_acyclic_on(self, lo, hi)
    }

    pub fn dims(&self, lo: i64, hi: i64) -> BTreeMap<i64, usize> {
        (lo..=hi).map(|n| (n, self.comp_dim(n))).collect()
    }
}

/// Window acyclicity of `(X, d)`: boundary degrees excluded.
pub fn is_acyclic_on(x: &dyn KoszulData, lo: i64, hi: i64) -> Result<bool> {
    if lo > hi {
        return Err(Error::WindowInsufficient(format!("empty window [{lo}, {hi}]")));
    }
    for n in lo..hi {
        if !x.d(n + 1).mul(&x.d(n)).is_zero() {
            return Err(Error::Validation(format!("d²≠0 at degree {n}")));
        }
    }
    if hi - lo < 2 {
        return Ok(true);
    }
    Ok(x.d_cohomology(lo + 1, hi - 1)?.values().all(|&h| h == 0))
}

impl KoszulData for TameComplex {
    fn ring(&self) -> &Arc<KoszulRing> {
        &self.ring
    }

    fn comp(&self, n: i64) -> FinModule {
        match self.index(n) {
            Some(i) => self.comps[i].clone(),
            None => FinModule::zero(self.ring.base().clone()),
        }
    }

    fn comp_dim(&self, n: i64) -> usize {
        self.index(n).map_or(0, |i| self.comps[i].dim())
    }

    fn d(&self, n: i64) -> Matrix {
        let (lo, hi) = (self.lo, self.hi);
        if n >= lo && n < hi {
            return self.d[(n - lo) as usize].clone();
        }
        let zero = || self.zeros(self.comp_dim(n + 1), self.comp_dim(n));
        if n < lo {
            match self.below {
                End::Zero => zero(),
                End::Constant => self.d[0].clone(),
                End::Periodic2 => self.d[(n - lo).rem_euclid(2) as usize].clone(),
            }
        } else {
            let top = (hi - lo - 1) as usize;
            match self.above {
                End::Zero => zero(),
                End::Constant => self.d[top].clone(),
                End::Periodic2 => self.d[top - (hi - 1 - n).rem_euclid(2) as usize].clone(),
            }
        }
    }

    fn s(&self, n: i64) -> Matrix {
        let (lo, hi) = (self.lo, self.hi);
        if n > lo && n <= hi {
            return self.s[(n - lo - 1) as usize].clone();
        }
        let zero = || self.zeros(self.comp_dim(n - 1), self.comp_dim(n));
        if n <= lo {
            match self.below {
                End::Zero => zero(),
                End::Constant => self.s[0].clone(),
                End::Periodic2 => self.s[(n - lo - 1).rem_euclid(2) as usize].clone(),
            }
        } else {
            let top = (hi - lo - 1) as usize;
            match self.above {
                End::Zero => zero(),
                End::Constant => self.s[top].clone(),
                End::Periodic2 => self.s[top - (hi - n).rem_euclid(2) as usize].clone(),
            }
        }
    }
}
