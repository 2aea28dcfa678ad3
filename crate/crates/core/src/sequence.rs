//! The four-term exact sequence attached to a critical value `b_j`:
//!
//! ```text
//! 0 → Im(m_{q,j} - 1) → V_{q,j} → H_c(F_{b_j}) → Ker(m_{q-1,j} - 1) → 0
//! ```
//!
//! and the vanishing criterion built from it. The compactly supported groups
//! `H_c` are abstract inputs; nothing here computes them from a fiber.

use crate::error::{Error, Result};
use crate::group::FgAbelianGroup;
use crate::reconstruct::fixed_space_at_infinity;
use crate::star::{BlockRowOperator, MonodromyTuple};

/// The data of the sequence at one critical value.
///
/// `local` is the full local operator `m_{q,j}`, not only its diagonal block:
/// `Im(m_{q,j} - 1)` is the image of the whole defect row, which lands in
/// `V_{q,j}` but may be larger than `Im(m_jj - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriticalValueDatum {
    /// 1-based position of the critical value in the star.
    pub index: usize,
    pub local: BlockRowOperator,
    pub ker_qm1: FgAbelianGroup,
    pub h_c: FgAbelianGroup,
}

impl CriticalValueDatum {
    /// Builds the datum at position `index` (1-based), taking the local
    /// operators from the two tuples and `h_c` as given.
    pub fn from_tuples(tuple_q: &MonodromyTuple, tuple_qm1: &MonodromyTuple, index: usize, h_c: FgAbelianGroup) -> Result<Self> {
        if index == 0 || index > tuple_q.len() || tuple_q.len() != tuple_qm1.len() {
            return Err(Error::ShapeMismatch("critical value index out of range".into()));
        }
        Ok(Self {
            index,
            local: tuple_q.operators()[index - 1].clone(),
            ker_qm1: local_kernel(&tuple_qm1.operators()[index - 1])?,
            h_c,
        })
    }

    /// The same datum with `h_c` replaced by the group forced by the
    /// sequence when it splits, `coker ⊕ ker` (always the case over a field).
    pub fn with_split_h_c(mut self) -> Result<Self> {
        let coker = local_cokernel(&self.local)?;
        let mut orders = coker.as_cyclic_sum().orders().to_vec();
        orders.extend_from_slice(self.ker_qm1.as_cyclic_sum().orders());
        self.h_c = FgAbelianGroup::from_cyclic_orders(&orders);
        Ok(self)
    }
}

/// `Ker(m - 1)` on the whole group.
pub fn local_kernel(op: &BlockRowOperator) -> Result<FgAbelianGroup> {
    Ok(op.defect_row().kernel()?.group)
}

/// `V_j / Im(m - 1)`.
pub fn local_cokernel(op: &BlockRowOperator) -> Result<FgAbelianGroup> {
    Ok(op.defect_row().cokernel()?.group)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceConstraints {
    pub coker: FgAbelianGroup,
    pub rank_forced: usize,
    pub consistent: bool,
}

/// Rank (dimension over a field) bookkeeping of the sequence, plus the exact
/// boundary case: `H_c` is trivial exactly when both outer terms are.
/// Extensions over `Z` are not resolved.
pub fn sequence_e_constraints(d: &CriticalValueDatum) -> Result<SequenceConstraints> {
    let coker = local_cokernel(&d.local)?;
    let rank_forced = coker.free_rank() + d.ker_qm1.free_rank();
    let ranks_match = d.h_c.free_rank() == rank_forced;
    let boundary = d.h_c.is_trivial() == (coker.is_trivial() && d.ker_qm1.is_trivial());
    Ok(SequenceConstraints { coker, rank_forced, consistent: ranks_match && boundary })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CorollaryVerdict {
    /// `M∞` is the identity in degree `q` and every `H_c` vanishes.
    pub cond_i: bool,
    /// The degree-`q` group vanishes and `M∞ - 1` is injective in degree `q - 1`.
    pub cond_ii: bool,
    pub equivalent: bool,
}

/// Evaluates both sides of the vanishing criterion after checking the data
/// against the two tuples and against the sequence.
pub fn corollary_b_check(tuple_q: &MonodromyTuple, tuple_qm1: &MonodromyTuple, data: &[CriticalValueDatum]) -> Result<CorollaryVerdict> {
    let (dq, dqm1) = (tuple_q.decomposition(), tuple_qm1.decomposition());
    if tuple_q.len() != tuple_qm1.len() || data.len() != tuple_q.len() {
        return Err(Error::ShapeMismatch("tuples and data must share the critical values".into()));
    }
    if dq.ring() != dqm1.ring() || dqm1.degree() + 1 != dq.degree() {
        return Err(Error::ShapeMismatch("tuples must be in consecutive degrees over one ring".into()));
    }
    for (j, d) in data.iter().enumerate() {
        let index = j + 1;
        let inconsistent = |reason: &str| Error::InconsistentData { index, reason: reason.into() };
        if d.index != index {
            return Err(inconsistent("data out of order"));
        }
        if d.local != tuple_q.operators()[j] {
            return Err(inconsistent("local operator differs from the degree-q tuple"));
        }
        if d.ker_qm1 != local_kernel(&tuple_qm1.operators()[j])? {
            return Err(inconsistent("kernel differs from the degree-(q-1) tuple"));
        }
        if !sequence_e_constraints(d)?.consistent {
            return Err(inconsistent("violates the exact sequence"));
        }
    }
    let cond_i = tuple_q.compose().is_identity() && data.iter().all(|d| d.h_c.is_trivial());
    let cond_ii = dq.total().is_empty() && fixed_space_at_infinity(tuple_qm1)?.group()?.is_trivial();
    Ok(CorollaryVerdict { cond_i, cond_ii, equivalent: cond_i == cond_ii })
}

/// `Im(m - 1)` for each local operator; all trivial when `M∞` is the
/// identity, since the tuple is then the identity tuple.
pub fn local_images(tuple: &MonodromyTuple) -> Result<Vec<FgAbelianGroup>> {
    tuple.operators().iter().map(|op| Ok(op.defect_row().image()?.group)).collect()
}
