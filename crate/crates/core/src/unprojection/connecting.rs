use super::data::UnprojectionData;
use crate::error::{Error, Result};
use crate::exterior::{alt_apply, ExteriorElement};

/// One summand `z^z_power · alt(u1^u1_count, u2^u2_count)` of a row of `T_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AltTerm {
    pub z_power: u32,
    pub u1_count: usize,
    pub u2_count: usize,
}

/// The connecting map `T_p = (T_p^1; T_p^2): ∧^p N -> ∧^p L ⊕ ∧^p L` with
///
/// ```text
/// T_p^1 = Σ_i z^i alt(u1^(p-2i),   u2^(2i))
/// T_p^2 = Σ_i z^i alt(u1^(p-2i-1), u2^(2i+1))
/// ```
///
/// summed over all `i` with nonnegative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectingMap {
    p: usize,
    rows: [Vec<AltTerm>; 2],
}

pub fn connecting_map(data: &UnprojectionData, p: usize) -> Result<ConnectingMap> {
    let n = data.n();
    if p == 0 || p > n - 1 {
        return Err(Error::ParameterRange(format!("T_p needs 1 <= p <= {}, got {p}", n - 1)));
    }
    Ok(ConnectingMap::formal(p))
}

impl ConnectingMap {
    /// The summation formula for any `p >= 1`, independent of `n`.
    pub fn formal(p: usize) -> Self {
        let first = (0..=p / 2).map(|i| AltTerm { z_power: i as u32, u1_count: p - 2 * i, u2_count: 2 * i }).collect();
        let second = (0..=(p - 1) / 2)
            .map(|i| AltTerm { z_power: i as u32, u1_count: p - 2 * i - 1, u2_count: 2 * i + 1 })
            .collect();
        Self { p, rows: [first, second] }
    }

    pub fn p(&self) -> usize {
        self.p
    }

    /// Summands of row `j` (1 or 2).
    pub fn row_terms(&self, j: usize) -> &[AltTerm] {
        &self.rows[j - 1]
    }

    /// Copy with the z-power of one summand shifted by `delta`.
    pub fn with_z_power_shift(&self, row: usize, term: usize, delta: i32) -> Result<Self> {
        let mut out = self.clone();
        let slot = out
            .rows
            .get_mut(row.wrapping_sub(1))
            .and_then(|r| r.get_mut(term))
            .ok_or_else(|| Error::Shape(format!("T_{} has no summand {term} in row {row}", self.p)))?;
        slot.z_power = slot
            .z_power
            .checked_add_signed(delta)
            .ok_or_else(|| Error::Shape("z-power would become negative".into()))?;
        Ok(out)
    }

    /// `T_p^j(v)` for `v ∈ ∧^p N`.
    pub fn apply_row(&self, data: &UnprojectionData, j: usize, v: &ExteriorElement) -> Result<ExteriorElement> {
        let (u1, u2) = (data.u1(), data.u2());
        let mut out = ExteriorElement::zero(data.table(), u1.target_rank(), self.p);
        for t in self.row_terms(j) {
            let part = alt_apply(u1, u2, t.u1_count, t.u2_count, v)?;
            out.add_assign(&part.scale(&data.z().pow(t.z_power)));
        }
        Ok(out)
    }

    pub fn apply(&self, data: &UnprojectionData, v: &ExteriorElement) -> Result<(ExteriorElement, ExteriorElement)> {
        Ok((self.apply_row(data, 1, v)?, self.apply_row(data, 2, v)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn displayed_shapes() {
        let t = |z, a, b| AltTerm { z_power: z, u1_count: a, u2_count: b };
        assert_eq!(ConnectingMap::formal(1).rows, [vec![t(0, 1, 0)], vec![t(0, 0, 1)]]);
        assert_eq!(ConnectingMap::formal(2).rows, [vec![t(0, 2, 0), t(1, 0, 2)], vec![t(0, 1, 1)]]);
        assert_eq!(ConnectingMap::formal(4).rows, [
            vec![t(0, 4, 0), t(1, 2, 2), t(2, 0, 4)],
            vec![t(0, 3, 1), t(1, 1, 3)]
        ]);
        assert_eq!(ConnectingMap::formal(5).rows, [
            vec![t(0, 5, 0), t(1, 3, 2), t(2, 1, 4)],
            vec![t(0, 4, 1), t(1, 2, 3), t(2, 0, 5)]
        ]);
    }

    #[test]
    fn shift_bounds() {
        let t = ConnectingMap::formal(2);
        assert_eq!(t.with_z_power_shift(1, 1, 1).unwrap().row_terms(1)[1].z_power, 2);
        assert!(t.with_z_power_shift(1, 0, -1).is_err());
        assert!(t.with_z_power_shift(3, 0, 1).is_err());
    }
}
