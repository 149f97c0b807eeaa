use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::half::HalfInt;

/// Ladder `{|n; r, u - n>}` with `-r <= u - n <= r` and `n >= 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExcitationSubspace {
    pub total_excitation: HalfInt,
    pub total_spin: HalfInt,
    pub n_min: usize,
    pub n_max: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SubspaceState {
    pub photon_number: usize,
    pub moment: HalfInt,
}

pub fn subspace(u: HalfInt, r: HalfInt) -> Result<ExcitationSubspace> {
    if r.doubled() < 0 {
        return Err(invalid(format!("total spin {r} is negative")));
    }
    let Some(gap) = u.integer_gap(r) else {
        return Err(invalid(format!(
            "u = {u} and r = {r} differ by a half-integer"
        )));
    };
    if u < -r {
        return Err(Error::EmptySubspace {
            u: u.to_string(),
            r: r.to_string(),
        });
    }
    // u + r = gap + 2r, always a non-negative integer here
    let n_max = (gap + r.doubled()) as usize;
    Ok(ExcitationSubspace {
        total_excitation: u,
        total_spin: r,
        n_min: gap.max(0) as usize,
        n_max,
    })
}

impl ExcitationSubspace {
    pub fn dim(&self) -> usize {
        self.n_max - self.n_min + 1
    }

    pub fn photon_numbers(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    /// Spin moment `m = u - n` paired with photon number `n`.
    pub fn moment(&self, photon_number: usize) -> HalfInt {
        self.total_excitation - photon_number as i32
    }

    pub fn basis(&self) -> Vec<SubspaceState> {
        self.photon_numbers()
            .map(|n| SubspaceState {
                photon_number: n,
                moment: self.moment(n),
            })
            .collect()
    }

    pub fn contains_vacuum(&self) -> bool {
        self.n_min == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_qubit_one_excitation() {
        let s = subspace(HalfInt::from_int(1), HalfInt::from_int(2)).unwrap();
        assert_eq!(s.photon_numbers(), 0..=3);
        let moments: Vec<i32> = s.basis().iter().map(|b| b.moment.doubled() / 2).collect();
        assert_eq!(moments, vec![1, 0, -1, -2]);
    }

    #[test]
    fn jaynes_cummings_doublet() {
        let s = subspace(HalfInt::HALF, HalfInt::HALF).unwrap();
        assert_eq!(s.photon_numbers(), 0..=1);
    }

    #[test]
    fn ground_only() {
        for r2 in 0..6 {
            let r = HalfInt::from_doubled(r2);
            let s = subspace(-r, r).unwrap();
            assert_eq!(s.photon_numbers(), 0..=0);
        }
    }

    #[test]
    fn high_excitation_starts_above_vacuum() {
        let s = subspace(HalfInt::from_int(5), HalfInt::from_int(2)).unwrap();
        assert_eq!(s.photon_numbers(), 3..=7);
        assert!(!s.contains_vacuum());
        for b in s.basis() {
            assert!(b.moment.doubled().abs() <= 4);
        }
    }

    #[test]
    fn rejects_invalid() {
        assert!(matches!(
            subspace(HalfInt::from_int(-3), HalfInt::from_int(2)),
            Err(Error::EmptySubspace { .. })
        ));
        assert!(subspace(HalfInt::ZERO, HalfInt::HALF).is_err());
        assert!(subspace(HalfInt::ZERO, HalfInt::from_int(-1)).is_err());
    }
}
