//! Spinning raises the dimension of a knot by one. For a knot bounding a
//! simply connected Seifert hypersurface the rational Alexander data of the
//! infinite cyclic cover survives the spin, and so does simplicity, which
//! makes knottedness persist up the whole spin tower.

use crate::error::{Error, Result};
use crate::seifert::{KnotModel, Origin};

/// The spun knot `K^(n+1)` of `K^(n)`.
///
/// The signature is dropped: nothing is claimed about it after spinning.
pub fn spin_knot(k: &KnotModel) -> Result<KnotModel> {
    if k.n < 1 {
        return Err(Error::Precondition("spinning needs n >= 1".into()));
    }
    if !k.simple {
        return Err(Error::SpinWithoutSimple);
    }
    Ok(KnotModel {
        n: k.n + 1,
        seifert: None,
        delta: k.delta.clone(),
        sigma: None,
        simple: true,
        origin: Origin::Spin(Box::new(k.origin.clone())),
    })
}

/// Spins `times` times.
pub fn spin_times(k: &KnotModel, times: u32) -> Result<KnotModel> {
    (0..times).try_fold(k.clone(), |acc, _| spin_knot(&acc))
}

/// Whether a knot in a spin tower over a simple `(2k+1)`-knot (`k ≥ 1`) is
/// knotted. A nontrivial Alexander polynomial certifies knottedness at
/// every level of the tower.
pub fn is_knotted_tower(k: &KnotModel) -> Result<bool> {
    if !k.simple {
        return Err(Error::Precondition("spin tower must start from a simple knot".into()));
    }
    let base_n = k.n - k.origin.spin_depth();
    if base_n < 3 || base_n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "spin tower must start from a (2k+1)-knot with k >= 1, base has n={base_n}"
        )));
    }
    Ok(!k.delta.is_one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::seifert::SeifertMatrix;

    #[test]
    fn spin_kummer() {
        let k = KnotModel::kummer();
        let s = spin_knot(&k).unwrap();
        assert_eq!(s.n(), 4);
        assert_eq!(s.delta(), k.delta());
        assert!(s.is_simple());
        assert_eq!(s.sigma(), None);
        assert!(s.seifert().is_none());
        let s5 = spin_times(&k, 5).unwrap();
        assert_eq!(s5.n(), 8);
        assert_eq!(s5.delta(), k.delta());
        assert_eq!(s5.origin().spin_depth(), 5);
    }

    #[test]
    fn spin_unknot() {
        let u = spin_knot(&KnotModel::unknot(1)).unwrap();
        assert_eq!(u.n(), 4);
        assert!(u.delta().is_one());
        for m in 0..4 {
            assert_eq!(is_knotted_tower(&spin_times(&KnotModel::unknot(1), m).unwrap()), Ok(false));
        }
    }

    #[test]
    fn tower_of_kummer_is_knotted() {
        for m in 0..=5 {
            let s = spin_times(&KnotModel::kummer(), m).unwrap();
            assert_eq!(is_knotted_tower(&s), Ok(true));
        }
        let k = KnotModel::kummer();
        let zero = k.connected_sum(&k.mirror()).unwrap();
        assert_eq!(zero.sigma(), Some(0));
        assert_eq!(is_knotted_tower(&spin_knot(&zero).unwrap()), Ok(true));
    }

    #[test]
    fn non_simple_refused() {
        let t = SeifertMatrix::new(1, vec![vec![0, 1], vec![0, 0]]).unwrap();
        let m = KnotModel::from_seifert(t, false, "h");
        assert_eq!(spin_knot(&m), Err(Error::SpinWithoutSimple));
        assert!(is_knotted_tower(&m).is_err());
    }

    #[test]
    fn tower_needs_odd_base() {
        let t = SeifertMatrix::new(0, vec![vec![-1, 1], vec![0, -1]]).unwrap();
        let m = KnotModel::from_seifert(t, true, "trefoil");
        let spun = spin_knot(&m).unwrap();
        assert!(matches!(is_knotted_tower(&spun), Err(Error::Precondition(_))));
    }
}
