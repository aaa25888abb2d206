//! Built-in algebras and CIF sets.

use alloc::sync::Arc;

use crate::algebra::LieSuperalgebra;
use crate::set::CifSet;
use crate::space::Space;
use crate::value::{rational, CifValue};
use crate::vector::Parity;

/// Heisenberg superalgebra `N` over GF(5) with basis `e | a, b` and
/// `[a, b] = [b, a] = e`.
pub fn heisenberg_5_1() -> Arc<Space> {
    Arc::new(Space::new(LieSuperalgebra::heisenberg(5, 1).expect("valid algebra")).expect("125 elements"))
}

/// Levels `λ`, `ρ` on `0`, on `N₀ \ 0`, and on everything else.
pub fn paper_example_levels() -> [CifValue; 3] {
    let d =
        |l: (u64, u64), r: (u64, u64)| CifValue::diagonal(rational(l.0, l.1), rational(r.0, r.1)).expect("valid level");
    [CifValue::top(), d((7, 10), (1, 5)), d((1, 2), (2, 5))]
}

/// The graded CIF ideal of `N`:
///
/// ```text
/// λ = 1             ρ = 0           at 0
/// λ = 0.7·e^{i1.4π} ρ = 0.2·e^{i0.4π} on N₀ \ 0
/// λ = 0.5·e^{iπ}    ρ = 0.4·e^{i0.8π} elsewhere
/// ```
pub fn paper_example() -> CifSet {
    paper_example_on(heisenberg_5_1())
}

/// [`paper_example`] on a caller-supplied copy of `N`.
pub fn paper_example_on(space: Arc<Space>) -> CifSet {
    let [zero, even, rest] = paper_example_levels();
    let s = space.clone();
    CifSet::from_fn(space, |i| {
        if i == 0 {
            zero
        } else if s.in_part(i, Parity::Even) {
            even
        } else {
            rest
        }
    })
}

pub fn abelian(p: u32, d0: usize, d1: usize) -> crate::Result<Arc<Space>> {
    Ok(Arc::new(Space::new(LieSuperalgebra::abelian(p, d0, d1)?)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_shape() {
        let a = paper_example();
        let s = a.space().clone();
        assert_eq!(s.size(), 125);
        assert_eq!(*a.value(s.encode(&[2, 0, 0])), paper_example_levels()[1]);
        assert_eq!(*a.value(s.encode(&[0, 3, 1])), paper_example_levels()[2]);
        assert_eq!(*a.value(s.encode(&[4, 0, 1])), paper_example_levels()[2]);
        assert!(a.is_normalized() && a.is_homogeneous());
    }
}
