//! Separating operators, diagonal in the `p_{mn}` basis.

use crate::algebra::{from_usize, pochhammer, CouplingG, Rational};
use crate::sympoly::PmnExpansion;

fn apply_diagonal(
    p: &PmnExpansion,
    inverse: bool,
    ratio: impl Fn(usize) -> Rational,
) -> PmnExpansion {
    PmnExpansion::new(
        p.terms
            .iter()
            .map(|(&(m, n), c)| {
                let r = ratio(n);
                let scaled = if inverse { c / r } else { c * r };
                ((m, n), scaled)
            })
            .collect(),
        p.prefactor_power,
    )
}

/// `S2 p_{mn} = (g)_n / (2g)_n p_{mn}`, or its inverse.
pub fn s2_apply(p: &PmnExpansion, g: &CouplingG, inverse: bool) -> PmnExpansion {
    let gv = g.value();
    let two_g = gv * from_usize(2);
    apply_diagonal(p, inverse, |n| pochhammer(gv, n) / pochhammer(&two_g, n))
}

/// `Ŝ3 p_{mn} = (2g)_n / (3g)_n p_{mn}`, or its inverse.
pub fn s3hat_apply(p: &PmnExpansion, g: &CouplingG, inverse: bool) -> PmnExpansion {
    let gv = g.value();
    let two_g = gv * from_usize(2);
    let three_g = gv * from_usize(3);
    apply_diagonal(p, inverse, |n| {
        pochhammer(&two_g, n) / pochhammer(&three_g, n)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{default_g_panel, int, rat};
    use proptest::prelude::*;
    use std::collections::BTreeMap;

    fn table(entries: &[((usize, usize), Rational)]) -> PmnExpansion {
        PmnExpansion::new(entries.iter().cloned().collect(), 0)
    }

    #[test]
    fn diagonal_actions() {
        let t = table(&[((3, 0), rat(5, 7)), ((0, 1), int(1))]);
        let one = CouplingG::from_ratio(1, 1).unwrap();
        let s2 = s2_apply(&t, &one, false);
        assert_eq!(s2.get(3, 0), rat(5, 7));
        assert_eq!(s2.get(0, 1), rat(1, 2));
        for g in default_g_panel() {
            assert_eq!(s3hat_apply(&t, &g, false).get(0, 1), rat(2, 3));
        }
    }

    proptest! {
        #[test]
        fn inverse_undoes_forward(
            raw in proptest::collection::btree_map((0usize..6, 0usize..6), (-20i64..20, 1i64..6), 0..12),
            gi in 0usize..5,
        ) {
            let terms: BTreeMap<(usize, usize), Rational> =
                raw.into_iter().map(|(k, (a, b))| (k, rat(a, b))).collect();
            let t = PmnExpansion::new(terms, 1);
            let g = &default_g_panel()[gi];
            prop_assert_eq!(s2_apply(&s2_apply(&t, g, false), g, true), t.clone());
            prop_assert_eq!(s3hat_apply(&s3hat_apply(&t, g, true), g, false), t);
        }
    }
}
