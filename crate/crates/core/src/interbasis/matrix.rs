//! Whole-multiplet coefficient matrices with their invariants checked.

use num_complex::Complex64;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::bases::{enumerate_multiplet, LabelKind, MultipletLabel};
use crate::error::{Error, Result};
use crate::exact::{exact_sum, ExactValue, Rational};

use super::two_three::parity_split;
use super::{inadmissible, u_ii_iii, w_i_ii, what_i_iii, Pair, Route};

/// Row `r` holds the expansion of the target-basis function `rows[r]` in
/// the source basis: `Υ_rows[r] = Σ_c entries[r][c] Υ_cols[c]`.
#[derive(Clone, Debug, Serialize)]
pub struct CoefficientMatrix {
    pub n: u32,
    pub pair: Pair,
    pub route: Route,
    pub rows: Vec<MultipletLabel>,
    pub cols: Vec<MultipletLabel>,
    pub entries: Vec<Vec<ExactValue>>,
}

impl CoefficientMatrix {
    pub fn get(&self, row: usize, col: usize) -> &ExactValue {
        &self.entries[row][col]
    }

    pub fn to_complex(&self) -> Vec<Vec<Complex64>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(ExactValue::to_complex).collect())
            .collect()
    }

    /// Exact and float checks of unitarity, realness and the parity zeros.
    pub fn check(&self) -> Result<()> {
        let size = self.rows.len();
        let fail = |a: usize, b: usize, detail: String| Error::Integrity {
            row_a: a,
            row_b: b,
            detail,
        };
        for (r, row) in self.entries.iter().enumerate() {
            let norm: Rational = row.iter().map(ExactValue::abs2).sum();
            if !norm.is_one() {
                return Err(fail(r, r, format!("row norm² is {norm}, not 1")));
            }
        }
        let float = self.to_complex();
        for a in 0..size {
            for b in a + 1..size {
                let products: Vec<ExactValue> = (0..size)
                    .map(|c| self.entries[a][c].clone() * self.entries[b][c].conj())
                    .collect();
                let exact = exact_sum(products.iter())
                    .map_err(|_| fail(a, b, "overlap is not a single surd".into()))?;
                if !exact.is_zero() {
                    return Err(fail(a, b, format!("rows overlap by {exact}")));
                }
                let approx: Complex64 = (0..size).map(|c| float[a][c] * float[b][c].conj()).sum();
                if approx.norm() > 1e-12 {
                    return Err(fail(a, b, format!("float overlap {:.3e}", approx.norm())));
                }
            }
        }
        if self.pair == Pair::TwoThree {
            for (r, row) in self.entries.iter().enumerate() {
                for (c, v) in row.iter().enumerate() {
                    if !v.is_real() {
                        return Err(fail(r, r, format!("entry ({r}, {c}) is not real")));
                    }
                    let (
                        MultipletLabel::Cartesian { k1: l1, k2: l2 },
                        MultipletLabel::Cartesian { k1: n1, k2: n2 },
                    ) = (self.rows[r], self.cols[c])
                    else {
                        unreachable!("II-III labels are Cartesian")
                    };
                    if parity_split(l1, l2, n1, n2)?.is_none() && !v.is_zero() {
                        return Err(fail(
                            r,
                            r,
                            format!("parity-forbidden entry ({r}, {c}) is {v}"),
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Fill every entry of the multiplet `n` independently, then check the
/// matrix invariants.
pub fn assemble_matrix(n: u32, pair: Pair, route: Route) -> Result<CoefficientMatrix> {
    if !pair.admits(route) {
        return Err(inadmissible(route, pair));
    }
    let rows = enumerate_multiplet(n, LabelKind::Cartesian);
    let cols = match pair {
        Pair::OneTwo | Pair::OneThree => enumerate_multiplet(n, LabelKind::Polar),
        Pair::TwoThree => enumerate_multiplet(n, LabelKind::Cartesian),
    };
    let cells: Vec<(usize, usize)> = (0..rows.len())
        .flat_map(|r| (0..cols.len()).map(move |c| (r, c)))
        .collect();
    let values: Vec<ExactValue> = cells
        .par_iter()
        .map(|&(r, c)| entry(pair, route, &rows[r], &cols[c]))
        .collect::<Result<_>>()?;
    let width = cols.len();
    let entries = values
        .chunks(width.max(1))
        .map(<[ExactValue]>::to_vec)
        .collect();
    let matrix = CoefficientMatrix {
        n,
        pair,
        route,
        rows,
        cols,
        entries,
    };
    matrix.check()?;
    Ok(matrix)
}

fn entry(
    pair: Pair,
    route: Route,
    row: &MultipletLabel,
    col: &MultipletLabel,
) -> Result<ExactValue> {
    match (pair, *row, *col) {
        (Pair::OneTwo, MultipletLabel::Cartesian { k1, .. }, MultipletLabel::Polar { n, m }) => {
            w_i_ii(n, m, k1, route)
        }
        (Pair::OneThree, MultipletLabel::Cartesian { k1, .. }, MultipletLabel::Polar { n, m }) => {
            what_i_iii(n, m, k1, route)
        }
        (
            Pair::TwoThree,
            MultipletLabel::Cartesian { k1: l1, k2: l2 },
            MultipletLabel::Cartesian { k1: n1, k2: n2 },
        ) => u_ii_iii(l1, l2, n1, n2, route),
        _ => unreachable!("labels follow the pair"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_state() {
        for pair in Pair::ALL {
            for &route in pair.routes() {
                let m = assemble_matrix(0, pair, route).unwrap();
                assert_eq!(m.entries, vec![vec![ExactValue::one()]]);
            }
        }
    }

    #[test]
    fn all_matrices_are_unitary() {
        for n in 0..=6 {
            for pair in Pair::ALL {
                for &route in pair.routes() {
                    assemble_matrix(n, pair, route).unwrap();
                }
            }
        }
    }

    #[test]
    fn zero_pattern_of_odd_multiplet() {
        let m = assemble_matrix(3, Pair::TwoThree, Route::Hyper4F3).unwrap();
        let zeros = m.entries.iter().flatten().filter(|v| v.is_zero()).count();
        assert_eq!(zeros, 8);
    }

    #[test]
    fn inadmissible_route() {
        assert!(matches!(
            assemble_matrix(2, Pair::TwoThree, Route::Hahn),
            Err(Error::InadmissibleRoute { .. })
        ));
    }

    #[test]
    fn broken_matrix_is_reported() {
        let mut m = assemble_matrix(2, Pair::OneTwo, Route::ClebschGordan).unwrap();
        m.entries[1][0] = m.entries[1][0].clone() * ExactValue::sign(1);
        assert!(matches!(m.check(), Err(Error::Integrity { .. })));
    }

    #[test]
    fn inverse_and_composition() {
        for n in 0..=6u32 {
            let w = assemble_matrix(n, Pair::OneTwo, Route::ClebschGordan).unwrap();
            let hat = assemble_matrix(n, Pair::OneThree, Route::ClebschGordan).unwrap();
            let u = assemble_matrix(n, Pair::TwoThree, Route::CGSum).unwrap();
            let size = w.rows.len();
            for a in 0..size {
                for b in 0..size {
                    // Σ_{n₁} W̃ W over the II labels is the identity on the I labels
                    let (MultipletLabel::Polar { m: ma, .. }, MultipletLabel::Polar { m: mb, .. }) =
                        (w.cols[a], w.cols[b])
                    else {
                        unreachable!()
                    };
                    let terms: Vec<ExactValue> = (0..=n)
                        .map(|n1| {
                            crate::interbasis::wtilde_ii_i(n, ma, n1).unwrap()
                                * w_i_ii(n, mb, n1, Route::Hahn).unwrap()
                        })
                        .collect();
                    let want = if a == b {
                        ExactValue::one()
                    } else {
                        ExactValue::zero()
                    };
                    assert_eq!(exact_sum(terms.iter()).unwrap(), want);

                    // U = Σ_m Ŵ(ℓ, m) W̃(m, n₁)
                    let terms: Vec<ExactValue> = (0..size)
                        .map(|k| hat.entries[a][k].clone() * w.entries[b][k].conj())
                        .collect();
                    assert_eq!(
                        exact_sum(terms.iter()).unwrap(),
                        u.entries[a][b],
                        "n={n} ({a}, {b})"
                    );
                }
            }
        }
    }
}
