use serde::{Deserialize, Serialize};
use zernike_core::bases::MultipletLabel;
use zernike_core::interbasis::{CoefficientMatrix, Pair, Route};
use zernike_core::ExactValue;

/// One matrix entry: `i^phase · (mag_num/mag_den) · √(rad_num/rad_den)`.
/// Big integers are written as decimal strings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub pair: String,
    pub n: u32,
    pub row_k1_or_n: i64,
    pub row_k2_or_m: i64,
    pub col_k1_or_n: i64,
    pub col_k2_or_m: i64,
    pub phase: u8,
    pub mag_num: String,
    pub mag_den: String,
    pub rad_num: String,
    pub rad_den: String,
    pub re: f64,
    pub im: f64,
    pub route: String,
}

fn label_fields(label: &MultipletLabel) -> (i64, i64) {
    match *label {
        MultipletLabel::Polar { n, m } => (n.into(), m.into()),
        MultipletLabel::Cartesian { k1, k2 } => (k1.into(), k2.into()),
    }
}

impl OutputRecord {
    fn new(
        pair: Pair,
        route: Route,
        n: u32,
        row: &MultipletLabel,
        col: &MultipletLabel,
        value: &ExactValue,
    ) -> Self {
        let (row_k1_or_n, row_k2_or_m) = label_fields(row);
        let (col_k1_or_n, col_k2_or_m) = label_fields(col);
        let z = value.to_complex();
        OutputRecord {
            pair: pair.to_string(),
            n,
            row_k1_or_n,
            row_k2_or_m,
            col_k1_or_n,
            col_k2_or_m,
            phase: value.phase(),
            mag_num: value.magnitude().numer().to_string(),
            mag_den: value.magnitude().denom().to_string(),
            rad_num: value.radicand().numer().to_string(),
            rad_den: value.radicand().denom().to_string(),
            re: z.re,
            im: z.im,
            route: route.to_string(),
        }
    }
}

/// Records of a matrix in row-major order.
pub fn records(matrix: &CoefficientMatrix) -> Vec<OutputRecord> {
    let mut out = Vec::with_capacity(matrix.rows.len() * matrix.cols.len());
    for (r, row) in matrix.rows.iter().enumerate() {
        for (c, col) in matrix.cols.iter().enumerate() {
            out.push(OutputRecord::new(
                matrix.pair,
                matrix.route,
                matrix.n,
                row,
                col,
                matrix.get(r, c),
            ));
        }
    }
    out
}
