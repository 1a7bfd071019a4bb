//! Exact rational arithmetic and polyhedral primitives.
//!
//! Everything downstream (payoffs, strategies, indices) is built on
//! [`Rational`] and the three operations here: [`lp_solve`],
//! [`in_convex_hull`] and [`polytope_dimension`]. All results are exact;
//! determinism comes from Bland's pivoting rule.

mod hull;
mod lp;
mod polytope;

pub use hull::{in_convex_hull, HullResult};
pub use lp::{lp_solve, LinearProgram, LpError, LpResult, Sense};
pub use polytope::{polytope_dimension, InequalityPolytope, PolytopeDimension};

use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational. Always stored in lowest terms with a
/// positive denominator (guaranteed by `num_rational`).
pub type Rational = num_rational::BigRational;

/// `n/d` as a [`Rational`]. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Parses `"p/q"` or `"p"` with optional sign. Rejects zero denominators.
pub fn parse_rational(text: &str) -> Result<Rational, String> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let n: num_bigint::BigInt = num
        .parse()
        .map_err(|_| format!("invalid rational `{text}`"))?;
    let d: num_bigint::BigInt = match den {
        Some(d) => d.parse().map_err(|_| format!("invalid rational `{text}`"))?,
        None => One::one(),
    };
    if d.is_zero() {
        return Err(format!("invalid rational `{text}`: zero denominator"));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise. Lossless.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Dot product of two equal-length rational slices.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Rank of a rational matrix by Gaussian elimination.
pub fn matrix_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let factor = &m[r][col] / &inv;
                for c in col..ncols {
                    let sub = &factor * &m[rank][c];
                    m[r][c] -= sub;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot != col {
            m.swap(col, pivot);
            det = -det;
        }
        det *= &m[col][col];
        let inv = m[col][col].clone();
        for r in col + 1..n {
            if !m[r][col].is_zero() {
                let factor = &m[r][col] / &inv;
                for c in col..n {
                    let sub = &factor * &m[col][c];
                    m[r][c] -= sub;
                }
            }
        }
    }
    det
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(r: &Rational) -> i64 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/4", "-2/5", "7", "-9", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(parse_rational("6/8").unwrap(), rat(3, 4));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn determinant_and_rank() {
        let m = vec![vec![rat(1, 1), rat(2, 1)], vec![rat(3, 1), rat(4, 1)]];
        assert_eq!(determinant(&m), int(-2));
        assert_eq!(matrix_rank(&m), 2);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(&singular), int(0));
        assert_eq!(matrix_rank(&singular), 1);
    }
}
