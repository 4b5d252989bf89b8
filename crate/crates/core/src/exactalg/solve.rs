use super::{AlgebraError, RatFn};

/// Solve the square system `m · x = rhs` over the field of rational
/// functions in `q`.
///
/// Elimination pivots on the nonzero entry of smallest total degree in each
/// column, which keeps intermediate degrees small.
pub fn fraction_solve(m: &[Vec<RatFn>], rhs: &[RatFn]) -> Result<Vec<RatFn>, AlgebraError> {
    let n = m.len();
    if rhs.len() != n || m.iter().any(|row| row.len() != n) {
        return Err(AlgebraError::DimensionMismatch);
    }
    let mut a: Vec<Vec<RatFn>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .filter(|&r| !a[r][col].is_zero())
            .min_by_key(|&r| a[r][col].size())
            .ok_or(AlgebraError::SingularSystem)?;
        a.swap(col, pivot);
        let inv = a[col][col].inv()?;
        for entry in a[col][col..].iter_mut() {
            *entry = &*entry * &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let pivot = a[col].clone();
            let factor = a[r][col].clone();
            for (t, p) in a[r][col..].iter_mut().zip(&pivot[col..]) {
                *t = &*t - &(&factor * p);
            }
        }
    }
    Ok(a.into_iter().map(|mut row| row.pop().unwrap()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::QPoly;

    fn c(p: &[i64]) -> RatFn {
        RatFn::from_poly(QPoly::from_i64s(p))
    }

    fn apply(m: &[Vec<RatFn>], x: &[RatFn]) -> Vec<RatFn> {
        m.iter()
            .map(|row| row.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    #[test]
    fn identity_system() {
        let m = vec![vec![c(&[1]), c(&[])], vec![c(&[]), c(&[1])]];
        let rhs = vec![c(&[0, 1]), c(&[1])];
        assert_eq!(fraction_solve(&m, &rhs).unwrap(), rhs);
    }

    #[test]
    fn upper_triangular() {
        let m = vec![vec![c(&[1]), c(&[1])], vec![c(&[]), c(&[0, 1])]];
        let rhs = vec![c(&[1, 1]), c(&[0, 1])];
        assert_eq!(fraction_solve(&m, &rhs).unwrap(), vec![c(&[0, 1]), c(&[1])]);
    }

    #[test]
    fn singular_detected() {
        let m = vec![vec![c(&[1, 1]), c(&[2, 2])], vec![c(&[1]), c(&[2])]];
        let rhs = vec![c(&[1]), c(&[1])];
        assert_eq!(fraction_solve(&m, &rhs), Err(AlgebraError::SingularSystem));
    }

    #[test]
    fn mismatched_shapes() {
        let m = vec![vec![c(&[1])]];
        assert_eq!(
            fraction_solve(&m, &[c(&[1]), c(&[1])]),
            Err(AlgebraError::DimensionMismatch)
        );
    }

    #[test]
    fn solution_reproduces_rhs() {
        // dense 3x3 with rational-function entries
        let m = vec![
            vec![
                c(&[1, 1]),
                RatFn::new(QPoly::one(), QPoly::from_i64s(&[-1, 1])).unwrap(),
                c(&[0, 0, 1]),
            ],
            vec![c(&[2]), c(&[0, 1]), c(&[1, 0, 1])],
            vec![c(&[0, 3]), c(&[5, 1]), c(&[1])],
        ];
        let rhs = vec![c(&[1]), c(&[0, 1]), RatFn::q_pow(-1)];
        let x = fraction_solve(&m, &rhs).unwrap();
        assert_eq!(apply(&m, &x), rhs);
    }
}
