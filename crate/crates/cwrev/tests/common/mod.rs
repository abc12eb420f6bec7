//! Shared independent oracles for the integration tests. These deliberately
//! avoid the library's own quadrature and coefficient recursion so that
//! agreement is a genuine cross-check.

/// Composite-Simpson value of `int_0^{pi/2} (h^2 - (h')^2 / 2) cos t dt`
/// from pointwise `(h, h')` evaluations; `panels` must be even.
pub fn simpson_deficit<F: Fn(f64) -> (f64, f64)>(eval: F, panels: usize) -> f64 {
    let n = if panels % 2 == 0 { panels } else { panels + 1 };
    let a = 0.0;
    let b = std::f64::consts::FRAC_PI_2;
    let step = (b - a) / n as f64;
    let f = |t: f64| {
        let (h, dh) = eval(t);
        (h * h - 0.5 * dh * dh) * t.cos()
    };
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let weight = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += weight * f(a + i as f64 * step);
    }
    acc * step / 3.0
}

/// Solve a dense square linear system by Gaussian elimination with partial
/// pivoting. Returns `None` for (numerically) singular systems.
pub fn solve_dense(mut matrix: Vec<Vec<f64>>, mut rhs: Vec<f64>) -> Option<Vec<f64>> {
    let n = matrix.len();
    for row in &matrix {
        assert_eq!(row.len(), n, "matrix must be square");
    }
    for col in 0..n {
        let pivot = (col..n).max_by(|&i, &j| {
            matrix[i][col]
                .abs()
                .partial_cmp(&matrix[j][col].abs())
                .expect("finite entries")
        })?;
        if matrix[pivot][col].abs() < 1e-13 {
            return None;
        }
        matrix.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let factor = matrix[row][col] / matrix[col][col];
            for k in col..n {
                matrix[row][k] -= factor * matrix[col][k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut solution = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for col in row + 1..n {
            acc -= matrix[row][col] * solution[col];
        }
        solution[row] = acc / matrix[row][row];
    }
    Some(solution)
}
