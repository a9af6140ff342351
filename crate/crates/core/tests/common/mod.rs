//! Reference computations shared by the integration tests. Nothing here calls
//! into the library's numerics.

#![allow(dead_code)]

use rand::Rng;

pub type Dense = [[f64; 3]; 3];

/// Dense form of the circulant with first row `row`, written out by hand.
pub fn circulant_dense(row: [f64; 3]) -> Dense {
    let [a, b, c] = row;
    [[a, b, c], [c, a, b], [b, c, a]]
}

/// Cofactor expansion along the first row.
pub fn det_cofactor(m: &Dense) -> f64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

pub fn matmul(x: &Dense, y: &Dense) -> Dense {
    let mut out = [[0.0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| x[i][k] * y[k][j]).sum();
        }
    }
    out
}

pub fn matvec(m: &Dense, v: [f64; 3]) -> [f64; 3] {
    std::array::from_fn(|i| (0..3).map(|j| m[i][j] * v[j]).sum())
}

/// Cramer's rule.
pub fn solve_cramer(m: &Dense, rhs: [f64; 3]) -> Option<[f64; 3]> {
    let d = det_cofactor(m);
    if d == 0.0 {
        return None;
    }
    Some(std::array::from_fn(|col| {
        let mut mc = *m;
        for (row, r) in mc.iter_mut().enumerate() {
            r[col] = rhs[row];
        }
        det_cofactor(&mc) / d
    }))
}

pub fn random_row(rng: &mut impl Rng, scale: f64) -> [f64; 3] {
    std::array::from_fn(|_| rng.gen_range(-scale..scale))
}

fn binomial(n: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// Symmetric `k`-th difference quotient with step `h`. Its error expands in
/// even powers of `h`.
fn central_difference(f: &dyn Fn(f64) -> f64, x: f64, k: usize, h: f64) -> f64 {
    let half = k as f64 / 2.0;
    let sum: f64 = (0..=k)
        .map(|i| {
            let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
            sign * binomial(k, i) * f(x + (half - i as f64) * h)
        })
        .sum();
    sum / h.powi(k as i32)
}

/// `k`-th derivative of `f` at `x` by Ridders' extrapolation of central
/// differences, starting from step `h0`. Returns the estimate and its error
/// estimate.
pub fn ridders(f: &dyn Fn(f64) -> f64, x: f64, k: usize, h0: f64) -> (f64, f64) {
    const CON: f64 = 1.4;
    const CON2: f64 = CON * CON;
    const NTAB: usize = 12;
    const SAFE: f64 = 2.0;

    let mut table = [[0.0; NTAB]; NTAB];
    let mut h = h0;
    table[0][0] = central_difference(f, x, k, h);
    let mut best = (table[0][0], f64::INFINITY);
    for i in 1..NTAB {
        h /= CON;
        table[0][i] = central_difference(f, x, k, h);
        let mut fac = CON2;
        for j in 1..=i {
            table[j][i] = (table[j - 1][i] * fac - table[j - 1][i - 1]) / (fac - 1.0);
            fac *= CON2;
            let err = (table[j][i] - table[j - 1][i])
                .abs()
                .max((table[j][i] - table[j - 1][i - 1]).abs());
            if err <= best.1 {
                best = (table[j][i], err);
            }
        }
        if (table[i][i] - table[i - 1][i - 1]).abs() >= SAFE * best.1 {
            break;
        }
    }
    best
}

/// [`ridders`] from several starting steps scaled by `scale`, keeping the
/// estimate with the smallest error bound.
pub fn derivative_fd(f: &dyn Fn(f64) -> f64, x: f64, k: usize, scale: f64) -> f64 {
    [0.05, 0.1, 0.2, 0.4]
        .iter()
        .map(|h0| ridders(f, x, k, h0 * scale))
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
        .0
}

/// Relative error with a unit floor on the denominator.
pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1.0)
}
