//! Simulated binary crossover and polynomial mutation on `[0, 1]^n`.

use rand::Rng;

const EPS: f64 = 1e-14;

/// Spread factor for one side of a bounded SBX pair.
fn sbx_betaq(u: f64, beta: f64, eta: f64) -> f64 {
    let alpha = 2.0 - beta.powf(-(eta + 1.0));
    if u <= 1.0 / alpha {
        (u * alpha).powf(1.0 / (eta + 1.0))
    } else {
        (1.0 / (2.0 - u * alpha)).powf(1.0 / (eta + 1.0))
    }
}

/// Bounded SBX. With probability `1 - prob` the parents are returned
/// unchanged; otherwise each variable is recombined with probability 1/2.
pub fn sbx_crossover<R: Rng + ?Sized>(a: &[f64], b: &[f64], prob: f64, eta: f64, rng: &mut R) -> (Vec<f64>, Vec<f64>) {
    let mut c1 = a.to_vec();
    let mut c2 = b.to_vec();
    if rng.random::<f64>() >= prob {
        return (c1, c2);
    }
    for i in 0..a.len() {
        if rng.random::<f64>() > 0.5 || (a[i] - b[i]).abs() <= EPS {
            continue;
        }
        let (y1, y2) = if a[i] < b[i] { (a[i], b[i]) } else { (b[i], a[i]) };
        let u = rng.random::<f64>();
        let span = y2 - y1;
        let lo = 0.5 * ((y1 + y2) - sbx_betaq(u, 1.0 + 2.0 * y1 / span, eta) * span);
        let hi = 0.5 * ((y1 + y2) + sbx_betaq(u, 1.0 + 2.0 * (1.0 - y2) / span, eta) * span);
        let (lo, hi) = (lo.clamp(0.0, 1.0), hi.clamp(0.0, 1.0));
        if rng.random::<f64>() <= 0.5 {
            c1[i] = hi;
            c2[i] = lo;
        } else {
            c1[i] = lo;
            c2[i] = hi;
        }
    }
    (c1, c2)
}

/// Bounded polynomial mutation, each variable mutated with probability
/// `prob`.
pub fn polynomial_mutation<R: Rng + ?Sized>(x: &[f64], prob: f64, eta: f64, rng: &mut R) -> Vec<f64> {
    let pow = 1.0 / (eta + 1.0);
    x.iter()
        .map(|&y| {
            if rng.random::<f64>() >= prob {
                return y;
            }
            let u = rng.random::<f64>();
            let dq = if u <= 0.5 {
                let xy = 1.0 - y;
                let val = 2.0 * u + (1.0 - 2.0 * u) * xy.powf(eta + 1.0);
                val.powf(pow) - 1.0
            } else {
                let xy = y;
                let val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy.powf(eta + 1.0);
                1.0 - val.powf(pow)
            };
            (y + dq).clamp(0.0, 1.0)
        })
        .collect()
}
