//! Shared test oracles, kept independent of the closed forms they check.

#![allow(dead_code)]

use mirror_prox::geometry::FeasibleSet;
use mirror_prox::point::Point;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn pt(v: &[f64]) -> Point<f64> {
    Point::new(v.to_vec()).unwrap()
}

/// Brute-force inner minimizer for
/// `F(u) = <v, u> + coef * 0.5 ||u - anchor||^2 + mu * 0.5 ||u - w_anchor||^2`
/// over `set`, by projected gradient descent run to a movement tolerance.
pub fn pg_minimize(
    set: &FeasibleSet<f64>,
    anchor: &Point<f64>,
    w_anchor: Option<&Point<f64>>,
    v: &Point<f64>,
    coef: f64,
    mu: f64,
    tol: f64,
) -> Point<f64> {
    let step = 1.0 / (coef + mu);
    let mut u = set.project(anchor).unwrap();
    for _ in 0..200_000 {
        let mut grad = v.add_scaled(coef, &u.sub(anchor));
        if let Some(w) = w_anchor {
            grad = grad.add_scaled(mu, &u.sub(w));
        }
        let next = set.project(&u.add_scaled(-step, &grad)).unwrap();
        let moved = next.dist(&u);
        u = next;
        if moved < tol {
            break;
        }
    }
    u
}

/// Exhaustive 2-D grid search for the same objective; crude but fully
/// independent of any optimality reasoning.
pub fn grid_minimize_2d(
    set: &FeasibleSet<f64>,
    anchor: &Point<f64>,
    v: &Point<f64>,
    coef: f64,
    lo: f64,
    hi: f64,
    step: f64,
) -> Point<f64> {
    let mut best = (f64::INFINITY, pt(&[0.0, 0.0]));
    let mut x = lo;
    while x <= hi {
        let mut y = lo;
        while y <= hi {
            let cand = set.project(&pt(&[x, y])).unwrap();
            let val = v.dot(&cand) + coef * cand.half_sq_dist(anchor);
            if val < best.0 {
                best = (val, cand);
            }
            y += step;
        }
        x += step;
    }
    best.1
}

/// A random point with i.i.d. uniform coordinates in `[-range, range]`.
pub fn random_point<R: Rng>(rng: &mut R, dim: usize, range: f64) -> Point<f64> {
    Point::new(
        (0..dim)
            .map(|_| (rng.random::<f64>() * 2.0 - 1.0) * range)
            .collect(),
    )
    .unwrap()
}
