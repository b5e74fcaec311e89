//! Seeded generators of random tiled orders, for property suites and
//! benchmarks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exponent::ExponentMatrix;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Min-plus closure (Floyd–Warshall) of a matrix with zero diagonal. Entries
/// only decrease and the result satisfies the triangle inequality.
fn close(m: &mut [Vec<i64>]) {
    let n = m.len();
    for j in 0..n {
        for i in 0..n {
            for k in 0..n {
                let via = m[i][j] + m[j][k];
                if via < m[i][k] {
                    m[i][k] = via;
                }
            }
        }
    }
}

/// Random order of size `n` with entries in `0..=max_entry`: uniform
/// off-diagonal draws, then min-plus closure.
pub fn random_order<R: Rng>(rng: &mut R, n: usize, max_entry: i64) -> ExponentMatrix {
    let mut m: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        0
                    } else {
                        rng.random_range(0..=max_entry)
                    }
                })
                .collect()
        })
        .collect();
    close(&mut m);
    ExponentMatrix::validate(&m).expect("closure yields a valid order")
}

/// Random basic (0,1)-order of size `n`, by rejection. `density` is the
/// probability of drawing a 1 before closure. Closure spreads zeros, so
/// densities below about 0.7 rarely give a basic order once n exceeds 5.
pub fn random_basic_zero_one<R: Rng>(rng: &mut R, n: usize, density: f64) -> ExponentMatrix {
    loop {
        let mut m: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| i64::from(i != j && rng.random_bool(density)))
                    .collect()
            })
            .collect();
        close(&mut m);
        let a = ExponentMatrix::validate(&m).expect("closure yields a valid order");
        if a.is_basic() {
            return a;
        }
    }
}
