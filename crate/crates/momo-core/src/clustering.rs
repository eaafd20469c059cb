//! Variable-space clustering: min-max normalization, k-means with
//! squared-distance-proportional seeding, Silhouette scoring and the
//! singleton-stop search for the optimal cluster count.

use crate::rng::RandomStream;
use crate::types::{DecisionVector, Error};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

const MAX_LLOYD_ITERS: usize = 100;

#[derive(Debug, Clone, PartialEq)]
pub struct Partition {
    /// Cluster label per point, in [0, k).
    pub assignment: Vec<usize>,
    pub centroids: Vec<Vec<f64>>,
    pub k: usize,
}

impl Partition {
    pub fn cluster_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.k];
        for &a in &self.assignment {
            sizes[a] += 1;
        }
        sizes
    }
}

/// Per-dimension affine map of the observed min to 0 and max to 1.
/// Dimensions with zero observed range map to 0.
pub fn normalize_points(points: &[DecisionVector]) -> Vec<DecisionVector> {
    if points.is_empty() {
        return Vec::new();
    }
    let d = points[0].len();
    let mut lo = vec![f64::INFINITY; d];
    let mut hi = vec![f64::NEG_INFINITY; d];
    for p in points {
        for i in 0..d {
            lo[i] = lo[i].min(p[i]);
            hi[i] = hi[i].max(p[i]);
        }
    }
    points
        .iter()
        .map(|p| {
            (0..d)
                .map(|i| {
                    let range = hi[i] - lo[i];
                    if range > 0.0 {
                        (p[i] - lo[i]) / range
                    } else {
                        0.0
                    }
                })
                .collect()
        })
        .collect()
}

fn sq_dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(sq_dist(a, b))
}

/// Seeding proportional to squared distance from the nearest chosen center.
fn seed_centroids(points: &[DecisionVector], k: usize, rng: &mut RandomStream) -> Vec<Vec<f64>> {
    let mut centroids = Vec::with_capacity(k);
    centroids.push(points[rng.index(points.len())].clone());
    let mut d2: Vec<f64> = points.iter().map(|p| sq_dist(p, &centroids[0])).collect();
    while centroids.len() < k {
        let total: f64 = d2.iter().sum();
        let next = if total > 0.0 {
            let mut target = rng.uniform() * total;
            let mut chosen = points.len() - 1;
            for (i, &w) in d2.iter().enumerate() {
                target -= w;
                if target <= 0.0 {
                    chosen = i;
                    break;
                }
            }
            chosen
        } else {
            // all remaining mass zero (duplicate points): pick uniformly
            rng.index(points.len())
        };
        centroids.push(points[next].clone());
        for (i, p) in points.iter().enumerate() {
            d2[i] = d2[i].min(sq_dist(p, centroids.last().unwrap()));
        }
    }
    centroids
}

/// Lloyd's algorithm, one replicate, iteration cap of 100, convergence when
/// assignments stop changing. Empty clusters are repaired by moving the
/// point farthest from its current centroid into the empty cluster.
pub fn kmeans(
    points: &[DecisionVector],
    k: usize,
    rng: &mut RandomStream,
) -> Result<Partition, Error> {
    if k < 2 {
        return Err(Error::InvalidArgument(String::from("k must be >= 2")));
    }
    if points.len() < k {
        return Err(Error::InvalidArgument(String::from(
            "need at least k points",
        )));
    }
    let d = points[0].len();
    let mut centroids = seed_centroids(points, k, rng);
    let mut assignment = vec![usize::MAX; points.len()];

    for _ in 0..MAX_LLOYD_ITERS {
        // assign
        let mut changed = false;
        for (i, p) in points.iter().enumerate() {
            let mut best = 0;
            let mut best_d = f64::INFINITY;
            for (c, centroid) in centroids.iter().enumerate() {
                let dd = sq_dist(p, centroid);
                if dd < best_d {
                    best_d = dd;
                    best = c;
                }
            }
            if assignment[i] != best {
                assignment[i] = best;
                changed = true;
            }
        }

        // repair empty clusters: steal the globally worst-fitting point
        loop {
            let mut sizes = vec![0usize; k];
            for &a in &assignment {
                sizes[a] += 1;
            }
            let Some(empty) = sizes.iter().position(|&s| s == 0) else {
                break;
            };
            let farthest = (0..points.len())
                .filter(|&i| sizes[assignment[i]] > 1)
                .max_by(|&a, &b| {
                    let da = sq_dist(&points[a], &centroids[assignment[a]]);
                    let db = sq_dist(&points[b], &centroids[assignment[b]]);
                    da.total_cmp(&db)
                })
                .expect("k <= number of points, so a donor cluster exists");
            assignment[farthest] = empty;
            centroids[empty] = points[farthest].clone();
            changed = true;
        }

        if !changed {
            break;
        }

        // update centroids
        let mut sums = vec![vec![0.0; d]; k];
        let mut counts = vec![0usize; k];
        for (i, p) in points.iter().enumerate() {
            counts[assignment[i]] += 1;
            for j in 0..d {
                sums[assignment[i]][j] += p[j];
            }
        }
        for c in 0..k {
            for j in 0..d {
                centroids[c][j] = sums[c][j] / counts[c] as f64;
            }
        }
    }

    Ok(Partition {
        assignment,
        centroids,
        k,
    })
}

/// Mean Silhouette over all points: s(i) = (b - a) / max(a, b) with
/// a = mean intra-cluster distance and b = smallest mean distance to
/// another cluster. Points in singleton clusters contribute 0.
pub fn silhouette_score(points: &[DecisionVector], partition: &Partition) -> Result<f64, Error> {
    if partition.k < 2 {
        return Err(Error::InvalidArgument(String::from("k must be >= 2")));
    }
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let sizes = partition.cluster_sizes();
    let mut total = 0.0;
    for i in 0..n {
        let own = partition.assignment[i];
        if sizes[own] <= 1 {
            continue; // s(i) = 0
        }
        let mut sums = vec![0.0; partition.k];
        for j in 0..n {
            if j != i {
                sums[partition.assignment[j]] += dist(&points[i], &points[j]);
            }
        }
        let a = sums[own] / (sizes[own] - 1) as f64;
        let b = (0..partition.k)
            .filter(|&c| c != own && sizes[c] > 0)
            .map(|c| sums[c] / sizes[c] as f64)
            .fold(f64::INFINITY, f64::min);
        if b.is_finite() {
            total += (b - a) / a.max(b);
        }
    }
    Ok(total / n as f64)
}

/// Search k = 2, 3, ... running k-means for each, stopping at the first K
/// whose partition contains a singleton cluster, then return the k with the
/// highest Silhouette among {2..K} (ties favor the smallest k).
pub fn optimal_k(points: &[DecisionVector], rng: &mut RandomStream) -> Result<usize, Error> {
    if points.len() < 3 {
        return Err(Error::InvalidArgument(String::from(
            "need at least 3 points",
        )));
    }
    let mut best_k = 2;
    let mut best_score = f64::NEG_INFINITY;
    for k in 2..=points.len() {
        let partition = kmeans(points, k, rng)?;
        let score = silhouette_score(points, &partition)?;
        if score > best_score {
            best_score = score;
            best_k = k;
        }
        if partition.cluster_sizes().contains(&1) {
            break;
        }
    }
    Ok(best_k)
}
