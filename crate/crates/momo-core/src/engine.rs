//! The steady-state optimization loop: uniform initialization, clustered
//! parent selection, SBX + polynomial mutation, evaluation of the first
//! offspring, archiving and environmental selection, one evaluation per
//! generation until the budget is spent.

use crate::clustering::{kmeans, normalize_points, optimal_k, Partition};
use crate::problems::Problem;
use crate::ranking::non_dominated_sort;
use crate::rng::RandomStream;
use crate::types::{
    Archive, ClusterTracker, Error, Population, RunConfig, Solution,
};
use crate::variation::{polynomial_mutation, sbx_crossover};
use alloc::string::String;
use alloc::vec::Vec;

/// Population copy captured when the spent budget first reaches a
/// configured fraction of `nfe_max`. Members carry cluster labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub fraction: f64,
    pub nfe: usize,
    pub k_bar: usize,
    pub population: Population,
}

/// Everything one run produces.
#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub archive: Archive,
    pub final_population: Population,
    /// Per-generation (instantaneous k*, stabilized k-bar) pairs.
    pub k_history: Vec<(usize, usize)>,
    pub snapshots: Vec<Snapshot>,
}

/// Per-generation observations for invariant instrumentation.
#[derive(Debug, Clone, PartialEq)]
pub struct GenerationEvent {
    pub generation: usize,
    /// Evaluations spent after this generation's offspring.
    pub nfe: usize,
    pub k_star: usize,
    pub k_bar: usize,
    /// Cluster sizes of the parent population at selection time.
    pub parent_cluster_sizes: Vec<usize>,
    pub parent_clusters: (usize, usize),
    pub parent_ranks: (usize, usize),
    /// Cluster sizes of the N+1 pool at elimination time.
    pub elimination_cluster_sizes: Vec<usize>,
    pub eliminated_cluster: usize,
    pub eliminated_rank: usize,
    /// Highest rank present in the eliminated solution's cluster.
    pub max_rank_in_eliminated_cluster: usize,
}

/// N solutions sampled uniformly per dimension within bounds, all
/// evaluated and appended to the archive.
pub fn initialize(
    problem: &Problem,
    config: &RunConfig,
    rng: &mut RandomStream,
    archive: &mut Archive,
) -> Result<Population, Error> {
    let mut pop = Vec::with_capacity(config.pop_size);
    for _ in 0..config.pop_size {
        let x: Vec<f64> = (0..problem.dim)
            .map(|i| rng.uniform_in(problem.bounds.lower[i], problem.bounds.upper[i]))
            .collect();
        let f = problem.evaluate(&x)?;
        let solution = Solution::new(x, f, archive.len() + 1);
        archive.push(solution.clone());
        pop.push(solution);
    }
    Ok(pop)
}

/// Uniform pick among the indices attaining the extreme of `key`.
fn pick_extreme<F: Fn(usize) -> usize>(
    candidates: &[usize],
    key: F,
    smallest: bool,
    rng: &mut RandomStream,
) -> usize {
    let extreme = candidates
        .iter()
        .map(|&i| key(i))
        .fold(if smallest { usize::MAX } else { 0 }, |acc, v| {
            if smallest {
                acc.min(v)
            } else {
                acc.max(v)
            }
        });
    let tied: Vec<usize> = candidates
        .iter()
        .copied()
        .filter(|&i| key(i) == extreme)
        .collect();
    tied[rng.index(tied.len())]
}

/// Indices of the two parents: the two clusters with the smallest
/// cardinality (ties broken uniformly at random) each contribute one
/// member of best non-domination rank (rank ties broken at random).
/// Expects `rank` and `cluster_id` to be assigned on every solution.
pub fn select_parents(
    pop: &[Solution],
    k_bar: usize,
    rng: &mut RandomStream,
) -> Result<(usize, usize), Error> {
    if k_bar < 2 {
        return Err(Error::InvalidArgument(String::from("k_bar must be >= 2")));
    }
    let sizes = cluster_sizes(pop, k_bar);
    let occupied: Vec<usize> = (0..k_bar).filter(|&c| sizes[c] > 0).collect();
    let first = pick_extreme(&occupied, |c| sizes[c], true, rng);
    let rest: Vec<usize> = occupied.iter().copied().filter(|&c| c != first).collect();
    let second = pick_extreme(&rest, |c| sizes[c], true, rng);

    let pick_best = |cluster: usize, rng: &mut RandomStream| {
        let members: Vec<usize> = (0..pop.len())
            .filter(|&i| pop[i].cluster_id == Some(cluster))
            .collect();
        pick_extreme(&members, |i| pop[i].rank.expect("ranked"), true, rng)
    };
    let a = pick_best(first, rng);
    let b = pick_best(second, rng);
    Ok((a, b))
}

fn cluster_sizes(pop: &[Solution], k: usize) -> Vec<usize> {
    let mut sizes = alloc::vec![0usize; k];
    for s in pop {
        sizes[s.cluster_id.expect("clustered")] += 1;
    }
    sizes
}

struct Elimination {
    cluster_sizes: Vec<usize>,
    cluster: usize,
    rank: usize,
    max_rank_in_cluster: usize,
}

/// Re-rank and re-cluster the N+1 pool, then drop one worst-rank member of
/// the largest cluster (both ties broken uniformly at random).
fn eliminate_one(
    pool: &mut Vec<Solution>,
    k_bar: usize,
    rng: &mut RandomStream,
) -> Result<Elimination, Error> {
    let k = k_bar.min(pool.len());
    let ranks = non_dominated_sort(&pool.iter().map(|s| s.f.clone()).collect::<Vec<_>>())?;
    let normalized = normalize_points(&pool.iter().map(|s| s.x.clone()).collect::<Vec<_>>());
    let partition = kmeans(&normalized, k, rng)?;
    for (i, s) in pool.iter_mut().enumerate() {
        s.rank = Some(ranks[i]);
        s.cluster_id = Some(partition.assignment[i]);
    }
    let sizes = partition.cluster_sizes();
    let occupied: Vec<usize> = (0..k).filter(|&c| sizes[c] > 0).collect();
    let largest = pick_extreme(&occupied, |c| sizes[c], false, rng);
    let members: Vec<usize> = (0..pool.len())
        .filter(|&i| partition.assignment[i] == largest)
        .collect();
    let victim = pick_extreme(&members, |i| ranks[i], false, rng);
    let max_rank = members.iter().map(|&i| ranks[i]).max().unwrap();
    let info = Elimination {
        cluster_sizes: sizes,
        cluster: largest,
        rank: ranks[victim],
        max_rank_in_cluster: max_rank,
    };
    pool.remove(victim);
    Ok(info)
}

/// Environmental selection on an N+1 pool: returns the surviving N.
pub fn environmental_selection(
    mut pool: Vec<Solution>,
    k_bar: usize,
    rng: &mut RandomStream,
) -> Result<Population, Error> {
    if pool.len() < 3 {
        return Err(Error::InvalidArgument(String::from(
            "environmental selection needs at least 3 solutions",
        )));
    }
    eliminate_one(&mut pool, k_bar, rng)?;
    Ok(pool)
}

pub fn run(problem: &Problem, config: &RunConfig) -> Result<RunRecord, Error> {
    run_with_observer(problem, config, |_| {})
}

pub fn run_with_observer<F>(
    problem: &Problem,
    config: &RunConfig,
    mut observer: F,
) -> Result<RunRecord, Error>
where
    F: FnMut(&GenerationEvent),
{
    config.validate()?;
    let mut rng = RandomStream::new(config.seed);
    let mut archive = Archive::new();
    let mut pop = initialize(problem, config, &mut rng, &mut archive)?;
    let mut tracker = ClusterTracker::new();
    let mut k_history = Vec::new();
    let mut snapshots: Vec<Snapshot> = Vec::new();
    let mut pending: Vec<f64> = config.snapshot_fractions.clone();
    pending.sort_by(f64::total_cmp);
    let pm = config.mutation_probability(problem.dim);
    let mut generation = 0usize;

    while archive.len() < config.nfe_max {
        generation += 1;

        // rank and cluster the parent population
        let objectives: Vec<Vec<f64>> = pop.iter().map(|s| s.f.clone()).collect();
        let ranks = non_dominated_sort(&objectives)?;
        let normalized = normalize_points(&pop.iter().map(|s| s.x.clone()).collect::<Vec<_>>());
        let k_star = optimal_k(&normalized, &mut rng)?;
        let k_bar = tracker.update(k_star)?.min(pop.len());
        let partition: Partition = kmeans(&normalized, k_bar, &mut rng)?;
        for (i, s) in pop.iter_mut().enumerate() {
            s.rank = Some(ranks[i]);
            s.cluster_id = Some(partition.assignment[i]);
        }
        k_history.push((k_star, k_bar));

        take_due_snapshots(&mut pending, &mut snapshots, archive.len(), config, k_bar, &pop);

        // parent selection and variation; the first offspring is evaluated
        let (pa, pb) = select_parents(&pop, k_bar, &mut rng)?;
        let parent_meta = (
            partition.cluster_sizes(),
            (partition.assignment[pa], partition.assignment[pb]),
            (ranks[pa], ranks[pb]),
        );
        let (c1, _c2) = sbx_crossover(
            &pop[pa].x,
            &pop[pb].x,
            config.pc,
            config.eta_c,
            &problem.bounds,
            &mut rng,
        )?;
        let child_x = polynomial_mutation(&c1, pm, config.eta_m, &problem.bounds, &mut rng)?;
        let child_f = problem.evaluate(&child_x)?;
        let child = Solution::new(child_x, child_f, archive.len() + 1);
        archive.push(child.clone());

        // environmental selection over the N+1 pool
        let mut pool = pop;
        pool.push(child);
        let elim = eliminate_one(&mut pool, k_bar, &mut rng)?;
        pop = pool;

        observer(&GenerationEvent {
            generation,
            nfe: archive.len(),
            k_star,
            k_bar,
            parent_cluster_sizes: parent_meta.0,
            parent_clusters: parent_meta.1,
            parent_ranks: parent_meta.2,
            elimination_cluster_sizes: elim.cluster_sizes,
            eliminated_cluster: elim.cluster,
            eliminated_rank: elim.rank,
            max_rank_in_eliminated_cluster: elim.max_rank_in_cluster,
        });
    }

    // fractions not reached inside the loop (always at least 1.0)
    if !pending.is_empty() {
        let k_bar = tracker.stabilized().map(|k| k.min(pop.len()));
        let mut labeled = pop.clone();
        if let Some(k) = k_bar {
            let normalized =
                normalize_points(&labeled.iter().map(|s| s.x.clone()).collect::<Vec<_>>());
            let partition = kmeans(&normalized, k, &mut rng)?;
            for (i, s) in labeled.iter_mut().enumerate() {
                s.cluster_id = Some(partition.assignment[i]);
            }
        } else {
            for s in labeled.iter_mut() {
                s.cluster_id = Some(0);
            }
        }
        for fraction in pending {
            snapshots.push(Snapshot {
                fraction,
                nfe: archive.len(),
                k_bar: k_bar.unwrap_or(1),
                population: labeled.clone(),
            });
        }
    }

    Ok(RunRecord {
        archive,
        final_population: pop,
        k_history,
        snapshots,
    })
}

fn take_due_snapshots(
    pending: &mut Vec<f64>,
    snapshots: &mut Vec<Snapshot>,
    nfe: usize,
    config: &RunConfig,
    k_bar: usize,
    pop: &Population,
) {
    while let Some(&fraction) = pending.first() {
        if (nfe as f64) < fraction * config.nfe_max as f64 {
            break;
        }
        snapshots.push(Snapshot {
            fraction,
            nfe,
            k_bar,
            population: pop.clone(),
        });
        pending.remove(0);
    }
}
