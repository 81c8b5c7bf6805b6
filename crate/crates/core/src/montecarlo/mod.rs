//! Seeded Monte Carlo estimates of the convex-position probabilities, plus
//! two statistical checks: the equivalence of the disk with the
//! point-on-circle model, and the law of the smallest family member holding
//! a segment sample.
//!
//! Trials are split over `workers` streams. Worker `w` draws from
//! `ChaCha8Rng::seed_from_u64(seed)` with stream `w`, so a result depends
//! only on `(spec, trials, seed, workers)` and never on thread scheduling.

mod density;
mod event;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geometry::{
    hull_vertex_count, sample_circle, sample_disk, sample_segment, sample_square,
    sample_triangle, Point, SegmentSpec, TRIANGLE,
};
use crate::Error;

pub use density::{phi_gamma_density, phi_gamma_density_test, PhiGammaReport};
pub use event::{parse_angle, EventSpec};

/// Worker count used when the caller does not choose one.
pub const DEFAULT_WORKERS: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub stderr: f64,
    pub successes: u64,
    pub trials: u64,
    pub seed: u64,
    pub workers: usize,
}

impl Estimate {
    fn from_counts(successes: u64, trials: u64, seed: u64, workers: usize) -> Self {
        let mean = successes as f64 / trials as f64;
        Estimate {
            mean,
            stderr: (mean * (1.0 - mean) / trials as f64).sqrt(),
            successes,
            trials,
            seed,
            workers,
        }
    }

    /// Whether `value` lies within `sigmas` binomial standard errors of the
    /// mean, the error taken at `value` itself so that a run with no
    /// successes (or no failures) is still judged fairly.
    pub fn agrees_with(&self, value: f64, sigmas: f64) -> bool {
        let v = value.clamp(0.0, 1.0);
        let se = (v * (1.0 - v) / self.trials as f64).sqrt();
        (self.mean - value).abs() <= sigmas * se + 1e-12
    }

    /// `(self − other) / √(se₁² + se₂²)`, zero when both are exact.
    pub fn z_score(&self, other: &Estimate) -> f64 {
        let se = (self.stderr.powi(2) + other.stderr.powi(2)).sqrt();
        let diff = self.mean - other.mean;
        if se == 0.0 {
            if diff == 0.0 { 0.0 } else { f64::INFINITY.copysign(diff) }
        } else {
            diff / se
        }
    }
}

/// The random point set behind an event, before the hull is taken.
#[derive(Clone, Copy, Debug)]
enum Model {
    Disk(usize),
    DiskWithBoundaryPoint(usize),
    Segment(usize, f64),
    Triangle(usize),
    Square(usize),
    TriangleWithBase(usize),
}

impl Model {
    /// Model and the hull size that counts as success.
    fn of(spec: &EventSpec) -> (Model, usize) {
        match *spec {
            EventSpec::DiskCp(n) => (Model::Disk(n), n),
            EventSpec::DiskCpm(n, m) => (Model::Disk(n), m),
            EventSpec::BsegCp(n, t) => (Model::Segment(n, t), n + 2),
            EventSpec::BsegCpm(n, m, t) => (Model::Segment(n, t), m + 2),
            EventSpec::DiskModelB(n) => (Model::DiskWithBoundaryPoint(n), n),
            EventSpec::TriangleCp(n) => (Model::Triangle(n), n),
            EventSpec::SquareCp(n) => (Model::Square(n), n),
            EventSpec::TriangleBipointed(n) => (Model::TriangleWithBase(n), n + 2),
            EventSpec::TriangleBipointedM(n, m) => (Model::TriangleWithBase(n), m + 2),
        }
    }

    fn max_points(&self) -> usize {
        match *self {
            Model::Segment(n, _) | Model::TriangleWithBase(n) => n + 2,
            Model::Disk(n)
            | Model::DiskWithBoundaryPoint(n)
            | Model::Triangle(n)
            | Model::Square(n) => n,
        }
    }

    fn fill(&self, seg: Option<&SegmentSpec>, rng: &mut ChaCha8Rng, pts: &mut Vec<Point>) {
        pts.clear();
        match *self {
            Model::Disk(n) => pts.extend((0..n).map(|_| sample_disk(1.0, rng))),
            Model::DiskWithBoundaryPoint(n) => {
                pts.push(sample_circle(1.0, rng));
                pts.extend((1..n).map(|_| sample_disk(1.0, rng)));
            }
            Model::Segment(n, _) => {
                let seg = seg.expect("segment model carries its segment");
                pts.extend(seg.endpoints());
                pts.extend((0..n).map(|_| sample_segment(seg, rng)));
            }
            Model::Triangle(n) => pts.extend((0..n).map(|_| sample_triangle(rng))),
            Model::Square(n) => pts.extend((0..n).map(|_| sample_square(rng))),
            Model::TriangleWithBase(n) => {
                pts.extend([TRIANGLE[0], TRIANGLE[1]]);
                pts.extend((0..n).map(|_| sample_triangle(rng)));
            }
        }
    }
}

/// Trials handled by worker `w`.
fn share(trials: u64, workers: usize, w: usize) -> u64 {
    let (q, r) = (trials / workers as u64, trials % workers as u64);
    q + u64::from((w as u64) < r)
}

/// Generator for worker `w`.
pub(crate) fn worker_rng(seed: u64, w: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(w as u64);
    rng
}

/// Runs `trials` trials split over `workers` streams, each worker folding
/// its trials into an accumulator; accumulators are merged in worker order.
pub(crate) fn run_workers<A: Send>(
    trials: u64,
    seed: u64,
    workers: usize,
    init: impl Fn() -> A + Sync + Send,
    trial: impl Fn(&mut ChaCha8Rng, &mut A) + Sync + Send,
    merge: impl Fn(&mut A, A),
) -> A {
    let ids: Vec<usize> = (0..workers).collect();
    let parts = crate::par_map(&ids, |&w| {
        let mut rng = worker_rng(seed, w);
        let mut acc = init();
        for _ in 0..share(trials, workers, w) {
            trial(&mut rng, &mut acc);
        }
        acc
    });
    let mut parts = parts.into_iter();
    let mut total = parts.next().expect("at least one worker");
    for p in parts {
        merge(&mut total, p);
    }
    total
}

fn check_run(trials: u64, workers: usize) -> Result<(), Error> {
    if trials == 0 {
        return Err(Error::Domain("need at least one trial".into()));
    }
    if workers == 0 {
        return Err(Error::Domain("need at least one worker".into()));
    }
    Ok(())
}

/// Counts of hull sizes `0..=max_points` for the model.
fn hull_histogram(model: Model, trials: u64, seed: u64, workers: usize) -> Result<Vec<u64>, Error> {
    let seg = match model {
        Model::Segment(_, t) => Some(SegmentSpec::new(t, 1.0)?),
        _ => None,
    };
    let size = model.max_points() + 1;
    Ok(run_workers(
        trials,
        seed,
        workers,
        || (vec![0u64; size], Vec::with_capacity(size)),
        |rng, (hist, pts)| {
            model.fill(seg.as_ref(), rng, pts);
            hist[hull_vertex_count(pts)] += 1;
        },
        |a, b| a.0.iter_mut().zip(b.0).for_each(|(x, y)| *x += y),
    )
    .0)
}

/// Binomial estimate of the event's probability.
pub fn estimate(spec: &EventSpec, trials: u64, seed: u64, workers: usize) -> Result<Estimate, Error> {
    spec.validate()?;
    check_run(trials, workers)?;
    let (model, target) = Model::of(spec);
    let hist = hull_histogram(model, trials, seed, workers)?;
    Ok(Estimate::from_counts(hist[target], trials, seed, workers))
}

/// Estimates of `P(exactly m of n disk points are hull vertices)` for
/// `m = 0..=n`, all from the same trials.
pub fn disk_hull_size_frequencies(
    n: usize,
    trials: u64,
    seed: u64,
    workers: usize,
) -> Result<Vec<Estimate>, Error> {
    check_run(trials, workers)?;
    let hist = hull_histogram(Model::Disk(n), trials, seed, workers)?;
    Ok(hist
        .into_iter()
        .map(|c| Estimate::from_counts(c, trials, seed, workers))
        .collect())
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelEquivalenceReport {
    /// `n` uniform points in the disk.
    pub disk: Estimate,
    /// One point uniform on the circle, `n − 1` in the disk.
    pub boundary: Estimate,
    pub z: f64,
}

/// Estimates the convex-position probability under both models, half the
/// trials each, on independent seeds.
pub fn model_equivalence_test(n: usize, trials: u64, seed: u64) -> Result<ModelEquivalenceReport, Error> {
    if n < 3 {
        return Err(Error::Domain(format!("model comparison needs n >= 3, got {n}")));
    }
    let half = (trials / 2).max(1);
    let disk = estimate(&EventSpec::DiskCp(n), half, seed, DEFAULT_WORKERS)?;
    let boundary = estimate(&EventSpec::DiskModelB(n), half, seed.wrapping_add(1), DEFAULT_WORKERS)?;
    Ok(ModelEquivalenceReport { disk, boundary, z: disk.z_score(&boundary) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shares_cover_all_trials() {
        for (t, w) in [(10, 3), (7, 8), (1_000_001, 8)] {
            assert_eq!((0..w).map(|i| share(t, w, i)).sum::<u64>(), t);
        }
    }

    #[test]
    fn worker_streams_differ() {
        use rand::Rng;
        let a: u64 = worker_rng(1, 0).random();
        let b: u64 = worker_rng(1, 1).random();
        assert_ne!(a, b);
    }

    #[test]
    fn trivial_events() {
        assert_eq!(estimate(&EventSpec::DiskCp(3), 1000, 1, 2).unwrap().mean, 1.0);
        assert_eq!(estimate(&EventSpec::BsegCp(1, 2.0), 1000, 1, 2).unwrap().mean, 1.0);
        assert!(estimate(&EventSpec::DiskCp(3), 0, 1, 2).is_err());
    }
}
