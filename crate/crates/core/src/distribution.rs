/// A finitely supported probability mass function on consecutive integer
/// sites, together with the mass known to lie outside the stored window.
#[derive(Debug, Clone, PartialEq)]
pub struct WalkDistribution {
    offset: i64,
    probs: Vec<f64>,
    time: f64,
    tail_bound: f64,
}

impl WalkDistribution {
    /// `probs[i]` is the mass at site `offset + i`.
    pub fn new(offset: i64, probs: Vec<f64>, time: f64, tail_bound: f64) -> Self {
        debug_assert!(probs.iter().all(|p| *p >= 0.0));
        Self {
            offset,
            probs,
            time,
            tail_bound,
        }
    }

    pub fn point_mass(time: f64) -> Self {
        Self::new(0, vec![1.0], time, 0.0)
    }

    pub fn offset(&self) -> i64 {
        self.offset
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn time(&self) -> f64 {
        self.time
    }

    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Inclusive range of sites covered by the window.
    pub fn support(&self) -> (i64, i64) {
        (self.offset, self.offset + self.probs.len() as i64 - 1)
    }

    /// Mass at site `k`; zero outside the window.
    pub fn prob(&self, k: i64) -> f64 {
        let i = k - self.offset;
        if i < 0 {
            return 0.0;
        }
        self.probs.get(i as usize).copied().unwrap_or(0.0)
    }

    /// `(site, mass)` pairs in increasing site order.
    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        self.probs
            .iter()
            .enumerate()
            .map(move |(i, &p)| (self.offset + i as i64, p))
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.iter().map(|(k, p)| k as f64 * p).sum()
    }

    /// Central second moment of the stored window.
    pub fn variance(&self) -> f64 {
        let mean = self.mean();
        self.iter()
            .map(|(k, p)| {
                let d = k as f64 - mean;
                d * d * p
            })
            .sum()
    }

    pub fn stddev(&self) -> f64 {
        self.variance().sqrt()
    }

    /// `P(a <= X / scale <= b)`: the mass at sites `k` with
    /// `a * scale <= k <= b * scale`, both endpoints included.
    pub fn interval_probability(&self, a: f64, b: f64, scale: f64) -> f64 {
        let (lo, hi) = ((a * scale).ceil(), (b * scale).floor());
        self.iter()
            .filter(|&(k, _)| lo <= k as f64 && k as f64 <= hi)
            .map(|(_, p)| p)
            .sum()
    }

    /// Largest `|P(k) - P(-k)|` over the window.
    pub fn asymmetry(&self) -> f64 {
        self.iter()
            .map(|(k, p)| (p - self.prob(-k)).abs())
            .fold(0.0, f64::max)
    }
}
