use crate::error::{Error, Result};

/// Samples of one uncertain objective, kept sorted ascending.
///
/// Ties are preserved. All fast comparison operators rely on the sorted
/// order, so it is established once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct SamplePopulation {
    samples: Vec<f64>,
}

impl SamplePopulation {
    /// Sorts `raw` into a population. Rejects empty or non-finite input.
    pub fn from_unsorted(mut raw: Vec<f64>) -> Result<Self> {
        validate(&raw)?;
        raw.sort_unstable_by(f64::total_cmp);
        Ok(Self { samples: raw })
    }

    /// Wraps an already sorted list.
    pub fn from_sorted(samples: Vec<f64>) -> Result<Self> {
        validate(&samples)?;
        if samples.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidPopulation("samples are not sorted".into()));
        }
        Ok(Self { samples })
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    /// Always false; populations hold at least one sample.
    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.samples
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.samples
    }

    pub fn min(&self) -> f64 {
        self.samples[0]
    }

    pub fn max(&self) -> f64 {
        self.samples[self.samples.len() - 1]
    }

    /// Proportion of samples `<= y`.
    pub fn cdf(&self, y: f64) -> f64 {
        self.samples.partition_point(|&s| s <= y) as f64 / self.len() as f64
    }

    /// The first sample after the `floor(p * N)` smallest ones.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(0.0..1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        let skipped = (p * self.len() as f64).floor() as usize;
        Ok(self.samples[skipped.min(self.len() - 1)])
    }

    /// Keeps `ceil(sqrt(N))` samples at 1-based indices
    /// `ceil((i - 1/2) * N / N')`, i = 1..N'.
    pub fn reduce(&self) -> SamplePopulation {
        let n = self.len();
        let kept = ceil_sqrt(n);
        let samples = (1..=kept)
            .map(|i| {
                // ceil((2i - 1) * N / (2 N')) in exact integer arithmetic.
                let num = (2 * i - 1) * n;
                let den = 2 * kept;
                let idx = num.div_ceil(den);
                self.samples[idx - 1]
            })
            .collect();
        SamplePopulation { samples }
    }

    /// Parses one decimal sample per line. An optional first line
    /// `# n=<N>` declares the count, which must match. Blank lines and
    /// other `#` lines are ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        Self::from_unsorted(Self::parse_draws(text)?)
    }

    /// Same format as [`parse_text`](Self::parse_text), returning the
    /// samples in file order.
    pub fn parse_draws(text: &str) -> Result<Vec<f64>> {
        let mut declared = None;
        let mut raw = Vec::new();
        let mut seen_content = false;
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if !seen_content && declared.is_none() {
                    if let Some(n) = comment.trim().strip_prefix("n=") {
                        let n: usize = n.trim().parse().map_err(|_| Error::parse(i + 1, "bad sample count header"))?;
                        declared = Some(n);
                    }
                }
                continue;
            }
            seen_content = true;
            let v: f64 = line.parse().map_err(|_| Error::parse(i + 1, format!("not a number: `{line}`")))?;
            if !v.is_finite() {
                return Err(Error::parse(i + 1, "non-finite sample"));
            }
            raw.push(v);
        }
        if let Some(n) = declared {
            if n != raw.len() {
                return Err(Error::InvalidPopulation(format!("header declares {n} samples, found {}", raw.len())));
            }
        }
        if raw.is_empty() {
            return Err(Error::InvalidPopulation("no samples".into()));
        }
        Ok(raw)
    }

    /// Writes the `# n=<N>` header followed by one sample per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("# n={}\n", self.len());
        for s in &self.samples {
            out.push_str(&format!("{s}\n"));
        }
        out
    }
}

fn validate(samples: &[f64]) -> Result<()> {
    if samples.is_empty() {
        return Err(Error::InvalidPopulation("no samples".into()));
    }
    if let Some(bad) = samples.iter().find(|s| !s.is_finite()) {
        return Err(Error::InvalidPopulation(format!("non-finite sample {bad}")));
    }
    Ok(())
}

/// Smallest `k` with `k * k >= n`.
pub(crate) fn ceil_sqrt(n: usize) -> usize {
    let mut k = (n as f64).sqrt() as usize;
    while k * k < n {
        k += 1;
    }
    while k > 0 && (k - 1) * (k - 1) >= n {
        k -= 1;
    }
    k
}
