use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_distr::Distribution;
use statrs::distribution::{Beta, ContinuousCDF, Normal};

use crate::error::{Error, Result};

/// Base family of a closed-form distribution, before the affine transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    Uniform { lower: f64, upper: f64 },
    /// Parameterized by variance, not standard deviation.
    Gaussian { mean: f64, variance: f64 },
    Beta { alpha: f64, beta: f64 },
}

/// A closed-form distribution `scale * X + offset` where `X` follows
/// [`Family`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistributionSpec {
    family: Family,
    scale: f64,
    offset: f64,
}

impl DistributionSpec {
    pub fn new(family: Family) -> Result<Self> {
        Self::with_affine(family, 1.0, 0.0)
    }

    pub fn with_affine(family: Family, scale: f64, offset: f64) -> Result<Self> {
        let ok = |c: bool, msg: &str| if c { Ok(()) } else { Err(Error::InvalidSpec(msg.to_string())) };
        match family {
            Family::Uniform { lower, upper } => {
                ok(lower.is_finite() && upper.is_finite(), "uniform bounds must be finite")?;
                ok(lower < upper, "uniform requires lower < upper")?;
            }
            Family::Gaussian { mean, variance } => {
                ok(mean.is_finite() && variance.is_finite(), "gaussian parameters must be finite")?;
                ok(variance > 0.0, "gaussian requires variance > 0")?;
            }
            Family::Beta { alpha, beta } => {
                ok(alpha.is_finite() && beta.is_finite(), "beta parameters must be finite")?;
                ok(alpha > 0.0 && beta > 0.0, "beta requires alpha > 0 and beta > 0")?;
            }
        }
        ok(scale.is_finite() && offset.is_finite(), "affine transform must be finite")?;
        ok(scale != 0.0, "scale must be non-zero")?;
        Ok(Self { family, scale, offset })
    }

    pub fn uniform(lower: f64, upper: f64) -> Result<Self> {
        Self::new(Family::Uniform { lower, upper })
    }

    pub fn gaussian(mean: f64, variance: f64) -> Result<Self> {
        Self::new(Family::Gaussian { mean, variance })
    }

    pub fn beta(alpha: f64, beta: f64) -> Result<Self> {
        Self::new(Family::Beta { alpha, beta })
    }

    /// Returns a copy with `scale` and `offset` replaced.
    pub fn affine(self, scale: f64, offset: f64) -> Result<Self> {
        Self::with_affine(self.family, scale, offset)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn scale(&self) -> f64 {
        self.scale
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    fn base_moments(&self) -> (f64, f64) {
        match self.family {
            Family::Uniform { lower, upper } => ((lower + upper) / 2.0, (upper - lower).powi(2) / 12.0),
            Family::Gaussian { mean, variance } => (mean, variance),
            Family::Beta { alpha, beta } => {
                let s = alpha + beta;
                (alpha / s, alpha * beta / (s * s * (s + 1.0)))
            }
        }
    }

    pub fn mean(&self) -> f64 {
        self.base_moments().0 * self.scale + self.offset
    }

    pub fn variance(&self) -> f64 {
        self.base_moments().1 * self.scale * self.scale
    }

    /// Support after the affine transform. Gaussian families have none.
    pub fn support(&self) -> Result<(f64, f64)> {
        let (lo, hi) = match self.family {
            Family::Uniform { lower, upper } => (lower, upper),
            Family::Beta { .. } => (0.0, 1.0),
            Family::Gaussian { .. } => return Err(Error::UnboundedSupport),
        };
        let (a, b) = (lo * self.scale + self.offset, hi * self.scale + self.offset);
        Ok((a.min(b), a.max(b)))
    }

    fn base_cdf(&self, z: f64) -> f64 {
        match self.family {
            Family::Uniform { lower, upper } => ((z - lower) / (upper - lower)).clamp(0.0, 1.0),
            Family::Gaussian { mean, variance } => normal(mean, variance).cdf(z),
            Family::Beta { alpha, beta } => {
                if z <= 0.0 {
                    0.0
                } else if z >= 1.0 {
                    1.0
                } else {
                    beta_dist(alpha, beta).cdf(z)
                }
            }
        }
    }

    fn base_quantile(&self, p: f64) -> f64 {
        match self.family {
            Family::Uniform { lower, upper } => lower + p * (upper - lower),
            Family::Gaussian { mean, variance } => normal(mean, variance).inverse_cdf(p),
            Family::Beta { alpha, beta } => beta_dist(alpha, beta).inverse_cdf(p),
        }
    }

    /// Analytic CDF `P(X <= y)`.
    pub fn cdf(&self, y: f64) -> f64 {
        let z = (y - self.offset) / self.scale;
        if self.scale > 0.0 {
            self.base_cdf(z)
        } else {
            1.0 - self.base_cdf(z)
        }
    }

    /// Analytic quantile for `p` in `[0, 1]`.
    pub fn quantile(&self, p: f64) -> Result<f64> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability(p));
        }
        let base = if self.scale > 0.0 { self.base_quantile(p) } else { self.base_quantile(1.0 - p) };
        Ok(base * self.scale + self.offset)
    }

    /// Draws one value.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> f64 {
        let base = match self.family {
            Family::Uniform { lower, upper } => lower + (upper - lower) * rng.random::<f64>(),
            Family::Gaussian { mean, variance } => rand_distr::Normal::new(mean, variance.sqrt())
                .expect("validated at construction")
                .sample(rng),
            Family::Beta { alpha, beta } => rand_distr::Beta::new(alpha, beta)
                .expect("validated at construction")
                .sample(rng),
        };
        base * self.scale + self.offset
    }

    /// Draws `n` values in draw order.
    pub fn sample_n<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<f64> {
        match self.family {
            // Build the sampler once for the bulk path.
            Family::Gaussian { mean, variance } => {
                let d = rand_distr::Normal::new(mean, variance.sqrt()).expect("validated at construction");
                (0..n).map(|_| d.sample(rng) * self.scale + self.offset).collect()
            }
            Family::Beta { alpha, beta } => {
                let d = rand_distr::Beta::new(alpha, beta).expect("validated at construction");
                (0..n).map(|_| d.sample(rng) * self.scale + self.offset).collect()
            }
            Family::Uniform { .. } => (0..n).map(|_| self.sample(rng)).collect(),
        }
    }
}

fn normal(mean: f64, variance: f64) -> Normal {
    Normal::new(mean, variance.sqrt()).expect("validated at construction")
}

fn beta_dist(alpha: f64, beta: f64) -> Beta {
    Beta::new(alpha, beta).expect("validated at construction")
}

impl fmt::Display for DistributionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::Uniform { lower, upper } => write!(f, "uniform({lower},{upper})")?,
            Family::Gaussian { mean, variance } => write!(f, "gaussian({mean},{variance})")?,
            Family::Beta { alpha, beta } => write!(f, "beta({alpha},{beta})")?,
        }
        if self.scale != 1.0 || self.offset != 0.0 {
            write!(f, "*{}", self.scale)?;
            if self.offset < 0.0 {
                write!(f, "{}", self.offset)?;
            } else {
                write!(f, "+{}", self.offset)?;
            }
        }
        Ok(())
    }
}

impl FromStr for DistributionSpec {
    type Err = Error;

    /// Parses `uniform(a,b)`, `gaussian(mu,var)` or `beta(alpha,beta)`,
    /// optionally followed by `*scale`, `+offset` / `-offset`, or both.
    fn from_str(s: &str) -> Result<Self> {
        let err = |msg: &str| Error::parse(1, format!("{msg} in `{s}`"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let open = compact.find('(').ok_or_else(|| err("missing `(`"))?;
        let close = compact.find(')').ok_or_else(|| err("missing `)`"))?;
        if close < open {
            return Err(err("unbalanced parentheses"));
        }
        let name = compact[..open].to_ascii_lowercase();
        let args: Vec<f64> = compact[open + 1..close]
            .split(',')
            .map(|a| parse_finite(a).ok_or_else(|| err("bad parameter")))
            .collect::<Result<_>>()?;
        if args.len() != 2 {
            return Err(err("expected two parameters"));
        }
        let family = match name.as_str() {
            "uniform" => Family::Uniform { lower: args[0], upper: args[1] },
            "gaussian" | "normal" => Family::Gaussian { mean: args[0], variance: args[1] },
            "beta" => Family::Beta { alpha: args[0], beta: args[1] },
            _ => return Err(err("unknown family")),
        };

        let mut rest = &compact[close + 1..];
        let mut scale = 1.0;
        let mut offset = 0.0;
        if let Some(r) = rest.strip_prefix('*') {
            let end = number_end(r);
            scale = parse_finite(&r[..end]).ok_or_else(|| err("bad scale"))?;
            rest = &r[end..];
        }
        if let Some(r) = rest.strip_prefix('+') {
            offset = parse_finite(r).ok_or_else(|| err("bad offset"))?;
            rest = "";
        } else if rest.starts_with('-') {
            offset = parse_finite(rest).ok_or_else(|| err("bad offset"))?;
            rest = "";
        }
        if !rest.is_empty() {
            return Err(err("trailing characters"));
        }
        DistributionSpec::with_affine(family, scale, offset)
    }
}

fn parse_finite(s: &str) -> Option<f64> {
    s.parse::<f64>().ok().filter(|v| v.is_finite())
}

/// Length of the leading numeric literal (sign, digits, point, exponent).
fn number_end(s: &str) -> usize {
    let b = s.as_bytes();
    let mut i = 0;
    if i < b.len() && (b[i] == b'-' || b[i] == b'+') {
        i += 1;
    }
    while i < b.len() {
        let c = b[i];
        let exp_sign = (c == b'-' || c == b'+') && i > 0 && (b[i - 1] == b'e' || b[i - 1] == b'E');
        if c.is_ascii_digit() || c == b'.' || c == b'e' || c == b'E' || exp_sign {
            i += 1;
        } else {
            break;
        }
    }
    i
}
