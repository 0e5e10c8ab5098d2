//! Per-generation population snapshots and their CSV form.

use std::fmt::Write as _;

use crate::error::{Error, Result};

/// One individual as recorded at the end of a generation.
#[derive(Debug, Clone, PartialEq)]
pub struct SnapshotEntry {
    pub id: usize,
    pub x: Vec<f64>,
    pub mean: Vec<f64>,
    pub min: Vec<f64>,
    pub max: Vec<f64>,
    pub rank: usize,
    pub crowding: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub gen: usize,
    pub entries: Vec<SnapshotEntry>,
}

impl Snapshot {
    /// Entries of rank 0.
    pub fn first_front(&self) -> impl Iterator<Item = &SnapshotEntry> {
        self.entries.iter().filter(|e| e.rank == 0)
    }
}

/// The outcome of one optimization run.
#[derive(Debug, Clone)]
pub struct RunRecord {
    pub n: usize,
    pub m: usize,
    pub seed: Option<u64>,
    pub snapshots: Vec<Snapshot>,
    /// Objective evaluations spent, counting every sample.
    pub evaluations: u64,
    /// Wall-clock seconds per generation. Not serialized.
    pub generation_secs: Vec<f64>,
}

impl PartialEq for RunRecord {
    fn eq(&self, other: &Self) -> bool {
        (self.n, self.m, self.seed, &self.snapshots, self.evaluations)
            == (other.n, other.m, other.seed, &other.snapshots, other.evaluations)
    }
}

impl RunRecord {
    pub fn header(n: usize, m: usize) -> String {
        let mut cols = vec!["gen".to_string(), "id".to_string()];
        cols.extend((1..=n).map(|i| format!("x{i}")));
        for prefix in ["mean_f", "min_f", "max_f"] {
            cols.extend((1..=m).map(|i| format!("{prefix}{i}")));
        }
        cols.push("rank".into());
        cols.push("crowding".into());
        cols.join(",")
    }

    pub fn final_snapshot(&self) -> Option<&Snapshot> {
        self.snapshots.last()
    }

    /// One row per (generation, individual).
    pub fn to_csv(&self) -> String {
        let mut out = Self::header(self.n, self.m);
        out.push('\n');
        for snap in &self.snapshots {
            for e in &snap.entries {
                write!(out, "{},{}", snap.gen, e.id).unwrap();
                for v in e.x.iter().chain(&e.mean).chain(&e.min).chain(&e.max) {
                    write!(out, ",{v}").unwrap();
                }
                writeln!(out, ",{},{}", e.rank, e.crowding).unwrap();
            }
        }
        out
    }

    /// Parses [`to_csv`](Self::to_csv) output. Dimensions come from the
    /// header; seed and timings are not part of the file.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let cols: Vec<&str> = header.trim().split(',').collect();
        let n = cols.iter().filter(|c| c.starts_with('x')).count();
        let m = cols.iter().filter(|c| c.starts_with("mean_f")).count();
        if m == 0 || header.trim() != Self::header(n, m) {
            return Err(Error::parse(1, "header does not match the run record schema"));
        }
        let width = cols.len();

        let mut snapshots: Vec<Snapshot> = Vec::new();
        for (i, line) in lines {
            let line_no = i + 1;
            let fields: Vec<&str> = line.trim().split(',').collect();
            if fields.len() != width {
                return Err(Error::parse(line_no, format!("expected {width} fields, got {}", fields.len())));
            }
            let int = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(line_no, format!("bad integer `{s}`")));
            let float = |s: &str| match s.parse::<f64>() {
                Ok(v) if !v.is_nan() => Ok(v),
                _ => Err(Error::parse(line_no, format!("bad number `{s}`"))),
            };
            let gen = int(fields[0])?;
            let id = int(fields[1])?;
            let nums = fields[2..2 + n + 3 * m].iter().map(|s| float(s)).collect::<Result<Vec<_>>>()?;
            let rank = int(fields[width - 2])?;
            let crowding = float(fields[width - 1])?;
            let entry = SnapshotEntry {
                id,
                x: nums[..n].to_vec(),
                mean: nums[n..n + m].to_vec(),
                min: nums[n + m..n + 2 * m].to_vec(),
                max: nums[n + 2 * m..].to_vec(),
                rank,
                crowding,
            };
            match snapshots.last_mut() {
                Some(s) if s.gen == gen => s.entries.push(entry),
                Some(s) if s.gen > gen => {
                    return Err(Error::parse(line_no, format!("generation {gen} after {}", s.gen)));
                }
                _ => snapshots.push(Snapshot { gen, entries: vec![entry] }),
            }
        }
        Ok(RunRecord { n, m, seed: None, snapshots, evaluations: 0, generation_secs: Vec::new() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn record() -> RunRecord {
        let e = |id, r, c| SnapshotEntry {
            id,
            x: vec![0.1, 1.0 / 3.0],
            mean: vec![1e-300, 2.5],
            min: vec![0.0, -0.1],
            max: vec![0.2, 7.0],
            rank: r,
            crowding: c,
        };
        RunRecord {
            n: 2,
            m: 2,
            seed: None,
            snapshots: vec![
                Snapshot { gen: 1, entries: vec![e(0, 0, f64::INFINITY), e(1, 1, 0.5)] },
                Snapshot { gen: 2, entries: vec![e(0, 0, 0.1 + 0.2)] },
            ],
            evaluations: 0,
            generation_secs: vec![],
        }
    }

    #[test]
    fn header_layout() {
        assert_eq!(RunRecord::header(2, 1), "gen,id,x1,x2,mean_f1,min_f1,max_f1,rank,crowding");
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let r = record();
        let text = r.to_csv();
        let back = RunRecord::from_csv(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_csv(), text);
        assert_eq!(r.snapshots[0].first_front().count(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(RunRecord::from_csv("").is_err());
        assert!(RunRecord::from_csv("gen,id,x1\n").is_err());
        let text = record().to_csv();
        let truncated: String = text.lines().take(2).map(|l| format!("{l},9\n")).collect();
        assert!(RunRecord::from_csv(&truncated).is_err());
        let header = RunRecord::header(1, 1);
        assert!(RunRecord::from_csv(&format!("{header}\n2,0,0.5,1,1,1,0,inf\n1,0,0.5,1,1,1,0,inf\n")).is_err());
        assert!(RunRecord::from_csv(&format!("{header}\n1,0,0.5,NaN,1,1,0,inf\n")).is_err());
    }
}
