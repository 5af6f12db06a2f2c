//! JSON-lines checkpoint log and the ordered parallel runner that feeds it.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{self, Write};
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::mpsc;

use rayon::prelude::*;
use thiserror::Error;

use super::Instance;
use crate::record::VerificationRecord;

#[derive(Debug, Error)]
pub enum LogError {
    #[error("log line {line} is not a record: {message}")]
    Corrupt { line: usize, message: String },
    #[error("log line {line} is truncated (no trailing newline)")]
    Truncated { line: usize },
    #[error("log line {line} records {found:?} but this sweep expects {expected:?} there")]
    Mismatch {
        line: usize,
        found: String,
        expected: Option<String>,
    },
    #[error("cannot read the log: {0}")]
    Io(#[from] io::Error),
}

/// Parses a log written by a sweep. Any unparsable line is refused with its
/// 1-based number; a final line without newline counts as truncated.
pub fn read_log(path: &Path) -> Result<Vec<VerificationRecord>, LogError> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    let lines: Vec<&str> = text.split_inclusive('\n').collect();
    for (i, raw) in lines.iter().enumerate() {
        let Some(line) = raw.strip_suffix('\n') else {
            return Err(LogError::Truncated { line: i + 1 });
        };
        let rec = VerificationRecord::from_json_line(line).map_err(|e| LogError::Corrupt {
            line: i + 1,
            message: e.to_string(),
        })?;
        out.push(rec);
    }
    Ok(out)
}

/// The log must list the first instances of the plan, in plan order.
pub(super) fn check_prefix(done: &[VerificationRecord], plan: &[Instance]) -> Result<(), LogError> {
    for (i, rec) in done.iter().enumerate() {
        let expected = plan.get(i).map(|inst| inst.id.to_string());
        let found = rec.instance_id.clone();
        if expected.as_deref() != Some(found.as_str()) {
            return Err(LogError::Mismatch {
                line: i + 1,
                found,
                expected,
            });
        }
    }
    Ok(())
}

pub(super) struct LogWriter {
    file: File,
}

impl LogWriter {
    pub(super) fn open(path: &Path, append: bool) -> io::Result<Self> {
        let file = if append {
            OpenOptions::new().append(true).open(path)?
        } else {
            File::create(path)?
        };
        Ok(LogWriter { file })
    }

    /// One write and flush per record, so an interrupted run loses at most the line in flight.
    pub(super) fn append(&mut self, rec: &VerificationRecord) -> io::Result<()> {
        let mut line = rec.to_json_line();
        line.push('\n');
        self.file.write_all(line.as_bytes())?;
        self.file.flush()
    }
}

/// Runs `work` on every item with `jobs` threads and hands results to `sink`
/// in item order. A sink error stops the run and is returned.
pub(super) fn run_ordered<T, R, E, W, S>(items: &[T], jobs: usize, work: W, mut sink: S) -> Result<(), E>
where
    T: Sync,
    R: Send,
    E: From<io::Error>,
    W: Fn(&T) -> R + Sync,
    S: FnMut(R) -> Result<(), E>,
{
    if jobs <= 1 {
        for item in items {
            sink(work(item))?;
        }
        return Ok(());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| io::Error::other(e.to_string()))?;
    let cancelled = AtomicBool::new(false);
    std::thread::scope(|scope| {
        let (tx, rx) = mpsc::channel::<(usize, R)>();
        let work = &work;
        let cancelled = &cancelled;
        scope.spawn(move || {
            pool.install(|| {
                items.par_iter().enumerate().for_each_with(tx, |tx, (i, item)| {
                    if !cancelled.load(Ordering::Relaxed) {
                        let _ = tx.send((i, work(item)));
                    }
                })
            })
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (i, r) in rx {
            pending.insert(i, r);
            while let Some(r) = pending.remove(&next) {
                if let Err(e) = sink(r) {
                    cancelled.store(true, Ordering::Relaxed);
                    return Err(e);
                }
                next += 1;
            }
        }
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::Outcome;

    fn rec(id: &str) -> VerificationRecord {
        VerificationRecord::new("t").for_instance(id).conclude(true)
    }

    #[test]
    fn ordered_runner_preserves_order() {
        let items: Vec<u64> = (0..200).collect();
        for jobs in [1, 4] {
            let mut seen = Vec::new();
            run_ordered::<_, _, io::Error, _, _>(&items, jobs, |&x| {
                // uneven work so completion order differs from item order
                std::thread::sleep(std::time::Duration::from_micros((x * 7919) % 300));
                x * x
            }, |r| {
                seen.push(r);
                Ok(())
            })
            .unwrap();
            assert_eq!(seen, items.iter().map(|x| x * x).collect::<Vec<_>>());
        }
    }

    #[test]
    fn sink_error_stops_the_run() {
        let items: Vec<u32> = (0..100).collect();
        let mut count = 0;
        let err = run_ordered(&items, 3, |&x| x, |_| {
            count += 1;
            if count == 5 {
                Err(io::Error::other("full"))
            } else {
                Ok(())
            }
        });
        assert!(err.is_err());
        assert_eq!(count, 5);
    }

    #[test]
    fn corrupt_and_truncated_logs_are_refused() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("log.jsonl");
        let good = format!("{}\n{}\n", rec("a").to_json_line(), rec("b").to_json_line());
        std::fs::write(&p, &good).unwrap();
        let back = read_log(&p).unwrap();
        assert_eq!(back.len(), 2);
        assert_eq!(back[1].outcome, Outcome::Pass);

        std::fs::write(&p, format!("{}{{\"lemma\":\n", good)).unwrap();
        assert!(matches!(read_log(&p), Err(LogError::Corrupt { line: 3, .. })));

        std::fs::write(&p, format!("{}{}", good, rec("c").to_json_line())).unwrap();
        assert!(matches!(read_log(&p), Err(LogError::Truncated { line: 3 })));

        std::fs::write(&p, "").unwrap();
        assert!(read_log(&p).unwrap().is_empty());
    }

    #[test]
    fn writer_appends_whole_lines() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("log.jsonl");
        LogWriter::open(&p, false).unwrap().append(&rec("a")).unwrap();
        LogWriter::open(&p, true).unwrap().append(&rec("b")).unwrap();
        let ids: Vec<_> = read_log(&p).unwrap().into_iter().map(|r| r.instance_id).collect();
        assert_eq!(ids, ["a", "b"]);
        LogWriter::open(&p, false).unwrap();
        assert!(read_log(&p).unwrap().is_empty());
    }
}
