//! The `verify` sweep and its JSON report.

use std::collections::BTreeMap;
use std::time::Instant;

use dp3::cluster::{back_to_model1, Point, Seed, DELTA};
use dp3::contour::build_contour;
use dp3::formula::{constants, phi, z};
use dp3::laurent::LaurentPoly;
use dp3::matching::combinatorial_z;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

/// Both sides of a failed comparison, as canonical strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub expected: String,
    pub found: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check: String,
    pub model: u8,
    pub point: Point,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: Vec<String>,
    pub grid: i64,
    pub models: Vec<u8>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub checks: Vec<CheckResult>,
    /// Wall-clock milliseconds per model; only present with `--timings`,
    /// since it would break byte-identical output.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u128>>,
}

impl RunReport {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

fn result(check: &str, model: u8, point: Point, status: Status) -> CheckResult {
    CheckResult { check: check.into(), model, point, status, detail: None, counterexample: None }
}

fn compare(check: &str, m: u8, p: Point, expected: &LaurentPoly, found: &LaurentPoly) -> CheckResult {
    let mut r = result(check, m, p, Status::Pass);
    if expected != found {
        r.status = Status::Fail;
        r.counterexample =
            Some(Counterexample { expected: expected.canonical_string(), found: found.canonical_string() });
    }
    r
}

fn failure(check: &str, m: u8, p: Point, detail: String) -> CheckResult {
    let mut r = result(check, m, p, Status::Fail);
    r.detail = Some(detail);
    r
}

fn fixtures(m: u8) -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (r, p) in DELTA[m as usize - 1].into_iter().enumerate() {
        match z(m, p) {
            Ok(v) => out.push(compare("seed-variable", m, p, &LaurentPoly::var(r + 1), &v)),
            Err(e) => out.push(failure("seed-variable", m, p, e.to_string())),
        }
    }
    let back = Seed::initial(m).apply_sequence(&back_to_model1(m));
    for (r, p) in DELTA[0].into_iter().enumerate() {
        let want = constants(m).y[r].to_laurent();
        let check = match (&back, want, z(m, p)) {
            (Ok(s), Ok(w), Ok(f)) => {
                let c = compare("model1-seed", m, p, &w, &f);
                if c.status == Status::Pass {
                    compare("model1-seed", m, p, &w, &s.vars[r])
                } else {
                    c
                }
            }
            (Err(e), _, _) => failure("model1-seed", m, p, e.to_string()),
            (_, Err(e), _) | (_, _, Err(e)) => failure("model1-seed", m, p, e.to_string()),
        };
        out.push(check);
    }
    out
}

fn point_checks(m: u8, p: Point) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let [a, b, c, d, e, f] = phi(p);
    let closes = a - d == e - b && a - d == c - f && a + b + c + d + e + f == 1;
    out.push(if closes { result("phi", m, p, Status::Pass) } else { failure("phi", m, p, format!("{:?}", phi(p))) });
    let contour = match build_contour(m, phi(p)) {
        Ok(c) => c,
        Err(e) => {
            out.push(failure("oracle", m, p, e.to_string()));
            return out;
        }
    };
    if contour.self_intersecting {
        let mut r = result("oracle", m, p, Status::Skip);
        r.detail = Some("self-intersecting contour".into());
        out.push(r);
        return out;
    }
    out.push(match (z(m, p), combinatorial_z(m, p)) {
        (Ok(f), Ok(c)) => compare("oracle", m, p, &f, &c),
        (Err(e), _) | (_, Err(e)) => failure("oracle", m, p, e.to_string()),
    });
    out
}

/// Points with `|i|, |j| <= r` and `-r <= k <= r + 1`.
pub fn grid(r: i64) -> Vec<Point> {
    let mut v = Vec::new();
    for i in -r..=r {
        for j in -r..=r {
            for k in -r..=r + 1 {
                v.push((i, j, k));
            }
        }
    }
    v
}

/// Runs every model on its own thread; the report is sorted afterwards, so
/// it does not depend on scheduling.
pub fn run(command: Vec<String>, radius: i64, models: &[u8], timings: bool) -> RunReport {
    let per_model: Vec<(u8, Vec<CheckResult>, u128)> = std::thread::scope(|scope| {
        let handles: Vec<_> = models
            .iter()
            .map(|&m| {
                scope.spawn(move || {
                    let t = Instant::now();
                    let mut checks = fixtures(m);
                    for p in grid(radius) {
                        checks.extend(point_checks(m, p));
                    }
                    (m, checks, t.elapsed().as_millis())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut checks: Vec<CheckResult> = per_model.iter().flat_map(|(_, c, _)| c.iter().cloned()).collect();
    checks.sort_by(|x, y| (x.model, &x.check, x.point).cmp(&(y.model, &y.check, y.point)));
    let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
    RunReport {
        command,
        grid: radius,
        models: models.to_vec(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skip),
        timings_ms: timings.then(|| per_model.iter().map(|(m, _, t)| (format!("model{m}"), *t)).collect()),
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips_through_json() {
        let mut r = run(vec!["verify".into()], 1, &[2], true);
        r.checks.push(CheckResult {
            check: "oracle".into(),
            model: 2,
            point: (9, 9, 9),
            status: Status::Fail,
            detail: Some("made up".into()),
            counterexample: Some(Counterexample { expected: "x1".into(), found: "x2".into() }),
        });
        let text = serde_json::to_string_pretty(&r).unwrap();
        let back: RunReport = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert_eq!(serde_json::to_string_pretty(&back).unwrap(), text);
    }

    #[test]
    fn grid_shape() {
        assert_eq!(grid(1).len(), 3 * 3 * 4);
        assert_eq!(grid(3).len(), 7 * 7 * 8);
    }
}
