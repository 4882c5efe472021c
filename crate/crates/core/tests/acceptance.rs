//! Acceptance criteria 1-9, one line each.

use std::time::Instant;

use anclass::verify::{self, Check};
use anclass::Result;

fn all_pass(checks: &[Check]) -> bool {
    checks.iter().all(|c| c.pass)
}

fn failures(checks: &[Check]) -> String {
    checks.iter().filter(|c| !c.pass).map(|c| format!("{}: {}", c.name, c.detail)).collect::<Vec<_>>().join(" | ")
}

fn criterion(id: usize, title: &str, run: impl FnOnce() -> Result<Vec<Check>>) -> bool {
    let start = Instant::now();
    let (pass, note) = match run() {
        Ok(checks) => (all_pass(&checks), failures(&checks)),
        Err(e) => (false, format!("error: {e}")),
    };
    let secs = start.elapsed().as_secs_f64();
    if pass {
        println!("criterion {id} PASS ({secs:.1}s) {title}");
    } else {
        println!("criterion {id} FAIL ({secs:.1}s) {title}: {note}");
    }
    pass
}

#[test]
fn acceptance() {
    let results = [
        criterion(1, "n-cycle products cover A_n for n in 7,9,11,13", || verify::gleason(&[7, 9, 11, 13])),
        criterion(2, "almost-derangements covered by (n) for odd n <= 11, sole exception 2,2,1 in A_5", || {
            verify::almost_derangements(&[5, 7, 9, 11])
        }),
        criterion(3, "n-cycle covering numbers 3,3,2,3,2 for n = 5..13", || verify::ancn(&[5, 7, 9, 11, 13])),
        criterion(4, "kappa parity against reality and covering numbers", || {
            verify::kappa_shadow(&[5, 6, 7, 8, 9], &[11, 13])
        }),
        criterion(5, "200 seeded constructions verified", || verify::construction(200, 42)),
        criterion(6, "character counts equal brute force", || verify::oracle_equivalence(&[5, 6, 7], &[8, 9], 500, 42)),
        criterion(7, "character tables exact for n <= 13", || verify::table_integrity(13)),
        criterion(8, "bound certificates", || {
            Ok(vec![
                verify::prop24_certificates(13, 201)?,
                verify::hook_dominance(13)?,
                verify::small_cycle_checks(42, 10_000)?,
            ])
        }),
        criterion(9, "finite shadows of the asymptotic results", || {
            let mut c = verify::split_coverage_report(&(8..=16).collect::<Vec<_>>())?;
            for n in 2..=13 {
                c.push(verify::split_character_bound(n)?);
            }
            c.push(verify::arm_divisibility(16)?);
            Ok(c)
        }),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    assert!(results.iter().all(|&p| p), "some acceptance criteria failed");
}
