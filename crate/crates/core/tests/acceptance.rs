use cdgforge::corpus::Corpus;
use cdgforge::verify::{run_all, run_suite, to_json_lines, Suite, VerifyConfig};
use cdgforge::Fp;

fn line(n: usize, name: &str, ok: bool, detail: &str) -> bool {
    println!("criterion {n} {name}: {} ({detail})", if ok { "PASS" } else { "FAIL" });
    ok
}

fn main() {
    let corpus = Corpus::standard(Fp::new(3).unwrap()).unwrap();
    let cfg = VerifyConfig { seed: 7, ..VerifyConfig::default() };
    let mut all_ok = true;
    for (n, suite) in Suite::ALL.into_iter().enumerate() {
        let (ok, detail) = match run_suite(suite, &corpus, &cfg) {
            Ok(records) => {
                let failed: Vec<&str> = records.iter().filter(|r| !r.passed()).map(|r| r.id.as_str()).collect();
                let detail = if failed.is_empty() {
                    format!("{} records", records.len())
                } else {
                    format!("{} of {} failed: {}", failed.len(), records.len(), failed.join(", "))
                };
                (failed.is_empty() && !records.is_empty(), detail)
            }
            Err(e) => (false, e.to_string()),
        };
        all_ok &= line(n + 1, suite.name(), ok, &detail);
    }

    let a = run_all(&corpus, &cfg).map(|r| to_json_lines(&r));
    let b = run_all(&corpus, &cfg).map(|r| to_json_lines(&r));
    let same = matches!((&a, &b), (Ok(x), Ok(y)) if x == y);
    let bytes = a.as_ref().map_or(0, |s| s.len());
    all_ok &= line(9, "determinism", same, &format!("{bytes} bytes, seed 7"));

    if !all_ok {
        std::process::exit(1);
    }
}
