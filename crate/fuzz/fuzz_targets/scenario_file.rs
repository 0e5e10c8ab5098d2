#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom_cli::scenarios::ScenarioSet;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(set) = ScenarioSet::parse(text, 1_000) {
        assert!(set.scenarios.iter().all(|s| (0.0..=1.0).contains(&s.oracle)));
    }
});
