#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom::uncertain::SamplePopulation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let draws = SamplePopulation::parse_draws(text);
    if let Ok(pop) = SamplePopulation::parse_text(text) {
        assert_eq!(pop.len(), draws.expect("same input").len());
        assert!(pop.as_slice().windows(2).all(|w| w[0] <= w[1]));
    }
});
