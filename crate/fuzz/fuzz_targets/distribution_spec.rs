#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom::uncertain::DistributionSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = text.parse::<DistributionSpec>() {
        let again: DistributionSpec = spec.to_string().parse().expect("display output parses");
        assert_eq!(again, spec);
    }
});
