#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom::compare::Operator;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(op) = text.parse::<Operator>() {
        assert_eq!(op.to_string().parse::<Operator>().expect("display output parses"), op);
    }
});
