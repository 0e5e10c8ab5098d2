#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom::metrics::{front_from_csv, front_to_csv};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(front) = front_from_csv(text) {
        let _ = front_to_csv(&front);
    }
});
