#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom::optimizer::RunRecord;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(record) = RunRecord::from_csv(text) {
        let _ = record.to_csv();
    }
});
