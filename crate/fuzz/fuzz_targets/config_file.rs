#![no_main]

use libfuzzer_sys::fuzz_target;
use probdom_cli::config::ConfigFile;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(cfg) = ConfigFile::parse(text) {
        for name in cfg.section_names() {
            assert!(cfg.section(name).is_some());
        }
    }
});
