#![no_main]

use libfuzzer_sys::fuzz_target;
use qcd_core::format::{format_field, parse_field};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(f) = parse_field(s) {
        let again = parse_field(&format_field(&f)).expect("formatted field parses");
        assert!(again.same(&f));
    }
});
