#![no_main]

use libfuzzer_sys::fuzz_target;
use qcd_core::format::{format_element, parse_element};
use qcd_core::FieldSpec;

// First byte picks the field, the rest is the token.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let q = [2u64, 3, 4, 5, 8, 9, 25, 27][pick as usize % 8];
    let f = FieldSpec::of_order(q).unwrap();
    if let Ok(v) = parse_element(&f, s) {
        assert!(v < f.q());
        assert_eq!(parse_element(&f, &format_element(&f, v)).unwrap(), v);
    }
});
