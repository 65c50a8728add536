#![no_main]

use libfuzzer_sys::fuzz_target;
use qcd_core::format::{goursat_to_json, parse_goursat_json};
use qcd_core::{primitive_idempotents, FieldSpec};

// First byte picks (q, n); the rest is the JSON document.
fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let (q, n) = [(4u64, 3usize), (5, 4), (2, 7), (3, 4)][pick as usize % 4];
    let b = primitive_idempotents(&FieldSpec::of_order(q).unwrap(), n).unwrap();
    if let Ok(d) = parse_goursat_json(&b, s) {
        assert_eq!(parse_goursat_json(&b, &goursat_to_json(&d)).unwrap(), d);
    }
});
