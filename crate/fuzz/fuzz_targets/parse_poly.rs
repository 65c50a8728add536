#![no_main]

use libfuzzer_sys::fuzz_target;
use qcd_core::format::parse_poly;
use qcd_core::FieldSpec;

fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let q = [2u64, 4, 3, 9][pick as usize % 4];
    let f = FieldSpec::of_order(q).unwrap();
    if let Ok(a) = parse_poly(&f, None, s) {
        assert_eq!(a.bar().bar(), a);
    }
});
