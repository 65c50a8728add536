#![no_main]

use libfuzzer_sys::fuzz_target;
use qcd_core::format::{format_matrix, matrix_to_pairs, parse_matrix};
use qcd_core::FieldSpec;

fuzz_target!(|data: &[u8]| {
    let Some((&pick, rest)) = data.split_first() else { return };
    let Ok(s) = std::str::from_utf8(rest) else { return };
    let q = [2u64, 4, 3, 5][pick as usize % 4];
    let f = FieldSpec::of_order(q).unwrap();
    if let Ok(m) = parse_matrix(&f, s) {
        assert_eq!(parse_matrix(&f, &format_matrix(&m)).unwrap(), m);
        let _ = matrix_to_pairs(&m);
        let _ = m.rref();
    }
});
