#![no_main]

use libfuzzer_sys::fuzz_target;
use sssp_core::io::{compare_distances, parse_distances, write_distances, Verdict};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(d) = parse_distances(text) {
        let again = parse_distances(&write_distances(&d)).expect("written distances parse");
        assert_eq!(compare_distances(&d, &again), Verdict::Identical);
    }
});
