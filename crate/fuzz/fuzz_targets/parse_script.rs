#![no_main]

use libfuzzer_sys::fuzz_target;
use sssp_minratio::{parse_script, write_script};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(edges) = parse_script(text) {
        assert_eq!(parse_script(&write_script(&edges)).as_ref(), Ok(&edges));
    }
});
