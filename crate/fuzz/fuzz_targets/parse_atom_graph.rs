#![no_main]

use libfuzzer_sys::fuzz_target;
use sssp_core::io::{parse_atom_graph, write_atom_graph};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(g) = parse_atom_graph(text) {
        assert_eq!(parse_atom_graph(&write_atom_graph(&g)).as_ref(), Ok(&g));
    }
});
