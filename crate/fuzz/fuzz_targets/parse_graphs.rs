#![no_main]

use apexforest::codec::{encode_graph6, parse_graphs};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gs) = parse_graphs(text) {
        let joined: String = gs.iter().map(|g| encode_graph6(g) + "\n").collect();
        assert_eq!(parse_graphs(&joined).unwrap(), gs);
    }
});
