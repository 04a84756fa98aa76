#![no_main]

use apexforest::codec::{decode_graph6, encode_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = decode_graph6(data) {
        let s = encode_graph6(&g);
        assert_eq!(decode_graph6(s.as_bytes()).unwrap(), g);
    }
});
