//! Arbitrary input to the text decoders: never panic, and anything accepted
//! re-encodes to the same graph.

use apexforest::codec::{
    decode_graph6, encode_graph6, parse_edge_list, parse_graphs, write_edge_list,
};
use proptest::prelude::*;

fn graph6_like() -> impl Strategy<Value = Vec<u8>> {
    prop_oneof![
        prop::collection::vec(63u8..=126, 0..40),
        prop::collection::vec(any::<u8>(), 0..40),
    ]
}

fn edge_list_like() -> impl Strategy<Value = String> {
    let line = prop_oneof![
        (0usize..12, 0usize..12).prop_map(|(a, b)| format!("{a} {b}")),
        (0usize..12).prop_map(|n| format!("n {n}")),
        Just("# note".to_string()),
        Just(String::new()),
        "[ -~]{0,8}",
    ];
    prop::collection::vec(line, 0..20).prop_map(|ls| ls.join("\n"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn graph6_decoder_is_total(data in graph6_like()) {
        if let Ok(g) = decode_graph6(&data) {
            let s = encode_graph6(&g);
            prop_assert_eq!(s.as_bytes(), &data[..]);
        }
    }

    #[test]
    fn edge_list_parser_is_total(text in edge_list_like()) {
        if let Ok(g) = parse_edge_list(&text) {
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }

    #[test]
    fn stream_parser_is_total(text in prop_oneof![edge_list_like(), "[?-~\n]{0,60}"]) {
        if let Ok(gs) = parse_graphs(&text) {
            let joined: String = gs.iter().map(|g| encode_graph6(g) + "\n").collect();
            prop_assert_eq!(parse_graphs(&joined).unwrap(), gs);
        }
    }
}
