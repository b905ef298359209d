// Copyright 2026 The wipe-sim Authors
// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use wipe_sim::table::{p_header, ResultTable};

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e3..1e3f64,
        (-300i32..300, -1.0..1.0f64).prop_map(|(e, m)| m * 10f64.powi(e)),
        Just(0.0),
        Just(-0.0),
    ]
}

fn table() -> impl Strategy<Value = ResultTable> {
    (1usize..5, 1usize..30).prop_flat_map(|(cols, rows)| {
        (
            prop::collection::vec(1e-12..1.0f64, rows),
            prop::collection::vec(prop::collection::vec(finite(), rows), cols),
            prop::collection::vec(0.0..=1.0f64, cols),
        )
            .prop_map(|(increments, columns, ps)| {
                let axis: Vec<f64> = increments
                    .iter()
                    .scan(0.0, |acc, d| {
                        *acc += d;
                        Some(*acc)
                    })
                    .collect();
                let columns = ps.iter().map(|&p| p_header(p)).zip(columns).collect();
                ResultTable::from_columns("t", axis, columns).unwrap()
            })
    })
}

proptest! {
    #[test]
    fn csv_round_trip(t in table()) {
        let q = t.quantized();
        // Quantizing can merge neighbouring axis values; those tables are
        // not representable and are skipped.
        prop_assume!(q.rows().windows(2).all(|w| w[1][0] > w[0][0]));
        let back = ResultTable::from_csv(&t.to_csv()).unwrap();
        prop_assert_eq!(&back, &q);
        prop_assert_eq!(back.to_csv(), t.to_csv());
    }
}
