use std::time::Instant;
use tilecensus_core::enumerate::naive_face_count_stats;
use tilecensus_core::map::{Profile, TilingKind};

fn main() {
    // Worst-case square profiles at the f=6 oracle edge, plus triangle f=6.
    let cases: Vec<(TilingKind, Vec<i64>, usize)> = vec![
        (TilingKind::Square, vec![8], 6),
        (TilingKind::Square, vec![7, 1], 6),
        (TilingKind::Square, vec![2, -2], 6),
        (TilingKind::Square, vec![3, -3], 6),
        (TilingKind::Square, vec![4, -4], 5),
        (TilingKind::Square, vec![4, 4], 6),
        (TilingKind::Triangle, vec![5, -5], 6),
        (TilingKind::Triangle, vec![12], 6),
        (TilingKind::Triangle, vec![6, 6], 6),
    ];
    for (kind, entries, f) in cases {
        let profile = Profile::new(kind, entries.clone());
        let t0 = Instant::now();
        let stats = naive_face_count_stats(kind, &profile, f);
        println!(
            "{:?} {:?} f={}: {:?} elapsed={:?}",
            kind, entries, f, stats, t0.elapsed()
        );
    }
}
