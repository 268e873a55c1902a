use std::io::Write;
use std::time::Instant;
use tilecensus_core::enumerate::{enumerate_tilings, naive_enumerate, EnumerationConfig};
use tilecensus_core::map::{Profile, TilingKind};

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let which = args.get(1).map(String::as_str).unwrap_or("all");
    let config = EnumerationConfig::default();
    let cases: Vec<(TilingKind, Vec<i64>, usize)> = vec![
        (TilingKind::Triangle, vec![-3, -3, -3, -3], 4),
        (TilingKind::Triangle, vec![-3, -3, -3, -3], 6),
        (TilingKind::Triangle, vec![1, -1], 4),
        (TilingKind::Triangle, vec![1, -1], 6),
        (TilingKind::Square, vec![-1; 8], 6),
        (TilingKind::Square, vec![1, -1], 4),
        (TilingKind::Square, vec![1, -1], 5),
        (TilingKind::Triangle, vec![-3, -3, -3, -3], 8),
        (TilingKind::Triangle, vec![1, -1], 8),
        (TilingKind::Square, vec![1, -1], 6),
        (TilingKind::Square, vec![-2, -2, -2, -2], 6),
    ];
    for (kind, entries, m_max) in cases {
        let profile = Profile::new(kind, entries.clone());
        print!("{:?} {:?} m<={}: ", kind, entries, m_max);
        std::io::stdout().flush().unwrap();
        let t0 = Instant::now();
        let fast = enumerate_tilings(kind, &profile, m_max, &config).unwrap();
        let t_fast = t0.elapsed();
        print!("classes={} fast={:?} ", fast.len(), t_fast);
        std::io::stdout().flush().unwrap();
        if which == "all" {
            let t1 = Instant::now();
            let slow = naive_enumerate(kind, &profile, m_max, &config).unwrap();
            let t_slow = t1.elapsed();
            let agree = fast.len() == slow.len()
                && fast
                    .iter()
                    .zip(slow.iter())
                    .all(|(a, b)| a.canonical_code() == b.canonical_code());
            println!("naive={:?} agree={}", t_slow, agree);
        } else {
            println!();
        }
    }
}
