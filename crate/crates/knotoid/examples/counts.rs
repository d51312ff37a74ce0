use std::collections::HashSet;

use knotoid::embed;
use knotoid::enumerate::{count_realizable, for_each_code, Surface};
use knotoid::gauss::OrientedGaussCode;

// Independent face count: walk corners of the rotation system directly on
// edge-ends, written without DiagramMap.
fn euler_faces_independent(code: &OrientedGaussCode) -> usize {
    use knotoid::gauss::{Passage, Sign};
    let n = code.crossings();
    let arcs = 2 * n + 1;
    let mut next_ccw = vec![usize::MAX; arcs * 2];
    let src = |e: usize| e * 2;
    let tgt = |e: usize| e * 2 + 1;
    next_ccw[src(0)] = src(0);
    next_ccw[tgt(arcs - 1)] = tgt(arcs - 1);
    let mut over = vec![0usize; n + 1];
    let mut under = vec![0usize; n + 1];
    for (i, v) in code.word.iter().enumerate() {
        match v.passage {
            Passage::Over => over[v.label as usize] = i + 1,
            Passage::Under => under[v.label as usize] = i + 1,
        }
    }
    for c in 1..=n {
        let (po, pu) = (over[c], under[c]);
        let ring = match code.signs[c - 1] {
            Sign::Plus => [tgt(pu - 1), src(po), src(pu), tgt(po - 1)],
            Sign::Minus => [tgt(pu - 1), tgt(po - 1), src(pu), src(po)],
        };
        for i in 0..4 {
            next_ccw[ring[i]] = ring[(i + 1) % 4];
        }
    }
    let mut seen = vec![false; arcs * 2];
    let mut faces = 0;
    for start in 0..arcs * 2 {
        if seen[start] {
            continue;
        }
        faces += 1;
        let mut end = start;
        loop {
            seen[end] = true;
            // leave via the clockwise neighbour of the arrival end
            let mut x = end;
            let mut guard = 0;
            while next_ccw[x] != end {
                x = next_ccw[x];
                guard += 1;
                assert!(guard < 8);
            }
            let e = x / 2;
            let other = if x % 2 == 0 { tgt(e) } else { src(e) };
            end = other;
            if end == start {
                break;
            }
        }
    }
    faces
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(|s| s.as_str()).unwrap_or("counts");
    match mode {
        "counts" => {
            for n in 1..=4 {
                println!("n={n} sphere: {}", count_realizable(n, Surface::Sphere));
                println!("n={n} planar: {}", count_realizable(n, Surface::Planar));
            }
        }
        "big" => {
            let t = std::time::Instant::now();
            println!("n=5 sphere: {}", count_realizable(5, Surface::Sphere));
            println!("n=5 planar: {}", count_realizable(5, Surface::Planar));
            println!("n=6 sphere: {}", count_realizable(6, Surface::Sphere));
            println!("t = {:?}", t.elapsed());
        }
        "dedup" => {
            let mut seen = HashSet::new();
            let mut total = 0u64;
            for_each_code(4, |c| {
                total += 1;
                assert!(seen.insert(c.to_string()), "duplicate code {c}");
            });
            println!("n=4 codes distinct: {total}");
            let mut words = HashSet::new();
            let mut total = 0u64;
            for_each_code(6, |c| {
                if c.signs.iter().all(|s| *s == knotoid::gauss::Sign::Minus) {
                    total += 1;
                    assert!(words.insert(c.to_string()));
                }
            });
            println!("n=6 words distinct: {total}");
        }
        "crosscheck" => {
            for n in 0..=4 {
                let mut agree = 0u64;
                for_each_code(n, |c| {
                    let mine = embed::build_rotation_system(c).face_count();
                    let ind = euler_faces_independent(c);
                    assert_eq!(mine, ind, "face count mismatch on {c}");
                    agree += 1;
                });
                println!("n={n}: {agree} codes cross-checked");
            }
        }
        other => eprintln!("unknown mode {other}"),
    }
}
