use knotoid::enumerate::{realizable_planar, realizable_sphere};
use knotoid::invariants::{
    arrow_polynomial, forget_planar, loop_arrow_polynomial_with, Typing, TYPING,
};

fn typing_variants() -> Vec<(&'static str, Typing)> {
    let mut out = Vec::new();
    for &segment_by_first_side in &[true, false] {
        for &segment_m_on_left in &[true, false] {
            for &circle_p_sink_inside in &[true, false] {
                let name = format!(
                    "seg_{}_{}_circ_{}",
                    if segment_by_first_side { "first" } else { "corr" },
                    if segment_m_on_left { "mL" } else { "mR" },
                    if circle_p_sink_inside { "pIn" } else { "pOut" }
                );
                out.push((
                    Box::leak(name.into_boxed_str()) as &'static str,
                    Typing { segment_by_first_side, segment_m_on_left, circle_p_sink_inside },
                ));
            }
        }
    }
    out
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(|s| s.as_str()).unwrap_or("rev");
    let nmax: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(3);
    match mode {
        "rev" => {
            // reversal invariance of the loop arrow per typing variant
            for (name, typing) in typing_variants() {
                let mut bad = 0u64;
                let mut total = 0u64;
                for n in 0..=nmax {
                    for code in realizable_planar(n) {
                        total += 1;
                        let p = loop_arrow_polynomial_with(&code, typing).unwrap();
                        let r = loop_arrow_polynomial_with(&code.reverse(), typing).unwrap();
                        if p != r {
                            bad += 1;
                            if bad <= 2 {
                                println!("  [{name}] rev mismatch on {code}");
                                println!("    P    = {p}");
                                println!("    Prev = {r}");
                            }
                        }
                    }
                }
                println!("[{name}] rev mismatches: {bad}/{total}");
            }
        }
        "rev-sphere" => {
            let mut bad = 0u64;
            let mut total = 0u64;
            for n in 0..=nmax {
                for code in realizable_sphere(n) {
                    total += 1;
                    let p = arrow_polynomial(&code).unwrap();
                    let r = arrow_polynomial(&code.reverse()).unwrap();
                    if p != r {
                        bad += 1;
                        if bad <= 3 {
                            println!("  rev mismatch on {code}: {p} vs {r}");
                        }
                    }
                }
            }
            println!("sphere rev mismatches: {bad}/{total}");
        }
        "invol" => {
            // record how mir / sym / rot act on values for the default typing
            let mut mir_same = 0u64;
            let mut rot_same = 0u64;
            let mut total = 0u64;
            for n in 1..=nmax {
                for code in realizable_planar(n) {
                    total += 1;
                    let p = loop_arrow_polynomial_with(&code, TYPING).unwrap();
                    let m = loop_arrow_polynomial_with(&code.mirror(), TYPING).unwrap();
                    let r = loop_arrow_polynomial_with(&code.rotate(), TYPING).unwrap();
                    if p == m {
                        mir_same += 1;
                    }
                    if p == r {
                        rot_same += 1;
                    }
                }
            }
            println!("mir fixes value: {mir_same}/{total}; rot fixes value: {rot_same}/{total}");
        }
        "forget" => {
            let mut bad = 0u64;
            let mut total = 0u64;
            for n in 0..=nmax {
                for code in realizable_planar(n) {
                    total += 1;
                    let lp = loop_arrow_polynomial_with(&code, TYPING).unwrap();
                    let ap = arrow_polynomial(&code.base).unwrap();
                    if forget_planar(&lp) != ap {
                        bad += 1;
                        if bad <= 3 {
                            println!("  forget mismatch on {code}");
                        }
                    }
                }
            }
            println!("forget mismatches: {bad}/{total}");
        }
        other => eprintln!("unknown mode {other}"),
    }
}
