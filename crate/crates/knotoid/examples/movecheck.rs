use std::collections::BTreeSet;

use knotoid::embed::{build_map, build_planar_map};
use knotoid::enumerate::{realizable_planar, realizable_sphere};
use knotoid::gauss::{ExtendedGaussCode, OrientedGaussCode};
use knotoid::invariants::{arrow_polynomial, loop_arrow_polynomial};
use knotoid::moves::{apply_planar, apply_sphere, sites, MoveSite, SiteFilter};

fn sphere_checks(nmax: usize, cap: usize) {
    let mut edges = 0u64;
    let mut r2_reversible = 0u64;
    for n in 0..=nmax {
        for code in realizable_sphere(n) {
            let map = build_map(&code).unwrap();
            let p = arrow_polynomial(&code).unwrap();
            for site in sites(&code, &map, SiteFilter::all(cap), None) {
                let out = apply_sphere(&code, site);
                edges += 1;
                // every output realizable (checked inside apply), invariant preserved
                let q = arrow_polynomial(&out).unwrap();
                assert_eq!(p, q, "arrow changed: {code} --{site:?}--> {out}");
                match site {
                    MoveSite::R2Add { .. } => {
                        // some R2Remove on the output returns the input
                        let om = build_map(&out).unwrap();
                        let back: BTreeSet<String> = sites(&out, &om, SiteFilter::non_increasing(), None)
                            .into_iter()
                            .filter(|s| matches!(s, MoveSite::R2Remove { .. }))
                            .map(|s| apply_sphere(&out, s).to_string())
                            .collect();
                        assert!(
                            back.contains(&code.to_string()),
                            "R2 not reversible: {code} -> {out}"
                        );
                        r2_reversible += 1;
                    }
                    MoveSite::R1Add { .. } => {
                        let om = build_map(&out).unwrap();
                        let back: BTreeSet<String> = sites(&out, &om, SiteFilter::non_increasing(), None)
                            .into_iter()
                            .filter(|s| matches!(s, MoveSite::R1Remove { .. }))
                            .map(|s| apply_sphere(&out, s).to_string())
                            .collect();
                        assert!(back.contains(&code.to_string()), "R1 not reversible");
                    }
                    MoveSite::R3 { .. } => {
                        let mut s1: Vec<_> = code.signs.clone();
                        let mut s2: Vec<_> = out.signs.clone();
                        s1.sort_by_key(|s| s.as_int());
                        s2.sort_by_key(|s| s.as_int());
                        assert_eq!(s1, s2, "R3 must reorder signs only");
                        assert_eq!(code.crossings(), out.crossings());
                    }
                    _ => {}
                }
            }
        }
    }
    println!("sphere: {edges} move edges checked (nmax={nmax}, cap={cap}), {r2_reversible} R2 reversals");
}

fn planar_checks(nmax: usize, cap: usize) {
    let mut edges = 0u64;
    let mut two_out = 0u64;
    for n in 0..=nmax {
        for code in realizable_planar(n) {
            let (map, outer) = build_planar_map(&code).unwrap();
            let p = loop_arrow_polynomial(&code).unwrap();
            for site in sites(&code.base, &map, SiteFilter::all(cap), Some(outer)) {
                let outs = apply_planar(&code, &map, outer, site);
                match site {
                    MoveSite::R2Add { mover, .. } if map.face_of[mover] == outer => {
                        assert_eq!(outs.len(), 2, "outer push must give two diagrams");
                        two_out += 1;
                    }
                    _ => assert_eq!(outs.len(), 1, "single outcome expected for {site:?}"),
                }
                for out in outs {
                    edges += 1;
                    out.validate().unwrap();
                    // the outer list is a face (construction) and the
                    // invariant is preserved
                    build_planar_map(&out).unwrap();
                    let q = loop_arrow_polynomial(&out).unwrap();
                    assert_eq!(p, q, "loop arrow changed: {code} --{site:?}--> {out}");
                }
            }
        }
    }
    println!("planar: {edges} move edges checked (nmax={nmax}, cap={cap}), {two_out} outer pushes");
}

fn planar_reverse_checks(nmax: usize) {
    // every planar R1Add/R2Add outcome can be undone at the extended level
    let mut checked = 0u64;
    for n in 0..=nmax {
        for code in realizable_planar(n) {
            let (map, outer) = build_planar_map(&code).unwrap();
            for site in sites(&code.base, &map, SiteFilter::all(n + 2), Some(outer)) {
                if !site.is_increasing() {
                    continue;
                }
                for out in apply_planar(&code, &map, outer, site) {
                    let (om, oo) = build_planar_map(&out).unwrap();
                    let mut found = false;
                    for s in sites(&out.base, &om, SiteFilter::non_increasing(), Some(oo)) {
                        if !s.is_decreasing() {
                            continue;
                        }
                        for back in apply_planar(&out, &om, oo, s) {
                            if back == code {
                                found = true;
                            }
                        }
                    }
                    assert!(found, "planar move not reversible: {code} -> {out} via {site:?}");
                    checked += 1;
                }
            }
        }
    }
    println!("planar reversibility: {checked} additions undone (nmax={nmax})");
}

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mode = args.get(1).map(|s| s.as_str()).unwrap_or("all");
    let nmax: usize = args.get(2).map(|s| s.parse().unwrap()).unwrap_or(2);
    match mode {
        "sphere" => sphere_checks(nmax, nmax + 2),
        "planar" => planar_checks(nmax, nmax + 2),
        "reverse" => planar_reverse_checks(nmax),
        "all" => {
            sphere_checks(nmax, nmax + 2);
            planar_checks(nmax, nmax + 2);
            planar_reverse_checks(nmax);
        }
        other => eprintln!("unknown mode {other}"),
    }
}
