use qsppoly::mono_interp::*;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;
use std::time::Instant;

/// Random guard-extended node sets in the shape the pipeline produces:
/// guards at (−1, −1) and (2, ±…), interior nodes in (0, 1) with values in
/// [0, 1] and neighbor value gaps ≥ 0.05.
fn random_nodes(rng: &mut ChaCha8Rng) -> Vec<(f64, f64)> {
    let total = rng.gen_range(3..=8);
    let interior = total - 2;
    let mut xs: Vec<f64> = Vec::new();
    while xs.len() < interior {
        let c = rng.gen_range(0.0..=1.0);
        if xs.iter().all(|&x: &f64| (x - c).abs() > 0.15) {
            xs.push(c);
        }
    }
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap());
    let mut nodes = vec![(-1.0, -1.0)];
    let mut y = rng.gen_range(0.1..0.9);
    for &x in &xs {
        nodes.push((x, y));
        // Random walk with steps in ±[0.05, 0.35], reflected into [0, 1].
        let step = rng.gen_range(0.05..0.35) * if rng.gen_bool(0.5) { 1.0 } else { -1.0 };
        y += step;
        if y > 1.0 {
            y = 2.0 - y - 0.5 * step.abs();
        }
        if y < 0.0 {
            y = -y + 0.5 * step.abs();
        }
        y = y.clamp(0.0, 1.0);
    }
    let right = if rng.gen_bool(0.5) { 2.0 } else { -1.0 };
    nodes.push((2.0, right));
    nodes
}

#[test]
fn random_nodesets_interpolate() {
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let t0 = Instant::now();
    let mut fails = 0;
    let total = 200;
    for trial in 0..total {
        let nodes = random_nodes(&mut rng);
        let s = match NodeSet::new(nodes.clone()) {
            Ok(s) => s,
            Err(_) => continue,
        };
        match monotone_interpolate(&s, 1e-8) {
            Ok(q) => {
                if let Err(e) = verify_monotone_interpolant(&q, &s, 1e-8) {
                    println!("trial {trial}: verify failed: {e}; nodes {nodes:?}");
                    fails += 1;
                }
            }
            Err(e) => {
                println!("trial {trial}: {e}; nodes {nodes:?}");
                fails += 1;
            }
        }
    }
    println!("{fails} failures / {total} in {:?}", t0.elapsed());
    assert!(fails * 100 <= total, "failure rate above 1%");
}
