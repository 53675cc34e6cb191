//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use lambda_lab::compatible_pair::{build_pair, mutate_pair, IntMatrix};
use lambda_lab::coxeter::{adapted_word, is_source_sequence, HeightFunction, MoveKind, RootSystem};
use lambda_lab::ginzburg_ext::{
    d_invariant_dual, euler_comparison, lambda_comparison, regular_embed, ExtTable, RegularModel,
};
use lambda_lab::green_seq::{boxtimes_sequence, run_green};
use lambda_lab::ice_quiver::{IceQuiver, ProductKind, VertexId};
use lambda_lab::interval_quiver::{
    build_interval, linear_frozen, move_is_legal, orientation_quiver, verify_move, ExtendedWord,
};
use lambda_lab::seed_engine::{explore, LambdaSeed};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn fixture(t: &str, word: &[u32]) -> (RootSystem, ExtendedWord) {
    let rs = RootSystem::of_type(t).expect("known type");
    let w = ExtendedWord::new(&rs, word).expect("reduced word for w0");
    (rs, w)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn m(rows: &[&[i64]]) -> IntMatrix {
    IntMatrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

fn a1_chain() -> Outcome {
    let (rs, w) = fixture("A1", &[1]);
    let iqp = build_interval(&rs.diagram, &w, -1, 0).map_err(|e| e.to_string())?;
    let (pair, bhat, _) = build_pair(iqp.quiver()).map_err(|e| e.to_string())?;
    ensure(bhat == m(&[&[0, 1], &[-1, 1]]), || format!("B̂ = {:?}", bhat.to_rows()))?;
    ensure(bhat.det() == 1.into(), || "det B̂ ≠ 1".into())?;
    ensure(pair.lambda == m(&[&[0, 2], &[-2, 0]]), || format!("Λ = {:?}", pair.lambda.to_rows()))?;
    let (model, _) = regular_embed(&rs, &w, -1, 0).map_err(|e| e.to_string())?;
    let (u, f) = (0, -1);
    let want = [
        ((u, f), ExtTable::from([(0, 1)])),
        ((f, u), ExtTable::from([(-1, 1)])),
        ((f, f), ExtTable::from([(0, 1), (-1, 1)])),
        ((u, u), ExtTable::from([(0, 1)])),
    ];
    for ((s, t), table) in want {
        let got = model.ext_dims(s, t).map_err(|e| e.to_string())?;
        ensure(got == table, || format!("Ext({s},{t}) = {got:?}"))?;
    }
    let br = model.bracket(u, f).map_err(|e| e.to_string())?;
    ensure(br == 2 && br == pair.lambda.get(0, 1), || format!("[u,f] = {br}"))?;
    let chi = euler_comparison(&rs, &w, -1, 0).map_err(|e| e.to_string())?;
    ensure(chi.chi == chi.bhat_inv_t, || format!("χ = {:?}", chi.chi.to_rows()))?;
    Ok("B̂, Λ, Ext table, bracket and χ all exact".into())
}

fn pair_coherence() -> Outcome {
    let (rs, w) = fixture("A3", &[1, 2, 3, 2, 1, 2]);
    let iqp = build_interval(&rs.diagram, &w, -2, 6).map_err(|e| e.to_string())?;
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut steps = 0;
    for _ in 0..100 {
        let len = rng.gen_range(1..=8);
        let mut q = iqp.quiver().clone();
        let (mut pair, mut bhat, order) = build_pair(&q).map_err(|e| e.to_string())?;
        for _ in 0..len {
            let v = rng.gen_range(0..pair.n());
            let (p2, b2) = mutate_pair(&pair, &bhat, v).map_err(|e| format!("step {steps}: {e}"))?;
            q = q.mutate_fz(order.order[v]).map_err(|e| e.to_string())?;
            let (rebuilt, rebuilt_bhat, _) = build_pair(&q).map_err(|e| e.to_string())?;
            ensure(rebuilt == p2 && rebuilt_bhat == b2, || format!("routes differ after {steps} steps"))?;
            (pair, bhat) = (p2, b2);
            steps += 1;
        }
    }
    Ok(format!("100 sequences, {steps} mutations"))
}

/// Adapted words with their regular windows of length `2N` and `4N`.
fn regular_fixtures() -> Vec<(&'static str, Vec<u32>, i64, i64)> {
    let mut out = Vec::new();
    for (t, word) in [("A1", vec![1]), ("A2", vec![1, 2, 1]), ("A2", vec![2, 1, 2]), ("A3", vec![3, 1, 2, 3, 1, 2]), ("A3", vec![1, 2, 1, 3, 2, 1])] {
        let n = word.len() as i64;
        for k in [1, 2] {
            if 2 * k * n <= 24 {
                out.push((t, word.clone(), n - 2 * k * n + 1, n));
                out.push((t, word.clone(), 1 - 2 * k * n, 0));
            }
        }
    }
    out
}

fn lambda_equality() -> Outcome {
    let mut count = 0;
    for (t, word, a, b) in regular_fixtures() {
        let (rs, w) = fixture(t, &word);
        let c = lambda_comparison(&rs, &w, a, b).map_err(|e| e.to_string())?;
        ensure(c.homological == c.formula, || format!("{t} {word:?} [{a},{b}]"))?;
        count += 1;
    }
    Ok(format!("{count} windows"))
}

fn euler_inverse() -> Outcome {
    let mut count = 0;
    for (t, word, a, b) in regular_fixtures() {
        let (rs, w) = fixture(t, &word);
        let c = euler_comparison(&rs, &w, a, b).map_err(|e| e.to_string())?;
        ensure(c.chi == c.bhat_inv_t, || format!("{t} {word:?} [{a},{b}]"))?;
        count += 1;
    }
    Ok(format!("{count} windows"))
}

fn small_fixtures() -> Vec<(String, IceQuiver)> {
    let mut uf = IceQuiver::empty();
    uf.add_vertex(1, false);
    uf.add_vertex(2, true);
    uf.add_arrow("a", 0, 1, false);
    let mut out = vec![("u→f".to_string(), uf), ("A2".into(), IceQuiver::linear(2))];
    out.push(("Q°_4".into(), linear_frozen(4)));
    out.push(("Q°_5".into(), linear_frozen(5)));
    for (t, word, a, b) in [("A2", vec![1u32, 2, 1], -5i64, 0i64), ("A2", vec![2, 1, 2], -4, 1), ("A3", vec![3, 1, 2, 3, 1, 2], 0, 6)] {
        let (rs, w) = fixture(t, &word);
        let iqp = build_interval(&rs.diagram, &w, a, b).expect("interval");
        out.push((format!("{t} {word:?} [{a},{b}]"), iqp.quiver().clone()));
    }
    out
}

fn tropical_laws() -> Outcome {
    let mut pairs = 0;
    for (name, q) in small_fixtures() {
        let (root, _) = LambdaSeed::from_quiver(&q).map_err(|e| format!("{name}: {e}"))?;
        if root.n() > 4 {
            return Err(format!("{name} has rank {}", root.n()));
        }
        let ex = explore(&root, 5, 5000).map_err(|e| format!("{name}: {e}"))?;
        let nv = ex.variables.len();
        let picks = [0, ex.seeds.len() / 2, ex.seeds.len() - 1];
        let mut tables = Vec::new();
        for &t in &picks {
            let view = ex.express_in(t).map_err(|e| format!("{name}: {e}"))?;
            let seed = ex.seeds[t].seed.rerooted();
            let mut table = vec![vec![0i64; nv]; nv];
            for (i, row) in table.iter_mut().enumerate() {
                for (j, x) in row.iter_mut().enumerate() {
                    *x = seed.tropical_invariant(&view[i], &view[j]).map_err(|e| format!("{name}: {e}"))?;
                }
            }
            tables.push(table);
        }
        ensure(tables.windows(2).all(|p| p[0] == p[1]), || format!("{name}: seeds disagree"))?;
        for i in 0..nv {
            for j in 0..nv {
                let f = tables[0][i][j] + tables[0][j][i];
                ensure((f == 0) == ex.share_seed(i, j), || format!("{name}: F({i},{j}) = {f}"))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs over 7 fixtures"))
}

fn green_sequences() -> Outcome {
    let mut runs = 0;
    for t in ["A1", "A2", "A3", "A4", "D4"] {
        let rs = RootSystem::of_type(t).map_err(|e| e.to_string())?;
        let d = &rs.diagram;
        for xi in HeightFunction::all_orientations(d) {
            let q = orientation_quiver(d, &xi);
            let mut sources: Vec<u32> = d.vertices().collect();
            sources.sort_by_key(|&i| xi.get(i));
            ensure(is_source_sequence(d, &xi, &sources), || format!("{t}: bad source order"))?;
            let ids: Vec<VertexId> = sources.iter().map(|&i| VertexId::Int(i as i64)).collect();
            let run = run_green(&q, &ids).map_err(|e| format!("{t} {xi:?}: {e}"))?;
            let id: Vec<usize> = (0..rs.rank() as usize).collect();
            ensure(run.sigma.as_ref() == Some(&id), || format!("{t} {xi:?}: source σ = {:?}", run.sigma))?;

            let flipped = HeightFunction::new(d, xi.0.iter().map(|x| -x).collect()).map_err(|e| e.to_string())?;
            let sink_word = adapted_word(&rs, &flipped);
            ensure(rs.is_longest(&rs.from_word(&sink_word).map_err(|e| e.to_string())?), || "sink word".into())?;
            let ids: Vec<VertexId> = sink_word.iter().map(|&i| VertexId::Int(i as i64)).collect();
            let run = run_green(&q, &ids).map_err(|e| format!("{t} {xi:?}: {e}"))?;
            let star: Vec<usize> = d.vertices().map(|i| rs.star(i) as usize - 1).collect();
            ensure(run.sigma.as_ref() == Some(&star), || format!("{t} {xi:?}: sink σ = {:?}", run.sigma))?;
            runs += 2;
        }
    }
    let a3 = IceQuiver::linear(3);
    let mut a4 = IceQuiver::empty();
    for i in 1..=4 {
        a4.add_vertex(i, false);
    }
    for i in 1..4 {
        a4.add_arrow(format!("b{i}"), i, i - 1, false);
    }
    let ids = |v: &[i64]| v.iter().map(|&x| VertexId::Int(x)).collect::<Vec<_>>();
    let seq = boxtimes_sequence(&ids(&[3, 2, 1, 3, 2, 3]), &ids(&[4, 3, 2, 1]));
    ensure(seq.len() == 24, || "length".into())?;
    let q = a3.product(&a4, ProductKind::Triangle);
    let run = run_green(&q, &seq).map_err(|e| format!("A3⊠A4: {e}"))?;
    let want: Vec<usize> = (0..12).map(|k| (2 - k / 4) * 4 + k % 4).collect();
    ensure(run.sigma.as_ref() == Some(&want), || format!("A3⊠A4 σ = {:?}", run.sigma))?;
    Ok(format!("{runs} Dynkin runs plus the 24-step box sequence"))
}

fn a_independence() -> Outcome {
    let mut compared = 0;
    for (t, word) in [("A1", vec![1u32]), ("A2", vec![1, 2, 1]), ("A2", vec![2, 1, 2]), ("A3", vec![3, 1, 2, 3, 1, 2]), ("A3", vec![1, 2, 1, 3, 2, 1])] {
        let (rs, w) = fixture(t, &word);
        let n = word.len() as i64;
        for b in 0..n {
            let small = RegularModel::new(&rs, &w, b - 2 * n + 1, b).map_err(|e| e.to_string())?;
            let big = RegularModel::new(&rs, &w, b - 4 * n + 1, b).map_err(|e| e.to_string())?;
            for s in small.a..=b {
                for u in small.a..=b {
                    let x = small.ext_dims(s, u).map_err(|e| e.to_string())?;
                    let y = big.ext_dims(s, u).map_err(|e| e.to_string())?;
                    ensure(x == y, || format!("{t} {word:?} b={b} ({s},{u}): {x:?} vs {y:?}"))?;
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} shared pairs"))
}

fn moves() -> Outcome {
    let mut found = 0;
    for word in [[1u32, 2, 3, 2, 1, 2], [3, 1, 2, 3, 1, 2]] {
        let (rs, w) = fixture("A3", &word);
        for (a, b) in [(-2, 6), (-1, 6)] {
            for kind in [MoveKind::Commutation, MoveKind::Braid] {
                for s in a..=b {
                    if move_is_legal(&rs.diagram, &w, kind, s, a, b) {
                        verify_move(&rs.diagram, &w, kind, s, a, b).map_err(|e| format!("{word:?} [{a},{b}] {kind:?} at {s}: {e}"))?;
                        found += 1;
                    }
                }
            }
        }
    }
    ensure(found > 0, || "no legal positions".into())?;
    Ok(format!("{found} legal moves verified"))
}

fn headline() -> Outcome {
    let mut checked = 0;
    for (t, word, a, b) in [("A1", vec![1u32], -1i64, 0i64), ("A1", vec![1], -3, 0), ("A2", vec![1, 2, 1], -5, 0), ("A2", vec![2, 1, 2], -4, 1)] {
        let (rs, w) = fixture(t, &word);
        let (model, _) = regular_embed(&rs, &w, a, b).map_err(|e| e.to_string())?;
        let n_max = 3.max(model.ell as u32 + 1);
        let dual = d_invariant_dual(&rs, &w, a, b, n_max, 4 * model.ell + 4).map_err(|e| format!("{t} {word:?}: {e}"))?;
        for s in a..=b {
            for u in a..=b {
                let d = |x: i64, y: i64, n: u32| Ok(dual.table[&(x, y, n)]);
                let series = model.lambda_series(s, u, model.ell as u32, d).map_err(|e| e.to_string())?;
                let br = model.bracket(s, u).map_err(|e| e.to_string())?;
                ensure(series == br, || format!("{t} {word:?} ({s},{u}): series {series}, bracket {br}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} initial pairs, both routes and the series agree"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 A1 worked chain", a1_chain, Duration::from_secs(1)),
        ("2 compatible-pair mutation coherence", pair_coherence, Duration::from_secs(30)),
        ("3 Λ-matrix equality", lambda_equality, Duration::from_secs(120)),
        ("4 Euler inverse", euler_inverse, Duration::MAX),
        ("5 tropical seed-independence and F zero-law", tropical_laws, Duration::from_secs(120)),
        ("6 maximal green sequences", green_sequences, Duration::MAX),
        ("7 extension a-independence", a_independence, Duration::MAX),
        ("8 braid and commutation moves", moves, Duration::MAX),
        ("9 dual 𝔡-invariants and the Λ series", headline, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (name, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        match outcome {
            Ok(detail) if took <= budget => println!("PASS {name} ({detail}; {took:.2?})"),
            Ok(detail) => {
                failed += 1;
                println!("FAIL {name} (over budget {budget:?}: {detail}; {took:.2?})");
            }
            Err(why) => {
                failed += 1;
                println!("FAIL {name} ({why}; {took:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
