//! End-to-end acceptance checks, one line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;
use std::time::{Duration, Instant};

use ay_coxeter::ayrep::{
    b_independence_check, build_ay_rep, check_generic, functional_search, recover_functional, verify_relations,
    CosetKind, Functional, Mode, Normalization, AYRep,
};
use ay_coxeter::bitset::BitSet;
use ay_coxeter::cells::{
    a_cell, a_cells, generalized_descent_class, is_convex, is_strongly_connected, reflection_cut, tits_convex, Cell,
};
use ay_coxeter::coxeter::perm::{element_of, parse_one_line, transposition};
use ay_coxeter::coxeter::{build_system, validate_conjugation_path, CoxeterSystem, Elem};
use ay_coxeter::induce::{induce_ay, induced_character_oracle, restrict_ay, restricted_character, ParabolicContext};
use ay_coxeter::scalars::Scalar;
use ay_coxeter::specht::{
    character_by_cycle_type, descent_class, descent_rep_in, hook_distance_vector, hook_length_count,
    matches_oracle, partitions, specht_oracle, specht_rep, specht_rep_in, syt_enumerate, tableau_cell,
    young_form_check,
};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Float comparisons (orthogonal form, SON characters, float oracle).
const TOL: f64 = 1e-9;
const SEED: u64 = 0x5eed_a11e;
/// Enumeration guard for every system built here.
const MAX_ORDER: usize = 100_000;

fn sys(label: &str) -> Arc<CoxeterSystem> {
    build_system(&label.parse().unwrap(), MAX_ORDER).unwrap()
}

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn subset_of(universe: &[Elem], mask: u64) -> Vec<Elem> {
    universe
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &w)| w)
        .collect()
}

fn all_reflection_subsets(s: &CoxeterSystem) -> Vec<BitSet> {
    let n = s.num_reflections();
    (0u64..1 << n)
        .map(|mask| BitSet::from_iter(n, (0..n).filter(|i| mask >> i & 1 == 1)))
        .collect()
}

fn random_reflection_set(s: &CoxeterSystem, rng: &mut ChaCha8Rng) -> BitSet {
    let n = s.num_reflections();
    BitSet::from_iter(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

/// On `s`, every nonempty subset is convex exactly when it is some `W_A^D`.
fn tits_exhaustive(s: &Arc<CoxeterSystem>) -> Result<usize, String> {
    let elems: Vec<Elem> = s.elements().collect();
    let mut classes: BTreeSet<Vec<Elem>> = BTreeSet::new();
    for a in all_reflection_subsets(s) {
        let members: Vec<usize> = a.iter().collect();
        for dmask in 0u64..1 << members.len() {
            let d = BitSet::from_iter(a.universe(), members.iter().enumerate().filter(|(i, _)| dmask >> i & 1 == 1).map(|(_, &t)| t));
            if let Ok(c) = generalized_descent_class(s, &a, &d) {
                classes.insert(c.members().to_vec());
            }
        }
    }
    let mut checked = 0;
    for mask in 1u64..1 << elems.len() {
        let k = subset_of(&elems, mask);
        let bfs = is_convex(s, &k).map_err(e2s)?.convex;
        let tits = tits_convex(s, &k).map_err(e2s)?;
        let is_class = classes.contains(&k);
        ensure(bfs == tits && bfs == is_class, || {
            format!("mismatch on {k:?}: geodesic {bfs}, boundary test {tits}, class {is_class}")
        })?;
        checked += 1;
    }
    Ok(checked)
}

fn criterion_1() -> Check {
    let s = sys("A4");
    let t = |i, j| transposition(&s, i, j).unwrap().idx();
    let a = BitSet::from_iter(s.num_reflections(), [t(1, 2), t(2, 3), t(4, 5), t(1, 4), t(2, 5)]);
    let w = element_of(&s, &parse_one_line("45123").unwrap()).unwrap();
    let cell = a_cell(&s, &a, w).map_err(e2s)?;
    ensure(cell.len() == 2, || format!("|K_A(45123)| = {}", cell.len()))?;
    Ok("|K_A(45123)| = 2".into())
}

fn criterion_2() -> Check {
    let a2 = tits_exhaustive(&sys("A2")).map_err(|e| format!("S3: {e}"))?;
    let i5 = tits_exhaustive(&sys("I2(5)")).map_err(|e| format!("I2(5): {e}"))?;
    let s4 = sys("A3");
    let elems: Vec<Elem> = s4.elements().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut convex_hits = 0;
    for _ in 0..500 {
        // bias towards small subsets, which are convex more often
        let p = rng.gen_range(0.02..0.5);
        let mut k: Vec<Elem> = elems.iter().copied().filter(|_| rng.gen_bool(p)).collect();
        if k.is_empty() {
            k.push(elems[rng.gen_range(0..elems.len())]);
        }
        let bfs = is_convex(&s4, &k).map_err(e2s)?.convex;
        let tits = tits_convex(&s4, &k).map_err(e2s)?;
        ensure(bfs == tits, || format!("S4 random subset {k:?}: geodesic {bfs}, boundary test {tits}"))?;
        convex_hits += usize::from(bfs);
    }
    let mut cells = 0;
    for a in all_reflection_subsets(&s4) {
        for c in a_cells(&s4, &a).map_err(e2s)? {
            let d = s4.descent_set(c.members()[0], &a).map_err(e2s)?;
            let class = generalized_descent_class(&s4, &a, &d).map_err(e2s)?;
            ensure(is_convex(&s4, c.members()).map_err(e2s)?.convex, || format!("A-cell {:?} not convex", c.members()))?;
            ensure(tits_convex(&s4, c.members()).map_err(e2s)?, || format!("A-cell {:?} fails the boundary test", c.members()))?;
            ensure(class.members() == c.members(), || format!("A-cell {:?} differs from W_A^D", c.members()))?;
            cells += 1;
        }
    }
    Ok(format!(
        "S3 {a2} subsets, I2(5) {i5} subsets, S4 500 random ({convex_hits} convex), {cells} A-cells; 0 mismatches"
    ))
}

fn criterion_3() -> Check {
    let s = sys("A3");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for _ in 0..20 {
        let a = random_reflection_set(&s, &mut rng);
        let mut by_des: HashMap<Vec<usize>, Vec<Elem>> = HashMap::new();
        for w in s.elements() {
            by_des.entry(s.descent_set(w, &a).map_err(e2s)?.iter().collect()).or_default().push(w);
        }
        let want: BTreeSet<Vec<Elem>> = by_des.into_values().collect();
        let got: BTreeSet<Vec<Elem>> = a_cells(&s, &a).map_err(e2s)?.iter().map(|c| c.members().to_vec()).collect();
        ensure(want == got, || format!("A = {:?}: cells differ from descent fibres", a.iter().collect::<Vec<_>>()))?;
    }
    Ok("20 random A ⊆ T in S4".into())
}

fn criterion_4() -> Check {
    let mut total = 0;
    for n in 3..=5usize {
        let s = sys(&format!("A{}", n - 1));
        let mut dims = 0u128;
        for shape in partitions(n) {
            let oracle = specht_oracle(&shape).map_err(e2s)?;
            let tabs = syt_enumerate(&shape).map_err(e2s)?;
            ensure(tabs.len() as u128 == hook_length_count(&shape), || format!("{shape}: SYT count"))?;
            dims += oracle.dimension * oracle.dimension;
            for q in &tabs {
                let cell = tableau_cell(&s, q).map_err(e2s)?;
                let f = hook_distance_vector(q).map_err(e2s)?;
                ensure(check_generic(&cell, &f).map_err(e2s)?.generic, || format!("{q}: f_Q not generic"))?;
                let rep = specht_rep(&s, q).map_err(e2s)?;
                ensure(verify_relations(&rep).passed(), || format!("{q}: relations fail"))?;
                ensure(rep.dim() as u128 == oracle.dimension, || format!("{q}: dimension {}", rep.dim()))?;
                let table = character_by_cycle_type(&rep).map_err(e2s)?;
                ensure(matches_oracle(&table, &oracle, TOL), || format!("{q}: character differs from the oracle"))?;
                total += 1;
            }
        }
        let fact: u128 = (1..=n as u128).product();
        ensure(dims == fact, || format!("n = {n}: Σ dim² = {dims}"))?;
    }
    Ok(format!("{total} tableaux for n = 3, 4, 5"))
}

fn descent_reps(s: &Arc<CoxeterSystem>, mode: Mode) -> Result<Vec<AYRep>, String> {
    let mut seen: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut out = Vec::new();
    for w in s.elements() {
        let cell = descent_class(s, w).map_err(e2s)?;
        if seen.insert(cell.members().to_vec()) {
            out.push(descent_rep_in(s, w, Normalization::Snn, mode).map_err(e2s)?);
        }
    }
    Ok(out)
}

fn specht_reps(s: &Arc<CoxeterSystem>, n: usize, mode: Mode) -> Result<Vec<AYRep>, String> {
    let mut out = Vec::new();
    for shape in partitions(n) {
        for q in syt_enumerate(&shape).map_err(e2s)? {
            out.push(specht_rep_in(s, &q, Normalization::Snn, mode).map_err(e2s)?);
        }
    }
    Ok(out)
}

fn criterion_5() -> Check {
    let mut count = 0;
    for label in ["A3", "D4"] {
        let s = sys(label);
        for rep in descent_reps(&s, Mode::Q1)? {
            let check = young_form_check(&rep).map_err(e2s)?;
            ensure(check.passed(TOL), || format!("{label} {:?}: {check:?}", rep.cell.members()))?;
            count += 1;
        }
    }
    Ok(format!("{count} descent representations of S4 and D4"))
}

fn criterion_6() -> Check {
    let s = sys("A3");
    let mut reps = descent_reps(&s, Mode::Hecke)?;
    reps.extend(specht_reps(&s, 4, Mode::Hecke)?);
    let mut mult = 0;
    for h in &reps {
        let report = verify_relations(h);
        ensure(report.passed(), || format!("{:?}: Hecke relations fail", h.cell.members()))?;
        ensure(report.cosets_hold(), || format!("{:?}: coset identity fails", h.cell.members()))?;
        mult += report.cosets_of(CosetKind::Multiplicative).count();
        let f = h.functional.clone().expect("functional-built");
        let q1 = build_ay_rep(&h.cell, &f, Normalization::Snn, Mode::Q1).map_err(e2s)?;
        let sp = h.specialize(&BigRational::one()).map_err(e2s)?;
        ensure(sp.matrices == q1.matrices, || format!("{:?}: q → 1 differs", h.cell.members()))?;
    }
    ensure(mult > 0, || "no multiplicative cosets were checked".into())?;
    Ok(format!("{} representations, {mult} multiplicative cosets", reps.len()))
}

fn criterion_7() -> Check {
    let s = sys("A3");
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    let mut done = 0;
    let mut attempts = 0;
    while done < 50 {
        attempts += 1;
        ensure(attempts < 5_000, || format!("only {done} generic samples found"))?;
        let a = random_reflection_set(&s, &mut rng);
        let cell = a_cell(&s, &a, s.identity()).map_err(e2s)?;
        let candidates = functional_search(&s, &cell, 4).map_err(e2s)?;
        if candidates.is_empty() {
            continue;
        }
        let f = &candidates[rng.gen_range(0..candidates.len())];
        for mode in [Mode::Q1, Mode::Hecke] {
            let rep = build_ay_rep(&cell, f, Normalization::Snn, mode).map_err(e2s)?;
            let got = recover_functional(&rep).map_err(e2s)?;
            ensure(&got.functional == f, || format!("{mode:?}: recovered {} for {f}", got.functional))?;
        }
        done += 1;
    }
    Ok(format!("50 functionals in both modes ({attempts} cells sampled)"))
}

fn induction_case(label: &str, j: &[usize]) -> Result<usize, String> {
    let s = sys(label);
    let ctx = ParabolicContext::new(&s, j).map_err(e2s)?;
    let p = ctx.subsystem().map_err(e2s)?.clone();
    let mut sources = descent_reps(&p, Mode::Q1)?;
    if ay_coxeter::coxeter::perm::is_type_a(&p) && p.rank() >= 2 {
        sources.extend(specht_reps(&p, p.rank() + 1, Mode::Q1)?);
    }
    for psi in &sources {
        let ind = induce_ay(&ctx, psi).map_err(|e| format!("{label} J={j:?}: {e}"))?;
        let rep = &ind.rep;
        ensure(verify_relations(rep).passed(), || format!("{label} J={j:?}: relations"))?;
        let strongly = is_strongly_connected(&rep.cell, |w, t| rep.b(t, w).is_some_and(|b| !b.is_zero()));
        ensure(strongly, || format!("{label} J={j:?}: not strongly connected"))?;
        let expected: BTreeSet<Elem> = psi
            .cell
            .members()
            .iter()
            .flat_map(|&m| ctx.reps().iter().map(move |&r| (m, r)))
            .map(|(m, r)| s.mul(ctx.embed(m), r))
            .collect();
        let got: BTreeSet<Elem> = rep.cell.members().iter().copied().collect();
        ensure(expected == got, || format!("{label} J={j:?}: cell is not D·W^J"))?;
        let oracle = induced_character_oracle(&ctx, psi).map_err(e2s)?;
        ensure(rep.character().map_err(e2s)? == oracle, || format!("{label} J={j:?}: character differs"))?;
    }
    Ok(sources.len())
}

fn criterion_8() -> Check {
    let cases: [(&str, &[usize]); 4] = [("A2", &[0]), ("A3", &[0, 2]), ("A3", &[0, 1]), ("D4", &[0, 1, 2])];
    let mut parts = Vec::new();
    for (label, j) in cases {
        let n = induction_case(label, j)?;
        parts.push(format!("{label} J={:?}: {n} sources", j.iter().map(|x| x + 1).collect::<Vec<_>>()));
    }
    Ok(parts.join("; "))
}

fn criterion_9() -> Check {
    let s = sys("A3");
    let reps = specht_reps(&s, 4, Mode::Q1)?;
    let mut pairs = 0;
    for rep in &reps {
        for mask in 0u32..8 {
            let j: Vec<usize> = (0..3).filter(|i| mask >> i & 1 == 1).collect();
            let ctx = ParabolicContext::new(&s, &j).map_err(e2s)?;
            let blocks = restrict_ay(rep, &ctx).map_err(e2s)?;
            let mut sum: Option<Vec<Scalar>> = None;
            for b in &blocks {
                if let Some(r) = &b.rep {
                    ensure(verify_relations(r).passed(), || format!("J={j:?}: block relations"))?;
                }
                let ch = b.character().map_err(e2s)?;
                sum = Some(match sum {
                    None => ch,
                    Some(acc) => acc.iter().zip(&ch).map(|(x, y)| x + y).collect(),
                });
            }
            let want = restricted_character(rep, &ctx).map_err(e2s)?;
            ensure(sum.as_ref() == Some(&want), || format!("{:?} J={j:?}: block sum differs", rep.cell.members()))?;
            pairs += 1;
        }
    }
    Ok(format!("{} Specht representations × 8 subsets J = {pairs} cases", reps.len()))
}

fn criterion_10() -> Check {
    let s = sys("A3");
    let norms = [Normalization::Snn, Normalization::Rsn, Normalization::Csn, Normalization::Son];
    let mut cells: Vec<(Cell, Functional)> = Vec::new();
    for r in descent_reps(&s, Mode::Q1)?.into_iter().chain(specht_reps(&s, 4, Mode::Q1)?) {
        cells.push((r.cell.clone(), r.functional.clone().expect("functional-built")));
    }
    let mut worst: f64 = 0.0;
    for (cell, f) in &cells {
        let check = b_independence_check(cell, f, &norms).map_err(e2s)?;
        ensure(check.equal, || format!("{:?}: exact characters differ", cell.members()))?;
        let dev = check.son_deviation.unwrap_or(f64::INFINITY);
        ensure(dev <= TOL, || format!("{:?}: SON deviation {dev:e}", cell.members()))?;
        worst = worst.max(dev);
    }
    Ok(format!("{} representations, max SON deviation {worst:.1e}", cells.len()))
}

fn criterion_11() -> Check {
    let mut paths = 0;
    for label in ["A3", "I2(5)"] {
        let s = sys(label);
        let mut by_refl: HashMap<_, Vec<(Elem, usize)>> = HashMap::new();
        for w in s.elements() {
            for g in 0..s.rank() {
                by_refl.entry(s.refl_of(w, g)).or_default().push((w, g));
            }
        }
        for pairs in by_refl.values() {
            for &from in pairs {
                for &to in pairs {
                    let path = s.conjugation_path(from, to).map_err(e2s)?;
                    validate_conjugation_path(&s, from, to, &path)
                        .map_err(|e| format!("{label} {from:?} → {to:?}: {e}"))?;
                    paths += 1;
                }
            }
        }
    }
    for label in ["A3", "B3", "D4"] {
        let s = sys(label);
        for a in 0..s.rank() {
            for b in 0..s.rank() {
                ensure(s.simple_conjugacy(a, b) == s.conjugate_by_enumeration(a, b), || {
                    format!("{label}: s{} ~ s{} disagrees", a + 1, b + 1)
                })?;
            }
        }
    }
    Ok(format!("{paths} paths in S4 and I2(5); odd-label test on A3, B3, D4"))
}

fn criterion_12() -> Check {
    let mut count = 0;
    for label in ["A3", "B3"] {
        let s = sys(label);
        for t in s.reflections() {
            let cut = reflection_cut(&s, t).map_err(e2s)?;
            ensure(cut.components.len() == 2, || format!("{label}: {} components", cut.components.len()))?;
            let sizes: usize = cut.components.iter().map(Vec::len).sum();
            ensure(sizes == s.order(), || format!("{label}: components miss elements"))?;
            let side: HashMap<Elem, usize> = cut
                .components
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.iter().map(move |&w| (w, i)))
                .collect();
            ensure(cut.cut_edges.iter().all(|(u, v)| side[u] != side[v]), || format!("{label}: cut edge inside a component"))?;
            ensure(cut.is_clean_cut(), || format!("{label}: unclean cut"))?;
            count += 1;
        }
    }
    Ok(format!("{count} reflections of S4 and B3"))
}

fn main() {
    let criteria: [(u32, &str, Duration, fn() -> Check); 12] = [
        (1, "A-cell counterexample in S5", Duration::from_secs(1), criterion_1),
        (2, "convex ⟺ generalized descent class", Duration::from_secs(30), criterion_2),
        (3, "A-cells are descent fibres", Duration::from_secs(30), criterion_3),
        (4, "Specht realization", Duration::from_secs(60), criterion_4),
        (5, "orthogonal form of descent representations", Duration::from_secs(30), criterion_5),
        (6, "Hecke q-analogue", Duration::from_secs(30), criterion_6),
        (7, "functional recovery", Duration::from_secs(60), criterion_7),
        (8, "induction from parabolics", Duration::from_secs(60), criterion_8),
        (9, "restriction to parabolics", Duration::from_secs(30), criterion_9),
        (10, "b-independence of characters", Duration::from_secs(30), criterion_10),
        (11, "conjugation paths and odd-label conjugacy", Duration::from_secs(30), criterion_11),
        (12, "reflection cuts", Duration::from_secs(30), criterion_12),
    ];
    let mut failed = 0;
    for (id, name, budget, run) in criteria {
        let start = Instant::now();
        let result = run();
        let took = start.elapsed();
        let (status, detail) = match result {
            Ok(d) if took <= budget => ("PASS", d),
            Ok(d) => ("FAIL", format!("{d}; took {took:.2?} over the {budget:?} budget")),
            Err(e) => ("FAIL", e),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {status} [{:>8.2?}] {name}: {detail}", took);
    }
    println!("acceptance: {} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
