use std::collections::BTreeSet;

use serde_json::{json, Value};
use tess4_core::characterize::{
    alphas_betas, build_qf, construct_triangle, deltas_from_triangle, ehrhart as ehrhart_poly,
    interior_count, lattice_point_count, minimal_ell, normalized_system, orthogonal_vectors, plane_from_reps,
    simplify_deltas, DeltaSystem, PlaneLattice, PlaneSystem, RepresentationPair,
};
use tess4_core::diophantine::{
    brute_force_2a2c2, count_primitive_3d2, primitive_solutions_3d2, seed_generate, two_one_generate,
};
use tess4_core::enumerate::{
    census as census_rows, census_row, conjecture_tetrahedron, enumerate_triangles, is_minimal, seed_coverage,
};
use tess4_core::lattice::{
    admissible_d, canonical_form, complete_point, four_param_tetrahedron, four_param_triangle, generate_mn,
    solution_tetrahedron, solution_triangle, zeta_frame,
};
use tess4_core::{
    Branch, Error, QuadrupleSeed, Rational, Result, Tetrahedron, Triangle, TripleSolution, Vec4,
};

use crate::args::*;
use crate::record::{Report, Table};

pub fn execute(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Solutions(a) => solutions(a),
        Command::Count(a) => count(a),
        Command::Theorem11(a) => theorem11(a),
        Command::Param12(a) => param12(a),
        Command::Triangle(a) => triangle(a),
        Command::Complete(a) => complete(a),
        Command::Deltas(a) => deltas(a),
        Command::Construct(a) => construct(a),
        Command::Ehrhart(a) => ehrhart(a),
        Command::Census(a) => census(a),
        Command::Conjectures(a) => conjectures(a),
        Command::Orbits(a) => orbits(a),
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn triple(x: [i64; 3]) -> String {
    join(&x, ",")
}

fn odd_up_to(max: i64) -> Result<Vec<i64>> {
    if max <= 0 {
        return Err(Error::Domain(format!("bound must be positive, got {max}")));
    }
    Ok((1..=max).step_by(2).collect())
}

fn single_or_range(d: Option<i64>, max_d: Option<i64>) -> Result<(Value, Vec<i64>)> {
    match (d, max_d) {
        (Some(d), _) => Ok((json!({ "d": d }), vec![d])),
        (_, Some(m)) => Ok((json!({ "max_d": m }), odd_up_to(m)?)),
        _ => unreachable!("clap requires one of --d, --max-d"),
    }
}

fn solutions(a: &SolutionsArgs) -> Result<Report> {
    let (inputs, ds) = single_or_range(a.d, a.max_d)?;
    let mut table = Table::new(&["d", "a", "b", "c"]);
    let mut rows = Vec::new();
    for d in ds {
        let sols = primitive_solutions_3d2(d)?;
        for s in &sols {
            table.push(vec![d.to_string(), s.a.to_string(), s.b.to_string(), s.c.to_string()]);
        }
        let list: Vec<String> = sols.iter().map(|s| s.to_string()).collect();
        rows.push(json!({ "d": d, "count": sols.len(), "solutions": list }));
    }
    Ok(Report::new("solutions", inputs, json!({ "rows": rows }), table))
}

fn count(a: &CountArgs) -> Result<Report> {
    let (inputs, ds) = single_or_range(a.d, a.max_d)?;
    let mut table = Table::new(&["d", "lambda", "gamma2", "gamma3", "count", "exhaustive"]);
    let mut rows = Vec::new();
    let mut bad = Vec::new();
    for d in ds {
        let b = count_primitive_3d2(d)?;
        let exhaustive = primitive_solutions_3d2(d)?.len() as u64;
        if exhaustive != b.count {
            bad.push(d);
        }
        table.push(vec![
            d.to_string(),
            b.lambda.to_string(),
            b.gamma2.to_string(),
            b.gamma3.to_string(),
            b.count.to_string(),
            exhaustive.to_string(),
        ]);
        rows.push(json!({
            "d": d,
            "lambda": b.lambda.to_string(),
            "gamma2": b.gamma2,
            "gamma3": b.gamma3,
            "count": b.count,
            "exhaustive": exhaustive,
        }));
    }
    if !bad.is_empty() {
        return Err(Error::Internal(format!("closed-form count disagrees with enumeration at d = {bad:?}")));
    }
    Ok(Report::new("count", inputs, json!({ "rows": rows, "all_agree": true }), table))
}

fn branch_name(b: Branch) -> &'static str {
    match b {
        Branch::Plus => "plus",
        Branch::Minus => "minus",
    }
}

fn theorem11(a: &Theorem11Args) -> Result<Report> {
    if let Some(n) = a.verify_d {
        return theorem11_verify(n);
    }
    let (k, l) = (a.k.expect("clap requires --k"), a.l.expect("clap requires --l"));
    let mut table = Table::new(&["k", "l", "a", "c", "d", "branches"]);
    let mut rows = Vec::new();
    for s in two_one_generate(k, l)? {
        let names: Vec<&str> = s.branches.iter().map(|b| branch_name(*b)).collect();
        let t = s.solution;
        table.push(vec![
            k.to_string(),
            l.to_string(),
            t.a.to_string(),
            t.c.to_string(),
            t.d.to_string(),
            names.join(";"),
        ]);
        rows.push(json!({ "a": t.a, "c": t.c, "d": t.d, "primitive": t.primitive, "branches": names }));
    }
    Ok(Report::new("theorem11", json!({ "k": k, "l": l }), json!({ "solutions": rows }), table))
}

/// Solutions generated from every `(k, l)` with `2l^2 + k^2 = d`.
fn generated_for(d: i64) -> Result<BTreeSet<(i64, i64)>> {
    let mut out = BTreeSet::new();
    let mut l = 1;
    while 2 * l * l < d {
        let kk = d - 2 * l * l;
        let k = tess4_core::arith::isqrt(kk);
        if k * k == kk && k % 2 == 1 && tess4_core::arith::gcd(k, l) == 1 {
            for s in two_one_generate(k, l)? {
                out.insert((s.solution.a, s.solution.c));
            }
        }
        l += 1;
    }
    Ok(out)
}

fn theorem11_verify(n: i64) -> Result<Report> {
    if n <= 0 {
        return Err(Error::Domain(format!("--verify-d must be positive, got {n}")));
    }
    let mut table = Table::new(&["d", "exhaustive", "generated", "missing", "extra"]);
    let mut rows = Vec::new();
    let mut complete = true;
    for d in 1..=n {
        let brute: BTreeSet<(i64, i64)> = brute_force_2a2c2(d)?.iter().map(|s| (s.a, s.c)).collect();
        let generated = generated_for(d)?;
        if brute.is_empty() && generated.is_empty() {
            continue;
        }
        // The trivial solution a = c = d = 1 has no (k, l).
        let missing: Vec<String> =
            brute.difference(&generated).filter(|&&s| s != (1, 1)).map(|(a, c)| format!("{a},{c}")).collect();
        let extra: Vec<String> = generated.difference(&brute).map(|(a, c)| format!("{a},{c}")).collect();
        complete &= missing.is_empty() && extra.is_empty();
        table.push(vec![
            d.to_string(),
            brute.len().to_string(),
            generated.len().to_string(),
            missing.join(" "),
            extra.join(" "),
        ]);
        rows.push(json!({
            "d": d,
            "exhaustive": brute.len(),
            "generated": generated.len(),
            "missing": missing,
            "extra": extra,
        }));
    }
    let mut r = Report::new(
        "theorem11",
        json!({ "verify_d": n }),
        json!({ "rows": rows, "complete": complete }),
        table,
    );
    if !complete {
        r.diagnose("the (k, l) parametrization and exhaustive search disagree; see missing/extra");
    }
    Ok(r)
}

fn param12(a: &Param12Args) -> Result<Report> {
    if let Some([x, y, z, t]) = a.seed {
        let s = seed_generate(QuadrupleSeed { x, y, z, t })?;
        let prim = s.to_primitive();
        let mut table = Table::new(&["x", "y", "z", "t", "a", "b", "c", "d", "primitive", "primitive_d"]);
        table.push(vec![
            x.to_string(),
            y.to_string(),
            z.to_string(),
            t.to_string(),
            s.a.to_string(),
            s.b.to_string(),
            s.c.to_string(),
            s.d.to_string(),
            prim.map(|p| p.to_string()).unwrap_or_default(),
            prim.map(|p| p.d.to_string()).unwrap_or_default(),
        ]);
        let results = json!({
            "a": s.a,
            "b": s.b,
            "c": s.c,
            "d": s.d,
            "primitive": prim.map(|p| json!({ "solution": p.to_string(), "d": p.d })),
        });
        return Ok(Report::new("param12", json!({ "seed": triple4(a.seed.unwrap()) }), results, table));
    }
    let d_max = a.coverage.expect("clap requires --seed or --coverage");
    let rep = seed_coverage(d_max, a.margin)?;
    let mut table = Table::new(&["d", "covered", "total", "missing"]);
    let mut rows = Vec::new();
    for r in &rep.rows {
        let missing: Vec<String> = r.missing.iter().map(|m| triple(*m)).collect();
        table.push(vec![r.d.to_string(), r.covered.to_string(), r.total.to_string(), missing.join(" ")]);
        rows.push(json!({ "d": r.d, "covered": r.covered, "total": r.total, "missing": missing }));
    }
    let results = json!({
        "rows": rows,
        "covered": rep.covered(),
        "total": rep.total(),
        "complete": rep.complete(),
    });
    let mut report = Report::new("param12", json!({ "coverage": d_max, "margin": a.margin }), results, table);
    if !rep.complete() {
        report.diagnose(format!(
            "generator reached {} of {} primitive solutions with margin {}",
            rep.covered(),
            rep.total(),
            a.margin
        ));
    }
    Ok(report)
}

fn triple4(x: [i64; 4]) -> String {
    join(&x, ",")
}

fn triangle_info(t: &Triangle) -> Result<Value> {
    let (_, ds) = normalized_system(t)?;
    Ok(json!({
        "triangle": t.to_string(),
        "a": t.a.to_string(),
        "b": t.b.to_string(),
        "D": t.d,
        "L": t.l(),
        "irreducible": t.is_irreducible(),
        "admissible_D": admissible_d(t.d),
        "minimal": is_minimal(t)?,
        "k": ds.k,
        "ell": ds.ell,
        "canonical": canonical_form(t).to_string(),
    }))
}

fn info_row(t: &Triangle, info: &Value) -> Vec<String> {
    vec![
        t.a.to_string(),
        t.b.to_string(),
        t.d.to_string(),
        info["irreducible"].to_string(),
        info["minimal"].to_string(),
        info["k"].to_string(),
        info["ell"].to_string(),
        info["canonical"].as_str().unwrap_or_default().to_string(),
    ]
}

const INFO_COLUMNS: [&str; 8] = ["a", "b", "D", "irreducible", "minimal", "k", "ell", "canonical"];

fn triangle(a: &TriangleArgs) -> Result<Report> {
    let (mut inputs, mut t) = if let Some(s) = a.seed {
        (json!({ "seed": triple4(s) }), four_param_triangle(s[0], s[1], s[2], s[3])?)
    } else if let (Some(s), Some([m, n])) = (a.solution, a.mn) {
        (
            json!({ "solution": triple4(s), "mn": format!("{m},{n}") }),
            solution_triangle(s[0], s[1], s[2], s[3], m, n)?,
        )
    } else {
        let (p, q) = (a.a.expect("clap requires a source"), a.b.expect("clap requires --b"));
        (json!({ "a": p.to_string(), "b": q.to_string() }), Triangle::new(p, q)?)
    };
    if let Some([m, n]) = a.generate {
        t = generate_mn(&t, m, n)?;
        inputs["generate"] = json!(format!("{m},{n}"));
    }
    let info = triangle_info(&t)?;
    let mut table = Table::new(&INFO_COLUMNS);
    table.push(info_row(&t, &info));
    Ok(Report::new("triangle", inputs, info, table))
}

fn tetra_json(t: &Tetrahedron) -> Value {
    let pts = [Vec4::ZERO, t.a, t.b, t.c];
    let mut dists = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            dists.push((pts[i] - pts[j]).norm2());
        }
    }
    json!({
        "a": t.a.to_string(),
        "b": t.b.to_string(),
        "c": t.c.to_string(),
        "D": t.d,
        "squared_edges": dists,
        "regular": dists.iter().all(|&x| x == t.d),
    })
}

fn complete(a: &CompleteArgs) -> Result<Report> {
    let (inputs, tet, frame) = if let Some(s) = a.seed {
        (json!({ "seed": triple4(s) }), four_param_tetrahedron(s[0], s[1], s[2], s[3])?, None)
    } else if let (Some(s), Some([m, n])) = (a.solution, a.mn) {
        let tet = solution_tetrahedron(s[0], s[1], s[2], s[3], m, n)?;
        let p = TripleSolution::new(s[0], s[1], s[2], s[3])?;
        let g = tess4_core::arith::gcd_all(&p.abc());
        let f = zeta_frame(s[0] / g, s[1] / g, s[2] / g, s[3] / g)?;
        let frame = json!({
            "zeta": triple(f.zeta),
            "sigma": triple(f.sigma),
            "eta": triple(f.eta),
            "r": f.r,
            "s": f.s,
            "q": f.q,
        });
        (json!({ "solution": triple4(s), "mn": format!("{m},{n}") }), tet, Some(frame))
    } else {
        let p = a.point.expect("clap requires a source");
        (json!({ "point": p.to_string() }), complete_point(p)?, None)
    };
    let mut results = tetra_json(&tet);
    if let Some(f) = frame {
        results["frame"] = f;
    }
    let mut table = Table::new(&["a", "b", "c", "D"]);
    table.push(vec![tet.a.to_string(), tet.b.to_string(), tet.c.to_string(), tet.d.to_string()]);
    Ok(Report::new("complete", inputs, results, table))
}

fn delta_json(ds: &DeltaSystem) -> Value {
    json!({
        "d12": ds.d12,
        "d34": ds.d34,
        "d13": ds.d13,
        "d24": ds.d24,
        "d14": ds.d14,
        "d23": ds.d23,
        "L": ds.big_l,
        "k": ds.k,
        "ell": ds.ell,
    })
}

/// The six minors and `k` of a plane given by representations, where the
/// scale split is not yet known.
fn minors_json(ds: &DeltaSystem) -> Value {
    json!({
        "d12": ds.d12,
        "d34": ds.d34,
        "d13": ds.d13,
        "d24": ds.d24,
        "d14": ds.d14,
        "d23": ds.d23,
        "k": ds.k,
    })
}

fn lattice_json(pl: &PlaneLattice) -> Value {
    json!({
        "basis": [pl.b1.to_string(), pl.b2.to_string()],
        "gram": pl.gram,
        "covolume_squared": pl.det(),
    })
}

fn gram_json(ds: &DeltaSystem) -> Result<Value> {
    let (v, w) = orthogonal_vectors(ds)?;
    let gram = v.norm2() * w.norm2() - v.dot(w) * v.dot(w);
    Ok(json!({
        "v": v.to_string(),
        "w": w.to_string(),
        "determinant": gram,
        "expected": 48 * ds.k * ds.k * ds.d23 * ds.d23,
    }))
}

fn deltas(a: &PairArgs) -> Result<Report> {
    let t = Triangle::new(a.a, a.b)?;
    let raw = deltas_from_triangle(&t)?;
    let simple = simplify_deltas(&raw)?;
    let (img, ds) = normalized_system(&t)?;
    let (alpha, beta) = alphas_betas(&ds)?;
    let reps = RepresentationPair::from_deltas(&ds)?;
    let ps = PlaneSystem::from_deltas(ds)?;
    let pl = PlaneLattice::of_triangle(&t)?;
    let results = json!({
        "triangle": t.to_string(),
        "D": t.d,
        "raw": delta_json(&raw),
        "simplified": delta_json(&simple),
        "bilinear": raw.plucker(),
        "sum_of_squares": raw.sum_sq(),
        "normalized": {
            "triangle": img.to_string(),
            "deltas": delta_json(&ds),
            "alpha": triple(alpha),
            "beta": triple(beta),
            "gram": gram_json(&ds)?,
            "representations": [triple(reps.rep1), triple(reps.rep2)],
            "plane_rows": [ps.rows[0].to_string(), ps.rows[1].to_string()],
        },
        "lattice": lattice_json(&pl),
        "minimal": is_minimal(&t)?,
    });
    let mut table = Table::new(&["d12", "d34", "d13", "d24", "d14", "d23", "L", "k", "ell"]);
    for s in [&raw, &simple] {
        let mut row: Vec<String> = s.values().iter().map(|x| x.to_string()).collect();
        row.extend([s.big_l, s.k, s.ell].map(|x| x.to_string()));
        table.push(row);
    }
    let inputs = json!({ "a": a.a.to_string(), "b": a.b.to_string() });
    Ok(Report::new("deltas", inputs, results, table))
}

fn construct(a: &ConstructArgs) -> Result<Report> {
    let reps = RepresentationPair::new(a.rep1, a.rep2, a.k)?;
    let ps = plane_from_reps(&reps)?;
    let qf = build_qf(&ps)?;
    let c = match a.ell {
        Some(ell) => {
            let (v, w) = match a.vw {
                Some([v, w]) => (v, w),
                None => *qf.critical_solutions(ell)?.first().ok_or_else(|| {
                    Error::NotFound(format!("the critical equation has no solutions at ell={ell}"))
                })?,
            };
            construct_triangle(&ps, ell, v, w)?
        }
        None => minimal_ell(&ps)?,
    };
    let t = c.triangle;
    let pl = PlaneLattice::of_triangle(&t)?;
    let results = json!({
        "deltas": minors_json(&ps.delta),
        "plane_rows": [ps.rows[0].to_string(), ps.rows[1].to_string()],
        "quadratic_form": {
            "qa": qf.qa,
            "qb": qf.qb,
            "qc": qf.qc,
            "v0": qf.v0,
            "w0": qf.w0,
            "discriminant": qf.disc,
        },
        "gram": gram_json(&ps.delta)?,
        "ell": c.ell,
        "L": a.k * c.ell,
        "D": t.d,
        "vw": [c.vw.0, c.vw.1],
        "partner": [c.vw_partner.0, c.vw_partner.1],
        "triangle": t.to_string(),
        "canonical": canonical_form(&t).to_string(),
        "minimal": is_minimal(&t)?,
        "lattice": lattice_json(&pl),
    });
    let mut table = Table::new(&["k", "ell", "v", "w", "v_partner", "w_partner", "a", "b", "D"]);
    table.push(vec![
        a.k.to_string(),
        c.ell.to_string(),
        c.vw.0.to_string(),
        c.vw.1.to_string(),
        c.vw_partner.0.to_string(),
        c.vw_partner.1.to_string(),
        t.a.to_string(),
        t.b.to_string(),
        t.d.to_string(),
    ]);
    let mut inputs = json!({ "k": a.k, "rep1": triple(a.rep1), "rep2": triple(a.rep2) });
    if let Some(ell) = a.ell {
        inputs["ell"] = json!(ell);
    }
    if let Some([v, w]) = a.vw {
        inputs["vw"] = json!(format!("{v},{w}"));
    }
    Ok(Report::new("construct", inputs, results, table))
}

fn parse_coefficients(s: &str) -> Result<[Rational; 3]> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::Domain(format!("--expect needs three coefficients c2,c1,c0, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let mut out = [Rational::from_integer(0); 3];
    for (o, p) in out.iter_mut().zip(parts) {
        *o = p.parse().map_err(|_| bad())?;
    }
    Ok(out)
}

fn ehrhart(a: &EhrhartArgs) -> Result<Report> {
    if a.max_t < 1 {
        return Err(Error::Domain(format!("--max-t must be positive, got {}", a.max_t)));
    }
    let expect = a.expect.as_deref().map(parse_coefficients).transpose()?;
    let t = Triangle::new(a.a, a.b)?;
    let poly = ehrhart_poly(&t)?;
    let pl = PlaneLattice::of_triangle(&t)?;
    let mut table = Table::new(&["t", "points", "interior", "polynomial"]);
    let mut counts = Vec::new();
    for s in 1..=a.max_t {
        let (n, i) = (lattice_point_count(&t, s)?, interior_count(&t, s)?);
        table.push(vec![s.to_string(), n.to_string(), i.to_string(), poly.eval(s).to_string()]);
        counts.push(json!({ "t": s, "points": n, "interior": i }));
    }
    let coeffs: Vec<String> = poly.coefficients().iter().map(|c| c.to_string()).collect();
    let results = json!({
        "triangle": t.to_string(),
        "D": t.d,
        "coefficients": coeffs,
        "polynomial": poly.to_string(),
        "boundary_points": t.a.content() + t.b.content() + (t.a - t.b).content(),
        "counts": counts,
        "lattice": lattice_json(&pl),
    });
    let mut inputs = json!({ "a": a.a.to_string(), "b": a.b.to_string(), "max_t": a.max_t });
    if let Some(s) = &a.expect {
        inputs["expect"] = json!(s);
    }
    let mut r = Report::new("ehrhart", inputs, results, table);
    if let Some(e) = expect {
        if e != poly.coefficients() {
            let ref_at_1 = e[0] + e[1] + e[2];
            r.diagnose(format!(
                "reference polynomial {} t^2 + {} t + {} disagrees with direct counting {poly}: \
                 it predicts {ref_at_1} points at t = 1, counted {}",
                e[0],
                e[1],
                e[2],
                lattice_point_count(&t, 1)?
            ));
        }
    }
    Ok(r)
}

fn census(a: &CensusArgs) -> Result<Report> {
    let (inputs, rows) = match (a.max_l, a.l) {
        (Some(m), _) => (json!({ "max_L": m }), census_rows(m)?),
        (_, Some(l)) => (json!({ "L": l }), vec![census_row(l)?]),
        _ => unreachable!("clap requires one of --max-L, --L"),
    };
    let mut table = Table::new(&["L", "count", "k", "triangles"]);
    let mut out = Vec::new();
    for r in &rows {
        let tris: Vec<String> = r.triangles.iter().map(|t| t.to_string()).collect();
        table.push(vec![r.l.to_string(), r.count.to_string(), join(&r.kvalues, ";"), tris.join(" ")]);
        out.push(json!({ "L": r.l, "count": r.count, "k": r.kvalues, "triangles": tris }));
    }
    Ok(Report::new("census", inputs, json!({ "rows": out }), table))
}

fn conjectures(a: &ConjecturesArgs) -> Result<Report> {
    let rep = conjecture_tetrahedron(a.max_l)?;
    let mut table = Table::new(&["harness", "bound", "tested", "passed", "failed"]);
    table.push(vec![
        "tetrahedron".into(),
        a.max_l.to_string(),
        rep.tested.to_string(),
        rep.witnesses.to_string(),
        rep.counterexamples.len().to_string(),
    ]);
    let ce: Vec<String> = rep.counterexamples.iter().map(|t| t.to_string()).collect();
    let mut results = json!({
        "tetrahedron": {
            "max_L": a.max_l,
            "tested": rep.tested,
            "witnesses": rep.witnesses,
            "counterexamples": ce,
        }
    });
    let mut inputs = json!({ "max_L": a.max_l });
    let mut notes = Vec::new();
    if !ce.is_empty() {
        notes.push(format!("{} triangle(s) without a fourth vertex", ce.len()));
    }
    if let Some(d_max) = a.coverage_d {
        let cov = seed_coverage(d_max, a.margin)?;
        let missing: Vec<Value> = cov
            .rows
            .iter()
            .filter(|r| !r.missing.is_empty())
            .map(|r| json!({ "d": r.d, "missing": r.missing.iter().map(|m| triple(*m)).collect::<Vec<_>>() }))
            .collect();
        table.push(vec![
            "coverage".into(),
            d_max.to_string(),
            cov.total().to_string(),
            cov.covered().to_string(),
            (cov.total() - cov.covered()).to_string(),
        ]);
        results["coverage"] = json!({
            "max_d": d_max,
            "margin": a.margin,
            "covered": cov.covered(),
            "total": cov.total(),
            "complete": cov.complete(),
            "missing": missing,
        });
        inputs["coverage_d"] = json!(d_max);
        inputs["margin"] = json!(a.margin);
        if !cov.complete() {
            notes.push(format!(
                "generator coverage {}/{} at margin {}",
                cov.covered(),
                cov.total(),
                a.margin
            ));
        }
    }
    let mut r = Report::new("conjectures", inputs, results, table);
    for n in notes {
        r.diagnose(n);
    }
    Ok(r)
}

fn orbits(a: &OrbitsArgs) -> Result<Report> {
    let tris = enumerate_triangles(a.l)?;
    let mut table = Table::new(&["triangle", "irreducible", "minimal"]);
    let mut reps = Vec::new();
    let mut irreducible = 0;
    for t in &tris {
        let irr = t.is_irreducible();
        let min = is_minimal(t)?;
        irreducible += usize::from(irr);
        table.push(vec![t.to_string(), irr.to_string(), min.to_string()]);
        reps.push(json!({ "triangle": t.to_string(), "irreducible": irr, "minimal": min }));
    }
    let results = json!({
        "L": a.l,
        "total": tris.len(),
        "irreducible": irreducible,
        "representatives": reps,
    });
    Ok(Report::new("orbits", json!({ "L": a.l }), results, table))
}
