use rayon::prelude::*;
use serde_json::{json, Value};
use twochar_center::{character_algebra, check_lagrangian, full_center_oracle};
use twochar_charfun::{
    canonical_joint_inputs, fusion_table, inner_product, joint_character_of, two_character, ClassFunctor,
};
use twochar_scalars::{Cyclotomic, Matrix};
use twochar_twogroup::check_cocycle;
use twochar_twrep::validate_rep;

use crate::table::render;
use crate::{CliError, Outcome, Workspace};

fn characters(ws: &Workspace) -> Result<Vec<ClassFunctor>, CliError> {
    ws.require_reps()?;
    ws.reps
        .iter()
        .map(|r| two_character(&r.rep).map_err(|e| CliError::Invalid(format!("{}: {e}", r.name))))
        .collect()
}

fn names(ws: &Workspace) -> Vec<String> {
    ws.reps.iter().map(|r| r.name.clone()).collect()
}

fn matrix_json(m: &Matrix) -> Value {
    json!(m.to_rows())
}

pub fn describe(ws: &Workspace) -> Outcome {
    let g = &ws.group;
    let cocycle = check_cocycle(g.pi1(), g.pi2(), g.action(), g.cocycle());
    let duality = g.check_duality();
    let n = g.order();
    let ev: Vec<usize> = (0..n).map(|x| g.ev(x)).collect();
    let coev: Vec<usize> = (0..n).map(|x| g.coev(x)).collect();
    let factors = g.pi2().factors().to_vec();
    let pi2_name =
        if factors.is_empty() { "trivial".to_string() } else { factors.iter().map(|f| format!("Z{f}")).collect::<Vec<_>>().join("x") };
    let ok = cocycle.is_valid() && duality.is_valid();
    let mut text = String::new();
    text += &format!("pi1 order: {n}\n");
    text += &format!("pi2: {pi2_name} (order {})\n", g.pi2().order());
    text += &format!("action: {}\n", if g.action().is_trivial() { "trivial" } else { "nontrivial" });
    text += &format!(
        "alpha: {} ({} nonzero entries); cocycle identity {} over {} quadruples\n",
        if g.cocycle().is_zero() { "zero" } else { "nonzero representative" },
        g.cocycle().entries().len(),
        if cocycle.is_valid() { "holds" } else { "FAILS" },
        cocycle.checked
    );
    text += &format!("duality: {}; ev = {ev:?}; coev = {coev:?}\n", if duality.is_valid() { "ok" } else { "FAILS" });
    text += &format!("scalar order: {}\n", g.scalar_order());
    text += &format!("catalogue irreps: {}\n", if ws.catalogue { ws.reps.len().to_string() } else { "none".into() });
    let json = json!({
        "pi1_order": n,
        "pi2_factors": factors,
        "action_trivial": g.action().is_trivial(),
        "alpha_zero": g.cocycle().is_zero(),
        "cocycle": cocycle,
        "duality": duality,
        "ev": ev,
        "coev": coev,
        "scalar_order": g.scalar_order(),
        "two_group": g.to_spec(),
    });
    Outcome { text, json, ok }
}

pub fn irreps(ws: &Workspace) -> Result<Outcome, CliError> {
    ws.require_reps()?;
    let mut ok = true;
    let rows: Vec<Vec<String>> = ws
        .reps
        .iter()
        .map(|r| {
            let report = validate_rep(&r.rep);
            ok &= report.is_valid();
            let moved: Vec<String> =
                (0..ws.group.order()).map(|g| format!("{:?}", (0..r.rep.n()).map(|i| r.rep.sigma(g, i)).collect::<Vec<_>>())).collect();
            vec![
                r.name.clone(),
                r.rep.n().to_string(),
                if report.is_valid() { "yes".into() } else { format!("no ({})", report.violations[0].law) },
                moved.join(" "),
            ]
        })
        .collect();
    let header = ["name", "simples", "valid", "permutations"].map(String::from);
    Ok(Outcome { text: render(&header, &rows), json: serde_json::to_value(ws.to_bundle()).expect("serializable"), ok })
}

pub fn chartable(ws: &Workspace) -> Result<Outcome, CliError> {
    let chis = characters(ws)?;
    let classes = ws.group.pi1().conjugacy_classes();
    let mut header = vec!["rep".to_string()];
    header.extend(classes.iter().map(|c| format!("g={} (|C|={})", c.representative, c.elements.len())));
    let mut rows = Vec::new();
    let mut jrows = Vec::new();
    for (r, f) in ws.reps.iter().zip(&chis) {
        let cells: Vec<(usize, Vec<usize>)> =
            classes.iter().map(|c| (f.dim(c.representative), f.value(c.representative).multiset())).collect();
        let mut row = vec![r.name.clone()];
        row.extend(cells.iter().map(|(d, m)| format!("{d} {m:?}")));
        rows.push(row);
        jrows.push(json!({
            "name": r.name,
            "cells": cells.iter().map(|(d, m)| json!({"dim": d, "chars": m})).collect::<Vec<_>>(),
        }));
    }
    let text = render(&header, &rows) + "cells: dimension [eigencharacters as dual-group indices]\n";
    let json = json!({
        "classes": classes.iter().map(|c| json!({"representative": c.representative, "size": c.elements.len()})).collect::<Vec<_>>(),
        "rows": jrows,
    });
    Ok(Outcome { text, json, ok: true })
}

pub fn jointtable(ws: &Workspace) -> Result<Outcome, CliError> {
    let chis = characters(ws)?;
    let inputs = canonical_joint_inputs(&ws.group);
    let values: Vec<Vec<Cyclotomic>> = inputs
        .iter()
        .map(|&j| chis.iter().map(|f| joint_character_of(f, j).expect("canonical inputs commute")).collect())
        .collect();
    let mut header = vec!["(g,h,a)".to_string()];
    header.extend(names(ws));
    let rows: Vec<Vec<String>> = inputs
        .iter()
        .zip(&values)
        .map(|(j, vs)| {
            let mut row = vec![format!("({},{},{})", j.g, j.h, j.a)];
            row.extend(vs.iter().map(|v| v.to_string()));
            row
        })
        .collect();
    let json = json!({
        "reps": names(ws),
        "inputs": inputs.iter().map(|j| [j.g, j.h, j.a]).collect::<Vec<_>>(),
        "values": values,
    });
    Ok(Outcome { text: render(&header, &rows), json, ok: true })
}

pub fn fusion(ws: &Workspace, parallel: bool) -> Result<Outcome, CliError> {
    if !ws.catalogue {
        return Err(CliError::Usage("fusion needs the catalogue irreducibles of a built-in 2-group".into()));
    }
    let table = fusion_table(&ws.group, parallel).map_err(|e| CliError::Invalid(format!("fusion: {e}")))?;
    let text = table.lines().join("\n") + "\n";
    let json = json!({ "names": table.names, "cells": table.cells, "lines": table.lines() });
    Ok(Outcome { text, json, ok: true })
}

pub fn inner_matrix(ws: &Workspace, parallel: bool) -> Result<Vec<Vec<usize>>, CliError> {
    let chis = characters(ws)?;
    let n = chis.len();
    let cell = |idx: usize| inner_product(&chis[idx / n], &chis[idx % n]).map(|p| p.dim);
    let flat: Vec<usize> = if parallel {
        (0..n * n).into_par_iter().map(cell).collect::<Result<_, _>>()
    } else {
        (0..n * n).map(cell).collect::<Result<_, _>>()
    }
    .map_err(|e| CliError::Invalid(format!("inner product: {e}")))?;
    Ok(flat.chunks(n).map(<[usize]>::to_vec).collect())
}

pub fn inner(ws: &Workspace, parallel: bool) -> Result<Outcome, CliError> {
    let m = inner_matrix(ws, parallel)?;
    let mut header = vec![String::new()];
    header.extend(names(ws));
    let rows: Vec<Vec<String>> = names(ws)
        .into_iter()
        .zip(&m)
        .map(|(name, row)| std::iter::once(name).chain(row.iter().map(usize::to_string)).collect())
        .collect();
    Ok(Outcome { text: render(&header, &rows), json: json!({ "names": names(ws), "matrix": m }), ok: true })
}

pub fn center(ws: &Workspace, irrep: &str) -> Result<Outcome, CliError> {
    let r = ws.rep(irrep)?;
    let alg = character_algebra(&r.rep).map_err(|e| CliError::Invalid(format!("{irrep}: {e}")))?;
    let report = check_lagrangian(&alg);
    let oracle = full_center_oracle(&r.rep).map_err(|e| CliError::Invalid(format!("{irrep}: {e}")))?;
    let closed = character_algebra(&r.rep.opposite()).map_err(|e| CliError::Invalid(format!("{irrep}: {e}")))?;
    let agrees = oracle.normalized() == closed.normalized();
    let x = alg.object();
    let n = ws.group.order();
    let mut text = format!("center object of the character algebra of {irrep}\n");
    let rows: Vec<Vec<String>> =
        (0..n).map(|g| vec![g.to_string(), x.dim(g).to_string(), format!("{:?}", x.grade(g).chars)]).collect();
    text += &render(&["grade", "dim", "eigencharacters"].map(String::from), &rows);
    let flags = [
        ("unit", report.unit),
        ("associativity", report.associativity),
        ("commutativity", report.commutativity),
        ("connectedness", report.connectedness),
        ("separability", report.separability),
        ("full center agrees with opposite character", agrees),
    ];
    for (name, flag) in flags {
        text += &format!("{name}: {}\n", if flag { "pass" } else { "FAIL" });
    }
    for v in &report.report.violations {
        text += &format!("  {} at {:?}: {}\n", v.law, v.witness, v.detail);
    }
    let json = json!({
        "irrep": irrep,
        "grades": (0..n).map(|g| json!({"grade": g, "dim": x.dim(g), "chars": x.grade(g).chars})).collect::<Vec<_>>(),
        "half_braiding": (0..n).flat_map(|k| (0..n).map(move |g| (k, g)))
            .map(|(k, g)| json!({"k": k, "g": g, "matrix": matrix_json(x.u(k, g))}))
            .collect::<Vec<_>>(),
        "unit": alg.unit(),
        "lagrangian": report,
        "full_center_agrees": agrees,
    });
    Ok(Outcome { text, json, ok: report.all_pass() && agrees })
}
