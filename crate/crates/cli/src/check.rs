use serde::Serialize;
use serde_json::json;
use twochar_center::{
    center_tensor, character_algebra, check_lagrangian, full_center_oracle, phi_transform, psi_transform, unit_hom_dim,
};
use twochar_charfun::{
    all_joint_inputs, conjugate_joint, day_convolution, fingerprint, fusion_table, inner_product, joint_character_of,
    left_dual, modular_s, modular_t, two_character, unit_functor, validate_class_functor, CharError, ClassFunctor,
};
use twochar_scalars::Cyclotomic;
use twochar_twogroup::{check_cocycle, Report};
use twochar_twrep::validate_rep;

use crate::table::render;
use crate::{Outcome, Workspace};

/// Result of one invariant suite.
#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub checked: usize,
    pub violations: Vec<twochar_twogroup::Violation>,
    /// Set when the suite could not run to completion for a reason that is
    /// not an invariant failure.
    pub note: Option<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn suite(name: &str, report: Report) -> SuiteResult {
    SuiteResult { name: name.into(), checked: report.checked, violations: report.violations, note: None }
}

fn expect(report: &mut Report, law: &str, witness: Vec<usize>, ok: bool, detail: impl FnOnce() -> String) {
    report.checked += 1;
    if !ok {
        report.push(law, witness, detail());
    }
}

/// Runs every module-level invariant suite on a workspace.
pub fn run_suites(ws: &Workspace) -> Vec<SuiteResult> {
    let g = ws.group.clone();
    let mut out = vec![
        suite("cocycle", check_cocycle(g.pi1(), g.pi2(), g.action(), g.cocycle())),
        suite("duality", g.check_duality()),
    ];

    let mut reps = Report::default();
    for (i, r) in ws.reps.iter().enumerate() {
        let mut rep = validate_rep(&r.rep);
        for v in &mut rep.violations {
            v.witness.insert(0, i);
        }
        reps.merge(rep);
    }
    out.push(suite("representations", reps));

    let chis: Vec<(usize, ClassFunctor)> =
        ws.reps.iter().enumerate().filter_map(|(i, r)| two_character(&r.rep).ok().map(|f| (i, f))).collect();

    let mut functors = validate_class_functor(&unit_functor(&g));
    for (i, f) in &chis {
        let mut rep = validate_class_functor(f);
        for v in &mut rep.violations {
            v.witness.insert(0, *i);
        }
        functors.merge(rep);
    }
    for (i, a) in &chis {
        for (j, b) in &chis {
            match day_convolution(a, b) {
                Ok(d) => functors.merge(validate_class_functor(&d.functor)),
                Err(e) => functors.push("day convolution", vec![*i, *j], e.to_string()),
            }
        }
    }
    out.push(suite("class functors", functors));

    let mut joint = Report::default();
    for (i, f) in &chis {
        for j in all_joint_inputs(&g) {
            let v = joint_character_of(f, j).expect("valid inputs commute");
            let w = vec![*i, j.g, j.h, j.a];
            let at = |k| joint_character_of(f, k).expect("moves preserve commuting pairs");
            expect(&mut joint, "modular S", w.clone(), at(modular_s(&g, j)) == v, || "value changes".into());
            expect(&mut joint, "modular T", w.clone(), at(modular_t(&g, j)) == v, || "value changes".into());
            expect(&mut joint, "double S", w.clone(), modular_s(&g, modular_s(&g, j)) == left_dual(&g, j), || {
                "double S is not the left dual input".into()
            });
            for k in 0..g.order() {
                let mut wk = w.clone();
                wk.push(k);
                expect(&mut joint, "conjugation", wk, at(conjugate_joint(&g, k, j)) == v, || "value changes".into());
            }
            if j.h == g.identity() && j.a == 0 {
                let d = Cyclotomic::from_integer(f.dim(j.g) as i64);
                expect(&mut joint, "dimension", w, v == d, || format!("expected {d}"));
            }
        }
    }
    out.push(suite("joint characters", joint));

    let mut structural = Report::default();
    for (i, a) in &chis {
        let op = two_character(&ws.reps[*i].rep.opposite());
        let ok = op.as_ref().is_ok_and(|op| {
            (0..g.order()).all(|x| {
                let mut expected: Vec<usize> =
                    a.value(g.inv(x)).chars.iter().map(|&c| g.pi2().char_inv(c)).collect();
                expected.sort_unstable();
                op.value(x).multiset() == expected
            })
        });
        expect(&mut structural, "op duality", vec![*i], ok, || "opposite character is not the dual".into());
        for (j, b) in &chis {
            let (ra, rb) = (&ws.reps[*i].rep, &ws.reps[*j].rep);
            let sum = ra.direct_sum(rb).map_err(CharError::from).and_then(|r| two_character(&r));
            let ok = sum.is_ok_and(|s| {
                let (fa, fb) = (fingerprint(a, true), fingerprint(b, true));
                fingerprint(&s, true) == fa.iter().zip(&fb).map(|(x, y)| x + y).collect::<Vec<_>>()
            });
            expect(&mut structural, "additivity", vec![*i, *j], ok, || "fingerprints do not add".into());
            let prod = ra.deligne_tensor(rb).map_err(CharError::from).and_then(|r| two_character(&r));
            let ok = prod.is_ok_and(|p| {
                (0..g.order()).all(|x| {
                    let mut expected: Vec<usize> = a
                        .value(x)
                        .chars
                        .iter()
                        .flat_map(|&r| b.value(x).chars.iter().map(move |&s| (r, s)))
                        .map(|(r, s)| g.pi2().char_mul(r, s))
                        .collect();
                    expected.sort_unstable();
                    p.value(x).multiset() == expected
                })
            });
            expect(&mut structural, "multiplicativity", vec![*i, *j], ok, || "pointwise product fails".into());
        }
    }
    out.push(suite("structural", structural));

    let mut fourier = Report::default();
    for (i, f) in &chis {
        let x = psi_transform(f);
        expect(&mut fourier, "round trip", vec![*i], phi_transform(&x) == *f && psi_transform(&phi_transform(&x)) == x, || {
            "transforms are not inverse".into()
        });
    }
    out.push(suite("fourier", fourier));

    let mut open_closed = Report::default();
    let mut lagrangian = Report::default();
    for (i, r) in ws.reps.iter().enumerate() {
        let pair = full_center_oracle(&r.rep).and_then(|z| character_algebra(&r.rep.opposite()).map(|c| (z, c)));
        match pair {
            Ok((z, c)) => {
                expect(&mut open_closed, "full center", vec![i], z.normalized() == c.normalized(), || {
                    "full center differs from the opposite character algebra".into()
                })
            }
            Err(e) => open_closed.push("full center", vec![i], e.to_string()),
        }
        match character_algebra(&r.rep) {
            Ok(a) => {
                let mut rep = check_lagrangian(&a).report;
                for v in &mut rep.violations {
                    v.witness.insert(0, i);
                }
                lagrangian.merge(rep);
            }
            Err(e) => lagrangian.push("character algebra", vec![i], e.to_string()),
        }
    }
    out.push(suite("open-closed duality", open_closed));
    out.push(suite("lagrangian", lagrangian));

    let mut pairing = Report::default();
    for (i, a) in &chis {
        for (j, b) in &chis {
            let ab = inner_product(a, b).map(|p| p.dim);
            let ba = inner_product(b, a).map(|p| p.dim);
            let center = center_tensor(&psi_transform(a), &psi_transform(b)).map(|t| unit_hom_dim(&t));
            let ok = matches!((&ab, &ba, &center), (Ok(x), Ok(y), Ok(z)) if x == y && x == z);
            expect(&mut pairing, "pairing", vec![*i, *j], ok, || format!("{ab:?} / {ba:?} / {center:?}"));
        }
    }
    out.push(suite("orthogonality", pairing));

    if ws.catalogue {
        let mut fusion = Report::default();
        let note = match fusion_table(&g, false) {
            Ok(t) => {
                fusion.checked += t.cells.len() * t.cells.len();
                None
            }
            Err(CharError::Ambiguous(n)) => Some(format!("skipped: {n} decompositions fit the fingerprints")),
            Err(e) => {
                fusion.push("fusion", vec![], e.to_string());
                None
            }
        };
        let mut s = suite("fusion", fusion);
        s.note = note;
        out.push(s);
    }
    out
}

pub fn check(ws: &Workspace) -> Outcome {
    let suites = run_suites(ws);
    let ok = suites.iter().all(SuiteResult::passed);
    let rows: Vec<Vec<String>> = suites
        .iter()
        .map(|s| {
            let status = if !s.passed() {
                "FAIL".to_string()
            } else if let Some(n) = &s.note {
                n.clone()
            } else {
                "ok".to_string()
            };
            let witness =
                s.violations.first().map(|v| format!("{} at {:?}: {}", v.law, v.witness, v.detail)).unwrap_or_default();
            vec![s.name.clone(), s.checked.to_string(), s.violations.len().to_string(), status, witness]
        })
        .collect();
    let header = ["suite", "checked", "violations", "status", "first witness"].map(String::from);
    let text = render(&header, &rows) + if ok { "all invariants hold\n" } else { "invariant violations found\n" };
    Outcome { text, json: json!({ "ok": ok, "suites": suites }), ok }
}
