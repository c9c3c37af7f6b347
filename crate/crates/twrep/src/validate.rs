use twochar_scalars::Cyclotomic;
use twochar_twogroup::Report;

use crate::MonomialTwoRep;

/// Exhaustive check of the five families of equations: permutation
/// homomorphism, normalization, character law, twisted 2-cocycle and
/// interchange. Every failure is listed.
pub fn validate_rep(r: &MonomialTwoRep) -> Report {
    let g2 = r.group();
    let (pi1, pi2) = (g2.pi1(), g2.pi2());
    let (ng, n) = (g2.order(), r.n());
    let e = g2.identity();
    let mut rep = Report::default();

    for g in 0..ng {
        let mut seen = vec![false; n];
        for i in 0..n {
            seen[r.sigma(g, i)] = true;
        }
        rep.checked += 1;
        if seen.iter().any(|s| !s) {
            rep.push("homomorphism", vec![g], "sigma is not a permutation".into());
        }
    }
    for i in 0..n {
        rep.checked += 1;
        if r.sigma(e, i) != i {
            rep.push("homomorphism", vec![e, e, i], "identity moves an index".into());
        }
    }
    for g in 0..ng {
        for h in 0..ng {
            for i in 0..n {
                rep.checked += 1;
                if r.sigma(pi1.mul(g, h), i) != r.sigma(g, r.sigma(h, i)) {
                    rep.push("homomorphism", vec![g, h, i], "sigma_gh != sigma_g sigma_h".into());
                }
            }
        }
    }
    if !rep.is_valid() {
        // the remaining equations index through sigma
        return rep;
    }

    for g in 0..ng {
        for i in 0..n {
            rep.checked += 3;
            if !r.c(e, g, i).is_one() {
                rep.push("normalization", vec![e, g, i], format!("c = {}", r.c(e, g, i)));
            }
            if !r.c(g, e, i).is_one() {
                rep.push("normalization", vec![g, e, i], format!("c = {}", r.c(g, e, i)));
            }
            if !r.tau(g, 0, i).is_one() {
                rep.push("normalization", vec![g, 0, i], format!("tau = {}", r.tau(g, 0, i)));
            }
            for h in 0..ng {
                if r.c(g, h, i).is_zero() {
                    rep.push("normalization", vec![g, h, i], "c vanishes".into());
                }
            }
        }
    }

    for g in 0..ng {
        for a in pi2.elements() {
            for b in pi2.elements() {
                for i in 0..n {
                    rep.checked += 1;
                    let lhs = r.tau(g, pi2.add(a, b), i);
                    let rhs = r.tau(g, a, i) * r.tau(g, b, i);
                    if *lhs != rhs {
                        rep.push("character", vec![g, a, b, i], format!("{lhs} != {rhs}"));
                    }
                }
            }
        }
    }

    for g in 0..ng {
        for h in 0..ng {
            let gh = pi1.mul(g, h);
            for k in 0..ng {
                let hk = pi1.mul(h, k);
                let ghk = pi1.mul(gh, k);
                let a = g2.alpha(g, h, k);
                for i in 0..n {
                    rep.checked += 1;
                    let lhs = r.c(g, h, r.sigma(k, i)) * r.c(gh, k, i);
                    let rhs: Cyclotomic = &(r.tau(ghk, a, i) * r.c(g, hk, i)) * r.c(h, k, i);
                    if lhs != rhs {
                        rep.push("cocycle", vec![g, h, k, i], format!("{lhs} != {rhs}"));
                    }
                }
            }
        }
    }

    for g in 0..ng {
        for h in 0..ng {
            let gh = pi1.mul(g, h);
            for a in pi2.elements() {
                for b in pi2.elements() {
                    let ab = pi2.add(a, g2.act(g, b));
                    for i in 0..n {
                        rep.checked += 1;
                        let lhs = r.tau(gh, ab, i);
                        let rhs = r.tau(g, a, r.sigma(h, i)) * r.tau(h, b, i);
                        if *lhs != rhs {
                            rep.push("interchange", vec![g, h, a, b, i], format!("{lhs} != {rhs}"));
                        }
                    }
                }
            }
        }
    }
    rep
}
