//! Self-checks run by `kronecker verify`.
//!
//! Each check sweeps one module's invariants and reports a one-line detail.
//! Sweep sizes scale with `weight`.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::character::{kron_oracle_char_with, kron_oracle_schur, CharacterTable};
use crate::fnm::{atomic_nm_with, build_fnm_matrix, degree_bound, face_restrict};
use crate::holes::holes_grid;
use crate::kron224::{atomic224, bravyi_check, kron224, reduced_kron_2row, reduced_representative, stable_triple_kron};
use crate::lr::{build_lr_matrix, is_totally_unimodular, lr_rank_stats};
use crate::partition::{canonical_sort, partitions_of, triples_of_weight, validate_triple, Bounds, BOUNDS_224};
use crate::vecpart::{a22, ps22_i64, VpCounter};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

type Outcome = std::result::Result<String, String>;

fn fail_if(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Err(msg())
    } else {
        Ok(())
    }
}

fn oracles(weight: u64) -> Outcome {
    let lams: Vec<_> = (0..=weight).flat_map(|w| partitions_of(w, 4, w)).collect();
    let counts = lams
        .par_iter()
        .map_init(CharacterTable::new, |table, lam| {
            let w = lam.weight();
            let schur = kron_oracle_schur(lam, 2, 2, weight.max(20)).map_err(|e| e.to_string())?;
            let twos = partitions_of(w, 2, w);
            for mu in &twos {
                for nu in &twos {
                    let t = validate_triple(mu, nu, lam, BOUNDS_224).expect("equal weights");
                    let k: BigInt = kron224(&t).map_err(|e| e.to_string())?;
                    let c = kron_oracle_char_with(table, &t, weight.max(30)).map_err(|e| e.to_string())?;
                    fail_if(k != c || c != schur.get(mu, nu), || format!("{t}: {k} vs {c}"))?;
                }
            }
            Ok(twos.len() * twos.len())
        })
        .collect::<std::result::Result<Vec<usize>, String>>()?;
    Ok(format!("{} triples", counts.iter().sum::<usize>()))
}

fn bounds_and_vanishing(weight: u64) -> Outcome {
    let triples: Vec<_> = (0..=weight)
        .flat_map(|w| triples_of_weight(w, BOUNDS_224))
        .filter_map(|t| canonical_sort(&t).ok().map(|c| c.triple))
        .collect();
    let bad: Vec<String> = triples
        .par_iter()
        .filter(|t| {
            let g: i64 = kron224(t).expect("canonical");
            let a: i64 = atomic224(t).expect("canonical");
            let b = bravyi_check(t).expect("canonical");
            a < g || ((!b.first || !b.second) && g != 0) || (g > 0 && !b.all())
        })
        .map(|t| t.to_string())
        .collect();
    fail_if(!bad.is_empty(), || format!("violations at {}", bad.join(", ")))?;
    Ok(format!("{} triples", triples.len()))
}

fn chamber_formulas() -> Outcome {
    let mut counter = VpCounter::<i64>::new(&a22());
    for n in 0..=40 {
        for m in 0..=40 {
            let c = counter.count(&[n, m]).expect("two rows");
            fail_if(c != ps22_i64(n, m), || format!("ps22({n},{m})"))?;
        }
    }
    let p = ps22_i64;
    let c2 = |n: i64| (n + 1) * (n + 2) / 2;
    for n in 0..=60 {
        for m in 0..=60 {
            fail_if(p(n, m) > c2(n), || format!("bound at ({n},{m})"))?;
        }
        fail_if(p(n, 2 * n) != c2(n), || format!("plateau at n={n}"))?;
    }
    for n in 0..80 {
        for m in 0..80 {
            fail_if(p(n + 1, m) < p(n, m) || p(n, m + 1) < p(n, m), || format!("monotone at ({n},{m})"))?;
        }
    }
    Ok("p_S(a, b) for a, b <= 40".into())
}

fn fnm_matrices() -> Outcome {
    for n in 2..=4 {
        for m in n..=4 {
            let a = build_fnm_matrix(n, m).map_err(|e| e.to_string())?;
            let max = if m >= 3 { 2 * n as u64 - 1 } else { n as u64 };
            fail_if(
                a.row_count() != n + m - 2
                    || a.rank() != n + m - 2
                    || !a.has_all_basis_vectors()
                    || a.max_entry() != max
                    || degree_bound(n, m).ok() != Some(a.col_count() - a.rank()),
                || format!("statistics of A_({n},{m})"),
            )?;
        }
    }
    let a33 = build_fnm_matrix(3, 3).map_err(|e| e.to_string())?;
    let mut axis = VpCounter::<u64>::new(&a33);
    for k in 0..=30 {
        fail_if(axis.count(&[0, 0, 0, k]).ok() != Some(k as u64 + 1), || format!("n4 axis at {k}"))?;
    }
    let mut face = VpCounter::<u64>::new(&face_restrict(&a33, &[3]).map_err(|e| e.to_string())?);
    for x in 0..=6 {
        for y in 0..=6 {
            for z in 0..=6 {
                fail_if(face.count(&[x, y, z]).ok() != Some(1), || format!("n4 = 0 face at ({x},{y},{z})"))?;
            }
        }
    }
    Ok("2 <= n <= m <= 4".into())
}

fn reduced_and_stable() -> Outcome {
    for x in 0..=12u64 {
        for y in 0..=12u64 {
            for z in 0..=12u64 {
                let r: i64 = reduced_kron_2row(x, y, z);
                let g: i64 = kron224(&reduced_representative(x, y, z)).map_err(|e| e.to_string())?;
                fail_if(r != g, || format!("reduced ({x},{y},{z}): {r} vs {g}"))?;
            }
        }
    }
    for u in 0..=5 {
        for t in 0..=u {
            for s in 0..=t {
                for k in 1..=10 {
                    let v = stable_triple_kron::<i64>(u, t, s, k).map_err(|e| e.to_string())?;
                    fail_if(v != (1, 1), || format!("stable ({u},{t},{s}) k={k}: {v:?}"))?;
                }
            }
        }
    }
    Ok("2197 reduced, 560 stable".into())
}

fn lr_matrices() -> Outcome {
    for n in 1..=4 {
        for m in 1..=4 {
            let stats = lr_rank_stats(n, m).map_err(|e| e.to_string())?;
            fail_if(stats != (n + m - 1, (n - 1) * (m - 1)), || format!("rank ({n},{m})"))?;
            if n <= 3 && m <= 3 {
                let tu = is_totally_unimodular(&build_lr_matrix(n, m).map_err(|e| e.to_string())?);
                fail_if(tu != Ok(true), || format!("unimodularity ({n},{m})"))?;
            }
        }
    }
    Ok("1 <= n, m <= 4".into())
}

fn holes() -> Outcome {
    let mut total = 0;
    for w in 0..=24 {
        let grid = holes_grid(w);
        let found = grid.holes();
        let off_face: Vec<_> = found.iter().filter(|p| 2 * p.k != w).map(|p| (p.i, p.j, p.k)).collect();
        fail_if(!off_face.is_empty(), || format!("weight {w}: holes off the face at {off_face:?}"))?;
        total += found.len();
    }
    Ok(format!("{total} holes up to weight 24, all with k = N/2"))
}

/// Counts triples with `atomic_nm < g`; reported, never failed.
fn atomic_nm_report(weight: u64) -> Outcome {
    let mut parts = Vec::new();
    for (n, m) in [(2, 3), (3, 3)] {
        let matrix = build_fnm_matrix(n, m).map_err(|e| e.to_string())?;
        let triples: Vec<_> = (0..=weight).flat_map(|w| triples_of_weight(w, Bounds::nm(n, m))).collect();
        let below: usize = triples
            .par_iter()
            .map_init(
                || (CharacterTable::new(), VpCounter::<BigInt>::new(&matrix)),
                |(table, counter), t| {
                    let a = atomic_nm_with(counter, n, m, t).expect("bounded triple");
                    let g = kron_oracle_char_with(table, t, weight.max(30)).expect("within cap");
                    usize::from(a < g)
                },
            )
            .sum();
        parts.push(format!("({n},{m}): {below} of {} triples below g", triples.len()));
    }
    Ok(parts.join("; "))
}

/// Runs every check; sweeps use triples of weight at most `weight`.
pub fn run_suite(weight: u64) -> Vec<Check> {
    let checks: Vec<(&'static str, Box<dyn Fn() -> Outcome + Sync>)> = vec![
        ("kron224 = character oracle = Schur oracle", Box::new(move || oracles(weight))),
        ("atomic >= Kronecker and Bravyi vanishing", Box::new(move || bounds_and_vanishing(weight))),
        ("p_S chamber formulas and lemmas", Box::new(chamber_formulas)),
        ("F_{n,m} statistics and faces", Box::new(fnm_matrices)),
        ("reduced and stable coefficients", Box::new(reduced_and_stable)),
        ("Littlewood-Richardson matrices", Box::new(lr_matrices)),
        ("hole locations", Box::new(holes)),
        ("atomic_nm >= Kronecker (report)", Box::new(move || atomic_nm_report(weight.min(12)))),
    ];
    checks
        .into_iter()
        .map(|(name, f)| {
            let outcome = f();
            Check { name, passed: outcome.is_ok(), detail: outcome.unwrap_or_else(|e| e) }
        })
        .collect()
}
