use serde::Serialize;

use super::verdict::{HomologyTable, Status, Verdict, Witness};
use crate::complexes::{
    hochschild_cochain_slices, koszul_nu, koszul_slices, l_cochain_slices, small_hochschild_slices, Coefficients,
    Direction,
};
use crate::error::Result;
use crate::exactla::Field;
use crate::homalg::GradedAlgebra;

/// Koszul homology through internal degree `cap`.
pub fn koszulity<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<(Verdict, HomologyTable)> {
    let slices = koszul_slices(a, cap)?;
    let table = HomologyTable::from_slices("koszul", Direction::Chain, &slices)?;
    let mut witnesses = Vec::new();
    'outer: for (slice, row) in slices.iter().zip(&table.rows) {
        for (k, &h) in row.homology.iter().enumerate() {
            let expected = (k == 0 && slice.internal_degree() == 0) as usize;
            if h != expected {
                witnesses.push(Witness::homology(slice, k, "nonzero Koszul homology"));
                break 'outer;
            }
        }
    }
    let profile: Vec<usize> = (0..=cap).map(|n| dual_dim(a, n)).collect::<Result<_>>()?;
    let v = Verdict::up_to_cap("koszulity", cap, witnesses).with_note(format!("dual dims {profile:?}"));
    Ok((v, table))
}

fn dual_dim<F: Field>(a: &mut GradedAlgebra<F>, n: usize) -> Result<usize> {
    Ok(a.dual_component(n)?.dim())
}

/// `H^k(L(A, K)) = 0` for `k < D` and `H^D = K` concentrated at `t = −ν_D`.
pub fn gorenstein<F: Field>(
    a: &mut GradedAlgebra<F>,
    global_dim: usize,
    cap: usize,
) -> Result<(Verdict, HomologyTable)> {
    let name = format!("gorenstein D={global_dim}");
    let big_n = a.presentation().degree();
    let top = koszul_nu(big_n, global_dim);
    if top > cap {
        let v = Verdict::new(name, Status::Indeterminate, Some(cap)).with_note(format!("ν_D = {top} exceeds the cap"));
        let table = HomologyTable {
            complex: "L(A,K)".into(),
            direction: Direction::Cochain,
            rows: Vec::new(),
        };
        return Ok((v, table));
    }
    let (koszul, _) = koszulity(a, cap)?;
    let slices = l_cochain_slices(a, global_dim, cap)?;
    let table = HomologyTable::from_slices("L(A,K)", Direction::Cochain, &slices)?;
    let mut witnesses = Vec::new();
    for (slice, row) in slices.iter().zip(&table.rows) {
        let t = slice.internal_degree();
        for (k, &h) in row.homology.iter().enumerate() {
            let expected = (k == global_dim && t == -(top as i64)) as usize;
            if h != expected {
                let what = if k < global_dim {
                    "cohomology below D"
                } else if t == -(top as i64) {
                    "top cohomology is not one-dimensional"
                } else {
                    "top cohomology outside its concentration degree"
                };
                witnesses.push(Witness::homology(slice, k, what));
            }
        }
    }
    let mut v = Verdict::up_to_cap(name, cap, witnesses);
    v.notes
        .push(format!("end ranks dim W_0 = 1, dim W_{top} = {}", dual_dim(a, top)?));
    let next = koszul_nu(big_n, global_dim + 1);
    if next <= cap && dual_dim(a, next)? > 0 {
        v.notes
            .push(format!("W_{next} ≠ 0: the Koszul complex is longer than D"));
    }
    if !koszul.passed() {
        v.notes.push("koszulity fails below the cap".into());
    }
    Ok((v, table))
}

/// Euler–Poincaré identities of the small Hochschild complex with
/// coefficients in `A`:
///
/// - `Σ_k (−1)^k dim HH_k^{(n)} = Σ_k (−1)^k dim A_{n−ν_k} dim A^!_{ν_k}` for every `n ≤ cap`
/// - for cubic algebras with dual dims `(1, g, g², g, 1)` whose right side
///   vanishes in positive degrees: `HH_0 + HH_2 = HH_1 + HH_3` for `n ≥ 1`
///
/// `HH_0^{(3)} + g = HH_1^{(3)}` needs `dim HH_2^{(3)} = g`, which depends on
/// the relations and not only on the dual dims, so it is reported, not checked.
pub fn euler_poincare<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<(Verdict, HomologyTable)> {
    let slices = small_hochschild_slices(a, Coefficients::Algebra, cap)?;
    let table = HomologyTable::from_slices("hochschild", Direction::Chain, &slices)?;
    let big_n = a.presentation().degree();
    let g = a.generators();
    let dims = a.graded_dims(cap)?;
    // the dual's dimensions from its own presentation, not from the W_ν of the slices
    let dual_dims = GradedAlgebra::with_budget(a.presentation().dual(), a.budget()).graded_dims(cap)?;
    let mut witnesses = Vec::new();
    let mut rhs = Vec::with_capacity(cap + 1);
    for (n, row) in table.rows.iter().enumerate() {
        let lhs = alternating(&row.homology);
        let r: i64 = (0..)
            .map(|k| (k, koszul_nu(big_n, k)))
            .take_while(|&(_, nu)| nu <= n)
            .map(|(k, nu)| {
                let term = (dims[n - nu] * dual_dims[nu]) as i64;
                if k % 2 == 0 {
                    term
                } else {
                    -term
                }
            })
            .sum();
        if lhs != r {
            witnesses.push(Witness {
                internal_degree: Some(n as i64),
                detail: format!("alternating homology sum {lhs} ≠ dimension sum {r}"),
                ..Witness::default()
            });
        }
        rhs.push(r);
    }
    let mut v = Verdict::up_to_cap("euler-poincare", cap, Vec::new());
    v.notes.push(format!("dimension sums {rhs:?}"));
    let ym_profile = [1, g, g * g, g, 1];
    let ym_shape = big_n == 3
        && dual_dims
            .iter()
            .enumerate()
            .all(|(k, &d)| d == ym_profile.get(k).copied().unwrap_or(0));
    if ym_shape && rhs.iter().skip(1).all(|&r| r == 0) {
        let cell = |n: usize, k: usize| table.rows[n].homology.get(k).copied().unwrap_or(0);
        for n in 1..=cap {
            if cell(n, 0) + cell(n, 2) != cell(n, 1) + cell(n, 3) {
                witnesses.push(Witness {
                    internal_degree: Some(n as i64),
                    detail: "HH_0 + HH_2 ≠ HH_1 + HH_3".into(),
                    ..Witness::default()
                });
            }
        }
        v.notes.push("cubic identities checked".into());
        if cap >= 3 {
            v.notes.push(format!("dim HH_2^(3) = {}", cell(3, 2)));
        }
    } else {
        v.notes.push("cubic identities not applicable".into());
    }
    v.status = if witnesses.is_empty() {
        Status::PassUpToCap
    } else {
        Status::Fail
    };
    v.witnesses = witnesses;
    Ok((v, table))
}

fn alternating(h: &[usize]) -> i64 {
    h.iter()
        .enumerate()
        .map(|(k, &x)| if k % 2 == 0 { x as i64 } else { -(x as i64) })
        .sum()
}

/// Both sides of the duality between Hochschild homology and cohomology.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualityTable {
    pub homology: HomologyTable,
    pub cohomology: HomologyTable,
    /// Every `σ` with `HH_k^{(n)} = H^{D−k}_{n−σ}` on all computed cells.
    pub shifts: Vec<i64>,
    /// The shift comparing the most nonzero cells.
    pub shift: Option<i64>,
}

struct ShiftScore {
    sigma: i64,
    compared_nonzero: usize,
    mismatches: Vec<Witness>,
}

/// `HH_k(A, A)` against `H^{D−k}(A, A)` under a searched internal shift.
pub fn poincare_duality<F: Field>(a: &mut GradedAlgebra<F>, cap: usize) -> Result<(Verdict, DualityTable)> {
    let hom_slices = small_hochschild_slices(a, Coefficients::Algebra, cap)?;
    let homology = HomologyTable::from_slices("hochschild", Direction::Chain, &hom_slices)?;
    let co_slices = hochschild_cochain_slices(a, cap)?;
    let cohomology = HomologyTable::from_slices("hochschild-cochain", Direction::Cochain, &co_slices)?;
    let length = co_slices.first().map_or(1, |s| s.len());
    let d = length - 1;
    let t_lo = co_slices.first().map_or(0, |s| s.internal_degree());
    let t_hi = co_slices.last().map_or(0, |s| s.internal_degree());
    let scores: Vec<ShiftScore> = (-t_hi..=cap as i64 - t_lo)
        .map(|sigma| {
            let mut score = ShiftScore {
                sigma,
                compared_nonzero: 0,
                mismatches: Vec::new(),
            };
            for n in 0..=cap as i64 {
                let t = n - sigma;
                if t < t_lo || t > t_hi {
                    continue;
                }
                for k in 0..length {
                    let lhs = homology.get(k, n);
                    let rhs = cohomology.get(d - k, t);
                    if lhs != rhs {
                        score.mismatches.push(Witness {
                            homological_degree: Some(k),
                            internal_degree: Some(n),
                            detail: format!("σ = {sigma}: HH_{k} = {lhs} but H^{} at t = {t} is {rhs}", d - k),
                            ..Witness::default()
                        });
                    } else if lhs > 0 {
                        score.compared_nonzero += 1;
                    }
                }
            }
            score
        })
        .collect();
    let shifts: Vec<i64> = scores
        .iter()
        .filter(|s| s.mismatches.is_empty() && s.compared_nonzero > 0)
        .map(|s| s.sigma)
        .collect();
    let shift = scores
        .iter()
        .filter(|s| shifts.contains(&s.sigma))
        .max_by_key(|s| s.compared_nonzero)
        .map(|s| s.sigma);
    let verdict = match shift {
        Some(sigma) => Verdict::up_to_cap("poincare-duality", cap, Vec::new()).with_note(format!("shift σ = {sigma}")),
        None => {
            let closest = scores
                .iter()
                .filter(|s| s.compared_nonzero > 0 || !s.mismatches.is_empty())
                .min_by_key(|s| s.mismatches.len());
            let witnesses = closest.map_or_else(
                || vec![Witness::note("no cells to compare")],
                |s| s.mismatches.iter().take(1).cloned().collect(),
            );
            Verdict::up_to_cap("poincare-duality", cap, witnesses)
        }
    };
    Ok((
        verdict,
        DualityTable {
            homology,
            cohomology,
            shifts,
            shift,
        },
    ))
}
