//! Diagram-level enumeration for each Pieri rule.
//!
//! Positions are (row, column), 1-based. A circle of Λ in row r sits in
//! column Λ^*_r + 1.

use crate::superpartition::{Partition, StripKind, SuperPartition};

/// Circles of Λ from top to bottom.
pub(super) fn circles(l: &SuperPartition) -> Vec<(usize, usize)> {
    l.circle_rows().iter().map(|&r| (r, l.circle_col(r))).collect()
}

/// Ω, its sign, and the row of the new circle for fermionic rules.
pub(super) type Raw = (SuperPartition, i8, Option<usize>);

fn has_cell_in_row(mu: &Partition, star: &Partition, r: usize) -> bool {
    mu.row(r) > star.row(r)
}

fn has_cell_in_col(mu: &Partition, star: &Partition, c: usize) -> bool {
    mu.col(c) > star.col(c)
}

/// Row of a circle placed at the bottom of column `c` of μ, if it is the end
/// of that row.
fn row_for_col(mu: &Partition, c: usize) -> Option<usize> {
    let r = mu.col(c) + 1;
    (mu.row(r) + 1 == c).then_some(r)
}

fn count_below(rows: &[usize], r: usize) -> usize {
    rows.iter().filter(|&&x| x > r).count()
}

/// s*_Λ h_ℓ: circles either stay in their row or drop one row when the strip
/// touches it.
pub(super) fn sstar_h(l: &SuperPartition, ell: usize) -> Vec<Raw> {
    let star = l.star();
    let mut out = Vec::new();
    for mu in star.strips(ell, StripKind::Horizontal) {
        let rows: Vec<usize> =
            l.circle_rows().iter().map(|&a| if has_cell_in_row(&mu, star, a) { a + 1 } else { a }).collect();
        if let Some(o) = SuperPartition::from_star_rows(&mu, &rows) {
            out.push((o, 1, None));
        }
    }
    out
}

/// s̄_Λ e_ℓ: circles either stay in their column or shift one column right
/// when the strip touches it.
pub(super) fn sbar_e(l: &SuperPartition, ell: usize) -> Vec<Raw> {
    let star = l.star();
    let mut out = Vec::new();
    'strips: for mu in star.strips(ell, StripKind::Vertical) {
        let mut rows = Vec::with_capacity(l.m());
        for (_, c) in circles(l) {
            let c = if has_cell_in_col(&mu, star, c) { c + 1 } else { c };
            match row_for_col(&mu, c) {
                Some(r) => rows.push(r),
                None => continue 'strips,
            }
        }
        if let Some(o) = SuperPartition::from_star_rows(&mu, &rows) {
            out.push((o, 1, None));
        }
    }
    out
}

/// s*_Λ h̃_ℓ: as `sstar_h`, plus a new circle in the first column the strip
/// does not reach.
pub(super) fn sstar_htilde(l: &SuperPartition, ell: usize) -> Vec<Raw> {
    let star = l.star();
    let mut out = Vec::new();
    for mu in star.strips(ell, StripKind::Horizontal) {
        let c0 = (1..).find(|&c| !has_cell_in_col(&mu, star, c)).expect("strips are finite");
        let Some(r0) = row_for_col(&mu, c0) else { continue };
        let mut rows: Vec<usize> =
            l.circle_rows().iter().map(|&a| if has_cell_in_row(&mu, star, a) { a + 1 } else { a }).collect();
        let sign = if count_below(&rows, r0) % 2 == 1 { -1 } else { 1 };
        rows.push(r0);
        if let Some(o) = SuperPartition::from_star_rows(&mu, &rows) {
            out.push((o, sign, Some(r0)));
        }
    }
    out
}

/// s̄_Λ ẽ_ℓ: as `sbar_e`, plus a new circle in the first row the strip does
/// not reach.
pub(super) fn sbar_etilde(l: &SuperPartition, ell: usize) -> Vec<Raw> {
    let star = l.star();
    let mut out = Vec::new();
    'strips: for mu in star.strips(ell, StripKind::Vertical) {
        let r0 = (1..).find(|&r| !has_cell_in_row(&mu, star, r)).expect("strips are finite");
        if r0 > 1 && mu.row(r0 - 1) == mu.row(r0) {
            continue;
        }
        let mut rows = Vec::with_capacity(l.m() + 1);
        for (_, c) in circles(l) {
            let c = if has_cell_in_col(&mu, star, c) { c + 1 } else { c };
            match row_for_col(&mu, c) {
                Some(r) => rows.push(r),
                None => continue 'strips,
            }
        }
        let sign = if count_below(&rows, r0) % 2 == 1 { -1 } else { 1 };
        rows.push(r0);
        if let Some(o) = SuperPartition::from_star_rows(&mu, &rows) {
            out.push((o, sign, Some(r0)));
        }
    }
    out
}

/// Rows where μ could end with a circle.
fn corner_rows(mu: &Partition) -> Vec<usize> {
    (1..=mu.len() + 1).filter(|&r| r == 1 || mu.row(r - 1) > mu.row(r)).collect()
}

/// Whether each circle of `new` (top to bottom) is related to the matching
/// circle of Λ as the bosonic Pieri rules for s̄* and s require.
///
/// For horizontal strips a circle may keep its column, or keep its row as
/// long as it does not pass the end of the row above in Λ^*. Vertical strips
/// are the transpose.
fn paired(l: &SuperPartition, new: &[(usize, usize)], kind: StripKind) -> bool {
    let star = l.star();
    circles(l).iter().zip(new).all(|(&(a, ca), &(r, c))| match kind {
        StripKind::Horizontal => c == ca || (r == a && (a == 1 || c <= star.row(a - 1))),
        StripKind::Vertical => r == a || (c == ca && (ca == 1 || r <= star.col(ca - 1))),
    })
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, k, 0, &mut Vec::new(), &mut out);
    out
}

/// s̄*_Λ h_ℓ, s_Λ h_ℓ (horizontal) and s_Λ e_ℓ (vertical).
pub(super) fn bosonic_sliding(l: &SuperPartition, ell: usize, kind: StripKind) -> Vec<Raw> {
    let mut out = Vec::new();
    for mu in l.star().strips(ell, kind) {
        for rows in subsets(&corner_rows(&mu), l.m()) {
            let Some(o) = SuperPartition::from_star_rows(&mu, &rows) else { continue };
            if paired(l, &circles(&o), kind) {
                out.push((o, 1, None));
            }
        }
    }
    out
}

/// s̄*_Λ h̃_ℓ, s_Λ p̃_ℓ (horizontal) and s_Λ ẽ_ℓ (vertical): an (ℓ+1)-strip
/// on Λ^⊛ whose rightmost (lowermost) cell becomes the new circle.
pub(super) fn fermionic_sliding(l: &SuperPartition, ell: usize, kind: StripKind) -> Vec<Raw> {
    let circled = l.circled();
    let mut out = Vec::new();
    for nu in circled.strips(ell + 1, kind) {
        let grown: Vec<usize> = (1..=nu.len()).filter(|&r| nu.row(r) > circled.row(r)).collect();
        let r_new = match kind {
            StripKind::Horizontal => grown[0],
            StripKind::Vertical => *grown.last().expect("nonempty strip"),
        };
        let ends: Vec<usize> = (1..=nu.len()).filter(|&r| r != r_new).collect();
        for rows in subsets(&ends, l.m()) {
            let mut star = nu.parts().to_vec();
            for &r in rows.iter().chain([&r_new]) {
                star[r - 1] -= 1;
            }
            let Ok(star) = Partition::new(star) else { continue };
            // not stated with the rule, but forced by the product
            if !star.is_strip_over(l.star(), kind) {
                continue;
            }
            let Ok(o) = SuperPartition::from_star_circled(&star, &nu) else { continue };
            let others: Vec<(usize, usize)> = rows.iter().map(|&r| (r, nu.row(r))).collect();
            if !paired(l, &others, kind) {
                continue;
            }
            let sign = if count_below(&rows, r_new) % 2 == 1 { -1 } else { 1 };
            out.push((o, sign, Some(r_new)));
        }
    }
    out
}
