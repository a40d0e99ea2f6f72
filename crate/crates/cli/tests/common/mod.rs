//! Exact brute-force shifting over the rationals, written without touching
//! the library's exterior algebra, orders or elimination.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Set = Vec<usize>;

/// Every `d`-subset of `1..=n`, sorted increasingly inside.
pub fn subsets_of_size(n: usize, d: usize) -> Vec<Set> {
    fn go(start: usize, n: usize, d: usize, cur: &mut Set, out: &mut Vec<Set>) {
        if cur.len() == d {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, d, &mut Vec::new(), &mut out);
    out
}

/// Reverse lexicographic comparison of equal-size sets: scan vertices from 1
/// upward; the first set to contain a vertex the other lacks is the smaller.
pub fn revlex_cmp(a: &Set, b: &Set) -> Ordering {
    let top = a.iter().chain(b).max().copied().unwrap_or(0);
    for v in 1..=top {
        match (a.contains(&v), b.contains(&v)) {
            (true, false) => return Ordering::Less,
            (false, true) => return Ordering::Greater,
            _ => {}
        }
    }
    Ordering::Equal
}

/// Deterministic integer matrix from a 64-bit LCG, entries in `-97..=97`.
pub fn integer_matrix(n: usize, salt: u64) -> Vec<Vec<i64>> {
    let mut state = salt.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ 0x2545_f491_4f6c_dd1d;
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    state =
                        state.wrapping_mul(6_364_136_223_846_793_005).wrapping_add(1_442_695_040_888_963_407);
                    ((state >> 33) % 195) as i64 - 97
                })
                .collect()
        })
        .collect()
}

type Element = BTreeMap<Set, BigInt>;

/// `x ∧ v` where `v = Σ_i v[i-1] e_i`.
fn wedge_vector(x: &Element, v: &[i64]) -> Element {
    let mut out = Element::new();
    for (s, c) in x {
        for (idx, &a) in v.iter().enumerate() {
            let i = idx + 1;
            if a == 0 || s.contains(&i) {
                continue;
            }
            // e_S ∧ e_i: move e_i left past every element of S above i.
            let above = s.iter().filter(|&&t| t > i).count();
            let mut t = s.clone();
            t.push(i);
            t.sort_unstable();
            let term = c * BigInt::from(a);
            let entry = out.entry(t).or_insert_with(BigInt::zero);
            if above % 2 == 0 {
                *entry += term;
            } else {
                *entry -= term;
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `φ(e_T) = φ(e_{t1}) ∧ … ∧ φ(e_{tk})`, `φ(e_t) = Σ_i a[i][t] e_i`.
pub fn image(a: &[Vec<i64>], t: &Set) -> Element {
    let mut x = Element::new();
    x.insert(Vec::new(), BigInt::one());
    for &col in t {
        let v: Vec<i64> = a.iter().map(|row| row[col - 1]).collect();
        x = wedge_vector(&x, &v);
    }
    x
}

/// Pivot columns of a rational matrix after elimination.
fn pivot_columns(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = rows[i][c].clone() / lead.clone();
            let (upper, lower) = rows.split_at_mut(i);
            for (x, y) in lower[0][c..].iter_mut().zip(&upper[r][c..]) {
                *x -= y.clone() * f.clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Faces of the shifted complex of `faces` (a downward-closed family of
/// increasing sets on `[n]`) computed with the integer matrix `a`.
pub fn brute_shift(n: usize, faces: &[Set], a: &[Vec<i64>]) -> Vec<Set> {
    let mut out = vec![Vec::new()];
    for d in 1..=n {
        let mut columns = subsets_of_size(n, d);
        columns.sort_by(|x, y| revlex_cmp(y, x));
        let nonfaces: Vec<&Set> = columns.iter().filter(|s| !faces.contains(s)).collect();
        let rows: Vec<Vec<BigRational>> = nonfaces
            .iter()
            .map(|t| {
                let img = image(a, t);
                columns
                    .iter()
                    .map(|c| BigRational::from_integer(img.get(c).cloned().unwrap_or_else(BigInt::zero)))
                    .collect()
            })
            .collect();
        let pivots = pivot_columns(rows, columns.len());
        assert_eq!(pivots.len(), nonfaces.len(), "oracle matrix is singular");
        for (i, s) in columns.iter().enumerate() {
            if !pivots.contains(&i) {
                out.push(s.clone());
            }
        }
    }
    out.sort();
    out
}

/// Every simplicial complex on `[n]` (downward-closed families containing
/// the empty set), as sorted lists of faces.
pub fn all_complexes(n: usize) -> Vec<Vec<Set>> {
    let nonempty: Vec<Set> = (1..=n).flat_map(|d| subsets_of_size(n, d)).collect();
    let m = nonempty.len();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << m) {
        let chosen: Vec<&Set> = (0..m).filter(|&i| mask >> i & 1 == 1).map(|i| &nonempty[i]).collect();
        let closed = chosen.iter().all(|s| {
            (0..s.len()).all(|skip| {
                let sub: Set = s.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect();
                sub.is_empty() || chosen.contains(&&sub)
            })
        });
        if closed {
            let mut faces: Vec<Set> =
                std::iter::once(Vec::new()).chain(chosen.into_iter().cloned()).collect();
            faces.sort();
            out.push(faces);
        }
    }
    out
}
