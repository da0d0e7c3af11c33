//! Built-in groups: `trivial`, `Z1`..`Z12`, `D1`..`D6` (order `2n`), `S3`, `S4`, `Q8`.
//!
//! Permutation groups multiply left to right: `a·b` applies `a` first, then `b`.
//! Cycle labels are 1-based, e.g. `(1 2)` and `(1 2 3)`.

use super::{AssociativityCheck, FiniteGroup};
use crate::error::{Error, Result};

pub fn catalog_names() -> Vec<String> {
    let mut names = vec!["trivial".to_string()];
    names.extend((1..=12).map(|n| format!("Z{n}")));
    names.extend((1..=6).map(|n| format!("D{n}")));
    names.extend(["S3", "S4", "Q8"].map(String::from));
    names
}

pub fn catalog(name: &str) -> Result<FiniteGroup> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let (table, labels) = match name {
        "trivial" => (vec![vec![0]], vec!["e".to_string()]),
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "Q8" => quaternion(),
        _ => {
            let (kind, n) = match name.strip_prefix('Z') {
                Some(rest) => ('Z', rest),
                None => ('D', name.strip_prefix('D').ok_or_else(unknown)?),
            };
            let n: usize = n.parse().map_err(|_| unknown())?;
            match kind {
                'Z' if (1..=12).contains(&n) => cyclic(n),
                'D' if (1..=6).contains(&n) => dihedral(n),
                _ => return Err(unknown()),
            }
        }
    };
    FiniteGroup::from_table(name, table, Some(labels), AssociativityCheck::Exhaustive)
}

type Table = (Vec<Vec<usize>>, Vec<String>);

fn cyclic(n: usize) -> Table {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    (table, (0..n).map(|a| a.to_string()).collect())
}

/// `r^k s^e` stored at `k + n·e`, with `s r = r⁻¹ s`.
fn dihedral(n: usize) -> Table {
    let index = |k: usize, e: usize| k % n + n * (e % 2);
    let mut table = vec![vec![0; 2 * n]; 2 * n];
    for (a, row) in table.iter_mut().enumerate() {
        let (k1, e1) = (a % n, a / n);
        for (b, entry) in row.iter_mut().enumerate() {
            let (k2, e2) = (b % n, b / n);
            let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
            *entry = index(k, e1 + e2);
        }
    }
    let labels = (0..2 * n)
        .map(|a| {
            let (k, e) = (a % n, a / n);
            match (k, e) {
                (0, 0) => "e".to_string(),
                (0, 1) => "s".to_string(),
                (1, 0) => "r".to_string(),
                (1, 1) => "r s".to_string(),
                (k, 0) => format!("r{k}"),
                (k, _) => format!("r{k} s"),
            }
        })
        .collect();
    (table, labels)
}

fn symmetric(n: usize) -> Table {
    let perms = all_permutations(n);
    let position = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let table = perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let ab: Vec<usize> = a.iter().map(|&x| b[x]).collect();
                    position(&ab)
                })
                .collect()
        })
        .collect();
    (table, perms.iter().map(|p| cycle_label(p)).collect())
}

/// Lexicographic order, so the identity comes first.
fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                extend(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn cycle_label(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut cycles = Vec::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        cycles.push(format!("({})", cycle.join(" ")));
    }
    if cycles.is_empty() {
        "e".to_string()
    } else {
        cycles.concat()
    }
}

/// `±1, ±i, ±j, ±k` stored as `2·unit + sign`.
fn quaternion() -> Table {
    // unit products for 1, i, j, k: (sign flip, unit)
    const UNIT: [[(bool, usize); 4]; 4] = [
        [(false, 0), (false, 1), (false, 2), (false, 3)],
        [(false, 1), (true, 0), (false, 3), (true, 2)],
        [(false, 2), (true, 3), (true, 0), (false, 1)],
        [(false, 3), (false, 2), (true, 1), (true, 0)],
    ];
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (flip, unit) = UNIT[a / 2][b / 2];
                    let sign = (a % 2) ^ (b % 2) ^ usize::from(flip);
                    2 * unit + sign
                })
                .collect()
        })
        .collect();
    let names = ["1", "i", "j", "k"];
    let labels = (0..8).map(|a| format!("{}{}", if a % 2 == 1 { "-" } else { "" }, names[a / 2])).collect();
    (table, labels)
}
