//! Irreducible characters of the symmetric group via the Murnaghan–Nakayama
//! rule, computed on beta-sets (first-column hook lengths) and memoized.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::partition::Partition;

type Memo = RwLock<HashMap<(Partition, Partition), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| RwLock::new(HashMap::new()))
}

/// `z_μ = Π_j j^{f_j} f_j!`, so that the class `C_μ` has `d!/z_μ` elements.
pub fn z_of(mu: &Partition) -> BigInt {
    let mut z = BigInt::from(1);
    for (part, count) in mu.multiplicities() {
        for c in 1..=count {
            z *= BigInt::from(part) * BigInt::from(c);
        }
    }
    z
}

/// The character `χ^λ_μ` of the irreducible representation `λ` on the class
/// of cycle type `μ`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.weight() != mu.weight() {
        return Err(Error::WeightMismatch {
            left: lambda.clone(),
            right: mu.clone(),
            left_weight: lambda.weight(),
            right_weight: mu.weight(),
        });
    }
    Ok(character_unchecked(lambda, mu))
}

pub(crate) fn character_unchecked(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(&v) = memo().read().expect("character memo poisoned").get(&key) {
        return v;
    }
    let r = mu.parts()[0];
    let rest = Partition::new(mu.parts()[1..].to_vec()).expect("tail of a partition");
    let value: i64 = remove_rim_hooks(lambda, r)
        .into_iter()
        .map(|(sign, smaller)| sign * character_unchecked(&smaller, &rest))
        .sum();
    memo()
        .write()
        .expect("character memo poisoned")
        .insert(key, value);
    value
}

/// Every way to strip a rim hook of length `r` from `λ`, with the sign
/// `(-1)^{height}` of the hook.
///
/// On the beta-set `{λ_k + n - k}` a rim hook removal lowers one bead by `r`
/// onto an empty position; the height is the number of beads jumped over.
fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(i64, Partition)> {
    let n = lambda.length();
    let beta: Vec<usize> = (1..=n).map(|k| lambda.part(k) + n - k).collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        let Some(target) = b.checked_sub(r) else {
            continue;
        };
        if beta.contains(&target) {
            continue;
        }
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(k, &x)| x - (n - 1 - k))
            .collect();
        let sign = if jumped % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::from_padded(parts)));
    }
    out
}
