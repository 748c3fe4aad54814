//! Exact rank by Gaussian elimination on sparse rows.

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::Zero;

/// Rank over `Q` of the given sparse rows.
pub fn rank_rational(rows: &[Vec<(usize, BigRational)>]) -> usize {
    // Pivot column -> reduced row with leading coefficient one.
    let mut basis: BTreeMap<usize, BTreeMap<usize, BigRational>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (i, a) in row {
            let e = r.entry(*i).or_insert_with(BigRational::zero);
            *e += a;
        }
        r.retain(|_, a| !a.is_zero());
        loop {
            let Some((&lead, a)) = r.iter().next() else { break };
            let Some(pivot) = basis.get(&lead) else {
                let inv = a.recip();
                for v in r.values_mut() {
                    *v *= &inv;
                }
                basis.insert(lead, r);
                break;
            };
            let a = a.clone();
            for (j, b) in pivot {
                let e = r.entry(*j).or_insert_with(BigRational::zero);
                *e -= &a * b;
            }
            r.retain(|_, x| !x.is_zero());
        }
    }
    basis.len()
}

/// Rank over `F_p` of rows with entries in `Z/n` (reduced mod `p`).
pub fn rank_mod_p(rows: &[Vec<(usize, u64)>], p: u64) -> usize {
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= p;
        while e > 0 {
            if e & 1 == 1 {
                acc = (acc as u128 * b as u128 % p as u128) as u64;
            }
            b = (b as u128 * b as u128 % p as u128) as u64;
            e >>= 1;
        }
        acc
    };
    let mut basis: BTreeMap<usize, BTreeMap<usize, u64>> = BTreeMap::new();
    for row in rows {
        let mut r: BTreeMap<usize, u64> = BTreeMap::new();
        for (i, a) in row {
            let e = r.entry(*i).or_insert(0);
            *e = (*e + a % p) % p;
        }
        r.retain(|_, a| *a != 0);
        loop {
            let Some((&lead, &a)) = r.iter().next() else { break };
            let Some(pivot) = basis.get(&lead) else {
                let inv = pow(a, p - 2);
                for v in r.values_mut() {
                    *v = (*v as u128 * inv as u128 % p as u128) as u64;
                }
                basis.insert(lead, r);
                break;
            };
            for (j, b) in pivot {
                let e = r.entry(*j).or_insert(0);
                let sub = (a as u128 * *b as u128 % p as u128) as u64;
                *e = (*e + p - sub) % p;
            }
            r.retain(|_, x| *x != 0);
        }
    }
    basis.len()
}
