#![allow(dead_code)]

//! Oracles that share no code with the library's linear algebra or complexes.

use lodaykit::algebra::Extension;
use lodaykit::catalog::BUILTIN_SOURCES;
use lodaykit::exactla::{FieldSpec, Scalar, Vector};
use lodaykit::theorems::SixTerm;
use serde_json::Value;

/// Prime used for rational entries; every catalog structure constant is a
/// small integer, so ranks mod this prime are the rational ranks.
pub const BIG_PRIME: u64 = 1_000_003;

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r, mut b, mut e) = (1u64, a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn residue(text: &str, p: u64) -> u64 {
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let red = |s: &str| {
        let v: i64 = s.trim().parse().expect("integer scalar");
        v.rem_euclid(p as i64) as u64
    };
    red(num) * inv_mod(red(den), p) % p
}

/// `c[i][j][k]` with `[e_i, e_j] = Σ_k c[i][j][k] e_k`, read straight from
/// the JSON text.
pub fn structure_constants(file: &Value, p: u64) -> Vec<Vec<Vec<u64>>> {
    let n = file["dim"].as_u64().unwrap() as usize;
    let mut c = vec![vec![vec![0u64; n]; n]; n];
    for b in file["brackets"].as_array().into_iter().flatten() {
        let i = b["i"].as_u64().unwrap() as usize - 1;
        let j = b["j"].as_u64().unwrap() as usize - 1;
        for pair in b["coeffs"].as_array().unwrap() {
            let (k, s) = match (&pair[0], &pair[1]) {
                (Value::Number(k), Value::String(s)) => (k.as_u64().unwrap(), s.clone()),
                (Value::String(s), Value::Number(k)) => (k.as_u64().unwrap(), s.clone()),
                other => panic!("unexpected coefficient {other:?}"),
            };
            let slot = &mut c[i][j][k as usize - 1];
            *slot = (*slot + residue(&s, p)) % p;
        }
    }
    c
}

pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[col] != 0 {
                let f = row[col];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Matrix of `d(x_1 ⊗ … ⊗ x_k) = Σ_{i<j} (-1)^j x_1 ⊗ … ⊗ [x_i, x_j] ⊗ … x̂_j …`
/// on basis tensors, as rows indexed by the source tensor.
pub fn loday_boundary_rows(c: &[Vec<Vec<u64>>], k: usize, p: u64) -> Vec<Vec<u64>> {
    let n = c.len();
    let src = n.pow(k as u32);
    let dst = n.pow(k as u32 - 1);
    let mut rows = vec![vec![0u64; dst]; src];
    for (s, row) in rows.iter_mut().enumerate() {
        let mut t = vec![0usize; k];
        let mut x = s;
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        for j in 1..k {
            for i in 0..j {
                // positions are 1-based in the sign
                let negative = (j + 1) % 2 == 1;
                for (m, &coef) in c[t[i]][t[j]].iter().enumerate() {
                    if coef == 0 {
                        continue;
                    }
                    let mut idx = 0usize;
                    for (pos, &v) in t.iter().enumerate() {
                        if pos == j {
                            continue;
                        }
                        idx = idx * n + if pos == i { m } else { v };
                    }
                    let add = if negative { (p - coef) % p } else { coef };
                    row[idx] = (row[idx] + add) % p;
                }
            }
        }
    }
    rows
}

/// `dim HL_0, …, dim HL_max` over `F_p`, asserting `d ∘ d = 0` on the way.
pub fn loday_dims(file: &Value, p: u64, max: usize) -> Vec<usize> {
    let c = structure_constants(file, p);
    let n = c.len();
    // ranks[k] = rank of d_k: C_k -> C_{k-1}; d_0 = d_1 = 0
    let mut ranks = vec![0usize, 0];
    let mut prev: Option<Vec<Vec<u64>>> = None;
    for k in 2..=max + 1 {
        let d = loday_boundary_rows(&c, k, p);
        if let Some(lower) = &prev {
            for row in &d {
                let mut acc = vec![0u64; lower[0].len()];
                for (m, &a) in row.iter().enumerate() {
                    if a != 0 {
                        for (x, &y) in acc.iter_mut().zip(&lower[m]) {
                            *x = (*x + a * y) % p;
                        }
                    }
                }
                assert!(
                    acc.iter().all(|&x| x == 0),
                    "oracle boundary squares to zero"
                );
            }
        }
        ranks.push(rank_mod_p(d.clone(), p));
        prev = Some(d);
    }
    ranks
        .windows(2)
        .enumerate()
        .map(|(k, r)| n.pow(k as u32) - r[0] - r[1])
        .collect()
}

pub fn builtin_json() -> Vec<Value> {
    BUILTIN_SOURCES
        .iter()
        .map(|(_, text)| serde_json::from_str(text).unwrap())
        .collect()
}

pub fn oracle_prime(file: &Value) -> u64 {
    match file["field"].as_str().unwrap() {
        "Q" => BIG_PRIME,
        f => f.trim_start_matches('F').parse().unwrap(),
    }
}

fn f2_vectors(n: usize) -> impl Iterator<Item = Vector> {
    let f = FieldSpec::Prime(2);
    (0u64..1 << n).map(move |bits| {
        (0..n)
            .map(|i| f.from_i64(((bits >> i) & 1) as i64))
            .collect()
    })
}

fn matvec(m: &lodaykit::exactla::LinearMap, v: &[Scalar]) -> Vector {
    m.apply(v)
}

/// The connecting map `HL2(h) -> a/[a,g]` by exhaustive search over `F_2`:
/// lift `δ_h(z)` through `g∧g -> h∧h`, apply `θ_g`, pull back into `a`.
/// Returns the images of the `HL2(h)` basis.
pub fn brute_force_connecting(ext: &Extension, six: &SixTerm) -> Vec<Vector> {
    let right = &six.row.right;
    let theta_g = &six.g_side.theta;
    let a = ext.ideal.space();
    let mut out = Vec::new();
    for z in six.h_side.ker_d.basis() {
        let x = matvec(&six.h_side.delta.map, z);
        let y = f2_vectors(right.domain_dim())
            .find(|y| matvec(right, y) == x)
            .expect("g∧g -> h∧h is onto");
        let t = matvec(theta_g, &y);
        let coords = f2_vectors(a.dim())
            .find(|c| {
                let mut v = vec![FieldSpec::Prime(2).zero(); a.ambient_dim()];
                for (ci, b) in c.iter().zip(a.basis()) {
                    for (vi, bi) in v.iter_mut().zip(b) {
                        *vi = &*vi + &(ci * bi);
                    }
                }
                v == t
            })
            .expect("θ_g of a lift lies in a");
        out.push(six.coker_alpha.project(&coords));
    }
    assert!(out.iter().all(|v| v.len() == six.coker_alpha.dim()));
    out
}
