//! Symmetric-group characters via the Murnaghan-Nakayama rim-hook
//! recursion, with a process-wide memo cache, plus the Kontsevich character
//! and the dimension formula for the orthogonal components H_lambda.

use super::{mobius, CycleType, Partition};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::HashMap;
use std::io::{BufRead, Write};
use std::sync::{Mutex, OnceLock};

/// Size of the conjugacy class with cycle type `rho` in the symmetric group
/// on |rho| letters: n! / prod(a^m_a * m_a!).
pub fn class_size(rho: &CycleType) -> BigInt {
    let n = rho.size();
    let mut num = factorial(n);
    for (part, mult) in rho.multiplicities() {
        let mut d = factorial(mult);
        d *= BigInt::from(part).pow(mult);
        num = num / d;
    }
    num
}

/// n! as an exact integer.
pub fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for i in 2..=n as u64 {
        f *= i;
    }
    f
}

fn mn_cache() -> &'static Mutex<HashMap<(u128, u128), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(u128, u128), i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Irreducible character of the symmetric group: chi_lambda(rho).
///
/// Uses the hook-length formula on the identity class and the
/// Murnaghan-Nakayama recursion elsewhere. Values are memoized process-wide;
/// the cache is safe for concurrent callers.
pub fn sn_character(lambda: &Partition, rho: &CycleType) -> Result<i64> {
    if lambda.size() != rho.size() {
        return Err(Error::DimensionMismatch(format!(
            "character of [{lambda}] on class [{rho}]: {} boxes vs {} letters",
            lambda.size(),
            rho.size()
        )));
    }
    Ok(mn(lambda, rho.parts()))
}

fn mn(lambda: &Partition, rho: &[u32]) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    // All-ones tail: the remaining value is the dimension of lambda.
    if rho[0] == 1 {
        return hook_dimension(lambda)
            .to_i64()
            .expect("dimension exceeds i64");
    }
    let key = (lambda.pack(), pack_parts(rho));
    if let Some(&v) = mn_cache().lock().unwrap().get(&key) {
        return v;
    }
    let t = rho[0];
    let rest = &rho[1..];
    // Beta-set formulation: first-column hook lengths of lambda.
    let h = lambda.height() as usize;
    let beta: Vec<u32> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (h - 1 - i) as u32)
        .collect();
    let mut total: i64 = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < t {
            continue;
        }
        let nb = b - t;
        if beta.contains(&nb) {
            continue;
        }
        // Height of the strip = number of beta entries strictly between nb and b.
        let ht = beta.iter().filter(|&&x| x > nb && x < b).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        // Convert back to a partition, dropping trailing zeros of the staircase.
        let mut parts = Vec::new();
        let m = nbeta.len();
        for (j, &x) in nbeta.iter().enumerate() {
            let off = (m - 1 - j) as u32;
            if x > off {
                parts.push(x - off);
            }
        }
        let sub = Partition::new(parts);
        let term = mn(&sub, rest);
        total += if ht % 2 == 0 { term } else { -term };
    }
    mn_cache().lock().unwrap().insert(key, total);
    total
}

fn pack_parts(parts: &[u32]) -> u128 {
    let mut key: u128 = 0;
    for &p in parts {
        key = (key << 5) | p as u128;
    }
    key
}

/// Dimension of the irreducible representation of S_n indexed by `lambda`,
/// by the hook-length formula.
pub fn hook_dimension(lambda: &Partition) -> BigInt {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut denom = BigInt::one();
    for (i, &p) in lambda.parts().iter().enumerate() {
        for j in 0..p as usize {
            let arm = p - 1 - j as u32;
            let leg = conj.parts()[j] - 1 - i as u32;
            denom *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(n) / denom
}

/// The character chi_2k of S_{2k+2} defined by Kontsevich:
/// (2k)! on the identity, ±(b-1)! a^{b-1} mu(a) on the classes 1^1 a^b and
/// a^b with a ≥ 2, and zero elsewhere.
///
/// The identity rule is authoritative where a class symbol would overlap it;
/// the a^b families apply only for a ≥ 2.
pub fn kontsevich_character(k: u32, rho: &CycleType) -> Result<BigInt> {
    let n = 2 * k + 2;
    if rho.size() != n {
        return Err(Error::DimensionMismatch(format!(
            "Kontsevich character of degree {n} evaluated on class of size {}",
            rho.size()
        )));
    }
    let mults = rho.multiplicities();
    // Identity class.
    if mults.len() == 1 && mults[0].0 == 1 {
        return Ok(factorial(2 * k));
    }
    // Class a^b with a >= 2.
    if mults.len() == 1 {
        let (a, b) = mults[0];
        return Ok(-kont_ab(a, b));
    }
    // Class 1^1 a^b with a >= 2.
    if mults.len() == 2 && mults[1] == (1, 1) {
        let (a, b) = mults[0];
        return Ok(kont_ab(a, b));
    }
    Ok(BigInt::zero())
}

fn kont_ab(a: u32, b: u32) -> BigInt {
    factorial(b - 1) * BigInt::from(a).pow(b - 1) * BigInt::from(mobius(a))
}

/// Classes of S_{2k+2} on which chi_2k is nonzero, paired with its values.
pub(crate) fn kontsevich_support(k: u32) -> Vec<(CycleType, BigInt)> {
    let n = 2 * k + 2;
    let mut out = Vec::new();
    let identity = Partition::new(vec![1; n as usize]);
    out.push((identity, factorial(2 * k)));
    for a in 2..=n {
        // a^b with ab = n
        if n % a == 0 && mobius(a) != 0 {
            let b = n / a;
            let rho = Partition::new(vec![a; b as usize]);
            out.push((rho, -kont_ab(a, b)));
        }
        // 1^1 a^b with ab = n - 1
        if (n - 1) % a == 0 && mobius(a) != 0 {
            let b = (n - 1) / a;
            let mut parts = vec![a; b as usize];
            parts.push(1);
            let rho = Partition::new(parts);
            out.push((rho, kont_ab(a, b)));
        }
    }
    out
}

/// Dimension of the orthogonal component H_lambda of h_{g,1}(2k)^Sp:
/// the inner product of chi_2k with the irreducible character of the
/// double-floor diagram lambda^delta, summed over the support of chi_2k.
pub fn dim_h_lambda(lambda: &Partition, k: u32) -> Result<u64> {
    if lambda.size() != k + 1 {
        return Err(Error::DimensionMismatch(format!(
            "H_lambda of degree 2k={}: lambda [{lambda}] must have {} boxes",
            2 * k,
            k + 1
        )));
    }
    let delta = lambda.double_floor();
    let mut sum = BigInt::zero();
    for (rho, chi2k) in kontsevich_support(k) {
        let chi = sn_character(&delta, &rho)?;
        sum += class_size(&rho) * chi2k * BigInt::from(chi);
    }
    let order = factorial(2 * k + 2);
    let (q, r) = sum.div_rem(&order);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::InternalInconsistency(format!(
            "dim H_[{lambda}] at 2k={} is not a nonnegative integer",
            2 * k
        )));
    }
    Ok(q.to_u64().expect("dimension exceeds u64"))
}

/// Loads memoized character values from a simple text cache file
/// (one record per line: `n lambda rho value`, partitions as dotted part
/// lists, `-` for the empty partition). Missing or malformed files are
/// ignored; the cache is purely an accelerator.
pub fn load_character_cache(path: &std::path::Path) -> usize {
    let Ok(file) = std::fs::File::open(path) else {
        return 0;
    };
    let reader = std::io::BufReader::new(file);
    let mut loaded = 0;
    let mut cache = mn_cache().lock().unwrap();
    for line in reader.lines().map_while(|l| l.ok()) {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 4 {
            continue;
        }
        let (Some(lam), Some(rho)) = (parse_parts(fields[1]), parse_parts(fields[2])) else {
            continue;
        };
        let Ok(value) = fields[3].parse::<i64>() else {
            continue;
        };
        cache.insert((pack_parts(&lam), pack_parts(&rho)), value);
        loaded += 1;
    }
    loaded
}

/// Writes the current character memo to `path` in the cache format.
pub fn save_character_cache(path: &std::path::Path) -> std::io::Result<usize> {
    let cache = mn_cache().lock().unwrap();
    let mut records: Vec<(Vec<u32>, Vec<u32>, i64)> = cache
        .iter()
        .map(|(&(l, r), &v)| (unpack_parts(l), unpack_parts(r), v))
        .collect();
    records.sort();
    let mut file = std::io::BufWriter::new(std::fs::File::create(path)?);
    for (lam, rho, v) in &records {
        let n: u32 = lam.iter().sum();
        writeln!(file, "{} {} {} {}", n, show_parts(lam), show_parts(rho), v)?;
    }
    Ok(records.len())
}

fn parse_parts(s: &str) -> Option<Vec<u32>> {
    if s == "-" {
        return Some(Vec::new());
    }
    s.split('.').map(|t| t.parse::<u32>().ok()).collect()
}

fn show_parts(parts: &[u32]) -> String {
    if parts.is_empty() {
        return "-".into();
    }
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(".")
}

fn unpack_parts(mut key: u128) -> Vec<u32> {
    let mut parts = Vec::new();
    while key != 0 {
        parts.push((key & 31) as u32);
        key >>= 5;
    }
    parts.reverse();
    parts
}
