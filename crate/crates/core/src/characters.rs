//! Irreducible characters of the symmetric group.
//!
//! Values come from the Murnaghan-Nakayama rule on beta-sets, memoized on
//! (shape, remaining cycle type). Whole tables are memoized in memory and,
//! through [`CharacterCache`], persisted as one JSON file per `n`.

use std::collections::HashMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::partition::{enumerate_partitions, Partition, PartitionError};
use crate::scalar::Rational;

/// Largest `n` for which full character tables are built.
pub const CHARACTER_TABLE_BOUND: usize = 10;

/// Environment variable that overrides the cache directory.
pub const CACHE_ENV: &str = "QHURWITZ_CACHE";

#[derive(Debug, Error)]
pub enum CharacterError {
    #[error("partitions of different weight: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("n exceeds character table bound (n = {n}, bound {bound})")]
    OverBound { n: usize, bound: usize },
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("cache i/o at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

/// Border-strip recursion with a memo table.
#[derive(Default)]
struct MurnaghanNakayama {
    memo: HashMap<(Partition, Partition), i64>,
}

impl MurnaghanNakayama {
    fn value(&mut self, lambda: &Partition, mu: &Partition) -> i64 {
        if mu.is_empty() {
            return i64::from(lambda.is_empty());
        }
        let key = (lambda.clone(), mu.clone());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let k = mu.parts()[0];
        let rest = Partition::from_parts(mu.parts()[1..].to_vec());
        let mut total = 0i64;
        for (shape, sign) in remove_border_strips(lambda, k) {
            total += sign * self.value(&shape, &rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// All shapes obtained by removing a border strip of size `k`, with the
/// sign `(-1)^{height}`.
fn remove_border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, i64)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .collect();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        out.push((Partition::from_parts(parts), sign));
    }
    out
}

/// `χ_λ(μ)`.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<i64, CharacterError> {
    if lambda.weight() != mu.weight() {
        return Err(CharacterError::WeightMismatch(lambda.weight(), mu.weight()));
    }
    Ok(MurnaghanNakayama::default().value(lambda, mu))
}

/// `φ_λ(μ) = h_λ χ_λ(μ) / z_μ`, the eigenvalue of `C_μ` on `F_λ`.
pub fn central_character(lambda: &Partition, mu: &Partition) -> Result<Rational, CharacterError> {
    let chi = character(lambda, mu)?;
    Ok(Rational::new(lambda.hook_product() * BigInt::from(chi), mu.z()))
}

/// Character table of `S_n`.
///
/// Rows are irreps in canonical order (`(n)` first); columns are classes
/// starting from the identity class `(1^n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub n: usize,
    pub classes: Vec<Partition>,
    pub irreps: Vec<Partition>,
    pub chi: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: usize) -> Result<CharacterTable, CharacterError> {
        if n > CHARACTER_TABLE_BOUND {
            return Err(CharacterError::OverBound {
                n,
                bound: CHARACTER_TABLE_BOUND,
            });
        }
        let irreps = enumerate_partitions(n)?;
        let mut classes = irreps.clone();
        classes.reverse();
        let chi = irreps
            .par_iter()
            .map(|lambda| {
                let mut mn = MurnaghanNakayama::default();
                classes.iter().map(|mu| mn.value(lambda, mu)).collect()
            })
            .collect();
        Ok(CharacterTable {
            n,
            classes,
            irreps,
            chi,
        })
    }

    fn irrep_index(&self, lambda: &Partition) -> Option<usize> {
        self.irreps.binary_search(lambda).ok()
    }

    fn class_index(&self, mu: &Partition) -> Option<usize> {
        self.classes.binary_search_by(|c| mu.cmp(c)).ok()
    }

    /// Table lookup; `None` if either partition is not of weight `n`.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> Option<i64> {
        Some(self.chi[self.irrep_index(lambda)?][self.class_index(mu)?])
    }

    /// Lookup for partitions known to have weight `n`.
    pub fn value(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.get(lambda, mu)
            .unwrap_or_else(|| panic!("{lambda} or {mu} is not a partition of {}", self.n))
    }

    pub fn central_character(&self, lambda: &Partition, mu: &Partition) -> Rational {
        Rational::new(
            lambda.hook_product() * BigInt::from(self.value(lambda, mu)),
            mu.z(),
        )
    }

    /// Structural check used when reading a cached file.
    fn is_consistent(&self) -> bool {
        let Ok(expected) = enumerate_partitions(self.n) else {
            return false;
        };
        let mut classes = expected.clone();
        classes.reverse();
        self.irreps == expected
            && self.classes == classes
            && self.chi.len() == expected.len()
            && self.chi.iter().all(|row| row.len() == expected.len())
    }
}

fn memory_cache() -> &'static Mutex<HashMap<usize, Arc<CharacterTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// In-process memoized table for `n ≤ 10`.
pub fn char_table(n: usize) -> Result<Arc<CharacterTable>, CharacterError> {
    if let Some(t) = memory_cache().lock().expect("cache lock").get(&n) {
        return Ok(Arc::clone(t));
    }
    let table = Arc::new(CharacterTable::compute(n)?);
    memory_cache()
        .lock()
        .expect("cache lock")
        .entry(n)
        .or_insert_with(|| Arc::clone(&table));
    Ok(table)
}

/// Whether a table came from disk or was computed (and then written).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CacheStatus {
    Hit,
    Miss,
}

/// On-disk store of character tables, one `chars-<n>.json` per `n`.
#[derive(Clone, Debug)]
pub struct CharacterCache {
    dir: PathBuf,
}

impl CharacterCache {
    pub fn new(dir: impl Into<PathBuf>) -> CharacterCache {
        CharacterCache { dir: dir.into() }
    }

    /// Explicit directory, else `$QHURWITZ_CACHE`, else the user cache dir.
    pub fn resolve(explicit: Option<&Path>) -> CharacterCache {
        if let Some(d) = explicit {
            return CharacterCache::new(d);
        }
        if let Some(d) = std::env::var_os(CACHE_ENV).filter(|d| !d.is_empty()) {
            return CharacterCache::new(d);
        }
        let base = std::env::var_os("XDG_CACHE_HOME")
            .map(PathBuf::from)
            .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
            .unwrap_or_else(std::env::temp_dir);
        CharacterCache::new(base.join("qhurwitz"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, n: usize) -> PathBuf {
        self.dir.join(format!("chars-{n}.json"))
    }

    fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CharacterError + '_ {
        move |source| CharacterError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    /// Read a cached table; unreadable or inconsistent files count as absent.
    pub fn load(&self, n: usize) -> Option<CharacterTable> {
        let text = fs::read_to_string(self.path_for(n)).ok()?;
        let table: CharacterTable = serde_json::from_str(&text).ok()?;
        (table.n == n && table.is_consistent()).then_some(table)
    }

    pub fn store(&self, table: &CharacterTable) -> Result<PathBuf, CharacterError> {
        fs::create_dir_all(&self.dir).map_err(Self::io_err(&self.dir))?;
        let path = self.path_for(table.n);
        let tmp = self.dir.join(format!(".chars-{}.json.tmp", table.n));
        let text = serde_json::to_string(table).expect("table serializes");
        fs::write(&tmp, text).map_err(Self::io_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(Self::io_err(&path))?;
        Ok(path)
    }

    pub fn get(&self, n: usize) -> Result<(CharacterTable, CacheStatus), CharacterError> {
        if let Some(t) = self.load(n) {
            return Ok((t, CacheStatus::Hit));
        }
        let table = CharacterTable::compute(n)?;
        self.store(&table)?;
        Ok((table, CacheStatus::Miss))
    }

    /// Cached `n` values, ascending.
    pub fn list(&self) -> Vec<usize> {
        let Ok(entries) = fs::read_dir(&self.dir) else {
            return Vec::new();
        };
        let mut ns: Vec<usize> = entries
            .filter_map(|e| {
                let name = e.ok()?.file_name().into_string().ok()?;
                name.strip_prefix("chars-")?
                    .strip_suffix(".json")?
                    .parse()
                    .ok()
            })
            .collect();
        ns.sort_unstable();
        ns
    }

    /// Delete all cached tables; returns how many files were removed.
    pub fn clear(&self) -> Result<usize, CharacterError> {
        let mut removed = 0;
        for n in self.list() {
            let path = self.path_for(n);
            fs::remove_file(&path).map_err(Self::io_err(&path))?;
            removed += 1;
        }
        Ok(removed)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::factorial;
    use num_traits::{One, Zero};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        for mu in enumerate_partitions(5).unwrap() {
            assert_eq!(character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert_eq!(character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert!(character(&p(&[2]), &p(&[2, 1])).is_err());
    }

    #[test]
    fn small_tables() {
        let t1 = CharacterTable::compute(1).unwrap();
        assert_eq!(t1.chi, vec![vec![1]]);
        let t2 = CharacterTable::compute(2).unwrap();
        assert_eq!(t2.classes, vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(t2.chi, vec![vec![1, 1], vec![1, -1]]);
        let t3 = CharacterTable::compute(3).unwrap();
        for (lambda, row) in t3.irreps.iter().zip(&t3.chi) {
            let s: BigInt = t3
                .classes
                .iter()
                .zip(row)
                .map(|(mu, &x)| mu.class_size() * x)
                .sum();
            if lambda.parts() == [3] {
                assert_eq!(s, factorial(3));
            } else {
                assert!(s.is_zero());
            }
        }
    }

    #[test]
    fn first_column_is_dimension() {
        for n in 0..=8 {
            let t = char_table(n).unwrap();
            for (lambda, row) in t.irreps.iter().zip(&t.chi) {
                assert_eq!(BigInt::from(row[0]), lambda.dimension());
            }
        }
    }

    #[test]
    fn orthogonality_relations() {
        for n in 1..=8 {
            let t = char_table(n).unwrap();
            for a in &t.irreps {
                for b in &t.irreps {
                    let s: Rational = t
                        .classes
                        .iter()
                        .map(|mu| {
                            Rational::new(BigInt::from(t.value(a, mu) * t.value(b, mu)), mu.z())
                        })
                        .sum();
                    let expected = if a == b { Rational::one() } else { Rational::zero() };
                    assert_eq!(s, expected, "rows {a} {b}");
                }
            }
            for mu in &t.classes {
                for nu in &t.classes {
                    let s: i64 = t.irreps.iter().map(|l| t.value(l, mu) * t.value(l, nu)).sum();
                    let expected = if mu == nu { mu.z() } else { BigInt::zero() };
                    assert_eq!(BigInt::from(s), expected, "columns {mu} {nu}");
                }
            }
        }
    }

    #[test]
    fn central_character_examples() {
        for lambda in enumerate_partitions(4).unwrap() {
            assert!(central_character(&lambda, &Partition::ones(4)).unwrap().is_one());
        }
        assert!(central_character(&p(&[2, 1]), &p(&[2, 1])).unwrap().is_zero());
        assert!(central_character(&p(&[2]), &p(&[2])).unwrap().is_one());
    }

    #[test]
    fn table_bound() {
        assert!(matches!(
            CharacterTable::compute(11),
            Err(CharacterError::OverBound { n: 11, bound: 10 })
        ));
    }

    #[test]
    fn disk_cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CharacterCache::new(dir.path());
        let (t, status) = cache.get(4).unwrap();
        assert_eq!(status, CacheStatus::Miss);
        let (again, status) = cache.get(4).unwrap();
        assert_eq!(status, CacheStatus::Hit);
        assert_eq!(t, again);
        assert_eq!(cache.list(), vec![4]);
        let text = fs::read_to_string(cache.path_for(4)).unwrap();
        assert!(text.starts_with("{\"n\":4,\"classes\":[[1,1,1,1],"));
        fs::write(cache.path_for(4), "not json").unwrap();
        assert_eq!(cache.get(4).unwrap().1, CacheStatus::Miss);
        assert_eq!(cache.clear().unwrap(), 1);
        assert!(cache.list().is_empty());
    }
}
