//! Residue arithmetic modulo `rn`: q-cyclotomic cosets on `1 + rZ_rn`,
//! the scaling actions `mu_s`, defining-set duality and the LCD tests.
//!
//! Everything here is integer arithmetic; no field is involved. Residues are
//! canonical integers in `[0, rn)` and sets are kept sorted.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

/// Parameters of a family of `lambda`-constacyclic codes of length `n` over
/// GF(p^e), where `lambda` has multiplicative order `r`, together with the
/// Galois duality parameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CosetContext {
    p: u64,
    e: usize,
    k: usize,
    n: u64,
    r: u64,
    rn: u64,
    /// `q mod rn`.
    q_mod: u64,
}

impl CosetContext {
    pub fn new(p: u64, e: usize, k: usize, n: u64, r: u64) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        if k >= e {
            return Err(Error::InvalidContext(format!("k = {k} must be < e = {e}")));
        }
        if n == 0 || r == 0 {
            return Err(Error::InvalidContext("n and r must be positive".into()));
        }
        if arith::gcd(n, p) != 1 {
            return Err(Error::NotCoprime { n, p });
        }
        if arith::pow_mod(p, e as u64, r) != 1 % r {
            return Err(Error::InvalidContext(format!(
                "r = {r} does not divide q - 1 = {p}^{e} - 1"
            )));
        }
        let rn = r
            .checked_mul(n)
            .ok_or_else(|| Error::InvalidContext("rn overflows".into()))?;
        Ok(CosetContext {
            p,
            e,
            k,
            n,
            r,
            rn,
            q_mod: arith::pow_mod(p, e as u64, rn),
        })
    }

    /// Hermitian setting: `e = 2a`, `k = a`.
    pub fn hermitian(p: u64, a: usize, n: u64, r: u64) -> Result<Self> {
        CosetContext::new(p, 2 * a, a, n, r)
    }

    pub fn with_galois(&self, k: usize) -> Result<Self> {
        CosetContext::new(self.p, self.e, k, self.n, self.r)
    }

    pub fn p(&self) -> u64 {
        self.p
    }
    pub fn e(&self) -> usize {
        self.e
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn n(&self) -> u64 {
        self.n
    }
    pub fn r(&self) -> u64 {
        self.r
    }
    pub fn rn(&self) -> u64 {
        self.rn
    }

    /// `q mod rn`.
    pub fn q_mod(&self) -> u64 {
        self.q_mod
    }

    /// `-p^k mod rn`, the multiplier of the LCD test.
    pub fn minus_pk(&self) -> u64 {
        (self.rn - arith::pow_mod(self.p, self.k as u64, self.rn)) % self.rn
    }

    /// `-p^{e-k} mod rn`, the multiplier of defining-set duality.
    pub fn minus_p_conj(&self) -> u64 {
        (self.rn - arith::pow_mod(self.p, (self.e - self.k) as u64, self.rn)) % self.rn
    }

    /// Multiplicative order of `q` modulo `rn`: the degree of the splitting field.
    pub fn splitting_degree(&self) -> u64 {
        arith::mult_order_mod(self.q_mod, self.rn).expect("q is a unit modulo rn")
    }

    pub fn in_class(&self, x: u64) -> bool {
        x < self.rn && x % self.r == 1 % self.r
    }

    /// The residues `1 + ri mod rn` for `i = 0..n`, ascending.
    pub fn residues(&self) -> Vec<u64> {
        let mut v: Vec<u64> = (0..self.n).map(|i| (1 + self.r * i) % self.rn).collect();
        v.sort_unstable();
        v
    }

    /// Index `i` with `1 + ri = x (mod rn)`.
    pub fn index_of(&self, x: u64) -> Option<u64> {
        if !self.in_class(x) {
            return None;
        }
        Some(((x + self.rn - 1 % self.rn) % self.rn) / self.r)
    }

    /// The q-cyclotomic coset of `x`, sorted.
    pub fn coset_of(&self, x: u64) -> Vec<u64> {
        let mut c = vec![x % self.rn];
        let mut y = arith::mul_mod(x, self.q_mod, self.rn);
        while y != c[0] {
            c.push(y);
            y = arith::mul_mod(y, self.q_mod, self.rn);
        }
        c.sort_unstable();
        c
    }

    /// Partition of `1 + rZ_rn` into q-cyclotomic cosets, ordered by their
    /// smallest member.
    pub fn cyclotomic_cosets(&self) -> Vec<Vec<u64>> {
        let mut seen = vec![false; self.rn as usize];
        let mut out = Vec::new();
        for x in self.residues() {
            if seen[x as usize] {
                continue;
            }
            let c = self.coset_of(x);
            for &y in &c {
                seen[y as usize] = true;
            }
            out.push(c);
        }
        out
    }

    /// Whether `s` maps `1 + rZ_rn` into itself.
    fn preserves_class(&self, s: u64) -> bool {
        s % self.r == 1 % self.r
    }
}

/// A q-closed subset of `1 + rZ_rn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiningSet {
    ctx: CosetContext,
    residues: Vec<u64>,
}

/// JSON shape `{"rn": .., "r": .., "residues": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefiningSetRecord {
    pub rn: u64,
    pub r: u64,
    pub residues: Vec<u64>,
}

impl DefiningSet {
    pub fn new(ctx: CosetContext, residues: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut residues: Vec<u64> = residues.into_iter().collect();
        residues.sort_unstable();
        residues.dedup();
        if let Some(&bad) = residues.iter().find(|&&x| !ctx.in_class(x)) {
            return Err(Error::ResidueOutOfClass(bad));
        }
        let set = DefiningSet { ctx, residues };
        if set.scaled_unchecked(ctx.q_mod) != set.residues {
            return Err(Error::NotClosed);
        }
        Ok(set)
    }

    pub fn empty(ctx: CosetContext) -> Self {
        DefiningSet {
            ctx,
            residues: Vec::new(),
        }
    }

    pub fn full(ctx: CosetContext) -> Self {
        DefiningSet {
            residues: ctx.residues(),
            ctx,
        }
    }

    /// Smallest q-closed set containing the given residues.
    pub fn closure_of(ctx: CosetContext, seeds: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut all = Vec::new();
        for x in seeds {
            if !ctx.in_class(x % ctx.rn) {
                return Err(Error::ResidueOutOfClass(x));
            }
            all.extend(ctx.coset_of(x));
        }
        DefiningSet::new(ctx, all)
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.residues.len() as u64 == self.ctx.n
    }

    pub fn contains(&self, x: u64) -> bool {
        self.residues.binary_search(&x).is_ok()
    }

    /// Same residues, read under Galois parameter `k`.
    pub fn with_galois(&self, k: usize) -> Result<Self> {
        Ok(DefiningSet {
            ctx: self.ctx.with_galois(k)?,
            residues: self.residues.clone(),
        })
    }

    /// `(1 + rZ_rn) \ P`.
    pub fn complement(&self) -> DefiningSet {
        DefiningSet {
            ctx: self.ctx,
            residues: self
                .ctx
                .residues()
                .into_iter()
                .filter(|x| !self.contains(*x))
                .collect(),
        }
    }

    fn scaled_unchecked(&self, s: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .residues
            .iter()
            .map(|&x| arith::mul_mod(x, s, self.ctx.rn))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn record(&self) -> DefiningSetRecord {
        DefiningSetRecord {
            rn: self.ctx.rn,
            r: self.ctx.r,
            residues: self.residues.clone(),
        }
    }

    pub fn from_record(ctx: CosetContext, rec: &DefiningSetRecord) -> Result<Self> {
        if rec.rn != ctx.rn || rec.r != ctx.r {
            return Err(Error::InvalidContext(format!(
                "record has rn = {}, r = {} but context has rn = {}, r = {}",
                rec.rn, rec.r, ctx.rn, ctx.r
            )));
        }
        DefiningSet::new(ctx, rec.residues.iter().copied())
    }
}

/// `mu_s`: elementwise `s * x mod rn`, sorted. `s` may be negative.
pub fn act_scale(set: &[u64], s: i64, rn: u64) -> Result<Vec<u64>> {
    let s = arith::reduce_signed(s, rn);
    if arith::gcd(s, rn) != 1 {
        return Err(Error::NotAUnit {
            s: s as i64,
            modulus: rn,
        });
    }
    let mut v: Vec<u64> = set.iter().map(|&x| arith::mul_mod(x, s, rn)).collect();
    v.sort_unstable();
    Ok(v)
}

/// Defining set of the Galois dual: `-p^{e-k} * ((1 + rZ_rn) \ P)`.
///
/// Requires `-p^{e-k}` to preserve `1 + rZ_rn`, i.e. `lambda^{1+p^{e-k}} = 1`.
pub fn dual_defining_set(set: &DefiningSet) -> Result<DefiningSet> {
    let ctx = set.ctx;
    let s = ctx.minus_p_conj();
    if !ctx.preserves_class(s) {
        return Err(Error::ClassNotPreserved { s, modulus: ctx.rn });
    }
    Ok(DefiningSet {
        ctx,
        residues: set.complement().scaled_unchecked(s),
    })
}

/// `-p^k P = P`.
pub fn is_lcd_defining_set(set: &DefiningSet) -> bool {
    set.scaled_unchecked(set.ctx.minus_pk()) == set.residues
}

/// Smallest `j >= 1` with `p^{ej-k} = -1 (mod rn)`.
pub fn all_lcd_exponent(ctx: &CosetContext) -> Option<u64> {
    let period = ctx.splitting_degree();
    let target = (ctx.rn - 1 % ctx.rn) % ctx.rn;
    (1..=period).find(|&j| {
        let exp = ctx.e as u64 * j - ctx.k as u64;
        arith::pow_mod(ctx.p, exp, ctx.rn) == target
    })
}

/// Whether `-p^k` lies in the q-coset of 1.
pub fn q1_fixed_test(ctx: &CosetContext) -> bool {
    ctx.coset_of(1 % ctx.rn).contains(&ctx.minus_pk())
}

/// Orbits of `mu_{-p^k}` acting on the q-cyclotomic cosets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitCensus {
    pub cosets: Vec<Vec<u64>>,
    /// Indices of cosets with `-p^k Q = Q`.
    pub fixed: Vec<usize>,
    /// Index pairs `(Q, Q')` swapped by the action.
    pub pairs: Vec<(usize, usize)>,
    /// Orbits of length three or more. Always empty in the Hermitian setting,
    /// where the action squares to multiplication by `q`.
    pub longer: Vec<Vec<usize>>,
}

impl OrbitCensus {
    pub fn t(&self) -> usize {
        self.fixed.len()
    }

    pub fn h(&self) -> usize {
        self.pairs.len()
    }

    pub fn orbit_count(&self) -> usize {
        self.fixed.len() + self.pairs.len() + self.longer.len()
    }

    /// All orbits as lists of coset indices, ordered by smallest index.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self
            .fixed
            .iter()
            .map(|&i| vec![i])
            .chain(self.pairs.iter().map(|&(a, b)| vec![a, b]))
            .chain(self.longer.iter().cloned())
            .collect();
        out.sort_by_key(|o| *o.iter().min().expect("orbits are nonempty"));
        out
    }

    /// Number of `-p^k`-stable defining sets, `2^(orbits)`.
    pub fn stable_set_count(&self) -> u128 {
        1u128 << self.orbit_count()
    }

    /// Stable sets other than the full set (whose code is zero).
    pub fn lcd_code_count(&self) -> u128 {
        self.stable_set_count() - 1
    }
}

pub fn stable_orbit_census(ctx: &CosetContext) -> Result<OrbitCensus> {
    let s = ctx.minus_pk();
    if !ctx.preserves_class(s) {
        return Err(Error::ClassNotPreserved { s, modulus: ctx.rn });
    }
    let cosets = ctx.cyclotomic_cosets();
    let mut owner = vec![usize::MAX; ctx.rn as usize];
    for (i, c) in cosets.iter().enumerate() {
        for &x in c {
            owner[x as usize] = i;
        }
    }
    let image: Vec<usize> = cosets
        .iter()
        .map(|c| owner[arith::mul_mod(c[0], s, ctx.rn) as usize])
        .collect();
    let mut visited = vec![false; cosets.len()];
    let (mut fixed, mut pairs, mut longer) = (Vec::new(), Vec::new(), Vec::new());
    for start in 0..cosets.len() {
        if visited[start] {
            continue;
        }
        let mut cycle = vec![start];
        visited[start] = true;
        let mut j = image[start];
        while j != start {
            visited[j] = true;
            cycle.push(j);
            j = image[j];
        }
        match cycle.len() {
            1 => fixed.push(start),
            2 => pairs.push((cycle[0], cycle[1])),
            _ => longer.push(cycle),
        }
    }
    Ok(OrbitCensus {
        cosets,
        fixed,
        pairs,
        longer,
    })
}

/// Every `-p^k`-stable q-closed defining set, sorted by residues.
pub fn stable_defining_sets(ctx: &CosetContext, max_sets: u128) -> Result<Vec<DefiningSet>> {
    let census = stable_orbit_census(ctx)?;
    let total = census.stable_set_count();
    if total > max_sets {
        return Err(Error::BudgetExceeded(format!(
            "{total} stable defining sets exceed the limit of {max_sets}"
        )));
    }
    let orbits: Vec<Vec<u64>> = census
        .orbits()
        .into_iter()
        .map(|o| o.iter().flat_map(|&i| census.cosets[i].iter().copied()).collect())
        .collect();
    let mut out: Vec<DefiningSet> = (0..total as u64)
        .map(|mask| {
            let mut residues: Vec<u64> = orbits
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, o)| o.iter().copied())
                .collect();
            residues.sort_unstable();
            DefiningSet {
                ctx: *ctx,
                residues,
            }
        })
        .collect();
    out.sort_by(|a, b| a.residues.cmp(&b.residues));
    Ok(out)
}

/// Every q-closed defining set (all unions of cosets), sorted by residues.
pub fn all_defining_sets(ctx: &CosetContext, max_sets: u128) -> Result<Vec<DefiningSet>> {
    let cosets = ctx.cyclotomic_cosets();
    if cosets.len() >= 127 || 1u128 << cosets.len() > max_sets {
        return Err(Error::BudgetExceeded(format!(
            "2^{} defining sets exceed the limit of {max_sets}",
            cosets.len()
        )));
    }
    let mut out: Vec<DefiningSet> = (0..1u64 << cosets.len())
        .map(|mask| {
            let mut residues: Vec<u64> = cosets
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .flat_map(|(_, c)| c.iter().copied())
                .collect();
            residues.sort_unstable();
            DefiningSet {
                ctx: *ctx,
                residues,
            }
        })
        .collect();
    out.sort_by(|a, b| a.residues.cmp(&b.residues));
    Ok(out)
}

/// One plus the longest cyclic run of consecutive indices `i` (mod n) with
/// `1 + ri` in the set.
pub fn bch_lower_bound(set: &DefiningSet) -> Result<usize> {
    if set.is_full() {
        return Err(Error::FullDefiningSet);
    }
    let n = set.ctx.n as usize;
    let mut present = vec![false; n];
    for &x in &set.residues {
        present[set.ctx.index_of(x).expect("validated residue") as usize] = true;
    }
    // Start scanning just after an absent index so runs never wrap twice.
    let start = present.iter().position(|&b| !b).expect("set is not full");
    let (mut best, mut run) = (0usize, 0usize);
    for step in 1..=n {
        if present[(start + step) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Ok(best + 1)
}

/// Whether exactly one unit `u != 1` modulo `rn` satisfies `u^2 = 1`.
pub fn unique_order2_unit(rn: u64) -> bool {
    (2..rn)
        .filter(|&u| arith::gcd(u, rn) == 1 && arith::mul_mod(u, u, rn) == 1)
        .count()
        == 1
}

/// For even `r = 2^{b1} r'` and even `n = 2^{b2} n'`: whether `r | p^a + 1`
/// and `2^{b1+b2} | p^a + 1`.
pub fn hermitian_necessary_check(p: u64, a: u32, r: u64, n: u64) -> Result<bool> {
    let (b1, _) = arith::split_two_power(r);
    let (b2, _) = arith::split_two_power(n);
    if r == 0 || n == 0 || b1 == 0 || b2 == 0 {
        return Err(Error::HypothesesNotMet(format!(
            "r = {r} and n = {n} must both be even"
        )));
    }
    if arith::gcd(n, p) != 1 {
        return Err(Error::NotCoprime { n, p });
    }
    let pa1 = arith::checked_pow(p, a as usize)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::HypothesesNotMet("p^a + 1 overflows".into()))?;
    let two_power = 1u64
        .checked_shl(b1 + b2)
        .ok_or_else(|| Error::HypothesesNotMet("2^(b1+b2) overflows".into()))?;
    Ok(pa1 % r == 0 && pa1 % two_power == 0)
}

/// Smallest q-closed superset of `seed` that is stable under `-p^k`.
pub fn lcd_closure(seed: &DefiningSet) -> Result<DefiningSet> {
    let ctx = seed.ctx;
    let s = ctx.minus_pk();
    if !ctx.preserves_class(s) {
        return Err(Error::ClassNotPreserved { s, modulus: ctx.rn });
    }
    let mut members = vec![false; ctx.rn as usize];
    let mut stack: Vec<u64> = seed.residues.clone();
    while let Some(x) = stack.pop() {
        if members[x as usize] {
            continue;
        }
        members[x as usize] = true;
        stack.push(arith::mul_mod(x, s, ctx.rn));
        stack.push(arith::mul_mod(x, ctx.q_mod, ctx.rn));
    }
    Ok(DefiningSet {
        ctx,
        residues: (0..ctx.rn).filter(|&x| members[x as usize]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex314() -> CosetContext {
        CosetContext::new(5, 3, 1, 13, 2).unwrap()
    }
    fn ex38() -> CosetContext {
        CosetContext::new(11, 3, 1, 5, 2).unwrap()
    }
    fn ex315() -> CosetContext {
        CosetContext::new(13, 3, 2, 9, 2).unwrap()
    }
    fn ex45() -> CosetContext {
        CosetContext::hermitian(11, 1, 10, 1).unwrap()
    }

    #[test]
    fn cosets_of_worked_examples() {
        assert_eq!(
            ex314().cyclotomic_cosets(),
            vec![
                vec![1, 5, 21, 25],
                vec![3, 11, 15, 23],
                vec![7, 9, 17, 19],
                vec![13]
            ]
        );
        assert_eq!(
            ex38().cyclotomic_cosets(),
            vec![vec![1], vec![3], vec![5], vec![7], vec![9]]
        );
        let c = ex45().cyclotomic_cosets();
        assert_eq!(c, (0..10).map(|i| vec![i]).collect::<Vec<_>>());
    }

    #[test]
    fn context_validation() {
        assert!(matches!(
            CosetContext::new(5, 1, 0, 10, 1),
            Err(Error::NotCoprime { .. })
        ));
        assert!(CosetContext::new(5, 1, 1, 3, 1).is_err());
        // 3 does not divide 5 - 1
        assert!(CosetContext::new(5, 1, 0, 2, 3).is_err());
        assert!(CosetContext::new(6, 1, 0, 1, 1).is_err());
    }

    #[test]
    fn act_scale_examples() {
        assert_eq!(act_scale(&[], 7, 10).unwrap(), Vec::<u64>::new());
        let s = -(13i64 * 13);
        assert_eq!(act_scale(&[1], s, 18).unwrap(), vec![11]);
        assert_eq!(act_scale(&[3, 5, 7], -11, 10).unwrap(), vec![3, 5, 7]);
        assert!(matches!(
            act_scale(&[1], 5, 10),
            Err(Error::NotAUnit { .. })
        ));
    }

    #[test]
    fn dual_defining_set_examples() {
        let ctx = ex38();
        let empty = DefiningSet::empty(ctx);
        assert_eq!(dual_defining_set(&empty).unwrap(), DefiningSet::full(ctx));
        assert_eq!(
            dual_defining_set(&DefiningSet::full(ctx)).unwrap(),
            DefiningSet::empty(ctx)
        );
        let p = DefiningSet::new(ctx, [3, 5, 7]).unwrap();
        assert_eq!(dual_defining_set(&p).unwrap().residues(), &[1, 9]);
    }

    #[test]
    fn lcd_defining_set_examples() {
        let ctx = ex38();
        assert!(is_lcd_defining_set(&DefiningSet::new(ctx, [3, 5, 7]).unwrap()));
        assert!(!is_lcd_defining_set(&DefiningSet::new(ctx, [1]).unwrap()));
        assert!(is_lcd_defining_set(&DefiningSet::empty(ctx)));
    }

    #[test]
    fn defining_set_validation() {
        let ctx = ex314();
        assert_eq!(DefiningSet::new(ctx, [2]), Err(Error::ResidueOutOfClass(2)));
        assert_eq!(DefiningSet::new(ctx, [1, 5]), Err(Error::NotClosed));
        let q1 = DefiningSet::closure_of(ctx, [5]).unwrap();
        assert_eq!(q1.residues(), &[1, 5, 21, 25]);
    }

    #[test]
    fn all_lcd_exponent_examples() {
        assert_eq!(all_lcd_exponent(&ex314()), Some(1));
        assert_eq!(all_lcd_exponent(&ex315()), None);
        let rn2 = CosetContext::new(3, 1, 0, 1, 2).unwrap();
        assert_eq!(rn2.rn(), 2);
        assert_eq!(all_lcd_exponent(&rn2), Some(1));
    }

    #[test]
    fn q1_fixed_examples() {
        assert!(q1_fixed_test(&ex314()));
        assert!(!q1_fixed_test(&ex315()));
        assert!(q1_fixed_test(&CosetContext::new(3, 1, 0, 1, 2).unwrap()));
    }

    #[test]
    fn census_hermitian_example() {
        let c = stable_orbit_census(&ex45()).unwrap();
        assert_eq!((c.t(), c.h()), (2, 4));
        assert_eq!(c.fixed, vec![0, 5]);
        assert!(c.longer.is_empty());
        assert_eq!(c.lcd_code_count(), 63);
    }

    #[test]
    fn census_galois_examples() {
        let c = stable_orbit_census(&ex314()).unwrap();
        assert_eq!((c.t(), c.h()), (4, 0));
        assert_eq!(c.lcd_code_count(), 15);
        // -13^2 = 11 mod 18 cycles {1,11,13,17,7,5}, swaps {3,15}, fixes {9}.
        let c = stable_orbit_census(&ex315()).unwrap();
        assert_eq!((c.t(), c.h()), (1, 1));
        assert_eq!(c.longer.len(), 1);
        let six: Vec<u64> = {
            let mut v: Vec<u64> = c.longer[0].iter().map(|&i| c.cosets[i][0]).collect();
            v.sort();
            v
        };
        assert_eq!(six, vec![1, 5, 7, 11, 13, 17]);
        assert_eq!(c.stable_set_count(), 8);
    }

    #[test]
    fn bch_examples() {
        let ctx = ex38();
        assert_eq!(bch_lower_bound(&DefiningSet::empty(ctx)).unwrap(), 1);
        assert_eq!(
            bch_lower_bound(&DefiningSet::new(ctx, [3, 5, 7]).unwrap()).unwrap(),
            4
        );
        assert_eq!(
            bch_lower_bound(&DefiningSet::new(ctx, [1, 3, 5, 7]).unwrap()).unwrap(),
            5
        );
        // wrap-around: indices 4, 0 are cyclically consecutive
        assert_eq!(
            bch_lower_bound(&DefiningSet::new(ctx, [9, 1]).unwrap()).unwrap(),
            3
        );
        assert_eq!(
            bch_lower_bound(&DefiningSet::full(ctx)),
            Err(Error::FullDefiningSet)
        );
        let cyc = ex45();
        let p3 = DefiningSet::new(cyc, 2..=8).unwrap();
        assert_eq!(bch_lower_bound(&p3).unwrap(), 8);
    }

    #[test]
    fn unique_involution_examples() {
        assert!(unique_order2_unit(10));
        assert!(!unique_order2_unit(8));
        assert!(unique_order2_unit(26));
        assert!(!unique_order2_unit(2));
    }

    #[test]
    fn hermitian_necessary_examples() {
        assert_eq!(hermitian_necessary_check(3, 2, 2, 2), Ok(false));
        assert_eq!(hermitian_necessary_check(3, 1, 2, 2), Ok(true));
        assert!(matches!(
            hermitian_necessary_check(3, 2, 2, 5),
            Err(Error::HypothesesNotMet(_))
        ));
    }

    #[test]
    fn lcd_closure_examples() {
        let ctx = ex315();
        let a = DefiningSet::new(ctx, [1]).unwrap();
        assert_eq!(lcd_closure(&a).unwrap().residues(), &[1, 5, 7, 11, 13, 17]);
        let b = DefiningSet::new(ctx, [3]).unwrap();
        assert_eq!(lcd_closure(&b).unwrap().residues(), &[3, 15]);
        let stable = DefiningSet::new(ctx, [9]).unwrap();
        assert_eq!(lcd_closure(&stable).unwrap(), stable);
    }

    #[test]
    fn stable_set_enumeration() {
        let sets = stable_defining_sets(&ex314(), 1 << 20).unwrap();
        assert_eq!(sets.len(), 16);
        assert!(sets.iter().all(is_lcd_defining_set));
        assert!(stable_defining_sets(&ex314(), 8).is_err());
    }

    #[test]
    fn record_round_trip() {
        let ctx = ex314();
        let p = DefiningSet::new(ctx, [13]).unwrap();
        let rec = p.record();
        assert_eq!(
            serde_json::to_value(&rec).unwrap(),
            serde_json::json!({"rn": 26, "r": 2, "residues": [13]})
        );
        assert_eq!(DefiningSet::from_record(ctx, &rec).unwrap(), p);
    }
}
