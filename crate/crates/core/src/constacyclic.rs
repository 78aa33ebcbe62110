//! Constacyclic codes as ideals of `GF(q)[x]/(x^n - lambda)`.

use std::sync::Arc;

use serde::Serialize;

use crate::arith;
use crate::cosets::{
    self, all_defining_sets, bch_lower_bound, dual_defining_set, is_lcd_defining_set,
    stable_defining_sets, stable_orbit_census, unique_order2_unit, CosetContext, DefiningSet,
    OrbitCensus,
};
use crate::error::{Error, Result};
use crate::field::{Element, Field, FieldSpec, GaloisParam};
use crate::linear::{self, Budget, CodeParams, LinearCode, Matrix, Strategy};
use crate::poly::{Poly, Splitting};

/// A `lambda`-constacyclic code of length `n` over GF(p^e), stored as its
/// defining set together with the generator polynomial derived from it.
#[derive(Clone, Debug)]
pub struct ConstacyclicCode {
    splitting: Arc<Splitting>,
    set: DefiningSet,
    generator: Poly,
}

impl PartialEq for ConstacyclicCode {
    fn eq(&self, other: &Self) -> bool {
        self.splitting.base() == other.splitting.base()
            && self.lambda() == other.lambda()
            && self.set == other.set
    }
}

impl ConstacyclicCode {
    pub fn from_defining_set(splitting: &Arc<Splitting>, set: DefiningSet) -> Result<Self> {
        let generator = splitting.generator_of(&set)?;
        Ok(ConstacyclicCode {
            splitting: Arc::clone(splitting),
            set: DefiningSet::new(*splitting.ctx(), set.residues().iter().copied())?,
            generator,
        })
    }

    /// Builds the splitting as well; convenient for one-off codes.
    pub fn new(field: &Field, n: u64, lambda: Element, k: usize, residues: &[u64]) -> Result<Self> {
        let splitting = Arc::new(Splitting::new(field, n, lambda, k)?);
        let set = DefiningSet::new(*splitting.ctx(), residues.iter().copied())?;
        ConstacyclicCode::from_defining_set(&splitting, set)
    }

    /// Validates `g | x^n - lambda` and recovers the defining set from the
    /// roots `theta^i` of `g`.
    pub fn from_generator_polynomial(splitting: &Arc<Splitting>, g: &Poly) -> Result<Self> {
        if g.field() != splitting.base() {
            return Err(Error::IncompatibleFields(
                "generator polynomial lives over a different field".into(),
            ));
        }
        let ctx = splitting.ctx();
        let xn = Poly::xn_minus(splitting.base(), ctx.n() as usize, splitting.lambda());
        if !g.divides(&xn) {
            return Err(Error::NotADivisor);
        }
        let g = g.monic();
        let set = splitting.roots_of(&g)?;
        let code = ConstacyclicCode::from_defining_set(splitting, set)?;
        if code.generator != g {
            return Err(Error::Inconsistent(
                "generator rebuilt from its roots differs".into(),
            ));
        }
        Ok(code)
    }

    pub fn splitting(&self) -> &Arc<Splitting> {
        &self.splitting
    }

    pub fn field(&self) -> &Field {
        self.splitting.base()
    }

    pub fn ctx(&self) -> &CosetContext {
        self.splitting.ctx()
    }

    pub fn length(&self) -> usize {
        self.ctx().n() as usize
    }

    pub fn lambda(&self) -> Element {
        self.splitting.lambda()
    }

    pub fn galois(&self) -> GaloisParam {
        GaloisParam::new(self.field(), self.ctx().k()).expect("context k is valid")
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    pub fn dimension(&self) -> usize {
        self.length() - self.set.len()
    }

    /// `h = (x^n - lambda) / g`.
    pub fn check_poly(&self) -> Poly {
        Poly::xn_minus(self.field(), self.length(), self.lambda())
            .exact_div(&self.generator)
            .expect("generator divides x^n - lambda")
    }

    /// `lambda^{-p^{e-k}}`, the constant of the Galois dual.
    pub fn dual_lambda(&self) -> Element {
        let f = self.field();
        let j = f.degree() - self.ctx().k();
        f.inv(f.frobenius_pow(self.lambda(), j))
            .expect("lambda is nonzero")
    }

    /// Whether `lambda^{1 + p^{e-k}} = 1`, i.e. the dual shares the constant.
    pub fn dual_is_same_family(&self) -> bool {
        self.dual_lambda() == self.lambda()
    }

    /// Generator of `C^{⊥k}`: `h~^{(p^{e-k})}`, the reciprocal of the check
    /// polynomial with coefficients raised to the `p^{e-k}`-th power.
    pub fn dual_generator(&self) -> Poly {
        let j = self.field().degree() - self.ctx().k();
        self.check_poly()
            .reciprocal()
            .expect("x^n - lambda has nonzero constant term")
            .frobenius_poly(j)
    }

    /// The Galois dual, building the splitting for the dual constant when it
    /// differs from `lambda`.
    pub fn galois_dual_code(&self) -> Result<ConstacyclicCode> {
        if self.dual_is_same_family() {
            return self.galois_dual_code_with(&self.splitting);
        }
        let s = Splitting::new(self.field(), self.ctx().n(), self.dual_lambda(), self.ctx().k())?;
        self.galois_dual_code_with(&Arc::new(s))
    }

    /// The Galois dual over a caller-supplied splitting of
    /// `x^n - lambda^{-p^{e-k}}`.
    ///
    /// The polynomial generator is checked against the defining-set formula
    /// `-p^{e-k} * complement(P)`: relative to the original `theta`, the dual
    /// generator must vanish exactly at those exponents.
    pub fn galois_dual_code_with(&self, dual_splitting: &Arc<Splitting>) -> Result<ConstacyclicCode> {
        let g_dual = self.dual_generator();
        if dual_splitting.lambda() != self.dual_lambda() || dual_splitting.base() != self.field() {
            return Err(Error::InvalidContext(
                "splitting does not match the dual constant".into(),
            ));
        }
        let ctx = *self.ctx();
        let expected: Vec<u64> = cosets::act_scale(
            self.set.complement().residues(),
            -(arith::pow_mod(ctx.p(), (ctx.e() - ctx.k()) as u64, ctx.rn()) as i64),
            ctx.rn(),
        )?;
        let lifted = g_dual.embed(self.splitting.embedding());
        let vanishing: Vec<u64> = (0..ctx.rn())
            .filter(|&i| lifted.eval(self.splitting.theta_pow(i)).is_zero())
            .collect();
        if vanishing != expected {
            return Err(Error::Inconsistent(format!(
                "dual generator vanishes at {vanishing:?}, defining-set formula gives {expected:?}"
            )));
        }
        let dual = ConstacyclicCode::from_generator_polynomial(dual_splitting, &g_dual)?;
        if self.dual_is_same_family() {
            let by_sets = dual_defining_set(&self.set)?;
            if by_sets.residues() != dual.set.residues() {
                return Err(Error::Inconsistent(
                    "dual defining set disagrees with the dual generator's roots".into(),
                ));
            }
        }
        Ok(dual)
    }

    /// LCD for the context's Galois parameter: unconditional when
    /// `lambda^{1+p^{e-k}} != 1`, otherwise `-p^k P = P`.
    pub fn is_lcd(&self) -> bool {
        !self.dual_is_same_family() || is_lcd_defining_set(&self.set)
    }

    /// Rows `x^i g(x)` for `i < dim`; errors on the zero code.
    pub fn to_generator_matrix(&self) -> Result<LinearCode> {
        if self.dimension() == 0 {
            return Err(Error::ZeroCode);
        }
        Ok(self.as_linear_code())
    }

    /// Like [`ConstacyclicCode::to_generator_matrix`] but maps the zero code
    /// to a `0 x n` generator.
    pub fn as_linear_code(&self) -> LinearCode {
        let n = self.length();
        let f = self.field();
        let rows = (0..self.dimension())
            .map(|i| {
                let mut row = vec![Element::ZERO; n];
                for (j, &c) in self.generator.coeffs().iter().enumerate() {
                    row[i + j] = c;
                }
                row
            })
            .collect();
        LinearCode::new(Matrix::from_rows(f, n, rows).expect("consistent widths"))
            .expect("shifts of the generator are independent")
    }

    pub fn bch_bound(&self) -> Option<usize> {
        bch_lower_bound(&self.set).ok()
    }

    pub fn params(&self, strategy: Strategy, budget: Budget) -> Result<CodeParams> {
        linear::min_distance(&self.as_linear_code(), strategy, budget, 1)
    }

    /// Parameters with the distance bracketed by the BCH and Singleton bounds.
    pub fn bounds_only(&self) -> CodeParams {
        let (n, dim) = (self.length(), self.dimension());
        let d = match self.bch_bound() {
            None => linear::Distance::Undefined,
            Some(lo) if lo == n + 1 - dim => linear::Distance::Exact(lo),
            Some(lo) => linear::Distance::Bounds { lo, hi: n + 1 - dim },
        };
        CodeParams { n, dim, d }
    }
}

/// One catalog line.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub set: DefiningSet,
    pub generator: Poly,
    pub params: CodeParams,
    pub lcd: bool,
    pub bch: Option<usize>,
}

/// Every LCD code of a family, with exact parameters where the budget allows.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub splitting: Arc<Splitting>,
    /// `None` when `lambda^{1+p^{e-k}} != 1` (every code is LCD).
    pub census: Option<OrbitCensus>,
    pub entries: Vec<CatalogEntry>,
}

/// JSON catalog record.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogRecord {
    pub p: u64,
    pub e: usize,
    pub k: usize,
    pub n: u64,
    pub lambda: serde_json::Value,
    pub r: u64,
    pub ext: FieldSpec,
    pub theta: serde_json::Value,
    pub defining_set: Vec<u64>,
    pub generator: serde_json::Value,
    pub params: serde_json::Value,
    pub lcd: bool,
    pub mds: bool,
    pub bch_bound: Option<usize>,
}

impl Catalog {
    /// Stable (equivalently LCD) defining sets, including the full set.
    pub fn stable_count(&self) -> usize {
        self.entries.len()
    }

    /// Count excluding `P = 1 + rZ_rn`, whose code is zero.
    pub fn nonzero_count(&self) -> usize {
        self.entries.iter().filter(|e| !e.set.is_full()).count()
    }

    /// Distinct exact parameter triples of the nonzero codes, sorted.
    pub fn parameter_types(&self) -> Vec<(usize, usize, usize)> {
        let mut v: Vec<(usize, usize, usize)> = self
            .entries
            .iter()
            .filter_map(|e| e.params.distance().map(|d| (e.params.n, e.params.dim, d)))
            .collect();
        v.sort();
        v.dedup();
        v
    }

    pub fn records(&self) -> Vec<CatalogRecord> {
        let s = &self.splitting;
        let base = s.base();
        let ctx = s.ctx();
        self.entries
            .iter()
            .map(|e| CatalogRecord {
                p: ctx.p(),
                e: ctx.e(),
                k: ctx.k(),
                n: ctx.n(),
                lambda: base.to_json(s.lambda()),
                r: ctx.r(),
                ext: s.ext().spec(),
                theta: s.ext().to_json(s.theta()),
                defining_set: e.set.residues().to_vec(),
                generator: e.generator.to_json(),
                params: e.params.to_json(),
                lcd: e.lcd,
                mds: e.params.mds(),
                bch_bound: e.bch,
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.records()).expect("records serialize")
    }

    /// Columns `p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds`.
    pub fn to_csv(&self) -> String {
        let s = &self.splitting;
        let ctx = s.ctx();
        let lambda = s.base().display(s.lambda());
        let mut out = String::from("p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds\n");
        for e in &self.entries {
            let set: Vec<String> = e.set.residues().iter().map(u64::to_string).collect();
            let d = match e.params.d {
                linear::Distance::Exact(d) => d.to_string(),
                linear::Distance::Bounds { lo, hi } => format!("{lo}..{hi}"),
                linear::Distance::Undefined => String::new(),
            };
            out.push_str(&format!(
                "{},{},{},{},{},{},\"{{{}}}\",{},{},{},{},{},{}\n",
                ctx.p(),
                ctx.e(),
                ctx.k(),
                ctx.n(),
                lambda,
                ctx.r(),
                set.join(" "),
                e.params.dim,
                d,
                e.params.exact(),
                e.bch.map_or(String::new(), |b| b.to_string()),
                e.lcd,
                e.params.mds()
            ));
        }
        out
    }
}

/// How [`classify_all_lcd`] fills in minimum distances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DistanceMode {
    /// Run the distance engine (without using the BCH bound as a hint).
    Exact(Strategy, Budget),
    /// Report the interval from the BCH bound to the Singleton bound.
    BoundsOnly,
}

/// Enumerates every LCD code of the family: the `-p^k`-stable defining sets,
/// or all defining sets when `lambda^{1+p^{e-k}} != 1`.
pub fn classify_all_lcd(splitting: &Arc<Splitting>, mode: DistanceMode, max_sets: u128) -> Result<Catalog> {
    let ctx = splitting.ctx();
    let probe = ConstacyclicCode::from_defining_set(splitting, DefiningSet::empty(*ctx))?;
    let (census, sets) = if probe.dual_is_same_family() {
        (
            Some(stable_orbit_census(ctx)?),
            stable_defining_sets(ctx, max_sets)?,
        )
    } else {
        (None, all_defining_sets(ctx, max_sets)?)
    };
    let entries = sets
        .into_iter()
        .map(|set| {
            let code = ConstacyclicCode::from_defining_set(splitting, set)?;
            let params = match mode {
                DistanceMode::Exact(strategy, budget) => code.params(strategy, budget)?,
                DistanceMode::BoundsOnly => code.bounds_only(),
            };
            Ok(CatalogEntry {
                params,
                lcd: code.is_lcd(),
                bch: code.bch_bound(),
                generator: code.generator.clone(),
                set: code.set,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Catalog {
        splitting: Arc::clone(splitting),
        census,
        entries,
    })
}

/// The Hermitian LCD MDS code with defining set `{1 + ri : 0 <= i <= d-2}`
/// over GF(p^{2a}), valid when `ord_rn(p^a) = 2` and `-1` is the only unit of
/// order two modulo `rn`.
pub fn hermitian_mds_family(field: &Field, lambda: Element, n: u64, d: u64) -> Result<ConstacyclicCode> {
    let e = field.degree();
    if e % 2 != 0 {
        return Err(Error::HypothesesNotMet(format!(
            "Hermitian duality needs an even extension degree, got e = {e}"
        )));
    }
    let a = e / 2;
    let r = field.mult_order(lambda)?;
    let rn = r * n;
    let pa = arith::pow_mod(field.characteristic(), a as u64, rn);
    if arith::mult_order_mod(pa, rn) != Some(2) {
        return Err(Error::HypothesesNotMet(format!(
            "p^a = {pa} (mod {rn}) does not have order 2"
        )));
    }
    if !unique_order2_unit(rn) {
        return Err(Error::HypothesesNotMet(format!(
            "-1 is not the only unit of order 2 modulo {rn}"
        )));
    }
    if d < 2 || d > n {
        return Err(Error::HypothesesNotMet(format!("d = {d} must lie in 2..={n}")));
    }
    let splitting = Arc::new(Splitting::new(field, n, lambda, a)?);
    let seeds: Vec<u64> = (0..d - 1).map(|i| (1 + r * i) % rn).collect();
    let set = DefiningSet::closure_of(*splitting.ctx(), seeds)?;
    ConstacyclicCode::from_defining_set(&splitting, set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::{galois_dual, is_galois_lcd, Distance};

    fn gf(p: u64, e: usize) -> Field {
        Field::new(p, e, None).unwrap()
    }

    #[test]
    fn trivial_codes() {
        let f = gf(3, 1);
        let c = ConstacyclicCode::new(&f, 4, Element::ONE, 0, &[]).unwrap();
        assert_eq!(c.generator(), &Poly::one(&f));
        assert_eq!(c.dimension(), 4);
        assert_eq!(c.to_generator_matrix().unwrap().generator(), &Matrix::identity(&f, 4));
        let dual = c.galois_dual_code().unwrap();
        assert_eq!(dual.dimension(), 0);
        assert_eq!(dual.generator(), &Poly::xn_minus(&f, 4, Element::ONE));
        let zero_dual = dual.galois_dual_code().unwrap();
        assert_eq!(zero_dual.generator(), &Poly::one(&f));
        assert_eq!(dual.to_generator_matrix(), Err(Error::ZeroCode));
    }

    #[test]
    fn single_root_code() {
        let f = gf(13, 3);
        let c = ConstacyclicCode::new(&f, 9, f.from_int(-1), 2, &[9]).unwrap();
        assert_eq!(c.generator(), &Poly::from_ints(&f, &[1, 1]));
        assert_eq!(c.dimension(), 8);
        let g = c.to_generator_matrix().unwrap();
        assert_eq!((g.dimension(), g.length()), (8, 9));
        assert_eq!(g.generator().get(3, 3), Element::ONE);
        assert_eq!(g.generator().get(3, 4), Element::ONE);
        assert_eq!(g.generator().get(3, 5), Element::ZERO);
    }

    #[test]
    fn dual_code_matches_defining_set_formula() {
        let f = gf(11, 3);
        let c = ConstacyclicCode::new(&f, 5, f.from_int(-1), 1, &[3, 5, 7]).unwrap();
        let d = c.galois_dual_code().unwrap();
        assert_eq!(d.defining_set().residues(), &[1, 9]);
        assert_eq!(d.dimension(), 3);
        assert!(c.is_lcd());
        let lin = c.as_linear_code();
        assert!(d.as_linear_code().same_subspace(&galois_dual(&lin, c.galois())));
    }

    #[test]
    fn dual_with_new_constant() {
        // GF(9), lambda of order 4: lambda^{1+3} = 1 for k = 1 but not for k = 0.
        let f = gf(3, 2);
        let lambda = f.pow(f.primitive_element(), 2);
        assert_eq!(f.mult_order(lambda).unwrap(), 4);
        let s = Arc::new(Splitting::new(&f, 2, lambda, 0).unwrap());
        for set in all_defining_sets(s.ctx(), 1 << 10).unwrap() {
            let c = ConstacyclicCode::from_defining_set(&s, set).unwrap();
            assert!(!c.dual_is_same_family());
            assert!(c.is_lcd());
            let lin = c.as_linear_code();
            assert!(is_galois_lcd(&lin, c.galois()).lcd);
            let d = c.galois_dual_code().unwrap();
            assert_eq!(d.lambda(), c.dual_lambda());
            assert!(d.as_linear_code().same_subspace(&galois_dual(&lin, c.galois())));
        }
    }

    #[test]
    fn generator_polynomial_entry_point() {
        let f = gf(5, 3);
        let s = Arc::new(Splitting::new(&f, 13, f.from_int(-1), 1).unwrap());
        let (q, m) = s.factors()[0].clone();
        let c = ConstacyclicCode::from_generator_polynomial(&s, &m.scale(f.from_int(3))).unwrap();
        assert_eq!(c.defining_set().residues(), q.as_slice());
        let bad = Poly::from_ints(&f, &[2, 1]);
        assert_eq!(
            ConstacyclicCode::from_generator_polynomial(&s, &bad).unwrap_err(),
            Error::NotADivisor
        );
    }

    #[test]
    fn hermitian_family_small() {
        let f = gf(3, 4);
        for d in 2..=5u64 {
            let c = hermitian_mds_family(&f, f.from_int(-1), 5, d).unwrap();
            assert_eq!(c.dimension() as u64, 5 + 1 - d);
            let p = c.params(Strategy::Auto, Budget::default()).unwrap();
            assert_eq!(p.d, Distance::Exact(d as usize));
            assert!(c.is_lcd());
        }
        assert!(matches!(
            hermitian_mds_family(&f, f.from_int(-1), 5, 6),
            Err(Error::HypothesesNotMet(_))
        ));
        assert!(matches!(
            hermitian_mds_family(&gf(3, 3), Element::ONE, 2, 2),
            Err(Error::HypothesesNotMet(_))
        ));
    }

    #[test]
    fn classify_small_family() {
        let f = gf(2, 2);
        let s = Arc::new(Splitting::new(&f, 1, Element::ONE, 0).unwrap());
        let cat = classify_all_lcd(&s, DistanceMode::Exact(Strategy::Auto, Budget::default()), 1 << 20).unwrap();
        assert_eq!(cat.stable_count(), 2);
        assert_eq!(cat.nonzero_count(), 1);
        let csv = cat.to_csv();
        assert!(csv.starts_with("p,e,k,n,lambda,r,defining_set,dim,d,exact,bch,lcd,mds\n"));
        assert_eq!(csv.lines().count(), 3);
        let json = cat.to_json();
        assert_eq!(json.as_array().unwrap().len(), 2);
        assert_eq!(json[0]["defining_set"], serde_json::json!([]));
    }
}
