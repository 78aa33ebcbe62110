//! Registry of worked examples. Each example recomputes its published
//! numbers from scratch and reports one claim per number.
//!
//! Published values known to be wrong live in `data/expected_flags.json`
//! together with the computation that decides them; such claims are reported
//! as expected flags rather than failures.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::constacyclic::{classify_all_lcd, hermitian_mds_family, ConstacyclicCode, DistanceMode};
use crate::cosets::{
    act_scale, all_lcd_exponent, bch_lower_bound, dual_defining_set, hermitian_necessary_check,
    is_lcd_defining_set, lcd_closure, q1_fixed_test, stable_orbit_census, unique_order2_unit,
    CosetContext, DefiningSet,
};
use crate::error::{Error, Result};
use crate::field::{primitive_rn_root, Element, Embedding, Field};
use crate::linear::{
    extend_lcd, galois_dual, galois_inner_product, is_galois_lcd, min_distance, p_power_code,
    Budget, CodeParams, ExtendMode, LinearCode, Matrix, Strategy,
};
use crate::poly::{factor_xn_minus_lambda, Poly, Splitting};

const MANIFEST: &str = include_str!("../data/expected_flags.json");

/// Library operations a reproduction run is expected to exercise.
pub const ALL_OPS: &[&str] = &[
    "make_field",
    "frobenius_pow",
    "mult_order",
    "sqrt_minus_one",
    "embed",
    "primitive_rn_root",
    "reciprocal",
    "frobenius_poly",
    "minimal_poly",
    "factor_xn_minus_lambda",
    "cyclotomic_cosets",
    "act_scale",
    "dual_defining_set",
    "is_lcd_defining_set",
    "all_lcd_exponent",
    "q1_fixed_test",
    "stable_orbit_census",
    "bch_lower_bound",
    "unique_order2_unit",
    "hermitian_necessary_check",
    "lcd_closure",
    "galois_inner_product",
    "p_power_code",
    "galois_dual",
    "is_galois_lcd",
    "extend_lcd",
    "min_distance",
    "code_from_defining_set",
    "galois_dual_code",
    "is_lcd",
    "to_generator_matrix",
    "classify_all_lcd",
    "hermitian_mds_family",
];

pub const EXAMPLE_IDS: &[&str] = &["2.4", "3.8", "3.14", "3.15", "4.5", "4.8"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FlagEntry {
    pub example: String,
    pub claim: String,
    pub published: Value,
    pub oracle: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Manifest {
    pub version: u32,
    pub flags: Vec<FlagEntry>,
}

pub fn manifest() -> Manifest {
    serde_json::from_str(MANIFEST).expect("bundled manifest parses")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Match,
    ExpectedFlag,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Claim {
    pub name: String,
    /// Published value, or `null` for internal consistency checks.
    pub published: Value,
    pub computed: Value,
    pub status: ClaimStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<String>,
    #[serde(skip)]
    pub ops: Vec<&'static str>,
}

/// Parameters of an example; extra structured inputs go in `extra`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExampleInputs {
    pub p: u64,
    pub e: usize,
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<i64>,
    pub modulus: Vec<u64>,
    #[serde(skip_serializing_if = "Value::is_null", default)]
    pub extra: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExampleRecord {
    pub id: String,
    pub inputs: ExampleInputs,
    pub claims: Vec<Claim>,
}

impl ExampleRecord {
    /// `Mismatch` if any claim mismatches, else `ExpectedFlag` if any claim
    /// is flagged, else `Match`.
    pub fn status(&self) -> ClaimStatus {
        let statuses: Vec<ClaimStatus> = self.claims.iter().map(|c| c.status).collect();
        if statuses.contains(&ClaimStatus::Mismatch) {
            ClaimStatus::Mismatch
        } else if statuses.contains(&ClaimStatus::ExpectedFlag) {
            ClaimStatus::ExpectedFlag
        } else {
            ClaimStatus::Match
        }
    }

    pub fn ops(&self) -> BTreeSet<&'static str> {
        self.claims.iter().flat_map(|c| c.ops.iter().copied()).collect()
    }

    pub fn to_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("record serializes");
        v["status"] = serde_json::to_value(self.status()).expect("status serializes");
        v
    }
}

struct Recorder {
    example: &'static str,
    flags: Vec<FlagEntry>,
    claims: Vec<Claim>,
}

impl Recorder {
    fn new(example: &'static str) -> Self {
        let flags = manifest()
            .flags
            .into_iter()
            .filter(|f| f.example == example)
            .collect();
        Recorder {
            example,
            flags,
            claims: Vec::new(),
        }
    }

    /// A published number against its recomputation.
    fn published(&mut self, name: &str, published: Value, computed: Value, ops: &[&'static str]) {
        let flag = self.flags.iter().find(|f| f.claim == name);
        let (published, status, oracle) = match flag {
            Some(f) => {
                assert_eq!(
                    f.published, published,
                    "manifest entry {}/{} disagrees with the registry",
                    self.example, name
                );
                // A flag whose published value now matches is stale.
                let status = if computed == published {
                    ClaimStatus::Mismatch
                } else {
                    ClaimStatus::ExpectedFlag
                };
                (published, status, Some(f.oracle.clone()))
            }
            None => {
                let status = if computed == published {
                    ClaimStatus::Match
                } else {
                    ClaimStatus::Mismatch
                };
                (published, status, None)
            }
        };
        self.claims.push(Claim {
            name: name.into(),
            published,
            computed,
            status,
            oracle,
            ops: ops.to_vec(),
        });
    }

    /// An internal consistency check with no published counterpart.
    fn check(&mut self, name: &str, ok: bool, computed: Value, ops: &[&'static str]) {
        self.claims.push(Claim {
            name: name.into(),
            published: Value::Null,
            computed,
            status: if ok {
                ClaimStatus::Match
            } else {
                ClaimStatus::Mismatch
            },
            oracle: None,
            ops: ops.to_vec(),
        });
    }

    fn finish(self, inputs: ExampleInputs) -> ExampleRecord {
        ExampleRecord {
            id: self.example.into(),
            inputs,
            claims: self.claims,
        }
    }
}

fn params_json(p: &CodeParams) -> Value {
    match p.distance() {
        Some(d) => json!([p.n, p.dim, d]),
        None => p.to_json(),
    }
}

fn exact_params(code: &LinearCode, budget: Budget) -> Result<CodeParams> {
    min_distance(code, Strategy::Auto, budget, 1)
}

fn inputs(field: &Field, k: usize, n: Option<u64>, lambda: Option<i64>, extra: Value) -> ExampleInputs {
    ExampleInputs {
        p: field.characteristic(),
        e: field.degree(),
        k,
        n,
        lambda,
        modulus: field.modulus().to_vec(),
        extra,
    }
}

pub fn reproduce(id: &str, budget: Budget) -> Result<ExampleRecord> {
    match id {
        "2.4" => example_2_4(budget),
        "3.8" => example_3_8(budget),
        "3.14" => example_3_14(budget),
        "3.15" => example_3_15(budget),
        "4.5" => example_4_5(budget),
        "4.8" => example_4_8(budget),
        other => Err(Error::UnknownExample(other.into())),
    }
}

pub fn reproduce_all(budget: Budget) -> Result<Vec<ExampleRecord>> {
    EXAMPLE_IDS.iter().map(|id| reproduce(id, budget)).collect()
}

fn example_2_4(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("2.4");
    let f = Field::new(2, 3, None)?;
    rec.published("modulus", json!([1, 1, 0, 1]), json!(f.modulus()), &["make_field"]);
    let a = f.generator();
    rec.published(
        "alpha_cubed",
        json!([1, 1, 0]),
        f.to_json(f.pow(a, 3)),
        &["make_field"],
    );
    rec.published("alpha_order", json!(7), json!(f.mult_order(a)?), &["mult_order"]);

    let (o, z) = (Element::ONE, Element::ZERO);
    let g = Matrix::from_rows(&f, 4, vec![vec![o, z, a, a], vec![z, o, o, a]])?;
    let code = LinearCode::new(g.clone())?;
    let k = f.galois(1)?;

    let g4 = p_power_code(&code, 2);
    let fourth = f.pow(a, 4);
    rec.check(
        "power_code_entries",
        g4.generator().get(0, 2) == fourth && f.frobenius_pow(a, 2) == fourth,
        f.to_json(g4.generator().get(0, 2)),
        &["p_power_code", "frobenius_pow"],
    );

    let verdict = is_galois_lcd(&code, k);
    rec.published("det", f.to_json(a), f.to_json(verdict.det), &["is_galois_lcd"]);
    rec.published("lcd", json!(true), json!(verdict.lcd), &["is_galois_lcd"]);

    let params = exact_params(&code, budget)?;
    rec.published("params", json!([4, 2, 3]), params_json(&params), &["min_distance"]);
    rec.published("mds", json!(true), json!(params.mds()), &["min_distance"]);

    let dual = galois_dual(&code, k);
    let mut orthogonal = true;
    for c in code.generator().row_vecs() {
        for x in dual.generator().row_vecs() {
            orthogonal &= galois_inner_product(&f, &c, &x, k)?.is_zero();
        }
    }
    let meet = code.intersection_dim(&dual)?;
    rec.check(
        "dual_complementary",
        orthogonal && dual.dimension() == 2 && meet == 0,
        json!({"dual_dim": dual.dimension(), "intersection_dim": meet}),
        &["galois_dual", "galois_inner_product"],
    );

    let ext = extend_lcd(&g, k, ExtendMode::Char2)?;
    let ext_lcd = is_galois_lcd(&ext, k).lcd;
    let ext_params = exact_params(&ext, budget)?;
    let ok = ext_lcd && ext_params.distance().is_some_and(|d| d >= 3) && ext_params.n == 6;
    rec.check(
        "extension_i_a_a",
        ok,
        json!({"params": params_json(&ext_params), "lcd": ext_lcd}),
        &["extend_lcd", "is_galois_lcd", "min_distance"],
    );

    Ok(rec.finish(inputs(&f, 1, Some(4), None, json!({"generator": g.to_json()}))))
}

fn splitting(p: u64, e: usize, k: usize, n: u64, lambda: i64) -> Result<(Field, Arc<Splitting>)> {
    let f = Field::new(p, e, None)?;
    let s = Arc::new(Splitting::new(&f, n, f.from_int(lambda), k)?);
    Ok((f, s))
}

fn code(s: &Arc<Splitting>, residues: &[u64]) -> Result<ConstacyclicCode> {
    ConstacyclicCode::from_defining_set(s, DefiningSet::new(*s.ctx(), residues.iter().copied())?)
}

fn images(ctx: &CosetContext, s: i64, xs: &[u64]) -> Result<Value> {
    let pairs = xs
        .iter()
        .map(|&x| Ok(json!([x, act_scale(&[x], s, ctx.rn())?[0]])))
        .collect::<Result<Vec<_>>>()?;
    Ok(Value::Array(pairs))
}

fn example_3_8(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("3.8");
    let (f, s) = splitting(11, 3, 1, 5, -1)?;
    let ctx = *s.ctx();
    rec.published(
        "r_rn",
        json!([2, 10]),
        json!([f.mult_order(f.from_int(-1))?, ctx.rn()]),
        &["make_field", "mult_order"],
    );
    rec.published(
        "cosets",
        json!([[1], [3], [5], [7], [9]]),
        json!(ctx.cyclotomic_cosets()),
        &["cyclotomic_cosets"],
    );
    let degrees: Vec<usize> = factor_xn_minus_lambda(&f, 5, f.from_int(-1))?
        .iter()
        .map(|(_, m)| m.degree().unwrap_or(0))
        .collect();
    rec.check(
        "linear_factors",
        degrees == vec![1; 5],
        json!(degrees),
        &["factor_xn_minus_lambda"],
    );
    let theta = s.theta();
    let ext = s.ext();
    rec.check(
        "theta",
        ext.degree() == 3 && ext.mult_order(theta)? == 10 && ext.pow(theta, 5) == f.from_int(-1),
        ext.to_json(theta),
        &["primitive_rn_root", "embed"],
    );
    rec.published(
        "relations",
        json!([[1, 9], [9, 1], [3, 7], [7, 3], [5, 5]]),
        images(&ctx, -11, &[1, 9, 3, 7, 5])?,
        &["act_scale"],
    );
    let c = code(&s, &[3, 5, 7])?;
    rec.published(
        "p_stable",
        json!(true),
        json!(is_lcd_defining_set(c.defining_set())),
        &["is_lcd_defining_set"],
    );
    let lin = c.to_generator_matrix()?;
    let matrix_lcd = is_galois_lcd(&lin, c.galois()).lcd;
    rec.published(
        "lcd",
        json!(true),
        json!(c.is_lcd() && matrix_lcd),
        &["code_from_defining_set", "is_lcd", "to_generator_matrix", "is_galois_lcd"],
    );
    let params = exact_params(&lin, budget)?;
    rec.published("params", json!([10, 7, 4]), params_json(&params), &["min_distance"]);
    rec.published("mds", json!(true), json!(params.mds()), &["min_distance"]);

    let dual = c.galois_dual_code()?;
    let by_sets = dual_defining_set(c.defining_set())?;
    let h = c.check_poly();
    let g_dual = h.reciprocal()?.frobenius_poly(2);
    let matrix_dual = galois_dual(&lin, c.galois());
    let ok = dual.defining_set() == &by_sets
        && dual.generator() == &g_dual
        && dual.as_linear_code().same_subspace(&matrix_dual);
    rec.check(
        "dual",
        ok,
        json!({"defining_set": by_sets.residues(), "dim": dual.dimension()}),
        &["dual_defining_set", "galois_dual_code", "reciprocal", "frobenius_poly", "galois_dual"],
    );
    Ok(rec.finish(inputs(&f, 1, Some(5), Some(-1), Value::Null)))
}

fn example_3_14(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("3.14");
    let (f, s) = splitting(5, 3, 1, 13, -1)?;
    let ctx = *s.ctx();
    rec.published(
        "cosets",
        json!([[1, 5, 21, 25], [3, 11, 15, 23], [7, 9, 17, 19], [13]]),
        json!(ctx.cyclotomic_cosets()),
        &["cyclotomic_cosets"],
    );
    let lambda = f.from_int(-1);
    let factors = factor_xn_minus_lambda(&f, 13, lambda)?;
    let mut degrees: Vec<usize> = factors.iter().map(|(_, m)| m.degree().unwrap_or(0)).collect();
    degrees.sort_unstable();
    let product = factors.iter().fold(Poly::one(&f), |acc, (_, m)| acc.mul(m));
    let q1 = s.minimal_poly(&[1, 5, 21, 25])?;
    let emb = Embedding::new(&f, s.ext())?;
    let theta = primitive_rn_root(s.ext(), 26, 13, emb.apply(lambda))?;
    rec.check(
        "factorization",
        degrees == vec![1, 4, 4, 4]
            && product == Poly::xn_minus(&f, 13, lambda)
            && q1.divides(&product)
            && theta == s.theta(),
        json!({"degrees": degrees, "ext_degree": s.ext().degree()}),
        &["factor_xn_minus_lambda", "minimal_poly", "embed", "primitive_rn_root"],
    );
    rec.published(
        "all_lcd_exponent",
        json!(1),
        json!(all_lcd_exponent(&ctx)),
        &["all_lcd_exponent"],
    );
    rec.check(
        "q1_fixed",
        q1_fixed_test(&ctx) && all_lcd_exponent(&ctx).is_some(),
        json!(q1_fixed_test(&ctx)),
        &["q1_fixed_test"],
    );
    let catalog = classify_all_lcd(&s, DistanceMode::Exact(Strategy::Auto, budget), 1 << 20)?;
    let census = catalog.census.clone().ok_or_else(|| {
        Error::Inconsistent("negacyclic family over GF(125) has a census".into())
    })?;
    rec.published(
        "lcd_count",
        json!(15),
        json!(catalog.nonzero_count()),
        &["classify_all_lcd", "stable_orbit_census"],
    );
    rec.check(
        "stable_sets",
        catalog.stable_count() == 16 && census.stable_set_count() == 16 && census.t() == 4,
        json!({"stable_sets": catalog.stable_count(), "t": census.t(), "h": census.h()}),
        &["stable_orbit_census"],
    );
    let listed = [[13, 12, 2], [13, 9, 4], [13, 8, 4], [13, 4, 8], [13, 5, 7]];
    let types = catalog.parameter_types();
    let present: Vec<[usize; 3]> = listed
        .iter()
        .copied()
        .filter(|t| types.contains(&(t[0], t[1], t[2])))
        .collect();
    rec.published("listed_types", json!(listed), json!(present), &["min_distance"]);
    let bch_ok = catalog.entries.iter().all(|e| match (e.bch, e.params.distance()) {
        (Some(b), Some(d)) => b <= d,
        _ => e.set.is_full(),
    });
    let all_lcd = catalog.entries.iter().all(|e| e.lcd);
    rec.check(
        "catalog_types",
        bch_ok && all_lcd,
        json!(types.iter().map(|t| [t.0, t.1, t.2]).collect::<Vec<_>>()),
        &["bch_lower_bound", "is_lcd"],
    );
    Ok(rec.finish(inputs(&f, 1, Some(13), Some(-1), Value::Null)))
}

fn example_3_15(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("3.15");
    let (f, s) = splitting(13, 3, 2, 9, -1)?;
    let ctx = *s.ctx();
    rec.published(
        "cosets",
        json!([[1], [3], [5], [7], [9], [11], [13], [15], [17]]),
        json!(ctx.cyclotomic_cosets()),
        &["cyclotomic_cosets"],
    );
    rec.published(
        "relations",
        json!([[1, 11], [11, 13], [13, 17], [17, 7], [7, 5], [5, 1], [3, 15], [15, 3], [9, 9]]),
        images(&ctx, -169, &[1, 11, 13, 17, 7, 5, 3, 15, 9])?,
        &["act_scale"],
    );
    let census = stable_orbit_census(&ctx)?;
    let longer: Vec<usize> = census.longer.iter().map(Vec::len).collect();
    rec.check(
        "census",
        census.t() == 1 && census.h() == 1 && longer == vec![6] && census.stable_set_count() == 8,
        json!({"t": census.t(), "h": census.h(), "longer": longer}),
        &["stable_orbit_census"],
    );
    rec.check(
        "not_all_lcd",
        all_lcd_exponent(&ctx).is_none() && !q1_fixed_test(&ctx),
        json!(all_lcd_exponent(&ctx)),
        &["all_lcd_exponent", "q1_fixed_test"],
    );
    let sets: [&[u64]; 6] = [
        &[1, 5, 7, 11, 13, 17],
        &[1, 5, 7, 9, 11, 13, 17],
        &[1, 3, 5, 7, 11, 13, 15, 17],
        &[3, 15],
        &[3, 9, 15],
        &[9],
    ];
    let closure_1 = lcd_closure(&DefiningSet::new(ctx, [1])?)?;
    let closure_3 = lcd_closure(&DefiningSet::new(ctx, [3])?)?;
    rec.check(
        "closures",
        closure_1.residues() == sets[0] && closure_3.residues() == sets[3],
        json!([closure_1.residues(), closure_3.residues()]),
        &["lcd_closure"],
    );
    let codes = sets.iter().map(|p| code(&s, p)).collect::<Result<Vec<_>>>()?;
    rec.published(
        "stable",
        json!(vec![true; 6]),
        json!(codes.iter().map(|c| is_lcd_defining_set(c.defining_set())).collect::<Vec<_>>()),
        &["is_lcd_defining_set"],
    );
    rec.published(
        "dims",
        json!([3, 2, 1, 7, 6, 8]),
        json!(codes.iter().map(ConstacyclicCode::dimension).collect::<Vec<_>>()),
        &["code_from_defining_set"],
    );
    let published = [[9, 3, 3], [9, 2, 6], [9, 1, 9], [9, 7, 2], [9, 6, 2], [9, 8, 2]];
    let mut bch_ok = true;
    let mut lcd_ok = true;
    for (i, c) in codes.iter().enumerate() {
        let lin = c.to_generator_matrix()?;
        let params = exact_params(&lin, budget)?;
        rec.published(
            &format!("params_p{}", i + 1),
            json!(published[i]),
            params_json(&params),
            &["min_distance", "to_generator_matrix"],
        );
        let bch = bch_lower_bound(c.defining_set())?;
        bch_ok &= params.distance().is_some_and(|d| d >= bch);
        lcd_ok &= c.is_lcd() && is_galois_lcd(&lin, c.galois()).lcd;
        if i == 2 || i == 5 {
            rec.published(
                &format!("mds_p{}", i + 1),
                json!(true),
                json!(params.mds()),
                &["min_distance"],
            );
        }
    }
    rec.check("bch_below_distance", bch_ok, json!(bch_ok), &["bch_lower_bound"]);
    rec.published("lcd", json!(true), json!(lcd_ok), &["is_lcd", "is_galois_lcd"]);
    rec.published(
        "generator_p6",
        Poly::from_ints(&f, &[1, 1]).to_json(),
        codes[5].generator().to_json(),
        &["code_from_defining_set"],
    );
    Ok(rec.finish(inputs(&f, 2, Some(9), Some(-1), Value::Null)))
}

fn example_4_5(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("4.5");
    let (f, s) = splitting(11, 2, 1, 10, 1)?;
    let ctx = *s.ctx();
    rec.published(
        "cosets",
        json!((0..10).map(|i| vec![i]).collect::<Vec<_>>()),
        json!(ctx.cyclotomic_cosets()),
        &["cyclotomic_cosets"],
    );
    rec.published(
        "relation_q1",
        json!([1]),
        json!(act_scale(&[1], -11, 10)?),
        &["act_scale"],
    );
    rec.published(
        "relations",
        json!([[2, 8], [3, 7], [4, 6], [5, 5]]),
        images(&ctx, -11, &[2, 3, 4, 5])?,
        &["act_scale"],
    );
    let census = stable_orbit_census(&ctx)?;
    rec.check(
        "census",
        census.t() == 2 && census.h() == 4 && census.longer.is_empty(),
        json!({"t": census.t(), "h": census.h(), "fixed": census.fixed}),
        &["stable_orbit_census"],
    );
    let catalog = classify_all_lcd(&s, DistanceMode::Exact(Strategy::Auto, budget), 1 << 20)?;
    rec.published(
        "lcd_count",
        json!(63),
        json!(catalog.nonzero_count()),
        &["classify_all_lcd"],
    );
    let sets: [&[u64]; 3] = [&[4, 5, 6], &[3, 4, 5, 6, 7], &[2, 3, 4, 5, 6, 7, 8]];
    let published = [[10, 7, 4], [10, 5, 6], [10, 3, 7]];
    for (i, p) in sets.iter().enumerate() {
        let c = code(&s, p)?;
        let lin = c.to_generator_matrix()?;
        let params = exact_params(&lin, budget)?;
        rec.published(
            &format!("params_p{}", i + 1),
            json!(published[i]),
            params_json(&params),
            &["min_distance"],
        );
        rec.published(
            &format!("hermitian_lcd_p{}", i + 1),
            json!(true),
            json!(c.is_lcd() && is_galois_lcd(&lin, c.galois()).lcd),
            &["is_lcd", "is_galois_lcd"],
        );
        if i == 2 {
            rec.check(
                "bch_p3",
                bch_lower_bound(c.defining_set())? == 8,
                json!(bch_lower_bound(c.defining_set())?),
                &["bch_lower_bound"],
            );
        }
    }
    Ok(rec.finish(inputs(&f, 1, Some(10), Some(1), Value::Null)))
}

fn example_4_8(budget: Budget) -> Result<ExampleRecord> {
    let mut rec = Recorder::new("4.8");
    let f = Field::new(3, 4, None)?;
    let lambda = f.from_int(-1);
    let ctx = CosetContext::hermitian(3, 2, 5, 2)?;
    rec.published("q_mod_rn", json!(1), json!(ctx.q_mod()), &["make_field"]);
    rec.published(
        "unique_involution",
        json!(true),
        json!(unique_order2_unit(10)),
        &["unique_order2_unit"],
    );
    let fixed_all = ctx
        .cyclotomic_cosets()
        .iter()
        .all(|q| act_scale(q, -9, 10).is_ok_and(|v| &v == q));
    rec.check(
        "every_coset_fixed",
        fixed_all && ctx.coset_of(1).len() == 1,
        json!(fixed_all),
        &["act_scale"],
    );
    let eta = f.sqrt_minus_one()?;
    rec.check(
        "sqrt_minus_one",
        f.square(eta) == lambda,
        f.to_json(eta),
        &["sqrt_minus_one"],
    );
    let mut family = Vec::new();
    let mut lcd_ok = true;
    let mut mds_ok = true;
    for d in 2..=5u64 {
        let c = hermitian_mds_family(&f, lambda, 5, d)?;
        let lin = c.to_generator_matrix()?;
        let params = exact_params(&lin, budget)?;
        lcd_ok &= c.is_lcd() && is_galois_lcd(&lin, c.galois()).lcd;
        mds_ok &= params.mds();
        family.push(params_json(&params));
    }
    family.reverse();
    rec.published(
        "family",
        json!([[5, 1, 5], [5, 2, 4], [5, 3, 3], [5, 4, 2]]),
        Value::Array(family.clone()),
        &["hermitian_mds_family", "min_distance"],
    );
    rec.published("hermitian_lcd", json!(true), json!(lcd_ok), &["is_galois_lcd", "is_lcd"]);
    rec.published("mds", json!(true), json!(mds_ok), &["min_distance"]);
    rec.published("family_count", json!(9), json!(family.len()), &["hermitian_mds_family"]);

    // Negacyclic length 2 over the same field: the 2-adic necessary condition
    // fails, and accordingly not every code is Hermitian LCD.
    let even = CosetContext::hermitian(3, 2, 2, 2)?;
    let necessary = hermitian_necessary_check(3, 2, 2, 2)?;
    rec.check(
        "necessary_condition",
        !necessary && all_lcd_exponent(&even).is_none(),
        json!({"condition": necessary, "all_lcd": all_lcd_exponent(&even).is_some()}),
        &["hermitian_necessary_check", "all_lcd_exponent"],
    );
    Ok(rec.finish(inputs(&f, 2, Some(5), Some(-1), Value::Null)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parses_and_names_known_examples() {
        let m = manifest();
        assert_eq!(m.version, 1);
        assert!(m.flags.iter().all(|f| EXAMPLE_IDS.contains(&f.example.as_str())));
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            reproduce("9.9", Budget::default()).unwrap_err(),
            Error::UnknownExample("9.9".into())
        );
    }

    #[test]
    fn inputs_round_trip() {
        for rec in reproduce_all(Budget::default()).unwrap() {
            let v = serde_json::to_value(&rec.inputs).unwrap();
            let back: ExampleInputs = serde_json::from_value(v).unwrap();
            assert_eq!(back, rec.inputs);
        }
    }
}
