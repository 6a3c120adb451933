//! Built-in curve models: rational points, a designated point Q, generator
//! functions with pole orders at Q, and the evaluation matrix whose rows are
//! canonical monomials of strictly increasing pole order.
//!
//! Point coordinates only seed the generator value tables; evaluation always
//! multiplies generator values, so special points (Klein's Q', Q'') work from
//! their embedded values.

use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gf::{builtin, Field, FieldConfig};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Error)]
pub enum CurveError {
    #[error("unknown curve model `{0}`")]
    UnknownModel(String),
    #[error("config parse error: {0}")]
    ConfigParse(String),
}

/// A monomial in the generator functions, canonical per pole order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Monomial {
    /// Exponent per generator, in generator order.
    pub exponents: Vec<u32>,
    pub pole_order: u64,
}

impl Monomial {
    /// Canonical representative of a pole order: the exponent vector that is
    /// lexicographically smallest compared on (e_k, ..., e_1), i.e. late
    /// generators get the smallest possible exponents.
    pub fn canonical(gen_orders: &[u64], pole_order: u64) -> Option<Monomial> {
        fn rec(orders: &[u64], remaining: u64, expo: &mut Vec<u32>) -> bool {
            if orders.is_empty() {
                return remaining == 0;
            }
            let last = orders[orders.len() - 1];
            let rest = &orders[..orders.len() - 1];
            for e in 0..=(remaining / last) as u32 {
                expo.push(e);
                if rec(rest, remaining - e as u64 * last, expo) {
                    return true;
                }
                expo.pop();
            }
            false
        }
        let mut rev_expo = Vec::new();
        if rec(gen_orders, pole_order, &mut rev_expo) {
            rev_expo.reverse();
            Some(Monomial {
                exponents: rev_expo,
                pole_order,
            })
        } else {
            None
        }
    }

    pub fn display(&self, gen_names: &[String]) -> String {
        if self.exponents.iter().all(|&e| e == 0) {
            return "1".into();
        }
        self.exponents
            .iter()
            .zip(gen_names)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, n)| {
                let name = if n.contains('/') {
                    format!("({n})")
                } else {
                    n.clone()
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PointInfo {
    pub label: String,
}

#[derive(Debug, Clone)]
pub struct Generator {
    pub name: String,
    pub pole_order: u64,
    /// Value at every evaluation point, in point order.
    pub values: Vec<u16>,
}

/// A curve model: field, ordered evaluation points, generators with pole
/// orders, and the Weierstrass semigroup at the designated point Q.
#[derive(Debug, Clone)]
pub struct CurveModel {
    pub name: String,
    pub field: Field,
    pub genus: u64,
    pub q_label: String,
    pub points: Vec<PointInfo>,
    pub generators: Vec<Generator>,
    pub weierstrass: NumericalSemigroup,
}

/// One evaluation-matrix row: a canonical monomial and its values.
#[derive(Debug, Clone)]
pub struct EvalRow {
    pub monomial: Monomial,
    pub values: Vec<u16>,
}

/// Rows labeled by canonical monomials of increasing pole order, columns by
/// the model's points.
#[derive(Debug, Clone)]
pub struct EvaluationMatrix {
    pub field: Field,
    pub model_name: String,
    pub genus: u64,
    pub weierstrass: NumericalSemigroup,
    pub rows: Vec<EvalRow>,
    pub col_labels: Vec<String>,
}

impl EvaluationMatrix {
    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }
}

pub const BUILTIN_NAMES: [&str; 7] = [
    "rs_q8",
    "hermitian_q2",
    "hermitian_g1_q2",
    "hermitian_q3",
    "hyperelliptic_f7",
    "hyperelliptic2_f2",
    "klein_f8",
];

impl CurveModel {
    pub fn builtin(name: &str) -> Result<CurveModel, CurveError> {
        match name {
            "rs_q8" => Ok(rs_q8()),
            "hermitian_q2" => Ok(hermitian_q2()),
            "hermitian_g1_q2" => Ok(hermitian_g1_q2()),
            "hermitian_q3" => Ok(hermitian_q3()),
            "hyperelliptic_f7" => Ok(hyperelliptic_f7()),
            "hyperelliptic2_f2" => Ok(hyperelliptic2_f2()),
            "klein_f8" => Ok(klein_f8()),
            other => Err(CurveError::UnknownModel(other.to_string())),
        }
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn gen_orders(&self) -> Vec<u64> {
        self.generators.iter().map(|g| g.pole_order).collect()
    }

    pub fn gen_names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    /// One row per nongap of W up to `bound`, canonical monomial per nongap,
    /// entries as products of generator values.
    pub fn eval_matrix(&self, bound: u64) -> EvaluationMatrix {
        let orders = self.gen_orders();
        let n = self.point_count();
        let f = &self.field;
        let mut rows = Vec::new();
        for a in 0..=bound {
            if !self.weierstrass.contains(a) {
                continue;
            }
            let m = Monomial::canonical(&orders, a).expect("nongap must be representable");
            let mut values = vec![1u16; n];
            for (gi, &e) in m.exponents.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let gv = &self.generators[gi].values;
                for (v, &g) in values.iter_mut().zip(gv) {
                    *v = f.mul(*v, f.pow(g, e as u64));
                }
            }
            rows.push(EvalRow {
                monomial: m,
                values,
            });
        }
        EvaluationMatrix {
            field: f.clone(),
            model_name: self.name.clone(),
            genus: self.genus,
            weierstrass: self.weierstrass.clone(),
            rows,
            col_labels: self.points.iter().map(|p| p.label.clone()).collect(),
        }
    }

    pub fn from_config_str(json: &str) -> Result<CurveModel, CurveError> {
        let cfg: ModelConfig =
            serde_json::from_str(json).map_err(|e| CurveError::ConfigParse(e.to_string()))?;
        cfg.build()
    }

    pub fn from_config_path(path: &Path) -> Result<CurveModel, CurveError> {
        let text =
            std::fs::read_to_string(path).map_err(|e| CurveError::ConfigParse(e.to_string()))?;
        Self::from_config_str(&text)
    }

    fn validate(self) -> CurveModel {
        for g in &self.generators {
            assert_eq!(
                g.values.len(),
                self.points.len(),
                "generator {} value count",
                g.name
            );
            for &v in &g.values {
                assert!((v as u32) < self.field.order());
            }
        }
        assert_eq!(
            self.weierstrass.genus(),
            self.genus,
            "Weierstrass semigroup genus must match the declared curve genus"
        );
        self
    }
}

/// Structured JSON config for custom models.
#[derive(Debug, Serialize, Deserialize)]
pub struct ModelConfig {
    pub name: String,
    pub field: FieldConfig,
    pub genus: u64,
    #[serde(default = "default_q_label")]
    pub q_label: String,
    pub points: Vec<String>,
    pub generators: Vec<GeneratorConfig>,
}

fn default_q_label() -> String {
    "Q".into()
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub name: String,
    pub pole_order: u64,
    /// Canonical integer encodings or power-of-primitive tokens.
    pub values: Vec<serde_json::Value>,
}

impl ModelConfig {
    pub fn build(self) -> Result<CurveModel, CurveError> {
        let field =
            Field::from_config(&self.field).map_err(|e| CurveError::ConfigParse(e.to_string()))?;
        let mut generators = Vec::new();
        for g in &self.generators {
            let mut values = Vec::with_capacity(g.values.len());
            for v in &g.values {
                let parsed = match v {
                    serde_json::Value::Number(n) => n
                        .as_u64()
                        .filter(|&x| x < field.order() as u64)
                        .map(|x| x as u16),
                    serde_json::Value::String(s) => field.parse(s),
                    _ => None,
                };
                match parsed {
                    Some(x) => values.push(x),
                    None => {
                        return Err(CurveError::ConfigParse(format!(
                            "bad value {v} for generator {}",
                            g.name
                        )))
                    }
                }
            }
            generators.push(Generator {
                name: g.name.clone(),
                pole_order: g.pole_order,
                values,
            });
        }
        let orders: Vec<u64> = generators.iter().map(|g| g.pole_order).collect();
        let weierstrass = NumericalSemigroup::from_generators(&orders)
            .map_err(|e| CurveError::ConfigParse(e.to_string()))?;
        Ok(CurveModel {
            name: self.name,
            field,
            genus: self.genus,
            q_label: self.q_label,
            points: self.points.iter().map(|l| PointInfo { label: l.clone() }).collect(),
            generators,
            weierstrass,
        }
        .validate())
    }
}

/// A bivariate polynomial sum of c * x^i * y^j used for affine point scans.
pub struct AffineEquation {
    pub terms: Vec<(u16, u32, u32)>,
}

impl AffineEquation {
    pub fn eval(&self, f: &Field, x: u16, y: u16) -> u16 {
        let mut acc = 0u16;
        for &(c, i, j) in &self.terms {
            let t = f.mul(c, f.mul(f.pow(x, i as u64), f.pow(y, j as u64)));
            acc = f.add(acc, t);
        }
        acc
    }

    /// Exhaustive scan of field x field, in field enumeration order of
    /// (x, y).
    pub fn affine_points_of(&self, f: &Field) -> Vec<(u16, u16)> {
        let elems = f.enumerate();
        let mut out = Vec::new();
        for &x in &elems {
            for &y in &elems {
                if self.eval(f, x, y) == 0 {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

fn coord_label(f: &Field, x: u16, y: u16) -> String {
    format!("({},{})", f.show(x), f.show(y))
}

fn model_from_xy(
    name: &str,
    f: Field,
    genus: u64,
    pts: Vec<(u16, u16)>,
    xy_names: (&str, &str),
    orders: (u64, u64),
) -> CurveModel {
    let labels: Vec<PointInfo> = pts
        .iter()
        .map(|&(x, y)| PointInfo {
            label: coord_label(&f, x, y),
        })
        .collect();
    let xs = pts.iter().map(|p| p.0).collect();
    let ys = pts.iter().map(|p| p.1).collect();
    let weierstrass = NumericalSemigroup::from_generators(&[orders.0, orders.1]).unwrap();
    CurveModel {
        name: name.into(),
        field: f,
        genus,
        q_label: "Q".into(),
        points: labels,
        generators: vec![
            Generator {
                name: xy_names.0.into(),
                pole_order: orders.0,
                values: xs,
            },
            Generator {
                name: xy_names.1.into(),
                pole_order: orders.1,
                values: ys,
            },
        ],
        weierstrass,
    }
    .validate()
}

/// Projective line over GF(8): columns 1, w, ..., w^6, 0; generator x of
/// pole order 1 at infinity.
fn rs_q8() -> CurveModel {
    let f = builtin::gf8();
    let mut pts: Vec<u16> = f.enumerate()[1..].to_vec();
    pts.push(0);
    let labels = pts
        .iter()
        .map(|&x| PointInfo { label: f.show(x) })
        .collect();
    let weierstrass = NumericalSemigroup::natural_numbers();
    CurveModel {
        name: "rs_q8".into(),
        field: f,
        genus: 0,
        q_label: "Q".into(),
        points: labels,
        generators: vec![Generator {
            name: "x".into(),
            pole_order: 1,
            values: pts,
        }],
        weierstrass,
    }
    .validate()
}

fn hermitian_q2_equation() -> AffineEquation {
    // y^2 + y - x^3 over a char-2 field: y^2 + y + x^3
    AffineEquation {
        terms: vec![(1, 0, 2), (1, 0, 1), (1, 3, 0)],
    }
}

/// Hermitian curve y^2 + y = x^3 over GF(4), column order as displayed in
/// the opening example: x runs through 1, w, w^2 and then 0.
fn hermitian_q2() -> CurveModel {
    let f = builtin::gf4();
    let mut pts = hermitian_q2_equation().affine_points_of(&f);
    let xkey = |x: u16| -> u32 {
        if x == 0 {
            u32::MAX
        } else {
            f.enumerate().iter().position(|&e| e == x).unwrap() as u32
        }
    };
    let ykey = |y: u16| f.enumerate().iter().position(|&e| e == y).unwrap() as u32;
    pts.sort_by_key(|&(x, y)| (xkey(x), ykey(y)));
    model_from_xy("hermitian_q2", f, 1, pts, ("x", "y"), (2, 3))
}

/// The same genus-1 Hermitian curve with points in plain enumeration order
/// and alpha notation, matching the worked genus-1 subsets.
fn hermitian_g1_q2() -> CurveModel {
    let f = Field::with_symbol(2, 2, &[1, 1, 1], "a").unwrap();
    let mut pts = hermitian_q2_equation().affine_points_of(&f);
    let key = |v: u16| f.enumerate().iter().position(|&e| e == v).unwrap() as u32;
    pts.sort_by_key(|&(x, y)| (key(x), key(y)));
    model_from_xy("hermitian_g1_q2", f, 1, pts, ("x", "y"), (2, 3))
}

/// Hermitian curve y^3 + y = x^4 over GF(9), 27 finite points.
fn hermitian_q3() -> CurveModel {
    let f = builtin::gf9();
    // y^3 + y - x^4
    let eq = AffineEquation {
        terms: vec![(1, 0, 3), (1, 0, 1), (f.neg(1), 4, 0)],
    };
    let mut pts = eq.affine_points_of(&f);
    let key = |v: u16| f.enumerate().iter().position(|&e| e == v).unwrap() as u32;
    pts.sort_by_key(|&(x, y)| (key(x), key(y)));
    model_from_xy("hermitian_q3", f, 3, pts, ("x", "y"), (3, 4))
}

/// Hyperelliptic curve y^2 = x^7 + x^6 - x over GF(7): 13 points, x and y of
/// pole orders 2 and 7.
fn hyperelliptic_f7() -> CurveModel {
    let f = builtin::gf7();
    // y^2 - x^7 - x^6 + x
    let eq = AffineEquation {
        terms: vec![(1, 0, 2), (f.neg(1), 7, 0), (f.neg(1), 6, 0), (1, 1, 0)],
    };
    let scan = eq.affine_points_of(&f);
    // paper order: (0,0) first, then (a, 1) and (a, -1) per nonzero a
    let mut pts = vec![(0u16, 0u16)];
    for &a in &f.enumerate()[1..] {
        for y in [1u16, f.neg(1)] {
            debug_assert!(scan.contains(&(a, y)));
            pts.push((a, y));
        }
    }
    assert_eq!(pts.len(), scan.len());
    model_from_xy("hyperelliptic_f7", f, 3, pts, ("x", "y"), (2, 7))
}

/// Genus-3 hyperelliptic model over GF(2) with three rational points and
/// four generators u, v, w, x of pole orders 4, 5, 6, 7; evaluation values
/// are embedded.
fn hyperelliptic2_f2() -> CurveModel {
    let f = builtin::gf2();
    let points = ["P1", "P2", "P3"]
        .iter()
        .map(|l| PointInfo {
            label: (*l).into(),
        })
        .collect();
    let gens = [
        ("u", 4, vec![0, 0, 0]),
        ("v", 5, vec![0, 0, 0]),
        ("w", 6, vec![0, 0, 1]),
        ("x", 7, vec![0, 1, 0]),
    ];
    let generators = gens
        .into_iter()
        .map(|(n, o, values)| Generator {
            name: n.into(),
            pole_order: o,
            values,
        })
        .collect();
    CurveModel {
        name: "hyperelliptic2_f2".into(),
        field: f,
        genus: 3,
        q_label: "Q".into(),
        points,
        generators,
        weierstrass: NumericalSemigroup::from_generators(&[4, 5, 6, 7]).unwrap(),
    }
    .validate()
}

/// Klein quartic X^3 Y + Y^3 Z + Z^3 X over GF(8). Columns are Q' = Q_2,
/// Q'' = Q_1 and the 21 affine points P_1..P_21 grouped in colinear triples
/// (Q', P_{3i+1}, P_{3i+2}, P_{3i+3} share a line). Generators Z/X, YZ/X^2,
/// Y^2Z/X^3 of pole orders 3, 5, 7 at Q = Q_3; their values at Q', Q'' come
/// from the embedded table (0,0 / 0,0 / 1,0).
fn klein_f8() -> CurveModel {
    let f = builtin::gf8();
    let pt_tokens: [(&str, &str); 21] = [
        ("w", "1"),
        ("w2", "1"),
        ("w4", "1"),
        ("1", "w"),
        ("w4", "w"),
        ("w5", "w"),
        ("1", "w2"),
        ("w", "w2"),
        ("w3", "w2"),
        ("w3", "w3"),
        ("w4", "w3"),
        ("w6", "w3"),
        ("1", "w4"),
        ("w2", "w4"),
        ("w6", "w4"),
        ("w2", "w5"),
        ("w3", "w5"),
        ("w5", "w5"),
        ("w", "w6"),
        ("w5", "w6"),
        ("w6", "w6"),
    ];
    let affine: Vec<(u16, u16)> = pt_tokens
        .iter()
        .map(|&(ty, tz)| (f.parse(ty).unwrap(), f.parse(tz).unwrap()))
        .collect();
    // on-curve check with X = 1: y + y^3 z + z^3 = 0
    for &(y, z) in &affine {
        let lhs = f.add(f.add(y, f.mul(f.pow(y, 3), z)), f.pow(z, 3));
        assert_eq!(lhs, 0, "Klein point list entry off the curve");
    }
    let mut points = vec![
        PointInfo { label: "Q'".into() },
        PointInfo {
            label: "Q''".into(),
        },
    ];
    points.extend((0..21).map(|i| PointInfo {
        label: format!("P{}", i + 1),
    }));

    let special = [(0u16, 0u16), (0, 0), (1, 0)]; // (at Q', at Q'') per generator
    let mut f3 = vec![special[0].0, special[0].1];
    let mut f5 = vec![special[1].0, special[1].1];
    let mut f7 = vec![special[2].0, special[2].1];
    for &(y, z) in &affine {
        f3.push(z);
        f5.push(f.mul(y, z));
        f7.push(f.mul(f.mul(y, y), z));
    }
    CurveModel {
        name: "klein_f8".into(),
        field: f,
        genus: 3,
        q_label: "Q3".into(),
        points,
        generators: vec![
            Generator {
                name: "Z/X".into(),
                pole_order: 3,
                values: f3,
            },
            Generator {
                name: "YZ/X^2".into(),
                pole_order: 5,
                values: f5,
            },
            Generator {
                name: "Y^2Z/X^3".into(),
                pole_order: 7,
                values: f7,
            },
        ],
        weierstrass: NumericalSemigroup::from_generators(&[3, 5, 7]).unwrap(),
    }
    .validate()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat::Matrix;

    #[test]
    fn builtin_point_counts() {
        for (name, n) in [
            ("rs_q8", 8),
            ("hermitian_q2", 8),
            ("hermitian_g1_q2", 8),
            ("hermitian_q3", 27),
            ("hyperelliptic_f7", 13),
            ("hyperelliptic2_f2", 3),
            ("klein_f8", 23),
        ] {
            let m = CurveModel::builtin(name).unwrap();
            assert_eq!(m.point_count(), n, "{name}");
        }
        assert!(matches!(
            CurveModel::builtin("nope"),
            Err(CurveError::UnknownModel(_))
        ));
    }

    #[test]
    fn affine_scans_match_the_stated_counts() {
        let f4 = builtin::gf4();
        assert_eq!(hermitian_q2_equation().affine_points_of(&f4).len(), 8);

        let f9 = builtin::gf9();
        let eq = AffineEquation {
            terms: vec![(1, 0, 3), (1, 0, 1), (f9.neg(1), 4, 0)],
        };
        assert_eq!(eq.affine_points_of(&f9).len(), 27);

        let f7 = builtin::gf7();
        let eq = AffineEquation {
            terms: vec![(1, 0, 2), (f7.neg(1), 7, 0), (f7.neg(1), 6, 0), (1, 1, 0)],
        };
        assert_eq!(eq.affine_points_of(&f7).len(), 13);
    }

    #[test]
    fn hyperelliptic_f7_point_shapes() {
        let m = CurveModel::builtin("hyperelliptic_f7").unwrap();
        assert_eq!(m.points[0].label, "(0,0)");
        // remaining points come as (a, 1), (a, -1) pairs
        let f = &m.field;
        let ys = &m.generators[1].values;
        for i in (1..13).step_by(2) {
            assert_eq!(ys[i], 1);
            assert_eq!(ys[i + 1], f.neg(1));
        }
    }

    #[test]
    fn canonical_monomials() {
        // pole 9 over <2,3> is x^3 y, not y^3
        let m = Monomial::canonical(&[2, 3], 9).unwrap();
        assert_eq!(m.exponents, vec![3, 1]);
        // pole 10 over <3,5,7> prefers f5^2 over f3 f7
        let m = Monomial::canonical(&[3, 5, 7], 10).unwrap();
        assert_eq!(m.exponents, vec![0, 2, 0]);
        // pole 13 over <3,5,7> is f3 f5^2
        let m = Monomial::canonical(&[3, 5, 7], 13).unwrap();
        assert_eq!(m.exponents, vec![1, 2, 0]);
        // gaps have no representation
        assert!(Monomial::canonical(&[3, 4], 5).is_none());
    }

    #[test]
    fn eval_matrix_rs8_is_the_printed_vandermonde() {
        let m = CurveModel::builtin("rs_q8").unwrap();
        let em = m.eval_matrix(7);
        assert_eq!(em.rows.len(), 8);
        let f = &m.field;
        let expect: Vec<Vec<u16>> = (0..8u64)
            .map(|e| {
                let mut row: Vec<u16> =
                    f.enumerate()[1..].iter().map(|&x| f.pow(x, e)).collect();
                row.push(if e == 0 { 1 } else { 0 });
                row
            })
            .collect();
        for (r, exp) in em.rows.iter().zip(&expect) {
            assert_eq!(&r.values, exp);
        }
    }

    #[test]
    fn eval_matrix_bound_zero_is_all_ones() {
        let m = CurveModel::builtin("hermitian_q2").unwrap();
        let em = m.eval_matrix(0);
        assert_eq!(em.rows.len(), 1);
        assert!(em.rows[0].values.iter().all(|&v| v == 1));
    }

    #[test]
    fn eval_rows_have_strictly_increasing_nongap_pole_orders() {
        for name in BUILTIN_NAMES {
            let m = CurveModel::builtin(name).unwrap();
            let em = m.eval_matrix(20);
            let poles: Vec<u64> = em.rows.iter().map(|r| r.monomial.pole_order).collect();
            assert!(poles.windows(2).all(|w| w[0] < w[1]), "{name}");
            for &p in &poles {
                assert!(m.weierstrass.contains(p), "{name}: {p}");
            }
            let nongaps = m.weierstrass.nongaps_upto(20);
            assert_eq!(poles, nongaps, "{name}");
        }
    }

    #[test]
    fn entrywise_row_products_stay_in_pole_order_span() {
        // product of rows a and b evaluates a function of pole order a+b, so
        // appending it to the rows of pole order <= a+b must not raise rank
        for name in ["hermitian_q2", "hermitian_q3", "klein_f8"] {
            let m = CurveModel::builtin(name).unwrap();
            let em = m.eval_matrix(24);
            let f = &m.field;
            for (ia, ib) in [(1usize, 1usize), (1, 2), (2, 3)] {
                let a = &em.rows[ia];
                let b = &em.rows[ib];
                let sum = a.monomial.pole_order + b.monomial.pole_order;
                if sum > 24 {
                    continue;
                }
                let prod: Vec<u16> = a
                    .values
                    .iter()
                    .zip(&b.values)
                    .map(|(&x, &y)| f.mul(x, y))
                    .collect();
                let mut rows: Vec<Vec<u16>> = em
                    .rows
                    .iter()
                    .filter(|r| r.monomial.pole_order <= sum)
                    .map(|r| r.values.clone())
                    .collect();
                let base = Matrix::from_rows(f.clone(), &rows).rank();
                rows.push(prod);
                let with = Matrix::from_rows(f.clone(), &rows).rank();
                assert_eq!(base, with, "{name} rows {ia},{ib}");
            }
        }
    }

    #[test]
    fn klein_g8_column_block() {
        // printed G_8 columns for P4..P6 pin the affine generator values
        let m = CurveModel::builtin("klein_f8").unwrap();
        let f = &m.field;
        let em = m.eval_matrix(13);
        let row = |pole: u64| {
            em.rows
                .iter()
                .find(|r| r.monomial.pole_order == pole)
                .unwrap()
        };
        let show = |vals: &[u16], idx: &[usize]| -> Vec<String> {
            idx.iter().map(|&i| f.show(vals[i])).collect()
        };
        let cols = [0usize, 1, 2, 5, 6, 7]; // Q', Q'', P1, P4, P5, P6
        assert_eq!(show(&row(3).values, &cols), ["0", "0", "1", "w", "w", "w"]);
        assert_eq!(
            show(&row(7).values, &cols),
            ["1", "0", "w2", "w", "w2", "w4"]
        );
        assert_eq!(
            show(&row(13).values, &cols),
            ["0", "0", "w2", "w3", "w4", "w6"]
        );
    }

    #[test]
    fn custom_model_from_config() {
        let json = r#"{
            "name": "toy",
            "field": {"p": 2, "k": 1, "modulus": [0, 1]},
            "genus": 3,
            "points": ["P1", "P2", "P3"],
            "generators": [
                {"name": "u", "pole_order": 4, "values": [0, 0, 0]},
                {"name": "v", "pole_order": 5, "values": [0, 0, 0]},
                {"name": "w", "pole_order": 6, "values": [0, 0, 1]},
                {"name": "x", "pole_order": 7, "values": [0, 1, 0]}
            ]
        }"#;
        let m = CurveModel::from_config_str(json).unwrap();
        assert_eq!(m.point_count(), 3);
        assert_eq!(m.weierstrass.gaps(), &[1, 2, 3]);
        assert!(CurveModel::from_config_str("{").is_err());
    }
}
