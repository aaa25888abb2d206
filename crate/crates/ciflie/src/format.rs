//! JSON documents for algebras, CIF sets, crisp subsets, maps and verdicts.
//!
//! Output is canonical: keys are sorted (serde_json's default map), tables
//! are dense and in universe order, and rationals are always `"num/den"`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use ciflie_core::set::Component;
use ciflie_core::value::{format_rational, parse_rational};
use ciflie_core::verify::{Verdict, Witness};
use ciflie_core::{
    fixtures, make_superalgebra, CifSet, CifValue, CrispSubset, LieSuperalgebra, LinearMap, Space, StructureConstant,
    SuperVector, UnitValue,
};
use serde_json::{json, Map, Value};

use crate::universe_cap;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] ciflie_core::Error),
}

pub type Result<T, E = FormatError> = std::result::Result<T, E>;

fn schema(msg: impl Into<String>) -> FormatError {
    FormatError::Schema(msg.into())
}

/// Pretty, key-sorted JSON with a trailing newline.
pub fn to_canonical(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values always serialize");
    s.push('\n');
    s
}

pub fn read_json(path: &Path) -> Result<Value> {
    let text = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|source| FormatError::Io { path: path.into(), source })?
    } else {
        fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.into(), source })?
    };
    Ok(serde_json::from_str(&text)?)
}

pub fn write_json(path: &Path, value: &Value) -> Result<()> {
    let text = to_canonical(value);
    if path.as_os_str() == "-" {
        print!("{text}");
        return Ok(());
    }
    fs::write(path, text).map_err(|source| FormatError::Io { path: path.into(), source })
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| schema(format!("missing field `{key}`")))
}

fn as_u64(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| schema(format!("`{what}` must be a non-negative integer")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize> {
    usize::try_from(as_u64(v, what)?).map_err(|_| schema(format!("`{what}` is too large")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| schema(format!("`{what}` must be an array")))
}

// ---- algebras ----

pub fn algebra_to_json(alg: &LieSuperalgebra) -> Value {
    let sc: Vec<Value> = alg.structure_constants().iter().map(|c| json!([c.i, c.j, c.k, c.value])).collect();
    json!({ "p": alg.p(), "d0": alg.even_dim(), "d1": alg.odd_dim(), "sc": sc })
}

/// Raw fields of an algebra document, before axiom validation.
pub struct AlgebraDoc {
    pub p: u32,
    pub d0: usize,
    pub d1: usize,
    pub sc: Vec<StructureConstant>,
}

pub fn algebra_doc(v: &Value) -> Result<AlgebraDoc> {
    if !v.is_object() {
        return Err(schema("algebra document must be an object"));
    }
    let p = u32::try_from(as_u64(field(v, "p")?, "p")?).map_err(|_| schema("`p` is too large"))?;
    let d0 = as_usize(field(v, "d0")?, "d0")?;
    let d1 = as_usize(field(v, "d1")?, "d1")?;
    let sc = match v.get("sc") {
        None => Vec::new(),
        Some(list) => as_array(list, "sc")?
            .iter()
            .map(|entry| {
                let e = as_array(entry, "sc entry")?;
                if e.len() != 4 {
                    return Err(schema("each `sc` entry is [i, j, k, value]"));
                }
                let value = e[3].as_i64().ok_or_else(|| schema("structure constant must be an integer"))?;
                Ok(StructureConstant::new(as_usize(&e[0], "i")?, as_usize(&e[1], "j")?, as_usize(&e[2], "k")?, value))
            })
            .collect::<Result<_>>()?,
    };
    Ok(AlgebraDoc { p, d0, d1, sc })
}

pub fn algebra_from_json(v: &Value) -> Result<LieSuperalgebra> {
    let doc = algebra_doc(v)?;
    Ok(make_superalgebra(doc.p, doc.d0, doc.d1, &doc.sc)?)
}

/// Built-in algebra names: `heisenberg_5_1`, `heisenberg_P_N`, `abelian_P_D0_D1`.
pub fn builtin_algebra(name: &str) -> Option<ciflie_core::Result<LieSuperalgebra>> {
    let parts: Vec<&str> = name.split('_').collect();
    let nums: Option<Vec<u64>> = parts[1..].iter().map(|s| s.parse().ok()).collect();
    let nums = nums?;
    let small = |n: u64| u32::try_from(n).unwrap_or(u32::MAX);
    match (parts[0], nums.as_slice()) {
        ("heisenberg", [p, n]) => Some(LieSuperalgebra::heisenberg(small(*p), *n as usize)),
        ("abelian", [p, d0, d1]) => Some(LieSuperalgebra::abelian(small(*p), *d0 as usize, *d1 as usize)),
        _ => None,
    }
}

pub fn space_for(alg: LieSuperalgebra) -> Result<Arc<Space>> {
    Ok(Arc::new(Space::with_cap(alg, universe_cap())?))
}

/// An algebra given inline, as a path relative to `base`, or by built-in name.
pub fn resolve_algebra(v: &Value, base: &Path) -> Result<LieSuperalgebra> {
    match v {
        Value::String(s) => {
            if let Some(alg) = builtin_algebra(s) {
                return Ok(alg?);
            }
            algebra_from_json(&read_json(&base.join(s))?)
        }
        _ => algebra_from_json(v),
    }
}

/// Load an algebra from a file path or a built-in name.
pub fn load_algebra(spec: &str) -> Result<LieSuperalgebra> {
    resolve_algebra(&Value::String(spec.into()), Path::new("."))
}

// ---- vectors and values ----

pub fn vector_to_json(x: &SuperVector) -> Value {
    json!(x.coords())
}

pub fn vector_from_json(v: &Value, space: &Space) -> Result<usize> {
    let coords = as_array(v, "x")?
        .iter()
        .map(|c| u32::try_from(as_u64(c, "coordinate")?).map_err(|_| schema("coordinate too large")))
        .collect::<Result<Vec<u32>>>()?;
    let x = space.algebra().vector(coords)?;
    Ok(space.index_of(&x)?)
}

fn rational_str(v: &Value, key: &str) -> Result<ciflie_core::Rational> {
    let s = field(v, key)?.as_str().ok_or_else(|| schema(format!("`{key}` must be a \"num/den\" string")))?;
    Ok(parse_rational(s)?)
}

fn value_fields(v: &CifValue, obj: &mut Map<String, Value>) {
    let (l, r) = (v.lambda(), v.rho());
    obj.insert("lr".into(), format_rational(&l.r()).into());
    obj.insert("lw".into(), format_rational(&l.w()).into());
    obj.insert("rr".into(), format_rational(&r.r()).into());
    obj.insert("rw".into(), format_rational(&r.w()).into());
}

fn value_from_json(v: &Value) -> Result<CifValue> {
    let l = UnitValue::new(rational_str(v, "lr")?, rational_str(v, "lw")?)?;
    let r = UnitValue::new(rational_str(v, "rr")?, rational_str(v, "rw")?)?;
    Ok(CifValue::new(l, r)?)
}

// ---- CIF sets ----

pub fn set_to_json(a: &CifSet) -> Value {
    let space = a.space();
    let entries: Vec<Value> = space
        .indices()
        .map(|i| {
            let mut obj = Map::new();
            obj.insert("x".into(), json!(space.coords(i)));
            value_fields(a.value(i), &mut obj);
            Value::Object(obj)
        })
        .collect();
    json!({ "algebra": algebra_to_json(space.algebra()), "entries": entries })
}

/// Parse a set over `space` (its `algebra` field, if present, must agree).
pub fn set_on_space(v: &Value, space: Arc<Space>, base: &Path) -> Result<CifSet> {
    if let Some(alg) = v.get("algebra") {
        if resolve_algebra(alg, base)? != *space.algebra() {
            return Err(ciflie_core::Error::AmbientMismatch.into());
        }
    }
    let default = v.get("default").map(value_from_json).transpose()?;
    let mut table: Vec<Option<CifValue>> = vec![None; space.size()];
    for entry in as_array(field(v, "entries")?, "entries")? {
        let i = vector_from_json(field(entry, "x")?, &space)?;
        if table[i].is_some() {
            return Err(schema(format!("element {} listed twice", space.vector(i))));
        }
        table[i] = Some(value_from_json(entry)?);
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.or(default).ok_or_else(|| schema(format!("no entry for {} and no `default`", space.vector(i)))))
        .collect::<Result<Vec<_>>>()?;
    Ok(CifSet::new(space, table)?)
}

pub fn set_from_json(v: &Value, base: &Path) -> Result<CifSet> {
    let alg = resolve_algebra(field(v, "algebra")?, base)?;
    set_on_space(v, space_for(alg)?, base)
}

pub fn load_set(path: &Path) -> Result<CifSet> {
    set_from_json(&read_json(path)?, path.parent().unwrap_or(Path::new(".")))
}

// ---- crisp subsets ----

pub fn crisp_to_json(s: &CrispSubset) -> Value {
    let members: Vec<Value> = s.vectors().map(|x| vector_to_json(&x)).collect();
    json!({ "algebra": algebra_to_json(s.space().algebra()), "members": members })
}

pub fn crisp_from_json(v: &Value, base: &Path) -> Result<CrispSubset> {
    let space = space_for(resolve_algebra(field(v, "algebra")?, base)?)?;
    let members = as_array(field(v, "members")?, "members")?
        .iter()
        .map(|x| vector_from_json(x, &space))
        .collect::<Result<Vec<_>>>()?;
    Ok(CrispSubset::from_indices(space, members))
}

// ---- linear maps ----

pub fn map_to_json(phi: &LinearMap) -> Value {
    json!({
        "source": algebra_to_json(phi.source().algebra()),
        "target": algebra_to_json(phi.target().algebra()),
        "matrix": phi.rows(),
    })
}

/// `{"source", "target", "matrix"}`; `target` defaults to `source`.
pub fn map_from_json(v: &Value, base: &Path) -> Result<LinearMap> {
    let source = space_for(resolve_algebra(field(v, "source")?, base)?)?;
    let target = match v.get("target") {
        Some(t) => {
            let alg = resolve_algebra(t, base)?;
            if alg == *source.algebra() {
                source.clone()
            } else {
                space_for(alg)?
            }
        }
        None => source.clone(),
    };
    let rows = as_array(field(v, "matrix")?, "matrix")?
        .iter()
        .map(|row| {
            as_array(row, "matrix row")?
                .iter()
                .map(|c| u32::try_from(as_u64(c, "matrix entry")?).map_err(|_| schema("matrix entry too large")))
                .collect::<Result<Vec<u32>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LinearMap::new(source, target, rows)?)
}

pub fn load_map(path: &Path) -> Result<LinearMap> {
    map_from_json(&read_json(path)?, path.parent().unwrap_or(Path::new(".")))
}

// ---- verdicts ----

fn component_name(c: Component) -> &'static str {
    match c {
        Component::Lambda => "lambda",
        Component::Rho => "rho",
    }
}

pub fn witness_to_json(w: &Witness) -> Value {
    let mut obj = BTreeMap::new();
    let kind = match w {
        Witness::Normalization => "normalization",
        Witness::Addition { component, x, y } => {
            obj.insert("component", json!(component_name(*component)));
            obj.insert("x", vector_to_json(x));
            obj.insert("y", vector_to_json(y));
            "addition"
        }
        Witness::Scalar { component, alpha, x } => {
            obj.insert("component", json!(component_name(*component)));
            obj.insert("alpha", json!(alpha));
            obj.insert("x", vector_to_json(x));
            "scalar"
        }
        Witness::NotGraded { x } => {
            obj.insert("x", x.as_ref().map_or(Value::Null, vector_to_json));
            "not-graded"
        }
        Witness::ExtensionsNotHomogeneous { component, x, y } => {
            obj.insert("component", json!(component_name(*component)));
            obj.insert("x", vector_to_json(x));
            obj.insert("y", vector_to_json(y));
            "not-homogeneous"
        }
        Witness::Bracket { component, x, y, negated } => {
            obj.insert("component", json!(component_name(*component)));
            obj.insert("x", vector_to_json(x));
            obj.insert("y", vector_to_json(y));
            obj.insert("negated", json!(negated));
            "bracket"
        }
    };
    obj.insert("kind", json!(kind));
    obj.insert("message", json!(w.to_string()));
    json!(obj)
}

pub fn verdict_to_json(v: &Verdict) -> Value {
    json!({
        "holds": v.holds,
        "witness": v.witness.as_ref().map_or(Value::Null, witness_to_json),
        "checked_pairs": v.checked_pairs,
    })
}

/// Built-in fixture documents by name.
pub fn fixture(name: &str, algebra: Option<&str>) -> Result<Value> {
    match name {
        "paper_example" => Ok(set_to_json(&fixtures::paper_example())),
        "heisenberg_5_1" => Ok(algebra_to_json(fixtures::heisenberg_5_1().algebra())),
        "trivial" => {
            let alg = match algebra {
                Some(spec) => load_algebra(spec)?,
                None => fixtures::heisenberg_5_1().algebra().clone(),
            };
            Ok(set_to_json(&CifSet::trivial(space_for(alg)?)))
        }
        other => match builtin_algebra(other) {
            Some(alg) => Ok(algebra_to_json(&alg?)),
            None => Err(schema(format!("unknown fixture `{other}`"))),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        let h = fixtures::heisenberg_5_1();
        let doc = algebra_to_json(h.algebra());
        assert_eq!(doc, json!({"p": 5, "d0": 1, "d1": 2, "sc": [[1, 2, 0, 1], [2, 1, 0, 1]]}));
        assert_eq!(algebra_from_json(&doc).unwrap(), *h.algebra());
    }

    #[test]
    fn set_round_trip_and_default() {
        let ex = fixtures::paper_example();
        let doc = set_to_json(&ex);
        assert_eq!(set_from_json(&doc, Path::new(".")).unwrap(), ex);
        assert_eq!(doc["entries"][25], json!({"x": [1, 0, 0], "lr": "7/10", "lw": "7/10", "rr": "1/5", "rw": "1/5"}));

        let sparse = json!({
            "algebra": "heisenberg_5_1",
            "entries": [{"x": [0, 0, 0], "lr": "1", "lw": "1", "rr": "0", "rw": "0"}],
            "default": {"lr": "0", "lw": "0", "rr": "1", "rw": "1"},
        });
        let t = set_from_json(&sparse, Path::new(".")).unwrap();
        assert_eq!(t, CifSet::trivial(ex.space().clone()));
        let missing = json!({"algebra": "heisenberg_5_1", "entries": []});
        assert!(matches!(set_from_json(&missing, Path::new(".")), Err(FormatError::Schema(_))));
        let bad = json!({"algebra": "heisenberg_5_1", "entries": [], "default": {"lr": "0.5", "lw": "0", "rr": "1", "rw": "1"}});
        assert!(set_from_json(&bad, Path::new(".")).is_err());
    }

    #[test]
    fn builtin_names() {
        assert_eq!(builtin_algebra("abelian_5_1_1").unwrap().unwrap().dim(), 2);
        assert_eq!(builtin_algebra("heisenberg_7_2").unwrap().unwrap().dim(), 5);
        assert!(builtin_algebra("abelian_5_x_1").is_none());
        assert!(builtin_algebra("nope").is_none());
        assert!(builtin_algebra("abelian_4_1_1").unwrap().is_err());
    }

    #[test]
    fn map_round_trip() {
        let s = fixtures::heisenberg_5_1();
        let neg = LinearMap::negation(s);
        let doc = map_to_json(&neg);
        let back = map_from_json(&doc, Path::new(".")).unwrap();
        assert_eq!(back.rows(), neg.rows());
        assert!(back.validate_antihom().is_valid());
    }

    #[test]
    fn canonical_is_key_sorted() {
        let text = to_canonical(&json!({"b": 1, "a": 2}));
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
        assert!(text.ends_with('\n'));
    }
}
