//! JSON exchange formats. Basis labels are 1-based in every format.
//!
//! * scalar: `{"order": M, "coeffs": [[num, den], ...]}` in degree order, or
//!   a root `{"order": M, "exp": k, "sign": 1}`, or a literal string `"z8^3"`;
//! * braiding: `{"dim", "order", "entries": [{"i", "j", "si", "tj", "coeff"}]}`;
//! * rack: `{"size", "table"}` with `table[i-1][j-1] = i |> j`;
//! * solution: `{"size", "entries": [{"i", "j", "si", "tj"}]}`;
//! * family: `{"family": "Vabe" | "K" | "N" | "L" | "I", "params": {...}}`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Map, Value};

use crate::braided::{MonomialBraiding, Rack, SetSolution};
use crate::cyclo::{CycloField, CycloNum, RootExpr};
use crate::error::{Error, Result};
use crate::exactla::SparseMatrix;
use crate::nichols::ScanReport;
use crate::suzuki::{Family, KParams, NParams, VAbeParams};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn bigint_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn bigint_from(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| parse_err(format!("not an integer: {n}"))),
        Value::String(s) => s.parse().map_err(|_| parse_err(format!("not an integer: {s}"))),
        other => Err(parse_err(format!("not an integer: {other}"))),
    }
}

fn get<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| parse_err(format!("missing field `{key}`")))
}

fn get_u64(v: &Value, key: &str) -> Result<u64> {
    get(v, key)?
        .as_u64()
        .ok_or_else(|| parse_err(format!("field `{key}` must be a non-negative integer")))
}

fn get_i64(v: &Value, key: &str) -> Result<i64> {
    get(v, key)?
        .as_i64()
        .ok_or_else(|| parse_err(format!("field `{key}` must be an integer")))
}

fn to_u32(x: u64, key: &str) -> Result<u32> {
    u32::try_from(x).map_err(|_| parse_err(format!("field `{key}` is too large")))
}

pub fn cyclo_to_json(x: &CycloNum) -> Value {
    let coeffs: Vec<Value> = x
        .coeffs()
        .iter()
        .map(|c| json!([bigint_json(c.numer()), bigint_json(c.denom())]))
        .collect();
    json!({ "order": x.field().order(), "coeffs": coeffs })
}

pub fn root_to_json(r: &RootExpr) -> Value {
    json!({ "order": r.order, "exp": r.exp, "sign": r.sign })
}

pub fn root_from_json(v: &Value) -> Result<RootExpr> {
    let order = to_u32(get_u64(v, "order")?, "order")?;
    if order == 0 {
        return Err(parse_err("order must be positive"));
    }
    let exp = get_i64(v, "exp")?;
    let sign = match v.get("sign").map(|s| s.as_i64()) {
        None => 1,
        Some(Some(1)) => 1,
        Some(Some(-1)) => -1,
        Some(_) => return Err(parse_err("sign must be 1 or -1")),
    };
    Ok(RootExpr::new(order, exp, sign))
}

/// Any of the three scalar encodings.
pub fn scalar_from_json(v: &Value) -> Result<CycloNum> {
    match v {
        Value::String(s) => {
            let r = RootExpr::parse(s)?;
            CycloField::new(r.order)?.from_root_expr(&r)
        }
        Value::Number(n) => {
            let k = n.as_i64().ok_or_else(|| parse_err(format!("not an integer: {n}")))?;
            Ok(CycloField::new(1)?.from_int(k))
        }
        Value::Object(o) if o.contains_key("coeffs") => {
            let order = to_u32(get_u64(v, "order")?, "order")?;
            let field = CycloField::new(order)?;
            let arr = get(v, "coeffs")?
                .as_array()
                .ok_or_else(|| parse_err("coeffs must be an array"))?;
            let coeffs = arr
                .iter()
                .map(|pair| {
                    let p = pair
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| parse_err("each coefficient is [num, den]"))?;
                    let den = bigint_from(&p[1])?;
                    if den == BigInt::from(0) {
                        return Err(Error::DivisionByZero);
                    }
                    Ok(BigRational::new(bigint_from(&p[0])?, den))
                })
                .collect::<Result<Vec<_>>>()?;
            field.from_coeffs(&coeffs)
        }
        Value::Object(_) => {
            let r = root_from_json(v)?;
            CycloField::new(r.order)?.from_root_expr(&r)
        }
        other => Err(parse_err(format!("not a scalar: {other}"))),
    }
}

/// Moves scalars into the smallest field containing all of them.
pub fn common_field(xs: &[CycloNum]) -> Result<Vec<CycloNum>> {
    let order = xs.iter().fold(1u32, |m, x| m.lcm(&x.field().order()));
    let f = CycloField::new(order)?;
    xs.iter().map(|x| x.embed(&f)).collect()
}

fn scalar_json(x: &CycloNum) -> Value {
    match x.as_root() {
        Some(r) => json!(r.canonical().to_string()),
        None => cyclo_to_json(x),
    }
}

/// Roots of unity as `{"order", "exp", "sign"}`, anything else as coefficients.
fn coeff_json(x: &CycloNum) -> Value {
    match x.as_root() {
        Some(r) => root_to_json(&r.canonical()),
        None => cyclo_to_json(x),
    }
}

pub fn braiding_to_json(c: &MonomialBraiding) -> Value {
    let d = c.dim();
    let mut entries = Vec::with_capacity(d * d);
    for i in 0..d {
        for j in 0..d {
            let (u, v, r) = c.apply(i, j);
            entries.push(json!({
                "i": i + 1, "j": j + 1, "si": u + 1, "tj": v + 1, "coeff": coeff_json(r),
            }));
        }
    }
    json!({ "dim": d, "order": c.field().order(), "entries": entries })
}

fn label(v: &Value, key: &str, d: usize) -> Result<usize> {
    let x = get_u64(v, key)? as usize;
    if x == 0 || x > d {
        return Err(Error::IndexOutOfRange { index: x, max: d });
    }
    Ok(x - 1)
}

pub fn braiding_from_json(v: &Value) -> Result<MonomialBraiding> {
    let d = get_u64(v, "dim")? as usize;
    if d == 0 {
        return Err(parse_err("dim must be positive"));
    }
    let order = match v.get("order") {
        Some(o) => to_u32(o.as_u64().ok_or_else(|| parse_err("order must be an integer"))?, "order")?,
        None => 0,
    };
    let entries = get(v, "entries")?
        .as_array()
        .ok_or_else(|| parse_err("entries must be an array"))?;
    let mut table: Vec<Option<(usize, usize, CycloNum)>> = vec![None; d * d];
    let mut order_acc = order.max(1);
    for e in entries {
        let (i, j) = (label(e, "i", d)?, label(e, "j", d)?);
        let (si, tj) = (label(e, "si", d)?, label(e, "tj", d)?);
        let coeff = scalar_from_json(get(e, "coeff")?)?;
        order_acc = order_acc.lcm(&coeff.field().order());
        if table[i * d + j].replace((si, tj, coeff)).is_some() {
            return Err(parse_err(format!("duplicate entry for ({}, {})", i + 1, j + 1)));
        }
    }
    let field = CycloField::new(order_acc)?;
    MonomialBraiding::from_fn(&field, d, |i, j| {
        let (si, tj, c) = table[i * d + j]
            .clone()
            .ok_or_else(|| parse_err(format!("missing entry for ({}, {})", i + 1, j + 1)))?;
        Ok((si, tj, c.embed(&field)?))
    })
}

pub fn rack_to_json(r: &Rack) -> Value {
    let table: Vec<Vec<usize>> = r
        .table()
        .iter()
        .map(|row| row.iter().map(|x| x + 1).collect())
        .collect();
    json!({ "size": r.size(), "table": table })
}

fn table_from(v: &Value, n: usize) -> Result<Vec<Vec<usize>>> {
    let rows = v.as_array().ok_or_else(|| parse_err("table must be an array of rows"))?;
    if rows.len() != n {
        return Err(Error::SizeMismatch(n, rows.len()));
    }
    rows.iter()
        .map(|row| {
            let row = row.as_array().ok_or_else(|| parse_err("table rows must be arrays"))?;
            if row.len() != n {
                return Err(Error::SizeMismatch(n, row.len()));
            }
            row.iter()
                .map(|x| {
                    let x = x.as_u64().ok_or_else(|| parse_err("table entries are labels"))? as usize;
                    if x == 0 || x > n {
                        Err(Error::IndexOutOfRange { index: x, max: n })
                    } else {
                        Ok(x - 1)
                    }
                })
                .collect()
        })
        .collect()
}

pub fn rack_from_json(v: &Value) -> Result<Rack> {
    let table = get(v, "table")?;
    let n = match v.get("size") {
        Some(s) => s.as_u64().ok_or_else(|| parse_err("size must be an integer"))? as usize,
        None => table.as_array().map_or(0, |a| a.len()),
    };
    Rack::new(table_from(table, n)?)
}

pub fn solution_to_json(s: &SetSolution) -> Value {
    let n = s.size();
    let mut entries = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let (u, v) = s.r(i, j);
            entries.push(json!({ "i": i + 1, "j": j + 1, "si": u + 1, "tj": v + 1 }));
        }
    }
    json!({ "size": n, "entries": entries })
}

pub fn solution_from_json(v: &Value) -> Result<SetSolution> {
    let n = get_u64(v, "size")? as usize;
    let entries = get(v, "entries")?
        .as_array()
        .ok_or_else(|| parse_err("entries must be an array"))?;
    let mut map: Vec<Option<(usize, usize)>> = vec![None; n * n];
    for e in entries {
        let (i, j) = (label(e, "i", n)?, label(e, "j", n)?);
        map[i * n + j] = Some((label(e, "si", n)?, label(e, "tj", n)?));
    }
    if let Some(k) = map.iter().position(|x| x.is_none()) {
        return Err(parse_err(format!("missing entry for ({}, {})", k / n + 1, k % n + 1)));
    }
    SetSolution::from_map(n, |i, j| map[i * n + j].unwrap())
}

pub fn report_to_json(r: &ScanReport) -> Value {
    let verdict = match r.verdict {
        crate::nichols::DimsVerdict::Finite { .. } => "finite",
        crate::nichols::DimsVerdict::Undetermined { .. } => "undetermined",
    };
    json!({
        "dims": r.dims,
        "total": r.total,
        "top_degree": r.top_degree,
        "verdict": verdict,
        "degrees_computed": r.dims.len() - 1,
        "hilbert": r.hilbert,
        "next_rank": r.next_rank,
        "budget_exceeded": r.budget_exceeded,
        "millis": r.millis as u64,
        "stats": r.degrees,
    })
}

pub fn vabe_params_to_json(p: &VAbeParams) -> Value {
    json!({ "a": scalar_json(&p.a), "b": scalar_json(&p.b), "e": scalar_json(&p.e) })
}

fn small(v: &Value, key: &str) -> Result<u32> {
    to_u32(get_u64(v, key)?, key)
}

fn sign(v: &Value, key: &str, default: Option<i32>) -> Result<i32> {
    match (v.get(key), default) {
        (None, Some(d)) => Ok(d),
        (None, None) => Err(parse_err(format!("missing field `{key}`"))),
        (Some(x), _) => match x.as_i64() {
            Some(s @ (1 | -1)) => Ok(s as i32),
            _ => Err(parse_err(format!("field `{key}` must be 1 or -1"))),
        },
    }
}

pub fn family_from_json(v: &Value) -> Result<Family> {
    let tag = get(v, "family")?
        .as_str()
        .ok_or_else(|| parse_err("family must be a string"))?;
    let empty = Value::Object(Map::new());
    let p = v.get("params").unwrap_or(&empty);
    let fam = match tag {
        "Vabe" => {
            let xs = common_field(&[
                scalar_from_json(get(p, "a")?)?,
                scalar_from_json(get(p, "b")?)?,
                scalar_from_json(get(p, "e")?)?,
            ])?;
            let [a, b, e]: [CycloNum; 3] = xs.try_into().expect("three scalars");
            Family::Vabe(VAbeParams::new(a, b, e)?)
        }
        "K" => {
            let k = KParams {
                big_n: small(p, "N")?,
                n: small(p, "n")?,
                j: small(p, "j")?,
                k: small(p, "k")?,
                p: small(p, "p")?,
                s: small(p, "s")?,
                mu: sign(p, "mu", None)?,
                lambda: sign(p, "lambda", None)?,
            };
            k.validate()?;
            Family::K(k)
        }
        "N" => {
            let n = NParams {
                big_n: small(p, "N")?,
                n: small(p, "n")?,
                k: small(p, "k")?,
                p: small(p, "p")?,
                q: small(p, "q")?,
                s: small(p, "s")?,
                mu: sign(p, "mu", None)?,
                lambda: sign(p, "lambda", Some(1))?,
            };
            n.validate()?;
            Family::N(n)
        }
        "L" => Family::L {
            n: get_u64(p, "n")? as usize,
        },
        "I" => Family::I {
            n: get_u64(p, "n")? as usize,
        },
        other => return Err(Error::UnknownFamily(other.into())),
    };
    Ok(fam)
}

pub fn family_to_json(f: &Family) -> Value {
    let params = match f {
        Family::Vabe(p) => vabe_params_to_json(p),
        Family::K(p) => serde_json::to_value(p).expect("params serialise"),
        Family::N(p) => serde_json::to_value(p).expect("params serialise"),
        Family::L { n } | Family::I { n } => json!({ "n": n }),
    };
    json!({ "family": f.tag(), "params": params })
}

/// One `{"r", "c", "v"}` object per line, 1-based, column-major.
pub fn matrix_triplets(m: &SparseMatrix) -> String {
    let mut out = String::new();
    for (r, c, x) in m.entries() {
        out.push_str(&json!({ "r": r + 1, "c": c + 1, "v": cyclo_to_json(x) }).to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_round_trip() {
        let f = CycloField::new(12).unwrap();
        let x = &f.root_power(1) + &f.from_int(3);
        assert_eq!(scalar_from_json(&cyclo_to_json(&x)).unwrap(), x);
        let r = RootExpr::new(8, 5, -1);
        assert_eq!(root_from_json(&root_to_json(&r)).unwrap(), r);
        assert_eq!(scalar_from_json(&json!("z8^3")).unwrap(), CycloField::new(8).unwrap().root_power(3));
    }

    #[test]
    fn serialised_form() {
        let f = CycloField::new(4).unwrap();
        assert_eq!(
            cyclo_to_json(&f.root_power(1)),
            json!({"order": 4, "coeffs": [[0, 1], [1, 1]]})
        );
    }

    #[test]
    fn braiding_and_rack_round_trip() {
        let f = CycloField::new(3).unwrap();
        let c = MonomialBraiding::diagonal(
            &f,
            &[vec![f.root_power(1), f.one()], vec![f.root_power(2), f.from_int(-1)]],
        )
        .unwrap();
        assert_eq!(braiding_from_json(&braiding_to_json(&c)).unwrap(), c);
        let r = Rack::dihedral(5);
        assert_eq!(rack_from_json(&rack_to_json(&r)).unwrap(), r);
        let s = r.to_solution();
        assert_eq!(solution_from_json(&solution_to_json(&s)).unwrap(), s);
    }

    #[test]
    fn families() {
        let f = family_from_json(&json!({"family": "K", "params": {
            "N": 1, "n": 2, "j": 2, "k": 0, "p": 1, "s": 1, "mu": 1, "lambda": 1
        }}))
        .unwrap();
        assert_eq!(family_from_json(&family_to_json(&f)).unwrap(), f);
        let v = family_from_json(&json!({"family": "Vabe", "params": {"a": "z3^2", "b": "z3", "e": 1}})).unwrap();
        assert_eq!(family_from_json(&family_to_json(&v)).unwrap(), v);
        assert!(matches!(
            family_from_json(&json!({"family": "G", "params": {}})),
            Err(Error::UnknownFamily(_))
        ));
        assert!(matches!(
            family_from_json(&json!({"family": "K", "params": {"N": 1}})),
            Err(Error::Parse(_))
        ));
    }
}
