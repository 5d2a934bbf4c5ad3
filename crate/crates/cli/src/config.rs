//! Spec files for `predict`.
//!
//! ```text
//! # t = 1, r = 5, sections of degree 2 on P^6
//! a = 2^6
//! b = 3
//! n = 6
//! ```
//! Lists are separated by commas or spaces, `v^k` repeats `v` k times. The
//! same keys may be given as a JSON object with numbers or arrays.

use forge_core::{GenBRSpec, TwistSpec};
use std::collections::BTreeMap;

pub enum PredictSpec {
    Twist(TwistSpec),
    Generalized(GenBRSpec),
}

type Fields = BTreeMap<String, Vec<i64>>;

fn parse_list(key: &str, text: &str) -> Result<Vec<i64>, String> {
    let mut out = Vec::new();
    for item in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
        let (v, k) = match item.split_once('^') {
            Some((v, k)) => (v, k.parse::<usize>().map_err(|_| format!("{key}: bad repeat count in `{item}`"))?),
            None => (item, 1),
        };
        let v: i64 = v.parse().map_err(|_| format!("{key}: `{item}` is not an integer"))?;
        out.extend(std::iter::repeat(v).take(k));
    }
    Ok(out)
}

fn parse_key_values(text: &str) -> Result<Fields, String> {
    let mut fields = Fields::new();
    for (no, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (k, v) = line
            .split_once('=')
            .ok_or_else(|| format!("line {}: expected key = value", no + 1))?;
        let k = k.trim().to_string();
        fields.insert(k.clone(), parse_list(&k, v)?);
    }
    Ok(fields)
}

fn parse_json(text: &str) -> Result<Fields, String> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| format!("bad JSON: {e}"))?;
    let obj = value.as_object().ok_or("JSON spec must be an object")?;
    let mut fields = Fields::new();
    for (k, v) in obj {
        let items = match v {
            serde_json::Value::Array(a) => a.iter().map(|x| x.as_i64()).collect::<Option<Vec<_>>>(),
            other => other.as_i64().map(|x| vec![x]),
        };
        fields.insert(k.clone(), items.ok_or_else(|| format!("{k}: expected integers"))?);
    }
    Ok(fields)
}

fn take(fields: &Fields, key: &str) -> Result<Vec<i64>, String> {
    fields.get(key).cloned().ok_or_else(|| format!("missing key `{key}`"))
}

fn scalar(fields: &Fields, key: &str) -> Result<i64, String> {
    match take(fields, key)?.as_slice() {
        [v] => Ok(*v),
        _ => Err(format!("`{key}` must be a single integer")),
    }
}

pub fn parse(text: &str) -> Result<PredictSpec, String> {
    let fields = if text.trim_start().starts_with('{') {
        parse_json(text)?
    } else {
        parse_key_values(text)?
    };
    let n = scalar(&fields, "n")?;
    let n = usize::try_from(n).map_err(|_| "n must be nonnegative".to_string())?;
    if fields.contains_key("e1") {
        let ds = take(&fields, "ds")?;
        let ds: [i64; 3] = ds.try_into().map_err(|_| "ds needs three degrees".to_string())?;
        let spec = GenBRSpec::new(
            take(&fields, "e1")?,
            take(&fields, "e2")?,
            ds,
            scalar(&fields, "l")?,
            scalar(&fields, "d")?,
            n,
        )
        .map_err(|e| e.to_string())?;
        return Ok(PredictSpec::Generalized(spec));
    }
    let a = take(&fields, "a")?;
    let b = take(&fields, "b")?;
    let spec = match fields.get("p") {
        Some(p) => TwistSpec::with_p(a, b, p.clone(), n),
        None => TwistSpec::new(a, b, n),
    }
    .map_err(|e| e.to_string())?;
    Ok(PredictSpec::Twist(spec))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn repeats_and_separators() {
        assert_eq!(parse_list("a", "2^3, 4 5").unwrap(), vec![2, 2, 2, 4, 5]);
        assert!(parse_list("a", "x").is_err());
    }

    #[test]
    fn key_value_and_json_agree() {
        let kv = parse("a = 2^6\nb = 3\nn = 6\n").unwrap();
        let js = parse(r#"{"a": [2,2,2,2,2,2], "b": 3, "n": 6}"#).unwrap();
        match (kv, js) {
            (PredictSpec::Twist(x), PredictSpec::Twist(y)) => assert_eq!(x, y),
            _ => panic!("expected twist specs"),
        }
    }

    #[test]
    fn generalized_keys() {
        let s = parse("e1 = -2^5\ne2 = -3^5\nds = 3,3,3\nl = -1\nd = 6\nn = 3").unwrap();
        assert!(matches!(s, PredictSpec::Generalized(_)));
    }
}
