//! Validator for the JSON Schema subset used by `schema/report.schema.json`:
//! type, const, enum, required, properties, additionalProperties, items,
//! oneOf, local `$ref`, and the numeric bounds.

use serde_json::Value;

const KNOWN: &[&str] = &[
    "$schema",
    "$id",
    "$defs",
    "title",
    "description",
    "type",
    "const",
    "enum",
    "required",
    "properties",
    "additionalProperties",
    "items",
    "oneOf",
    "$ref",
    "minimum",
    "maximum",
    "exclusiveMinimum",
    "exclusiveMaximum",
];

pub fn validate(root: &Value, instance: &Value) -> Result<(), String> {
    check(root, root, instance, "$")
}

fn resolve<'a>(root: &'a Value, r: &str) -> &'a Value {
    let name = r
        .strip_prefix("#/$defs/")
        .unwrap_or_else(|| panic!("unsupported $ref {r}"));
    root["$defs"]
        .get(name)
        .unwrap_or_else(|| panic!("missing definition {name}"))
}

fn type_matches(t: &str, v: &Value) -> bool {
    match t {
        "null" => v.is_null(),
        "boolean" => v.is_boolean(),
        "string" => v.is_string(),
        "number" => v.is_number(),
        "integer" => v.is_u64() || v.is_i64(),
        "array" => v.is_array(),
        "object" => v.is_object(),
        other => panic!("unknown type {other}"),
    }
}

fn check(root: &Value, schema: &Value, v: &Value, at: &str) -> Result<(), String> {
    let obj = schema.as_object().expect("schemas are objects");
    for key in obj.keys() {
        assert!(
            KNOWN.contains(&key.as_str()),
            "validator does not handle keyword {key}"
        );
    }
    if let Some(r) = obj.get("$ref") {
        check(root, resolve(root, r.as_str().unwrap()), v, at)?;
    }
    if let Some(t) = obj.get("type") {
        let ok = match t {
            Value::String(t) => type_matches(t, v),
            Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
            _ => panic!("bad type keyword"),
        };
        if !ok {
            return Err(format!("{at}: expected type {t}, got {v}"));
        }
    }
    if let Some(c) = obj.get("const") {
        if c != v {
            return Err(format!("{at}: expected {c}, got {v}"));
        }
    }
    if let Some(Value::Array(options)) = obj.get("enum") {
        if !options.contains(v) {
            return Err(format!("{at}: {v} not in {options:?}"));
        }
    }
    if let Some(x) = v.as_f64() {
        let bound = |k: &str| obj.get(k).and_then(Value::as_f64);
        if bound("minimum").is_some_and(|b| x < b)
            || bound("maximum").is_some_and(|b| x > b)
            || bound("exclusiveMinimum").is_some_and(|b| x <= b)
            || bound("exclusiveMaximum").is_some_and(|b| x >= b)
        {
            return Err(format!("{at}: {x} out of bounds"));
        }
    }
    if let Some(options) = obj.get("oneOf") {
        let matched = options
            .as_array()
            .unwrap()
            .iter()
            .filter(|s| check(root, s, v, at).is_ok())
            .count();
        if matched != 1 {
            return Err(format!("{at}: matched {matched} oneOf branches"));
        }
    }
    if let (Some(items), Some(arr)) = (obj.get("items"), v.as_array()) {
        for (i, x) in arr.iter().enumerate() {
            check(root, items, x, &format!("{at}[{i}]"))?;
        }
    }
    if let Some(map) = v.as_object() {
        if let Some(Value::Array(req)) = obj.get("required") {
            for r in req {
                if !map.contains_key(r.as_str().unwrap()) {
                    return Err(format!("{at}: missing {r}"));
                }
            }
        }
        let props = obj.get("properties").and_then(Value::as_object);
        for (k, x) in map {
            let here = format!("{at}.{k}");
            match props.and_then(|p| p.get(k)) {
                Some(s) => check(root, s, x, &here)?,
                None => match obj.get("additionalProperties") {
                    Some(Value::Bool(false)) => return Err(format!("{here}: unexpected property")),
                    Some(s @ Value::Object(_)) => check(root, s, x, &here)?,
                    _ => {}
                },
            }
        }
    }
    Ok(())
}
