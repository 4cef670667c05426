//! A hand-rolled validator for the subset of JSON Schema the shipped
//! report schema uses: `type`, `required`, `properties`,
//! `additionalProperties` (boolean form), `enum` (of strings), and
//! `items`.  Violations come back as `path: message` strings.

use serde_json::Value;

pub const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

pub fn report_schema() -> Value {
    serde_json::from_str(REPORT_SCHEMA).expect("shipped schema is valid JSON")
}

pub fn validate(instance: &Value, schema: &Value) -> Vec<String> {
    let mut errors = Vec::new();
    walk(instance, schema, "$", &mut errors);
    errors
}

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                "integer"
            } else {
                "number"
            }
        }
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn type_matches(instance: &Value, expected: &str) -> bool {
    match expected {
        // Every integer is also a number.
        "number" => matches!(instance, Value::Number(_)),
        other => type_name(instance) == other,
    }
}

fn walk(instance: &Value, schema: &Value, path: &str, errors: &mut Vec<String>) {
    let Value::Object(rules) = schema else {
        errors.push(format!("{path}: schema node is not an object"));
        return;
    };

    if let Some(Value::String(expected)) = rules.get("type") {
        if !type_matches(instance, expected) {
            errors.push(format!(
                "{path}: expected {expected}, found {}",
                type_name(instance)
            ));
            return;
        }
    }

    if let Some(Value::Array(allowed)) = rules.get("enum") {
        if !allowed.iter().any(|a| a == instance) {
            errors.push(format!("{path}: value not in the allowed set"));
        }
    }

    if let Value::Object(obj) = instance {
        if let Some(Value::Array(required)) = rules.get("required") {
            for key in required {
                if let Value::String(key) = key {
                    if !obj.contains_key(key) {
                        errors.push(format!("{path}: missing required key {key:?}"));
                    }
                }
            }
        }
        let props = match rules.get("properties") {
            Some(Value::Object(p)) => Some(p),
            _ => None,
        };
        let closed = matches!(rules.get("additionalProperties"), Some(Value::Bool(false)));
        for (key, value) in obj {
            match props.and_then(|p| p.get(key)) {
                Some(subschema) => walk(value, subschema, &format!("{path}.{key}"), errors),
                None if closed => {
                    errors.push(format!("{path}: unexpected key {key:?}"));
                }
                None => {}
            }
        }
    }

    if let (Value::Array(items), Some(item_schema)) = (instance, rules.get("items")) {
        for (i, item) in items.iter().enumerate() {
            walk(item, item_schema, &format!("{path}[{i}]"), errors);
        }
    }
}
