use std::fmt::Display;
use std::io::Write;

use serde_json::{Map, Number, Value};

/// An exact integer as a JSON number, digits copied verbatim.
pub fn int<T: Display>(v: &T) -> Value {
    let digits = v.to_string();
    Value::Number(
        digits
            .parse::<Number>()
            .expect("integers are valid JSON numbers"),
    )
}

/// Object keyed by length.
pub fn by_length<'a, T: 'a, I, F>(items: I, f: F) -> Value
where
    I: IntoIterator<Item = (&'a usize, &'a T)>,
    F: Fn(&T) -> Value,
{
    Value::Object(
        items
            .into_iter()
            .map(|(k, v)| (k.to_string(), f(v)))
            .collect::<Map<_, _>>(),
    )
}

/// Pretty-printed to standard output; a closed pipe is not an error.
pub fn print(doc: &Value) {
    let text = serde_json::to_string_pretty(doc).expect("serializable");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}
