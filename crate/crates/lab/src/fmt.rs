//! Deterministic serialization: fixed float formats plus small JSON and CSV
//! builders. Hand-rolled so the byte layout is pinned by this crate rather
//! than by a library's shortest-roundtrip float heuristics.

/// 17 significant digits in scientific notation; the default float format
/// for every artifact.
pub fn sig17(x: f64) -> String {
    format!("{x:.16e}")
}

/// 12 fractional digits with trailing zeros trimmed down to one; the
/// endpoint format of the `interval` subcommand.
pub fn trim12(x: f64) -> String {
    let s = format!("{x:.12}");
    let t = s.trim_end_matches('0');
    if t.ends_with('.') {
        format!("{t}0")
    } else {
        t.to_string()
    }
}

fn escape_into(out: &mut String, s: &str) {
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            '\r' => out.push_str("\\r"),
            '\t' => out.push_str("\\t"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
}

pub fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    escape_into(&mut out, s);
    out.push('"');
    out
}

/// Single-line JSON object builder; fields appear in insertion order as
/// `"key": value` separated by `", "`.
pub struct JsonObj {
    parts: Vec<String>,
}

impl JsonObj {
    pub fn new() -> Self {
        JsonObj { parts: Vec::new() }
    }

    /// Pre-rendered value: a number string, `null`, or a nested object.
    pub fn raw(mut self, key: &str, value: impl AsRef<str>) -> Self {
        self.parts
            .push(format!("{}: {}", json_string(key), value.as_ref()));
        self
    }

    pub fn num(self, key: &str, x: f64) -> Self {
        let v = sig17(x);
        self.raw(key, v)
    }

    pub fn int(self, key: &str, n: u64) -> Self {
        let v = n.to_string();
        self.raw(key, v)
    }

    pub fn str(self, key: &str, s: &str) -> Self {
        let v = json_string(s);
        self.raw(key, v)
    }

    pub fn bool(self, key: &str, b: bool) -> Self {
        self.raw(key, if b { "true" } else { "false" })
    }

    pub fn arr_num(self, key: &str, xs: &[f64]) -> Self {
        let body: Vec<String> = xs.iter().map(|&x| sig17(x)).collect();
        let v = format!("[{}]", body.join(", "));
        self.raw(key, v)
    }

    pub fn arr_int(self, key: &str, xs: &[usize]) -> Self {
        let body: Vec<String> = xs.iter().map(|x| x.to_string()).collect();
        let v = format!("[{}]", body.join(", "));
        self.raw(key, v)
    }

    pub fn arr_raw(self, key: &str, items: &[String]) -> Self {
        let v = format!("[{}]", items.join(", "));
        self.raw(key, v)
    }

    pub fn finish(self) -> String {
        format!("{{{}}}", self.parts.join(", "))
    }
}

/// Joins already-formatted CSV fields; values never contain commas or
/// quotes, so no quoting layer is needed.
pub fn csv_row(fields: &[String]) -> String {
    fields.join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trim12_matches_endpoint_style() {
        assert_eq!(trim12(4.0 / 3.0), "1.333333333333");
        assert_eq!(trim12(4.0), "4.0");
        assert_eq!(trim12(1.0), "1.0");
        assert_eq!(trim12(1.5), "1.5");
    }

    #[test]
    fn sig17_is_fixed_width_scientific() {
        assert_eq!(sig17(0.0), "0.0000000000000000e0");
        assert_eq!(sig17(-1.0), "-1.0000000000000000e0");
        assert_eq!(sig17(1.0 / 3.0), "3.3333333333333331e-1");
    }

    #[test]
    fn json_builder_layout() {
        let s = JsonObj::new()
            .str("name", "x")
            .bool("pass", true)
            .int("n", 3)
            .finish();
        assert_eq!(s, "{\"name\": \"x\", \"pass\": true, \"n\": 3}");
    }

    #[test]
    fn json_strings_are_escaped() {
        assert_eq!(json_string("a\"b\\c"), "\"a\\\"b\\\\c\"");
    }
}
