//! JSON documents describing codes.
//!
//! A ring code file names the field, the length and exactly one of two
//! representations:
//!
//! ```json
//! { "field": {"p": 5, "e": 1}, "n": 2,
//!   "components": [[[1, 2]], [[1, 2]], [[1, 2]], [[1, 2]]] }
//! ```
//!
//! or `"generators"`, a list of rows whose entries are 4-tuples in the basis
//! given by `"basis"` (`"gamma"` by default, or `"u"`). Field elements are
//! their canonical integer encodings.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fqcode::FqCode;
use crate::gf::Field;
use crate::linalg::Matrix;
use crate::rcode::RCode;
use crate::ring::{Basis, Ring};

/// Format version written by [`emit_code_file`].
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldSpec {
    pub p: u64,
    pub e: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

impl FieldSpec {
    pub fn of(field: &Field) -> FieldSpec {
        FieldSpec {
            p: field.p() as u64,
            e: field.e(),
            modulus: (field.e() > 1).then(|| field.modulus().to_vec()),
        }
    }

    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.e, self.modulus.as_deref())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisName {
    #[default]
    Gamma,
    U,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    pub field: FieldSpec,
    pub n: usize,
    #[serde(default)]
    pub basis: BasisName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<Vec<Vec<u32>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<Vec<Vec<[u32; 4]>>>,
}

/// A code over GF(q), as written for Gray images.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldCodeFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub version: Option<u32>,
    pub field: FieldSpec,
    pub n: usize,
    pub generator: Vec<Vec<u32>>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {}, column {}: {}", e.line(), e.column(), e))
}

fn check_rows(what: &str, rows: &[Vec<u32>], n: usize) -> Result<()> {
    for (r, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Dimension(format!(
                "{what} row {r} has {} entries, expected n = {n}",
                row.len()
            )));
        }
    }
    Ok(())
}

impl CodeFile {
    pub fn parse(text: &str) -> Result<CodeFile> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_code(&self) -> Result<RCode> {
        let field = self.field.build()?;
        let n = self.n;
        match (&self.components, &self.generators) {
            (Some(_), Some(_)) => Err(Error::Parse(
                "give either \"components\" or \"generators\", not both".into(),
            )),
            (None, None) => Err(Error::Parse("missing \"components\" or \"generators\"".into())),
            (Some(comps), None) => {
                if self.basis != BasisName::Gamma {
                    return Err(Error::Parse(
                        "\"components\" are always gamma components; drop \"basis\"".into(),
                    ));
                }
                if comps.len() != 4 {
                    return Err(Error::Dimension(format!(
                        "expected 4 component matrices, found {}",
                        comps.len()
                    )));
                }
                let mut built = Vec::with_capacity(4);
                for (i, rows) in comps.iter().enumerate() {
                    check_rows(&format!("components[{i}]"), rows, n)?;
                    built.push(FqCode::from_values(&field, n, rows)?);
                }
                RCode::from_components(built.try_into().expect("four"))
            }
            (None, Some(gens)) => {
                let ring = Ring::new(&field);
                let basis = match self.basis {
                    BasisName::Gamma => Basis::Gamma,
                    BasisName::U => Basis::U,
                };
                let mut rows = Vec::with_capacity(gens.len());
                for (r, row) in gens.iter().enumerate() {
                    if row.len() != n {
                        return Err(Error::Dimension(format!(
                            "generators row {r} has {} entries, expected n = {n}",
                            row.len()
                        )));
                    }
                    rows.push(
                        row.iter()
                            .map(|&quad| ring.elem(basis, quad))
                            .collect::<Result<Vec<_>>>()?,
                    );
                }
                RCode::from_generators(&field, n, &rows)
            }
        }
    }

    /// Component form with canonical (RREF) generators.
    pub fn from_code(code: &RCode) -> CodeFile {
        CodeFile {
            version: Some(FORMAT_VERSION),
            field: FieldSpec::of(code.field()),
            n: code.n(),
            basis: BasisName::Gamma,
            components: Some(code.components().iter().map(|c| c.generator().to_values()).collect()),
            generators: None,
        }
    }
}

impl FieldCodeFile {
    pub fn parse(text: &str) -> Result<FieldCodeFile> {
        serde_json::from_str(text).map_err(json_error)
    }

    pub fn to_code(&self) -> Result<FqCode> {
        let field = self.field.build()?;
        check_rows("generator", &self.generator, self.n)?;
        FqCode::new(&field, self.n, &Matrix::from_values(&field, self.n, &self.generator)?)
    }

    pub fn from_code(code: &FqCode) -> FieldCodeFile {
        FieldCodeFile {
            version: Some(FORMAT_VERSION),
            field: FieldSpec::of(code.field()),
            n: code.n(),
            generator: code.generator().to_values(),
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = render_json(&serde_json::to_value(value).expect("plain data serializes"));
    s.push('\n');
    s
}

/// Indented JSON that keeps arrays of scalars (matrix rows, ring elements)
/// on one line.
pub fn render_json(value: &serde_json::Value) -> String {
    let mut out = String::new();
    render(value, 0, &mut out);
    out
}

fn render(value: &serde_json::Value, depth: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |d: usize| "  ".repeat(d);
    match value {
        Value::Array(items) if items.iter().all(|v| !v.is_array() && !v.is_object()) => {
            let inner: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&inner.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, v) in items.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                render(v, depth + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(map) if map.is_empty() => out.push_str("{}"),
        Value::Object(map) => {
            out.push_str("{\n");
            for (i, (k, v)) in map.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                render(v, depth + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
        scalar => out.push_str(&scalar.to_string()),
    }
}

pub fn parse_code_file(text: &str) -> Result<RCode> {
    CodeFile::parse(text)?.to_code()
}

pub fn emit_code_file(code: &RCode) -> String {
    to_json(&CodeFile::from_code(code))
}

pub fn parse_field_code_file(text: &str) -> Result<FqCode> {
    FieldCodeFile::parse(text)?.to_code()
}

pub fn emit_field_code_file(code: &FqCode) -> String {
    to_json(&FieldCodeFile::from_code(code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const LINE: &str = r#"{"field": {"p": 5, "e": 1}, "n": 2,
        "components": [[[1, 2]], [[1, 2]], [[1, 2]], [[1, 2]]]}"#;

    #[test]
    fn minimal_file() {
        let c = parse_code_file(LINE).unwrap();
        let f = Field::prime(5).unwrap();
        let line = FqCode::from_values(&f, 2, &[vec![1, 2]]).unwrap();
        assert_eq!(
            c,
            RCode::from_components(std::array::from_fn(|_| line.clone())).unwrap()
        );
    }

    #[test]
    fn u_basis_scalars_match_gamma() {
        let u = r#"{"field": {"p": 5, "e": 1}, "n": 2, "basis": "u",
            "generators": [[[1, 0, 0, 0], [2, 0, 0, 0]]]}"#;
        let g = r#"{"field": {"p": 5, "e": 1}, "n": 2,
            "generators": [[[1, 1, 1, 1], [2, 2, 2, 2]]]}"#;
        let a = parse_code_file(u).unwrap();
        assert_eq!(a, parse_code_file(g).unwrap());
        assert_eq!(a, parse_code_file(LINE).unwrap());
    }

    #[test]
    fn rejects_bad_documents() {
        let both = r#"{"field": {"p": 5, "e": 1}, "n": 1,
            "components": [[], [], [], []], "generators": []}"#;
        assert!(matches!(parse_code_file(both), Err(Error::Parse(_))));
        let neither = r#"{"field": {"p": 5, "e": 1}, "n": 1}"#;
        assert!(matches!(parse_code_file(neither), Err(Error::Parse(_))));
        let Err(Error::Parse(msg)) = parse_code_file("{\"field\": {\"p\": 5,\n \"e\": }") else {
            panic!("expected a parse error");
        };
        assert!(msg.starts_with("line 2"), "{msg}");
        let wide = r#"{"field": {"p": 5, "e": 1}, "n": 1,
            "components": [[[1, 2]], [], [], []]}"#;
        assert!(matches!(parse_code_file(wide), Err(Error::Dimension(_))));
        let three = r#"{"field": {"p": 5, "e": 1}, "n": 1, "components": [[], [], []]}"#;
        assert!(matches!(parse_code_file(three), Err(Error::Dimension(_))));
        let big = r#"{"field": {"p": 5, "e": 1}, "n": 1, "components": [[[7]], [], [], []]}"#;
        assert_eq!(parse_code_file(big), Err(Error::BadElement { value: 7, q: 5 }));
        let field = r#"{"field": {"p": 6, "e": 1}, "n": 1, "components": [[], [], [], []]}"#;
        assert_eq!(parse_code_file(field), Err(Error::NotPrime(6)));
    }

    #[test]
    fn field_code_file_round_trip() {
        let f = Field::new(3, 2, None).unwrap();
        let c = FqCode::from_values(&f, 3, &[vec![1, 4, 0], vec![0, 2, 7]]).unwrap();
        assert_eq!(parse_field_code_file(&emit_field_code_file(&c)).unwrap(), c);
    }

    fn arb_code() -> impl Strategy<Value = RCode> {
        (prop::sample::select(vec![(2u64, 2u32), (5, 1), (3, 2)]), 1usize..4).prop_flat_map(|((p, e), n)| {
            let q = p.pow(e) as u32;
            let comp = prop::collection::vec(prop::collection::vec(0..q, n), 0..=n);
            prop::array::uniform4(comp).prop_map(move |rows| {
                let f = Field::new(p, e, None).unwrap();
                let comps = rows.map(|r| FqCode::from_values(&f, n, &r).unwrap());
                RCode::from_components(comps).unwrap()
            })
        })
    }

    #[test]
    fn rendering_is_valid_json() {
        let v: serde_json::Value =
            serde_json::from_str(r#"{"a": [[1, 2], [3]], "b": {}, "c": [], "d": {"e": [[[1, 0]]]}}"#).unwrap();
        let text = render_json(&v);
        assert!(text.contains("[1, 2]"));
        assert_eq!(serde_json::from_str::<serde_json::Value>(&text).unwrap(), v);
    }

    proptest! {
        #[test]
        fn emit_then_parse_is_identity(code in arb_code()) {
            let text = emit_code_file(&code);
            prop_assert_eq!(parse_code_file(&text).unwrap(), code.clone());
            prop_assert_eq!(emit_code_file(&parse_code_file(&text).unwrap()), text);
        }
    }
}
