//! JSON input files: nets, point sets, forms and form pairs over 𝔽_p.
//!
//! Field elements are strings in the canonical scalar encoding; matrices
//! are row-major. Every file carries a `type` tag and a `field`.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::exact::{Field, FieldKind, PrimeField, ProjPoint, SparseForm};
use crate::nets::{Octad, QuadricNet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub exponents: Vec<u16>,
    pub coeff: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormData {
    pub num_vars: usize,
    pub degree: u32,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum Dataset {
    Net { field: FieldKind, matrices: Vec<Vec<Vec<String>>> },
    Points { field: FieldKind, points: Vec<Vec<String>> },
    Form { field: FieldKind, form: FormData },
    FormPair { field: FieldKind, first: FormData, second: FormData },
}

/// A malformed dataset, located by line and column (syntax) or by field path (content).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DatasetError {
    pub source: String,
    pub line: Option<usize>,
    pub column: Option<usize>,
    pub field: Option<String>,
    pub message: String,
}

impl fmt::Display for DatasetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.source)?;
        if let (Some(l), Some(c)) = (self.line, self.column) {
            write!(f, ":{l}:{c}")?;
        }
        if let Some(field) = &self.field {
            write!(f, ": at {field}")?;
        }
        write!(f, ": {}", self.message)
    }
}

impl std::error::Error for DatasetError {}

fn content_error(source: &str, field: impl Into<String>, message: impl fmt::Display) -> DatasetError {
    DatasetError { source: source.into(), line: None, column: None, field: Some(field.into()), message: message.to_string() }
}

pub fn parse_dataset(source: &str, text: &str) -> Result<Dataset, DatasetError> {
    serde_json::from_str(text).map_err(|e| DatasetError {
        source: source.into(),
        line: Some(e.line()),
        column: Some(e.column()),
        field: None,
        message: e.to_string(),
    })
}

pub fn load_dataset(path: &Path) -> Result<Dataset, DatasetError> {
    let source = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|e| DatasetError {
        source: source.clone(),
        line: None,
        column: None,
        field: None,
        message: e.to_string(),
    })?;
    parse_dataset(&source, &text)
}

pub fn store_dataset(path: &Path, data: &Dataset) -> std::io::Result<()> {
    std::fs::write(path, serde_json::to_string_pretty(data).expect("datasets serialize") + "\n")
}

impl Dataset {
    pub fn field_kind(&self) -> FieldKind {
        match self {
            Dataset::Net { field, .. }
            | Dataset::Points { field, .. }
            | Dataset::Form { field, .. }
            | Dataset::FormPair { field, .. } => *field,
        }
    }

    pub fn type_name(&self) -> &'static str {
        match self {
            Dataset::Net { .. } => "net",
            Dataset::Points { .. } => "points",
            Dataset::Form { .. } => "form",
            Dataset::FormPair { .. } => "form_pair",
        }
    }

    /// The prime field of the dataset; other fields are not accepted here.
    pub fn prime_field(&self, source: &str) -> Result<PrimeField, DatasetError> {
        match self.field_kind() {
            FieldKind::Prime { p } => PrimeField::new(p).map_err(|e| content_error(source, "field.p", e)),
            other => Err(content_error(source, "field", format!("{other} is not a prime field"))),
        }
    }

    pub fn from_net(net: &QuadricNet<PrimeField>) -> Self {
        let f = net.field();
        let matrices = net
            .matrices()
            .iter()
            .map(|m| m.iter().map(|row| row.iter().map(|x| f.to_scalar(x).to_string()).collect()).collect())
            .collect();
        Dataset::Net { field: f.kind(), matrices }
    }

    pub fn from_points(field: &PrimeField, points: &[ProjPoint<PrimeField>]) -> Self {
        Dataset::Points { field: field.kind(), points: points.iter().map(|p| p.to_strings(field)).collect() }
    }

    pub fn from_form(form: &SparseForm<PrimeField>) -> Self {
        Dataset::Form { field: form.field().kind(), form: form_data(form) }
    }

    pub fn to_net(&self, source: &str) -> Result<QuadricNet<PrimeField>, DatasetError> {
        let Dataset::Net { matrices, .. } = self else {
            return Err(wrong_type(source, "net", self));
        };
        let f = self.prime_field(source)?;
        if matrices.len() != 3 {
            return Err(content_error(source, "matrices", format!("expected 3 matrices, found {}", matrices.len())));
        }
        let mut parsed = Vec::new();
        for (m, mat) in matrices.iter().enumerate() {
            if mat.len() != 4 || mat.iter().any(|r| r.len() != 4) {
                return Err(content_error(source, format!("matrices[{m}]"), "expected a 4×4 matrix"));
            }
            let rows = mat
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    row.iter()
                        .enumerate()
                        .map(|(j, s)| f.parse(s).map_err(|e| content_error(source, format!("matrices[{m}][{i}][{j}]"), e)))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            parsed.push(rows);
        }
        let [a, b, c]: [_; 3] = parsed.try_into().expect("three matrices");
        QuadricNet::new(&f, a, b, c).map_err(|e| content_error(source, "matrices", e))
    }

    /// Points of P^dim.
    pub fn to_points(&self, source: &str, dim: usize) -> Result<(PrimeField, Vec<ProjPoint<PrimeField>>), DatasetError> {
        let Dataset::Points { points, .. } = self else {
            return Err(wrong_type(source, "points", self));
        };
        let f = self.prime_field(source)?;
        let pts = points
            .iter()
            .enumerate()
            .map(|(i, p)| {
                if p.len() != dim + 1 {
                    return Err(content_error(source, format!("points[{i}]"), format!("expected {} coordinates", dim + 1)));
                }
                let coords = p
                    .iter()
                    .enumerate()
                    .map(|(j, s)| f.parse(s).map_err(|e| content_error(source, format!("points[{i}][{j}]"), e)))
                    .collect::<Result<Vec<_>, _>>()?;
                ProjPoint::new(&f, coords).map_err(|e| content_error(source, format!("points[{i}]"), e))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok((f, pts))
    }

    pub fn to_octad(&self, source: &str) -> Result<Octad<PrimeField>, DatasetError> {
        let (f, pts) = self.to_points(source, 3)?;
        if pts.len() != 8 {
            return Err(content_error(source, "points", format!("an octad has 8 points, found {}", pts.len())));
        }
        Octad::new(&f, pts).map_err(|e| content_error(source, "points", e))
    }

    pub fn to_form(&self, source: &str) -> Result<SparseForm<PrimeField>, DatasetError> {
        let Dataset::Form { form, .. } = self else {
            return Err(wrong_type(source, "form", self));
        };
        let f = self.prime_field(source)?;
        parse_form(&f, source, "form", form)
    }

    pub fn to_form_pair(&self, source: &str) -> Result<(SparseForm<PrimeField>, SparseForm<PrimeField>), DatasetError> {
        let Dataset::FormPair { first, second, .. } = self else {
            return Err(wrong_type(source, "form_pair", self));
        };
        let f = self.prime_field(source)?;
        Ok((parse_form(&f, source, "first", first)?, parse_form(&f, source, "second", second)?))
    }
}

fn wrong_type(source: &str, want: &str, got: &Dataset) -> DatasetError {
    content_error(source, "type", format!("expected a {want} dataset, found {}", got.type_name()))
}

pub fn form_data(form: &SparseForm<PrimeField>) -> FormData {
    let f = form.field();
    FormData {
        num_vars: form.num_vars(),
        degree: form.degree(),
        terms: form
            .terms()
            .map(|(m, c)| Term { exponents: m.exponents().to_vec(), coeff: f.to_scalar(c).to_string() })
            .collect(),
    }
}

fn parse_form(f: &PrimeField, source: &str, at: &str, data: &FormData) -> Result<SparseForm<PrimeField>, DatasetError> {
    let terms = data
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let c = f.parse(&t.coeff).map_err(|e| content_error(source, format!("{at}.terms[{i}].coeff"), e))?;
            Ok((t.exponents.clone(), c))
        })
        .collect::<Result<Vec<_>, DatasetError>>()?;
    SparseForm::from_terms(f, data.num_vars, data.degree, terms).map_err(|e| content_error(source, format!("{at}.terms"), e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn syntax_errors_carry_line_and_column() {
        let err = parse_dataset("bad.json", "{\n  \"type\": \"points\",\n  \"field\": {\"kind\": \"prime\", \"p\": 101},\n  \"points\": [[\"1\", \"2\" \"3\"]]\n}").unwrap_err();
        assert_eq!(err.line, Some(4));
        assert!(err.column.is_some());
        assert!(err.to_string().starts_with("bad.json:4:"));
    }

    #[test]
    fn content_errors_carry_the_field_path() {
        let text = r#"{"type":"points","field":{"kind":"prime","p":101},"points":[["1","0","x","0"]]}"#;
        let err = parse_dataset("p.json", text).unwrap().to_points("p.json", 3).unwrap_err();
        assert_eq!(err.field.as_deref(), Some("points[0][2]"));
        let rational = r#"{"type":"points","field":{"kind":"rational"},"points":[]}"#;
        assert!(parse_dataset("q.json", rational).unwrap().to_points("q.json", 3).is_err());
        let err = parse_dataset("n.json", text).unwrap().to_net("n.json").unwrap_err();
        assert_eq!(err.field.as_deref(), Some("type"));
    }

    #[test]
    fn form_round_trip() {
        let f = PrimeField::new(101).unwrap();
        let form = SparseForm::from_terms(&f, 3, 2, vec![(vec![2, 0, 0], 3), (vec![0, 1, 1], 100)]).unwrap();
        let data = Dataset::from_form(&form);
        let text = serde_json::to_string(&data).unwrap();
        let back = parse_dataset("f.json", &text).unwrap();
        assert_eq!(back, data);
        assert_eq!(back.to_form("f.json").unwrap(), form);
    }
}
