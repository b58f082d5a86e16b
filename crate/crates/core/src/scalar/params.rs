use std::collections::BTreeMap;

use super::{Field, Scalar, ScalarError};

/// A named parameter bound to a field value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParamBinding {
    pub name: String,
    pub value: Scalar,
}

/// Parameter environment used while parsing coefficients.
///
/// A coefficient is either a literal (`3`, `-1/2`), a parameter name
/// (`lambda`), a negated name (`-lambda`), or `name^-1` / `-name^-1`.
#[derive(Debug, Clone)]
pub struct Bindings {
    field: Field,
    values: BTreeMap<String, Scalar>,
}

impl Bindings {
    pub fn new(field: Field) -> Self {
        Bindings {
            field,
            values: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Binds `name`, rejecting values that appear in `forbidden`.
    pub fn bind(
        &mut self,
        name: &str,
        value: Scalar,
        forbidden: &[Scalar],
    ) -> Result<(), ScalarError> {
        if value.field() != self.field {
            return Err(ScalarError::FieldMismatch(self.field, value.field()));
        }
        if let Some(bad) = forbidden.iter().find(|f| **f == value) {
            return Err(ScalarError::Constraint {
                name: name.to_string(),
                value: value.to_string(),
                forbidden: bad.to_string(),
            });
        }
        self.values.insert(name.to_string(), value);
        Ok(())
    }

    pub fn get(&self, name: &str) -> Option<&Scalar> {
        self.values.get(name)
    }

    pub fn bindings(&self) -> Vec<ParamBinding> {
        self.values
            .iter()
            .map(|(k, v)| ParamBinding {
                name: k.clone(),
                value: v.clone(),
            })
            .collect()
    }

    pub fn parse(&self, text: &str) -> Result<Scalar, ScalarError> {
        let t = text.trim();
        let (neg, body) = match t.strip_prefix('-') {
            Some(rest) if starts_ident(rest) => (true, rest),
            _ => (false, t),
        };
        if !starts_ident(body) {
            return self.field.parse(t);
        }
        let (name, inverse) = match body.strip_suffix("^-1") {
            Some(n) => (n, true),
            None => (body, false),
        };
        let mut v = self
            .values
            .get(name)
            .cloned()
            .ok_or_else(|| ScalarError::UnknownParameter(name.to_string()))?;
        if inverse {
            v = v.inv()?;
        }
        Ok(if neg { -v } else { v })
    }
}

fn starts_ident(s: &str) -> bool {
    s.chars()
        .next()
        .is_some_and(|c| c.is_alphabetic() || c == '_')
}
