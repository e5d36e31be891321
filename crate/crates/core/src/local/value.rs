use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// A three-valued label, ordered `− < ? < +`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Minus,
    Unknown,
    Plus,
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Label::Minus => "-",
            Label::Unknown => "?",
            Label::Plus => "+",
        })
    }
}

/// Which representation an instance computes with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValueKind {
    Rational,
    Float,
    Label,
}

/// A value of a local valuation.
#[derive(Debug, Clone, PartialEq)]
pub enum LocalValue {
    Rational(BigRational),
    Float(f64),
    Label(Label),
}

impl LocalValue {
    pub fn rational(numer: i64, denom: i64) -> Self {
        LocalValue::Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn kind(&self) -> ValueKind {
        match self {
            LocalValue::Rational(_) => ValueKind::Rational,
            LocalValue::Float(_) => ValueKind::Float,
            LocalValue::Label(_) => ValueKind::Label,
        }
    }

    /// Numeric value as a float; `None` for labels.
    pub fn to_f64(&self) -> Option<f64> {
        match self {
            LocalValue::Rational(r) => r.to_f64(),
            LocalValue::Float(x) => Some(*x),
            LocalValue::Label(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            LocalValue::Rational(r) => Some(r),
            _ => None,
        }
    }

    pub fn as_label(&self) -> Option<Label> {
        match self {
            LocalValue::Label(l) => Some(*l),
            _ => None,
        }
    }

    /// Same value as a float (labels are unchanged).
    pub fn to_float(&self) -> LocalValue {
        match self {
            LocalValue::Label(l) => LocalValue::Label(*l),
            other => LocalValue::Float(other.to_f64().unwrap_or(f64::NAN)),
        }
    }

    /// Orders two values of the same kind. Rationals and floats are both
    /// numbers and compare with each other; labels compare only with labels.
    pub fn compare(&self, other: &LocalValue) -> Result<Ordering> {
        match (self, other) {
            (LocalValue::Rational(a), LocalValue::Rational(b)) => Ok(a.cmp(b)),
            (LocalValue::Label(a), LocalValue::Label(b)) => Ok(a.cmp(b)),
            (LocalValue::Label(_), _) | (_, LocalValue::Label(_)) => Err(Error::MixedValueKinds),
            (a, b) => a
                .to_f64()
                .unwrap()
                .partial_cmp(&b.to_f64().unwrap())
                .ok_or(Error::MixedValueKinds),
        }
    }

    pub(crate) fn ge(&self, other: &LocalValue) -> bool {
        matches!(self.compare(other), Ok(Ordering::Greater | Ordering::Equal))
    }
}

impl fmt::Display for LocalValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LocalValue::Rational(r) => write!(f, "{r}"),
            LocalValue::Float(x) => write!(f, "{x}"),
            LocalValue::Label(l) => write!(f, "{l}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(LocalValue::rational(78, 283).to_string(), "78/283");
        assert_eq!(LocalValue::rational(2, 2).to_string(), "1");
        assert_eq!(LocalValue::Label(Label::Unknown).to_string(), "?");
        assert_eq!(LocalValue::Float(0.5).to_string(), "0.5");
    }

    #[test]
    fn ordering() {
        assert!(Label::Minus < Label::Unknown && Label::Unknown < Label::Plus);
        let half = LocalValue::rational(1, 2);
        assert_eq!(half.compare(&LocalValue::Float(0.6)), Ok(Ordering::Less));
        assert_eq!(
            half.compare(&LocalValue::Label(Label::Plus)),
            Err(Error::MixedValueKinds)
        );
    }
}
