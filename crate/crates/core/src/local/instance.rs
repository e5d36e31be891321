use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive, Zero};

use super::value::{Label, LocalValue, ValueKind};

type Unary = Arc<dyn Fn(&LocalValue) -> LocalValue + Send + Sync>;
type Nary = Arc<dyn Fn(&[LocalValue]) -> LocalValue + Send + Sync>;

/// One local valuation: `v(A) = g(h(v(A1), …, v(An)))` over the direct
/// attackers `A1 … An` of `A`, with `v(A) = V_Max` for unattacked `A`.
#[derive(Clone)]
pub struct LocalInstance {
    name: String,
    kind: ValueKind,
    v_min: LocalValue,
    v_max: LocalValue,
    g: Unary,
    h: Nary,
}

impl fmt::Debug for LocalInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("LocalInstance")
            .field("name", &self.name)
            .field("kind", &self.kind)
            .field("v_min", &self.v_min)
            .field("v_max", &self.v_max)
            .finish_non_exhaustive()
    }
}

impl LocalInstance {
    /// A custom instance. Nothing is checked here; see
    /// [`validate_instance`](super::validate_instance).
    pub fn new(
        name: impl Into<String>,
        kind: ValueKind,
        v_min: LocalValue,
        v_max: LocalValue,
        g: impl Fn(&LocalValue) -> LocalValue + Send + Sync + 'static,
        h: impl Fn(&[LocalValue]) -> LocalValue + Send + Sync + 'static,
    ) -> Self {
        LocalInstance {
            name: name.into(),
            kind,
            v_min,
            v_max,
            g: Arc::new(g),
            h: Arc::new(h),
        }
    }

    /// `g(x) = 1/(1+x)`, `h = sum`, values in `[0,1]`.
    ///
    /// ```
    /// use graduality::local::{LocalInstance, LocalValue};
    ///
    /// let cat = LocalInstance::categoriser();
    /// assert_eq!(cat.g(&LocalValue::rational(1, 1)), LocalValue::rational(1, 2));
    /// ```
    pub fn categoriser() -> Self {
        LocalInstance::new(
            "categoriser",
            ValueKind::Rational,
            LocalValue::Rational(BigRational::zero()),
            LocalValue::Rational(BigRational::one()),
            |x| match x {
                LocalValue::Rational(r) => LocalValue::Rational((BigRational::one() + r).recip()),
                other => LocalValue::Float(1.0 / (1.0 + number(other))),
            },
            |xs| {
                if xs.iter().all(|x| x.kind() == ValueKind::Rational) {
                    LocalValue::Rational(xs.iter().filter_map(LocalValue::as_rational).sum())
                } else {
                    LocalValue::Float(xs.iter().map(number).sum())
                }
            },
        )
    }

    /// Labels `− < ? < +`, `h = max`, `g(−) = +`, `g(?) = ?`, `g(+) = −`.
    pub fn rooted_labelling() -> Self {
        LocalInstance::new(
            "labelling",
            ValueKind::Label,
            LocalValue::Label(Label::Minus),
            LocalValue::Label(Label::Plus),
            |x| {
                LocalValue::Label(match x.as_label().expect("label instance") {
                    Label::Minus => Label::Plus,
                    Label::Unknown => Label::Unknown,
                    Label::Plus => Label::Minus,
                })
            },
            |xs| {
                LocalValue::Label(
                    xs.iter()
                        .filter_map(LocalValue::as_label)
                        .max()
                        .unwrap_or(Label::Minus),
                )
            },
        )
    }

    /// `h = max` on `[0,1]` with the given `g`, which should be
    /// non-increasing with `g(0) = 1` and `g(1) < 1`.
    ///
    /// ```
    /// use graduality::local::{LocalInstance, LocalValue};
    /// use num_rational::BigRational;
    /// use num_traits::One;
    ///
    /// let inst = LocalInstance::max_based("complement", |x| BigRational::one() - x);
    /// let h = inst.h(&[LocalValue::rational(1, 3), LocalValue::rational(1, 2)]);
    /// assert_eq!(h, LocalValue::rational(1, 2));
    /// ```
    pub fn max_based(
        name: impl Into<String>,
        g: impl Fn(&BigRational) -> BigRational + Send + Sync + 'static,
    ) -> Self {
        LocalInstance::new(
            name,
            ValueKind::Rational,
            LocalValue::Rational(BigRational::zero()),
            LocalValue::Rational(BigRational::one()),
            move |x| match x {
                LocalValue::Rational(r) => LocalValue::Rational(g(r)),
                other => {
                    let r = BigRational::from_f64(number(other)).expect("finite value");
                    LocalValue::Float(g(&r).to_f64().unwrap_or(f64::NAN))
                }
            },
            |xs| {
                let mut best: Option<&LocalValue> = None;
                for x in xs {
                    if best.is_none_or(|b| x.ge(b) && x != b) {
                        best = Some(x);
                    }
                }
                best.cloned()
                    .unwrap_or_else(|| LocalValue::Rational(BigRational::zero()))
            },
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> ValueKind {
        self.kind
    }

    pub fn v_min(&self) -> &LocalValue {
        &self.v_min
    }

    pub fn v_max(&self) -> &LocalValue {
        &self.v_max
    }

    pub fn g(&self, x: &LocalValue) -> LocalValue {
        (self.g)(x)
    }

    pub fn h(&self, xs: &[LocalValue]) -> LocalValue {
        (self.h)(xs)
    }
}

fn number(x: &LocalValue) -> f64 {
    x.to_f64().expect("numeric value")
}

/// The categoriser, the rooted labelling and the max-based instance with
/// `g(x) = 1 − x`.
pub fn builtin_instances() -> Vec<LocalInstance> {
    vec![
        LocalInstance::categoriser(),
        LocalInstance::rooted_labelling(),
        LocalInstance::max_based("max-complement", |x| BigRational::one() - x),
    ]
}
