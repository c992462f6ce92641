//! Serde helpers for floats that may be infinite (JSON has no infinity).

use serde::{Deserialize, Deserializer, Serializer};

#[derive(Deserialize)]
#[serde(untagged)]
enum Repr {
    Num(f64),
    Text(String),
}

fn decode<E: serde::de::Error>(r: Repr) -> Result<f64, E> {
    match r {
        Repr::Num(v) => Ok(v),
        Repr::Text(s) => match s.as_str() {
            "inf" => Ok(f64::INFINITY),
            "-inf" => Ok(f64::NEG_INFINITY),
            "nan" => Ok(f64::NAN),
            other => Err(E::custom(format!("expected a number, got `{other}`"))),
        },
    }
}

pub(crate) fn ser_f64<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
    if v.is_finite() {
        s.serialize_f64(*v)
    } else if v.is_nan() {
        s.serialize_str("nan")
    } else if *v > 0.0 {
        s.serialize_str("inf")
    } else {
        s.serialize_str("-inf")
    }
}

pub(crate) fn de_f64<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
    decode(Repr::deserialize(d)?)
}

pub(crate) fn ser_opt_f64<S: Serializer>(v: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_f64(v, s),
        None => s.serialize_none(),
    }
}

pub(crate) fn de_opt_f64<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
    match Option::<Repr>::deserialize(d)? {
        Some(r) => decode(r).map(Some),
        None => Ok(None),
    }
}

/// Vertex indices are 0-based in memory and 1-based in serialized reports.
pub(crate) mod one_based {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub trait Shift: Sized {
        fn up(&self) -> Self;
        fn down(self) -> Option<Self>;
    }

    impl Shift for usize {
        fn up(&self) -> Self {
            self + 1
        }
        fn down(self) -> Option<Self> {
            self.checked_sub(1)
        }
    }

    impl<T: Shift> Shift for Vec<T> {
        fn up(&self) -> Self {
            self.iter().map(Shift::up).collect()
        }
        fn down(self) -> Option<Self> {
            self.into_iter().map(Shift::down).collect()
        }
    }

    pub fn serialize<T: Shift + Serialize, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        v.up().serialize(s)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: Shift + Deserialize<'de>,
        D: Deserializer<'de>,
    {
        T::deserialize(d)?
            .down()
            .ok_or_else(|| serde::de::Error::custom("vertex labels are 1-based"))
    }
}
