//! Element labels for finite sets.
//!
//! Tensor products flatten labels into sequences, coproducts wrap them in
//! tags. The unit object carries the empty sequence, which makes the
//! monoidal unit and associativity laws of finite sets hold literally:
//! flattening a concatenation is independent of bracketing.

use serde::de::{self, Deserializer, MapAccess, SeqAccess, Visitor};
use serde::ser::{SerializeMap, Serializer};
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Atom(String),
    Idx(usize),
    /// Flattened tuple; children produced by [`Label::pair`] are never `Seq`.
    Seq(Vec<Label>),
    /// Coproduct injection: (tag, element).
    Tagged(Box<Label>, Box<Label>),
}

impl Label {
    pub fn atom(s: impl Into<String>) -> Label {
        Label::Atom(s.into())
    }

    /// The canonical element of the tensor unit.
    pub fn unit() -> Label {
        Label::Seq(Vec::new())
    }

    pub fn tagged(tag: Label, inner: Label) -> Label {
        Label::Tagged(Box::new(tag), Box::new(inner))
    }

    fn push_parts(&self, out: &mut Vec<Label>) {
        match self {
            Label::Seq(items) => out.extend(items.iter().cloned()),
            other => out.push(other.clone()),
        }
    }

    /// Flattened pairing: the label of `a (x) b` in a tensor product.
    /// `pair(unit(), x) == x` and `pair(pair(x,y),z) == pair(x,pair(y,z))`.
    pub fn pair(a: &Label, b: &Label) -> Label {
        let mut parts = Vec::new();
        a.push_parts(&mut parts);
        b.push_parts(&mut parts);
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Label::Seq(parts)
        }
    }

    pub fn seq(items: Vec<Label>) -> Label {
        let mut parts = Vec::new();
        for it in &items {
            it.push_parts(&mut parts);
        }
        if parts.len() == 1 {
            parts.pop().unwrap()
        } else {
            Label::Seq(parts)
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Atom(s) => write!(f, "{s}"),
            Label::Idx(i) => write!(f, "#{i}"),
            Label::Seq(items) => {
                write!(f, "(")?;
                for (k, it) in items.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{it}")?;
                }
                write!(f, ")")
            }
            Label::Tagged(tag, inner) => write!(f, "[{tag}]{inner}"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Atom(a) => s.serialize_str(a),
            Label::Idx(i) => s.serialize_u64(*i as u64),
            Label::Seq(items) => items.serialize(s),
            Label::Tagged(tag, inner) => {
                let mut m = s.serialize_map(Some(2))?;
                m.serialize_entry("t", tag)?;
                m.serialize_entry("v", inner)?;
                m.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Label, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Label;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "a label (string, integer, array, or {{t,v}} object)")
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Label, E> {
                Ok(Label::Atom(v.to_string()))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Label, E> {
                Ok(Label::Idx(v as usize))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Label, E> {
                if v < 0 {
                    return Err(E::custom("negative index label"));
                }
                Ok(Label::Idx(v as usize))
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut a: A) -> std::result::Result<Label, A::Error> {
                let mut items = Vec::new();
                while let Some(it) = a.next_element::<Label>()? {
                    items.push(it);
                }
                Ok(Label::Seq(items))
            }
            fn visit_map<A: MapAccess<'de>>(self, mut a: A) -> std::result::Result<Label, A::Error> {
                let mut tag = None;
                let mut val = None;
                while let Some(k) = a.next_key::<String>()? {
                    match k.as_str() {
                        "t" => tag = Some(a.next_value::<Label>()?),
                        "v" => val = Some(a.next_value::<Label>()?),
                        other => return Err(de::Error::custom(format!("unknown key {other}"))),
                    }
                }
                match (tag, val) {
                    (Some(t), Some(v)) => Ok(Label::tagged(t, v)),
                    _ => Err(de::Error::custom("tagged label needs both t and v")),
                }
            }
        }
        d.deserialize_any(V)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairing_is_strictly_associative_and_unital() {
        let x = Label::atom("x");
        let y = Label::atom("y");
        let z = Label::atom("z");
        assert_eq!(Label::pair(&Label::unit(), &x), x);
        assert_eq!(Label::pair(&x, &Label::unit()), x);
        let l = Label::pair(&Label::pair(&x, &y), &z);
        let r = Label::pair(&x, &Label::pair(&y, &z));
        assert_eq!(l, r);
        assert_eq!(l, Label::Seq(vec![x.clone(), y, z]));
        assert_eq!(Label::pair(&Label::unit(), &Label::unit()), Label::unit());
    }

    #[test]
    fn tagged_labels_stay_atomic_under_pairing() {
        let t = Label::tagged(Label::atom("c"), Label::atom("q"));
        let p = Label::pair(&t, &t);
        assert_eq!(p, Label::Seq(vec![t.clone(), t]));
    }

    #[test]
    fn serde_roundtrip() {
        let l = Label::tagged(
            Label::atom("c"),
            Label::Seq(vec![Label::atom("f"), Label::Idx(2)]),
        );
        let s = serde_json::to_string(&l).unwrap();
        let back: Label = serde_json::from_str(&s).unwrap();
        assert_eq!(l, back);
    }
}
