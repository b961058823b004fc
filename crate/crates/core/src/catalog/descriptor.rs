use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyTag {
    BlownUpPlane,
    EnriquesFm,
    K3,
    EllipticCurve,
    CY3FiberProduct,
    HypersurfaceW,
    Product,
}

impl FamilyTag {
    pub const ALL: [FamilyTag; 7] = [
        FamilyTag::BlownUpPlane,
        FamilyTag::EnriquesFm,
        FamilyTag::K3,
        FamilyTag::EllipticCurve,
        FamilyTag::CY3FiberProduct,
        FamilyTag::HypersurfaceW,
        FamilyTag::Product,
    ];

    /// Name used in JSON descriptors.
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::BlownUpPlane => "BlownUpPlane",
            FamilyTag::EnriquesFm => "EnriquesFm",
            FamilyTag::K3 => "K3",
            FamilyTag::EllipticCurve => "EllipticCurve",
            FamilyTag::CY3FiberProduct => "CY3FiberProduct",
            FamilyTag::HypersurfaceW => "HypersurfaceW",
            FamilyTag::Product => "Product",
        }
    }

    /// Name used on the command line.
    pub fn cli_name(self) -> &'static str {
        match self {
            FamilyTag::BlownUpPlane => "blownup-plane",
            FamilyTag::EnriquesFm => "enriques",
            FamilyTag::K3 => "k3",
            FamilyTag::EllipticCurve => "elliptic-curve",
            FamilyTag::CY3FiberProduct => "cy3-fiber-product",
            FamilyTag::HypersurfaceW => "hypersurface-w",
            FamilyTag::Product => "product",
        }
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        FamilyTag::ALL.into_iter().find(|t| t.as_str() == s)
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A polarized family together with the integer parameters selecting a member.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    pub family: FamilyTag,
    pub params: Vec<(String, i64)>,
    pub assumptions: Vec<String>,
    /// Factors, only for [`FamilyTag::Product`].
    pub children: Vec<FamilyDescriptor>,
}

impl FamilyDescriptor {
    pub fn new(family: FamilyTag, names: &[&str], values: &[i64], assumptions: &[&str]) -> Self {
        FamilyDescriptor {
            family,
            params: names
                .iter()
                .map(|n| n.to_string())
                .zip(values.iter().copied())
                .collect(),
            assumptions: assumptions.iter().map(|a| a.to_string()).collect(),
            children: Vec::new(),
        }
    }

    pub fn product(children: Vec<FamilyDescriptor>) -> Self {
        FamilyDescriptor {
            family: FamilyTag::Product,
            params: Vec::new(),
            assumptions: Vec::new(),
            children,
        }
    }

    pub fn param(&self, name: &str) -> Option<i64> {
        self.params.iter().find(|(n, _)| n == name).map(|&(_, v)| v)
    }

    pub fn param_values(&self) -> Vec<i64> {
        self.params.iter().map(|&(_, v)| v).collect()
    }

    /// Parameters flattened depth-first through products; the sort key for matches.
    pub fn flat_params(&self) -> Vec<i64> {
        let mut out = self.param_values();
        for c in &self.children {
            out.extend(c.flat_params());
        }
        out
    }

    /// Compact label such as `blownup-plane(p=4,k=12)`.
    pub fn label(&self) -> String {
        if self.family == FamilyTag::Product {
            let inner: Vec<_> = self.children.iter().map(|c| c.label()).collect();
            return format!("product[{}]", inner.join(", "));
        }
        let ps: Vec<_> = self
            .params
            .iter()
            .map(|(n, v)| format!("{n}={v}"))
            .collect();
        format!("{}({})", self.family.cli_name(), ps.join(","))
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("family".into(), Value::from(self.family.as_str()));
        let params: Map<String, Value> = self
            .params
            .iter()
            .map(|(n, v)| (n.clone(), Value::from(*v)))
            .collect();
        obj.insert("params".into(), Value::Object(params));
        obj.insert(
            "assumptions".into(),
            Value::Array(
                self.assumptions
                    .iter()
                    .map(|a| Value::from(a.as_str()))
                    .collect(),
            ),
        );
        if self.family == FamilyTag::Product {
            obj.insert(
                "children".into(),
                Value::Array(self.children.iter().map(|c| c.to_json()).collect()),
            );
        }
        Value::Object(obj)
    }

    pub fn from_json(v: &Value) -> Result<Self, String> {
        let obj = v.as_object().ok_or("descriptor must be an object")?;
        let family = obj
            .get("family")
            .and_then(Value::as_str)
            .and_then(FamilyTag::parse)
            .ok_or("missing or unknown \"family\"")?;
        let params = match obj.get("params") {
            None => Vec::new(),
            Some(Value::Object(m)) => m
                .iter()
                .map(|(k, v)| {
                    v.as_i64()
                        .map(|v| (k.clone(), v))
                        .ok_or(format!("param {k} is not an integer"))
                })
                .collect::<Result<_, _>>()?,
            Some(_) => return Err("\"params\" must be an object".into()),
        };
        let assumptions = match obj.get("assumptions") {
            None => Vec::new(),
            Some(Value::Array(a)) => a
                .iter()
                .map(|s| {
                    s.as_str()
                        .map(str::to_string)
                        .ok_or("assumption must be a string".to_string())
                })
                .collect::<Result<_, _>>()?,
            Some(_) => return Err("\"assumptions\" must be an array".into()),
        };
        let children = match obj.get("children") {
            None => Vec::new(),
            Some(Value::Array(a)) => a.iter().map(Self::from_json).collect::<Result<_, _>>()?,
            Some(_) => return Err("\"children\" must be an array".into()),
        };
        if (family == FamilyTag::Product) == children.is_empty() {
            return Err("children must be present exactly for Product".into());
        }
        Ok(FamilyDescriptor {
            family,
            params,
            assumptions,
            children,
        })
    }
}

impl Serialize for FamilyDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FamilyDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        FamilyDescriptor::from_json(&v).map_err(D::Error::custom)
    }
}
