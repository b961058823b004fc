use std::collections::BTreeMap;
use std::sync::Arc;

use super::descriptor::{FamilyDescriptor, FamilyTag};
use super::families::{
    BlownUpPlane, Cy3FiberProduct, EllipticCurve, EnriquesFm, HypersurfaceW, K3Polarized,
};
use crate::error::{Error, Result};
use crate::matcher::ParamRange;
use crate::ratpoly::RatPoly;

/// One polarized family: a guard on its integer parameters and a Hilbert
/// polynomial for every member passing the guard.
pub trait FamilyKind: Send + Sync {
    fn tag(&self) -> FamilyTag;

    /// Registry name, also used on the command line.
    fn name(&self) -> &'static str {
        self.tag().cli_name()
    }

    fn aliases(&self) -> &'static [&'static str] {
        &[]
    }

    fn param_names(&self) -> &'static [&'static str];

    fn assumptions(&self) -> &'static [&'static str] {
        &[]
    }

    /// Numeric ampleness guard. Called with exactly `param_names().len()` values.
    fn check(&self, params: &[i64]) -> Result<()>;

    /// Hilbert polynomial of a member that passed [`FamilyKind::check`].
    fn polynomial(&self, params: &[i64]) -> Result<RatPoly>;

    /// Box scanned by default (integrality sweeps, `verify-paper`).
    fn default_range(&self) -> ParamRange;

    fn build(&self, params: &[i64]) -> Result<(FamilyDescriptor, RatPoly)> {
        let names = self.param_names();
        if params.len() != names.len() {
            return Err(Error::BadParams {
                family: self.tag(),
                message: format!("expected parameters {names:?}, got {} values", params.len()),
            });
        }
        self.check(params)?;
        let poly = self.polynomial(params)?;
        let desc = FamilyDescriptor::new(self.tag(), names, params, self.assumptions());
        Ok((desc, poly))
    }

    /// Build from named parameters in any order.
    fn build_named(&self, named: &[(String, i64)]) -> Result<(FamilyDescriptor, RatPoly)> {
        let mut values = Vec::with_capacity(self.param_names().len());
        for want in self.param_names() {
            let v = named
                .iter()
                .find(|(n, _)| n == want)
                .map(|&(_, v)| v)
                .ok_or_else(|| Error::BadParams {
                    family: self.tag(),
                    message: format!("missing parameter {want}"),
                })?;
            values.push(v);
        }
        if let Some((extra, _)) = named
            .iter()
            .find(|(n, _)| !self.param_names().contains(&n.as_str()))
        {
            return Err(Error::BadParams {
                family: self.tag(),
                message: format!("unknown parameter {extra}"),
            });
        }
        self.build(&values)
    }
}

/// Families selectable by name.
#[derive(Clone)]
pub struct Registry {
    by_name: BTreeMap<String, Arc<dyn FamilyKind>>,
    by_tag: BTreeMap<FamilyTag, Arc<dyn FamilyKind>>,
}

impl Registry {
    pub fn empty() -> Self {
        Registry {
            by_name: BTreeMap::new(),
            by_tag: BTreeMap::new(),
        }
    }

    pub fn builtin() -> Self {
        let mut reg = Self::empty();
        reg.register(Arc::new(BlownUpPlane));
        reg.register(Arc::new(EnriquesFm));
        reg.register(Arc::new(K3Polarized));
        reg.register(Arc::new(EllipticCurve));
        reg.register(Arc::new(Cy3FiberProduct));
        reg.register(Arc::new(HypersurfaceW));
        reg
    }

    /// Registers under the kind's name and aliases, replacing any earlier
    /// kind with the same tag.
    pub fn register(&mut self, kind: Arc<dyn FamilyKind>) {
        self.by_name.retain(|_, k| k.tag() != kind.tag());
        self.by_name.insert(kind.name().to_string(), kind.clone());
        for alias in kind.aliases() {
            self.by_name.insert(alias.to_string(), kind.clone());
        }
        self.by_tag.insert(kind.tag(), kind);
    }

    pub fn get(&self, name: &str) -> Result<&dyn FamilyKind> {
        self.by_name
            .get(&name.to_ascii_lowercase())
            .map(|k| &**k)
            .ok_or_else(|| Error::UnknownFamily(name.to_string()))
    }

    pub fn by_tag(&self, tag: FamilyTag) -> Result<&dyn FamilyKind> {
        if tag == FamilyTag::Product {
            return Err(Error::UnsupportedFamily(tag));
        }
        self.by_tag
            .get(&tag)
            .map(|k| &**k)
            .ok_or_else(|| Error::UnknownFamily(tag.to_string()))
    }

    /// Recomputes a descriptor's polynomial from its parameters alone.
    pub fn polynomial_of(&self, desc: &FamilyDescriptor) -> Result<RatPoly> {
        if desc.family == FamilyTag::Product {
            if desc.children.is_empty() {
                return Err(Error::EmptyProduct);
            }
            return desc
                .children
                .iter()
                .map(|c| self.polynomial_of(c))
                .product();
        }
        Ok(self.by_tag(desc.family)?.build_named(&desc.params)?.1)
    }

    pub fn kinds(&self) -> impl Iterator<Item = &dyn FamilyKind> {
        self.by_tag.values().map(|k| &**k)
    }

    pub fn names(&self) -> Vec<&str> {
        self.by_name.keys().map(String::as_str).collect()
    }
}

impl Default for Registry {
    fn default() -> Self {
        Self::builtin()
    }
}

impl std::fmt::Debug for Registry {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Registry")
            .field("names", &self.names())
            .finish()
    }
}
