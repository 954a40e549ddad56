//! Finite categories given by explicit composition tables, functors and
//! natural transformations between them, and the decidable predicates
//! (iso, mono, epi, fully faithful, contractible) everything else uses.
//!
//! Objects and morphisms are dense integer ids. Every "pick one" step in the
//! crate takes the least id, so results are reproducible.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::validation::{ValidationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct MorId(pub usize);

impl fmt::Display for ObjId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "o{}", self.0)
    }
}

impl fmt::Display for MorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub name: String,
    pub dom: ObjId,
    pub cod: ObjId,
}

/// A finite category. The composition table may be partial or wrong until
/// [`FinCategory::validate`] says otherwise; operations other than
/// validation assume a valid category.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinCategory {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    // comp[g * m + f] = g ∘ f
    comp: Vec<Option<MorId>>,
    homs: Vec<Vec<MorId>>,
}

impl FinCategory {
    pub fn from_parts(
        name: impl Into<String>,
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identity: Vec<MorId>,
        comp: Vec<Option<MorId>>,
    ) -> Result<Self> {
        let n = objects.len();
        let m = morphisms.len();
        if identity.len() != n {
            return Err(Error::Shape(format!("{} identities for {} objects", identity.len(), n)));
        }
        if comp.len() != m * m {
            return Err(Error::Shape(format!("composition table has {} cells, expected {}", comp.len(), m * m)));
        }
        if let Some(bad) = morphisms.iter().find(|f| f.dom.0 >= n || f.cod.0 >= n) {
            return Err(Error::Shape(format!("morphism {} has an endpoint out of range", bad.name)));
        }
        if identity.iter().chain(comp.iter().flatten()).any(|f| f.0 >= m) {
            return Err(Error::Shape("morphism id out of range".into()));
        }
        let mut homs = vec![Vec::new(); n * n];
        for (i, f) in morphisms.iter().enumerate() {
            homs[f.dom.0 * n + f.cod.0].push(MorId(i));
        }
        Ok(FinCategory { name: name.into(), objects, morphisms, identity, comp, homs })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> + '_ {
        (0..self.objects.len()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> + '_ {
        (0..self.morphisms.len()).map(MorId)
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.objects[a.0]
    }

    pub fn morphism_name(&self, f: MorId) -> &str {
        &self.morphisms[f.0].name
    }

    pub fn morphism(&self, f: MorId) -> &Morphism {
        &self.morphisms[f.0]
    }

    pub fn find_object(&self, name: &str) -> Option<ObjId> {
        self.objects.iter().position(|o| o == name).map(ObjId)
    }

    pub fn find_morphism(&self, name: &str) -> Option<MorId> {
        self.morphisms.iter().position(|f| f.name == name).map(MorId)
    }

    pub fn dom(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].dom
    }

    pub fn cod(&self, f: MorId) -> ObjId {
        self.morphisms[f.0].cod
    }

    pub fn id(&self, a: ObjId) -> MorId {
        self.identity[a.0]
    }

    pub fn is_identity(&self, f: MorId) -> bool {
        self.identity[self.dom(f).0] == f
    }

    /// Morphisms `a -> b` in increasing id order.
    pub fn hom(&self, a: ObjId, b: ObjId) -> &[MorId] {
        &self.homs[a.0 * self.objects.len() + b.0]
    }

    pub fn try_compose(&self, g: MorId, f: MorId) -> Option<MorId> {
        self.comp[g.0 * self.morphisms.len() + f.0]
    }

    /// `g ∘ f`. Panics when the table has no entry, which cannot happen for a
    /// validated category and composable arguments.
    pub fn compose(&self, g: MorId, f: MorId) -> MorId {
        self.try_compose(g, f).unwrap_or_else(|| {
            panic!("{}: no composite for {} after {}", self.name, self.morphism_name(g), self.morphism_name(f))
        })
    }

    /// Composite of a path written in applicative order: `[h, g, f]` is `h ∘ g ∘ f`.
    pub fn compose_all(&self, path: &[MorId]) -> MorId {
        let (&last, rest) = path.split_last().expect("empty path");
        rest.iter().rev().fold(last, |acc, &g| self.compose(g, acc))
    }

    /// Copy of the category with one composition-table cell overwritten.
    pub fn with_composite(&self, g: MorId, f: MorId, h: MorId) -> FinCategory {
        let mut c = self.clone();
        let m = c.morphisms.len();
        c.comp[g.0 * m + f.0] = Some(h);
        c
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        for a in self.objects() {
            let i = self.id(a);
            if self.dom(i) != a || self.cod(i) != a {
                report.push(Violation::IdentityTyping { object: a, identity: i });
            }
        }
        let mut total = true;
        for g in self.morphisms() {
            for f in self.morphisms() {
                if self.cod(f) != self.dom(g) {
                    continue;
                }
                match self.try_compose(g, f) {
                    None => {
                        total = false;
                        report.push(Violation::MissingComposite { g, f });
                    }
                    Some(h) if self.dom(h) != self.dom(f) || self.cod(h) != self.cod(g) => {
                        total = false;
                        report.push(Violation::CompositeTyping { g, f, composite: h });
                    }
                    Some(_) => {}
                }
            }
        }
        if !total || !report.is_valid() {
            return report;
        }
        for f in self.morphisms() {
            if self.compose(f, self.id(self.dom(f))) != f {
                report.push(Violation::RightIdentity { f });
            }
            if self.compose(self.id(self.cod(f)), f) != f {
                report.push(Violation::LeftIdentity { f });
            }
        }
        for f in self.morphisms() {
            for g in self.out_of(self.cod(f)) {
                for h in self.out_of(self.cod(g)) {
                    let left = self.compose(h, self.compose(g, f));
                    let right = self.compose(self.compose(h, g), f);
                    if left != right {
                        report.push(Violation::Associativity { h, g, f });
                    }
                }
            }
        }
        report
    }

    fn out_of(&self, a: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&f| self.dom(f) == a).collect()
    }

    /// The inverse of `f`, if it has one.
    pub fn is_iso(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.dom(f), self.cod(f));
        self.hom(b, a).iter().copied().find(|&g| self.compose(g, f) == self.id(a) && self.compose(f, g) == self.id(b))
    }

    pub fn inverse(&self, f: MorId) -> Result<MorId> {
        self.is_iso(f).ok_or_else(|| Error::Precondition(format!("{} is not invertible", self.morphism_name(f))))
    }

    /// `f ∘ g = f ∘ h` implies `g = h`, checked over every parallel pair.
    pub fn is_mono(&self, f: MorId) -> bool {
        let a = self.dom(f);
        self.objects().all(|x| {
            let images: Vec<MorId> = self.hom(x, a).iter().map(|&g| self.compose(f, g)).collect();
            all_distinct(&images)
        })
    }

    /// `g ∘ f = h ∘ f` implies `g = h`, checked over every parallel pair.
    pub fn is_epi(&self, f: MorId) -> bool {
        let b = self.cod(f);
        self.objects().all(|y| {
            let images: Vec<MorId> = self.hom(b, y).iter().map(|&g| self.compose(g, f)).collect();
            all_distinct(&images)
        })
    }

    /// Nonempty with exactly one morphism between every ordered pair of objects.
    pub fn is_contractible(&self) -> bool {
        self.object_count() > 0 && self.homs.iter().all(|h| h.len() == 1)
    }

    /// The product category; object `(a, b)` has id `a * |ob other| + b` and
    /// morphism `(f, g)` has id `f * |mor other| + g`.
    pub fn product(&self, other: &FinCategory) -> FinCategory {
        let (n2, m2) = (other.object_count(), other.morphism_count());
        let objects =
            self.objects.iter().flat_map(|a| other.objects.iter().map(move |b| format!("({a},{b})"))).collect();
        let morphisms = self
            .morphisms
            .iter()
            .flat_map(|f| {
                other.morphisms.iter().map(move |g| Morphism {
                    name: format!("({},{})", f.name, g.name),
                    dom: ObjId(f.dom.0 * n2 + g.dom.0),
                    cod: ObjId(f.cod.0 * n2 + g.cod.0),
                })
            })
            .collect();
        let identity =
            self.identity.iter().flat_map(|i| other.identity.iter().map(move |j| MorId(i.0 * m2 + j.0))).collect();
        let m = self.morphism_count() * m2;
        let mut comp = vec![None; m * m];
        for g in 0..m {
            for f in 0..m {
                let (g1, g2) = (MorId(g / m2), MorId(g % m2));
                let (f1, f2) = (MorId(f / m2), MorId(f % m2));
                if let (Some(h1), Some(h2)) = (self.try_compose(g1, f1), other.try_compose(g2, f2)) {
                    comp[g * m + f] = Some(MorId(h1.0 * m2 + h2.0));
                }
            }
        }
        FinCategory::from_parts(format!("{}x{}", self.name, other.name), objects, morphisms, identity, comp)
            .expect("product of well-shaped categories is well-shaped")
    }
}

fn all_distinct(items: &[MorId]) -> bool {
    let mut sorted = items.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1])
}

/// Incremental construction of a [`FinCategory`]. Each object gets an
/// identity named `id_<object>` as soon as it is added, and composites with
/// identities are filled in by [`CategoryBuilder::build`].
#[derive(Debug, Clone)]
pub struct CategoryBuilder {
    name: String,
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identity: Vec<MorId>,
    comp: HashMap<(MorId, MorId), MorId>,
}

impl CategoryBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        CategoryBuilder {
            name: name.into(),
            objects: Vec::new(),
            morphisms: Vec::new(),
            identity: Vec::new(),
            comp: HashMap::new(),
        }
    }

    pub fn object(&mut self, name: impl Into<String>) -> ObjId {
        let name = name.into();
        let a = ObjId(self.objects.len());
        let id = self.morphism(format!("id_{name}"), a, a);
        self.objects.push(name);
        self.identity.push(id);
        a
    }

    pub fn morphism(&mut self, name: impl Into<String>, dom: ObjId, cod: ObjId) -> MorId {
        self.morphisms.push(Morphism { name: name.into(), dom, cod });
        MorId(self.morphisms.len() - 1)
    }

    pub fn identity(&self, a: ObjId) -> MorId {
        self.identity[a.0]
    }

    /// Declares `g ∘ f = h`.
    pub fn compose(&mut self, g: MorId, f: MorId, h: MorId) -> &mut Self {
        self.comp.insert((g, f), h);
        self
    }

    pub fn build(self) -> FinCategory {
        let m = self.morphisms.len();
        let mut comp = vec![None; m * m];
        for (&(g, f), &h) in &self.comp {
            comp[g.0 * m + f.0] = Some(h);
        }
        let is_id = |f: MorId| self.identity.get(self.morphisms[f.0].dom.0) == Some(&f);
        for g in 0..m {
            for f in 0..m {
                let (gm, fm) = (&self.morphisms[g], &self.morphisms[f]);
                if fm.cod != gm.dom || comp[g * m + f].is_some() {
                    continue;
                }
                if is_id(MorId(g)) {
                    comp[g * m + f] = Some(MorId(f));
                } else if is_id(MorId(f)) {
                    comp[g * m + f] = Some(MorId(g));
                }
            }
        }
        FinCategory::from_parts(self.name, self.objects, self.morphisms, self.identity, comp)
            .expect("builder output is well-shaped")
    }
}

/// A functor between finite categories, given by its object and morphism maps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Functor {
    source: Arc<FinCategory>,
    target: Arc<FinCategory>,
    omap: Vec<ObjId>,
    mmap: Vec<MorId>,
}

impl Functor {
    pub fn new(source: Arc<FinCategory>, target: Arc<FinCategory>, omap: Vec<ObjId>, mmap: Vec<MorId>) -> Result<Self> {
        if omap.len() != source.object_count() || mmap.len() != source.morphism_count() {
            return Err(Error::Shape("functor maps do not cover the source".into()));
        }
        if omap.iter().any(|a| a.0 >= target.object_count()) || mmap.iter().any(|f| f.0 >= target.morphism_count()) {
            return Err(Error::Shape("functor maps leave the target".into()));
        }
        Ok(Functor { source, target, omap, mmap })
    }

    pub fn identity(cat: Arc<FinCategory>) -> Self {
        let omap = cat.objects().collect();
        let mmap = cat.morphisms().collect();
        Functor { source: cat.clone(), target: cat, omap, mmap }
    }

    /// The functor sending everything to `a` and its identity.
    pub fn constant(source: Arc<FinCategory>, target: Arc<FinCategory>, a: ObjId) -> Self {
        let omap = vec![a; source.object_count()];
        let mmap = vec![target.id(a); source.morphism_count()];
        Functor { source, target, omap, mmap }
    }

    pub fn source(&self) -> &Arc<FinCategory> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinCategory> {
        &self.target
    }

    pub fn obj(&self, a: ObjId) -> ObjId {
        self.omap[a.0]
    }

    pub fn mor(&self, f: MorId) -> MorId {
        self.mmap[f.0]
    }

    pub fn object_map(&self) -> &[ObjId] {
        &self.omap
    }

    pub fn morphism_map(&self) -> &[MorId] {
        &self.mmap
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &Functor) -> Result<Functor> {
        if self.target != next.source {
            return Err(Error::Shape("functors are not composable".into()));
        }
        Ok(Functor {
            source: self.source.clone(),
            target: next.target.clone(),
            omap: self.omap.iter().map(|&a| next.obj(a)).collect(),
            mmap: self.mmap.iter().map(|&f| next.mor(f)).collect(),
        })
    }

    pub fn validate(&self) -> ValidationReport {
        let (c, d) = (&*self.source, &*self.target);
        let mut report = ValidationReport::default();
        for f in c.morphisms() {
            let image = self.mor(f);
            if d.dom(image) != self.obj(c.dom(f)) || d.cod(image) != self.obj(c.cod(f)) {
                report.push(Violation::FunctorTyping { f });
            }
        }
        for a in c.objects() {
            if self.mor(c.id(a)) != d.id(self.obj(a)) {
                report.push(Violation::FunctorIdentity { object: a });
            }
        }
        if !report.is_valid() {
            return report;
        }
        for g in c.morphisms() {
            for f in c.morphisms() {
                if c.cod(f) == c.dom(g) && self.mor(c.compose(g, f)) != d.compose(self.mor(g), self.mor(f)) {
                    report.push(Violation::FunctorComposition { g, f });
                }
            }
        }
        report
    }

    /// Every hom-set map is a bijection, checked as injective plus equal size.
    pub fn is_fully_faithful(&self) -> bool {
        let (c, d) = (&*self.source, &*self.target);
        c.objects().all(|x| {
            c.objects().all(|y| {
                let src = c.hom(x, y);
                let images: Vec<MorId> = src.iter().map(|&f| self.mor(f)).collect();
                src.len() == d.hom(self.obj(x), self.obj(y)).len() && all_distinct(&images)
            })
        })
    }

    /// Every target object is isomorphic to the image of some source object.
    pub fn is_essentially_surjective(&self) -> bool {
        let d = &*self.target;
        d.objects().all(|y| self.omap.iter().any(|&fx| d.hom(fx, y).iter().any(|&f| d.is_iso(f).is_some())))
    }

    /// Bijective on objects and on morphisms.
    pub fn is_isomorphism(&self) -> bool {
        let mut objs = self.omap.clone();
        objs.sort_unstable();
        objs.dedup();
        let mut mors = self.mmap.clone();
        mors.sort_unstable();
        mors.dedup();
        objs.len() == self.target.object_count()
            && mors.len() == self.target.morphism_count()
            && self.omap.len() == objs.len()
            && self.mmap.len() == mors.len()
    }
}

/// A family of components `F X -> G X` indexed by the objects of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NatTransformation {
    from: Functor,
    to: Functor,
    components: Vec<MorId>,
}

impl NatTransformation {
    pub fn new(from: Functor, to: Functor, components: Vec<MorId>) -> Result<Self> {
        if from.source != to.source || from.target != to.target {
            return Err(Error::Shape("transformation between functors with different ends".into()));
        }
        if components.len() != from.source.object_count() {
            return Err(Error::Shape("one component per source object required".into()));
        }
        Ok(NatTransformation { from, to, components })
    }

    pub fn identity(f: Functor) -> Self {
        let components = f.source.objects().map(|a| f.target.id(f.obj(a))).collect();
        NatTransformation { to: f.clone(), from: f, components }
    }

    pub fn from(&self) -> &Functor {
        &self.from
    }

    pub fn to(&self) -> &Functor {
        &self.to
    }

    pub fn component(&self, a: ObjId) -> MorId {
        self.components[a.0]
    }

    pub fn components(&self) -> &[MorId] {
        &self.components
    }

    pub fn validate(&self) -> ValidationReport {
        let (c, d) = (&*self.from.source, &*self.from.target);
        let mut report = ValidationReport::default();
        for a in c.objects() {
            let t = self.component(a);
            if t.0 >= d.morphism_count() || d.dom(t) != self.from.obj(a) || d.cod(t) != self.to.obj(a) {
                report.push(Violation::ComponentTyping { object: a });
            }
        }
        if !report.is_valid() {
            return report;
        }
        for f in c.morphisms() {
            let (x, y) = (c.dom(f), c.cod(f));
            let left = d.compose(self.component(y), self.from.mor(f));
            let right = d.compose(self.to.mor(f), self.component(x));
            if left != right {
                report.push(Violation::Naturality { f });
            }
        }
        report
    }
}
