//! The line-oriented category description language.
//!
//! ```text
//! # comments run to the end of the line
//! category z2eh
//! objects E
//! hom s : E -> E
//! compose s s = id_E
//! tensor E E = E
//! tensorm s s = id_E
//! tensorm id_E s = s
//! tensorm s id_E = s
//! unit E alpha id_E
//! monoid E id_E s
//!
//! functor twist : z2eh -> z2eh
//! obj E = E
//! mor s = s
//! phi2 E E = s
//! phi0 = s
//! end
//! ```
//!
//! Identities are named `id_<object>`. Composites with an identity and
//! `tensorm` rows pairing two identities may be omitted; every other row is
//! required.

use std::collections::HashMap;
use std::fmt::{self, Write as _};
use std::sync::Arc;

use thiserror::Error;
use unital_core::monfun::{Monoid, MultiplicativeFunctor};
use unital_core::{CategoryBuilder, FinCategory, Functor, MorId, ObjId, SaavedraUnit, SemiMonCat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CategoryDecl {
    pub semimon: Arc<SemiMonCat>,
    /// A unit fixed by a `unit` line; otherwise the least unit is used.
    pub unit: Option<SaavedraUnit>,
    pub monoids: Vec<Monoid>,
}

impl CategoryDecl {
    pub fn name(&self) -> &str {
        self.semimon.name()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FunctorDecl {
    pub name: String,
    pub source: usize,
    pub target: usize,
    pub functor: MultiplicativeFunctor,
    pub phi0: Option<MorId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatDocument {
    pub categories: Vec<CategoryDecl>,
    pub functors: Vec<FunctorDecl>,
}

impl CatDocument {
    pub fn category(&self, name: &str) -> Option<&CategoryDecl> {
        self.categories.iter().find(|c| c.name() == name)
    }

    pub fn functor(&self, name: &str) -> Option<&FunctorDecl> {
        self.functors.iter().find(|f| f.name == name)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Loc {
    line: usize,
    column: usize,
}

#[derive(Debug, Clone, Copy)]
struct Tok<'a> {
    text: &'a str,
    loc: Loc,
}

fn err<T>(loc: Loc, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line: loc.line, column: loc.column, message: message.into() })
}

fn tokenize(line: &str, number: usize) -> Vec<Tok<'_>> {
    let code = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (col, (idx, ch)) in code.char_indices().enumerate() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some((idx, col + 1)),
            (true, Some((s, c))) => {
                out.push(Tok { text: &code[s..idx], loc: Loc { line: number, column: c } });
                start = None;
            }
            _ => {}
        }
    }
    if let Some((s, c)) = start {
        out.push(Tok { text: &code[s..], loc: Loc { line: number, column: c } });
    }
    out
}

/// Matches `toks` against a pattern in which `None` stands for a name.
/// Returns the name tokens.
fn shape<'a>(toks: &[Tok<'a>], pattern: &[Option<&str>], usage: &str, eol: Loc) -> Result<Vec<Tok<'a>>, ParseError> {
    let mut names = Vec::new();
    for (k, want) in pattern.iter().enumerate() {
        let Some(tok) = toks.get(k) else {
            return err(eol, format!("incomplete line, expected `{usage}`"));
        };
        match want {
            Some(lit) if tok.text != *lit => return err(tok.loc, format!("expected `{lit}` in `{usage}`")),
            Some(_) => {}
            None => names.push(*tok),
        }
    }
    if let Some(extra) = toks.get(pattern.len()) {
        return err(extra.loc, format!("unexpected `{}`, expected `{usage}`", extra.text));
    }
    Ok(names)
}

#[derive(Default)]
struct RawCategory<'a> {
    header: Option<Tok<'a>>,
    objects: Vec<Tok<'a>>,
    homs: Vec<[Tok<'a>; 3]>,
    compose: Vec<[Tok<'a>; 3]>,
    tensor: Vec<[Tok<'a>; 3]>,
    tensorm: Vec<[Tok<'a>; 3]>,
    unit: Option<[Tok<'a>; 2]>,
    monoids: Vec<[Tok<'a>; 3]>,
}

struct RawFunctor<'a> {
    name: Tok<'a>,
    source: usize,
    target: usize,
    obj: Vec<[Tok<'a>; 2]>,
    mor: Vec<[Tok<'a>; 2]>,
    phi2: Vec<[Tok<'a>; 3]>,
    phi0: Option<Tok<'a>>,
}

fn arr<'a, const N: usize>(v: Vec<Tok<'a>>) -> [Tok<'a>; N] {
    v.try_into().unwrap_or_else(|_| unreachable!("pattern fixes the arity"))
}

struct Names<'c> {
    cat: &'c FinCategory,
}

impl Names<'_> {
    fn obj(&self, t: &Tok<'_>) -> Result<ObjId, ParseError> {
        match self.cat.find_object(t.text) {
            Some(a) => Ok(a),
            None => err(t.loc, format!("unknown object `{}` in category {}", t.text, self.cat.name())),
        }
    }

    fn mor(&self, t: &Tok<'_>) -> Result<MorId, ParseError> {
        match self.cat.find_morphism(t.text) {
            Some(f) => Ok(f),
            None => err(t.loc, format!("unknown morphism `{}` in category {}", t.text, self.cat.name())),
        }
    }

    fn typed(&self, t: &Tok<'_>, dom: ObjId, cod: ObjId) -> Result<MorId, ParseError> {
        let f = self.mor(t)?;
        let c = self.cat;
        if c.dom(f) != dom || c.cod(f) != cod {
            return err(
                t.loc,
                format!(
                    "`{}` : {} -> {} is not in hom({}, {})",
                    t.text,
                    c.object_name(c.dom(f)),
                    c.object_name(c.cod(f)),
                    c.object_name(dom),
                    c.object_name(cod)
                ),
            );
        }
        Ok(f)
    }
}

fn once<K: Eq + std::hash::Hash>(seen: &mut HashMap<K, ()>, key: K, loc: Loc, what: &str) -> Result<(), ParseError> {
    if seen.insert(key, ()).is_some() {
        return err(loc, format!("duplicate definition of {what}"));
    }
    Ok(())
}

fn build_category(raw: RawCategory<'_>) -> Result<CategoryDecl, ParseError> {
    let header = raw.header.expect("a category block starts with its header");
    let mut b = CategoryBuilder::new(header.text);
    let mut objects = HashMap::new();
    for t in &raw.objects {
        once(&mut objects, t.text, t.loc, &format!("object `{}`", t.text))?;
        b.object(t.text);
    }
    let mut names: HashMap<String, ()> = raw.objects.iter().map(|t| (format!("id_{}", t.text), ())).collect();
    let mut pending = Vec::new();
    for [name, dom, cod] in &raw.homs {
        once(&mut names, name.text.to_string(), name.loc, &format!("morphism `{}`", name.text))?;
        let find = |t: &Tok<'_>| match raw.objects.iter().position(|o| o.text == t.text) {
            Some(k) => Ok(ObjId(k)),
            None => err(t.loc, format!("unknown object `{}` in category {}", t.text, header.text)),
        };
        pending.push((name.text, find(dom)?, find(cod)?));
    }
    for (name, dom, cod) in pending {
        b.morphism(name, dom, cod);
    }
    // composites are resolved against the category without them, then added
    let skeleton = b.clone().build();
    let names = Names { cat: &skeleton };
    let c = &skeleton;
    let mut seen = HashMap::new();
    for [g, f, h] in &raw.compose {
        let (gm, fm) = (names.mor(g)?, names.mor(f)?);
        if c.cod(fm) != c.dom(gm) {
            return err(g.loc, format!("`{}` and `{}` are not composable", g.text, f.text));
        }
        once(&mut seen, (gm, fm), g.loc, &format!("compose {} {}", g.text, f.text))?;
        let hm = names.typed(h, c.dom(fm), c.cod(gm))?;
        b.compose(gm, fm, hm);
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            if c.cod(f) == c.dom(g) && !c.is_identity(g) && !c.is_identity(f) && !seen.contains_key(&(g, f)) {
                return err(
                    header.loc,
                    format!(
                        "missing row `compose {} {}` in category {}",
                        c.morphism_name(g),
                        c.morphism_name(f),
                        header.text
                    ),
                );
            }
        }
    }
    let cat = Arc::new(b.build());
    let names = Names { cat: &cat };
    let n = cat.object_count();
    let mut otab: Vec<Option<ObjId>> = vec![None; n * n];
    for [a, bb, r] in &raw.tensor {
        let (a2, b2, r2) = (names.obj(a)?, names.obj(bb)?, names.obj(r)?);
        let cell = &mut otab[a2.0 * n + b2.0];
        if cell.is_some() {
            return err(a.loc, format!("duplicate definition of tensor {} {}", a.text, bb.text));
        }
        *cell = Some(r2);
    }
    let otab: Vec<ObjId> = otab
        .iter()
        .enumerate()
        .map(|(k, cell)| {
            cell.ok_or_else(|| ParseError {
                line: header.loc.line,
                column: header.loc.column,
                message: format!(
                    "missing row `tensor {} {}` in category {}",
                    cat.object_name(ObjId(k / n)),
                    cat.object_name(ObjId(k % n)),
                    header.text
                ),
            })
        })
        .collect::<Result<_, _>>()?;
    let m = cat.morphism_count();
    let mut mtab: Vec<Option<MorId>> = vec![None; m * m];
    for [f, g, h] in &raw.tensorm {
        let (fm, gm) = (names.mor(f)?, names.mor(g)?);
        let dom = otab[cat.dom(fm).0 * n + cat.dom(gm).0];
        let cod = otab[cat.cod(fm).0 * n + cat.cod(gm).0];
        let hm = names.typed(h, dom, cod)?;
        let cell = &mut mtab[fm.0 * m + gm.0];
        if cell.is_some() {
            return err(f.loc, format!("duplicate definition of tensorm {} {}", f.text, g.text));
        }
        *cell = Some(hm);
    }
    let mut full = Vec::with_capacity(m * m);
    for (k, cell) in mtab.iter().enumerate() {
        let (f, g) = (MorId(k / m), MorId(k % m));
        match cell {
            Some(h) => full.push(*h),
            None if cat.is_identity(f) && cat.is_identity(g) => {
                full.push(cat.id(otab[cat.dom(f).0 * n + cat.dom(g).0]));
            }
            None => {
                return err(
                    header.loc,
                    format!(
                        "missing row `tensorm {} {}` in category {}",
                        cat.morphism_name(f),
                        cat.morphism_name(g),
                        header.text
                    ),
                )
            }
        }
    }
    let semimon = SemiMonCat::new(cat.clone(), otab.clone(), full).expect("tables cover every pair");
    let unit = match &raw.unit {
        Some([i, alpha]) => {
            let io = names.obj(i)?;
            Some(SaavedraUnit { object: io, alpha: names.typed(alpha, otab[io.0 * n + io.0], io)? })
        }
        None => None,
    };
    let mut monoids = Vec::new();
    for [mo, mu, eta] in &raw.monoids {
        let object = names.obj(mo)?;
        let mu = names.typed(mu, otab[object.0 * n + object.0], object)?;
        let eta = names.mor(eta)?;
        if cat.cod(eta) != object {
            return err(mo.loc, format!("unit map `{}` does not land in {}", cat.morphism_name(eta), mo.text));
        }
        monoids.push(Monoid { object, mu, eta });
    }
    Ok(CategoryDecl { semimon: Arc::new(semimon), unit, monoids })
}

fn build_functor(raw: RawFunctor<'_>, categories: &[CategoryDecl], end: Loc) -> Result<FunctorDecl, ParseError> {
    let (s, t) = (&categories[raw.source].semimon, &categories[raw.target].semimon);
    let (c, d) = (s.category(), t.category());
    let (src, tgt) = (Names { cat: c }, Names { cat: d });
    let mut omap: Vec<Option<ObjId>> = vec![None; c.object_count()];
    for [x, y] in &raw.obj {
        let a = src.obj(x)?;
        if omap[a.0].is_some() {
            return err(x.loc, format!("duplicate definition of obj {}", x.text));
        }
        omap[a.0] = Some(tgt.obj(y)?);
    }
    let omap: Vec<ObjId> = c
        .objects()
        .map(|a| {
            omap[a.0].ok_or_else(|| ParseError {
                line: end.line,
                column: end.column,
                message: format!("missing row `obj {}` in functor {}", c.object_name(a), raw.name.text),
            })
        })
        .collect::<Result<_, _>>()?;
    let mut mmap: Vec<Option<MorId>> = vec![None; c.morphism_count()];
    for [f, g] in &raw.mor {
        let fm = src.mor(f)?;
        if mmap[fm.0].is_some() {
            return err(f.loc, format!("duplicate definition of mor {}", f.text));
        }
        mmap[fm.0] = Some(tgt.typed(g, omap[c.dom(fm).0], omap[c.cod(fm).0])?);
    }
    let mmap: Vec<MorId> = c
        .morphisms()
        .map(|f| match mmap[f.0] {
            Some(g) => Ok(g),
            None if c.is_identity(f) => Ok(d.id(omap[c.dom(f).0])),
            None => err(end, format!("missing row `mor {}` in functor {}", c.morphism_name(f), raw.name.text)),
        })
        .collect::<Result<_, _>>()?;
    let n = c.object_count();
    let mut phi2: Vec<Option<MorId>> = vec![None; n * n];
    for [x, y, h] in &raw.phi2 {
        let (a, b) = (src.obj(x)?, src.obj(y)?);
        if phi2[a.0 * n + b.0].is_some() {
            return err(x.loc, format!("duplicate definition of phi2 {} {}", x.text, y.text));
        }
        let dom = t.tensor_obj(omap[a.0], omap[b.0]);
        phi2[a.0 * n + b.0] = Some(tgt.typed(h, dom, omap[s.tensor_obj(a, b).0])?);
    }
    let phi2: Vec<MorId> = (0..n * n)
        .map(|k| {
            phi2[k].ok_or_else(|| ParseError {
                line: end.line,
                column: end.column,
                message: format!(
                    "missing row `phi2 {} {}` in functor {}",
                    c.object_name(ObjId(k / n)),
                    c.object_name(ObjId(k % n)),
                    raw.name.text
                ),
            })
        })
        .collect::<Result<_, _>>()?;
    let phi0 = raw.phi0.as_ref().map(|t| tgt.mor(t)).transpose()?;
    let functor = Functor::new(c.clone(), d.clone(), omap, mmap).expect("maps are in range");
    let functor = MultiplicativeFunctor::new(s.clone(), t.clone(), functor, phi2).expect("tables are in range");
    Ok(FunctorDecl { name: raw.name.text.to_string(), source: raw.source, target: raw.target, functor, phi0 })
}

enum Block<'a> {
    None,
    Category(RawCategory<'a>),
    Functor(RawFunctor<'a>),
}

pub fn parse(text: &str) -> Result<CatDocument, ParseError> {
    let mut categories: Vec<CategoryDecl> = Vec::new();
    let mut functors: Vec<FunctorDecl> = Vec::new();
    let mut block = Block::None;
    let mut last = Loc { line: 1, column: 1 };
    for (k, line) in text.lines().enumerate() {
        let number = k + 1;
        let toks = tokenize(line, number);
        let Some(head) = toks.first().copied() else { continue };
        let eol = Loc { line: number, column: line.split('#').next().unwrap_or("").trim_end().chars().count() + 1 };
        last = eol;
        if let Block::Functor(raw) = &mut block {
            match head.text {
                "obj" => raw.obj.push(arr(shape(&toks, &[Some("obj"), None, Some("="), None], "obj X = Y", eol)?)),
                "mor" => raw.mor.push(arr(shape(&toks, &[Some("mor"), None, Some("="), None], "mor f = g", eol)?)),
                "phi2" => {
                    raw.phi2.push(arr(shape(&toks, &[Some("phi2"), None, None, Some("="), None], "phi2 X Y = m", eol)?))
                }
                "phi0" => {
                    let [m] = arr(shape(&toks, &[Some("phi0"), Some("="), None], "phi0 = m", eol)?);
                    if raw.phi0.replace(m).is_some() {
                        return err(head.loc, format!("duplicate definition of phi0 in functor {}", raw.name.text));
                    }
                }
                "end" => {
                    shape(&toks, &[Some("end")], "end", eol)?;
                    let Block::Functor(raw) = std::mem::replace(&mut block, Block::None) else { unreachable!() };
                    if functors.iter().any(|f| f.name == raw.name.text) {
                        return err(raw.name.loc, format!("duplicate definition of functor `{}`", raw.name.text));
                    }
                    functors.push(build_functor(raw, &categories, head.loc)?);
                }
                other => return err(head.loc, format!("unexpected `{other}` inside a functor block")),
            }
            continue;
        }
        match head.text {
            "category" => {
                let [name] = arr(shape(&toks, &[Some("category"), None], "category NAME", eol)?);
                if let Block::Category(raw) = std::mem::replace(&mut block, Block::None) {
                    categories.push(build_category(raw)?);
                }
                if categories.iter().any(|c| c.name() == name.text) {
                    return err(name.loc, format!("duplicate definition of category `{}`", name.text));
                }
                block = Block::Category(RawCategory { header: Some(name), ..Default::default() });
            }
            "functor" => {
                let [name, s, t] = arr(shape(
                    &toks,
                    &[Some("functor"), None, Some(":"), None, Some("->"), None],
                    "functor NAME : C -> D",
                    eol,
                )?);
                if let Block::Category(raw) = std::mem::replace(&mut block, Block::None) {
                    categories.push(build_category(raw)?);
                }
                let find = |t: &Tok<'_>| match categories.iter().position(|c| c.name() == t.text) {
                    Some(k) => Ok(k),
                    None => err(t.loc, format!("unknown category `{}`", t.text)),
                };
                let (source, target) = (find(&s)?, find(&t)?);
                block = Block::Functor(RawFunctor {
                    name,
                    source,
                    target,
                    obj: Vec::new(),
                    mor: Vec::new(),
                    phi2: Vec::new(),
                    phi0: None,
                });
            }
            _ => {
                let Block::Category(raw) = &mut block else {
                    return err(head.loc, format!("unexpected `{}` outside a category block", head.text));
                };
                match head.text {
                    "objects" => {
                        if toks.len() < 2 {
                            return err(eol, "expected `objects NAME...`");
                        }
                        raw.objects.extend_from_slice(&toks[1..]);
                    }
                    "hom" => raw.homs.push(arr(shape(
                        &toks,
                        &[Some("hom"), None, Some(":"), None, Some("->"), None],
                        "hom f : a -> b",
                        eol,
                    )?)),
                    "compose" => raw.compose.push(arr(shape(
                        &toks,
                        &[Some("compose"), None, None, Some("="), None],
                        "compose g f = h",
                        eol,
                    )?)),
                    "tensor" => raw.tensor.push(arr(shape(
                        &toks,
                        &[Some("tensor"), None, None, Some("="), None],
                        "tensor a b = c",
                        eol,
                    )?)),
                    "tensorm" => raw.tensorm.push(arr(shape(
                        &toks,
                        &[Some("tensorm"), None, None, Some("="), None],
                        "tensorm f g = h",
                        eol,
                    )?)),
                    "unit" => {
                        let u = arr(shape(&toks, &[Some("unit"), None, Some("alpha"), None], "unit I alpha f", eol)?);
                        if raw.unit.replace(u).is_some() {
                            return err(head.loc, "duplicate definition of unit");
                        }
                    }
                    "monoid" => raw.monoids.push(arr(shape(
                        &toks,
                        &[Some("monoid"), None, None, None],
                        "monoid M mu eta",
                        eol,
                    )?)),
                    other => return err(head.loc, format!("unknown keyword `{other}`")),
                }
            }
        }
    }
    match block {
        Block::Category(raw) => categories.push(build_category(raw)?),
        Block::Functor(raw) => return err(last, format!("functor {} is missing `end`", raw.name.text)),
        Block::None => {}
    }
    if categories.is_empty() {
        return err(Loc { line: 1, column: 1 }, "no category");
    }
    Ok(CatDocument { categories, functors })
}

fn emit_category(out: &mut String, decl: &CategoryDecl) -> fmt::Result {
    let s = &decl.semimon;
    let c = s.category();
    let on = |a: ObjId| c.object_name(a);
    let mn = |f: MorId| c.morphism_name(f);
    writeln!(out, "category {}", c.name())?;
    let objects: Vec<&str> = c.objects().map(on).collect();
    writeln!(out, "objects {}", objects.join(" "))?;
    for f in c.morphisms().filter(|&f| !c.is_identity(f)) {
        writeln!(out, "hom {} : {} -> {}", mn(f), on(c.dom(f)), on(c.cod(f)))?;
    }
    for g in c.morphisms() {
        for f in c.morphisms() {
            let Some(h) = c.try_compose(g, f) else { continue };
            let derived = if c.is_identity(g) {
                Some(f)
            } else if c.is_identity(f) {
                Some(g)
            } else {
                None
            };
            if derived != Some(h) {
                writeln!(out, "compose {} {} = {}", mn(g), mn(f), mn(h))?;
            }
        }
    }
    for a in c.objects() {
        for b in c.objects() {
            writeln!(out, "tensor {} {} = {}", on(a), on(b), on(s.tensor_obj(a, b)))?;
        }
    }
    for f in c.morphisms() {
        for g in c.morphisms() {
            let h = s.tensor_mor(f, g);
            let derived = c.is_identity(f) && c.is_identity(g) && h == c.id(s.tensor_obj(c.dom(f), c.dom(g)));
            if !derived {
                writeln!(out, "tensorm {} {} = {}", mn(f), mn(g), mn(h))?;
            }
        }
    }
    if let Some(u) = decl.unit {
        writeln!(out, "unit {} alpha {}", on(u.object), mn(u.alpha))?;
    }
    for m in &decl.monoids {
        writeln!(out, "monoid {} {} {}", on(m.object), mn(m.mu), mn(m.eta))?;
    }
    Ok(())
}

fn emit_functor(out: &mut String, decl: &FunctorDecl) -> fmt::Result {
    let f = &decl.functor;
    let (c, d) = (f.source().category(), f.target().category());
    writeln!(out, "functor {} : {} -> {}", decl.name, c.name(), d.name())?;
    for a in c.objects() {
        writeln!(out, "obj {} = {}", c.object_name(a), d.object_name(f.obj(a)))?;
    }
    for g in c.morphisms() {
        if !c.is_identity(g) || f.mor(g) != d.id(f.obj(c.dom(g))) {
            writeln!(out, "mor {} = {}", c.morphism_name(g), d.morphism_name(f.mor(g)))?;
        }
    }
    for x in c.objects() {
        for y in c.objects() {
            writeln!(out, "phi2 {} {} = {}", c.object_name(x), c.object_name(y), d.morphism_name(f.phi2(x, y)))?;
        }
    }
    if let Some(p) = decl.phi0 {
        writeln!(out, "phi0 = {}", d.morphism_name(p))?;
    }
    writeln!(out, "end")
}

/// Canonical text of a document. Derivable rows are left out exactly when
/// their value is the derived one.
pub fn emit(doc: &CatDocument) -> String {
    let mut out = String::new();
    for (k, decl) in doc.categories.iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        emit_category(&mut out, decl).expect("writing to a string");
    }
    for decl in &doc.functors {
        out.push('\n');
        emit_functor(&mut out, decl).expect("writing to a string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z2EH: &str = "category z2eh\nobjects E\nhom s : E -> E\ncompose s s = id_E\ntensor E E = E\n\
                        tensorm id_E s = s\ntensorm s id_E = s\ntensorm s s = id_E\n";

    #[test]
    fn tokens_carry_columns() {
        let toks = tokenize("  hom  f : a -> b # note", 3);
        let cols: Vec<(&str, usize)> = toks.iter().map(|t| (t.text, t.loc.column)).collect();
        assert_eq!(cols, vec![("hom", 3), ("f", 8), (":", 10), ("a", 12), ("->", 14), ("b", 17)]);
        assert_eq!(toks[0].loc.line, 3);
    }

    #[test]
    fn z2eh_parses_to_the_fixture() {
        let doc = parse(Z2EH).unwrap();
        assert_eq!(doc.categories[0].semimon, unital_core::fixtures::z2eh());
        assert_eq!(emit(&doc), Z2EH);
    }

    #[test]
    fn empty_file_has_no_category() {
        let e = parse("# nothing here\n\n").unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (1, 1, "no category"));
    }

    #[test]
    fn missing_compose_row_names_the_pair() {
        let e = parse(&Z2EH.replace("compose s s = id_E\n", "")).unwrap_err();
        assert!(e.message.contains("compose s s"), "{e}");
        assert_eq!((e.line, e.column), (1, 10));
    }

    #[test]
    fn missing_tensor_rows() {
        let e = parse(&Z2EH.replace("tensor E E = E\n", "")).unwrap_err();
        assert!(e.message.contains("tensor E E"), "{e}");
        let e = parse(&Z2EH.replace("tensorm s s = id_E\n", "")).unwrap_err();
        assert!(e.message.contains("tensorm s s"), "{e}");
    }

    #[test]
    fn unresolved_identifier_is_located() {
        let e = parse(&Z2EH.replace("compose s s = id_E", "compose s t = id_E")).unwrap_err();
        assert_eq!((e.line, e.column), (4, 11));
        assert!(e.message.contains("unknown morphism `t`"));
    }

    #[test]
    fn duplicates_are_rejected() {
        let e = parse(&Z2EH.replace("objects E", "objects E E")).unwrap_err();
        assert_eq!((e.line, e.column), (2, 11));
        let e = parse(&format!("{Z2EH}compose s s = id_E\n")).unwrap_err();
        assert!(e.message.contains("duplicate"));
        let e = parse(&format!("{Z2EH}hom id_E : E -> E\n")).unwrap_err();
        assert!(e.message.contains("duplicate definition of morphism `id_E`"));
        let e = parse(&format!("{Z2EH}\n{Z2EH}")).unwrap_err();
        assert!(e.message.contains("duplicate definition of category"));
    }

    #[test]
    fn ill_typed_rows_are_rejected() {
        let src = "category p\nobjects 0 1\nhom w : 1 -> 0\ncompose w w = w\n";
        let e = parse(src).unwrap_err();
        assert!(e.message.contains("not composable"), "{e}");
        let src = "category p\nobjects 0 1\nhom w : 1 -> 0\ntensor 0 0 = 0\ntensor 0 1 = 0\ntensor 1 0 = 0\n\
                   tensor 1 1 = 1\ntensorm w w = id_0\ntensorm w id_0 = id_0\ntensorm id_0 w = id_0\n\
                   tensorm w id_1 = w\ntensorm id_1 w = w\nunit 1 alpha w\n";
        let e = parse(src).unwrap_err();
        assert_eq!(e.line, 8);
        assert!(e.message.contains("not in hom(1, 0)"), "{e}");
    }

    #[test]
    fn malformed_lines() {
        let e = parse("category\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 9));
        let e = parse("objects a\n").unwrap_err();
        assert!(e.message.contains("outside a category"));
        let e = parse(&format!("{Z2EH}hom f : E => E\n")).unwrap_err();
        assert_eq!((e.line, e.column), (9, 11));
        let e = parse(&format!("{Z2EH}frobnicate\n")).unwrap_err();
        assert!(e.message.contains("unknown keyword"));
    }

    #[test]
    fn functor_blocks() {
        let src = format!("{Z2EH}\nfunctor twist : z2eh -> z2eh\nobj E = E\nmor s = s\nphi2 E E = s\nphi0 = s\nend\n");
        let doc = parse(&src).unwrap();
        let f = &doc.functors[0];
        assert_eq!(f.functor.phi2(ObjId(0), ObjId(0)), MorId(1));
        assert_eq!(f.phi0, Some(MorId(1)));
        assert_eq!(emit(&doc), src);
        let e = parse(&format!("{Z2EH}\nfunctor twist : z2eh -> z2eh\nobj E = E\n")).unwrap_err();
        assert!(e.message.contains("missing `end`"));
        let e = parse(&format!("{Z2EH}\nfunctor twist : z2eh -> z2eh\nobj E = E\nmor s = s\nend\n")).unwrap_err();
        assert!(e.message.contains("phi2 E E"));
        let e = parse(&format!("{Z2EH}\nfunctor f : z2eh -> nope\nend\n")).unwrap_err();
        assert!(e.message.contains("unknown category `nope`"));
    }

    #[test]
    fn corrupted_identity_rows_survive_emission() {
        let src = Z2EH.replace("compose s s = id_E\n", "compose id_E s = id_E\ncompose s s = id_E\n");
        let doc = parse(&src).unwrap();
        assert!(!doc.categories[0].semimon.validate().is_valid());
        assert_eq!(emit(&doc), src);
    }
}
