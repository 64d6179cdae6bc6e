//! Finite categories with total composition tables, functors between them,
//! and the idempotent-splitting (Karoubi) completion.
//!
//! Composition is diagrammatic throughout: `then(f, g)` applies `f` first,
//! so it is defined when `dst(f) = src(g)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::report::{StructuralError, ValidationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
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

/// A finite category: dense object/morphism ids, total tables.
///
/// `compose[f * n_mor + g]` holds `then(f, g)` when `dst(f) = src(g)`,
/// `None` otherwise. Ids double as indices into the name tables, which are
/// what reports print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCategory {
    pub obj_names: Vec<String>,
    pub mor_names: Vec<String>,
    mor_src: Vec<ObjId>,
    mor_dst: Vec<ObjId>,
    identity: Vec<MorId>,
    compose: Vec<Option<MorId>>,
}

impl FiniteCategory {
    pub fn new(
        obj_names: Vec<String>,
        morphisms: Vec<(String, ObjId, ObjId)>,
        identity: Vec<MorId>,
        compose_entries: Vec<((MorId, MorId), MorId)>,
    ) -> Self {
        let n_mor = morphisms.len();
        let mut compose = vec![None; n_mor * n_mor];
        for ((f, g), h) in compose_entries {
            compose[f.0 * n_mor + g.0] = Some(h);
        }
        let mut mor_names = Vec::with_capacity(n_mor);
        let mut mor_src = Vec::with_capacity(n_mor);
        let mut mor_dst = Vec::with_capacity(n_mor);
        for (name, s, d) in morphisms {
            mor_names.push(name);
            mor_src.push(s);
            mor_dst.push(d);
        }
        FiniteCategory { obj_names, mor_names, mor_src, mor_dst, identity, compose }
    }

    pub fn n_objects(&self) -> usize {
        self.obj_names.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.mor_names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = ObjId> {
        (0..self.n_objects()).map(ObjId)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = MorId> {
        (0..self.n_morphisms()).map(MorId)
    }

    pub fn src(&self, f: MorId) -> ObjId {
        self.mor_src[f.0]
    }

    pub fn dst(&self, f: MorId) -> ObjId {
        self.mor_dst[f.0]
    }

    pub fn id_of(&self, a: ObjId) -> MorId {
        self.identity[a.0]
    }

    /// Diagrammatic composite: `f` first, then `g`.
    pub fn then(&self, f: MorId, g: MorId) -> Option<MorId> {
        self.compose[f.0 * self.n_morphisms() + g.0]
    }

    /// Composite of a nonempty chain, left to right.
    pub fn chain(&self, mors: &[MorId]) -> Option<MorId> {
        let mut acc = mors[0];
        for &m in &mors[1..] {
            acc = self.then(acc, m)?;
        }
        Some(acc)
    }

    pub fn hom(&self, a: ObjId, b: ObjId) -> Vec<MorId> {
        self.morphisms().filter(|&f| self.src(f) == a && self.dst(f) == b).collect()
    }

    pub fn obj_name(&self, a: ObjId) -> &str {
        &self.obj_names[a.0]
    }

    pub fn mor_name(&self, f: MorId) -> &str {
        &self.mor_names[f.0]
    }

    /// Two-sided inverse of `f`, if one exists.
    pub fn inverse(&self, f: MorId) -> Option<MorId> {
        let (a, b) = (self.src(f), self.dst(f));
        self.hom(b, a).into_iter().find(|&g| {
            self.then(f, g) == Some(self.id_of(a)) && self.then(g, f) == Some(self.id_of(b))
        })
    }

    fn check_ids(&self) -> Result<(), StructuralError> {
        let (no, nm) = (self.n_objects(), self.n_morphisms());
        for (i, &s) in self.mor_src.iter().enumerate() {
            if s.0 >= no {
                return Err(StructuralError::DanglingId { kind: "object", id: s.0, table: format!("src of {}", self.mor_names[i]) });
            }
        }
        for (i, &d) in self.mor_dst.iter().enumerate() {
            if d.0 >= no {
                return Err(StructuralError::DanglingId { kind: "object", id: d.0, table: format!("dst of {}", self.mor_names[i]) });
            }
        }
        if self.identity.len() != no {
            return Err(StructuralError::TableSize { table: "identity".into(), expected: no, got: self.identity.len() });
        }
        for (a, &i) in self.identity.iter().enumerate() {
            if i.0 >= nm {
                return Err(StructuralError::DanglingId { kind: "morphism", id: i.0, table: format!("identity of {}", self.obj_names[a]) });
            }
        }
        if self.compose.len() != nm * nm {
            return Err(StructuralError::TableSize { table: "compose".into(), expected: nm * nm, got: self.compose.len() });
        }
        for h in self.compose.iter().flatten() {
            if h.0 >= nm {
                return Err(StructuralError::DanglingId { kind: "morphism", id: h.0, table: "compose".into() });
            }
        }
        Ok(())
    }
}

/// Checks the category laws exhaustively: typing of the composition table,
/// identity laws, associativity over every composable triple.
pub fn validate_category(c: &FiniteCategory) -> Result<ValidationReport, StructuralError> {
    c.check_ids()?;
    let mut report = ValidationReport::new();
    for law in ["compose-defined", "compose-typed", "identity", "associativity"] {
        report.mark_law(law);
    }

    for a in c.objects() {
        let i = c.id_of(a);
        if c.src(i) != a || c.dst(i) != a {
            report.violate(
                "compose-typed",
                vec![("object".into(), c.obj_name(a).into()), ("identity".into(), c.mor_name(i).into())],
            );
        }
    }

    for f in c.morphisms() {
        for g in c.morphisms() {
            let composable = c.dst(f) == c.src(g);
            match c.then(f, g) {
                None if composable => report.violate(
                    "compose-defined",
                    vec![("f".into(), c.mor_name(f).into()), ("g".into(), c.mor_name(g).into())],
                ),
                Some(_) if !composable => report.violate(
                    "compose-defined",
                    vec![("f".into(), c.mor_name(f).into()), ("g".into(), c.mor_name(g).into())],
                ),
                Some(h) => {
                    if c.src(h) != c.src(f) || c.dst(h) != c.dst(g) {
                        report.violate(
                            "compose-typed",
                            vec![
                                ("f".into(), c.mor_name(f).into()),
                                ("g".into(), c.mor_name(g).into()),
                                ("f;g".into(), c.mor_name(h).into()),
                            ],
                        );
                    }
                }
                None => {}
            }
        }
    }
    if !report.passed() {
        // Identity/associativity would only re-report the same broken cells.
        return Ok(report);
    }

    for f in c.morphisms() {
        let (a, b) = (c.src(f), c.dst(f));
        if c.then(c.id_of(a), f) != Some(f) || c.then(f, c.id_of(b)) != Some(f) {
            report.violate("identity", vec![("f".into(), c.mor_name(f).into())]);
        }
    }

    for f in c.morphisms() {
        for g in c.morphisms() {
            if c.dst(f) != c.src(g) {
                continue;
            }
            for h in c.morphisms() {
                if c.dst(g) != c.src(h) {
                    continue;
                }
                let left = c.then(f, g).and_then(|fg| c.then(fg, h));
                let right = c.then(g, h).and_then(|gh| c.then(f, gh));
                if left != right || left.is_none() {
                    report.violate(
                        "associativity",
                        vec![
                            ("f".into(), c.mor_name(f).into()),
                            ("g".into(), c.mor_name(g).into()),
                            ("h".into(), c.mor_name(h).into()),
                        ],
                    );
                }
            }
        }
    }
    Ok(report)
}

/// Position of a morphism inside a hom-set listing (element index in the
/// hom profunctor's convention).
pub fn hom_position(hom: &[MorId], m: MorId) -> u32 {
    hom.iter().position(|&x| x == m).expect("morphism lies in this hom-set") as u32
}

/// A functor as total object/morphism maps between finite categories.
#[derive(Debug, Clone)]
pub struct Functor {
    pub source: Arc<FiniteCategory>,
    pub target: Arc<FiniteCategory>,
    pub obj_map: Vec<ObjId>,
    pub mor_map: Vec<MorId>,
}

impl Functor {
    pub fn identity(c: &Arc<FiniteCategory>) -> Functor {
        Functor {
            source: Arc::clone(c),
            target: Arc::clone(c),
            obj_map: c.objects().collect(),
            mor_map: c.morphisms().collect(),
        }
    }

    /// The constant functor onto `target_obj`.
    pub fn constant(source: &Arc<FiniteCategory>, target: &Arc<FiniteCategory>, target_obj: ObjId) -> Functor {
        Functor {
            source: Arc::clone(source),
            target: Arc::clone(target),
            obj_map: source.objects().map(|_| target_obj).collect(),
            mor_map: source.morphisms().map(|_| target.id_of(target_obj)).collect(),
        }
    }

    pub fn on_obj(&self, a: ObjId) -> ObjId {
        self.obj_map[a.0]
    }

    pub fn on_mor(&self, f: MorId) -> MorId {
        self.mor_map[f.0]
    }

    /// Composite functor, `self` first.
    pub fn then(&self, other: &Functor) -> Functor {
        Functor {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            obj_map: self.obj_map.iter().map(|&a| other.on_obj(a)).collect(),
            mor_map: self.mor_map.iter().map(|&f| other.on_mor(f)).collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen_o = vec![false; self.target.n_objects()];
        for &a in &self.obj_map {
            seen_o[a.0] = true;
        }
        let mut seen_m = vec![false; self.target.n_morphisms()];
        for &f in &self.mor_map {
            seen_m[f.0] = true;
        }
        self.obj_map.len() == self.target.n_objects()
            && self.mor_map.len() == self.target.n_morphisms()
            && seen_o.iter().all(|&b| b)
            && seen_m.iter().all(|&b| b)
    }
}

/// Checks the three preservation laws exhaustively.
pub fn validate_functor(f: &Functor) -> Result<ValidationReport, StructuralError> {
    let (s, t) = (&f.source, &f.target);
    if f.obj_map.len() != s.n_objects() {
        return Err(StructuralError::TableSize { table: "obj_map".into(), expected: s.n_objects(), got: f.obj_map.len() });
    }
    if f.mor_map.len() != s.n_morphisms() {
        return Err(StructuralError::TableSize { table: "mor_map".into(), expected: s.n_morphisms(), got: f.mor_map.len() });
    }
    for &a in &f.obj_map {
        if a.0 >= t.n_objects() {
            return Err(StructuralError::DanglingId { kind: "object", id: a.0, table: "obj_map".into() });
        }
    }
    for &m in &f.mor_map {
        if m.0 >= t.n_morphisms() {
            return Err(StructuralError::DanglingId { kind: "morphism", id: m.0, table: "mor_map".into() });
        }
    }

    let mut report = ValidationReport::new();
    for law in ["functor-src-dst", "functor-identity", "functor-compose"] {
        report.mark_law(law);
    }
    for m in s.morphisms() {
        let fm = f.on_mor(m);
        if t.src(fm) != f.on_obj(s.src(m)) || t.dst(fm) != f.on_obj(s.dst(m)) {
            report.violate("functor-src-dst", vec![("f".into(), s.mor_name(m).into())]);
        }
    }
    for a in s.objects() {
        if f.on_mor(s.id_of(a)) != t.id_of(f.on_obj(a)) {
            report.violate("functor-identity", vec![("object".into(), s.obj_name(a).into())]);
        }
    }
    for m in s.morphisms() {
        for n in s.morphisms() {
            if s.dst(m) != s.src(n) {
                continue;
            }
            let lhs = s.then(m, n).map(|mn| f.on_mor(mn));
            let rhs = t.then(f.on_mor(m), f.on_mor(n));
            if lhs != rhs || lhs.is_none() {
                report.violate(
                    "functor-compose",
                    vec![("f".into(), s.mor_name(m).into()), ("g".into(), s.mor_name(n).into())],
                );
            }
        }
    }
    Ok(report)
}

/// Same objects, arrows reversed, composition transposed.
pub fn op_category(c: &FiniteCategory) -> FiniteCategory {
    let n = c.n_morphisms();
    let mut compose = vec![None; n * n];
    for f in 0..n {
        for g in 0..n {
            compose[f * n + g] = c.compose[g * n + f];
        }
    }
    FiniteCategory {
        obj_names: c.obj_names.clone(),
        mor_names: c.mor_names.clone(),
        mor_src: c.mor_dst.clone(),
        mor_dst: c.mor_src.clone(),
        identity: c.identity.clone(),
        compose,
    }
}

/// Index bookkeeping for a binary product category: pairing is positional,
/// so `pair`/`unpair` are pure arithmetic.
#[derive(Debug, Clone, Copy)]
pub struct ProductIndex {
    pub n_obj_right: usize,
    pub n_mor_right: usize,
}

impl ProductIndex {
    pub fn pair_obj(&self, a: ObjId, b: ObjId) -> ObjId {
        ObjId(a.0 * self.n_obj_right + b.0)
    }

    pub fn unpair_obj(&self, p: ObjId) -> (ObjId, ObjId) {
        (ObjId(p.0 / self.n_obj_right), ObjId(p.0 % self.n_obj_right))
    }

    pub fn pair_mor(&self, f: MorId, g: MorId) -> MorId {
        MorId(f.0 * self.n_mor_right + g.0)
    }

    pub fn unpair_mor(&self, p: MorId) -> (MorId, MorId) {
        (MorId(p.0 / self.n_mor_right), MorId(p.0 % self.n_mor_right))
    }
}

/// Product category with componentwise composition.
pub fn product_category(c: &FiniteCategory, d: &FiniteCategory) -> (FiniteCategory, ProductIndex) {
    let idx = ProductIndex { n_obj_right: d.n_objects(), n_mor_right: d.n_morphisms() };
    let mut obj_names = Vec::with_capacity(c.n_objects() * d.n_objects());
    for a in c.objects() {
        for b in d.objects() {
            obj_names.push(format!("({},{})", c.obj_name(a), d.obj_name(b)));
        }
    }
    let mut morphisms = Vec::with_capacity(c.n_morphisms() * d.n_morphisms());
    for f in c.morphisms() {
        for g in d.morphisms() {
            morphisms.push((
                format!("({},{})", c.mor_name(f), d.mor_name(g)),
                idx.pair_obj(c.src(f), d.src(g)),
                idx.pair_obj(c.dst(f), d.dst(g)),
            ));
        }
    }
    let identity = (0..c.n_objects() * d.n_objects())
        .map(|o| {
            let (a, b) = idx.unpair_obj(ObjId(o));
            idx.pair_mor(c.id_of(a), d.id_of(b))
        })
        .collect();
    let n = morphisms.len();
    let mut compose = vec![None; n * n];
    for f1 in c.morphisms() {
        for g1 in d.morphisms() {
            for f2 in c.morphisms() {
                for g2 in d.morphisms() {
                    if let (Some(fc), Some(gc)) = (c.then(f1, f2), d.then(g1, g2)) {
                        let p = idx.pair_mor(f1, g1);
                        let q = idx.pair_mor(f2, g2);
                        compose[p.0 * n + q.0] = Some(idx.pair_mor(fc, gc));
                    }
                }
            }
        }
    }
    let cat = FiniteCategory {
        obj_names,
        mor_names: morphisms.iter().map(|(n, _, _)| n.clone()).collect(),
        mor_src: morphisms.iter().map(|&(_, s, _)| s).collect(),
        mor_dst: morphisms.iter().map(|&(_, _, d)| d).collect(),
        identity,
        compose,
    };
    (cat, idx)
}

/// The category with one object and one morphism.
pub fn terminal_category() -> FiniteCategory {
    FiniteCategory::new(
        vec!["*".into()],
        vec![("id_*".into(), ObjId(0), ObjId(0))],
        vec![MorId(0)],
        vec![((MorId(0), MorId(0)), MorId(0))],
    )
}

/// An endomorphism equal to its own square.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Idempotent {
    pub carrier: ObjId,
    pub morphism: MorId,
}

pub fn idempotents(c: &FiniteCategory) -> Vec<Idempotent> {
    c.morphisms()
        .filter(|&e| c.src(e) == c.dst(e) && c.then(e, e) == Some(e))
        .map(|e| Idempotent { carrier: c.src(e), morphism: e })
        .collect()
}

/// The Karoubi envelope together with its full embedding.
///
/// Objects are all idempotents of the base (keyed by `(carrier, morphism)`,
/// not deduplicated up to isomorphism); `Hom(p, q) = { f | p;f;q = f }` with
/// composition inherited and `identity(p) = p.morphism`. Morphisms of the
/// envelope keep a handle on their underlying base morphism.
#[derive(Debug, Clone)]
pub struct KaroubiEnvelope {
    pub category: Arc<FiniteCategory>,
    pub embedding: Functor,
    pub objects: Vec<Idempotent>,
    /// Envelope morphism -> (source object index, target object index, base morphism).
    pub mor_data: Vec<(usize, usize, MorId)>,
}

pub fn karoubi_envelope(c: &Arc<FiniteCategory>) -> KaroubiEnvelope {
    let objs = idempotents(c);
    let mut mor_data = Vec::new();
    let mut mor_names = Vec::new();
    let mut lookup: BTreeMap<(usize, usize, MorId), MorId> = BTreeMap::new();
    for (pi, p) in objs.iter().enumerate() {
        for (qi, q) in objs.iter().enumerate() {
            for f in c.hom(p.carrier, q.carrier) {
                let pfq = c.chain(&[p.morphism, f, q.morphism]);
                if pfq == Some(f) {
                    lookup.insert((pi, qi, f), MorId(mor_data.len()));
                    mor_names.push(format!("{}[{}→{}]", c.mor_name(f), pi, qi));
                    mor_data.push((pi, qi, f));
                }
            }
        }
    }
    let n = mor_data.len();
    let mut compose = vec![None; n * n];
    for (i, &(pi, qi, f)) in mor_data.iter().enumerate() {
        for (j, &(qj, rj, g)) in mor_data.iter().enumerate() {
            if qi == qj {
                let h = c.then(f, g).expect("hom endpoints matched");
                compose[i * n + j] = Some(lookup[&(pi, rj, h)]);
            }
        }
    }
    let identity = objs
        .iter()
        .enumerate()
        .map(|(pi, p)| lookup[&(pi, pi, p.morphism)])
        .collect();
    let category = Arc::new(FiniteCategory {
        obj_names: objs
            .iter()
            .map(|p| format!("({},{})", c.obj_name(p.carrier), c.mor_name(p.morphism)))
            .collect(),
        mor_names,
        mor_src: mor_data.iter().map(|&(pi, _, _)| ObjId(pi)).collect(),
        mor_dst: mor_data.iter().map(|&(_, qi, _)| ObjId(qi)).collect(),
        identity,
        compose,
    });
    // a ↦ id_a is one of the idempotents, so the embedding is full on ids.
    let obj_map: Vec<ObjId> = c
        .objects()
        .map(|a| {
            let target = Idempotent { carrier: a, morphism: c.id_of(a) };
            ObjId(objs.iter().position(|p| *p == target).expect("identity idempotent present"))
        })
        .collect();
    let mor_map = c
        .morphisms()
        .map(|f| lookup[&(obj_map[c.src(f).0].0, obj_map[c.dst(f).0].0, f)])
        .collect();
    let embedding = Functor { source: Arc::clone(c), target: Arc::clone(&category), obj_map, mor_map };
    KaroubiEnvelope { category, embedding, objects: objs, mor_data }
}

/// Passed iff every idempotent splits: `e = r;s` with `s;r = id` for some
/// pair through some object. Violations carry the non-split idempotent.
pub fn cauchy_report(c: &FiniteCategory) -> ValidationReport {
    let mut report = ValidationReport::new();
    report.mark_law("idempotent-splits");
    for e in idempotents(c) {
        let a = e.carrier;
        let mut split = false;
        'search: for b in c.objects() {
            for r in c.hom(a, b) {
                for s in c.hom(b, a) {
                    if c.then(r, s) == Some(e.morphism) && c.then(s, r) == Some(c.id_of(b)) {
                        split = true;
                        break 'search;
                    }
                }
            }
        }
        if !split {
            report.violate(
                "idempotent-splits",
                vec![("idempotent".into(), c.mor_name(e.morphism).into()), ("carrier".into(), c.obj_name(a).into())],
            );
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stock::*;

    #[test]
    fn terminal_category_is_valid() {
        let c = terminal_category();
        assert!(validate_category(&c).unwrap().passed());
    }

    #[test]
    fn one_object_idempotent_monoid_is_valid() {
        let c = one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]);
        assert!(validate_category(&c).unwrap().passed());
    }

    #[test]
    fn z2_group_is_valid() {
        let c = one_object_monoid(&["1", "e"], &[[0, 1], [1, 0]]);
        assert!(validate_category(&c).unwrap().passed());
    }

    #[test]
    fn broken_table_is_reported_as_law_violation() {
        let c = one_object_monoid(&["1", "e"], &[[0, 1], [1, 0]]);
        let mut bad = c.clone();
        // 1;e = 1 breaks the left identity law.
        bad.compose[1] = Some(MorId(0));
        let report = validate_category(&bad).unwrap();
        assert!(!report.passed());
        assert!(report.first("identity").is_some() || report.first("associativity").is_some());
    }

    #[test]
    fn identity_functor_and_constant_functor_validate() {
        let c = Arc::new(walking_arrow());
        assert!(validate_functor(&Functor::identity(&c)).unwrap().passed());
        let t = Arc::new(terminal_category());
        assert!(validate_functor(&Functor::constant(&c, &t, ObjId(0))).unwrap().passed());
    }

    #[test]
    fn collapsing_endofunctor_on_idempotent_monoid_validates() {
        // e ↦ 1 in {1,e}: e;e = e maps to 1;1 = 1.
        let c = Arc::new(one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]));
        let f = Functor {
            source: Arc::clone(&c),
            target: Arc::clone(&c),
            obj_map: vec![ObjId(0)],
            mor_map: vec![MorId(0), MorId(0)],
        };
        assert!(validate_functor(&f).unwrap().passed());
    }

    #[test]
    fn op_swaps_and_involutes() {
        let c = walking_arrow();
        let o = op_category(&c);
        assert!(validate_category(&o).unwrap().passed());
        let u = MorId(2); // the non-identity arrow
        assert_eq!(o.src(u), c.dst(u));
        assert_eq!(o.dst(u), c.src(u));
        assert_eq!(op_category(&o), c);
    }

    #[test]
    fn product_counts_morphisms() {
        let two = walking_arrow();
        let (p, _) = product_category(&two, &two);
        assert_eq!(p.n_objects(), 4);
        assert_eq!(p.n_morphisms(), 9);
        assert!(validate_category(&p).unwrap().passed());
    }

    #[test]
    fn product_with_terminal_is_base() {
        let c = walking_arrow();
        let t = terminal_category();
        let (p, idx) = product_category(&t, &c);
        assert_eq!(p.n_objects(), c.n_objects());
        assert_eq!(p.n_morphisms(), c.n_morphisms());
        for f in c.morphisms() {
            let pf = idx.pair_mor(MorId(0), f);
            assert_eq!(p.then(pf, pf).is_some(), c.then(f, f).is_some());
        }
    }

    #[test]
    fn karoubi_of_idempotent_monoid() {
        let c = Arc::new(one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]));
        let k = karoubi_envelope(&c);
        assert_eq!(k.category.n_objects(), 2);
        assert_eq!(k.category.n_morphisms(), 5);
        assert!(validate_category(&k.category).unwrap().passed());
        assert!(validate_functor(&k.embedding).unwrap().passed());
        // Hom sizes: (1,1)=2, (1,e)=1, (e,1)=1, (e,e)=1.
        let sizes: Vec<usize> = (0..2)
            .flat_map(|p| (0..2).map(move |q| (p, q)))
            .map(|(p, q)| k.category.hom(ObjId(p), ObjId(q)).len())
            .collect();
        assert_eq!(sizes, vec![2, 1, 1, 1]);
    }

    #[test]
    fn karoubi_of_group_is_the_group() {
        let c = Arc::new(one_object_monoid(&["1", "e"], &[[0, 1], [1, 0]]));
        let k = karoubi_envelope(&c);
        assert_eq!(k.category.n_objects(), 1);
        assert_eq!(k.category.n_morphisms(), 2);
    }

    #[test]
    fn cauchy_fails_then_passes_after_completion() {
        let c = Arc::new(one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]));
        let before = cauchy_report(&c);
        assert!(!before.passed());
        assert_eq!(before.first("idempotent-splits").unwrap().witness[0].1, "e");
        let k = karoubi_envelope(&c);
        assert!(cauchy_report(&k.category).passed());
        // Idempotents in the envelope split again.
        let kk = karoubi_envelope(&k.category);
        assert!(cauchy_report(&kk.category).passed());
        assert!(validate_functor(&karoubi_envelope(&k.category).embedding).unwrap().passed());
    }

    #[test]
    fn discrete_categories_are_cauchy_complete() {
        let c = discrete(4);
        assert!(cauchy_report(&c).passed());
    }

    #[test]
    fn embedding_is_full_and_faithful() {
        let c = Arc::new(one_object_monoid(&["1", "e"], &[[0, 1], [1, 1]]));
        let k = karoubi_envelope(&c);
        for a in c.objects() {
            for b in c.objects() {
                let image_hom = k
                    .category
                    .hom(k.embedding.on_obj(a), k.embedding.on_obj(b));
                assert_eq!(c.hom(a, b).len(), image_hom.len());
            }
        }
    }
}
