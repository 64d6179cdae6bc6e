//! Profunctors between finite categories and their coend calculus:
//! composition as a union-find quotient of tagged pairs, structural
//! isomorphisms, 2-cells with exhaustive naturality checking, adjunction
//! search, and representability.
//!
//! Orientation convention: a profunctor from `C` to `D` stores element sets
//! indexed `(c, d)`; `ract` acts contravariantly with `C`-morphisms (a
//! morphism `f: c' → c` pulls `(c, d)`-elements back to `(c', d)`) and
//! `lact` acts covariantly with `D`-morphisms. `compose(g, f)` requires
//! `cod(g) = dom(f)` and has element sets `∫^b g(x, b) × f(b, z)`, the
//! disjoint union of tagged pairs quotiented by the least equivalence
//! generated by single-morphism moves across the bridge.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::sync::Arc;

use crate::fincat::{hom_position, FiniteCategory, Functor, MorId, ObjId};
use crate::report::{StructuralError, ValidationReport};

/// A finite profunctor: element-set sizes per object pair plus total action
/// tables. Elements of `(c, d)` are `0..size(c, d)` with display names.
#[derive(Debug, Clone, PartialEq)]
pub struct Profunctor {
    pub dom: Arc<FiniteCategory>,
    pub cod: Arc<FiniteCategory>,
    sizes: Vec<usize>,
    names: Vec<Vec<String>>,
    /// `ract[f.0 * n_cod_obj + d.0]`: elements of `(dst f, d)` → `(src f, d)`.
    ract: Vec<Vec<u32>>,
    /// `lact[g.0 * n_dom_obj + c.0]`: elements of `(c, src g)` → `(c, dst g)`.
    lact: Vec<Vec<u32>>,
}

impl Profunctor {
    pub fn build(
        dom: &Arc<FiniteCategory>,
        cod: &Arc<FiniteCategory>,
        elems: impl Fn(ObjId, ObjId) -> Vec<String>,
        ract_fn: impl Fn(MorId, ObjId, u32) -> u32,
        lact_fn: impl Fn(MorId, ObjId, u32) -> u32,
    ) -> Profunctor {
        let (no_d, no_c) = (dom.n_objects(), cod.n_objects());
        let mut sizes = vec![0; no_d * no_c];
        let mut names = vec![Vec::new(); no_d * no_c];
        for c in dom.objects() {
            for d in cod.objects() {
                let e = elems(c, d);
                sizes[c.0 * no_c + d.0] = e.len();
                names[c.0 * no_c + d.0] = e;
            }
        }
        let mut ract = vec![Vec::new(); dom.n_morphisms() * no_c];
        for f in dom.morphisms() {
            for d in cod.objects() {
                let n = sizes[dom.dst(f).0 * no_c + d.0];
                ract[f.0 * no_c + d.0] = (0..n as u32).map(|e| ract_fn(f, d, e)).collect();
            }
        }
        let mut lact = vec![Vec::new(); cod.n_morphisms() * no_d];
        for g in cod.morphisms() {
            for c in dom.objects() {
                let n = sizes[c.0 * no_c + cod.src(g).0];
                lact[g.0 * no_d + c.0] = (0..n as u32).map(|e| lact_fn(g, c, e)).collect();
            }
        }
        Profunctor { dom: Arc::clone(dom), cod: Arc::clone(cod), sizes, names, ract, lact }
    }

    pub fn empty(dom: &Arc<FiniteCategory>, cod: &Arc<FiniteCategory>) -> Profunctor {
        Profunctor::build(dom, cod, |_, _| Vec::new(), |_, _, e| e, |_, _, e| e)
    }

    pub fn size(&self, c: ObjId, d: ObjId) -> usize {
        self.sizes[c.0 * self.cod.n_objects() + d.0]
    }

    pub fn total_elements(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn elem_name(&self, c: ObjId, d: ObjId, e: u32) -> &str {
        &self.names[c.0 * self.cod.n_objects() + d.0][e as usize]
    }

    /// Contravariant action: `f: c' → c` sends elements of `(c, d)` to `(c', d)`.
    pub fn ract(&self, f: MorId, d: ObjId, e: u32) -> u32 {
        self.ract[f.0 * self.cod.n_objects() + d.0][e as usize]
    }

    /// Covariant action: `g: d → d'` sends elements of `(c, d)` to `(c, d')`.
    pub fn lact(&self, g: MorId, c: ObjId, e: u32) -> u32 {
        self.lact[g.0 * self.dom.n_objects() + c.0][e as usize]
    }

    /// Functoriality of both actions and their commutation, exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        for law in ["ract-identity", "ract-compose", "lact-identity", "lact-compose", "actions-commute"] {
            report.mark_law(law);
        }
        let witness = |c: ObjId, d: ObjId, e: u32, extra: Vec<(String, String)>| {
            let mut w = vec![
                ("at".into(), format!("({},{})", self.dom.obj_name(c), self.cod.obj_name(d))),
                ("element".into(), self.elem_name(c, d, e).to_string()),
            ];
            w.extend(extra);
            w
        };
        for c in self.dom.objects() {
            for d in self.cod.objects() {
                for e in 0..self.size(c, d) as u32 {
                    if self.ract(self.dom.id_of(c), d, e) != e {
                        report.violate("ract-identity", witness(c, d, e, vec![]));
                    }
                    if self.lact(self.cod.id_of(d), c, e) != e {
                        report.violate("lact-identity", witness(c, d, e, vec![]));
                    }
                }
            }
        }
        // ract(f;g) = ract(f) ∘ ract(g) for f: c'' → c', g: c' → c.
        for f in self.dom.morphisms() {
            for g in self.dom.morphisms() {
                let Some(fg) = self.dom.then(f, g) else { continue };
                for d in self.cod.objects() {
                    for e in 0..self.size(self.dom.dst(g), d) as u32 {
                        if self.ract(fg, d, e) != self.ract(f, d, self.ract(g, d, e)) {
                            report.violate(
                                "ract-compose",
                                witness(self.dom.dst(g), d, e, vec![
                                    ("f".into(), self.dom.mor_name(f).into()),
                                    ("g".into(), self.dom.mor_name(g).into()),
                                ]),
                            );
                        }
                    }
                }
            }
        }
        for f in self.cod.morphisms() {
            for g in self.cod.morphisms() {
                let Some(fg) = self.cod.then(f, g) else { continue };
                for c in self.dom.objects() {
                    for e in 0..self.size(c, self.cod.src(f)) as u32 {
                        if self.lact(fg, c, e) != self.lact(g, c, self.lact(f, c, e)) {
                            report.violate(
                                "lact-compose",
                                witness(c, self.cod.src(f), e, vec![
                                    ("f".into(), self.cod.mor_name(f).into()),
                                    ("g".into(), self.cod.mor_name(g).into()),
                                ]),
                            );
                        }
                    }
                }
            }
        }
        for f in self.dom.morphisms() {
            for g in self.cod.morphisms() {
                let (c, c2) = (self.dom.dst(f), self.dom.src(f));
                let d = self.cod.src(g);
                for e in 0..self.size(c, d) as u32 {
                    let a = self.lact(g, c2, self.ract(f, d, e));
                    let b = self.ract(f, self.cod.dst(g), self.lact(g, c, e));
                    if a != b {
                        report.violate(
                            "actions-commute",
                            witness(c, d, e, vec![
                                ("f".into(), self.dom.mor_name(f).into()),
                                ("g".into(), self.cod.mor_name(g).into()),
                            ]),
                        );
                    }
                }
            }
        }
        report
    }
}

/// The hom profunctor `C(-, =)`: elements of `(c, d)` are the morphisms
/// `c → d`, acted on by pre- and post-composition.
pub fn hom_profunctor(c: &Arc<FiniteCategory>) -> Profunctor {
    let homs: Vec<Vec<MorId>> = c
        .objects()
        .flat_map(|a| c.objects().map(move |b| (a, b)))
        .map(|(a, b)| c.hom(a, b))
        .collect();
    let n = c.n_objects();
    let at = |a: ObjId, b: ObjId| &homs[a.0 * n + b.0];
    Profunctor::build(
        c,
        c,
        |a, b| at(a, b).iter().map(|&m| c.mor_name(m).to_string()).collect(),
        |f, d, e| {
            let m = at(c.dst(f), d)[e as usize];
            let fm = c.then(f, m).expect("composable by typing");
            hom_position(at(c.src(f), d), fm)
        },
        |g, a, e| {
            let m = at(a, c.src(g))[e as usize];
            let mg = c.then(m, g).expect("composable by typing");
            hom_position(at(a, c.dst(g)), mg)
        },
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Covariant,
    Contravariant,
}

/// Embeds a functor `F: C → D` as a profunctor.
///
/// Covariant: elements `(d, c) = D(d, F c)`, a profunctor `D ⇸ C`.
/// Contravariant: elements `(c, d) = D(F c, d)`, a profunctor `C ⇸ D`.
pub fn embed_functor(f: &Functor, variance: Variance) -> Profunctor {
    let (c, d) = (&f.source, &f.target);
    match variance {
        Variance::Covariant => Profunctor::build(
            d,
            c,
            |x, y| d.hom(x, f.on_obj(y)).iter().map(|&m| d.mor_name(m).to_string()).collect(),
            |g, y, e| {
                // g: x' → x precomposes.
                let m = d.hom(d.dst(g), f.on_obj(y))[e as usize];
                let gm = d.then(g, m).expect("composable");
                hom_position(&d.hom(d.src(g), f.on_obj(y)), gm)
            },
            |u, x, e| {
                // u: y → y' postcomposes through F.
                let m = d.hom(x, f.on_obj(c.src(u)))[e as usize];
                let mu = d.then(m, f.on_mor(u)).expect("composable");
                hom_position(&d.hom(x, f.on_obj(c.dst(u))), mu)
            },
        ),
        Variance::Contravariant => Profunctor::build(
            c,
            d,
            |x, y| d.hom(f.on_obj(x), y).iter().map(|&m| d.mor_name(m).to_string()).collect(),
            |u, y, e| {
                let m = d.hom(f.on_obj(c.dst(u)), y)[e as usize];
                let um = d.then(f.on_mor(u), m).expect("composable");
                hom_position(&d.hom(f.on_obj(c.src(u)), y), um)
            },
            |g, x, e| {
                let m = d.hom(f.on_obj(x), d.src(g))[e as usize];
                let mg = d.then(m, g).expect("composable");
                hom_position(&d.hom(f.on_obj(x), d.dst(g)), mg)
            },
        ),
    }
}

/// Hom of a common target conjugated by two functors: elements
/// `(a, b) = E(F a, G b)`. This is the normal form of composites of
/// embedded functors.
pub fn hom_twisted(f: &Functor, g: &Functor) -> Profunctor {
    assert_eq!(f.target, g.target, "hom_twisted needs a common target");
    let e = &f.target;
    Profunctor::build(
        &f.source,
        &g.source,
        |a, b| e.hom(f.on_obj(a), g.on_obj(b)).iter().map(|&m| e.mor_name(m).to_string()).collect(),
        |u, b, x| {
            let m = e.hom(f.on_obj(f.source.dst(u)), g.on_obj(b))[x as usize];
            let um = e.then(f.on_mor(u), m).expect("composable");
            hom_position(&e.hom(f.on_obj(f.source.src(u)), g.on_obj(b)), um)
        },
        |v, a, x| {
            let m = e.hom(f.on_obj(a), g.on_obj(g.source.src(v)))[x as usize];
            let mv = e.then(m, g.on_mor(v)).expect("composable");
            hom_position(&e.hom(f.on_obj(a), g.on_obj(g.source.dst(v))), mv)
        },
    )
}

/// Componentwise product of two profunctors over the product categories.
pub fn external_product(p: &Profunctor, q: &Profunctor) -> Profunctor {
    let (dom, didx) = crate::fincat::product_category(&p.dom, &q.dom);
    let (cod, cidx) = crate::fincat::product_category(&p.cod, &q.cod);
    let (dom, cod) = (Arc::new(dom), Arc::new(cod));
    Profunctor::build(
        &dom,
        &cod,
        |cc, dd| {
            let (c1, c2) = didx.unpair_obj(cc);
            let (d1, d2) = cidx.unpair_obj(dd);
            let mut v = Vec::with_capacity(p.size(c1, d1) * q.size(c2, d2));
            for e1 in 0..p.size(c1, d1) as u32 {
                for e2 in 0..q.size(c2, d2) as u32 {
                    v.push(format!("({},{})", p.elem_name(c1, d1, e1), q.elem_name(c2, d2, e2)));
                }
            }
            v
        },
        |ff, dd, e| {
            let (f1, f2) = didx.unpair_mor(ff);
            let (d1, d2) = cidx.unpair_obj(dd);
            let w2 = q.size(q.dom.dst(f2), d2) as u32;
            let (e1, e2) = (e / w2, e % w2);
            let w2new = q.size(q.dom.src(f2), d2) as u32;
            p.ract(f1, d1, e1) * w2new + q.ract(f2, d2, e2)
        },
        |gg, cc, e| {
            let (g1, g2) = cidx.unpair_mor(gg);
            let (c1, c2) = didx.unpair_obj(cc);
            let w2 = q.size(c2, q.cod.src(g2)) as u32;
            let (e1, e2) = (e / w2, e % w2);
            let w2new = q.size(c2, q.cod.dst(g2)) as u32;
            p.lact(g1, c1, e1) * w2new + q.lact(g2, c2, e2)
        },
    )
}

/// Reindex the contravariant side along a bijective functor `φ: C' → C`.
pub fn reindex_dom(p: &Profunctor, phi: &Functor) -> Profunctor {
    assert!(phi.is_bijective() && *phi.target == *p.dom);
    Profunctor::build(
        &phi.source,
        &p.cod,
        |c, d| (0..p.size(phi.on_obj(c), d) as u32).map(|e| p.elem_name(phi.on_obj(c), d, e).to_string()).collect(),
        |f, d, e| p.ract(phi.on_mor(f), d, e),
        |g, c, e| p.lact(g, phi.on_obj(c), e),
    )
}

/// Reindex the covariant side along a bijective functor `ψ: D' → D`.
pub fn reindex_cod(p: &Profunctor, psi: &Functor) -> Profunctor {
    assert!(psi.is_bijective() && *psi.target == *p.cod);
    Profunctor::build(
        &p.dom,
        &psi.source,
        |c, d| (0..p.size(c, psi.on_obj(d)) as u32).map(|e| p.elem_name(c, psi.on_obj(d), e).to_string()).collect(),
        |f, d, e| p.ract(f, psi.on_obj(d), e),
        |g, c, e| p.lact(psi.on_mor(g), c, e),
    )
}

/// One tagged-pair generator of a coend fiber: an element of the left
/// factor at `(bridge, z)` and one of the right factor at `(x, bridge)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoendGenerator {
    pub bridge: ObjId,
    pub left: u32,
    pub right: u32,
}

/// The union-find quotient of one fiber `∫^b g(b, z) × f(x, b)`.
#[derive(Debug, Clone)]
pub struct CoendFiber {
    pub generators: Vec<CoendGenerator>,
    /// generator index → class index (classes ordered by minimal generator).
    pub class_of: Vec<usize>,
    /// class index → minimal generator index (the canonical representative).
    pub reps: Vec<usize>,
    offsets: Vec<usize>,
    right_sizes: Vec<usize>,
}

impl CoendFiber {
    pub fn n_classes(&self) -> usize {
        self.reps.len()
    }

    pub fn generator_index(&self, g: CoendGenerator) -> usize {
        self.offsets[g.bridge.0] + g.left as usize * self.right_sizes[g.bridge.0] + g.right as usize
    }

    pub fn class_of_generator(&self, g: CoendGenerator) -> usize {
        self.class_of[self.generator_index(g)]
    }

    pub fn rep(&self, class: usize) -> CoendGenerator {
        self.generators[self.reps[class]]
    }
}

/// All fibers of one composite, indexed by `(x, z)`.
#[derive(Debug, Clone)]
pub struct CoendPresentation {
    n_cod: usize,
    pub fibers: Vec<CoendFiber>,
}

impl CoendPresentation {
    pub fn fiber(&self, x: ObjId, z: ObjId) -> &CoendFiber {
        &self.fibers[x.0 * self.n_cod + z.0]
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, i: usize, j: usize) {
        let (a, b) = (self.find(i), self.find(j));
        if a != b {
            // Root at the smaller index so representatives stay minimal.
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            self.parent[hi] = lo;
        }
    }
}

/// Coend composition `g ◇ f` for `g: X ⇸ B`, `f: B ⇸ Z` (so `cod g = dom f`):
/// the fiber at `(x, z)` is `∫^b g(x, b) × f(b, z)`, tagged pairs quotiented
/// by the least equivalence generated by single-morphism moves, and the
/// induced actions are verified well-defined on every representative.
pub fn compose_profunctors(g: &Profunctor, f: &Profunctor) -> Result<(Profunctor, CoendPresentation), StructuralError> {
    if *g.cod != *f.dom {
        return Err(StructuralError::NotComposable("cod of left operand differs from dom of right operand".into()));
    }
    let bridge = &g.cod;
    let (dom, cod) = (&g.dom, &f.cod);
    let mut fibers = Vec::with_capacity(dom.n_objects() * cod.n_objects());
    for x in dom.objects() {
        for z in cod.objects() {
            let mut generators = Vec::new();
            let mut offsets = Vec::with_capacity(bridge.n_objects());
            let mut right_sizes = Vec::with_capacity(bridge.n_objects());
            for b in bridge.objects() {
                offsets.push(generators.len());
                right_sizes.push(f.size(b, z));
                for l in 0..g.size(x, b) as u32 {
                    for r in 0..f.size(b, z) as u32 {
                        generators.push(CoendGenerator { bridge: b, left: l, right: r });
                    }
                }
            }
            let index = |b: ObjId, l: u32, r: u32, offsets: &[usize], right_sizes: &[usize]| {
                offsets[b.0] + l as usize * right_sizes[b.0] + r as usize
            };
            let mut uf = UnionFind::new(generators.len());
            // One move per (β: b → b', u ∈ g(x, b), v ∈ f(b', z)):
            // (b', u·β, v) ~ (b, u, β·v).
            for beta in bridge.morphisms() {
                let (b, b2) = (bridge.src(beta), bridge.dst(beta));
                for u in 0..g.size(x, b) as u32 {
                    let pushed = g.lact(beta, x, u);
                    for v in 0..f.size(b2, z) as u32 {
                        let pulled = f.ract(beta, z, v);
                        uf.union(
                            index(b2, pushed, v, &offsets, &right_sizes),
                            index(b, u, pulled, &offsets, &right_sizes),
                        );
                    }
                }
            }
            let mut class_of = vec![usize::MAX; generators.len()];
            let mut reps = Vec::new();
            for i in 0..generators.len() {
                let root = uf.find(i);
                if class_of[root] == usize::MAX {
                    class_of[root] = reps.len();
                    reps.push(i);
                }
                class_of[i] = class_of[root];
            }
            fibers.push(CoendFiber { generators, class_of, reps, offsets, right_sizes });
        }
    }
    let pres = CoendPresentation { n_cod: cod.n_objects(), fibers };

    let name_of = |x: ObjId, z: ObjId, class: usize| {
        let gen = pres.fiber(x, z).rep(class);
        let mut s = String::new();
        let _ = write!(
            s,
            "[{}|{},{}]",
            bridge.obj_name(gen.bridge),
            g.elem_name(x, gen.bridge, gen.left),
            f.elem_name(gen.bridge, z, gen.right)
        );
        s
    };
    let composite = Profunctor::build(
        dom,
        cod,
        |x, z| (0..pres.fiber(x, z).n_classes()).map(|k| name_of(x, z, k)).collect(),
        |a, z, k| {
            // a: x' → x acts on the left factor.
            let x = dom.dst(a);
            let gen = pres.fiber(x, z).rep(k as usize);
            let moved = CoendGenerator { bridge: gen.bridge, left: g.ract(a, gen.bridge, gen.left), right: gen.right };
            pres.fiber(dom.src(a), z).class_of_generator(moved) as u32
        },
        |c, x, k| {
            let z = cod.src(c);
            let gen = pres.fiber(x, z).rep(k as usize);
            let moved = CoendGenerator { bridge: gen.bridge, left: gen.left, right: f.lact(c, gen.bridge, gen.right) };
            pres.fiber(x, cod.dst(c)).class_of_generator(moved) as u32
        },
    );

    // Internal consistency: the induced action may not depend on the chosen
    // representative. A failure here is an implementation bug, not bad input.
    for x in dom.objects() {
        for z in cod.objects() {
            let fib = pres.fiber(x, z);
            for (i, gen) in fib.generators.iter().enumerate() {
                let k = fib.class_of[i];
                for a in dom.morphisms() {
                    if dom.dst(a) != x {
                        continue;
                    }
                    let via_gen = pres.fiber(dom.src(a), z).class_of_generator(CoendGenerator {
                        bridge: gen.bridge,
                        left: g.ract(a, gen.bridge, gen.left),
                        right: gen.right,
                    });
                    assert_eq!(
                        via_gen,
                        composite.ract(a, z, k as u32) as usize,
                        "coend action escaped its class (ract); this cannot happen for functorial operands"
                    );
                }
                for c in cod.morphisms() {
                    if cod.src(c) != z {
                        continue;
                    }
                    let via_gen = pres.fiber(x, cod.dst(c)).class_of_generator(CoendGenerator {
                        bridge: gen.bridge,
                        left: gen.left,
                        right: f.lact(c, gen.bridge, gen.right),
                    });
                    assert_eq!(
                        via_gen,
                        composite.lact(c, x, k as u32) as usize,
                        "coend action escaped its class (lact); this cannot happen for functorial operands"
                    );
                }
            }
        }
    }

    Ok((composite, pres))
}

/// A 2-cell: componentwise maps between the element sets of two parallel
/// profunctors.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoCell {
    pub source: Arc<Profunctor>,
    pub target: Arc<Profunctor>,
    /// `(c, d)` row-major over dom × cod objects.
    pub components: Vec<Vec<u32>>,
}

impl TwoCell {
    pub fn identity(p: &Arc<Profunctor>) -> TwoCell {
        let comps = p
            .dom
            .objects()
            .flat_map(|c| p.cod.objects().map(move |d| (c, d)))
            .map(|(c, d)| (0..p.size(c, d) as u32).collect())
            .collect();
        TwoCell { source: Arc::clone(p), target: Arc::clone(p), components: comps }
    }

    pub fn from_fn(
        source: &Arc<Profunctor>,
        target: &Arc<Profunctor>,
        f: impl Fn(ObjId, ObjId, u32) -> u32,
    ) -> TwoCell {
        let comps = source
            .dom
            .objects()
            .flat_map(|c| source.cod.objects().map(move |d| (c, d)))
            .map(|(c, d)| (0..source.size(c, d) as u32).map(|e| f(c, d, e)).collect())
            .collect();
        TwoCell { source: Arc::clone(source), target: Arc::clone(target), components: comps }
    }

    fn slot(&self, c: ObjId, d: ObjId) -> usize {
        c.0 * self.source.cod.n_objects() + d.0
    }

    pub fn apply(&self, c: ObjId, d: ObjId, e: u32) -> u32 {
        self.components[self.slot(c, d)][e as usize]
    }

    /// Vertical composite, `self` first.
    pub fn then(&self, other: &TwoCell) -> TwoCell {
        assert_eq!(*self.target, *other.source, "2-cells do not stack");
        TwoCell {
            source: Arc::clone(&self.source),
            target: Arc::clone(&other.target),
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(i, col)| col.iter().map(|&e| other.components[i][e as usize]).collect())
                .collect(),
        }
    }

    pub fn is_bijective(&self) -> bool {
        for c in self.source.dom.objects() {
            for d in self.source.cod.objects() {
                let n = self.target.size(c, d);
                if self.source.size(c, d) != n {
                    return false;
                }
                let mut seen = vec![false; n];
                for &e in &self.components[self.slot(c, d)] {
                    if seen[e as usize] {
                        return false;
                    }
                    seen[e as usize] = true;
                }
                if !seen.iter().all(|&b| b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn inverse(&self) -> Option<TwoCell> {
        if !self.is_bijective() {
            return None;
        }
        let comps = self
            .components
            .iter()
            .map(|col| {
                let mut inv = vec![0u32; col.len()];
                for (e, &v) in col.iter().enumerate() {
                    inv[v as usize] = e as u32;
                }
                inv
            })
            .collect();
        Some(TwoCell { source: Arc::clone(&self.target), target: Arc::clone(&self.source), components: comps })
    }
}

/// Exhaustive naturality check: the components must commute with `ract` at
/// every dom-morphism and with `lact` at every cod-morphism.
pub fn check_two_cell(t: &TwoCell) -> Result<ValidationReport, StructuralError> {
    let (s, q) = (&t.source, &t.target);
    if *s.dom != *q.dom || *s.cod != *q.cod {
        return Err(StructuralError::NotComposable("2-cell endpoints live over different categories".into()));
    }
    for c in s.dom.objects() {
        for d in s.cod.objects() {
            let col = &t.components[c.0 * s.cod.n_objects() + d.0];
            if col.len() != s.size(c, d) {
                return Err(StructuralError::TableSize {
                    table: format!("component at ({},{})", s.dom.obj_name(c), s.cod.obj_name(d)),
                    expected: s.size(c, d),
                    got: col.len(),
                });
            }
            if let Some(&bad) = col.iter().find(|&&e| e as usize >= q.size(c, d)) {
                return Err(StructuralError::DanglingId {
                    kind: "element",
                    id: bad as usize,
                    table: format!("component at ({},{})", s.dom.obj_name(c), s.cod.obj_name(d)),
                });
            }
        }
    }
    let mut report = ValidationReport::new();
    report.mark_law("naturality");
    for f in s.dom.morphisms() {
        let (c2, c) = (s.dom.src(f), s.dom.dst(f));
        for d in s.cod.objects() {
            for e in 0..s.size(c, d) as u32 {
                if t.apply(c2, d, s.ract(f, d, e)) != q.ract(f, d, t.apply(c, d, e)) {
                    report.violate(
                        "naturality",
                        vec![
                            ("morphism".into(), s.dom.mor_name(f).into()),
                            ("side".into(), "ract".into()),
                            ("element".into(), s.elem_name(c, d, e).into()),
                        ],
                    );
                }
            }
        }
    }
    for gmor in s.cod.morphisms() {
        let (d, d2) = (s.cod.src(gmor), s.cod.dst(gmor));
        for c in s.dom.objects() {
            for e in 0..s.size(c, d) as u32 {
                if t.apply(c, d2, s.lact(gmor, c, e)) != q.lact(gmor, c, t.apply(c, d, e)) {
                    report.violate(
                        "naturality",
                        vec![
                            ("morphism".into(), s.cod.mor_name(gmor).into()),
                            ("side".into(), "lact".into()),
                            ("element".into(), s.elem_name(c, d, e).into()),
                        ],
                    );
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StructuralIsoKind {
    Assoc,
    LeftUnit,
    RightUnit,
}

/// The invertible reassociation/unit 2-cells of coend composition.
///
/// `LeftUnit(p)`: `Hom ◇ p ⇒ p` by acting with the hom element.
/// `RightUnit(p)`: `p ◇ Hom ⇒ p`.
/// `Assoc(p, q, r)` for `r: A ⇸ B`, `q: B ⇸ C`, `p: C ⇸ D`:
/// `(p ◇ q) ◇ r ⇒ p ◇ (q ◇ r)` by re-tagging `((p, q), r) ↦ (p, (q, r))`.
/// Invertibility is verified componentwise on construction.
pub fn structural_iso(kind: StructuralIsoKind, operands: &[&Profunctor]) -> Result<TwoCell, StructuralError> {
    let cell = match kind {
        StructuralIsoKind::LeftUnit => {
            let [p] = operands else {
                return Err(StructuralError::NotComposable("left_unit takes one operand".into()));
            };
            let hom = Arc::new(hom_profunctor(&p.cod));
            let (comp, pres) = compose_profunctors(&hom, p)?;
            let comp = Arc::new(comp);
            let target = Arc::new((*p).clone());
            TwoCell::from_fn(&comp, &target, |x, z, k| {
                let gen = pres.fiber(x, z).rep(k as usize);
                let h = p.cod.hom(gen.bridge, z)[gen.left as usize];
                p.lact(h, x, gen.right)
            })
        }
        StructuralIsoKind::RightUnit => {
            let [p] = operands else {
                return Err(StructuralError::NotComposable("right_unit takes one operand".into()));
            };
            let hom = Arc::new(hom_profunctor(&p.dom));
            let (comp, pres) = compose_profunctors(p, &hom)?;
            let comp = Arc::new(comp);
            let target = Arc::new((*p).clone());
            TwoCell::from_fn(&comp, &target, |x, z, k| {
                let gen = pres.fiber(x, z).rep(k as usize);
                let h = p.dom.hom(x, gen.bridge)[gen.right as usize];
                p.ract(h, z, gen.left)
            })
        }
        StructuralIsoKind::Assoc => {
            let [p, q, r] = operands else {
                return Err(StructuralError::NotComposable("assoc takes three operands".into()));
            };
            let (pq, pq_pres) = compose_profunctors(p, q)?;
            let (left, left_pres) = compose_profunctors(&pq, r)?;
            let (qr, qr_pres) = compose_profunctors(q, r)?;
            let (right, right_pres) = compose_profunctors(p, &qr)?;
            let (left, right) = (Arc::new(left), Arc::new(right));
            let cell = TwoCell::from_fn(&left, &right, |a, dtop, k| {
                // ((p-elt at c, q-elt at b), r-elt) ↦ (p-elt, (q-elt, r-elt)).
                let outer = left_pres.fiber(a, dtop).rep(k as usize);
                let b = outer.bridge;
                let inner = pq_pres.fiber(b, dtop).rep(outer.left as usize);
                let c = inner.bridge;
                let qr_class = qr_pres.fiber(a, c).class_of_generator(CoendGenerator {
                    bridge: b,
                    left: inner.right,
                    right: outer.right,
                }) as u32;
                right_pres.fiber(a, dtop).class_of_generator(CoendGenerator {
                    bridge: c,
                    left: inner.left,
                    right: qr_class,
                }) as u32
            });
            // Re-tagging must be independent of the representative at both
            // nesting levels; check every generator pair to fail close to
            // the cause.
            for a in left.dom.objects() {
                for dtop in left.cod.objects() {
                    let fib = left_pres.fiber(a, dtop);
                    for (i, outer) in fib.generators.iter().enumerate() {
                        let b = outer.bridge;
                        let k = fib.class_of[i] as u32;
                        let via_rep = cell.apply(a, dtop, k);
                        let inner_fib = pq_pres.fiber(b, dtop);
                        for (j, inner) in inner_fib.generators.iter().enumerate() {
                            if inner_fib.class_of[j] != outer.left as usize {
                                continue;
                            }
                            let qr_class = qr_pres.fiber(a, inner.bridge).class_of_generator(CoendGenerator {
                                bridge: b,
                                left: inner.right,
                                right: outer.right,
                            }) as u32;
                            let via_gen = right_pres.fiber(a, dtop).class_of_generator(CoendGenerator {
                                bridge: inner.bridge,
                                left: inner.left,
                                right: qr_class,
                            }) as u32;
                            assert_eq!(via_rep, via_gen, "assoc re-tagging escaped its class");
                        }
                    }
                }
            }
            cell
        }
    };
    if !cell.is_bijective() {
        return Err(StructuralError::Unsupported("structural iso is not componentwise bijective".into()));
    }
    Ok(cell)
}

/// Enumerates every natural transformation `p ⇒ q` by backtracking over the
/// element graph with action-closure propagation. Deterministic order.
pub fn natural_transformations(p: &Arc<Profunctor>, q: &Arc<Profunctor>) -> Vec<TwoCell> {
    assert!(*p.dom == *q.dom && *p.cod == *q.cod);
    let n_cod = p.cod.n_objects();
    let slot = |c: ObjId, d: ObjId| c.0 * n_cod + d.0;
    let mut node_of = Vec::new(); // (c, d, e)
    let mut first_node = vec![0usize; p.dom.n_objects() * n_cod];
    for c in p.dom.objects() {
        for d in p.cod.objects() {
            first_node[slot(c, d)] = node_of.len();
            for e in 0..p.size(c, d) as u32 {
                node_of.push((c, d, e));
            }
        }
    }
    let total = node_of.len();

    // Pre-collect action edges per node: (other node, transported q-action).
    #[derive(Clone, Copy)]
    enum Edge {
        R(MorId),
        L(MorId),
    }
    let mut edges: Vec<Vec<(usize, Edge)>> = vec![Vec::new(); total];
    for (i, &(c, d, e)) in node_of.iter().enumerate() {
        for f in p.dom.morphisms() {
            if p.dom.dst(f) == c {
                let j = first_node[slot(p.dom.src(f), d)] + p.ract(f, d, e) as usize;
                edges[i].push((j, Edge::R(f)));
            }
        }
        for g in p.cod.morphisms() {
            if p.cod.src(g) == d {
                let j = first_node[slot(c, p.cod.dst(g))] + p.lact(g, c, e) as usize;
                edges[i].push((j, Edge::L(g)));
            }
        }
    }

    let mut results = Vec::new();
    let mut assignment: Vec<Option<u32>> = vec![None; total];

    fn propagate(
        start: usize,
        assignment: &mut Vec<Option<u32>>,
        node_of: &[(ObjId, ObjId, u32)],
        edges: &[Vec<(usize, Edge)>],
        q: &Profunctor,
        touched: &mut Vec<usize>,
    ) -> bool {
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let v = assignment[i].expect("queued nodes are assigned");
            let (c, d, _) = node_of[i];
            for (j, edge) in &edges[i] {
                let w = match edge {
                    Edge::R(f) => q.ract(*f, d, v),
                    Edge::L(g) => q.lact(*g, c, v),
                };
                match assignment[*j] {
                    None => {
                        assignment[*j] = Some(w);
                        touched.push(*j);
                        queue.push_back(*j);
                    }
                    Some(old) if old != w => return false,
                    Some(_) => {}
                }
            }
        }
        true
    }

    fn search(
        next: usize,
        assignment: &mut Vec<Option<u32>>,
        node_of: &[(ObjId, ObjId, u32)],
        edges: &[Vec<(usize, Edge)>],
        q: &Profunctor,
        results: &mut Vec<Vec<u32>>,
    ) {
        let Some(i) = (next..assignment.len()).find(|&i| assignment[i].is_none()) else {
            results.push(assignment.iter().map(|v| v.unwrap()).collect());
            return;
        };
        let (c, d, _) = node_of[i];
        for v in 0..q.size(c, d) as u32 {
            let mut touched = vec![i];
            assignment[i] = Some(v);
            if propagate(i, assignment, node_of, edges, q, &mut touched) {
                search(i + 1, assignment, node_of, edges, q, results);
            }
            for t in touched {
                assignment[t] = None;
            }
        }
    }

    let mut raw = Vec::new();
    search(0, &mut assignment, &node_of, &edges, q, &mut raw);

    results.extend(raw.into_iter().map(|flat| {
        let mut comps: Vec<Vec<u32>> = Vec::with_capacity(p.dom.n_objects() * n_cod);
        let mut it = flat.into_iter();
        for c in p.dom.objects() {
            for d in p.cod.objects() {
                comps.push((0..p.size(c, d)).map(|_| it.next().unwrap()).collect());
            }
        }
        TwoCell { source: Arc::clone(p), target: Arc::clone(q), components: comps }
    }));
    results
}

#[derive(Debug, Clone)]
pub struct AdjunctionWitness {
    pub left: Arc<Profunctor>,
    pub right: Arc<Profunctor>,
    pub unit: TwoCell,
    pub counit: TwoCell,
}

#[derive(Debug, Clone)]
pub enum AdjunctionOutcome {
    Witness(Box<AdjunctionWitness>),
    Failed(ValidationReport),
}

impl AdjunctionOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AdjunctionOutcome::Witness(_))
    }
}

pub enum AdjunctionMode {
    Verify(TwoCell, TwoCell),
    Search,
}

/// For `l: C ⇸ D`, `r: D ⇸ C`: an adjunction `l ⊣ r` is a unit
/// `Hom_D ⇒ l ◇ r` and counit `r ◇ l ⇒ Hom_C` satisfying both triangle
/// identities (checked after normalizing composites through the canonical
/// re-taggings). Search mode enumerates all natural candidates.
pub fn check_adjunction(
    l: &Arc<Profunctor>,
    r: &Arc<Profunctor>,
    mode: AdjunctionMode,
) -> Result<AdjunctionOutcome, StructuralError> {
    if *l.cod != *r.dom || *l.dom != *r.cod {
        return Err(StructuralError::NotComposable("adjunction operands are not antiparallel".into()));
    }
    let hom_c = Arc::new(hom_profunctor(&l.dom));
    let hom_d = Arc::new(hom_profunctor(&l.cod));
    let (lr, lr_pres) = compose_profunctors(l, r)?;
    let (rl, rl_pres) = compose_profunctors(r, l)?;
    let (lr, rl) = (Arc::new(lr), Arc::new(rl));

    let triangles = |unit: &TwoCell, counit: &TwoCell| -> ValidationReport {
        let mut report = ValidationReport::new();
        report.mark_law("triangle-left");
        report.mark_law("triangle-right");
        let id_elt = |cat: &FiniteCategory, d: ObjId| -> u32 { hom_position(&cat.hom(d, d), cat.id_of(d)) };
        // Left triangle: the composite on l is the identity.
        for c in l.dom.objects() {
            for d in l.cod.objects() {
                for le in 0..l.size(c, d) as u32 {
                    let u = unit.apply(d, d, id_elt(&l.cod, d));
                    let ug = lr_pres.fiber(d, d).rep(u as usize);
                    // ug = (bridge c2, l2 ∈ l(c2, d), r2 ∈ r(d, c2))
                    let rl_class = rl_pres.fiber(c, ug.bridge).class_of_generator(CoendGenerator {
                        bridge: d,
                        left: ug.right,
                        right: le,
                    });
                    let h_idx = counit.apply(c, ug.bridge, rl_class as u32);
                    let h = l.dom.hom(c, ug.bridge)[h_idx as usize];
                    let end = l.ract(h, d, ug.left);
                    if end != le {
                        report.violate(
                            "triangle-left",
                            vec![
                                ("at".into(), format!("({},{})", l.dom.obj_name(c), l.cod.obj_name(d))),
                                ("element".into(), l.elem_name(c, d, le).into()),
                            ],
                        );
                    }
                }
            }
        }
        // Right triangle: the composite on r is the identity.
        for d in r.dom.objects() {
            for c in r.cod.objects() {
                for re in 0..r.size(d, c) as u32 {
                    let u = unit.apply(d, d, id_elt(&l.cod, d));
                    let ug = lr_pres.fiber(d, d).rep(u as usize);
                    // ug = (bridge c3, l3 ∈ l(c3, d), r3 ∈ r(d, c3))
                    let rl_class = rl_pres.fiber(ug.bridge, c).class_of_generator(CoendGenerator {
                        bridge: d,
                        left: re,
                        right: ug.left,
                    });
                    let h_idx = counit.apply(ug.bridge, c, rl_class as u32);
                    let h = l.dom.hom(ug.bridge, c)[h_idx as usize];
                    let end = r.lact(h, d, ug.right);
                    if end != re {
                        report.violate(
                            "triangle-right",
                            vec![
                                ("at".into(), format!("({},{})", r.dom.obj_name(d), r.cod.obj_name(c))),
                                ("element".into(), r.elem_name(d, c, re).into()),
                            ],
                        );
                    }
                }
            }
        }
        report
    };

    match mode {
        AdjunctionMode::Verify(unit, counit) => {
            if *unit.source != *hom_d || *unit.target != *lr {
                return Err(StructuralError::IllTyped {
                    component: "unit".into(),
                    at: "endpoints".into(),
                    got: "other".into(),
                    expected: "Hom ⇒ L◇R".into(),
                });
            }
            if *counit.source != *rl || *counit.target != *hom_c {
                return Err(StructuralError::IllTyped {
                    component: "counit".into(),
                    at: "endpoints".into(),
                    got: "other".into(),
                    expected: "R◇L ⇒ Hom".into(),
                });
            }
            let mut report = ValidationReport::new();
            report.merge(check_two_cell(&unit)?);
            report.merge(check_two_cell(&counit)?);
            if report.passed() {
                report.merge(triangles(&unit, &counit));
            }
            if report.passed() {
                Ok(AdjunctionOutcome::Witness(Box::new(AdjunctionWitness {
                    left: Arc::clone(l),
                    right: Arc::clone(r),
                    unit,
                    counit,
                })))
            } else {
                Ok(AdjunctionOutcome::Failed(report))
            }
        }
        AdjunctionMode::Search => {
            let units = natural_transformations(&hom_d, &lr);
            let counits = natural_transformations(&rl, &hom_c);
            let mut last = ValidationReport::new();
            last.mark_law("triangle-left");
            last.mark_law("triangle-right");
            if units.is_empty() {
                last.violate("triangle-left", vec![("reason".into(), "no natural unit candidate exists".into())]);
                return Ok(AdjunctionOutcome::Failed(last));
            }
            if counits.is_empty() {
                last.violate("triangle-right", vec![("reason".into(), "no natural counit candidate exists".into())]);
                return Ok(AdjunctionOutcome::Failed(last));
            }
            for unit in &units {
                for counit in &counits {
                    let report = triangles(unit, counit);
                    if report.passed() {
                        return Ok(AdjunctionOutcome::Witness(Box::new(AdjunctionWitness {
                            left: Arc::clone(l),
                            right: Arc::clone(r),
                            unit: unit.clone(),
                            counit: counit.clone(),
                        })));
                    }
                    last = report;
                }
            }
            Ok(AdjunctionOutcome::Failed(last))
        }
    }
}

/// The canonical right-adjoint candidate of `p: C ⇸ D`: elements of
/// `(d, c)` are the families `φ_{d'}: p(c, d') → Hom_D(d, d')` natural in
/// `d'`. If `p` has any right adjoint it is isomorphic to this one, so
/// searching unit/counit against it decides right-adjoint existence.
pub fn right_adjoint_candidate(p: &Profunctor) -> Profunctor {
    let (c_cat, d_cat) = (&p.dom, &p.cod);
    let nc = c_cat.n_objects();

    // A family is stored as the concatenation over d' (in object order) of
    // hom-positions in Hom_D(d, d'), one per element of p(c, d').
    let block_base = |c: ObjId, dp: ObjId| -> usize {
        d_cat.objects().take_while(|x| x.0 < dp.0).map(|x| p.size(c, x)).sum()
    };

    // Enumerate the natural families at (d, c) by backtracking with
    // lact-closure propagation.
    let family_tables = |d: ObjId, c: ObjId| -> Vec<Vec<u32>> {
        let mut nodes = Vec::new();
        let mut first = vec![0usize; d_cat.n_objects()];
        for dp in d_cat.objects() {
            first[dp.0] = nodes.len();
            for e in 0..p.size(c, dp) as u32 {
                nodes.push((dp, e));
            }
        }
        let mut results: Vec<Vec<u32>> = Vec::new();
        let mut assignment: Vec<Option<MorId>> = vec![None; nodes.len()];
        fn go(
            from: usize,
            nodes: &[(ObjId, u32)],
            first: &[usize],
            assignment: &mut Vec<Option<MorId>>,
            p: &Profunctor,
            d_cat: &FiniteCategory,
            d: ObjId,
            c: ObjId,
            results: &mut Vec<Vec<u32>>,
        ) {
            let Some(i) = (from..nodes.len()).find(|&j| assignment[j].is_none()) else {
                let flat = nodes
                    .iter()
                    .enumerate()
                    .map(|(j, &(dp, _))| hom_position(&d_cat.hom(d, dp), assignment[j].unwrap()))
                    .collect();
                results.push(flat);
                return;
            };
            let (dp, _) = nodes[i];
            for m in d_cat.hom(d, dp) {
                let mut touched = vec![i];
                assignment[i] = Some(m);
                let mut ok = true;
                let mut queue = VecDeque::from([i]);
                while let Some(j) = queue.pop_front() {
                    let (dj, ej) = nodes[j];
                    let mj = assignment[j].unwrap();
                    for g in d_cat.morphisms() {
                        if d_cat.src(g) != dj {
                            continue;
                        }
                        let tgt = first[d_cat.dst(g).0] + p.lact(g, c, ej) as usize;
                        let want = d_cat.then(mj, g).expect("composable");
                        match assignment[tgt] {
                            None => {
                                assignment[tgt] = Some(want);
                                touched.push(tgt);
                                queue.push_back(tgt);
                            }
                            Some(have) if have != want => {
                                ok = false;
                                break;
                            }
                            Some(_) => {}
                        }
                    }
                    if !ok {
                        break;
                    }
                }
                if ok {
                    go(i + 1, nodes, first, assignment, p, d_cat, d, c, results);
                }
                for t in touched {
                    assignment[t] = None;
                }
            }
        }
        go(0, &nodes, &first, &mut assignment, p, d_cat, d, c, &mut results);
        results.sort();
        results.dedup();
        results
    };

    let mut families: Vec<Vec<Vec<u32>>> = Vec::new();
    for d in d_cat.objects() {
        for c in c_cat.objects() {
            families.push(family_tables(d, c));
        }
    }
    let fam = |d: ObjId, c: ObjId| -> &Vec<Vec<u32>> { &families[d.0 * nc + c.0] };
    let fam_index = |d: ObjId, c: ObjId, table: &Vec<u32>| -> u32 {
        fam(d, c)
            .iter()
            .position(|t| t == table)
            .expect("transported family stays natural") as u32
    };

    Profunctor::build(
        d_cat,
        c_cat,
        |d, c| (0..fam(d, c).len()).map(|i| format!("phi{i}")).collect(),
        |u, c, e| {
            // u: d0 → d acts by postcomposition with u on every image.
            let (d0, d) = (d_cat.src(u), d_cat.dst(u));
            let table = &fam(d, c)[e as usize];
            let mut new_table = Vec::with_capacity(table.len());
            let mut i = 0usize;
            for dp in d_cat.objects() {
                for _ in 0..p.size(c, dp) {
                    let m = d_cat.hom(d, dp)[table[i] as usize];
                    let um = d_cat.then(u, m).expect("composable");
                    new_table.push(hom_position(&d_cat.hom(d0, dp), um));
                    i += 1;
                }
            }
            fam_index(d0, c, &new_table)
        },
        |v, d, e| {
            // v: c → c' acts by precomposition with the contravariant
            // action of p.
            let (c, c2) = (c_cat.src(v), c_cat.dst(v));
            let table = &fam(d, c)[e as usize];
            let mut new_table = Vec::new();
            for dp in d_cat.objects() {
                let base = block_base(c, dp);
                for ep in 0..p.size(c2, dp) as u32 {
                    let pulled = p.ract(v, dp, ep);
                    new_table.push(table[base + pulled as usize]);
                }
            }
            fam_index(d, c2, &new_table)
        },
    )
}

#[derive(Debug, Clone)]
pub enum RepresentationOutcome {
    /// The functor, the universal elements per object, and the invertible
    /// comparison 2-cell `Hom_D(F-, =) ⇒ p`.
    Representable { functor: Functor, universal: Vec<u32>, iso: TwoCell },
    NotRepresentable { witness: ObjId, reason: String },
}

/// Searches, per object `c`, an object `F c` and element `u ∈ p(c, F c)`
/// whose pairing `g ↦ lact(g, u)` is a bijection `Hom(F c, d) → p(c, d)`
/// for every `d`; assembles functoriality or reports the obstruction.
pub fn find_representation(p: &Profunctor) -> Result<RepresentationOutcome, StructuralError> {
    let (c_cat, d_cat) = (&p.dom, &p.cod);
    let mut obj_map = Vec::with_capacity(c_cat.n_objects());
    let mut universal = Vec::with_capacity(c_cat.n_objects());
    for c in c_cat.objects() {
        let mut found = None;
        'candidates: for fc in d_cat.objects() {
            for u in 0..p.size(c, fc) as u32 {
                let bijective = d_cat.objects().all(|d| {
                    let hom = d_cat.hom(fc, d);
                    if hom.len() != p.size(c, d) {
                        return false;
                    }
                    let mut seen = vec![false; hom.len()];
                    for &g in &hom {
                        let img = p.lact(g, c, u) as usize;
                        if seen[img] {
                            return false;
                        }
                        seen[img] = true;
                    }
                    true
                });
                if bijective {
                    found = Some((fc, u));
                    break 'candidates;
                }
            }
        }
        match found {
            Some((fc, u)) => {
                obj_map.push(fc);
                universal.push(u);
            }
            None => {
                return Ok(RepresentationOutcome::NotRepresentable {
                    witness: c,
                    reason: format!(
                        "no universal element at {}: no hom-set pairs bijectively",
                        c_cat.obj_name(c)
                    ),
                });
            }
        }
    }
    // Morphism action: F v is the unique g with lact(g, u_c) = ract(v, u_{c'}).
    let mut mor_map = Vec::with_capacity(c_cat.n_morphisms());
    for v in c_cat.morphisms() {
        let (c, c2) = (c_cat.src(v), c_cat.dst(v));
        let target = p.ract(v, obj_map[c2.0], universal[c2.0]);
        let hom = d_cat.hom(obj_map[c.0], obj_map[c2.0]);
        let g = hom
            .iter()
            .copied()
            .find(|&g| p.lact(g, c, universal[c.0]) == target)
            .expect("pairing is bijective");
        mor_map.push(g);
    }
    let functor = Functor {
        source: Arc::clone(c_cat),
        target: Arc::clone(d_cat),
        obj_map,
        mor_map,
    };
    if !crate::fincat::validate_functor(&functor)?.passed() {
        let witness = c_cat.objects().next().unwrap_or(ObjId(0));
        return Ok(RepresentationOutcome::NotRepresentable {
            witness,
            reason: "universal elements exist but do not assemble into a functor".into(),
        });
    }
    let embedded = Arc::new(hom_twisted(&functor, &Functor::identity(d_cat)));
    let p_arc = Arc::new(p.clone());
    let iso = TwoCell::from_fn(&embedded, &p_arc, |c, d, e| {
        let g = d_cat.hom(functor.on_obj(c), d)[e as usize];
        p.lact(g, c, universal[c.0])
    });
    debug_assert!(iso.is_bijective());
    Ok(RepresentationOutcome::Representable { functor, universal, iso })
}
