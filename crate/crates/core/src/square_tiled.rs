//! The combinatorial square-tiled surface `S(n,m)`.
//!
//! Squares are labelled by the column span of the defining matrix and come
//! in two colors. The deck group acts by adding columns; the pillowcase
//! symmetries σ₂, σ₄ lift to explicit involutions.
//!
//! Edges carry a tag in {12, 23, 34, 14}. Edge `e` of the white square `c_w`
//! is glued to the black square `(c + δ_e)_b` with
//! `δ₃₄ = 0`, `δ₁₄ = col₄`, `δ₁₂ = col₁ + col₄`, `δ₂₃ = col₁`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::params::CurveParams;
use crate::rowspan::{defining_rows, row_span, summand_dimension};

/// A label `(c₁, c₂)` in `(Z/NZ)²`.
pub type Label = (u64, u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    fn index(self) -> usize {
        match self {
            Color::White => 0,
            Color::Black => 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Square {
    pub label: Label,
    pub color: Color,
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.color {
            Color::White => 'w',
            Color::Black => 'b',
        };
        write!(f, "({}, {})_{c}", self.label.0, self.label.1)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeTag {
    #[serde(rename = "12")]
    E12,
    #[serde(rename = "23")]
    E23,
    #[serde(rename = "34")]
    E34,
    #[serde(rename = "14")]
    E14,
}

/// Arithmetic in `(Z/NZ)²`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Plane(u64);

impl Plane {
    fn add(self, a: Label, b: Label) -> Label {
        ((a.0 + b.0) % self.0, (a.1 + b.1) % self.0)
    }

    fn neg(self, a: Label) -> Label {
        ((self.0 - a.0) % self.0, (self.0 - a.1) % self.0)
    }

    fn sub(self, a: Label, b: Label) -> Label {
        self.add(a, self.neg(b))
    }

    fn scale(self, k: u64, a: Label) -> Label {
        ((k * a.0) % self.0, (k * a.1) % self.0)
    }

    fn order(self, a: Label) -> u64 {
        let o = |x: u64| self.0 / x.gcd(&self.0);
        o(a.0).lcm(&o(a.1))
    }

    /// All multiples of `g`.
    fn cyclic(self, g: Label) -> HashSet<Label> {
        (0..self.order(g)).map(|k| self.scale(k, g)).collect()
    }
}

fn swap(c: Label) -> Label {
    (c.1, c.0)
}

/// Subgroup of `(Z/NZ)²` generated by `gens`, sorted.
fn plane_span(modulus: u64, gens: &[Label]) -> Vec<Label> {
    let plane = Plane(modulus);
    let mut seen: HashSet<Label> = HashSet::from([(0, 0)]);
    let mut stack = vec![(0, 0)];
    while let Some(v) = stack.pop() {
        for &g in gens {
            let w = plane.add(v, g);
            if seen.insert(w) {
                stack.push(w);
            }
        }
    }
    let mut out: Vec<Label> = seen.into_iter().collect();
    out.sort();
    out
}

/// The deck group: the subgroup of `(Z/NZ)²` spanned by the matrix columns.
#[derive(Clone, Debug)]
pub struct ColumnSpan {
    modulus: u64,
    columns: [Label; 4],
    elements: Vec<Label>,
}

impl ColumnSpan {
    pub fn new(params: &CurveParams) -> Self {
        let [r1, r2] = defining_rows(params).map(|r| r.entries());
        let columns = [0, 1, 2, 3].map(|j| (r1[j], r2[j]));
        let modulus = params.modulus();
        ColumnSpan {
            modulus,
            columns,
            elements: plane_span(modulus, &columns),
        }
    }

    /// The reduced generating set: `(−m,−m), (−n,n)` when n or m is odd,
    /// `(−2m,−2m), (−2n,2n), (−n−m, n−m)` when both are even.
    pub fn stated_generators(params: &CurveParams) -> Vec<Label> {
        let big = params.modulus() as i64;
        let (n, m) = (params.n() as i64, params.m() as i64);
        let r = |a: i64, b: i64| (a.rem_euclid(big) as u64, b.rem_euclid(big) as u64);
        if params.both_even() {
            vec![r(-2 * m, -2 * m), r(-2 * n, 2 * n), r(-n - m, n - m)]
        } else {
            vec![r(-m, -m), r(-n, n)]
        }
    }

    pub fn span_of(modulus: u64, gens: &[Label]) -> Vec<Label> {
        plane_span(modulus, gens)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `col_j` for `j = 1..=4`.
    pub fn column(&self, j: usize) -> Label {
        self.columns[j - 1]
    }

    pub fn columns(&self) -> [Label; 4] {
        self.columns
    }

    pub fn elements(&self) -> &[Label] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, c: Label) -> bool {
        self.elements.binary_search(&c).is_ok()
    }

    /// Additive order of an element.
    pub fn order_of(&self, c: Label) -> u64 {
        Plane(self.modulus).order(c)
    }
}

/// A total map on the squares of a surface, by square index.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SquareMap(Vec<usize>);

impl SquareMap {
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &SquareMap) -> SquareMap {
        SquareMap(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// First index where the maps differ.
    pub fn first_difference(&self, other: &SquareMap) -> Option<usize> {
        self.0.iter().zip(&other.0).position(|(a, b)| a != b)
    }
}

/// The square-tiled surface: column span, squares, and deck maps.
#[derive(Clone, Debug)]
pub struct CombSurface {
    params: CurveParams,
    span: ColumnSpan,
    index: HashMap<Label, usize>,
}

impl CombSurface {
    pub fn params(&self) -> &CurveParams {
        &self.params
    }

    pub fn column_span(&self) -> &ColumnSpan {
        &self.span
    }

    pub fn square_count(&self) -> usize {
        2 * self.span.len()
    }

    pub fn square(&self, i: usize) -> Square {
        let color = if i % 2 == 0 { Color::White } else { Color::Black };
        Square {
            label: self.span.elements[i / 2],
            color,
        }
    }

    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        (0..self.square_count()).map(|i| self.square(i))
    }

    /// Index of a square; panics when the label is outside the span.
    pub fn index_of(&self, s: Square) -> usize {
        2 * self.index[&s.label] + s.color.index()
    }

    pub fn try_index_of(&self, s: Square) -> Option<usize> {
        self.index.get(&s.label).map(|k| 2 * k + s.color.index())
    }

    fn plane(&self) -> Plane {
        Plane(self.span.modulus)
    }

    fn map_from(&self, f: impl Fn(Square) -> Square) -> SquareMap {
        SquareMap(self.squares().map(|s| self.index_of(f(s))).collect())
    }

    /// Translation by `c`, preserving color.
    pub fn translation(&self, c: Label) -> SquareMap {
        let plane = self.plane();
        self.map_from(|s| Square {
            label: plane.add(s.label, c),
            color: s.color,
        })
    }

    /// The deck map `T_j`, `j = 1..=4`.
    pub fn deck(&self, j: usize) -> SquareMap {
        self.translation(self.span.column(j))
    }

    /// Same label, other color.
    pub fn color_flip(&self) -> SquareMap {
        self.map_from(|s| Square {
            label: s.label,
            color: s.color.flip(),
        })
    }

    /// `(c + δ_e)_b` for the white square `c_w`.
    pub fn glued_black(&self, c: Label, edge: EdgeTag) -> Square {
        let plane = self.plane();
        let col = |j| self.span.column(j);
        let delta = match edge {
            EdgeTag::E34 => (0, 0),
            EdgeTag::E14 => col(4),
            EdgeTag::E12 => plane.add(col(1), col(4)),
            EdgeTag::E23 => col(1),
        };
        Square {
            label: plane.add(c, delta),
            color: Color::Black,
        }
    }
}

pub fn build_surface(params: &CurveParams) -> CombSurface {
    let span = ColumnSpan::new(params);
    let index = span
        .elements
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();
    CombSurface {
        params: *params,
        span,
        index,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum LiftKind {
    Sigma2,
    Sigma4 { variant: u8 },
}

/// A lift of σ₂ or σ₄ to the squares of `S(n,m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryLift {
    pub kind: LiftKind,
    pub map: SquareMap,
}

impl SymmetryLift {
    pub fn apply(&self, surface: &CombSurface, s: Square) -> Square {
        surface.square(self.map.apply(surface.index_of(s)))
    }

    /// `T_c ∘ self`, a lift of the same symmetry.
    pub fn then_translate(&self, surface: &CombSurface, c: Label) -> SymmetryLift {
        SymmetryLift {
            kind: self.kind,
            map: surface.translation(c).after(&self.map),
        }
    }
}

/// `(c₁, c₂)_{w/b} ↦ (c₂, c₁)_{b/w}`.
pub fn lift_sigma2(surface: &CombSurface) -> SymmetryLift {
    SymmetryLift {
        kind: LiftKind::Sigma2,
        map: surface.map_from(|s| Square {
            label: swap(s.label),
            color: s.color.flip(),
        }),
    }
}

/// Variant 1: `c_w ↦ (−swap c + col₄)_b`, `c_b ↦ (−swap c + col₃)_w`.
/// Variant 2: `c_w ↦ (−swap c + col₁)_b`, `c_b ↦ (−swap c + col₂)_w`,
/// available only when n and m are both even.
pub fn lift_sigma4(surface: &CombSurface, variant: u8) -> Result<SymmetryLift> {
    let p = surface.params;
    let (white_shift, black_shift) = match variant {
        1 => (4, 3),
        2 if p.both_even() => (1, 2),
        _ => return Err(Error::NoSecondLift { n: p.n(), m: p.m() }),
    };
    let plane = surface.plane();
    let col = |j| surface.span.column(j);
    Ok(SymmetryLift {
        kind: LiftKind::Sigma4 { variant },
        map: surface.map_from(|s| {
            let shift = match s.color {
                Color::White => col(white_shift),
                Color::Black => col(black_shift),
            };
            Square {
                label: plane.add(plane.neg(swap(s.label)), shift),
                color: s.color.flip(),
            }
        }),
    })
}

/// All σ̃₄ variants available for the surface.
pub fn sigma4_lifts(surface: &CombSurface) -> Vec<SymmetryLift> {
    let variants: &[u8] = if surface.params.both_even() { &[1, 2] } else { &[1] };
    variants
        .iter()
        .map(|&v| lift_sigma4(surface, v).expect("variant allowed"))
        .collect()
}

/// Outcome of an exhaustive check, with a failing square when it fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub holds: bool,
    pub witness: Option<Square>,
}

impl Certificate {
    fn pass() -> Self {
        Certificate {
            holds: true,
            witness: None,
        }
    }

    fn fail(witness: Square) -> Self {
        Certificate {
            holds: false,
            witness: Some(witness),
        }
    }

    fn compare(surface: &CombSurface, left: &SquareMap, right: &SquareMap) -> Self {
        match left.first_difference(right) {
            None => Certificate::pass(),
            Some(i) => Certificate::fail(surface.square(i)),
        }
    }

    fn and(self, other: Certificate) -> Certificate {
        if self.holds {
            other
        } else {
            self
        }
    }
}

pub fn involution_check(surface: &CombSurface, lift: &SymmetryLift) -> Certificate {
    let sq = lift.map.after(&lift.map);
    match (0..surface.square_count()).find(|&i| sq.apply(i) != i) {
        None => Certificate::pass(),
        Some(i) => Certificate::fail(surface.square(i)),
    }
}

pub fn commutation_check(surface: &CombSurface, a: &SymmetryLift, b: &SymmetryLift) -> Certificate {
    Certificate::compare(surface, &a.map.after(&b.map), &b.map.after(&a.map))
}

/// `lift ∘ T_c ∘ lift = T_{image(c)}` with `image = swap` for σ̃₂ and
/// `image = −swap` for σ̃₄, checked on the columns (`general = false`)
/// or on every deck element.
pub fn intertwining_check(surface: &CombSurface, lift: &SymmetryLift, general: bool) -> Certificate {
    let plane = surface.plane();
    let image = |c: Label| match lift.kind {
        LiftKind::Sigma2 => swap(c),
        LiftKind::Sigma4 { .. } => plane.neg(swap(c)),
    };
    let cols = surface.span.columns();
    let labels: Vec<Label> = if general {
        surface.span.elements.clone()
    } else {
        cols.to_vec()
    };
    labels
        .into_iter()
        .map(|c| {
            let conj = lift.map.after(&surface.translation(c)).after(&lift.map);
            Certificate::compare(surface, &conj, &surface.translation(image(c)))
        })
        .fold(Certificate::pass(), Certificate::and)
}

/// The column-level relations: `T₁ ↔ T₂`, `T₃ ↔ T₄` under σ̃₂ and
/// `T₁ ↔ T₄`, `T₂ ↔ T₃` under σ̃₄.
pub fn column_relation_check(surface: &CombSurface, lift: &SymmetryLift) -> Certificate {
    let partner: [usize; 4] = match lift.kind {
        LiftKind::Sigma2 => [2, 1, 4, 3],
        LiftKind::Sigma4 { .. } => [4, 3, 2, 1],
    };
    (1..=4)
        .map(|j| {
            let conj = lift.map.after(&surface.deck(j)).after(&lift.map);
            Certificate::compare(surface, &conj, &surface.deck(partner[j - 1]))
        })
        .fold(Certificate::pass(), Certificate::and)
}

/// Each square and its image lie on a common cylinder: the horizontal one
/// (period `col₁ + col₄`) for σ̃₂, the vertical one (period `col₁ + col₂`)
/// for σ̃₄.
pub fn cylinder_preservation_check(surface: &CombSurface, lift: &SymmetryLift) -> Certificate {
    let plane = surface.plane();
    let col = |j| surface.span.column(j);
    let (period, across): (Label, Box<dyn Fn(Square) -> Square>) = match lift.kind {
        LiftKind::Sigma2 => (
            plane.add(col(1), col(4)),
            Box::new(|s: Square| Square {
                label: s.label,
                color: s.color.flip(),
            }),
        ),
        LiftKind::Sigma4 { .. } => (
            plane.add(col(1), col(2)),
            Box::new(move |s: Square| Square {
                label: match s.color {
                    Color::White => plane.add(s.label, col(4)),
                    Color::Black => plane.sub(s.label, col(4)),
                },
                color: s.color.flip(),
            }),
        ),
    };
    let powers = plane.cyclic(period);
    for s in surface.squares() {
        let image = lift.apply(surface, s);
        let partner = across(s);
        let same_cylinder =
            image.color == partner.color && powers.contains(&plane.sub(image.label, partner.label));
        if !same_cylinder {
            return Certificate::fail(s);
        }
    }
    Certificate::pass()
}

/// A white square one of whose edges is fixed by the lift.
pub fn fixed_edge(surface: &CombSurface, lift: &SymmetryLift) -> Option<(Square, EdgeTag)> {
    let tags: [EdgeTag; 2] = match lift.kind {
        LiftKind::Sigma2 => [EdgeTag::E34, EdgeTag::E12],
        LiftKind::Sigma4 { .. } => [EdgeTag::E14, EdgeTag::E23],
    };
    surface
        .span
        .elements
        .iter()
        .flat_map(|&c| tags.iter().map(move |&t| (c, t)))
        .find(|&(c, t)| {
            let white = Square {
                label: c,
                color: Color::White,
            };
            lift.apply(surface, white) == surface.glued_black(c, t)
        })
        .map(|(c, t)| {
            (
                Square {
                    label: c,
                    color: Color::White,
                },
                t,
            )
        })
}

/// Number of deck-conjugacy classes of lift pairs `(σ̃₂', σ̃₄')` that are
/// involutions, fix an edge, and commute.
pub fn lift_class_count(surface: &CombSurface) -> usize {
    let s2 = lift_sigma2(surface);
    let s4 = lift_sigma4(surface, 1).expect("variant 1 always exists");
    let admissible = |base: &SymmetryLift| -> Vec<SymmetryLift> {
        surface
            .span
            .elements
            .iter()
            .map(|&c| base.then_translate(surface, c))
            .filter(|l| involution_check(surface, l).holds && fixed_edge(surface, l).is_some())
            .collect()
    };
    let twos = admissible(&s2);
    let fours = admissible(&s4);
    let pairs: Vec<(usize, usize)> = (0..twos.len())
        .flat_map(|i| (0..fours.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| commutation_check(surface, &twos[i], &fours[j]).holds)
        .collect();

    let locate = |list: &[SymmetryLift]| -> HashMap<SquareMap, usize> {
        list.iter().enumerate().map(|(i, l)| (l.map.clone(), i)).collect()
    };
    let (where2, where4) = (locate(&twos), locate(&fours));
    let plane = surface.plane();
    let conjugators: Vec<(SquareMap, SquareMap)> = surface
        .span
        .elements
        .iter()
        .map(|&d| (surface.translation(d), surface.translation(plane.neg(d))))
        .collect();

    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut classes = 0;
    for &pair in &pairs {
        if seen.contains(&pair) {
            continue;
        }
        classes += 1;
        for (t, t_inv) in &conjugators {
            let a = t.after(&twos[pair.0].map).after(t_inv);
            let b = t.after(&fours[pair.1].map).after(t_inv);
            let image = (where2[&a], where4[&b]);
            seen.insert(image);
        }
    }
    classes
}

/// Genus of `S(n,m)` by Riemann–Hurwitz with local monodromy `T_j` at the
/// four branch points: `2 − 2g = |G|(2 − Σ (1 − 1/e_j))`.
pub fn surface_genus(surface: &CombSurface) -> u64 {
    let g = surface.span.len() as i64;
    let euler: i64 = 2 * g
        - surface
            .span
            .columns
            .iter()
            .map(|&c| g - g / surface.span.order_of(c) as i64)
            .sum::<i64>();
    debug_assert!(euler % 2 == 0 && euler <= 2);
    (1 - euler / 2) as u64
}

/// `½ Σ dim H¹(r)` over nonzero row-span vectors, which equals `g(S)`.
pub fn genus_from_dimensions(params: &CurveParams) -> u64 {
    let total: u64 = row_span(params)
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| summand_dimension(r).expect("nonzero"))
        .sum();
    total / 2
}

/// Named results of every lemma check on one surface.
#[derive(Clone, Debug, Serialize)]
pub struct LiftChecks {
    pub lift: LiftKind,
    pub involution: Certificate,
    pub column_relations: Certificate,
    pub general_relations: Certificate,
    pub cylinders: Certificate,
    pub fixed_edge: Option<(Square, EdgeTag)>,
    pub commutes_with_sigma2: Certificate,
}

impl LiftChecks {
    pub fn all_hold(&self) -> bool {
        self.involution.holds
            && self.column_relations.holds
            && self.general_relations.holds
            && self.cylinders.holds
            && self.fixed_edge.is_some()
            && self.commutes_with_sigma2.holds
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurfaceReport {
    pub params: CurveParams,
    pub deck_group_order: usize,
    pub squares: usize,
    pub branch_orders: [u64; 4],
    pub genus: u64,
    pub genus_from_dimensions: u64,
    pub lifts: Vec<LiftChecks>,
    pub lift_classes: usize,
    pub expected_lift_classes: usize,
}

impl SurfaceReport {
    pub fn all_hold(&self) -> bool {
        self.genus == self.genus_from_dimensions
            && self.lift_classes == self.expected_lift_classes
            && self.lifts.iter().all(LiftChecks::all_hold)
    }
}

pub fn check_lift(surface: &CombSurface, lift: &SymmetryLift, sigma2: &SymmetryLift) -> LiftChecks {
    LiftChecks {
        lift: lift.kind,
        involution: involution_check(surface, lift),
        column_relations: column_relation_check(surface, lift),
        general_relations: intertwining_check(surface, lift, true),
        cylinders: cylinder_preservation_check(surface, lift),
        fixed_edge: fixed_edge(surface, lift),
        commutes_with_sigma2: commutation_check(surface, sigma2, lift),
    }
}

/// Builds the surface and runs every check on it.
pub fn surface_report(params: &CurveParams) -> SurfaceReport {
    let surface = build_surface(params);
    let s2 = lift_sigma2(&surface);
    let mut lifts = vec![check_lift(&surface, &s2, &s2)];
    lifts.extend(sigma4_lifts(&surface).iter().map(|l| check_lift(&surface, l, &s2)));
    let span = surface.column_span();
    SurfaceReport {
        params: *params,
        deck_group_order: span.len(),
        squares: surface.square_count(),
        branch_orders: span.columns().map(|c| span.order_of(c)),
        genus: surface_genus(&surface),
        genus_from_dimensions: genus_from_dimensions(params),
        lifts,
        lift_classes: lift_class_count(&surface),
        expected_lift_classes: if params.both_even() { 2 } else { 1 },
    }
}
