//! Inner 2-minors, monomial maps, kernel membership and the
//! degree-bounded toric equality oracle.
//!
//! All ideals in scope are generated by pure-difference binomials, and
//! S-polynomials and reductions of pure differences stay pure differences,
//! so the whole engine works with unit coefficients and no field
//! arithmetic.

mod groebner;

pub use groebner::{buchberger, normal_form};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::{CellCollection, Orientation, Point};
use crate::io::cas_variable_name;

/// A polynomial variable: one per vertex of the collection on the domain
/// side, one per maximal vertical/horizontal edge interval plus the hole
/// variable `w` on the image side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VariableId {
    Vertex(Point),
    VSide(u32),
    HSide(u32),
    Hole,
}

impl fmt::Display for VariableId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VariableId::Vertex(p) => write!(f, "{}", cas_variable_name(*p)),
            VariableId::VSide(i) => write!(f, "v{i}"),
            VariableId::HSide(j) => write!(f, "h{j}"),
            VariableId::Hole => write!(f, "w"),
        }
    }
}

/// A monomial as a sparse exponent map. Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial {
    exponents: BTreeMap<VariableId, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VariableId) -> Self {
        Monomial::from_pairs([(v, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (VariableId, u32)>>(pairs: I) -> Self {
        let mut exponents = BTreeMap::new();
        for (v, e) in pairs {
            if e > 0 {
                *exponents.entry(v).or_insert(0) += e;
            }
        }
        Monomial { exponents }
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.exponents.values().sum()
    }

    pub fn exponent(&self, v: VariableId) -> u32 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    pub fn variables(&self) -> impl Iterator<Item = (VariableId, u32)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            *exponents.entry(v).or_insert(0) += e;
        }
        Monomial { exponents }
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .map(|(&v, &e)| (v, e * k))
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, &e)| other.exponent(*v) >= e)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut exponents = BTreeMap::new();
        for (&v, &e) in &other.exponents {
            let r = e - self.exponent(v);
            if r > 0 {
                exponents.insert(v, r);
            }
        }
        Monomial { exponents }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut exponents = self.exponents.clone();
        for (&v, &e) in &other.exponents {
            let entry = exponents.entry(v).or_insert(0);
            *entry = (*entry).max(e);
        }
        Monomial { exponents }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut exponents = BTreeMap::new();
        for (&v, &e) in &self.exponents {
            let g = e.min(other.exponent(v));
            if g > 0 {
                exponents.insert(v, g);
            }
        }
        Monomial { exponents }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exponents.keys().all(|v| other.exponent(*v) == 0)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (&v, &e) in &self.exponents {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// The monomial order: degree-reverse-lexicographic over the deterministic
/// variable order (ascending `VariableId`, earlier ids taking precedence).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TermOrder {
    pub kind: OrderKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OrderKind {
    #[default]
    DegRevLex,
}

impl TermOrder {
    pub fn degrevlex() -> Self {
        TermOrder::default()
    }

    /// Total, degree-compatible comparison of monomials.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        // Reverse-lexicographic tail: scan variables from the greatest id
        // downward; at the first difference the smaller exponent wins.
        let mut ai = a.exponents.iter().rev().peekable();
        let mut bi = b.exponents.iter().rev().peekable();
        loop {
            match (ai.peek(), bi.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => {
                    // a has trailing variables that b lacks: at the greatest
                    // such id a's exponent is larger, so a is smaller.
                    return Ordering::Less;
                }
                (None, Some(_)) => return Ordering::Greater,
                (Some(&(&va, &ea)), Some(&(&vb, &eb))) => {
                    use std::cmp::Ordering::*;
                    match va.cmp(&vb) {
                        Greater => return Less,  // a alone has the greater id
                        Less => return Greater,
                        Equal => match ea.cmp(&eb) {
                            Greater => return Less,
                            Less => return Greater,
                            Equal => {
                                ai.next();
                                bi.next();
                            }
                        },
                    }
                }
            }
        }
    }
}

/// A pure-difference binomial `plus - minus`, stored with the leading term
/// (under the active order) first. `plus != minus` always holds.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Binomial {
    plus: Monomial,
    minus: Monomial,
}

impl Binomial {
    /// Canonical construction; `None` when the two terms are equal
    /// (the zero polynomial).
    pub fn new(a: Monomial, b: Monomial, ord: &TermOrder) -> Option<Binomial> {
        match ord.cmp(&a, &b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Greater => Some(Binomial { plus: a, minus: b }),
            std::cmp::Ordering::Less => Some(Binomial { plus: b, minus: a }),
        }
    }

    pub fn leading(&self) -> &Monomial {
        &self.plus
    }

    pub fn trailing(&self) -> &Monomial {
        &self.minus
    }

    pub fn degree(&self) -> u32 {
        self.plus.degree().max(self.minus.degree())
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

fn vertex_product(points: &[Point]) -> Monomial {
    Monomial::from_pairs(points.iter().map(|&p| (VariableId::Vertex(p), 1)))
}

/// One binomial `x_a x_b - x_c x_d` per inner interval, with `a, b` the
/// diagonal and `c, d` the anti-diagonal corners.
pub fn inner_2_minors(p: &CellCollection) -> Vec<Binomial> {
    let ord = TermOrder::degrevlex();
    let mut out: Vec<Binomial> = p
        .inner_intervals()
        .into_iter()
        .map(|i| {
            let diag = vertex_product(&i.diagonal_corners());
            let anti = vertex_product(&i.anti_diagonal_corners());
            Binomial::new(diag, anti, &ord).expect("corners of a proper interval are distinct")
        })
        .collect();
    out.sort();
    out
}

/// A ring map sending each vertex variable to a monomial over the side
/// variables (and possibly the hole variable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    images: BTreeMap<Point, Monomial>,
}

impl MonomialMap {
    pub fn entries(&self) -> Vec<(Point, Monomial)> {
        self.images.iter().map(|(&p, m)| (p, m.clone())).collect()
    }

    pub fn domain(&self) -> impl Iterator<Item = Point> + '_ {
        self.images.keys().copied()
    }

    pub fn image_of(&self, p: Point) -> Option<&Monomial> {
        self.images.get(&p)
    }

    /// Multiplicative extension of the map to a monomial over vertex
    /// variables.
    pub fn apply(&self, mono: &Monomial) -> Result<Monomial> {
        let mut out = Monomial::one();
        for (v, e) in mono.variables() {
            let VariableId::Vertex(p) = v else {
                return Err(Error::UnknownVariable(v.to_string()));
            };
            let image = self
                .images
                .get(&p)
                .ok_or_else(|| Error::UnknownVariable(v.to_string()))?;
            out = out.mul(&image.pow(e));
        }
        Ok(out)
    }
}

/// The edge-ring map: each vertex `r` goes to `v_i * h_j` where `V_i` and
/// `H_j` are the unique maximal vertical and horizontal edge intervals
/// through `r`.
pub fn edge_ring_map(p: &CellCollection) -> Result<MonomialMap> {
    hole_toric_map(p, &BTreeSet::new())
}

/// The hole-marked toric map: like [`edge_ring_map`] but the image of every
/// marked vertex carries an extra factor of the hole variable `w`.
pub fn hole_toric_map(p: &CellCollection, marked: &BTreeSet<Point>) -> Result<MonomialMap> {
    for &m in marked {
        if !p.contains_vertex(m) {
            return Err(Error::MarkedVertexNotInCollection(m));
        }
    }
    let v_intervals = p.maximal_edge_intervals(Orientation::Vertical);
    let h_intervals = p.maximal_edge_intervals(Orientation::Horizontal);
    let mut images = BTreeMap::new();
    for &r in p.vertices() {
        let vi = v_intervals
            .iter()
            .position(|e| e.contains_point(r))
            .ok_or(Error::DanglingVertex(r))?;
        let hj = h_intervals
            .iter()
            .position(|e| e.contains_point(r))
            .ok_or(Error::DanglingVertex(r))?;
        let mut pairs = vec![
            (VariableId::VSide(vi as u32), 1),
            (VariableId::HSide(hj as u32), 1),
        ];
        if marked.contains(&r) {
            pairs.push((VariableId::Hole, 1));
        }
        images.insert(r, Monomial::from_pairs(pairs));
    }
    Ok(MonomialMap { images })
}

/// True iff the binomial maps to zero, i.e. both terms have the same image.
pub fn in_kernel(map: &MonomialMap, b: &Binomial) -> Result<bool> {
    Ok(map.apply(b.leading())? == map.apply(b.trailing())?)
}

/// All kernel binomials `u - v` with `deg <= d`, `u != v`, `gcd(u, v) = 1`,
/// found by bucketing monomials by image. Results are canonical and sorted.
pub fn kernel_binomials_up_to_degree(
    map: &MonomialMap,
    d: u32,
    cap: usize,
) -> Result<Vec<Binomial>> {
    let ord = TermOrder::degrevlex();
    let domain: Vec<Point> = map.domain().collect();
    let n = domain.len();

    let mut candidates: usize = 0;
    for k in 1..=d {
        candidates = candidates.saturating_add(multiset_count(n, k as usize));
        if candidates > cap {
            return Err(Error::DegreeBoundTooLarge { candidates, cap });
        }
    }

    let mut out = BTreeSet::new();
    // Images of monomials of different degrees never collide (the image
    // degree determines the domain degree), so bucket one degree at a time.
    for k in 1..=d {
        let mut buckets: HashMap<Monomial, Vec<Monomial>> = HashMap::new();
        for combo in multisets(n, k as usize) {
            let mono = Monomial::from_pairs(
                combo
                    .iter()
                    .map(|&i| (VariableId::Vertex(domain[i]), 1u32)),
            );
            let image = map.apply(&mono)?;
            buckets.entry(image).or_default().push(mono);
        }
        for group in buckets.into_values() {
            for i in 0..group.len() {
                for j in (i + 1)..group.len() {
                    if group[i].is_coprime_with(&group[j]) {
                        if let Some(b) =
                            Binomial::new(group[i].clone(), group[j].clone(), &ord)
                        {
                            out.insert(b);
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

fn multiset_count(n: usize, k: usize) -> usize {
    // C(n + k - 1, k), saturating.
    if n == 0 {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n + i) / (i + 1);
    }
    acc
}

/// Multisets of size `k` over `0..n` as sorted index vectors.
fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current = vec![0usize; k];
    loop {
        out.push(current.clone());
        // Advance to the next non-decreasing sequence.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] + 1 < n {
                let v = current[i] + 1;
                for slot in current.iter_mut().skip(i) {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Outcome of the two-inclusion equality check between the inner 2-minor
/// ideal and the kernel of a monomial map, truncated at a degree bound.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct ToricEqualityReport {
    pub degree: u32,
    pub minor_count: usize,
    /// Inner 2-minors that are not in the kernel of the map.
    pub minor_failures: Vec<String>,
    pub kernel_count: usize,
    /// Kernel binomials up to the degree bound that do not reduce to zero
    /// modulo the inner 2-minor ideal.
    pub kernel_failures: Vec<String>,
}

impl ToricEqualityReport {
    pub fn minors_in_kernel(&self) -> bool {
        self.minor_failures.is_empty()
    }

    pub fn kernel_in_ideal(&self) -> bool {
        self.kernel_failures.is_empty()
    }

    pub fn passes(&self) -> bool {
        self.minors_in_kernel() && self.kernel_in_ideal()
    }

    pub fn verdict(&self) -> String {
        if self.passes() {
            format!("equal up to degree {}", self.degree)
        } else {
            format!("not equal at degree {}", self.degree)
        }
    }
}

/// Run both inclusions: every inner 2-minor lies in the kernel of `map`,
/// and every kernel binomial up to degree `d` reduces to zero modulo the
/// inner 2-minor ideal.
pub fn toric_equality_report(
    p: &CellCollection,
    map: &MonomialMap,
    d: u32,
    cap: usize,
) -> Result<ToricEqualityReport> {
    let ord = TermOrder::degrevlex();
    let minors = inner_2_minors(p);
    let mut minor_failures = Vec::new();
    for m in &minors {
        if !in_kernel(map, m)? {
            minor_failures.push(m.to_string());
        }
    }
    let basis = buchberger(&minors, &ord);
    let kernel = kernel_binomials_up_to_degree(map, d, cap)?;
    let mut kernel_failures = Vec::new();
    for b in &kernel {
        if normal_form(b, &basis, &ord).is_some() {
            kernel_failures.push(b.to_string());
        }
    }
    Ok(ToricEqualityReport {
        degree: d,
        minor_count: minors.len(),
        minor_failures,
        kernel_count: kernel.len(),
        kernel_failures,
    })
}
