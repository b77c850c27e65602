//! Permutations of `{1, ..., n}` stored as image tables.
//!
//! Products are read left to right: `p.then(&q)` applies `p` first and then
//! `q`, so `(1 2)` followed by `(2 3)` is `(1 3 2)`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree; points are stored in a byte.
pub const MAX_DEGREE: usize = 255;

/// A bijection of `{1, ..., degree}`.
///
/// Points are 1-based in every public method. Internally the table holds
/// 0-based images so that group element tables can be compared bytewise.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Result<Self> {
        check_degree(degree)?;
        Ok(Permutation {
            images: (0..degree as u8).collect(),
        })
    }

    /// Builds a permutation from 1-based images: `images[i - 1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        check_degree(degree)?;
        let mut seen = vec![false; degree];
        let mut table = Vec::with_capacity(degree);
        for &img in images {
            if img == 0 || img > degree {
                return Err(Error::PointOutOfRange { point: img, degree });
            }
            if std::mem::replace(&mut seen[img - 1], true) {
                return Err(Error::Malformed(format!("image {img} occurs twice")));
            }
            table.push((img - 1) as u8);
        }
        Ok(Permutation { images: table })
    }

    /// Wraps a 0-based image table that is already known to be a bijection.
    pub(crate) fn from_table_unchecked(table: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&table));
        Permutation { images: table }
    }

    pub(crate) fn table(&self) -> &[u8] {
        &self.images
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based `point`.
    pub fn image(&self, point: usize) -> usize {
        self.images[point - 1] as usize + 1
    }

    /// 1-based image list.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// The product "apply `self`, then `other`".
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        let mut out = vec![0; self.degree()];
        compose_into(&self.images, &other.images, &mut out);
        Ok(Permutation { images: out })
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0; self.degree()];
        invert_into(&self.images, &mut out);
        Permutation { images: out }
    }

    /// `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        sign_of(&self.images)
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Least `k >= 1` with `self^k` the identity.
    pub fn order(&self) -> u64 {
        order_of(&self.images)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation {
            images: (0..self.degree() as u8).collect(),
        };
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base).expect("same degree");
            }
            base = base.then(&base).expect("same degree");
            k >>= 1;
        }
        acc
    }

    /// `self^-1 * x * self` in left-to-right notation, i.e. the permutation
    /// that moves `self(i)` to `self(x(i))`.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        self.inverse().then(x)?.then(self)
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.degree() == other.degree() && commute(&self.images, &other.images)
    }

    /// Disjoint cycles, each starting at its smallest point, ordered by that
    /// point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(&self.images)
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    /// Moves the points of `self` up by `offset` inside a permutation of
    /// degree `degree`, fixing everything else.
    pub fn shifted(&self, offset: usize, degree: usize) -> Result<Permutation> {
        check_degree(degree)?;
        if offset + self.degree() > degree {
            return Err(Error::DegreeMismatch(offset + self.degree(), degree));
        }
        let mut table: Vec<u8> = (0..degree as u8).collect();
        for (i, &x) in self.images.iter().enumerate() {
            table[offset + i] = (offset + x as usize) as u8;
        }
        Ok(Permutation { images: table })
    }

    /// Re-reads `self` at a larger degree, padding with fixed points.
    pub fn extended(&self, degree: usize) -> Result<Permutation> {
        self.shifted(0, degree)
    }
}

/// Parses a product of cycles such as `"(1 2 3)(4 5)"` at the given degree.
///
/// Cycles are multiplied left to right. Points may be separated by
/// whitespace or commas; `""` and `"()"` denote the identity.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let mut acc = Permutation::identity(degree)?;
    let mut rest = text.trim();
    while !rest.is_empty() {
        let Some(body) = rest.strip_prefix('(') else {
            return Err(Error::Malformed(format!("expected '(' at {rest:?}")));
        };
        let close = body
            .find(')')
            .ok_or_else(|| Error::Malformed(format!("unclosed cycle in {text:?}")))?;
        let inner = &body[..close];
        if inner.contains('(') {
            return Err(Error::Malformed(format!("nested '(' in {text:?}")));
        }
        let mut points = Vec::new();
        for tok in inner
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
        {
            let point: usize = tok
                .parse()
                .map_err(|_| Error::Malformed(format!("bad point {tok:?}")))?;
            if point == 0 || point > degree {
                return Err(Error::PointOutOfRange { point, degree });
            }
            if points.contains(&point) {
                return Err(Error::RepeatedPoint(point));
            }
            points.push(point);
        }
        if points.len() > 1 {
            let mut table: Vec<u8> = (0..degree as u8).collect();
            for (i, &p) in points.iter().enumerate() {
                table[p - 1] = (points[(i + 1) % points.len()] - 1) as u8;
            }
            acc = acc.then(&Permutation { images: table })?;
        }
        rest = body[close + 1..].trim_start();
    }
    Ok(acc)
}

/// Canonical cycle notation: disjoint cycles by smallest moved point, `"()"`
/// for the identity.
pub fn format_cycles(p: &Permutation) -> String {
    p.to_string()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, p) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 || degree > MAX_DEGREE {
        Err(Error::UnsupportedDegree(degree))
    } else {
        Ok(())
    }
}

// Slice kernels shared with the group engine, which keeps its elements in a
// flat table.

#[inline]
pub(crate) fn compose_into(p: &[u8], q: &[u8], out: &mut [u8]) {
    for (o, &x) in out.iter_mut().zip(p) {
        *o = q[x as usize];
    }
}

#[inline]
pub(crate) fn invert_into(p: &[u8], out: &mut [u8]) {
    for (i, &x) in p.iter().enumerate() {
        out[x as usize] = i as u8;
    }
}

#[inline]
pub(crate) fn commute(p: &[u8], q: &[u8]) -> bool {
    p.iter()
        .zip(q)
        .all(|(&pi, &qi)| q[pi as usize] == p[qi as usize])
}

pub(crate) fn is_bijection(table: &[u8]) -> bool {
    let mut seen = vec![false; table.len()];
    table
        .iter()
        .all(|&x| (x as usize) < table.len() && !std::mem::replace(&mut seen[x as usize], true))
}

fn cycles_of(table: &[u8]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; table.len()];
    let mut out = Vec::new();
    for start in 0..table.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut x = table[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x);
            x = table[x] as usize;
        }
        out.push(cycle);
    }
    out
}

pub(crate) fn sign_of(table: &[u8]) -> i8 {
    let even_cycles = cycles_of(table).iter().filter(|c| c.len() % 2 == 0).count();
    if even_cycles % 2 == 0 {
        1
    } else {
        -1
    }
}

pub(crate) fn order_of(table: &[u8]) -> u64 {
    cycles_of(table)
        .iter()
        .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(text: &str, n: usize) -> Permutation {
        parse_cycles(text, n).unwrap()
    }

    #[test]
    fn parses_three_cycle() {
        let x = p("(1 2 3)", 5);
        assert_eq!(x.images(), vec![2, 3, 1, 4, 5]);
    }

    #[test]
    fn empty_and_unit_are_identity() {
        assert!(p("", 4).is_identity());
        assert!(p("()", 4).is_identity());
        assert!(p("  ( )  ", 4).is_identity());
        assert_eq!(p("", 4).degree(), 4);
    }

    #[test]
    fn disjoint_transpositions() {
        let x = p("(1 2)(3 4)", 6);
        assert_eq!(x.order(), 2);
        assert_eq!(x.sign(), 1);
        assert_eq!(x.image(5), 5);
        assert_eq!(x.image(6), 6);
    }

    #[test]
    fn commas_are_accepted() {
        assert_eq!(p("(1,2)(3, 4)", 4), p("(1 2)(3 4)", 4));
    }

    #[test]
    fn parse_errors() {
        assert_eq!(
            parse_cycles("(1 6)", 5),
            Err(Error::PointOutOfRange {
                point: 6,
                degree: 5
            })
        );
        assert_eq!(parse_cycles("(1 2 1)", 5), Err(Error::RepeatedPoint(1)));
        assert!(matches!(parse_cycles("(1 2", 5), Err(Error::Malformed(_))));
        assert!(matches!(parse_cycles("1 2)", 5), Err(Error::Malformed(_))));
        assert!(matches!(
            parse_cycles("((1 2))", 5),
            Err(Error::Malformed(_))
        ));
        assert!(matches!(parse_cycles("(a b)", 5), Err(Error::Malformed(_))));
        assert_eq!(parse_cycles("()", 0), Err(Error::UnsupportedDegree(0)));
    }

    #[test]
    fn non_disjoint_cycles_multiply_left_to_right() {
        assert_eq!(p("(1 2)(2 3)", 3), p("(1 3 2)", 3));
    }

    #[test]
    fn composition_convention() {
        let a = p("(1 2)", 3);
        let b = p("(2 3)", 3);
        assert_eq!(a.then(&b).unwrap(), p("(1 3 2)", 3));
        let id = Permutation::identity(3).unwrap();
        assert_eq!(a.then(&id).unwrap(), a);
        assert!(a.then(&a.inverse()).unwrap().is_identity());
        assert_eq!(a.then(&p("()", 4)), Err(Error::DegreeMismatch(3, 4)));
    }

    #[test]
    fn inverses() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert!(p("", 3).inverse().is_identity());
        assert_eq!(p("(1 2)", 3).inverse(), p("(1 2)", 3));
    }

    #[test]
    fn signs() {
        assert_eq!(p("(1 2)", 3).sign(), -1);
        assert_eq!(p("(1 2 3)", 3).sign(), 1);
        assert_eq!(p("", 3).sign(), 1);
    }

    #[test]
    fn orders() {
        assert_eq!(p("(1 2 3)", 5).order(), 3);
        assert_eq!(p("(1 2)(3 4 5)", 5).order(), 6);
        assert_eq!(p("", 5).order(), 1);
    }

    #[test]
    fn formatting() {
        assert_eq!(p("(3 1)(5 4 2)", 6).to_string(), "(1 3)(2 5 4)");
        assert_eq!(p("", 6).to_string(), "()");
    }

    #[test]
    fn conjugation_relabels_points() {
        let c = p("(1 2 3 4 5)", 5);
        let x = p("(1 2)", 5);
        assert_eq!(c.conjugate(&x).unwrap(), p("(2 3)", 5));
    }

    #[test]
    fn shift_and_extend() {
        let x = p("(1 2 3)", 3);
        assert_eq!(x.shifted(3, 6).unwrap(), p("(4 5 6)", 6));
        assert_eq!(x.extended(5).unwrap(), p("(1 2 3)", 5));
        assert!(x.shifted(4, 6).is_err());
    }

    #[test]
    fn from_images_validates() {
        assert_eq!(Permutation::from_images(&[2, 1, 3]).unwrap(), p("(1 2)", 3));
        assert!(Permutation::from_images(&[1, 1, 3]).is_err());
        assert!(Permutation::from_images(&[1, 4, 3]).is_err());
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    proptest! {
        #[test]
        fn associativity(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            let left = a.then(&b).unwrap().then(&c).unwrap();
            let right = a.then(&b.then(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn format_parse_round_trip(a in arb_perm(9)) {
            prop_assert_eq!(parse_cycles(&format_cycles(&a), 9).unwrap(), a);
        }

        #[test]
        fn sign_is_multiplicative(a in arb_perm(8), b in arb_perm(8)) {
            prop_assert_eq!(a.then(&b).unwrap().sign(), a.sign() * b.sign());
        }

        #[test]
        fn order_is_least_power(a in arb_perm(8)) {
            let k = a.order();
            prop_assert!(a.pow(k).is_identity());
            for j in 1..k {
                prop_assert!(!a.pow(j).is_identity());
            }
        }
    }
}
