//! `sl2`, its loop generators, and normal forms in `U` of the centrally
//! extended loop algebra.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::kernel::rat::fmt_rat;
use crate::kernel::{ri, Rat};

/// Basis of `sl2`. The derived order `F < H < E` is the PBW order within a mode.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Gen {
    F,
    H,
    E,
}

impl Gen {
    pub const ALL: [Gen; 3] = [Gen::E, Gen::H, Gen::F];

    /// `[self, other]` as `(coefficient, generator)` pairs.
    pub fn bracket(self, other: Gen) -> Option<(i64, Gen)> {
        use Gen::*;
        match (self, other) {
            (H, E) => Some((2, E)),
            (E, H) => Some((-2, E)),
            (H, F) => Some((-2, F)),
            (F, H) => Some((2, F)),
            (E, F) => Some((1, H)),
            (F, E) => Some((-1, H)),
            _ => None,
        }
    }

    /// Trace form of the defining representation.
    pub fn trace(self, other: Gen) -> i64 {
        use Gen::*;
        match (self, other) {
            (E, F) | (F, E) => 1,
            (H, H) => 2,
            _ => 0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Gen::E => 'e',
            Gen::H => 'h',
            Gen::F => 'f',
        }
    }
}

/// `gen ⊗ t^mode` in copy `copy` (1-based).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct LoopGen {
    pub gen: Gen,
    pub mode: i64,
    pub copy: usize,
}

impl LoopGen {
    pub fn new(gen: Gen, mode: i64, copy: usize) -> Self {
        LoopGen { gen, mode, copy }
    }

    pub fn e(mode: i64, copy: usize) -> Self {
        LoopGen::new(Gen::E, mode, copy)
    }

    pub fn h(mode: i64, copy: usize) -> Self {
        LoopGen::new(Gen::H, mode, copy)
    }

    pub fn f(mode: i64, copy: usize) -> Self {
        LoopGen::new(Gen::F, mode, copy)
    }

    fn key(&self) -> (i64, Gen, usize) {
        (self.mode, self.gen, self.copy)
    }
}

impl PartialOrd for LoopGen {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// PBW order: mode, then `f < h < e`, then copy.
impl Ord for LoopGen {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for LoopGen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]^({})", self.gen.symbol(), self.mode, self.copy)
    }
}

/// Result of a single commutator: a loop generator term and a central term.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Commutator {
    pub loop_part: Option<(Rat, LoopGen)>,
    /// Coefficient of `K`.
    pub central: Rat,
}

/// `[A t^m, B t^n] = [A, B] t^{m+n} + m δ_{m+n,0} Tr(A, B) K` within a copy,
/// zero across copies.
pub fn commutator(a: LoopGen, b: LoopGen) -> Commutator {
    if a.copy != b.copy {
        return Commutator {
            loop_part: None,
            central: Rat::zero(),
        };
    }
    let loop_part = a
        .gen
        .bracket(b.gen)
        .map(|(c, g)| (ri(c), LoopGen::new(g, a.mode + b.mode, a.copy)));
    let central = if a.mode + b.mode == 0 {
        ri(a.mode * a.gen.trace(b.gen))
    } else {
        Rat::zero()
    };
    Commutator { loop_part, central }
}

/// A word in loop generators together with a power of `K`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Term {
    pub word: Vec<LoopGen>,
    pub k_power: u32,
}

/// An element of `U(ĝ_N)` as a combination of words; after [`pbw_reduce`]
/// every word is PBW-ordered. `level` is the value `K` takes when the element
/// acts on a module.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AffineElement {
    pub terms: BTreeMap<Term, Rat>,
    pub level: Rat,
}

/// The critical level.
pub fn critical_level() -> Rat {
    ri(-2)
}

impl AffineElement {
    pub fn zero() -> Self {
        AffineElement {
            terms: BTreeMap::new(),
            level: critical_level(),
        }
    }

    pub fn one() -> Self {
        AffineElement::word(Vec::new())
    }

    pub fn word(word: Vec<LoopGen>) -> Self {
        AffineElement::zero().plus_term(Term { word, k_power: 0 }, Rat::one())
    }

    pub fn gen(g: LoopGen) -> Self {
        AffineElement::word(vec![g])
    }

    /// The central element `K`.
    pub fn central() -> Self {
        AffineElement::zero().plus_term(
            Term {
                word: Vec::new(),
                k_power: 1,
            },
            Rat::one(),
        )
    }

    pub fn with_level(mut self, k: Rat) -> Self {
        self.level = k;
        self
    }

    fn plus_term(mut self, t: Term, c: Rat) -> Self {
        add_to(&mut self.terms, t, c);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (t, c) in &rhs.terms {
            add_to(&mut out.terms, t.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        let mut out = AffineElement::zero().with_level(self.level.clone());
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(t, x)| (t.clone(), x * c)).collect();
        out
    }

    /// Concatenation product (not reduced).
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = AffineElement::zero().with_level(self.level.clone());
        for (t1, c1) in &self.terms {
            for (t2, c2) in &rhs.terms {
                let mut word = t1.word.clone();
                word.extend_from_slice(&t2.word);
                add_to(
                    &mut out.terms,
                    Term {
                        word,
                        k_power: t1.k_power + t2.k_power,
                    },
                    c1 * c2,
                );
            }
        }
        out
    }

    /// Replaces `K` by `self.level`.
    pub fn at_level(&self) -> Self {
        let mut out = AffineElement::zero().with_level(self.level.clone());
        for (t, c) in &self.terms {
            let kp = num_traits::pow(self.level.clone(), t.k_power as usize);
            add_to(
                &mut out.terms,
                Term {
                    word: t.word.clone(),
                    k_power: 0,
                },
                c * kp,
            );
        }
        out
    }

    /// Filtration degree: the longest word (`deg X = 1`, `deg K = 0`).
    pub fn filtration_degree(&self) -> usize {
        self.terms.keys().map(|t| t.word.len()).max().unwrap_or(0)
    }
}

fn add_to(m: &mut BTreeMap<Term, Rat>, t: Term, c: Rat) {
    if c.is_zero() {
        return;
    }
    match m.entry(t) {
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

/// `[a, b]` as an element with symbolic `K`.
pub fn bracket(a: LoopGen, b: LoopGen) -> AffineElement {
    let c = commutator(a, b);
    let mut out = AffineElement::zero();
    if let Some((x, g)) = c.loop_part {
        out = out.plus_term(
            Term {
                word: vec![g],
                k_power: 0,
            },
            x,
        );
    }
    out.plus_term(
        Term {
            word: Vec::new(),
            k_power: 1,
        },
        c.central,
    )
}

/// PBW normal form, straightening the leftmost inversion first. `K` stays
/// symbolic; apply [`AffineElement::at_level`] to specialize.
pub fn pbw_reduce(x: &AffineElement) -> AffineElement {
    let mut done: BTreeMap<Term, Rat> = BTreeMap::new();
    let mut todo: Vec<(Term, Rat)> = x.terms.iter().map(|(t, c)| (t.clone(), c.clone())).collect();
    while let Some((t, c)) = todo.pop() {
        let Some(i) = (0..t.word.len().saturating_sub(1)).find(|&i| t.word[i] > t.word[i + 1]) else {
            add_to(&mut done, t, c);
            continue;
        };
        let (a, b) = (t.word[i], t.word[i + 1]);
        let mut swapped = t.word.clone();
        swapped.swap(i, i + 1);
        todo.push((
            Term {
                word: swapped,
                k_power: t.k_power,
            },
            c.clone(),
        ));
        let com = commutator(a, b);
        if let Some((x, g)) = com.loop_part {
            let mut w = t.word[..i].to_vec();
            w.push(g);
            w.extend_from_slice(&t.word[i + 2..]);
            todo.push((
                Term {
                    word: w,
                    k_power: t.k_power,
                },
                &c * x,
            ));
        }
        if !com.central.is_zero() {
            let mut w = t.word[..i].to_vec();
            w.extend_from_slice(&t.word[i + 2..]);
            todo.push((
                Term {
                    word: w,
                    k_power: t.k_power + 1,
                },
                &c * &com.central,
            ));
        }
    }
    AffineElement {
        terms: done,
        level: x.level.clone(),
    }
}

impl fmt::Display for AffineElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (t, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", fmt_rat(c))?;
            for g in &t.word {
                write!(f, " {g}")?;
            }
            if t.k_power > 0 {
                write!(f, " K^{}", t.k_power)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_term(c: i64) -> AffineElement {
        AffineElement::central().scale(&ri(c))
    }

    #[test]
    fn brackets() {
        assert_eq!(
            bracket(LoopGen::e(1, 1), LoopGen::f(-1, 1)),
            AffineElement::gen(LoopGen::h(0, 1)).add(&k_term(1))
        );
        assert_eq!(bracket(LoopGen::h(1, 1), LoopGen::h(-1, 1)), k_term(2));
        assert!(bracket(LoopGen::e(0, 1), LoopGen::f(0, 2)).is_zero());
    }

    #[test]
    fn trace_form_is_invariant() {
        for a in Gen::ALL {
            for b in Gen::ALL {
                assert_eq!(a.trace(b), b.trace(a));
                for c in Gen::ALL {
                    let lhs: i64 = a.bracket(b).map_or(0, |(x, g)| x * g.trace(c));
                    let rhs: i64 = b.bracket(c).map_or(0, |(x, g)| x * a.trace(g));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn reductions() {
        let fe = AffineElement::word(vec![LoopGen::f(-1, 1), LoopGen::e(-1, 1)]);
        assert_eq!(pbw_reduce(&fe), fe);

        let ef = AffineElement::word(vec![LoopGen::e(1, 1), LoopGen::f(-1, 1)]).with_level(ri(5));
        let expected = AffineElement::word(vec![LoopGen::f(-1, 1), LoopGen::e(1, 1)])
            .add(&AffineElement::gen(LoopGen::h(0, 1)))
            .add(&AffineElement::one().scale(&ri(5)))
            .with_level(ri(5));
        assert_eq!(pbw_reduce(&ef).at_level(), expected);

        let eh = AffineElement::word(vec![LoopGen::e(0, 1), LoopGen::h(0, 1)]);
        let expected = AffineElement::word(vec![LoopGen::h(0, 1), LoopGen::e(0, 1)])
            .add(&AffineElement::gen(LoopGen::e(0, 1)).scale(&ri(-2)));
        assert_eq!(pbw_reduce(&eh), expected);
    }
}
