//! Induced modules in PBW form.
//!
//! A basis vector is an ordered word of "free" loop generators applied to the
//! cyclic vector. In every module the free generators form an initial segment
//! of the PBW order, so a generator that is not larger than the first letter
//! of a word can simply be prepended; otherwise it is commuted one step to the
//! right.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};

use crate::kernel::rat::fmt_rat;
use crate::kernel::Rat;

use super::lie::{commutator, AffineElement, Gen, LoopGen};
use super::AffineError;

pub type Monomial = Vec<LoopGen>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ModuleKind {
    /// Induced from the trivial module of `(t g[[t]])^N`; zero modes act freely.
    Vac,
    /// Induced from the tensor product of `sl2` Verma modules with highest weights `λ`.
    Verma(Vec<Rat>),
    /// Induced from the trivial module of `(g[[t]])^N`.
    TrueVac,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Module {
    kind: ModuleKind,
    copies: usize,
    level: Rat,
}

impl Module {
    pub fn vac(copies: usize, level: Rat) -> Self {
        Module {
            kind: ModuleKind::Vac,
            copies,
            level,
        }
    }

    pub fn verma(lambda: Vec<Rat>, level: Rat) -> Self {
        Module {
            copies: lambda.len(),
            kind: ModuleKind::Verma(lambda),
            level,
        }
    }

    pub fn true_vac(copies: usize, level: Rat) -> Self {
        Module {
            kind: ModuleKind::TrueVac,
            copies,
            level,
        }
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    pub fn level(&self) -> &Rat {
        &self.level
    }

    /// Whether `g` is part of the PBW basis of this module.
    pub fn is_free(&self, g: &LoopGen) -> bool {
        match self.kind {
            ModuleKind::Vac => g.mode <= 0,
            ModuleKind::Verma(_) => g.mode < 0 || (g.mode == 0 && g.gen == Gen::F),
            ModuleKind::TrueVac => g.mode < 0,
        }
    }

    /// `t`-degree `-Σ modes`.
    pub fn degree(word: &[LoopGen]) -> i64 {
        -word.iter().map(|g| g.mode).sum::<i64>()
    }

    /// The cyclic generator (`v_{-2}`, `μ_λ`, or the true vacuum).
    pub fn generator(&self) -> ModuleVector {
        ModuleVector::basis(Vec::new())
    }

    /// Action of one generator on the cyclic vector.
    fn base_action(&self, x: LoopGen) -> ModuleVector {
        if self.is_free(&x) {
            return ModuleVector::basis(vec![x]);
        }
        match (&self.kind, x.mode, x.gen) {
            (ModuleKind::Verma(lambda), 0, Gen::H) => {
                ModuleVector::basis(Vec::new()).scale(&lambda[x.copy - 1])
            }
            _ => ModuleVector::zero(),
        }
    }

    /// A fresh memoizing evaluator for this module.
    pub fn actor(&self) -> Actor<'_> {
        Actor {
            module: self,
            cache: HashMap::new(),
            sugawara: HashMap::new(),
        }
    }

    pub fn act_gen(&self, x: LoopGen, v: &ModuleVector) -> ModuleVector {
        self.actor().act_gen(x, v)
    }

    /// Action of an element of `U(ĝ_N)`, with `K` acting by the level.
    pub fn act(&self, x: &AffineElement, v: &ModuleVector) -> Result<ModuleVector, AffineError> {
        self.actor().act(x, v)
    }

    /// PBW basis of the degree-`d` piece; at most `zero_bound` zero-mode
    /// letters (ignored by modules whose zero-mode part is finite per degree).
    pub fn basis(&self, d: i64, zero_bound: Option<usize>) -> Result<Vec<Monomial>, AffineError> {
        let zero_gens: Vec<LoopGen> = (1..=self.copies)
            .flat_map(|c| [Gen::F, Gen::H, Gen::E].map(|g| LoopGen::new(g, 0, c)))
            .filter(|g| self.is_free(g))
            .collect();
        let zero_limit = match self.kind {
            ModuleKind::Vac => zero_bound.ok_or(AffineError::TruncationRequired)?,
            ModuleKind::Verma(_) => zero_bound.ok_or(AffineError::TruncationRequired)?,
            ModuleKind::TrueVac => 0,
        };
        let mut gens: Vec<LoopGen> = (1..=d.max(0))
            .rev()
            .flat_map(|a| {
                (1..=self.copies).flat_map(move |c| [Gen::F, Gen::H, Gen::E].map(|g| LoopGen::new(g, -a, c)))
            })
            .collect();
        gens.extend(zero_gens);
        gens.sort();
        let mut out = Vec::new();
        let mut cur = Vec::new();
        enumerate(&gens, 0, d, zero_limit, &mut cur, &mut out);
        Ok(out)
    }
}

fn enumerate(
    gens: &[LoopGen],
    start: usize,
    deg_left: i64,
    zero_left: usize,
    cur: &mut Monomial,
    out: &mut Vec<Monomial>,
) {
    if deg_left == 0 {
        out.push(cur.clone());
    }
    for i in start..gens.len() {
        let g = gens[i];
        let dg = -g.mode;
        if dg > deg_left || (dg == 0 && zero_left == 0) {
            continue;
        }
        cur.push(g);
        let zl = if dg == 0 { zero_left - 1 } else { zero_left };
        enumerate(gens, i, deg_left - dg, zl, cur, out);
        cur.pop();
    }
}

/// Memoized action of single generators on basis words.
pub struct Actor<'a> {
    module: &'a Module,
    cache: HashMap<(LoopGen, Monomial), ModuleVector>,
    sugawara: HashMap<(i64, usize, Monomial), ModuleVector>,
}

impl Actor<'_> {
    pub fn module(&self) -> &Module {
        self.module
    }

    pub(super) fn sugawara_cache(&mut self) -> &mut HashMap<(i64, usize, Monomial), ModuleVector> {
        &mut self.sugawara
    }

    pub fn act_gen(&mut self, x: LoopGen, v: &ModuleVector) -> ModuleVector {
        let mut out = ModuleVector::zero();
        for (w, c) in &v.terms {
            out.add_scaled(&self.act_word(x, w), c);
        }
        out
    }

    pub fn act(&mut self, x: &AffineElement, v: &ModuleVector) -> Result<ModuleVector, AffineError> {
        if x.level != self.module.level {
            return Err(AffineError::LevelMismatch {
                element: Box::new(x.level.clone()),
                module: Box::new(self.module.level.clone()),
            });
        }
        let mut out = ModuleVector::zero();
        for (t, c) in &x.terms {
            let mut w = v.clone();
            for g in t.word.iter().rev() {
                w = self.act_gen(*g, &w);
            }
            let k = num_traits::pow(self.module.level.clone(), t.k_power as usize);
            out.add_scaled(&w, &(c * k));
        }
        Ok(out)
    }

    /// `x · (w · cyclic)`.
    pub fn act_word(&mut self, x: LoopGen, w: &[LoopGen]) -> ModuleVector {
        if x.mode > Module::degree(w) {
            return ModuleVector::zero();
        }
        let Some(&y) = w.first() else {
            return self.module.base_action(x);
        };
        if x <= y {
            debug_assert!(self.module.is_free(&x), "free generators are an initial segment");
            let mut word = Vec::with_capacity(w.len() + 1);
            word.push(x);
            word.extend_from_slice(w);
            return ModuleVector::basis(word);
        }
        let key = (x, w.to_vec());
        if let Some(v) = self.cache.get(&key) {
            return v.clone();
        }
        let rest = &w[1..];
        // x y W = y (x W) + [x, y] W
        let inner = self.act_word(x, rest);
        let mut out = ModuleVector::zero();
        for (m, c) in &inner.terms {
            out.add_scaled(&self.act_word(y, m), c);
        }
        let com = commutator(x, y);
        if let Some((c, z)) = com.loop_part {
            out.add_scaled(&self.act_word(z, rest), &c);
        }
        if !com.central.is_zero() {
            let c = &com.central * &self.module.level;
            out.add_scaled(&ModuleVector::basis(rest.to_vec()), &c);
        }
        self.cache.insert(key, out.clone());
        out
    }
}

/// A finite combination of PBW basis words applied to the cyclic vector.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ModuleVector {
    pub terms: BTreeMap<Monomial, Rat>,
}

impl ModuleVector {
    pub fn zero() -> Self {
        ModuleVector::default()
    }

    pub fn basis(w: Monomial) -> Self {
        debug_assert!(w.windows(2).all(|p| p[0] <= p[1]));
        let mut terms = BTreeMap::new();
        terms.insert(w, Rat::one());
        ModuleVector { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[LoopGen]) -> Rat {
        self.terms.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add_scaled(&mut self, rhs: &ModuleVector, c: &Rat) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &rhs.terms {
            match self.terms.entry(w.clone()) {
                Entry::Occupied(mut o) => {
                    *o.get_mut() += x * c;
                    if o.get().is_zero() {
                        o.remove();
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(x * c);
                }
            }
        }
    }

    pub fn add(&self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rat::one());
        out
    }

    pub fn sub(&self, rhs: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rat::one());
        out
    }

    pub fn scale(&self, c: &Rat) -> ModuleVector {
        let mut out = ModuleVector::zero();
        out.add_scaled(self, c);
        out
    }

    /// Largest `t`-degree of a word, `None` for the zero vector.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(|w| Module::degree(w)).max()
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", fmt_rat(c))?;
            for g in w {
                write!(f, " {g}")?;
            }
            write!(f, " v")?;
        }
        Ok(())
    }
}
