//! Coherence conventions, fixed here once for every downstream crate.
//!
//! Morphisms and associator:
//! * `Hom(g, g) = π₂`, composition is addition, identity is 0.
//! * The tensor product of `a: g → g` and `b: h → h` is `a + g▷b`.
//! * `α(g,h,k)` is the associator `g(hk) → (gh)k`. The cocycle identity is
//!   `g▷α(h,k,l) − α(gh,k,l) + α(g,hk,l) − α(g,h,kl) + α(g,h,k) = 0`.
//! * The dual of `g` is `g⁻¹`, with `ev(g): g⁻¹g → e` and `coev(g): e → gg⁻¹`
//!   the lexicographically least pair (ev first) satisfying
//!   `coev(g) − α(g,g⁻¹,g) + g▷ev(g) = 0` and
//!   `g⁻¹▷coev(g) + α(g⁻¹,g,g⁻¹) + ev(g) = 0`.
//!
//! Monomial 2-representations on simples `v_i`:
//! * `F_g v_i = v_{σ_g i}`; `tau(g,a,i)` is the component of `F_a` at `v_i`.
//! * `c(g,h,i)` is the component at `v_i` of `F_g F_h ⇒ F_{gh}`; the
//!   associativity constraint reads
//!   `c(g,h,σ_k i)·c(gh,k,i) = tau(ghk, α(g,h,k), i)·c(g,hk,i)·c(h,k,i)`.
//! * Interchange carries no cochain correction:
//!   `tau(gh, a + g▷b, i) = tau(g, a, σ_h i)·tau(h, b, i)`.
//!   Hence `tau(g,a,i) = tau(e,a,σ_g i)`.
//!
//! Bracketings: for a word `w` of objects and a binary bracketing `B` of
//! it, [`FiniteTwoGroup::bracketing_potential`] is the element of π₂ of the
//! canonical associator composite from the left-normed bracketing of `w`
//! to `B`. Every scalar correction below is a difference of such
//! potentials.

use crate::FiniteTwoGroup;

/// A binary bracketing. Leaves are consumed left to right from a word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    /// Parses `.` as a leaf and `(AB)` as a node; whitespace is ignored.
    ///
    /// # Panics
    /// On malformed input. Patterns are compile-time constants.
    pub fn parse(s: &str) -> Tree {
        let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (t, used) = Self::parse_at(&chars, 0);
        assert_eq!(used, chars.len(), "trailing input in bracketing {s:?}");
        t
    }

    fn parse_at(chars: &[char], pos: usize) -> (Tree, usize) {
        match chars.get(pos) {
            Some('.') => (Tree::Leaf, pos + 1),
            Some('(') => {
                let (l, p) = Self::parse_at(chars, pos + 1);
                let (r, p) = Self::parse_at(chars, p);
                assert_eq!(chars.get(p), Some(&')'), "unclosed bracketing");
                (Tree::Node(Box::new(l), Box::new(r)), p + 1)
            }
            other => panic!("unexpected {other:?} in bracketing"),
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// `((w₀ w₁) w₂) …`
    pub fn left_normed(n: usize) -> Tree {
        (1..n.max(1)).fold(Tree::Leaf, |acc, _| Tree::Node(Box::new(acc), Box::new(Tree::Leaf)))
    }
}

impl FiniteTwoGroup {
    /// π₂ element of the canonical iso from the left-normed bracketing of
    /// `word` to `tree`.
    ///
    /// # Panics
    /// If the tree's leaf count differs from the word length.
    pub fn bracketing_potential(&self, word: &[usize], tree: &Tree) -> usize {
        assert_eq!(word.len(), tree.leaves(), "bracketing does not fit the word");
        self.potential_rec(word, tree)
    }

    fn potential_rec(&self, word: &[usize], tree: &Tree) -> usize {
        match tree {
            Tree::Leaf => 0,
            Tree::Node(l, r) => {
                let (wl, wr) = word.split_at(l.leaves());
                let x = self.product(wl);
                let a = &self.pi2();
                a.sum([self.potential_rec(wl, l), self.act(x, self.potential_rec(wr, r)), self.merge(x, wr)])
            }
        }
    }

    /// Left-normed `(x r₁ … r_m)` to `x (r₁ … r_m)` with both word parts left-normed.
    fn merge(&self, x: usize, rest: &[usize]) -> usize {
        let a = self.pi2();
        let mut acc = 0;
        for m in (2..=rest.len()).rev() {
            let head = self.product(&rest[..m - 1]);
            acc = a.sub(acc, self.alpha(x, head, rest[m - 1]));
        }
        acc
    }

    fn potential_difference(&self, word: &[usize], target: &str, source: &str) -> usize {
        let a = self.pi2();
        a.sub(self.bracketing_potential(word, &Tree::parse(target)), self.bracketing_potential(word, &Tree::parse(source)))
    }

    /// Correction in the composition law of conjugation isomorphisms of a
    /// class functor: `ψ(kl, g) = γ(k,l,g) · ψ(k, lgl⁻¹) ∘ ψ(l, g)`, where
    /// the π₂ element acts on the target.
    pub fn gamma(&self, k: usize, l: usize, g: usize) -> usize {
        let (ki, li) = (self.inv(k), self.inv(l));
        let a = self.pi2();
        let numerator = self.potential_difference(&[k, l, g, li, ki], "(((..).)(..))", "((.((..).)).)");
        let denominator = self.potential_difference(&[k, l, li, ki], "((..)(..))", "((.(..)).)");
        let duals = a.sub(a.sub(self.coev(self.mul(k, l)), self.coev(k)), self.act(k, self.coev(l)));
        a.sum([numerator, a.neg(denominator), duals])
    }

    /// Correction of the conjugation isomorphism on the summand of a Day
    /// convolution indexed by the split `(u, k)`, for conjugation by `l`.
    pub fn day_twist(&self, l: usize, u: usize, k: usize) -> usize {
        let li = self.inv(l);
        self.potential_difference(&[l, u, li, l, k, li], "((.(.((..).))).)", "(((..).)((..).))")
    }

    /// Correction of the braiding on the summand indexed by the split `(u, k)`.
    pub fn braid_twist(&self, u: usize, k: usize) -> usize {
        self.potential_difference(&[u, k, self.inv(u), u], "(.(.(..)))", "(((..).).)")
    }

    /// The canonical iso `(hg)g⁻¹ → h`.
    pub fn cancel_right(&self, g: usize, h: usize) -> usize {
        let a = self.pi2();
        a.neg(a.add(self.alpha(h, g, self.inv(g)), self.act(h, self.coev(g))))
    }

    /// Associator discrepancy picked up by the modular S move at (g, h).
    pub fn modular_defect(&self, g: usize, h: usize) -> usize {
        let gi = self.inv(g);
        let a = self.pi2();
        a.sum([self.alpha(gi, h, g), a.neg(self.alpha(h, gi, g)), a.neg(self.alpha(gi, g, h))])
    }
}
