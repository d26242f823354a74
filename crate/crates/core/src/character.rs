//! Characters in the group algebra `Z[P]`, Demazure operators `D_i` and
//! `D_w`, the crystal-level operator on formal sums of crystal elements,
//! and the map `ewt` between the two.

use std::collections::BTreeMap;
use std::fmt;

use crate::crystal::{CrystalContext, ZVector};
use crate::error::{Error, Result};
use crate::rootdata::{write_offsets, CartanMatrix, Weight, WeylWord};

/// `sum coeff * e^(anchor - sum_j c_j alpha_j)`, keyed by the offset `c`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterElement {
    anchor: Weight,
    terms: BTreeMap<Vec<i64>, i64>,
}

impl CharacterElement {
    pub fn zero(anchor: Weight) -> Self {
        Self {
            anchor,
            terms: BTreeMap::new(),
        }
    }

    /// `e^anchor`.
    pub fn highest(anchor: Weight) -> Self {
        let mut out = Self::zero(anchor);
        let n = out.anchor.rank();
        out.add_term(vec![0; n], 1);
        out
    }

    pub fn anchor(&self) -> &Weight {
        &self.anchor
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, i64> {
        &self.terms
    }

    pub fn coeff(&self, offset: &[i64]) -> i64 {
        self.terms.get(offset).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, offset: Vec<i64>, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let v = self.terms.get(&offset).copied().unwrap_or(0) + coeff;
        if v == 0 {
            self.terms.remove(&offset);
        } else {
            self.terms.insert(offset, v);
        }
    }

    pub fn add(&mut self, other: &CharacterElement) -> Result<()> {
        if other.anchor != self.anchor {
            return Err(Error::AnchorMismatch);
        }
        for (c, v) in &other.terms {
            self.add_term(c.clone(), *v);
        }
        Ok(())
    }
}

impl fmt::Display for CharacterElement {
    /// Terms in offset order, as `coeff * e[λ - c1*a1 - ...]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (c, v)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{v} * e[λ")?;
            write_offsets(f, c)?;
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// `D_i`, linear over monomials. On `e^mu` with `m = <h_i, mu>`: the sum of
/// `e^(mu - k alpha_i)` for `0 <= k <= m`; zero for `m = -1`; minus the sum
/// of `e^(mu + k alpha_i)` for `1 <= k <= -m - 1` when `m <= -2`.
pub fn demazure_d_i(
    cartan: &CartanMatrix,
    i: usize,
    chi: &CharacterElement,
) -> Result<CharacterElement> {
    cartan.check_index(i)?;
    if chi.anchor.rank() != cartan.rank() {
        return Err(Error::RankMismatch {
            expected: cartan.rank(),
            found: chi.anchor.rank(),
        });
    }
    let base = chi.anchor.coeffs();
    let mut out = CharacterElement::zero(chi.anchor.clone());
    for (c, &v) in &chi.terms {
        let m = cartan.pairing_parts(i, base, c);
        let shifted = |k: i64| {
            let mut d = c.clone();
            d[i - 1] += k;
            d
        };
        if m >= 0 {
            for k in 0..=m {
                out.add_term(shifted(k), v);
            }
        } else {
            for k in 1..=(-m - 1) {
                out.add_term(shifted(-k), -v);
            }
        }
    }
    Ok(out)
}

/// `D_w = D_{i_L} ... D_{i_1}`; the word must be reduced.
pub fn demazure_d_w(
    cartan: &CartanMatrix,
    word: &WeylWord,
    chi: &CharacterElement,
) -> Result<CharacterElement> {
    if !cartan.is_reduced(word)? {
        return Err(Error::NotReduced(word.letters().to_vec()));
    }
    let mut out = chi.clone();
    for &i in word.letters() {
        out = demazure_d_i(cartan, i, &out)?;
    }
    Ok(out)
}

/// A finite formal integer combination of crystal elements.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrystalSum {
    terms: BTreeMap<ZVector, i64>,
}

impl CrystalSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(b: ZVector) -> Self {
        let mut s = Self::new();
        s.add_term(b, 1);
        s
    }

    pub fn add_term(&mut self, b: ZVector, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let v = *self.terms.entry(b.clone()).or_insert(0) + coeff;
        if v == 0 {
            self.terms.remove(&b);
        } else {
            self.terms.insert(b, v);
        }
    }

    pub fn terms(&self) -> &BTreeMap<ZVector, i64> {
        &self.terms
    }

    pub fn coeff(&self, b: &ZVector) -> i64 {
        self.terms.get(b).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The crystal operator: `b` goes to the sum of `f_i^k b` for
/// `0 <= k <= <h_i, wt b>`, or to minus the sum of `e_i^k b` for
/// `1 <= k < -<h_i, wt b>`. Every operator application in range must be
/// defined.
pub fn crystal_demazure_di(ctx: &CrystalContext, i: usize, s: &CrystalSum) -> Result<CrystalSum> {
    let mut out = CrystalSum::new();
    for (b, &v) in &s.terms {
        let m = ctx.cartan().pairing(i, &ctx.wt(b))?;
        let vanished =
            |k: i64| Error::Inconsistency(format!("operator {i} vanished at step {k} from {b}"));
        if m >= 0 {
            let mut y = b.clone();
            out.add_term(y.clone(), v);
            for k in 1..=m {
                y = ctx.f_tilde(i, &y)?.ok_or_else(|| vanished(k))?;
                out.add_term(y.clone(), v);
            }
        } else {
            let mut y = b.clone();
            for k in 1..(-m) {
                y = ctx.e_tilde(i, &y)?.ok_or_else(|| vanished(k))?;
                out.add_term(y.clone(), -v);
            }
        }
    }
    Ok(out)
}

/// The operator chain along a word, applied to the highest element.
pub fn crystal_demazure_chain(ctx: &CrystalContext, word: &WeylWord) -> Result<CrystalSum> {
    let mut s = CrystalSum::single(ZVector::zero());
    for &i in word.letters() {
        s = crystal_demazure_di(ctx, i, &s)?;
    }
    Ok(s)
}

fn anchor_of(ctx: &CrystalContext) -> Weight {
    match ctx.lambda() {
        Ok(l) => l.clone(),
        Err(_) => Weight::zero(ctx.rank()),
    }
}

/// `ewt(b) = e^(wt b)`, extended additively.
pub fn ewt(ctx: &CrystalContext, s: &CrystalSum) -> CharacterElement {
    let mut out = CharacterElement::zero(anchor_of(ctx));
    for (b, &v) in &s.terms {
        out.add_term(ctx.wt(b).c, v);
    }
    out
}

/// The character `sum_{b in set} e^(wt b)`.
pub fn character_of<'a>(
    ctx: &CrystalContext,
    set: impl IntoIterator<Item = &'a ZVector>,
) -> CharacterElement {
    let mut out = CharacterElement::zero(anchor_of(ctx));
    for b in set {
        out.add_term(ctx.wt(b).c, 1);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crystal::{demazure_crystal, enumerate_image, Budget};
    use crate::sequence::{IotaSequence, IotaSpec};

    fn ctx(cartan: CartanMatrix, lambda: Vec<i64>) -> CrystalContext {
        let iota = IotaSequence::new(IotaSpec::new(vec![], vec![1, 2]), &cartan).unwrap();
        CrystalContext::with_weight(cartan, iota, Weight::new(lambda)).unwrap()
    }

    fn word(letters: &[usize]) -> WeylWord {
        WeylWord::new(letters.to_vec(), 2).unwrap()
    }

    fn lambda1_rep() -> CharacterElement {
        let mut e = CharacterElement::highest(Weight::new(vec![1, 0]));
        e.add_term(vec![1, 0], 1);
        e.add_term(vec![1, 1], 1);
        e
    }

    #[test]
    fn d_i_cases() {
        let a = CartanMatrix::type_a(2);
        let lam = Weight::new(vec![1, 0]);
        let e = CharacterElement::highest(lam.clone());
        // m = 0 at i = 2
        assert_eq!(demazure_d_i(&a, 2, &e).unwrap(), e);
        let mut expected = e.clone();
        expected.add_term(vec![1, 0], 1);
        assert_eq!(demazure_d_i(&a, 1, &e).unwrap(), expected);

        // m = -1
        let mut neg = CharacterElement::zero(lam.clone());
        neg.add_term(vec![1, 0], 1);
        assert!(demazure_d_i(&a, 1, &neg).unwrap().is_zero());

        // m = -3: e^{mu} -> -(e^{mu + a1} + e^{mu + 2a1})
        let mut deep = CharacterElement::zero(Weight::new(vec![1, 0]));
        deep.add_term(vec![2, 0], 1);
        let out = demazure_d_i(&a, 1, &deep).unwrap();
        let mut expected = CharacterElement::zero(Weight::new(vec![1, 0]));
        expected.add_term(vec![1, 0], -1);
        expected.add_term(vec![0, 0], -1);
        assert_eq!(out, expected);
    }

    #[test]
    fn d_w_examples() {
        let a = CartanMatrix::type_a(2);
        let e = CharacterElement::highest(Weight::new(vec![1, 0]));
        assert_eq!(demazure_d_w(&a, &WeylWord::empty(), &e).unwrap(), e);
        assert_eq!(
            demazure_d_w(&a, &word(&[1, 2, 1]), &e).unwrap(),
            lambda1_rep()
        );
        assert!(matches!(
            demazure_d_w(&a, &word(&[1, 1]), &e),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn d_i_is_idempotent() {
        for (c1, c2) in [(1, 1), (1, 2), (2, 2)] {
            let a = CartanMatrix::rank2(c1, c2).unwrap();
            let lam = Weight::new(vec![2, 1]);
            let mut chi = CharacterElement::highest(lam.clone());
            chi.add_term(vec![1, 0], 3);
            chi.add_term(vec![2, 3], -1);
            chi.add_term(vec![0, 4], 2);
            for i in 1..=2 {
                let once = demazure_d_i(&a, i, &chi).unwrap();
                assert_eq!(demazure_d_i(&a, i, &once).unwrap(), once);
            }
        }
    }

    #[test]
    fn d_w_independent_of_reduced_word() {
        let e = CharacterElement::highest(Weight::new(vec![2, 1]));
        let a = CartanMatrix::type_a(2);
        assert_eq!(
            demazure_d_w(&a, &word(&[1, 2, 1]), &e).unwrap(),
            demazure_d_w(&a, &word(&[2, 1, 2]), &e).unwrap()
        );
        let b2 = CartanMatrix::rank2(1, 2).unwrap();
        assert_eq!(
            demazure_d_w(&b2, &word(&[1, 2, 1, 2]), &e).unwrap(),
            demazure_d_w(&b2, &word(&[2, 1, 2, 1]), &e).unwrap()
        );
    }

    #[test]
    fn crystal_operator_examples() {
        let c = ctx(CartanMatrix::type_a(2), vec![1, 0]);
        let u = CrystalSum::single(ZVector::zero());
        let out = crystal_demazure_di(&c, 1, &u).unwrap();
        let mut expected = u.clone();
        expected.add_term(ZVector::from_dense(vec![1]), 1);
        assert_eq!(out, expected);
        assert_eq!(crystal_demazure_di(&c, 2, &u).unwrap(), u);
        // <h_1, wt> = -1 at f_1 u
        let b = CrystalSum::single(ZVector::from_dense(vec![1]));
        assert!(crystal_demazure_di(&c, 1, &b).unwrap().is_zero());
    }

    #[test]
    fn ewt_intertwines() {
        for (cart, lam) in [
            (CartanMatrix::type_a(2), vec![2, 1]),
            (CartanMatrix::rank2(1, 2).unwrap(), vec![1, 1]),
        ] {
            let c = ctx(cart.clone(), lam);
            let all = enumerate_image(&c, Budget::unlimited()).unwrap().points;
            let mut s = CrystalSum::new();
            for (n, b) in all.iter().enumerate() {
                s.add_term(b.clone(), (n as i64 % 5) - 2);
            }
            for i in 1..=2 {
                let left = ewt(&c, &crystal_demazure_di(&c, i, &s).unwrap());
                let right = demazure_d_i(&cart, i, &ewt(&c, &s)).unwrap();
                assert_eq!(left, right);
            }
        }
    }

    #[test]
    fn character_examples() {
        let c = ctx(CartanMatrix::type_a(2), vec![1, 0]);
        assert_eq!(
            character_of(&c, &[ZVector::zero()]),
            CharacterElement::highest(Weight::new(vec![1, 0]))
        );
        let all = enumerate_image(&c, Budget::unlimited()).unwrap().points;
        assert_eq!(character_of(&c, &all), lambda1_rep());
        let mut s = CrystalSum::single(ZVector::zero());
        s.add_term(ZVector::from_dense(vec![1]), 1);
        let mut sum = ewt(&c, &CrystalSum::single(ZVector::zero()));
        sum.add(&ewt(&c, &CrystalSum::single(ZVector::from_dense(vec![1]))))
            .unwrap();
        assert_eq!(ewt(&c, &s), sum);
    }

    #[test]
    fn chain_and_character_formula() {
        let c = ctx(CartanMatrix::type_a(2), vec![1, 1]);
        let e = CharacterElement::highest(Weight::new(vec![1, 1]));
        for w in [&[][..], &[1], &[1, 2], &[1, 2, 1]] {
            let w = word(w);
            let set = demazure_crystal(&c, &w).unwrap();
            assert_eq!(
                character_of(&c, &set),
                demazure_d_w(c.cartan(), &w, &e).unwrap()
            );
            let chain = crystal_demazure_chain(&c, &w).unwrap();
            assert_eq!(chain.terms().len(), set.len());
            assert!(set.iter().all(|b| chain.coeff(b) == 1));
        }
    }

    #[test]
    fn display_format() {
        assert_eq!(
            lambda1_rep().to_string(),
            "1 * e[λ] + 1 * e[λ - 1*a1] + 1 * e[λ - 1*a1 - 1*a2]"
        );
        assert_eq!(
            CharacterElement::zero(Weight::new(vec![0])).to_string(),
            "0"
        );
    }
}
