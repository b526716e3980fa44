//! `U_q(sl_{N+1})` with weight-lattice Cartan part.
//!
//! Elements are kept in the triangular normal form `Σ c · F_w K_λ E_w'`
//! where `w`, `w'` are irreducible for the completed Serre rewriting system.
//! The E- and F-sides satisfy the same relations, so they share one rule set.
//!
//! Levi membership: the normal E-words without the letter `N` are exactly
//! the irreducible words of the Levi subalgebra's positive part (the Serre
//! system restricted to letters `< N` is closed under overlaps and never
//! introduces `N`), so an element lies in `U_q(l)` iff none of its normal
//! monomials uses `E_N` or `F_N`.

mod element;
mod gb;
mod hopf;
mod weight;

use std::sync::{Arc, Mutex};

use rustc_hash::FxHashMap;

use crate::error::{AlgebraError, Result};
use crate::freealg::{NCPoly, Side, Word};
use crate::scalar::{q_minus_q_inv, Scalar};

pub use element::{render_term, Grading, TriMonomial, UqElement};
pub use gb::{serre_relations, RewriteSystem, Rule};
pub use hopf::Tensor;
pub use weight::{WeightVec, MAX_RANK};

/// A generator symbol in an unnormalized expression.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gen {
    E(u8),
    F(u8),
    K(WeightVec),
}

/// A sum of scaled products of generators, not yet normal-formed.
#[derive(Clone, Debug, Default)]
pub struct Expr {
    pub terms: Vec<(Scalar, Vec<Gen>)>,
}

impl Expr {
    pub fn product(gens: Vec<Gen>) -> Self {
        Self {
            terms: vec![(Scalar::one(), gens)],
        }
    }

    pub fn plus(mut self, c: Scalar, gens: Vec<Gen>) -> Self {
        self.terms.push((c, gens));
        self
    }
}

type EfTerms = Arc<Vec<(Word, WeightVec, Word, Scalar)>>;

/// Computational context: rank, degree bound, rewriting systems and caches.
pub struct Uq {
    rank: usize,
    bound: usize,
    esys: RewriteSystem,
    fsys: RewriteSystem,
    ef_cache: Mutex<FxHashMap<(Word, Word), EfTerms>>,
    inv_qmq: Scalar,
}

impl std::fmt::Debug for Uq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Uq")
            .field("rank", &self.rank)
            .field("bound", &self.bound)
            .field("rules", &self.esys.rules().len())
            .finish()
    }
}

impl Uq {
    /// Default completion bound for rank `n`.
    pub fn default_bound(rank: usize) -> usize {
        2 * rank + 4
    }

    pub fn new(rank: usize, bound: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(AlgebraError::InvalidRank(rank));
        }
        if bound < 3 {
            return Err(AlgebraError::Unsupported(format!(
                "degree bound {bound} is below the minimum 3"
            )));
        }
        let esys = RewriteSystem::complete(Side::E, rank, bound);
        let fsys = esys.with_side(Side::F);
        Ok(Self {
            rank,
            bound,
            esys,
            fsys,
            ef_cache: Mutex::new(FxHashMap::default()),
            inv_qmq: q_minus_q_inv().inv()?,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn system(&self, side: Side) -> &RewriteSystem {
        match side {
            Side::E => &self.esys,
            Side::F => &self.fsys,
        }
    }

    fn check_index(&self, i: u8) -> Result<()> {
        if i == 0 || i as usize > self.rank {
            return Err(AlgebraError::IndexOutOfRange {
                index: i as usize,
                rank: self.rank,
            });
        }
        Ok(())
    }

    pub fn alpha(&self, i: usize) -> WeightVec {
        WeightVec::simple_root(self.rank, i)
    }

    pub fn e(&self, i: u8) -> UqElement {
        self.check_index(i).expect("generator index");
        UqElement::monomial(
            TriMonomial::new(Word::empty(), WeightVec::zero(), Word::letter(i)),
            Scalar::one(),
        )
    }

    pub fn f(&self, i: u8) -> UqElement {
        self.check_index(i).expect("generator index");
        UqElement::monomial(
            TriMonomial::new(Word::letter(i), WeightVec::zero(), Word::empty()),
            Scalar::one(),
        )
    }

    pub fn k(&self, lambda: WeightVec) -> UqElement {
        UqElement::cartan(lambda)
    }

    /// `K_{±α_i}`.
    pub fn k_alpha(&self, i: usize, sign: i32) -> UqElement {
        UqElement::cartan(self.alpha(i).scale(sign))
    }

    /// Builds `F_fw K_λ E_ew` from arbitrary words, normal-forming each side.
    pub fn triangular(&self, fw: &[u8], lambda: WeightVec, ew: &[u8]) -> Result<UqElement> {
        for &i in fw.iter().chain(ew) {
            self.check_index(i)?;
        }
        let deg = fw.len().max(ew.len());
        if deg > self.bound {
            return Err(AlgebraError::DegreeBoundExceeded {
                degree: deg,
                bound: self.bound,
            });
        }
        let fp = self.fsys.nf_word(&Word::from_slice(fw));
        let ep = self.esys.nf_word(&Word::from_slice(ew));
        Ok(tensor_sides(&fp, lambda, &ep, &Scalar::one()))
    }

    /// Normal form of a one-sided polynomial embedded in `U_q`.
    pub fn from_ncpoly(&self, side: Side, p: &NCPoly) -> UqElement {
        let mut out = UqElement::zero();
        for (w, c) in self.system(side).normal_form(p).into_terms() {
            let m = match side {
                Side::E => TriMonomial::new(Word::empty(), WeightVec::zero(), w),
                Side::F => TriMonomial::new(w, WeightVec::zero(), Word::empty()),
            };
            out.add_term(m, &c);
        }
        out
    }

    pub fn normal_form(&self, expr: &Expr) -> Result<UqElement> {
        let mut out = UqElement::zero();
        for (c, gens) in &expr.terms {
            let ne = gens.iter().filter(|g| matches!(g, Gen::E(_))).count();
            let nf = gens.iter().filter(|g| matches!(g, Gen::F(_))).count();
            let deg = ne.max(nf);
            if deg > self.bound {
                return Err(AlgebraError::DegreeBoundExceeded {
                    degree: deg,
                    bound: self.bound,
                });
            }
            let mut acc = UqElement::scalar(c.clone());
            for g in gens {
                let x = match g {
                    Gen::E(i) => {
                        self.check_index(*i)?;
                        self.e(*i)
                    }
                    Gen::F(i) => {
                        self.check_index(*i)?;
                        self.f(*i)
                    }
                    Gen::K(l) => self.k(*l),
                };
                acc = self.mul(&acc, &x)?;
            }
            out.add_scaled(&acc, &Scalar::one());
        }
        Ok(out)
    }

    /// Straightens `E_e · F_f` (raw words) into `Σ c · F_{f'} K_μ E_{e'}` with
    /// raw subwords `f'`, `e'`.
    fn ef(&self, e: &[u8], f: &[u8]) -> EfTerms {
        if e.is_empty() || f.is_empty() {
            return Arc::new(vec![(
                Word::from_slice(f),
                WeightVec::zero(),
                Word::from_slice(e),
                Scalar::one(),
            )]);
        }
        let key = (Word::from_slice(e), Word::from_slice(f));
        if let Some(hit) = self.ef_cache.lock().unwrap().get(&key) {
            return hit.clone();
        }
        let (e0, i) = (&e[..e.len() - 1], e[e.len() - 1]);
        let alpha = self.alpha(i as usize);
        let mut acc: FxHashMap<(Word, WeightVec, Word), Scalar> = FxHashMap::default();
        let mut push = |k: (Word, WeightVec, Word), c: Scalar| {
            let entry = acc.entry(k).or_default();
            *entry += &c;
        };
        for (fw, mu, ew, c) in self.ef(e0, f).iter() {
            let mut ew2 = ew.clone();
            ew2.0.push(i);
            push((fw.clone(), *mu, ew2), c.clone());
        }
        for p in 0..f.len() {
            if f[p] != i {
                continue;
            }
            let mut g = Word::from_slice(&f[..p]);
            g.0.extend_from_slice(&f[p + 1..]);
            let a = alpha.pair_letters(&f[p + 1..]);
            for (fw, mu, ew, c) in self.ef(e0, g.as_slice()).iter() {
                let b = alpha.pair_letters(ew.as_slice());
                let base = c * &self.inv_qmq;
                push((fw.clone(), *mu + alpha, ew.clone()), base.shift_v(-2 * (a + b)));
                push((fw.clone(), *mu - alpha, ew.clone()), -base.shift_v(2 * (a + b)));
            }
        }
        let mut terms: Vec<_> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|((fw, mu, ew), c)| (fw, mu, ew, c))
            .collect();
        terms.sort_by(|x, y| (&x.0, &x.1, &x.2).cmp(&(&y.0, &y.1, &y.2)));
        let terms = Arc::new(terms);
        self.ef_cache.lock().unwrap().insert(key, terms.clone());
        terms
    }

    fn mul_mono_into(
        &self,
        m1: &TriMonomial,
        m2: &TriMonomial,
        coeff: &Scalar,
        out: &mut FxHashMap<TriMonomial, Scalar>,
    ) {
        for (fp, mu, ep, c) in self.ef(m1.eword.as_slice(), m2.fword.as_slice()).iter() {
            let shift = m1.cartan.pair_letters(fp.as_slice()) + m2.cartan.pair_letters(ep.as_slice());
            let c = (coeff * c).shift_v(-2 * shift);
            let fw = m1.fword.concat(fp);
            let ew = ep.concat(&m2.eword);
            let lambda = m1.cartan + *mu + m2.cartan;
            let fpoly = self.fsys.nf_word(&fw);
            let epoly = self.esys.nf_word(&ew);
            for (fwn, fc) in fpoly.terms() {
                let cf = &c * fc;
                for (ewn, ec) in epoly.terms() {
                    let m = TriMonomial::new(fwn.clone(), lambda, ewn.clone());
                    let entry = out.entry(m).or_default();
                    *entry += &(&cf * ec);
                }
            }
        }
    }

    fn check_product_degree(&self, a: &UqElement, b: &UqElement) -> Result<()> {
        let (fa, ea) = a.degrees();
        let (fb, eb) = b.degrees();
        let deg = (fa + fb).max(ea + eb);
        if deg > self.bound {
            return Err(AlgebraError::DegreeBoundExceeded {
                degree: deg,
                bound: self.bound,
            });
        }
        Ok(())
    }

    pub fn mul(&self, a: &UqElement, b: &UqElement) -> Result<UqElement> {
        self.check_product_degree(a, b)?;
        let mut out: FxHashMap<TriMonomial, Scalar> = FxHashMap::default();
        for (m1, c1) in a.terms() {
            for (m2, c2) in b.terms() {
                self.mul_mono_into(m1, m2, &(c1 * c2), &mut out);
            }
        }
        Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    pub fn mul_all(&self, factors: &[&UqElement]) -> Result<UqElement> {
        let mut acc = UqElement::one();
        for x in factors {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(&self, a: &UqElement, b: &UqElement) -> Result<UqElement> {
        Ok(self.mul(a, b)?.sub(&self.mul(b, a)?))
    }

    pub fn is_levi(&self, x: &UqElement) -> bool {
        x.is_levi(self.rank)
    }

    pub fn equals_mod_levi(&self, x: &UqElement, y: &UqElement) -> bool {
        x.sub(y).is_levi(self.rank)
    }

    pub fn weight(&self, x: &UqElement) -> Grading {
        x.weight(self.rank)
    }

    pub fn render(&self, x: &UqElement) -> String {
        x.render(self.rank)
    }
}

fn tensor_sides(fp: &NCPoly, lambda: WeightVec, ep: &NCPoly, c: &Scalar) -> UqElement {
    let mut out = UqElement::zero();
    for (fw, fc) in fp.terms() {
        for (ew, ec) in ep.terms() {
            out.add_term(
                TriMonomial::new(fw.clone(), lambda, ew.clone()),
                &(&(c * fc) * ec),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn uq(n: usize) -> Uq {
        Uq::new(n, Uq::default_bound(n)).unwrap()
    }

    #[test]
    fn ef_relation() {
        let u = uq(2);
        let lhs = u.mul(&u.e(1), &u.f(1)).unwrap();
        let k = u.k_alpha(1, 1).sub(&u.k_alpha(1, -1));
        let rhs = u
            .mul(&u.f(1), &u.e(1))
            .unwrap()
            .add(&k.scale(&q_minus_q_inv().inv().unwrap()));
        assert_eq!(lhs, rhs);
        assert_eq!(u.mul(&u.e(1), &u.f(2)).unwrap(), u.mul(&u.f(2), &u.e(1)).unwrap());
    }

    #[test]
    fn cartan_conjugation() {
        let u = uq(2);
        let x = u.mul_all(&[&u.k_alpha(1, 1), &u.e(1), &u.k_alpha(1, -1)]).unwrap();
        assert_eq!(x, u.e(1).scale(&Scalar::q_pow(2)));
        let y = u.mul_all(&[&u.k_alpha(1, 1), &u.f(2), &u.k_alpha(1, -1)]).unwrap();
        assert_eq!(y, u.f(2).scale(&Scalar::q_pow(1)));
    }

    #[test]
    fn degree_bound_is_enforced() {
        let u = Uq::new(2, 3).unwrap();
        let e = u.e(1);
        let ee = u.mul(&e, &e).unwrap();
        let eee = u.mul(&ee, &e).unwrap();
        assert!(matches!(
            u.mul(&eee, &e),
            Err(AlgebraError::DegreeBoundExceeded { degree: 4, bound: 3 })
        ));
        let expr = Expr::product(vec![Gen::F(1); 4]);
        assert!(u.normal_form(&expr).is_err());
    }

    #[test]
    fn invalid_construction() {
        assert!(matches!(Uq::new(0, 5), Err(AlgebraError::InvalidRank(0))));
        assert!(Uq::new(2, 2).is_err());
        let u = uq(2);
        assert!(u.normal_form(&Expr::product(vec![Gen::E(3)])).is_err());
    }

    #[test]
    fn rendering() {
        let u = uq(2);
        let x = u.mul(&u.e(1), &u.f(1)).unwrap();
        assert_eq!(
            u.render(&x),
            "F1*E1 + ((v^2)/(v^4 - 1))*K[2,-1] + ((-v^2)/(v^4 - 1))*K[-2,1]"
        );
    }
}
