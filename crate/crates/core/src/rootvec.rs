//! Quantum root vectors `E_{ξ_i}` for the radical roots `ξ_i = α_i + … + α_N`,
//! their images `𝓔_i = S^{-1}(E_{ξ_i})`, and the identities they satisfy.

use crate::error::{AlgebraError, Result};
use crate::identity::Identity;
use crate::scalar::{q_minus_q_inv, Scalar};
use crate::uqalg::{Uq, UqElement, WeightVec};

/// One step `T_i` of the Lusztig braid action, on E-polynomials whose
/// letters all differ from `i`.
pub fn lusztig_t(uq: &Uq, i: u8, x: &UqElement) -> Result<UqElement> {
    let mut out = UqElement::zero();
    for (m, c) in x.terms() {
        if !m.fword.is_empty() || !m.cartan.is_zero() {
            return Err(AlgebraError::Unsupported(
                "Lusztig step only implemented on E-polynomials".into(),
            ));
        }
        if m.eword.as_slice().contains(&i) {
            return Err(AlgebraError::Unsupported(format!(
                "Lusztig step T_{i} applied to a word containing E_{i}"
            )));
        }
        let mut acc = UqElement::scalar(c.clone());
        for &j in m.eword.as_slice() {
            acc = uq.mul(&acc, &t_on_generator(uq, i, j)?)?;
        }
        out.add_scaled(&acc, &Scalar::one());
    }
    Ok(out)
}

fn t_on_generator(uq: &Uq, i: u8, j: u8) -> Result<UqElement> {
    if i.abs_diff(j) > 1 {
        return Ok(uq.e(j));
    }
    // a_ij = -1: T_i(E_j) = -E_iE_j + q^{-1}E_jE_i
    Ok(uq
        .e_word(&[i, j])?
        .neg()
        .add(&uq.e_word(&[j, i])?.scale(&Scalar::q_pow(-1))))
}

/// `q^{-1}`-twisted recursion step `-a b + q^{-1} b a`.
fn twisted(uq: &Uq, a: &UqElement, b: &UqElement) -> Result<UqElement> {
    Ok(uq
        .mul(a, b)?
        .neg()
        .add(&uq.mul(b, a)?.scale(&Scalar::q_pow(-1))))
}

#[derive(Clone, Debug)]
pub struct RootVectorSet {
    pub rank: usize,
    /// `E_{ξ_1}, …, E_{ξ_N}` (0-based storage).
    pub xi: Vec<UqElement>,
    pub xi_star: Vec<UqElement>,
    /// `𝓔_i = S^{-1}(E_{ξ_i})`.
    pub cal: Vec<UqElement>,
    pub cal_star: Vec<UqElement>,
}

impl RootVectorSet {
    /// Builds the root vectors through the Lusztig chain `T_i⋯T_{N-1}(E_N)`
    /// and through the recursion, and checks that both agree.
    pub fn build(uq: &Uq) -> Result<Self> {
        let n = uq.rank();
        let mut by_recursion = vec![UqElement::zero(); n];
        by_recursion[n - 1] = uq.e(n as u8);
        for i in (1..n).rev() {
            by_recursion[i - 1] = twisted(uq, &uq.e(i as u8), &by_recursion[i])?;
        }
        for i in 1..=n {
            let mut x = uq.e(n as u8);
            for t in (i..n).rev() {
                x = lusztig_t(uq, t as u8, &x)?;
            }
            if x != by_recursion[i - 1] {
                return Err(AlgebraError::Unsupported(format!(
                    "internal inconsistency: Lusztig chain and recursion disagree for xi_{i}"
                )));
            }
        }
        let xi = by_recursion;
        let xi_star = xi.iter().map(|x| uq.star(x)).collect::<Result<Vec<_>>>()?;
        let cal = xi.iter().map(|x| uq.antipode_inv(x)).collect::<Result<Vec<_>>>()?;
        let cal_star = cal.iter().map(|x| uq.star(x)).collect::<Result<Vec<_>>>()?;
        Ok(Self {
            rank: n,
            xi,
            xi_star,
            cal,
            cal_star,
        })
    }

    /// `E_{ξ_i}` (1-based).
    pub fn e_xi(&self, i: usize) -> &UqElement {
        &self.xi[i - 1]
    }

    pub fn e_xi_star(&self, i: usize) -> &UqElement {
        &self.xi_star[i - 1]
    }

    /// `𝓔_i` (1-based).
    pub fn cal_e(&self, i: usize) -> &UqElement {
        &self.cal[i - 1]
    }

    pub fn cal_e_star(&self, i: usize) -> &UqElement {
        &self.cal_star[i - 1]
    }

    /// `ξ_i` as a root-lattice content vector.
    pub fn xi_root(&self, i: usize) -> Vec<i32> {
        (1..=self.rank).map(|j| i32::from(j >= i)).collect()
    }

    /// Coefficients of `x` in the basis `ẽ_a = v^{-a} E_{ξ_a}`, or `None`
    /// when `x` is not in their span.
    pub fn coordinates(&self, x: &UqElement) -> Option<Vec<Scalar>> {
        let mut rest = x.clone();
        let mut coords = Vec::with_capacity(self.rank);
        for a in 1..=self.rank {
            let e_tilde = self.e_xi(a).scale(&Scalar::v_pow(-(a as i32)));
            let (lead, lc) = e_tilde.terms().next_back().expect("nonzero root vector");
            let c = &x.coeff(lead) / lc;
            rest.add_scaled(&e_tilde, &-&c);
            coords.push(c);
        }
        rest.is_zero().then_some(coords)
    }

    /// Every identity of the root-vector suite, as residuals that must vanish
    /// exactly or modulo the Levi subalgebra.
    pub fn identities(&self, uq: &Uq) -> Result<Vec<Identity>> {
        let n = self.rank;
        let mut out = Vec::new();
        let qmq = q_minus_q_inv();
        let q = |k: i32| Scalar::q_pow(k);
        for i in 1..n {
            let ka = uq.k_alpha(i, 1);
            let lhs = uq.mul(self.e_xi(i + 1), &ka)?;
            let rhs = uq.mul(&ka, self.e_xi(i + 1))?.scale(&q(1));
            out.push(Identity::exact(format!("xi_cartan[{i}]"), lhs.sub(&rhs)));

            let comm = uq.commutator(&uq.f(i as u8), self.e_xi(i))?;
            let rhs = uq.mul(&uq.k_alpha(i, -1), self.e_xi(i + 1))?.scale(&-q(-1));
            out.push(Identity::exact(format!("f_commutator[{i}]"), comm.sub(&rhs)));

            let ei = uq.e(i as u8);
            let lhs = uq
                .mul(self.e_xi_star(i), &ei)?
                .sub(&uq.mul(&ei, self.e_xi_star(i))?.scale(&q(1)));
            let rhs = self.e_xi_star(i + 1).scale(&-q(-1));
            out.push(Identity::exact(format!("star_commutator[{i}]"), lhs.sub(&rhs)));
        }
        for i in 1..=n {
            for j in 1..=n {
                if i == j {
                    continue;
                }
                let lhs = uq.mul(self.e_xi_star(i), self.e_xi(j))?;
                let rhs = uq.mul(self.e_xi(j), self.e_xi_star(i))?.scale(&q(1));
                out.push(Identity::mod_levi(format!("xi_star_xi[{i},{j}]"), lhs.sub(&rhs)));

                // Holds with factor q; the q^{-1} variant leaves a non-Levi residual.
                let lhs = uq.mul(self.cal_e(i), self.cal_e_star(j))?;
                let rhs = uq.mul(self.cal_e_star(j), self.cal_e(i))?.scale(&q(1));
                out.push(Identity::mod_levi(format!("cal_cal_star[{i},{j}]"), lhs.sub(&rhs)));
            }
        }
        for i in 1..=n {
            let mut r = uq
                .mul(self.e_xi(i), self.e_xi_star(i))?
                .sub(&uq.mul(self.e_xi_star(i), self.e_xi(i))?.scale(&q(-2)));
            let mut s = uq
                .mul(self.cal_e_star(i), self.cal_e(i))?
                .sub(&uq.mul(self.cal_e(i), self.cal_e_star(i))?.scale(&q(-2)));
            let pref = &q(-1) * &qmq;
            for k in i + 1..=n {
                let d = (i as i32) - (k as i32);
                let t = uq.mul(self.e_xi_star(k), self.e_xi(k))?;
                r.add_scaled(&t, &(&pref * &q(3 * d)));
                let t = uq.mul(self.cal_e(k), self.cal_e_star(k))?;
                s.add_scaled(&t, &(&pref * &q(d)));
            }
            out.push(Identity::mod_levi(format!("xi_diagonal[{i}]"), r));
            out.push(Identity::mod_levi(format!("cal_diagonal[{i}]"), s));

            let lhs = uq.antipode(self.e_xi(i))?;
            let rhs = self.cal_e(i).scale(&q(-2 * (n as i32 - i as i32 + 1)));
            out.push(Identity::exact(format!("antipode_square[{i}]"), lhs.sub(&rhs)));

            for j in 1..n {
                let act = uq.adjoint_action(&uq.e(j as u8), self.e_xi(i))?;
                let expected = if j + 1 == i {
                    self.e_xi(i - 1).neg()
                } else {
                    UqElement::zero()
                };
                out.push(Identity::exact(format!("adjoint_e[{j}->{i}]"), act.sub(&expected)));
                let act = uq.adjoint_action(&uq.f(j as u8), self.e_xi(i))?;
                let expected = if j == i {
                    self.e_xi(i + 1).neg()
                } else {
                    UqElement::zero()
                };
                out.push(Identity::exact(format!("adjoint_f[{j}->{i}]"), act.sub(&expected)));
            }
            for lambda in sample_weights(n) {
                let act = uq.adjoint_action(&uq.k(lambda), self.e_xi(i))?;
                let e = lambda.pair_root(&self.xi_root(i));
                out.push(Identity::exact(
                    format!("adjoint_k[{}->{i}]", lambda.render(n)),
                    act.sub(&self.e_xi(i).scale(&q(e))),
                ));
            }
        }
        Ok(out)
    }

    /// Checks `(ẽ_a, X ▷ ẽ_b) = (X* ▷ ẽ_a, ẽ_b)` for the Levi generators and
    /// sample Cartan elements; returns the failing generator names.
    pub fn orthonormality_failures(&self, uq: &Uq) -> Result<Vec<String>> {
        let n = self.rank;
        let mut gens: Vec<(String, UqElement)> = Vec::new();
        for j in 1..n {
            gens.push((format!("E{j}"), uq.e(j as u8)));
            gens.push((format!("F{j}"), uq.f(j as u8)));
        }
        for l in sample_weights(n) {
            gens.push((l.render(n), uq.k(l)));
        }
        let mut failures = Vec::new();
        for (name, x) in gens {
            let xs = uq.star(&x)?;
            let m = self.action_matrix(uq, &x)?;
            let ms = self.action_matrix(uq, &xs)?;
            let (Some(m), Some(ms)) = (m, ms) else {
                failures.push(format!("{name}: action leaves the span"));
                continue;
            };
            let ok = (0..n).all(|a| (0..n).all(|b| m[a][b] == ms[b][a]));
            if !ok {
                failures.push(name);
            }
        }
        Ok(failures)
    }

    /// `M[a][b]` = coefficient of `ẽ_a` in `x ▷ ẽ_b`.
    fn action_matrix(&self, uq: &Uq, x: &UqElement) -> Result<Option<Vec<Vec<Scalar>>>> {
        let n = self.rank;
        let mut m = vec![vec![Scalar::zero(); n]; n];
        for b in 1..=n {
            let eb = self.e_xi(b).scale(&Scalar::v_pow(-(b as i32)));
            let act = uq.adjoint_action(x, &eb)?;
            let Some(coords) = self.coordinates(&act) else {
                return Ok(None);
            };
            for a in 0..n {
                m[a][b - 1] = coords[a].clone();
            }
        }
        Ok(Some(m))
    }
}

/// Cartan samples: each fundamental weight and `-ω_1 + 2ω_N`.
pub fn sample_weights(n: usize) -> Vec<WeightVec> {
    let mut out: Vec<WeightVec> = (1..=n).map(WeightVec::fundamental).collect();
    out.push(WeightVec::fundamental(n).scale(2) - WeightVec::fundamental(1));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uqalg::Grading;

    fn uq(n: usize) -> Uq {
        Uq::new(n, Uq::default_bound(n)).unwrap()
    }

    #[test]
    fn lusztig_examples() {
        let u = uq(3);
        let t = lusztig_t(&u, 2, &u.e(3)).unwrap();
        let expected = u
            .e_word(&[2, 3])
            .unwrap()
            .neg()
            .add(&u.e_word(&[3, 2]).unwrap().scale(&Scalar::q_pow(-1)));
        assert_eq!(t, expected);
        assert_eq!(lusztig_t(&u, 1, &u.e(3)).unwrap(), u.e(3));
        assert!(matches!(
            lusztig_t(&u, 1, &u.e(1)),
            Err(AlgebraError::Unsupported(_))
        ));
        assert!(lusztig_t(&u, 1, &u.f(2)).is_err());
        let rv = RootVectorSet::build(&uq(4)).unwrap();
        let u4 = uq(4);
        assert_eq!(lusztig_t(&u4, 1, rv.e_xi(3)).unwrap(), *rv.e_xi(3));
    }

    #[test]
    fn root_vectors_shape() {
        let u = uq(2);
        let rv = RootVectorSet::build(&u).unwrap();
        assert_eq!(rv.e_xi(2), &u.e(2));
        let expected = u
            .e_word(&[1, 2])
            .unwrap()
            .neg()
            .add(&u.e_word(&[2, 1]).unwrap().scale(&Scalar::q_pow(-1)));
        assert_eq!(rv.e_xi(1), &expected);
        let u3 = uq(3);
        let rv3 = RootVectorSet::build(&u3).unwrap();
        assert_eq!(u3.weight(rv3.e_xi(1)), Grading::Homogeneous(vec![1, 1, 1]));
    }

    #[test]
    fn root_vectors_q_commute() {
        // Hand computation at N = 2: E_{ξ1}E_{ξ2} = q E_{ξ2}E_{ξ1}.
        let u = uq(2);
        let rv = RootVectorSet::build(&u).unwrap();
        let lhs = u.mul(rv.e_xi(1), rv.e_xi(2)).unwrap();
        let rhs = u.mul(rv.e_xi(2), rv.e_xi(1)).unwrap().scale(&Scalar::q_pow(1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cal_commutation_sign() {
        let u = uq(2);
        let rv = RootVectorSet::build(&u).unwrap();
        let lhs = u.mul(rv.cal_e(1), rv.cal_e_star(2)).unwrap();
        let swapped = u.mul(rv.cal_e_star(2), rv.cal_e(1)).unwrap();
        assert!(u.equals_mod_levi(&lhs, &swapped.scale(&Scalar::q_pow(1))));
        assert!(!u.equals_mod_levi(&lhs, &swapped.scale(&Scalar::q_pow(-1))));
    }

    #[test]
    fn coordinates_recover_combinations() {
        let u = uq(3);
        let rv = RootVectorSet::build(&u).unwrap();
        let x = rv.e_xi(1).scale(&Scalar::from_int(3)).add(rv.e_xi(3));
        let c = rv.coordinates(&x).unwrap();
        assert_eq!(c[0], Scalar::from_int(3) * Scalar::v_pow(1));
        assert_eq!(c[2], Scalar::v_pow(3));
        assert!(rv.coordinates(&u.e(1)).is_none());
    }
}
