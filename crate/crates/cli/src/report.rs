//! Check records and their text and JSON renderings.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Self::Pass => "PASS",
            Self::Fail => "FAIL",
            Self::Skipped => "SKIP",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub check_id: String,
    pub paper_anchor: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Record {
    pub fn new(check_id: String, status: Status, witness: Option<String>) -> Self {
        let paper_anchor = anchor(&check_id).to_string();
        Self {
            check_id,
            paper_anchor,
            status,
            witness,
            millis: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub rank: usize,
    pub degree_bound: usize,
    pub c0: String,
    pub c1: String,
    pub c_profile: String,
    pub extended: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<ConfigEcho>,
    pub checks: Vec<Record>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: Option<ConfigEcho>, checks: Vec<Record>) -> Self {
        let mut summary = Summary::default();
        for r in &checks {
            match r.status {
                Status::Pass => summary.passed += 1,
                Status::Fail => summary.failed += 1,
                Status::Skipped => summary.skipped += 1,
            }
        }
        Self {
            config,
            checks,
            summary,
        }
    }

    pub fn empty() -> Self {
        Self::new(None, Vec::new())
    }

    pub fn any_failed(&self) -> bool {
        self.summary.failed > 0
    }

    pub fn record(&self, id: &str) -> Option<&Record> {
        self.checks.iter().find(|r| r.check_id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(report: &Report, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s.into_bytes()
        }
        Format::Text => render_text(report).into_bytes(),
    }
}

fn render_text(report: &Report) -> String {
    let width = report.checks.iter().map(|r| r.check_id.len()).max().unwrap_or(0);
    let mut out = String::new();
    if let Some(c) = &report.config {
        let _ = writeln!(
            out,
            "rank {}  bound {}  c0 {}  c1 {}  profile {}{}",
            c.rank,
            c.degree_bound,
            c.c0,
            c.c1,
            c.c_profile,
            if c.extended { "  extended" } else { "" }
        );
    }
    for r in &report.checks {
        let _ = write!(out, "{}  {:width$}  {}", r.status.label(), r.check_id, r.paper_anchor);
        if let Some(ms) = r.millis {
            let _ = write!(out, "  ({ms} ms)");
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            let _ = writeln!(out, "      witness: {w}");
        }
    }
    let s = &report.summary;
    let _ = writeln!(out, "{} passed, {} failed, {} skipped", s.passed, s.failed, s.skipped);
    out
}

/// Formula checked by each check id, keyed by the id up to the first `[`.
pub fn anchor(check_id: &str) -> &'static str {
    let key = check_id.split('[').next().unwrap_or(check_id);
    ANCHORS
        .iter()
        .find(|(k, _)| *k == key)
        .map_or("", |(_, a)| a)
}

const ANCHORS: &[(&str, &str)] = &[
    ("scalar.q_number_recursion", "[2][k] = [k+1] + [k-1]"),
    ("scalar.classical_limit", "[k]! -> k! at q = 1"),
    ("scalar.inverse", "x x^{-1} = 1 in Q(q^{1/2})"),
    ("freealg.serre_reduce", "q-Serre relations reduce to 0"),
    ("freealg.side_symmetry", "E and F sides share the Serre rewriting system"),
    ("uqalg.defining_relations", "K_i E_j K_i^{-1} = q^{a_ij} E_j, [E_i, F_j] = δ_ij (K_i - K_i^{-1})/(q - q^{-1}), q-Serre"),
    ("uqalg.hopf_axioms", "(Δ⊗id)Δ = (id⊗Δ)Δ, (ε⊗id)Δ = id, m(S⊗id)Δ = ε, Δ(x*) = (*⊗*)Δ(x)"),
    ("uqalg.pbw_counts", "dim U_q(n_+)_μ = Kostant partition P(μ)"),
    ("rootvec.xi_cartan", "E_{ξ_{i+1}} K_i = q K_i E_{ξ_{i+1}}"),
    ("rootvec.f_commutator", "[F_i, E_{ξ_i}] = -q^{-1} K_i^{-1} E_{ξ_{i+1}}"),
    ("rootvec.star_commutator", "E_{ξ_i}* E_i - q E_i E_{ξ_i}* = -q^{-1} E_{ξ_{i+1}}*"),
    ("rootvec.xi_star_xi", "E_{ξ_i}* E_{ξ_j} ∼ q E_{ξ_j} E_{ξ_i}* (i ≠ j)"),
    ("rootvec.cal_cal_star", "𝓔_i 𝓔_j* ∼ q 𝓔_j* 𝓔_i (i ≠ j)"),
    ("rootvec.xi_diagonal", "E_{ξ_i} E_{ξ_i}* ∼ q^{-2} E_{ξ_i}* E_{ξ_i} - q^{-1}(q - q^{-1}) Σ_{k>i} q^{3(i-k)} E_{ξ_k}* E_{ξ_k}"),
    ("rootvec.cal_diagonal", "𝓔_i* 𝓔_i ∼ q^{-2} 𝓔_i 𝓔_i* - q^{-1}(q - q^{-1}) Σ_{k>i} q^{i-k} 𝓔_k 𝓔_k*"),
    ("rootvec.antipode_square", "S(E_{ξ_i}) = q^{-2(N-i+1)} S^{-1}(E_{ξ_i})"),
    ("rootvec.adjoint_e", "E_j ▷ E_{ξ_i} = -δ_{j,i-1} E_{ξ_{i-1}}"),
    ("rootvec.adjoint_f", "F_j ▷ E_{ξ_i} = -δ_{j,i} E_{ξ_{i+1}}"),
    ("rootvec.adjoint_k", "K_λ ▷ E_{ξ_i} = q^{(λ, ξ_i)} E_{ξ_i}"),
    ("rootvec.orthonormal_basis", "(E_{ξ_a}, X ▷ E_{ξ_b}) = (X* ▷ E_{ξ_a}, E_{ξ_b}) for X in U_q(l)"),
    ("qext.braid_equation", "R̂_12 R̂_23 R̂_12 = R̂_23 R̂_12 R̂_23"),
    ("qext.eigenvectors", "R̂ has eigenvalue q on an N(N+1)/2-dimensional and -q^{-1} on an N(N-1)/2-dimensional eigenspace"),
    ("qext.relation_quotients", "Λ_q = T(u)/<ker(R̂ - q)>, S_q = T(u)/<ker(R̂ + q^{-1})>"),
    ("qext.raw_pairing", "<f_J, e_I> = δ_IJ q^{-k(k-1)/2} / [k]!"),
    ("qext.antisymmetrizer", "π(A_k(e_I)) = q^{k(k-1)/2} [k]! e_I"),
    ("qext.exterior_dimension", "dim Λ^k_q = binom(N, k)"),
    ("qext.quadratic_duality", "Λ_q(u_-) quadratic dual to S_q(u_+)"),
    ("qext.hermitian_equivariance", "(X v, w) = (v, X* w) for X in U_q(l)"),
    ("qext.levi_preserves_relations", "U_q(l) commutes with R̂ on u⊗u"),
    ("qext.levi_action_examples", "E_j ▷ e_i = -δ_{j,i-1} q^{-1/2} e_{i-1}, F_j ▷ e_i = -δ_{j,i} q^{1/2} e_{i+1}"),
    ("qcliff.ei_ij_offdiagonal", "𝔢_i 𝔦_j = -q^{-1} 𝔦_j 𝔢_i (i ≠ j)"),
    ("qcliff.quadratic_constant", "𝔢_i 𝔦_i + 𝔦_i 𝔢_i - q(q - q^{-1}) Σ_{j<i} 𝔢_j 𝔦_j = 1"),
    ("qcliff.classical_car", "q = 1: e_i i_j + i_j e_i = δ_ij"),
    ("qcliff.gradedness", "𝔦_i: Λ^k -> Λ^{k-1}, 𝔢_i: Λ^k -> Λ^{k+1}"),
    ("qcliff.interior_defining", "<w, 𝔦_a x> = <w ∧ f_a, x>"),
    ("qcliff.exterior_adjoint", "𝔢_i = 𝔦_i* for the rescaled inner product"),
    ("qcliff.gamma_rescaling", "γ_i = (λ_k/λ_{k-1}) 𝔦_i on Λ^k"),
    ("qcliff.gamma_composites", "γ_i* γ_j = (c_k/c_{k-1}) 𝔢_i 𝔦_j, γ_i γ_j* = (c_{k+1}/c_k) 𝔦_i 𝔢_j, c_k = |λ_k|^2/λ'_k"),
    ("dirac.eth_squared", "ð^2 = 0"),
    ("dirac.eth_star_squared", "(ð*)^2 = 0"),
    ("dirac.eth_kills_degree_zero", "ð e_∅ = 0"),
    ("dirac.self_adjoint", "D = ð + ð*, D* = D"),
    ("dirac.profile_agreement", "ð* = Σ_k (c_{k+1}/c_k) ð*_unit on Λ^k"),
    ("dirac.square_partition", "D^2 = D^2_D + D^2_O"),
    ("dirac.diagonal_form", "D^2_D ∼ Σ_i q^{-i} 𝓔_i 𝓔_i* ⊗ (γ_i γ_i* + q^{-2} γ_i* γ_i - q^{-1}(q - q^{-1}) Σ_{j<i} γ_j* γ_j)"),
    ("dirac.offdiagonal_form", "D^2_O ∼ Σ_{i≠j} 𝓔_i 𝓔_j* ⊗ (γ_i γ_j* + q^{-1} γ_j* γ_i)"),
    ("dirac.offdiagonal_levi", "D^2_O ∼ 0 iff c_{k+1}/c_k = (c_k/c_{k-1}) q^{-2}"),
    ("dirac.main_theorem", "D^2 ∼ C ⊗ T"),
    ("dirac.main_theorem_concrete", "D^2 ∼ C ⊗ T"),
    ("dirac.t_operator", "T|Λ^k = (c_1/c_0) q^{-2k}; T~ = K_{ω_N}^2 T; c_0 = c_1 gives T~ = 1"),
    ("dirac.casimir_commutes", "C = Σ_i q^{-i} 𝓔_i 𝓔_i* commutes with U_q(l)"),
    ("dirac.casimir_tilde_invariant", "g ▷ C~ = ε(g) C~ for g in U_q(l)"),
    ("dirac.antipode_constant", "S^{-1}(C~) = q^{-2(N+1)} Σ_i q^{-i} 𝓔_i 𝓔_i*"),
    ("dirac.appendix_subidentities", "E_j ▷ (E_{ξ_i}* E_{ξ_i}) = δ_ji q^{-2} E_{ξ_{i+1}}* E_{ξ_i} - δ_{j,i-1} q E_{ξ_i}* E_{ξ_{i-1}}; K_{i-1}^{-1} ▷ E_{ξ_i} = q E_{ξ_i}"),
    ("dirac.negative_control.offdiagonal", "c_k = 1: D^2_O not ∼ 0"),
    ("dirac.negative_control.residual", "c_k = 1: D^2 - C ⊗ T not ∼ 0"),
    ("dirac.suite", "rank-4 Dirac checks (enabled by --extended)"),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_is_valid_json() {
        let bytes = emit_report(&Report::empty(), Format::Json);
        let v: serde_json::Value = serde_json::from_slice(&bytes).unwrap();
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
    }

    #[test]
    fn passing_record_carries_anchor() {
        let r = Record::new("dirac.eth_squared[N=2]".into(), Status::Pass, None);
        let report = Report::new(None, vec![r]);
        let v: serde_json::Value = serde_json::from_slice(&emit_report(&report, Format::Json)).unwrap();
        assert_eq!(v["checks"][0]["status"], "pass");
        assert_eq!(v["checks"][0]["paper_anchor"], "ð^2 = 0");
        assert!(v["checks"][0].get("millis").is_none());
    }

    #[test]
    fn every_anchor_key_is_unique() {
        for (i, (k, _)) in ANCHORS.iter().enumerate() {
            assert!(ANCHORS[i + 1..].iter().all(|(j, _)| j != k), "{k}");
        }
    }
}
