//! Linear forms, the piecewise-linear operators generating the inequality
//! systems of polyhedral realizations, and lattice-point enumeration for
//! truncated polytopes.

mod form;
mod generate;
mod lattice;
mod operators;

pub use form::LinearForm;
pub use generate::{
    ample_verdict, check_ample, check_positivity, generate_xi, nontrivial, Verdict, XiSet,
};
pub use lattice::{box_from_points, enumerate_truncated, membership};
pub use operators::{beta_k, beta_k_pm, lambda_form, s_hat_k, s_k, Sign};

/// One line per form: `c + q_1*x_1 + ... >= 0`.
pub fn render_inequalities<'a>(forms: impl IntoIterator<Item = &'a LinearForm>) -> String {
    let mut out = String::new();
    for f in forms {
        out.push_str(&f.to_string());
        out.push_str(" >= 0\n");
    }
    out
}
