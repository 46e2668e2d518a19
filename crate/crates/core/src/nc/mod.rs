//! Normal forms in the algebra `k⟨x,y,z⟩ / ([x,z], [y,z], [x,y] − τz²)` and
//! in its quadratic dual.
//!
//! Coefficients are polynomials in τ, so a single computation covers every
//! value of the parameter; call `specialize` to fix one.

mod algebra;
mod dual;
mod multipoly;
pub mod rewrite;

pub use algebra::{
    commutator_relations, degree_basis, graded_dim_a, multiplication_matrix, normal_form,
    relation_kernel_k, rules, Gen, Monomial, NcElement, NcWord,
};
pub use dual::{
    dual_graded_dims, dual_multiplication_matrix, dual_multiply, dual_relation_kernel,
    dual_rules, DualElement, DualGen,
};
pub use multipoly::{determinant, MultiPoly};

/// Variable order of [`artin_moduli_matrix`] entries.
pub const UVW_TAU: [&str; 4] = ["u", "v", "w", "tau"];

/// The 3×3 matrix over `ℚ[u,v,w,τ]` with rows `(0, w, v)`, `(−w, 0, u)`,
/// `(−v, −u, −τw)`, describing a general element
/// `u(y⊗z − z⊗y) + v(x⊗z − z⊗x) + w(x⊗y − y⊗x − τz⊗z)` of the relation space.
pub fn artin_moduli_matrix() -> Vec<Vec<MultiPoly>> {
    let var = |i| MultiPoly::var(&UVW_TAU, i);
    let zero = MultiPoly::zero(&UVW_TAU);
    let (u, v, w, tau) = (var(0), var(1), var(2), var(3));
    vec![
        vec![zero.clone(), w.clone(), v.clone()],
        vec![-&w, zero, u.clone()],
        vec![-&v, -&u, -&(&tau * &w)],
    ]
}

pub fn artin_moduli_determinant() -> MultiPoly {
    determinant(&artin_moduli_matrix())
}
