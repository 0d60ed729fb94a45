//! The infinite dihedral group algebra, the functionals spanning its finite
//! dual, an abstract Hopf algebra presented by generators and relations,
//! and the machine checks tying the two pictures together.
//!
//! Ground truth throughout is the evaluation pairing against group words:
//! the dual-side product, coproducts, and antipode are all validated
//! pointwise on windows of words, and the presented algebra is mapped onto
//! the dual side basis-by-basis to compare structure constants.

mod claims;
mod dual;
mod group;
mod lincomb;
mod presented;

pub use claims::{
    cofinite_ideal_probe, evaluation_matrix_det, ideal_vanishing_check, quotient_dual_rank,
    stirling_sum, symbolic_det_check, ClaimsError, DetIdentityReport, QuotientProbe, RankReport,
};
pub use dual::{
    antipode_pairing_check, coproduct_pairing_check, generator_antipode, generator_coproduct,
    pointwise_product_check, DualElem, DualGenerator, DualMonomial, DualTensor,
};
pub use group::{GroupAlgElem, GroupWord};
pub use presented::{
    axiom_suite, coassociativity_holds, counit_laws_hold, default_generator_sample,
    antipode_laws_hold, random_monomials, AbstractElem, AxiomFailure, HopfMonomial, Tensor2,
    Tensor3,
};

/// The two functional families: `Phi`-type weights both cosets of the
/// reflection equally, `Psi`-type flips sign on the reflection coset.
/// Composition is the group `Z/2`: `Psi . Psi = Phi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Kind {
    Phi,
    Psi,
}

impl Kind {
    pub fn compose(self, other: Kind) -> Kind {
        if self == other {
            Kind::Phi
        } else {
            Kind::Psi
        }
    }
}
