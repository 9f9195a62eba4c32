//! Explicit families of skew morphisms and non-smooth witnesses.

mod csm;
mod nse;
mod product;
mod root;
mod witness;

pub use csm::{
    csm_completeness, csm_construct, enumerate_csm_params, geometric_sum, CsmComparison, CsmParams,
};
pub use nse::{nse_construct, NseParams};
pub use product::{direct_product, product_group};
pub use root::{pns_witness_odd, pns_witness_two, root_construct, RootParams};
pub use witness::nonsmooth_witness;
