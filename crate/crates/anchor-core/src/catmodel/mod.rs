//! Finite semisimple C* category backends: objects, morphisms, duality,
//! braiding, traces, and states.

pub mod backend;
pub mod duality;
pub mod mor;
pub mod obj;
pub mod seg;

pub use backend::{Backend, Simple};
pub use duality::{
    braiding, braiding_inv, coev, dim_obj, ev, inner_product, nu, pivotal_phi,
    spherical_state_solve, state_of_end1, tr_l, tr_r, twist, unitary_trace,
};
pub use mor::Mor;
pub use obj::Obj;
pub use seg::{seg_iso, Chain, Leg, Seg};
