//! Golomb ruler gadgets and the reduction from vertex cover: encoder,
//! cover-to-solution construction, solution-to-cover decoding and the
//! gadget property scan.

mod aux;
mod cover;
mod encode;
mod gadgets;
mod ruler;

pub use aux::{aux_bound, is_aux};
pub use cover::{construct_solution_from_cover, decode_cover, is_vertex_cover, minimum_vertex_covers};
pub use encode::{encode_vc, EdgeGadget, ReducedInstance, ROOT_LABEL};
pub use gadgets::{check_gadget_lemmas, mutate, GadgetMutation, GadgetReport, GadgetViolation};
pub use ruler::{is_golomb, ruler, Ruler, RulerProperties};
