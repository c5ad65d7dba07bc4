//! Bennett flips, four-bar classification, seed-joint search and scissor
//! linkage assembly.

mod flip;
mod fourbar;
mod m0;
mod synth;

pub use flip::bflip;
pub use fourbar::{fourbar_check, FourBarFlags, FourBarKind, FourBarReport};
pub use m0::{build_ladder, choose_m0, common_direction, common_point, Ladder, M0Mode, Mode};
pub use synth::{chain_product, count_bounds, synthesize, FactorChain, Joint, Link, Linkage};
