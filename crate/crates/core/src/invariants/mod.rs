//! Truncated Toomer invariants, cup length and the product bound.

mod bound;
mod cup;
mod toomer;

pub use bound::{
    category_bound, product_bound, toomer_base, toomer_fiber_family, verify_estimate_e, BoundReport, Caps,
    CategoryBound, FiberFamily, Verdict,
};
pub use cup::{class_element, cup_length, CupLengthReport};
pub use toomer::{toomer, toomer_with, ToomerOptions, ToomerReport, ToomerRow, Witness};
