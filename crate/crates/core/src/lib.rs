pub mod exact;
pub mod factor;
pub mod perm;
pub mod numfield;
pub mod family;
pub mod pipeline;
pub mod groupspec;
pub mod certificate;
