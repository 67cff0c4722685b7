//! Closed-form answers for the families `S_{a,d,k}` and `S^b`.

pub mod generators;
pub mod gluing;
pub mod hilbert;
pub mod regularity;
pub mod resolution;

pub use generators::{
    defining_ideal_generators, gb_partition, generating_set, redundant_member, xi_family, GbPartition, GeneratorFamily,
};
pub use gluing::{apery_extended, gluing_data, qf_extended, GluingData};
pub use hilbert::{hilbert_numerator, numerator_from_resolution, HilbertSeriesForm};
pub use regularity::{regularity, RegularityReport};
pub use resolution::{
    extended_betti, mapping_cone_betti, named_minors, regularity_from_resolution, resolution, GradedResolution,
    MinorGroup, NamedMinor, Shift, ShiftDegree,
};
