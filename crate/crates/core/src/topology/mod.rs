//! Subgroup posets, their order complexes, homology, and homotopy
//! certificates.

pub mod certificate;
pub mod collapse;
pub mod complex;
pub mod equivalence;
pub mod homology;
pub mod pi1;
pub mod poset;
pub mod snf;
pub mod verdict;

pub use certificate::{
    AcyclicSimplyConnected, Certificate, CertificateError, CollapseSequence, ConicalContraction,
    Direction, FiberCertificate, FiberSide, LinksCertificate, LinksMode, MonotoneRetraction,
    PosetMap, Zigzag, ZigzagStep,
};
pub use complex::{OrderComplex, Simplex, SimplicialComplex};
pub use homology::HomologyProfile;
pub use poset::SubgroupPoset;
pub use verdict::{contractibility, find_conical_contraction, Evidence, Verdict, VerdictStatus};
pub use equivalence::{
    compare_posets, fixed_point_scan, verify_inclusion, Avatar, AvatarComparison, InclusionCheck,
    InclusionMode, Outcome, PointCheck, ScanResult, Tier,
};
