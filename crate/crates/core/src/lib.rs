//! Edge-colouring analysis for loopless multigraphs.
//!
//! The crate computes t-cores, B-queues, fan and cfan degrees, the fan
//! number and corefan, and produces proper edge-colourings either by Vizing
//! fan recolouring or by exact backtracking. It also builds witness graphs
//! with a prescribed t-core and a large fan number.
//!
//! ```
//! use fancore::{chromatic_index_exact, t_core, Multigraph};
//!
//! let g = Multigraph::parse("a b 1\na c 1\nb c 2").unwrap();
//! assert_eq!(g.max_degree(), 3);
//! assert_eq!(t_core(&g, 0), Multigraph::parse("b c 2").unwrap());
//! assert_eq!(chromatic_index_exact(&g, 24).unwrap().0, 4);
//! ```

pub mod bqueue;
pub mod cli;
pub mod colouring;
pub mod core_analysis;
pub mod enumerate;
pub mod error;
pub mod fan;
pub mod graph;
pub mod witness;

pub use bqueue::{exhaustive_full_bqueue, greedy_full_bqueue, BQueue};
pub use colouring::{chromatic_index_exact, fan_colouring, EdgeColouring};
pub use core_analysis::{
    check_theorem4_hypothesis, check_theorem5_hypothesis, edges_above, t_core, CoreReport, HypothesisCheck,
};
pub use error::{Error, Result};
pub use fan::{
    cfan_degree, corefan, corefan_bruteforce, fan_bound, fan_degree, fan_number, zset, FanReport, Metric,
    ThresholdWitness,
};
pub use graph::{Multigraph, SubgraphSelection, Vertex};
pub use witness::{
    build_circulant_with_matching, construct_witness, verify_witness, ConstructionPlan, WitnessVerification,
};
