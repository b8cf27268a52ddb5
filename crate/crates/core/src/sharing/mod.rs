//! Cost-sharing rules and the transaction cost game they induce.

mod equilibrium;
mod game;
mod regret;
mod rule;

pub use equilibrium::{
    mixed_equilibria, mixed_equilibria_capped, EquilibriumReport, MixedProfile, DEFAULT_SUPPORT_CAP,
};
pub use game::{pure_equilibria, BimatrixGame};
pub use regret::{
    design_balanced_rule, pay_for_mistake_rule, regret_profile, BalancedDesign, MistakeRule, RegretProfile,
};
pub use rule::{build_game, fixed_share_rule, is_optimizer, Line, OptimizerCheck, SharingRule, Violation};
