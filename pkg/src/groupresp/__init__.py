"""Quantified backward-looking group responsibility in multi-agent decision
trees with uncertainty, plus an executable axiom suite for auditing
responsibility functions."""

from .aggregation import (
    AVG,
    MAX,
    MPROD,
    SUM,
    Aggregator,
    agg_avg,
    agg_max,
    agg_mprod,
    agg_sum,
    aggregator,
    apply,
)
from .contribution import (
    LIKE,
    NEGL,
    RISK,
    ContributionFunction,
    ContributionValue,
    contribution_function,
    external,
    guaranteed_likelihood,
    min_risk,
    optimal_avoidance,
    r_like,
    r_negl,
    r_risk,
)
from .engine import (
    Scenario,
    Strategy,
    enumerate_scenarios,
    enumerate_strategies,
    likelihood,
    likelihood_from_scenario,
)
from .errors import (
    BadParameter,
    BadQuery,
    CodomainViolation,
    DomainGap,
    ExplosionGuard,
    GroupRespError,
    NotOnPath,
    ParseError,
    TreeValidationError,
    UnknownAgent,
    UnknownNode,
)
from .figures import builtin, fig1a, fig1b, fig2, fig3, fig4
from .fileio import load, loads, save
from .model import DecisionTree, validate
from .responsibility import (
    ResponsibilityFunction,
    contribution_trace,
    outcome_responsibility,
    responsibility_table,
)

__version__ = "0.1.0"
