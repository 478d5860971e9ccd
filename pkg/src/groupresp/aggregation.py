"""Aggregation of member contributions into group responsibility.

Every aggregator maps finite [0,1]-vectors to a real and returns 0 on the
empty vector (groups with no decisions on a path need a value, and 0 is the
only choice compatible with reducibility and the neutral element). The sum
deliberately escapes [0,1]; its `is_proper` flag records that.
"""

import math
from dataclasses import dataclass, field

from . import config
from .errors import BadQuery, CodomainViolation


def agg_sum(values):
    return float(sum(values))


def agg_avg(values):
    values = list(values)
    if not values:
        return 0.0
    return sum(values) / len(values)


def agg_max(values):
    values = list(values)
    if not values:
        return 0.0
    return max(values)


def agg_mprod(values):
    """Modified product: 1 - Π(1 - r_k). Each entry claims its share of the
    remaining interval, so full contributions annihilate and zeros are
    neutral."""
    return 1.0 - math.prod(1.0 - v for v in values)


@dataclass(frozen=True)
class Aggregator:
    name: str
    fn: object = field(compare=False)
    is_proper: bool = True

    def __call__(self, values):
        return apply(self, values)


SUM = Aggregator("sum", agg_sum, is_proper=False)
AVG = Aggregator("avg", agg_avg)
MAX = Aggregator("max", agg_max)
MPROD = Aggregator("mprod", agg_mprod)

BUILTIN_AGGREGATORS = {a.name: a for a in (SUM, AVG, MAX, MPROD)}


def external(fn, name="external", is_proper=True):
    return Aggregator(name, fn, is_proper=is_proper)


def aggregator(name):
    try:
        return BUILTIN_AGGREGATORS[name]
    except KeyError:
        raise BadQuery(f"unknown aggregator {name!r}") from None


def apply(agg, values):
    """Dispatch to the aggregator; enforce the [0,1] codomain when the
    aggregator declares itself proper."""
    result = float(agg.fn(list(values)))
    if agg.is_proper and not (-config.EPS <= result <= 1.0 + config.EPS):
        raise CodomainViolation(
            f"aggregator {agg.name!r} declared proper but returned {result!r}")
    return result
