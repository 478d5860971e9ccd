"""Outcome responsibility: aggregated member contributions along the path
to an outcome."""

from dataclasses import dataclass

from .aggregation import Aggregator, apply
from .contribution import ContributionFunction, ContributionValue
from .errors import BadQuery


@dataclass(frozen=True)
class TraceEntry:
    agent: str
    node: str
    action: str
    contribution: ContributionValue


@dataclass(frozen=True)
class ResponsibilityFunction:
    """A member-contribution function composed with an aggregator."""

    contribution: ContributionFunction
    aggregator: Aggregator

    @property
    def name(self):
        return f"{self.aggregator.name}∘{self.contribution.name}"

    def __call__(self, tree, group, outcome):
        return outcome_responsibility(tree, group, outcome,
                                      self.contribution, self.aggregator)


def contribution_trace(tree, group, outcome, contribution):
    """Contribution values of the group's decisions on the path to outcome,
    in root-to-leaf order."""
    group = tree.check_group(group)
    tree.require(outcome)
    if not tree.is_outcome(outcome):
        raise BadQuery(f"{outcome} is not an outcome node")
    trace = []
    for node in tree.history(outcome):
        kind = tree.kinds[node]
        if kind.kind != "decision" or kind.owner not in group:
            continue
        action = tree.path_action(node, outcome)
        value = contribution(tree, group, kind.owner, node, action)
        trace.append(TraceEntry(kind.owner, node, action, value))
    return tuple(trace)


def outcome_responsibility(tree, group, outcome, contribution, aggregator):
    """R(G, w): aggregate of the trace values; 0 for an empty trace."""
    trace = contribution_trace(tree, group, outcome, contribution)
    return apply(aggregator, [entry.contribution.value for entry in trace])


def responsibility_table(tree, group, contribution, aggregator):
    """Outcome responsibility for every leaf, in tree order."""
    return {
        leaf: outcome_responsibility(tree, group, leaf, contribution, aggregator)
        for leaf in tree.leaves
    }
