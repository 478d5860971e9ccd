"""Strategies, scenarios, and the likelihood recursion.

Enumeration is exhaustive and deterministic: strategy classes come in
first-occurrence order with actions sorted lexicographically, scenarios in
(actual, resolution) declaration order. Exceeding the configured cap raises
ExplosionGuard rather than truncating.
"""

import itertools
import math
from dataclasses import dataclass

from . import config
from .errors import DomainGap, ExplosionGuard
from .model import DECISION, OUTCOME, PROBABILITY


@dataclass
class Strategy:
    """Uniform action assignment for a group over an information branch."""

    group: frozenset
    anchor: str
    choice: dict  # node id -> action label

    def action_at(self, node):
        return self.choice.get(node)


@dataclass
class Scenario:
    """A designated actual node plus a resolution of all future non-group,
    non-probabilistic choices."""

    group: frozenset
    anchor: str
    actual: str
    resolution: dict  # node id -> chosen child node id


def strategy_domain(tree, group, anchor):
    """Classes of the group's decision nodes inside info_branch(anchor),
    each as (members_in_domain, sorted_actions)."""
    group = tree.check_group(group)
    scope = tree.info_branch(anchor)
    seen = set()
    out = []
    for node in tree.node_order:
        if node in seen or node not in scope:
            continue
        if not tree.is_decision(node) or tree.owner(node) not in group:
            continue
        cls = tree.info_class(node)
        members = tuple(m for m in cls if m in scope)
        seen.update(members)
        out.append((members, tuple(sorted(tree.actions(node)))))
    return out


def count_strategies(tree, group, anchor):
    return math.prod(len(actions) for _, actions in strategy_domain(tree, group, anchor))


def enumerate_strategies(tree, group, anchor):
    """All uniform strategies for group at anchor, in deterministic order."""
    tree.require(anchor)
    group = tree.check_group(group)
    domain = strategy_domain(tree, group, anchor)
    total = math.prod(len(actions) for _, actions in domain)
    cap = config.enumeration_cap()
    if total > cap:
        raise ExplosionGuard(total, cap, "strategies")
    out = []
    for picks in itertools.product(*(actions for _, actions in domain)):
        choice = {}
        for (members, _), action in zip(domain, picks):
            for m in members:
                choice[m] = action
        out.append(Strategy(group=group, anchor=anchor, choice=choice))
    return out


def scenario_actuals(tree, group, node):
    """Nodes the group must consider as the actual position at node: the
    information class when node belongs to a group member, otherwise the
    node itself."""
    if tree.is_decision(node) and tree.owner(node) in group:
        return tree.info_class(node)
    return (node,)


def resolution_domain(tree, group, actual):
    """Non-group choice nodes (other agents' decisions and ambiguity nodes)
    inside the closed branch of actual, in node order."""
    _, v_minus = tree.group_nodes(group)
    scope = tree.branch(actual)
    return tuple(n for n in tree.node_order if n in v_minus and n in scope)


def count_scenarios(tree, group, anchor):
    total = 0
    for actual in scenario_actuals(tree, group, anchor):
        total += math.prod(
            len(tree.edges_from(n)) for n in resolution_domain(tree, group, actual))
    return total


def enumerate_scenarios(tree, group, anchor):
    """All scenarios for group at anchor: one per (actual ~ anchor) x (full
    resolution of the non-group choice nodes below the actual)."""
    tree.require(anchor)
    group = tree.check_group(group)
    total = count_scenarios(tree, group, anchor)
    cap = config.enumeration_cap()
    if total > cap:
        raise ExplosionGuard(total, cap, "scenarios")
    out = []
    for actual in scenario_actuals(tree, group, anchor):
        domain = resolution_domain(tree, group, actual)
        child_lists = [tuple(e.child for e in tree.edges_from(n)) for n in domain]
        for picks in itertools.product(*child_lists):
            out.append(Scenario(group=group, anchor=anchor, actual=actual,
                                resolution=dict(zip(domain, picks))))
    return out


def evaluate_likelihood(tree, group, start, choice, resolution, target):
    """Recursive likelihood of reaching `target` from `start`, with the
    group's decisions read from `choice` and everything non-probabilistic
    else from `resolution`. Raises DomainGap on a missing entry."""

    def walk(node):
        kind = tree.kinds[node].kind
        if kind == OUTCOME:
            return 1.0 if node in target else 0.0
        if kind == PROBABILITY:
            return sum(e.prob * walk(e.child) for e in tree.out_edges[node])
        if kind == DECISION and tree.kinds[node].owner in group:
            action = choice.get(node)
            if action is None:
                raise DomainGap(f"strategy undefined at {node}")
            return walk(tree.child(node, action))
        child = resolution.get(node)
        if child is None:
            raise DomainGap(f"scenario undefined at {node}")
        return walk(child)

    return walk(tree.require(start))


def likelihood(tree, group, start, strategy, scenario, target):
    """ℓ(target | start, σ, ζ): evaluation anchored at `start`."""
    group = tree.check_group(group)
    return evaluate_likelihood(tree, group, start, strategy.choice,
                               scenario.resolution, frozenset(target))


def likelihood_from_scenario(tree, group, scenario, strategy, target):
    """ℓ anchored at the scenario's actual node."""
    return likelihood(tree, group, scenario.actual, strategy, scenario, target)


def reachable_outcomes(tree, group, strategy, scenario):
    """Outcome nodes realized with positive probability from the scenario's
    actual node when the group plays `strategy`."""
    group = tree.check_group(group)
    out = []

    def walk(node):
        kind = tree.kinds[node].kind
        if kind == OUTCOME:
            out.append(node)
            return
        if kind == PROBABILITY:
            for e in tree.out_edges[node]:
                if e.prob > config.EPS:
                    walk(e.child)
            return
        if kind == DECISION and tree.kinds[node].owner in group:
            action = strategy.choice.get(node)
            if action is None:
                raise DomainGap(f"strategy undefined at {node}")
            walk(tree.child(node, action))
            return
        child = scenario.resolution.get(node)
        if child is None:
            raise DomainGap(f"scenario undefined at {node}")
        walk(child)

    walk(scenario.actual)
    return tuple(out)


class _CapCounter:
    """Counts enumerated items against the configured cap."""

    def __init__(self, what):
        self.n = 0
        self.cap = config.enumeration_cap()
        self.what = what

    def tick(self):
        self.n += 1
        if self.n > self.cap:
            raise ExplosionGuard(self.n, self.cap, self.what)


def iter_effective_resolutions(tree, v_minus, start, counter=None):
    """Resolutions of the non-group choice nodes actually reachable from
    start (under any group strategy / probability branch). Equivalent to the
    full product for likelihood purposes, exponentially smaller on deep
    trees."""
    order = {n: i for i, n in enumerate(tree.node_order)}

    def frontier(roots):
        found = []
        stack = list(roots)
        while stack:
            n = stack.pop()
            if tree.kinds[n].kind == OUTCOME:
                continue
            if n in v_minus:
                found.append(n)
                continue
            stack.extend(e.child for e in tree.out_edges[n])
        return sorted(found, key=order.__getitem__)

    def assign(pending, acc):
        if not pending:
            if counter is not None:
                counter.tick()
            yield dict(acc)
            return
        node = pending[0]
        rest = pending[1:]
        for e in tree.out_edges[node]:
            acc[node] = e.child
            yield from assign(rest + frontier([e.child]), acc)
        del acc[node]

    yield from assign(frontier([start]), {})
