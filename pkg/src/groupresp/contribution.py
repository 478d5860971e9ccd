"""Member contribution functions: likelihood increase, risk taking, negligence.

All three are exact min/max computations over exhaustively enumerated
uniform strategies and scenarios. Per-(tree, group) evaluators memoize the
inner γ/ω values; trees are immutable so the caches are safe to share.
"""

import itertools
import math
import weakref
from dataclasses import dataclass, field

from . import config
from .errors import BadQuery, DomainGap, ExplosionGuard
from .model import OUTCOME, PROBABILITY
from .engine import _CapCounter, iter_effective_resolutions, scenario_actuals


@dataclass(frozen=True)
class ContributionValue:
    """A contribution in [0,1]; `clamped` flags a raw value that fell
    outside the declared codomain by more than EPS."""

    value: float
    clamped: bool = False

    def __float__(self):
        return self.value


def clamp01(raw):
    eps = config.EPS
    if raw < -eps:
        return ContributionValue(0.0, True)
    if raw < 0.0:
        return ContributionValue(0.0, False)
    if raw > 1.0 + eps:
        return ContributionValue(1.0, True)
    if raw > 1.0:
        return ContributionValue(1.0, False)
    return ContributionValue(raw, False)


def check_query(tree, group, agent, node, action=None):
    """Member contribution is undefined unless agent ∈ group, node is the
    agent's decision node, and action is available there."""
    group = tree.check_group(group)
    if agent not in group:
        raise BadQuery(f"agent {agent!r} is not in the group")
    tree.require(node)
    if not tree.is_decision(node) or tree.owner(node) != agent:
        raise BadQuery(f"{node} is not a decision node of agent {agent!r}")
    if action is not None and action not in tree.actions(node):
        raise BadQuery(f"{action!r} is not available at {node}")
    return group


class GroupEvaluator:
    """Memoized γ/ω/risk computations for one (tree, group) pair."""

    def __init__(self, tree, group):
        self.tree = tree
        self.group = tree.check_group(group)
        self.target = tree.undesirable
        self.v_group, self.v_minus = tree.group_nodes(self.group)
        self._gamma = {}
        self._omega = {}
        self._risk = {}

    # -- strategy side -----------------------------------------------------

    def _classes_within(self, region):
        """Group decision classes having members inside region."""
        tree = self.tree
        seen = set()
        classes = []
        for node in tree.node_order:
            if node in seen or node not in region or node not in self.v_group:
                continue
            members = tuple(m for m in tree.info_class(node) if m in region)
            seen.update(members)
            classes.append((members, tree.actions(node)))
        return classes

    def _strategy_assignments(self, region):
        classes = self._classes_within(region)
        total = math.prod(len(actions) for _, actions in classes)
        cap = config.enumeration_cap()
        if total > cap:
            raise ExplosionGuard(total, cap, "strategies")
        for picks in itertools.product(*(actions for _, actions in classes)):
            choice = {}
            for (members, _), action in zip(classes, picks):
                for m in members:
                    choice[m] = action
            yield choice

    # -- guaranteed likelihood γ --------------------------------------------

    def gamma(self, node):
        """min over strategies and scenarios of the ε-likelihood from node."""
        cached = self._gamma.get(node)
        if cached is not None:
            return cached
        best = math.inf
        for choice in self._strategy_assignments(self.tree.branch(node)):
            best = min(best, self._min_resolution_value(node, choice))
            if best <= 0.0:
                break
        self._gamma[node] = best
        return best

    def _min_resolution_value(self, node, choice):
        """ε-likelihood from node under a fixed strategy, with every
        non-group choice resolved adversarially low (scenario minimization
        is per node, so it decomposes)."""
        tree = self.tree
        kinds = tree.kinds

        def walk(n):
            kind = kinds[n].kind
            if kind == OUTCOME:
                return 1.0 if n in self.target else 0.0
            if kind == PROBABILITY:
                return sum(e.prob * walk(e.child) for e in tree.out_edges[n])
            if n in self.v_group:
                return walk(tree.child(n, choice[n]))
            return min(walk(e.child) for e in tree.out_edges[n])

        return walk(node)

    # -- optimal avoidance ω -------------------------------------------------

    def omega(self, start, resolution):
        """min over strategies of the ε-likelihood from start under a fixed
        resolution of the non-group choice nodes."""
        scope = self.tree.branch(start)
        key = (start, tuple(sorted(
            (k, v) for k, v in resolution.items() if k in scope)))
        cached = self._omega.get(key)
        if cached is not None:
            return cached
        region = self._reachable(start, resolution)
        best = math.inf
        for choice in self._strategy_assignments(region):
            best = min(best, self._walk_fixed(start, choice, resolution))
            if best <= 0.0:
                break
        self._omega[key] = best
        return best

    def _reachable(self, start, resolution):
        tree = self.tree
        out = set()
        stack = [start]
        while stack:
            n = stack.pop()
            if n in out:
                continue
            out.add(n)
            kind = tree.kinds[n].kind
            if kind == OUTCOME:
                continue
            if n in self.v_minus:
                child = resolution.get(n)
                if child is None:
                    raise DomainGap(f"scenario undefined at {n}")
                stack.append(child)
            else:
                stack.extend(e.child for e in tree.out_edges[n])
        return out

    def _walk_fixed(self, node, choice, resolution):
        tree = self.tree

        def walk(n):
            kind = tree.kinds[n].kind
            if kind == OUTCOME:
                return 1.0 if n in self.target else 0.0
            if kind == PROBABILITY:
                return sum(e.prob * walk(e.child) for e in tree.out_edges[n])
            if n in self.v_group:
                return walk(tree.child(n, choice[n]))
            return walk(resolution[n])

        return walk(node)

    # -- risk profile ----------------------------------------------------------

    def risk_profile(self, node):
        """Raw max-over-scenarios Δω per action at node. The scenario's
        actual ranges over node's information class; both Δω terms are
        anchored at the actual (successor = the actual's child under the
        queried action)."""
        cached = self._risk.get(node)
        if cached is not None:
            return cached
        tree = self.tree
        actions = tree.actions(node)
        raw = {a: -math.inf for a in actions}
        for actual in scenario_actuals(tree, self.group, node):
            counter = _CapCounter("scenarios")
            for resolution in iter_effective_resolutions(
                    tree, self.v_minus, actual, counter):
                base = self.omega(actual, resolution)
                for a in actions:
                    succ = tree.child(actual, a)
                    raw[a] = max(raw[a], self.omega(succ, resolution) - base)
        self._risk[node] = raw
        return raw


_evaluators = weakref.WeakKeyDictionary()


def evaluator(tree, group):
    group = tree.check_group(group)
    per_tree = _evaluators.setdefault(tree, {})
    ev = per_tree.get(group)
    if ev is None:
        ev = per_tree[group] = GroupEvaluator(tree, group)
    return ev


def guaranteed_likelihood(tree, group, node):
    """γ(v): the ε-likelihood the group cannot get below at node."""
    tree.require(node)
    return evaluator(tree, group).gamma(node)


def optimal_avoidance(tree, group, start, scenario):
    """ω(start, ζ): best achievable ε-likelihood against a fixed scenario."""
    tree.require(start)
    return evaluator(tree, group).omega(start, scenario.resolution)


def r_like(tree, group, agent, node, action):
    """Contribution through increase in guaranteed likelihood."""
    group = check_query(tree, group, agent, node, action)
    ev = evaluator(tree, group)
    return clamp01(ev.gamma(tree.child(node, action)) - ev.gamma(node))


def r_risk(tree, group, agent, node, action):
    """Contribution through risk taking."""
    group = check_query(tree, group, agent, node, action)
    return clamp01(evaluator(tree, group).risk_profile(node)[action])


def min_risk(tree, group, agent, node):
    """ρ̲: the smallest risk any action at node carries."""
    group = check_query(tree, group, agent, node)
    profile = evaluator(tree, group).risk_profile(node)
    return min(clamp01(v).value for v in profile.values())


def r_negl(tree, group, agent, node, action):
    """Contribution through negligence: risk beyond the unavoidable
    baseline."""
    group = check_query(tree, group, agent, node, action)
    profile = evaluator(tree, group).risk_profile(node)
    floor = min(clamp01(v).value for v in profile.values())
    return clamp01(clamp01(profile[action]).value - floor)


@dataclass(frozen=True)
class ContributionFunction:
    """Uniform contract for built-in and externally plugged contribution
    functions, so the axiom suite can audit either."""

    name: str
    fn: object = field(compare=False)

    def __call__(self, tree, group, agent, node, action):
        result = self.fn(tree, group, agent, node, action)
        if isinstance(result, ContributionValue):
            return result
        return clamp01(float(result))


LIKE = ContributionFunction("like", r_like)
RISK = ContributionFunction("risk", r_risk)
NEGL = ContributionFunction("negl", r_negl)

BUILTIN_FUNCTIONS = {f.name: f for f in (LIKE, RISK, NEGL)}


def external(fn, name="external"):
    """Wrap a user-supplied (tree, group, agent, node, action) -> value
    callable; values are clamped into [0,1] with the diagnostic flag set."""
    return ContributionFunction(name, fn)


def contribution_function(name):
    try:
        return BUILTIN_FUNCTIONS[name]
    except KeyError:
        raise BadQuery(f"unknown contribution function {name!r}") from None
