"""Morally evaluated multi-agent decision trees: validation and queries.

A tree is built once from a raw description (the same shape as the JSON file
format) and is immutable afterwards; every query is pure, so instances can be
shared freely between concurrent evaluations.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import config
from .errors import (
    NotOnPath,
    TreeValidationError,
    UnknownAgent,
    UnknownNode,
    ValidationIssue,
)

DECISION = "decision"
AMBIGUITY = "ambiguity"
PROBABILITY = "probability"
OUTCOME = "outcome"

KINDS = (DECISION, AMBIGUITY, PROBABILITY, OUTCOME)


@dataclass(frozen=True)
class NodeKind:
    kind: str
    owner: str | None = None
    undesirable: bool = False


@dataclass(frozen=True)
class Edge:
    parent: str
    child: str
    action: str | None = None
    prob: float | None = None


def parse_probability(raw):
    """Accept a float, a decimal string, or a rational literal like '9/10'."""
    if isinstance(raw, bool):
        raise ValueError(f"not a probability: {raw!r}")
    if isinstance(raw, (int, float)):
        return float(raw)
    if isinstance(raw, str):
        text = raw.strip()
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    raise ValueError(f"not a probability: {raw!r}")


@dataclass(eq=False)
class DecisionTree:
    """Validated tree. Construct through validate(); do not mutate."""

    agents: tuple
    root: str
    kinds: dict            # node id -> NodeKind
    out_edges: dict        # node id -> tuple of Edge, in declaration order
    info_classes: tuple    # tuple of tuples of node ids (non-singleton classes)
    node_order: tuple      # first-occurrence order of node ids

    _class_of: dict = field(default_factory=dict, repr=False)
    _parent: dict = field(default_factory=dict, repr=False)
    _history: dict = field(default_factory=dict, repr=False)
    _branch: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for cls in self.info_classes:
            for node in cls:
                self._class_of[node] = cls
        for node, edges in self.out_edges.items():
            for e in edges:
                self._parent[e.child] = e
        for node in self.node_order:
            chain = []
            cursor = node
            while cursor in self._parent:
                cursor = self._parent[cursor].parent
                chain.append(cursor)
            self._history[node] = tuple(reversed(chain))
        # iterative post-order from the root; node declaration order in the
        # input need not be topological
        stack = [(self.root, False)]
        while stack:
            node, expanded = stack.pop()
            if expanded:
                members = {node}
                for e in self.out_edges.get(node, ()):
                    members |= self._branch[e.child]
                self._branch[node] = frozenset(members)
            else:
                stack.append((node, True))
                for e in self.out_edges.get(node, ()):
                    stack.append((e.child, False))

    # -- basic lookups ----------------------------------------------------

    def require(self, node):
        if node not in self.kinds:
            raise UnknownNode(f"unknown node: {node}")
        return node

    def kind(self, node):
        return self.kinds[self.require(node)].kind

    def owner(self, node):
        return self.kinds[self.require(node)].owner

    def is_outcome(self, node):
        return self.kind(node) == OUTCOME

    def is_decision(self, node):
        return self.kind(node) == DECISION

    @property
    def leaves(self):
        return tuple(n for n in self.node_order if self.kinds[n].kind == OUTCOME)

    @property
    def undesirable(self):
        """The set of ethically undesirable outcomes."""
        return frozenset(n for n in self.leaves if self.kinds[n].undesirable)

    @property
    def decision_nodes(self):
        return tuple(n for n in self.node_order if self.kinds[n].kind == DECISION)

    def edges_from(self, node):
        return self.out_edges.get(self.require(node), ())

    def actions(self, node):
        """Action (or ambiguity branch) labels leaving node, in edge order."""
        return tuple(e.action for e in self.edges_from(node) if e.action is not None)

    def child(self, node, action):
        for e in self.edges_from(node):
            if e.action == action:
                return e.child
        raise UnknownNode(f"node {node} has no action {action!r}")

    def parent_edge(self, node):
        self.require(node)
        return self._parent.get(node)

    # -- paper queries -----------------------------------------------------

    def history(self, node):
        """Ancestors of node from the root down to its parent, exclusive."""
        return self._history[self.require(node)]

    def branch(self, node):
        """Closed branch: node itself plus all its descendants."""
        return self._branch[self.require(node)]

    def info_class(self, node):
        """The information class of node (singleton unless declared)."""
        self.require(node)
        return self._class_of.get(node, (node,))

    def info_branch(self, node):
        members = frozenset()
        for m in self.info_class(node):
            members |= self._branch[m]
        return members

    def path_action(self, node, descendant):
        """Label of the edge leaving node toward descendant."""
        self.require(node)
        self.require(descendant)
        if descendant == node or descendant not in self._branch[node]:
            raise NotOnPath(f"{descendant} is not strictly below {node}")
        for e in self.edges_from(node):
            if descendant in self._branch[e.child]:
                return e.action
        raise NotOnPath(f"{descendant} is not strictly below {node}")

    def group_nodes(self, group):
        """(V_G, V_-G): the group's decision nodes, and the complement side
        (other agents' decision nodes together with ambiguity nodes)."""
        group = self.check_group(group)
        v_g, v_minus = [], []
        for n in self.node_order:
            k = self.kinds[n]
            if k.kind == DECISION:
                (v_g if k.owner in group else v_minus).append(n)
            elif k.kind == AMBIGUITY:
                v_minus.append(n)
        return frozenset(v_g), frozenset(v_minus)

    def check_group(self, group):
        group = frozenset(group)
        for agent in group:
            if agent not in self.agents:
                raise UnknownAgent(f"unknown agent: {agent}")
        return group

    # -- serialization ------------------------------------------------------

    def to_description(self):
        """Raw description dict; the inverse of validate()."""
        nodes = {}
        for n in self.node_order:
            k = self.kinds[n]
            rec = {"kind": k.kind}
            if k.kind == DECISION:
                rec["owner"] = k.owner
            if k.kind == OUTCOME and k.undesirable:
                rec["undesirable"] = True
            nodes[n] = rec
        edges = []
        for n in self.node_order:
            for e in self.out_edges.get(n, ()):
                rec = {"from": e.parent, "to": e.child}
                if e.action is not None:
                    rec["action"] = e.action
                if e.prob is not None:
                    rec["p"] = e.prob
                edges.append(rec)
        return {
            "agents": list(self.agents),
            "nodes": nodes,
            "edges": edges,
            "root": self.root,
            "info_sets": [list(c) for c in self.info_classes],
        }


def _node_kind(node_id, rec, issues):
    kind = rec.get("kind")
    if kind not in KINDS:
        issues.append(ValidationIssue("LeafKindMismatch", node_id,
                                      f"unknown node kind {kind!r}"))
        return None
    owner = rec.get("owner")
    if kind == DECISION and owner is None:
        issues.append(ValidationIssue("UnknownAgent", node_id,
                                      "decision node without an owner"))
    if kind != DECISION and owner is not None:
        issues.append(ValidationIssue("LeafKindMismatch", node_id,
                                      f"{kind} node must not declare an owner"))
    return NodeKind(kind=kind, owner=owner,
                    undesirable=bool(rec.get("undesirable", False)))


def validate(description):
    """Check every tree invariant; return a DecisionTree or raise
    TreeValidationError listing all violations."""
    issues = []

    agents = tuple(description.get("agents", ()))
    if len(set(agents)) != len(agents) or any(not a for a in agents):
        issues.append(ValidationIssue("UnknownAgent", None,
                                      "agent ids must be nonempty and unique"))

    raw_nodes = description.get("nodes", {})
    node_order = tuple(raw_nodes)
    kinds = {}
    for node_id, rec in raw_nodes.items():
        if not node_id:
            issues.append(ValidationIssue("NonTreeStructure", node_id,
                                          "empty node id"))
            continue
        nk = _node_kind(node_id, rec, issues)
        if nk is not None:
            if nk.kind == DECISION and nk.owner is not None and nk.owner not in agents:
                issues.append(ValidationIssue("UnknownAgent", node_id,
                                              f"owner {nk.owner!r} not in agents"))
            kinds[node_id] = nk

    root = description.get("root")
    if root not in kinds:
        issues.append(ValidationIssue("NonTreeStructure", root,
                                      f"root {root!r} is not a declared node"))

    out_edges = {n: [] for n in kinds}
    seen_child = {}
    for rec in description.get("edges", ()):
        parent, child = rec.get("from"), rec.get("to")
        if parent not in kinds or child not in kinds:
            issues.append(ValidationIssue("NonTreeStructure", parent or child,
                                          f"edge {parent!r}->{child!r} references unknown node"))
            continue
        prob = None
        if rec.get("p") is not None:
            try:
                prob = parse_probability(rec["p"])
            except (ValueError, ZeroDivisionError):
                issues.append(ValidationIssue("ProbabilitySumMismatch", parent,
                                              f"unparseable probability {rec['p']!r}"))
        edge = Edge(parent=parent, child=child, action=rec.get("action"), prob=prob)
        if child in seen_child:
            issues.append(ValidationIssue("NonTreeStructure", child,
                                          "node has more than one parent"))
        seen_child[child] = edge
        out_edges[parent].append(edge)

    for node_id, nk in kinds.items():
        edges = out_edges[node_id]
        if nk.kind == OUTCOME:
            if edges:
                issues.append(ValidationIssue("LeafKindMismatch", node_id,
                                              "outcome node has children"))
            continue
        if not edges:
            issues.append(ValidationIssue("LeafKindMismatch", node_id,
                                          f"{nk.kind} node has no children"))
        if nk.kind in (DECISION, AMBIGUITY):
            labels = [e.action for e in edges]
            if any(lbl is None for lbl in labels):
                issues.append(ValidationIssue("DuplicateActionLabel", node_id,
                                              "edge from a choice node is missing its label"))
            dupes = {lbl for lbl in labels if lbl is not None and labels.count(lbl) > 1}
            for lbl in sorted(dupes):
                issues.append(ValidationIssue("DuplicateActionLabel", node_id,
                                              f"action label {lbl!r} repeated"))
        elif nk.kind == PROBABILITY:
            if any(e.prob is None for e in edges):
                issues.append(ValidationIssue("ProbabilitySumMismatch", node_id,
                                              "probability edge without p"))
            else:
                if any(e.prob < -config.EPS or e.prob > 1 + config.EPS for e in edges):
                    issues.append(ValidationIssue("ProbabilitySumMismatch", node_id,
                                                  "edge probability outside [0,1]"))
                total = sum(e.prob for e in edges)
                if abs(total - 1.0) > config.EPS:
                    issues.append(ValidationIssue(
                        "ProbabilitySumMismatch", node_id,
                        f"probabilities sum to {total:.12g}, "
                        f"not 1 within {config.EPS}"))

    # reachability / tree-ness (only meaningful if the root exists)
    if root in kinds:
        if root in seen_child:
            issues.append(ValidationIssue("NonTreeStructure", root,
                                          "root has a parent"))
        reached = set()
        stack = [root]
        while stack:
            n = stack.pop()
            if n in reached:
                continue
            reached.add(n)
            stack.extend(e.child for e in out_edges.get(n, ()))
        unreachable = [n for n in node_order if n in kinds and n not in reached]
        for n in unreachable:
            issues.append(ValidationIssue("NonTreeStructure", n,
                                          "node not reachable from root"))

    info_classes = []
    claimed = set()
    for raw_cls in description.get("info_sets", ()):
        cls = tuple(raw_cls)
        bad = False
        for node in cls:
            if node not in kinds:
                issues.append(ValidationIssue("InfoSetAgentMismatch", node,
                                              "information set references unknown node"))
                bad = True
            elif kinds[node].kind != DECISION:
                issues.append(ValidationIssue("InfoSetAgentMismatch", node,
                                              "information set contains a non-decision node"))
                bad = True
            elif node in claimed:
                issues.append(ValidationIssue("InfoSetAgentMismatch", node,
                                              "node appears in two information sets"))
                bad = True
        if bad or len(cls) < 2:
            continue
        owners = {kinds[n].owner for n in cls}
        if len(owners) > 1:
            issues.append(ValidationIssue("InfoSetAgentMismatch", cls[0],
                                          f"information set mixes agents {sorted(owners)}"))
        action_sets = {
            frozenset(e.action for e in out_edges[n] if e.action is not None)
            for n in cls
        }
        if len(action_sets) > 1:
            issues.append(ValidationIssue("InfoSetActionSetMismatch", cls[0],
                                          "information set members have different action sets"))
        claimed.update(cls)
        info_classes.append(cls)

    if issues:
        raise TreeValidationError(issues)

    return DecisionTree(
        agents=agents,
        root=root,
        kinds=kinds,
        out_edges={n: tuple(es) for n, es in out_edges.items()},
        info_classes=tuple(info_classes),
        node_order=node_order,
    )
