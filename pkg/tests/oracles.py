"""Independent reference evaluators used to freeze expected values.

These deliberately share no code path with the library: likelihood is
computed by exhaustive root-to-leaf path enumeration (the library recurses),
and the min/max quantities below are plain products over full itertools
enumerations driven by this file's own tree walking."""

import itertools
import math


def _outcome_nodes(tree):
    return [n for n in tree.node_order if tree.kinds[n].kind == "outcome"]


def _segment(tree, start, leaf):
    """Node sequence from start down to leaf, or None if not below start."""
    if leaf not in tree.branch(start):
        return None
    path = [leaf]
    cursor = leaf
    while cursor != start:
        cursor = tree.parent_edge(cursor).parent
        path.append(cursor)
    return list(reversed(path))


def path_likelihood(tree, group, start, choice, resolution, target):
    """Sum over all start-to-leaf paths consistent with the strategy and
    scenario of the product of probability-edge weights times the target
    indicator."""
    total = 0.0
    for leaf in _outcome_nodes(tree):
        if leaf not in target:
            continue
        path = _segment(tree, start, leaf)
        if path is None:
            continue
        weight = 1.0
        consistent = True
        for parent, child in zip(path, path[1:]):
            kind = tree.kinds[parent]
            if kind.kind == "probability":
                edge = next(e for e in tree.edges_from(parent) if e.child == child)
                weight *= edge.prob
            elif kind.kind == "decision" and kind.owner in group:
                if tree.child(parent, choice[parent]) != child:
                    consistent = False
                    break
            else:
                if resolution[parent] != child:
                    consistent = False
                    break
        if consistent:
            total += weight
    return total


def _group_classes(tree, group, scope):
    """Information classes of the group's decision nodes within scope."""
    seen = set()
    classes = []
    for node in tree.node_order:
        if node in seen or node not in scope:
            continue
        kind = tree.kinds[node]
        if kind.kind != "decision" or kind.owner not in group:
            continue
        members = tuple(m for m in tree.info_class(node) if m in scope)
        seen.update(members)
        classes.append(members)
    return classes


def uniform_strategies(tree, group, scope):
    """Every uniform action assignment over the group's classes in scope."""
    classes = _group_classes(tree, group, scope)
    action_lists = [sorted(tree.actions(cls[0])) for cls in classes]
    for picks in itertools.product(*action_lists):
        choice = {}
        for members, action in zip(classes, picks):
            for m in members:
                choice[m] = action
        yield choice


def full_resolutions(tree, group, scope):
    """Every resolution of non-group decision and ambiguity nodes in scope."""
    nodes = [n for n in tree.node_order
             if n in scope
             and (tree.kinds[n].kind == "ambiguity"
                  or (tree.kinds[n].kind == "decision"
                      and tree.kinds[n].owner not in group))]
    child_lists = [[e.child for e in tree.edges_from(n)] for n in nodes]
    for picks in itertools.product(*child_lists):
        yield dict(zip(nodes, picks))


def brute_gamma(tree, group, node):
    """min over strategies and resolutions of the ε-likelihood from node."""
    group = frozenset(group)
    target = tree.undesirable
    scope = tree.branch(node)
    best = math.inf
    for choice in uniform_strategies(tree, group, scope):
        for resolution in full_resolutions(tree, group, scope):
            best = min(best, path_likelihood(
                tree, group, node, choice, resolution, target))
    return best


def brute_omega(tree, group, start, resolution):
    """min over strategies of the ε-likelihood from start for a fixed
    resolution."""
    group = frozenset(group)
    target = tree.undesirable
    scope = tree.branch(start)
    best = math.inf
    for choice in uniform_strategies(tree, group, scope):
        best = min(best, path_likelihood(
            tree, group, start, choice, resolution, target))
    return best
