"""Property checkers for the aggregation axioms over sampled vectors.

Each axiom is exercised exactly as it quantifies: append a positive entry,
raise one coordinate, three-point affinity per coordinate, plant a 1, insert
a 0, concatenate copies, permute, all-zero iff zero. Canonical probe inputs
(the textbook counterexamples) run before the seeded random samples, so the
reported witness for a failing (aggregator, axiom) pair is the documented
one. Identical config, identical report."""

import random
from dataclasses import dataclass

from . import config
from .aggregation import Aggregator
from .axioms import _satisfied, _violated

B01 = "B01"
BSM_PLUS = "BSMPlus"
BSM_GT = "BSMGt"
LIN = "LIN"
AN1 = "AN1"
NE0 = "NE0"
SIP = "SIP"
AAT = "AAT"
RED = "RED"

AGG_AXIOMS = (B01, BSM_PLUS, BSM_GT, LIN, AN1, NE0, SIP, AAT, RED)

# probes tried before random sampling; values are axiom-specific payloads
_PROBES = {
    B01: [[1.0, 1.0]],
    BSM_PLUS: [([0.9], 0.1), ([0.5], 0.4)],
    BSM_GT: [([0.5, 0.8], 0, 0.6)],
    LIN: [([0.5, 0.5], 0, ())],
    AN1: [[1.0, 1.0], [1.0, 0.2]],
    NE0: [([0.9], 0)],
    SIP: [([0.9], 2), ([0.5, 0.4], 3)],
    AAT: [([0.9, 0.1, 0.5], [0.5, 0.9, 0.1])],
    RED: [[0.0, 0.0], [0.05], [1.0, 1.0]],
}


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    samples: int = 10000
    min_dim: int = 1
    max_dim: int = 6


def _vector(rng, cfg, min_dim=None):
    n = rng.randint(min_dim or cfg.min_dim, cfg.max_dim)
    out = []
    for _ in range(n):
        roll = rng.random()
        if roll < 0.1:
            out.append(0.0)
        elif roll < 0.2:
            out.append(1.0)
        else:
            out.append(rng.random())
    return out


def check_agg_axiom(agg: Aggregator, axiom, cfg: SampleConfig = SampleConfig()):
    checker = _CHECKERS[axiom]
    rng = random.Random((cfg.seed, axiom, agg.name).__str__())
    instances = 0
    for probe in _PROBES.get(axiom, ()):
        instances += 1
        witness = checker(agg, probe)
        if witness is not None:
            return _violated(axiom, instances, witness)
    for _ in range(cfg.samples):
        instances += 1
        case = _CASE_BUILDERS[axiom](rng, cfg)
        if case is None:
            continue
        witness = checker(agg, case)
        if witness is not None:
            return _violated(axiom, instances, witness)
    return _satisfied(axiom, instances)


def check_battery(agg, axioms, cfg: SampleConfig = SampleConfig()):
    return {axiom: check_agg_axiom(agg, axiom, cfg) for axiom in axioms}


# -- per-axiom checkers; each returns a witness dict or None -----------------


def _check_b01(agg, x):
    got = agg(list(x))
    if got < -config.EPS or got > 1.0 + config.EPS:
        return {"input": list(x), "got": got}
    return None


def _check_bsm_plus(agg, case):
    x, extra = case
    base = agg(list(x))
    if base >= 1.0 - config.EPS:
        return None
    grown = agg(list(x) + [extra])
    if grown <= base + config.STRICT_MARGIN:
        return {"input": list(x), "appended": extra,
                "before": base, "after": grown}
    return None


def _check_bsm_gt(agg, case):
    x, j, raised = case
    base = agg(list(x))
    if base >= 1.0 - config.EPS:
        return None
    y = list(x)
    y[j] = raised
    grown = agg(y)
    if grown <= base + config.STRICT_MARGIN:
        return {"input": list(x), "raised_to": y,
                "before": base, "after": grown}
    return None


def _check_lin(agg, case):
    x, i, extra_points = case
    lo, mid, hi = list(x), list(x), list(x)
    lo[i], mid[i], hi[i] = 0.0, 0.5, 1.0
    f_lo, f_mid, f_hi = agg(lo), agg(mid), agg(hi)
    if abs(f_mid - (f_lo + f_hi) / 2.0) > config.EPS:
        return {"input": list(x), "coordinate": i,
                "at": [0.0, 0.5, 1.0], "values": [f_lo, f_mid, f_hi]}
    if extra_points:
        a, b, c = extra_points
        pts = []
        for t in (a, b, c):
            v = list(x)
            v[i] = t
            pts.append(agg(v))
        cross = (pts[1] - pts[0]) * (c - a) - (pts[2] - pts[0]) * (b - a)
        if abs(cross) > config.EPS:
            return {"input": list(x), "coordinate": i,
                    "at": [a, b, c], "values": pts}
    return None


def _check_an1(agg, x):
    got = agg(list(x))
    if abs(got - 1.0) > config.EPS:
        return {"input": list(x), "got": got}
    return None


def _check_ne0(agg, case):
    x, pos = case
    with_zero = list(x)
    with_zero.insert(pos, 0.0)
    before, after = agg(list(x)), agg(with_zero)
    if abs(before - after) > config.EPS:
        return {"input": list(x), "with_zero": with_zero,
                "before": before, "after": after}
    return None


def _check_sip(agg, case):
    x, k = case
    once, repeated = agg(list(x)), agg(list(x) * k)
    if abs(once - repeated) > config.EPS:
        return {"input": list(x), "copies": k,
                "once": once, "repeated": repeated}
    return None


def _check_aat(agg, case):
    x, permuted = case
    before, after = agg(list(x)), agg(list(permuted))
    if abs(before - after) > config.EPS:
        return {"input": list(x), "permuted": list(permuted),
                "values": [before, after]}
    return None


def _check_red(agg, x):
    x = list(x)
    got = agg(x)
    if all(v == 0.0 for v in x):
        if abs(got) > config.EPS:
            return {"input": x, "got": got, "required": 0.0}
    elif any(v >= 0.05 for v in x):
        if got <= config.STRICT_MARGIN:
            return {"input": x, "got": got, "required": "> 0"}
    return None


# -- case builders: turn a random base vector into the axiom's premise ---------


def _case_b01(rng, cfg):
    return _vector(rng, cfg)


def _case_bsm_plus(rng, cfg):
    return _vector(rng, cfg), rng.uniform(0.05, 1.0)


def _case_bsm_gt(rng, cfg):
    x = _vector(rng, cfg)
    j = rng.randrange(len(x))
    if x[j] > 0.9:
        x[j] = rng.uniform(0.0, 0.5)
    raised = x[j] + rng.uniform(0.1, 1.0) * (1.0 - x[j])
    if raised - x[j] < 1e-6:
        return None
    return x, j, raised


def _case_lin(rng, cfg):
    x = _vector(rng, cfg)
    points = tuple(sorted(rng.random() for _ in range(3)))
    if points[1] - points[0] < 1e-6 or points[2] - points[1] < 1e-6:
        points = (0.2, 0.5, 0.9)
    return x, rng.randrange(len(x)), points


def _case_an1(rng, cfg):
    x = _vector(rng, cfg)
    x[rng.randrange(len(x))] = 1.0
    return x


def _case_ne0(rng, cfg):
    x = _vector(rng, cfg)
    return x, rng.randint(0, len(x))


def _case_sip(rng, cfg):
    return _vector(rng, cfg), rng.choice((2, 3))


def _case_aat(rng, cfg):
    x = _vector(rng, cfg, min_dim=max(2, cfg.min_dim))
    return x, rng.sample(x, len(x))


def _case_red(rng, cfg):
    x = _vector(rng, cfg)
    if rng.random() < 0.3:
        return [0.0] * len(x)
    x[rng.randrange(len(x))] = rng.uniform(0.05, 1.0)
    return x


_CHECKERS = {
    B01: _check_b01,
    BSM_PLUS: _check_bsm_plus,
    BSM_GT: _check_bsm_gt,
    LIN: _check_lin,
    AN1: _check_an1,
    NE0: _check_ne0,
    SIP: _check_sip,
    AAT: _check_aat,
    RED: _check_red,
}

_CASE_BUILDERS = {
    B01: _case_b01,
    BSM_PLUS: _case_bsm_plus,
    BSM_GT: _case_bsm_gt,
    LIN: _case_lin,
    AN1: _case_an1,
    NE0: _case_ne0,
    SIP: _case_sip,
    AAT: _case_aat,
    RED: _case_red,
}
