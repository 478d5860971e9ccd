"""Documented compliance matrices for the built-in functions.

True means the built-in is expected to satisfy the axiom on every instance;
False means counterexamples exist (the known witnesses live in the test
suite). Two cells deserve a note (see README): the sum escapes [0,1] on
inputs like [1,1], so sum/B01 is False even though the sum is otherwise
well behaved; and max/NE0 is True because the maximum of [0,1] entries is
provably invariant under inserting or deleting a 0.
"""

MEMBER_MATRIX = {
    "like": {"KSym": False, "AMC": True, "AMCSim": True, "FMC": True, "FMCSim": True},
    "risk": {"KSym": True, "AMC": False, "AMCSim": True, "FMC": True, "FMCSim": True},
    "negl": {"KSym": True, "AMC": True, "AMCSim": True, "FMC": False, "FMCSim": True},
}

AGGREGATION_MATRIX = {
    "sum": {"B01": False, "BSMPlus": True, "BSMGt": True, "LIN": True,
            "AN1": False, "NE0": True, "SIP": False, "AAT": True, "RED": True},
    "avg": {"B01": True, "BSMPlus": False, "BSMGt": True, "LIN": True,
            "AN1": False, "NE0": False, "SIP": True, "AAT": True, "RED": True},
    "max": {"B01": True, "BSMPlus": False, "BSMGt": False, "LIN": False,
            "AN1": True, "NE0": True, "SIP": True, "AAT": True, "RED": True},
    "mprod": {"B01": True, "BSMPlus": True, "BSMGt": True, "LIN": True,
              "AN1": True, "NE0": True, "SIP": False, "AAT": True, "RED": True},
}

# composed with an aggregator satisfying bounded strict monotonicity and
# reducibility (mprod is the canonical choice)
OUTCOME_MATRIX = {
    "like": {"NRV": True, "NIRV": True, "NUR": True, "CC": True},
    "risk": {"NRV": True, "NIRV": True, "NUR": False, "CC": True},
    "negl": {"NRV": False, "NIRV": False, "NUR": True, "CC": True},
}

CHARACTERIZATION_BATTERY = ("LIN", "AAT", "NE0", "AN1")
