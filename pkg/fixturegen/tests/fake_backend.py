"""A stand-in calculator for tests: canned raw payloads, call logging."""

from fixturegen.export import ExportError

# raw payloads in the calculator's shape: ranks keyed by
# (alexander, maslov), generators by integer index, differentials by
# (source index, target index)
RAW = {
    "T(2,3)": {
        "ranks": {(1, 0): 1, (0, -1): 1, (-1, -2): 1},
        "generators": {0: (1, 0), 1: (0, -1), 2: (-1, -2)},
        "differentials": {(1, 2): 1},
    },
    "-T(2,3)": {
        "ranks": {(1, 2): 1, (0, 1): 1, (-1, 0): 1},
        "generators": {0: (-1, 0), 1: (0, 1), 2: (1, 2)},
        "differentials": {(2, 1): 1},
    },
    "T(2,5)": {
        "ranks": {(2, 0): 1, (1, -1): 1, (0, -2): 1, (-1, -3): 1,
                  (-2, -4): 1},
        "generators": {0: (2, 0), 1: (1, -1), 2: (0, -2), 3: (-1, -3),
                       4: (-2, -4)},
        "differentials": {(1, 2): 1, (3, 4): 1},
    },
    "-T(2,5)": {
        "ranks": {(2, 4): 1, (1, 3): 1, (0, 2): 1, (-1, 1): 1, (-2, 0): 1},
        "generators": {0: (-2, 0), 1: (-1, 1), 2: (0, 2), 3: (1, 3),
                       4: (2, 4)},
        "differentials": {(2, 1): 1, (4, 3): 1},
    },
    "4_1": {
        "ranks": {(1, 1): 1, (0, 0): 3, (-1, -1): 1},
        "generators": {0: (0, 0), 1: (1, 1), 2: (0, 0), 3: (0, 0),
                       4: (-1, -1)},
        "differentials": {(1, 2): 1, (3, 4): 1},
    },
    "unknot": {
        "ranks": {(0, 0): 1},
        "generators": {0: (0, 0)},
        "differentials": {},
    },
    # deliberately breaks the grading symmetry
    "asym": {
        "ranks": {(1, 0): 1},
        "generators": {0: (1, 0)},
        "differentials": {},
    },
}


class FakeBackend:
    def __init__(self, raw=None):
        self.raw = RAW if raw is None else raw
        self.calls = []

    def compute(self, name, include_complex):
        self.calls.append((name, include_complex))
        if name not in self.raw:
            raise ExportError("unknown knot %r" % name)
        entry = self.raw[name]
        out = {"ranks": dict(entry["ranks"])}
        if include_complex:
            out["generators"] = dict(entry["generators"])
            out["differentials"] = dict(entry["differentials"])
        return out
