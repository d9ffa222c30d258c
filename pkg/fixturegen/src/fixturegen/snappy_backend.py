"""Backend driving SnapPy's knot Floer calculator.

Import of the tool is deferred to construction time so the rest of the
package (and its tests) work without it.  Raw values are coerced to the
shapes export.translate expects; anything surprising is surfaced as an
ExportError instead of being repaired silently.
"""

from __future__ import annotations

from .export import ExportError, ToolMissingError


class SnapPyBackend:
    def __init__(self):
        try:
            import snappy
        except ImportError as err:
            raise ToolMissingError(
                "the SnapPy calculator is not installed; install it with "
                "'pip install snappy' (or 'pip install fixturegen[snappy]') "
                "and rerun") from err
        self._snappy = snappy

    def compute(self, name, include_complex):
        try:
            link = self._snappy.Link(name)
        except Exception as err:
            raise ExportError(
                "SnapPy does not recognize the knot name %r: %s"
                % (name, err)) from err
        raw = link.knot_floer_homology(complex=include_complex)
        if not isinstance(raw, dict) or "ranks" not in raw:
            raise ExportError(
                "unexpected calculator output for %r: %r" % (name, raw))
        out = {"ranks": {tuple(k): v for k, v in raw["ranks"].items()}}
        if include_complex:
            gens = raw.get("generators")
            diffs = raw.get("differentials")
            if gens is None or diffs is None:
                raise ExportError(
                    "calculator output for %r lacks the chain complex even "
                    "though it was requested" % name)
            out["generators"] = {
                int(k): (int(v[0]), int(v[1])) for k, v in gens.items()}
            out["differentials"] = {
                (int(k[0]), int(k[1])): int(v) for k, v in diffs.items()}
        return out
