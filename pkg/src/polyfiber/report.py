"""JSON-ready dictionaries and plain-text rendering for certificates and fiber reports."""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from typing import Any

from polyfiber.certify import Certificate, DetStatus
from polyfiber.fiber import FiberReport
from polyfiber.parser import render
from polyfiber.realalg import Isolation, RootOf, ZeroSolutionVerdict
from polyfiber.systems import CombinedSystem, HomogSystem


def rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def coordinate(c) -> Any:
    if isinstance(c, RootOf):
        out = {"root_of": render(c.poly.to_multipoly(), ["t"])}
        if c.interval is not None:
            out["interval"] = [rational(c.interval.lo), rational(c.interval.hi)]
        return out
    return rational(c)


def point(pt) -> list | None:
    return None if pt is None else [coordinate(c) for c in pt]


def degree(d) -> int | None:
    return d if isinstance(d, int) else None


def system_dict(sys) -> dict:
    if isinstance(sys, HomogSystem):
        kind, polys = "homogeneous", sys.forms
    elif isinstance(sys, CombinedSystem):
        kind, polys = "combined", sys.equations
    else:
        raise TypeError(f"not a system: {sys!r}")
    return {"kind": kind, "nvars": sys.nvars, "polys": [render(p) for p in polys],
            "degrees": [degree(d) for d in sys.degrees]}


def subverdict_dict(v: ZeroSolutionVerdict) -> dict:
    return {"status": v.status.value, "field": v.field.value, "point": point(v.point),
            "reason": v.reason}


def det_status_dict(ds: DetStatus | None) -> dict | None:
    if ds is None:
        return None
    return {"kind": ds.kind.value, "determinant": render(ds.determinant),
            "value": None if ds.value is None else rational(ds.value), "point": point(ds.point)}


def _note(v):
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, Fraction):
        return rational(v)
    if isinstance(v, (tuple, list)):
        return [_note(x) for x in v]
    return str(v)


def certificate_dict(cert: Certificate) -> dict:
    ev = cert.evidence
    return {
        "verdict": cert.verdict.value,
        "via": cert.via,
        "reason": cert.reason,
        "witness": point(cert.witness),
        "assumptions": list(cert.assumptions),
        "evidence": {
            "systems": {k: system_dict(s) for k, s in ev.systems.items()},
            "subverdicts": {k: subverdict_dict(v) for k, v in ev.subverdicts.items()},
            "gates": dict(ev.gates),
            "bezout": ev.bezout,
            "det_status": det_status_dict(ev.det_status),
            "parity": None if ev.parity is None else ev.parity.value,
            "notes": {k: _note(v) for k, v in ev.notes.items()},
        },
    }


def _iso_dict(iso: Isolation) -> list[str]:
    return [rational(iso.lo), rational(iso.hi)]


def fiber_dict(rep: FiberReport) -> dict:
    return {
        "target": [rational(a) for a in rep.target],
        "status": rep.status.value,
        "count": rep.count,
        "parity": rep.parity.value,
        "bezout": rep.bezout,
        "points": [{"x": _iso_dict(p.x), "y": _iso_dict(p.y),
                    "exact": None if p.exact is None else [rational(c) for c in p.exact]}
                   for p in rep.points],
    }


def load_schema() -> dict:
    return json.loads(resources.files("polyfiber.schema").joinpath("report.schema.json").read_text())


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=False)


# --- text ----------------------------------------------------------------------

def _point_text(pt) -> str:
    return "(" + ", ".join(str(c) if isinstance(c, RootOf) else rational(c) for c in pt) + ")"


def certificate_text(cert: Certificate) -> str:
    lines = [f"[{cert.via}] {cert.verdict.value}"]
    if cert.reason:
        lines.append(f"  reason: {cert.reason}")
    if cert.witness is not None:
        lines.append(f"  witness: {_point_text(cert.witness)}")
    for a in cert.assumptions:
        lines.append(f"  assumption: {a}")
    ev = cert.evidence
    if ev.det_status is not None:
        lines.append(f"  determinant: {render(ev.det_status.determinant)} -> {ev.det_status.kind.value}")
    for name, sys in ev.systems.items():
        polys = sys.forms if isinstance(sys, HomogSystem) else sys.equations
        lines.append(f"  system {name}: " + "; ".join(render(p) for p in polys))
    for name, v in ev.subverdicts.items():
        extra = f" at {_point_text(v.point)}" if v.point is not None else ""
        lines.append(f"  {name}: {v.status.value}{extra}")
    if ev.bezout is not None:
        lines.append(f"  bezout: {ev.bezout}")
    if ev.parity is not None:
        lines.append(f"  parity: {ev.parity.value}")
    return "\n".join(lines)


def _dec(q) -> str:
    # exact endpoints stay in the JSON report
    return rational(q) if q.denominator == 1 else f"{float(q):.9g}"


def fiber_text(rep: FiberReport) -> str:
    head = f"fiber over ({', '.join(rational(a) for a in rep.target)}): {rep.status.value}"
    lines = [head]
    if rep.count is not None:
        lines.append(f"  count: {rep.count}  parity: {rep.parity.value}  bezout: {rep.bezout}")
    else:
        lines.append(f"  bezout: {rep.bezout}")
    for p in rep.points:
        if p.exact is not None:
            lines.append(f"  point {_point_text(p.exact)}")
        else:
            lines.append(f"  box x in [{_dec(p.x.lo)}, {_dec(p.x.hi)}], "
                         f"y in [{_dec(p.y.lo)}, {_dec(p.y.hi)}]")
    return "\n".join(lines)
