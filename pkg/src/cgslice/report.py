"""Report and certificate serialization: JSON for machines, YAML-style text for people."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

import yaml

from . import __version__
from .cyclotomic import RootOfUnity
from .obstruction import (
    Inequality,
    NonSliceCertificate,
    RootWindows,
    SignatureWindow,
    SweepRow,
)


def frac_str(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _window(w: SignatureWindow) -> list[str]:
    return [frac_str(w.lower), frac_str(w.upper)]


def _unwindow(v) -> SignatureWindow:
    return SignatureWindow(Fraction(v[0]), Fraction(v[1]))


def certificate_to_dict(c: NonSliceCertificate) -> dict[str, Any]:
    return {
        "w": c.w,
        "d": c.d,
        "zeta1": [c.zeta1.d, c.zeta1.p],
        "zeta2": [c.zeta2.d, c.zeta2.p],
        "sigma1": c.sigma1,
        "sigma2": c.sigma2,
        "inequalities": [
            {"lhs": i.lhs, "rel": i.rel, "rhs": i.rhs, "holds": i.holds} for i in c.inequalities
        ],
        "transcript": [
            {
                "lambda": row.lam,
                "f": row.f,
                "branch": row.branch,
                "contradiction": row.contradiction,
                "roots": [
                    {
                        "p": r.p,
                        "sigma": r.sigma,
                        "coprime_window": _window(r.coprime),
                        "mirrored_window": _window(r.mirrored),
                        "coprime_excludes": r.coprime.excludes_unit_interval(),
                        "mirrored_excludes": r.mirrored.excludes_unit_interval(),
                        "F_args": list(r.F_args),
                        "F": frac_str(r.F),
                        "F_within_bounds": r.F_within_bounds,
                    }
                    for r in row.roots
                ],
            }
            for row in c.transcript
        ],
        "knot": c.knot,
    }


def certificate_from_dict(data: dict[str, Any]) -> NonSliceCertificate:
    transcript = []
    for row in data["transcript"]:
        roots = tuple(
            RootWindows(
                p=r["p"],
                sigma=r["sigma"],
                coprime=_unwindow(r["coprime_window"]),
                mirrored=_unwindow(r["mirrored_window"]),
                F_args=tuple(r["F_args"]),
                F=Fraction(r["F"]),
                F_within_bounds=r["F_within_bounds"],
            )
            for r in row["roots"]
        )
        transcript.append(SweepRow(row["lambda"], row["f"], row["branch"], roots))
    return NonSliceCertificate(
        w=data["w"],
        d=data["d"],
        zeta1=RootOfUnity(*data["zeta1"]),
        zeta2=RootOfUnity(*data["zeta2"]),
        sigma1=data["sigma1"],
        sigma2=data["sigma2"],
        inequalities=tuple(Inequality(**i) for i in data["inequalities"]),
        transcript=tuple(transcript),
        knot=data.get("knot"),
    )


def to_text(data: Any) -> str:
    """Canonical key-value text; key order is preserved."""
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, width=100)


def certificate_to_text(c: NonSliceCertificate) -> str:
    return to_text({"certificate": certificate_to_dict(c)})


@dataclass
class Report:
    command: str
    params: dict[str, Any]
    result: dict[str, Any]
    status: int = 0
    version: str = field(default=__version__)

    def to_dict(self) -> dict[str, Any]:
        return {
            "command": self.command,
            "version": self.version,
            "params": self.params,
            "status": self.status,
            "result": self.result,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        d = json.loads(text)
        return cls(d["command"], d["params"], d["result"], d["status"], d["version"])

    def to_text(self) -> str:
        return to_text(self.to_dict())
