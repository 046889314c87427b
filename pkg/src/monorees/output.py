"""Payload construction, canonical JSON and the computer-algebra check script."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

from .adjoint import AdjointReport
from .euclid import EuclidData, InputPair, SersData
from .polyengine import InducedOrder, ModuleElement, Polynomial
from .reesfamilies import GeneratorFamily, PairContext, Resolution, SyzygyFamilyOne, SyzygyFamilyTwo

SCHEMA_VERSION = "1"


@dataclass
class OutputDocument:
    command: str
    input: dict
    payload: dict
    schema_version: str = SCHEMA_VERSION

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "OutputDocument":
        data = json.loads(text)
        return cls(**data)


def pair_input(pair: InputPair) -> dict:
    return {"d": pair.d, "u": pair.u}


def euclid_payload(e: EuclidData, s: SersData) -> dict:
    rows = []
    for n in range(1, s.q + 2):
        sg, t, a, b = s.tuple4(n)
        rows.append({"n": n, "b": s.b(n), "c": s.c(n), "sigma": sg, "tau": t, "alpha": a, "beta": b})
    return {
        "a_seq": list(e.a_seq),
        "q_seq": list(e.q_seq),
        "p": e.p,
        "q": e.q,
        "s_seq": list(e.s_seq),
        "t_seq": list(e.t_seq),
        "m_seq": list(s.m_seq),
        "sers": rows,
    }


def euclid_text(payload: dict) -> str:
    lines = [
        f"a = {payload['a_seq']}",
        f"quotients = {payload['q_seq']}",
        f"p = {payload['p']}, q = {payload['q']}",
        f"(s, t) = {list(zip(payload['s_seq'], payload['t_seq']))}",
        f"m = {payload['m_seq']}",
        "n  b  c  sigma  tau  alpha  beta",
    ]
    for r in payload["sers"]:
        lines.append(f"{r['n']} {r['b']} {r['c']} {r['sigma']} {r['tau']} {r['alpha']} {r['beta']}")
    return "\n".join(lines) + "\n"


def generators_payload(ctx: PairContext, f0: GeneratorFamily) -> dict:
    order = ctx.order
    return {
        "order": order.variant,
        "generators": [
            {"index": n, "polynomial": g.to_text(order), "bidegree": list(b)}
            for n, (g, b) in enumerate(zip(f0.elements, f0.bidegrees), start=1)
        ],
    }


def syzygies_payload(ctx: PairContext, f0: GeneratorFamily, f1: SyzygyFamilyOne,
                     f2: SyzygyFamilyTwo | None, level: int) -> dict:
    order1 = InducedOrder(f0.elements, ctx.order)
    if level == 1:
        return {
            "level": 1,
            "rank": len(f0),
            "elements": [
                {"label": list(lab), "element": s.to_text(order1), "twist": list(tw)}
                for lab, s, tw in zip(f1.labels, f1.elements, f1.twists)
            ],
        }
    order2 = InducedOrder(f1.elements, order1)
    return {
        "level": 2,
        "rank": len(f1),
        "basis": [list(lab) for lab in f1.labels],
        "elements": [
            {"label": list(lab), "element": s.to_text(order2), "twist": list(tw)}
            for lab, s, tw in zip(f2.labels, f2.elements, f2.twists)
        ],
    }


def resolution_payload(ctx: PairContext, res: Resolution) -> dict:
    order1 = InducedOrder(res.phi1, ctx.order)
    order2 = InducedOrder(res.phi2, order1)
    return {
        "ranks": list(res.ranks),
        "twists": [[list(t) for t in tw] for tw in res.twists],
        "phi1": [g.to_text(ctx.order) for g in res.phi1],
        "phi2": [c.to_text(order1) for c in res.phi2],
        "phi3": [c.to_text(order2) for c in res.phi3],
        "f1_labels": [list(x) for x in res.f1_labels],
        "f2_labels": [list(x) for x in res.f2_labels],
    }


def betti_payload(res: Resolution) -> dict:
    positions = []
    for tw in res.twists:
        counts: dict = {}
        for t in tw:
            counts[t] = counts.get(t, 0) + 1
        positions.append([{"bidegree": list(b), "count": c} for b, c in sorted(counts.items())])
    return {"positions": positions}


def betti_text(payload: dict) -> str:
    lines = []
    for k, pos in enumerate(payload["positions"]):
        parts = []
        for entry in pos:
            a, b = entry["bidegree"]
            parts.append(f"S(-{a},-{b})" + (f"^{entry['count']}" if entry["count"] > 1 else ""))
        lines.append(f"F{k}: " + " + ".join(parts))
    return "\n".join(lines) + "\n"


def adjoint_payload(r: AdjointReport) -> dict:
    return {
        "ell": r.ell,
        "dim_adj": r.dim_adj,
        "dim_ker_1": r.dim_ker_1,
        "nu": r.nu,
        "breakdown": list(r.breakdown),
        "forbidden_alpha": sorted(list(a) for a in r.forbidden_alpha),
        "forbidden_beta": sorted(list(b) for b in r.forbidden_beta),
        "bound": r.bound,
        "singular": [{"point": list(p), "multiplicity": m} for p, m in r.singular],
        "below_threshold": r.below_threshold,
    }


def adjoint_text(payload: dict) -> str:
    lines = [
        f"ell = {payload['ell']}",
        f"dim adjoint pencils = {payload['dim_adj']}"
        + (" (below threshold)" if payload["below_threshold"] else ""),
        f"dim kernel in bidegree (1, ell) = {payload['dim_ker_1']}",
        f"nu = {payload['nu']}  branches = {payload['breakdown']}  bound = {payload['bound']}",
    ]
    for s in payload["singular"]:
        p = ":".join(str(x) for x in s["point"])
        lines.append(f"singular point ({p}) multiplicity {s['multiplicity']}")
    return "\n".join(lines) + "\n"


def flags_text(flags: dict) -> str:
    return "".join(f"{k}: {'true' if v else 'false'}\n" for k, v in sorted(flags.items()))


# ---------------------------------------------------------------------------
# Macaulay2 script


def _m2_matrix(columns: list[ModuleElement], rows: int) -> str:
    comps = [c.components() for c in columns]
    body = ",\n  ".join(
        "{" + ", ".join(comps[j][i].to_text() for j in range(len(columns))) + "}"
        for i in range(rows)
    )
    return "matrix{\n  " + body + "}"


def export_cas_script(ctx: PairContext, f0: GeneratorFamily, f1: SyzygyFamilyOne,
                      f2: SyzygyFamilyTwo) -> str:
    """A Macaulay2 script that re-checks the kernel and both syzygy modules."""
    d, u = ctx.d, ctx.u
    gens = ", ".join(g.to_text() for g in f0.elements)
    lines = [
        f"-- independent check for (d, u) = ({d}, {u})",
        "S = QQ[T0, T1, X0, X1, X2];",
        "R = QQ[T0, T1, Z];",
        f"phi = map(R, S, {{T0, T1, Z*T0^{d}, Z*T0^{d - u}*T1^{u}, Z*T1^{d}}});",
        f"Phi1 = matrix{{{{{gens}}}}};",
        "assert(ideal Phi1 == ker phi);",
        f"Phi2 = {_m2_matrix(list(f1.elements), len(f0))};",
        "assert(Phi1 * Phi2 == 0);",
        "assert(image Phi2 == kernel Phi1);",
    ]
    if len(f2):
        lines += [
            f"Phi3 = {_m2_matrix(list(f2.elements), len(f1))};",
            "assert(Phi2 * Phi3 == 0);",
            "assert(image Phi3 == kernel Phi2);",
            "assert(kernel Phi3 == 0);",
        ]
    else:
        lines.append("assert(kernel Phi2 == 0);")
    lines.append('print "all checks passed"')
    return "\n".join(lines) + "\n"


def decode_polynomials(texts: list[str]) -> list[Polynomial]:
    from .polyengine import parse_polynomial

    return [parse_polynomial(t) for t in texts]


def decode_module_elements(texts: list[str], rank: int) -> list[ModuleElement]:
    from .polyengine import parse_module_element

    return [parse_module_element(t, rank) for t in texts]
