"""Conjecture sweeps over matroid corpora.

Every item is identified by a spec string, so work can be shipped to worker
processes and the report is assembled in spec order regardless of ``jobs``.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .kl import kl_polynomial
from .lattice import LatticeTooLarge
from .matroid import contract_element, is_connected, parse_spec
from .roots import (all_roots_negative_real, interlacing_verdict,
                    is_log_concave_no_internal_zeros)

CHECKS = ("nonneg", "logconcave", "negrealroots", "nondegenerate", "interlace")


def _is_regular(M) -> bool | None:
    """True for graphic matroids and the regular uniform ones; None when unknown."""
    fam = M.family
    if fam is not None and fam[0] == "uniform":
        m, d = fam[1], fam[2]
        return min(m, d) <= 1
    if type(M).__name__ == "GraphicMatroid":
        return True
    return None


def _child_spec(spec: str, M, e: int) -> str:
    fam = contract_element(M, e).family
    if fam is None:
        return f"{spec}/{e}"
    kind, *args = fam
    names = {"uniform": "uniform", "braid": "complete", "thagomizer": "thagomizer", "k2n": "k2n"}
    return f"{names[kind]}:" + ",".join(str(a) for a in args)


def _contraction_edges(M) -> list[int]:
    # family members are edge-transitive where it matters; element 0 is a
    # non-hub edge for thagomizers and any edge of K_{2,n}
    if M.family is not None:
        return [0] if M.size else []
    return [e for e in range(M.size) if not M.is_loop(e)]


def check_one(spec: str, checks=CHECKS) -> dict:
    """Run the selected checks on one matroid.  Never raises for budget problems."""
    M = parse_spec(spec)
    row = {"spec": spec, "rank": M.full_rank, "kl": None, "checks": {}, "notes": [], "pairs": []}
    try:
        res = kl_polynomial(M)
    except LatticeTooLarge as exc:
        row["notes"].append(f"budget exceeded: {exc}")
        row["checks"] = {c: "skip" for c in checks}
        row["budget"] = True
        return row
    P, r = res.polynomial, res.matroid_rank
    row["kl"] = P.to_list()
    row["method"] = res.method
    row["notes"].extend(res.notes)
    verdict = {True: "pass", False: "fail"}
    for c in checks:
        if c == "nonneg":
            row["checks"][c] = verdict[all(x >= 0 for x in P.coeffs)]
        elif c == "logconcave":
            row["checks"][c] = verdict[is_log_concave_no_internal_zeros(P)]
        elif c == "negrealroots":
            row["checks"][c] = verdict[all_roots_negative_real(P)]
        elif c == "nondegenerate":
            regular = _is_regular(M)
            if regular and is_connected(M):
                row["checks"][c] = verdict[r == 0 or P.degree == (r - 1) // 2]
            else:
                row["checks"][c] = "skip"
                row["notes"].append("nondegenerate: hypothesis not met (needs connected regular)")
        elif c == "interlace":
            statuses = []
            for e in _contraction_edges(M):
                if r < 2:
                    break
                try:
                    child = kl_polynomial(contract_element(M, e))
                except LatticeTooLarge as exc:
                    row["notes"].append(f"interlace budget exceeded: {exc}")
                    row["budget"] = True
                    continue
                rep = interlacing_verdict(P, r, child.polynomial)
                row["pairs"].append({"parent": spec, "child": _child_spec(spec, M, e), "verdict": rep.status})
                statuses.append(rep.status)
            if "fail" in statuses:
                row["checks"][c] = "fail"
            elif "pass" in statuses:
                row["checks"][c] = "pass"
                for s in sorted(set(statuses) - {"pass"}):
                    row["notes"].append(f"interlace: some contractions reported {s}")
            else:
                row["checks"][c] = "skip"
                if statuses:
                    row["notes"].append(f"interlace: {', '.join(sorted(set(statuses)))}")
        else:
            raise ValueError(f"unknown check {c!r}")
    return row


def _check_star(args):
    return check_one(*args)


@dataclass
class SweepReport:
    corpus: str
    results: list = field(default_factory=list)

    @property
    def pairs(self) -> list[dict]:
        return [p for r in self.results for p in r["pairs"]]

    @property
    def falsifications(self) -> list[dict]:
        out = []
        for r in self.results:
            for name, v in r["checks"].items():
                if v == "fail":
                    out.append({"spec": r["spec"], "check": name, "kl": r["kl"]})
        return out

    @property
    def budget_exceeded(self) -> bool:
        return any(r.get("budget") for r in self.results)

    def summary(self) -> dict:
        counts = {}
        for r in self.results:
            for name, v in r["checks"].items():
                counts.setdefault(name, {"pass": 0, "fail": 0, "skip": 0})[v] += 1
        return counts

    @property
    def exit_code(self) -> int:
        if self.falsifications:
            return 2
        return 3 if self.budget_exceeded else 0

    def to_json_obj(self) -> dict:
        return {
            "corpus": self.corpus,
            "results": [{k: r[k] for k in ("spec", "rank", "kl", "checks", "notes")} for r in self.results],
            "interlacing": self.pairs,
            "summary": self.summary(),
            "falsifications": self.falsifications,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, indent=1)

    def to_csv(self) -> str:
        names = sorted({n for r in self.results for n in r["checks"]})
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["spec", "rank", "kl"] + names + ["notes"])
        for r in self.results:
            kl = " ".join(str(c) for c in r["kl"]) if r["kl"] is not None else ""
            w.writerow([r["spec"], r["rank"], kl] + [r["checks"].get(n, "") for n in names]
                       + ["; ".join(r["notes"])])
        return buf.getvalue()


def run_sweep(specs, checks=CHECKS, jobs: int = 1, corpus: str = "") -> SweepReport:
    specs = list(specs)
    args = [(s, tuple(checks)) for s in specs]
    if jobs > 1 and len(specs) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_check_star, args))
    else:
        rows = [check_one(*a) for a in args]
    return SweepReport(corpus or f"{len(specs)} matroids", rows)
