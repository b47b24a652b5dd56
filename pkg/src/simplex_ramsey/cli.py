"""``simplex-ramsey`` command line tool.

Input is JSON, either ``{"points": [[x, ...], ...]}`` or
``{"sqdist": [[...], ...]}``, read from a file path or standard input.
Scalars may be integers, decimal literals, or strings like ``"7/4"``;
decimal literals are read from their text, never through a binary float.

Output is JSON with sorted keys.  Rationals are written ``"p/q"``, vertex
indices are 1-based, and subsets are sorted index arrays.

Exit codes: 0 decided, 1 input error, 2 degenerate simplex,
3 undecided or infeasible.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import deficits as dfc
from .errors import (
    DegenerateSimplex,
    DuplicatePoints,
    InconsistentCertificate,
    MalformedMatrix,
    NotADiameterPair,
    ParseError,
    TooManyVertices,
)
from .exactgeom import (
    CircumcenterResult,
    SquaredDistanceMatrix,
    as_rational,
    cf_obstruction,
    circumcenter_barycentric,
    circumcenter_in_hull,
    diameter_sq,
    format_rational,
    is_nondegenerate_simplex,
    sqdist_from_points,
)
from .family import FamilyParams, FamilyReport, counterexample_report
from .ramseytoy import ArrowStatus, ArrowVerdict, FiniteConfig, arrow_check

EXIT_OK, EXIT_INPUT, EXIT_DEGENERATE, EXIT_UNDECIDED = 0, 1, 2, 3

DIAMETER_RAMSEY = "DIAMETER_RAMSEY"
NOT_DIAMETER_RAMSEY = "NOT_DIAMETER_RAMSEY"
UNKNOWN = "UNKNOWN"


class InputError(Exception):
    pass


# -- wire format -----------------------------------------------------------------

def rat(x) -> str:
    return format_rational(x)


def read_json(source: str | None) -> Any:
    try:
        if source in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        # keep decimal literals as text so they parse exactly
        return json.loads(text, parse_float=str)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from exc


def sqdist_from_json(obj: Any) -> SquaredDistanceMatrix:
    """Parse a ``points`` or ``sqdist`` object into a squared-distance matrix."""
    if not isinstance(obj, dict):
        raise InputError("input must be a JSON object")
    keys = {"points", "sqdist"} & set(obj)
    if len(keys) != 1:
        raise InputError("give exactly one of 'points' or 'sqdist'")
    if "points" in obj:
        pts = obj["points"]
        if not isinstance(pts, list) or not all(isinstance(p, list) for p in pts):
            raise InputError("'points' must be a list of coordinate lists")
        return sqdist_from_points(pts)
    rows = obj["sqdist"]
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputError("'sqdist' must be a list of rows")
    return SquaredDistanceMatrix(tuple(tuple(r) for r in rows))


def sqdist_to_json(M: SquaredDistanceMatrix) -> list[list[str]]:
    return [[rat(x) for x in row] for row in M.entries]


def pair_to_json(pair) -> list[int]:
    return [pair[0] + 1, pair[1] + 1]


def subset_to_json(B) -> list[int]:
    return sorted(v + 1 for v in B)


def circumcenter_to_json(c: CircumcenterResult) -> dict:
    return {"lambdas": [rat(x) for x in c.lambdas],
            "two_rho_sq": rat(c.two_rho_sq),
            "rho_sq": rat(c.rho_sq)}


def circumcenter_from_json(obj: dict) -> CircumcenterResult:
    return CircumcenterResult(tuple(as_rational(x) for x in obj["lambdas"]),
                              as_rational(obj["two_rho_sq"]))


def decomposition_to_json(dec: dfc.DeficitDecomposition) -> dict:
    masses = sorted(((subset_to_json(B), a) for B, a in dec.masses.items()),
                    key=lambda e: (len(e[0]), e[0]))
    return {"n": dec.n,
            "pair": pair_to_json(dec.diameter_pair),
            "diam_sq": rat(dec.diam_sq),
            "masses": [{"B": B, "alpha": rat(a)} for B, a in masses],
            "reserve": rat(dec.reserve)}


def decomposition_from_json(obj: dict) -> dfc.DeficitDecomposition:
    masses = {}
    for entry in obj["masses"]:
        B = tuple(sorted(int(v) - 1 for v in entry["B"]))
        masses[B] = masses.get(B, Fraction(0)) + as_rational(entry["alpha"])
    i, j = (int(v) - 1 for v in obj["pair"])
    return dfc.DeficitDecomposition(int(obj["n"]), masses, as_rational(obj["reserve"]),
                                    (min(i, j), max(i, j)), as_rational(obj["diam_sq"]))


def _vertex_name(label) -> str:
    return f"v{label + 1}" if isinstance(label, int) else str(label)


def embedding_to_json(emb: dfc.ProductEmbedding) -> dict:
    factors = []
    for f in emb.factors:
        entry = {"kind": f.kind, "side_sq": rat(f.side_sq), "size": f.size,
                 "vertices": [_vertex_name(v) for v in f.vertices]}
        if f.subset is not None:
            entry["B"] = subset_to_json(f.subset)
        factors.append(entry)
    return {"pair": pair_to_json(emb.diameter_pair),
            "factors": factors,
            "assignment": [[_vertex_name(v) for v in row] for row in emb.assignment],
            "derived_sqdist": sqdist_to_json(emb.derived_sqdist),
            "product_diam_sq": rat(emb.product_diam_sq)}


def embedding_summary(emb: dfc.ProductEmbedding) -> dict:
    return {"pair": pair_to_json(emb.diameter_pair),
            "factors": [{"kind": f.kind, "side_sq": rat(f.side_sq), "size": f.size,
                         **({"B": subset_to_json(f.subset)} if f.subset is not None else {})}
                        for f in emb.factors],
            "product_diam_sq": rat(emb.product_diam_sq)}


def family_report_to_json(r: FamilyReport) -> dict:
    p = r.params
    return {"params": {"d": p.d, "s": rat(p.s), "t": rat(p.t), "u": rat(p.u)},
            "sqdist": sqdist_to_json(r.sqdist),
            "closed_form_lambdas": [rat(x) for x in r.closed_form_lambdas],
            "solver_lambdas": [rat(x) for x in r.solver_lambdas],
            "two_rho_sq": rat(r.two_rho_sq),
            "rho_sq": rat(r.rho_sq),
            "delta_d": rat(r.delta_d),
            "outside": r.outside,
            "decomposition": decomposition_to_json(r.decomposition),
            "decomposition_verified": r.decomposition_verified,
            "cf_obstructed": r.cf_obstructed,
            "verdict": r.verdict.value}


def arrow_verdict_to_json(v: ArrowVerdict) -> dict:
    return {"status": v.status.value,
            "witness_coloring": list(v.witness_coloring) if v.witness_coloring else None,
            "colorings_checked": v.colorings_checked}


def dump(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


# -- check -------------------------------------------------------------------------

@dataclass
class CheckReport:
    sqdist: SquaredDistanceMatrix
    diam_sq: Fraction
    diameter_pairs: list
    circumcenter: CircumcenterResult
    in_hull: bool
    cf_obstructed: bool
    pairwise: tuple[bool, Fraction]
    decompositions: dict      # pair -> decomposition, None, or "skipped"
    embedding: dfc.ProductEmbedding | None
    verdict: str

    def to_json(self) -> dict:
        decs = []
        for pair, dec in self.decompositions.items():
            entry = {"pair": pair_to_json(pair)}
            if dec == "skipped":
                entry["status"] = "skipped"
            elif dec is None:
                entry["status"] = "infeasible"
            else:
                entry["status"] = "feasible"
                entry["certificate"] = decomposition_to_json(dec)
            decs.append(entry)
        return {"n": self.sqdist.n,
                "diam_sq": rat(self.diam_sq),
                "diameter_pairs": [pair_to_json(p) for p in self.diameter_pairs],
                "circumcenter": circumcenter_to_json(self.circumcenter),
                "in_hull": self.in_hull,
                "cf_obstructed": self.cf_obstructed,
                "pairwise": {"holds": self.pairwise[0], "sum": rat(self.pairwise[1])},
                "decompositions": decs,
                "embedding": embedding_summary(self.embedding) if self.embedding else None,
                "verdict": self.verdict}


def check_simplex(M: SquaredDistanceMatrix, max_n: int | None = None) -> CheckReport:
    """Run every test on one simplex: obstruction, both criteria, hull geometry."""
    if not is_nondegenerate_simplex(M):
        raise DegenerateSimplex("vertices are affinely dependent or not embeddable")
    D2, pairs = diameter_sq(M)
    circ = circumcenter_barycentric(M)
    obstructed = cf_obstruction(circ.rho_sq, D2)
    pairwise = dfc.pairwise_criterion(dfc.deficit_profile(M, pairs[0]))
    decs: dict = {}
    embedding = None
    for pr in pairs:
        prof = dfc.deficit_profile(M, pr)
        try:
            dec = dfc.find_decomposition(prof, max_n)
        except TooManyVertices:
            decs[pr] = "skipped"
            continue
        if dec is not None and not dfc.verify_decomposition(prof, dec):
            raise InconsistentCertificate(f"LP certificate for pair {pr} does not verify")
        decs[pr] = dec
        if dec is not None and embedding is None:
            embedding = dfc.build_embedding(dec)
    certified = any(isinstance(d, dfc.DeficitDecomposition) for d in decs.values())
    if certified and obstructed:
        raise InconsistentCertificate("criterion holds but circumradius exceeds D/sqrt(2)")
    if certified:
        verdict = DIAMETER_RAMSEY
    elif obstructed:
        verdict = NOT_DIAMETER_RAMSEY
    else:
        verdict = UNKNOWN
    return CheckReport(M, D2, pairs, circ, circumcenter_in_hull(circ), obstructed,
                       pairwise, decs, embedding, verdict)


def render_check(r: CheckReport) -> str:
    lines = [f"Simplex on {r.sqdist.n} vertices, squared diameter {rat(r.diam_sq)} "
             f"attained at {', '.join(str(tuple(pair_to_json(p))) for p in r.diameter_pairs)}."]
    lams = ", ".join(rat(x) for x in r.circumcenter.lambdas)
    lines.append(f"Circumcenter (barycentric): ({lams}); rho^2 = {rat(r.circumcenter.rho_sq)}.")
    lines.append("The circumcenter lies in the closed convex hull." if r.in_hull
                 else "The circumcenter lies outside the convex hull.")
    if r.cf_obstructed:
        lines.append(f"2 rho^2 = {rat(r.circumcenter.two_rho_sq)} > D^2 = {rat(r.diam_sq)}: "
                     "the circumradius exceeds diam/sqrt(2), so the simplex is NOT diameter-Ramsey.")
    ok, total = r.pairwise
    lines.append(f"Pairwise deficit sum {rat(total)} "
                 + ("<=" if ok else ">") + f" D^2 = {rat(r.diam_sq)}: pairwise criterion "
                 + ("holds." if ok else "does not apply."))
    for pair, dec in r.decompositions.items():
        tag = tuple(pair_to_json(pair))
        if dec == "skipped":
            lines.append(f"Diameter pair {tag}: decomposition search skipped (vertex cap).")
        elif dec is None:
            lines.append(f"Diameter pair {tag}: no deficit decomposition exists.")
        else:
            parts = ", ".join(f"alpha{{{','.join(map(str, subset_to_json(B)))}}} = {rat(a)}"
                              for B, a in sorted(dec.masses.items(), key=lambda e: (len(e[0]), e[0])))
            lines.append(f"Diameter pair {tag}: decomposition {parts or '(no masses)'}, "
                         f"reserve {rat(dec.reserve)}; higher-order deficit criterion holds.")
    if r.embedding is not None:
        lines.append(f"Embedding into {len(r.embedding.factors)} regular-simplex factors, "
                     f"product squared diameter {rat(r.embedding.product_diam_sq)}.")
    lines.append(f"Verdict: {r.verdict}.")
    return "\n".join(lines)


def render_family(r: FamilyReport) -> str:
    p = r.params
    lams = ", ".join(rat(x) for x in r.solver_lambdas)
    masses = ", ".join(f"alpha{{{','.join(map(str, subset_to_json(B)))}}} = {rat(a)}"
                       for B, a in r.decomposition.masses.items())
    return "\n".join([
        f"A_{p.d}(s={rat(p.s)}, t={rat(p.t)}, u={rat(p.u)}): squared diameter {rat(p.diam_sq)}.",
        f"Circumcenter (barycentric): ({lams}); closed form agrees; Delta_d = {rat(r.delta_d)}.",
        f"rho^2 = {rat(r.rho_sq)}; obstruction 2 rho^2 > D^2: {r.cf_obstructed}.",
        f"Decomposition {masses}, reserve {rat(r.decomposition.reserve)}: "
        + ("verified." if r.decomposition_verified else "FAILED verification."),
        "Circumcenter outside the hull." if r.outside else "Circumcenter inside the hull.",
        f"Verdict: {r.verdict.value}.",
    ])


# -- commands ----------------------------------------------------------------------

def _load_simplex(args) -> SquaredDistanceMatrix:
    M = sqdist_from_json(read_json(args.input))
    if not is_nondegenerate_simplex(M):
        raise DegenerateSimplex("vertices are affinely dependent or not embeddable")
    return M


def cmd_check(args, out) -> int:
    r = check_simplex(_load_simplex(args), args.max_n)
    out.write((render_check(r) if args.human else dump(r.to_json())) + "\n")
    return EXIT_UNDECIDED if r.verdict == UNKNOWN else EXIT_OK


def cmd_family(args, out) -> int:
    try:
        p = FamilyParams(args.d, as_rational(args.s), as_rational(args.t), as_rational(args.u))
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    r = counterexample_report(p)
    out.write((render_family(r) if args.human else dump(family_report_to_json(r))) + "\n")
    return EXIT_OK


def _first_decomposition(M, args):
    _, pairs = diameter_sq(M)
    if args.pair:
        i, j = (v - 1 for v in args.pair)
        pairs = [(min(i, j), max(i, j))]
    for pr in pairs:
        try:
            prof = dfc.deficit_profile(M, pr)
        except NotADiameterPair as exc:
            raise InputError(str(exc)) from exc
        dec = dfc.find_decomposition(prof, args.max_n)
        if dec is not None:
            return dec
    return None


def cmd_decompose(args, out) -> int:
    M = _load_simplex(args)
    dec = _first_decomposition(M, args)
    if dec is None:
        out.write(dump({"status": "infeasible"}) + "\n")
        return EXIT_UNDECIDED
    out.write(dump({"status": "feasible", "certificate": decomposition_to_json(dec)}) + "\n")
    return EXIT_OK


def cmd_embed(args, out) -> int:
    M = _load_simplex(args)
    dec = _first_decomposition(M, args)
    if dec is None:
        out.write(dump({"status": "infeasible"}) + "\n")
        return EXIT_UNDECIDED
    emb = dfc.build_embedding(dec)
    payload = {"status": "feasible", "certificate": decomposition_to_json(dec),
               "embedding": embedding_to_json(emb)}
    if args.realize is not None:
        coords = dfc.realize_embedding(emb, args.realize)
        payload["coordinates"] = coords.tolist()
    out.write(dump(payload) + "\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    M = _load_simplex(args)
    cert = read_json(args.certificate)
    if "certificate" in cert:
        cert = cert["certificate"]
    try:
        dec = decomposition_from_json(cert)
        prof = dfc.deficit_profile(M, dec.diameter_pair)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"bad certificate: {exc}") from exc
    ok = dfc.verify_decomposition(prof, dec)
    out.write(dump({"valid": ok}) + "\n")
    return EXIT_OK if ok else EXIT_UNDECIDED


def cmd_ramsey_toy(args, out) -> int:
    R = sqdist_from_json(read_json(args.config))
    A = sqdist_from_json(read_json(args.pattern))
    v = arrow_check(FiniteConfig(R), A, args.q, cap=args.cap, workers=args.workers)
    out.write(dump(arrow_verdict_to_json(v)) + "\n")
    return EXIT_UNDECIDED if v.status is ArrowStatus.INFEASIBLE else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="simplex-ramsey",
        description="Exact diameter-Ramsey certificates for Euclidean simplices.")
    sub = ap.add_subparsers(dest="command", required=True)

    def simplex_cmd(name, helptext):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("input", nargs="?", default="-",
                        help="JSON file with 'points' or 'sqdist' (default: stdin)")
        sp.add_argument("--max-n", type=int, default=None,
                        help="vertex cap for the decomposition search")
        return sp

    sp = simplex_cmd("check", "full report for one simplex")
    sp.add_argument("--human", action="store_true", help="prose certificate instead of JSON")
    sp.set_defaults(func=cmd_check)

    sp = simplex_cmd("decompose", "find a deficit decomposition")
    sp.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"),
                    help="diameter pair to use (1-based); default tries all")
    sp.set_defaults(func=cmd_decompose)

    sp = simplex_cmd("embed", "build the product-of-regular-simplices embedding")
    sp.add_argument("--pair", type=int, nargs=2, metavar=("I", "J"))
    sp.add_argument("--realize", type=float, metavar="TOL", default=None,
                    help="also emit float coordinates, checked to relative tolerance TOL")
    sp.set_defaults(func=cmd_embed)

    sp = simplex_cmd("verify", "re-check a decomposition certificate")
    sp.add_argument("--certificate", required=True, help="certificate JSON file")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("family", help="report on the family A_d(s,t,u)")
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("-s", required=True)
    sp.add_argument("-t", required=True)
    sp.add_argument("-u", required=True)
    sp.add_argument("--human", action="store_true")
    sp.set_defaults(func=cmd_family)

    sp = sub.add_parser("ramsey-toy", help="exhaustively check R -> (A)_q")
    sp.add_argument("config", help="JSON for the host configuration R")
    sp.add_argument("pattern", help="JSON for the pattern A")
    sp.add_argument("-q", type=int, required=True, help="number of colors")
    sp.add_argument("--cap", type=int, default=None,
                    help="maximum q**|R| to enumerate (default 2**24)")
    sp.add_argument("--workers", type=int, default=1)
    sp.set_defaults(func=cmd_ramsey_toy)
    return ap


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (DuplicatePoints, DegenerateSimplex) as exc:
        print(f"degenerate simplex: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (InputError, ParseError, MalformedMatrix) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TooManyVertices as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNDECIDED


if __name__ == "__main__":
    sys.exit(main())
