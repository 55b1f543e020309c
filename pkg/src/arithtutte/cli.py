"""Command-line front end.

Exit codes: 0 success, 1 internal disagreement between two computation
routes, 2 malformed input, 3 violated precondition.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .dm import dm_decomposition_check, dm_hilbert_series
from .exceptions import DimensionMismatchError, PreconditionError
from .graphs import LabeledGraph, forest_count, graph_m_tutte, spanning_tree_count
from .roots import root_system
from .toric import (
    characteristic_polynomial,
    compact_regions,
    enumerate_layers,
    euler_characteristic,
    poincare_polynomial,
)
from .tutte import (
    CharacterList,
    activities,
    hyperplane_char_poly,
    m_tutte_expansion,
    m_tutte_recursive,
    nbc_count,
    ordinary_tutte,
)
from .zonotope import lattice_points, shifted_points, stratification

EXIT_MISMATCH, EXIT_MALFORMED, EXIT_PRECONDITION = 1, 2, 3


class MalformedInput(Exception):
    pass


class Mismatch(Exception):
    pass


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"{path} is not valid JSON: {exc}") from exc


def _int(v, what: str) -> int:
    if isinstance(v, bool):
        raise MalformedInput(f"{what} must be an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        try:
            return int(v.strip())
        except ValueError:
            pass
    raise MalformedInput(f"{what} must be an integer, got {v!r}")


def parse_list(doc) -> CharacterList:
    """Build a list from ``{"free_rank": n, "torsion": [...], "vectors": [[...], ...]}``."""
    if not isinstance(doc, dict) or "vectors" not in doc:
        raise MalformedInput('input must be an object with a "vectors" field')
    vectors = doc["vectors"]
    if not isinstance(vectors, list) or not all(isinstance(v, list) for v in vectors):
        raise MalformedInput('"vectors" must be a list of integer lists')
    torsion = doc.get("torsion", [])
    if not isinstance(torsion, list):
        raise MalformedInput('"torsion" must be a list of integers')
    torsion = [_int(q, "torsion factor") for q in torsion]
    vecs = [[_int(c, "coordinate") for c in v] for v in vectors]
    if "free_rank" in doc:
        n = _int(doc["free_rank"], "free_rank")
    elif torsion:
        raise MalformedInput('"free_rank" is required when "torsion" is given')
    else:
        n = len(vecs[0]) if vecs else 0
    try:
        return CharacterList.from_vectors(vecs, n, torsion)
    except (DimensionMismatchError, ValueError) as exc:
        raise MalformedInput(str(exc)) from exc


def _load_list(path: str) -> CharacterList:
    return parse_list(_read_json(path))


def _load_graph(path: str) -> LabeledGraph:
    doc = _read_json(path)
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise MalformedInput('graph input must be an object with "vertices" and "edges"')
    try:
        edges = doc.get("edges", [])
        edges = [tuple(_int(a, "edge entry") for a in e) for e in edges]
        return LabeledGraph(_int(doc["vertices"], "vertices"), tuple(edges))
    except (TypeError, ValueError) as exc:
        raise MalformedInput(str(exc)) from exc


def _m_polynomial(X: CharacterList, via: str):
    if via == "expansion":
        return m_tutte_expansion(X), None
    if via == "recursion":
        return m_tutte_recursive(X), None
    a, b = m_tutte_expansion(X), m_tutte_recursive(X)
    if a != b:
        raise Mismatch(f"expansion gives {a} but recursion gives {b}")
    return a, True


def _emit(args, text_lines: list[str], payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(text_lines))


def cmd_mtutte(args) -> None:
    X = _load_list(args.input)
    M, agree = _m_polynomial(X, args.via)
    payload = {"polynomial": str(M), "coefficients": M.to_json(), "via": args.via}
    if agree is not None:
        payload["agree"] = agree
    _emit(args, [str(M)], payload)


def cmd_tutte(args) -> None:
    X = _load_list(args.input)
    T = ordinary_tutte(X)
    payload = {"polynomial": str(T), "coefficients": T.to_json()}
    lines = [str(T)]
    if not X.has_free_zero():
        payload["nbc"] = nbc_count(X)
        payload["activities"] = [
            {"basis": list(r.basis), "internal": r.internal, "external": r.external} for r in activities(X)
        ]
        lines.append(f"nbc: {payload['nbc']}")
        if X.group.is_lattice():
            h = hyperplane_char_poly(X)
            payload.update(characteristic=str(h.characteristic), chambers=h.chambers, poincare=str(h.poincare))
            lines += [f"characteristic: {h.characteristic}", f"chambers: {h.chambers}", f"poincare: {h.poincare}"]
    _emit(args, lines, payload)


def cmd_zonotope(args) -> None:
    X = _load_list(args.input)
    S = stratification(X)
    if S.total_in_Z != m_tutte_expansion(X).evaluate(2, 1):
        raise Mismatch("lattice point count differs from M(2, 1)")
    payload = S.to_json()
    lines = [f"volume: {S.volume}", f"points: {S.total_in_Z}", f"strata: {list(S.counts)}"]
    if args.points:
        _, pts = lattice_points(X, return_points=True)
        strata = shifted_points(X)
        payload["points"] = [list(p) for p in pts]
        payload["shifted_points"] = [[list(p), k] for p, k in sorted(strata.items())]
        lines += ["lattice points:"] + [" ".join(map(str, p)) for p in pts]
    _emit(args, lines, payload)


def cmd_toric(args) -> None:
    X = _load_list(args.input)
    P = enumerate_layers(X)
    chi = characteristic_polynomial(P)
    poin = poincare_polynomial(X, verify=True)
    n = X.group.free_rank
    by_dim = [len(P.of_dim(k)) for k in range(n + 1)]
    payload = {
        "characteristic": str(chi),
        "poincare": str(poin),
        "euler_characteristic": euler_characteristic(X),
        "layers_by_dim": by_dim,
        "poset": P.to_json(),
    }
    lines = [
        f"characteristic: {chi}",
        f"poincare: {poin}",
        f"euler characteristic: {payload['euler_characteristic']}",
    ]
    if X.group.is_lattice():
        payload["compact_regions"] = compact_regions(X)
        lines.append(f"compact regions: {payload['compact_regions']}")
    lines.append(f"layers by dimension: {by_dim}")
    for i, L in enumerate(P.layers):
        base = "(" + ", ".join(str(c) for c in L.basepoint) + ")"
        comp = f" component {list(L.component)}" if L.component else ""
        lines.append(f"  dim {L.dim} at {base}{comp}  mu = {P.mobius[i]}  support {list(L.support)}")
    _emit(args, lines, payload)


def cmd_dm(args) -> None:
    X = _load_list(args.input)
    series = dm_hilbert_series(X)
    total, summands = dm_decomposition_check(X)
    payload = {
        "series": series.to_json(),
        "dimension": series.total(),
        "points": [
            {"basepoint": [str(c) for c in p.basepoint], "support": list(p.support), "series": s.to_json()}
            for p, s in summands
        ],
    }
    lines = [str(series), f"dimension: {series.total()}"]
    lines += [f"  point ({', '.join(str(c) for c in p.basepoint)}): {s}" for p, s in summands]
    _emit(args, lines, payload)


def cmd_graph(args) -> None:
    G = _load_graph(args.input)
    if args.via == "both":
        M = graph_m_tutte(G, "expansion")
        other = graph_m_tutte(G, "deletion_contraction")
        if M != other:
            raise Mismatch(f"expansion gives {M} but deletion-contraction gives {other}")
    else:
        M = graph_m_tutte(G, args.via)
    payload = {"polynomial": str(M), "coefficients": M.to_json(), "forests": forest_count(G)}
    lines = [str(M), f"forests: {payload['forests']}"]
    if G.is_connected():
        payload["spanning_trees"] = spanning_tree_count(G)
        lines.append(f"spanning trees: {payload['spanning_trees']}")
    _emit(args, lines, payload)


def cmd_roots(args) -> None:
    try:
        spec = root_system(args.type, args.rank)
    except ValueError as exc:
        raise MalformedInput(str(exc)) from exc
    X = spec.realization
    M = m_tutte_expansion(X)
    value = M.evaluate(1, 0)
    P = poincare_polynomial(X)
    payload = {
        "type": f"{spec.family}{spec.rank}",
        "vectors": [list(v) for v in X.free_vectors],
        "polynomial": str(M),
        "M(1,0)": value,
        "weyl_order": spec.weyl_order,
        "equal": value == spec.weyl_order,
        "characteristic": str(characteristic_polynomial(enumerate_layers(X))),
        "poincare": str(P),
    }
    lines = [
        f"{payload['type']}: {len(X)} positive roots",
        "vectors: " + " ".join("(" + ",".join(map(str, v)) + ")" for v in X.free_vectors),
        f"M: {M}",
        f"M(1,0) = {value}, |W| = {spec.weyl_order}, equal: {payload['equal']}",
        f"characteristic: {payload['characteristic']}",
        f"poincare: {P}",
    ]
    _emit(args, lines, payload)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arithtutte",
        description="Multiplicity Tutte polynomials and their invariants, computed exactly.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, input_=True):
        p = sub.add_parser(name, help=help_)
        if input_:
            p.add_argument("input", help='JSON file ("-" for stdin)')
        p.add_argument("--format", choices=["text", "json"], default="text")
        p.set_defaults(func=func)
        return p

    p = add("mtutte", cmd_mtutte, "multiplicity Tutte polynomial M_X")
    p.add_argument("--via", choices=["expansion", "recursion", "both"], default="expansion")
    add("tutte", cmd_tutte, "ordinary Tutte polynomial, activities and hyperplane invariants")
    p = add("zonotope", cmd_zonotope, "volume, lattice points and shifted strata of Z(X)")
    p.add_argument("--points", action="store_true", help="also list the lattice points")
    add("toric", cmd_toric, "layer poset, characteristic and Poincare polynomials")
    add("dm", cmd_dm, "Hilbert series of the Dahmen-Micchelli space")
    p = add("graph", cmd_graph, "multiplicity Tutte polynomial of a labeled graph")
    p.add_argument("--via", choices=["expansion", "deletion_contraction", "both"], default="expansion")
    p = add("roots", cmd_roots, "positive roots of a classical root system", input_=False)
    p.add_argument("--type", required=True, help="A, B, C or D")
    p.add_argument("--rank", required=True, type=int)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_MALFORMED
    try:
        args.func(args)
    except MalformedInput as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except Mismatch as exc:
        print(f"internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    return 0


if __name__ == "__main__":
    sys.exit(main())
