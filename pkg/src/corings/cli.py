"""Command-line interface.

Exit codes: 0 when every check passes, 1 when some verification fails, 2 on
input errors.  Stdout carries the report; stderr carries diagnostics.

A structure reference is a path to a JSON document, optionally followed by
``#NAME`` to pick one structure, or the name of a built-in example (with or
without a leading directory such as ``examples/`` or ``pairings/``).
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .algebra import RightModule, verify_algebra
from .catalog import EXAMPLES, emit_example, example_names
from .comodule import (MeasuringPairing, alpha_check, bicommutant_check, chi_rational_check, finite_subcomodule,
                       coproper_check, hom_equality_check, rat, rat_laws, rationality_profile,
                       verify_comodule)
from .corpus import random_instance
from .coring import ACoring, coring_from_coalgebra, dual_ring, verify_coring
from .document import DocBuilder, StructureDocument, load
from .entwine import (adjunction_check, beta_density, coring_from_entwining, dk_rat_equality,
                      dk_to_entwining, alt_dk_to_entwining, entwined_round_trip, koppinen_ring,
                      phi_isomorphism, regular_entwined_module, smash_pairing, smash_ring)
from .errors import AmbiguousCoaction, AxiomViolation, CoringsError, VerificationFailed
from .fpmod import Submodule
from .report import Report
from .topology import (closure, double_orthogonal, double_orthogonal_law, galois_connection_law,
                       is_dense, orthogonal_of_subset, tensor_pairing, topology_coincidence)

SCHEMA = "corings-report/1"


class InputError(Exception):
    """Bad command-line input (exit code 2)."""


# ---------------------------------------------------------------------------
# references


def resolve(ref: str, verify: bool = True) -> tuple[StructureDocument, Optional[str]]:
    path, _, sname = ref.partition("#")
    p = Path(path)
    for cand in (p, p.with_name(p.name + ".json")):
        if cand.is_file():
            return load(cand, verify), sname or None
    name = p.name
    if name.endswith(".json"):
        name = name[:-5]
    if name in EXAMPLES:
        return emit_example(name, verify), sname or None
    raise InputError(f"{ref}: no such file or built-in example (try `examples list`)")


def _pick(ref: str, verify: bool, *kinds: str):
    doc, sname = resolve(ref, verify)
    name, obj = doc.pick(*kinds, name=sname)
    return doc, name, doc.kinds[name], obj


def _entwining(obj, kind: str, check: bool):
    if kind == "dk":
        return dk_to_entwining(obj, check)
    if kind == "alt_dk":
        return alt_dk_to_entwining(obj, check)
    return obj


def _vectors(text: Optional[str], length: int) -> list[list[int]]:
    """``"1,0;0,1"`` -> [[1, 0], [0, 1]]."""
    if not text:
        return []
    out = []
    for part in text.split(";"):
        try:
            v = [int(x) for x in part.split(",")]
        except ValueError:
            raise InputError(f"bad vector {part!r}; use comma-separated integers") from None
        if len(v) != length:
            raise InputError(f"vector {part!r} has {len(v)} entries, expected {length}")
        out.append(v)
    return out


# ---------------------------------------------------------------------------
# commands; each returns (report, extra envelope fields)


def cmd_verify(a):
    doc, _ = resolve(a.ref, verify=False)
    rep = Report(f"verify {doc.name or a.ref}")
    if a.no_verify:
        for name in sorted(doc.structures):
            rep.vacuous(f"{name}: {doc.kinds[name]}", "verification skipped")
    else:
        rep.extend(doc.verification())
    rep.data["structures"] = {k: doc.kinds[k] for k in sorted(doc.kinds)}
    return rep, {}


def _built(rep: Report, builder: DocBuilder, a) -> tuple[Report, dict]:
    out = builder.document(verify=False)
    if a.output:
        Path(a.output).write_text(out.to_json())
        print(f"wrote {a.output}", file=sys.stderr)
    return rep, {"document": out.data}


def cmd_build_coring(a):
    doc, name, kind, obj = _pick(a.ref, not a.no_verify, "entwining", "dk", "alt_dk", "coalgebra")
    rep = Report(f"build coring from {name}")
    if kind == "coalgebra":
        C = coring_from_coalgebra(obj)
    else:
        E = _entwining(obj, kind, not a.no_verify)
        rep.extend(E.verification, "entwining: ")
        C = coring_from_entwining(E, check=not a.no_verify)
    rep.extend(verify_coring(C), "coring: ")
    B = DocBuilder(doc.ring, f"{name}-coring", f"coring built from {name}")
    B.coring(C, B.name)
    return _built(rep, B, a)


def cmd_build_koppinen(a):
    doc, name, kind, obj = _pick(a.ref, not a.no_verify, "entwining", "dk", "alt_dk")
    E = _entwining(obj, kind, not a.no_verify)
    K = koppinen_ring(E, check=not a.no_verify)
    rep = Report(f"build Koppinen ring from {name}")
    rep.extend(verify_algebra(K), "algebra: ")
    rep.extend(phi_isomorphism(E, K).report, "phi: ")
    B = DocBuilder(doc.ring, f"{name}-koppinen", f"Koppinen ring of {name}")
    B.algebra(K, B.name)
    return _built(rep, B, a)


def cmd_build_smash(a):
    doc, name, kind, D = _pick(a.ref, not a.no_verify, "dk")
    from .algebra import dual_algebra
    T = None
    if a.subring:
        Cs = dual_algebra(D.C.coalgebra)
        T = Submodule(Cs.carrier, _vectors(a.subring, Cs.rank))
    S = smash_ring(D, T)
    rep = Report(f"build smash ring from {name}")
    rep.extend(S.verification)
    rep.data["rank"] = S.rank
    B = DocBuilder(doc.ring, f"{name}-smash", f"smash ring of {name}")
    B.algebra(S, B.name)
    return _built(rep, B, a)


def cmd_build_dual(a):
    doc, name, kind, obj = _pick(a.ref, not a.no_verify, "coring", "coalgebra")
    C = obj if isinstance(obj, ACoring) else coring_from_coalgebra(obj)
    D = dual_ring(C, a.side, check=not a.no_verify)
    rep = Report(f"build {a.side} dual ring of {name}")
    rep.extend(verify_algebra(D))
    rep.data["rank"] = D.rank
    B = DocBuilder(doc.ring, f"{name}-dual-{a.side}", f"{a.side} dual ring of {name}")
    B.algebra(D, B.name)
    return _built(rep, B, a)


def cmd_build_tensor_pairing(a):
    _, n1, _, P = _pick(a.ref, not a.no_verify, "pairing")
    _, n2, _, Q = _pick(a.other, not a.no_verify, "pairing")
    T = tensor_pairing(P.pairing, Q.pairing)
    rep = Report(f"tensor pairing {n1} (x) {n2}")
    # <v' (x) v, w (x) w'> = <v, w><v', w'>
    V, W, Vp, Wp = P.pairing.V, P.pairing.W, Q.pairing.V, Q.pairing.W
    bad = None
    for i, j, k, l in np.ndindex(Vp.rank, V.rank, W.rank, Wp.rank):
        ev = [int(x == i * V.rank + j) for x in range(Vp.rank * V.rank)]
        ew = [int(x == k * Wp.rank + l) for x in range(W.rank * Wp.rank)]
        want = P.pairing.evaluate(np.eye(V.rank, dtype=int)[j], np.eye(W.rank, dtype=int)[k]).vector[0] * \
            Q.pairing.evaluate(np.eye(Vp.rank, dtype=int)[i], np.eye(Wp.rank, dtype=int)[l]).vector[0]
        if T.evaluate(ev, ew).vector[0] != want % T.ring.modulus:
            bad = {"v'": i, "v": j, "w": k, "w'": l}
            break
    rep.add("form is the product of the factor forms", bad is None, bad)
    rep.data["form"] = [int(x) for x in T.form.matrix.array.ravel()]
    return rep, {}


def _module(ref: Optional[str], P: MeasuringPairing, verify: bool) -> RightModule:
    if ref in (None, "regular"):
        return RightModule.regular(P.acting)
    if ref == "coring":
        return P.coring_module
    _, _, _, M = _pick(ref, verify, "module")
    return M


def cmd_rat(a):
    _, pname, _, P = _pick(a.pairing, not a.no_verify, "pairing")
    M = _module(a.module, P, not a.no_verify)
    rep = Report(f"rational part over {pname}")
    try:
        rp = rat(M, P)
    except AmbiguousCoaction as e:
        rep.add("pairing is an alpha-pairing", False, {"diagnosis": str(e)})
        return rep, {}
    rep.add("pairing is an alpha-pairing", True)
    rep.extend(rp.report)
    gens = [list(g) for g in rp.submodule.generators if not M.carrier.is_zero_vector(g)]
    rep.data["generators"] = gens
    rep.data["cardinality"] = rp.submodule.cardinality()
    rep.data["whole"] = rp.is_whole
    if rp.submodule.is_zero():
        rep.vacuous("coaction is a comodule structure", "Rat(M) = 0")
    else:
        co, _ = rp.as_comodule()
        rep.extend(verify_comodule(co), "coaction: ")
    return rep, {}


def cmd_alpha(a):
    _, name, _, P = _pick(a.ref, not a.no_verify, "pairing")
    rep = alpha_check(P)
    rep.title = f"alpha condition for {name}"
    return rep, {}


def cmd_topology(a):
    _, name, _, P = _pick(a.ref, not a.no_verify, "pairing")
    Pm = P.pairing
    if a.what == "coincide":
        rep = topology_coincidence(P)
        rep.title = f"finite and C-adic topologies on {name}"
        return rep, {}
    X = Submodule(Pm.V, _vectors(a.subset, Pm.V.rank))
    if a.what == "closure":
        cl = closure(Pm, X)
        rep = Report(f"closure in {name}")
        rep.add("X is inside its closure", X <= cl)
        rep.add("closure equals the double orthogonal", cl == double_orthogonal(Pm, X))
        rep.data["closure"] = [list(g) for g in cl.generators]
        rep.data["cardinality"] = cl.cardinality()
        return rep, {}
    rep = Report(f"density in {name}")
    perp = orthogonal_of_subset(Pm, X)
    rep.add("X is dense", is_dense(Pm, X), {"orthogonal": [list(g) for g in perp.generators]})
    return rep, {}


def cmd_dk(a):
    doc, name, kind, obj = _pick(a.ref, not a.no_verify, "dk", "alt_dk")
    rep = Report(f"entwining from {name}")
    rep.extend(obj.verification, "structure: ")
    E = _entwining(obj, kind, check=False)
    rep.extend(E.verification, "entwining: ")
    B = DocBuilder(doc.ring, f"{name}-entwining", f"entwining of {name}")
    B.entwining(E, B.name)
    return _built(rep, B, a)


def cmd_examples(a):
    if a.what == "list":
        rep = Report("examples")
        rep.data["examples"] = [{"name": n, "type": EXAMPLES[n].kind,
                                 "description": EXAMPLES[n].description} for n in example_names()]
        return rep, {"listing": True}
    if not a.name:
        raise InputError("examples emit needs a name")
    doc = emit_example(a.name, verify=not a.no_verify)
    if a.output:
        Path(a.output).write_text(doc.to_json())
        print(f"wrote {a.output}", file=sys.stderr)
    return None, {"document_text": doc.to_json()}


def cmd_report(a):
    try:
        d = json.loads(Path(a.file).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"{a.file}: {e}") from None
    body = d.get("report", d) if isinstance(d, dict) else None
    try:
        rep = Report.from_dict(body)
    except (KeyError, TypeError, ValueError):
        raise InputError(f"{a.file}: not a report") from None
    return rep, {}


# --- law suites -------------------------------------------------------------------

LAWS = {
    "double-orthogonal": "closure = double orthogonal over all submodules (pairing)",
    "galois-connection": "orthogonals form a Galois connection (pairing)",
    "rat-laws": "Rat laws on seeded random module instances (pairing, --seed, --count)",
    "finiteness": "every rational element lies in a finite subcomodule (pairing)",
    "rationality-profile": "the six rationality characterizations agree elementwise (pairing)",
    "hom-equality": "comodule maps = module maps on corpus pairs (pairing)",
    "coproper": "coproper pairing check (pairing)",
    "bicommutant": "bicommutant of the coring module (pairing)",
    "chi-rational": "chi isomorphism for rational modules (pairing)",
    "beta-density": "beta(A # C*) dense in the Koppinen ring (dk)",
    "rat-equality": "Rat over the smash ring equals Rat over C* (dk)",
    "adjunction": "N (x) A is left adjoint to the forgetful functor (dk or entwining)",
    "entwined-round-trip": "entwined module -> Koppinen module -> comodule (dk or entwining)",
}


def _elementwise(law: str, P: MeasuringPairing, limit: int) -> Report:
    rep = Report(f"{law} over the acting and coring modules")
    for label, M in (("A_A", RightModule.regular(P.acting)), ("C_A", P.coring_module)):
        if M.carrier.cardinality() > limit:
            rep.vacuous(label, f"more than {limit} elements")
            continue
        rp = rat(M, P)
        bad = None
        for m in M.carrier.elements():
            if law == "finiteness":
                if rp.contains(m.vector) and not finite_subcomodule([m.vector], rp).report.passed:
                    bad = m.vector
            elif not rationality_profile(m.vector, M, P, rp).data["agree"]:
                bad = m.vector
            if bad is not None:
                break
        rep.add(f"{label}: every element", bad is None, bad)
    return rep


def cmd_law(a):
    if a.name not in LAWS:
        raise InputError(f"unknown law {a.name!r}; available: {', '.join(sorted(LAWS))}")
    verify = not a.no_verify
    limit = a.max_card
    if a.name in ("double-orthogonal", "galois-connection", "rat-laws", "hom-equality",
                  "coproper", "bicommutant", "chi-rational", "finiteness",
                  "rationality-profile"):
        _, name, _, P = _pick(a.ref, verify, "pairing")
        if a.name == "double-orthogonal":
            rep = double_orthogonal_law(P, limit=limit, seed=a.seed)
        elif a.name == "galois-connection":
            rep = galois_connection_law(P, limit=min(limit, 1024))
        elif a.name == "rat-laws":
            rng = random.Random(a.seed)
            rep = Report(f"Rat laws on {a.count} instances")
            fails = 0
            for k in range(a.count):
                M, subs, maps = random_instance(P, rng, max_card=limit)
                r = rat_laws(M, P, subs, maps)
                if not r.passed:
                    fails += 1
                    rep.add(f"instance {k}", False, [c.name for c in r.failures()])
            rep.add("all instances pass", fails == 0, {"failures": fails})
        elif a.name == "hom-equality":
            from .comodule import Comodule
            M = Comodule.regular(P.coring)
            rep = hom_equality_check(M, M, P, limit=limit)
        elif a.name in ("finiteness", "rationality-profile"):
            rep = _elementwise(a.name, P, limit)
        elif a.name == "coproper":
            rep = coproper_check(P)
        elif a.name == "bicommutant":
            rep = bicommutant_check(P)
        else:
            rep = chi_rational_check(P)
        return rep, {}
    if a.name in ("beta-density", "rat-equality"):
        _, name, _, D = _pick(a.ref, verify, "dk")
        if a.name == "beta-density":
            return beta_density(D), {}
        S = smash_ring(D)
        return dk_rat_equality(smash_pairing(S).coring_module, S), {}
    _, name, kind, obj = _pick(a.ref, verify, "dk", "alt_dk", "entwining")
    E = _entwining(obj, kind, verify)
    if E.handed != "right-right":
        from .entwine import left_right_transform
        E = left_right_transform(E)
    M = regular_entwined_module(E)
    if a.name == "adjunction":
        from .comodule import Comodule
        N = Comodule.regular(coring_from_coalgebra(E.C))
        return adjunction_check(N, M, limit=limit), {}
    return entwined_round_trip(M), {}


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    def options(suppress: bool) -> argparse.ArgumentParser:
        # subcommands accept the same flags; their defaults must not mask the global ones
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        o = argparse.ArgumentParser(add_help=False)
        o.add_argument("--format", choices=("text", "json"), default=d("text"))
        o.add_argument("--no-verify", action="store_true", default=d(False), help="skip verification on load")
        o.add_argument("--seed", type=int, default=d(0), help="seed for sampled suites")
        o.add_argument("--max-card", type=int, default=d(4096), help="enumeration budget")
        o.add_argument("--timing", action="store_true", default=d(False),
                       help="include wall time in json reports")
        return o

    common = options(True)
    p = argparse.ArgumentParser(prog="corings", parents=[options(False)],
                                description="Finite-scale corings, comodules and entwinings over Z/n.")
    p.add_argument("--version", action="version", version=f"corings {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="load a document and verify every structure")
    s.add_argument("ref")
    s.set_defaults(fn=cmd_verify)

    b = sub.add_parser("build", parents=[common], help="construct a derived structure")
    bs = b.add_subparsers(dest="what", required=True)
    for what, fn, help_ in (("coring", cmd_build_coring, "A (x) C from an entwining, or C over R"),
                            ("koppinen", cmd_build_koppinen, "Koppinen ring with the phi isomorphism"),
                            ("smash", cmd_build_smash, "smash ring A # T for a Doi-Koppinen structure"),
                            ("dual", cmd_build_dual, "dual ring of a coring")):
        x = bs.add_parser(what, parents=[common], help=help_)
        x.add_argument("ref")
        x.add_argument("--output", "-o", help="write the built document here")
        if what == "smash":
            x.add_argument("--subring", help="generators of T in C*, e.g. '1,1' or '1,0;0,1'")
        if what == "dual":
            x.add_argument("--side", choices=("left", "right"), default="left")
        x.set_defaults(fn=fn)
    x = bs.add_parser("tensor-pairing", parents=[common], help="tensor product of two pairings")
    x.add_argument("ref")
    x.add_argument("other")
    x.set_defaults(fn=cmd_build_tensor_pairing)

    r = sub.add_parser("rat", parents=[common], help="rational part of a module")
    r.add_argument("--pairing", required=True)
    r.add_argument("--module", help="module reference, or 'regular' (default) or 'coring'")
    r.set_defaults(fn=cmd_rat)

    al = sub.add_parser("alpha", parents=[common], help="alpha condition for a pairing")
    al.add_argument("ref")
    al.set_defaults(fn=cmd_alpha)

    t = sub.add_parser("topology", parents=[common], help="closure, density, topology coincidence")
    t.add_argument("what", choices=("closure", "density", "coincide"))
    t.add_argument("ref")
    t.add_argument("--subset", help="generators of X in the acting algebra, e.g. '1,0,0;0,1,0'")
    t.set_defaults(fn=cmd_topology)

    d = sub.add_parser("dk", parents=[common], help="Doi-Koppinen structures")
    d.add_argument("what", choices=("to-entwining",))
    d.add_argument("ref")
    d.add_argument("--output", "-o")
    d.set_defaults(fn=cmd_dk)

    e = sub.add_parser("examples", parents=[common], help="built-in example documents")
    e.add_argument("what", choices=("list", "emit"))
    e.add_argument("name", nargs="?")
    e.add_argument("--output", "-o")
    e.set_defaults(fn=cmd_examples)

    rp = sub.add_parser("report", parents=[common], help="re-render a saved json report")
    rp.add_argument("file")
    rp.set_defaults(fn=cmd_report)

    lw = sub.add_parser("law", parents=[common], help="run a law suite: " + ", ".join(sorted(LAWS)),
                        formatter_class=argparse.RawDescriptionHelpFormatter,
                        description="law suites:\n" + "\n".join(f"  {k:22s} {v}" for k, v in sorted(LAWS.items())))
    lw.add_argument("name")
    lw.add_argument("ref")
    lw.add_argument("--count", type=int, default=25, help="random instances for rat-laws")
    lw.set_defaults(fn=cmd_law)
    return p


def _render(rep: Report, extra: dict, a, elapsed: float) -> str:
    if a.format == "text":
        if extra.get("listing"):
            return "\n".join(f"{x['name']:32s} {x['type']:10s} {x['description']}"
                             for x in rep.data["examples"])
        return rep.to_text()
    rep.timing = elapsed
    env = {"schema": SCHEMA, "tool": {"name": "corings", "version": __version__},
           "command": a.command, "passed": rep.passed, "report": rep.to_dict(a.timing)}
    if "document" in extra:
        env["document"] = extra["document"]
    return json.dumps(env, indent=2, sort_keys=False)


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    t0 = time.perf_counter()
    try:
        rep, extra = a.fn(a)
    except VerificationFailed as e:
        rep = e.report or Report("verification")
        rep.title = f"{a.command}: {e}"
        print(f"error: {e}", file=sys.stderr)
        print(_render(rep, {}, a, time.perf_counter() - t0))
        return 1
    except AxiomViolation as e:
        print(f"error: {e}", file=sys.stderr)
        rep = e.report or Report(str(e))
        if e.report is None:
            rep.add(str(e), False)
        print(_render(rep, {}, a, time.perf_counter() - t0))
        return 1
    except (InputError, CoringsError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    if rep is None:
        sys.stdout.write(extra["document_text"])
        return 0
    print(_render(rep, extra, a, time.perf_counter() - t0))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
