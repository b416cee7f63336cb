"""Command-line driver: constructions, nerves, homology and verification suites.

Verification commands print one JSON record per check (``--json``) or a
short table, and exit with 0 when every check passes, 1 when a check fails,
2 on invalid input and 3 when a search budget is exhausted.
"""

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations

from . import adc, cat2, nerve, theta
from .homology import ChainComplexZ, betti

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

EXAMPLES = {
    "point": cat2.point_2cat,
    "oriental2": cat2.oriental2,
    "hollow-triangle": cat2.hollow_triangle,
    "parallel-fillers": cat2.parallel_fillers,
    "suspended-parallel-pair": cat2.suspended_parallel_pair,
}


class InputError(ValueError):
    pass


# reports -------------------------------------------------------------------

@dataclass
class CheckRecord:
    suite: str
    check: str
    status: str                      # "pass" or "fail"
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    elapsed: float = 0.0


@dataclass
class VerificationReport:
    suite: str
    records: list = field(default_factory=list)

    def add(self, check, ok, inputs=None, outputs=None, elapsed=0.0):
        self.records.append(CheckRecord(self.suite, check, "pass" if ok else "fail",
                                        inputs or {}, outputs or {}, round(elapsed, 6)))

    @property
    def ok(self):
        return all(r.status == "pass" for r in self.records)

    def canonical(self):
        return VerificationReport(self.suite, sorted(self.records, key=lambda r: r.check))

    def to_jsonl(self):
        return "".join(json.dumps(asdict(r), sort_keys=True) + "\n" for r in self.records)

    @classmethod
    def from_jsonl(cls, text):
        records = [CheckRecord(**json.loads(line)) for line in text.splitlines() if line.strip()]
        return cls(records[0].suite if records else "", records)

    def summary(self):
        lines = [f"suite {self.suite}"]
        for r in self.records:
            out = ", ".join(f"{k}={v}" for k, v in r.outputs.items())
            lines.append(f"  [{r.status.upper()}] {r.check}" + (f"  {out}" if out else ""))
        passed = sum(r.status == "pass" for r in self.records)
        lines.append(f"{passed}/{len(self.records)} checks passed")
        return "\n".join(lines) + "\n"


def _emit(report, args):
    report = report.canonical()
    sys.stdout.write(report.to_jsonl() if args.json else report.summary())
    return EXIT_OK if report.ok else EXIT_FAIL


# input helpers -------------------------------------------------------------

def _load_2cat(args, attr="input"):
    path = getattr(args, attr, None)
    example = getattr(args, "example", None)
    notation = getattr(args, "theta", None)
    if path:
        try:
            C = cat2.load(path)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
    elif example:
        if example not in EXAMPLES:
            raise InputError(f"unknown example {example!r}; choose from {', '.join(EXAMPLES)}")
        C = EXAMPLES[example]()
    elif notation:
        C = cat2.realize2(theta.parse_theta(notation))
    else:
        raise InputError("give --input, --example or --theta")
    if not isinstance(C, cat2.Fin2Cat):
        raise InputError("input is not a 2-category document")
    problems = cat2.validate_fin2cat(C)
    if problems:
        raise InputError("invalid 2-category: " + "; ".join(problems[:5]))
    return C


def _budget(args):
    if getattr(args, "budget", None) is not None:
        return cat2.Budget(args.budget)
    return cat2.Budget()


def _parse_J(text):
    if text in (None, "", "none"):
        return frozenset()
    J = frozenset(int(t) for t in text.split(","))
    if not J <= {1, 2}:
        raise InputError("J must be a subset of {1,2}")
    return J


# nerve pipelines -----------------------------------------------------------

def street_chains(C, dmax):
    return nerve.normalized_chains(nerve.street_nerve2(C, dmax))


def diagonal_chains(C, dmax):
    return nerve.normalized_chains(nerve.diagonal(nerve.multinerve2(C, dmax, dmax)))


def total_chains(C, dmax):
    return nerve.total_complex(nerve.multinerve2(C, dmax, dmax), dmax)


def _betti(cx, dmax):
    """Betti numbers and torsion in the degrees below the truncation."""
    r = betti(cx, maxdim=dmax - 1)
    return r.betti[:dmax], r.torsion[:dmax]


# commands --------------------------------------------------------------------

def cmd_oriental(args):
    K = adc.oriental_complex(args.n)
    if args.json:
        print(K.chain_complex().dumps())
    else:
        sys.stdout.write(adc.dump(K))
    return EXIT_OK


def cmd_theta(args):
    if args.theta_cmd == "counts":
        S = theta.parse_theta(args.object)
        print(json.dumps(theta.generator_counts(S)) if args.json else " ".join(map(str, theta.generator_counts(S))))
    elif args.theta_cmd == "dual":
        print(theta.format_theta(theta.theta_dual(theta.parse_theta(args.object), _parse_J(args.J))))
    elif args.theta_cmd == "compose":
        with open(args.g, encoding="utf-8") as fh:
            g = theta.morphism_from_json(json.load(fh))
        with open(args.f, encoding="utf-8") as fh:
            f = theta.morphism_from_json(json.load(fh))
        print(json.dumps(theta.morphism_to_json(theta.compose(g, f))))
    return EXIT_OK


def cmd_cat2(args):
    if args.cat2_cmd == "validate":
        C = _load_2cat(args)
        print(json.dumps({"valid": True, "cells": list(C.cell_counts()),
                          "loop_free": C.is_loop_free()}))
        return EXIT_OK
    if args.cat2_cmd == "realize":
        C = cat2.realize2(theta.parse_theta(args.object))
    else:
        C = _load_2cat(args)
    if getattr(args, "J", None):
        C = cat2.dualize(C, _parse_J(args.J))
    text = cat2.dumps(C)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def cmd_nerve(args):
    C = _load_2cat(args)
    build = {"street": street_chains, "multi": total_chains, "diag": diagonal_chains}[args.kind]
    cx = build(C, args.dmax)
    text = cx.dumps()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
        print(json.dumps({"ranks": cx.ranks, "valid_range": args.dmax - 1}))
    else:
        print(text)
    return EXIT_OK


def cmd_homology(args):
    path = args.input
    try:
        with open(path, encoding="utf-8") as fh:
            cx = ChainComplexZ.loads(fh.read())
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    r = betti(cx)
    if args.json:
        print(json.dumps(r.to_json()))
    else:
        print("degree  betti  torsion")
        for p, (b, t) in enumerate(zip(r.betti, r.torsion)):
            print(f"{p:>6}  {b:>5}  {' '.join(map(str, t)) or '-'}")
        print(f"valid through degree {r.valid_range}")
    return EXIT_OK


def verify_homotopy(n_max, perturb=False, complex_text=None, seed=0):
    """Check the homotopy identity for every ``n <= n_max``. With ``perturb``
    one entry of ``h`` (picked by ``seed``) is shifted as a negative control."""
    rng = theta.default_rng(seed)
    report = VerificationReport("homotopy")
    ns = range(n_max + 1)
    given = None
    if complex_text is not None:
        given = adc.parse_dump(complex_text)
        ns = [given.top_degree]
    for n in ns:
        t = time.perf_counter()
        hom = adc.homotopy_h(n)
        if given is not None:
            if tuple(map(tuple, given.basis)) != tuple(map(tuple, hom.source_map.source.basis)):
                raise InputError("the dumped complex does not have the oriental basis")
            hom = adc.ChainHomotopy(
                adc.ChainMap(given, given, hom.source_map.maps),
                adc.ChainMap(given, given, hom.target_map.maps), hom.h)
        if perturb and n >= 1:
            p = rng.randrange(n)
            m = hom.h[p]
            hom = adc.perturb_homotopy(hom, p, rng.randrange(m.nrows), rng.randrange(m.ncols))
        res = adc.verify_homotopy(hom)
        out = {} if res.ok else {"degree": res.degree, "witness": list(res.element), "detail": res.detail}
        report.add(f"n={n}", res.ok, {"n": n, "perturbed": bool(perturb and n >= 1)}, out,
                   time.perf_counter() - t)
    return report


def compare_nerves(C, dmax, name="input"):
    report = VerificationReport("compare-nerves")
    t = time.perf_counter()
    bs, ts = _betti(street_chains(C, dmax), dmax)
    bd, td = _betti(diagonal_chains(C, dmax), dmax)
    bt, tt = _betti(total_chains(C, dmax), dmax)
    elapsed = time.perf_counter() - t
    inputs = {"input": name, "cells": list(C.cell_counts()), "dmax": dmax,
              "loop_free": C.is_loop_free()}
    report.add("street=diagonal", (bs, ts) == (bd, td), inputs,
               {"street": bs, "diagonal": bd, "valid_range": dmax - 1}, elapsed)
    report.add("diagonal=total", (bd, td) == (bt, tt), inputs,
               {"diagonal": bd, "total": bt, "valid_range": dmax - 1}, elapsed)
    return report


def verify_duality(C, Js, dmax, name="input"):
    report = VerificationReport("duality")
    base = _betti(street_chains(C, dmax), dmax)
    for J in Js:
        t = time.perf_counter()
        D = cat2.dualize(C, J)
        valid = not cat2.validate_fin2cat(D)
        dual = _betti(street_chains(D, dmax), dmax)
        report.add(f"J={sorted(J)}", valid and dual == base,
                   {"input": name, "J": sorted(J), "dmax": dmax},
                   {"betti": base[0], "betti_dual": dual[0], "valid_range": dmax - 1},
                   time.perf_counter() - t)
    return report


def verify_pu_sc(T, C, p_max, budget=None):
    """Compare ``|Hom(T, S_p C)|`` with ``|Hom(Δp ≀ T, C)|``.

    ``S_p C`` is a 1-category, so 2-functors out of ``T`` into it factor
    through the truncation of ``T``; likewise every hom of ``Δp ≀ T`` only
    matters through its truncation when mapping into a 2-category. The right
    side is therefore counted on ``Δp ≀ τ1(T)``.
    """
    if not cat2.is_connected(T):
        raise InputError("T must be connected")
    report = VerificationReport("pu-sc")
    T1 = cat2.tau1(T)
    for p in range(p_max + 1):
        t = time.perf_counter()
        left = cat2.count_2functors(T, cat2.discrete_2cat(cat2.S_p(C, p)), budget=budget)
        right = cat2.count_2functors(cat2.wreath_glue(p, [T1] * p), C, budget=budget)
        report.add(f"p={p}", left == right, {"p": p, "T_cells": list(T.cell_counts()),
                                             "C_cells": list(C.cell_counts())},
                   {"hom_T_SpC": left, "hom_wreath_C": right}, time.perf_counter() - t)
    return report


def dwyer_kan(u, dmax=4):
    """Hypotheses: bijective on objects and homology-equivalent on every hom.
    Conclusion proxy: equal Betti numbers of the Street nerves."""
    report = VerificationReport("dwyer-kan")
    problems = cat2.validate_2functor(u)
    if problems:
        raise InputError("invalid 2-functor: " + "; ".join(problems[:5]))
    C, D = u.source, u.target
    t = time.perf_counter()
    bij = len(set(u.obj_map.values())) == len(C.objects) == len(D.objects)
    report.add("objects bijective", bij, {}, {"source_objects": len(C.objects),
                                               "target_objects": len(D.objects)})
    homs_ok = bij
    if bij:
        for a in C.objects:
            for b in C.objects:
                HC, HD = C.hom(a, b), D.hom(u.obj_map[a], u.obj_map[b])
                if (HC is None) != (HD is None):
                    homs_ok = False
                    continue
                if HC is None:
                    continue
                k = max(len(HC.objects), len(HD.objects)) + 1
                bc = betti(nerve.normalized_chains(nerve.nerve1(HC, k)), maxdim=k - 1).betti
                bd = betti(nerve.normalized_chains(nerve.nerve1(HD, k)), maxdim=k - 1).betti
                homs_ok &= bc == bd
    report.add("hom nerves homology-equivalent", homs_ok, {}, {})
    if bij and homs_ok:
        bc = _betti(street_chains(C, dmax), dmax)
        bd = _betti(street_chains(D, dmax), dmax)
        report.add("street nerves agree", bc == bd, {"dmax": dmax},
                   {"source": bc[0], "target": bd[0], "valid_range": dmax - 1},
                   time.perf_counter() - t)
    return report


def cmd_verify(args):
    if args.verify_cmd == "homotopy":
        text = None
        if args.input:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        return _emit(verify_homotopy(args.nmax, args.perturb, text, args.seed), args)
    if args.verify_cmd == "compare-nerves":
        C = _load_2cat(args)
        return _emit(compare_nerves(C, args.dmax, args.input or args.example or args.theta), args)
    if args.verify_cmd == "duality":
        C = _load_2cat(args)
        Js = [_parse_J(args.J)] if args.J is not None else \
            [frozenset(s) for k in range(3) for s in combinations((1, 2), k)]
        return _emit(verify_duality(C, Js, args.dmax, args.input or args.example or args.theta), args)
    if args.verify_cmd == "pu-sc":
        T = _load_2cat(args, "T")
        C = _load_2cat(args)
        return _emit(verify_pu_sc(T, C, args.pmax, _budget(args)), args)
    if args.verify_cmd == "dwyer-kan":
        try:
            u = cat2.load(args.input)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read {args.input}: {exc}") from exc
        if not isinstance(u, cat2.TwoFunctor):
            raise InputError("input is not a 2-functor document")
        return _emit(dwyer_kan(u, args.dmax), args)
    raise InputError(f"unknown verify command {args.verify_cmd}")


# parser ----------------------------------------------------------------------

def _input_flags(p):
    p.add_argument("--input", help="2-category JSON file")
    p.add_argument("--example", help="built-in example: " + ", ".join(EXAMPLES))
    p.add_argument("--theta", help="realize a Theta_2 object, e.g. '(Δ2; Δ1, Δ0)'")


def build_parser():
    ap = argparse.ArgumentParser(prog="nervelab", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    ap.add_argument("--budget", type=int, default=None,
                    help="search node budget (default: $NERVELAB_BUDGET or 2000000)")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("oriental", help="dump the linearized oriental")
    p.add_argument("n", type=int)

    p = sub.add_parser("theta", help="Theta combinatorics")
    ts = p.add_subparsers(dest="theta_cmd", required=True)
    q = ts.add_parser("counts")
    q.add_argument("object")
    q = ts.add_parser("dual")
    q.add_argument("object")
    q.add_argument("--J", default="1")
    q = ts.add_parser("compose", help="compose two morphism JSON files (g after f)")
    q.add_argument("g")
    q.add_argument("f")

    p = sub.add_parser("cat2", help="finite 2-categories")
    cs = p.add_subparsers(dest="cat2_cmd", required=True)
    q = cs.add_parser("validate")
    _input_flags(q)
    q = cs.add_parser("export")
    _input_flags(q)
    q.add_argument("--J", default=None, help="dualize before export")
    q.add_argument("--out")
    q = cs.add_parser("realize")
    q.add_argument("object")
    q.add_argument("--J", default=None)
    q.add_argument("--out")

    p = sub.add_parser("nerve", help="normalized chains of a nerve")
    p.add_argument("kind", choices=["street", "multi", "diag"])
    _input_flags(p)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--out")

    p = sub.add_parser("homology", help="Betti numbers of a chains.json file")
    p.add_argument("--in", "--input", dest="input", required=True)

    p = sub.add_parser("verify", help="verification suites")
    vs = p.add_subparsers(dest="verify_cmd", required=True)
    q = vs.add_parser("homotopy")
    q.add_argument("--nmax", type=int, default=6)
    q.add_argument("--perturb", action="store_true", help="negative control: corrupt h")
    q.add_argument("--input", help="oriental complex in dump format")
    q = vs.add_parser("compare-nerves")
    _input_flags(q)
    q.add_argument("--dmax", type=int, default=4)
    q = vs.add_parser("duality")
    _input_flags(q)
    q.add_argument("--J", default=None, help="comma list; default: all subsets of {1,2}")
    q.add_argument("--dmax", type=int, default=4)
    q = vs.add_parser("pu-sc")
    _input_flags(q)
    q.add_argument("--T", required=True, help="2-category JSON for T")
    q.add_argument("--pmax", type=int, default=2)
    q = vs.add_parser("dwyer-kan")
    q.add_argument("--input", required=True, help="2-functor JSON")
    q.add_argument("--dmax", type=int, default=4)
    return ap


def _hoist_globals(argv):
    """Allow ``--json``/``--seed``/``--budget`` anywhere on the command line."""
    front, rest = [], []
    it = iter(argv)
    for a in it:
        if a == "--json":
            front.append(a)
        elif a in ("--seed", "--budget"):
            front += [a, next(it, "")]
        elif a.startswith(("--seed=", "--budget=")):
            front.append(a)
        else:
            rest.append(a)
    return front + rest


COMMANDS = {"oriental": cmd_oriental, "theta": cmd_theta, "cat2": cmd_cat2,
            "nerve": cmd_nerve, "homology": cmd_homology, "verify": cmd_verify}


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_hoist_globals(argv))
    if args.budget is None and os.environ.get("NERVELAB_BUDGET"):
        args.budget = int(os.environ["NERVELAB_BUDGET"])
    try:
        return COMMANDS[args.cmd](args)
    except cat2.BudgetExceeded as exc:
        print(f"nervelab: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, theta.ThetaError, cat2.CategoryError) as exc:
        print(f"nervelab: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
