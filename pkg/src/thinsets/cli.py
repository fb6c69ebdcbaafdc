"""Command-line interface: ``thinsets <command> ...``.

Exit codes: 0 when every check passes, 1 when a verification fails (a witness
is printed), 2 for input errors.  ``--format records`` emits JSON lines: a
versioned header carrying the run manifest, one line per record, and a final
summary.  ``--save-manifest`` writes the manifest; ``--manifest`` replays one,
reproducing the records byte for byte.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import random
import sys
from dataclasses import dataclass, field

from . import __version__
from .cardinals import mu_thin_partition_number, parse_cardinal, theorem4_predicate
from .coloring import (
    DIAGONAL,
    HORIZONTAL,
    LARGE_GROUP_NOTE,
    VERTICAL,
    LineSpec,
    chain_three_coloring,
    line_census,
    chain_containments,
)
from .constructions import (
    bergman_set,
    count_translates_in,
    direct_sum_set,
    explain_collisions,
    generic_indexing,
    pair_collision_set,
    quadratic_thin_set,
    sample_rational_pairs,
)
from .errors import ThinsetsError
from .groups import DirectSum, RationalVectors, parse_group
from .partition import (
    Entourage,
    SubgroupChain,
    chain_partition,
    default_schedule,
    greedy_thin_partition,
    uniform_discrete_partition,
    verify_partition,
)
from .subsets import parse_element_set, parse_radius, parse_subset_spec
from .thinness import is_m_thin_window, lemma1_equivalence_check

RECORDS_FORMAT = "thinsets-records"
RECORDS_VERSION = 1
_NOT_MANIFEST = {"func", "manifest", "save_manifest", "format"}


@dataclass
class Outcome:
    ok: bool = True
    lines: list = field(default_factory=list)
    records: list = field(default_factory=list)

    def say(self, text: str) -> None:
        self.lines.append(text)

    def record(self, **rec) -> None:
        self.records.append(rec)

    def fail(self, text: str) -> None:
        self.ok = False
        self.lines.append("FAIL: " + text)


# -- commands ---------------------------------------------------------------------


def cmd_check_thin(args) -> Outcome:
    out = Outcome()
    G = parse_group(args.group)
    A = parse_subset_spec(args.set, G, args.window)
    radii = [parse_radius(r, G) for r in (args.radius or ["F8"])]
    for text, F in zip(args.radius or ["F8"], radii):
        rep = is_m_thin_window(A, F, args.m, None, args.bound)
        out.say(f"{text}: {rep.summary()}")
        out.record(
            radius=text,
            verdict=rep.verdict,
            m=args.m,
            window=rep.window,
            bound=rep.bound,
            min_bound=rep.min_bound,
            violators=[G.format_element(x) for x in rep.violations],
        )
        if not rep.consistent:
            out.fail(f"{text}: |Fx ∩ A| > {args.m} at x = {G.format_element(rep.witness)}")
        if args.lemma1:
            l1 = lemma1_equivalence_check(A, F, args.m)
            out.say(f"{text}: bounded-exceptional-set check: |Y|={len(l1.Y)} |Z|={len(l1.Z)} "
                    f"violators outside Z: {len(l1.violators_outside)}")
            out.record(
                radius=text,
                lemma1_Y=sorted(G.format_element(y) for y in l1.Y),
                lemma1_outside=[G.format_element(x) for x in l1.violators_outside],
            )
            if not l1.agreement:
                out.fail(f"{text}: violator outside Z at {G.format_element(l1.violators_outside[0])}")
    return out


def _emit_parts(out: Outcome, G, parts) -> None:
    fmt = G.format_element if G is not None else str
    key = G.index_of if G is not None else (lambda x: x)
    for i, P in enumerate(parts):
        elems = [fmt(x) for x in sorted(P, key=key)]
        out.say(f"part {i}: {{{', '.join(elems)}}}")
        out.record(color=i, elements=elems)


def cmd_partition(args) -> Outcome:
    out = Outcome()
    if args.algorithm == "uniform":
        Z = parse_group("Z^1")
        pts = parse_element_set(Z, args.set)
        res = uniform_discrete_partition(pts, Entourage.interval(args.U), Entourage.interval(args.V), args.mu)
        _emit_parts(out, None, res.parts)
        V = Entourage.interval(args.V)
        for i, P in enumerate(res.parts):
            for x in P:
                if V(x) & P != {x}:
                    out.fail(f"part {i}: V({x}) meets the part outside {x}")
        if len(res.parts) > args.mu:
            out.fail(f"{len(res.parts)} colours used, mu = {args.mu}")
        return out

    G = parse_group(args.group)
    if args.algorithm == "greedy":
        A = parse_subset_spec(args.set, G, args.window)
        radii = [parse_radius(r, G) for r in args.radius] if args.radius else default_schedule(G)
        res = greedy_thin_partition(A, args.m, radii, args.bound)
        _emit_parts(out, G, res.parts)
        out.say(f"input bound {res.trace['input_bound']}, part bounds {res.bounds}")
        out.record(input_bound=res.trace["input_bound"], part_bounds=res.bounds)
        for F in radii:
            chk = verify_partition(A, res, F, 1)
            if not chk.passed:
                out.fail("; ".join(chk.problems))
        if len(res.nonempty_parts) > args.m:
            out.fail(f"{len(res.nonempty_parts)} parts for m = {args.m}")
        return out

    # chain
    if not isinstance(G, DirectSum) or G.component.order is None:
        raise ThinsetsError("chain partitions need a direct sum of a finite group")
    chain = SubgroupChain.coordinate_prefixes(G, args.levels)
    A = parse_subset_spec(args.set, G, len(chain.top))
    target = args.parts or args.m
    res = chain_partition(A, chain, m=args.m, parts_target=target)
    _emit_parts(out, G, res.parts)
    out.say(f"collision exceptions: {res.trace['exceptions']}, nested levels: {res.trace['all_nested']}, "
            f"flagged cross-level pairs: {res.trace['cross_level_pairs']}")
    out.record(exceptions=res.trace["exceptions"], nested=res.trace["all_nested"],
               cross_level_pairs=res.trace["cross_level_pairs"])
    if res.trace["exceptions"]:
        out.fail(f"{res.trace['exceptions']} collisions outside the predicted subgroup")
    return out


def cmd_color_square(args) -> Outcome:
    out = Outcome()
    G = parse_group(args.group)
    if not isinstance(G, DirectSum) or G.component.order is None:
        raise ThinsetsError("color-square needs a direct sum of a finite group")
    chain = SubgroupChain.coordinate_prefixes(G, args.levels)
    table = chain_three_coloring(G, chain, args.window)
    out.say(f"coloured {len(table)} pairs of {G.spec} restricted to level {args.levels}")
    out.say("note: " + LARGE_GROUP_NOTE)
    counts = {c: len(table.class_of(c)) for c in (1, 2, 3)}
    out.record(pairs=len(table), counts=counts)
    if args.show_table:
        out.records.extend(table.to_records())
    if args.verify_lines:
        exc = chain_containments(table, chain)
        for kind in (HORIZONTAL, VERTICAL, DIAGONAL):
            out.say(f"{kind} containment exceptions: {len(exc[kind])}")
            out.record(kind=kind, exceptions=[[G.format_element(g), [G.format_element(v) for v in p]]
                                              for g, p in exc[kind]])
            for g, p in exc[kind][:1]:
                out.fail(f"{kind} line {G.format_element(g)} has a sparse-colour point at {p}")
        for g in sorted(chain.top - {G.identity}, key=G.index_of)[: args.census]:
            for kind in (HORIZONTAL, VERTICAL, DIAGONAL):
                c = line_census(table, LineSpec(kind, g))
                out.say(c.summary(G.format_element))
    return out


def _sample_F(H, rng, n):
    els = H.enumerate_prefix(H.order)[1:]
    return [(H.identity, *rng.sample(els, 2)) for _ in range(n)]


def cmd_construct(args) -> Outcome:
    out = Outcome()
    rng = random.Random(args.seed)
    K = parse_group(args.K)
    if args.kind == "bergman":
        H = parse_group(args.H)
        ix = generic_indexing(H, K, args.indexing, seed=args.seed)
        A = bergman_set(H, K, ix)
        out.say(f"|A| = {len(A)} in {A.group.spec} ({len(ix)} indexed pairs, {args.indexing})")
        out.record(size=len(A), manifest=A.manifest)
        if "translate-count" in args.verify:
            expected = 6 if args.indexing == "ordered" else 3
            for f in _sample_F(H, rng, args.samples):
                F = [(h, K.identity) for h in f]
                tc = count_translates_in(F, A, exhaustive=True)
                label = "{" + ", ".join(H.format_element(h) for h in f) + "}"
                out.say(f"F = {label}: {tc.count} translates")
                out.record(F=label, translates=tc.count)
                if tc.count != expected:
                    out.fail(f"F = {label}: {tc.count} translates, expected {expected}")
        return out

    Q = RationalVectors(args.d)
    if args.kind == "quadratic":
        pairs = sample_rational_pairs(args.d, args.pairs, seed=args.seed)
        A = quadratic_thin_set(Q, K, args.m, generic_indexing(Q, K, "ordered", args.seed, pairs))
        out.say(f"|A| = {len(A)} in {A.group.spec}, coincidences {len(A.coincidences)}")
        out.record(size=len(A), coincidences=len(A.coincidences), manifest=A.manifest)
        if "collisions" in args.verify:
            for _ in range(args.samples):
                (a, b) = pairs[rng.randrange(len(pairs))]
                i, j, k = rng.sample(range(args.m + 1), 3)
                x = (K.identity, Q._mul(Q.scale(j - i, a), Q.scale(j * j - i * i, b)))
                y = (K.identity, Q._mul(Q.scale(k - i, a), Q.scale(k * k - i * i, b)))
                rep = pair_collision_set(A, x, y)
                explained, unexplained = explain_collisions(A, x, y)
                out.say(f"triple ({i},{j},{k}): |A(x,y)| = {rep.size} (cap {rep.cap}), unexplained {len(unexplained)}")
                out.record(triple=[i, j, k], size=rep.size, cap=rep.cap, unexplained=len(unexplained))
                if unexplained or not rep.within_cap or not rep.size:
                    out.fail(f"triple ({i},{j},{k}) not fully explained")
        return out

    # direct-sum
    comps = []
    for pos, m in enumerate(args.ms):
        pairs = sample_rational_pairs(args.d, args.pairs, seed=args.seed + pos)
        A_n = quadratic_thin_set(Q, K, m, generic_indexing(Q, K, "ordered", args.seed + pos, pairs))
        comps.append((A_n.group, A_n))
    A = direct_sum_set(comps)
    out.say(f"|A| = {len(A)} = " + " + ".join(str(len(c)) for _, c in comps)
            + f", summand labels {A.manifest['labels']}")
    out.record(size=len(A), labels=A.manifest["labels"])
    if "collisions" in args.verify:
        G = A.group
        worst = 0
        diffs = {G._mul(c, G._inv(b)) for b in A.elements for c in A.elements}
        outside = [x for x in diffs if sum(1 for xi, f in zip(x, G.factors) if xi != f.identity) >= 2]
        for x in outside:
            hits = sum(1 for a in A.elements if G._mul(a, x) in A.provenance)
            worst = max(worst, hits)
        out.say(f"{len(outside)} differences outside every summand; max |A ∩ (A - x)| = {worst}")
        out.record(outside=len(outside), max_overlap=worst)
        if worst > 1:
            out.fail(f"overlap {worst} > 1")
    return out


def cmd_mu(args) -> Outcome:
    out = Outcome()
    size, kappa = parse_cardinal(args.sizeG), parse_cardinal(args.kappa)
    mu = mu_thin_partition_number(size, kappa)
    text = " or ".join(sorted(map(str, mu))) if isinstance(mu, frozenset) else str(mu)
    out.say(text)
    out.record(sizeG=str(size), kappa=str(kappa), mu=sorted(map(str, mu)) if isinstance(mu, frozenset) else str(mu))
    if args.gamma:
        gamma = parse_cardinal(args.gamma)
        pred = theorem4_predicate(gamma, size)
        out.say(f"splits into {gamma} pieces thin below {gamma.successor()}: {pred}")
        out.record(gamma=str(gamma), splits=pred)
    return out


# -- parser ------------------------------------------------------------------------------


def _csv_ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="thinsets", description="Thin subsets of groups at finite scale.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "records"], default="text")
    common.add_argument("--manifest", help="replay a saved run manifest (other options are ignored)")
    common.add_argument("--save-manifest", metavar="PATH", help="write this run's manifest")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check-thin", parents=[common], help="window check of m-thinness")
    c.add_argument("--group", default="Z^1")
    c.add_argument("--set", default="pairs 10^n")
    c.add_argument("--radius", action="append", help="F<n> or {..}; repeatable (default F8)")
    c.add_argument("--m", type=int, default=1)
    c.add_argument("--window", type=int, default=1000)
    c.add_argument("--bound", type=int, default=0)
    c.add_argument("--lemma1", action="store_true", help="also run the bounded-exceptional-set check")
    c.set_defaults(func=cmd_check_thin)

    c = sub.add_parser("partition", parents=[common], help="split a set into thin parts")
    c.add_argument("--algorithm", choices=["greedy", "uniform", "chain"], default="greedy")
    c.add_argument("--group", default="Z^1")
    c.add_argument("--set", default="pairs 10^n")
    c.add_argument("--radius", action="append")
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--window", type=int, default=1000)
    c.add_argument("--bound", type=int, default=None)
    c.add_argument("--U", type=int, default=2, help="uniform: U-radius on Z")
    c.add_argument("--V", type=int, default=1, help="uniform: V-radius on Z")
    c.add_argument("--mu", type=int, default=2)
    c.add_argument("--levels", type=int, default=4, help="chain: coordinate-prefix levels")
    c.add_argument("--parts", type=int, default=None, help="chain: parts target (default m)")
    c.set_defaults(func=cmd_partition)

    c = sub.add_parser("color-square", parents=[common], help="three-colour G×G along a subgroup chain")
    c.add_argument("--group", default="DirectSum[Zmod 2; omega]")
    c.add_argument("--levels", type=int, default=4)
    c.add_argument("--window", type=int, default=None)
    c.add_argument("--verify-lines", action="store_true")
    c.add_argument("--census", type=int, default=0, help="print line censuses for the first N g")
    c.add_argument("--show-table", action="store_true", help="include every coloured pair in records")
    c.set_defaults(func=cmd_color_square)

    c = sub.add_parser("construct", parents=[common], help="pair-indexed 2-thin sets")
    c.add_argument("kind", choices=["bergman", "quadratic", "direct-sum"])
    c.add_argument("--H", default="Zmod 5")
    c.add_argument("--K", default="Zmod 10007")
    c.add_argument("--indexing", choices=["ordered", "unordered"], default="ordered")
    c.add_argument("--d", type=int, default=4)
    c.add_argument("--m", type=int, default=2)
    c.add_argument("--ms", type=_csv_ints, default=[2, 3])
    c.add_argument("--pairs", type=int, default=20)
    c.add_argument("--seed", type=int, default=0)
    c.add_argument("--samples", type=int, default=5)
    c.add_argument("--verify", action="append", default=[],
                   choices=["translate-count", "collisions"])
    c.set_defaults(func=cmd_construct)

    c = sub.add_parser("mu", parents=[common], help="least number of thin pieces of a group")
    c.add_argument("--sizeG", required=False, default="aleph 1")
    c.add_argument("--kappa", required=False, default="aleph 0")
    c.add_argument("--gamma", default=None)
    c.set_defaults(func=cmd_mu)
    return p


def manifest_of(args) -> dict:
    return {k: v for k, v in sorted(vars(args).items()) if k not in _NOT_MANIFEST}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    fmt = args.format
    save = args.save_manifest
    if args.manifest:
        try:
            with open(args.manifest) as fh:
                data = json.load(fh)
            base = parser.parse_args([data["command"]])
            for k, v in data.items():
                setattr(base, k, v)
            args = base
        except (OSError, ValueError, KeyError) as exc:
            print(f"error: cannot read manifest: {exc}", file=stderr)
            return 2
    manifest = manifest_of(args)
    if save:
        with open(save, "w") as fh:
            json.dump(manifest, fh, sort_keys=True, indent=2)
            fh.write("\n")
    try:
        outcome = args.func(args)
    except (ThinsetsError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    code = 0 if outcome.ok else 1
    if fmt == "records":
        header = {"format": RECORDS_FORMAT, "version": RECORDS_VERSION, "manifest": manifest}
        print(json.dumps(header, sort_keys=True, default=str), file=stdout)
        for rec in outcome.records:
            print(json.dumps(rec, sort_keys=True, default=str), file=stdout)
        print(json.dumps({"summary": {"exit": code, "ok": outcome.ok}}, sort_keys=True), file=stdout)
    else:
        for line in outcome.lines:
            print(line, file=stdout)
    return code


def main() -> None:
    sys.exit(run())
