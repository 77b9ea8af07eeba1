"""Command-line front end.

Exit codes: 0 success, 1 the two sources given to ``verify`` differ,
2 validation or precondition error, 3 resource cap exceeded.
The enumeration cap can be raised or lowered with ``ETRI_ENUM_CAP``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io as docs
from .axioms import (
    TwofoldPartition,
    check_linearity,
    check_respects_dominance_partition,
    induced_weak_order,
    is_influential,
)
from .combinatorics import (
    ANTICHAIN_CAP,
    MAX_DEDEKIND_N,
    brute_force_max_antichain,
    count_monotone_functions,
    max_antichain_size,
)
from .errors import EtriError, PreconditionError, ResourceCapError, ValidationError
from .models import ModelERepresentation
from .relations import weak_order_classes
from .representations import (
    assignment_mask,
    build_decomposable_representation,
    build_unanimous_representation,
    minimally_acceptable,
    to_etrinb_pc,
    unanimize,
    verify_equivalence,
)
from .scales import enumeration_cap

EXIT_OK = 0
EXIT_DIFFERENT = 1
EXIT_INVALID = 2
EXIT_CAP = 3


def _fmt(space, x) -> str:
    return "(" + ", ".join(docs.alternative_out(space, x)) + ")"


def load_source(path, scales_from=None):
    """A model document (``.json``) or a partition CSV (anything else)."""
    path = Path(path)
    if not path.exists():
        raise ValidationError(f"{path}: no such file")
    if path.suffix.lower() == ".json":
        return docs.load_model(path)
    space = None
    if scales_from is not None:
        space = docs.load_model(scales_from).space
    return docs.read_partition(path, space)


def as_partition(source) -> TwofoldPartition:
    if isinstance(source, TwofoldPartition):
        return source
    return TwofoldPartition(source.space, assignment_mask(source, source.space))


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _write(path, content: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(content)
    else:
        Path(path).write_text(content, encoding="utf-8")


# --- commands ------------------------------------------------------------------


def cmd_sort(args) -> int:
    model = docs.load_model(args.model)
    space = model.space
    if args.full_space:
        content = docs.full_space_csv(model, space)
        n = space.size
    else:
        if not args.alternatives:
            raise ValidationError("give an alternatives CSV or --full-space")
        alts = docs.read_alternatives(args.alternatives, space)
        labels = [model.assign(x) for x in alts]
        content = docs.assignments_csv(space, alts, labels)
        n = len(alts)
    _write(args.output, content)
    if args.output not in (None, "-"):
        accepted = content.count(",A\n")
        _emit(args, f"assigned {n} alternatives: {accepted} A, {n - accepted} U",
              {"alternatives": n, "A": accepted, "U": n - accepted})
    return EXIT_OK


def analyze_partition(p: TwofoldPartition) -> dict:
    space = p.space
    report = {"size": space.size, "A": p.size_a, "U": p.size_u, "attributes": []}
    lin = check_linearity(p)
    for i, scale in enumerate(space.scales):
        rel = induced_weak_order(p, i)
        infl = is_influential(p, i)
        v = lin.verdicts[i]
        entry = {
            "name": scale.name,
            "influential": bool(infl),
            "linear": bool(v),
        }
        if v:
            entry["classes"] = [[docs._level_out(scale, lv) for lv in c] for c in weak_order_classes(rel)]
        else:
            x, y, a, b = v.witness
            entry["witness"] = {
                "levels": [docs._level_out(scale, x), docs._level_out(scale, y)],
                "contexts": [[docs._level_out(space.scales[k], c) for k, c in _others(i, a)],
                             [docs._level_out(space.scales[k], c) for k, c in _others(i, b)]],
            }
        report["attributes"].append(entry)
    report["linear"] = lin.ok
    dom = check_respects_dominance_partition(p)
    report["respects_dominance"] = bool(dom)
    if not dom:
        x, y = dom.witness
        report["dominance_witness"] = [docs.alternative_out(space, x), docs.alternative_out(space, y)]
    return report


def _others(i, context):
    # context lists the coordinates of every attribute except i, in order
    ks = [k for k in range(len(context) + 1) if k != i]
    return list(zip(ks, context))


def _tup(values) -> str:
    return "(" + ", ".join(values) + ")"


def _analysis_text(report: dict) -> str:
    lines = [f"alternatives: {report['size']} (A: {report['A']}, U: {report['U']})"]
    if report["linear"]:
        lines.append("linear: yes (all attributes)")
    else:
        bad = [a["name"] for a in report["attributes"] if not a["linear"]]
        lines.append(f"linear: no (attributes {', '.join(bad)})")
    for a in report["attributes"]:
        head = f"  {a['name']}: {'influential' if a['influential'] else 'not influential'}"
        if a["linear"]:
            chain = " < ".join("{" + ", ".join(c) + "}" for c in a["classes"])
            lines.append(f"{head}; {len(a['classes'])} classes: {chain}")
        else:
            w = a["witness"]
            lines.append(f"{head}; witness levels {w['levels'][0]} and {w['levels'][1]} "
                         f"in contexts {_tup(w['contexts'][0])} and {_tup(w['contexts'][1])}")
    dom = "yes" if report["respects_dominance"] else "no"
    if not report["respects_dominance"]:
        x, y = report["dominance_witness"]
        dom += f" ({_tup(y)} is in A, {_tup(x)} dominates it and is in U)"
    lines.append(f"respects dominance: {dom}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    p = as_partition(load_source(args.source, args.scales))
    report = analyze_partition(p)
    _emit(args, _analysis_text(report), report)
    return EXIT_OK


def cmd_minimal(args) -> int:
    p = as_partition(load_source(args.source, args.scales))
    mins = minimally_acceptable(p)
    content = docs.alternatives_csv(p.space, mins)
    if args.output not in (None, "-"):
        _write(args.output, content)
    if args.json:
        print(json.dumps({"count": len(mins), "minimal": [docs.alternative_out(p.space, x) for x in mins]}, indent=2))
    elif args.output in (None, "-"):
        sys.stdout.write(content)
    else:
        print(f"{len(mins)} minimally acceptable alternatives written to {args.output}")
    return EXIT_OK


def cmd_verify(args) -> int:
    a = load_source(args.first, args.scales)
    b = load_source(args.second, args.scales)
    if [s.levels for s in a.space.scales] != [s.levels for s in b.space.scales]:
        raise ValidationError("the two sources are defined on different product spaces")
    report = verify_equivalence(a, b, a.space)
    payload = {"identical": report.identical, "checked": report.checked, "total": report.total}
    if not report.identical:
        x, la, lb = report.first_difference
        payload["first_difference"] = {"alternative": docs.alternative_out(a.space, x), "first": la, "second": lb}
        text = f"different at {_fmt(a.space, x)}: {la} vs {lb}"
    else:
        text = report.summary()
    _emit(args, text, payload)
    return EXIT_OK if report.identical else EXIT_DIFFERENT


def transform(source, target: str, via: str = "auto"):
    """Returns ``(model, metadata)``; the result is verified against the source."""
    if target == "unanimous":
        if isinstance(source, ModelERepresentation) and via in ("auto", "flatten"):
            if source.has_veto:
                raise PreconditionError(
                    "flattening coalitions needs a representation without vetoes; "
                    "rerun with --via minimal to build the representation from minimal acceptable alternatives"
                )
            result = unanimize(source)
            if not result.verification:
                raise ValidationError(f"flattened representation differs: {result.verification.summary()}")
            out, how = result.representation, "flattened coalitions"
        else:
            if via == "flatten":
                raise ValidationError("flattening needs a model_e document")
            out, how = build_unanimous_representation(as_partition(source)), "minimal acceptable profiles"
    elif target == "etrinb-pc":
        rep = source
        if not (isinstance(source, ModelERepresentation) and source.family.is_unanimous and not source.has_veto):
            rep = build_unanimous_representation(as_partition(source))
        out, how = to_etrinb_pc(rep), "rank encoding of a unanimous representation"
    elif target == "decomposable":
        out, how = build_decomposable_representation(as_partition(source)), "induced ranks"
    else:
        raise ValidationError(f"unknown transformation target {target!r}")
    space = source.space
    report = verify_equivalence(source, out, space)
    if not report:
        raise ValidationError(f"transformed model differs from its source: {report.summary()}")
    meta = {"transformation": target, "construction": how,
            "verification": {"scope": "exhaustive", "checked": report.checked, "total": report.total,
                             "identical": True}}
    return out, meta


def cmd_transform(args) -> int:
    source = load_source(args.source, args.scales)
    out, meta = transform(source, args.to, args.via)
    doc = docs.model_to_dict(out, meta)
    _write(args.output, json.dumps(doc, indent=2) + "\n")
    if args.output not in (None, "-"):
        profiles = len(doc.get("profiles", doc.get("minimal_ranks", [])))
        _emit(args, f"wrote {args.to} model ({profiles} profiles), {meta['verification']['checked']} alternatives verified",
              {"output": args.output, "profiles": profiles, **meta})
    return EXIT_OK


def cmd_count(args) -> int:
    if args.what == "antichain":
        if not args.chains:
            raise ValidationError("antichain counting needs --chains")
        try:
            chains = tuple(int(v) for v in args.chains.split(","))
        except ValueError:
            raise ValidationError(f"--chains must be comma-separated integers, got {args.chains!r}") from None
        closed = max_antichain_size(chains)
        payload = {"chains": list(chains), "closed_form": closed}
        text = f"max antichain size for chains {','.join(map(str, chains))}: {closed}"
        try:
            oracle = brute_force_max_antichain(chains)
            payload["oracle"] = oracle
            text += f" (oracle: {oracle})"
        except ResourceCapError:
            payload["oracle"] = None
            text += f" (oracle skipped: grid above {ANTICHAIN_CAP} points)"
        _emit(args, text, payload)
        return EXIT_OK
    n = args.n
    if n is None:
        raise ValidationError("dedekind counting needs -n")
    if n > MAX_DEDEKIND_N:
        raise ResourceCapError(f"enumeration of monotone functions is limited to n <= {MAX_DEDEKIND_N}",
                               size=n, cap=MAX_DEDEKIND_N)
    total = count_monotone_functions(n)
    _emit(args, f"monotone boolean functions on {n} variables: {total}; twofold partitions: {total - 2}",
          {"n": n, "monotone_functions": total, "partitions": total - 2})
    return EXIT_OK


# --- entry point ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="etrinb", description="Two-category outranking sorting models and their partitions.")
    parser.add_argument("--json", action="store_true", help="machine-readable report")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="assign alternatives with a model document")
    p.add_argument("model")
    p.add_argument("alternatives", nargs="?")
    p.add_argument("--full-space", action="store_true", help="assign every alternative of the product space")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sort)

    p = sub.add_parser("analyze", help="influence, induced orders, linearity, dominance")
    p.add_argument("source", help="partition CSV or model document")
    p.add_argument("--scales", help="model document whose scales declare the partition's space")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("transform", help="rewrite a model or partition as another representation")
    p.add_argument("source")
    p.add_argument("--to", required=True, choices=("unanimous", "etrinb-pc", "decomposable"))
    p.add_argument("--via", default="auto", choices=("auto", "flatten", "minimal"),
                   help="for --to unanimous: flatten coalitions of a model_e document or use minimal acceptable profiles")
    p.add_argument("--scales")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("minimal", help="minimally acceptable alternatives")
    p.add_argument("source")
    p.add_argument("--scales")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("verify", help="compare two assignment sources on the whole space")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--scales")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("count", help="antichain widths and monotone partition counts")
    p.add_argument("what", choices=("antichain", "dedekind"))
    p.add_argument("--chains", help="comma-separated chain lengths, e.g. 21,21,21")
    p.add_argument("-n", type=int)
    p.set_defaults(func=cmd_count)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        enumeration_cap()
        return args.func(args)
    except ResourceCapError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CAP
    except (EtriError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
