"""JSON model documents and CSV partition/assignment files.

A model document is a JSON object::

    {
      "scales": [{"name": "g1", "levels": ["0", "0.5", "1"]},
                 {"name": "g2", "range": {"start": "0", "stop": "10", "step": "1/2"}},
                 {"name": "g3", "symbols": ["bad", "fair", "good"]}],
      "variant": "electre3" | "electre1" | "model_e" | "decomposable",
      "rule": "pc" | "pd" | "some",
      "profiles": [["8", "7", "5"], ...],
      ...
    }

Outranking variants add ``thresholds`` (one ``{"qt", "pt", "vt"}`` object per
attribute, or a single object for all), ``weights`` and ``lambda``, and may
carry an ``encoding`` section mapping source levels to encoded values.
``model_e`` adds ``relations`` (per attribute, ``S`` and optional ``V``, each
given as ``{"threshold": q}``, ``{"classes": [[...], ...]}`` worst first, or
``{"pairs": [[a, b], ...]}``) and ``coalitions`` (minimal winning coalitions as
lists of attribute names or 1-based positions; closed upward on load).
``decomposable`` adds ``values`` (level to rank, per attribute) and
``minimal_ranks``.

Rationals are written as decimals when exact, ``"p/q"`` otherwise.
"""

from __future__ import annotations

import csv
import io as _io
import json
from pathlib import Path

import numpy as np

from .axioms import A_LABEL, U_LABEL, TwofoldPartition
from .errors import DimensionError, ValidationError
from .models import PC, RULES, CoalitionFamily, ModelERepresentation, SortingModel
from .outranking import OutrankingModel, Thresholds, Variant
from .relations import FiniteRelation, strict_threshold_relation, threshold_relation, weak_order_classes, weak_order_from_classes
from .representations import DecomposableRepresentation, EncodedSortingModel, assignment_mask
from .scales import ProductSpace, Scale, format_rational, parse_rational

CLASS_COLUMN = "class"
ID_COLUMN = "id"
MODEL_E = "model_e"
DECOMPOSABLE = "decomposable"
VARIANTS = (Variant.III.value, Variant.I.value, MODEL_E, DECOMPOSABLE)


def _level_out(scale: Scale, v):
    return str(v) if scale.symbolic else format_rational(v)


def _rational(raw):
    # JSON numbers arrive as floats; their shortest repr is what the author typed
    return parse_rational(repr(raw) if isinstance(raw, float) else raw)


def _level_in(scale: Scale, raw):
    if scale.symbolic:
        level = str(raw)
    else:
        level = _rational(raw)
    scale.index(level)
    return level


def _require(doc: dict, key: str, where: str = "model document"):
    if key not in doc:
        raise ValidationError(f"{where} is missing the {key!r} section")
    return doc[key]


# --- scales -------------------------------------------------------------------


def scale_from_dict(d: dict, position: int) -> Scale:
    if not isinstance(d, dict):
        raise ValidationError(f"scale {position + 1} must be an object")
    name = str(d.get("name", f"g{position + 1}"))
    kinds = [k for k in ("levels", "range", "symbols") if k in d]
    if len(kinds) != 1:
        raise ValidationError(f"scale {name!r} needs exactly one of 'levels', 'range', 'symbols'")
    if kinds[0] == "levels":
        return Scale.numeric(name, [_rational(v) for v in d["levels"]])
    if kinds[0] == "range":
        r = d["range"]
        return Scale.from_range(name, *(_rational(_require(r, k, name)) for k in ("start", "stop", "step")))
    return Scale.symbols(name, [str(v) for v in d["symbols"]])


def scale_to_dict(scale: Scale) -> dict:
    if scale.symbolic:
        return {"name": scale.name, "symbols": list(scale.levels)}
    lv = scale.levels
    steps = {b - a for a, b in zip(lv, lv[1:])}
    if len(lv) > 3 and len(steps) == 1:
        step, = steps
        return {"name": scale.name, "range": {"start": format_rational(lv[0]), "stop": format_rational(lv[-1]),
                                              "step": format_rational(step)}}
    return {"name": scale.name, "levels": [format_rational(v) for v in lv]}


def space_from_list(items) -> ProductSpace:
    if not isinstance(items, list) or not items:
        raise ValidationError("'scales' must be a nonempty list")
    return ProductSpace(tuple(scale_from_dict(d, k) for k, d in enumerate(items)))


def space_to_list(space: ProductSpace) -> list:
    return [scale_to_dict(s) for s in space.scales]


def alternative_in(space: ProductSpace, raw) -> tuple:
    if not isinstance(raw, (list, tuple)) or len(raw) != space.n:
        raise DimensionError(f"alternative {raw!r} needs {space.n} coordinates")
    return tuple(_level_in(s, v) for s, v in zip(space.scales, raw))


def alternative_out(space: ProductSpace, x) -> list:
    return [_level_out(s, v) for s, v in zip(space.scales, x)]


# --- relations and coalitions ------------------------------------------------------


def _relation_in(scale: Scale, entry, strict: bool) -> FiniteRelation:
    if entry is None:
        return FiniteRelation.empty(scale.levels)
    if not isinstance(entry, dict) or len(entry) != 1:
        raise ValidationError(f"relation on {scale.name!r} must be one of threshold/classes/pairs")
    (kind, value), = entry.items()
    if kind == "threshold":
        scale.require_numeric()
        t = _rational(value)
        return strict_threshold_relation(scale.levels, t) if strict else threshold_relation(scale.levels, t)
    if kind == "classes":
        if strict:
            raise ValidationError("veto relations cannot be given as weak-order classes")
        return weak_order_from_classes(scale.levels, [[_level_in(scale, v) for v in c] for c in value])
    if kind == "pairs":
        return FiniteRelation.from_pairs(scale.levels, [(_level_in(scale, a), _level_in(scale, b)) for a, b in value])
    raise ValidationError(f"unknown relation encoding {kind!r} on {scale.name!r}")


def _relation_out(scale: Scale, rel: FiniteRelation, strict: bool):
    if not rel.matrix.any():
        return None
    if not scale.symbolic:
        m = rel.matrix
        lv = scale.levels
        if strict:
            gaps = [lv[a] - lv[b] for a in range(len(lv)) for b in range(len(lv)) if not m[a, b]]
            t = max(gaps)
            cand = strict_threshold_relation(lv, t)
        else:
            t = max(lv[b] - lv[a] for a in range(len(lv)) for b in range(len(lv)) if m[a, b])
            cand = threshold_relation(lv, t)
        if cand == rel:
            return {"threshold": format_rational(t)}
    if not strict and rel.is_weak_order():
        return {"classes": [[_level_out(scale, v) for v in c] for c in weak_order_classes(rel)]}
    return {"pairs": [[_level_out(scale, a), _level_out(scale, b)] for a, b in rel.pairs()]}


def _attribute_position(space: ProductSpace, ref) -> int:
    if isinstance(ref, bool):
        raise ValidationError(f"bad attribute reference {ref!r}")
    if isinstance(ref, int):
        if not 1 <= ref <= space.n:
            raise ValidationError(f"attribute position {ref} outside 1..{space.n}")
        return ref - 1
    names = [s.name for s in space.scales]
    if ref not in names:
        raise ValidationError(f"unknown attribute {ref!r}")
    return names.index(ref)


def coalitions_in(space: ProductSpace, items) -> CoalitionFamily:
    if not isinstance(items, list) or not items:
        raise ValidationError("'coalitions' must be a nonempty list of minimal winning coalitions")
    minimal = [[_attribute_position(space, r) for r in c] for c in items]
    return CoalitionFamily.from_minimal(space.n, minimal)


def coalitions_out(space: ProductSpace, family: CoalitionFamily) -> list:
    return [[space.scales[i].name for i in c] for c in family.minimal()]


# --- thresholds ------------------------------------------------------------------


def _thresholds_in(raw, n: int) -> tuple:
    items = [raw] * n if isinstance(raw, dict) else raw
    if not isinstance(items, list) or len(items) != n:
        raise ValidationError(f"'thresholds' needs one entry per attribute ({n})")
    out = []
    for d in items:
        vt = d.get("vt")
        out.append(Thresholds(_rational(_require(d, "qt", "thresholds")), _rational(_require(d, "pt", "thresholds")),
                              None if vt is None else _rational(vt)))
    return tuple(out)


def _thresholds_out(th: Thresholds) -> dict:
    d = {"qt": format_rational(th.qt), "pt": format_rational(th.pt)}
    if th.vt is not None:
        d["vt"] = format_rational(th.vt)
    return d


# --- model documents ---------------------------------------------------------------


def model_from_dict(doc: dict):
    """Build a model from a parsed document.

    Returns a :class:`SortingModel`, :class:`EncodedSortingModel`,
    :class:`ModelERepresentation` or :class:`DecomposableRepresentation`.
    """
    if not isinstance(doc, dict):
        raise ValidationError("a model document must be a JSON object")
    variant = str(_require(doc, "variant")).lower()
    if variant not in VARIANTS:
        raise ValidationError(f"variant must be one of {VARIANTS}, got {variant!r}")
    rule = str(doc.get("rule", PC)).lower()
    if rule not in RULES:
        raise ValidationError(f"rule must be one of {RULES}, got {rule!r}")
    space = space_from_list(_require(doc, "scales"))
    if variant == DECOMPOSABLE:
        return _decomposable_in(space, doc)
    if variant == MODEL_E:
        profiles = [alternative_in(space, p) for p in _require(doc, "profiles")]
        rels = _require(doc, "relations")
        if not isinstance(rels, list) or len(rels) != space.n:
            raise ValidationError(f"'relations' needs one entry per attribute ({space.n})")
        S = [_relation_in(s, _require(r, "S", "relations"), strict=False) for s, r in zip(space.scales, rels)]
        V = [_relation_in(s, r.get("V"), strict=True) for s, r in zip(space.scales, rels)]
        return ModelERepresentation(space, S, V, coalitions_in(space, _require(doc, "coalitions")), profiles, rule=rule)
    encoding = doc.get("encoding")
    inner_space = space
    if encoding is not None:
        inner_space = space_from_list(_require(encoding, "scales", "encoding"))
    profiles = [alternative_in(inner_space, p) for p in _require(doc, "profiles")]
    om = OutrankingModel(
        Variant.parse(variant),
        _thresholds_in(_require(doc, "thresholds"), inner_space.n),
        tuple(_rational(w) for w in _require(doc, "weights")),
        _rational(_require(doc, "lambda")),
    )
    model = SortingModel(inner_space, om, profiles, rule)
    if encoding is None:
        return model
    maps = _require(encoding, "maps", "encoding")
    if not isinstance(maps, list) or len(maps) != space.n:
        raise ValidationError("encoding 'maps' needs one object per attribute")
    enc = []
    for s, t, m in zip(space.scales, inner_space.scales, maps):
        table = {}
        for lvl in s.levels:
            key = _level_out(s, lvl)
            if key not in m:
                raise ValidationError(f"encoding of {s.name!r} misses level {key}")
            table[lvl] = int(_level_in(t, m[key]))
        enc.append(table)
    return EncodedSortingModel(model, space, tuple(enc))


def _decomposable_in(space: ProductSpace, doc: dict) -> DecomposableRepresentation:
    values = _require(doc, "values")
    if not isinstance(values, list) or len(values) != space.n:
        raise ValidationError("'values' needs one object per attribute")
    u = []
    for s, m in zip(space.scales, values):
        table = {}
        for lvl in s.levels:
            key = _level_out(s, lvl)
            if key not in m:
                raise ValidationError(f"value function of {s.name!r} misses level {key}")
            table[lvl] = _rational(m[key])
        u.append(table)
    counts = tuple(int(max(t.values())) + 1 for t in u)
    mins = tuple(tuple(_rational(v) for v in r) for r in _require(doc, "minimal_ranks"))
    return DecomposableRepresentation(space, tuple(u), mins, counts)


def model_to_dict(model, metadata: dict | None = None) -> dict:
    if isinstance(model, EncodedSortingModel):
        doc = model_to_dict(model.model)
        doc["scales"] = space_to_list(model.source_space)
        doc["encoding"] = {
            "scales": space_to_list(model.model.space),
            "maps": [{_level_out(s, v): str(r) for v, r in e.items()}
                     for s, e in zip(model.source_space.scales, model.encoding)],
        }
    elif isinstance(model, SortingModel):
        om = model.outranking
        doc = {
            "scales": space_to_list(model.space),
            "variant": om.variant.value,
            "rule": model.rule,
            "thresholds": [_thresholds_out(t) for t in om.thresholds],
            "weights": [format_rational(w) for w in om.weights],
            "lambda": format_rational(om.lam),
            "profiles": [alternative_out(model.space, p) for p in model.profiles],
        }
    elif isinstance(model, ModelERepresentation):
        sp = model.space
        doc = {
            "scales": space_to_list(sp),
            "variant": MODEL_E,
            "rule": model.rule,
            "relations": [
                {"S": _relation_out(s, S, False), "V": _relation_out(s, V, True)}
                for s, S, V in zip(sp.scales, model.S_rel, model.V_rel)
            ],
            "coalitions": coalitions_out(sp, model.family),
            "profiles": [alternative_out(sp, p) for p in model.profiles],
        }
    elif isinstance(model, DecomposableRepresentation):
        sp = model.space
        doc = {
            "scales": space_to_list(sp),
            "variant": DECOMPOSABLE,
            "values": [{_level_out(s, v): format_rational(r) for v, r in u.items()} for s, u in zip(sp.scales, model.u)],
            "minimal_ranks": [[format_rational(v) for v in r] for r in model.minimal_ranks],
        }
    else:
        raise ValidationError(f"cannot serialise {type(model).__name__}")
    if metadata:
        doc["metadata"] = metadata
    return doc


def load_model(path) -> object:
    try:
        doc = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ValidationError(f"{path}: not valid JSON ({e})") from None
    return model_from_dict(doc)


def dump_model(model, path, metadata: dict | None = None) -> None:
    Path(path).write_text(json.dumps(model_to_dict(model, metadata), indent=2) + "\n", encoding="utf-8")


# --- CSV ------------------------------------------------------------------------


def _read_rows(path_or_text):
    if isinstance(path_or_text, Path) or (isinstance(path_or_text, str) and "\n" not in path_or_text):
        text = Path(path_or_text).read_text(encoding="utf-8")
    else:
        text = path_or_text
    reader = csv.reader(_io.StringIO(text))
    rows = [r for r in reader if r and any(c.strip() for c in r)]
    if not rows:
        raise ValidationError("CSV file is empty")
    return [c.strip() for c in rows[0]], [[c.strip() for c in r] for r in rows[1:]]


def _infer_space(names, columns) -> ProductSpace:
    scales = []
    for name, col in zip(names, columns):
        try:
            levels = sorted({_rational(v) for v in col})
            scales.append(Scale.numeric(name, levels))
        except ValidationError:
            raise ValidationError(
                f"column {name!r} is not numeric; give the scales through a model document"
            ) from None
    return ProductSpace(tuple(scales))


def read_partition(path_or_text, space: ProductSpace | None = None) -> TwofoldPartition:
    """Read a partition CSV: one column per attribute plus ``class`` (an ``id`` column is ignored).

    Without ``space``, numeric scales are taken from the distinct column
    values. The rows must cover the space exactly once.
    """
    header, rows = _read_rows(path_or_text)
    if CLASS_COLUMN not in header:
        raise ValidationError(f"partition CSV needs a {CLASS_COLUMN!r} column")
    attr_cols = [k for k, h in enumerate(header) if h not in (CLASS_COLUMN, ID_COLUMN)]
    cls_col = header.index(CLASS_COLUMN)
    for r in rows:
        if len(r) != len(header):
            raise ValidationError(f"row {r} has {len(r)} fields, header has {len(header)}")
    if space is None:
        space = _infer_space([header[k] for k in attr_cols], [[r[k] for r in rows] for k in attr_cols])
    elif space.n != len(attr_cols):
        raise DimensionError(f"CSV has {len(attr_cols)} attribute columns, space has {space.n}")
    mask = np.zeros(space.shape, dtype=bool)
    seen = np.zeros(space.shape, dtype=bool)
    for r in rows:
        x = alternative_in(space, [r[k] for k in attr_cols])
        label = r[cls_col]
        if label not in (A_LABEL, U_LABEL):
            raise ValidationError(f"class must be 'A' or 'U', got {label!r}")
        idx = space.index_of(x)
        if seen[idx]:
            raise ValidationError(f"alternative {alternative_out(space, x)} is listed twice")
        seen[idx] = True
        mask[idx] = label == A_LABEL
    if not seen.all():
        missing = space.at(np.argwhere(~seen)[0])
        raise ValidationError(f"partition is not total: {alternative_out(space, missing)} is missing")
    return TwofoldPartition(space, mask)


def read_alternatives(path_or_text, space: ProductSpace) -> list[tuple]:
    header, rows = _read_rows(path_or_text)
    attr_cols = [k for k, h in enumerate(header) if h not in (CLASS_COLUMN, ID_COLUMN)]
    if len(attr_cols) != space.n:
        raise DimensionError(f"CSV has {len(attr_cols)} attribute columns, space has {space.n}")
    return [alternative_in(space, [r[k] for k in attr_cols]) for r in rows]


def assignments_csv(space: ProductSpace, alternatives, labels) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([ID_COLUMN] + [s.name for s in space.scales] + [CLASS_COLUMN])
    for k, (x, lab) in enumerate(zip(alternatives, labels), start=1):
        w.writerow([k] + alternative_out(space, x) + [lab])
    return buf.getvalue()


def full_space_csv(source, space: ProductSpace) -> str:
    mask = assignment_mask(source, space)
    alts = list(space.enumerate())
    labels = [A_LABEL if m else U_LABEL for m in mask.reshape(-1)]
    return assignments_csv(space, alts, labels)


def partition_csv(p: TwofoldPartition) -> str:
    return full_space_csv(p, p.space)


def alternatives_csv(space: ProductSpace, alternatives) -> str:
    buf = _io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([s.name for s in space.scales])
    for x in alternatives:
        w.writerow(alternative_out(space, x))
    return buf.getvalue()
