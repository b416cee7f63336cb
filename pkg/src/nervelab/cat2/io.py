"""JSON import/export for finite categories, 2-categories and 2-functors.

Cell labels may be integers, strings or (nested) tuples; tuples are written
as JSON lists and read back as tuples. Hom keys are ``"a->b"`` and composition
triples ``"a->b->c"`` with objects rendered by ``str``.
"""

import json

from .core import CategoryError, FinCat, Fin2Cat, Functor, TwoFunctor

CAT_FORMAT = "nervelab-cat/1"
CAT2_FORMAT = "nervelab-2cat/1"
FUNCTOR2_FORMAT = "nervelab-2functor/1"


def encode(x):
    if isinstance(x, tuple):
        return [encode(y) for y in x]
    return x


def decode(x):
    if isinstance(x, list):
        return tuple(decode(y) for y in x)
    return x


def fincat_to_json(C):
    return {
        "objects": [encode(x) for x in C.objects],
        "arrows": [{"id": encode(a), "src": encode(C.src[a]), "tgt": encode(C.tgt[a])}
                   for a in C.arrows],
        "identities": [[encode(x), encode(C.ident[x])] for x in C.objects],
        "comp": [[encode(g), encode(f), encode(h)] for (g, f), h in C.comp.items()],
    }


def fincat_from_json(data):
    arrows = [decode(a["id"]) for a in data["arrows"]]
    return FinCat(
        [decode(x) for x in data["objects"]],
        arrows,
        {decode(a["id"]): decode(a["src"]) for a in data["arrows"]},
        {decode(a["id"]): decode(a["tgt"]) for a in data["arrows"]},
        {decode(x): decode(e) for x, e in data["identities"]},
        {(decode(g), decode(f)): decode(h) for g, f, h in data["comp"]},
    )


def _names(objects):
    names = {str(x): x for x in objects}
    if len(names) != len(objects):
        raise CategoryError("object names must be distinct after str()")
    return names


def fin2cat_to_json(C):
    return {
        "format": CAT2_FORMAT,
        "objects": [encode(x) for x in C.objects],
        "units": [[encode(x), encode(C.units[x])] for x in C.objects],
        "homs": {f"{a}->{b}": fincat_to_json(H) for (a, b), H in C.homs.items()},
        "hcomp": {
            f"{a}->{b}->{c}": {
                "objects": [[encode(g), encode(f), encode(h)]
                            for (g, f), h in C.hcomp0.get((a, b, c), {}).items()],
                "arrows": [[encode(g), encode(f), encode(h)]
                           for (g, f), h in C.hcomp1.get((a, b, c), {}).items()],
            }
            for a, b, c in C.triples()
        },
    }


def fin2cat_from_json(data):
    """Read a 2-category; a plain category document becomes discrete homs."""
    if data.get("format") == CAT_FORMAT:
        from .core import discrete_2cat
        return discrete_2cat(fincat_from_json(data))
    if data.get("format", CAT2_FORMAT) != CAT2_FORMAT:
        raise CategoryError(f"unknown format {data.get('format')!r}")
    objects = [decode(x) for x in data["objects"]]
    names = _names(objects)

    def split(key, n):
        parts = key.split("->")
        if len(parts) != n or any(p not in names for p in parts):
            raise CategoryError(f"bad key {key!r}")
        return tuple(names[p] for p in parts)

    homs = {split(k, 2): fincat_from_json(v) for k, v in data["homs"].items()}
    hcomp0, hcomp1 = {}, {}
    for k, v in data.get("hcomp", {}).items():
        t = split(k, 3)
        hcomp0[t] = {(decode(g), decode(f)): decode(h) for g, f, h in v.get("objects", [])}
        hcomp1[t] = {(decode(g), decode(f)): decode(h) for g, f, h in v.get("arrows", [])}
    units = {decode(x): decode(u) for x, u in data["units"]}
    return Fin2Cat(objects, homs, hcomp0, hcomp1, units)


def twofunctor_to_json(F):
    return {
        "format": FUNCTOR2_FORMAT,
        "source": fin2cat_to_json(F.source),
        "target": fin2cat_to_json(F.target),
        "objects": [[encode(x), encode(F.obj_map[x])] for x in F.source.objects],
        "homs": {
            f"{a}->{b}": {
                "objects": [[encode(x), encode(y)] for x, y in G.obj_map.items()],
                "arrows": [[encode(x), encode(y)] for x, y in G.arr_map.items()],
            }
            for (a, b), G in F.hom_maps.items()
        },
    }


def twofunctor_from_json(data):
    A = fin2cat_from_json(data["source"])
    B = fin2cat_from_json(data["target"])
    names = _names(A.objects)
    obj_map = {decode(x): decode(y) for x, y in data["objects"]}
    hom_maps = {}
    for k, v in data.get("homs", {}).items():
        a, b = (names[p] for p in k.split("->"))
        if (a, b) not in A.homs or (obj_map[a], obj_map[b]) not in B.homs:
            raise CategoryError(f"hom functor given on missing hom {k!r}")
        hom_maps[(a, b)] = Functor(
            A.homs[(a, b)], B.homs[(obj_map[a], obj_map[b])],
            {decode(x): decode(y) for x, y in v["objects"]},
            {decode(x): decode(y) for x, y in v["arrows"]},
        )
    return TwoFunctor(A, B, obj_map, hom_maps)


def dumps(C):
    if isinstance(C, FinCat):
        return json.dumps({"format": CAT_FORMAT, **fincat_to_json(C)})
    if isinstance(C, TwoFunctor):
        return json.dumps(twofunctor_to_json(C))
    return json.dumps(fin2cat_to_json(C))


def loads(text):
    """Parse any of the three document kinds."""
    data = json.loads(text)
    fmt = data.get("format", CAT2_FORMAT)
    if fmt == FUNCTOR2_FORMAT:
        return twofunctor_from_json(data)
    return fin2cat_from_json(data)


def load(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
