"""JSON persistence for algebras, homomorphisms, crossed modules and cat1-algebras.

Group algebras serialize by provenance (``{"field": "GF(4)", "group": "6,1"}``);
other algebras inline their structure constants, plus an optional ``parent``
reference and ``inclusion`` matrix when they were carved out of a larger
algebra.  Every document carries a ``"type"`` key.
"""

from __future__ import annotations

import json

import numpy as np

from .algebra import Algebra, AlgebraAction, group_algebra
from .cat1alg import Cat1Alg
from .ffield import FieldError, parse_field
from .groups import UnknownGroupError, parse_group
from .homs import AlgHom
from .xmodalg import XModAlg


class JSONFormatError(ValueError):
    pass


def _tolist(a):
    return None if a is None else np.asarray(a).tolist()


def algebra_ref(a: Algebra) -> dict:
    if a.group is not None and a.parent is None:
        gid = a.group.small_group_id
        return {"field": a.field.name, "group": f"{gid[0]},{gid[1]}"}
    d = {
        "field": a.field.name,
        "dim": a.dim,
        "labels": list(a.labels),
        "structure": _tolist(a.structure),
        "unit": _tolist(a.unit),
        "name": a.name,
    }
    if a.parent is not None:
        d["parent"] = algebra_ref(a.parent)
        d["inclusion"] = _tolist(a.inclusion)
    return d


def algebra_to_json(a: Algebra) -> dict:
    return {"type": "algebra", **algebra_ref(a)}


def hom_to_json(h: AlgHom) -> dict:
    return {
        "type": "hom",
        "source": algebra_ref(h.source),
        "target": algebra_ref(h.target),
        "matrix": _tolist(h.matrix),
    }


def xmod_to_json(x: XModAlg) -> dict:
    return {
        "type": "xmod",
        "name": x.name,
        "source": algebra_ref(x.source),
        "range": algebra_ref(x.range),
        "boundary": _tolist(x.boundary.matrix),
        "action": _tolist(x.action.left),
        "action_right": _tolist(x.action.right),
    }


def cat1_to_json(c: Cat1Alg) -> dict:
    return {
        "type": "cat1",
        "name": c.name,
        "A": algebra_ref(c.source),
        "R": algebra_ref(c.range),
        "tail": _tolist(c.tail.matrix),
        "head": _tolist(c.head.matrix),
        "embedding": _tolist(c.embedding.matrix),
    }


def to_json(obj) -> dict:
    if isinstance(obj, XModAlg):
        return xmod_to_json(obj)
    if isinstance(obj, Cat1Alg):
        return cat1_to_json(obj)
    if isinstance(obj, AlgHom):
        return hom_to_json(obj)
    if isinstance(obj, Algebra):
        return algebra_to_json(obj)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    return json.dumps(to_json(obj), indent=2, sort_keys=True) + "\n"


class Loader:
    """Rebuilds objects from JSON, sharing algebras that serialize identically."""

    def __init__(self, check: bool = True):
        self.check = check
        self._memo: dict[str, Algebra] = {}

    def _need(self, d, *keys):
        if not isinstance(d, dict):
            raise JSONFormatError(f"expected an object, got {type(d).__name__}")
        for k in keys:
            if k not in d:
                raise JSONFormatError(f"missing key {k!r}")

    def _matrix(self, m, shape, what):
        try:
            a = np.asarray(m if m is not None else [], dtype=np.int64)
        except (TypeError, ValueError) as exc:
            raise JSONFormatError(f"{what}: not an integer array") from exc
        if a.size == 0:
            return np.zeros(shape, dtype=np.int64)
        if a.shape != tuple(shape):
            raise JSONFormatError(f"{what}: expected shape {tuple(shape)}, got {a.shape}")
        return a

    def algebra(self, d) -> Algebra:
        self._need(d, "field")
        key = json.dumps(d, sort_keys=True)
        if key in self._memo:
            return self._memo[key]
        try:
            F = parse_field(d["field"])
        except FieldError as exc:
            raise JSONFormatError(str(exc)) from exc
        if "group" in d:
            a = group_algebra(F, parse_group(str(d["group"])))
        else:
            self._need(d, "dim", "structure")
            n = int(d["dim"])
            C = self._matrix(d["structure"], (n, n, n), "structure")
            unit = d.get("unit", "auto")
            parent = inclusion = None
            if d.get("parent") is not None:
                parent = self.algebra(d["parent"])
                inclusion = self._matrix(d.get("inclusion"), (parent.dim, n), "inclusion")
            a = Algebra(
                F,
                C,
                labels=d.get("labels"),
                unit=unit,
                name=d.get("name"),
                parent=parent,
                inclusion=inclusion,
                check=self.check,
            )
        self._memo[key] = a
        return a

    def hom(self, d, source=None, target=None) -> AlgHom:
        self._need(d, "matrix")
        src = source or self.algebra(d["source"])
        tgt = target or self.algebra(d["target"])
        M = self._matrix(d["matrix"], (tgt.dim, src.dim), "matrix")
        return AlgHom(src, tgt, M, check=self.check)

    def xmod(self, d, check=None) -> XModAlg:
        self._need(d, "source", "range", "boundary", "action")
        S, R = self.algebra(d["source"]), self.algebra(d["range"])
        bd = AlgHom(S, R, self._matrix(d["boundary"], (R.dim, S.dim), "boundary"), check=self.check)
        left = self._matrix(d["action"], (R.dim, S.dim, S.dim), "action")
        right = d.get("action_right")
        right = None if right is None else self._matrix(right, (R.dim, S.dim, S.dim), "action_right")
        act = AlgebraAction(R, S, left, right, check=False)
        return XModAlg(bd, act, name=d.get("name"), check=self.check if check is None else check)

    def cat1(self, d, check=None) -> Cat1Alg:
        self._need(d, "A", "R", "tail", "head", "embedding")
        A, R = self.algebra(d["A"]), self.algebra(d["R"])
        s = AlgHom(A, R, self._matrix(d["tail"], (R.dim, A.dim), "tail"), check=self.check)
        t = AlgHom(A, R, self._matrix(d["head"], (R.dim, A.dim), "head"), check=self.check)
        e = AlgHom(R, A, self._matrix(d["embedding"], (A.dim, R.dim), "embedding"), check=self.check)
        return Cat1Alg(s, t, e, name=d.get("name"), check=self.check if check is None else check)

    def any(self, d, check=None):
        self._need(d, "type")
        kind = d["type"]
        if kind == "xmod":
            return self.xmod(d, check)
        if kind == "cat1":
            return self.cat1(d, check)
        if kind == "hom":
            return self.hom(d)
        if kind == "algebra":
            return self.algebra({k: v for k, v in d.items() if k != "type"})
        raise JSONFormatError(f"unknown object type {kind!r}")


def loads(text: str, check: bool = True):
    """Parse a JSON document produced by :func:`dumps`.

    Malformed JSON or missing keys raise :class:`JSONFormatError`; unknown
    group ids raise :class:`~xalg.groups.UnknownGroupError`.  With
    ``check=False`` crossed-module and cat1 axioms are not enforced, so
    invalid objects can be loaded and inspected.
    """
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise JSONFormatError(f"invalid JSON: {exc}") from exc
    return Loader(check=True).any(d, check=check)


__all__ = [
    "JSONFormatError",
    "Loader",
    "UnknownGroupError",
    "algebra_ref",
    "dumps",
    "loads",
    "to_json",
]
