"""Kripke frames and models over finite lattices, and the meet-over-
successors box semantics.

The value of ``[]f`` at a world is the greatest lower bound of the values of
``f`` at the world's successors, so a world with no successors gives every
boxed formula the top value.  A degenerate "local" box mode (``[]f`` is just
``f`` at the same world) is also provided for probing which properties force
the meet semantics.

``evaluate`` is the reference implementation: a memoized structural
recursion that touches only worlds reachable within the modal depth of the
formula.  ``frame_valid`` quantifies over every valuation of the formula's
variables on a frame; it evaluates all valuations at once on numpy arrays
but reports the counterexample that comes first in canonical enumeration
order (worlds in listed order, variables sorted, elements in index order,
last slot fastest) and re-certifies it with ``evaluate``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Mapping

import numpy as np

from .errors import BoundTooLarge, InvalidInput, MissingOperation, UnboundVariable
from .formula import And, Formula, Imp, Not, Or, Var, render, variables
from .lattice import ImplicationTable, Lattice, Matrix

MAX_LATTICE_SIZE = 12
MAX_WORLDS = 4
MAX_VARIABLES = 3
MAX_VALUATION_SPACE = 1 << 24


class BoxMode(enum.Enum):
    NORMAL_MEET = "normal"
    LOCAL = "local"


@dataclass(frozen=True)
class Frame:
    worlds: tuple[str, ...]
    rel: frozenset[tuple[int, int]]

    def __post_init__(self):
        if len(set(self.worlds)) != len(self.worlds):
            raise InvalidInput("world names must be distinct")
        n = len(self.worlds)
        for i, j in self.rel:
            if not (0 <= i < n and 0 <= j < n):
                raise InvalidInput(f"relation pair ({i}, {j}) out of range")

    @classmethod
    def from_names(cls, worlds: Iterable[str], pairs: Iterable[tuple[str, str]]) -> "Frame":
        worlds = tuple(worlds)
        index = {w: i for i, w in enumerate(worlds)}
        rel = set()
        for a, b in pairs:
            if a not in index or b not in index:
                raise InvalidInput(f"relation pair ({a!r}, {b!r}) references an unknown world")
            rel.add((index[a], index[b]))
        return cls(worlds, frozenset(rel))

    def successors(self, w: int) -> tuple[int, ...]:
        return tuple(sorted(j for i, j in self.rel if i == w))

    def rel_name_pairs(self) -> list[list[str]]:
        return [[self.worlds[i], self.worlds[j]] for i, j in sorted(self.rel)]


@dataclass(frozen=True)
class KripkeModel:
    frame: Frame
    lattice: Lattice
    valuation: Mapping[tuple[int, str], int]

    def __post_init__(self):
        n_worlds = len(self.frame.worlds)
        for (w, _), e in self.valuation.items():
            if not (0 <= w < n_worlds):
                raise InvalidInput(f"valuation world index {w} out of range")
            if not (0 <= e < self.lattice.n):
                raise InvalidInput(f"valuation element index {e} out of range")

    @classmethod
    def from_names(
        cls,
        frame: Frame,
        lattice: Lattice,
        valuation: Mapping[str, Mapping[str, str]],
    ) -> "KripkeModel":
        index = {w: i for i, w in enumerate(frame.worlds)}
        flat = {}
        for world, vals in valuation.items():
            if world not in index:
                raise InvalidInput(f"valuation references unknown world {world!r}")
            for var, element in vals.items():
                flat[(index[world], var)] = lattice.index(element)
        return cls(frame, lattice, flat)

    def to_dict(self) -> dict:
        per_world: dict[str, dict[str, str]] = {}
        for (w, var), e in sorted(self.valuation.items()):
            per_world.setdefault(self.frame.worlds[w], {})[var] = self.lattice.elements[e]
        return {
            "lattice": self.lattice.to_dict(),
            "worlds": list(self.frame.worlds),
            "rel": self.frame.rel_name_pairs(),
            "valuation": per_world,
        }


def evaluate(
    model: KripkeModel,
    world: int,
    f: Formula,
    mode: BoxMode = BoxMode.NORMAL_MEET,
    imp: ImplicationTable | None = None,
) -> int:
    """Value of f at a world; structural recursion with memoization."""
    lat = model.lattice
    imp_table = imp if imp is not None else lat.imp
    memo: dict[tuple[int, Formula], int] = {}

    def go(w: int, g: Formula) -> int:
        key = (w, g)
        cached = memo.get(key)
        if cached is not None:
            return cached
        if isinstance(g, Var):
            try:
                value = model.valuation[(w, g.name)]
            except KeyError:
                raise UnboundVariable(model.frame.worlds[w], g.name) from None
        elif isinstance(g, Not):
            value = lat.negate(go(w, g.child))
        elif isinstance(g, And):
            value = lat.meet_table[go(w, g.left)][go(w, g.right)]
        elif isinstance(g, Or):
            value = lat.join_table[go(w, g.left)][go(w, g.right)]
        elif isinstance(g, Imp):
            if imp_table is None:
                raise MissingOperation("imp")
            value = imp_table.table[go(w, g.left)][go(w, g.right)]
        elif mode is BoxMode.LOCAL:
            value = go(w, g.child)
        else:
            value = lat.top
            for w2 in model.frame.successors(w):
                value = lat.meet_table[value][go(w2, g.child)]
        memo[key] = value
        return value

    return go(world, f)


def world_satisfies(
    matrix: Matrix,
    model: KripkeModel,
    world: int,
    f: Formula,
    mode: BoxMode = BoxMode.NORMAL_MEET,
    imp: ImplicationTable | None = None,
) -> bool:
    _check_same_lattice(matrix, model)
    return evaluate(model, world, f, mode, imp) in matrix.designated


def model_satisfies(
    matrix: Matrix,
    model: KripkeModel,
    f: Formula,
    mode: BoxMode = BoxMode.NORMAL_MEET,
    imp: ImplicationTable | None = None,
) -> tuple[bool, int | None]:
    """Whether every world satisfies f; reports the first failing world."""
    _check_same_lattice(matrix, model)
    for w in range(len(model.frame.worlds)):
        if evaluate(model, w, f, mode, imp) not in matrix.designated:
            return False, w
    return True, None


def _check_same_lattice(matrix: Matrix, model: KripkeModel) -> None:
    if matrix.lattice.elements != model.lattice.elements or matrix.lattice.leq != model.lattice.leq:
        raise InvalidInput("model and matrix use different lattices")


@dataclass(frozen=True)
class CounterexampleReport:
    """A concrete model, world and value witnessing failure of a validity.

    Reports are self-certifying: ``recheck`` re-runs the reference evaluator
    on the report's own data and confirms the non-designated value.
    """

    matrix: Matrix
    model: KripkeModel
    formula: Formula
    world: int
    value: int
    box_mode: BoxMode

    def recheck(self) -> bool:
        value = evaluate(self.model, self.world, self.formula, self.box_mode)
        return value == self.value and value not in self.matrix.designated

    def to_dict(self) -> dict:
        d = self.model.to_dict()
        d["lattice"] = self.matrix.to_dict()
        d["formula"] = render(self.formula)
        d["world"] = self.model.frame.worlds[self.world]
        d["value"] = self.matrix.lattice.elements[self.value]
        d["designated"] = self.matrix.designated_names()
        d["box"] = self.box_mode.value
        return d


def _guard_valuation_space(n: int, n_worlds: int, n_vars: int, unsafe: bool) -> None:
    if unsafe:
        return
    if n > MAX_LATTICE_SIZE:
        raise BoundTooLarge(f"lattice size {n} exceeds the guard ({MAX_LATTICE_SIZE})")
    if n_worlds > MAX_WORLDS:
        raise BoundTooLarge(f"{n_worlds} worlds exceed the guard ({MAX_WORLDS})")
    if n_vars > MAX_VARIABLES:
        raise BoundTooLarge(f"{n_vars} variables exceed the guard ({MAX_VARIABLES})")
    if n ** (n_worlds * n_vars) > MAX_VALUATION_SPACE:
        raise BoundTooLarge(
            f"{n}^{n_worlds * n_vars} valuations exceed the guard; "
            "pass unsafe_bounds=True to override"
        )


def frame_valid(
    matrix: Matrix,
    frame: Frame,
    f: Formula,
    mode: BoxMode = BoxMode.NORMAL_MEET,
    var_domain: Iterable[str] | None = None,
    *,
    unsafe_bounds: bool = False,
) -> CounterexampleReport | None:
    """Check f on every valuation of the frame; None means frame-valid.

    On failure returns the canonically first counterexample.  Values are
    computed for all valuations at once: each (world, variable) slot is one
    array axis, and the value of a subformula at a world spans only the axes
    it actually depends on, so the arrays stay small on sparse frames.
    """
    lat = matrix.lattice
    names = sorted(variables(f))
    if var_domain is not None:
        domain = sorted(set(var_domain))
        if not set(names) <= set(domain):
            raise InvalidInput("var_domain must cover the variables of the formula")
        names = domain
    n = lat.n
    n_worlds = len(frame.worlds)
    _guard_valuation_space(n, n_worlds, len(names), unsafe_bounds)

    slots = [(w, x) for w in range(n_worlds) for x in names]
    axis_of = {slot: k for k, slot in enumerate(slots)}
    ndim = len(slots)
    dtype = np.int8 if n * n <= 127 else np.int16

    meet_flat = np.array(lat.meet_table, dtype=dtype).ravel()
    join_flat = np.array(lat.join_table, dtype=dtype).ravel()
    neg_arr = np.array(lat.neg, dtype=dtype) if lat.neg is not None else None
    imp_flat = np.array(lat.imp.table, dtype=dtype).ravel() if lat.imp is not None else None
    designated = np.zeros(n, dtype=bool)
    designated[sorted(matrix.designated)] = True
    successors = [frame.successors(w) for w in range(n_worlds)]
    top_arr = np.full((1,) * ndim, lat.top, dtype=dtype)

    cache: dict[tuple[int, Formula], np.ndarray] = {}

    def val(w: int, g: Formula) -> np.ndarray:
        key = (w, g)
        cached = cache.get(key)
        if cached is not None:
            return cached
        if isinstance(g, Var):
            shape = [1] * ndim
            shape[axis_of[(w, g.name)]] = n
            out = np.arange(n, dtype=dtype).reshape(shape)
        elif isinstance(g, Not):
            if neg_arr is None:
                raise MissingOperation("neg")
            out = neg_arr[val(w, g.child)]
        elif isinstance(g, And):
            out = meet_flat.take(val(w, g.left).astype(np.int32) * n + val(w, g.right))
        elif isinstance(g, Or):
            out = join_flat.take(val(w, g.left).astype(np.int32) * n + val(w, g.right))
        elif isinstance(g, Imp):
            if imp_flat is None:
                raise MissingOperation("imp")
            out = imp_flat.take(val(w, g.left).astype(np.int32) * n + val(w, g.right))
        elif mode is BoxMode.LOCAL:
            out = val(w, g.child)
        else:
            out = top_arr
            for w2 in successors[w]:
                out = meet_flat.take(out.astype(np.int32) * n + val(w2, g.child))
        cache[key] = out
        return out

    strides = [n ** (ndim - 1 - k) for k in range(ndim)]
    best: tuple[int, int] | None = None
    for w in range(n_worlds):
        fails = ~designated[val(w, f)]
        if not fails.any():
            continue
        first = int(np.argmax(fails.ravel()))
        digits = np.unravel_index(first, fails.shape)
        flat_full = sum(int(d) * strides[k] for k, d in enumerate(digits))
        if best is None or flat_full < best[0]:
            best = (flat_full, w)
    if best is None:
        return None

    flat_full, _ = best
    assignment = {}
    for k, slot in enumerate(slots):
        assignment[slot] = (flat_full // strides[k]) % n
    model = KripkeModel(frame, lat, assignment)
    for w in range(n_worlds):
        value = evaluate(model, w, f, mode)
        if value not in matrix.designated:
            return CounterexampleReport(matrix, model, f, w, value, mode)
    raise AssertionError("vectorized scan found a failure the evaluator cannot reproduce")

