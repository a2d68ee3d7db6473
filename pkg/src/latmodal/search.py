"""Frame enumeration, counterexample search, regularity checking, and the
canonical defect-witness model constructions.

Frames are enumerated up to graph isomorphism by keeping only the
lexicographically minimal relation bitmask under world permutations, in
ascending world count and ascending mask, so every search is reproducible
without seeds.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

from .errors import BoundTooLarge, MissingOperation, WitnessNotApplicable
from .formula import Box, Formula, Var, parse
from .kripke import (
    BoxMode,
    CounterexampleReport,
    Frame,
    KripkeModel,
    evaluate,
    frame_valid,
    world_satisfies,
)
from .lattice import Matrix, big_meet, check_designated

AXIOM_K = parse("[](p -> q) -> ([]p -> []q)")
BOX_DISJUNCTION_DIST = parse("([]p | []q) -> [](p | q)")

MAX_FRAME_WORLDS = 4

WITNESS_KINDS = (
    "nonfilter",
    "nonimplicative",
    "nonlinear_k",
    "nonimplicative_k_material",
)


def _frame_mask_key(mask: int, n: int, perms) -> int:
    best = mask
    for perm in perms:
        relabeled = 0
        m = mask
        while m:
            bit = (m & -m).bit_length() - 1
            relabeled |= 1 << (perm[bit // n] * n + perm[bit % n])
            m &= m - 1
        if relabeled < best:
            best = relabeled
    return best


def canonical_frame_key(n_worlds: int, rel: frozenset[tuple[int, int]]) -> int:
    """Canonical bitmask of a relation under world permutations."""
    mask = 0
    for i, j in rel:
        mask |= 1 << (i * n_worlds + j)
    perms = list(itertools.permutations(range(n_worlds)))
    return _frame_mask_key(mask, n_worlds, perms)


def enumerate_frames(max_worlds: int, *, unsafe_bounds: bool = False) -> Iterator[Frame]:
    """All frames with 1..max_worlds worlds up to isomorphism."""
    if max_worlds < 1:
        raise BoundTooLarge("max_worlds must be at least 1")
    if max_worlds > MAX_FRAME_WORLDS and not unsafe_bounds:
        raise BoundTooLarge(f"frame enumeration is guarded to {MAX_FRAME_WORLDS} worlds")
    for n in range(1, max_worlds + 1):
        worlds = tuple(f"w{i}" for i in range(n))
        perms = list(itertools.permutations(range(n)))[1:]
        for mask in range(1 << (n * n)):
            if perms and _frame_mask_key(mask, n, perms) < mask:
                continue
            rel = frozenset(
                (bit // n, bit % n) for bit in range(n * n) if mask >> bit & 1
            )
            yield Frame(worlds, rel)


def find_frame_counterexample(
    matrix: Matrix,
    f: Formula,
    max_worlds: int,
    mode: BoxMode = BoxMode.NORMAL_MEET,
    *,
    unsafe_bounds: bool = False,
) -> CounterexampleReport | None:
    """First counterexample to frame validity over all frames within the
    world bound, or None."""
    for frame in enumerate_frames(max_worlds, unsafe_bounds=unsafe_bounds):
        report = frame_valid(matrix, frame, f, mode, unsafe_bounds=unsafe_bounds)
        if report is not None:
            return report
    return None


# ---------------------------------------------------------------------------
# Regularity


@dataclass(frozen=True)
class RegularityWitness:
    model: KripkeModel
    world: int
    box_value: int
    direction: str  # "box_holds_but_successor_fails" | "successors_hold_but_box_fails"


@dataclass(frozen=True)
class RegularityResult:
    """Semantic and structural verdicts on "necessity means true in all
    accessible worlds"."""

    regular: bool
    is_filter: bool
    meet_in_designated: bool
    witness: RegularityWitness | None

    @property
    def structural_regular(self) -> bool:
        return self.is_filter and self.meet_in_designated


def check_regularity(
    matrix: Matrix, max_worlds: int = 2, *, unsafe_bounds: bool = False
) -> RegularityResult:
    """Scan all single-variable models within the world bound for a world
    where the box verdict and the all-successors verdict disagree.

    The structural side (designated set closed under meet, with its big meet
    designated) is computed independently; on finite lattices the two
    verdicts must coincide.
    """
    lat = matrix.lattice
    props = check_designated(matrix)
    meet_in = big_meet(lat, matrix.designated) in matrix.designated

    p = Var("p")
    box_p = Box(p)
    witness = None
    for frame in enumerate_frames(max_worlds, unsafe_bounds=unsafe_bounds):
        n_worlds = len(frame.worlds)
        slots = [(w, "p") for w in range(n_worlds)]
        for combo in itertools.product(range(lat.n), repeat=n_worlds):
            model = KripkeModel(frame, lat, dict(zip(slots, combo)))
            for w in range(n_worlds):
                box_ok = world_satisfies(matrix, model, w, box_p)
                naw = all(
                    world_satisfies(matrix, model, w2, p) for w2 in frame.successors(w)
                )
                if box_ok != naw:
                    witness = RegularityWitness(
                        model=model,
                        world=w,
                        box_value=evaluate(model, w, box_p),
                        direction=(
                            "box_holds_but_successor_fails"
                            if box_ok
                            else "successors_hold_but_box_fails"
                        ),
                    )
                    break
            if witness:
                break
        if witness:
            break

    return RegularityResult(
        regular=witness is None,
        is_filter=props.is_filter,
        meet_in_designated=meet_in,
        witness=witness,
    )


# ---------------------------------------------------------------------------
# Canonical defect witnesses


def _first_filter_violation(matrix: Matrix) -> tuple[int, int] | None:
    props = check_designated(matrix)
    return props.filter_witness


def _first_implicative_violation(matrix: Matrix) -> tuple[int, int] | None:
    if matrix.lattice.imp is None:
        raise MissingOperation("imp")
    props = check_designated(matrix)
    return props.implicative_witness


def _first_linearity_violation(matrix: Matrix) -> tuple[int, int] | None:
    props = check_designated(matrix)
    return props.linear_witness


def construct_witness(
    kind: str, matrix: Matrix, pair: tuple[int, int] | None = None
) -> KripkeModel:
    """Build the fixed two- or three-world model that turns a structural
    defect of the matrix into a falsified validity.

    kind "nonfilter":     pair (x, y) designated with x.y not designated;
                          yields w0 R w0, w0 R w1 where every successor of w0
                          satisfies p but w0 does not satisfy []p.
    kind "nonimplicative": pair a <= b with (a imp b) not designated; yields
                          a 3-world model falsifying ([]p | []q) -> [](p|q).
    kind "nonlinear_k":   pair (a, b) incomparable with a not designated;
                          yields a 3-world model falsifying box-K under a
                          deductive implication.
    kind "nonimplicative_k_material": pair a <= b with -a + b not
                          designated; yields a 3-world model falsifying
                          box-K under material implication.

    The pair defaults to the first witness reported by the property checks;
    WitnessNotApplicable is raised when the matrix lacks the defect or the
    built model fails to falsify the target.
    """
    lat = matrix.lattice
    if kind == "nonfilter":
        pair = pair or _first_filter_violation(matrix)
        if pair is None:
            raise WitnessNotApplicable("designated set is a filter")
        x, y = pair
        frame = Frame(("w0", "w1"), frozenset(((0, 0), (0, 1))))
        model = KripkeModel(frame, lat, {(0, "p"): x, (1, "p"): y})
        succ_ok = all(world_satisfies(matrix, model, w2, Var("p")) for w2 in (0, 1))
        box_ok = world_satisfies(matrix, model, 0, Box(Var("p")))
        if not (succ_ok and not box_ok):
            raise WitnessNotApplicable("pair does not violate the filter property")
        return model

    frame = Frame(("w0", "w1", "w2"), frozenset(((0, 1), (0, 2))))
    if kind == "nonimplicative":
        pair = pair or _first_implicative_violation(matrix)
        if pair is None:
            raise WitnessNotApplicable("designated set is implicative")
        a, b = pair
        model = KripkeModel(
            frame, lat, {(1, "p"): a, (1, "q"): b, (2, "p"): b, (2, "q"): a}
        )
        target = BOX_DISJUNCTION_DIST
    elif kind == "nonlinear_k":
        pair = pair or _first_linearity_violation(matrix)
        if pair is None:
            raise WitnessNotApplicable("lattice is linear outside the designated set")
        a, b = pair
        model = KripkeModel(
            frame, lat, {(1, "p"): a, (1, "q"): b, (2, "p"): a, (2, "q"): a}
        )
        target = AXIOM_K
    elif kind == "nonimplicative_k_material":
        if lat.neg is None:
            raise MissingOperation("neg")
        pair = pair or _first_implicative_violation(matrix)
        if pair is None:
            raise WitnessNotApplicable("designated set is implicative")
        a, b = pair
        model = KripkeModel(
            frame,
            lat,
            {(1, "p"): lat.neg[a], (1, "q"): a, (2, "p"): lat.neg[b], (2, "q"): a},
        )
        target = AXIOM_K
    else:
        raise WitnessNotApplicable(f"unknown witness kind {kind!r}")

    if world_satisfies(matrix, model, 0, target):
        raise WitnessNotApplicable(
            f"constructed model does not falsify the target for kind {kind!r}"
        )
    return model
