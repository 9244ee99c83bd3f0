"""Bifiltered chain complexes over GF(2) with a U-action.

A complex is stored through one representative per U-orbit.  Each generator
records the Alexander grading (the j-coordinate of its i = 0 translate) and
its Maslov grading; an arrow (source, target, upower) means the differential
sends source to U^upower * target, whose translate sits at filtration
(-upower, alexander - upower).  Since U drops the Maslov grading by two and
the differential by one, every arrow must satisfy

    target.maslov - 2 * upower == source.maslov - 1,

so the upower between any two generators is pinned by their gradings.
Arrow sets are GF(2): an arrow either exists or it does not, and all
operations toggle by symmetric difference.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations

from . import gf2
from .errors import IllegalBasisChange, InadmissiblePlan
from .staircase import Staircase, vertices


@dataclass(frozen=True, order=True)
class Generator:
    name: str
    alexander: int
    maslov: int


@dataclass(frozen=True, order=True)
class Arrow:
    source: str
    target: str
    upower: int


@dataclass(frozen=True)
class BasisChange:
    """Replace y by y' = y + U^c x, with c forced by the Maslov gradings."""

    x: str
    y: str


class FilteredComplex:
    """Immutable complex; operations return new values."""

    __slots__ = ("generators", "arrows", "_by_name", "_out", "_in")

    def __init__(self, generators, arrows):
        gens = tuple(generators)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "arrows", frozenset(arrows))
        object.__setattr__(self, "_by_name", {g.name: g for g in gens})
        out: dict[str, list[Arrow]] = {g.name: [] for g in gens}
        inc: dict[str, list[Arrow]] = {g.name: [] for g in gens}
        for a in sorted(self.arrows):
            if a.source in out:
                out[a.source].append(a)
            if a.target in inc:
                inc[a.target].append(a)
        object.__setattr__(self, "_out", out)
        object.__setattr__(self, "_in", inc)

    def __setattr__(self, *_):
        raise AttributeError("FilteredComplex is immutable")

    def __len__(self) -> int:
        return len(self.generators)

    def generator(self, name: str) -> Generator:
        return self._by_name[name]

    def names(self) -> list[str]:
        return [g.name for g in self.generators]

    def arrows_from(self, name: str) -> list[Arrow]:
        return list(self._out[name])

    def arrows_into(self, name: str) -> list[Arrow]:
        return list(self._in[name])

    def with_arrows(self, arrows) -> "FilteredComplex":
        return FilteredComplex(self.generators, arrows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FilteredComplex):
            return NotImplemented
        return self.generators == other.generators and self.arrows == other.arrows

    def __hash__(self) -> int:
        return hash((self.generators, self.arrows))

    def __repr__(self) -> str:
        return f"<FilteredComplex {len(self.generators)} generators, {len(self.arrows)} arrows>"


def validate(complex: FilteredComplex) -> str | None:
    """None when every invariant holds, else a report naming the first failure."""
    names = [g.name for g in complex.generators]
    dupes = [n for n, k in Counter(names).items() if k > 1]
    if dupes:
        return f"duplicate-name: generator names {sorted(dupes)} repeat"
    known = set(names)
    for a in sorted(complex.arrows):
        if a.source not in known or a.target not in known:
            return f"unknown-generator: arrow {a.source}->{a.target} has a loose end"
    for a in sorted(complex.arrows):
        src = complex.generator(a.source)
        tgt = complex.generator(a.target)
        if tgt.maslov - 2 * a.upower != src.maslov - 1:
            return (
                f"maslov: arrow {a.source}->{a.target} (upower {a.upower}) "
                f"does not drop the grading by one"
            )
        if a.upower < 0 or tgt.alexander - a.upower > src.alexander:
            return (
                f"filtration: arrow {a.source}->{a.target} (upower {a.upower}) "
                f"raises a filtration level"
            )
    for g in complex.generators:
        second = Counter()
        for a in complex._out[g.name]:
            for b in complex._out[a.target]:
                second[(b.target, a.upower + b.upower)] += 1
        odd = sorted(k for k, v in second.items() if v % 2)
        if odd:
            return f"d-squared: d²({g.name}) contains {odd}"
    return None


def from_staircase(stair: Staircase) -> FilteredComplex:
    """One generator per vertex; grading-1 generators map to both neighbours.

    Horizontal arrows absorb their i-drop into the U-power, so a leftward
    step of length L becomes an arrow with upower L between representatives.
    """
    vs = vertices(stair)
    gens = [
        Generator(f"s{k}", v.j - v.i, v.gr - 2 * v.i) for k, v in enumerate(vs)
    ]
    arrows = []
    for k in range(1, len(vs), 2):
        arrows.append(Arrow(f"s{k}", f"s{k - 1}", stair.steps[k - 1]))
        arrows.append(Arrow(f"s{k}", f"s{k + 1}", 0))
    return FilteredComplex(gens, arrows)


def tensor(c1: FilteredComplex, c2: FilteredComplex) -> FilteredComplex:
    """Tensor product over GF(2)[U, U^-1], Leibniz differential."""
    gens = [
        Generator(f"{g.name}*{h.name}", g.alexander + h.alexander, g.maslov + h.maslov)
        for g in c1.generators
        for h in c2.generators
    ]
    arrows = []
    for a in sorted(c1.arrows):
        for h in c2.generators:
            arrows.append(Arrow(f"{a.source}*{h.name}", f"{a.target}*{h.name}", a.upower))
    for g in c1.generators:
        for a in sorted(c2.arrows):
            arrows.append(Arrow(f"{g.name}*{a.source}", f"{g.name}*{a.target}", a.upower))
    return FilteredComplex(gens, arrows)


def _shift_of(complex: FilteredComplex, move: BasisChange) -> int:
    """U-power that makes x's translate share y's grading; raises if illegal."""
    if move.x == move.y or move.x not in complex._by_name or move.y not in complex._by_name:
        raise IllegalBasisChange(f"bad basis change {move.x} into {move.y}")
    gx = complex.generator(move.x)
    gy = complex.generator(move.y)
    if (gx.maslov - gy.maslov) % 2:
        raise IllegalBasisChange(
            f"{move.x} and {move.y} have different grading parity"
        )
    shift = (gx.maslov - gy.maslov) // 2
    if shift < 0 or gx.alexander - shift > gy.alexander:
        raise IllegalBasisChange(
            f"U^{shift} {move.x} does not sit below {move.y} in the filtration"
        )
    return shift


def basis_change(complex: FilteredComplex, move: BasisChange) -> FilteredComplex:
    """Apply y' = y + U^shift x.

    Arrows into y gain a copy landing on x; arrows out of x gain a copy
    leaving y.  Coinciding arrows cancel mod 2.
    """
    shift = _shift_of(complex, move)
    arrows = set(complex.arrows)
    for a in complex.arrows_into(move.y):
        arrows ^= {Arrow(a.source, move.x, a.upower + shift)}
    for a in complex.arrows_from(move.x):
        arrows ^= {Arrow(move.y, a.target, a.upower + shift)}
    return complex.with_arrows(arrows)


def _legal_upower(complex: FilteredComplex, source: str, target: str) -> int | None:
    src = complex.generator(source)
    tgt = complex.generator(target)
    if (tgt.maslov - src.maslov + 1) % 2:
        return None
    a = (tgt.maslov - src.maslov + 1) // 2
    if a < 0 or tgt.alexander - a > src.alexander:
        return None
    return a


def remove_diagonals(complex: FilteredComplex, plan: list[list[str]]) -> FilteredComplex:
    """Strip every arrow between distinct plan subsets by basis changes.

    The plan must partition the generators, and cross-subset arrows may only
    run from later subsets toward earlier ones.  Subsets are processed back
    to front; for each ordered pair the cross arrows are cleared by solving
    for a set of basis changes whose combined toggles cancel them.  Toggles
    aimed at even-earlier subsets are deferred to their own pass.
    """
    position: dict[str, int] = {}
    for idx, subset in enumerate(plan):
        for name in subset:
            if name in position:
                raise InadmissiblePlan(f"generator {name} appears twice in the plan")
            position[name] = idx
    if set(position) != {g.name for g in complex.generators}:
        raise InadmissiblePlan("plan does not partition the generators")
    for a in sorted(complex.arrows):
        if position[a.source] < position[a.target]:
            raise InadmissiblePlan(
                f"arrow {a.source}->{a.target} runs from subset "
                f"{position[a.source]} to later subset {position[a.target]}"
            )

    current = complex
    for hi in range(len(plan) - 1, 0, -1):
        for lo in range(hi - 1, -1, -1):
            current = _clear_pair(current, plan[hi], plan[lo], hi, lo)

    stray = [a for a in sorted(current.arrows) if position[a.source] != position[a.target]]
    if stray:
        raise InadmissiblePlan(f"cross arrows survived elimination: {stray}")
    return current


def _clear_pair(
    complex: FilteredComplex,
    hi_subset: list[str],
    lo_subset: list[str],
    hi: int,
    lo: int,
) -> FilteredComplex:
    hi_set, lo_set = set(hi_subset), set(lo_subset)
    slots = [
        (g, t)
        for g in sorted(hi_set)
        for t in sorted(lo_set)
        if _legal_upower(complex, g, t) is not None
    ]
    if not slots:
        return complex
    slot_index = {pair: k for k, pair in enumerate(slots)}

    target = 0
    for g in sorted(hi_set):
        for a in complex._out[g]:
            if a.target in lo_set:
                target |= 1 << slot_index[(g, a.target)]
    if target == 0:
        return complex

    moves: list[BasisChange] = []
    columns: list[int] = []
    for y in sorted(hi_set):
        for x in sorted(lo_set):
            move = BasisChange(x=x, y=y)
            try:
                _shift_of(complex, move)
            except IllegalBasisChange:
                continue
            flips = 0
            for a in complex._in[y]:
                if a.source in hi_set:
                    flips ^= 1 << slot_index[(a.source, x)]
            for a in complex._out[x]:
                if a.target in lo_set:
                    flips ^= 1 << slot_index[(y, a.target)]
            if flips:
                moves.append(move)
                columns.append(flips)

    chosen = gf2.solve_masks(columns, target)
    if chosen is None:
        raise InadmissiblePlan(
            f"no basis-change sequence clears arrows from subset {hi} to subset {lo}"
        )
    for k, move in enumerate(moves):
        if (chosen >> k) & 1:
            complex = basis_change(complex, move)
    return complex


def split_summands(complex: FilteredComplex) -> list[FilteredComplex]:
    """Connected components of the arrow graph, in first-generator order."""
    neighbours: dict[str, set[str]] = {g.name: set() for g in complex.generators}
    for a in complex.arrows:
        neighbours[a.source].add(a.target)
        neighbours[a.target].add(a.source)
    seen: set[str] = set()
    components: list[FilteredComplex] = []
    for g in complex.generators:
        if g.name in seen:
            continue
        stack, block = [g.name], set()
        while stack:
            name = stack.pop()
            if name in block:
                continue
            block.add(name)
            stack.extend(sorted(neighbours[name] - block))
        seen |= block
        gens = [x for x in complex.generators if x.name in block]
        arrows = [a for a in sorted(complex.arrows) if a.source in block]
        components.append(FilteredComplex(gens, arrows))
    return components


def disjoint_union(components: list[FilteredComplex]) -> FilteredComplex:
    gens: list[Generator] = []
    arrows: list[Arrow] = []
    for c in components:
        gens.extend(c.generators)
        arrows.extend(sorted(c.arrows))
    if len({g.name for g in gens}) != len(gens):
        raise ValueError("disjoint union requires distinct generator names")
    return FilteredComplex(gens, arrows)


def isomorphic_up_to_shift(c1: FilteredComplex, c2: FilteredComplex) -> bool:
    """Bijection matching arrows exactly and gradings up to constant offsets."""
    if len(c1.generators) != len(c2.generators) or len(c1.arrows) != len(c2.arrows):
        return False
    if len(c1.generators) > 8:
        raise ValueError("isomorphism search is limited to 8 generators")
    if not c1.generators:
        return True
    base = c1.generators
    for image in permutations(c2.generators):
        da = image[0].alexander - base[0].alexander
        dm = image[0].maslov - base[0].maslov
        if any(
            h.alexander - g.alexander != da or h.maslov - g.maslov != dm
            for g, h in zip(base, image)
        ):
            continue
        rename = {g.name: h.name for g, h in zip(base, image)}
        mapped = {Arrow(rename[a.source], rename[a.target], a.upower) for a in c1.arrows}
        if mapped == c2.arrows:
            return True
    return False


def to_json_dict(complex: FilteredComplex) -> dict:
    return {
        "generators": [
            {"name": g.name, "alexander": g.alexander, "maslov": g.maslov}
            for g in complex.generators
        ],
        "arrows": [
            {"from": a.source, "to": a.target, "upower": a.upower}
            for a in sorted(complex.arrows)
        ],
    }


def complex_from_json_dict(data: dict) -> FilteredComplex:
    try:
        gens = [
            Generator(str(g["name"]), int(g["alexander"]), int(g["maslov"]))
            for g in data["generators"]
        ]
        arrows = [
            Arrow(str(a["from"]), str(a["to"]), int(a["upower"]))
            for a in data["arrows"]
        ]
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed complex document: {exc}") from exc
    if len(arrows) != len(set(arrows)):
        raise ValueError("malformed complex document: duplicate arrows")
    return FilteredComplex(gens, arrows)
